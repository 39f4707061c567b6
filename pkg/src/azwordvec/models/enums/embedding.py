import enum


class Architecture(str, enum.Enum):
    cbow = "cbow"
    skipgram = "skipgram"


class OutputLayer(str, enum.Enum):
    hierarchical_softmax = "hs"
    negative_sampling = "neg"
    full_softmax = "full"


class ModelKind(str, enum.Enum):
    word2vec = "word2vec"
    paragraph = "pvdm"
    category_specific = "bswe"
    # Vectors loaded from the word2vec text format, with no output parameters.
    vectors = "vectors"
