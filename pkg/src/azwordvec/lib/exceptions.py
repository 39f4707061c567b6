class EmptyCorpusError(ValueError):
    """Raised when a training corpus contains no in-vocabulary tokens"""

    pass


class EmptyVocabularyError(ValueError):
    """Raised when no word in a corpus reaches the minimum count"""

    pass


class OutOfVocabularyError(KeyError):
    """Raised when a query needs a word, or at least one word of a sentence, that the vocabulary does not contain"""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ModelMismatchError(ValueError):
    """Raised when an operation receives an embedding model of the wrong kind, e.g. PARAVEC with a word2vec model"""

    pass


class DimensionMismatchError(ValueError):
    """Raised when a vector does not have the dimension a model or classifier expects"""

    pass


class InsufficientClassMembersError(ValueError):
    """Raised when a class that must be oversampled or trained on has too few members"""

    pass


class DegenerateLabelsError(ValueError):
    """Raised when cueword matching labels none or all of the training sentences"""

    pass


class ConfigurationError(ValueError):
    """Raised when a valid configuration cannot be applied to the data, such as full softmax on a large vocabulary."""

    pass
