import enum


class SentenceVectorMethod(str, enum.Enum):
    avgwvec = "avgwvec"
    paravec = "paravec"
    bswe = "bswe"


class TargetPolicy(str, enum.Enum):
    match_majority = "match_majority"
    multiplier = "multiplier"


class SmotePlacement(str, enum.Enum):
    within_folds = "within_folds"
    before_split = "before_split"


class FoldAveraging(str, enum.Enum):
    macro = "macro"
    pooled = "pooled"
