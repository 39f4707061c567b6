"""
Cueword-matching baseline: label a sentence with the category whose lexicon phrase it contains, longest match first.
"""

import logging
import time
from typing import Optional, Sequence

import numpy as np

from azwordvec.lib.evaluation.cross_validation import average_scores, present_categories, run_folds, score_fold
from azwordvec.lib.evaluation.folds import stratified_folds
from azwordvec.lib.lexicon import CategoryLexicon, longest_match
from azwordvec.lib.logging import LogType, log_record
from azwordvec.models.enums.category import CATEGORY_ORDER, MAJORITY_CATEGORY, Category
from azwordvec.models.sentence import LabeledSentence, Sentence
from azwordvec.view_models.evaluation import EvaluationReport, FoldConfig, FoldResult

logger = logging.getLogger(__name__)

CUEWORDS_REPORT_NAME = "Cuewords"

# A starting point only; `--baseline-lexicon FILE` replaces it.
STARTER_LEXICON = CategoryLexicon.from_phrases(
    {
        Category.AIM: ["this paper", "we present"],
        Category.BAS: ["following", "based on"],
        Category.CTR: ["in contrast", "however"],
        Category.TXT: ["the next section", "section describes"],
    }
)


def cueword_classify(
    sentence: Sentence, lexicon: CategoryLexicon = STARTER_LEXICON, default: Category = MAJORITY_CATEGORY
) -> Category:
    """
    The category with the longest phrase contained in the sentence.

    Equal lengths go to the category that comes first in canonical order; a sentence matching nothing gets
    `default`.
    """
    best, best_length = default, 0
    for category in CATEGORY_ORDER:
        length = longest_match(sentence.tokens, lexicon.for_category(category))
        if length > best_length:
            best, best_length = category, length
    return best


def cueword_baseline_report(
    data: Sequence[LabeledSentence],
    lexicon: CategoryLexicon = STARTER_LEXICON,
    fold_config: Optional[FoldConfig] = None,
    default: Category = MAJORITY_CATEGORY,
    corpus: Optional[str] = None,
) -> EvaluationReport:
    """
    Score the cueword baseline on the same stratified folds a classifier run with `fold_config` would use.

    Nothing is trained, so each fold only predicts its test rows.
    """
    fold_config = fold_config or FoldConfig()
    labels = [record.category for record in data]
    categories = present_categories(labels)
    plan = stratified_folds(labels, fold_config.n_folds, fold_config.seed)

    def evaluate_fold(fold: int) -> FoldResult:
        start = time.time_ns()
        test = [data[i] for i in plan.test_indices(fold)]
        predicted = [cueword_classify(record.sentence, lexicon, default) for record in test]
        result = score_fold(fold, [record.category for record in test], predicted, categories)
        log_record(
            LogType.fold_result,
            start,
            config=CUEWORDS_REPORT_NAME,
            fold=fold,
            macro_f=float(np.mean([scores.f_measure for scores in result.scores.values()])),
            rows=len(test),
        )
        return result

    folds = run_folds(plan, evaluate_fold, fold_config.workers)
    return EvaluationReport(
        name=CUEWORDS_REPORT_NAME,
        corpus=corpus,
        method=None,
        dim=None,
        smote_placement=None,
        averaging=fold_config.averaging,
        categories=categories,
        folds=folds,
        averaged=average_scores(folds, categories, fold_config.averaging),
    )
