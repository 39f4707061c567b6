import pytest

from azwordvec.lib.cuebase import CUEWORDS_REPORT_NAME, STARTER_LEXICON, cueword_baseline_report, cueword_classify
from azwordvec.lib.lexicon import CategoryLexicon
from azwordvec.models.enums.category import Category
from azwordvec.models.sentence import LabeledSentence
from azwordvec.view_models.evaluation import FoldConfig

from tests.helpers.util import sentence

LEXICON = CategoryLexicon.from_phrases(
    {
        Category.AIM: ["we present", "in this paper we"],
        Category.CTR: ["in contrast", "this paper"],
        Category.BAS: ["following"],
    }
)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("In this paper we describe zoning.", Category.AIM),
        ("Following their method, we count.", Category.BAS),
        ("In contrast, we do not.", Category.CTR),
        ("The results are encouraging.", Category.OWN),
    ],
)
def test_cueword_classify(text, expected):
    assert cueword_classify(sentence(text), LEXICON) == expected


def test_longest_match_wins():
    # "this paper" (CTR, 2 tokens) is contained in "in this paper we" (AIM, 4 tokens).
    assert cueword_classify(sentence("in this paper we show"), LEXICON) == Category.AIM


def test_equal_lengths_go_to_the_canonical_first_category():
    lexicon = CategoryLexicon.from_phrases({Category.BAS: ["following"], Category.CTR: ["however"]})
    assert cueword_classify(sentence("however, following them"), lexicon) == Category.CTR


def test_unmatched_sentences_get_the_default():
    assert cueword_classify(sentence("nothing to see"), LEXICON, default=Category.OTH) == Category.OTH


def test_starter_lexicon():
    assert cueword_classify(sentence("We present a new model.")) == Category.AIM


def test_baseline_report():
    texts = {
        Category.AIM: "in this paper we present zoning",
        Category.CTR: "in contrast their method fails",
        Category.BAS: "following earlier work we count",
        Category.OWN: "the results are shown",
    }
    data = [
        LabeledSentence(sentence(text, f"{category.value}:{i}"), category)
        for i in range(6)
        for category, text in texts.items()
    ]
    report = cueword_baseline_report(data, LEXICON, FoldConfig(n_folds=3, seed=2), corpus="toy")

    assert report.name == CUEWORDS_REPORT_NAME
    assert report.method is None
    assert report.corpus == "toy"
    assert len(report.folds) == 3
    assert sum(fold.test_rows for fold in report.folds) == len(data)
    assert report.macro_f() == pytest.approx(1.0)


def test_starter_lexicon_covers_several_categories():
    assert STARTER_LEXICON.for_category(Category.AIM)
    assert STARTER_LEXICON.for_category(Category.BAS)
    assert STARTER_LEXICON.for_category(Category.OWN) == ()


def test_adding_phrases_never_lowers_recall():
    texts = [
        "in this paper we present zoning",
        "we propose a simple model",
        "our aim is to label sentences",
        "this paper describes a corpus",
        "the goal of this work is clear",
    ]
    aims = [sentence(text) for text in texts]
    additions = ["we propose", "our aim is", "this paper", "the goal of"]

    lexicon, recalls = LEXICON, []
    for phrase in [None] + additions:
        if phrase is not None:
            lexicon = lexicon.extended(Category.AIM, [phrase])
        recalls.append(sum(cueword_classify(aim, lexicon) == Category.AIM for aim in aims) / len(aims))

    assert recalls == sorted(recalls)
    assert recalls[-1] > recalls[0]
