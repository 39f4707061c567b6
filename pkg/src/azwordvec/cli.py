"""
Command-line interface for the argumentative-zoning embedding pipeline.

Usage:
```
azwordvec train-embeddings corpus.txt model.npz --method avgwvec --dim 100 --min-count 40
azwordvec train-embeddings corpus.txt bas.npz --method bswe --cuewords bas_cuewords.txt --mix-alpha 0.5
azwordvec infer model.npz "Following earlier work we measure word similarity"
azwordvec vectorize model.npz az.tsv features.tsv --method avgwvec
azwordvec neighbors model.npz paper --top-k 10
azwordvec evaluate model.npz az.tsv --method avgwvec --folds 10 --json report.json --tsv report.tsv
azwordvec report report-300.json report-100.json
azwordvec distribution az.tsv
```

Training corpora hold one sentence per line. Labelled datasets hold `CATEGORY<TAB>text` records, with `+` in the
category column continuing the previous sentence. Models are `.npz` archives unless `--text-vectors` is given, in
which case the model path is read (or additionally written) in the word2vec text format.

Exit status is 0 on success, 2 when an input file, option or query word is invalid and 1 on any other error.
"""

import argparse
import logging
import sys
import time
from typing import Callable, Optional, Sequence

import pydantic

from azwordvec import __version__
from azwordvec.lib.corpus import (
    class_distribution,
    distribution_frame,
    load_labeled_corpus,
    load_training_corpus,
    tokenize,
)
from azwordvec.lib.cuebase import STARTER_LEXICON, cueword_baseline_report
from azwordvec.lib.embeddings.model import EmbeddingModel, ParagraphTable, nearest_neighbors
from azwordvec.lib.embeddings.persistence import load_model, load_word2vec_text, save_model, save_word2vec_text
from azwordvec.lib.embeddings.training import infer_paragraph_vector, train_bswe, train_pvdm, train_word2vec
from azwordvec.lib.evaluation.cross_validation import run_cv
from azwordvec.lib.evaluation.reference import COMPARISON_ROWS
from azwordvec.lib.evaluation.report import read_report_json, report_tables, write_report_json, write_report_tsv
from azwordvec.lib.exceptions import ConfigurationError, OutOfVocabularyError
from azwordvec.lib.lexicon import load_category_lexicon, load_cueword_lexicon
from azwordvec.lib.logging import LogType, log_record
from azwordvec.lib.script_environment import init_script_environment
from azwordvec.lib.sentvec import save_feature_matrix, vectorize_dataset
from azwordvec.lib.validation.exceptions import ValidationError
from azwordvec.lib.vocabulary import build_vocabulary, vocabulary_summary
from azwordvec.models.enums.category import Category
from azwordvec.models.enums.embedding import Architecture, OutputLayer
from azwordvec.models.enums.evaluation import FoldAveraging, SentenceVectorMethod, SmotePlacement
from azwordvec.models.sentence import Sentence
from azwordvec.settings import DEFAULT_SEED, DEFAULT_WORKERS
from azwordvec.view_models.classifier_config import ClassifierConfig
from azwordvec.view_models.evaluation import FoldConfig, VectorizerConfig
from azwordvec.view_models.smote_config import SmoteConfig
from azwordvec.view_models.training_config import TrainingConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID_INPUT = 2


def _load_embeddings(path: str, text_vectors: bool) -> tuple[EmbeddingModel, Optional[ParagraphTable]]:
    if text_vectors:
        return load_word2vec_text(path), None
    return load_model(path)


def _method(args: argparse.Namespace) -> SentenceVectorMethod:
    return SentenceVectorMethod(args.method)


def train_embeddings(args: argparse.Namespace) -> int:
    config = TrainingConfig(
        dim=args.dim,
        window=args.window,
        min_count=args.min_count,
        epochs=args.epochs,
        initial_learning_rate=args.learning_rate,
        architecture=Architecture(args.arch),
        output=OutputLayer(args.output),
        negative=args.negative,
        workers=args.workers,
        seed=args.seed,
        subsample=args.subsample,
    )
    corpus = list(load_training_corpus(args.corpus))
    vocabulary = build_vocabulary(corpus, config.min_count)
    summary = vocabulary_summary(vocabulary, config.dim)
    logger.info("vocabulary: %i words, %i retained tokens", summary.vocabulary_size, summary.retained_tokens)

    method = _method(args)
    paragraphs = None
    if method == SentenceVectorMethod.paravec:
        model, paragraphs = train_pvdm(corpus, vocabulary, config)
    elif method == SentenceVectorMethod.bswe:
        if not args.cuewords:
            raise ConfigurationError("--method bswe needs a --cuewords lexicon")
        lexicon = load_cueword_lexicon(args.cuewords, Category(args.cueword_category))
        model = train_bswe(corpus, vocabulary, lexicon, args.mix_alpha, config)
    else:
        model = train_word2vec(corpus, vocabulary, config)

    save_model(model, args.model, paragraphs)
    if args.text_vectors:
        save_word2vec_text(model, args.text_vectors)
    print(f"{summary.dim}\t{summary.vocabulary_size}\t{summary.retained_tokens}")
    return EXIT_OK


def infer(args: argparse.Namespace) -> int:
    model, paragraphs = load_model(args.model)
    if paragraphs is None:
        raise ConfigurationError(f"{args.model} holds no paragraph table; train it with --method paravec")
    sentence = Sentence.of(tokenize(" ".join(args.sentence)))
    vector = infer_paragraph_vector(model, paragraphs, sentence, steps=args.paravec_steps, seed=args.seed)
    print(" ".join(f"{value:.6f}" for value in vector))
    return EXIT_OK


def vectorize(args: argparse.Namespace) -> int:
    model, paragraphs = _load_embeddings(args.model, args.text_vectors)
    data = load_labeled_corpus(args.dataset)
    config = VectorizerConfig(
        method=_method(args), paravec_steps=args.paravec_steps, seed=args.seed, workers=args.workers
    )
    features = vectorize_dataset(model, data, paragraphs=paragraphs, config=config)
    save_feature_matrix(features, args.features)
    return EXIT_OK


def neighbors(args: argparse.Namespace) -> int:
    model, _ = _load_embeddings(args.model, args.text_vectors)
    for word, similarity in nearest_neighbors(model, args.word.lower(), args.top_k):
        print(f"{word}\t{similarity:.6f}")
    return EXIT_OK


def evaluate(args: argparse.Namespace) -> int:
    model, paragraphs = _load_embeddings(args.model, args.text_vectors)
    data = load_labeled_corpus(args.dataset)

    vectorizer_config = VectorizerConfig(method=_method(args), paravec_steps=args.paravec_steps, workers=args.workers)
    smote_config = None
    if not args.no_smote:
        placement = SmotePlacement.before_split if args.smote_before_split else SmotePlacement.within_folds
        smote_config = SmoteConfig(k_neighbors=args.smote_k, seed=args.seed, placement=placement)
    fold_config = FoldConfig(
        n_folds=args.folds,
        seed=args.seed,
        averaging=FoldAveraging.pooled if args.pooled else FoldAveraging.macro,
        workers=args.workers,
    )

    reports = [
        run_cv(
            data,
            model,
            vectorizer_config,
            smote_config,
            ClassifierConfig(seed=args.seed),
            fold_config,
            paragraphs=paragraphs,
            name=args.name,
            corpus=args.dataset,
        )
    ]
    if args.baseline_lexicon is not None:
        lexicon = STARTER_LEXICON if args.baseline_lexicon == "" else load_category_lexicon(args.baseline_lexicon)
        reports.append(cueword_baseline_report(data, lexicon, fold_config, corpus=args.dataset))

    if args.json:
        write_report_json(reports[0], args.json)
    if args.tsv:
        write_report_tsv(reports, args.tsv)
    print(report_tables(reports, COMPARISON_ROWS), end="")
    return EXIT_OK


def report(args: argparse.Namespace) -> int:
    reports = [read_report_json(path) for path in args.reports]
    if args.tsv:
        write_report_tsv(reports, args.tsv)
    print(report_tables(reports, () if args.no_reference else COMPARISON_ROWS), end="")
    return EXIT_OK


def distribution(args: argparse.Namespace) -> int:
    frame = distribution_frame(class_distribution(load_labeled_corpus(args.dataset)))
    print(frame.to_string(index=False, float_format=lambda value: f"{value:.2f}"))
    return EXIT_OK


def _add_training_arguments(parser: argparse.ArgumentParser) -> None:
    defaults = TrainingConfig.__fields__
    parser.add_argument("--dim", type=int, default=defaults["dim"].default)
    parser.add_argument("--window", type=int, default=defaults["window"].default)
    parser.add_argument("--min-count", type=int, default=defaults["min_count"].default)
    parser.add_argument("--epochs", type=int, default=defaults["epochs"].default)
    parser.add_argument("--learning-rate", type=float, default=defaults["initial_learning_rate"].default)
    parser.add_argument("--arch", choices=[a.value for a in Architecture], default=Architecture.cbow.value)
    parser.add_argument(
        "--output", choices=[o.value for o in OutputLayer], default=OutputLayer.hierarchical_softmax.value
    )
    parser.add_argument("--negative", type=int, default=defaults["negative"].default, help="negatives per example")
    parser.add_argument("--subsample", action="store_true", help="randomly drop frequent words while training")
    parser.add_argument("--cuewords", help="cueword lexicon for --method bswe, one phrase per line")
    parser.add_argument("--cueword-category", default=Category.BAS.value, choices=[c.value for c in Category])
    parser.add_argument("--mix-alpha", type=float, default=0.5, help="weight of the language-model loss for bswe")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="azwordvec", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="overrides AZWORDVEC_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        subparser = subparsers.add_parser(name, help=help)
        subparser.set_defaults(handler=handler)
        subparser.add_argument("--seed", type=int, default=DEFAULT_SEED)
        return subparser

    def method_argument(subparser: argparse.ArgumentParser) -> None:
        subparser.add_argument(
            "--method", choices=[m.value for m in SentenceVectorMethod], default=SentenceVectorMethod.avgwvec.value
        )

    train = command("train-embeddings", train_embeddings, "train word, paragraph or category-specific embeddings")
    train.add_argument("corpus", help="training corpus, one sentence per line")
    train.add_argument("model", help="output .npz model")
    train.add_argument("--text-vectors", help="also write the word vectors in word2vec text format")
    train.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    method_argument(train)
    _add_training_arguments(train)

    infer_parser = command("infer", infer, "infer a paragraph vector for a sentence with a PV-DM model")
    infer_parser.add_argument("model")
    infer_parser.add_argument("sentence", nargs="+")
    infer_parser.add_argument("--paravec-steps", type=int, default=50)

    vectorize_parser = command("vectorize", vectorize, "write sentence vectors of a labelled dataset as TSV")
    vectorize_parser.add_argument("model")
    vectorize_parser.add_argument("dataset")
    vectorize_parser.add_argument("features")
    vectorize_parser.add_argument("--text-vectors", action="store_true", help="the model is a word2vec text file")
    vectorize_parser.add_argument("--paravec-steps", type=int, default=50)
    vectorize_parser.add_argument("--workers", type=int, default=1)
    method_argument(vectorize_parser)

    neighbors_parser = command("neighbors", neighbors, "list the nearest words by cosine similarity")
    neighbors_parser.add_argument("model")
    neighbors_parser.add_argument("word")
    neighbors_parser.add_argument("--top-k", type=int, default=10)
    neighbors_parser.add_argument("--text-vectors", action="store_true", help="the model is a word2vec text file")

    evaluate_parser = command("evaluate", evaluate, "cross-validate a classifier on sentence vectors")
    evaluate_parser.add_argument("model")
    evaluate_parser.add_argument("dataset")
    evaluate_parser.add_argument("--text-vectors", action="store_true", help="the model is a word2vec text file")
    evaluate_parser.add_argument("--paravec-steps", type=int, default=50)
    evaluate_parser.add_argument("--folds", type=int, default=10)
    evaluate_parser.add_argument("--smote-k", type=int, default=5)
    evaluate_parser.add_argument("--smote-before-split", action="store_true", help="oversample before splitting")
    evaluate_parser.add_argument("--no-smote", action="store_true")
    evaluate_parser.add_argument("--pooled", action="store_true", help="score the pooled confusion counts")
    evaluate_parser.add_argument("--workers", type=int, default=1, help="folds evaluated concurrently")
    evaluate_parser.add_argument("--name", help="row name in the result table")
    evaluate_parser.add_argument(
        "--baseline-lexicon",
        nargs="?",
        const="",
        help="also score the cueword baseline; without a file the starter lexicon is used",
    )
    evaluate_parser.add_argument("--json", help="write the report as JSON")
    evaluate_parser.add_argument("--tsv", help="write per-category scores as TSV")
    method_argument(evaluate_parser)

    report_parser = command("report", report, "format saved JSON reports as a result table")
    report_parser.add_argument("reports", nargs="+")
    report_parser.add_argument("--tsv", help="write per-category scores as TSV")
    report_parser.add_argument("--no-reference", action="store_true", help="omit the published reference rows")

    distribution_parser = command("distribution", distribution, "count sentences per category")
    distribution_parser.add_argument("dataset")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        init_script_environment(args.log_level.upper())
    else:
        init_script_environment()

    start = time.time_ns()
    location: dict[str, int] = {}
    try:
        status = args.handler(args)

    # Problems with the user's files or options.
    except (ValidationError, ConfigurationError, OutOfVocabularyError, pydantic.ValidationError) as e:
        logger.error(f"Invalid input for {args.command}: {e}")
        if isinstance(e, ValidationError) and e.line_number is not None:
            location["line"] = e.line_number
        status = EXIT_INVALID_INPUT

    # Catch all non-system exiting exceptions.
    except Exception as e:
        logger.error(f"Encountered an exception while running {args.command}", exc_info=e)
        status = EXIT_ERROR

    # System-exiting exceptions are re-raised.
    except BaseException as e:
        raise e

    outcome = "success" if status == EXIT_OK else "failed"
    log_record(LogType.run, start, command=args.command, status=outcome, **location)
    return status


if __name__ == "__main__":
    sys.exit(main())
