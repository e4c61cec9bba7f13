# -*- coding: utf-8 -*-

"""
The ``swe2`` command line interface.

Usage example::

    swe2 synthetic --out-dir data/
    swe2 train-embeddings --data data/dataset.tsv --kind char --out char.vec
    swe2 train-embeddings --data data/dataset.tsv --kind phoneme --out pho.vec
    swe2 train --train data/dataset.tsv --char-table char.vec --pho-table pho.vec \\
        --slex data/sentiment.tsv --hlex data/hate.txt --out model.json
    swe2 sweep --model model.json --data data/dataset.tsv --out sweep.csv
"""

import typing as T
import sys
import json
import logging
import argparse
from pathlib import Path

from ._version import __version__
from .exc import Swe2Error
from .config import PipelineConfig, get_default_seed
from .textnorm import normalize, normalize_text
from .targetword import (
    DEFAULT_TAU,
    DEFAULT_COMPOUND_ALPHA,
    SentimentLexicon,
    HateLexicon,
    find_target,
    message_rng,
)
from .phonetics import load_pron_dict, build_chunk_table, write_chunk_table
from .embeddings.table import EmbeddingKind, EmbeddingTable, load_word_vectors
from .embeddings.cbow import CbowConfig, train_cbow
from .embeddings.subword import char_corpus, phoneme_corpus
from .attack.bugs import ConfusionTable
from .attack.impl import MeanWordVectorEncoder, attack_dataset
from .model.config import ModelConfig, ABLATIONS
from .model.featurize import Providers
from .model.detector import Detector
from .harness.dataset import LabeledDataset, load_dataset, save_dataset, split
from .harness.synthetic import make_synthetic_corpus
from .harness.experiments import (
    SWEEP_RATIOS,
    CLASS_RATIOS,
    default_encoder,
    sweep_attack,
    run_ablation,
    write_ablation_csv,
    run_class_ratio,
    write_class_ratio_csv,
)
from .harness.analysis import (
    lexicon_hits,
    detection_by_hits,
    sentiment_shift,
    mean_abs_scores,
    write_lexicon_hits_csv,
    write_detection_csv,
    write_sentiment_shift_csv,
)

logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------------------
def _read_lines(path: T.Optional[str]) -> T.List[str]:
    if path is None or path == "-":
        return [line.rstrip("\n") for line in sys.stdin]
    return Path(path).read_text(encoding="utf-8").splitlines()


def _write_lines(path: T.Optional[str], lines: T.Iterable[str]):
    if path is None or path == "-":
        for line in lines:
            print(line)
    else:
        Path(path).write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")


def _seed(args: argparse.Namespace) -> int:
    return get_default_seed() if args.seed is None else args.seed


def _classes(value: str) -> T.Optional[T.Set[int]]:
    return {"both": None, "hate": {1}, "legit": {0}}[value]


def _ratios(value: T.Optional[str]) -> T.Tuple[float, ...]:
    if not value:
        return SWEEP_RATIOS
    return tuple(float(v) for v in value.split(","))


def _confusion(args: argparse.Namespace) -> ConfusionTable:
    if getattr(args, "confusion", None):
        return ConfusionTable.from_file(args.confusion)
    return ConfusionTable.default()


def _pipeline(args: argparse.Namespace) -> PipelineConfig:
    return PipelineConfig.make(
        tau=args.tau, seed=_seed(args), compound_alpha=args.compound_alpha
    )


def _model_config(args: argparse.Namespace) -> ModelConfig:
    kwargs = dict()
    if args.config:
        kwargs.update(json.loads(Path(args.config).read_text(encoding="utf-8")))
    for name in ["epochs", "learning_rate", "batch_size"]:
        value = getattr(args, name, None)
        if value is not None:
            kwargs[name] = value
    if args.seed is not None:
        kwargs["seed"] = args.seed
    config = ModelConfig.make(**kwargs)
    ablation = getattr(args, "ablation", None)
    if ablation:
        config = config.with_ablation(ablation)
    return config


def _providers(args: argparse.Namespace) -> Providers:
    return Providers(
        word_table=load_word_vectors(args.word_vectors) if args.word_vectors else None,
        char_table=(
            EmbeddingTable.from_file(args.char_table, kind=EmbeddingKind.Char)
            if args.char_table
            else None
        ),
        pho_table=(
            EmbeddingTable.from_file(args.pho_table, kind=EmbeddingKind.Phoneme)
            if args.pho_table
            else None
        ),
        pron_dict=load_pron_dict(args.dict) if args.dict else None,
    )


def _fill_word_table(providers: Providers, config: ModelConfig) -> Providers:
    # no word vector file: every word gets its hashed vector
    if providers.word_table is None and config.use_lstms:
        providers.word_table = EmbeddingTable.empty(EmbeddingKind.Word, config.word_dim)
    return providers


def _lexica(args: argparse.Namespace) -> T.Tuple[SentimentLexicon, HateLexicon]:
    if args.slex is None:
        logger.warning("no sentiment lexicon, targets fall back to lexicon matches or random words")
        slex = SentimentLexicon()
    else:
        slex = SentimentLexicon.from_file(args.slex)
    if args.hlex is None:
        logger.warning("no hate lexicon given")
        hlex = HateLexicon([])
    else:
        hlex = HateLexicon.from_file(args.hlex)
    return slex, hlex


def _load_data(path: str, args: argparse.Namespace) -> LabeledDataset:
    return load_dataset(path, pretokenized=getattr(args, "pretokenized", False))


def _load_detector(args: argparse.Namespace) -> Detector:
    word_table = load_word_vectors(args.word_vectors) if args.word_vectors else None
    return Detector.load(args.model, word_table=word_table)


def _train_valid_test(args: argparse.Namespace) -> T.Tuple[LabeledDataset, ...]:
    """
    Either three explicit files, or one file split 80 / 10 / 10.
    """
    data = _load_data(args.train, args)
    if args.valid is None and args.test is None:
        return split(data, _seed(args))
    valid = _load_data(args.valid, args) if args.valid else None
    test = _load_data(args.test, args) if args.test else None
    return data, valid, test


# ------------------------------------------------------------------------------
# Sub commands
# ------------------------------------------------------------------------------
def cmd_normalize(args: argparse.Namespace) -> int:
    _write_lines(args.output, [normalize_text(line) for line in _read_lines(args.input)])
    return 0


def cmd_target(args: argparse.Namespace) -> int:
    slex, hlex = _lexica(args)
    pipeline = _pipeline(args)
    lines = list()
    for line in _read_lines(args.input):
        tokens = normalize(line)
        if not tokens:
            lines.append(json.dumps({"tokens": [], "target": None}))
            continue
        target = find_target(tokens, slex, hlex, message_rng(pipeline.seed, tokens), pipeline.tau)
        lines.append(
            json.dumps(
                {
                    "tokens": tokens,
                    "target": target.target,
                    "target_index": target.target_index,
                    "method": target.selection_method.value,
                }
            )
        )
    _write_lines(args.output, lines)
    return 0


def cmd_build_g2p(args: argparse.Namespace) -> int:
    table = build_chunk_table(
        load_pron_dict(args.dict), min_count=args.min_count, max_words=args.max_words
    )
    write_chunk_table(table, args.out)
    logger.info("wrote %d chunks to %s", len(table), args.out)
    return 0


def cmd_train_embeddings(args: argparse.Namespace) -> int:
    token_seqs = _load_data(args.data, args).token_seqs()
    seed = _seed(args)
    if args.kind == "char":
        kind = EmbeddingKind.Char
        confusion = None if args.no_augment else _confusion(args)
        corpus = char_corpus(token_seqs, confusion=confusion, seed=seed, unique=args.unique)
    else:
        kind = EmbeddingKind.Phoneme
        pron_dict = load_pron_dict(args.dict) if args.dict else None
        corpus = phoneme_corpus(token_seqs, pron_dict=pron_dict, unique=args.unique)
    config = CbowConfig.make(
        dim=args.dim,
        window=args.window,
        epochs=args.epochs,
        learning_rate=args.learning_rate,
        negative_samples=args.negative,
        seed=seed,
    )
    table = train_cbow(corpus, config, kind=kind, progress=args.progress)
    table.save(args.out)
    logger.info("wrote %d %s vectors to %s", len(table) - 1, kind.value, args.out)
    return 0


def cmd_train(args: argparse.Namespace) -> int:
    config = _model_config(args)
    providers = _fill_word_table(_providers(args), config)
    slex, hlex = _lexica(args)
    train, valid, test = _train_valid_test(args)
    detector, history = Detector.fit(
        train,
        valid,
        config,
        providers,
        slex,
        hlex,
        pipeline=_pipeline(args),
        sources={"word_vectors": args.word_vectors, "pron_dict": args.dict},
        progress=args.progress,
    )
    detector.save(args.out)
    if test is not None and len(test):
        print(json.dumps(detector.evaluate(test).to_dict(), indent=2))
    return 0


def cmd_predict(args: argparse.Namespace) -> int:
    detector = _load_detector(args)
    lines = list()
    for line in _read_lines(args.input):
        if not normalize(line):
            lines.append(f"0\t{0.0:.6f}")
            continue
        prediction = detector.predict(line)
        lines.append(f"{int(prediction.label)}\t{prediction.prob_hate:.6f}")
    _write_lines(args.output, lines)
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    detector = _load_detector(args)
    metrics = detector.evaluate(_load_data(args.data, args))
    text = json.dumps(metrics.to_dict(), indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    print(text)
    return 0


def cmd_attack(args: argparse.Namespace) -> int:
    hlex = HateLexicon.from_file(args.hlex)
    word_table = (
        load_word_vectors(args.word_vectors)
        if args.word_vectors
        else EmbeddingTable.empty(EmbeddingKind.Word, args.word_dim)
    )
    attacked = attack_dataset(
        _load_data(args.data, args),
        args.ratio,
        hlex,
        _confusion(args),
        MeanWordVectorEncoder(word_table),
        _seed(args),
        classes=_classes(args.classes),
        progress=args.progress,
    )
    save_dataset(attacked, args.out)
    if args.plans:
        with open(args.plans, "w", encoding="utf-8") as f:
            for i, row in enumerate(attacked):
                if row.plan is not None:
                    f.write(json.dumps({"row": i, **row.plan.to_dict()}) + "\n")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    detector = _load_detector(args)
    result = sweep_attack(
        detector,
        _load_data(args.data, args),
        _confusion(args),
        _seed(args),
        ratios=_ratios(args.ratios),
        classes=_classes(args.classes),
        progress=args.progress,
    )
    result.to_csv(args.out)
    print(result.summary())
    return 0


def cmd_ablate(args: argparse.Namespace) -> int:
    config = _model_config(args)
    providers = _fill_word_table(_providers(args), config)
    slex, hlex = _lexica(args)
    train, valid, test = _train_valid_test(args)
    variants = args.variants.split(",") if args.variants else list(ABLATIONS)
    results = run_ablation(
        train,
        valid,
        test,
        config,
        providers,
        slex,
        hlex,
        _confusion(args),
        _seed(args),
        variants=variants,
        ratios=_ratios(args.ratios),
        encoder=default_encoder(providers, config.word_dim),
        pipeline=_pipeline(args),
        classes=_classes(args.classes),
        progress=args.progress,
    )
    write_ablation_csv(results, args.out)
    for name, result in results.items():
        print(f"== {name}")
        print(result.summary())
    return 0


def cmd_class_ratio(args: argparse.Namespace) -> int:
    config = _model_config(args)
    providers = _fill_word_table(_providers(args), config)
    slex, hlex = _lexica(args)
    ratios = tuple(int(v) for v in args.ratios.split(",")) if args.ratios else CLASS_RATIOS
    points = run_class_ratio(
        _load_data(args.data, args),
        config,
        providers,
        slex,
        hlex,
        _seed(args),
        ratios=ratios,
        pipeline=_pipeline(args),
        progress=args.progress,
    )
    write_class_ratio_csv(points, args.out)
    for point in points:
        print(
            f"{point.legit_per_hate}:1  accuracy {point.metrics.accuracy:.4f}"
            f"  macro F1 {point.metrics.macro_f1:.4f}"
        )
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    slex, hlex = _lexica(args)
    dataset = _load_data(args.data, args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    histogram = lexicon_hits(dataset, hlex)
    write_lexicon_hits_csv(histogram, out_dir / "lexicon_hits.csv")
    print(json.dumps({str(k): v for k, v in histogram.items()}, indent=2))

    if args.model:
        detector = _load_detector(args)
        predictions = [int(p.label) for p in detector.predict_rows(dataset)]
        rates = detection_by_hits(dataset, predictions, hlex)
        write_detection_csv(rates, out_dir / "detection_by_hits.csv")
        for bucket, rate in rates.items():
            print(f"hits {bucket}: {rate.n_detected} / {rate.n_messages} detected")

    if args.attacked:
        attacked = load_dataset(args.attacked, pretokenized=True)
        shifts = sentiment_shift(dataset, attacked, slex, args.compound_alpha)
        write_sentiment_shift_csv(shifts, out_dir / "sentiment_shift.csv")
        for label in (0, 1):
            before, after = mean_abs_scores(shifts, label)
            print(f"label {label}: mean |compound| {before:.4f} -> {after:.4f}")
    return 0


def cmd_synthetic(args: argparse.Namespace) -> int:
    corpus = make_synthetic_corpus(
        n_messages=args.n,
        legit_per_hate=args.legit_per_hate,
        n_toxic=args.n_toxic,
        seed=_seed(args),
    )
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    save_dataset(corpus.dataset, out_dir / "dataset.tsv")
    _write_lines(
        str(out_dir / "sentiment.tsv"),
        [f"{word}\t{valence}" for word, valence in sorted(corpus.sentiment_lexicon.entries.items())],
    )
    _write_lines(str(out_dir / "hate.txt"), list(corpus.hate_lexicon))
    logger.info("wrote synthetic corpus to %s", out_dir)
    return 0


# ------------------------------------------------------------------------------
# Parser
# ------------------------------------------------------------------------------
def _add_io(parser: argparse.ArgumentParser):
    parser.add_argument(
        "-i", "--input", "--in", dest="input", default=None, help="input file, stdin by default"
    )
    parser.add_argument(
        "-o", "--output", "--out", dest="output", default=None, help="output file, stdout by default"
    )


def _add_seed(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=None, help="default: $SWE2_SEED or 1")


def _add_progress(parser: argparse.ArgumentParser):
    parser.add_argument("--progress", action="store_true", help="show progress bars")


def _add_pretokenized(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--pretokenized",
        action="store_true",
        help="dataset texts are space joined tokens, e.g. written by 'swe2 attack'",
    )


def _add_pipeline(parser: argparse.ArgumentParser):
    parser.add_argument("--tau", type=float, default=DEFAULT_TAU)
    parser.add_argument("--compound-alpha", type=float, default=DEFAULT_COMPOUND_ALPHA)


def _add_lexica(parser: argparse.ArgumentParser, required: bool = True):
    suffix = "" if required else ", empty by default"
    parser.add_argument(
        "--slex", "--sentiment", dest="slex", required=required, help="sentiment lexicon TSV" + suffix
    )
    parser.add_argument(
        "--hlex",
        "--lexicon",
        dest="hlex",
        required=required,
        help="hate lexicon, one word per line" + suffix,
    )


def _add_providers(parser: argparse.ArgumentParser):
    parser.add_argument("--word-vectors", default=None, help="word vector file (.vec)")
    parser.add_argument("--char-table", default=None, help="character embeddings")
    parser.add_argument("--pho-table", default=None, help="phoneme embeddings")
    parser.add_argument("--dict", default=None, help="pronouncing dictionary")


def _add_model_config(parser: argparse.ArgumentParser):
    parser.add_argument("--config", default=None, help="JSON file of ModelConfig fields")
    parser.add_argument("--epochs", type=int, default=None)
    parser.add_argument("--learning-rate", type=float, default=None)
    parser.add_argument("--batch-size", type=int, default=None)


def _add_splits(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--train", "--data", dest="train", required=True, help="training set, split 80/10/10 if alone"
    )
    parser.add_argument("--valid", default=None)
    parser.add_argument("--test", default=None)


def _add_attack(parser: argparse.ArgumentParser):
    parser.add_argument("--confusion", default=None, help="confusion table, shipped one by default")
    parser.add_argument("--classes", choices=["both", "hate", "legit"], default="both")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swe2", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normalize raw messages, one per line")
    _add_io(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("target", help="print the target word of each message as JSONL")
    _add_io(p)
    _add_lexica(p)
    _add_pipeline(p)
    _add_seed(p)
    p.set_defaults(func=cmd_target)

    p = sub.add_parser("build-g2p", help="rebuild the G2P chunk table from a dictionary")
    p.add_argument("--dict", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--min-count", type=int, default=2)
    p.add_argument("--max-words", type=int, default=None)
    p.set_defaults(func=cmd_build_g2p)

    p = sub.add_parser("train-embeddings", help="train character or phoneme CBOW vectors")
    p.add_argument("--data", "--in", dest="data", required=True)
    p.add_argument("--kind", choices=["char", "phoneme"], required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dict", default=None, help="pronouncing dictionary (phoneme)")
    p.add_argument("--confusion", default=None)
    p.add_argument("--no-augment", action="store_true", help="no look-alike variants (char)")
    p.add_argument("--unique", action="store_true", help="one sequence per distinct word")
    p.add_argument("--dim", type=int, default=20)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--epochs", type=int, default=15)
    p.add_argument("--learning-rate", type=float, default=0.025)
    p.add_argument("--negative", type=int, default=5)
    _add_seed(p)
    _add_progress(p)
    _add_pretokenized(p)
    p.set_defaults(func=cmd_train_embeddings)

    p = sub.add_parser("train", help="train and save a detector")
    _add_splits(p)
    _add_providers(p)
    _add_lexica(p, required=False)
    _add_model_config(p)
    _add_pipeline(p)
    p.add_argument("--ablation", choices=list(ABLATIONS), default=None)
    p.add_argument("--out", required=True, help="checkpoint JSON")
    _add_seed(p)
    _add_progress(p)
    _add_pretokenized(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="print label and hate probability per message")
    p.add_argument("--model", required=True)
    p.add_argument("--word-vectors", default=None)
    _add_io(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", help="evaluate a detector on a labeled TSV")
    p.add_argument("--model", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--word-vectors", default=None)
    p.add_argument("-o", "--output", default=None, help="metrics JSON")
    _add_pretokenized(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("attack", help="manipulate a share of a labeled TSV")
    p.add_argument("--data", "--in", dest="data", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--ratio", type=float, required=True)
    p.add_argument("--hlex", "--lexicon", dest="hlex", required=True)
    p.add_argument(
        "--word-vectors", "--vectors", dest="word_vectors", default=None, help="sentence encoder vectors"
    )
    p.add_argument("--word-dim", type=int, default=50, help="hashed vector dim without --word-vectors")
    p.add_argument("--plans", default=None, help="write the attack plans as JSONL")
    _add_attack(p)
    _add_seed(p)
    _add_progress(p)
    _add_pretokenized(p)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("sweep", help="evaluate a detector at attack ratios 0.0 .. 1.0")
    p.add_argument("--model", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--word-vectors", default=None)
    p.add_argument("--out", required=True, help="CSV")
    p.add_argument("--ratios", default=None, help="comma separated, 0.0,0.1,...,1.0 by default")
    _add_attack(p)
    _add_seed(p)
    _add_progress(p)
    _add_pretokenized(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("ablate", help="train every ablation variant and sweep it")
    _add_splits(p)
    _add_providers(p)
    _add_lexica(p, required=False)
    _add_model_config(p)
    _add_pipeline(p)
    _add_attack(p)
    p.add_argument("--variants", default=None, help=f"comma separated subset of {list(ABLATIONS)}")
    p.add_argument("--ratios", default=None)
    p.add_argument("--out", required=True, help="CSV")
    _add_seed(p)
    _add_progress(p)
    _add_pretokenized(p)
    p.set_defaults(func=cmd_ablate)

    p = sub.add_parser("class-ratio", help="train and test at legit:hate ratios 1:1 .. 5:1")
    p.add_argument("--data", required=True)
    _add_providers(p)
    _add_lexica(p, required=False)
    _add_model_config(p)
    _add_pipeline(p)
    p.add_argument("--ratios", default=None, help="comma separated, 1,2,3,4,5 by default")
    p.add_argument("--out", required=True, help="CSV")
    _add_seed(p)
    _add_progress(p)
    _add_pretokenized(p)
    p.set_defaults(func=cmd_class_ratio)

    p = sub.add_parser("analyze", help="lexicon hits, detection by hits, sentiment shift")
    p.add_argument("--data", required=True)
    p.add_argument("--attacked", default=None, help="the attacked version of --data")
    p.add_argument("--model", default=None)
    p.add_argument("--word-vectors", default=None)
    p.add_argument("--compound-alpha", type=float, default=DEFAULT_COMPOUND_ALPHA)
    p.add_argument("--out-dir", required=True)
    _add_lexica(p)
    _add_pretokenized(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synthetic", help="write a synthetic corpus and its lexica")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--n", type=int, default=2000)
    p.add_argument("--legit-per-hate", type=int, default=5)
    p.add_argument("--n-toxic", type=int, default=20)
    _add_seed(p)
    p.set_defaults(func=cmd_synthetic)

    return parser


def main(argv: T.Optional[T.List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except Swe2Error as e:
        logger.error("%s: %s", type(e).__name__, e)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
