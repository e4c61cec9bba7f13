# -*- coding: utf-8 -*-

import io
import json

import pytest

from swe2._version import __version__
from swe2.cli import make_parser, main
from swe2.embeddings.table import EmbeddingKind, EmbeddingTable
from swe2.harness.dataset import load_dataset
from swe2.phonetics import load_chunk_table
from swe2.tests.fixtures import PRON_DICT_LINES

SMALL_CONFIG = {
    "char_dim": 6,
    "pho_dim": 5,
    "word_dim": 8,
    "cnn_filters_per_width": 3,
    "lstm_hidden": 4,
    "mlp_hidden": [8],
    "dropout_rate": 0.0,
    "batch_size": 16,
}


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        make_parser().parse_args(["--version"])
    assert e.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_command_is_required():
    with pytest.raises(SystemExit):
        make_parser().parse_args([])


def test_normalize(tmp_path, capsys):
    path = tmp_path / "raw.txt"
    path.write_text("@Bob I LOVE #Winning http://t.co/x\nWhat a tr@sh!\n", encoding="utf-8")
    assert main(["-q", "normalize", "-i", str(path)]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "USER i love winning URL",
        "what a tr sh",
    ]


def test_normalize_stdin(monkeypatch, tmp_path):
    monkeypatch.setattr("sys.stdin", io.StringIO("Hello  World\n"))
    out = tmp_path / "out.txt"
    assert main(["-q", "normalize", "-o", str(out)]) == 0
    assert out.read_text() == "hello world\n"


def test_target(tmp_path, capsys):
    slex = tmp_path / "slex.tsv"
    slex.write_text("love\t3.2\n", encoding="utf-8")
    hlex = tmp_path / "hate.txt"
    hlex.write_text("limey\n", encoding="utf-8")
    messages = tmp_path / "messages.txt"
    messages.write_text("you liemy fool\ni love it\n!!!\n", encoding="utf-8")
    code = main(
        ["-q", "target", "-i", str(messages), "--slex", str(slex), "--hlex", str(hlex)]
    )
    assert code == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert records[0]["target"] == "liemy"
    assert records[0]["method"] == "LexiconMatch"
    assert records[1]["target"] == "love"
    assert records[1]["method"] == "Sentiment"
    assert records[2] == {"tokens": [], "target": None}


@pytest.mark.parametrize(
    "argv, expected",
    [
        (
            ["normalize", "--in", "a.txt", "--out", "b.txt"],
            dict(input="a.txt", output="b.txt"),
        ),
        (
            ["target", "--sentiment", "s.tsv", "--lexicon", "h.txt", "--tau", "0.5", "--seed", "3"],
            dict(slex="s.tsv", hlex="h.txt", tau=0.5, seed=3),
        ),
        (
            ["train-embeddings", "--kind", "char", "--dim", "20", "--window", "3",
             "--epochs", "5", "--seed", "1", "--in", "corpus.txt", "--out", "table.vec"],
            dict(data="corpus.txt", out="table.vec", dim=20, window=3, epochs=5),
        ),
        (
            ["train", "--data", "train.tsv", "--valid", "valid.tsv",
             "--config", "cfg.json", "--out", "model.json"],
            dict(train="train.tsv", valid="valid.tsv", slex=None, hlex=None),
        ),
        (
            ["predict", "--model", "model.json", "--in", "msgs.txt"],
            dict(model="model.json", input="msgs.txt"),
        ),
        (
            ["attack", "--in", "test.tsv", "--ratio", "0.5", "--lexicon", "hate.txt",
             "--confusion", "confusion.tsv", "--vectors", "words.vec", "--seed", "1",
             "--out", "attacked.tsv", "--plans", "plans.jsonl"],
            dict(data="test.tsv", hlex="hate.txt", word_vectors="words.vec", ratio=0.5),
        ),
    ],
)
def test_documented_command_lines(argv, expected):
    args = make_parser().parse_args(argv)
    for key, value in expected.items():
        assert getattr(args, key) == value


def test_build_g2p(tmp_path):
    path_dict = tmp_path / "cmudict.txt"
    path_dict.write_text("\n".join(PRON_DICT_LINES) + "\n", encoding="utf-8")
    out = tmp_path / "chunks.tsv"
    assert main(["-q", "build-g2p", "--dict", str(path_dict), "--out", str(out), "--min-count", "1"]) == 0
    table = load_chunk_table(out)
    assert len(table) > 0


def test_domain_error_returns_1(tmp_path):
    data = tmp_path / "bad.tsv"
    data.write_text("2\tx\n", encoding="utf-8")
    out = tmp_path / "out.tsv"
    code = main(
        ["-q", "attack", "--data", str(data), "--out", str(out), "--ratio", "0.5",
         "--hlex", str(data)]
    )
    assert code == 1


def test_end_to_end(tmp_path, capsys):
    d = tmp_path
    assert main(["-q", "synthetic", "--out-dir", str(d), "--n", "60", "--n-toxic", "5", "--seed", "1"]) == 0
    dataset = d / "dataset.tsv"
    slex, hlex = str(d / "sentiment.tsv"), str(d / "hate.txt")
    assert len(load_dataset(dataset)) == 60
    lexica = ["--slex", slex, "--hlex", hlex]

    for kind, dim in [("char", 6), ("phoneme", 5)]:
        code = main(
            ["-q", "train-embeddings", "--data", str(dataset), "--kind", kind,
             "--out", str(d / f"{kind}.vec"), "--dim", str(dim), "--epochs", "1"]
        )
        assert code == 0
    char_table = EmbeddingTable.from_file(d / "char.vec", kind=EmbeddingKind.Char)
    assert char_table.dim == 6
    # look-alike characters are trained too
    assert "@" in char_table

    config = d / "config.json"
    config.write_text(json.dumps(SMALL_CONFIG), encoding="utf-8")
    model = d / "model.json"
    code = main(
        ["-q", "train", "--train", str(dataset), "--char-table", str(d / "char.vec"),
         "--pho-table", str(d / "phoneme.vec"), "--config", str(config), "--epochs", "1",
         "--out", str(model), "--seed", "1"] + lexica
    )
    assert code == 0
    assert model.exists()
    metrics = json.loads(capsys.readouterr().out)
    assert 0.0 <= metrics["accuracy"] <= 1.0

    # lexica are optional for training
    bare_model = d / "bare.json"
    code = main(
        ["-q", "train", "--data", str(dataset), "--char-table", str(d / "char.vec"),
         "--pho-table", str(d / "phoneme.vec"), "--config", str(config), "--epochs", "1",
         "--out", str(bare_model), "--seed", "1"]
    )
    assert code == 0
    assert json.loads(bare_model.read_text())["hate_lexicon"] == []
    capsys.readouterr()

    messages = d / "messages.txt"
    messages.write_text("hello there\n\n", encoding="utf-8")
    predictions = d / "predictions.tsv"
    assert main(["-q", "predict", "--model", str(model), "-i", str(messages), "-o", str(predictions)]) == 0
    lines = predictions.read_text().splitlines()
    assert len(lines) == 2
    assert lines[1] == "0\t0.000000"

    assert main(["-q", "evaluate", "--model", str(model), "--data", str(dataset)]) == 0
    assert json.loads(capsys.readouterr().out)["confusion"]

    attacked, plans = d / "attacked.tsv", d / "plans.jsonl"
    code = main(
        ["-q", "attack", "--data", str(dataset), "--out", str(attacked), "--ratio", "1.0",
         "--hlex", hlex, "--word-dim", "8", "--plans", str(plans), "--classes", "hate"]
    )
    assert code == 0
    attacked_rows = load_dataset(attacked, pretokenized=True)
    assert attacked_rows.labels == load_dataset(dataset).labels
    records = [json.loads(line) for line in plans.read_text().splitlines()]
    assert len(records) == attacked_rows.class_counts()[1]
    assert all(set(r) >= {"row", "victim_index", "original_word", "candidates", "chosen"} for r in records)

    sweep = d / "sweep.csv"
    code = main(
        ["-q", "sweep", "--model", str(model), "--data", str(dataset), "--out", str(sweep),
         "--ratios", "0.0,1.0"]
    )
    assert code == 0
    assert sweep.read_text().splitlines()[0] == "ratio,accuracy,macro_f1,f1_leg,f1_hate"
    assert len(sweep.read_text().splitlines()) == 3

    out_dir = d / "analysis"
    code = main(
        ["-q", "analyze", "--data", str(dataset), "--attacked", str(attacked),
         "--model", str(model), "--out-dir", str(out_dir)] + lexica
    )
    assert code == 0
    for name in ["lexicon_hits.csv", "detection_by_hits.csv", "sentiment_shift.csv"]:
        assert (out_dir / name).exists()
    assert len((out_dir / "sentiment_shift.csv").read_text().splitlines()) == 61


if __name__ == "__main__":
    from swe2.tests.helper import run_cov_test

    run_cov_test(__file__, "swe2.cli", preview=False)
