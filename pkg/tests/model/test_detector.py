# -*- coding: utf-8 -*-

import json

import pytest

from swe2.exc import EmptyMessage, EmptyDataset, ParseError
from swe2.config import PipelineConfig
from swe2.model.train import Label, Prediction
from swe2.model.detector import Detector
from swe2.harness.dataset import LabeledRow, LabeledDataset
from swe2.tests.fixtures import (
    PRON_DICT_LINES,
    MESSAGES,
    LABELS,
    make_small_config,
    make_providers,
    make_sentiment_lexicon,
    make_hate_lexicon,
)


def _dataset() -> LabeledDataset:
    return LabeledDataset(
        rows=[LabeledRow(text=text, label=label) for text, label in zip(MESSAGES, LABELS)]
    )


def _fit(config=None, **kwargs):
    config = config or make_small_config()
    return Detector.fit(
        _dataset(),
        _dataset(),
        config,
        make_providers(config),
        make_sentiment_lexicon(),
        make_hate_lexicon(),
        pipeline=PipelineConfig.make(seed=1),
        **kwargs,
    )


class TestDetector:
    def test_fit(self):
        detector, history = _fit()
        assert len(history) == 2
        assert not detector.network.training
        prediction = detector.predict("@bob you are a limey")
        assert isinstance(prediction, Prediction)
        assert 0.0 <= prediction.prob_hate <= 1.0

    def test_split(self):
        detector, _ = _fit()
        split = detector.split(["USER", "you", "are", "a", "limey"])
        assert split.target == "limey"

    def test_empty_message(self):
        detector, _ = _fit()
        with pytest.raises(EmptyMessage):
            detector.predict("")
        with pytest.raises(EmptyMessage):
            detector.predict_tokens([])

    def test_predict_rows(self):
        detector, _ = _fit()
        rows = list(_dataset()) + [LabeledRow(text="", label=1)]
        predictions = detector.predict_rows(rows, batch_size=2)
        assert len(predictions) == 5
        assert predictions[-1] == Prediction(label=Label.Legitimate, prob_hate=0.0)
        for row, prediction in zip(rows, predictions[:4]):
            assert prediction.prob_hate == pytest.approx(
                detector.predict(row.text).prob_hate, abs=1e-6
            )

    def test_evaluate(self):
        detector, _ = _fit()
        metrics = detector.evaluate(_dataset())
        assert metrics.n == 4
        predictions = detector.predict_rows(_dataset().iter_rows())
        assert predictions == detector.predict_rows(list(_dataset()))
        n_correct = sum(int(p.label) == label for p, label in zip(predictions, LABELS))
        assert metrics.accuracy == pytest.approx(n_correct / 4)
        assert 0.0 <= metrics.accuracy <= 1.0
        with pytest.raises(EmptyDataset):
            detector.evaluate(LabeledDataset())

    def test_encode_rows_skips_empty(self):
        detector, _ = _fit()
        rows = [LabeledRow(text="!!!", label=0), LabeledRow(text="hello", label=0)]
        assert len(detector.encode_rows(rows)) == 1

    def test_ablated_lstms_without_word_vectors(self):
        config = make_small_config(ablate_lstms=True)
        providers = make_providers(config)
        providers.word_table = None
        detector, _ = Detector.fit(
            _dataset(),
            None,
            config,
            providers,
            make_sentiment_lexicon(),
            make_hate_lexicon(),
        )
        assert detector.predict("hello world").label in (Label.Legitimate, Label.HateSpeech)


class TestCheckpoint:
    def test_save_load(self, tmp_path):
        path_dict = tmp_path / "cmudict.txt"
        path_dict.write_text("\n".join(PRON_DICT_LINES) + "\n")
        detector, _ = _fit(sources={"pron_dict": str(path_dict)})
        path = tmp_path / "model.json"
        detector.save(path)

        loaded = Detector.load(path, word_table=detector.providers.word_table)
        assert loaded.config == detector.config
        assert loaded.pipeline == detector.pipeline
        assert loaded.hate_lexicon.words == detector.hate_lexicon.words
        assert loaded.sentiment_lexicon.entries == detector.sentiment_lexicon.entries
        assert loaded.providers.pron_dict is not None
        for text in MESSAGES:
            assert loaded.predict(text) == detector.predict(text)

    def test_load_without_word_vectors(self, tmp_path):
        detector, _ = _fit()
        path = tmp_path / "model.json"
        detector.save(path)
        loaded = Detector.load(path)
        assert len(loaded.providers.word_table) == 1
        loaded.predict("you are a limey")

    def test_bad_format_version(self, tmp_path):
        detector, _ = _fit()
        data = detector.to_dict()
        data["format_version"] = 99
        path = tmp_path / "model.json"
        path.write_text(json.dumps(data))
        with pytest.raises(ParseError):
            Detector.load(path)


if __name__ == "__main__":
    from swe2.tests.helper import run_cov_test

    run_cov_test(__file__, "swe2.model.detector", preview=False)
