import math
import os

import pytest

import akshara

DATA_DIR = os.environ.get("AKSHARA_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))
TABLE = os.path.join(DATA_DIR, "letter_table.tsv")


def test_segment_roundtrip():
    text = "तर सं. abc 12"
    tokens = akshara.segment(text)
    assert "".join(t["text"] for t in tokens) == text


def test_letters_and_words():
    assert akshara.letters("च्या तर") == ["च्या", "त", "र"]
    assert akshara.words("तर सं") == [["त", "र"], ["सं"]]
    assert akshara.letters("") == []


def test_shannon_entropy():
    assert math.isclose(akshara.shannon_entropy([0.6, 0.4]), 0.9710, abs_tol=1e-4)
    assert math.isclose(
        akshara.conditional_entropy([[0.5, 0.1], [0.2, 0.2]], [0.6, 0.4]),
        0.7900,
        abs_tol=1e-4,
    )


def test_block_entropy():
    assert akshara.block_entropy([0, 1, 0, 1], 1) == pytest.approx(1.0)
    assert akshara.block_entropy([0, 0, 0, 0], 2) == 0.0
    assert akshara.text_block_entropy("तरतर", 1) == pytest.approx(1.0)


def test_table_and_approximate():
    table = akshara.load_table(TABLE)
    assert table.size == 408
    assert table.tiers[0.60] == 54
    keep = table.tier_letters(0.60)
    masked, replaced, kept = akshara.approximate("तर सं", keep)
    assert replaced + kept == 3
    assert "□" in masked or replaced == 0


def test_letter_frequencies():
    freqs = akshara.letter_frequencies("तरत")
    assert freqs[0] == ("त", 2)
