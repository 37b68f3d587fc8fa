import pytest

import freegb


def test_labels():
    labels = freegb.labels()
    assert "klein" in labels and "templieb9" in labels
    assert len(labels) == 10


def test_klein_run_with_check():
    rec = freegb.run_example("klein", check=True)
    assert rec["certified"] and not rec["truncated"]
    assert rec["check"] == "ok"
    assert rec["minimal"] == ["x^2 - 1", "y*x - x*y", "y^2 - 1"]
    assert len(rec["basis"]) == 5


def test_parse_and_run_text():
    text = freegb.example_input("klein")
    p = freegb.parse(text)
    assert p["label"] == "klein"
    assert p["letters"] == ["x", "y"]
    assert len(p["gens"]) == 3
    rec = freegb.run(text, degbound=8, order="left")
    assert rec["degbound"] == 8
    assert "x*y - y*x" in rec["minimal"]


def test_bound_override_label():
    rec = freegb.run_example("kleind6")
    assert rec["degbound"] == 6


def test_parse_error():
    with pytest.raises(freegb.ParseError):
        freegb.parse("gens:\nx\n")


def test_inconsistent_ideal():
    with pytest.raises(freegb.InconsistentIdeal):
        freegb.run("vars x\ndegbound 5\ngens:\nx\nx - 1\n")
