import io
import json
import random

import pytest

from boundedlang.cli import main
from boundedlang.numeration import BoundedWord
from boundedlang.recognizability import mod_grid, read_pgm


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0
    doc = json.loads(text)
    assert doc["schema"] == 1
    return doc


def test_convert_big_value():
    doc = run_json("convert", "--ell", "3", "12345678901234567890")
    assert doc["exponents"] == ["395823", "2223270", "1580642"]
    assert doc["z"] == ["4199737", "3803913", "1580642"]
    assert doc["word"] == "a^395823 b^2223270 c^1580642"


def test_convert_word_and_empty():
    assert run_json("convert", "--ell", "2", "--word", "bb")["value"] == "5"
    assert run_json("convert", "--ell", "1", "0")["word"] == "ε"


def test_multiply_examples():
    doc = run_json("multiply", "--ell", "2", "--lambda", "25", "--word", "a b^2")
    assert doc["image"]["word"] == "a^9 b^10"
    assert doc["preserves_recognizability"] is True
    doc = run_json("multiply", "--ell", "3", "--lambda", "125", "--value", "171717")
    assert doc["image"]["word"] == "a^490 b^14"
    assert doc["length_gap"]["i"] == "4"
    assert doc["preserves_recognizability"] is False
    doc = run_json("multiply", "--ell", "2", "--lambda", "1", "--word", "ε")
    assert doc["image"]["word"] == "ε"


def test_regions_json_and_csv():
    doc = run_json("regions", "--ell", "3", "--beta", "5", "--i", "4", "--k", "100", "--rows", "3")
    assert [r["image"] for r in doc["rows"]] == [["490", "14", "0"], ["484", "0", "20"], ["478", "22", "4"]]
    assert (doc["m"], doc["mu"], doc["size"]) == ("171717", "105", "1022")
    code, text = run("regions", "--ell", "3", "--beta", "5", "--i", "4", "--k", "100", "--rows", "2", "--format", "csv")
    assert code == 0
    assert text == "j,image_1,image_2,image_3,suffix_2,suffix_3\r\n0,490,14,0,14,0\r\n1,484,0,20,0,20\r\n"


def test_regions_empty():
    doc = run_json("regions", "--ell", "3", "--beta", "5", "--i", "0", "--k", "1")
    assert doc["empty"] is True
    code, _ = run("regions", "--ell", "3", "--beta", "5", "--i", "0", "--k", "1", "--strict")
    assert code == 1


def test_constants():
    doc = run_json("constants", "--ell", "3", "--beta", "5")
    assert doc["c"] == ["8", "4", "-130"]
    assert doc["integer"] is True and doc["tail_identity"] is True
    _, text = run("constants", "--ell", "3", "--beta", "2", "--format", "plain")
    assert "c_1 = 3/2" in text and "integer = false" in text
    code, _ = run("constants", "--ell", "3", "--beta", "2", "--q", "100")
    assert code == 1
    doc = run_json("constants", "--ell", "3", "--beta", "5", "--q", "100")
    assert doc["tail"]["word"] == "a^4 b^134 c^370"


def test_grid_pgm_to_file(tmp_path):
    target = tmp_path / "g.pgm"
    code, text = run("grid", "--p", "3", "--size", "20", "--output", str(target))
    assert code == 0 and text == ""
    maxval, grid = read_pgm(target.read_bytes())
    assert maxval == 2 and grid == mod_grid(3, 20)


def test_grid_csv_stdout():
    code, text = run("grid", "--p", "5", "--size", "4", "--format", "csv")
    assert code == 0
    assert text.count("\r\n") == 4


def test_dfa():
    code, text = run("dfa", "--ell", "3")
    assert code == 0 and text.startswith("digraph B3") and text.count("->") == 7


def test_slender():
    doc = run_json("slender", "--loop", "a,b,c", "--loop", "b,aa,c", "--value", "3", "--profile", "6")
    assert doc["word"] == "abbc"
    assert doc["profile"] == ["0", "0", "2", "1", "2", "1", "2"]
    doc = run_json("slender", "--loop", ",a,", "--progression", "2,3")
    assert doc["recognizable"]["expression"] == "a^2(a^3)*"


def test_witness():
    assert run_json("witness", "--ell", "3", "--beta", "2")["witness"]["coordinates"] == ["2", "3"]
    assert run_json("witness", "--ell", "3", "--beta", "5")["witness"] is None


@pytest.mark.parametrize(
    "argv",
    [
        ("convert", "--ell", "3", "12345678901234567890"),
        ("regions", "--ell", "3", "--beta", "5", "--i", "3", "--k", "100", "--format", "csv"),
        ("constants", "--ell", "4", "--beta", "7", "--format", "plain"),
        ("dfa", "--ell", "5"),
    ],
)
def test_deterministic(argv):
    assert run(*argv) == run(*argv)


def test_exit_codes(capsys):
    assert run("convert", "--ell", "2", "--word", "ba")[0] == 2
    assert run("convert", "--ell", "2", "12x")[0] == 2
    assert run("slender", "--loop", "a,,c")[0] == 2
    assert run("slender", "--loop", "a,b,c", "--value", "100000")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["convert"], out=io.StringIO())
    assert exc.value.code == 2


def test_round_trip_random_words():
    rng = random.Random(7)
    for _ in range(1000):
        ell = rng.randint(1, 5)
        w = BoundedWord(tuple(rng.randint(0, 40) for _ in range(ell)))
        value = run_json("convert", "--ell", str(ell), "--word", str(w))["value"]
        assert run_json("convert", "--ell", str(ell), value)["word"] == str(w)
