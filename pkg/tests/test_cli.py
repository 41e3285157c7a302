import json

import pytest

from topcode.cli import run
from topcode.core import from_json, standard_form, to_json, to_text
from topcode.groups import EveryZeroFamily, shift_generate

from _gen import A, SENTENCE_CODES, SAMPLE_KEY, STAR, T1


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def output(capsys):
    return json.loads(capsys.readouterr().out)


def test_classify_a(files, capsys):
    assert run(["classify", "--in", files("A.json", to_json(A))]) == 0
    found = {m["class"]: m for m in output(capsys)}
    assert 26 in found["odd-edge-magic-total"]["constants"].values()


def test_classify_text_input(files, capsys):
    path = files("A.txt", to_text(A))
    assert run(["classify", "--in", path, "--class", "odd-edge-magic-total"]) == 0
    assert output(capsys)["member"] is True


def test_transform_f1(files, capsys):
    assert run(["transform", "--op", "f1", "--in", files("star.json", to_json(STAR))]) == 0
    assert output(capsys) == {"x": [0, 0], "e": [1, 3], "y": [1, 3]}


def test_transform_generate_seeded(capsys):
    run(["transform", "--op", "generate", "--n", "8", "--seed", "3"])
    first = capsys.readouterr().out
    run(["transform", "--op", "generate", "--n", "8", "--seed", "3"])
    assert capsys.readouterr().out == first


def test_group_gen_and_verify(files, tmp_path, capsys):
    fam = str(tmp_path / "family.json")
    base = files("t1.json", to_json(T1))
    assert run(["group", "gen", "--in", base, "--modulus", "6", "--as-strings", "--out", fam]) == 0
    capsys.readouterr()
    assert run(["group", "verify", "--in", fam, "--zero", "3"]) == 0
    assert output(capsys) == {"every_zero": True, "closure": True, "inverses": True, "associativity": True}
    assert run(["group", "add", "--in", fam, "--zero", "3", "--i", "1", "--j", "2"]) == 0
    assert output(capsys) == {"index": 6}


def test_string_verbs(files, capsys):
    path = files("t1.json", to_json(T1))
    assert run(["string", "eq18", "--matrix", path]) == 0
    assert output(capsys) == "333405432145005"
    assert run(["string", "lines", "--m", "2", "--n", "2"]) == 0
    assert len(output(capsys)) == 8


def test_hanzi_verbs(files, capsys):
    assert run(["hanzi", "mul", "--codes", "4043 2635"]) == 0
    assert output(capsys) == "8025"
    key = files("key.json", json.dumps(SAMPLE_KEY))
    assert run(["hanzi", "encrypt", "--key", key, "--in", files("x.json", "[[2],[0],[1],[6]]")]) == 0
    assert output(capsys) == [[6], [2], [6], [0]]
    assert run(["hanzi", "build", "--codes", " ".join(SENTENCE_CODES[:2])]) == 0
    assert output(capsys) == [[4, 4], [0, 0], [4, 4], [3, 3]]


def test_domain_error_exit_1(files, capsys):
    key = files("key.json", json.dumps(SAMPLE_KEY))
    assert run(["hanzi", "decrypt", "--key", key, "--codes", "4043"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "NotInvertibleMod10"
    assert run(["transform", "--op", "f1", "--in", files("a.json", to_json(A))]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "NotInClass"


def test_usage_error_exit_2(tmp_path, capsys):
    assert run(["nonsense"]) == 2
    assert run(["transform", "--op", "generate"]) == 2
    assert run(["classify", "--in", str(tmp_path / "missing.json")]) == 2
    assert json.loads(capsys.readouterr().err.splitlines()[-1])["error"] == "FileNotFoundError"


def test_out_roundtrip(files, tmp_path, capsys):
    out = tmp_path / "dual.json"
    assert run(["transform", "--op", "f3", "--in", files("s.json", to_json(STAR)), "--out", str(out)]) == 0
    shown = from_json(capsys.readouterr().out)
    assert standard_form(from_json(out.read_text())) == standard_form(shown)

    fam = tmp_path / "fam.json"
    assert run(["group", "gen", "--in", files("t.json", to_json(T1)), "--modulus", "6", "--out", str(fam)]) == 0
    assert EveryZeroFamily.from_dict(json.loads(fam.read_text())) == shift_generate(T1, 6)


def test_text_format(files, capsys):
    assert run(["transform", "--op", "standard", "--format", "text", "--in", files("s.json", to_json(STAR))]) == 0
    assert capsys.readouterr().out == to_text(STAR)


def test_secure_split(files, capsys):
    assert run(["secure", "split", "--in", files("a.json", to_json(A)), "--public", "1,2,3"]) == 0
    res = output(capsys)
    assert res["authenticates"] is True and len(res["public"]["x"]) == 3
