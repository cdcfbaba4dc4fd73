import json

import pytest

from cubefree import words
from cubefree.cli import main
from cubefree.extend import TailCertificate


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out.strip(), out.err.strip()


def test_check(capsys):
    rc, out, _ = run(capsys, "check", "abbabaab")
    assert rc == 0 and out == "cube-free"
    rc, out, _ = run(capsys, "check", "aabaabaab")
    assert rc == 1 and out == "cube at 1 period 3 root aab"
    rc, _, err = run(capsys, "check", "ab1")
    assert rc == 2 and "invalid letter" in err


def test_check_json(capsys):
    rc, out, _ = run(capsys, "check", "babbb", "--json")
    data = json.loads(out)
    assert rc == 1
    assert data["witness"] == {"position": 3, "period": 1, "root": "b"}


def test_extendable_right_yes(capsys):
    rc, out, _ = run(capsys, "extendable", "right", "abbabaab", "--json")
    assert rc == 0
    data = json.loads(out)
    assert data["extendable"] is True
    cert = TailCertificate(data["Y"], data["r"], data["seam"], data["tm_aligned"])
    assert cert.verify("abbabaab")


def test_extendable_left(capsys):
    rc, out, _ = run(capsys, "extendable", "left", "abbabaab", "--json")
    assert rc == 0
    data = json.loads(out)
    cert = TailCertificate(data["Y"], data["r"], data["seam"], data["tm_aligned"])
    assert cert.verify(words.reverse("abbabaab"))


def test_extendable_no(capsys):
    rc, out, _ = run(capsys, "extendable", "right", "aabaabaa", "--json")
    assert rc == 1
    data = json.loads(out)
    assert data["extendable"] is False and data["exhausted_at"] == 0


def test_extendable_rejects_cubes(capsys):
    rc, _, err = run(capsys, "extendable", "right", "aaa")
    assert rc == 2


def test_extend(capsys):
    rc, out, _ = run(capsys, "extend", "ab", "--json")
    assert rc == 0
    data = json.loads(out)
    assert set(data) >= {"word", "Y", "r", "verified_prefix"}
    cert = TailCertificate(data["Y"], data["r"], data["seam"], data["tm_aligned"])
    assert cert.verify("ab")
    assert data["verified_prefix"] == cert.verified_prefix("ab")


def test_extend_ternary(capsys):
    rc, out, _ = run(capsys, "extend", "abc", "--alphabet", "3", "--json")
    assert rc == 0
    data = json.loads(out)
    cert = TailCertificate(data["Y"], data["r"], data["seam"], data["tm_aligned"])
    assert cert.verify("abc")


def test_extend_errors(capsys):
    rc, _, _ = run(capsys, "extend", "aaa")
    assert rc == 2
    rc, out, _ = run(capsys, "extend", "aabaabaa", "--json")
    assert rc == 1
    assert json.loads(out)["exhausted_at"] == 0


def test_transition(capsys):
    rc, out, _ = run(capsys, "transition", "aa", "bb", "--json")
    assert rc == 0
    data = json.loads(out)
    assert data["exists"] is True
    assert words.is_cube_free("aa" + data["witness"] + "bb")

    rc, out, _ = run(capsys, "transition", "", "", "--json")
    assert rc == 0 and json.loads(out)["witness"] == ""

    rc, _, _ = run(capsys, "transition", "aaa", "b")
    assert rc == 2


def test_transition_negative(capsys):
    rc, out, _ = run(capsys, "transition", "aabaabaa", "a", "--json")
    assert rc == 1
    assert json.loads(out)["exists"] is False


def test_markers(capsys):
    rc, out, _ = run(capsys, "markers", "aababaa")
    assert rc == 0 and out.splitlines()[0] == "ABABA@2"
    rc, out, _ = run(capsys, "markers", "aabaabbabb")
    lines = out.splitlines()
    assert lines[0] == "AABAA@1 BBABB@6"
    assert lines[1] == "aabaa|bbabb"
    rc, out, _ = run(capsys, "markers", "abba")
    assert rc == 0 and out == "(none)"
    rc, _, _ = run(capsys, "markers", "abc")
    assert rc == 2


def test_tm(capsys):
    rc, out, _ = run(capsys, "tm", "--prefix", "8")
    assert rc == 0 and out == "abbabaab"
    rc, out, _ = run(capsys, "tm", "--factor", "aabaa")
    assert rc == 1 and out == "not-a-factor"
    rc, out, _ = run(capsys, "tm", "--range", "6", "16")
    assert rc == 0 and out == "aabbaababba"
    rc, _, _ = run(capsys, "tm", "--range", "9", "3")
    assert rc == 2
    rc, _, _ = run(capsys, "tm")
    assert rc == 2


def test_enumerate(capsys):
    rc, out, _ = run(capsys, "enumerate", "2", "3")
    assert rc == 0 and out == "6"
    rc, out, _ = run(capsys, "enumerate", "2", "0")
    assert rc == 0 and out == "1"
    rc, _, _ = run(capsys, "enumerate", "2", "25", "--list")
    assert rc == 2
    rc, out, _ = run(capsys, "enumerate", "2", "2", "--list", "--json")
    data = json.loads(out)
    assert data["count"] == 4 and sorted(data["words"]) == ["aa", "ab", "ba", "bb"]


def test_audit(capsys):
    rc, out, _ = run(capsys, "audit", "6", "--json")
    assert rc == 0
    data = json.loads(out)
    assert data["violations"] == []
    assert all(row["max_k"] <= row["bound"] for row in data["rows"])
    rc, _, _ = run(capsys, "audit", "30")
    assert rc == 2


def test_verify_round_trip(capsys):
    rc, out, _ = run(capsys, "extend", "ab", "--json")
    assert rc == 0
    rc, out2, _ = run(capsys, "verify", out)
    assert rc == 0 and out2 == "valid"

    rc, left_out, _ = run(capsys, "extendable", "left", "aab", "--json")
    assert rc == 0
    rc, out3, _ = run(capsys, "verify", left_out)
    assert rc == 0 and out3 == "valid"

    tampered = json.loads(out)
    tampered["r"] += 1
    rc, out3, _ = run(capsys, "verify", json.dumps(tampered))
    assert rc == 1 and out3 == "INVALID"

    rc, out4, _ = run(capsys, "verify", '{"u":"aa","v":"bb","witness":"ba"}')
    assert rc == 0 and out4 == "valid"

    rc, _, _ = run(capsys, "verify", "not json {")
    assert rc == 2


def test_json_output_is_deterministic(capsys):
    rc1, out1, _ = run(capsys, "extend", "aab", "--json")
    rc2, out2, _ = run(capsys, "extend", "aab", "--json")
    assert (rc1, out1) == (rc2, out2)
