import io
import os

import pytest

from wreathact import WreathElement, parse_point
from wreathact.cli import main, parse_group_text

DATA = os.path.join(os.path.dirname(__file__), "data")


def fixture(name: str) -> str:
    return os.path.join(DATA, name)


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


class TestComponentsCommand:
    def test_diagonal_plus_swap(self):
        status, text = run("components", fixture("diag_swap_q2m2.group"))
        assert status == 0
        assert "context: q=2 m=2" in text
        assert "delta-orbit 0: 0,1" in text
        assert "component 0: generators=[[1,0]] transitivity=2-transitive-or-more" in text

    def test_two_orbit_group(self):
        status, text = run("components", fixture("two_orbit_q2m3.group"))
        assert status == 0
        assert "delta-orbit-count: 2" in text
        assert "delta-orbit 1: 2" in text


class TestNormalizeCommand:
    def test_scattered_components_get_normalized(self):
        status, text = run("normalize", fixture("scattered_q3m2.group"))
        assert status == 0
        assert "components-constant: yes" in text
        assert "certificate: PASS" in text

    def test_fix_requires_transitive_components(self):
        status, text = run(
            "normalize", fixture("swap_only_q2m2.group"), "--fix", "0,0"
        )
        assert status == 1
        assert "error:" in text
        assert "coordinate 0" in text

    def test_fix_point_reported(self):
        # at q = 4 the conjugated components are transitive yet differ
        status, text = run(
            "normalize", fixture("scattered_q4m2.group"), "--fix", "0,0"
        )
        assert status == 0
        assert "components-constant: yes" in text
        assert "fixed-point: 0,0" in text
        assert "fixed-point-preserved: yes" in text


class TestEmbedCommand:
    def test_diagonal_plus_swap_certificate(self):
        status, text = run("embed", fixture("diag_swap_q2m2.group"))
        assert status == 0
        assert "certificate: PASS" in text
        assert "G-generators: [[1,0]]" in text

    def test_intransitive_coordinates_exit_one(self):
        status, text = run("embed", fixture("two_orbit_q2m3.group"))
        assert status == 1
        assert "not transitive" in text


class TestSplitCommand:
    def test_two_orbit_split(self):
        status, text = run("split", fixture("two_orbit_q2m3.group"), "--delta0", "0,1")
        assert status == 0
        assert "check-point-map-bijective: yes" in text
        assert "check-components-preserved: yes" in text
        assert "result: PASS" in text

    def test_cut_orbit_is_an_input_error(self):
        status, text = run("split", fixture("two_orbit_q2m3.group"), "--delta0", "0")
        assert status == 2
        assert "not invariant" in text


class TestCodeCanonCommand:
    def test_even_weight_code(self):
        status, text = run(
            "code-canon",
            fixture("even_weight.code"),
            fixture("even_weight_aut.group"),
            "--gamma", "0",
            "--nu", "1",
        )
        assert status == 0
        assert "pinned-constant: 0,0,0" in text
        assert "pinned-mixed: 1,1,0" in text
        assert "transformed-min-distance: 2" in text
        assert "certificate: PASS" in text

    def test_equal_letters_exit_one(self):
        status, text = run(
            "code-canon",
            fixture("even_weight.code"),
            fixture("even_weight_aut.group"),
            "--gamma", "0",
            "--nu", "0",
        )
        assert status == 1


class TestVerifyCommand:
    def test_reports_stabilizer_count(self):
        status, text = run(
            "verify", "--q", "3", "--m", "2", "--pairs", "10", "--samples", "20"
        )
        assert status == 0
        assert "stabilizer-count: 8" in text
        assert "stabilizer-expected: 8" in text
        assert "action-failures: 0" in text
        assert "scan-violations: 0" in text
        assert "result: PASS" in text

    def test_seeded_runs_are_identical(self):
        args = ("verify", "--q", "2", "--m", "2", "--pairs", "15", "--samples", "25")
        assert run(*args) == run(*args)


class TestParsing:
    def test_malformed_file_reports_line(self):
        status, text = run("components", fixture("malformed.group"))
        assert status == 2
        assert "line 3" in text

    def test_missing_file(self):
        status, text = run("components", fixture("no_such_file.group"))
        assert status == 2

    def test_round_trip_of_serialized_generators(self):
        with open(fixture("scattered_q3m2.group"), encoding="ascii") as handle:
            X = parse_group_text(handle.read())
        for g in X.generators:
            assert WreathElement.parse(str(g)) == g

    def test_reported_elements_parse_back(self):
        status, text = run("normalize", fixture("scattered_q3m2.group"))
        assert status == 0
        for line in text.splitlines():
            key, _, value = line.partition(": ")
            if key == "x" or key.startswith("conjugated-generator"):
                assert WreathElement.parse(value) is not None
            if key == "fixed-point":
                assert parse_point(value) is not None

    def test_header_mismatch(self):
        bad = "2 2\nbase=[[1,0];[1,0];[1,0]] top=[1,2,0]\n"
        with pytest.raises(ValueError):
            parse_group_text(bad)

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("WREATHACT_CAP", "3")
        status, text = run("verify", "--q", "2", "--m", "2", "--pairs", "1", "--samples", "1")
        assert status == 2
        assert "cap" in text

    def test_bad_cap_env(self, monkeypatch):
        monkeypatch.setenv("WREATHACT_CAP", "many")
        status, text = run("components", fixture("diag_swap_q2m2.group"))
        assert status == 2
