import json

from nsq.cli import main
from nsq.search import enumerate_classes


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSummary:
    def test_text_rows(self, capsys):
        code, out, _ = run(capsys, "summary", "--from", "1", "--to", "8")
        assert code == 0
        rows = [line.split() for line in out.strip().splitlines()]
        assert rows[0] == ["1", "1", "1", "0"]
        assert rows[5] == ["6", "0", "0", "0"]
        assert rows[7] == ["8", "7", "6", "1"]

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "summary", "--from", "3", "--to", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "rows": [
                {"n": 3, "equ": 1, "gol": 0, "spo": 1},
                {"n": 4, "equ": 1, "gol": 1, "spo": 0},
            ]
        }


class TestSearch:
    def test_text_matches_library(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "7")
        assert code == 0
        lines = out.strip().splitlines()
        expected = [f"{r.index} {r.p_code} {r.q_code}" for r in enumerate_classes(7)]
        assert lines == expected

    def test_golay_tags(self, capsys):
        _, out, _ = run(capsys, "search", "--n", "8", "--tag-golay")
        tags = [line.split()[-1] for line in out.strip().splitlines()]
        assert tags.count("G") == 6 and tags.count("S") == 1

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "4", "--format", "json")
        payload = json.loads(out)
        assert payload == {
            "n": 4,
            "classes": [{"index": 1, "p": "16", "q": "61", "golay": True}],
        }

    def test_infeasible_length_notes_the_short_circuit(self, capsys):
        code, out, err = run(capsys, "search", "--n", "14")
        assert code == 0 and out == ""
        assert "three squares" in err

    def test_threads_flag_output_identical(self, capsys):
        _, serial, _ = run(capsys, "search", "--n", "10")
        _, parallel, _ = run(capsys, "search", "--n", "10", "--threads", "2")
        assert serial == parallel


class TestCodecCommands:
    def test_decode_prints_paper_style(self, capsys):
        code, out, _ = run(capsys, "decode", "160", "640")
        assert code == 0
        assert out.splitlines() == [
            "n = 5",
            "A = +++-+",
            "A = +++-+",
            "C = +++--",
            "D = +-++-",
        ]

    def test_canon_reports_steps(self, capsys):
        code, out, _ = run(capsys, "canon", "160", "650")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "160 640"
        assert "1 transformation" in lines[1]

    def test_npaf(self, capsys):
        code, out, _ = run(capsys, "npaf", "++-+")
        assert code == 0 and out.strip() == "4 -1 0 1"
        code, out, _ = run(capsys, "npaf", "+,+,-,+")
        assert out.strip() == "4 -1 0 1"

    def test_malformed_code_is_usage_error(self, capsys):
        code, _, err = run(capsys, "decode", "99", "99")
        assert code == 2
        assert "99" in err

    def test_ambiguous_code_suggests_length(self, capsys):
        code, _, err = run(capsys, "decode", "33", "33")
        assert code == 2 and "n explicitly" in err
        code, out, _ = run(capsys, "decode", "33", "33", "--n", "4")
        assert code == 0 and "n = 4" in out


class TestVerification:
    def test_verify_tables_passes_with_known_discrepancies(self, capsys):
        code, out, _ = run(capsys, "verify-tables")
        assert code == 0
        assert out.count("[known]") == 3
        assert "no regressions" in out

    def test_verify_tables_fails_without_allowlist(self, capsys, tmp_path):
        empty = tmp_path / "allow.txt"
        empty.write_text("")
        code, out, err = run(capsys, "verify-tables", "--allowlist", str(empty))
        assert code == 1
        assert "unexpected" in err

    def test_verify_relations(self, capsys):
        code, out, _ = run(capsys, "verify-relations", "--n", "5")
        assert code == 0
        assert "PASS" in out and "UNVERIFIABLE" in out
        assert "FAIL" not in out.replace("UNVERIFIABLE", "")

    def test_diff_tables_known_length(self, capsys):
        code, out, _ = run(capsys, "diff-tables", "--n", "2")
        assert code == 0
        assert "known discrepancy" in out


class TestGolayCommand:
    def test_pair_listing(self, capsys):
        code, out, err = run(capsys, "golay", "--n", "2")
        assert code == 0
        assert "++ +-" in out
        assert "8 ordered pair" in err

    def test_count_classes(self, capsys):
        code, out, _ = run(capsys, "golay", "--n", "8", "--count-classes")
        assert code == 0 and out.strip() == "6"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "golay", "--n", "8", "--count-classes", "--format", "json")
        assert json.loads(out) == {"n": 8, "golay_type_classes": 6}

    def test_budget_is_usage_error(self, capsys):
        code, _, err = run(capsys, "golay", "--n", "21")
        assert code == 2 and "budget" in err


class TestEnvThreads:
    def test_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("NSQ_THREADS", "2")
        _, out, _ = run(capsys, "search", "--n", "9")
        monkeypatch.delenv("NSQ_THREADS")
        _, serial, _ = run(capsys, "search", "--n", "9")
        assert out == serial


class TestEntryPoint:
    def test_module_invocation(self):
        import subprocess
        import sys

        result = subprocess.run(
            [sys.executable, "-m", "nsq.cli", "npaf", "++-+"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert result.stdout.strip() == "4 -1 0 1"
