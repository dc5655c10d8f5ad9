import json

import pytest
from click.testing import CliRunner

from fdlopt.cli import main
from fdlopt.serialize import to_json


@pytest.fixture
def runner():
    return CliRunner()


class TestDesign:
    def test_human_output(self, runner):
        result = runner.invoke(main, ["design", "--fibers", "13", "--recirc", "5"])
        assert result.exit_code == 0
        assert "3,3,2,3,2" in result.output
        assert "ExactlyOne" in result.output

    def test_json_two_candidates_decimal_strings(self, runner):
        result = runner.invoke(
            main, ["design", "--fibers", "26", "--recirc", "10", "--format", "json"]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["classification"] == "ExactlyTwo"
        assert len(payload["candidates"]) == 2
        for candidate in payload["candidates"]:
            assert candidate["B"] == "1141023"
            assert all(isinstance(d, str) for d in candidate["delays"])

    def test_json_round_trips_byte_identical(self, runner):
        result = runner.invoke(
            main, ["design", "--fibers", "16", "--recirc", "6", "--format", "json"]
        )
        text = result.output.rstrip("\n")
        assert to_json(json.loads(text)) == text

    def test_smallest_instance(self, runner):
        result = runner.invoke(main, ["design", "--fibers", "2", "--recirc", "1"])
        assert result.exit_code == 0
        assert "candidate n: 2" in result.output
        assert "delays: 1,2" in result.output
        assert "B: 2" in result.output

    def test_at_most_two_note(self, runner):
        result = runner.invoke(main, ["design", "--fibers", "24", "--recirc", "9"])
        assert result.exit_code == 0
        assert "note:" in result.output

    def test_short_flags(self, runner):
        result = runner.invoke(main, ["design", "-M", "11", "-k", "3"])
        assert result.exit_code == 0
        assert "4,4,3" in result.output

    def test_domain_error_exit_2(self, runner):
        result = runner.invoke(main, ["design", "--fibers", "5", "--recirc", "5"])
        assert result.exit_code == 2
        assert "error:" in result.stderr

    def test_csv_format(self, runner):
        result = runner.invoke(
            main, ["design", "--fibers", "16", "--recirc", "6", "--format", "csv"]
        )
        lines = result.output.strip().split("\n")
        assert lines[0] == "profile,B"
        assert lines[1] == '"3,3,2,3,3,2",4599'
        assert lines[2] == '"3,3,3,2,3,2",4599'


class TestValue:
    @pytest.mark.parametrize(
        "m, k, profile, expected",
        [
            (16, 6, "3,3,2,5,1,2", "3607"),
            (16, 6, "2,3,2,3,3,3", "4231"),
            (3, 2, "2,1", "6"),
        ],
    )
    def test_known_values(self, runner, m, k, profile, expected):
        result = runner.invoke(
            main,
            ["value", "--fibers", str(m), "--recirc", str(k), "--profile", profile],
        )
        assert result.exit_code == 0
        assert f"B: {expected}" in result.output

    def test_json_payload(self, runner):
        result = runner.invoke(
            main,
            ["value", "-M", "3", "-k", "2", "--profile", "2,1", "--format", "json"],
        )
        payload = json.loads(result.output)
        assert payload["delays"] == ["1", "2", "4"]
        assert payload["B"] == "6"

    def test_wrong_sum_exit_2(self, runner):
        result = runner.invoke(
            main, ["value", "-M", "16", "-k", "6", "--profile", "3,3,2,5,1,1"]
        )
        assert result.exit_code == 2

    def test_wrong_length_exit_2(self, runner):
        result = runner.invoke(
            main, ["value", "-M", "16", "-k", "5", "--profile", "3,3,2,5,1,2"]
        )
        assert result.exit_code == 2

    def test_non_integer_profile_exit_2(self, runner):
        result = runner.invoke(
            main, ["value", "-M", "16", "-k", "6", "--profile", "3,3,x,5,1,2"]
        )
        assert result.exit_code == 2

    def test_low_first_block_exit_2(self, runner):
        result = runner.invoke(
            main, ["value", "-M", "16", "-k", "6", "--profile", "1,4,2,5,2,2"]
        )
        assert result.exit_code == 2


class TestVerify:
    def test_agreement_pair(self, runner):
        result = runner.invoke(main, ["verify", "--fibers", "16", "--recirc", "6"])
        assert result.exit_code == 0
        assert "AGREE" in result.output
        assert result.output.count("3,3,2,3,3,2") >= 2  # candidate and argmax

    def test_agreement_single(self, runner):
        result = runner.invoke(main, ["verify", "--fibers", "11", "--recirc", "3"])
        assert result.exit_code == 0
        assert "AGREE" in result.output

    def test_cap_exceeded_exit_2(self, runner):
        result = runner.invoke(main, ["verify", "--fibers", "24", "--recirc", "9"])
        assert result.exit_code == 2
        assert "cap" in result.stderr

    def test_disagreement_exit_1(self, runner, monkeypatch):
        # The honest pipeline always agrees, so force the disagree branch.
        import fdlopt.cli as cli_module
        from fdlopt.oracle import verify_design as real_verify

        monkeypatch.setattr(
            cli_module.oracle,
            "verify_design",
            lambda m, k, cap: (*real_verify(m, k, cap=cap)[:2], False),
        )
        result = runner.invoke(main, ["verify", "-M", "11", "-k", "3"])
        assert result.exit_code == 1
        assert "DISAGREE" in result.output

    def test_json_payload(self, runner):
        result = runner.invoke(
            main, ["verify", "-M", "16", "-k", "6", "--format", "json"]
        )
        payload = json.loads(result.output)
        assert payload["agree"] is True
        assert payload["best_B"] == "4599"
        assert payload["space_size"] == 2002
        assert payload["argmax"] == [[3, 3, 2, 3, 3, 2], [3, 3, 3, 2, 3, 2]]


class TestTables:
    def test_default_csv(self, runner):
        result = runner.invoke(main, ["tables"])
        assert result.exit_code == 0
        lines = result.output.strip().split("\n")
        assert lines[0] == "profile,B"
        assert len(lines) == 25
        assert '"3,3,2,1,5,2",3543' in lines

    def test_json(self, runner):
        result = runner.invoke(main, ["tables", "--format", "json"])
        payload = json.loads(result.output)
        assert len(payload["rows"]) == 24
        assert all(isinstance(row["B"], str) for row in payload["rows"])

    def test_human_groups_by_table(self, runner):
        result = runner.invoke(main, ["tables", "--format", "human"])
        assert "[adjacent-gap-level-1]" in result.output
        assert "[unit-swap-level-2]" in result.output


class TestLemmas:
    def test_quiet_run_passes(self, runner):
        result = runner.invoke(
            main,
            ["lemmas", "--max-m", "8", "--samples", "40", "--quiet"],
        )
        assert result.exit_code == 0
        assert "seed=0" in result.output
        assert "0 violations" in result.output.split("\n")[-2]

    def test_streams_case_lines(self, runner):
        result = runner.invoke(main, ["lemmas", "--max-m", "6", "--samples", "5"])
        assert result.exit_code == 0
        assert "rule-A:" in result.output
        assert " OK" in result.output

    def test_bad_max_m_exit_2(self, runner):
        result = runner.invoke(main, ["lemmas", "--max-m", "1"])
        assert result.exit_code == 2


def test_missing_required_option_exit_2(runner):
    result = runner.invoke(main, ["design", "--fibers", "13"])
    assert result.exit_code == 2
