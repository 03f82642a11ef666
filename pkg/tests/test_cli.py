"""End-to-end CLI behavior: every subcommand, every exit code, and the
thin-adapter promise that CLI output equals the library call's output."""

import sys

import pytest

from hitlab.cli import dispatch, main
from hitlab.analysis import resolve_schedule
from hitlab.graph import gen_cluster, gen_cycle, gen_path
from hitlab.hitting import certificate_to_text, construct_hitting_set
from hitlab.io import format_edge_list, load_graph


def cli(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_graph(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(format_edge_list(g))
    return str(p)


@pytest.fixture
def c5_path(tmp_path):
    return write_graph(tmp_path, "c5.el", gen_cycle(5))


@pytest.fixture
def c4_path(tmp_path):
    return write_graph(tmp_path, "c4.el", gen_cycle(4))


@pytest.fixture
def k4_path(tmp_path):
    return write_graph(tmp_path, "k4.el", gen_cluster([4]))


class TestTopLevel:
    def test_no_subcommand(self, capsys):
        code, _, err = cli(capsys)
        assert code == 1
        assert err.startswith("error:usage:")

    def test_help_exits_zero(self, capsys):
        code, out, _ = cli(capsys, "--help")
        assert code == 0
        assert "SUBCOMMAND" in out

    def test_subcommand_help(self, capsys):
        code, out, _ = cli(capsys, "hit", "--help")
        assert code == 0
        assert "--theta" in out

    def test_unknown_subcommand(self, capsys):
        code, _, err = cli(capsys, "frobnicate")
        assert code == 1
        assert err.startswith("error:usage:")

    def test_main_wires_sys_argv(self, capsys, monkeypatch):
        monkeypatch.setattr(
            sys, "argv", ["hitlab", "prob", "--i-size", "4", "--d", "2", "--k", "2", "--s", "2"]
        )
        with pytest.raises(SystemExit) as ex:
            main()
        assert ex.value.code == 0
        assert "exact:" in capsys.readouterr().out


class TestGen:
    def test_cycle_to_file(self, capsys, tmp_path):
        out_path = tmp_path / "g.el"
        code, out, _ = cli(capsys, "gen", "--family", "cycle", "--n", "5", "--out", str(out_path))
        assert code == 0 and out == ""
        assert load_graph(str(out_path)) == gen_cycle(5)

    def test_cluster_to_stdout(self, capsys):
        code, out, _ = cli(capsys, "gen", "--family", "cluster", "--sizes", "3,3,3")
        assert code == 0
        assert out == format_edge_list(gen_cluster([3, 3, 3]))

    def test_dimacs_format(self, capsys):
        code, out, _ = cli(capsys, "gen", "--family", "cycle", "--n", "5", "--format", "dimacs")
        assert code == 0
        assert out.splitlines()[0] == "p edge 5 5"

    def test_gnp_deterministic(self, capsys):
        args = ("gen", "--family", "gnp", "--n", "12", "--p", "0.4", "--seed", "9")
        _, first, _ = cli(capsys, *args)
        _, second, _ = cli(capsys, *args)
        assert first == second

    def test_c4free_round_trip(self, capsys, tmp_path):
        out_path = tmp_path / "free.el"
        code, _, _ = cli(
            capsys, "gen", "--family", "c4free", "--n", "8", "--m", "5",
            "--seed", "3", "--out", str(out_path),
        )
        assert code == 0
        assert load_graph(str(out_path)).m == 5

    @pytest.mark.parametrize(
        "argv",
        [
            ("gen", "--family", "cluster"),
            ("gen", "--family", "gnp", "--n", "5"),
            ("gen", "--family", "path"),
            ("gen", "--family", "nosuch", "--n", "5"),
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, err = cli(capsys, *argv)
        assert code == 1
        assert err.startswith("error:usage:")


class TestCheckFree:
    def test_c5_is_free(self, capsys, c5_path):
        code, out, _ = cli(capsys, "check-free", "--graph", c5_path, "--s", "2", "--t", "2")
        assert code == 0
        assert out == "free: no induced K_{2,2}\n"

    def test_c4_witness_and_exit_2(self, capsys, c4_path):
        code, out, err = cli(capsys, "check-free", "--graph", c4_path, "--s", "2", "--t", "2")
        assert code == 2
        assert out == "side_a: 0 2\nside_b: 1 3\n"
        assert err.startswith("error:freeness:")

    def test_missing_file(self, capsys):
        code, _, err = cli(capsys, "check-free", "--graph", "/nope.el", "--s", "2", "--t", "2")
        assert code == 1
        assert err.startswith("error:parse:")


class TestMis:
    def test_alpha(self, capsys, c5_path):
        code, out, _ = cli(capsys, "mis", "--graph", c5_path)
        assert code == 0
        assert out == "alpha: 2\nwitness: 0 2\n"

    def test_enumerate(self, capsys, c5_path):
        code, out, _ = cli(capsys, "mis", "--graph", c5_path, "--mode", "enumerate")
        assert code == 0
        lines = out.splitlines()
        assert lines[:2] == ["alpha: 2", "count: 5"]
        assert lines[2:] == ["0 2", "0 3", "1 3", "1 4", "2 4"]

    def test_kernel(self, capsys, tmp_path):
        from hitlab.graph import Graph

        path = tmp_path / "star.el"
        path.write_text(format_edge_list(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])))
        code, out, _ = cli(capsys, "mis", "--graph", str(path), "--mode", "kernel")
        assert code == 0
        assert out == "kernel: 1 2 3\n"

    def test_cap_is_a_precondition(self, capsys, tmp_path):
        path = write_graph(tmp_path, "p10.el", gen_path(10))
        code, _, err = cli(capsys, "mis", "--graph", path, "--mode", "enumerate", "--cap", "3")
        assert code == 2
        assert err.startswith("error:cap:")


class TestHit:
    def test_low_degree_shortcut(self, capsys, c5_path):
        code, out, _ = cli(
            capsys, "hit", "--graph", c5_path, "--s", "2", "--t", "2",
            "--k", "2", "--theta", "1:2", "--delta", "0.9", "--seed", "7",
        )
        assert code == 0
        assert "mode: low-degree" in out
        assert "T: 0 1 4" in out

    def test_sampled_core_matches_library(self, capsys, c5_path):
        code, out, _ = cli(
            capsys, "hit", "--graph", c5_path, "--theta", "1:2", "--delta", "0.5", "--seed", "7",
        )
        assert code == 0
        g = load_graph(c5_path)
        sched = resolve_schedule(g, {"mode": "explicit", "s": 2, "t": 2, "k": 2,
                                     "delta": 0.5, "bins": [[1.0, 2.0]]})
        assert out == certificate_to_text(construct_hitting_set(g, sched, 7))
        assert "mode: sampled-core" in out

    def test_out_file_matches_stdout(self, capsys, tmp_path, c5_path):
        args = ("hit", "--graph", c5_path, "--theta", "1:2", "--delta", "0.5", "--seed", "7")
        _, stdout_text, _ = cli(capsys, *args)
        cert_path = tmp_path / "cert.txt"
        code, out, _ = cli(capsys, *args, "--out", str(cert_path))
        assert code == 0 and out == ""
        assert cert_path.read_text() == stdout_text

    def test_repeat_is_byte_identical(self, capsys, c5_path):
        args = ("hit", "--graph", c5_path, "--theta", "1:2", "--delta", "0.5", "--seed", "3")
        _, first, _ = cli(capsys, *args)
        _, second, _ = cli(capsys, *args)
        assert first == second

    def test_explicit_needs_theta(self, capsys, c5_path):
        code, _, err = cli(capsys, "hit", "--graph", c5_path, "--delta", "0.5")
        assert code == 1
        assert "explicit schedule needs" in err

    def test_bad_theta_syntax(self, capsys, c5_path):
        code, _, err = cli(capsys, "hit", "--graph", c5_path, "--theta", "1-2")
        assert code == 1
        assert "--theta expects" in err

    def test_asymptotic_is_infeasible(self, capsys, c5_path):
        code, _, err = cli(capsys, "hit", "--graph", c5_path, "--schedule", "asymptotic")
        assert code == 3
        assert err.startswith("error:infeasible:")

    def test_oversized_k_infeasible_then_trivial(self, capsys, c5_path):
        args = ("hit", "--graph", c5_path, "--k", "3", "--theta", "1:2", "--delta", "0.5")
        code, _, err = cli(capsys, *args)
        assert code == 3
        assert err.startswith("error:infeasible:")
        code, out, _ = cli(capsys, *args, "--allow-trivial")
        assert code == 0
        assert "mode: trivial" in out

    def test_freeness_violation_surfaces(self, capsys, c4_path):
        code, _, err = cli(
            capsys, "hit", "--graph", c4_path, "--theta", "1:2", "--delta", "0.4", "--seed", "0",
        )
        assert code == 2
        assert err.startswith("error:freeness:")


class TestVerify:
    def test_explicit_set_passes(self, capsys, c5_path):
        code, out, _ = cli(capsys, "verify", "--graph", c5_path, "--set", "0,2,3,4")
        assert code == 0
        assert out == "verified: true (5 maximum independent sets hit)\n"

    def test_explicit_set_fails_with_witness(self, capsys, c5_path):
        code, out, err = cli(capsys, "verify", "--graph", c5_path, "--set", "0,1")
        assert code == 4
        assert out == "missed: 2 4\n"
        assert err.startswith("error:verification:")

    def test_cert_round_trip(self, capsys, tmp_path, c5_path):
        cert_path = tmp_path / "cert.txt"
        cli(capsys, "hit", "--graph", c5_path, "--theta", "1:2", "--delta", "0.5",
            "--seed", "7", "--out", str(cert_path))
        code, out, _ = cli(capsys, "verify", "--graph", c5_path, "--cert", str(cert_path))
        assert code == 0
        assert "verified: true" in out

    def test_tampered_cert_is_invalid(self, capsys, tmp_path, c5_path):
        cert_path = tmp_path / "cert.txt"
        cli(capsys, "hit", "--graph", c5_path, "--theta", "1:2", "--delta", "0.5",
            "--seed", "7", "--out", str(cert_path))
        cert_path.write_text(cert_path.read_text().replace("T: 0 2 3 4", "T: 0 2 3"))
        code, _, err = cli(capsys, "verify", "--graph", c5_path, "--cert", str(cert_path))
        assert code == 4
        assert err.startswith("error:verification: certificate invalid")

    def test_garbage_cert_is_a_parse_error(self, capsys, tmp_path, c5_path):
        cert_path = tmp_path / "cert.txt"
        cert_path.write_text("not a certificate\n")
        code, _, err = cli(capsys, "verify", "--graph", c5_path, "--cert", str(cert_path))
        assert code == 1
        assert err.startswith("error:parse:")

    def test_needs_exactly_one_source(self, capsys, tmp_path, c5_path):
        code, _, err = cli(capsys, "verify", "--graph", c5_path)
        assert code == 1 and "exactly one" in err
        cert_path = tmp_path / "cert.txt"
        cert_path.write_text("x\n")
        code, _, err = cli(
            capsys, "verify", "--graph", c5_path, "--cert", str(cert_path), "--set", "0",
        )
        assert code == 1 and "exactly one" in err

    def test_set_id_validation(self, capsys, c5_path):
        code, _, err = cli(capsys, "verify", "--graph", c5_path, "--set", "0,x")
        assert code == 1
        code, _, err = cli(capsys, "verify", "--graph", c5_path, "--set", "0,9")
        assert code == 2
        assert err.startswith("error:precondition:")


class TestMinhit:
    def test_k4_needs_everything(self, capsys, k4_path):
        code, out, _ = cli(capsys, "minhit", "--graph", k4_path)
        assert code == 0
        assert out == "4\nwitness: 0 1 2 3\n"

    def test_c5(self, capsys, c5_path):
        code, out, _ = cli(capsys, "minhit", "--graph", c5_path)
        assert code == 0
        assert out == "3\nwitness: 0 1 2\n"


class TestSampleHit:
    def test_full_set_always_hits(self, capsys, c5_path):
        code, out, _ = cli(
            capsys, "sample-hit", "--graph", c5_path, "--p", "5", "--trials", "3",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p: 5"
        assert lines[1] == "trials: 3"
        assert lines[2] == "fail_rate: 0.0"
        assert lines[3] == "union_bound: 0.0"
        assert lines[4] == "hit_trial: 0"
        assert lines[5] == "hit: 0 1 2 3 4"

    def test_empty_sample_never_hits(self, capsys, c5_path):
        code, out, _ = cli(capsys, "sample-hit", "--graph", c5_path, "--p", "0")
        assert code == 0
        lines = out.splitlines()
        assert "fail_rate: 1.0" in lines
        assert lines[-2] == "hit_trial: -"
        assert lines[-1] == "hit: -"

    def test_certificate_out_verifies(self, capsys, tmp_path, c5_path):
        cert_path = tmp_path / "sample.cert"
        code, _, _ = cli(
            capsys, "sample-hit", "--graph", c5_path, "--p", "4", "--trials", "20",
            "--seed", "1", "--out", str(cert_path),
        )
        assert code == 0
        assert "mode: uniform-sample" in cert_path.read_text()
        code, out, _ = cli(capsys, "verify", "--graph", c5_path, "--cert", str(cert_path))
        assert code == 0

    def test_oversized_p(self, capsys, c5_path):
        code, _, err = cli(capsys, "sample-hit", "--graph", c5_path, "--p", "6")
        assert code == 2
        assert err.startswith("error:precondition:")


class TestDrc:
    def test_clique_trace(self, capsys, k4_path):
        code, out, _ = cli(capsys, "drc", "--graph", k4_path, "--alpha-density", "0.9")
        assert code == 0
        assert "branch: argmax" in out
        assert "clique: 0 1 2 3" in out

    def test_density_unmet(self, capsys, c5_path):
        code, _, err = cli(capsys, "drc", "--graph", c5_path, "--alpha-density", "0.9")
        assert code == 2
        assert err.startswith("error:precondition:")

    def test_induced_c4_rejected(self, capsys, c4_path):
        code, _, err = cli(capsys, "drc", "--graph", c4_path, "--alpha-density", "0.3")
        assert code == 2
        assert err.startswith("error:freeness:")

    def test_out_file(self, capsys, tmp_path, k4_path):
        trace_path = tmp_path / "trace.txt"
        code, out, _ = cli(
            capsys, "drc", "--graph", k4_path, "--alpha-density", "0.9", "--out", str(trace_path),
        )
        assert code == 0 and out == ""
        assert "branch: argmax" in trace_path.read_text()


class TestSchedule:
    def test_report_shape(self, capsys):
        code, out, _ = cli(capsys, "schedule", "--n", "1000000", "--s", "2")
        assert code == 0
        lines = out.splitlines()
        assert "feasible: false" in lines
        assert "bins: 4" in lines
        assert any(line.startswith("bin 1: log_k=") for line in lines)
        assert any(line.startswith("bin 1: log_bound_small=") for line in lines)

    def test_tiny_n_rejected(self, capsys):
        code, _, err = cli(capsys, "schedule", "--n", "2")
        assert code == 2
        assert err.startswith("error:precondition:")


class TestProb:
    def test_pinned_values(self, capsys):
        code, out, _ = cli(
            capsys, "prob", "--i-size", "10", "--d", "4", "--k", "3", "--s", "2",
        )
        assert code == 0
        assert out == "exact: 0.6666666666666666\nbinomial_form: 0.648\n"

    def test_precondition(self, capsys):
        code, _, err = cli(capsys, "prob", "--i-size", "4", "--d", "5", "--k", "2", "--s", "1")
        assert code == 2
        assert err.startswith("error:precondition:")


class TestMcE:
    def test_c5_is_deterministic(self, capsys, c5_path):
        code, out, _ = cli(capsys, "mc-e", "--graph", c5_path, "--trials", "5")
        assert code == 0
        assert out == "trials: 5\nmean: 2.0\nstd_error: 0.0\n"

    def test_k_must_fit_alpha(self, capsys, c5_path):
        code, _, err = cli(capsys, "mc-e", "--graph", c5_path, "--k", "3")
        assert code == 2
        assert "exceeds alpha" in err


class TestExperiment:
    CONFIG = {
        "families": [{"kind": "cluster", "sizes": [2, 2]}, {"kind": "path"}],
        "n_values": [6],
        "seeds": [1, 2],
        "schedule": {"mode": "auto", "s": 2, "t": 2, "k": 2},
    }

    @pytest.fixture
    def config_path(self, tmp_path):
        import json

        p = tmp_path / "exp.json"
        p.write_text(json.dumps(self.CONFIG))
        return str(p)

    def test_csv_to_stdout(self, capsys, config_path):
        code, out, _ = cli(capsys, "experiment", "--config", config_path)
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("schema,family,n,seed")
        assert len(lines) == 5
        assert all(line.endswith(",") for line in lines[1:])  # timings off

    def test_repeat_and_out_file_agree(self, capsys, tmp_path, config_path):
        _, first, _ = cli(capsys, "experiment", "--config", config_path)
        out_path = tmp_path / "rows.csv"
        code, out, _ = cli(capsys, "experiment", "--config", config_path, "--out", str(out_path))
        assert code == 0 and out == ""
        assert out_path.read_text() == first

    def test_include_timings(self, capsys, config_path):
        code, out, _ = cli(capsys, "experiment", "--config", config_path, "--include-timings")
        assert code == 0
        assert not any(line.endswith(",") for line in out.splitlines()[1:])

    def test_missing_config(self, capsys, tmp_path):
        code, _, err = cli(capsys, "experiment", "--config", str(tmp_path / "none.json"))
        assert code == 1
        assert err.startswith("error:config:")
