import json

import pytest

from wdag.cli import main

FIG_GRAPH = {
    "omega": [2, 3, 3, 3],
    "edges": [
        {"from": 1, "to": 2, "weight": "10"},
        {"from": 1, "to": 4, "weight": "11"},
        {"from": 4, "to": 2, "weight": "111"},
        {"from": 4, "to": 3, "weight": "101"},
    ],
}


@pytest.fixture
def fig_path(tmp_path):
    path = tmp_path / "fig.json"
    path.write_text(json.dumps(FIG_GRAPH))
    return str(path)


class TestCount:
    def test_dj_unit_dimensions(self, capsys):
        assert main(["count", "dj", "--omega", "1,1,1"]) == 0
        assert capsys.readouterr().out == "25\n"

    def test_dj_brute_cross_check(self, capsys):
        assert main(["count", "dj", "--omega", "1,2", "--brute"]) == 0
        out, err = capsys.readouterr()
        assert out == "5\n"
        assert "formula+brute" in err

    def test_weak_formula(self, capsys):
        assert main(["count", "weak", "--omega", "1,2"]) == 0
        out, err = capsys.readouterr()
        assert out == "3\n"
        assert "source: formula" in err

    def test_weak_brute_agreement(self, capsys):
        assert main(["count", "weak", "--omega", "1,2", "--brute"]) == 0
        out, err = capsys.readouterr()
        assert out == "3\n"
        assert "source: brute" in err

    def test_weak_brute_reports_display_defect(self, capsys):
        # The printed three-vertex display misses swap identifications at
        # (1,1,2); enumeration is authoritative and the mismatch exits 1.
        assert main(["count", "weak", "--omega", "1,1,2", "--brute"]) == 1
        out, err = capsys.readouterr()
        assert out == "14\n"
        assert "closed form gives 13" in err

    def test_weak_four_vertices_is_brute(self, capsys):
        assert main(["count", "weak", "--omega", "1,1,1,1"]) == 0
        out, err = capsys.readouterr()
        assert "source: brute" in err
        assert int(out) > 0

    def test_weak_three_distinct_formula(self, capsys):
        assert main(["count", "weak", "--omega", "1,2,3"]) == 0
        out, err = capsys.readouterr()
        assert out == "48\n"
        assert "source: formula" in err

    def test_dj_vertex_cap_exits_one(self, capsys):
        assert main(["count", "dj", "--omega", "1,1,1,1,1,1,1"]) == 1
        assert "capped" in capsys.readouterr().err


class TestEnumerate:
    def test_counts_and_order(self, capsys):
        assert main(["enumerate", "--omega", "2,3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2**2 + 2**3 - 1
        docs = [json.loads(line) for line in lines]
        assert all(doc["omega"] == [2, 3] for doc in docs)

    def test_limit(self, capsys):
        assert main(["enumerate", "--omega", "2,3", "--limit", "3"]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 3

    def test_budget_exceeded_exits_one(self, capsys):
        assert main(["enumerate", "--omega", "6,6,6,6"]) == 1
        err = capsys.readouterr().err
        assert "budget" in err


class TestApply:
    def test_sigma_k_lc_golden(self, capsys, fig_path):
        assert (
            main(
                [
                    "apply",
                    "--op",
                    "sigma-k-lc",
                    "--vertex",
                    "4",
                    "--sigma",
                    "2,3,1",
                    "--k",
                    "2",
                    "--input",
                    fig_path,
                ]
            )
            == 0
        )
        doc = json.loads(capsys.readouterr().out)
        assert doc == {
            "omega": [2, 3, 3, 3],
            "edges": [
                {"from": 1, "to": 2, "weight": "01"},
                {"from": 1, "to": 4, "weight": "11"},
                {"from": 4, "to": 2, "weight": "100"},
                {"from": 4, "to": 3, "weight": "011"},
            ],
        }

    def test_sigma_lc_golden(self, capsys, fig_path):
        assert (
            main(
                [
                    "apply",
                    "--op",
                    "sigma-lc",
                    "--vertex",
                    "4",
                    "--sigma",
                    "2,3,1",
                    "--input",
                    fig_path,
                ]
            )
            == 0
        )
        doc = json.loads(capsys.readouterr().out)
        assert {"from": 1, "to": 3, "weight": "11"} in doc["edges"]

    def test_op_json_sequence_round_trip(self, capsys, fig_path):
        ops = json.dumps(
            [
                {"op": "sigma-k-lc", "vertex": 4, "sigma": [1, 2, 3], "k": 2},
                {"op": "sigma-k-lc", "vertex": 4, "sigma": [1, 2, 3], "k": 2},
            ]
        )
        assert main(["apply", "--op-json", ops, "--input", fig_path]) == 0
        assert json.loads(capsys.readouterr().out) == FIG_GRAPH

    def test_reorder(self, capsys, fig_path):
        assert (
            main(
                ["apply", "--op", "reorder", "--mu", "1,3,2,4", "--input", fig_path]
            )
            == 0
        )
        doc = json.loads(capsys.readouterr().out)
        assert {"from": 4, "to": 2, "weight": "101"} in doc["edges"]

    def test_unknown_op_usage_error(self, capsys, fig_path):
        assert main(["apply", "--op-json", '{"op": "zap"}', "--input", fig_path]) == 2
        assert "usage error" in capsys.readouterr().err

    def test_missing_op(self, capsys, fig_path):
        assert main(["apply", "--input", fig_path]) == 2

    def test_malformed_json_position(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"omega": [1, 1]\n')
        assert main(["apply", "--op", "lc", "--vertex", "1", "--input", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "line 2" in err and "column" in err

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(FIG_GRAPH)))
        assert main(["apply", "--op", "lc", "--vertex", "1", "--input", "-"]) == 0
        assert json.loads(capsys.readouterr().out) == FIG_GRAPH


class TestOrbit:
    def test_single_edge_orbit(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(
            json.dumps(
                {"omega": [1, 1], "edges": [{"from": 1, "to": 2, "weight": "1"}]}
            )
        )
        assert main(["orbit", "--input", str(path), "--members"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["size"] == 2
        assert len(doc["members"]) == 2
        assert doc["canonical"] == doc["members"][0]

    def test_without_members(self, capsys, fig_path):
        assert main(["orbit", "--input", fig_path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert "members" not in doc
        assert doc["size"] > 1


class TestVerify:
    def test_identities_suite(self, capsys):
        assert main(["verify", "--suite", "identities", "--max-n", "6"]) == 0
        out = capsys.readouterr().out
        assert "all checks passed" in out
        assert "FAIL" not in out

    def test_roundtrip_suite(self, capsys):
        assert main(["verify", "--suite", "roundtrip", "--max-n", "3"]) == 0
        assert "FAIL" not in capsys.readouterr().out

    def test_burnside_suite(self, capsys):
        assert main(["verify", "--suite", "burnside", "--max-n", "3"]) == 0
        assert "FAIL" not in capsys.readouterr().out


class TestTable:
    def test_stirling_csv(self, capsys):
        assert main(["table", "--family", "stirling", "--max", "3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "kind,n,m,value"
        assert "c,3,2,3" in lines

    def test_c2_csv(self, capsys):
        assert main(["table", "--family", "c2", "--max", "4"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert "c2,4,2,3" in lines

    def test_cnme_has_e_column(self, capsys):
        assert main(["table", "--family", "cnme", "--max", "4"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "kind,n,m,e,value"
        assert "cnme,4,2,0,8" in lines

    def test_three_simplices(self, capsys):
        assert main(["table", "--family", "three-simplices", "--max", "2"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n1,n2,n3,total,branch"
        assert "1,1,1,5,all-equal" in lines
        assert "2,2,2,8,all-equal" in lines

    def test_json_format(self, capsys):
        assert (
            main(["table", "--family", "stirling", "--max", "2", "--format", "json"])
            == 0
        )
        rows = json.loads(capsys.readouterr().out)
        assert {"kind": "c", "n": 2, "m": 1, "value": 1} in rows

    def test_deterministic_output(self, capsys):
        main(["table", "--family", "three-simplices", "--max", "3"])
        first = capsys.readouterr().out
        main(["table", "--family", "three-simplices", "--max", "3"])
        assert capsys.readouterr().out == first


class TestUsage:
    def test_missing_verb(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_bad_omega(self, capsys):
        assert main(["count", "dj", "--omega", "1,x"]) == 2
        assert "invalid dimension list" in capsys.readouterr().err
