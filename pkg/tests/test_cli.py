"""Command-line surface: verbs, exit codes, and stable output formats."""

import json

import pytest

from blowup_coloring import (
    Coloring,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    defective_chromatic_number,
    empty_graph,
    is_d_defective,
    is_proper,
    path_graph,
    petersen_graph,
    read_coloring,
    read_graph,
    strong_product,
    write_coloring,
    write_graph,
)
from blowup_coloring.cli import main


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.col"
    write_graph(cycle_graph(5), str(path))
    return str(path)


def _write_witness(tmp_path, payload, name="w.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_chi_prints_value_and_writes_certificate(tmp_path, c5_file, capsys):
    cert = tmp_path / "cert.json"
    assert main(["chi", c5_file, "--out", str(cert)]) == 0
    assert capsys.readouterr().out == "3\n"
    coloring = read_coloring(str(cert))
    assert is_proper(cycle_graph(5), coloring)
    assert coloring.palette_size == 3


def test_chi_defective(tmp_path, c5_file, capsys):
    assert main(["chi-defective", c5_file, "--d", "1"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_chi_timeout_exit_code(tmp_path, capsys):
    path = tmp_path / "p.col"
    write_graph(petersen_graph(), str(path))
    assert main(["chi", str(path), "--budget-nodes", "2"]) == 3
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "timeout" in captured.err


def test_chi_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("what is this\n")
    assert main(["chi", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_missing_file_exit_code(tmp_path, capsys):
    assert main(["chi", str(tmp_path / "nope.col")]) == 2


def test_product_golden_output(tmp_path, capsys):
    path = tmp_path / "k1.col"
    write_graph(complete_graph(1), str(path))
    assert main(["product", str(path), "--t", "3"]) == 0
    out = capsys.readouterr().out
    assert out == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_product_bad_t(tmp_path, c5_file, capsys):
    assert main(["product", c5_file, "--t", "0"]) == 2


def test_construct_golden_output(tmp_path, capsys):
    witness = _write_witness(
        tmp_path,
        {"d": 1, "F": {"n": 3, "edges": [[0, 1], [1, 2]]},
         "lists": [[0, 1], [0, 1], [0, 1]]},
    )
    assert main(["construct", witness]) == 0
    captured = capsys.readouterr()
    assert captured.out == "p edge 5 3\ne 1 2\ne 2 3\ne 4 5\n"
    assert "k=2" in captured.err


def test_construct_names_offending_vertex(tmp_path, capsys):
    witness = _write_witness(
        tmp_path,
        {"d": 2, "F": {"n": 2, "edges": [[0, 1]]}, "lists": [[0, 1, 2], [0, 1]]},
    )
    assert main(["construct", witness]) == 2
    assert "vertex 1" in capsys.readouterr().err


def test_validate_witness_failing_color_degree(tmp_path, capsys):
    witness = _write_witness(
        tmp_path,
        {"d": 1, "F": {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
         "lists": [[0, 1], [0, 1], [0, 1]]},
    )
    assert main(["validate-witness", witness]) == 1
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0] == "list-sizes: PASS (min 2, need >= 2)"
    assert lines[1] == "color-degrees: FAIL (max 2, need <= 1)"
    assert lines[2] == "no-list-coloring: PASS (refuted exhaustively)"
    assert lines[3] == "palette-size: INFO (k=2, formula value 8 at d=1: mismatch)"


def test_validate_witness_colorable_fails_third_property(tmp_path, capsys):
    witness = _write_witness(
        tmp_path,
        {"d": 1, "F": {"n": 3, "edges": [[0, 1], [1, 2]]},
         "lists": [[0, 1], [0, 1], [0, 1]]},
    )
    assert main(["validate-witness", witness]) == 1
    assert "no-list-coloring: FAIL" in capsys.readouterr().out


def test_validate_witness_budget_unverified(tmp_path, capsys):
    witness = _write_witness(
        tmp_path,
        {"d": 1, "F": {"n": 6, "edges": [[0, 1], [2, 3], [4, 5]]},
         "lists": [[0, 1], [2, 3], [0, 2], [1, 3], [0, 3], [1, 2]]},
    )
    assert main(["validate-witness", witness, "--budget-nodes", "1"]) == 3
    assert "UNVERIFIED" in capsys.readouterr().out


def test_extract_pipeline_via_files(tmp_path, c5_file, capsys):
    blowup = strong_product(cycle_graph(5), 2).product
    base = defective_chromatic_number(blowup, 2)
    cfile = tmp_path / "base.json"
    write_coloring(base.certificate, str(cfile))
    out = tmp_path / "proper.json"
    rc = main(["extract", c5_file, "--d", "2", "--coloring", str(cfile),
               "--out", str(out)])
    assert rc == 0
    extracted = read_coloring(str(out))
    assert is_proper(cycle_graph(5), extracted)
    assert extracted.palette_size <= 2 * base.value


def test_extract_rejects_non_defective_input(tmp_path, c5_file, capsys):
    cfile = tmp_path / "bad.json"
    write_coloring(Coloring([0] * 10), str(cfile))
    assert main(["extract", c5_file, "--d", "2", "--coloring", str(cfile)]) == 2
    assert "defect" in capsys.readouterr().err


def test_join_lift_via_files(tmp_path, c5_file, capsys):
    base = defective_chromatic_number(strong_product(cycle_graph(5), 2).product, 1)
    cfile = tmp_path / "c0.json"
    write_coloring(base.certificate, str(cfile))
    out_c = tmp_path / "lifted.json"
    out_g = tmp_path / "joined.col"
    rc = main([
        "join-lift", c5_file, "--coloring", str(cfile), "--m", "2", "--d", "3",
        "--out", str(out_c), "--out-graph", str(out_g),
    ])
    assert rc == 0
    joined = read_graph(str(out_g))
    lifted = read_coloring(str(out_c))
    assert joined.n == 10
    assert is_d_defective(strong_product(joined, 4).product, lifted, 3)
    assert lifted.palette_size == 6


def test_join_lift_divisibility_error(tmp_path, c5_file, capsys):
    base = defective_chromatic_number(strong_product(cycle_graph(5), 2).product, 1)
    cfile = tmp_path / "c0.json"
    write_coloring(base.certificate, str(cfile))
    assert main(["join-lift", c5_file, "--coloring", str(cfile),
                 "--m", "2", "--d", "2"]) == 2


def test_lift_roundtrip(tmp_path, capsys):
    path = tmp_path / "p3.col"
    write_graph(path_graph(3), str(path))
    cfile = tmp_path / "proper.json"
    write_coloring(Coloring([0, 1, 0]), str(cfile))
    assert main(["lift", str(path), "--coloring", str(cfile), "--t", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"n": 6, "colors": [0, 0, 1, 1, 0, 0]}


def test_lift_rejects_improper(tmp_path, capsys):
    path = tmp_path / "k2.col"
    write_graph(complete_graph(2), str(path))
    cfile = tmp_path / "mono.json"
    write_coloring(Coloring([0, 0]), str(cfile))
    assert main(["lift", str(path), "--coloring", str(cfile), "--t", "2"]) == 2


def test_scan_csv_golden(capsys):
    assert main(["scan", "--n-max", "2", "--d", "1", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == [
        "id,n,m,d,chi,chi_def_blowup,ratio_num,ratio_den,ratio",
        "1-294634710878,1,0,1,1,1,1,1,1.000000",
        "2-797fce3602ce,2,0,1,1,1,1,1,1.000000",
        "2-ed5cce4a2066,2,1,1,2,2,1,1,1.000000",
    ]


def test_scan_json_format(capsys):
    assert main(["scan", "--n-max", "2", "--d", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["equality_count"] == len(payload["records"]) == 3
    assert payload["max_ratio"] == [1, 1]
    assert payload["skipped"] == []


def test_scan_text_summary(capsys):
    assert main(["scan", "--n-max", "3", "--d", "1"]) == 0
    out = capsys.readouterr().out
    assert "solved 7 graphs, skipped 0" in out
    assert "equality in 7/7 cases" in out


def test_hoffman_golden_values(tmp_path, capsys):
    k33 = tmp_path / "k33.col"
    write_graph(complete_bipartite_graph(3, 3), str(k33))
    assert main(["hoffman", str(k33)]) == 0
    assert capsys.readouterr().out == "2.000000000\n"

    c5 = tmp_path / "c5.col"
    write_graph(cycle_graph(5), str(c5))
    assert main(["hoffman", str(c5)]) == 0
    assert capsys.readouterr().out == "2.236067977\n"


def test_hoffman_edgeless_convention(tmp_path, capsys):
    path = tmp_path / "e3.col"
    write_graph(empty_graph(3), str(path))
    assert main(["hoffman", str(path)]) == 0
    captured = capsys.readouterr()
    assert captured.out == "1.000000000\n"
    assert "convention" in captured.err


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
