"""Certificate verification and the command line interface."""

import json
import math

import pytest

from homcx.builders import complete_graph, cycle_graph
from homcx.certs import load_certificate, verify_certificate
from homcx.cli import main
from homcx.constructions import (
    FamilyMember,
    certificate_json,
    theorem51_pipeline,
)
from homcx.errors import GraphFormatError
from homcx.graphs import Graph


@pytest.fixture(scope="module")
def looped_cert_text():
    fam = [FamilyMember("K2", complete_graph(2))]
    loop = Graph(3, [(0, 1), (1, 2), (1, 1)])
    return certificate_json(theorem51_pipeline(fam, loop, 2))


def test_load_round_trip(looped_cert_text):
    cert = load_certificate(looped_cert_text)
    assert cert.verdict == "consistent"
    assert cert.chi_h == math.inf
    assert cert.family[0].name == "K2"


def test_verify_clean_certificate(looped_cert_text):
    cert = load_certificate(looped_cert_text)
    assert verify_certificate(cert) == []


def test_verify_detects_tampered_chi(looped_cert_text):
    obj = json.loads(looped_cert_text)
    obj["chiH"] = 4
    problems = verify_certificate(load_certificate(json.dumps(obj)))
    assert problems


def test_verify_detects_tampered_m(looped_cert_text):
    obj = json.loads(looped_cert_text)
    obj["m"] = 12
    problems = verify_certificate(load_certificate(json.dumps(obj)))
    assert "m" in problems


def test_verify_detects_tampered_verdict(looped_cert_text):
    obj = json.loads(looped_cert_text)
    obj["verdict"] = "failed"
    problems = verify_certificate(load_certificate(json.dumps(obj)))
    assert "verdict" in problems


def test_load_rejects_malformed():
    with pytest.raises(GraphFormatError):
        load_certificate("{not json")
    with pytest.raises(GraphFormatError):
        load_certificate('{"family": []}')


def graph_file(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(g.to_json())
    return str(path)


def test_cli_hom_prints_profile(tmp_path, capsys):
    t = graph_file(tmp_path, "k2.json", complete_graph(2))
    g = graph_file(tmp_path, "c5.json", cycle_graph(5))
    assert main(["hom", t, g, "--homology"]) == 0
    out = capsys.readouterr().out
    assert "betti: [1, 1]" in out


def test_cli_hom_all_sections(tmp_path, capsys):
    t = graph_file(tmp_path, "k2.json", complete_graph(2))
    g = graph_file(tmp_path, "c5.json", cycle_graph(5))
    assert main(["hom", t, g]) == 0
    out = capsys.readouterr().out
    assert "cells: 20" in out
    assert "betti:" in out
    assert "x-homotopy classes: 1" in out


def test_cli_hom_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("nonsense")
    g = graph_file(tmp_path, "c5.json", cycle_graph(5))
    assert main(["hom", str(bad), g]) == 2


def test_cli_hom_missing_file(tmp_path):
    g = graph_file(tmp_path, "c5.json", cycle_graph(5))
    assert main(["hom", str(tmp_path / "nope.json"), g]) == 2


def test_cli_construct_bipartite_exit_code(tmp_path):
    fam = graph_file(tmp_path, "k2.json", complete_graph(2))
    g = graph_file(tmp_path, "c6.json", cycle_graph(6))
    code = main(
        ["construct", "--family", fam, "--g", g, "--n", "2",
         "--out", str(tmp_path / "cert.json")]
    )
    assert code == 4


def test_cli_construct_and_verify_looped(tmp_path, capsys):
    fam = graph_file(tmp_path, "k2.json", complete_graph(2))
    loop = graph_file(tmp_path, "loop.json", Graph(2, [(0, 0), (0, 1)]))
    out = str(tmp_path / "cert.json")
    assert main(
        ["construct", "--family", fam, "--g", loop, "--n", "2", "--out", out]
    ) == 0
    capsys.readouterr()
    assert main(["verify", out]) == 0
    assert "PASS" in capsys.readouterr().out


def test_cli_verify_tampered_fails(tmp_path, capsys, looped_cert_text):
    obj = json.loads(looped_cert_text)
    obj["chiX"] = 3
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(obj))
    assert main(["verify", str(path)]) == 5
    assert "FAIL" in capsys.readouterr().out


def test_cli_verify_malformed_exit_code(tmp_path):
    path = tmp_path / "cert.json"
    path.write_text("{}")
    assert main(["verify", str(path)]) == 2


def test_cli_family_file_with_involution(tmp_path, capsys):
    c5 = cycle_graph(5)
    fam_obj = {
        "name": "C5",
        "graph": json.loads(c5.to_json()),
        "involution": [0, 4, 3, 2, 1],
    }
    fam = tmp_path / "c5_refl.json"
    fam.write_text(json.dumps(fam_obj))
    loop = graph_file(tmp_path, "loop.json", Graph(2, [(0, 0), (0, 1)]))
    out = str(tmp_path / "cert.json")
    # a flipping involution cannot act freely over a looped target, so
    # the run reports failure; the family file must still round-trip
    assert main(
        ["construct", "--family", str(fam), "--g", loop, "--n", "2",
         "--out", out]
    ) == 5
    cert = load_certificate((tmp_path / "cert.json").read_text())
    assert cert.family[0].involution is not None
    assert cert.verdict == "failed"


def test_cli_cap_env(tmp_path, monkeypatch):
    monkeypatch.setenv("HOMCX_CAP", "2")
    t = graph_file(tmp_path, "k2.json", complete_graph(2))
    g = graph_file(tmp_path, "c5.json", cycle_graph(5))
    assert main(["hom", t, g]) == 3


def test_cli_cap_env_invalid(tmp_path, monkeypatch):
    monkeypatch.setenv("HOMCX_CAP", "lots")
    t = graph_file(tmp_path, "k2.json", complete_graph(2))
    assert main(["hom", t, t]) == 2
