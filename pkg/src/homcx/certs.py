"""Certificate loading and independent re-verification.

The verifier trusts nothing in the file beyond the embedded graphs: chi
values, homology profiles, and the Z_2 flags are all recomputed and
compared field by field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

from .coloring import DEFAULT_NODE_BUDGET, chromatic_number
from .constructions import (
    FamilyMember,
    _verify_member,
    cylinder_sweep_order,
    uniformly_small_m,
)
from .errors import GraphFormatError, ResourceLimitError
from .graphs import Graph, GraphHom
from .homology import HomologyProfile
from .homs import DEFAULT_CELL_CAP


@dataclass(frozen=True)
class LoadedCertificate:
    family: tuple[FamilyMember, ...]
    n: int
    m: int
    seed: int
    chi_x: object
    chi_h: object
    g: Graph
    x: Optional[Graph]
    y: Optional[Graph]
    h: Graph
    f: Optional[GraphHom]
    gmap: Optional[GraphHom]
    embed_x: Optional[GraphHom]
    embed_g: GraphHom
    a_vertices: tuple[int, ...]
    b_vertices: tuple[int, ...]
    profiles: dict
    z2: dict
    verdict: str


def _chi_from_json(value):
    if value == "inf":
        return math.inf
    if not isinstance(value, int):
        raise GraphFormatError("chi field must be an integer or 'inf'")
    return value


def load_certificate(text: str) -> LoadedCertificate:
    """Parse and structurally validate a certificate; raises
    GraphFormatError on anything malformed."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise GraphFormatError("certificate must be a JSON object")
    try:
        family = []
        for entry in obj["family"]:
            graph = Graph.from_json_obj(entry["graph"])
            inv = entry.get("involution")
            hom = None if inv is None else GraphHom(graph, graph, inv)
            family.append(FamilyMember(entry["name"], graph, hom))
        graphs = obj["graphs"]
        g = Graph.from_json_obj(graphs["G"])
        x = None if graphs["X"] is None else Graph.from_json_obj(graphs["X"])
        y = None if graphs["Y"] is None else Graph.from_json_obj(graphs["Y"])
        h = Graph.from_json_obj(graphs["H"])
        maps = obj["maps"]
        f = None if maps["f"] is None else GraphHom(y, x, maps["f"])
        gmap = None if maps["g"] is None else GraphHom(y, g, maps["g"])
        embed_x = (
            None
            if maps["embedX"] is None
            else GraphHom(x, h, maps["embedX"])
        )
        embed_g = GraphHom(g, h, maps["embedG"])
        return LoadedCertificate(
            family=tuple(family),
            n=int(obj["n"]),
            m=int(obj["m"]),
            seed=int(obj["seed"]),
            chi_x=_chi_from_json(obj["chiX"]),
            chi_h=_chi_from_json(obj["chiH"]),
            g=g,
            x=x,
            y=y,
            h=h,
            f=f,
            gmap=gmap,
            embed_x=embed_x,
            embed_g=embed_g,
            a_vertices=tuple(obj["parts"]["A"]),
            b_vertices=tuple(obj["parts"]["B"]),
            profiles=obj["profiles"],
            z2=obj["z2"],
            verdict=obj["verdict"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed certificate: {exc!r}") from exc


def verify_certificate(
    cert: LoadedCertificate,
    cell_cap: int = DEFAULT_CELL_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[str]:
    """Recompute every claim; returns the list of failing fields."""
    problems: list[str] = []

    if cert.m != uniformly_small_m([t.graph for t in cert.family]):
        problems.append("m")

    if cert.g.has_loop():
        if cert.h != cert.g:
            problems.append("graphs.H (looped input must give H = G)")
        if cert.chi_x != math.inf or cert.chi_h != math.inf:
            problems.append("chiX/chiH (looped input)")
    else:
        if cert.x is None or cert.y is None:
            problems.append("graphs.X/graphs.Y missing")
            return problems
        if cert.embed_x is None or len(set(cert.embed_x.mapping)) != cert.x.n:
            problems.append("maps.embedX (not an embedding)")
        if len(set(cert.embed_g.mapping)) != cert.g.n:
            problems.append("maps.embedG (not an embedding)")
        chi_x = chromatic_number(cert.x, node_budget)
        if chi_x != cert.chi_x:
            problems.append("chiX")
        sweep = cylinder_sweep_order(cert.x.n, cert.y, cert.g.n, cert.m)
        if sorted(sweep) == list(range(cert.h.n)):
            chi_h = chromatic_number(cert.h, node_budget, order_hint=sweep)
        else:
            chi_h = chromatic_number(cert.h, node_budget)
        if chi_h != cert.chi_h:
            problems.append("chiH")
        if not (cert.chi_h >= cert.chi_x > cert.n):
            problems.append("chiH >= chiX > n")

    z2_triples = []
    skipped = False
    for member in cert.family:
        claimed = cert.profiles.get(member.name)
        if claimed is None:
            problems.append(f"profiles.{member.name} missing")
            continue
        if claimed == "unverified":
            skipped = True
            continue
        try:
            report = _verify_member(
                member, cert.g, cert.h, cert.embed_g, cell_cap
            )
        except ResourceLimitError:
            problems.append(f"profiles.{member.name} (cap exceeded)")
            continue
        for side, profile in (("G", report.profile_g), ("H", report.profile_h)):
            if HomologyProfile.from_json_obj(claimed[side]) != profile:
                problems.append(f"profiles.{member.name}.{side}")
        if report.profile_g != report.profile_h:
            problems.append(f"profiles.{member.name} (G and H differ)")
        if report.z2 is not None:
            z2_triples.append(report.z2)
            if not all(report.z2):
                problems.append(f"z2.{member.name}")

    if z2_triples:
        expected_z2 = {
            "free_G": all(t[0] for t in z2_triples),
            "free_H": all(t[1] for t in z2_triples),
            "equivariant": all(t[2] for t in z2_triples),
        }
    else:
        expected_z2 = {"free_G": None, "free_H": None, "equivariant": None}
    if cert.z2 != expected_z2:
        problems.append("z2")

    if problems:
        expected_verdict = "failed"
    elif skipped:
        expected_verdict = "partial"
    else:
        expected_verdict = "consistent"
    if cert.verdict != expected_verdict and not problems:
        problems.append("verdict")
    return problems
