"""Analysis pipeline producing one structured report per input."""

from __future__ import annotations

import time
from fractions import Fraction

from .analysis import (
    CRQInput,
    cocr_images_triple_test,
    decide,
    decompose_cr,
    e_lower_of_input,
    e_upper_of_input,
    f_detect,
    filtration_w1,
    filtration_w2,
    full_witness,
    splitting_type_cocr,
    splitting_type_cr,
)
from .documents import matrix_to_obj, subspace_to_obj, twistor_to_obj
from .errors import ContractError, WitnessBudgetError
from .gaussian import format_rat

REPORT_FORMAT = "crquat.report.v1"


def analyze_input(inp: CRQInput, alpha=None, budget: int = 200) -> dict:
    """Run the full battery on one input and collect a report object.

    Structural impossibility raises ContractError; a negative decision is a
    completed analysis with the classification fields left null.
    """
    started = time.perf_counter()
    dec = decide(inp)
    if dec.status == "impossible":
        raise ContractError(dec.reason)
    report = {
        "format": REPORT_FORMAT,
        "input": {"k": inp.k, "role": inp.role, "dim_u": inp.dim_u, "l": inp.l},
        "decision": {
            "accepted": dec.status == "yes",
            "witness": twistor_to_obj(dec.witness),
        },
        "splitting_type": None,
        "decomposition": None,
        "filtration": None,
        "e_lower": None,
        "e_upper": None,
        "f_certificate": None,
        "triple_images_zero": None,
        "witness_search": None,
    }
    report["e_lower"] = subspace_to_obj(e_lower_of_input(inp))
    report["e_upper"] = subspace_to_obj(e_upper_of_input(inp))
    if inp.role == "cr":
        report["filtration"] = {
            "w1": subspace_to_obj(filtration_w1(inp)),
            "w2": subspace_to_obj(filtration_w2(inp)),
        }
    if dec.status == "yes":
        if inp.role == "cr":
            st = splitting_type_cr(inp)
            report["splitting_type"] = [list(pair) for pair in st]
            dc = decompose_cr(inp)
            report["decomposition"] = {
                "tags": [[kind, idx, count] for kind, idx, count in dc.tags],
                "filtration_dims": list(dc.filtration_dims),
            }
            cert = f_detect(inp)
            if cert is not None:
                report["f_certificate"] = {
                    "v_basis": matrix_to_obj(cert.V.basis),
                    "w_dim": cert.W.dim,
                    "qv_dim": cert.QV.dim,
                }
            if alpha is not None:
                try:
                    point, u, v = full_witness(inp, alpha, budget=budget)
                    report["witness_search"] = {
                        "point": twistor_to_obj(point),
                        "u": [format_rat(Fraction(x)) for x in u],
                        "v": [format_rat(Fraction(x)) for x in v],
                    }
                except WitnessBudgetError as exc:
                    report["witness_search"] = {"budget_exhausted": exc.attempts}
        else:
            st = splitting_type_cocr(inp)
            report["splitting_type"] = [list(pair) for pair in st]
            report["triple_images_zero"] = cocr_images_triple_test(inp)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    report["timings"] = {"total_ms": elapsed_ms}
    return report


def render_text(report: dict) -> str:
    """Human rendering of a machine report (same data, fixed order)."""
    lines = []
    inp = report.get("input", {})
    lines.append(
        "input: k=%s role=%s dim=%s codim/l=%s"
        % (inp.get("k"), inp.get("role"), inp.get("dim_u"), inp.get("l"))
    )
    dec = report.get("decision", {})
    if dec.get("accepted"):
        lines.append("decision: accepted")
    else:
        lines.append("decision: rejected (witness %s)" % _point_str(dec.get("witness")))
    st = report.get("splitting_type")
    if st is not None:
        lines.append("splitting type: " + " + ".join(_summand_str(d, m) for d, m in st))
    dc = report.get("decomposition")
    if dc:
        tags = ", ".join("%s_%d x%d" % (kind, idx, n) for kind, idx, n in dc["tags"])
        lines.append("decomposition: {%s}" % tags)
        lines.append("filtration dims: %s" % (dc["filtration_dims"],))
    flt = report.get("filtration")
    if flt:
        lines.append("w1 dim: %d, w2 dim: %d" % (flt["w1"]["dim"], flt["w2"]["dim"]))
    if report.get("e_lower") is not None:
        lines.append(
            "quaternionic envelope dims: lower %d, upper %d"
            % (report["e_lower"]["dim"], report["e_upper"]["dim"])
        )
    cert = report.get("f_certificate")
    lines.append("compatible complement: %s" % ("found (dim %d core part W)" % cert["w_dim"] if cert else "none"))
    trip = report.get("triple_images_zero")
    if trip is not None:
        lines.append("triple image intersection zero: %s" % trip)
    ws = report.get("witness_search")
    if ws is not None:
        if "budget_exhausted" in ws:
            lines.append("sign witness: budget exhausted after %d attempts" % ws["budget_exhausted"])
        else:
            lines.append("sign witness at %s" % _point_str(ws["point"]))
    return "\n".join(lines) + "\n"


def _summand_str(deg: int, mult: int) -> str:
    return "O(%d)" % deg if mult == 1 else "%dO(%d)" % (mult, deg)


def _point_str(obj) -> str:
    if obj is None:
        return "none"
    z0, z1 = obj["z0"], obj["z1"]
    if z1 == ["0", "0"]:
        return "[1:0]"
    if z0[1] == "0":
        return "zeta=%s" % z0[0]
    return "zeta=%s+%si" % (z0[0], z0[1])
