"""Command-line front end.

    python -m spectralcurves bc-ideal --op @space_curve_example
    python -m spectralcurves factor-at --op @space_curve_example --point 0,1,-1

Exit status: 0 on success, 1 when a mathematical check fails (the report
carries the certificate), 2 on usage or parse errors.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from pathlib import Path

from .arith import TAU, Frac, MPoly, format_poly
from .diffop import D, commutator, right_divmod
from .ideals import buchberger, constant_certify, projection_data
from .parsing import ParseError, parse_frac, parse_operator_text, parse_poly
from .resultants import dres, subres1
from . import spectral

COMMANDS = ("check-commute", "dres", "subres", "bc-pair", "bc-ideal", "groebner",
            "factor", "factor-at", "eval-param")

# (minimum, maximum) number of operators per command
ARITY = {
    "check-commute": (2, None),
    "dres": (2, 2),
    "subres": (2, 2),
    "bc-pair": (2, 2),
    "bc-ideal": (3, 3),
    "groebner": (0, 3),
    "factor": (3, 3),
    "factor-at": (3, 3),
    "eval-param": (3, 3),
}


class UsageError(Exception):
    pass


class MathFailure(Exception):
    """Mathematical check failed; ``report`` is the certificate."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


@dataclass
class JobSpec:
    command: str
    operators: list = field(default_factory=list)
    polys: list = field(default_factory=list)
    point: tuple = None
    param: tuple = None
    output_mode: str = "text"
    vars: tuple = ("lam", "mu1")

    def validate(self):
        if self.command not in ARITY:
            raise UsageError(f"unknown command {self.command!r}")
        lo, hi = ARITY[self.command]
        n = len(self.operators)
        if n < lo or (hi is not None and n > hi):
            want = f"{lo}" if lo == hi else (f"at least {lo}" if hi is None else f"{lo} to {hi}")
            raise UsageError(f"{self.command} needs {want} operators, got {n}")
        if self.command == "groebner" and n not in (0, 3):
            raise UsageError("groebner takes either --poly generators or three operators")
        if self.command == "groebner" and n == 0 and not self.polys:
            raise UsageError("groebner needs --poly generators or three operators")
        if self.command == "factor-at" and self.point is None:
            raise UsageError("factor-at needs --point a,b,c")
        if self.command == "eval-param" and self.param is None:
            raise UsageError("eval-param needs --param 'f_lam;f_mu1;f_mu2'")
        if self.output_mode not in ("text", "structured"):
            raise UsageError("--format must be text or structured")
        return self


# -- input handling ----------------------------------------------------------


def _fixture(name):
    path = resources.files("spectralcurves").joinpath("data", name)
    if path.is_file():
        return path
    if not name.endswith(".ops"):
        return _fixture(name + ".ops")
    return None


def read_operator_file(text):
    """One operator per line; blank lines and ``#`` comments are skipped."""
    ops = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if body.strip():
            ops.append(parse_operator_text(body, lineno))
    return ops


def load_operators(items):
    ops = []
    for item in items:
        if item.startswith("@"):
            name = item[1:]
            path = Path(name)
            if not path.is_file():
                path = _fixture(name)
                if path is None:
                    raise UsageError(f"no such operator file: {name}")
            ops.extend(read_operator_file(path.read_text()))
        else:
            ops.append(parse_operator_text(item))
    return ops


def parse_point(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError("--point needs three comma-separated rationals")
    vals = []
    for part in parts:
        f = parse_frac(part)
        if not f.is_constant():
            raise UsageError(f"point coordinate {part!r} is not a rational number")
        vals.append(f.num.constant_value() / f.den.constant_value())
    return tuple(vals)


def parse_param(text):
    parts = text.split(";")
    if len(parts) != 3:
        raise UsageError("--param needs three ';'-separated expressions in tau")
    out = []
    for part in parts:
        f = parse_frac(part)
        if f.variables() - {TAU}:
            raise UsageError(f"parametrization entry {part!r} may only involve tau")
        out.append(f)
    return tuple(out)


def job_from_args(argv):
    parser = build_parser()
    ns = parser.parse_args(argv)
    ops = load_operators(ns.op or [])
    polys = [parse_poly(p) for p in (ns.poly or [])]
    point = parse_point(ns.point) if ns.point else None
    param = parse_param(ns.param) if ns.param else None
    vars_ = tuple(v.strip() for v in ns.vars.split(","))
    if len(vars_) != 2:
        raise UsageError("--vars needs two names, e.g. lam,mu1")
    return JobSpec(ns.command, ops, polys, point, param, ns.format, vars_).validate()


def build_parser():
    p = argparse.ArgumentParser(
        prog="spectralcurves",
        description="Spectral curves and right factors of commuting differential operators.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--op", action="append",
                   help="operator expression, or @file with one operator per line "
                        "(@space_curve_example selects the bundled fixture)")
    p.add_argument("--poly", action="append", help="polynomial generator (groebner)")
    p.add_argument("--point", help="rational point lambda0,eta1,eta2")
    p.add_argument("--param", help="parametrization 'f_lam;f_mu1;f_mu2' in tau")
    p.add_argument("--vars", default="lam,mu1", help="spectral variables for bc-pair")
    p.add_argument("--format", default="text", choices=("text", "structured"))
    return p


# -- commands ----------------------------------------------------------------


def _s(x):
    if isinstance(x, MPoly):
        return format_poly(x)
    return str(x)


def _basis(job):
    try:
        return spectral.verify_basis(*job.operators)
    except spectral.CommutatorError as e:
        raise MathFailure(str(e), {"error": e.code, "pair": list(e.pair),
                                   "commutator": _s(e.commutator)}) from None
    except spectral.BasisError as e:
        raise MathFailure(str(e), {"error": e.code}) from None


def _model(job):
    basis = _basis(job)
    try:
        return basis, spectral.build_curve_model(basis)
    except spectral.CurveModelError as e:
        rep = {"error": e.code}
        rep.update({k: _s(v) if not hasattr(v, "gens") else [_s(g) for g in v.gens]
                    for k, v in e.partial.items()})
        raise MathFailure(str(e), rep) from None


def cmd_check_commute(job):
    names = [f"op{i + 1}" for i in range(len(job.operators))]
    rep = {"pairs": {}}
    bad = None
    for (i, a), (j, b) in combinations(enumerate(job.operators), 2):
        c = commutator(a, b)
        key = f"[{names[i]},{names[j]}]"
        rep["pairs"][key] = _s(c)
        if c and bad is None:
            bad = key
    rep["commute"] = bad is None
    if bad:
        raise MathFailure(f"{bad} is not zero", rep)
    return rep


def cmd_dres(job):
    P, Q = job.operators
    h = dres(P, Q)
    return {"dres": _s(h), "constant_coefficients": constant_certify(h)}


def cmd_subres(job):
    P, Q = job.operators
    phi0, phi1 = subres1(P, Q)
    return {"phi0": _s(phi0), "phi1": _s(phi1)}


def cmd_bc_pair(job):
    P, Q = job.operators
    c = commutator(P, Q)
    if c:
        raise MathFailure("the pair does not commute",
                          {"error": "commutator", "commutator": _s(c)})
    return {"f": _s(spectral.bc_pair(P, Q, job.vars)),
            "resultant": _s(spectral.pair_resultant(P, Q, job.vars)),
            "vars": list(job.vars)}


def cmd_bc_ideal(job):
    _, model = _model(job)
    rep = model.to_dict()
    rep.pop("operators")
    return rep


def cmd_groebner(job):
    if job.operators:
        _, model = _model(job)
        gens = [model.f1, model.f2, model.f3]
    else:
        gens = job.polys
    try:
        gb = buchberger(gens)
    except ValueError as e:
        raise UsageError(str(e)) from None
    rep = {"generators": [_s(g) for g in gens], "basis": [_s(g) for g in gb.gens]}
    try:
        F0, F1, g1, g2 = projection_data(gb)
        rep.update({"F0": _s(F0), "F1": _s(F1), "g1": _s(g1), "g2": _s(g2)})
    except ValueError as e:
        rep["projection"] = str(e)
    return rep


def cmd_factor(job):
    _, model = _model(job)
    try:
        res = spectral.intrinsic_factor(model, full=True)
    except ArithmeticError as e:
        raise MathFailure(str(e), {"error": "intrinsic-factor"}) from None
    residues = spectral.recomposition_residues(model, res.phi, res.cofactor)
    return {
        "phi": _s(res.phi),
        "factor": _s(D + res.phi),
        "cofactor": _s(res.cofactor),
        "closed_form_cofactor": res.closed_form,
        "residual_in_ideal": res.residual_in_ideal,
        "residual_on_curve": res.residual_on_curve,
        "recomposition_reduces_to_zero": not any(residues),
        "flags": dict(model.flags),
    }


def cmd_factor_at(job):
    basis, model = _model(job)
    point = spectral.ParamPoint(*job.point)
    try:
        fac, N, info = spectral.factor_at_point(basis, model, point, details=True)
    except (spectral.OffCurveError, spectral.ExclusionError,
            spectral.FactorDisagreement) as e:
        rep = {"error": e.code, "point": [str(c) for c in job.point]}
        if isinstance(e, spectral.ExclusionError):
            rep["vanishing"] = [f"phi{i},1" for i in e.indices]
        raise MathFailure(str(e), rep) from None
    return {"point": [str(c) for c in job.point], "factor": _s(fac),
            "cofactor": _s(N), "remainder": info["remainder"],
            "indices_used": info["indices"], "excluded_indices": info["excluded"]}


def cmd_eval_param(job):
    basis, model = _model(job)
    param = job.param
    on_curve = [not spectral.substitute_param(f, param)
                for f in (model.f1, model.f2, model.f3)]
    rep = {"param": [_s(p) for p in param],
           "on_curve": all(on_curve)}
    if not all(on_curve):
        raise MathFailure("the parametrization does not lie on the curve", rep)
    phi = spectral.substitute_param(model.phi(1), param)
    lam = Frac.lift(param[0])
    _, rem = right_divmod(basis.L - lam, D + phi)
    rep.update({"phi": _s(phi), "lam": _s(lam), "remainder": _s(rem)})
    if rem:
        raise MathFailure("D + phi does not right-divide L - lam", rep)
    return rep


HANDLERS = {
    "check-commute": cmd_check_commute,
    "dres": cmd_dres,
    "subres": cmd_subres,
    "bc-pair": cmd_bc_pair,
    "bc-ideal": cmd_bc_ideal,
    "groebner": cmd_groebner,
    "factor": cmd_factor,
    "factor-at": cmd_factor_at,
    "eval-param": cmd_eval_param,
}


# -- output ------------------------------------------------------------------


def _text(rep, indent=""):
    lines = []
    for key in sorted(rep):
        val = rep[key]
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text(val, indent + "  "))
        elif isinstance(val, list):
            lines.append(f"{indent}{key}:")
            lines.extend(f"{indent}  - {v}" for v in val)
        else:
            lines.append(f"{indent}{key}: {val}")
    return lines


def render(rep, mode):
    if mode == "structured":
        return json.dumps(rep, sort_keys=True, indent=2)
    return "\n".join(_text(rep))


def run(job, out=None):
    """Execute ``job``; returns ``(exit_code, report)`` and writes the report."""
    out = sys.stdout if out is None else out
    job.validate()
    try:
        body = HANDLERS[job.command](job)
        rep = {"command": job.command, "status": "ok", "result": body}
        code = 0
    except MathFailure as e:
        rep = {"command": job.command, "status": "failure", "message": str(e),
               "certificate": e.report}
        code = 1
    print(render(rep, job.output_mode), file=out)
    return code, rep


def main(argv=None):
    try:
        job = job_from_args(sys.argv[1:] if argv is None else argv)
        code, _ = run(job)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:  # argparse
        return int(e.code or 0)
    return code


def parse_operator(src):
    """Parse operator text; errors carry line, column and token."""
    return parse_operator_text(src)

