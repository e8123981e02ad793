"""命令任务：JobSpec 校验输入，run 分派到各计算并生成统一结构的 Report。"""
from __future__ import annotations

from typing import Any, Callable, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

import settings
from logger import cli_logger
from .automorphism import commutation_residuals, conjugate, jacobian_det
from .derivation import (
    AnyDerivation,
    Derivation,
    OdeKind,
    ShamsuddinDerivation,
    certify_no_singular_points,
    solve_sham_ode,
    stable_quotient,
    stable_witness,
)
from .expr import parse_pair, parse_point, parse_poly, parse_raw, parse_word
from .isotropy import isotropy_shamsuddin, solve_commuting_system, simplicity_crosscheck, verify_group_law
from .poly import UPoly
from .series import eval_hom, solve_through
from .utils import UsageError

SCHEMA_VERSION = "1.0"

Command = Literal["simple", "isotropy", "commute", "conjugate", "flow", "stable", "singular", "crosscheck"]
STDIN_KEYS = ("a", "b", "derivation", "auto", "pair", "point", "f")


class JobSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: Command
    a: Optional[str] = None
    b: Optional[str] = None
    derivation: Optional[str] = Field(default=None, description='通用导子 "a, b"，即 a∂x + b∂y')
    auto: Optional[str] = Field(default=None, description="生成元字，如 elemY(x^2; 1) * affine(0, 1, 1, 0; 0, 0)")
    pair: Optional[str] = Field(default=None, description='候选自同态 "f, g"')
    point: Optional[str] = None
    f: Optional[str] = None
    order: int = Field(default_factory=lambda: settings.SERIES_ORDER, ge=1)
    max_degree: int = Field(default_factory=lambda: settings.MAX_DEGREE, ge=0)
    extended: bool = False
    format: Literal["text", "json"] = Field(default_factory=lambda: settings.OUTPUT_FORMAT)


class Report(BaseModel):
    command: str
    inputs: Dict[str, str]
    verdict: str
    witness: Dict[str, Any] = Field(default_factory=dict)
    flags: List[str] = Field(default_factory=list)
    version: str = SCHEMA_VERSION


def report_schema() -> Dict[str, Any]:
    schema = Report.model_json_schema()
    schema["version"] = SCHEMA_VERSION
    return schema


# ---------------------------------------------------------------------------
# 输入解析
# ---------------------------------------------------------------------------

def _need(job: JobSpec, *names: str) -> None:
    missing = [n for n in names if getattr(job, n) is None]
    if missing:
        flags = ", ".join(f"--{n}" for n in missing)
        raise UsageError(f"command '{job.command}' needs {flags}")


def _upoly(text: str, name: str) -> UPoly:
    f = parse_poly(text)
    if f.deg_y > 0:
        raise UsageError(f"{name} must be a polynomial in x only, got {f}")
    return f.as_upoly()


def _sham_pair(job: JobSpec) -> Tuple[UPoly, UPoly]:
    _need(job, "a", "b")
    return _upoly(job.a, "a"), _upoly(job.b, "b")


def _derivation(job: JobSpec) -> Tuple[AnyDerivation, Dict[str, str]]:
    if job.derivation is not None:
        D = Derivation(*parse_pair(job.derivation))
        return D, {"derivation": f"{D.a}, {D.b}"}
    if job.a is not None and job.b is not None:
        a, b = _sham_pair(job)
        return ShamsuddinDerivation(a, b), {"a": str(a), "b": str(b)}
    raise UsageError(f"command '{job.command}' needs --derivation or both --a and --b")


def _endo(job: JobSpec, word_only: bool = False) -> Tuple[Any, Dict[str, str]]:
    if job.auto is not None:
        rho = parse_word(job.auto)
        return rho, {"auto": str(rho)}
    if job.pair is not None and not word_only:
        e = parse_raw(job.pair)
        return e, {"pair": f"{e.f}, {e.g}"}
    raise UsageError(f"command '{job.command}' needs --auto" + ("" if word_only else " or --pair"))


# ---------------------------------------------------------------------------
# 各命令
# ---------------------------------------------------------------------------

def run_simple(job: JobSpec) -> Report:
    a, b = _sham_pair(job)
    inputs = {"a": str(a), "b": str(b)}
    sol = solve_sham_ode(a, b, job.max_degree)
    if a.is_zero:
        f, cofactor = stable_witness(a, b, job.max_degree)
        return Report(command="simple", inputs=inputs, verdict="not simple",
                      witness={"reason": "a = 0", "h": str(sol.h), "solution": sol.kind.value,
                               "stable_ideal": str(f), "cofactor": str(cofactor)})
    if sol.kind == OdeKind.NONE:
        reason = ("deg b < deg a" if b.degree < a.degree
                  else "the coefficient system for h' = a*h + b is inconsistent")
        return Report(command="simple", inputs=inputs, verdict="simple",
                      witness={"reason": reason, "forced_degree": str(b.degree - a.degree)})
    f, cofactor = stable_witness(a, b, job.max_degree)
    return Report(command="simple", inputs=inputs, verdict="not simple",
                  witness={"h": str(sol.h), "solution": sol.kind.value,
                           "stable_ideal": str(f), "cofactor": str(cofactor)})


def run_isotropy(job: JobSpec) -> Report:
    a, b = _sham_pair(job)
    desc = isotropy_shamsuddin(a, b, extended=job.extended, max_degree=job.max_degree)
    return Report(command="isotropy", inputs={"a": str(a), "b": str(b)}, verdict=desc.kind.value,
                  witness=desc.witness(), flags=list(desc.flags))


def run_commute(job: JobSpec) -> Report:
    D, inputs = _derivation(job)
    e, endo_inputs = _endo(job)
    inputs.update(endo_inputs)
    rx, ry = commutation_residuals(e, D)
    ok = rx.is_zero and ry.is_zero
    witness: Dict[str, Any] = {"jacobian": str(jacobian_det(e))}
    if not ok:
        witness.update({"residual_x": str(rx), "residual_y": str(ry)})
    return Report(command="commute", inputs=inputs, verdict="commutes" if ok else "does not commute",
                  witness=witness)


def run_conjugate(job: JobSpec) -> Report:
    D, inputs = _derivation(job)
    rho, endo_inputs = _endo(job, word_only=True)
    inputs.update(endo_inputs)
    C = conjugate(rho, D)
    return Report(command="conjugate", inputs=inputs, verdict=f"{C.a}, {C.b}",
                  witness={"a": str(C.a), "b": str(C.b)})


def run_flow(job: JobSpec) -> Report:
    D, inputs = _derivation(job)
    _need(job, "point")
    p = parse_point(job.point)
    inputs.update({"point": f"{p[0]}, {p[1]}", "order": str(job.order)})
    s = solve_through(D, p, job.order)
    witness: Dict[str, Any] = {"phi": [str(c) for c in s.phi.coeffs],
                               "psi": [str(c) for c in s.psi.coeffs]}
    flags: List[str] = []
    if job.f is not None:
        f = parse_poly(job.f)
        inputs["f"] = str(f)
        values = eval_hom(s, f)
        witness["f_along_solution"] = [str(c) for c in values.coeffs]
        if values.is_zero:
            flags.append("vanishes")
    return Report(command="flow", inputs=inputs, verdict=f"solution through ({p[0]}, {p[1]})",
                  witness=witness, flags=flags)


def run_stable(job: JobSpec) -> Report:
    D, inputs = _derivation(job)
    _need(job, "f")
    f = parse_poly(job.f)
    inputs["f"] = str(f)
    q = stable_quotient(D, f)
    if q is None:
        return Report(command="stable", inputs=inputs, verdict="not stable")
    return Report(command="stable", inputs=inputs, verdict="stable", witness={"quotient": str(q)})


def run_singular(job: JobSpec) -> Report:
    D, inputs = _derivation(job)
    cert = certify_no_singular_points(D)
    return Report(command="singular", inputs=inputs, verdict=cert.kind.value, witness=cert.witness())


def run_crosscheck(job: JobSpec) -> Report:
    a, b = _sham_pair(job)
    ok = simplicity_crosscheck(a, b, job.max_degree)
    system = solve_commuting_system(a, b, 0, job.max_degree)
    desc = isotropy_shamsuddin(a, b, extended=job.extended, max_degree=job.max_degree)
    witness: Dict[str, Any] = {
        "simple": not solve_sham_ode(a, b, job.max_degree).exists,
        "system_dimension": system.dimension,
        "system_d_free": system.d_free,
        "family": desc.kind.value,
    }
    if system.d_free and system.dimension == 1:
        witness["system_g0_at_d"] = f"{system.particular[0]} + d*({system.directions[0][0]})"
    if not desc.is_trivial:
        witness["group_law_verified"] = verify_group_law(desc)
    return Report(command="crosscheck", inputs={"a": str(a), "b": str(b)},
                  verdict="consistent" if ok else "inconsistent", witness=witness,
                  flags=list(desc.flags))


_RUNNERS: Dict[str, Callable[[JobSpec], Report]] = {
    "simple": run_simple,
    "isotropy": run_isotropy,
    "commute": run_commute,
    "conjugate": run_conjugate,
    "flow": run_flow,
    "stable": run_stable,
    "singular": run_singular,
    "crosscheck": run_crosscheck,
}


def run(job: JobSpec) -> Report:
    cli_logger.info(f"run {job.command}")
    return _RUNNERS[job.command](job)


def render_text(report: Report) -> str:
    lines = [f"command: {report.command}"]
    if report.inputs:
        lines.append("inputs:")
        lines.extend(f"  {k} = {v}" for k, v in report.inputs.items())
    lines.append(f"verdict: {report.verdict}")
    if report.witness:
        lines.append("witness:")
        for k, v in report.witness.items():
            if isinstance(v, list):
                if not v:
                    continue
                if k == "notes":
                    lines.append("  notes:")
                    lines.extend(f"    - {note}" for note in v)
                    continue
                v = ", ".join(str(item) for item in v)
            lines.append(f"  {k}: {v}")
    if report.flags:
        lines.append(f"flags: {', '.join(report.flags)}")
    return "\n".join(lines)


def parse_stdin(text: str) -> Dict[str, str]:
    """读取 "key: value" 行；空行和 # 开头的行忽略。"""
    values: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in STDIN_KEYS:
            raise UsageError(f"stdin line {lineno}: expected 'key: value' with key in {list(STDIN_KEYS)}")
        values[key] = value.strip()
    return values
