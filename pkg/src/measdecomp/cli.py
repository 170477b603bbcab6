"""``mdc``: batch decompositions from JSON problem files.

Problem files are UTF-8 JSON. Exact scalars are written as strings
(``"3"``, ``"-2/5"``) so that nothing passes through floating point. Exactly
one space declaration is required:

``"space": ["a1", "a2", ...]``
    block labels of a finite space; ``"measures"`` maps names to lists of
    block values (signed measures) or lists of vectors (vector measures).
``"line": {"m": 3}``
    the unit interval with a grid of ``m`` cells; each measure is
    ``{"densities": [...], "atoms": [[location, weight], ...]}``.
``"spectral": {"dim": m, "outcomes": [...], "projections": [...]}``
    exact projections (entries ``"p/q"`` or ``["re", "im"]``) or floats;
    alternatively ``{"normal_matrix": [[...]]}`` with float entries.

``"family"`` is either ``{"generators": [[labels...], ...]}`` or one of the
built-in tags ``"null-sets-of:<measure>"``, ``"positive-sets"``,
``"countable"`` (line model). ``"target"`` names the measure to work on
(default: the first one).

Exit codes: 0 success, 1 unreadable problem file, 2 semantic error,
3 an oracle cross-check disagreed with the library.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

import numpy as np

from .decompose import (
    dellacherie_decompose,
    lebesgue_decompose,
    null_family,
    null_sets,
    radon_nikodym_density,
)
from .errors import MeasureError
from .line import LineMeasure, atomic_diffuse, lebesgue_line, topological_support
from .measure import (
    SignedMeasure,
    hahn_jordan,
    lattice_sup,
    positive_sets,
    relation,
    to_fraction,
    variation,
)
from .oracle import (
    brute_g_support,
    brute_hahn,
    brute_in_support,
    brute_nearest,
    brute_relation,
    brute_sigma_close,
    brute_sup,
    support_probe_points,
)
from .space import FiniteSpace, SetFamily
from .spectral import (
    ProjectionMeasure,
    from_normal_matrix,
    from_projections,
    is_spectral,
    spectral_control,
    spectral_decompose,
)
from .vector import VectorMeasure, control_measure, vector_decompose

EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, EXIT_ORACLE = 0, 1, 2, 3


class ProblemFileError(Exception):
    """The problem file cannot be read as a well-formed problem."""


# ---------------------------------------------------------------- parsing


def _rational(x: Any, where: str) -> Fraction:
    if isinstance(x, float):
        raise ProblemFileError(f"{where}: write exact values as strings like \"1/3\", got {x!r}")
    try:
        return to_fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ProblemFileError(f"{where}: not a rational: {x!r}") from exc


class Problem:
    """A parsed problem file."""

    def __init__(self, doc: dict):
        if not isinstance(doc, dict):
            raise ProblemFileError("top level must be a JSON object")
        self.doc = doc
        kinds = [k for k in ("space", "line", "spectral") if k in doc]
        if len(kinds) != 1:
            raise ProblemFileError(f"expected exactly one of space/line/spectral, found {kinds or 'none'}")
        self.kind = kinds[0]
        self.space: FiniteSpace | None = None
        self.m: int | None = None
        self.spectral: ProjectionMeasure | None = None
        self.measures: dict[str, Any] = {}
        if self.kind == "space":
            self._parse_space()
        elif self.kind == "line":
            self._parse_line()
        else:
            self._parse_spectral()
        target = doc.get("target")
        if target is not None and target not in self.measures:
            raise ProblemFileError(f"target {target!r} is not a declared measure")
        self.target_name = target or next(iter(self.measures), None)

    def _parse_space(self):
        labels = self.doc["space"]
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise ProblemFileError("space must be a list of block labels")
        try:
            self.space = FiniteSpace(tuple(labels))
        except ValueError as exc:
            raise ProblemFileError(str(exc)) from exc
        for name, vals in self._measure_items():
            if not isinstance(vals, list) or len(vals) != self.space.n:
                raise ProblemFileError(f"measure {name!r} needs {self.space.n} block values")
            if all(isinstance(v, list) for v in vals):
                rows = [[_rational(c, f"measure {name}") for c in v] for v in vals]
                if len({len(r) for r in rows}) != 1 or not rows[0]:
                    raise ProblemFileError(f"measure {name!r}: vectors must share one nonzero length")
                self.measures[name] = VectorMeasure(self.space, len(rows[0]), tuple(map(tuple, rows)))
            else:
                self.measures[name] = SignedMeasure(
                    self.space, tuple(_rational(v, f"measure {name}") for v in vals)
                )

    def _parse_line(self):
        decl = self.doc["line"]
        m = decl.get("m") if isinstance(decl, dict) else None
        if not isinstance(m, int) or m < 1:
            raise ProblemFileError("line.m must be a positive integer")
        self.m = m
        for name, body in self._measure_items():
            if not isinstance(body, dict):
                raise ProblemFileError(f"line measure {name!r} must be an object")
            dens = body.get("densities", ["0"] * m)
            if not isinstance(dens, list) or len(dens) != m:
                raise ProblemFileError(f"line measure {name!r} needs {m} densities")
            atoms = []
            for a in body.get("atoms", []):
                if not isinstance(a, list) or len(a) != 2:
                    raise ProblemFileError(f"line measure {name!r}: atoms are [location, weight] pairs")
                atoms.append((_rational(a[0], name), _rational(a[1], name)))
            try:
                self.measures[name] = LineMeasure.build(
                    m, [_rational(d, f"measure {name}") for d in dens], atoms
                )
            except ValueError as exc:
                raise ProblemFileError(f"line measure {name!r}: {exc}") from exc

    def _parse_spectral(self):
        decl = self.doc["spectral"]
        if not isinstance(decl, dict):
            raise ProblemFileError("spectral must be an object")
        if "normal_matrix" in decl:
            try:
                mat = np.array(
                    [[complex(*e) if isinstance(e, list) else complex(e) for e in row] for row in decl["normal_matrix"]]
                )
            except (TypeError, ValueError) as exc:
                raise ProblemFileError(f"normal_matrix: {exc}") from exc
            self.spectral = from_normal_matrix(mat)
        else:
            try:
                dim, outcomes, projs = decl["dim"], decl["outcomes"], decl["projections"]
            except KeyError as exc:
                raise ProblemFileError(f"spectral needs dim, outcomes, projections: missing {exc}") from exc
            if isinstance(projs, dict):
                projs = [projs[o] for o in outcomes]
            try:
                self.spectral = from_projections(dim, [str(o) for o in outcomes], projs)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                if isinstance(exc, MeasureError):
                    raise
                raise ProblemFileError(f"spectral projections: {exc}") from exc
        self.space = self.spectral.space
        self.measures["E"] = self.spectral

    def _measure_items(self):
        ms = self.doc.get("measures", {})
        if not isinstance(ms, dict):
            raise ProblemFileError("measures must be an object mapping names to values")
        return ms.items()

    def measure(self, name: str | None = None):
        name = name or self.target_name
        if name is None:
            raise ProblemFileError("the problem declares no measure")
        if name not in self.measures:
            raise ProblemFileError(f"unknown measure {name!r}")
        return self.measures[name]

    def family(self) -> SetFamily:
        decl = self.doc.get("family")
        if decl is None:
            raise ProblemFileError("this command needs a family of sets")
        if isinstance(decl, list):
            decl = {"generators": decl}
        if isinstance(decl, str):
            if decl.startswith("null-sets-of:"):
                nu = self.measure(decl.split(":", 1)[1])
                if not isinstance(nu, SignedMeasure):
                    raise ProblemFileError("null-sets-of needs a signed measure")
                return null_sets(nu)
            if decl == "positive-sets":
                mu = self.measure()
                if not isinstance(mu, SignedMeasure):
                    raise ProblemFileError("positive-sets needs a signed target measure")
                return positive_sets(mu)
            if decl == "countable":
                # every subset of a finite space is countable
                return SetFamily(self.space, (self.space.full(),), sigma_closed=True)
            raise ProblemFileError(f"unknown family tag {decl!r}")
        gens = decl.get("generators") if isinstance(decl, dict) else None
        if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
            raise ProblemFileError("family.generators must be a list of label lists")
        try:
            return SetFamily.generated(self.space, gens)
        except KeyError as exc:
            raise ProblemFileError(str(exc)) from exc


def load_problem(path: str) -> Problem:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from exc
    try:
        return Problem(doc)
    except MeasureError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ProblemFileError(f"malformed problem: {exc!r}") from exc


# ---------------------------------------------------------------- reports


def _q(x: Fraction) -> str:
    return str(x)


def _signed(mu: SignedMeasure) -> list[str]:
    return [_q(v) for v in mu.values]


def _vector(theta: VectorMeasure) -> list[list[str]]:
    return [[_q(c) for c in v] for v in theta.values]


def _line(mu: LineMeasure) -> dict:
    return {"densities": [_q(d) for d in mu.densities], "atoms": [[_q(x), _q(w)] for x, w in mu.atoms]}


def _matrix(a: np.ndarray, exact: bool) -> list:
    if exact:
        return [[[_q(z.re), _q(z.im)] for z in row] for row in a]
    return [[[float(z.real), float(z.imag)] for z in row] for row in a]


def _need(obj, kind, what):
    if not isinstance(obj, kind):
        raise ProblemFileError(f"{what} needs a {kind.__name__} target")
    return obj


def cmd_decompose(p: Problem, args) -> dict:
    mu = _need(p.measure(), SignedMeasure, "decompose")
    dec = dellacherie_decompose(mu, p.family())
    out = {"support": list(dec.support.labels), "atomic": _signed(dec.atomic), "diffuse": _signed(dec.diffuse)}
    if args.minimal_support:
        out["minimal_support"] = list(dec.minimal_support().labels)
    return out


def cmd_hahn_jordan(p: Problem, args) -> dict:
    mu = _need(p.measure(), SignedMeasure, "hahn-jordan")
    hj = hahn_jordan(mu)
    return {
        "support": list(hj.g_bar.labels),
        "mu_plus": _signed(hj.mu_plus),
        "mu_minus": _signed(hj.mu_minus),
        "atomic": _signed(hj.mu_plus),
        "diffuse": _signed(-hj.mu_minus),
    }


def _wrt(p: Problem, args) -> SignedMeasure:
    if not args.wrt:
        raise ProblemFileError("lebesgue needs --wrt NAME")
    return _need(p.measure(args.wrt), SignedMeasure, "--wrt")


def cmd_lebesgue(p: Problem, args) -> dict:
    mu = _need(p.measure(), SignedMeasure, "lebesgue")
    nu = _wrt(p, args)
    ac, s = lebesgue_decompose(mu, nu)
    return {
        "wrt": args.wrt,
        "support": list(null_family(nu).labels),
        "ac": _signed(ac),
        "s": _signed(s),
        "atomic": _signed(s),
        "diffuse": _signed(ac),
        "density": [_q(f) for f in radon_nikodym_density(ac, nu)],
    }


def cmd_atomic_diffuse(p: Problem, args) -> dict:
    mu = _need(p.measure(), LineMeasure, "atomic-diffuse")
    a, d = atomic_diffuse(mu)
    ac, s = lebesgue_line(mu)
    return {
        "support": {"points": [_q(x) for x in mu.atom_locations]},
        "atomic": _line(a),
        "diffuse": _line(d),
        "lebesgue": {"ac": _line(ac), "s": _line(s)},
    }


def cmd_support(p: Problem, args) -> dict:
    mu = _need(p.measure(), LineMeasure, "support")
    cs = topological_support(mu)
    return {"support": {"intervals": [[_q(a), _q(b)] for a, b in cs.intervals], "points": [_q(x) for x in cs.points]}}


def cmd_vector(p: Problem, args) -> dict:
    theta = _need(p.measure(), VectorMeasure, "vector")
    dec = vector_decompose(theta, p.family())
    return {
        "support": list(dec.support.labels),
        "control": _signed(control_measure(theta)),
        "atomic": _vector(dec.atomic),
        "diffuse": _vector(dec.diffuse),
    }


def cmd_spectral(p: Problem, args) -> dict:
    e = _need(p.spectral, ProjectionMeasure, "spectral")
    dec = spectral_decompose(e, p.family())
    return {
        "outcomes": list(e.space.block_labels),
        "support": list(dec.support.labels),
        "control": _signed(spectral_control(e)),
        "atomic": _matrix(dec.atomic.total(), e.exact),
        "diffuse": _matrix(dec.diffuse.total(), e.exact),
    }


# ---------------------------------------------------------------- check


def _record(checks: list, name: str, library, oracle, passed: bool | None = None) -> None:
    if passed is None:
        passed = library == oracle
    checks.append({"name": name, "passed": bool(passed), "library": library, "oracle": oracle})


def _check_family_decomposition(checks, mu: SignedMeasure, g: SetFamily, args) -> None:
    dec = dellacherie_decompose(mu, g)
    oracle_support = brute_g_support(mu, g)
    _record(checks, "support matches brute-force essential maximum",
            list(dec.support.labels), list(oracle_support.labels))
    closure = brute_sigma_close(g).members
    sums_back = dec.atomic + dec.diffuse == mu
    concentrated = all(v == 0 for i, v in enumerate(dec.atomic.values) if i not in dec.support)
    in_closure = dec.support in closure
    diffuse_null = all(all(dec.diffuse.values[i] == 0 for i in G) for G in closure)
    _record(checks, "atomic + diffuse reproduces the measure", sums_back, True)
    _record(checks, "atomic part concentrated on a member of the closure", concentrated and in_closure, True)
    _record(checks, "every member of the closure is null for the diffuse part", diffuse_null, True)
    dist = brute_nearest(mu, g, samples=args.samples, seed=args.seed)
    _record(checks, "no sampled atomic measure is closer than the atomic part",
            _q(variation(dec.diffuse)[1]), _q(dist))


def _check_signed(checks, p: Problem, mu: SignedMeasure, args) -> None:
    if "family" in p.doc:
        _check_family_decomposition(checks, mu, p.family(), args)
    hj = hahn_jordan(mu)
    _record(checks, "Hahn set matches exhaustive scan",
            list(hj.g_bar.labels), list(brute_hahn(mu).labels))
    for name, nu in p.measures.items():
        if isinstance(nu, SignedMeasure) and nu is not mu and mu.space.n <= 12:
            _record(checks, f"lattice sup with {name} matches sup over subsets",
                    _signed(lattice_sup(mu, nu)), _signed(brute_sup(mu, nu)))
    if args.wrt:
        nu = _wrt(p, args)
        ac, s = lebesgue_decompose(mu, nu)
        lib = [relation(ac, nu).abs_continuous, relation(s, nu).singular]
        orc = [brute_relation(ac, nu)[0], brute_relation(s, nu)[1]]
        _record(checks, f"Lebesgue parts are <<{args.wrt} and singular to {args.wrt}", lib, orc,
                passed=lib == orc == [True, True])


def _check_vector(checks, p: Problem, theta: VectorMeasure, args) -> None:
    g = p.family()
    dec = vector_decompose(theta, g)
    control = SignedMeasure(theta.space, tuple(sum(abs(c) for c in v) for v in theta.values))
    _record(checks, "vector support matches brute-force support of the control",
            list(dec.support.labels), list(brute_g_support(control, g).labels))
    closure = brute_sigma_close(g).members
    null_ok = all(not any(dec.diffuse.values[i]) for G in closure for i in G)
    _record(checks, "every member of the closure is null for the diffuse part", null_ok, True)


def _check_line(checks, p: Problem, mu: LineMeasure, args) -> None:
    a, d = atomic_diffuse(mu)
    _record(checks, "atomic + diffuse reproduces the measure", a + d == mu, True)
    ac, s = lebesgue_line(mu)
    _record(checks, "ac + singular reproduces the measure", ac + s == mu, True)
    if mu.is_positive() and mu.m <= 12:
        cs = topological_support(mu)
        pts = support_probe_points(mu)
        lib = [_q(x) for x in pts if x in cs]
        orc = [_q(x) for x in pts if brute_in_support(mu, x)]
        _record(checks, "topological support matches the largest open null set", lib, orc)


def _check_spectral(checks, p: Problem, e: ProjectionMeasure, args) -> None:
    _record(checks, "spectral axioms hold", is_spectral(e), True)
    control = spectral_control(e)
    lib, orc = [], []
    for delta in e.space.subsets():
        lib.append(sum((control.values[i] for i in delta), Fraction(0)) == 0)
        orc.append(e.is_null(delta))
    _record(checks, "control measure has exactly the null sets of E", lib, orc)
    if "family" in p.doc:
        g = p.family()
        dec = spectral_decompose(e, g)
        _record(checks, "spectral support matches brute-force support of the control",
                list(dec.support.labels), list(brute_g_support(control, g).labels))


def cmd_check(p: Problem, args) -> dict:
    checks: list[dict] = []
    if p.kind == "spectral":
        _check_spectral(checks, p, p.spectral, args)
    else:
        target = p.measure()
        if isinstance(target, SignedMeasure):
            _check_signed(checks, p, target, args)
        elif isinstance(target, VectorMeasure):
            _check_vector(checks, p, target, args)
        else:
            _check_line(checks, p, target, args)
    return {"seed": args.seed, "samples": args.samples, "checks": checks,
            "passed": all(c["passed"] for c in checks)}


COMMANDS = {
    "decompose": cmd_decompose,
    "hahn-jordan": cmd_hahn_jordan,
    "lebesgue": cmd_lebesgue,
    "atomic-diffuse": cmd_atomic_diffuse,
    "support": cmd_support,
    "vector": cmd_vector,
    "spectral": cmd_spectral,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mdc", description="Exact measure decompositions.")
    parser.add_argument("subcommand", choices=sorted(COMMANDS))
    parser.add_argument("--input", required=True, help="problem file (JSON)")
    parser.add_argument("--output", default="-", help="report file, '-' for stdout")
    parser.add_argument("--wrt", help="reference measure for lebesgue")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--minimal-support", action="store_true",
                        help="also report the smallest equivalent support")
    return parser


def _emit(report: dict, output: str) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        problem = load_problem(args.input)
        body = COMMANDS[args.subcommand](problem, args)
    except ProblemFileError as exc:
        print(f"mdc: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MeasureError as exc:
        print(f"mdc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    report = {"command": args.subcommand, "input": problem.doc, **body}
    _emit(report, args.output)
    if args.subcommand == "check" and not body["passed"]:
        for c in body["checks"]:
            if not c["passed"]:
                print(f"mdc: check failed: {c['name']}\n  library: {c['library']}\n  oracle:  {c['oracle']}",
                      file=sys.stderr)
        return EXIT_ORACLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
