"""Shipped catalog of right coideal subalgebras and its verification drivers.

Entries live in JSON files under the data directory (``QCOIDEAL_DATA``
overrides the packaged one).  An entry is a list of generator templates in
the expression grammar together with

* ``params``: free scalar parameters and their default values,
* ``derived``: parameters computed from the others unless given explicitly,
* ``constraints``: pairs of scalar expressions that must be equal,
* ``ints``: integer family exponents with the sampled values, substituted
  textually via ``{name}``,
* ``variants``: further parameter assignments to verify,
* ``contains``: elements every RCS with these generators must contain,
* ``support``: roots carrying a nonzero character value,
* ``construct``: alternatively, a character-shifted homogeneous RCS.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from fnmatch import fnmatch
from importlib import resources
from itertools import product as iproduct

from .expr import ParseError, format_element, parse_element
from .leading import check_generator_form, e_degrees, f_degrees, eta_split
from .pbw import E, F, K, UElement, get_algebra, derive_relation, q_commutator, sigma, swap
from .hopf import coproduct, TensorElement
from .rcs import Character, Lattice, homogeneous_rcs, shift_element
from .rootdata import WeylWord
from .scalar import ONE, Q, QRat
from .subalgebra import (
    VERIFIED,
    GeneratorSet,
    SpanBasis,
    is_closed_under_multiplication,
    is_right_coideal,
    torus_subhopf_check,
)

DATA_ENV = "QCOIDEAL_DATA"


class ConstraintError(ValueError):
    pass


@dataclass
class CatalogEntry:
    id: str
    system: str
    gens: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    derived: dict = field(default_factory=dict)
    constraints: list = field(default_factory=list)
    ints: dict = field(default_factory=dict)
    variants: list = field(default_factory=list)
    contains: list = field(default_factory=list)
    support: list = field(default_factory=list)
    construct: dict | None = None
    constants: dict = field(default_factory=dict)
    expected: dict = field(default_factory=lambda: {"is_rcs": True, "torus_subhopf": True})

    @classmethod
    def from_json(cls, data: dict, system: str, constants: dict | None = None) -> "CatalogEntry":
        known = {k: data[k] for k in cls.__dataclass_fields__ if k in data and k not in ("system", "constants")}
        return cls(system=data.get("system", system), constants=dict(constants or {}), **known)

    def samples(self) -> list[tuple[str, dict, dict]]:
        """``(label, scalar overrides, ints)`` for every sampled instantiation."""
        names = sorted(self.ints)
        int_sets = [dict(zip(names, vals)) for vals in iproduct(*(self.ints[n] for n in names))] or [{}]
        out = []
        for ints in int_sets:
            for k, over in enumerate([{}] + list(self.variants)):
                bits = [f"{n}={v}" for n, v in sorted(ints.items())]
                if k:
                    bits.append(f"v{k}")
                out.append((",".join(bits), dict(over), ints))
        return out

    def expectation(self, over: dict | None = None) -> dict:
        exp = {"is_rcs": True, "torus_subhopf": True}
        exp.update(self.expected)
        exp.update((over or {}).get("expected", {}))
        return exp


def data_dir():
    override = os.environ.get(DATA_ENV)
    if override:
        return override
    return resources.files("qcoideal") / "data"


def load_catalog(path=None) -> list[CatalogEntry]:
    base = path or data_dir()
    entries = []
    if isinstance(base, (str, os.PathLike)) and os.path.isfile(base):
        readers = [(base, lambda: open(base, encoding="utf-8").read())]
    elif isinstance(base, (str, os.PathLike)):
        files = sorted(os.path.join(base, f) for f in os.listdir(base) if f.endswith(".json"))
        readers = [(f, lambda f=f: open(f, encoding="utf-8").read()) for f in files]
    else:
        files = sorted((p for p in base.iterdir() if p.name.endswith(".json")), key=lambda p: p.name)
        readers = [(p, p.read_text) for p in files]
    seen = set()
    for name, read in readers:
        doc = json.loads(read())
        for item in doc["entries"]:
            entry = CatalogEntry.from_json(item, doc["system"], doc.get("constants"))
            if entry.id in seen:
                raise ValueError(f"duplicate catalog id {entry.id} in {name}")
            seen.add(entry.id)
            entries.append(entry)
    return entries


def get_entry(entry_id: str, entries=None) -> CatalogEntry:
    for e in entries or load_catalog():
        if e.id == entry_id:
            return e
    raise KeyError(f"no catalog entry {entry_id!r}")


# -- instantiation ------------------------------------------------------------

def _scalar(text: str, system: str, env: dict) -> QRat:
    x = parse_element(str(text), system, env)
    if not x.terms:
        return QRat(0)
    if set(x.terms) != {x.alg.one_mono}:
        raise ValueError(f"{text!r} is not a scalar")
    return x.terms[x.alg.one_mono]


def resolve_params(entry: CatalogEntry, params: dict | None = None) -> dict:
    """Defaults, overrides and derived values, with every constraint checked."""
    env: dict = {}
    for name, text in entry.constants.items():
        env[name] = _scalar(text, entry.system, env)
    given = dict(params or {})
    for name, text in entry.params.items():
        v = given.pop(name, text)
        env[name] = v if isinstance(v, QRat) else _scalar(str(v), entry.system, env)
    for name, text in entry.derived.items():
        v = given.pop(name, None)
        if v is None:
            env[name] = _scalar(text, entry.system, env)
        else:
            env[name] = v if isinstance(v, QRat) else _scalar(str(v), entry.system, env)
    if given:
        raise ConstraintError(f"unknown parameters: {', '.join(sorted(given))}")
    for lhs, rhs in entry.constraints:
        a = _scalar(lhs, entry.system, env)
        b = _scalar(rhs, entry.system, env)
        if a != b:
            raise ConstraintError(f"constraint {lhs} = {rhs} fails: {a} != {b}")
    return env


def _template(text: str, ints: dict) -> str:
    return text.format(**ints) if ints else text


def _expand_ints(entry: CatalogEntry, ints: dict | None) -> dict:
    out = {n: vals[0] for n, vals in entry.ints.items()}
    out.update(ints or {})
    return out


def _constructed(entry: CatalogEntry, env: dict) -> list[UElement]:
    spec = entry.construct
    alg = get_algebra(entry.system)
    lat = Lattice(tuple(tuple(v) for v in spec.get("lattice", [])), alg.rs.rank)
    base = homogeneous_rcs(spec["wplus"], lat, spec["wminus"], entry.system)
    chars = {}
    for side, key in (("E", "phi_plus"), ("F", "phi_minus")):
        word = WeylWord.parse(spec["wplus"] if side == "E" else spec["wminus"], alg.rs)
        vals = {alg.rs.parse_weight(r): env[p] for r, p in spec.get(key, {}).items()}
        chars[side] = Character(word, side, vals)
    out = []
    for g in base.gens:
        (m, *_) = g.terms
        if any(m[0]):
            out.append(shift_element(g, chars["E"]))
        elif any(m[2]):
            out.append(shift_element(g, chars["F"]))
        else:
            out.append(g)
    return out


def instantiate(entry: CatalogEntry, params: dict | None = None, ints: dict | None = None) -> GeneratorSet:
    env = resolve_params(entry, params)
    ints = _expand_ints(entry, ints)
    if entry.construct:
        gens = _constructed(entry, env)
    else:
        gens = [parse_element(_template(t, ints), entry.system, env) for t in entry.gens]
    labels = [format_element(g) for g in gens]
    return GeneratorSet(gens, entry.id, labels)


def side_conditions(entry: CatalogEntry, params: dict | None = None, ints: dict | None = None) -> list[UElement]:
    env = resolve_params(entry, params)
    ints = _expand_ints(entry, ints)
    return [parse_element(_template(t, ints), entry.system, env) for t in entry.contains]


# -- verification ----------------------------------------------------------------

@dataclass
class VerificationReport:
    id: str
    status: str
    checks: dict
    details: dict = field(default_factory=dict)
    runtime: float = 0.0

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "checks": dict(sorted(self.checks.items())),
            "details": self.details,
            "runtime": round(self.runtime, 3),
        }

    def line(self) -> str:
        marks = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in sorted(self.checks.items()))
        return f"{self.id:<28} {self.status:<12} {marks}"


def _lattice_from(weights) -> list:
    from .leading import _lattice_basis

    return _lattice_basis(weights)


def verify_generators(gens: GeneratorSet, name: str, D: int = 3, margin: int = 2,
                      support=(), contains=(), expected: dict | None = None) -> VerificationReport:
    """Closure, coideal, torus, generator-form, leading-term and side-condition checks.

    With ``expected["torus_subhopf"]`` false the torus check must fail instead.
    The generator-form constraints use the lattice of invertible torus
    monomials found in the span.
    """
    torus_hopf = True if expected is None else expected.get("torus_subhopf", True)
    t0 = time.perf_counter()
    rs = gens.alg.rs
    span = SpanBasis(gens)
    checks: dict = {}
    details: dict = {}
    closed, bad = is_closed_under_multiplication(gens, D, span)
    checks["closure"] = closed
    if not closed:
        details["closure"] = f"product of generators {bad} outside S_{D}"
    rep = is_right_coideal(gens, D, margin, span=span)
    checks["coideal"] = rep.status == VERIFIED
    details["coideal"] = rep.to_json()
    tor = torus_subhopf_check(gens, D, margin, span=span)
    checks["torus"] = tor.ok == torus_hopf
    if not tor.ok:
        details["torus"] = tor.problem
    units = tor.weights if tor.ok else [
        w for w in tor.weights
        if span.find_level(K(gens.alg, w, -1), D + margin) is not None
    ]
    lattice = _lattice_from(units)
    roots = [rs.parse_weight(s) if isinstance(s, str) else tuple(s) for s in support]
    forms, unique = [], True
    for g in gens.gens:
        if all(not any(m[0]) and not any(m[2]) for m in g.terms):
            continue
        form = check_generator_form(g, lattice, roots)
        if not form.accepted:
            forms.append({"generator": format_element(g), "reason": form.reason})
        for part in eta_split(g).values():
            if len(e_degrees(part)) > 1 or len(f_degrees(part)) > 1:
                unique = False
    checks["generator_form"] = not forms
    checks["leading_terms"] = unique
    if forms:
        details["generator_form"] = forms
    if contains:
        missing = [format_element(x) for x in contains if span.find_level(x, D) is None]
        checks["side_conditions"] = not missing
        if missing:
            details["side_conditions"] = missing
    status = "verified" if all(checks.values()) else "failed"
    return VerificationReport(name, status, checks, details, time.perf_counter() - t0)


def verify_entry(entry: CatalogEntry, D: int = 3, params: dict | None = None, ints: dict | None = None,
                 margin: int = 2, label: str = "") -> VerificationReport:
    name = f"{entry.id}[{label}]" if label else entry.id
    expected = entry.expectation(params)
    params = {k: v for k, v in (params or {}).items() if k != "expected"}
    try:
        gens = instantiate(entry, params, ints)
        extra = side_conditions(entry, params, ints)
    except (ConstraintError, ParseError, ValueError) as exc:
        return VerificationReport(name, "error", {"instantiate": False}, {"error": str(exc)})
    return verify_generators(gens, name, D, margin, entry.support, extra, expected)


def verify_catalog(pattern: str = "*", D: int = 3, entries=None) -> list[VerificationReport]:
    out = []
    for entry in entries or load_catalog():
        if not fnmatch(entry.id, pattern):
            continue
        for label, over, ints in entry.samples():
            out.append(verify_entry(entry, D, over, ints, label=label if len(entry.samples()) > 1 else ""))
    return sorted(out, key=lambda r: r.id)


# -- symmetry and mutations ---------------------------------------------------------

def symmetric_image(gens: GeneratorSet, which: str) -> GeneratorSet:
    """Image under ``sigma`` (E/F exchange), ``swap`` (a/b exchange) or both."""
    maps = {"sigma": [sigma], "swap": [swap], "sigma+swap": [sigma, swap]}[which]
    new = []
    for g in gens.gens:
        for f in maps:
            g = f(g)
        new.append(g)
    return GeneratorSet(new, f"{which}({gens.name})")


def mutation_suite() -> list[tuple[str, GeneratorSet]]:
    """Perturbed catalog entries that must not verify."""
    a1 = lambda s, env=None: parse_element(s, "A1", env)
    a2 = lambda s, env=None: parse_element(s, "A2", env)
    kappa = _scalar("q^2/((1-q^2)*(q-q^-1))", "A1", {})
    out = []
    borel = "E[a]*K[a]^-1 + l*K[a]^-1", "F[a] + lm*K[a]^-1"
    for tag, lm in (("product-one", ONE), ("double-partner", kappa * QRat(2)), ("negated-partner", -kappa)):
        env = {"l": ONE, "lm": lm}
        out.append((f"sl2-borel-B/{tag}", GeneratorSet([a1(borel[0], env), a1(borel[1], env)])))
    out.append(("sl2-small/no-torus", GeneratorSet([a1("E[a]*K[a]^-1"), a1("F[a]")])))
    out.append(("sl2/E-only", GeneratorSet([a1("E[a]")])))
    u0 = ["K[a]", "K[a]^-1", "K[b]", "K[b]^-1"]
    out.append(("sl3-hom-ab/drop-Ea", GeneratorSet([a2(s) for s in ["E[ab]"] + u0])))
    p = "E[ab]*K[a+b]^-1 + {c}*E[b]*K[a+b]^-1"
    for tag, c in (("coefficient-q1", "(1-q^-1)"), ("coefficient-doubled", "2*(1-q^-2)")):
        gens = [p.format(c=c), "E[a]*K[a]^-1 + K[a]^-1", "K[a+2b]", "K[a+2b]^-1"]
        out.append((f"sl3-2a-1/{tag}", GeneratorSet([a2(s) for s in gens])))
    gens = ["E[ab]*K[a+b]^-1 + K[a+b]^-1", "E[b]*K[b]^-1", "K[a-b]", "K[b-a]"]
    out.append(("sl3-2b-1/wrong-simple", GeneratorSet([a2(s) for s in gens])))
    gens = ["E[a]*K[b]^-1 + F[b]", "K[a]", "K[a]^-1"]
    out.append(("sl3-3e-1/wrong-torus", GeneratorSet([a2(s) for s in gens])))
    return out


# -- reference relations--------------------------------------------------------------

def _oracle_comm(alg, x, y, c=ONE) -> UElement:
    """``[x, y]_c`` for generator tuples, straightened by the independent oracle."""
    return derive_relation(alg, x, y) - derive_relation(alg, y, x).scale(c)


def _identity(name: str, got, want) -> tuple[str, bool, str, str]:
    return name, got == want, str(got), str(want)


def root_vector_coefficient() -> QRat:
    """Coefficient of ``E_ab`` in the straightened product ``E_a E_b`` of A_2."""
    alg = get_algebra("A2")
    prod = E(alg, "a") * E(alg, "b")
    target = next(iter(E(alg, "ab").terms))
    return prod.terms.get(target, QRat(0))


def verify_relation_tables() -> list[tuple[str, bool, str, str]]:
    """Re-derive the reference relations and coproducts; ``(name, ok, got, want)``."""
    A1, A2 = get_algebra("A1"), get_algebra("A2")
    p1 = lambda s, env=None: parse_element(s, A1, env)
    p2 = lambda s: parse_element(s, A2)
    out = []
    e, f, k = E(A1, "a"), F(A1, "a"), K(A1, (1,))
    out.append(_identity("sl2 [E,F]_1", q_commutator(e, f, ONE), p1("(K[a] - K[a]^-1)/(q - q^-1)")))
    out.append(_identity("sl2 [E,K]_{q^-2}", q_commutator(e, k, ONE / (Q * Q)), p1("0")))
    out.append(_identity("sl2 [F,K]_{q^2}", q_commutator(f, k, Q * Q), p1("0")))
    d = coproduct(e)
    out.append(_identity("sl2 Delta(E)", d, TensorElement.pure(e, p1("1")) + TensorElement.pure(k, e)))
    d = coproduct(f)
    out.append(_identity("sl2 Delta(F)", d, TensorElement.pure(f, K(A1, (1,), -1)) + TensorElement.pure(p1("1"), f)))
    kappa = _scalar("q^2/((1-q^2)*(q-q^-1))", "A1", {})
    env = {"l": ONE, "lm": kappa}
    x = p1("E[a]*K[a]^-1 + l*K[a]^-1", env)
    y = p1("F[a] + lm*K[a]^-1", env)
    out.append(_identity("sl2 shifted commutator", q_commutator(x, y, Q * Q), p1("q^2/(q-q^-1)")))
    eab, eba, fab = E(A2, "ab"), E(A2, "ba"), F(A2, "ab")
    Eab, Eba, Fab, Ea, Fa = ("E", "ab"), ("E", "ba"), ("F", "ab"), ("E", "a"), ("F", "a")
    out.append(_identity("sl3 [E_ab,F_ab]_1", _oracle_comm(A2, Eab, Fab),
                         p2("(K[a+b] - K[a+b]^-1)/(q - q^-1)")))
    out.append(_identity("sl3 [E_ab,F_a]_1", _oracle_comm(A2, Eab, Fa), p2("-E[b]*K[a]^-1")))
    out.append(_identity("sl3 [E_ba,F_a]_1", _oracle_comm(A2, Eba, Fa), p2("q^-1*E[b]*K[a]")))
    out.append(_identity("sl3 [E_ab,E_a]_{q^-1}", _oracle_comm(A2, Eab, Ea, ONE / Q), p2("0")))
    out.append(_identity("sl3 [E_ba,E_a]_q", _oracle_comm(A2, Eba, Ea, Q), p2("0")))
    out.append(_identity("sl3 E_ba definition", eba, p2("-q^-1*(E[a]*E[b] - q*E[b]*E[a])")))
    want = (TensorElement.pure(eab, p2("1")) + TensorElement.pure(K(A2, (1, 1)), eab)
            + TensorElement.pure(p2("(1-q^-2)*E[a]*K[b]"), E(A2, "b")))
    out.append(_identity("sl3 Delta(E_ab)", coproduct(eab), want))
    want = (TensorElement.pure(fab, K(A2, (1, 1), -1)) + TensorElement.pure(p2("1"), fab)
            + TensorElement.pure(p2("(q^-1-q)*F[b]"), p2("F[a]*K[b]^-1")))
    out.append(_identity("sl3 Delta(F_ab)", coproduct(fab), want))
    c = root_vector_coefficient()
    out.append(("sl3 E_ab coefficient of E_a E_b", not c.is_zero(), str(c), "nonzero"))
    return out


def solve_3c_primes(ca: QRat = ONE, cb: QRat = ONE, candidates=None, D: int = 3) -> list[tuple]:
    """Search ``(c_a', c_b')`` among candidate scalars for which the 3c entry verifies."""
    entry = get_entry("sl3-3c")
    cands = candidates or [QRat(0), ONE, Q, ONE / Q, QRat(-1), Q - ONE / Q]
    found = []
    for cap, cbp in iproduct(cands, repeat=2):
        rep = verify_entry(entry, D, {"ca": ca, "cb": cb, "cap": cap, "cbp": cbp})
        if rep.checks.get("coideal") and rep.checks.get("closure"):
            found.append((cap, cbp))
    return found


__all__ = [
    "CatalogEntry",
    "ConstraintError",
    "VerificationReport",
    "data_dir",
    "load_catalog",
    "get_entry",
    "resolve_params",
    "instantiate",
    "side_conditions",
    "verify_generators",
    "verify_entry",
    "verify_catalog",
    "symmetric_image",
    "mutation_suite",
    "verify_relation_tables",
    "root_vector_coefficient",
    "solve_3c_primes",
]
