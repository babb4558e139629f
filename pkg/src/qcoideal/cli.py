"""Command-line interface: ``qcoideal <command> ...``.

Exit codes: 0 on success or a verified check, 1 when a check fails,
2 on usage and input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import ConstraintError, load_catalog, verify_catalog
from .expr import (
    ParseError,
    element_to_json,
    format_element,
    format_scalar,
    format_tensor,
    parse_element,
    tensor_to_json,
)
from .hopf import coproduct
from .leading import (
    ReductionError,
    e_degrees,
    eta_split,
    f_degrees,
    f_leading_term,
    leading_term,
    _maximal,
    f_m_set,
    m_set,
    reduce_generator,
    reduce_generator_f,
)
from .pbw import get_algebra, parts, q_commutator
from .rcs import Character, shift_element
from .repr import build_simple_module, matrix_of, restrict_find_onedim
from .rootdata import format_weight
from .scalar import ZERO
from .subalgebra import GeneratorSet, is_right_coideal


class UsageError(Exception):
    pass


# -- input helpers -----------------------------------------------------------------

def _scalar(text: str, system: str, env: dict):
    x = parse_element(text, system, env)
    if not x.terms:
        return ZERO
    if set(x.terms) != {x.alg.one_mono}:
        raise UsageError(f"{text!r} is not a scalar")
    return x.terms[x.alg.one_mono]


def load_params(path, system: str) -> dict:
    """Read a ``{name: scalar expression}`` file; later names may use earlier ones."""
    if not path:
        return {}
    data = _read_json(path)
    if not isinstance(data, dict):
        raise UsageError("a parameter file must hold a JSON object")
    env: dict = {}
    for name, text in data.items():
        env[name] = _scalar(str(text), system, env)
    return env


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def load_gens(path, system: str, env: dict) -> GeneratorSet:
    """A generator file is a list of expressions or ``{"gens": [...], "params": {...}}``."""
    data = _read_json(path)
    if isinstance(data, dict):
        system = data.get("system", system)
        env = dict(env)
        for name, text in data.get("params", {}).items():
            env.setdefault(name, _scalar(str(text), system, env))
        data = data.get("gens")
    if not isinstance(data, list) or not data:
        raise UsageError("a generator file needs a non-empty list of expressions")
    gens = [parse_element(str(t), system, env) for t in data]
    return GeneratorSet(gens, Path(path).stem, [str(t) for t in data])


def _element(args, text: str):
    return parse_element(text, args.system, args.env)


# -- output ------------------------------------------------------------------------

def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _element_payload(x) -> dict:
    return {"text": format_element(x), "terms": element_to_json(x)}


# -- commands ------------------------------------------------------------------------

def cmd_normalize(args) -> int:
    x = _element(args, args.expr)
    _emit(args, _element_payload(x), format_element(x))
    return 0


def cmd_mul(args) -> int:
    xs = [_element(args, t) for t in args.exprs]
    out = xs[0]
    for y in xs[1:]:
        out = out * y
    _emit(args, _element_payload(out), format_element(out))
    return 0


def cmd_qcomm(args) -> int:
    c = _scalar(args.c, args.system, args.env)
    out = q_commutator(_element(args, args.x), _element(args, args.y), c)
    _emit(args, _element_payload(out), format_element(out))
    return 0


def cmd_coproduct(args) -> int:
    t = coproduct(_element(args, args.expr))
    _emit(args, {"text": format_tensor(t), "terms": tensor_to_json(t)}, format_tensor(t))
    return 0


def cmd_parts(args) -> int:
    names = ("geq0", "leq0", "mixed")
    ps = dict(zip(names, parts(_element(args, args.expr))))
    _emit(
        args,
        {k: _element_payload(v) for k, v in ps.items()},
        "\n".join(f"{k:<6} {format_element(v)}" for k, v in ps.items()),
    )
    return 0


def cmd_leading(args) -> int:
    x = _element(args, args.expr)
    if args.side == "E":
        degs, lead, ms = e_degrees(x), leading_term, m_set(x)
    else:
        degs, lead, ms = f_degrees(x), f_leading_term, f_m_set(x)
    rows = [(w, lead(x, w)) for w in sorted(_maximal(degs))]
    payload = {
        "side": args.side,
        "m_set": sorted(list(m) for m in ms),
        "leading": {format_weight(w): _element_payload(y) for w, y in rows},
    }
    text = [f"L_{format_weight(w)}: {format_element(y)}" for w, y in rows]
    _emit(args, payload, "\n".join(text) or "no leading terms")
    return 0


def cmd_eta_split(args) -> int:
    split = eta_split(_element(args, args.expr))
    payload = {format_weight(eta): _element_payload(y) for eta, y in sorted(split.items())}
    text = "\n".join(f"eta={format_weight(eta)}: {format_element(y)}" for eta, y in sorted(split.items()))
    _emit(args, payload, text)
    return 0


def cmd_shift(args) -> int:
    data = _read_json(args.character)
    phi = Character.from_json(data, args.system, args.env)
    outs = [shift_element(_element(args, t), phi) for t in args.exprs]
    payload = {"character": phi.to_json(), "shifted": [_element_payload(y) for y in outs]}
    _emit(args, payload, "\n".join(format_element(y) for y in outs))
    return 0


def cmd_check(args) -> int:
    gens = load_gens(args.gens, args.system, args.env)
    rep = is_right_coideal(gens, args.degree, args.margin, exhaustive=args.exhaustive)
    lines = [f"{gens.name}: {rep.status} (D={rep.degree}, margin={rep.margin}, legs checked={rep.checked})"]
    for x, leg in rep.witnesses:
        lines.append(f"  witness: left leg {format_element(leg)} of {format_element(x)}")
    _emit(args, rep.to_json(), "\n".join(lines))
    return 0 if rep.verified else 1


def cmd_reduce(args) -> int:
    x = _element(args, args.expr)
    C = load_gens(args.gens, args.system, args.env) if args.gens else None
    fn = reduce_generator if args.side == "E" else reduce_generator_f
    results = []
    for eta, piece in sorted(eta_split(x).items()):
        if args.side == "E" and not m_set(piece) or args.side == "F" and not f_m_set(piece):
            results.append((eta, None, piece))
            continue
        results.append((eta, fn(piece, C, args.degree), piece))
    payload, text = [], []
    for eta, red, piece in results:
        entry = {"eta": format_weight(eta), "input": format_element(piece)}
        text.append(f"eta={format_weight(eta)}: {format_element(piece)}")
        if red is None:
            entry["outputs"] = [format_element(piece)]
            text.append("  nothing to reduce")
        else:
            entry["outputs"] = [format_element(y) for y in red.outputs]
            entry["certified"] = red.certified
            entry["steps"] = len(red.steps)
            text.append(red.trace())
            text.append("  outputs: " + "; ".join(entry["outputs"]))
            text.append(f"  certified: {red.certified}")
        payload.append(entry)
    _emit(args, {"pieces": payload}, "\n".join(text))
    return 0 if all(r is None or r.certified for _, r, _ in results) else 1


def cmd_catalog_verify(args) -> int:
    pattern = args.id or "*"
    if args.data:
        entries = load_catalog(args.data)
    else:
        entries = load_catalog()
    reports = verify_catalog(pattern, args.degree, entries)
    if not reports:
        raise UsageError(f"no catalog entry matches {pattern!r}")
    _emit(args, {"reports": [r.to_json() for r in reports]}, "\n".join(r.line() for r in reports))
    return 0 if all(r.verified for r in reports) else 1


def cmd_catalog_list(args) -> int:
    entries = load_catalog(args.data) if args.data else load_catalog()
    _emit(args, {"ids": [e.id for e in entries]},
          "\n".join(f"{e.id:<24} {e.system}" for e in entries))
    return 0


def cmd_repr(args) -> int:
    if args.system != "A1":
        raise UsageError("repr needs --system A1")
    M = build_simple_module(args.m)
    gens = load_gens(args.gens, args.system, args.env)
    rep = restrict_find_onedim(M, gens)
    vecs = [
        {"vector": [format_scalar(c) for c in o.vector],
         "eigenvalues": [format_scalar(c) for c in o.eigenvalues]}
        for o in rep.eigenvectors
    ]
    payload = {
        "m": args.m,
        "generators": gens.labels,
        "matrices": [[[format_scalar(c) for c in row] for row in matrix_of(g, M)] for g in gens.gens],
        "eigenvectors": vecs,
        "quotient": None if rep.quotient is None else [format_scalar(c) for c in rep.quotient],
    }
    lines = [f"L({args.m}), dim {M.dim}"]
    for v in vecs:
        lines.append(f"  eigenvector ({', '.join(v['vector'])}) eigenvalues {', '.join(v['eigenvalues'])}")
    if not vecs:
        lines.append("  no common eigenvector")
    if payload["quotient"] is not None:
        lines.append(f"  codimension-1 quotient eigenvalues {', '.join(payload['quotient'])}")
    _emit(args, payload, "\n".join(lines))
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", choices=("A1", "A2"), default="A2")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--params", metavar="FILE", help="JSON map of parameter names to scalars")

    p = argparse.ArgumentParser(prog="qcoideal", description="Right coideal subalgebras of U_q(sl2) and U_q(sl3).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("normalize", cmd_normalize, "print the PBW normal form").add_argument("expr")
    add("mul", cmd_mul, "multiply elements left to right").add_argument("exprs", nargs="+")
    sp = add("qcomm", cmd_qcomm, "q-commutator xy - c yx")
    sp.add_argument("--c", default="1")
    sp.add_argument("x")
    sp.add_argument("y")
    add("coproduct", cmd_coproduct, "coproduct of an element").add_argument("expr")
    add("parts", cmd_parts, "split into U>=0, U<=0 and mixed parts").add_argument("expr")
    sp = add("leading", cmd_leading, "leading terms at maximal degrees")
    sp.add_argument("--side", choices=("E", "F"), default="E")
    sp.add_argument("expr")
    add("eta-split", cmd_eta_split, "split by eta = nu - gamma").add_argument("expr")
    sp = add("shift", cmd_shift, "apply a character shift")
    sp.add_argument("--character", required=True, metavar="FILE")
    sp.add_argument("exprs", nargs="+")
    sp = add("check", cmd_check, "bounded right coideal check")
    sp.add_argument("--gens", required=True, metavar="FILE")
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("--margin", type=int, default=2)
    sp.add_argument("--exhaustive", action="store_true")
    sp = add("reduce", cmd_reduce, "reduce a generator to leading-term form")
    sp.add_argument("--side", choices=("E", "F"), default="E")
    sp.add_argument("--gens", metavar="FILE", help="generators of C for the membership check")
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("expr")
    sp = add("repr", cmd_repr, "restrict a simple sl2-module to a subalgebra")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--gens", required=True, metavar="FILE")

    cat = sub.add_parser("catalog", help="catalog operations")
    csub = cat.add_subparsers(dest="action", required=True)
    sp = csub.add_parser("verify", parents=[common], help="verify catalog entries")
    sp.add_argument("--id", help="entry id or glob pattern")
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("--data", metavar="PATH", help="catalog file or directory")
    sp.set_defaults(fn=cmd_catalog_verify)
    sp = csub.add_parser("list", parents=[common], help="list catalog entries")
    sp.add_argument("--data", metavar="PATH")
    sp.set_defaults(fn=cmd_catalog_list)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.alg = get_algebra(args.system)
        args.env = load_params(args.params, args.system)
        return args.fn(args)
    except ReductionError as exc:
        print(f"qcoideal: reduction failed: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ParseError, ConstraintError, ValueError) as exc:
        print(f"qcoideal: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
