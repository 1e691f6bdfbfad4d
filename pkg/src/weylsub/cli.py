"""Command-line front end: one subcommand per library operation, JSON on stdout.

Exit codes: 0 ok, 2 unknown (bounds exhausted, retry with larger ones),
1 error, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .certificate import Unknown
from .classify import Classification, InconsistentBase, Triple, classify, forward, verify_triple
from .dxy import GeneralPoly, PurePower, dxy_member
from .graded import GradedGenSet, NotMember, Status, cofinite_check, graded_generators, graded_member
from .invariants import invariant_basis, reynolds
from .parse import ParseError, parse_graded, parse_op, parse_poly
from .perms import sn_uniform
from .poly import as_rational, format_rational
from .ramification import hurwitz_sides, ramification_profile, uniform_ramified
from .subalgebra import FilteredGenSet, SearchBounds, base, member
from .twist import canonicalize_p, trace_poly, twist, untwist
from .weyl import mul, apply

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Reply(dict):
    """Ordered JSON payload; ``status`` determines the exit code."""

    @classmethod
    def ok(cls, result, **extra):
        return cls(status="ok", result=result, **extra)

    @classmethod
    def unknown(cls, reason: str, bounds: SearchBounds | None = None):
        out = cls(status="unknown", result=None, reason=reason)
        if bounds is not None:
            out["bounds_used"] = bounds.as_dict()
        return out


def _rat(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


# ---------------------------------------------------------------- generator sets

def _load_file(path: str) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("generators"), list):
        raise ValueError(f"{path}: expected an object with a 'generators' list")
    return doc


def _named_exprs(args) -> tuple[list[tuple[str, str]], dict]:
    if args.gens_file:
        doc = _load_file(args.gens_file)
        pairs = []
        for k, entry in enumerate(doc["generators"], start=1):
            if isinstance(entry, str):
                pairs.append((f"g{k}", entry))
            else:
                pairs.append((str(entry.get("name", f"g{k}")), str(entry["expr"])))
        return pairs, dict(doc.get("bounds") or {})
    if not args.gen:
        raise UsageError("give generators with --gen EXPR (repeatable) or --gens-file FILE")
    return [(f"g{k}", e) for k, e in enumerate(args.gen, start=1)], {}


def _bounds(args, from_file: dict) -> SearchBounds:
    vals = SearchBounds().as_dict()
    for key in vals:
        if key in from_file:
            vals[key] = int(from_file[key])
        flag = getattr(args, key, None)
        if flag is not None:
            vals[key] = flag
    return SearchBounds(**vals)


def _weyl_gens(args) -> tuple[FilteredGenSet, SearchBounds]:
    pairs, file_bounds = _named_exprs(args)
    gens = FilteredGenSet(tuple((n, parse_op(e)) for n, e in pairs))
    return gens, _bounds(args, file_bounds)


def _graded_gens(args) -> GradedGenSet:
    pairs, _ = _named_exprs(args)
    return GradedGenSet(tuple((n, parse_graded(e)) for n, e in pairs))


# ---------------------------------------------------------------- commands

def _cmd_mul(args):
    return _Reply.ok(mul(parse_op(args.a), parse_op(args.b)).to_str())


def _cmd_apply(args):
    return _Reply.ok(apply(parse_op(args.op), parse_poly(args.f)).to_str())


def _cmd_symbol(args):
    D = parse_op(args.op)
    order = D.order
    return _Reply.ok({"order": "-inf" if D.is_zero() else order, "symbol": D.symbol().to_str()})


def _cmd_reynolds(args):
    return _Reply.ok(reynolds(parse_op(args.op), args.n).to_str())


def _cmd_invariant_basis(args):
    return _Reply.ok([b.to_str() for b in invariant_basis(args.n, args.dmax)])


def _cmd_member(args):
    gens, bounds = _weyl_gens(args)
    res = member(parse_op(args.op), gens, bounds)
    if isinstance(res, Unknown):
        return _Reply.unknown(res.reason, bounds)
    return _Reply.ok(True, certificate=str(res), bounds_used=bounds.as_dict())


def _cmd_base(args):
    gens, bounds = _weyl_gens(args)
    return _Reply.ok([f.to_str() for f in base(gens, bounds)], bounds_used=bounds.as_dict())


def _cmd_graded_member(args):
    res = graded_member(parse_graded(args.h), _graded_gens(args))
    if isinstance(res, NotMember):
        return _Reply.ok(False, reason=res.reason)
    return _Reply.ok(True, certificate=str(res))


def _cmd_cofinite(args):
    v = cofinite_check(_graded_gens(args), args.max_degree)
    result = {"verdict": v.status.value}
    if v.nullstellensatz_degree is not None:
        result["N"] = v.nullstellensatz_degree
    if v.witness is not None:
        result["witness"] = [format_rational(c) for c in v.witness]
    if v.base_generator is not None:
        result["base_generator"] = v.base_generator
    if v.status is Status.UNKNOWN:
        return _Reply(status="unknown", result=None, reason=v.reason)
    out = _Reply.ok(result)
    if v.certificate is not None:
        out["certificate"] = f"xi^{v.nullstellensatz_degree} = {v.certificate}"
    return out


def _cmd_graded_gens(args):
    ops = [parse_op(e) for e in args.ops]
    return _Reply.ok([s.to_str() for s in graded_generators(ops, args.word_length)])


def _cmd_dxy(args):
    D = parse_op(args.op)
    if args.poly is not None:
        cov = GeneralPoly(parse_poly(args.poly), args.bound)
    else:
        cov = PurePower(args.center, args.power)
    v = dxy_member(D, cov)
    out = _Reply.ok(v.member)
    if not v.member:
        out["witness"] = {"k": v.k, "residue": v.residue.to_str()}
    if v.heuristic_bound is not None:
        out["heuristic_bound"] = v.heuristic_bound
    return out


def _cmd_twist(args):
    return _Reply.ok(twist(parse_op(args.op), parse_poly(args.p)).to_str())


def _cmd_untwist(args):
    return _Reply.ok(untwist(parse_op(args.op), parse_poly(args.p)).to_str())


def _cmd_trace(args):
    return _Reply.ok(trace_poly(parse_poly(args.f), args.m, args.a).to_str())


def _cmd_canonicalize(args):
    p, r = canonicalize_p(parse_poly(args.p), args.m, args.a)
    return _Reply.ok({"p": p.to_str(), "r": r.to_str("t")})


def _triple(args) -> Triple:
    return Triple.normalized(args.a, args.m, parse_poly(args.p))


def _cmd_classify(args):
    gens, bounds = _weyl_gens(args)
    res = classify(gens, bounds)
    if isinstance(res, Unknown):
        return _Reply.unknown(res.reason, bounds)
    assert isinstance(res, Classification)
    out = _Reply.ok(res.triple.as_dict())
    if args.certificates:
        out["certificate"] = _both_ways(res.verification, gens)
        out["bounds_used"] = bounds.as_dict()
    return out


def _both_ways(ver, gens: FilteredGenSet) -> str:
    there = [f"{label} = {c}" for label, c in zip(("u^m", "eta^m"), ver.triple_in_gens)]
    # the reverse certificates are words in g1 = u^m, g2 = eta^m
    back = [f"{name} = {c}" for name, c in zip(gens.names, ver.gens_in_triple)]
    return "; ".join(there + back) + " [g1 = u^m, g2 = eta^m]" if back else "; ".join(there)


def _cmd_verify_triple(args):
    gens, bounds = _weyl_gens(args)
    t = _triple(args)
    ver = verify_triple(t, gens, bounds)
    if ver.status is None:
        return _Reply.unknown(ver.reason, bounds)
    out = _Reply.ok(ver.status, triple=t.as_dict())
    if ver.status:
        out["certificate"] = _both_ways(ver, gens)
    else:
        out["certificate"] = str(ver.obstruction)
    out["bounds_used"] = bounds.as_dict()
    return out


def _cmd_forward(args):
    t = _triple(args)
    gens = forward(t)
    return _Reply.ok([op.to_str() for op in gens.ops], triple=t.as_dict())


def _cmd_ramify(args):
    prof = ramification_profile(parse_poly(args.q))
    entries = [{"critical_value": format_rational(e.critical_value),
                "points": [format_rational(p) for p in e.points],
                "indices": list(e.indices),
                "fiber_indices": list(e.fiber_indices)} for e in prof.entries]
    return _Reply.ok({"degree": prof.degree, "entries": entries,
                      "infinity_index": prof.infinity_index})


def _cmd_uniform(args):
    return _Reply.ok(uniform_ramified(parse_poly(args.q)))


def _cmd_hurwitz(args):
    lhs, rhs = hurwitz_sides(parse_poly(args.q))
    return _Reply.ok(lhs == rhs, lhs=lhs, rhs=rhs)


def _cmd_sn_uniform(args):
    return _Reply.ok(sn_uniform(args.n, args.perms))


# ---------------------------------------------------------------- argument parsing

def _add_gens(p: argparse.ArgumentParser, bounds: bool = True) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--gens-file", metavar="FILE",
                     help='JSON {"generators": [{"name", "expr"}], "bounds": {...}}')
    src.add_argument("--gen", action="append", metavar="EXPR", help="generator (repeatable)")
    if bounds:
        p.add_argument("--word-length", dest="word_length", type=int)
        p.add_argument("--x-degree-cap", dest="x_degree_cap", type=int)
        p.add_argument("--order-cap", dest="order_cap", type=int)


def _add_triple(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=_rat, default=Fraction(0))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", default="0", help="twist polynomial in x")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="weylsub", description="Exact computations with subalgebras of the Weyl algebra.")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        return p

    p = cmd("mul", _cmd_mul, "product of two operators")
    p.add_argument("a")
    p.add_argument("b")
    p = cmd("apply", _cmd_apply, "apply an operator to a polynomial in x")
    p.add_argument("op")
    p.add_argument("f")
    p = cmd("symbol", _cmd_symbol, "order and principal symbol")
    p.add_argument("op")
    p = cmd("reynolds", _cmd_reynolds, "projection onto mu_n invariants")
    p.add_argument("op")
    p.add_argument("--n", type=int, required=True)
    p = cmd("invariant-basis", _cmd_invariant_basis, "invariant monomials x^i d^j, i+j <= dmax")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p = cmd("member", _cmd_member, "bounded subalgebra membership with certificate")
    p.add_argument("op")
    _add_gens(p)
    p = cmd("base", _cmd_base, "order-0 part of the bounded span")
    _add_gens(p)
    p = cmd("graded-member", _cmd_graded_member, "membership in Q[gens] inside Q[x, xi]")
    p.add_argument("h")
    _add_gens(p, bounds=False)
    p = cmd("cofinite", _cmd_cofinite, "is Q[x, xi] finite over Q[gens]")
    _add_gens(p, bounds=False)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=20)
    p = cmd("graded-gens", _cmd_graded_gens, "symbols of the bounded span")
    p.add_argument("ops", nargs="+")
    p.add_argument("--word-length", dest="word_length", type=int, default=3)
    p = cmd("dxy", _cmd_dxy, "does the operator preserve Q[t]")
    p.add_argument("op")
    cov = p.add_mutually_exclusive_group(required=True)
    cov.add_argument("--power", type=int, help="t = (x - center)^power")
    cov.add_argument("--poly", help="t = q(x), checked heuristically")
    p.add_argument("--center", type=_rat, default=Fraction(0))
    p.add_argument("--bound", type=int, help="largest power of q checked (with --poly)")
    for name, fn in (("twist", _cmd_twist), ("untwist", _cmd_untwist)):
        p = cmd(name, fn, "d -> d + p" if name == "twist" else "d -> d - p")
        p.add_argument("op")
        p.add_argument("--p", required=True)
    p = cmd("trace", _cmd_trace, "trace of f from Q[x] down to Q[t], t = (x-a)^m")
    p.add_argument("f")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=_rat, default=Fraction(0))
    p = cmd("canonicalize", _cmd_canonicalize, "canonical representative of a twist polynomial")
    p.add_argument("p")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=_rat, default=Fraction(0))
    p = cmd("classify", _cmd_classify, "triple (a, m, p) of a graded cofinite subalgebra")
    _add_gens(p)
    p.add_argument("--certificates", action="store_true", help="include both inclusion proofs")
    p = cmd("verify-triple", _cmd_verify_triple, "compare <gens> with the algebra of a triple")
    _add_triple(p)
    _add_gens(p)
    p = cmd("forward", _cmd_forward, "generators of the algebra of a triple")
    _add_triple(p)
    for name, fn in (("ramify", _cmd_ramify), ("uniform", _cmd_uniform), ("hurwitz", _cmd_hurwitz)):
        p = cmd(name, fn, f"{name} data of x -> q(x)")
        p.add_argument("q")
    p = cmd("sn-uniform", _cmd_sn_uniform, "does H in S_n contain a transposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("perms", nargs="*", metavar="PERM", help='cycle notation, e.g. "(1 2 3)"')
    return top


def _dump(payload: dict) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=True)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        reply = args.func(args)
    except UsageError as exc:
        print(f"weylsub {args.command}: {exc}", file=err)
        return EXIT_USAGE
    except (ParseError, InconsistentBase, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        reply = _Reply(status="error", result=None, message=str(exc) or type(exc).__name__)
        if isinstance(exc, ParseError):
            reply["offset"] = exc.offset
            reply["expected"] = sorted(exc.expected)
        if isinstance(exc, InconsistentBase):
            reply["certificate"] = f"{exc.element} = {exc.certificate}"
    print(_dump(reply), file=out)
    return {"ok": EXIT_OK, "unknown": EXIT_UNKNOWN}.get(reply["status"], EXIT_ERROR)


def main() -> None:
    sys.exit(run())
