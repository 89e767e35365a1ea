"""
Command-line front end.

Exit codes: 0 success, 1 ``verify`` mismatch, 2 certified not factorizable,
3 inconclusive, 4 input error.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import (
    EmptyIntersection,
    IrrationalSplitting,
    NormIdenticallyZero,
    OddDegree,
    ParseError,
    SearchExhausted,
    SplitFactorError,
    Unsupported,
)
from .factor import (
    Decision,
    Factorization,
    FailureCertificate,
    Verdict,
    allfactor,
    factor_real_polynomial,
    is_factorizable,
    ngfactor,
    one_family_obstruction,
    verify_factorization,
)
from .motion import HPoint, trajectory_sample, write_trajectory_csv
from .parse import parse
from .poly import SplitPolynomial, p_reduce, to_json
from .printing import format_factors
from .realpoly import DEFAULT_TUPLE_LIMIT, factor_tuples

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_NOT_FACTORIZABLE = 2
EXIT_INCONCLUSIVE = 3
EXIT_INPUT = 4


class InputError(Exception):
    pass


def _err(msg: str):
    print(msg, file=sys.stderr)


def _real_json(p) -> list[str]:
    return [str(c) for c in p.coeffs]


def _fz_json(fz: Factorization, content_factors) -> dict:
    out = {
        "factors": [to_json(f) for f in content_factors + list(fz.factors)],
        "multiplier": _real_json(fz.multiplier),
    }
    if fz.tuple_used is not None:
        out["tuple"] = [str(q) for q in fz.tuple_used]
    if fz.h_steps:
        out["h_steps"] = [
            {
                "h": [str(x) for x in s.h.coeffs],
                "quadratic": str(s.quadratic),
                "multiplier": str(s.multiplier),
                "items": {"item1": s.items.item1, "item2": s.items.item2, "item3": s.items.item3},
            }
            for s in fz.h_steps
        ]
    return out


def _prepare(text: str):
    """Parse, normalize to monic, and split off real content.

    Returns ``(reduced, lead, content, content_factors)`` with
    ``input = lead * content * reduced``.
    """
    p = parse(text)
    if p.is_zero() or p.degree < 1:
        raise InputError(f"{text!r} is not a polynomial of positive degree")
    if p.norm().is_zero():
        raise InputError(f"{p} has identically zero norm polynomial")
    lead = p.leading
    if not lead.is_invertible():
        raise InputError(f"leading coefficient {lead} of {p} is not invertible")
    if lead != 1:
        p = SplitPolynomial([lead.inverse() * c for c in p.coeffs])
    reduced, content = p_reduce(p)
    content_factors = factor_real_polynomial(content) if content.degree > 0 else []
    if content.degree > 0:
        _err(f"real content {content} split off")
    return reduced, lead, content, content_factors


def _render(lead, content_factors, fz: Factorization) -> str:
    prefix = "" if lead == 1 else f"({lead})"
    body = format_factors(content_factors + list(fz.factors))
    if fz.multiplier.degree > 0:
        return f"T = {fz.multiplier}\nT*P = {prefix}{body}"
    return f"P = {prefix}{body}"


def _describe_certificate(c: FailureCertificate) -> str:
    return f"no factorization for tuple ({', '.join(map(str, c.tuple_used))}): {c}"


def _trivial(reduced, lead, content_factors, as_json):
    fz = Factorization((), tuple_used=())
    if as_json:
        print(json.dumps(_fz_json(fz, content_factors)))
    else:
        print(_render(lead, content_factors, fz))
    return EXIT_OK


def cmd_factor(args) -> int:
    reduced, lead, content, content_factors = _prepare(args.expr)
    if reduced.degree == 0:
        return _trivial(reduced, lead, content_factors, args.json)
    tuples = factor_tuples(reduced.norm(), args.limit)
    if args.tuple is not None and not 0 <= args.tuple < len(tuples):
        raise InputError(f"tuple index {args.tuple} out of range (0..{len(tuples) - 1})")

    if args.allfactor:
        overrides = [parse(h) for h in args.h_override or ()]
        for h in overrides:
            if h.degree != 1 or not h.is_monic():
                raise InputError(f"override {h} is not of the form t - h")
        f = tuples[args.tuple] if args.tuple is not None else None
        fz = allfactor(reduced, f, h_override=overrides, seed=args.seed)
        assert verify_factorization(reduced, fz)
        for step in fz.h_steps:
            _err(f"multiplier {SplitPolynomial.linear(step.h)} at {step.quadratic}: items 1-3 verified")
        return _emit(fz, lead, content_factors, args.json)

    if args.all_tuples:
        found = None
        results = []
        for idx, f in enumerate(tuples):
            out = ngfactor(reduced, f)
            label = f"tuple {idx} ({', '.join(map(str, f))})"
            if isinstance(out, Factorization):
                found = found or out
                if not args.json:
                    print(f"{label}: {_render(lead, content_factors, out)}")
                results.append({"tuple": [str(q) for q in f], **_fz_json(out, content_factors)})
            else:
                if not args.json:
                    print(f"{label}: fails at {out}")
                results.append({"tuple": [str(q) for q in f], "failure": str(out),
                                "remainder_class": out.remainder_class.kind.value})
        if args.json:
            print(json.dumps({"tuples": results, "truncated": tuples.truncated}))
        if found is not None:
            return EXIT_OK
        if tuples.truncated:
            _err(f"tuple limit {args.limit} reached")
            return EXIT_INCONCLUSIVE
        decision = is_factorizable(reduced, args.limit)
        return _decision_exit(decision)

    if args.tuple is not None:
        out = ngfactor(reduced, tuples[args.tuple])
        if isinstance(out, FailureCertificate):
            _err(_describe_certificate(out))
            return EXIT_NOT_FACTORIZABLE
        return _emit(out, lead, content_factors, args.json)

    decision = is_factorizable(reduced, args.limit)
    if decision.verdict is Verdict.YES:
        return _emit(decision.factorization, lead, content_factors, args.json)
    _report_decision(decision, reduced)
    label = "not factorizable" if decision.verdict is Verdict.NO else "inconclusive"
    _err(f"{label}: {decision.reason}")
    return _decision_exit(decision)


def _emit(fz, lead, content_factors, as_json) -> int:
    if as_json:
        data = _fz_json(fz, content_factors)
        if lead != 1:
            data["lead"] = [str(x) for x in lead.coeffs]
        print(json.dumps(data))
    else:
        print(_render(lead, content_factors, fz))
    return EXIT_OK


def _report_decision(decision: Decision, p):
    for n, cls in decision.remainder_classes.items():
        _err(f"rem(P, {n}) = {p.rem(n.polynomial)}: {cls}")
    for cert in decision.certificates:
        _err(_describe_certificate(cert))


def _decision_exit(decision: Decision) -> int:
    return {
        Verdict.YES: EXIT_OK,
        Verdict.NO: EXIT_NOT_FACTORIZABLE,
        Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[decision.verdict]


def cmd_check(args) -> int:
    reduced, lead, content, content_factors = _prepare(args.expr)
    if reduced.degree == 0:
        print("Yes: the polynomial is real")
        return EXIT_OK
    decision = is_factorizable(reduced, args.limit)
    if decision.verdict is Verdict.YES:
        print(f"Yes: {_render(lead, content_factors, decision.factorization)}")
    elif decision.verdict is Verdict.NO:
        print(f"No: {decision.reason}")
    else:
        print(f"Inconclusive: {decision.reason}")
    if decision.verdict is not Verdict.YES:
        _report_decision(decision, reduced)
        if decision.obstruction is None:
            family, _ = one_family_obstruction(reduced)
            if family is not None:
                _err(f"remainders lie in the {family} family")
    return _decision_exit(decision)


def cmd_verify(args) -> int:
    text = " ".join(args.equation)
    if text.count("=") != 1:
        raise InputError("expected exactly one '=' separating two expressions")
    lhs, rhs = text.split("=")
    mode = "euclid" if args.euclid else "split"
    a, b = parse(lhs, mode), parse(rhs, mode)
    if a == b:
        print("equal")
        return EXIT_OK
    print("not equal")
    _err(f"left side:  {a}\nright side: {b}")
    return EXIT_MISMATCH


def cmd_sample(args) -> int:
    p = parse(args.expr)
    if p.is_zero() or p.norm().is_zero():
        raise InputError(f"{p} has identically zero norm polynomial")
    x = parse(args.point)
    if x.degree != 0:
        raise InputError(f"point {x} must be a constant quaternion")
    try:
        point = HPoint(x.coeffs[0])
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    ts = [s.strip() for s in args.ts.split(",") if s.strip()]
    try:
        samples = trajectory_sample(p, point, ts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad sample list {args.ts!r}: {exc}") from exc
    write_trajectory_csv(samples, sys.stdout)
    return EXIT_OK


_PARAM_ALIASES = {"lambda": "λ", "l": "λ", "mu": "μ", "m": "μ", "nu": "ν", "rho": "ρ"}


def _parse_params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise InputError(f"parameter {item!r} is not of the form name=value")
        name, value = (s.strip() for s in item.split("=", 1))
        name = _PARAM_ALIASES.get(name, name)
        try:
            out[name] = Fraction(value)
        except ValueError as exc:
            raise InputError(f"parameter {name} has non-rational value {value!r}") from exc
    return out


def cmd_euclid_factor(args) -> int:
    from .euclid import motion_factorize, study_check

    m = parse(args.expr, "euclid")
    if m.is_zero() or m.degree < 1:
        raise InputError("expected a motion polynomial of positive degree")
    if not study_check(m):
        raise InputError(f"{m} violates the Study condition")
    params = _parse_params(args.params)
    try:
        fz = motion_factorize(m, params=params)
    except (EmptyIntersection, Unsupported) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_INCONCLUSIVE
    if fz.product() != m:  # pragma: no cover - motion_factorize divides exactly
        raise AssertionError("factor product differs from the input")
    if fz.family is not None:
        _err(f"zero family: {fz.family}")
        values = ", ".join(f"{n}={v}" for n, v in zip(fz.family.names, fz.params))
        if values:
            _err(f"parameters: {values}")
    if args.json:
        print(json.dumps({"factors": [
            {"primal": to_json(f.primal)["coeffs"], "dual": to_json(f.dual)["coeffs"]} for f in fz.factors
        ]}))
    else:
        print(f"P = {fz}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="splitfactor", description="Factor split-quaternion polynomials.")
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("factor", help="factor into monic linear factors")
    f.add_argument("expr")
    f.add_argument("--tuple", type=int, metavar="K", help="use only the K-th factor tuple (0-based)")
    f.add_argument("--all-tuples", action="store_true", help="report every factor tuple")
    f.add_argument("--limit", type=int, default=DEFAULT_TUPLE_LIMIT, metavar="M")
    f.add_argument("--allfactor", action="store_true", help="multiply by a real polynomial when stuck")
    f.add_argument("--h-override", action="append", metavar="EXPR", help="multiplier t - h (repeatable)")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_factor)

    c = sub.add_parser("check", help="decide factorizability")
    c.add_argument("expr")
    c.add_argument("--limit", type=int, default=DEFAULT_TUPLE_LIMIT, metavar="M")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help='check "A = B" exactly')
    v.add_argument("equation", nargs="+")
    v.add_argument("--euclid", action="store_true", help="parse in dual-quaternion mode")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", help="sample the trajectory [P(t) x conj(P(t))] as CSV")
    s.add_argument("expr")
    s.add_argument("--point", required=True)
    s.add_argument("--ts", required=True, help="comma-separated rationals or inf")
    s.set_defaults(func=cmd_sample)

    e = sub.add_parser("euclid-factor", help="factor a motion polynomial")
    e.add_argument("expr")
    e.add_argument("--params", help="free family parameters, e.g. λ=1,μ=-1")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_euclid_factor)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_INPUT
    except (IrrationalSplitting, SearchExhausted) as exc:
        _err(f"inconclusive: {exc}")
        return EXIT_INCONCLUSIVE
    except (InputError, NormIdenticallyZero, OddDegree, ValueError) as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT
    except SplitFactorError as exc:
        _err(f"error: {type(exc).__name__}: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
