"""Text rendering of scalars, quaternions and polynomials.

The output is valid input for :func:`splitfactor.parse.parse`, so
``parse(format_polynomial(P)) == P`` for every polynomial with rational
coefficients.
"""

from __future__ import annotations

from fractions import Fraction

UNITS = ("", "i", "j", "k")


def format_scalar(x) -> str:
    return str(x)


def _term(c, unit: str) -> str:
    if not unit:
        return str(c)
    if c == 1:
        return unit
    if c == -1:
        return "-" + unit
    return f"{c}{unit}"


def format_quaternion(q, units=UNITS) -> str:
    terms = [_term(c, u) for c, u in zip(q.coeffs, units) if c]
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def _is_negative(x) -> bool:
    return isinstance(x, (int, Fraction)) and x < 0


def _power(var: str, d: int) -> str:
    if d == 0:
        return ""
    if d == 1:
        return var
    return f"{var}^{d}"


def _signed_terms(coeffs, fmt, var):
    """Yield ``(negative, text)`` per nonzero term, highest degree first."""
    for d in range(len(coeffs) - 1, -1, -1):
        q = coeffs[d]
        if not q:
            continue
        nonzero = [c for c in _components(q) if c]
        negative = _is_negative(nonzero[0])
        if negative:
            q = -q
        body = fmt(q)
        single = len(nonzero) == 1
        power = _power(var, d)
        if not power:
            text = body if single else f"({body})"
        elif body == "1":
            text = power
        elif single:
            text = f"{body}*{power}"
        else:
            text = f"({body})*{power}"
        yield negative, text


def _components(q):
    if hasattr(q, "coeffs"):
        return q.coeffs
    return (q,)


def join_terms(terms) -> str:
    out = ""
    for negative, text in terms:
        if not out:
            out = f"-{text}" if negative else text
        else:
            out += f" - {text}" if negative else f" + {text}"
    return out or "0"


def format_polynomial(p, var: str = "t") -> str:
    return join_terms(_signed_terms(p.coeffs, format_quaternion, var))


def format_real_polynomial(p, var: str = "t") -> str:
    return join_terms(_signed_terms(p.coeffs, str, var))


def format_factors(factors) -> str:
    """Render a product of polynomials as ``(t - j)(t - i)``."""
    if not factors:
        return "1"
    return "".join(f"({f})" for f in factors)
