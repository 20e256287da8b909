# formatting.py
"""Text and JSON renderings of evaluated values."""
import json

from .algebra import EndoMatrix, IntPoly, ModulePoint
from .expressions import kind_of


def digit_form(value, params):
    """value written in base p, highest place first: 103 -> '5^2*4 + 3'."""
    terms = []
    for place in reversed(range(params.m)):
        digit = value // params.p ** place % params.p
        if not digit:
            continue
        if place == 0:
            terms.append(str(digit))
        elif place == 1:
            terms.append(f"{params.p}*{digit}")
        else:
            terms.append(f"{params.p}^{place}*{digit}")
    return " + ".join(terms) or "0"


def format_matrix(A):
    """The literal on the first line, then the second row in digit form."""
    (a, b), (c_full, d) = A.rows()
    return "\n".join([
        f"[[{a},{b}],[{c_full},{d}]]",
        f"  {c_full} = {digit_form(c_full, A.params)}",
        f"  {d} = {digit_form(d, A.params)}",
    ])


def format_point(v):
    return f"({v.x},{int(v.y)})"


def format_poly(g):
    terms = []
    for power in reversed(range(len(g.coeffs))):
        coeff = g.coeffs[power]
        if not coeff:
            continue
        if power == 0:
            terms.append(str(coeff))
            continue
        monomial = "x" if power == 1 else f"x^{power}"
        terms.append(monomial if coeff == 1 else f"{coeff}{monomial}")
    return " + ".join(terms) or "0"


def format_value(value, params):
    if isinstance(value, EndoMatrix):
        return format_matrix(value)
    if isinstance(value, ModulePoint):
        return format_point(value)
    if isinstance(value, IntPoly):
        return format_poly(value)
    return f"{value} = {digit_form(value, params)}"


def json_value(value):
    if isinstance(value, EndoMatrix):
        return [list(row) for row in value.rows()]
    if isinstance(value, ModulePoint):
        return [value.x, int(value.y)]
    if isinstance(value, IntPoly):
        return list(reversed(value.coeffs))
    return value


def to_json(value, params, kind=None):
    """One JSON object: {"p", "m", "kind", "value"}; plain integers only."""
    return json.dumps({
        'p': params.p,
        'm': params.m,
        'kind': kind or kind_of(value),
        'value': json_value(value),
    })
