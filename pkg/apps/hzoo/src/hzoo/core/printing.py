from fractions import Fraction

from hzoo.core.polyring import CoefficientField, Exponent, Poly, re_im


def _monomial(exps: Exponent) -> str:
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors)


def _term(exps: Exponent, magnitude: Fraction) -> str:
    mono = _monomial(exps)
    if not mono:
        return str(magnitude)
    if magnitude == 1:
        return mono
    return f"{magnitude}*{mono}"


def pretty(p: Poly) -> str:
    """Render a polynomial in the textual format, terms in descending graded-lex order.

    Rational polynomials round-trip through the parser. Gaussian polynomials are
    rendered as "(<re>) + i*(<im>)", which is display-only.

    Example:
        >>> pretty(Poly(2, {(2, 0): 1, (0, 2): -1}))
        'x1^2 - x2^2'
    """
    if p.field is CoefficientField.QQ_I:
        re, im = re_im(p)
        return f"({pretty(re)}) + i*({pretty(im)})"
    if p.is_zero:
        return "0"
    chunks: list[str] = []
    for exps, coeff in p.sorted_terms():
        body = _term(exps, abs(coeff))
        if not chunks:
            chunks.append(f"-{body}" if coeff < 0 else body)
        else:
            chunks.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(chunks)
