"""Decimal rendering of exact rationals and the published Kf reference table."""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

DEFAULT_SIG_DIGITS = 6

# Published Kf(Q_{n,k}) values, rows n = 2..10, columns k = 1..n-1, kept as the
# printed strings. Each string carries its own precision (see significant_digits).
PUBLISHED_KF_TABLE: dict[int, tuple[str, ...]] = {
    2: ("3",),
    3: ("13", "14"),
    4: ("50", "51.6", "54"),
    5: ("182.7", "185.3", "189.1", "194.9"),
    6: ("653.3", "657.9", "664", "672.8", "687.5"),
    7: ("2322.7", "2330.7", "2341.0", "2355.0", "2376.3", "2413.6"),
    8: ("8272", "8286.2", "8304", "8327.4", "8360.4", "8412.4", "8509.4"),
    9: ("29626", "29651", "29682", "29722", "29776", "29854", "29984", "30242"),
    10: ("106870", "106910", "106970", "107040", "107130", "107250", "107440", "107770", "108480"),
}


def round_significant(value: Fraction, sig: int) -> Decimal:
    """Round half-up to `sig` significant digits, exactly (no binary floats)."""
    if sig < 1:
        raise ValueError("need at least one significant digit")
    if value == 0:
        return Decimal(0)
    with localcontext() as ctx:
        # enough digits that the quotient is exact well past the rounding position
        ctx.prec = max(sig, len(str(abs(value.numerator))), len(str(value.denominator))) + sig + 10
        q = Decimal(value.numerator) / Decimal(value.denominator)
        exponent = q.adjusted() - sig + 1
        rounded = q.quantize(Decimal(1).scaleb(exponent), rounding=ROUND_HALF_UP)
        if rounded.adjusted() >= q.adjusted() + 1:
            # carried into a new digit, e.g. 9.99 -> 10.0; drop the surplus digit
            rounded = rounded.quantize(Decimal(1).scaleb(exponent + 1), rounding=ROUND_HALF_UP)
        return rounded


def format_decimal(value: Fraction, sig: int = DEFAULT_SIG_DIGITS, trim: bool = True) -> str:
    """Half-up decimal string to `sig` significant digits.

    With `trim`, a rounding that is exact drops its trailing zeros (258/5 prints
    as 51.6, 3 as 3); otherwise the full precision is kept.
    """
    if trim and value.denominator == 1 and abs(value.numerator) < 10**sig:
        return str(value.numerator)
    d = round_significant(value, sig)
    if trim and Fraction(d) == value:
        d = d.normalize() if d != d.to_integral_value() else d.quantize(Decimal(1))
    if abs(d.adjusted()) >= 16:
        return f"{d:E}"
    return format(d, "f")


def significant_digits(text: str) -> int:
    """Significant digits shown in a printed number.

    Trailing zeros of an integer string are treated as placeholders, so
    "106870" carries 5 digits and "50" carries 1; after a decimal point every
    digit counts ("2341.0" carries 5).
    """
    digits = text.lstrip("-")
    if "." in digits:
        return len(digits.replace(".", "").lstrip("0"))
    return max(1, len(digits.strip("0")))


def matches_printed(value: Fraction, text: str) -> bool:
    return format_decimal(value, significant_digits(text), trim=False) == text


def rational_json(value: Fraction, sig: int = DEFAULT_SIG_DIGITS) -> dict[str, str]:
    return {"num": str(value.numerator), "den": str(value.denominator), "decimal": format_decimal(value, sig)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))
