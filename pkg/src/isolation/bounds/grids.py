from fractions import Fraction

from ..errors import PreconditionError


def grid_bounds(kind: str, s: int, t: int) -> tuple[Fraction, Fraction]:
    """(lower, upper) on the isolation number of C_s x C_t, P_s x C_t or P_s x P_t.

    The lower bounds come from the degree bound m / Delta^2; the upper bounds are
    st/8 + 3(s+t+3)/8, st/8 + (3s+t+3)/8 and st/8 + (s+t+1)/8.
    """
    st = Fraction(s * t, 8)
    match kind:
        case "torus":
            return st, st + Fraction(3 * (s + t + 3), 8)
        case "cylinder":
            return st - Fraction(t, 16), st + Fraction(3 * s + t + 3, 8)
        case "grid":
            return st - Fraction(s + t, 16), st + Fraction(s + t + 1, 8)
    raise PreconditionError(f"unknown grid kind {kind!r}")
