"""Complex balls: a high-precision midpoint with a certified radius."""

from dataclasses import dataclass
from typing import Any

from mpmath import iv, mp

from .intervals import hi, ival, ivc, lo


@dataclass(frozen=True)
class Ball:
    """The closed disc |w - mid| <= rad.

    Arithmetic goes through `iv.mpc` rectangles, so results contain every
    exact combination of the inputs.
    """

    mid: Any
    rad: Any

    def __post_init__(self):
        object.__setattr__(self, "mid", mp.mpc(self.mid))
        rad = mp.mpf(self.rad)
        if rad < 0:
            raise ValueError("Ball radius must be nonnegative.")
        object.__setattr__(self, "rad", rad)

    @classmethod
    def exact(cls, value: Any) -> "Ball":
        return cls(mp.mpc(value), 0)

    @classmethod
    def from_interval(cls, box: Any, extra_radius: Any = 0) -> "Ball":
        """Ball around an `iv.mpc` box, widened by `extra_radius`."""
        box = ivc(box)
        re_lo, re_hi = lo(box.real), hi(box.real)
        im_lo, im_hi = lo(box.imag), hi(box.imag)
        mid = mp.mpc((re_lo + re_hi) / 2, (im_lo + im_hi) / 2)
        # the midpoint is rounded, so measure to both edges
        dx = max(hi(ival(re_hi) - ival(mid.real)), hi(ival(mid.real) - ival(re_lo)))
        dy = max(hi(ival(im_hi) - ival(mid.imag)), hi(ival(mid.imag) - ival(im_lo)))
        corner = iv.sqrt(ival(dx) ** 2 + ival(dy) ** 2)
        return cls(mid, hi(corner + ival(hi(ival(extra_radius)))))

    def center_box(self) -> Any:
        return iv.mpc(ival(self.mid.real), ival(self.mid.imag))

    def to_interval(self) -> Any:
        """Enclosing rectangle as an `iv.mpc`."""
        r = ival(self.rad)
        re = ival(self.mid.real)
        im = ival(self.mid.imag)
        return iv.mpc(
            iv.mpf([lo(re - r), hi(re + r)]),
            iv.mpf([lo(im - r), hi(im + r)]),
        )

    # === Arithmetic ===
    @staticmethod
    def _lift(other: Any) -> Any:
        if isinstance(other, Ball):
            return other.to_interval()
        return ivc(other)

    def __add__(self, other: Any) -> "Ball":
        return Ball.from_interval(self.to_interval() + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Ball":
        return Ball.from_interval(self.to_interval() - self._lift(other))

    def __rsub__(self, other: Any) -> "Ball":
        return Ball.from_interval(self._lift(other) - self.to_interval())

    def __mul__(self, other: Any) -> "Ball":
        return Ball.from_interval(self.to_interval() * self._lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Ball":
        return Ball.from_interval(self.to_interval() / self._lift(other))

    def __neg__(self) -> "Ball":
        return Ball(-self.mid, self.rad)

    # === Queries ===
    def abs_interval(self) -> Any:
        """Enclosure of {|w| : w in ball}."""
        m = abs(self.center_box())
        r = ival(self.rad)
        return iv.mpf([max(lo(m - r), mp.mpf(0)), hi(m + r)])

    def abs_upper(self) -> Any:
        return hi(self.abs_interval())

    def abs_lower(self) -> Any:
        return lo(self.abs_interval())

    def contains(self, value: Any) -> bool:
        gap = hi(abs(ivc(value) - self.center_box()))
        return gap <= self.rad

    def contains_ball(self, other: "Ball") -> bool:
        gap = hi(abs(other.center_box() - self.center_box()))
        return gap + other.rad <= self.rad

    def overlaps(self, other: "Ball", rel_tol: float = 0.0) -> bool:
        """True when the discs meet after widening by rel_tol * max |mid|."""
        gap = lo(abs(self.center_box() - other.center_box()))
        scale = max(abs(self.mid), abs(other.mid))
        return gap <= self.rad + other.rad + mp.mpf(rel_tol) * scale

    def __repr__(self) -> str:
        return f"Ball({mp.nstr(self.mid, 15)} +/- {mp.nstr(self.rad, 3)})"
