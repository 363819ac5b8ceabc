"""
Truncated power series with exact rational coefficients.
"""

from fractions import Fraction
from math import factorial
from typing import Iterable, Tuple, Union

Scalar = Union[int, Fraction]


class PowerSeries:
    """Coefficients a_0 .. a_N of a formal power series, exact through z^N.

    Binary operations truncate to the smaller order of their operands, so a
    result never claims more precision than its inputs carry.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar], order: int):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        coeffs = [Fraction(c) for c in coefficients][: order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)

    # Construction

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, power: int, order: int, coefficient: Scalar = 1) -> "PowerSeries":
        """coefficient * z**power, truncated at ``order``."""
        coeffs = [0] * power + [coefficient]
        return cls(coeffs, order)

    # Access

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient z^{k} beyond order {self.order}")
        return self._coeffs[k]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"PowerSeries([{shown}{more}], order={self.order})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self._coeffs, min(order, self.order))

    def egf_count(self, n: int) -> Union[int, Fraction]:
        """n! * [z^n], the number of labelled structures of size n."""
        value = self[n] * factorial(n)
        return value.numerator if value.denominator == 1 else value

    # Arithmetic

    def _coerce(self, other: Union["PowerSeries", Scalar]) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self._coeffs], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return PowerSeries((self._coeffs[k] + other._coeffs[k] for k in range(order + 1)), order)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self._coeffs], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            if a[i]:
                ai = a[i]
                for j in range(order + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return PowerSeries(out, order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c / other for c in self._coeffs], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self * other.reciprocal()

    def __pow__(self, k: int) -> "PowerSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"integer power must be a nonnegative int, got {k!r}")
        result = PowerSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by z**k, keeping the order."""
        return PowerSeries([0] * k + list(self._coeffs), self.order)

    def unshift(self, k: int) -> "PowerSeries":
        """Divide by z**k; the low coefficients must vanish."""
        if any(self._coeffs[:k]):
            raise ValueError(f"series is not divisible by z^{k}")
        if k > self.order:
            raise ValueError(f"cannot divide order-{self.order} series by z^{k}")
        return PowerSeries(self._coeffs[k:], self.order - k)

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries([0], 0)
        return PowerSeries((k * self._coeffs[k] for k in range(1, self.order + 1)), self.order - 1)

    def integral(self) -> "PowerSeries":
        """Antiderivative with zero constant term."""
        coeffs = [Fraction(0)] + [c / (k + 1) for k, c in enumerate(self._coeffs)]
        return PowerSeries(coeffs, self.order + 1)

    def reciprocal(self) -> "PowerSeries":
        a = self._coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = sum((a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
            out.append(-acc * inv0)
        return PowerSeries(out, self.order)

    def log(self) -> "PowerSeries":
        """Logarithm of a series with constant term 1."""
        if self._coeffs[0] != 1:
            raise ValueError(f"log needs constant term 1, got {self._coeffs[0]}")
        if self.order == 0:
            return PowerSeries([0], 0)
        return (self.derivative() * self.reciprocal()).integral()

    def exp(self) -> "PowerSeries":
        """Exponential of a series with constant term 0."""
        a = self._coeffs
        if a[0] != 0:
            raise ValueError(f"exp needs constant term 0, got {a[0]}")
        out = [Fraction(1)]
        for k in range(1, self.order + 1):
            acc = sum((j * a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
            out.append(acc / k)
        return PowerSeries(out, self.order)

    def power(self, alpha: Scalar) -> "PowerSeries":
        """Real power with rational exponent of a series with constant term 1.

        Uses the recurrence k b_k = sum_{j=1..k} ((alpha + 1) j - k) a_j b_{k-j}.
        """
        a = self._coeffs
        if a[0] != 1:
            raise ValueError(f"rational power needs constant term 1, got {a[0]}")
        alpha = Fraction(alpha)
        out = [Fraction(1)]
        for k in range(1, self.order + 1):
            acc = sum(
                (((alpha + 1) * j - k) * a[j] * out[k - j] for j in range(1, k + 1) if a[j]),
                Fraction(0),
            )
            out.append(acc / k)
        return PowerSeries(out, self.order)

    def sqrt(self) -> "PowerSeries":
        return self.power(Fraction(1, 2))

    def odd_part_only(self) -> bool:
        return not any(c for k, c in enumerate(self._coeffs) if k % 2 == 0)

    def even_part_only(self) -> bool:
        return not any(c for k, c in enumerate(self._coeffs) if k % 2 == 1)


def z(order: int) -> PowerSeries:
    """The series z."""
    return PowerSeries.monomial(1, order)


def one(order: int) -> PowerSeries:
    return PowerSeries.constant(1, order)
