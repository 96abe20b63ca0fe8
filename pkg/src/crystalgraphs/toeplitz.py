"""Exact arithmetic in tensor powers of the algebra generated by the right
shift T, with an integral torus-weight label on each pure tensor.

The basis consists of monomials T^a T*^b per slot; products of monomials are
again monomials, so normal forms keep integer coefficients and equality is
equality of dictionaries.  A term is stored as one flat integer tuple
(a_1, b_1, ..., a_l, b_l, t_1, ..., t_r) where t is the torus weight.
"""

from __future__ import annotations

from typing import Sequence

Monomial = tuple[int, int]


def shift_product(x: Monomial, y: Monomial) -> Monomial:
    """(T^a T*^b)(T^c T*^d) = T^(a+max(c-b,0)) T*^(d+max(b-c,0))."""
    a, b = x
    c, d = y
    if c >= b:
        return (a + c - b, d)
    return (a, d + b - c)


def shift_adjoint(x: Monomial) -> Monomial:
    return (x[1], x[0])


class OperatorElement:
    """Integer combination of pure tensors of shift monomials with a torus label."""

    __slots__ = ("slots", "rank", "terms")

    def __init__(self, slots: int, rank: int, terms: dict[tuple[int, ...], int]):
        self.slots = slots
        self.rank = rank
        self.terms = terms

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, slots: int, rank: int) -> "OperatorElement":
        return cls(slots, rank, {})

    @classmethod
    def monomial(
        cls,
        monos: Sequence[Monomial],
        tau: Sequence[int] | None = None,
        rank: int = 0,
        coeff: int = 1,
    ) -> "OperatorElement":
        if tau is None:
            tau = (0,) * rank
        tau = tuple(tau)
        key = tuple(x for mono in monos for x in mono) + tau
        terms = {key: coeff} if coeff else {}
        return cls(len(monos), len(tau), terms)

    @classmethod
    def unit(cls, slots: int, rank: int) -> "OperatorElement":
        return cls.monomial(((0, 0),) * slots, (0,) * rank)

    # structure --------------------------------------------------------

    def _split(self, key: tuple[int, ...]) -> tuple[tuple[Monomial, ...], tuple[int, ...]]:
        cut = 2 * self.slots
        monos = tuple(
            (key[2 * s], key[2 * s + 1]) for s in range(self.slots)
        )
        return monos, key[cut:]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[tuple[int, ...]]:
        """Set of torus weights appearing in the support."""
        cut = 2 * self.slots
        return {key[cut:] for key in self.terms}

    def homogeneous_degree(self) -> tuple[int, ...] | None:
        """The torus weight when the element is homogeneous, else None."""
        degs = self.degrees()
        if len(degs) == 1:
            return next(iter(degs))
        return None

    # arithmetic -------------------------------------------------------

    def _check_compatible(self, other: "OperatorElement") -> None:
        if self.slots != other.slots or self.rank != other.rank:
            raise ValueError(
                f"incompatible shapes: {self.slots} slots/rank {self.rank} vs "
                f"{other.slots} slots/rank {other.rank}"
            )

    def __add__(self, other: "OperatorElement") -> "OperatorElement":
        self._check_compatible(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            acc = terms.get(key, 0) + c
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        return OperatorElement(self.slots, self.rank, terms)

    def __neg__(self) -> "OperatorElement":
        return OperatorElement(
            self.slots, self.rank, {key: -c for key, c in self.terms.items()}
        )

    def __sub__(self, other: "OperatorElement") -> "OperatorElement":
        return self + (-other)

    def scale(self, factor: int) -> "OperatorElement":
        if factor == 0:
            return OperatorElement.zero(self.slots, self.rank)
        return OperatorElement(
            self.slots, self.rank, {key: factor * c for key, c in self.terms.items()}
        )

    def __mul__(self, other: "OperatorElement") -> "OperatorElement":
        self._check_compatible(other)
        slots = self.slots
        cut = 2 * slots
        out: dict[tuple[int, ...], int] = {}
        rhs = list(other.terms.items())
        for k1, c1 in self.terms.items():
            for k2, c2 in rhs:
                parts = []
                for s in range(0, cut, 2):
                    a, b = k1[s], k1[s + 1]
                    c, d = k2[s], k2[s + 1]
                    if c >= b:
                        parts.append(a + c - b)
                        parts.append(d)
                    else:
                        parts.append(a)
                        parts.append(d + b - c)
                key = tuple(parts) + tuple(
                    x + y for x, y in zip(k1[cut:], k2[cut:])
                )
                acc = out.get(key, 0) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return OperatorElement(slots, self.rank, out)

    def adjoint(self) -> "OperatorElement":
        """Componentwise shift adjoint; negates the torus label."""
        cut = 2 * self.slots
        out = {}
        for key, c in self.terms.items():
            parts = []
            for s in range(0, cut, 2):
                parts.append(key[s + 1])
                parts.append(key[s])
            out[tuple(parts) + tuple(-x for x in key[cut:])] = c
        return OperatorElement(self.slots, self.rank, out)

    def tensor(self, other: "OperatorElement") -> "OperatorElement":
        """Concatenate tensor slots; torus labels add."""
        if self.rank != other.rank:
            raise ValueError("tensor factors carry different torus ranks")
        cut1 = 2 * self.slots
        cut2 = 2 * other.slots
        out: dict[tuple[int, ...], int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = (
                    k1[:cut1]
                    + k2[:cut2]
                    + tuple(x + y for x, y in zip(k1[cut1:], k2[cut2:]))
                )
                acc = out.get(key, 0) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return OperatorElement(self.slots + other.slots, self.rank, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OperatorElement)
            and self.slots == other.slots
            and self.rank == other.rank
            and self.terms == other.terms
        )

    __hash__ = None

    # rendering --------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            c = self.terms[key]
            monos, tau = self._split(key)
            factors = []
            for a, b in monos:
                if a == 0 and b == 0:
                    factors.append("1")
                    continue
                part = ""
                if a:
                    part += "T" if a == 1 else f"T^{a}"
                if b:
                    if part:
                        part += " "
                    part += "T*" if b == 1 else f"T*^{b}"
                factors.append(part)
            text = " ⊗ ".join(factors)
            if any(tau):
                text += f" · z^{tau}"
            if c == 1:
                bits.append(f"+ {text}")
            elif c == -1:
                bits.append(f"- {text}")
            elif c > 0:
                bits.append(f"+ {c} {text}")
            else:
                bits.append(f"- {-c} {text}")
        joined = " ".join(bits)
        return joined[2:] if joined.startswith("+ ") else joined

    def __repr__(self) -> str:
        return f"OperatorElement({self.render()})"


def projection_p0(rank: int = 0) -> OperatorElement:
    """P0 = 1 - T T*, the rank-one projection onto the bottom basis vector."""
    return OperatorElement.unit(1, rank) - OperatorElement.monomial(
        ((1, 1),), (0,) * rank
    )


def sl2_limit(m: int, i: int, j: int, rank: int = 0) -> OperatorElement:
    """Limit of the (i, j) matrix coefficient of a string of length m.

    Positions are counted from the top of the string, 0-based: the value is
    T^j P0 T*^(m-i) for i > j, T^i T*^(m-i) for i = j, and 0 for i < j.
    """
    if not (0 <= i <= m and 0 <= j <= m):
        raise ValueError(f"positions ({i}, {j}) out of range for string length {m}")
    tau = (0,) * rank
    if i < j:
        return OperatorElement.zero(1, rank)
    if i == j:
        return OperatorElement.monomial(((i, m - i),), tau)
    return OperatorElement.monomial(((j, m - i),), tau) - OperatorElement.monomial(
        ((j + 1, m - i + 1),), tau
    )
