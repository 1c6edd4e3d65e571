"""Monomial orders: degrevlex, lex and block (elimination) orders.

Monomials are bare exponent tuples.  An order provides a sort ``key`` such
that larger keys mean larger monomials; 1 (the zero tuple) is always minimal.
An optional variable permutation reorders which variables are compared first:
``permutation[i]`` is the ring index of the i-th most significant variable.
"""

from __future__ import annotations

from typing import Optional, Sequence


class MonomialOrder:
    __slots__ = ("kind", "split", "permutation")

    def __init__(self, kind: str, split: Optional[int] = None,
                 permutation: Optional[Sequence[int]] = None):
        if kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and split is None:
            raise ValueError("block order needs a split index")
        self.kind = kind
        self.split = split
        self.permutation = tuple(permutation) if permutation is not None else None

    # -- constructors -------------------------------------------------------

    @classmethod
    def degrevlex(cls, permutation=None) -> "MonomialOrder":
        return cls("degrevlex", permutation=permutation)

    @classmethod
    def lex(cls, permutation=None) -> "MonomialOrder":
        return cls("lex", permutation=permutation)

    @classmethod
    def block(cls, split: int, permutation=None) -> "MonomialOrder":
        """Eliminate the first ``split`` (permuted) variables.

        Compares degrevlex on the first block, ties broken degrevlex on the
        second, so basis elements whose leading monomial avoids the first
        block generate the elimination ideal.
        """
        return cls("block", split=split, permutation=permutation)

    @classmethod
    def elimination(cls, nvars: int, keep: Sequence[int]) -> "MonomialOrder":
        """Block order eliminating every variable not listed in ``keep``."""
        keep = list(keep)
        eliminated = [i for i in range(nvars) if i not in keep]
        return cls.block(len(eliminated), permutation=eliminated + keep)

    # -- comparison ---------------------------------------------------------

    def key(self, monomial: tuple):
        m = monomial
        if self.permutation is not None:
            m = tuple(monomial[p] for p in self.permutation)
        if self.kind == "degrevlex":
            return (sum(m),) + tuple(-e for e in reversed(m))
        if self.kind == "lex":
            return m
        head, tail = m[: self.split], m[self.split:]
        return (
            (sum(head),) + tuple(-e for e in reversed(head)),
            (sum(tail),) + tuple(-e for e in reversed(tail)),
        )

    def greater(self, a: tuple, b: tuple) -> bool:
        return self.key(a) > self.key(b)

    def sorted_descending(self, monomials) -> list:
        return sorted(monomials, key=self.key, reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and (self.kind, self.split, self.permutation)
            == (other.kind, other.split, other.permutation)
        )

    def __hash__(self):
        return hash((self.kind, self.split, self.permutation))

    def __repr__(self):
        bits = [self.kind]
        if self.split is not None:
            bits.append(f"split={self.split}")
        if self.permutation is not None:
            bits.append(f"perm={self.permutation}")
        return f"MonomialOrder({', '.join(bits)})"


DEGREVLEX = MonomialOrder.degrevlex()
LEX = MonomialOrder.lex()
