"""Sparse Pauli-string algebra with exact phase tracking.

Pauli strings are stored sparsely as a map ``site -> letter`` with letters in
``{"X", "Y", "Z"}`` (absent sites are identity) plus a phase from
``{+1, -1, +i, -i}`` kept as a power of ``i``.  A :class:`PauliSum` is an
associative map from phase-free strings to real coefficients; conjugation by a
Pauli rotation keeps coefficients real because ``i * G * P`` carries phase
``+-i`` whenever ``G`` and ``P`` anticommute.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, Iterator, Mapping, Tuple

Site = Tuple[int, ...]

# local product table: (a, b) -> (result, phase power of i)
_PRODUCT = {
    ("X", "X"): (None, 0),
    ("Y", "Y"): (None, 0),
    ("Z", "Z"): (None, 0),
    ("X", "Y"): ("Z", 1),
    ("Y", "X"): ("Z", 3),
    ("Y", "Z"): ("X", 1),
    ("Z", "Y"): ("X", 3),
    ("Z", "X"): ("Y", 1),
    ("X", "Z"): ("Y", 3),
}

_PHASES = (1.0, 1.0j, -1.0, -1.0j)


class PauliString:
    """An immutable sparse Pauli string ``phase * prod_j letter_j``."""

    __slots__ = ("_items", "_phase_k", "_hash")

    def __init__(self, letters: Mapping[Site, str] | Iterable[Tuple[Site, str]] = (),
                 phase_k: int = 0):
        items = dict(letters)
        for site, letter in items.items():
            if letter not in ("X", "Y", "Z"):
                raise ValueError(f"invalid Pauli letter {letter!r} at site {site}")
        self._items = tuple(sorted(items.items()))
        self._phase_k = phase_k % 4
        self._hash = hash((self._items, self._phase_k))

    @property
    def letters(self) -> Dict[Site, str]:
        return dict(self._items)

    @property
    def phase_k(self) -> int:
        return self._phase_k

    @property
    def phase(self) -> complex:
        return _PHASES[self._phase_k]

    @property
    def weight(self) -> int:
        return len(self._items)

    def support(self) -> Tuple[Site, ...]:
        return tuple(site for site, _ in self._items)

    def letter_at(self, site: Site) -> str | None:
        for s, letter in self._items:
            if s == site:
                return letter
        return None

    def phase_free(self) -> "PauliString":
        if self._phase_k == 0:
            return self
        return PauliString(self._items, 0)

    def with_phase(self, phase_k: int) -> "PauliString":
        return PauliString(self._items, phase_k)

    def is_identity(self) -> bool:
        return not self._items

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return (isinstance(other, PauliString)
                and self._items == other._items
                and self._phase_k == other._phase_k)

    def __lt__(self, other: "PauliString") -> bool:
        return (self._items, self._phase_k) < (other._items, other._phase_k)

    def __repr__(self) -> str:
        prefix = {0: "+", 1: "+i*", 2: "-", 3: "-i*"}[self._phase_k]
        if not self._items:
            return f"{prefix}I"
        body = "*".join(f"{letter}{site}" for site, letter in self._items)
        return prefix + body


def pauli(spec: Mapping[Site, str], phase_k: int = 0) -> PauliString:
    """Shorthand constructor, e.g. ``pauli({(0, 0): "Z", (0, 1): "Z"})``."""
    return PauliString(spec, phase_k)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Exact product ``a * b`` with accumulated phase."""
    out: Dict[Site, str] = a.letters
    k = a.phase_k + b.phase_k
    for site, letter in b.letters.items():
        cur = out.get(site)
        if cur is None:
            out[site] = letter
            continue
        res, dk = _PRODUCT[(cur, letter)]
        k += dk
        if res is None:
            del out[site]
        else:
            out[site] = res
    return PauliString(out, k)


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff ``[a, b] = 0``; strings commute when the number of
    site-wise anticommuting pairs is even."""
    clashes = 0
    letters_b = b.letters
    for site, letter in a.letters.items():
        other = letters_b.get(site)
        if other is not None and other != letter:
            clashes += 1
    return clashes % 2 == 0


def anticommutes(a: PauliString, b: PauliString) -> bool:
    return not commutes(a, b)


def evaluate_on_plus(p: PauliString) -> int:
    """Expectation ``<+|^N p |+>^N``: 1 per X or identity site, 0 if any Y/Z.

    The phase must be real (+-1); a +-i phase means the caller is evaluating a
    non-Hermitian string and is a bug.
    """
    if p.phase_k % 2 == 1:
        raise ValueError("imaginary phase in Hermitian expectation")
    sign = 1 if p.phase_k == 0 else -1
    for _, letter in p._items:
        if letter != "X":
            return 0
    return sign


def evaluate_on_zero(p: PauliString) -> int:
    """Expectation ``<0|^N p |0>^N``: Z and identity give 1, X/Y give 0."""
    if p.phase_k % 2 == 1:
        raise ValueError("imaginary phase in Hermitian expectation")
    sign = 1 if p.phase_k == 0 else -1
    for _, letter in p._items:
        if letter != "Z":
            return 0
    return sign


class PauliSum:
    """Real-coefficient combination of phase-free Pauli strings.

    Term phases are folded into the coefficients on construction, so the
    stored keys always carry phase +1.  Zero coefficients are dropped.
    """

    __slots__ = ("_terms",)

    #: coefficients with magnitude below this are pruned (underflow hygiene
    #: only; physics truncation lives in propagation.TruncationPolicy)
    PRUNE_EPS = 1e-300

    def __init__(self, terms: Mapping[PauliString, float] | Iterable[Tuple[PauliString, float]] = ()):
        acc: Dict[PauliString, float] = {}
        for string, coeff in dict(terms).items():
            if string.phase_k == 1 or string.phase_k == 3:
                raise ValueError("PauliSum coefficients must be real; "
                                 f"term {string!r} has imaginary phase")
            sign = 1.0 if string.phase_k == 0 else -1.0
            key = string.phase_free()
            acc[key] = acc.get(key, 0.0) + sign * coeff
        self._terms = {k: v for k, v in acc.items() if abs(v) > self.PRUNE_EPS}

    @classmethod
    def single(cls, string: PauliString, coeff: float = 1.0) -> "PauliSum":
        return cls({string: coeff})

    def items(self) -> Iterator[Tuple[PauliString, float]]:
        """Deterministic iteration in canonical key order."""
        return iter(sorted(self._terms.items(), key=lambda kv: kv[0]))

    def coeff(self, string: PauliString) -> float:
        return self._terms.get(string.phase_free(), 0.0)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        acc = dict(self._terms)
        for key, val in other._terms.items():
            acc[key] = acc.get(key, 0.0) + val
        return PauliSum(acc)

    def scaled(self, factor: float) -> "PauliSum":
        return PauliSum({k: factor * v for k, v in self._terms.items()})

    def norm_sq(self) -> float:
        """Frobenius norm squared in the orthonormal Pauli basis."""
        return math.fsum(v * v for v in self._terms.values())

    def evaluate(self, single_site) -> float:
        """Sum of ``coeff * eval(string)`` for a per-string evaluator."""
        return math.fsum(c * single_site(p) for p, c in self._terms.items())

    def __repr__(self) -> str:
        body = " ".join(f"{c:+.6g}*{p!r}" for p, c in self.items())
        return f"PauliSum({body or '0'})"


def conjugate_by_generator(sum_: PauliSum, generator: PauliString, alpha: float) -> PauliSum:
    """Heisenberg conjugation ``exp(i a G/2) P exp(-i a G/2)`` term by term.

    Commuting terms pass through; an anticommuting term becomes
    ``cos(a) P + i sin(a) G P``, with the +-i phase of ``G P`` folded into the
    real coefficient.  Term count at most doubles.
    """
    if generator.phase_k != 0:
        raise ValueError("generator must be phase-free Hermitian")
    if alpha == 0.0:
        return sum_
    cos_a = math.cos(alpha)
    sin_a = math.sin(alpha)
    acc: Dict[PauliString, float] = {}
    for string, coeff in sum_._terms.items():
        if commutes(string, generator):
            acc[string] = acc.get(string, 0.0) + coeff
            continue
        acc[string] = acc.get(string, 0.0) + cos_a * coeff
        prod = multiply(generator, string)
        # G,P anticommuting Hermitian strings force phase(GP) = +-i
        if prod.phase_k == 1:
            sign = -1.0  # i * (+i) = -1
        elif prod.phase_k == 3:
            sign = 1.0   # i * (-i) = +1
        else:
            raise AssertionError("anticommuting product must have +-i phase")
        key = prod.phase_free()
        acc[key] = acc.get(key, 0.0) + sign * sin_a * coeff
    return PauliSum(acc)


def conjugate(sum_: PauliSum, gate, theta: float) -> PauliSum:
    """Conjugate by a ZY rotation gate: generator ``Z_c Y_t`` at angle
    ``multiplier * theta``."""
    generator = PauliString({gate.control: "Z", gate.target: "Y"})
    return conjugate_by_generator(sum_, generator, float(gate.multiplier) * theta)
