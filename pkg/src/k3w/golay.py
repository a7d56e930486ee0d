"""Binary Golay code on Omega = {inf, 0, ..., 22} and its Steiner system S(5,8,24).

Coordinates are ordered (inf, 0, 1, ..., 22); a subset of Omega is a 24-bit
mask with bit 0 for inf and bit i+1 for the point i of F_23.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

INF = "inf"
OMEGA: tuple = (INF,) + tuple(range(23))
FULL = (1 << 24) - 1


class GolayValidationError(RuntimeError):
    pass


def index(p) -> int:
    """Bit position of a point of Omega."""
    if p == INF or p == "∞":
        return 0
    p = int(p)
    if not 0 <= p < 23:
        raise ValueError(f"{p} is not a point of P^1(F_23)")
    return p + 1


def label(i: int):
    return INF if i == 0 else i - 1


def to_mask(points: Iterable) -> int:
    m = 0
    for p in points:
        m |= 1 << index(p)
    return m


def to_points(mask: int) -> list:
    return [label(i) for i in range(24) if mask >> i & 1]


def weight(mask: int) -> int:
    return bin(mask).count("1")


def fmt(mask: int) -> str:
    return "{" + ",".join("∞" if p == INF else str(p) for p in to_points(mask)) + "}"


# Octads printed alongside the 112 roots: the base octad K and the 30 octads of
# the roots meeting r_K.  K''_1 and K''_3 coincide as printed.
PRINTED_K = (INF, 0, 2, 3, 4, 8, 9, 21)
PRINTED_NEIGHBOURS: dict[str, tuple] = {
    "K1": (INF, 0, 5, 6, 7, 13, 16, 17),
    "K2": (INF, 0, 5, 7, 11, 14, 18, 19),
    "K3": (INF, 0, 5, 10, 13, 14, 15, 22),
    "K4": (INF, 0, 5, 11, 12, 15, 17, 20),
    "K5": (INF, 0, 6, 7, 10, 12, 15, 18),
    "K6": (INF, 0, 6, 10, 14, 17, 19, 20),
    "K7": (INF, 0, 6, 11, 12, 13, 19, 22),
    "K8": (INF, 0, 7, 15, 16, 19, 20, 22),
    "K9": (INF, 0, 10, 11, 13, 16, 18, 20),
    "K10": (INF, 0, 12, 14, 16, 17, 18, 22),
    "K'1": (INF, 1, 2, 5, 6, 8, 9, 16),
    "K'2": (INF, 1, 2, 4, 7, 9, 11, 14),
    "K'3": (INF, 1, 2, 8, 13, 14, 15, 21),
    "K'4": (INF, 1, 2, 4, 5, 12, 20, 21),
    "K'5": (INF, 1, 2, 3, 4, 6, 15, 18),
    "K'6": (INF, 1, 2, 4, 8, 10, 17, 19),
    "K'7": (INF, 1, 2, 3, 9, 12, 13, 19),
    "K'8": (INF, 1, 2, 3, 7, 8, 20, 22),
    "K'9": (INF, 1, 2, 3, 10, 11, 16, 21),
    "K'10": (INF, 1, 2, 9, 17, 18, 21, 22),
    "K''1": (INF, 1, 3, 4, 5, 9, 10, 22),
    "K''2": (INF, 1, 3, 5, 8, 18, 19, 21),
    "K''3": (INF, 1, 3, 4, 5, 9, 10, 22),
    "K''4": (INF, 1, 3, 8, 9, 11, 15, 17),
    "K''5": (INF, 1, 7, 8, 9, 10, 12, 21),
    "K''6": (INF, 1, 3, 6, 9, 14, 20, 21),
    "K''7": (INF, 1, 4, 6, 8, 11, 21, 22),
    "K''8": (INF, 1, 4, 9, 15, 16, 19, 21),
    "K''9": (INF, 1, 4, 8, 9, 13, 18, 20),
    "K''10": (INF, 1, 3, 4, 8, 12, 14, 16),
}


def printed_octads() -> dict[str, int]:
    out = {"K": to_mask(PRINTED_K)}
    out.update({k: to_mask(v) for k, v in PRINTED_NEIGHBOURS.items()})
    return out


def _quadratic_residues() -> set[int]:
    return {(i * i) % 23 for i in range(1, 23)}


def _span(gens: Sequence[int]) -> tuple[list[int], list[int]]:
    basis: list[int] = []
    for g in gens:
        for b in basis:
            g = min(g, g ^ b)
        if g:
            basis.append(g)
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    return basis, sorted(words)


def _generators(variant: str, parity: str) -> list[int]:
    qr = _quadratic_residues()
    base = {
        "nonresidue": set(range(1, 23)) - qr,
        "residue": qr,
    }[variant]
    gens = []
    for shift in range(23):
        s = {(b + shift) % 23 for b in base}
        m = sum(1 << (x + 1) for x in s)
        # "even": extend by inf to even weight; "with-zero": adjoin the shift point
        if parity == "even":
            m |= 1
        else:
            m |= 1 << (shift + 1)
        gens.append(m)
    gens.append(FULL)
    return gens


# residue/non-residue generator set times the two extension conventions
VARIANTS = (
    ("nonresidue", "even"),
    ("residue", "with-zero"),
    ("residue", "even"),
    ("nonresidue", "with-zero"),
)


@dataclass(frozen=True)
class SteinerSystem:
    codewords: tuple[int, ...]
    octads: tuple[int, ...]
    variant: tuple[str, str]
    _five: dict = field(repr=False, compare=False, hash=False, default_factory=dict)
    _codeset: frozenset = field(repr=False, compare=False, hash=False, default=frozenset())

    def is_codeword(self, mask: int) -> bool:
        return mask in self._codeset

    def octad_through(self, five: Iterable | int) -> int:
        m = five if isinstance(five, int) else to_mask(five)
        if weight(m) != 5:
            raise ValueError("octad_through needs exactly five points")
        return self._five[m]

    def weight_enumerator(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.codewords:
            k = weight(w)
            out[k] = out.get(k, 0) + 1
        return dict(sorted(out.items()))

    def octads_containing(self, points: Iterable = (), avoiding: Iterable = ()) -> list[int]:
        inc, exc = to_mask(points), to_mask(avoiding)
        return [o for o in self.octads if o & inc == inc and not o & exc]

    def __len__(self) -> int:
        return len(self.octads)


def _five_index(octads: Sequence[int]) -> dict[int, int]:
    idx: dict[int, int] = {}
    for o in octads:
        bits = [1 << i for i in range(24) if o >> i & 1]
        for c in combinations(bits, 5):
            m = c[0] | c[1] | c[2] | c[3] | c[4]
            if m in idx:
                raise GolayValidationError(f"5-set {fmt(m)} lies in two octads")
            idx[m] = o
    return idx


def _build_variant(variant: str, parity: str) -> SteinerSystem | None:
    basis, words = _span(_generators(variant, parity))
    if len(basis) != 12:
        return None
    octads = tuple(sorted(w for w in words if weight(w) == 8))
    if len(octads) != 759:
        return None
    return SteinerSystem(tuple(words), octads, (variant, parity), _five_index(octads), frozenset(words))


def validate(system: SteinerSystem, exhaustive: bool = True) -> list[str]:
    """Return the list of failed validation checks (empty means valid)."""
    problems = []
    if len(system.octads) != 759:
        problems.append(f"octad count {len(system.octads)} != 759")
    if system.weight_enumerator() != {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}:
        problems.append(f"weight enumerator {system.weight_enumerator()}")
    if exhaustive:
        missing = 0
        for c in combinations(range(24), 5):
            m = (1 << c[0]) | (1 << c[1]) | (1 << c[2]) | (1 << c[3]) | (1 << c[4])
            if m not in system._five:
                missing += 1
        if missing:
            problems.append(f"{missing} five-subsets lie in no octad")
    codes = system._codeset
    for name, m in printed_octads().items():
        if m not in codes or weight(m) != 8:
            problems.append(f"printed octad {name} = {fmt(m)} is not an octad")
    return problems


def build_golay(exhaustive: bool = True) -> SteinerSystem:
    """Build and self-validate S(5,8,24) in the labeling of Todd's table."""
    tried = []
    for variant, parity in VARIANTS:
        system = _build_variant(variant, parity)
        if system is None:
            tried.append(f"{variant}/{parity}: not a [24,12,8] code")
            continue
        problems = validate(system, exhaustive=exhaustive)
        if not problems:
            return system
        tried.append(f"{variant}/{parity}: {problems[0]}")
    raise GolayValidationError("no construction matches the printed octads: " + "; ".join(tried))


_CACHE: dict[str, SteinerSystem] = {}


def golay() -> SteinerSystem:
    """Process-wide cached, validated Steiner system."""
    if "s" not in _CACHE:
        _CACHE["s"] = build_golay()
    return _CACHE["s"]


def printed_report(system: SteinerSystem) -> dict:
    """Validate the 30-neighbour list as printed: distinct count and duplicates."""
    masks = {k: to_mask(v) for k, v in PRINTED_NEIGHBOURS.items()}
    seen: dict[int, list[str]] = {}
    for k, m in masks.items():
        seen.setdefault(m, []).append(k)
    dups = [names for names in seen.values() if len(names) > 1]
    valid = [k for k, m in masks.items() if system.is_codeword(m) and weight(m) == 8]
    return {
        "printed": len(masks),
        "distinct": len(seen),
        "valid": len(valid),
        "duplicates": dups,
    }
