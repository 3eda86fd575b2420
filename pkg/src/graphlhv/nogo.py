"""Submeasurement verification and parity-contradiction certifiers.

Two impossibility arguments are mechanized here as GF(2) constraint systems.

Distance certifier: on a ring of 12f nodes (f odd) there are five global
measurements, pairwise indistinguishable within communication distance
2f - 1, each containing a submeasurement with a certain outcome. A model
whose per-site outputs depend only on the measurement pattern within
distance d assigns one +/-1 variable per (site, observable, local view);
the five certain outcomes then impose parity equations that are jointly
unsatisfiable.

Site-invariance certifier: a protocol whose sign-flip decisions are constant
on orbits of measurement-preserving graph automorphisms, applied on top of
hidden variables whose baseline product over any signed stabilizer word is
+1, must explain each certain submeasurement sign by orbit flips alone. One
flip variable per orbit plus one parity equation per certain submeasurement
again yields an unsatisfiable system on the right graphs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .graphs import (
    Graph,
    NodeColoring,
    UnsupportedSizeError,
    automorphisms,
    ball,
    orbits,
    padded_ring,
    ring,
)
from .lhv import _EXACT_GUARD, FlipRules, STANDARD_RULES, product_report
from .oracle import Verdict, classify
from .pauli import Measurement, generator_product_sign, is_submeasurement

_SUPPORT_GUARD = 20


# ---------------------------------------------------------------------------
# Parity constraint systems over GF(2)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContextVariable:
    """Hidden value at a site for one observable in one local view.

    The view is the measurement restricted to the site's distance-d ball,
    written in canonical node order, so equal views get equal keys and the
    same variable.
    """

    site: int
    observable: str
    view: tuple[tuple[int, str], ...]

    def short_name(self) -> str:
        return f"{self.observable}{self.site}"


@dataclass(frozen=True)
class OrbitVariable:
    """One sign-flip decision shared by a whole automorphism orbit."""

    sites: tuple[int, ...]
    observable: str

    def short_name(self) -> str:
        return f"{self.observable}{{{','.join(map(str, self.sites))}}}"


@dataclass(frozen=True)
class Equation:
    """A parity equation: the XOR of its variables equals rhs."""

    variables: frozenset
    rhs: int
    label: str = ""


def parity_equation(keys: Iterable[Hashable], rhs: int, label: str = "") -> Equation:
    """Reduce a variable multiset mod 2 and attach the right-hand bit."""
    counts: dict[Hashable, int] = {}
    for k in keys:
        counts[k] = counts.get(k, 0) + 1
    odd = frozenset(k for k, c in counts.items() if c % 2)
    return Equation(odd, rhs & 1, label)


@dataclass(frozen=True)
class ParityConstraintSystem:
    variables: tuple
    equations: tuple[Equation, ...]

    def __post_init__(self) -> None:
        declared = set(self.variables)
        for eq in self.equations:
            missing = eq.variables - declared
            if missing:
                raise ValueError(f"equation {eq.label!r} references undeclared variables {missing}")

    def to_json_dict(self) -> dict:
        index = {key: i for i, key in enumerate(self.variables)}
        return {
            "variables": [_variable_json(key) for key in self.variables],
            "equations": [
                {
                    "label": eq.label,
                    "rhs": eq.rhs,
                    "variables": sorted(index[v] for v in eq.variables),
                }
                for eq in self.equations
            ],
        }


def _variable_json(key) -> dict:
    if isinstance(key, ContextVariable):
        return {
            "site": key.site,
            "observable": key.observable,
            "view": [[node, letter] for node, letter in key.view],
        }
    if isinstance(key, OrbitVariable):
        return {"orbit": list(key.sites), "observable": key.observable}
    return {"name": repr(key)}


def _system_from_equations(equations: Sequence[Equation]) -> ParityConstraintSystem:
    seen: dict[Hashable, None] = {}
    for eq in equations:
        for key in sorted(eq.variables, key=repr):
            seen.setdefault(key, None)
    return ParityConstraintSystem(tuple(seen), tuple(equations))


@dataclass(frozen=True)
class GF2Solution:
    """Either a satisfying assignment or a certificate of inconsistency.

    The certificate is a list of equation indices whose mod-2 sum has an
    empty left side and right-hand bit 1.
    """

    consistent: bool
    witness: dict | None = None
    certificate: tuple[int, ...] | None = None


def gf2_solve(system: ParityConstraintSystem) -> GF2Solution:
    """Gauss-Jordan elimination with combination tracking, over int bitsets."""
    index = {key: i for i, key in enumerate(system.variables)}
    reduced: list[list[int]] = []  # rows [pivot, mask, rhs, combo]
    for eq_i, eq in enumerate(system.equations):
        mask = 0
        for key in eq.variables:
            mask |= 1 << index[key]
        rhs = eq.rhs
        combo = 1 << eq_i
        for row in reduced:
            if (mask >> row[0]) & 1:
                mask ^= row[1]
                rhs ^= row[2]
                combo ^= row[3]
        if mask == 0:
            if rhs == 1:
                cert = tuple(i for i in range(len(system.equations)) if (combo >> i) & 1)
                return GF2Solution(False, None, cert)
            continue
        pivot = (mask & -mask).bit_length() - 1
        for row in reduced:
            if (row[1] >> pivot) & 1:
                row[1] ^= mask
                row[2] ^= rhs
                row[3] ^= combo
        reduced.append([pivot, mask, rhs, combo])
    witness = {key: 0 for key in system.variables}
    for pivot, _mask, rhs, _combo in reduced:
        witness[system.variables[pivot]] = rhs
    return GF2Solution(True, witness, None)


def gf2_nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of {x : every row . x = 0 mod 2}, rows and vectors as bitmasks."""
    reduced: list[tuple[int, int]] = []  # (pivot, mask)
    for mask in rows:
        for pivot, pmask in reduced:
            if (mask >> pivot) & 1:
                mask ^= pmask
        if mask == 0:
            continue
        pivot = (mask & -mask).bit_length() - 1
        reduced = [
            (p, pm ^ mask if (pm >> pivot) & 1 else pm) for p, pm in reduced
        ]
        reduced.append((pivot, mask))
    pivot_cols = {p for p, _ in reduced}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = 1 << free
        for pivot, pmask in reduced:
            if (pmask >> free) & 1:
                vec |= 1 << pivot
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# Submeasurement verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubsetCheck:
    sites: tuple[int, ...]
    sub: Measurement
    oracle: Verdict
    lhv: Verdict
    match: bool

    def to_json_dict(self) -> dict:
        return {
            "sites": list(self.sites),
            "sub": str(self.sub),
            "oracle": self.oracle.to_json_dict(),
            "lhv": self.lhv.to_json_dict(),
            "match": self.match,
        }


@dataclass(frozen=True)
class SubmeasurementReport:
    measurement: Measurement
    rules: str
    subsets_checked: int
    deterministic_subsets: int
    mismatches: tuple[SubsetCheck, ...]
    entries: tuple[SubsetCheck, ...] = ()

    def __post_init__(self) -> None:
        for check in self.mismatches + self.entries:
            if not is_submeasurement(check.sub, self.measurement):
                raise ValueError(f"{check.sub} is not a submeasurement of {self.measurement}")

    @property
    def clean(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "measurement": str(self.measurement),
            "rules": self.rules,
            "subsets_checked": self.subsets_checked,
            "deterministic_subsets": self.deterministic_subsets,
            "mismatches": [c.to_json_dict() for c in self.mismatches],
        }


def _scan_subsets(
    g: Graph,
    m: Measurement,
    rules: FlipRules,
    lo: int,
    hi: int,
    include_matches: bool,
) -> tuple[int, list[SubsetCheck], list[SubsetCheck]]:
    support = m.support()
    deterministic = 0
    mismatches: list[SubsetCheck] = []
    entries: list[SubsetCheck] = []
    for smask in range(lo, hi):
        sites = tuple(support[i] for i in range(len(support)) if (smask >> i) & 1)
        sub = m.restricted_to(sites)
        oracle_v = classify(g, sub)
        lhv_v = product_report(g, m, sites, rules).verdict
        match = oracle_v == lhv_v
        if oracle_v.is_deterministic:
            deterministic += 1
        check = SubsetCheck(sites, sub, oracle_v, lhv_v, match)
        if not match:
            mismatches.append(check)
        if include_matches:
            entries.append(check)
    return deterministic, mismatches, entries


def verify_all_submeasurements(
    g: Graph,
    m: Measurement,
    rules: FlipRules = STANDARD_RULES,
    include_matches: bool = False,
    workers: int = 1,
) -> SubmeasurementReport:
    """Compare the oracle with the protocol on every subset of the support.

    Subsets are enumerated in a canonical order (the support sorted, subset
    masks ascending), so reports are deterministic and mergeable across
    workers.
    """
    if len(m) != g.n:
        raise ValueError(f"measurement length {len(m)} does not match n={g.n}")
    if g.n > _EXACT_GUARD:
        raise UnsupportedSizeError(
            f"the sweep needs exact verdicts, guarded at {_EXACT_GUARD} nodes; got {g.n}"
        )
    support = m.support()
    if len(support) > _SUPPORT_GUARD:
        raise UnsupportedSizeError(
            f"subset sweep is guarded at {_SUPPORT_GUARD} support sites, got "
            f"{len(support)}; sample subsets instead"
        )
    total = 1 << len(support)
    if workers <= 1 or total < 1024:
        deterministic, mismatches, entries = _scan_subsets(g, m, rules, 0, total, include_matches)
    else:
        chunk = -(-total // workers)
        ranges = [(i, min(i + chunk, total)) for i in range(0, total, chunk)]
        deterministic = 0
        mismatches = []
        entries = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_scan_subsets, g, m, rules, lo, hi, include_matches)
                for lo, hi in ranges
            ]
            for fut in futures:
                det, mis, ent = fut.result()
                deterministic += det
                mismatches.extend(mis)
                entries.extend(ent)
    return SubmeasurementReport(
        m, rules.name, total, deterministic, tuple(mismatches), tuple(entries)
    )


def find_certain_submeasurements(g: Graph, m: Measurement) -> tuple[tuple[frozenset[int], int], ...]:
    """All subsets of the support whose restricted measurement is deterministic."""
    support = m.support()
    if len(support) > _SUPPORT_GUARD:
        raise UnsupportedSizeError(
            f"subset search is guarded at {_SUPPORT_GUARD} support sites, got {len(support)}"
        )
    out = []
    for smask in range(1 << len(support)):
        sites = frozenset(support[i] for i in range(len(support)) if (smask >> i) & 1)
        verdict = classify(g, m.restricted_to(sites))
        if verdict.is_deterministic:
            out.append((sites, verdict.value))
    return tuple(out)


def y_stabilizer_supports(g: Graph, max_kernel: int = 16) -> tuple[tuple[frozenset[int], int], ...]:
    """Supports S such that Y on S and I elsewhere is a signed stabilizer word.

    A generator product is all-Y-or-I exactly when its bit-vector lies in the
    kernel of (adjacency + identity) over GF(2); the sign comes from the
    product's phase. Equivalent to the subset sweep but usable on graphs far
    beyond the sweep guard.
    """
    rows = [(1 << (j - 1)) | g.neighbor_masks[j - 1] for j in range(1, g.n + 1)]
    basis = gf2_nullspace(rows, g.n)
    if len(basis) > max_kernel:
        raise UnsupportedSizeError(f"kernel dimension {len(basis)} exceeds guard {max_kernel}")
    out = []
    for combo in range(1 << len(basis)):
        vec = 0
        for i, b in enumerate(basis):
            if (combo >> i) & 1:
                vec ^= b
        sites = frozenset(j + 1 for j in range(g.n) if (vec >> j) & 1)
        sign = generator_product_sign(g, sites)
        letters = "".join("Y" if j in sites else "I" for j in range(1, g.n + 1))
        verdict = classify(g, Measurement(letters))
        assert verdict == Verdict.deterministic(sign)
        out.append((sites, sign))
    return tuple(sorted(out, key=lambda p: (len(p[0]), sorted(p[0]))))


# ---------------------------------------------------------------------------
# Ring instances for the distance bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CertainSubmeasurement:
    """A global measurement together with one of its certain submeasurements."""

    name: str
    global_measurement: Measurement
    sub: Measurement
    expected_sign: int

    @property
    def support(self) -> tuple[int, ...]:
        return self.sub.support()


@dataclass(frozen=True)
class RingInstance:
    """The five-measurement construction on a ring of 12f nodes, f odd.

    The ring is viewed as a triangle: three vertex nodes (multiples of 4f)
    whose measurement varies between X and Y, three midpoint nodes
    (odd multiples of 2f), odd nodes always measuring Y, and the remaining
    segment nodes measuring X.
    """

    f: int
    n: int
    graph: Graph
    vertices: frozenset[int]
    midpoints: frozenset[int]
    odd_sites: frozenset[int]
    left_sites: frozenset[int]
    right_sites: frozenset[int]
    segments: tuple[frozenset[int], ...]
    cases: tuple[CertainSubmeasurement, ...]


def _ring_global(f: int, vertex_letters: tuple[str, str, str]) -> Measurement:
    n = 12 * f
    at = {4 * f: vertex_letters[0], 8 * f: vertex_letters[1], 12 * f: vertex_letters[2]}
    out = []
    for j in range(1, n + 1):
        if j in at:
            out.append(at[j])
        elif j % 2 == 1:
            out.append("Y")
        else:
            out.append("X")
    return Measurement("".join(out))


def _letters_on(n: int, assignment: dict[int, str]) -> Measurement:
    return Measurement("".join(assignment.get(j, "I") for j in range(1, n + 1)))


def build_ring_instance(f: int) -> RingInstance:
    """Construct and validate the five certain submeasurements on ring(12f)."""
    if f < 1 or f % 2 == 0:
        raise ValueError(f"f must be an odd positive integer, got {f}")
    n = 12 * f
    g = ring(n)
    vertices = frozenset({4 * f, 8 * f, 12 * f})
    midpoints = frozenset({2 * f, 6 * f, 10 * f})
    odd_sites = frozenset(j for j in range(1, n + 1) if j % 2 == 1)
    left_sites = frozenset(
        j for j in range(1, n + 1)
        if j % 4 == 2 and j not in vertices and j not in midpoints
    )
    right_sites = frozenset(
        j for j in range(1, n + 1)
        if j % 4 == 0 and j not in vertices and j not in midpoints
    )
    segments = tuple(
        frozenset(j for j in range(1, n + 1) if 2 * f * (k - 1) < j < 2 * f * k)
        for k in range(1, 7)
    )

    def seg(i: int, k: int) -> frozenset[int]:
        return segments[i - 1] | segments[k - 1]

    def xs(sites: Iterable[int]) -> dict[int, str]:
        return {j: "X" for j in sites}

    def ys(sites: Iterable[int]) -> dict[int, str]:
        return {j: "Y" for j in sites}

    cases = []

    sub = {**xs(midpoints | vertices | left_sites | right_sites)}
    cases.append(("xxx", ("X", "X", "X"), sub, 1))

    sub = {**xs(midpoints | left_sites), **ys(odd_sites)}
    cases.append(("yyy", ("Y", "Y", "Y"), sub, -1))

    sub = {
        **ys({4 * f, 12 * f}), **xs({6 * f, 8 * f, 10 * f}),
        **ys(odd_sites & seg(1, 2)), **xs(right_sites | (left_sites - seg(1, 2))),
    }
    cases.append(("yxy", ("Y", "X", "Y"), sub, 1))

    sub = {
        **xs({2 * f, 10 * f, 12 * f}), **ys({4 * f, 8 * f}),
        **ys(odd_sites & seg(3, 4)), **xs(right_sites | (left_sites - seg(3, 4))),
    }
    cases.append(("yyx", ("Y", "Y", "X"), sub, 1))

    sub = {
        **xs({2 * f, 4 * f, 6 * f}), **ys({8 * f, 12 * f}),
        **ys(odd_sites & seg(5, 6)), **xs(right_sites | (left_sites - seg(5, 6))),
    }
    cases.append(("xyy", ("X", "Y", "Y"), sub, 1))

    built = []
    for name, vletters, assignment, sign in cases:
        glob = _ring_global(f, vletters)
        sub_m = _letters_on(n, assignment)
        if not is_submeasurement(sub_m, glob):
            raise RuntimeError(f"case {name}: constructed sub is not a submeasurement")
        verdict = classify(g, sub_m)
        if verdict != Verdict.deterministic(sign):
            raise RuntimeError(
                f"case {name}: oracle gives {verdict}, expected deterministic({sign:+d})"
            )
        built.append(CertainSubmeasurement(name, glob, sub_m, sign))

    return RingInstance(
        f, n, g, vertices, midpoints, odd_sites, left_sites, right_sites,
        segments, tuple(built),
    )


# ---------------------------------------------------------------------------
# Distance-bound certification
# ---------------------------------------------------------------------------

def measurement_view(g: Graph, m: Measurement, j: int, d: int) -> tuple[tuple[int, str], ...]:
    """Measurement letters on the distance-d ball of j, in canonical node order."""
    return tuple((k, m.letter(k)) for k in sorted(ball(g, j, d)))


def distance_constraint_system(
    g: Graph,
    cases: Sequence[CertainSubmeasurement],
    d: int,
) -> ParityConstraintSystem:
    """One parity equation per certain submeasurement, over view-keyed variables.

    Sites in different cases share a variable exactly when site, measured
    observable and the full distance-d view coincide.
    """
    equations = []
    for case in cases:
        keys = [
            ContextVariable(
                j,
                case.global_measurement.letter(j).lower(),
                measurement_view(g, case.global_measurement, j, d),
            )
            for j in sorted(case.support)
        ]
        equations.append(parity_equation(keys, 0 if case.expected_sign == 1 else 1, case.name))
    return _system_from_equations(equations)


def distance_bound(n: int) -> int:
    """Largest communication distance certified to fail on n qubits."""
    if n < 12:
        raise ValueError(f"the construction needs at least 12 qubits, got {n}")
    return 4 * ((n - 12) // 24) + 1


@dataclass(frozen=True)
class DistanceCertificate:
    n: int
    ring_size: int
    padding: int
    f: int
    d: int
    bound: int
    cases: tuple[CertainSubmeasurement, ...]
    system: ParityConstraintSystem
    solution: GF2Solution
    max_other_changeable_in_view: int

    @property
    def expected_inconsistent(self) -> bool:
        return self.d <= self.bound

    @property
    def ok(self) -> bool:
        """True unless an in-bound distance unexpectedly admits a model."""
        if self.expected_inconsistent:
            return not self.solution.consistent
        return True

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "ring_size": self.ring_size,
            "padding": self.padding,
            "f": self.f,
            "d": self.d,
            "bound": self.bound,
            "consistent": self.solution.consistent,
            "certificate": list(self.solution.certificate) if self.solution.certificate else None,
            "equations": [
                {"label": eq.label, "rhs": eq.rhs, "size": len(eq.variables)}
                for eq in self.system.equations
            ],
            "system": self.system.to_json_dict(),
            "max_other_changeable_in_view": self.max_other_changeable_in_view,
            "model_class": "per-site sign choices determined by the measurement "
                           "pattern within distance d, for any shared randomness",
        }


def certify_distance(n: int, d: int | None = None) -> DistanceCertificate:
    """Certify failure of distance-d models on n qubits via the padded ring.

    The instance lives on a ring of n - r nodes with r = (n - 12) mod 24
    isolated extras; d defaults to the certified bound. The construction
    re-derives, rather than assumes, that each support site sees at most one
    changeable (vertex) site within distance d.
    """
    bound = distance_bound(n)
    if d is None:
        d = bound
    if d < 0:
        raise ValueError(f"distance must be non-negative, got {d}")
    g = padded_ring(n)
    ring_size = n - (n - 12) % 24
    f = ring_size // 12
    inst = build_ring_instance(f)
    pad = "I" * (n - ring_size)
    cases = tuple(
        CertainSubmeasurement(
            c.name,
            Measurement(c.global_measurement.letters + pad),
            Measurement(c.sub.letters + pad),
            c.expected_sign,
        )
        for c in inst.cases
    )
    for case in cases:
        verdict = classify(g, case.sub)
        if verdict != Verdict.deterministic(case.expected_sign):
            raise RuntimeError(f"padded case {case.name}: oracle gives {verdict}")
    max_other = 0
    for case in cases:
        for j in case.support:
            others = len(inst.vertices & ball(g, j, d)) - (1 if j in inst.vertices else 0)
            max_other = max(max_other, others)
    system = distance_constraint_system(g, cases, d)
    solution = gf2_solve(system)
    return DistanceCertificate(
        n, ring_size, n - ring_size, f, d, bound, cases, system, solution, max_other
    )


# ---------------------------------------------------------------------------
# Site-invariance certification
# ---------------------------------------------------------------------------

def embedded_grid_counterexample(p: int, q: int) -> tuple[Graph, Measurement, Measurement]:
    """Site-invariance counterexample on a (2+2p) x (3+2q) grid.

    A 2x3 all-Y block sits centered, with Z measured on the surrounding rows
    and columns; the stabilizer word generated by the block's top row plus
    its bottom middle has sign -1, its support meets every orbit of the
    measurement-preserving automorphisms an even number of times, and the
    Z letters it needs are provided by the boundary. Returns (graph, global
    measurement, certain submeasurement); the submeasurement's verdict is
    validated against the oracle.
    """
    if p < 0 or q < 0:
        raise ValueError(f"p and q must be non-negative, got {p}, {q}")
    rows, cols = 2 + 2 * p, 3 + 2 * q
    from .graphs import grid as _grid

    g = _grid(rows, cols)

    def node(r: int, c: int) -> int:
        return (r - 1) * cols + c

    block = [node(r, c) for r in (p + 1, p + 2) for c in (q + 1, q + 2, q + 3)]
    global_m = Measurement(
        "".join("Y" if j in set(block) else "Z" for j in range(1, g.n + 1))
    )
    a_sites = {block[0], block[1], block[2], block[4]}
    sign = generator_product_sign(g, a_sites)
    letters = []
    for j in range(1, g.n + 1):
        x = j in a_sites
        z = sum(1 for k in g.neighborhood(j) if k in a_sites) % 2
        letters.append("IXZY"[int(x) + 2 * z])
    sub = Measurement("".join(letters))
    if not is_submeasurement(sub, global_m):
        raise RuntimeError("embedded counterexample is not a submeasurement")
    if classify(g, sub) != Verdict.deterministic(sign):
        raise RuntimeError("embedded counterexample has an unexpected verdict")
    if sign != -1:
        raise RuntimeError("embedded counterexample lost its minus sign")
    return g, global_m, sub


def site_invariance_system(
    g: Graph,
    global_m: Measurement,
    certain_subs: Sequence[tuple[Iterable[int], int]],
    max_nodes: int = 12,
) -> ParityConstraintSystem:
    """Parity system for orbit-constant sign flips.

    The baseline product of hidden entries over any signed stabilizer word
    is +1, so the flips alone must account for each certain sign: for every
    certain submeasurement, the XOR of its sites' orbit-flip variables must
    equal the sign bit. Orbits are taken under automorphisms preserving the
    global measurement as a coloring.
    """
    if len(global_m) != g.n:
        raise ValueError(f"measurement length {len(global_m)} does not match n={g.n}")
    coloring = NodeColoring(tuple(global_m.letters))
    perms = automorphisms(g, coloring, max_nodes=max_nodes)
    orbs = orbits(g.n, perms)
    orbit_of: dict[int, OrbitVariable] = {}
    declared = []
    for orb in orbs:
        letter = global_m.letter(orb[0])
        if letter == "I":
            continue
        var = OrbitVariable(orb, letter.lower())
        declared.append(var)
        for j in orb:
            orbit_of[j] = var
    equations = []
    for k, (support, sign) in enumerate(certain_subs):
        sites = sorted(set(support))
        for j in sites:
            g.check_node(j)
            if global_m.letter(j) == "I":
                raise ValueError(f"support site {j} is unmeasured in the global measurement")
        keys = [orbit_of[j] for j in sites]
        equations.append(parity_equation(keys, 0 if sign == 1 else 1, f"sub{k}:{sites}"))
    return ParityConstraintSystem(tuple(declared), tuple(equations))
