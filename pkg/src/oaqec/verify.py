"""Exact reduction checks certifying distances of compiled quantum codes."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Optional

from .arrays import MixedLevelArray, distance_profile, is_orthogonal_array
from .errors import ProvenanceMissing
from .synthesis import CodeParams, QuantumCode

MODES = ("strict-uniform", "definition-5")


@dataclass(frozen=True)
class ReducedCrossMatrix:
    """Exact pair counts between two basis states, reduced to a coordinate subset.

    counts maps (x, y) -> |{(u, v) : u|S = x, v|S = y, u and v agree off S}|
    over kets u of state i and v of state j; zero entries are omitted."""
    i: int
    j: int
    subset: tuple[int, ...]
    counts: dict
    normalizer: int

    def is_zero(self) -> bool:
        return not self.counts

    def trace(self) -> int:
        return sum(v for (x, y), v in self.counts.items() if x == y)

    def diagonal(self) -> dict:
        return {x: v for (x, y), v in self.counts.items() if x == y}

    def off_diagonal(self) -> dict:
        return {k: v for k, v in self.counts.items() if k[0] != k[1]}


def reduced_cross_matrix(code: QuantumCode, i: int, j: int,
                         subset) -> ReducedCrossMatrix:
    """Count ket pairs of states i and j that agree everywhere off the subset."""
    S = tuple(subset)
    comp = [c for c in range(code.params.n) if c not in S]
    groups: dict = defaultdict(list)
    for v in code.basis[j]:
        groups[tuple(v[c] for c in comp)].append(tuple(v[c] for c in S))
    counts: Counter = Counter()
    for u in code.basis[i]:
        x = tuple(u[c] for c in S)
        for y in groups.get(tuple(u[c] for c in comp), ()):
            counts[(x, y)] += 1
    return ReducedCrossMatrix(i=i, j=j, subset=S, counts=dict(counts),
                              normalizer=code.kets_per_state)


@dataclass(frozen=True)
class ReductionWitness:
    """One offending entry found while checking a subset of coordinates."""
    subset: tuple[int, ...]
    i: int
    j: int
    x: Optional[tuple[int, ...]]
    y: Optional[tuple[int, ...]]
    count: int
    expected: Optional[int]
    reason: str

    def render(self) -> str:
        where = f"S={self.subset} states ({self.i},{self.j})"
        entry = "" if self.x is None else f" entry ({self.x},{self.y})={self.count}"
        want = "" if self.expected is None else f" (expected {self.expected})"
        return f"{where}: {self.reason}{entry}{want}"


def _check_subset(code: QuantumCode, S: tuple[int, ...], mode: str,
                  cap: int = 4) -> list[ReductionWitness]:
    """All violations (up to cap) of the reduction conditions on one subset."""
    K = code.params.K
    block = code.kets_per_state
    out: list[ReductionWitness] = []
    reference: Optional[dict] = None
    for i in range(K):
        M = reduced_cross_matrix(code, i, i, S)
        assert M.trace() == block, "self pair count must equal the state size"
        if mode == "strict-uniform":
            levels = prod(code.params.alphabets[c] for c in S)
            if block % levels:
                out.append(ReductionWitness(S, i, i, None, None, block, levels,
                                            "state size not divisible by the level count"))
                continue
            uniform = block // levels
            for (x, y), v in sorted(M.off_diagonal().items()):
                out.append(ReductionWitness(S, i, i, x, y, v, 0,
                                            "off-diagonal reduction entry"))
            diag = M.diagonal()
            if len(diag) != levels:
                missing = levels - len(diag)
                out.append(ReductionWitness(S, i, i, None, None, 0, uniform,
                                            f"{missing} level tuples never occur"))
            for x, v in sorted(diag.items()):
                if v != uniform:
                    out.append(ReductionWitness(S, i, i, x, x, v, uniform,
                                                "nonuniform diagonal entry"))
        else:
            if reference is None:
                reference = M.counts
            elif M.counts != reference:
                keys = set(M.counts) | set(reference)
                x, y = min(k for k in keys
                           if M.counts.get(k, 0) != reference.get(k, 0))
                out.append(ReductionWitness(S, i, i, x, y, M.counts.get((x, y), 0),
                                            reference.get((x, y), 0),
                                            "reduction differs from state 0"))
        if len(out) >= cap:
            return out[:cap]
    for i in range(K):
        for j in range(i + 1, K):
            M = reduced_cross_matrix(code, i, j, S)
            if not M.is_zero():
                (x, y), v = sorted(M.counts.items())[0]
                out.append(ReductionWitness(S, i, j, x, y, v, 0,
                                            "cross reduction is nonzero"))
                if len(out) >= cap:
                    return out[:cap]
    return out


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the reduction checks for one code at one claimed distance."""
    params: CodeParams
    mode: str
    claimed_distance: int
    certified_distance: int
    passed: bool
    subsets_checked: int
    per_subset: tuple[tuple[tuple[int, ...], bool], ...]
    witnesses: tuple[ReductionWitness, ...]

    def render(self) -> str:
        lines = [f"code {self.params.code_string()}  mode {self.mode}",
                 f"claimed distance {self.claimed_distance}, "
                 f"certified distance {self.certified_distance}",
                 f"subsets checked: {self.subsets_checked}",
                 f"result: {'PASS' if self.passed else 'FAIL'}"]
        failing = [s for s, ok in self.per_subset if not ok]
        if failing:
            lines.append(f"failing subsets at the claimed level: {failing[:8]}")
        for w in self.witnesses[:8]:
            lines.append("  " + w.render())
        return "\n".join(lines)


def _assert_hermitian_samples(code: QuantumCode, S: tuple[int, ...]) -> None:
    """Spot-check that swapping the states transposes the reduction counts."""
    K = code.params.K
    pairs = [(i, j) for i in range(K) for j in range(i + 1, K)][:3]
    for i, j in pairs:
        M = reduced_cross_matrix(code, i, j, S)
        W = reduced_cross_matrix(code, j, i, S)
        flipped = {(y, x): v for (x, y), v in W.counts.items()}
        assert M.counts == flipped, "pair counts must transpose under state swap"


def verify_code(code: QuantumCode, d: Optional[int] = None,
                mode: str = "strict-uniform") -> VerificationReport:
    """Check every coordinate subset of sizes 1..d and certify the distance.

    strict-uniform demands diagonal, uniform self reductions; definition-5
    only demands self reductions identical across states.  Both demand all
    cross reductions vanish.  The certified distance is the largest d'+1 whose
    level fully passes; passing at a level implies passing below (asserted)."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if d is None:
        d = code.params.d_plus_1 - 1
    if d < 0 or d > code.params.n:
        raise ValueError(f"claimed error count {d} out of range")
    n = code.params.n
    subsets_checked = 0
    level_ok: list[bool] = []
    per_subset: list[tuple[tuple[int, ...], bool]] = []
    witnesses: list[ReductionWitness] = []
    for dp in range(1, d + 1):
        ok = True
        for S in combinations(range(n), dp):
            subsets_checked += 1
            ws = _check_subset(code, S, mode)
            if dp == d:
                per_subset.append((S, not ws))
                if ws and len(witnesses) < 8:
                    witnesses.extend(ws)
            if ws:
                ok = False
        level_ok.append(ok)
    if d >= 1:
        _assert_hermitian_samples(code, (0,))
    certified = 0
    while certified < d and level_ok[certified]:
        certified += 1
    assert not any(level_ok[certified:]), \
        "a level passed above a failing one; reductions must be monotone"
    return VerificationReport(params=code.params, mode=mode,
                              claimed_distance=d + 1,
                              certified_distance=certified + 1,
                              passed=certified == d,
                              subsets_checked=subsets_checked,
                              per_subset=tuple(per_subset),
                              witnesses=tuple(witnesses))


@dataclass(frozen=True)
class CrossValidation:
    """Agreement between the reduction checks and the array-side checks."""
    quantum_pass: bool
    combinatorial_pass: bool
    parent_md: int
    blocks_balanced: bool

    @property
    def agree(self) -> bool:
        return self.quantum_pass == self.combinatorial_pass

    def render(self) -> str:
        return (f"reduction checks: {'PASS' if self.quantum_pass else 'FAIL'}; "
                f"array checks: {'PASS' if self.combinatorial_pass else 'FAIL'} "
                f"(parent distance {self.parent_md}, blocks "
                f"{'balanced' if self.blocks_balanced else 'unbalanced'}); "
                f"{'agree' if self.agree else 'DISAGREE'}")


def cross_validate(code: QuantumCode) -> CrossValidation:
    """Independently re-derive the distance from the basis kets two ways.

    The array side rebuilds the parent from the union of all kets, computes
    its exact minimal distance, and re-checks every state's balance at
    strength d; neither side reuses any claim carried by the construction."""
    if code.provenance is None:
        raise ProvenanceMissing("cross validation needs an array-backed code")
    d = code.params.d_plus_1 - 1
    alphabets = code.params.alphabets
    rebuilt = MixedLevelArray([ket for state in code.basis for ket in state],
                              alphabets)
    md = distance_profile(rebuilt).md if rebuilt.r > 1 else rebuilt.n + 1
    if d == 0:
        blocks_ok = True
    else:
        blocks_ok = all(is_orthogonal_array(MixedLevelArray(state, alphabets), d)[0]
                        for state in code.basis)
    comb = md >= d + 1 and blocks_ok
    quantum = verify_code(code, d, "strict-uniform").passed
    return CrossValidation(quantum_pass=quantum, combinatorial_pass=comb,
                           parent_md=md, blocks_balanced=blocks_ok)
