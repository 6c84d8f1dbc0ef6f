"""Exhaustive small-n verification of the involution and its statistics.

Every check walks all Dyck words of semilength ``0..max_n``.  The word space
is cut into partitions ``(n, prefix)`` that can run in worker processes; the
partial results merge associatively, so reports are identical whatever the
number of jobs.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import perm321
from .involution import (
    InternalDomainViolation,
    PhiError,
    big_phi,
    phi,
    phi_inverse,
)
from .words import (
    DyckWord,
    check_dyck,
    enumerate_dyck,
    fdf,
    ldr,
    north_runs,
    returns,
    reverse_complement,
    rises,
    sort_key,
)

DEFAULT_MAX_N = 12
DEFAULT_MAX_COUNTEREXAMPLES = 10
# Below this semilength a whole level is one partition.
_SPLIT_FROM = 9
_PREFIX_LEN = 8
# Largest n for which the bijection check also filters all of S_n.
_FILTER_LIMIT = 8

Key = Tuple[Tuple[int, ...], int, int]


@dataclass
class JointDistribution:
    """Counts of words by ``(rise set, p, q)``."""

    semilength: int
    entries: Counter = field(default_factory=Counter)

    def total(self) -> int:
        return sum(self.entries.values())

    def swapped(self) -> "JointDistribution":
        out = Counter({(r, q, p): c for (r, p, q), c in self.entries.items()})
        return JointDistribution(self.semilength, out)

    def is_swap_symmetric(self) -> bool:
        return self.entries == self.swapped().entries

    def to_json(self) -> dict:
        rows = [
            {"rises": list(r), "p": p, "q": q, "count": c}
            for (r, p, q), c in sorted(self.entries.items())
        ]
        return {"semilength": self.semilength, "entries": rows}


def switch_key(steps: str) -> Key:
    n = len(steps) // 2
    return (tuple(sorted(rises(steps))), returns(steps), n - ldr(steps))


def joint_distribution(n: int) -> JointDistribution:
    """Distribution of ``(rises, returns, n - ldr)`` over all words of semilength ``n``."""
    dist = JointDistribution(n)
    for word in enumerate_dyck(n):
        dist.entries[switch_key(word.steps)] += 1
    return dist


@dataclass
class VerificationReport:
    check_name: str
    max_n: int
    instances_checked: int
    counterexamples: List[Tuple[str, str, str]]
    counterexample_count: int
    passed: bool
    findings: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "max_n": self.max_n,
            "instances_checked": self.instances_checked,
            "passed": self.passed,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [
                {"input": w, "expected": e, "actual": a} for w, e, a in self.counterexamples
            ],
            "findings": dict(sorted(self.findings.items())),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


# ---------------------------------------------------------------------------
# per-word checks; each yields (word, expected, actual) triples on failure


def _phi_failures(w: DyckWord):
    s = w.steps
    n = len(s) // 2
    try:
        image, case = phi(w)
    except PhiError:
        image = None
    if image is not None:
        t = image.steps
        try:
            check_dyck(t)
        except ValueError as exc:
            yield s, "valid image", f"{t}: {exc}"
            return
        if rises(t) != rises(s):
            yield s, f"rises {sorted(rises(s))}", f"rises {sorted(rises(t))} in {t}"
        if returns(t) != returns(s) + 1:
            yield s, f"returns {returns(s) + 1}", f"returns {returns(t)} in {t}"
        if ldr(t) != ldr(s) + 1:
            yield s, f"ldr {ldr(s) + 1}", f"ldr {ldr(t)} in {t}"
        try:
            back, back_case = phi_inverse(image)
        except PhiError as exc:
            yield s, "phi_inverse(phi(D)) = D", f"{t} rejected: {exc}"
        else:
            if back != w or back_case != case:
                yield s, f"{s} ({case})", f"{back} ({back_case})"
    if n and s.endswith("EE") and returns(s) >= 2:
        pre, case = phi_inverse(w)
        try:
            check_dyck(pre.steps)
            again, again_case = phi(pre)
        except (PhiError, ValueError) as exc:
            yield s, "phi(phi_inverse(D)) = D", f"{pre} rejected: {exc}"
        else:
            if again != w or again_case != case:
                yield s, f"{s} ({case})", f"phi({pre}) = {again} ({again_case})"


def _involution_failures(w: DyckWord, findings: Counter):
    s = w.steps
    n = len(s) // 2
    try:
        image = big_phi(w)
        twice = big_phi(image)
    except InternalDomainViolation as exc:
        findings["internal_domain_violations"] += 1
        yield s, "no domain violation", str(exc)
        return
    t = image.steps
    if twice != w:
        yield s, f"Phi(Phi(D)) = {s}", twice.steps
    if rises(t) != rises(s):
        yield s, f"rises {sorted(rises(s))}", f"rises {sorted(rises(t))} in {t}"
    if returns(t) != n - ldr(s):
        yield s, f"returns {n - ldr(s)}", f"returns {returns(t)} in {t}"
    if n - ldr(t) != returns(s):
        yield s, f"n-ldr {returns(s)}", f"n-ldr {n - ldr(t)} in {t}"
    if (image == w) != (returns(s) == n - ldr(s)):
        yield s, f"fixed iff returns = n-ldr ({returns(s)} vs {n - ldr(s)})", t
    if image == w:
        findings["fixed_points"] += 1
    if north_runs(t) != north_runs(s):
        findings["north_run_sequence_changed"] += 1
    if sorted(north_runs(t)) != sorted(north_runs(s)):
        findings["north_run_multiset_changed"] += 1


def _duality_failures(w: DyckWord):
    s = w.steps
    n = len(s) // 2
    rev = reverse_complement(w).steps
    if fdf(rev) != n - ldr(s):
        yield s, f"fdf(rev) {n - ldr(s)}", f"fdf({rev}) = {fdf(rev)}"
    if returns(rev) != returns(s):
        yield s, f"returns {returns(s)}", f"returns({rev}) = {returns(rev)}"


def _bijection_failures(w: DyckWord):
    s = w.steps
    p = perm321.from_dyck(w)
    if not perm321.is_321_avoiding(p):
        yield s, "321-avoiding preimage", str(p)
        return
    back = perm321.to_dyck(p)
    if back != w:
        yield s, s, f"to_dyck({p}) = {back}"
    if perm321.from_dyck(back) != p:
        yield s, str(p), str(perm321.from_dyck(back))
    st = perm321.perm_stats(p)
    if st.lrmax != rises(s):
        yield s, f"rises = lrmax {sorted(st.lrmax)}", f"rises {sorted(rises(s))}"
    if st.blocks != returns(s):
        yield s, f"returns = blocks {st.blocks}", f"returns {returns(s)}"
    if st.ldes_inverse != ldr(s):
        yield s, f"ldr = ldes(inverse) {st.ldes_inverse}", f"ldr {ldr(s)}"


# ---------------------------------------------------------------------------
# partitioned driver


@dataclass
class _Partial:
    instances: int = 0
    failures: list = field(default_factory=list)
    failure_total: int = 0
    findings: Counter = field(default_factory=Counter)
    dists: Dict[str, Counter] = field(default_factory=dict)


def _keep(failures: list, cap: int) -> list:
    return sorted(failures, key=lambda f: (len(f[0]), sort_key(f[0]), f[1], f[2]))[:cap]


def _run_partition(args) -> _Partial:
    check, n, prefix, cap = args
    part = _Partial()
    failures = []
    if check == "switch":
        dist = part.dists.setdefault("switch", Counter())
        for w in enumerate_dyck(n, prefix):
            dist[switch_key(w.steps)] += 1
            part.instances += 1
        return part
    if check == "bijection":
        plain = part.dists.setdefault("blocks", Counter())
        other = part.dists.setdefault("n-ldes_inverse", Counter())
    for w in enumerate_dyck(n, prefix):
        part.instances += 1
        if check == "phi":
            found = _phi_failures(w)
        elif check == "involution":
            found = _involution_failures(w, part.findings)
        elif check == "duality":
            found = _duality_failures(w)
        else:
            found = _bijection_failures(w)
            p = perm321.from_dyck(w)
            st = perm321.perm_stats(p)
            lr = tuple(sorted(st.lrmax))
            plain[(lr, st.blocks)] += 1
            other[(lr, n - st.ldes_inverse)] += 1
        for f in found:
            part.failure_total += 1
            failures.append(f)
            if len(failures) > 4 * cap + 16:
                failures = _keep(failures, cap)
    part.failures = _keep(failures, cap)
    return part


def _partitions(n: int) -> List[str]:
    if n < _SPLIT_FROM:
        return [""]
    out = []
    for bits in itertools.product("NE", repeat=_PREFIX_LEN):
        height = 0
        for c in bits:
            height += 1 if c == "N" else -1
            if height < 0:
                break
        else:
            if height <= 2 * n - _PREFIX_LEN:
                out.append("".join(bits))
    out.sort(key=sort_key)
    return out


def _map(tasks: list, jobs: int) -> List[_Partial]:
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_partition(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_partition, tasks, chunksize=1))


def _merge(parts: Iterable[_Partial], cap: int) -> _Partial:
    out = _Partial()
    failures = []
    for p in parts:
        out.instances += p.instances
        out.failure_total += p.failure_total
        failures.extend(p.failures)
        out.findings.update(p.findings)
        for name, dist in p.dists.items():
            out.dists.setdefault(name, Counter()).update(dist)
    out.failures = _keep(failures, cap)
    return out


def _per_level(check: str, max_n: int, jobs: int, cap: int) -> List[Tuple[int, _Partial]]:
    tasks = [(check, n, prefix, cap) for n in range(max_n + 1) for prefix in _partitions(n)]
    results = _map(tasks, jobs)
    levels: Dict[int, list] = {}
    for task, part in zip(tasks, results):
        levels.setdefault(task[1], []).append(part)
    return [(n, _merge(levels[n], cap)) for n in sorted(levels)]


def _report(check_name: str, max_n: int, levels, cap: int, extra_failures=()) -> VerificationReport:
    total = _merge([p for _, p in levels], cap)
    failures = list(total.failures) + list(extra_failures)
    count = total.failure_total + len(extra_failures)
    return VerificationReport(
        check_name=check_name,
        max_n=max_n,
        instances_checked=total.instances,
        counterexamples=_keep(failures, cap),
        counterexample_count=count,
        passed=count == 0,
        findings=dict(total.findings),
    )


def _check_args(max_n: int) -> None:
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")


def check_switch_symmetry(max_n: int = DEFAULT_MAX_N, jobs: int = 1,
                          max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> VerificationReport:
    """Swap symmetry of the ``(rises, returns, n - ldr)`` distribution at every ``n``."""
    _check_args(max_n)
    levels = _per_level("switch", max_n, jobs, max_counterexamples)
    asym = []
    for n, part in levels:
        dist = part.dists.get("switch", Counter())
        for (r, p, q), c in sorted(dist.items()):
            mirror = dist.get((r, q, p), 0)
            if mirror != c:
                asym.append((f"n={n} rises={list(r)} p={p} q={q}", f"count {mirror}", f"count {c}"))
    return _report("switch", max_n, levels, max_counterexamples, asym)


def check_involution(max_n: int = DEFAULT_MAX_N, jobs: int = 1,
                     max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> VerificationReport:
    """Involution laws of ``big_phi``.

    ``findings`` also counts, without failing, how often ``big_phi`` changes
    the sequence or the multiset of north-run lengths.
    """
    _check_args(max_n)
    levels = _per_level("involution", max_n, jobs, max_counterexamples)
    report = _report("involution", max_n, levels, max_counterexamples)
    for key in ("fixed_points", "north_run_sequence_changed", "north_run_multiset_changed",
                "internal_domain_violations"):
        report.findings.setdefault(key, 0)
    return report


def check_phi_laws(max_n: int = DEFAULT_MAX_N, jobs: int = 1,
                   max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> VerificationReport:
    _check_args(max_n)
    levels = _per_level("phi", max_n, jobs, max_counterexamples)
    return _report("phi", max_n, levels, max_counterexamples)


def check_duality(max_n: int = DEFAULT_MAX_N, jobs: int = 1,
                  max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> VerificationReport:
    _check_args(max_n)
    levels = _per_level("duality", max_n, jobs, max_counterexamples)
    return _report("duality", max_n, levels, max_counterexamples)


def _filtered_avoiders(n: int) -> set:
    return {
        p for p in itertools.permutations(range(1, n + 1)) if perm321.is_321_avoiding_brute(p)
    }


def check_bijection_laws(max_n: int = DEFAULT_MAX_N, jobs: int = 1,
                         max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> VerificationReport:
    """Dyck words versus 321-avoiders.

    Per word: the preimage avoids 321, both maps invert each other and the
    three statistic correspondences hold.  Per level: the joint
    distributions of ``(lrmax, blocks)`` and ``(lrmax, n - ldes(inverse))``
    coincide, and for small ``n`` the preimages are exactly the avoiders
    found by filtering all of S_n.
    """
    _check_args(max_n)
    levels = _per_level("bijection", max_n, jobs, max_counterexamples)
    extra = []
    for n, part in levels:
        a = part.dists.get("blocks", Counter())
        b = part.dists.get("n-ldes_inverse", Counter())
        for key in sorted(set(a) | set(b)):
            if a.get(key, 0) != b.get(key, 0):
                extra.append((f"n={n} lrmax={list(key[0])} stat={key[1]}",
                              f"count {a.get(key, 0)}", f"count {b.get(key, 0)}"))
        if n <= _FILTER_LIMIT:
            images = {perm321.from_dyck(w).values for w in enumerate_dyck(n)}
            if images != _filtered_avoiders(n):
                extra.append((f"n={n}", "preimages = S_n(321)",
                              f"{len(images)} preimages vs {len(_filtered_avoiders(n))} avoiders"))
    return _report("bijection", max_n, levels, max_counterexamples, extra)


CHECKS = {
    "switch": check_switch_symmetry,
    "involution": check_involution,
    "phi": check_phi_laws,
    "bijection": check_bijection_laws,
    "duality": check_duality,
}


def run_checks(names: Optional[Sequence[str]] = None, max_n: int = DEFAULT_MAX_N, jobs: int = 1,
               max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> List[VerificationReport]:
    names = list(CHECKS) if not names else list(names)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return [CHECKS[n](max_n, jobs=jobs, max_counterexamples=max_counterexamples) for n in names]
