"""Exhaustive small-order verification of every structural property the
library promises.

Each registered property sweeps all matrices (or derived objects) of one
order and either passes or produces a concrete counterexample; the report
collects per-property results with timings.  The registry is the single
source for both the ``verify`` CLI command and the acceptance tests.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Callable, Iterable

from . import neutral as nz
from .cells import SignClass, cell_sums, charges, geometry, sign_class
from .discharge import (
    DischargeTuple,
    _partial_discharge_neutral_shortcut,
    discharge,
    partial_discharge,
    recharge,
    right_side_sum,
    tuple_valid,
)
from .enumeration import DEFAULT_CAP, distribution, enumerate_asm, formula_count
from .errors import AsmcError, CapExceeded
from .inv_table import (
    GenInvTable,
    dual_table,
    gen_table,
    pair_from_table,
    perm_from_table,
    perm_table,
    table_params,
    table_valid,
)
from .matrix import (
    AsmMatrix,
    classical_params,
    is_permutation_matrix,
    perm_one_line,
    reflect,
    validate_asm,
)
from .neutral import NeutralPair
from .paths import (
    config_from_pair,
    config_params,
    dual_config,
    pair_from_config,
    table_from_config,
    validate_config,
)


class _Pool:
    """Per-order caches of enumerated matrices shared by all properties."""

    def __init__(self, cap: int):
        self.cap = cap
        self._all: dict[int, list[AsmMatrix]] = {}
        self._ones: dict[int, list[AsmMatrix]] = {}

    def all(self, n: int) -> list[AsmMatrix]:
        if n not in self._all:
            self._all[n] = list(enumerate_asm(n, cap=self.cap))
        return self._all[n]

    def ones(self, n: int) -> list[AsmMatrix]:
        if n not in self._ones:
            self._ones[n] = list(enumerate_asm(n, s=1, cap=self.cap))
        return self._ones[n]

    def non_negative(self, n: int) -> list[AsmMatrix]:
        return [m for m in self.ones(n) if sign_class(m) is not SignClass.NEGATIVE]


def _cx(m: AsmMatrix, note: str) -> str:
    return f"{note}; matrix rows {m.rows}"


# --- property implementations ----------------------------------------------
# Each takes (pool, n) and returns (checked_count, counterexample | None).


def _prop_reflect_classical(pool: _Pool, n: int):
    for m in pool.all(n):
        rm = reflect(m)
        p, rp = classical_params(m), classical_params(rm)
        if reflect(rm) != m:
            return 0, _cx(m, "double reflection is not the identity")
        if p.r + rp.r != n - 1:
            return 0, _cx(m, f"r + reflected r = {p.r + rp.r} != {n - 1}")
        if p.i + rp.i != comb(n, 2) + p.s:
            return 0, _cx(m, f"i + reflected i = {p.i + rp.i} != C(n,2)+s")
        if rp.s != p.s:
            return 0, _cx(m, "reflection changed the -1 count")
    return len(pool.all(n)), None


def _prop_reflect_charges(pool: _Pool, n: int):
    flip = {
        SignClass.POSITIVE: SignClass.NEGATIVE,
        SignClass.NEGATIVE: SignClass.POSITIVE,
        SignClass.NEUTRAL: SignClass.NEUTRAL,
    }
    for m in pool.ones(n):
        rm = reflect(m)
        if sign_class(rm) is not flip[sign_class(m)]:
            return 0, _cx(m, "sign class does not mirror under reflection")
        ch, rch = charges(m), charges(rm)
        if ch.e + rch.e != 0 or ch.b + rch.b != 0 or ch.j != rch.j:
            return 0, _cx(m, f"charges {ch} vs reflected {rch} break (anti)invariance")
    return len(pool.ones(n)), None


def _prop_neutral_cell_swap(pool: _Pool, n: int):
    checked = 0
    for m in pool.ones(n):
        if sign_class(m) is not SignClass.NEUTRAL:
            continue
        checked += 1
        sums, rsums = cell_sums(m), cell_sums(reflect(m))
        if (rsums.ell, rsums.c) != (sums.c, sums.ell):
            return 0, _cx(m, "reflection does not swap leading and closing sums")
    return checked, None


def _prop_permutation_inversions(pool: _Pool, n: int):
    checked = 0
    for m in pool.all(n):
        if not is_permutation_matrix(m):
            continue
        checked += 1
        word = perm_one_line(m)
        oracle = sum(
            1 for a in range(n) for b in range(a + 1, n) if word[a] > word[b]
        )
        if classical_params(m).i != oracle:
            return 0, _cx(m, f"inversion count != pairwise oracle {oracle}")
    return checked, None


def _prop_perm_table_roundtrip(pool: _Pool, n: int):
    checked = 0
    for m in pool.all(n):
        if not is_permutation_matrix(m):
            continue
        checked += 1
        t = perm_table(m)
        if perm_from_table(t) != m:
            return 0, _cx(m, f"table {t} does not rebuild the matrix")
        p = classical_params(m)
        if p.r != t[-1] or p.i != sum(t):
            return 0, _cx(m, f"r, i do not match table {t}")
        if perm_table(reflect(m)) != tuple(i - 1 - v for i, v in enumerate(t, start=1)):
            return 0, _cx(m, "reflected table is not the complement")
    return checked, None


def _prop_discharge_structure(pool: _Pool, n: int):
    checked = 0
    for m in pool.non_negative(n):
        checked += 1
        p = partial_discharge(m)
        t = discharge(m)
        k = t.opening_row
        if not is_permutation_matrix(p):
            return 0, _cx(m, "discharge output is not a permutation matrix")
        if p.rows[:k] != m.rows[:k]:
            return 0, _cx(m, f"rows 1..{k} changed under discharge")
        j = p.rows[k - 1].index(1)
        mm = p.rows[k].index(1)
        if mm >= j:
            return 0, _cx(m, "row k+1's 1 is not left of row k's in the output")
        lead = sum(
            p.rows[q][c] for q in range(k, n) for c in range(mm + 1, j)
        )
        ch = charges(m)
        if ch.ell != lead:
            return 0, _cx(m, f"leading sum {ch.ell} != output leading cell {lead}")
        x_in, x_out = ch.x, right_side_sum(p, k)
        if not (t.closing_sum + t.charge < x_in == x_out):
            return 0, _cx(m, f"c+E={t.closing_sum + t.charge}, x={x_in}, x(P)={x_out}")
        if classical_params(m).i != classical_params(p).i + t.closing_sum + 1 + t.charge:
            return 0, _cx(m, "inversions do not drop by c + 1 + E")
    return checked, None


def _prop_discharge_neutral_shortcut(pool: _Pool, n: int):
    checked = 0
    for m in pool.ones(n):
        if sign_class(m) is not SignClass.NEUTRAL:
            continue
        checked += 1
        if partial_discharge(m) != _partial_discharge_neutral_shortcut(m):
            return 0, _cx(m, "four-step and two-step discharge disagree")
    return checked, None


def _iter_valid_tuples(n: int) -> Iterable[DischargeTuple]:
    from itertools import permutations

    from .matrix import perm_matrix

    for word in permutations(range(1, n + 1)):
        p = perm_matrix(word)
        for k in range(1, n - 1):
            if word[k] >= word[k - 1]:  # row k+1's 1 must be left of row k's
                continue
            x = right_side_sum(p, k)
            for c in range(x):
                for e in range(x - c):
                    yield DischargeTuple(k, p, c, e)


def _prop_discharge_bijection(pool: _Pool, n: int):
    image: dict[DischargeTuple, AsmMatrix] = {}
    for m in pool.non_negative(n):
        t = discharge(m)
        if not tuple_valid(t):
            return 0, _cx(m, f"discharge produced invalid tuple: {tuple_valid(t).message}")
        if t in image:
            return 0, _cx(m, f"discharge collides with {image[t].rows}")
        image[t] = m
        if recharge(t) != m:
            return 0, _cx(m, "recharge does not invert discharge")
    expected = set(_iter_valid_tuples(n))
    if expected != set(image):
        missing = expected - set(image)
        extra = set(image) - expected
        return 0, f"tuple sets differ: {len(missing)} unreached, {len(extra)} unexpected (n={n})"
    return len(image) + len(expected), None


def _prop_neutralize_roundtrip(pool: _Pool, n: int):
    for m in pool.ones(n):
        if nz.restore(nz.neutralize(m)) != m:
            return 0, _cx(m, "restore does not invert neutralize")
    return len(pool.ones(n)), None


def _prop_neutralize_image(pool: _Pool, n: int):
    image = set()
    for m in pool.ones(n):
        p = nz.neutralize(m)
        if p in image:
            return 0, _cx(m, "neutralize is not injective")
        image.add(p)
    expected = set()
    for m in pool.ones(n):
        if sign_class(m) is not SignClass.NEUTRAL:
            continue
        sums = cell_sums(m)
        for e in range(-sums.ell, sums.c + 1):
            expected.add(NeutralPair(m, e))
    if image != expected:
        return 0, f"pair sets differ by {len(image ^ expected)} elements (n={n})"
    return len(image) + len(expected), None


def _prop_neutralize_transport(pool: _Pool, n: int):
    sign_of = {SignClass.POSITIVE: 1, SignClass.NEUTRAL: 0, SignClass.NEGATIVE: -1}
    for m in pool.ones(n):
        pair = nz.neutralize(m)
        pm, pn = classical_params(m), classical_params(pair.matrix)
        cm, cn = charges(m), charges(pair.matrix)
        if (pm.r, pm.i) != (pn.r, pn.i):
            return 0, _cx(m, "neutralizing changed r or i")
        if pair.charge != cm.e:
            return 0, _cx(m, f"pair charge {pair.charge} != electric charge {cm.e}")
        if cn.b != cm.b + cm.e:
            return 0, _cx(m, f"B(N)={cn.b} != B(A)+E(A)={cm.b + cm.e}")
        if cn.j != cm.j:
            return 0, _cx(m, "neutralizing changed J")
        if (pair.charge > 0) - (pair.charge < 0) != sign_of[sign_class(m)]:
            return 0, _cx(m, "sign of the charge does not match the class")
    return len(pool.ones(n)), None


def _prop_neutralize_reflect(pool: _Pool, n: int):
    for m in pool.ones(n):
        pair = nz.neutralize(m)
        mirrored = nz.neutralize(reflect(m))
        if mirrored != NeutralPair(reflect(pair.matrix), -pair.charge):
            return 0, _cx(m, "neutralize does not commute with reflection")
    return len(pool.ones(n)), None


def _prop_charge_range(pool: _Pool, n: int):
    for m in pool.ones(n):
        pair = nz.neutralize(m)
        sums = cell_sums(pair.matrix)
        b = charges(m).b
        if not -sums.ell <= b <= sums.c:
            return 0, _cx(m, f"B={b} outside [{-sums.ell}, {sums.c}]")
    return len(pool.ones(n)), None


def _prop_charge_flip_involution(pool: _Pool, n: int):
    checked = 0
    for m in pool.ones(n):
        try:
            pair = nz.neutralize(m)
            flipped = nz.flip_charge(pair)
            checked += 1
            if flipped.matrix != pair.matrix:
                return 0, _cx(m, "charge flip changed the neutral matrix")
            if nz.flip_charge(flipped) != pair:
                return 0, _cx(m, "charge flip is not an involution")
        except AsmcError as exc:
            return 0, _cx(m, f"raised {type(exc).__name__}: {exc}")
    return checked, None


def _prop_charge_swap(pool: _Pool, n: int):
    for m in pool.ones(n):
        try:
            swapped = nz.swap_charges(m)
            cm, cs = charges(m), charges(swapped)
            if (cs.e, cs.b) != (cm.b, cm.e):
                return 0, _cx(m, f"swap gave E={cs.e}, B={cs.b}; expected {cm.b}, {cm.e}")
            if nz.swap_charges(swapped) != m:
                return 0, _cx(m, "charge swap is not an involution")
            pm, ps = classical_params(m), classical_params(swapped)
            if (pm.r, pm.i, cm.j) != (ps.r, ps.i, cs.j):
                return 0, _cx(m, "charge swap changed r, i or J")
            k = geometry(m).opening_row
            if swapped.rows[:k] != m.rows[:k]:
                return 0, _cx(m, "charge swap changed rows 1..k")
        except AsmcError as exc:
            return 0, _cx(m, f"raised {type(exc).__name__}: {exc}")
    return len(pool.ones(n)), None


def _prop_charge_swap_reflect(pool: _Pool, n: int):
    for m in pool.ones(n):
        if nz.swap_charges(reflect(m)) != reflect(nz.swap_charges(m)):
            return 0, _cx(m, "charge swap does not commute with reflection")
    return len(pool.ones(n)), None


def _prop_table_roundtrip(pool: _Pool, n: int):
    for m in pool.ones(n):
        pair = nz.neutralize(m)
        t = gen_table(pair)
        if not table_valid(t):
            return 0, _cx(m, f"encoded table fails validity: {table_valid(t).message}")
        if pair_from_table(t) != pair:
            return 0, _cx(m, f"table {t.to_text()} does not rebuild the pair")
        pv = table_params(t)
        cm, pm = charges(m), classical_params(m)
        if (pv.r, pv.i, pv.e, pv.b, pv.j) != (pm.r, pm.i, cm.e, cm.b, cm.j):
            return 0, _cx(m, f"table params {pv} disagree with matrix params")
        sums = cell_sums(pair.matrix)
        if sums.ell != t.a[t.k - 1] - 1 - t.a[t.k - 2]:
            return 0, _cx(m, "leading sum != a_k - 1 - a_{k-1}")
    return len(pool.ones(n)), None


def _iter_valid_tables(n: int) -> Iterable[GenInvTable]:
    for a in product(*[range(i) for i in range(1, n + 1)]):
        for k in range(3, n + 1):
            top = k - 2 - a[k - 1]
            for b in range(max(top, 0) + 1):
                for beta in range(max(a[k - 1] + b - a[k - 2], 0)):
                    t = GenInvTable(k=k, a=a, b=b, beta=beta)
                    if table_valid(t):
                        yield t


def _prop_table_characterization(pool: _Pool, n: int):
    image = {gen_table(nz.neutralize(m)) for m in pool.ones(n)}
    expected = set(_iter_valid_tables(n))
    if image != expected:
        return 0, f"table sets differ by {len(image ^ expected)} elements (n={n})"
    for t in expected:
        back = gen_table(pair_from_table(t))
        if back != t:
            return 0, f"table {t.to_text()} does not round-trip (got {back.to_text()})"
    return len(image) + len(expected), None


def _prop_table_duality(pool: _Pool, n: int):
    for m in pool.ones(n):
        t = gen_table(nz.neutralize(m))
        d = dual_table(t)
        if dual_table(d) != t:
            return 0, _cx(m, "table duality is not an involution")
        if d != gen_table(nz.neutralize(reflect(m))):
            return 0, _cx(m, "dual table != table of the reflected matrix")
        if d.a[t.k - 2] + t.a[t.k - 1] + t.b != t.k - 2:
            return 0, _cx(m, "dual a_{k-1} does not complement a_k + b to k-2")
        beta_prime = t.b - t.beta + t.a[t.k - 1] - t.a[t.k - 2] - 1
        if d.beta != beta_prime:
            return 0, _cx(m, f"dual beta {d.beta} != charge-swap beta {beta_prime}")
        swapped = GenInvTable(k=t.k, a=t.a, b=t.b, beta=beta_prime)
        if swapped != gen_table(nz.neutralize(nz.swap_charges(m))):
            return 0, _cx(m, "replacing beta by beta' is not the charge swap")
    return len(pool.ones(n)), None


def _prop_paths_roundtrip(pool: _Pool, n: int):
    for m in pool.ones(n):
        pair = nz.neutralize(m)
        cfg = config_from_pair(pair)
        problems = validate_config(cfg)
        if problems:
            return 0, _cx(m, f"encoded configuration invalid: {problems[0]}")
        if cfg.step_count("N") != 1 or cfg.step_count("S") != 1:
            return 0, _cx(m, "configuration does not have exactly one N and one S")
        t = gen_table(pair)
        if "N" not in cfg.paths[t.k - 2].steps or "S" not in cfg.paths[t.k - 1].steps:
            return 0, _cx(m, "special steps are not in consecutive paths k-1, k")
        ends = [p.end for p in cfg.paths]
        expected_ends = [(i - 1, i) for i in range(1, n + 1)]
        expected_ends[t.k - 2], expected_ends[t.k - 1] = (
            (t.k - 1, t.k),
            (t.k - 2, t.k - 1),
        )
        if ends != expected_ends:
            return 0, _cx(m, f"endpoints {ends} break the endpoint law")
        if pair_from_config(cfg) != pair:
            return 0, _cx(m, "configuration does not decode to its pair")
    return len(pool.ones(n)), None


def _prop_paths_params(pool: _Pool, n: int):
    for m in pool.ones(n):
        cfg = config_from_pair(nz.neutralize(m))
        pv = config_params(cfg)
        cm, pm = charges(m), classical_params(m)
        if (pv.r, pv.i, pv.e, pv.b, pv.j) != (pm.r, pm.i, cm.e, cm.b, cm.j):
            return 0, _cx(m, f"path params {pv} disagree with matrix params")
    return len(pool.ones(n)), None


def _prop_paths_duality(pool: _Pool, n: int):
    for m in pool.ones(n):
        cfg = config_from_pair(nz.neutralize(m))
        dual = dual_config(cfg)
        if dual_config(dual) != cfg:
            return 0, _cx(m, "path duality is not an involution")
        if dual != config_from_pair(nz.neutralize(reflect(m))):
            return 0, _cx(m, "dual configuration != configuration of the reflection")
        if table_from_config(dual) != dual_table(table_from_config(cfg)):
            return 0, _cx(m, "path duality does not realize table duality")
        if (dual.step_count("N"), dual.step_count("S")) != (1, 1):
            return 0, _cx(m, "duality changed the special step counts")
        junctions = sorted(
            (level - 1 - x, level) for (x, level) in (p.junction for p in cfg.paths)
        )
        if junctions != sorted(p.junction for p in dual.paths):
            return 0, _cx(m, "junctions do not map by the level mirror")
    return len(pool.ones(n)), None


def _prop_enumeration_totals(pool: _Pool, n: int):
    mats = pool.all(n)
    if len(mats) != formula_count(n):
        return 0, f"enumerated {len(mats)} matrices, formula says {formula_count(n)} (n={n})"
    rows = [m.rows for m in mats]
    if rows != sorted(rows):
        return 0, f"stream is not in row-lexicographic order (n={n})"
    if len(set(rows)) != len(rows):
        return 0, f"stream repeats a matrix (n={n})"
    for m in mats:
        validate_asm(m.rows)
    if n <= 3:
        naive = set()
        for cells in product((-1, 0, 1), repeat=n * n):
            grid = [cells[i * n : (i + 1) * n] for i in range(n)]
            try:
                naive.add(validate_asm(grid).rows)
            except AsmcError:
                continue
        if naive != set(rows):
            return 0, f"backtracking disagrees with the naive filter (n={n})"
    return len(mats), None


def _prop_distribution_mirror(pool: _Pool, n: int):
    e_counts = distribution(n, ["E"], cap=pool.cap)
    b_counts = distribution(n, ["B"], cap=pool.cap)
    if any(e_counts[(v,)] != e_counts.get((-v,), 0) for (v,) in e_counts):
        return 0, f"E-marginal is not mirror-symmetric (n={n})"
    if any(b_counts[(v,)] != b_counts.get((-v,), 0) for (v,) in b_counts):
        return 0, f"B-marginal is not mirror-symmetric (n={n})"
    if e_counts != b_counts:
        return 0, f"E and B distributions differ (n={n})"
    return sum(e_counts.values()) + sum(b_counts.values()), None


PROPERTIES: tuple[tuple[str, str, Callable], ...] = (
    ("reflect-classical", "double reflection is the identity; r, i, s reflection identities", _prop_reflect_classical),
    ("reflect-charges", "sign class mirrors and E, B negate, J invariant under reflection", _prop_reflect_charges),
    ("neutral-cell-swap", "reflection swaps the leading and closing sums of a neutral matrix", _prop_neutral_cell_swap),
    ("permutation-inversions", "ASM inversion count reduces to pairwise inversions on permutations", _prop_permutation_inversions),
    ("perm-table-roundtrip", "permutation inversion tables encode and decode faithfully", _prop_perm_table_roundtrip),
    ("discharge-structure", "discharge yields a permutation fixing rows 1..k with the stated sums", _prop_discharge_structure),
    ("discharge-neutral-shortcut", "steps 3 and 4 cancel on neutral inputs", _prop_discharge_neutral_shortcut),
    ("discharge-bijection", "discharge hits every valid 4-tuple exactly once and inverts", _prop_discharge_bijection),
    ("neutralize-roundtrip", "restore inverts neutralize on every one-minus matrix", _prop_neutralize_roundtrip),
    ("neutralize-image", "neutralize maps onto exactly the admissible (N, E) pairs", _prop_neutralize_image),
    ("neutralize-transport", "neutralize preserves r, i, J and shifts B by E", _prop_neutralize_transport),
    ("neutralize-reflect", "neutralize commutes with vertical reflection", _prop_neutralize_reflect),
    ("charge-range", "the magnetic charge shares the electric charge's interval", _prop_charge_range),
    ("charge-flip-involution", "flipping the charge in its interval is an involution", _prop_charge_flip_involution),
    ("charge-swap", "the matrix involution swaps E and B and fixes r, i, J", _prop_charge_swap),
    ("charge-swap-reflect", "the charge swap commutes with reflection", _prop_charge_swap_reflect),
    ("table-roundtrip", "generalized tables encode pairs faithfully with matching statistics", _prop_table_roundtrip),
    ("table-characterization", "the four table conditions capture exactly the encodable tables", _prop_table_characterization),
    ("table-duality", "table duality matches reflection and the charge-swap beta", _prop_table_duality),
    ("paths-roundtrip", "path configurations encode pairs faithfully with the endpoint law", _prop_paths_roundtrip),
    ("paths-params", "statistics read off paths match the matrix statistics", _prop_paths_params),
    ("paths-duality", "path duality mirrors junctions and matches reflection", _prop_paths_duality),
    ("enumeration-totals", "enumeration is deterministic, duplicate-free and matches the product formula", _prop_enumeration_totals),
    ("distribution-mirror", "E and B marginals are mirror images of each other and equal as multisets", _prop_distribution_mirror),
)


@dataclass
class PropertyResult:
    name: str
    description: str
    checked: int
    counterexample: str | None
    seconds: float

    @property
    def ok(self) -> bool:
        return self.counterexample is None


@dataclass
class VerifyReport:
    n_max: int
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_text(self) -> str:
        width = max(len(r.name) for r in self.results)
        lines = [f"verification sweep up to n = {self.n_max}"]
        for r in self.results:
            status = "ok" if r.ok else "FAIL"
            lines.append(
                f"  {r.name:<{width}}  {status:<4} {r.checked:>9} checks  {r.seconds:7.2f}s"
            )
            if not r.ok:
                lines.append(f"    counterexample: {r.counterexample}")
        passed = sum(1 for r in self.results if r.ok)
        lines.append(f"{passed}/{len(self.results)} properties passed")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "n_max": self.n_max,
                "ok": self.ok,
                "properties": [
                    {
                        "name": r.name,
                        "description": r.description,
                        "checked": r.checked,
                        "ok": r.ok,
                        "counterexample": r.counterexample,
                        "seconds": round(r.seconds, 3),
                    }
                    for r in self.results
                ],
            },
            indent=2,
        )


def run_property(name: str, pool: _Pool, n_values: Iterable[int]) -> PropertyResult:
    """Run one registered property over the given orders, stopping at the
    first counterexample (orders ascend, so it is minimal)."""
    try:
        description, func = next((d, f) for (p, d, f) in PROPERTIES if p == name)
    except StopIteration:
        raise ValueError(f"unknown property {name!r}") from None
    start = time.perf_counter()
    checked = 0
    counterexample = None
    for n in n_values:
        try:
            done, counterexample = func(pool, n)
        except AsmcError as exc:
            done, counterexample = 0, f"unexpected error at n={n}: {exc}"
        checked += done
        if counterexample is not None:
            break
    return PropertyResult(
        name=name,
        description=description,
        checked=checked,
        counterexample=counterexample,
        seconds=time.perf_counter() - start,
    )


def verify_suite(n_max: int, cap: int = DEFAULT_CAP) -> VerifyReport:
    """Run every registered property exhaustively for 3 <= n <= n_max."""
    if n_max > cap:
        raise CapExceeded(n_max, cap)
    pool = _Pool(cap)
    report = VerifyReport(n_max=n_max)
    for name, _, _ in PROPERTIES:
        report.results.append(run_property(name, pool, range(3, n_max + 1)))
    return report
