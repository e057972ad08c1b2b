"""Acceptance checks, one ``criterion`` mark per criterion.

The terminal summary prints a pass/fail line for each criterion.
"""

import gc
import subprocess
import sys
import time
from pathlib import Path

import pytest

from dihedral_enum.actions import ActionKind, cycle_type_closed, cycle_type_direct
from dihedral_enum.counting import (
    count_circulant_digraphs,
    count_circulant_digraphs_by_outdegree,
    count_circulant_graphs,
    count_connected_digraphs,
    count_connected_digraphs_by_outdegree,
    count_connected_graphs,
    count_digraphs,
    count_digraphs_by_outdegree,
    count_graphs,
    count_graphs_by_valency,
)
from dihedral_enum.dihedral_core import is_prime, make_group, primitive_root
from dihedral_enum.oracle import verify
from dihedral_enum.polya import (
    GRAPH_VALENCY_WEIGHTS,
    Method,
    cycle_index,
    evaluate_constant,
    index_from_cycle_types,
    subset_polynomial,
)

D, GR = ActionKind.DIGRAPH, ActionKind.GRAPH
GOLDEN = Path(__file__).parent / "golden"
PRIMES_TO_101 = [p for p in range(3, 102) if is_prime(p)]


def elapsed(fn, repeat=1):
    """Best wall time of ``repeat`` calls, and the last result.

    The collector is paused while timing, as ``timeit`` does, so garbage left
    by earlier tests does not count against the bound.
    """
    best, result = float("inf"), None
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeat):
            t0 = time.perf_counter()
            result = fn()
            best = min(best, time.perf_counter() - t0)
    finally:
        if was_enabled:
            gc.enable()
    return best, result


def golden_rows(name):
    lines = (GOLDEN / name).read_text().splitlines()[1:]
    return [[int(x) for x in line.split(",")] for line in lines]


TABLE1 = {row[0]: (row[1], row[2:]) for row in golden_rows("table1.txt")}
TABLE2 = {p: n for p, n in golden_rows("table2.txt")}


# 1


@pytest.mark.criterion(1, "example values for digraphs on D_6")
def test_example_digraphs_p3():
    def run():
        return (
            count_digraphs(3),
            count_connected_digraphs(3),
            count_digraphs_by_outdegree(3, 2),
            count_connected_digraphs_by_outdegree(3, 2),
        )

    t, values = elapsed(run, repeat=5)
    assert values == (12, 8, 3, 2)
    assert t < 1e-3, f"{t * 1e3:.3f} ms"


# 2


@pytest.mark.criterion(2, "example values for graphs on D_6")
def test_example_graphs_p3():
    t, values = elapsed(lambda: (count_graphs(3), count_connected_graphs(3)), repeat=5)
    assert values == (8, 5)
    assert t < 1e-3, f"{t * 1e3:.3f} ms"


# 3


def table1_row(p):
    return count_connected_digraphs(p), [count_connected_digraphs_by_outdegree(p, k) for k in range(2, 2 * p)]


@pytest.mark.criterion(3, "connected digraph table")
@pytest.mark.parametrize("p", sorted(TABLE1))
def test_table1_row(p):
    assert table1_row(p) == TABLE1[p]


@pytest.mark.criterion(3, "connected digraph table")
def test_table1_spot_values_and_time():
    assert sorted(TABLE1) == [3, 5, 7, 11, 13, 17, 19]
    assert TABLE1[13][0] == 216167
    assert TABLE1[19][0] == 401911341
    assert TABLE1[19][1][-4:] == [68, 11, 2, 1]
    t, rows = elapsed(lambda: {p: table1_row(p) for p in TABLE1})
    assert rows == TABLE1
    assert t < 0.1, f"{t * 1e3:.1f} ms"


# 4


@pytest.mark.criterion(4, "connected graph table")
@pytest.mark.parametrize("p", sorted(TABLE2))
def test_table2_pair(p):
    assert count_connected_graphs(p) == TABLE2[p]


@pytest.mark.criterion(4, "connected graph table")
def test_table2_time():
    assert len(TABLE2) == 12
    assert TABLE2[3] == 5 and TABLE2[41] == 1406056810572383
    t, _ = elapsed(lambda: [count_connected_graphs(p) for p in TABLE2], repeat=3)
    assert t < 0.01, f"{t * 1e3:.2f} ms"


# 5


@pytest.mark.criterion(5, "connected out-degree counts sum to N_1")
def test_connected_outdegree_sum():
    def run():
        return {
            p: (sum(count_connected_digraphs_by_outdegree(p, k) for k in range(2, 2 * p)), count_connected_digraphs(p))
            for p in PRIMES_TO_101
        }

    t, sums = elapsed(run)
    for p, (lhs, rhs) in sums.items():
        assert lhs == rhs, p
    assert t < 1.0, f"{t:.2f} s"


# 6

ORACLE_CASES = [(D, 3, 5), (D, 5, 5), (D, 7, 5), (D, 11, 60)] + [(GR, p, 5) for p in (3, 5, 7, 11, 13)]


@pytest.mark.criterion(6, "brute-force orbits equal the formulas")
@pytest.mark.parametrize("kind,p,limit", ORACLE_CASES, ids=[f"{k.value}-{p}" for k, p, _ in ORACLE_CASES])
def test_oracle_equivalence(kind, p, limit):
    t, report = elapsed(lambda: verify(p, kind))
    names = {c.name for c in report.checks}
    if kind is D:
        assert {"N", "N_1", "M_k", "M'_k"} <= names
    else:
        assert {"N'", "N_1'", "valency"} <= names
    bad = report.first_mismatch()
    assert bad is None, bad.detail()
    assert t < limit, f"{t:.1f} s"


# 7


def cross_validate(p):
    G = make_group(p)
    z = primitive_root(p)
    for kind in (D, GR):
        direct = [cycle_type_direct(a, G, kind) for a in G.automorphisms()]
        for a, ct in zip(G.automorphisms(), direct):
            assert cycle_type_closed(a, G, kind, z) == ct, (p, kind, a)
        assert index_from_cycle_types(G, direct) == cycle_index(G, kind, Method.CLOSED), (p, kind)


@pytest.mark.criterion(7, "direct and closed cycle indices agree")
def test_cycle_index_cross_validation():
    t, _ = elapsed(lambda: [cross_validate(p) for p in PRIMES_TO_101])
    assert t < 10.0, f"{t:.1f} s"


@pytest.mark.criterion(7, "direct and closed cycle indices agree")
def test_direct_helper_matches_cycle_index():
    G = make_group(13)
    for kind in (D, GR):
        direct = [cycle_type_direct(a, G, kind) for a in G.automorphisms()]
        assert index_from_cycle_types(G, direct) == cycle_index(G, kind, Method.DIRECT)


# 8


def exactness(p):
    G = make_group(p)
    for kind in (D, GR):
        ci = cycle_index(G, kind)
        for m in (1, 2, 3):
            assert evaluate_constant(ci, m) > 0
        q = subset_polynomial(ci)
        assert q.as_list() == q.as_list()[::-1]
        assert q.at_one() == evaluate_constant(ci, 2)
    n = count_digraphs(p)
    m = [count_digraphs_by_outdegree(p, k) for k in range(2 * p)]
    mc = [count_circulant_digraphs_by_outdegree(p, k) for k in range(p)]
    m1 = [count_connected_digraphs_by_outdegree(p, k) for k in range(2 * p)]
    v = [count_graphs_by_valency(p, k) for k in range(2 * p)]
    assert sum(m) == n
    assert m == m[::-1] and mc == mc[::-1] and v == v[::-1]
    assert sum(v) == count_graphs(p)
    assert v == subset_polynomial(cycle_index(G, GR), GRAPH_VALENCY_WEIGHTS).as_list()
    counts = m + mc + m1 + v + [n, count_circulant_digraphs(p), count_circulant_graphs(p)]
    counts += [count_connected_digraphs(p), count_connected_graphs(p)]
    assert min(counts) >= 0


@pytest.mark.criterion(8, "exact divisions, nonnegative and palindromic counts")
def test_exactness_suite():
    t, _ = elapsed(lambda: [exactness(p) for p in PRIMES_TO_101])
    assert t < 1.0, f"{t:.2f} s"


# 9


@pytest.mark.criterion(9, "tables command matches golden files")
@pytest.mark.parametrize("which", ["1", "2"])
def test_tables_golden(which):
    proc = subprocess.run(
        [sys.executable, "-m", "dihedral_enum", "tables", "--which", which],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / f"table{which}.txt").read_bytes()
