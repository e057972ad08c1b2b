import itertools

import pytest

from dihedral_enum.actions import ActionKind, Part, action_size
from dihedral_enum.dihedral_core import make_group
from dihedral_enum.polya import (
    GRAPH_VALENCY_WEIGHTS,
    CycleIndex,
    Method,
    NonIntegerResult,
    UnivariatePolynomial,
    coefficient,
    cycle_index,
    evaluate_constant,
    subset_polynomial,
)

D, GR = ActionKind.DIGRAPH, ActionKind.GRAPH
PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


@pytest.mark.parametrize("method", list(Method))
def test_cycle_index_p3(method):
    G = make_group(3)
    # identity: x1^5; two s=1 translations: x1^2 x3; three s=2 maps: x1 x2^2
    assert cycle_index(G, D, method).erased() == {((1, 5),): 1, ((1, 2), (3, 1)): 2, ((1, 1), (2, 2)): 3}
    assert cycle_index(G, D, method).render() == "(1/6)*[x1^5 + 2*x1^2*x3 + 3*x1*x2^2]"
    assert cycle_index(G, GR, method).erased() == {((1, 4),): 1, ((1, 1), (3, 1)): 2, ((1, 2), (2, 1)): 3}
    assert cycle_index(G, GR, method).render() == "(1/6)*[x1^4 + 3*x1^2*x2 + 2*x1*x3]"


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("kind", [D, GR])
def test_direct_equals_closed_with_parts(p, kind):
    G = make_group(p)
    direct = cycle_index(G, kind, Method.DIRECT)
    closed = cycle_index(G, kind, Method.CLOSED)
    assert direct == closed
    assert direct.render() == closed.render()


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("kind", [D, GR])
def test_cycle_index_invariants(p, kind):
    G = make_group(p)
    ci = cycle_index(G, kind)
    assert ci.group_order == p * (p - 1)
    assert ci.mass() == p * (p - 1)
    n_rot = action_size(G, kind) - p
    for mono, c in ci.terms:
        assert c > 0
        per_part = {Part.ROTATIONS: 0, Part.REFLECTIONS: 0}
        for (length, part), e in mono:
            per_part[part] += length * e
        assert per_part == {Part.ROTATIONS: n_rot, Part.REFLECTIONS: p}


def test_evaluate_constant_examples():
    G = make_group(3)
    assert evaluate_constant(cycle_index(G, D), 2) == 12
    assert evaluate_constant(cycle_index(G, GR), 2) == 8
    for p in PRIMES:
        for kind in (D, GR):
            assert evaluate_constant(cycle_index(make_group(p), kind), 1) == 1


def test_evaluate_constant_matches_burnside_colourings():
    # 3-colourings of the digraph action on D_6, counted by brute force
    from dihedral_enum.actions import permutation_table

    G = make_group(3)
    perms = [permutation_table(a, G, D) for a in G.automorphisms()]
    seen, orbits = set(), 0
    for f in itertools.product(range(3), repeat=5):
        if f in seen:
            continue
        orbits += 1
        for perm in perms:
            g = [0] * 5
            for i, v in enumerate(f):
                g[perm[i]] = v
            seen.add(tuple(g))
    assert evaluate_constant(cycle_index(G, D), 3) == orbits


def test_evaluate_constant_rejects_bad_m():
    with pytest.raises(ValueError):
        evaluate_constant(cycle_index(make_group(3), D), 0)


def test_non_integer_result_is_raised():
    mono = (((1, Part.ROTATIONS), 1),)
    bogus = CycleIndex(4, ((mono, 1),))
    with pytest.raises(NonIntegerResult):
        evaluate_constant(bogus, 2)
    with pytest.raises(NonIntegerResult):
        subset_polynomial(bogus)


def test_subset_polynomial_examples():
    G = make_group(3)
    q = subset_polynomial(cycle_index(G, D))
    assert coefficient(q, 2) == 3
    assert coefficient(q, 0) == 1
    g = subset_polynomial(cycle_index(G, GR), GRAPH_VALENCY_WEIGHTS)
    assert g.as_list() == [1, 1, 2, 2, 1, 1]


@pytest.mark.parametrize("p", PRIMES)
def test_subset_polynomial_properties(p):
    G = make_group(p)
    for kind in (D, GR):
        ci = cycle_index(G, kind)
        q = subset_polynomial(ci)
        n = action_size(G, kind)
        assert q.degree == n
        assert q[0] == 1 == q[n]
        assert q.as_list() == q.as_list()[::-1]
        assert q.at_one() == evaluate_constant(ci, 2)
        w = subset_polynomial(ci, GRAPH_VALENCY_WEIGHTS) if kind is GR else q
        assert w.at_one() == evaluate_constant(ci, 2)
        assert all(c >= 0 for c in w.as_list())


def test_coefficient_examples():
    q = UnivariatePolynomial({0: 1, 2: 3})
    assert coefficient(q, 2) == 3
    assert coefficient(q, -1) == 0
    assert coefficient(q, 10) == 0
    assert UnivariatePolynomial({0: 1, 3: 0}).coefficients == {0: 1}
