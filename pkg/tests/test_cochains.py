from fractions import Fraction

import numpy as np
import pytest

from cocycle_lab.cochains import (
    Cochain,
    boundary_matrix,
    cochain_exponents,
    cocycle3_failure,
    cohomology,
    cyclic_phi_q,
    cyclic_qabc,
    cyclic_qabc_coboundary_witness,
    delta2,
    delta3,
    is_coboundary_mu,
    is_cocycle3,
    is_normalized2,
    is_normalized3,
    normalize3,
)
from cocycle_lab.groups import cyclic, klein
from cocycle_lab.klein import g_b, h_a, klein_2cochain, phi_X
from cocycle_lab.scalars import CycScalar, root_of_unity


def scalars(*values):
    return [CycScalar.rational(v) for v in values]


def random_mu4_2cochain(rng, group):
    return Cochain.from_function(
        group, 2, lambda x, y: root_of_unity(4, rng.randrange(4))
    )


def test_delta2_displayed_values(G):
    # the ten-parameter 2-cochain and the full table of its coboundary
    names = dict(a1=2, a2=3, a3=5, b1=7, b2=11, b3=13, b4=17, b5=19, b6=23, c=29)
    g = klein_2cochain(**{k: Fraction(v) for k, v in names.items()})
    d = delta2(g).values
    a1, a2, a3, b1, b2, b3, b4, b5, b6, c = (
        Fraction(names[k]) for k in ("a1", "a2", "a3", "b1", "b2", "b3", "b4", "b5", "b6", "c")
    )
    s, t, r = G.sigma, G.tau, G.rho
    # the diagonal is always trivial
    assert d[(s, s, s)] == 1 and d[(t, t, t)] == 1 and d[(r, r, r)] == 1
    expected = {
        (s, s, t): b1 * b5 / (a1 * c),
        (r, r, s): b3 * b6 / (a3 * c),
        (t, s, s): a1 * c / (b4 * b3),
        (s, t, s): b4 * b5 / (b1 * b3),
        (s, t, r): b2 * a1 / (b1 * a3),
        (t, r, s): b3 * a2 / (b2 * a1),
        (r, s, t): b1 * a3 / (b3 * a2),
        (t, s, r): b5 * a2 / (b4 * a3),
        (s, r, t): b6 * a1 / (b5 * a2),
        (r, t, s): b4 * a3 / (b6 * a1),
    }
    for key, value in expected.items():
        assert d[key] == value, key


def test_delta2_examples(G):
    assert delta2(Cochain.constant(G, 2, 1)).is_trivial()
    g = klein_2cochain(a1=7, a2=7, a3=7)
    d = delta2(g)
    assert d.values[(G.tau, G.sigma, G.sigma)] == 7
    assert d.values[(G.sigma, G.sigma, G.tau)] == Fraction(1, 7)


def test_delta3_kills_coboundaries(G, rng):
    assert delta3(Cochain.constant(G, 3, 1)).is_trivial()
    groups = (G, cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6))
    for trial in range(100):
        g = random_mu4_2cochain(rng, groups[trial % len(groups)])
        assert delta2(g).delta().is_trivial()
    assert delta3(phi_X({"sigma"})).is_trivial()


def test_degree_guards(G):
    with pytest.raises(ValueError):
        delta2(Cochain.constant(G, 3, 1))
    with pytest.raises(ValueError):
        delta3(Cochain.constant(G, 2, 1))


def test_is_cocycle3(G):
    assert is_cocycle3(Cochain.constant(G, 3, 1))
    broken = dict(Cochain.constant(G, 3, 1).values)
    broken[(G.sigma, G.sigma, G.sigma)] = CycScalar.rational(2)
    assert not is_cocycle3(Cochain(G, 3, broken))
    assert is_cocycle3(cyclic_phi_q(2, -1))


def test_is_normalized(G):
    assert is_normalized3(Cochain.constant(G, 3, 1))
    for phi in (phi_X({"sigma"}), h_a(5), g_b(-1)):
        assert is_normalized3(phi)
        # normalization propagates to the other unit slots
        for x in G.elements():
            for y in G.elements():
                assert phi.values[(G.e, x, y)].is_one()
                assert phi.values[(x, y, G.e)].is_one()
    psi = Cochain.from_function(
        G, 2, lambda x, y: 2 if (x.is_identity and not y.is_identity) else (3 if y.is_identity else 1)
    )
    assert not is_normalized2(psi)
    assert is_normalized2(klein_2cochain(c=5))


def test_normalize3_on_normalized_input(G):
    phi = g_b(7)
    normalized, witness = normalize3(phi)
    assert witness.is_trivial()
    assert normalized == phi


def test_normalize3_unit_slot_cochain(G):
    # a 2-cochain supported on the unit slots has an already-normalized
    # coboundary (both constants agree), so the witness is trivial and the
    # nontrivial interior values survive
    h = klein_2cochain(c=2)
    phi = delta2(h)
    assert is_normalized3(phi)
    assert phi.values[(G.sigma, G.sigma, G.tau)] == Fraction(1, 2)
    normalized, witness = normalize3(phi)
    assert witness.is_trivial() and normalized == phi
    # with every value 2 the coboundary collapses completely
    assert delta2(Cochain.constant(G, 2, 2)).is_trivial()


def test_normalize3_nonnormalized_input(G):
    def psi_value(x, y):
        if x.is_identity:
            return 2
        if y.is_identity:
            return 3
        return 1

    phi = delta2(Cochain.from_function(G, 2, psi_value))
    assert is_cocycle3(phi) and not is_normalized3(phi)
    assert phi.values[(G.e,) * 3].is_one()  # forced for every cocycle
    normalized, witness = normalize3(phi)
    assert is_normalized3(normalized)
    assert normalized == phi * delta2(witness)
    with pytest.raises(ValueError):
        normalize3(Cochain.from_function(G, 3, lambda x, y, z: 2 if x == y == z == G.sigma else 1))


def test_cyclic_phi_q():
    phi = cyclic_phi_q(2, -1)
    c = cyclic(2).generator()
    assert phi.values[(c, c, c)] == -1
    z3 = root_of_unity(3, 1)
    phi = cyclic_phi_q(3, z3)
    c2 = cyclic(3).element([2])
    assert phi.values[(c2, c2, c2)] == z3**2
    assert cyclic_phi_q(5, 1).is_trivial()
    for n in range(2, 7):
        for k in range(n):
            table = cyclic_phi_q(n, root_of_unity(n, k))
            assert is_cocycle3(table) and is_normalized3(table)
    with pytest.raises(ValueError):
        cyclic_phi_q(3, root_of_unity(4, 1))


def test_cyclic_phi_q_multiplicative(rng):
    for n in (2, 3, 4, 6):
        a, b = rng.randrange(n), rng.randrange(n)
        left = cyclic_phi_q(n, root_of_unity(n, a)) * cyclic_phi_q(n, root_of_unity(n, b))
        assert left == cyclic_phi_q(n, root_of_unity(n, (a + b) % n))


def test_cyclic_qabc():
    z3 = root_of_unity(3, 1)
    table = cyclic_qabc(3, z3)
    C3 = cyclic(3)
    c, c2 = C3.generator(), C3.element([2])
    assert table.values[(c, c, c)] == z3
    assert table.values[(c2, c2, c2)] == z3**2  # 8 = 2 mod 3
    assert is_cocycle3(cyclic_qabc(5, root_of_unity(5, 1)))
    for n in range(2, 7):
        table = cyclic_qabc(n, root_of_unity(n, 1))
        assert is_cocycle3(table) and is_normalized3(table)


def test_cyclic_qabc_witness():
    z3 = root_of_unity(3, 1)
    witness = cyclic_qabc_coboundary_witness(3, z3)
    C3 = cyclic(3)
    c, c2 = C3.generator(), C3.element([2])
    assert witness.values[(c2, c)] == z3.inv()  # exponent -(1)(2)(1)/2 = -1
    assert delta2(witness).values[(c, c, c)] == z3
    assert delta2(witness) == cyclic_qabc(3, z3)
    assert delta2(cyclic_qabc_coboundary_witness(5, root_of_unity(5, 1))) == cyclic_qabc(
        5, root_of_unity(5, 1)
    )
    with pytest.raises(ValueError):
        cyclic_qabc_coboundary_witness(2, -1)


def test_boundary_matrix_shapes_and_complex():
    # |G|^(n+1) rows by |G|^n columns
    matrix = boundary_matrix(cyclic(2), 2, 2)
    assert matrix.shape == (8, 4)
    assert boundary_matrix(cyclic(2), 3, 2).shape == (16, 8)
    for group, m in ((klein(), 4), (cyclic(3), 3)):
        outer = boundary_matrix(group, 3, m)
        inner = boundary_matrix(group, 2, m)
        assert not ((outer @ inner) % m).any()


def test_boundary_matrix_diagonal_row(G):
    # the row at (sigma,)*4 doubles the coefficient of f(sigma,sigma,sigma)
    matrix = boundary_matrix(G, 3, 4)
    triples = list(G.tuples(3))
    quads = list(G.tuples(4))
    row = matrix[quads.index((G.sigma,) * 4)]
    assert row[triples.index((G.sigma,) * 3)] == 2
    assert row[triples.index((G.e, G.sigma, G.sigma))] == 3  # -1 mod 4


def test_additive_multiplicative_consistency(G, rng):
    matrix = boundary_matrix(G, 3, 4)
    candidates = [phi_X({"sigma"}), g_b(root_of_unity(4, 1)), h_a(-1)]
    for _ in range(5):
        candidates.append(
            Cochain.from_function(G, 3, lambda *a: root_of_unity(4, rng.randrange(4)))
        )
    for table in candidates:
        vec = cochain_exponents(table, 4)
        additive = not ((matrix @ vec) % 4).any()
        assert additive == is_cocycle3(table)


def test_is_coboundary_mu(G):
    trivial = Cochain.constant(G, 3, 1)
    witness = is_coboundary_mu(trivial, 4)
    assert witness is not None and witness.is_trivial()
    assert is_coboundary_mu(phi_X({"sigma"}), 4) is None
    found = is_coboundary_mu(h_a(-1), 4)
    assert found is not None and delta2(found) == h_a(-1)
    with pytest.raises(ValueError):
        is_coboundary_mu(g_b(5), 4)


def test_cohomology_reports():
    report = cohomology(cyclic(2), 3, 2)
    assert report.invariant_factors == [2]
    report = cohomology(cyclic(3), 3, 3)
    assert report.invariant_factors == [3]
    report = cohomology(klein(), 3, 4)
    assert report.invariant_factors == [2, 2, 2, 2]
    assert int(np.prod(report.invariant_factors)) == report.kernel_size // report.image_size
    for generator in report.generators:
        assert is_cocycle3(generator)
        assert is_coboundary_mu(generator, 4) is None


def test_cocycle_failure_reports_quadruple(G):
    broken = dict(Cochain.constant(G, 3, 1).values)
    broken[(G.sigma, G.sigma, G.sigma)] = CycScalar.rational(2)
    failure = cocycle3_failure(Cochain(G, 3, broken))
    assert failure is not None and len(failure) == 4


def test_cochain_json_roundtrip(G):
    table = g_b(root_of_unity(4, 1))
    data = table.to_json()
    assert len(data["values"]) == 64
    assert Cochain.from_json(data) == table


def test_cochain_validation(G):
    with pytest.raises(ValueError):
        Cochain(G, 3, {})
    values = {key: CycScalar.one() for key in G.tuples(2)}
    values[(G.e, G.e)] = CycScalar.zero()
    with pytest.raises(ValueError):
        Cochain(G, 2, values)
