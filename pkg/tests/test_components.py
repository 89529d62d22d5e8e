import random

import pytest

from wreathact import (
    GenGroup,
    Permutation,
    WreathContext,
    WreathElement,
    WreathSubgroup,
    same_group,
)
from helpers import (
    block_intransitive_subgroup,
    p,
    random_wreath_subgroup,
    sym_perms,
    we,
    wreath_closure,
)

S = p(1, 0)
ID2 = Permutation.identity(2)


def full_w22() -> WreathSubgroup:
    ctx = WreathContext(2, 2)
    return WreathSubgroup(
        ctx, (WreathElement((S, ID2), ID2), WreathElement((ID2, ID2), S))
    )


def diagonal_w22() -> WreathSubgroup:
    ctx = WreathContext(2, 2)
    return WreathSubgroup(
        ctx, (WreathElement((S, S), ID2), WreathElement((ID2, ID2), S))
    )


class TestEmptySubgroup:
    def test_trivial_subgroup_has_trivial_structure(self):
        ctx = WreathContext(3, 2)
        X = WreathSubgroup(ctx, ())
        assert X.delta_orbits == ((0,), (1,))
        assert not X.is_delta_transitive
        for d in range(2):
            assert X.partition_stabilizer_gens(d) == ()
            assert X.component(d).enumerate_elements() == {Permutation.identity(3)}
        assert X.enumerate_elements() == {ctx.identity_element()}


class TestPartitionStabilizer:
    def test_base_subgroup_stabilizes_everything(self):
        ctx = WreathContext(2, 2)
        gens = (WreathElement((S, ID2), ID2), WreathElement((S, S), ID2))
        X = WreathSubgroup(ctx, gens)
        for d in (0, 1):
            assert X.partition_stabilizer_gens(d) == gens

    def test_swap_only_group_has_trivial_stabilizer(self):
        ctx = WreathContext(2, 2)
        X = WreathSubgroup(ctx, (WreathElement((ID2, ID2), S),))
        stab = X.partition_stabilizer_gens(0)
        closure = wreath_closure(list(stab) + [X.identity()])
        assert closure == {X.identity()}

    def test_full_wreath_product_stabilizer_order(self):
        X = full_w22()
        assert len(X.enumerate_elements()) == 8
        stab = X.partition_stabilizer_gens(0)
        assert len(wreath_closure(list(stab) + [X.identity()])) == 4

    def test_stabilizer_closure_matches_enumeration_filter(self):
        rng = random.Random(31)
        for _ in range(30):
            q = rng.choice([2, 3])
            m = rng.choice([2, 3])
            X = random_wreath_subgroup(rng, q, m)
            elements = X.enumerate_elements(5000)
            for d in range(m):
                stab = X.partition_stabilizer_gens(d)
                closure = wreath_closure(list(stab) + [X.identity()])
                filtered = {w for w in elements if w.top[d] == d}
                assert closure == filtered

    def test_stabilizer_tops_fix_the_coordinate(self):
        rng = random.Random(37)
        for _ in range(20):
            X = random_wreath_subgroup(rng, 3, 3)
            for d in range(3):
                for w in X.partition_stabilizer_gens(d):
                    assert w.top[d] == d


class TestComponent:
    def test_full_wreath_product_has_symmetric_components(self):
        X = full_w22()
        for d in (0, 1):
            assert X.component(d).enumerate_elements() == set(sym_perms(2))

    def test_top_only_group_has_trivial_components(self):
        ctx = WreathContext(2, 2)
        X = WreathSubgroup(ctx, (WreathElement((ID2, ID2), S),))
        for d in (0, 1):
            assert X.component(d).enumerate_elements() == {ID2}

    def test_diagonal_group_components(self):
        X = diagonal_w22()
        for d in (0, 1):
            assert X.component(d).enumerate_elements() == {ID2, S}

    def test_component_matches_enumeration_projection(self):
        rng = random.Random(41)
        for _ in range(30):
            q = rng.choice([2, 3])
            m = rng.choice([2, 3])
            X = random_wreath_subgroup(rng, q, m)
            elements = X.enumerate_elements(5000)
            for d in range(m):
                projected = {w.base[d] for w in elements if w.top[d] == d}
                assert X.component(d).enumerate_elements() == projected

    def test_component_block_equivariance(self):
        # moving a block of points with the stabilizer matches moving the
        # corresponding entry with the projected component permutation
        rng = random.Random(43)
        for _ in range(10):
            q = rng.choice([2, 3])
            m = 2
            X = random_wreath_subgroup(rng, q, m)
            points = list(X.ctx.all_points())
            elements = X.enumerate_elements(5000)
            for d in range(m):
                stabilizer = [w for w in elements if w.top[d] == d]
                for w in stabilizer:
                    for gamma in range(q):
                        block = [phi for phi in points if phi[d] == gamma]
                        image = {w.apply(phi) for phi in block}
                        target = w.base[d][gamma]
                        assert image == {phi for phi in points if phi[d] == target}


class TestComponentWitnessOrbit:
    def test_trivial_component(self):
        ctx = WreathContext(2, 2)
        X = WreathSubgroup(ctx, (WreathElement((ID2, ID2), S),))
        data = X.component_witness_orbit(0, 1)
        assert data.orbit == (1,)
        assert data.witness[1] == X.identity()

    def test_full_wreath_product_q3(self):
        ctx = WreathContext(3, 2)
        id3 = Permutation.identity(3)
        X = WreathSubgroup(
            ctx,
            (
                WreathElement((p(1, 0, 2), id3), ID2),
                WreathElement((p(1, 2, 0), id3), ID2),
                WreathElement((id3, id3), S),
            ),
        )
        data = X.component_witness_orbit(0, 0)
        assert set(data.orbit) == {0, 1, 2}
        for gamma, witness in data.witness.items():
            assert witness.base[0][0] == gamma

    def test_witness_soundness(self):
        rng = random.Random(47)
        for _ in range(20):
            q = rng.choice([2, 3])
            m = rng.choice([2, 3])
            X = random_wreath_subgroup(rng, q, m)
            d = rng.randrange(m)
            gamma0 = rng.randrange(q)
            data = X.component_witness_orbit(d, gamma0)
            stab = X.partition_stabilizer_gens(d)
            stab_closure = wreath_closure(list(stab) + [X.identity()])
            assert set(data.orbit) == set(X.component(d).orbit(gamma0))
            for gamma, witness in data.witness.items():
                assert witness in stab_closure
                assert witness.top[d] == d
                assert witness.base[d][gamma0] == gamma


class TestSplit:
    def test_base_subgroup_projection(self):
        ctx = WreathContext(2, 2)
        X = WreathSubgroup(ctx, (WreathElement((S, ID2), ID2),))
        result = X.split([0])
        assert result.ok
        assert result.first.generators == (WreathElement((S,), Permutation.identity(1)),)
        assert result.second.generators == (
            WreathElement((ID2,), Permutation.identity(1)),
        )

    def test_two_orbit_example(self):
        ctx = WreathContext(2, 3)
        X = WreathSubgroup(ctx, (we([[1, 0], [1, 0], [0, 1]], [1, 0, 2]),))
        assert len(X.enumerate_elements()) == 2
        result = X.split([0, 1])
        assert result.ok
        assert len(result.first.enumerate_elements()) == 2
        assert len(result.second.enumerate_elements()) == 1
        assert result.position1 == {2: 0}

    def test_invalid_subsets_rejected(self):
        X = WreathSubgroup(
            WreathContext(2, 3), (we([[1, 0], [1, 0], [0, 1]], [1, 0, 2]),)
        )
        with pytest.raises(ValueError):
            X.split([])
        with pytest.raises(ValueError):
            X.split([0, 1, 2])
        with pytest.raises(ValueError):
            X.split([0])  # cuts the orbit {0,1}
        with pytest.raises(ValueError):
            X.split([3])

    def test_components_preserved_on_random_splits(self):
        rng = random.Random(53)
        done = 0
        while done < 15:
            q = rng.choice([2, 3])
            m = rng.choice([2, 3])
            X = block_intransitive_subgroup(rng, q, m)
            orbits = X.delta_orbits
            if len(orbits) < 2:
                continue
            take = rng.randint(1, len(orbits) - 1)
            delta0 = sorted(d for orbit in orbits[:take] for d in orbit)
            result = X.split(delta0)
            assert result.theta_bijective
            assert result.chi_injective
            assert result.equivariant
            assert all(result.component_preserved.values())
            for d in delta0:
                assert same_group(
                    X.component(d), result.first.component(result.position0[d])
                )
            done += 1


class TestTransitivityReport:
    def test_full_wreath_product(self):
        report = full_w22().transitivity_report()
        assert report.transitive_on_points
        assert report.component_transitive == (True, True)
        assert report.delta_transitive
        assert report.base_component_transitive == (True, True)
        assert not report.violation

    def test_top_only_group_is_intransitive(self):
        ctx = WreathContext(2, 2)
        X = WreathSubgroup(ctx, (WreathElement((ID2, ID2), S),))
        report = X.transitivity_report()
        assert not report.transitive_on_points
        assert not report.violation

    def test_diagonal_group_is_intransitive(self):
        X = diagonal_w22()
        assert X.orbit_of_point((0, 0)) == [(0, 0), (1, 1)]
        report = X.transitivity_report()
        assert not report.transitive_on_points
        assert not report.violation

    def test_three_generator_scan_has_no_violations(self):
        rng = random.Random(59)
        transitive = 0
        for _ in range(120):
            q = rng.choice([2, 3])
            m = rng.choice([1, 2])
            X = random_wreath_subgroup(rng, q, m, n_gens=rng.randint(1, 3))
            report = X.transitivity_report()
            transitive += report.transitive_on_points
            assert not report.violation
        assert transitive > 0
