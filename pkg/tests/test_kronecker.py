import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from kronmf.characters import kron_oracle
from kronmf.expansion import CharacterExpansion
from kronmf.kronecker import (
    SemigroupWitness,
    g_at_max_width,
    g_dvir,
    g_max,
    kron_coefficient,
    kron_product,
    max_width,
    multiply_expansions,
    semigroup_bound,
    virtual_extension_chi,
    y_set,
)
from kronmf.littlewood_richardson import skew_expand
from kronmf.partitions import (
    EMPTY,
    Partition,
    SkewShape,
    enumerate_partitions,
    intersect,
    partition_sum,
)


def P(*parts):
    return Partition(parts)


class TestMaxWidth:
    def test_examples(self):
        assert max_width(P(3, 3), P(4, 2)) == 5
        assert max_width(P(3, 1, 1, 1), P(4, 2)) == 4
        for lam in enumerate_partitions(6):
            assert max_width(lam, lam) == 6

    def test_mismatch(self):
        with pytest.raises(ValueError):
            max_width(P(3), P(2, 2))

    def test_full_row_appears_iff_equal(self):
        for n in range(1, 7):
            parts = enumerate_partitions(n)
            whole = P(n)
            for lam in parts:
                for mu in parts:
                    expected = 1 if lam == mu else 0
                    assert kron_oracle(lam, mu, whole) == expected
                    assert g_dvir(lam, mu, whole) == expected


class TestYSet:
    def test_examples(self):
        assert [tuple(e) for e in y_set(P(3, 2, 1)).members] == [
            (5, 1), (4, 2), (4, 1, 1), (3, 2, 1),
        ]
        assert y_set(P(5)).members == (P(5),)
        assert set(y_set(P(1, 1)).members) == {P(1, 1), P(2)}

    def test_matches_interleaving_definition(self):
        for n in range(1, 9):
            parts = enumerate_partitions(n)
            for nu in parts:
                def interleaves(eta):
                    for i in range(1, max(len(eta), len(nu)) + 1):
                        if not (eta.row(i) >= nu.row(i + 1) >= eta.row(i + 1)):
                            return False
                    return True

                expected = sorted((e for e in parts if interleaves(e)), reverse=True)
                assert list(y_set(nu).members) == expected

    def test_members_include_base_and_larger_heads(self):
        for nu in enumerate_partitions(7):
            members = y_set(nu).members
            assert nu in members
            assert all(e == nu or e[0] > nu[0] for e in members)


class TestDvir:
    def test_examples(self):
        assert g_dvir(P(2, 1), P(2, 1), P(2, 1)) == 1
        assert g_dvir(P(3, 3, 3), P(3, 3, 3), P(5, 2, 2)) == 2

    def test_g_at_max_width(self):
        assert g_at_max_width(P(3, 3), P(4, 2), P(5, 1)) == 1
        assert kron_oracle(P(3, 3), P(4, 2), P(5, 1)) == 1
        for lam in enumerate_partitions(5):
            assert g_at_max_width(lam, lam, P(5)) == 1
        assert g_at_max_width(P(3, 3, 3), P(3, 3, 3), P(9)) == 1

    def test_g_at_max_width_rejects_wrong_width(self):
        with pytest.raises(ValueError):
            g_at_max_width(P(3, 3), P(4, 2), P(4, 2))

    def test_engine_equivalence_exhaustive(self):
        for n in range(1, 7):
            parts = enumerate_partitions(n)
            for i, lam in enumerate(parts):
                for mu in parts[i:]:
                    assert kron_product(lam, mu, "dvir") == kron_product(lam, mu, "oracle")

    def test_width_bound_attained_and_respected(self):
        for n in range(1, 7):
            parts = enumerate_partitions(n)
            for i, lam in enumerate(parts):
                for mu in parts[i:]:
                    w = max_width(lam, mu)
                    exp = kron_product(lam, mu, "dvir")
                    widths = [nu[0] for nu in exp.support()]
                    assert max(widths) == w

    def test_deterministic_across_threads(self):
        lam, mu = P(4, 3, 2), P(5, 2, 2)
        nus = enumerate_partitions(9)

        def work(nu):
            return g_dvir(lam, mu, nu)

        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(work, nus * 2))
        assert results[: len(nus)] == results[len(nus):]
        assert results[: len(nus)] == [kron_oracle(lam, mu, nu) for nu in nus]


class TestKronProduct:
    def test_trivial_factor(self):
        for n in range(1, 7):
            for lam in enumerate_partitions(n):
                for engine in ("oracle", "dvir"):
                    got = kron_product(lam, P(n), engine)
                    assert got == CharacterExpansion.irreducible(lam)

    def test_staircase_square_spot(self):
        got = kron_product(P(3, 2), P(3, 2))
        assert len(got) == 6 and all(len(p) <= 4 for p in got.support())

    def test_g_max_values(self):
        assert g_max(P(4, 2), P(4, 2)) == 2
        assert g_max(P(3, 2, 1), P(3, 2, 1)) == 5
        for mu in enumerate_partitions(6):
            assert g_max(P(6), mu) == 1

    def test_engine_flag_validation(self):
        with pytest.raises(ValueError):
            kron_product(P(2), P(2), "magic")

    def test_coefficient_dispatch(self):
        assert kron_coefficient(P(3, 3, 3), P(3, 3, 3), P(5, 2, 2), "dvir") == 2
        assert kron_coefficient(P(3, 3, 3), P(3, 3, 3), P(5, 2, 2), "oracle") == 2

    def test_auto_crossover_env_override(self, monkeypatch):
        from kronmf.kronecker import _resolve_engine

        assert _resolve_engine("auto", 9) == "oracle"
        assert _resolve_engine("auto", 11) == "dvir"
        monkeypatch.setenv("KRONMF_ENGINE_CROSSOVER", "5")
        assert _resolve_engine("auto", 9) == "dvir"
        assert _resolve_engine("auto", 5) == "oracle"


class TestMultiplyExpansions:
    def test_bilinear(self):
        a = CharacterExpansion(3, {P(2, 1): 2})
        b = CharacterExpansion.irreducible(P(2, 1))
        got = multiply_expansions(a, b)
        assert got == kron_product(P(2, 1), P(2, 1)).scale(2)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            multiply_expansions(
                CharacterExpansion.irreducible(P(2)),
                CharacterExpansion.irreducible(P(2, 1)),
            )


class TestSemigroup:
    def test_square_seed_bound(self):
        # (a^3) = (3^3) + ((a-3)^3): the seed forces multiplicity
        for a in (4, 5, 6):
            w = SemigroupWitness(
                "sum-split",
                (P(3, 3, 3), P(a - 3, a - 3, a - 3)),
                (P(3, 3, 3), P(a - 3, a - 3, a - 3)),
            )
            res = semigroup_bound(w, engine="oracle")
            assert res.bound == 2
            assert res.target == (P(a, a, a), P(a, a, a))

    def test_trivial_split_gives_full_g(self):
        w = SemigroupWitness("sum-split", (P(4, 2), EMPTY), (P(4, 2), EMPTY))
        res = semigroup_bound(w, engine="oracle")
        assert res.bound == g_max(P(4, 2), P(4, 2)) == 2

    def test_row_split_bound_vs_oracle(self):
        lam, mu = P(3, 3, 3, 2, 1), P(4, 4, 2, 1, 1)
        w = SemigroupWitness.row_split(lam, mu, {1, 2, 3}, {1, 2, 4})
        assert w.left_parts == (P(3, 3, 3), P(2, 1))
        assert w.right_parts == (P(4, 4, 1), P(2, 1))
        res = semigroup_bound(w, engine="oracle")
        assert res.target == (lam, mu)
        assert res.bound >= 2  # g((3,3,3),(4,4,1)) carries a multiplicity
        assert res.bound <= g_max(lam, mu, engine="oracle")

    def test_row_split_needs_matching_sizes(self):
        with pytest.raises(ValueError):
            SemigroupWitness.row_split(P(3, 2), P(4, 1), {1}, {2})

    def test_invalid_kind_rejected(self):
        with pytest.raises(ValueError):
            SemigroupWitness("diag-split", (P(2), P(1)), (P(2), P(1)))

    def test_soundness_random_witnesses(self):
        rng = random.Random(4321)
        checked = 0
        while checked < 200:
            n = rng.randint(2, 10)
            m = rng.randint(1, n - 1)
            small = enumerate_partitions(m)
            rest = enumerate_partitions(n - m)
            a1, b1 = rng.choice(small), rng.choice(small)
            a2, b2 = rng.choice(rest), rng.choice(rest)
            w = SemigroupWitness("sum-split", (a1, a2), (b1, b2))
            res = semigroup_bound(w, engine="oracle")
            lam, mu = res.target
            assert res.bound <= g_max(lam, mu, engine="oracle"), (w,)
            checked += 1

    def test_monotonicity_instances(self):
        rng = random.Random(99)
        tried = 0
        while tried < 60:
            n1 = rng.randint(2, 5)
            n2 = rng.randint(2, 4)
            p1 = enumerate_partitions(n1)
            p2 = enumerate_partitions(n2)
            lam, mu, nu = (rng.choice(p1) for _ in range(3))
            alp, bet, gam = (rng.choice(p2) for _ in range(3))
            g1 = kron_oracle(lam, mu, nu)
            g2 = kron_oracle(alp, bet, gam)
            if g1 == 0 or g2 == 0:
                continue
            big = kron_oracle(
                partition_sum(lam, alp), partition_sum(mu, bet), partition_sum(nu, gam)
            )
            assert big >= max(g1, g2)
            tried += 1


class TestVirtualExtension:
    def test_rejects_natural_and_linear(self):
        with pytest.raises(ValueError):
            virtual_extension_chi(P(5), P(3, 2))
        with pytest.raises(ValueError):
            virtual_extension_chi(P(4, 1), P(3, 2))
        with pytest.raises(ValueError):
            virtual_extension_chi(P(3, 2), P(2, 1, 1, 1))

    def test_rejects_multirow_difference(self):
        # lam/beta spans two rows here
        with pytest.raises(ValueError):
            virtual_extension_chi(P(3, 3), P(2, 2, 2))

    def test_contract_against_oracle(self):
        # wherever the preconditions hold, positive parts of chi pin the
        # coefficients at first part m-1, and (m, alpha) extends
        hits = 0
        for n in range(4, 9):
            parts = enumerate_partitions(n)
            for lam in parts:
                for mu in parts:
                    beta = intersect(lam, mu)
                    try:
                        chi = virtual_extension_chi(lam, mu, engine="oracle")
                    except ValueError:
                        continue
                    hits += 1
                    m = beta.n
                    alpha = skew_expand(SkewShape(mu, beta)).support()[0]
                    assert kron_oracle(lam, mu, Partition((m,) + tuple(alpha))) > 0
                    for kappa, mult in chi.items():
                        if mult <= 0:
                            continue
                        nu = Partition((m - 1,) + tuple(kappa))
                        assert nu.n == n
                        assert kron_oracle(lam, mu, nu) == mult, (lam, mu, nu)
        assert hits > 50
