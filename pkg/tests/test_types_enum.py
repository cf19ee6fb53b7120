from itertools import product

import pytest

from tropmaps import (SlopeSequence, canonical_type, enumerate_types,
                      registry_d3, registry_sequence, slope_bound_check)
from tropmaps.types_enum import JumpSequence

THEOREM_SEQUENCES = {
    4: {(3, 4, 5, 4, 3), (3, 4, 3, 4, 3), (3, 4, 3, 2, 3),
        (3, 2, 3, 2, 3), (3, 2, 1, 2, 3)},
    3: {(3, 5, 4, 3), (3, 1, 2, 3), (3, 4, 2, 3)},
    2: {(3, 5, 3), (3, 1, 3)},
}


def _compositions(total, parts):
    """All tuples of `parts` positive integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def oracle_types(degree):
    """Brute-force oracle: all jump sequences via compositions of the
    variation budget and sign patterns, canonicalized up to reversal.

    Deliberately a different code path from the production depth-first
    enumerator.
    """
    budget = 2 * degree - 2
    canon = set()
    if budget == 0:
        return {(degree,)}
    for k in range(1, budget + 1):
        for magnitudes in _compositions(budget, k):
            for signs in product((1, -1), repeat=k):
                jumps = tuple(s * m for s, m in zip(signs, magnitudes))
                if sum(jumps) != 0:
                    continue
                slopes = [degree]
                for j in jumps:
                    slopes.append(slopes[-1] + j)
                if any(s < 1 for s in slopes):
                    continue
                t = tuple(slopes)
                canon.add(min(t, tuple(reversed(t))))
    return canon


class TestEnumeration:
    def test_degree3_matches_theorem_list(self):
        types = enumerate_types(3)
        assert len(types) == 10
        by_k = {}
        for t in types:
            by_k.setdefault(t.k, set()).add(t.canonical.slopes)
        expected = {k: {min(s, tuple(reversed(s))) for s in seqs}
                    for k, seqs in THEOREM_SEQUENCES.items()}
        assert by_k == expected

    def test_degree1(self):
        types = enumerate_types(1)
        assert [t.canonical.slopes for t in types] == [(1,)]

    def test_degree2(self):
        types = enumerate_types(2)
        assert {t.canonical.slopes for t in types} == {(2, 3, 2), (2, 1, 2)}

    @pytest.mark.parametrize("degree", [1, 2, 3, 4, 5])
    def test_matches_oracle(self, degree):
        got = {t.canonical.slopes for t in enumerate_types(degree)}
        assert got == oracle_types(degree)

    def test_max_breaks_filter(self):
        types = enumerate_types(3, max_breaks=3)
        assert all(t.k <= 3 for t in types)
        assert len(types) == 5

    @pytest.mark.parametrize("degree", [2, 3, 4, 5])
    def test_invariants_of_enumerated_types(self, degree):
        for t in enumerate_types(degree):
            seq = t.canonical
            jumps = seq.jumps
            assert sum(abs(j) for j in jumps) == 2 * degree - 2
            assert all(s >= 1 for s in seq.slopes)
            if degree == 3:
                assert all(1 <= s <= 5 for s in seq.slopes)


class TestCanonicalType:
    def test_reversal_pair_shares_label(self):
        a = canonical_type(SlopeSequence(3, (3, 2, 3, 4, 3)))
        b = canonical_type(SlopeSequence(3, (3, 4, 3, 2, 3)))
        assert a.canonical.slopes == b.canonical.slopes == (3, 2, 3, 4, 3)
        assert a.label == b.label == "III"

    def test_palindrome_is_its_own_canonical(self):
        t = canonical_type(SlopeSequence(3, (3, 4, 5, 4, 3)))
        assert t.canonical.slopes == (3, 4, 5, 4, 3)
        assert t.palindromic and t.label == "I"

    def test_two_break_type(self):
        t = canonical_type(SlopeSequence(3, (3, 5, 3)))
        assert t.palindromic and t.label == "IX"

    def test_idempotent_and_reversal_invariant(self):
        for t in enumerate_types(4):
            seq = t.canonical
            again = canonical_type(seq)
            rev = canonical_type(seq.reversed_())
            assert again.canonical == rev.canonical == seq


class TestRegistry:
    def test_labels_and_order(self):
        reg = registry_d3()
        assert [t.label for t in reg] == ["I", "II", "III", "IV", "V",
                                          "VI", "VII", "VIII", "IX", "X"]
        assert reg[0].representative.slopes == (3, 4, 5, 4, 3)
        assert reg[7].representative.slopes == (3, 4, 2, 3)
        assert reg[9].representative.slopes == (3, 1, 3)

    def test_registry_matches_enumeration(self):
        enum_set = {t.canonical.slopes for t in enumerate_types(3)}
        reg_set = {t.canonical.slopes for t in registry_d3()}
        assert enum_set == reg_set

    def test_registry_sequence_lookup(self):
        assert registry_sequence("VI").slopes == (3, 5, 4, 3)
        with pytest.raises(KeyError):
            registry_sequence("XI")


class TestSlopeBound:
    @pytest.mark.parametrize("slopes", [(3, 4, 5, 4, 3), (3, 5, 3), (3, 1, 3)])
    def test_admissible_sequences_pass(self, slopes):
        assert slope_bound_check(SlopeSequence(3, slopes))

    def test_bound_violation_is_unconstructible(self):
        # a slope 6 sequence already violates the variation invariant
        with pytest.raises(ValueError):
            SlopeSequence(3, (3, 6, 3))


class TestJumpSequence:
    def test_roundtrip_to_slopes(self):
        js = JumpSequence(3, (1, 1, -1, -1))
        assert js.slope_sequence().slopes == (3, 4, 5, 4, 3)

    def test_rejects_bad_variation(self):
        with pytest.raises(ValueError):
            JumpSequence(3, (-3, 1, 1, 1))

    def test_rejects_zero_jump(self):
        with pytest.raises(ValueError):
            JumpSequence(3, (2, 0, -2))

    def test_rejects_nonzero_sum(self):
        with pytest.raises(ValueError):
            JumpSequence(3, (1, 1, 1, 1))
