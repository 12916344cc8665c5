import random
from itertools import product

import pytest

from mubar.corpus import borromean_pd, borromean_system, random_realized_system
from mubar.errors import ParseError, PreconditionError
from mubar.links import artin_longitudes, longitudes_mod_q
from mubar.corpus import borromean_braid, hopf_braid, hopf_pd
from mubar.magnus import lcs_depth
from mubar.milnor import (
    LongitudeSystem,
    all_vanish_up_to,
    delta,
    format_index,
    mu,
    mu_bar,
    parse_index,
    proper_cyclic_subindices,
)
from mubar.words import Word, commutator, generator, left_normed, parse_word


def hopf_type(depth=4):
    return LongitudeSystem(2, depth, (parse_word("x2"), parse_word("x1")))


def lk3_system(depth=5):
    # lk = 3 with mu(1122) = 5: x1^3 times [x1,[x1,x2]]^5.
    bump = commutator(generator(1), commutator(generator(1), generator(2)))
    w2 = generator(1) ** 3 * bump**5
    return LongitudeSystem(2, depth, (generator(2) ** 3, w2))


class TestLongitudeSystem:
    def test_zero_framing_enforced(self):
        with pytest.raises(ValueError, match="0-framed"):
            LongitudeSystem(2, 4, (parse_word("x1"), parse_word("e")))

    def test_symmetry_enforced(self):
        with pytest.raises(ValueError, match="asymmetric"):
            LongitudeSystem(2, 4, (parse_word("x2"), parse_word("e")))

    def test_generator_range(self):
        with pytest.raises(ValueError, match="x3"):
            LongitudeSystem(2, 4, (parse_word("x3 x2 x3^-1"), parse_word("x1")))
        # reduction happens first, so a cancelling x3 pair is fine
        LongitudeSystem(2, 4, (Word(((3, 1), (3, -1), (2, 1))), parse_word("x1")))

    def test_truncate(self):
        system = lk3_system(depth=5)
        shallow = system.truncate(4)
        assert shallow.depth == 4
        assert mu(shallow, (1, 2)) == mu(system, (1, 2))
        with pytest.raises(PreconditionError):
            shallow.truncate(6)


class TestMu:
    def test_hopf_type(self):
        assert mu(hopf_type(), (1, 2)) == 1
        assert mu(hopf_type(), (2, 1)) == 1

    def test_borromean_abstract(self):
        system = borromean_system(depth=4)
        assert mu(system, (1, 2, 3)) == 1
        assert mu(system, (2, 1, 3)) == -1

    def test_pure_indices_vanish(self):
        rng = random.Random(31)
        for _ in range(20):
            system = random_realized_system(rng, depth=5)
            for i in (1, 2):
                for weight in range(2, 5):
                    assert mu(system, (i,) * weight) == 0

    def test_weight_exceeds_depth(self):
        with pytest.raises(PreconditionError, match="weight"):
            mu(hopf_type(depth=4), (1, 2, 1, 2))

    def test_weight_one_rejected(self):
        with pytest.raises(PreconditionError):
            mu(hopf_type(), (1,))

    def test_component_out_of_range(self):
        with pytest.raises(PreconditionError, match="out of range"):
            mu(hopf_type(), (1, 3))

    def test_coset_representative_independence(self):
        system = lk3_system(depth=4)
        deep = left_normed(1, 2, 2, 2)  # depth-4 commutator
        assert lcs_depth(deep, 5) >= 4
        modified = LongitudeSystem(
            2, 4, (system.longitudes[0], system.longitudes[1] * deep)
        )
        for entries in product((1, 2), repeat=3):
            assert mu(modified, entries) == mu(system.truncate(4), entries)


class TestDelta:
    def test_weight_two_empty_gcd(self):
        assert delta(hopf_type(), (1, 2)) == 0

    def test_lk3_sato_level(self):
        system = lk3_system()
        assert delta(system, (1, 1, 2, 2)) == 3
        assert mu(system, (1, 1, 2, 2)) == 5

    def test_borromean_weight3(self):
        assert delta(borromean_system(), (1, 2, 3)) == 0

    def test_divides_every_subindex_value(self):
        rng = random.Random(37)
        for _ in range(15):
            system = random_realized_system(rng, depth=5)
            for entries in [(1, 1, 2, 2), (1, 2, 1, 2), (2, 1, 1, 2)]:
                d = delta(system, entries)
                if d == 0:
                    continue
                for sub in proper_cyclic_subindices(entries):
                    assert mu(system, sub) % d == 0


class TestMuBar:
    def test_hopf(self):
        value = mu_bar(hopf_type(), (1, 2))
        assert (value.mu, value.delta, value.residue) == (1, 0, 1)

    def test_normalization(self):
        value = mu_bar(lk3_system(), (1, 1, 2, 2))
        assert (value.mu, value.delta, value.residue) == (5, 3, 2)

    def test_borromean(self):
        value = mu_bar(borromean_system(), (1, 2, 3))
        assert (value.mu, value.delta, value.residue) == (1, 0, 1)


class TestAllVanish:
    def test_trivial_system(self):
        trivial = LongitudeSystem(2, 5, (Word(), Word()))
        for q in range(2, 5):
            assert all_vanish_up_to(trivial, q)

    def test_hopf_fails_at_two(self):
        assert not all_vanish_up_to(hopf_type(), 2)

    def test_borromean(self):
        system = borromean_system(depth=4)
        assert all_vanish_up_to(system, 2)
        assert not all_vanish_up_to(system, 3)

    def test_depth_precondition(self):
        with pytest.raises(PreconditionError):
            all_vanish_up_to(hopf_type(depth=4), 4)

    def test_equivalent_to_relator_depth(self):
        rng = random.Random(41)
        systems = [
            borromean_system(depth=5),
            lk3_system(depth=5),
            random_realized_system(rng, depth=5),
            random_realized_system(rng, depth=5),
        ]
        for system in systems:
            for q in range(2, system.depth):
                vanish = all_vanish_up_to(system, q)
                relators = all(
                    lcs_depth(w, q + 1) >= q for w in system.longitudes
                )
                assert vanish == relators


class TestCyclicSymmetry:
    def test_realized_corpus(self):
        # Residues are constant along cyclic rotations for systems that
        # come from links; checked for weights <= 5 at depth 6.
        rng = random.Random(43)
        systems = [
            longitudes_mod_q(hopf_pd(), 6),
            longitudes_mod_q(borromean_pd(), 6),
            artin_longitudes(hopf_braid(), 6),
            artin_longitudes(borromean_braid(), 6),
            random_realized_system(rng, depth=6),
            random_realized_system(rng, depth=6),
        ]
        for system in systems:
            for weight_ in range(2, 6):
                for entries in product(range(1, system.m + 1), repeat=weight_):
                    base = mu_bar(system, entries)
                    rotated = entries[1:] + entries[:1]
                    rot = mu_bar(system, rotated)
                    assert rot.delta == base.delta, (entries, system.m)
                    assert rot.residue == base.residue, (entries, system.m)


class TestIndexText:
    def test_digits(self):
        assert parse_index("1122") == (1, 1, 2, 2)
        assert format_index((1, 1, 2, 2)) == "1122"

    def test_commas(self):
        assert parse_index("1,2,12") == (1, 2, 12)
        assert format_index((1, 2, 12)) == "1,2,12"

    def test_bad(self):
        with pytest.raises(ParseError):
            parse_index("")
        with pytest.raises(ParseError):
            parse_index("1a2")
        with pytest.raises(ParseError):
            parse_index("0,1")
