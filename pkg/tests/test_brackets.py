import math
import random

import pytest

from mubar.brackets import (
    LinkingExpr,
    _moves,
    canonicalize,
    evaluate,
    evaluate_detailed,
    massey_sum,
    parenthesizations,
    parse_bracket,
    parse_linking,
    render,
    render_linking,
    weight,
)
from mubar.errors import ParseError, PreconditionError


def orbit_with_signs(tree):
    rel = {tree: 1}
    frontier = [tree]
    degenerate = False
    while frontier:
        nxt = []
        for t in frontier:
            for t2, mult in _moves(t):
                f2 = rel[t] * mult
                if t2 not in rel:
                    rel[t2] = f2
                    nxt.append(t2)
                elif rel[t2] != f2:
                    degenerate = True
        frontier = nxt
    return rel, degenerate


def random_tree(rng, leaves, symbols=(1, 2)):
    if leaves == 1:
        return rng.choice(symbols)
    split = rng.randint(1, leaves - 1)
    return (random_tree(rng, split, symbols), random_tree(rng, leaves - split, symbols))


class TestParse:
    def test_string_shorthand(self):
        assert parse_bracket("yyxy") == (2, (2, (1, 2)))
        assert weight(parse_bracket("yyxy")) == 4

    def test_mixed_form(self):
        assert parse_bracket("(yxy,xy)") == ((2, (1, 2)), (1, 2))
        assert weight(parse_bracket("(yxy,xy)")) == 5

    def test_leaf(self):
        assert parse_bracket("x") == 1
        assert weight(parse_bracket("x")) == 1

    def test_nested_mixture(self):
        tree = parse_bracket("y(x,y)y")
        assert tree == (2, ((1, 2), 2))

    def test_roundtrip(self):
        rng = random.Random(5)
        for _ in range(100):
            tree = random_tree(rng, rng.randint(1, 7), (1, 2, 3))
            assert parse_bracket(render(tree)) == tree

    def test_errors_carry_position(self):
        with pytest.raises(ParseError, match="position"):
            parse_bracket("y?x")
        with pytest.raises(ParseError):
            parse_bracket("(xy")
        with pytest.raises(ParseError):
            parse_bracket("(x,y,z)")
        with pytest.raises(ParseError):
            parse_bracket("")

    def test_parse_linking(self):
        assert parse_linking("lk(yyxy,(yxy,xy))") == (
            parse_bracket("yyxy"),
            parse_bracket("(yxy,xy)"),
        )
        assert parse_linking("lk(xy)") == (1, 2)
        assert parse_linking("xy") == (1, 2)
        with pytest.raises(ParseError):
            parse_linking("lk(x)")


class TestCanonicalize:
    def test_reassociation_toward_balance(self):
        # ((u,v),w) with weights 1,1,2 balances to a 2|2 split
        tree = ((1, 2), (1, 2))
        skewed = (((1, 2), 1), 2)
        rep, sign = canonicalize(skewed)
        assert abs(weight(rep[0]) - weight(rep[1])) == 0

    def test_swap_flips_sign(self):
        base = (parse_bracket("yyxy"), parse_bracket("yxyxy"))
        swapped = ((2, (2, (2, 1))), parse_bracket("yxyxy"))  # inner (x,y) -> (y,x)
        rep1, sign1 = canonicalize(base)
        rep2, sign2 = canonicalize(swapped)
        assert rep1 == rep2
        assert sign1 == -sign2

    def test_already_minimal(self):
        tree = parse_linking("lk(yyxy,yxyxy)")
        rep, sign = canonicalize(tree)
        assert rep == tree
        assert sign == 1

    def test_paper_forms_are_fixed_points(self):
        for text in ("lk(yyxy,yxyxy)", "lk(yyxy,yyxxy)", "lk(yyxy,(yxy,xy))"):
            tree = parse_linking(text)
            rep, sign = canonicalize(tree)
            assert render_linking(rep) == text
            assert sign == 1

    def test_weight9_balanced_split(self):
        tree = parse_linking("lk(yyxy,yxyxy)")
        rep, _ = canonicalize(tree)
        assert abs(weight(rep[0]) - weight(rep[1])) == 1

    def test_degenerate_identical_pair(self):
        # ((x,x),y) contains the identical pair (x,x): value forced to 0
        rep, sign = canonicalize(((1, 1), 2))
        assert sign == 0

    def test_class_function_small_weights(self):
        rng = random.Random(7)
        seen = 0
        while seen < 40:
            tree = random_tree(rng, rng.randint(2, 6))
            rel, degenerate = orbit_with_signs(tree)
            rep, sign = canonicalize(tree)
            for member, f in rel.items():
                rep2, sign2 = canonicalize(member)
                assert rep2 == rep
                if degenerate:
                    assert sign2 == 0
                else:
                    # lk(tree) = sign lk(rep), lk(member) = f^-1 lk(tree)
                    assert sign2 == f * sign
            seen += 1

    def test_randomized_application_order_weight9(self):
        rng = random.Random(11)
        for _ in range(20):
            tree = random_tree(rng, 9)
            rep, sign = canonicalize(tree)
            current, factor = tree, 1
            for _ in range(rng.randint(1, 60)):
                moves = list(_moves(current))
                current, mult = rng.choice(moves)
                factor *= mult
            rep2, sign2 = canonicalize(current)
            assert rep2 == rep
            if sign != 0:
                # lk(tree) = factor * lk(current)
                assert sign == factor * sign2
            else:
                assert sign2 == 0


class TestParenthesizations:
    @pytest.mark.parametrize(
        "letters,count", [((1,), 1), ((1, 2), 1), ((1, 2, 1), 2), ((1,) * 8, 429)]
    )
    def test_catalan_counts(self, letters, count):
        terms = parenthesizations(letters, 2)
        assert len(terms) == count
        for tree in terms:
            assert tree[1] == 2
            assert weight(tree[0]) == len(letters)

    def test_catalan_8_is_429(self):
        assert math.comb(14, 7) // 8 == 429


class TestMasseySum:
    def test_weight_two(self):
        expr = massey_sum((1, 2))
        assert expr.to_json() == [{"coeff": 1, "linking": "lk(x,y)"}]

    def test_sato_levine_expansion(self):
        expr = massey_sum((1, 1, 2, 2))
        assert expr.to_json() == [{"coeff": -1, "linking": "lk(xy,xy)"}]

    def test_equal_ends_rejected(self):
        with pytest.raises(PreconditionError, match="differ"):
            massey_sum((1, 2, 1))

    def test_weight_cap(self):
        with pytest.raises(PreconditionError, match="cap"):
            massey_sum((1,) + (2,) * 12)

    def test_enumeration_order_irrelevant(self):
        rng = random.Random(13)
        index = (1, 2, 2, 1, 2, 2)
        expr = massey_sum(index)
        terms = parenthesizations(index[:-1], index[-1])
        rng.shuffle(terms)
        acc = {}
        sign = -1 if len(index) % 2 else 1
        for linking in terms:
            rep, s = canonicalize(linking)
            if s == 0:
                continue
            acc[rep] = acc.get(rep, 0) + sign * s
        assert LinkingExpr.from_dict(acc) == expr

    def test_coefficient_mass_bound(self):
        for index in [(1, 2, 2, 2), (1, 2, 1, 2, 2), (1, 2, 2, 1, 2, 1, 2, 2, 2)]:
            expr = massey_sum(index)
            catalan = math.comb(2 * (len(index) - 2), len(index) - 2) // (len(index) - 1)
            assert sum(abs(c) for _, c in expr.terms) <= catalan

    def test_sign_convention_even_odd(self):
        # the global factor is (-1)^q: compare against a direct sum
        for index in [(1, 1, 2, 2), (1, 2, 1, 2, 2)]:
            sign = -1 if len(index) % 2 else 1
            acc = {}
            for linking in parenthesizations(index[:-1], index[-1]):
                rep, s = canonicalize(linking)
                if s:
                    acc[rep] = acc.get(rep, 0) + sign * s
            assert LinkingExpr.from_dict(acc) == massey_sum(index)


class TestEvaluate:
    def test_paper_value(self):
        expr = massey_sum((1, 2, 2, 1, 2, 1, 2, 2, 2))
        assert evaluate(expr, {"lk(yyxy,(yxy,xy))": 1}) == -20

    def test_all_zero(self):
        expr = massey_sum((1, 2, 2, 1, 2, 1, 2, 2, 2))
        assert evaluate(expr, {}) == 0

    def test_linear(self):
        tree = parse_linking("lk(xy,xy)")
        expr = LinkingExpr.from_dict({tree: 3})
        assert evaluate(expr, {"lk(xy,xy)": -2}) == -6

    def test_missing_reported(self):
        expr = massey_sum((1, 2, 2, 1, 2, 1, 2, 2, 2))
        total, missing = evaluate_detailed(expr, {"lk(yyxy,(yxy,xy))": 1})
        assert total == -20
        assert missing == ["lk(yyxy,yxyxy)", "lk(yyxy,yyxxy)"]

    def test_equivalent_key_carries_sign(self):
        expr = massey_sum((1, 1, 2, 2))  # -1 * lk(xy,xy)
        assert evaluate(expr, {"lk(xy,xy)": 1}) == -1
        # lk(xy,yx) ~ -lk(xy,xy), so the same assignment through the
        # swapped key flips the contribution
        assert evaluate(expr, {"lk(xy,yx)": 1}) == 1

    def test_conflicting_keys(self):
        expr = massey_sum((1, 1, 2, 2))
        with pytest.raises(ParseError, match="conflicting"):
            evaluate(expr, {"lk(xy,xy)": 1, "lk(xy,yx)": 1})

    def test_malformed_values(self):
        expr = massey_sum((1, 1, 2, 2))
        with pytest.raises(ParseError, match="mapping"):
            evaluate(expr, [1, 2])
        with pytest.raises(ParseError, match="integer"):
            evaluate(expr, {"lk(xy,xy)": "lots"})

    def test_coefficient_lookup(self):
        expr = massey_sum((1, 1, 2, 2))
        assert expr.coefficient(parse_linking("lk(xy,xy)")) == -1
        assert expr.coefficient(parse_linking("lk(xy,yx)")) == 1
        assert expr.coefficient(parse_linking("lk(x,y)")) == 0
