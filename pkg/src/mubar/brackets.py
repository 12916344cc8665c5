"""Formal brackets, minimal linkings and the mu-bar summation formula.

A bracket is a binary tree whose leaves carry component symbols
(component 1 renders as ``x``, 2 as ``y``, then ``z w v u t s r q p o``);
the string ``a1...an`` abbreviates the right-nested bracket
``(a1,(a2,(...,(a_{n-1},an))))`` and mixed forms like ``(yxy,xy)`` are
allowed.  A formal linking lk(w) is a bracket of weight > 1 read as the
linking of its two top children, up to the equivalence generated by

* re-association across the top split:  lk((u,v),w) ~ lk(u,(v,w)),
* a sign flip for swapping any proper sub-bracket:  lk(w) ~ -lk(w').

A representative whose top split is as balanced as possible is a
minimal linking; canonicalize() picks one deterministically (and
detects classes whose value is forced to vanish, e.g. any bracket with
an identical-pair sub-bracket below the top).

massey_sum() expands a mu-bar invariant of weight q as the signed sum
of lk(w, x_{i_q}) over all binary parenthesizations w of the first
q-1 letters, collected as an integer combination of canonical minimal
linkings; evaluate() substitutes numeric values for them.

The enumeration grows like the Catalan numbers, so the weight is capped
at 12.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError, PreconditionError
from .milnor import Index, format_index

LETTERS = "xyzwvutsrqpo"

WEIGHT_CAP = 12

# A bracket is an int (leaf, 1-based component) or a pair of brackets.
Bracket = int | tuple


def weight(tree: Bracket) -> int:
    if isinstance(tree, int):
        return 1
    return weight(tree[0]) + weight(tree[1])


def letter_of(component: int) -> str:
    if not 1 <= component <= len(LETTERS):
        raise PreconditionError(
            f"component {component} has no letter (supported: 1..{len(LETTERS)})"
        )
    return LETTERS[component - 1]


def component_of_letter(ch: str) -> int:
    pos = LETTERS.find(ch)
    if pos < 0:
        raise ParseError(f"unknown component letter {ch!r}")
    return pos + 1


def render(tree: Bracket) -> str:
    """Inverse of parse_bracket: chains flatten to letter strings."""
    if isinstance(tree, int):
        return letter_of(tree)
    left, right = tree
    if isinstance(left, int):
        return letter_of(left) + render(right)
    return f"({render(left)},{render(right)})"


def render_linking(tree: Bracket) -> str:
    """Display form lk(u,v) of the top split."""
    if isinstance(tree, int):
        raise PreconditionError("a formal linking needs weight > 1")
    return f"lk({render(tree[0])},{render(tree[1])})"


def parse_bracket(text: str) -> Bracket:
    """Parse letter strings, parenthesized pairs and mixtures of both."""
    items, pos = _parse_seq(text, 0)
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r} at position {pos}")
    return _fold(items, text, 0)


def _fold(items: list, text: str, pos: int) -> Bracket:
    if not items:
        raise ParseError(f"empty bracket expression at position {pos}")
    out = items[-1]
    for item in reversed(items[:-1]):
        out = (item, out)
    return out


def _parse_seq(text: str, pos: int) -> tuple[list, int]:
    items: list = []
    while pos < len(text):
        ch = text[pos]
        if ch == "(":
            left, pos = _parse_seq(text, pos + 1)
            if pos >= len(text) or text[pos] != ",":
                raise ParseError(f"expected ',' at position {pos}")
            start = pos
            right, pos = _parse_seq(text, pos + 1)
            if pos >= len(text) or text[pos] != ")":
                raise ParseError(f"expected ')' at position {pos}")
            items.append((_fold(left, text, start), _fold(right, text, start)))
            pos += 1
        elif ch in (",", ")"):
            return items, pos
        elif ch.isspace():
            pos += 1
        else:
            comp = LETTERS.find(ch)
            if comp < 0:
                raise ParseError(
                    f"unknown component letter {ch!r} at position {pos}"
                )
            items.append(comp + 1)
            pos += 1
    return items, pos


def parse_linking(text: str) -> Bracket:
    """Parse ``lk(u,v)`` or a bare bracket of weight > 1."""
    body = text.strip()
    if body.startswith("lk(") and body.endswith(")"):
        body = body[2:]  # keep the parentheses: "(u,v)"
        depth = 0
        has_top_comma = False
        for ch in body[1:-1]:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                has_top_comma = True
        tree = parse_bracket(body if has_top_comma else body[1:-1])
    else:
        tree = parse_bracket(body)
    if isinstance(tree, int):
        raise ParseError(f"linking {text!r} has weight 1")
    return tree


# ---------------------------------------------------------------------------
# Equivalence orbit and canonical representatives


def _node_swaps(tree: Bracket):
    """Trees obtained by swapping exactly one node of tree (any depth)."""
    if isinstance(tree, int):
        return
    left, right = tree
    yield (right, left)
    for swapped in _node_swaps(left):
        yield (swapped, right)
    for swapped in _node_swaps(right):
        yield (left, swapped)


def _moves(tree: Bracket):
    """Neighbouring linkings with the sign multiplier of the relation."""
    left, right = tree
    if not isinstance(left, int):
        yield (left[0], (left[1], right)), 1
    if not isinstance(right, int):
        yield ((left, right[0]), right[1]), 1
    for swapped in _node_swaps(left):
        yield (swapped, right), -1
    for swapped in _node_swaps(right):
        yield (left, swapped), -1


def _imbalance(tree: Bracket) -> int:
    return abs(weight(tree[0]) - weight(tree[1]))


@lru_cache(maxsize=None)
def _side_stats(tree: Bracket) -> tuple[int, int, int]:
    # (parenthesis pairs in render, inverted leaf pairs, compound pairs
    # with the smaller side first) -- the costs of the tie-break order.
    if isinstance(tree, int):
        return (0, 0, 0)
    left, right = tree
    pl, il, ul = _side_stats(left)
    pr, ir, ur = _side_stats(right)
    parens = pl + pr + (0 if isinstance(left, int) else 1)
    inverted = il + ir
    if isinstance(left, int) and isinstance(right, int) and left > right:
        inverted += 1
    unbalanced = ul + ur
    if not isinstance(left, int) and not isinstance(right, int):
        if weight(left) < weight(right):
            unbalanced += 1
    return (parens, inverted, unbalanced)


@lru_cache(maxsize=None)
def _shape_key(tree: Bracket):
    # Leaf sequence (later components first), then shape.
    if isinstance(tree, int):
        return ((-tree,), (0,))
    lseq, ls = _shape_key(tree[0])
    rseq, rs = _shape_key(tree[1])
    return (lseq + rseq, (1,) + ls + rs)


def _selection_key(tree: Bracket):
    # Among equally balanced splits: smaller side on the left, then the
    # most string-like rendering (fewest parentheses), no (y,x)-style
    # inverted leaf pairs, inner pairs with their bigger side first, and
    # a fixed leaf-sequence/shape order as the final tie-break.  This
    # normal form writes e.g. lk(yyxy,(yxy,xy)) the way the literature
    # does.
    left, right = tree
    pl, il, ul = _side_stats(left)
    pr, ir, ur = _side_stats(right)
    return (
        _imbalance(tree),
        weight(left),
        pl + pr,
        il + ir,
        ul + ur,
        _shape_key(left),
        _shape_key(right),
    )


_orbit_cache: dict[Bracket, tuple[Bracket, int]] = {}


def canonicalize(tree: Bracket, sign: int = 1) -> tuple[Bracket, int]:
    """Canonical minimal linking of lk(tree) and the accumulated sign.

    The representative minimizes the top imbalance ||u|-|v||, with ties
    broken by the (leaf-sequence, shape) order on bracket trees; the
    returned sign s satisfies lk(tree) = s * lk(representative).  A
    sign of 0 marks a degenerate class (equivalent to its own negative,
    hence forced to vanish); this happens exactly when an identical
    pair (u,u) occurs as a proper sub-bracket somewhere in the orbit.
    """
    if isinstance(tree, int):
        raise PreconditionError("a formal linking needs weight > 1")
    if tree in _orbit_cache:
        rep, s = _orbit_cache[tree]
        return rep, s * sign

    rel = {tree: 1}
    frontier = [tree]
    degenerate = False
    while frontier:
        nxt = []
        for t in frontier:
            ft = rel[t]
            for t2, mult in _moves(t):
                f2 = ft * mult
                seen = rel.get(t2)
                if seen is None:
                    rel[t2] = f2
                    nxt.append(t2)
                elif seen != f2:
                    degenerate = True
        frontier = nxt

    rep = min(rel, key=_selection_key)
    for t, ft in rel.items():
        _orbit_cache[t] = (rep, 0) if degenerate else (rep, ft * rel[rep])
    rep2, s = _orbit_cache[tree]
    return rep2, s * sign


def parenthesizations(letters: Index, last: int) -> list[Bracket]:
    """All Catalan(n-1) linkings lk(w, x_last) over bracketings w."""
    seq = tuple(letters)
    if not seq:
        raise PreconditionError("need at least one letter to bracket")

    @lru_cache(maxsize=None)
    def trees(i: int, j: int) -> tuple[Bracket, ...]:
        if j == i + 1:
            return (seq[i],)
        out = []
        for k in range(i + 1, j):
            for a in trees(i, k):
                for b in trees(k, j):
                    out.append((a, b))
        return tuple(out)

    return [(w, last) for w in trees(0, len(seq))]


@dataclass(frozen=True)
class LinkingExpr:
    """Integer combination of canonical minimal linkings."""

    terms: tuple[tuple[Bracket, int], ...]  # sorted, nonzero coefficients

    @staticmethod
    def from_dict(acc: dict[Bracket, int]) -> "LinkingExpr":
        items = [(t, c) for t, c in acc.items() if c]
        items.sort(key=lambda tc: (weight(tc[0]), render_linking(tc[0])))
        return LinkingExpr(tuple(items))

    def coefficient(self, tree: Bracket) -> int:
        rep, s = canonicalize(tree)
        for t, c in self.terms:
            if t == rep:
                return c * s
        return 0

    def to_json(self) -> list[dict]:
        return [
            {"linking": render_linking(t), "coeff": c} for t, c in self.terms
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t, c in self.terms:
            parts.append(f"{'+' if c >= 0 else '-'} {abs(c)}*{render_linking(t)}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out


def massey_sum(index) -> LinkingExpr:
    """Expand mu-bar(I) as (-1)^q times the sum of lk(w, x_{i_q}).

    The sum runs over all binary parenthesizations w of x_{i_1} ...
    x_{i_{q-1}}; terms whose class is degenerate drop out.  Requires
    i_1 != i_q and weight at most 12.
    """
    entries = tuple(int(i) for i in index)
    if len(entries) < 2:
        raise PreconditionError("massey_sum needs weight >= 2")
    if entries[0] == entries[-1]:
        raise PreconditionError(
            f"first and last entries of {format_index(entries)} must differ"
        )
    if len(entries) > WEIGHT_CAP:
        raise PreconditionError(
            f"weight {len(entries)} exceeds the cap {WEIGHT_CAP} "
            f"(Catalan growth)"
        )
    if any(not 1 <= i <= len(LETTERS) for i in entries):
        raise PreconditionError(
            f"index entries must lie in 1..{len(LETTERS)} to render as letters"
        )
    sign = -1 if len(entries) % 2 else 1
    acc: dict[Bracket, int] = {}
    for linking in parenthesizations(entries[:-1], entries[-1]):
        rep, s = canonicalize(linking)
        if s == 0:
            continue
        acc[rep] = acc.get(rep, 0) + sign * s
    return LinkingExpr.from_dict(acc)


def evaluate(expr: LinkingExpr, values: dict) -> int:
    """Linear evaluation; linkings absent from values count as 0."""
    total, _ = evaluate_detailed(expr, values)
    return total


def evaluate_detailed(expr: LinkingExpr, values: dict) -> tuple[int, list[str]]:
    """Evaluation plus the display forms of terms that defaulted to 0.

    Keys of values may be ``lk(u,v)`` strings in any equivalent form or
    bracket trees; each is canonicalized (with its sign) before lookup.
    """
    if not isinstance(values, dict):
        raise ParseError("linking values must be a mapping lk(u,v) -> integer")
    canon_values: dict[Bracket, int] = {}
    for key, val in values.items():
        tree = parse_linking(key) if isinstance(key, str) else key
        rep, s = canonicalize(tree)
        if s == 0:
            continue
        try:
            effective = s * int(val)
        except (TypeError, ValueError) as exc:
            raise ParseError(
                f"linking value for {render_linking(tree)} is not an "
                f"integer: {val!r}"
            ) from exc
        if rep in canon_values and canon_values[rep] != effective:
            raise ParseError(
                f"conflicting values for equivalent linkings at "
                f"{render_linking(rep)}"
            )
        canon_values[rep] = effective
    total = 0
    missing: list[str] = []
    for t, c in expr.terms:
        if t in canon_values:
            total += c * canon_values[t]
        else:
            missing.append(render_linking(t))
    return total, missing


__all__ = [
    "Bracket",
    "LETTERS",
    "LinkingExpr",
    "canonicalize",
    "evaluate",
    "evaluate_detailed",
    "massey_sum",
    "parenthesizations",
    "parse_bracket",
    "parse_linking",
    "render",
    "render_linking",
    "weight",
]
