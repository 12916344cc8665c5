"""Longitude systems from concrete link presentations.

Two input pipelines produce a :class:`LongitudeSystem`:

* planar diagrams (PD codes) via the Wirtinger presentation and an
  iterative rewriting of arc meridians, and
* pure braid words via the Artin action on the free group.

plus structural operations: componentwise connected sum, the
inverse-mirror, and component reordering / reorientation.

PD format.  A crossing is recorded as four arc labels counterclockwise
starting at the incoming under-strand, together with an explicit sign:
``arcs = (a, b, c, d)`` has the under-strand entering at ``a`` and
leaving at ``c``; ``b`` and ``d`` are the two over-strand arcs (their
order is not significant here).  A right-handed crossing has sign +1.
The Wirtinger relation attached to a crossing of sign ``s`` is

    m(c) = u^-s  m(a)  u^s        (u = meridian of the over-strand)

and the longitude of a component is the ordered product of u^s over its
under-passages, times x_i^-writhe for the 0-framing.

JSON: ``{"m": .., "components": [[arc, ..], ..],
"crossings": [{"arcs": [a,b,c,d], "sign": +-1}, ..]}``.

Braid text: ``n; A12 A13^-1 ...`` with ``Aij`` (or ``Ai,j`` for
two-digit strand numbers) the standard pure braid generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, PreconditionError
from .milnor import LongitudeSystem
from .words import Word, generator, identity, substitute


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if len(self.arcs) != 4:
            raise ValueError("a crossing needs exactly 4 arc labels")
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +-1, got {self.sign}")

    @property
    def under_in(self) -> int:
        return self.arcs[0]

    @property
    def under_out(self) -> int:
        return self.arcs[2]

    @property
    def over_pair(self) -> frozenset[int]:
        return frozenset((self.arcs[1], self.arcs[3]))


@dataclass(frozen=True)
class PDCode:
    m: int
    components: tuple[tuple[int, ...], ...]
    crossings: tuple[Crossing, ...]

    def __post_init__(self):
        if self.m != len(self.components):
            raise ParseError(
                f"m={self.m} but {len(self.components)} components given"
            )
        seen: set[int] = set()
        for comp in self.components:
            if not comp:
                raise ParseError("empty component")
            for arc in comp:
                if arc in seen:
                    raise ParseError(f"arc {arc} listed twice in components")
                seen.add(arc)
        for k, x in enumerate(self.crossings):
            for arc in x.arcs:
                if arc not in seen:
                    raise ParseError(f"crossing {k} uses unknown arc {arc}")

    def component_of(self, arc: int) -> int:
        for i, comp in enumerate(self.components, start=1):
            if arc in comp:
                return i
        raise ParseError(f"arc {arc} belongs to no component")

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "components": [list(c) for c in self.components],
            "crossings": [
                {"arcs": list(x.arcs), "sign": x.sign} for x in self.crossings
            ],
        }


def load_pd(data: dict) -> PDCode:
    try:
        crossings = tuple(
            Crossing(tuple(entry["arcs"]), int(entry["sign"]))
            for entry in data["crossings"]
        )
        return PDCode(
            m=int(data["m"]),
            components=tuple(tuple(int(a) for a in comp) for comp in data["components"]),
            crossings=crossings,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed PD code: {exc}") from exc


# A passage is one step of a component past a crossing: ("under"|"over",
# crossing index).  _trace pairs every consecutive arc transition with
# the unique crossing realizing it, consuming each crossing once as an
# under-passage and once as an over-passage.

def _trace(pd: PDCode) -> list[list[tuple[str, int]]]:
    under_unused: dict[tuple[int, int], list[int]] = {}
    over_unused: dict[frozenset[int], list[int]] = {}
    for k, x in enumerate(pd.crossings):
        under_unused.setdefault((x.under_in, x.under_out), []).append(k)
        over_unused.setdefault(x.over_pair, []).append(k)

    walks: list[list[tuple[str, int]]] = []
    for comp in pd.components:
        walk: list[tuple[str, int]] = []
        if len(comp) == 1:
            arc = comp[0]
            for x in pd.crossings:
                if arc in x.arcs:
                    raise ParseError(
                        f"single-arc component uses arc {arc} at a crossing "
                        f"{x.arcs}"
                    )
            walks.append(walk)
            continue
        for t, arc in enumerate(comp):
            nxt = comp[(t + 1) % len(comp)]
            unders = under_unused.get((arc, nxt))
            overs = over_unused.get(frozenset((arc, nxt)))
            if unders:
                walk.append(("under", unders.pop(0)))
            elif overs:
                walk.append(("over", overs.pop(0)))
            else:
                raise ParseError(
                    f"no unused crossing joins arcs {arc} -> {nxt}"
                )
        walks.append(walk)

    leftover = [k for ks in under_unused.values() for k in ks]
    leftover += [k for ks in over_unused.values() for k in ks]
    if leftover:
        raise ParseError(
            f"crossing(s) {sorted(set(leftover))} not consumed by any "
            f"component walk"
        )
    return walks


@dataclass(frozen=True)
class CrossingRelation:
    """m(out) = m(over)^-sign m(in) m(over)^sign."""

    out_arc: int
    in_arc: int
    over_arc: int
    sign: int


@dataclass
class WirtingerPresentation:
    generators: tuple[int, ...]
    relations: tuple[CrossingRelation, ...]
    base_meridians: tuple[int, ...]
    meridian_class: dict[int, int]


def wirtinger(pd: PDCode) -> WirtingerPresentation:
    """Arc generators, one conjugation relation per crossing.

    The two over-strand arcs of a crossing carry the same meridian;
    ``meridian_class`` maps each arc to its class representative.
    """
    _trace(pd)  # validates the code
    parent: dict[int, int] = {a: a for comp in pd.components for a in comp}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in pd.crossings:
        b, d = sorted(x.over_pair) if len(x.over_pair) == 2 else (x.arcs[1], x.arcs[1])
        ra, rb = find(b), find(d)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    relations = tuple(
        CrossingRelation(x.under_out, x.under_in, min(x.over_pair), x.sign)
        for x in pd.crossings
    )
    arcs = tuple(a for comp in pd.components for a in comp)
    return WirtingerPresentation(
        generators=arcs,
        relations=relations,
        base_meridians=tuple(comp[0] for comp in pd.components),
        meridian_class={a: find(a) for a in arcs},
    )


def linking_matrix(pd: PDCode) -> list[list[int]]:
    """Pairwise linking numbers off-diagonal, self-writhe on the diagonal."""
    _trace(pd)  # validates the code
    mat = [[0] * pd.m for _ in range(pd.m)]
    pair_sum: dict[tuple[int, int], int] = {}
    for x in pd.crossings:
        cu = pd.component_of(x.under_in)
        co = pd.component_of(next(iter(x.over_pair)))
        if cu == co:
            mat[cu - 1][cu - 1] += x.sign
        else:
            key = (min(cu, co), max(cu, co))
            pair_sum[key] = pair_sum.get(key, 0) + x.sign
    for (i, j), total in pair_sum.items():
        if total % 2 != 0:
            raise ParseError(
                f"odd crossing-sign sum {total} between components {i},{j}"
            )
        mat[i - 1][j - 1] = mat[j - 1][i - 1] = total // 2
    return mat


def _writhes(pd: PDCode) -> list[int]:
    w = [0] * pd.m
    for x in pd.crossings:
        cu = pd.component_of(x.under_in)
        co = pd.component_of(next(iter(x.over_pair)))
        if cu == co:
            w[cu - 1] += x.sign
    return w


def longitudes_mod_q(pd: PDCode, q: int) -> LongitudeSystem:
    """Longitude words valid mod F_q by iterated meridian rewriting.

    Every arc expression starts as the base meridian of its component;
    each of the q rewriting rounds re-derives all arc expressions along
    the component from the base arc, conjugating by the previous
    round's expression of the over-strand at every under-passage.
    """
    if q < 2:
        raise PreconditionError("depth must be at least 2")
    walks = _trace(pd)

    exprs: dict[int, Word] = {}
    for i, comp in enumerate(pd.components, start=1):
        for arc in comp:
            exprs[arc] = generator(i)

    for _ in range(q):
        new: dict[int, Word] = {}
        for i, (comp, walk) in enumerate(zip(pd.components, walks), start=1):
            xi = generator(i)
            conj = identity()
            new[comp[0]] = xi
            for t, (kind, k) in enumerate(walk[:-1] if walk else []):
                if kind == "under":
                    x = pd.crossings[k]
                    u = exprs[x.arcs[1]]
                    conj = conj * (u if x.sign == 1 else u.inverse())
                new[comp[(t + 1) % len(comp)]] = conj.inverse() * xi * conj
        exprs = new

    longs: list[Word] = []
    writhes = _writhes(pd)
    for i, (comp, walk) in enumerate(zip(pd.components, walks), start=1):
        lw = identity()
        for kind, k in walk:
            if kind == "under":
                x = pd.crossings[k]
                u = exprs[x.arcs[1]]
                lw = lw * (u if x.sign == 1 else u.inverse())
        lw = lw * generator(i) ** (-writhes[i - 1])
        longs.append(lw)
    return LongitudeSystem(pd.m, q, tuple(longs))


def mirror_pd(pd: PDCode) -> PDCode:
    """The mirror diagram: same incidences, every crossing sign flipped.

    This is the reflection of the diagram in its projection plane; it
    negates linking numbers and writhes.  It is not the inverse-mirror
    of :func:`inverse_mirror`, which models the upside-down (string
    link inverse) mirror and negates every mu invariant.
    """
    return PDCode(
        pd.m,
        pd.components,
        tuple(Crossing(x.arcs, -x.sign) for x in pd.crossings),
    )


# ---------------------------------------------------------------------------
# Pure braids


@dataclass(frozen=True)
class PureBraidWord:
    strands: int
    letters: tuple[tuple[int, int, int], ...]  # (i, j, exponent sign)

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        for i, j, e in self.letters:
            if not (1 <= i < j <= self.strands):
                raise ValueError(f"bad pure braid generator A{i},{j}")
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +-1, got {e}")


_BRAID_TOKEN = re.compile(r"^A(?:(\d),(\d+)|(\d)(\d))(?:\^(-?\d+))?$")


def parse_braid(text: str) -> PureBraidWord:
    """Parse ``n; A12 A13^-1 ...``; an empty word is the trivial braid."""
    if ";" not in text:
        raise ParseError("braid text needs 'n; letters' with a semicolon")
    head, _, rest = text.partition(";")
    try:
        strands = int(head.strip())
    except ValueError as exc:
        raise ParseError(f"bad strand count {head.strip()!r}") from exc
    letters: list[tuple[int, int, int]] = []
    for pos, token in enumerate(rest.split()):
        m = _BRAID_TOKEN.match(token)
        if m is None:
            raise ParseError(f"bad braid token {token!r} (position {pos})")
        if m.group(1) is not None:
            i, j = int(m.group(1)), int(m.group(2))
        else:
            i, j = int(m.group(3)), int(m.group(4))
        exp = int(m.group(5)) if m.group(5) is not None else 1
        sign = 1 if exp > 0 else -1
        letters.extend([(i, j, sign)] * abs(exp))
    try:
        return PureBraidWord(strands, tuple(letters))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_braid(b: PureBraidWord) -> str:
    toks = []
    for i, j, e in b.letters:
        body = f"A{i}{j}" if i <= 9 and j <= 9 else f"A{i},{j}"
        toks.append(body if e == 1 else body + "^-1")
    return (f"{b.strands}; " + " ".join(toks)) if toks else f"{b.strands};"


def _sigma_images(k: int, n: int, inverse: bool) -> dict[int, Word]:
    # Artin generator of the braid group: x_k -> x_k x_{k+1} x_k^-1,
    # x_{k+1} -> x_k; all other generators fixed.
    images = {i: generator(i) for i in range(1, n + 1)}
    if not inverse:
        images[k] = generator(k) * generator(k + 1) * generator(k, -1)
        images[k + 1] = generator(k)
    else:
        images[k] = generator(k + 1)
        images[k + 1] = generator(k + 1, -1) * generator(k) * generator(k + 1)
    return images


def _compose(outer: dict[int, Word], inner: dict[int, Word]) -> dict[int, Word]:
    return {i: substitute(w, outer) for i, w in inner.items()}


def _artin_automorphism(b: PureBraidWord) -> dict[int, Word]:
    n = b.strands
    images = {i: generator(i) for i in range(1, n + 1)}
    for i, j, e in b.letters:
        # A_ij = s_{j-1} .. s_{i+1} s_i^2 s_{i+1}^-1 .. s_{j-1}^-1
        sigmas: list[tuple[int, bool]] = []
        for k in range(j - 1, i, -1):
            sigmas.append((k, False))
        sigmas += [(i, False), (i, False)]
        for k in range(i + 1, j):
            sigmas.append((k, True))
        if e == -1:
            sigmas = [(k, not inv) for k, inv in reversed(sigmas)]
        step = {t: generator(t) for t in range(1, n + 1)}
        for k, inv in sigmas:
            step = _compose(_sigma_images(k, n, inv), step)
        images = _compose(step, images)
    return images


def _conjugator(image: Word, i: int) -> Word:
    letters = image.letters
    if len(letters) % 2 != 1:
        raise PreconditionError(
            f"braid is not pure: x{i} maps to {image}, not a conjugate of x{i}"
        )
    t = len(letters) // 2
    if letters[t] != (i, 1):
        raise PreconditionError(
            f"braid is not pure: x{i} maps to {image}, not a conjugate of x{i}"
        )
    w = Word(letters[:t])
    if w * generator(i) * w.inverse() != image:
        raise PreconditionError(
            f"braid is not pure: x{i} maps to {image}, not a conjugate of x{i}"
        )
    return w


def artin_longitudes(b: PureBraidWord, q: int) -> LongitudeSystem:
    """Longitudes of the closure of a pure braid via the Artin action.

    For a pure braid each x_i maps to w_i x_i w_i^-1; the i-th 0-framed
    longitude is w_i x_i^-e with e the x_i exponent sum of w_i.
    """
    if q < 2:
        raise PreconditionError("depth must be at least 2")
    images = _artin_automorphism(b)
    longs = []
    for i in range(1, b.strands + 1):
        w = _conjugator(images[i], i)
        longs.append(w * generator(i) ** (-w.exponent_sum(i)))
    return LongitudeSystem(b.strands, q, tuple(longs))


def _sigma_letters(b: PureBraidWord) -> list[tuple[int, int]]:
    # A_ij = s_{j-1} .. s_{i+1} s_i^2 s_{i+1}^-1 .. s_{j-1}^-1
    out: list[tuple[int, int]] = []
    for i, j, e in b.letters:
        seq = [(k, 1) for k in range(j - 1, i, -1)]
        seq += [(i, 1), (i, 1)]
        seq += [(k, -1) for k in range(i + 1, j)]
        if e == -1:
            seq = [(k, -eps) for k, eps in reversed(seq)]
        out.extend(seq)
    return out


def braid_closure_pd(b: PureBraidWord) -> PDCode:
    """The planar diagram traced by closing a pure braid.

    Arcs are laid out crossing by crossing up the braid and the top of
    each strand is glued to its bottom.  At a positive crossing the
    left strand passes over; the opposite convention is the same link
    (rotate the page about the braid axis), so nothing downstream
    depends on it.  Useful as an independent route into
    longitudes_mod_q for links defined by braids.
    """
    n = b.strands
    current = list(range(1, n + 1))    # arc id at each position
    strand_at = list(range(1, n + 1))  # strand at each position
    arcs_of = {s: [s] for s in range(1, n + 1)}
    next_arc = n + 1
    crossings = []
    for k, eps in _sigma_letters(b):
        a_left, a_right = current[k - 1], current[k]
        s_left, s_right = strand_at[k - 1], strand_at[k]
        new_left, new_right = next_arc, next_arc + 1
        next_arc += 2
        if eps == 1:
            under_in, over_in = a_right, a_left
            under_out, over_out = new_left, new_right
        else:
            under_in, over_in = a_left, a_right
            under_out, over_out = new_right, new_left
        crossings.append(Crossing((under_in, over_in, under_out, over_out), eps))
        current[k - 1], current[k] = new_left, new_right
        strand_at[k - 1], strand_at[k] = s_right, s_left
        arcs_of[s_left].append(new_right)
        arcs_of[s_right].append(new_left)
    if strand_at != list(range(1, n + 1)):
        raise PreconditionError("braid is not pure: strands permuted")
    merge = {current[p - 1]: p for p in range(1, n + 1)}
    comps = []
    for s in range(1, n + 1):
        arcs = [merge.get(a, a) for a in arcs_of[s]]
        if len(arcs) > 1 and arcs[-1] == arcs[0]:
            arcs = arcs[:-1]
        comps.append(tuple(arcs))
    crossings = tuple(
        Crossing(tuple(merge.get(a, a) for a in x.arcs), x.sign)
        for x in crossings
    )
    return PDCode(n, tuple(comps), crossings)


# ---------------------------------------------------------------------------
# Structural operations on longitude systems


def connected_sum(a: LongitudeSystem, b: LongitudeSystem) -> LongitudeSystem:
    """Componentwise product of longitudes, meridians identified."""
    if a.m != b.m:
        raise PreconditionError(f"component counts differ: {a.m} != {b.m}")
    if a.depth != b.depth:
        raise PreconditionError(f"depths differ: {a.depth} != {b.depth}")
    return LongitudeSystem(
        a.m, a.depth, tuple(u * v for u, v in zip(a.longitudes, b.longitudes))
    )


def inverse_mirror(a: LongitudeSystem) -> LongitudeSystem:
    """The upside-down mirror closure: every longitude word inverted.

    Cutting a link open to a string link, reflecting through a
    horizontal mirror and closing up again inverts the string link, and
    on longitude data this is word inversion.  The series inverse
    negates every mu(I) modulo Delta(I), exactly so when Delta(I) = 0,
    so connected_sum(a, inverse_mirror(a)) has vanishing residues.
    """
    return LongitudeSystem(
        a.m, a.depth, tuple(w.inverse() for w in a.longitudes)
    )


def reorder(a: LongitudeSystem, perm) -> LongitudeSystem:
    """Relabel components: new component k is old component perm[k-1]."""
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(1, a.m + 1)):
        raise PreconditionError(f"{perm} is not a permutation of 1..{a.m}")
    images = {perm[t]: generator(t + 1) for t in range(a.m)}
    longs = tuple(substitute(a.longitudes[p - 1], images) for p in perm)
    return LongitudeSystem(a.m, a.depth, longs)


def reorient(a: LongitudeSystem, comps) -> LongitudeSystem:
    """Reverse the orientation of the given components.

    Meridians of reversed components invert in every word; the
    longitude of a reversed component is additionally read backwards
    (word reversal with inverted letters).  0-framing is preserved.
    """
    flip = set(int(c) for c in comps)
    for c in flip:
        if not 1 <= c <= a.m:
            raise PreconditionError(f"component {c} out of range 1..{a.m}")
    images = {
        i: generator(i, -1 if i in flip else 1) for i in range(1, a.m + 1)
    }
    longs = []
    for i, w in enumerate(a.longitudes, start=1):
        if i in flip:
            w = w.inverse()
        longs.append(substitute(w, images))
    return LongitudeSystem(a.m, a.depth, tuple(longs))
