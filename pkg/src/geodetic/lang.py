"""Geodesic languages of Cayley balls.

A word over the generator labels is geodesic when its length equals the
norm of the element it evaluates to.  This module extracts the minimal
forbidden factors of that language up to a length bound, compiles them into
a factor-excluding automaton, tracks how the geodesic sets of powers g^n
stabilize, and scans ball centralisers.

Everything here only trusts the ball as far as it is exact: any word of
length <= R evaluates inside the radius-R ball, and all geodesics from the
identity to a ball member stay inside, so no query silently leaves the
trusted region.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .graphs import enumerate_geodesics
from .groups import CayleyBall, Element
from .words import EMPTY_WORD, Word, format_word, parse_word


class BallRangeError(ValueError):
    """The query needs more of the group than the ball holds."""


class FiniteOrderError(ValueError):
    """Power-language analysis needs an infinite-order base element."""


@dataclass(frozen=True)
class ForbiddenSet:
    """Minimal non-geodesic factors up to length e.

    Every member is non-geodesic while all its proper factors are geodesic;
    any non-geodesic word of length <= the check bound contains one of them.
    """

    e: int
    words: frozenset[Word]

    def sorted_words(self) -> list[Word]:
        return sorted(self.words, key=lambda w: (len(w), w))


def is_geodesic_word(ball: CayleyBall, w: Word) -> bool:
    """Whether |w| equals the norm of the element w spells out.

    Only decided for |w| <= ball.radius; longer words are a hard error
    rather than a guess.
    """
    if len(w) > ball.radius:
        raise BallRangeError(
            f"word of length {len(w)} exceeds the ball radius {ball.radius}"
        )
    lookup = dict(ball.genset.items())
    g = ball.spec.identity()
    for letter in w:
        s = lookup.get(letter)
        if s is None:
            raise ValueError(f"letter {letter!r} is not a generator label")
        g = ball.spec.multiply(g, s)
    return ball.norms[ball.vertex_of(g)] == len(w)


def minimal_forbidden_factors(ball: CayleyBall, e: int) -> ForbiddenSet:
    """All minimal non-geodesic words of length <= e.

    A word is minimal when it is non-geodesic and both maximal proper
    factors are geodesic (factors of geodesics are geodesic, so this covers
    every proper factor).  Grown layer by layer over geodesic words only.
    """
    if e < 1:
        raise ValueError("e must be at least 1")
    if e > ball.radius:
        raise BallRangeError(f"e={e} exceeds the ball radius {ball.radius}")
    letters = sorted(ball.genset.labels)
    lookup = dict(ball.genset.items())
    spec = ball.spec
    forbidden: list[Word] = []
    layer: list[tuple[Word, Element]] = [(EMPTY_WORD, spec.identity())]
    for length in range(1, e + 1):
        prev_words = {w for w, _ in layer}
        new_layer: list[tuple[Word, Element]] = []
        for w, g in layer:
            for letter in letters:
                x = w + (letter,)
                h = spec.multiply(g, lookup[letter])
                if ball.norms[ball.vertex_of(h)] == length:
                    new_layer.append((x, h))
                elif x[1:] in prev_words:
                    forbidden.append(x)
        layer = new_layer
    return ForbiddenSet(e, frozenset(forbidden))


class FactorAutomaton:
    """Complete DFA accepting exactly the words with no factor in F.

    States are the proper prefixes of F-members (the live states, Aho
    Corasick trie nodes with failure links folded in) plus one absorbing
    dead state; accepting = every live state.
    """

    def __init__(self, forbidden: Iterable[Word], alphabet: Sequence[str]):
        letters = sorted(set(alphabet))
        if not letters:
            raise ValueError("alphabet must be nonempty")
        fwords = sorted(set(tuple(w) for w in forbidden), key=lambda w: (len(w), w))
        for w in fwords:
            for letter in w:
                if letter not in letters:
                    raise ValueError(f"forbidden word uses unknown letter {letter!r}")
        self.letters = tuple(letters)
        children: list[dict[str, int]] = [{}]
        terminal = [False]
        for w in fwords:
            cur = 0
            for letter in w:
                nxt = children[cur].get(letter)
                if nxt is None:
                    children.append({})
                    terminal.append(False)
                    nxt = len(children) - 1
                    children[cur][letter] = nxt
                cur = nxt
            terminal[cur] = True
        fail = [0] * len(children)
        goto = [dict() for _ in children]
        order = deque()
        for letter in letters:
            child = children[0].get(letter)
            if child is None:
                goto[0][letter] = 0
            else:
                goto[0][letter] = child
                fail[child] = 0
                order.append(child)
        while order:
            u = order.popleft()
            if terminal[fail[u]]:
                terminal[u] = True
            for letter in letters:
                child = children[u].get(letter)
                if child is None:
                    goto[u][letter] = goto[fail[u]][letter]
                else:
                    fail[child] = goto[fail[u]][letter]
                    goto[u][letter] = child
                    order.append(child)
        live = [q for q in range(len(children)) if not terminal[q]]
        remap = {q: i for i, q in enumerate(live)}
        self.dead = len(live)
        self.state_count = len(live) + 1
        table: list[dict[str, int]] = []
        for q in live:
            row = {}
            for letter in letters:
                r = goto[q][letter]
                row[letter] = self.dead if terminal[r] else remap[r]
            table.append(row)
        table.append({letter: self.dead for letter in letters})
        self.transitions = table
        # When λ itself is forbidden the root is terminal and nothing is live.
        self.start = remap.get(0, self.dead)

    def step(self, state: int, letter: str) -> int:
        row = self.transitions[state]
        if letter not in row:
            raise ValueError(f"letter {letter!r} is outside the automaton alphabet")
        return row[letter]

    def accepts(self, w: Word) -> bool:
        state = self.start
        for letter in w:
            state = self.step(state, letter)
            if state == self.dead:
                return False
        return state != self.dead

    def table_lines(self) -> list[str]:
        lines = [f"automaton states={self.state_count} start={self.start} dead={self.dead}"]
        for q, row in enumerate(self.transitions):
            for letter in self.letters:
                lines.append(f"{q} {letter} -> {row[letter]}")
        return lines

    def to_dot(self, name: str = "automaton") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for q in range(self.state_count):
            shape = "box" if q == self.dead else "doublecircle"
            lines.append(f'  {q} [shape={shape}];')
        for q, row in enumerate(self.transitions):
            for letter in self.letters:
                lines.append(f'  {q} -> {row[letter]} [label="{letter}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_factor_automaton(
    forbidden: Union[ForbiddenSet, Iterable[Word]], alphabet: Sequence[str]
) -> FactorAutomaton:
    words = forbidden.words if isinstance(forbidden, ForbiddenSet) else forbidden
    return FactorAutomaton(words, alphabet)


def check_locally_excluding(
    ball: CayleyBall, forbidden: Union[ForbiddenSet, Iterable[Word]], test_len: int
) -> tuple[bool, Optional[Word]]:
    """Exhaustively verify F characterizes geodesics up to test_len.

    Passes when every word w with |w| <= test_len satisfies: w geodesic iff
    w has no factor in F.  The walk only extends geodesic prefixes, which
    still covers every geodesic word and every minimal non-geodesic word;
    any longer non-geodesic word contains a minimal one, so the check is
    complete.  Returns the first (shortlex) counterexample on failure.
    """
    if test_len < 0:
        raise ValueError("test_len must be nonnegative")
    if test_len > ball.radius:
        raise BallRangeError(f"test_len={test_len} exceeds the ball radius {ball.radius}")
    letters = sorted(ball.genset.labels)
    automaton = build_factor_automaton(forbidden, letters)
    spec = ball.spec
    lookup = dict(ball.genset.items())
    if automaton.start == automaton.dead:
        # λ is forbidden yet geodesic.
        return False, EMPTY_WORD
    queue: deque[tuple[Word, Element, int]] = deque()
    queue.append((EMPTY_WORD, spec.identity(), automaton.start))
    while queue:
        w, g, state = queue.popleft()
        if len(w) == test_len:
            continue
        length = len(w) + 1
        for letter in letters:
            x = w + (letter,)
            h = spec.multiply(g, lookup[letter])
            st = automaton.step(state, letter)
            geodesic = ball.norms[ball.vertex_of(h)] == length
            excluded = st == automaton.dead
            if geodesic and excluded:
                return False, x
            if not geodesic and not excluded:
                return False, x
            if geodesic:
                queue.append((x, h, st))
    return True, None


@dataclass(frozen=True)
class Stabilization:
    """Eventually the geodesic sets of g^n pump one periodic block:
    L_{n_star + c} = { alpha · (ts)^(q+c) · t · gamma } over the two sets."""

    n_star: int
    alpha_set: tuple[Word, ...]
    t: Word
    s: Word
    q: int
    gamma_set: tuple[Word, ...]

    def words_at(self, c: int) -> frozenset[Word]:
        if c < 0:
            raise ValueError("c must be nonnegative")
        mid = (self.t + self.s) * (self.q + c) + self.t
        return frozenset(a + mid + g for a in self.alpha_set for g in self.gamma_set)

    @property
    def multiplicity(self) -> int:
        return len(self.alpha_set) * len(self.gamma_set)


@dataclass(frozen=True)
class PowerLanguageReport:
    """Geodesic-word sets L_n for g^0 .. g^n_max and the detected pumping shape."""

    base_word: Word
    languages: tuple[tuple[Word, ...], ...]
    stabilization: Optional[Stabilization]

    @property
    def n_max(self) -> int:
        return len(self.languages) - 1

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(lang) for lang in self.languages)

    @property
    def multiplicity_growing(self) -> bool:
        """New geodesic-count records keep appearing late in the observed range."""
        c = self.counts
        if len(c) < 3:
            return False
        half = len(c) // 2
        return max(c[half:]) > max(c[:half])


def _fit_tail(tail: Sequence[tuple[Word, ...]]):
    """Fit alpha (ts)^(q+c) t gamma against consecutive languages.

    The alpha words all represent one group element, hence share a length;
    likewise gamma, so the split points are plain prefix/suffix cuts.  The
    canonical fit takes the shortest alpha/gamma spans (maximal pumped
    middle, maximal q), and only a fit that reconstructs every observed
    language exactly is reported.
    """
    total = len(tail[0])
    if total == 0 or any(len(lang) != total for lang in tail):
        return None
    lens = [len(lang[0]) for lang in tail]
    period = lens[1] - lens[0]
    if period < 1 or any(b - a != period for a, b in zip(lens, lens[1:])):
        return None
    l0 = lens[0]
    for a_len in range(l0 + 1):
        prefixes = {w[:a_len] for w in tail[0]}
        if any({w[:a_len] for w in lang} != prefixes for lang in tail[1:]):
            continue
        if total % len(prefixes):
            continue
        for g_len in range(l0 - a_len + 1):
            suffixes = {w[len(w) - g_len :] if g_len else EMPTY_WORD for w in tail[0]}
            if any(
                {w[len(w) - g_len :] if g_len else EMPTY_WORD for w in lang} != suffixes
                for lang in tail[1:]
            ):
                continue
            if len(prefixes) * len(suffixes) != total:
                continue
            mids = []
            ok = True
            for lang in tail:
                cut = {w[a_len : len(w) - g_len] for w in lang}
                if len(cut) != 1:
                    ok = False
                    break
                mids.append(next(iter(cut)))
            if not ok:
                continue
            block = mids[1][:period]
            if any(mids[c + 1] != block + mids[c] for c in range(len(mids) - 1)):
                continue
            q, r = divmod(len(mids[0]), period)
            t = mids[0][q * period :]
            if block[:r] != t:
                continue
            s = block[r:]
            if any(mids[c] != block * (q + c) + t for c in range(len(mids))):
                continue
            alpha = tuple(sorted(prefixes))
            gamma = tuple(sorted(suffixes))
            fits = True
            for c, lang in enumerate(tail):
                rebuilt = {a + block * (q + c) + t + g for a in alpha for g in gamma}
                if rebuilt != set(lang):
                    fits = False
                    break
            if fits:
                return alpha, t, s, q, gamma
    return None


def _detect_stabilization(languages: Sequence[tuple[Word, ...]]) -> Optional[Stabilization]:
    # Two consecutive confirmations: a fit must cover at least three
    # languages, so nothing is reported near the end of the observed range.
    for n_star in range(0, len(languages) - 2):
        fit = _fit_tail(languages[n_star:])
        if fit is not None:
            alpha, t, s, q, gamma = fit
            return Stabilization(n_star, alpha, t, s, q, gamma)
    return None


def power_language(ball: CayleyBall, g_word: Word, n_max: int) -> PowerLanguageReport:
    """Geodesic-word sets of g^n for n = 0..n_max, with stabilization fit.

    The base element must have infinite order (the specs carry exact order
    oracles) and every analyzed power must lie inside the ball.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    from .groups import word_to_element

    spec = ball.spec
    g = word_to_element(spec, ball.genset, g_word)
    order = spec.element_order(g)
    if order is not None:
        raise FiniteOrderError(f"base element has finite order {order}")
    languages = []
    e = spec.identity()
    for n in range(n_max + 1):
        try:
            v = ball.vertex_of(e)
        except ValueError:
            raise BallRangeError(
                f"power {n} of the base element leaves the radius-{ball.radius} ball"
            )
        paths, _ = enumerate_geodesics(ball.graph, 0, v)
        words = sorted(ball.word_of_path(p.vertices) for p in paths)
        languages.append(tuple(words))
        e = spec.multiply(e, g)
    stab = _detect_stabilization(languages)
    return PowerLanguageReport(tuple(g_word), tuple(languages), stab)


def centraliser_in_ball(ball: CayleyBall, g: Element) -> list[Element]:
    """Ball members commuting with g, in vertex order; g must be in the ball."""
    ball.vertex_of(g)
    spec = ball.spec
    return [h for h in ball.elements if spec.multiply(g, h) == spec.multiply(h, g)]


def forbidden_set_lines(forbidden: ForbiddenSet) -> list[str]:
    lines = [f"forbidden e={forbidden.e}"]
    lines.extend(format_word(w) for w in forbidden.sorted_words())
    return lines


def parse_forbidden_file(text: str, alphabet=None) -> ForbiddenSet:
    """Inverse of forbidden_set_lines; words use the apostrophe convention."""
    e = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("forbidden"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].startswith("e="):
                raise ValueError(f"line {lineno}: expected 'forbidden e=<e>'")
            e = int(parts[1][2:])
        else:
            words.append(parse_word(line, alphabet))
    if e is None:
        raise ValueError("missing 'forbidden e=<e>' header")
    return ForbiddenSet(e, frozenset(words))


def power_report_lines(report: PowerLanguageReport) -> list[str]:
    lines = [f"powers of {format_word(report.base_word)}: n_max={report.n_max}"]
    for n, lang in enumerate(report.languages):
        shown = ",".join(format_word(w) for w in lang)
        lines.append(f"L_{n}: size={len(lang)} {{{shown}}}")
    stab = report.stabilization
    if stab is None:
        note = " (multiplicity growing)" if report.multiplicity_growing else ""
        lines.append(f"stabilization: none{note}")
    else:
        alpha = ",".join(format_word(w) for w in stab.alpha_set)
        gamma = ",".join(format_word(w) for w in stab.gamma_set)
        lines.append(
            f"stabilization: n*={stab.n_star} q={stab.q} t={format_word(stab.t)} "
            f"s={format_word(stab.s)} alpha={{{alpha}}} gamma={{{gamma}}}"
        )
    return lines
