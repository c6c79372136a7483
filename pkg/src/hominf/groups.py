"""Group presentations, word canonicalization, and Cayley-graph balls.

Words are tuples of signed 1-based generator indices (+i for the i-th
generator, -i for its inverse).  Three canonicalization strategies are
supported:

* free reduction (free groups; canonical forms are unique),
* abelian normal form (exponent vectors; canonical forms are unique),
* Dehn rewriting (replace any subword longer than half of a symmetrized
  relator by the inverse of its complement, until no replacement
  applies).

For the Dehn strategy, equal group elements are only guaranteed to share
a canonical word when the presentation is an honest Dehn presentation
and the words compared are geodesic; the ball enumeration below is the
BFS of the rewriting-canonicalized Cayley graph and its distances are
exact under that assumption.  Free and abelian distances are exact
unconditionally.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Strategy",
    "GroupPresentation",
    "GroupElement",
    "CayleyBall",
    "OutOfWindow",
    "OUT_OF_WINDOW",
    "PresentationSyntaxError",
    "UnknownGeneratorError",
    "ResourceCapError",
    "ElementNotInBallError",
    "parse_presentation",
    "parse_word",
    "word_to_text",
    "canonicalize",
    "mul",
    "inverse",
    "enumerate_ball",
    "pair_distance",
    "sphere_sizes",
    "DEFAULT_VERTEX_CAP",
]

DEFAULT_VERTEX_CAP = 200_000


class Strategy(Enum):
    FREE = "free"
    ABELIAN = "abelian"
    DEHN = "dehn"


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class UnknownGeneratorError(ValueError):
    pass


class ResourceCapError(RuntimeError):
    pass


class ElementNotInBallError(KeyError):
    pass


class OutOfWindow:
    """Sentinel: the distance is not certifiable within the window."""

    def __repr__(self):
        return "OutOfWindow"

    def __bool__(self):
        return False


OUT_OF_WINDOW = OutOfWindow()

Word = tuple[int, ...]


def _free_reduce(word: Word) -> Word:
    out: list[int] = []
    for s in word:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def _invert(word: Word) -> Word:
    return tuple(-s for s in reversed(word))


def _cyclic_reduce(word: Word) -> Word:
    w = _free_reduce(word)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    strategy: Strategy

    def __post_init__(self):
        if self.strategy is Strategy.FREE and self.relators:
            raise ValueError("free-reduction strategy requires an empty relator list")
        if self.strategy is Strategy.DEHN and not self.relators:
            raise ValueError("Dehn rewriting requires a nonempty relator list")
        k = len(self.generators)
        for r in self.relators:
            if any(s == 0 or abs(s) > k for s in r):
                raise ValueError(f"relator {r} uses generators outside the alphabet")
        object.__setattr__(self, "_dehn_rules", None)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def dehn_rules(self) -> dict[int, dict[Word, Word]]:
        """Length-reducing rules lhs -> rhs, grouped by lhs length.

        Built from all cyclic rotations of each relator and its inverse:
        every subword strictly longer than half the relator rewrites to
        the inverse of its complement.
        """
        cached = object.__getattribute__(self, "_dehn_rules")
        if cached is not None:
            return cached
        rules: dict[Word, Word] = {}
        seen: set[Word] = set()
        for rel in self.relators:
            base = _cyclic_reduce(rel)
            if not base:
                continue
            for w0 in (base, _invert(base)):
                for i in range(len(w0)):
                    rot = w0[i:] + w0[:i]
                    if rot in seen:
                        continue
                    seen.add(rot)
                    L = len(rot)
                    for k in range(L // 2 + 1, L + 1):
                        lhs = rot[:k]
                        rhs = _invert(rot[k:])
                        old = rules.get(lhs)
                        if old is None or rhs < old:
                            rules[lhs] = rhs
        by_len: dict[int, dict[Word, Word]] = {}
        for lhs, rhs in rules.items():
            by_len.setdefault(len(lhs), {})[lhs] = rhs
        object.__setattr__(self, "_dehn_rules", by_len)
        return by_len

    def to_text(self) -> str:
        lines = ["gens " + " ".join(self.generators)]
        if self.relators:
            lines.append("relators " + " ".join(word_to_text(r, self.generators) for r in self.relators))
        lines.append("strategy " + self.strategy.value)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GroupElement:
    """Canonical word; fixed point of the presentation's canonicalization."""

    word: Word

    def __len__(self):
        return len(self.word)


@dataclass
class CayleyBall:
    """All canonical words within word-metric distance `radius` of the identity."""

    presentation: GroupPresentation
    radius: int
    elements: list[GroupElement]
    dist: list[int]
    adjacency: list[list[tuple[int, int]]]  # per element: (signed generator, neighbor index)

    def __post_init__(self):
        self._index = {e.word: i for i, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def index_of(self, e: "GroupElement | Word") -> int:
        w = e.word if isinstance(e, GroupElement) else tuple(e)
        idx = self._index.get(w)
        if idx is None:
            raise ElementNotInBallError(f"element {w} not in ball of radius {self.radius}")
        return idx

    def contains(self, e: "GroupElement | Word") -> bool:
        w = e.word if isinstance(e, GroupElement) else tuple(e)
        return w in self._index


# ---------------------------------------------------------------------------
# Presentation text format
#
#   gens a b
#   relators abab'  [a,b]
#   strategy free|abelian|dehn
#
# Words are juxtaposed one-character symbols, with ' for inverse and
# [x,y] as sugar for the commutator x y x' y' (x, y again words).
# ---------------------------------------------------------------------------


def parse_word(text: str, generators: tuple[str, ...], line: int = 1, col0: int = 0) -> Word:
    index = {g: i + 1 for i, g in enumerate(generators)}

    def parse_part(pos: int, stop: str | None) -> tuple[list[int], int]:
        out: list[int] = []
        while pos < len(text):
            ch = text[pos]
            if stop and ch == stop:
                return out, pos
            if ch == "[":
                left, pos2 = parse_part(pos + 1, ",")
                if pos2 >= len(text):
                    raise PresentationSyntaxError("unterminated commutator", line, col0 + pos + 1)
                right, pos3 = parse_part(pos2 + 1, "]")
                if pos3 >= len(text):
                    raise PresentationSyntaxError("unterminated commutator", line, col0 + pos + 1)
                lw, rw = tuple(left), tuple(right)
                out.extend(lw + rw + _invert(lw) + _invert(rw))
                pos = pos3 + 1
                continue
            if ch in (",", "]"):
                raise PresentationSyntaxError(f"unexpected {ch!r} in word", line, col0 + pos + 1)
            if ch not in index:
                raise PresentationSyntaxError(f"unknown generator {ch!r}", line, col0 + pos + 1)
            sign = index[ch]
            pos += 1
            if pos < len(text) and text[pos] == "'":
                sign = -sign
                pos += 1
            out.append(sign)
        if stop:
            raise PresentationSyntaxError(f"expected {stop!r}", line, col0 + len(text))
        return out, pos

    parsed, _ = parse_part(0, None)
    return tuple(parsed)


def word_to_text(word: Word, generators: tuple[str, ...]) -> str:
    parts = []
    for s in word:
        parts.append(generators[abs(s) - 1] + ("'" if s < 0 else ""))
    return "".join(parts) if parts else "1"


def parse_presentation(text: str) -> GroupPresentation:
    """Parse the presentation file format; errors carry line and column."""
    gens: tuple[str, ...] | None = None
    relator_tokens: list[tuple[str, int, int]] = []
    strategy: Strategy | None = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        fields = stripped.split()
        head, rest = fields[0].lower(), fields[1:]
        if head == "gens":
            if not rest:
                raise PresentationSyntaxError("gens line lists no generators", ln, len(raw))
            for g in rest:
                if len(g) != 1 or not g.isalpha():
                    raise PresentationSyntaxError(
                        f"generator {g!r} must be a single letter", ln, raw.index(g) + 1)
            if len(set(rest)) != len(rest):
                raise PresentationSyntaxError("duplicate generator symbol", ln, 1)
            gens = tuple(rest)
        elif head == "relators":
            for tok in rest:
                if tok == "(none)":
                    continue
                relator_tokens.append((tok, ln, raw.index(tok)))
        elif head == "strategy":
            if len(rest) != 1 or rest[0] not in ("free", "abelian", "dehn"):
                raise PresentationSyntaxError(
                    "strategy must be one of free|abelian|dehn", ln, len(fields[0]) + 2)
            strategy = Strategy(rest[0])
        else:
            raise PresentationSyntaxError(f"unknown directive {head!r}", ln, 1)
    if gens is None:
        raise PresentationSyntaxError("missing gens line", 1, 1)
    relators = tuple(parse_word(tok, gens, line=ln, col0=c) for tok, ln, c in relator_tokens)
    if strategy is None:
        strategy = Strategy.DEHN if relators else Strategy.FREE
    if strategy is Strategy.ABELIAN:
        relators = ()  # declared normal form; relators beyond commutators are not checked
    try:
        return GroupPresentation(gens, relators, strategy)
    except ValueError as e:
        raise PresentationSyntaxError(str(e), 1, 1) from e


# ---------------------------------------------------------------------------
# Canonicalization
# ---------------------------------------------------------------------------


def _canon_abelian(word: Word, rank: int) -> Word:
    exp = [0] * rank
    for s in word:
        exp[abs(s) - 1] += 1 if s > 0 else -1
    out: list[int] = []
    for i, e in enumerate(exp):
        g = i + 1
        out.extend([g if e > 0 else -g] * abs(e))
    return tuple(out)


def _canon_dehn(word: Word, rules: dict[int, dict[Word, Word]]) -> Word:
    w = _free_reduce(word)
    lengths = sorted(rules, reverse=True)
    changed = True
    while changed:
        changed = False
        n = len(w)
        for i in range(n):
            for L in lengths:
                if i + L > n:
                    continue
                rhs = rules[L].get(w[i:i + L])
                if rhs is not None:
                    w = _free_reduce(w[:i] + rhs + w[i + L:])
                    changed = True
                    break
            if changed:
                break
    return w


def canonicalize(word: "Word | GroupElement | str", p: GroupPresentation) -> GroupElement:
    """Canonical form of a word; idempotent for every strategy."""
    if isinstance(word, GroupElement):
        word = word.word
    elif isinstance(word, str):
        word = parse_word(word, p.generators)
    k = p.rank
    for s in word:
        if s == 0 or abs(s) > k:
            raise UnknownGeneratorError(f"generator index {s} outside alphabet of rank {k}")
    if p.strategy is Strategy.FREE:
        return GroupElement(_free_reduce(word))
    if p.strategy is Strategy.ABELIAN:
        return GroupElement(_canon_abelian(word, k))
    return GroupElement(_canon_dehn(word, p.dehn_rules()))


def mul(p: GroupPresentation, u: GroupElement, v: GroupElement) -> GroupElement:
    return canonicalize(u.word + v.word, p)


def inverse(p: GroupPresentation, u: GroupElement) -> GroupElement:
    return canonicalize(_invert(u.word), p)


# ---------------------------------------------------------------------------
# Ball enumeration
# ---------------------------------------------------------------------------


def enumerate_ball(p: GroupPresentation, R: int, cap: int = DEFAULT_VERTEX_CAP) -> CayleyBall:
    """BFS ball of radius R in the canonicalized Cayley graph.

    Distances are BFS levels; they equal the word metric exactly for the
    free and abelian strategies (unique canonical forms) and for Dehn
    presentations whose canonical words include the geodesics.
    """
    if R < 0:
        raise ValueError("radius must be nonnegative")
    gens = [s for i in range(1, p.rank + 1) for s in (i, -i)]
    identity: Word = ()
    words: list[Word] = [identity]
    dist: list[int] = [0]
    index: dict[Word, int] = {identity: 0}
    adjacency: list[list[tuple[int, int]]] = [[]]
    frontier = deque([0])
    while frontier:
        ui = frontier.popleft()
        if dist[ui] == R:
            continue
        base = words[ui]
        for s in gens:
            w = canonicalize(base + (s,), p).word
            vi = index.get(w)
            if vi is None:
                vi = len(words)
                if vi >= cap:
                    raise ResourceCapError(
                        f"ball of radius {R} exceeds the vertex cap of {cap}")
                words.append(w)
                dist.append(dist[ui] + 1)
                index[w] = vi
                adjacency.append([])
                frontier.append(vi)
            adjacency[ui].append((s, vi))
    elements = [GroupElement(w) for w in words]
    return CayleyBall(p, R, elements, dist, adjacency)


def pair_distance(ball: CayleyBall, u: GroupElement, v: GroupElement) -> int | OutOfWindow:
    """Word length of canonicalized u^-1 v, guarded by the window.

    Exact for free/abelian strategies; for Dehn presentations the value
    is the canonical-word length (an upper bound that is exact on
    geodesic canonical forms).  Values beyond 2*radius are reported as
    OutOfWindow rather than trusted.
    """
    ball.index_of(u)
    ball.index_of(v)
    p = ball.presentation
    w = canonicalize(_invert(u.word if isinstance(u, GroupElement) else u) +
                     (v.word if isinstance(v, GroupElement) else v), p)
    L = len(w.word)
    if L > 2 * ball.radius:
        return OUT_OF_WINDOW
    return L


def sphere_sizes(ball: CayleyBall) -> list[int]:
    """Number of elements at each distance 0..radius."""
    out = [0] * (ball.radius + 1)
    for d in ball.dist:
        out[d] += 1
    return out
