from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .complex import SimplicialComplex
from .config import DEFAULT_TIETZE_BUDGET, DEFAULT_TIETZE_RELATOR_CAP
from .homology import HomologyProfile, reduced_homology


class Pi1Status(str, Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"
    UNKNOWN = "unknown"


Word = list[int]


def free_reduce(word: Word) -> Word:
    out: Word = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(word: Word) -> Word:
    w = free_reduce(word)
    start, end = 0, len(w)
    while end - start >= 2 and w[start] == -w[end - 1]:
        start += 1
        end -= 1
    return w[start:end]


def invert(word: Word) -> Word:
    return [-x for x in reversed(word)]


@dataclass
class Presentation:
    """Generators are 1..n; a letter -g stands for the inverse of g."""

    generators: set[int] = field(default_factory=set)
    relators: list[Word] = field(default_factory=list)

    @property
    def is_trivial(self) -> bool:
        return not self.generators


def connected_components(cx: SimplicialComplex) -> list[list[int]]:
    neighbors: dict[int, set[int]] = {v: set() for v in cx.vertices()}
    for a, b in cx.faces(1):
        neighbors[a].add(b)
        neighbors[b].add(a)
    seen: set[int] = set()
    out: list[list[int]] = []
    for v in sorted(neighbors):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in sorted(neighbors[x]):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def edge_path_presentation(cx: SimplicialComplex, component: list[int]) -> Presentation:
    """Edge-path group on a BFS spanning tree; one relator per 2-face."""

    verts = set(component)
    edges = [e for e in cx.faces(1) if e[0] in verts]
    neighbors: dict[int, list[int]] = {v: [] for v in component}
    for a, b in edges:
        neighbors[a].append(b)
        neighbors[b].append(a)

    tree: set[tuple[int, int]] = set()
    root = component[0]
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(neighbors[x]):
            if y not in seen:
                seen.add(y)
                tree.add((min(x, y), max(x, y)))
                queue.append(y)

    gen_of: dict[tuple[int, int], int] = {}
    for e in edges:
        if e not in tree:
            gen_of[e] = len(gen_of) + 1

    def letter(a: int, b: int) -> Word:
        if a < b:
            g = gen_of.get((a, b))
            return [g] if g else []
        g = gen_of.get((b, a))
        return [-g] if g else []

    relators: list[Word] = []
    for a, b, c in cx.faces(2):
        if a not in verts:
            continue
        word = cyclic_reduce(letter(a, b) + letter(b, c) + letter(c, a))
        if word:
            relators.append(word)
    return Presentation(generators=set(gen_of.values()), relators=relators)


def _substitute(word: Word, gen: int, replacement: Word) -> Word:
    out: Word = []
    for x in word:
        if x == gen:
            out.extend(replacement)
        elif x == -gen:
            out.extend(invert(replacement))
        else:
            out.append(x)
    return cyclic_reduce(out)


def simplify_presentation(
    pres: Presentation,
    max_steps: int = DEFAULT_TIETZE_BUDGET,
    max_relator_length: int = DEFAULT_TIETZE_RELATOR_CAP,
) -> Presentation:
    """Bounded Tietze moves: drop trivial relators and eliminate generators.

    A generator occurring exactly once in some relator is solved for and
    substituted everywhere, as long as no relator grows past the length cap.
    """

    gens = set(pres.generators)
    rels = [cyclic_reduce(r) for r in pres.relators]
    steps = 0
    while gens and steps < max_steps:
        rels = [r for r in rels if r]
        eliminated = False
        for idx, rel in sorted(enumerate(rels), key=lambda t: (len(t[1]), t[0])):
            counts: dict[int, int] = {}
            for x in rel:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for gen in sorted(g for g, c in counts.items() if c == 1):
                pos = next(i for i, x in enumerate(rel) if abs(x) == gen)
                rotated = rel[pos:] + rel[:pos]
                rest = rotated[1:]
                # g * rest = 1  gives  g = rest^-1; g^-1 * rest = 1 gives g = rest
                replacement = invert(rest) if rotated[0] > 0 else rest
                others = [r for i, r in enumerate(rels) if i != idx]
                new_rels = [_substitute(r, gen, replacement) for r in others]
                if any(len(r) > max_relator_length for r in new_rels):
                    continue
                rels = new_rels
                gens.discard(gen)
                steps += 1 + sum(len(r) for r in others)
                eliminated = True
                break
            if eliminated or steps >= max_steps:
                break
        if not eliminated:
            break
    return Presentation(generators=gens, relators=[r for r in rels if r])


def pi1_status(
    cx: SimplicialComplex,
    homology: HomologyProfile | None = None,
    max_steps: int = DEFAULT_TIETZE_BUDGET,
    max_relator_length: int = DEFAULT_TIETZE_RELATOR_CAP,
) -> Pi1Status:
    """Trivial only for a single simply connected component.

    Nonzero H~_1 proves a nontrivial fundamental group; otherwise the answer
    is whatever the bounded simplification can certify.
    """

    if cx.is_empty:
        return Pi1Status.UNKNOWN
    if homology is None:
        homology = reduced_homology(cx)
    if not homology.group(1).is_zero:
        return Pi1Status.NONTRIVIAL

    statuses: list[Pi1Status] = []
    for comp in connected_components(cx):
        pres = simplify_presentation(
            edge_path_presentation(cx, comp),
            max_steps=max_steps,
            max_relator_length=max_relator_length,
        )
        statuses.append(Pi1Status.TRIVIAL if pres.is_trivial else Pi1Status.UNKNOWN)

    if len(statuses) == 1:
        return statuses[0]
    # A disconnected space has no single fundamental group to certify.
    return Pi1Status.UNKNOWN
