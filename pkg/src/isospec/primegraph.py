"""Gruenberg-Kegel prime graphs and exact coclique search."""

from __future__ import annotations

from dataclasses import dataclass

from .spectra import SpectrumBasis

__all__ = [
    "PrimeGraph",
    "UnknownVertex",
    "build",
    "adjacent",
    "max_coclique",
    "max_coclique_through",
    "nonneighbors",
    "to_dot",
]


class UnknownVertex(KeyError):
    pass


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    # adjacency[i] is a bitmask over vertex indices
    adjacency: tuple[int, ...]

    def index(self, r: int) -> int:
        try:
            return self.vertices.index(r)
        except ValueError:
            raise UnknownVertex(r) from None

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, r in enumerate(self.vertices):
            for j in range(i + 1, len(self.vertices)):
                if self.adjacency[i] >> j & 1:
                    out.append((r, self.vertices[j]))
        return out

    def __len__(self) -> int:
        return len(self.vertices)


def build(b: SpectrumBasis) -> PrimeGraph:
    """GK graph of the divisor-closed set spanned by ``b``."""
    verts = tuple(sorted(b.primes()))
    adj = [0] * len(verts)
    for i, r in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if r * verts[j] in b:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return PrimeGraph(verts, tuple(adj))


def from_edges(vertices, edges) -> PrimeGraph:
    """Graph with the given vertex labels and edges; used for tests and demos."""
    verts = tuple(sorted(vertices))
    pos = {r: i for i, r in enumerate(verts)}
    adj = [0] * len(verts)
    for r, s in edges:
        if r == s:
            raise ValueError("loops are not allowed")
        adj[pos[r]] |= 1 << pos[s]
        adj[pos[s]] |= 1 << pos[r]
    return PrimeGraph(verts, tuple(adj))


def adjacent(g: PrimeGraph, r: int, s: int) -> bool:
    i, j = g.index(r), g.index(s)
    return bool(g.adjacency[i] >> j & 1)


def nonneighbors(g: PrimeGraph, r: int) -> frozenset[int]:
    i = g.index(r)
    return frozenset(
        s for j, s in enumerate(g.vertices) if j != i and not g.adjacency[i] >> j & 1
    )


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_bound(g: PrimeGraph, cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand``."""
    covers = 0
    rest = cand
    while rest:
        covers += 1
        clique = rest & -rest
        common = g.adjacency[clique.bit_length() - 1] & rest
        rest &= ~clique
        while common:
            v = common & -common
            clique |= v
            common &= g.adjacency[v.bit_length() - 1]
            rest &= ~v
    return covers


def _max_size(g: PrimeGraph, cand: int) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _clique_cover_bound(g, cand) <= best:
            return
        v = (cand & -cand).bit_length() - 1
        # branch: take v (drop its neighbours), or discard v
        expand(size + 1, cand & ~g.adjacency[v] & ~(1 << v))
        expand(size, cand & ~(1 << v))

    expand(0, cand)
    return best


def _lexmin_witness(g: PrimeGraph, cand: int, size: int) -> int:
    """Lexicographically least coclique of the given size inside cand."""
    chosen = 0
    need = size
    for v in _bits(cand):
        if not need:
            break
        if not cand >> v & 1:
            continue
        rest = cand & ~g.adjacency[v] & ~(1 << v) & ~((1 << (v + 1)) - 1)
        if 1 + _max_size(g, rest) >= need:
            chosen |= 1 << v
            need -= 1
            cand = rest
        else:
            cand &= ~(1 << v)
    return chosen


def _labels(g: PrimeGraph, mask: int) -> frozenset[int]:
    return frozenset(g.vertices[i] for i in _bits(mask))


def max_coclique(g: PrimeGraph) -> tuple[int, frozenset[int]]:
    """t(G) and the lexicographically smallest maximum coclique."""
    everything = (1 << len(g.vertices)) - 1
    size = _max_size(g, everything)
    return size, _labels(g, _lexmin_witness(g, everything, size))


def max_coclique_through(g: PrimeGraph, r: int) -> tuple[int, frozenset[int]]:
    """t(r, G) and a witness containing r."""
    i = g.index(r)
    everything = (1 << len(g.vertices)) - 1
    rest = everything & ~g.adjacency[i] & ~(1 << i)
    size = _max_size(g, rest)
    witness = _lexmin_witness(g, rest, size) | (1 << i)
    return size + 1, _labels(g, witness)


def to_dot(g: PrimeGraph, name: str = "GK") -> str:
    lines = [f'graph "{name}" {{']
    lines += [f"  {r};" for r in g.vertices]
    lines += [f"  {r} -- {s};" for r, s in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
