"""Shift-based construction of k-uniform hypergraphs with no proper 2-coloring.

For l chosen sequences, an edge is cut out by a shift tuple (one cyclic
rotation per sequence) and a block S of block_size positions: it contains,
for every chosen sequence, the vertices at the shifted positions of S.  A
per-subset hypergraph enumerates all seq_len^l shift tuples and all
C(seq_len, block_size) blocks; the full construction concatenates the
per-subset hypergraphs over all C(2l-1, l) sequence subsets.

Edges are canonical sorted tuples of 0-based integer vertex encodings (see
params.vertex_index).  Emission order is lexicographic over (sequence
subset, shift tuple, block), so builds are byte-reproducible; build_full
keeps duplicate edges (the counted multiset), dedup() removes them.

Edge-list text format: header line `p hyp <vertexCount> <edgeCount> <k>`,
then one edge per line as space-separated ascending 1-based vertex numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import IO, Iterable, Iterator, Sequence

from . import counting
from .params import Params, VertexId

Edge = tuple[int, ...]

DEFAULT_EDGE_CAP = 10_000_000


class ConstructionError(ValueError):
    """Edge ingredients with the wrong cardinalities."""


class EdgeCapError(RuntimeError):
    """Refused to build: the edge multiset would exceed the configured cap."""

    def __init__(self, expected: int, cap: int):
        super().__init__(f"construction would emit {expected} edges, above the cap of {cap}")
        self.expected = expected
        self.cap = cap


@dataclass(frozen=True)
class Hypergraph:
    """An edge multiset over the fixed vertex universe of `params`.

    The universe is always all (2l-1)*seq_len vertices, even when the edges
    touch only a subset of the sequences, so vertex numbering is stable.
    """

    params: Params
    edges: tuple[Edge, ...]

    @property
    def vertex_count(self) -> int:
        return self.params.num_vertices

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


def shifted_vertex(params: Params, seq: int, r: int, shift: int) -> VertexId:
    """Vertex at position r of sequence seq after a cyclic shift, 0-based."""
    if not (0 <= seq < params.num_sequences):
        raise IndexError(f"sequence index {seq} out of range 0..{params.num_sequences - 1}")
    if not (0 <= r < params.seq_len):
        raise IndexError(f"position {r} out of range 0..{params.seq_len - 1}")
    if not (0 <= shift < params.seq_len):
        raise IndexError(f"shift {shift} out of range 0..{params.seq_len - 1}")
    return VertexId(seq, (r + shift) % params.seq_len)


def _check_chosen_seqs(params: Params, chosen_seqs: Sequence[int]) -> tuple[int, ...]:
    chosen = tuple(chosen_seqs)
    if len(chosen) != params.l or len(set(chosen)) != params.l:
        raise ConstructionError(f"need {params.l} distinct sequence indices, got {chosen}")
    for seq in chosen:
        if not (0 <= seq < params.num_sequences):
            raise IndexError(f"sequence index {seq} out of range 0..{params.num_sequences - 1}")
    return chosen


def edge_from(
    params: Params,
    chosen_seqs: Sequence[int],
    shifts: Sequence[int],
    positions: Iterable[int],
) -> Edge:
    """The k-vertex edge cut out by (chosen_seqs, shifts, positions).

    positions is the block S of block_size distinct positions; each chosen
    sequence contributes its vertices at (r + shift) mod seq_len for r in S.
    """
    chosen = _check_chosen_seqs(params, chosen_seqs)
    kp = params.seq_len
    if len(shifts) != params.l:
        raise ConstructionError(f"need {params.l} shifts, got {len(shifts)}")
    for shift in shifts:
        if not (0 <= shift < kp):
            raise IndexError(f"shift {shift} out of range 0..{kp - 1}")
    block = sorted(set(positions))
    if len(block) != params.block_size:
        raise ConstructionError(
            f"need {params.block_size} distinct positions, got {len(block)}"
        )
    for r in block:
        if not (0 <= r < kp):
            raise IndexError(f"position {r} out of range 0..{kp - 1}")
    edge = tuple(
        sorted(seq * kp + (r + shift) % kp for seq, shift in zip(chosen, shifts) for r in block)
    )
    if len(set(edge)) != params.k:
        raise AssertionError(f"edge collision for seqs={chosen} shifts={tuple(shifts)} S={block}")
    return edge


def iter_subset_edges(params: Params, chosen_seqs: Sequence[int]) -> Iterator[Edge]:
    """Edges of the per-subset hypergraph, lexicographic: shift tuple major, block minor."""
    chosen = _check_chosen_seqs(params, chosen_seqs)
    kp = params.seq_len
    combos = list(itertools.combinations(range(kp), params.block_size))

    # Per sequence and shift, the sorted vertex tuple of every block,
    # precomputed once; an edge is then just a concatenation.  When the
    # chosen sequences are ascending, their vertex ranges are ascending and
    # disjoint, so the concatenation is already canonically sorted.
    ascending = all(a < b for a, b in zip(chosen, chosen[1:]))
    pre = []
    for seq in chosen:
        base = seq * kp
        per_shift = []
        for shift in range(kp):
            row = [base + (r + shift) % kp for r in range(kp)]
            per_shift.append([tuple(sorted(row[r] for r in block)) for block in combos])
        pre.append(per_shift)

    n_combos = len(combos)
    if params.l == 1:
        for shift in range(kp):
            yield from pre[0][shift]
        return
    for shifts in itertools.product(range(kp), repeat=params.l):
        parts = [pre[j][shifts[j]] for j in range(params.l)]
        first = parts[0]
        rest = parts[1:]
        if ascending:
            for ci in range(n_combos):
                edge = first[ci]
                for part in rest:
                    edge = edge + part[ci]
                yield edge
        else:
            for ci in range(n_combos):
                merged = list(first[ci])
                for part in rest:
                    merged.extend(part[ci])
                yield tuple(sorted(merged))


def build_subset_hypergraph(params: Params, chosen_seqs: Sequence[int]) -> Hypergraph:
    """Materialized per-subset hypergraph: seq_len^l * C(seq_len, block_size) edges."""
    return Hypergraph(params, tuple(iter_subset_edges(params, chosen_seqs)))


def iter_edges(params: Params) -> Iterator[Edge]:
    """All edges of the full construction, streamed in canonical order."""
    for chosen in itertools.combinations(range(params.num_sequences), params.l):
        yield from iter_subset_edges(params, chosen)


def build_full(params: Params, edge_cap: int | None = DEFAULT_EDGE_CAP) -> Hypergraph:
    """The full edge multiset; its cardinality always equals edge_count(params).

    Refuses with EdgeCapError when that count exceeds edge_cap (pass None to
    disable the guard).
    """
    expected = counting.edge_count(params)
    if edge_cap is not None and expected > edge_cap:
        raise EdgeCapError(expected, edge_cap)
    edges = tuple(iter_edges(params))
    if len(edges) != expected:
        raise AssertionError(f"built {len(edges)} edges, formula says {expected}")
    return Hypergraph(params, edges)


def dedup(hypergraph: Hypergraph) -> Hypergraph:
    """Distinct edges in canonical sorted order.

    Dropping duplicate edges cannot make an improper coloring proper, so
    non-2-colorability carries over.
    """
    return Hypergraph(hypergraph.params, tuple(sorted(set(hypergraph.edges))))


def edge_vertices(params: Params, edge: Edge) -> tuple[VertexId, ...]:
    """Decode an edge into (seq, pos) pairs."""
    return tuple(VertexId(v // params.seq_len, v % params.seq_len) for v in edge)


def edge_list_header(params: Params, num_edges: int) -> str:
    return f"p hyp {params.num_vertices} {num_edges} {params.k}"


def write_edge_list(out: IO[str], params: Params, edges: Iterable[Edge], num_edges: int) -> None:
    """Stream the edge-list text format; `num_edges` must match the iterable."""
    out.write(edge_list_header(params, num_edges) + "\n")
    for edge in edges:
        out.write(" ".join(str(v + 1) for v in edge) + "\n")


def format_edge_list(hypergraph: Hypergraph) -> str:
    lines = [edge_list_header(hypergraph.params, len(hypergraph.edges))]
    lines.extend(" ".join(str(v + 1) for v in edge) for edge in hypergraph.edges)
    return "\n".join(lines) + "\n"
