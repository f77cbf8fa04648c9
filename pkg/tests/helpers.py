"""Independent brute-force oracles used to check the package's fast paths.

Everything here is written straight from the definitions, with no shared
code or precomputation tricks, so a bug in an optimized implementation
cannot hide in its own oracle.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from propb.params import Params


def naive_subset_edges(params: Params, chosen_seqs: Sequence[int]) -> list[tuple[int, ...]]:
    """Definitional per-subset edge multiset: loop shifts, blocks, sequences."""
    edges = []
    kp = params.seq_len
    for shifts in itertools.product(range(kp), repeat=params.l):
        for block in itertools.combinations(range(kp), params.block_size):
            vertices = set()
            for seq, shift in zip(chosen_seqs, shifts):
                for r in block:
                    vertices.add(seq * kp + (r + shift) % kp)
            edges.append(tuple(sorted(vertices)))
    return edges


def naive_full_edges(params: Params) -> list[tuple[int, ...]]:
    edges = []
    for chosen in itertools.combinations(range(params.num_sequences), params.l):
        edges.extend(naive_subset_edges(params, chosen))
    return edges


def has_monochromatic_edge(coloring: str, edges: Iterable[tuple[int, ...]]) -> bool:
    for edge in edges:
        first = coloring[edge[0]]
        if all(coloring[v] == first for v in edge[1:]):
            return True
    return False


def all_colorings(num_vertices: int) -> Iterator[str]:
    for bits in itertools.product("RB", repeat=num_vertices):
        yield "".join(bits)


def truth_table_satisfiable(variable_count: int, clauses: Sequence[Sequence[int]]):
    """Exhaustive SAT decision; returns a model dict or None."""
    for bits in itertools.product((False, True), repeat=variable_count):
        assignment = {v + 1: bits[v] for v in range(variable_count)}
        if all(any(assignment[abs(lit)] == (lit > 0) for lit in cl) for cl in clauses):
            return assignment
    return None


def max_aligned_by_enumeration(
    params: Params, coloring: str, color: str, chosen_seqs: Sequence[int]
) -> int:
    """Largest number of fully `color` positions over every shift tuple."""
    kp = params.seq_len
    best = -1
    for shifts in itertools.product(range(kp), repeat=len(chosen_seqs)):
        n = 0
        for r in range(kp):
            if all(
                coloring[seq * kp + (r + shift) % kp] == color
                for seq, shift in zip(chosen_seqs, shifts)
            ):
                n += 1
        best = max(best, n)
    return best
