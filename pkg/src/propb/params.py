"""Instance parameters and vertex naming.

An instance is a pair (k, l): edges have k vertices, assembled from l of the
2l-1 vertex sequences, k/l vertices per sequence.  Each sequence has
seq_len = 2^l * k / l positions, so l must divide k.  A vertex is addressed
as (seq, pos) and encoded as the integer seq * seq_len + pos; text formats
number vertices 1-based in that same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class ParameterError(ValueError):
    """Invalid (k, l) pair."""


class DivisibilityError(ParameterError):
    """l does not divide k, so the per-sequence block size is not integral."""


class VertexId(NamedTuple):
    seq: int
    pos: int


@dataclass(frozen=True)
class Params:
    """Validated instance parameters; construct via validate_params()."""

    k: int
    l: int
    seq_len: int
    block_size: int

    @property
    def num_sequences(self) -> int:
        return 2 * self.l - 1

    @property
    def num_vertices(self) -> int:
        return self.num_sequences * self.seq_len


def validate_params(k: int, l: int) -> Params:
    """Check a (k, l) pair and derive seq_len = 2^l*k/l and block_size = k/l.

    Raises ParameterError unless 1 <= l <= k, and DivisibilityError unless
    l divides k.
    """
    if not isinstance(k, int) or not isinstance(l, int):
        raise ParameterError(f"k and l must be integers, got k={k!r}, l={l!r}")
    if k < 1 or l < 1:
        raise ParameterError(f"k and l must be positive, got k={k}, l={l}")
    if l > k:
        raise ParameterError(f"l must not exceed k, got k={k}, l={l}")
    if k % l != 0:
        raise DivisibilityError(f"l must divide k, got k={k}, l={l}")
    block_size = k // l
    seq_len = (2**l) * block_size
    return Params(k=k, l=l, seq_len=seq_len, block_size=block_size)


def vertex_index(params: Params, vertex: VertexId) -> int:
    """0-based integer encoding of a vertex; add 1 for the text formats."""
    seq, pos = vertex
    if not (0 <= seq < params.num_sequences):
        raise IndexError(f"sequence index {seq} out of range 0..{params.num_sequences - 1}")
    if not (0 <= pos < params.seq_len):
        raise IndexError(f"position {pos} out of range 0..{params.seq_len - 1}")
    return seq * params.seq_len + pos


def vertex_at(params: Params, index: int) -> VertexId:
    """Inverse of vertex_index()."""
    if not (0 <= index < params.num_vertices):
        raise IndexError(f"vertex index {index} out of range 0..{params.num_vertices - 1}")
    return VertexId(index // params.seq_len, index % params.seq_len)
