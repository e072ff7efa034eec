"""Codebook storage, similarity, and nearest-neighbor quantization.

The codebook is an N x d table of vectors. Pairing measures similarity
between entries with cosine similarity; quantization maps an arbitrary
d-vector to the index of the Euclidean-nearest entry. The two metrics are
deliberately distinct and never interchanged.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

IMCB_MAGIC = b"IMCB"
IMCB_VERSION = 1


class CodebookError(ValueError):
    """Raised for malformed codebook files or invariant violations."""


@dataclass(frozen=True)
class Codebook:
    """Immutable N x d codebook. N must be even; rows must be finite and nonzero."""

    vectors: np.ndarray  # (n_entries, dim) float64

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=np.float64)
        if v.ndim != 2:
            raise CodebookError("codebook vectors must be a 2-D array")
        n, d = v.shape
        if n <= 0 or d <= 0:
            raise CodebookError("codebook must have positive shape")
        if n % 2 != 0:
            raise CodebookError(f"odd entry count: {n}")
        if not np.all(np.isfinite(v)):
            raise CodebookError("non-finite vector in codebook")
        norms = np.linalg.norm(v, axis=1)
        if np.any(norms == 0.0):
            bad = int(np.argmin(norms))
            raise CodebookError(f"zero vector at index {bad}")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def n_entries(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]


@dataclass(frozen=True)
class IndexGrid:
    """h x w grid of codebook indices (one per image patch)."""

    indices: np.ndarray  # (h, w) int64

    def __post_init__(self):
        idx = np.asarray(self.indices, dtype=np.int64)
        if idx.ndim != 2 or idx.size == 0:
            raise ValueError("index grid must be a non-empty 2-D array")
        if np.any(idx < 0):
            raise ValueError("negative codebook index in grid")
        idx.setflags(write=False)
        object.__setattr__(self, "indices", idx)

    @property
    def height(self) -> int:
        return self.indices.shape[0]

    @property
    def width(self) -> int:
        return self.indices.shape[1]

    @property
    def n_idx(self) -> int:
        return self.indices.size

    def flat(self) -> np.ndarray:
        return self.indices.reshape(-1)


def load_codebook(path) -> Codebook:
    """Read an IMCB file (see save_codebook for the layout)."""
    with open(path, "rb") as f:
        data = f.read()
    if len(data) < 24:
        raise CodebookError("truncated file: missing header")
    if data[:4] != IMCB_MAGIC:
        raise CodebookError(f"bad magic {data[:4]!r}, expected {IMCB_MAGIC!r}")
    (version,) = struct.unpack_from("<I", data, 4)
    if version != IMCB_VERSION:
        raise CodebookError(f"unsupported version {version}")
    n, d = struct.unpack_from("<QQ", data, 8)
    expected = 24 + n * d * 4
    if len(data) != expected:
        raise CodebookError(
            f"truncated file: expected {expected} bytes, got {len(data)}"
        )
    if n % 2 != 0:
        raise CodebookError(f"odd entry count: {n}")
    raw = np.frombuffer(data, dtype="<f4", count=n * d, offset=24)
    vectors = raw.reshape(n, d).astype(np.float64)
    return Codebook(vectors)


def save_codebook(cb: Codebook, path) -> None:
    """Write the IMCB layout: magic, u32 version, u64 N, u64 d, f32-LE rows."""
    with open(path, "wb") as f:
        f.write(IMCB_MAGIC)
        f.write(struct.pack("<I", IMCB_VERSION))
        f.write(struct.pack("<QQ", cb.n_entries, cb.dim))
        f.write(cb.vectors.astype("<f4").tobytes(order="C"))


def cosine_similarity(cb: Codebook, i: int, j: int) -> float:
    """Cosine similarity between codebook rows i and j (i != j)."""
    n = cb.n_entries
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"index out of range: ({i}, {j}) for N={n}")
    if i == j:
        raise ValueError("self-similarity is not defined for pairing")
    a = cb.vectors[i]
    b = cb.vectors[j]
    return float(np.dot(a, b) / (np.linalg.norm(a) * np.linalg.norm(b)))


def quantize_block(cb: Codebook, v: np.ndarray) -> int:
    """Index of the Euclidean-nearest codebook row; ties go to the smallest index."""
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (cb.dim,):
        raise ValueError(f"vector has shape {v.shape}, codebook dim is {cb.dim}")
    diff = cb.vectors - v
    d2 = np.einsum("nd,nd->n", diff, diff)
    return int(np.argmin(d2))  # argmin returns the first (smallest) index on ties


def quantize_blocks(cb: Codebook, blocks: np.ndarray) -> np.ndarray:
    """Vectorized quantize_block over an (m, d) stack of vectors.

    Uses the same squared-difference arithmetic as quantize_block so the two
    paths agree bit-for-bit, including tie-breaks.
    """
    blocks = np.asarray(blocks, dtype=np.float64)
    if blocks.ndim != 2 or blocks.shape[1] != cb.dim:
        raise ValueError(f"blocks have shape {blocks.shape}, codebook dim is {cb.dim}")
    out = np.empty(blocks.shape[0], dtype=np.int64)
    # Chunked so the (chunk, N, d) broadcast stays within a few MB.
    chunk = max(1, 4_000_000 // (cb.n_entries * cb.dim))
    for start in range(0, blocks.shape[0], chunk):
        part = blocks[start : start + chunk]
        diff = part[:, None, :] - cb.vectors[None, :, :]
        d2 = np.einsum("mnd,mnd->mn", diff, diff)
        out[start : start + chunk] = np.argmin(d2, axis=1)
    return out
