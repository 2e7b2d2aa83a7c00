"""Full N-amplitude simulation used to certify the reduced model.

Everything here works on the complete amplitude vector, so memory is the
limiting factor: the default cap is 2**24 amplitudes (128 MiB as float64).
The iteration kernels are the literal reflections, one numpy pass each:

    oracle            a[t] -> -a[t]
    global diffusion  a    -> 2*mean(a) - a
    local diffusion   a    -> 2*block_mean(a) - a   (per block)

A global iteration is oracle followed by global diffusion; a local
iteration is oracle followed by block diffusion.  Reductions use numpy's
pairwise summation, so results are bit-reproducible run to run.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .errors import BadIndexError, CapExceededError
from .model import Geometry, ReducedState, Schedule, make_geometry

__all__ = [
    "DEFAULT_AMPLITUDE_CAP",
    "PGSV_MAGIC",
    "PGSV_VERSION",
    "FullState",
    "sv_uniform",
    "sv_apply_oracle",
    "sv_apply_global_diffusion",
    "sv_apply_local_diffusion",
    "sv_run_schedule",
    "sv_reduce",
    "measure_block_distribution",
    "save_state",
    "load_state",
]

#: Default limit on the number of amplitudes a full state may hold.
DEFAULT_AMPLITUDE_CAP = 1 << 24

PGSV_MAGIC = b"PGSV"
PGSV_VERSION = 1
_HEADER = struct.Struct("<4sIQQ")  # magic, version, n_items, n_blocks
_TARGET = struct.Struct("<Q")


@dataclass(frozen=True)
class FullState:
    """Complete amplitude vector plus the target's location."""

    amplitudes: np.ndarray
    target_index: int
    geometry: Geometry


def sv_uniform(
    g: Geometry, target_index: int, cap: int | None = None
) -> FullState:
    """Uniform superposition with the target at ``target_index``.

    Raises CapExceededError when the database needs more amplitudes than
    ``cap`` (default 2**24) and BadIndexError for an out-of-range target.
    """
    limit = DEFAULT_AMPLITUDE_CAP if cap is None else cap
    if g.n_items > limit:
        raise CapExceededError(
            f"{g.n_items} amplitudes exceed the cap of {limit}"
        )
    if not 0 <= target_index < g.n_items:
        raise BadIndexError(
            f"target index {target_index} outside [0, {g.n_items})"
        )
    amps = np.full(g.n_items, 1.0 / np.sqrt(g.n_items))
    return FullState(amps, target_index, g)


def sv_apply_oracle(state: FullState) -> FullState:
    """Flip the sign of the target amplitude (norm unchanged bit-exact)."""
    amps = state.amplitudes.copy()
    amps[state.target_index] = -amps[state.target_index]
    return FullState(amps, state.target_index, state.geometry)


def sv_apply_global_diffusion(state: FullState) -> FullState:
    """Reflect about the uniform state: a -> 2*mean(a) - a."""
    amps = state.amplitudes
    out = 2.0 * amps.mean() - amps
    return FullState(out, state.target_index, state.geometry)


def sv_apply_local_diffusion(state: FullState) -> FullState:
    """Reflect about the per-block uniform state, each block independently.

    Block-uniform input blocks are fixed points (up to float roundoff).
    """
    g = state.geometry
    blocks = state.amplitudes.reshape(g.n_blocks, g.block_size)
    out = 2.0 * blocks.mean(axis=1, keepdims=True) - blocks
    return FullState(out.reshape(-1), state.target_index, state.geometry)


def sv_run_schedule(
    g: Geometry,
    target_index: int,
    schedule: Schedule,
    cap: int | None = None,
) -> FullState:
    """Run the schedule on the uniform state, mirroring ``run_schedule``."""
    state = sv_uniform(g, target_index, cap)
    for _ in range(schedule.j1):
        state = sv_apply_global_diffusion(sv_apply_oracle(state))
    for _ in range(schedule.j2):
        state = sv_apply_local_diffusion(sv_apply_oracle(state))
    if schedule.trailing_global:
        state = sv_apply_global_diffusion(sv_apply_oracle(state))
    return state


def sv_reduce(state: FullState) -> tuple[ReducedState, float]:
    """Collapse a full state onto the three invariant classes.

    The representative of each class is its first member's amplitude; the
    returned ``coherence_residual`` is the largest absolute deviation of
    any amplitude from its class representative.  States produced by
    schedules stay within ~1e-12 of their representatives; anything larger
    means the state left the invariant subspace.
    """
    g = state.geometry
    b = g.block_size
    amps = state.amplitudes
    t = state.target_index
    start = (t // b) * b

    inside = np.delete(amps[start : start + b], t - start)
    outside = np.delete(amps, np.s_[start : start + b])

    amp_ntt = float(inside[0]) if inside.size else 0.0
    amp_nb = float(outside[0]) if outside.size else 0.0

    residual = 0.0
    if inside.size:
        residual = float(np.abs(inside - amp_ntt).max())
    if outside.size:
        residual = max(residual, float(np.abs(outside - amp_nb).max()))

    return ReducedState(float(amps[t]), amp_ntt, amp_nb), residual


def measure_block_distribution(state: FullState) -> np.ndarray:
    """Probability of measuring each block: squared norms per block."""
    g = state.geometry
    blocks = state.amplitudes.reshape(g.n_blocks, g.block_size)
    return (blocks * blocks).sum(axis=1)


def save_state(state: FullState, path) -> None:
    """Write the PGSV binary dump.

    Layout: 24-byte header (magic "PGSV", u32 version, u64 n_items,
    u64 n_blocks), then the u64 target index, then n_items little-endian
    float64 amplitudes.
    """
    g = state.geometry
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(PGSV_MAGIC, PGSV_VERSION, g.n_items, g.n_blocks))
        fh.write(_TARGET.pack(state.target_index))
        fh.write(np.ascontiguousarray(state.amplitudes, dtype="<f8").tobytes())


def load_state(path) -> FullState:
    """Read a PGSV dump back; inverse of :func:`save_state`."""
    with open(path, "rb") as fh:
        magic, version, n_items, n_blocks = _HEADER.unpack(fh.read(_HEADER.size))
        if magic != PGSV_MAGIC:
            raise ValueError(f"not a PGSV file (magic {magic!r})")
        if version != PGSV_VERSION:
            raise ValueError(f"unsupported PGSV version {version}")
        (target_index,) = _TARGET.unpack(fh.read(_TARGET.size))
        data = fh.read(8 * n_items)
    amps = np.frombuffer(data, dtype="<f8").astype(np.float64)
    g = make_geometry(n_items, n_blocks)
    return FullState(amps, target_index, g)
