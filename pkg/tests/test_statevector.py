"""Full-array simulator tests, including the cross-check against the
reduced engine and the on-disk snapshot format."""

import struct

import numpy as np
import pytest

from pgsearch import (
    BadIndexError,
    CapExceededError,
    FullState,
    Schedule,
    apply_global,
    apply_local,
    make_geometry,
    measure_block_distribution,
    run_schedule,
    save_state,
    load_state,
    sv_apply_global_diffusion,
    sv_apply_local_diffusion,
    sv_apply_oracle,
    sv_reduce,
    sv_run_schedule,
    sv_uniform,
    to_class_vector,
    uniform_state,
)


def test_sv_uniform_small():
    st = sv_uniform(make_geometry(4, 2), 0)
    np.testing.assert_array_equal(st.amplitudes, [0.5, 0.5, 0.5, 0.5])
    assert st.target_index == 0


def test_sv_uniform_cap_and_target_checks():
    g = make_geometry(2**25, 2)
    with pytest.raises(CapExceededError):
        sv_uniform(g, 0)
    small = make_geometry(4, 2)
    with pytest.raises(BadIndexError):
        sv_uniform(small, 4)
    with pytest.raises(BadIndexError):
        sv_uniform(small, -1)
    # the cap is adjustable
    st = sv_uniform(g, 0, cap=2**25)
    assert st.amplitudes.shape == (2**25,)


def test_oracle_flips_only_target():
    st = sv_uniform(make_geometry(4, 2), 0)
    flipped = sv_apply_oracle(st)
    np.testing.assert_array_equal(flipped.amplitudes, [-0.5, 0.5, 0.5, 0.5])
    back = sv_apply_oracle(flipped)
    np.testing.assert_array_equal(back.amplitudes, st.amplitudes)


def test_global_diffusion_hand_case():
    st = sv_apply_oracle(sv_uniform(make_geometry(4, 2), 0))
    out = sv_apply_global_diffusion(st)
    np.testing.assert_allclose(out.amplitudes, [1.0, 0.0, 0.0, 0.0], atol=1e-15)


def test_global_diffusion_fixes_uniform():
    st = sv_uniform(make_geometry(64, 4), 11)
    out = sv_apply_global_diffusion(st)
    np.testing.assert_allclose(out.amplitudes, st.amplitudes, atol=1e-15)


def test_local_diffusion_hand_case():
    g = make_geometry(4, 2)
    st = FullState(np.array([-0.5, 0.5, 0.5, 0.5]), 0, g)
    out = sv_apply_local_diffusion(st)
    # block 0 mean is 0, so its entries flip; block 1 is block-uniform
    np.testing.assert_allclose(out.amplitudes, [0.5, -0.5, 0.5, 0.5], atol=1e-15)


def test_local_diffusion_fixes_block_uniform():
    st = sv_uniform(make_geometry(256, 8), 3)
    out = sv_apply_local_diffusion(st)
    np.testing.assert_allclose(out.amplitudes, st.amplitudes, atol=1e-15)


@pytest.mark.parametrize("n, k, target", [(64, 4, 0), (64, 4, 17), (256, 2, 255)])
def test_single_iterations_match_reduced_engine(n, k, target):
    g = make_geometry(n, k)

    st = sv_apply_global_diffusion(sv_apply_oracle(sv_uniform(g, target)))
    reduced, residual = sv_reduce(st)
    expect = apply_global(uniform_state(g), g)
    assert residual <= 1e-13
    assert reduced.amp_target == pytest.approx(expect.amp_target, abs=1e-13)
    assert reduced.amp_ntt == pytest.approx(expect.amp_ntt, abs=1e-13)
    assert reduced.amp_nb == pytest.approx(expect.amp_nb, abs=1e-13)

    st = sv_apply_local_diffusion(sv_apply_oracle(sv_uniform(g, target)))
    reduced, residual = sv_reduce(st)
    expect = apply_local(uniform_state(g), g)
    assert residual <= 1e-13
    assert reduced.amp_target == pytest.approx(expect.amp_target, abs=1e-13)
    assert reduced.amp_ntt == pytest.approx(expect.amp_ntt, abs=1e-13)
    assert reduced.amp_nb == pytest.approx(expect.amp_nb, abs=1e-13)


def test_sv_run_schedule_n4_single_global():
    st = sv_run_schedule(make_geometry(4, 2), 0, Schedule(0, 0, True))
    np.testing.assert_allclose(st.amplitudes, [1.0, 0.0, 0.0, 0.0], atol=1e-15)


@pytest.mark.parametrize(
    "n, k, sch, target",
    [
        (64, 4, Schedule(3, 1, True), 5),
        (256, 4, Schedule(7, 4, False), 100),
        (1024, 2, Schedule(0, 18, True), 700),
        (4096, 16, Schedule(12, 3, True), 4095),
    ],
)
def test_full_run_matches_reduced_run(n, k, sch, target):
    g = make_geometry(n, k)
    st = sv_run_schedule(g, target, sch)
    reduced, residual = sv_reduce(st)
    expect = run_schedule(g, sch)
    assert residual <= 1e-12
    got = to_class_vector(reduced, g)
    want = to_class_vector(expect, g)
    assert np.max(np.abs(got - want)) <= 1e-12


def test_block_distribution_uniform():
    st = sv_uniform(make_geometry(64, 4), 0)
    np.testing.assert_allclose(measure_block_distribution(st), [0.25] * 4, atol=1e-15)


def test_block_distribution_concentrated():
    g = make_geometry(4, 2)
    st = FullState(np.array([0.0, 0.0, 1.0, 0.0]), 2, g)
    np.testing.assert_allclose(measure_block_distribution(st), [0.0, 1.0], atol=1e-15)


def test_block_distribution_sums_to_one_after_run():
    st = sv_run_schedule(make_geometry(256, 8), 77, Schedule(6, 2, True))
    dist = measure_block_distribution(st)
    assert dist.sum() == pytest.approx(1.0, abs=1e-12)


def test_optimal_schedule_concentrates_target_block():
    from pgsearch import optimal_exact_schedule

    g = make_geometry(1024, 4)
    sch = optimal_exact_schedule(g, 0.9999)
    st = sv_run_schedule(g, 300, sch)  # target in block 1
    dist = measure_block_distribution(st)
    assert dist[1] >= 0.9999
    assert int(np.argmax(dist)) == 1


def test_target_position_only_permutes_blocks():
    # success must not depend on where inside the block the target sits
    g = make_geometry(64, 4)
    sch = Schedule(3, 1, True)
    dists = [
        measure_block_distribution(sv_run_schedule(g, target, sch))
        for target in range(64)
    ]
    base = np.sort(dists[0])
    for target, dist in enumerate(dists):
        assert int(np.argmax(dist)) == target // 16
        np.testing.assert_allclose(np.sort(dist), base, atol=1e-12)


def test_norm_drift_stays_tiny_over_many_iterations():
    st = sv_uniform(make_geometry(256, 4), 9)
    for _ in range(5000):
        st = sv_apply_global_diffusion(sv_apply_oracle(st))
        st = sv_apply_local_diffusion(sv_apply_oracle(st))
    norm = float(np.linalg.norm(st.amplitudes))
    assert abs(norm - 1.0) <= 1e-9


def test_sv_reduce_residual_detects_perturbation():
    g = make_geometry(64, 4)
    st = sv_uniform(g, 0)
    reduced, residual = sv_reduce(st)
    assert residual == 0.0
    # nudge one non-representative entry out of its class
    amps = st.amplitudes.copy()
    amps[1] += 1e-3
    reduced, residual = sv_reduce(FullState(amps, 0, g))
    assert residual >= 1e-3


def test_snapshot_round_trip(tmp_path):
    path = tmp_path / "state.pgsv"
    st = sv_run_schedule(make_geometry(64, 4), 21, Schedule(3, 1, True))
    save_state(st, path)
    assert path.stat().st_size == 32 + 8 * 64
    back = load_state(path)
    assert back.geometry.n_items == 64
    assert back.geometry.n_blocks == 4
    assert back.target_index == 21
    np.testing.assert_array_equal(back.amplitudes, st.amplitudes)


def test_snapshot_header_layout(tmp_path):
    path = tmp_path / "state.pgsv"
    save_state(sv_uniform(make_geometry(4, 2), 3), path)
    raw = path.read_bytes()
    magic, version, n, k = struct.unpack("<4sIQQ", raw[:24])
    (target,) = struct.unpack("<Q", raw[24:32])
    assert magic == b"PGSV"
    assert version == 1
    assert (n, k, target) == (4, 2, 3)
    amps = np.frombuffer(raw[32:], dtype="<f8")
    np.testing.assert_array_equal(amps, [0.5, 0.5, 0.5, 0.5])


def test_snapshot_rejects_garbage(tmp_path):
    path = tmp_path / "bad.pgsv"
    path.write_bytes(b"NOPE" + b"\x00" * 60)
    with pytest.raises(ValueError):
        load_state(path)
    good = tmp_path / "good.pgsv"
    save_state(sv_uniform(make_geometry(4, 2), 0), good)
    raw = bytearray(good.read_bytes())
    raw[4:8] = struct.pack("<I", 99)  # unsupported version
    path.write_bytes(bytes(raw))
    with pytest.raises(ValueError):
        load_state(path)
