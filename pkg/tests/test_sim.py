import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncn import circuit as ir
from ncn import sim
from ncn.errors import DimensionError, EntangledAncillaError
from ncn.linalg import random_state, random_unitary
from ncn.synth import synthesize
from ncn.transform import transform


def test_empty_circuit_leaves_state():
    s = random_state(4, 1)
    assert np.array_equal(sim.apply(ir.Circuit(2), s), s)


def test_not_flips():
    out = sim.apply(ir.Circuit(1, [ir.neg(0, np.pi)]), [1, 0])
    assert np.abs(out - [0, 1]).max() < 1e-15


def test_apply_does_not_mutate():
    s = np.array([1, 0], dtype=complex)
    sim.apply(ir.Circuit(1, [ir.neg(0, np.pi)]), s)
    assert s[0] == 1


def test_apply_batch_matches_columns(rng):
    c = synthesize(random_unitary(8, rng))
    batch = np.column_stack([random_state(8, rng) for _ in range(5)])
    out = sim.apply(c, batch)
    for i in range(5):
        assert np.abs(out[:, i] - sim.apply(c, batch[:, i])).max() < 1e-14


def test_unitary_matches_dense(rng):
    c = synthesize(random_unitary(16, rng))
    assert np.abs(sim.unitary(c) - ir.circuit_matrix(c)).max() < 1e-12


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        sim.apply(ir.Circuit(2), [1, 0])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_norm_preserved(seed):
    rng = np.random.default_rng(seed)
    gates = [ir.neg(int(rng.integers(3)), rng.uniform(0, 7)) for _ in range(10)]
    gates += [ir.csqn(0, 2), ir.toffoli(2, 1, 0), ir.u1q(1, random_unitary(2, rng))]
    s = sim.apply(ir.Circuit(3, gates), random_state(8, rng))
    assert abs(np.linalg.norm(s) - 1) <= 1e-10


def test_phi_extend():
    s = sim.phi_extend([1, 0])
    assert np.allclose(s, np.array([1, 0, -1, 0]) / np.sqrt(2))
    t = random_state(8, 3)
    e = sim.phi_extend(t)
    assert len(e) == 16 and np.linalg.norm(e) == pytest.approx(1, abs=1e-15)


def test_psi_reduce_round_trip(rng):
    s = random_state(8, rng)
    r = sim.psi_reduce(sim.phi_extend(s))
    assert abs(abs(np.vdot(r, s)) - 1) < 1e-14


def test_psi_reduce_after_transform(rng):
    u = random_unitary(4, rng)
    s = random_state(4, rng)
    out = sim.apply(transform(synthesize(u)), sim.phi_extend(s))
    assert abs(abs(np.vdot(u @ s, sim.psi_reduce(out))) - 1) < 1e-12
    assert sim.ancilla_trace_distance(out) < 1e-12


def test_psi_reduce_rejects_bell_state():
    with pytest.raises(EntangledAncillaError) as e:
        sim.psi_reduce(np.array([1, 0, 0, 1]) / np.sqrt(2))
    assert e.value.purity == pytest.approx(0.5)


def test_ancilla_trace_distance():
    assert sim.ancilla_trace_distance(sim.phi_extend([1, 0])) < 1e-15
    plus = np.kron([1, 1], [1, 0]) / np.sqrt(2)
    assert sim.ancilla_trace_distance(plus) == pytest.approx(1)


def test_measure_basis_state():
    h = sim.measure([0, 1], [0], 100, seed=1)
    assert h.probabilities.tolist() == [0, 1]
    assert h.counts.tolist() == [0, 100]


def test_measure_bell_state():
    h = sim.measure(np.array([1, 0, 0, 1]) / np.sqrt(2), [0, 1], 1000, seed=2)
    assert np.allclose(h.probabilities, [0.5, 0, 0, 0.5])
    assert h.shots == 1000 and h.counts[1] == h.counts[2] == 0


def test_measure_is_deterministic_given_seed(rng):
    s = random_state(8, rng)
    a = sim.measure(s, [2, 0], 500, seed=9)
    b = sim.measure(s, [2, 0], 500, seed=9)
    assert np.array_equal(a.counts, b.counts)


def test_probabilities_follow_listed_qubit_order():
    s = sim.basis_state(0b100, 3)  # q0 = 1
    assert sim.probabilities(s, [0, 2]).tolist() == [0, 0, 1, 0]
    assert sim.probabilities(s, [2, 0]).tolist() == [0, 1, 0, 0]


def test_probabilities_sum_to_one(rng):
    s = random_state(16, rng)
    assert sim.probabilities(s, [3, 1]).sum() == pytest.approx(1, abs=1e-10)


def test_histogram_converges(rng):
    s = random_state(8, rng)
    shots = 100_000
    h = sim.measure(s, [0, 1, 2], shots, seed=4)
    assert np.abs(h.counts / shots - h.probabilities).max() <= 4 / np.sqrt(shots)
    # chi-square with 7 degrees of freedom; 24.3 is the 0.999 quantile
    expected = shots * h.probabilities
    assert np.sum((h.counts - expected) ** 2 / expected) < 24.3


def test_histogram_lines():
    h = sim.measure(sim.basis_state(2, 2), [0, 1], 10, seed=0)
    assert h.lines()[2] == "10  1.000000000000"


def test_collapse():
    s = np.array([1, 0, 0, 1]) / np.sqrt(2)
    r = sim.collapse(s, [0], 1)
    assert r.probability == pytest.approx(0.5)
    assert np.allclose(r.post_state, [0, 0, 0, 1])


def test_invalid_measured_qubits():
    with pytest.raises(DimensionError):
        sim.probabilities([1, 0], [1])
    with pytest.raises(DimensionError):
        sim.probabilities([1, 0, 0], [0])
