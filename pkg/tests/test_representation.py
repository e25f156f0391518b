import math
import random

import numpy as np
import pytest

import gainline as gl
from gainline.algebra import CGMatrix
from gainline.errors import InputError, ValidationError

from helpers import (DIAMOND, PAW, q8_gain, random_connected_graph,
                     random_gain, random_pure_matrix, random_vector,
                     small_groups)

DIAMOND_GAINS = ["-k", "1", "1", "1", "-j"]


def test_q8_two_dim_images():
    Q8 = gl.quaternion8()
    rep = gl.q8_representation(Q8)
    assert rep.degree == 2 and rep.irreducible
    assert np.array_equal(rep(Q8.element("i")), [[0, -1], [1, 0]])
    assert np.array_equal(rep(Q8.element("j")), [[0, 1j], [1j, 0]])
    assert np.array_equal(rep(Q8.element("k")), [[-1j, 0], [0, 1j]])
    assert np.array_equal(rep(Q8.element("-1")), [[-1, 0], [0, -1]])


def test_validation_rejects_bad_tables():
    Z2 = gl.sign_group()
    with pytest.raises(ValidationError):  # pi(1) != I
        gl.UnitaryRepresentation(Z2, [[[0.0]], [[1.0]]])
    with pytest.raises(ValidationError):  # not unitary
        gl.UnitaryRepresentation(Z2, [[[1.0]], [[2.0]]])
    with pytest.raises(ValidationError):  # not a homomorphism
        gl.UnitaryRepresentation(Z2, [[[1.0]], [[1j]]])
    with pytest.raises(ValidationError):  # wrong shape
        gl.UnitaryRepresentation(Z2, [[[1.0]]])


def test_builtin_dispatch():
    Q8 = gl.quaternion8()
    rep = gl.builtin_representation(Q8, "q8_2dim")
    assert rep.degree == 2
    with pytest.raises(InputError):
        gl.builtin_representation(Q8, "mystery")
    with pytest.raises(InputError):
        gl.builtin_representation(Q8, "root_of_unity")


def test_root_of_unity_values():
    Z4 = gl.cyclic(4)
    rep = gl.root_of_unity_representation(Z4, power=1)
    assert abs(rep(1)[0, 0] - 1j) < 1e-12
    assert abs(rep(2)[0, 0] + 1) < 1e-12
    squared = gl.root_of_unity_representation(Z4, power=2)
    assert abs(squared(1)[0, 0] + 1) < 1e-12


def test_sign_character_families():
    assert gl.sign_character(gl.sign_group())(1)[0, 0] == -1
    assert gl.sign_character(gl.cyclic(6))(3)[0, 0] == -1
    D4 = gl.dihedral(4)
    assert gl.sign_character(D4)(D4.element("s0"))[0, 0] == -1
    with pytest.raises(InputError):
        gl.sign_character(gl.cyclic(5))


def test_regular_representation_is_faithful_permutation():
    for G in small_groups():
        rep = gl.regular_representation(G)
        for g in G.elements():
            mat = rep(g)
            assert np.array_equal(mat @ mat.conj().T, np.eye(G.order))
            assert set(np.unique(mat.real)) <= {0.0, 1.0}
        seen = {rep(g).tobytes() for g in G.elements()}
        assert len(seen) == G.order


def test_fourier_is_multiplicative():
    rng = random.Random(33)
    for G in small_groups():
        reps = [gl.trivial_representation(G), gl.regular_representation(G)]
        if G.labels == gl.quaternion8().labels:
            reps.append(gl.q8_representation(G))
        A = random_pure_matrix(rng, G, 3, 4)
        B = random_pure_matrix(rng, G, 4, 2)
        for rep in reps:
            lhs = gl.fourier(A @ B, rep).data
            rhs = gl.fourier(A, rep).data @ gl.fourier(B, rep).data
            assert np.abs(lhs - rhs).max() < 1e-12


def test_fourier_respects_star():
    rng = random.Random(37)
    for G in small_groups():
        rep = gl.regular_representation(G)
        A = random_pure_matrix(rng, G, 3, 3)
        lhs = gl.fourier(A.star(), rep).data
        rhs = gl.fourier(A, rep).data.conj().T
        assert np.abs(lhs - rhs).max() < 1e-12


def test_fourier_of_incidence_at_trivial_is_classical():
    for G in (gl.sign_group(), gl.quaternion8()):
        rep = gl.trivial_representation(G)
        F = gl.fourier(gl.incidence_phase(PAW, G).to_cg_matrix(), rep)
        assert np.array_equal(F.data.real, gl.incidence_matrix(PAW))
        assert np.abs(F.data.imag).max() == 0


def test_diamond_represented_adjacency_matches_displayed_matrix():
    Q8 = gl.quaternion8()
    psi = q8_gain(DIAMOND, DIAMOND_GAINS)
    rep = gl.q8_representation(Q8)
    F = gl.fourier(gl.gain_adjacency(psi), rep)
    expected = np.array([
        [0, 0, 1j, 0, 0, 0, 1, 0],
        [0, 0, 0, -1j, 0, 0, 0, 1],
        [-1j, 0, 0, 0, 1, 0, 1, 0],
        [0, 1j, 0, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 0, 0, 0, -1j],
        [0, 0, 0, 1, 0, 0, -1j, 0],
        [1, 0, 1, 0, 0, 1j, 0, 0],
        [0, 1, 0, 1, 1j, 0, 0, 0],
    ], dtype=np.complex128)
    assert np.array_equal(F.data, expected)


def test_diamond_pi_spectrum_closed_form():
    Q8 = gl.quaternion8()
    psi = q8_gain(DIAMOND, DIAMOND_GAINS)
    rep = gl.q8_representation(Q8)
    spec = gl.hermitian_spectrum(gl.fourier(gl.gain_adjacency(psi), rep))
    big = 0.5 * math.sqrt(10 + 2 * math.sqrt(17))
    small = 0.5 * math.sqrt(10 - 2 * math.sqrt(17))
    expected = sorted([-big, -big, -small, -small, small, small, big, big])
    assert np.allclose(spec.eigenvalues, expected, atol=1e-8)
    assert spec.multiplicity_groups() == [0, 0, 1, 1, 2, 2, 3, 3]


def test_hermitian_spectrum_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        gl.hermitian_spectrum(np.array([[0, 1], [0, 0]], dtype=complex))
    with pytest.raises(ValidationError):
        gl.hermitian_spectrum(np.zeros((2, 3)))


def test_eigenvalues_match_residual_certified_pairs():
    # cross-check the computed spectrum against independently computed
    # eigenpairs whose residuals are certified small
    rng = random.Random(39)
    for _ in range(30):
        G = rng.choice(small_groups())
        graph = random_connected_graph(rng, 6)
        psi = random_gain(rng, graph, G)
        rep = gl.regular_representation(G)
        M = gl.fourier(gl.gain_adjacency(psi), rep).data
        spec = gl.hermitian_spectrum(M)
        w, V = np.linalg.eigh(M)
        norm = np.linalg.norm(M, 2) or 1.0
        for idx in range(len(w)):
            residual = np.linalg.norm(M @ V[:, idx] - w[idx] * V[:, idx])
            assert residual <= 1e-9 * norm
        assert np.allclose(spec.eigenvalues, np.sort(w), atol=1e-12)


def test_pi_spectrum_is_switching_invariant():
    rng = random.Random(43)
    Q8 = gl.quaternion8()
    rep = gl.q8_representation(Q8)
    for _ in range(20):
        graph = random_connected_graph(rng, 6)
        psi = random_gain(rng, graph, Q8)
        f = random_vector(rng, Q8, graph.n)
        s1 = gl.hermitian_spectrum(gl.fourier(gl.gain_adjacency(psi), rep))
        s2 = gl.hermitian_spectrum(
            gl.fourier(gl.gain_adjacency(gl.switch(psi, f)), rep))
        assert np.allclose(s1.eigenvalues, s2.eigenvalues, atol=1e-10)


def test_regular_rep_of_trivial_gain_blows_up_classical_spectrum():
    for G in (gl.sign_group(), gl.quaternion8()):
        rep = gl.regular_representation(G)
        psi = gl.constant_gain(PAW, G, G.identity)
        spec = gl.hermitian_spectrum(gl.fourier(gl.gain_adjacency(psi), rep))
        classical = np.sort(np.linalg.eigvalsh(
            gl.classical_matrices(PAW)["adjacency"].astype(float)))
        expected = np.sort(np.repeat(classical, G.order))
        assert np.allclose(spec.eigenvalues, expected, atol=1e-10)


def test_represented_gain_matrices_laplacian_psd_when_s_is_identity():
    rng = random.Random(47)
    G = gl.quaternion8()
    rep = gl.q8_representation(G)
    psi = random_gain(rng, PAW, G)
    mats = gl.represented_gain_matrices(psi, G.identity, rep)
    spec = gl.hermitian_spectrum(mats["laplacian"])
    assert spec.eigenvalues[0] >= -1e-10


def test_multiplicity_groups_tolerance():
    spec = gl.Spectrum((0.0, 1e-10, 1.0, 1.0 + 1e-10, 2.0))
    assert spec.multiplicity_groups() == [0, 0, 1, 1, 2]


def test_classify_s2_image():
    Q8 = gl.quaternion8()
    rep = gl.q8_representation(Q8)
    assert gl.classify_s2_image(rep, Q8.element("-1")) == "minus_identity"
    assert gl.classify_s2_image(rep, Q8.identity) == "plus_identity"
    reg = gl.regular_representation(Q8)
    assert gl.classify_s2_image(reg, Q8.element("-1")) == "other"


def test_representation_file_roundtrip():
    Q8 = gl.quaternion8()
    rep = gl.q8_representation(Q8)
    d = gl.representation_to_dict(rep)
    back = gl.representation_from_dict(d, Q8)
    assert np.abs(back.images - rep.images).max() < 1e-12
    assert back.irreducible == rep.irreducible


def test_representation_file_builtin_and_errors():
    Q8 = gl.quaternion8()
    rep = gl.representation_from_dict({"builtin": "q8_2dim"}, Q8)
    assert rep.degree == 2
    with pytest.raises(InputError):
        gl.representation_from_dict({"degree": 1}, Q8)
    partial = {"degree": 1, "images": {"1": [[[1, 0]]]}}
    with pytest.raises(InputError):
        gl.representation_from_dict(partial, Q8)
