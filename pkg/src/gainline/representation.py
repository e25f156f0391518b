"""Unitary representations, the matrix Fourier transform and spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import CGMatrix
from .errors import InputError, ValidationError
from .gain import GainFunction, gain_adjacency, s_laplacian
from .group import Element, FiniteGroup

#: Homomorphism / unitarity validation tolerance.
VALIDATION_TOL = 1e-10
#: Per-pair eigenresidual target, relative to the matrix norm.
EIGEN_RESIDUAL_TOL = 1e-9


class UnitaryRepresentation:
    """A per-element table of unitary matrices g -> pi(g).

    Validated at construction: pi(1) = I, pi(g)pi(h) = pi(gh) and
    pi(g)* pi(g) = I, all within ``tol``.  Irreducibility is declared by the
    caller, never verified.
    """

    def __init__(self, group: FiniteGroup, images: np.ndarray,
                 irreducible: bool = False, tol: float = VALIDATION_TOL):
        images = np.asarray(images, dtype=np.complex128)
        if images.ndim != 3 or images.shape[0] != group.order \
                or images.shape[1] != images.shape[2]:
            raise ValidationError(
                "images must be an (order, k, k) array of matrices")
        k = images.shape[1]
        eye = np.eye(k)
        if np.abs(images[0] - eye).max() > tol:
            raise ValidationError("pi(identity) is not the identity matrix")
        for g in group.elements():
            if np.abs(images[g].conj().T @ images[g] - eye).max() > tol:
                raise ValidationError(f"pi({group.label(g)}) is not unitary")
        for g in group.elements():
            for h in group.elements():
                gh = group.mult[g][h]
                if np.abs(images[g] @ images[h] - images[gh]).max() > tol:
                    raise ValidationError(
                        f"pi is not a homomorphism at ({group.label(g)}, "
                        f"{group.label(h)})")
        self.group = group
        self.degree = k
        self.images = images
        self.irreducible = bool(irreducible)

    def __call__(self, g: Element) -> np.ndarray:
        return self.images[g]

    def __repr__(self) -> str:
        return (f"UnitaryRepresentation({self.group.name}, degree={self.degree}, "
                f"irreducible={self.irreducible})")


@dataclass(frozen=True)
class RepresentedMatrix:
    """A complex block matrix, one degree-sized block per CG entry."""

    data: np.ndarray
    block_rows: int
    block_cols: int
    degree: int


def fourier(A: CGMatrix, rep: UnitaryRepresentation) -> RepresentedMatrix:
    """Blockwise Fourier transform: entry f -> sum_x f_x pi(x)."""
    if A.group != rep.group:
        raise ValidationError("representation defined on a different group")
    k = rep.degree
    out = np.zeros((A.rows * k, A.cols * k), dtype=np.complex128)
    for i in range(A.rows):
        for j in range(A.cols):
            entry = A.entries[i][j]
            if not entry.coeffs:
                continue
            block = out[i * k:(i + 1) * k, j * k:(j + 1) * k]
            for g, c in entry.coeffs.items():
                block += c * rep.images[g]
    return RepresentedMatrix(out, A.rows, A.cols, k)


@dataclass(frozen=True)
class Spectrum:
    """Ascending real eigenvalues, with multiplicity."""

    eigenvalues: tuple[float, ...]

    def multiplicity_groups(self, tol: float = 1e-8) -> list[int]:
        """Group id per eigenvalue; consecutive values within tol share one."""
        ids = []
        current = 0
        for i, lam in enumerate(self.eigenvalues):
            if i > 0 and lam - self.eigenvalues[i - 1] > tol:
                current += 1
            ids.append(current)
        return ids


def hermitian_spectrum(M: RepresentedMatrix | np.ndarray,
                       tol: float = VALIDATION_TOL) -> Spectrum:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    data = M.data if isinstance(M, RepresentedMatrix) else np.asarray(M)
    if data.shape[0] != data.shape[1]:
        raise ValidationError("spectrum requires a square matrix")
    if data.size and np.abs(data - data.conj().T).max() > tol:
        raise ValidationError("matrix is not Hermitian within tolerance")
    if data.size == 0:
        return Spectrum(())
    values = np.linalg.eigvalsh(data)
    return Spectrum(tuple(float(v) for v in values))


def represented_gain_matrices(psi: GainFunction, s: Element,
                              rep: UnitaryRepresentation) -> dict[str, RepresentedMatrix]:
    """Fourier transforms of the gain adjacency and the s-Laplacian."""
    return {
        "adjacency": fourier(gain_adjacency(psi), rep),
        "laplacian": fourier(s_laplacian(psi, s), rep),
    }


# -- builtin representations ------------------------------------------------

def trivial_representation(group: FiniteGroup) -> UnitaryRepresentation:
    images = np.ones((group.order, 1, 1), dtype=np.complex128)
    return UnitaryRepresentation(group, images, irreducible=True)


def regular_representation(group: FiniteGroup) -> UnitaryRepresentation:
    """Permutation matrices of left translation; faithful and unitary."""
    n = group.order
    images = np.zeros((n, n, n), dtype=np.complex128)
    for g in group.elements():
        for h in group.elements():
            images[g, group.mult[g][h], h] = 1
    return UnitaryRepresentation(group, images, irreducible=(n == 1))


def root_of_unity_representation(group: FiniteGroup,
                                 power: int = 1) -> UnitaryRepresentation:
    """Degree-1 character of a cyclic group: generator -> e^(2 pi i power / n).

    Requires the group to be cyclic with the table of Z_n (which covers the
    cyclic and t4 builders).
    """
    n = group.order
    expected = [[(a + b) % n for b in range(n)] for a in range(n)]
    if [list(r) for r in group.mult] != expected:
        raise InputError(
            f"group {group.name} does not carry the standard cyclic table")
    omega = np.exp(2j * np.pi * power / n)
    images = np.array([[[omega ** a]] for a in range(n)])
    return UnitaryRepresentation(group, images, irreducible=True)


def sign_character(group: FiniteGroup) -> UnitaryRepresentation:
    """An order-2 character: -1 on the non-trivial coset of an index-2 subgroup.

    Supported for the sign group, even cyclic groups (parity of the
    exponent) and dihedral groups (reflections -> -1).
    """
    n = group.order
    values: list[int] | None = None
    if group.name == "sign":
        values = [1, -1]
    elif group.name.startswith("Z") and n % 2 == 0:
        values = [1 if a % 2 == 0 else -1 for a in range(n)]
    elif group.name == "T4":
        values = [1, -1, 1, -1]
    elif group.name.startswith("D") and 2 * (n // 2) == n:
        half = n // 2
        values = [1] * half + [-1] * half
    if values is None:
        raise InputError(f"no builtin sign character for group {group.name}")
    images = np.array([[[float(v)]] for v in values])
    return UnitaryRepresentation(group, images, irreducible=True)


_Q8_2DIM = {
    "1": np.eye(2),
    "i": np.array([[0, -1], [1, 0]], dtype=np.complex128),
    "j": np.array([[0, 1j], [1j, 0]]),
    "k": np.array([[-1j, 0], [0, 1j]]),
}


def q8_representation(group: FiniteGroup) -> UnitaryRepresentation:
    """The faithful 2-dimensional representation of the quaternion group."""
    if group.labels != ("1", "i", "j", "k", "-1", "-i", "-j", "-k"):
        raise InputError("q8_2dim requires the builtin quaternion8 group")
    images = np.zeros((8, 2, 2), dtype=np.complex128)
    for b, label in enumerate(("1", "i", "j", "k")):
        images[b] = _Q8_2DIM[label]
        images[4 + b] = -_Q8_2DIM[label]
    return UnitaryRepresentation(group, images, irreducible=True)


def builtin_representation(group: FiniteGroup, which: str,
                           **kwargs) -> UnitaryRepresentation:
    builders = {
        "trivial": trivial_representation,
        "regular": regular_representation,
        "root_of_unity": root_of_unity_representation,
        "sign_character": sign_character,
        "q8_2dim": q8_representation,
    }
    try:
        builder = builders[which]
    except KeyError:
        raise InputError(f"unknown builtin representation {which!r}")
    return builder(group, **kwargs)


# -- serialization ----------------------------------------------------------

def _parse_complex_matrix(rows, degree: int) -> np.ndarray:
    out = np.zeros((degree, degree), dtype=np.complex128)
    if len(rows) != degree or any(len(r) != degree for r in rows):
        raise InputError("representation image has wrong shape")
    for i, row in enumerate(rows):
        for j, pair in enumerate(row):
            if len(pair) != 2:
                raise InputError("complex entries must be [re, im] pairs")
            out[i, j] = float(pair[0]) + 1j * float(pair[1])
    return out


def representation_from_dict(data: dict, group: FiniteGroup) -> UnitaryRepresentation:
    """Parse ``{"degree": k, "images": {label: [[[re, im], ...], ...]}}``.

    A ``"builtin"`` key selects a named construction instead of explicit
    images.
    """
    if "builtin" in data:
        kwargs = {}
        if "power" in data:
            kwargs["power"] = int(data["power"])
        return builtin_representation(group, data["builtin"], **kwargs)
    try:
        degree = int(data["degree"])
        image_map = data["images"]
    except KeyError as exc:
        raise InputError(f"representation description needs {exc} field")
    images = np.zeros((group.order, degree, degree), dtype=np.complex128)
    seen = set()
    for label, rows in image_map.items():
        g = group.element(str(label))
        images[g] = _parse_complex_matrix(rows, degree)
        seen.add(g)
    if len(seen) != group.order:
        raise InputError("representation must assign a matrix to every element")
    return UnitaryRepresentation(group, images,
                                 irreducible=bool(data.get("irreducible", False)))


def representation_to_dict(rep: UnitaryRepresentation) -> dict:
    images = {}
    for g in rep.group.elements():
        mat = rep.images[g]
        images[rep.group.label(g)] = [
            [[float(mat[i, j].real), float(mat[i, j].imag)]
             for j in range(rep.degree)]
            for i in range(rep.degree)]
    return {"degree": rep.degree, "irreducible": rep.irreducible, "images": images}
