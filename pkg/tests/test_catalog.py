import itertools

import numpy as np
import pytest

from braidinv.catalog import catalog_model, catalog_names, parse_model_name, product_model
from braidinv.errors import InputError
from braidinv.modular import validate_modular_data

STANDARD_MODELS = [
    "trivial",
    "toric_code_zn(2)",
    "toric_code_zn(3)",
    "toric_code_zn(4)",
    "semion",
    "double_semion",
    "fibonacci",
    "fibonacci(-1)",
    "ising",
    "ising(-1)",
    "product(semion,ising)",
]


def s_matrix_candidates_from_ring(ring, dims, rng):
    """Brute-force oracle: candidate symmetric S with vacuum row = dims.

    The columns of a modular S are the simultaneous eigenvectors of the
    fusion matrices. Diagonalize a random weighting of them, rescale each
    eigenvector to column norm D with positive vacuum entry, and return all
    column orders that give a symmetric matrix with first row = dims.
    """
    n = ring.fusion_tensor.astype(float)
    weights = rng.uniform(1.0, 2.0, ring.rank)
    m = np.einsum("a,abc->bc", weights, n)
    _, vecs = np.linalg.eig(m)
    big_d = np.sqrt(np.sum(dims**2))
    cols = []
    for i in range(ring.rank):
        v = vecs[:, i]
        v = v * (big_d / np.linalg.norm(v))
        v = v * np.sign(v[0].real) if abs(v[0]) > 1e-12 else v
        cols.append(v)
    out = []
    for perm in itertools.permutations(range(ring.rank)):
        cand = np.stack([cols[p] for p in perm], axis=1)
        if np.max(np.abs(cand[0, :] - dims)) > 1e-6:
            continue
        if np.max(np.abs(cand - cand.T)) > 1e-6:
            continue
        out.append(cand)
    return out


def balancing_residual(md):
    """Ribbon identity: S[a,b] theta_a theta_b = sum_c N[a,b,c] theta_c d_c.

    The double braiding acts on each fusion channel c of a x b as the
    scalar theta_c / (theta_a theta_b); tracing weights each channel by
    theta_c d_c.
    """
    ring = md.ring
    worst = 0.0
    for a in range(ring.rank):
        for b in range(ring.rank):
            rhs = sum(
                ring.fusion_tensor[a, b, c] * md.theta[c] * md.dims[c]
                for c in range(ring.rank)
            )
            lhs = md.s[a, b] * md.theta[a] * md.theta[b]
            worst = max(worst, abs(lhs - rhs))
    return worst


class TestCatalogEntries:
    @pytest.mark.parametrize("name", STANDARD_MODELS)
    def test_entry_is_strict_valid(self, name):
        md = catalog_model(name)
        assert validate_modular_data(md, strict=True).ok

    @pytest.mark.parametrize("name", STANDARD_MODELS)
    def test_balancing_identity(self, name):
        md = catalog_model(name)
        assert balancing_residual(md) < 1e-9

    def test_toric_code_z2_data(self):
        md = catalog_model("toric_code_zn(2)")
        names = [l.name for l in md.ring.labels]
        assert names == ["1", "m", "e", "f"]
        assert np.allclose(md.theta, [1, 1, 1, -1], atol=1e-12)
        # oracle: bicharacter of the hyperbolic form on (Z2)^2
        elements = [(0, 0), (0, 1), (1, 0), (1, 1)]
        expected = np.array(
            [
                [(-1.0) ** (j * kk + k * jj) for jj, kk in elements]
                for j, k in elements
            ]
        )
        assert np.allclose(md.s, expected, atol=1e-12)

    def test_toric_code_z3_twists(self):
        md = catalog_model("toric_code_zn(3)")
        w = np.exp(2j * np.pi / 3)
        elements = [(j, k) for j in range(3) for k in range(3)]
        expected = [w ** (j * k) for j, k in elements]
        assert np.allclose(md.theta, expected, atol=1e-12)

    def test_semion_data(self):
        md = catalog_model("semion")
        assert np.allclose(md.theta, [1.0, 1j], atol=1e-12)
        assert np.allclose(md.s, [[1, 1], [1, -1]], atol=1e-12)

    def test_double_semion_twists(self):
        md = catalog_model("double_semion")
        assert sorted(np.round(md.theta, 9).tolist(), key=lambda z: (z.real, z.imag)) == [
            (-1j),
            (1j),
            (1 + 0j),
            (1 + 0j),
        ]


class TestGoldenRatioModels:
    def test_fibonacci_s_matrix_from_fusion_oracle(self):
        md = catalog_model("fibonacci")
        rng = np.random.default_rng(11)
        candidates = s_matrix_candidates_from_ring(md.ring, md.dims, rng)
        assert candidates, "oracle found no symmetric candidate"
        assert any(np.max(np.abs(c - md.s)) < 1e-6 for c in candidates)

    def test_fibonacci_twist_from_balancing_equation(self):
        md = catalog_model("fibonacci")
        phi = (1 + np.sqrt(5)) / 2
        # S[tau,tau] = -1 forces theta^2 + phi theta + 1 = 0
        roots = np.roots([1.0, phi, 1.0])
        assert min(abs(md.theta[1] - r) for r in roots) < 1e-12
        assert md.theta[1] == pytest.approx(np.exp(4j * np.pi / 5), abs=1e-12)
        conj = catalog_model("fibonacci(-1)")
        assert conj.theta[1] == pytest.approx(np.exp(-4j * np.pi / 5), abs=1e-12)
        assert np.allclose(conj.s, md.s, atol=1e-12)

    def test_ising_s_matrix_from_fusion_oracle(self):
        md = catalog_model("ising")
        rng = np.random.default_rng(5)
        candidates = s_matrix_candidates_from_ring(md.ring, md.dims, rng)
        assert any(np.max(np.abs(c - md.s)) < 1e-6 for c in candidates)

    def test_ising_twists(self):
        md = catalog_model("ising")
        # balancing at (sigma, sigma): S = 0 forces theta_psi = -1
        assert md.theta[2] == pytest.approx(-1.0, abs=1e-12)
        assert md.theta[1] == pytest.approx(np.exp(1j * np.pi / 8), abs=1e-12)
        conj = catalog_model("ising(-1)")
        assert conj.theta[1] == pytest.approx(np.exp(-1j * np.pi / 8), abs=1e-12)


class TestProduct:
    def test_kronecker_structure(self):
        a = catalog_model("semion")
        b = catalog_model("ising")
        md = catalog_model("product(semion,ising)")
        assert np.max(np.abs(md.s - np.kron(a.s, b.s))) < 1e-12
        assert np.max(np.abs(md.theta - np.kron(a.theta, b.theta))) < 1e-12
        assert np.max(np.abs(md.dims - np.kron(a.dims, b.dims))) < 1e-12
        want = np.einsum("ace,bdf->abcdef", a.ring.fusion_tensor, b.ring.fusion_tensor)
        assert np.array_equal(md.ring.fusion_tensor, want.reshape(6, 6, 6))

    def test_product_model_direct(self):
        md = product_model(catalog_model("trivial"), catalog_model("fibonacci"))
        assert md.rank == 2
        assert validate_modular_data(md, strict=True).ok


class TestNameGrammar:
    def test_parse_nested(self):
        base, params = parse_model_name("product(toric_code_zn(2), product(semion,ising))")
        assert base == "product"
        assert params[0] == ("toric_code_zn", [2])
        assert params[1] == ("product", [("semion", []), ("ising", [])])

    def test_unknown_name(self):
        with pytest.raises(InputError):
            catalog_model("mystery")

    def test_bad_params(self):
        with pytest.raises(InputError):
            catalog_model("toric_code_zn")
        with pytest.raises(InputError):
            catalog_model("toric_code_zn(0)")
        with pytest.raises(InputError):
            catalog_model("toric_code_zn(9)")
        with pytest.raises(InputError):
            catalog_model("semion(2)")
        with pytest.raises(InputError):
            catalog_model("product(semion)")

    def test_trailing_junk(self):
        with pytest.raises(InputError):
            parse_model_name("semion)")

    def test_catalog_names_listing(self):
        names = catalog_names()
        assert any("toric_code_zn" in n for n in names)
        assert any("product" in n for n in names)
