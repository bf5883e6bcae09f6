"""Field and dense-kernel tests, including packed-vs-naive agreement."""

import numpy as np
import pytest

from extax.errors import UnsupportedField
from extax.linalg import Mat, conway_polynomial, field_make
from extax.linalg import kernels


def all_irreducible_quadratics_gf2():
    # Independent oracle: enumerate monic quadratics over GF(2) and keep
    # those with no root.
    out = []
    for b in (0, 1):
        for c in (0, 1):
            f = (c, b, 1)
            has_root = any((x * x + b * x + c) % 2 == 0 for x in (0, 1))
            if not has_root:
                out.append(f)
    return out


class TestField:
    def test_prime_fields(self):
        assert field_make(2, 1).q == 2
        assert field_make(7, 2).q == 49

    def test_gf4_modulus_is_unique_irreducible(self):
        # Only x^2+x+1 is irreducible over GF(2), so the canonical modulus
        # is forced; its generator x satisfies x^2 = x + 1.
        quads = all_irreducible_quadratics_gf2()
        assert quads == [(1, 1, 1)]
        f4 = field_make(2, 2)
        assert f4.modulus == (1, 1, 1)
        x = 2  # encoding of x
        assert f4.mul_scalar(x, x) == f4.add_scalar(x, 1)

    def test_rejects_unsupported(self):
        with pytest.raises(UnsupportedField):
            field_make(11, 1)
        with pytest.raises(UnsupportedField):
            field_make(2, 17)

    @pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2)])
    def test_field_axioms_sampled(self, p, k):
        f = field_make(p, k)
        rng = np.random.default_rng(0)
        for _ in range(200):
            a, b, c = (int(x) for x in rng.integers(0, f.q, 3))
            assert f.mul_scalar(a, f.add_scalar(b, c)) == f.add_scalar(
                f.mul_scalar(a, b), f.mul_scalar(a, c)
            )
            if a:
                assert f.mul_scalar(a, f.inv_scalar(a)) == 1

    def test_conway_tower_compatibility(self):
        # The canonical embedding of GF(4) into GF(16) must send the GF(4)
        # generator to an element with the GF(4) modulus as min poly.
        small = field_make(2, 2)
        big = field_make(2, 4)
        emb = small.embedding_into(big)
        x_img = int(emb[2])
        # check x_img^2 + x_img + 1 = 0 in GF(16)
        sq = big.mul_scalar(x_img, x_img)
        assert big.add_scalar(big.add_scalar(sq, x_img), 1) == 0
        # embedding is a field hom on samples
        rng = np.random.default_rng(1)
        for _ in range(100):
            a, b = (int(v) for v in rng.integers(0, 4, 2))
            assert int(emb[small.mul_scalar(a, b)]) == big.mul_scalar(int(emb[a]), int(emb[b]))
            assert int(emb[small.add_scalar(a, b)]) == big.add_scalar(int(emb[a]), int(emb[b]))

    def test_conway_gf8(self):
        assert conway_polynomial(2, 3) == (1, 1, 0, 1)  # x^3 + x + 1

    def test_frobenius(self):
        f = field_make(3, 2)
        fr = f.frobenius_map(1)
        for a in range(9):
            assert int(fr[a]) == f.pow_scalar(a, 3)


FIELDS = [(2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (7, 2)]


class TestKernels:
    @pytest.mark.parametrize("p,k", FIELDS)
    def test_gemm_matches_naive(self, p, k):
        f = field_make(p, k)
        rng = np.random.default_rng(7)
        a = rng.integers(0, f.q, (13, 9)).astype(f.dtype)
        b = rng.integers(0, f.q, (9, 11)).astype(f.dtype)
        assert np.array_equal(kernels.gemm(f, a, b), kernels.naive_gemm(f, a, b))

    @pytest.mark.parametrize("p,k", FIELDS)
    def test_rref_matches_naive(self, p, k):
        f = field_make(p, k)
        rng = np.random.default_rng(11)
        for shape in [(8, 8), (12, 7), (7, 12)]:
            a = rng.integers(0, f.q, shape).astype(f.dtype)
            r1, rk1, piv1 = kernels.rref(f, a)
            r2, rk2, piv2 = kernels.naive_rref(f, a)
            assert rk1 == rk2 and piv1 == piv2
            assert np.array_equal(r1[:rk1], r2[:rk2])

    def test_rref_trivial_cases(self):
        f = field_make(2, 1)
        eye = np.eye(5, dtype=np.uint8)
        _, rk, piv = kernels.rref(f, eye)
        assert rk == 5 and piv == [0, 1, 2, 3, 4]
        zero = np.zeros((4, 6), dtype=np.uint8)
        _, rk, _ = kernels.rref(f, zero)
        assert rk == 0
        a = np.array([[1, 1], [1, 1]], dtype=np.uint8)
        _, rk, piv = kernels.rref(f, a)
        assert rk == 1 and piv == [0]

    def test_rref_idempotent(self):
        rng = np.random.default_rng(3)
        for p, k in FIELDS:
            f = field_make(p, k)
            a = rng.integers(0, f.q, (20, 14)).astype(f.dtype)
            r1, rk, piv = kernels.rref(f, a)
            r2, rk2, piv2 = kernels.rref(f, r1)
            assert np.array_equal(r1, r2) and rk == rk2 and piv == piv2

    def test_rank_transpose(self):
        rng = np.random.default_rng(5)
        for p, k in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2)]:
            f = field_make(p, k)
            for n in (50, 200):
                a = rng.integers(0, f.q, (n, n)).astype(f.dtype)
                assert kernels.rank(f, a) == kernels.rank(f, np.ascontiguousarray(a.T))

    def test_nullspace_properties(self):
        f = field_make(3, 1)
        eye = np.eye(6, dtype=np.uint8)
        assert kernels.nullspace(f, eye).shape[0] == 0
        zero = np.zeros((5, 5), dtype=np.uint8)
        assert kernels.nullspace(f, zero).shape[0] == 5
        f2 = field_make(2, 1)
        a = np.array([[1, 1], [0, 0]], dtype=np.uint8)
        ns = kernels.nullspace(f2, a)
        assert np.array_equal(ns, [[1, 1]])
        rng = np.random.default_rng(9)
        for p, k in FIELDS:
            fld = field_make(p, k)
            a = rng.integers(0, fld.q, (17, 23)).astype(fld.dtype)
            ns = kernels.nullspace(fld, a)
            assert ns.shape[0] == 23 - kernels.rank(fld, a)
            # rows independent and annihilated
            assert kernels.rank(fld, ns) == ns.shape[0]
            prod = kernels.gemm(fld, a, np.ascontiguousarray(ns.T))
            assert not np.any(prod)

    def test_packed_gf2_agrees_with_naive_64(self):
        f = field_make(2, 1)
        rng = np.random.default_rng(13)
        for _ in range(5):
            a = rng.integers(0, 2, (64, 64)).astype(np.uint8)
            b = rng.integers(0, 2, (64, 64)).astype(np.uint8)
            assert np.array_equal(kernels.mul2_packed(a, b), kernels.naive_gemm(f, a, b))
            r1, rk1, piv1 = kernels._rref2_packed(a)
            r2, rk2, piv2 = kernels.naive_rref(f, a)
            assert rk1 == rk2 and piv1 == piv2 and np.array_equal(r1, r2)

    def test_pack_roundtrip(self):
        rng = np.random.default_rng(17)
        a = rng.integers(0, 2, (10, 100)).astype(np.uint8)
        assert np.array_equal(kernels.unpack2(kernels.pack2(a), 100), a)

    def test_inverse(self):
        rng = np.random.default_rng(19)
        for p, k in FIELDS:
            f = field_make(p, k)
            while True:
                a = rng.integers(0, f.q, (30, 30)).astype(f.dtype)
                if kernels.rank(f, a) == 30:
                    break
            inv = kernels.inverse(f, a)
            prod = kernels.gemm(f, a, inv)
            assert np.array_equal(prod, np.eye(30, dtype=f.dtype))


class TestMat:
    def test_kron_identity(self):
        f = field_make(2, 1)
        i2, i3 = Mat.identity(f, 2), Mat.identity(f, 3)
        assert i2.kron(i3) == Mat.identity(f, 6)

    def test_kron_dims(self):
        f = field_make(3, 1)
        rng = np.random.default_rng(2)
        a = Mat.random(f, 3, 3, rng)
        b = Mat.random(f, 3, 3, rng)
        assert a.kron(b).rows == 9 and a.kron(b).cols == 9

    def test_kron_rank_multiplicative(self):
        # Oracle: direct rank of the 16x16 Kronecker product.
        f = field_make(3, 1)
        rng = np.random.default_rng(21)
        for _ in range(10):
            a = Mat.random(f, 4, 4, rng)
            b = Mat.random(f, 4, 4, rng)
            assert a.kron(b).rank() == a.rank() * b.rank()

    def test_kron_mixed_product(self):
        f = field_make(2, 2)
        rng = np.random.default_rng(23)
        a, b = Mat.random(f, 3, 4, rng), Mat.random(f, 2, 5, rng)
        c, d = Mat.random(f, 4, 3, rng), Mat.random(f, 5, 2, rng)
        assert a.kron(b) @ c.kron(d) == (a @ c).kron(b @ d)

    def test_text_roundtrip(self):
        f = field_make(7, 2)
        rng = np.random.default_rng(29)
        a = Mat.random(f, 5, 8, rng)
        again = Mat.from_text(a.to_text())
        assert again == a

    def test_frobenius_entrywise(self):
        f = field_make(2, 2)
        a = Mat(f, [[2, 3], [1, 0]])
        tw = a.frobenius(1)
        assert int(tw.a[0, 0]) == f.pow_scalar(2, 2)
        assert tw.frobenius(1) == a
