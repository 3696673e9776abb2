"""Smoke tests for the python surface of the kernel."""

import json
import math

import pytest

import splitcayley as sc


def oct_basis(i):
    c = ["0"] * 8
    c[i] = "1"
    return c


def im_basis(i):
    c = ["0"] * 7
    c[i - 1] = "1"
    return c


def test_basis_products():
    assert sc.oct_mul(oct_basis(1), oct_basis(2)) == oct_basis(3)
    e4e5 = sc.oct_mul(oct_basis(4), oct_basis(5))
    assert e4e5[1] == "-1" and all(v == "0" for k, v in enumerate(e4e5) if k != 1)


def test_norm_composition():
    x = ["1/2", "1", "0", "-3", "0", "2/3", "0", "1"]
    y = ["0", "-1", "5/4", "0", "2", "0", "1/3", "0"]
    lhs = sc.to_fraction(sc.norm(sc.oct_mul(x, y)))
    rhs = sc.to_fraction(sc.norm(x)) * sc.to_fraction(sc.norm(y))
    assert lhs == rhs


def test_conjugation_antihomomorphism():
    x = ["1", "2", "0", "0", "1/2", "0", "0", "0"]
    y = ["0", "0", "3", "0", "0", "0", "0", "-1/3"]
    assert sc.oct_conj(sc.oct_mul(x, y)) == sc.oct_mul(sc.oct_conj(y), sc.oct_conj(x))


def test_cross_and_triple():
    assert sc.cross(im_basis(1), im_basis(2)) == im_basis(3)
    assert sc.triple(im_basis(1), im_basis(2), im_basis(3)) == "1"
    assert sc.triple(im_basis(1), im_basis(4), im_basis(5)) == "-1"
    assert sc.psi(im_basis(4), im_basis(5), im_basis(6), im_basis(7)) == "1"
    assert sc.metric(im_basis(7), im_basis(7)) == "-1"


def test_sphere_structures():
    assert sc.structure_apply("S24", im_basis(1), im_basis(2)) == im_basis(3)
    p = sc.structure_apply("S33", im_basis(4), im_basis(1))
    assert p[4] == "-1"
    k = sc.hitchin_K("S24", im_basis(1), im_basis(2))
    assert k[2] == "18"
    k33 = sc.hitchin_K("S33", im_basis(4), im_basis(1))
    assert k33[4] == "-18"
    exp, closed = sc.nijenhuis("S24", im_basis(1), im_basis(2), im_basis(4))
    assert exp == closed and closed[6] == "8"
    assert sc.laplacian_check("S24", im_basis(1), im_basis(2), im_basis(3)) == "12"
    assert sc.laplacian_check("S33", im_basis(4), im_basis(1), im_basis(5)) == "-12"


def test_rejects_non_tangent():
    with pytest.raises(ValueError):
        sc.structure_apply("S24", im_basis(1), im_basis(1))


def test_stereographic_roundtrip():
    x = (1.25, 0.0, 0.0, 0.75, 0.0, 0.0, 0.0)
    head, tail = sc.stereographic("S24", x)
    assert math.isclose(head[0], 1.0, abs_tol=1e-12)
    assert math.isclose(tail[0], 0.6, abs_tol=1e-12)
    back = sc.stereographic_inverse("S24", head, tail)
    assert max(abs(a - b) for a, b in zip(back, x)) < 1e-12


def test_pullback_squares():
    x = (1.25, 0.0, 0.0, 0.75, 0.0, 0.0, 0.0)
    y = (0.3, 0.4, -0.2, 0.5, 0.1, 0.0, 0.2)
    g = sum(a * b * s for a, b, s in zip(x, y, (1, 1, 1, -1, -1, -1, -1)))
    y = tuple(v - g * xv for v, xv in zip(y, x))  # project to the tangent space
    jy = sc.product_structure_pullback("S24", x, y)
    jjy = sc.product_structure_pullback("S24", x, jy)
    assert max(abs(a + b) for a, b in zip(jjy, y)) < 1e-9


def test_r8_operations():
    u0, U = "0", im_basis(1)
    applied = sc.structure8_apply("plus", u0, U, oct_basis(0))
    assert applied == oct_basis(1)
    twice = sc.structure8_apply("plus", u0, U, applied)
    assert twice[0] == "-1"
    assert sc.omega8("plus", u0, U, oct_basis(0), oct_basis(1)) == "1"
    assert sc.domega8("plus", u0, U, oct_basis(2), oct_basis(2), oct_basis(3)) == "0"


def test_run_suite_json_and_determinism():
    a = sc.run_suite("algebra", trials=25, seed=7)
    b = sc.run_suite("algebra", trials=25, seed=7)
    assert a == b
    report = json.loads(a)
    assert report["suite"] == "algebra"
    assert report["counts"]["fail"] == 0
    assert all(c["status"] == "pass" for c in report["checks"])
    assert "algebra" in sc.suite_names()


def test_fraction_helpers():
    assert sc.from_fraction(sc.to_fraction("3/4") * 2) == "3/2"
    assert sc.from_fraction(2) == "2"
