import math

import numpy as np
import pytest

import dftalg


def test_field_order():
    assert dftalg.field_order_for(3) == 12
    assert dftalg.field_order_for(4) == 8


def test_dft_is_unitary():
    phi = dftalg.operator(6, "phi")
    assert np.allclose(phi @ phi.conj().T, np.eye(6), atol=1e-12)


def test_position_diagonal():
    x = dftalg.operator(3, "X")
    assert np.allclose(np.diag(x).real, [0, math.sqrt(3), -math.sqrt(3)])


def test_intertwining_matches_numpy():
    n = 7
    a, phi = dftalg.operator(n, "A"), dftalg.operator(n, "phi")
    assert np.abs(a @ phi - 1j * phi @ a).max() < 1e-12


def test_verify_aw3():
    recs = dftalg.verify(5, "aw3")
    assert [r["verdict"] for r in recs] == ["ExactZero", "ResidualNorm"]


def test_verify_reports_degenerate_at_four():
    (rec,) = dftalg.verify([4], ["cubic"], backend="exact")
    assert rec["verdict"] == "Degenerate"


def test_rank_and_dimension():
    assert dftalg.exact_rank(5, "A") == 4
    assert dftalg.exact_rank(6, "A") == 4
    assert dftalg.intertwiner_space_dimension(5) == 2


def test_spectrum_multiplicities():
    rep = dftalg.spectrum(8, "Z")
    assert [c["multiplicity"] for c in rep["multiplicities"]] == [1, 2, 2, 2, 1]


def test_exact_dump_form():
    dump = dftalg.operator_exact(4, "Ztilde")
    assert dump["entries"][1][0]["coeffs"][0] == "1"
    assert dump["entries"][1][0]["order"] == 8


def test_errors():
    with pytest.raises(ValueError, match="N must be"):
        dftalg.operator(2, "X")
    with pytest.raises(ValueError):
        dftalg.verify(5, "bogus")
