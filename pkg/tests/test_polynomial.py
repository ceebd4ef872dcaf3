from signedperm.polynomial import S, T, BivarPoly


def test_arithmetic():
    p = 1 + S * T
    assert p == BivarPoly({(0, 0): 1, (1, 1): 1})
    assert (p - p) == 0
    assert (1 - S) * (1 + S) == 1 - S * S
    assert repr(2 * S * T * T + 3) == "3 + 2*st^2"


def test_derivatives():
    assert BivarPoly({(0, 0): 7}).d_s() == 0
    assert BivarPoly({(0, 0): 7}).d_t() == 0
    p = 3 * S * S * T + S
    assert p.d_s() == 6 * S * T + 1
    assert p.d_t() == 3 * S * S
    assert p.d_s().d_t() == p.d_t().d_s() == 6 * S
