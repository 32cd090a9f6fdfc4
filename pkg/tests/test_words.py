from math import gcd

from hypothesis import given, strategies as st

from geospec.words import (BiEPWord, EPWord, balance_witness, central_word, christoffel,
                           characteristic_word, ep_compare, factor_complexity, forbidden_scan,
                           in_F, iota, iota_attaining, is_balanced, is_christoffel_rotation,
                           periodic, phi, thue_morse, fibonacci_word, NotParsable)


def brute_balanced(w):
    for n in range(1, len(w) + 1):
        cs = {w[i:i + n].count("1") for i in range(len(w) - n + 1)}
        if max(cs) - min(cs) > 1:
            return False
    return True


def christoffel_oracle(p, q, upper=False):
    # lower word: letter i is floor((i+1)p/q) - floor(ip/q)
    if upper:
        return "".join(str(-((-(i + 1) * p) // q) + ((-i * p) // q)) for i in range(q))
    return "".join(str((i + 1) * p // q - i * p // q) for i in range(q))


def test_christoffel_matches_mechanical_formula():
    for q in range(2, 40):
        for p in range(1, q):
            if gcd(p, q) == 1:
                assert christoffel(p, q) == christoffel_oracle(p, q)
                assert christoffel(p, q, upper=True) == christoffel_oracle(p, q, True)


def test_christoffel_example():
    assert christoffel(3, 8) == "00100101"
    assert central_word(3, 8) == "010010"


@given(st.text(alphabet="01", min_size=1, max_size=16))
def test_balance_matches_brute_force(w):
    assert is_balanced(w) == brute_balanced(w)
    if not is_balanced(w):
        v = balance_witness(w)
        assert v is not None and v == v[::-1]
        assert "0" + v + "0" in w and "1" + v + "1" in w


@given(st.text(alphabet="01", max_size=6))
def test_F_members_are_unbalanced(v):
    u = "0" + v + "01" + v[::-1] + "1"
    assert in_F(u) and not is_balanced(u)
    assert forbidden_scan(u)


def test_counterexample_word():
    w = "1010010001"
    assert not is_balanced(w)
    assert forbidden_scan(w) == []
    assert balance_witness(w) == "0"
    assert forbidden_scan("000101") == [(0, "0", "0v01~v1")]


def test_sturmian_complexity():
    w = fibonacci_word(400)
    assert all(factor_complexity(w, n) == n + 1 for n in range(1, 15))
    assert characteristic_word([1], 13) == "0100101001001"


def test_christoffel_iota():
    for q in range(3, 20):
        for p in range(1, q):
            if gcd(p, q) == 1:
                r = iota(periodic(christoffel(p, q)))
                assert r.exact and r.value == q - 2
                assert len(iota_attaining(christoffel(p, q))) == 2


def test_iota_special_cases():
    assert iota(periodic("0")).note
    assert iota(thue_morse(64)).value >= 6
    assert not iota(thue_morse(64)).exact


def test_phi_recoding():
    out, a = phi(periodic("100"))
    assert a == 2 and set(out.right_period) == {"0"}
    x = periodic(christoffel(3, 11))
    y, a = phi(x)
    assert is_christoffel_rotation("".join(y.right_period))
    try:
        phi(periodic("0011"))
        assert False
    except NotParsable:
        pass


@given(st.lists(st.integers(-2, 2), max_size=4), st.lists(st.integers(-2, 2), min_size=1, max_size=4),
       st.integers(0, 6))
def test_epword_shift_and_compare(pre, per, k):
    w = EPWord(tuple(pre), tuple(per))
    assert [w.shift(k)[i] for i in range(10)] == [w[k + i] for i in range(10)]
    assert ep_compare(w, w) == 0
    assert w.canonical() == w.canonical().canonical()
    assert hash(w) == hash(EPWord(tuple(pre) + tuple(per[:1]), tuple(per[1:]) + tuple(per[:1])))


def test_biword_window_and_shift():
    x = BiEPWord(("a",), ("x", "y", "z"), ("b",), 1)
    assert x.window(-3, 4) == tuple("aaxyzbb")[0:7] or "".join(x.window(-3, 4)) == "aaxyzbb"
    assert x.shift(1)[0] == "z"
