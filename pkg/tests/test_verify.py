import itertools
from fractions import Fraction

import pytest

from detdecomp import (GF, QQ, CapExceeded, DecomposableTerm, Decomposition, LinearVector,
                       bell_number, best_known, derksen3, even_general, expand, laplace_lift,
                       leibniz, rank_bound_table, verify)
from detdecomp.verify import leibniz_tensor

from oracles import brute_expand, brute_sign


@pytest.mark.parametrize("n", range(1, 8))
def test_leibniz_tensor_entries(n):
    t = leibniz_tensor(n, QQ)
    assert len(t) == __import__("math").factorial(n)
    for p in itertools.permutations(range(1, n + 1)):
        assert t[p] == brute_sign(p)


def test_expand_examples():
    t = expand(leibniz(3))
    assert len(t) == 6 and {v for _, v in t.items()} == {1, -1}
    assert expand(even_general(2)) == expand(leibniz(4))


def test_expand_single_bad_term():
    F = QQ
    term = DecomposableTerm(-F.half(), (
        LinearVector.pair(1, 3, -1), LinearVector.pair(2, 4, -1),
        LinearVector.pair(2, 4, 1), LinearVector.pair(1, 3, 1)))
    t = expand(Decomposition(4, F, [term]))
    assert t[(1, 2, 4, 1)] == Fraction(-1, 2)
    assert t[(1, 2, 2, 1)] == Fraction(-1, 2)


@pytest.mark.parametrize("make", [lambda F: derksen3(F), lambda F: even_general(3, F),
                                  lambda F: laplace_lift(derksen3(F))])
def test_expand_matches_brute_force(make, field):
    d = make(field)
    assert expand(d).to_dict() == brute_expand(d)


def test_expand_linear():
    a, b = derksen3(), leibniz(3)
    both = expand(a + b)
    ta, tb = expand(a), expand(b)
    keys = set(ta.to_dict()) | set(tb.to_dict())
    assert both.to_dict() == {k: ta[k] + tb[k] for k in keys if ta[k] + tb[k] != 0}


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("make, n", [(lambda n, F: derksen3(F), 3),
                                     (lambda n, F: best_known(n, F), 5),
                                     (lambda n, F: even_general(3, F), 6)])
def test_field_transport(make, n, p):
    Fp = GF(p)
    reduced = {k: Fp(v) for k, v in brute_expand(make(n, QQ)).items()}
    reduced = {k: v for k, v in reduced.items() if v}
    assert expand(make(n, Fp)).to_dict() == reduced


def test_verify_matches():
    r = verify(even_general(3))
    assert r.is_exact_match and r.term_count == 180 and r.mismatch_witness is None
    r = verify(best_known(5))
    assert r.is_exact_match and r.term_count == 60
    assert r.summary() == "n=5 field=Q terms=60 match=true"


def test_verify_flipped_derksen():
    d = derksen3()
    t0 = d.terms[0]
    bad = Decomposition(3, QQ, [DecomposableTerm(-t0.coeff, t0.factors)] + d.terms[1:])
    r = verify(bad)
    assert not r.is_exact_match
    # frozen from a brute-force expansion of the flipped formula
    assert r.mismatch_witness == ((2, 1, 1), 0, -1)
    assert "witness=(2,1,1) expected=0 found=-1" in r.summary()


def test_parallel_expand_schedule_independent():
    d = best_known(6)
    serial = expand(d, jobs=1)
    assert expand(d, jobs=3) == serial
    assert list(expand(d, jobs=2).items()) == list(serial.items())


def test_bell_numbers():
    # frozen from set-partition enumeration
    assert [bell_number(n) for n in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    assert bell_number(25) == 4638590332229999353
    assert bell_number(25) > 2 ** 62
    with pytest.raises(CapExceeded):
        bell_number(26)
    assert bell_number(30, cap=30) == 846749014511809332450147


def test_rank_bound_table_rows():
    rows = {r.n: r for r in rank_bound_table(8)}
    assert (rows[6].bell, rows[6].bound, rows[6].marked) == (203, 180, True)
    assert (rows[3].bell, rows[3].bound, rows[3].marked) == (5, 6, False)
    assert (rows[8].bell, rows[8].bound, rows[8].marked) == (4140, 5040, False)
    with pytest.raises(ValueError):
        rank_bound_table(1)
