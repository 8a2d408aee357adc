import pytest
from hypothesis import given, strategies as st

from permchar.perms import (CycleParseError, Perm, parse_cycles,
                            parse_group_text, render_group_text)

perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(list(range(n))).map(Perm))


def same_degree_pairs():
    return st.integers(min_value=1, max_value=8).flatmap(
        lambda n: st.tuples(st.permutations(list(range(n))).map(Perm),
                            st.permutations(list(range(n))).map(Perm)))


def same_degree_triples():
    return st.integers(min_value=1, max_value=8).flatmap(
        lambda n: st.tuples(*([st.permutations(list(range(n))).map(Perm)] * 3)))


def test_identity_and_application():
    e = Perm.identity(5)
    assert e.is_identity and e(3) == 3
    p = parse_cycles("(0 1 2)", 4)
    assert p(0) == 1 and p(2) == 0 and p(3) == 3
    assert p.order() == 3


def test_parse_format_round_trip():
    for text, degree in [("(0 1 2 3 4)", 5), ("(0 1)(2 3)", 4), ("()", 3),
                         ("(1 4)(0 2 3)", 5), ("", 2)]:
        p = parse_cycles(text, degree)
        assert parse_cycles(p.cycle_string(), degree) == p


def test_parse_cycle_composition_left_to_right():
    # (0 1)(1 2): first swap 0,1 then swap 1,2
    p = parse_cycles("(0 1)(1 2)", 3)
    assert p.images == (2, 0, 1)


def test_parse_errors():
    with pytest.raises(CycleParseError):
        parse_cycles("(0 1 1)", 3)            # repeated point
    with pytest.raises(CycleParseError):
        parse_cycles("(0 9)", 3)              # out of range
    with pytest.raises(CycleParseError):
        parse_cycles("(0 x)", 3)              # not an integer
    with pytest.raises(CycleParseError):
        parse_cycles("(0 1) junk", 3)


def test_group_text_format():
    text = "degree 4\n(0 1)\n\n(0 1 2 3)\n"
    degree, gens = parse_group_text(text)
    assert degree == 4 and len(gens) == 2
    assert parse_group_text(render_group_text(degree, gens)) == (degree, gens)


def test_group_text_errors_carry_line_numbers():
    with pytest.raises(CycleParseError) as err:
        parse_group_text("degree 4\n(0 1)\n(0 5)\n")
    assert err.value.line == 3
    with pytest.raises(CycleParseError) as err:
        parse_group_text("(0 1)\n")
    assert "degree" in str(err.value)


@given(same_degree_triples())
def test_associativity(pqr):
    p, q, r = pqr
    assert (p * q) * r == p * (q * r)


@given(perms)
def test_inverse(p):
    assert (p * p.inverse()).is_identity
    assert p.inverse().inverse() == p
    assert p ** p.order() == Perm.identity(p.degree)


@given(same_degree_pairs())
def test_product_inverse(pq):
    p, q = pq
    assert (p * q).inverse() == q.inverse() * p.inverse()


@given(perms, st.integers(min_value=-6, max_value=6))
def test_powers(p, n):
    expected = Perm.identity(p.degree)
    step = p if n >= 0 else p.inverse()
    for _ in range(abs(n)):
        expected = expected * step
    assert p ** n == expected
