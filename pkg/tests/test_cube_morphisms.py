"""Cube-category algebra: canonical forms, relations, coordinate semantics."""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aufhebung.shapes import (
    CubeMorphism,
    ShapeError,
    compose,
    enumerate_epis,
    enumerate_monos,
    epi_mono_factor,
    format_morphism,
    normalize,
    parse_token,
    sections_of,
)


def alpha(i, sign, n):
    return CubeMorphism.face(i, sign, n)


def beta(i, n):
    return CubeMorphism.projection(i, n)


def test_face_projection_identity():
    out = compose(beta(1, 2), alpha(1, 0, 2))
    assert out.is_identity and out.dom == 1
    assert compose(beta(1, 1), alpha(1, 0, 1)).is_identity


def test_relations_all_instances():
    # a_j a_i = a_i a_(j-1) for i < j (both signs), indices <= 5
    for n in range(6):
        for j in range(1, min(n + 2, 6) + 1):
            for i in range(1, j):
                for io, up in product((0, 1), repeat=2):
                    if j > n + 2 or i > n + 1:
                        continue
                    lhs = compose(alpha(j, io, n + 2), alpha(i, up, n + 1))
                    rhs = compose(alpha(i, up, n + 2), alpha(j - 1, io, n + 1))
                    assert lhs == rhs
    # b_j b_i = b_i b_(j+1) for i <= j
    for n in range(2, 8):
        for j in range(1, min(n - 1, 6) + 1):
            for i in range(1, j + 1):
                lhs = compose(beta(j, n - 1), beta(i, n))
                rhs = compose(beta(i, n - 1), beta(j + 1, n))
                assert lhs == rhs
    # b_j a_i three-way relation
    for n in range(1, 6):
        for j in range(1, n + 1):
            for i in range(1, n + 1):
                for sign in (0, 1):
                    got = compose(beta(j, n), alpha(i, sign, n))
                    if i < j:
                        assert got == compose(alpha(i, sign, n - 1), beta(j - 1, n - 1))
                    elif i == j:
                        assert got.is_identity
                    else:
                        assert got == compose(alpha(i - 1, sign, n - 1), beta(j, n - 1))


def _random_word(rng, dom, length):
    toks, cur = [], dom
    for _ in range(length):
        if cur > 0 and rng.random() < 0.5:
            toks.append(f"b{rng.randrange(1, cur + 1)}")
            cur -= 1
        else:
            toks.append(f"a{rng.randrange(2)}@{rng.randrange(1, cur + 2)}")
            cur += 1
    toks.reverse()
    return toks


def test_normalize_matches_coordinate_functions_fuzz():
    rng = random.Random(3)
    for _ in range(800):
        dom = rng.randrange(5)
        toks = _random_word(rng, dom, rng.randrange(8))
        f = normalize("cubical", toks, dom=dom)
        for pt in product((0, 1), repeat=dom):
            val, cur = pt, dom
            for tok in reversed(toks):
                g = parse_token("cubical", tok, cur)
                val = g(val)
                cur = g.cod
            assert f(pt) == val


def all_cube_maps(n, m):
    """Every cube-category morphism I^n -> I^m as a coordinate description."""
    survivors_choices = []
    for keep in range(min(n, m) + 1):
        from itertools import combinations
        for kept in combinations(range(1, n + 1), keep):
            for consts in product((0, 1), repeat=m - keep):
                from itertools import combinations as comb2
                for const_pos in comb2(range(m), m - keep):
                    coords = [None] * m
                    for p, s in zip(const_pos, consts):
                        coords[p] = ("c", s)
                    it = iter(kept)
                    for q in range(m):
                        if coords[q] is None:
                            coords[q] = ("p", next(it))
                    survivors_choices.append(tuple(coords))
    return set(survivors_choices)


def test_canonical_form_unique_small_dims():
    for n in range(4):
        for m in range(4):
            maps = all_cube_maps(n, m)
            forms = {CubeMorphism.from_coords(n, c) for c in maps}
            assert len(forms) == len(maps)
            for c in maps:
                assert CubeMorphism.from_coords(n, c).coords() == c


def test_epi_mono_factorisation():
    rng = random.Random(4)
    for _ in range(300):
        dom = rng.randrange(5)
        f = normalize("cubical", _random_word(rng, dom, 6), dom=dom)
        mono, epi = epi_mono_factor(f)
        assert mono.is_mono and epi.is_epi and compose(mono, epi) == f
        pos = [p for p, _ in mono.inserts]
        assert pos == sorted(pos, reverse=True)
        assert list(epi.deletes) == sorted(epi.deletes)


def test_sections_of_projection():
    secs = sections_of(beta(1, 1))
    assert sorted(format_morphism(m) for m in secs) == ["a0@1", "a1@1"]


def test_section_determines_retraction():
    # no two distinct epis from the same cube share a section
    for n in range(5):
        for m in range(n + 1):
            epis = enumerate_epis(n, m, "cubical")
            seen = {}
            for e in epis:
                for mu in sections_of(e):
                    key = mu
                    assert key not in seen or seen[key] == e, \
                        f"section {mu} splits two epis"
                    seen[key] = e


def test_enumerate_epis():
    assert [format_morphism(e) for e in enumerate_epis(2, 1, "cubical")] == \
        ["b1", "b2"]
    assert enumerate_epis(3, 3, "cubical") == [CubeMorphism.identity(3)]
    for n in range(5):
        for m in range(n + 1):
            epis = enumerate_epis(n, m, "cubical")
            assert len(set(epis)) == len(epis)
            monos = enumerate_monos(m, n, "cubical")
            assert len(monos) == len({mu.coords() for mu in monos})


def test_eval_domain_error():
    from aufhebung.shapes import DomainError
    with pytest.raises(DomainError):
        beta(1, 2)((0, 1, 0))
    with pytest.raises(DomainError):
        beta(1, 2)((0, 2))


def test_mixed_category_composition_rejected():
    from aufhebung.shapes import SimplexMorphism
    with pytest.raises(ShapeError):
        compose(beta(1, 1), SimplexMorphism.identity(1))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_associativity_hypothesis(seed):
    rng = random.Random(seed)
    dom = rng.randrange(4)
    h = normalize("cubical", _random_word(rng, dom, 4), dom=dom)
    g = normalize("cubical", _random_word(rng, h.cod, 4), dom=h.cod)
    f = normalize("cubical", _random_word(rng, g.cod, 4), dom=g.cod)
    assert compose(f, compose(g, h)) == compose(compose(f, g), h)
