"""Independent verification oracles: reduction, basis checks, cofactors."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from invbases.core import (
    Monomial,
    Polynomial,
    UsageError,
    VarSet,
    lex,
    render_polynomial,
)
from invbases.division import janet
from invbases.engine import inv_comp
from invbases.oracles import (
    admissibility_check,
    buchberger_nf,
    expand_cofactors,
    is_groebner,
    is_involutive,
    random_ideal_member,
)
from invbases.signatures import Signature
from invbases.systems import parse_polynomial, parse_system

from conftest import WORKED_EXAMPLE, polynomials

VS = VarSet(("x", "y"))
LEX = lex(VS)


def poly(text):
    return parse_polynomial(text, LEX)


@pytest.fixture(scope="module")
def worked_run():
    sf = parse_system(WORKED_EXAMPLE)
    return sf, inv_comp(sf.polynomials, janet(sf.vars), sf.order)


class TestBuchbergerNormalForm:
    def test_generator_reduces_to_zero(self):
        g = poly("x^2 - y")
        assert buchberger_nf(g, [g], LEX).is_zero

    def test_single_step(self):
        assert render_polynomial(buchberger_nf(poly("x^2"), [poly("x^2 - y")], LEX)) == "y"

    def test_chained_steps(self):
        g = [poly("x^2 - y"), poly("y - 1")]
        assert render_polynomial(buchberger_nf(poly("x^2*y"), g, LEX)) == "1"

    def test_irreducible_input_is_returned(self):
        f = poly("x + 1")
        assert buchberger_nf(f, [poly("x^2 - y")], LEX) == f

    def test_zero_input(self):
        assert buchberger_nf(Polynomial.zero(LEX), [poly("x")], LEX).is_zero

    def test_zero_reducer_is_rejected(self):
        with pytest.raises(UsageError):
            buchberger_nf(poly("x"), [Polynomial.zero(LEX)], LEX)

    @given(f=polynomials(LEX, 2), g1=polynomials(LEX, 2), g2=polynomials(LEX, 2))
    @settings(max_examples=40, deadline=None)
    def test_result_has_no_reducible_term(self, f, g1, g2):
        reducers = [g for g in (g1, g2) if not g.is_zero]
        if not reducers:
            reducers = [Polynomial.one(LEX)]
        r = buchberger_nf(f, reducers, LEX)
        for _, m in r:
            assert not any(g.lm.divides(m) for g in reducers)
        assert buchberger_nf(r, reducers, LEX) == r


class TestIsGroebner:
    def test_monomial_basis(self):
        assert is_groebner([poly("x^2"), poly("x*y"), poly("y^2")], LEX)

    def test_completed_basis(self, worked_run):
        sf, r = worked_run
        assert is_groebner(r.basis, sf.order)

    def test_unresolved_s_polynomial(self):
        assert not is_groebner([poly("x^2 - y^2"), poly("x*y - 1")], LEX)

    def test_empty_basis_is_rejected(self):
        with pytest.raises(UsageError):
            is_groebner([], LEX)

    def test_zero_element_is_rejected(self):
        with pytest.raises(UsageError):
            is_groebner([poly("x"), Polynomial.zero(LEX)], LEX)


class TestIsInvolutive:
    def test_completed_basis(self, worked_run):
        sf, r = worked_run
        assert is_involutive(r.basis, janet(sf.vars), sf.order)
        assert is_involutive(r.loop_basis, janet(sf.vars), sf.order)

    def test_missing_prolongation_is_detected(self, worked_run):
        sf, r = worked_run
        # Without y^3 the prolongation x * (x*y + ...) no longer reduces
        # to zero involutively.
        trimmed = [p for p in r.basis if p.degree < 3]
        assert len(trimmed) == 2
        assert not is_involutive(trimmed, janet(sf.vars), sf.order)

    def test_empty_basis_is_rejected(self):
        with pytest.raises(UsageError):
            is_involutive([], janet(VS), LEX)


class TestExpandCofactors:
    def test_plain_combination(self):
        gens = [poly("x^2 - y"), poly("y + 1")]
        cofs = [poly("y"), poly("x")]
        assert expand_cofactors(cofs, gens) == poly("x^2*y + x*y - y^2 + x")

    def test_zero_cofactors_give_zero(self):
        z = Polynomial.zero(LEX)
        assert expand_cofactors([z, z], [poly("x"), poly("y")]).is_zero

    def test_length_mismatch_is_rejected(self):
        with pytest.raises(UsageError):
            expand_cofactors([poly("x")], [poly("x"), poly("y")])

    def test_empty_generators_are_rejected(self):
        with pytest.raises(UsageError):
            expand_cofactors([], [])


class TestAdmissibilityCheck:
    def test_unit_vector_signature(self):
        cofs = [Polynomial.one(LEX), Polynomial.zero(LEX)]
        assert admissibility_check(cofs, Signature(Monomial((0, 0)), 1), LEX)
        assert not admissibility_check(cofs, Signature(Monomial((0, 0)), 2), LEX)

    def test_lower_position_dominates(self):
        # Positions later in the module are smaller, so a nonzero first
        # cofactor sets the signature even against a bigger monomial later.
        cofs = [poly("y"), poly("x^2")]
        assert admissibility_check(cofs, Signature(Monomial((0, 1)), 1), LEX)
        assert not admissibility_check(cofs, Signature(Monomial((2, 0)), 2), LEX)

    def test_largest_monomial_within_a_position_wins(self):
        cofs = [Polynomial.zero(LEX), poly("x*y + 1")]
        assert admissibility_check(cofs, Signature(Monomial((1, 1)), 2), LEX)
        assert not admissibility_check(cofs, Signature(Monomial((0, 0)), 2), LEX)

    def test_empty_vector_is_rejected(self):
        with pytest.raises(UsageError):
            admissibility_check([], Signature(Monomial((0, 0)), 1), LEX)

    def test_all_zero_vector_is_rejected(self):
        with pytest.raises(UsageError):
            admissibility_check(
                [Polynomial.zero(LEX)], Signature(Monomial((0, 0)), 1), LEX
            )


class TestRandomIdealMember:
    def test_members_lie_in_the_ideal(self, worked_run):
        sf, r = worked_run
        rng = random.Random(97)
        for _ in range(25):
            member = random_ideal_member(rng, sf.polynomials, sf.order)
            assert buchberger_nf(member, r.basis, sf.order).is_zero

    def test_seeded_runs_repeat(self):
        gens = [poly("x^2 - y"), poly("x*y - 1")]
        a = random_ideal_member(random.Random(3), gens, LEX)
        b = random_ideal_member(random.Random(3), gens, LEX)
        assert a == b

    def test_degree_bound_is_respected(self):
        gens = [poly("x^2 - y")]
        rng = random.Random(12)
        for _ in range(50):
            member = random_ideal_member(rng, gens, LEX, max_terms=2, max_deg=3)
            assert member.is_zero or member.degree <= 3 + 2

    def test_empty_generators_are_rejected(self):
        with pytest.raises(UsageError):
            random_ideal_member(random.Random(0), [], LEX)
