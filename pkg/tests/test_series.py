"""Window-tracked truncated series: arithmetic, honesty, serialization."""

import json
from fractions import Fraction

import pytest

from orbivertex.exactnum import cyclo_field
from orbivertex.series import (
    GradeCap,
    PrecisionError,
    Series,
    SeriesContext,
    VarSpec,
    coeff_from_data,
    coeff_to_data,
)


def one_var_ctx():
    return SeriesContext([VarSpec("q")])


def test_monomial_and_coefficient_reads():
    ctx = one_var_ctx()
    s = Series.monomial(ctx, {"q": 3}, Fraction(5, 2))
    assert s.coefficient({"q": 3}) == Fraction(5, 2)
    assert s.coefficient({"q": 2}) == 0
    assert s.coefficient({"q": 100}) == 0


def test_out_of_window_read_raises():
    ctx = one_var_ctx()
    s = Series.from_terms(ctx, {(0,): 1, (1,): 1}, maxes={"q": 1})
    with pytest.raises(PrecisionError):
        s.coefficient({"q": 2})


def test_addition_takes_min_window():
    ctx = one_var_ctx()
    s1 = Series.from_terms(ctx, {(0,): 1}, maxes={"q": 5})
    s2 = Series.from_terms(ctx, {(1,): 1}, maxes={"q": 3})
    total = s1 + s2
    assert total.coefficient({"q": 3}) == 0
    with pytest.raises(PrecisionError):
        total.coefficient({"q": 4})


def test_multiplication_window_shifts_by_valuation():
    ctx = one_var_ctx()
    s1 = Series.from_terms(ctx, {(2,): 1}, maxes={"q": 6})
    s2 = Series.from_terms(ctx, {(3,): 1}, maxes={"q": 7})
    prod = s1 * s2
    assert prod.coefficient({"q": 5}) == 1
    # Completeness: min(6 + 3, 7 + 2) = 9.
    assert prod.coefficient({"q": 9}) == 0
    with pytest.raises(PrecisionError):
        prod.coefficient({"q": 10})


def test_invert_geometric_series():
    ctx = one_var_ctx()
    base = Series.from_terms(ctx, {(0,): 1, (1,): -1}, maxes={"q": 8})
    inv = (base).invert()
    for k in range(9):
        assert inv.coefficient({"q": k}) == 1


def test_invert_laurent_corner_floors_are_tight():
    ctx = one_var_ctx()
    s = Series.from_terms(ctx, {(-1,): 1, (0,): 1, (1,): 1}, maxes={"q": 6})
    inv = s.invert()
    assert inv.floors == (1,)
    assert inv.coefficient({"q": 0}) == 0
    assert inv.coefficient({"q": 1}) == 1


def test_invert_requires_corner():
    ctx = SeriesContext([VarSpec("q"), VarSpec("t")])
    s = Series.from_terms(ctx, {(1, 0): 1, (0, 1): 1}, maxes={"q": 4, "t": 4})
    with pytest.raises(PrecisionError):
        s.invert()


def capped_ctx():
    return SeriesContext([VarSpec("q")], caps=[GradeCap("deg", {"q": 1})])


def test_exp_log_round_trip():
    ctx = capped_ctx()
    s = Series.from_terms(
        ctx,
        {(1,): Fraction(1, 2), (2,): Fraction(-1, 3)},
        cap_bounds={"deg": 7},
    )
    assert s.exp().log() == s


def test_exp_monomial_matches_exp():
    ctx = capped_ctx()
    arg = Series.from_terms(ctx, {(2,): Fraction(3, 5)}, cap_bounds={"deg": 10})
    direct = Series.exp_monomial(ctx, {"q": 2}, Fraction(3, 5), cap_bounds={"deg": 10})
    assert arg.exp() == direct


def test_grade_cap_enforced():
    ctx = SeriesContext([VarSpec("x"), VarSpec("y")], caps=[GradeCap("deg", {"x": 1, "y": 1})])
    s = Series.from_terms(ctx, {(1, 0): 1, (0, 1): 1}, cap_bounds={"deg": 3})
    cube = s * s * s
    assert cube.coefficient({"x": 2, "y": 1}) == 3
    # The product bound grows with factor valuations: min over pairings
    # gives completeness through grade 5 here, nothing stored above 3.
    assert cube.coefficient({"x": 5, "y": 0}) == 0
    with pytest.raises(PrecisionError):
        cube.coefficient({"x": 6, "y": 0})


def test_extract_reduces_context():
    ctx = SeriesContext([VarSpec("x"), VarSpec("y")], caps=[GradeCap("deg", {"x": 1, "y": 1})])
    s = Series.from_terms(
        ctx,
        {(0, 0): 1, (1, 1): 2, (2, 1): 3},
        cap_bounds={"deg": 4},
    )
    slice_y = s.extract({"y": 1})
    assert slice_y.ctx.names == ("x",)
    assert slice_y.coefficient({"x": 1}) == 2
    assert slice_y.coefficient({"x": 2}) == 3


def test_substitute_diagonal_rescaling():
    ctx = one_var_ctx()
    s = Series.from_terms(ctx, {(0,): 1, (1,): 2, (2,): 3}, maxes={"q": 5})
    doubled = s.substitute({"q": Series.monomial(ctx, {"q": 1}, 2)})
    assert doubled.coefficient({"q": 1}) == 4
    assert doubled.coefficient({"q": 2}) == 12
    assert doubled.maxes == s.maxes


def test_fractional_lattice_exponents():
    ctx = SeriesContext([VarSpec("lam", 2)])
    s = Series.monomial(ctx, {"lam": Fraction(1, 2)}, 1)
    sq = s * s
    assert sq.coefficient({"lam": 1}) == 1
    with pytest.raises(ValueError):
        Series.monomial(ctx, {"lam": Fraction(1, 3)}, 1)


def test_restrict_and_require_window():
    ctx = one_var_ctx()
    s = Series.from_terms(ctx, {(0,): 1, (4,): 1}, maxes={"q": 6})
    cut = s.restrict(maxes={"q": 2})
    assert cut.coefficient({"q": 0}) == 1
    with pytest.raises(PrecisionError):
        cut.coefficient({"q": 4})
    with pytest.raises(PrecisionError):
        cut.require_window(maxes={"q": 3})
    cut.require_window(maxes={"q": 2})


def test_serialization_round_trip_with_cyclotomics():
    field = cyclo_field(8)
    ctx = SeriesContext([VarSpec("lam", 2), VarSpec("x1")], caps=[GradeCap("xdeg", {"x1": 1})])
    s = Series.from_terms(
        ctx,
        {(Fraction(-1, 2), 0): Fraction(3, 4), (Fraction(3, 2), 2): field.root_of_unity(8, 3)},
        maxes={"lam": 4},
        cap_bounds={"xdeg": 2},
    )
    data = json.loads(json.dumps(s.to_data(), sort_keys=True))
    back = Series.from_data(data)
    assert back == s
    assert back.window_description() == s.window_description()


def test_coeff_encoding_forms():
    assert coeff_to_data(Fraction(-3, 7)) == "-3/7"
    assert coeff_from_data("-3/7") == Fraction(-3, 7)
    field = cyclo_field(4)
    i = field.imaginary_unit()
    blob = coeff_to_data(i)
    assert blob["order"] == 4
    assert coeff_from_data(blob) == i
    # Rational cyclotomic numbers collapse to plain fraction strings.
    assert coeff_to_data(field.from_fraction(Fraction(2, 3))) == "2/3"
