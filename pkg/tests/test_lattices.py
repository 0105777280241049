import math

import pytest

from geo5.errors import InvalidParameter, MalformedTarget, PolynomialRejected
from geo5.exact import parse_poly
from geo5.labels import Sol4mnxE
from geo5.lattices import (
    compact_quotients,
    dirichlet_lattice,
    log_root_target,
    make_target,
    sol_family_model_check,
    target_for_label,
    unit_cubic_check,
)


SEVENTH_ROOT_CUBIC = "x^3 + x^2 - 2*x - 1"


def _reasons(text):
    with pytest.raises(PolynomialRejected) as info:
        unit_cubic_check(parse_poly(text))
    return info.value.reasons


def test_unit_cubic_accepted():
    cubic = unit_cubic_check(parse_poly(SEVENTH_ROOT_CUBIC))
    assert cubic.companion.det() == 1


def test_unit_cubic_rejections():
    assert "not totally real" in _reasons("x^3 - 2")
    assert "reducible over Q" in _reasons("x^3 - x")
    assert "repeated roots" in _reasons("x^3 - 3*x + 2")
    assert "constant term is not +-1" in _reasons("x^3 - 4*x + 2")
    assert _reasons("x^2 - 2") == ["not a monic integer cubic"]
    assert _reasons("2*x^3 - 1") == ["not a monic integer cubic"]


def test_dirichlet_lattice():
    report = dirichlet_lattice(parse_poly(SEVENTH_ROOT_CUBIC))
    assert report.det == 1
    assert math.isclose(report.eigenvalue_product, 1.0, abs_tol=1e-9)
    assert abs(report.log_sum) < 1e-9
    # two of the roots are negative
    assert report.squared
    assert report.relation_residual < 1e-9
    assert report.discrete
    assert report.verified
    assert report.words_checked > 1
    assert len(report.translations) == 3
    assert abs(sum(report.log_roots)) < 1e-9


def test_dirichlet_lattice_rejects_bad_cubics():
    with pytest.raises(PolynomialRejected):
        dirichlet_lattice(parse_poly("x^3 - 2"))


def test_sol_search_finds_witness():
    target = log_root_target(parse_poly("x^3 - 6*x^2 + 5*x - 1"))
    result = sol_family_model_check(target, bound=10)
    assert result.verdict == "witness-found"
    assert result.witness == (6, 5)
    assert str(result.polynomial) == "x^3 - 6*x^2 + 5*x - 1"
    assert result.searched == 100


def test_sol_search_quartic():
    target = log_root_target(parse_poly("x^4 - 7*x^3 + 14*x^2 - 7*x + 1"))
    result = sol_family_model_check(target, bound=14)
    assert result.verdict == "witness-found"
    found = log_root_target(result.polynomial)
    assert max(abs(a - b) for a, b in zip(found.normalized_logs, target.normalized_logs)) < 1e-9


def test_sol_search_none_in_bound():
    result = sol_family_model_check(make_target(3, [1, 0.2, -1.2]), bound=1)
    assert result.verdict == "none-in-bound"
    assert result.searched == 1
    assert result.witness is None


def test_sol_search_bound_limits():
    target = make_target(3, [1, 0.2, -1.2])
    with pytest.raises(InvalidParameter):
        sol_family_model_check(target, bound=0)
    with pytest.raises(InvalidParameter):
        sol_family_model_check(target, bound=31)


@pytest.mark.parametrize(
    "degree, logs",
    [
        (5, [1, 0, 0, 0, -1]),
        (3, [1, -1]),
        (3, [2, -1, -1]),
        (3, [1, 0.5, 0.5]),
        (3, [1, 0.5, -1.0]),
        (4, [1, 0.5, -0.5, float("nan")]),
    ],
)
def test_malformed_targets(degree, logs):
    with pytest.raises(MalformedTarget):
        make_target(degree, logs)


def test_targets_from_labels_and_polynomials():
    target = target_for_label(Sol4mnxE(roots=("1", "1/2", "-3/2")))
    assert target.normalized_logs == (1.0, 0.5, -1.5)
    with pytest.raises(MalformedTarget):
        target_for_label(Sol4mnxE())
    with pytest.raises(MalformedTarget):
        log_root_target(parse_poly(SEVENTH_ROOT_CUBIC))


def test_compact_quotients():
    assert compact_quotients("3/4") is True
    assert compact_quotients("irrational") is False
