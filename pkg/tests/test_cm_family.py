import pytest

from hypertouch.cartier import cartier_manin
from hypertouch.cm_family import (
    PrimeClass,
    classify_prime,
    cm_curve,
    pftq_component_count,
    verify_cm_prediction,
)
from hypertouch.errors import BadReduction, NotPrime, PreconditionViolated
from hypertouch.field import is_prime
from hypertouch.touchpoint import Outcome

CLASSIFIED = [p for p in range(3, 200) if is_prime(p) and classify_prime(p).cls is not PrimeClass.OUT_OF_SCOPE]


def test_cm_curve():
    C = cm_curve(19)
    assert [int(c) for c in C.f.coeffs] == [0, 7, 0, 14, 0, 7, 0, 1]
    with pytest.raises(BadReduction):
        cm_curve(7)
    # 11 = 4 mod 7 and 3 mod 4: the curve is fine and the prime is in the transversal class
    assert cm_curve(11).model_degree == 7
    assert classify_prime(11).cls is PrimeClass.TRANSVERSAL


def test_classify_prime():
    assert classify_prime(19).cls is PrimeClass.TOUCHPOINT
    assert classify_prime(31).cls is PrimeClass.TRANSVERSAL
    assert classify_prime(13).cls is PrimeClass.OUT_OF_SCOPE
    assert classify_prime(43).cls is PrimeClass.OUT_OF_SCOPE  # 43 = 1 mod 7
    assert classify_prime(7).cls is PrimeClass.OUT_OF_SCOPE
    with pytest.raises(NotPrime):
        classify_prime(15)


def test_classified_primes_below_200():
    touch = [p for p in CLASSIFIED if classify_prime(p).cls is PrimeClass.TOUCHPOINT]
    trans = [p for p in CLASSIFIED if classify_prime(p).cls is PrimeClass.TRANSVERSAL]
    assert touch == [19, 23, 47, 79, 103, 107, 131, 163, 191]
    assert trans == [3, 11, 31, 59, 67, 151, 179, 199]


@pytest.mark.parametrize("p", CLASSIFIED)
def test_a_number_one(p):
    cd = cartier_manin(cm_curve(p))
    assert cd.a_number == 1 and cd.nilpotent


@pytest.mark.parametrize("p,outcome", [(19, Outcome.NON_TRANSVERSAL), (31, Outcome.TRANSVERSAL), (47, Outcome.NON_TRANSVERSAL)])
def test_verify_examples(p, outcome):
    rep = verify_cm_prediction(p)
    assert rep.passed and rep.classification.outcome is outcome
    assert rep.to_json()["pass"] is True


def test_out_of_scope_has_no_prediction():
    with pytest.raises(PreconditionViolated):
        verify_cm_prediction(13)


def test_component_count():
    assert pftq_component_count(7) == 16857
    assert pftq_component_count(2) == 37
    assert pftq_component_count(3) == 253
    with pytest.raises(NotPrime):
        pftq_component_count(9)
