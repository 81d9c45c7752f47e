import numpy as np
import pytest

from dscodes import boolfn, errors
from dscodes.boolfn import WalshSpectrum
from dscodes.designs import FuncSpec
from dscodes.gf import default_field


def brute_walsh(F, f):
    """O(q^2) transform straight from the definition; the reference oracle."""
    tbl = f.table(F) if f.to_prime_subfield else F.trace_table[f.table(F)]
    vals = []
    for w in range(F.q):
        acc = 0
        for x in range(F.q):
            acc += (-1) ** ((int(tbl[x]) + F.trace(F.mul(w, x))) % 2)
        vals.append(acc)
    return tuple(vals)


@pytest.mark.parametrize("terms,traced", [
    (((1, 3),), True),
    (((2, 3), (1, 2)), True),
    (((1, 5), (1, 3)), True),
    (((1, 3),), False),
])
def test_walsh_matches_brute_force_m4(terms, traced):
    F = default_field(2, 4)
    f = FuncSpec(terms, traced)
    assert boolfn.walsh_transform(F, f).values == brute_walsh(F, f)


def test_walsh_matches_brute_force_m5():
    F = default_field(2, 5)
    f = FuncSpec(((1, 3),), True)
    s = boolfn.walsh_transform(F, f)
    assert s.values == brute_walsh(F, f)
    assert s.histogram() == {-8: 6, 0: 16, 8: 10}
    assert s.values[0] == 0 and s.n_f == 16


def test_walsh_requires_char_two():
    with pytest.raises(ValueError):
        boolfn.walsh_transform(default_field(3, 2), FuncSpec(((1, 2),), True))


def test_spectrum_classification():
    bent = WalshSpectrum(4, (4,) * 8 + (-4,) * 8)
    assert boolfn.classify_spectrum(bent).variant == "bent"
    semi = boolfn.classify_spectrum(
        boolfn.walsh_transform(default_field(2, 5), FuncSpec(((1, 3),), True)))
    assert semi.variant == "semibent" and semi.amplitude == 8
    affine = boolfn.walsh_transform(default_field(2, 4), FuncSpec(((1, 1),), True))
    assert boolfn.classify_spectrum(affine).variant == "other"


def test_five_valued_classification():
    synth = WalshSpectrum(5, (0,) * 8 + (4,) * 8 + (-4,) * 8 + (8,) * 4 + (-8,) * 4)
    assert boolfn.classify_spectrum(synth).variant == "five-valued"
    plateau = WalshSpectrum(6, (0,) * 48 + (16,) * 10 + (-16,) * 6)
    assert boolfn.classify_spectrum(plateau).variant == "plateaued"


def test_quadratic_rank_frozen_values():
    F5, F6 = default_field(2, 5), default_field(2, 6)
    assert boolfn.quadratic_rank(F5, FuncSpec(((1, 3),), True)).r == 4
    assert boolfn.quadratic_rank(F6, FuncSpec(((1, 3),), True)).r == 4
    assert boolfn.quadratic_rank(F6, FuncSpec(((2, 3),), True)).r == 6
    assert boolfn.quadratic_rank(F6, FuncSpec(((1, 3), (1, 5)), True)).r == 2
    F9 = default_field(3, 2)
    assert boolfn.quadratic_rank(F9, FuncSpec(((1, 2),), False)).r == 2
    # field-valued and traced ranks can legitimately differ
    F81 = default_field(3, 4)
    assert boolfn.quadratic_rank(F81, FuncSpec(((1, 4),), False)).r == 4
    assert boolfn.quadratic_rank(F81, FuncSpec(((1, 4),), True)).r == 2


def test_quadratic_rank_rejects_other_exponents():
    F = default_field(2, 5)
    with pytest.raises(errors.NotQuadraticFormError):
        boolfn.quadratic_rank(F, FuncSpec(((1, 7),), True))
    F27 = default_field(3, 3)
    with pytest.raises(errors.NotQuadraticFormError):
        boolfn.quadratic_rank(F27, FuncSpec(((1, 5),), True))
    boolfn.quadratic_rank(F27, FuncSpec(((1, 6),), True))  # 6 = 3 + 3 is fine


def test_galois_sum_frozen_values():
    assert boolfn.quadratic_galois_sum(default_field(3, 2), FuncSpec(((1, 2),), False)) == 6
    assert boolfn.quadratic_galois_sum(default_field(3, 3), FuncSpec(((1, 2),), True)) == 0
    assert boolfn.quadratic_galois_sum(default_field(3, 4), FuncSpec(((1, 4),), False)) == -54


def test_lambda_spectrum():
    F = default_field(2, 5)
    g = FuncSpec(((1, 3),), False)
    assert boolfn.lambda_spectrum(F, g, 1, 0) == 0
    for a, b in ((1, 1), (3, 0), (5, 7)):
        assert boolfn.lambda_spectrum(F, g, a, b) in (0, 8, -8)
    assert boolfn.lambda_spectrum(F, g, 0, 0) == 32  # empty exponent sum
    with pytest.raises(ValueError):
        boolfn.lambda_spectrum(F, FuncSpec(((1, 3),), True), 1, 0)


def test_is_almost_bent():
    F5 = default_field(2, 5)
    assert boolfn.is_almost_bent(F5, FuncSpec(((1, 3),), False))
    assert boolfn.is_almost_bent(F5, FuncSpec(((1, 5),), False))
    assert not boolfn.is_almost_bent(F5, FuncSpec(((1, 1),), False))  # linear
    with pytest.raises(errors.EvenDegreeError):
        boolfn.is_almost_bent(default_field(2, 6), FuncSpec(((1, 3),), False))


def test_support_size_prediction():
    assert boolfn.support_size_prediction("bent", 4, walsh0=4) == {6}
    assert boolfn.support_size_prediction("bent", 4, walsh0=-4) == {10}
    assert boolfn.support_size_prediction("semibent", 5, walsh0=8) == {12}
    assert boolfn.support_size_prediction("ab-trace", 5, walsh0=0) == {16}
    assert boolfn.support_size_prediction("quadratic", 6, walsh0=16) == {24}
    with pytest.raises(errors.UnknownKindError):
        boolfn.support_size_prediction("nope", 4, walsh0=0)


def test_hyperoval_spectrum_check_segre_and_glynn1():
    for m, (i, j) in ((5, (1, 2)), (7, (1, 2)), (5, (3, 4))):  # rho = 6, 6, 24
        F = default_field(2, m)
        chk = boolfn.hyperoval_spectrum_check(F, i, j)
        assert chk.ok and chk.violations == ()


def test_hyperoval_check_ell_value_segre_m5():
    chk = boolfn.hyperoval_spectrum_check(default_field(2, 5), 1, 2)
    assert chk.ell == 12
    assert chk.kappa == 1


def test_hyperoval_check_preconditions():
    with pytest.raises(errors.PreconditionFailedError):
        boolfn.hyperoval_spectrum_check(default_field(3, 3), 1, 2)
    with pytest.raises(errors.PreconditionFailedError):
        boolfn.hyperoval_spectrum_check(default_field(2, 4), 1, 2)
    with pytest.raises(errors.PreconditionFailedError):
        boolfn.hyperoval_spectrum_check(default_field(2, 5), 2, 2)


def test_find_quadratic_with_and_iteration_order():
    F = default_field(2, 6)
    first = [s.terms for _, s in zip(range(3), boolfn.iter_quadratic_specs(F))]
    assert first == [(((1, 2),)), (((2, 2),)), (((3, 2),))]
    spec = boolfn.find_quadratic_with(F, rank=4, walsh0=16)
    assert boolfn.quadratic_rank(F, spec).r == 4
    assert boolfn.walsh_transform(F, spec).values[0] == 16
    with pytest.raises(errors.SizeLimitError):
        boolfn.find_quadratic_with(F, rank=5, limit=50)  # odd rank is impossible


def test_parseval_holds_for_every_tested_spectrum():
    F = default_field(2, 6)
    for terms in (((1, 3),), ((2, 3),), ((1, 3), (1, 5))):
        s = boolfn.walsh_transform(F, FuncSpec(terms, True))
        assert sum(v * v for v in s.values) == 2 ** (2 * 6)
