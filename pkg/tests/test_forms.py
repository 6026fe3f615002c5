"""Tests for the named form constructors and the form registry."""

import pytest
from pydantic import ValidationError

from cuspbound.errors import UnsupportedParameterError
from cuspbound.forms import (
    FormDescriptor,
    FormName,
    FormRegistry,
    check_bp_envelope,
    delta8_series,
    delta_series,
    dual_construction_mismatches,
    eisenstein_series,
    f2_series,
    j_series,
    phi_series,
    psi_series,
    s4_series,
)
from cuspbound.rigor.intervals import hi, lo
from cuspbound.series import qs_mul

from tests.conftest import SMALL_TRUNCATION


class TestEtaProducts:
    """Test the eta-product constructions."""

    def test_delta(self):
        """Test the first values of the Ramanujan tau function."""
        delta = delta_series(6)
        assert delta.window(1, 6) == [1, -24, 252, -1472, 4830]
        assert delta[0] == 0

    def test_delta8(self):
        """Test the weight 8 level 2 newform."""
        assert delta8_series(5).window(1, 5) == [1, -8, 12, 64]

    def test_psi_product(self):
        """Test psi = q^-1 - 24 + 276 q - 2048 q^2 + 11202 q^3."""
        psi = psi_series(4)
        assert psi.valuation == -1
        assert psi.window(-1, 4) == [1, -24, 276, -2048, 11202]

    def test_phi_product(self):
        """Test phi = q + 24 q^2 + 300 q^3."""
        assert phi_series(4).window(0, 4) == [0, 1, 24, 300]

    def test_psi_times_phi(self):
        """Test psi phi = 1 on the known window."""
        product = qs_mul(psi_series(SMALL_TRUNCATION), phi_series(SMALL_TRUNCATION))
        assert all(c == (1 if n == 0 else 0) for n, c in product)

    def test_unknown_construction(self):
        """Test an unknown construction name is rejected."""
        with pytest.raises(UnsupportedParameterError):
            psi_series(10, construction="theta")

    def test_truncation_too_small(self):
        """Test truncation orders below 2 are rejected."""
        with pytest.raises(UnsupportedParameterError):
            delta_series(1)


class TestEisensteinSeries:
    """Test Eisenstein series and the level 2 weight 2 and 4 forms."""

    def test_e4(self):
        """Test E_4 = 1 + 240 q + 2160 q^2 + 6720 q^3."""
        assert eisenstein_series(4, 4).coeffs == (1, 240, 2160, 6720)

    def test_e2(self):
        """Test E_2 = 1 - 24 q - 72 q^2."""
        assert eisenstein_series(2, 3).coeffs == (1, -24, -72)

    def test_odd_weight_rejected(self):
        """Test odd weights are rejected."""
        with pytest.raises(UnsupportedParameterError):
            eisenstein_series(3, 5)

    def test_f2(self):
        """Test F_2 = 1 + 24 sum of odd divisors."""
        assert f2_series(5).coeffs == (1, 24, 24, 96, 24)

    def test_s4(self):
        """Test S_4 = q + 8 q^2 + 28 q^3 + 64 q^4."""
        assert s4_series(5).coeffs == (0, 1, 8, 28, 64)

    def test_j(self):
        """Test j = q^-1 + 744 + 196884 q."""
        assert j_series(3).window(-1, 2) == [1, 744, 196884]


class TestDualConstructions:
    """Test independent constructions agree."""

    def test_no_mismatches(self):
        """Test psi, phi and F_2 agree between their two constructions."""
        counts = dual_construction_mismatches(SMALL_TRUNCATION)
        assert set(counts) == {"psi", "phi", "f2", "psi*phi"}
        assert sum(counts.values()) == 0

    def test_quotient_matches_product(self):
        """Test Delta(z)/Delta(2z) against the odd-part product."""
        assert psi_series(25, "quotient").agrees_with(psi_series(25, "product"))


class TestFormRegistry:
    """Test name resolution and descriptors."""

    def test_resolve_named(self):
        """Test a registered name resolves to its descriptor."""
        descriptor = FormRegistry.resolve("PSI")
        assert descriptor.name is FormName.PSI
        assert descriptor.valuation == -1
        assert descriptor.expand(3)[-1] == 1

    def test_resolve_eisenstein(self):
        """Test the e<k> family."""
        descriptor = FormRegistry.resolve("e6")
        assert descriptor.k == 6
        assert descriptor.label == "E6"
        assert descriptor.expand(2).coeffs == (1, -504)

    def test_resolve_basis_element(self):
        """Test the f<k>_<m> family expands to q^m + O(q^ell)."""
        descriptor = FormRegistry.resolve("f12_2")
        assert descriptor.label == "F12_2"
        form = descriptor.expand(6)
        assert form.window(1, 3) == [0, 1]

    @pytest.mark.parametrize("name", ["e3", "f12_3", "f7_1", "theta"])
    def test_unknown_names(self, name):
        """Test unsupported names raise."""
        with pytest.raises(UnsupportedParameterError):
            FormRegistry.resolve(name)

    def test_list_forms(self):
        """Test listing includes the parametrised families."""
        names = FormRegistry.list_forms()
        assert "delta8" in names
        assert "f<k>_<m>" in names

    def test_descriptor_validation(self):
        """Test odd weights and unknown levels are rejected."""
        with pytest.raises(ValidationError):
            FormDescriptor(name=FormName.PSI, weight=1, level=2, valuation=-1)
        with pytest.raises(ValidationError):
            FormDescriptor(name=FormName.PSI, weight=0, level=3, valuation=-1)


class TestJEnvelope:
    """Test the j-coefficient error envelope."""

    def test_envelope_holds(self):
        """Test n |eps_n| <= 0.055 on a short range."""
        report = check_bp_envelope(60)
        assert report.passed
        assert 0 < report.certified_value <= 0.055

    def test_first_coefficient_ratio(self):
        """Test 196884 is slightly below the leading asymptotic."""
        from cuspbound.forms import j_leading_ratio

        ratio = j_leading_ratio(196884, 1)
        assert 0.97 < lo(ratio) <= hi(ratio) < 0.972

    def test_nonpositive_range(self):
        """Test n_max must be positive."""
        with pytest.raises(UnsupportedParameterError):
            check_bp_envelope(0)
