"""The named forms paired with their proven coefficient majorants."""

from functools import lru_cache

from ..core.constants import SeriesDefaults
from ..forms import (
    delta_series,
    eisenstein_series,
    f2_series,
    phi_series,
    psi_series,
    s4_series,
)
from ..series import qs_apply_Vd
from .evaluate import CertifiedSeries
from .tails import TailBound


@lru_cache(maxsize=16)
def certified_forms(T: int = SeriesDefaults.TRUNCATION) -> dict[str, CertifiedSeries]:
    """Forms in q = exp(2 pi i z), known below q^T, keyed by name.

    Majorants: 24 sigma(n) for E_2 and F_2, 240 sigma_3(n) for E_4,
    sigma_3(n) for S_4, the Hauptmodul envelopes for psi and phi, and the
    eta-product bound for Delta.
    """
    return {
        "psi": CertifiedSeries(psi_series(T), TailBound.hauptmodul_s(), "psi"),
        "phi": CertifiedSeries(phi_series(T), TailBound.hauptmodul_b(), "phi"),
        "f2": CertifiedSeries(f2_series(T), TailBound.sigma_poly(24), "F2"),
        "e2": CertifiedSeries(
            eisenstein_series(2, T), TailBound.sigma_poly(24), "E2"
        ),
        "e4": CertifiedSeries(
            eisenstein_series(4, T), TailBound.sigma_poly(240, r=3), "E4"
        ),
        "s4": CertifiedSeries(s4_series(T), TailBound.sigma_poly(1, r=3), "S4"),
        "delta": CertifiedSeries(delta_series(T), TailBound.eta_product(24), "Delta"),
    }


@lru_cache(maxsize=16)
def halfperiod_forms(
    T: int = SeriesDefaults.TRUNCATION,
) -> dict[str, CertifiedSeries]:
    """Combinations expanded in exp(pi i z), for the transformed table entries.

    "s4_inversion" is (E_4(z) - E_4(z/2)/16)/240, "s4_shift" is
    (E_4(z) - E_4(z/2 + 1/2)/16)/240 and "f2_shift" is
    E_2(z/2 + 1/2)/2 - E_2(z).
    """
    e2 = eisenstein_series(2, T)
    e4 = eisenstein_series(4, T)
    s4_inversion = ((qs_apply_Vd(e4, 2) - e4 / 16) / 240).truncate(T)
    s4_shift = ((qs_apply_Vd(e4, 2) - e4.twist_sign() / 16) / 240).truncate(T)
    f2_shift = (e2.twist_sign() / 2 - qs_apply_Vd(e2, 2)).truncate(T)
    return {
        "s4_inversion": CertifiedSeries(
            s4_inversion, TailBound.sigma_poly("17/16", r=3), "S4 inversion"
        ),
        "s4_shift": CertifiedSeries(
            s4_shift, TailBound.sigma_poly("17/16", r=3), "S4 shift"
        ),
        "f2_shift": CertifiedSeries(f2_shift, TailBound.sigma_poly(36), "F2 shift"),
    }
