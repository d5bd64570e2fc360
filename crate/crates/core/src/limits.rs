//! Closed forms and asymptotic limits of the rate.
//!
//! Two rate units appear here. [`RateUnit::Gamma0`] is `g₋² ρ0 / (2 ħ M* R²)`,
//! natural for the Lorentz-invariant rate; [`RateUnit::Fig2`] is
//! `g₋² ρ0 m_B / (2 ħ³)`, used by [`crate::response`]. A rate in `Gamma0`
//! units converts to `Fig2` units by dividing by `M̃²`.

use crate::dispersion::{CondensateParams, Dispersion, DispersionProfile, DEFAULT_ZETA_MAX};
use crate::error::{domain, Error, Result};
use crate::quadrature::{gauss_legendre, integrate};
use crate::response::{harmonic_sum, DetectorOrbit, ModeEntry, ModeFlags, RateResult};
use crate::roots::{brent, RootTolerance};
use crate::scalar::Real;
use crate::units::constants::{HBAR, K_B};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RateUnit {
    /// `g₋² ρ0 / (2 ħ M* R²)`
    Gamma0,
    /// `g₋² ρ0 m_B / (2 ħ³)`
    Fig2,
}

/// A rate tagged with its unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaggedRate<T> {
    pub value: T,
    pub unit: RateUnit,
}

impl<T: Real> TaggedRate<T> {
    pub fn to_fig2(self, m_tilde: T) -> Self {
        match self.unit {
            RateUnit::Fig2 => self,
            RateUnit::Gamma0 => TaggedRate {
                value: self.value / (m_tilde * m_tilde),
                unit: RateUnit::Fig2,
            },
        }
    }
}

/// `P0` and the roton correction `ΔP` for one orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiLimitResult<T> {
    /// Lorentz-invariant rate, [`RateUnit::Gamma0`].
    pub p0: T,
    /// Roton correction, [`RateUnit::Fig2`].
    pub delta_p: T,
    pub zeta_minus: Option<T>,
    pub zeta_plus: Option<T>,
}

impl<T: Real> LiLimitResult<T> {
    /// `P0 / M̃² + ΔP`, the large-`M̃` limit of the mode sum in Fig2 units.
    pub fn asymptotic_fig2(&self, m_tilde: T) -> T {
        self.p0 / (m_tilde * m_tilde) + self.delta_p
    }
}

/// `P0 = (1/γ) Σ_{m ≥ m_min} (m v - Ẽ/γ)² J_m²(m v - Ẽ/γ)` in Gamma0 units.
///
/// Independent of `M̃`; truncated like [`crate::response::transition_rate`].
pub fn p0_rate<T: Real>(orbit: &DetectorOrbit<T>, rel_tol: T) -> Result<RateResult<T>> {
    if !(rel_tol > T::zero() && rel_tol < T::one()) {
        return Err(domain("rel_tol must lie in (0, 1)", rel_tol.as_f64()));
    }
    harmonic_sum(orbit, rel_tol, None, |m, entries| {
        let d = orbit.detuning(m);
        entries.push(ModeEntry {
            weight: d * d,
            x: d,
            zeta: d,
        });
        Ok(ModeFlags::default())
    })
}

/// `v_c = inf f` in units of `c0`.
pub fn critical_velocity<T: Real>(p: &CondensateParams<T>) -> Result<T> {
    let profile = DispersionProfile::scan(p, T::lit(DEFAULT_ZETA_MAX));
    let roton = profile.roton();
    if !roton.stable {
        let z = roton.zeta_c.unwrap_or(T::zero());
        return Err(Error::Instability {
            zeta: z.as_f64(),
            f_squared: p.f_squared(z).as_f64(),
        });
    }
    Ok(roton.f_c)
}

/// Initial ceiling for the `ζ+` search; doubled while `f < v` there.
pub const ZETA_PLUS_CEILING: f64 = 1.0e3;

/// `ΔP = (1/(π γ)) ∫_{ζ-}^{ζ+} ζ / (f sqrt(v² - f²)) dζ` in Fig2 units, where
/// `f(ζ±) = v` bracket the roton minimum. Zero when `v <= f_c`.
pub fn delta_p_correction<T: Real>(
    p: &CondensateParams<T>,
    orbit: &DetectorOrbit<T>,
    rel_tol: T,
) -> Result<LiLimitResult<T>> {
    let p0 = T::zero();
    let profile = DispersionProfile::scan(p, T::lit(DEFAULT_ZETA_MAX));
    let roton = profile.roton();
    if !roton.stable {
        let z = roton.zeta_c.unwrap_or(T::zero());
        return Err(Error::Instability {
            zeta: z.as_f64(),
            f_squared: p.f_squared(z).as_f64(),
        });
    }
    let v = orbit.v();
    let zeta_c = match roton.zeta_c {
        Some(z) if v > roton.f_c => z,
        _ => {
            return Ok(LiLimitResult {
                p0,
                delta_p: T::zero(),
                zeta_minus: None,
                zeta_plus: None,
            })
        }
    };
    let (zm, zp) = crossing_points(p, v, zeta_c)?;
    let v2 = v * v;
    let half = (zp - zm) / T::lit(2.0);
    // where v² - f² is mostly rounding noise, rebuild it from f²' instead
    let noisy = T::lit(1e-6) * v2;
    let (nodes, weights) = gauss_legendre::<T>(16);
    let gap_from_slope = |from: T, to: T| -> T {
        let (c, h) = ((from + to) / T::lit(2.0), (to - from) / T::lit(2.0));
        let mut acc = T::zero();
        for (x, w) in nodes.iter().zip(&weights) {
            acc = acc + *w * p.f_squared_prime(c + h * *x);
        }
        -acc * h
    };
    // ζ = ζ- + 2h sin²(t/2): dζ = sqrt((ζ-ζ-)(ζ+-ζ)) dt cancels both square-root ends
    let integrand = |t: T| -> T {
        let dl = T::lit(2.0) * half * (t / T::lit(2.0)).sin().powi(2);
        let dr = T::lit(2.0) * half * ((T::PI() - t) / T::lit(2.0)).sin().powi(2);
        let zeta = if dl < dr { zm + dl } else { zp - dr };
        let f2 = p.f_squared(zeta);
        let mut gap = v2 - f2;
        if gap < noisy {
            gap = if dl < dr {
                gap_from_slope(zm, zeta)
            } else {
                gap_from_slope(zp, zeta)
            };
        }
        if !(gap > T::zero()) {
            return T::zero();
        }
        zeta / f2.sqrt() * (dl * dr / gap).sqrt()
    };
    let whole = integrate(integrand, T::zero(), T::PI(), rel_tol, T::zero(), 2000)?;
    let delta_p = whole.value / (T::PI() * orbit.gamma());
    Ok(LiLimitResult {
        p0,
        delta_p,
        zeta_minus: Some(zm),
        zeta_plus: Some(zp),
    })
}

/// `P0` and `ΔP` together.
pub fn li_limit<T: Real>(
    p: &CondensateParams<T>,
    orbit: &DetectorOrbit<T>,
    rel_tol: T,
) -> Result<LiLimitResult<T>> {
    let mut out = delta_p_correction(p, orbit, rel_tol)?;
    out.p0 = p0_rate(orbit, rel_tol)?.value;
    Ok(out)
}

/// Solutions of `f(ζ) = v` on either side of the minimum at `zeta_c`.
pub fn crossing_points<T: Real>(p: &CondensateParams<T>, v: T, zeta_c: T) -> Result<(T, T)> {
    let h = |z: T| p.f_squared(z) - v * v;
    let tol = RootTolerance::default();
    let lower = brent(h, T::zero(), zeta_c, tol).ok_or_else(|| Error::Bracket {
        interval: "(0, zeta_c) for zeta_minus",
        detail: format!("f - v does not change sign for v = {}", v.as_f64()),
    })?;
    let mut hi = T::lit(ZETA_PLUS_CEILING).max(zeta_c * T::lit(2.0));
    while h(hi) < T::zero() {
        hi = hi * T::lit(2.0);
        if !hi.is_finite() {
            break;
        }
    }
    let upper = brent(h, zeta_c, hi, tol).ok_or_else(|| Error::Bracket {
        interval: "(zeta_c, ceiling) for zeta_plus",
        detail: format!("f - v does not change sign for v = {}", v.as_f64()),
    })?;
    Ok((lower, upper))
}

/// `√(24/5)`, the exponent coefficient of the ultrarelativistic forms.
pub fn sqrt_24_over_5<T: Real>() -> T {
    T::lit(4.8).sqrt()
}

/// `P(ω0)/P(-ω0) = (12 y²/5) exp(-√(24/5) y)` with `y = c0 ω0 / a`.
pub fn ultrarelativistic_ratio<T: Real>(y: T) -> Result<T> {
    Ok(ultrarelativistic_log_ratio(y)?.exp())
}

/// Natural log of [`ultrarelativistic_ratio`]; finite where the ratio underflows.
pub fn ultrarelativistic_log_ratio<T: Real>(y: T) -> Result<T> {
    if !(y > T::zero() && y.is_finite()) {
        return Err(domain("c0 omega0 / a must be positive", y.as_f64()));
    }
    Ok((T::lit(2.4) * y * y).ln() - sqrt_24_over_5::<T>() * y)
}

/// Whether `(γ, c0 ω0 / a)` lies in the regime the ultrarelativistic forms
/// are meant for.
pub fn is_ultrarelativistic<T: Real>(gamma: T, y: T) -> bool {
    gamma >= T::lit(10.0) && y >= T::lit(5.0)
}

/// `√5 ħ a / (2 √6 k_B c0)` in kelvin, for `a` in m/s² and `c0` in m/s.
pub fn t_eff_circular<T: Real>(a: T, c0: T) -> Result<T> {
    if !(a > T::zero() && a.is_finite()) {
        return Err(domain("acceleration must be positive", a.as_f64()));
    }
    if !(c0 > T::zero() && c0.is_finite()) {
        return Err(domain("sound speed must be positive", c0.as_f64()));
    }
    Ok(t_eff_coefficient::<T>() * T::lit(HBAR) * a / (T::lit(K_B) * c0))
}

/// `√5 / (2 √6)`: `T_eff` in units of `ħ a / (k_B c0)`.
pub fn t_eff_coefficient<T: Real>() -> T {
    T::lit(5.0).sqrt() / (T::lit(2.0) * T::lit(6.0).sqrt())
}

/// `1 - exp(-√(24/5) y) + 12 y² / 5`.
pub fn closed_form_bracket<T: Real>(y: T) -> T {
    T::one() - (-sqrt_24_over_5::<T>() * y).exp() + T::lit(2.4) * y * y
}

/// `prefactor · (3γ² - 1) a² · [1 - exp(-√(24/5) c0 ω0/a) + 12 c0² ω0²/(5 a²)]`.
///
/// `omega0` is signed; a negative gap gives the de-excitation form.
pub fn closed_form_rate_li<T: Real>(
    gamma: T,
    accel: T,
    c0: T,
    omega0: T,
    prefactor: T,
) -> Result<T> {
    if !(gamma > T::one() && gamma.is_finite()) {
        return Err(domain("gamma must exceed 1", gamma.as_f64()));
    }
    if !(accel > T::zero() && accel.is_finite()) {
        return Err(domain("acceleration must be positive", accel.as_f64()));
    }
    if !(c0 > T::zero() && c0.is_finite()) {
        return Err(domain("sound speed must be positive", c0.as_f64()));
    }
    if !omega0.is_finite() || !prefactor.is_finite() {
        return Err(domain("gap and prefactor must be finite", omega0.as_f64()));
    }
    let y = c0 * omega0 / accel;
    Ok(prefactor
        * (T::lit(3.0) * gamma * gamma - T::one())
        * accel
        * accel
        * closed_form_bracket(y))
}
