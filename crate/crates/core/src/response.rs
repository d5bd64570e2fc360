//! Mode-sum transition rate of a detector on a circular orbit.
//!
//! In units of `g₋² ρ0 m_B / (2 ħ³)` the rate is
//!
//! ```text
//! P = (1/γ) Σ_{m ≥ m_min} Σ_{ζ_m} ζ_m² / (f(ζ_m) |(ζ f)'(ζ_m)|) J_m²(M̃ ζ_m),
//! ```
//!
//! where each `ζ_m` solves `ζ f(ζ) = (m v - Ẽ/γ) / M̃`.

use std::collections::VecDeque;
use std::fmt;

use crate::dispersion::{CondensateParams, Dispersion, DispersionProfile, DEFAULT_ZETA_MAX};
use crate::error::{domain, Error, Result};
use crate::roots::{brent, RootTolerance};
use crate::scalar::Real;
use crate::specfun::{bessel_j_unchecked, kapteyn_log_bound};

/// Largest number of harmonics summed before giving up.
pub const MAX_HARMONICS: i64 = 10_000_000;
/// Width of the trailing window whose relative mass must fall below `rel_tol`.
pub const TAIL_WINDOW: usize = 40;
/// `|(ζ f)'|` below this marks a root as sitting on a van Hove singularity.
pub const SINGULAR_SLOPE: f64 = 1e-8;
/// Half-width of the excluded window around a fold of `ζ f`.
pub const SINGULAR_WINDOW: f64 = 1e-6;
/// Rates below this are treated as underflowed by the thermometry.
pub const UNDERFLOW_FLOOR: f64 = 1e-280;
const ABS_FLOOR: f64 = 1e-290;

/// Dimensionless detector state `(M̃, Ẽ, v)`; `γ` is derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorOrbit<T> {
    m_tilde: T,
    e_tilde: T,
    v: T,
    gamma: T,
}

impl<T: Real> DetectorOrbit<T> {
    pub fn new(m_tilde: T, e_tilde: T, v: T) -> Result<Self> {
        if !(m_tilde > T::zero() && m_tilde.is_finite()) {
            return Err(domain("M~ must be positive and finite", m_tilde.as_f64()));
        }
        if !e_tilde.is_finite() {
            return Err(domain("E~ must be finite", e_tilde.as_f64()));
        }
        if !(v > T::zero() && v < T::one()) {
            return Err(domain("v must lie in (0, 1)", v.as_f64()));
        }
        let gamma = T::one() / ((T::one() - v) * (T::one() + v)).sqrt();
        Ok(Self {
            m_tilde,
            e_tilde,
            v,
            gamma,
        })
    }

    pub fn m_tilde(&self) -> T {
        self.m_tilde
    }

    pub fn e_tilde(&self) -> T {
        self.e_tilde
    }

    pub fn v(&self) -> T {
        self.v
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    /// The same orbit with the gap sign flipped (de-excitation).
    pub fn reversed(&self) -> Self {
        Self {
            e_tilde: -self.e_tilde,
            ..*self
        }
    }

    /// Smallest `m` with `m v - Ẽ/γ > 0`.
    pub fn m_min(&self) -> i64 {
        let ratio = self.e_tilde / (self.v * self.gamma);
        let m = ratio.floor().to_i64().unwrap_or(i64::MAX - 1) + 1;
        // guard against rounding in the division
        if self.detuning(m) <= T::zero() {
            m + 1
        } else {
            m
        }
    }

    /// `m v - Ẽ/γ`.
    pub fn detuning(&self, m: i64) -> T {
        T::from_i64(m).unwrap() * self.v - self.e_tilde / self.gamma
    }

    /// Right-hand side of the delta constraint for harmonic `m`.
    pub fn target(&self, m: i64) -> T {
        self.detuning(m) / self.m_tilde
    }
}

/// One root of `ζ f(ζ) = target`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaRoot<T> {
    pub zeta: T,
    pub zf_prime: T,
}

/// Inverts `ζ f(ζ)` piecewise between its folds.
pub struct DeltaSolver<'a, T: Real, D: Dispersion<T> + ?Sized> {
    disp: &'a D,
    folds: Vec<T>,
    pieces: Vec<(T, Option<T>)>,
}

impl<'a, T: Real, D: Dispersion<T> + ?Sized> DeltaSolver<'a, T, D> {
    /// Errors when the dispersion is unstable.
    pub fn new(disp: &'a D) -> Result<Self> {
        let profile = DispersionProfile::scan(disp, T::lit(DEFAULT_ZETA_MAX));
        Self::from_profile(disp, &profile)
    }

    pub fn from_profile(disp: &'a D, profile: &DispersionProfile<T>) -> Result<Self> {
        if !profile.stable() {
            let r = profile.roton();
            let z = r.zeta_c.unwrap_or(T::zero());
            return Err(Error::Instability {
                zeta: z.as_f64(),
                f_squared: disp.f_squared(z).as_f64(),
            });
        }
        let folds = profile.folds().to_vec();
        let mut pieces = Vec::with_capacity(folds.len() + 1);
        let mut lo = T::zero();
        for &fold in &folds {
            pieces.push((lo, Some(fold)));
            lo = fold;
        }
        pieces.push((lo, None));
        Ok(Self {
            disp,
            folds,
            pieces,
        })
    }

    pub fn folds(&self) -> &[T] {
        &self.folds
    }

    fn zeta_f(&self, z: T) -> T {
        z * self.disp.f_squared(z).max(T::zero()).sqrt()
    }

    /// All roots `ζ > 0` of `ζ f(ζ) = target`, ascending.
    pub fn solve(&self, target: T) -> Result<Vec<DeltaRoot<T>>> {
        if !(target >= T::zero()) || !target.is_finite() {
            return Err(domain("delta target must be finite and >= 0", target.as_f64()));
        }
        if target == T::zero() {
            return Ok(Vec::new());
        }
        if let Some(z) = self.disp.exact_zeta_f_inverse(target) {
            return Ok(vec![DeltaRoot {
                zeta: z,
                zf_prime: self.disp.zeta_f_prime(z)?,
            }]);
        }
        let h = |z: T| self.zeta_f(z) - target;
        let mut roots: Vec<DeltaRoot<T>> = Vec::new();
        for &(lo, hi) in &self.pieces {
            let hi = match hi {
                Some(hi) => hi,
                None => {
                    let mut hi = if lo > T::zero() { lo * T::lit(2.0) } else { T::one() };
                    while h(hi) < T::zero() {
                        hi = hi * T::lit(2.0);
                        if !hi.is_finite() {
                            return Err(Error::Bracket {
                                interval: "upper monotone branch of zeta f",
                                detail: format!("no bracket for target {}", target.as_f64()),
                            });
                        }
                    }
                    hi
                }
            };
            let (hl, hh) = (h(lo), h(hi));
            if (hl < T::zero()) == (hh < T::zero()) {
                continue;
            }
            if let Some(z) = brent(h, lo, hi, RootTolerance::default()) {
                if z > T::zero()
                    && roots
                        .last()
                        .map_or(true, |r| (z - r.zeta).abs() > T::epsilon() * T::lit(16.0) * z)
                {
                    roots.push(DeltaRoot {
                        zeta: z,
                        zf_prime: self.disp.zeta_f_prime(z)?,
                    });
                }
            }
        }
        Ok(roots)
    }

    fn near_fold(&self, root: &DeltaRoot<T>) -> bool {
        root.zf_prime.abs() < T::lit(SINGULAR_SLOPE)
            || self
                .folds
                .iter()
                .any(|&f| (root.zeta - f).abs() < T::lit(SINGULAR_WINDOW))
    }
}

/// Roots of `ζ f(ζ) = target` for the condensate dispersion.
pub fn solve_delta_roots<T: Real>(
    p: &CondensateParams<T>,
    target: T,
) -> Result<Vec<DeltaRoot<T>>> {
    DeltaSolver::new(p)?.solve(target)
}

/// Mode-sum rate with truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateResult<T> {
    /// Rate in units `g₋² ρ0 m_B / (2 ħ³)`.
    pub value: T,
    pub m_min: i64,
    pub m_used: i64,
    /// Estimated relative size of the omitted tail.
    pub tail_bound: T,
    pub multi_root: bool,
    pub near_singular: bool,
}

fn check_rel_tol<T: Real>(rel_tol: T) -> Result<()> {
    if rel_tol > T::zero() && rel_tol < T::one() {
        Ok(())
    } else {
        Err(domain("rel_tol must lie in (0, 1)", rel_tol.as_f64()))
    }
}

/// Evaluates the mode sum for any dispersion.
///
/// Summation runs upward from `m_min` in a fixed order. It stops once every
/// root has left the band where `f < v`, the Bessel factors are evanescent,
/// the last [`TAIL_WINDOW`] terms carry relative mass below `rel_tol` and the
/// geometric extrapolation of the Kapteyn envelope is below `rel_tol`.
pub fn transition_rate<T: Real, D: Dispersion<T> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<T>,
    rel_tol: T,
) -> Result<RateResult<T>> {
    check_rel_tol(rel_tol)?;
    let profile = DispersionProfile::scan(disp, T::lit(DEFAULT_ZETA_MAX));
    let solver = DeltaSolver::from_profile(disp, &profile)?;
    let band_top = band_upper_edge(disp, &profile, orbit.v())?;
    mode_sum(&solver, orbit, rel_tol, band_top)
}

/// Upper end of the region where `f(ζ) < v`, if any.
fn band_upper_edge<T: Real, D: Dispersion<T> + ?Sized>(
    disp: &D,
    profile: &DispersionProfile<T>,
    v: T,
) -> Result<Option<T>> {
    let intervals = profile.sublevel_intervals(disp, v);
    match intervals.last() {
        None => Ok(None),
        Some(&(_, Some(hi))) => Ok(Some(hi)),
        Some(&(lo, None)) => {
            let mut hi = profile.zeta_max().max(lo * T::lit(2.0));
            while disp.f_squared(hi) < v * v {
                hi = hi * T::lit(2.0);
                if !hi.is_finite() {
                    return Err(Error::Bracket {
                        interval: "upper edge of f < v",
                        detail: "f stays below v".into(),
                    });
                }
            }
            Ok(Some(hi))
        }
    }
}

/// One contribution `weight · J_m²(x)` to harmonic `m`; `zeta` locates it
/// relative to the band where `f < v`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ModeEntry<T> {
    pub weight: T,
    pub x: T,
    pub zeta: T,
}

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct ModeFlags {
    pub multi_root: bool,
    pub near_singular: bool,
}

fn mode_sum<T: Real, D: Dispersion<T> + ?Sized>(
    solver: &DeltaSolver<'_, T, D>,
    orbit: &DetectorOrbit<T>,
    rel_tol: T,
    band_top: Option<T>,
) -> Result<RateResult<T>> {
    let mt = orbit.m_tilde();
    harmonic_sum(orbit, rel_tol, band_top, |m, entries| {
        let roots = solver.solve(orbit.target(m))?;
        let mut flags = ModeFlags {
            multi_root: roots.len() > 1,
            near_singular: false,
        };
        for root in &roots {
            if solver.near_fold(root) {
                flags.near_singular = true;
                continue;
            }
            let f = orbit_f(solver.disp, root.zeta);
            entries.push(ModeEntry {
                weight: root.zeta * root.zeta / (f * root.zf_prime.abs()),
                x: mt * root.zeta,
                zeta: root.zeta,
            });
        }
        Ok(flags)
    })
}

/// `(1/γ) Σ_{m ≥ m_min} Σ_entries weight · J_m²(x)` with the truncation rule
/// of [`transition_rate`].
pub(crate) fn harmonic_sum<T: Real, F>(
    orbit: &DetectorOrbit<T>,
    rel_tol: T,
    band_top: Option<T>,
    mut entries_for: F,
) -> Result<RateResult<T>>
where
    F: FnMut(i64, &mut Vec<ModeEntry<T>>) -> Result<ModeFlags>,
{
    let m_min = orbit.m_min();
    let mut sum = T::zero();
    let mut window: VecDeque<T> = VecDeque::with_capacity(TAIL_WINDOW + 1);
    let mut prev_envelope: Option<T> = None;
    let mut multi_root = false;
    let mut near_singular = false;
    let mut tail_bound = T::infinity();
    let mut entries = Vec::new();
    let mut m = m_min;
    loop {
        entries.clear();
        let flags = entries_for(m, &mut entries)?;
        multi_root |= flags.multi_root;
        near_singular |= flags.near_singular;
        let mut term = T::zero();
        let mut envelope = T::zero();
        let mut settled = m > 0;
        for e in &entries {
            let j = bessel_j_unchecked(m, e.x);
            term = term + e.weight * j * j;
            if m > 0 {
                if e.x >= T::from_i64(m).unwrap() {
                    settled = false;
                }
                envelope =
                    envelope + e.weight * (T::lit(2.0) * kapteyn_log_bound(m as u64, e.x)).exp();
            }
        }
        if let Some(b) = band_top {
            if entries.iter().all(|e| e.zeta <= b) {
                settled = false;
            }
        }
        sum = sum + term;
        window.push_back(term);
        if window.len() > TAIL_WINDOW {
            window.pop_front();
        }

        if settled && window.len() == TAIL_WINDOW {
            let recent = window.iter().fold(T::zero(), |a, &t| a + t);
            let tail = match prev_envelope {
                Some(prev) if prev > T::zero() && envelope < prev => {
                    let r = envelope / prev;
                    envelope * r / (T::one() - r)
                }
                Some(_) if envelope == T::zero() => T::zero(),
                _ => T::infinity(),
            };
            let floor = T::lit(ABS_FLOOR);
            let recent_ok = recent <= rel_tol * sum || (sum <= floor && recent <= floor);
            let tail_ok = tail <= rel_tol * sum || (sum <= floor && tail <= floor);
            if recent_ok && tail_ok {
                tail_bound = if sum > T::zero() { tail / sum } else { T::zero() };
                break;
            }
        }
        prev_envelope = if settled { Some(envelope) } else { None };
        if m - m_min >= MAX_HARMONICS {
            return Err(Error::Truncation {
                terms: (m - m_min) as u64,
                partial: (sum / orbit.gamma()).as_f64(),
                tail_bound: tail_bound.as_f64(),
            });
        }
        m += 1;
    }
    Ok(RateResult {
        value: sum / orbit.gamma(),
        m_min,
        m_used: m,
        tail_bound,
        multi_root,
        near_singular,
    })
}

fn orbit_f<T: Real, D: Dispersion<T> + ?Sized>(disp: &D, zeta: T) -> T {
    disp.f_squared(zeta).max(T::zero()).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TemperatureStatus {
    Ok,
    /// One of the two rates fell below [`UNDERFLOW_FLOOR`].
    Underflow,
    /// The two rates agree within `rel_tol`.
    Undefined,
}

impl TemperatureStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            TemperatureStatus::Ok => "ok",
            TemperatureStatus::Underflow => "underflow",
            TemperatureStatus::Undefined => "undefined",
        }
    }
}

impl fmt::Display for TemperatureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Detailed-balance temperature at one orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemperaturePoint<T> {
    pub v: T,
    /// Gap in units `M*/ħ`.
    pub omega0: T,
    /// In units `M*/k_B`; `None` unless `status` is `Ok`.
    pub temperature: Option<T>,
    pub status: TemperatureStatus,
    pub rate_excite: T,
    pub rate_deexcite: T,
}

/// `T = (ħ ω0 / k_B) / ln(P(-ω0) / P(ω0))` in units `M*/k_B`, with
/// `ħ ω0 = (Ẽ / M̃) M*`.
pub fn detailed_balance_temperature<T: Real, D: Dispersion<T> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<T>,
    rel_tol: T,
) -> Result<TemperaturePoint<T>> {
    if !(orbit.e_tilde() > T::zero()) {
        return Err(domain("detector gap E~ must be positive", orbit.e_tilde().as_f64()));
    }
    let up = transition_rate(disp, orbit, rel_tol)?.value;
    let down = transition_rate(disp, &orbit.reversed(), rel_tol)?.value;
    Ok(temperature_from_rates(orbit, up, down, rel_tol))
}

pub(crate) fn temperature_from_rates<T: Real>(
    orbit: &DetectorOrbit<T>,
    up: T,
    down: T,
    rel_tol: T,
) -> TemperaturePoint<T> {
    let omega0 = orbit.e_tilde() / orbit.m_tilde();
    let floor = T::lit(UNDERFLOW_FLOOR);
    let (temperature, status) = if up < floor || down < floor {
        (None, TemperatureStatus::Underflow)
    } else {
        let log_ratio = (down / up).ln();
        if log_ratio.abs() <= rel_tol {
            (None, TemperatureStatus::Undefined)
        } else {
            (Some(omega0 / log_ratio), TemperatureStatus::Ok)
        }
    };
    TemperaturePoint {
        v: orbit.v(),
        omega0,
        temperature,
        status,
        rate_excite: up,
        rate_deexcite: down,
    }
}
