//! Bogoliubov dispersion of a quasi-2D dipolar condensate.
//!
//! Quasiparticle frequencies are written `ω_k = c0 k f(ζ)` with
//! `ζ = ħ c0 k / M*` and
//!
//! ```text
//! f²(ζ) = 1 - (3 R0 / 2) sqrt(A) ζ w(sqrt(A/2) ζ) + ζ² / 4,
//! ```
//!
//! where `w(x) = exp(x²) erfc(x)`, `R0` is the dipolar ratio and `A` the
//! effective chemical potential in units of the transverse trap energy.

use crate::error::{domain, Error, Result};
use crate::roots::bisect;
use crate::scalar::Real;
use crate::specfun::scaled_erfc_unchecked;

/// Dipolar ratio at full dipole–dipole dominance, `sqrt(pi/2)`.
pub fn r0_dipolar_dominance<T: Real>() -> T {
    (T::PI() / T::lit(2.0)).sqrt()
}

/// A dispersion `f(ζ)` with `f(0) = 1`.
///
/// Implementors supply `f²` and its derivative; everything else is derived.
pub trait Dispersion<T: Real>: Send + Sync {
    fn f_squared(&self, zeta: T) -> T;

    /// `d(f²)/dζ`.
    fn f_squared_prime(&self, zeta: T) -> T;

    /// Lower end of the logarithmic scan grid.
    fn grid_floor(&self) -> T {
        T::lit(1e-4)
    }

    /// Closed-form solution of `ζ f(ζ) = target`, when one exists.
    fn exact_zeta_f_inverse(&self, _target: T) -> Option<T> {
        None
    }

    fn f(&self, zeta: T) -> Result<T> {
        let f2 = self.f_squared(zeta);
        if f2 < T::zero() || f2.is_nan() {
            return Err(instability(zeta, f2));
        }
        Ok(f2.sqrt())
    }

    /// `d(ζ f)/dζ = f + ζ f'`.
    fn zeta_f_prime(&self, zeta: T) -> Result<T> {
        let f2 = self.f_squared(zeta);
        if !(f2 > T::zero()) {
            return Err(instability(zeta, f2));
        }
        let f = f2.sqrt();
        Ok(f + zeta * self.f_squared_prime(zeta) / (T::lit(2.0) * f))
    }

    /// `(u_k + v_k)² = ζ / (2 f(ζ))`.
    fn bogoliubov_weight(&self, zeta: T) -> Result<T> {
        let f2 = self.f_squared(zeta);
        if !(f2 > T::zero()) {
            return Err(instability(zeta, f2));
        }
        Ok(zeta / (T::lit(2.0) * f2.sqrt()))
    }
}

fn instability<T: Real>(zeta: T, f2: T) -> Error {
    Error::Instability {
        zeta: zeta.as_f64(),
        f_squared: f2.as_f64(),
    }
}

/// Dimensionless condensate parameters `(R0, A)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CondensateParams<T> {
    r0: T,
    a_chem: T,
}

impl<T: Real> CondensateParams<T> {
    pub fn new(r0: T, a_chem: T) -> Result<Self> {
        let r0_max = r0_dipolar_dominance::<T>();
        // accept r0 rounded from sqrt(pi/2) at single precision
        if !(r0 >= T::zero() && r0 <= r0_max * (T::one() + T::lit(1e-7))) {
            return Err(domain("R0 must lie in [0, sqrt(pi/2)]", r0.as_f64()));
        }
        if !(a_chem > T::zero() && a_chem.is_finite()) {
            return Err(domain("A must be positive and finite", a_chem.as_f64()));
        }
        Ok(Self {
            r0: r0.min(r0_max),
            a_chem,
        })
    }

    pub fn r0(&self) -> T {
        self.r0
    }

    pub fn a_chem(&self) -> T {
        self.a_chem
    }

    fn coupling(&self) -> T {
        T::lit(1.5) * self.r0 * self.a_chem.sqrt()
    }

    fn erfc_scale(&self) -> T {
        (self.a_chem / T::lit(2.0)).sqrt()
    }
}

impl<T: Real> Dispersion<T> for CondensateParams<T> {
    fn f_squared(&self, zeta: T) -> T {
        let x = self.erfc_scale() * zeta;
        T::one() - self.coupling() * zeta * scaled_erfc_unchecked(x) + zeta * zeta / T::lit(4.0)
    }

    fn f_squared_prime(&self, zeta: T) -> T {
        // d/dζ [ζ w(sζ)] = w(x)(1 + 2x²) - 2x/√π with x = sζ
        let x = self.erfc_scale() * zeta;
        let w = scaled_erfc_unchecked(x);
        let d = w * (T::one() + T::lit(2.0) * x * x) - x * T::FRAC_2_SQRT_PI();
        zeta / T::lit(2.0) - self.coupling() * d
    }

    fn grid_floor(&self) -> T {
        T::lit(1e-4).min(T::lit(1e-2) / self.a_chem.sqrt())
    }
}

/// The Lorentz-invariant reference dispersion `f ≡ 1`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LorentzInvariant;

impl<T: Real> Dispersion<T> for LorentzInvariant {
    fn f_squared(&self, _zeta: T) -> T {
        T::one()
    }

    fn f_squared_prime(&self, _zeta: T) -> T {
        T::zero()
    }

    fn exact_zeta_f_inverse(&self, target: T) -> Option<T> {
        Some(target)
    }
}

/// `f(ζ)`; errors when `f²(ζ) < 0`.
pub fn f_of_zeta<T: Real>(p: &CondensateParams<T>, zeta: T) -> Result<T> {
    check_zeta(zeta)?;
    p.f(zeta)
}

pub fn f_squared_prime<T: Real>(p: &CondensateParams<T>, zeta: T) -> Result<T> {
    check_zeta(zeta)?;
    Ok(p.f_squared_prime(zeta))
}

pub fn zeta_f_prime<T: Real>(p: &CondensateParams<T>, zeta: T) -> Result<T> {
    check_zeta(zeta)?;
    p.zeta_f_prime(zeta)
}

pub fn bogoliubov_weight<T: Real>(p: &CondensateParams<T>, zeta: T) -> Result<T> {
    check_zeta(zeta)?;
    p.bogoliubov_weight(zeta)
}

fn check_zeta<T: Real>(zeta: T) -> Result<()> {
    if zeta >= T::zero() && zeta.is_finite() {
        Ok(())
    } else {
        Err(domain("zeta must be finite and >= 0", zeta.as_f64()))
    }
}

pub const DEFAULT_ZETA_MAX: f64 = 50.0;
const GRID_HALF: usize = 2000;

/// Grid scan of a dispersion: stability, global minimum and the folds of
/// `ζ f(ζ)`.
#[derive(Debug, Clone)]
pub struct DispersionProfile<T> {
    grid: Vec<T>,
    f2: Vec<T>,
    stable: bool,
    min_zeta: T,
    min_f2: T,
    interior_min: bool,
    f_at_zero: T,
    folds: Vec<T>,
    zf_monotone: bool,
    zeta_max: T,
}

impl<T: Real> DispersionProfile<T> {
    pub fn scan<D: Dispersion<T> + ?Sized>(disp: &D, zeta_max: T) -> Self {
        let floor = disp.grid_floor();
        let mut grid = Vec::with_capacity(2 * GRID_HALF);
        let log_lo = floor.ln();
        let step = -log_lo / T::from_usize(GRID_HALF - 1).unwrap();
        for i in 0..GRID_HALF {
            grid.push((log_lo + step * T::from_usize(i).unwrap()).exp());
        }
        if zeta_max > T::one() {
            let lin = (zeta_max - T::one()) / T::from_usize(GRID_HALF).unwrap();
            for i in 1..=GRID_HALF {
                grid.push(T::one() + lin * T::from_usize(i).unwrap());
            }
        }
        let f2: Vec<T> = grid.iter().map(|&z| disp.f_squared(z)).collect();

        let (mut i_min, mut min_f2) = (0, f2[0]);
        for (i, &v) in f2.iter().enumerate() {
            if v < min_f2 {
                i_min = i;
                min_f2 = v;
            }
        }
        let mut min_zeta = grid[i_min];
        let interior_min = i_min > 0 && i_min + 1 < grid.len();
        if interior_min {
            let lo = grid[i_min - 1];
            let hi = grid[i_min + 1];
            let tol = T::lit(1e-12).max(T::epsilon() * T::lit(8.0) * hi);
            if let Some(z) = bisect(|z| disp.f_squared_prime(z), lo, hi, tol) {
                let v = disp.f_squared(z);
                if v <= min_f2 {
                    min_zeta = z;
                    min_f2 = v;
                }
            }
        }
        let stable = min_f2 > T::zero() && f2.iter().all(|&v| v > T::zero());

        let mut folds = Vec::new();
        let mut zf_monotone = stable;
        if stable {
            let slope = |z: T| T::lit(2.0) * disp.f_squared(z) + z * disp.f_squared_prime(z);
            let g: Vec<T> = grid.iter().map(|&z| slope(z)).collect();
            if g.iter().any(|&v| v <= T::zero()) {
                zf_monotone = false;
            }
            for i in 1..grid.len() {
                if (g[i - 1] > T::zero()) != (g[i] > T::zero()) {
                    let tol = T::lit(1e-13).max(T::epsilon() * T::lit(8.0) * grid[i]);
                    if let Some(z) = bisect(slope, grid[i - 1], grid[i], tol) {
                        folds.push(z);
                    }
                }
            }
        }

        Self {
            f_at_zero: disp.f_squared(T::zero()).max(T::zero()).sqrt(),
            grid,
            f2,
            stable,
            min_zeta,
            min_f2,
            interior_min,
            folds,
            zf_monotone,
            zeta_max,
        }
    }

    pub fn stable(&self) -> bool {
        self.stable
    }

    /// Zeros of `(ζ f)'`, ascending. Empty when `ζ f` is monotone.
    pub fn folds(&self) -> &[T] {
        &self.folds
    }

    pub fn zf_monotone(&self) -> bool {
        self.zf_monotone
    }

    pub fn min_f_squared(&self) -> T {
        self.min_f2
    }

    pub fn zeta_max(&self) -> T {
        self.zeta_max
    }

    pub fn roton(&self) -> RotonInfo<T> {
        let zeta_c = if self.interior_min && self.min_f2 < self.f_at_zero * self.f_at_zero {
            Some(self.min_zeta)
        } else {
            None
        };
        let f_c = match zeta_c {
            Some(_) => self.min_f2.max(T::zero()).sqrt(),
            None => self.f_at_zero,
        };
        RotonInfo {
            stable: self.stable,
            zeta_c,
            f_c,
            zf_monotone: self.zf_monotone,
        }
    }

    /// Maximal grid intervals on which `f(ζ) < level`, each refined to a
    /// crossing of `f² = level²`. The upper end of the last interval is
    /// `None` when `f < level` persists to the grid edge.
    pub fn sublevel_intervals<D: Dispersion<T> + ?Sized>(
        &self,
        disp: &D,
        level: T,
    ) -> Vec<(T, Option<T>)> {
        let level2 = level * level;
        let below: Vec<bool> = self.f2.iter().map(|&v| v < level2).collect();
        let h = |z: T| disp.f_squared(z) - level2;
        let refine = |i: usize| {
            let tol = T::lit(1e-14).max(T::epsilon() * T::lit(4.0) * self.grid[i]);
            bisect(h, self.grid[i - 1], self.grid[i], tol).unwrap_or(self.grid[i])
        };
        let mut out = Vec::new();
        let mut start: Option<T> = if below[0] { Some(T::zero()) } else { None };
        for i in 1..self.grid.len() {
            match (below[i - 1], below[i]) {
                (false, true) => start = Some(refine(i)),
                (true, false) => {
                    if let Some(s) = start.take() {
                        out.push((s, Some(refine(i))));
                    }
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s, None));
        }
        out
    }
}

/// Summary of the minimum structure of `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotonInfo<T> {
    /// `f² > 0` everywhere on the scan.
    pub stable: bool,
    /// Location of the interior global minimum of `f`, if any.
    pub zeta_c: Option<T>,
    /// `inf f`; 1 when the infimum is the `ζ → 0` limit, 0 when unstable.
    pub f_c: T,
    /// `(ζ f)' > 0` on the whole scan.
    pub zf_monotone: bool,
}

pub fn analyze_roton<T: Real>(p: &CondensateParams<T>, zeta_max: T) -> RotonInfo<T> {
    DispersionProfile::scan(p, zeta_max).roton()
}

const CRITICAL_A_CEILING: f64 = 1.0e6;

/// Smallest `A` at which the spectrum with dipolar ratio `r0` turns unstable,
/// located by bisection to `tol`. `None` when the spectrum stays stable up to
/// `A = 1e6` (always the case for `r0 < (2/3) sqrt(pi/2)`, where the
/// large-`A` limit of `min f²` is `1 - (3 R0/2) sqrt(2/pi) > 0`).
pub fn critical_a<T: Real>(r0: T, tol: T) -> Result<Option<T>> {
    let zeta_max = T::lit(DEFAULT_ZETA_MAX);
    if !(tol > T::zero()) {
        return Err(domain("tolerance must be positive", tol.as_f64()));
    }
    let stable_at = |a: T| -> Result<bool> {
        let p = CondensateParams::new(r0, a)?;
        Ok(DispersionProfile::scan(&p, zeta_max).stable())
    };
    let mut hi = T::one();
    if stable_at(hi)? {
        loop {
            hi = hi * T::lit(2.0);
            if hi > T::lit(CRITICAL_A_CEILING) {
                return Ok(None);
            }
            if !stable_at(hi)? {
                break;
            }
        }
    }
    let mut lo = hi / T::lit(2.0);
    while !stable_at(lo)? {
        hi = lo;
        lo = lo / T::lit(2.0);
        if lo < T::lit(1e-12) {
            return Ok(Some(lo));
        }
    }
    while hi - lo > tol {
        let mid = (lo + hi) / T::lit(2.0);
        if stable_at(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some((lo + hi) / T::lit(2.0)))
}
