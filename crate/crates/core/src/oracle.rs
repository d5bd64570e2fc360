//! Slow independent evaluations of the rate, for tests and `--verify`.
//!
//! * [`smeared_delta_rate`] integrates the mode-sum integrand over `ζ` with
//!   the delta constraint replaced by a normalized Gaussian of width `σ` in
//!   `ζ f` units.
//! * [`wightman_rate`] Fourier-transforms the density two-point function along
//!   the orbit,
//!
//!   ```text
//!   W(τ) = ∫ dζ (ζ²/f) J0(2 M̃ ζ |sin(γ v τ / 2)|) exp(-i γ M̃ ζ f τ),
//!   P_T  = (M̃/π) Re ∫_0^∞ exp(-τ²/(2T²)) exp(-i Ẽ τ) W(τ) dτ.
//!   ```
//!
//!   The Gaussian window turns the frequency delta into a Gaussian of width
//!   `1/T`, so `P_T` equals the smeared rate at `σ = 1/(γ M̃ T)`.
//!
//! Neither path uses the root solver or the truncation logic of
//! [`crate::response`]. Both are f64 only.

use crate::dispersion::{Dispersion, DispersionProfile, DEFAULT_ZETA_MAX};
use crate::error::{domain, Error, Result};
use crate::quadrature::gauss_legendre;
use crate::response::DetectorOrbit;
use crate::specfun::bessel_j_unchecked;

/// Gaussian support kept on each side, in units of `σ`.
const GAUSS_REACH: f64 = 8.0;
/// Boundary mass above this fraction of the total is a cutoff failure.
pub const CUTOFF_MASS_LIMIT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmearingConfig {
    /// Gaussian width in `ζ f` units.
    pub sigma: f64,
    /// Upper end of the `ζ` integration.
    pub zeta_cut: f64,
    /// Harmonics with `|m| <= m_cut` are summed.
    pub m_cut: i64,
    /// Lower end of the `ζ` integration (0 for the full rate).
    pub zeta_floor: f64,
    /// Off for a deliberate spectral window, where boundary mass is expected.
    pub check_cutoff: bool,
}

impl SmearingConfig {
    pub fn new(sigma: f64, zeta_cut: f64, m_cut: i64) -> Result<Self> {
        let cfg = Self {
            sigma,
            zeta_cut,
            m_cut,
            zeta_floor: 0.0,
            check_cutoff: true,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_floor(mut self, zeta_floor: f64) -> Result<Self> {
        self.zeta_floor = zeta_floor;
        self.validate()?;
        Ok(self)
    }

    /// Integrate `[zeta_floor, zeta_cut] x [-m_cut, m_cut]` as a window,
    /// without the boundary-mass check.
    pub fn windowed(mut self) -> Self {
        self.check_cutoff = false;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(domain("sigma must be positive and finite", self.sigma));
        }
        if !(self.zeta_cut > 0.0 && self.zeta_cut.is_finite()) {
            return Err(domain("zeta_cut must be positive and finite", self.zeta_cut));
        }
        if self.m_cut < 1 {
            return Err(domain("m_cut must be positive", self.m_cut as f64));
        }
        if !(self.zeta_floor >= 0.0 && self.zeta_floor < self.zeta_cut) {
            return Err(domain("zeta_floor must lie in [0, zeta_cut)", self.zeta_floor));
        }
        Ok(())
    }
}

fn gaussian(x: f64, sigma: f64) -> f64 {
    let r = x / sigma;
    (-0.5 * r * r).exp() / (sigma * (2.0 * std::f64::consts::PI).sqrt())
}

fn checked_f<D: Dispersion<f64> + ?Sized>(disp: &D, zeta: f64) -> Result<f64> {
    let f2 = disp.f_squared(zeta);
    if !(f2 > 0.0) {
        return Err(Error::Instability {
            zeta,
            f_squared: f2,
        });
    }
    Ok(f2.sqrt())
}

/// Finite-difference slope of `ζ f`, used only to size panels.
fn zf_slope<D: Dispersion<f64> + ?Sized>(disp: &D, zeta: f64) -> f64 {
    let h = 1e-6 * zeta.max(1.0);
    let a = (zeta - h).max(0.0);
    let b = zeta + h;
    let zf = |z: f64| z * disp.f_squared(z).max(0.0).sqrt();
    ((zf(b) - zf(a)) / (b - a)).abs()
}

/// Rate with the delta constraint smeared to `N(0, σ²)`, in the units of
/// [`crate::response::transition_rate`].
pub fn smeared_delta_rate<D: Dispersion<f64> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<f64>,
    cfg: &SmearingConfig,
) -> Result<f64> {
    cfg.validate()?;
    let (nodes, weights) = gauss_legendre::<f64>(8);
    let mt = orbit.m_tilde();
    let v = orbit.v();
    let shift = orbit.e_tilde() / orbit.gamma();
    let sigma = cfg.sigma;
    let reach = GAUSS_REACH * sigma;
    let edge_start = cfg.zeta_cut - 0.02 * (cfg.zeta_cut - cfg.zeta_floor);
    let max_width = (0.5 / mt).min(0.02);

    let mut total = 0.0;
    let mut edge_zeta = 0.0;
    let mut edge_m = 0.0;
    let mut a = cfg.zeta_floor;
    while a < cfg.zeta_cut {
        let s_a = zf_slope(disp, a);
        let s_b = zf_slope(disp, (a + max_width).min(cfg.zeta_cut));
        let width = (sigma / (4.0 * s_a.max(s_b).max(1e-6))).min(max_width);
        let b = (a + width).min(cfg.zeta_cut);
        let zf_a = a * checked_f(disp, a.max(f64::MIN_POSITIVE))?;
        let zf_b = b * checked_f(disp, b)?;
        let lo = zf_a.min(zf_b) - reach;
        let hi = zf_a.max(zf_b) + reach;
        let m_lo = ((mt * lo + shift) / v).ceil().max(-cfg.m_cut as f64) as i64;
        let m_hi = ((mt * hi + shift) / v).floor().min(cfg.m_cut as f64) as i64;
        if m_lo <= m_hi {
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            let mut panel = 0.0;
            for (x, w) in nodes.iter().zip(&weights) {
                let zeta = mid + half * x;
                let f = checked_f(disp, zeta)?;
                let zf = zeta * f;
                let measure = w * half * zeta * zeta / f;
                for m in m_lo..=m_hi {
                    let t = (m as f64 * v - shift) / mt;
                    let g = gaussian(zf - t, sigma);
                    if g == 0.0 {
                        continue;
                    }
                    let j = bessel_j_unchecked(m, mt * zeta);
                    let c = measure * j * j * g;
                    panel += c;
                    if m.abs() == cfg.m_cut {
                        edge_m += c;
                    }
                }
            }
            total += panel;
            if b > edge_start {
                edge_zeta += panel;
            }
        }
        a = b;
    }
    if cfg.check_cutoff && total > 0.0 {
        let fraction = (edge_zeta + edge_m) / total;
        if fraction > CUTOFF_MASS_LIMIT {
            return Err(Error::Cutoff {
                fraction,
                limit: CUTOFF_MASS_LIMIT,
            });
        }
    }
    Ok(total / orbit.gamma())
}

/// `(4 P_σ - P_2σ) / 3`: removes the leading `O(σ²)` smearing bias.
pub fn richardson_smeared_rate<D: Dispersion<f64> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<f64>,
    cfg: &SmearingConfig,
) -> Result<f64> {
    let fine = smeared_delta_rate(disp, orbit, cfg)?;
    let wide = SmearingConfig {
        sigma: 2.0 * cfg.sigma,
        ..*cfg
    };
    let coarse = smeared_delta_rate(disp, orbit, &wide)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// [`richardson_smeared_rate`] with cutoffs chosen automatically: `ζ_cut`
/// doubles from 1 until the boundary-mass check passes and the value stops
/// changing, and `m_cut` covers every harmonic whose target lies below
/// `ζ_cut f(ζ_cut)`.
pub fn auto_smeared_rate<D: Dispersion<f64> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<f64>,
    sigma: f64,
) -> Result<f64> {
    let mut cut = 1.0;
    let mut previous: Option<f64> = None;
    let mut last_err = None;
    for _ in 0..8 {
        let top = cut * checked_f(disp, cut)? + 2.0 * GAUSS_REACH * sigma;
        let m_cut = ((orbit.m_tilde() * top + orbit.e_tilde().abs() / orbit.gamma()) / orbit.v())
            .ceil() as i64
            + 2;
        let cfg = SmearingConfig::new(sigma, cut, m_cut)?;
        match richardson_smeared_rate(disp, orbit, &cfg) {
            Ok(value) => {
                if let Some(prev) = previous {
                    if (value - prev).abs() <= 1e-7 * value.abs() + 1e-300 {
                        return Ok(value);
                    }
                }
                previous = Some(value);
            }
            Err(e @ Error::Cutoff { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
        cut *= 2.0;
    }
    Err(last_err.unwrap_or(Error::Cutoff {
        fraction: 1.0,
        limit: CUTOFF_MASS_LIMIT,
    }))
}

/// Largest width up to `sigma_max` that resolves the fold structure: an
/// eighth of the distance between any delta target and a fold value of
/// `ζ f`, floored at `1e-5`. Near a fold the smeared density has an
/// inverse-square-root edge and the bias only falls off once `σ` is below
/// that distance.
pub fn resolving_sigma<D: Dispersion<f64> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<f64>,
    sigma_max: f64,
) -> f64 {
    let profile = DispersionProfile::scan(disp, DEFAULT_ZETA_MAX);
    let mut sigma = sigma_max;
    for &z in profile.folds() {
        let zf = z * disp.f_squared(z).max(0.0).sqrt();
        let m = (orbit.m_tilde() * zf + orbit.e_tilde() / orbit.gamma()) / orbit.v();
        for m in [m.floor(), m.ceil()] {
            let d = (orbit.target(m as i64) - zf).abs();
            sigma = sigma.min(d / 8.0);
        }
    }
    sigma.max(1e-5)
}

/// Settings for [`wightman_rate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WightmanConfig {
    /// The `ζ` integrand is tapered smoothly to zero over the last 20% below
    /// this value.
    pub zeta_cut: f64,
    /// Regulators `exp(-η ζ)`; the result is extrapolated linearly to `η = 0`.
    pub etas: [f64; 2],
    /// Window extent in units of the window width.
    pub extent: f64,
    /// Accepted relative discrepancy between two `ζ` resolutions.
    pub tol: f64,
}

impl Default for WightmanConfig {
    fn default() -> Self {
        Self {
            zeta_cut: 6.0,
            etas: [1e-3, 2e-3],
            extent: 7.0,
            tol: 1e-6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WightmanResult {
    pub value: f64,
    /// Relative change of `W` at the largest lag under `ζ` refinement.
    pub residual: f64,
}

fn taper(zeta: f64, cut: f64) -> f64 {
    let start = 0.8 * cut;
    if zeta <= start {
        1.0
    } else if zeta >= cut {
        0.0
    } else {
        let s = (zeta - start) / (cut - start);
        let c = (0.5 * std::f64::consts::PI * s).cos();
        c * c
    }
}

struct ZetaGrid {
    zeta: Vec<f64>,
    zf: Vec<f64>,
    /// Quadrature weight times `ζ²/f` times the taper.
    measure: Vec<f64>,
}

impl ZetaGrid {
    fn build<D: Dispersion<f64> + ?Sized>(disp: &D, cut: f64, panels: usize) -> Result<Self> {
        let (nodes, weights) = gauss_legendre::<f64>(10);
        let h = cut / panels as f64;
        let n = panels * nodes.len();
        let mut grid = Self {
            zeta: Vec::with_capacity(n),
            zf: Vec::with_capacity(n),
            measure: Vec::with_capacity(n),
        };
        for k in 0..panels {
            let mid = (k as f64 + 0.5) * h;
            for (x, w) in nodes.iter().zip(&weights) {
                let zeta = mid + 0.5 * h * x;
                let f = checked_f(disp, zeta)?;
                grid.zeta.push(zeta);
                grid.zf.push(zeta * f);
                grid.measure.push(0.5 * h * w * zeta * zeta / f * taper(zeta, cut));
            }
        }
        Ok(grid)
    }

    /// `W(τ)` for each regulator, as `(re, im)` pairs.
    fn correlation(&self, orbit: &DetectorOrbit<f64>, tau: f64, etas: &[f64]) -> Vec<(f64, f64)> {
        let mt = orbit.m_tilde();
        let g = orbit.gamma();
        let chord = 2.0 * mt * (0.5 * g * orbit.v() * tau).sin().abs();
        let mut out = vec![(0.0, 0.0); etas.len()];
        for i in 0..self.zeta.len() {
            let zeta = self.zeta[i];
            let j0 = bessel_j_unchecked(0, chord * zeta);
            let phase = -g * mt * self.zf[i] * tau;
            let (s, c) = phase.sin_cos();
            let base = self.measure[i] * j0;
            for (k, &eta) in etas.iter().enumerate() {
                let r = base * (-eta * zeta).exp();
                out[k].0 += r * c;
                out[k].1 += r * s;
            }
        }
        out
    }
}

fn zeta_panels<D: Dispersion<f64> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<f64>,
    cut: f64,
    tau_max: f64,
) -> usize {
    let slope = (0..=64)
        .map(|i| zf_slope(disp, cut * i as f64 / 64.0))
        .fold(0.0, f64::max);
    let freq = orbit.gamma() * orbit.m_tilde() * tau_max * slope + 2.0 * orbit.m_tilde() + 1.0;
    // about one panel of ten nodes per radian-π of phase
    ((freq * cut / std::f64::consts::PI).ceil() as usize).max(8)
}

/// Two-point function `W(τ)` along the orbit, as `(re, im)`, with
/// regulator `exp(-η ζ)`.
pub fn correlation<D: Dispersion<f64> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<f64>,
    tau: f64,
    eta: f64,
    cfg: &WightmanConfig,
) -> Result<(f64, f64)> {
    let panels = zeta_panels(disp, orbit, cfg.zeta_cut, tau.abs());
    let grid = ZetaGrid::build(disp, cfg.zeta_cut, panels)?;
    Ok(grid.correlation(orbit, tau, &[eta])[0])
}

/// Windowed time-domain rate with Gaussian window width `window_time`
/// (dimensionless lab time, orbital period `2π/(γ v)`).
pub fn wightman_rate<D: Dispersion<f64> + ?Sized>(
    disp: &D,
    orbit: &DetectorOrbit<f64>,
    window_time: f64,
    cfg: &WightmanConfig,
) -> Result<WightmanResult> {
    if !(window_time > 0.0 && window_time.is_finite()) {
        return Err(domain("window_time must be positive", window_time));
    }
    if !(cfg.zeta_cut > 0.0 && cfg.extent > 0.0 && cfg.tol > 0.0) {
        return Err(domain("invalid Wightman configuration", cfg.zeta_cut));
    }
    let tau_max = cfg.extent * window_time;
    let panels = zeta_panels(disp, orbit, cfg.zeta_cut, tau_max);
    let grid = ZetaGrid::build(disp, cfg.zeta_cut, panels)?;

    let check = ZetaGrid::build(disp, cfg.zeta_cut, 2 * panels)?;
    let fine = check.correlation(orbit, tau_max, &cfg.etas[..1])[0];
    let coarse = grid.correlation(orbit, tau_max, &cfg.etas[..1])[0];
    let w0 = grid.correlation(orbit, 0.0, &cfg.etas[..1])[0];
    let scale = w0.0.hypot(w0.1).max(f64::MIN_POSITIVE);
    let residual = (fine.0 - coarse.0).hypot(fine.1 - coarse.1) / scale;
    if residual > cfg.tol {
        return Err(Error::NonConvergence {
            residual,
            requested: cfg.tol,
        });
    }

    // trapezoid on the full line is spectrally accurate for this band-limited,
    // Gaussian-windowed integrand; step set below the Nyquist spacing
    let zf_max = grid.zf.iter().copied().fold(0.0, f64::max);
    let g = orbit.gamma();
    let mt = orbit.m_tilde();
    let band = orbit.e_tilde().abs()
        + g * mt * zf_max
        + g * orbit.v() * (2.0 * mt * cfg.zeta_cut + 10.0)
        + 12.0 / window_time;
    let step = std::f64::consts::PI / band;
    let n = (tau_max / step).ceil() as usize;
    let mut acc = [0.0; 2];
    for k in 0..=n {
        let tau = k as f64 * step;
        let weight = if k == 0 { 0.5 } else { 1.0 };
        let window = (-0.5 * (tau / window_time).powi(2)).exp();
        let (s, c) = (-orbit.e_tilde() * tau).sin_cos();
        for (i, w) in grid.correlation(orbit, tau, &cfg.etas).iter().enumerate() {
            // Re[(c + i s)(w.0 + i w.1)]
            acc[i] += weight * window * (c * w.0 - s * w.1);
        }
    }
    let rates = acc.map(|a| mt / std::f64::consts::PI * a * step);
    let [e1, e2] = cfg.etas;
    let value = (e2 * rates[0] - e1 * rates[1]) / (e2 - e1);
    Ok(WightmanResult { value, residual })
}

/// Smearing width equivalent to a Gaussian window of width `window_time`.
pub fn equivalent_sigma(orbit: &DetectorOrbit<f64>, window_time: f64) -> f64 {
    1.0 / (orbit.gamma() * orbit.m_tilde() * window_time)
}
