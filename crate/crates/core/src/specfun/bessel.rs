//! Integer-order Bessel functions of the first kind.

use std::sync::OnceLock;

use crate::error::{domain, Result};
use crate::scalar::Real;

pub const MAX_ORDER: i64 = 1_000_000;
pub const MAX_ARGUMENT: f64 = 1.0e6;

const DEBYE_MIN_ORDER: u64 = 30;
const DEBYE_TERMS: usize = 13;
const HANKEL_MAX_ORDER: u64 = 30;

/// `J_m(x)` for integer `m` with `|m| <= 1e6` and `0 <= x <= 1e6`.
pub fn bessel_j<T: Real>(m: i64, x: T) -> Result<T> {
    check(m, x)?;
    Ok(bessel_j_unchecked(m, x))
}

/// `J_m(x)^2`; never negative.
pub fn bessel_j_sq<T: Real>(m: i64, x: T) -> Result<T> {
    let j = bessel_j(m, x)?;
    Ok(j * j)
}

fn check<T: Real>(m: i64, x: T) -> Result<()> {
    if m.unsigned_abs() > MAX_ORDER as u64 {
        return Err(domain("Bessel order exceeds 1e6 in magnitude", m as f64));
    }
    if !x.is_finite() || x < T::zero() || x.as_f64() > MAX_ARGUMENT {
        return Err(domain("Bessel argument must lie in [0, 1e6]", x.as_f64()));
    }
    Ok(())
}

pub(crate) fn bessel_j_unchecked<T: Real>(m: i64, x: T) -> T {
    let n = m.unsigned_abs();
    let j = jn(n, x);
    if m < 0 && n % 2 == 1 {
        -j
    } else {
        j
    }
}

fn jn<T: Real>(n: u64, x: T) -> T {
    if x == T::zero() {
        return if n == 0 { T::one() } else { T::zero() };
    }
    let nf = T::from_u64(n).unwrap();
    if x * x <= T::lit(0.4) * (nf + T::one()) {
        return series(n, x);
    }
    if n >= DEBYE_MIN_ORDER {
        if let Some(v) = debye(n, x) {
            return v;
        }
    } else if n < HANKEL_MAX_ORDER && x >= T::lit(30.0) + T::lit(2.0) * nf * nf {
        if let Some(v) = hankel(n, x) {
            return v;
        }
    }
    miller(n, x)
}

fn series<T: Real>(n: u64, x: T) -> T {
    let half = x / T::lit(2.0);
    let tiny = T::min_positive_value();
    let mut pref = T::one();
    for k in 1..=n {
        let kf = T::from_u64(k).unwrap();
        pref = pref * half / kf;
        if pref < tiny && kf > half {
            return T::zero();
        }
    }
    let nf = T::from_u64(n).unwrap();
    let q = -half * half;
    let mut term = T::one();
    let mut sum = T::one();
    let mut k = T::zero();
    loop {
        k = k + T::one();
        term = term * q / (k * (nf + k));
        sum = sum + term;
        if term.abs() <= T::epsilon() * sum.abs() {
            break;
        }
    }
    pref * sum
}

fn miller<T: Real>(n: u64, x: T) -> T {
    let top = n.max(x.ceil().to_u64().unwrap_or(u64::MAX));
    let margin = 30 + (16.0 * x.as_f64().cbrt()).ceil() as u64;
    let mut start = top + margin;
    if start % 2 == 1 {
        start += 1;
    }
    let big = T::max_value().sqrt();
    let inv_big = big.recip();
    let two_over_x = T::lit(2.0) / x;

    // (upper, current) = (J_{k+1}, J_k) up to a common scale, starting at k = start.
    let mut upper = T::zero();
    let mut current = T::min_positive_value().sqrt();
    let mut norm = current;
    let mut result = if n == start { current } else { T::zero() };
    let mut k = start;
    while k > 0 {
        let lower = T::from_u64(k).unwrap() * two_over_x * current - upper;
        upper = current;
        current = lower;
        k -= 1;
        if k == n {
            result = current;
        }
        if k % 2 == 0 {
            norm = norm + if k == 0 { current } else { current + current };
        }
        if current.abs() > big {
            current = current * inv_big;
            upper = upper * inv_big;
            result = result * inv_big;
            norm = norm * inv_big;
        }
    }
    result / norm
}

fn hankel<T: Real>(n: u64, x: T) -> Option<T> {
    let nf = T::from_u64(n).unwrap();
    let mu = T::lit(4.0) * nf * nf;
    let eight_x = T::lit(8.0) * x;
    let mut p = T::one();
    let mut q = T::zero();
    let mut term = T::one();
    let mut prev = T::infinity();
    let mut converged = false;
    for k in 1..200u64 {
        let odd = T::from_u64(2 * k - 1).unwrap();
        term = term * (mu - odd * odd) / (T::from_u64(k).unwrap() * eight_x);
        let sign = if (k / 2) % 2 == 0 { T::one() } else { -T::one() };
        if k % 2 == 0 {
            p = p + sign * term;
        } else {
            q = q + sign * term;
        }
        let size = term.abs();
        if size <= T::epsilon() * (p.abs() + q.abs()) {
            converged = true;
            break;
        }
        if size > prev {
            break;
        }
        prev = size;
    }
    if !converged {
        return None;
    }
    let pi = T::PI();
    let chi = x - (nf / T::lit(2.0) + T::lit(0.25)) * pi;
    Some((T::lit(2.0) / (pi * x)).sqrt() * (p * chi.cos() - q * chi.sin()))
}

/// Coefficients of the Debye polynomials `u_k(t)` (ascending powers).
fn debye_polynomials() -> &'static [Vec<f64>] {
    static POLYS: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    POLYS.get_or_init(|| {
        let mut polys: Vec<Vec<f64>> = vec![vec![1.0]];
        for k in 0..DEBYE_TERMS - 1 {
            let u = &polys[k];
            let deg = u.len() + 3;
            let mut next = vec![0.0; deg];
            // (1/2) t^2 (1 - t^2) u'(t)
            for (j, &c) in u.iter().enumerate().skip(1) {
                let d = c * j as f64;
                next[j + 1] += 0.5 * d;
                next[j + 3] -= 0.5 * d;
            }
            // (1/8) ∫_0^t (1 - 5 s^2) u(s) ds
            for (j, &c) in u.iter().enumerate() {
                next[j + 1] += c / (8.0 * (j + 1) as f64);
                next[j + 3] -= 5.0 * c / (8.0 * (j + 3) as f64);
            }
            while next.last() == Some(&0.0) {
                next.pop();
            }
            polys.push(next);
        }
        polys
    })
}

fn poly<T: Real>(coeffs: &[f64], t: T) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, &c| acc * t + T::lit(c))
}

/// `u_k(i c)` folded to a real polynomial: even powers pick up `(-1)^(j/2)`,
/// odd powers `(-1)^((j-1)/2)` after multiplying by `-i`.
fn poly_imag<T: Real>(coeffs: &[f64], c: T) -> T {
    coeffs.iter().enumerate().rev().fold(T::zero(), |acc, (j, &a)| {
        let signed = if (j / 2) % 2 == 0 { a } else { -a };
        acc * c + T::lit(signed)
    })
}

/// `s - atanh(s)` without cancellation for small `s`.
fn s_minus_atanh<T: Real>(s: T) -> T {
    if s < T::lit(0.1) {
        let s2 = s * s;
        let mut pow = s * s2;
        let mut sum = T::zero();
        let mut k = 3u32;
        loop {
            let term = pow / T::from_u32(k).unwrap();
            sum = sum + term;
            if term <= T::epsilon() * sum {
                break;
            }
            pow = pow * s2;
            k += 2;
        }
        -sum
    } else {
        s - s.atanh()
    }
}

/// `q - atan(q)` without cancellation for small `q`.
fn q_minus_atan<T: Real>(q: T) -> T {
    if q < T::lit(0.1) {
        let q2 = q * q;
        let mut pow = q * q2;
        let mut sum = T::zero();
        let mut k = 3u32;
        let mut sign = T::one();
        loop {
            let term = pow / T::from_u32(k).unwrap();
            sum = sum + sign * term;
            if term <= T::epsilon() * sum.abs() {
                break;
            }
            pow = pow * q2;
            sign = -sign;
            k += 2;
        }
        sum
    } else {
        q - q.atan()
    }
}

fn debye<T: Real>(n: u64, x: T) -> Option<T> {
    let polys = debye_polynomials();
    let nf = T::from_u64(n).unwrap();
    let inv_n = nf.recip();
    let eps = T::epsilon();
    if x < nf {
        let one_minus = (nf - x) * inv_n;
        let rho = x * inv_n;
        let s = (one_minus * (T::one() + rho)).sqrt();
        let exponent = nf * s_minus_atanh(s);
        if exponent < T::min_positive_value().ln() - T::lit(10.0) {
            return Some(T::zero());
        }
        let p = s.recip();
        let mut sum = T::one();
        let mut scale = T::one();
        let mut converged = false;
        for u in &polys[1..] {
            scale = scale * inv_n;
            let term = poly(u, p) * scale;
            sum = sum + term;
            if term.abs() <= eps * sum.abs() {
                converged = true;
                break;
            }
        }
        if !converged {
            return None;
        }
        let two_pi = T::lit(2.0) * T::PI();
        Some(exponent.exp() / (two_pi * nf * s).sqrt() * sum)
    } else {
        let rho = x * inv_n;
        let q = ((rho - T::one()) * (rho + T::one())).sqrt();
        let c = q.recip();
        let mut even = T::one();
        let mut odd = T::zero();
        let mut scale = T::one();
        let mut converged = false;
        for (k, u) in polys.iter().enumerate().skip(1) {
            scale = scale * inv_n;
            let term = poly_imag(u, c) * scale;
            if k % 2 == 0 {
                even = even + term;
            } else {
                odd = odd + term;
            }
            if term.abs() <= eps * (even.abs() + odd.abs()) {
                converged = true;
                break;
            }
        }
        if !converged {
            return None;
        }
        let xi = nf * q_minus_atan(q) - T::FRAC_PI_4();
        let amp = (T::lit(2.0) / (T::PI() * nf * q)).sqrt();
        Some(amp * (even * xi.cos() + odd * xi.sin()))
    }
}

/// Natural log of Kapteyn's bound `|J_m(x)| <= (ρ e^s / (1 + s))^m`,
/// `ρ = x/m <= 1`, `s = sqrt(1 - ρ^2)`. Returns 0 (the trivial bound) when
/// `x >= m`.
pub(crate) fn kapteyn_log_bound<T: Real>(m: u64, x: T) -> T {
    if m == 0 {
        return T::zero();
    }
    let nf = T::from_u64(m).unwrap();
    if x >= nf {
        return T::zero();
    }
    if x <= T::zero() {
        return T::neg_infinity();
    }
    let rho = x / nf;
    let s = (((nf - x) / nf) * (T::one() + rho)).sqrt();
    // ln ρ + s - ln(1 + s) = s - atanh(s)
    nf * s_minus_atanh(s)
}
