//! Bracketed scalar root finding.

use crate::scalar::Real;

/// Termination criteria for [`brent`].
#[derive(Debug, Clone, Copy)]
pub struct RootTolerance<T> {
    /// Stop when `|f(x)| <= abs_f`.
    pub abs_f: T,
    /// Stop when the bracket is narrower than `rel_x * |x| + tiny`.
    pub rel_x: T,
    pub max_iter: usize,
}

impl<T: Real> Default for RootTolerance<T> {
    fn default() -> Self {
        Self {
            abs_f: T::zero(),
            rel_x: T::lit(4.0) * T::epsilon(),
            max_iter: 200,
        }
    }
}

/// Brent's method on a sign-changing bracket `[a, b]`.
///
/// Returns `None` when `f(a)` and `f(b)` have the same strict sign.
pub fn brent<T: Real, F: FnMut(T) -> T>(
    mut f: F,
    a: T,
    b: T,
    tol: RootTolerance<T>,
) -> Option<T> {
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == T::zero() {
        return Some(a);
    }
    if fb == T::zero() {
        return Some(b);
    }
    if (fa > T::zero()) == (fb > T::zero()) {
        return None;
    }
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    let three = T::lit(3.0);
    let tiny = T::min_positive_value();
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..tol.max_iter {
        if (fb > T::zero()) == (fc > T::zero()) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol_x = two * tol.rel_x * b.abs() + tiny;
        let m = half * (c - b);
        if m.abs() <= tol_x || fb == T::zero() || fb.abs() <= tol.abs_f {
            return Some(b);
        }
        if e.abs() >= tol_x && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = two * m * s;
                q = T::one() - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (two * m * qa * (qa - r) - (b - a) * (r - T::one()));
                q = (qa - T::one()) * (r - T::one()) * (s - T::one());
            }
            if p > T::zero() {
                q = -q;
            } else {
                p = -p;
            }
            if two * p < (three * m * q - (tol_x * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b = if d.abs() > tol_x {
            b + d
        } else if m > T::zero() {
            b + tol_x
        } else {
            b - tol_x
        };
        fb = f(b);
    }
    Some(b)
}

/// Plain bisection to an absolute bracket width; used where only the sign of
/// `f` is trustworthy.
pub fn bisect<T: Real, F: FnMut(T) -> T>(mut f: F, a: T, b: T, width: T) -> Option<T> {
    let (mut lo, mut hi) = (a, b);
    let flo = f(lo);
    let fhi = f(hi);
    if flo == T::zero() {
        return Some(lo);
    }
    if fhi == T::zero() {
        return Some(hi);
    }
    if (flo > T::zero()) == (fhi > T::zero()) {
        return None;
    }
    let lo_positive = flo > T::zero();
    for _ in 0..400 {
        if (hi - lo).abs() <= width {
            break;
        }
        let mid = (lo + hi) * T::lit(0.5);
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == T::zero() {
            return Some(mid);
        }
        if (fm > T::zero()) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some((lo + hi) * T::lit(0.5))
}
