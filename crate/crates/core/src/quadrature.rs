//! Adaptive Gauss–Kronrod integration and Gauss–Legendre rules.

use std::collections::BinaryHeap;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Real;

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
pub struct Integral<T> {
    pub value: T,
    pub error: T,
    pub evaluations: usize,
}

struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

impl<T: Real> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T: Real> Eq for Segment<T> {}
impl<T: Real> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
    }
}

fn kronrod15<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> (T, T) {
    let center = (a + b) * T::lit(0.5);
    let half = (b - a) * T::lit(0.5);
    let fc = f(center);
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for j in 0..7 {
        let dx = half * T::lit(XGK[j]);
        let pair = f(center - dx) + f(center + dx);
        kronrod = kronrod + pair * T::lit(WGK[j]);
        if j % 2 == 1 {
            gauss = gauss + pair * T::lit(WG[j / 2]);
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    (value, error)
}

/// Globally adaptive G7–K15 integration of `f` over `[a, b]`.
///
/// Bisects the segment with the largest error estimate until the summed
/// estimate is below `max(abs_tol, rel_tol * |value|)`.
pub fn integrate<T: Real, F: FnMut(T) -> T>(
    mut f: F,
    a: T,
    b: T,
    rel_tol: T,
    abs_tol: T,
    max_segments: usize,
) -> Result<Integral<T>> {
    let (value, error) = kronrod15(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    let mut evaluations = 15;
    loop {
        let target = abs_tol.max(rel_tol * total.abs());
        if total_err <= target {
            return Ok(Integral {
                value: total,
                error: total_err,
                evaluations,
            });
        }
        if heap.len() >= max_segments {
            return Err(Error::NonConvergence {
                residual: total_err.as_f64(),
                requested: target.as_f64(),
            });
        }
        let worst = heap.pop().expect("non-empty segment heap");
        let mid = (worst.a + worst.b) * T::lit(0.5);
        let (lv, le) = kronrod15(&mut f, worst.a, mid);
        let (rv, re) = kronrod15(&mut f, mid, worst.b);
        evaluations += 30;
        total = total - worst.value + lv + rv;
        total_err = total_err - worst.error + le + re;
        heap.push(Segment {
            a: worst.a,
            b: mid,
            value: lv,
            error: le,
        });
        heap.push(Segment {
            a: mid,
            b: worst.b,
            value: rv,
            error: re,
        });
        if total_err < T::zero() {
            // drift from repeated subtraction
            total_err = heap.iter().fold(T::zero(), |acc, s| acc + s.error);
        }
    }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = T::from_usize(n).unwrap();
    for i in 0..(n + 1) / 2 {
        let guess = (T::PI() * (T::from_usize(i).unwrap() + T::lit(0.75))
            / (nf + T::lit(0.5)))
        .cos();
        let mut x = guess;
        let mut deriv = T::one();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x = x - dx;
            deriv = dp;
            if dx.abs() <= T::epsilon() {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        if dp != T::zero() {
            deriv = dp;
        }
        let w = T::lit(2.0) / ((T::one() - x * x) * deriv * deriv);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = T::from_usize(k).unwrap();
        let p2 = ((T::lit(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = T::from_usize(n).unwrap();
    let dp = nf * (x * p1 - p0) / (x * x - T::one());
    (p1, dp)
}
