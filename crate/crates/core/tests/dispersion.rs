use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unruh_fluid::dispersion::*;

fn rd() -> f64 {
    r0_dipolar_dominance()
}

// (r0, A, ζ, f², d f²/dζ) from mpmath at 40 digits
const F2_CASES: &[(f64, f64, f64, f64, f64)] = &[
    (1.2533141373155003, 3.0, 0.9, 0.026819977228851694567, 0.019352802105512569296),
    (1.2533141373155003, 3.0, 0.1, 0.71741102242661550381, -2.4364164690058603108),
    (1.0, 0.5, 2.0, 1.0929582613287028911, 0.83626423319735237053),
    (1.2533141373155003, 3.4, 12.5, 38.565307732897721225, 6.2495532667849697579),
    (0.3, 100.0, 0.05, 0.84329652437582086858, -2.1129716287980312348),
];

#[test]
fn matches_high_precision_reference() {
    for &(r0, a, z, f2, f2p) in F2_CASES {
        let p = CondensateParams::new(r0, a).unwrap();
        assert!((p.f_squared(z) - f2).abs() <= 1e-13 * f2.abs().max(1.0), "f2 at {r0} {a} {z}");
        assert!(
            (f_squared_prime(&p, z).unwrap() - f2p).abs() <= 1e-12 * f2p.abs().max(1.0),
            "f2' at {r0} {a} {z}"
        );
    }
}

#[test]
fn roton_location_reference() {
    // mpmath: ζ_c = 0.885072948919757991, f_c = 0.163324949716433240
    let p = CondensateParams::new(rd(), 3.0).unwrap();
    let r = analyze_roton(&p, 50.0);
    assert!((r.zeta_c.unwrap() - 0.885_072_948_919_758).abs() < 1e-10);
    assert!((r.f_c - 0.163_324_949_716_433_24).abs() < 1e-12);
    assert!(f_squared_prime(&p, r.zeta_c.unwrap()).unwrap().abs() < 1e-8);
}

#[test]
fn critical_a_reference() {
    // mpmath root of min f² = 0: 3.44565540036575731 (dipolar), 23.9109983073082107 (r0 = 1)
    let ac = critical_a(rd(), 1e-9).unwrap().unwrap();
    assert!((ac - 3.445_655_400_365_757).abs() < 1e-6, "{ac}");
    assert!((ac - 3.4454).abs() < 1e-3);
    let ac1 = critical_a(1.0_f64, 1e-9).unwrap().unwrap();
    assert!((ac1 - 23.910_998_307_308_21).abs() < 1e-5, "{ac1}");
}

#[test]
fn stability_flips_at_critical_a() {
    for r0 in [1.0, rd()] {
        let ac = critical_a(r0, 1e-8).unwrap().unwrap();
        let below = CondensateParams::new(r0, ac * (1.0 - 1e-5)).unwrap();
        let above = CondensateParams::new(r0, ac * (1.0 + 1e-5)).unwrap();
        assert!(analyze_roton(&below, 50.0).stable, "r0 = {r0}");
        assert!(!analyze_roton(&above, 50.0).stable, "r0 = {r0}");
    }
    // below (2/3) sqrt(pi/2) no finite A destabilises the spectrum
    assert_eq!(critical_a(0.8_f64, 1e-6).unwrap(), None);
    for a in [1.0, 1e2, 1e4, 1e6] {
        assert!(analyze_roton(&CondensateParams::new(0.8, a).unwrap(), 50.0).stable);
    }
}

#[test]
fn unit_value_at_origin_for_random_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let p = CondensateParams::new(rng.gen_range(0.0..=rd()), rng.gen_range(1e-3..1e3)).unwrap();
        assert_eq!(f_of_zeta(&p, 0.0).unwrap(), 1.0);
    }
}

#[test]
fn fig1_dip_below_one() {
    for a in [1.0, 2.0, 3.0, 3.4] {
        let p = CondensateParams::new(rd(), a).unwrap();
        let dips = (1..2000).any(|i| {
            let z = 0.002 * i as f64;
            p.f(z).map_or(true, |f| f < 1.0)
        });
        assert!(dips, "A = {a}");
    }
}

#[test]
fn zeta_f_prime_sign_near_fold() {
    let p = CondensateParams::new(rd(), 3.4).unwrap();
    let r = analyze_roton(&p, 50.0);
    assert!(!r.zf_monotone);
    let negative = (1..1000).any(|i| zeta_f_prime(&p, 0.001 * i as f64).unwrap() < 0.0);
    assert!(negative);
    let q = CondensateParams::new(0.5, 1.0).unwrap();
    assert!(analyze_roton(&q, 50.0).zf_monotone);
}

#[test]
fn bogoliubov_normalization_from_raw_coefficients() {
    // H = ζ²/2, ħω = ζ f; u² = (H + A_k + ħω)/(2ħω), v² = (H + A_k - ħω)/(2ħω)
    // with A_k = f² - ζ²/4 the interaction part
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let p = CondensateParams::new(1.1, 2.5).unwrap();
    for _ in 0..200 {
        let z: f64 = rng.gen_range(1e-3..20.0);
        let f = p.f(z).unwrap();
        let h = z * z / 2.0;
        let hw = z * f;
        let ak = f * f - z * z / 4.0;
        // H + 2 A_k sets ħω² = H(H + 2 A_k) in these units
        assert!(((h * (h + 2.0 * ak)).sqrt() / hw - 1.0).abs() < 1e-12);
        let u = ((h + ak + hw) / (2.0 * hw)).sqrt();
        // u v = -A_k / (2ħω) fixes the sign of v
        let v = -ak.signum() * ((h + ak - hw) / (2.0 * hw)).max(0.0).sqrt();
        assert!((u * u - v * v - 1.0).abs() < 1e-12);
        let w = bogoliubov_weight(&p, z).unwrap();
        assert!(((u + v) * (u + v) / w - 1.0).abs() < 1e-9, "ζ = {z}");
    }
    let lo = bogoliubov_weight(&p, 1e-9).unwrap();
    assert!((lo / 5e-10 - 1.0).abs() < 1e-6);
}

proptest! {
    #[test]
    fn contact_dispersion_closed_form(z in 0.0f64..200.0, a in 1e-3f64..1e3) {
        let p = CondensateParams::new(0.0, a).unwrap();
        let f = f_of_zeta(&p, z).unwrap();
        prop_assert!((f - (1.0 + z * z / 4.0).sqrt()).abs() <= 1e-14 * f);
        prop_assert!(z == 0.0 || f > 1.0);
    }

    #[test]
    fn derivative_matches_finite_differences(
        r0 in 0.0f64..1.2533,
        a in 0.05f64..3.4,
        log_z in -3.0f64..1.5,
    ) {
        let p = CondensateParams::new(r0, a).unwrap();
        let z = 10f64.powf(log_z);
        prop_assume!(p.f_squared(z) > 1e-3);
        let h = 1e-5 * z.max(1.0);
        let fd = (p.f_squared(z + h) - p.f_squared(z - h)) / (2.0 * h);
        let an = f_squared_prime(&p, z).unwrap();
        prop_assert!((an - fd).abs() <= 1e-8f64.max(1e-6 * an.abs()), "{} vs {}", an, fd);
        let zf = |t: f64| t * p.f(t).unwrap();
        let fd = (zf(z + h) - zf(z - h)) / (2.0 * h);
        let an = zeta_f_prime(&p, z).unwrap();
        prop_assert!((an - fd).abs() <= 1e-6 * an.abs().max(1.0));
    }

    #[test]
    fn infimum_bounds_samples(r0 in 0.0f64..1.2533, a in 0.05f64..3.4, z in 1e-4f64..50.0) {
        let p = CondensateParams::new(r0, a).unwrap();
        let r = analyze_roton(&p, 50.0);
        prop_assume!(r.stable);
        prop_assert!(r.f_c <= p.f(z).unwrap() + 1e-12);
        if r.zeta_c.is_some() {
            prop_assert!(r.f_c > 0.0 && r.f_c <= 1.0);
        }
    }
}
