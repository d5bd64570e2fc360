use serde::Serialize;
use unruh_fluid::units::{derive_scales, DerivedScales, PhysicalSetup};
use unruh_fluid::Error;

use crate::args::SetupArgs;
use crate::config::Config;
use crate::fail::{Failure, EXIT_PHYSICAL, EXIT_USAGE};

/// Input keys, shared by config files and the JSON output.
const SETUP_KEYS: [&str; 9] = [
    "m_b_kg",
    "rho0_per_m2",
    "omega_z_rad_per_s",
    "a_c_m",
    "mu_m_J_per_T",
    "g_minus_J_m2",
    "radius_m",
    "omega_orbit_rad_per_s",
    "omega0_rad_per_s",
];

/// Output-only keys; accepted and ignored on input so the output re-ingests.
const DERIVED_KEYS: [&str; 13] = [
    "d_z_m",
    "g_c_J_m3",
    "g_d_J_m3",
    "g0_eff_J_m2",
    "c0_m_per_s",
    "m_star_J",
    "r0",
    "a_chem",
    "m_tilde",
    "e_tilde",
    "v",
    "rate_unit_per_s",
    "temp_unit_K",
];

#[derive(Serialize)]
#[allow(non_snake_case)]
struct Report {
    m_b_kg: f64,
    rho0_per_m2: f64,
    omega_z_rad_per_s: f64,
    a_c_m: f64,
    mu_m_J_per_T: f64,
    g_minus_J_m2: f64,
    radius_m: f64,
    omega_orbit_rad_per_s: f64,
    omega0_rad_per_s: f64,
    d_z_m: f64,
    g_c_J_m3: f64,
    g_d_J_m3: f64,
    g0_eff_J_m2: f64,
    c0_m_per_s: f64,
    m_star_J: f64,
    r0: f64,
    a_chem: f64,
    m_tilde: f64,
    e_tilde: f64,
    v: f64,
    rate_unit_per_s: f64,
    temp_unit_K: f64,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    constraint: &'a str,
    value: f64,
}

fn failure(e: Error) -> Failure {
    let (code, kind, constraint, value) = match &e {
        Error::Physical { constraint, value } => (EXIT_PHYSICAL, "physical_constraint", *constraint, *value),
        Error::Domain { what, value } => (EXIT_USAGE, "invalid_input", *what, *value),
        _ => (EXIT_USAGE, "invalid_input", "unexpected error", f64::NAN),
    };
    let json = serde_json::to_string(&ErrorReport {
        error: kind,
        constraint,
        value,
    })
    .expect("error report");
    Failure {
        code,
        message: e.to_string(),
        json: Some(json),
    }
}

/// Dysprosium defaults overlaid with config entries, then flags. An unset
/// `g₋` makes the rate unit 1 s⁻¹ and an unset `ω0` equals `M*/ħ`, both for
/// the final setup.
pub fn resolve_setup(config: &Config, flags: &SetupArgs) -> Result<PhysicalSetup, Failure> {
    let known: Vec<&str> = SETUP_KEYS.iter().chain(DERIVED_KEYS.iter()).copied().collect();
    config.check_keys(&known)?;
    let base = PhysicalSetup::dysprosium();
    let get = |flag: Option<f64>, key: &str| -> Result<Option<f64>, Failure> {
        match flag {
            Some(x) => Ok(Some(x)),
            None => config.number(key),
        }
    };
    let mut s = PhysicalSetup {
        m_b: get(flags.m_b, "m_b_kg")?.unwrap_or(base.m_b),
        rho0: get(flags.rho0, "rho0_per_m2")?.unwrap_or(base.rho0),
        omega_z: get(flags.omega_z, "omega_z_rad_per_s")?.unwrap_or(base.omega_z),
        a_c: get(flags.a_c, "a_c_m")?.unwrap_or(base.a_c),
        mu_m: get(flags.mu_m, "mu_m_J_per_T")?.unwrap_or(base.mu_m),
        g_minus: 1.0,
        radius: get(flags.radius, "radius_m")?.unwrap_or(base.radius),
        omega_orbit: get(flags.omega_orbit, "omega_orbit_rad_per_s")?.unwrap_or(base.omega_orbit),
        omega0: 1.0,
    };
    let g_minus = get(flags.g_minus, "g_minus_J_m2")?;
    let omega0 = get(flags.omega0, "omega0_rad_per_s")?;
    if g_minus.is_none() || omega0.is_none() {
        let probe = derive_scales(&s).map_err(failure)?;
        s.g_minus = g_minus.unwrap_or_else(|| probe.rate_unit.recip().sqrt());
        s.omega0 = omega0.unwrap_or(probe.m_star / unruh_fluid::units::constants::HBAR);
    }
    if let Some(g) = g_minus {
        s.g_minus = g;
    }
    if let Some(w) = omega0 {
        s.omega0 = w;
    }
    Ok(s)
}

pub fn map_physical(config: &Config, flags: &SetupArgs) -> Result<String, Failure> {
    let s = resolve_setup(config, flags)?;
    let d: DerivedScales = derive_scales(&s).map_err(failure)?;
    let report = Report {
        m_b_kg: s.m_b,
        rho0_per_m2: s.rho0,
        omega_z_rad_per_s: s.omega_z,
        a_c_m: s.a_c,
        mu_m_J_per_T: s.mu_m,
        g_minus_J_m2: s.g_minus,
        radius_m: s.radius,
        omega_orbit_rad_per_s: s.omega_orbit,
        omega0_rad_per_s: s.omega0,
        d_z_m: d.d_z,
        g_c_J_m3: d.g_c,
        g_d_J_m3: d.g_d,
        g0_eff_J_m2: d.g0_eff,
        c0_m_per_s: d.c0,
        m_star_J: d.m_star,
        r0: d.r0,
        a_chem: d.a_chem,
        m_tilde: d.m_tilde,
        e_tilde: d.e_tilde,
        v: d.v,
        rate_unit_per_s: d.rate_unit,
        temp_unit_K: d.temp_unit,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report");
    text.push('\n');
    Ok(text)
}
