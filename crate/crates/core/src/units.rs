//! Laboratory parameters to dimensionless inputs and back.
//!
//! SI throughout. The condensate is quasi-2D with transverse oscillator length
//! `d_z = sqrt(ħ / (m_B ω_z))`.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

/// CODATA 2018 values.
pub mod constants {
    /// Reduced Planck constant, J s.
    pub const HBAR: f64 = 1.054_571_817e-34;
    /// Boltzmann constant, J/K.
    pub const K_B: f64 = 1.380_649e-23;
    /// Vacuum magnetic permeability, N/A².
    pub const MU_0: f64 = 1.256_637_062_12e-6;
    /// Bohr magneton, J/T.
    pub const MU_B: f64 = 9.274_010_078_3e-24;
    /// Atomic mass constant, kg.
    pub const AMU: f64 = 1.660_539_066_60e-27;
    /// Bohr radius, m.
    pub const BOHR_RADIUS: f64 = 5.291_772_109_03e-11;
    /// Mass of ¹⁶⁴Dy in atomic mass units.
    pub const DY164_AMU: f64 = 163.929_174_8;

    /// Every constant above, in declaration order.
    pub const TABLE: [(&str, f64); 7] = [
        ("hbar", HBAR),
        ("k_B", K_B),
        ("mu_0", MU_0),
        ("mu_B", MU_B),
        ("u", AMU),
        ("a_0", BOHR_RADIUS),
        ("m_Dy164/u", DY164_AMU),
    ];
}

use constants::*;

/// Laboratory inputs (SI).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalSetup {
    /// Boson mass, kg.
    pub m_b: f64,
    /// Areal density, m⁻².
    pub rho0: f64,
    /// Transverse trap frequency, rad/s.
    pub omega_z: f64,
    /// s-wave scattering length, m.
    pub a_c: f64,
    /// Magnetic dipole moment, J/T.
    pub mu_m: f64,
    /// Detector coupling `g₋ = (g₁ - g₂)/2`, J m².
    pub g_minus: f64,
    /// Orbit radius, m.
    pub radius: f64,
    /// Orbital angular velocity, rad/s.
    pub omega_orbit: f64,
    /// Detector gap, rad/s.
    pub omega0: f64,
}

impl PhysicalSetup {
    /// ¹⁶⁴Dy at `ρ0 = 4.4e3 µm⁻²`, `ω_z = 2π × 1 kHz`, `R = 10 µm`, `µ = 10 µ_B`.
    ///
    /// Not from measurement: `a_c = 100 a_0`, `Ω = 800 rad/s`, `g₋` chosen so
    /// the rate unit is 1 s⁻¹, and `ω0 = M*/ħ`.
    pub fn dysprosium() -> Self {
        let m_b = DY164_AMU * AMU;
        let rho0 = 4.4e15;
        let mut s = Self {
            m_b,
            rho0,
            omega_z: 2.0 * PI * 1.0e3,
            a_c: 100.0 * BOHR_RADIUS,
            mu_m: 10.0 * MU_B,
            g_minus: (2.0 * HBAR.powi(3) / (rho0 * m_b)).sqrt(),
            radius: 10.0e-6,
            omega_orbit: 800.0,
            omega0: 1.0,
        };
        let (g0, _, _, _) = s.couplings();
        s.omega0 = m_b * (g0 * rho0 / m_b) / HBAR;
        s
    }

    fn validate(&self) -> Result<()> {
        let positive = [
            ("boson mass must be positive", self.m_b),
            ("density must be positive", self.rho0),
            ("trap frequency must be positive", self.omega_z),
            ("orbit radius must be positive", self.radius),
            ("orbital angular velocity must be positive", self.omega_orbit),
            ("detector gap must be positive", self.omega0),
            ("dipole moment must be positive", self.mu_m),
        ];
        for (what, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(domain(what, value));
            }
        }
        if !self.a_c.is_finite() {
            return Err(domain("scattering length must be finite", self.a_c));
        }
        if !self.g_minus.is_finite() {
            return Err(domain("g_minus must be finite", self.g_minus));
        }
        Ok(())
    }

    /// `(g0_eff, g_c, g_d, d_z)`.
    fn couplings(&self) -> (f64, f64, f64, f64) {
        let d_z = (HBAR / (self.m_b * self.omega_z)).sqrt();
        let g_c = 4.0 * PI * HBAR * HBAR * self.a_c / self.m_b;
        let g_d = MU_0 * self.mu_m * self.mu_m / 3.0;
        let g0 = (g_c + 2.0 * g_d) / ((2.0 * PI).sqrt() * d_z);
        (g0, g_c, g_d, d_z)
    }
}

/// Scales and dimensionless inputs derived from a [`PhysicalSetup`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScales {
    /// m
    pub d_z: f64,
    /// J m³
    pub g_c: f64,
    /// J m³
    pub g_d: f64,
    /// J m²
    pub g0_eff: f64,
    /// m/s
    pub c0: f64,
    /// J
    pub m_star: f64,
    pub r0: f64,
    pub a_chem: f64,
    pub m_tilde: f64,
    pub e_tilde: f64,
    pub v: f64,
    /// `g₋² ρ0 m_B / (2 ħ³)`, s⁻¹
    pub rate_unit: f64,
    /// `M* / k_B`, K
    pub temp_unit: f64,
}

pub fn derive_scales(s: &PhysicalSetup) -> Result<DerivedScales> {
    s.validate()?;
    let (g0_eff, g_c, g_d, d_z) = s.couplings();
    if !(g0_eff > 0.0) {
        return Err(Error::Physical {
            constraint: "attractive collapse: g0_eff <= 0",
            value: g0_eff,
        });
    }
    let r0 = (PI / 2.0).sqrt() / (1.0 + g_c / (2.0 * g_d));
    if r0 < 0.0 || r0 > (PI / 2.0).sqrt() {
        return Err(Error::Physical {
            constraint: "R0 outside [0, sqrt(pi/2)]: negative scattering length",
            value: r0,
        });
    }
    let c0 = (g0_eff * s.rho0 / s.m_b).sqrt();
    let m_star = s.m_b * c0 * c0;
    let v = s.radius * s.omega_orbit / c0;
    if v >= 1.0 {
        return Err(Error::Physical {
            constraint: "superluminal orbit: v = R Omega / c0 >= 1",
            value: v,
        });
    }
    Ok(DerivedScales {
        d_z,
        g_c,
        g_d,
        g0_eff,
        c0,
        m_star,
        r0,
        a_chem: g0_eff * s.rho0 / (HBAR * s.omega_z),
        m_tilde: s.radius * m_star / (HBAR * c0),
        e_tilde: s.radius * s.omega0 / c0,
        v,
        rate_unit: s.g_minus * s.g_minus * s.rho0 * s.m_b / (2.0 * HBAR.powi(3)),
        temp_unit: m_star / K_B,
    })
}

/// Dimensionless rate to s⁻¹.
pub fn to_physical_rate(rate: f64, scales: &DerivedScales) -> f64 {
    rate * scales.rate_unit
}

/// s⁻¹ to dimensionless rate.
pub fn from_physical_rate(rate: f64, scales: &DerivedScales) -> f64 {
    rate / scales.rate_unit
}

/// Temperature in units `M*/k_B` to kelvin.
pub fn to_physical_temperature(t: f64, scales: &DerivedScales) -> f64 {
    t * scales.temp_unit
}

/// `5 g₋² ρ0 / (96 sqrt(2π) ħ m_B c0⁶)`, the prefactor of the
/// ultrarelativistic closed-form rate.
pub fn closed_form_prefactor(s: &PhysicalSetup, scales: &DerivedScales) -> f64 {
    5.0 * s.g_minus * s.g_minus * s.rho0
        / (96.0 * (2.0 * PI).sqrt() * HBAR * s.m_b * scales.c0.powi(6))
}

/// FNV-1a over the bit patterns of [`constants::TABLE`].
pub fn constants_checksum() -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for (_, value) in constants::TABLE {
        for byte in value.to_bits().to_le_bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}
