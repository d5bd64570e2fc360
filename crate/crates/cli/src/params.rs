//! Merging flags with a config file into one resolved parameter set.

use unruh_fluid::dispersion::{CondensateParams, DEFAULT_ZETA_MAX};
use unruh_fluid::response::DetectorOrbit;

use crate::args::{MediumArgs, OrbitArgs, SweepArgs};
use crate::config::Config;
use crate::fail::Failure;
use crate::output::sci;
use crate::sweep::{Axis, SweepSpec};

pub const DEFAULT_TOL: f64 = 1e-10;

pub const RUN_KEYS: [&str; 9] = [
    "r0",
    "a",
    "mtilde",
    "v",
    "etilde",
    "omega0_mstar",
    "sweep",
    "log",
    "tol",
];

/// How the detector gap was given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gap {
    Etilde(f64),
    /// In units of `M*/ħ`, so `Ẽ = value · M̃`.
    Omega0(f64),
}

#[derive(Debug, Clone, Default)]
pub struct RunParams {
    pub r0: Option<f64>,
    pub a: Option<f64>,
    pub mtilde: Option<f64>,
    pub v: Option<f64>,
    pub gap: Option<Gap>,
    pub sweep: Option<SweepSpec>,
    pub tol: f64,
}

fn pick(flag: Option<f64>, config: &Config, key: &str) -> Result<Option<f64>, Failure> {
    match flag {
        Some(x) => Ok(Some(x)),
        None => config.number(key),
    }
}

impl RunParams {
    pub fn resolve(
        config: &Config,
        medium: &MediumArgs,
        orbit: Option<&OrbitArgs>,
        sweep: Option<&SweepArgs>,
        tol: Option<f64>,
    ) -> Result<Self, Failure> {
        config.check_keys(&RUN_KEYS)?;
        let empty = OrbitArgs::default();
        let o = orbit.unwrap_or(&empty);
        let gap = match (o.etilde, o.omega0_mstar) {
            (Some(e), _) => Some(Gap::Etilde(e)),
            (None, Some(w)) => Some(Gap::Omega0(w)),
            (None, None) => match (config.number("etilde")?, config.number("omega0_mstar")?) {
                (Some(_), Some(_)) => {
                    return Err(Failure::usage("config sets both etilde and omega0_mstar"))
                }
                (Some(e), None) => Some(Gap::Etilde(e)),
                (None, Some(w)) => Some(Gap::Omega0(w)),
                (None, None) => None,
            },
        };
        let spec = sweep
            .and_then(|s| s.sweep.clone())
            .or_else(|| config.text("sweep").map(str::to_string));
        let log = sweep.map_or(false, |s| s.log) || config.flag("log")?;
        let sweep = spec
            .map(|s| SweepSpec::parse(&s, log).map_err(Failure::usage))
            .transpose()?;
        if sweep.is_none() && log {
            return Err(Failure::usage("--log needs --sweep"));
        }
        let tol = pick(tol, config, "tol")?.unwrap_or(DEFAULT_TOL);
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Failure::usage(format!("--tol must lie in (0, 1), got {tol}")));
        }
        Ok(Self {
            r0: pick(medium.r0, config, "r0")?,
            a: pick(medium.a, config, "a")?,
            mtilde: pick(o.mtilde, config, "mtilde")?,
            v: pick(o.v, config, "v")?,
            gap,
            sweep,
            tol,
        })
    }

    pub fn require(value: Option<f64>, flag: &str) -> Result<f64, Failure> {
        value.ok_or_else(|| Failure::usage(format!("missing required --{flag}")))
    }

    pub fn condensate(&self) -> Result<CondensateParams<f64>, Failure> {
        Ok(CondensateParams::new(
            Self::require(self.r0, "r0")?,
            Self::require(self.a, "a")?,
        )?)
    }

    pub fn axis(&self, allowed: &[Axis], default: Axis) -> Result<Axis, Failure> {
        let axis = self.sweep.as_ref().and_then(|s| s.axis).unwrap_or(default);
        if allowed.contains(&axis) {
            Ok(axis)
        } else {
            let names: Vec<_> = allowed.iter().map(|a| a.name()).collect();
            Err(Failure::usage(format!(
                "sweep axis {} not available here (use {})",
                axis.name(),
                names.join(", ")
            )))
        }
    }

    /// `Ẽ` for a given `M̃`.
    pub fn etilde(&self, m_tilde: f64) -> Option<f64> {
        self.gap.map(|g| match g {
            Gap::Etilde(e) => e,
            Gap::Omega0(w) => w * m_tilde,
        })
    }

    /// Sorted resolved parameters for provenance.
    pub fn listing(&self, command: &str, axis: Option<Axis>) -> Vec<(&'static str, String)> {
        let mut out = vec![("command", command.to_string())];
        let mut num = |k: &'static str, v: Option<f64>| {
            if let Some(v) = v {
                out.push((k, sci(v)));
            }
        };
        num("r0", self.r0);
        num("a", self.a);
        num("mtilde", self.mtilde);
        num("v", self.v);
        match self.gap {
            Some(Gap::Etilde(e)) => num("etilde", Some(e)),
            Some(Gap::Omega0(w)) => num("omega0_mstar", Some(w)),
            None => {}
        }
        out.push(("tol", sci(self.tol)));
        if let Some(axis) = axis {
            out.push(("axis", axis.name().to_string()));
        }
        if let Some(s) = &self.sweep {
            out.push(("sweep", s.to_string()));
        }
        out
    }
}

/// One evaluation point after the sweep value is substituted.
#[derive(Debug, Clone, Copy)]
pub struct Point {
    pub axis_value: f64,
    pub r0: f64,
    pub a: f64,
    pub m_tilde: f64,
    pub e_tilde: f64,
    pub v: f64,
}

impl Point {
    pub fn condensate(&self) -> unruh_fluid::Result<CondensateParams<f64>> {
        CondensateParams::new(self.r0, self.a)
    }

    /// Excitation orbit, `Ẽ > 0`.
    pub fn orbit(&self) -> unruh_fluid::Result<DetectorOrbit<f64>> {
        DetectorOrbit::new(self.m_tilde, self.e_tilde, self.v)
    }
}

/// Expands the run parameters along `axis`; a run without a sweep is one point.
pub fn points(params: &RunParams, axis: Axis, default_etilde: Option<f64>) -> Result<Vec<Point>, Failure> {
    let values = match &params.sweep {
        Some(s) => s.values(),
        None => {
            let single = match axis {
                Axis::V => params.v,
                Axis::AChem => params.a,
                Axis::Etilde | Axis::Omega0 => match params.gap {
                    Some(Gap::Etilde(e)) => Some(e),
                    Some(Gap::Omega0(w)) => Some(w),
                    None => None,
                },
                Axis::Zeta => None,
            };
            vec![single.ok_or_else(|| {
                Failure::usage(format!("give --sweep or a fixed value for {}", axis.name()))
            })?]
        }
    };
    let m_tilde = RunParams::require(params.mtilde, "mtilde")?;
    let r0 = RunParams::require(params.r0, "r0")?;
    let mut out = Vec::with_capacity(values.len());
    for x in values {
        let a = if axis == Axis::AChem { Some(x) } else { params.a };
        let v = if axis == Axis::V { Some(x) } else { params.v };
        let e_tilde = match axis {
            Axis::Etilde => Some(x),
            Axis::Omega0 => Some(x * m_tilde),
            _ => params.etilde(m_tilde).or(default_etilde),
        };
        out.push(Point {
            axis_value: x,
            r0,
            a: RunParams::require(a, "a")?,
            m_tilde,
            e_tilde: e_tilde.ok_or_else(|| Failure::usage("missing required --etilde or --omega0-mstar"))?,
            v: RunParams::require(v, "v")?,
        });
    }
    Ok(out)
}

pub const PROFILE_ZETA_MAX: f64 = DEFAULT_ZETA_MAX;
