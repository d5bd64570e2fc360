use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// Gap in units of `M*/ħ`
    Omega0,
    /// Gap as `R ω0 / c0`
    Etilde,
    V,
    Zeta,
    AChem,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Omega0 => "omega0",
            Axis::Etilde => "etilde",
            Axis::V => "v",
            Axis::Zeta => "zeta",
            Axis::AChem => "a_chem",
        }
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "omega0" => Axis::Omega0,
            "etilde" => Axis::Etilde,
            "v" => Axis::V,
            "zeta" => Axis::Zeta,
            "a_chem" | "a" => Axis::AChem,
            _ => return Err(format!("unknown sweep axis {s:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis: Option<Axis>,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub log: bool,
}

impl SweepSpec {
    /// Parses `[axis=]start:stop:points`.
    pub fn parse(spec: &str, log: bool) -> Result<Self, String> {
        let (axis, range) = match spec.split_once('=') {
            Some((axis, range)) => (Some(axis.trim().parse()?), range),
            None => (None, spec),
        };
        let parts: Vec<&str> = range.split(':').collect();
        let [start, stop, points] = parts[..] else {
            return Err(format!("sweep {spec:?}: expected start:stop:points"));
        };
        let number = |s: &str| -> Result<f64, String> {
            let x: f64 = s.trim().parse().map_err(|_| format!("sweep {spec:?}: bad number {s:?}"))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(format!("sweep {spec:?}: bounds must be finite"))
            }
        };
        let start = number(start)?;
        let stop = number(stop)?;
        let points: usize = points
            .trim()
            .parse()
            .map_err(|_| format!("sweep {spec:?}: bad point count {points:?}"))?;
        if !(start < stop) {
            return Err(format!("sweep {spec:?}: start must be below stop"));
        }
        if points < 2 {
            return Err(format!("sweep {spec:?}: need at least 2 points"));
        }
        if log && start <= 0.0 {
            return Err(format!("sweep {spec:?}: log spacing needs a positive start"));
        }
        Ok(Self {
            axis,
            start,
            stop,
            points,
            log,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points - 1;
        let mut out: Vec<f64> = (0..=n)
            .map(|i| {
                let t = i as f64 / n as f64;
                if self.log {
                    (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                } else {
                    self.start + t * (self.stop - self.start)
                }
            })
            .collect();
        out[0] = self.start;
        out[n] = self.stop;
        out
    }
}

impl fmt::Display for SweepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(axis) = self.axis {
            write!(f, "{}=", axis.name())?;
        }
        write!(f, "{:e}:{:e}:{}", self.start, self.stop, self.points)?;
        if self.log {
            f.write_str(":log")?;
        }
        Ok(())
    }
}
