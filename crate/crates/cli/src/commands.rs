use rayon::prelude::*;
use unruh_fluid::dispersion::{CondensateParams, Dispersion};
use unruh_fluid::oracle::{auto_smeared_rate, resolving_sigma};
use unruh_fluid::response::{detailed_balance_temperature, transition_rate, RateResult, TemperatureStatus};
use unruh_fluid::Error;

use crate::fail::{error_tag, Failure, EXIT_PHYSICAL, EXIT_VERIFY};
use crate::output::{sci, Csv};
use crate::params::{points, Point, RunParams};
use crate::sweep::Axis;

/// Order-preserving parallel map on a pool of `threads` workers.
pub fn par_map<T: Sync, U: Send>(threads: usize, items: &[T], f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().map(&f).collect())
}

/// Exit status for a sweep: nonzero only when every row failed.
fn sweep_status<T>(rows: &[Result<T, Error>]) -> Result<(), Failure> {
    if rows.is_empty() || rows.iter().any(Result::is_ok) {
        return Ok(());
    }
    let physical = rows
        .iter()
        .any(|r| matches!(r, Err(Error::Instability { .. } | Error::Physical { .. })));
    let first = rows.iter().find_map(|r| r.as_ref().err()).unwrap();
    Err(Failure {
        code: if physical { EXIT_PHYSICAL } else { EXIT_VERIFY },
        message: format!("every row failed; first: {first}"),
        json: None,
    })
}

pub fn dispersion(args: &[String], params: &RunParams, threads: usize) -> Result<String, Failure> {
    let p = params.condensate()?;
    params.axis(&[Axis::Zeta], Axis::Zeta)?;
    let spec = params
        .sweep
        .as_ref()
        .ok_or_else(|| Failure::usage("dispersion needs --sweep start:stop:points over zeta"))?;
    if spec.start < 0.0 {
        return Err(Failure::usage("zeta must be non-negative"));
    }
    let zetas = spec.values();
    let rows = par_map(threads, &zetas, |&z| {
        let f2 = p.f_squared(z);
        let (f, flag) = if f2 >= 0.0 {
            (sci(f2.sqrt()), "OK")
        } else {
            (String::new(), "UNSTABLE")
        };
        vec![sci(z), sci(f2), f, flag.to_string()]
    });
    let mut csv = Csv::new(
        args,
        &params.listing("dispersion", Some(Axis::Zeta)),
        &["zeta", "f_squared", "f", "flag"],
    );
    for row in &rows {
        csv.row(row);
    }
    Ok(csv.into_string())
}

#[derive(Debug, Clone, Copy)]
pub struct RatePair {
    pub excite: RateResult<f64>,
    pub deexcite: RateResult<f64>,
}

pub fn rate_pair(p: &CondensateParams<f64>, point: &Point, tol: f64) -> Result<RatePair, Error> {
    let orbit = point.orbit()?;
    Ok(RatePair {
        excite: transition_rate(p, &orbit, tol)?,
        deexcite: transition_rate(p, &orbit.reversed(), tol)?,
    })
}

pub const ORACLE_SIGMA: f64 = 1e-3;
pub const ORACLE_TOL: f64 = 1e-3;
pub const ORACLE_ABS: f64 = 1e-12;
pub const ORACLE_MAX_MTILDE: f64 = 200.0;

/// Oracle comparison for one point; `None` when the oracle is too expensive.
pub fn oracle_deviation(p: &CondensateParams<f64>, point: &Point, mode_sum: f64, excite: bool) -> Option<Result<f64, Error>> {
    if point.m_tilde > ORACLE_MAX_MTILDE {
        return None;
    }
    Some(point.orbit().and_then(|o| {
        let o = if excite { o } else { o.reversed() };
        let s = auto_smeared_rate(p, &o, resolving_sigma(p, &o, ORACLE_SIGMA))?;
        let gap = (s - mode_sum).abs();
        Ok(if gap <= ORACLE_ABS { 0.0 } else { gap / mode_sum.abs().max(ORACLE_ABS) })
    }))
}

fn check_rows(
    threads: usize,
    pts: &[Point],
    rates: &[Result<(f64, f64), Error>],
) -> Result<(), Failure> {
    let jobs: Vec<(usize, bool)> = (0..pts.len())
        .filter(|&i| rates[i].is_ok())
        .flat_map(|i| [(i, true), (i, false)])
        .collect();
    let outcomes = par_map(threads, &jobs, |&(i, up)| {
        let p = pts[i].condensate().ok()?;
        let (e, d) = *rates[i].as_ref().ok()?;
        oracle_deviation(&p, &pts[i], if up { e } else { d }, up)
    });
    let mut failed = Vec::new();
    for ((i, up), outcome) in jobs.iter().zip(outcomes) {
        let label = if *up { "excite" } else { "deexcite" };
        match outcome {
            None => eprintln!("verify row {i} {label}: oracle skipped (mtilde > {ORACLE_MAX_MTILDE})"),
            Some(Ok(dev)) if dev <= ORACLE_TOL => {
                eprintln!("verify row {i} {label}: pass (deviation {dev:.3e})")
            }
            Some(Ok(dev)) => {
                eprintln!("verify row {i} {label}: FAIL (deviation {dev:.3e})");
                failed.push(i);
            }
            Some(Err(e)) => {
                eprintln!("verify row {i} {label}: FAIL ({e})");
                failed.push(i);
            }
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::verify(format!("oracle check failed on rows {failed:?}")))
    }
}

pub fn rate(args: &[String], params: &RunParams, threads: usize, verify: bool) -> Result<(String, Result<(), Failure>), Failure> {
    RunParams::require(params.mtilde, "mtilde")?;
    let default_axis = match params.gap {
        Some(crate::params::Gap::Omega0(_)) => Axis::Omega0,
        _ => Axis::Etilde,
    };
    let axis = params.axis(&[Axis::Omega0, Axis::Etilde, Axis::V, Axis::AChem], default_axis)?;
    let pts = points(params, axis, None)?;
    for pt in &pts {
        pt.condensate()?;
        if !(pt.e_tilde > 0.0) {
            return Err(Failure::usage(format!("the gap must be positive, got Etilde = {}", pt.e_tilde)));
        }
        pt.orbit()?;
    }
    let results = par_map(threads, &pts, |pt| rate_pair(&pt.condensate()?, pt, params.tol));
    let mut csv = Csv::new(
        args,
        &params.listing("rate", Some(axis)),
        &[
            "axis_value",
            "rate_excite",
            "rate_deexcite",
            "m_min",
            "m_used",
            "tail_bound",
            "multi_root",
            "near_singular",
            "status",
        ],
    );
    for (pt, r) in pts.iter().zip(&results) {
        match r {
            Ok(r) => csv.row(&[
                sci(pt.axis_value),
                sci(r.excite.value),
                sci(r.deexcite.value),
                r.excite.m_min.to_string(),
                r.excite.m_used.max(r.deexcite.m_used).to_string(),
                sci(r.excite.tail_bound.max(r.deexcite.tail_bound)),
                (r.excite.multi_root || r.deexcite.multi_root).to_string(),
                (r.excite.near_singular || r.deexcite.near_singular).to_string(),
                "ok".to_string(),
            ]),
            Err(e) => {
                let mut row = vec![sci(pt.axis_value)];
                row.extend(std::iter::repeat(String::new()).take(7));
                row.push(error_tag(e).to_string());
                csv.row(&row);
            }
        }
    }
    sweep_status(&results)?;
    let check = if verify {
        let rates: Vec<_> = results
            .iter()
            .map(|r| r.as_ref().map(|r| (r.excite.value, r.deexcite.value)).map_err(Clone::clone))
            .collect();
        check_rows(threads, &pts, &rates)
    } else {
        Ok(())
    };
    Ok((csv.into_string(), check))
}

pub fn temperature(args: &[String], params: &RunParams, threads: usize, verify: bool) -> Result<(String, Result<(), Failure>), Failure> {
    let m_tilde = RunParams::require(params.mtilde, "mtilde")?;
    let axis = params.axis(&[Axis::V], Axis::V)?;
    // default gap ω0 = M*/ħ
    let pts = points(params, axis, Some(m_tilde))?;
    for pt in &pts {
        pt.condensate()?;
        if !(pt.e_tilde > 0.0) {
            return Err(Failure::usage(format!("the gap must be positive, got Etilde = {}", pt.e_tilde)));
        }
        pt.orbit()?;
    }
    let results = par_map(threads, &pts, |pt| {
        detailed_balance_temperature(&pt.condensate()?, &pt.orbit()?, params.tol)
    });
    let mut csv = Csv::new(
        args,
        &params.listing("temperature", Some(axis)),
        &["v", "temperature", "status"],
    );
    for (pt, r) in pts.iter().zip(&results) {
        let row = match r {
            Ok(t) => match (t.status, t.temperature) {
                (TemperatureStatus::Ok, Some(x)) => vec![sci(pt.v), sci(x), t.status.as_str().to_string()],
                _ => vec![sci(pt.v), String::new(), t.status.as_str().to_string()],
            },
            Err(e) => vec![sci(pt.v), String::new(), error_tag(e).to_string()],
        };
        csv.row(&row);
    }
    sweep_status(&results)?;
    let check = if verify {
        let rates: Vec<_> = results
            .iter()
            .map(|r| r.as_ref().map(|t| (t.rate_excite, t.rate_deexcite)).map_err(Clone::clone))
            .collect();
        check_rows(threads, &pts, &rates)
    } else {
        Ok(())
    };
    Ok((csv.into_string(), check))
}
