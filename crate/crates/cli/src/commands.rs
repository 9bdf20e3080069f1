use std::f64::consts::PI;
use std::fmt;

use commwell::{comm_bound_states, comm_cross_section, comm_phase_shift, CommWellSpec};
use ncwell::cross::differential_from_point;
use ncwell::{
    bound_state_solution, cross_section_total_with, find_bound_states, phase_shift_sweep, scattering_coeffs,
    unwrap_phases, wavefunction_eval, WaveSet, WellSpec,
};
use rayon::prelude::*;

use crate::args::{
    parse_orders, parse_radius_squared, BoundArgs, CompareArgs, CrossArgs, DcsArgs, EnergyArgs, Quantity, SweepArgs,
    WaveArgs, WellArgs,
};
use crate::table::{Cell, Table};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Model(ncwell::Error),
    Io(std::io::Error),
    SelftestFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Model(ncwell::Error::Domain(_)) => 1,
            CliError::Model(_) | CliError::SelftestFailed(_) => 2,
            CliError::Io(_) => 74,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Model(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::SelftestFailed(n) => write!(f, "{n} self-test suite(s) failed"),
        }
    }
}

impl From<ncwell::Error> for CliError {
    fn from(e: ncwell::Error) -> Self {
        CliError::Model(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn well_spec(args: &WellArgs) -> Result<WellSpec> {
    let radius_squared = args.radius.as_deref().map(parse_radius_squared).transpose().map_err(CliError::Usage)?;
    let spec = match (args.theta, args.capital_n, radius_squared) {
        (Some(theta), Some(n), None) => WellSpec::new(theta, n, args.v)?,
        (None, Some(n), Some(r2)) => WellSpec::from_radius_squared(r2, n, args.v)?,
        (Some(theta), None, Some(r2)) => WellSpec::from_theta_radius_squared(theta, r2, args.v)?,
        _ => return Err(CliError::Usage("give exactly two of --theta, --capital-n, --radius".into())),
    };
    Ok(spec)
}

fn comm_spec(spec: &WellSpec) -> Result<CommWellSpec> {
    Ok(CommWellSpec::new(spec.radius(), spec.v())?)
}

fn orders(text: &str) -> Result<Vec<i32>> {
    parse_orders(text).map_err(CliError::Usage)
}

fn energies(args: &EnergyArgs, v: f64, default_steps: usize) -> Result<Vec<f64>> {
    let emin = args.emin.unwrap_or(v + args.offset);
    let emax = args.emax.unwrap_or(v + 25.0);
    let steps = args.esteps.unwrap_or(default_steps);
    if !(emin < emax) {
        return Err(CliError::Usage(format!("need emin < emax, got {emin} and {emax}")));
    }
    if steps < 2 {
        return Err(CliError::Usage("esteps must be at least 2".into()));
    }
    if !(emin > v) {
        return Err(CliError::Model(ncwell::Error::Domain(format!(
            "sweep energies must exceed V = {v}; emin = {emin}"
        ))));
    }
    Ok((0..steps).map(|i| emin + (emax - emin) * i as f64 / (steps - 1) as f64).collect())
}

pub fn bound_states(args: &BoundArgs) -> Result<Table> {
    let spec = well_spec(&args.well)?;
    let comm = comm_spec(&spec)?;
    let mut table = Table::new(&["m", "level", "E_nc", "E_comm", "residual_nc"]);
    for m in orders(&args.m)? {
        let nc = find_bound_states(&spec, m, args.grid)?;
        let cm = comm_bound_states(&comm, m)?;
        for level in 0..nc.len().max(cm.len()) {
            let a = nc.get(level);
            table.push(vec![
                Cell::Int(m as i64),
                Cell::Int(level as i64),
                a.map(|b| b.energy).into(),
                cm.get(level).map(|b| b.energy).into(),
                a.map(|b| b.residual).into(),
            ]);
        }
    }
    Ok(table)
}

pub fn phase_shifts(args: &SweepArgs) -> Result<Table> {
    let spec = well_spec(&args.well)?;
    let comm = comm_spec(&spec)?;
    let es = energies(&args.energy, spec.v(), 400)?;
    let mut table = Table::new(&[
        "E",
        "m",
        "tan_delta_nc",
        "delta_nc",
        "delta_nc_unwrapped",
        "tan_delta_comm",
        "delta_comm",
        "delta_comm_unwrapped",
        "abs_dev",
    ]);
    for m in orders(&args.m)? {
        let nc = phase_shift_sweep(&es, &spec, m)?;
        let mut cm = es.par_iter().map(|&e| comm_phase_shift(e, &comm, m)).collect::<ncwell::Result<Vec<_>>>()?;
        unwrap_phases(&mut cm);
        for (a, b) in nc.iter().zip(cm.iter()) {
            table.push(vec![
                a.energy.into(),
                Cell::Int(m as i64),
                a.tan_delta.into(),
                a.delta.into(),
                a.delta_unwrapped.into(),
                b.tan_delta.into(),
                b.delta.into(),
                b.delta_unwrapped.into(),
                (a.tan_delta - b.tan_delta).abs().into(),
            ]);
        }
    }
    Ok(table)
}

pub fn cross_section(args: &CrossArgs) -> Result<Table> {
    let spec = well_spec(&args.well)?;
    let comm = comm_spec(&spec)?;
    let es = energies(&args.energy, spec.v(), 200)?;
    let wave_set = if args.symmetric { WaveSet::Symmetric } else { WaveSet::NonNegative };
    let rows = es
        .par_iter()
        .map(|&e| {
            let a = cross_section_total_with(e, &spec, args.mmax, wave_set)?;
            let b = comm_cross_section(e, &comm, args.mmax)?;
            Ok(vec![
                e.into(),
                a.k.into(),
                a.sigma_total.into(),
                b.sigma_total.into(),
                Cell::Int(a.m_max_used as i64),
                Cell::Int(b.m_max_used as i64),
            ])
        })
        .collect::<ncwell::Result<Vec<_>>>()?;
    let mut table = Table::new(&["E", "k", "sigma_nc", "sigma_comm", "mmax_nc", "mmax_comm"]);
    rows.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

pub fn dcs(args: &DcsArgs) -> Result<Table> {
    let spec = well_spec(&args.well)?;
    let comm = comm_spec(&spec)?;
    if args.phi_steps < 2 {
        return Err(CliError::Usage("phi-steps must be at least 2".into()));
    }
    let grid: Vec<f64> = (0..args.phi_steps).map(|i| 2.0 * PI * i as f64 / args.phi_steps as f64).collect();
    let a = differential_from_point(&ncwell::cross_section_total(args.e, &spec, args.mmax)?, &grid);
    let b = differential_from_point(&comm_cross_section(args.e, &comm, args.mmax)?, &grid);
    let mut table = Table::new(&["phi", "dsigma_nc", "dsigma_comm"]);
    for (x, y) in a.iter().zip(b.iter()) {
        table.push(vec![x.0.into(), x.1.into(), y.1.into()]);
    }
    Ok(table)
}

pub fn wavefunction(args: &WaveArgs) -> Result<Table> {
    let spec = well_spec(&args.well)?;
    let (inner, outer) = match (args.e, args.level) {
        (Some(e), _) => {
            let s = scattering_coeffs(e, &spec, args.m)?;
            (s.interior, s.exterior)
        }
        (None, Some(level)) => {
            let states = find_bound_states(&spec, args.m, ncwell::DEFAULT_GRID_POINTS)?;
            let state = states.get(level).ok_or_else(|| {
                CliError::Model(ncwell::Error::Domain(format!(
                    "m = {} has {} bound state(s); level {level} does not exist",
                    args.m,
                    states.len()
                )))
            })?;
            bound_state_solution(&spec, state)?
        }
        (None, None) => return Err(CliError::Usage("give --e or --level".into())),
    };
    if args.steps < 2 {
        return Err(CliError::Usage("steps must be at least 2".into()));
    }
    let half = args.extent.unwrap_or(1.5 * spec.radius());
    let axis: Vec<f64> = (0..args.steps).map(|i| -half + 2.0 * half * i as f64 / (args.steps - 1) as f64).collect();
    let points: Vec<(f64, f64)> = axis.iter().flat_map(|&y| axis.iter().map(move |&x| (x, y))).collect();
    let radius = spec.radius();
    let mut table = Table::new(&["x", "y", "region", "re", "im"]);
    for &(x, y) in &points {
        let (sol, name) = if x.hypot(y) < radius { (&inner, "interior") } else { (&outer, "exterior") };
        let psi = wavefunction_eval(sol, args.m, &[(x, y)])?[0];
        table.push(vec![x.into(), y.into(), Cell::Text(name.into()), psi.re.into(), psi.im.into()]);
    }
    Ok(table)
}

pub fn compare(args: &CompareArgs) -> Result<Table> {
    let spec = well_spec(&args.well)?;
    let comm = comm_spec(&spec)?;
    let default_steps = if args.quantity == Quantity::PhaseShift { 400 } else { 200 };
    let es = energies(&args.energy, spec.v(), default_steps)?;
    let pairs = es
        .par_iter()
        .map(|&e| match args.quantity {
            Quantity::PhaseShift => {
                Ok((ncwell::phase_shift(e, &spec, args.m)?.tan_delta, comm_phase_shift(e, &comm, args.m)?.tan_delta))
            }
            Quantity::CrossSection => Ok((
                ncwell::cross_section_total(e, &spec, args.mmax)?.sigma_total,
                comm_cross_section(e, &comm, args.mmax)?.sigma_total,
            )),
        })
        .collect::<ncwell::Result<Vec<(f64, f64)>>>()?;
    let mut table = Table::new(&["E", "nc", "comm", "abs_dev", "rel_dev"]);
    for (e, (a, b)) in es.iter().zip(pairs) {
        let dev = (a - b).abs();
        let rel = if b != 0.0 { Some(dev / b.abs()) } else { None };
        table.push(vec![(*e).into(), a.into(), b.into(), dev.into(), rel.into()]);
    }
    Ok(table)
}

pub fn selftest() -> (Table, usize) {
    let mut reports = specfun::selftest::run_all();
    reports.extend(ncwell::selftest::run_all());
    let mut table = Table::new(&["suite", "cases", "tolerance", "max_error", "status"]);
    let mut failed = 0;
    for r in &reports {
        if !r.passed() {
            failed += 1;
        }
        table.push(vec![
            Cell::Text(r.name.to_string()),
            Cell::Int(r.cases as i64),
            r.tolerance.into(),
            r.max_error.into(),
            Cell::Text(if r.passed() { "PASS" } else { "FAIL" }.into()),
        ]);
    }
    (table, failed)
}
