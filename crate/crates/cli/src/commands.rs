use std::fmt;

use serde_json::{Map, Value};

use hartmann_core::validation::{run_validation, Suite, ValidationConfig};
use hartmann_core::{
    derive_quantum_numbers, potential_value, radial_wavefunction, spectrum, Error, HartmannParams,
    UnitSystem,
};

use crate::output::{csv_document, fmt_float, int, json_document, num, quasi_polynomial, text, Meta};
use crate::{
    Command, Common, Emit, Format, PotentialArgs, SpectrumArgs, Strengths, SuiteArg, Units,
    ValidateArgs, WavefunctionArgs,
};

/// Polar angles closer than this to the axis are rejected.
const AXIS_GUARD: f64 = 1e-9;

#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self { message: message.into(), code: 2 }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::InvalidArgument(_) | Error::InvalidQuantumNumbers(_) | Error::Domain(_) => 2,
            _ => 1,
        };
        Self { message: err.to_string(), code }
    }
}

pub struct Outcome {
    pub body: String,
    pub code: u8,
}

pub fn run(command: Command, argv: Vec<String>) -> Result<Outcome, CliError> {
    let meta = Meta { argv };
    match command {
        Command::Spectrum(a) => cmd_spectrum(&a, &meta),
        Command::Wavefunction(a) => cmd_wavefunction(&a, &meta),
        Command::Validate(a) => cmd_validate(&a, &meta),
        Command::Potential(a) => cmd_potential(&a, &meta),
    }
}

fn positive(flag: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(CliError::usage(format!("--{flag} must be a positive finite number (got {x})")))
    }
}

fn non_negative(flag: &str, x: i64) -> Result<u32, CliError> {
    u32::try_from(x).map_err(|_| CliError::usage(format!("--{flag} must be a non-negative integer (got {x})")))
}

fn params(s: &Strengths) -> Result<HartmannParams, CliError> {
    let eta = positive("eta", s.eta)?;
    let sigma = positive("sigma", s.sigma)?;
    Ok(HartmannParams::new(eta, sigma)?)
}

fn base_params(p: &HartmannParams) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("eta".into(), num(p.eta()));
    m.insert("sigma".into(), num(p.sigma()));
    m.insert("gamma".into(), num(p.gamma()));
    m
}

fn meta_for<'a>(common: &Common, meta: &'a Meta) -> Option<&'a Meta> {
    common.meta.then_some(meta)
}

fn cmd_spectrum(a: &SpectrumArgs, meta: &Meta) -> Result<Outcome, CliError> {
    let p = params(&a.strengths)?;
    let k = non_negative("max-excitation", a.max_excitation)?;
    if a.m_min > a.m_max {
        return Err(CliError::usage(format!(
            "--m-min ({}) must not exceed --m-max ({})",
            a.m_min, a.m_max
        )));
    }
    let units = UnitSystem::default();
    let entries = spectrum(&p, &units, a.m_min..=a.m_max, k);

    let rows: Vec<Vec<Value>> = entries
        .iter()
        .map(|e| {
            vec![
                int(e.qn.m),
                int(i64::from(e.qn.nu_prime)),
                int(i64::from(e.qn.n_prime)),
                num(e.qn.m_abs),
                num(e.qn.l),
                num(e.qn.n),
                num(e.energy_internal),
                num(e.energy_over_eps0()),
            ]
        })
        .collect();
    let header = ["m", "nu_prime", "n_prime", "M_abs", "L", "N", "E_internal", "E_over_eps0"];

    let body = match a.common.format {
        Format::Csv => csv_document(&header, &rows, meta_for(&a.common, meta)),
        Format::Json => {
            let mut params = base_params(&p);
            params.insert("m_min".into(), int(a.m_min));
            params.insert("m_max".into(), int(a.m_max));
            params.insert("max_excitation".into(), int(i64::from(k)));
            params.insert(
                "units".into(),
                text(match a.units {
                    Units::Internal => "internal",
                    Units::Epsilon0 => "epsilon0",
                }),
            );
            let results = entries
                .iter()
                .zip(rows)
                .map(|(e, row)| {
                    let mut obj: Map<String, Value> =
                        header.iter().map(|h| h.to_string()).zip(row).collect();
                    let energy = match a.units {
                        Units::Internal => e.energy_internal,
                        Units::Epsilon0 => e.energy_over_eps0(),
                    };
                    obj.insert("energy".into(), num(energy));
                    Value::Object(obj)
                })
                .collect();
            json_document("spectrum", params, results, meta_for(&a.common, meta))
        }
    };
    Ok(Outcome { body, code: 0 })
}

fn cmd_wavefunction(a: &WavefunctionArgs, meta: &Meta) -> Result<Outcome, CliError> {
    let p = params(&a.strengths)?;
    non_negative("nu", a.nu)?;
    non_negative("nprime", a.nprime)?;
    let qn = derive_quantum_numbers(&p, a.m, a.nu, a.nprime)?;
    let sol = radial_wavefunction(&p, &UnitSystem::default(), &qn)?;
    let r_max = match a.r_max {
        Some(r) => positive("r-max", r)?,
        None => 30.0 * qn.n / p.gamma(),
    };
    if a.samples < 2 {
        return Err(CliError::usage(format!("--samples must be at least 2 (got {})", a.samples)));
    }
    let samples = a.samples as usize;
    let want_symbolic = matches!(a.emit, Emit::Symbolic | Emit::Both);
    let want_samples = matches!(a.emit, Emit::Samples | Emit::Both);
    if a.common.format == Format::Csv && a.emit == Emit::Both {
        return Err(CliError::usage("--emit both requires --format json (CSV holds one table)"));
    }

    let mut sample_rows = Vec::new();
    if want_samples {
        for i in 0..samples {
            let r = i as f64 * r_max / (samples - 1) as f64;
            let big_r = sol.radial.evaluate(r)?;
            let u = sol.u.evaluate(r)?;
            sample_rows.push(vec![num(r), num(big_r), num(u)]);
        }
    }

    let body = match a.common.format {
        Format::Csv if want_symbolic => {
            let mut rows = Vec::new();
            for (name, f) in [("u", &sol.u), ("R", &sol.radial)] {
                for (k, c) in f.terms() {
                    rows.push(vec![
                        text(name),
                        int(k as i64),
                        num(f.alpha() + k as f64),
                        num(c),
                        num(f.kappa()),
                    ]);
                }
            }
            csv_document(&["function", "k", "power", "coefficient", "kappa"], &rows, meta_for(&a.common, meta))
        }
        Format::Csv => csv_document(&["r", "R", "u"], &sample_rows, meta_for(&a.common, meta)),
        Format::Json => {
            let mut params = base_params(&p);
            params.insert("m".into(), int(a.m));
            params.insert("nu_prime".into(), int(a.nu));
            params.insert("n_prime".into(), int(a.nprime));
            params.insert("r_max".into(), num(r_max));
            params.insert("samples".into(), int(a.samples));
            params.insert(
                "emit".into(),
                text(match a.emit {
                    Emit::Symbolic => "symbolic",
                    Emit::Samples => "samples",
                    Emit::Both => "both",
                }),
            );
            let mut state = Map::new();
            state.insert("m".into(), int(qn.m));
            state.insert("nu_prime".into(), int(i64::from(qn.nu_prime)));
            state.insert("n_prime".into(), int(i64::from(qn.n_prime)));
            state.insert("M_abs".into(), num(qn.m_abs));
            state.insert("L".into(), num(qn.l));
            state.insert("N".into(), num(qn.n));
            state.insert("E_internal".into(), num(sol.energy_internal));
            state.insert("E_over_eps0".into(), num(2.0 * sol.energy_internal));
            state.insert("length_unit".into(), num(sol.length_unit));
            if want_symbolic {
                state.insert("u".into(), quasi_polynomial(&sol.u));
                state.insert("R".into(), quasi_polynomial(&sol.radial));
            }
            if want_samples {
                let pts = sample_rows
                    .into_iter()
                    .map(|row| {
                        let mut o = Map::new();
                        for (key, v) in ["r", "R", "u"].iter().zip(row) {
                            o.insert((*key).into(), v);
                        }
                        Value::Object(o)
                    })
                    .collect();
                state.insert("samples".into(), Value::Array(pts));
            }
            json_document("wavefunction", params, vec![Value::Object(state)], meta_for(&a.common, meta))
        }
    };
    Ok(Outcome { body, code: 0 })
}

fn cmd_validate(a: &ValidateArgs, meta: &Meta) -> Result<Outcome, CliError> {
    let p = params(&a.strengths)?;
    let max_n = non_negative("max-n", a.max_n)?;
    if max_n == 0 {
        return Err(CliError::usage("--max-n must be at least 1"));
    }
    let grid_n = usize::try_from(a.grid_n)
        .ok()
        .filter(|&n| n >= hartmann_core::RadialGrid::MIN_POINTS)
        .ok_or_else(|| {
            CliError::usage(format!(
                "--grid-n must be an integer of at least {} (got {})",
                hartmann_core::RadialGrid::MIN_POINTS,
                a.grid_n
            ))
        })?;
    let r_max = a.r_max.map(|r| positive("r-max", r)).transpose()?;
    let mut m_values = a.m.clone();
    m_values.sort_unstable();
    m_values.dedup();
    let suite = match a.suite {
        SuiteArg::Algebra => Suite::Algebra,
        SuiteArg::Numeric => Suite::Numeric,
        SuiteArg::All => Suite::All,
    };
    let cfg = ValidationConfig {
        params: p,
        m_values: m_values.clone(),
        max_n,
        grid_points: grid_n,
        r_max,
        suite,
        inject_error: a.inject_error,
    };
    let report = run_validation(&cfg)?;
    let passed = report.all_passed();

    let rows: Vec<Vec<Value>> = report
        .checks
        .iter()
        .map(|c| vec![text(&c.name), num(c.measured), num(c.threshold), Value::Bool(c.passed)])
        .collect();
    let header = ["name", "measured", "threshold", "passed"];
    let body = match a.common.format {
        Format::Csv => csv_document(&header, &rows, meta_for(&a.common, meta)),
        Format::Json => {
            let mut params = base_params(&p);
            params.insert("m".into(), Value::Array(m_values.iter().map(|&m| int(m)).collect()));
            params.insert("max_n".into(), int(i64::from(max_n)));
            params.insert("grid_n".into(), int(grid_n as i64));
            params.insert("r_max".into(), r_max.map_or(Value::Null, num));
            params.insert(
                "suite".into(),
                text(match suite {
                    Suite::Algebra => "algebra",
                    Suite::Numeric => "numeric",
                    Suite::All => "all",
                }),
            );
            params.insert("inject_error".into(), Value::Bool(a.inject_error));
            params.insert("all_passed".into(), Value::Bool(passed));
            let results = rows
                .into_iter()
                .map(|row| Value::Object(header.iter().map(|h| h.to_string()).zip(row).collect()))
                .collect();
            json_document("validate", params, results, meta_for(&a.common, meta))
        }
    };
    let failed = report.failures().count();
    if failed > 0 {
        eprintln!("{failed} of {} checks failed", report.checks.len());
        for c in report.failures() {
            eprintln!(
                "  {}: measured {} > threshold {}",
                c.name,
                fmt_float(c.measured),
                fmt_float(c.threshold)
            );
        }
    }
    Ok(Outcome { body, code: if passed { 0 } else { 1 } })
}

fn cmd_potential(a: &PotentialArgs, meta: &Meta) -> Result<Outcome, CliError> {
    let p = params(&a.strengths)?;
    let r_max = positive("r-max", a.r_max)?;
    if !a.theta.is_finite() || a.theta.sin().abs() < AXIS_GUARD {
        return Err(CliError::usage(format!(
            "--theta must stay away from the polar axis (0 or pi); got {}",
            a.theta
        )));
    }
    if a.samples < 1 {
        return Err(CliError::usage(format!("--samples must be at least 1 (got {})", a.samples)));
    }
    let units = UnitSystem::default();
    let mut rows = Vec::with_capacity(a.samples as usize);
    for i in 1..=a.samples {
        let r = i as f64 * r_max / a.samples as f64;
        rows.push(vec![num(r), num(potential_value(&p, &units, r, a.theta)?)]);
    }
    let body = match a.common.format {
        Format::Csv => csv_document(&["r", "V"], &rows, meta_for(&a.common, meta)),
        Format::Json => {
            let mut params = base_params(&p);
            params.insert("r_max".into(), num(r_max));
            params.insert("theta".into(), num(a.theta));
            params.insert("samples".into(), int(a.samples));
            let results = rows
                .into_iter()
                .map(|row| Value::Object(["r", "V"].iter().map(|h| h.to_string()).zip(row).collect()))
                .collect();
            json_document("potential", params, results, meta_for(&a.common, meta))
        }
    };
    Ok(Outcome { body, code: 0 })
}
