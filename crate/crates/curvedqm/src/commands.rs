//! The four commands.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use curvedqm_core::dsusy::superpotential;
use curvedqm_core::model::{potential_v, spectrum, wavefunction_psi};
use curvedqm_core::rational::{
    extended_potential, extended_spectrum, extended_superpotential, extended_wavefunction, v_rat, ExtensionSpec,
    ExtensionType,
};
use curvedqm_core::{Error, SpectrumEntry, SystemSpec};

use crate::concordance::{generate_concordance, REGISTRY};
use crate::config::{Format, JobConfig, OutputArgs, SampleGrid, VerifyTarget};
use crate::output::{emit, to_json, Cell, Table};
use crate::verify::{default_jobs, run_jobs, system_case, thread_count, user_jobs, CheckRecord, Group, Report};
use crate::{AppError, EXIT_CHECK_FAILED, EXIT_INADMISSIBLE, EXIT_OK};

/// Runs a validated job and returns its exit code.
pub fn dispatch(job: JobConfig) -> Result<i32, AppError> {
    match job {
        JobConfig::Spectrum { system, extension, count, output } => {
            cmd_spectrum(&system, extension.as_ref(), count, &output)
        }
        JobConfig::Sample { system, extension, grid, output } => cmd_sample(&system, extension.as_ref(), grid, &output),
        JobConfig::Verify { target, groups, reproducible, output } => {
            let report = build_report(&target, groups, reproducible);
            write_report(&report, &output)?;
            for c in report.failures() {
                eprintln!("FAIL [{}] {} :: {} {}", c.group, c.case, c.check, c.note.as_deref().unwrap_or(""));
            }
            eprintln!("{} checks, {} passed, {} failed", report.summary.total, report.summary.passed, report.summary.failed);
            Ok(match target {
                VerifyTarget::Extension(_, Err(_)) => EXIT_INADMISSIBLE,
                _ if report.all_pass() => EXIT_OK,
                _ => EXIT_CHECK_FAILED,
            })
        }
        JobConfig::Concordance { output } => {
            let text = generate_concordance(&REGISTRY).map_err(|gaps| AppError::Concordance(gaps.join("; ")))?;
            emit(text.as_bytes(), output.as_deref())?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct SystemMeta {
    kind: &'static str,
    lambda: f64,
    d: u32,
    l: i32,
    coupling: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    extension: Option<ExtensionMeta>,
}

#[derive(Serialize)]
struct ExtensionMeta {
    #[serde(rename = "type")]
    ty: &'static str,
    m: u32,
}

fn meta(system: &SystemSpec, ext: Option<&ExtensionSpec>) -> SystemMeta {
    SystemMeta {
        kind: system.kind.label(),
        lambda: system.lambda,
        d: system.d,
        l: system.l,
        coupling: system.coupling,
        extension: ext.map(|e| ExtensionMeta { ty: e.ext_type().label(), m: e.m() }),
    }
}

#[derive(Serialize)]
struct TableDocument<'a> {
    schema_version: u32,
    command: &'static str,
    system: SystemMeta,
    columns: &'a [String],
    rows: Vec<serde_json::Value>,
}

fn write_table(
    command: &'static str,
    table: &Table,
    system: &SystemSpec,
    ext: Option<&ExtensionSpec>,
    output: &OutputArgs,
) -> Result<(), AppError> {
    let bytes = match output.format {
        Format::Csv => table.to_csv()?,
        Format::Json => to_json(&TableDocument {
            schema_version: crate::verify::SCHEMA_VERSION,
            command,
            system: meta(system, ext),
            columns: &table.columns,
            rows: table.json_rows(),
        })?,
    };
    emit(&bytes, output.output.as_deref())
}

/// Spectrum rows `{n_r, E, E_script, admissible}`, lowest first.
pub fn spectrum_table(system: &SystemSpec, ext: Option<&ExtensionSpec>, count: usize) -> Table {
    let entries: Vec<SpectrumEntry> = match ext {
        Some(e) => extended_spectrum(e, count),
        None => spectrum(system, count),
    };
    let mut t = Table::new(&["n_r", "E", "E_script", "admissible"]);
    t.rows = entries
        .iter()
        .map(|s| vec![Cell::Int(s.n_r), Cell::Float(s.energy), Cell::Float(s.energy_script), Cell::Bool(s.admissible)])
        .collect();
    t
}

fn cmd_spectrum(system: &SystemSpec, ext: Option<&ExtensionSpec>, count: usize, output: &OutputArgs) -> Result<i32, AppError> {
    write_table("spectrum", &spectrum_table(system, ext, count), system, ext, output)?;
    Ok(EXIT_OK)
}

fn inadmissible_or_config(e: Error) -> AppError {
    match e {
        Error::Inadmissible { .. } | Error::ExtensionInadmissible(_) => AppError::Inadmissible(e.to_string()),
        other => AppError::Config(other.to_string()),
    }
}

/// Sample columns: `r, V, psi, W`, plus `V_rat, V_ext, psi_ext` and (types I
/// and II) `W_ext` for an extension. `psi` is the state `n_r` of the
/// parent; `psi_ext` the state `n_r` of the extension.
pub fn sample_table(system: &SystemSpec, ext: Option<&ExtensionSpec>, grid: SampleGrid) -> Result<Table, AppError> {
    let mut columns = vec!["r", "V", "psi", "W"];
    let w_ext = match ext {
        Some(e) if e.ext_type() != ExtensionType::III => Some(extended_superpotential(e).map_err(inadmissible_or_config)?),
        _ => None,
    };
    if ext.is_some() {
        columns.extend(["V_rat", "V_ext", "psi_ext"]);
        if w_ext.is_some() {
            columns.push("W_ext");
        }
    }
    let w = superpotential(system);
    let parent_n = grid.n_r.max(0);
    let mut t = Table::new(&columns);
    for k in 0..grid.points {
        let r = if grid.points == 1 {
            grid.r_min
        } else {
            grid.r_min + (grid.r_max - grid.r_min) * k as f64 / (grid.points - 1) as f64
        };
        let mut row = vec![
            Cell::Float(r),
            Cell::Float(potential_v(system, r).map_err(inadmissible_or_config)?),
            Cell::Float(wavefunction_psi(system, parent_n, r).map_err(inadmissible_or_config)?),
            Cell::Float(w.value(r).map_err(inadmissible_or_config)?),
        ];
        if let Some(e) = ext {
            row.push(Cell::Float(v_rat(e, r).map_err(inadmissible_or_config)?));
            row.push(Cell::Float(extended_potential(e, r).map_err(inadmissible_or_config)?));
            row.push(Cell::Float(extended_wavefunction(e, grid.n_r, r).map_err(inadmissible_or_config)?));
            if let Some(we) = &w_ext {
                row.push(Cell::Float(we.value(r).map_err(inadmissible_or_config)?));
            }
        }
        if row.iter().any(|c| matches!(c, Cell::Float(x) if !x.is_finite())) {
            return Err(AppError::Config(format!("non-finite sample at r = {r}")));
        }
        t.rows.push(row);
    }
    Ok(t)
}

fn cmd_sample(system: &SystemSpec, ext: Option<&ExtensionSpec>, grid: SampleGrid, output: &OutputArgs) -> Result<i32, AppError> {
    let table = sample_table(system, ext, grid)?;
    write_table("sample", &table, system, ext, output)?;
    Ok(EXIT_OK)
}

/// Runs the verification suite for a target.
pub fn build_report(target: &VerifyTarget, groups: Vec<Group>, reproducible: bool) -> Report {
    let stamp = if reproducible {
        None
    } else {
        SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
    };
    let threads = thread_count();
    match target {
        VerifyTarget::DefaultMatrix => run_jobs(groups.clone(), &default_jobs(&groups), threads, stamp),
        VerifyTarget::System(s) => run_jobs(groups.clone(), &user_jobs(&groups, s, None), threads, stamp),
        VerifyTarget::Extension(s, Ok(e)) => run_jobs(groups.clone(), &user_jobs(&groups, s, Some(e)), threads, stamp),
        VerifyTarget::Extension(s, Err(reason)) => {
            let mut report = run_jobs(groups.clone(), &user_jobs(&groups, s, None), threads, stamp);
            report.push(CheckRecord {
                group: Group::Rational,
                case: format!("{} (rejected extension)", system_case(s)),
                check: "admissibility".into(),
                measured: None,
                tolerance: None,
                pass: false,
                note: Some(reason.clone()),
            });
            report
        }
    }
}

fn write_report(report: &Report, output: &OutputArgs) -> Result<(), AppError> {
    let bytes = match output.format {
        Format::Json => to_json(report)?,
        Format::Csv => {
            let mut t = Table::new(&["group", "case", "check", "measured", "tolerance", "pass", "note"]);
            for c in &report.checks {
                t.rows.push(vec![
                    Cell::Text(c.group.to_string()),
                    Cell::Text(c.case.clone()),
                    Cell::Text(c.check.clone()),
                    c.measured.map_or(Cell::Text(String::new()), Cell::Float),
                    c.tolerance.map_or(Cell::Text(String::new()), Cell::Float),
                    Cell::Bool(c.pass),
                    Cell::Text(c.note.clone().unwrap_or_default()),
                ]);
            }
            t.to_csv()?
        }
    };
    emit(&bytes, output.output.as_deref())
}
