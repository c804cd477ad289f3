//! Per-command table builders and parameter resolution.
//!
//! Precedence for every parameter: command-line flag, then config-file
//! key, then built-in default. The box-based commands require exactly one
//! box style (`--u`, `--asym`, or `--box`); there is no default margin.

use covertq_core::{
    compare_sym_asym, design_map, linspace, locate_cliff, logspace_u64, naive_feasibility,
    naive_plan, robust_plan, security_tax, sweep_payload_vs_n, sweep_payload_vs_u, ChannelParams,
    PolicyParams, UncertaintyBox,
};
use covertq_fock::{convergence_sweep, FockError};

use crate::cli::{
    AsymCompareArgs, BoxArgs, Chi2Args, Cli, CliffArgs, Command, Format, MapArgs, NominalArgs,
    PlanArgs, PolicyArgs, SweepNArgs, SweepUArgs,
};
use crate::config::FileConfig;
use crate::presets::PRESETS;
use crate::table::{fmt_sig9, Cell, Table};
use crate::CliError;

const DEFAULT_ETA0: f64 = 0.9;
const DEFAULT_NB0: f64 = 0.12;
const DEFAULT_DELTA: f64 = 0.05;
const DEFAULT_N: u64 = 100_000_000;

const DEFAULT_MAP_GRID: (usize, usize) = (61, 61);
const DEFAULT_MAP_ETA_RANGE: (f64, f64) = (0.75, 0.99);
const DEFAULT_MAP_NB_RANGE: (f64, f64) = (0.01, 0.30);
const MAP_CELL_CAP: usize = 1_000_000;
const MAP_CELL_WARN: usize = 10_000;

const DEFAULT_N_RANGE: (u64, u64) = (10_000, 10_000_000_000);
const DEFAULT_N_POINTS: usize = 25;
const DEFAULT_U_LEVELS: [f64; 3] = [0.02, 0.05, 0.08];
const DEFAULT_U_RANGE: (f64, f64) = (0.0, 0.12);
const DEFAULT_U_POINTS: usize = 121;
const DEFAULT_CUTOFFS: &str = "3..10";

pub fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let table = match &cli.command {
        Command::Bound(args) => cmd_bound(args, &cfg)?,
        Command::NaiveCompare(args) => cmd_naive_compare(args, &cfg)?,
        Command::Cliff(args) => cmd_cliff(args, &cfg)?,
        Command::Tax(args) => cmd_tax(args, &cfg)?,
        Command::Map(args) => cmd_map(args, &cfg)?,
        Command::SweepN(args) => cmd_sweep_n(args, &cfg)?,
        Command::SweepU(args) => cmd_sweep_u(args, &cfg)?,
        Command::AsymCompare(args) => cmd_asym_compare(args, &cfg)?,
        Command::Chi2Converge(args) => cmd_chi2_converge(args, &cfg)?,
        Command::WorkedExamples => cmd_worked_examples()?,
    };
    let format = resolve_format(cli.format, &cfg)?;
    emit(&table, cli.out.as_deref(), format)
}

// ---------------------------------------------------------------------
// Parameter resolution
// ---------------------------------------------------------------------

fn usage_from_core(err: covertq_core::Error) -> CliError {
    CliError::Usage(err.to_string())
}

/// User-facing input problems exit 2; anything the user could not have
/// caused from the command line is an internal failure (exit 1).
fn cli_from_fock(err: FockError) -> CliError {
    match err {
        FockError::InvalidTransmittance(_)
        | FockError::InvalidThermalOccupation(_)
        | FockError::CutoffTooSmall(_)
        | FockError::InvalidCutoffList => CliError::Usage(err.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn parse_f64(text: &str, what: &str) -> Result<f64, CliError> {
    text.trim()
        .parse::<f64>()
        .map_err(|_| CliError::Usage(format!("{what}: expected a number, got `{text}`")))
}

fn parse_usize(text: &str, what: &str) -> Result<usize, CliError> {
    text.trim()
        .parse::<usize>()
        .map_err(|_| CliError::Usage(format!("{what}: expected an integer, got `{text}`")))
}

/// Channel uses: a positive integer, written plainly or in scientific
/// notation ("1e8").
fn parse_channel_uses(text: &str) -> Result<u64, CliError> {
    let value = parse_f64(text, "n")?;
    let ok = (1.0..=9.0e18).contains(&value) && value.trunc() == value;
    if !ok {
        return Err(CliError::Usage(format!(
            "n: expected a positive integer (scientific notation allowed), got `{text}`"
        )));
    }
    Ok(value as u64)
}

fn parse_pair(text: &str, what: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "{what}: expected lo:hi, got `{text}`"
        )));
    }
    Ok((parse_f64(parts[0], what)?, parse_f64(parts[1], what)?))
}

fn parse_four(text: &str, what: &str) -> Result<(f64, f64, f64, f64), CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!(
            "{what}: expected four comma-separated numbers, got `{text}`"
        )));
    }
    Ok((
        parse_f64(parts[0], what)?,
        parse_f64(parts[1], what)?,
        parse_f64(parts[2], what)?,
        parse_f64(parts[3], what)?,
    ))
}

fn parse_grid(text: &str) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = text.split('x').collect();
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "grid: expected NxM (e.g. 61x61), got `{text}`"
        )));
    }
    Ok((parse_usize(parts[0], "grid")?, parse_usize(parts[1], "grid")?))
}

fn parse_f64_list(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    let values: Result<Vec<f64>, CliError> = text
        .split(',')
        .map(|part| parse_f64(part, what))
        .collect();
    let values = values?;
    if values.is_empty() {
        return Err(CliError::Usage(format!("{what}: expected at least one value")));
    }
    Ok(values)
}

/// Cutoff list: "3..10" (inclusive range) or "3,5,7" (explicit list).
fn parse_cutoffs(text: &str) -> Result<Vec<usize>, CliError> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = parse_usize(lo, "cutoffs")?;
        let hi = parse_usize(hi, "cutoffs")?;
        if lo > hi {
            return Err(CliError::Usage(format!(
                "cutoffs: range must be ascending, got `{text}`"
            )));
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',')
        .map(|part| parse_usize(part, "cutoffs"))
        .collect()
}

/// Flag value, else config value parsed with `parse`, else default.
fn resolve_with<T>(
    flag: Option<T>,
    cfg: &FileConfig,
    key: &str,
    default: T,
    parse: impl Fn(&str) -> Result<T, CliError>,
) -> Result<T, CliError> {
    if let Some(value) = flag {
        return Ok(value);
    }
    match cfg.get(key) {
        Some(text) => parse(text),
        None => Ok(default),
    }
}

fn resolve_f64(
    flag: Option<f64>,
    cfg: &FileConfig,
    key: &str,
    default: f64,
) -> Result<f64, CliError> {
    resolve_with(flag, cfg, key, default, |s| parse_f64(s, key))
}

fn resolve_nominal(args: &NominalArgs, cfg: &FileConfig) -> Result<ChannelParams, CliError> {
    let eta0 = resolve_f64(args.eta0, cfg, "eta0", DEFAULT_ETA0)?;
    let nb0 = resolve_f64(args.nb0, cfg, "nb0", DEFAULT_NB0)?;
    ChannelParams::new(eta0, nb0).map_err(usage_from_core)
}

fn resolve_policy(args: &PolicyArgs, cfg: &FileConfig) -> Result<PolicyParams, CliError> {
    let n = match args.n.as_deref() {
        Some(text) => parse_channel_uses(text)?,
        None => match cfg.get("n") {
            Some(text) => parse_channel_uses(text)?,
            None => DEFAULT_N,
        },
    };
    let delta = resolve_f64(args.delta, cfg, "delta", DEFAULT_DELTA)?;
    PolicyParams::new(n, delta).map_err(usage_from_core)
}

/// The three mutually exclusive ways to state an uncertainty box.
#[derive(Debug, Clone, Copy)]
enum BoxStyle {
    Symmetric(f64),
    Asymmetric(f64, f64, f64, f64),
    Explicit(f64, f64, f64, f64),
}

fn resolve_box_style(args: &BoxArgs, cfg: &FileConfig) -> Result<BoxStyle, CliError> {
    let flags_given =
        args.u.is_some() as u32 + args.asym.is_some() as u32 + args.box_spec.is_some() as u32;
    if flags_given > 1 {
        return Err(CliError::Usage(
            "specify exactly one of --u, --asym, --box".to_string(),
        ));
    }
    if let Some(u) = args.u {
        return Ok(BoxStyle::Symmetric(u));
    }
    if let Some(text) = &args.asym {
        let (a, b, c, d) = parse_four(text, "asym")?;
        return Ok(BoxStyle::Asymmetric(a, b, c, d));
    }
    if let Some(text) = &args.box_spec {
        let (emin, emax, nmin, nmax) = parse_four(text, "box")?;
        return Ok(BoxStyle::Explicit(emin, emax, nmin, nmax));
    }
    let keys_set = [cfg.get("u"), cfg.get("asym"), cfg.get("box")]
        .iter()
        .flatten()
        .count();
    if keys_set > 1 {
        return Err(CliError::Usage(
            "config: set exactly one of u, asym, box".to_string(),
        ));
    }
    if let Some(text) = cfg.get("u") {
        return Ok(BoxStyle::Symmetric(parse_f64(text, "u")?));
    }
    if let Some(text) = cfg.get("asym") {
        let (a, b, c, d) = parse_four(text, "asym")?;
        return Ok(BoxStyle::Asymmetric(a, b, c, d));
    }
    if let Some(text) = cfg.get("box") {
        let (emin, emax, nmin, nmax) = parse_four(text, "box")?;
        return Ok(BoxStyle::Explicit(emin, emax, nmin, nmax));
    }
    Err(CliError::Usage(
        "an uncertainty box is required: pass one of --u, --asym, --box \
         (or set u, asym, or box in the config file)"
        .to_string(),
    ))
}

/// Builds the box; returns the nominal point too when the style needs one.
fn build_box(
    style: BoxStyle,
    nominal_args: &NominalArgs,
    cfg: &FileConfig,
) -> Result<(UncertaintyBox, Option<ChannelParams>), CliError> {
    match style {
        BoxStyle::Symmetric(u) => {
            let nominal = resolve_nominal(nominal_args, cfg)?;
            let ubox = UncertaintyBox::symmetric(nominal, u).map_err(usage_from_core)?;
            Ok((ubox, Some(nominal)))
        }
        BoxStyle::Asymmetric(a, b, c, d) => {
            let nominal = resolve_nominal(nominal_args, cfg)?;
            let ubox = UncertaintyBox::asymmetric(nominal, a, b, c, d).map_err(usage_from_core)?;
            Ok((ubox, Some(nominal)))
        }
        BoxStyle::Explicit(emin, emax, nmin, nmax) => {
            let ubox =
                UncertaintyBox::explicit(emin, emax, nmin, nmax).map_err(usage_from_core)?;
            Ok((ubox, None))
        }
    }
}

/// Echoes the nominal point and box style into the table parameters.
fn record_box_params(
    table: &mut Table,
    style: BoxStyle,
    nominal: Option<ChannelParams>,
) {
    if let Some(nominal) = nominal {
        table.param("eta0", Cell::Float(nominal.eta()));
        table.param("nb0", Cell::Float(nominal.n_bar_b()));
    }
    match style {
        BoxStyle::Symmetric(u) => table.param("u", Cell::Float(u)),
        BoxStyle::Asymmetric(a, b, c, d) => table.param(
            "asym",
            Cell::Str(format!(
                "{},{},{},{}",
                fmt_sig9(a),
                fmt_sig9(b),
                fmt_sig9(c),
                fmt_sig9(d)
            )),
        ),
        BoxStyle::Explicit(..) => {}
    }
}

fn resolve_format(flag: Option<Format>, cfg: &FileConfig) -> Result<Format, CliError> {
    if let Some(format) = flag {
        return Ok(format);
    }
    match cfg.get("format") {
        Some("csv") => Ok(Format::Csv),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(CliError::Usage(format!(
            "format: expected csv or json, got `{other}`"
        ))),
        None => Ok(Format::Csv),
    }
}

fn emit(table: &Table, out: Option<&str>, format: Format) -> Result<(), CliError> {
    let payload = match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    match out {
        None | Some("-") => {
            use std::io::Write;
            std::io::stdout()
                .write_all(payload.as_bytes())
                .map_err(|err| CliError::Internal(format!("writing output: {err}")))
        }
        Some(path) => std::fs::write(path, payload)
            .map_err(|err| CliError::Internal(format!("writing {path}: {err}"))),
    }
}

fn opt_float(value: Option<f64>) -> Cell {
    value.map(Cell::Float).unwrap_or(Cell::Null)
}

// ---------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------

fn cmd_bound(args: &PlanArgs, cfg: &FileConfig) -> Result<Table, CliError> {
    let style = resolve_box_style(&args.box_spec, cfg)?;
    let (ubox, nominal) = build_box(style, &args.nominal, cfg)?;
    let policy = resolve_policy(&args.policy, cfg)?;
    let plan = robust_plan(&ubox, policy).map_err(usage_from_core)?;

    let mut table = Table::new(&[
        "eta_min", "eta_max", "nb_min", "nb_max", "n", "delta", "c_cov_rob", "p_worst", "q_rob",
        "r_rob", "m_rob",
    ]);
    record_box_params(&mut table, style, nominal);
    table.push_row(vec![
        Cell::Float(ubox.eta_min()),
        Cell::Float(ubox.eta_max()),
        Cell::Float(ubox.nb_min()),
        Cell::Float(ubox.nb_max()),
        Cell::Int(policy.n()),
        Cell::Float(policy.delta()),
        Cell::Float(plan.c_cov_rob()),
        Cell::Float(plan.p_worst()),
        Cell::Float(plan.q_rob()),
        Cell::Float(plan.r_rob()),
        Cell::Float(plan.m_rob()),
    ]);
    Ok(table)
}

fn cmd_naive_compare(args: &PlanArgs, cfg: &FileConfig) -> Result<Table, CliError> {
    let style = resolve_box_style(&args.box_spec, cfg)?;
    let nominal = resolve_nominal(&args.nominal, cfg)?;
    let (ubox, _) = build_box(style, &args.nominal, cfg)?;
    let policy = resolve_policy(&args.policy, cfg)?;

    let naive = naive_plan(nominal, policy).map_err(usage_from_core)?;
    let robust = robust_plan(&ubox, policy).map_err(usage_from_core)?;
    let verdict = naive_feasibility(&ubox, nominal, policy).map_err(usage_from_core)?;
    let cov_witness = verdict.covertness_witness();
    let rel_witness = verdict.reliability_witness();

    let mut table = Table::new(&[
        "q_nom",
        "r_nom",
        "scheduled_payload",
        "robust_payload",
        "naive_guaranteed",
        "cov_witness",
        "cov_witness_eta",
        "cov_witness_nb",
        "rel_witness",
        "rel_witness_eta",
        "rel_witness_nb",
    ]);
    table.param("eta0", Cell::Float(nominal.eta()));
    table.param("nb0", Cell::Float(nominal.n_bar_b()));
    match style {
        BoxStyle::Symmetric(u) => table.param("u", Cell::Float(u)),
        BoxStyle::Asymmetric(a, b, c, d) => table.param(
            "asym",
            Cell::Str(format!(
                "{},{},{},{}",
                fmt_sig9(a),
                fmt_sig9(b),
                fmt_sig9(c),
                fmt_sig9(d)
            )),
        ),
        BoxStyle::Explicit(..) => {}
    }
    table.param("eta_min", Cell::Float(ubox.eta_min()));
    table.param("eta_max", Cell::Float(ubox.eta_max()));
    table.param("nb_min", Cell::Float(ubox.nb_min()));
    table.param("nb_max", Cell::Float(ubox.nb_max()));
    table.param("n", Cell::Int(policy.n()));
    table.param("delta", Cell::Float(policy.delta()));
    table.push_row(vec![
        Cell::Float(naive.q_nom()),
        Cell::Float(naive.r_nom()),
        Cell::Float(naive.scheduled_payload()),
        Cell::Float(robust.m_rob()),
        Cell::Float(verdict.guaranteed_payload()),
        Cell::Int(cov_witness.is_some() as u64),
        opt_float(cov_witness.map(|w| w.eta())),
        opt_float(cov_witness.map(|w| w.n_bar_b())),
        Cell::Int(rel_witness.is_some() as u64),
        opt_float(rel_witness.map(|w| w.eta())),
        opt_float(rel_witness.map(|w| w.n_bar_b())),
    ]);
    Ok(table)
}

fn cmd_cliff(args: &CliffArgs, cfg: &FileConfig) -> Result<Table, CliError> {
    let nominal = resolve_nominal(&args.nominal, cfg)?;
    let cliff = locate_cliff(nominal);

    let mut table = Table::new(&["eta0", "nb0", "p_crit", "u_crit"]);
    table.push_row(vec![
        Cell::Float(nominal.eta()),
        Cell::Float(nominal.n_bar_b()),
        Cell::Float(cliff.p_crit),
        opt_float(cliff.u_crit),
    ]);
    Ok(table)
}

fn cmd_tax(args: &PlanArgs, cfg: &FileConfig) -> Result<Table, CliError> {
    let style = resolve_box_style(&args.box_spec, cfg)?;
    let (ubox, nominal) = build_box(style, &args.nominal, cfg)?;
    let policy = resolve_policy(&args.policy, cfg)?;
    let report = security_tax(&ubox, policy).map_err(usage_from_core)?;

    let mut table = Table::new(&[
        "eta_min",
        "eta_max",
        "nb_min",
        "nb_max",
        "n",
        "delta",
        "m_rob",
        "m_aligned",
        "tax_fraction",
        "post_cliff",
    ]);
    record_box_params(&mut table, style, nominal);
    table.push_row(vec![
        Cell::Float(ubox.eta_min()),
        Cell::Float(ubox.eta_max()),
        Cell::Float(ubox.nb_min()),
        Cell::Float(ubox.nb_max()),
        Cell::Int(policy.n()),
        Cell::Float(policy.delta()),
        Cell::Float(report.m_rob()),
        Cell::Float(report.m_aligned()),
        Cell::Float(report.tax_fraction()),
        Cell::Int(report.post_cliff() as u64),
    ]);
    Ok(table)
}

fn cmd_map(args: &MapArgs, cfg: &FileConfig) -> Result<Table, CliError> {
    let u = match args.u {
        Some(u) => u,
        None => match cfg.get("u") {
            Some(text) => parse_f64(text, "u")?,
            None => {
                return Err(CliError::Usage(
                    "map requires --u (or u in the config file)".to_string(),
                ))
            }
        },
    };
    let (n_eta, n_nb) = resolve_with(
        args.grid.as_deref().map(parse_grid).transpose()?,
        cfg,
        "grid",
        DEFAULT_MAP_GRID,
        parse_grid,
    )?;
    let eta_range = resolve_with(
        args.eta_range
            .as_deref()
            .map(|s| parse_pair(s, "eta-range"))
            .transpose()?,
        cfg,
        "eta-range",
        DEFAULT_MAP_ETA_RANGE,
        |s| parse_pair(s, "eta-range"),
    )?;
    let nb_range = resolve_with(
        args.nb_range
            .as_deref()
            .map(|s| parse_pair(s, "nb-range"))
            .transpose()?,
        cfg,
        "nb-range",
        DEFAULT_MAP_NB_RANGE,
        |s| parse_pair(s, "nb-range"),
    )?;
    let policy = resolve_policy(&args.policy, cfg)?;

    let cells = n_eta
        .checked_mul(n_nb)
        .ok_or_else(|| CliError::Usage("grid: cell count overflows".to_string()))?;
    if cells > MAP_CELL_CAP {
        return Err(CliError::Usage(format!(
            "grid: {n_eta}x{n_nb} = {cells} cells exceeds the {MAP_CELL_CAP}-cell cap"
        )));
    }
    if cells > MAP_CELL_WARN {
        eprintln!("warning: map grid has {cells} cells; expect a longer run");
    }

    let map = design_map(eta_range, nb_range, n_eta, n_nb, u, policy).map_err(usage_from_core)?;

    let mut table = Table::new(&["eta0", "nb0", "u_crit", "m_rob"]);
    table.param("u", Cell::Float(u));
    table.param("n", Cell::Int(policy.n()));
    table.param("delta", Cell::Float(policy.delta()));
    table.param("eta_lo", Cell::Float(eta_range.0));
    table.param("eta_hi", Cell::Float(eta_range.1));
    table.param("nb_lo", Cell::Float(nb_range.0));
    table.param("nb_hi", Cell::Float(nb_range.1));
    table.param("n_eta", Cell::Int(n_eta as u64));
    table.param("n_nb", Cell::Int(n_nb as u64));
    for cell in &map {
        table.push_row(vec![
            Cell::Float(cell.eta0),
            Cell::Float(cell.nb0),
            opt_float(cell.u_crit),
            opt_float(cell.m_rob),
        ]);
    }
    Ok(table)
}

fn cmd_sweep_n(args: &SweepNArgs, cfg: &FileConfig) -> Result<Table, CliError> {
    let nominal = resolve_nominal(&args.nominal, cfg)?;
    let parse_n_range = |text: &str| -> Result<(u64, u64), CliError> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 2 {
            return Err(CliError::Usage(format!(
                "n-range: expected lo:hi, got `{text}`"
            )));
        }
        Ok((parse_channel_uses(parts[0])?, parse_channel_uses(parts[1])?))
    };
    let (n_lo, n_hi) = resolve_with(
        args.n_range.as_deref().map(parse_n_range).transpose()?,
        cfg,
        "n-range",
        DEFAULT_N_RANGE,
        parse_n_range,
    )?;
    let points = resolve_with(args.points, cfg, "points", DEFAULT_N_POINTS, |s| {
        parse_usize(s, "points")
    })?;
    let u_levels = resolve_with(
        args.u_levels
            .as_deref()
            .map(|s| parse_f64_list(s, "u-levels"))
            .transpose()?,
        cfg,
        "u-levels",
        DEFAULT_U_LEVELS.to_vec(),
        |s| parse_f64_list(s, "u-levels"),
    )?;
    let delta = resolve_f64(args.delta, cfg, "delta", DEFAULT_DELTA)?;

    let n_values = logspace_u64(n_lo, n_hi, points).map_err(usage_from_core)?;
    let rows = sweep_payload_vs_n(nominal, &u_levels, &n_values, delta).map_err(usage_from_core)?;

    let mut schema = vec!["n".to_string(), "perfect".to_string()];
    for &u in &u_levels {
        schema.push(format!("m_rob_u{}", fmt_sig9(u)));
    }
    let mut table = Table::new(&schema);
    table.param("eta0", Cell::Float(nominal.eta()));
    table.param("nb0", Cell::Float(nominal.n_bar_b()));
    table.param("delta", Cell::Float(delta));
    table.param("n_lo", Cell::Int(n_lo));
    table.param("n_hi", Cell::Int(n_hi));
    table.param("points", Cell::Int(points as u64));
    for row in &rows {
        let mut cells = vec![Cell::Int(row.n), Cell::Float(row.perfect)];
        cells.extend(row.robust.iter().map(|&m| Cell::Float(m)));
        table.push_row(cells);
    }
    Ok(table)
}

fn cmd_sweep_u(args: &SweepUArgs, cfg: &FileConfig) -> Result<Table, CliError> {
    let nominal = resolve_nominal(&args.nominal, cfg)?;
    let (u_lo, u_hi) = resolve_with(
        args.u_range
            .as_deref()
            .map(|s| parse_pair(s, "u-range"))
            .transpose()?,
        cfg,
        "u-range",
        DEFAULT_U_RANGE,
        |s| parse_pair(s, "u-range"),
    )?;
    let points = resolve_with(args.points, cfg, "points", DEFAULT_U_POINTS, |s| {
        parse_usize(s, "points")
    })?;
    let policy = resolve_policy(&args.policy, cfg)?;

    let u_values: Vec<f64> = (0..points).map(|i| linspace(u_lo, u_hi, points, i)).collect();
    let rows = sweep_payload_vs_u(nominal, &u_values, policy).map_err(usage_from_core)?;

    let mut table = Table::new(&["u", "m_rob"]);
    table.param("eta0", Cell::Float(nominal.eta()));
    table.param("nb0", Cell::Float(nominal.n_bar_b()));
    table.param("n", Cell::Int(policy.n()));
    table.param("delta", Cell::Float(policy.delta()));
    table.param("u_lo", Cell::Float(u_lo));
    table.param("u_hi", Cell::Float(u_hi));
    table.param("points", Cell::Int(points as u64));
    for row in &rows {
        table.push_row(vec![Cell::Float(row.u), Cell::Float(row.m_rob)]);
    }
    Ok(table)
}

fn cmd_asym_compare(args: &AsymCompareArgs, cfg: &FileConfig) -> Result<Table, CliError> {
    let nominal = resolve_nominal(&args.nominal, cfg)?;
    let margins = match &args.asym {
        Some(text) => parse_four(text, "asym")?,
        None => match cfg.get("asym") {
            Some(text) => parse_four(text, "asym")?,
            None => {
                return Err(CliError::Usage(
                    "asym-compare requires --asym A,B,C,D (or asym in the config file)"
                        .to_string(),
                ))
            }
        },
    };
    let (u_lo, u_hi) = resolve_with(
        args.u_range
            .as_deref()
            .map(|s| parse_pair(s, "u-range"))
            .transpose()?,
        cfg,
        "u-range",
        DEFAULT_U_RANGE,
        |s| parse_pair(s, "u-range"),
    )?;
    let points = resolve_with(args.points, cfg, "points", DEFAULT_U_POINTS, |s| {
        parse_usize(s, "points")
    })?;
    let policy = resolve_policy(&args.policy, cfg)?;

    let u_values: Vec<f64> = (0..points).map(|i| linspace(u_lo, u_hi, points, i)).collect();
    let comparison =
        compare_sym_asym(nominal, margins, &u_values, policy).map_err(usage_from_core)?;
    let crossing = opt_float(comparison.crossing_u);

    let mut table = Table::new(&["u", "m_sym", "m_asym", "crossing_u"]);
    table.param("eta0", Cell::Float(nominal.eta()));
    table.param("nb0", Cell::Float(nominal.n_bar_b()));
    let (a, b, c, d) = margins;
    table.param(
        "asym",
        Cell::Str(format!(
            "{},{},{},{}",
            fmt_sig9(a),
            fmt_sig9(b),
            fmt_sig9(c),
            fmt_sig9(d)
        )),
    );
    table.param("n", Cell::Int(policy.n()));
    table.param("delta", Cell::Float(policy.delta()));
    table.param("u_lo", Cell::Float(u_lo));
    table.param("u_hi", Cell::Float(u_hi));
    table.param("points", Cell::Int(points as u64));
    for row in &comparison.rows {
        table.push_row(vec![
            Cell::Float(row.u),
            Cell::Float(row.m_sym),
            Cell::Float(row.m_asym),
            crossing.clone(),
        ]);
    }
    Ok(table)
}

fn cmd_chi2_converge(args: &Chi2Args, cfg: &FileConfig) -> Result<Table, CliError> {
    let eta0 = resolve_f64(args.nominal.eta0, cfg, "eta0", DEFAULT_ETA0)?;
    let nb0 = resolve_f64(args.nominal.nb0, cfg, "nb0", DEFAULT_NB0)?;
    let cutoffs = resolve_with(
        args.cutoffs.as_deref().map(parse_cutoffs).transpose()?,
        cfg,
        "cutoffs",
        parse_cutoffs(DEFAULT_CUTOFFS)?,
        parse_cutoffs,
    )?;
    let rows = convergence_sweep(eta0, nb0, &cutoffs).map_err(cli_from_fock)?;

    let mut table = Table::new(&["cutoff", "chi2_sim", "abs_err", "rel_err_pct"]);
    table.param("eta0", Cell::Float(eta0));
    table.param("nb0", Cell::Float(nb0));
    let cutoff_list: Vec<String> = cutoffs.iter().map(|c| c.to_string()).collect();
    table.param("cutoffs", Cell::Str(cutoff_list.join(",")));
    for row in &rows {
        table.push_row(vec![
            Cell::Int(row.cutoff as u64),
            Cell::Float(row.chi2_sim),
            Cell::Float(row.abs_err),
            Cell::Float(row.rel_err_pct),
        ]);
    }
    Ok(table)
}

fn cmd_worked_examples() -> Result<Table, CliError> {
    let mut table = Table::new(&[
        "scenario", "eta_min", "eta_max", "nb_min", "nb_max", "n", "delta", "c_cov_rob",
        "p_worst", "r_worst", "m_rob",
    ]);
    for preset in &PRESETS {
        let ubox = preset
            .uncertainty_box()
            .map_err(|err| CliError::Internal(format!("preset {}: {err}", preset.name)))?;
        let policy = preset
            .policy()
            .map_err(|err| CliError::Internal(format!("preset {}: {err}", preset.name)))?;
        let plan = robust_plan(&ubox, policy)
            .map_err(|err| CliError::Internal(format!("preset {}: {err}", preset.name)))?;
        table.push_row(vec![
            Cell::Str(preset.name.to_string()),
            Cell::Float(preset.eta_min),
            Cell::Float(preset.eta_max),
            Cell::Float(preset.nb_min),
            Cell::Float(preset.nb_max),
            Cell::Int(preset.n),
            Cell::Float(preset.delta),
            Cell::Float(plan.c_cov_rob()),
            Cell::Float(plan.p_worst()),
            Cell::Float(plan.r_rob()),
            Cell::Float(plan.m_rob()),
        ]);
    }
    Ok(table)
}
