//! Command-line front end for `ellipcp-core`.
//!
//! [`run`] turns parsed arguments into the text written to stdout, plus an
//! optional failure that decides the exit status. Results only ever go to
//! stdout; `main` writes error messages to stderr.
//!
//! Exit codes: 0 success, 2 parse error, 3 precondition violated,
//! 4 oracle mismatch, 5 oracle guard exceeded.

pub mod args;
pub mod report;

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use ellipcp_core::algmodel::{
    cell_model_codim1, cell_model_finite, decompose, enumerate_subgroups, euler_class_in, CellModelTable, CellValue,
};
use ellipcp_core::divisor::{
    coh_dims, divisor_of_rep, intersection_matrix, is_ample, pairing, Divisor, Sign, STRUCTURE_SHEAF,
};
use ellipcp_core::ellcoh::{d_invariant, ec_t2_sphere, ec_t_point, les_table, GradedDims};
use ellipcp_core::lattice::{exact_order_count, intersection_count_oracle, torsion_points, FiniteSubgroup};
use ellipcp_core::repr::{parse_circle_rep, parse_torus_rep, tensor_with_w, Character, TorusRep};
use thiserror::Error;

use report::*;

/// Largest `|det|` the intersection oracle will enumerate.
pub const MAX_ORACLE_DET: i64 = 12;
/// Largest torsion level or subgroup exponent the oracles will enumerate.
pub const MAX_ORACLE_N: i64 = 100;

/// Degrees shown for cell models, top to bottom.
const CELL_DEGREES: std::ops::RangeInclusive<i64> = -5..=2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("oracle guard exceeded: {0}")]
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::OracleMismatch(_) => 4,
            CliError::Guard(_) => 5,
        }
    }
}

impl From<ellipcp_core::Error> for CliError {
    fn from(e: ellipcp_core::Error) -> Self {
        use ellipcp_core::Error::*;
        match e {
            Syntax { .. } | ZeroMultiplicity { .. } | InvalidPoint { .. } | NotHermite(_) => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ellipcp",
    version,
    about = "Rational equivariant elliptic cohomology of CP(V) and representation spheres"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// EC_T^*(CP(V)) for a circle representation, e.g. "eps + 4z".
    Cp {
        rep: String,
        /// Show EC_T^*(CP(V)_+) instead of the reduced value.
        #[arg(long)]
        unreduced: bool,
        /// Recount every pairwise intersection number by enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// EC_{T^2}^*(S^W) for a torus representation without fixed points, e.g. "x^0y^1 + 4x^1y^1".
    Sphere {
        rep: String,
        /// Recount every pairwise intersection number by enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Brute-force checks against closed forms.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Values of the algebraic models of natural cells G/H_+.
    Cell {
        #[command(subcommand)]
        which: CellCommand,
    },
    /// Euler class of a torus representation at a finite subgroup.
    Euler {
        rep: String,
        /// Finite subgroup: `trivial`, `n,cyclic`, `n,full` or points `a/b,c/d;...`.
        #[arg(long, default_value = "trivial")]
        subgroup: String,
        /// Subtract this representation, giving a virtual Euler class.
        #[arg(long)]
        minus: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Count the points of C_v ∩ C_w and compare with det(v, w)^2.
    Intersect {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Count n-torsion points and points of exact order n.
    Torsion {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Enumerate the subgroups of a finite subgroup.
    Subgroups { subgroup: String },
}

#[derive(Debug, Subcommand)]
pub enum CellCommand {
    /// G/H_+ for H = ker z_v.
    Codim1 {
        #[arg(allow_hyphen_values = true)]
        v: String,
        /// Finite subgroup to evaluate the bottom level at; repeatable.
        #[arg(long = "family")]
        family: Vec<String>,
    },
    /// G/F_+ for a finite subgroup F.
    Finite { subgroup: String },
}

/// How oracle verdicts are rendered in text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    /// Reads `ELLIPCP_COLOR` (`never` or `auto`, default `auto`).
    pub fn from_env(stdout_is_terminal: bool) -> Result<Style, CliError> {
        match std::env::var("ELLIPCP_COLOR").as_deref() {
            Err(_) | Ok("auto") => Ok(Style { color: stdout_is_terminal }),
            Ok("never") => Ok(Style { color: false }),
            Ok(other) => Err(CliError::Parse(format!("ELLIPCP_COLOR must be `never` or `auto`, got {other:?}"))),
        }
    }

    fn verdict(&self, agree: bool) -> String {
        match (agree, self.color) {
            (true, false) => "OK".into(),
            (false, false) => "MISMATCH".into(),
            (true, true) => "\x1b[32mOK\x1b[0m".into(),
            (false, true) => "\x1b[31mMISMATCH\x1b[0m".into(),
        }
    }
}

/// What a command produced: stdout text, and the failure to report after
/// printing it, if any.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub failure: Option<CliError>,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, failure: None }
    }

    fn checked(stdout: String, mismatches: Vec<String>) -> Self {
        let failure = (!mismatches.is_empty()).then(|| CliError::OracleMismatch(mismatches.join("; ")));
        Output { stdout, failure }
    }
}

pub fn run(cli: &Cli, style: Style) -> Result<Output, CliError> {
    match &cli.command {
        Command::Cp { rep, unreduced, verify } => cmd_cp(rep, *unreduced, *verify, cli.json, style),
        Command::Sphere { rep, verify } => cmd_sphere(rep, *verify, cli.json, style),
        Command::Oracle { which } => match which {
            OracleCommand::Intersect { v, w } => cmd_intersect(v, w, cli.json, style),
            OracleCommand::Torsion { n } => cmd_torsion(n, cli.json, style),
            OracleCommand::Subgroups { subgroup } => cmd_subgroups(subgroup, cli.json, style),
        },
        Command::Cell { which } => match which {
            CellCommand::Codim1 { v, family } => cmd_cell_codim1(v, family, cli.json),
            CellCommand::Finite { subgroup } => cmd_cell_finite(subgroup, cli.json),
        },
        Command::Euler { rep, subgroup, minus } => cmd_euler(rep, subgroup, minus.as_deref(), cli.json),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn summarize(d: &Divisor) -> Result<DivisorSummary, CliError> {
    Ok(DivisorSummary {
        divisor: d.clone(),
        intersection_matrix: intersection_matrix(d),
        self_intersection: pairing(d, d),
        ample: is_ample(d)?,
        coh_minus_d: coh_dims(d, Sign::Minus)?,
        coh_structure_sheaf: STRUCTURE_SHEAF,
    })
}

/// Recounts `C_v · C_w` for each pair of distinct directions of `d`.
fn verify_divisor(d: &Divisor) -> Result<Vec<OracleCheck>, CliError> {
    let dirs: Vec<Character> = d.directions().collect();
    let mut checks = Vec::new();
    for (i, &v) in dirs.iter().enumerate() {
        for &w in &dirs[i + 1..] {
            checks.push(oracle_check(v, w)?);
        }
    }
    Ok(checks)
}

fn oracle_check(v: Character, w: Character) -> Result<OracleCheck, CliError> {
    let det = v.det(w);
    if det.abs() > MAX_ORACLE_DET {
        return Err(CliError::Guard(format!("|det({v}, {w})| = {} exceeds {MAX_ORACLE_DET}", det.abs())));
    }
    let count = intersection_count_oracle(v, w)?;
    let det_squared = (det * det) as u64;
    Ok(OracleCheck { v, w, det_squared, count, agree: count == det_squared })
}

fn mismatches(checks: &[OracleCheck]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.agree)
        .map(|c| format!("C_{}·C_{}: counted {}, det² {}", c.v, c.w, c.count, c.det_squared))
        .collect()
}

fn render_checks(out: &mut String, checks: &[OracleCheck], style: Style) {
    if checks.is_empty() {
        out.push_str("  oracle: no pairs of directions to check\n");
    }
    for c in checks {
        let _ = writeln!(
            out,
            "  oracle: C_{}·C_{} counted {} = det² {} {}",
            c.v,
            c.w,
            c.count,
            c.det_squared,
            style.verdict(c.agree)
        );
    }
}

fn pair(g: GradedDims) -> String {
    format!("({}, {})", g.even, g.odd)
}

fn cmd_cp(text: &str, unreduced: bool, verify: bool, json: bool, style: Style) -> Result<Output, CliError> {
    let v = parse_circle_rep(text)?;
    let les = les_table(&v)?;
    let twisted = tensor_with_w(&v);
    let d = divisor_of_rep(&twisted)?;
    let full = les.unreduced();
    let point = ec_t_point();
    let reduced = full.checked_sub(point).expect("unreduced value contains the S^0 summand");
    let oracle = if verify { Some(verify_divisor(&d)?) } else { None };
    let report = CpReport {
        schema: SCHEMA.into(),
        kind: "cp".into(),
        input: text.into(),
        representation: v.to_string(),
        twisted: twisted.to_string(),
        summary: summarize(&d)?,
        les,
        unreduced: full,
        point,
        reduced,
        d_invariant: d_invariant(&v),
        oracle,
    };
    let bad = report.oracle.as_deref().map(mismatches).unwrap_or_default();
    if json {
        return Ok(Output::checked(to_json(&report), bad));
    }
    let mut out = String::new();
    if unreduced {
        let _ = writeln!(out, "EC_T(CP({})_+) = {}  [even, odd]", report.representation, pair(full));
    } else {
        let _ = writeln!(out, "EC_T(CP({})) = {}  [even, odd, reduced]", report.representation, pair(reduced));
    }
    let [c0, c1, _] = les.cokernels();
    let [_, k1, k2] = les.kernels();
    let _ = writeln!(
        out,
        "  D = {} -> D² = {} -> d = {} -> even = coker0 + ker1 = {c0} + {k1}, odd = coker1 + ker2 = {c1} + {k2}; unreduced {} = reduced {} + point {}",
        report.summary.divisor,
        report.summary.self_intersection,
        report.d_invariant,
        pair(full),
        pair(reduced),
        pair(point),
    );
    if let Some(checks) = &report.oracle {
        render_checks(&mut out, checks, style);
    }
    Ok(Output::checked(out, bad))
}

fn cmd_sphere(text: &str, verify: bool, json: bool, style: Style) -> Result<Output, CliError> {
    let w = parse_torus_rep(text)?;
    let value = ec_t2_sphere(&w)?;
    let d = divisor_of_rep(&w)?;
    let oracle = if verify { Some(verify_divisor(&d)?) } else { None };
    let report = SphereReport {
        schema: SCHEMA.into(),
        kind: "sphere".into(),
        input: text.into(),
        representation: w.to_string(),
        summary: summarize(&d)?,
        value,
        oracle,
    };
    let bad = report.oracle.as_deref().map(mismatches).unwrap_or_default();
    if json {
        return Ok(Output::checked(to_json(&report), bad));
    }
    let mut out = String::new();
    let _ = writeln!(out, "EC_T2(S^({})) = {}  [even, odd]", report.representation, pair(value));
    let c = report.summary.coh_minus_d;
    let _ = writeln!(
        out,
        "  D = {} -> D² = {} -> h*(O(-D)) = ({}, {}, {}) -> even = h0 + h2, odd = h1",
        report.summary.divisor, report.summary.self_intersection, c.h0, c.h1, c.h2
    );
    if let Some(checks) = &report.oracle {
        render_checks(&mut out, checks, style);
    }
    Ok(Output::checked(out, bad))
}

fn cmd_intersect(v: &str, w: &str, json: bool, style: Style) -> Result<Output, CliError> {
    let (v, w) = (args::parse_character(v)?, args::parse_character(w)?);
    if v.is_trivial() || w.is_trivial() || v.det(w) == 0 {
        return Err(ellipcp_core::Error::Parallel(v.lambda, v.mu, w.lambda, w.mu).into());
    }
    let check = oracle_check(v, w)?;
    let bad = mismatches(std::slice::from_ref(&check));
    if json {
        let report = IntersectReport { schema: SCHEMA.into(), kind: "oracle-intersect".into(), check };
        return Ok(Output::checked(to_json(&report), bad));
    }
    let out = format!(
        "C_{}·C_{}: counted {} points, det² = {} {}\n",
        check.v,
        check.w,
        check.count,
        check.det_squared,
        style.verdict(check.agree)
    );
    Ok(Output::checked(out, bad))
}

/// `J_2(n) = n^2 Π_{p | n} (1 - p^-2)`.
fn jordan_totient_2(n: u64) -> u64 {
    let (mut num, mut rest, mut p) = (n * n, n, 2);
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            num = num / (p * p) * (p * p - 1);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        num = num / (rest * rest) * (rest * rest - 1);
    }
    num
}

fn cmd_torsion(n: &str, json: bool, style: Style) -> Result<Output, CliError> {
    let n = args::parse_int(n, "n")?;
    if n < 1 {
        return Err(ellipcp_core::Error::InvalidOrder(n).into());
    }
    if n > MAX_ORACLE_N {
        return Err(CliError::Guard(format!("n = {n} exceeds {MAX_ORACLE_N}")));
    }
    let points = torsion_points(n)?.len() as u64;
    let exact_order = exact_order_count(n)?;
    let report = TorsionReport {
        schema: SCHEMA.into(),
        kind: "oracle-torsion".into(),
        n,
        points,
        points_closed_form: (n * n) as u64,
        exact_order,
        exact_order_closed_form: jordan_totient_2(n as u64),
        agree: points == (n * n) as u64 && exact_order == jordan_totient_2(n as u64),
    };
    let bad = if report.agree { vec![] } else { vec![format!("torsion counts for n = {n}")] };
    if json {
        return Ok(Output::checked(to_json(&report), bad));
    }
    let out = format!(
        "|E[{n}]| = {} (n² = {}), exact order {n}: {} (J_2({n}) = {}) {}\n",
        report.points,
        report.points_closed_form,
        report.exact_order,
        report.exact_order_closed_form,
        style.verdict(report.agree)
    );
    Ok(Output::checked(out, bad))
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |k| n.is_multiple_of(*k))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn guard_subgroup(f: &FiniteSubgroup) -> Result<(), CliError> {
    let (_, s2) = f.invariant_factors();
    if s2 > MAX_ORACLE_N as u64 {
        return Err(CliError::Guard(format!("subgroup exponent {s2} exceeds {MAX_ORACLE_N}")));
    }
    Ok(())
}

fn cmd_subgroups(text: &str, json: bool, style: Style) -> Result<Output, CliError> {
    let f = args::parse_subgroup(text)?;
    guard_subgroup(&f)?;
    let subs = enumerate_subgroups(&f);
    let (s1, s2) = f.invariant_factors();
    let closed: u64 = divisors(s1).flat_map(|a| divisors(s2).map(move |b| gcd(a, b))).sum();
    let report = SubgroupsReport {
        schema: SCHEMA.into(),
        kind: "oracle-subgroups".into(),
        input: text.into(),
        subgroup: f.to_string(),
        basis: f.basis(),
        invariant_factors: [s1, s2],
        subgroups: subs.iter().map(|s| s.to_string()).collect(),
        count: subs.len() as u64,
        count_closed_form: closed,
        agree: subs.len() as u64 == closed,
    };
    let bad = if report.agree { vec![] } else { vec![format!("subgroup count of {f}")] };
    if json {
        return Ok(Output::checked(to_json(&report), bad));
    }
    let mut out = format!(
        "{} ≅ Z/{s1} x Z/{s2}: {} subgroups, closed form {} {}\n",
        report.subgroup,
        report.count,
        report.count_closed_form,
        style.verdict(report.agree)
    );
    for s in &report.subgroups {
        let _ = writeln!(out, "  {s}");
    }
    Ok(Output::checked(out, bad))
}

fn entry(at: String, value: &CellValue) -> CellEntry {
    CellEntry { at, value: value.to_string(), dims: CELL_DEGREES.rev().map(|k| value.dim(k)).collect() }
}

fn cell_report(kind: &str, cell: String, table: &CellModelTable) -> CellReport {
    CellReport {
        schema: SCHEMA.into(),
        kind: kind.into(),
        cell,
        degrees: CELL_DEGREES.rev().collect(),
        top: entry("G".into(), &table.top),
        codim1: table.codim1.iter().map(|(v, x)| entry(format!("ker z_{v}"), x)).collect(),
        other_codim1: entry("other codimension-one".into(), &table.other_codim1),
        bottom: table.bottom.iter().map(|(f, x)| entry(f.to_string(), x)).collect(),
        bottom_dims: CELL_DEGREES.rev().map(|k| table.bottom_dim(k)).collect(),
    }
}

fn render_cell(r: &CellReport) -> String {
    let mut out = format!("{}\n", r.cell);
    let _ = writeln!(out, "  {}: {}", r.top.at, r.top.value);
    for e in &r.codim1 {
        let _ = writeln!(out, "  {}: {}", e.at, e.value);
    }
    let _ = writeln!(out, "  {}: {}", r.other_codim1.at, r.other_codim1.value);
    let _ = writeln!(out, "  bottom:");
    for e in &r.bottom {
        let _ = writeln!(out, "    {}: {}", e.at, e.value);
    }
    let dims: Vec<String> = r.degrees.iter().zip(&r.bottom_dims).map(|(k, d)| format!("{k}:{d}")).collect();
    let _ = writeln!(out, "  bottom dimensions by degree: {}", dims.join(" "));
    out
}

fn cmd_cell_codim1(v: &str, family: &[String], json: bool) -> Result<Output, CliError> {
    let v = args::parse_character(v)?;
    let family = if family.is_empty() {
        vec![FiniteSubgroup::trivial()]
    } else {
        family.iter().map(|s| args::parse_subgroup(s)).collect::<Result<Vec<_>, _>>()?
    };
    let table = cell_model_codim1(v, &family)?;
    let report = cell_report("cell-codim1", format!("G/H_+ for H = ker z_{v}"), &table);
    Ok(Output::ok(if json { to_json(&report) } else { render_cell(&report) }))
}

fn cmd_cell_finite(text: &str, json: bool) -> Result<Output, CliError> {
    let f = args::parse_subgroup(text)?;
    guard_subgroup(&f)?;
    let table = cell_model_finite(&f);
    let report = cell_report("cell-finite", format!("G/F_+ for F = {f}"), &table);
    if json {
        return Ok(Output::ok(to_json(&report)));
    }
    let mut out = render_cell(&report);
    let _ = writeln!(out, "  total: Σ²Q^{}", table.bottom_dim(2));
    Ok(Output::ok(out))
}

fn cmd_euler(text: &str, subgroup: &str, minus: Option<&str>, json: bool) -> Result<Output, CliError> {
    let w = parse_torus_rep(text)?;
    let w_minus = minus.map(parse_torus_rep).transpose()?;
    let f = args::parse_subgroup(subgroup)?;
    for rep in std::iter::once(&w).chain(&w_minus) {
        if rep.has_trivial_summand() {
            return Err(ellipcp_core::Error::TrivialCharacter.into());
        }
    }
    let split = decompose(&f);
    let e = euler_class_in(&w, &f, &split);
    let e_minus = w_minus.as_ref().map(|m| euler_class_in(m, &f, &split));
    let shift = |r: &TorusRep| 2 * r.fixed_dim(&f) as i64;
    let grading = match &e_minus {
        None => e.grading(),
        Some(m) => e.grading().zip(m.grading()).map(|(a, b)| a - b),
    };
    let report = EulerReport {
        schema: SCHEMA.into(),
        kind: "euler".into(),
        input: text.into(),
        minus: minus.map(Into::into),
        subgroup: f.to_string(),
        basis: f.basis(),
        splitting: split,
        euler_class: e.to_string(),
        euler_class_minus: e_minus.as_ref().map(|m| m.to_string()),
        grading,
        suspension_shift: shift(&w) - w_minus.as_ref().map(shift).unwrap_or(0),
    };
    if json {
        return Ok(Output::ok(to_json(&report)));
    }
    let mut out = format!("F = {} = {}\n", report.subgroup, split);
    match &report.euler_class_minus {
        None => {
            let _ = writeln!(out, "  e({})_F = {}", w, report.euler_class);
        }
        Some(m) => {
            let _ = writeln!(
                out,
                "  e({} - ({}))_F = ({}) / ({})",
                w,
                w_minus.as_ref().expect("set"),
                report.euler_class,
                m
            );
        }
    }
    if let Some(g) = report.grading {
        let _ = writeln!(out, "  degree {g}");
    }
    let _ = writeln!(out, "  suspension shift at F: {}", report.suspension_shift);
    Ok(Output::ok(out))
}
