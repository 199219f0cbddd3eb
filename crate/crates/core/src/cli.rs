//! `schur-cauchy` command line.
//!
//! Exit status: 0 on success or a verified identity, 1 on an identity
//! mismatch, 2 on a usage or parameter error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::identities::{
    verify, worked_example_table, IdentityId, IdentityReport, Params, TMode, Witness, MAX_N,
};
use crate::partitions::{Composition, Partition};
use crate::poly::Bank;
use crate::poly::VarContext;
use crate::symfunc::{schur, FamilyKind, SchurMethod};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    #[value(name = "paper-example")]
    WorkedExample,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "schur-cauchy",
    version,
    about = "Schur polynomials and Cauchy-type identities, exactly"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Build both sides of an identity and compare them.
    Verify(VerifyArgs),
    /// Print a Schur polynomial.
    Schur(SchurArgs),
    /// Print a worked table.
    Table {
        #[arg(value_enum)]
        name: TableName,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct VerifyArgs {
    /// thm1_family, thm1_t, bounded_family, bounded_t, macdonald, cauchy_h,
    /// cauchy_dual_e, lemma1 or lemma2.
    pub identity: IdentityId,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Truncation degree for the unbounded identities.
    #[arg(long, default_value_t = 4)]
    pub degree: u32,
    /// Weakly decreasing bounds `a1,a2,...`; a single value is repeated.
    #[arg(long)]
    pub bounds: Option<Composition>,
    /// h, e, p, e+h or custom.
    #[arg(long, default_value = "h")]
    pub family: FamilyKind,
    /// One polynomial per line; line k defines f_k, later members are zero.
    #[arg(long)]
    pub family_file: Option<PathBuf>,
    /// distinct, repeated or ones.
    #[arg(long, default_value = "distinct")]
    pub t_mode: TMode,
    /// Single partition for lemma2.
    #[arg(long)]
    pub shape: Option<Partition>,
    /// Entries of mu range over 0..=box-max for lemma1.
    #[arg(long, default_value_t = 4)]
    pub box_max: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Worker threads for the left-side accumulation.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct SchurArgs {
    #[arg(long)]
    pub shape: Partition,
    #[arg(long)]
    pub n: usize,
    /// bialternant, jacobi_trudi, dual_jacobi_trudi or ssyt.
    #[arg(long, default_value = "bialternant")]
    pub method: SchurMethod,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

fn format_name(f: OutputFormat) -> &'static str {
    match f {
        OutputFormat::Text => "text",
        OutputFormat::Json => "json",
    }
}

fn method_name(m: SchurMethod) -> &'static str {
    match m {
        SchurMethod::Bialternant => "bialternant",
        SchurMethod::JacobiTrudi => "jacobi_trudi",
        SchurMethod::DualJacobiTrudi => "dual_jacobi_trudi",
        SchurMethod::Ssyt => "ssyt",
    }
}

impl RunConfig {
    /// Argument vector (without the program name) that parses back to
    /// `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut a: Vec<String> = Vec::new();
        fn push(a: &mut Vec<String>, k: &str, v: String) {
            a.push(k.to_string());
            a.push(v);
        }
        match &self.command {
            Command::Verify(v) => {
                push(&mut a, "verify", v.identity.to_string());
                push(&mut a, "--n", v.n.to_string());
                push(&mut a, "--m", v.m.to_string());
                push(&mut a, "--degree", v.degree.to_string());
                if let Some(b) = &v.bounds {
                    push(&mut a, "--bounds", b.to_string());
                }
                push(&mut a, "--family", v.family.to_string());
                if let Some(p) = &v.family_file {
                    push(&mut a, "--family-file", p.display().to_string());
                }
                push(&mut a, "--t-mode", v.t_mode.to_string());
                if let Some(s) = &v.shape {
                    push(&mut a, "--shape", s.to_string());
                }
                push(&mut a, "--box-max", v.box_max.to_string());
                push(&mut a, "--format", format_name(v.format).to_string());
                if let Some(t) = v.threads {
                    push(&mut a, "--threads", t.to_string());
                }
            }
            Command::Schur(s) => {
                a.push("schur".to_string());
                push(&mut a, "--shape", s.shape.to_string());
                push(&mut a, "--n", s.n.to_string());
                push(&mut a, "--method", method_name(s.method).to_string());
                push(&mut a, "--format", format_name(s.format).to_string());
            }
            Command::Table {
                name: TableName::WorkedExample,
            } => {
                push(&mut a, "table", "paper-example".into());
            }
        }
        a
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    identity: IdentityId,
    params: &'a Params,
    verdict: crate::identities::Verdict,
    witness: &'a Option<Witness>,
    lhs_terms: usize,
    elapsed_ms: u128,
}

/// Renders a report as an aligned table ending in `OK`/`FAIL`, or as a JSON
/// object with keys `identity, params, verdict, witness, lhs_terms,
/// elapsed_ms`.
pub fn emit_report(r: &IdentityReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let json = JsonReport {
                identity: r.identity,
                params: &r.params,
                verdict: r.verdict,
                witness: &r.witness,
                lhs_terms: r.lhs_terms,
                elapsed_ms: r.elapsed.as_millis(),
            };
            let mut s = serde_json::to_string(&json).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let p = &r.params;
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            let mut rows: Vec<(&str, String)> = vec![
                ("identity", r.identity.to_string()),
                ("n", p.n.to_string()),
                ("m", p.m.to_string()),
                ("degree", p.degree.to_string()),
                (
                    "bounds",
                    opt(p
                        .bounds
                        .as_ref()
                        .map(|b| Composition::new(b.clone()).to_string())),
                ),
                ("family", p.family.to_string()),
                ("t_mode", p.t_mode.to_string()),
                (
                    "shape",
                    opt(p
                        .shape
                        .as_ref()
                        .map(|s| Composition::new(s.clone()).to_string())),
                ),
                ("box_max", p.box_max.to_string()),
                (
                    "verdict",
                    match r.verdict {
                        crate::identities::Verdict::Equal => "equal".into(),
                        crate::identities::Verdict::Mismatch => "mismatch".into(),
                    },
                ),
                ("lhs_terms", r.lhs_terms.to_string()),
                ("elapsed_ms", r.elapsed.as_millis().to_string()),
            ];
            if let Some(w) = &r.witness {
                if let Some(case) = &w.case {
                    rows.push(("case", case.clone()));
                }
                rows.push(("witness", w.monomial.clone()));
                rows.push(("lhs_coeff", w.lhs.clone()));
                rows.push(("rhs_coeff", w.rhs.clone()));
            }
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (k, v) in rows {
                out.push_str(&format!("{k:<width$}  {v}\n"));
            }
            out.push_str(if r.is_equal() { "OK\n" } else { "FAIL\n" });
            out
        }
    }
}

fn verify_params(v: &VerifyArgs) -> Result<Params, String> {
    let custom_family = match (&v.family_file, v.family) {
        (Some(path), FamilyKind::Custom) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Some(text.lines().map(str::to_string).collect())
        }
        (None, FamilyKind::Custom) => return Err("--family custom needs --family-file".into()),
        (Some(_), _) => return Err("--family-file requires --family custom".into()),
        (None, _) => None,
    };
    Ok(Params {
        n: v.n,
        m: v.m,
        degree: v.degree,
        bounds: v.bounds.as_ref().map(|b| b.entries().to_vec()),
        family: v.family,
        custom_family,
        t_mode: v.t_mode,
        shape: v.shape.as_ref().map(|s| s.parts().to_vec()),
        box_max: v.box_max,
    })
}

fn run_verify(v: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let params = match verify_params(v) {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let run = || verify(v.identity, &params);
    let result = match v.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build()
        {
            Ok(pool) => pool.install(run),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start thread pool: {e}");
                return EXIT_USAGE;
            }
        },
        None => run(),
    };
    match result {
        Ok(report) => {
            let _ = out.write_all(emit_report(&report, v.format).as_bytes());
            if report.is_equal() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn run_schur(s: &SchurArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if !(1..=MAX_N).contains(&s.n) {
        let _ = writeln!(err, "error: n must be in 1..={MAX_N}");
        return EXIT_USAGE;
    }
    let ctx = VarContext::x_only(s.n);
    match schur(&s.shape, &ctx, Bank::X, s.method) {
        Ok(p) => {
            let _ = match s.format {
                OutputFormat::Text => writeln!(out, "{p}"),
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({
                        "shape": s.shape.to_string(),
                        "n": s.n,
                        "method": method_name(s.method),
                        "polynomial": p.to_string(),
                    })
                ),
            };
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Text rendering of the worked `n = 2, a = (2, 2)` example.
pub fn render_worked_example() -> Result<(String, bool), crate::Error> {
    let table = worked_example_table()?;
    let rows: Vec<[String; 3]> = table
        .rows
        .iter()
        .map(|r| {
            [
                r.partition.to_string(),
                r.det.to_string(),
                r.schur.to_string(),
            ]
        })
        .collect();
    let header = [
        "lambda".to_string(),
        "det(t^(lambda_i+j-i))".into(),
        "s_lambda".into(),
    ];
    let w0 = rows
        .iter()
        .map(|r| r[0].len())
        .chain([header[0].len()])
        .max()
        .unwrap_or(0);
    let w1 = rows
        .iter()
        .map(|r| r[1].len())
        .chain([header[1].len()])
        .max()
        .unwrap_or(0);
    let mut s = String::new();
    for r in std::iter::once(&header).chain(rows.iter()) {
        s.push_str(&format!("{:<w0$}  {:<w1$}  {}\n", r[0], r[1], r[2]));
    }
    s.push_str(&format!("sum      {}\n", table.sum));
    s.push_str(&format!(
        "product  (1 + t*x1 + t^2*x1^2)*(1 + t*x2 + t^2*x2^2) = {}\n",
        table.product
    ));
    s.push_str(&format!("rhs      {}\n", table.rhs));
    let holds = table.holds();
    s.push_str(if holds { "OK\n" } else { "FAIL\n" });
    Ok((s, holds))
}

/// Parses `argv` (program name first) and runs the command, writing to the
/// given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match &config.command {
        Command::Verify(v) => run_verify(v, out, err),
        Command::Schur(s) => run_schur(s, out, err),
        Command::Table {
            name: TableName::WorkedExample,
        } => match render_worked_example() {
            Ok((text, holds)) => {
                let _ = out.write_all(text.as_bytes());
                if holds {
                    EXIT_OK
                } else {
                    EXIT_MISMATCH
                }
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("schur-cauchy").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn schur_command() {
        let (code, out, _) = run_capture(&[
            "schur",
            "--shape",
            "2,1",
            "--n",
            "2",
            "--method",
            "bialternant",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "x1^2*x2 + x1*x2^2\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["verify", "nope"]).0, EXIT_USAGE);
        assert_eq!(
            run_capture(&["verify", "bounded_t", "--bounds", "1,x"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["verify", "bounded_t", "--bounds", "1,2"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["verify", "cauchy_h", "--n", "5"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["verify", "cauchy_h", "--degree", "11"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["verify", "thm1_family", "--family", "custom"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["schur", "--shape", "1,2", "--n", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn text_report_sentinel() {
        let (code, out, _) = run_capture(&[
            "verify", "cauchy_h", "--n", "2", "--m", "2", "--degree", "3",
        ]);
        assert_eq!(code, 0);
        assert!(out.ends_with("OK\n"), "{out}");
        assert!(out.contains("verdict     equal"), "{out}");
    }
}
