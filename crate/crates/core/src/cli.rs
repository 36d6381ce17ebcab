//! The `riordan` command line.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::appell::{weighted_sequence, Weight};
use crate::catalog::{self, check_identity, family_names, gf_check, gf_families, verify_family, IDENTITIES};
use crate::error::Error;
use crate::polyseq::{sequence_from_spec, umbral_compose, PolySeq};
use crate::rational::{int, parse_rational, ratio, Rational};
use crate::riordan::{a_sequence, recover_spec, RiordanSpec};
use crate::series::Series;
use crate::triangle::Triangle;

#[derive(Parser, Debug)]
#[command(name = "riordan", version, about = "Exact Riordan arrays, their polynomial sequences and Appell families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// First R rows of T(f|g).
    Triangle(Opts),
    /// Row polynomials p_0..p_{R-1}.
    Polys(Opts),
    /// Apply T(f|g) to the series --h.
    Act(Opts),
    /// T(f|g) T(f2|g2) as a spec.
    Product(Opts),
    /// Inverse of a proper array as a spec.
    Inverse(Opts),
    /// A-sequence of the denominator g, to --order.
    Asequence(Opts),
    /// Umbral composition of the sequences of (f, g) and (f2, g2).
    Umbral(Opts),
    /// Weighted polynomials s_{n,k} = d_{n,k} h_k.
    Appell(Opts),
    /// Recover (f, g) from triangle rows in JSON or CSV.
    Recover(Opts),
    /// Run the catalog golden data, identities and closed-form checks.
    Verify(Opts),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// Numerator series: a coefficient list like 1/2,0,-1 or named tokens joined by `*`.
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Denominator series, same syntax as --f.
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// Catalog family supplying f and g (and the weight for `appell`).
    #[arg(long)]
    family: Option<String>,
    /// Second array for `product` and `umbral`.
    #[arg(long, allow_hyphen_values = true)]
    f2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g2: Option<String>,
    #[arg(long)]
    family2: Option<String>,
    /// Number of rows R (default 8; `verify` defaults to each family's printed count).
    #[arg(long)]
    rows: Option<usize>,
    /// Truncation order N of the input series; defaults to R - 1.
    #[arg(long)]
    order: Option<usize>,
    /// Weight token: exp, geometric, inv_square, a_minus_log:<a>, custom:<list>.
    #[arg(long)]
    weight: Option<String>,
    /// Evaluation point for the closed-form checks of `verify`.
    #[arg(long, allow_hyphen_values = true)]
    t0: Option<String>,
    /// Series acted on by `act`.
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Multiply the n-th weighted polynomial by n!.
    #[arg(long)]
    factorial: bool,
    /// Which checks `verify` runs: all, golden, identities or gf.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Input file for `recover`; `-` or absent reads stdin.
    #[arg(long)]
    input: Option<String>,
    /// Write output here instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

enum Failure {
    Usage(String),
    Domain(String),
    /// Failed verify checks: the per-check report still goes to the output.
    Checks { report: String, summary: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Runs the CLI on `argv` (program name first). Returns the exit code:
/// 0 on success, 1 on usage errors, 2 on domain errors.
pub fn run(argv: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let (opts, result) = dispatch(cli.command, stdin);
    let (text, failure) = match result {
        Ok(text) => (text, None),
        Err(Failure::Checks { report, summary }) => (report, Some(Failure::Domain(summary))),
        Err(f) => (String::new(), Some(f)),
    };
    if !text.is_empty() {
        let written = match &opts.output {
            Some(path) => fs::write(path, &text).map_err(|e| format!("Io: {path}: {e}")),
            None => stdout.write_all(text.as_bytes()).map_err(|e| format!("Io: {e}")),
        };
        if let Err(msg) = written {
            let _ = writeln!(stderr, "{msg}");
            return 1;
        }
    }
    match failure {
        None => 0,
        Some(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "{msg}");
            1
        }
        Some(Failure::Domain(msg)) | Some(Failure::Checks { summary: msg, .. }) => {
            let _ = writeln!(stderr, "{msg}");
            2
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> (Opts, Outcome<String>) {
    match command {
        Command::Triangle(o) => {
            let r = triangle(&o);
            (o, r)
        }
        Command::Polys(o) => {
            let r = polys(&o);
            (o, r)
        }
        Command::Act(o) => {
            let r = act(&o);
            (o, r)
        }
        Command::Product(o) => {
            let r = product(&o);
            (o, r)
        }
        Command::Inverse(o) => {
            let r = inverse(&o);
            (o, r)
        }
        Command::Asequence(o) => {
            let r = asequence(&o);
            (o, r)
        }
        Command::Umbral(o) => {
            let r = umbral(&o);
            (o, r)
        }
        Command::Appell(o) => {
            let r = appell(&o);
            (o, r)
        }
        Command::Recover(o) => {
            let r = recover(&o, stdin);
            (o, r)
        }
        Command::Verify(o) => {
            let r = verify(&o);
            (o, r)
        }
    }
}

impl Opts {
    fn rows(&self) -> usize {
        self.rows.unwrap_or(8)
    }

    fn order(&self) -> usize {
        self.order.unwrap_or(self.rows().saturating_sub(1))
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(format!("Usage: {}", msg.into()))
}

fn resolve_spec(
    f: Option<&str>,
    g: Option<&str>,
    family: Option<&str>,
    order: usize,
    which: &str,
) -> Outcome<RiordanSpec> {
    match (family, f, g) {
        (Some(name), None, None) => Ok(catalog::get_family(name, order + 1)?.spec.truncated(order)),
        (Some(_), _, _) => Err(usage(format!("--family{which} cannot be combined with --f{which}/--g{which}"))),
        (None, Some(f), Some(g)) => Ok(RiordanSpec::new(Series::parse(f, order)?, Series::parse(g, order)?)?),
        (None, _, _) => Err(usage(format!("give --f{which} and --g{which}, or --family{which}"))),
    }
}

fn first_spec(o: &Opts) -> Outcome<RiordanSpec> {
    resolve_spec(o.f.as_deref(), o.g.as_deref(), o.family.as_deref(), o.order(), "")
}

fn second_spec(o: &Opts) -> Outcome<RiordanSpec> {
    resolve_spec(o.f2.as_deref(), o.g2.as_deref(), o.family2.as_deref(), o.order(), "2")
}

fn render_triangle(t: &Triangle, format: Format) -> String {
    match format {
        Format::Text => t.to_text(),
        Format::Json => t.to_json() + "\n",
        Format::Csv => t.to_csv(),
    }
}

fn render_polys(p: &PolySeq, format: Format) -> String {
    match format {
        Format::Text => p.to_text(),
        Format::Json => p.to_json() + "\n",
        Format::Csv => p.to_csv(),
    }
}

fn strings(c: &[Rational]) -> Vec<String> {
    c.iter().map(|v| v.to_string()).collect()
}

fn render_series(s: &Series, format: Format) -> String {
    match format {
        Format::Text | Format::Csv => s.to_text() + "\n",
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                order: usize,
                coeffs: Vec<String>,
            }
            let doc = Doc { order: s.order(), coeffs: strings(s.coeffs()) };
            serde_json::to_string(&doc).expect("series serializes") + "\n"
        }
    }
}

fn render_spec(spec: &RiordanSpec, format: Format) -> String {
    match format {
        Format::Text => format!("f = {}\ng = {}\n", spec.f().to_trimmed_text(), spec.g().to_trimmed_text()),
        Format::Csv => format!("f,{}\ng,{}\n", spec.f().to_trimmed_text(), spec.g().to_trimmed_text()),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                order: usize,
                f: Vec<String>,
                g: Vec<String>,
            }
            let doc = Doc { order: spec.order(), f: strings(spec.f().coeffs()), g: strings(spec.g().coeffs()) };
            serde_json::to_string(&doc).expect("spec serializes") + "\n"
        }
    }
}

fn triangle(o: &Opts) -> Outcome<String> {
    let t = first_spec(o)?.build_triangle(o.rows())?;
    Ok(render_triangle(&t, o.format))
}

fn polys(o: &Opts) -> Outcome<String> {
    let p = sequence_from_spec(&first_spec(o)?, o.rows())?;
    Ok(render_polys(&p, o.format))
}

fn act(o: &Opts) -> Outcome<String> {
    let h = o.h.as_deref().ok_or_else(|| usage("act needs --h"))?;
    let spec = first_spec(o)?;
    let out = spec.act(&Series::parse(h, o.order())?)?;
    Ok(render_series(&out, o.format))
}

fn product(o: &Opts) -> Outcome<String> {
    let spec = first_spec(o)?.product(&second_spec(o)?)?;
    Ok(render_spec(&spec, o.format))
}

fn inverse(o: &Opts) -> Outcome<String> {
    let spec = first_spec(o)?.inverse(o.rows())?;
    Ok(render_spec(&spec, o.format))
}

fn asequence(o: &Opts) -> Outcome<String> {
    let order = o.order();
    let g = match (o.family.as_deref(), o.g.as_deref()) {
        (Some(name), None) => catalog::get_family(name, order + 1)?.spec.g().truncated(order),
        (None, Some(g)) => Series::parse(g, order)?,
        _ => return Err(usage("give exactly one of --g or --family")),
    };
    Ok(render_series(&a_sequence(&g, order)?, o.format))
}

fn umbral(o: &Opts) -> Outcome<String> {
    let p = sequence_from_spec(&first_spec(o)?, o.rows())?;
    let q = sequence_from_spec(&second_spec(o)?, o.rows())?;
    Ok(render_polys(&umbral_compose(&p, &q)?, o.format))
}

fn appell(o: &Opts) -> Outcome<String> {
    let order = o.order();
    let spec = first_spec(o)?;
    let weight = match (&o.weight, &o.family) {
        (Some(token), _) => Weight::parse(token, order)?,
        (None, Some(name)) => catalog::get_family(name, order + 1)?.weight.unwrap_or_else(|| Weight::exp(order)),
        (None, None) => Weight::exp(order),
    };
    let s = weighted_sequence(&spec, &weight, o.rows())?;
    Ok(render_polys(&s.to_polyseq(o.factorial), o.format))
}

fn recover(o: &Opts, stdin: &mut dyn Read) -> Outcome<String> {
    let mut text = String::new();
    match o.input.as_deref() {
        None | Some("-") => {
            stdin.read_to_string(&mut text).map_err(|e| usage(format!("reading stdin: {e}")))?;
        }
        Some(path) => {
            text = fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
        }
    }
    let t = if text.trim_start().starts_with('{') { Triangle::from_json(&text)? } else { Triangle::from_csv(&text)? };
    Ok(render_spec(&recover_spec(&t)?, o.format))
}

struct CheckLine {
    suite: &'static str,
    name: String,
    passed: bool,
    detail: String,
}

fn verify(o: &Opts) -> Outcome<String> {
    let suites: &[&str] = match o.suite.as_str() {
        "all" => &["golden", "identities", "gf"],
        "golden" => &["golden"],
        "identities" => &["identities"],
        "gf" => &["gf"],
        other => return Err(usage(format!("unknown suite {other}"))),
    };
    if let Some(name) = &o.family {
        if !family_names().contains(&name.as_str()) {
            return Err(Error::UnknownFamily(name.clone()).into());
        }
    }
    let points = match &o.t0 {
        Some(t) => vec![parse_rational(t)?],
        None => vec![int(0), int(1), ratio(-1, 2)],
    };
    let keep = |name: &str| o.family.as_deref().is_none_or(|f| f == name);
    let mut lines = Vec::new();
    for suite in suites {
        match *suite {
            "golden" => {
                for name in family_names().into_iter().filter(|n| keep(n)) {
                    let rows = match o.rows {
                        Some(r) => r,
                        None => catalog::get_family(name, 1)?.verify_rows,
                    };
                    let report = verify_family(name, rows)?;
                    let detail = report.to_string().trim_start_matches(&format!("{name}: ")).to_string();
                    lines.push(CheckLine { suite: "golden", name: name.to_string(), passed: report.ok(), detail });
                }
            }
            "identities" if o.family.is_none() => {
                for name in IDENTITIES {
                    let (passed, detail) = match check_identity(name)? {
                        None => (true, "holds".to_string()),
                        Some(d) => (false, d),
                    };
                    lines.push(CheckLine { suite: "identity", name: name.to_string(), passed, detail });
                }
            }
            "gf" => {
                for name in gf_families().into_iter().filter(|n| keep(n)) {
                    for t0 in &points {
                        let passed = gf_check(name, t0, 12)?;
                        let detail = format!("t0 = {t0}, N = 12");
                        lines.push(CheckLine { suite: "gf", name: name.to_string(), passed, detail });
                    }
                }
            }
            _ => {}
        }
    }
    let failed = lines.iter().filter(|l| !l.passed).count();
    let mut text: String = lines
        .iter()
        .map(|l| format!("{} {} {}: {}\n", if l.passed { "PASS" } else { "FAIL" }, l.suite, l.name, l.detail))
        .collect();
    text.push_str(&format!("{} checks, {} failed\n", lines.len(), failed));
    if failed > 0 {
        let summary = Error::CheckFailed(format!("{failed} of {} checks failed", lines.len())).to_string();
        return Err(Failure::Checks { report: text, summary });
    }
    Ok(text)
}
