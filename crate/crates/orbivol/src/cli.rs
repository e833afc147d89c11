//! Command-line dispatcher behind the `orbivol` binary.
//!
//! The binary is a thin wrapper over the library; each subcommand maps
//! onto one library entry point and renders a [`Report`]. Exit codes:
//! 0 success, 1 computation error, 2 degraded precision, 64 usage error.

use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::covolume::{self, CaseLabel, IdentityCase};
use crate::coxeter;
use crate::error::{Error, Result};
use crate::hp::{working_digits, HPReal};
use crate::lobachevsky;
use crate::nt;
use crate::nt::zeta::QuadAlgebraic;
use crate::prism;
use crate::report::{Report, ResultEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DEGRADED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "orbivol",
    version,
    about = "Volumes of the smallest compact hyperbolic 5-orbifolds: prism volumes by the Schläfli differential and arithmetic covolumes from zeta special values",
    disable_help_subcommand = true
)]
struct Cli {
    /// Working precision in decimal digits (min 30)
    #[arg(long, global = true, env = "ORBIVOL_DIGITS", default_value_t = 60)]
    digits: u32,
    /// Euler-product prime cutoff (min 1000)
    #[arg(long, global = true, default_value_t = 10_000_000)]
    cutoff: u64,
    /// Absolute quadrature tolerance, e.g. 1e-30 (default 10^-(digits-5))
    #[arg(long, global = true)]
    tol: Option<String>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Field-data file (JSON array of field records)
    #[arg(long, global = true)]
    fields: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a Lobachevsky function
    Lob {
        /// Series order: 2 or 3
        #[arg(long)]
        order: u32,
        /// Argument: pi/6, 2pi/5, or a decimal
        #[arg(long)]
        omega: String,
    },
    /// Volume of a compact prism P(alpha) = [5,3,3,3,alpha]
    Prism {
        /// Dihedral parameter: pi/4, pi/3, 2pi/5, or a decimal in range
        #[arg(long, conflicts_with = "polytope")]
        alpha: Option<String>,
        /// Named polytope P0, P1 or P2
        #[arg(long)]
        polytope: Option<String>,
    },
    /// Parse a Coxeter symbol or diagram, build its Gram matrix
    Coxeter {
        /// Bracketed symbol such as "[5,3,3,3,4]"
        #[arg(long, conflicts_with = "diagram")]
        symbol: Option<String>,
        /// Diagram file (JSON: {nodes, edges})
        #[arg(long)]
        diagram: Option<std::path::PathBuf>,
        /// Add a dashed edge "i,j" or "i,j,length"; index = node count appends a polar node
        #[arg(long)]
        dashed: Option<String>,
        /// Run a check: "signature" solves unknown dashed lengths and reports inertia
        #[arg(long)]
        check: Option<String>,
    },
    /// Dedekind zeta special value for a built-in or file-supplied field
    Zeta {
        /// Field label, or FILE#label
        #[arg(long)]
        field: String,
        /// Integer argument s >= 2
        #[arg(long)]
        s: u32,
    },
    /// Arithmetic covolume of one of the shipped lattice cases
    Covolume {
        /// gamma0 | gamma1 | gamma2 | 448 | 475
        #[arg(long = "case")]
        case: String,
    },
    /// Lower covolume bounds from the sieve cascade
    Bounds {
        /// 37 | 35 | 34 | 31
        #[arg(long)]
        eq: String,
        /// Base field degree
        #[arg(long)]
        d: Option<u32>,
        /// Base field discriminant
        #[arg(long)]
        dk: Option<u64>,
        /// Extension discriminant
        #[arg(long)]
        dell: Option<u64>,
        /// Extension class number
        #[arg(long)]
        hell: Option<u64>,
    },
    /// Check a geometric volume against the matching arithmetic covolume
    Verify {
        /// gamma0 | gamma2
        #[arg(long)]
        identity: String,
        /// Matched-digit target (default 11)
        #[arg(long, default_value_t = 11)]
        target: u32,
    },
    /// Reproduce the full table of geometric and arithmetic volumes
    Table1,
}

/// Parse an angle expression: `pi`, `pi/4`, `2pi/5`, `3*pi/10`, or a
/// plain decimal.
pub fn parse_angle(expr: &str, digits: u32) -> Result<HPReal> {
    let wp = working_digits(digits);
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(idx) = s.find("pi") {
        let (head, tail) = (&s[..idx], &s[idx + 2..]);
        let head = head.strip_suffix('*').unwrap_or(head);
        let num: i64 = if head.is_empty() {
            1
        } else {
            head.parse().map_err(|_| Error::Parse {
                position: 0,
                detail: format!("invalid multiple {head:?} in angle {expr:?}"),
            })?
        };
        let den: i64 = if tail.is_empty() {
            1
        } else {
            let t = tail.strip_prefix('/').ok_or_else(|| Error::Parse {
                position: idx + 2,
                detail: format!("expected '/' after pi in {expr:?}"),
            })?;
            t.parse().map_err(|_| Error::Parse {
                position: idx + 3,
                detail: format!("invalid divisor {t:?} in angle {expr:?}"),
            })?
        };
        if den == 0 {
            return Err(Error::Parse { position: 0, detail: "zero divisor in angle".into() });
        }
        return Ok(&(&HPReal::pi(wp) * &HPReal::from_i64(num, wp)) / &HPReal::from_i64(den, wp));
    }
    HPReal::parse(&s, wp)
}

fn out_digits(digits: u32) -> usize {
    digits as usize
}

fn run_command(cli: &Cli, report: &mut Report) -> Result<bool> {
    let digits = cli.digits;
    if digits < crate::hp::MIN_DIGITS {
        return Err(Error::Config(format!("--digits must be at least {}", crate::hp::MIN_DIGITS)));
    }
    if cli.cutoff < 1000 {
        return Err(Error::Config("--cutoff must be at least 1000".into()));
    }
    let wp = working_digits(digits);
    let tol = match &cli.tol {
        Some(t) => Some(HPReal::parse(t, wp)?),
        None => None,
    };
    report.diagnostics.cutoff = Some(cli.cutoff);
    let nd = out_digits(digits);
    let mut degraded = false;

    match &cli.command {
        Command::Lob { order, omega } => {
            let w = parse_angle(omega, digits)?;
            let order = match order {
                2 => lobachevsky::LobOrder::Two,
                3 => lobachevsky::LobOrder::Three,
                _ => return Err(Error::Validation("--order must be 2 or 3".into())),
            };
            let lv = lobachevsky::LobValue::evaluate(order, &w, digits)?;
            let n = if order == lobachevsky::LobOrder::Two { 2 } else { 3 };
            report.push(ResultEntry {
                label: format!("lob{n}({omega})"),
                value: lv.value.to_decimal(nd),
                error_bound: Some(format!("1e-{digits}")),
                ..Default::default()
            });
        }
        Command::Prism { alpha, polytope } => {
            match (alpha, polytope) {
                (Some(expr), None) => {
                    let a = parse_angle(expr, digits)?;
                    let v = prism::prism_volume(&a, tol.as_ref(), digits)?;
                    report.push(ResultEntry {
                        label: format!("vol5(P({expr}))"),
                        value: v.to_decimal(nd),
                        error_bound: Some(quad_tol_string(&tol, digits)),
                        ..Default::default()
                    });
                }
                (None, Some(p)) => {
                    let id = prism::Polytope::parse(p)?;
                    let v = prism::polytope_volume(id, tol.as_ref(), digits)?;
                    report.push(ResultEntry {
                        label: format!("vol5({})", p.to_ascii_uppercase()),
                        value: v.to_decimal(nd),
                        error_bound: Some(quad_tol_string(&tol, digits)),
                        ..Default::default()
                    });
                }
                _ => return Err(Error::Validation("prism requires exactly one of --alpha or --polytope".into())),
            };
        }
        Command::Coxeter { symbol, diagram, dashed, check } => {
            let mut d = match (symbol, diagram) {
                (Some(s), None) => coxeter::parse_symbol(s)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)?;
                    let file: coxeter::DiagramFile = serde_json::from_str(&text)?;
                    file.into_diagram(digits)?
                }
                _ => return Err(Error::Validation("coxeter requires exactly one of --symbol or --diagram".into())),
            };
            if let Some(spec) = dashed {
                let parts: Vec<&str> = spec.split(',').collect();
                if parts.len() < 2 || parts.len() > 3 {
                    return Err(Error::Validation("--dashed expects i,j or i,j,length".into()));
                }
                let i: usize = parts[0].trim().parse().map_err(|_| Error::Validation("bad --dashed index".into()))?;
                let j: usize = parts[1].trim().parse().map_err(|_| Error::Validation("bad --dashed index".into()))?;
                let length = if parts.len() == 3 { Some(HPReal::parse(parts[2].trim(), wp)?) } else { None };
                d.add_dashed(i, j, length)?;
            }
            report.push(ResultEntry {
                label: "nodes".into(),
                value: d.nodes.to_string(),
                ..Default::default()
            });
            if let Some(sym) = coxeter::render_symbol(&d) {
                report.push(ResultEntry { label: "symbol".into(), value: sym, ..Default::default() });
            }
            match check.as_deref() {
                None => {}
                Some("signature") => {
                    let unknown: Vec<(usize, usize)> = d
                        .edges
                        .iter()
                        .filter_map(|e| match e.kind {
                            coxeter::EdgeKind::Dashed(None) => Some((e.i, e.j)),
                            _ => None,
                        })
                        .collect();
                    let solved = if unknown.len() == 1 {
                        let l = coxeter::solve_dashed(&d, unknown[0], digits)?;
                        report.push(ResultEntry {
                            label: format!("dashed length ({}, {})", unknown[0].0, unknown[0].1),
                            value: l.to_decimal(nd),
                            ..Default::default()
                        });
                        for e in &mut d.edges {
                            if matches!(e.kind, coxeter::EdgeKind::Dashed(None)) {
                                e.kind = coxeter::EdgeKind::Dashed(Some(l.clone()));
                            }
                        }
                        true
                    } else {
                        false
                    };
                    let g = coxeter::gram(&d, digits)?;
                    let inr = coxeter::inertia(&g, &coxeter::default_zero_tol(digits));
                    report.push(ResultEntry { label: "inertia".into(), value: inr.to_string(), ..Default::default() });
                    if solved {
                        let det = coxeter::gram_det(&g);
                        report.push(ResultEntry {
                            label: "det residual".into(),
                            value: det.to_decimal(3),
                            ..Default::default()
                        });
                    }
                }
                Some(other) => {
                    return Err(Error::Validation(format!("unknown check {other:?}; expected \"signature\"")))
                }
            }
        }
        Command::Zeta { field, s } => {
            let f = if field.contains('#') {
                nt::resolve_field(field)?
            } else if let Some(path) = &cli.fields {
                // prefer the user-supplied file when it carries the label
                nt::load_fields(path)?
                    .into_iter()
                    .find(|x| &x.label == field)
                    .map(Ok)
                    .unwrap_or_else(|| nt::builtin(field))?
            } else {
                nt::builtin(field)?
            };
            match f.degree {
                2 => {
                    let disc = f.abs_disc.to_u64().ok_or_else(|| Error::Validation("discriminant too large".into()))?;
                    let v = nt::dedekind_zeta_quadratic(disc, *s, digits)?;
                    report.push(ResultEntry {
                        label: format!("zeta_{}({s})", f.label),
                        value: v.to_decimal(nd),
                        note: Some("character decomposition, full working precision".into()),
                        ..Default::default()
                    });
                }
                4 => {
                    if f.monogenic {
                        let v = nt::dedekind_zeta_quartic(&f, *s, cli.cutoff, digits)?;
                        report.push(ResultEntry {
                            label: format!("zeta_{}({s})", f.label),
                            value: v.value.to_decimal(nd),
                            error_bound: Some(v.tail_bound.to_decimal(3)),
                            cutoff: Some(cli.cutoff),
                            ..Default::default()
                        });
                    } else if let Some(beta) = relative_beta_for(&f.label) {
                        let k = nt::builtin(base_field_for(&f.label))?;
                        let kd = k.abs_disc.to_u64().unwrap();
                        let l = nt::relative_l(&k, &beta, *s, cli.cutoff, digits)?;
                        let zk = nt::dedekind_zeta_quadratic(kd, *s, digits)?;
                        let v = &l.value * &zk;
                        report.push(ResultEntry {
                            label: format!("zeta_{}({s})", f.label),
                            value: v.to_decimal(nd),
                            error_bound: Some((&l.tail_bound * &zk).to_decimal(3)),
                            cutoff: Some(cli.cutoff),
                            note: Some("via zeta_k x relative L (field is not monogenic)".into()),
                        });
                    } else {
                        return Err(Error::Refused(format!(
                            "field {} is not monogenic and no relative description is on file",
                            f.label
                        )));
                    }
                }
                other => return Err(Error::Validation(format!("unsupported field degree {other}"))),
            }
        }
        Command::Covolume { case } => {
            let label = CaseLabel::parse(case)?;
            let r = covolume::hyperbolic_covolume(label, digits, cli.cutoff)?;
            report.push(ResultEntry {
                label: format!("covolume({})", label.name()),
                value: r.hyperbolic_covolume.to_decimal(nd),
                error_bound: Some(r.tail_bound.to_decimal(3)),
                cutoff: Some(cli.cutoff),
                ..Default::default()
            });
            for p in &r.provenance {
                report.push(ResultEntry {
                    label: format!("input {}", p.name),
                    value: p.value.clone(),
                    cutoff: p.cutoff,
                    ..Default::default()
                });
            }
        }
        Command::Bounds { eq, d, dk, dell, hell } => {
            let need = |x: &Option<u32>, n: &str| x.ok_or_else(|| Error::Validation(format!("--{n} required for this bound")));
            let need64 = |x: &Option<u64>, n: &str| x.ok_or_else(|| Error::Validation(format!("--{n} required for this bound")));
            let (label, v) = match eq.as_str() {
                "37" => ("bound(deg>=7)".to_string(), covolume::bound_deg_ge7(digits)?),
                "35" => {
                    let (d, dk) = (need(d, "d")?, need64(dk, "dk")?);
                    (format!("bound(disc; d={d}, Dk={dk})"), covolume::bound_disc(d, dk, digits)?)
                }
                "34" => {
                    let (d, dk, dl) = (need(d, "d")?, need64(dk, "dk")?, need64(dell, "dell")?);
                    (format!("bound(disc pair; d={d}, Dk={dk}, Dl={dl})"), covolume::bound_disc_pair(d, dk, dl, digits)?)
                }
                "31" => {
                    let (d, dk, dl, h) = (need(d, "d")?, need64(dk, "dk")?, need64(dell, "dell")?, need64(hell, "hell")?);
                    (
                        format!("bound(class number; d={d}, Dk={dk}, Dl={dl}, h={h})"),
                        covolume::bound_classno(d, dk, dl, h, digits)?,
                    )
                }
                other => return Err(Error::Validation(format!("unknown bound {other:?}; expected 37, 35, 34 or 31"))),
            };
            report.push(ResultEntry { label, value: v.to_decimal(nd), ..Default::default() });
        }
        Command::Verify { identity, target } => {
            let which = IdentityCase::parse(identity)?;
            let r = covolume::verify_identity(which, *target, digits, cli.cutoff)?;
            report.push(ResultEntry {
                label: "arithmetic covolume".into(),
                value: r.lhs.to_decimal(nd),
                error_bound: Some(r.covolume.tail_bound.to_decimal(3)),
                cutoff: Some(cli.cutoff),
                ..Default::default()
            });
            report.push(ResultEntry {
                label: "2 x prism volume".into(),
                value: r.rhs.to_decimal(nd),
                ..Default::default()
            });
            report.push(ResultEntry {
                label: "matched_digits".into(),
                value: r.matched_digits.to_string(),
                ..Default::default()
            });
            report.push(ResultEntry {
                label: "achievable_digits".into(),
                value: r.achievable_digits.to_string(),
                note: Some("ceiling from Euler tails and quadrature tolerance".into()),
                ..Default::default()
            });
            if r.degraded {
                report.note(format!(
                    "degraded precision: target {target} digits exceeds the achievable ceiling {}",
                    r.achievable_digits
                ));
                degraded = true;
            }
        }
        Command::Table1 => {
            let tol_default = HPReal::pow10(-(digits as i64 - 5), wp);
            let qt = tol.clone().unwrap_or(tol_default);
            for (name, symbol, id) in [
                ("Delta0 / P0", "[5,3,3,3,3]", prism::Polytope::P0),
                ("Delta1 / P1", "[5,3,3,3,3^{1,1}]", prism::Polytope::P1),
                ("Delta2 / P2", "[5,3,3,3,4]", prism::Polytope::P2),
            ] {
                let v = prism::polytope_volume(id, Some(&qt), digits)?;
                report.push(ResultEntry {
                    label: format!("{name} {symbol}"),
                    value: v.to_decimal(nd),
                    ..Default::default()
                });
            }
            for case in [CaseLabel::Gamma0, CaseLabel::Gamma1, CaseLabel::Gamma2] {
                let r = covolume::hyperbolic_covolume(case, digits, cli.cutoff)?;
                report.push(ResultEntry {
                    label: format!("{} covolume", case.name()),
                    value: r.hyperbolic_covolume.to_decimal(nd),
                    error_bound: Some(r.tail_bound.to_decimal(3)),
                    cutoff: Some(cli.cutoff),
                    ..Default::default()
                });
            }
            report.note("geometric volumes above, arithmetic covolumes below; each covolume is twice the matching polytope volume");
        }
    }
    Ok(degraded)
}

fn quad_tol_string(tol: &Option<HPReal>, digits: u32) -> String {
    match tol {
        Some(t) => t.to_decimal(3),
        None => format!("1e-{}", digits - 5),
    }
}

/// Relative descriptions for the shipped non-monogenic quartic fields.
fn relative_beta_for(label: &str) -> Option<QuadAlgebraic> {
    match label {
        "ell448" => Some(QuadAlgebraic { a: -1, b: 2, c: 1 }),
        "ell475" => Some(QuadAlgebraic { a: -1, b: 2, c: 1 }),
        _ => None,
    }
}

fn base_field_for(label: &str) -> &'static str {
    match label {
        "ell448" => "qsqrt2",
        _ => "k0",
    }
}

/// Parse `argv` (without the program name), run the command, and print
/// the report. Returns the process exit code.
pub fn run(argv: &[String], out: &mut dyn Write) -> i32 {
    let started = Instant::now();
    let mut full: Vec<String> = vec!["orbivol".to_string()];
    full.extend_from_slice(argv);
    let cli = match Cli::try_parse_from(&full) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(out, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut report = Report::new(argv, cli.digits);
    let code = match run_command(&cli, &mut report) {
        Ok(false) => EXIT_OK,
        Ok(true) => EXIT_DEGRADED,
        Err(e) => {
            report.note(format!("error: {e}"));
            EXIT_ERROR
        }
    };
    report.meta.runtime_ms = started.elapsed().as_millis();
    report.meta.timestamp = timestamp();
    match cli.output {
        OutputFormat::Json => {
            let _ = writeln!(out, "{}", report.to_json());
        }
        OutputFormat::Text => {
            let _ = write!(out, "{}", report.to_text());
        }
    }
    code
}

fn timestamp() -> String {
    match std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH) {
        Ok(d) => format!("{}.{:03}", d.as_secs(), d.subsec_millis()),
        Err(_) => "0".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_expressions() {
        let d = 40;
        let wp = working_digits(d);
        let pi = HPReal::pi(wp);
        let cases = [
            ("pi", pi.clone()),
            ("pi/4", &pi / &HPReal::from_u64(4, wp)),
            ("2pi/5", &(&pi * &HPReal::from_u64(2, wp)) / &HPReal::from_u64(5, wp)),
            ("3*pi/10", &(&pi * &HPReal::from_u64(3, wp)) / &HPReal::from_u64(10, wp)),
            ("0.75", HPReal::parse("0.75", wp).unwrap()),
        ];
        for (expr, expect) in cases {
            let got = parse_angle(expr, d).unwrap();
            assert!((&got - &expect).abs() < HPReal::pow10(-(d as i64), wp), "{expr}");
        }
        assert!(parse_angle("pi/x", d).is_err());
        assert!(parse_angle("abc", d).is_err());
    }

    #[test]
    fn empty_argv_is_usage_error() {
        let mut out = Vec::new();
        let code = run(&[], &mut out);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let mut out = Vec::new();
        let code = run(&["--help".into()], &mut out);
        assert_eq!(code, EXIT_OK);
        let text = String::from_utf8(out).unwrap();
        for sub in ["lob", "prism", "coxeter", "zeta", "covolume", "bounds", "verify", "table1"] {
            assert!(text.contains(sub), "help misses {sub}");
        }
    }
}
