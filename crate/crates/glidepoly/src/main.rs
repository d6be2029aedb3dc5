//! Thin command-line front end over the library. Every subcommand maps to a
//! single library operation; output is deterministic for a fixed input.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use glidepoly::basis::{
    expand_in_glide, fundamental_qs, glide_poly, multifundamental_truncated,
    quasisym_glide, slide_poly, GlideIndex,
};
use glidepoly::genomic::{glide_product, gss, lr_coefficients};
use glidepoly::grothendieck::{glide_expansion, grothendieck_poly, schubert_poly};
use glidepoly::pipedream::{enumerate_pd, enumerate_qpd};
use glidepoly::tableau::{buch_poly, enumerate_qsv, enumerate_svt};
use glidepoly::verify::{all_passed, run_suites};
use glidepoly::{Partition, Permutation, PolyZB, StrongComposition, WeakComposition};

#[derive(Parser)]
#[command(name = "glidepoly", version, about = "Grothendieck, Schubert, glide and slide polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit polynomials and expansions as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
    /// Keep beta formal ("sym") or specialize it to an integer.
    #[arg(long, global = true, default_value = "sym")]
    beta: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expand {
    Glide,
    None,
}

#[derive(Args)]
struct PermArg {
    /// Permutation in one-line notation ("13524", or comma-separated).
    perm: String,
}

#[derive(Subcommand)]
enum Command {
    /// beta-Grothendieck polynomial of a permutation.
    Kpoly {
        perm: String,
        /// Print the polynomial or its glide expansion.
        #[arg(long, value_enum, default_value = "none")]
        expand: Expand,
    },
    /// Schubert polynomial (beta = 0 Grothendieck) of a permutation.
    Schubert(PermArg),
    /// Glide polynomial of a weak composition.
    Glide { shape: String },
    /// Fundamental slide polynomial of a weak composition.
    Slide { shape: String },
    /// Fundamental quasisymmetric polynomial of a strong composition in n variables.
    Fqs { shape: String, nvars: usize },
    /// Truncated multi-fundamental quasisymmetric function in m variables.
    Multifqs { shape: String, nvars: usize },
    /// Quasisymmetric glide polynomial of a strong composition in n variables.
    Qglide { shape: String, nvars: usize },
    /// Expand a JSON polynomial (from a file, or stdin for "-") in the glide basis.
    ExpandGlide { input: String },
    /// List set-valued tableaux of a partition shape with entries <= n.
    Svt {
        lambda: String,
        nvars: usize,
        /// Restrict to quasi-Yamanouchi tableaux.
        #[arg(long)]
        qy: bool,
    },
    /// Symmetric beta-Grothendieck polynomial of a partition in n variables.
    KpolySym { lambda: String, nvars: usize },
    /// List pipe dreams of a permutation.
    Pd {
        perm: String,
        /// Restrict to reduced pipe dreams.
        #[arg(long)]
        reduced: bool,
    },
    /// List quasi-Yamanouchi pipe dreams of a permutation.
    Qpd(PermArg),
    /// Genomic shuffle set of two weak compositions.
    Gss { a: String, b: String },
    /// Glide product multiset of two weak compositions.
    Gprod { a: String, b: String },
    /// Glide expansion of a product of two Grothendieck polynomials.
    Lr { u: String, v: String },
    /// Run the theorem identity suites and report pass/fail.
    Verify {
        #[arg(long, default_value_t = 4)]
        level: usize,
    },
}

enum AppError {
    Usage(String),
    Domain(String),
}

impl From<glidepoly::ParseError> for AppError {
    fn from(e: glidepoly::ParseError) -> Self {
        AppError::Usage(e.to_string())
    }
}

impl From<glidepoly::DomainError> for AppError {
    fn from(e: glidepoly::DomainError) -> Self {
        AppError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            let text = if text.ends_with('\n') || text.is_empty() {
                text
            } else {
                text + "\n"
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {path}: {e}");
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn parse_beta(s: &str) -> Result<Option<i64>, AppError> {
    if s == "sym" {
        return Ok(None);
    }
    s.parse::<i64>()
        .map(Some)
        .map_err(|_| AppError::Usage(format!("--beta must be \"sym\" or an integer, got {s:?}")))
}

fn run(cli: &Cli) -> Result<(String, bool), AppError> {
    let beta = parse_beta(&cli.beta)?;
    let poly_out = |p: PolyZB| -> String {
        let p = match beta {
            Some(v) => p.specialize_beta(v),
            None => p,
        };
        if cli.json {
            p.to_json()
        } else {
            p.to_string()
        }
    };
    let out = match &cli.command {
        Command::Kpoly { perm, expand } => {
            let w: Permutation = perm.parse()?;
            match expand {
                Expand::None => poly_out(grothendieck_poly(&w)),
                Expand::Glide => render_glide_terms(&glide_expansion(&w), cli.json),
            }
        }
        Command::Schubert(a) => {
            let w: Permutation = a.perm.parse()?;
            poly_out(schubert_poly(&w))
        }
        Command::Glide { shape } => {
            let a: WeakComposition = shape.parse()?;
            poly_out(glide_poly(&a))
        }
        Command::Slide { shape } => {
            let a: WeakComposition = shape.parse()?;
            poly_out(slide_poly(&a))
        }
        Command::Fqs { shape, nvars } => {
            let a: StrongComposition = shape.parse()?;
            poly_out(fundamental_qs(&a, *nvars))
        }
        Command::Multifqs { shape, nvars } => {
            let a: StrongComposition = shape.parse()?;
            poly_out(multifundamental_truncated(&a, *nvars))
        }
        Command::Qglide { shape, nvars } => {
            let a: StrongComposition = shape.parse()?;
            poly_out(quasisym_glide(&a, *nvars))
        }
        Command::ExpandGlide { input } => {
            let text = if input == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| AppError::Usage(format!("cannot read stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(input)
                    .map_err(|e| AppError::Usage(format!("cannot read {input}: {e}")))?
            };
            let p = PolyZB::from_json(&text)?;
            render_glide_terms(&expand_in_glide(&p), cli.json)
        }
        Command::Svt { lambda, nvars, qy } => {
            let lam: Partition = lambda.parse()?;
            let ts = if *qy {
                enumerate_qsv(&lam, *nvars)
            } else {
                enumerate_svt(&lam, *nvars)
            };
            let mut lines: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
            lines.sort();
            lines.join("\n")
        }
        Command::KpolySym { lambda, nvars } => {
            let lam: Partition = lambda.parse()?;
            poly_out(buch_poly(&lam, *nvars))
        }
        Command::Pd { perm, reduced } => {
            let w: Permutation = perm.parse()?;
            let pds = enumerate_pd(&w);
            let picked: Vec<_> = pds.iter().filter(|p| !reduced || p.is_reduced()).collect();
            picked
                .iter()
                .map(|p| p.render())
                .collect::<Vec<_>>()
                .join("\n")
        }
        Command::Qpd(a) => {
            let w: Permutation = a.perm.parse()?;
            enumerate_qpd(&w)
                .iter()
                .map(|p| p.render())
                .collect::<Vec<_>>()
                .join("\n")
        }
        Command::Gss { a, b } => {
            let a: WeakComposition = a.parse()?;
            let b: WeakComposition = b.parse()?;
            gss(&a, &b)
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join("\n")
        }
        Command::Gprod { a, b } => {
            let a: WeakComposition = a.parse()?;
            let b: WeakComposition = b.parse()?;
            glide_product(&a, &b)
                .iter()
                .map(|(c, m)| format!("({c}): {m}"))
                .collect::<Vec<_>>()
                .join("\n")
        }
        Command::Lr { u, v } => {
            let u: Permutation = u.parse()?;
            let v: Permutation = v.parse()?;
            render_glide_terms(&lr_coefficients(&u, &v), cli.json)
        }
        Command::Verify { level } => {
            let results = run_suites(*level);
            let mut lines: Vec<String> = results
                .iter()
                .map(|r| {
                    format!(
                        "{}: {}{}",
                        r.name,
                        if r.passed { "pass" } else { "FAIL" },
                        if r.detail.is_empty() {
                            String::new()
                        } else {
                            format!(" ({})", r.detail)
                        }
                    )
                })
                .collect();
            let ok = all_passed(&results);
            lines.push(if ok { "all suites passed".into() } else { "some suites FAILED".into() });
            return Ok((lines.join("\n"), ok));
        }
    };
    Ok((out, true))
}

/// Render a glide-basis expansion, one `coeff * beta^k * G_shape` per line.
fn render_glide_terms(terms: &BTreeMap<GlideIndex, i64>, json: bool) -> String {
    if json {
        let items: Vec<String> = terms
            .iter()
            .map(|(idx, c)| {
                let shape: Vec<String> =
                    idx.shape.entries().iter().map(|e| e.to_string()).collect();
                format!(
                    "{{\"beta\":{},\"shape\":[{}],\"coeff\":{}}}",
                    idx.beta_power,
                    shape.join(","),
                    c
                )
            })
            .collect();
        return format!("[{}]", items.join(","));
    }
    terms
        .iter()
        .map(|(idx, c)| {
            let b = match idx.beta_power {
                0 => String::new(),
                1 => "b * ".to_string(),
                k => format!("b^{k} * "),
            };
            format!("{c} * {b}G({})", idx.shape)
        })
        .collect::<Vec<_>>()
        .join("\n")
}
