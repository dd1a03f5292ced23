//! Command definitions and dispatch.
//!
//! Every core operation is reachable through exactly one verb. Text output
//! is canonical and deterministic; `--json` switches to a single-line JSON
//! object. Exit codes: 0 success, 1 domain errors (such as `NotExact`),
//! 2 usage and parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use novikov_core::diffpoly::Multidegree;
use novikov_core::gd::{commute_check, gd_euler, gd_transform};
use novikov_core::novikov::{is_novikov_element, multilinear_nov_dim, nov_basis, Identity};
use novikov_core::repr::{is_admissible, kostka, sym_decomposition, specht_dim, Partition};
use novikov_core::sample::PolySampler;
use novikov_core::variational::{
    antiderivative, criterion_check, euler, euler_upto, is_null_lagrangian, sym_basis,
    sym_multilinear_dim, symmetric_certificate,
};
use novikov_core::{DiffPoly, Error};

use crate::parse::{parse_diff, parse_nov};

#[derive(Parser, Debug)]
#[command(
    name = "novlag",
    version,
    about = "Exact symbolic calculator for free Novikov algebras and null Lagrangians"
)]
pub struct Cli {
    /// Emit a single-line JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Differential polynomials in x1, x1', x1^(k), powers with ^n.
    Diff,
    /// Novikov expressions: `*` product, `o` symmetrized product, [a,b].
    Nov,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse an expression and print its canonical form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Input language.
        #[arg(long, value_enum, default_value_t = Mode::Diff)]
        mode: Mode,
    },
    /// Apply Euler operators (all of E^1..E^n, or one with --var).
    Euler {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Single variable index k for E^k.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        var: Option<u32>,
        /// Ambient variable count n (default: largest index in the input).
        #[arg(long, conflicts_with = "var")]
        vars: Option<u32>,
    },
    /// Decide whether every Euler operator annihilates the input.
    NullLagrangian {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Find the unique g with D(g) = input and zero constant term.
    Antiderivative {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decide membership in the symmetric subspace, with a certificate.
    Symmetric {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate the three equivalent null-Lagrangian conditions.
    Criterion {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate a Novikov expression to its differential polynomial.
    NovEval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Monomial basis of a free-Novikov multidegree component.
    Basis {
        /// Multidegree, like `2,1` or `(2,1)`.
        multidegree: String,
    },
    /// Basis of a symmetric-subspace multidegree component.
    SymBasis {
        /// Multidegree, like `2,1` or `(2,1)`.
        multidegree: String,
    },
    /// Multilinear dimensions in n variables.
    Dim { n: u64 },
    /// Decomposition of the multilinear symmetric component on n+2 letters.
    Decompose { n: usize },
    /// Kostka number for a shape and a content partition.
    Kostka {
        /// Shape, like `(3,1)`.
        beta: String,
        /// Content, like `(2,2)`.
        mu: String,
    },
    /// Whether a partition shape occurs in the decomposition.
    Admissible { beta: String },
    /// Verify a named identity on seeded random substitutions.
    CheckIdentity {
        /// One of: right-symmetry, left-commutativity, tortken,
        /// circ-degree-5, lie-degree-5, triple-derivation.
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
    /// Transform a homogeneous polynomial to slot variables.
    GdTransform {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply the slot-side Euler operator for one variable.
    GdEuler {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        var: u32,
    },
    /// Check the transform intertwines both Euler operators.
    CommuteCheck {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Single variable index (default: all variables of the input).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        var: Option<u32>,
    },
    /// Run the randomized consistency battery.
    SelfTest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
}

/// Dispatch result: exit code plus the streams to print.
#[derive(Debug, PartialEq, Eq)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput { code: 0, stdout, stderr: String::new() }
    }

    fn usage(message: String) -> Self {
        CmdOutput { code: 2, stdout: String::new(), stderr: format!("error: {}", message) }
    }

    fn domain(message: String, json: bool) -> Self {
        let stdout = if json {
            json!({ "error": message }).to_string()
        } else {
            message
        };
        CmdOutput { code: 1, stdout, stderr: String::new() }
    }
}

fn exit_class(e: &Error) -> i32 {
    match e {
        Error::NotExact
        | Error::NotHomogeneous
        | Error::NotNovikov
        | Error::HypothesesNotMet(_)
        | Error::ShapeMismatch(_)
        | Error::EmptyGroup { .. } => 1,
        Error::InvalidMultidegree(_)
        | Error::UnknownIdentity(_)
        | Error::ArityMismatch { .. }
        | Error::InvalidPartition(_)
        | Error::SizeMismatch { .. } => 2,
    }
}

fn report(e: Error, json: bool) -> CmdOutput {
    match exit_class(&e) {
        1 => CmdOutput::domain(e.to_string(), json),
        _ => CmdOutput::usage(e.to_string()),
    }
}

fn parse_diff_arg(src: &str) -> Result<DiffPoly, CmdOutput> {
    parse_diff(src).map_err(|e| CmdOutput::usage(e.to_string()))
}

/// Accepts `2,1` and `(2,1)`.
fn parse_index_list(src: &str) -> Result<Vec<usize>, CmdOutput> {
    let inner = src.trim();
    let inner = inner.strip_prefix('(').unwrap_or(inner);
    let inner = inner.strip_suffix(')').unwrap_or(inner);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CmdOutput::usage(format!("invalid entry `{}` in `{}`", p.trim(), src)))
        })
        .collect()
}

fn parse_partition_arg(src: &str) -> Result<Partition, CmdOutput> {
    let parts = parse_index_list(src)?;
    Partition::new(parts).map_err(|e| CmdOutput::usage(e.to_string()))
}

fn bool_line(b: bool) -> String {
    if b { "true".into() } else { "false".into() }
}

pub fn run(cli: Cli) -> CmdOutput {
    let json = cli.json;
    match cli.command {
        Command::Normalize { expr, mode } => {
            let poly = match mode {
                Mode::Diff => match parse_diff_arg(&expr) {
                    Ok(p) => p,
                    Err(out) => return out,
                },
                Mode::Nov => match parse_nov(&expr) {
                    Ok(e) => e.eval(),
                    Err(e) => return CmdOutput::usage(e.to_string()),
                },
            };
            if json {
                CmdOutput::ok(json!({ "result": poly.to_string() }).to_string())
            } else {
                CmdOutput::ok(poly.to_string())
            }
        }
        Command::Euler { expr, var, vars } => {
            let f = match parse_diff_arg(&expr) {
                Ok(p) => p,
                Err(out) => return out,
            };
            match var {
                Some(k) => {
                    let e = euler(&f, k);
                    if json {
                        CmdOutput::ok(json!({ "var": k, "result": e.to_string() }).to_string())
                    } else {
                        CmdOutput::ok(e.to_string())
                    }
                }
                None => {
                    let n = vars.unwrap_or_else(|| f.max_var());
                    let all = euler_upto(&f, n);
                    if json {
                        let list: Vec<String> = all.iter().map(|e| e.to_string()).collect();
                        CmdOutput::ok(json!({ "result": list }).to_string())
                    } else {
                        let lines: Vec<String> = all
                            .iter()
                            .enumerate()
                            .map(|(i, e)| format!("E^{} = {}", i + 1, e))
                            .collect();
                        CmdOutput::ok(lines.join("\n"))
                    }
                }
            }
        }
        Command::NullLagrangian { expr } => {
            let f = match parse_diff_arg(&expr) {
                Ok(p) => p,
                Err(out) => return out,
            };
            let b = is_null_lagrangian(&f);
            if json {
                CmdOutput::ok(json!({ "result": b }).to_string())
            } else {
                CmdOutput::ok(bool_line(b))
            }
        }
        Command::Antiderivative { expr } => {
            let f = match parse_diff_arg(&expr) {
                Ok(p) => p,
                Err(out) => return out,
            };
            match antiderivative(&f) {
                Ok(g) => {
                    if json {
                        CmdOutput::ok(json!({ "result": g.to_string() }).to_string())
                    } else {
                        CmdOutput::ok(g.to_string())
                    }
                }
                Err(e) => report(e, json),
            }
        }
        Command::Symmetric { expr } => {
            let f = match parse_diff_arg(&expr) {
                Ok(p) => p,
                Err(out) => return out,
            };
            match symmetric_certificate(&f) {
                Some(cert) => {
                    if json {
                        CmdOutput::ok(
                            json!({
                                "result": true,
                                "generator_part": cert.generator_part.to_string(),
                                "antiderivative": cert.antiderivative.to_string(),
                            })
                            .to_string(),
                        )
                    } else {
                        CmdOutput::ok(format!(
                            "true\ngenerator_part = {}\nantiderivative = {}",
                            cert.generator_part, cert.antiderivative
                        ))
                    }
                }
                None => {
                    if json {
                        CmdOutput::ok(json!({ "result": false }).to_string())
                    } else {
                        CmdOutput::ok(bool_line(false))
                    }
                }
            }
        }
        Command::Criterion { expr } => {
            let f = match parse_diff_arg(&expr) {
                Ok(p) => p,
                Err(out) => return out,
            };
            match criterion_check(&f) {
                Ok(r) => {
                    if json {
                        let eulers: Vec<String> = r.euler.iter().map(|e| e.to_string()).collect();
                        CmdOutput::ok(
                            json!({
                                "condition1": r.condition1,
                                "condition2": r.condition2,
                                "condition3": r.condition3,
                                "euler": eulers,
                            })
                            .to_string(),
                        )
                    } else {
                        let mut lines = vec![
                            format!("condition1 = {}", r.condition1),
                            format!("condition2 = {}", r.condition2),
                            format!("condition3 = {}", r.condition3),
                        ];
                        for (i, e) in r.euler.iter().enumerate() {
                            lines.push(format!("E^{} = {}", i + 1, e));
                        }
                        CmdOutput::ok(lines.join("\n"))
                    }
                }
                Err(e) => report(e, json),
            }
        }
        Command::NovEval { expr } => match parse_nov(&expr) {
            Ok(e) => {
                let poly = e.eval();
                if json {
                    CmdOutput::ok(json!({ "result": poly.to_string() }).to_string())
                } else {
                    CmdOutput::ok(poly.to_string())
                }
            }
            Err(e) => CmdOutput::usage(e.to_string()),
        },
        Command::Basis { multidegree } => {
            let lambda = match parse_index_list(&multidegree) {
                Ok(l) => l,
                Err(out) => return out,
            };
            match nov_basis(&lambda) {
                Ok(basis) => {
                    let rendered: Vec<String> = basis.iter().map(|m| m.to_string()).collect();
                    if json {
                        CmdOutput::ok(json!({ "result": rendered }).to_string())
                    } else {
                        CmdOutput::ok(rendered.join("\n"))
                    }
                }
                Err(e) => report(e, json),
            }
        }
        Command::SymBasis { multidegree } => {
            let lambda = match parse_index_list(&multidegree) {
                Ok(l) => l,
                Err(out) => return out,
            };
            match sym_basis(&lambda) {
                Ok(basis) => {
                    let rendered: Vec<String> =
                        basis.iter().map(|e| e.poly().to_string()).collect();
                    if json {
                        CmdOutput::ok(json!({ "result": rendered }).to_string())
                    } else {
                        CmdOutput::ok(rendered.join("\n"))
                    }
                }
                Err(e) => report(e, json),
            }
        }
        Command::Dim { n } => {
            let nov = match multilinear_nov_dim(n as usize) {
                Ok(v) => v,
                Err(e) => return report(e, json),
            };
            let sym = match sym_multilinear_dim(n as usize) {
                Ok(v) => v,
                Err(e) => return report(e, json),
            };
            if json {
                CmdOutput::ok(json!({ "n": n, "multilinear": nov, "symmetric": sym }).to_string())
            } else {
                CmdOutput::ok(format!("multilinear = {}\nsymmetric = {}", nov, sym))
            }
        }
        Command::Decompose { n } => match sym_decomposition(n) {
            Ok(table) => {
                if json {
                    let terms: Vec<serde_json::Value> = table
                        .entries
                        .iter()
                        .map(|(beta, mult)| {
                            json!({
                                "beta": beta.parts(),
                                "multiplicity": mult,
                                "specht_dim": specht_dim(beta),
                                "admissible": is_admissible(beta).unwrap_or(false),
                            })
                        })
                        .collect();
                    CmdOutput::ok(
                        json!({ "n": table.n, "terms": terms, "total_dim": table.total_dim() })
                            .to_string(),
                    )
                } else {
                    let mut lines = Vec::new();
                    for (beta, mult) in &table.entries {
                        let adm = if is_admissible(beta).unwrap_or(false) {
                            "admissible"
                        } else {
                            "not admissible"
                        };
                        lines.push(format!(
                            "{}: multiplicity = {}, dim = {}, {}",
                            beta,
                            mult,
                            specht_dim(beta),
                            adm
                        ));
                    }
                    lines.push(format!("total_dim = {}", table.total_dim()));
                    CmdOutput::ok(lines.join("\n"))
                }
            }
            Err(e) => report(e, json),
        },
        Command::Kostka { beta, mu } => {
            let beta = match parse_partition_arg(&beta) {
                Ok(p) => p,
                Err(out) => return out,
            };
            let mu = match parse_partition_arg(&mu) {
                Ok(p) => p,
                Err(out) => return out,
            };
            match kostka(&beta, &mu) {
                Ok(k) => {
                    if json {
                        CmdOutput::ok(json!({ "result": k }).to_string())
                    } else {
                        CmdOutput::ok(k.to_string())
                    }
                }
                Err(e) => report(e, json),
            }
        }
        Command::Admissible { beta } => {
            let beta = match parse_partition_arg(&beta) {
                Ok(p) => p,
                Err(out) => return out,
            };
            match is_admissible(&beta) {
                Ok(b) => {
                    if json {
                        CmdOutput::ok(json!({ "result": b }).to_string())
                    } else {
                        CmdOutput::ok(bool_line(b))
                    }
                }
                Err(e) => report(e, json),
            }
        }
        Command::CheckIdentity { name, seed, trials } => {
            let id: Identity = match name.parse() {
                Ok(i) => i,
                Err(e) => return report(e, json),
            };
            let holds = identity_holds_on_samples(id, seed, trials);
            if json {
                CmdOutput::ok(
                    json!({ "result": holds, "trials": trials, "seed": seed }).to_string(),
                )
            } else {
                CmdOutput::ok(bool_line(holds))
            }
        }
        Command::GdTransform { expr } => {
            let f = match parse_diff_arg(&expr) {
                Ok(p) => p,
                Err(out) => return out,
            };
            match gd_transform(&f) {
                Ok(t) => {
                    if json {
                        CmdOutput::ok(
                            json!({ "shape": t.shape().0, "result": t.to_string() }).to_string(),
                        )
                    } else {
                        CmdOutput::ok(format!("shape = {}\n{}", t.shape(), t))
                    }
                }
                Err(e) => report(e, json),
            }
        }
        Command::GdEuler { expr, var } => {
            let f = match parse_diff_arg(&expr) {
                Ok(p) => p,
                Err(out) => return out,
            };
            let result = gd_transform(&f).and_then(|t| gd_euler(&t, var));
            match result {
                Ok(t) => {
                    if json {
                        CmdOutput::ok(
                            json!({ "shape": t.shape().0, "result": t.to_string() }).to_string(),
                        )
                    } else {
                        CmdOutput::ok(format!("shape = {}\n{}", t.shape(), t))
                    }
                }
                Err(e) => report(e, json),
            }
        }
        Command::CommuteCheck { expr, var } => {
            let f = match parse_diff_arg(&expr) {
                Ok(p) => p,
                Err(out) => return out,
            };
            let ks: Vec<u32> = match var {
                Some(k) => vec![k],
                None => {
                    let Multidegree::Homogeneous(lambda) = f.multidegree() else {
                        return report(Error::NotHomogeneous, json);
                    };
                    (1..=lambda.len() as u32)
                        .filter(|&k| lambda[(k - 1) as usize] > 0)
                        .collect()
                }
            };
            let mut all = true;
            for &k in &ks {
                match commute_check(&f, k) {
                    Ok(r) => all &= r.holds(),
                    Err(e) => return report(e, json),
                }
            }
            if json {
                CmdOutput::ok(json!({ "result": all, "vars": ks }).to_string())
            } else {
                CmdOutput::ok(bool_line(all))
            }
        }
        Command::SelfTest { seed, trials } => match self_test(seed, trials) {
            Ok(checks) => {
                if json {
                    CmdOutput::ok(
                        json!({ "result": "ok", "checks": checks, "seed": seed }).to_string(),
                    )
                } else {
                    CmdOutput::ok(format!("ok: {} checks passed (seed {})", checks, seed))
                }
            }
            Err(msg) => CmdOutput::domain(format!("self-test failed: {}", msg), json),
        },
    }
}

fn identity_holds_on_samples(id: Identity, seed: u64, trials: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // quintic identities expand to hundreds of thousands of monomials on
    // larger inputs; keep their samples lighter without losing coverage
    let sampler = PolySampler {
        vars: 3,
        max_terms: if id.arity() >= 5 { 2 } else { 3 },
        max_factors: 3,
        max_order: if id.arity() >= 5 { 2 } else { 3 },
        coeff_bound: 10,
    };
    for _ in 0..trials {
        let args: Vec<DiffPoly> = (0..id.arity()).map(|_| sampler.poly(&mut rng)).collect();
        match id.holds(&args) {
            Ok(true) => {}
            _ => return false,
        }
    }
    true
}

/// Randomized consistency battery: identities, the variational complex,
/// antiderivative round-trips, criterion agreement, and the transform
/// intertwining relation.
fn self_test(seed: u64, trials: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampler = PolySampler {
        vars: 3,
        max_terms: 3,
        max_factors: 3,
        max_order: 3,
        coeff_bound: 10,
    };
    let mut checks = 0usize;

    let light = PolySampler { max_terms: 2, max_order: 2, ..sampler };
    for id in Identity::ALL {
        let s = if id.arity() >= 5 { &light } else { &sampler };
        for t in 0..trials {
            let args: Vec<DiffPoly> = (0..id.arity()).map(|_| s.poly(&mut rng)).collect();
            let ok = id
                .holds(&args)
                .map_err(|e| format!("identity {}: {}", id, e))?;
            if !ok {
                return Err(format!("identity {} is nonzero on trial {}", id, t));
            }
            checks += 1;
        }
    }

    for t in 0..trials {
        let g = sampler.poly(&mut rng);
        let f = g.derive();
        if !is_null_lagrangian(&f) {
            return Err(format!("Euler operators do not kill a derivative (trial {})", t));
        }
        match antiderivative(&f) {
            Ok(h) if h == g => checks += 1,
            Ok(_) => return Err(format!("antiderivative round-trip mismatch (trial {})", t)),
            Err(e) => return Err(format!("antiderivative failed on a derivative: {}", e)),
        }
    }

    let lambdas: [&[usize]; 4] = [&[1, 1], &[2, 1], &[1, 1, 1], &[2, 2]];
    for t in 0..trials {
        let lambda = lambdas[t % lambdas.len()];
        let f = sampler.novikov_element(&mut rng, lambda);
        debug_assert!(is_novikov_element(&f));
        let r = criterion_check(&f).map_err(|e| format!("criterion: {}", e))?;
        if !r.consistent() {
            return Err(format!("criterion conditions disagree on {}", f));
        }
        checks += 1;
    }

    for t in 0..trials {
        let lambda = lambdas[t % lambdas.len()];
        let d = t % 4;
        let f = sampler.component_element(&mut rng, lambda, d);
        for k in 1..=lambda.len() as u32 {
            let r = commute_check(&f, k).map_err(|e| format!("commute check: {}", e))?;
            if !r.holds() {
                return Err(format!("transform does not intertwine E^{} on {}", k, f));
            }
            checks += 1;
        }
    }

    Ok(checks)
}
