use serde_json::{json, Value};
use sigmaforge::atoms::{enumerate_atoms, factor_atoms};
use sigmaforge::cyclic::{orbit, orbit_polynomial};
use sigmaforge::freering::{parse_monomial, parse_poly};
use sigmaforge::ideal::{default_max_degree, run_check, GeneratorSet, IdealOracle};
use sigmaforge::matmodel::{zero_divisor_search, SearchParams};
use sigmaforge::n3lab::{reduce_to_s_form, verify_n3_suite, Symbol, DEFAULT_DEGREE_BOUND};
use sigmaforge::report::{all_passed, CheckReport};
use sigmaforge::rewrite::rewrite_invariant;
use sigmaforge::sigma::build_sigma;
use sigmaforge::{Error, Polynomial};

use crate::{Arity, Command, Gens, N3Action, RunConfig};

pub enum Outcome {
    Pass,
    Fail,
}

pub enum Failure {
    /// Bad input; exit code 2.
    Usage(String),
    /// A computation that should hold did not; exit code 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EquivalenceViolated { .. } | Error::Uncertified(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn require_n(n: usize) -> Result<(), Failure> {
    if n < 3 {
        return Err(Failure::Usage(format!(
            "--n {n} is not supported: n >= 3 is assumed throughout (for n = 2 the ideal equals the commutator ideal)"
        )));
    }
    Ok(())
}

/// The largest variable index in `text`, or 3 if smaller.
fn infer_n(text: &str, arity: &Arity) -> Result<usize, Failure> {
    if let Some(n) = arity.n {
        require_n(n)?;
        return Ok(n);
    }
    let p = parse_poly(text, usize::MAX)?;
    Ok(p.terms().map(|(m, _)| m.max_index()).max().unwrap_or(0).max(3))
}

fn emit(config: &RunConfig, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    if config.json {
        println!("{}", value());
    } else {
        println!("{}", text());
    }
}

fn emit_reports(config: &RunConfig, reports: &[CheckReport]) -> Outcome {
    for r in reports {
        if config.json {
            println!("{}", r.to_json_line());
        } else {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let degree = r.degree.map(|d| format!(" degree={d}")).unwrap_or_default();
            println!("{status} {} n={}{degree} {}", r.check, r.n, r.witness);
        }
    }
    if all_passed(reports) {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn check_degree(p: &Polynomial, bound: u32) -> Result<(), Failure> {
    match p.degree() {
        Some(d) if d > bound => Err(Error::DegreeAboveBound { degree: d, bound }.into()),
        _ => Ok(()),
    }
}

pub fn run(config: &RunConfig) -> CmdResult {
    match &config.command {
        Command::Sigma { n, k } => {
            require_n(*n)?;
            if *k > *n {
                return Err(Failure::Usage(format!("k = {k} exceeds n = {n}")));
            }
            let p = build_sigma(*n, *k as i64);
            emit(
                config,
                || p.to_string(),
                || json!({"n": n, "k": k, "polynomial": p.to_string()}),
            );
            Ok(Outcome::Pass)
        }
        Command::Orbit { monomial, arity } => {
            let n = infer_n(monomial, arity)?;
            let m = parse_monomial(monomial, n)?;
            let images = orbit(n, &m)?;
            let p = orbit_polynomial(n, &m)?;
            emit(
                config,
                || p.to_string(),
                || {
                    json!({
                        "n": n,
                        "monomial": m.to_string(),
                        "images": images.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "polynomial": p.to_string(),
                    })
                },
            );
            Ok(Outcome::Pass)
        }
        Command::Factor { monomial, arity } => {
            let n = infer_n(monomial, arity)?;
            let m = parse_monomial(monomial, n)?;
            let w = factor_atoms(n, &m)?;
            emit(
                config,
                || w.to_string(),
                || json!({"n": n, "monomial": m.to_string(), "atoms": w.factors().iter().map(ToString::to_string).collect::<Vec<_>>()}),
            );
            Ok(Outcome::Pass)
        }
        Command::Atoms { n, d } => {
            require_n(*n)?;
            if *d == 0 {
                return Err(Failure::Usage("d must be at least 1".into()));
            }
            let atoms: Vec<String> = enumerate_atoms(*n, *d).iter().map(ToString::to_string).collect();
            emit(
                config,
                || atoms.join("\n"),
                || json!({"n": n, "d": d, "count": atoms.len(), "atoms": atoms}),
            );
            Ok(Outcome::Pass)
        }
        Command::Rewrite { poly, arity } => {
            let n = infer_n(poly, arity)?;
            let p = parse_poly(poly, n)?;
            let e = rewrite_invariant(&p)?;
            emit(
                config,
                || e.to_string(),
                || json!({"n": n, "input": p.to_string(), "expression": e.to_string()}),
            );
            Ok(Outcome::Pass)
        }
        Command::Member {
            poly,
            n,
            gens,
            certify,
            max_degree,
        } => {
            require_n(*n)?;
            let p = parse_poly(poly, *n)?;
            check_degree(&p, max_degree.unwrap_or_else(|| default_max_degree(*n)))?;
            let set = match gens {
                Gens::Comm => GeneratorSet::comm(*n),
                Gens::Diff => GeneratorSet::diff(*n),
            };
            let oracle = IdealOracle::new(set);
            let m = oracle.member(&p, *certify);
            let certificate: Option<Vec<String>> = m.certificate.as_ref().map(|c| {
                c.terms
                    .iter()
                    .map(|t| format!("({}) * {} * g{} * {}", t.coeff, t.left, t.generator + 1, t.right))
                    .collect()
            });
            let generators: Vec<String> = oracle
                .generators()
                .generators()
                .iter()
                .map(ToString::to_string)
                .collect();
            let report = CheckReport::new(
                "member",
                *n,
                p.degree(),
                m.is_member,
                json!({
                    "gens": oracle.generators().kind().to_string(),
                    "input": p.to_string(),
                    "residual": m.residuals.values().map(ToString::to_string).collect::<Vec<_>>(),
                    "certificate": certificate,
                    "generators": if *certify { Some(generators) } else { None },
                }),
            );
            Ok(emit_reports(config, &[report]))
        }
        Command::Verify { check, n, max_degree } => {
            require_n(*n)?;
            let oracle = IdealOracle::comm(*n);
            let reports = run_check(check, &oracle, *max_degree)?;
            Ok(emit_reports(config, &reports))
        }
        Command::N3 { action } => {
            let oracle = IdealOracle::comm(3);
            match action {
                N3Action::Reduce { poly, max_degree } => {
                    let p = parse_poly(poly, 3)?;
                    let form = reduce_to_s_form(&oracle, &p, max_degree.unwrap_or(DEFAULT_DEGREE_BOUND))?;
                    let names = Symbol::NAMES;
                    emit(
                        config,
                        || form.to_string(),
                        || {
                            json!({
                                "input": p.to_string(),
                                "form": form.to_string(),
                                "z0": form.z[0].display_with(&names).to_string(),
                                "z1": form.z[1].display_with(&names).to_string(),
                                "z2": form.z[2].display_with(&names).to_string(),
                                "certified": true,
                            })
                        },
                    );
                    Ok(Outcome::Pass)
                }
                N3Action::Verify { max_degree } => {
                    let reports = verify_n3_suite(&oracle, max_degree.unwrap_or(DEFAULT_DEGREE_BOUND))?;
                    Ok(emit_reports(config, &reports))
                }
            }
        }
        Command::Search {
            n,
            dim,
            family,
            seed,
            budget,
        } => {
            require_n(*n)?;
            let params = SearchParams {
                n: *n,
                dim: *dim,
                family: (*family).into(),
                seed: *seed,
                budget: *budget,
            };
            let report = zero_divisor_search(&params)?;
            emit(
                config,
                || {
                    let mut lines = vec![format!(
                        "family={} n={} dim={} seed={} tried={} satisfying={} candidates={}{}",
                        report.family,
                        report.n,
                        report.dim,
                        report.seed,
                        report.tried,
                        report.satisfying_relations,
                        report.candidates.len(),
                        if report.budget_exhausted {
                            " (budget exhausted)"
                        } else {
                            ""
                        },
                    )];
                    for c in &report.candidates {
                        lines.push(format!(
                            "candidate {}: min product rank {}, vanishing {:?}, matrices {:?}",
                            c.index, c.min_product_rank, c.vanishing_products, c.mats
                        ));
                    }
                    lines.join("\n")
                },
                || serde_json::to_value(&report).expect("report serializes"),
            );
            Ok(Outcome::Pass)
        }
    }
}
