//! End-to-end acceptance: one line per criterion, with a wall-clock bound each.

use std::cmp::Ordering;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sigmaforge::atoms::{enumerate_atoms, factor_atoms, is_atom};
use sigmaforge::cyclic::{orbit_polynomial, orbit_sum};
use sigmaforge::freering::parse_monomial;
use sigmaforge::ideal::{
    canonical_quadratic, expand_diagonal_commutator, quotient_dim, run_check, spans_equal, Eq4Reading, GeneratorSet,
    IdealOracle,
};
use sigmaforge::matmodel::{check_c12, family_member, Family, SearchParams};
use sigmaforge::n3lab::verify_n3_suite;
use sigmaforge::report::{all_passed, CheckReport};
use sigmaforge::rewrite::{eval_atom_expr, rewrite_invariant, sigma_alpha_decomposition, AtomExpression};
use sigmaforge::sigma::{
    build_sigma, char_poly_image, inverse_identity, sigma_via_recursion_i, sigma_via_recursion_ii,
};
use sigmaforge::{Coefficient, Monomial, Polynomial};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn reports_pass(label: &str, reports: &[CheckReport]) -> Result<usize, String> {
    if reports.is_empty() {
        return Err(format!("{label}: no report lines"));
    }
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(format!("{label}: {}", r.to_json_line())),
        None => Ok(reports.len()),
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(1..=n)).collect()
}

fn q(v: i64) -> Coefficient {
    Coefficient::from_integer(v.into())
}

fn sigma_construction() -> Outcome {
    let mut total = 0;
    for n in 3..=6 {
        for k in 0..=n {
            let s = build_sigma(n, k as i64);
            ensure(s.len() == binomial(n, k), || format!("n={n} k={k}: {} terms", s.len()))?;
            ensure(s == sigma_via_recursion_i(n, k as i64), || {
                format!("n={n} k={k}: first-letter recursion")
            })?;
            ensure(s == sigma_via_recursion_ii(n, k as i64), || {
                format!("n={n} k={k}: last-letter recursion")
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} (n, k) pairs"))
}

fn generator_sets_agree() -> Outcome {
    let mut cols = Vec::new();
    for (n, top) in [(3, 6), (4, 5)] {
        let comm = GeneratorSet::comm(n);
        let diff = GeneratorSet::diff(n);
        for d in 2..=top {
            ensure(spans_equal(&comm, &diff, d), || format!("n={n} d={d}: spans differ"))?;
        }
        cols.push(format!("n={n} d<={top} ({} columns)", n.pow(top)));
    }
    Ok(cols.join(", "))
}

fn off_diagonal_basis() -> Outcome {
    let mut lines = 0;
    for n in 3..=6 {
        let oracle = IdealOracle::comm(n);
        lines += reports_pass(
            "independence",
            &run_check("thm_1_3_independence", &oracle, None).map_err(|e| e.to_string())?,
        )?;
        lines += reports_pass("eq_4", &run_check("eq_4", &oracle, None).map_err(|e| e.to_string())?)?;
        for k in 2..=n {
            let e = expand_diagonal_commutator(&oracle, k).map_err(|e| e.to_string())?;
            let diff = &Polynomial::bracket(n, k, k - 1).unwrap() - &e.expression;
            ensure(oracle.contains(&diff), || {
                format!("n={n} k={k}: expansion not certified")
            })?;
            let expected = if k == n {
                Eq4Reading::Both
            } else {
                Eq4Reading::SecondSumAdded
            };
            ensure(e.reading == expected, || {
                format!("n={n} k={k}: reading {:?}", e.reading)
            })?;
        }
    }
    let oracle = IdealOracle::comm(3);
    let b = |i, j| Polynomial::bracket(3, i, j).unwrap();
    for (x, y) in [((1, 2), (2, 3)), ((2, 3), (3, 1)), ((1, 2), (3, 1))] {
        ensure(oracle.contains(&(&b(x.0, x.1) - &b(y.0, y.1))), || {
            format!("n=3: {x:?} vs {y:?}")
        })?;
    }
    ensure(!oracle.contains(&b(1, 2)), || "n=3: [1,2] is in the ideal".into())?;
    Ok(format!("{lines} report lines for n=3..6, n=3 common value certified"))
}

fn commutators_survive() -> Outcome {
    let mut pairs = 0;
    for n in 3..=5 {
        let oracle = IdealOracle::comm(n);
        for i in 1..=n {
            for j in i + 1..=n {
                let m = oracle.member(&Polynomial::bracket(n, i, j).unwrap(), false);
                ensure(!m.is_member && !m.residuals.is_empty(), || {
                    format!("n={n}: [{i},{j}] in the ideal")
                })?;
                pairs += 1;
            }
        }
        reports_pass(
            "cor_1_4",
            &run_check("cor_1_4", &oracle, None).map_err(|e| e.to_string())?,
        )?;
    }
    Ok(format!("{pairs} commutators with nonzero residuals"))
}

fn alternating_sum_identity() -> Outcome {
    for n in 3..=5 {
        let oracle = IdealOracle::comm(n);
        reports_pass(
            "cor_1_5",
            &run_check("cor_1_5", &oracle, None).map_err(|e| e.to_string())?,
        )?;
    }
    let oracle = IdealOracle::comm(3);
    let b = |i, j| Polynomial::bracket(3, i, j).unwrap();
    let p = &(&b(2, 1) + &b(3, 2)) - &b(1, 3).scale_int(2);
    ensure(oracle.contains(&p), || {
        "n=3: [2,1] + [3,2] - 2[1,3] not in the ideal".into()
    })?;
    Ok("n=3,4,5 certified; n=3 form [2,1] + [3,2] = 2[1,3]".into())
}

fn quadratic_dimension() -> Outcome {
    let mut dims = Vec::new();
    for n in 3..=6 {
        let oracle = IdealOracle::comm(n);
        let dim = quotient_dim(&oracle, 2);
        ensure(dim == n * n - n + 1, || format!("n={n}: dimension {dim}"))?;
        dims.push(dim.to_string());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let oracles: Vec<IdealOracle> = (3..=5).map(IdealOracle::comm).collect();
    for trial in 0..100 {
        let n = 3 + trial % 3;
        let oracle = &oracles[n - 3];
        let mut p = Polynomial::zero(n);
        for _ in 0..rng.gen_range(1..6) {
            let w = random_word(&mut rng, n, 2);
            p.add_term(Monomial::from_letters(n, &w).unwrap(), q(rng.gen_range(-5..=5)));
        }
        if p.is_zero() {
            continue;
        }
        let form = canonical_quadratic(oracle, &p).map_err(|e| e.to_string())?;
        ensure(form.coordinates().len() == n * n - n + 1, || "coordinate count".into())?;
        let back = form.to_polynomial();
        ensure(oracle.contains(&(&back - &p)), || {
            format!("{p}: canonical form not congruent")
        })?;
        ensure(
            canonical_quadratic(oracle, &back).map_err(|e| e.to_string())? == form,
            || format!("{p}: canonical form not unique"),
        )?;
    }
    Ok(format!("dims {} for n=3..6, 100 round trips", dims.join(", ")))
}

fn root_identities() -> Outcome {
    let mut lines = 0;
    for n in 3..=4 {
        let oracle = IdealOracle::comm(n);
        for i in 1..=n {
            ensure(oracle.contains(&char_poly_image(n, i)), || {
                format!("n={n}: f(x{i}) not in the ideal")
            })?;
            ensure(oracle.contains(&inverse_identity(n, i)), || {
                format!("n={n} i={i}: inverse identity")
            })?;
        }
        for check in ["root_identity", "factored_coeffs", "inverse_identity"] {
            lines += reports_pass(check, &run_check(check, &oracle, None).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(format!("{lines} report lines for n=3,4"))
}

fn atom_combinatorics() -> Outcome {
    for n in 3..=4 {
        for d in 1..=5u32 {
            let count = enumerate_atoms(n, d).len();
            ensure(count == (n - 1).pow(d - 1), || format!("n={n} d={d}: {count} atoms"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let n = rng.gen_range(3..=5);
        let len = rng.gen_range(1..=8);
        let mut w = random_word(&mut rng, n, len);
        w[0] = 1;
        let m = Monomial::from_letters(n, &w).unwrap();
        let f = factor_atoms(n, &m).map_err(|e| e.to_string())?;
        ensure(f.factors().iter().all(|a| is_atom(a).unwrap()), || {
            format!("{m}: non-atom factor")
        })?;
        ensure(f.fold(n).map_err(|e| e.to_string())? == m, || {
            format!("{m}: fold mismatch")
        })?;
    }
    for _ in 0..10_000 {
        let ms: Vec<Monomial> = (0..3)
            .map(|_| {
                let len = rng.gen_range(0..=4);
                Monomial::from_letters(4, &random_word(&mut rng, 4, len)).unwrap()
            })
            .collect();
        let (a, b, c) = (&ms[0], &ms[1], &ms[2]);
        let ab = a.wolf_cmp(b);
        ensure(ab == b.wolf_cmp(a).reverse(), || format!("{a} vs {b}: asymmetric"))?;
        ensure((ab == Ordering::Equal) == (a == b), || {
            format!("{a} vs {b}: trichotomy")
        })?;
        if ab != Ordering::Greater && b.wolf_cmp(c) != Ordering::Greater {
            ensure(a.wolf_cmp(c) != Ordering::Greater, || {
                format!("{a}, {b}, {c}: not transitive")
            })?;
        }
    }
    Ok("atom counts n=3,4 d<=5, 500 factorizations, 10000 triples".into())
}

fn invariant_rewriting() -> Outcome {
    let bar = |s: &str| orbit_polynomial(3, &parse_monomial(s, 3).unwrap()).unwrap();
    let square = rewrite_invariant(&bar("x1^2")).map_err(|e| e.to_string())?.to_string();
    ensure(square == "A[x1]^2 - A[x1*x2] - A[x1*x3]", || {
        format!("square: {square}")
    })?;
    let cube = rewrite_invariant(&bar("x1^3")).map_err(|e| e.to_string())?;
    let atoms = |names: &[&str]| -> Vec<Monomial> { names.iter().map(|s| parse_monomial(s, 3).unwrap()).collect() };
    let mut expected = AtomExpression::zero(3);
    expected.add_term(atoms(&["x1", "x1", "x1"]), q(1)).unwrap();
    for a in ["x1*x2*x1", "x1*x2*x3", "x1*x3*x1", "x1*x3*x2"] {
        expected.add_term(atoms(&[a]), q(1)).unwrap();
    }
    for w in [["x1", "x1*x2"], ["x1*x2", "x1"], ["x1", "x1*x3"], ["x1*x3", "x1"]] {
        expected.add_term(atoms(&w), q(-1)).unwrap();
    }
    ensure(cube == expected, || format!("cube: {cube}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.gen_range(3..=4);
        let mut p = Polynomial::zero(n);
        for _ in 0..rng.gen_range(1..4) {
            let len = rng.gen_range(0..=5);
            p.add_term(
                Monomial::from_letters(n, &random_word(&mut rng, n, len)).unwrap(),
                q(rng.gen_range(-3..=3)),
            );
        }
        let inv = orbit_sum(&p);
        let e = rewrite_invariant(&inv).map_err(|e| e.to_string())?;
        ensure(eval_atom_expr(&e) == inv, || format!("{inv}: round trip"))?;
    }
    let table: Vec<Vec<u64>> = (2..=4)
        .map(|k| sigma_alpha_decomposition(4, k).map(|v| v.into_iter().map(|(a, _)| a).collect()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(table == vec![vec![3, 2, 1], vec![2, 1, 1], vec![1]], || {
        format!("n=4 table {table:?}")
    })?;
    Ok("both worked examples, 200 round trips, n=4 table 3,2,1 / 2,1,1 / 1".into())
}

fn three_variable_suite() -> Outcome {
    let oracle = IdealOracle::comm(3);
    let reports = verify_n3_suite(&oracle, 6).map_err(|e| e.to_string())?;
    let lines = reports_pass("n3", &reports)?;
    for name in [
        "n3.a",
        "n3.b",
        "n3.c",
        "n3.d",
        "n3.e",
        "n3.f",
        "n3.base_table",
        "n3.reduction",
        "n3.c_cubed",
    ] {
        ensure(reports.iter().any(|r| r.check == name), || format!("missing {name}"))?;
    }
    ensure(all_passed(&reports), || "suite failed".into())?;
    Ok(format!("{lines} lines at degree bound 6"))
}

fn matrix_relations() -> Outcome {
    let outcomes: Vec<Result<bool, String>> = (0..10_000usize)
        .into_par_iter()
        .map(|i| {
            let params = SearchParams {
                n: 3 + i % 2,
                dim: 2 + (i / 2) % 2,
                family: Family::ALL[i % 3],
                seed: 11,
                budget: 1,
            };
            check_c12(&family_member(&params, i))
                .map(|(inv, _)| inv)
                .map_err(|e| format!("tuple {i}: {e}"))
        })
        .collect();
    let mut satisfying = 0;
    for o in outcomes {
        satisfying += o? as usize;
    }
    Ok(format!("10000 tuples agree, {satisfying} satisfy the relations"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("sigma construction", Duration::from_secs(1), sigma_construction),
        (
            "generator sets span the same ideal",
            Duration::from_secs(60),
            generator_sets_agree,
        ),
        (
            "off-diagonal basis and diagonal expansion",
            Duration::from_secs(5),
            off_diagonal_basis,
        ),
        (
            "commutators are not in the ideal",
            Duration::from_secs(5),
            commutators_survive,
        ),
        (
            "alternating commutator sum",
            Duration::from_secs(5),
            alternating_sum_identity,
        ),
        (
            "quadratic quotient dimension",
            Duration::from_secs(10),
            quadratic_dimension,
        ),
        (
            "root, factorization and inverse identities",
            Duration::from_secs(60),
            root_identities,
        ),
        (
            "atom combinatorics and Wolf order",
            Duration::from_secs(10),
            atom_combinatorics,
        ),
        ("invariant rewriting", Duration::from_secs(10), invariant_rewriting),
        ("three-variable suite", Duration::from_secs(120), three_variable_suite),
        ("matrix relations", Duration::from_secs(30), matrix_relations),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        writeln!(err, "criterion {:>2} {status} [{elapsed:.2?}] {name}: {detail}", i + 1).unwrap();
        if status == "FAIL" {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
