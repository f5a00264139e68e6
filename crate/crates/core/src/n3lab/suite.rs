use serde_json::json;

use super::reduce::{base_table, certify_reduction, reduce_to_s_form, Reducer};
use super::sreduced::{SReduced, Symbol};
use super::{c_poly, d_poly, n3_generators, x};
use crate::atoms::enumerate_atoms;
use crate::cyclic::orbit_polynomial;
use crate::freering::{Monomial, Polynomial};
use crate::ideal::{canonical_quadratic, certify_by_multiples, quadratic_basis_polys, IdealOracle};
use crate::linalg::{kernel, rank, SparseRow};
use crate::report::CheckReport;
use crate::sigma::build_sigma;
use crate::Result;

fn next(i: usize, k: usize) -> usize {
    (i - 1 + k) % 3 + 1
}

fn membership(oracle: &IdealOracle, check: &str, p: &Polynomial, relation: String) -> CheckReport {
    let m = oracle.member(p, false);
    CheckReport::new(
        check,
        3,
        p.degree(),
        m.is_member,
        json!({
            "relation": relation,
            "residual": m.residuals.values().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    )
}

fn c_conjugation(oracle: &IdealOracle) -> Vec<CheckReport> {
    let c = c_poly();
    let mut out = Vec::new();
    for i in 1..=3 {
        let j = next(i, 1);
        let p = &(&x(i) * &c) - &(&c * &x(j));
        out.push(membership(oracle, "n3.a", &p, format!("x{i}*c = c*x{j}")));
    }
    let c2 = c.pow(2);
    for i in 1..=3 {
        let j = next(i, 2);
        let p = &(&x(i) * &c2) - &(&c2 * &x(j));
        out.push(membership(oracle, "n3.b", &p, format!("x{i}*c^2 = c^2*x{j}")));
    }
    let c3 = c.pow(3);
    for i in 1..=3 {
        let target = &(&x(i) * &c3) - &(&c3 * &x(i));
        let pieces: Vec<_> = (0..3)
            .map(|k| {
                let (a, b) = (next(i, k), next(i, k + 1));
                let m = &(&x(a) * &c) - &(&c * &x(b));
                (c.pow(k as u32), m, c.pow(2 - k as u32))
            })
            .collect();
        let ok = certify_by_multiples(oracle, &target, &pieces);
        out.push(CheckReport::new(
            "n3.b",
            3,
            Some(7),
            ok,
            json!({
                "relation": format!("x{i}*c^3 = c^3*x{i}"),
                "certificate": "sum of c^k (x_a c - c x_(a+1)) c^(2-k) over three consecutive a",
            }),
        ));
    }
    out
}

fn cubic_orbit_centrality(oracle: &IdealOracle) -> Vec<CheckReport> {
    let d = d_poly();
    let e = orbit_polynomial(3, &Monomial::from_letters_unchecked(&[1, 3, 1])).expect("valid");
    let mut out = Vec::new();
    for (name, p) in [("x1*x2*x1", &d), ("x1*x3*x1", &e)] {
        for i in 1..=3 {
            let comm = x(i).commutator(p);
            out.push(membership(oracle, "n3.c", &comm, format!("[x{i}, orbit({name})] = 0")));
        }
    }
    out
}

fn c_not_central(oracle: &IdealOracle) -> CheckReport {
    let p = &Polynomial::word(3, &[1, 3, 2]).expect("valid") - &Polynomial::word(3, &[3, 2, 1]).expect("valid");
    let m = oracle.member(&p, false);
    CheckReport::new(
        "n3.d",
        3,
        Some(3),
        !m.is_member,
        json!({
            "non_member": p.to_string(),
            "residual": m.residuals.values().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    )
}

fn cubic_for_quadratic_orbit(oracle: &IdealOracle) -> CheckReport {
    let t = orbit_polynomial(3, &Monomial::from_letters_unchecked(&[1, 2])).expect("valid");
    let s2 = build_sigma(3, 2);
    let c3 = c_poly().pow(3);
    let head = &(&t.pow(3) - &(&s2 * &t.pow(2)).scale_int(3)) - &(&s2.pow(3) + &c3);
    let binomial = &head + &(&s2.pow(2) * &t).scale_int(3);
    let printed = &head + &(&s2 * &t).scale_int(3);
    let binomial_ok = oracle.contains(&binomial);
    let printed_ok = oracle.contains(&printed);
    CheckReport::new(
        "n3.e",
        3,
        Some(6),
        binomial_ok && !printed_ok,
        json!({
            "verified_cubic": "t^3 - 3*s2*t^2 + 3*s2^2*t - (s2^3 + c^3), t = orbit(x1*x2)",
            "binomial_member": binomial_ok,
            "linear_coefficient_3_s2_member": printed_ok,
        }),
    )
}

fn central_quadratics(oracle: &IdealOracle) -> CheckReport {
    let basis = quadratic_basis_polys(3);
    let slice = oracle.slice(3);
    let cols = slice.basis().len();
    let images: Vec<SparseRow> = basis
        .iter()
        .map(|b| {
            let mut row = SparseRow::new();
            for i in 1..=3 {
                let r = slice.rref().reduce(&slice.basis().to_row(&x(i).commutator(b)));
                row.extend(r.into_iter().map(|(c, v)| (c + (i - 1) * cols, v)));
            }
            row
        })
        .collect();
    let ker = kernel(3 * cols, &images);
    let to_row = |v: &[crate::Coefficient]| -> SparseRow {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(i, c)| (i, c.clone()))
            .collect()
    };
    let s1sq = canonical_quadratic(oracle, &build_sigma(3, 1).pow(2)).expect("quadratic");
    let s2 = canonical_quadratic(oracle, &build_sigma(3, 2)).expect("quadratic");
    let expected = [to_row(&s1sq.coordinates()), to_row(&s2.coordinates())];
    let n = basis.len();
    let expected_rank = rank(n, expected.iter().cloned());
    let joint = rank(n, ker.iter().map(|v| to_row(v)).chain(expected.iter().cloned()));
    CheckReport::new(
        "n3.f",
        3,
        Some(2),
        ker.len() == 2 && expected_rank == 2 && joint == 2,
        json!({
            "quotient_dim": n,
            "central_dim": ker.len(),
            "spanned_by": ["s1^2", "s2"],
        }),
    )
}

/// Certifies the `n = 3` identities and the reduction to S-forms up to `bound`.
pub fn verify_n3_suite(oracle: &IdealOracle, bound: u32) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let (a, b, c, d) = n3_generators();
    for (name, g) in [("A", a), ("B", b), ("C", c), ("D", d)] {
        out.push(membership(oracle, "n3.generators", &g, format!("{name} = 0")));
    }
    out.extend(c_conjugation(oracle));
    out.extend(cubic_orbit_centrality(oracle));
    out.push(c_not_central(oracle));
    if bound >= 6 {
        out.push(cubic_for_quadratic_orbit(oracle));
    }
    out.push(central_quadratics(oracle));
    for (atom, form) in base_table().into_iter().rev() {
        let bar = orbit_polynomial(3, &atom).expect("valid");
        out.push(CheckReport::new(
            "n3.base_table",
            3,
            Some(atom.degree()),
            certify_reduction(oracle, &bar, &form),
            json!({"atom": atom.to_string(), "form": form.to_string()}),
        ));
    }
    let mut reducer = Reducer::new();
    for deg in 4..=bound {
        let atoms = enumerate_atoms(3, deg);
        let mut failures = Vec::new();
        for atom in &atoms {
            let form = reducer.reduce_atom(atom);
            let bar = orbit_polynomial(3, atom).expect("valid");
            if form.degree() != Some(deg) || !certify_reduction(oracle, &bar, &form) {
                failures.push(atom.to_string());
            }
        }
        out.push(CheckReport::new(
            "n3.reduction",
            3,
            Some(deg),
            failures.is_empty(),
            json!({"atoms": atoms.len(), "failures": failures}),
        ));
    }
    if bound >= 6 {
        let form = reduce_to_s_form(oracle, &c_poly().pow(3), bound)?;
        out.push(CheckReport::new(
            "n3.c_cubed",
            3,
            Some(6),
            form == SReduced::symbol(Symbol::C3),
            json!({"form": form.to_string()}),
        ));
    }
    Ok(out)
}
