use proptest::prelude::*;
use sigmaforge::atoms::{enumerate_atoms, factor_atoms, fold_atoms, is_atom, orbit_max, semigroup_mul};
use sigmaforge::cyclic::{is_invariant, orbit, orbit_polynomial, orbit_sum};
use sigmaforge::rewrite::{eval_atom_expr, rewrite_invariant, sigma_alpha_decomposition, terms_independent};
use sigmaforge::sigma::build_sigma;
use sigmaforge::{Coefficient, Monomial, Polynomial};

fn q0_word(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=n, 0..max_len).prop_map(|mut w| {
        w.insert(0, 1);
        w
    })
}

fn mono(n: usize, w: &[usize]) -> Monomial {
    Monomial::from_letters(n, w).unwrap()
}

/// An atom: starts with 1, adjacent letters distinct.
fn atom(n: usize, max_len: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(1..n, 0..max_len).prop_map(move |steps| {
        let mut w = vec![1];
        for s in steps {
            let last = *w.last().unwrap();
            w.push((last - 1 + s) % n + 1);
        }
        mono(n, &w)
    })
}

fn invariant(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(1..=n, 0..=5), -3i64..=3), 1..4).prop_map(move |terms| {
        let mut p = Polynomial::zero(n);
        for (w, c) in terms {
            p.add_term(mono(n, &w), Coefficient::from_integer(c.into()));
        }
        orbit_sum(&p)
    })
}

/// Brute-force semigroup product: `u * v^g` for the unique shift `g` sending 1 to last(u).
fn semigroup_oracle(n: usize, u: &[usize], v: &[usize]) -> Vec<usize> {
    let last = *u.last().unwrap();
    let shift = (last + n - 1) % n;
    u.iter()
        .copied()
        .chain(v.iter().map(|&i| (i - 1 + shift) % n + 1))
        .collect()
}

#[test]
fn atom_counts() {
    for n in 3..=5 {
        for d in 1..=5u32 {
            let atoms = enumerate_atoms(n, d);
            assert_eq!(atoms.len(), (n - 1).pow(d - 1), "n={n} d={d}");
            assert!(atoms.iter().all(|a| is_atom(a).unwrap() && a.degree() == d));
            assert!(atoms.windows(2).all(|w| w[0] > w[1]));
        }
    }
}

#[test]
fn sigma_alpha_reconstructs_orbit_sum() {
    for n in 3..=6 {
        for k in 1..=n {
            let parts = sigma_alpha_decomposition(n, k).unwrap();
            let mut total = Polynomial::zero(n);
            for (alpha, a) in &parts {
                assert!(is_atom(a).unwrap());
                total = &total + &orbit_polynomial(n, a).unwrap().scale_int(*alpha as i64);
            }
            assert_eq!(total, orbit_sum(&build_sigma(n, k as i64)), "n={n} k={k}");
            let alpha_sum: u64 = parts
                .iter()
                .map(|(alpha, a)| alpha * orbit(n, a).unwrap().len() as u64)
                .sum();
            let terms = build_sigma(n, k as i64).len() as u64;
            assert_eq!(alpha_sum, n as u64 * terms);
        }
    }
}

proptest! {
    #[test]
    fn semigroup_matches_oracle(n in 3usize..=5, u in q0_word(5, 4), v in q0_word(5, 4)) {
        prop_assume!(u.iter().chain(&v).all(|&i| i <= n));
        let got = semigroup_mul(n, &mono(n, &u), &mono(n, &v)).unwrap();
        prop_assert_eq!(got, mono(n, &semigroup_oracle(n, &u, &v)));
    }

    #[test]
    fn semigroup_is_associative_and_closed(u in q0_word(4, 3), v in q0_word(4, 3), w in q0_word(4, 3)) {
        let n = 4;
        let (u, v, w) = (mono(n, &u), mono(n, &v), mono(n, &w));
        let uv = semigroup_mul(n, &u, &v).unwrap();
        prop_assert_eq!(uv.first_index(), Some(1));
        prop_assert_eq!(uv.degree(), u.degree() + v.degree());
        let left = semigroup_mul(n, &uv, &w).unwrap();
        let right = semigroup_mul(n, &u, &semigroup_mul(n, &v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(semigroup_mul(n, &Monomial::one(), &u).unwrap(), u.clone());
        prop_assert_eq!(semigroup_mul(n, &u, &Monomial::one()).unwrap(), u);
    }

    #[test]
    fn square_of_an_atom_is_not_an_atom(n in 3usize..=5, a in atom(5, 4)) {
        prop_assume!(a.max_index() <= n);
        let sq = semigroup_mul(n, &a, &a).unwrap();
        prop_assert!(!is_atom(&sq).unwrap());
        prop_assert_eq!(factor_atoms(n, &sq).unwrap().factors().to_vec(), vec![a.clone(), a]);
    }

    #[test]
    fn factor_then_fold(n in 3usize..=5, u in q0_word(5, 7)) {
        prop_assume!(u.iter().all(|&i| i <= n));
        let m = mono(n, &u);
        let w = factor_atoms(n, &m).unwrap();
        prop_assert!(w.factors().iter().all(|a| is_atom(a).unwrap()));
        prop_assert_eq!(w.fold(n).unwrap(), m);
    }

    #[test]
    fn fold_then_factor(n in 3usize..=5, atoms in prop::collection::vec(atom(5, 3), 1..4)) {
        prop_assume!(atoms.iter().all(|a| a.max_index() <= n));
        let m = fold_atoms(n, &atoms).unwrap();
        prop_assert_eq!(factor_atoms(n, &m).unwrap().factors().to_vec(), atoms);
    }

    #[test]
    fn orbit_max_is_in_the_orbit(n in 3usize..=5, w in prop::collection::vec(1usize..=5, 1..6)) {
        prop_assume!(w.iter().all(|&i| i <= n));
        let m = mono(n, &w);
        let best = orbit_max(n, &m).unwrap();
        let o = orbit(n, &m).unwrap();
        prop_assert!(o.contains(&best));
        prop_assert!(o.iter().all(|x| x <= &best));
        prop_assert_eq!(best.first_index(), Some(1));
    }

    #[test]
    fn rewrite_round_trip_n3(p in invariant(3)) {
        prop_assert!(is_invariant(&p));
        let e = rewrite_invariant(&p).unwrap();
        prop_assert_eq!(eval_atom_expr(&e), p);
        prop_assert!(terms_independent(&e));
    }

    #[test]
    fn rewrite_round_trip_n4(p in invariant(4)) {
        let e = rewrite_invariant(&p).unwrap();
        prop_assert_eq!(eval_atom_expr(&e), p);
    }
}
