use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use tau_core::perm::{permutations, Permutation};
use tau_core::pipedreams::enumerate_pipe_dreams;
use tau_core::poly::{
    delta_coefficient, divided_symmetrization, ds_by_monomials, macdonald_nu, principal_specialization, schubert,
    vandermonde, SparsePoly,
};

const N: usize = 4;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn poly_strategy(nvars: usize, max_exp: u32) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -5i64..=5), 0..6)
        .prop_map(move |terms| SparsePoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, q(c)))))
}

fn homogeneous_strategy(nvars: usize) -> impl Strategy<Value = SparsePoly> {
    let deg = nvars as u32 - 1;
    prop::collection::vec((prop::collection::vec(0..=deg, nvars), -4i64..=4), 1..5).prop_map(move |terms| {
        let terms = terms.into_iter().filter(|(e, _)| e.iter().sum::<u32>() == deg).map(|(e, c)| (e, q(c)));
        SparsePoly::from_terms(nvars, terms)
    })
}

fn root(i: usize) -> SparsePoly {
    &SparsePoly::var(N, i) - &SparsePoly::var(N, i + 1)
}

proptest! {
    #[test]
    fn divided_difference_by_quotient(f in poly_strategy(N, 4), i in 1..N) {
        let quotient = (&f - &f.swap_vars(i)).div_exact(&root(i)).unwrap();
        prop_assert_eq!(f.divided_difference(i), quotient);
    }

    #[test]
    fn divided_difference_squares_to_zero(f in poly_strategy(N, 4), i in 1..N) {
        prop_assert!(f.divided_difference(i).divided_difference(i).is_zero());
    }

    #[test]
    fn divided_difference_braid(f in poly_strategy(N, 4), i in 1..N - 1) {
        let left = f.divided_difference(i).divided_difference(i + 1).divided_difference(i);
        let right = f.divided_difference(i + 1).divided_difference(i).divided_difference(i + 1);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn divided_differences_commute_when_far(f in poly_strategy(N, 4)) {
        let a = f.divided_difference(1).divided_difference(3);
        let b = f.divided_difference(3).divided_difference(1);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn twisted_leibniz(f in poly_strategy(N, 3), g in poly_strategy(N, 3), i in 1..N) {
        let lhs = (&f * &g).divided_difference(i);
        let rhs = &(&f.divided_difference(i) * &g) + &(&f.swap_vars(i) * &g.divided_difference(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_axioms(f in poly_strategy(3, 3), g in poly_strategy(3, 3), h in poly_strategy(3, 3)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn symmetrization_paths_agree(f in homogeneous_strategy(4)) {
        let full = divided_symmetrization(&f, 4);
        let c = full.constant_term();
        prop_assert_eq!(full, SparsePoly::constant(4, c.clone()));
        prop_assert_eq!(delta_coefficient(&f, 4), c.clone());
        prop_assert_eq!(ds_by_monomials(&f, 4), c);
    }

    #[test]
    fn symmetric_factors_vanish(g in homogeneous_strategy(3)) {
        let e1 = &(&SparsePoly::var(4, 1) + &SparsePoly::var(4, 2)) + &(&SparsePoly::var(4, 3) + &SparsePoly::var(4, 4));
        let g4 = SparsePoly::from_terms(4, g.terms().map(|(m, c)| {
            let mut e = m.0.clone();
            e.push(0);
            (e, c.clone())
        }));
        let g4 = g4.homogeneous_part(2);
        prop_assert!(delta_coefficient(&(&e1 * &g4), 4) == BigRational::from_integer(0.into()));
    }

    #[test]
    fn polynomial_json_round_trip(f in poly_strategy(3, 4)) {
        let s = serde_json::to_string(&f).unwrap();
        let back: SparsePoly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn vandermonde_is_alternating() {
    let v = vandermonde(4);
    for i in 1..4 {
        assert_eq!(v.swap_vars(i), -&v);
    }
}

#[test]
fn schubert_known_values() {
    assert_eq!(schubert(&"3142".parse().unwrap(), 4).to_string(), "x1^2*x2 + x1^2*x3");
    assert_eq!(schubert(&"1".parse().unwrap(), 3), SparsePoly::one(3));
    let w: Permutation = "4321".parse().unwrap();
    assert_eq!(schubert(&w, 4), SparsePoly::monomial(vec![3, 2, 1, 0], q(1)));
}

#[test]
fn schubert_equals_pipe_dream_sum() {
    for n in 1..=5 {
        for w in permutations(n) {
            let mut sum = SparsePoly::zero(n);
            for d in enumerate_pipe_dreams(&w) {
                assert!(d.is_reduced());
                assert_eq!(d.trace_permutation(), w);
                sum.add_term(tau_core::poly::Monomial(d.row_weight(n).0), q(1));
            }
            assert_eq!(sum, schubert(&w, n), "{w}");
        }
    }
}

#[test]
fn principal_specialization_three_ways() {
    for n in 1..=5 {
        for w in permutations(n) {
            let pd = enumerate_pipe_dreams(&w).len() as u64;
            assert_eq!(principal_specialization(&w), pd, "{w}");
            assert_eq!(macdonald_nu(&w), pd, "{w}");
        }
    }
}

#[test]
fn schubert_product_rule_for_simple_transposition() {
    for n in 2..=5 {
        for i in 1..n {
            let s = Permutation::identity(n).times_simple(i);
            let expect = (1..=i).fold(SparsePoly::zero(n), |acc, k| &acc + &SparsePoly::var(n, k));
            assert_eq!(schubert(&s, n), expect);
        }
    }
}
