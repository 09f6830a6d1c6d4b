use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use tau_core::aw::aw_ds;
use tau_core::klyachko::{aw_klyachko, reduce_word_monomial, KElement};
use tau_core::mixed_eulerian::{
    connected_gf, cyclic_class_sum, mixed_eulerian, mixed_eulerian_petrov, mixed_eulerian_table,
};
use tau_core::perm::{factorial, permutations, s_prime, weak_compositions, WeakComposition};
use tau_core::tableaux::{grassmannian_count, Partition};

fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << (n - 1)).map(|m| (1..n).filter(|i| m >> (i - 1) & 1 == 1).collect()).collect()
}

fn times(e: &KElement, i: usize) -> KElement {
    if i == 0 || i == e.n() {
        KElement::zero(e.n())
    } else {
        e.multiply_by_generator(i)
    }
}

fn sum(a: &KElement, b: &KElement) -> Vec<(Vec<usize>, BigRational)> {
    let mut out: std::collections::BTreeMap<Vec<usize>, BigRational> = Default::default();
    for (s, c) in a.terms().chain(b.terms()) {
        *out.entry(s).or_insert_with(BigRational::zero) += c;
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn terms(a: &KElement) -> Vec<(Vec<usize>, BigRational)> {
    a.terms().map(|(s, c)| (s, c.clone())).collect()
}

#[test]
fn defining_relations_on_every_basis_element() {
    for n in 2..=6 {
        for set in all_subsets(n) {
            let e = KElement::basis(n, &set);
            for i in 1..n {
                let sq = e.multiply_by_generator(i).multiply_by_generator(i);
                let doubled: Vec<_> = terms(&sq).into_iter().map(|(s, c)| (s, c * BigInt::from(2))).collect();
                let left = times(&e.multiply_by_generator(i), i - 1);
                let right = times(&e.multiply_by_generator(i), i + 1);
                assert_eq!(doubled, sum(&left, &right), "n={n} I={set:?} i={i}");
                for j in 1..n {
                    let a = e.multiply_by_generator(i).multiply_by_generator(j);
                    let b = e.multiply_by_generator(j).multiply_by_generator(i);
                    assert_eq!(a, b, "n={n} I={set:?} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn integral_of_monomials_is_mixed_eulerian() {
    for n in 2..=6 {
        let denom = BigInt::from(factorial(n - 1));
        for c in weak_compositions((n - 1) as u32, n) {
            if c.parts()[n - 1] != 0 {
                continue;
            }
            let top = reduce_word_monomial(&c, n).unwrap().integral();
            let a = BigRational::new(BigInt::from(mixed_eulerian(&c).unwrap()), denom.clone());
            assert_eq!(top, a, "{c}");
        }
    }
}

#[test]
fn klyachko_matches_divided_symmetrization() {
    for n in 2..=6 {
        for w in s_prime(n) {
            assert_eq!(aw_klyachko(&w).unwrap(), aw_ds(&w).unwrap(), "{w}");
        }
    }
}

proptest! {
    #[test]
    fn products_do_not_depend_on_order(letters in prop::collection::vec(1usize..6, 0..8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let n = 6;
        let mut shuffled = letters.clone();
        shuffled.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let a = KElement::one(n).multiply_by_word(&letters);
        let b = KElement::one(n).multiply_by_word(&shuffled);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn products_respect_degree(letters in prop::collection::vec(1usize..5, 0..6)) {
        let e = KElement::one(5).multiply_by_word(&letters);
        for (set, _) in e.terms() {
            prop_assert_eq!(set.len(), letters.len());
        }
    }
}

fn eulerian_by_descents(m: usize, d: usize) -> u64 {
    permutations(m).iter().filter(|w| w.descents().len() == d).count() as u64
}

#[test]
fn concentrated_compositions_give_eulerian_numbers() {
    for n in 2..=7 {
        for k in 1..n {
            let mut c = vec![0; n];
            c[k - 1] = (n - 1) as u32;
            assert_eq!(mixed_eulerian(&WeakComposition(c)).unwrap(), eulerian_by_descents(n - 1, k - 1), "n={n} k={k}");
        }
    }
}

#[test]
fn petrov_system_agrees() {
    for n in 1..=6 {
        for (c, a) in mixed_eulerian_table(n) {
            assert_eq!(mixed_eulerian_petrov(&c).unwrap(), a, "{c}");
        }
    }
}

#[test]
fn values_are_positive_and_bounded() {
    for n in 1..=6 {
        let bound = factorial(n - 1);
        for (c, a) in mixed_eulerian_table(n) {
            if c.parts()[n - 1] == 0 {
                assert!(a > 0 && BigUint::from(a) <= bound, "{c}: {a}");
            } else {
                assert_eq!(a, 0);
            }
        }
    }
}

#[test]
fn cyclic_classes_sum_to_one() {
    for n in 1..=6 {
        for c in weak_compositions((n - 1) as u32, n) {
            assert_eq!(cyclic_class_sum(&c).unwrap(), BigRational::one(), "{c}");
        }
    }
    assert_eq!(cyclic_class_sum(&WeakComposition(vec![3, 0, 0, 0])).unwrap(), BigRational::one());
}

fn strong_compositions(total: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![vec![]];
    }
    (1..=total)
        .flat_map(|first| {
            strong_compositions(total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Coefficients of `(1 - t)^n Σ_j Π_i (i + j)^{a_i} t^j`, by repeated differencing.
fn connected_oracle(a: &[u32]) -> Vec<BigInt> {
    let n = a.iter().sum::<u32>() as usize + 1;
    let mut series: Vec<BigInt> =
        (0..=2 * n).map(|j| a.iter().enumerate().map(|(i, &e)| BigInt::from(i + 1 + j).pow(e)).product()).collect();
    for _ in 0..n {
        let prev = series.clone();
        for j in 1..series.len() {
            series[j] = &prev[j] - &prev[j - 1];
        }
    }
    series.truncate(n);
    while series.last().is_some_and(|c| c.is_zero()) {
        series.pop();
    }
    series
}

#[test]
fn connected_generating_functions() {
    for total in 1..=6 {
        for a in strong_compositions(total) {
            let mut got: Vec<BigInt> = connected_gf(&a).unwrap().into_iter().map(BigInt::from).collect();
            while got.last().is_some_and(|c| c.is_zero()) {
                got.pop();
            }
            assert_eq!(got, connected_oracle(&a), "{a:?}");
        }
    }
    assert_eq!(connected_gf(&[3]).unwrap(), vec![1, 4, 1]);
}

#[test]
fn grassmannian_hook_identity() {
    for n in 2..=7 {
        for w in s_prime(n) {
            let Some(m) = w.grassmannian_descent() else { continue };
            let shape = Partition::new(w.shape()).unwrap();
            let mut c = vec![0u32; n];
            for (i, j) in shape.cells() {
                let content = shape.content(i, j);
                let idx = content + m as i64 - 1;
                c[idx as usize] += 1;
            }
            let a = mixed_eulerian(&WeakComposition(c)).unwrap();
            let hooks = shape.hook_product();
            assert_eq!(BigUint::from(a), BigUint::from(grassmannian_count(&shape, m - 1)) * hooks, "{w}");
        }
    }
}
