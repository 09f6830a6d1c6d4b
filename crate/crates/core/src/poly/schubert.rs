use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{int, SparsePoly};
use crate::perm::{factorial, Permutation};

/// The Schubert polynomial of `w ∈ S_n` in `n` variables.
///
/// Panics if `w` does not fit in `S_n`.
pub fn schubert(w: &Permutation, n: usize) -> SparsePoly {
    let n = n.max(1);
    let mut cur = w.embed(n).expect("permutation does not fit in S_n");
    let top = Permutation::longest(n);
    let mut path = Vec::new();
    while cur != top {
        let word = cur.word();
        let i = (1..n).find(|&i| word[i - 1] < word[i]).expect("ascent below w_o");
        path.push(i);
        cur = cur.times_simple(i);
    }
    let staircase: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
    let mut f = SparsePoly::monomial(staircase, int(1));
    for &i in path.iter().rev() {
        f = f.divided_difference(i);
    }
    f
}

/// `ν_w = 𝔖_w(1, ..., 1)`.
pub fn principal_specialization(w: &Permutation) -> u64 {
    let n = w.stripped_size().max(1);
    to_u64(&schubert(w, n).eval_ones())
}

/// `ν_{1^m x u}` from the Schubert polynomial.
pub fn nu_shifted(u: &Permutation, m: usize) -> u64 {
    principal_specialization(&u.stripped().shifted(m, 0))
}

/// `ν_{1^m x u} = (1/ℓ!) Σ_{Red(u)} (i_1 + m) ... (i_ℓ + m)`.
///
/// The sum is taken by recursion on the last letter, memoized over the
/// lower weak interval of `u`, so no reduced word is listed.
pub fn nu_shifted_macdonald(u: &Permutation, m: usize) -> u64 {
    fn rec(w: Vec<u32>, m: u64, memo: &mut HashMap<Vec<u32>, BigInt>) -> BigInt {
        if let Some(hit) = memo.get(&w) {
            return hit.clone();
        }
        let mut total = BigInt::zero();
        let mut any = false;
        for i in 1..w.len() {
            if w[i - 1] > w[i] {
                any = true;
                let mut v = w.clone();
                v.swap(i - 1, i);
                total += rec(v, m, memo) * BigInt::from(i as u64 + m);
            }
        }
        if !any {
            total = BigInt::from(1);
        }
        memo.insert(w, total.clone());
        total
    }
    let total = rec(u.stripped().word().to_vec(), m as u64, &mut HashMap::new());
    to_u64(&BigRational::new(total, BigInt::from(factorial(u.length()))))
}

/// `ν_w` from Macdonald's reduced-word identity.
pub fn macdonald_nu(w: &Permutation) -> u64 {
    nu_shifted_macdonald(w, 0)
}

fn to_u64(q: &BigRational) -> u64 {
    assert!(q.is_integer(), "expected an integer, got {q}");
    q.to_integer().to_u64().expect("value fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SparsePoly;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn schubert_examples() {
        let top = schubert(&p("321"), 3);
        assert_eq!(top, SparsePoly::monomial(vec![2, 1, 0], int(1)));
        assert_eq!(schubert(&p("123"), 3), SparsePoly::one(3));
        assert_eq!(schubert(&p("3142"), 4).to_string(), "x1^2*x2 + x1^2*x3");
        assert_eq!(schubert(&p("132"), 3).to_string(), "x1 + x2");
    }

    #[test]
    fn schubert_is_stable() {
        let small = schubert(&p("2413"), 4);
        let big = schubert(&p("2413"), 5);
        let padded = SparsePoly::from_terms(
            5,
            small.terms().map(|(m, c)| {
                let mut e = m.0.clone();
                e.push(0);
                (e, c.clone())
            }),
        );
        assert_eq!(big, padded);
    }

    #[test]
    fn principal_specialization_examples() {
        assert_eq!(principal_specialization(&p("1")), 1);
        assert_eq!(principal_specialization(&p("4321")), 1);
        assert_eq!(principal_specialization(&p("1432")), 5);
        assert_eq!(macdonald_nu(&p("1432")), 5);
    }

    #[test]
    fn shifted_paths_agree() {
        for u in ["21", "321", "2413", "4231"] {
            for m in 0..3 {
                assert_eq!(nu_shifted(&p(u), m), nu_shifted_macdonald(&p(u), m), "{u} m={m}");
            }
        }
    }
}
