use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{int, Monomial, SparsePoly};
use crate::error::{Error, Result};
use crate::perm::{beta, permutations, WeakComposition};

type IntPoly = HashMap<Vec<u32>, i64>;

/// `Π_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> SparsePoly {
    let mut acc = SparsePoly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            acc = &acc * &(&SparsePoly::var(n, i) - &SparsePoly::var(n, j));
        }
    }
    acc
}

/// `Π (x_i - x_j)` over `i < j` with `j > i + 1`: the Vandermonde with the simple roots removed.
fn complementary_product(n: usize) -> Arc<IntPoly> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<IntPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("cache lock").get(&n) {
        return hit.clone();
    }
    let mut acc: IntPoly = HashMap::from([(vec![0; n], 1)]);
    for i in 0..n {
        for j in i + 2..n {
            let mut next: IntPoly = HashMap::with_capacity(acc.len() * 2);
            for (e, &c) in &acc {
                let mut up = e.clone();
                up[i] += 1;
                *next.entry(up).or_insert(0) += c;
                let mut down = e.clone();
                down[j] += 1;
                *next.entry(down).or_insert(0) -= c;
            }
            next.retain(|_, c| *c != 0);
            acc = next;
        }
    }
    let acc = Arc::new(acc);
    cache.lock().expect("cache lock").insert(n, acc.clone());
    acc
}

/// `+1` or `-1` according to the parity of the pairs `i < j` with `b_i < b_j`.
fn arrangement_sign(b: &[u32]) -> i64 {
    let mut inv = 0;
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if b[i] < b[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn padded(f: &SparsePoly, n: usize) -> SparsePoly {
    assert!(f.nvars() <= n, "polynomial uses more than n variables");
    if f.nvars() == n {
        return f.clone();
    }
    SparsePoly::from_terms(
        n,
        f.terms().map(|(m, c)| {
            let mut e = m.0.clone();
            e.resize(n, 0);
            (e, c.clone())
        }),
    )
}

/// `⟨f⟩_n = Σ_{w ∈ S_n} w·(f / Π (x_i - x_{i+1}))` as a polynomial.
///
/// Evaluated as the antisymmetrization of `f·P` divided by the Vandermonde,
/// where `P` is the product of the non-simple root factors.
pub fn divided_symmetrization(f: &SparsePoly, n: usize) -> SparsePoly {
    let f = padded(f, n);
    let p = complementary_product(n);
    let mut anti: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    for (a, c) in f.terms() {
        for (e, &pc) in p.iter() {
            let b: Vec<u32> = a.0.iter().zip(e).map(|(x, y)| x + y).collect();
            let mut sorted = b.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let s = arrangement_sign(&b) * pc;
            *anti.entry(sorted).or_insert_with(BigRational::zero) += c * int(s);
        }
    }
    let perms = permutations(n);
    let mut alternant = SparsePoly::zero(n);
    for (a, d) in anti {
        if d.is_zero() {
            continue;
        }
        for w in &perms {
            let b: Vec<u32> = w.word().iter().map(|&k| a[k as usize - 1]).collect();
            let s = arrangement_sign(&b);
            alternant.add_term(Monomial(b), &d * int(s));
        }
    }
    alternant.div_exact(&vandermonde(n)).expect("alternant is not divisible by the Vandermonde; arithmetic bug")
}

/// Constant term of `⟨f⟩_n`, read off as the coefficient of the Vandermonde in
/// the antisymmetrization of `f·P`. Only the degree `n - 1` part of `f` contributes.
pub fn delta_coefficient(f: &SparsePoly, n: usize) -> BigRational {
    let f = padded(f, n).homogeneous_part(n.saturating_sub(1) as u32);
    if f.is_zero() {
        return BigRational::zero();
    }
    let p = complementary_product(n);
    let mut total = BigRational::zero();
    let mut key = vec![0u32; n];
    for w in permutations(n) {
        let b: Vec<u32> = w.word().iter().map(|&k| (n as u32) - k).collect();
        let s = arrangement_sign(&b);
        let mut coeff = BigRational::zero();
        for (a, c) in f.terms() {
            if a.0.iter().zip(&b).any(|(x, y)| x > y) {
                continue;
            }
            for k in 0..n {
                key[k] = b[k] - a.0[k];
            }
            if let Some(&pc) = p.get(&key) {
                coeff += c * int(pc);
            }
        }
        if s > 0 {
            total += coeff;
        } else {
            total -= coeff;
        }
    }
    total
}

/// `⟨x^c⟩_n = (-1)^{|S_c|} β_n(S_c)` with `S_c = {k : c_1 + ... + c_k < k}`.
pub fn ds_monomial(c: &WeakComposition, n: usize) -> Result<BigInt> {
    if c.len() != n || c.sum() as usize + 1 != n {
        return Err(Error::InvalidComposition(format!("{c} must have {n} parts summing to {}", n.saturating_sub(1))));
    }
    let set = c.deficit_set();
    let b = BigInt::from(beta(n, &set));
    Ok(if set.len().is_multiple_of(2) { b } else { -b })
}

/// Constant term of `⟨f⟩_n` from the monomial rule applied term by term.
pub fn ds_by_monomials(f: &SparsePoly, n: usize) -> BigRational {
    let f = padded(f, n);
    let mut total = BigRational::zero();
    for (m, c) in f.terms() {
        if m.degree() as usize + 1 != n {
            continue;
        }
        let v = ds_monomial(&WeakComposition(m.0.clone()), n).expect("degree checked");
        total += c * BigRational::from_integer(v);
    }
    total
}
