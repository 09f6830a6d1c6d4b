//! Klyachko's algebra `K_n` in the squarefree basis `u_I`, `I ⊆ [n-1]`.
//!
//! Relations: `u_i u_j = u_j u_i` and `2u_i^2 = u_i u_{i-1} + u_i u_{i+1}` with
//! `u_0 = u_n = 0`. Multiplication by a generator uses the closed form on the
//! maximal run `[a, b] ⊆ I` through `i` (length `L = b - a + 1`):
//!
//! `u_i u_I = (b+1-i)/(L+1) · u_{I ∪ {a-1}} + (i-a+1)/(L+1) · u_{I ∪ {b+1}}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::perm::{Permutation, WeakComposition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KElement {
    n: usize,
    coeffs: BTreeMap<u64, BigRational>,
}

impl KElement {
    pub fn zero(n: usize) -> Self {
        assert!((1..=64).contains(&n), "ambient size out of range");
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(n, &[])
    }

    /// `u_I` for `I ⊆ [n-1]`.
    pub fn basis(n: usize, set: &[usize]) -> Self {
        let mut e = Self::zero(n);
        e.coeffs.insert(mask_of(n, set), BigRational::one());
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(I, coefficient)` pairs with `I` as a sorted index list.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &BigRational)> {
        self.coeffs.iter().map(|(&m, c)| (set_of(m), c))
    }

    pub fn coefficient(&self, set: &[usize]) -> BigRational {
        self.coeffs.get(&mask_of(self.n, set)).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add(&mut self, mask: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mask).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    /// `u_i · self`.
    pub fn multiply_by_generator(&self, i: usize) -> Self {
        let n = self.n;
        assert!(i >= 1 && i < n, "generator index out of range");
        let bit = 1u64 << (i - 1);
        let mut out = Self::zero(n);
        for (&mask, c) in &self.coeffs {
            if mask & bit == 0 {
                out.add(mask | bit, c.clone());
                continue;
            }
            let mut a = i;
            while a > 1 && mask & (1 << (a - 2)) != 0 {
                a -= 1;
            }
            let mut b = i;
            while b < n - 1 && mask & (1 << b) != 0 {
                b += 1;
            }
            let denom = BigInt::from(b - a + 2);
            if a > 1 {
                let w = BigRational::new(BigInt::from(b + 1 - i), denom.clone());
                out.add(mask | 1 << (a - 2), c * w);
            }
            if b < n - 1 {
                let w = BigRational::new(BigInt::from(i + 1 - a), denom);
                out.add(mask | 1 << b, c * w);
            }
        }
        out
    }

    /// Multiplies by `u_{i_1}, u_{i_2}, ...` in the given order.
    pub fn multiply_by_word(&self, letters: &[usize]) -> Self {
        letters.iter().fold(self.clone(), |acc, &i| acc.multiply_by_generator(i))
    }

    /// `∫ e`: the coefficient of `u_{[n-1]}`.
    pub fn integral(&self) -> BigRational {
        let full = if self.n <= 1 { 0 } else { (1u64 << (self.n - 1)) - 1 };
        self.coeffs.get(&full).cloned().unwrap_or_else(BigRational::zero)
    }
}

fn mask_of(n: usize, set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &i| {
        assert!(i >= 1 && i < n, "index {i} outside [n-1]");
        m | 1 << (i - 1)
    })
}

fn set_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (set, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let inner: Vec<String> = set.iter().map(|i| i.to_string()).collect();
            write!(f, "u{{{}}}", inner.join(","))?;
        }
        Ok(())
    }
}

/// `u_1^{c_1} ... u_{n-1}^{c_{n-1}}` in the squarefree basis.
pub fn reduce_word_monomial(c: &WeakComposition, n: usize) -> Result<KElement> {
    let parts = c.parts();
    if parts.len() > n || (parts.len() == n && parts[n - 1] != 0) {
        return Err(Error::InvalidComposition(format!("{c} uses a generator outside [n-1]")));
    }
    let mut e = KElement::one(n);
    for (k, &ck) in parts.iter().enumerate() {
        for _ in 0..ck {
            e = e.multiply_by_generator(k + 1);
        }
    }
    Ok(e)
}

/// `a_w = ∫ Σ_{Red(w)} u_{i_1} ... u_{i_{n-1}}` with `n = w.size()`.
pub fn aw_klyachko(w: &Permutation) -> Result<u64> {
    let n = w.size();
    let ell = w.length();
    if n == 0 || ell + 1 != n {
        return Err(Error::LengthMismatch { length: ell, expected: n.saturating_sub(1) });
    }
    let mut counts: HashMap<WeakComposition, u64> = HashMap::new();
    for r in w.reduced_words() {
        *counts.entry(r.content(n)).or_insert(0) += 1;
    }
    let mut total = BigRational::zero();
    for (c, k) in counts {
        total += reduce_word_monomial(&c, n)?.integral() * BigRational::from_integer(BigInt::from(k));
    }
    debug_assert!(total.is_integer());
    Ok(total.to_integer().to_u64().expect("a_w fits in u64"))
}
