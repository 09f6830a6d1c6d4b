//! The coefficients `a_w` of `τ_n = Σ_{w ∈ S'_n} a_w σ_{w_o w}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::klyachko::aw_klyachko;
use crate::mixed_eulerian::mixed_eulerian;
use crate::perm::{beta, factorial, s_prime, Permutation, ReducedWord};
use crate::pipedreams::enumerate_pipe_dreams;
use crate::poly::{delta_coefficient, nu_shifted_macdonald, principal_specialization, schubert};
use crate::series;
use crate::tableaux::{aw_vexillary, grassmannian_count, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Divided symmetrization of the Schubert polynomial.
    Ds,
    /// Reduced words weighted by mixed Eulerian numbers.
    Mixed,
    /// Integration in Klyachko's algebra.
    Klyachko,
    /// The first special-case formula that applies.
    Special,
    /// Special cases when available, otherwise `Mixed`.
    Auto,
}

impl Method {
    pub const GENERAL: [Method; 3] = [Method::Ds, Method::Mixed, Method::Klyachko];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Ds => "ds",
            Method::Mixed => "mixed",
            Method::Klyachko => "klyachko",
            Method::Special => "special",
            Method::Auto => "auto",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ds" => Ok(Method::Ds),
            "mixed" => Ok(Method::Mixed),
            "klyachko" => Ok(Method::Klyachko),
            "special" => Ok(Method::Special),
            "auto" => Ok(Method::Auto),
            _ => Err(format!("unknown method {s:?}")),
        }
    }
}

/// The computation that produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Ds,
    Mixed,
    Klyachko,
    /// `β_{n-1}(I_w)`.
    Coxeter,
    /// 132-avoiding: `a_w = 1`.
    Dominant,
    /// 213-avoiding: `a_w = 1`.
    Avoids213,
    /// `|PD(w)|`.
    Lukasiewicz,
    /// `ν_{w_o w w_o}`.
    LukasiewiczConjugate,
    /// `|SYT(λ, m - 1)|`.
    Grassmannian,
    /// Standard tableaux with `m + N_u` labeled descents.
    Vexillary,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Ds => "ds",
            Route::Mixed => "mixed",
            Route::Klyachko => "klyachko",
            Route::Coxeter => "coxeter",
            Route::Dominant => "dominant",
            Route::Avoids213 => "avoids-213",
            Route::Lukasiewicz => "lukasiewicz",
            Route::LukasiewiczConjugate => "lukasiewicz-conjugate",
            Route::Grassmannian => "grassmannian",
            Route::Vexillary => "vexillary",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AwResult {
    pub value: u64,
    pub route: Route,
    pub elapsed: Duration,
}

fn check_s_prime(w: &Permutation) -> Result<usize> {
    let n = w.size();
    let ell = w.length();
    if n < 2 || ell + 1 != n {
        return Err(Error::LengthMismatch { length: ell, expected: n.saturating_sub(1) });
    }
    Ok(n)
}

/// `a_w` for `w ∈ S'_n`, `n = w.size()`.
pub fn aw(w: &Permutation, method: Method) -> Result<AwResult> {
    check_s_prime(w)?;
    let start = Instant::now();
    let (value, route) = match method {
        Method::Ds => (aw_ds(w)?, Route::Ds),
        Method::Mixed => (aw_mixed(w)?, Route::Mixed),
        Method::Klyachko => (aw_klyachko(w)?, Route::Klyachko),
        Method::Special => special_aw(w)?,
        Method::Auto => match special_aw(w) {
            Ok(hit) => hit,
            Err(Error::NotApplicable(_)) => (aw_mixed(w)?, Route::Mixed),
            Err(e) => return Err(e),
        },
    };
    Ok(AwResult { value, route, elapsed: start.elapsed() })
}

/// `a_w = ⟨𝔖_w⟩_n`.
pub fn aw_ds(w: &Permutation) -> Result<u64> {
    let n = check_s_prime(w)?;
    let v = delta_coefficient(&schubert(w, n), n);
    Ok(to_u64(&v))
}

/// `a_w = (1/(n-1)!) Σ_{Red(w)} A_{c(i)}`.
pub fn aw_mixed(w: &Permutation) -> Result<u64> {
    let n = check_s_prime(w)?;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for r in w.reduced_words() {
        *counts.entry(r.content(n).0).or_insert(0) += 1;
    }
    let mut total = BigInt::zero();
    for (c, k) in counts {
        total += BigInt::from(mixed_eulerian(&crate::perm::WeakComposition(c))?) * k;
    }
    let q = BigRational::new(total, BigInt::from(factorial(n - 1)));
    Ok(to_u64(&q))
}

fn to_u64(q: &BigRational) -> u64 {
    assert!(q.is_integer(), "a_w must be an integer, got {q}");
    q.to_integer().to_u64().expect("a_w fits in u64")
}

/// The first special-case formula that applies, cheapest first.
pub fn special_aw(w: &Permutation) -> Result<(u64, Route)> {
    let n = check_s_prime(w)?;
    if w.is_coxeter(n) {
        return Ok((coxeter_aw(w)?, Route::Coxeter));
    }
    if w.is_dominant() {
        return Ok((1, Route::Dominant));
    }
    if w.avoids(n, &Permutation::new(vec![2, 1, 3]).expect("valid pattern")) {
        return Ok((1, Route::Avoids213));
    }
    if w.is_lukasiewicz(n) {
        return Ok((enumerate_pipe_dreams(w).len() as u64, Route::Lukasiewicz));
    }
    let conj = w.conjugate_longest();
    if conj.is_lukasiewicz(n) {
        return Ok((principal_specialization(&conj), Route::LukasiewiczConjugate));
    }
    if w.grassmannian_descent().is_some() {
        return Ok((grassmannian_aw(w)?, Route::Grassmannian));
    }
    if w.is_vexillary() {
        return Ok((aw_vexillary(w)?, Route::Vexillary));
    }
    Err(Error::NotApplicable(w.to_string()))
}

/// `I_w`: the letters `i` that precede `i + 1` in every reduced word of a Coxeter element.
pub fn coxeter_descent_set(w: &Permutation) -> Result<Vec<usize>> {
    let n = w.size();
    if !w.is_coxeter(n) {
        return Err(Error::NotCoxeter(w.to_string()));
    }
    let letters = w.one_reduced_word().0;
    let pos = |i: u32| letters.iter().position(|&l| l == i).expect("every letter occurs");
    Ok((1..n - 1).filter(|&i| pos(i as u32) < pos(i as u32 + 1)).collect())
}

/// `a_w = β_{n-1}(I_w)` for a Coxeter element `w ∈ S_n`.
pub fn coxeter_aw(w: &Permutation) -> Result<u64> {
    let set = coxeter_descent_set(w)?;
    Ok(beta(w.size() - 1, &set).to_u64().expect("fits in u64"))
}

/// The Coxeter elements with `I_w` the odd, respectively even, letters.
pub fn alternating_coxeter(n: usize) -> Vec<Permutation> {
    let odd: Vec<u32> = (1..n as u32).filter(|i| i % 2 == 1).collect();
    let even: Vec<u32> = (1..n as u32).filter(|i| i % 2 == 0).collect();
    let mut out: Vec<Permutation> = [[odd.clone(), even.clone()].concat(), [even, odd].concat()]
        .into_iter()
        .map(|letters| ReducedWord(letters).product(n))
        .collect();
    out.sort_by(|a, b| a.word().cmp(b.word()));
    out.dedup();
    out
}

/// `a_w = |SYT(λ(w), m - 1)|` for `w` with a single descent at `m`.
pub fn grassmannian_aw(w: &Permutation) -> Result<u64> {
    check_s_prime(w)?;
    let m = w.grassmannian_descent().ok_or_else(|| Error::NotGrassmannian(w.to_string()))?;
    let shape = Partition::new(w.shape())?;
    Ok(grassmannian_count(&shape, m - 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauTerm {
    pub w: Permutation,
    pub wo_w: Permutation,
    pub a: u64,
    pub route: Route,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub n: usize,
    pub terms: Vec<TauTerm>,
}

impl Expansion {
    /// Terms in the order of their Schubert index `w_o w`, as text.
    pub fn by_index(&self) -> Vec<&TauTerm> {
        let mut terms: Vec<&TauTerm> = self.terms.iter().collect();
        terms.sort_by_key(|t| t.wo_w.to_string());
        terms
    }

    /// `2*S_2413 + S_2341 + ...` in index order.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .by_index()
            .into_iter()
            .map(|t| if t.a == 1 { format!("S_{}", t.wo_w) } else { format!("{}*S_{}", t.a, t.wo_w) })
            .collect();
        parts.join(" + ")
    }

    pub fn get(&self, w: &Permutation) -> Option<u64> {
        self.terms.iter().find(|t| &t.w == w).map(|t| t.a)
    }
}

/// `τ_n` keyed by `w ∈ S'_n` in lexicographic order of `w`.
///
/// Terms are evaluated in parallel on the current rayon pool.
pub fn tau_expansion(n: usize, method: Method, max_n: usize) -> Result<Expansion> {
    if n < 2 || n > max_n {
        return Err(Error::OutOfRange { n, min: 2, max: max_n });
    }
    let terms = s_prime(n)
        .into_par_iter()
        .map(|w| {
            let r = aw(&w, method)?;
            let wo_w = w.longest_times().stripped();
            Ok(TauTerm { w, wo_w, a: r.value, route: r.route })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Expansion { n, terms })
}

/// `a_w = a_{w^{-1}} = a_{w_o w w_o}`.
pub fn check_symmetries(w: &Permutation, method: Method) -> Result<bool> {
    let a = aw(w, method)?.value;
    Ok(aw(&w.inverse(), method)?.value == a && aw(&w.conjugate_longest(), method)?.value == a)
}

/// `Σ_i a_{w^{(i)}}` over the cyclic shifts of the block factorization.
pub fn cyclic_sum(w: &Permutation, method: Method) -> Result<u64> {
    check_s_prime(w)?;
    w.cyclic_shifts().iter().map(|v| aw(v, method).map(|r| r.value)).sum()
}

fn check_indecomposable(u: &Permutation) -> Result<(usize, usize)> {
    let u = u.stripped();
    if u.size() < 2 || !u.is_indecomposable() {
        return Err(Error::Decomposable(u.to_string()));
    }
    let p = u.size() - 1;
    let n = u.length() + 1;
    Ok((p, n))
}

/// `Σ_m a_{1^m × u × 1^{n-p-1-m}} t^m` for indecomposable `u ∈ S_{p+1}` with
/// `n = ℓ(u) + 1`, from the numerator of `Σ_j ν_{1^j × u} t^j` over `(1-t)^n`.
pub fn h_vector(u: &Permutation) -> Result<Vec<BigInt>> {
    let (p, n) = check_indecomposable(u)?;
    let u = u.stripped();
    let nus: Vec<BigInt> = (0..n - p).map(|j| BigInt::from(nu_shifted_macdonald(&u, j))).collect();
    Ok(series::numerator(&nus, n))
}

/// The same coefficients evaluated one shifted permutation at a time.
pub fn h_vector_direct(u: &Permutation, method: Method) -> Result<Vec<BigInt>> {
    let (p, n) = check_indecomposable(u)?;
    let u = u.stripped();
    (0..n - p).map(|m| aw(&u.shifted(m, n - p - 1 - m), method).map(|r| BigInt::from(r.value))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Maximum {
    pub n: usize,
    pub value: u64,
    pub witnesses: Vec<Permutation>,
    /// Whether each witness is one of the alternating Coxeter elements.
    pub alternating_coxeter: Vec<bool>,
}

/// Largest `a_w` over `S'_n` and where it is attained.
pub fn maximum(expansion: &Expansion) -> Maximum {
    let value = expansion.terms.iter().map(|t| t.a).max().unwrap_or(0);
    let witnesses: Vec<Permutation> = expansion.terms.iter().filter(|t| t.a == value).map(|t| t.w.clone()).collect();
    let alt = alternating_coxeter(expansion.n);
    let alternating_coxeter = witnesses.iter().map(|w| alt.contains(w)).collect();
    Maximum { n: expansion.n, value, witnesses, alternating_coxeter }
}
