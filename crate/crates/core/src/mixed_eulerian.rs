//! Mixed Eulerian numbers `A_c = ⟨y^c⟩_n` with `y_i = x_1 + ... + x_i`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::perm::{beta, factorial, weak_compositions, WeakComposition};
use crate::series;

fn validate(c: &WeakComposition) -> Result<usize> {
    let n = c.len();
    if n == 0 || c.sum() as usize + 1 != n {
        return Err(Error::InvalidComposition(format!("{c} must have n parts summing to n - 1")));
    }
    Ok(n)
}

fn memo() -> &'static Mutex<HashMap<Vec<u32>, u64>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<u32>, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `A_c` by expanding `y^c` and applying the monomial rule. Zero when `c_n > 0`.
pub fn mixed_eulerian(c: &WeakComposition) -> Result<u64> {
    let n = validate(c)?;
    if c.0[n - 1] > 0 {
        return Ok(0);
    }
    if let Some(&v) = memo().lock().expect("memo lock").get(&c.0) {
        return Ok(v);
    }
    let mut poly: HashMap<Vec<u32>, BigInt> = HashMap::from([(vec![0; n], BigInt::one())]);
    for (i, &ci) in c.0.iter().enumerate() {
        for _ in 0..ci {
            let mut next: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(poly.len() * (i + 1));
            for (e, coef) in &poly {
                for k in 0..=i {
                    let mut f = e.clone();
                    f[k] += 1;
                    *next.entry(f).or_insert_with(BigInt::zero) += coef;
                }
            }
            poly = next;
        }
    }
    let mut by_set: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for (e, coef) in poly {
        let set = WeakComposition(e).deficit_set();
        *by_set.entry(set).or_insert_with(BigInt::zero) += coef;
    }
    let mut total = BigInt::zero();
    for (set, coef) in by_set {
        let term = coef * BigInt::from(beta(n, &set));
        if set.len() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let value = total.to_u64().expect("mixed Eulerian number is a nonnegative u64");
    memo().lock().expect("memo lock").insert(c.0.clone(), value);
    Ok(value)
}

/// All `(c, A_c)` for weak compositions of `n - 1` into `n` parts.
pub fn mixed_eulerian_table(n: usize) -> Vec<(WeakComposition, u64)> {
    weak_compositions((n - 1) as u32, n)
        .into_iter()
        .map(|c| {
            let v = mixed_eulerian(&c).expect("valid composition");
            (c, v)
        })
        .collect()
}

fn petrov_memo() -> &'static Mutex<HashMap<Vec<u32>, BigRational>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<u32>, BigRational>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Known value of a state, or `None` if it is an unknown of the linear system.
fn boundary(c: &[u32]) -> Option<BigRational> {
    let n = c.len();
    if c[n - 1] > 0 {
        return Some(BigRational::zero());
    }
    if c[..n - 1].iter().all(|&v| v == 1) {
        return Some(BigRational::from_integer(BigInt::from(factorial(n - 1))));
    }
    None
}

/// The two neighbours reached by moving one coin off the first pile with at least two.
fn moves(c: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let n = c.len();
    let i = c.iter().position(|&v| v >= 2).expect("interior state");
    let left = if i == 0 { n - 1 } else { i - 1 };
    let mut a = c.to_vec();
    a[i] -= 1;
    a[left] += 1;
    let mut b = c.to_vec();
    b[i] -= 1;
    b[i + 1] += 1;
    (a, b)
}

/// `A_c` from the relations `2A_c = A_{c - e_i + e_{i-1}} + A_{c - e_i + e_{i+1}}`
/// (indices cyclic, `e_0 = e_n`), `A_c = 0` when `c_n > 0`, and `A_{1^{n-1}0} = (n-1)!`,
/// solved exactly over the configurations reachable from `c`.
pub fn mixed_eulerian_petrov(c: &WeakComposition) -> Result<u64> {
    validate(c)?;
    if let Some(v) = boundary(&c.0) {
        return Ok(v.to_integer().to_u64().expect("boundary value fits"));
    }
    if let Some(v) = petrov_memo().lock().expect("memo lock").get(&c.0) {
        return Ok(v.to_integer().to_u64().expect("value fits"));
    }
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut states: Vec<Vec<u32>> = Vec::new();
    let mut queue = VecDeque::from([c.0.clone()]);
    index.insert(c.0.clone(), 0);
    states.push(c.0.clone());
    while let Some(s) = queue.pop_front() {
        let (a, b) = moves(&s);
        for t in [a, b] {
            if boundary(&t).is_none() && !index.contains_key(&t) {
                index.insert(t.clone(), states.len());
                states.push(t.clone());
                queue.push_back(t);
            }
        }
    }
    let m = states.len();
    let mut rows: Vec<BTreeMap<usize, BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    let two = BigRational::from_integer(BigInt::from(2));
    for (k, s) in states.iter().enumerate() {
        let mut row = BTreeMap::new();
        let mut r = BigRational::zero();
        row.insert(k, two.clone());
        let (a, b) = moves(s);
        for t in [a, b] {
            match boundary(&t) {
                Some(v) => r += v,
                None => *row.entry(index[&t]).or_insert_with(BigRational::zero) -= BigRational::one(),
            }
        }
        row.retain(|_, v| !v.is_zero());
        rows.push(row);
        rhs.push(r);
    }
    let solution = solve_sparse(rows, rhs);
    let mut memo = petrov_memo().lock().expect("memo lock");
    for (s, v) in states.iter().zip(&solution) {
        memo.insert(s.clone(), v.clone());
    }
    let v = &solution[0];
    if !v.is_integer() {
        return Err(Error::InvalidComposition(format!("non-integral solution {v} for {c}")));
    }
    Ok(v.to_integer().to_u64().expect("value fits"))
}

/// Gauss-Jordan elimination on a nonsingular sparse square system.
fn solve_sparse(mut rows: Vec<BTreeMap<usize, BigRational>>, mut rhs: Vec<BigRational>) -> Vec<BigRational> {
    let m = rows.len();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
    for (r, row) in rows.iter().enumerate() {
        for &k in row.keys() {
            col_rows[k].insert(r);
        }
    }
    let mut used = vec![false; m];
    let mut pivot_row = vec![usize::MAX; m];
    for k in 0..m {
        let r = *col_rows[k].iter().filter(|&&r| !used[r]).min_by_key(|&&r| rows[r].len()).expect("singular system");
        used[r] = true;
        pivot_row[k] = r;
        let inv = rows[r][&k].recip();
        for v in rows[r].values_mut() {
            *v *= &inv;
        }
        rhs[r] *= &inv;
        let pivot = rows[r].clone();
        let pivot_rhs = rhs[r].clone();
        let others: Vec<usize> = col_rows[k].iter().copied().filter(|&o| o != r).collect();
        for o in others {
            let factor = rows[o][&k].clone();
            for (&j, v) in &pivot {
                let entry = rows[o].entry(j).or_insert_with(BigRational::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    rows[o].remove(&j);
                    col_rows[j].remove(&o);
                } else {
                    col_rows[j].insert(o);
                }
            }
            rhs[o] -= &factor * &pivot_rhs;
        }
    }
    (0..m).map(|k| rhs[pivot_row[k]].clone()).collect()
}

/// `Σ_{c' ∈ Cyc(c)} A_{c'} / (n-1)!`, which is always 1.
pub fn cyclic_class_sum(c: &WeakComposition) -> Result<BigRational> {
    let n = validate(c)?;
    let mut total = BigInt::zero();
    for r in c.rotations() {
        total += BigInt::from(mixed_eulerian(&r)?);
    }
    Ok(BigRational::new(total, BigInt::from(factorial(n - 1))))
}

fn check_strong(a: &[u32]) -> Result<()> {
    if a.is_empty() || a.contains(&0) {
        return Err(Error::InvalidComposition(format!("{a:?} is not a strong composition")));
    }
    Ok(())
}

/// `Σ_m A_{0^m a 0^{n-p-m}} t^m` for a strong composition `a` of `n - 1` with `p` parts.
pub fn connected_gf(a: &[u32]) -> Result<Vec<u64>> {
    check_strong(a)?;
    let p = a.len();
    let n = a.iter().sum::<u32>() as usize + 1;
    (0..n - p)
        .map(|m| {
            let mut c = vec![0u32; m];
            c.extend_from_slice(a);
            c.resize(n, 0);
            mixed_eulerian(&WeakComposition(c))
        })
        .collect()
}

/// The numerator of `Σ_j (1+j)^{a_1} ... (p+j)^{a_p} t^j` over `(1-t)^n`,
/// computed from the first `n + 1` series coefficients.
pub fn connected_gf_series(a: &[u32]) -> Result<Vec<BigInt>> {
    check_strong(a)?;
    let n = a.iter().sum::<u32>() as usize + 1;
    let values: Vec<BigInt> = (0..=n)
        .map(|j| a.iter().enumerate().fold(BigInt::one(), |acc, (i, &e)| acc * BigInt::from(i + 1 + j).pow(e)))
        .collect();
    Ok(series::numerator(&values, n))
}
