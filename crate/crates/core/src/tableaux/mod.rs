//! Partitions, standard and flagged semistandard tableaux, signatures,
//! compatible labelings and the vexillary `a_w` pipeline.

mod signature;
mod vexillary;

pub use signature::{
    compatible_labeling, epsilon_tableaux, is_compatible, is_epsilon_tableau, str_inverse, str_map, Labeling, Signature,
};
pub use vexillary::{
    aw_vexillary, descent_distribution, dsc, flag_from_signature, grassmannian_count, n_min, shape_and_flag,
    syt_descent_count, syt_with_descent_count, vexillary_inequalities, vexillary_signature,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::factorial;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts `l`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum::<u32>() as usize
    }

    /// `λ_i` for 1-based `i`, zero past the last part.
    pub fn row(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(1);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Cells `(i, j)` in row-major order.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j))).collect()
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        i >= 1 && j >= 1 && self.row(i as usize) >= j
    }

    pub fn hook(&self, i: u32, j: u32) -> u32 {
        let arm = self.row(i as usize) - j;
        let leg = self.conjugate().row(j as usize) - i;
        arm + leg + 1
    }

    pub fn content(&self, i: u32, j: u32) -> i64 {
        j as i64 - i as i64
    }

    pub fn hook_product(&self) -> BigUint {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, (i, j)| acc * (self.row(i as usize) - j + conj.row(j as usize) - i + 1))
    }

    /// `|SYT(λ)|` by the hook-length formula.
    pub fn syt_count(&self) -> u64 {
        (factorial(self.size()) / self.hook_product()).to_u64().expect("fits in u64")
    }

    /// Block form: `(p_q, m_q)` with `p_1 > ... > p_r`.
    pub fn blocks(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `M_q = m_1 + ... + m_q`.
    pub fn block_ends(&self) -> Vec<usize> {
        let mut acc = 0;
        self.blocks()
            .iter()
            .map(|&(_, m)| {
                acc += m;
                acc
            })
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::InvalidPartition(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Weakly increasing row bounds, one per part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Flag(pub Vec<u32>);

impl Flag {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Adds `m` to every entry.
    pub fn shifted(&self, m: u32) -> Flag {
        Flag(self.0.iter().map(|b| b + m).collect())
    }
}

/// A filling of a shape, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        Partition::new(lens).map_err(|e| Error::InvalidTableau(e.to_string()))?;
        Ok(Self { rows })
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `T_{i,j}`, 1-based.
    pub fn get(&self, i: u32, j: u32) -> u32 {
        self.rows[i as usize - 1][j as usize - 1]
    }

    pub fn is_semistandard(&self) -> bool {
        let rows = &self.rows;
        rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&v| v >= 1))
            && (1..rows.len()).all(|i| (0..rows[i].len()).all(|j| rows[i - 1][j] < rows[i][j]))
    }

    pub fn is_standard(&self) -> bool {
        let n = self.shape().size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v as usize > n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        self.is_semistandard() && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Position `(i, j)` of each entry `1..=|λ|` of a standard tableau.
    pub fn positions(&self) -> Vec<(u32, u32)> {
        let n = self.shape().size();
        let mut pos = vec![(0, 0); n];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                pos[v as usize - 1] = (i as u32 + 1, j as u32 + 1);
            }
        }
        pos
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// Visits every filling of `shape` in row-major order whose entry at `(i, j)`
/// lies in `lower(i, j, filled)..=upper(i)`.
fn fill<L, U, V>(shape: &Partition, lower: &L, upper: &U, visit: &mut V)
where
    L: Fn(usize, usize, &[Vec<u32>]) -> u32,
    U: Fn(usize) -> u32,
    V: FnMut(&[Vec<u32>]),
{
    fn rec<L, U, V>(k: usize, cells: &[(usize, usize)], rows: &mut Vec<Vec<u32>>, lower: &L, upper: &U, visit: &mut V)
    where
        L: Fn(usize, usize, &[Vec<u32>]) -> u32,
        U: Fn(usize) -> u32,
        V: FnMut(&[Vec<u32>]),
    {
        if k == cells.len() {
            visit(rows);
            return;
        }
        let (i, j) = cells[k];
        let lo = lower(i, j, rows);
        let hi = upper(i);
        for v in lo..=hi {
            rows[i][j] = v;
            rec(k + 1, cells, rows, lower, upper, visit);
        }
        rows[i][j] = 0;
    }
    let cells: Vec<(usize, usize)> = shape.cells().into_iter().map(|(i, j)| (i as usize - 1, j as usize - 1)).collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    rec(0, &cells, &mut rows, lower, upper, visit);
}

fn ssyt_lower(i: usize, j: usize, rows: &[Vec<u32>]) -> u32 {
    let left = if j > 0 { rows[i][j - 1] } else { 1 };
    let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
    left.max(above)
}

fn check_flag(shape: &Partition, flag: &Flag) {
    assert_eq!(shape.len(), flag.0.len(), "one flag entry per row");
}

/// `|SSYT(λ; b)|`: semistandard fillings with row `i` bounded by `b_i`.
pub fn flagged_ssyt_count(shape: &Partition, flag: &Flag) -> u64 {
    check_flag(shape, flag);
    let mut count = 0u64;
    fill(shape, &ssyt_lower, &|i| flag.0[i], &mut |_| count += 1);
    count
}

/// `SSYT(λ; b)` in lexicographic order of rows.
pub fn flagged_ssyt(shape: &Partition, flag: &Flag) -> Vec<Tableau> {
    check_flag(shape, flag);
    let mut out = Vec::new();
    fill(shape, &ssyt_lower, &|i| flag.0[i], &mut |rows| out.push(Tableau { rows: rows.to_vec() }));
    out
}

/// All standard Young tableaux of shape `λ`.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &[u32], filled: &mut Vec<u32>, rows: &mut Vec<Vec<u32>>, k: u32, n: u32, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..shape.len() {
            let fits = filled[i] < shape[i] && (i == 0 || filled[i - 1] > filled[i]);
            if fits {
                rows[i].push(k);
                filled[i] += 1;
                rec(shape, filled, rows, k + 1, n, out);
                filled[i] -= 1;
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut filled = vec![0; shape.len()];
    let mut rows = vec![Vec::new(); shape.len()];
    rec(shape.parts(), &mut filled, &mut rows, 1, shape.size() as u32, &mut out);
    out.sort();
    out
}
