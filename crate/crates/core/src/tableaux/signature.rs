use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{fill, Partition, Tableau};
use crate::error::{Error, Result};

/// `ε = (e_1, ..., e_{l-1}; f_1, ..., f_{λ_1 - 1})` with entries in `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    e: Vec<bool>,
    f: Vec<bool>,
}

impl Signature {
    pub fn new(shape: &Partition, e: Vec<bool>, f: Vec<bool>) -> Result<Self> {
        let rows = shape.len().saturating_sub(1);
        let cols = (shape.row(1) as usize).saturating_sub(1);
        if e.len() != rows || f.len() != cols {
            return Err(Error::InvalidSignature(format!(
                "shape {shape} needs {rows} row entries and {cols} column entries, got {} and {}",
                e.len(),
                f.len()
            )));
        }
        Ok(Self { e, f })
    }

    /// All `e_i = 1`, all `f_j = 0`: strict columns, weak rows.
    pub fn grassmannian(shape: &Partition) -> Self {
        Self { e: vec![true; shape.len().saturating_sub(1)], f: vec![false; (shape.row(1) as usize).saturating_sub(1)] }
    }

    /// All entries zero.
    pub fn plane(shape: &Partition) -> Self {
        Self {
            e: vec![false; shape.len().saturating_sub(1)],
            f: vec![false; (shape.row(1) as usize).saturating_sub(1)],
        }
    }

    pub fn e_entries(&self) -> &[bool] {
        &self.e
    }

    pub fn f_entries(&self) -> &[bool] {
        &self.f
    }

    /// `e_i`, 1-based.
    pub fn e(&self, i: usize) -> bool {
        self.e[i - 1]
    }

    /// `f_j`, 1-based.
    pub fn f(&self, j: usize) -> bool {
        self.f[j - 1]
    }

    /// `E_i = e_1 + ... + e_{i-1}`.
    pub fn big_e(&self, i: usize) -> u32 {
        self.e[..i - 1].iter().filter(|&&b| b).count() as u32
    }

    /// `F_j = f_1 + ... + f_{j-1}`.
    pub fn big_f(&self, j: usize) -> u32 {
        self.f[..j - 1].iter().filter(|&&b| b).count() as u32
    }

    /// `Ē_i = i - 1 - E_i`.
    pub fn e_bar(&self, i: usize) -> u32 {
        i as u32 - 1 - self.big_e(i)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        write!(f, "e={} f={}", bits(&self.e), bits(&self.f))
    }
}

/// A bijective labeling of the cells of a shape, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling(pub Vec<Vec<u32>>);

impl Labeling {
    /// `ω(i, j)`, 1-based.
    pub fn get(&self, i: u32, j: u32) -> u32 {
        self.0[i as usize - 1][j as usize - 1]
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.0.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join("\n"))
    }
}

/// `ω(i,j) > ω(i+1,j)` iff `e_i = 1` and `ω(i,j) > ω(i,j+1)` iff `f_j = 1`.
pub fn is_compatible(shape: &Partition, sig: &Signature, labeling: &Labeling) -> bool {
    if labeling.0.len() != shape.len() || labeling.0.iter().zip(shape.parts()).any(|(r, &p)| r.len() != p as usize) {
        return false;
    }
    let mut values: Vec<u32> = labeling.0.iter().flatten().copied().collect();
    values.sort_unstable();
    if values != (1..=shape.size() as u32).collect::<Vec<_>>() {
        return false;
    }
    shape.cells().into_iter().all(|(i, j)| {
        let here = labeling.get(i, j);
        let down = !shape.contains(i + 1, j) || (here > labeling.get(i + 1, j)) == sig.e(i as usize);
        let right = !shape.contains(i, j + 1) || (here > labeling.get(i, j + 1)) == sig.f(j as usize);
        down && right
    })
}

/// Topological sort of the order forced by `ε`, taking the smallest available
/// `(row, column)` first.
pub fn compatible_labeling(shape: &Partition, sig: &Signature) -> Labeling {
    let preds = |i: u32, j: u32| {
        let mut p = Vec::with_capacity(4);
        if i > 1 && !sig.e(i as usize - 1) {
            p.push((i - 1, j));
        }
        if shape.contains(i + 1, j) && sig.e(i as usize) {
            p.push((i + 1, j));
        }
        if j > 1 && !sig.f(j as usize - 1) {
            p.push((i, j - 1));
        }
        if shape.contains(i, j + 1) && sig.f(j as usize) {
            p.push((i, j + 1));
        }
        p
    };
    let mut labels: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let done = |labels: &Vec<Vec<u32>>, (i, j): (u32, u32)| labels[i as usize - 1][j as usize - 1] != 0;
    let mut available: BTreeSet<(u32, u32)> =
        shape.cells().into_iter().filter(|&(i, j)| preds(i, j).is_empty()).collect();
    let mut next = 1;
    while let Some(cell) = available.pop_first() {
        labels[cell.0 as usize - 1][cell.1 as usize - 1] = next;
        next += 1;
        let (i, j) = cell;
        let neighbours = [(i + 1, j), (i.wrapping_sub(1), j), (i, j + 1), (i, j.wrapping_sub(1))];
        for nb in neighbours {
            if shape.contains(nb.0, nb.1)
                && !done(&labels, nb)
                && preds(nb.0, nb.1).into_iter().all(|p| done(&labels, p))
            {
                available.insert(nb);
            }
        }
    }
    debug_assert_eq!(next as usize, shape.size() + 1, "the forced order is acyclic");
    Labeling(labels)
}

/// Entries in `1..=N+1`, weakly increasing along rows and columns, strictly
/// down from row `i` when `e_i = 1` and strictly right from column `j` when `f_j = 1`.
pub fn is_epsilon_tableau(t: &Tableau, sig: &Signature, big_n: u32) -> bool {
    let shape = t.shape();
    shape.cells().into_iter().all(|(i, j)| {
        let v = t.get(i, j);
        let down = !shape.contains(i + 1, j) || t.get(i + 1, j) >= v + sig.e(i as usize) as u32;
        let right = !shape.contains(i, j + 1) || t.get(i, j + 1) >= v + sig.f(j as usize) as u32;
        (1..=big_n + 1).contains(&v) && down && right
    })
}

/// Every `ε`-tableau with entries in `1..=N+1`, in lexicographic order of rows.
pub fn epsilon_tableaux(shape: &Partition, sig: &Signature, big_n: u32) -> Vec<Tableau> {
    let lower = |i: usize, j: usize, rows: &[Vec<u32>]| {
        let left = if j > 0 { rows[i][j - 1] + sig.f(j) as u32 } else { 1 };
        let above = if i > 0 { rows[i - 1][j] + sig.e(i) as u32 } else { 1 };
        left.max(above)
    };
    let mut out = Vec::new();
    fill(shape, &lower, &|_| big_n + 1, &mut |rows| out.push(Tableau { rows: rows.to_vec() }));
    out
}

/// `T'_{i,j} = T_{i,j} - F_j + Ē_i`.
pub fn str_map(t: &Tableau, sig: &Signature) -> Result<Tableau> {
    shift(t, |i, j| sig.e_bar(i) as i64 - sig.big_f(j) as i64)
}

/// `T_{i,j} = T'_{i,j} + F_j - Ē_i`.
pub fn str_inverse(t: &Tableau, sig: &Signature) -> Result<Tableau> {
    shift(t, |i, j| sig.big_f(j) as i64 - sig.e_bar(i) as i64)
}

fn shift(t: &Tableau, delta: impl Fn(usize, usize) -> i64) -> Result<Tableau> {
    let rows = t
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &v)| {
                    let s = v as i64 + delta(i + 1, j + 1);
                    u32::try_from(s)
                        .ok()
                        .filter(|&s| s >= 1)
                        .ok_or_else(|| Error::InvalidTableau(format!("entry {s} at ({}, {})", i + 1, j + 1)))
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Tableau::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sig(shape: &Partition, e: &[u8], f: &[u8]) -> Signature {
        Signature::new(shape, e.iter().map(|&b| b == 1).collect(), f.iter().map(|&b| b == 1).collect()).unwrap()
    }

    #[test]
    fn partial_sums() {
        let l = part("3,2,2,1");
        let s = sig(&l, &[1, 1, 1], &[1, 0]);
        assert_eq!((1..=4).map(|i| s.big_e(i)).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!((1..=3).map(|j| s.big_f(j)).collect::<Vec<_>>(), vec![0, 1, 1]);
        assert_eq!(s.e_bar(4), 0);
        assert!(Signature::new(&l, vec![true], vec![]).is_err());
    }

    #[test]
    fn labeling_from_figure() {
        let l = part("3,2,2,1");
        let s = sig(&l, &[1, 1, 0], &[0, 0]);
        let w = Labeling(vec![vec![5, 6, 7], vec![3, 4], vec![1, 2], vec![8]]);
        assert!(is_compatible(&l, &s, &w));
        assert!(is_compatible(&l, &s, &compatible_labeling(&l, &s)));
    }

    #[test]
    fn plane_signature_labels_row_major() {
        let l = part("3,2,2,1");
        let w = compatible_labeling(&l, &Signature::plane(&l));
        assert_eq!(w, Labeling(vec![vec![1, 2, 3], vec![4, 5], vec![6, 7], vec![8]]));
    }

    #[test]
    fn grassmannian_labeling_is_compatible() {
        let l = part("3,2,2,1");
        let s = Signature::grassmannian(&l);
        let w = compatible_labeling(&l, &s);
        assert!(is_compatible(&l, &s, &w));
        let rows = Labeling(vec![vec![6, 7, 8], vec![4, 5], vec![2, 3], vec![1]]);
        assert!(is_compatible(&l, &s, &rows));
    }

    #[test]
    fn str_round_trip() {
        let l = part("3,2,2,1");
        let s = sig(&l, &[1, 1, 0], &[0, 0]);
        for t in epsilon_tableaux(&l, &s, 2) {
            assert!(is_epsilon_tableau(&t, &s, 2));
            let u = str_map(&t, &s).unwrap();
            assert!(u.is_semistandard(), "{t}");
            assert_eq!(str_inverse(&u, &s).unwrap(), t);
        }
    }
}
