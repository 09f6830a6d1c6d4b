//! Reduced pipe dreams and ladder moves.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::perm::{Permutation, WeakComposition};

/// Cross positions `(row, column)`, 1-based; every other cell is an elbow.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PipeDream {
    crosses: BTreeSet<(u32, u32)>,
}

impl PipeDream {
    pub fn new(crosses: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let crosses: BTreeSet<(u32, u32)> = crosses.into_iter().collect();
        assert!(crosses.iter().all(|&(r, c)| r >= 1 && c >= 1), "positions are 1-based");
        Self { crosses }
    }

    /// Row `i` has crosses in columns `1..=c_i` where `c = code(w)`.
    pub fn bottom(w: &Permutation) -> Self {
        let code = w.code();
        Self::new(code.parts().iter().enumerate().flat_map(|(i, &ci)| (1..=ci).map(move |j| (i as u32 + 1, j))))
    }

    pub fn crosses(&self) -> &BTreeSet<(u32, u32)> {
        &self.crosses
    }

    pub fn len(&self) -> usize {
        self.crosses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crosses.is_empty()
    }

    pub fn has_cross(&self, r: u32, c: u32) -> bool {
        self.crosses.contains(&(r, c))
    }

    /// Largest `row + column` over the crosses.
    fn extent(&self) -> u32 {
        self.crosses.iter().map(|&(r, c)| r + c).max().unwrap_or(1)
    }

    /// Follows the pipe entering row `i` from the left to the column where it leaves the top.
    fn exit_column(&self, i: u32) -> u32 {
        let (mut r, mut c) = (i, 1);
        let mut east = true;
        loop {
            if !self.has_cross(r, c) {
                east = !east;
            }
            if east {
                c += 1;
            } else {
                r -= 1;
                if r == 0 {
                    return c;
                }
            }
        }
    }

    /// The permutation `i -> exit column of pipe i`.
    pub fn trace_permutation(&self) -> Permutation {
        let n = self.extent();
        let word = (1..=n).map(|i| self.exit_column(i)).collect();
        Permutation::new(word).expect("pipes exit through distinct columns")
    }

    /// No two pipes cross twice.
    pub fn is_reduced(&self) -> bool {
        self.trace_permutation().length() == self.len()
    }

    /// Number of crosses per row, `n` entries.
    pub fn row_weight(&self, n: usize) -> WeakComposition {
        let mut c = vec![0u32; n];
        for &(r, _) in &self.crosses {
            c[r as usize - 1] += 1;
        }
        WeakComposition(c)
    }

    /// `a_k = #{crosses with row + column = k + 1}`, `n` entries.
    pub fn antidiagonal_weight(&self, n: usize) -> WeakComposition {
        let mut a = vec![0u32; n];
        for &(r, c) in &self.crosses {
            a[(r + c) as usize - 2] += 1;
        }
        WeakComposition(a)
    }

    /// Reflection in the main diagonal.
    pub fn transpose(&self) -> Self {
        Self::new(self.crosses.iter().map(|&(r, c)| (c, r)))
    }

    /// All pipe dreams reached by one ladder move.
    pub fn ladder_moves(&self) -> Vec<PipeDream> {
        let mut out = Vec::new();
        for &(i, j) in &self.crosses {
            if self.has_cross(i, j + 1) {
                continue;
            }
            let mut t = 1;
            while t < i {
                let left = self.has_cross(i - t, j);
                let right = self.has_cross(i - t, j + 1);
                match (left, right) {
                    (true, true) => t += 1,
                    (false, false) => {
                        let mut next = self.crosses.clone();
                        next.remove(&(i, j));
                        next.insert((i - t, j + 1));
                        out.push(PipeDream { crosses: next });
                        break;
                    }
                    _ => break,
                }
            }
        }
        out
    }

    /// Rows `1..n` of the staircase, `+` for a cross and `/` for an elbow.
    pub fn render(&self, n: usize) -> String {
        let mut s = String::new();
        for r in 1..n as u32 {
            let cells: Vec<&str> = (1..=n as u32 - r).map(|c| if self.has_cross(r, c) { "+" } else { "/" }).collect();
            writeln!(s, "{}", cells.join(" ")).expect("write to string");
        }
        s
    }
}

/// `PD(w)`: the closure of the bottom pipe dream under ladder moves, sorted.
pub fn enumerate_pipe_dreams(w: &Permutation) -> Vec<PipeDream> {
    let start = PipeDream::bottom(w);
    let mut seen: HashSet<PipeDream> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for q in p.ladder_moves() {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<PipeDream> = seen.into_iter().collect();
    out.sort();
    out
}
