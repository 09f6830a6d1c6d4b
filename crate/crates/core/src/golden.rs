//! Reference tables shipped with the crate and their computed counterparts.

use crate::aw::{h_vector, Expansion};
use crate::error::Result;
use crate::perm::Permutation;
use crate::series;

/// `n,wo_w,a_w` for `n = 2..=6`, rows sorted by `n` then by the text of `w_o w`.
pub const TABLE1_CSV: &str = include_str!("../golden/table1.csv");

/// `u,length,numerator` for the indecomposable `u` of length at most 10.
pub const TABLE2_CSV: &str = include_str!("../golden/table2.csv");

pub const TABLE1_HEADER: &str = "n,wo_w,a_w";
pub const TABLE2_HEADER: &str = "u,length,numerator";

/// Largest `n` in the first table.
pub const TABLE1_MAX_N: usize = 6;

/// Renders expansions in the layout of [`TABLE1_CSV`].
pub fn table1_csv(expansions: &[Expansion]) -> String {
    let mut out = format!("{TABLE1_HEADER}\n");
    for e in expansions {
        for t in e.by_index() {
            out.push_str(&format!("{},{},{}\n", e.n, t.wo_w, t.a));
        }
    }
    out
}

/// Rows of [`TABLE1_CSV`] for a single `n`, header excluded.
pub fn table1_rows(n: usize) -> Vec<&'static str> {
    let prefix = format!("{n},");
    TABLE1_CSV.lines().skip(1).filter(|l| l.starts_with(&prefix)).collect()
}

/// The permutations listed in [`TABLE2_CSV`], in file order.
pub fn table2_permutations() -> Vec<Permutation> {
    TABLE2_CSV
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().expect("nonempty row").parse().expect("golden permutation parses"))
        .collect()
}

/// One row in the layout of [`TABLE2_CSV`].
pub fn table2_row(u: &Permutation) -> Result<String> {
    let h = series::trim(h_vector(u)?);
    Ok(format!("{},{},{}", u.stripped(), u.length(), series::format_poly(&h)))
}

/// Renders the given permutations in the layout of [`TABLE2_CSV`].
pub fn table2_csv(perms: &[Permutation]) -> Result<String> {
    let mut out = format!("{TABLE2_HEADER}\n");
    for u in perms {
        out.push_str(&table2_row(u)?);
        out.push('\n');
    }
    Ok(out)
}
