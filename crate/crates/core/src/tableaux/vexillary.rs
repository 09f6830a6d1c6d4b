use super::{compatible_labeling, standard_tableaux, Flag, Labeling, Partition, Signature, Tableau};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Shape `λ(w)` and flag `φ(w)`, one flag entry per row: rows of length `p`
/// get `max{j : c_j(w) >= p}`.
pub fn shape_and_flag(w: &Permutation) -> (Partition, Flag) {
    let code = w.code();
    let shape = Partition::new(w.shape()).expect("sorted code is a partition");
    let flag = shape
        .parts()
        .iter()
        .map(|&p| code.parts().iter().rposition(|&c| c >= p).expect("part occurs in the code") as u32 + 1)
        .collect();
    (shape, Flag(flag))
}

/// `φ_q >= M_q` and `0 <= φ_{q+1} - φ_q <= m_{q+1} + p_q - p_{q+1}`, on block rows.
pub fn vexillary_inequalities(shape: &Partition, flag: &Flag) -> bool {
    if shape.len() != flag.0.len() {
        return false;
    }
    let blocks = shape.blocks();
    let ends = shape.block_ends();
    let phi: Vec<i64> = ends.iter().map(|&m| flag.0[m - 1] as i64).collect();
    let constant_on_blocks = shape.parts().iter().enumerate().all(|(i, _)| {
        let q = ends.iter().position(|&m| m > i).expect("row lies in a block");
        flag.0[i] as i64 == phi[q]
    });
    constant_on_blocks
        && (0..blocks.len()).all(|q| phi[q] >= ends[q] as i64)
        && (0..blocks.len().saturating_sub(1)).all(|q| {
            let d = phi[q + 1] - phi[q];
            let room = blocks[q + 1].1 as i64 + blocks[q].0 as i64 - blocks[q + 1].0 as i64;
            (0..=room).contains(&d)
        })
}

/// `N_min = max_q (F_{p_q} + E_{M_q})`, the least `N` with a nonempty set of `ε`-tableaux.
pub fn n_min(shape: &Partition, sig: &Signature) -> u32 {
    shape
        .blocks()
        .iter()
        .zip(shape.block_ends())
        .map(|(&(p, _), m)| sig.big_f(p as usize) + sig.big_e(m))
        .max()
        .unwrap_or(0)
}

/// `φ_{ε,N}`: rows of block `q` get `N + 1 - F_{p_q} + Ē_{M_q}`, floored at 0.
pub fn flag_from_signature(shape: &Partition, sig: &Signature, big_n: u32) -> Flag {
    let mut flag = Vec::with_capacity(shape.len());
    for (&(p, m), end) in shape.blocks().iter().zip(shape.block_ends()) {
        let v = (big_n + 1 + sig.e_bar(end)).saturating_sub(sig.big_f(p as usize));
        flag.extend(std::iter::repeat_n(v, m));
    }
    Flag(flag)
}

/// A signature `ε` and `N_u` with `φ_{ε,N_u} = φ(u)`.
///
/// For each consecutive pair of blocks the gap `φ_{q+1} - φ_q` is spent on
/// `f_j = 1` over the lowest columns `p_{q+1}..p_q - 1`, then on `e_i = 0`
/// over the lowest rows `M_q..M_{q+1} - 1`. Free entries are `e = 1`, `f = 0`.
pub fn vexillary_signature(u: &Permutation) -> Result<(Signature, u32)> {
    if !u.is_vexillary() {
        return Err(Error::NotVexillary(u.to_string()));
    }
    let (shape, flag) = shape_and_flag(u);
    if shape.is_empty() {
        return Err(Error::NotApplicable(u.to_string()));
    }
    if !vexillary_inequalities(&shape, &flag) {
        return Err(Error::NotApplicable(u.to_string()));
    }
    let blocks = shape.blocks();
    let ends = shape.block_ends();
    let mut e = vec![true; shape.len() - 1];
    let mut f = vec![false; shape.row(1) as usize - 1];
    for q in 0..blocks.len() - 1 {
        let mut gap = flag.0[ends[q + 1] - 1] - flag.0[ends[q] - 1];
        for j in blocks[q + 1].0..blocks[q].0 {
            if gap == 0 {
                break;
            }
            f[j as usize - 1] = true;
            gap -= 1;
        }
        for i in ends[q]..ends[q + 1] {
            if gap == 0 {
                break;
            }
            e[i - 1] = false;
            gap -= 1;
        }
    }
    let sig = Signature::new(&shape, e, f)?;
    let big_n = n_min(&shape, &sig);
    if flag_from_signature(&shape, &sig, big_n) != flag {
        return Err(Error::NotApplicable(u.to_string()));
    }
    Ok((sig, big_n))
}

/// `dsc(T; ω) = #{k : ω(T^{-1}(k)) > ω(T^{-1}(k+1))}`.
pub fn dsc(t: &Tableau, labeling: &Labeling) -> usize {
    let pos = t.positions();
    pos.windows(2).filter(|w| labeling.get(w[0].0, w[0].1) > labeling.get(w[1].0, w[1].1)).count()
}

/// Entry `d` counts standard tableaux of shape `λ` with `dsc(T; ω) = d`.
pub fn descent_distribution(shape: &Partition, labeling: &Labeling) -> Vec<u64> {
    let mut dist = vec![0u64; shape.size().max(1)];
    for t in standard_tableaux(shape) {
        dist[dsc(&t, labeling)] += 1;
    }
    dist
}

pub fn syt_with_descent_count(shape: &Partition, labeling: &Labeling, d: usize) -> u64 {
    descent_distribution(shape, labeling).get(d).copied().unwrap_or(0)
}

/// Ordinary descents: `k` with `k + 1` in a lower row than `k`.
pub fn syt_descent_count(t: &Tableau) -> usize {
    t.positions().windows(2).filter(|w| w[1].0 > w[0].0).count()
}

/// `|SYT(λ, d)|` for ordinary descents.
pub fn grassmannian_count(shape: &Partition, d: usize) -> u64 {
    standard_tableaux(shape).iter().filter(|t| syt_descent_count(t) == d).count() as u64
}

/// `a_w` for vexillary `w = 1^m × u × 1^j ∈ S'_n`: the number of standard
/// tableaux of shape `λ(u)` with `dsc = m + N_u` under a compatible labeling.
pub fn aw_vexillary(w: &Permutation) -> Result<u64> {
    let n = w.size();
    let ell = w.length();
    if n < 2 || ell + 1 != n {
        return Err(Error::LengthMismatch { length: ell, expected: n.saturating_sub(1) });
    }
    if !w.is_vexillary() {
        return Err(Error::NotVexillary(w.to_string()));
    }
    let (m, u, _) = w.quasi_decompose().ok_or_else(|| Error::Decomposable(w.to_string()))?;
    let (sig, big_n) = vexillary_signature(&u)?;
    let (shape, _) = shape_and_flag(&u);
    let labeling = compatible_labeling(&shape, &sig);
    Ok(syt_with_descent_count(&shape, &labeling, m + big_n as usize))
}
