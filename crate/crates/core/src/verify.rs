//! Exhaustive verification suites over `S'_k` and related families, `k <= n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aw::{self, aw, Method};
use crate::error::Result;
use crate::golden;
use crate::mixed_eulerian::{
    connected_gf, connected_gf_series, cyclic_class_sum, mixed_eulerian, mixed_eulerian_petrov,
};
use crate::perm::{binomial, permutations, s_prime, weak_compositions, Permutation, WeakComposition};
use crate::pipedreams::enumerate_pipe_dreams;
use crate::poly::{int, macdonald_nu, principal_specialization, schubert, SparsePoly};
use crate::series;
use crate::tableaux::{
    compatible_labeling, descent_distribution, flagged_ssyt_count, shape_and_flag, vexillary_inequalities,
    vexillary_signature,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Symmetries,
    CyclicSum,
    Methods,
    MixedEulerian,
    Vexillary,
    Lukasiewicz,
    PipeDreams,
    Tables,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Symmetries,
        Suite::CyclicSum,
        Suite::Methods,
        Suite::MixedEulerian,
        Suite::Vexillary,
        Suite::Lukasiewicz,
        Suite::PipeDreams,
        Suite::Tables,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Symmetries => "symmetries",
            Suite::CyclicSum => "cyclic-sum",
            Suite::Methods => "methods",
            Suite::MixedEulerian => "mixed-eulerian",
            Suite::Vexillary => "vexillary",
            Suite::Lukasiewicz => "lukasiewicz",
            Suite::PipeDreams => "pipe-dreams",
            Suite::Tables => "tables",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// One identity checked over a family of cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(identity: impl Into<String>) -> Self {
        Self { identity: identity.into(), cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(case());
        }
    }

    /// Runs `test` on every item in parallel; failures keep the input order.
    fn over<T: Sync, F>(identity: impl Into<String>, items: &[T], test: F) -> Self
    where
        F: Fn(&T) -> Option<String> + Sync,
    {
        let failures: Vec<String> = items.par_iter().filter_map(&test).collect();
        Self { identity: identity.into(), cases: items.len(), failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: Suite,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n <= {})", self.suite, self.n)?;
        for c in &self.checks {
            let verdict = if c.passed() { "ok" } else { "FAIL" };
            writeln!(f, "  {verdict:4} {:>6} cases  {}", c.cases, c.identity)?;
            for case in c.failures.iter().take(5) {
                writeln!(f, "         counterexample: {case}")?;
            }
        }
        Ok(())
    }
}

/// Runs `suite` (every suite for [`Suite::All`]) for sizes up to `n`.
pub fn run(suite: Suite, n: usize) -> Result<Vec<Report>> {
    if suite == Suite::All {
        return Suite::EACH.iter().map(|&s| run_one(s, n)).collect();
    }
    run_one(suite, n).map(|r| vec![r])
}

fn run_one(suite: Suite, n: usize) -> Result<Report> {
    let checks = match suite {
        Suite::Symmetries => symmetries(n),
        Suite::CyclicSum => cyclic_sums(n),
        Suite::Methods => methods(n),
        Suite::MixedEulerian => mixed_eulerian_suite(n),
        Suite::Vexillary => vexillary(n),
        Suite::Lukasiewicz => lukasiewicz(n),
        Suite::PipeDreams => pipe_dreams(n),
        Suite::Tables => tables(n)?,
        Suite::All => unreachable!("expanded by run"),
    };
    Ok(Report { suite, n, checks })
}

fn all_s_prime(n: usize) -> Vec<Permutation> {
    (2..=n).flat_map(s_prime).collect()
}

fn all_perms(n: usize) -> Vec<Permutation> {
    (1..=n).flat_map(permutations).collect()
}

fn value(w: &Permutation, method: Method) -> u64 {
    aw(w, method).expect("w lies in S'_n").value
}

fn symmetries(n: usize) -> Vec<Check> {
    let perms = all_s_prime(n);
    let pattern = Permutation::new(vec![2, 1, 3]).expect("valid pattern");
    vec![
        Check::over("a_w = a_{w^-1}", &perms, |w| {
            let (a, b) = (value(w, Method::Klyachko), value(&w.inverse(), Method::Klyachko));
            (a != b).then(|| format!("{w}: {a} vs {b}"))
        }),
        Check::over("a_w = a_{w_o w w_o}", &perms, |w| {
            let (a, b) = (value(w, Method::Klyachko), value(&w.conjugate_longest(), Method::Klyachko));
            (a != b).then(|| format!("{w}: {a} vs {b}"))
        }),
        Check::over("dominant or 213-avoiding => a_w = 1", &perms, |w| {
            let special = w.is_dominant() || w.avoids(w.size(), &pattern);
            let a = value(w, Method::Klyachko);
            (special && a != 1).then(|| format!("{w}: {a}"))
        }),
        Check::over("0 < a_w <= |Red(w)|", &perms, |w| {
            let a = value(w, Method::Klyachko);
            let red = w.count_reduced_words();
            (!(1..=red).contains(&a)).then(|| format!("{w}: {a} vs {red}"))
        }),
    ]
}

fn cyclic_sums(n: usize) -> Vec<Check> {
    let perms = all_s_prime(n);
    vec![
        Check::over("sum over cyclic shifts of a = |Red(w)|", &perms, |w| {
            let s = aw::cyclic_sum(w, Method::Klyachko).expect("valid");
            let red = w.count_reduced_words();
            (s != red).then(|| format!("{w}: {s} vs {red}"))
        }),
        Check::over("indecomposable => a_w = |Red(w)|", &perms, |w| {
            let a = value(w, Method::Klyachko);
            let red = w.count_reduced_words();
            (w.is_indecomposable() && a != red).then(|| format!("{w}: {a} vs {red}"))
        }),
    ]
}

fn methods(n: usize) -> Vec<Check> {
    let perms = all_s_prime(n);
    let special = |w: &Permutation| -> Vec<(&'static str, u64)> {
        let size = w.size();
        let mut out = Vec::new();
        if w.is_coxeter(size) {
            out.push(("coxeter", aw::coxeter_aw(w).expect("coxeter")));
        }
        if w.is_lukasiewicz(size) {
            out.push(("lukasiewicz", enumerate_pipe_dreams(w).len() as u64));
        }
        let conj = w.conjugate_longest();
        if conj.is_lukasiewicz(size) {
            out.push(("lukasiewicz-conjugate", principal_specialization(&conj)));
        }
        if w.grassmannian_descent().is_some() {
            out.push(("grassmannian", aw::grassmannian_aw(w).expect("grassmannian")));
        }
        if w.is_vexillary() {
            out.push(("vexillary", crate::tableaux::aw_vexillary(w).expect("vexillary")));
        }
        out
    };
    vec![
        Check::over("ds = mixed = klyachko", &perms, |w| {
            let vals: Vec<u64> = Method::GENERAL.iter().map(|&m| value(w, m)).collect();
            vals.windows(2).any(|p| p[0] != p[1]).then(|| format!("{w}: {vals:?}"))
        }),
        Check::over("every applicable special formula = ds", &perms, |w| {
            let a = value(w, Method::Ds);
            let bad: Vec<String> =
                special(w).into_iter().filter(|&(_, v)| v != a).map(|(name, v)| format!("{name}={v}")).collect();
            (!bad.is_empty()).then(|| format!("{w}: ds={a} {}", bad.join(" ")))
        }),
        Check::over("auto = ds", &perms, |w| {
            let (a, b) = (value(w, Method::Auto), value(w, Method::Ds));
            (a != b).then(|| format!("{w}: {a} vs {b}"))
        }),
    ]
}

fn strong_compositions(total: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in strong_compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn eulerian_by_descents(m: usize, k: usize) -> u64 {
    permutations(m).iter().filter(|w| w.descents().len() == k).count() as u64
}

fn mixed_eulerian_suite(n: usize) -> Vec<Check> {
    let comps: Vec<WeakComposition> = (1..=n).flat_map(|k| weak_compositions((k - 1) as u32, k)).collect();
    let mut eulerian = Check::new("A_{0^{k-1} (n-1) 0^{n-k}} = Eulerian(n-1, k-1) by descent tally");
    for size in 2..=n {
        for k in 1..size {
            let mut c = vec![0u32; size];
            c[k - 1] = (size - 1) as u32;
            let a = mixed_eulerian(&WeakComposition(c)).expect("valid");
            let e = eulerian_by_descents(size - 1, k - 1);
            eulerian.record(a == e, || format!("n={size} k={k}: {a} vs {e}"));
        }
    }
    let strong: Vec<Vec<u32>> = (1..n as u32).flat_map(strong_compositions).collect();
    vec![
        Check::over("monomial expansion = Petrov relations", &comps, |c| {
            let (a, b) = (mixed_eulerian(c).expect("valid"), mixed_eulerian_petrov(c).expect("valid"));
            (a != b).then(|| format!("{c}: {a} vs {b}"))
        }),
        Check::over("cyclic class sum = 1", &comps, |c| {
            let s = cyclic_class_sum(c).expect("valid");
            (s != BigRational::one()).then(|| format!("{c}: {s}"))
        }),
        eulerian,
        Check::over("connected generating function = series numerator", &strong, |a| {
            let direct: Vec<BigInt> = connected_gf(a).expect("strong").into_iter().map(BigInt::from).collect();
            let numer = series::trim(connected_gf_series(a).expect("strong"));
            (series::trim(direct.clone()) != numer).then(|| format!("{a:?}: {direct:?} vs {numer:?}"))
        }),
    ]
}

fn vexillary(n: usize) -> Vec<Check> {
    let perms = all_perms(n);
    let vex: Vec<Permutation> = perms.iter().filter(|w| w.is_vexillary()).cloned().collect();
    let indecomposable: Vec<Permutation> =
        all_s_prime(n).into_iter().filter(|u| u.is_vexillary() && u.is_indecomposable()).collect();
    vec![
        Check::over("vexillary: |SSYT(λ, φ)| = ν_w", &vex, |w| {
            let (shape, flag) = shape_and_flag(w);
            let (a, b) = (flagged_ssyt_count(&shape, &flag), principal_specialization(w));
            (a != b).then(|| format!("{w}: {a} vs {b}"))
        }),
        Check::over("vexillary: shape and flag satisfy the inequalities", &vex, |w| {
            let (shape, flag) = shape_and_flag(w);
            (!w.is_identity() && !vexillary_inequalities(&shape, &flag)).then(|| w.to_string())
        }),
        Check::over("indecomposable vexillary: h-vector = labeled descents shifted by N_u", &indecomposable, |u| {
            let (sig, big_n) = match vexillary_signature(u) {
                Ok(v) => v,
                Err(e) => return Some(format!("{u}: {e}")),
            };
            let (shape, _) = shape_and_flag(u);
            let dist = descent_distribution(&shape, &compatible_labeling(&shape, &sig));
            let shifted: Vec<BigInt> = dist.into_iter().skip(big_n as usize).map(BigInt::from).collect();
            let h = aw::h_vector(u).expect("indecomposable");
            (series::trim(shifted.clone()) != series::trim(h.clone())).then(|| format!("{u}: {shifted:?} vs {h:?}"))
        }),
        Check::over("vexillary in S'_n: tableau route = ds", &all_s_prime(n), |w| {
            if !w.is_vexillary() {
                return None;
            }
            let (a, b) = (crate::tableaux::aw_vexillary(w).expect("vexillary"), value(w, Method::Ds));
            (a != b).then(|| format!("{w}: {a} vs {b}"))
        }),
    ]
}

fn catalan(m: u64) -> u64 {
    (binomial(2 * m, m) / (m + 1)).to_u64().expect("fits")
}

fn lukasiewicz(n: usize) -> Vec<Check> {
    let mut count = Check::new("|Luk_n| = Catalan(n-1)");
    for size in 1..=n {
        let luk = s_prime(size).iter().filter(|w| w.is_lukasiewicz(size)).count() as u64;
        let cat = catalan(size as u64 - 1);
        count.record(luk == cat, || format!("n={size}: {luk} vs {cat}"));
    }
    let perms = all_s_prime(n);
    vec![
        count,
        Check::over("Luk: a_w = |PD(w)|", &perms, |w| {
            if !w.is_lukasiewicz(w.size()) {
                return None;
            }
            let (a, b) = (enumerate_pipe_dreams(w).len() as u64, value(w, Method::Ds));
            (a != b).then(|| format!("{w}: {a} vs {b}"))
        }),
        Check::over("code is Łukasiewicz iff ā(w) is", &perms, |w| {
            (w.code().is_lukasiewicz() != w.abar().is_lukasiewicz()).then(|| w.to_string())
        }),
        Check::over("Luk is closed under inverses", &perms, |w| {
            let n = w.size();
            (w.is_lukasiewicz(n) && !w.inverse().is_lukasiewicz(n)).then(|| w.to_string())
        }),
        Check::over("exactly one cyclic shift is Łukasiewicz", &perms, |w| {
            let hits = w.cyclic_shifts().iter().filter(|v| v.is_lukasiewicz(w.size())).count();
            (hits != 1).then(|| format!("{w}: {hits}"))
        }),
    ]
}

fn pipe_dreams(n: usize) -> Vec<Check> {
    let perms = all_perms(n);
    vec![
        Check::over("|PD(w)| = ν_w = Macdonald sum", &perms, |w| {
            let pd = enumerate_pipe_dreams(w).len() as u64;
            let (nu, mac) = (principal_specialization(w), macdonald_nu(w));
            (pd != nu || nu != mac).then(|| format!("{w}: {pd}, {nu}, {mac}"))
        }),
        Check::over("Schubert polynomial = pipe dream sum", &perms, |w| {
            let size = w.size();
            let mut sum = SparsePoly::zero(size);
            for d in enumerate_pipe_dreams(w) {
                sum.add_term(crate::poly::Monomial(d.row_weight(size).0), int(1));
            }
            (sum != schubert(w, size)).then(|| w.to_string())
        }),
    ]
}

fn tables(n: usize) -> Result<Vec<Check>> {
    let mut t1 = Check::new("τ_n matches the first reference table");
    for size in 2..=n.min(golden::TABLE1_MAX_N) {
        let e = aw::tau_expansion(size, Method::Auto, size)?;
        let rendered = golden::table1_csv(std::slice::from_ref(&e));
        let got: Vec<&str> = rendered.lines().skip(1).collect();
        let want = golden::table1_rows(size);
        t1.record(got == want, || format!("n={size}"));
    }
    let mut t2 = Check::new("h-vectors match the second reference table");
    for (u, want) in golden::table2_permutations().iter().zip(golden::TABLE2_CSV.lines().skip(1)) {
        if u.size() > n {
            continue;
        }
        let got = golden::table2_row(u)?;
        t2.record(got == want, || format!("{got} vs {want}"));
    }
    Ok(vec![t1, t2])
}
