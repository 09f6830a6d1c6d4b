//! Permutations in one-line notation and their basic statistics.
//!
//! A [`Permutation`] keeps the word it was built from, so `size()` is the
//! ambient `n` of `S_n`. Equality, hashing and ordering ignore trailing fixed
//! points, which realizes the embedding `S_n -> S_{n+1} -> ...`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n as u32).collect() }
    }

    /// The longest element `n n-1 ... 1` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self { word: (1..=n as u32).rev().collect() }
    }

    /// Inverse of [`Permutation::code`]: `c_i <= n - i` is required.
    pub fn from_code(code: &[u32]) -> Result<Self> {
        let n = code.len();
        let mut avail: Vec<u32> = (1..=n as u32).collect();
        let mut word = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            let bound = (n - 1 - i) as u32;
            if c > bound {
                return Err(Error::CodeOutOfRange { index: i + 1, value: c, bound });
            }
            word.push(avail.remove(c as usize));
        }
        Ok(Self { word })
    }

    /// Ambient size `n` (length of the stored word).
    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Size after removing trailing fixed points.
    pub fn stripped_size(&self) -> usize {
        let mut k = self.word.len();
        while k > 0 && self.word[k - 1] == k as u32 {
            k -= 1;
        }
        k
    }

    pub fn stripped(&self) -> Self {
        Self { word: self.word[..self.stripped_size()].to_vec() }
    }

    /// The same permutation viewed in `S_n`.
    pub fn embed(&self, n: usize) -> Result<Self> {
        let k = self.stripped_size();
        if n < k {
            return Err(Error::InvalidPermutation(format!("{self} does not fit in S_{n}")));
        }
        let mut word = self.word[..k].to_vec();
        word.extend(k as u32 + 1..=n as u32);
        Ok(Self { word })
    }

    /// `w(i)` for 1-based `i`, extended by `w(i) = i` past the stored word.
    pub fn get(&self, i: usize) -> u32 {
        if i <= self.word.len() {
            self.word[i - 1]
        } else {
            i as u32
        }
    }

    pub fn is_identity(&self) -> bool {
        self.stripped_size() == 0
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Self { word }
    }

    /// The composite `self ∘ other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.size().max(other.size());
        Self { word: (1..=n).map(|i| self.get(other.get(i) as usize)).collect() }
    }

    /// `w s_i`: swaps positions `i` and `i + 1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut word = self.embed(self.size().max(i + 1)).expect("fits").word;
        word.swap(i - 1, i);
        Self { word }
    }

    /// `w_o w` in `S_n` with `n = size()`.
    pub fn longest_times(&self) -> Self {
        let n = self.size() as u32;
        Self { word: self.word.iter().map(|&v| n + 1 - v).collect() }
    }

    /// `w_o w w_o` in `S_n` with `n = size()`.
    pub fn conjugate_longest(&self) -> Self {
        let n = self.size() as u32;
        Self { word: self.word.iter().rev().map(|&v| n + 1 - v).collect() }
    }

    /// Lehmer code `c_i = #{j > i : w(j) < w(i)}`, one entry per stored position.
    pub fn code(&self) -> WeakComposition {
        let w = &self.word;
        let parts = (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count() as u32).collect();
        WeakComposition(parts)
    }

    pub fn length(&self) -> usize {
        self.code().sum() as usize
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.word.len()).filter(|&i| self.word[i - 1] > self.word[i]).collect()
    }

    /// Nonzero code entries sorted decreasingly.
    pub fn shape(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self.code().0.into_iter().filter(|&c| c > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// Whether `w`, viewed in `S_n`, has no occurrence of `pattern`.
    ///
    /// The pattern is taken with its stored size, so `213` and `21` differ.
    pub fn avoids(&self, n: usize, pattern: &Permutation) -> bool {
        let word = self.embed(n).expect("ambient size too small").word;
        let k = pattern.size();
        if k > n {
            return true;
        }
        let mut chosen = Vec::with_capacity(k);
        !occurs(&word, &pattern.word, 0, &mut chosen)
    }

    /// 2143-avoiding.
    pub fn is_vexillary(&self) -> bool {
        self.avoids(self.size(), &Permutation { word: vec![2, 1, 4, 3] })
    }

    /// 132-avoiding, equivalently the code is weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.avoids(self.size(), &Permutation { word: vec![1, 3, 2] })
    }

    /// Exactly one descent in the stored word.
    pub fn grassmannian_descent(&self) -> Option<usize> {
        match self.descents().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// All reduced words in lexicographic order.
    pub fn reduced_words(&self) -> Vec<ReducedWord> {
        let mut memo = HashMap::new();
        let mut words: Vec<ReducedWord> =
            reduced_words_rec(&self.stripped().word, &mut memo).iter().cloned().map(ReducedWord).collect();
        words.sort();
        words
    }

    /// `|Red(w)|`, counted without listing the words.
    ///
    /// Panics if the count overflows `u64`.
    pub fn count_reduced_words(&self) -> u64 {
        let mut memo = HashMap::new();
        count_rec(&self.stripped().word, &mut memo)
    }

    /// Some reduced word, following the leftmost descent at each step.
    pub fn one_reduced_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut letters = Vec::new();
        while let Some(&i) = w.descents().first() {
            letters.push(i as u32);
            w = w.times_simple(i);
        }
        letters.reverse();
        ReducedWord(letters)
    }

    /// Positions `i < size()` with `max(w(1..=i)) > i`.
    pub fn support(&self) -> Vec<usize> {
        let mut max = 0;
        let mut out = Vec::new();
        for i in 1..self.word.len() {
            max = max.max(self.word[i - 1]);
            if max as usize > i {
                out.push(i);
            }
        }
        out
    }

    /// Maximal factorization `w = w_1 x ... x w_k` of the stored word.
    pub fn block_factorization(&self) -> Vec<Permutation> {
        let mut blocks = Vec::new();
        let mut start = 0;
        let mut max = 0;
        for i in 0..self.word.len() {
            max = max.max(self.word[i]);
            if max as usize == i + 1 {
                let off = start as u32;
                blocks.push(Permutation { word: self.word[start..=i].iter().map(|v| v - off).collect() });
                start = i + 1;
            }
        }
        blocks
    }

    /// The direct sum `u x v`.
    pub fn concat(blocks: &[Permutation]) -> Permutation {
        let mut word = Vec::new();
        for b in blocks {
            let off = word.len() as u32;
            word.extend(b.word.iter().map(|v| v + off));
        }
        Permutation { word }
    }

    pub fn is_indecomposable(&self) -> bool {
        self.block_factorization().len() == 1
    }

    /// Splits `w = 1^m x u x 1^j` with `u` indecomposable of size at least 2.
    pub fn quasi_decompose(&self) -> Option<(usize, Permutation, usize)> {
        let blocks = self.block_factorization();
        let big: Vec<usize> = (0..blocks.len()).filter(|&k| blocks[k].size() > 1).collect();
        match big.as_slice() {
            [k] => Some((*k, blocks[*k].clone(), blocks.len() - k - 1)),
            _ => None,
        }
    }

    /// `1^m x u x 1^j`.
    pub fn shifted(&self, m: usize, j: usize) -> Permutation {
        let mut word: Vec<u32> = (1..=m as u32).collect();
        word.extend(self.word.iter().map(|v| v + m as u32));
        let len = word.len() as u32;
        word.extend(len + 1..=len + j as u32);
        Permutation { word }
    }

    /// The rotations of the block factorization, starting with `w` itself.
    pub fn cyclic_shifts(&self) -> Vec<Permutation> {
        let blocks = self.block_factorization();
        (0..blocks.len())
            .map(|i| {
                let rotated: Vec<Permutation> = blocks[i..].iter().chain(&blocks[..i]).cloned().collect();
                Permutation::concat(&rotated)
            })
            .collect()
    }

    /// Whether `w ∈ S'_n` has a Łukasiewicz code.
    pub fn is_lukasiewicz(&self, n: usize) -> bool {
        match self.embed(n) {
            Ok(w) => w.code().is_lukasiewicz(),
            Err(_) => false,
        }
    }

    /// Product of `s_1, ..., s_{n-1}` in some order, each exactly once.
    pub fn is_coxeter(&self, n: usize) -> bool {
        n >= 2 && self.stripped_size() == n && self.length() == n - 1 && self.support().len() == n - 1
    }

    /// `a_i = #{j <= i : c_j > i - j}`.
    pub fn abar(&self) -> WeakComposition {
        let c = self.code().0;
        let parts = (0..c.len()).map(|i| (0..=i).filter(|&j| c[j] as usize > i - j).count() as u32).collect();
        WeakComposition(parts)
    }
}

fn occurs(word: &[u32], pattern: &[u32], from: usize, chosen: &mut Vec<u32>) -> bool {
    let k = chosen.len();
    if k == pattern.len() {
        return true;
    }
    for pos in from..word.len() {
        let v = word[pos];
        let consistent = (0..k).all(|t| (chosen[t] < v) == (pattern[t] < pattern[k]));
        if consistent {
            chosen.push(v);
            if occurs(word, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

type WordList = std::rc::Rc<Vec<Vec<u32>>>;

fn reduced_words_rec(w: &[u32], memo: &mut HashMap<Vec<u32>, WordList>) -> WordList {
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let mut out = Vec::new();
    let mut any = false;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            any = true;
            let mut v = w.to_vec();
            v.swap(i - 1, i);
            let k = strip_len(&v);
            for word in reduced_words_rec(&v[..k], memo).iter() {
                let mut word = word.clone();
                word.push(i as u32);
                out.push(word);
            }
        }
    }
    if !any {
        out.push(Vec::new());
    }
    let out = std::rc::Rc::new(out);
    memo.insert(w.to_vec(), out.clone());
    out
}

fn count_rec(w: &[u32], memo: &mut HashMap<Vec<u32>, u64>) -> u64 {
    if let Some(&hit) = memo.get(w) {
        return hit;
    }
    let mut total: u64 = 0;
    let mut any = false;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            any = true;
            let mut v = w.to_vec();
            v.swap(i - 1, i);
            let k = strip_len(&v);
            total = total.checked_add(count_rec(&v[..k], memo)).expect("reduced word count overflows u64");
        }
    }
    if !any {
        total = 1;
    }
    memo.insert(w.to_vec(), total);
    total
}

fn strip_len(w: &[u32]) -> usize {
    let mut k = w.len();
    while k > 0 && w[k - 1] == k as u32 {
        k -= 1;
    }
    k
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.word[..self.stripped_size()] == other.word[..other.stripped_size()]
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word[..self.stripped_size()].hash(state);
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word[..self.stripped_size()].cmp(&other.word[..other.stripped_size()])
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    let sep = if letters.iter().any(|&v| v > 9) { "," } else { "" };
    for (k, v) in letters.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

fn parse_letters(s: &str) -> std::result::Result<Vec<u32>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty word".into());
    }
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"))).collect()
    } else {
        s.chars().map(|ch| ch.to_digit(10).ok_or_else(|| format!("bad digit {ch:?}"))).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        write_letters(f, &self.word)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = parse_letters(s).map_err(Error::InvalidPermutation)?;
        Permutation::new(word)
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(w: Permutation) -> String {
        w.to_string()
    }
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(pub Vec<u32>);

impl WeakComposition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `n` parts summing to `n - 1` with `c_1 + ... + c_k >= k` for `k < n`.
    pub fn is_lukasiewicz(&self) -> bool {
        let n = self.len();
        if n == 0 || self.sum() as usize != n - 1 {
            return false;
        }
        let mut partial = 0usize;
        for k in 1..n {
            partial += self.0[k - 1] as usize;
            if partial < k {
                return false;
            }
        }
        true
    }

    /// `{k : c_1 + ... + c_k < k}` for `k < n`.
    pub fn deficit_set(&self) -> Vec<usize> {
        let mut partial = 0usize;
        let mut out = Vec::new();
        for k in 1..self.len() {
            partial += self.0[k - 1] as usize;
            if partial < k {
                out.push(k);
            }
        }
        out
    }

    /// The `n` cyclic rotations `(c_{k+1}, ..., c_n, c_1, ..., c_k)`.
    pub fn rotations(&self) -> Vec<WeakComposition> {
        let n = self.len();
        (0..n).map(|k| WeakComposition(self.0[k..].iter().chain(&self.0[..k]).copied().collect())).collect()
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(WeakComposition(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::InvalidComposition(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(WeakComposition)
    }
}

/// A word `i_1 ... i_l` standing for `s_{i_1} ... s_{i_l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord(pub Vec<u32>);

impl ReducedWord {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    /// The product `s_{i_1} ... s_{i_l}` in `S_n`.
    pub fn product(&self, n: usize) -> Permutation {
        let mut w = Permutation::identity(n);
        for &i in &self.0 {
            w = w.times_simple(i as usize);
        }
        w
    }

    /// Letter multiplicities `(c_1, ..., c_n)`.
    pub fn content(&self, n: usize) -> WeakComposition {
        letter_content(&self.0, n)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl FromStr for ReducedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(ReducedWord(Vec::new()));
        }
        parse_letters(s).map(ReducedWord).map_err(Error::InvalidComposition)
    }
}

pub fn letter_content(letters: &[u32], n: usize) -> WeakComposition {
    let mut c = vec![0u32; n];
    for &i in letters {
        c[i as usize - 1] += 1;
    }
    WeakComposition(c)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of `w ∈ S_n` whose descent set is exactly `set` (a subset of `[n-1]`).
pub fn beta(n: usize, set: &[usize]) -> BigUint {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    assert!(set.iter().all(|&s| s >= 1 && s < n.max(1)), "descent set must lie in [n-1]");
    let facts: Vec<BigUint> = (0..=n).map(factorial).collect();
    let k = set.len();
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << k) {
        let mut prev = 0;
        let mut denom = BigUint::one();
        for (b, &s) in set.iter().enumerate() {
            if mask >> b & 1 == 1 {
                denom *= &facts[s - prev];
                prev = s;
            }
        }
        denom *= &facts[n - prev];
        let term = BigInt::from(&facts[n] / denom);
        if (k - mask.count_ones() as usize).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    assert!(!total.is_negative());
    total.to_biguint().expect("nonnegative")
}

/// All of `S_n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut word: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation { word: word.clone() }];
    while let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) {
        let j = (i..word.len()).rev().find(|&j| word[j] > word[i - 1]).expect("pivot");
        word.swap(i - 1, j);
        word[i..].reverse();
        out.push(Permutation { word: word.clone() });
    }
    out
}

/// `S'_n`: the permutations of `S_n` of length `n - 1`, in lexicographic order.
pub fn s_prime(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut code = vec![0u32; n];
    codes_with_sum(&mut code, 0, (n - 1) as u32, &mut |c| {
        out.push(Permutation::from_code(c).expect("valid code"));
    });
    out.sort_by(|a, b| a.word.cmp(&b.word));
    out
}

fn codes_with_sum(code: &mut Vec<u32>, i: usize, rest: u32, emit: &mut impl FnMut(&[u32])) {
    let n = code.len();
    if i == n {
        if rest == 0 {
            emit(code);
        }
        return;
    }
    let cap = ((n - 1 - i) as u32).min(rest);
    for v in 0..=cap {
        code[i] = v;
        codes_with_sum(code, i + 1, rest - v, emit);
    }
    code[i] = 0;
}

/// All weak compositions of `total` into `parts` parts, lexicographically decreasing.
pub fn weak_compositions(total: u32, parts: usize) -> Vec<WeakComposition> {
    fn rec(prefix: &mut Vec<u32>, rest: u32, left: usize, out: &mut Vec<WeakComposition>) {
        if left == 1 {
            prefix.push(rest);
            out.push(WeakComposition(prefix.clone()));
            prefix.pop();
            return;
        }
        for v in (0..=rest).rev() {
            prefix.push(v);
            rec(prefix, rest - v, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(WeakComposition(Vec::new()));
        }
        return out;
    }
    rec(&mut Vec::new(), total, parts, &mut out);
    out
}
