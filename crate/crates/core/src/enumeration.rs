//! Enumeration of smooth words by length: γ(n) and γ'(n), LDE/FE
//! classification, per-length height and frequency extrema, and the chain
//! sandwich bounds.
//!
//! The enumerator extends smooth words on the right, which is sound because
//! every prefix of a smooth word is smooth (validated against the exhaustive
//! 2^n filter for small n). Only words starting with 1 are materialized; the
//! complement bijection accounts for the other half.

use serde::{Deserialize, Serialize};

use crate::chain::chain_count_law;
use crate::error::{Error, Result};
use crate::primitive::ClassStore;
use crate::word::{is_smooth, smooth_height, Scratch, Word};

/// Hard ceiling for per-length enumeration (γ grows only polynomially).
pub const ENUM_CEILING: usize = 512;
/// Ceiling for the exhaustive 2^n oracle.
pub const ORACLE_CEILING: usize = 24;
/// Ceiling for materializing the full set of one length.
pub const SET_CEILING: usize = 64;

/// How to compute γ(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Breadth-first right extension of smooth words.
    Extension,
    /// Exhaustive filter over all 2^n words (small n only).
    Oracle,
}

/// Per-length summary: γ(n), γ'(n) when the next length is known, height
/// extrema and exact rational letter-frequency extrema (|w|_2 / |w|).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub n: usize,
    pub gamma: u64,
    pub gamma_prime: Option<i64>,
    pub h1: u32,
    pub h2: u32,
    /// (numerator, denominator) of the minimal |w|_2 / |w|
    pub freq_min: (u64, u64),
    /// (numerator, denominator) of the maximal |w|_2 / |w|
    pub freq_max: (u64, u64),
}

struct Entry {
    letters: Vec<u8>,
    height: u32,
    twos: u64,
}

/// One pass over lengths 1..=n_max; the workhorse behind γ, h1/h2 and the
/// frequency extrema.
pub fn stats_table(n_max: usize) -> Result<Vec<StatsRecord>> {
    if n_max == 0 {
        return Err(Error::Domain("stats table needs n_max >= 1".into()));
    }
    if n_max > ENUM_CEILING {
        return Err(Error::ResourceLimit(format!(
            "stats table ceiling is n <= {ENUM_CEILING}"
        )));
    }
    let mut scratch = Scratch::default();
    let mut frontier = vec![Entry { letters: vec![1], height: 1, twos: 0 }];
    let mut records = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        if n > 1 {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for entry in &frontier {
                for letter in [1u8, 2u8] {
                    let mut child = Vec::with_capacity(n);
                    child.extend_from_slice(&entry.letters);
                    child.push(letter);
                    if let Some(h) = smooth_height(&child, &mut scratch) {
                        next.push(Entry {
                            letters: child,
                            height: h,
                            twos: entry.twos + u64::from(letter == 2),
                        });
                    }
                }
            }
            frontier = next;
        }
        if frontier.is_empty() {
            return Err(Error::Internal(format!("frontier died at length {n}")));
        }
        let gamma = 2 * frontier.len() as u64;
        let h1 = frontier.iter().map(|e| e.height).min().unwrap();
        let h2 = frontier.iter().map(|e| e.height).max().unwrap();
        let min_twos = frontier.iter().map(|e| e.twos).min().unwrap();
        let max_twos = frontier.iter().map(|e| e.twos).max().unwrap();
        // the complement of a start-1 word has n - twos letters 2
        let freq_min_num = min_twos.min(n as u64 - max_twos);
        records.push(StatsRecord {
            n,
            gamma,
            gamma_prime: None,
            h1,
            h2,
            freq_min: (freq_min_num, n as u64),
            freq_max: (n as u64 - freq_min_num, n as u64),
        });
    }
    for i in 0..records.len() - 1 {
        records[i].gamma_prime = Some(records[i + 1].gamma as i64 - records[i].gamma as i64);
    }
    Ok(records)
}

/// All smooth words of length n, in canonical order.
pub fn smooth_words_of_length(n: usize) -> Result<Vec<Word>> {
    if n > SET_CEILING {
        return Err(Error::ResourceLimit(format!(
            "full-set materialization ceiling is n <= {SET_CEILING}"
        )));
    }
    let mut scratch = Scratch::default();
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for word in &frontier {
            for letter in [1u8, 2u8] {
                let mut child = Vec::with_capacity(word.len() + 1);
                child.extend_from_slice(word);
                child.push(letter);
                if smooth_height(&child, &mut scratch).is_some() {
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Word> = frontier.into_iter().map(Word::from_letters_unchecked).collect();
    out.sort();
    Ok(out)
}

/// γ(n): the number of smooth words of length n.
pub fn gamma(n: usize, method: Method) -> Result<u64> {
    if n == 0 {
        return Ok(1);
    }
    match method {
        Method::Extension => Ok(stats_table(n)?.last().unwrap().gamma),
        Method::Oracle => {
            if n > ORACLE_CEILING {
                return Err(Error::ResourceLimit(format!(
                    "oracle method ceiling is n <= {ORACLE_CEILING}"
                )));
            }
            let mut scratch = Scratch::default();
            let mut buf = Vec::with_capacity(n);
            let mut count = 0u64;
            for bits in 0..(1u64 << n) {
                buf.clear();
                for i in 0..n {
                    buf.push(if bits >> i & 1 == 1 { 2 } else { 1 });
                }
                if smooth_height(&buf, &mut scratch).is_some() {
                    count += 1;
                }
            }
            Ok(count)
        }
    }
}

/// γ'(n) = γ(n+1) - γ(n).
pub fn gamma_prime(n: usize) -> Result<i64> {
    Ok(gamma(n + 1, Method::Extension)? as i64 - gamma(n, Method::Extension)? as i64)
}

/// Left doubly extendable: both 1w and 2w are smooth.
pub fn is_lde(w: &Word) -> Result<bool> {
    if !is_smooth(w) {
        return Err(Error::Domain(format!("LDE is defined on smooth words; got {w}")));
    }
    Ok([1u8, 2u8].iter().all(|&l| {
        let mut letters = Vec::with_capacity(w.len() + 1);
        letters.push(l);
        letters.extend_from_slice(w.letters());
        is_smooth(&Word::from_letters_unchecked(letters))
    }))
}

/// Fully extendable: all four words αwβ are smooth.
pub fn is_fe(w: &Word) -> Result<bool> {
    if !is_smooth(w) {
        return Err(Error::Domain(format!("FE is defined on smooth words; got {w}")));
    }
    for front in [1u8, 2u8] {
        for back in [1u8, 2u8] {
            let mut letters = Vec::with_capacity(w.len() + 2);
            letters.push(front);
            letters.extend_from_slice(w.letters());
            letters.push(back);
            if !is_smooth(&Word::from_letters_unchecked(letters)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of LDE words of height k; equals 4 * 3^(k-1).
pub fn lde_count_by_height(k: u32) -> Result<u64> {
    let class = ClassStore::new().class(k)?.clone();
    let mut count = 0u64;
    for w in &class.members {
        if is_lde(w)? {
            count += 1;
        }
    }
    Ok(count)
}

/// (A(k), B(k)): minimum and maximum length of an FE word of height k.
pub fn fe_length_extrema(k: u32) -> Result<(usize, usize)> {
    if k == 0 {
        // ε is the only word of height 0, and it is FE
        return Ok((0, 0));
    }
    let class = ClassStore::new().class(k)?.clone();
    let mut lengths = Vec::new();
    for w in &class.members {
        if is_fe(w)? {
            lengths.push(w.len());
        }
    }
    match (lengths.iter().min(), lengths.iter().max()) {
        (Some(&a), Some(&b)) => Ok((a, b)),
        _ => Err(Error::EmptyClass(k)),
    }
}

/// (h1(n), h2(n)): minimal and maximal height over smooth words of length n.
pub fn height_extrema_by_length(n: usize) -> Result<(u32, u32)> {
    if n == 0 {
        return Err(Error::Domain("height extrema need n >= 1".into()));
    }
    let record = stats_table(n)?.pop().unwrap();
    Ok((record.h1, record.h2))
}

/// Exact rational extremes of |w|_2 / |w| over smooth words of length n,
/// as ((min_num, den), (max_num, den)). Complement symmetry forces
/// min + max = 1.
pub fn frequency_extrema(n: usize) -> Result<((u64, u64), (u64, u64))> {
    if n == 0 {
        return Err(Error::Domain("frequency extrema need n >= 1".into()));
    }
    let record = stats_table(n)?.pop().unwrap();
    Ok((record.freq_min, record.freq_max))
}

/// Outcome of the chain sandwich |H^(h1-1)| <= γ(n) <= |H^(h2+1)|.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainBoundsReport {
    pub n: usize,
    pub gamma: u64,
    pub h1: u32,
    pub h2: u32,
    /// |H^(h1(n)-1)|; None when h1(n) = 1 (H^0 is undefined) and the lower
    /// bound is skipped
    pub lower: Option<u64>,
    /// |H^(h2(n)+1)|
    pub upper: u64,
    pub pass: bool,
}

/// Checks the Theorem-6 chain sandwich at one length.
pub fn chain_bounds_check(n: usize) -> Result<ChainBoundsReport> {
    let record = stats_table(n)?.pop().unwrap();
    let lower = (record.h1 >= 2).then(|| chain_count_law(record.h1 - 1));
    let upper = chain_count_law(record.h2 + 1);
    let pass = lower.is_none_or(|l| l <= record.gamma) && record.gamma <= upper;
    Ok(ChainBoundsReport {
        n,
        gamma: record.gamma,
        h1: record.h1,
        h2: record.h2,
        lower,
        upper,
        pass,
    })
}
