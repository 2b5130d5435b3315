//! The Kolakoski sequence K: prefix generation, the K_i iterate recursion,
//! letter statistics, the growth-ratio estimate and prefix-window factor
//! complexity.
//!
//! K is generated with the stored-prefix two-pointer scheme: a writer emits
//! runs while a reader consumes already-emitted letters as run lengths.
//! Conjecture-adjacent numbers (α, frequency asymptotics) are reported, never
//! asserted.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::word::Word;

/// Ceiling for the iterate index; |K_i| grows like (3/2)^i.
pub const ITERATE_CEILING: u32 = 40;

/// First n letters of K (the fixed point starting with 1).
pub fn kolakoski_prefix(n: usize) -> Word {
    let mut emitted: Vec<u8> = vec![1, 2, 2];
    emitted.truncate(n);
    let mut read = 2usize;
    let mut next_letter = 1u8;
    while emitted.len() < n {
        let count = emitted[read];
        for _ in 0..count {
            if emitted.len() == n {
                break;
            }
            emitted.push(next_letter);
        }
        read += 1;
        next_letter = 3 - next_letter;
    }
    Word::from_letters_unchecked(emitted)
}

/// One step of Shallit's recursion: K_0 = 2 and K_(i+1) replicates the
/// letters of the alternating word 1212... by the letters of K_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShallitIterate {
    pub i: u32,
    pub word: Word,
}

impl ShallitIterate {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

pub fn shallit_iterate(i: u32) -> Result<ShallitIterate> {
    if i > ITERATE_CEILING {
        return Err(Error::ResourceLimit(format!(
            "iterate ceiling is i <= {ITERATE_CEILING}"
        )));
    }
    let mut word: Vec<u8> = vec![2];
    for _ in 0..i {
        let mut next = Vec::with_capacity(word.len() * 2);
        for (j, &factor) in word.iter().enumerate() {
            let letter = if j % 2 == 0 { 1u8 } else { 2u8 };
            next.extend(std::iter::repeat_n(letter, factor as usize));
        }
        word = next;
    }
    Ok(ShallitIterate { i, word: Word::from_letters_unchecked(word) })
}

/// Exact letter counts over the first n letters of K and the ratio of 1s.
pub fn prefix_letter_stats(n: usize) -> (u64, u64, f64) {
    let prefix = kolakoski_prefix(n);
    let ones = prefix.count(1) as u64;
    let twos = prefix.count(2) as u64;
    let ratio = if n == 0 { 0.0 } else { ones as f64 / n as f64 };
    (ones, twos, ratio)
}

/// |K_i| * (2/3)^i, to be read next to the conjectured limit ≈ 0.873.
pub fn alpha_estimate(i: u32) -> Result<f64> {
    let iterate = shallit_iterate(i)?;
    Ok(iterate.len() as f64 * (2f64 / 3f64).powi(i as i32))
}

/// The conjectured value (3 + sqrt 5) / 6 ≈ 0.87268.
pub fn alpha_candidate() -> f64 {
    (3.0 + 5f64.sqrt()) / 6.0
}

/// Number of distinct length-n factors of the first `window` letters of K;
/// a lower bound for the subword complexity p_K(n).
pub fn factor_complexity(n: usize, window: usize) -> Result<usize> {
    if n == 0 || window < n {
        return Err(Error::Domain(format!(
            "factor complexity needs 1 <= n <= window, got n={n}, window={window}"
        )));
    }
    let prefix = kolakoski_prefix(window);
    let letters = prefix.letters();
    let mut seen: HashSet<&[u8]> = HashSet::new();
    for i in 0..=letters.len() - n {
        seen.insert(&letters[i..i + n]);
    }
    Ok(seen.len())
}
