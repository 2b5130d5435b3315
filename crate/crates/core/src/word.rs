//! Finite words over a two-letter alphabet, run decompositions, the
//! run-length derivative, smoothness and height.
//!
//! The base alphabet is {1, 2}. A run is a maximal factor of consecutive
//! identical letters. The derivative of a word without cubes is the sequence
//! of its run lengths, discarding the first and/or the last run when that run
//! has length one. A word is smooth (C-infinity) when repeated derivation
//! reaches the empty word; the height is the number of steps needed.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite word; letters are stored as their numeric values.
///
/// Base-alphabet operations expect letters in {1, 2}; the generalized
/// operations in [`crate::general`] accept letters in {a, b} with b <= 9
/// (single-digit serialization).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// Builds a word from raw letter values. Letters must be in 1..=9.
    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        if let Some(&l) = letters.iter().find(|&&l| l == 0 || l > 9) {
            return Err(Error::Domain(format!("letter {l} outside 1..=9")));
        }
        Ok(Word { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    /// Parses a digit string like "12112". The empty string is ε.
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c.to_digit(10) {
                Some(d) if d >= 1 => letters.push(d as u8),
                _ => return Err(Error::Domain(format!("invalid letter {c:?} in word"))),
            }
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Number of occurrences of the given letter (|w|_i).
    pub fn count(&self, letter: u8) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    pub fn first(&self) -> Option<u8> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.letters.last().copied()
    }

    /// The word extended on the right by one letter (u -> uα).
    pub fn extended(&self, letter: u8) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.extend_from_slice(&self.letters);
        letters.push(letter);
        Word { letters }
    }

    /// Letterwise complement over the base alphabet (1 <-> 2).
    pub fn complement(&self) -> Word {
        complement(self)
    }

    /// The word with its last letter removed; None for ε.
    pub fn parent(&self) -> Option<Word> {
        if self.letters.is_empty() {
            None
        } else {
            Some(Word { letters: self.letters[..self.letters.len() - 1].to_vec() })
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }
}

// Canonical order: by length, then lexicographically. Keeps every listing
// deterministic and diff-friendly.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Maximal-block decomposition of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    pub runs: Vec<(u8, usize)>,
}

impl RunDecomposition {
    /// Rebuilds the word; inverse of [`runs`].
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for &(letter, len) in &self.runs {
            letters.extend(std::iter::repeat_n(letter, len));
        }
        Word { letters }
    }
}

/// Maximal-block decomposition; runs(ε) is empty.
pub fn runs(w: &Word) -> RunDecomposition {
    let mut out = Vec::new();
    for &l in w.letters() {
        match out.last_mut() {
            Some((c, n)) if *c == l => *n += 1,
            _ => out.push((l, 1usize)),
        }
    }
    RunDecomposition { runs: out }
}

/// Letterwise swap 1 <-> 2; an involution.
pub fn complement(w: &Word) -> Word {
    let letters = w
        .letters()
        .iter()
        .map(|&l| match l {
            1 => 2,
            2 => 1,
            other => other,
        })
        .collect();
    Word { letters }
}

/// Run-length derivative over {1, 2}: run lengths, with a first and/or last
/// run of length one discarded. Fails when a run exceeds length 2 (the word
/// contains 111 or 222).
pub fn derivative(w: &Word) -> Result<Word> {
    let mut out = Vec::new();
    if derivative_into(w.letters(), &mut out) {
        Ok(Word { letters: out })
    } else {
        Err(Error::NotDifferentiable)
    }
}

/// k-fold derivative; short-circuits on the first non-differentiable step.
pub fn derivative_k(w: &Word, k: u32) -> Result<Word> {
    let mut cur = w.clone();
    for _ in 0..k {
        cur = derivative(&cur)?;
    }
    Ok(cur)
}

/// True iff repeated derivation reaches ε without a forbidden run.
pub fn is_smooth(w: &Word) -> bool {
    height(w).is_ok()
}

/// Least k with D^k(w) = ε; ht(ε) = 0. Errors with `NotSmooth` when some
/// iterate is not differentiable.
pub fn height(w: &Word) -> Result<u32> {
    let mut scratch = Scratch::default();
    smooth_height(w.letters(), &mut scratch).ok_or(Error::NotSmooth)
}

/// Reusable buffers for allocation-free derivative towers.
#[derive(Default)]
pub(crate) struct Scratch {
    a: Vec<u8>,
    b: Vec<u8>,
}

/// Writes D(src) into `dst`; returns false when a run exceeds length 2.
/// `dst` is cleared first.
pub(crate) fn derivative_into(src: &[u8], dst: &mut Vec<u8>) -> bool {
    dst.clear();
    if src.is_empty() {
        return true;
    }
    let mut run_letter = src[0];
    let mut run_len = 1u8;
    let mut first = true;
    for &l in &src[1..] {
        if l == run_letter {
            run_len += 1;
            if run_len > 2 {
                return false;
            }
        } else {
            // close the current run; a first run of length one is discarded
            if !(first && run_len == 1) {
                dst.push(run_len);
            }
            first = false;
            run_letter = l;
            run_len = 1;
        }
    }
    // final run: discarded when it has length one (it is the last run; when
    // the word is a single run it is first and last at once)
    if run_len != 1 {
        dst.push(run_len);
    }
    true
}

/// Height of a base-alphabet word, or None when not smooth.
pub(crate) fn smooth_height(w: &[u8], scratch: &mut Scratch) -> Option<u32> {
    if w.is_empty() {
        return Some(0);
    }
    if !derivative_into(w, &mut scratch.a) {
        return None;
    }
    let mut k = 1u32;
    while !scratch.a.is_empty() {
        if !derivative_into(&scratch.a, &mut scratch.b) {
            return None;
        }
        std::mem::swap(&mut scratch.a, &mut scratch.b);
        k += 1;
    }
    Some(k)
}
