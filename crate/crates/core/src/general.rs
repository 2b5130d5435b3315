//! Generalization to a two-letter alphabet {a, b} with a < b: derivative,
//! primitives, height classes, the ξ_i chains and γ_{a,b}(n).
//!
//! The derivative rule: any run longer than b is fatal; interior runs must
//! have length a or b; boundary runs of length b are kept and boundary runs
//! shorter than b are discarded. At {1, 2} this is exactly the base rule, and
//! it makes the ξ_i = α^i ≺ ... ≺ α^i ᾱ^(b-1) chains precisely the height-1
//! chains.

use std::collections::BTreeSet;

use crate::chain::{group_into_chains, Chain, ChainFamily};
use crate::error::{Error, Result};
use crate::primitive::expand_alternating;
use crate::word::Word;

/// Ceiling for generalized class/chain construction.
pub const GEN_CLASS_CEILING: u32 = 8;
/// Ceiling for generalized per-length enumeration.
pub const GEN_ENUM_CEILING: usize = 128;

/// The alphabet {a, b}, a < b, letters stored by value (single digits so
/// words serialize unambiguously).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlphabetParams {
    a: u8,
    b: u8,
}

impl AlphabetParams {
    pub fn new(a: u8, b: u8) -> Result<Self> {
        if a == 0 || a >= b || b > 9 {
            return Err(Error::Domain(format!(
                "alphabet needs 1 <= a < b <= 9, got ({a}, {b})"
            )));
        }
        Ok(AlphabetParams { a, b })
    }

    /// The base alphabet {1, 2}.
    pub fn base() -> Self {
        AlphabetParams { a: 1, b: 2 }
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn b(&self) -> u8 {
        self.b
    }

    pub fn letters(&self) -> [u8; 2] {
        [self.a, self.b]
    }

    /// Whether a + b is odd (recorded metadata; never restricts computation).
    pub fn parity_differs(&self) -> bool {
        (self.a + self.b) % 2 == 1
    }

    pub fn complement_letter(&self, l: u8) -> u8 {
        if l == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn contains(&self, l: u8) -> bool {
        l == self.a || l == self.b
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if let Some(&l) = w.letters().iter().find(|&&l| !self.contains(l)) {
            return Err(Error::Domain(format!(
                "letter {l} outside alphabet {{{}, {}}}",
                self.a, self.b
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for AlphabetParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

/// Letterwise swap a <-> b.
pub fn gen_complement(w: &Word, p: &AlphabetParams) -> Word {
    Word::from_letters_unchecked(
        w.letters().iter().map(|&l| p.complement_letter(l)).collect(),
    )
}

fn gen_derivative_into(src: &[u8], dst: &mut Vec<u8>, p: &AlphabetParams) -> bool {
    dst.clear();
    if src.is_empty() {
        return true;
    }
    let mut lens: Vec<u8> = Vec::new();
    let mut run_letter = src[0];
    let mut run_len = 1u8;
    for &l in &src[1..] {
        if l == run_letter {
            run_len += 1;
            if run_len > p.b {
                return false;
            }
        } else {
            lens.push(run_len);
            run_letter = l;
            run_len = 1;
        }
    }
    lens.push(run_len);
    let m = lens.len();
    for (i, &len) in lens.iter().enumerate() {
        let boundary = i == 0 || i == m - 1;
        if boundary {
            if len == p.b {
                dst.push(len);
            }
        } else if len == p.a || len == p.b {
            dst.push(len);
        } else {
            return false;
        }
    }
    true
}

/// Generalized run-length derivative; see the module docs for the rule.
pub fn gen_derivative(w: &Word, p: &AlphabetParams) -> Result<Word> {
    p.check_word(w)?;
    let mut out = Vec::new();
    if gen_derivative_into(w.letters(), &mut out, p) {
        Ok(Word::from_letters_unchecked(out))
    } else {
        Err(Error::NotDifferentiable)
    }
}

fn gen_smooth_height(src: &[u8], p: &AlphabetParams) -> Option<u32> {
    if src.is_empty() {
        return Some(0);
    }
    let mut cur = Vec::new();
    if !gen_derivative_into(src, &mut cur, p) {
        return None;
    }
    let mut next = Vec::new();
    let mut k = 1u32;
    while !cur.is_empty() {
        if !gen_derivative_into(&cur, &mut next, p) {
            return None;
        }
        std::mem::swap(&mut cur, &mut next);
        k += 1;
    }
    Some(k)
}

pub fn gen_is_smooth(w: &Word, p: &AlphabetParams) -> Result<bool> {
    p.check_word(w)?;
    Ok(gen_smooth_height(w.letters(), p).is_some())
}

pub fn gen_height(w: &Word, p: &AlphabetParams) -> Result<u32> {
    p.check_word(w)?;
    gen_smooth_height(w.letters(), p).ok_or(Error::NotSmooth)
}

/// Generalized anti-derivative core: runs of alternating alphabet letters,
/// the j-th run as long as the j-th letter of w.
pub fn gen_expand(w: &Word, start: u8, p: &AlphabetParams) -> Word {
    expand_alternating(w.letters(), start, p.complement_letter(start))
}

/// The generalized height-1 class: α^i ᾱ^j for α in the alphabet,
/// 1 <= i <= b-1, 0 <= j <= b-1.
fn gen_height_one(p: &AlphabetParams) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for alpha in p.letters() {
        let bar = p.complement_letter(alpha);
        for i in 1..p.b {
            for j in 0..p.b {
                let mut letters = Vec::with_capacity((i + j) as usize);
                letters.extend(std::iter::repeat_n(alpha, i as usize));
                letters.extend(std::iter::repeat_n(bar, j as usize));
                out.insert(Word::from_letters_unchecked(letters));
            }
        }
    }
    out
}

/// All nonempty v with generalized D(v) = w. Attachments are runs of the
/// complement of the adjacent core letter, of length 0..b-1.
pub fn gen_primitives(w: &Word, p: &AlphabetParams) -> Result<BTreeSet<Word>> {
    p.check_word(w)?;
    if gen_smooth_height(w.letters(), p).is_none() {
        return Err(Error::Domain(format!("primitives of non-smooth word {w}")));
    }
    if w.is_empty() {
        return Ok(gen_height_one(p));
    }
    let mut out = BTreeSet::new();
    let mut scratch = Vec::new();
    for start in p.letters() {
        let core = gen_expand(w, start, p);
        let front_letter = p.complement_letter(core.first().unwrap());
        let back_letter = p.complement_letter(core.last().unwrap());
        for x in 0..p.b {
            for y in 0..p.b {
                let mut letters =
                    Vec::with_capacity(core.len() + x as usize + y as usize);
                letters.extend(std::iter::repeat_n(front_letter, x as usize));
                letters.extend_from_slice(core.letters());
                letters.extend(std::iter::repeat_n(back_letter, y as usize));
                if gen_derivative_into(&letters, &mut scratch, p) && scratch == w.letters() {
                    out.insert(Word::from_letters_unchecked(letters));
                }
            }
        }
    }
    Ok(out)
}

/// Generalized P^k(ε), built by iterating primitive sets from the height-1
/// class.
pub fn gen_height_class(k: u32, p: &AlphabetParams) -> Result<Vec<Word>> {
    if k == 0 {
        return Err(Error::Domain("height classes start at k = 1".into()));
    }
    if k > GEN_CLASS_CEILING {
        return Err(Error::ResourceLimit(format!(
            "generalized class ceiling is k <= {GEN_CLASS_CEILING}"
        )));
    }
    let mut class = gen_height_one(p);
    for _ in 1..k {
        let mut next = BTreeSet::new();
        for w in &class {
            next.extend(gen_primitives(w, p)?);
        }
        class = next;
    }
    Ok(class.into_iter().collect())
}

/// The 2(b-1) height-1 chains ξ_i = α^i ≺ α^i ᾱ ≺ ... ≺ α^i ᾱ^(b-1) and
/// their complements, sorted by first member.
pub fn gen_h1_chains(p: &AlphabetParams) -> ChainFamily {
    let mut chains = Vec::new();
    for alpha in p.letters() {
        let bar = p.complement_letter(alpha);
        for i in 1..p.b {
            let mut members = Vec::new();
            let mut letters: Vec<u8> = std::iter::repeat_n(alpha, i as usize).collect();
            members.push(Word::from_letters_unchecked(letters.clone()));
            for _ in 1..p.b {
                letters.push(bar);
                members.push(Word::from_letters_unchecked(letters.clone()));
            }
            chains.push(Chain::new(members).expect("ξ_i is a chain by construction"));
        }
    }
    chains.sort_by(|a, b| a.first().cmp(b.first()));
    ChainFamily { k: 1, chains }
}

/// The chains begotten by one chain: for each core start letter β and each
/// left attachment x (a run of the complement of β, length 0..b-1), the
/// candidates x · expand(u_i, β) · y over the chain's members u_i form a
/// tree rooted at its shortest word; the chain through that root is the
/// spine. A chain whose words start with the letter value a begets 2(b-1)
/// spines (the x = ε groups die because the core's first run, a boundary
/// run shorter than b, is discarded), one starting with b begets 2b.
///
/// For b > 2 a group can hold words off the spine: once the boundary
/// discard band is wider than one, an extra attachment letter leaves the
/// derivative unchanged (e.g. over {1, 3} both 1113 and 11133 derive to 3).
/// Such words extend a spine word by one letter but belong to no spine.
/// Over {1, 2} every group is a single chain and the spines cover the
/// whole class.
pub fn gen_chain_primitives(chain: &Chain, p: &AlphabetParams) -> Result<Vec<Chain>> {
    let mut spines = Vec::new();
    let mut scratch = Vec::new();
    for beta in p.letters() {
        let front_letter = p.complement_letter(beta);
        for xlen in 0..p.b {
            let mut group: BTreeSet<Word> = BTreeSet::new();
            for u in chain.members() {
                let core = gen_expand(u, beta, p);
                let back_letter = p.complement_letter(core.last().unwrap());
                for ylen in 0..p.b {
                    let mut letters =
                        Vec::with_capacity(core.len() + (xlen + ylen) as usize);
                    letters.extend(std::iter::repeat_n(front_letter, xlen as usize));
                    letters.extend_from_slice(core.letters());
                    letters.extend(std::iter::repeat_n(back_letter, ylen as usize));
                    if gen_derivative_into(&letters, &mut scratch, p)
                        && scratch == u.letters()
                    {
                        group.insert(Word::from_letters_unchecked(letters));
                    }
                }
            }
            let Some(root) = group.iter().next().cloned() else {
                continue;
            };
            let paths = group_into_chains(&group, p.letters(), true)?;
            let spine = paths
                .into_iter()
                .find(|c| *c.first() == root)
                .ok_or_else(|| {
                    Error::Internal(format!("group of {root} has no chain at its root"))
                })?;
            spines.push(spine);
        }
    }
    spines.sort_by(|a, b| a.first().cmp(b.first()));
    Ok(spines)
}

/// Generalized H^k, built from the ξ_i family by iterating chain
/// primitives. Disjointness of the chains is checked here; how much of
/// P^k(ε) they cover is a separate question (see gen_coverage_gap) — full
/// coverage holds at {1, 2} but fails for b > 2.
pub fn gen_chains_of_height(k: u32, p: &AlphabetParams) -> Result<ChainFamily> {
    if k == 0 {
        return Err(Error::Domain("chain families start at k = 1".into()));
    }
    if k > GEN_CLASS_CEILING {
        return Err(Error::ResourceLimit(format!(
            "generalized chain ceiling is k <= {GEN_CLASS_CEILING}"
        )));
    }
    let mut family = gen_h1_chains(p);
    for level in 2..=k {
        let mut chains = Vec::new();
        for chain in &family.chains {
            chains.extend(gen_chain_primitives(chain, p)?);
        }
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        for chain in &chains {
            for w in chain.members() {
                if !seen.insert(w.clone()) {
                    return Err(Error::Internal(format!(
                        "word {w} appears in two chains at level {level}"
                    )));
                }
            }
        }
        chains.sort_by(|a, b| a.first().cmp(b.first()));
        family = ChainFamily { k: level, chains };
    }
    Ok(family)
}

/// Words of the generalized height-k class not covered by gen H^k. Empty
/// at {1, 2}. For b > 2 the boundary discard band is wider than one, so
/// overshoot attachments fall off the spines and the gap is nonempty; it
/// compounds with k since primitives of gap words are off-spine too.
pub fn gen_coverage_gap(k: u32, p: &AlphabetParams) -> Result<Vec<Word>> {
    let family = gen_chains_of_height(k, p)?;
    let covered: BTreeSet<&Word> = family
        .chains
        .iter()
        .flat_map(|c| c.members().iter())
        .collect();
    Ok(gen_height_class(k, p)?
        .into_iter()
        .filter(|w| !covered.contains(w))
        .collect())
}

/// γ_{a,b}(n): the number of generalized smooth words of length n.
pub fn gen_gamma(n: usize, p: &AlphabetParams, method: crate::enumeration::Method) -> Result<u64> {
    use crate::enumeration::Method;
    if n == 0 {
        return Ok(1);
    }
    match method {
        Method::Extension => {
            if n > GEN_ENUM_CEILING {
                return Err(Error::ResourceLimit(format!(
                    "generalized enumeration ceiling is n <= {GEN_ENUM_CEILING}"
                )));
            }
            let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
            for _ in 0..n {
                let mut next = Vec::with_capacity(frontier.len() * 2);
                for word in &frontier {
                    for letter in p.letters() {
                        let mut child = Vec::with_capacity(word.len() + 1);
                        child.extend_from_slice(word);
                        child.push(letter);
                        if gen_smooth_height(&child, p).is_some() {
                            next.push(child);
                        }
                    }
                }
                frontier = next;
            }
            Ok(frontier.len() as u64)
        }
        Method::Oracle => {
            if n > crate::enumeration::ORACLE_CEILING {
                return Err(Error::ResourceLimit(format!(
                    "oracle method ceiling is n <= {}",
                    crate::enumeration::ORACLE_CEILING
                )));
            }
            let [a, b] = p.letters();
            let mut count = 0u64;
            let mut buf = Vec::with_capacity(n);
            for bits in 0..(1u64 << n) {
                buf.clear();
                for i in 0..n {
                    buf.push(if bits >> i & 1 == 1 { b } else { a });
                }
                if gen_smooth_height(&buf, p).is_some() {
                    count += 1;
                }
            }
            Ok(count)
        }
    }
}
