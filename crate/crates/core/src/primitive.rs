//! Anti-derivative construction and primitive sets, plus the height classes
//! P^k(ε).
//!
//! A primitive of w is any word v with D(v) = w. Candidates are built from
//! the two alternating-run cores (one per start letter) with optional
//! single-letter attachments on either side, then filtered by an exact
//! derivative check. At most 8 survive and their lengths span at most 2.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{derivative, Word};

/// Default ceiling for memoized height classes.
pub const DEFAULT_CLASS_CEILING: u32 = 12;

/// Members of a height class P^k(ε), in canonical (length, lex) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightClass {
    pub k: u32,
    pub members: Vec<Word>,
}

pub(crate) fn expand_alternating(lengths: &[u8], first: u8, second: u8) -> Word {
    let mut letters = Vec::with_capacity(lengths.iter().map(|&l| l as usize).sum());
    let mut cur = first;
    for &len in lengths {
        letters.extend(std::iter::repeat_n(cur, len as usize));
        cur = if cur == first { second } else { first };
    }
    Word::from_letters_unchecked(letters)
}

/// The anti-derivative core: the word whose j-th run has length equal to the
/// j-th letter of `w`, run letters alternating from `start`. expand(ε, β) = ε.
pub fn expand(w: &Word, start: u8) -> Word {
    let other = if start == 1 { 2 } else { 1 };
    expand_alternating(w.letters(), start, other)
}

/// All nonempty words v with D(v) = w, for smooth w. primitives(ε) is the
/// height-1 class {1, 2, 12, 21}; ε itself is excluded by decision.
pub fn primitives(w: &Word) -> Result<BTreeSet<Word>> {
    if !crate::word::is_smooth(w) {
        return Err(Error::Domain(format!("primitives of non-smooth word {w}")));
    }
    if w.is_empty() {
        return Ok(["1", "2", "12", "21"]
            .iter()
            .map(|s| Word::parse(s).unwrap())
            .collect());
    }
    let mut out = BTreeSet::new();
    for start in [1u8, 2u8] {
        let core = expand(w, start);
        let front = [None, core.first().map(|l| if l == 1 { 2 } else { 1 })];
        let back = [None, core.last().map(|l| if l == 1 { 2 } else { 1 })];
        for x in front {
            for y in back {
                let mut letters = Vec::with_capacity(core.len() + 2);
                if let Some(l) = x {
                    letters.push(l);
                }
                letters.extend_from_slice(core.letters());
                if let Some(l) = y {
                    letters.push(l);
                }
                let cand = Word::from_letters_unchecked(letters);
                if derivative(&cand).as_ref() == Ok(w) {
                    out.insert(cand);
                }
            }
        }
    }
    Ok(out)
}

/// P^k(ε): all smooth words of height exactly k, built by iterating
/// primitive sets from P^1(ε) = {1, 2, 12, 21}.
pub fn height_class(k: u32) -> Result<HeightClass> {
    ClassStore::new().class(k).cloned()
}

/// Memoized tower of height classes with a configurable ceiling.
pub struct ClassStore {
    ceiling: u32,
    classes: Vec<HeightClass>,
}

impl Default for ClassStore {
    fn default() -> Self {
        Self::new()
    }
}

impl ClassStore {
    pub fn new() -> Self {
        Self::with_ceiling(DEFAULT_CLASS_CEILING)
    }

    pub fn with_ceiling(ceiling: u32) -> Self {
        ClassStore { ceiling, classes: Vec::new() }
    }

    pub fn class(&mut self, k: u32) -> Result<&HeightClass> {
        if k == 0 {
            return Err(Error::Domain("height classes start at k = 1".into()));
        }
        if k > self.ceiling {
            return Err(Error::ResourceLimit(format!(
                "height class k = {k} above ceiling {}",
                self.ceiling
            )));
        }
        while self.classes.len() < k as usize {
            let next = match self.classes.last() {
                None => ["1", "2", "12", "21"]
                    .iter()
                    .map(|s| Word::parse(s).unwrap())
                    .collect::<BTreeSet<_>>(),
                Some(prev) => {
                    let mut set = BTreeSet::new();
                    for w in &prev.members {
                        set.extend(primitives(w)?);
                    }
                    set
                }
            };
            self.classes.push(HeightClass {
                k: self.classes.len() as u32 + 1,
                members: next.into_iter().collect(),
            });
        }
        Ok(&self.classes[k as usize - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{complement, height, is_smooth, Scratch};

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(&w("2"), 1), w("11"));
        assert_eq!(expand(&w("2"), 2), w("22"));
        assert_eq!(expand(&w("11"), 1), w("12"));
        assert_eq!(expand(&Word::empty(), 1), Word::empty());
        assert_eq!(expand(&w("212"), 2), w("22122"));
    }

    #[test]
    fn primitives_of_two() {
        assert_eq!(
            primitives(&w("2")).unwrap(),
            set(&["11", "22", "211", "112", "221", "122", "2112", "1221"])
        );
    }

    #[test]
    fn primitives_of_empty() {
        assert_eq!(primitives(&Word::empty()).unwrap(), set(&["1", "2", "12", "21"]));
    }

    #[test]
    fn primitives_of_one_match_brute_force() {
        // independent oracle: scan every word of length <= 5 for D(v) = 1
        let mut expected = BTreeSet::new();
        for len in 1..=5usize {
            for bits in 0..(1u32 << len) {
                let letters: Vec<u8> =
                    (0..len).map(|i| if bits >> i & 1 == 1 { 2 } else { 1 }).collect();
                let cand = Word::from_letters_unchecked(letters);
                if derivative(&cand) == Ok(w("1")) {
                    expected.insert(cand);
                }
            }
        }
        assert_eq!(expected, set(&["121", "212"]));
        assert_eq!(primitives(&w("1")).unwrap(), expected);
    }

    #[test]
    fn primitives_reject_non_smooth() {
        assert!(primitives(&w("111")).is_err());
    }

    #[test]
    fn height_class_one_and_two() {
        assert_eq!(
            height_class(1).unwrap().members,
            set(&["1", "2", "12", "21"]).into_iter().collect::<Vec<_>>()
        );
        let p2 = height_class(2).unwrap();
        let expected = set(&[
            "121", "212", "11", "22", "211", "122", "112", "221", "2112", "1221", "1211",
            "12112", "2122", "21221", "1121", "21121", "2212", "12212",
        ]);
        assert_eq!(p2.members.len(), 18);
        assert_eq!(p2.members.iter().cloned().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn class_store_ceiling() {
        let mut store = ClassStore::with_ceiling(3);
        assert!(store.class(3).is_ok());
        assert!(matches!(store.class(4), Err(Error::ResourceLimit(_))));
        assert!(store.class(0).is_err());
    }

    #[test]
    fn primitive_contract_holds_on_low_classes() {
        let mut store = ClassStore::new();
        for k in 1..=4 {
            for word in store.class(k).unwrap().members.clone() {
                let prims = primitives(&word).unwrap();
                assert!(!prims.is_empty());
                assert!(prims.len() <= 8, "more than 8 primitives for {word}");
                let lens: Vec<usize> = prims.iter().map(|p| p.len()).collect();
                let span = lens.iter().max().unwrap() - lens.iter().min().unwrap();
                assert!(span <= 2, "length span {span} for {word}");
                for p in &prims {
                    assert_eq!(derivative(p).unwrap(), word);
                    assert_eq!(height(p).unwrap(), k + 1);
                }
                // primitive sets are complement-closed (D is complement-invariant)
                let comp_image: BTreeSet<Word> = prims.iter().map(complement).collect();
                assert_eq!(comp_image, prims);
            }
        }
    }

    #[test]
    fn class_members_have_exact_height() {
        let mut store = ClassStore::new();
        for k in 1..=5 {
            for word in &store.class(k).unwrap().members {
                assert_eq!(height(word).unwrap(), k);
            }
        }
    }

    /// Completeness oracle: P^k(ε) equals the brute-force scan of all words
    /// up to the class's maximum member length.
    #[test]
    fn height_class_completeness_oracle() {
        let mut store = ClassStore::new();
        for k in 1..=4u32 {
            let class = store.class(k).unwrap().clone();
            let max_len = class.members.iter().map(|m| m.len()).max().unwrap();
            let mut expected = BTreeSet::new();
            let mut scratch = Scratch::default();
            let mut buf = Vec::with_capacity(max_len);
            for len in 1..=max_len {
                for bits in 0..(1u64 << len) {
                    buf.clear();
                    for i in 0..len {
                        buf.push(if bits >> i & 1 == 1 { 2 } else { 1 });
                    }
                    if crate::word::smooth_height(&buf, &mut scratch) == Some(k) {
                        expected.insert(Word::from_letters_unchecked(buf.clone()));
                    }
                }
            }
            assert_eq!(
                class.members.iter().cloned().collect::<BTreeSet<_>>(),
                expected,
                "height class {k} differs from brute force"
            );
        }
    }

    /// Every factor of a smooth word is smooth (checked on P^k, k <= 6).
    #[test]
    fn factor_closure() {
        let mut store = ClassStore::new();
        let mut seen = std::collections::HashSet::new();
        for k in 1..=6 {
            for word in &store.class(k).unwrap().members {
                let letters = word.letters();
                for i in 0..letters.len() {
                    for j in i + 1..=letters.len() {
                        if seen.insert(letters[i..j].to_vec()) {
                            let f = Word::from_letters_unchecked(letters[i..j].to_vec());
                            assert!(is_smooth(&f), "factor {f} of {word} not smooth");
                        }
                    }
                }
            }
        }
    }
}
