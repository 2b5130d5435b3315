//! End-to-end acceptance checks. Each test prints one pass/fail line; run
//! with `cargo test --test acceptance -- --nocapture` to see them all.

use smoothwords_core::*;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn words(list: &[&str]) -> BTreeSet<Word> {
    list.iter().map(|s| Word::parse(s).unwrap()).collect()
}

fn chain_strings(family: &ChainFamily) -> BTreeSet<String> {
    family.chains.iter().map(|c| c.to_string()).collect()
}

fn shared_stats() -> &'static [StatsRecord] {
    static STATS: OnceLock<Vec<StatsRecord>> = OnceLock::new();
    STATS.get_or_init(|| stats_table(256).expect("stats table to 256"))
}

struct Criterion {
    id: u32,
    label: &'static str,
}

impl Criterion {
    fn new(id: u32, label: &'static str) -> Self {
        Criterion { id, label }
    }

    fn check(&self, ok: bool, detail: &str) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {:02} [{verdict}] {} — {detail}", self.id, self.label);
        assert!(ok, "criterion {:02} failed: {} ({detail})", self.id, self.label);
    }
}

#[test]
fn criterion_01_height_classes_exact() {
    let c = Criterion::new(1, "height classes 1 and 2 are exact");
    let p1: BTreeSet<Word> = height_class(1).unwrap().members.into_iter().collect();
    let p2: BTreeSet<Word> = height_class(2).unwrap().members.into_iter().collect();
    let expected2 = words(&[
        "121", "212", "11", "22", "211", "122", "112", "221", "2112", "1221", "1211", "12112",
        "2122", "21221", "1121", "21121", "2212", "12212",
    ]);
    let ok = p1 == words(&["1", "2", "12", "21"]) && p2 == expected2;
    c.check(ok, "P1 = {1,2,12,21}, |P2| = 18 member-for-member");
}

#[test]
fn criterion_02_primitives_of_two() {
    let c = Criterion::new(2, "primitive set of 2");
    let got = primitives(&Word::parse("2").unwrap()).unwrap();
    let ok = got == words(&["11", "22", "211", "112", "221", "122", "2112", "1221"]);
    c.check(ok, "8 primitives of the word 2, exact");
}

#[test]
fn criterion_03_h1_h2_exact() {
    let c = Criterion::new(3, "H1 and H2 with their first-letter splits");
    let h1 = chains_of_height(1).unwrap();
    let h2 = chains_of_height(2).unwrap();
    let (h21, h22) = split_by_first_letter(&h2);
    let ok = chain_strings(&h1) == ["1<12", "2<21"].iter().map(|s| s.to_string()).collect()
        && chain_strings(&h2)
            == [
                "121<1211<12112",
                "212<2122<21221",
                "11<112<1121",
                "22<221<2212",
                "211<2112<21121",
                "122<1221<12212",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect()
        && chain_strings(&h21)
            == ["121<1211<12112", "11<112<1121", "122<1221<12212"]
                .iter()
                .map(|s| s.to_string())
                .collect()
        && chain_strings(&h22)
            == ["212<2122<21221", "22<221<2212", "211<2112<21121"]
                .iter()
                .map(|s| s.to_string())
                .collect();
    c.check(ok, "member-for-member, including the split");
}

#[test]
fn criterion_04_counting_law_and_partition() {
    let c = Criterion::new(4, "counting law |H^k| = 2*3^(k-1) with partition checks");
    let mut ok = true;
    for k in 1..=8u32 {
        let family = chains_of_height(k).unwrap();
        ok &= family.chains.len() as u64 == chain_count_law(k);
        let report = verify_partition(k).unwrap();
        ok &= report.pass();
    }
    c.check(ok, "k = 1..8: 2, 6, 18, 54, 162, 486, 1458, 4374; all partitions verified");
}

#[test]
fn criterion_05_chain_primitive_multiplicities() {
    let c = Criterion::new(5, "chain-primitive multiplicities 2 and 4");
    let mut ok = true;
    for k in 1..=6u32 {
        let family = chains_of_height(k).unwrap();
        let mut flattened = Vec::new();
        for chain in &family.chains {
            let prims = chain_primitives(chain).unwrap();
            let expected = if chain.first_letter() == 1 { 2 } else { 4 };
            ok &= prims.len() == expected;
            flattened.extend(prims);
        }
        flattened.sort_by(|a, b| a.first().cmp(b.first()));
        ok &= flattened == chains_of_height(k + 1).unwrap().chains;
    }
    c.check(ok, "first letter 1 -> 2 chains, 2 -> 4; flattening rebuilds the next family");
}

#[test]
fn criterion_06_oracle_equivalence() {
    let c = Criterion::new(6, "gamma agrees with the exhaustive oracle");
    let mut ok = true;
    for n in 1..=18usize {
        ok &= gamma(n, Method::Extension).unwrap() == gamma(n, Method::Oracle).unwrap();
    }
    c.check(ok, "extension vs 2^n filter, n <= 18");
}

#[test]
fn criterion_07_lde_counts() {
    let c = Criterion::new(7, "left-doubly-extendable counts F(k) = 4*3^(k-1)");
    let mut ok = true;
    for k in 1..=5u32 {
        ok &= lde_count_by_height(k).unwrap() == 4 * 3u64.pow(k - 1);
    }
    c.check(ok, "k = 1..5 exact");
}

#[test]
fn criterion_08_chain_sandwich() {
    let c = Criterion::new(8, "chain sandwich around gamma(n)");
    let mut ok = true;
    for n in 1..=128usize {
        ok &= chain_bounds_check(n).unwrap().pass;
    }
    c.check(ok, "|H^(h1-1)| <= gamma(n) <= |H^(h2+1)| for n <= 128");
}

#[test]
fn criterion_09_derivative_length_sandwich() {
    let c = Criterion::new(9, "two-sided derivative length sandwich");
    let mut ok = true;
    for n in 1..=30usize {
        for w in smooth_words_of_length(n).unwrap() {
            let d = derivative(&w).unwrap();
            let low = d.len() + d.count(2);
            ok &= low <= w.len() && w.len() <= low + 2;
        }
    }
    c.check(ok, "|D|+|D|_2 <= |w| <= |D|+|D|_2+2 for all smooth words of length <= 30");
}

#[test]
fn criterion_10_dekking_envelope() {
    let c = Criterion::new(10, "Dekking envelope");
    let records: Vec<StatsRecord> = shared_stats()
        .iter()
        .filter(|r| r.n >= 2)
        .cloned()
        .collect();
    let report = dekking_envelope_check(&records);
    let lower_holds = records
        .iter()
        .all(|r| report.lower_constant * (r.n as f64).powf(2.15) <= r.gamma as f64 + 1e-9);
    let ok = report.upper_ok && report.lower_constant > 0.0 && lower_holds;
    c.check(
        ok,
        &format!(
            "gamma(n) <= n^7.2 and {:.6}*n^2.15 <= gamma(n) for 2 <= n <= 256",
            report.lower_constant
        ),
    );
}

#[test]
fn criterion_11_growth_exponent_fit() {
    let c = Criterion::new(11, "growth-exponent fit and bracket containment");
    let records = shared_stats();
    let fit = fit_growth_exponent(records, 32, 256).unwrap();
    let theta = empirical_theta(records, 32).unwrap();
    let bracket = theorem6_exponents(theta).unwrap();
    let ok = (2.2..=3.2).contains(&fit)
        && bracket.lower_exponent <= fit
        && fit <= bracket.upper_exponent;
    c.check(
        ok,
        &format!(
            "fit {fit:.5} in [2.2, 3.2] and inside [{:.5}, {:.5}] from theta = {theta:.6}",
            bracket.lower_exponent, bracket.upper_exponent
        ),
    );
}

#[test]
fn criterion_12_kolakoski() {
    let c = Criterion::new(12, "Kolakoski prefix, self-encoding and iterates");
    let mut ok = Word::parse("1221121221221121122").unwrap() == kolakoski_prefix(19);
    // self-encoding: the run lengths of the prefix spell the prefix itself
    // (last run dropped as possibly truncated)
    let prefix = kolakoski_prefix(1_000_000);
    let decomposition = runs(&prefix);
    let lengths: Vec<u8> = decomposition
        .runs
        .iter()
        .map(|&(_, len)| len as u8)
        .collect();
    let usable = lengths.len() - 1;
    ok &= lengths[..usable] == prefix.letters()[..usable];
    ok &= shallit_iterate(0).unwrap().word == Word::parse("2").unwrap();
    ok &= shallit_iterate(1).unwrap().word == Word::parse("11").unwrap();
    ok &= shallit_iterate(4).unwrap().word == Word::parse("12211").unwrap();
    for i in 2..=24u32 {
        let shorter = shallit_iterate(i).unwrap().word;
        let longer = shallit_iterate(i + 1).unwrap().word;
        ok &= shorter.is_prefix_of(&longer);
    }
    let alpha = alpha_estimate(25).unwrap();
    let in_band = (0.85..=0.90).contains(&alpha);
    let flag = if in_band { "" } else { " [FLAGGED: outside 0.85..0.90]" };
    c.check(
        ok,
        &format!("prefix/self-encoding/iterates ok; alpha_estimate(25) = {alpha:.6}{flag}"),
    );
}

#[test]
fn criterion_13_generalized_alphabet() {
    let c = Criterion::new(13, "generalized alphabet: specialization, partitions, growth");
    let base = AlphabetParams::base();
    let mut ok = true;
    // specialization on all {1,2} words of length <= 12
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..12 {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for stem in &frontier {
            for letter in [1u8, 2] {
                let mut child = stem.clone();
                child.push(letter);
                let w = Word::parse(&child.iter().map(|l| l.to_string()).collect::<String>())
                    .unwrap();
                let base_d = derivative(&w);
                let gen_d = gen_derivative(&w, &base);
                ok &= match (&base_d, &gen_d) {
                    (Ok(x), Ok(y)) => x == y,
                    (Err(_), Err(_)) => true,
                    _ => false,
                };
                if base_d.is_ok() {
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    for k in 1..=5u32 {
        ok &= gen_chains_of_height(k, &base).unwrap().chains
            == chains_of_height(k).unwrap().chains;
    }
    for n in 0..=64usize {
        ok &= gen_gamma(n, &base, Method::Extension).unwrap()
            == gamma(n, Method::Extension).unwrap();
    }
    // partition accounting for {1,3} and {2,3}: chains disjoint, members of
    // the right height, covered plus reported gap equals the class exactly
    for (a, b) in [(1u8, 3u8), (2, 3)] {
        let p = AlphabetParams::new(a, b).unwrap();
        for k in 1..=4u32 {
            let family = gen_chains_of_height(k, &p).unwrap();
            let mut covered = BTreeSet::new();
            for chain in &family.chains {
                for m in chain.members() {
                    ok &= gen_height(m, &p).unwrap() == k;
                    ok &= covered.insert(m.clone());
                }
            }
            let class = gen_height_class(k, &p).unwrap().len();
            let gap = gen_coverage_gap(k, &p).unwrap().len();
            ok &= covered.len() + gap == class;
        }
    }
    let p13 = AlphabetParams::new(1, 3).unwrap();
    let sizes: Vec<usize> = (1..=4u32)
        .map(|k| gen_chains_of_height(k, &p13).unwrap().chains.len())
        .collect();
    ok &= sizes == vec![4, 20, 100, 500];
    c.check(
        ok,
        "matches base at {1,2}; chain accounting exact for {1,3},{2,3} k <= 4; growth factor 5",
    );
}

#[test]
fn criterion_14_exponent_calculators() {
    let c = Criterion::new(14, "exponent calculators");
    let q = reference_q();
    let at_half = theorem6_exponents(0.5).unwrap();
    let mut ok = (at_half.lower_exponent - q).abs() < 1e-12
        && (at_half.upper_exponent - q).abs() < 1e-12;
    for theta in [0.1, 0.25, 0.4, 0.499162, 0.5] {
        let t6 = theorem6_exponents(theta).unwrap();
        let t5 = theorem5_exponents(&AlphabetParams::base(), theta).unwrap();
        ok &= (t6.lower_exponent - t5.lower_exponent).abs() < 1e-12
            && (t6.upper_exponent - t5.upper_exponent).abs() < 1e-12;
    }
    for b in 2..=8u8 {
        for a in 1..b {
            let p = AlphabetParams::new(a, b).unwrap();
            let (delta, theta_rev) = sing_exponents(&p).unwrap();
            if a == b - 1 {
                ok &= delta == theta_rev;
            } else {
                ok &= (delta - theta_rev).abs() > 1e-9;
            }
        }
    }
    c.check(ok, "theta = 1/2 collapse, Theorem-5 reduction, delta = theta_rev iff a = b-1");
}
