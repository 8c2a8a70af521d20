//! Heavier cross-module checks: the factorization round trip at volume and
//! the survivor counts at the top of the supported range.

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use nichols_core::centralizer::{CentralizerPresentation, WreathFactor, WreathFactorization};
use nichols_core::classifier::{classify, ClassifyOptions, Outcome};
use nichols_core::perm::CycleType;

#[test]
fn factorize_round_trips_a_thousand_elements_per_type() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for m in 3..=10usize {
        for t in CycleType::all(m) {
            let pres = CentralizerPresentation::new(&t);
            for _ in 0..1000 {
                let mut factors = Vec::new();
                for j in t.lengths() {
                    let n = t.count(j) as usize;
                    let mut pi: Vec<usize> = (0..n).collect();
                    pi.shuffle(&mut rng);
                    let rotations: Vec<u32> =
                        (0..n).map(|_| rng.random_range(0..j as u32)).collect();
                    factors.push(WreathFactor { j, pi, rotations });
                }
                let g = WreathFactorization { factors }.reassemble(&pres);
                let f = pres.factorize(&g).expect("member of the centralizer");
                assert_eq!(f.reassemble(&pres), g, "type {t}");
            }
        }
    }
}

/// Survivor counts per pattern at the top of the range, instantiated by hand:
/// degree 11 has (1^9,2) x2 (i); (2,9), (2,3^3) x3 (ii); (1^5,2^3) x2 (iii);
/// (1^7,4) x2 (v); (1^3,4^2) x4 (vi). Degree 12 has (1^10,2) x2 (i);
/// (2,3,7), (2,5^2) x2 (ii); (1^6,2^3) x2 (iii); (1^8,4) x2 (v);
/// (1^4,4^2) x4 (vi); (2^2,4^2) is wiped out by the transversal rule.
#[test]
fn survivor_counts_at_degrees_eleven_and_twelve() {
    let opts = ClassifyOptions::default();
    for (m, expected) in [
        (11usize, [("i", 2), ("ii", 4), ("iii", 2), ("v", 2), ("vi", 4)]),
        (12, [("i", 2), ("ii", 3), ("iii", 2), ("v", 2), ("vi", 4)]),
    ] {
        let verdicts = classify(m, &opts).unwrap();
        assert!(
            verdicts.iter().all(|v| !v.outcome.is_discrepancy()),
            "discrepancy at m = {m}"
        );
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for v in &verdicts {
            if let Outcome::Survivor { theorem1_case } = &v.outcome {
                *counts.entry(theorem1_case.to_string()).or_default() += 1;
                assert!(v.irrep.q_sigma().is_minus_one());
            }
        }
        let want: BTreeMap<String, usize> = expected
            .iter()
            .map(|&(c, n)| (c.to_string(), n))
            .collect();
        assert_eq!(counts, want, "at m = {m}");
    }
    // among the degree-11 survivors sits a two-dimensional representation:
    // (2,3^3) with the [2,1]-partition on the 3-cycles
    let verdicts = classify(11, &opts).unwrap();
    assert!(verdicts.iter().any(|v| {
        v.outcome.is_survivor()
            && v.cycle_type.to_string() == "2,3^3"
            && v.irrep.degree() == 2
    }));
    // the (2^2,4^2) class at degree 12 is eliminated entirely, and its sign
    // pair falls to the transversal rule specifically
    let verdicts = classify(12, &opts).unwrap();
    for v in &verdicts {
        if v.cycle_type.to_string() == "2^2,4^2" {
            match &v.outcome {
                Outcome::Infinite { rule, .. } => {
                    if v.irrep.format() == "j=2:t=1,1;mu=eps|j=4:t=1,1;mu=sgn" {
                        assert_eq!(rule, "e''");
                    }
                }
                _ => panic!("(2^2,4^2) pair survived: {}", v.irrep),
            }
        }
    }
}

#[test]
fn witness_verified_classification_up_to_ten() {
    let opts = ClassifyOptions {
        verify_witnesses: true,
        ..Default::default()
    };
    for m in 8..=10 {
        let verdicts = classify(m, &opts).unwrap();
        assert!(verdicts.iter().all(|v| !v.outcome.is_discrepancy()));
    }
}
