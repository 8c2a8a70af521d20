//! The rule engine: applies each finiteness obstruction in a fixed order to
//! every pair (cycle type, centralizer irrep) of `S_m`, produces cited
//! verdicts, and matches the surviving pairs against the nine known survivor
//! patterns. A pair that survives all rules but matches no pattern is
//! reported as a discrepancy; the set is expected to be empty.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::centralizer::{CentralizerIrrep, CentralizerPresentation};
use crate::perm::CycleType;
use crate::witnesses::{self, WitnessError, WitnessReport};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("m = {0} outside supported range 3..={1}")]
    OutOfRange(usize, usize),
    #[error("unknown rule id '{0}'")]
    UnknownRule(String),
}

/// Hard cap on the degree unless overridden through `NICHOLS_MAX_M`.
pub const DEFAULT_MAX_M: usize = 12;

pub fn max_m() -> usize {
    std::env::var("NICHOLS_MAX_M")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_M)
}

/// Identifiers of the obstruction rules, in catalog order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    A,
    APrime,
    B,
    BPrime,
    C,
    D,
    E,
    EPrime,
    EPrime2,
    F,
    FPrime,
    G,
    GPrime,
    GPrime2,
    GPrime3,
}

impl RuleId {
    pub const ALL: [RuleId; 15] = [
        RuleId::A,
        RuleId::APrime,
        RuleId::B,
        RuleId::BPrime,
        RuleId::C,
        RuleId::D,
        RuleId::E,
        RuleId::EPrime,
        RuleId::EPrime2,
        RuleId::F,
        RuleId::FPrime,
        RuleId::G,
        RuleId::GPrime,
        RuleId::GPrime2,
        RuleId::GPrime3,
    ];

    pub fn parse(s: &str) -> Result<RuleId, ClassifyError> {
        let id = match s {
            "a" => RuleId::A,
            "a'" | "a2" => RuleId::APrime,
            "b" => RuleId::B,
            "b'" | "b2" => RuleId::BPrime,
            "c" => RuleId::C,
            "d" => RuleId::D,
            "e" => RuleId::E,
            "e'" | "e2" => RuleId::EPrime,
            "e''" | "e3" => RuleId::EPrime2,
            "f" => RuleId::F,
            "f'" | "f2" => RuleId::FPrime,
            "g" => RuleId::G,
            "g'" | "g2" => RuleId::GPrime,
            "g''" | "g3" => RuleId::GPrime2,
            "g'''" | "g4" => RuleId::GPrime3,
            _ => return Err(ClassifyError::UnknownRule(s.to_string())),
        };
        Ok(id)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::A => "a",
            RuleId::APrime => "a'",
            RuleId::B => "b",
            RuleId::BPrime => "b'",
            RuleId::C => "c",
            RuleId::D => "d",
            RuleId::E => "e",
            RuleId::EPrime => "e'",
            RuleId::EPrime2 => "e''",
            RuleId::F => "f",
            RuleId::FPrime => "f'",
            RuleId::G => "g",
            RuleId::GPrime => "g'",
            RuleId::GPrime2 => "g''",
            RuleId::GPrime3 => "g'''",
        };
        write!(f, "{s}")
    }
}

pub type WitnessHook = fn(&PairCtx) -> Result<WitnessReport, WitnessError>;

/// One obstruction rule: a pure predicate plus its citation and, where the
/// obstruction rests on an explicit construction, a witness hook.
pub struct Rule {
    pub id: RuleId,
    pub citation: &'static str,
    pub predicate: fn(&PairCtx) -> bool,
    pub witness: Option<WitnessHook>,
}

/// Precomputed features of one (type, irrep) pair.
pub struct PairCtx<'a> {
    pub t: &'a CycleType,
    pub rho: &'a CentralizerIrrep,
}

impl PairCtx<'_> {
    fn n(&self, j: usize) -> u32 {
        self.t.count(j)
    }

    fn q_minus_one(&self) -> bool {
        self.rho.q_sigma().is_minus_one()
    }

    fn even_order(&self) -> bool {
        self.t.has_even_part()
    }

    fn has_j_ge3(&self) -> bool {
        self.t.lengths().iter().any(|&j| j >= 3)
    }

    fn deg(&self, j: usize) -> u128 {
        self.rho.factor(j).map(|f| f.degree()).unwrap_or(1)
    }

    /// t-data of a degree-one factor: (common exponent, mu is sign).
    fn deg1(&self, j: usize) -> Option<(u32, bool)> {
        let f = self.rho.factor(j)?;
        if !f.is_degree_one() {
            return None;
        }
        let t = f.t.first().copied().unwrap_or(0);
        let sgn = f.t.len() >= 2 && f.mu == vec![vec![1; f.t.len()]];
        Some((t, sgn))
    }

    /// `rho_4` is one of the two admissible sign characters with `t_4` odd.
    fn rho4_is_sign_pair(&self) -> bool {
        matches!(self.deg1(4), Some((t, true)) if t == 1 || t == 3)
    }
}

/// The ordered rule catalog.
pub fn rule_catalog() -> Vec<Rule> {
    vec![
        Rule {
            id: RuleId::A,
            citation: "Lemma 2.1 [AZ, Lemma 2.2]: q_ss = -1 and even order",
            predicate: |c| !c.q_minus_one() || !c.even_order(),
            witness: None,
        },
        Rule {
            id: RuleId::APrime,
            citation: "Lemma 3.1: some 4 t_{l,j} != 0 mod j",
            predicate: |c| c.rho.lemma31_trigger().is_some(),
            witness: Some(|c| {
                let (j, l) = c.rho.lemma31_trigger().expect("rule fired");
                let t_val = c.rho.factor(j).expect("factor exists").t[l - 1];
                witnesses::lemma31_family(c.t, j, l, t_val)
            }),
        },
        Rule {
            id: RuleId::B,
            citation: "even j >= 6: odd divisor by [AF2, Ex. 2.10], power of two by Prop. 3.3",
            predicate: |c| {
                c.t.lengths()
                    .iter()
                    .any(|&j| j % 2 == 0 && j >= 6)
            },
            witness: Some(|c| {
                let j = c
                    .t
                    .lengths()
                    .into_iter()
                    .find(|&j| j % 2 == 0 && j >= 6 && j.is_power_of_two())
                    .ok_or_else(|| {
                        WitnessError::Unsupported(
                            "even length with an odd divisor; cited externally".into(),
                        )
                    })?;
                let k = j.trailing_zeros();
                let t_val = c
                    .rho
                    .factor(j)
                    .map(|f| f.t[0] as u64)
                    .unwrap_or(0);
                witnesses::prop33_family(k, c.t.count(j).min(2), t_val)
            }),
        },
        Rule {
            id: RuleId::BPrime,
            citation: "deg rho_1 = 1 by Props. 3.8 / 3.9",
            predicate: |c| c.deg(1) > 1 && (c.n(2) > 0 || c.n(4) > 0),
            witness: Some(|c| witnesses::prop38_39_witness(c.t, c.rho)),
        },
        Rule {
            id: RuleId::C,
            citation: "n_4 <= 2 by [AF2, Ex. 3.10]; n_2 <= 5 by [AF2, Ex. 3.13]",
            predicate: |c| c.n(4) >= 3 || c.n(2) >= 6,
            witness: None,
        },
        Rule {
            id: RuleId::D,
            citation: "deg rho_2 = deg rho_4 = 1 by Prop. 3.4 and [AZ, Prop. 2.6]",
            predicate: |c| c.deg(2) > 1 || c.deg(4) > 1,
            witness: None,
        },
        Rule {
            id: RuleId::E,
            citation: "n_2 <= 2 when some j >= 3 occurs, by [AF2, Ex. 3.12]",
            predicate: |c| c.has_j_ge3() && c.n(2) >= 3,
            witness: None,
        },
        Rule {
            id: RuleId::EPrime,
            citation: "n_1 = 0 when n_2 > 0 and some j >= 3 occurs, by [AF2, Ex. 3.9]",
            predicate: |c| c.has_j_ge3() && c.n(2) > 0 && c.n(1) > 0,
            witness: None,
        },
        Rule {
            id: RuleId::EPrime2,
            citation: "type (2^2, 4^2, sigma_o) excluded by Prop. 3.6",
            predicate: |c| c.n(2) == 2 && c.n(4) == 2,
            witness: Some(|c| {
                let (_, srho) = witnesses::strip_pair(c.t, c.rho, &[2, 4])?;
                if matches!(srho.factor(4).map(|f| (f.t.clone(), f.mu.clone())),
                            Some((t, mu)) if (t == vec![1, 1] || t == vec![3, 3]) && mu == vec![vec![1, 1]])
                {
                    witnesses::prop36_family(&srho)
                } else {
                    // the remaining characters fall to the two-4-cycle family
                    let stripped_t = CycleType::parse("2^2,4^2", None).unwrap();
                    witnesses::prop35_family(&stripped_t, &srho)
                }
            }),
        },
        Rule {
            id: RuleId::F,
            citation: "n_4 > 0 forces trivial odd part, by Prop. 3.7",
            predicate: |c| c.n(4) > 0 && c.t.has_odd_part(),
            witness: Some(|c| witnesses::prop37_family(c.t, c.rho)),
        },
        Rule {
            id: RuleId::FPrime,
            citation: "rho_4 restricted over (2^{n_2}, 4^2) by Prop. 3.5",
            predicate: |c| {
                c.n(4) == 2 && !c.t.has_odd_part() && !c.rho4_is_sign_pair()
            },
            witness: Some(|c| {
                let (st, srho) = witnesses::strip_pair(c.t, c.rho, &[2, 4])?;
                witnesses::prop35_family(&st, &srho)
            }),
        },
        Rule {
            id: RuleId::G,
            citation: "n_2 != 2 for types (1^{n_1}, 2^{n_2}), by [AZ, Th. 2.7]",
            predicate: |c| !c.has_j_ge3() && c.n(2) == 2,
            witness: None,
        },
        Rule {
            id: RuleId::GPrime,
            citation: "n_2 != 4 by [AF1, Th. 1 (B) (i)] with [AZ, Prop. 2.6]",
            predicate: |c| !c.has_j_ge3() && c.n(2) == 4,
            witness: None,
        },
        Rule {
            id: RuleId::GPrime2,
            citation: "rho_2 must be chi_{(n_2)} (x) eps or sgn, by [AF1, Th. 1 (B) (ii)]",
            predicate: |c| {
                !c.has_j_ge3()
                    && c.n(2) >= 1
                    && !matches!(c.deg1(2), Some((1, _)))
            },
            witness: None,
        },
        Rule {
            id: RuleId::GPrime3,
            citation: "characters of (1^{n_1}, 2^3) and (1^{n_1}, 2^5) cut by Prop. 3.10",
            predicate: |c| {
                if c.has_j_ge3() || c.n(1) == 0 {
                    return false;
                }
                matches!(
                    (c.n(2), c.deg1(2)),
                    (3, Some((1, false))) | (5, Some((1, _)))
                )
            },
            witness: Some(|c| witnesses::prop310_family(c.t, c.rho)),
        },
    ]
}

/// The nine survivor patterns, tagged i..ix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem1Case {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl fmt::Display for Theorem1Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Theorem1Case::I => "i",
            Theorem1Case::II => "ii",
            Theorem1Case::III => "iii",
            Theorem1Case::IV => "iv",
            Theorem1Case::V => "v",
            Theorem1Case::VI => "vi",
            Theorem1Case::VII => "vii",
            Theorem1Case::VIII => "viii",
            Theorem1Case::IX => "ix",
        };
        write!(f, "{s}")
    }
}

/// Matches a pair against the survivor patterns, with their character
/// constraints.
pub fn match_theorem1(t: &CycleType, rho: &CentralizerIrrep) -> Option<Theorem1Case> {
    let ctx = PairCtx { t, rho };
    let n1 = ctx.n(1);
    let n2 = ctx.n(2);
    let n4 = ctx.n(4);
    let lengths = t.lengths();
    let only = |allowed: &[usize]| lengths.iter().all(|j| allowed.contains(j));
    let rho1_deg1 = ctx.deg(1) == 1;
    let odd_all_zero_t = t
        .lengths()
        .iter()
        .filter(|&&j| j % 2 == 1 && j >= 3)
        .all(|&j| rho.factor(j).map(|f| f.t.iter().all(|&x| x == 0)).unwrap_or(true));

    // (i) (1^{n_1}, 2), rho_2 = sgn
    if n2 == 1 && only(&[1, 2]) && rho1_deg1 && matches!(ctx.deg1(2), Some((1, _))) {
        return Some(Theorem1Case::I);
    }
    // (ii) (2, sigma_o), sigma_o != id, rho_2 = sgn, odd exponents all zero
    if n2 == 1
        && n1 == 0
        && n4 == 0
        && t.has_odd_part()
        && lengths.iter().all(|&j| j == 2 || j % 2 == 1)
        && matches!(ctx.deg1(2), Some((1, _)))
        && odd_all_zero_t
    {
        return Some(Theorem1Case::II);
    }
    // (iii) (1^{n_1}, 2^3); with fixed points only the sign variant remains
    if n2 == 3 && only(&[1, 2]) && rho1_deg1 {
        if let Some((1, sgn)) = ctx.deg1(2) {
            if n1 == 0 || sgn {
                return Some(Theorem1Case::III);
            }
        }
    }
    // (iv) (2^5)
    if n2 == 5 && n1 == 0 && only(&[2]) && matches!(ctx.deg1(2), Some((1, _))) {
        return Some(Theorem1Case::IV);
    }
    // (v) (1^{n_1}, 4), rho_4 = chi_{(-1)}
    if n4 == 1 && only(&[1, 4]) && rho1_deg1 && matches!(ctx.deg1(4), Some((2, _))) {
        return Some(Theorem1Case::V);
    }
    // (vi) (1^{n_1}, 4^2), rho_4 in the sign pair
    if n4 == 2 && only(&[1, 4]) && rho1_deg1 && ctx.rho4_is_sign_pair() {
        return Some(Theorem1Case::VI);
    }
    // (vii) (2, 4): sgn (x) eps or eps (x) chi_{(-1)}
    if n2 == 1 && n4 == 1 && only(&[2, 4]) {
        match (ctx.deg1(2), ctx.deg1(4)) {
            (Some((1, _)), Some((0, _))) | (Some((0, _)), Some((2, _))) => {
                return Some(Theorem1Case::VII)
            }
            _ => {}
        }
    }
    // (viii) (2, 4^2): rho_2 = eps, rho_4 in the sign pair
    if n2 == 1
        && n4 == 2
        && only(&[2, 4])
        && matches!(ctx.deg1(2), Some((0, _)))
        && ctx.rho4_is_sign_pair()
    {
        return Some(Theorem1Case::VIII);
    }
    // (ix) (2^2, 4): deg rho_2 = 1, rho_4 = chi_{(-1)}
    if n2 == 2
        && n4 == 1
        && only(&[2, 4])
        && ctx.deg(2) == 1
        && matches!(ctx.deg1(4), Some((2, _)))
    {
        return Some(Theorem1Case::IX);
    }
    None
}

/// Verdict for one pair.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub m: usize,
    #[serde(rename = "type")]
    pub cycle_type: CycleType,
    pub irrep: CentralizerIrrep,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum Outcome {
    Infinite {
        rule: String,
        citation: String,
    },
    Survivor {
        theorem1_case: Theorem1Case,
    },
    Discrepancy,
}

impl Outcome {
    pub fn is_survivor(&self) -> bool {
        matches!(self, Outcome::Survivor { .. })
    }

    pub fn is_discrepancy(&self) -> bool {
        matches!(self, Outcome::Discrepancy)
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    pub disabled_rules: BTreeSet<RuleId>,
    /// Run the witness hook of every firing rule and fail loudly when a
    /// witness check fails (self-test mode).
    pub verify_witnesses: bool,
}

/// Classifies every pair of `S_m`: the first firing rule wins; survivors are
/// matched against the nine patterns.
pub fn classify(m: usize, opts: &ClassifyOptions) -> Result<Vec<Verdict>, ClassifyError> {
    let cap = max_m();
    if !(3..=cap).contains(&m) {
        return Err(ClassifyError::OutOfRange(m, cap));
    }
    let rules = rule_catalog();
    let types = CycleType::all(m);
    let mut verdicts: Vec<Verdict> = types
        .par_iter()
        .flat_map(|t| {
            let pres = CentralizerPresentation::new(t);
            let irreps = pres.enumerate_irreps();
            irreps
                .into_par_iter()
                .map(|rho| {
                    let outcome = decide(t, &rho, &rules, opts);
                    Verdict {
                        m,
                        cycle_type: t.clone(),
                        irrep: rho,
                        outcome,
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    verdicts.sort_by(|a, b| {
        (a.cycle_type.to_string(), a.irrep.format())
            .cmp(&(b.cycle_type.to_string(), b.irrep.format()))
    });
    Ok(verdicts)
}

fn decide(
    t: &CycleType,
    rho: &CentralizerIrrep,
    rules: &[Rule],
    opts: &ClassifyOptions,
) -> Outcome {
    let ctx = PairCtx { t, rho };
    for rule in rules {
        if opts.disabled_rules.contains(&rule.id) {
            continue;
        }
        if (rule.predicate)(&ctx) {
            if opts.verify_witnesses {
                if let Some(hook) = rule.witness {
                    match hook(&ctx) {
                        Ok(report) => {
                            assert!(
                                report.all_passed(),
                                "witness for rule {} failed on ({t}, {rho}): {:?}",
                                rule.id,
                                report.failed_checks()
                            );
                        }
                        Err(WitnessError::Unsupported(_)) => {
                            // externally cited subcase; nothing to certify
                        }
                        Err(e) => panic!(
                            "witness for rule {} errored on ({t}, {rho}): {e}",
                            rule.id
                        ),
                    }
                }
            }
            return Outcome::Infinite {
                rule: rule.id.to_string(),
                citation: rule.citation.to_string(),
            };
        }
    }
    match match_theorem1(t, rho) {
        Some(case) => Outcome::Survivor {
            theorem1_case: case,
        },
        None => Outcome::Discrepancy,
    }
}

/// A full evaluation trace for one pair.
#[derive(Clone, Debug, Serialize)]
pub struct Trace {
    pub m: usize,
    #[serde(rename = "type")]
    pub cycle_type: CycleType,
    pub irrep: CentralizerIrrep,
    pub q_sigma: String,
    pub rules: Vec<TraceEntry>,
    #[serde(flatten)]
    pub outcome: Outcome,
    pub witness: Option<WitnessReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub rule: String,
    pub citation: String,
    pub fired: bool,
    pub disabled: bool,
}

/// Evaluates every rule on the pair and reports which fired, the verdict,
/// and the witness report of the deciding rule when one exists.
pub fn explain(t: &CycleType, rho: &CentralizerIrrep, opts: &ClassifyOptions) -> Trace {
    let rules = rule_catalog();
    let ctx = PairCtx { t, rho };
    let mut entries = Vec::new();
    let mut decided: Option<(&Rule, bool)> = None;
    for rule in &rules {
        let disabled = opts.disabled_rules.contains(&rule.id);
        let fired = (rule.predicate)(&ctx);
        entries.push(TraceEntry {
            rule: rule.id.to_string(),
            citation: rule.citation.to_string(),
            fired,
            disabled,
        });
        if fired && !disabled && decided.is_none() {
            decided = Some((rule, true));
        }
    }
    let (outcome, witness) = match decided {
        Some((rule, _)) => {
            let witness = rule.witness.and_then(|hook| hook(&ctx).ok());
            (
                Outcome::Infinite {
                    rule: rule.id.to_string(),
                    citation: rule.citation.to_string(),
                },
                witness,
            )
        }
        None => match match_theorem1(t, rho) {
            Some(case) => (
                Outcome::Survivor {
                    theorem1_case: case,
                },
                None,
            ),
            None => (Outcome::Discrepancy, None),
        },
    };
    Trace {
        m: t.m(),
        cycle_type: t.clone(),
        irrep: rho.clone(),
        q_sigma: rho.q_sigma().to_string(),
        rules: entries,
        outcome,
        witness,
    }
}

/// Survivors of a classification run as `(type, irrep, case)` strings.
pub fn survivor_strings(verdicts: &[Verdict]) -> Vec<(String, String, String)> {
    verdicts
        .iter()
        .filter_map(|v| match &v.outcome {
            Outcome::Survivor { theorem1_case } => Some((
                v.cycle_type.to_string(),
                v.irrep.format(),
                theorem1_case.to_string(),
            )),
            _ => None,
        })
        .collect()
}
