//! A quick self-test battery: every structural invariant and every pinned
//! matrix reproduction, sized to run in a few seconds. The CLI exposes it as
//! `nichols selftest`; the acceptance suite runs the same checks at larger
//! sizes.

use crate::braiding::{check_negative, is_finite_type, Deg1Eval};
use crate::braiding::cartan_tables;
use crate::centralizer::CentralizerPresentation;
use crate::classifier::{classify, ClassifyOptions};
use crate::cyclotomic::{Cyclotomic, RootOfUnity};
use crate::perm::{reversing_involution, CycleType, Perm};
use crate::witnesses;

pub struct SelfTestResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn run(name: &'static str, f: impl FnOnce() -> Result<(), String>) -> SelfTestResult {
    match f() {
        Ok(()) => SelfTestResult {
            name,
            pass: true,
            detail: String::new(),
        },
        Err(detail) => SelfTestResult {
            name,
            pass: false,
            detail,
        },
    }
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// Runs the whole battery; returns one result per suite.
pub fn run_all() -> Vec<SelfTestResult> {
    vec![
        run("class equation m <= 8", || {
            for m in 1..=8usize {
                let total: u128 = CycleType::all(m).iter().map(|t| t.class_size()).sum();
                let fact: u128 = (1..=m as u128).product();
                ensure(total == fact, &format!("fails at m = {m}"))?;
            }
            Ok(())
        }),
        run("Burnside sums m <= 8", || {
            for m in 3..=8usize {
                for t in CycleType::all(m) {
                    let pres = CentralizerPresentation::new(&t);
                    let total: u128 =
                        pres.enumerate_irreps().iter().map(|r| r.degree().pow(2)).sum();
                    ensure(total == pres.order(), &format!("type {t}"))?;
                }
            }
            Ok(())
        }),
        run("cycle reversals j <= 10", || {
            for j in 2..=10usize {
                let pts: Vec<usize> = (1..=j).collect();
                let tau = Perm::from_cycles(j, &[pts]).unwrap();
                let g = reversing_involution(&tau).map_err(|e| e.to_string())?;
                ensure(
                    g.compose(&g).is_identity() && g.rack_conj(&tau) == tau.inverse(),
                    &format!("j = {j}"),
                )?;
            }
            Ok(())
        }),
        run("cyclotomic identities N <= 24", || {
            for n in 1..=24u64 {
                ensure(
                    Cyclotomic::zeta_pow(n, n as i64).is_one(),
                    &format!("zeta_{n}^{n} != 1"),
                )?;
                let z = Cyclotomic::zeta_pow(n, 1);
                let r = RootOfUnity::new(n, 1).unwrap();
                ensure(
                    Cyclotomic::from_root(n, &r).map_err(|e| e.to_string())? == z,
                    &format!("embedding at N = {n}"),
                )?;
            }
            Ok(())
        }),
        run("abelian four-element family", || {
            let t = CycleType::parse("2,3^2", None).unwrap();
            let report = witnesses::lemma31_family(&t, 3, 1, 1).map_err(|e| e.to_string())?;
            ensure(
                report.all_passed() && report.long_cycle.is_some(),
                &format!("{:?}", report.failed_checks()),
            )
        }),
        run("power-of-two family k = 3", || {
            for t_val in [0u64, 2, 4, 6] {
                let report =
                    witnesses::prop33_family(3, 1, t_val).map_err(|e| e.to_string())?;
                ensure(
                    report.all_passed() && report.finite_type == Some(false),
                    &format!("t = {t_val}: {:?}", report.failed_checks()),
                )?;
            }
            Ok(())
        }),
        run("two-4-cycle families", || {
            let t = CycleType::parse("2,4^2", None).unwrap();
            let rho = crate::CentralizerIrrep::parse(
                "j=2:t=1;mu=eps|j=4:t=0,0;mu=eps",
                &t,
            )
            .unwrap();
            let report = witnesses::prop35_family(&t, &rho).map_err(|e| e.to_string())?;
            ensure(report.all_passed(), &format!("{:?}", report.failed_checks()))
        }),
        run("doubled transversal family on (2^2, 4^2)", || {
            let t = CycleType::parse("2^2,4^2", None).unwrap();
            let rho = crate::CentralizerIrrep::parse(
                "j=2:t=1,1;mu=eps|j=4:t=1,1;mu=sgn",
                &t,
            )
            .unwrap();
            let report = witnesses::prop36_family(&rho).map_err(|e| e.to_string())?;
            ensure(
                report.all_passed()
                    && report.matrix.as_ref() == Some(&witnesses::expected_prop36_matrix()),
                &format!("{:?}", report.failed_checks()),
            )
        }),
        run("octahedral family with odd part", || {
            let t = CycleType::parse("2,3,4", None).unwrap();
            let rho = crate::CentralizerIrrep::parse(
                "j=2:t=1;mu=eps|j=3:t=0;mu=eps|j=4:t=0;mu=eps",
                &t,
            )
            .unwrap();
            let report = witnesses::prop37_family(&t, &rho).map_err(|e| e.to_string())?;
            ensure(report.all_passed(), &format!("{:?}", report.failed_checks()))
        }),
        run("dihedral triples", || {
            let t = CycleType::parse("1,2^3", None).unwrap();
            let rho = crate::CentralizerIrrep::parse("j=2:t=1,1,1;mu=eps", &t).unwrap();
            let report = witnesses::prop310_family(&t, &rho).map_err(|e| e.to_string())?;
            ensure(report.all_passed(), &format!("{:?}", report.failed_checks()))?;
            // excluded character flips the evaluation to +1
            let rho = crate::CentralizerIrrep::parse("j=2:t=1,1,1;mu=sgn", &t).unwrap();
            let report = witnesses::prop310_family(&t, &rho).map_err(|e| e.to_string())?;
            ensure(!report.all_passed(), "sign character must escape")
        }),
        run("finite-type recognizer", || {
            for (name, c) in cartan_tables::all_finite(8) {
                ensure(
                    is_finite_type(&c).map_err(|e| e.to_string())?,
                    &format!("{name} must be finite"),
                )?;
            }
            for (name, c) in cartan_tables::all_affine(8) {
                ensure(
                    !is_finite_type(&c).map_err(|e| e.to_string())?,
                    &format!("{name} must be rejected"),
                )?;
            }
            Ok(())
        }),
        run("probe counterexample", || {
            let (fam, t, rho) = witnesses::probe_counterexample().map_err(|e| e.to_string())?;
            let pres = CentralizerPresentation::new(&t);
            let violation = check_negative(&fam, &Deg1Eval { rho: &rho, pres: &pres })
                .map_err(|e| e.to_string())?;
            ensure(violation.is_some(), "detector must fire")
        }),
        run("classification m <= 6 with witness verification", || {
            let opts = ClassifyOptions {
                verify_witnesses: true,
                ..Default::default()
            };
            for m in 3..=6 {
                let verdicts = classify(m, &opts).map_err(|e| e.to_string())?;
                ensure(
                    verdicts.iter().all(|v| !v.outcome.is_discrepancy()),
                    &format!("discrepancy at m = {m}"),
                )?;
            }
            Ok(())
        }),
    ]
}
