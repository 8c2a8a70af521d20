//! Structure and representation theory of the centralizer of a permutation.
//!
//! For `sigma` of cycle type `(1^{n_1}, ..., m^{n_m})` the centralizer is the
//! direct product over `j` of wreath products `(Z/j)^{n_j} x| S_{n_j}`,
//! generated on the canonical layout by the cycles `A_{l,j}` and the block
//! swaps `B_{h,j}`. Irreducible representations are enumerated as pairs
//! (multiset of rotation exponents, tuple of partitions), with degrees by the
//! hook length formula. Degree-one representations evaluate exactly on any
//! centralizer element via the wreath factorization.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::RootOfUnity;
use crate::perm::{canonical_sigma, CanonicalLayout, CycleType, Perm};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CentralizerError {
    #[error("element does not centralize sigma: fails at point {point}")]
    NotInCentralizer { point: usize },
    #[error("representation has degree {0} > 1")]
    NotDegreeOne(u128),
    #[error("no {j}-cycles in this type")]
    NoSuchCycleLength { j: usize },
    #[error("irrep parse error: {0}")]
    Parse(String),
    #[error("t-list for j={j} has length {got}, expected n_j = {expected}")]
    BadTLength { j: usize, got: usize, expected: usize },
    #[error("t value {t} out of range 0..={max} for j={j}")]
    TOutOfRange { j: usize, t: u32, max: u32 },
    #[error("mu for j={j}: partition block sums {got:?} do not match multiplicities {expected:?}")]
    BadMu { j: usize, got: Vec<u32>, expected: Vec<u32> },
}

/// A partition written as a non-increasing sequence of positive parts.
pub type Partition = Vec<u32>;

fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, acc: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            acc.push(k);
            rec(n - k, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Degree of the irreducible `S_n`-representation indexed by a partition,
/// by the hook length formula.
pub fn hook_degree(lambda: &Partition) -> u128 {
    let n: u32 = lambda.iter().sum();
    if n == 0 {
        return 1;
    }
    let mut fact: u128 = 1;
    for k in 1..=n as u128 {
        fact *= k;
    }
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.iter().enumerate() {
        for c in 0..row {
            let arm = row - c - 1;
            let leg = lambda[i + 1..].iter().filter(|&&r| r > c).count() as u32;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    fact / hooks
}

/// The canonical generating data of the centralizer of the canonical
/// representative of a cycle type.
#[derive(Clone, Debug)]
pub struct CentralizerPresentation {
    cycle_type: CycleType,
    sigma: Perm,
    layout: CanonicalLayout,
}

impl CentralizerPresentation {
    pub fn new(t: &CycleType) -> Self {
        let (sigma, layout) = canonical_sigma(t);
        CentralizerPresentation {
            cycle_type: t.clone(),
            sigma,
            layout,
        }
    }

    pub fn cycle_type(&self) -> &CycleType {
        &self.cycle_type
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn layout(&self) -> &CanonicalLayout {
        &self.layout
    }

    pub fn m(&self) -> usize {
        self.cycle_type.m()
    }

    /// `A_{l,j}` with 1-based `l`.
    pub fn a(&self, j: usize, l: usize) -> Perm {
        self.layout.a_cycle(j, l - 1)
    }

    /// `B_{h,j}` with 1-based `h`.
    pub fn b(&self, j: usize, h: usize) -> Perm {
        self.layout.b_swap(j, h - 1)
    }

    /// The central element `A_j = A_{1,j} ... A_{n_j,j}`.
    pub fn a_full(&self, j: usize) -> Perm {
        let mut acc = Perm::identity(self.m());
        for l in 1..=self.cycle_type.count(j) as usize {
            acc = acc.compose(&self.a(j, l));
        }
        acc
    }

    /// Group order `prod_j j^{n_j} n_j!`.
    pub fn order(&self) -> u128 {
        let mut acc: u128 = 1;
        for j in self.cycle_type.lengths() {
            let n = self.cycle_type.count(j) as u128;
            for _ in 0..n {
                acc *= j as u128;
            }
            for k in 1..=n {
                acc *= k;
            }
        }
        acc
    }

    /// Splits a centralizer element into semidirect-product coordinates.
    pub fn factorize(&self, g: &Perm) -> Result<WreathFactorization, CentralizerError> {
        if let Some(point) = g.noncommuting_point(&self.sigma) {
            return Err(CentralizerError::NotInCentralizer { point });
        }
        let mut factors = Vec::new();
        let mut w_total = Perm::identity(self.m());
        for j in self.cycle_type.lengths() {
            let n = self.cycle_type.count(j) as usize;
            // Which block does each block map to?
            let mut pi = vec![usize::MAX; n];
            for l in 0..n {
                let first = self.layout.block_points(j, l)[0];
                let image = g.apply(first);
                let r = self.layout.offset(j);
                debug_assert!(image >= r && image < r + n * j);
                pi[l] = (image - r) / j;
            }
            // Order-preserving block permutation for pi.
            let mut w_images: Vec<u32> = (0..self.m() as u32).collect();
            for l in 0..n {
                let src = self.layout.block_points(j, l);
                let dst = self.layout.block_points(j, pi[l]);
                for (s, d) in src.iter().zip(dst.iter()) {
                    w_images[*s] = *d as u32;
                }
            }
            let w = Perm::from_images(w_images).expect("block permutation is bijective");
            w_total = w_total.compose(&w);
            factors.push(WreathFactor {
                j,
                pi,
                rotations: vec![0; n],
            });
        }
        // Rotation part: y = g * w^{-1} preserves each block.
        let y = g.compose(&w_total.inverse());
        for factor in &mut factors {
            let j = factor.j;
            for l in 0..factor.pi.len() {
                let pts = self.layout.block_points(j, l);
                let r = pts
                    .iter()
                    .position(|&p| p == y.apply(pts[0]))
                    .ok_or(CentralizerError::NotInCentralizer { point: pts[0] + 1 })?;
                // y must act as A_{l,j}^r on the whole block.
                for (i, &p) in pts.iter().enumerate() {
                    if y.apply(p) != pts[(i + r) % j] {
                        return Err(CentralizerError::NotInCentralizer { point: p + 1 });
                    }
                }
                factor.rotations[l] = r as u32;
            }
        }
        let f = WreathFactorization { factors };
        debug_assert_eq!(&f.reassemble(self), g);
        Ok(f)
    }

    /// All isomorphism classes of irreducible representations.
    pub fn enumerate_irreps(&self) -> Vec<CentralizerIrrep> {
        let mut per_j: Vec<Vec<IrrepFactor>> = Vec::new();
        for j in self.cycle_type.lengths() {
            let n = self.cycle_type.count(j);
            let mut options = Vec::new();
            for t in (0..j as u32).combinations_with_replacement(n as usize) {
                // partition tuple per distinct value
                let mults: Vec<u32> = t
                    .iter()
                    .dedup_with_count()
                    .map(|(c, _)| c as u32)
                    .collect();
                let choices: Vec<Vec<Partition>> =
                    mults.iter().map(|&mu| partitions_of(mu)).collect();
                for mu in choices.into_iter().multi_cartesian_product() {
                    options.push(IrrepFactor {
                        j,
                        t: t.clone(),
                        mu,
                    });
                }
            }
            per_j.push(options);
        }
        per_j
            .into_iter()
            .multi_cartesian_product()
            .map(|factors| CentralizerIrrep { factors })
            .collect()
    }
}

/// Semidirect-product coordinates of one centralizer element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathFactorization {
    pub factors: Vec<WreathFactor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathFactor {
    pub j: usize,
    /// 0-based block permutation: block `l` maps onto block `pi[l]`.
    pub pi: Vec<usize>,
    /// Rotation exponents `r_{l,j}` (mod j), 0-based by block.
    pub rotations: Vec<u32>,
}

impl WreathFactor {
    pub fn pi_sign(&self) -> i32 {
        let n = self.pi.len();
        let mut seen = vec![false; n];
        let mut sign = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.pi[x];
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

impl WreathFactorization {
    /// `(prod A_{l,j}^{r_{l,j}}) * w_pi` over all `j`.
    pub fn reassemble(&self, pres: &CentralizerPresentation) -> Perm {
        let m = pres.m();
        let mut rot = Perm::identity(m);
        let mut w = Perm::identity(m);
        for factor in &self.factors {
            for (l, &r) in factor.rotations.iter().enumerate() {
                rot = rot.compose(&pres.layout().a_cycle(factor.j, l).pow(r as i64));
            }
            let mut w_images: Vec<u32> = (0..m as u32).collect();
            for (l, &target) in factor.pi.iter().enumerate() {
                let src = pres.layout().block_points(factor.j, l);
                let dst = pres.layout().block_points(factor.j, target);
                for (s, d) in src.iter().zip(dst.iter()) {
                    w_images[*s] = *d as u32;
                }
            }
            w = w.compose(&Perm::from_images(w_images).unwrap());
        }
        rot.compose(&w)
    }
}

/// One tensor factor of a centralizer irrep: the data for the wreath product
/// at cycle length `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepFactor {
    pub j: usize,
    /// Sorted multiset of exponents `t_{l,j}` in `0..j`.
    pub t: Vec<u32>,
    /// One partition per distinct t value (ascending); `mu[i]` partitions the
    /// multiplicity of the i-th distinct value.
    pub mu: Vec<Partition>,
}

impl IrrepFactor {
    pub fn trivial(j: usize, n: u32) -> Self {
        IrrepFactor {
            j,
            t: vec![0; n as usize],
            mu: vec![vec![n]],
        }
    }

    fn multiplicities(&self) -> Vec<u32> {
        self.t
            .iter()
            .dedup_with_count()
            .map(|(c, _)| c as u32)
            .collect()
    }

    pub fn degree(&self) -> u128 {
        let n = self.t.len() as u32;
        let mut fact: u128 = 1;
        for k in 1..=n as u128 {
            fact *= k;
        }
        let mut stab_fact: u128 = 1;
        for m in self.multiplicities() {
            for k in 1..=m as u128 {
                stab_fact *= k;
            }
        }
        let index = fact / stab_fact;
        index * self.mu.iter().map(hook_degree).product::<u128>()
    }

    pub fn is_degree_one(&self) -> bool {
        self.degree() == 1
    }

    /// For a degree-one factor, the common exponent and whether mu is sign.
    fn deg1_data(&self) -> Option<(u32, bool)> {
        if !self.is_degree_one() {
            return None;
        }
        let t = self.t.first().copied().unwrap_or(0);
        let n = self.t.len() as u32;
        let is_sgn = n >= 2 && self.mu == vec![vec![1; n as usize]];
        Some((t, is_sgn))
    }

    /// Scalar of the central element `A_j`.
    pub fn central_scalar(&self) -> RootOfUnity {
        let sum: i64 = self.t.iter().map(|&t| t as i64).sum();
        RootOfUnity::new(self.j as u64, sum).unwrap()
    }
}

/// An isomorphism class of irreducible representations of the centralizer:
/// the tensor product over cycle lengths of wreath-product irreps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralizerIrrep {
    factors: Vec<IrrepFactor>,
}

impl CentralizerIrrep {
    pub fn new(factors: Vec<IrrepFactor>) -> Self {
        CentralizerIrrep { factors }
    }

    pub fn factors(&self) -> &[IrrepFactor] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> Option<&IrrepFactor> {
        self.factors.iter().find(|f| f.j == j)
    }

    pub fn degree(&self) -> u128 {
        self.factors.iter().map(|f| f.degree()).product()
    }

    pub fn is_degree_one(&self) -> bool {
        self.degree() == 1
    }

    /// The scalar by which the central element `A_j` acts.
    pub fn central_scalar(&self, j: usize) -> Result<RootOfUnity, CentralizerError> {
        self.factor(j)
            .map(|f| f.central_scalar())
            .ok_or(CentralizerError::NoSuchCycleLength { j })
    }

    /// `q_e`: product of central scalars over even cycle lengths.
    pub fn q_even(&self) -> RootOfUnity {
        self.factors
            .iter()
            .filter(|f| f.j.is_multiple_of(2))
            .fold(RootOfUnity::one(), |acc, f| acc.mul(&f.central_scalar()))
    }

    /// `q_o`: product over odd cycle lengths `> 1`.
    pub fn q_odd(&self) -> RootOfUnity {
        self.factors
            .iter()
            .filter(|f| !f.j.is_multiple_of(2) && f.j > 1)
            .fold(RootOfUnity::one(), |acc, f| acc.mul(&f.central_scalar()))
    }

    /// `q_{sigma sigma} = q_e q_o`, the scalar of `sigma` itself.
    pub fn q_sigma(&self) -> RootOfUnity {
        self.q_even().mul(&self.q_odd())
    }

    /// First `(j, l)` (1-based l) with `4 t_{l,j} != 0 mod j`, if any.
    pub fn lemma31_trigger(&self) -> Option<(usize, usize)> {
        for f in &self.factors {
            for (l, &t) in f.t.iter().enumerate() {
                if !(4 * t as usize).is_multiple_of(f.j) {
                    return Some((f.j, l + 1));
                }
            }
        }
        None
    }

    /// Evaluates a degree-one representation at a centralizer element.
    pub fn evaluate_deg1(
        &self,
        g: &Perm,
        pres: &CentralizerPresentation,
    ) -> Result<RootOfUnity, CentralizerError> {
        let deg = self.degree();
        if deg != 1 {
            return Err(CentralizerError::NotDegreeOne(deg));
        }
        let f = pres.factorize(g)?;
        let mut value = RootOfUnity::one();
        for wf in &f.factors {
            let Some(factor) = self.factor(wf.j) else {
                continue;
            };
            let (t, is_sgn) = factor.deg1_data().expect("degree checked above");
            let rot_sum: i64 = wf.rotations.iter().map(|&r| r as i64).sum();
            value = value.mul(&RootOfUnity::new(wf.j as u64, t as i64 * rot_sum).unwrap());
            if is_sgn && wf.pi_sign() < 0 {
                value = value.mul(&RootOfUnity::minus_one());
            }
        }
        Ok(value)
    }

    /// Canonical string form, e.g. `j=2:t=1,1;mu=sgn|j=4:t=2;mu=eps`.
    pub fn format(&self) -> String {
        let mut parts = Vec::new();
        for f in &self.factors {
            let mu_str = format_mu(f);
            if f.j == 1 {
                parts.push(format!("j=1:mu={mu_str}"));
            } else {
                let ts = f.t.iter().map(|t| t.to_string()).join(",");
                parts.push(format!("j={}:t={ts};mu={mu_str}", f.j));
            }
        }
        parts.join("|")
    }

    /// Parses the irrep grammar against a cycle type. Missing clauses default
    /// to the trivial factor (all-zero exponents, trivial mu).
    pub fn parse(s: &str, t: &CycleType) -> Result<Self, CentralizerError> {
        let mut factors: Vec<IrrepFactor> = t
            .lengths()
            .into_iter()
            .map(|j| IrrepFactor::trivial(j, t.count(j)))
            .collect();
        let s = s.trim();
        if !s.is_empty() {
            for clause in s.split('|') {
                let clause = clause.trim();
                let rest = clause
                    .strip_prefix("j=")
                    .ok_or_else(|| CentralizerError::Parse(format!("clause '{clause}' must start with j=")))?;
                let (j_str, body) = rest
                    .split_once(':')
                    .ok_or_else(|| CentralizerError::Parse(format!("clause '{clause}' missing ':'")))?;
                let j: usize = j_str
                    .trim()
                    .parse()
                    .map_err(|_| CentralizerError::Parse(format!("bad cycle length '{j_str}'")))?;
                let n = t.count(j);
                if n == 0 {
                    return Err(CentralizerError::Parse(format!(
                        "type {t} has no {j}-cycles"
                    )));
                }
                let mut t_vals: Option<Vec<u32>> = None;
                let mut mu_str: Option<&str> = None;
                for piece in body.split(';') {
                    let piece = piece.trim();
                    if let Some(list) = piece.strip_prefix("t=") {
                        let vals: Result<Vec<u32>, _> = list
                            .split(',')
                            .map(|x| x.trim().parse::<u32>())
                            .collect();
                        t_vals = Some(vals.map_err(|_| {
                            CentralizerError::Parse(format!("bad t-list '{list}'"))
                        })?);
                    } else if let Some(mu) = piece.strip_prefix("mu=") {
                        mu_str = Some(mu.trim());
                    } else if !piece.is_empty() {
                        return Err(CentralizerError::Parse(format!(
                            "unknown field '{piece}' in clause '{clause}'"
                        )));
                    }
                }
                let mut t_sorted = match t_vals {
                    Some(v) => v,
                    None if j == 1 => vec![0; n as usize],
                    None => {
                        return Err(CentralizerError::Parse(format!(
                            "clause for j={j} needs a t-list"
                        )))
                    }
                };
                if t_sorted.len() != n as usize {
                    return Err(CentralizerError::BadTLength {
                        j,
                        got: t_sorted.len(),
                        expected: n as usize,
                    });
                }
                for &tv in &t_sorted {
                    if tv >= j as u32 {
                        return Err(CentralizerError::TOutOfRange {
                            j,
                            t: tv,
                            max: j as u32 - 1,
                        });
                    }
                }
                t_sorted.sort_unstable();
                let mults: Vec<u32> = t_sorted
                    .iter()
                    .dedup_with_count()
                    .map(|(c, _)| c as u32)
                    .collect();
                let mu = parse_mu(j, mu_str, &mults)?;
                let factor = IrrepFactor {
                    j,
                    t: t_sorted,
                    mu,
                };
                let slot = factors
                    .iter_mut()
                    .find(|f| f.j == j)
                    .expect("j verified present");
                *slot = factor;
            }
        }
        Ok(CentralizerIrrep { factors })
    }
}

fn format_mu(f: &IrrepFactor) -> String {
    if f.mu.len() == 1 {
        let n: u32 = f.mu[0].iter().sum();
        if f.mu[0] == vec![n] && n > 0 {
            return "eps".to_string();
        }
        if f.mu[0] == vec![1; n as usize] && n > 1 {
            return "sgn".to_string();
        }
    }
    f.mu
        .iter()
        .map(|p| format!("[{}]", p.iter().map(|x| x.to_string()).join(",")))
        .join(",")
}

fn parse_mu(
    j: usize,
    mu_str: Option<&str>,
    mults: &[u32],
) -> Result<Vec<Partition>, CentralizerError> {
    let parsed: Vec<Partition> = match mu_str {
        None | Some("eps") => mults.iter().map(|&m| vec![m]).collect(),
        Some("sgn") => mults.iter().map(|&m| vec![1; m as usize]).collect(),
        Some(s) => {
            // comma-separated bracket groups: [2,1],[1]
            let mut groups = Vec::new();
            let mut rest = s;
            loop {
                let rest2 = rest.trim_start_matches(',').trim();
                if rest2.is_empty() {
                    break;
                }
                let inner_start = rest2
                    .strip_prefix('[')
                    .ok_or_else(|| CentralizerError::Parse(format!("bad mu '{s}'")))?;
                let (inner, tail) = inner_start
                    .split_once(']')
                    .ok_or_else(|| CentralizerError::Parse(format!("bad mu '{s}'")))?;
                let parts: Result<Vec<u32>, _> =
                    inner.split(',').map(|x| x.trim().parse::<u32>()).collect();
                let mut parts =
                    parts.map_err(|_| CentralizerError::Parse(format!("bad mu '{s}'")))?;
                parts.sort_unstable_by(|a, b| b.cmp(a));
                if parts.contains(&0) {
                    return Err(CentralizerError::Parse(format!("bad mu '{s}'")));
                }
                groups.push(parts);
                rest = tail;
            }
            groups
        }
    };
    let got: Vec<u32> = parsed.iter().map(|p| p.iter().sum()).collect();
    if got != mults {
        return Err(CentralizerError::BadMu {
            j,
            got,
            expected: mults.to_vec(),
        });
    }
    Ok(parsed)
}

impl fmt::Display for CentralizerIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

impl Serialize for CentralizerIrrep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.format())
    }
}
