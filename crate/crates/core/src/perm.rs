//! Exact permutation arithmetic on `S_m`.
//!
//! Points are 1-based in every printed form and 0-based internally. A
//! [`Perm`] stores the image table; composition follows function order,
//! `(p * q)(x) = p(q(x))`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image table is not a bijection on 1..={0}")]
    NotBijective(usize),
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("point {0} repeated within a cycle list")]
    RepeatedPoint(usize),
    #[error("malformed cycle type: cycle lengths weighted by multiplicity sum to {got}, expected {expected}")]
    BadCycleType { got: usize, expected: usize },
    #[error("cycle type parse error: {0}")]
    Parse(String),
    #[error("expected a single {expected}-cycle, found cycle type {found}")]
    NotASingleCycle { expected: usize, found: String },
}

/// A permutation of `{1, ..., m}`, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm {
            images: (0..m as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if (i as usize) >= m || seen[i as usize] {
                return Err(PermError::NotBijective(m));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of `S_m` from disjoint cycles given with 1-based points.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..m as u32).collect();
        let mut touched = vec![false; m];
        for cycle in cycles {
            for (idx, &p) in cycle.iter().enumerate() {
                if p == 0 || p > m {
                    return Err(PermError::PointOutOfRange(p, m));
                }
                if touched[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                touched[p - 1] = true;
                let q = cycle[(idx + 1) % cycle.len()];
                if q == 0 || q > m {
                    return Err(PermError::PointOutOfRange(q, m));
                }
                images[p - 1] = (q - 1) as u32;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// `self * other`, applying `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let m = self.degree();
        if e == 0 {
            return Perm::identity(m);
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(m);
        for _ in 0..e.unsigned_abs() {
            acc = base.compose(&acc);
        }
        acc
    }

    /// Rack operation `x ▷ y = x y x^{-1}`.
    pub fn rack_conj(&self, y: &Perm) -> Perm {
        self.compose(y).compose(&self.inverse())
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// First 1-based point where `self` and `other` fail to commute, if any.
    pub fn noncommuting_point(&self, other: &Perm) -> Option<usize> {
        (0..self.degree())
            .find(|&x| self.apply(other.apply(x)) != other.apply(self.apply(x)))
            .map(|x| x + 1)
    }

    /// Disjoint cycles with 1-based points; each cycle starts at its minimum
    /// point, cycles sorted by that minimum. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let m = self.degree();
        let mut counts = vec![0u32; m];
        let mut seen = vec![false; m];
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            counts[len - 1] += 1;
        }
        CycleType { counts }
    }

    /// Support as 0-based points.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.apply(x) != x).collect()
    }
}

impl std::ops::Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Cycle type `(1^{n_1}, 2^{n_2}, ..., m^{n_m})` of a permutation in `S_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    /// `counts[j-1]` is the number of j-cycles; the vector has length `m`.
    counts: Vec<u32>,
}

impl CycleType {
    pub fn new(m: usize, pairs: &[(usize, u32)]) -> Result<Self, PermError> {
        let mut counts = vec![0u32; m];
        for &(j, n) in pairs {
            if j == 0 || j > m {
                return Err(PermError::BadCycleType {
                    got: j,
                    expected: m,
                });
            }
            counts[j - 1] += n;
        }
        let ct = CycleType { counts };
        if ct.weight() != m {
            return Err(PermError::BadCycleType {
                got: ct.weight(),
                expected: m,
            });
        }
        Ok(ct)
    }

    pub fn m(&self) -> usize {
        self.counts.len()
    }

    fn weight(&self) -> usize {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &n)| (i + 1) * n as usize)
            .sum()
    }

    /// Number of j-cycles.
    pub fn count(&self, j: usize) -> u32 {
        if j == 0 || j > self.counts.len() {
            0
        } else {
            self.counts[j - 1]
        }
    }

    /// Cycle lengths with nonzero multiplicity, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        (1..=self.m()).filter(|&j| self.count(j) > 0).collect()
    }

    pub fn has_even_part(&self) -> bool {
        self.lengths().iter().any(|&j| j % 2 == 0)
    }

    /// True when some odd cycle of length >= 3 is present (`sigma_o != id`).
    pub fn has_odd_part(&self) -> bool {
        self.lengths().iter().any(|&j| j % 2 == 1 && j >= 3)
    }

    /// `|O_sigma| = m! / prod_j j^{n_j} n_j!`.
    pub fn class_size(&self) -> u128 {
        let m = self.m() as u128;
        let mut num: u128 = 1;
        for k in 1..=m {
            num *= k;
        }
        let mut den: u128 = 1;
        for j in 1..=self.m() {
            let n = self.count(j) as u128;
            for _ in 0..n {
                den *= j as u128;
            }
            for k in 1..=n {
                den *= k;
            }
        }
        num / den
    }

    /// All cycle types of `S_m` (partitions of m), deterministic order.
    pub fn all(m: usize) -> Vec<CycleType> {
        fn rec(remaining: usize, max: usize, acc: &mut Vec<u32>, out: &mut Vec<CycleType>) {
            if remaining == 0 {
                out.push(CycleType {
                    counts: acc.clone(),
                });
                return;
            }
            for j in (1..=max.min(remaining)).rev() {
                acc[j - 1] += 1;
                rec(remaining - j, j, acc, out);
                acc[j - 1] -= 1;
            }
        }
        let mut out = Vec::new();
        let mut acc = vec![0u32; m];
        rec(m, m, &mut acc, &mut out);
        out.sort_by_key(|t| t.to_string());
        out
    }

    /// Parses `"1^2,2^3"` style strings; exponent 1 may be omitted.
    pub fn parse(s: &str, m_hint: Option<usize>) -> Result<Self, PermError> {
        let mut pairs = Vec::new();
        for term in s.split(',') {
            let term = term.trim();
            if term.is_empty() {
                return Err(PermError::Parse(format!("empty term in '{s}'")));
            }
            let (j_str, n_str) = match term.split_once('^') {
                Some((a, b)) => (a, b),
                None => (term, "1"),
            };
            let j: usize = j_str
                .trim()
                .parse()
                .map_err(|_| PermError::Parse(format!("bad cycle length '{j_str}'")))?;
            let n: u32 = n_str
                .trim()
                .parse()
                .map_err(|_| PermError::Parse(format!("bad multiplicity '{n_str}'")))?;
            if j == 0 || n == 0 {
                return Err(PermError::Parse(format!("zero entry in term '{term}'")));
            }
            pairs.push((j, n));
        }
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(PermError::Parse(format!(
                    "cycle lengths must be strictly ascending in '{s}'"
                )));
            }
        }
        let weight: usize = pairs.iter().map(|&(j, n)| j * n as usize).sum();
        let m = m_hint.unwrap_or(weight);
        if m < weight {
            return Err(PermError::BadCycleType {
                got: weight,
                expected: m,
            });
        }
        // Missing weight is absorbed as fixed points only if 1 has no explicit term.
        let mut counts = vec![0u32; m];
        for (j, n) in pairs {
            counts[j - 1] += n;
        }
        let explicit: usize = counts
            .iter()
            .enumerate()
            .map(|(i, &n)| (i + 1) * n as usize)
            .sum();
        counts[0] += (m - explicit) as u32;
        Ok(CycleType { counts })
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for j in 1..=self.m() {
            let n = self.count(j);
            if n == 0 {
                continue;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if n == 1 {
                write!(f, "{j}")?;
            } else {
                write!(f, "{j}^{n}")?;
            }
        }
        if first {
            write!(f, "-")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for CycleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The canonical consecutive-block placement of the cycles of a permutation.
///
/// For each length `j` with `n_j > 0` the cycles `A_{1,j}, ..., A_{n_j,j}`
/// occupy consecutive points: `A_{l,j}` covers `r + (l-1)j + 1 ..= r + lj`
/// with `r = sum_{k<j} k n_k`.
#[derive(Clone, Debug)]
pub struct CanonicalLayout {
    cycle_type: CycleType,
}

impl CanonicalLayout {
    pub fn cycle_type(&self) -> &CycleType {
        &self.cycle_type
    }

    pub fn m(&self) -> usize {
        self.cycle_type.m()
    }

    /// Base offset `r` for length `j`.
    pub fn offset(&self, j: usize) -> usize {
        (1..j).map(|k| k * self.cycle_type.count(k) as usize).sum()
    }

    /// 0-based points of `A_{l,j}` (`l` is 0-based), in cycle order.
    pub fn block_points(&self, j: usize, l: usize) -> Vec<usize> {
        let r = self.offset(j);
        (0..j).map(|i| r + l * j + i).collect()
    }

    /// `A_{l,j}` as a permutation (`l` 0-based).
    pub fn a_cycle(&self, j: usize, l: usize) -> Perm {
        let pts: Vec<usize> = self.block_points(j, l).iter().map(|&p| p + 1).collect();
        Perm::from_cycles(self.m(), &[pts]).expect("canonical block is in range")
    }

    /// `B_{h,j}`, the involution swapping blocks `h` and `h+1` pointwise
    /// (`h` 0-based).
    pub fn b_swap(&self, j: usize, h: usize) -> Perm {
        let lo = self.block_points(j, h);
        let hi = self.block_points(j, h + 1);
        let cycles: Vec<Vec<usize>> = lo
            .iter()
            .zip(hi.iter())
            .map(|(&a, &b)| vec![a + 1, b + 1])
            .collect();
        Perm::from_cycles(self.m(), &cycles).expect("canonical swap is in range")
    }
}

/// The canonical representative of a conjugacy class together with its layout.
pub fn canonical_sigma(t: &CycleType) -> (Perm, CanonicalLayout) {
    let layout = CanonicalLayout {
        cycle_type: t.clone(),
    };
    let mut sigma = Perm::identity(t.m());
    for j in t.lengths() {
        for l in 0..t.count(j) as usize {
            sigma = sigma.compose(&layout.a_cycle(j, l));
        }
    }
    (sigma, layout)
}

/// The reversing involution `g_tau` of a single `j`-cycle `tau = (i_1 ... i_j)`:
/// the product of transpositions `(i_a, i_{j+2-a})` over `2 <= a <= (j+1)/2`.
/// It fixes `i_1` and conjugates `tau` to its inverse.
pub fn reversing_involution(tau: &Perm) -> Result<Perm, PermError> {
    let cycles = tau.cycles();
    if cycles.len() != 1 {
        return Err(PermError::NotASingleCycle {
            expected: 0,
            found: tau.cycle_type().to_string(),
        });
    }
    let pts = &cycles[0];
    Ok(reversing_involution_of_points(tau.degree(), pts))
}

/// Same as [`reversing_involution`] but taking the cycle as an explicit
/// 1-based point sequence `(i_1, ..., i_j)`.
pub fn reversing_involution_of_points(m: usize, pts: &[usize]) -> Perm {
    let j = pts.len();
    let mut cycles = Vec::new();
    let mut a = 2usize;
    while a < j + 2 - a {
        cycles.push(vec![pts[a - 1], pts[j + 2 - a - 1]]);
        a += 1;
    }
    Perm::from_cycles(m, &cycles).expect("transpositions stay in range")
}

/// All elements of `S_m` in lexicographic image order. Test oracle; m <= 8.
pub fn all_perms(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images: Vec<u32> = (0..m as u32).collect();
    loop {
        out.push(Perm {
            images: images.clone(),
        });
        // next_permutation
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, cycles: &[&[usize]]) -> Perm {
        let v: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(m, &v).unwrap()
    }

    #[test]
    fn cycle_type_reads_off_disjoint_cycles() {
        assert_eq!(Perm::identity(5).cycle_type().to_string(), "1^5");
        let x = p(8, &[&[1, 2], &[3, 4], &[5, 6, 7, 8]]);
        assert_eq!(x.cycle_type().to_string(), "2^2,4");
    }

    #[test]
    fn canonical_sigma_matches_layout_formulas() {
        let t = CycleType::parse("2,4", None).unwrap();
        let (sigma, layout) = canonical_sigma(&t);
        assert_eq!(sigma.to_string(), "(1 2)(3 4 5 6)");
        assert_eq!(layout.a_cycle(2, 0).to_string(), "(1 2)");
        assert_eq!(layout.a_cycle(4, 0).to_string(), "(3 4 5 6)");

        let t = CycleType::parse("1^2,2", None).unwrap();
        let (sigma, _) = canonical_sigma(&t);
        assert_eq!(sigma.to_string(), "(3 4)");

        let t = CycleType::parse("2^2,4^2", None).unwrap();
        let (sigma, layout) = canonical_sigma(&t);
        assert_eq!(sigma.cycle_type(), t);
        assert_eq!(layout.b_swap(4, 0).to_string(), "(5 9)(6 10)(7 11)(8 12)");
        assert_eq!(layout.b_swap(2, 0).to_string(), "(1 3)(2 4)");
    }

    #[test]
    fn canonical_blocks_are_disjoint_and_round_trip() {
        for m in 3..=9 {
            for t in CycleType::all(m) {
                let (sigma, layout) = canonical_sigma(&t);
                assert_eq!(sigma.cycle_type(), t, "type {t}");
                let mut covered = vec![false; m];
                for j in t.lengths() {
                    for l in 0..t.count(j) as usize {
                        for pt in layout.block_points(j, l) {
                            assert!(!covered[pt]);
                            covered[pt] = true;
                        }
                    }
                }
                assert!(covered.into_iter().all(|c| c));
            }
        }
    }

    #[test]
    fn rack_conj_examples() {
        let id = Perm::identity(3);
        let y = p(3, &[&[1, 3]]);
        assert_eq!(id.rack_conj(&y), y);
        let x = p(3, &[&[1, 2]]);
        assert_eq!(x.rack_conj(&y), p(3, &[&[2, 3]]));
    }

    #[test]
    fn reversing_involution_even_odd_branches() {
        let tau = p(4, &[&[1, 2, 3, 4]]);
        let g = reversing_involution(&tau).unwrap();
        assert_eq!(g.to_string(), "(2 4)");

        let tau = p(5, &[&[1, 2, 3, 4, 5]]);
        let g = reversing_involution(&tau).unwrap();
        assert_eq!(g.to_string(), "(2 5)(3 4)");
        assert_eq!(g.rack_conj(&tau), tau.inverse());

        let tau = p(2, &[&[1, 2]]);
        let g = reversing_involution(&tau).unwrap();
        assert!(g.is_identity());
        assert_eq!(g.rack_conj(&tau), tau.inverse());
    }

    #[test]
    fn reversing_involution_exhaustive_small_sampled_large() {
        // All j-cycles on {1..j} for j <= 8.
        for j in 2..=8usize {
            let mut rest: Vec<usize> = (2..=j).collect();
            permute_all(&mut rest, 0, &mut |tail| {
                let mut pts = vec![1usize];
                pts.extend_from_slice(tail);
                let tau = Perm::from_cycles(j, &[pts]).unwrap();
                let g = reversing_involution(&tau).unwrap();
                assert!(g.compose(&g).is_identity());
                assert_eq!(g.rack_conj(&tau), tau.inverse());
            });
        }
        // Random j-cycles inside S_12 for j = 9..12.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for j in 9..=12usize {
            for _ in 0..200 {
                let mut pool: Vec<usize> = (1..=12).collect();
                for i in (1..pool.len()).rev() {
                    let k = (next() % (i as u64 + 1)) as usize;
                    pool.swap(i, k);
                }
                let pts: Vec<usize> = pool[..j].to_vec();
                let tau = Perm::from_cycles(12, &[pts]).unwrap();
                let g = reversing_involution(&tau).unwrap();
                assert!(g.compose(&g).is_identity());
                assert_eq!(g.rack_conj(&tau), tau.inverse());
            }
        }
    }

    fn permute_all(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute_all(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(CycleType::parse("1,2", None).unwrap().class_size(), 3);
        assert_eq!(CycleType::parse("3", None).unwrap().class_size(), 2);
        // Class equation for m <= 10.
        for m in 1..=10usize {
            let total: u128 = CycleType::all(m).iter().map(|t| t.class_size()).sum();
            let fact: u128 = (1..=m as u128).product();
            assert_eq!(total, fact, "class equation fails at m = {m}");
        }
    }

    #[test]
    fn class_sizes_against_brute_force_s6() {
        let mut by_type: std::collections::HashMap<String, u128> = Default::default();
        for g in all_perms(6) {
            *by_type.entry(g.cycle_type().to_string()).or_default() += 1;
        }
        let total: u128 = by_type.values().sum();
        assert_eq!(total, 720);
        for t in CycleType::all(6) {
            assert_eq!(by_type[&t.to_string()], t.class_size(), "type {t}");
        }
    }

    #[test]
    fn cycle_type_strings_round_trip() {
        for m in 1..=10usize {
            for t in CycleType::all(m) {
                let s = t.to_string();
                let back = CycleType::parse(&s, Some(m)).unwrap();
                assert_eq!(back, t);
            }
        }
    }

    mod rack_axioms {
        use super::super::*;
        use proptest::prelude::*;

        fn arb_perm(m: usize) -> impl Strategy<Value = Perm> {
            Just(()).prop_perturb(move |_, mut rng| {
                let mut images: Vec<u32> = (0..m as u32).collect();
                for i in (1..m).rev() {
                    let j = rng.random_range(0..=i);
                    images.swap(i, j);
                }
                Perm::from_images(images).unwrap()
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]

            #[test]
            fn self_distributivity(x in arb_perm(8), y in arb_perm(8), z in arb_perm(8)) {
                // x > (y > z) = (x > y) > (x > z)
                let lhs = x.rack_conj(&y.rack_conj(&z));
                let rhs = x.rack_conj(&y).rack_conj(&x.rack_conj(&z));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn conjugation_is_a_bijection(x in arb_perm(8), y in arb_perm(8)) {
                // x > - is inverted by x^-1 > -
                let back = x.inverse().rack_conj(&x.rack_conj(&y));
                prop_assert_eq!(back, y);
            }
        }
    }

    #[test]
    fn parse_rejects_malformed_types() {
        assert!(CycleType::parse("2,2", None).is_err()); // not ascending
        assert!(CycleType::parse("0^2", None).is_err());
        assert!(CycleType::parse("", None).is_err());
        // weight exceeding the hint
        assert!(CycleType::parse("2^3", Some(4)).is_err());
    }
}
