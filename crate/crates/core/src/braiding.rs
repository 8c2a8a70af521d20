//! Braided vector spaces attached to subrack families: braiding matrices,
//! generalized Dynkin diagrams, the long-cycle obstruction, Cartan-type
//! recognition with an exact finite-type test, and the transversal
//! diagonalization used for the power-of-two eliminations.
//!
//! Conventions: a family member is a pair `(sigma_l, g_l)` with
//! `sigma_l = g_l sigma g_l^{-1}`; the basis vector `x_l = g_l v` has group
//! degree `sigma_l` and the braiding is `c(x (x) y) = deg(x).y (x) x`. The
//! scalar attached to `(l, k)` is the character value of
//! `g_{k'}^{-1} sigma_l g_k` where `sigma_{k'} = sigma_l > sigma_k`.

use std::collections::BTreeSet;

use num::{BigRational, One};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::centralizer::{CentralizerIrrep, CentralizerPresentation};
use crate::cyclotomic::{
    change_of_basis, is_positive_definite, CycMatrix, Cyclotomic, RootOfUnity,
};
use crate::perm::Perm;

#[derive(Debug, Error)]
pub enum BraidingError {
    #[error("family member {0}: g does not conjugate sigma to the stated element")]
    BadConjugator(usize),
    #[error("family is not abelian: members {0} and {1} do not commute")]
    NotAbelian(usize, usize),
    #[error("family is not closed: member {0} conjugates member {1} outside the family")]
    NotClosed(usize, usize),
    #[error("scalar evaluation failed on {element}: {reason}")]
    Scalar { element: String, reason: String },
    #[error("degree of rho is {0}, need 1")]
    NotDegreeOne(u128),
    #[error("operator for member {index} is not diagonal in the transversal basis: entry ({row}, {col}) = {value}")]
    NotDiagonal {
        index: usize,
        row: usize,
        col: usize,
        value: String,
    },
    #[error("members {0} and {1} span one transversal vector but act with different scalars at column {2}")]
    InconsistentPair(usize, usize, usize),
    #[error("entry ({0}, {1}) is not a root of unity")]
    NotARoot(usize, usize),
    #[error("diagonal entry {0} equals 1; Cartan data needs q_ll != 1")]
    CartanDiagonalOne(usize),
    #[error("matrix is not a generalized Cartan matrix")]
    NotCartan,
    #[error(transparent)]
    Cyclotomic(#[from] crate::cyclotomic::CycloError),
}

/// A family `(sigma_l, g_l)` of conjugates of a base element, each with a
/// designated conjugator.
#[derive(Clone, Debug, Serialize)]
pub struct SubrackFamily {
    pub base: Perm,
    pub members: Vec<(Perm, Perm)>,
    pub kind: FamilyKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Abelian,
    D3,
    D4Sq,
    DSq,
    Transversal,
}

impl SubrackFamily {
    pub fn new(
        base: Perm,
        members: Vec<(Perm, Perm)>,
        kind: FamilyKind,
    ) -> Result<Self, BraidingError> {
        let fam = SubrackFamily { base, members, kind };
        fam.check_conjugators()?;
        Ok(fam)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn check_conjugators(&self) -> Result<(), BraidingError> {
        for (i, (s, g)) in self.members.iter().enumerate() {
            if &g.rack_conj(&self.base) != s {
                return Err(BraidingError::BadConjugator(i));
            }
        }
        Ok(())
    }

    pub fn is_distinct(&self) -> bool {
        let set: BTreeSet<&Perm> = self.members.iter().map(|(s, _)| s).collect();
        set.len() == self.members.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.members.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.members[i].0.commutes_with(&self.members[j].0)))
    }

    /// Index of the member whose element equals `p`.
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.members.iter().position(|(s, _)| s == p)
    }
}

/// How a character evaluates the centralizer element produced by one
/// braiding resolution. Real degree-one representations evaluate honestly;
/// witnesses substitute the partial character a proof fixes.
pub trait ScalarEval {
    fn eval(&self, gamma: &Perm) -> Result<RootOfUnity, String>;
}

/// Evaluation through an actual degree-one irrep of the canonical centralizer.
pub struct Deg1Eval<'a> {
    pub rho: &'a CentralizerIrrep,
    pub pres: &'a CentralizerPresentation,
}

impl ScalarEval for Deg1Eval<'_> {
    fn eval(&self, gamma: &Perm) -> Result<RootOfUnity, String> {
        self.rho
            .evaluate_deg1(gamma, self.pres)
            .map_err(|e| e.to_string())
    }
}

/// The braiding matrix of an abelian family under a diagonal character:
/// `q_{lk} = rho(g_k^{-1} sigma_l g_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidingMatrix {
    pub entries: Vec<Vec<RootOfUnity>>,
}

impl BraidingMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn at(&self, l: usize, k: usize) -> RootOfUnity {
        self.entries[l][k]
    }

    pub fn constant_diagonal(&self) -> Option<RootOfUnity> {
        let d = self.entries.first()?[0];
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row[i] == d)
            .then_some(d)
    }
}

/// Computes the braiding matrix of an abelian family.
pub fn braiding_matrix(
    fam: &SubrackFamily,
    eval: &dyn ScalarEval,
) -> Result<BraidingMatrix, BraidingError> {
    let n = fam.len();
    for i in 0..n {
        for j in i + 1..n {
            if !fam.members[i].0.commutes_with(&fam.members[j].0) {
                return Err(BraidingError::NotAbelian(i, j));
            }
        }
    }
    let mut entries = vec![vec![RootOfUnity::one(); n]; n];
    for l in 0..n {
        for k in 0..n {
            let g_k = &fam.members[k].1;
            let gamma = g_k.inverse().compose(&fam.members[l].0).compose(g_k);
            entries[l][k] = eval.eval(&gamma).map_err(|reason| BraidingError::Scalar {
                element: gamma.to_string(),
                reason,
            })?;
        }
    }
    Ok(BraidingMatrix { entries })
}

/// The monomial data of the braiding on the span of a (possibly non-abelian)
/// family: member `l` acting on basis vector `k` sends it to
/// `scalar * x_{target}`.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialAction {
    pub dim: usize,
    /// `ops[l][k] = (target, scalar)` for `deg(x_l)` acting on `x_k`.
    pub ops: Vec<Vec<(usize, RootOfUnity)>>,
}

/// Resolves `sigma_l g_k = g_{k'} gamma` for every pair and evaluates the
/// scalars. The family must be closed under conjugation.
pub fn span_braiding(
    fam: &SubrackFamily,
    eval: &dyn ScalarEval,
) -> Result<MonomialAction, BraidingError> {
    let n = fam.len();
    let mut ops = vec![vec![(0usize, RootOfUnity::one()); n]; n];
    for l in 0..n {
        for k in 0..n {
            let conj = fam.members[l].0.rack_conj(&fam.members[k].0);
            let target = fam.index_of(&conj).ok_or(BraidingError::NotClosed(l, k))?;
            let g_target = &fam.members[target].1;
            let gamma = g_target
                .inverse()
                .compose(&fam.members[l].0)
                .compose(&fam.members[k].1);
            let scalar = eval.eval(&gamma).map_err(|reason| BraidingError::Scalar {
                element: gamma.to_string(),
                reason,
            })?;
            ops[l][k] = (target, scalar);
        }
    }
    Ok(MonomialAction { dim: n, ops })
}

impl MonomialAction {
    /// Abelian consistency: every operator fixes every basis line.
    pub fn is_diagonal(&self) -> bool {
        self.ops
            .iter()
            .all(|row| row.iter().enumerate().all(|(k, &(t, _))| t == k))
    }

    pub fn to_braiding_matrix(&self) -> Option<BraidingMatrix> {
        if !self.is_diagonal() {
            return None;
        }
        Some(BraidingMatrix {
            entries: self
                .ops
                .iter()
                .map(|row| row.iter().map(|&(_, s)| s).collect())
                .collect(),
        })
    }

    /// Operator of member `l` as a matrix over `Q(zeta_cond)`.
    pub fn operator_matrix(&self, l: usize, conductor: u64) -> CycMatrix {
        let mut m = CycMatrix::zero(self.dim, conductor);
        for (k, &(target, scalar)) in self.ops[l].iter().enumerate() {
            *m.at_mut(target, k) = Cyclotomic::from_root(conductor, &scalar)
                .expect("conductor divisible by scalar orders");
        }
        m
    }

    pub fn conductor(&self) -> u64 {
        let mut c = 1u64;
        for row in &self.ops {
            for &(_, s) in row {
                c = num::integer::lcm(c, s.order());
            }
        }
        c
    }
}

/// The transversal combination basis on 8 vectors split into two sheets
/// `x_0..x_3`, `y_0..y_3`: columns are `x_0 + x_2, x_0 - x_2, x_1 + x_3,
/// x_1 - x_3` and the same pattern on the second sheet.
pub fn transversal_combos(conductor: u64) -> CycMatrix {
    let one = || Cyclotomic::one(conductor);
    let neg = || Cyclotomic::from_integer(conductor, -1);
    let mut c = CycMatrix::zero(8, conductor);
    let cols: [(usize, usize, bool); 8] = [
        (0, 2, true),
        (0, 2, false),
        (1, 3, true),
        (1, 3, false),
        (4, 6, true),
        (4, 6, false),
        (5, 7, true),
        (5, 7, false),
    ];
    for (col, &(a, b, plus)) in cols.iter().enumerate() {
        *c.at_mut(a, col) = one();
        *c.at_mut(b, col) = if plus { one() } else { neg() };
    }
    c
}

/// Which members carry each vector of [`transversal_combos`].
pub fn transversal_supports() -> Vec<Vec<usize>> {
    vec![
        vec![0, 2],
        vec![0, 2],
        vec![1, 3],
        vec![1, 3],
        vec![4, 6],
        vec![4, 6],
        vec![5, 7],
        vec![5, 7],
    ]
}

/// Conjugates each member operator into the combination basis, checks each is
/// exactly diagonal, checks the members supporting each combination vector
/// agree, and returns the resulting matrix of coefficients.
pub fn diagonalize_transversal(
    action: &MonomialAction,
    combos: &CycMatrix,
    supports: &[Vec<usize>],
) -> Result<BraidingMatrix, BraidingError> {
    let n = action.dim;
    let conductor = num::integer::lcm(action.conductor(), combos.conductor);
    let mut diagonals: Vec<Vec<Cyclotomic>> = Vec::with_capacity(n);
    for l in 0..n {
        let op = action.operator_matrix(l, conductor);
        let conj = change_of_basis(&op, combos)?;
        for row in 0..n {
            for col in 0..n {
                if row != col && !conj.at(row, col).is_zero() {
                    return Err(BraidingError::NotDiagonal {
                        index: l,
                        row,
                        col,
                        value: conj.at(row, col).to_string(),
                    });
                }
            }
        }
        diagonals.push((0..n).map(|i| conj.at(i, i).clone()).collect());
    }
    let mut entries = vec![vec![RootOfUnity::one(); n]; n];
    for (a, supp) in supports.iter().enumerate() {
        let first = supp[0];
        for &other in &supp[1..] {
            for col in 0..n {
                if diagonals[first][col] != diagonals[other][col] {
                    return Err(BraidingError::InconsistentPair(first, other, col));
                }
            }
        }
        for col in 0..n {
            entries[a][col] = diagonals[first][col]
                .as_root_of_unity()
                .ok_or(BraidingError::NotARoot(a, col))?;
        }
    }
    Ok(BraidingMatrix { entries })
}

/// A generalized Dynkin diagram: vertices labeled `q_{ll}`, an edge between
/// `l` and `k` labeled `q_{lk} q_{kl}` whenever that product is not 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GDDiagram {
    pub vertices: Vec<RootOfUnity>,
    /// `(l, k, label)` with `l < k`.
    pub edges: Vec<(usize, usize, RootOfUnity)>,
}

pub fn dynkin_diagram(q: &BraidingMatrix) -> GDDiagram {
    let n = q.dim();
    let vertices = (0..n).map(|l| q.at(l, l)).collect();
    let mut edges = Vec::new();
    for l in 0..n {
        for k in l + 1..n {
            let label = q.at(l, k).mul(&q.at(k, l));
            if !label.is_one() {
                edges.push((l, k, label));
            }
        }
    }
    GDDiagram { vertices, edges }
}

impl GDDiagram {
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for &(l, k, _) in &self.edges {
            adj[l][k] = true;
            adj[k][l] = true;
        }
        adj
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|&(l, k, _)| (l, k)).collect()
    }

    /// DOT form; vertex labels are the `q_{ll}`, edge labels the products.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dynkin {\n  node [shape=circle];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", i + 1, v));
        }
        for (l, k, label) in &self.edges {
            out.push_str(&format!(
                "  v{} -- v{} [label=\"{}\"];\n",
                l + 1,
                k + 1,
                label
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Finds an induced (chordless) cycle of length >= 4 by exhaustive subset
/// search; diagrams here never exceed 8 vertices. Returns a shortest such
/// cycle in walk order, starting from its smallest vertex.
pub fn has_long_cycle(g: &GDDiagram) -> Option<Vec<usize>> {
    let n = g.vertices.len();
    let adj = g.adjacency();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if verts.len() < 4 {
            continue;
        }
        if let Some(cycle) = induced_cycle_order(&verts, &adj) {
            match &best {
                Some(b) if b.len() <= cycle.len() => {}
                _ => best = Some(cycle),
            }
        }
    }
    best
}

/// If the induced subgraph on `verts` is exactly a cycle, returns its walk
/// order; otherwise `None`.
fn induced_cycle_order(verts: &[usize], adj: &[Vec<bool>]) -> Option<Vec<usize>> {
    for &v in verts {
        let deg = verts.iter().filter(|&&w| w != v && adj[v][w]).count();
        if deg != 2 {
            return None;
        }
    }
    let start = verts[0];
    let neighbors: Vec<usize> = verts
        .iter()
        .copied()
        .filter(|&w| w != start && adj[start][w])
        .collect();
    let mut order = vec![start, neighbors[0].min(neighbors[1])];
    loop {
        let cur = *order.last().unwrap();
        let prev = order[order.len() - 2];
        let next = verts
            .iter()
            .copied()
            .find(|&w| w != cur && w != prev && adj[cur][w])?;
        if next == start {
            break;
        }
        order.push(next);
    }
    (order.len() == verts.len()).then_some(order)
}

/// A generalized Cartan matrix extracted from a diagonal braiding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanData {
    pub a: Vec<Vec<i64>>,
}

/// Finds, for each off-diagonal pair, the exponent `a_{lk}` closest to zero
/// with `q_{lk} q_{kl} = q_{ll}^{a_{lk}}`; `None` when some pair admits none.
pub fn cartan_data(q: &BraidingMatrix) -> Result<Option<CartanData>, BraidingError> {
    let n = q.dim();
    let mut a = vec![vec![0i64; n]; n];
    for l in 0..n {
        if q.at(l, l).is_one() {
            return Err(BraidingError::CartanDiagonalOne(l));
        }
        a[l][l] = 2;
    }
    for l in 0..n {
        let ord = q.at(l, l).order() as i64;
        for k in 0..n {
            if l == k {
                continue;
            }
            let product = q.at(l, k).mul(&q.at(k, l));
            let mut found = None;
            for e in 0..ord {
                if q.at(l, l).pow(-e) == product {
                    found = Some(-e);
                    break;
                }
            }
            match found {
                Some(e) => a[l][k] = e,
                None => return Ok(None),
            }
        }
    }
    Ok(Some(CartanData { a }))
}

/// True iff the generalized Cartan matrix is of finite type: symmetrizable
/// with positive definite symmetrization, checked exactly over rationals.
pub fn is_finite_type(c: &CartanData) -> Result<bool, BraidingError> {
    let n = c.a.len();
    for l in 0..n {
        if c.a[l][l] != 2 {
            return Err(BraidingError::NotCartan);
        }
        for k in 0..n {
            if l != k && (c.a[l][k] > 0 || (c.a[l][k] == 0) != (c.a[k][l] == 0)) {
                return Err(BraidingError::NotCartan);
            }
        }
    }
    // symmetrizer d with d_l a_lk = d_k a_kl, found per connected component
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(BigRational::one());
        let mut stack = vec![root];
        while let Some(l) = stack.pop() {
            let dl = d[l].clone().unwrap();
            for k in 0..n {
                if l == k || c.a[l][k] == 0 {
                    continue;
                }
                let required = &dl * BigRational::new(c.a[l][k].into(), c.a[k][l].into());
                match &d[k] {
                    None => {
                        d[k] = Some(required);
                        stack.push(k);
                    }
                    Some(existing) => {
                        if *existing != required {
                            // not symmetrizable, hence not finite type
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    let sym: Vec<Vec<BigRational>> = (0..n)
        .map(|l| {
            (0..n)
                .map(|k| d[l].clone().unwrap() * BigRational::from_integer(c.a[l][k].into()))
                .collect()
        })
        .collect();
    Ok(is_positive_definite(&sym))
}

/// Outcome of the abelian-subrack sampling probe.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub families_tested: usize,
    pub negative: bool,
    /// First offending family and entry, when not negative.
    pub violation: Option<ProbeViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeViolation {
    pub members: Vec<Perm>,
    pub l: usize,
    pub k: usize,
    pub value: RootOfUnity,
    pub is_vertex: bool,
}

/// Samples up to `budget` abelian subrack families inside the class of the
/// canonical representative and checks the negative pattern: every diagonal
/// entry -1 and every off-diagonal product in {1, -1}.
pub fn negative_braiding_probe(
    pres: &CentralizerPresentation,
    rho: &CentralizerIrrep,
    budget: usize,
    seed: u64,
) -> Result<ProbeReport, BraidingError> {
    let deg = rho.degree();
    if deg != 1 {
        return Err(BraidingError::NotDegreeOne(deg));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = pres.m();
    let sigma = pres.sigma().clone();
    let eval = Deg1Eval { rho, pres };
    let mut tested = 0usize;
    let mut attempts = 0usize;
    while tested < budget && attempts < budget * 60 {
        attempts += 1;
        let size = 2 + (tested % 3); // cycle through sizes 2, 3, 4
        let mut members: Vec<(Perm, Perm)> = vec![(sigma.clone(), Perm::identity(m))];
        let mut inner_attempts = 0;
        while members.len() < size && inner_attempts < 60 {
            inner_attempts += 1;
            let g = random_perm(m, &mut rng);
            let cand = g.rack_conj(&sigma);
            if members.iter().any(|(s, _)| s == &cand)
                || !members.iter().all(|(s, _)| s.commutes_with(&cand))
            {
                continue;
            }
            members.push((cand, g));
        }
        if members.len() < 2 {
            continue;
        }
        let fam = SubrackFamily::new(sigma.clone(), members, FamilyKind::Abelian)?;
        tested += 1;
        if let Some(v) = check_negative(&fam, &eval)? {
            return Ok(ProbeReport {
                families_tested: tested,
                negative: false,
                violation: Some(v),
            });
        }
    }
    Ok(ProbeReport {
        families_tested: tested,
        negative: true,
        violation: None,
    })
}

/// Checks one abelian family for the negative pattern; returns the first
/// violation if any.
pub fn check_negative(
    fam: &SubrackFamily,
    eval: &dyn ScalarEval,
) -> Result<Option<ProbeViolation>, BraidingError> {
    let q = braiding_matrix(fam, eval)?;
    let n = q.dim();
    let members: Vec<Perm> = fam.members.iter().map(|(s, _)| s.clone()).collect();
    for l in 0..n {
        if !q.at(l, l).is_minus_one() {
            return Ok(Some(ProbeViolation {
                members,
                l,
                k: l,
                value: q.at(l, l),
                is_vertex: true,
            }));
        }
    }
    for l in 0..n {
        for k in l + 1..n {
            let product = q.at(l, k).mul(&q.at(k, l));
            if !product.is_one() && !product.is_minus_one() {
                return Ok(Some(ProbeViolation {
                    members,
                    l,
                    k,
                    value: product,
                    is_vertex: false,
                }));
            }
        }
    }
    Ok(None)
}

fn random_perm(m: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut images: Vec<u32> = (0..m as u32).collect();
    images.shuffle(rng);
    Perm::from_images(images).unwrap()
}

/// Hardcoded Cartan matrices of the finite and affine families; callers use
/// the finite ones, tests use both as the classification oracle.
pub mod cartan_tables {
    use super::CartanData;

    fn from_edges(n: usize, edges: &[(usize, usize, i64, i64)]) -> CartanData {
        let mut a = vec![vec![0i64; n]; n];
        for l in 0..n {
            a[l][l] = 2;
        }
        for &(i, j, aij, aji) in edges {
            a[i][j] = aij;
            a[j][i] = aji;
        }
        CartanData { a }
    }

    fn chain(n: usize) -> Vec<(usize, usize, i64, i64)> {
        (0..n - 1).map(|i| (i, i + 1, -1, -1)).collect()
    }

    pub fn type_a(n: usize) -> CartanData {
        from_edges(n, &chain(n))
    }

    pub fn type_b(n: usize) -> CartanData {
        assert!(n >= 2);
        let mut e = chain(n);
        e[n - 2] = (n - 2, n - 1, -1, -2);
        from_edges(n, &e)
    }

    pub fn type_c(n: usize) -> CartanData {
        assert!(n >= 2);
        let mut e = chain(n);
        e[n - 2] = (n - 2, n - 1, -2, -1);
        from_edges(n, &e)
    }

    pub fn type_d(n: usize) -> CartanData {
        assert!(n >= 4);
        let mut e = chain(n - 1);
        e.push((n - 3, n - 1, -1, -1));
        from_edges(n, &e)
    }

    pub fn type_e(n: usize) -> CartanData {
        assert!((6..=8).contains(&n));
        let mut e = chain(n - 1);
        e.push((2, n - 1, -1, -1));
        from_edges(n, &e)
    }

    pub fn type_f4() -> CartanData {
        from_edges(4, &[(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)])
    }

    pub fn type_g2() -> CartanData {
        from_edges(2, &[(0, 1, -3, -1)])
    }

    /// All finite Cartan matrices of rank <= `max_rank`.
    pub fn all_finite(max_rank: usize) -> Vec<(String, CartanData)> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push((format!("A{n}"), type_a(n)));
        }
        for n in 2..=max_rank {
            out.push((format!("B{n}"), type_b(n)));
        }
        for n in 3..=max_rank {
            out.push((format!("C{n}"), type_c(n)));
        }
        for n in 4..=max_rank {
            out.push((format!("D{n}"), type_d(n)));
        }
        for n in 6..=max_rank.min(8) {
            out.push((format!("E{n}"), type_e(n)));
        }
        if max_rank >= 4 {
            out.push(("F4".into(), type_f4()));
        }
        if max_rank >= 2 {
            out.push(("G2".into(), type_g2()));
        }
        out
    }

    /// Affine Cartan matrices with at most `max_size` vertices, untwisted and
    /// twisted families.
    pub fn all_affine(max_size: usize) -> Vec<(String, CartanData)> {
        let mut out = Vec::new();
        out.push(("A1~".into(), from_edges(2, &[(0, 1, -2, -2)])));
        for size in 3..=max_size {
            let mut e = chain(size);
            e.push((0, size - 1, -1, -1));
            out.push((format!("A{}~", size - 1), from_edges(size, &e)));
        }
        // Bn~ (n >= 3): fork at one end, double bond into the last node
        for size in 4..=max_size {
            let n = size - 1;
            let mut e: Vec<(usize, usize, i64, i64)> =
                (1..n - 1).map(|i| (i, i + 1, -1, -1)).collect();
            e.push((0, 2, -1, -1));
            e.push((n - 1, n, -1, -2));
            out.push((format!("B{n}~"), from_edges(size, &e)));
        }
        // Cn~ (n >= 2): double bonds inward at both ends
        for size in 3..=max_size {
            let n = size - 1;
            let mut e = chain(size);
            e[0] = (0, 1, -2, -1);
            e[n - 1] = (n - 1, n, -1, -2);
            out.push((format!("C{n}~"), from_edges(size, &e)));
        }
        // Dn~ (n >= 4): forks at both ends
        for size in 6..=max_size {
            let n = size - 1;
            let mut e: Vec<(usize, usize, i64, i64)> =
                (1..n - 1).map(|i| (i, i + 1, -1, -1)).collect();
            e.push((0, 2, -1, -1));
            e.push((n - 2, n, -1, -1));
            out.push((format!("D{n}~"), from_edges(size, &e)));
        }
        if max_size >= 7 {
            // E6~: chain 0-1-2-3-4, node 5 on 2, node 6 on 5
            out.push((
                "E6~".into(),
                from_edges(
                    7,
                    &[
                        (0, 1, -1, -1),
                        (1, 2, -1, -1),
                        (2, 3, -1, -1),
                        (3, 4, -1, -1),
                        (2, 5, -1, -1),
                        (5, 6, -1, -1),
                    ],
                ),
            ));
        }
        if max_size >= 8 {
            // E7~: chain of 7 with a node on the middle
            let mut e = chain(7);
            e.push((3, 7, -1, -1));
            out.push(("E7~".into(), from_edges(8, &e)));
        }
        if max_size >= 5 {
            out.push((
                "F4~".into(),
                from_edges(
                    5,
                    &[(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)],
                ),
            ));
        }
        if max_size >= 3 {
            out.push((
                "G2~".into(),
                from_edges(3, &[(0, 1, -1, -1), (1, 2, -3, -1)]),
            ));
        }
        out.push(("A2^(2)".into(), from_edges(2, &[(0, 1, -4, -1)])));
        for size in 3..=max_size {
            // A_{2n}^(2): chain with -2/-1 at both ends pointing outward
            let n = size - 1;
            let mut e = chain(size);
            e[0] = (0, 1, -2, -1);
            e[n - 1] = (n - 1, n, -2, -1);
            out.push((format!("A{}^(2)", 2 * n), from_edges(size, &e)));
        }
        for size in 4..=max_size {
            // A_{2n-1}^(2): fork at one end, -2 into the last
            let n = size - 1;
            let mut e: Vec<(usize, usize, i64, i64)> =
                (1..n - 1).map(|i| (i, i + 1, -1, -1)).collect();
            e.push((0, 2, -1, -1));
            e.push((n - 1, n, -2, -1));
            out.push((format!("A{}^(2)", 2 * n - 1), from_edges(size, &e)));
        }
        for size in 3..=max_size {
            // D_{n+1}^(2)
            let n = size - 1;
            let mut e = chain(size);
            e[0] = (0, 1, -1, -2);
            e[n - 1] = (n - 1, n, -2, -1);
            out.push((format!("D{}^(2)", n + 1), from_edges(size, &e)));
        }
        if max_size >= 5 {
            out.push((
                "E6^(2)".into(),
                from_edges(
                    5,
                    &[(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1), (3, 4, -1, -1)],
                ),
            ));
        }
        if max_size >= 3 {
            out.push((
                "D4^(3)".into(),
                from_edges(3, &[(0, 1, -1, -1), (1, 2, -1, -3)]),
            ));
        }
        out
    }

    /// Block direct sum.
    pub fn direct_sum(a: &CartanData, b: &CartanData) -> CartanData {
        let na = a.a.len();
        let nb = b.a.len();
        let mut m = vec![vec![0i64; na + nb]; na + nb];
        for i in 0..na {
            for j in 0..na {
                m[i][j] = a.a[i][j];
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                m[na + i][na + j] = b.a[i][j];
            }
        }
        CartanData { a: m }
    }
}
