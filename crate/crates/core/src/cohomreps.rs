//! Cohomological representations of `U(p,q)`, `O(p,q)⁰` and `Sp(p,q)`.
//!
//! * `U(p,q)`: `A(λ,μ)` for compatible pairs `λ ⊆ μ ⊆ p×q`.
//! * `O(p,q)⁰`: `A(λ)` for orthogonal `λ`, i.e. `(λ, λ̂)` compatible. The
//!   sign decorations of the disconnected group are collapsed.
//! * `Sp(p,q)`: `A(λ,μ)_i` for compatible pairs, with `i ∈ {0, 1}`; `i = 0`
//!   turns the first rectangle into a quaternionic block.
//!
//! The cohomology of `A_q` is `H^i = Hom_{L∩K}(⋀^{i-R}(l∩p), ℂ)`, which this
//! module evaluates both in closed form and through the character oracle.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::characters::{
    invariant_poincare, tensor_weights, Character, CharacterError, CompactFactor, CompactGroupSpec,
    Weight,
};
use crate::partitions::{
    compatible_pairs, orthogonal_decomposition, orthogonal_partitions, rectangle_decomposition,
    OrthogonalDecomposition, Partition, PartitionError, Rectangle, SkewDecomposition,
};
use crate::poly::{gaussian_binomial, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohRepError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error("signature ({p},{q}) must have p, q >= 1")]
    BadSignature { p: u32, q: u32 },
    #[error("operation needs a {expected} representation, got {found}")]
    WrongFamily {
        expected: FamilyKind,
        found: FamilyKind,
    },
    #[error("flag {flag} is not allowed for Sp({p},{q}) A[{lambda}|{mu}]")]
    FlagNotAllowed {
        p: u32,
        q: u32,
        lambda: Partition,
        mu: Partition,
        flag: u8,
    },
    #[error("unknown family {0:?}, expected U, O or Sp")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    U,
    O,
    Sp,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::U => "U",
            FamilyKind::O => "O",
            FamilyKind::Sp => "Sp",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = CohRepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "u" => Ok(FamilyKind::U),
            "o" => Ok(FamilyKind::O),
            "sp" => Ok(FamilyKind::Sp),
            _ => Err(CohRepError::UnknownFamily(s.to_string())),
        }
    }
}

/// A classical group with its signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    pub kind: FamilyKind,
    pub p: u32,
    pub q: u32,
}

impl Family {
    pub fn new(kind: FamilyKind, p: u32, q: u32) -> Result<Self, CohRepError> {
        if p == 0 || q == 0 {
            return Err(CohRepError::BadSignature { p, q });
        }
        Ok(Family { kind, p, q })
    }

    pub fn unitary(p: u32, q: u32) -> Result<Self, CohRepError> {
        Family::new(FamilyKind::U, p, q)
    }

    pub fn orthogonal(p: u32, q: u32) -> Result<Self, CohRepError> {
        Family::new(FamilyKind::O, p, q)
    }

    pub fn symplectic(p: u32, q: u32) -> Result<Self, CohRepError> {
        Family::new(FamilyKind::Sp, p, q)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind, self.p, self.q)
    }
}

/// One cohomological representation together with its derived data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohRep {
    pub family: Family,
    pub lambda: Partition,
    /// For `O` this is `λ̂`.
    pub mu: Partition,
    /// `Some(0 | 1)` for `Sp`, `None` otherwise.
    pub flag: Option<u8>,
    pub decomposition: SkewDecomposition,
    /// Palindromic structure of `λ̂/λ`, `O` only.
    pub orthogonal: Option<OrthogonalDecomposition>,
    pub degree: u32,
    /// `(R⁺, R⁻)`, `U` only.
    pub hodge: Option<(u32, u32)>,
    /// Number of irreducible `O(p,q)⁰`-summands of the `O(p,q)` module
    /// (1, 2 or 4). Not determined here; always `None`.
    pub sign_multiplicity: Option<u8>,
}

/// Whether `Sp(p,q) A(λ,μ)_0` exists for this pair.
pub fn sp_flag0_allowed(
    lambda: &Partition,
    mu: &Partition,
    p: u32,
    decomposition: &SkewDecomposition,
) -> bool {
    let last = p as usize - 1;
    lambda.part(last) == 0 && mu.part(last) > 0 && !decomposition.is_empty()
}

impl CohRep {
    pub fn unitary(p: u32, q: u32, lambda: Partition, mu: Partition) -> Result<Self, CohRepError> {
        let family = Family::unitary(p, q)?;
        let decomposition = rectangle_decomposition(&lambda, &mu, p, q)?;
        Ok(Self::unitary_from_parts(family, lambda, mu, decomposition))
    }

    fn unitary_from_parts(
        family: Family,
        lambda: Partition,
        mu: Partition,
        decomposition: SkewDecomposition,
    ) -> Self {
        let (p, q) = (family.p, family.q);
        let mu_hat = mu.complement(p, q).expect("μ fits in the box");
        let hodge = (lambda.weight(), mu_hat.weight());
        CohRep {
            family,
            degree: p * q - decomposition.area(),
            lambda,
            mu,
            flag: None,
            decomposition,
            orthogonal: None,
            hodge: Some(hodge),
            sign_multiplicity: None,
        }
    }

    pub fn orthogonal(p: u32, q: u32, lambda: Partition) -> Result<Self, CohRepError> {
        let family = Family::orthogonal(p, q)?;
        let od = orthogonal_decomposition(&lambda, p, q)?;
        Ok(Self::orthogonal_from_parts(family, lambda, od))
    }

    fn orthogonal_from_parts(
        family: Family,
        lambda: Partition,
        od: OrthogonalDecomposition,
    ) -> Self {
        let mu = lambda
            .complement(family.p, family.q)
            .expect("λ fits in the box");
        CohRep {
            family,
            degree: lambda.weight(),
            lambda,
            mu,
            flag: None,
            decomposition: od.skew.clone(),
            orthogonal: Some(od),
            hodge: None,
            sign_multiplicity: None,
        }
    }

    pub fn symplectic(
        p: u32,
        q: u32,
        lambda: Partition,
        mu: Partition,
        flag: u8,
    ) -> Result<Self, CohRepError> {
        let family = Family::symplectic(p, q)?;
        let decomposition = rectangle_decomposition(&lambda, &mu, p, q)?;
        let allowed = match flag {
            1 => true,
            0 => sp_flag0_allowed(&lambda, &mu, p, &decomposition),
            _ => false,
        };
        if !allowed {
            return Err(CohRepError::FlagNotAllowed {
                p,
                q,
                lambda,
                mu,
                flag,
            });
        }
        Ok(Self::symplectic_from_parts(
            family,
            lambda,
            mu,
            decomposition,
            flag,
        ))
    }

    fn symplectic_from_parts(
        family: Family,
        lambda: Partition,
        mu: Partition,
        decomposition: SkewDecomposition,
        flag: u8,
    ) -> Self {
        let pq2 = 2 * family.p * family.q;
        let degree = match (flag, decomposition.first()) {
            (0, Some(first)) => pq2 - first.area() - decomposition.area(),
            _ => pq2 - decomposition.area(),
        };
        CohRep {
            family,
            lambda,
            mu,
            flag: Some(flag),
            decomposition,
            orthogonal: None,
            degree,
            hodge: None,
            sign_multiplicity: None,
        }
    }

    /// Builds a representation of any family; `mu` is ignored for `O` and
    /// `flag` is required for `Sp`.
    pub fn new(
        family: Family,
        lambda: Partition,
        mu: Option<Partition>,
        flag: Option<u8>,
    ) -> Result<Self, CohRepError> {
        let (p, q) = (family.p, family.q);
        let full = || Partition::rectangle(p, q);
        match family.kind {
            FamilyKind::U => CohRep::unitary(p, q, lambda, mu.unwrap_or_else(full)),
            FamilyKind::O => CohRep::orthogonal(p, q, lambda),
            FamilyKind::Sp => {
                CohRep::symplectic(p, q, lambda, mu.unwrap_or_else(full), flag.unwrap_or(1))
            }
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.family.kind
    }

    /// Empty skew diagram: the representation is a discrete series.
    pub fn is_discrete_series(&self) -> bool {
        self.decomposition.is_empty()
    }

    /// The trivial representation, i.e. cohomology starting in degree 0.
    pub fn is_trivial(&self) -> bool {
        self.degree == 0
    }

    /// `(p_1, q_1)` if the representation carries a quaternionic block.
    pub fn quaternionic_block(&self) -> Option<Rectangle> {
        match self.flag {
            Some(0) => self.decomposition.first(),
            _ => None,
        }
    }
}

impl fmt::Display for CohRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.kind {
            FamilyKind::U => write!(f, "{} A[{}|{}]", self.family, self.lambda, self.mu),
            FamilyKind::O => write!(f, "{} A[{}]", self.family, self.lambda),
            FamilyKind::Sp => write!(
                f,
                "{} A[{}|{}]_{}",
                self.family,
                self.lambda,
                self.mu,
                self.flag.unwrap_or(1)
            ),
        }
    }
}

/// Every cohomological representation of the family, in lexicographic order
/// of `(λ, μ, flag)`.
pub fn enumerate(family: Family) -> Vec<CohRep> {
    let (p, q) = (family.p, family.q);
    match family.kind {
        FamilyKind::U => compatible_pairs(p, q)
            .into_iter()
            .map(|(l, m, d)| CohRep::unitary_from_parts(family, l, m, d))
            .collect(),
        FamilyKind::O => orthogonal_partitions(p, q)
            .expect("λ̂/λ is stable under the half-turn, so its rectangles are palindromic")
            .into_iter()
            .map(|(l, od)| CohRep::orthogonal_from_parts(family, l, od))
            .collect(),
        FamilyKind::Sp => {
            let mut out = Vec::new();
            for (l, m, d) in compatible_pairs(p, q) {
                if sp_flag0_allowed(&l, &m, p, &d) {
                    out.push(CohRep::symplectic_from_parts(
                        family,
                        l.clone(),
                        m.clone(),
                        d.clone(),
                        0,
                    ));
                }
                out.push(CohRep::symplectic_from_parts(family, l, m, d, 1));
            }
            out
        }
    }
}

/// [`enumerate`], memoized per family.
pub fn enumerate_cached(family: Family) -> Arc<Vec<CohRep>> {
    static MEMO: OnceLock<Mutex<HashMap<Family, Arc<Vec<CohRep>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().expect("enumeration memo poisoned").get(&family) {
        return Arc::clone(hit);
    }
    let reps = Arc::new(enumerate(family));
    memo.lock()
        .expect("enumeration memo poisoned")
        .insert(family, Arc::clone(&reps));
    reps
}

/// The strongly primitive degree `R`.
pub fn degree_r(rep: &CohRep) -> u32 {
    rep.degree
}

/// `(R⁺, R⁻) = (|λ|, |μ̂|)` for unitary groups.
pub fn hodge_type(rep: &CohRep) -> Result<(u32, u32), CohRepError> {
    rep.hodge.ok_or(CohRepError::WrongFamily {
        expected: FamilyKind::U,
        found: rep.kind(),
    })
}

/// Smallest nonzero degree in which some cohomological representation has
/// cohomology.
pub fn r_g(family: Family) -> u32 {
    let m = family.p.min(family.q);
    match family.kind {
        FamilyKind::U | FamilyKind::O => m,
        FamilyKind::Sp => 2 * m,
    }
}

/// Builds weights on `rank` coordinates from `(coordinate, sign)` entries.
fn weight(rank: usize, entries: &[(usize, i32)]) -> Weight {
    let mut w = vec![0; rank];
    for &(i, s) in entries {
        w[i] += s;
    }
    w
}

/// The compact group `L ∩ K` and the character of `l ∩ p` on its torus.
pub fn lp_character(rep: &CohRep) -> (CompactGroupSpec, Character) {
    // Each block is (factors, weights in block-local coordinates).
    let mut blocks: Vec<(Vec<CompactFactor>, Vec<Weight>)> = Vec::new();

    let unitary_block = |r: Rectangle| {
        let (a, b) = (r.rows as usize, r.cols as usize);
        let rank = a + b;
        let mut ws = Vec::with_capacity(2 * a * b);
        for i in 0..a {
            for j in 0..b {
                ws.push(weight(rank, &[(i, 1), (a + j, -1)]));
                ws.push(weight(rank, &[(i, -1), (a + j, 1)]));
            }
        }
        (
            vec![
                CompactFactor::Unitary(r.rows),
                CompactFactor::Unitary(r.cols),
            ],
            ws,
        )
    };

    match rep.kind() {
        FamilyKind::U => blocks.extend(
            rep.decomposition
                .rectangles
                .iter()
                .map(|&r| unitary_block(r)),
        ),
        FamilyKind::O => {
            let od = rep
                .orthogonal
                .as_ref()
                .expect("orthogonal representations carry their decomposition");
            blocks.extend(od.pairs.iter().map(|&r| unitary_block(r)));
            if let Some(c) = od.center {
                blocks.push(real_grassmannian_block(c.rows, c.cols));
            }
        }
        FamilyKind::Sp => {
            let mut rects = rep.decomposition.rectangles.iter();
            if rep.flag == Some(0) {
                if let Some(&first) = rects.next() {
                    blocks.push(quaternionic_block(first.rows, first.cols));
                }
            }
            blocks.extend(rects.map(|&r| unitary_block(r)));
        }
    }

    let group = CompactGroupSpec::new(blocks.iter().flat_map(|(f, _)| f.iter().copied()).collect());
    let rank = group.rank();
    let mut chi = Character::zero(rank);
    let mut offset = 0;
    for (factors, ws) in &blocks {
        let block_rank: usize = factors.iter().map(CompactFactor::rank).sum();
        let lifted = ws.iter().map(|w| {
            let mut v = vec![0; rank];
            v[offset..offset + block_rank].copy_from_slice(w);
            v
        });
        chi = chi.add(&Character::from_weights(rank, lifted));
        offset += block_rank;
    }
    (group, chi)
}

/// `SO(a) × SO(b)` acting on `ℝ^a ⊗ ℝ^b`.
fn real_grassmannian_block(a: u32, b: u32) -> (Vec<CompactFactor>, Vec<Weight>) {
    let (fa, fb) = (
        CompactFactor::SpecialOrthogonal(a),
        CompactFactor::SpecialOrthogonal(b),
    );
    let (ra, rb) = (fa.rank(), fb.rank());
    let left: Vec<Weight> = fa
        .standard_weights()
        .into_iter()
        .map(|mut w| {
            w.resize(ra + rb, 0);
            w
        })
        .collect();
    let right: Vec<Weight> = fb
        .standard_weights()
        .into_iter()
        .map(|w| {
            let mut v = vec![0; ra];
            v.extend(w);
            v
        })
        .collect();
    let chi = tensor_weights(ra + rb, &left, &right);
    let ws = chi
        .terms()
        .flat_map(|(w, c)| std::iter::repeat_n(w.clone(), usize::try_from(c).unwrap_or(0)))
        .collect();
    (vec![fa, fb], ws)
}

/// `Sp(a) × Sp(b)` acting on `ℍ^a ⊗_ℍ ℍ^b`, real dimension `4ab`.
fn quaternionic_block(a: u32, b: u32) -> (Vec<CompactFactor>, Vec<Weight>) {
    let (a, b) = (a as usize, b as usize);
    let rank = a + b;
    let mut ws = Vec::with_capacity(4 * a * b);
    for i in 0..a {
        for j in 0..b {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                ws.push(weight(rank, &[(i, s), (a + j, t)]));
            }
        }
    }
    (
        vec![
            CompactFactor::Symplectic(a as u32),
            CompactFactor::Symplectic(b as u32),
        ],
        ws,
    )
}

/// Poincaré polynomial of `SO(a+b)/(SO(a)×SO(b))`, computed by the oracle
/// and memoized.
pub fn real_grassmannian_poincare(a: u32, b: u32) -> Result<Poly, CohRepError> {
    static MEMO: OnceLock<Mutex<HashMap<(u32, u32), Poly>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(p) = memo
        .lock()
        .expect("Grassmannian memo poisoned")
        .get(&(a, b))
    {
        return Ok(p.clone());
    }
    let (factors, ws) = real_grassmannian_block(a, b);
    let group = CompactGroupSpec::new(factors);
    let chi = Character::from_weights(group.rank(), ws);
    let poly = invariant_poincare(&group, &chi)?;
    memo.lock()
        .expect("Grassmannian memo poisoned")
        .insert((a, b), poly.clone());
    Ok(poly)
}

/// `t^R` times the Poincaré polynomials of the compact duals of the blocks
/// of `L`.
pub fn poincare_closed(rep: &CohRep) -> Result<Poly, CohRepError> {
    let complex = |r: &Rectangle| gaussian_binomial(r.rows + r.cols, r.rows).stretch(2);
    let mut poly = Poly::one();
    match rep.kind() {
        FamilyKind::U => {
            for r in &rep.decomposition.rectangles {
                poly = &poly * &complex(r);
            }
        }
        FamilyKind::O => {
            let od = rep
                .orthogonal
                .as_ref()
                .expect("orthogonal representations carry their decomposition");
            for r in &od.pairs {
                poly = &poly * &complex(r);
            }
            if let Some(c) = od.center {
                poly = &poly * &real_grassmannian_poincare(c.rows, c.cols)?;
            }
        }
        FamilyKind::Sp => {
            let mut rects = rep.decomposition.rectangles.iter();
            if rep.flag == Some(0) {
                if let Some(r) = rects.next() {
                    poly = &poly * &gaussian_binomial(r.rows + r.cols, r.rows).stretch(4);
                }
            }
            for r in rects {
                poly = &poly * &complex(r);
            }
        }
    }
    Ok(poly.shift(rep.degree as usize))
}

/// `(degree, dim H^degree)` for every nonzero cohomology group, computed from
/// `l ∩ p` by the character oracle alone.
pub fn full_cohomology(rep: &CohRep) -> Result<Vec<(u32, u64)>, CohRepError> {
    let (group, chi) = lp_character(rep);
    let poly = invariant_poincare(&group, &chi)?.shift(rep.degree as usize);
    Ok(poly
        .terms()
        .into_iter()
        .map(|(d, c)| (d as u32, c))
        .collect())
}
