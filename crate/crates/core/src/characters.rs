//! Exact characters of compact classical groups.
//!
//! A [`Character`] is a Laurent polynomial in the coordinates of a maximal
//! torus, with big-integer coefficients. Multiplicities of the trivial
//! representation are obtained by Weyl integration:
//!
//! ```text
//! mult(χ) = CT( χ · ∏_{α ∈ Φ} (1 - x^α) ) / |W|
//! ```
//!
//! where the product runs over all roots. This is the brute-force side of
//! every cohomology computation in the crate; the closed forms in
//! [`crate::cohomreps`] are checked against it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::Poly;

/// Above this dimension of the acted-on space the oracle gets slow.
pub const COST_WARNING_DIM: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("inexact division by {divisor} in {context}")]
    InexactDivision {
        divisor: BigInt,
        context: &'static str,
    },
    #[error("rank mismatch: group has rank {group}, character has rank {character}")]
    RankMismatch { group: usize, character: usize },
    #[error("character has a negative coefficient and is not a representation")]
    NotARepresentation,
    #[error("multiplicity {0} does not fit in a Poincaré coefficient")]
    Overflow(BigInt),
}

/// A torus weight, i.e. an exponent vector.
pub type Weight = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl Character {
    pub fn zero(rank: usize) -> Self {
        Character {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], BigInt::one())
    }

    pub fn monomial(weight: Weight, coeff: BigInt) -> Self {
        let mut c = Self::zero(weight.len());
        c.add_term(weight, coeff);
        c
    }

    /// Multiplicity-one weights, e.g. the weights of a representation.
    pub fn from_weights<I: IntoIterator<Item = Weight>>(rank: usize, weights: I) -> Self {
        let mut c = Self::zero(rank);
        for w in weights {
            assert_eq!(w.len(), rank, "weight length must equal the rank");
            c.add_term(w, BigInt::one());
        }
        c
    }

    fn add_term(&mut self, weight: Weight, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(weight) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, weight: &[i32]) -> BigInt {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.rank])
    }

    /// Value at the identity, i.e. the dimension for a genuine representation.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Direct sum of the two characters on disjoint coordinates.
    pub fn concat_sum(&self, other: &Character) -> Character {
        let rank = self.rank + other.rank;
        let mut out = Character::zero(rank);
        for (w, c) in &self.terms {
            let mut v = w.clone();
            v.resize(rank, 0);
            out.add_term(v, c.clone());
        }
        for (w, c) in &other.terms {
            let mut v = vec![0; self.rank];
            v.extend_from_slice(w);
            out.add_term(v, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Character {
        let mut out = Character::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// The character of the dual representation.
    pub fn dual(&self) -> Character {
        let mut out = Character::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.iter().map(|x| -x).collect(), c.clone());
        }
        out
    }

    pub fn add(&self, other: &Character) -> Character {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Character) -> Character {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn mul(&self, other: &Character) -> Character {
        assert_eq!(self.rank, other.rank);
        let mut acc: HashMap<Weight, BigInt> = HashMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let w: Weight = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
                *acc.entry(w).or_default() += c1 * c2;
            }
        }
        let mut out = Character::zero(self.rank);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out
    }

    /// `Σ_w self[w] · other[-w]`, the constant term of the product, without
    /// forming the product.
    pub fn pairing_constant_term(&self, other: &Character) -> BigInt {
        assert_eq!(self.rank, other.rank);
        let mut neg = vec![0; self.rank];
        let mut total = BigInt::zero();
        for (w, c) in &self.terms {
            for (n, x) in neg.iter_mut().zip(w) {
                *n = -x;
            }
            if let Some(d) = other.terms.get(&neg) {
                total += c * d;
            }
        }
        total
    }

    fn divide_exact(&self, k: &BigInt, context: &'static str) -> Result<Character, CharacterError> {
        let mut out = Character::zero(self.rank);
        for (w, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(CharacterError::InexactDivision {
                    divisor: k.clone(),
                    context,
                });
            }
            out.add_term(w.clone(), q);
        }
        Ok(out)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·x^{w:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[{}]({self})", self.rank)
    }
}

/// Power-sum operation: every exponent vector multiplied by `i`.
pub fn adams(chi: &Character, i: u32) -> Character {
    assert!(i >= 1, "Adams operations are indexed from 1");
    let mut out = Character::zero(chi.rank);
    for (w, c) in &chi.terms {
        out.add_term(w.iter().map(|x| x * i as i32).collect(), c.clone());
    }
    out
}

/// Characters of `⋀^0 V, …, ⋀^kmax V` from Newton's identities
/// `k·e_k = Σ_{i=1..k} (-1)^{i-1} e_{k-i} ψ^i(χ)`.
pub fn exterior_powers(chi: &Character, kmax: usize) -> Result<Vec<Character>, CharacterError> {
    if !chi.is_effective() {
        return Err(CharacterError::NotARepresentation);
    }
    let dim = chi.dimension().to_usize().unwrap_or(usize::MAX);
    let mut e = vec![Character::one(chi.rank)];
    let mut psi: Vec<Character> = Vec::new();
    for k in 1..=kmax {
        if k > dim {
            e.push(Character::zero(chi.rank));
            continue;
        }
        psi.push(adams(chi, k as u32));
        let mut acc = Character::zero(chi.rank);
        for i in 1..=k {
            let term = e[k - i].mul(&psi[i - 1]);
            acc = if i % 2 == 1 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        e.push(acc.divide_exact(&BigInt::from(k), "Newton's identity")?);
    }
    Ok(e)
}

/// One simple factor of a compact connected group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompactFactor {
    /// `U(n)`: rank `n`, roots `A_{n-1}`.
    Unitary(u32),
    /// `SO(n)`: rank `⌊n/2⌋`, roots `B_k` (odd `n`) or `D_k` (even `n`).
    SpecialOrthogonal(u32),
    /// Compact `Sp(n)`: rank `n`, roots `C_n`.
    Symplectic(u32),
}

impl CompactFactor {
    pub fn rank(&self) -> usize {
        match *self {
            CompactFactor::Unitary(n) | CompactFactor::Symplectic(n) => n as usize,
            CompactFactor::SpecialOrthogonal(n) => (n / 2) as usize,
        }
    }

    pub fn weyl_order(&self) -> BigInt {
        let fact = |k: u32| (1..=k).fold(BigInt::one(), |acc, i| acc * i);
        match *self {
            CompactFactor::Unitary(n) => fact(n),
            CompactFactor::Symplectic(n) => fact(n) << n as usize,
            CompactFactor::SpecialOrthogonal(n) => {
                let k = n / 2;
                if n % 2 == 1 {
                    fact(k) << k as usize
                } else if k == 0 {
                    BigInt::one()
                } else {
                    fact(k) << (k - 1) as usize
                }
            }
        }
    }

    /// All roots in the factor's own coordinates.
    pub fn roots(&self) -> Vec<Weight> {
        let r = self.rank();
        let unit = |i: usize, s: i32| {
            let mut v = vec![0; r];
            v[i] = s;
            v
        };
        let pair = |i: usize, j: usize, a: i32, b: i32| {
            let mut v = vec![0; r];
            v[i] = a;
            v[j] = b;
            v
        };
        let mut roots = Vec::new();
        match *self {
            CompactFactor::Unitary(_) => {
                for i in 0..r {
                    for j in 0..r {
                        if i != j {
                            roots.push(pair(i, j, 1, -1));
                        }
                    }
                }
            }
            CompactFactor::SpecialOrthogonal(n) => {
                push_pm_pairs(&mut roots, r, pair);
                if n % 2 == 1 {
                    for i in 0..r {
                        roots.push(unit(i, 1));
                        roots.push(unit(i, -1));
                    }
                }
            }
            CompactFactor::Symplectic(_) => {
                push_pm_pairs(&mut roots, r, pair);
                for i in 0..r {
                    roots.push(unit(i, 2));
                    roots.push(unit(i, -2));
                }
            }
        }
        roots
    }

    /// Weights of the defining representation (`ℂ^n` for `U(n)` and `SO(n)`,
    /// `ℂ^{2n}` for `Sp(n)`).
    pub fn standard_weights(&self) -> Vec<Weight> {
        let r = self.rank();
        let unit = |i: usize, s: i32| {
            let mut v = vec![0; r];
            v[i] = s;
            v
        };
        let mut w = Vec::new();
        match *self {
            CompactFactor::Unitary(_) => w.extend((0..r).map(|i| unit(i, 1))),
            CompactFactor::SpecialOrthogonal(n) => {
                for i in 0..r {
                    w.push(unit(i, 1));
                    w.push(unit(i, -1));
                }
                if n % 2 == 1 {
                    w.push(vec![0; r]);
                }
            }
            CompactFactor::Symplectic(_) => {
                for i in 0..r {
                    w.push(unit(i, 1));
                    w.push(unit(i, -1));
                }
            }
        }
        w
    }
}

fn push_pm_pairs(
    roots: &mut Vec<Weight>,
    r: usize,
    pair: impl Fn(usize, usize, i32, i32) -> Weight,
) {
    for i in 0..r {
        for j in i + 1..r {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(pair(i, j, a, b));
            }
        }
    }
}

impl fmt::Display for CompactFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompactFactor::Unitary(n) => write!(f, "U({n})"),
            CompactFactor::SpecialOrthogonal(n) => write!(f, "SO({n})"),
            CompactFactor::Symplectic(n) => write!(f, "Sp({n})"),
        }
    }
}

/// A product of compact classical groups; torus coordinates are concatenated
/// in factor order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CompactGroupSpec {
    pub factors: Vec<CompactFactor>,
}

impl CompactGroupSpec {
    pub fn new(factors: Vec<CompactFactor>) -> Self {
        CompactGroupSpec { factors }
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(CompactFactor::rank).sum()
    }

    pub fn weyl_order(&self) -> BigInt {
        self.factors.iter().map(CompactFactor::weyl_order).product()
    }

    /// Offset of factor `i`'s first coordinate.
    pub fn offset(&self, i: usize) -> usize {
        self.factors[..i].iter().map(CompactFactor::rank).sum()
    }

    /// Roots of the whole group in concatenated coordinates.
    pub fn roots(&self) -> Vec<Weight> {
        let rank = self.rank();
        let mut out = Vec::new();
        for (i, f) in self.factors.iter().enumerate() {
            let off = self.offset(i);
            for root in f.roots() {
                let mut v = vec![0; rank];
                v[off..off + root.len()].copy_from_slice(&root);
                out.push(v);
            }
        }
        out
    }

    /// `∏_{α ∈ Φ} (1 - x^α)`, expanded once per group and cached.
    pub fn weyl_denominator(&self) -> Arc<Character> {
        static CACHE: OnceLock<Mutex<HashMap<CompactGroupSpec, Arc<Character>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().expect("denominator cache poisoned").get(self) {
            return Arc::clone(hit);
        }
        let rank = self.rank();
        let mut prod = Character::one(rank);
        for root in self.roots() {
            let factor = Character::one(rank).sub(&Character::monomial(root, BigInt::one()));
            prod = prod.mul(&factor);
        }
        let prod = Arc::new(prod);
        cache
            .lock()
            .expect("denominator cache poisoned")
            .insert(self.clone(), Arc::clone(&prod));
        prod
    }
}

impl fmt::Display for CompactGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("{1}");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("×")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Multiplicity of the trivial representation in the (virtual) character.
pub fn trivial_multiplicity(
    chi: &Character,
    group: &CompactGroupSpec,
) -> Result<BigInt, CharacterError> {
    if chi.rank() != group.rank() {
        return Err(CharacterError::RankMismatch {
            group: group.rank(),
            character: chi.rank(),
        });
    }
    let ct = chi.pairing_constant_term(&group.weyl_denominator());
    let w = group.weyl_order();
    let (q, r) = ct.div_rem(&w);
    if !r.is_zero() {
        return Err(CharacterError::InexactDivision {
            divisor: w,
            context: "Weyl integration",
        });
    }
    Ok(q)
}

/// `Σ_i dim Hom_G(⋀^i V, ℂ) t^i` for the representation `V` with character
/// `chi`.
pub fn invariant_poincare(
    group: &CompactGroupSpec,
    chi: &Character,
) -> Result<Poly, CharacterError> {
    if chi.rank() != group.rank() {
        return Err(CharacterError::RankMismatch {
            group: group.rank(),
            character: chi.rank(),
        });
    }
    let dim = chi
        .dimension()
        .to_usize()
        .ok_or(CharacterError::NotARepresentation)?;
    if dim > COST_WARNING_DIM {
        log::warn!(
            "invariant computation for a {dim}-dimensional representation of {group} \
             is beyond the intended scale (dim <= {COST_WARNING_DIM}) and may be slow"
        );
    }
    let powers = exterior_powers(chi, dim)?;
    let coeffs = powers
        .iter()
        .map(|e| {
            let m = trivial_multiplicity(e, group)?;
            m.to_u64().ok_or(CharacterError::Overflow(m))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// The character of `E ⊗ F` where `E`, `F` have the given weights in
/// concatenated coordinates.
pub fn tensor_weights(rank: usize, left: &[Weight], right: &[Weight]) -> Character {
    Character::from_weights(
        rank,
        left.iter().flat_map(|a| {
            right
                .iter()
                .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect())
        }),
    )
}
