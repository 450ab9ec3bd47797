//! Degrees of automorphic cohomology for unitary groups attached to division
//! algebras, and the coverage of cohomological representations by known
//! realisation results.
//!
//! For a divisor `b` of `n = ab` and `x = ⌊p/b⌋`,
//! `N(b) = b·x² + (b − 2p)·x + (a − 1)·p` bounds `Σ x_i (a − x_i)` over
//! `x ∈ [0, a]^b` with `Σ x_i = p`, and the degree support is the union of
//! `{pq − N(b), pq − N(b) + 2, …, pq + N(b)}` over `b | n`, `b ≠ 1`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::cohomreps::{CohRep, FamilyKind};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutDegreeError {
    #[error("{b} does not divide {n}")]
    NotADivisor { b: u64, n: u64 },
    #[error("p = {p} is outside 0..={n}")]
    OutOfRange { p: u64, n: u64 },
    #[error("signature ({p},{q}) does not add up to n = {n}")]
    SignatureMismatch { n: u64, p: u64, q: u64 },
    #[error("signature ({p},{q}) must satisfy 1 <= p <= q")]
    BadSignature { p: u64, q: u64 },
}

/// `N(b)` for `n = ab`.
pub fn n_bound(b: u64, n: u64, p: u64) -> Result<u64, AutDegreeError> {
    if b == 0 || !n.is_multiple_of(b) {
        return Err(AutDegreeError::NotADivisor { b, n });
    }
    if p > n {
        return Err(AutDegreeError::OutOfRange { p, n });
    }
    let (b, a, p) = (b as i64, (n / b) as i64, p as i64);
    let x = p / b;
    let value = b * x * x + (b - 2 * p) * x + (a - 1) * p;
    Ok(u64::try_from(value).expect("N(b) is a maximum of nonnegative sums"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemCOutcome {
    pub max: u64,
    /// All attained values of `Σ x_i (a − x_i)` have the same parity.
    pub parity_uniform: bool,
}

/// Exhaustive maximum of `Σ x_i (a − x_i)` over `x ∈ [0, a]^b`, `Σ x_i = p`.
pub fn lemc_bruteforce(a: u64, b: u64, p: u64) -> Result<LemCOutcome, AutDegreeError> {
    if p > a * b {
        return Err(AutDegreeError::OutOfRange { p, n: a * b });
    }
    let mut values = BTreeSet::new();
    lemc_walk(a, b, p, 0, &mut values);
    let max = *values.last().expect("p <= ab leaves at least one tuple");
    let parity_uniform = values.iter().all(|v| v % 2 == max % 2);
    Ok(LemCOutcome {
        max,
        parity_uniform,
    })
}

fn lemc_walk(a: u64, slots: u64, remaining: u64, acc: u64, values: &mut BTreeSet<u64>) {
    if slots == 0 {
        if remaining == 0 {
            values.insert(acc);
        }
        return;
    }
    // The other slots can absorb at most a·(slots − 1).
    let lo = remaining.saturating_sub(a * (slots - 1));
    for x in lo..=remaining.min(a) {
        lemc_walk(a, slots - 1, remaining - x, acc + x * (a - x), values);
    }
}

/// One term of the degree-support union.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorInterval {
    pub b: u64,
    pub n_b: u64,
    pub lo: u64,
    pub hi: u64,
}

/// Sorted degrees together with the intervals they come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSet {
    pub degrees: BTreeSet<u64>,
    /// Common parity of all degrees. Intervals for different `b` can have
    /// different parities (e.g. `n = 4`, `p = 1`), in which case this is
    /// `None`.
    pub parity: Option<u8>,
    pub intervals: Vec<DivisorInterval>,
}

impl DegreeSet {
    pub fn contains(&self, d: u64) -> bool {
        self.degrees.contains(&d)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.degrees.iter().copied().collect()
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|b| n.is_multiple_of(*b)).collect()
}

/// Union over divisors `b ≠ 1` of `n` of `[pq − N(b), pq + N(b)]` in steps
/// of 2.
pub fn degree_support(n: u64, p: u64, q: u64) -> Result<DegreeSet, AutDegreeError> {
    if p + q != n {
        return Err(AutDegreeError::SignatureMismatch { n, p, q });
    }
    if p == 0 || p > q {
        return Err(AutDegreeError::BadSignature { p, q });
    }
    let pq = p * q;
    let mut degrees = BTreeSet::new();
    let mut intervals = Vec::new();
    for b in divisors(n).into_iter().filter(|&b| b != 1) {
        let n_b = n_bound(b, n, p)?;
        let (lo, hi) = (pq - n_b, pq + n_b);
        degrees.extend((lo..=hi).step_by(2));
        intervals.push(DivisorInterval { b, n_b, lo, hi });
    }
    let first = degrees.first().map(|d| (d % 2) as u8);
    let parity = first.filter(|&par| degrees.iter().all(|d| (d % 2) as u8 == par));
    Ok(DegreeSet {
        degrees,
        parity,
        intervals,
    })
}

/// Which realisation question is answered: `Q1` asks for a congruence
/// subgroup, `Q2` for some lattice. `Q1` implies `Q2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoverageLevel {
    None,
    Q2,
    Q1,
}

impl CoverageLevel {
    pub fn implies(self, other: CoverageLevel) -> bool {
        self >= other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverageSource {
    /// Theta lifts from discrete series.
    LiGen,
    /// Discrete series of symmetric spaces.
    Ttt,
    /// Levi factors of the same type as the group.
    Relth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverageTag {
    pub level: CoverageLevel,
    pub source: Option<CoverageSource>,
}

impl CoverageTag {
    pub const NONE: CoverageTag = CoverageTag {
        level: CoverageLevel::None,
        source: None,
    };

    fn new(level: CoverageLevel, source: CoverageSource) -> Self {
        CoverageTag {
            level,
            source: Some(source),
        }
    }

    fn when(cond: bool, level: CoverageLevel, source: CoverageSource) -> Self {
        if cond {
            CoverageTag::new(level, source)
        } else {
            CoverageTag::NONE
        }
    }

    /// The stronger of the two tags, `self` on ties.
    fn max(self, other: CoverageTag) -> Self {
        if other.level > self.level {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for CoverageLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverageLevel::None => "none",
            CoverageLevel::Q2 => "Q2",
            CoverageLevel::Q1 => "Q1",
        })
    }
}

impl fmt::Display for CoverageSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverageSource::LiGen => "li",
            CoverageSource::Ttt => "ttt",
            CoverageSource::Relth => "relth",
        })
    }
}

/// `r` if `λ = (r^p)` (including `r = 0`).
fn rectangular_width(lambda: &Partition, p: u32) -> Option<u32> {
    let r = lambda.part(0);
    (*lambda == Partition::rectangle(p, r)).then_some(r)
}

/// Coverage by theta lifting: a single skew rectangle of large enough
/// perimeter, or `A((r^p))` for small `r` when `p + q` is odd.
pub fn li_coverage(rep: &CohRep) -> CoverageTag {
    use CoverageLevel::*;
    let (p, q) = (rep.family.p, rep.family.q);
    let single = rep.decomposition.single();
    let tag = |cond, level| CoverageTag::when(cond, level, CoverageSource::LiGen);
    match rep.kind() {
        FamilyKind::U => tag(single.is_some_and(|r| r.perimeter() > p + q), Q2),
        FamilyKind::O if (p + q) % 2 == 0 => {
            let od = rep
                .orthogonal
                .as_ref()
                .expect("orthogonal representations carry their decomposition");
            let central =
                od.pairs.is_empty() && od.center.is_some_and(|c| c.perimeter() > p + q + 2);
            tag(central, Q1)
        }
        FamilyKind::O => tag(
            rectangular_width(&rep.lambda, p).is_some_and(|r| 4 * r + 2 < p + q),
            Q1,
        ),
        FamilyKind::Sp => tag(
            rep.flag == Some(0) && single.is_some_and(|r| r.perimeter() >= p + q),
            Q1,
        ),
    }
}

/// Coverage for representations whose Levi factor contains a noncompact
/// simple factor of the same type as the group, together with the discrete
/// series of the symmetric spaces `H\G`. The stronger tag is returned.
pub fn relth_coverage(rep: &CohRep) -> CoverageTag {
    use CoverageLevel::*;
    let (p, q) = (rep.family.p, rep.family.q);
    let lam_r = rectangular_width(&rep.lambda, p);
    let mu_r = rectangular_width(&rep.mu, p);
    let (relth, ttt) = match rep.kind() {
        FamilyKind::U => {
            // λ = (r^p), μ = ((q − s)^p).
            let rs = lam_r.zip(mu_r).map(|(r, m)| (r, q - m));
            (
                CoverageTag::when(
                    p >= 2 && rs.is_some_and(|(r, s)| r + s + 2 <= q),
                    Q2,
                    CoverageSource::Relth,
                ),
                CoverageTag::when(
                    p >= 2 && rs.is_some_and(|(r, s)| r == s && 2 * r <= q),
                    Q2,
                    CoverageSource::Ttt,
                ),
            )
        }
        FamilyKind::O => {
            let bound = (q as i64 - 2).min(p as i64 + q as i64 - 5);
            (
                CoverageTag::when(
                    p >= 2 && lam_r.is_some_and(|r| 2 * r as i64 <= bound),
                    Q1,
                    CoverageSource::Relth,
                ),
                CoverageTag::when(
                    p >= 2 && lam_r.is_some_and(|r| 2 * r <= q),
                    Q2,
                    CoverageSource::Ttt,
                ),
            )
        }
        FamilyKind::Sp => {
            // λ = 0, μ = (c^p) with flag 0; c = q − r for relth, q − 2r for ttt.
            let c = (rep.flag == Some(0) && rep.lambda.is_empty())
                .then_some(mu_r)
                .flatten()
                .filter(|&c| c >= 1);
            (
                CoverageTag::when(c.is_some(), Q1, CoverageSource::Relth),
                CoverageTag::when(
                    p >= 2 && c.is_some_and(|c| (q - c) % 2 == 0),
                    Q2,
                    CoverageSource::Ttt,
                ),
            )
        }
    };
    relth.max(ttt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomreps::{enumerate, Family};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn n_bound_examples() {
        assert_eq!(n_bound(2, 4, 2).unwrap(), 2);
        for n in 1..10 {
            for p in 0..=n {
                assert_eq!(n_bound(n, n, p).unwrap(), 0);
                assert_eq!(n_bound(1, n, p).unwrap(), p * (n - p));
            }
        }
        assert_eq!(
            n_bound(3, 4, 1),
            Err(AutDegreeError::NotADivisor { b: 3, n: 4 })
        );
        assert!(n_bound(2, 4, 5).is_err());
    }

    #[test]
    fn lemc_examples() {
        let out = |a, b, p| {
            let o = lemc_bruteforce(a, b, p).unwrap();
            (o.max, o.parity_uniform)
        };
        assert_eq!(out(2, 2, 2), (2, true));
        for b in 1..5 {
            for p in 0..=b {
                assert_eq!(out(1, b, p), (0, true));
            }
        }
        assert_eq!(out(3, 2, 3), (4, true));
        assert!(lemc_bruteforce(2, 2, 5).is_err());
    }

    #[test]
    fn degree_support_examples() {
        assert_eq!(degree_support(4, 2, 2).unwrap().to_vec(), [2, 4, 6]);
        for (n, p) in [(5, 2), (7, 3), (11, 1), (13, 6)] {
            assert_eq!(degree_support(n, p, n - p).unwrap().to_vec(), [p * (n - p)]);
        }
        let s = degree_support(2, 1, 1).unwrap();
        assert_eq!(s.to_vec(), [1]);
        assert_eq!(s.parity, Some(1));
        let mixed = degree_support(4, 1, 3).unwrap();
        assert_eq!(mixed.to_vec(), [2, 3, 4]);
        assert_eq!(mixed.parity, None);
        assert_eq!(
            degree_support(5, 2, 2),
            Err(AutDegreeError::SignatureMismatch { n: 5, p: 2, q: 2 })
        );
        assert!(degree_support(5, 3, 2).is_err());
    }

    #[test]
    fn li_examples() {
        let rep = CohRep::unitary(2, 3, part("[1,1]"), part("[2,2]")).unwrap();
        assert_eq!(li_coverage(&rep).level, CoverageLevel::Q2);
        let rep = CohRep::orthogonal(3, 4, part("[1,1,1]")).unwrap();
        assert_eq!(li_coverage(&rep).level, CoverageLevel::Q1);
        for family in [
            Family::unitary(2, 3).unwrap(),
            Family::symplectic(2, 2).unwrap(),
        ] {
            for rep in enumerate(family) {
                if rep.is_discrete_series() {
                    assert_eq!(li_coverage(&rep), CoverageTag::NONE, "{rep}");
                }
            }
        }
    }

    #[test]
    fn relth_examples() {
        let rep = CohRep::orthogonal(2, 4, part("[1,1]")).unwrap();
        let tag = relth_coverage(&rep);
        assert_eq!(
            (tag.level, tag.source),
            (CoverageLevel::Q2, Some(CoverageSource::Ttt))
        );
        let rep = CohRep::orthogonal(3, 6, part("[2,2,2]")).unwrap();
        let tag = relth_coverage(&rep);
        assert_eq!(
            (tag.level, tag.source),
            (CoverageLevel::Q1, Some(CoverageSource::Relth))
        );
        for rep in enumerate(Family::unitary(1, 3).unwrap()) {
            assert_eq!(relth_coverage(&rep), CoverageTag::NONE, "{rep}");
        }
        let rep = CohRep::symplectic(1, 3, Partition::empty(), part("[2]"), 0).unwrap();
        assert_eq!(relth_coverage(&rep).level, CoverageLevel::Q1);
    }

    #[test]
    fn coverage_levels_are_ordered() {
        assert!(CoverageLevel::Q1.implies(CoverageLevel::Q2));
        assert!(!CoverageLevel::Q2.implies(CoverageLevel::Q1));
        assert!(CoverageLevel::Q2.implies(CoverageLevel::None));
    }
}
