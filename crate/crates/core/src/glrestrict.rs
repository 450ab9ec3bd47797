//! Exponent bookkeeping for unitary representations of `GL(n, ℝ)` and the
//! predicted exponents of their restrictions to `GL(m, ℝ)`.
//!
//! A unitary representation is a product of blocks `u(δ, j)` (a Speh
//! representation built on a discrete series `δ` of `GL(m)`, `m ∈ {1, 2}`)
//! and complementary blocks `u(δ, j)[α, −α]` with `0 < α < 1/2`. Its exponent
//! vector `T` collects the ladders `(j−1)/2, (j−3)/2, …, (1−j)/2` of all
//! blocks, each entry repeated `m` times, sorted decreasingly.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GLError {
    #[error("block size m must be 1 or 2, got {0}")]
    BadBlockSize(u32),
    #[error("Speh length j must be positive")]
    ZeroLength,
    #[error("complementary parameter {0} is outside (0, 1/2)")]
    BadAlpha(Rational64),
    #[error("target rank {m} must satisfy 1 <= m <= {n}")]
    BadRank { m: usize, n: usize },
    #[error("{name} = {value} is outside the open interval (0, 1)")]
    DomainError {
        name: &'static str,
        value: Rational64,
    },
    #[error("cannot parse {0:?} as a sum of blocks u(m,j) or u(m,j)[a/b]")]
    Parse(String),
}

fn half(k: i64) -> Rational64 {
    Rational64::new(k, 2)
}

/// `u(δ, j)` or `u(δ, j)[α, −α]` with `δ` a discrete series of `GL(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GLBlock {
    pub m: u32,
    pub j: u32,
    pub alpha: Option<Rational64>,
}

impl GLBlock {
    pub fn new(m: u32, j: u32, alpha: Option<Rational64>) -> Result<Self, GLError> {
        if !(1..=2).contains(&m) {
            return Err(GLError::BadBlockSize(m));
        }
        if j == 0 {
            return Err(GLError::ZeroLength);
        }
        if let Some(a) = alpha {
            if !a.is_positive() || a >= half(1) {
                return Err(GLError::BadAlpha(a));
            }
        }
        Ok(GLBlock { m, j, alpha })
    }

    pub fn size(&self) -> usize {
        let base = (self.m * self.j) as usize;
        if self.alpha.is_some() {
            2 * base
        } else {
            base
        }
    }

    /// The block's exponents, unsorted.
    fn exponents(&self) -> Vec<Rational64> {
        let j = self.j as i64;
        let ladder: Vec<Rational64> = (0..j).map(|k| half(j - 1 - 2 * k)).collect();
        let shifts = match self.alpha {
            None => vec![Rational64::zero()],
            Some(a) => vec![a, -a],
        };
        let mut out = Vec::with_capacity(self.size());
        for s in shifts {
            for &x in &ladder {
                out.extend(std::iter::repeat_n(x + s, self.m as usize));
            }
        }
        out
    }
}

impl fmt::Display for GLBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u({},{})", self.m, self.j)?;
        if let Some(a) = self.alpha {
            write!(f, "[{a}]")?;
        }
        Ok(())
    }
}

/// A unitary representation of `GL(n, ℝ)` as a list of blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GLRep {
    pub blocks: Vec<GLBlock>,
}

impl GLRep {
    pub fn new(blocks: Vec<GLBlock>) -> Self {
        GLRep { blocks }
    }

    /// The trivial representation `u(1, n)` of `GL(n)`.
    pub fn trivial(n: u32) -> Self {
        GLRep::new(vec![GLBlock::new(1, n, None).expect("n >= 1")])
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(GLBlock::size).sum()
    }
}

impl fmt::Display for GLRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for GLRep {
    type Err = GLError;

    /// Parses `u(1,3)+u(2,2)[1/3]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GLError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut blocks = Vec::new();
        for term in compact.split('+') {
            let body = term.strip_prefix("u(").ok_or_else(err)?;
            let (args, rest) = body.split_once(')').ok_or_else(err)?;
            let (m, j) = args.split_once(',').ok_or_else(err)?;
            let m: u32 = m.parse().map_err(|_| err())?;
            let j: u32 = j.parse().map_err(|_| err())?;
            let alpha = match rest {
                "" => None,
                r => {
                    let inner = r
                        .strip_prefix('[')
                        .and_then(|r| r.strip_suffix(']'))
                        .ok_or_else(err)?;
                    Some(inner.parse::<Rational64>().map_err(|_| err())?)
                }
            };
            blocks.push(GLBlock::new(m, j, alpha)?);
        }
        Ok(GLRep::new(blocks))
    }
}

/// Exponents sorted weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<Rational64>);

impl ExponentVector {
    pub fn entries(&self) -> &[Rational64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rationals(f, &self.0)
    }
}

fn write_rationals(f: &mut fmt::Formatter<'_>, xs: &[Rational64]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

pub fn t_matrix(rep: &GLRep) -> ExponentVector {
    let mut all: Vec<Rational64> = rep.blocks.iter().flat_map(GLBlock::exponents).collect();
    all.sort_by(|a, b| b.cmp(a));
    ExponentVector(all)
}

/// `ρ_k = ((k−1)/2, (k−3)/2, …, (1−k)/2)`.
pub fn rho(k: usize) -> Vec<Rational64> {
    let k = k as i64;
    (0..k).map(|i| half(k - 1 - 2 * i)).collect()
}

/// `ρ_m` spread over `n` slots: positive entries at the top, negative
/// entries at the bottom, zeros in between.
pub fn pad_rho(m: usize, n: usize) -> Vec<Rational64> {
    assert!(m <= n);
    let r = rho(m);
    let h = m / 2;
    let mut out = vec![Rational64::zero(); n];
    out[..h].copy_from_slice(&r[..h]);
    out[n - h..].copy_from_slice(&r[m - h..]);
    out
}

/// Which `m` entries of `GL(n)` are kept for `GL(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ClipMode {
    /// The top `⌈m/2⌉` and bottom `⌊m/2⌋` entries.
    #[default]
    Outer,
    /// The top `m` entries.
    Top,
}

impl fmt::Display for ClipMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClipMode::Outer => "outer",
            ClipMode::Top => "top",
        })
    }
}

impl FromStr for ClipMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "outer" => Ok(ClipMode::Outer),
            "top" => Ok(ClipMode::Top),
            other => Err(format!(
                "unknown clip mode {other:?}, expected outer or top"
            )),
        }
    }
}

/// Replaces negative entries by 0, keeping positions.
pub fn clip(xs: &[Rational64]) -> Vec<Rational64> {
    xs.iter().map(|x| (*x).max(Rational64::zero())).collect()
}

/// `⟨T − ρ_n + pad(ρ_m)⟩_m`: the predicted exponents of the restriction to
/// `GL(m)`, in positional order.
pub fn restrict_prediction(
    t: &ExponentVector,
    m: usize,
    mode: ClipMode,
) -> Result<Vec<Rational64>, GLError> {
    let n = t.len();
    if m == 0 || m > n {
        return Err(GLError::BadRank { m, n });
    }
    let v: Vec<Rational64> =
        t.0.iter()
            .zip(rho(n))
            .zip(pad_rho(m, n))
            .map(|((x, r), s)| x - r + s)
            .collect();
    let kept: Vec<Rational64> = match mode {
        ClipMode::Outer => {
            let top = m.div_ceil(2);
            let bottom = m / 2;
            v[..top].iter().chain(&v[n - bottom..]).copied().collect()
        }
        ClipMode::Top => v[..m].to_vec(),
    };
    Ok(clip(&kept))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionReport {
    pub t: ExponentVector,
    pub outer: Vec<Rational64>,
    pub top: Vec<Rational64>,
}

impl RestrictionReport {
    pub fn mode_disagreement(&self) -> bool {
        self.outer != self.top
    }

    pub fn prediction(&self, mode: ClipMode) -> &[Rational64] {
        match mode {
            ClipMode::Outer => &self.outer,
            ClipMode::Top => &self.top,
        }
    }
}

/// Both restriction modes for `rep` restricted to `GL(m)`.
pub fn restrict(rep: &GLRep, m: usize) -> Result<RestrictionReport, GLError> {
    let t = t_matrix(rep);
    let outer = restrict_prediction(&t, m, ClipMode::Outer)?;
    let top = restrict_prediction(&t, m, ClipMode::Top)?;
    Ok(RestrictionReport { t, outer, top })
}

/// Real rank one groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankOne {
    /// `SO(n, 1)`.
    SO(u32),
    /// `SU(n, 1)`.
    SU(u32),
}

/// Half-sum `ρ` of the positive restricted roots, as a multiple of the
/// fundamental weight.
pub fn rho_rank1(group: RankOne) -> Rational64 {
    match group {
        RankOne::SO(n) => Rational64::new(n as i64 - 1, 2),
        RankOne::SU(n) => Rational64::from_integer(n as i64),
    }
}

/// The gap `ε` inherited by `G` from a subgroup `H` satisfying the gap
/// hypothesis with `ε`: `ρ_G − ρ_H + ε`.
pub fn hyp_transfer(rho_g: Rational64, rho_h: Rational64, eps: Rational64) -> Rational64 {
    rho_g - rho_h + eps
}

/// The gap for `SU(n, 1)` obtained by transferring the `SU(2, 1)` gap `4/5`
/// one rank at a time.
pub fn su_hyp_chain(n: u32) -> Rational64 {
    assert!(n >= 2);
    let mut eps = Rational64::new(4, 5);
    for k in 3..=n {
        eps = hyp_transfer(
            rho_rank1(RankOne::SU(k)),
            rho_rank1(RankOne::SU(k - 1)),
            eps,
        );
    }
    eps
}

/// `2ρ_{L_0} − ρ|_a > ε`, strictly.
pub fn rel_threshold_met(rho_l0: Rational64, rho_restriction: Rational64, eps: Rational64) -> bool {
    Rational64::from_integer(2) * rho_l0 - rho_restriction > eps
}

/// The diagonal restriction of a tensor product of two complementary series
/// of `SL(2, ℝ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepkaOutcome {
    Tempered,
    Complementary(Rational64),
}

/// `π_r ⊗ π_s` is tempered iff `r + s ≤ 1`; otherwise `π_{r+s−1}` occurs
/// discretely.
pub fn repka_diagonal(r: Rational64, s: Rational64) -> Result<RepkaOutcome, GLError> {
    for (name, value) in [("r", r), ("s", s)] {
        if !value.is_positive() || value >= Rational64::one() {
            return Err(GLError::DomainError { name, value });
        }
    }
    let t = r + s - Rational64::one();
    Ok(if t.is_positive() {
        RepkaOutcome::Complementary(t)
    } else {
        RepkaOutcome::Tempered
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn ints(xs: &[i64]) -> Vec<Rational64> {
        xs.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    #[test]
    fn t_matrix_examples() {
        let t = t_matrix(&"u(1,3)".parse().unwrap());
        assert_eq!(t.0, ints(&[1, 0, -1]));
        let t = t_matrix(&"u(2,2)".parse().unwrap());
        assert_eq!(t.0, vec![q(1, 2), q(1, 2), q(-1, 2), q(-1, 2)]);
        for n in 1..8 {
            assert_eq!(t_matrix(&GLRep::trivial(n)).0, rho(n as usize));
        }
        let t = t_matrix(&"u(1,1)[1/3]".parse().unwrap());
        assert_eq!(t.0, vec![q(1, 3), q(-1, 3)]);
    }

    #[test]
    fn parsing() {
        let rep: GLRep = "u(1,3) + u(2,2)[1/3]".parse().unwrap();
        assert_eq!(rep.n(), 3 + 8);
        assert_eq!(rep.to_string(), "u(1,3)+u(2,2)[1/3]");
        assert!("u(3,1)".parse::<GLRep>().is_err());
        assert!("u(1,1)[1/2]".parse::<GLRep>().is_err());
        assert!("u(1,0)".parse::<GLRep>().is_err());
        assert!("v(1,1)".parse::<GLRep>().is_err());
        assert!("".parse::<GLRep>().is_err());
    }

    #[test]
    fn pad_rho_layout() {
        assert_eq!(pad_rho(3, 5), ints(&[1, 0, 0, 0, -1]));
        assert_eq!(pad_rho(2, 4), vec![q(1, 2), q(0, 1), q(0, 1), q(-1, 2)]);
        assert_eq!(pad_rho(4, 4), rho(4));
    }

    #[test]
    fn restriction_examples() {
        for n in 1..7usize {
            let t = t_matrix(&GLRep::trivial(n as u32));
            for m in 1..=n {
                let pred = restrict_prediction(&t, m, ClipMode::Outer).unwrap();
                assert_eq!(pred, clip(&rho(m)), "n={n} m={m}");
                assert_eq!(pred[0], q(m as i64 - 1, 2));
            }
            let full = restrict_prediction(&t, n, ClipMode::Outer).unwrap();
            assert_eq!(full, clip(&t.0));
        }
        let t = t_matrix(&"u(1,1)[1/3]".parse().unwrap());
        assert_eq!(
            restrict_prediction(&t, 1, ClipMode::Outer).unwrap(),
            ints(&[0])
        );
        assert_eq!(
            restrict_prediction(&t, 3, ClipMode::Outer),
            Err(GLError::BadRank { m: 3, n: 2 })
        );
    }

    #[test]
    fn modes_can_disagree() {
        let rep: GLRep = "u(1,3)+u(1,1)".parse().unwrap();
        let report = restrict(&rep, 2).unwrap();
        assert_eq!(report.t.0, ints(&[1, 0, 0, -1]));
        // V = (0, -1/2, 1/2, 0).
        assert_eq!(report.outer, ints(&[0, 0]));
        assert_eq!(report.top, ints(&[0, 0]));
        assert!(!report.mode_disagreement());
        let rep: GLRep = "u(2,2)".parse().unwrap();
        let report = restrict(&rep, 2).unwrap();
        // V = (1/2, 1/2, -1/2, -1/2) - (3/2, 1/2, -1/2, -3/2) + (1/2, 0, 0, -1/2).
        assert_eq!(report.outer, vec![q(0, 1), q(1, 2)]);
        assert_eq!(report.top, vec![q(0, 1), q(0, 1)]);
        assert!(report.mode_disagreement());
    }

    #[test]
    fn rank_one_values() {
        assert_eq!(rho_rank1(RankOne::SU(2)), q(2, 1));
        assert_eq!(rho_rank1(RankOne::SO(3)), q(1, 1));
        assert_eq!(rho_rank1(RankOne::SU(1)), q(1, 1));
    }

    #[test]
    fn hyp_examples() {
        for n in 2..=50u32 {
            let direct = hyp_transfer(
                rho_rank1(RankOne::SU(n)),
                rho_rank1(RankOne::SU(2)),
                q(4, 5),
            );
            assert_eq!(direct, q(5 * n as i64 - 6, 5));
            assert_eq!(su_hyp_chain(n), direct);
        }
        assert_eq!(hyp_transfer(q(3, 2), q(3, 2), q(0, 1)), q(0, 1));
        let so = hyp_transfer(
            rho_rank1(RankOne::SO(4)),
            rho_rank1(RankOne::SO(3)),
            q(1, 5),
        );
        assert_eq!(so, q(3, 2) - q(1, 1) + q(1, 5));
    }

    #[test]
    fn rel_threshold_examples() {
        // SU(p,q) ⊃ SU(1,q): 2q − (p+q−1) > ε.
        for (p, qq) in [(2, 5), (3, 3), (4, 2)] {
            let lhs = q(qq - p + 1, 1);
            assert_eq!(
                rel_threshold_met(q(qq, 1), q(p + qq - 1, 1), q(1, 2)),
                lhs > q(1, 2)
            );
        }
        for n in 2..=50 {
            assert!(rel_threshold_met(q(n, 1), q(n + 1, 1), q(5 * n - 6, 5)));
        }
        assert!(!rel_threshold_met(q(3, 1), q(4, 1), q(2, 1)));
    }

    #[test]
    fn repka_examples() {
        assert_eq!(
            repka_diagonal(q(3, 5), q(3, 5)).unwrap(),
            RepkaOutcome::Complementary(q(1, 5))
        );
        assert_eq!(
            repka_diagonal(q(2, 5), q(2, 5)).unwrap(),
            RepkaOutcome::Tempered
        );
        assert_eq!(
            repka_diagonal(q(1, 2), q(1, 2)).unwrap(),
            RepkaOutcome::Tempered
        );
        assert!(matches!(
            repka_diagonal(q(0, 1), q(1, 2)),
            Err(GLError::DomainError { name: "r", .. })
        ));
        assert!(repka_diagonal(q(1, 2), q(1, 1)).is_err());
    }
}
