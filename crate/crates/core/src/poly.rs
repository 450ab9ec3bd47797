//! Dense polynomials in one variable `t` with nonnegative integer coefficients.

use std::fmt;
use std::ops::Mul;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::monomial(0, 1)
    }

    pub fn monomial(degree: usize, coeff: u64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Coefficients indexed by degree, without trailing zeros.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Substitution `t -> t^k`.
    pub fn stretch(&self, k: usize) -> Poly {
        assert!(k >= 1);
        let Some(deg) = self.degree() else {
            return Poly::zero();
        };
        let mut coeffs = vec![0; deg * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Poly { coeffs }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }

    /// True when the coefficients read the same from both ends once the
    /// leading `t^low` factor is stripped.
    pub fn is_palindromic(&self) -> bool {
        let Some(lo) = self.low_degree() else {
            return true;
        };
        let c = &self.coeffs[lo..];
        c.iter().eq(c.iter().rev())
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> Vec<(usize, u64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (deg, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Gaussian binomial `[n choose k]` in the variable `t`.
///
/// Uses `[n, k] = [n-1, k-1] + t^k [n-1, k]`.
pub fn gaussian_binomial(n: u32, k: u32) -> Poly {
    if k > n {
        return Poly::zero();
    }
    let k = k.min(n - k) as usize;
    // row[j] holds [i choose j] for the current i.
    let mut row: Vec<Poly> = vec![Poly::one()];
    for i in 1..=n as usize {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=i.min(k) {
            let left = if j > 0 {
                row[j - 1].clone()
            } else {
                Poly::zero()
            };
            let right = row.get(j).map_or_else(Poly::zero, |p| p.shift(j));
            next.push(left.add(&right));
        }
        row = next;
    }
    row.swap_remove(k)
}
