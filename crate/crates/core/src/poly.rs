//! Integer Laurent polynomials in `t` and Gaussian binomials.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `Σ c_e t^e` with `e ∈ ℤ`. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c·t^e`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_pairs<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficients `[c_0, c_step, c_{2·step}, …]` starting at `t^0`.
    pub fn from_dense(step: i64, coeffs: &[i64]) -> Self {
        Self::from_pairs(coeffs.iter().enumerate().map(|(n, &c)| (n as i64 * step, c)))
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn to_pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `t^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + s, c.clone())).collect(),
        }
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * n)).collect(),
        }
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_palindromic(&self, center: i64) -> bool {
        self.terms
            .iter()
            .all(|(&e, c)| self.terms.get(&(2 * center - e)) == Some(c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }
}

pub fn poly_add(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a + b
}

pub fn poly_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a * b
}

pub fn poly_shift(a: &LaurentPoly, s: i64) -> LaurentPoly {
    a.shift(s)
}

pub fn poly_scale(a: &LaurentPoly, n: &BigInt) -> LaurentPoly {
    a.scale(n)
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `1 + 2*t^2 + t^4`; negative exponents print as `t^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The Gaussian binomial `[n choose k]` in `q = t^step`, by the Pascal
/// recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`. Zero outside `0 ≤ k ≤ n`.
pub fn gaussian_binomial(n: i64, k: i64, step: u32) -> LaurentPoly {
    if k < 0 || n < 0 || k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    let step = step as usize;
    // Dense coefficient rows over q-degree; row[j] = [m choose j].
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let width = k.min(m);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(width + 1);
        for j in 0..=width {
            let len = j * (m - j) + 1;
            let mut coeffs = vec![BigInt::zero(); len];
            if j > 0 {
                for (d, c) in row[j - 1].iter().enumerate() {
                    coeffs[d] += c;
                }
            }
            if j < row.len() && j < m {
                for (d, c) in row[j].iter().enumerate() {
                    coeffs[d + j] += c;
                }
            }
            next.push(coeffs);
        }
        row = next;
    }
    LaurentPoly::from_pairs(
        row[k]
            .iter()
            .enumerate()
            .map(|(d, c)| ((d * step) as i64, c.clone())),
    )
}

/// Poincaré polynomial of `Gr_a(C^b)`.
pub fn grassmannian_poincare(a: i64, b: i64) -> LaurentPoly {
    gaussian_binomial(b, a, 2)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
