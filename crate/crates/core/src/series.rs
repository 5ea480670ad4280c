//! Exact power series in one variable `t`, truncated at a cutoff degree.
//!
//! Coefficients are arbitrary-precision integers. Binary operations on
//! series with different cutoffs truncate to the smaller cutoff; nothing is
//! ever implicitly extended.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    /// `coeffs[k]` is the coefficient of `t^k`; length is `cutoff + 1`.
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(cutoff: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); cutoff + 1],
        }
    }

    pub fn one(cutoff: usize) -> Self {
        Self::monomial(0, 1, cutoff)
    }

    /// `c * t^degree`, or zero if `degree > cutoff`.
    pub fn monomial(degree: usize, c: impl Into<BigInt>, cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        if degree <= cutoff {
            s.coeffs[degree] = c.into();
        }
        s
    }

    /// Builds a series from explicit coefficients; the cutoff is `len - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    /// Builds a series with the given cutoff, padding with zeros or dropping
    /// coefficients beyond the cutoff.
    pub fn from_coeffs_with_cutoff<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>, cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        for (k, c) in coeffs.into_iter().enumerate().take(cutoff + 1) {
            s.coeffs[k] = c.into();
        }
        s
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, cutoff: usize) -> Self {
        let cutoff = cutoff.min(self.cutoff());
        TruncatedSeries {
            coeffs: self.coeffs[..=cutoff].to_vec(),
        }
    }

    /// Adds `other * t^shift` in place. Terms pushed past the cutoff are dropped.
    pub fn add_shifted(&mut self, other: &TruncatedSeries, shift: usize) {
        let d = self.cutoff();
        if shift > d {
            return;
        }
        let end = (d - shift).min(other.cutoff());
        for k in 0..=end {
            self.coeffs[k + shift] += &other.coeffs[k];
        }
    }

    /// Multiplies in place by `1 - t^k`.
    pub fn mul_one_minus_t_pow(&mut self, k: usize) {
        assert!(k > 0);
        for i in (k..self.coeffs.len()).rev() {
            let prev = self.coeffs[i - k].clone();
            self.coeffs[i] -= prev;
        }
    }

    /// Multiplies in place by `1/(1 - t^k)`, i.e. by the geometric series in `t^k`.
    pub fn div_one_minus_t_pow(&mut self, k: usize) {
        assert!(k > 0);
        for i in k..self.coeffs.len() {
            let prev = self.coeffs[i - k].clone();
            self.coeffs[i] += prev;
        }
    }

    /// Coefficient-wise equality on degrees `0..=degree`.
    pub fn equal_up_to(&self, other: &TruncatedSeries, degree: usize) -> Result<bool> {
        if degree > self.cutoff() || degree > other.cutoff() {
            return Err(Error::validation(format!(
                "comparison degree {degree} exceeds a cutoff ({} / {})",
                self.cutoff(),
                other.cutoff()
            )));
        }
        Ok(self.coeffs[..=degree] == other.coeffs[..=degree])
    }

    /// Lowest degree at which the two series differ, up to the common cutoff.
    pub fn first_mismatch(&self, other: &TruncatedSeries) -> Option<usize> {
        let d = self.cutoff().min(other.cutoff());
        (0..=d).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// Renders the series as CSV: a `k,c_k` header followed by one line per
    /// coefficient, zeros included.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,c_k\n");
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{k},{c}\n"));
        }
        out
    }
}

/// Cauchy product truncated at the smaller cutoff.
pub fn ts_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let d = a.cutoff().min(b.cutoff());
    let mut out = TruncatedSeries::zero(d);
    for (i, ai) in a.coeffs[..=d].iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=d - i].iter().enumerate() {
            if !bj.is_zero() {
                out.coeffs[i + j] += ai * bj;
            }
        }
    }
    out
}

pub fn ts_equal_up_to(a: &TruncatedSeries, b: &TruncatedSeries, degree: usize) -> Result<bool> {
    a.equal_up_to(b, degree)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let d = self.cutoff().min(rhs.cutoff());
        TruncatedSeries {
            coeffs: (0..=d).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let d = self.cutoff().min(rhs.cutoff());
        TruncatedSeries {
            coeffs: (0..=d).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        ts_mul(self, rhs)
    }
}

/// `c_0 + c_1 t + c_2 t^2 + … + O(t^{D+1})`, zero terms omitted.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag} t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag} t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.cutoff() + 1)
    }
}

/// `numerator / ∏ (1 - t^k)` with an integer polynomial numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalForm {
    numerator: Vec<(usize, i64)>,
    denominator_factors: Vec<usize>,
}

impl RationalForm {
    /// `numerator` is a list of `(degree, coefficient)` terms; repeated
    /// degrees are summed. Each denominator factor `k` stands for `1 - t^k`.
    pub fn new(numerator: Vec<(usize, i64)>, denominator_factors: Vec<usize>) -> Result<Self> {
        if denominator_factors.contains(&0) {
            return Err(Error::validation("denominator factor 1 - t^0 vanishes"));
        }
        let mut merged: Vec<(usize, i64)> = Vec::new();
        for (deg, c) in numerator {
            match merged.iter_mut().find(|(d, _)| *d == deg) {
                Some(slot) => slot.1 += c,
                None => merged.push((deg, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        merged.sort_unstable();
        if merged.is_empty() {
            return Err(Error::validation("rational form numerator is zero"));
        }
        Ok(RationalForm {
            numerator: merged,
            denominator_factors,
        })
    }

    pub fn numerator(&self) -> &[(usize, i64)] {
        &self.numerator
    }

    pub fn denominator_factors(&self) -> &[usize] {
        &self.denominator_factors
    }

    pub fn expand(&self, cutoff: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(cutoff);
        for &(deg, c) in &self.numerator {
            if deg <= cutoff {
                s.coeffs[deg] += c;
            }
        }
        for &k in &self.denominator_factors {
            s.div_one_minus_t_pow(k);
        }
        s
    }
}

pub fn expand_rational(f: &RationalForm, cutoff: usize) -> TruncatedSeries {
    f.expand(cutoff)
}
