use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `z` with integer coefficients, lowest degree first.
/// Trailing zeros are trimmed so equal polynomials compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Poly::from_ints(&[1])
    }

    /// `c * z^k`
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Poly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::default();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Nonzero terms as `(degree, coefficient)`.
    pub(crate) fn sparse(&self) -> Vec<(usize, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}")?;
                    }
                    f.write_str("z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Solve `den * out = num` as power series to order `order`, where `den` is
/// given sparsely and has constant term 1.
pub(crate) fn divide_series(num: &[BigInt], den: &[(usize, BigInt)], order: usize) -> Vec<BigInt> {
    debug_assert!(den.first().is_some_and(|(k, c)| *k == 0 && c.is_one()));
    let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut v = num.get(n).cloned().unwrap_or_default();
        for (k, d) in den.iter().skip(1) {
            if *k > n {
                break;
            }
            v -= d * &out[n - k];
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let d = Poly::from_ints(&[1, -3, 1]);
        let sq = &d * &d;
        assert_eq!(sq, Poly::from_ints(&[1, -6, 11, -6, 1]));
        assert_eq!(&sq - &sq, Poly::default());
        assert_eq!(&d + &Poly::monomial(3, 1), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(d.derivative(), Poly::from_ints(&[-3, 2]));
        assert_eq!(d.shift(2), Poly::from_ints(&[0, 0, 1, -3, 1]));
        assert_eq!(d.pow(3), &sq * &d);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[1, -3, 1]).to_string(), "1 - 3z + z^2");
        assert_eq!(Poly::from_ints(&[0, -1, 0, 5]).to_string(), "-z + 5z^3");
        assert_eq!(Poly::default().to_string(), "0");
    }

    #[test]
    fn series_division() {
        let den = Poly::from_ints(&[1, -3, 1]).sparse();
        let s = divide_series(&[BigInt::one()], &den, 4);
        let want: Vec<BigInt> = [1, 3, 8, 21, 55].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(s, want);
    }
}
