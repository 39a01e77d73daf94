use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::Poly;
use crate::error::{Error, Result};

/// `numerator / denominator` with integer polynomials and `denominator(0) = 1`,
/// so the power series has integer coefficients obeying the linear
/// recurrence read off the denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    num: Poly,
    den: Poly,
}

impl RationalGf {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        let c = den.coeff(0);
        if c.is_one() {
            Ok(RationalGf { num, den })
        } else if (-&c).is_one() {
            Ok(RationalGf {
                num: -&num,
                den: -&den,
            })
        } else {
            Err(Error::NonUnitDenominator)
        }
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        RationalGf::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// Unbounded coefficient stream.
    pub fn coefficients(&self) -> Coefficients {
        Coefficients {
            num: self.num.clone(),
            recurrence: self.den.sparse().into_iter().skip(1).collect(),
            history: VecDeque::new(),
            depth: self.den.degree(),
            n: 0,
        }
    }

    /// Coefficients of `z^0 ..= z^order`.
    pub fn series(&self, order: usize) -> Vec<BigInt> {
        self.coefficients().take(order + 1).collect()
    }

    pub fn coefficient(&self, n: usize) -> BigInt {
        self.coefficients().nth(n).expect("stream is unbounded")
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> RationalGf {
        RationalGf {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn derivative(&self) -> RationalGf {
        RationalGf {
            num: &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative()),
            den: &self.den * &self.den,
        }
    }
}

impl Add for &RationalGf {
    type Output = RationalGf;

    fn add(self, other: &RationalGf) -> RationalGf {
        if self.den == other.den {
            return RationalGf {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        RationalGf {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }
}

impl Sub for &RationalGf {
    type Output = RationalGf;

    fn sub(self, other: &RationalGf) -> RationalGf {
        self + &(-other)
    }
}

impl Neg for &RationalGf {
    type Output = RationalGf;

    fn neg(self) -> RationalGf {
        RationalGf {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalGf {
    type Output = RationalGf;

    fn mul(self, other: &RationalGf) -> RationalGf {
        RationalGf {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Iterator over the coefficients of a [`RationalGf`].
#[derive(Debug, Clone)]
pub struct Coefficients {
    num: Poly,
    recurrence: Vec<(usize, BigInt)>,
    // Most recent coefficient at the front.
    history: VecDeque<BigInt>,
    depth: usize,
    n: usize,
}

impl Iterator for Coefficients {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let mut v = self.num.coeff(self.n);
        for (k, d) in &self.recurrence {
            match self.history.get(k - 1) {
                Some(prev) => v -= d * prev,
                None => break,
            }
        }
        self.n += 1;
        if self.depth > 0 {
            self.history.push_front(v.clone());
            self.history.truncate(self.depth);
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn elena_series() {
        let e = RationalGf::from_ints(&[0, 1, -2], &[1, -3, 1]).unwrap();
        assert_eq!(e.series(9), ints(&[0, 1, 1, 2, 5, 13, 34, 89, 233, 610]));
    }

    #[test]
    fn reciprocal_of_denominator() {
        let g = RationalGf::from_ints(&[1], &[1, -3, 1]).unwrap();
        assert_eq!(g.series(4), ints(&[1, 3, 8, 21, 55]));
    }

    #[test]
    fn with_empty_path() {
        let g = RationalGf::from_ints(&[1, -2], &[1, -3, 1]).unwrap();
        assert_eq!(g.series(3), ints(&[1, 1, 2, 5]));
    }

    #[test]
    fn normalization() {
        let g = RationalGf::from_ints(&[1], &[-1, 1]).unwrap();
        assert_eq!(g.series(3), ints(&[-1, -1, -1, -1]));
        assert_eq!(
            RationalGf::from_ints(&[1], &[2, 1]),
            Err(Error::NonUnitDenominator)
        );
    }

    #[test]
    fn polynomial_has_finite_series() {
        let g = RationalGf::from_ints(&[3, 0, 2], &[1]).unwrap();
        assert_eq!(g.series(4), ints(&[3, 0, 2, 0, 0]));
    }

    #[test]
    fn sum_and_product() {
        let a = RationalGf::from_ints(&[1], &[1, -1]).unwrap();
        let b = RationalGf::from_ints(&[1], &[1, 1]).unwrap();
        // 1/(1-z) + 1/(1+z) = 2/(1-z^2)
        assert_eq!((&a + &b).series(5), ints(&[2, 0, 2, 0, 2, 0]));
        // 1/(1-z)^2
        assert_eq!((&a * &a).series(4), ints(&[1, 2, 3, 4, 5]));
        assert_eq!((&a - &a).series(3), ints(&[0, 0, 0, 0]));
        assert_eq!(a.shift(2).series(3), ints(&[0, 0, 1, 1]));
    }
}
