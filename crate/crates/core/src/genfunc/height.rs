//! Height-restricted Elenas.
//!
//! `E_h` counts Elenas of height at most `h` (heights count nodes, so
//! `E_0 = 0` and `E_1 = z`), built by
//! `E_h = z + z(1-z)/(1-2z+z^h) E_{h-1}`. `U_h = E - E_h` counts those of
//! height greater than `h`; summing `U_h` over `h` gives total height.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::catalog::{elena_gf, DENOMINATOR};
use super::poly::divide_series;
use super::rational::RationalGf;
use crate::error::{Error, Result};

/// `1 - 2z + z^h` in sparse form, `h >= 1`.
fn height_denominator(h: usize) -> Vec<(usize, BigInt)> {
    assert!(h >= 1);
    if h == 1 {
        vec![(0, BigInt::one()), (1, BigInt::from(-1))]
    } else {
        vec![
            (0, BigInt::one()),
            (1, BigInt::from(-2)),
            (h, BigInt::one()),
        ]
    }
}

/// `z(1-z) f(z)` truncated to `order`.
fn times_z_one_minus_z(f: &[BigInt], order: usize) -> Vec<BigInt> {
    (0..=order)
        .map(|n| {
            let a = n.checked_sub(1).and_then(|k| f.get(k));
            let b = n.checked_sub(2).and_then(|k| f.get(k));
            match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                _ => BigInt::zero(),
            }
        })
        .collect()
}

/// Successive `E_0, E_1, E_2, ...`, each truncated to a fixed order.
#[derive(Debug, Clone)]
pub struct HeightLadder {
    order: usize,
    h: usize,
    current: Vec<BigInt>,
}

impl HeightLadder {
    pub fn new(order: usize) -> Self {
        HeightLadder {
            order,
            h: 0,
            current: vec![BigInt::zero(); order + 1],
        }
    }
}

impl Iterator for HeightLadder {
    type Item = (usize, Vec<BigInt>);

    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.h, self.current.clone());
        self.h += 1;
        let shifted = times_z_one_minus_z(&self.current, self.order);
        let mut next = divide_series(&shifted, &height_denominator(self.h), self.order);
        if self.order >= 1 {
            next[1] += 1;
        }
        self.current = next;
        Some(out)
    }
}

pub fn eh_series(h: usize, order: usize) -> Vec<BigInt> {
    HeightLadder::new(order)
        .nth(h)
        .map(|(_, s)| s)
        .expect("ladder is unbounded")
}

pub fn uh_by_difference(h: usize, order: usize) -> Vec<BigInt> {
    let e = elena_gf().series(order);
    e.iter()
        .zip(eh_series(h, order))
        .map(|(a, b)| a - b)
        .collect()
}

/// `U_0 = E`, then `(1-2z+z^h) U_h = (1-z) z^{h+2}/(1-3z+z^2) + z(1-z) U_{h-1}`.
pub fn uh_by_recursion(h: usize, order: usize) -> Vec<BigInt> {
    let inverse = RationalGf::from_ints(&[1], &DENOMINATOR)
        .expect("unit constant term")
        .series(order);
    let mut u = elena_gf().series(order);
    for k in 1..=h {
        let mut rhs = times_z_one_minus_z(&u, order);
        for n in (k + 2)..=order {
            rhs[n] += &inverse[n - k - 2];
            if n >= k + 3 {
                rhs[n] -= &inverse[n - k - 3];
            }
        }
        u = divide_series(&rhs, &height_denominator(k), order);
    }
    u
}

/// `U_h` to `order`, computed by both routes; they must agree.
pub fn uh_series(h: usize, order: usize) -> Result<Vec<BigInt>> {
    let direct = uh_by_difference(h, order);
    let recursive = uh_by_recursion(h, order);
    if let Some(n) = (0..=order).find(|&n| direct[n] != recursive[n]) {
        return Err(Error::IdentityViolated {
            identity: "U_h difference recursion",
            location: format!("h={h}, z^{n}"),
            expected: direct[n].to_string(),
            found: recursive[n].to_string(),
        });
    }
    Ok(direct)
}

/// `U_0, ..., U_hmax` to `order`, as `E - E_h`.
pub fn uh_rows(hmax: usize, order: usize) -> Vec<Vec<BigInt>> {
    let e = elena_gf().series(order);
    HeightLadder::new(order)
        .take(hmax + 1)
        .map(|(_, eh)| e.iter().zip(eh).map(|(a, b)| a - b).collect())
        .collect()
}

/// Coefficient `n` is the total height over all Elenas of size `n`.
pub fn height_total_series(order: usize) -> Vec<BigInt> {
    let e = elena_gf().series(order);
    let mut totals = vec![BigInt::zero(); order + 1];
    // [z^n] U_h vanishes once h >= n.
    for (_, eh) in HeightLadder::new(order).take(order.max(1)) {
        for n in 0..=order {
            let diff = &e[n] - &eh[n];
            if !diff.is_zero() {
                totals[n] += diff;
            }
        }
    }
    totals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn low_heights() {
        assert_eq!(eh_series(0, 5), ints(&[0, 0, 0, 0, 0, 0]));
        assert_eq!(eh_series(1, 5), ints(&[0, 1, 0, 0, 0, 0]));
        assert_eq!(eh_series(2, 6), ints(&[0, 1, 1, 1, 1, 1, 1]));
        assert_eq!(eh_series(3, 4)[4], BigInt::from(4));
    }

    #[test]
    fn saturates_at_full_series() {
        let e = elena_gf().series(12);
        for h in 0..=13 {
            let eh = eh_series(h, 12);
            for n in 0..=12 {
                assert!(eh[n] <= e[n]);
                if h >= n {
                    assert_eq!(eh[n], e[n], "h={h} n={n}");
                }
            }
        }
    }

    #[test]
    fn monotone_in_height() {
        let ladder: Vec<_> = HeightLadder::new(15).take(16).map(|(_, s)| s).collect();
        for pair in ladder.windows(2) {
            assert!(pair[0].iter().zip(&pair[1]).all(|(a, b)| a <= b));
        }
    }

    #[test]
    fn two_routes_agree() {
        for h in 0..12 {
            assert!(uh_series(h, 25).is_ok(), "h={h}");
        }
        assert_eq!(uh_series(0, 10).unwrap(), elena_gf().series(10));
        assert_eq!(uh_series(3, 4).unwrap()[4], BigInt::one());
    }

    #[test]
    fn totals() {
        assert_eq!(height_total_series(5), ints(&[0, 1, 2, 5, 15, 45]));
        assert_eq!(height_total_series(0), ints(&[0]));
    }
}
