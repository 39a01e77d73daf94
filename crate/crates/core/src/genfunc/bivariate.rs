use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// Power series in `z` and a second variable (`u` or `w`), truncated to the
/// rectangle `z^0..=z^nz`, `w^0..=w^nw`.
///
/// Every operation here produces exact coefficients inside the rectangle:
/// all exponents are nonnegative, so a target coefficient only ever draws on
/// source coefficients that are themselves inside the rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    nz: usize,
    nw: usize,
    // rows indexed by z-degree
    grid: Vec<Vec<BigInt>>,
}

/// First grid position where two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub z_degree: usize,
    pub w_degree: usize,
    pub left: BigInt,
    pub right: BigInt,
}

impl BivariateSeries {
    pub fn zero(nz: usize, nw: usize) -> Self {
        BivariateSeries {
            nz,
            nw,
            grid: vec![vec![BigInt::zero(); nw + 1]; nz + 1],
        }
    }

    /// A series in `z` alone, placed at `w^0`.
    pub fn from_z_series(coeffs: &[BigInt], nz: usize, nw: usize) -> Self {
        let mut s = BivariateSeries::zero(nz, nw);
        for (i, c) in coeffs.iter().enumerate().take(nz + 1) {
            s.grid[i][0] = c.clone();
        }
        s
    }

    /// Build from `rows[h]` = coefficients in `z` of the `w^h` part.
    pub fn from_w_rows(rows: &[Vec<BigInt>], nz: usize, nw: usize) -> Self {
        let mut s = BivariateSeries::zero(nz, nw);
        for (j, row) in rows.iter().enumerate().take(nw + 1) {
            for (i, c) in row.iter().enumerate().take(nz + 1) {
                s.grid[i][j] = c.clone();
            }
        }
        s
    }

    /// `c * z^i * w^j`
    pub fn monomial(c: i64, i: usize, j: usize, nz: usize, nw: usize) -> Self {
        let mut s = BivariateSeries::zero(nz, nw);
        if i <= nz && j <= nw {
            s.grid[i][j] = BigInt::from(c);
        }
        s
    }

    pub fn nz(&self) -> usize {
        self.nz
    }

    pub fn nw(&self) -> usize {
        self.nw
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.grid[i][j]
    }

    pub fn add_to(&mut self, i: usize, j: usize, delta: &BigInt) {
        self.grid[i][j] += delta;
    }

    /// Multiply by a series in `z` alone.
    pub fn scale_by_z_series(&self, coeffs: &[BigInt]) -> Self {
        let mut out = BivariateSeries::zero(self.nz, self.nw);
        for (k, c) in coeffs.iter().enumerate().take(self.nz + 1) {
            if c.is_zero() {
                continue;
            }
            for i in 0..=self.nz - k {
                for j in 0..=self.nw {
                    let v = &self.grid[i][j];
                    if !v.is_zero() {
                        out.grid[i + k][j] += c * v;
                    }
                }
            }
        }
        out
    }

    /// `f(z, w) -> f(z*w, w)`
    pub fn substitute_z_by_zw(&self) -> Self {
        let mut out = BivariateSeries::zero(self.nz, self.nw);
        for i in 0..=self.nz {
            for j in i..=self.nw {
                out.grid[i][j] = self.grid[i][j - i].clone();
            }
        }
        out
    }

    /// `f(z, w) -> f(z, z*w)`
    pub fn substitute_w_by_zw(&self) -> Self {
        let mut out = BivariateSeries::zero(self.nz, self.nw);
        for i in 0..=self.nz {
            for j in 0..=self.nw.min(i) {
                out.grid[i][j] = self.grid[i - j][j].clone();
            }
        }
        out
    }

    /// `f(z, 1)`; exact only when the rectangle holds every `w` power.
    pub fn at_w_one(&self) -> Vec<BigInt> {
        self.grid.iter().map(|row| row.iter().sum()).collect()
    }

    /// `d/dw f(z, w)` at `w = 1`, with the same caveat as [`Self::at_w_one`].
    pub fn dw_at_w_one(&self) -> Vec<BigInt> {
        self.grid
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, c)| c * BigInt::from(j))
                    .sum()
            })
            .collect()
    }

    /// `f(z, z)` to z-order `nz`; exact when `nw >= nz`.
    pub fn at_w_equals_z(&self) -> Vec<BigInt> {
        (0..=self.nz)
            .map(|n| (0..=n.min(self.nw)).map(|j| &self.grid[n - j][j]).sum())
            .collect()
    }

    pub fn first_mismatch(&self, other: &BivariateSeries) -> Option<Mismatch> {
        let nz = self.nz.min(other.nz);
        let nw = self.nw.min(other.nw);
        for i in 0..=nz {
            for j in 0..=nw {
                if self.grid[i][j] != other.grid[i][j] {
                    return Some(Mismatch {
                        z_degree: i,
                        w_degree: j,
                        left: self.grid[i][j].clone(),
                        right: other.grid[i][j].clone(),
                    });
                }
            }
        }
        None
    }

    fn zip_with(&self, other: &BivariateSeries, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        assert_eq!(
            (self.nz, self.nw),
            (other.nz, other.nw),
            "truncation orders differ"
        );
        BivariateSeries {
            nz: self.nz,
            nw: self.nw,
            grid: self
                .grid
                .iter()
                .zip(&other.grid)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
                .collect(),
        }
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        assert_eq!(
            (self.nz, self.nw),
            (rhs.nz, rhs.nw),
            "truncation orders differ"
        );
        let (nz, nw) = (self.nz, self.nw);
        let mut out = BivariateSeries::zero(nz, nw);
        for i1 in 0..=nz {
            for j1 in 0..=nw {
                let a = &self.grid[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=nz - i1 {
                    for j2 in 0..=nw - j1 {
                        let b = &rhs.grid[i2][j2];
                        if !b.is_zero() {
                            out.grid[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}
