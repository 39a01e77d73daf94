//! Exact checks of the bivariate functional equations for the descendant
//! sum and for height.

use num_bigint::BigInt;
use num_traits::One;

use super::bivariate::BivariateSeries;
use super::catalog::{elena_gf, DENOMINATOR};
use super::height::uh_rows;
use super::rational::RationalGf;
use crate::error::{Error, Result};

/// Largest z-order for which descendant distributions are handled.
pub const DEFAULT_BIVARIATE_LIMIT: usize = 10;

/// u-truncation that holds every descendant sum up to size `nz`.
pub fn u_order(nz: usize) -> usize {
    nz * (nz + 1) / 2
}

fn check_bivariate_limit(nz: usize) -> Result<()> {
    if nz > DEFAULT_BIVARIATE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "bivariate z-order",
            requested: nz,
            limit: DEFAULT_BIVARIATE_LIMIT,
        });
    }
    Ok(())
}

fn series(num: &[i64], den: &[i64], order: usize) -> Vec<BigInt> {
    RationalGf::from_ints(num, den)
        .expect("unit constant term")
        .series(order)
}

fn violated(identity: &'static str, location: String, expected: &BigInt, found: &BigInt) -> Error {
    Error::IdentityViolated {
        identity,
        location,
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

fn compare_z_series(identity: &'static str, expected: &[BigInt], found: &[BigInt]) -> Result<()> {
    match expected.iter().zip(found).position(|(a, b)| a != b) {
        Some(n) => Err(violated(
            identity,
            format!("z^{n}"),
            &expected[n],
            &found[n],
        )),
        None => Ok(()),
    }
}

/// Contribution of one attached path: `sum_{m>=1} z^m u^{m(m+1)/2}`.
pub fn q_series(nz: usize) -> Result<BivariateSeries> {
    check_bivariate_limit(nz)?;
    let nu = u_order(nz);
    let mut q = BivariateSeries::zero(nz, nu);
    for m in 1..=nz {
        q.add_to(m, u_order(m), &BigInt::one());
    }
    Ok(q)
}

/// `Q(z,1) = z/(1-z)` and `dQ/du (z,1) = z/(1-z)^3` to order `nz`.
pub fn verify_q_specializations(nz: usize) -> Result<()> {
    let q = q_series(nz)?;
    compare_z_series(
        "Q(z,1) = z/(1-z)",
        &series(&[0, 1], &[1, -1], nz),
        &q.at_w_one(),
    )?;
    compare_z_series(
        "dQ/du(z,1) = z/(1-z)^3",
        &series(&[0, 1], &[1, -3, 3, -1], nz),
        &q.dw_at_w_one(),
    )
}

/// `D(z,1) = E(z)` to the z-order of `d`.
pub fn verify_descendants_at_one(d: &BivariateSeries) -> Result<()> {
    compare_z_series("D(z,1) = E(z)", &elena_gf().series(d.nz()), &d.at_w_one())
}

/// `D(z,u) = zu + zu D(zu,u) / (1 - Q(zu,u))`, checked in the cleared form
/// `(D - zu)(1 - Q(zu,u)) = zu D(zu,u)` on the truncation of `d`.
pub fn verify_descendants_equation(d: &BivariateSeries) -> Result<()> {
    let (nz, nu) = (d.nz(), d.nw());
    check_bivariate_limit(nz)?;
    if nu < u_order(nz) {
        return Err(Error::LimitExceeded {
            what: "u-order too small for descendant sums",
            requested: nu,
            limit: u_order(nz),
        });
    }
    let mut q = BivariateSeries::zero(nz, nu);
    for m in 1..=nz {
        q.add_to(m, u_order(m), &BigInt::one());
    }
    let zu = BivariateSeries::monomial(1, 1, 1, nz, nu);
    let one = BivariateSeries::monomial(1, 0, 0, nz, nu);
    let q_sub = q.substitute_z_by_zw();
    let d_sub = d.substitute_z_by_zw();

    let lhs = &(d - &zu) * &(&one - &q_sub);
    let rhs = &zu * &d_sub;
    match rhs.first_mismatch(&lhs) {
        Some(m) => Err(violated(
            "descendants functional equation",
            format!("z^{} u^{}", m.z_degree, m.w_degree),
            &m.left,
            &m.right,
        )),
        None => Ok(()),
    }
}

/// `U(z,w) = sum_h U_h(z) w^h` with `h <= nw`, to z-order `nz`.
pub fn height_bivariate(nz: usize, nw: usize) -> BivariateSeries {
    BivariateSeries::from_w_rows(&uh_rows(nw, nz), nz, nw)
}

/// Master equation for `U(z,w)`:
/// `(1-2z) U(z,w) + U(z,zw) = 2z(1-z)(1-2z)/(1-3z+z^2)
///   + z^3 w (1-z) / ((1-3z+z^2)(1-wz)) + wz(1-z) U(z,w)`.
pub fn check_master_equation(upsilon: &BivariateSeries) -> Result<()> {
    let (nz, nw) = (upsilon.nz(), upsilon.nw());
    let lhs = &upsilon.scale_by_z_series(&[BigInt::one(), BigInt::from(-2)])
        + &upsilon.substitute_w_by_zw();

    let constant = series(&[0, 2, -6, 4], &DENOMINATOR, nz);
    let mut rhs = BivariateSeries::from_z_series(&constant, nz, nw);
    // z^3 (1-z)/(1-3z+z^2) times w/(1-wz) = sum_{j>=1} z^{j-1} w^j
    let tail = series(&[0, 0, 0, 1, -1], &DENOMINATOR, nz);
    for j in 1..=nw {
        for i in (j - 1)..=nz {
            rhs.add_to(i, j, &tail[i - (j - 1)]);
        }
    }
    let w = BivariateSeries::monomial(1, 0, 1, nz, nw);
    let shifted =
        (&w * upsilon).scale_by_z_series(&[BigInt::from(0), BigInt::one(), BigInt::from(-1)]);
    let rhs = &rhs + &shifted;

    match rhs.first_mismatch(&lhs) {
        Some(m) => Err(violated(
            "height master equation",
            format!("z^{} w^{}", m.z_degree, m.w_degree),
            &m.left,
            &m.right,
        )),
        None => Ok(()),
    }
}

pub fn verify_master_equation(nz: usize, nw: usize) -> Result<()> {
    check_master_equation(&height_bivariate(nz, nw))
}

/// The `w = 1` instance:
/// `(1-3z+z^2) U(z,1) + U(z,z) = z(2-6z+5z^2)/(1-3z+z^2)`,
/// given `U(z,1)` and `U(z,z)` to a common order.
pub fn check_master_w1(at_one: &[BigInt], at_z: &[BigInt]) -> Result<()> {
    let order = at_one.len().min(at_z.len()).saturating_sub(1);
    let lhs: Vec<BigInt> = (0..=order)
        .map(|n| {
            let mut v = &at_one[n] + &at_z[n];
            if n >= 1 {
                v -= &at_one[n - 1] * 3;
            }
            if n >= 2 {
                v += &at_one[n - 2];
            }
            v
        })
        .collect();
    let rhs = series(&[0, 2, -6, 5], &DENOMINATOR, order);
    compare_z_series("height master equation at w = 1", &rhs, &lhs)
}

pub fn verify_master_w1(nz: usize) -> Result<()> {
    // U_h has no terms below z^{h+1}, so h <= nz covers both specializations.
    let upsilon = height_bivariate(nz, nz);
    check_master_w1(&upsilon.at_w_one(), &upsilon.at_w_equals_z())
}
