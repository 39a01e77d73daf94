//! Closed-form generating functions for Elena counts and statistic totals.

use num_bigint::BigInt;
use serde::Serialize;

use super::height::height_total_series;
use super::rational::RationalGf;
use crate::stats::Statistic;

/// Order to which catalog tables carry coefficients.
pub const CATALOG_ORDER: usize = 14;

fn gf(num: &[i64], den: &[i64]) -> RationalGf {
    RationalGf::from_ints(num, den).expect("denominators have unit constant term")
}

/// 1 - 3z + z^2
pub const DENOMINATOR: [i64; 3] = [1, -3, 1];
/// (1 - 3z + z^2)^2
const DENOMINATOR_SQ: [i64; 5] = [1, -6, 11, -6, 1];

/// z(1-2z)/(1-3z+z^2): Elenas by number of nodes.
pub fn elena_gf() -> RationalGf {
    gf(&[0, 1, -2], &DENOMINATOR)
}

/// (1-2z)/(1-3z+z^2): nondecreasing Dyck paths by semilength, empty path included.
pub fn nondecreasing_dyck_gf() -> RationalGf {
    gf(&[1, -2], &DENOMINATOR)
}

pub fn elena_derivative_gf() -> RationalGf {
    gf(&[1, -4, 5], &DENOMINATOR_SQ)
}

/// z^2(1-z)^2 / ((1-2z)(1-3z+z^2))
pub fn root_degree_gf() -> RationalGf {
    gf(&[0, 0, 1, -2, 1], &[1, -5, 7, -2])
}

pub fn leaves_gf() -> RationalGf {
    gf(&[0, 1, -5, 8, -3], &DENOMINATOR_SQ)
}

pub fn paths_gf() -> RationalGf {
    gf(&[0, 0, 0, 1, -1], &DENOMINATOR_SQ)
}

/// Nodes on the rightmost branch, i.e. letters `a`.
pub fn spine_nodes_gf() -> RationalGf {
    gf(&[0, 1, -4, 4], &DENOMINATOR_SQ)
}

/// Total node count minus spine nodes: z E'(z) - spine_nodes(z).
pub fn path_nodes_gf() -> RationalGf {
    &elena_derivative_gf().shift(1) - &spine_nodes_gf()
}

/// Sum over nodes of subtree sizes: z(1-7z+20z^2-26z^3+11z^4) / ((1-z)(1-3z+z^2)^3).
pub fn descendants_gf() -> RationalGf {
    // (1 - z)(1 - 3z + z^2)^3
    gf(
        &[0, 1, -7, 20, -26, 11],
        &[1, -10, 39, -75, 75, -39, 10, -1],
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesTable {
    pub name: &'static str,
    pub description: &'static str,
    #[serde(serialize_with = "display_gf")]
    pub gf: RationalGf,
    #[serde(serialize_with = "crate::json::big_ints")]
    pub coefficients: Vec<BigInt>,
}

fn display_gf<S: serde::Serializer>(g: &RationalGf, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(g)
}

impl SeriesTable {
    fn new(name: &'static str, description: &'static str, gf: RationalGf) -> Self {
        let coefficients = gf.series(CATALOG_ORDER);
        SeriesTable {
            name,
            description,
            gf,
            coefficients,
        }
    }
}

pub fn catalog() -> Vec<SeriesTable> {
    vec![
        SeriesTable::new("E", "Elenas by size", elena_gf()),
        SeriesTable::new("dE/dz", "derivative of E", elena_derivative_gf()),
        SeriesTable::new("rootdeg", "total root degree", root_degree_gf()),
        SeriesTable::new("leaves", "total number of leaves", leaves_gf()),
        SeriesTable::new("paths", "total number of attached paths", paths_gf()),
        SeriesTable::new(
            "anodes",
            "total nodes on the rightmost branch",
            spine_nodes_gf(),
        ),
        SeriesTable::new("pathnodes", "total nodes lying in paths", path_nodes_gf()),
        SeriesTable::new(
            "desc",
            "total descendants (sum of subtree sizes)",
            descendants_gf(),
        ),
    ]
}

/// Generating-function side of each statistic total, coefficients to `order`.
pub fn total_series(stat: Statistic, order: usize) -> Vec<BigInt> {
    match stat {
        Statistic::RootDegree => root_degree_gf().series(order),
        Statistic::Leaves => leaves_gf().series(order),
        Statistic::Paths => paths_gf().series(order),
        Statistic::SpineNodes => spine_nodes_gf().series(order),
        Statistic::PathNodes => path_nodes_gf().series(order),
        // Descendant and ascendant sums coincide.
        Statistic::Psi | Statistic::PathLength => descendants_gf().series(order),
        Statistic::Height => height_total_series(order),
    }
}
