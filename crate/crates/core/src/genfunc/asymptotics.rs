//! Exact averages over all Elenas of a given size and their convergence to
//! the limiting constants.
//!
//! Linear statistics grow like `c * n + d + (exponentially small)`, so the
//! successive difference `avg_n - avg_{n-1}` isolates `c`. Floating point is
//! only used for the final comparison against the irrational constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::catalog::{
    descendants_gf, elena_gf, leaves_gf, path_nodes_gf, paths_gf, root_degree_gf, spine_nodes_gf,
};
use super::height::height_total_series;
use crate::error::{Error, Result};

/// Largest size for which averages are computed. Height totals cost
/// quadratic work in the size.
pub const DEFAULT_SERIES_BUDGET: usize = 5000;

fn sqrt5() -> f64 {
    5f64.sqrt()
}

/// The golden ratio.
pub fn alpha() -> f64 {
    (1.0 + sqrt5()) / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableStatistic {
    RootDegree,
    Leaves,
    Paths,
    SpineNodes,
    PathNodes,
    NodesPerPath,
    Ascendants,
    Descendants,
    Height,
}

/// How an exact sequence of averages is turned into an estimate of its limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convergent {
    /// The average itself (bounded statistics).
    Value,
    /// `avg_n - avg_{n-1}` (statistics linear in n).
    Difference,
    /// Ratio of the successive differences of nodes-in-paths and paths.
    SlopeRatio,
}

impl TableStatistic {
    pub const ALL: [TableStatistic; 9] = [
        TableStatistic::RootDegree,
        TableStatistic::Leaves,
        TableStatistic::Paths,
        TableStatistic::SpineNodes,
        TableStatistic::PathNodes,
        TableStatistic::NodesPerPath,
        TableStatistic::Ascendants,
        TableStatistic::Descendants,
        TableStatistic::Height,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TableStatistic::RootDegree => "degree of root",
            TableStatistic::Leaves => "number of leaves",
            TableStatistic::Paths => "number of paths",
            TableStatistic::SpineNodes => "nodes on rightmost branch",
            TableStatistic::PathNodes => "nodes in paths",
            TableStatistic::NodesPerPath => "nodes in one path",
            TableStatistic::Ascendants => "number of ascendants",
            TableStatistic::Descendants => "number of descendants",
            TableStatistic::Height => "height",
        }
    }

    /// The limiting constant (the coefficient of `n` for linear statistics).
    pub fn limit(self) -> f64 {
        let s = sqrt5();
        match self {
            TableStatistic::RootDegree => (3.0 + s) / 2.0,
            TableStatistic::Leaves | TableStatistic::Paths => 1.0 / s,
            TableStatistic::SpineNodes | TableStatistic::Height => (5.0 - s) / 10.0,
            TableStatistic::PathNodes => (5.0 + s) / 10.0,
            TableStatistic::NodesPerPath => (1.0 + s) / 2.0,
            TableStatistic::Ascendants | TableStatistic::Descendants => (5.0 - s) / 20.0,
        }
    }

    pub fn convergent(self) -> Convergent {
        match self {
            TableStatistic::RootDegree => Convergent::Value,
            TableStatistic::NodesPerPath => Convergent::SlopeRatio,
            _ => Convergent::Difference,
        }
    }

    /// Whether the limit multiplies `n`.
    pub fn is_linear(self) -> bool {
        self.convergent() == Convergent::Difference
    }
}

/// Statistic totals over all Elenas of size `0..=order`.
#[derive(Debug, Clone)]
pub struct Totals {
    pub count: Vec<BigInt>,
    pub root_degree: Vec<BigInt>,
    pub leaves: Vec<BigInt>,
    pub paths: Vec<BigInt>,
    pub spine_nodes: Vec<BigInt>,
    pub path_nodes: Vec<BigInt>,
    pub descendants: Vec<BigInt>,
    pub height: Vec<BigInt>,
}

impl Totals {
    pub fn compute(order: usize) -> Result<Self> {
        if order > DEFAULT_SERIES_BUDGET {
            return Err(Error::BudgetExceeded {
                requested: order,
                budget: DEFAULT_SERIES_BUDGET,
            });
        }
        Ok(Totals {
            count: elena_gf().series(order),
            root_degree: root_degree_gf().series(order),
            leaves: leaves_gf().series(order),
            paths: paths_gf().series(order),
            spine_nodes: spine_nodes_gf().series(order),
            path_nodes: path_nodes_gf().series(order),
            descendants: descendants_gf().series(order),
            height: height_total_series(order),
        })
    }

    fn ratio(num: &BigInt, den: &BigInt) -> Option<BigRational> {
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }

    /// Exact average of `stat` over Elenas of size `n`; `None` where it is
    /// undefined (no Elenas, or no paths for nodes-per-path).
    pub fn average(&self, stat: TableStatistic, n: usize) -> Option<BigRational> {
        let count = &self.count[n];
        match stat {
            TableStatistic::RootDegree => Self::ratio(&self.root_degree[n], count),
            TableStatistic::Leaves => Self::ratio(&self.leaves[n], count),
            TableStatistic::Paths => Self::ratio(&self.paths[n], count),
            TableStatistic::SpineNodes => Self::ratio(&self.spine_nodes[n], count),
            TableStatistic::PathNodes => Self::ratio(&self.path_nodes[n], count),
            TableStatistic::NodesPerPath => Self::ratio(&self.path_nodes[n], &self.paths[n]),
            // Averaged over nodes as well as trees.
            TableStatistic::Ascendants | TableStatistic::Descendants => {
                Self::ratio(&self.descendants[n], &(count * BigInt::from(n)))
            }
            TableStatistic::Height => Self::ratio(&self.height[n], count),
        }
    }

    fn difference(&self, stat: TableStatistic, n: usize) -> Option<BigRational> {
        Some(self.average(stat, n)? - self.average(stat, n - 1)?)
    }

    /// Exact convergent for `stat` at size `n` (needs `n >= 2`).
    pub fn convergent(&self, stat: TableStatistic, n: usize) -> Option<BigRational> {
        match stat.convergent() {
            Convergent::Value => self.average(stat, n),
            Convergent::Difference => self.difference(stat, n),
            Convergent::SlopeRatio => {
                let nodes = self.difference(TableStatistic::PathNodes, n)?;
                let paths = self.difference(TableStatistic::Paths, n)?;
                (!paths.is_zero()).then(|| nodes / paths)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AverageRow {
    pub statistic: TableStatistic,
    pub label: &'static str,
    pub n: usize,
    #[serde(serialize_with = "rational_string")]
    pub average: Option<BigRational>,
}

fn rational_string<S: serde::Serializer>(
    v: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

pub fn averages_table(n: usize) -> Result<Vec<AverageRow>> {
    let totals = Totals::compute(n)?;
    Ok(TableStatistic::ALL
        .iter()
        .map(|&statistic| AverageRow {
            statistic,
            label: statistic.label(),
            n,
            average: totals.average(statistic, n),
        })
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticRow {
    pub statistic: TableStatistic,
    pub label: &'static str,
    pub n: usize,
    pub kind: Convergent,
    #[serde(serialize_with = "rational_string")]
    pub exact: Option<BigRational>,
    pub convergent: f64,
    pub limit: f64,
    pub deviation: f64,
}

/// Deviation of each convergent at size `n` from its limiting constant.
pub fn asymptotics_report(n: usize) -> Result<Vec<AsymptoticRow>> {
    if n < 4 {
        return Err(Error::BelowMinimum {
            what: "asymptotics report size",
            requested: n,
            minimum: 4,
        });
    }
    let totals = Totals::compute(n)?;
    Ok(TableStatistic::ALL
        .iter()
        .map(|&statistic| {
            let exact = totals.convergent(statistic, n);
            let convergent = exact.as_ref().and_then(|r| r.to_f64()).unwrap_or(f64::NAN);
            let limit = statistic.limit();
            AsymptoticRow {
                statistic,
                label: statistic.label(),
                n,
                kind: statistic.convergent(),
                exact,
                convergent,
                limit,
                deviation: (convergent - limit).abs(),
            }
        })
        .collect())
}

/// `[z^n]E / ((1 - 2/sqrt5) alpha^{2n}) - 1`.
pub fn count_ratio_error(n: usize) -> f64 {
    let count = elena_gf().coefficient(n).to_f64().unwrap_or(f64::INFINITY);
    let leading = (1.0 - 2.0 / sqrt5()) * alpha().powi(2 * n as i32);
    (count / leading - 1.0).abs()
}

/// Exact rational to a fixed number of decimals (truncated toward zero).
pub fn format_decimal(r: &BigRational, decimals: usize) -> String {
    let scale = BigInt::from(10).pow(decimals as u32);
    let scaled = (r * BigRational::from_integer(scale.clone()))
        .trunc()
        .to_integer();
    let negative = r.is_negative();
    let digits = scaled.abs().to_string();
    let digits = format!("{digits:0>width$}", width = decimals + 1);
    let (int, frac) = digits.split_at(digits.len() - decimals);
    let sign = if negative { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(rows: &[AverageRow], stat: TableStatistic) -> Option<BigRational> {
        rows.iter()
            .find(|r| r.statistic == stat)
            .unwrap()
            .average
            .clone()
    }

    #[test]
    fn exact_small_averages() {
        let rows = averages_table(4).unwrap();
        let r = |a: i64, b: i64| Some(BigRational::new(a.into(), b.into()));
        assert_eq!(row(&rows, TableStatistic::RootDegree), r(9, 5));
        assert_eq!(row(&rows, TableStatistic::Leaves), r(10, 5));
        assert_eq!(row(&rows, TableStatistic::Descendants), r(42, 20));
        assert_eq!(row(&rows, TableStatistic::Height), r(15, 5));
        assert_eq!(row(&rows, TableStatistic::NodesPerPath), r(6, 5));
        assert_eq!(
            row(&averages_table(2).unwrap(), TableStatistic::NodesPerPath),
            None
        );
    }

    #[test]
    fn root_degree_converges() {
        let report = asymptotics_report(100).unwrap();
        let root = &report[0];
        assert_eq!(root.statistic, TableStatistic::RootDegree);
        assert!(root.deviation < 1e-6, "{}", root.deviation);
    }

    #[test]
    fn leaves_difference() {
        let report = asymptotics_report(100).unwrap();
        let leaves = report
            .iter()
            .find(|r| r.statistic == TableStatistic::Leaves)
            .unwrap();
        assert!(leaves.deviation < 1e-8);
    }

    #[test]
    fn budget() {
        assert!(matches!(
            Totals::compute(DEFAULT_SERIES_BUDGET + 1),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(asymptotics_report(3).is_err());
    }

    #[test]
    fn count_ratio() {
        assert!(count_ratio_error(40) < 1e-10);
    }

    #[test]
    fn decimals() {
        let r = BigRational::new(9.into(), 5.into());
        assert_eq!(format_decimal(&r, 3), "1.800");
        let r = BigRational::new((-1).into(), 3.into());
        assert_eq!(format_decimal(&r, 4), "-0.3333");
        let r = BigRational::new(7.into(), 1.into());
        assert_eq!(format_decimal(&r, 0), "7");
        let r = BigRational::new(1.into(), 200.into());
        assert_eq!(format_decimal(&r, 2), "0.00");
    }
}
