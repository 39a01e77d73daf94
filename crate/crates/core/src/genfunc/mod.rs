//! Exact generating-function engine: rational series, truncated bivariate
//! series, the height recursion and the functional-equation checks.

pub mod asymptotics;
pub mod bivariate;
pub mod catalog;
pub mod equations;
pub mod height;
pub mod poly;
pub mod rational;

pub use asymptotics::{
    asymptotics_report, averages_table, count_ratio_error, AsymptoticRow, AverageRow, Convergent,
    TableStatistic, Totals, DEFAULT_SERIES_BUDGET,
};
pub use bivariate::{BivariateSeries, Mismatch};
pub use catalog::{catalog, total_series, SeriesTable, CATALOG_ORDER};
pub use equations::{
    check_master_equation, check_master_w1, q_series, verify_descendants_at_one,
    verify_descendants_equation, verify_master_equation, verify_master_w1,
    verify_q_specializations, DEFAULT_BIVARIATE_LIMIT,
};
pub use height::{eh_series, height_total_series, uh_series, HeightLadder};
pub use poly::Poly;
pub use rational::RationalGf;
