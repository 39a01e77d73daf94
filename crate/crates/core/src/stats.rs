//! Per-tree statistics and exhaustive totals over all Elenas of a size.
//!
//! Totals here are computed by brute force and serve as the independent side
//! of every comparison against generating-function coefficients.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::elena::{enumerate_elenas_limited, word_to_tree, DEFAULT_ELENA_LIMIT};
use crate::error::{Error, Result};
use crate::genfunc::equations::{u_order, DEFAULT_BIVARIATE_LIMIT};
use crate::genfunc::BivariateSeries;
use crate::tree::PlantedPlaneTree;
use crate::word::ElenaWord;

/// The eight per-tree statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    RootDegree,
    Leaves,
    Paths,
    SpineNodes,
    PathNodes,
    Psi,
    PathLength,
    Height,
}

impl Statistic {
    pub const ALL: [Statistic; 8] = [
        Statistic::RootDegree,
        Statistic::Leaves,
        Statistic::Paths,
        Statistic::SpineNodes,
        Statistic::PathNodes,
        Statistic::Psi,
        Statistic::PathLength,
        Statistic::Height,
    ];

    /// Column name used in CSV output.
    pub fn column(self) -> &'static str {
        match self {
            Statistic::RootDegree => "root_degree",
            Statistic::Leaves => "leaves",
            Statistic::Paths => "paths",
            Statistic::SpineNodes => "spine_nodes",
            Statistic::PathNodes => "path_nodes",
            Statistic::Psi => "psi",
            Statistic::PathLength => "path_length",
            Statistic::Height => "height_total",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.column())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub root_degree: usize,
    pub leaves: usize,
    /// Nodes on the longest root-to-leaf path.
    pub height: usize,
    /// Sum over nodes of subtree sizes.
    #[serde(serialize_with = "crate::json::big")]
    pub psi: BigUint,
    /// Sum over nodes of depths, the root having depth 1.
    #[serde(serialize_with = "crate::json::big")]
    pub path_length: BigUint,
    pub paths: usize,
    pub spine_nodes: usize,
    pub path_nodes: usize,
}

impl StatRecord {
    pub fn value(&self, stat: Statistic) -> BigUint {
        match stat {
            Statistic::RootDegree => self.root_degree.into(),
            Statistic::Leaves => self.leaves.into(),
            Statistic::Paths => self.paths.into(),
            Statistic::SpineNodes => self.spine_nodes.into(),
            Statistic::PathNodes => self.path_nodes.into(),
            Statistic::Psi => self.psi.clone(),
            Statistic::PathLength => self.path_length.clone(),
            Statistic::Height => self.height.into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn leaf_count(t: &PlantedPlaneTree) -> usize {
    if t.is_leaf() {
        1
    } else {
        t.children().iter().map(leaf_count).sum()
    }
}

/// Sum of subtree sizes; returns (size, sum).
fn subtree_size_sum(t: &PlantedPlaneTree) -> (usize, usize) {
    let (size, sum) = t
        .children()
        .iter()
        .map(subtree_size_sum)
        .fold((1, 0), |(s, acc), (cs, csum)| (s + cs, acc + csum));
    (size, sum + size)
}

fn depth_sum(t: &PlantedPlaneTree, depth: usize) -> usize {
    depth
        + t.children()
            .iter()
            .map(|c| depth_sum(c, depth + 1))
            .sum::<usize>()
}

pub fn tree_stats(word: &ElenaWord) -> StatRecord {
    let tree = word_to_tree(word);
    StatRecord {
        root_degree: tree.degree(),
        leaves: leaf_count(&tree),
        height: tree.height(),
        psi: subtree_size_sum(&tree).1.into(),
        path_length: depth_sum(&tree, 1).into(),
        paths: word.path_count(),
        spine_nodes: word.block_count() + 1,
        path_nodes: word.path_nodes(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StatTotals {
    #[serde(serialize_with = "crate::json::big")]
    pub root_degree: BigUint,
    #[serde(serialize_with = "crate::json::big")]
    pub leaves: BigUint,
    #[serde(serialize_with = "crate::json::big")]
    pub paths: BigUint,
    #[serde(serialize_with = "crate::json::big")]
    pub spine_nodes: BigUint,
    #[serde(serialize_with = "crate::json::big")]
    pub path_nodes: BigUint,
    #[serde(serialize_with = "crate::json::big")]
    pub psi: BigUint,
    #[serde(serialize_with = "crate::json::big")]
    pub path_length: BigUint,
    #[serde(serialize_with = "crate::json::big")]
    pub height_total: BigUint,
}

impl StatTotals {
    pub fn get(&self, stat: Statistic) -> &BigUint {
        match stat {
            Statistic::RootDegree => &self.root_degree,
            Statistic::Leaves => &self.leaves,
            Statistic::Paths => &self.paths,
            Statistic::SpineNodes => &self.spine_nodes,
            Statistic::PathNodes => &self.path_nodes,
            Statistic::Psi => &self.psi,
            Statistic::PathLength => &self.path_length,
            Statistic::Height => &self.height_total,
        }
    }

    fn add(&mut self, r: &StatRecord) {
        self.root_degree += r.root_degree;
        self.leaves += r.leaves;
        self.paths += r.paths;
        self.spine_nodes += r.spine_nodes;
        self.path_nodes += r.path_nodes;
        self.psi += &r.psi;
        self.path_length += &r.path_length;
        self.height_total += r.height;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AggregateRow {
    pub n: usize,
    #[serde(serialize_with = "crate::json::big")]
    pub count: BigUint,
    pub totals: StatTotals,
}

impl AggregateRow {
    pub const CSV_HEADER: &'static str =
        "n,count,root_degree,leaves,paths,spine_nodes,path_nodes,psi,path_length,height_total";

    pub fn total(&self, stat: Statistic) -> &BigUint {
        self.totals.get(stat)
    }

    /// Total as a signed integer, for comparison with series coefficients.
    pub fn total_int(&self, stat: Statistic) -> BigInt {
        BigInt::from(self.total(stat).clone())
    }

    pub fn to_csv(&self) -> String {
        let mut fields = vec![self.n.to_string(), self.count.to_string()];
        fields.extend(Statistic::ALL.iter().map(|&s| self.total(s).to_string()));
        fields.join(",")
    }
}

pub fn aggregate(n: usize) -> Result<AggregateRow> {
    aggregate_limited(n, DEFAULT_ELENA_LIMIT)
}

pub fn aggregate_limited(n: usize, limit: usize) -> Result<AggregateRow> {
    let mut count = BigUint::zero();
    let mut totals = StatTotals::default();
    for word in enumerate_elenas_limited(n, limit)? {
        count += 1u32;
        totals.add(&tree_stats(&word));
    }
    Ok(AggregateRow { n, count, totals })
}

/// Distribution of the descendant sum: coefficient of `z^n u^k` is the number
/// of Elenas with `n` nodes and descendant sum `k`.
pub fn brute_d(nz: usize) -> Result<BivariateSeries> {
    if nz > DEFAULT_BIVARIATE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "bivariate z-order",
            requested: nz,
            limit: DEFAULT_BIVARIATE_LIMIT,
        });
    }
    let mut d = BivariateSeries::zero(nz, u_order(nz));
    let one = BigInt::one();
    for n in 1..=nz {
        for word in enumerate_elenas_limited(n, DEFAULT_ELENA_LIMIT)? {
            let psi = subtree_size_sum(&word_to_tree(&word)).1;
            d.add_to(n, psi, &one);
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_elena_word;

    fn stats(s: &str) -> StatRecord {
        tree_stats(&parse_elena_word(s).unwrap())
    }

    #[test]
    fn single_node() {
        let r = stats("a");
        assert_eq!(
            r,
            StatRecord {
                root_degree: 0,
                leaves: 1,
                height: 1,
                psi: 1u32.into(),
                path_length: 1u32.into(),
                paths: 0,
                spine_nodes: 1,
                path_nodes: 0,
            }
        );
    }

    #[test]
    fn star_of_three() {
        let r = stats("a p1 p1 a");
        assert_eq!(r.root_degree, 3);
        assert_eq!(r.leaves, 3);
        assert_eq!(r.psi, 7u32.into());
        assert_eq!(r.path_length, 7u32.into());
        assert_eq!(r.height, 2);
        assert_eq!((r.paths, r.spine_nodes, r.path_nodes), (2, 2, 2));
    }

    #[test]
    fn chain_of_four() {
        let r = stats("a a a a");
        assert_eq!((r.root_degree, r.leaves, r.height), (1, 1, 4));
        assert_eq!(r.psi, 10u32.into());
    }

    #[test]
    fn json_field_names() {
        assert_eq!(
            stats("a p2 a").to_json(),
            r#"{"root_degree":2,"leaves":2,"height":3,"psi":8,"path_length":8,"paths":1,"spine_nodes":2,"path_nodes":2}"#
        );
    }

    #[test]
    fn aggregates_small() {
        let a = aggregate(3).unwrap();
        assert_eq!(a.count, 2u32.into());
        assert_eq!(a.totals.root_degree, 3u32.into());
        assert_eq!(a.totals.leaves, 3u32.into());
        assert_eq!(a.totals.paths, 1u32.into());
        assert_eq!(a.totals.spine_nodes, 5u32.into());
        assert_eq!(a.totals.psi, 11u32.into());
        assert_eq!(a.totals.height_total, 5u32.into());

        let a = aggregate(4).unwrap();
        assert_eq!(a.to_csv(), "4,5,9,10,5,14,6,42,42,15");

        let a = aggregate(1).unwrap();
        assert_eq!(a.to_csv(), "1,1,0,1,0,1,0,1,1,1");
        assert!(aggregate(17).is_err());
    }

    #[test]
    fn descendant_distribution() {
        let d = brute_d(4).unwrap();
        assert_eq!(d.get(1, 1), &BigInt::one());
        // size 3: a p1 a has psi 5, a a a has psi 6
        assert_eq!(d.get(3, 5), &BigInt::one());
        assert_eq!(d.get(3, 6), &BigInt::one());
        assert_eq!(d.get(3, 4), &BigInt::zero());
        assert!(matches!(brute_d(11), Err(Error::LimitExceeded { .. })));
    }
}
