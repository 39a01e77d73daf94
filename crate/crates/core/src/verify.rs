//! The full cross-check suite: round trips, set equalities, catalog
//! cross-checks against brute force, and both functional equations.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::dyck::{
    dyck_to_tree, enumerate_dyck_paths_limited, is_nondecreasing, tree_to_dyck, valleys,
};
use crate::elena::{
    count_elenas, dyck_to_word, enumerate_elenas_limited, is_elena_shape, tree_to_word,
    word_to_dyck, word_to_tree,
};
use crate::error::Error;
use crate::genfunc::catalog::{elena_derivative_gf, elena_gf};
use crate::genfunc::{
    total_series, uh_series, verify_descendants_at_one, verify_descendants_equation,
    verify_master_equation, verify_master_w1, verify_q_specializations, HeightLadder,
};
use crate::height4::{elena_to_height4, height4_to_elena, MAX_HEIGHT};
use crate::path::parse_dyck;
use crate::stats::{aggregate_limited, brute_d, tree_stats, AggregateRow, Statistic};
use crate::tree::{all_trees, parse_tree, PlantedPlaneTree};
use crate::word::parse_elena_word;

pub const SAMPLE_PATH: &str = "UDUUDUUDUDDD";
pub const SAMPLE_TREE: &str = "(()(()(()())))";
pub const SAMPLE_WORD: &str = "a p1 a p1 a p1 a";

/// The five Elenas with 4 nodes: word, Elena tree, height-restricted tree.
pub const SIZE_FOUR: [(&str, &str, &str); 5] = [
    ("a a a a", "(((())))", "(()()())"),
    ("a p2 a", "((())())", "(((())))"),
    ("a p1 a a", "(()(()))", "((())())"),
    ("a p1 p1 a", "(()()())", "((()()))"),
    ("a a p1 a", "((()()))", "(()(()))"),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub descendants_nz: usize,
    pub master_nz: usize,
    pub master_nw: usize,
    pub w1_nz: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 12,
            descendants_nz: 8,
            master_nz: 30,
            master_nw: 10,
            w1_nz: 50,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub module: &'static str,
    pub operation: &'static str,
    pub scope: String,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "PASS {}::{} [{}]",
                self.module, self.operation, self.scope
            ),
            Some(why) => write!(
                f,
                "FAIL {}::{} [{}] {}",
                self.module, self.operation, self.scope, why
            ),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    fn record(
        &mut self,
        module: &'static str,
        operation: &'static str,
        scope: impl Into<String>,
        result: Result<(), String>,
    ) {
        self.outcomes.push(CheckOutcome {
            module,
            operation,
            scope: scope.into(),
            failure: result.err(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.outcomes.len(),
            self.outcomes.len() - failed,
            failed
        )
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalan(n: usize) -> BigUint {
    // C(2n, n) / (n + 1)
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * (2 * n - k) / (k + 1);
    }
    c / (n + 1)
}

fn fibonacci(k: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::from(0u32), BigUint::one());
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn check_counting(max_n: usize) -> Result<(), String> {
    for n in 2..=50 {
        ensure(count_elenas(n) == fibonacci(2 * n - 3), || {
            format!("n={n}: count {} is not F_(2n-3)", count_elenas(n))
        })?;
    }
    for n in 1..=max_n {
        let listed = enumerate_elenas_limited(n, max_n)
            .map_err(|e| e.to_string())?
            .count();
        ensure(BigUint::from(listed) == count_elenas(n), || {
            format!("n={n}: enumerated {listed}, counted {}", count_elenas(n))
        })?;
    }
    Ok(())
}

pub fn check_dyck_enumeration(max_semilength: usize) -> Result<(), String> {
    for n in 0..=max_semilength {
        let paths: Vec<_> = enumerate_dyck_paths_limited(n, max_semilength)
            .map_err(|e| e.to_string())?
            .collect();
        let distinct: BTreeSet<_> = paths.iter().collect();
        ensure(BigUint::from(paths.len()) == catalan(n), || {
            format!("n={n}: {} paths, Catalan is {}", paths.len(), catalan(n))
        })?;
        ensure(distinct.len() == paths.len(), || {
            format!("n={n}: duplicate paths")
        })?;
        ensure(paths.windows(2).all(|w| w[0] < w[1]), || {
            format!("n={n}: not in lexicographic order")
        })?;
        ensure(
            paths
                .iter()
                .all(|p| parse_dyck(&p.render()).as_ref() == Ok(p)),
            || format!("n={n}: invalid path"),
        )?;
    }
    Ok(())
}

pub fn check_nondecreasing_counts(max_semilength: usize) -> Result<(), String> {
    for n in 0..=max_semilength {
        let count = enumerate_dyck_paths_limited(n, max_semilength)
            .map_err(|e| e.to_string())?
            .filter(is_nondecreasing)
            .count();
        ensure(BigUint::from(count) == count_elenas(n + 1), || {
            format!(
                "n={n}: {count} nondecreasing paths, {} Elenas",
                count_elenas(n + 1)
            )
        })?;
    }
    Ok(())
}

pub fn check_glove_round_trips(max_semilength: usize, max_tree_size: usize) -> Result<(), String> {
    for n in 0..=max_semilength {
        for p in enumerate_dyck_paths_limited(n, max_semilength).map_err(|e| e.to_string())? {
            let t = dyck_to_tree(&p);
            ensure(t.size() == n + 1 && tree_to_dyck(&t) == p, || {
                format!("path {p} does not round-trip")
            })?;
        }
    }
    for size in 1..=max_tree_size {
        for t in all_trees(size) {
            let p = tree_to_dyck(&t);
            ensure(p.len() == 2 * (size - 1) && dyck_to_tree(&p) == t, || {
                format!("tree {t} does not round-trip")
            })?;
        }
    }
    Ok(())
}

pub fn check_sample_path() -> Result<(), String> {
    let p = parse_dyck(SAMPLE_PATH).map_err(|e| e.to_string())?;
    let t = dyck_to_tree(&p);
    ensure(t.render() == SAMPLE_TREE, || format!("tree is {t}"))?;
    ensure(valleys(&p) == [0, 1, 2], || {
        format!("valleys are {:?}", valleys(&p))
    })?;
    ensure(is_nondecreasing(&p), || "path is not nondecreasing".into())?;
    let w = dyck_to_word(&p).map_err(|e| e.to_string())?;
    ensure(w.render() == SAMPLE_WORD, || format!("word is {w}"))
}

pub fn check_elena_round_trips(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        for w in enumerate_elenas_limited(n, max_n).map_err(|e| e.to_string())? {
            let t = word_to_tree(&w);
            ensure(t.size() == n, || format!("{w}: tree has wrong size"))?;
            ensure(tree_to_word(&t).as_ref() == Ok(&w), || {
                format!("{w}: tree round trip")
            })?;
            let p = word_to_dyck(&w);
            ensure(is_nondecreasing(&p), || {
                format!("{w}: path {p} not nondecreasing")
            })?;
            ensure(dyck_to_word(&p).as_ref() == Ok(&w), || {
                format!("{w}: path round trip")
            })?;
            let text = w.render();
            ensure(parse_elena_word(&text).as_ref() == Ok(&w), || {
                format!("{w}: text round trip")
            })?;
        }
    }
    Ok(())
}

/// Word trees, shape-predicate trees and glove images of nondecreasing paths
/// coincide as sets.
pub fn check_three_way(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let from_words: BTreeSet<PlantedPlaneTree> = enumerate_elenas_limited(n, max_n)
            .map_err(|e| e.to_string())?
            .map(|w| word_to_tree(&w))
            .collect();
        let by_shape: BTreeSet<PlantedPlaneTree> =
            all_trees(n).into_iter().filter(is_elena_shape).collect();
        let from_paths: BTreeSet<PlantedPlaneTree> = enumerate_dyck_paths_limited(n - 1, max_n)
            .map_err(|e| e.to_string())?
            .filter(is_nondecreasing)
            .map(|p| dyck_to_tree(&p))
            .collect();
        ensure(from_words == by_shape, || {
            format!(
                "n={n}: {} word trees vs {} shaped trees",
                from_words.len(),
                by_shape.len()
            )
        })?;
        ensure(from_words == from_paths, || {
            format!(
                "n={n}: {} word trees vs {} path trees",
                from_words.len(),
                from_paths.len()
            )
        })?;
    }
    Ok(())
}

pub fn check_height4(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let mut image = BTreeSet::new();
        let mut listed = 0usize;
        for w in enumerate_elenas_limited(n, max_n).map_err(|e| e.to_string())? {
            let t = elena_to_height4(&w);
            ensure(t.size() == n && t.height() <= MAX_HEIGHT, || {
                format!("{w}: image {t} has wrong size or height")
            })?;
            ensure(height4_to_elena(&t).as_ref() == Ok(&w), || {
                format!("{w}: round trip")
            })?;
            image.insert(t);
            listed += 1;
        }
        ensure(image.len() == listed, || {
            format!("n={n}: map is not injective")
        })?;
        let short: BTreeSet<_> = all_trees(n)
            .into_iter()
            .filter(|t| t.height() <= MAX_HEIGHT)
            .collect();
        ensure(image == short, || {
            format!(
                "n={n}: image has {} trees, {} have height <= 4",
                image.len(),
                short.len()
            )
        })?;
        for t in &short {
            let w = height4_to_elena(t).map_err(|e| e.to_string())?;
            ensure(&elena_to_height4(&w) == t, || {
                format!("{t}: inverse round trip")
            })?;
        }
    }
    Ok(())
}

pub fn check_size_four() -> Result<(), String> {
    for (word, elena, short) in SIZE_FOUR {
        let w = parse_elena_word(word).map_err(|e| e.to_string())?;
        let e = parse_tree(elena).map_err(|e| e.to_string())?;
        let s = parse_tree(short).map_err(|e| e.to_string())?;
        ensure(word_to_tree(&w) == e, || {
            format!("{word}: Elena tree {}", word_to_tree(&w))
        })?;
        ensure(elena_to_height4(&w) == s, || {
            format!("{word}: height-4 tree {}", elena_to_height4(&w))
        })?;
        ensure(height4_to_elena(&s).as_ref() == Ok(&w), || {
            format!("{word}: inverse")
        })?;
    }
    Ok(())
}

pub fn check_tree_identities(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        for w in enumerate_elenas_limited(n, max_n).map_err(|e| e.to_string())? {
            let r = tree_stats(&w);
            ensure(r.psi == r.path_length, || {
                format!("{w}: psi {} != path length {}", r.psi, r.path_length)
            })?;
            ensure(r.spine_nodes + r.path_nodes == n, || {
                format!("{w}: node split")
            })?;
            ensure(r.leaves == r.paths + 1, || {
                format!("{w}: leaves != paths + 1")
            })?;
        }
    }
    Ok(())
}

/// Compare one brute-force row against every series coefficient.
pub fn compare_row(row: &AggregateRow, series: &[(Statistic, Vec<BigInt>)]) -> Result<(), String> {
    let n = row.n;
    let count = &elena_gf().series(n)[n];
    ensure(&BigInt::from(row.count.clone()) == count, || {
        format!("n={n}: count {} vs E coefficient {count}", row.count)
    })?;
    for (stat, coeffs) in series {
        let brute = row.total_int(*stat);
        ensure(brute == coeffs[n], || {
            format!("n={n}: {stat} brute force {brute} vs series {}", coeffs[n])
        })?;
    }
    Ok(())
}

pub fn statistic_series(order: usize) -> Vec<(Statistic, Vec<BigInt>)> {
    Statistic::ALL
        .iter()
        .map(|&s| (s, total_series(s, order)))
        .collect()
}

pub fn check_catalog(max_n: usize) -> Result<(), String> {
    let series = statistic_series(max_n);
    for n in 1..=max_n {
        let row = aggregate_limited(n, max_n).map_err(|e| e.to_string())?;
        compare_row(&row, &series)?;
    }
    Ok(())
}

pub fn check_series_identities(order: usize) -> Result<(), String> {
    let e = elena_gf().series(order + 1);
    let de = elena_derivative_gf().series(order);
    for n in 0..=order {
        ensure(de[n] == BigInt::from(n + 1) * &e[n + 1], || {
            format!(
                "dE/dz at z^{n}: {} vs {}",
                de[n],
                BigInt::from(n + 1) * &e[n + 1]
            )
        })?;
    }
    let mut prev: Option<Vec<BigInt>> = None;
    for (h, eh) in HeightLadder::new(order).take(order + 2) {
        if let Some(p) = &prev {
            ensure(p.iter().zip(&eh).all(|(a, b)| a <= b), || {
                format!("E_{h} decreased")
            })?;
        }
        if h >= order {
            ensure(eh == e[..=order], || format!("E_{h} differs from E"))?;
        }
        prev = Some(eh);
    }
    for h in 0..order {
        uh_series(h, order).map_err(|e| e.to_string())?;
    }
    Ok(())
}

pub fn check_descendants(nz: usize) -> Result<(), String> {
    let d = brute_d(nz).map_err(|e| e.to_string())?;
    verify_descendants_at_one(&d).map_err(|e| e.to_string())?;
    verify_q_specializations(nz).map_err(|e| e.to_string())?;
    verify_descendants_equation(&d).map_err(|e: Error| e.to_string())
}

pub fn run(opts: &VerifyOptions) -> Report {
    let n = opts.max_n;
    let semilength = n.saturating_sub(2);
    let mut report = Report::default();
    report.record(
        "elena",
        "count_elenas",
        format!("enumeration n<={n}, Fibonacci n<=50"),
        check_counting(n),
    );
    report.record(
        "dyck",
        "enumerate_dyck_paths",
        format!("semilength<={semilength}"),
        check_dyck_enumeration(semilength),
    );
    report.record(
        "dyck",
        "is_nondecreasing",
        format!("semilength<={}", n.saturating_sub(1)),
        check_nondecreasing_counts(n.saturating_sub(1)),
    );
    report.record(
        "dyck",
        "dyck_to_tree/tree_to_dyck",
        format!(
            "length<={}, tree size<={}",
            2 * semilength,
            n.saturating_sub(1)
        ),
        check_glove_round_trips(semilength, n.saturating_sub(1)),
    );
    report.record("dyck", "sample_path", SAMPLE_PATH, check_sample_path());
    report.record(
        "elena",
        "round_trips",
        format!("n<={n}"),
        check_elena_round_trips(n),
    );
    report.record(
        "elena",
        "is_elena_shape",
        format!("three-way set equality n<={n}"),
        check_three_way(n),
    );
    report.record(
        "height4",
        "elena_to_height4",
        format!("set equality n<={n}"),
        check_height4(n),
    );
    report.record("height4", "size_four", "five pairs", check_size_four());
    report.record(
        "stats",
        "tree_stats",
        format!("psi = path_length n<={n}"),
        check_tree_identities(n),
    );
    report.record(
        "genfunc",
        "catalog",
        format!("brute force vs series n<={n}"),
        check_catalog(n),
    );
    report.record(
        "genfunc",
        "eh_series/uh_series",
        format!("order {}", opts.master_nz),
        check_series_identities(opts.master_nz),
    );
    report.record(
        "genfunc",
        "verify_descendants_equation",
        format!("Nz={}", opts.descendants_nz),
        check_descendants(opts.descendants_nz),
    );
    report.record(
        "genfunc",
        "verify_master_equation",
        format!("Nz={}, Nw={}", opts.master_nz, opts.master_nw),
        verify_master_equation(opts.master_nz, opts.master_nw).map_err(|e| e.to_string()),
    );
    report.record(
        "genfunc",
        "verify_master_equation",
        format!("w=1, Nz={}", opts.w1_nz),
        verify_master_w1(opts.w1_nz).map_err(|e| e.to_string()),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles() {
        let c: Vec<BigUint> = (0..6).map(catalan).collect();
        assert_eq!(c, [1u32, 1, 2, 5, 14, 42].map(BigUint::from));
        assert_eq!(fibonacci(10), BigUint::from(55u32));
    }

    #[test]
    fn small_suite_passes() {
        let opts = VerifyOptions {
            max_n: 7,
            descendants_nz: 6,
            master_nz: 12,
            master_nw: 5,
            w1_nz: 15,
        };
        let report = run(&opts);
        assert!(report.passed(), "{report}");
    }
}
