//! One line per acceptance criterion, `PASS` or `FAIL`, followed by the
//! assertion. Run with `--nocapture` to see the lines.

use std::process::Command;
use std::time::{Duration, Instant};

use elena::elena::count_elenas;
use elena::genfunc::asymptotics::{asymptotics_report, count_ratio_error, TableStatistic};
use elena::genfunc::{verify_master_equation, verify_master_w1};
use elena::stats::aggregate;
use elena::verify::{
    check_catalog, check_counting, check_descendants, check_glove_round_trips, check_height4,
    check_nondecreasing_counts, check_sample_path, check_size_four, check_three_way,
    check_tree_identities,
};
use elena::Statistic;

fn criterion(id: &str, what: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("PASS {id}: {what}"),
        Err(e) => println!("FAIL {id}: {what}: {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {id} failed: {e}");
    }
}

fn within(budget: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    if took < budget {
        Ok(())
    } else {
        Err(format!("took {took:?}, budget {budget:?}"))
    }
}

fn deviation(stat: TableStatistic, n: usize) -> Result<f64, String> {
    let report = asymptotics_report(n).map_err(|e| e.to_string())?;
    let row = report
        .iter()
        .find(|r| r.statistic == stat)
        .expect("every statistic reported");
    Ok(row.deviation)
}

fn near(stat: TableStatistic, n: usize, tol: f64) -> Result<(), String> {
    let report = asymptotics_report(n).map_err(|e| e.to_string())?;
    let row = report
        .iter()
        .find(|r| r.statistic == stat)
        .expect("every statistic reported");
    if row.deviation < tol {
        Ok(())
    } else {
        Err(format!(
            "{} at n={n}: convergent {:.12}, limit {:.12}, deviation {:.3e} >= {tol:e}",
            row.label, row.convergent, row.limit, row.deviation
        ))
    }
}

#[test]
fn c1_counting() {
    let start = Instant::now();
    let first: Vec<String> = (1..=8).map(|n| count_elenas(n).to_string()).collect();
    let expected = ["1", "1", "2", "5", "13", "34", "89", "233"];
    let result = if first == expected {
        Ok(())
    } else {
        Err(format!("first counts {first:?}"))
    }
    .and_then(|()| check_counting(14))
    .and_then(|()| check_nondecreasing_counts(11))
    .and_then(|()| within(Duration::from_secs(60), start));
    criterion(
        "1",
        "counting, brute force n<=14, F(2n-3) n<=50, Dyck filter n<=11",
        result,
    );
}

#[test]
fn c2_glove() {
    let result = check_glove_round_trips(10, 11).and_then(|()| check_sample_path());
    criterion(
        "2",
        "glove round trips, paths length<=20, trees size<=11, sample path",
        result,
    );
}

#[test]
fn c3_height4() {
    let result = check_height4(12).and_then(|()| check_size_four());
    criterion(
        "3",
        "height<=4 image set equality n<=12, five pairs",
        result,
    );
}

#[test]
fn c4_shape() {
    criterion("4", "three-way set equality n<=12", check_three_way(12));
}

#[test]
fn c5_statistics() {
    let start = Instant::now();
    let small = aggregate(4).map_err(|e| e.to_string()).and_then(|row| {
        let expect = [
            (Statistic::RootDegree, "9"),
            (Statistic::Leaves, "10"),
            (Statistic::Paths, "5"),
            (Statistic::SpineNodes, "14"),
            (Statistic::Psi, "42"),
            (Statistic::Height, "15"),
        ];
        for (stat, v) in expect {
            if row.total(stat).to_string() != v {
                return Err(format!("n=4 {stat}: {} != {v}", row.total(stat)));
            }
        }
        Ok(())
    });
    let result = small
        .and_then(|()| check_catalog(14))
        .and_then(|()| within(Duration::from_secs(300), start));
    criterion(
        "5",
        "brute-force totals equal series coefficients n<=14",
        result,
    );
}

#[test]
fn c6_functional_equations() {
    let result = check_descendants(8)
        .and_then(|()| verify_master_equation(30, 10).map_err(|e| e.to_string()))
        .and_then(|()| verify_master_w1(50).map_err(|e| e.to_string()));
    criterion(
        "6",
        "descendants equation Nz=8, master equation Nz=30 Nw=10, w=1 at Nz=50",
        result,
    );
}

#[test]
fn c7_psi_identity() {
    criterion(
        "7",
        "psi = path length for every Elena of size <=14",
        check_tree_identities(14),
    );
}

#[test]
fn c8a_root_degree() {
    criterion(
        "8a",
        "root-degree average within 1e-6 at n=100",
        near(TableStatistic::RootDegree, 100, 1e-6),
    );
}

#[test]
fn c8b_linear_statistics() {
    let result = [
        TableStatistic::Leaves,
        TableStatistic::Paths,
        TableStatistic::SpineNodes,
        TableStatistic::PathNodes,
    ]
    .into_iter()
    .try_for_each(|s| near(s, 100, 1e-8));
    criterion(
        "8b",
        "leaves, paths, spine and path-node differences within 1e-8 at n=100",
        result,
    );
}

#[test]
fn c8c_descendants() {
    criterion(
        "8c",
        "descendants difference within 1e-8 at n=100",
        near(TableStatistic::Descendants, 100, 1e-8),
    );
}

#[test]
fn c8d_nodes_per_path() {
    criterion(
        "8d",
        "nodes-per-path slope ratio within 1e-8 at n=100",
        near(TableStatistic::NodesPerPath, 100, 1e-8),
    );
}

#[test]
fn c8e_height_trend() {
    let result = deviation(TableStatistic::Height, 100).and_then(|d100| {
        let d500 = deviation(TableStatistic::Height, 500)?;
        if d500 < 1e-3 && d500 < d100 {
            Ok(())
        } else {
            Err(format!(
                "deviation {d500:.3e} at n=500, {d100:.3e} at n=100"
            ))
        }
    });
    criterion(
        "8e",
        "height difference within 1e-3 at n=500 and closer than at n=100",
        result,
    );
}

#[test]
fn c8f_count_asymptotic() {
    let err = count_ratio_error(40);
    let result = if err < 1e-10 {
        Ok(())
    } else {
        Err(format!("relative error {err:.3e}"))
    };
    criterion("8f", "count ratio error below 1e-10 at n=40", result);
}

#[test]
fn c9_cli_verify() {
    let start = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_elena"))
            .args(["verify", "--max-n", "12"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let result = if !first.status.success() {
        Err(format!(
            "exit status {:?}\n{}",
            first.status.code(),
            String::from_utf8_lossy(&first.stdout)
        ))
    } else if first.stdout != second.stdout {
        Err("output differs between runs".to_string())
    } else {
        within(Duration::from_secs(600), start)
    };
    criterion("9", "verify --max-n 12 exits 0, byte-deterministic", result);
}
