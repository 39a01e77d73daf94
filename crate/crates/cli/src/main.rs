use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use elena::dyck::{enumerate_dyck_paths_limited, is_nondecreasing, DEFAULT_DYCK_LIMIT};
use elena::elena::{
    count_elenas, enumerate_elenas_limited, word_to_dyck, word_to_tree, DEFAULT_ELENA_LIMIT,
};
use elena::genfunc::asymptotics::format_decimal;
use elena::genfunc::{asymptotics_report, DEFAULT_BIVARIATE_LIMIT};
use elena::height4::elena_to_height4;
use elena::stats::aggregate_limited;
use elena::verify::{self, statistic_series, VerifyOptions};
use elena::{Error, Statistic};

#[derive(Parser)]
#[command(
    name = "elena",
    version,
    about = "Nondecreasing Dyck paths and Elena trees"
)]
struct Cli {
    #[command(flatten)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Comma-separated output
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// JSON output
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Count Elenas and nondecreasing Dyck paths for n = 1..=max-n
    Count {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Largest semilength enumerated for the Dyck-path count
        #[arg(long, default_value_t = DEFAULT_DYCK_LIMIT)]
        dyck_limit: usize,
    },
    /// List every Elena with n nodes
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Word)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ELENA_LIMIT)]
        limit: usize,
    },
    /// Brute-force statistic totals over all Elenas with n nodes
    Stats {
        #[arg(long)]
        n: usize,
        /// Compare each total with its series coefficient
        #[arg(long)]
        compare: bool,
        #[arg(long, default_value_t = DEFAULT_ELENA_LIMIT)]
        limit: usize,
    },
    /// Run the full cross-check suite
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Series orders: descendants Nz, master Nz, master Nw, w=1 Nz
        #[arg(long, default_value = "8,30,10,50")]
        orders: String,
    },
    /// Averages at n against their limiting constants
    Table {
        #[arg(long, default_value_t = 100)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Word,
    Dyck,
    Tree,
    Height4,
}

enum Failure {
    Verification,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = execute(cli, &mut out);
    let result = result.and(out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Count { max_n, dyck_limit } => count(out, cli.output, max_n as usize, dyck_limit),
        Command::Enumerate { n, format, limit } => enumerate(out, cli.output, n, format, limit),
        Command::Stats { n, compare, limit } => stats(out, cli.output, n, compare, limit),
        Command::Verify { max_n, orders } => run_verify(out, cli.output, max_n, &orders),
        Command::Table { n } => table(out, cli.output, n),
    }
}

fn count(out: &mut impl Write, fmt: Output, max_n: usize, dyck_limit: usize) -> Outcome {
    if max_n - 1 > dyck_limit {
        return Err(Error::LimitExceeded {
            what: "Dyck path semilength",
            requested: max_n - 1,
            limit: dyck_limit,
        }
        .into());
    }
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let dyck = enumerate_dyck_paths_limited(n - 1, dyck_limit)?
            .filter(is_nondecreasing)
            .count();
        rows.push((n, count_elenas(n), dyck));
    }
    if fmt.json {
        let rows: Vec<_> = rows
            .iter()
            .map(|(n, c, d)| json!({"n": n, "count": number(c), "nondecreasing_dyck": d}))
            .collect();
        writeln!(out, "{}", serde_json::Value::Array(rows))?;
        return Ok(());
    }
    if fmt.csv {
        writeln!(out, "n,count,nondecreasing_dyck")?;
    }
    let sep = if fmt.csv { "," } else { ", " };
    for (n, c, d) in rows {
        writeln!(out, "{n}{sep}{c}{sep}{d}")?;
    }
    Ok(())
}

fn number(v: &impl ToString) -> serde_json::Value {
    serde_json::Value::Number(
        v.to_string()
            .parse()
            .expect("integers are valid JSON numbers"),
    )
}

fn enumerate(out: &mut impl Write, fmt: Output, n: usize, format: Format, limit: usize) -> Outcome {
    if fmt.csv {
        let header = match format {
            Format::Word => "word",
            Format::Dyck => "dyck",
            Format::Tree => "tree",
            Format::Height4 => "height4",
        };
        writeln!(out, "{header}")?;
    }
    for w in enumerate_elenas_limited(n, limit)? {
        let line = match format {
            Format::Word => w.render(),
            Format::Dyck => word_to_dyck(&w).render(),
            Format::Tree => word_to_tree(&w).render(),
            Format::Height4 => elena_to_height4(&w).render(),
        };
        if fmt.json {
            writeln!(out, "{}", json!(line))?;
        } else {
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

fn stats(out: &mut impl Write, fmt: Output, n: usize, compare: bool, limit: usize) -> Outcome {
    let row = aggregate_limited(n, limit)?;
    if !compare {
        if fmt.json {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&row).expect("rows serialize")
            )?;
        } else if fmt.csv {
            writeln!(out, "{}", elena::AggregateRow::CSV_HEADER)?;
            writeln!(out, "{}", row.to_csv())?;
        } else {
            writeln!(out, "n = {}, count = {}", row.n, row.count)?;
            for stat in Statistic::ALL {
                writeln!(out, "{:<12} {}", stat.column(), row.total(stat))?;
            }
        }
        return Ok(());
    }

    let series = statistic_series(n);
    let lines: Vec<_> = series
        .iter()
        .map(|(stat, coeffs)| {
            let brute = row.total_int(*stat);
            let verdict = if brute == coeffs[n] {
                "MATCH"
            } else {
                "MISMATCH"
            };
            (*stat, brute, coeffs[n].clone(), verdict)
        })
        .collect();
    if fmt.json {
        let cmp: Vec<_> = lines
            .iter()
            .map(|(s, b, g, v)| {
                json!({"statistic": s.column(), "brute_force": number(b), "series": number(g), "verdict": v})
            })
            .collect();
        let mut value = serde_json::to_value(&row).expect("rows serialize");
        value["comparison"] = serde_json::Value::Array(cmp);
        writeln!(out, "{value}")?;
    } else if fmt.csv {
        writeln!(out, "statistic,brute_force,series,verdict")?;
        for (s, b, g, v) in &lines {
            writeln!(out, "{},{b},{g},{v}", s.column())?;
        }
    } else {
        writeln!(out, "n = {}, count = {}", row.n, row.count)?;
        writeln!(
            out,
            "{:<12} {:>20} {:>20}  verdict",
            "statistic", "brute force", "series"
        )?;
        for (s, b, g, v) in &lines {
            writeln!(
                out,
                "{:<12} {:>20} {:>20}  {v}",
                s.column(),
                b.to_string(),
                g.to_string()
            )?;
        }
    }
    if lines.iter().all(|l| l.3 == "MATCH") {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn parse_orders(s: &str) -> Result<[usize; 4], Failure> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("--orders: {e}")))?;
    parts
        .try_into()
        .map_err(|_| Failure::Usage("--orders takes four comma-separated integers".into()))
}

fn run_verify(out: &mut impl Write, fmt: Output, max_n: usize, orders: &str) -> Outcome {
    let [descendants_nz, master_nz, master_nw, w1_nz] = parse_orders(orders)?;
    if max_n > DEFAULT_ELENA_LIMIT {
        return Err(Error::LimitExceeded {
            what: "verification size",
            requested: max_n,
            limit: DEFAULT_ELENA_LIMIT,
        }
        .into());
    }
    if descendants_nz > DEFAULT_BIVARIATE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "bivariate z-order",
            requested: descendants_nz,
            limit: DEFAULT_BIVARIATE_LIMIT,
        }
        .into());
    }
    let report = verify::run(&VerifyOptions {
        max_n,
        descendants_nz,
        master_nz,
        master_nw,
        w1_nz,
    });
    if fmt.json {
        let v = json!({"passed": report.passed(), "checks": report.outcomes});
        writeln!(out, "{v}")?;
    } else if fmt.csv {
        writeln!(out, "verdict,module,operation,scope,failure")?;
        for o in &report.outcomes {
            let verdict = if o.passed() { "PASS" } else { "FAIL" };
            let failure = o.failure.as_deref().unwrap_or("");
            writeln!(
                out,
                "{verdict},{},{},{},{}",
                o.module,
                o.operation,
                csv_field(&o.scope),
                csv_field(failure)
            )?;
        }
    } else {
        writeln!(out, "{report}")?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Truncate to `decimals` places, matching `format_decimal`.
fn truncated(x: f64, decimals: usize) -> String {
    let s = format!("{x:.15}");
    let dot = s.find('.').expect("fixed-point output has a point");
    s[..dot + 1 + decimals].to_string()
}

fn table(out: &mut impl Write, fmt: Output, n: usize) -> Outcome {
    let rows = asymptotics_report(n)?;
    let exact = |r: &elena::genfunc::AsymptoticRow| {
        r.exact
            .as_ref()
            .map_or_else(|| "undefined".to_string(), |x| format_decimal(x, 10))
    };
    if fmt.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&rows).expect("rows serialize")
        )?;
    } else if fmt.csv {
        writeln!(out, "statistic,kind,convergent,limit,deviation")?;
        for r in &rows {
            let kind = serde_json::to_value(r.kind).expect("kinds serialize");
            writeln!(
                out,
                "{},{},{},{},{:.3e}",
                r.label,
                kind.as_str().unwrap_or_default(),
                exact(r),
                truncated(r.limit, 10),
                r.deviation
            )?;
        }
    } else {
        writeln!(out, "n = {n}")?;
        writeln!(
            out,
            "{:<26} {:<12} {:>16} {:>14} {:>10}",
            "statistic", "convergent", "value", "limit", "deviation"
        )?;
        for r in &rows {
            let kind = serde_json::to_value(r.kind).expect("kinds serialize");
            writeln!(
                out,
                "{:<26} {:<12} {:>16} {:>14} {:>10.3e}",
                r.label,
                kind.as_str().unwrap_or_default(),
                exact(r),
                truncated(r.limit, 10),
                r.deviation
            )?;
        }
    }
    Ok(())
}
