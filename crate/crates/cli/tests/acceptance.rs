//! One line per acceptance criterion. Runs without the libtest harness so
//! the report reads top to bottom; exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use borel::report::{Check, Status};
use borel::suites::{oeis, Suite, BFILE_DIR_VAR};
use borel_core::bijections::{rho, rho_inverse};
use borel_core::perm::Permutation;
use borel_core::series::{expand_series, solve_functional_equation, SeriesName};
use borel_core::triangles::{
    a_entry, borel_entry, borel_row, catalan_row, generalized_catalan,
    generalized_catalan_weighted, half_row_max, p_entry, BorelRoute,
};
use borel_core::{BigInt, BigUint};

const CATALAN: [&[u64]; 7] = [
    &[1],
    &[1, 1],
    &[1, 2, 2],
    &[1, 3, 5, 5],
    &[1, 4, 9, 14, 14],
    &[1, 5, 14, 28, 42, 42],
    &[1, 6, 20, 48, 90, 132, 132],
];

const BOREL: [&[u64]; 7] = [
    &[1],
    &[2, 1],
    &[5, 6, 2],
    &[14, 28, 20, 5],
    &[42, 120, 135, 70, 14],
    &[132, 495, 770, 616, 252, 42],
    &[429, 2002, 4004, 4368, 2730, 924, 132],
];

const A_ROWS: [&[u64]; 6] = [&[1], &[2], &[4, 1], &[8, 6], &[16, 24, 2], &[32, 80, 20]];

const P_ROWS: [&[u64]; 7] = [
    &[1],
    &[2],
    &[5, 1],
    &[14, 6],
    &[42, 28, 2],
    &[132, 120, 20],
    &[429, 495, 135, 5],
];

const GEN_CATALAN: [u64; 8] = [1, 1, 3, 13, 67, 381, 2307, 14589];

fn big(row: &[u64]) -> Vec<BigUint> {
    row.iter().map(|&x| BigUint::from(x)).collect()
}

fn check(name: &str, ok: bool, detail: impl Into<String>) -> Check {
    let detail = detail.into();
    if ok {
        Check::pass(name, "", detail)
    } else {
        Check::fail(
            name,
            "",
            if detail.is_empty() {
                "mismatch".into()
            } else {
                detail
            },
        )
    }
}

fn triangle_tables() -> Vec<Check> {
    let cat = (0..7).find(|&n| catalan_row(n) != big(CATALAN[n]));
    let bor = (0..7).find(|&n| borel_row(n) != big(BOREL[n]));
    vec![
        check(
            "Catalan rows 0-6",
            cat.is_none(),
            cat.map_or(String::new(), |n| format!("row {n}")),
        ),
        check(
            "Borel rows 0-6",
            bor.is_none(),
            bor.map_or(String::new(), |n| format!("row {n}")),
        ),
    ]
}

fn gencat_prefix() -> Vec<Check> {
    let want: Vec<BigUint> = GEN_CATALAN.iter().map(|&x| BigUint::from(x)).collect();
    let sums: Vec<BigUint> = (0..8).map(generalized_catalan).collect();
    let weighted: Vec<BigUint> = (0..8).map(generalized_catalan_weighted).collect();
    let g = expand_series(SeriesName::GenCatalan, 7);
    let series_ok = (0..8).all(|n| g.coeff(n, 0) == BigInt::from(GEN_CATALAN[n]));
    vec![
        check("Borel row sums", sums == want, ""),
        check("2-weighted Catalan row sums", weighted == want, ""),
        check("x-series to order 7", series_ok, ""),
    ]
}

fn functional_equation() -> Vec<Check> {
    let f = solve_functional_equation(12);
    let bad = (1..=12usize)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .find(|&(n, k)| {
            let want =
                borel_entry(n - 1, k, BorelRoute::ClosedForm).map_or(BigInt::from(0), BigInt::from);
            f.coeff(n, k) != want
        });
    vec![check(
        "coefficients equal B(n-1,k) for 1 <= n <= 12",
        bad.is_none(),
        bad.map_or(String::new(), |(n, k)| format!("x^{n} t^{k}")),
    )]
}

fn tree_flavors() -> Vec<Check> {
    let mut checks: Vec<Check> = Suite::Trees
        .run(None)
        .into_iter()
        .filter(|c| !c.name.contains("table"))
        .collect();
    let a_bad = (1..=6).find(|&n| {
        let row: Vec<BigUint> = (0..=half_row_max(n))
            .map(|k| a_entry(n, k).unwrap())
            .collect();
        row != big(A_ROWS[n - 1])
    });
    let p_bad = (1..=7).find(|&n| {
        let row: Vec<BigUint> = (0..=half_row_max(n))
            .map(|k| p_entry(n, k).unwrap())
            .collect();
        row != big(P_ROWS[n - 1])
    });
    checks.push(check(
        "a(n,k) rows 1-6",
        a_bad.is_none(),
        a_bad.map_or(String::new(), |n| format!("row {n}")),
    ));
    checks.push(check(
        "P(n,k) rows 1-7",
        p_bad.is_none(),
        p_bad.map_or(String::new(), |n| format!("row {n}")),
    ));
    checks
}

fn dumont_suite() -> Vec<Check> {
    Suite::Dumont.run(Some(6))
}

fn golden_cases() -> Vec<Check> {
    [
        ("21", "UD []"),
        ("4213", "UUDD []"),
        ("3421", "UDUD []"),
        ("2143", "UUDD [2]"),
    ]
    .into_iter()
    .map(|(perm, path)| {
        let p: Permutation = perm.parse().unwrap();
        let image = rho(&p).unwrap();
        let back = rho_inverse(&image).unwrap();
        check(
            &format!("rho({perm})"),
            image.to_string() == path && back == p,
            image.to_string(),
        )
    })
    .collect()
}

fn oeis_files() -> Vec<Check> {
    oeis(
        std::env::var_os(BFILE_DIR_VAR)
            .as_deref()
            .map(std::path::Path::new),
    )
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Vec<Check>,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

const CRITERIA: [Criterion; 13] = [
    Criterion {
        id: 1,
        title: "triangle tables",
        limit: Some(Duration::from_millis(1)),
        run: triangle_tables,
    },
    Criterion {
        id: 2,
        title: "route agreement n<=30",
        limit: secs(1),
        run: || Suite::Routes.run(Some(30)),
    },
    Criterion {
        id: 3,
        title: "generalized Catalan prefix",
        limit: None,
        run: gencat_prefix,
    },
    Criterion {
        id: 4,
        title: "functional equation to order 12",
        limit: secs(1),
        run: functional_equation,
    },
    Criterion {
        id: 5,
        title: "Catalan statistics n<=8",
        limit: secs(30),
        run: || Suite::Catalan.run(Some(8)),
    },
    Criterion {
        id: 6,
        title: "marked Dyck paths n<=7",
        limit: secs(30),
        run: || Suite::Marked.run(Some(7)),
    },
    Criterion {
        id: 7,
        title: "UDD-marked paths and leaf-marked trees",
        limit: secs(60),
        run: || Suite::Udd.run(Some(8)),
    },
    Criterion {
        id: 8,
        title: "tree flavors and a/P tables",
        limit: None,
        run: tree_flavors,
    },
    Criterion {
        id: 9,
        title: "matchings and rook placements n<=5",
        limit: secs(60),
        run: || Suite::Matchings.run(Some(5)),
    },
    Criterion {
        id: 10,
        title: "pattern-avoiding matching statistics n<=4",
        limit: secs(60),
        run: || Suite::Pairs.run(Some(4)),
    },
    Criterion {
        id: 11,
        title: "Dumont permutations and rho",
        limit: secs(120),
        run: dumont_suite,
    },
    Criterion {
        id: 12,
        title: "rho golden cases",
        limit: None,
        run: golden_cases,
    },
    Criterion {
        id: 13,
        title: "OEIS b-file prefixes",
        limit: None,
        run: oeis_files,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run));
        let elapsed = start.elapsed();
        let checks = match result {
            Ok(checks) => checks,
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                vec![Check::fail("panic", "", format!("panicked: {msg}"))]
            }
        };
        let too_slow = c.limit.is_some_and(|l| elapsed > l);
        let any_fail = checks.iter().any(|x| x.status == Status::Fail);
        let all_skipped = !checks.is_empty() && checks.iter().all(|x| x.status == Status::Skipped);
        let verdict = if any_fail || too_slow {
            failed += 1;
            "FAIL"
        } else if all_skipped {
            "SKIP"
        } else {
            "PASS"
        };
        let limit = c
            .limit
            .map_or("exact".to_string(), |l| format!("limit {l:?}"));
        println!(
            "{verdict} criterion {:>2}: {} ({elapsed:.2?}, {limit})",
            c.id, c.title
        );
        for x in &checks {
            match x.status {
                Status::Fail => println!("    FAIL {}: {}", x.name, x.counterexample),
                Status::Finding => {
                    for row in x.detail.split("; ") {
                        println!("    FINDING {}: {row}", x.name);
                    }
                }
                Status::Skipped if !all_skipped => println!("    SKIP {}: {}", x.name, x.detail),
                _ => {}
            }
        }
        if all_skipped {
            println!("    {}", checks[0].detail);
        }
        if too_slow {
            println!("    over the time limit");
        }
    }
    println!("{} criteria, {failed} failed", CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
