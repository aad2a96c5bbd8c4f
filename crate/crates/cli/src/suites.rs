//! The verification suites behind `borel verify`. Each suite checks a
//! family of identities exhaustively up to a size cap and reports one
//! [`Check`] per identity.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use borel_core::bijections::{
    leafmarked_to_uddpath, rho, rho_case_of_path, rho_case_of_permutation, rho_inverse,
    uddpath_to_leafmarked,
};
use borel_core::dumont::{
    avoids_forbidden, block_decompose, enumerate_dumont, enumerate_dumont_avoiding, is_primitive,
};
use borel_core::dyck::{
    count_ballot_paths, dyck_statistic, enumerate_dyck, enumerate_ndpf, enumerate_plane_forests,
    ndpf_statistic, DyckStat, NdpfStat,
};
use borel_core::histogram::distribution;
use borel_core::marked::{
    count_udd_marked, enumerate_marked_dyck, enumerate_marked_trees, PathFlavor, TreeFlavor,
};
use borel_core::matchings::{
    crossing_to_marked_path, enumerate_avoiding, enumerate_matchings, marked_path_to_crossing,
    marked_path_to_nesting, matching_to_rook, nesting_to_marked_path, pair_statistic,
    rook_to_matching, AvoidancePair,
};
use borel_core::perm::Permutation;
use borel_core::series::{expand_series, solve_functional_equation, BivariateSeries, SeriesName};
use borel_core::tree::enumerate_binary_trees;
use borel_core::triangles::{
    a_entry, binomial, borel_entry, borel_row, catalan_entry, catalan_number, catalan_row,
    generalized_catalan, generalized_catalan_weighted, half_row_max, p_entry, BorelRoute,
    CatalanRoute,
};
use borel_core::{BigInt, BigUint, Histogram};

use crate::bfile::{compare, BFile, Comparison, OeisSeq};
use crate::error::CliError;
use crate::report::{Check, Status, VerificationReport};

/// Catalan's triangle, rows 0 to 6, as reference values.
pub const CATALAN_TABLE: [&[u64]; 7] = [
    &[1],
    &[1, 1],
    &[1, 2, 2],
    &[1, 3, 5, 5],
    &[1, 4, 9, 14, 14],
    &[1, 5, 14, 28, 42, 42],
    &[1, 6, 20, 48, 90, 132, 132],
];

/// Borel's triangle, rows 0 to 6, as reference values.
pub const BOREL_TABLE: [&[u64]; 7] = [
    &[1],
    &[2, 1],
    &[5, 6, 2],
    &[14, 28, 20, 5],
    &[42, 120, 135, 70, 14],
    &[132, 495, 770, 616, 252, 42],
    &[429, 2002, 4004, 4368, 2730, 924, 132],
];

/// `a(n, k)` for n = 1..6.
pub const A_TABLE: [&[u64]; 6] = [&[1], &[2], &[4, 1], &[8, 6], &[16, 24, 2], &[32, 80, 20]];

/// `P(n, k)` for n = 1..7.
pub const P_TABLE: [&[u64]; 7] = [
    &[1],
    &[2],
    &[5, 1],
    &[14, 6],
    &[42, 28, 2],
    &[132, 120, 20],
    &[429, 495, 135, 5],
];

pub const GEN_CATALAN_PREFIX: [u64; 8] = [1, 1, 3, 13, 67, 381, 2307, 14589];

/// Environment variable naming a directory of b-files such as
/// `b064062.txt`.
pub const BFILE_DIR_VAR: &str = "BOREL_BFILE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Triangles,
    Routes,
    Gencat,
    Functional,
    Catalan,
    Marked,
    Udd,
    Trees,
    Matchings,
    Pairs,
    Dumont,
    Golden,
    Oeis,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Triangles,
        Suite::Routes,
        Suite::Gencat,
        Suite::Functional,
        Suite::Catalan,
        Suite::Marked,
        Suite::Udd,
        Suite::Trees,
        Suite::Matchings,
        Suite::Pairs,
        Suite::Dumont,
        Suite::Golden,
        Suite::Oeis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Triangles => "triangles",
            Suite::Routes => "routes",
            Suite::Gencat => "gencat",
            Suite::Functional => "functional",
            Suite::Catalan => "catalan",
            Suite::Marked => "marked",
            Suite::Udd => "udd",
            Suite::Trees => "trees",
            Suite::Matchings => "matchings",
            Suite::Pairs => "pairs",
            Suite::Dumont => "dumont",
            Suite::Golden => "golden",
            Suite::Oeis => "oeis",
        }
    }

    /// Size cap used when `--max-n` is not given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Triangles => 6,
            Suite::Routes => 30,
            Suite::Gencat => 7,
            Suite::Functional => 12,
            Suite::Catalan => 8,
            Suite::Marked => 7,
            Suite::Udd => 8,
            Suite::Trees => 6,
            Suite::Matchings => 5,
            Suite::Pairs => 4,
            Suite::Dumont => 6,
            Suite::Golden | Suite::Oeis => 0,
        }
    }

    pub fn run(self, max_n: Option<usize>) -> Vec<Check> {
        let cap = max_n.unwrap_or(self.default_max_n());
        match self {
            Suite::Triangles => triangles(cap),
            Suite::Routes => routes(cap),
            Suite::Gencat => gencat(cap),
            Suite::Functional => functional(cap),
            Suite::Catalan => catalan(cap),
            Suite::Marked => marked(cap),
            Suite::Udd => udd(cap),
            Suite::Trees => trees(cap),
            Suite::Matchings => matchings(cap),
            Suite::Pairs => pairs(cap),
            Suite::Dumont => dumont(cap),
            Suite::Golden => golden(),
            Suite::Oeis => oeis(std::env::var_os(BFILE_DIR_VAR).as_deref().map(Path::new)),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown suite {s:?}")))
    }
}

/// Runs the suites on worker threads and merges their checks in the given
/// order.
pub fn run_suites(suites: &[Suite], max_n: Option<usize>) -> VerificationReport {
    let checks = std::thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| s.spawn(move || suite.run(max_n)))
            .collect();
        handles
            .into_iter()
            .zip(suites)
            .flat_map(|(h, suite)| {
                h.join().unwrap_or_else(|e| {
                    let msg = e
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_default();
                    vec![Check::fail(suite.name(), "", format!("panicked: {msg}"))]
                })
            })
            .collect()
    });
    VerificationReport { checks }
}

fn big_row(row: &[u64]) -> Vec<BigUint> {
    row.iter().map(|&x| BigUint::from(x)).collect()
}

fn join<T: fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn hist_row(h: &Histogram, len: usize) -> String {
    join(h.to_row(len))
}

/// `Ok` iff `h` equals `row` exactly; the error shows both.
fn expect_row(h: &Histogram, row: &[BigUint], what: impl fmt::Display) -> Result<(), String> {
    if h.equals_row(row) {
        Ok(())
    } else {
        let len = row.len().max(h.iter().last().map_or(0, |(k, _)| k + 1));
        Err(format!(
            "{what}: got {} expected {}",
            hist_row(h, len),
            join(row)
        ))
    }
}

fn triangles(cap: usize) -> Vec<Check> {
    let last = cap.min(6);
    let sizes = format!("rows 0..={last}");
    let table = |name: &str, reference: &[&[u64]], row: fn(usize) -> Vec<BigUint>| {
        let result = (0..=last)
            .try_for_each(|n| {
                let got = row(n);
                if got == big_row(reference[n]) {
                    Ok(())
                } else {
                    Err(format!(
                        "row {n}: got {} expected {}",
                        join(&got),
                        join(reference[n])
                    ))
                }
            })
            .map(|()| join(row(last)));
        Check::from_result(name, sizes.clone(), result)
    };
    vec![
        table(
            "Catalan triangle matches the printed table",
            &CATALAN_TABLE,
            catalan_row,
        ),
        table(
            "Borel triangle matches the printed table",
            &BOREL_TABLE,
            borel_row,
        ),
    ]
}

fn routes(cap: usize) -> Vec<Check> {
    let sizes = format!("n<={cap}");
    let catalan = (0..=cap).try_for_each(|n| {
        (0..=n).try_for_each(|k| {
            let a = catalan_entry(n, k, CatalanRoute::Recurrence).map_err(|e| e.to_string())?;
            let b = catalan_entry(n, k, CatalanRoute::ClosedForm).map_err(|e| e.to_string())?;
            if a == b {
                Ok(())
            } else {
                Err(format!("C({n},{k}): recurrence {a}, closed form {b}"))
            }
        })
    });
    let borel = (0..=cap).try_for_each(|n| {
        (0..=n).try_for_each(|k| {
            let a = borel_entry(n, k, BorelRoute::Transform).map_err(|e| e.to_string())?;
            let b = borel_entry(n, k, BorelRoute::ClosedForm).map_err(|e| e.to_string())?;
            if a == b {
                Ok(())
            } else {
                Err(format!("B({n},{k}): transform {a}, closed form {b}"))
            }
        })
    });
    vec![
        Check::from_result(
            "Catalan recurrence equals closed form",
            sizes.clone(),
            catalan.map(|()| String::new()),
        ),
        Check::from_result(
            "Borel transform equals closed form",
            sizes,
            borel.map(|()| String::new()),
        ),
    ]
}

fn gencat(cap: usize) -> Vec<Check> {
    let sizes = format!("n<={cap}");
    let series = expand_series(SeriesName::GenCatalan, cap);
    type Route<'a> = Box<dyn Fn(usize) -> BigInt + 'a>;
    let routes: [(&str, Route); 3] = [
        (
            "generalized Catalan as Borel row sums",
            Box::new(|n| generalized_catalan(n).into()),
        ),
        (
            "generalized Catalan as 2-weighted Catalan row sums",
            Box::new(|n| generalized_catalan_weighted(n).into()),
        ),
        (
            "generalized Catalan from 1/(1 - x C(2x))",
            Box::new(|n| series.coeff(n, 0)),
        ),
    ];
    routes
        .into_iter()
        .map(|(name, f)| {
            let values: Vec<BigInt> = (0..=cap).map(&f).collect();
            let bad = values.iter().enumerate().find(|&(n, v)| {
                GEN_CATALAN_PREFIX
                    .get(n)
                    .is_some_and(|&p| *v != BigInt::from(p))
                    || *v != BigInt::from(generalized_catalan(n))
            });
            match bad {
                None => Check::pass(name, sizes.clone(), join(&values)),
                Some((n, v)) => Check::fail(name, sizes.clone(), format!("n={n}: got {v}")),
            }
        })
        .collect()
}

fn functional(cap: usize) -> Vec<Check> {
    let sizes = format!("order {cap}");
    let f = solve_functional_equation(cap);
    let borel = (1..=cap).try_for_each(|n| {
        (0..=n).try_for_each(|k| {
            let want = if k < n {
                BigInt::from(borel_entry(n - 1, k, BorelRoute::ClosedForm).expect("k < n"))
            } else {
                BigInt::from(0)
            };
            let got = f.coeff(n, k);
            if got == want {
                Ok(())
            } else {
                Err(format!("x^{n} t^{k}: got {got} expected {want}"))
            }
        })
    });
    let constant = if f.coeff(0, 0) == BigInt::from(1) {
        borel
    } else {
        Err("constant term is not 1".to_string())
    };
    let same_as_f = if f == expand_series(SeriesName::F, cap) {
        Ok(String::new())
    } else {
        Err("fixed point differs from 1 + x B(t,x)".to_string())
    };
    let p = expand_series(SeriesName::P, cap);
    let a = expand_series(SeriesName::A, cap);
    let one_plus_t = BivariateSeries::one(cap).add(&BivariateSeries::t(cap));
    let p_routes = match a.substitute(&one_plus_t, &BivariateSeries::x(cap)) {
        Ok(shifted) if shifted == p => Ok(String::new()),
        Ok(_) => Err("A(1+t,x) differs from x B(tx,x)".to_string()),
        Err(e) => Err(e.to_string()),
    };
    let arrays = (1..=cap).try_for_each(|n| {
        (0..=half_row_max(n)).try_for_each(|k| {
            let (ea, ep) = (
                a_entry(n, k).expect("in range"),
                p_entry(n, k).expect("in range"),
            );
            if a.coeff(n, k) != BigInt::from(ea) || p.coeff(n, k) != BigInt::from(ep) {
                Err(format!("x^{n} t^{k}"))
            } else {
                Ok(())
            }
        })
    });
    vec![
        Check::from_result(
            "functional equation coefficients equal B(n-1,k)",
            sizes.clone(),
            constant.map(|()| String::new()),
        ),
        Check::from_result(
            "functional equation equals 1 + x B(t,x)",
            sizes.clone(),
            same_as_f,
        ),
        Check::from_result("P(t,x) = x B(tx,x) = A(1+t,x)", sizes.clone(), p_routes),
        Check::from_result(
            "A and P series coefficients equal a(n,k) and P(n,k)",
            sizes,
            arrays.map(|()| String::new()),
        ),
    ]
}

fn catalan(cap: usize) -> Vec<Check> {
    let sizes = format!("n<={cap}");
    let mut checks = Vec::new();
    let ballot = (0..=cap).try_for_each(|n| {
        (0..=n).try_for_each(|k| {
            let walk = count_ballot_paths(n, k).map_err(|e| e.to_string())?;
            let want = catalan_entry(n, k, CatalanRoute::ClosedForm).expect("k <= n");
            if walk == want {
                Ok(())
            } else {
                Err(format!("({n},{k}): walked {walk} expected {want}"))
            }
        })
    });
    checks.push(Check::from_result(
        "ballot paths below y=x",
        sizes.clone(),
        ballot.map(|()| String::new()),
    ));

    let dyck = |stat: DyckStat, flip: bool| {
        (0..=cap).try_for_each(|n| {
            let h = distribution(enumerate_dyck(n + 1), |p| {
                let v = dyck_statistic(p, stat).expect("nonempty path");
                if flip {
                    n + 1 - v
                } else {
                    v
                }
            });
            expect_row(&h, &catalan_row(n), format_args!("n={n}"))
        })
    };
    for (name, stat, flip) in [
        (
            "Dyck paths by up-steps off the ground",
            DyckStat::UpNotGround,
            false,
        ),
        (
            "Dyck paths by down-steps off the ground",
            DyckStat::DownNotGround,
            false,
        ),
        ("Dyck paths by returns", DyckStat::Returns, true),
        (
            "Dyck paths by first peak height",
            DyckStat::FirstPeakHeight,
            true,
        ),
        (
            "Dyck paths by last peak height",
            DyckStat::LastPeakHeight,
            true,
        ),
        (
            "Dyck paths by length of the final descent",
            DyckStat::LastRunLength,
            true,
        ),
    ] {
        checks.push(Check::from_result(
            name,
            sizes.clone(),
            dyck(stat, flip).map(|()| String::new()),
        ));
    }

    let forests = (0..=cap).try_for_each(|n| {
        let h = distribution(enumerate_plane_forests(n + 1), |f| n + 1 - f.components());
        expect_row(&h, &catalan_row(n), format_args!("n={n}"))
    });
    checks.push(Check::from_result(
        "plane forests by number of trees",
        sizes.clone(),
        forests.map(|()| String::new()),
    ));

    let ndpf = |stat: NdpfStat| {
        (0..=cap).try_for_each(|n| {
            let h = distribution(enumerate_ndpf(n + 1), |f| {
                let v = ndpf_statistic(f, stat);
                match stat {
                    NdpfStat::MaxElement => v - 1,
                    NdpfStat::UnluckyCount => v,
                    NdpfStat::OnesCount => n + 1 - v,
                }
            });
            expect_row(&h, &catalan_row(n), format_args!("n={n}"))
        })
    };
    for (name, stat) in [
        ("parking functions by maximal element", NdpfStat::MaxElement),
        ("parking functions by unlucky cars", NdpfStat::UnluckyCount),
        ("parking functions by number of ones", NdpfStat::OnesCount),
    ] {
        checks.push(Check::from_result(
            name,
            sizes.clone(),
            ndpf(stat).map(|()| String::new()),
        ));
    }
    checks
}

fn marked(cap: usize) -> Vec<Check> {
    let sizes = format!("n<={cap}");
    [
        (
            "marked down-steps off the ground",
            PathFlavor::DownNotGround,
        ),
        ("marked up-steps off the ground", PathFlavor::UpNotGround),
    ]
    .into_iter()
    .map(|(name, flavor)| {
        let result = (0..=cap).try_for_each(|n| {
            let h = distribution(enumerate_marked_dyck(n + 1, flavor), |m| m.marks().len());
            expect_row(&h, &borel_row(n), format_args!("n={n}"))
        });
        Check::from_result(name, sizes.clone(), result.map(|()| join(borel_row(cap))))
    })
    .collect()
}

fn udd(cap: usize) -> Vec<Check> {
    let counts = (1..=cap).try_for_each(|size| {
        (0..size).try_for_each(|k| {
            let n = size - 1 - k;
            let got = count_udd_marked(size, k);
            let want = borel_entry(n, k, BorelRoute::ClosedForm).unwrap_or_default();
            if got == want {
                Ok(())
            } else {
                Err(format!(
                    "semilength {size}, {k} marks: got {got} expected {want}"
                ))
            }
        })
    });
    let unmarked_cap = cap.saturating_sub(2);
    let round_trip = (0..=unmarked_cap).try_for_each(|u| {
        let mut images = BTreeSet::new();
        for t in enumerate_marked_trees(TreeFlavor::LeafMarked, u) {
            let p = leafmarked_to_uddpath(&t).map_err(|e| format!("{t}: {e}"))?;
            if p.marks().len() != t.marks().len() || p.semilength() != t.tree().size() {
                return Err(format!("{t} -> {p}: sizes not preserved"));
            }
            let back = uddpath_to_leafmarked(&p).map_err(|e| format!("{p}: {e}"))?;
            if back != t {
                return Err(format!("{t} -> {p} -> {back}"));
            }
            images.insert(p);
        }
        let expected: usize = (0..u.max(1))
            .map(|k| usize::try_from(count_udd_marked(u + k, k)).expect("small"))
            .sum();
        if images.len() == expected {
            Ok(())
        } else {
            Err(format!(
                "unmarked {u}: {} images, {expected} UDD-marked paths",
                images.len()
            ))
        }
    });
    vec![
        Check::from_result(
            "UDD-marked paths counted by B(n,k)",
            format!("n+k+1<={cap}"),
            counts.map(|()| String::new()),
        ),
        Check::from_result(
            "leaf-marked trees and UDD-marked paths round trip",
            format!("unmarked<={unmarked_cap}"),
            round_trip.map(|()| String::new()),
        ),
    ]
}

fn trees(cap: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for (name, flavor) in [
        ("leaf-marked trees by marks", TreeFlavor::LeafMarked),
        ("branch-marked trees by marks", TreeFlavor::BranchMarked),
    ] {
        let result = (0..cap).try_for_each(|n| {
            let h = distribution(enumerate_marked_trees(flavor, n + 1), |m| m.marks().len());
            expect_row(&h, &borel_row(n), format_args!("unmarked {}", n + 1))
        });
        checks.push(Check::from_result(
            name,
            format!("unmarked<={cap}"),
            result.map(|()| String::new()),
        ));
    }
    let spine = (0..=cap).try_for_each(|n| {
        let h = distribution(
            enumerate_marked_trees(TreeFlavor::RightSpineFree, n + 1),
            |m| m.marks().len(),
        );
        expect_row(&h, &borel_row(n), format_args!("vertices {}", n + 1))
    });
    checks.push(Check::from_result(
        "right-spine-free marked trees by marks",
        format!("vertices<={}", cap + 1),
        spine.map(|()| String::new()),
    ));

    let a_rows = (1..=A_TABLE.len()).try_for_each(|n| {
        let closed: Vec<BigUint> = (0..=half_row_max(n))
            .map(|k| a_entry(n, k).expect("in range"))
            .collect();
        let h = distribution(enumerate_binary_trees(n), |t| t.leaves().len() - 1);
        if closed != big_row(A_TABLE[n - 1]) {
            return Err(format!("row {n}: closed form {}", join(&closed)));
        }
        expect_row(&h, &closed, format_args!("row {n} by enumeration"))
    });
    checks.push(Check::from_result(
        "a(n,k) table",
        "rows 1..=6",
        a_rows.map(|()| String::new()),
    ));

    let p_rows = (1..=P_TABLE.len()).try_for_each(|n| {
        let closed: Vec<BigUint> = (0..=half_row_max(n))
            .map(|k| p_entry(n, k).expect("in range"))
            .collect();
        if closed != big_row(P_TABLE[n - 1]) {
            return Err(format!("row {n}: closed form {}", join(&closed)));
        }
        let mut counted = vec![BigUint::from(0u8); closed.len()];
        for t in enumerate_binary_trees(n) {
            let free = (t.leaves().len() - 1) as u64;
            for (k, slot) in counted.iter_mut().enumerate() {
                *slot += binomial(free, k as u64);
            }
        }
        if counted == closed {
            Ok(())
        } else {
            Err(format!("row {n} by enumeration: {}", join(&counted)))
        }
    });
    checks.push(Check::from_result(
        "P(n,k) table",
        "rows 1..=7",
        p_rows.map(|()| String::new()),
    ));
    checks
}

fn matchings(cap: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let round_trip = (0..=cap).try_for_each(|n| {
        for m in enumerate_matchings(n) {
            let r = matching_to_rook(&m);
            match rook_to_matching(&r) {
                Ok(back) if back == m => {}
                _ => return Err(format!("{m} -> {r}")),
            }
            if r.nesting_pairs().len() != m.nestings() || r.crossing_pairs().len() != m.crossings()
            {
                return Err(format!("{m}: rook pair counts differ"));
            }
        }
        Ok(())
    });
    checks.push(Check::from_result(
        "matching and rook placement round trip",
        format!("n<={cap}"),
        round_trip.map(|()| String::new()),
    ));

    let pats = |a: &str, b: &str| -> [Permutation; 2] {
        [a.parse().expect("pattern"), b.parse().expect("pattern")]
    };
    let nest = pats("123", "213");
    let cross = pats("231", "321");
    let by_stat = |patterns: &[Permutation; 2],
                   stat: fn(&borel_core::matchings::Matching) -> usize| {
        (0..cap).try_for_each(|n| {
            let h = distribution(enumerate_avoiding(n + 1, patterns), stat);
            expect_row(&h, &borel_row(n), format_args!("n+1={}", n + 1))
        })
    };
    checks.push(Check::from_result(
        "(123,213)-avoiding matchings by nestings",
        format!("n+1<={cap}"),
        by_stat(&nest, |m| m.nestings()).map(|()| String::new()),
    ));
    checks.push(Check::from_result(
        "(231,321)-avoiding matchings by crossings",
        format!("n+1<={cap}"),
        by_stat(&cross, |m| m.crossings()).map(|()| String::new()),
    ));

    let nest_bij = (1..=cap).try_for_each(|n| {
        for m in enumerate_avoiding(n, &nest) {
            let r = matching_to_rook(&m);
            let p = nesting_to_marked_path(&r).map_err(|e| format!("{r}: {e}"))?;
            match marked_path_to_nesting(&p) {
                Ok(back) if back == r && p.marks().len() == m.nestings() => {}
                _ => return Err(format!("{r} -> {p}")),
            }
        }
        Ok(())
    });
    checks.push(Check::from_result(
        "nesting placements and down-marked paths round trip",
        format!("size<={cap}"),
        nest_bij.map(|()| String::new()),
    ));
    let cross_bij = (1..=cap).try_for_each(|n| {
        for m in enumerate_avoiding(n, &cross) {
            let r = matching_to_rook(&m);
            let p = crossing_to_marked_path(&r).map_err(|e| format!("{r}: {e}"))?;
            match marked_path_to_crossing(&p) {
                Ok(back) if back == r && p.marks().len() == m.crossings() => {}
                _ => return Err(format!("{r} -> {p}")),
            }
        }
        Ok(())
    });
    checks.push(Check::from_result(
        "crossing placements and up-marked paths round trip",
        format!("size<={cap}"),
        cross_bij.map(|()| String::new()),
    ));
    checks
}

fn pairs(cap: usize) -> Vec<Check> {
    AvoidancePair::ALL
        .into_iter()
        .map(|pair| {
            let name = format!("{{{pair}}}-avoiding matchings by the listed statistic");
            let sizes = format!("n<={cap}");
            let mut mismatches = Vec::new();
            for n in 0..=cap {
                let class = enumerate_avoiding(n + 1, &pair.patterns());
                let mut h = Histogram::new();
                for m in &class {
                    match pair_statistic(pair, m) {
                        Ok(s) => h.add(s),
                        Err(e) => return Check::fail(name, sizes, format!("{m}: {e}")),
                    }
                }
                if let Err(e) = expect_row(&h, &borel_row(n), format_args!("n={n}")) {
                    mismatches.push(e);
                }
            }
            if mismatches.is_empty() {
                Check::pass(name, sizes, "")
            } else {
                Check::pass(name, sizes, "").with_status(Status::Finding, mismatches.join("; "))
            }
        })
        .collect()
}

fn dumont(cap: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let classes: Vec<Vec<Permutation>> = (0..=cap)
        .map(|n| enumerate_dumont_avoiding(2 * n).expect("even length"))
        .collect();

    if cap >= 2 {
        let four: Vec<String> = enumerate_dumont(4)
            .expect("even")
            .iter()
            .map(|p| p.to_string())
            .collect();
        let result = if four == ["2143", "3421", "4213"] {
            Ok(four.join(","))
        } else {
            Err(four.join(","))
        };
        checks.push(Check::from_result(
            "Dumont permutations of length 4",
            "2n=4",
            result,
        ));
    }
    if cap >= 3 {
        let six = enumerate_dumont(6).expect("even");
        let excluded: BTreeSet<String> = six
            .iter()
            .filter(|p| !avoids_forbidden(p))
            .map(|p| p.to_string())
            .collect();
        let want: BTreeSet<String> = ["364215", "421563", "436215", "421635"]
            .map(String::from)
            .into();
        let result = if six.len() == 17 && classes[3].len() == 13 && excluded == want {
            Ok(format!(
                "17 total, 13 avoiding, excluded {}",
                join(&excluded)
            ))
        } else {
            Err(format!(
                "{} total, {} avoiding, excluded {}",
                six.len(),
                classes[3].len(),
                join(&excluded)
            ))
        };
        checks.push(Check::from_result(
            "Dumont permutations of length 6",
            "2n=6",
            result,
        ));
    }
    let sizes = format!("n<={cap}");
    let counts: Vec<usize> = classes.iter().skip(1).map(Vec::len).collect();
    let class_sizes = (1..=cap)
        .find(|&n| BigUint::from(classes[n].len()) != generalized_catalan(n))
        .map_or(Ok(join(&counts)), |n| {
            Err(format!("n={n}: {} members", classes[n].len()))
        });
    checks.push(Check::from_result(
        "(2413,3142)-avoiding class sizes are generalized Catalan numbers",
        sizes.clone(),
        class_sizes,
    ));

    let invariants = (1..=cap).try_for_each(|n| {
        classes[n].iter().try_for_each(|p| {
            let d = block_decompose(p).map_err(|e| format!("{p}: {e}"))?;
            d.check(p).map_err(|e| format!("{p}: {e}"))
        })
    });
    checks.push(Check::from_result(
        "block decomposition invariants",
        sizes.clone(),
        invariants.map(|()| String::new()),
    ));

    let rho_cap = cap.min(5);
    let bijective = (0..=rho_cap).try_for_each(|n| {
        let mut images = BTreeSet::new();
        for p in &classes[n] {
            let image = rho(p).map_err(|e| format!("{p}: {e}"))?;
            match rho_inverse(&image) {
                Ok(back) if &back == p => {}
                _ => return Err(format!("{p} -> {image}")),
            }
            images.insert(image);
        }
        let all: BTreeSet<_> = enumerate_marked_dyck(n, PathFlavor::DownNotGround).collect();
        if images == all {
            Ok(())
        } else {
            Err(format!(
                "n={n}: image has {} of {} paths",
                images.len(),
                all.len()
            ))
        }
    });
    checks.push(Check::from_result(
        "rho is a bijection with its inverse",
        format!("2n<={}", 2 * rho_cap),
        bijective.map(|()| String::new()),
    ));

    let cases = (1..=cap).try_for_each(|n| {
        classes[n].iter().try_for_each(|p| {
            let image = rho(p).map_err(|e| format!("{p}: {e}"))?;
            let by_perm = rho_case_of_permutation(p).map_err(|e| e.to_string())?;
            let by_path = rho_case_of_path(&image);
            if by_perm != by_path {
                Err(format!("{p} ({by_perm:?}) -> {image} ({by_path:?})"))
            } else if is_primitive(p) != image.path().is_primitive() {
                Err(format!("{p} -> {image}: primitivity differs"))
            } else {
                Ok(())
            }
        })
    });
    checks.push(Check::from_result(
        "rho case discrimination",
        format!("2n<={}", 2 * cap),
        cases.map(|()| String::new()),
    ));

    let primitive = (1..=cap).try_for_each(|n| {
        let got = classes[n].iter().filter(|p| is_primitive(p)).count();
        let want = catalan_number(n - 1) << (n - 1);
        if BigUint::from(got) == want {
            Ok(())
        } else {
            Err(format!("n={n}: {got} primitive, expected {want}"))
        }
    });
    checks.push(Check::from_result(
        "primitive members counted by 2^(n-1) C(n-1)",
        sizes,
        primitive.map(|()| String::new()),
    ));
    checks
}

/// The four smallest images of rho.
pub const GOLDEN: [(&str, &str); 4] = [
    ("21", "UD []"),
    ("4213", "UUDD []"),
    ("3421", "UDUD []"),
    ("2143", "UUDD [2]"),
];

fn golden() -> Vec<Check> {
    GOLDEN
        .into_iter()
        .map(|(perm, path)| {
            let result = perm
                .parse::<Permutation>()
                .and_then(|p| Ok((rho(&p)?, p)))
                .map_err(|e| e.to_string())
                .and_then(|(image, p)| {
                    let back = rho_inverse(&image).map_err(|e| e.to_string())?;
                    if image.to_string() == path && back == p {
                        Ok(image.to_string())
                    } else {
                        Err(format!("{image}, inverse {back}"))
                    }
                });
            Check::from_result(format!("rho({perm})"), format!("2n={}", perm.len()), result)
        })
        .collect()
}

/// OEIS b-file name for a sequence, e.g. `b064062.txt`.
pub fn bfile_name(seq: OeisSeq) -> String {
    format!("b{}.txt", &seq.to_string()[1..])
}

/// Compares each known sequence with `dir/bNNNNNN.txt` when present.
pub fn oeis(dir: Option<&Path>) -> Vec<Check> {
    OeisSeq::ALL
        .into_iter()
        .map(|seq| {
            let name = format!("{seq} b-file prefix");
            let skipped =
                |why: String| Check::pass(name.clone(), "", "").with_status(Status::Skipped, why);
            let Some(path) = dir.map(|d| d.join(bfile_name(seq))).filter(|p| p.exists()) else {
                return skipped("no overlap: b-file not supplied".to_string());
            };
            match BFile::read(&path) {
                Err(e) => Check::fail(name, path.display().to_string(), e.to_string()),
                Ok(b) => oeis_check(&b, seq, name),
            }
        })
        .collect()
}

/// One report entry for a parsed b-file.
pub fn oeis_check(b: &BFile, seq: OeisSeq, name: String) -> Check {
    match compare(b, seq) {
        Comparison::Match { first, last } => {
            Check::pass(name, format!("{first}..={last}"), "all terms match")
        }
        Comparison::NoOverlap => {
            Check::pass(name, "", "").with_status(Status::Skipped, "no overlap")
        }
        Comparison::Mismatch {
            index,
            expected,
            computed,
        } => Check::fail(
            name,
            format!("index {index}"),
            format!("a({index}): b-file {expected}, computed {computed}"),
        ),
    }
}
