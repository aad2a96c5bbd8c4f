//! Argument parsing and dispatch for the `borel` binary.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

use borel_core::bijections::{
    binary_to_forest, forest_to_binary, full_binary_to_word, leafmarked_to_uddpath,
    marked_binary_to_forest, marked_forest_to_binary, primitive_factors, rho, rho_inverse, sqcup,
    sqcup_split, to_full_binary, uddpath_to_leafmarked, word_to_full_binary,
};
use borel_core::dumont::{block_decompose, enumerate_dumont, enumerate_dumont_avoiding};
use borel_core::dyck::{
    count_ballot_paths, dyck_statistic, enumerate_dyck, enumerate_ndpf, enumerate_plane_forests,
    ndpf_statistic, DyckPath, DyckStat, NdpfStat, PlaneForest,
};
use borel_core::marked::{
    enumerate_marked_dyck, enumerate_marked_trees, enumerate_udd_marked, MarkedBinaryTree,
    MarkedDyckPath, PathFlavor, TreeFlavor,
};
use borel_core::matchings::{
    avoids_pattern, crossing_to_marked_path, enumerate_avoiding, enumerate_matchings,
    marked_path_to_crossing, marked_path_to_nesting, matching_to_rook, nesting_to_marked_path,
    pair_statistic, rook_avoids, rook_to_matching, AvoidancePair, Matching, RookPlacement,
};
use borel_core::perm::Permutation;
use borel_core::series::{expand_series, SeriesName};
use borel_core::tree::BinaryTree;
use borel_core::triangles::{generalized_catalan, generalized_catalan_weighted, TriangleTable};
use borel_core::Histogram;
use clap::{Parser, Subcommand, ValueEnum};

use crate::bfile::{BFile, OeisSeq};
use crate::error::{CliError, Result};
use crate::format::{self, Format};
use crate::suites::{oeis_check, run_suites, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "borel",
    version,
    about = "Borel's triangle, its combinatorial families and bijections"
)]
pub struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        default_value = "csv",
        env = "BOREL_FORMAT"
    )]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows of a triangle: catalan, borel, a or p.
    Triangle {
        name: String,
        #[arg(long, default_value_t = 7)]
        rows: usize,
    },
    /// Print the first terms of a sequence.
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        #[arg(long, default_value_t = 8)]
        count: usize,
        /// Compute as 2-weighted Catalan row sums instead of Borel row sums.
        #[arg(long)]
        weighted: bool,
    },
    /// Expand a generating function: c, C, B, F, A, P or G.
    Series {
        name: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Enumerate a family, or summarize it with --count or --histogram.
    Enum(EnumArgs),
    /// Apply a bijection or decomposition to one object.
    Bij(BijArgs),
    /// Test whether a matching or rook placement avoids a pattern.
    Pattern {
        /// Pattern such as 213.
        pattern: String,
        /// Matching such as 1-4,2-3.
        #[arg(long, conflicts_with = "rook", required_unless_present = "rook")]
        matching: Option<String>,
        /// Rook placement such as "heights=2,2; rooks=(1,2),(2,1)".
        #[arg(long)]
        rook: Option<String>,
    },
    /// Run verification suites and print a report.
    Verify {
        /// Suite to run; repeat for several. Defaults to all.
        #[arg(long)]
        suite: Vec<String>,
        /// Size cap overriding each suite's default.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Compare a b-file against a computed sequence.
    OeisCheck {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        seq: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    Gencat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Dyck,
    MarkedDyck,
    Udd,
    Trees,
    Matchings,
    Ndpf,
    Dumont,
    Forests,
    Ballot,
}

#[derive(Debug, clap::Args)]
pub struct EnumArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Semilength, vertex count, matching size, or permutation length.
    #[arg(long)]
    pub size: usize,
    /// Number of marks (udd) or end height (ballot).
    #[arg(long)]
    pub k: Option<usize>,
    /// Mark flavor: down, up, udd for paths; leaf, branch, spine for trees.
    #[arg(long)]
    pub flavor: Option<String>,
    /// Statistic for --histogram.
    #[arg(long)]
    pub stat: Option<String>,
    #[arg(long, conflicts_with = "count")]
    pub histogram: bool,
    #[arg(long)]
    pub count: bool,
    /// Restrict matchings to one avoidance class and use its statistic.
    #[arg(long, conflicts_with = "avoiding")]
    pub pair: Option<String>,
    /// Patterns the matchings must avoid, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub avoiding: Vec<String>,
    /// Only Dumont permutations avoiding 2413 and 3142.
    #[arg(long)]
    pub class: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BijName {
    /// Permutation to down-marked path.
    Rho,
    /// Down-marked path to permutation; same as `rho --inverse`.
    RhoInv,
    /// Leaf-marked tree to UDD-marked path.
    TreePath,
    /// Marked plane forest to right-spine-free marked tree.
    ForestTree,
    /// Matching to rook placement.
    MatchRook,
    /// Nesting placement to down-marked path.
    NestPath,
    /// Crossing placement to up-marked path.
    CrossPath,
    /// Glue two marked paths; the inverse splits one.
    Sqcup,
    /// Primitive factors of a marked path.
    Factors,
    /// Block decomposition of a permutation.
    Blocks,
    /// Binary tree to its full tree and Dyck word.
    FullBinary,
}

#[derive(Debug, clap::Args)]
pub struct BijArgs {
    #[arg(value_enum)]
    pub name: BijName,
    #[arg(long)]
    pub input: String,
    /// Second operand for sqcup.
    #[arg(long)]
    pub with: Option<String>,
    #[arg(long)]
    pub inverse: bool,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match run(&cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn parse<T: FromStr<Err = borel_core::Error>>(s: &str) -> Result<T> {
    Ok(s.trim().parse()?)
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs a parsed command, returning the exit code and standard output.
pub fn run(cli: &Cli) -> Result<(i32, String)> {
    let f = cli.format;
    let out = match &cli.command {
        Command::Triangle { name, rows } => {
            let table = TriangleTable::new(parse(name)?, *rows);
            format::rows(&table.rows, f)
        }
        Command::Seq {
            name: SeqName::Gencat,
            count,
            weighted,
        } => {
            let terms: Vec<_> = (0..*count)
                .map(|n| {
                    if *weighted {
                        generalized_catalan_weighted(n)
                    } else {
                        generalized_catalan(n)
                    }
                })
                .collect();
            format::rows(&[terms], f)
        }
        Command::Series { name, order } => {
            let s = expand_series(parse::<SeriesName>(name)?, *order);
            let rows: Vec<_> = (0..=*order).map(|n| s.t_polynomial(n)).collect();
            format::rows(&rows, f)
        }
        Command::Enum(args) => enumerate(args, f)?,
        Command::Bij(args) => format::lines(&bijection(args)?, f),
        Command::Pattern {
            pattern,
            matching,
            rook,
        } => {
            let sigma: Permutation = parse(pattern)?;
            let avoids = match (matching, rook) {
                (Some(m), _) => avoids_pattern(&parse::<Matching>(m)?, &sigma),
                (None, Some(r)) => rook_avoids(&parse::<RookPlacement>(r)?, &sigma),
                (None, None) => return Err(usage("give --matching or --rook")),
            };
            format::lines(&[if avoids { "avoids" } else { "contains" }], f)
        }
        Command::Verify { suite, max_n } => {
            let suites = if suite.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suite
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<Suite>>>()?
            };
            let report = run_suites(&suites, *max_n);
            let text = match f {
                Format::Csv => report.to_string(),
                Format::Json => format!("{}\n", report.to_json()),
            };
            return Ok((report.exit_status(), text));
        }
        Command::OeisCheck { bfile, seq } => {
            let seq: OeisSeq = seq.parse()?;
            let check = oeis_check(&BFile::read(bfile)?, seq, format!("{seq} b-file prefix"));
            let report = crate::report::VerificationReport {
                checks: vec![check],
            };
            let text = match f {
                Format::Csv => report.to_string(),
                Format::Json => format!("{}\n", report.to_json()),
            };
            return Ok((report.exit_status(), text));
        }
    };
    Ok((0, out))
}

fn path_flavor(s: Option<&str>) -> Result<PathFlavor> {
    s.map_or(Ok(PathFlavor::DownNotGround), parse)
}

fn tree_flavor(s: Option<&str>) -> Result<TreeFlavor> {
    s.map_or(Ok(TreeFlavor::LeafMarked), parse)
}

/// Either the full list, its length, or a histogram of `stat`.
fn summarize<T: ToString>(
    items: Vec<T>,
    args: &EnumArgs,
    f: Format,
    stat: impl Fn(&T) -> Result<usize>,
) -> Result<String> {
    if args.count {
        Ok(format::lines(&[items.len()], f))
    } else if args.histogram {
        let mut h = Histogram::new();
        for item in &items {
            h.add(stat(item)?);
        }
        Ok(format::histogram(&h, f))
    } else {
        let text: Vec<String> = items.iter().map(ToString::to_string).collect();
        Ok(format::lines(&text, f))
    }
}

fn need_stat<T: FromStr<Err = borel_core::Error>>(args: &EnumArgs) -> Result<Option<T>> {
    match (&args.stat, args.histogram) {
        (Some(s), _) => parse(s).map(Some),
        (None, true) => Err(usage("--histogram needs --stat")),
        (None, false) => Ok(None),
    }
}

fn enumerate(args: &EnumArgs, f: Format) -> Result<String> {
    let n = args.size;
    let marks = |m: &MarkedDyckPath| Ok(m.marks().len());
    match args.family {
        Family::Dyck => {
            let stat: Option<DyckStat> = need_stat(args)?;
            summarize(enumerate_dyck(n).collect(), args, f, |p| {
                Ok(dyck_statistic(p, stat.expect("checked"))?)
            })
        }
        Family::MarkedDyck => {
            let flavor = path_flavor(args.flavor.as_deref())?;
            summarize(enumerate_marked_dyck(n, flavor).collect(), args, f, marks)
        }
        Family::Udd => {
            let k = args.k.ok_or_else(|| usage("udd needs --k"))?;
            summarize(enumerate_udd_marked(n, k).collect(), args, f, marks)
        }
        Family::Trees => {
            let flavor = tree_flavor(args.flavor.as_deref())?;
            summarize(
                enumerate_marked_trees(flavor, n),
                args,
                f,
                |t: &MarkedBinaryTree| Ok(t.marks().len()),
            )
        }
        Family::Matchings => {
            if let Some(pair) = &args.pair {
                let pair: AvoidancePair = parse(pair)?;
                let class = enumerate_avoiding(n, &pair.patterns());
                return summarize(class, args, f, |m| Ok(pair_statistic(pair, m)?));
            }
            let patterns = args
                .avoiding
                .iter()
                .map(|s| parse(s))
                .collect::<Result<Vec<Permutation>>>()?;
            let class = if patterns.is_empty() {
                enumerate_matchings(n)
            } else {
                enumerate_avoiding(n, &patterns)
            };
            let stat = args.stat.as_deref();
            let nestings = match stat {
                Some("nestings") | None => true,
                Some("crossings") => false,
                Some(s) => return Err(usage(format!("unknown matching statistic {s:?}"))),
            };
            if args.histogram && stat.is_none() {
                return Err(usage("--histogram needs --stat nestings or crossings"));
            }
            summarize(class, args, f, |m| {
                Ok(if nestings {
                    m.nestings()
                } else {
                    m.crossings()
                })
            })
        }
        Family::Ndpf => {
            let stat: Option<NdpfStat> = need_stat(args)?;
            summarize(enumerate_ndpf(n).collect(), args, f, |p| {
                Ok(ndpf_statistic(p, stat.expect("checked")))
            })
        }
        Family::Dumont => {
            let perms = if args.class {
                enumerate_dumont_avoiding(n)?
            } else {
                enumerate_dumont(n)?
            };
            if args.histogram {
                return Err(usage("dumont has no histogram statistic"));
            }
            summarize(perms, args, f, |_| Ok(0))
        }
        Family::Forests => summarize(enumerate_plane_forests(n).collect(), args, f, |p| {
            Ok(p.components())
        }),
        Family::Ballot => {
            let k = args.k.ok_or_else(|| usage("ballot needs --k"))?;
            Ok(format::lines(&[count_ballot_paths(n, k)?], f))
        }
    }
}

/// Splits `UUDD [2]` style input into the word and its index list.
fn split_marks(s: &str) -> Result<(&str, BTreeSet<usize>)> {
    let s = s.trim();
    let Some(open) = s.find('[') else {
        return Ok((s, BTreeSet::new()));
    };
    let list = s[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| usage("unterminated mark list"))?;
    let marks = list
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| usage(format!("bad mark {x:?}"))))
        .collect::<Result<_>>()?;
    Ok((s[..open].trim(), marks))
}

fn fmt_marks(marks: &BTreeSet<usize>) -> String {
    let list: Vec<String> = marks.iter().map(ToString::to_string).collect();
    format!("[{}]", list.join(","))
}

fn bijection(args: &BijArgs) -> Result<Vec<String>> {
    let input = args.input.as_str();
    let down = |s: &str| MarkedDyckPath::parse(s, PathFlavor::DownNotGround);
    let one = |x: &dyn ToString| Ok(vec![x.to_string()]);
    match (args.name, args.inverse) {
        (BijName::Rho, false) => one(&rho(&parse(input)?)?),
        (BijName::Rho, true) | (BijName::RhoInv, false) => one(&rho_inverse(&down(input)?)?),
        (BijName::TreePath, false) => one(&leafmarked_to_uddpath(&MarkedBinaryTree::parse(
            input,
            TreeFlavor::LeafMarked,
        )?)?),
        (BijName::TreePath, true) => one(&uddpath_to_leafmarked(&MarkedDyckPath::parse(
            input,
            PathFlavor::UddPattern,
        )?)?),
        (BijName::ForestTree, false) => {
            let (word, marks) = split_marks(input)?;
            let forest: PlaneForest = parse(word)?;
            if marks.is_empty() {
                one(&forest_to_binary(&forest))
            } else {
                one(&marked_forest_to_binary(&forest, &marks)?)
            }
        }
        (BijName::ForestTree, true) => {
            let m = MarkedBinaryTree::parse(input, TreeFlavor::RightSpineFree)?;
            let (forest, marks) = marked_binary_to_forest(&m)?;
            if marks.is_empty() {
                one(&binary_to_forest(m.tree()))
            } else {
                Ok(vec![format!("{forest} {}", fmt_marks(&marks))])
            }
        }
        (BijName::MatchRook, false) => one(&matching_to_rook(&parse(input)?)),
        (BijName::MatchRook, true) => one(&rook_to_matching(&parse(input)?)?),
        (BijName::NestPath, false) => one(&nesting_to_marked_path(&parse(input)?)?),
        (BijName::NestPath, true) => one(&marked_path_to_nesting(&down(input)?)?),
        (BijName::CrossPath, false) => one(&crossing_to_marked_path(&parse(input)?)?),
        (BijName::CrossPath, true) => one(&marked_path_to_crossing(&MarkedDyckPath::parse(
            input,
            PathFlavor::UpNotGround,
        )?)?),
        (BijName::Sqcup, false) => {
            let other = args
                .with
                .as_deref()
                .ok_or_else(|| usage("sqcup needs --with"))?;
            one(&sqcup(&down(input)?, &down(other)?)?)
        }
        (BijName::Sqcup, true) => {
            let (a, b) = sqcup_split(&down(input)?)?;
            Ok(vec![a.to_string(), b.to_string()])
        }
        (BijName::Factors, false) => {
            let (word, _) = split_marks(input)?;
            let flavor = if parse::<DyckPath>(word).is_ok() {
                PathFlavor::DownNotGround
            } else {
                PathFlavor::UpNotGround
            };
            Ok(primitive_factors(&MarkedDyckPath::parse(input, flavor)?)
                .factors
                .iter()
                .map(ToString::to_string)
                .collect())
        }
        (BijName::Blocks, false) => {
            let p: Permutation = parse(input)?;
            let d = block_decompose(&p)?;
            let v = p.values();
            let block = |r: &std::ops::Range<usize>| -> String {
                let parts: Vec<String> = v[r.clone()].iter().map(ToString::to_string).collect();
                if parts.is_empty() {
                    "()".to_string()
                } else {
                    parts.join(" ")
                }
            };
            let mut out = vec![format!("k={} top={}", d.k, d.top + 1)];
            out.extend(
                d.a_blocks
                    .iter()
                    .enumerate()
                    .map(|(i, r)| format!("A{i}: {}", block(r))),
            );
            out.extend(
                d.b_blocks
                    .iter()
                    .enumerate()
                    .map(|(i, r)| format!("B{i}: {}", block(r))),
            );
            Ok(out)
        }
        (BijName::FullBinary, false) => {
            let t: BinaryTree = parse(input)?;
            let (full, _) = to_full_binary(&t);
            Ok(vec![
                full.to_string(),
                full_binary_to_word(&full)?.to_string(),
            ])
        }
        (BijName::FullBinary, true) => one(&word_to_full_binary(&parse(input)?)),
        (name, true) => Err(usage(format!("{name:?} has no inverse"))),
    }
}
