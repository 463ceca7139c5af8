//! Command-line surface. One subcommand per library operation, JSON (or
//! TSV) on stdin/stdout/files, and `verify` to run the whole verification
//! harness at a configurable scale.
//!
//! Exit codes: 0 on success, 1 on a domain error (the library's error
//! string), 2 on malformed input or usage.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::generate::{
    complete_graph_arrangement, forced_peel_analysis, forced_peel_family, quasiplanar_counterexample,
    random_arrangement, PeelAnalysis,
};
use crate::model::{
    Arrangement, ArrangementKind, ConvexDrawing, CylArrangement, FlatArrangement, Graph, PeelTrace,
    Validate,
};
use crate::quasiplanar::{
    color_count, degeneracy, greedy_color, is_maximal, is_quasiplanar, j_pairs, max_edges,
    maximal_completion,
};
use crate::svg::{render, SvgObject};
use crate::transform::{curl, curl_preserves, cut, embed, flat_peel, peel, peel_force};
use crate::verify::{run_all, Scale};
use crate::visibility::{cyl_visibility, flat_visibility, sightline_oracle};

/// Default cap on exhaustive sweeps in `verify`, overridable with the
/// `VISIKIT_MAX_N` environment variable or `--max-n`.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "visikit", version, about = "Semi-bar k-visibility graphs, quasiplanar convex drawings, and the transformations between them")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Visibility parameter k (overrides any value carried by the input)
    #[arg(long, global = true)]
    k: Option<usize>,

    /// Seed for random generation
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Input file ('-' for stdin)
    #[arg(long, global = true)]
    input: Option<String>,

    /// Output file (stdout if omitted)
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Flat,
    Cyl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Random,
    KComplete,
    Counterexample,
    ForcedPeel,
}

#[derive(Args)]
struct ArrangementArgs {
    /// Comma-separated bar lengths, as an alternative to --input
    #[arg(long, value_delimiter = ',')]
    lengths: Option<Vec<usize>>,

    /// Arrangement kind when building from --lengths
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
}

#[derive(Args)]
struct DrawingArgs {
    /// JSON drawing file ('-' for stdin), as an alternative to --input
    #[arg(long)]
    drawing: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Visibility graph of an arrangement
    Visibility(ArrangementArgs),
    /// Brute-force sightline check for one pair of bars
    Oracle {
        #[command(flatten)]
        arrangement: ArrangementArgs,
        /// The pair, e.g. --pair 0,2
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        pair: Vec<usize>,
    },
    /// Is a drawing (k+2)-quasiplanar?
    CheckQuasiplanar(DrawingArgs),
    /// Is a quasiplanar drawing edge-maximal?
    CheckMaximal(DrawingArgs),
    /// Extend a quasiplanar drawing to a maximal one
    Complete(DrawingArgs),
    /// All j-pairs of an n-point convex position
    Jpairs {
        #[command(flatten)]
        drawing: DrawingArgs,
        /// Points on the smaller side
        #[arg(long)]
        j: usize,
        /// Number of points, as an alternative to a drawing
        #[arg(long)]
        n: Option<usize>,
    },
    /// Maximum edge count of a (k+2)-quasiplanar convex drawing
    MaxEdges {
        #[arg(long)]
        n: usize,
    },
    /// Degeneracy and elimination order of a graph
    Degeneracy,
    /// Greedy coloring along the degeneracy order of a graph
    Color,
    /// Embed a cylindrical arrangement as a convex drawing
    Embed(ArrangementArgs),
    /// Peel a maximal drawing into a cylindrical arrangement
    Peel {
        #[command(flatten)]
        drawing: DrawingArgs,
        /// Peel even if the drawing is not maximal (round-trip not guaranteed)
        #[arg(long)]
        force: bool,
    },
    /// Peel a maximal planar drawing into a flat arrangement (k = 0)
    FlatPeel(DrawingArgs),
    /// Reinterpret a flat arrangement cyclically
    Curl(ArrangementArgs),
    /// Does curling preserve the visibility graph?
    CurlPreserves(ArrangementArgs),
    /// Cut a cylindrical arrangement between its two longest bars
    Cut(ArrangementArgs),
    /// Generate a named instance family
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Size for --family random
        #[arg(long)]
        n: Option<usize>,
        /// Kind for --family random
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Simulate the peel of a maximal drawing and report forced steps
    ForcedPeelAnalysis {
        #[command(flatten)]
        drawing: DrawingArgs,
        /// How many leading steps to report
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Render an arrangement or drawing to SVG
    ExportSvg,
    /// Run the verification harness
    Verify {
        /// Cap on exhaustive sweep sizes (default: $VISIKIT_MAX_N or 8)
        #[arg(long)]
        max_n: Option<usize>,
        /// Number of seeded random instances
        #[arg(long, default_value_t = 1000)]
        random: usize,
    },
}

enum CliError {
    Domain(Error),
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parse and execute `argv`, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version print to stdout and exit 0; usage errors exit 2
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn execute(cli: Cli) -> CliResult<i32> {
    let ctx = Ctx {
        k: cli.k,
        seed: cli.seed,
        input: cli.input,
        output: cli.output,
        format: cli.format,
    };
    match cli.command {
        Command::Visibility(args) => {
            let arr = ctx.arrangement(&args)?;
            let g = match &arr {
                Arrangement::Flat(a) => flat_visibility(a),
                Arrangement::Cyl(a) => cyl_visibility(a),
            };
            ctx.emit_graph(&g)
        }
        Command::Oracle { arrangement, pair } => {
            let arr = ctx.arrangement(&arrangement)?;
            let [i, j] = pair[..] else {
                return Err(CliError::Input("--pair takes exactly two indices, e.g. --pair 0,2".into()));
            };
            let visible = sightline_oracle(&arr, i, j)?;
            ctx.emit_bool("visible", visible, &[])
        }
        Command::CheckQuasiplanar(args) => {
            let d = ctx.drawing(&args)?;
            let k = ctx.k.unwrap_or(0);
            ctx.emit_bool("quasiplanar", is_quasiplanar(&d, k), &[])
        }
        Command::CheckMaximal(args) => {
            let d = ctx.drawing(&args)?;
            let k = ctx.k.unwrap_or(0);
            ctx.emit_bool("maximal", is_maximal(&d, k)?, &[])
        }
        Command::Complete(args) => {
            let d = ctx.drawing(&args)?;
            let k = ctx.k.unwrap_or(0);
            ctx.emit_drawing(&maximal_completion(&d, k)?)
        }
        Command::Jpairs { drawing, j, n } => {
            let d = match n {
                Some(n) => ConvexDrawing::empty(n),
                None => ctx.drawing(&drawing)?,
            };
            let pairs: Vec<(usize, usize)> = j_pairs(&d, j).into_iter().collect();
            ctx.emit_pairs(&pairs)
        }
        Command::MaxEdges { n } => {
            let k = ctx.k.unwrap_or(0);
            let value = max_edges(n, k);
            ctx.emit_json(
                serde_json::json!({"n": n, "k": k, "max_edges": value}),
                vec![format!("max_edges\t{value}")],
            )
        }
        Command::Degeneracy => {
            let g = ctx.graph()?;
            let (value, order) = degeneracy(&g);
            let order_tsv = order.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\t");
            ctx.emit_json(
                serde_json::json!({"degeneracy": value, "order": order}),
                vec![format!("degeneracy\t{value}"), format!("order\t{order_tsv}")],
            )
        }
        Command::Color => {
            let g = ctx.graph()?;
            let (_, order) = degeneracy(&g);
            let colors = greedy_color(&g, &order)?;
            let count = color_count(&colors);
            let colors_tsv = colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\t");
            ctx.emit_json(
                serde_json::json!({"colors": colors, "num_colors": count}),
                vec![format!("num_colors\t{count}"), format!("colors\t{colors_tsv}")],
            )
        }
        Command::Embed(args) => {
            let arr = ctx.cyl_arrangement(&args)?;
            ctx.emit_drawing(&embed(&arr))
        }
        Command::Peel { drawing, force } => {
            let d = ctx.drawing(&drawing)?;
            let k = ctx.k.unwrap_or(0);
            let trace = if force {
                let outcome = peel_force(&d, k)?;
                if !outcome.verified {
                    eprintln!(
                        "warning: visibility of the peeled arrangement does not match the input \
                         (input was not maximal)"
                    );
                }
                outcome.trace
            } else {
                peel(&d, k)?.1
            };
            ctx.emit_trace(&trace)
        }
        Command::FlatPeel(args) => {
            let d = ctx.drawing(&args)?;
            let (_, trace) = flat_peel(&d)?;
            ctx.emit_trace(&trace)
        }
        Command::Curl(args) => {
            let arr = ctx.flat_arrangement(&args)?;
            ctx.emit_arrangement(&Arrangement::Cyl(curl(&arr)))
        }
        Command::CurlPreserves(args) => {
            let arr = ctx.flat_arrangement(&args)?;
            let preserves = curl_preserves(&arr)?;
            let small = arr.len() < 2 * arr.k + 2;
            ctx.emit_bool(
                "curl_preserves",
                preserves,
                &[("n_below_2k_plus_2", small)],
            )
        }
        Command::Cut(args) => {
            let arr = ctx.cyl_arrangement(&args)?;
            ctx.emit_arrangement(&Arrangement::Flat(cut(&arr)?))
        }
        Command::Gen { family, n, kind } => {
            let k = ctx.k.unwrap_or(0);
            match family {
                Family::Random => {
                    let n = n.ok_or_else(|| CliError::Input("--family random requires --n".into()))?;
                    if n == 0 {
                        return Err(CliError::Input("--n must be at least 1".into()));
                    }
                    let kind = match kind.unwrap_or(KindArg::Cyl) {
                        KindArg::Flat => ArrangementKind::Flat,
                        KindArg::Cyl => ArrangementKind::Cyl,
                    };
                    let arr = random_arrangement(n, k, ctx.seed.unwrap_or(0), kind);
                    ctx.emit_arrangement(&arr)
                }
                Family::KComplete => ctx.emit_arrangement(&Arrangement::Cyl(complete_graph_arrangement(k))),
                Family::Counterexample => ctx.emit_drawing(&quasiplanar_counterexample(k)?),
                Family::ForcedPeel => ctx.emit_arrangement(&Arrangement::Cyl(forced_peel_family(k)?)),
            }
        }
        Command::ForcedPeelAnalysis { drawing, steps } => {
            let d = ctx.drawing(&drawing)?;
            let k = ctx.k.unwrap_or(0);
            let report = forced_peel_analysis(&d, k, steps)?;
            ctx.emit_analysis(&report)
        }
        Command::ExportSvg => {
            let text = ctx.read_input_text(None)?;
            let rendered = if let Ok(arr) = serde_json::from_str::<Arrangement>(&text) {
                ctx.validated(&arr)?;
                render(SvgObject::Arrangement(&arr))
            } else if let Ok(d) = serde_json::from_str::<ConvexDrawing>(&text) {
                ctx.validated(&d)?;
                render(SvgObject::Drawing(&d))
            } else {
                return Err(CliError::Input(
                    "input is neither an arrangement nor a drawing".into(),
                ));
            };
            ctx.write_out(&rendered)
        }
        Command::Verify { max_n, random } => {
            let cap = max_n
                .or_else(|| std::env::var("VISIKIT_MAX_N").ok().and_then(|s| s.parse().ok()))
                .unwrap_or(DEFAULT_MAX_N);
            let scale = Scale { exhaustive_cap: cap, random_instances: random, base_seed: 0x5EED };
            let mut all_pass = true;
            for criterion in run_all(&scale) {
                println!("{}", criterion.line());
                all_pass &= criterion.pass;
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

struct Ctx {
    k: Option<usize>,
    seed: Option<u64>,
    input: Option<String>,
    output: Option<PathBuf>,
    format: Format,
}

impl Ctx {
    fn read_input_text(&self, alt: Option<&str>) -> CliResult<String> {
        let source = alt.or(self.input.as_deref()).unwrap_or("-");
        if source == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        } else {
            fs::read_to_string(source)
                .map_err(|e| CliError::Input(format!("cannot read {source}: {e}")))
        }
    }

    fn validated<T: Validate>(&self, value: &T) -> CliResult<()> {
        let violations = value.violations();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(CliError::Input(format!("invalid input: {}", violations.join("; "))))
        }
    }

    fn arrangement_with_default(
        &self,
        args: &ArrangementArgs,
        default_kind: Option<KindArg>,
    ) -> CliResult<Arrangement> {
        let arr = if let Some(lengths) = &args.lengths {
            let k = self.k.unwrap_or(0);
            match args.kind.or(default_kind) {
                Some(KindArg::Flat) => Arrangement::Flat(FlatArrangement::new(lengths.clone(), k)),
                Some(KindArg::Cyl) => Arrangement::Cyl(CylArrangement::new(lengths.clone(), k)),
                None => {
                    return Err(CliError::Input(
                        "--lengths needs --kind flat or --kind cyl".into(),
                    ))
                }
            }
        } else {
            let text = self.read_input_text(None)?;
            let mut arr: Arrangement = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("invalid arrangement JSON: {e}")))?;
            if let Some(k) = self.k {
                match &mut arr {
                    Arrangement::Flat(a) => a.k = k,
                    Arrangement::Cyl(a) => a.k = k,
                }
            }
            arr
        };
        self.validated(&arr)?;
        Ok(arr)
    }

    /// Arrangement input where the kind is semantically significant:
    /// `--kind` is required alongside `--lengths`.
    fn arrangement(&self, args: &ArrangementArgs) -> CliResult<Arrangement> {
        self.arrangement_with_default(args, None)
    }

    fn cyl_arrangement(&self, args: &ArrangementArgs) -> CliResult<CylArrangement> {
        match self.arrangement_with_default(args, Some(KindArg::Cyl))? {
            Arrangement::Cyl(a) => Ok(a),
            Arrangement::Flat(a) => Ok(CylArrangement { k: a.k, lengths: a.lengths }),
        }
    }

    fn flat_arrangement(&self, args: &ArrangementArgs) -> CliResult<FlatArrangement> {
        match self.arrangement_with_default(args, Some(KindArg::Flat))? {
            Arrangement::Flat(a) => Ok(a),
            Arrangement::Cyl(a) => Ok(FlatArrangement { k: a.k, lengths: a.lengths }),
        }
    }

    fn drawing(&self, args: &DrawingArgs) -> CliResult<ConvexDrawing> {
        let text = self.read_input_text(args.drawing.as_deref())?;
        let d: ConvexDrawing = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("invalid drawing JSON: {e}")))?;
        self.validated(&d)?;
        Ok(d)
    }

    fn graph(&self) -> CliResult<Graph> {
        let text = self.read_input_text(None)?;
        let g: Graph = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("invalid graph JSON: {e}")))?;
        self.validated(&g)?;
        Ok(g)
    }

    fn write_out(&self, text: &str) -> CliResult<i32> {
        match &self.output {
            Some(path) => fs::write(path, text)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?,
            None => {
                let mut stdout = std::io::stdout();
                let _ = stdout.write_all(text.as_bytes());
            }
        }
        Ok(0)
    }

    fn emit_json(&self, json: serde_json::Value, tsv_lines: Vec<String>) -> CliResult<i32> {
        match self.format {
            Format::Json => self.write_out(&format!("{json}\n")),
            Format::Tsv => self.write_out(&format!("{}\n", tsv_lines.join("\n"))),
        }
    }

    fn emit_serialized<T: serde::Serialize>(&self, value: &T, tsv_lines: Vec<String>) -> CliResult<i32> {
        match self.format {
            Format::Json => {
                let json = serde_json::to_string(value)
                    .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
                self.write_out(&format!("{json}\n"))
            }
            Format::Tsv => self.write_out(&format!("{}\n", tsv_lines.join("\n"))),
        }
    }

    fn emit_graph(&self, g: &Graph) -> CliResult<i32> {
        let mut tsv = vec![format!("n\t{}", g.n)];
        tsv.extend(g.edges.iter().map(|(a, b)| format!("{a}\t{b}")));
        self.emit_serialized(g, tsv)
    }

    fn emit_drawing(&self, d: &ConvexDrawing) -> CliResult<i32> {
        let mut tsv = vec![format!("n\t{}", d.n)];
        tsv.extend(d.edges.iter().map(|(a, b)| format!("{a}\t{b}")));
        self.emit_serialized(d, tsv)
    }

    fn emit_arrangement(&self, arr: &Arrangement) -> CliResult<i32> {
        let kind = match arr {
            Arrangement::Flat(_) => "flat",
            Arrangement::Cyl(_) => "cyl",
        };
        let lengths = arr
            .lengths()
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("\t");
        let tsv = vec![
            format!("kind\t{kind}"),
            format!("k\t{}", arr.k()),
            format!("lengths\t{lengths}"),
        ];
        self.emit_serialized(arr, tsv)
    }

    fn emit_trace(&self, trace: &PeelTrace) -> CliResult<i32> {
        let mut tsv: Vec<String> = trace
            .steps
            .iter()
            .map(|s| format!("step\t{}\t{}\t{}\t{}", s.vertex, s.length, s.degree, s.forced))
            .collect();
        let lengths = trace
            .output
            .lengths()
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("\t");
        tsv.push(format!("lengths\t{lengths}"));
        self.emit_serialized(trace, tsv)
    }

    fn emit_analysis(&self, report: &PeelAnalysis) -> CliResult<i32> {
        let forced = report
            .forced
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("\t");
        let adjacent = match report.adjacent_longest_pair {
            Some((a, b)) => format!("{a},{b}"),
            None => "none".to_string(),
        };
        let tsv = vec![
            format!("forced\t{forced}"),
            format!("all_forced\t{}", report.all_forced),
            format!("adjacent_longest_pair\t{adjacent}"),
        ];
        self.emit_serialized(report, tsv)
    }

    fn emit_pairs(&self, pairs: &[(usize, usize)]) -> CliResult<i32> {
        match self.format {
            Format::Json => {
                let json = serde_json::to_string(pairs)
                    .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
                self.write_out(&format!("{json}\n"))
            }
            Format::Tsv => {
                let lines: Vec<String> =
                    pairs.iter().map(|(a, b)| format!("{a}\t{b}")).collect();
                self.write_out(&format!("{}\n", lines.join("\n")))
            }
        }
    }

    fn emit_bool(&self, key: &str, value: bool, extra: &[(&str, bool)]) -> CliResult<i32> {
        let mut map = serde_json::Map::new();
        map.insert(key.to_string(), serde_json::Value::Bool(value));
        for (k, v) in extra {
            map.insert(k.to_string(), serde_json::Value::Bool(*v));
        }
        let mut tsv = vec![format!("{key}\t{value}")];
        tsv.extend(extra.iter().map(|(k, v)| format!("{k}\t{v}")));
        self.emit_json(serde_json::Value::Object(map), tsv)
    }
}
