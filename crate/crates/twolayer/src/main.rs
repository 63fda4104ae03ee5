//! Command-line driver: ingest a graph, decompose, embed, verify, render.
//!
//! Exit codes: 0 success, 2 parse error, 3 degree violation,
//! 4 verification failure.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twolayer::decompose::{linear_forests_deg3, paths_and_cycles_deg4, Layer};
use twolayer::embed::{embed_components, Mode};
use twolayer::formats::{
    detect_format, layout_document, parse_graph, parse_graph6_batch, read_layout, render_svg,
    write_layout, InputFormat, ParseError, ParsedGraph, SvgOptions,
};
use twolayer::verify::{verify_drawing, VerificationReport, VerifyRules};
use twolayer::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "twolayer",
    about = "Two-layer straight-line and orthogonal grid drawings of graphs with maximum degree four"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split the edges into two layers and write the assignment as JSON.
    Decompose(DecomposeArgs),
    /// Run the full pipeline: decompose, place, verify, render.
    Embed(EmbedArgs),
    /// Re-verify a stored layout document.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file; `-` or absent reads standard input.
    #[arg(long)]
    input: Option<String>,
    /// Built-in instance (k4, k5, c4, octahedron, petersen, coxeter, cycles12).
    #[arg(long, conflicts_with = "input")]
    demo: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Edgelist,
    Graph6,
    Graphml,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Auto,
    Deg3,
    Deg4Straight,
    Deg4Ortho,
}

impl ModeArg {
    fn mode(self) -> Mode {
        match self {
            ModeArg::Auto => Mode::Auto,
            ModeArg::Deg3 => Mode::Deg3,
            ModeArg::Deg4Straight => Mode::Deg4Straight,
            ModeArg::Deg4Ortho => Mode::Deg4Ortho,
        }
    }

    fn name(self, g: &Graph) -> &'static str {
        match self.mode().resolve(g) {
            Mode::Deg3 => "deg3-straight",
            Mode::Deg4Straight => "deg4-straight",
            Mode::Deg4Ortho => "deg4-ortho",
            Mode::Auto => unreachable!(),
        }
    }
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    /// Output path for the layer assignment; stdout when absent.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct EmbedArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    #[arg(long)]
    out_layout: Option<String>,
    #[arg(long)]
    out_svg: Option<String>,
    #[arg(long)]
    out_report: Option<String>,
    /// SVG pixels per grid unit.
    #[arg(long, default_value_t = 24.0)]
    scale: f64,
    /// Render the two layers in separate panels.
    #[arg(long)]
    side_by_side: bool,
    /// Compress huge coordinates logarithmically in the SVG (display only).
    #[arg(long)]
    log_compress: bool,
    /// Process every line of a graph6 file.
    #[arg(long)]
    batch: bool,
    /// Reserved for randomized tie-breaking; the pipeline is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Layout document to re-check; `-` or absent reads standard input.
    #[arg(long)]
    input: Option<String>,
    #[arg(long)]
    out_report: Option<String>,
}

const EXIT_PARSE: u8 = 2;
const EXIT_DEGREE: u8 = 3;
const EXIT_VERIFY: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Decompose(args) => cmd_decompose(args),
        Command::Embed(args) => cmd_embed(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match code {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn parse_failure(e: ParseError) -> Failure {
    let code = match e {
        ParseError::DegreeExceeded { .. } => EXIT_DEGREE,
        ParseError::Graph(Error::DegreeExceeded { .. }) => EXIT_DEGREE,
        _ => EXIT_PARSE,
    };
    Failure::new(code, e.to_string())
}

fn core_failure(e: Error) -> Failure {
    let code = match e {
        Error::DegreeExceeded { .. } => EXIT_DEGREE,
        _ => EXIT_PARSE,
    };
    Failure::new(code, e.to_string())
}

fn read_input(path: &Option<String>) -> Result<(String, Option<String>), Failure> {
    match path.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("reading stdin: {e}")))?;
            Ok((buf, None))
        }
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("reading {p}: {e}")))?;
            Ok((text, Some(p.to_string())))
        }
    }
}

fn load_graph(args: &InputArgs) -> Result<ParsedGraph, Failure> {
    if let Some(name) = &args.demo {
        let graph = twolayer::instances::by_name(name).ok_or_else(|| {
            Failure::new(
                EXIT_PARSE,
                format!(
                    "unknown demo '{name}'; available: {}",
                    twolayer::instances::DEMO_NAMES.join(", ")
                ),
            )
        })?;
        return Ok(ParsedGraph::numeric(graph));
    }
    let (text, path) = read_input(&args.input)?;
    let format = match args.format {
        FormatArg::Auto => InputFormat::Auto,
        FormatArg::Edgelist => InputFormat::EdgeList,
        FormatArg::Graph6 => InputFormat::Graph6,
        FormatArg::Graphml => InputFormat::GraphMl,
    };
    parse_graph(&text, format, path.as_deref()).map_err(parse_failure)
}

fn write_out(path: &Option<String>, content: &str) -> Result<(), Failure> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => std::fs::write(p, content)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("writing {p}: {e}"))),
    }
}

fn cmd_decompose(args: DecomposeArgs) -> Result<ExitCode, Failure> {
    let parsed = load_graph(&args.input)?;
    let g = &parsed.graph;
    let mode = args.mode.mode().resolve(g);
    let partition = decompose_components(g, mode == Mode::Deg3)?;
    let edges: Vec<serde_json::Value> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(id, &(u, v))| {
            serde_json::json!({
                "source": parsed.labels[u as usize],
                "target": parsed.labels[v as usize],
                "layer": partition.layer_of[id].index(),
            })
        })
        .collect();
    let doc = serde_json::json!({
        "mode": args.mode.name(g),
        "layers": [partition.by_layer[0], partition.by_layer[1]],
        "edges": edges,
    });
    let mut text = serde_json::to_string_pretty(&doc).unwrap();
    text.push('\n');
    write_out(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn decompose_components(
    g: &Graph,
    deg3: bool,
) -> Result<twolayer::decompose::LayerPartition, Failure> {
    let mut layer_of = vec![Layer::A; g.edge_count()];
    for comp in g.components() {
        let mut local = vec![u32::MAX; g.vertex_count()];
        for (i, &v) in comp.iter().enumerate() {
            local[v as usize] = i as u32;
        }
        let mut pairs = Vec::new();
        let mut ids = Vec::new();
        for (eid, &(u, v)) in g.edges().iter().enumerate() {
            if local[u as usize] != u32::MAX && local[v as usize] != u32::MAX {
                pairs.push((local[u as usize], local[v as usize]));
                ids.push(eid);
            }
        }
        let sub = Graph::new(comp.len(), &pairs).map_err(core_failure)?;
        let p = if deg3 {
            linear_forests_deg3(&sub).map_err(core_failure)?
        } else {
            paths_and_cycles_deg4(&sub).map_err(core_failure)?
        };
        for (local_id, &orig) in ids.iter().enumerate() {
            layer_of[orig] = p.layer_of[local_id];
        }
    }
    Ok(twolayer::decompose::LayerPartition::new(layer_of))
}

fn report_json(report: &VerificationReport) -> String {
    let violations: Vec<serde_json::Value> = report
        .violations
        .iter()
        .map(|v| {
            serde_json::json!({
                "kind": v.kind.as_str(),
                "detail": v.detail,
                "witnesses": v.witnesses,
            })
        })
        .collect();
    let doc = serde_json::json!({
        "ok": report.ok,
        "violations": violations,
        "segment_pairs_checked": report.segment_pairs_checked,
        "max_coordinate": report.max_coordinate.to_string(),
        "cross_layer_overlaps": report.cross_layer_overlaps,
    });
    let mut s = serde_json::to_string_pretty(&doc).unwrap();
    s.push('\n');
    s
}

fn suffixed(path: &Option<String>, idx: Option<usize>) -> Option<String> {
    match (path, idx) {
        (None, _) => None,
        (Some(p), None) => Some(p.clone()),
        (Some(p), Some(i)) => Some(match p.rsplit_once('.') {
            Some((stem, ext)) => format!("{stem}-{i}.{ext}"),
            None => format!("{p}-{i}"),
        }),
    }
}

fn cmd_embed(args: EmbedArgs) -> Result<ExitCode, Failure> {
    if args.batch {
        let (text, path) = read_input(&args.input.input)?;
        if args.input.format != FormatArg::Graph6
            && detect_format(path.as_deref(), &text) != InputFormat::Graph6
        {
            return Err(Failure::new(EXIT_PARSE, "--batch expects graph6 input"));
        }
        let graphs = parse_graph6_batch(&text).map_err(parse_failure)?;
        let mut all_ok = true;
        for (i, parsed) in graphs.iter().enumerate() {
            let ok = embed_one(&args, parsed, Some(i))?;
            all_ok &= ok;
        }
        return Ok(if all_ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(EXIT_VERIFY)
        });
    }
    let parsed = load_graph(&args.input)?;
    let ok = embed_one(&args, &parsed, None)?;
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    })
}

fn embed_one(args: &EmbedArgs, parsed: &ParsedGraph, idx: Option<usize>) -> Result<bool, Failure> {
    let g = &parsed.graph;
    let mode = args.mode.mode().resolve(g);
    let (drawing, partition) = embed_components(g, mode).map_err(core_failure)?;
    let rules = match mode {
        Mode::Deg3 => VerifyRules::degree3(),
        _ => VerifyRules::degree4(),
    };
    let report = verify_drawing(&drawing, g, &partition, rules).map_err(core_failure)?;

    let algorithm = args.mode.name(g);
    let doc = layout_document(&drawing, g, &parsed.labels, algorithm, Some(&report));
    if args.out_layout.is_some() {
        write_out(&suffixed(&args.out_layout, idx), &write_layout(&doc))?;
    }
    if args.out_svg.is_some() {
        let opts = SvgOptions {
            scale: args.scale,
            side_by_side: args.side_by_side || mode == Mode::Deg4Ortho,
            log_compress: args.log_compress,
            ..SvgOptions::default()
        };
        write_out(&suffixed(&args.out_svg, idx), &render_svg(&drawing, g, &opts))?;
    }
    if args.out_report.is_some() {
        write_out(&suffixed(&args.out_report, idx), &report_json(&report))?;
    }

    let tag = idx.map(|i| format!("[{i}] ")).unwrap_or_default();
    println!(
        "{tag}{algorithm}: n={} extent={} layerA={} layerB={} verified={}",
        g.vertex_count(),
        drawing.extent,
        partition.by_layer[0].len(),
        partition.by_layer[1].len(),
        report.ok
    );
    if !report.ok {
        for v in &report.violations {
            eprintln!("violation[{}]: {}", v.kind.as_str(), v.detail);
        }
    }
    Ok(report.ok)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let (text, _) = read_input(&args.input)?;
    let (doc, parsed, drawing, partition) = read_layout(&text).map_err(parse_failure)?;
    let rules = if doc.meta.algorithm.starts_with("deg3") {
        VerifyRules::degree3()
    } else {
        VerifyRules::degree4()
    };
    let report =
        verify_drawing(&drawing, &parsed.graph, &partition, rules).map_err(core_failure)?;
    if args.out_report.is_some() {
        write_out(&args.out_report, &report_json(&report))?;
    }
    println!(
        "verified={} violations={} max_coordinate={}",
        report.ok,
        report.violations.len(),
        report.max_coordinate
    );
    if report.ok {
        Ok(ExitCode::SUCCESS)
    } else {
        for v in &report.violations {
            eprintln!("violation[{}]: {}", v.kind.as_str(), v.detail);
        }
        Ok(ExitCode::from(EXIT_VERIFY))
    }
}
