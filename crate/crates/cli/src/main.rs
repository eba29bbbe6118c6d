//! Command-line front end: word operations, graph analysis, and the
//! verification suites, with text, JSON, and DOT output.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::process::ExitCode;

use vtwin_core::graph::{defining_graph, graph_automorphisms_with_limit, AUTS_DEFAULT_LIMIT};
use vtwin_core::perm::pi_image;
use vtwin_core::raag::RaagWord;
use vtwin_core::rewrite::{decompose, rewrite_tau, vt_equal, vt_is_identity};
use vtwin_core::verify::{run_all, run_suite, DEFAULT_SEED};
use vtwin_core::word::VWord;

#[derive(Parser)]
#[command(
    name = "vtwin",
    version,
    about = "Exact computation in virtual twin groups and their pure subgroups",
    after_help = "Word grammar: whitespace-separated `s<i>` / `r<i>` tokens; \
                  pair-generator words use `L<i>.<j>` with optional `^-1`."
)]
struct Cli {
    /// Strand count (n >= 2)
    #[arg(long = "n", global = true)]
    n: Option<usize>,

    /// Output format; defaults to text (the verify command defaults to json)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomised suites
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Lift resource guards (automorphism enumeration above six strands)
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Permutation image of a word
    Pi { word: String },
    /// Whether a word is the identity
    Isid { word: String },
    /// Whether two words are equal
    Equal { left: String, right: String },
    /// Rewrite a kernel word into pair generators
    Rewrite { word: String },
    /// Split a word into a pure part and a permutation
    Decompose { word: String },
    /// Normal form of a pair-generator word
    Nf { word: String },
    /// Defining graph of the pure subgroup
    Graph,
    /// Neighbourhood sizes, domination, components, chordality
    Graphprops,
    /// Enumerate graph automorphisms
    Auts,
    /// Run a verification suite (or `all`)
    Verify { suite: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn want(cli: &Cli, default: Format) -> Format {
    cli.format.unwrap_or(default)
}

fn strands(cli: &Cli) -> Result<usize, vtwin_core::Error> {
    match cli.n {
        Some(n) if n >= 2 => Ok(n),
        Some(n) => Err(vtwin_core::Error::InvalidStrandCount { got: n, min: 2 }),
        None => Err(vtwin_core::Error::Parse {
            pos: 0,
            msg: "missing required flag --n <strands>".into(),
        }),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, vtwin_core::Error> {
    let n = strands(cli)?;
    match &cli.cmd {
        Cmd::Pi { word } => {
            let w = VWord::parse(n, word)?;
            let p = pi_image(&w);
            match want(cli, Format::Text) {
                Format::Json => println!(
                    "{}",
                    json!({"n": n, "images": (1..=n).map(|x| p.apply(x)).collect::<Vec<_>>()})
                ),
                _ => println!("{p}"),
            }
        }
        Cmd::Isid { word } => {
            let w = VWord::parse(n, word)?;
            let ans = vt_is_identity(&w);
            match want(cli, Format::Text) {
                Format::Json => println!("{}", json!({"n": n, "identity": ans})),
                _ => println!("{ans}"),
            }
        }
        Cmd::Equal { left, right } => {
            let u = VWord::parse(n, left)?;
            let v = VWord::parse(n, right)?;
            let ans = vt_equal(&u, &v)?;
            match want(cli, Format::Text) {
                Format::Json => println!("{}", json!({"n": n, "equal": ans})),
                _ => println!("{ans}"),
            }
        }
        Cmd::Rewrite { word } => {
            let w = VWord::parse(n, word)?;
            let p = rewrite_tau(&w)?;
            match want(cli, Format::Text) {
                Format::Json => println!("{}", json!({"n": n, "word": p.to_string()})),
                _ => println!("{p}"),
            }
        }
        Cmd::Decompose { word } => {
            let w = VWord::parse(n, word)?;
            let (pure, sigma) = decompose(&w)?;
            match want(cli, Format::Text) {
                Format::Json => println!(
                    "{}",
                    json!({
                        "n": n,
                        "pure": pure.to_string(),
                        "perm": (1..=n).map(|x| sigma.apply(x)).collect::<Vec<_>>(),
                    })
                ),
                _ => println!("pure: {pure}\nperm: {sigma}"),
            }
        }
        Cmd::Nf { word } => {
            let w = RaagWord::parse(n, word)?;
            let nf = w.normal_form();
            match want(cli, Format::Text) {
                Format::Json => println!("{}", json!({"n": n, "word": nf.to_string()})),
                _ => println!("{nf}"),
            }
        }
        Cmd::Graph => {
            let graph = defining_graph(n)?;
            match want(cli, Format::Text) {
                Format::Dot => print!("{}", graph.to_dot()),
                Format::Json => {
                    let vertices: Vec<String> =
                        graph.vertices().iter().map(|g| g.to_string()).collect();
                    let mut edges = Vec::new();
                    for (a, &ga) in graph.vertices().iter().enumerate() {
                        for (b, &gb) in graph.vertices().iter().enumerate() {
                            if a < b && graph.adjacent(ga, gb) {
                                edges.push(vec![ga.to_string(), gb.to_string()]);
                            }
                        }
                    }
                    println!("{}", json!({"n": n, "vertices": vertices, "edges": edges}));
                }
                Format::Text => {
                    for &v in graph.vertices() {
                        let nbrs: Vec<String> =
                            graph.link(v).iter().map(|g| g.to_string()).collect();
                        println!("{v}: {}", nbrs.join(" "));
                    }
                }
            }
        }
        Cmd::Graphprops => {
            let graph = defining_graph(n)?;
            let v0 = graph.vertices()[0];
            let props = json!({
                "n": n,
                "vertices": graph.vertex_count(),
                "edges": graph.edge_count(),
                "degree": graph.degree(v0),
                "star_size": graph.star(v0).len(),
                "non_neighbors": graph.non_neighbors(v0).len(),
                "dominating_pairs": graph.dominating_pairs().len(),
                "components_minus_star": graph.components_minus_star(v0).len(),
                "chordal": graph.is_chordal(),
                "complement_connected": graph.complement_connected(),
            });
            match want(cli, Format::Text) {
                Format::Json => println!("{props}"),
                _ => {
                    let obj = props.as_object().expect("object");
                    for (k, val) in obj {
                        println!("{k}: {val}");
                    }
                }
            }
        }
        Cmd::Auts => {
            let limit = if cli.force { n } else { AUTS_DEFAULT_LIMIT };
            let autos = graph_automorphisms_with_limit(n, limit)?;
            let graph = defining_graph(n)?;
            match want(cli, Format::Text) {
                Format::Json => println!(
                    "{}",
                    json!({"n": n, "count": autos.len(), "automorphisms": autos})
                ),
                _ => {
                    println!("count: {}", autos.len());
                    for auto in &autos {
                        let images: Vec<String> = auto
                            .iter()
                            .map(|&r| graph.vertices()[r].to_string())
                            .collect();
                        println!("{}", images.join(" "));
                    }
                }
            }
        }
        Cmd::Verify { suite } => {
            let reports = if suite == "all" {
                run_all(n, cli.seed)?
            } else {
                vec![run_suite(suite, n, cli.seed)?]
            };
            let all_pass = reports.iter().all(|r| r.passed());
            match want(cli, Format::Json) {
                Format::Json => {
                    let vals: Vec<serde_json::Value> =
                        reports.iter().map(|r| r.to_json()).collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&vals).expect("serialises")
                    );
                }
                _ => {
                    for r in &reports {
                        print!("{}", r.to_text());
                    }
                }
            }
            if !all_pass {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
