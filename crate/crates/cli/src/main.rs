use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use adinkra::code::{format_code, parse_code_file};
use adinkra::construct::*;
use adinkra::dashing::solve_dashings;
use adinkra::dot::{color_name, export_dot};
use adinkra::heights::{assign_heights, move_vertex, valise, Direction, HeightAssignment};
use adinkra::latin::to_latin;
use adinkra::matrix::to_matrix;
use adinkra::structure::{bicolor_report, exchange_group, extract_code_checked, DEFAULT_GROUP_CAP};
use adinkra::susy::{emit_rules, render, RenderFormat};
use adinkra::verify::verify;
use adinkra::{agf, ColoredGraph, LinearCode, Sign};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "adinkra", version, about = "Construct, check and export Adinkras")]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Seed for randomized consistency checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Print progress to standard error.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph and print it as AGF.
    #[command(subcommand)]
    Build(BuildKind),
    /// Quotient of the N-cube by the code in FILE (one bitstring per line).
    Quotient {
        n: usize,
        #[arg(long)]
        code: PathBuf,
    },
    /// Check the Adinkra conditions and classify the graph.
    Verify(Input),
    /// Bicolor cycles, exchange group and extracted code.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Stop the exchange group closure after this many elements.
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        cap: usize,
    },
    /// Recover the code of a quadrilateral coloring.
    ExtractCode(Input),
    /// Find totally odd dashings.
    Dash {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        mode: DashMode,
    },
    /// Set or move vertex heights.
    Heights {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        op: HeightOp,
    },
    /// Render the graph in another format.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Comma-separated output for latin and matrix.
        #[arg(long)]
        csv: bool,
        /// Write matrix entries as x1, x2, ...
        #[arg(long)]
        symbolic: bool,
    },
    /// Supersymmetry transformation rules.
    EmitSusy {
        #[command(flatten)]
        input: Input,
        /// A color number or `all`.
        #[arg(long, default_value = "all")]
        color: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand, Debug)]
enum BuildKind {
    /// Hypercube Q_N.
    Qn { n: usize },
    /// Folded cube: Q_N modulo the all-ones word.
    Folded { n: usize },
    /// Complete graph K_2m.
    K2n { m: usize },
    /// Complete bipartite graph K_n,n.
    Knn { n: usize },
    /// Single bicolor cycle of length 2m.
    Cycle { m: usize },
    /// Quotient of Q_N by a code file.
    Quotient {
        n: usize,
        #[arg(long)]
        code: PathBuf,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// AGF file, or `-` for standard input.
    file: String,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct DashMode {
    /// Print one dashed graph (the default).
    #[arg(long)]
    one: bool,
    /// Print the number of dashings.
    #[arg(long)]
    count: bool,
    /// Print every dashing as a sign string in edge order.
    #[arg(long)]
    all: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct HeightOp {
    /// Bosons at height 0, fermions at height 1.
    #[arg(long)]
    valise: bool,
    /// Fix heights `v=h,...` and extend to the rest of the graph.
    #[arg(long, value_delimiter = ',')]
    set: Vec<String>,
    /// Lower these vertices in order.
    #[arg(long, value_delimiter = ',')]
    lower: Vec<usize>,
    /// Raise these vertices in order.
    #[arg(long, value_delimiter = ',')]
    raise: Vec<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExportFormat {
    Latin,
    Matrix,
    Dot,
    Agf,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(adinkra::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Lib(#[from] adinkra::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Failed(_) | CliError::Lib(_) => 1,
        }
    }
}

/// Command output plus the exit status it should end with.
struct Outcome {
    text: String,
    ok: bool,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

fn read_graph(input: &Input) -> Result<ColoredGraph, CliError> {
    agf::parse(&read_source(&input.file)?).map_err(CliError::Input)
}

fn read_code(n: usize, path: &Path) -> Result<LinearCode, CliError> {
    let text = read_source(&path.to_string_lossy())?;
    let rows = parse_code_file(&text).map_err(CliError::Input)?;
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(CliError::Usage(format!("codeword {bad} does not have length {n}")));
    }
    LinearCode::span(n, &rows).map_err(CliError::Input)
}

fn build(kind: &BuildKind) -> Result<String, CliError> {
    let g = match kind {
        BuildKind::Qn { n } => build_hypercube(*n)?,
        BuildKind::Folded { n } => build_folded_cube(*n)?,
        BuildKind::K2n { m } => build_complete_even(*m)?,
        BuildKind::Knn { n } => build_complete_bipartite(*n)?,
        BuildKind::Cycle { m } => build_bicolor_cycle(*m)?,
        BuildKind::Quotient { n, code } => build_quotient(*n, &read_code(*n, code)?)?,
    };
    Ok(agf::serialize(&g))
}

fn analyze(g: &ColoredGraph, cap: usize, seed: u64) -> Result<String, CliError> {
    let r = bicolor_report(g)?;
    let mut s = String::from("m_ij:\n");
    let width = (1..=r.colors)
        .flat_map(|i| (1..=r.colors).map(move |j| (i, j)))
        .map(|(i, j)| r.m(i, j).to_string().len())
        .max()
        .unwrap_or(1);
    for i in 1..=r.colors {
        let row: Vec<String> = (1..=r.colors).map(|j| format!("{:>width$}", r.m(i, j))).collect();
        let _ = writeln!(s, "  {}", row.join(" "));
    }
    s.push_str("bicolor cycles:\n");
    for p in &r.pairs {
        let lens: Vec<String> = p.cycle_lengths.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(s, "  {} {}: [{}] m = {}", p.i, p.j, lens.join(", "), p.m);
    }
    let yn = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(s, "quadrilateral: {}", yn(r.is_quadrilateral()));
    let _ = writeln!(s, "perfect 1-factorization: {}", yn(r.is_perfect_1factorization()));

    let ex = exchange_group(g, cap)?;
    match ex.order {
        Some(o) => {
            let _ = writeln!(s, "exchange group order: {o}");
        }
        None => {
            let _ = writeln!(s, "exchange group order: more than {} (closure stopped)", ex.cap);
        }
    }
    let _ = writeln!(s, "exchange group abelian: {}", yn(ex.abelian));
    let _ = writeln!(s, "exchange group elementary abelian: {}", yn(ex.elementary_abelian_2));
    if let Some(m) = ex.max_element_order {
        let _ = writeln!(s, "exchange group max element order: {m}");
    }
    let _ = writeln!(s, "exchange group dihedral: {}", yn(ex.dihedral));

    if r.is_quadrilateral() && g.is_connected() {
        let (code, _) = extract_code_checked(g, seed)?;
        s.push_str("code:\n");
        for row in format_code(&code).lines() {
            let _ = writeln!(s, "  {row}");
        }
    }
    Ok(s)
}

fn sign_string(signs: &[Sign]) -> String {
    signs.iter().map(|s| if s.is_dashed() { '-' } else { '+' }).collect()
}

fn dash(g: &ColoredGraph, mode: &DashMode) -> Result<Outcome, CliError> {
    let sys = solve_dashings(g)?;
    let Some(k) = sys.log2_count() else {
        let text = "no totally odd dashing exists\n".to_string();
        return Ok(Outcome { text, ok: mode.count });
    };
    if mode.count {
        let count = match sys.count() {
            Some(c) => c.to_string(),
            None => format!("2^{k}"),
        };
        return Ok(format!("{count} totally odd dashings (2^{k}; {} edges, rank {})\n", sys.edges, sys.rank()).into());
    }
    if mode.all {
        let signs = sys.enumerate().map_err(|_| {
            let exact = sys.count().map_or(format!("2^{k}"), |c| format!("2^{k} = {c}"));
            CliError::Failed(format!("refusing to list {exact} totally odd dashings (limit 2^20)"))
        })?;
        return Ok(signs.iter().map(|s| sign_string(s) + "\n").collect::<String>().into());
    }
    let signs = sys.particular().expect("consistent system has a solution");
    Ok(agf::serialize(&g.with_signs(&signs)?).into())
}

fn parse_assignment(item: &str) -> Result<(usize, i64), CliError> {
    let bad = || CliError::Usage(format!("expected v=h, got {item:?}"));
    let (v, h) = item.split_once('=').ok_or_else(bad)?;
    Ok((v.trim().parse().map_err(|_| bad())?, h.trim().parse().map_err(|_| bad())?))
}

fn heights(g: ColoredGraph, op: &HeightOp) -> Result<String, CliError> {
    let g = if g.parity().is_none() && g.is_bipartite() {
        g.with_default_parity()?
    } else {
        g
    };
    let h = if op.valise {
        valise(&g)?
    } else if !op.set.is_empty() {
        let partial = op.set.iter().map(|s| parse_assignment(s)).collect::<Result<Vec<_>, _>>()?;
        assign_heights(&g, &partial)?
    } else {
        let mut h = HeightAssignment::of_graph(&g)?;
        for &v in &op.lower {
            h = move_vertex(&g, &h, v, Direction::Lower)?;
        }
        for &v in &op.raise {
            h = move_vertex(&g, &h, v, Direction::Raise)?;
        }
        h
    };
    Ok(agf::serialize(&h.apply(&g)?))
}

fn row_names(colors: usize) -> Vec<String> {
    (1..=colors)
        .map(|t| match color_name(t) {
            Some(c) => c[..1].to_uppercase() + &c[1..],
            None => format!("C{t}"),
        })
        .collect()
}

fn export(g: &ColoredGraph, format: ExportFormat, csv: bool, symbolic: bool) -> Result<String, CliError> {
    Ok(match format {
        ExportFormat::Agf => agf::serialize(g),
        ExportFormat::Dot => export_dot(g),
        ExportFormat::Latin => {
            let l = to_latin(g)?;
            let names = row_names(g.colors());
            if csv {
                l.render_csv(&names)
            } else {
                l.render_text(&names)
            }
        }
        ExportFormat::Matrix => {
            let m = to_matrix(g)?;
            if csv {
                m.render_csv(symbolic)
            } else {
                m.render_text(symbolic)
            }
        }
    })
}

fn emit_susy(g: &ColoredGraph, color: &str, format: &str) -> Result<String, CliError> {
    let format: RenderFormat = format.parse().map_err(|e: adinkra::Error| CliError::Usage(e.to_string()))?;
    let colors: Vec<usize> = if color == "all" {
        (1..=g.colors()).collect()
    } else {
        match color.parse() {
            Ok(k) if (1..=g.colors()).contains(&k) => vec![k],
            _ => return Err(CliError::Usage(format!("color must be all or in 1..={}, got {color:?}", g.colors()))),
        }
    };
    Ok(render(&emit_rules(g)?, &colors, format))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let log = |msg: String| {
        if cli.verbose > 0 {
            eprintln!("{msg}");
        }
    };
    let load = |input: &Input| -> Result<ColoredGraph, CliError> {
        let g = read_graph(input)?;
        log(format!("read {}: {} vertices, {} colors, {} edges", input.file, g.n(), g.colors(), g.edges().len()));
        Ok(g)
    };
    Ok(match &cli.command {
        Command::Build(kind) => build(kind)?.into(),
        Command::Quotient { n, code } => build(&BuildKind::Quotient { n: *n, code: code.clone() })?.into(),
        Command::Verify(input) => {
            let report = verify(&load(input)?);
            Outcome {
                ok: report.ok(),
                text: report.to_string(),
            }
        }
        Command::Analyze { input, cap } => analyze(&load(input)?, *cap, cli.seed)?.into(),
        Command::ExtractCode(input) => {
            let (code, bases) = extract_code_checked(&load(input)?, cli.seed)?;
            log(format!("base points checked: 1 {bases:?}"));
            format_code(&code).into()
        }
        Command::Dash { input, mode } => dash(&load(input)?, mode)?,
        Command::Heights { input, op } => heights(load(input)?, op)?.into(),
        Command::Export {
            input,
            format,
            csv,
            symbolic,
        } => export(&load(input)?, *format, *csv, *symbolic)?.into(),
        Command::EmitSusy { input, color, format } => emit_susy(&load(input)?, color, format)?.into(),
    })
}

fn write_output(path: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = write_output(cli.output.as_ref(), &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
