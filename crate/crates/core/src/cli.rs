//! Command-line surface over all computations, with parseable group
//! specifications and deterministic text or structured (line-oriented
//! key/value) output.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error. Domain errors
//! never panic; every failure renders as one stable line on stderr.

mod record;
mod spec;

pub use record::{Node, Record};
pub use spec::GroupSpec;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::braid::{self, BraidError};
use crate::chartab::{self, CharacterTable, ChartabError};
use crate::cyclo::coprime_residues;
use crate::galois::{self, GaloisError};
use crate::permgrp::{FiniteGroup, GroupError, DEFAULT_ELEMENT_CAP};
use crate::profinite::{
    compare_actions_on_dihedral, CyclicCover, DeckTransformation, DihedralCover, ProfiniteError,
};

/// Environment variable overriding the group-generation element cap.
pub const ELEMENT_CAP_ENV: &str = "GALTAB_MAX_ELEMENTS";
const TUPLE_SPACE_CAP: u128 = 1 << 22;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("{0}")]
    Chartab(#[from] ChartabError),
    #[error("{0}")]
    Galois(#[from] GaloisError),
    #[error("{0}")]
    Braid(#[from] BraidError),
    #[error("{0}")]
    Profinite(#[from] ProfiniteError),
    #[error("--pair must be two cycle lists separated by one comma, e.g. \"(1 2),(1 3)\"")]
    BadPair,
    #[error("pair component '{component}' is not an element of the group")]
    PairNotInGroup { component: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "galtab",
    about = "Exact character tables and their Galois, braid and covering-space actions",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the report to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the character table of a group
    Table {
        /// Group spec: builtin (S5, A4, Z12, D6, Q8) or "deg=<n>; (cycles),..."
        spec: String,
    },
    /// Galois row/column actions on the character table and their compatibility
    Galois {
        spec: String,
        /// Single ell (coprime to the exponent)
        #[arg(long, conflicts_with = "all")]
        ell: Option<i64>,
        /// Iterate every ell coprime to the exponent (default)
        #[arg(long)]
        all: bool,
    },
    /// Commuting-pair classes, SL2(Z) orbits and the centre check
    Pairs { spec: String },
    /// Apply a braid word to a pair of group elements
    Braid {
        spec: String,
        /// Word over s1, s2, s1', s2' (apostrophe = inverse)
        #[arg(long)]
        word: String,
        /// Pair "(cycles),(cycles)" in 1-based cycle notation
        #[arg(long)]
        pair: String,
    },
    /// Covering-space models and the Galois action on deck transformations
    Cover {
        #[command(subcommand)]
        kind: CoverKind,
    },
    /// Count n-tuples up to simultaneous conjugation and coordinate permutation
    Tuples {
        spec: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum CoverKind {
    /// The cyclic cover x1^n x2 = 1 of the punctured plane
    Cyclic {
        n: u64,
        #[arg(long)]
        ell: Option<i64>,
    },
    /// The dihedral cover f(x) = (2 - x^n - x^(-n))/4 of the twice-punctured plane
    Dihedral {
        n: u64,
        #[arg(long)]
        ell: Option<i64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn element_cap() -> usize {
    std::env::var(ELEMENT_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

fn build_group(spec_str: &str) -> Result<(GroupSpec, FiniteGroup), CliError> {
    let spec = GroupSpec::parse(spec_str)?;
    let group = spec.build(element_cap())?;
    Ok((spec, group))
}

/// Left-aligned grid with two-space gutters.
fn render_grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[i].saturating_sub(cell.len());
            if i + 1 < row.len() {
                line.push_str(&" ".repeat(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn table_outputs(spec: &GroupSpec, table: &CharacterTable) -> (Record, String) {
    let mut rec = Record::new();
    rec.leaf("group", spec);
    rec.leaf("order", table.group().order());
    rec.leaf("exponent", table.field_order());
    rec.leaf("classes", table.class_count());
    rec.set("class_labels", Node::leaf_list(table.class_labels()));
    rec.set("degrees", Node::leaf_list(table.degrees()));
    rec.set(
        "rows",
        Node::list(
            table
                .rows()
                .iter()
                .map(|row| Node::leaf_list(row.iter().map(|e| e.terms_string()))),
        ),
    );

    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend(table.class_labels());
    grid.push(header);
    for (i, row) in table.rows().iter().enumerate() {
        let mut line = vec![table.row_labels()[i].clone()];
        line.extend(row.iter().map(|e| e.terms_string()));
        grid.push(line);
    }
    let text = format!(
        "group={} order={} exponent={} classes={}\n{}",
        spec,
        table.group().order(),
        table.field_order(),
        table.class_count(),
        render_grid(&grid)
    );
    (rec, text)
}

fn cmd_table(spec_str: &str) -> Result<(Record, String), CliError> {
    let (spec, group) = build_group(spec_str)?;
    let table = chartab::compute_character_table(&group)?;
    Ok(table_outputs(&spec, &table))
}

fn cmd_galois(spec_str: &str, ell: Option<i64>, _all: bool) -> Result<(Record, String), CliError> {
    let (spec, group) = build_group(spec_str)?;
    let table = chartab::compute_character_table(&group)?;
    let ells: Vec<i64> = match ell {
        Some(l) => vec![l],
        None => coprime_residues(table.field_order()).iter().map(|&l| l as i64).collect(),
    };
    let mut rec = Record::new();
    rec.leaf("group", &spec);
    rec.leaf("order", table.group().order());
    rec.leaf("exponent", table.field_order());
    let mut text = format!(
        "group={} order={} exponent={}\n",
        spec,
        table.group().order(),
        table.field_order()
    );
    let col_labels: Vec<String> = table
        .classes()
        .classes()
        .iter()
        .map(|c| table.group().element(c.rep).to_string())
        .collect();
    let row_labels = table.row_labels().to_vec();
    let mut actions = Vec::new();
    for l in ells {
        let report = galois::verify_compatibility(&table, l)?;
        let rows_str = galois::perm_cycles_string(&report.row_perm, &row_labels);
        let cols_str = galois::perm_cycles_string(&report.col_perm, &col_labels);
        text.push_str(&format!(
            "ell={} rows={} cols={} compatible={}\n",
            report.ell, rows_str, cols_str, report.compatible
        ));
        let mut action = Record::new();
        action.leaf("ell", report.ell);
        action.leaf("row_perm", &rows_str);
        action.leaf("col_perm", &cols_str);
        action.leaf("compatible", report.compatible);
        actions.push(action.into_node());
    }
    rec.set("actions", Node::List(actions));
    Ok((rec, text))
}

fn cmd_pairs(spec_str: &str) -> Result<(Record, String), CliError> {
    let (spec, group) = build_group(spec_str)?;
    let pairs = braid::pair_classes(&group, braid::DEFAULT_PAIR_CAP)?;
    let oracle = braid::pair_class_count_oracle(&group);
    let partition = braid::sl2_orbits(&group, &pairs);
    let center_trivial = braid::center_acts_trivially(&group, &pairs);

    let mut rec = Record::new();
    rec.leaf("group", &spec);
    rec.leaf("order", group.order());
    rec.leaf("pair_classes", pairs.len());
    rec.leaf("oracle", oracle);
    rec.leaf("orbits", partition.orbits.len());
    rec.set(
        "classes",
        Node::list(pairs.classes().iter().enumerate().map(|(i, class)| {
            let mut m = Record::new();
            m.leaf(
                "rep",
                format!(
                    "({},{})",
                    group.element(class.rep.0),
                    group.element(class.rep.1)
                ),
            );
            m.leaf("size", class.members.len());
            m.leaf("orbit", partition.orbit_of[i]);
            m.into_node()
        })),
    );
    rec.leaf("center_z2_trivial", center_trivial);

    let mut text = format!(
        "group={} order={} pair_classes={} oracle={}\n",
        spec,
        group.order(),
        pairs.len(),
        oracle
    );
    for line in braid::orbit_report(&group, &pairs) {
        text.push_str(&line);
        text.push('\n');
    }
    text.push_str(&format!("center_z2_trivial={center_trivial}\n"));
    Ok((rec, text))
}

fn word_string(word: &[braid::BraidLetter]) -> String {
    word.iter()
        .map(|l| match l {
            braid::BraidLetter::S1 => "s1",
            braid::BraidLetter::S1Inv => "s1'",
            braid::BraidLetter::S2 => "s2",
            braid::BraidLetter::S2Inv => "s2'",
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_braid(spec_str: &str, word_str: &str, pair_str: &str) -> Result<(Record, String), CliError> {
    let (spec, group) = build_group(spec_str)?;
    let word = braid::parse_braid_word(word_str)?;
    let parts: Vec<&str> = pair_str.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::BadPair);
    }
    let mut indices = [0usize; 2];
    for (slot, text) in indices.iter_mut().zip(&parts) {
        let perm = crate::permgrp::parse_permutation(text.trim(), group.degree())?;
        *slot = group
            .index_of(&perm)
            .ok_or_else(|| CliError::PairNotInGroup { component: text.trim().to_string() })?;
    }
    let result = braid::braid_act_pair(&group, &word, (indices[0], indices[1]));
    let pair_rendered = format!(
        "({},{})",
        group.element(indices[0]),
        group.element(indices[1])
    );
    let result_rendered = format!(
        "({},{})",
        group.element(result.0),
        group.element(result.1)
    );
    let word_rendered = word_string(&word);

    let mut rec = Record::new();
    rec.leaf("group", &spec);
    rec.leaf("word", &word_rendered);
    rec.leaf("pair", &pair_rendered);
    rec.leaf("result", &result_rendered);
    let text = format!(
        "group={spec} word={word_rendered} pair={pair_rendered} result={result_rendered}\n"
    );
    Ok((rec, text))
}

fn cmd_cover_cyclic(n: u64, ell: Option<i64>) -> Result<(Record, String), CliError> {
    let cover = CyclicCover::new(n)?;
    let mut rec = Record::new();
    rec.leaf("cover", "cyclic");
    rec.leaf("n", n);
    rec.leaf("fiber_size", cover.fiber().len());
    rec.leaf("deck_order", n);
    rec.set("fiber", Node::leaf_list(cover.fiber()));
    let mut text = format!(
        "cover=cyclic n={} fiber_size={} deck_order={}\n",
        n,
        cover.fiber().len(),
        n
    );
    for (j, point) in cover.fiber().iter().enumerate() {
        text.push_str(&format!("fiber {j}: {point}\n"));
    }
    let mut deck_rows = Vec::new();
    for a in 0..n {
        let mut row = Vec::new();
        for b in 0..n {
            let composed = (a + b) % n;
            text.push_str(&format!("deck {a}.{b}={composed}\n"));
            row.push(Node::leaf(composed));
        }
        deck_rows.push(Node::List(row));
    }
    rec.set("deck", Node::List(deck_rows));
    if let Some(l) = ell {
        rec.leaf("ell", l);
        let mut action = Vec::new();
        for k in 0..n {
            let image = match cover.galois_on_deck(l, k)? {
                DeckTransformation::Cyclic { k, .. } => k,
                DeckTransformation::Dihedral { .. } => unreachable!("cyclic cover"),
            };
            text.push_str(&format!("{k} -> {image}\n"));
            action.push(Node::leaf(image));
        }
        rec.set("action", Node::List(action));
    }
    Ok((rec, text))
}

fn deck_str(eps: i8, k: u64) -> String {
    format!("({eps},{k})")
}

fn cmd_cover_dihedral(n: u64, ell: Option<i64>) -> Result<(Record, String), CliError> {
    let cover = DihedralCover::new(n)?;
    let mut rec = Record::new();
    rec.leaf("cover", "dihedral");
    rec.leaf("n", n);
    rec.leaf("fiber_size", cover.fiber().len());
    rec.leaf("deck_order", 2 * n);
    rec.set("fiber", Node::leaf_list(cover.fiber()));
    let mut text = format!(
        "cover=dihedral n={} fiber_size={} deck_order={}\n",
        n,
        cover.fiber().len(),
        2 * n
    );
    for (j, point) in cover.fiber().iter().enumerate() {
        text.push_str(&format!("fiber {j}: {point}\n"));
    }
    let elements = cover.deck_elements();
    let mut deck_rows = Vec::new();
    for &(e1, k1) in &elements {
        let mut row = Vec::new();
        for &(e2, k2) in &elements {
            let eps = e1 * e2;
            let k = (e1 as i64 * k2 as i64 + k1 as i64).rem_euclid(n as i64) as u64;
            text.push_str(&format!(
                "deck {}.{}={}\n",
                deck_str(e1, k1),
                deck_str(e2, k2),
                deck_str(eps, k)
            ));
            row.push(Node::leaf(deck_str(eps, k)));
        }
        deck_rows.push(Node::List(row));
    }
    rec.set("deck", Node::List(deck_rows));
    if let Some(l) = ell {
        rec.leaf("ell", l);
        let comparison = compare_actions_on_dihedral(&cover, l)?;
        let mut action = Vec::new();
        for row in &comparison {
            let from = deck_str(row.deck.0, row.deck.1);
            let to = deck_str(row.covering_image.0, row.covering_image.1);
            let pow = deck_str(row.power_image.0, row.power_image.1);
            text.push_str(&format!("{from} -> {to}\n"));
            text.push_str(&format!(
                "compare {from}: covering={to} power={pow} differs={}\n",
                row.differs
            ));
            let mut m = Record::new();
            m.leaf("from", &from);
            m.leaf("to", &to);
            m.leaf("power", &pow);
            m.leaf("differs", row.differs);
            action.push(m.into_node());
        }
        rec.set("action", Node::List(action));
    }
    Ok((rec, text))
}

fn cmd_tuples(spec_str: &str, n: usize) -> Result<(Record, String), CliError> {
    let (spec, group) = build_group(spec_str)?;
    let count = braid::tuple_classes(&group, n, TUPLE_SPACE_CAP)?;
    let mut rec = Record::new();
    rec.leaf("group", &spec);
    rec.leaf("n", n);
    rec.leaf("tuple_classes", count);
    let text = format!("group={spec} n={n} tuple_classes={count}\n");
    Ok((rec, text))
}

fn dispatch(cli: Cli) -> Result<(Record, String), CliError> {
    match &cli.command {
        Command::Table { spec } => cmd_table(spec),
        Command::Galois { spec, ell, all } => cmd_galois(spec, *ell, *all),
        Command::Pairs { spec } => cmd_pairs(spec),
        Command::Braid { spec, word, pair } => cmd_braid(spec, word, pair),
        Command::Cover { kind } => match kind {
            CoverKind::Cyclic { n, ell } => cmd_cover_cyclic(*n, *ell),
            CoverKind::Dihedral { n, ell } => cmd_cover_dihedral(*n, *ell),
        },
        Command::Tuples { spec, n } => cmd_tuples(spec, *n),
    }
}

/// Runs one command line (including the program name) and captures the
/// rendered output and exit code.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandOutput { code: 0, stdout: rendered, stderr: String::new() }
                }
                _ => CommandOutput { code: 2, stdout: String::new(), stderr: rendered },
            };
        }
    };
    let format = cli.format;
    let output = cli.output.clone();
    match dispatch(cli) {
        Ok((record, text)) => {
            let rendered = match format {
                OutputFormat::Text => text,
                OutputFormat::Structured => record.render(),
            };
            match output {
                None => CommandOutput { code: 0, stdout: rendered, stderr: String::new() },
                Some(path) => match std::fs::write(&path, rendered) {
                    Ok(()) => CommandOutput { code: 0, stdout: String::new(), stderr: String::new() },
                    Err(e) => CommandOutput {
                        code: 1,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
            }
        }
        Err(e) => CommandOutput { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_entry() -> i32 {
    let out = run_command(std::env::args());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

/// The record and text renderings for one command, for content cross-checks.
pub fn render_both<I, T>(argv: I) -> Result<(Record, String), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).expect("caller passes a valid command line");
    dispatch(cli)
}
