//! Command-line front end. Output is deterministic so it can be diffed
//! against golden files.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::contfrac::{eval_cf, LevelWeights};
use crate::paths::{tree_to_path, DyckPath};
use crate::perms::{perm_to_tree, tree_to_perm, PermWord};
use crate::trees::{generate_trees, OrderedTree};
use crate::verify::{run_check, Check, Outcome};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "catalan-cf", version, about = "Continued-fraction generating functions for ordered trees")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a continued fraction as a truncated series.
    Series {
        /// catalan, eq1, eq2, k=<int> or multivariate.
        #[arg(long)]
        weights: LevelWeights,
        /// Highest power of z kept.
        #[arg(long)]
        order: u32,
        /// Fraction depth; defaults to the order.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: Option<u64>,
    },
    /// List every ordered tree on a number of edges.
    Enumerate {
        #[arg(long)]
        edges: usize,
        /// Add level profile, level sum, area and permutation.
        #[arg(long)]
        stats: bool,
    },
    /// Convert between tree, path and permutation encodings.
    Map {
        #[arg(long)]
        from: Kind,
        #[arg(long)]
        to: Kind,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Count increasing patterns of length k and test for 132.
    Count {
        #[arg(long)]
        perm: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Run an exhaustive check up to a number of edges.
    Verify {
        #[arg(long)]
        check: Check,
        #[arg(long)]
        max_edges: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Balanced parentheses.
    Tree,
    /// E/N step word.
    Path,
    /// Permutation word.
    Perm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success,
    VerificationFailed,
    Usage,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Success => 0,
            Exit::VerificationFailed => 1,
            Exit::Usage => 2,
        }
    }
}

/// Runs one subcommand. Results go to `out`, diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<Exit> {
    match execute(cli, out)? {
        Ok(exit) => Ok(exit),
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(Exit::Usage)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> std::io::Result<Result<Exit, Error>> {
    let json = cli.json;
    let exit = match &cli.command {
        Command::Series { weights, order, depth } => {
            let depth = depth.map_or((*order as usize).max(1), |d| d as usize);
            let s = match eval_cf(weights, depth, *order) {
                Ok(s) => s,
                Err(e) => return Ok(Err(e)),
            };
            if json {
                writeln!(out, "{}", to_json(&s.to_records()))?;
            } else {
                writeln!(out, "{s}")?;
            }
            Exit::Success
        }
        Command::Enumerate { edges, stats } => {
            enumerate(*edges, *stats, json, out)?;
            Exit::Success
        }
        Command::Map { from, to, value } => {
            let tree = match parse_as(*from, value) {
                Ok(t) => t,
                Err(e) => return Ok(Err(e)),
            };
            let output = render_as(*to, &tree);
            if json {
                let record = json!({ "from": from, "to": to, "input": value, "output": output });
                writeln!(out, "{}", to_json(&record))?;
            } else {
                writeln!(out, "{output}")?;
            }
            Exit::Success
        }
        Command::Count { perm, k } => {
            let p: PermWord = match perm.parse() {
                Ok(p) => p,
                Err(e) => return Ok(Err(e)),
            };
            let count = match p.count_increasing(*k) {
                Ok(c) => c,
                Err(e) => return Ok(Err(e)),
            };
            let witness = p.has_132();
            if json {
                let record = json!({
                    "perm": p.to_string(),
                    "k": k,
                    "count": count.to_string(),
                    "avoids_132": witness.is_none(),
                    "witness": witness.map(|(i, j, l)| [i, j, l]),
                });
                writeln!(out, "{}", to_json(&record))?;
            } else {
                writeln!(out, "increasing patterns of length {k}: {count}")?;
                match witness {
                    None => writeln!(out, "132: avoided")?,
                    Some((i, j, l)) => writeln!(out, "132: contained at positions ({i}, {j}, {l})")?,
                }
            }
            Exit::Success
        }
        Command::Verify { check, max_edges, k } => {
            let ks: Vec<u32> = k.iter().copied().collect();
            let outcome = match run_check(*check, *max_edges, &ks) {
                Ok(o) => o,
                Err(e) => return Ok(Err(e)),
            };
            match outcome {
                Outcome::Passed(report) => {
                    if json {
                        writeln!(out, "{}", to_json(&json!({ "status": "ok", "report": report })))?;
                    } else {
                        for s in &report.sizes {
                            match s.k {
                                Some(k) => writeln!(out, "{check} n={} k={k} checked={}", s.n, s.checked)?,
                                None => writeln!(out, "{check} n={} checked={}", s.n, s.checked)?,
                            }
                        }
                        writeln!(out, "{check}: ok through n={max_edges}")?;
                    }
                    Exit::Success
                }
                Outcome::Failed(cex) => {
                    if json {
                        writeln!(out, "{}", to_json(&json!({ "status": "failed", "counterexample": cex })))?;
                    } else {
                        writeln!(out, "FAILED {cex}")?;
                    }
                    Exit::VerificationFailed
                }
            }
        }
    };
    Ok(Ok(exit))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

pub fn parse_as(kind: Kind, value: &str) -> crate::Result<OrderedTree> {
    match kind {
        Kind::Tree => value.trim().parse(),
        Kind::Path => Ok(value.trim().parse::<DyckPath>()?.to_tree()),
        Kind::Perm => perm_to_tree(&value.parse()?),
    }
}

pub fn render_as(kind: Kind, tree: &OrderedTree) -> String {
    match kind {
        Kind::Tree => tree.encode(),
        Kind::Path => tree_to_path(tree).to_string(),
        Kind::Perm => tree_to_perm(tree).to_string(),
    }
}

#[derive(Serialize)]
struct TreeRecord {
    tree: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    level_sum: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    area: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    perm: Option<String>,
}

fn enumerate(edges: usize, stats: bool, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        writeln!(out, "[")?;
    }
    for (i, t) in generate_trees(edges).enumerate() {
        if !json {
            if stats {
                let path = tree_to_path(&t);
                writeln!(
                    out,
                    "{t}\tprofile={}\tlevel_sum={}\tarea={}\tperm={}",
                    t.level_profile(),
                    t.level_sum(),
                    path.area(),
                    tree_to_perm(&t)
                )?;
            } else {
                writeln!(out, "{t}")?;
            }
            continue;
        }
        let record = if stats {
            let path = tree_to_path(&t);
            TreeRecord {
                tree: t.encode(),
                profile: Some(t.level_profile().0),
                level_sum: Some(t.level_sum()),
                area: Some(path.area()),
                path: Some(path.to_string()),
                perm: Some(tree_to_perm(&t).to_string()),
            }
        } else {
            TreeRecord {
                tree: t.encode(),
                profile: None,
                level_sum: None,
                path: None,
                area: None,
                perm: None,
            }
        };
        let sep = if i == 0 { "" } else { "," };
        writeln!(out, "{sep}{}", to_json(&record))?;
    }
    if json {
        writeln!(out, "]")?;
    }
    Ok(())
}
