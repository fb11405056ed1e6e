mod demo;
mod report;
mod verbs;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::{error_exit, Format};

#[derive(Parser, Debug)]
#[command(name = "twinline", version, about = "Separation witnesses for homogeneous non-Hausdorff 1-manifolds")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Seed for anything randomized.
    #[arg(long, default_value_t = 2024, global = true)]
    seed: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Decide whether two points have disjoint neighborhoods.
    Separate { space: String, p: String, q: String },
    /// The twin of a feather point.
    Twin { space: String, p: String },
    /// Apply the flip pivoting at `pivot`.
    Flip { space: String, pivot: String, p: String },
    /// The flip word carrying a feather point to the base line.
    Normalize { space: String, p: String },
    /// Evaluate the contraction of the feather.
    Homotopy {
        space: String,
        p: String,
        #[arg(long, default_value = "1")]
        t: String,
        /// Write the path sampled at `--steps` per unit time to this CSV file.
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 8)]
        steps: u32,
    },
    /// The chart of radius `eps` at a point.
    Chart {
        space: String,
        p: String,
        #[arg(long, default_value = "1")]
        eps: String,
    },
    /// Intersect two basic opens.
    Meet { space: String, a: String, b: String },
    /// Decide density of a finite union of basic opens.
    Dense {
        space: String,
        #[arg(required = true)]
        basics: Vec<String>,
    },
    /// Does the sequence `base` with moving coordinate `limit -/+ 1/m` converge to `point`?
    Converges {
        space: String,
        base: String,
        limit: String,
        #[arg(value_parser = ["below", "above"])]
        side: String,
        point: String,
    },
    /// A homeomorphism word carrying `p` to `q`.
    Move {
        space: String,
        p: String,
        q: String,
        /// Ask for an involution exchanging the two points.
        #[arg(long)]
        involutive: bool,
    },
    /// Connect two points by overlapping interval waves avoiding removed points.
    Chain {
        space: String,
        src: String,
        dst: String,
        #[arg(long = "removed")]
        removed: Vec<String>,
    },
    /// A maximal Hausdorff dense open containing a point.
    MaximalHausdorff { space: String, x: String },
    /// Try a listed subfamily of the canonical cover (points name their
    /// maximal opens), or extract a finite subcover of cofinite sets.
    Subcover {
        space: String,
        #[arg(required = true)]
        items: Vec<String>,
    },
    /// Intersect dense opens inside a probe. Opens are basics or points
    /// naming their maximal opens.
    Baire {
        space: String,
        #[arg(long)]
        probe: String,
        opens: Vec<String>,
        /// Use the family excl{n} of the cofinite space, listing this many candidates.
        #[arg(long)]
        singletons: Option<u64>,
    },
    /// A compact chart neighborhood of `p` inside `v`.
    Microcompact {
        space: String,
        p: String,
        v: String,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Run a scripted scenario.
    Demo {
        name: String,
        #[arg(long)]
        space: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = command_line(std::env::args().skip(1));
    let result = match &cli.verb {
        Verb::Demo { name, space } => demo::run(name, space.as_deref(), cli.seed),
        verb => verbs::run(verb),
    };
    match result {
        Ok(mut report) => {
            report.command = command;
            report.emit(cli.format)
        }
        Err(e) => error_exit(&e, cli.format, &command),
    }
}

/// The invocation without its output format, so text and JSON runs agree.
fn command_line(args: impl Iterator<Item = String>) -> String {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if std::mem::take(&mut skip) || a.starts_with("--format=") {
            continue;
        }
        if a == "--format" {
            skip = true;
            continue;
        }
        out.push(a);
    }
    out.join(" ")
}
