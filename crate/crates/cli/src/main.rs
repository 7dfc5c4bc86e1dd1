//! `prestigerank` — generate benchmark graphs, rank users, and evaluate
//! how far each ranking demotes labelled abusive users.
//!
//! Exit status: 0 on success, 2 for bad usage or input, 1 for anything else.

use std::fmt;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use prestigerank::evalkit::{self, ALL_USERS};
use prestigerank::graph::{self, SocialGraph, DEFAULT_DIAMETER_CAP};
use prestigerank::ranking::{self, MethodInputs};
use prestigerank::synthgen;
use prestigerank::textfeat;
use prestigerank::Method;

const THREADS_VAR: &str = "PRESTIGERANK_THREADS";

#[derive(Parser)]
#[command(name = "prestigerank", version, about = "Rank prestige in follower graphs and measure spam robustness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a labelled synthetic graph (edges.tsv, labels.csv, config.txt, [tweets.jsonl]).
    Gen {
        /// Generator config (`key = value`); omitted keys use the benchmark defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Structural statistics of an edge list as a one-row CSV.
    Stats {
        edges: PathBuf,
        /// Skip the diameter on graphs with more users than this.
        #[arg(long, default_value_t = DEFAULT_DIAMETER_CAP)]
        diameter_cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score every user with one or more methods.
    Rank {
        edges: PathBuf,
        /// pagerank, hits, noderanking, tunkrank, twitterrank, discounted-pagerank or pruned-pagerank.
        #[arg(long = "method", required = true, value_delimiter = ',')]
        methods: Vec<String>,
        /// Tweets as JSON lines; required by twitterrank.
        #[arg(long)]
        tweets: Option<PathBuf>,
        /// Iteration settings (`tolerance`, `max_iterations`, `damping`, `retweet_probability`).
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output file for a single method (default: stdout).
        #[arg(long, conflicts_with = "out_dir")]
        out: Option<PathBuf>,
        /// Write `<method>.csv` per method into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Decile report, found-curves and prestige shares of labelled groups.
    Eval {
        scores: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// Number of steps in each found-curve.
        #[arg(long, default_value_t = 100)]
        resolution: usize,
    },
    /// Top-k Kendall distance between two score files for each k.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Problem with the caller's input rather than with the program.
#[derive(Debug)]
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_error(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<InputError>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<prestigerank::Error>() {
            return if matches!(e, prestigerank::Error::Io(_)) { 1 } else { 2 };
        }
    }
    1
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(f))
}

/// Runs `write` against `path`, or stdout when no path is given.
fn emit<F>(path: Option<&Path>, write: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> prestigerank::Result<()>,
{
    match path {
        Some(p) => {
            let mut w = create(p)?;
            write(&mut w).with_context(|| format!("writing {}", p.display()))?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            write(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn load_graph(path: &Path) -> Result<SocialGraph> {
    graph::parse_edge_list(open(path)?).with_context(|| format!("in {}", path.display()))
}

fn cmd_gen(config: Option<&Path>, out_dir: &Path) -> Result<()> {
    let cfg = match config {
        Some(p) => synthgen::parse_config(&read_text(p)?).with_context(|| format!("in {}", p.display()))?,
        None => synthgen::GenConfig::benchmark(),
    };
    let lg = synthgen::generate(&cfg)?;
    fs::create_dir_all(out_dir).with_context(|| format!("cannot create {}", out_dir.display()))?;
    emit(Some(&out_dir.join("edges.tsv")), |w| graph::write_edge_list(w, &lg.graph))?;
    emit(Some(&out_dir.join("labels.csv")), |w| synthgen::write_labels(w, &lg.labels))?;
    emit(Some(&out_dir.join("config.txt")), |w| synthgen::write_config(w, &cfg))?;
    if let Some(tweets) = &lg.corpus {
        emit(Some(&out_dir.join("tweets.jsonl")), |w| textfeat::write_tweets(w, tweets))?;
    }
    eprintln!(
        "generated {} users, {} follow edges in {}",
        lg.graph.node_count(),
        lg.graph.edge_count(),
        out_dir.display()
    );
    Ok(())
}

fn cmd_stats(edges: &Path, diameter_cap: usize, out: Option<&Path>) -> Result<()> {
    let g = load_graph(edges)?;
    let stats = graph::graph_stats(&g, diameter_cap);
    emit(out, |w| graph::write_stats_csv(w, &stats))
}

fn cmd_rank(
    edges: &Path,
    methods: &[String],
    tweets: Option<&Path>,
    config: Option<&Path>,
    out: Option<&Path>,
    out_dir: Option<&Path>,
) -> Result<()> {
    let methods = methods
        .iter()
        .map(|m| m.parse::<Method>())
        .collect::<prestigerank::Result<Vec<_>>>()?;
    if methods.len() > 1 && out_dir.is_none() {
        return Err(input_error("ranking with several methods needs --out-dir"));
    }
    let needs_corpus = methods.contains(&Method::TwitterRank);
    if needs_corpus && tweets.is_none() {
        return Err(input_error("twitterrank needs --tweets"));
    }
    let (cfg, retweet_probability) = match config {
        Some(p) => ranking::parse_rank_config(&read_text(p)?).with_context(|| format!("in {}", p.display()))?,
        None => (ranking::IterationConfig::default(), ranking::DEFAULT_RETWEET_PROBABILITY),
    };
    let g = load_graph(edges)?;
    let corpus = match tweets.filter(|_| needs_corpus) {
        Some(p) => {
            let tweets = textfeat::read_tweets(open(p)?).with_context(|| format!("in {}", p.display()))?;
            Some(textfeat::user_term_vectors(&tweets, g.node_count())?)
        }
        None => None,
    };
    let inputs = MethodInputs {
        retweet_probability,
        corpus: corpus.as_ref().map(|(v, c)| (v.as_slice(), c.as_slice())),
    };
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    for m in methods {
        let scores = ranking::run_method(m, &g, &cfg, &inputs)?;
        if !scores.converged {
            eprintln!(
                "warning: {m} did not converge within {} iterations",
                scores.iterations_used
            );
        }
        let path = out_dir.map(|d| d.join(format!("{m}.csv")));
        emit(path.as_deref().or(out), |w| evalkit::write_scores_csv(w, &scores))?;
    }
    Ok(())
}

fn cmd_eval(scores: &Path, labels: &Path, out_dir: &Path, resolution: usize) -> Result<()> {
    let s = evalkit::read_scores_csv(open(scores)?).with_context(|| format!("in {}", scores.display()))?;
    let labels = evalkit::read_labels_csv(open(labels)?).with_context(|| format!("in {}", labels.display()))?;
    let groups = evalkit::label_groups(&labels, s.len())?;
    let e = evalkit::evaluate(&s, &groups, resolution)?;
    fs::create_dir_all(out_dir).with_context(|| format!("cannot create {}", out_dir.display()))?;
    emit(Some(&out_dir.join("deciles.csv")), |w| evalkit::write_decile_report(w, &e.deciles))?;
    emit(Some(&out_dir.join("found.csv")), |w| evalkit::write_found_curves(w, &e.found))?;
    emit(Some(&out_dir.join("shares.csv")), |w| evalkit::write_shares(w, &e.shares))?;
    for row in e.shares.iter().filter(|r| r.group != ALL_USERS) {
        eprintln!("{}: {} users, share {:.6}", row.group, row.members, row.share);
    }
    Ok(())
}

fn cmd_compare(a: &Path, b: &Path, ks: &[usize], out: Option<&Path>) -> Result<()> {
    let sa = evalkit::read_scores_csv(open(a)?).with_context(|| format!("in {}", a.display()))?;
    let sb = evalkit::read_scores_csv(open(b)?).with_context(|| format!("in {}", b.display()))?;
    let curve = evalkit::agreement_curve(&sa, &sb, ks)?;
    emit(out, |w| evalkit::write_agreement_curve(w, &curve))
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| input_error(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring the thread pool")?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    match cli.command {
        Command::Gen { config, out_dir } => cmd_gen(config.as_deref(), &out_dir),
        Command::Stats {
            edges,
            diameter_cap,
            out,
        } => cmd_stats(&edges, diameter_cap, out.as_deref()),
        Command::Rank {
            edges,
            methods,
            tweets,
            config,
            out,
            out_dir,
        } => cmd_rank(
            &edges,
            &methods,
            tweets.as_deref(),
            config.as_deref(),
            out.as_deref(),
            out_dir.as_deref(),
        ),
        Command::Eval {
            scores,
            labels,
            out_dir,
            resolution,
        } => cmd_eval(&scores, &labels, &out_dir, resolution),
        Command::Compare { a, b, ks, out } => cmd_compare(&a, &b, &ks, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
