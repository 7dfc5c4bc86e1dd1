//! Spammer prestige shares and top-100 agreement on benchmark graphs.
//!
//! Usage: `cargo run --release --example spam_shares [first_seed] [count]`

use prestigerank::evalkit::{kendall_topk, prestige_share, rank_table};
use prestigerank::ranking::{run_method, MethodInputs};
use prestigerank::synthgen::{generate, parse_config};
use prestigerank::{GenConfig, IterationConfig, Label, Method};

fn main() -> prestigerank::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let first = args.first().copied().unwrap_or(0);
    let count = args.get(1).copied().unwrap_or(10);
    let cfg = IterationConfig::default();
    let methods = [
        Method::Hits,
        Method::PageRank,
        Method::TunkRank,
        Method::DiscountedPageRank,
        Method::PrunedPageRank,
    ];
    println!("seed  hits      pagerank  tunkrank  discount  pruned    | k(pr,pruned) k(pr,hits) ordered");
    // Optional overrides as `key=value;key=value` in SPAM_CFG.
    let base = match std::env::var("SPAM_CFG") {
        Ok(kv) => parse_config(&kv.replace(';', "\n"))?,
        Err(_) => GenConfig::benchmark(),
    };
    for seed in first..first + count {
        let lg = generate(&GenConfig { seed, ..base.clone() })?;
        let spam = lg.members(Label::Spammer);
        let mut shares = Vec::new();
        let mut tables = Vec::new();
        for m in methods {
            let s = run_method(m, &lg.graph, &cfg, &MethodInputs::default())?;
            if !s.converged {
                eprintln!("seed {seed}: {m} stopped after {} sweeps", s.iterations_used);
            }
            shares.push(prestige_share(&s, &spam)?);
            tables.push(rank_table(&s));
        }
        let head = |i: usize| tables[i].head(100).to_vec();
        let k_pruned = kendall_topk(&head(1), &head(4), 0.0)?;
        let k_hits = kendall_topk(&head(1), &head(0), 0.0)?;
        let ordered = shares[0] > shares[1] && shares[1] > shares[2] && shares[2] > shares[3];
        print!("{seed:<5}");
        for s in &shares {
            print!(" {:<9.5}", s);
        }
        println!(" | {k_pruned:<12.4} {k_hits:<10.4} {ordered}");
    }
    Ok(())
}
