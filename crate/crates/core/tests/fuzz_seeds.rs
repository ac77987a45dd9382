//! Replays the checked-in fuzz corpora, plus every prefix and a batch of
//! byte flips of each seed, through the harnesses.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Harness = fn(&[u8]);

const TARGETS: [(&str, Harness); 5] = [
    ("edge_list", kblocks::fuzz::edge_list),
    ("dimacs", kblocks::fuzz::dimacs),
    ("witness_json", kblocks::fuzz::witness_json),
    ("kappa_table_json", kblocks::fuzz::kappa_table_json),
    ("decomposition_json", kblocks::fuzz::decomposition_json),
];

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<Vec<u8>> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    out
}

#[test]
fn every_target_has_seeds() {
    for (name, _) in TARGETS {
        assert!(!seeds(name).is_empty(), "{name}");
    }
}

#[test]
fn seeds_and_prefixes() {
    for (name, harness) in TARGETS {
        for seed in seeds(name) {
            for end in 0..=seed.len() {
                harness(&seed[..end]);
            }
        }
    }
}

#[test]
fn byte_flips() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, harness) in TARGETS {
        for seed in seeds(name).into_iter().filter(|s| !s.is_empty()) {
            for _ in 0..200 {
                let mut data = seed.clone();
                for _ in 0..rng.random_range(1..4) {
                    let i = rng.random_range(0..data.len());
                    data[i] = b" \n0123456789abp#e{}[],:\"-"[rng.random_range(0..24)];
                }
                harness(&data);
            }
        }
    }
}
