//! Seeded random descriptors pushed through random moves; the invariants
//! must not change.
//!
//! ```sh
//! cargo run --release --example fuzz -- 500
//! ```

use ccomplex::{linking_numbers, mu3_all, random_descriptor, Move};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let rounds: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut applied = 0;
    for seed in 0..rounds {
        let n = rng.gen_range(2..=4);
        let d = random_descriptor(n, rng.gen_range(0..=10), seed);
        let mut cur = d.clone();
        for _ in 0..8 {
            let i = rng.gen_range(1..=n);
            let step = match rng.gen_range(0..3) {
                0 => Move::Stabilize { component: i },
                1 => {
                    let j = (i % n) + 1;
                    Move::CancelPair {
                        first: i,
                        second: j,
                        first_position: rng.gen_range(0..=cur.word(i).len()),
                        second_position: rng.gen_range(0..=cur.word(j).len()),
                    }
                }
                _ => Move::Transpose {
                    component: i,
                    position: rng.gen_range(1..=cur.word(i).len().max(1)),
                },
            };
            // Transpositions of clasps with different partners are refused.
            if let Ok(next) = step.apply(&cur) {
                cur = next;
                applied += 1;
            }
        }
        assert_eq!(linking_numbers(&cur), linking_numbers(&d), "seed {seed}");
        assert_eq!(mu3_all(&cur), mu3_all(&d), "seed {seed}");
    }
    println!("{rounds} descriptors, {applied} moves, invariants unchanged");
}
