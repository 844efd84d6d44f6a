//! Applying moves, recording a transcript and replaying it.
//!
//! ```sh
//! cargo run --example moves
//! ```

use ccomplex::{canonicalize_2comp, mu3_all, parse, Move, MoveTranscript};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse(include_str!("../data/borromean.cc"))?;
    let mut t = MoveTranscript::new();
    let mut cur = d.clone();
    for step in [
        Move::CancelPair { first: 2, second: 3, first_position: 0, second_position: 2 },
        Move::Transpose { component: 2, position: 1 },
        Move::Stabilize { component: 3 },
    ] {
        cur = t.perform(&cur, step)?;
    }
    print!("{t}");
    println!("{cur}");
    assert_eq!(t.replay(&d)?, cur);
    assert_eq!(mu3_all(&cur), mu3_all(&d));

    // Two-component normal form.
    let w = parse(include_str!("../data/whitehead_like.cc"))?;
    let (canon, steps) = canonicalize_2comp(&w)?;
    print!("{steps}");
    println!("{canon}");
    Ok(())
}
