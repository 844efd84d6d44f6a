//! Deciding equivalence of C-complexes and replaying the certificate.
//!
//! ```sh
//! cargo run --example equivalence
//! ```

use ccomplex::{decide_equivalent, CComplexDescriptor, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = CComplexDescriptor::from_claspwords(&[0, 0, 0], &["c1- c3- c2+ c4+", "c1- c2+", "c3- c4+"])?;
    // Same complex with the words rotated and the clasps renamed.
    let g = CComplexDescriptor::from_claspwords(&[0, 0, 0], &["y+ z- w- x+", "x+ z-", "w- y+"])?;

    match decide_equivalent(&f, &g) {
        Verdict::Yes(cert) => {
            println!("equivalent\n{cert}");
            assert!(cert.verify(&f, &g));
        }
        Verdict::No(reason) => println!("not equivalent: {reason:?}"),
    }

    // Swapping two letters breaks it.
    let h = CComplexDescriptor::from_claspwords(&[0, 0, 0], &["c3- c1- c2+ c4+", "c1- c2+", "c3- c4+"])?;
    println!("{:?}", decide_equivalent(&f, &h));
    Ok(())
}
