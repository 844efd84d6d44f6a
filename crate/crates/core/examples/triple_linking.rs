//! Linking numbers and triple linking numbers of the Borromean rings and of
//! a variant with every clasp doubled.
//!
//! ```sh
//! cargo run --example triple_linking
//! ```

use ccomplex::{linking_numbers, mu3_detail, parse};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, text) in [
        ("borromean", include_str!("../data/borromean.cc")),
        ("doubled borromean", include_str!("../data/doubled_borromean.cc")),
        ("3-component unlink", include_str!("../data/unlink3.cc")),
    ] {
        let d = parse(text)?;
        println!("{name}");
        for ((i, j), lk) in linking_numbers(&d) {
            println!("  lk({i},{j}) = {lk}");
        }
        let t = mu3_detail(&d, 1, 2, 3)?;
        println!(
            "  eps123={} eps312={} eps231={}  mu(1,2,3) = {}",
            t.e123, t.e312, t.e231, t.mu
        );
    }
    Ok(())
}
