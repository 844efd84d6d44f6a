//! Building equivalent C-complexes for two 2-component links with equal
//! linking numbers.
//!
//! ```sh
//! cargo run --example two_component
//! ```

use ccomplex::{random_descriptor, theorem1_decide, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut shown = 0;
    for seed in 0..50 {
        let d = random_descriptor(2, 5, 2 * seed);
        let e = random_descriptor(2, 3, 2 * seed + 1);
        match theorem1_decide(&d, &e)? {
            Verdict::Yes(pair) if shown == 0 => {
                shown += 1;
                println!("left input\n{d}\nright input\n{e}");
                println!("left moves\n{}", pair.left.transcript());
                println!("right moves\n{}", pair.right.transcript());
                println!("common form\n{}", pair.left.descriptor);
                println!("certificate\n{}", pair.certificate);
            }
            Verdict::Yes(_) => {}
            Verdict::No(m) => println!("seed {seed}: {m}"),
        }
    }
    Ok(())
}
