//! Obstructions to equivalent C-complexes: the Borromean rings against the
//! unlink, and a necessary-condition report for linked inputs.
//!
//! ```sh
//! cargo run --example obstruction
//! ```

use ccomplex::{parse, prop_mu123_check, theorem2_decide, CComplexDescriptor, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = parse(include_str!("../data/borromean.cc"))?;
    let u = parse(include_str!("../data/unlink3.cc"))?;
    match theorem2_decide(&b, &u)? {
        Verdict::Yes(values) => println!("YES {values:?}"),
        Verdict::No(mismatches) => {
            for m in mismatches {
                println!("NO {m}");
            }
        }
    }

    let a = CComplexDescriptor::from_claspwords(&[0, 0, 0], &["a+ b+", "a+ b+", ""])?;
    let c = CComplexDescriptor::from_claspwords(&[0, 0, 0], &["p- a+ b+ q+", "a+ b+", "p- q+"])?;
    let report = prop_mu123_check(&a, &c)?;
    for t in &report.triples {
        println!("{:?}: {} vs {} (mod {})", t.triple, t.left.value, t.right.value, t.modulus);
    }
    println!("{}", report.outcome());
    Ok(())
}
