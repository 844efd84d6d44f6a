//! Reading, writing and restricting descriptors in the text format.
//!
//! ```sh
//! cargo run --example text_format
//! ```

use ccomplex::{parse, serialize};

const INPUT: &str = "\
# comments and blank lines are ignored
ccomplex v1
components 3
genus 1 0 0
word 1: a+ b-   # clasps with components 2 and 3
word 2: a+
word 3: b-
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse(INPUT)?;
    print!("{}", serialize(&d));
    for c in d.clasps() {
        println!("{} sign {} ends {:?}", c.label, c.sign.symbol(), c.ends);
    }
    print!("{}", d.sublink(&[3, 1])?);

    let err = parse("ccomplex v1\ncomponents 2\ngenus 0 0\nword 1: a+\nword 2: a-\n").unwrap_err();
    println!("error: {err}");
    Ok(())
}
