//! Substitution words and their degree-two Magnus expansions.
//!
//! ```sh
//! cargo run --example magnus
//! ```

use ccomplex::{epsilon, magnus_expand, parse, substitution_word, GroupWord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse(include_str!("../data/borromean.cc"))?;
    for k in 1..=3 {
        let u = substitution_word(&d, k, [1, 2, 3])?;
        println!("u{k} = {u}");
        println!("M{k} = {}", magnus_expand(&u));
    }
    println!("eps(2,3,1) = {}", epsilon(&d, 2, 3, 1)?);

    // Free-standing words: a commutator and a square of an inverse.
    for letters in [&[1, 2, -1, -2][..], &[-1, -1], &[1, -1]] {
        let w = GroupWord::from_signed(letters);
        println!("{w}  ->  {}", magnus_expand(&w));
    }
    Ok(())
}
