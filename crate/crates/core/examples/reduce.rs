//! Parsing, reduction and arithmetic of words in a free product.

use qmcode::factors::{Factor, GroupConfig};
use qmcode::{format_word, parse_word};

fn main() -> qmcode::Result<()> {
    let g = GroupConfig::new(Factor::cyclic(5)?, Factor::Integer, None).into_shared();
    let w = parse_word("a^3 (a^2 b^4) b^-1 (a b)^3", &g)?;
    println!("input letters: {}", w.len());
    let r = w.reduce();
    println!("reduced: {} ({} letters)", format_word(&r), r.len());
    println!("inverse: {}", r.invert());
    println!("square: {}", r.power(2)?);
    println!("w w^-1 = {}", r.multiply(&r.invert())?);
    Ok(())
}
