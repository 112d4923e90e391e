//! The four generator families of Aut(A * B) and aut-commutators.

use qmcode::automorphisms::{apply, aut_commutator, Automorphism};
use qmcode::factors::{Factor, GroupConfig};
use qmcode::parse_reduced;

fn main() -> qmcode::Result<()> {
    let g = GroupConfig::with_default_swap(Factor::Integer, Factor::Integer).into_shared();
    let w = parse_reduced("a^2 b a^-1 b^3", &g)?;
    println!("w = {w}");
    for text in ["fauto:A:neg", "pconj:A:2", "swap", "transv:A:left:1", "transv:B:right:-1"] {
        let phi = Automorphism::parse(text, &g)?;
        let image = apply(&phi, &w)?;
        let back = apply(&phi.inverse(&g), &image)?;
        println!("{text:>22}: {image}   (inverse gives {back})");
    }

    let d = GroupConfig::with_default_swap(Factor::cyclic(2)?, Factor::cyclic(2)?).into_shared();
    let swap = Automorphism::parse("swap", &d)?;
    println!("over Z/2 * Z/2: [swap, a] = {}", aut_commutator(&swap, &parse_reduced("a", &d)?)?);
    Ok(())
}
