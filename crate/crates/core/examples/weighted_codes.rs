//! Weighted Z-codes over Z * Z/2 and their invariance under transvections.

use qmcode::automorphisms::{apply, Automorphism};
use qmcode::factors::{Factor, GroupConfig};
use qmcode::{evaluate, parse_reduced, weighted_z_code, QmSpec, Side};

fn main() -> qmcode::Result<()> {
    let g = GroupConfig::new(Factor::Integer, Factor::cyclic(2)?, None).into_shared();
    let w = parse_reduced("a^7 b a^-2 b a^-4 b a^-1 b a^9 b a^2 b a^-3", &g)?;
    println!("w = {w}");
    println!("weighted Zcode = {}", weighted_z_code(&w, Side::A)?);

    let q = QmSpec::weighted(Side::A, "(7,11)".parse()?);
    let phi = Automorphism::parse("transv:A:right:1; transv:A:left:1", &g)?;
    let image = apply(&phi, &w)?;
    println!("phi(w) = {image}");
    println!("weighted Zcode of phi(w) = {}", weighted_z_code(&image, Side::A)?);
    println!("f(w) = {}, f(phi(w)) = {}", evaluate(&q, &w)?, evaluate(&q, &image)?);
    Ok(())
}
