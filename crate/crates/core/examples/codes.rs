//! A- and B-codes, disjoint pattern counts and the code quasimorphism.

use qmcode::factors::{Factor, GroupConfig};
use qmcode::{code, evaluate, parse_reduced, theta, Pattern, QmSpec, Side};

fn main() -> qmcode::Result<()> {
    let g = GroupConfig::new(Factor::cyclic(5)?, Factor::cyclic(2)?, None).into_shared();
    let w = parse_reduced("a^2 b a b a b a^4 b a b a", &g)?;
    println!("w = {w}");
    println!("Acode = {}", code(&w, Side::A));
    println!("Bcode = {}", code(&w, Side::B));

    let z: Pattern = "(1,2)".parse()?;
    println!("theta_z = {}", theta(&w, Side::A, &z, false)?);
    println!("theta_zbar = {}", theta(&w, Side::A, &z.reversed(), false)?);
    let q = QmSpec::code(Side::A, z);
    println!("f(w) = {}", evaluate(&q, &w)?);
    println!("f(w^-1) = {}", evaluate(&q, &w.invert())?);
    Ok(())
}
