//! Over Z/2 * Z/2 every code quasimorphism vanishes.

use qmcode::factors::{Factor, GroupConfig};
use qmcode::{code, evaluate, parse_reduced, Pattern, QmSpec, Side};

fn main() -> qmcode::Result<()> {
    let g = GroupConfig::with_default_swap(Factor::cyclic(2)?, Factor::cyclic(2)?).into_shared();
    let w = parse_reduced("(a b)^6 a", &g)?;
    println!("w = {w}");
    println!("Acode = {}, Bcode = {}", code(&w, Side::A), code(&w, Side::B));
    for z in ["(1)", "(1,2)", "(6)", "(7)", "(1,2,3)"] {
        let q = QmSpec::code(Side::A, z.parse::<Pattern>()?);
        println!("f^A_{z}(w) = {}", evaluate(&q, &w)?);
    }
    Ok(())
}
