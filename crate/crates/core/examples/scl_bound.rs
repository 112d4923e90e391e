//! A word in [Aut(G), G] with a certified lower bound on scl_Aut.

use qmcode::factors::{Factor, GroupConfig};
use qmcode::verify::{scl_lower_bound, witness_commutator_word, CommutatorChoices};
use qmcode::{a_priori_defect, homogenise};

fn main() -> qmcode::Result<()> {
    let g = GroupConfig::new(Factor::cyclic(5)?, Factor::cyclic(7)?, None).into_shared();
    let wit = witness_commutator_word(&g, &[5, 6, 7], &CommutatorChoices::default())?;
    println!("w = {}", wit.word);
    for line in wit.derivation_log() {
        println!("  {line}");
    }
    println!("z = {}", wit.z);

    let h = homogenise(&wit.qm, &wit.word, 3000)?;
    let d = a_priori_defect(&wit.qm);
    println!("homogenisation in [{}, {}]", h.lower(), h.upper());
    println!("scl_Aut(w) >= {}", scl_lower_bound(&h, &d)?);
    Ok(())
}
