//! Witness words with f(w^l) = l, and the linear independence probe.

use qmcode::factors::{Factor, GroupConfig};
use qmcode::verify::{witness_qm, witness_word, WitnessMode, WitnessSpec};
use qmcode::{evaluate, Pattern};

fn main() -> qmcode::Result<()> {
    let cases = [
        (WitnessMode::CodeDistinct, GroupConfig::new(Factor::cyclic(5)?, Factor::cyclic(2)?, None)),
        (WitnessMode::CodeIsomorphic, GroupConfig::with_default_swap(Factor::cyclic(3)?, Factor::cyclic(3)?)),
        (WitnessMode::Weighted, GroupConfig::new(Factor::Integer, Factor::cyclic(3)?, None)),
    ];
    let z1: Pattern = "(1,2,3)".parse()?;
    let z2: Pattern = "(5,6,7)".parse()?;
    for (mode, g) in cases {
        let g = g.into_shared();
        let spec = WitnessSpec::with_defaults(z2.clone(), None, &g, mode)?;
        let w = witness_word(&spec, &g, mode)?;
        let q2 = witness_qm(&spec, &g, mode)?;
        let q1 = witness_qm(&WitnessSpec { z: z1.clone(), ..spec.clone() }, &g, mode)?;
        println!("{mode}: w = {w}");
        for l in [1, 2, 10] {
            let wl = w.power(l)?;
            println!("  l = {l:>2}: f_z2 = {}, f_z1 = {}", evaluate(&q2, &wl)?, evaluate(&q1, &wl)?);
        }
    }
    Ok(())
}
