//! Seeded sampling campaigns for the defect and Aut-invariance.

use qmcode::automorphisms::GenKind;
use qmcode::factors::{Factor, GroupConfig};
use qmcode::verify::{check_invariance, estimate_defect};
use qmcode::{QmSpec, Side};

fn main() -> qmcode::Result<()> {
    let g = GroupConfig::new(Factor::Integer, Factor::cyclic(3)?, None).into_shared();
    let q = QmSpec::weighted(Side::A, "(1,2,3)".parse()?);

    let defect = estimate_defect(&q, &g, 10_000, 16, 7)?;
    println!("defect: max observed {} (bound {}), {} violations", defect.max_observed, defect.bound, defect.violation_count);

    let inv = check_invariance(&q, &g, &[GenKind::FactorAuto, GenKind::Transvection], 1_000, 7)?;
    println!("invariance: max deviation {} (bound {})", inv.max_observed, inv.bound);

    let conj = check_invariance(&q, &g, &[GenKind::PartialConjugation], 1_000, 7)?;
    println!("partial conjugations: max deviation {} (bound {})", conj.max_observed, conj.bound);
    print!("{}", defect.to_toml());
    Ok(())
}
