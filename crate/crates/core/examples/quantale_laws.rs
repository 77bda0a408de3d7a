//! Checks the quantale laws on every builtin table and on a broken one.

use enritch::quantale::{builtin, check_quantale_laws, LawStatus, QuantaleTables, BUILTIN_NAMES};

fn main() -> enritch::Result<()> {
    for name in BUILTIN_NAMES {
        let q = builtin(name)?;
        let report = check_quantale_laws(q.tables());
        println!("{name:<20} {} elements, all laws hold: {}", q.len(), report.all_passed());
    }

    // Ł3 with 1/2 ⊗ 1 = 0 breaks the unit law
    let mut file = builtin("lukasiewicz3")?.tables().to_file();
    file.tensor[1][2] = "0".into();
    let broken = check_quantale_laws(&QuantaleTables::from_file(&file)?);
    for law in broken.laws.iter().filter(|l| l.status == LawStatus::Fail) {
        println!("broken: {} at {:?}", law.law, law.witness);
    }
    Ok(())
}
