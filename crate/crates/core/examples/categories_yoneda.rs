//! Enumerates small symmetric categories over Ł3 and checks the Yoneda lemma
//! on one of them.

use enritch::diagonal::DiagonalQuantaloid;
use enritch::qcat::{enumerate_symmetric_categories, presheaves_enumerate, underlying_order, yoneda, yoneda_lemma_check};
use enritch::quantale::{lukasiewicz, Quantale};

fn main() -> enritch::Result<()> {
    let d = DiagonalQuantaloid::new(lukasiewicz(3));
    for n in 0..=3 {
        println!("{n} objects: {} symmetric categories", enumerate_symmetric_categories(&d, n)?.len());
    }

    let cats = enumerate_symmetric_categories(&d, 2)?;
    let c = &cats[cats.len() / 2];
    let q = d.quantale();
    for x in 0..c.len() {
        let row: Vec<String> = (0..c.len()).map(|y| q.label(c.get(x, y))).collect();
        println!("{} : {}  [{}]", c.name(x), q.label(c.ty(x)), row.join(" "));
    }
    println!("iso classes: {}", underlying_order(c).class_count());

    let ps = presheaves_enumerate(&d, c)?;
    println!("{} presheaves, yoneda lemma holds: {}", ps.len(), ps.iter().all(|mu| yoneda_lemma_check(&d, c, mu)));
    println!("column of x0: {}", yoneda(c, 0).label(q));
    Ok(())
}
