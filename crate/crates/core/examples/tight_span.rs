//! The tight span of a two-object category over Ł3: its members, the
//! tightening retraction and the Yoneda embedding into it.

use enritch::diagonal::DiagonalQuantaloid;
use enritch::hull::{enumerate_lx, enumerate_tx, in_tx, tighten, yoneda_map};
use enritch::qcat::enumerate_symmetric_categories;
use enritch::quantale::lukasiewicz;

fn main() -> enritch::Result<()> {
    let d = DiagonalQuantaloid::new(lukasiewicz(3));
    let q = d.quantale();
    let cats = enumerate_symmetric_categories(&d, 2)?;
    let x = &cats[cats.len() / 2];

    let lx = enumerate_lx(&d, x)?;
    let tx = enumerate_tx(&d, x)?;
    println!("|L X| = {}, |T X| = {}", lx.len(), tx.members.len());
    for mu in &tx.members {
        println!("  tight {}", mu.label(q));
    }
    for mu in lx.iter().filter(|mu| !in_tx(&d, x, mu)).take(4) {
        println!("  {} tightens to {}", mu.label(q), tighten(&d, x, mu)?.label(q));
    }
    println!("yoneda lands at {:?}", yoneda_map(x, &tx)?);
    Ok(())
}
