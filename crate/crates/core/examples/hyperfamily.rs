//! Hyperconvexity on finite partial metric spaces: a family of balls that
//! pairwise meet has a common point in the midpoint space but not without it.

use enritch::parmet::{family_inadmissible_pair, hyperconvex_family_check, ParMetSpace};
use enritch::rat;

fn main() -> enritch::Result<()> {
    let pair = ParMetSpace::parse(&["a", "b"], &[&["0", "4"], &["4", "0"]])?;
    let mid = ParMetSpace::parse(&["a", "b", "m"], &[&["0", "4", "2"], &["4", "0", "2"], &["2", "2", "0"]])?;
    let family = vec![(0, rat("2")), (1, rat("2"))];
    let r = rat("0");

    for (name, m) in [("pair", &pair), ("midpoint", &mid)] {
        let z = hyperconvex_family_check(m, &r, &family, true)?;
        println!("{name}: common point {:?}", z.map(|z| &m.points()[z]));
    }
    let far = vec![(0, rat("1")), (1, rat("1"))];
    println!("radius 1 family inadmissible at {:?}", family_inadmissible_pair(&pair, &r, &far)?);
    Ok(())
}
