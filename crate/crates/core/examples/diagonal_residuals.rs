//! Composition and residuals of diagonals over [0, ∞] and over Ł3.

use enritch::diagonal::{DiagonalHom, DiagonalQuantaloid};
use enritch::quantale::{lukasiewicz, Lawvere, Side};
use enritch::rat;

fn main() -> enritch::Result<()> {
    let d = DiagonalQuantaloid::new(Lawvere);
    let u = DiagonalHom::new(rat("1"), rat("2"), rat("3"));
    let v = DiagonalHom::new(rat("2"), rat("1/2"), rat("5/2"));
    let vu = d.d_compose(&v, &u)?;
    println!("v ∘ u = {} : {} → {}", vu.value, vu.source, vu.target);

    // w ↙ u is the largest diagonal x with x ∘ u ≤ w
    let w = DiagonalHom::new(rat("1"), rat("1/2"), rat("4"));
    let left = d.d_residual(Side::Left, &w, &u)?;
    println!("w ↙ u = {}", left.value);
    let right = d.d_residual(Side::Right, &w, &v)?;
    println!("v ↘ w = {}", right.value);
    let inf = DiagonalHom::new(rat("1"), rat("1/2"), rat("inf"));
    println!("inf ↙ u = {}", d.d_residual(Side::Left, &inf, &u)?.value);

    let l3 = DiagonalQuantaloid::new(lukasiewicz(3));
    let objects = l3.symmetric_objects().unwrap();
    println!("Ł3 symmetric objects: {}", objects.len());
    for p in &objects {
        for q in &objects {
            println!("  hom({p}, {q}) has {} diagonals", l3.hom(p, q)?.len());
        }
    }
    Ok(())
}
