//! Typed relations over the Boolean quantale: composition, involution and
//! the adjunction between composition and residuation.

use std::sync::Arc;

use enritch::diagonal::DiagonalQuantaloid;
use enritch::qrel::{rel_compose, rel_identity, rel_involve, rel_leq, rel_residual, QRelation, TypedSet};
use enritch::quantale::{boolean, Side};

fn main() -> enritch::Result<()> {
    let d = DiagonalQuantaloid::new(boolean());
    let one = 1;
    let a = Arc::new(TypedSet::new(&d, vec!["a1".into(), "a2".into()], vec![one, one])?);
    let b = Arc::new(TypedSet::new(&d, vec!["b1".into(), "b2".into(), "b3".into()], vec![one; 3])?);

    let phi = QRelation::new(&d, a.clone(), b.clone(), vec![vec![1, 0, 1], vec![0, 1, 0]])?;
    let psi = QRelation::new(&d, b.clone(), a.clone(), vec![vec![1, 0], vec![1, 1], vec![0, 0]])?;
    let comp = rel_compose(&d, &psi, &phi)?;
    println!("psi ∘ phi = {:?}", comp.rows());
    println!("phi° = {:?}", rel_involve(&d, &phi).rows());

    // chi ↙ phi is the largest psi' with psi' ∘ phi ≤ chi
    let chi = rel_identity(&d, a.clone());
    let res = rel_residual(&d, Side::Left, &chi, &phi)?;
    println!("id ↙ phi = {:?}", res.rows());
    println!("(id ↙ phi) ∘ phi ≤ id: {}", rel_leq(&d, &rel_compose(&d, &res, &phi)?, &chi)?);
    Ok(())
}
