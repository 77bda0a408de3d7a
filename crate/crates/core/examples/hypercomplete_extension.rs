//! Hypercompleteness, one-point retractions and extension along a fully
//! faithful map, over the Boolean quantale.

use enritch::diagonal::DiagonalQuantaloid;
use enritch::hull::{
    enumerate_tx, extend_along, extension_from_witness, find_one_point_retraction, is_hypercomplete, yoneda_map, Typing,
};
use enritch::qcat::{QCategory, QFunctor};
use enritch::quantale::boolean;

fn main() -> enritch::Result<()> {
    let d = DiagonalQuantaloid::new(boolean());
    let q = d.quantale();
    let point = QCategory::point("p", 1);

    for typing in [Typing::Strict, Typing::Lax] {
        println!("point, {typing:?}: hypercomplete = {}", is_hypercomplete(&d, &point, typing)?.hypercomplete);
    }

    // a strict witness is a column with no object above it; adjoin one
    let w = is_hypercomplete(&d, &point, Typing::Strict)?.witness.unwrap();
    let bigger = extension_from_witness(&d, &point, &w, "z")?;
    println!("witness {} adjoined, retraction onto the point: {:?}", w.label(q), find_one_point_retraction(&d, &point, &bigger)?);

    // the tight span is hypercomplete, so yoneda extends along the inclusion
    let tx = enumerate_tx(&d, &point)?;
    let span = &tx.category;
    println!("T(point) has {} objects, strict hypercomplete: {}", span.len(), is_hypercomplete(&d, span, Typing::Strict)?.hypercomplete);
    let y = yoneda_map(&point, &tx)?;
    let f = QFunctor::new(&point, span, &y);
    let incl = vec![0];
    let g = QFunctor::new(&point, &bigger, &incl);
    println!("extension of yoneda to the bigger category: {:?}", extend_along(&d, &f, &g)?);
    Ok(())
}
