//! Density, codensity and essentiality of fully faithful maps, compared on
//! every inclusion of a one-object subcategory over Ł3.

use enritch::diagonal::DiagonalQuantaloid;
use enritch::hull::{is_codense, is_dense, is_essential_bruteforce, tx_transport};
use enritch::qcat::{enumerate_symmetric_categories, is_fully_faithful, QFunctor};
use enritch::quantale::lukasiewicz;

fn main() -> enritch::Result<()> {
    let d = DiagonalQuantaloid::new(lukasiewicz(3));
    let (mut dense, mut total) = (0, 0);
    for y in enumerate_symmetric_categories(&d, 2)? {
        let x = y.restrict(&[0]);
        let map = vec![0];
        let f = QFunctor::new(&x, &y, &map);
        if !is_fully_faithful(&d, &f) {
            continue;
        }
        let ess = is_essential_bruteforce(&d, &f)?;
        let de = is_dense(&d, &f);
        assert_eq!(de, ess.essential);
        assert_eq!(de, is_codense(&d, &f));
        if de {
            assert!(tx_transport(&d, &f)?.is_isomorphism());
            dense += 1;
        }
        total += 1;
    }
    println!("{dense} of {total} inclusions are dense, and exactly those are essential");
    Ok(())
}
