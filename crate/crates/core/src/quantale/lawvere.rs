use super::Quantale;
use crate::extrat::ExtRat;

/// `([0,∞], +, 0)` ordered by the reverse of the numeric order.
///
/// Top is `0`, bottom is `∞`, joins are numeric minima and meets numeric
/// maxima. Commutative and divisible, with the identity involution.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Lawvere;

impl Quantale for Lawvere {
    type Elem = ExtRat;

    fn leq(&self, a: &ExtRat, b: &ExtRat) -> bool {
        a >= b
    }

    fn tensor(&self, a: &ExtRat, b: &ExtRat) -> ExtRat {
        a + b
    }

    fn unit(&self) -> ExtRat {
        ExtRat::zero()
    }

    fn bottom(&self) -> ExtRat {
        ExtRat::Infinity
    }

    fn join(&self, a: &ExtRat, b: &ExtRat) -> ExtRat {
        a.min(b).clone()
    }

    fn meet(&self, a: &ExtRat, b: &ExtRat) -> ExtRat {
        a.max(b).clone()
    }

    fn left_residual(&self, r: &ExtRat, q: &ExtRat) -> ExtRat {
        r.monus(q)
    }

    fn right_residual(&self, p: &ExtRat, r: &ExtRat) -> ExtRat {
        r.monus(p)
    }

    fn involve(&self, a: &ExtRat) -> ExtRat {
        a.clone()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_divisible(&self) -> bool {
        true
    }

    fn carrier(&self) -> Option<&[ExtRat]> {
        None
    }

    fn label(&self, a: &ExtRat) -> String {
        a.to_string()
    }

    fn parse(&self, text: &str) -> crate::Result<ExtRat> {
        text.parse()
    }
}
