//! The quantaloid `D(Q)` of diagonals of an integral involutive quantale.
//!
//! Objects are elements of `Q`; a diagonal `u: p → q` is an element with
//! `(u / p) ⊗ p = u = q ⊗ (q \ u)`. Composition is `v ∘ u = (v / q) ⊗ u`, the
//! identity on `q` is `q` itself, and the implications `w ↙ u`, `v ↘ w` are
//! right adjoints of composition. Finite quantales compute implications by
//! exhaustive joins over the hom-set; the Lawvere quantale uses closed forms
//! in numeric order:
//!
//! ```text
//! w ↙ u = max(q, r, w + q − u)      u: p → q, w: p → r
//! v ↘ w = max(p, q, w + q − v)      v: q → r, w: p → r
//! ```
//!
//! Only symmetric objects (`q° = q`) are used by the relation calculus.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extrat::ExtRat;
use crate::quantale::{FiniteQuantale, Lawvere, Quantale, Side};

/// A diagonal `value: source → target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalHom<E> {
    #[serde(rename = "p")]
    pub source: E,
    #[serde(rename = "q")]
    pub target: E,
    #[serde(rename = "u")]
    pub value: E,
}

impl<E> DiagonalHom<E> {
    pub fn new(source: E, target: E, value: E) -> Self {
        DiagonalHom {
            source,
            target,
            value,
        }
    }
}

/// Implications of `D(Q)` as raw values, with objects passed explicitly.
pub trait DiagonalImplication: Quantale {
    /// `w ↙ u : q → r` for `u: p → q`, `w: p → r`.
    fn diagonal_left_implication(
        &self,
        p: &Self::Elem,
        q: &Self::Elem,
        r: &Self::Elem,
        w: &Self::Elem,
        u: &Self::Elem,
    ) -> Self::Elem;

    /// `v ↘ w : p → q` for `v: q → r`, `w: p → r`.
    fn diagonal_right_implication(
        &self,
        p: &Self::Elem,
        q: &Self::Elem,
        r: &Self::Elem,
        v: &Self::Elem,
        w: &Self::Elem,
    ) -> Self::Elem;
}

fn is_diagonal_in<Q: Quantale + ?Sized>(quantale: &Q, p: &Q::Elem, q: &Q::Elem, u: &Q::Elem) -> bool {
    quantale.tensor(&quantale.left_residual(u, p), p) == *u
        && quantale.tensor(q, &quantale.right_residual(q, u)) == *u
}

fn compose_in<Q: Quantale + ?Sized>(quantale: &Q, q: &Q::Elem, u: &Q::Elem, v: &Q::Elem) -> Q::Elem {
    quantale.tensor(&quantale.left_residual(v, q), u)
}

/// `w ↙ u` as the join of all `x: q → r` with `x ∘ u ≤ w`.
pub fn exhaustive_left_implication<Q: Quantale + ?Sized>(
    quantale: &Q,
    p: &Q::Elem,
    q: &Q::Elem,
    r: &Q::Elem,
    w: &Q::Elem,
    u: &Q::Elem,
) -> Q::Elem {
    let _ = p;
    let carrier = quantale
        .carrier()
        .expect("exhaustive implication needs a finite carrier");
    let ok: Vec<&Q::Elem> = carrier
        .iter()
        .filter(|x| is_diagonal_in(quantale, q, r, x))
        .filter(|x| quantale.leq(&compose_in(quantale, q, u, x), w))
        .collect();
    quantale.join_all(ok)
}

/// `v ↘ w` as the join of all `x: p → q` with `v ∘ x ≤ w`.
pub fn exhaustive_right_implication<Q: Quantale + ?Sized>(
    quantale: &Q,
    p: &Q::Elem,
    q: &Q::Elem,
    r: &Q::Elem,
    v: &Q::Elem,
    w: &Q::Elem,
) -> Q::Elem {
    let _ = r;
    let carrier = quantale
        .carrier()
        .expect("exhaustive implication needs a finite carrier");
    let ok: Vec<&Q::Elem> = carrier
        .iter()
        .filter(|x| is_diagonal_in(quantale, p, q, x))
        .filter(|x| quantale.leq(&compose_in(quantale, q, x, v), w))
        .collect();
    quantale.join_all(ok)
}

impl DiagonalImplication for FiniteQuantale {
    fn diagonal_left_implication(&self, p: &usize, q: &usize, r: &usize, w: &usize, u: &usize) -> usize {
        exhaustive_left_implication(self, p, q, r, w, u)
    }

    fn diagonal_right_implication(&self, p: &usize, q: &usize, r: &usize, v: &usize, w: &usize) -> usize {
        exhaustive_right_implication(self, p, q, r, v, w)
    }
}

impl DiagonalImplication for Lawvere {
    fn diagonal_left_implication(&self, _p: &ExtRat, q: &ExtRat, r: &ExtRat, w: &ExtRat, u: &ExtRat) -> ExtRat {
        let tail = (w + q).monus(u);
        q.max(r).max(&tail).clone()
    }

    fn diagonal_right_implication(&self, p: &ExtRat, q: &ExtRat, _r: &ExtRat, v: &ExtRat, w: &ExtRat) -> ExtRat {
        let tail = (w + q).monus(v);
        p.max(q).max(&tail).clone()
    }
}

/// `D(Q)` over a concrete quantale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalQuantaloid<Q> {
    quantale: Q,
}

impl<Q: DiagonalImplication> DiagonalQuantaloid<Q> {
    pub fn new(quantale: Q) -> Self {
        DiagonalQuantaloid { quantale }
    }

    pub fn quantale(&self) -> &Q {
        &self.quantale
    }

    /// Tests `(u / p) ⊗ p = u = q ⊗ (q \ u)`.
    pub fn is_diagonal(&self, p: &Q::Elem, q: &Q::Elem, u: &Q::Elem) -> bool {
        let res = is_diagonal_in(&self.quantale, p, q, u);
        if self.quantale.is_divisible() {
            debug_assert_eq!(res, self.quantale.leq(u, &self.quantale.meet(p, q)));
        }
        res
    }

    pub fn is_symmetric_object(&self, q: &Q::Elem) -> bool {
        self.quantale.involve(q) == *q
    }

    /// The objects of `D(Q)°`, when the carrier is finite.
    pub fn symmetric_objects(&self) -> Option<Vec<Q::Elem>> {
        self.quantale.symmetric_elements()
    }

    /// `v ∘ u` for `u: p → q`, `v: q → r`.
    pub fn compose(&self, q: &Q::Elem, u: &Q::Elem, v: &Q::Elem) -> Q::Elem {
        compose_in(&self.quantale, q, u, v)
    }

    /// The top of `D(p, q)`: `p ∧ q` when divisible, else the join of the hom-set.
    pub fn top(&self, p: &Q::Elem, q: &Q::Elem) -> Q::Elem {
        if self.quantale.is_divisible() {
            self.quantale.meet(p, q)
        } else {
            let homs = self.hom(p, q).expect("non-divisible instances are finite");
            self.quantale.join_all(&homs)
        }
    }

    pub fn bottom(&self) -> Q::Elem {
        self.quantale.bottom()
    }

    /// Meet in the hom-lattice `D(p, q)`; the empty meet is [`Self::top`].
    pub fn hom_meet<'a, I>(&self, p: &Q::Elem, q: &Q::Elem, values: I) -> Q::Elem
    where
        I: IntoIterator<Item = &'a Q::Elem>,
        Q::Elem: 'a,
    {
        let top = self.top(p, q);
        let m = values
            .into_iter()
            .fold(top, |acc, v| self.quantale.meet(&acc, v));
        if self.quantale.is_divisible() || self.is_diagonal(p, q, &m) {
            return m;
        }
        let homs = self.hom(p, q).expect("non-divisible instances are finite");
        self.quantale
            .join_all(homs.iter().filter(|u| self.quantale.leq(u, &m)))
    }

    pub fn left_implication(&self, p: &Q::Elem, q: &Q::Elem, r: &Q::Elem, w: &Q::Elem, u: &Q::Elem) -> Q::Elem {
        self.quantale.diagonal_left_implication(p, q, r, w, u)
    }

    pub fn right_implication(&self, p: &Q::Elem, q: &Q::Elem, r: &Q::Elem, v: &Q::Elem, w: &Q::Elem) -> Q::Elem {
        self.quantale.diagonal_right_implication(p, q, r, v, w)
    }

    pub fn check_hom(&self, h: &DiagonalHom<Q::Elem>) -> Result<()> {
        if self.is_diagonal(&h.source, &h.target, &h.value) {
            Ok(())
        } else {
            Err(Error::ObjectMismatch(format!(
                "{} is not a diagonal {} → {}",
                self.quantale.label(&h.value),
                self.quantale.label(&h.source),
                self.quantale.label(&h.target)
            )))
        }
    }

    pub fn identity(&self, q: &Q::Elem) -> DiagonalHom<Q::Elem> {
        DiagonalHom::new(q.clone(), q.clone(), q.clone())
    }

    /// `v ∘ u`, checking that the three forms `(v/q)⊗q⊗(q\u)`, `(v/q)⊗u` and
    /// `v⊗(q\u)` agree.
    pub fn d_compose(&self, v: &DiagonalHom<Q::Elem>, u: &DiagonalHom<Q::Elem>) -> Result<DiagonalHom<Q::Elem>> {
        if u.target != v.source {
            return Err(Error::ObjectMismatch(format!(
                "cannot compose: {} ≠ {}",
                self.quantale.label(&u.target),
                self.quantale.label(&v.source)
            )));
        }
        let qn = &self.quantale;
        let q = &u.target;
        let v_q = qn.left_residual(&v.value, q);
        let q_u = qn.right_residual(q, &u.value);
        let full = qn.tensor(&qn.tensor(&v_q, q), &q_u);
        let short_left = qn.tensor(&v_q, &u.value);
        let short_right = qn.tensor(&v.value, &q_u);
        if full != short_left || short_left != short_right {
            return Err(Error::Invariant(format!(
                "composition forms disagree: {}, {}, {}",
                qn.label(&full),
                qn.label(&short_left),
                qn.label(&short_right)
            )));
        }
        Ok(DiagonalHom::new(u.source.clone(), v.target.clone(), short_left))
    }

    /// `Left`: `w ↙ u : q → r` for `w: p → r`, `u: p → q`.
    /// `Right`: `v ↘ w : p → q` for `v: q → r`, `w: p → r`.
    pub fn d_residual(
        &self,
        side: Side,
        w: &DiagonalHom<Q::Elem>,
        other: &DiagonalHom<Q::Elem>,
    ) -> Result<DiagonalHom<Q::Elem>> {
        match side {
            Side::Left => {
                let u = other;
                if u.source != w.source {
                    return Err(Error::ObjectMismatch("w ↙ u needs a common source".into()));
                }
                let value = self.left_implication(&w.source, &u.target, &w.target, &w.value, &u.value);
                Ok(DiagonalHom::new(u.target.clone(), w.target.clone(), value))
            }
            Side::Right => {
                let v = other;
                if v.target != w.target {
                    return Err(Error::ObjectMismatch("v ↘ w needs a common target".into()));
                }
                let value = self.right_implication(&w.source, &v.source, &w.target, &v.value, &w.value);
                Ok(DiagonalHom::new(w.source.clone(), v.source.clone(), value))
            }
        }
    }

    /// All diagonals `p → q` in load order.
    pub fn hom(&self, p: &Q::Elem, q: &Q::Elem) -> Result<Vec<Q::Elem>> {
        let carrier = self
            .quantale
            .carrier()
            .ok_or_else(|| Error::Unsupported("hom-sets of an infinite quantale".into()))?;
        Ok(carrier
            .iter()
            .filter(|u| self.is_diagonal(p, q, u))
            .cloned()
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extrat::rat;
    use crate::quantale::{boolean, builtin, lukasiewicz, BUILTIN_NAMES};

    fn lawvere() -> DiagonalQuantaloid<Lawvere> {
        DiagonalQuantaloid::new(Lawvere)
    }

    fn h(p: &str, q: &str, u: &str) -> DiagonalHom<ExtRat> {
        DiagonalHom::new(rat(p), rat(q), rat(u))
    }

    #[test]
    fn lawvere_is_diagonal() {
        let d = lawvere();
        assert!(d.is_diagonal(&rat("3"), &rat("4"), &rat("5")));
        assert!(!d.is_diagonal(&rat("3"), &rat("1"), &rat("2")));
        assert!(d.is_diagonal(&rat("7/2"), &rat("7/2"), &rat("7/2")));
        assert!(d.is_diagonal(&rat("inf"), &rat("inf"), &rat("inf")));
        assert!(d.is_diagonal(&rat("1"), &rat("2"), &rat("inf")));
    }

    #[test]
    fn lawvere_compose() {
        let d = lawvere();
        let u = h("2", "3", "4");
        let v = h("3", "3", "5");
        assert_eq!(d.d_compose(&v, &u).unwrap(), h("2", "3", "6"));
        assert_eq!(d.d_compose(&d.identity(&rat("3")), &u).unwrap(), u);
        assert_eq!(d.d_compose(&u, &d.identity(&rat("2"))).unwrap(), u);
        assert!(matches!(d.d_compose(&u, &v), Err(Error::ObjectMismatch(_))));
    }

    #[test]
    fn lawvere_residual_closed_form() {
        let d = lawvere();
        let u = h("1", "2", "3");
        let w = h("1", "2", "4");
        assert_eq!(d.d_residual(Side::Left, &w, &u).unwrap(), h("2", "2", "3"));
        // residual by an identity
        let w = h("2", "5", "6");
        assert_eq!(d.d_residual(Side::Left, &w, &d.identity(&rat("2"))).unwrap(), w);
        assert_eq!(d.d_residual(Side::Right, &w, &d.identity(&rat("5"))).unwrap(), w);
    }

    #[test]
    fn hom_enumeration() {
        let b = DiagonalQuantaloid::new(boolean());
        assert_eq!(b.hom(&1, &1).unwrap(), vec![0, 1]);
        assert_eq!(b.hom(&0, &1).unwrap(), vec![0]);
        let l3 = DiagonalQuantaloid::new(lukasiewicz(3));
        assert_eq!(l3.hom(&1, &1).unwrap(), vec![0, 1]);
        assert!(matches!(lawvere().hom(&rat("0"), &rat("0")), Err(Error::Unsupported(_))));
        for name in BUILTIN_NAMES {
            let d = DiagonalQuantaloid::new(builtin(name).unwrap());
            for q in d.symmetric_objects().unwrap() {
                assert!(d.hom(&q, &q).unwrap().contains(&q));
            }
        }
    }

    #[test]
    fn boolean_composition_forms_agree() {
        let d = DiagonalQuantaloid::new(boolean());
        for p in 0..2 {
            for q in 0..2 {
                for r in 0..2 {
                    for u in d.hom(&p, &q).unwrap() {
                        for v in d.hom(&q, &r).unwrap() {
                            let c = d
                                .d_compose(&DiagonalHom::new(q, r, v), &DiagonalHom::new(p, q, u))
                                .unwrap();
                            assert_eq!(c.value, u.min(v));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn finite_quantaloid_laws() {
        for name in BUILTIN_NAMES {
            let d = DiagonalQuantaloid::new(builtin(name).unwrap());
            let qn = d.quantale();
            let objs = qn.carrier().unwrap().to_vec();
            let homs: Vec<Vec<Vec<usize>>> =
                objs.iter().map(|p| objs.iter().map(|q| d.hom(p, q).unwrap()).collect()).collect();
            for p in &objs {
                for q in &objs {
                    for &u in &homs[*p][*q] {
                        let u = DiagonalHom::new(*p, *q, u);
                        assert_eq!(d.d_compose(&d.identity(q), &u).unwrap(), u, "{name}");
                        assert_eq!(d.d_compose(&u, &d.identity(p)).unwrap(), u, "{name}");
                        let back = DiagonalHom::new(qn.involve(q), qn.involve(p), qn.involve(&u.value));
                        d.check_hom(&back).unwrap();
                        for r in &objs {
                            for &v in &homs[*q][*r] {
                                let v = DiagonalHom::new(*q, *r, v);
                                let vu = d.d_compose(&v, &u).unwrap();
                                let vb = DiagonalHom::new(qn.involve(r), qn.involve(q), qn.involve(&v.value));
                                assert_eq!(
                                    qn.involve(&vu.value),
                                    d.d_compose(&back, &vb).unwrap().value,
                                    "{name}: involution"
                                );
                                for s in &objs {
                                    for &t in &homs[*r][*s] {
                                        let t = DiagonalHom::new(*r, *s, t);
                                        assert_eq!(
                                            d.d_compose(&t, &vu).unwrap(),
                                            d.d_compose(&d.d_compose(&t, &v).unwrap(), &u).unwrap(),
                                            "{name}: associativity"
                                        );
                                    }
                                }
                                for &w in &homs[*p][*r] {
                                    let w = DiagonalHom::new(*p, *r, w);
                                    let below = qn.leq(&vu.value, &w.value);
                                    let left = d.d_residual(Side::Left, &w, &u).unwrap();
                                    let right = d.d_residual(Side::Right, &w, &v).unwrap();
                                    assert_eq!(below, qn.leq(&v.value, &left.value), "{name}: left adjunction");
                                    assert_eq!(below, qn.leq(&u.value, &right.value), "{name}: right adjunction");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    fn half(n: u32) -> ExtRat {
        if n > 24 {
            rat("inf")
        } else {
            ExtRat::ratio(n as u64, 2).unwrap()
        }
    }

    proptest::proptest! {
        #[test]
        fn lawvere_residuals_are_adjoint(p in 0u32..26, q in 0u32..26, r in 0u32..26, a in 0u32..26, b in 0u32..26, c in 0u32..26) {
            let d = lawvere();
            let (p, q, r) = (half(p), half(q), half(r));
            // diagonals p → q are exactly the values ≥ p ∨ q
            let lift = |x: ExtRat, lo: &ExtRat, hi: &ExtRat| x.max(lo.clone()).max(hi.clone());
            let u = DiagonalHom::new(p.clone(), q.clone(), lift(half(a), &p, &q));
            let v = DiagonalHom::new(q.clone(), r.clone(), lift(half(b), &q, &r));
            let w = DiagonalHom::new(p.clone(), r.clone(), lift(half(c), &p, &r));
            let vu = d.d_compose(&v, &u).unwrap();
            let below = d.quantale().leq(&vu.value, &w.value);
            let left = d.d_residual(Side::Left, &w, &u).unwrap();
            let right = d.d_residual(Side::Right, &w, &v).unwrap();
            proptest::prop_assert_eq!(below, d.quantale().leq(&v.value, &left.value));
            proptest::prop_assert_eq!(below, d.quantale().leq(&u.value, &right.value));
            let t = DiagonalHom::new(r.clone(), p.clone(), lift(half(a + c), &r, &p));
            proptest::prop_assert_eq!(
                d.d_compose(&t, &vu).unwrap(),
                d.d_compose(&d.d_compose(&t, &v).unwrap(), &u).unwrap()
            );
        }
    }
}
