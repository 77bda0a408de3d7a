use std::sync::Arc;

use super::QCategory;
use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::qrel::{rel_residual, QRelation, TypedSet};
use crate::quantale::{Quantale, Side};

/// A column `μ(x): |x| → ty` over the objects of a category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presheaf<E> {
    pub ty: E,
    pub values: Vec<E>,
}

impl<E: Clone + Eq> Presheaf<E> {
    pub fn new(ty: E, values: Vec<E>) -> Self {
        Presheaf { ty, values }
    }

    /// `μ` as a relation `X → {ty}`.
    pub fn as_relation(&self, c: &QCategory<E>) -> QRelation<E> {
        let target = Arc::new(TypedSet::singleton("*", self.ty.clone()));
        QRelation::from_fn(c.set().clone(), target, |x, _| self.values[x].clone())
    }

    pub fn label<Q: Quantale<Elem = E>>(&self, q: &Q) -> String {
        let vals: Vec<String> = self.values.iter().map(|v| q.label(v)).collect();
        format!("{}:({})", q.label(&self.ty), vals.join(","))
    }
}

/// `μ ∘ α ≤ μ`, with each value a diagonal `|x| → ty`.
pub fn is_presheaf<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    c: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
) -> bool {
    let qn = d.quantale();
    let n = c.len();
    mu.values.len() == n
        && (0..n).all(|x| d.is_diagonal(c.ty(x), &mu.ty, &mu.values[x]))
        && (0..n).all(|x| {
            (0..n).all(|y| qn.leq(&d.compose(c.ty(y), c.get(x, y), &mu.values[y]), &mu.values[x]))
        })
}

/// The hom of `PX`: `μ' ↙ μ : ty(μ) → ty(μ')`.
pub fn px_hom<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    c: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
    mu2: &Presheaf<Q::Elem>,
) -> Q::Elem {
    let terms: Vec<Q::Elem> = (0..c.len())
        .map(|x| d.left_implication(c.ty(x), &mu.ty, &mu2.ty, &mu2.values[x], &mu.values[x]))
        .collect();
    let out = d.hom_meet(&mu.ty, &mu2.ty, &terms);
    debug_assert_eq!(
        out,
        *rel_residual(d, Side::Left, &mu2.as_relation(c), &mu.as_relation(c))
            .expect("parallel columns")
            .get(0, 0)
    );
    out
}

/// All presheaves on `c`: types in load order, value tuples lexicographic.
pub fn presheaves_enumerate<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    c: &QCategory<Q::Elem>,
) -> Result<Vec<Presheaf<Q::Elem>>> {
    let types = d
        .symmetric_objects()
        .ok_or_else(|| Error::Unsupported("presheaf enumeration over an infinite quantale".into()))?;
    let mut out = Vec::new();
    for q in types {
        let homs = (0..c.len())
            .map(|x| d.hom(c.ty(x), &q))
            .collect::<Result<Vec<_>>>()?;
        let mut values = Vec::with_capacity(c.len());
        extend_columns(d, c, &q, &homs, &mut values, &mut out);
    }
    Ok(out)
}

fn extend_columns<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    c: &QCategory<Q::Elem>,
    q: &Q::Elem,
    homs: &[Vec<Q::Elem>],
    values: &mut Vec<Q::Elem>,
    out: &mut Vec<Presheaf<Q::Elem>>,
) {
    let k = values.len();
    if k == c.len() {
        out.push(Presheaf::new(q.clone(), values.clone()));
        return;
    }
    let qn = d.quantale();
    for v in &homs[k] {
        // the distributor law between k and every earlier object, both ways
        let ok = (0..k).all(|y| {
            qn.leq(&d.compose(c.ty(y), c.get(k, y), &values[y]), v)
                && qn.leq(&d.compose(c.ty(k), c.get(y, k), v), &values[y])
        });
        if ok {
            values.push(v.clone());
            extend_columns(d, c, q, homs, values, out);
            values.pop();
        }
    }
}

/// `y(x) = α(−, x)` of type `|x|`.
pub fn yoneda<E: Clone + Eq>(c: &QCategory<E>, x: usize) -> Presheaf<E> {
    Presheaf::new(c.ty(x).clone(), c.hom().column(x))
}

/// `hom(y(x), μ) = μ(x)` for every object `x`.
pub fn yoneda_lemma_check<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    c: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
) -> bool {
    (0..c.len()).all(|x| px_hom(d, c, &yoneda(c, x), mu) == mu.values[x])
}

/// The full subcategory of `PX` on the given presheaves, named by label.
pub fn presheaf_category<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    c: &QCategory<Q::Elem>,
    members: &[Presheaf<Q::Elem>],
) -> QCategory<Q::Elem> {
    let set = Arc::new(TypedSet::from_parts(
        members.iter().map(|m| m.label(d.quantale())).collect(),
        members.iter().map(|m| m.ty.clone()).collect(),
    ));
    let hom = QRelation::from_fn(set.clone(), set, |i, j| px_hom(d, c, &members[i], &members[j]));
    QCategory::new(hom).expect("square")
}
