//! Q-categories, Q-functors and presheaves.
//!
//! A Q-category `(X, α)` is a typed set with a hom relation satisfying
//! `1_X ≤ α` and `α ∘ α ≤ α`. Reflexivity forces `α(x, x) = |x|`.

mod enumerate;
mod files;
mod functor;
mod presheaf;

use std::sync::Arc;

use serde::Serialize;

use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::qrel::{rel_involve, rel_meet, QRelation, TypedSet};

pub use enumerate::{enumerate_symmetric_categories, one_point_extensions, symmetric_categories_up_to};
pub(crate) use enumerate::fresh_name;
pub use files::{CategoryFile, FunctorFile, PresheafFile};
pub use functor::{
    check_adjunction, cograph, graph, is_fully_faithful, validate_functor, FunctorReport, QFunctor,
};
pub use presheaf::{
    is_presheaf, presheaf_category, presheaves_enumerate, px_hom, yoneda, yoneda_lemma_check, Presheaf,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QCategory<E> {
    hom: QRelation<E>,
}

/// Outcome of [`validate_category`], naming the first offending objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryReport {
    pub reflexive: bool,
    pub transitive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl CategoryReport {
    pub fn is_valid(&self) -> bool {
        self.reflexive && self.transitive
    }
}

impl<E: Clone + Eq> QCategory<E> {
    /// Wraps a square relation on `set`; the monad laws are not checked.
    pub fn new(hom: QRelation<E>) -> Result<Self> {
        if hom.source() != hom.target() {
            return Err(Error::ShapeMismatch("hom relation must be square".into()));
        }
        Ok(QCategory { hom })
    }

    /// Builds and validates a category from hom rows.
    pub fn from_rows<Q>(d: &DiagonalQuantaloid<Q>, set: TypedSet<E>, rows: Vec<Vec<E>>) -> Result<Self>
    where
        Q: DiagonalImplication<Elem = E>,
    {
        let set = Arc::new(set);
        let c = QCategory::new(QRelation::new(d, set.clone(), set, rows)?)?;
        let report = validate_category(d, &c);
        if report.is_valid() {
            Ok(c)
        } else {
            Err(Error::Precondition(format!(
                "not a Q-category (reflexive: {}, transitive: {}, witness: {:?})",
                report.reflexive, report.transitive, report.witness
            )))
        }
    }

    /// The empty category.
    pub fn empty() -> Self {
        let set = Arc::new(TypedSet::empty());
        QCategory {
            hom: QRelation::from_fn(set.clone(), set, |_, _| unreachable!()),
        }
    }

    /// The one-object category `{q}` with hom `q`.
    pub fn point(name: impl Into<String>, q: E) -> Self {
        let set = Arc::new(TypedSet::singleton(name, q.clone()));
        QCategory {
            hom: QRelation::from_fn(set.clone(), set, |_, _| q.clone()),
        }
    }

    pub fn hom(&self) -> &QRelation<E> {
        &self.hom
    }

    pub fn set(&self) -> &Arc<TypedSet<E>> {
        self.hom.source()
    }

    pub fn len(&self) -> usize {
        self.set().len()
    }

    pub fn is_empty(&self) -> bool {
        self.set().is_empty()
    }

    pub fn get(&self, x: usize, y: usize) -> &E {
        self.hom.get(x, y)
    }

    pub fn ty(&self, x: usize) -> &E {
        self.set().ty(x)
    }

    pub fn name(&self, x: usize) -> &str {
        self.set().name(x)
    }

    /// The full subcategory on the given objects, in the given order.
    pub fn restrict(&self, objects: &[usize]) -> Self {
        let set = Arc::new(TypedSet::from_parts(
            objects.iter().map(|&i| self.name(i).to_string()).collect(),
            objects.iter().map(|&i| self.ty(i).clone()).collect(),
        ));
        QCategory {
            hom: QRelation::from_fn(set.clone(), set, |a, b| self.get(objects[a], objects[b]).clone()),
        }
    }
}

/// Checks `1_X ≤ α` and `α ∘ α ≤ α`.
pub fn validate_category<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    c: &QCategory<Q::Elem>,
) -> CategoryReport {
    let qn = d.quantale();
    let n = c.len();
    if let Some(x) = (0..n).find(|&x| !qn.leq(c.ty(x), c.get(x, x))) {
        return CategoryReport {
            reflexive: false,
            transitive: true,
            witness: Some(vec![c.name(x).to_string()]),
        };
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let comp = d.compose(c.ty(y), c.get(x, y), c.get(y, z));
                if !qn.leq(&comp, c.get(x, z)) {
                    return CategoryReport {
                        reflexive: true,
                        transitive: false,
                        witness: Some(vec![
                            c.name(x).to_string(),
                            c.name(y).to_string(),
                            c.name(z).to_string(),
                        ]),
                    };
                }
            }
        }
    }
    CategoryReport {
        reflexive: true,
        transitive: true,
        witness: None,
    }
}

/// `α(x, y) = α(y, x)°` for all pairs.
pub fn is_symmetric<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, c: &QCategory<Q::Elem>) -> bool {
    let qn = d.quantale();
    (0..c.len()).all(|x| (0..c.len()).all(|y| *c.get(x, y) == qn.involve(c.get(y, x))))
}

/// `α_s = α ∧ α°`.
pub fn symmetrize<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, c: &QCategory<Q::Elem>) -> QCategory<Q::Elem> {
    let hom = rel_meet(d, c.hom(), &rel_involve(d, c.hom())).expect("square relation");
    QCategory { hom }
}

/// The underlying preorder `x ≤ y ⟺ |x| = |y| and α(x, y) = |x|` with its
/// isomorphism classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderlyingOrder {
    pub leq: Vec<Vec<bool>>,
    /// Class index of each object; classes are numbered by first member.
    pub classes: Vec<usize>,
    pub separated: bool,
}

impl UnderlyingOrder {
    pub fn isomorphic(&self, x: usize, y: usize) -> bool {
        self.classes[x] == self.classes[y]
    }

    pub fn class_count(&self) -> usize {
        self.classes.iter().max().map_or(0, |m| m + 1)
    }
}

pub fn underlying_order<E: Clone + Eq>(c: &QCategory<E>) -> UnderlyingOrder {
    let n = c.len();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| c.ty(x) == c.ty(y) && c.get(x, y) == c.ty(x)).collect())
        .collect();
    let mut classes = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if classes[x] == usize::MAX {
            for y in x..n {
                if leq[x][y] && leq[y][x] {
                    classes[y] = next;
                }
            }
            next += 1;
        }
    }
    UnderlyingOrder {
        separated: next == n,
        leq,
        classes,
    }
}
