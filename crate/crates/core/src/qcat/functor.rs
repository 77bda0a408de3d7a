use serde::Serialize;

use super::{underlying_order, QCategory};
use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::qrel::{rel_compose, QRelation};

/// A map of objects `domain → codomain`, given by codomain indices.
#[derive(Debug, Clone, Copy)]
pub struct QFunctor<'a, E> {
    pub domain: &'a QCategory<E>,
    pub codomain: &'a QCategory<E>,
    pub map: &'a [usize],
}

impl<'a, E: Clone + Eq> QFunctor<'a, E> {
    pub fn new(domain: &'a QCategory<E>, codomain: &'a QCategory<E>, map: &'a [usize]) -> Self {
        assert_eq!(map.len(), domain.len(), "map must cover the domain");
        assert!(map.iter().all(|&y| y < codomain.len()), "map leaves the codomain");
        QFunctor {
            domain,
            codomain,
            map,
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `g ∘ f` as a map; `self` is `f`.
    pub fn then(&self, g: &QFunctor<'_, E>) -> Vec<usize> {
        self.map.iter().map(|&y| g.map[y]).collect()
    }

    /// `f ≅ g` objectwise in the codomain's underlying order.
    pub fn isomorphic_to(&self, other: &[usize]) -> bool {
        let order = underlying_order(self.codomain);
        self.map.iter().zip(other).all(|(&a, &b)| order.isomorphic(a, b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorReport {
    pub type_preserving: bool,
    pub monotone: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl FunctorReport {
    pub fn is_functor(&self) -> bool {
        self.type_preserving && self.monotone
    }
}

/// Checks `|x| = |fx|` and `α(x, x') ≤ β(fx, fx')`.
pub fn validate_functor<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    f: &QFunctor<'_, Q::Elem>,
) -> FunctorReport {
    let (a, b) = (f.domain, f.codomain);
    if let Some(x) = (0..a.len()).find(|&x| a.ty(x) != b.ty(f.apply(x))) {
        return FunctorReport {
            type_preserving: false,
            monotone: true,
            witness: Some(vec![a.name(x).to_string()]),
        };
    }
    let qn = d.quantale();
    for x in 0..a.len() {
        for y in 0..a.len() {
            if !qn.leq(a.get(x, y), b.get(f.apply(x), f.apply(y))) {
                return FunctorReport {
                    type_preserving: true,
                    monotone: false,
                    witness: Some(vec![a.name(x).to_string(), a.name(y).to_string()]),
                };
            }
        }
    }
    FunctorReport {
        type_preserving: true,
        monotone: true,
        witness: None,
    }
}

/// `α(x, x') = β(fx, fx')` for all pairs, cross-checked against `f^♮ ∘ f_♮ = α`.
pub fn is_fully_faithful<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, f: &QFunctor<'_, Q::Elem>) -> bool {
    let a = f.domain;
    let pointwise = (0..a.len())
        .all(|x| (0..a.len()).all(|y| a.get(x, y) == f.codomain.get(f.apply(x), f.apply(y))));
    debug_assert_eq!(
        pointwise,
        rel_compose(d, &cograph(f), &graph(f)).expect("composable") == *a.hom(),
        "fully faithful criteria disagree"
    );
    pointwise
}

/// `f_♮(x, y) = β(fx, y)`.
pub fn graph<E: Clone + Eq>(f: &QFunctor<'_, E>) -> QRelation<E> {
    QRelation::from_fn(f.domain.set().clone(), f.codomain.set().clone(), |x, y| {
        f.codomain.get(f.apply(x), y).clone()
    })
}

/// `f^♮(y, x) = β(y, fx)`.
pub fn cograph<E: Clone + Eq>(f: &QFunctor<'_, E>) -> QRelation<E> {
    QRelation::from_fn(f.codomain.set().clone(), f.domain.set().clone(), |y, x| {
        f.codomain.get(y, f.apply(x)).clone()
    })
}

/// `α ≤ f^♮ ∘ f_♮` and `f_♮ ∘ f^♮ ≤ β`.
pub fn check_adjunction<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, f: &QFunctor<'_, Q::Elem>) -> bool {
    let (g, c) = (graph(f), cograph(f));
    let unit = rel_compose(d, &c, &g).expect("composable");
    let counit = rel_compose(d, &g, &c).expect("composable");
    let qn = d.quantale();
    let leq = |r: &QRelation<Q::Elem>, s: &QRelation<Q::Elem>| {
        (0..r.source().len()).all(|x| (0..r.target().len()).all(|y| qn.leq(r.get(x, y), s.get(x, y))))
    };
    leq(f.domain.hom(), &unit) && leq(&counit, f.codomain.hom())
}
