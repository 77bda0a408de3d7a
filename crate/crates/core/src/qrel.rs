//! Q-relations: matrices of diagonals between typed sets.
//!
//! A relation `φ: X → Y` has an entry `φ(x, y): |x| → |y|` in `D(Q)` for every
//! pair. Composition joins over the middle set, residuals meet over the
//! outer index, and the involution transposes.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::quantale::{Quantale, Side};

/// A finite set with a type map into the symmetric objects of `D(Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypedSet<E> {
    names: Vec<String>,
    types: Vec<E>,
}

impl<E: Clone + Eq> TypedSet<E> {
    pub fn new<Q>(d: &DiagonalQuantaloid<Q>, names: Vec<String>, types: Vec<E>) -> Result<Self>
    where
        Q: DiagonalImplication<Elem = E>,
    {
        if names.len() != types.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} names but {} types",
                names.len(),
                types.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Schema(format!("duplicate name {n:?}")));
            }
        }
        if let Some(t) = types.iter().find(|t| !d.is_symmetric_object(t)) {
            return Err(Error::Schema(format!(
                "type {} is not fixed by the involution",
                d.quantale().label(t)
            )));
        }
        Ok(TypedSet { names, types })
    }

    /// Builds a set without checking names or types.
    pub fn from_parts(names: Vec<String>, types: Vec<E>) -> Self {
        debug_assert_eq!(names.len(), types.len());
        TypedSet { names, types }
    }

    pub fn empty() -> Self {
        TypedSet {
            names: Vec::new(),
            types: Vec::new(),
        }
    }

    pub fn singleton(name: impl Into<String>, ty: E) -> Self {
        TypedSet {
            names: vec![name.into()],
            types: vec![ty],
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn types(&self) -> &[E] {
        &self.types
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn ty(&self, i: usize) -> &E {
        &self.types[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The set with one more element appended.
    pub fn with_point(&self, name: impl Into<String>, ty: E) -> Self {
        let mut out = self.clone();
        out.names.push(name.into());
        out.types.push(ty);
        out
    }
}

/// A relation `source → target` stored row-major by source index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRelation<E> {
    source: Arc<TypedSet<E>>,
    target: Arc<TypedSet<E>>,
    entries: Vec<E>,
}

fn same_set<E: Eq>(a: &Arc<TypedSet<E>>, b: &Arc<TypedSet<E>>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<E: Clone + Eq> QRelation<E> {
    /// Builds a relation from rows, checking shape and the diagonal law.
    pub fn new<Q>(
        d: &DiagonalQuantaloid<Q>,
        source: Arc<TypedSet<E>>,
        target: Arc<TypedSet<E>>,
        rows: Vec<Vec<E>>,
    ) -> Result<Self>
    where
        Q: DiagonalImplication<Elem = E>,
    {
        if rows.len() != source.len() || rows.iter().any(|r| r.len() != target.len()) {
            return Err(Error::ShapeMismatch(format!(
                "expected a {}×{} matrix",
                source.len(),
                target.len()
            )));
        }
        let entries: Vec<E> = rows.into_iter().flatten().collect();
        let rel = QRelation {
            source,
            target,
            entries,
        };
        for x in 0..rel.source.len() {
            for y in 0..rel.target.len() {
                let (p, q, u) = (rel.source.ty(x), rel.target.ty(y), rel.get(x, y));
                if !d.is_diagonal(p, q, u) {
                    let qn = d.quantale();
                    return Err(Error::ObjectMismatch(format!(
                        "entry ({}, {}) = {} is not a diagonal {} → {}",
                        rel.source.name(x),
                        rel.target.name(y),
                        qn.label(u),
                        qn.label(p),
                        qn.label(q)
                    )));
                }
            }
        }
        Ok(rel)
    }

    /// Builds a relation entrywise; entries are trusted to be diagonals.
    pub fn from_fn(
        source: Arc<TypedSet<E>>,
        target: Arc<TypedSet<E>>,
        mut f: impl FnMut(usize, usize) -> E,
    ) -> Self {
        let (m, n) = (source.len(), target.len());
        let mut entries = Vec::with_capacity(m * n);
        for x in 0..m {
            for y in 0..n {
                entries.push(f(x, y));
            }
        }
        QRelation {
            source,
            target,
            entries,
        }
    }

    pub fn source(&self) -> &Arc<TypedSet<E>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<TypedSet<E>> {
        &self.target
    }

    pub fn get(&self, x: usize, y: usize) -> &E {
        &self.entries[x * self.target.len() + y]
    }

    pub fn row(&self, x: usize) -> &[E] {
        let n = self.target.len();
        &self.entries[x * n..(x + 1) * n]
    }

    pub fn column(&self, y: usize) -> Vec<E> {
        (0..self.source.len()).map(|x| self.get(x, y).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        (0..self.source.len()).map(|x| self.row(x).to_vec()).collect()
    }

    fn check_parallel(&self, other: &Self) -> Result<()> {
        if same_set(&self.source, &other.source) && same_set(&self.target, &other.target) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch("relations are not parallel".into()))
        }
    }
}

/// The relation with every entry `⊥`.
pub fn rel_bottom<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    source: Arc<TypedSet<Q::Elem>>,
    target: Arc<TypedSet<Q::Elem>>,
) -> QRelation<Q::Elem> {
    let bot = d.bottom();
    QRelation::from_fn(source, target, |_, _| bot.clone())
}

/// `1_X(x, x) = |x|`, `⊥` elsewhere.
pub fn rel_identity<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    set: Arc<TypedSet<Q::Elem>>,
) -> QRelation<Q::Elem> {
    let bot = d.bottom();
    let s = set.clone();
    QRelation::from_fn(set.clone(), set, |x, y| if x == y { s.ty(x).clone() } else { bot.clone() })
}

/// `(ψ ∘ φ)(x, z) = ⋁_y ψ(y, z) ∘ φ(x, y)`.
pub fn rel_compose<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    psi: &QRelation<Q::Elem>,
    phi: &QRelation<Q::Elem>,
) -> Result<QRelation<Q::Elem>> {
    if !same_set(&phi.target, &psi.source) {
        return Err(Error::ShapeMismatch("cannot compose: middle sets differ".into()));
    }
    let mid = phi.target.clone();
    let qn = d.quantale();
    Ok(QRelation::from_fn(phi.source.clone(), psi.target.clone(), |x, z| {
        (0..mid.len()).fold(d.bottom(), |acc, y| {
            let c = d.compose(mid.ty(y), phi.get(x, y), psi.get(y, z));
            qn.join(&acc, &c)
        })
    }))
}

/// `Left`: `(ξ ↙ φ)(y, z) = ⋀_x ξ(x, z) ↙ φ(x, y)` for `ξ: X → Z`, `φ: X → Y`.
///
/// `Right`: `(ψ ↘ ξ)(x, y) = ⋀_z ψ(y, z) ↘ ξ(x, z)` for `ψ: Y → Z`, `ξ: X → Z`.
///
/// `outer` is `ξ` and `inner` is `φ` or `ψ`.
pub fn rel_residual<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    side: Side,
    outer: &QRelation<Q::Elem>,
    inner: &QRelation<Q::Elem>,
) -> Result<QRelation<Q::Elem>> {
    let xi = outer;
    match side {
        Side::Left => {
            let phi = inner;
            if !same_set(&xi.source, &phi.source) {
                return Err(Error::ShapeMismatch("ξ ↙ φ needs a common source".into()));
            }
            let (xs, ys, zs) = (&phi.source, &phi.target, &xi.target);
            Ok(QRelation::from_fn(ys.clone(), zs.clone(), |y, z| {
                let terms: Vec<Q::Elem> = (0..xs.len())
                    .map(|x| d.left_implication(xs.ty(x), ys.ty(y), zs.ty(z), xi.get(x, z), phi.get(x, y)))
                    .collect();
                d.hom_meet(ys.ty(y), zs.ty(z), &terms)
            }))
        }
        Side::Right => {
            let psi = inner;
            if !same_set(&xi.target, &psi.target) {
                return Err(Error::ShapeMismatch("ψ ↘ ξ needs a common target".into()));
            }
            let (xs, ys, zs) = (&xi.source, &psi.source, &psi.target);
            Ok(QRelation::from_fn(xs.clone(), ys.clone(), |x, y| {
                let terms: Vec<Q::Elem> = (0..zs.len())
                    .map(|z| d.right_implication(xs.ty(x), ys.ty(y), zs.ty(z), psi.get(y, z), xi.get(x, z)))
                    .collect();
                d.hom_meet(xs.ty(x), ys.ty(y), &terms)
            }))
        }
    }
}

/// `φ°(y, x) = φ(x, y)°`.
pub fn rel_involve<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    phi: &QRelation<Q::Elem>,
) -> QRelation<Q::Elem> {
    QRelation::from_fn(phi.target.clone(), phi.source.clone(), |y, x| {
        d.quantale().involve(phi.get(x, y))
    })
}

/// Entrywise order on parallel relations.
pub fn rel_leq<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    phi: &QRelation<Q::Elem>,
    other: &QRelation<Q::Elem>,
) -> Result<bool> {
    phi.check_parallel(other)?;
    let qn = d.quantale();
    Ok(phi.entries.iter().zip(&other.entries).all(|(a, b)| qn.leq(a, b)))
}

/// Entrywise join of parallel relations.
pub fn rel_join<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    phi: &QRelation<Q::Elem>,
    other: &QRelation<Q::Elem>,
) -> Result<QRelation<Q::Elem>> {
    phi.check_parallel(other)?;
    let qn = d.quantale();
    Ok(QRelation {
        source: phi.source.clone(),
        target: phi.target.clone(),
        entries: phi.entries.iter().zip(&other.entries).map(|(a, b)| qn.join(a, b)).collect(),
    })
}

/// Entrywise meet of parallel relations, taken in each hom-lattice.
pub fn rel_meet<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    phi: &QRelation<Q::Elem>,
    other: &QRelation<Q::Elem>,
) -> Result<QRelation<Q::Elem>> {
    phi.check_parallel(other)?;
    let (s, t) = (phi.source.clone(), phi.target.clone());
    Ok(QRelation::from_fn(s.clone(), t.clone(), |x, y| {
        d.hom_meet(s.ty(x), t.ty(y), [phi.get(x, y), other.get(x, y)])
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypedSetFile {
    pub names: Vec<String>,
    pub types: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub source: TypedSetFile,
    pub target: TypedSetFile,
    pub entries: Vec<Vec<String>>,
}

impl TypedSetFile {
    pub fn load<Q: DiagonalImplication>(&self, d: &DiagonalQuantaloid<Q>) -> Result<TypedSet<Q::Elem>> {
        let types = self
            .types
            .iter()
            .map(|t| d.quantale().parse(t))
            .collect::<Result<Vec<_>>>()?;
        TypedSet::new(d, self.names.clone(), types)
    }

    pub fn store<Q: Quantale>(q: &Q, set: &TypedSet<Q::Elem>) -> Self {
        TypedSetFile {
            names: set.names.clone(),
            types: set.types.iter().map(|t| q.label(t)).collect(),
        }
    }
}

impl RelationFile {
    pub fn load<Q: DiagonalImplication>(&self, d: &DiagonalQuantaloid<Q>) -> Result<QRelation<Q::Elem>> {
        let source = Arc::new(self.source.load(d)?);
        let target = Arc::new(self.target.load(d)?);
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|v| d.quantale().parse(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        QRelation::new(d, source, target, rows)
    }

    pub fn store<Q: Quantale>(q: &Q, rel: &QRelation<Q::Elem>) -> Self {
        RelationFile {
            source: TypedSetFile::store(q, &rel.source),
            target: TypedSetFile::store(q, &rel.target),
            entries: rel
                .rows()
                .iter()
                .map(|r| r.iter().map(|v| q.label(v)).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extrat::{rat, ExtRat};
    use crate::quantale::{boolean, lukasiewicz, nilpotent_minimum, FiniteQuantale, Lawvere};
    use proptest::prelude::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    fn set<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, types: Vec<Q::Elem>) -> Arc<TypedSet<Q::Elem>> {
        Arc::new(TypedSet::new(d, names(types.len()), types).unwrap())
    }

    /// A relation whose entries are picked from each hom-set by `choices`.
    fn pick(
        d: &DiagonalQuantaloid<FiniteQuantale>,
        s: &Arc<TypedSet<usize>>,
        t: &Arc<TypedSet<usize>>,
        choices: &[usize],
    ) -> QRelation<usize> {
        let mut k = 0;
        QRelation::from_fn(s.clone(), t.clone(), |x, y| {
            let homs = d.hom(s.ty(x), t.ty(y)).unwrap();
            k += 1;
            homs[choices[(k - 1) % choices.len()] % homs.len()]
        })
    }

    fn typed(d: &DiagonalQuantaloid<FiniteQuantale>, ts: &[usize]) -> Arc<TypedSet<usize>> {
        let objs = d.symmetric_objects().unwrap();
        set(d, ts.iter().map(|t| objs[t % objs.len()]).collect())
    }

    #[test]
    fn boolean_is_ordinary_relation_composition() {
        let d = DiagonalQuantaloid::new(boolean());
        let x = set(&d, vec![1, 1]);
        for a in 0u32..16 {
            for b in 0u32..16 {
                let phi = QRelation::from_fn(x.clone(), x.clone(), |i, j| ((a >> (2 * i + j)) & 1) as usize);
                let psi = QRelation::from_fn(x.clone(), x.clone(), |i, j| ((b >> (2 * i + j)) & 1) as usize);
                let c = rel_compose(&d, &psi, &phi).unwrap();
                for i in 0..2 {
                    for k in 0..2 {
                        let expect = (0..2).any(|j| *phi.get(i, j) == 1 && *psi.get(j, k) == 1);
                        assert_eq!(*c.get(i, k) == 1, expect);
                    }
                }
                // classical residual: (ξ ↙ φ)(j, k) = ∀i. φ(i, j) ⇒ ξ(i, k)
                let r = rel_residual(&d, Side::Left, &psi, &phi).unwrap();
                for j in 0..2 {
                    for k in 0..2 {
                        let expect = (0..2).all(|i| *phi.get(i, j) == 0 || *psi.get(i, k) == 1);
                        assert_eq!(*r.get(j, k) == 1, expect);
                    }
                }
            }
        }
    }

    #[test]
    fn lawvere_single_term_composition() {
        let d = DiagonalQuantaloid::new(Lawvere);
        let x = Arc::new(TypedSet::singleton("x", rat("0")));
        let y = Arc::new(TypedSet::singleton("y", rat("0")));
        let z = Arc::new(TypedSet::singleton("z", rat("0")));
        let phi = QRelation::new(&d, x.clone(), y.clone(), vec![vec![rat("2")]]).unwrap();
        let psi = QRelation::new(&d, y.clone(), z, vec![vec![rat("3")]]).unwrap();
        assert_eq!(*rel_compose(&d, &psi, &phi).unwrap().get(0, 0), rat("5"));
        assert!(rel_compose(&d, &phi, &psi).is_err());
        let id = rel_identity(&d, x.clone());
        assert_eq!(rel_compose(&d, &phi, &id).unwrap(), phi);
    }

    #[test]
    fn lawvere_identity_has_infinite_off_diagonal() {
        let d = DiagonalQuantaloid::new(Lawvere);
        let x = set(&d, vec![rat("1"), rat("2")]);
        let id = rel_identity(&d, x.clone());
        assert_eq!(id.rows(), vec![vec![rat("1"), ExtRat::Infinity], vec![ExtRat::Infinity, rat("2")]]);
        assert_eq!(rel_compose(&d, &id, &id).unwrap(), id);
        let bot = rel_bottom(&d, x.clone(), x);
        assert!(rel_leq(&d, &bot, &id).unwrap());
        assert!(!rel_leq(&d, &id, &bot).unwrap());
    }

    #[test]
    fn empty_sets() {
        let d = DiagonalQuantaloid::new(boolean());
        let e: Arc<TypedSet<usize>> = Arc::new(TypedSet::empty());
        let x = set(&d, vec![1]);
        let phi = rel_bottom(&d, x.clone(), e.clone());
        let psi = rel_bottom(&d, e.clone(), x.clone());
        // empty join is ⊥, empty meet is the top of the hom
        assert_eq!(*rel_compose(&d, &psi, &phi).unwrap().get(0, 0), 0);
        let r = rel_residual(&d, Side::Left, &psi, &rel_bottom(&d, e.clone(), x.clone())).unwrap();
        assert_eq!(*r.get(0, 0), 1);
    }

    #[test]
    fn residual_by_identity() {
        let d = DiagonalQuantaloid::new(lukasiewicz(3));
        let x = typed(&d, &[0, 1, 2]);
        let xi = pick(&d, &x, &x, &[2, 1, 0, 1]);
        let id = rel_identity(&d, x.clone());
        assert_eq!(rel_residual(&d, Side::Left, &xi, &id).unwrap(), xi);
        assert_eq!(rel_residual(&d, Side::Right, &xi, &id).unwrap(), xi);
    }

    #[test]
    fn leq_rejects_non_parallel() {
        let d = DiagonalQuantaloid::new(boolean());
        let x = set(&d, vec![1]);
        let y = set(&d, vec![1, 1]);
        let a = rel_bottom(&d, x.clone(), x.clone());
        let b = rel_bottom(&d, x, y);
        assert!(matches!(rel_leq(&d, &a, &b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn construction_checks_entries() {
        let d = DiagonalQuantaloid::new(Lawvere);
        let x = set(&d, vec![rat("3")]);
        let y = set(&d, vec![rat("1")]);
        assert!(QRelation::new(&d, x.clone(), y.clone(), vec![vec![rat("2")]]).is_err());
        assert!(QRelation::new(&d, x.clone(), y.clone(), vec![vec![rat("3")], vec![rat("3")]]).is_err());
        assert!(QRelation::new(&d, x, y, vec![vec![rat("3")]]).is_ok());
        assert!(TypedSet::new(&d, vec!["a".into(), "a".into()], vec![rat("0"), rat("0")]).is_err());
    }

    #[test]
    fn file_roundtrip() {
        let d = DiagonalQuantaloid::new(Lawvere);
        let x = set(&d, vec![rat("1/2"), rat("0")]);
        let rel = QRelation::new(
            &d,
            x.clone(),
            x,
            vec![vec![rat("1/2"), rat("3")], vec![rat("3"), ExtRat::Infinity]],
        )
        .unwrap();
        let json = serde_json::to_string(&RelationFile::store(&Lawvere, &rel)).unwrap();
        assert!(json.contains("\"inf\""));
        let back: RelationFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.load(&d).unwrap(), rel);
    }

    fn quantales() -> Vec<DiagonalQuantaloid<FiniteQuantale>> {
        vec![
            DiagonalQuantaloid::new(boolean()),
            DiagonalQuantaloid::new(lukasiewicz(3)),
            DiagonalQuantaloid::new(nilpotent_minimum(5)),
        ]
    }

    fn shape() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>)> {
        (
            0usize..3,
            prop::collection::vec(0usize..5, 0..=3),
            prop::collection::vec(0usize..5, 0..=3),
            prop::collection::vec(0usize..5, 0..=3),
            prop::collection::vec(0usize..8, 1..30),
        )
    }

    proptest! {
        #[test]
        fn relation_calculus_laws((qi, xt, yt, zt, ch) in shape()) {
            let d = &quantales()[qi];
            let (x, y, z) = (typed(d, &xt), typed(d, &yt), typed(d, &zt));
            let phi = pick(d, &x, &y, &ch);
            let psi = pick(d, &y, &z, &ch[1..].iter().chain(&ch).copied().collect::<Vec<_>>());
            let xi = pick(d, &x, &z, &ch.iter().rev().copied().collect::<Vec<_>>());
            let chi = pick(d, &z, &x, &ch);

            // associativity and identities
            let lhs = rel_compose(d, &chi, &rel_compose(d, &psi, &phi).unwrap()).unwrap();
            let rhs = rel_compose(d, &rel_compose(d, &chi, &psi).unwrap(), &phi).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(&rel_compose(d, &phi, &rel_identity(d, x.clone())).unwrap(), &phi);
            prop_assert_eq!(&rel_compose(d, &rel_identity(d, y.clone()), &phi).unwrap(), &phi);

            // both residual adjunctions
            let comp = rel_compose(d, &psi, &phi).unwrap();
            let below = rel_leq(d, &comp, &xi).unwrap();
            let left = rel_residual(d, Side::Left, &xi, &phi).unwrap();
            let right = rel_residual(d, Side::Right, &xi, &psi).unwrap();
            prop_assert_eq!(below, rel_leq(d, &psi, &left).unwrap());
            prop_assert_eq!(below, rel_leq(d, &phi, &right).unwrap());

            // involution
            let inv = |r: &QRelation<usize>| rel_involve(d, r);
            prop_assert_eq!(&inv(&inv(&phi)), &phi);
            prop_assert_eq!(inv(&comp), rel_compose(d, &inv(&phi), &inv(&psi)).unwrap());
            prop_assert_eq!(inv(&left), rel_residual(d, Side::Right, &inv(&xi), &inv(&phi)).unwrap());
            let phi2 = pick(d, &x, &y, &ch.iter().map(|c| c * 3 + 1).collect::<Vec<_>>());
            prop_assert_eq!(
                inv(&rel_join(d, &phi, &phi2).unwrap()),
                rel_join(d, &inv(&phi), &inv(&phi2)).unwrap()
            );
        }

        #[test]
        fn lawvere_adjunction_sampled(
            vals in prop::collection::vec(prop_oneof![Just(None), (0u64..9, 1u64..4).prop_map(Some)], 12),
            types in prop::collection::vec(0u64..3, 3),
        ) {
            let d = DiagonalQuantaloid::new(Lawvere);
            let e = |i: usize| match vals[i] {
                None => ExtRat::Infinity,
                Some((n, k)) => ExtRat::ratio(n, k).unwrap(),
            };
            let ty: Vec<ExtRat> = types.iter().map(|&t| ExtRat::from_integer(t)).collect();
            let x = set(&d, vec![ty[0].clone(), ty[1].clone()]);
            let y = set(&d, vec![ty[2].clone()]);
            let z = set(&d, vec![ty[1].clone()]);
            // clamp into the diagonal range: u ≥ max(p, q) numerically
            let clamp = |s: &Arc<TypedSet<ExtRat>>, t: &Arc<TypedSet<ExtRat>>, off: usize| {
                QRelation::from_fn(s.clone(), t.clone(), |i, j| {
                    e(off + i * 2 + j).max(s.ty(i).clone()).max(t.ty(j).clone())
                })
            };
            let phi = clamp(&x, &y, 0);
            let psi = clamp(&y, &z, 4);
            let xi = clamp(&x, &z, 8);
            let below = rel_leq(&d, &rel_compose(&d, &psi, &phi).unwrap(), &xi).unwrap();
            let left = rel_residual(&d, Side::Left, &xi, &phi).unwrap();
            let right = rel_residual(&d, Side::Right, &xi, &psi).unwrap();
            prop_assert_eq!(below, rel_leq(&d, &psi, &left).unwrap());
            prop_assert_eq!(below, rel_leq(&d, &phi, &right).unwrap());
        }
    }
}
