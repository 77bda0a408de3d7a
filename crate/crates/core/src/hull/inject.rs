use super::require_symmetric;
use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::qcat::{is_fully_faithful, underlying_order, validate_category, validate_functor, Presheaf, QCategory, QFunctor};
use crate::qrel::QRelation;

/// Finds `h: Y → Z` with `h ∘ g ≅ f`, for `f: X → Z` and fully faithful
/// `g: X → Y`.
///
/// Tries the point-by-point construction first: for each `y` outside the
/// image of `g`, the column `μ(z) = ⋁_w α_Y(w, y) ∘ β(z, h(w))` over the
/// already assigned `w` is bounded by some `β(−, z₀)` when `Z` is
/// hypercomplete, and `h(y) = z₀`. If that gets stuck, every type-preserving
/// map is searched. `Ok(None)` means no extension exists.
pub fn extend_along<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    f: &QFunctor<'_, Q::Elem>,
    g: &QFunctor<'_, Q::Elem>,
) -> Result<Option<Vec<usize>>> {
    if !std::ptr::eq(f.domain, g.domain) && f.domain != g.domain {
        return Err(Error::Precondition("f and g need a common domain".into()));
    }
    for c in [f.domain, f.codomain, g.codomain] {
        require_symmetric(d, c)?;
    }
    if !validate_functor(d, f).is_functor() || !validate_functor(d, g).is_functor() {
        return Err(Error::Precondition("f and g must be Q-functors".into()));
    }
    if !is_fully_faithful(d, g) {
        return Err(Error::Precondition("g is not fully faithful".into()));
    }
    let (y, z) = (g.codomain, f.codomain);
    let order = underlying_order(z);
    let accept = |h: &[usize]| {
        validate_functor(d, &QFunctor::new(y, z, h)).is_functor()
            && (0..f.domain.len()).all(|x| order.isomorphic(h[g.apply(x)], f.apply(x)))
    };
    if let Some(h) = constructive(d, f, g) {
        if accept(&h) {
            return Ok(Some(h));
        }
    }
    let h = exhaustive(d, f, g, &order);
    debug_assert!(h.as_deref().is_none_or(accept));
    Ok(h)
}

fn constructive<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    f: &QFunctor<'_, Q::Elem>,
    g: &QFunctor<'_, Q::Elem>,
) -> Option<Vec<usize>> {
    let (y, z) = (g.codomain, f.codomain);
    let qn = d.quantale();
    let mut h: Vec<Option<usize>> = vec![None; y.len()];
    for x in 0..f.domain.len() {
        h[g.apply(x)].get_or_insert(f.apply(x));
    }
    for y0 in 0..y.len() {
        if h[y0].is_some() {
            continue;
        }
        let mu: Vec<Q::Elem> = (0..z.len())
            .map(|zz| {
                let terms: Vec<Q::Elem> = (0..y.len())
                    .filter_map(|w| h[w].map(|hw| d.compose(y.ty(w), z.get(zz, hw), y.get(w, y0))))
                    .collect();
                qn.join_all(&terms)
            })
            .collect();
        let z0 = (0..z.len())
            .find(|&c| z.ty(c) == y.ty(y0) && (0..z.len()).all(|a| qn.leq(&mu[a], z.get(a, c))))?;
        h[y0] = Some(z0);
    }
    Some(h.into_iter().map(|v| v.expect("assigned")).collect())
}

fn exhaustive<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    f: &QFunctor<'_, Q::Elem>,
    g: &QFunctor<'_, Q::Elem>,
    order: &crate::qcat::UnderlyingOrder,
) -> Option<Vec<usize>> {
    let (y, z) = (g.codomain, f.codomain);
    let candidates: Vec<Vec<usize>> = (0..y.len())
        .map(|b| {
            (0..z.len())
                .filter(|&c| z.ty(c) == y.ty(b))
                .filter(|&c| {
                    (0..f.domain.len())
                        .filter(|&x| g.apply(x) == b)
                        .all(|x| order.isomorphic(c, f.apply(x)))
                })
                .collect()
        })
        .collect();
    let qn = d.quantale();
    let mut h = Vec::with_capacity(y.len());
    fn go<Q: DiagonalImplication>(
        qn: &Q,
        y: &QCategory<Q::Elem>,
        z: &QCategory<Q::Elem>,
        candidates: &[Vec<usize>],
        h: &mut Vec<usize>,
    ) -> bool {
        let k = h.len();
        if k == y.len() {
            return true;
        }
        for &c in &candidates[k] {
            h.push(c);
            let ok = (0..=k).all(|b| qn.leq(y.get(k, b), z.get(c, h[b])) && qn.leq(y.get(b, k), z.get(h[b], c)));
            if ok && go(qn, y, z, candidates, h) {
                return true;
            }
            h.pop();
        }
        false
    }
    go(qn, y, z, &candidates, &mut h).then_some(h)
}

/// For `Y = X ∪ {y₀}` with `X` a full subcategory, finds `h: Y → X` fixing
/// `X` pointwise. Objects of `X` are matched by name.
pub fn find_one_point_retraction<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
    y: &QCategory<Q::Elem>,
) -> Result<Option<Vec<usize>>> {
    require_symmetric(d, x)?;
    require_symmetric(d, y)?;
    if y.len() != x.len() + 1 {
        return Err(Error::Precondition("Y must have exactly one more object than X".into()));
    }
    let embed: Vec<usize> = (0..x.len())
        .map(|a| {
            y.set()
                .index_of(x.name(a))
                .ok_or_else(|| Error::Precondition(format!("{} is missing from Y", x.name(a))))
        })
        .collect::<Result<_>>()?;
    if !is_fully_faithful(d, &QFunctor::new(x, y, &embed)) || (0..x.len()).any(|a| x.ty(a) != y.ty(embed[a])) {
        return Err(Error::Precondition("X is not a full subcategory of Y".into()));
    }
    let y0 = (0..y.len()).find(|b| !embed.contains(b)).expect("one extra object");
    let qn = d.quantale();
    let z0 = (0..x.len()).find(|&c| {
        x.ty(c) == y.ty(y0) && (0..x.len()).all(|a| qn.leq(y.get(embed[a], y0), x.get(a, c)))
    });
    Ok(z0.map(|z0| {
        let mut h = vec![0; y.len()];
        for (a, &b) in embed.iter().enumerate() {
            h[b] = a;
        }
        h[y0] = z0;
        h
    }))
}

/// `X ∪ {μ}` for a column `μ ∈ L X`, with `hom(x, μ) = (μ ∘ α)(x)`.
///
/// When `μ` has no object above it, `X` is not a retract of the result.
pub fn extension_from_witness<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
    name: &str,
) -> Result<QCategory<Q::Elem>> {
    require_symmetric(d, x)?;
    if !super::in_lx(d, x, mu) {
        return Err(Error::Precondition("column is not in L X".into()));
    }
    let qn = d.quantale();
    let n = x.len();
    let closed: Vec<Q::Elem> = (0..n)
        .map(|a| {
            let terms: Vec<Q::Elem> = (0..n).map(|b| d.compose(x.ty(b), x.get(a, b), &mu.values[b])).collect();
            qn.join_all(&terms)
        })
        .collect();
    let set = std::sync::Arc::new(x.set().with_point(name, mu.ty.clone()));
    let hom = QRelation::from_fn(set.clone(), set, |a, b| match (a == n, b == n) {
        (false, false) => x.get(a, b).clone(),
        (true, true) => mu.ty.clone(),
        (false, true) => closed[a].clone(),
        (true, false) => qn.involve(&closed[b]),
    });
    let c = QCategory::new(hom)?;
    if !validate_category(d, &c).is_valid() {
        return Err(Error::Invariant("extension by a column of L X is not a category".into()));
    }
    Ok(c)
}
