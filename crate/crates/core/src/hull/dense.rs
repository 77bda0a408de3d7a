use super::{enumerate_lx, enumerate_tx, in_tx, lx_sym_hom, require_symmetric, tighten};
use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::qcat::{cograph, graph, is_fully_faithful, px_hom, Presheaf, QCategory, QFunctor};
use crate::qrel::{rel_residual, QRelation};
use crate::quantale::Side;

/// Node budget of [`is_essential_bruteforce`] unless overridden.
pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

/// `β = f_♮ ↙ f_♮`.
pub fn is_dense<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, f: &QFunctor<'_, Q::Elem>) -> bool {
    let g = graph(f);
    rel_residual(d, Side::Left, &g, &g).expect("common source") == *f.codomain.hom()
}

/// `β = f^♮ ↘ f^♮`.
pub fn is_codense<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, f: &QFunctor<'_, Q::Elem>) -> bool {
    let c = cograph(f);
    rel_residual(d, Side::Right, &c, &c).expect("common target") == *f.codomain.hom()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Essential<E> {
    pub essential: bool,
    /// A strictly larger symmetric hom on the codomain's objects that keeps
    /// `f` fully faithful; the identity into it is not fully faithful.
    pub witness: Option<QCategory<E>>,
    pub nodes: u64,
}

/// Decides whether a fully faithful `f: X → Y` between symmetric categories
/// is essential, within [`DEFAULT_NODE_BUDGET`].
pub fn is_essential_bruteforce<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    f: &QFunctor<'_, Q::Elem>,
) -> Result<Essential<Q::Elem>> {
    essential_bruteforce(d, f, DEFAULT_NODE_BUDGET)
}

/// Any `g: Y → Z` factors through the category `(Y, γ(g−, g−))`, and `g` is
/// fully faithful exactly when that hom equals `β`. So `f` is essential iff
/// the only symmetric hom `β' ≥ β` on the objects of `Y` with
/// `β'(fx, fx') = α(x, x')` is `β` itself. The search walks the free
/// entries of `β'` and refuses once `budget` nodes are spent.
pub fn essential_bruteforce<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    f: &QFunctor<'_, Q::Elem>,
    budget: u64,
) -> Result<Essential<Q::Elem>> {
    let y = f.codomain;
    require_symmetric(d, f.domain)?;
    require_symmetric(d, y)?;
    if !is_fully_faithful(d, f) {
        return Err(Error::Precondition("f is not fully faithful".into()));
    }
    let n = y.len();
    let image: Vec<bool> = (0..n).map(|b| f.map.contains(&b)).collect();
    // free pairs, those touching the image first
    let mut free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(image[i] && image[j]))
        .collect();
    free.sort_by_key(|&(i, j)| !(image[i] || image[j]));
    let slot = |i: usize, j: usize| free.iter().position(|&p| p == (i.min(j), i.max(j)));
    // for each free pair, the third vertices whose triangle completes there
    let completes: Vec<Vec<usize>> = free
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| {
            (0..n)
                .filter(|&c| c != i && c != j)
                .filter(|&c| [slot(i, c), slot(j, c)].iter().all(|s| s.is_none_or(|s| s < k)))
                .collect()
        })
        .collect();
    let qn = d.quantale();
    let candidates: Vec<Vec<Q::Elem>> = free
        .iter()
        .map(|&(i, j)| {
            Ok(d.hom(y.ty(i), y.ty(j))?
                .into_iter()
                .filter(|v| qn.leq(y.get(i, j), v))
                .collect())
        })
        .collect::<Result<_>>()?;

    let mut search = Search {
        d,
        y,
        free: &free,
        completes: &completes,
        candidates: &candidates,
        hom: y.hom().rows(),
        nodes: 0,
        budget,
        found: None,
    };
    search.go(0)?;
    let witness = search.found.map(|rows| {
        let set = y.set().clone();
        QCategory::new(QRelation::from_fn(set.clone(), set, |a, b| rows[a][b].clone())).expect("square")
    });
    Ok(Essential {
        essential: witness.is_none(),
        witness,
        nodes: search.nodes,
    })
}

struct Search<'a, Q: DiagonalImplication> {
    d: &'a DiagonalQuantaloid<Q>,
    y: &'a QCategory<Q::Elem>,
    free: &'a [(usize, usize)],
    completes: &'a [Vec<usize>],
    candidates: &'a [Vec<Q::Elem>],
    hom: Vec<Vec<Q::Elem>>,
    nodes: u64,
    budget: u64,
    found: Option<Vec<Vec<Q::Elem>>>,
}

impl<Q: DiagonalImplication> Search<'_, Q> {
    fn triangle_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let qn = self.d.quantale();
        let h = &self.hom;
        let ty = |v: usize| self.y.ty(v);
        let t = |x: usize, m: usize, z: usize| qn.leq(&self.d.compose(ty(m), &h[x][m], &h[m][z]), &h[x][z]);
        t(a, b, c) && t(a, c, b) && t(b, a, c) && t(b, c, a) && t(c, a, b) && t(c, b, a)
    }

    /// Returns `Ok(true)` once a hom different from `β` is found.
    fn go(&mut self, k: usize) -> Result<bool> {
        if k == self.free.len() {
            let differs = (0..self.y.len()).any(|a| self.hom[a] != self.y.hom().row(a));
            if differs {
                self.found = Some(self.hom.clone());
            }
            return Ok(differs);
        }
        let (i, j) = self.free[k];
        for v in &self.candidates[k] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BoundExceeded(format!(
                    "essentiality search over {} objects exceeded {} nodes",
                    self.y.len(),
                    self.budget
                )));
            }
            self.hom[i][j] = v.clone();
            self.hom[j][i] = self.d.quantale().involve(v);
            if self.completes[k].iter().all(|&c| self.triangle_ok(i, j, c)) && self.go(k + 1)? {
                return Ok(true);
            }
        }
        self.hom[i][j] = self.y.get(i, j).clone();
        self.hom[j][i] = self.y.get(j, i).clone();
        Ok(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportReport<E> {
    /// `λ ∘ f_♮` for each `λ ∈ T Y`, in enumeration order of `T Y`.
    pub images: Vec<Presheaf<E>>,
    pub lands_in_tx: bool,
    pub bijective: bool,
    pub isometric: bool,
}

impl<E> TransportReport<E> {
    pub fn is_isomorphism(&self) -> bool {
        self.lands_in_tx && self.bijective && self.isometric
    }
}

/// `λ ↦ λ ∘ f_♮ : T Y → T X` for fully faithful `f: X → Y`.
pub fn tx_transport<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    f: &QFunctor<'_, Q::Elem>,
) -> Result<TransportReport<Q::Elem>> {
    if !is_fully_faithful(d, f) {
        return Err(Error::Precondition("f is not fully faithful".into()));
    }
    let (x, y) = (f.domain, f.codomain);
    let tx = enumerate_tx(d, x)?;
    let ty = enumerate_tx(d, y)?;
    let qn = d.quantale();
    let images: Vec<Presheaf<Q::Elem>> = ty
        .members
        .iter()
        .map(|lam| {
            let values = (0..x.len())
                .map(|a| {
                    let terms: Vec<Q::Elem> = (0..y.len())
                        .map(|b| d.compose(y.ty(b), y.get(f.apply(a), b), &lam.values[b]))
                        .collect();
                    qn.join_all(&terms)
                })
                .collect();
            Presheaf::new(lam.ty.clone(), values)
        })
        .collect();
    let lands_in_tx = images.iter().all(|m| in_tx(d, x, m));
    let mut sorted: Vec<usize> = images.iter().filter_map(|m| tx.index_of(m)).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let bijective = lands_in_tx && sorted.len() == images.len() && images.len() == tx.members.len();
    let isometric = (0..images.len()).all(|i| {
        (0..images.len()).all(|j| px_hom(d, x, &images[i], &images[j]) == *ty.category.get(i, j))
    });
    Ok(TransportReport {
        images,
        lands_in_tx,
        bijective,
        isometric,
    })
}

/// For dense fully faithful `f`, every column `f_♮(−, y)` lies in `T X`.
/// Returns the first `y` whose column is not tight.
pub fn dense_columns_tight<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    f: &QFunctor<'_, Q::Elem>,
) -> Option<usize> {
    let g = graph(f);
    (0..f.codomain.len()).find(|&b| !in_tx(d, f.domain, &Presheaf::new(f.codomain.ty(b).clone(), g.column(b))))
}

/// Checks that `tighten` is a Q-functor `(L X)_s → T X` that fixes `T X`
/// and dominates its input. Returns a description of the first failure.
pub fn check_retraction_functor<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
) -> Result<Option<String>> {
    let lx = enumerate_lx(d, x)?;
    let qn = d.quantale();
    let mut tight = Vec::with_capacity(lx.len());
    for mu in &lx {
        let t = tighten(d, x, mu)?;
        if in_tx(d, x, mu) && t != *mu {
            return Ok(Some(format!("tighten moved a tight column {}", mu.label(qn))));
        }
        if !mu.values.iter().zip(&t.values).all(|(a, b)| qn.leq(a, b)) {
            return Ok(Some(format!("tighten({}) does not dominate its input", mu.label(qn))));
        }
        tight.push(t);
    }
    for i in 0..lx.len() {
        for j in 0..lx.len() {
            let src = lx_sym_hom(d, x, &lx[i], &lx[j]);
            let dst = px_hom(d, x, &tight[i], &tight[j]);
            if !qn.leq(&src, &dst) {
                return Ok(Some(format!(
                    "not a functor at ({}, {})",
                    lx[i].label(qn),
                    lx[j].label(qn)
                )));
            }
        }
    }
    Ok(None)
}
