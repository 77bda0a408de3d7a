//! Tight spans, hypercompleteness, injectivity and density over finite
//! quantales.
//!
//! For a symmetric category `(X, α)`:
//!
//! ```text
//! L X = { μ ∈ PX | μ° ∘ μ ≤ α }
//! T X = { μ ∈ PX | μ° = α ↙ μ }
//! ```
//!
//! `T X` is the injective hull of `X` in the category of symmetric
//! Q-categories. Everything here is exhaustive and therefore restricted to
//! finite quantales and desk-scale categories.

mod dense;
mod inject;
mod report;
mod verify;

use serde::{Deserialize, Serialize};

use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::qcat::{is_symmetric, presheaf_category, presheaves_enumerate, px_hom, Presheaf, QCategory};

pub use dense::{
    dense_columns_tight, check_retraction_functor, essential_bruteforce, is_codense,
    is_dense, is_essential_bruteforce, tx_transport, Essential, TransportReport, DEFAULT_NODE_BUDGET,
};
pub use inject::{extend_along, extension_from_witness, find_one_point_retraction};
pub use report::Report;
pub use verify::{run_suite, Suite, SuiteOutcome, MAX_BOUND};

/// How the witness object of a hypercompleteness test is typed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Typing {
    /// `|z|` must equal the type of the column.
    #[default]
    Strict,
    /// Any `z`, comparing entries elementwise in `Q`.
    Lax,
}

fn require_symmetric<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, x: &QCategory<Q::Elem>) -> Result<()> {
    if is_symmetric(d, x) {
        Ok(())
    } else {
        Err(Error::Precondition("category is not symmetric".into()))
    }
}

/// `μ(x) ∘ μ(x')° ≤ α(x, x')`, the entry of `μ° ∘ μ` at `(x, x')`.
fn lx_pair<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
    a: usize,
    b: usize,
) -> bool {
    let qn = d.quantale();
    let c = d.compose(&mu.ty, &mu.values[a], &qn.involve(&mu.values[b]));
    qn.leq(&c, x.get(a, b))
}

/// `μ° ∘ μ ≤ α`.
pub fn in_lx<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, x: &QCategory<Q::Elem>, mu: &Presheaf<Q::Elem>) -> bool {
    (0..x.len()).all(|a| (0..x.len()).all(|b| lx_pair(d, x, mu, a, b)))
}

/// `(α ↙ μ)(z) = ⋀_x α(x, z) ↙ μ(x)`, a diagonal `ty(μ) → |z|`.
fn hom_from<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
    z: usize,
) -> Q::Elem {
    let terms: Vec<Q::Elem> = (0..x.len())
        .map(|a| d.left_implication(x.ty(a), &mu.ty, x.ty(z), x.get(a, z), &mu.values[a]))
        .collect();
    d.hom_meet(&mu.ty, x.ty(z), &terms)
}

/// `μ° = α ↙ μ`. Accepts raw columns: a solution is automatically a presheaf.
pub fn in_tx<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>, x: &QCategory<Q::Elem>, mu: &Presheaf<Q::Elem>) -> bool {
    let qn = d.quantale();
    mu.values.len() == x.len() && (0..x.len()).all(|z| qn.involve(&mu.values[z]) == hom_from(d, x, mu, z))
}

/// Extends `μ ∈ L X` to a member of `T X` above it.
///
/// Repeatedly picks the first `z` with `μ°(z) < (α ↙ μ)(z)` and replaces `μ`
/// by `μ ∨ ((μ° ↘ α(z, −)) ∘ α(−, z))`.
pub fn tighten<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
) -> Result<Presheaf<Q::Elem>> {
    require_symmetric(d, x)?;
    if mu.values.len() != x.len() || !in_lx(d, x, mu) {
        return Err(Error::Precondition("column is not in L X".into()));
    }
    let qn = d.quantale();
    let n = x.len();
    let mut cur = mu.clone();
    loop {
        let Some(z) = (0..n).find(|&z| qn.involve(&cur.values[z]) != hom_from(d, x, &cur, z)) else {
            return Ok(cur);
        };
        // s = μ° ↘ α(z, −) : |z| → ty
        let terms: Vec<Q::Elem> = (0..n)
            .map(|a| d.right_implication(x.ty(z), &cur.ty, x.ty(a), &qn.involve(&cur.values[a]), x.get(z, a)))
            .collect();
        let s = d.hom_meet(x.ty(z), &cur.ty, &terms);
        let next: Vec<Q::Elem> = (0..n)
            .map(|a| qn.join(&cur.values[a], &d.compose(x.ty(z), x.get(a, z), &s)))
            .collect();
        if next == cur.values {
            return Err(Error::Invariant(format!(
                "augmentation at {} did not increase the column",
                x.name(z)
            )));
        }
        cur = Presheaf::new(cur.ty.clone(), next);
        if !in_lx(d, x, &cur) {
            return Err(Error::Invariant("augmentation left L X".into()));
        }
    }
}

/// The members of `L X`, in presheaf enumeration order.
pub fn enumerate_lx<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
) -> Result<Vec<Presheaf<Q::Elem>>> {
    Ok(presheaves_enumerate(d, x)?
        .into_iter()
        .filter(|m| in_lx(d, x, m))
        .collect())
}

/// `T X` as a list and as a category with hom `μ' ↙ μ`.
pub struct TightSpan<E> {
    pub members: Vec<Presheaf<E>>,
    pub category: QCategory<E>,
}

impl<E: Clone + Eq> TightSpan<E> {
    pub fn index_of(&self, mu: &Presheaf<E>) -> Option<usize> {
        self.members.iter().position(|m| m == mu)
    }
}

pub fn enumerate_tx<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
) -> Result<TightSpan<Q::Elem>> {
    require_symmetric(d, x)?;
    let members: Vec<_> = presheaves_enumerate(d, x)?
        .into_iter()
        .filter(|m| in_tx(d, x, m))
        .collect();
    let category = presheaf_category(d, x, &members);
    if !is_symmetric(d, &category) {
        return Err(Error::Invariant("T X is not symmetric".into()));
    }
    Ok(TightSpan { members, category })
}

/// The image of `X` in `T X` under Yoneda.
pub fn yoneda_map<E: Clone + Eq>(x: &QCategory<E>, tx: &TightSpan<E>) -> Result<Vec<usize>> {
    (0..x.len())
        .map(|a| {
            tx.index_of(&crate::qcat::yoneda(x, a))
                .ok_or_else(|| Error::Invariant(format!("y({}) is not tight", x.name(a))))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypercompleteness<E> {
    pub hypercomplete: bool,
    /// A column in `L X` with no object above it.
    pub witness: Option<Presheaf<E>>,
    pub columns_checked: usize,
}

/// Searches every raw column `μ` of every symmetric type with `μ° ∘ μ ≤ α`
/// for an object `z` with `μ ≤ α(−, z)`.
pub fn is_hypercomplete<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
    typing: Typing,
) -> Result<Hypercompleteness<Q::Elem>> {
    require_symmetric(d, x)?;
    let types = d
        .symmetric_objects()
        .ok_or_else(|| Error::Unsupported("hypercompleteness over an infinite quantale".into()))?;
    let mut search = ColumnSearch {
        d,
        x,
        typing,
        checked: 0,
        witness: None,
    };
    for q in types {
        let homs = (0..x.len())
            .map(|a| d.hom(x.ty(a), &q))
            .collect::<Result<Vec<_>>>()?;
        let mut mu = Presheaf::new(q, Vec::with_capacity(x.len()));
        if !search.run(&homs, &mut mu) {
            break;
        }
    }
    Ok(Hypercompleteness {
        hypercomplete: search.witness.is_none(),
        witness: search.witness,
        columns_checked: search.checked,
    })
}

struct ColumnSearch<'a, Q: DiagonalImplication> {
    d: &'a DiagonalQuantaloid<Q>,
    x: &'a QCategory<Q::Elem>,
    typing: Typing,
    checked: usize,
    witness: Option<Presheaf<Q::Elem>>,
}

impl<Q: DiagonalImplication> ColumnSearch<'_, Q> {
    /// Returns false once a witness is found.
    fn run(&mut self, homs: &[Vec<Q::Elem>], mu: &mut Presheaf<Q::Elem>) -> bool {
        let k = mu.values.len();
        if k == self.x.len() {
            self.checked += 1;
            if !has_upper_bound(self.d, self.x, mu, self.typing) {
                self.witness = Some(mu.clone());
                return false;
            }
            return true;
        }
        for v in &homs[k] {
            mu.values.push(v.clone());
            let ok = (0..=k).all(|b| lx_pair(self.d, self.x, mu, k, b) && lx_pair(self.d, self.x, mu, b, k));
            if ok && !self.run(homs, mu) {
                return false;
            }
            mu.values.pop();
        }
        true
    }
}

fn has_upper_bound<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
    typing: Typing,
) -> bool {
    let qn = d.quantale();
    (0..x.len()).any(|z| {
        (typing == Typing::Lax || *x.ty(z) == mu.ty) && (0..x.len()).all(|a| qn.leq(&mu.values[a], x.get(a, z)))
    })
}

/// A tight `λ` and a distinct `μ ∈ L X` below it.
pub type PresheafPair<E> = (Presheaf<E>, Presheaf<E>);

/// For all `λ ∈ T X` and `μ ∈ L X` of the same type, `λ ≤ μ` forces `μ = λ`.
/// Returns the first offending pair.
pub fn check_maximality<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
) -> Result<Option<PresheafPair<Q::Elem>>> {
    let lx = enumerate_lx(d, x)?;
    let qn = d.quantale();
    for lam in lx.iter().filter(|m| in_tx(d, x, m)) {
        for mu in &lx {
            let above = mu.ty == lam.ty && lam.values.iter().zip(&mu.values).all(|(a, b)| qn.leq(a, b));
            if above && mu != lam {
                return Ok(Some((lam.clone(), mu.clone())));
            }
        }
    }
    Ok(None)
}

/// `hom(μ, μ')` in the symmetrization `(L X)_s`.
pub(crate) fn lx_sym_hom<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    x: &QCategory<Q::Elem>,
    mu: &Presheaf<Q::Elem>,
    mu2: &Presheaf<Q::Elem>,
) -> Q::Elem {
    let there = px_hom(d, x, mu, mu2);
    let back = d.quantale().involve(&px_hom(d, x, mu2, mu));
    d.hom_meet(&mu.ty, &mu2.ty, [&there, &back])
}

#[cfg(test)]
mod tests;
