//! Integral involutive quantales.
//!
//! Two realizations share the [`Quantale`] trait: the Lawvere quantale
//! `([0,∞], +, 0)` ordered by `≥` ([`Lawvere`]), and table-defined finite
//! quantales ([`FiniteQuantale`]) validated exhaustively at load. A dynamic
//! tagged-value layer ([`AnyQuantale`], [`QuantaleValue`]) sits on top for
//! file-driven use.
//!
//! All order words (`leq`, `join`, `bottom`, ...) refer to the quantale order.
//! For Lawvere that is the reverse of the numeric order.

mod builtin;
mod dynamic;
mod finite;
mod laws;
mod lawvere;

use std::fmt::Debug;
use std::hash::Hash;

pub use builtin::{boolean, builtin, diamond, lukasiewicz, nilpotent_minimum, BUILTIN_NAMES};
pub use dynamic::{AnyQuantale, QuantaleValue};
pub use finite::{FiniteQuantale, QuantaleFile, QuantaleTables};
pub use laws::{check_quantale_laws, LawOutcome, LawReport, LawStatus};
pub use lawvere::Lawvere;

/// Which implication: `Left` is `r / q` (right adjoint of `− ⊗ q`), `Right`
/// is `p \ r` (right adjoint of `p ⊗ −`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

pub trait Quantale: Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn tensor(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The unit, which is also the top element.
    fn unit(&self) -> Self::Elem;
    fn bottom(&self) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `r / q = ⋁{p : p ⊗ q ≤ r}`.
    fn left_residual(&self, r: &Self::Elem, q: &Self::Elem) -> Self::Elem;
    /// `p \ r = ⋁{q : p ⊗ q ≤ r}`.
    fn right_residual(&self, p: &Self::Elem, r: &Self::Elem) -> Self::Elem;
    fn involve(&self, a: &Self::Elem) -> Self::Elem;
    fn is_commutative(&self) -> bool;
    /// `(u / q) ⊗ q = u = q ⊗ (q \ u)` whenever `u ≤ q`.
    fn is_divisible(&self) -> bool;
    /// All elements in load order, when the carrier is finite.
    fn carrier(&self) -> Option<&[Self::Elem]>;
    /// Human-readable name of an element, used in witnesses and reports.
    fn label(&self, a: &Self::Elem) -> String;
    /// Inverse of [`Quantale::label`].
    fn parse(&self, text: &str) -> crate::Result<Self::Elem>;

    fn lt(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a != b && self.leq(a, b)
    }

    fn join_all<'a, I>(&self, values: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        values
            .into_iter()
            .fold(self.bottom(), |acc, v| self.join(&acc, v))
    }

    fn meet_all<'a, I>(&self, values: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        values.into_iter().fold(self.unit(), |acc, v| self.meet(&acc, v))
    }

    /// `residual(Left, r, q) = r / q` and `residual(Right, p, r) = p \ r`.
    fn residual(&self, side: Side, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match side {
            Side::Left => self.left_residual(x, y),
            Side::Right => self.right_residual(x, y),
        }
    }

    /// Elements fixed by the involution: the objects of the symmetric
    /// diagonal quantaloid.
    fn symmetric_elements(&self) -> Option<Vec<Self::Elem>> {
        self.carrier().map(|c| {
            c.iter()
                .filter(|q| self.involve(q) == **q)
                .cloned()
                .collect()
        })
    }
}
