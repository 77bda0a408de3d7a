//! Bundled finite instances: the Boolean 2-chain, Łukasiewicz and
//! nilpotent-minimum n-chains, and the four-element diamond frame.

use super::finite::{FiniteQuantale, QuantaleTables};
use crate::error::{Error, Result};
use crate::extrat::ExtRat;

pub const BUILTIN_NAMES: [&str; 7] = [
    "boolean",
    "lukasiewicz3",
    "lukasiewicz5",
    "nilpotent-minimum3",
    "nilpotent-minimum5",
    "diamond",
    "boolean-frame",
];

/// Looks up a bundled instance by name; `lukasiewiczN` and
/// `nilpotent-minimumN` accept any `N ≥ 2`.
pub fn builtin(name: &str) -> Result<FiniteQuantale> {
    let parse_n = |s: &str| {
        s.parse::<usize>()
            .ok()
            .filter(|&n| n >= 2)
            .ok_or_else(|| Error::Schema(format!("bad chain length in {name:?}")))
    };
    match name {
        "boolean" | "boolean-frame" => Ok(boolean()),
        "diamond" => Ok(diamond()),
        _ => {
            if let Some(n) = name.strip_prefix("lukasiewicz") {
                Ok(lukasiewicz(parse_n(n)?))
            } else if let Some(n) = name.strip_prefix("nilpotent-minimum") {
                Ok(nilpotent_minimum(parse_n(n)?))
            } else {
                Err(Error::Schema(format!("unknown builtin quantale {name:?}")))
            }
        }
    }
}

/// Tables for a commutative chain `0 < 1/(n-1) < … < 1` with the identity
/// involution, given the tensor on numerators `0..n`.
fn chain(n: usize, tensor: impl Fn(usize, usize) -> usize) -> QuantaleTables {
    assert!(n >= 2, "a chain needs at least two elements");
    let k = (n - 1) as u64;
    QuantaleTables {
        elements: (0..n)
            .map(|i| ExtRat::ratio(i as u64, k).expect("k > 0").to_string())
            .collect(),
        leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
        tensor: (0..n).map(|a| (0..n).map(|b| tensor(a, b)).collect()).collect(),
        unit: n - 1,
        involution: (0..n).collect(),
    }
}

/// The two-element frame `{0, 1}` with `⊗ = ∧`.
pub fn boolean() -> FiniteQuantale {
    FiniteQuantale::new(chain(2, |a, b| a.min(b))).expect("boolean quantale is valid")
}

/// `{0, 1/(n-1), …, 1}` with `a ⊗ b = max(0, a + b − 1)`.
pub fn lukasiewicz(n: usize) -> FiniteQuantale {
    let top = n - 1;
    FiniteQuantale::new(chain(n, |a, b| (a + b).saturating_sub(top)))
        .expect("Łukasiewicz chain is valid")
}

/// `{0, 1/(n-1), …, 1}` with `a ⊗ b = min(a, b)` if `a + b > 1`, else `0`.
pub fn nilpotent_minimum(n: usize) -> FiniteQuantale {
    let top = n - 1;
    FiniteQuantale::new(chain(n, |a, b| if a + b > top { a.min(b) } else { 0 }))
        .expect("nilpotent minimum chain is valid")
}

/// The frame `{⊥, a, b, ⊤}` with `a ∧ b = ⊥`, tensor `∧`.
pub fn diamond() -> FiniteQuantale {
    // ⊥ = 0, a = 1, b = 2, ⊤ = 3
    let leq = |x: usize, y: usize| x == y || x == 0 || y == 3;
    let meet = |x: usize, y: usize| {
        if leq(x, y) {
            x
        } else if leq(y, x) {
            y
        } else {
            0
        }
    };
    FiniteQuantale::new(QuantaleTables {
        elements: ["bot", "a", "b", "top"].map(String::from).to_vec(),
        leq: (0..4).map(|x| (0..4).map(|y| leq(x, y)).collect()).collect(),
        tensor: (0..4).map(|x| (0..4).map(|y| meet(x, y)).collect()).collect(),
        unit: 3,
        involution: (0..4).collect(),
    })
    .expect("diamond frame is valid")
}
