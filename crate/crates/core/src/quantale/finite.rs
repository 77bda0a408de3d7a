use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::laws::{check_quantale_laws, LawStatus};
use super::Quantale;
use crate::error::{Error, Result};

/// On-disk form of a finite quantale; rows and columns follow `elements`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantaleFile {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub tensor: Vec<Vec<String>>,
    pub unit: String,
    pub involution: Vec<String>,
}

/// Index-resolved tables, checked for shape but not yet for any law.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantaleTables {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub tensor: Vec<Vec<usize>>,
    pub unit: usize,
    pub involution: Vec<usize>,
}

impl QuantaleTables {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn from_file(file: &QuantaleFile) -> Result<Self> {
        let n = file.elements.len();
        if n == 0 {
            return Err(Error::Schema("a quantale needs at least one element".into()));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in file.elements.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::Schema(format!("duplicate element name {name:?}")));
            }
        }
        let lookup = |name: &str, ctx: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Schema(format!("unknown element {name:?} in {ctx}")))
        };
        let square = |rows: usize, lens: Vec<usize>, what: &str| -> Result<()> {
            if rows != n || lens.iter().any(|&l| l != n) {
                return Err(Error::Schema(format!("{what} must be a {n}×{n} table")));
            }
            Ok(())
        };
        square(file.leq.len(), file.leq.iter().map(Vec::len).collect(), "leq")?;
        square(
            file.tensor.len(),
            file.tensor.iter().map(Vec::len).collect(),
            "tensor",
        )?;
        if file.involution.len() != n {
            return Err(Error::Schema(format!("involution must list {n} elements")));
        }
        let tensor = file
            .tensor
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, name)| lookup(name, &format!("tensor[{i}][{j}]")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let involution = file
            .involution
            .iter()
            .enumerate()
            .map(|(i, name)| lookup(name, &format!("involution[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuantaleTables {
            elements: file.elements.clone(),
            leq: file.leq.clone(),
            tensor,
            unit: lookup(&file.unit, "unit")?,
            involution,
        })
    }

    pub fn to_file(&self) -> QuantaleFile {
        let name = |i: usize| self.elements[i].clone();
        QuantaleFile {
            elements: self.elements.clone(),
            leq: self.leq.clone(),
            tensor: self
                .tensor
                .iter()
                .map(|row| row.iter().map(|&v| name(v)).collect())
                .collect(),
            unit: name(self.unit),
            involution: self.involution.iter().map(|&v| name(v)).collect(),
        }
    }

    /// Least upper bound read off the order table, if it exists.
    pub(crate) fn order_join(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.len();
        let upper: Vec<usize> = (0..n).filter(|&c| self.leq[a][c] && self.leq[b][c]).collect();
        upper
            .iter()
            .copied()
            .find(|&c| upper.iter().all(|&d| self.leq[c][d]))
    }

    pub(crate) fn order_meet(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.len();
        let lower: Vec<usize> = (0..n).filter(|&c| self.leq[c][a] && self.leq[c][b]).collect();
        lower
            .iter()
            .copied()
            .find(|&c| lower.iter().all(|&d| self.leq[d][c]))
    }

    pub(crate) fn order_bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&c| (0..self.len()).all(|d| self.leq[c][d]))
    }
}

#[derive(Debug)]
struct Inner {
    tables: QuantaleTables,
    carrier: Vec<usize>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    left_residual: Vec<Vec<usize>>,
    right_residual: Vec<Vec<usize>>,
    bottom: usize,
    commutative: bool,
    divisible: bool,
    fingerprint: u64,
}

/// A validated finite integral involutive quantale. Elements are indices in
/// load order. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct FiniteQuantale {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteQuantale {
    fn eq(&self, other: &Self) -> bool {
        self.inner.tables == other.inner.tables
    }
}

impl Eq for FiniteQuantale {}

impl FiniteQuantale {
    /// Validates every law exhaustively and precomputes joins, meets and
    /// residuals.
    pub fn new(tables: QuantaleTables) -> Result<Self> {
        let report = check_quantale_laws(&tables);
        if let Some(bad) = report.laws.iter().find(|l| l.status != LawStatus::Pass) {
            return Err(Error::Precondition(format!(
                "quantale law {:?} fails (witness {:?})",
                bad.law, bad.witness
            )));
        }
        let n = tables.len();
        let full = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
        };
        let join = full(&|a, b| tables.order_join(a, b).expect("validated lattice"));
        let meet = full(&|a, b| tables.order_meet(a, b).expect("validated lattice"));
        let bottom = tables.order_bottom().expect("validated lattice");
        let sup = |xs: &mut dyn Iterator<Item = usize>| xs.fold(bottom, |acc, x| join[acc][x]);
        // r / q and p \ r by exhaustive joins
        let left_residual = full(&|r, q| {
            sup(&mut (0..n).filter(|&p| tables.leq[tables.tensor[p][q]][r]))
        });
        let right_residual = full(&|p, r| {
            sup(&mut (0..n).filter(|&q| tables.leq[tables.tensor[p][q]][r]))
        });
        let commutative = (0..n).all(|a| (0..n).all(|b| tables.tensor[a][b] == tables.tensor[b][a]));
        let divisible = (0..n).all(|q| {
            (0..n).filter(|&u| tables.leq[u][q]).all(|u| {
                tables.tensor[left_residual[u][q]][q] == u
                    && tables.tensor[q][right_residual[q][u]] == u
            })
        });
        let mut hasher = DefaultHasher::new();
        tables.hash(&mut hasher);
        let fingerprint = hasher.finish();
        Ok(FiniteQuantale {
            inner: Arc::new(Inner {
                carrier: (0..n).collect(),
                tables,
                join,
                meet,
                left_residual,
                right_residual,
                bottom,
                commutative,
                divisible,
                fingerprint,
            }),
        })
    }

    pub fn from_file(file: &QuantaleFile) -> Result<Self> {
        Self::new(QuantaleTables::from_file(file)?)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let file: QuantaleFile = serde_json::from_str(json)?;
        Self::from_file(&file)
    }

    pub fn tables(&self) -> &QuantaleTables {
        &self.inner.tables
    }

    pub fn len(&self) -> usize {
        self.inner.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, a: usize) -> &str {
        &self.inner.tables.elements[a]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.inner.tables.elements.iter().position(|e| e == name)
    }

    /// Stable identity of the tables, used to tag dynamic values.
    pub fn fingerprint(&self) -> u64 {
        self.inner.fingerprint
    }
}

impl Quantale for FiniteQuantale {
    type Elem = usize;

    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.inner.tables.leq[*a][*b]
    }

    fn tensor(&self, a: &usize, b: &usize) -> usize {
        self.inner.tables.tensor[*a][*b]
    }

    fn unit(&self) -> usize {
        self.inner.tables.unit
    }

    fn bottom(&self) -> usize {
        self.inner.bottom
    }

    fn join(&self, a: &usize, b: &usize) -> usize {
        self.inner.join[*a][*b]
    }

    fn meet(&self, a: &usize, b: &usize) -> usize {
        self.inner.meet[*a][*b]
    }

    fn left_residual(&self, r: &usize, q: &usize) -> usize {
        self.inner.left_residual[*r][*q]
    }

    fn right_residual(&self, p: &usize, r: &usize) -> usize {
        self.inner.right_residual[*p][*r]
    }

    fn involve(&self, a: &usize) -> usize {
        self.inner.tables.involution[*a]
    }

    fn is_commutative(&self) -> bool {
        self.inner.commutative
    }

    fn is_divisible(&self) -> bool {
        self.inner.divisible
    }

    fn carrier(&self) -> Option<&[usize]> {
        Some(&self.inner.carrier)
    }

    fn label(&self, a: &usize) -> String {
        self.name(*a).to_string()
    }

    fn parse(&self, text: &str) -> Result<usize> {
        self.element(text)
            .ok_or_else(|| Error::Schema(format!("unknown element {text:?}")))
    }
}
