use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Presheaf, QCategory};
use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::qrel::{QRelation, TypedSetFile};
use crate::quantale::Quantale;

/// `{"set": TypedSet, "hom": [[value]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub set: TypedSetFile,
    pub hom: Vec<Vec<String>>,
}

/// `{"map": {name: name}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorFile {
    pub map: BTreeMap<String, String>,
}

/// `{"type": value, "values": {name: value}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresheafFile {
    #[serde(rename = "type")]
    pub ty: String,
    pub values: BTreeMap<String, String>,
}

impl CategoryFile {
    /// Parses and validates the category.
    pub fn load<Q: DiagonalImplication>(&self, d: &DiagonalQuantaloid<Q>) -> Result<QCategory<Q::Elem>> {
        let set = self.set.load(d)?;
        let rows = self
            .hom
            .iter()
            .map(|r| r.iter().map(|v| d.quantale().parse(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        QCategory::from_rows(d, set, rows)
    }

    pub fn store<Q: Quantale>(q: &Q, c: &QCategory<Q::Elem>) -> Self {
        CategoryFile {
            set: TypedSetFile::store(q, c.set()),
            hom: c
                .hom()
                .rows()
                .iter()
                .map(|r| r.iter().map(|v| q.label(v)).collect())
                .collect(),
        }
    }
}

impl FunctorFile {
    /// Resolves names to a codomain index per domain object.
    pub fn load<E: Clone + Eq>(&self, domain: &QCategory<E>, codomain: &QCategory<E>) -> Result<Vec<usize>> {
        if let Some(k) = self.map.keys().find(|k| domain.set().index_of(k).is_none()) {
            return Err(Error::Schema(format!("functor maps unknown object {k:?}")));
        }
        domain
            .set()
            .names()
            .iter()
            .map(|x| {
                let y = self
                    .map
                    .get(x)
                    .ok_or_else(|| Error::Schema(format!("functor leaves {x:?} unmapped")))?;
                codomain
                    .set()
                    .index_of(y)
                    .ok_or_else(|| Error::Schema(format!("unknown codomain object {y:?}")))
            })
            .collect()
    }

    pub fn store<E: Clone + Eq>(domain: &QCategory<E>, codomain: &QCategory<E>, map: &[usize]) -> Self {
        FunctorFile {
            map: map
                .iter()
                .enumerate()
                .map(|(x, &y)| (domain.name(x).to_string(), codomain.name(y).to_string()))
                .collect(),
        }
    }
}

impl PresheafFile {
    /// Parses a column over `c`, checking every value is a diagonal.
    pub fn load<Q: DiagonalImplication>(
        &self,
        d: &DiagonalQuantaloid<Q>,
        c: &QCategory<Q::Elem>,
    ) -> Result<Presheaf<Q::Elem>> {
        let q = d.quantale();
        let ty = q.parse(&self.ty)?;
        if let Some(k) = self.values.keys().find(|k| c.set().index_of(k).is_none()) {
            return Err(Error::Schema(format!("presheaf names unknown object {k:?}")));
        }
        let values = c
            .set()
            .names()
            .iter()
            .map(|x| {
                self.values
                    .get(x)
                    .ok_or_else(|| Error::Schema(format!("presheaf has no value at {x:?}")))
                    .and_then(|v| q.parse(v))
            })
            .collect::<Result<Vec<_>>>()?;
        let mu = Presheaf::new(ty, values);
        let target = Arc::new(crate::qrel::TypedSet::singleton("*", mu.ty.clone()));
        QRelation::new(d, c.set().clone(), target, mu.values.iter().map(|v| vec![v.clone()]).collect())?;
        Ok(mu)
    }

    pub fn store<Q: Quantale>(q: &Q, c: &QCategory<Q::Elem>, mu: &Presheaf<Q::Elem>) -> Self {
        PresheafFile {
            ty: q.label(&mu.ty),
            values: mu
                .values
                .iter()
                .enumerate()
                .map(|(x, v)| (c.name(x).to_string(), q.label(v)))
                .collect(),
        }
    }
}
