use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ParMetSpace, RadiusFunction};
use crate::error::{Error, Result};
use crate::extrat::ExtRat;

/// `{"points": [...], "alpha": [["p/q" | "inf"]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub points: Vec<String>,
    pub alpha: Vec<Vec<ExtRat>>,
}

impl SpaceFile {
    pub fn load(&self) -> Result<ParMetSpace> {
        ParMetSpace::new(self.points.clone(), self.alpha.clone())
    }

    pub fn store(m: &ParMetSpace) -> Self {
        SpaceFile {
            points: m.points.clone(),
            alpha: m.alpha.clone(),
        }
    }
}

/// `{"r": "p/q", "values": {name: "p/q"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RadiusFile {
    pub r: ExtRat,
    pub values: BTreeMap<String, ExtRat>,
}

impl RadiusFile {
    /// Values in the point order of `m`; every point must appear exactly once.
    pub fn load(&self, m: &ParMetSpace) -> Result<RadiusFunction> {
        if let Some(extra) = self.values.keys().find(|k| m.index_of(k).is_none()) {
            return Err(Error::Schema(format!("unknown point {extra:?}")));
        }
        let values = m
            .points
            .iter()
            .map(|p| {
                self.values
                    .get(p)
                    .cloned()
                    .ok_or_else(|| Error::Schema(format!("missing value for {p:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(RadiusFunction::new(self.r.clone(), values))
    }

    pub fn store(m: &ParMetSpace, mu: &RadiusFunction) -> Self {
        RadiusFile {
            r: mu.r.clone(),
            values: m.points.iter().cloned().zip(mu.values.iter().cloned()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEntry {
    pub point: String,
    pub radius: ExtRat,
}

/// `{"r": "p/q", "family": [{"point": name, "radius": "p/q"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperfamilyFile {
    pub r: ExtRat,
    pub family: Vec<FamilyEntry>,
}

impl HyperfamilyFile {
    pub fn load(&self, m: &ParMetSpace) -> Result<(ExtRat, Vec<(usize, ExtRat)>)> {
        let family = self
            .family
            .iter()
            .map(|e| {
                m.index_of(&e.point)
                    .map(|i| (i, e.radius.clone()))
                    .ok_or_else(|| Error::Schema(format!("unknown point {:?}", e.point)))
            })
            .collect::<Result<_>>()?;
        Ok((self.r.clone(), family))
    }
}
