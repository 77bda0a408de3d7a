use std::fmt;

use super::{FiniteQuantale, Lawvere, Quantale, Side};
use crate::error::{Error, Result};
use crate::extrat::ExtRat;

/// A quantale chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyQuantale {
    Lawvere,
    Finite(FiniteQuantale),
}

/// A value tagged with the instance it belongs to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum QuantaleValue {
    Lawvere(ExtRat),
    Finite { instance: u64, index: usize },
}

impl fmt::Debug for QuantaleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuantaleValue::Lawvere(r) => write!(f, "Lawvere({r})"),
            QuantaleValue::Finite { instance, index } => write!(f, "Finite({instance:x}#{index})"),
        }
    }
}

impl AnyQuantale {
    /// Parses a value: rationals for Lawvere, element names otherwise.
    pub fn value(&self, text: &str) -> Result<QuantaleValue> {
        match self {
            AnyQuantale::Lawvere => Ok(QuantaleValue::Lawvere(text.parse()?)),
            AnyQuantale::Finite(q) => q
                .element(text)
                .map(|index| QuantaleValue::Finite {
                    instance: q.fingerprint(),
                    index,
                })
                .ok_or_else(|| Error::Schema(format!("unknown element {text:?}"))),
        }
    }

    pub fn label(&self, v: &QuantaleValue) -> Result<String> {
        match self {
            AnyQuantale::Lawvere => Ok(self.lawvere(v)?.to_string()),
            AnyQuantale::Finite(q) => Ok(q.label(&self.finite(v)?)),
        }
    }

    fn lawvere<'a>(&self, v: &'a QuantaleValue) -> Result<&'a ExtRat> {
        match v {
            QuantaleValue::Lawvere(r) => Ok(r),
            _ => Err(Error::InstanceMismatch),
        }
    }

    fn finite(&self, v: &QuantaleValue) -> Result<usize> {
        match (self, v) {
            (AnyQuantale::Finite(q), QuantaleValue::Finite { instance, index })
                if *instance == q.fingerprint() && *index < q.len() =>
            {
                Ok(*index)
            }
            _ => Err(Error::InstanceMismatch),
        }
    }

    fn wrap(&self, index: usize) -> QuantaleValue {
        match self {
            AnyQuantale::Finite(q) => QuantaleValue::Finite {
                instance: q.fingerprint(),
                index,
            },
            AnyQuantale::Lawvere => unreachable!("finite index on Lawvere"),
        }
    }

    pub fn leq(&self, a: &QuantaleValue, b: &QuantaleValue) -> Result<bool> {
        match self {
            AnyQuantale::Lawvere => Ok(Lawvere.leq(self.lawvere(a)?, self.lawvere(b)?)),
            AnyQuantale::Finite(q) => Ok(q.leq(&self.finite(a)?, &self.finite(b)?)),
        }
    }

    pub fn tensor(&self, a: &QuantaleValue, b: &QuantaleValue) -> Result<QuantaleValue> {
        match self {
            AnyQuantale::Lawvere => Ok(QuantaleValue::Lawvere(
                Lawvere.tensor(self.lawvere(a)?, self.lawvere(b)?),
            )),
            AnyQuantale::Finite(q) => Ok(self.wrap(q.tensor(&self.finite(a)?, &self.finite(b)?))),
        }
    }

    pub fn join(&self, values: &[QuantaleValue]) -> Result<QuantaleValue> {
        match self {
            AnyQuantale::Lawvere => {
                let xs = values.iter().map(|v| self.lawvere(v)).collect::<Result<Vec<_>>>()?;
                Ok(QuantaleValue::Lawvere(Lawvere.join_all(xs)))
            }
            AnyQuantale::Finite(q) => {
                let xs = values.iter().map(|v| self.finite(v)).collect::<Result<Vec<_>>>()?;
                Ok(self.wrap(q.join_all(&xs)))
            }
        }
    }

    pub fn meet(&self, values: &[QuantaleValue]) -> Result<QuantaleValue> {
        match self {
            AnyQuantale::Lawvere => {
                let xs = values.iter().map(|v| self.lawvere(v)).collect::<Result<Vec<_>>>()?;
                Ok(QuantaleValue::Lawvere(Lawvere.meet_all(xs)))
            }
            AnyQuantale::Finite(q) => {
                let xs = values.iter().map(|v| self.finite(v)).collect::<Result<Vec<_>>>()?;
                Ok(self.wrap(q.meet_all(&xs)))
            }
        }
    }

    pub fn residual(&self, side: Side, x: &QuantaleValue, y: &QuantaleValue) -> Result<QuantaleValue> {
        match self {
            AnyQuantale::Lawvere => Ok(QuantaleValue::Lawvere(Lawvere.residual(
                side,
                self.lawvere(x)?,
                self.lawvere(y)?,
            ))),
            AnyQuantale::Finite(q) => {
                Ok(self.wrap(q.residual(side, &self.finite(x)?, &self.finite(y)?)))
            }
        }
    }

    pub fn involve(&self, a: &QuantaleValue) -> Result<QuantaleValue> {
        match self {
            AnyQuantale::Lawvere => Ok(QuantaleValue::Lawvere(self.lawvere(a)?.clone())),
            AnyQuantale::Finite(q) => Ok(self.wrap(q.involve(&self.finite(a)?))),
        }
    }
}
