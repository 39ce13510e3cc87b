use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{cartesian_product_all, generate, Family, Graph};
use crate::error::{Error, Result};

/// Cartesian product of named families, written `cycle:8xk:2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Descriptor {
    factors: Vec<Family>,
}

impl Descriptor {
    pub fn new(factors: Vec<Family>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parameter(
                "descriptor needs at least one factor".into(),
            ));
        }
        factors.iter().try_for_each(Family::validate)?;
        Ok(Descriptor { factors })
    }

    pub fn factors(&self) -> &[Family] {
        &self.factors
    }

    pub fn is_product(&self) -> bool {
        self.factors.len() > 1
    }

    /// A single factor keeps the family's own labels.
    pub fn generate(&self) -> Result<Graph> {
        if let [f] = self.factors.as_slice() {
            return generate(f);
        }
        let graphs = self
            .factors
            .iter()
            .map(generate)
            .collect::<Result<Vec<_>>>()?;
        Ok(cartesian_product_all(&graphs))
    }
}

impl From<Family> for Descriptor {
    fn from(f: Family) -> Self {
        Descriptor { factors: vec![f] }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(Family::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split('x')
            .map(str::parse)
            .collect::<Result<Vec<Family>>>()?;
        Descriptor::new(factors)
    }
}
