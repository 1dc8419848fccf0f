use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A ground set and a family of named subsets of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverSystem {
    pub universe: Vec<String>,
    pub sets: Vec<Vec<String>>,
}

impl CoverSystem {
    pub fn new(universe: Vec<String>, sets: Vec<Vec<String>>) -> Result<Self> {
        let sys = CoverSystem { universe, sets };
        sys.validate()?;
        Ok(sys)
    }

    /// `U = {u1, .., u4}` with sets `{u1}`, `{u1, u2, u3}`, `{u3, u4}`.
    pub fn running_example() -> Self {
        let s = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        CoverSystem {
            universe: s(&["u1", "u2", "u3", "u4"]),
            sets: vec![s(&["u1"]), s(&["u1", "u2", "u3"]), s(&["u3", "u4"])],
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let sys: CoverSystem =
            serde_json::from_str(text).map_err(|e| Error::InvalidCoverSystem(e.to_string()))?;
        sys.validate()?;
        Ok(sys)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("cover system serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let mut names = self.universe.clone();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCoverSystem(
                "duplicate universe element".into(),
            ));
        }
        for set in &self.sets {
            if let Some(x) = set.iter().find(|x| names.binary_search(x).is_err()) {
                return Err(Error::InvalidCoverSystem(format!(
                    "{x:?} is not in the universe"
                )));
            }
        }
        Ok(())
    }

    /// Index of `name` in the universe.
    pub fn element(&self, name: &str) -> Option<usize> {
        self.universe.iter().position(|u| u == name)
    }

    /// Each set as a bitmask over universe positions.
    pub(crate) fn masks(&self) -> Vec<u128> {
        self.sets
            .iter()
            .map(|set| {
                set.iter()
                    .filter_map(|x| self.element(x))
                    .fold(0u128, |m, i| m | 1 << i)
            })
            .collect()
    }
}
