//! JSON sets-file format: a universe plus named fuzzy sets on it.
//!
//! ```json
//! {
//!   "universe": ["x1", "x2", "x3"],
//!   "sets": {
//!     "A": {"x1": 0.2, "x2": 0.7, "x3": 1.0},
//!     "B": {"x1": 0.5, "x2": 0.5, "x3": 0.4}
//!   }
//! }
//! ```
//!
//! Every set must assign a degree to every universe element; a missing or
//! unknown element key is an error, as is any degree outside `[0, 1]`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::set::{FuzzySet, SetError, Universe};

/// Errors from reading a sets file.
#[derive(Debug, Error)]
pub enum FileError {
    #[error("invalid sets file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("set {set:?} is missing a degree for element {element:?}")]
    MissingDegree { set: String, element: String },
    #[error("set {set:?} names {element:?}, which is not in the universe")]
    UnknownElement { set: String, element: String },
    #[error("set {set:?}: {source}")]
    BadSet {
        set: String,
        #[source]
        source: SetError,
    },
    #[error(transparent)]
    BadUniverse(SetError),
}

#[derive(Deserialize)]
struct RawSetsFile {
    universe: Vec<String>,
    #[serde(default)]
    sets: BTreeMap<String, BTreeMap<String, f64>>,
}

/// The parsed contents of a sets file.
#[derive(Debug, Clone)]
pub struct SetsFile {
    pub universe: Arc<Universe>,
    /// Sets keyed by name, each on `universe`.
    pub sets: BTreeMap<String, FuzzySet>,
}

/// Parses the JSON sets-file format from a string.
pub fn parse_sets_file(text: &str) -> Result<SetsFile, FileError> {
    let raw: RawSetsFile = serde_json::from_str(text)?;
    let universe = Universe::new(raw.universe).map_err(FileError::BadUniverse)?;
    let mut sets = BTreeMap::new();
    for (name, degrees_by_label) in raw.sets {
        for element in degrees_by_label.keys() {
            if universe.index_of(element).is_none() {
                return Err(FileError::UnknownElement {
                    set: name,
                    element: element.clone(),
                });
            }
        }
        let degrees = universe
            .labels()
            .iter()
            .map(|label| {
                degrees_by_label
                    .get(label)
                    .copied()
                    .ok_or_else(|| FileError::MissingDegree {
                        set: name.clone(),
                        element: label.clone(),
                    })
            })
            .collect::<Result<Vec<f64>, _>>()?;
        let set = FuzzySet::new(Arc::clone(&universe), &degrees).map_err(|source| {
            FileError::BadSet {
                set: name.clone(),
                source,
            }
        })?;
        sets.insert(name, set);
    }
    Ok(SetsFile { universe, sets })
}
