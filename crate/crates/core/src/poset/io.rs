use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{FinitePoset, PosetError};

/// On-disk form: `{"elements": [...], "le": [[a, b], ...]}` with `a <= b`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    #[serde(default)]
    pub le: Vec<(String, String)>,
}

impl FinitePoset {
    pub fn from_json(text: &str) -> Result<FinitePoset, PosetError> {
        let doc: PosetDocument = serde_json::from_str(text)?;
        FinitePoset::from_relations(&doc.elements, &doc.le)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<FinitePoset, PosetError> {
        FinitePoset::from_json(&std::fs::read_to_string(path)?)
    }

    /// Document listing only the strict pairs; loading it gives back `self`.
    pub fn to_document(&self) -> PosetDocument {
        PosetDocument {
            elements: self.labels().to_vec(),
            le: self
                .strict_pairs()
                .into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let p = FinitePoset::from_json(r#"{"elements":["a","b","c"],"le":[["a","b"],["b","c"]]}"#)
            .unwrap();
        assert!(p.le(0, 2));
        let text = serde_json::to_string(&p.to_document()).unwrap();
        assert_eq!(FinitePoset::from_json(&text).unwrap(), p);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(
            FinitePoset::from_json(r#"{"elements":["a"],"le":[["a","q"]]}"#),
            Err(PosetError::UnknownElement(_))
        ));
        assert!(matches!(FinitePoset::from_json("{"), Err(PosetError::Json(_))));
        assert!(matches!(
            FinitePoset::load("/nonexistent/poset.json"),
            Err(PosetError::Io(_))
        ));
    }
}
