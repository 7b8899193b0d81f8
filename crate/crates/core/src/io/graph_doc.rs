//! The weighted majority graph document: `{"m": 3, "margins": [[0, 1, 1], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, ParseError};
use crate::majority::MarginMatrix;
use crate::mcgarvey::WeightedMajorityGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub m: usize,
    pub margins: Vec<Vec<i32>>,
}

impl GraphDocument {
    pub fn from_margins(g: &MarginMatrix) -> Self {
        GraphDocument { m: g.m(), margins: g.rows() }
    }

    pub fn to_graph(&self) -> Result<WeightedMajorityGraph, GraphError> {
        if self.margins.len() != self.m {
            return Err(GraphError::Shape { m: self.m });
        }
        WeightedMajorityGraph::new(&self.margins)
    }
}

pub fn parse_graph(text: &str) -> Result<WeightedMajorityGraph, ParseError> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    Ok(doc.to_graph()?)
}

pub fn serialize_graph(g: &MarginMatrix) -> String {
    serde_json::to_string(&GraphDocument::from_margins(g)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = r#"{"m": 2, "margins": [[0, 3], [-3, 0]]}"#;
        let g = parse_graph(text).unwrap();
        assert_eq!(g.target().get(0, 1), 3);
        assert_eq!(parse_graph(&serialize_graph(g.target())).unwrap(), g);
    }

    #[test]
    fn validation() {
        assert_eq!(parse_graph(r#"{"m": 3, "margins": [[0, 1], [-1, 0]]}"#), Err(ParseError::Graph(GraphError::Shape { m: 3 })));
        assert_eq!(
            parse_graph(r#"{"m": 3, "margins": [[0, 1, 2], [-1, 0, 1], [-2, -1, 0]]}"#),
            Err(ParseError::Graph(GraphError::MixedParity))
        );
        assert!(matches!(parse_graph("{"), Err(ParseError::Json(_))));
    }
}
