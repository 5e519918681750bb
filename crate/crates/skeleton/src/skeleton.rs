use graph_core::graph6::parse_graph6;
use graph_core::{DartGraph, EdgeOrdering, GraphJson};
use serde::Deserialize;
use serde_json::Value;

use crate::SkeletonError;

/// A regular connected graph with an oriented, ordered edge set and one integer label per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmSkeleton {
    graph: DartGraph,
    ordering: EdgeOrdering,
    labels: Vec<i64>,
}

impl GkmSkeleton {
    pub fn new(graph: DartGraph, ordering: EdgeOrdering, labels: Vec<i64>) -> Result<Self, SkeletonError> {
        if graph.valency().is_none() || !graph.is_connected() {
            return Err(SkeletonError::NotRegular);
        }
        if labels.len() != ordering.len() {
            return Err(SkeletonError::LabelCount { expected: ordering.len(), found: labels.len() });
        }
        Ok(Self { graph, ordering, labels })
    }

    /// Edges oriented from the smaller vertex and ordered lexicographically.
    pub fn lexicographic(graph: DartGraph, labels: Vec<i64>) -> Result<Self, SkeletonError> {
        let ordering = EdgeOrdering::lexicographic(&graph);
        Self::new(graph, ordering, labels)
    }

    /// `{"graph": <graph JSON object or graph6 string>, "d": [ints]}`, lexicographic edges.
    pub fn parse_json(text: &str) -> Result<Self, SkeletonError> {
        #[derive(Deserialize)]
        struct Raw {
            graph: Value,
            d: Vec<i64>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| SkeletonError::Malformed(e.to_string()))?;
        let graph = match raw.graph {
            Value::String(s) => parse_graph6(&s)?,
            v => serde_json::from_value::<GraphJson>(v)
                .map_err(|e| SkeletonError::Malformed(e.to_string()))?
                .to_graph()?,
        };
        Self::lexicographic(graph, raw.d)
    }

    pub fn graph(&self) -> &DartGraph {
        &self.graph
    }

    pub fn ordering(&self) -> &EdgeOrdering {
        &self.ordering
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn valency(&self) -> usize {
        self.graph.valency().expect("regular by construction")
    }

    pub fn n_edges(&self) -> usize {
        self.ordering.len()
    }

    /// The same graph and ordering with other labels.
    pub fn with_labels(&self, labels: Vec<i64>) -> Result<Self, SkeletonError> {
        Self::new(self.graph.clone(), self.ordering.clone(), labels)
    }
}

/// All labels positive and summing to 24.
pub fn is_positive_and_24(s: &GkmSkeleton) -> bool {
    s.labels.iter().all(|&d| d > 0) && s.labels.iter().sum::<i64>() == 24
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_graph6_and_json_forms() {
        let a = GkmSkeleton::parse_json(r#"{"graph":"C~","d":[4,4,4,4,4,4]}"#).unwrap();
        let b = GkmSkeleton::parse_json(
            r#"{"graph":{"vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]},"d":[4,4,4,4,4,4]}"#,
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(is_positive_and_24(&a));
        assert!(!is_positive_and_24(&a.with_labels(vec![0; 6]).unwrap()));
        assert!(!is_positive_and_24(&a.with_labels(vec![24, 0, 0, 0, 0, 0]).unwrap()));
    }

    #[test]
    fn label_count_is_checked() {
        let e = GkmSkeleton::parse_json(r#"{"graph":"C~","d":[4,4]}"#).unwrap_err();
        assert_eq!(e, SkeletonError::LabelCount { expected: 6, found: 2 });
    }
}
