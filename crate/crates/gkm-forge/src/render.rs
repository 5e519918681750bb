use std::fmt::Write;

use gkm::{first_chern_map, AbstractGkmGraph};
use graph_core::DartGraph;

fn header(name: &str, n: usize) -> String {
    let mut out = format!("graph {name} {{\n  node [shape=circle];\n");
    for v in 0..n {
        let _ = writeln!(out, "  {v};");
    }
    out
}

/// DOT text with one edge per undirected edge, labeled by the weight of the dart leaving the
/// smaller vertex and its `C₁` value (`?` where `C₁` is undefined).
pub fn render_gkm_dot(g: &AbstractGkmGraph) -> String {
    let c1 = first_chern_map(g).ok();
    let mut out = header("gkm", g.n_vertices());
    for (u, v) in g.graph().edges() {
        let dart = g.graph().dart_index(u, v).expect("edge");
        let w: Vec<String> = g.weight(dart).iter().map(ToString::to_string).collect();
        let c = c1.as_ref().map_or_else(|| "?".to_string(), |c| c[dart].to_string());
        let _ = writeln!(out, "  {u} -- {v} [label=\"w=({}); C1={c}\"];", w.join(","));
    }
    out.push_str("}\n");
    out
}

/// DOT text for a bare graph: unlabeled edges.
pub fn render_graph_dot(g: &DartGraph) -> String {
    let mut out = header("g", g.n_vertices());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gkm::fixtures::{k33_two_torus, projective_space};

    #[test]
    fn k4_has_six_labeled_edges() {
        let dot = render_gkm_dot(&projective_space());
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert_eq!(dot.matches("C1=4").count(), 6);
        assert!(dot.contains("0 -- 1 [label=\"w=(1,0,0); C1=4\"];"));
        assert_eq!(dot, render_gkm_dot(&projective_space()));
    }

    #[test]
    fn bare_graph_edges_are_unlabeled() {
        let dot = render_graph_dot(projective_space().graph());
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(!dot.contains("label"));
    }

    #[test]
    fn k33_labels_sum_to_24() {
        let dot = render_gkm_dot(&k33_two_torus());
        let sum: i64 = dot.split("C1=").skip(1).map(|s| s.split('"').next().unwrap().parse::<i64>().unwrap()).sum();
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert_eq!(sum, 24);
    }
}
