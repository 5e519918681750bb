use graph_core::automorphisms;

use crate::GkmSkeleton;

/// Each graph automorphism as a permutation of edge indices: edge `j` goes to `perm[j]`.
pub fn edge_permutations(s: &GkmSkeleton) -> Vec<Vec<usize>> {
    let g = s.graph();
    let ord = s.ordering();
    automorphisms(g)
        .into_iter()
        .map(|sigma| {
            ord.edges()
                .iter()
                .map(|&(u, v)| ord.index_of_dart(g.dart_index(sigma[u], sigma[v]).expect("automorphism")).0)
                .collect()
        })
        .collect()
}

/// Lexicographically smallest relabeling of `labels` under the given edge permutations.
pub fn canonical_labels(perms: &[Vec<usize>], labels: &[i64]) -> Vec<i64> {
    let mut best = labels.to_vec();
    let mut image = vec![0; labels.len()];
    for p in perms {
        for (j, &d) in labels.iter().enumerate() {
            image[p[j]] = d;
        }
        if image < best {
            best.clone_from(&image);
        }
    }
    best
}

/// The orbit representative of the labels under the automorphism group of the graph.
pub fn skeleton_canonical_label_vector(s: &GkmSkeleton) -> Vec<i64> {
    canonical_labels(&edge_permutations(s), s.labels())
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::graph6::parse_graph6;

    #[test]
    fn k4_orbits() {
        let s = GkmSkeleton::lexicographic(parse_graph6("C~").unwrap(), vec![4; 6]).unwrap();
        assert_eq!(skeleton_canonical_label_vector(&s), vec![4; 6]);
        let perms = edge_permutations(&s);
        assert_eq!(perms.len(), 24);
        let labels = [5, 4, 4, 4, 4, 3];
        let canon = canonical_labels(&perms, &labels);
        for p in &perms {
            let mut image = vec![0; 6];
            for j in 0..6 {
                image[p[j]] = labels[j];
            }
            assert_eq!(canonical_labels(&perms, &image), canon);
        }
        // 5 and 3 sit on opposite edges; edges 0 and 5 are opposite too.
        assert_eq!(canon, vec![3, 4, 4, 4, 4, 5]);
    }
}
