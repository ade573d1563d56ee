//! Chordality via lexicographic breadth-first search.

use super::SimpleGraph;

/// Lex-BFS visit order over the graph's vertex set. Ties are broken toward
/// the smallest label, so the order is deterministic.
pub fn lex_bfs_order(g: &SimpleGraph) -> Vec<usize> {
    let verts = g.vertices().to_vec();
    let total = verts.len();
    // Labels are decreasing visit stamps; lexicographic comparison of these
    // vectors is exactly the Lex-BFS priority.
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); g.n() + 1];
    let mut visited = vec![false; g.n() + 1];
    let mut order = Vec::with_capacity(total);
    for stamp in (1..=total).rev() {
        let next = verts
            .iter()
            .copied()
            .filter(|&v| !visited[v])
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("unvisited vertex remains");
        visited[next] = true;
        order.push(next);
        for w in g.neighbours(next).iter() {
            if !visited[w] {
                labels[w].push(stamp);
            }
        }
    }
    order
}

/// Checks that eliminating vertices in `elimination` order only ever removes
/// simplicial vertices: the neighbours of each vertex that come later in the
/// order form a clique.
pub fn is_perfect_elimination_ordering(g: &SimpleGraph, elimination: &[usize]) -> bool {
    let mut position = vec![usize::MAX; g.n() + 1];
    for (i, &v) in elimination.iter().enumerate() {
        position[v] = i;
    }
    for (i, &v) in elimination.iter().enumerate() {
        let later: Vec<usize> = g
            .neighbours(v)
            .iter()
            .filter(|&w| position[w] > i && position[w] != usize::MAX)
            .collect();
        // Tarjan-Yannakakis: it suffices to test the earliest later neighbour.
        let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// True iff `g` has no chordless cycle of length at least 4.
pub fn is_chordal(g: &SimpleGraph) -> bool {
    let mut order = lex_bfs_order(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_are_not_chordal() {
        for n in 4..9 {
            assert!(!is_chordal(&SimpleGraph::cycle(n).unwrap()), "C{n}");
        }
        assert!(is_chordal(&SimpleGraph::cycle(3).unwrap()));
    }

    #[test]
    fn trees_and_complete_graphs_are_chordal() {
        let tree = SimpleGraph::new(7, [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (6, 7)]).unwrap();
        assert!(is_chordal(&tree));
        assert!(is_chordal(&SimpleGraph::path(6).unwrap()));
        assert!(is_chordal(&SimpleGraph::complete(6).unwrap()));
        assert!(is_chordal(&SimpleGraph::edgeless(4).unwrap()));
    }

    #[test]
    fn c4_with_chord_is_chordal() {
        let g = SimpleGraph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]).unwrap();
        assert!(is_chordal(&g));
    }

    #[test]
    fn lex_bfs_visits_every_vertex_once() {
        let g = SimpleGraph::cycle(6).unwrap();
        let mut order = lex_bfs_order(&g);
        assert_eq!(order[0], 1);
        order.sort_unstable();
        assert_eq!(order, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn peo_rejects_bad_order_on_chordal_graph() {
        // Path 1-2-3: eliminating the middle vertex first is not perfect.
        let g = SimpleGraph::path(3).unwrap();
        assert!(!is_perfect_elimination_ordering(&g, &[2, 1, 3]));
        assert!(is_perfect_elimination_ordering(&g, &[1, 2, 3]));
    }
}
