//! Flag complexes and their reduced homology.

use std::collections::HashMap;

use super::{linalg, ExactField, OracleError};
use crate::graph::SimpleGraph;

/// Largest label a complex can hold; faces are stored as `u64` bit masks.
pub const MAX_COMPLEX_VERTICES: usize = 64;

/// Simplicial complex on labels `1..=n`, faces kept per dimension.
///
/// `faces[d]` lists the `d`-dimensional faces (those with `d + 1` vertices)
/// as bit masks, bit `v - 1` standing for label `v`, sorted ascending.
/// The empty face is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<Vec<u64>>,
}

fn labels(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

impl SimplicialComplex {
    /// Clique complex of the graph whose adjacency masks are `adj`, restricted
    /// to the vertices in `within`.
    pub(crate) fn flag_from_masks(n: usize, adj: &[u64], within: u64) -> Self {
        let mut faces: Vec<Vec<u64>> = Vec::new();
        fn grow(
            adj: &[u64],
            clique: u64,
            mut candidates: u64,
            depth: usize,
            faces: &mut Vec<Vec<u64>>,
        ) {
            if faces.len() <= depth {
                faces.push(Vec::new());
            }
            faces[depth].push(clique);
            while candidates != 0 {
                let v = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                grow(adj, clique | 1 << v, candidates & adj[v], depth + 1, faces);
            }
        }
        let mut rest = within;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, 1 << v, rest & adj[v], 0, &mut faces);
        }
        for layer in &mut faces {
            layer.sort_unstable();
        }
        SimplicialComplex { n, faces }
    }

    /// Downward closure of the given faces (labels in `1..=n`).
    pub fn from_facets<I, F>(n: usize, facets: I) -> Result<Self, OracleError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        if n > MAX_COMPLEX_VERTICES {
            return Err(OracleError::TooManyVertices(n));
        }
        let mut layers: Vec<std::collections::BTreeSet<u64>> = Vec::new();
        for facet in facets {
            let mut mask = 0u64;
            for v in facet {
                if v == 0 || v > n {
                    return Err(OracleError::TooManyVertices(v));
                }
                mask |= 1 << (v - 1);
            }
            // Enumerate all nonempty submasks.
            let mut sub = mask;
            while sub != 0 {
                let d = sub.count_ones() as usize - 1;
                if layers.len() <= d {
                    layers.resize_with(d + 1, Default::default);
                }
                layers[d].insert(sub);
                sub = (sub - 1) & mask;
            }
        }
        Ok(SimplicialComplex {
            n,
            faces: layers
                .into_iter()
                .map(|l| l.into_iter().collect())
                .collect(),
        })
    }

    /// Label bound.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.faces
            .first()
            .map(|vs| vs.iter().flat_map(|&m| labels(m)).collect())
            .unwrap_or_default()
    }

    /// Dimension of the largest face; `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    /// Faces of dimension `d` as ascending label lists.
    pub fn faces(&self, d: usize) -> Vec<Vec<usize>> {
        self.faces
            .get(d)
            .map(|layer| layer.iter().map(|&m| labels(m)).collect())
            .unwrap_or_default()
    }

    /// Number of faces in each dimension `0, 1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        if face.is_empty() {
            return true;
        }
        let mask = face.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
        self.faces
            .get(face.len() - 1)
            .is_some_and(|layer| layer.binary_search(&mask).is_ok())
    }

    /// Every codimension-one face of every face is present.
    pub fn is_closed(&self) -> bool {
        self.faces.iter().enumerate().skip(1).all(|(d, layer)| {
            layer.iter().all(|&f| {
                let mut m = f;
                while m != 0 {
                    let bit = m & m.wrapping_neg();
                    m &= m - 1;
                    if self.faces[d - 1].binary_search(&(f & !bit)).is_err() {
                        return false;
                    }
                }
                true
            })
        })
    }

    /// Boundary map from `d`-faces to `(d-1)`-faces as a dense integer
    /// matrix (rows: `(d-1)`-faces, columns: `d`-faces). The sign of a facet
    /// is `(-1)^k` where `k` is the position of the removed vertex in the
    /// ascending label order. For `d = 0` the single row is the empty face.
    pub fn boundary_matrix(&self, d: usize) -> Vec<Vec<i64>> {
        let cols = self.faces.get(d).map_or(&[][..], Vec::as_slice);
        if d == 0 {
            return vec![vec![1; cols.len()]];
        }
        let rows = &self.faces[d - 1];
        let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &face) in cols.iter().enumerate() {
            let mut m = face;
            let mut k = 0;
            while m != 0 {
                let bit = m & m.wrapping_neg();
                m &= m - 1;
                let r = index[&(face & !bit)];
                matrix[r][c] = if k % 2 == 0 { 1 } else { -1 };
                k += 1;
            }
        }
        matrix
    }
}

/// Clique complex of `g`: every clique of `g` is a face.
pub fn clique_complex(g: &SimpleGraph) -> Result<SimplicialComplex, OracleError> {
    let n = g.n();
    if n > MAX_COMPLEX_VERTICES {
        return Err(OracleError::TooManyVertices(n));
    }
    let adj: Vec<u64> = (1..=n)
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, w| m | 1 << (w - 1)))
        .collect();
    let within = g.vertices().iter().fold(0u64, |m, v| m | 1 << (v - 1));
    Ok(SimplicialComplex::flag_from_masks(n, &adj, within))
}

/// Dimensions of reduced homology over `field`, indexed so that entry `k`
/// is `dim H~_{k-1}`: the first entry is degree -1. The empty complex has
/// `H~_{-1}` of dimension one.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: ExactField) -> Vec<usize> {
    let top = c.faces.len();
    // ranks[d] = rank of the boundary from d-faces; ranks[top] = 0.
    let mut ranks = vec![0usize; top + 1];
    for (d, rank) in ranks.iter_mut().enumerate().take(top) {
        *rank = if d == 0 {
            usize::from(!c.faces[0].is_empty())
        } else {
            linalg::rank(&c.boundary_matrix(d), field)
        };
    }
    let mut dims = Vec::with_capacity(top + 1);
    // Degree -1: the empty face, whose outgoing boundary is zero.
    dims.push(1 - ranks[0]);
    for d in 0..top {
        dims.push(c.faces[d].len() - ranks[d] - ranks[d + 1]);
    }
    dims
}
