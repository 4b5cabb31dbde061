//! Categorical, box and strong products.
//!
//! Product vertex `(v, w)` gets identifier `v * |V(y)| + w`. Iterated box
//! products fold left, so their identifiers read the coordinates as a mixed
//! radix number with the first factor most significant.

use serde::Serialize;

use crate::graph::{Graph, GraphError};

/// Coordinates of each product vertex, indexed by product vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ProductVertexMap {
    coords: Vec<Vec<usize>>,
}

impl ProductVertexMap {
    fn pairs(nx: usize, ny: usize) -> Self {
        let coords = (0..nx)
            .flat_map(|v| (0..ny).map(move |w| vec![v, w]))
            .collect();
        ProductVertexMap { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self, id: usize) -> &[usize] {
        &self.coords[id]
    }

    pub fn id_of(&self, coords: &[usize]) -> Option<usize> {
        self.coords.iter().position(|c| c == coords)
    }
}

fn product_with(
    x: &Graph,
    y: &Graph,
    adjacent: impl Fn(usize, usize, usize, usize) -> bool,
) -> Result<(Graph, ProductVertexMap), GraphError> {
    let (nx, ny) = (x.n(), y.n());
    let mut adj = vec![Vec::new(); nx * ny];
    for v1 in 0..nx {
        for w1 in 0..ny {
            let id = v1 * ny + w1;
            for v2 in 0..nx {
                for w2 in 0..ny {
                    if adjacent(v1, w1, v2, w2) {
                        adj[id].push(v2 * ny + w2);
                    }
                }
            }
        }
    }
    let g = Graph::from_adjacency(adj)?;
    Ok((g, ProductVertexMap::pairs(nx, ny)))
}

/// `(v1,w1) ~ (v2,w2)` iff `v1 ~ v2` and `w1 ~ w2`.
pub fn categorical_product(x: &Graph, y: &Graph) -> Result<(Graph, ProductVertexMap), GraphError> {
    product_with(x, y, |v1, w1, v2, w2| {
        x.has_edge(v1, v2) && y.has_edge(w1, w2)
    })
}

/// One coordinate fixed, the other moves along an edge. Moving along a loop
/// returns to the same vertex, so `(v,w)` is looped iff `v` or `w` is.
pub fn box_product(x: &Graph, y: &Graph) -> Result<(Graph, ProductVertexMap), GraphError> {
    product_with(x, y, |v1, w1, v2, w2| {
        (v1 == v2 && y.has_edge(w1, w2)) || (w1 == w2 && x.has_edge(v1, v2))
    })
}

/// Union of the categorical and box edge sets.
pub fn strong_product(x: &Graph, y: &Graph) -> Result<(Graph, ProductVertexMap), GraphError> {
    product_with(x, y, |v1, w1, v2, w2| {
        let ex = x.has_edge(v1, v2);
        let ey = y.has_edge(w1, w2);
        (ex && ey) || (v1 == v2 && ey) || (w1 == w2 && ex)
    })
}

pub fn iterated_box(gs: &[Graph]) -> Result<(Graph, ProductVertexMap), GraphError> {
    let (first, rest) = gs
        .split_first()
        .ok_or_else(|| GraphError::InvalidInput("iterated box product of an empty list".into()))?;
    let mut acc = first.clone();
    let mut coords: Vec<Vec<usize>> = first.vertices().map(|v| vec![v]).collect();
    for g in rest {
        let (next, pairs) = box_product(&acc, g)?;
        coords = (0..pairs.len())
            .map(|id| {
                let p = pairs.coords(id);
                let mut c = coords[p[0]].clone();
                c.push(p[1]);
                c
            })
            .collect();
        acc = next;
    }
    Ok((acc, ProductVertexMap { coords }))
}
