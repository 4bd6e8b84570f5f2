//! Small fixed graphs used throughout the tests and the CLI examples.

use crate::geometry::{PlanarGraph, Point};
use crate::scalar::Scalar;

/// The unit square traversed as a 4-cycle.
pub fn four_cycle<T: Scalar>() -> PlanarGraph<T> {
    PlanarGraph::new(
        vec![
            Point::new(T::zero(), T::zero()),
            Point::new(T::one(), T::zero()),
            Point::new(T::one(), T::one()),
            Point::new(T::zero(), T::one()),
        ],
        vec![[0, 1], [1, 2], [2, 3], [3, 0]],
    )
    .expect("valid square")
}

/// A single straight edge.
pub fn single_edge<T: Scalar>() -> PlanarGraph<T> {
    PlanarGraph::new(
        vec![
            Point::new(T::zero(), T::zero()),
            Point::new(T::one(), T::zero()),
        ],
        vec![[0, 1]],
    )
    .expect("valid edge")
}

/// Regular hexagon traversed as a 6-cycle (unit side length).
pub fn hexagon_cycle<T: Scalar>() -> PlanarGraph<T> {
    let points = (0..6)
        .map(|k| {
            let ang = T::cst(std::f64::consts::FRAC_PI_3 * k as f64);
            Point::new(ang.cos(), ang.sin())
        })
        .collect();
    let edges = (0..6).map(|k| [k, (k + 1) % 6]).collect();
    PlanarGraph::new(points, edges).expect("valid hexagon")
}

/// K4 drawn on the unit square: four sides plus the two crossing diagonals.
/// Edges 0..3 are the sides, 4 and 5 the diagonals.
pub fn k4_crossed<T: Scalar>() -> PlanarGraph<T> {
    PlanarGraph::new(
        vec![
            Point::new(T::zero(), T::zero()),
            Point::new(T::one(), T::zero()),
            Point::new(T::one(), T::one()),
            Point::new(T::zero(), T::one()),
        ],
        vec![[0, 1], [1, 2], [2, 3], [3, 0], [0, 2], [1, 3]],
    )
    .expect("valid K4")
}

/// Rectangular piece of the unit square lattice with `nx * ny` vertices.
/// Vertex `(i, j)` has index `j * nx + i`; horizontal edges come first.
pub fn square_grid_graph<T: Scalar>(nx: usize, ny: usize) -> PlanarGraph<T> {
    assert!(nx >= 1 && ny >= 1, "grid must be nonempty");
    let mut points = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            points.push(Point::new(T::cst(i as f64), T::cst(j as f64)));
        }
    }
    let idx = |i: usize, j: usize| j * nx + i;
    let mut edges = Vec::new();
    for j in 0..ny {
        for i in 0..nx.saturating_sub(1) {
            edges.push([idx(i, j), idx(i + 1, j)]);
        }
    }
    for j in 0..ny.saturating_sub(1) {
        for i in 0..nx {
            edges.push([idx(i, j), idx(i, j + 1)]);
        }
    }
    PlanarGraph::new(points, edges).expect("valid grid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        let g = square_grid_graph::<f64>(3, 3);
        assert_eq!(g.n_vertices(), 9);
        assert_eq!(g.n_edges(), 12);
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.count_crossings(), 0);
    }

    #[test]
    fn k4_has_one_crossing() {
        assert_eq!(k4_crossed::<f64>().count_crossings(), 1);
    }
}
