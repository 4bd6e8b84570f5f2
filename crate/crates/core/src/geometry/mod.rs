//! Straight-line embedded graphs in the plane.
//!
//! A graph is a set of closed segments ("edges") between distinct vertices;
//! any two edges share at most one point, which is either a common endpoint
//! or a point interior to both (a registered crossing). Directed edges are
//! indexed in pairs: undirected edge `k` yields directed indices `2k` (as
//! listed) and `2k + 1` (reversed), so reversal is a single XOR.

mod segment;

pub use segment::{classify_pair, orient2d, PairRelation};

use num_complex::Complex;
use thiserror::Error;

use crate::scalar::{Scalar, C};

/// A point of the plane, identified with the complex number `x + iy`.
#[derive(Copy, Clone, Debug, PartialEq, Default)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn to_complex(self) -> C<T> {
        Complex::new(self.x, self.y)
    }

    pub fn dist(self, other: Self) -> T {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    fn to_f64(self) -> [f64; 2] {
        [
            self.x.to_f64().expect("finite coordinate"),
            self.y.to_f64().expect("finite coordinate"),
        ]
    }
}

/// Undirected edge index into the graph's edge list.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub usize);

impl Edge {
    /// The directed edge running in list order (tail, head).
    pub fn forward(self) -> DirectedEdge {
        DirectedEdge(self.0 << 1)
    }

    /// The directed edge running against list order.
    pub fn backward(self) -> DirectedEdge {
        DirectedEdge(self.0 << 1 | 1)
    }
}

/// Directed edge index; `reversed` flips the low bit.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdge(pub usize);

impl DirectedEdge {
    pub fn reversed(self) -> Self {
        Self(self.0 ^ 1)
    }

    pub fn edge(self) -> Edge {
        Edge(self.0 >> 1)
    }

    pub fn is_forward(self) -> bool {
        self.0 & 1 == 0
    }
}

/// Default coincidence tolerance, in lattice units.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("vertex {0} has a non-finite coordinate")]
    NonFiniteCoordinate(usize),
    #[error("vertices {0} and {1} coincide within tolerance")]
    CoincidentVertices(usize, usize),
    #[error("edge {0} references a vertex out of range")]
    VertexOutOfRange(usize),
    #[error("edge {0} is degenerate (equal endpoints)")]
    DegenerateEdge(usize),
    #[error("edges {0} and {1} connect the same pair of vertices")]
    DuplicateEdge(usize, usize),
    #[error("edges {0} and {1} overlap along a segment")]
    OverlappingEdges(usize, usize),
    #[error("edges {0} and {1} share a point that is not a crossing interior to both")]
    TouchingEdges(usize, usize),
    #[error("directed edge index {0} out of range")]
    DirectedOutOfRange(usize),
    #[error("turning angle undefined: zero-length edge")]
    ZeroLengthEdge,
}

/// Outcome of [`validate`]: the full list of embedding violations.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<GeometryError>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A straight-line embedded graph with its crossing registry.
#[derive(Clone, Debug)]
pub struct PlanarGraph<T: Scalar> {
    points: Vec<Point<T>>,
    edges: Vec<[usize; 2]>,
    crossings: Vec<[usize; 2]>,
    out: Vec<Vec<DirectedEdge>>,
    max_degree: usize,
    tolerance: T,
}

impl<T: Scalar> PlanarGraph<T> {
    /// Build and validate a graph; crossings are detected geometrically.
    pub fn new(points: Vec<Point<T>>, edges: Vec<[usize; 2]>) -> Result<Self, GeometryError> {
        Self::with_tolerance(points, edges, T::cst(DEFAULT_TOLERANCE))
    }

    pub fn with_tolerance(
        points: Vec<Point<T>>,
        edges: Vec<[usize; 2]>,
        tolerance: T,
    ) -> Result<Self, GeometryError> {
        let report = validate(&points, &edges, tolerance);
        if let Some(v) = report.violations.into_iter().next() {
            return Err(v);
        }
        let crossings = detect_crossings(&points, &edges);
        let mut out = vec![Vec::new(); points.len()];
        for (k, &[a, b]) in edges.iter().enumerate() {
            out[a].push(Edge(k).forward());
            out[b].push(Edge(k).backward());
        }
        let max_degree = out.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Self {
            points,
            edges,
            crossings,
            out,
            max_degree,
            tolerance,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.points.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Number of directed edges, i.e. the dimension of the Kac-Ward operator.
    pub fn n_directed(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    pub fn point(&self, v: usize) -> Point<T> {
        self.points[v]
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn edge_endpoints(&self, e: Edge) -> [usize; 2] {
        self.edges[e.0]
    }

    pub fn edge_list(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn tail(&self, d: DirectedEdge) -> usize {
        let [a, b] = self.edges[d.edge().0];
        if d.is_forward() {
            a
        } else {
            b
        }
    }

    pub fn head(&self, d: DirectedEdge) -> usize {
        self.tail(d.reversed())
    }

    /// Direction vector `h(e) - t(e)` as a complex number.
    pub fn direction(&self, d: DirectedEdge) -> C<T> {
        self.point(self.head(d)).to_complex() - self.point(self.tail(d)).to_complex()
    }

    /// Midpoint `m(e) = (t(e) + h(e)) / 2`.
    pub fn midpoint(&self, d: DirectedEdge) -> Point<T> {
        let t = self.point(self.tail(d));
        let h = self.point(self.head(d));
        let half = T::cst(0.5);
        Point::new((t.x + h.x) * half, (t.y + h.y) * half)
    }

    pub fn directed_edges(&self) -> impl Iterator<Item = DirectedEdge> {
        (0..self.n_directed()).map(DirectedEdge)
    }

    pub fn undirected_edges(&self) -> impl Iterator<Item = Edge> {
        (0..self.n_edges()).map(Edge)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Directed edges with tail at `v`, ascending index order.
    pub fn out_edges(&self, v: usize) -> &[DirectedEdge] {
        &self.out[v]
    }

    /// Directed edges with head at `v`.
    pub fn in_edges(&self, v: usize) -> Vec<DirectedEdge> {
        self.out[v].iter().map(|d| d.reversed()).collect()
    }

    /// Directed edges with tail at `v`, counterclockwise by direction angle.
    pub fn out_edges_ccw(&self, v: usize) -> Vec<DirectedEdge> {
        let mut list = self.out[v].clone();
        list.sort_by(|&a, &b| {
            let da = self.direction(a);
            let db = self.direction(b);
            da.im.atan2(da.re)
                .partial_cmp(&db.im.atan2(db.re))
                .expect("finite angles")
        });
        list
    }

    /// Non-backtracking successors of `d`: edges out of `h(d)` except the
    /// reversal, ascending index order.
    pub fn successors(&self, d: DirectedEdge) -> impl Iterator<Item = DirectedEdge> + '_ {
        let rev = d.reversed();
        self.out[self.head(d)].iter().copied().filter(move |&g| g != rev)
    }

    /// Turning angle from `e` to `g` in `(-pi, pi]`; exactly `pi` for the
    /// reversal of the same edge.
    pub fn turning_angle(&self, e: DirectedEdge, g: DirectedEdge) -> T {
        let de = self.direction(e);
        let dg = self.direction(g);
        let cross = de.re * dg.im - de.im * dg.re;
        let dot = de.re * dg.re + de.im * dg.im;
        cross.atan2(dot)
    }

    /// Direction angle of a directed edge, `Arg(h(e) - t(e))` in `(-pi, pi]`.
    pub fn direction_angle(&self, d: DirectedEdge) -> T {
        let dir = self.direction(d);
        dir.im.atan2(dir.re)
    }

    pub fn count_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// Registered crossing pairs, each `[i, j]` with `i < j`, sorted.
    pub fn crossings(&self) -> &[[usize; 2]] {
        &self.crossings
    }

    pub fn edges_cross(&self, a: Edge, b: Edge) -> bool {
        if a == b {
            return false;
        }
        let key = [a.0.min(b.0), a.0.max(b.0)];
        self.crossings.binary_search(&key).is_ok()
    }

    /// Face successor: arriving along `d`, the next boundary edge of the
    /// face on the left of `d` (left-most turn, reversal only when forced).
    pub fn face_successor(&self, d: DirectedEdge) -> DirectedEdge {
        let rev = d.reversed();
        let mut best: Option<(T, DirectedEdge)> = None;
        for &g in &self.out[self.head(d)] {
            if g == rev {
                continue;
            }
            let ang = self.turning_angle(d, g);
            match best {
                Some((b, _)) if ang <= b => {}
                _ => best = Some((ang, g)),
            }
        }
        best.map(|(_, g)| g).unwrap_or(rev)
    }

    /// Decompose the directed edges into face-boundary orbits.
    pub fn faces(&self) -> Vec<Face<T>> {
        let mut seen = vec![false; self.n_directed()];
        let mut faces = Vec::new();
        for start in self.directed_edges() {
            if seen[start.0] {
                continue;
            }
            let mut boundary = Vec::new();
            let mut winding = T::zero();
            let mut d = start;
            loop {
                seen[d.0] = true;
                boundary.push(d);
                let next = self.face_successor(d);
                winding += self.turning_angle(d, next);
                d = next;
                if d == start {
                    break;
                }
            }
            faces.push(Face { boundary, winding });
        }
        faces
    }

    /// Replace `e` and `g` by their outer/inner half-edges: the modified
    /// graph `(G \ {e, g}) + {m(e), h(e)} + {t(g), m(g)}`.
    pub fn modify(
        &self,
        e: DirectedEdge,
        g: DirectedEdge,
    ) -> Result<ModifiedGraph<T>, GeometryError> {
        if e.0 >= self.n_directed() {
            return Err(GeometryError::DirectedOutOfRange(e.0));
        }
        if g.0 >= self.n_directed() {
            return Err(GeometryError::DirectedOutOfRange(g.0));
        }
        let mut points = self.points.clone();
        let mid_in = points.len();
        points.push(self.midpoint(e));
        let mid_out = if g.edge() == e.edge() {
            // Both midpoints coincide (g = e or g = -e).
            mid_in
        } else {
            points.push(self.midpoint(g));
            points.len() - 1
        };

        let mut edges = Vec::with_capacity(self.edges.len() + 1);
        let mut base_edge_of = Vec::with_capacity(self.edges.len() + 1);
        for (k, &pair) in self.edges.iter().enumerate() {
            if k == e.edge().0 || k == g.edge().0 {
                continue;
            }
            edges.push(pair);
            base_edge_of.push(Some(Edge(k)));
        }

        let half_in = Edge(edges.len());
        edges.push([mid_in, self.head(e)]);
        base_edge_of.push(None);

        let half_out = if g == e.reversed() {
            // {t(-e), m(-e)} = {h(e), m(e)}: the same segment as the inner
            // half-edge, so the edge set gains a single half-edge.
            half_in
        } else {
            let id = Edge(edges.len());
            edges.push([self.tail(g), mid_out]);
            base_edge_of.push(None);
            id
        };

        let graph = PlanarGraph::with_tolerance(points, edges, self.tolerance)?;
        Ok(ModifiedGraph {
            graph,
            half_in,
            half_out,
            mid_in,
            mid_out,
            base_edge_of,
            source: e,
            target: g,
        })
    }
}

/// One face-boundary orbit; `winding` is `2*pi` for simple inner faces and
/// `-2*pi` for the outer face.
#[derive(Clone, Debug)]
pub struct Face<T> {
    pub boundary: Vec<DirectedEdge>,
    pub winding: T,
}

impl<T: Scalar> Face<T> {
    /// True when no undirected edge repeats along the boundary.
    pub fn is_simple(&self) -> bool {
        let mut edges: Vec<usize> = self.boundary.iter().map(|d| d.edge().0).collect();
        edges.sort_unstable();
        edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Inner faces turn through `+2*pi`.
    pub fn is_inner(&self) -> bool {
        self.is_simple() && self.winding > T::cst(std::f64::consts::PI)
    }
}

/// The modified graph `G_{e,g}` with its two half-edges and loose midpoint
/// vertices. When `g = -e` the half-edges coincide as a single segment.
#[derive(Clone, Debug)]
pub struct ModifiedGraph<T: Scalar> {
    pub graph: PlanarGraph<T>,
    /// Half-edge `{m(e), h(e)}`; carries the weight of `e`.
    pub half_in: Edge,
    /// Half-edge `{t(g), m(g)}`; carries weight one when `g != -e`.
    pub half_out: Edge,
    /// Vertex index of `m(e)` in the modified graph.
    pub mid_in: usize,
    /// Vertex index of `m(g)`.
    pub mid_out: usize,
    /// For every modified edge, the base edge it came from (None for halves).
    pub base_edge_of: Vec<Option<Edge>>,
    pub source: DirectedEdge,
    pub target: DirectedEdge,
}

impl<T: Scalar> ModifiedGraph<T> {
    /// Weights for the modified edge list, given base weights per undirected
    /// edge: inherited on surviving edges, `x_e` on `{m(e), h(e)}`, one on
    /// `{t(g), m(g)}`.
    pub fn weights(&self, base: &[T]) -> Vec<T> {
        let mut w: Vec<T> = self
            .base_edge_of
            .iter()
            .map(|src| src.map(|e| base[e.0]).unwrap_or_else(T::one))
            .collect();
        w[self.half_in.0] = base[self.source.edge().0];
        if self.half_out != self.half_in {
            w[self.half_out.0] = T::one();
        }
        w
    }

    /// The directed half-edge `(m(e), h(e))` the left-most path starts with.
    pub fn start_dart(&self) -> DirectedEdge {
        let [a, _] = self.graph.edge_endpoints(self.half_in);
        if a == self.mid_in {
            self.half_in.forward()
        } else {
            self.half_in.backward()
        }
    }

    /// The directed half-edge `(t(g), m(g))` the left-most path ends with.
    pub fn end_dart(&self) -> DirectedEdge {
        let [a, _] = self.graph.edge_endpoints(self.half_out);
        if a == self.mid_out {
            self.half_out.backward()
        } else {
            self.half_out.forward()
        }
    }
}

/// Turning angle between two raw segments; errors on zero-length input.
pub fn turning_angle<T: Scalar>(
    e_tail: Point<T>,
    e_head: Point<T>,
    g_tail: Point<T>,
    g_head: Point<T>,
) -> Result<T, GeometryError> {
    let de = e_head.to_complex() - e_tail.to_complex();
    let dg = g_head.to_complex() - g_tail.to_complex();
    if de.norm_sqr() == T::zero() || dg.norm_sqr() == T::zero() {
        return Err(GeometryError::ZeroLengthEdge);
    }
    let cross = de.re * dg.im - de.im * dg.re;
    let dot = de.re * dg.re + de.im * dg.im;
    Ok(cross.atan2(dot))
}

/// Check the pairwise-intersection rule for an edge set over `points`;
/// reports every violating pair and never aborts.
pub fn validate<T: Scalar>(
    points: &[Point<T>],
    edges: &[[usize; 2]],
    tolerance: T,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (v, p) in points.iter().enumerate() {
        if !p.is_finite() {
            report.violations.push(GeometryError::NonFiniteCoordinate(v));
        }
    }
    if !report.is_ok() {
        return report;
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].dist(points[j]) < tolerance {
                report
                    .violations
                    .push(GeometryError::CoincidentVertices(i, j));
            }
        }
    }
    for (k, &[a, b]) in edges.iter().enumerate() {
        if a >= points.len() || b >= points.len() {
            report.violations.push(GeometryError::VertexOutOfRange(k));
        } else if a == b {
            report.violations.push(GeometryError::DegenerateEdge(k));
        }
    }
    if !report.is_ok() {
        return report;
    }
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let [a1, a2] = edges[i];
            let [b1, b2] = edges[j];
            let shared = [a1, a2]
                .iter()
                .filter(|v| [b1, b2].contains(v))
                .count();
            match shared {
                2 => report.violations.push(GeometryError::DuplicateEdge(i, j)),
                1 => {
                    let s = if [b1, b2].contains(&a1) { a1 } else { a2 };
                    let p = if a1 == s { a2 } else { a1 };
                    let q = if b1 == s { b2 } else { b1 };
                    if segment::overlap_at_shared(
                        points[s].to_f64(),
                        points[p].to_f64(),
                        points[q].to_f64(),
                    ) {
                        report
                            .violations
                            .push(GeometryError::OverlappingEdges(i, j));
                    }
                }
                _ => {
                    match classify_pair(
                        points[a1].to_f64(),
                        points[a2].to_f64(),
                        points[b1].to_f64(),
                        points[b2].to_f64(),
                    ) {
                        PairRelation::Disjoint | PairRelation::Crossing => {}
                        PairRelation::Touching => report
                            .violations
                            .push(GeometryError::TouchingEdges(i, j)),
                        PairRelation::Overlapping => report
                            .violations
                            .push(GeometryError::OverlappingEdges(i, j)),
                    }
                }
            }
        }
    }
    report
}

fn detect_crossings<T: Scalar>(points: &[Point<T>], edges: &[[usize; 2]]) -> Vec<[usize; 2]> {
    let mut crossings = Vec::new();
    let coords: Vec<[f64; 2]> = points.iter().map(|p| p.to_f64()).collect();
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let [a1, a2] = edges[i];
            let [b1, b2] = edges[j];
            if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
                continue;
            }
            if classify_pair(coords[a1], coords[a2], coords[b1], coords[b2])
                == PairRelation::Crossing
            {
                crossings.push([i, j]);
            }
        }
    }
    crossings
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PlanarGraph<f64> {
        PlanarGraph::new(
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(0.0, 1.0),
            ],
            vec![[0, 1], [1, 2], [2, 3], [3, 0]],
        )
        .unwrap()
    }

    #[test]
    fn directed_indexing_pairs() {
        let g = square();
        let d = Edge(1).forward();
        assert_eq!(d.0, 2);
        assert_eq!(d.reversed().0, 3);
        assert_eq!(d.reversed().reversed(), d);
        assert_eq!(g.tail(d), 1);
        assert_eq!(g.head(d), 2);
        assert_eq!(g.tail(d.reversed()), 2);
    }

    #[test]
    fn turning_angle_examples() {
        // e = (0,0)->(1,0) continued by collinear, left turn, and reversal.
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 1.0),
        ];
        let g = PlanarGraph::new(pts, vec![[0, 1], [1, 2], [1, 3]]).unwrap();
        let e = Edge(0).forward();
        assert_eq!(g.turning_angle(e, Edge(1).forward()), 0.0);
        assert_eq!(g.turning_angle(e, Edge(2).forward()), std::f64::consts::FRAC_PI_2);
        assert_eq!(g.turning_angle(e, e.reversed()), std::f64::consts::PI);
    }

    #[test]
    fn crossing_count_examples() {
        assert_eq!(square().count_crossings(), 0);

        let diagonals = PlanarGraph::new(
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(1.0, 0.0),
                Point::new(0.0, 1.0),
            ],
            vec![[0, 1], [2, 3]],
        )
        .unwrap();
        assert_eq!(diagonals.count_crossings(), 1);
    }

    #[test]
    fn k4_with_crossing_registers_one() {
        let g = crate::samples::k4_crossed::<f64>();
        assert_eq!(g.count_crossings(), 1);
        assert!(g.edges_cross(Edge(4), Edge(5)));
        assert!(!g.edges_cross(Edge(0), Edge(4)));
    }

    #[test]
    fn validate_reports_overlap() {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(3.0, 0.0),
        ];
        let report = validate(&pts, &[[0, 1], [2, 3]], 1e-9);
        assert_eq!(
            report.violations,
            vec![GeometryError::OverlappingEdges(0, 1)]
        );
        assert!(PlanarGraph::new(pts, vec![[0, 1], [2, 3]]).is_err());
    }

    #[test]
    fn validate_reports_overlap_at_shared_endpoint() {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 0.0),
        ];
        // {0,1} and {1,2} share vertex 1 and run back along the same line.
        let report = validate(&pts, &[[0, 1], [1, 2]], 1e-9);
        assert_eq!(
            report.violations,
            vec![GeometryError::OverlappingEdges(0, 1)]
        );
    }

    #[test]
    fn modify_splits_edge_into_halves() {
        let g = square();
        let e = Edge(0).forward();
        let m = g.modify(e, e).unwrap();
        assert_eq!(m.graph.n_edges(), 5); // 3 untouched + 2 halves
        assert_eq!(m.graph.n_vertices(), 5);
        assert_eq!(m.mid_in, m.mid_out);
        let w = m.weights(&[0.3, 0.5, 0.7, 0.9]);
        assert_eq!(w[m.half_in.0], 0.3);
        assert_eq!(w[m.half_out.0], 1.0);
        // Surviving edges keep their weights.
        for (k, src) in m.base_edge_of.iter().enumerate() {
            if let Some(edge) = src {
                assert_eq!(w[k], [0.3, 0.5, 0.7, 0.9][edge.0]);
            }
        }
    }

    #[test]
    fn modify_reversal_shares_segment() {
        let g = square();
        let e = Edge(0).forward();
        let m = g.modify(e, e.reversed()).unwrap();
        assert_eq!(m.half_in, m.half_out);
        assert_eq!(m.graph.n_edges(), 4); // 3 untouched + 1 shared half
    }

    #[test]
    fn faces_of_square() {
        let g = square();
        let faces = g.faces();
        assert_eq!(faces.len(), 2);
        let inner: Vec<_> = faces.iter().filter(|f| f.is_inner()).collect();
        assert_eq!(inner.len(), 1);
        assert_eq!(inner[0].boundary.len(), 4);
        approx::assert_relative_eq!(
            inner[0].winding,
            2.0 * std::f64::consts::PI,
            max_relative = 1e-12
        );
    }

    #[test]
    fn angle_sum_at_convex_corner() {
        // For consecutive edges around a convex face meeting at a vertex:
        // angle(e1, e2) + angle(e2, -e1) = pi.
        let g = square();
        let e1 = Edge(0).forward(); // (0,0)->(1,0)
        let e2 = Edge(1).forward(); // (1,0)->(1,1)
        let s = g.turning_angle(e1, e2) + g.turning_angle(e2, e1.reversed());
        approx::assert_relative_eq!(s, std::f64::consts::PI, max_relative = 1e-12);
    }
}
