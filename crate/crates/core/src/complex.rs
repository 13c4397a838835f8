//! Combinatorial triangulations of a quadrilateral `pqrs` and geometric
//! dissections.
//!
//! A [`CombinatorialTriangulation`] is a simplicial disk whose boundary is
//! exactly the 4-cycle `p -> q -> r -> s -> p`, with every triangle oriented
//! consistently with that boundary. A [`GeometricDissection`] is a set of
//! rational triangles tiling a trapezoid; [`poof`] turns one into the other by
//! inserting zero-area triangles along subdivided segments.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::areamap::Drawing;
use crate::exact::Rational;
use crate::geometry::{cross, doubled_area, on_open_segment, orientation, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    P,
    Q,
    R,
    S,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::P, Corner::Q, Corner::R, Corner::S];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {0:?} listed twice")]
    DuplicateVertex(String),
    #[error("the four corners must be distinct")]
    RepeatedCorner,
    #[error("triangle index {0} out of range")]
    NoSuchTriangle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialTriangulation {
    vertices: Vec<String>,
    corners: [usize; 4],
    triangles: Vec<[usize; 3]>,
}

impl CombinatorialTriangulation {
    /// Resolves vertex ids. Topology is checked separately by
    /// [`validate`](Self::validate).
    pub fn new<S: AsRef<str>>(vertices: &[S], corners: [&str; 4], triangles: &[[S; 3]]) -> Result<Self, ComplexError> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(ComplexError::DuplicateVertex(v.clone()));
            }
        }
        let find = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| ComplexError::UnknownVertex(name.to_string()))
        };
        let mut c = [0usize; 4];
        for (k, name) in corners.iter().enumerate() {
            c[k] = find(name)?;
        }
        if (0..4).any(|i| (0..i).any(|j| c[i] == c[j])) {
            return Err(ComplexError::RepeatedCorner);
        }
        let mut tris = Vec::with_capacity(triangles.len());
        for t in triangles {
            tris.push([find(t[0].as_ref())?, find(t[1].as_ref())?, find(t[2].as_ref())?]);
        }
        Ok(CombinatorialTriangulation {
            vertices,
            corners: c,
            triangles: tris,
        })
    }

    pub fn from_indices(vertices: Vec<String>, corners: [usize; 4], triangles: Vec<[usize; 3]>) -> Self {
        CombinatorialTriangulation {
            vertices,
            corners,
            triangles,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Vertex indices of `p, q, r, s`.
    pub fn corners(&self) -> [usize; 4] {
        self.corners
    }

    pub fn corner(&self, c: Corner) -> usize {
        self.corners[c.index()]
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Non-corner vertices in vertex-list order.
    pub fn interior_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|v| !self.corners.contains(v)).collect()
    }

    /// Undirected edge count.
    pub fn edge_count(&self) -> usize {
        let mut edges = BTreeSet::new();
        for t in &self.triangles {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        edges.len()
    }

    /// Splits triangle `index` at a new vertex. The first sub-triangle takes
    /// the original slot; the other two are appended.
    pub fn refine_barycentric(&self, index: usize) -> Result<Self, ComplexError> {
        let [a, b, c] = *self.triangles.get(index).ok_or(ComplexError::NoSuchTriangle(index))?;
        let mut k = 1;
        let name = loop {
            let candidate = format!("m{k}");
            if self.vertex_index(&candidate).is_none() {
                break candidate;
            }
            k += 1;
        };
        let mut out = self.clone();
        let m = out.vertices.len();
        out.vertices.push(name);
        out.triangles[index] = [a, b, m];
        out.triangles.push([b, c, m]);
        out.triangles.push([c, a, m]);
        Ok(out)
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }
}

/// One failed condition of [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    RepeatedVertex { triangle: usize },
    DuplicateTriangle { first: usize, second: usize },
    EdgeOverused { a: String, b: String, count: usize },
    EdgeOrientation { a: String, b: String },
    Boundary { found: Vec<(String, String)> },
    UnusedVertex(String),
    Disconnected { components: usize },
    VertexLink(String),
    Euler { v: usize, e: usize, f: usize },
    TriangleCount { v: usize, f: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RepeatedVertex { triangle } => write!(f, "triangle {triangle} repeats a vertex"),
            Violation::DuplicateTriangle { first, second } => {
                write!(f, "triangles {first} and {second} have the same vertices")
            }
            Violation::EdgeOverused { a, b, count } => write!(f, "edge {a}-{b} lies in {count} triangles"),
            Violation::EdgeOrientation { a, b } => {
                write!(f, "edge {a}-{b} is traversed in the same direction twice")
            }
            Violation::Boundary { found } => {
                write!(f, "boundary is not the cycle p->q->r->s->p; boundary edges: ")?;
                for (k, (a, b)) in found.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}->{b}")?;
                }
                Ok(())
            }
            Violation::UnusedVertex(v) => write!(f, "vertex {v} lies in no triangle"),
            Violation::Disconnected { components } => {
                write!(f, "triangles form {components} edge-connected components")
            }
            Violation::VertexLink(v) => write!(f, "link of vertex {v} is not a single path or cycle"),
            Violation::Euler { v, e, f: ff } => write!(f, "V - E + F = {v} - {e} + {ff} != 1"),
            Violation::TriangleCount { v, f: ff } => write!(f, "F = {ff} but 2V - 6 = {}", 2 * *v as i64 - 6),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `t` is a consistently oriented simplicial disk bounded by
/// `p -> q -> r -> s -> p`.
pub fn validate(t: &CombinatorialTriangulation) -> ValidationReport {
    let mut out = Vec::new();
    let name = |v: usize| t.vertices[v].clone();

    let mut seen: BTreeMap<[usize; 3], usize> = BTreeMap::new();
    for (i, tri) in t.triangles.iter().enumerate() {
        if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
            out.push(Violation::RepeatedVertex { triangle: i });
            continue;
        }
        let mut key = *tri;
        key.sort_unstable();
        if let Some(&first) = seen.get(&key) {
            out.push(Violation::DuplicateTriangle { first, second: i });
        } else {
            seen.insert(key, i);
        }
    }
    if !out.is_empty() {
        return ValidationReport { violations: out };
    }

    // directed edge -> owning triangles
    let mut directed: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, tri) in t.triangles.iter().enumerate() {
        for k in 0..3 {
            directed.entry((tri[k], tri[(k + 1) % 3])).or_default().push(i);
        }
    }
    let mut undirected: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (&(a, b), owners) in &directed {
        *undirected.entry((a.min(b), a.max(b))).or_default() += owners.len();
        if owners.len() > 1 {
            out.push(Violation::EdgeOrientation { a: name(a), b: name(b) });
        }
    }
    for (&(a, b), &count) in &undirected {
        if count > 2 {
            out.push(Violation::EdgeOverused {
                a: name(a),
                b: name(b),
                count,
            });
        }
    }

    let boundary: BTreeSet<(usize, usize)> = directed
        .keys()
        .filter(|(a, b)| !directed.contains_key(&(*b, *a)))
        .copied()
        .collect();
    let [p, q, r, s] = t.corners;
    let expected: BTreeSet<(usize, usize)> = [(p, q), (q, r), (r, s), (s, p)].into_iter().collect();
    if boundary != expected {
        out.push(Violation::Boundary {
            found: boundary.iter().map(|&(a, b)| (name(a), name(b))).collect(),
        });
    }

    let mut used = alloc::vec![false; t.vertices.len()];
    for tri in &t.triangles {
        for &v in tri {
            used[v] = true;
        }
    }
    for (v, u) in used.iter().enumerate() {
        if !u {
            out.push(Violation::UnusedVertex(name(v)));
        }
    }

    let components = edge_components(t, &directed);
    if components != 1 {
        out.push(Violation::Disconnected { components });
    }

    for (v, &u) in used.iter().enumerate() {
        if u && !link_is_disk(t, v) {
            out.push(Violation::VertexLink(name(v)));
        }
    }

    let (nv, ne, nf) = (t.vertices.len(), undirected.len(), t.triangles.len());
    if nv as i64 - ne as i64 + nf as i64 != 1 {
        out.push(Violation::Euler { v: nv, e: ne, f: nf });
    }
    if nf as i64 != 2 * nv as i64 - 6 {
        out.push(Violation::TriangleCount { v: nv, f: nf });
    }
    ValidationReport { violations: out }
}

fn edge_components(t: &CombinatorialTriangulation, directed: &BTreeMap<(usize, usize), Vec<usize>>) -> usize {
    let n = t.triangles.len();
    if n == 0 {
        return 0;
    }
    let mut uf = UnionFind::new(n);
    for (&(a, b), owners) in directed {
        for w in owners.windows(2) {
            uf.union(w[0], w[1]);
        }
        if let Some(rev) = directed.get(&(b, a)) {
            uf.union(owners[0], rev[0]);
        }
    }
    (0..n).filter(|&i| uf.find(i) == i).count()
}

/// The link of `v` must be one directed cycle (interior vertex) or one
/// directed path (corner).
fn link_is_disk(t: &CombinatorialTriangulation, v: usize) -> bool {
    let mut next: BTreeMap<usize, usize> = BTreeMap::new();
    let mut indeg: BTreeMap<usize, usize> = BTreeMap::new();
    for tri in &t.triangles {
        if let Some(k) = tri.iter().position(|&x| x == v) {
            let a = tri[(k + 1) % 3];
            let b = tri[(k + 2) % 3];
            if next.insert(a, b).is_some() {
                return false;
            }
            *indeg.entry(b).or_default() += 1;
            indeg.entry(a).or_default();
        }
    }
    if indeg.values().any(|&d| d > 1) {
        return false;
    }
    let starts: Vec<usize> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&x, _)| x).collect();
    let is_corner = t.corners.contains(&v);
    let start = match (is_corner, starts.as_slice()) {
        (true, [s]) => *s,
        (false, []) => match next.keys().next() {
            Some(&s) => s,
            None => return false,
        },
        _ => return false,
    };
    let mut cur = start;
    let mut visited = 1;
    while let Some(&n) = next.get(&cur) {
        if n == start {
            break;
        }
        cur = n;
        visited += 1;
        if visited > indeg.len() {
            return false;
        }
    }
    visited == indeg.len()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// The diagonal triangulation `T_n`: vertices `p = p_0, p_1, ..., p_{n+1} = r`,
/// `q`, `s`, with `A_i = (s, p_{i-1}, p_i)` and `B_i = (q, p_i, p_{i-1})`.
///
/// Triangles are ordered `B_1, A_1, ..., A_{n+1}, B_2, ..., B_{n+1}`; see
/// [`diagonal_labels`].
pub fn diagonal_family(n: usize) -> CombinatorialTriangulation {
    let mut vertices: Vec<String> = ["p", "q", "r", "s"].iter().map(|s| s.to_string()).collect();
    for i in 1..=n {
        vertices.push(format!("p{i}"));
    }
    // chain index i -> vertex index
    let chain = |i: usize| -> usize {
        if i == 0 {
            0
        } else if i == n + 1 {
            2
        } else {
            3 + i
        }
    };
    let (q, s) = (1, 3);
    let a = |i: usize| [s, chain(i - 1), chain(i)];
    let b = |i: usize| [q, chain(i), chain(i - 1)];
    let mut triangles = alloc::vec![b(1)];
    triangles.extend((1..=n + 1).map(a));
    triangles.extend((2..=n + 1).map(b));
    CombinatorialTriangulation {
        vertices,
        corners: [0, 1, 2, 3],
        triangles,
    }
}

/// Structural names (`"A3"`, `"B1"`, ...) of the triangle slots of
/// [`diagonal_family`]`(n)`.
pub fn diagonal_labels(n: usize) -> Vec<String> {
    let mut out = alloc::vec![String::from("B1")];
    out.extend((1..=n + 1).map(|i| format!("A{i}")));
    out.extend((2..=n + 1).map(|i| format!("B{i}")));
    out
}

/// Four triangles around one interior vertex `c`.
pub fn center_fan() -> CombinatorialTriangulation {
    CombinatorialTriangulation::new(
        &["p", "q", "r", "s", "c"],
        ["p", "q", "r", "s"],
        &[["p", "q", "c"], ["q", "r", "c"], ["r", "s", "c"], ["s", "p", "c"]],
    )
    .expect("static triangulation")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("corners must form a strictly convex counterclockwise quadrilateral p, q, r, s")]
    NotConvex,
    #[error("corners do not form a trapezoid: q - p and r - s are not parallel")]
    NotTrapezoid,
    #[error("triangle {0} has zero area")]
    DegenerateTriangle(usize),
    #[error("triangle {0} is not inside the quadrilateral")]
    OutsideQuadrilateral(usize),
    #[error("triangles {first} and {second} overlap")]
    Overlap { first: usize, second: usize },
    #[error("triangles cover doubled area {covered}, quadrilateral has {expected} (gap)")]
    AreaMismatch {
        covered: Box<Rational>,
        expected: Box<Rational>,
    },
    #[error("segment {a:?}-{b:?} is not covered once from each side")]
    EdgeMismatch { a: Box<Point>, b: Box<Point> },
    #[error("poofed complex failed validation: {0}")]
    Poof(String),
}

/// Rational triangles tiling the trapezoid with corners `p, q, r, s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricDissection {
    pub corners: [Point; 4],
    pub triangles: Vec<[Point; 3]>,
}

impl GeometricDissection {
    pub fn new(corners: [Point; 4], triangles: Vec<[Point; 3]>) -> Self {
        GeometricDissection { corners, triangles }
    }

    /// Doubled area of the quadrilateral.
    pub fn doubled_area(&self) -> Rational {
        let [p, q, r, s] = &self.corners;
        doubled_area(p, q, r) + doubled_area(p, r, s)
    }

    pub fn is_parallelogram(&self) -> bool {
        let [p, q, r, s] = &self.corners;
        q.sub(p) == r.sub(s)
    }

    /// Triangles reoriented counterclockwise.
    fn oriented(&self) -> Result<Vec<[Point; 3]>, GeometryError> {
        self.triangles
            .iter()
            .enumerate()
            .map(|(i, [a, b, c])| match orientation(a, b, c) {
                Ordering::Greater => Ok([a.clone(), b.clone(), c.clone()]),
                Ordering::Less => Ok([a.clone(), c.clone(), b.clone()]),
                Ordering::Equal => Err(GeometryError::DegenerateTriangle(i)),
            })
            .collect()
    }

    /// Checks the corners and that the triangles tile the quadrilateral with
    /// pairwise disjoint interiors.
    pub fn validate(&self) -> Result<(), GeometryError> {
        self.validated().map(|_| ())
    }

    fn validated(&self) -> Result<Vec<[Point; 3]>, GeometryError> {
        let c = &self.corners;
        for k in 0..4 {
            if orientation(&c[k], &c[(k + 1) % 4], &c[(k + 2) % 4]) != Ordering::Greater {
                return Err(GeometryError::NotConvex);
            }
        }
        if !cross(&c[1].sub(&c[0]), &c[2].sub(&c[3])).is_zero() {
            return Err(GeometryError::NotTrapezoid);
        }
        let tris = self.oriented()?;
        for (i, t) in tris.iter().enumerate() {
            let inside = t
                .iter()
                .all(|v| (0..4).all(|k| orientation(&c[k], &c[(k + 1) % 4], v) != Ordering::Less));
            if !inside {
                return Err(GeometryError::OutsideQuadrilateral(i));
            }
        }
        for i in 0..tris.len() {
            for j in i + 1..tris.len() {
                if !separated(&tris[i], &tris[j]) {
                    return Err(GeometryError::Overlap { first: i, second: j });
                }
            }
        }
        let covered = tris
            .iter()
            .fold(Rational::zero(), |acc, [a, b, c]| acc + doubled_area(a, b, c));
        let expected = self.doubled_area();
        if covered != expected {
            return Err(GeometryError::AreaMismatch {
                covered: Box::new(covered),
                expected: Box::new(expected),
            });
        }
        Ok(tris)
    }
}

/// Two counterclockwise triangles have disjoint interiors iff one of their
/// edge lines weakly separates them.
fn separated(a: &[Point; 3], b: &[Point; 3]) -> bool {
    let splits = |s: &[Point; 3], o: &[Point; 3]| {
        (0..3).any(|k| {
            o.iter()
                .all(|v| orientation(&s[k], &s[(k + 1) % 3], v) != Ordering::Greater)
        })
    };
    splits(a, b) || splits(b, a)
}

/// Output of [`poof`]: the original triangles come first, in input order,
/// followed by the inserted zero-area triangles.
#[derive(Debug, Clone)]
pub struct Poofed {
    pub triangulation: CombinatorialTriangulation,
    pub drawing: Drawing,
    pub original: usize,
}

impl Poofed {
    pub fn inserted(&self) -> usize {
        self.triangulation.triangle_count() - self.original
    }
}

struct DirEdge {
    from: usize,
    to: usize,
    /// Vertices strictly inside the segment, ordered from `from` to `to`.
    inner: Vec<usize>,
}

/// Converts a dissection into a combinatorial triangulation plus a drawing.
///
/// Every maximal run of collinear edges whose two sides are subdivided
/// differently is closed up by a fan of geometrically degenerate triangles;
/// the quadrilateral's sides are treated the same way against the outer face.
pub fn poof(d: &GeometricDissection) -> Result<Poofed, GeometryError> {
    let tris = d.validated()?;

    let mut points: Vec<Point> = d.corners.to_vec();
    let mut index: BTreeMap<Point, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut tri_idx: Vec<[usize; 3]> = Vec::with_capacity(tris.len());
    for t in &tris {
        let mut ids = [0usize; 3];
        for (k, v) in t.iter().enumerate() {
            ids[k] = *index.entry(v.clone()).or_insert_with(|| {
                points.push(v.clone());
                points.len() - 1
            });
        }
        tri_idx.push(ids);
    }

    let mut edges: Vec<DirEdge> = Vec::new();
    let mut push_edge = |from: usize, to: usize| {
        let (a, b) = (&points[from], &points[to]);
        let dir = b.sub(a);
        let mut inner: Vec<usize> = (0..points.len())
            .filter(|&v| on_open_segment(&points[v], a, b))
            .collect();
        inner.sort_by_key(|&v| points[v].sub(a).dot(&dir));
        edges.push(DirEdge { from, to, inner });
    };
    for t in &tri_idx {
        for k in 0..3 {
            push_edge(t[k], t[(k + 1) % 3]);
        }
    }
    // the outer face, traversed against the boundary orientation
    for k in 0..4 {
        push_edge((k + 1) % 4, k);
    }

    // every atomic subsegment must be covered once from each side
    let mut atoms: BTreeMap<(usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
    for (e, edge) in edges.iter().enumerate() {
        let chain: Vec<usize> = core::iter::once(edge.from)
            .chain(edge.inner.iter().copied())
            .chain(core::iter::once(edge.to))
            .collect();
        for w in chain.windows(2) {
            let key = (w[0].min(w[1]), w[0].max(w[1]));
            atoms.entry(key).or_default().push((e, w[0] < w[1]));
        }
    }
    let mut uf = UnionFind::new(edges.len());
    for (&(a, b), cover) in &atoms {
        if cover.len() != 2 || cover[0].1 == cover[1].1 {
            return Err(GeometryError::EdgeMismatch {
                a: Box::new(points[a].clone()),
                b: Box::new(points[b].clone()),
            });
        }
        uf.union(cover[0].0, cover[1].0);
    }

    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 0..edges.len() {
        classes.entry(uf.find(e)).or_default().push(e);
    }

    let mut slivers: Vec<[usize; 3]> = Vec::new();
    for members in classes.values() {
        if members.len() == 2 && members.iter().all(|&e| edges[e].inner.is_empty()) {
            continue;
        }
        let e0 = &edges[members[0]];
        let origin = points[e0.from].clone();
        let dir = points[e0.to].sub(&origin);
        let param = |v: usize| points[v].sub(&origin).dot(&dir);
        let mut side1: Vec<usize> = Vec::new();
        let mut side2: Vec<usize> = Vec::new();
        for &e in members {
            let ed = &edges[e];
            let forward = points[ed.to].sub(&points[ed.from]).dot(&dir) > Rational::zero();
            let side = if forward { &mut side1 } else { &mut side2 };
            side.push(ed.from);
            side.push(ed.to);
        }
        for side in [&mut side1, &mut side2] {
            side.sort_by_key(|&v| param(v));
            side.dedup();
        }
        let u = side1[0];
        let w = *side1.last().expect("nonempty");
        // boundary of the sliver: back along side 1, then forward along side 2
        let mut cycle = alloc::vec![w];
        cycle.extend(side1[1..side1.len() - 1].iter().rev());
        cycle.push(u);
        cycle.extend(side2[1..side2.len() - 1].iter());
        for i in 1..cycle.len() - 1 {
            slivers.push([cycle[0], cycle[i], cycle[i + 1]]);
        }
    }

    let names: Vec<String> = (0..points.len())
        .map(|i| {
            if i < 4 {
                ["p", "q", "r", "s"][i].to_string()
            } else {
                format!("v{}", i - 3)
            }
        })
        .collect();
    let original = tri_idx.len();
    tri_idx.extend(slivers);
    let t = CombinatorialTriangulation::from_indices(names, [0, 1, 2, 3], tri_idx);
    let report = t.validate();
    if !report.is_valid() {
        let msg: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(GeometryError::Poof(msg.join("; ")));
    }
    let drawing = Drawing::new(&t, points).map_err(|e| GeometryError::Poof(e.to_string()))?;
    Ok(Poofed {
        triangulation: t,
        drawing,
        original,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::areamap::evaluate_area_vector;
    use alloc::vec;

    fn pt(x: &str, y: &str) -> Point {
        Point::new(x.parse().unwrap(), y.parse().unwrap())
    }

    fn unit_square() -> [Point; 4] {
        [pt("0", "0"), pt("1", "0"), pt("1", "1"), pt("0", "1")]
    }

    #[test]
    fn diagonal_family_shapes() {
        let t0 = diagonal_family(0);
        assert_eq!(t0.triangle_count(), 2);
        let names: Vec<[&str; 3]> = t0
            .triangles()
            .iter()
            .map(|t| [t0.vertex_name(t[0]), t0.vertex_name(t[1]), t0.vertex_name(t[2])])
            .collect();
        assert_eq!(names, vec![["q", "r", "p"], ["s", "p", "r"]]);
        assert!(t0.validate().is_valid());

        let t1 = diagonal_family(1);
        assert_eq!((t1.vertex_count(), t1.triangle_count()), (5, 4));
        assert!(t1.validate().is_valid());
        assert_eq!(diagonal_labels(1), vec!["B1", "A1", "A2", "B2"]);

        for n in 0..6 {
            let t = diagonal_family(n);
            assert!(t.validate().is_valid(), "T_{n}: {:?}", t.validate());
            assert_eq!(t.triangle_count(), 2 * t.vertex_count() - 6);
            assert_eq!(t.triangle_count(), 2 * (n + 1));
            assert_eq!(t.interior_vertices().len(), n);
        }
    }

    #[test]
    fn center_fan_and_refinement_validate() {
        let fan = center_fan();
        assert!(fan.validate().is_valid());
        let refined = diagonal_family(1).refine_barycentric(0).unwrap();
        assert_eq!(refined.triangle_count(), 6);
        assert!(refined.validate().is_valid());
        assert!(diagonal_family(1).refine_barycentric(9).is_err());
    }

    #[test]
    fn two_triangles_sharing_a_vertex_fail() {
        let t = CombinatorialTriangulation::new(
            &["p", "q", "r", "s", "x"],
            ["p", "q", "r", "s"],
            &[["p", "q", "x"], ["x", "r", "s"]],
        )
        .unwrap();
        let report = t.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Disconnected { components: 2 })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Boundary { .. })));
    }

    #[test]
    fn misoriented_and_duplicate_triangles_fail() {
        let t = CombinatorialTriangulation::new(
            &["p", "q", "r", "s"],
            ["p", "q", "r", "s"],
            &[["q", "r", "p"], ["p", "r", "s"]],
        )
        .unwrap();
        assert!(t.validate().is_valid());
        let flipped = CombinatorialTriangulation::new(
            &["p", "q", "r", "s"],
            ["p", "q", "r", "s"],
            &[["q", "r", "p"], ["p", "s", "r"]],
        )
        .unwrap();
        assert!(!flipped.validate().is_valid());
        let dup = CombinatorialTriangulation::new(
            &["p", "q", "r", "s"],
            ["p", "q", "r", "s"],
            &[["q", "r", "p"], ["r", "p", "q"]],
        )
        .unwrap();
        assert!(matches!(
            dup.validate().violations[0],
            Violation::DuplicateTriangle { .. }
        ));
        assert!(CombinatorialTriangulation::new(&["p", "q", "r"], ["p", "q", "r", "s"], &[["p", "q", "r"]]).is_err());
    }

    #[test]
    fn pinched_vertex_fails() {
        // an extra triangle hanging off p leaves p with a link of two arcs
        let bad = CombinatorialTriangulation::new(
            &["p", "q", "r", "s", "c", "d"],
            ["p", "q", "r", "s"],
            &[
                ["p", "q", "c"],
                ["q", "r", "c"],
                ["r", "s", "c"],
                ["s", "p", "c"],
                ["c", "d", "p"],
            ],
        )
        .unwrap();
        assert!(!bad.validate().is_valid());
    }

    #[test]
    fn already_simplicial_dissection_is_unchanged() {
        let [p, q, r, s] = unit_square();
        let d = GeometricDissection::new(unit_square(), vec![[q.clone(), r.clone(), p.clone()], [s, p, r]]);
        let out = poof(&d).unwrap();
        assert_eq!(out.inserted(), 0);
        assert_eq!(out.triangulation.triangle_count(), 2);
    }

    #[test]
    fn t_vertex_on_diagonal() {
        let [p, q, r, s] = unit_square();
        let m = pt("1/2", "1/2");
        let d = GeometricDissection::new(
            unit_square(),
            vec![
                [p.clone(), r.clone(), s.clone()],
                [p.clone(), q.clone(), m.clone()],
                [m.clone(), q, r.clone()],
            ],
        );
        let out = poof(&d).unwrap();
        let t = &out.triangulation;
        assert!(t.validate().is_valid());
        assert_eq!(out.original, 3);
        assert_eq!(out.inserted(), 1);
        let sliver = t.triangles()[3];
        let mut pts: Vec<Point> = sliver.iter().map(|&v| out.drawing.point(v).clone()).collect();
        pts.sort();
        let mut expect = vec![p, m, r];
        expect.sort();
        assert_eq!(pts, expect);
        let av = evaluate_area_vector(t, &out.drawing).unwrap();
        assert_eq!(
            av.b[..3],
            [Rational::one(), "1/2".parse().unwrap(), "1/2".parse().unwrap()]
        );
        assert!(av.b[3].is_zero());
    }

    #[test]
    fn k_points_on_one_segment_give_k_slivers() {
        for k in 1..5i64 {
            let [p, q, r, s] = unit_square();
            let mut tris = vec![[p.clone(), r.clone(), s.clone()]];
            let chain: Vec<Point> = (0..=k + 1)
                .map(|i| {
                    let f = Rational::new(i, k + 1).unwrap();
                    Point::new(f.clone(), f)
                })
                .collect();
            for w in chain.windows(2) {
                tris.push([w[0].clone(), q.clone(), w[1].clone()]);
            }
            let out = poof(&GeometricDissection::new(unit_square(), tris)).unwrap();
            assert_eq!(out.inserted(), k as usize);
            let t = &out.triangulation;
            assert_eq!(t.triangle_count(), 2 * t.vertex_count() - 6);
        }
    }

    #[test]
    fn subdivided_boundary_sides() {
        // 2x2 grid, each cell split by a diagonal
        let h = "1/2";
        let g = |x: &str, y: &str| pt(x, y);
        let mut tris = Vec::new();
        for (x0, x1) in [("0", h), (h, "1")] {
            for (y0, y1) in [("0", h), (h, "1")] {
                tris.push([g(x0, y0), g(x1, y0), g(x1, y1)]);
                tris.push([g(x0, y0), g(x1, y1), g(x0, y1)]);
            }
        }
        let out = poof(&GeometricDissection::new(unit_square(), tris)).unwrap();
        assert_eq!(out.original, 8);
        assert_eq!(out.inserted(), 4);
        let av = evaluate_area_vector(&out.triangulation, &out.drawing).unwrap();
        assert!(av.b[8..].iter().all(Rational::is_zero));
        assert_eq!(av.sum_b(), Rational::from(2));
    }

    #[test]
    fn both_sides_subdivided_differently() {
        // segment from (0,0) to (1,1); side above has a vertex at 1/3, side below at 2/3
        let [p, q, r, s] = unit_square();
        let a = pt("1/3", "1/3");
        let b = pt("2/3", "2/3");
        let tris = vec![
            [p.clone(), a.clone(), s.clone()],
            [a.clone(), r.clone(), s.clone()],
            [p.clone(), q.clone(), b.clone()],
            [b.clone(), q.clone(), r.clone()],
        ];
        let out = poof(&GeometricDissection::new(unit_square(), tris)).unwrap();
        assert!(out.triangulation.validate().is_valid());
        assert_eq!(out.inserted(), 2);
    }

    #[test]
    fn invalid_dissections() {
        let [p, q, r, s] = unit_square();
        let overlap = GeometricDissection::new(
            unit_square(),
            vec![
                [p.clone(), q.clone(), r.clone()],
                [p.clone(), r.clone(), s.clone()],
                [p.clone(), q.clone(), s.clone()],
            ],
        );
        assert!(matches!(poof(&overlap), Err(GeometryError::Overlap { .. })));
        let gap = GeometricDissection::new(unit_square(), vec![[p.clone(), q.clone(), r.clone()]]);
        assert!(matches!(poof(&gap), Err(GeometryError::AreaMismatch { .. })));
        let skew = GeometricDissection::new(
            [p.clone(), q.clone(), pt("2", "1"), pt("0", "2")],
            vec![[p.clone(), q.clone(), s.clone()]],
        );
        assert_eq!(skew.validate(), Err(GeometryError::NotTrapezoid));
        let flat = GeometricDissection::new(unit_square(), vec![[p.clone(), q.clone(), pt("2", "0")]]);
        assert!(flat.validate().is_err());
    }
}
