//! Normal surfaces in triangulated closed orientable 3-manifolds.
//!
//! A normal surface is recorded in standard coordinates: per tetrahedron,
//! four triangle counts (one per corner) and three quadrilateral counts
//! (one per partition of the corners into pairs containing corner 0).
//! Quad type q in {1,2,3} separates {0,q} from the other two corners.
//!
//! The surface dual to an integer 1-cocycle is built by integrating the
//! cocycle to corner heights inside each tetrahedron and inserting one
//! normal disc per crossed integer level; the transverse orientation
//! points toward increasing height. `rebuild_cocycle` inverts this.

use crate::cocycle::Cocycle;
use crate::report::{Check, ValidationReport};
use crate::skeleton::{edge_index, Skeleton};
use crate::triangulation::{Triangulation, FACE_VERTICES, TET_EDGES};
use crate::union_find::UnionFind;

#[derive(Debug, thiserror::Error)]
pub enum SurfaceError {
    #[error("surface failed validation: {0}")]
    Invalid(String),
    #[error("surface carries no transverse orientation")]
    Unoriented,
    #[error("tetrahedron {0} holds {1} discs, operation supports at most one")]
    TooManyDiscs(usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Transverse orientation: for each disc type with a positive count, +1
/// when the positive side is the reference side (the cut-off corner side
/// of a triangle, the {0,q} side of a quad), -1 otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceOrientation {
    pub tri: Vec<[i8; 4]>,
    pub quad: Vec<[i8; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSurface {
    /// tri[t][v]: triangles cutting off corner v of tetrahedron t.
    pub tri: Vec<[u64; 4]>,
    /// quad[t][q-1]: quads of type q (separating {0,q}) in tetrahedron t.
    pub quad: Vec<[u64; 3]>,
    pub orientation: Option<SurfaceOrientation>,
}

/// One connected component of the induced surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile {
    pub discs: usize,
    pub euler: i64,
    pub orientable: bool,
    /// Genus for orientable components ((2 - euler) / 2), crosscap number
    /// for non-orientable ones (2 - euler).
    pub genus: i64,
}

/// Cell counts and per-component topology of a normal surface, from the
/// cell structure induced by the triangulation: points on edges, arcs on
/// faces, discs in tetrahedra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceProfile {
    pub points: usize,
    pub arcs: usize,
    pub discs: usize,
    pub euler: i64,
    pub components: Vec<ComponentProfile>,
}

/// Partner of corner v in the pair partition of quad type q.
fn quad_partner(q: usize, v: usize) -> usize {
    if v == 0 {
        q
    } else if v == q {
        0
    } else {
        6 - q - v
    }
}

/// True when quad type q separates corners a and b.
fn quad_separates(q: usize, a: usize, b: usize) -> bool {
    quad_partner(q, a) != b
}

/// The quad type whose arc on face f cuts off face corner w.
fn quad_type_cutting(w: usize, f: usize) -> usize {
    (1..=3)
        .find(|&q| quad_partner(q, w) == f)
        .expect("w and f are distinct corners")
}

/// True when corner v lies on the {0,q} side of quad type q.
fn on_zero_side(q: usize, v: usize) -> bool {
    v == 0 || v == q
}

impl NormalSurface {
    pub fn empty(tet_count: usize) -> Self {
        NormalSurface {
            tri: vec![[0; 4]; tet_count],
            quad: vec![[0; 3]; tet_count],
            orientation: None,
        }
    }

    pub fn tet_count(&self) -> usize {
        self.tri.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tri.iter().all(|t| t.iter().all(|&x| x == 0))
            && self.quad.iter().all(|t| t.iter().all(|&x| x == 0))
    }

    pub fn disc_count(&self) -> u64 {
        self.tri.iter().flatten().sum::<u64>() + self.quad.iter().flatten().sum::<u64>()
    }

    fn discs_in_tet(&self, t: usize) -> u64 {
        self.tri[t].iter().sum::<u64>() + self.quad[t].iter().sum::<u64>()
    }

    /// Arcs on face f of tetrahedron t cutting off face corner w.
    pub fn arcs_at(&self, t: usize, f: usize, w: usize) -> u64 {
        self.tri[t][w] + self.quad[t][quad_type_cutting(w, f) - 1]
    }

    /// Intersection points with the edge of tetrahedron t joining a and b.
    pub fn edge_weight(&self, t: usize, a: usize, b: usize) -> u64 {
        self.tri[t][a]
            + self.tri[t][b]
            + (1..=3)
                .filter(|&q| quad_separates(q, a, b))
                .map(|q| self.quad[t][q - 1])
                .sum::<u64>()
    }

    /// Disjoint union: counts add; orientations survive when they agree
    /// on every shared disc type.
    pub fn merge(&self, other: &NormalSurface) -> NormalSurface {
        let n = self.tet_count();
        assert_eq!(n, other.tet_count());
        let mut out = NormalSurface::empty(n);
        for t in 0..n {
            for v in 0..4 {
                out.tri[t][v] = self.tri[t][v] + other.tri[t][v];
            }
            for q in 0..3 {
                out.quad[t][q] = self.quad[t][q] + other.quad[t][q];
            }
        }
        out.orientation = match (&self.orientation, &other.orientation) {
            (Some(a), Some(b)) => {
                let mut tri = vec![[0i8; 4]; n];
                let mut quad = vec![[0i8; 3]; n];
                let mut ok = true;
                for t in 0..n {
                    for v in 0..4 {
                        let (x, y) = (a.tri[t][v], b.tri[t][v]);
                        tri[t][v] = if x == 0 { y } else { x };
                        ok &= x == 0 || y == 0 || x == y;
                    }
                    for q in 0..3 {
                        let (x, y) = (a.quad[t][q], b.quad[t][q]);
                        quad[t][q] = if x == 0 { y } else { x };
                        ok &= x == 0 || y == 0 || x == y;
                    }
                }
                ok.then_some(SurfaceOrientation { tri, quad })
            }
            _ => None,
        };
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("surface {}\n", self.tet_count());
        for t in 0..self.tet_count() {
            out.push_str(&format!(
                "tet {} tri {} {} {} {} quad {} {} {}\n",
                t,
                self.tri[t][0],
                self.tri[t][1],
                self.tri[t][2],
                self.tri[t][3],
                self.quad[t][0],
                self.quad[t][1],
                self.quad[t][2]
            ));
        }
        if let Some(o) = &self.orientation {
            for t in 0..self.tet_count() {
                out.push_str(&format!(
                    "orient {} tri {} {} {} {} quad {} {} {}\n",
                    t,
                    o.tri[t][0],
                    o.tri[t][1],
                    o.tri[t][2],
                    o.tri[t][3],
                    o.quad[t][0],
                    o.quad[t][1],
                    o.quad[t][2]
                ));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        let err = |line: usize, msg: &str| SurfaceError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut surface: Option<NormalSurface> = None;
        let mut orient: Option<SurfaceOrientation> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match fields[0] {
                "surface" => {
                    if surface.is_some() {
                        return Err(err(line, "duplicate surface header"));
                    }
                    if fields.len() != 2 {
                        return Err(err(line, "expected: surface <tet-count>"));
                    }
                    let n = fields[1].parse().map_err(|_| err(line, "bad tet count"))?;
                    surface = Some(NormalSurface::empty(n));
                    orient = Some(SurfaceOrientation {
                        tri: vec![[0; 4]; n],
                        quad: vec![[0; 3]; n],
                    });
                }
                kind @ ("tet" | "orient") => {
                    let s = surface
                        .as_mut()
                        .ok_or_else(|| err(line, "record before surface header"))?;
                    if fields.len() != 11 || fields[2] != "tri" || fields[7] != "quad" {
                        return Err(err(
                            line,
                            "expected: tet|orient <i> tri <4 values> quad <3 values>",
                        ));
                    }
                    let t: usize = fields[1].parse().map_err(|_| err(line, "bad index"))?;
                    if t >= s.tet_count() {
                        return Err(err(line, "tetrahedron index out of range"));
                    }
                    if kind == "tet" {
                        for v in 0..4 {
                            s.tri[t][v] =
                                fields[3 + v].parse().map_err(|_| err(line, "bad count"))?;
                        }
                        for q in 0..3 {
                            s.quad[t][q] =
                                fields[8 + q].parse().map_err(|_| err(line, "bad count"))?;
                        }
                    } else {
                        let o = orient.as_mut().unwrap();
                        for v in 0..4 {
                            o.tri[t][v] =
                                fields[3 + v].parse().map_err(|_| err(line, "bad sign"))?;
                        }
                        for q in 0..3 {
                            o.quad[t][q] =
                                fields[8 + q].parse().map_err(|_| err(line, "bad sign"))?;
                        }
                    }
                }
                other => return Err(err(line, &format!("unknown record '{}'", other))),
            }
        }
        let mut surface = surface.ok_or_else(|| err(0, "missing surface header"))?;
        let orient = orient.unwrap();
        let oriented = orient.tri.iter().flatten().any(|&x| x != 0)
            || orient.quad.iter().flatten().any(|&x| x != 0);
        if oriented {
            surface.orientation = Some(orient);
        }
        Ok(surface)
    }
}

/// Embeddability and consistency checks: the quad constraint (at most one
/// quad type per tetrahedron) and the face matching equations (arc counts
/// agree across every glued face, corner by corner).
pub fn validate_surface(
    triangulation: &Triangulation,
    surface: &NormalSurface,
) -> ValidationReport {
    let mut checks = Vec::new();
    let sized = surface.tri.len() == triangulation.tet_count()
        && surface.quad.len() == triangulation.tet_count();
    checks.push(Check {
        name: "sizes",
        pass: sized,
        detail: if sized {
            format!("{} tetrahedra", triangulation.tet_count())
        } else {
            format!(
                "surface spans {} tetrahedra, triangulation has {}",
                surface.tri.len(),
                triangulation.tet_count()
            )
        },
    });
    if !sized {
        return ValidationReport { checks };
    }

    let offender = (0..surface.tet_count())
        .find(|&t| surface.quad[t].iter().filter(|&&x| x > 0).count() > 1);
    checks.push(Check {
        name: "quad_constraint",
        pass: offender.is_none(),
        detail: match offender {
            None => "at most one quad type per tetrahedron".to_string(),
            Some(t) => format!("tetrahedron {} mixes quad types", t),
        },
    });

    let mut mismatch = None;
    'faces: for t in 0..triangulation.tet_count() {
        for f in 0..4 {
            let Some(g) = triangulation.gluing(t, f) else {
                continue;
            };
            for &w in &FACE_VERTICES[f] {
                let (t2, w2) = triangulation.map_vertex(t, f, w).unwrap();
                if surface.arcs_at(t, f, w) != surface.arcs_at(t2, g.face, w2) {
                    mismatch = Some((t, f, w));
                    break 'faces;
                }
            }
        }
    }
    checks.push(Check {
        name: "matching",
        pass: mismatch.is_none(),
        detail: match mismatch {
            None => "arc counts agree across every face".to_string(),
            Some((t, f, w)) => format!(
                "arc count at corner {} of face {} of tetrahedron {} disagrees with its partner",
                w, f, t
            ),
        },
    });
    ValidationReport { checks }
}

/// Surface dual to an integer cocycle: heights are the integrals of the
/// cocycle from corner 0 within each tetrahedron, and each crossed
/// integer level contributes one disc, oriented toward increasing height.
pub fn dual_surface(skeleton: &Skeleton, c: &Cocycle) -> NormalSurface {
    let n = skeleton.tet_count;
    let mut surface = NormalSurface::empty(n);
    let mut orient = SurfaceOrientation {
        tri: vec![[0; 4]; n],
        quad: vec![[0; 3]; n],
    };
    for t in 0..n {
        let mut h = [0i64; 4];
        for v in 1..4 {
            let (class, sign) = skeleton.directed_edge(t, 0, v);
            h[v] = sign * c.values[class];
        }
        // The cocycle condition on the four faces makes the heights
        // path-independent within the tetrahedron.
        for &(a, b) in &TET_EDGES {
            let (class, sign) = skeleton.directed_edge(t, a, b);
            debug_assert_eq!(h[b] - h[a], sign * c.values[class]);
        }
        let lo = *h.iter().min().unwrap();
        let hi = *h.iter().max().unwrap();
        for level in lo..hi {
            let below: Vec<usize> = (0..4).filter(|&v| h[v] <= level).collect();
            let set = |slot: &mut i8, sign: i8| {
                debug_assert!(*slot == 0 || *slot == sign);
                *slot = sign;
            };
            match below.len() {
                1 => {
                    let v = below[0];
                    surface.tri[t][v] += 1;
                    set(&mut orient.tri[t][v], -1);
                }
                3 => {
                    let v = (0..4).find(|v| !below.contains(v)).unwrap();
                    surface.tri[t][v] += 1;
                    set(&mut orient.tri[t][v], 1);
                }
                2 => {
                    if below.contains(&0) {
                        let q = below.iter().copied().find(|&v| v != 0).unwrap();
                        surface.quad[t][q - 1] += 1;
                        set(&mut orient.quad[t][q - 1], -1);
                    } else {
                        let above: Vec<usize> = (0..4).filter(|v| !below.contains(v)).collect();
                        let q = above.iter().copied().find(|&v| v != 0).unwrap();
                        surface.quad[t][q - 1] += 1;
                        set(&mut orient.quad[t][q - 1], 1);
                    }
                }
                _ => unreachable!("level strictly between min and max heights"),
            }
        }
    }
    surface.orientation = Some(orient);
    surface
}

/// Identity of one disc, used while walking the induced cell structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Disc {
    Tri { v: usize, copy: u64 },
    Quad { q: usize, copy: u64 },
}

/// Dense disc ids: per tetrahedron, the four triangle families then the
/// three quad families, copies in nesting order.
struct DiscIndex {
    tet_offset: Vec<u64>,
}

impl DiscIndex {
    fn new(s: &NormalSurface) -> Self {
        let mut tet_offset = Vec::with_capacity(s.tet_count() + 1);
        let mut acc = 0;
        for t in 0..s.tet_count() {
            tet_offset.push(acc);
            acc += s.discs_in_tet(t);
        }
        tet_offset.push(acc);
        DiscIndex { tet_offset }
    }

    fn total(&self) -> u64 {
        *self.tet_offset.last().unwrap()
    }

    fn id(&self, s: &NormalSurface, t: usize, disc: Disc) -> u64 {
        let mut off = self.tet_offset[t];
        match disc {
            Disc::Tri { v, copy } => {
                debug_assert!(copy < s.tri[t][v]);
                off + s.tri[t][..v].iter().sum::<u64>() + copy
            }
            Disc::Quad { q, copy } => {
                debug_assert!(copy < s.quad[t][q - 1]);
                off += s.tri[t].iter().sum::<u64>();
                off + s.quad[t][..q - 1].iter().sum::<u64>() + copy
            }
        }
    }

    fn tet_of(&self, id: u64) -> usize {
        self.tet_offset.partition_point(|&off| off <= id) - 1
    }

    fn disc_of(&self, s: &NormalSurface, id: u64) -> (usize, Disc) {
        let t = self.tet_of(id);
        let mut rest = id - self.tet_offset[t];
        for v in 0..4 {
            if rest < s.tri[t][v] {
                return (t, Disc::Tri { v, copy: rest });
            }
            rest -= s.tri[t][v];
        }
        for q in 1..=3 {
            if rest < s.quad[t][q - 1] {
                return (t, Disc::Quad { q, copy: rest });
            }
            rest -= s.quad[t][q - 1];
        }
        unreachable!("disc id out of range")
    }
}

/// The disc owning the i-th arc from corner w on face f of tetrahedron t.
/// Arcs are nested with the triangles closest to the corner they cut off
/// and quad copies ordered from the {0,q} side.
fn disc_at_arc(s: &NormalSurface, t: usize, f: usize, w: usize, i: u64) -> Disc {
    if i < s.tri[t][w] {
        return Disc::Tri { v: w, copy: i };
    }
    let q = quad_type_cutting(w, f);
    let j = i - s.tri[t][w];
    let count = s.quad[t][q - 1];
    debug_assert!(j < count);
    let copy = if on_zero_side(q, w) { j } else { count - 1 - j };
    Disc::Quad { q, copy }
}

/// The disc crossing the k-th point from corner a on edge (a, b) of
/// tetrahedron t, with a < b.
fn disc_at_point(s: &NormalSurface, t: usize, a: usize, b: usize, k: u64) -> Disc {
    let weight = s.edge_weight(t, a, b);
    debug_assert!(k < weight);
    if k < s.tri[t][a] {
        return Disc::Tri { v: a, copy: k };
    }
    if k >= weight - s.tri[t][b] {
        return Disc::Tri {
            v: b,
            copy: weight - 1 - k,
        };
    }
    // Under the quad constraint a single separating quad family remains.
    let q = (1..=3)
        .find(|&q| quad_separates(q, a, b) && s.quad[t][q - 1] > 0)
        .expect("point lies in the quad range");
    let j = k - s.tri[t][a];
    let count = s.quad[t][q - 1];
    let copy = if on_zero_side(q, a) { j } else { count - 1 - j };
    Disc::Quad { q, copy }
}

/// Reference positive side of a disc as seen from face corner w: true
/// when w lies on the reference side (the cut corner for triangles, the
/// {0,q} pair for quads).
fn reference_side(disc: Disc, w: usize) -> bool {
    match disc {
        Disc::Tri { v, .. } => v == w,
        Disc::Quad { q, .. } => on_zero_side(q, w),
    }
}

/// Union-find with a mod-2 twist along each edge, used to decide whether
/// the transverse orientations of the discs can be chosen consistently.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<u8>,
    consistent: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![0; n],
            consistent: vec![true; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, u8) {
        if self.parent[x] == x {
            return (x, 0);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] ^= p;
        (root, self.parity[x])
    }

    fn union(&mut self, a: usize, b: usize, twist: u8) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb != twist {
                self.consistent[ra] = false;
            }
            return;
        }
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ twist;
        self.consistent[ra] &= self.consistent[rb];
    }
}

/// Cell structure and per-component topology. Requires a valid embedded
/// surface (see `validate_surface`).
pub fn profile(
    triangulation: &Triangulation,
    skeleton: &Skeleton,
    surface: &NormalSurface,
) -> Result<SurfaceProfile, SurfaceError> {
    let report = validate_surface(triangulation, surface);
    if !report.all_pass() {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        return Err(SurfaceError::Invalid(failed.join(", ")));
    }

    let index = DiscIndex::new(surface);
    let disc_total = index.total() as usize;

    // Cell ids: discs, then arcs (per face class, rep corner, copy), then
    // points (per edge class, position along the canonical orientation).
    let mut arc_offset = vec![0usize; skeleton.face_count + 1];
    for fc in 0..skeleton.face_count {
        let (t, f) = skeleton.face_rep[fc];
        let count: u64 = FACE_VERTICES[f]
            .iter()
            .map(|&w| surface.arcs_at(t, f, w))
            .sum();
        arc_offset[fc + 1] = arc_offset[fc] + count as usize;
    }
    let arc_total = arc_offset[skeleton.face_count];
    let mut point_offset = vec![0usize; skeleton.edge_count + 1];
    for ec in 0..skeleton.edge_count {
        let (t, a, b) = skeleton.edge_rep[ec];
        point_offset[ec + 1] = point_offset[ec] + surface.edge_weight(t, a, b) as usize;
    }
    let point_total = point_offset[skeleton.edge_count];

    let cells = disc_total + arc_total + point_total;
    let mut uf = UnionFind::new(cells);
    let mut parity = ParityUnionFind::new(disc_total);

    // Glue discs across each face class through their shared arcs, and
    // record whether the transverse orientations agree (they do exactly
    // when both discs keep the cut corner on the same reference side).
    for fc in 0..skeleton.face_count {
        let (t, f) = skeleton.face_rep[fc];
        let g = triangulation
            .gluing(t, f)
            .expect("skeleton faces are glued");
        let mut arc = arc_offset[fc];
        for &w in &FACE_VERTICES[f] {
            let (t2, w2) = triangulation.map_vertex(t, f, w).unwrap();
            let count = surface.arcs_at(t, f, w);
            debug_assert_eq!(count, surface.arcs_at(t2, g.face, w2));
            for i in 0..count {
                let d1 = disc_at_arc(surface, t, f, w, i);
                let d2 = disc_at_arc(surface, t2, g.face, w2, i);
                let id1 = index.id(surface, t, d1) as usize;
                let id2 = index.id(surface, t2, d2) as usize;
                let arc_cell = disc_total + arc;
                uf.union(id1, arc_cell);
                uf.union(id2, arc_cell);
                let twist = u8::from(reference_side(d1, w) != reference_side(d2, w2));
                parity.union(id1, id2, twist);
                arc += 1;
            }
        }
    }

    // Attach each point to the disc crossing it in the representative
    // edge instance; the arcs already connect the discs around the edge.
    for ec in 0..skeleton.edge_count {
        let (t, a, b) = skeleton.edge_rep[ec];
        let weight = surface.edge_weight(t, a, b);
        for k in 0..weight {
            let d = disc_at_point(surface, t, a, b, k);
            let id = index.id(surface, t, d) as usize;
            uf.union(id, disc_total + arc_total + point_offset[ec] + k as usize);
        }
    }

    // Cross-check: every instance of an edge class sees the same weight.
    for t in 0..skeleton.tet_count {
        for &(a, b) in &TET_EDGES {
            let ec = skeleton.edge_class[t][edge_index(a, b)];
            let (rt, ra, rb) = skeleton.edge_rep[ec];
            debug_assert_eq!(
                surface.edge_weight(t, a, b),
                surface.edge_weight(rt, ra, rb)
            );
        }
    }

    // Aggregate per component, ordered by smallest member disc.
    let mut comp_of_root = std::collections::BTreeMap::new();
    let mut components = Vec::new();
    for d in 0..disc_total {
        let root = uf.find(d);
        comp_of_root.entry(root).or_insert_with(|| {
            components.push(ComponentProfile {
                discs: 0,
                euler: 0,
                orientable: true,
                genus: 0,
            });
            components.len() - 1
        });
    }
    for d in 0..disc_total {
        let c = comp_of_root[&uf.find(d)];
        components[c].discs += 1;
        components[c].euler += 1;
        let (root, _) = parity.find(d);
        components[c].orientable &= parity.consistent[root];
    }
    for a in 0..arc_total {
        let c = comp_of_root[&uf.find(disc_total + a)];
        components[c].euler -= 1;
    }
    for p in 0..point_total {
        let c = comp_of_root[&uf.find(disc_total + arc_total + p)];
        components[c].euler += 1;
    }
    for comp in &mut components {
        comp.genus = if comp.orientable {
            (2 - comp.euler) / 2
        } else {
            2 - comp.euler
        };
    }

    Ok(SurfaceProfile {
        points: point_total,
        arcs: arc_total,
        discs: disc_total,
        euler: components.iter().map(|c| c.euler).sum(),
        components,
    })
}

/// Recover the cocycle a transversely oriented surface is dual to: each
/// edge class counts its intersection points with signs, +1 when the
/// positive side of the crossing disc faces the head of the edge.
pub fn rebuild_cocycle(
    skeleton: &Skeleton,
    surface: &NormalSurface,
) -> Result<Cocycle, SurfaceError> {
    let orient = surface.orientation.as_ref().ok_or(SurfaceError::Unoriented)?;
    let mut values = vec![0i64; skeleton.edge_count];
    for ec in 0..skeleton.edge_count {
        // The representative instance runs low-to-high corner, which is
        // the canonical orientation of the class: the head is corner b.
        let (t, a, b) = skeleton.edge_rep[ec];
        let weight = surface.edge_weight(t, a, b);
        for k in 0..weight {
            let (sigma, head_on_reference_side) = match disc_at_point(surface, t, a, b, k) {
                Disc::Tri { v, .. } => (orient.tri[t][v], v == b),
                Disc::Quad { q, .. } => (orient.quad[t][q - 1], on_zero_side(q, b)),
            };
            debug_assert_ne!(sigma, 0);
            values[ec] += if head_on_reference_side {
                sigma as i64
            } else {
                -(sigma as i64)
            };
        }
    }
    Ok(Cocycle { values })
}

/// Drop every sphere component, returning the remaining surface and the
/// number of discs removed. A zero result means the input consisted
/// entirely of spheres (any nontriviality it certified is lost).
pub fn remove_spheres(
    triangulation: &Triangulation,
    skeleton: &Skeleton,
    surface: &NormalSurface,
) -> Result<(NormalSurface, u64), SurfaceError> {
    let index = DiscIndex::new(surface);
    let disc_total = index.total();
    if disc_total == 0 {
        return Ok((surface.clone(), 0));
    }
    // Recompute connectivity disc-by-disc via the profile machinery.
    let prof = profile(triangulation, skeleton, surface)?;
    // Re-derive the disc -> component map the same way profile does.
    let mut uf = UnionFind::new(disc_total as usize);
    for fc in 0..skeleton.face_count {
        let (t, f) = skeleton.face_rep[fc];
        let g = triangulation.gluing(t, f).unwrap();
        for &w in &FACE_VERTICES[f] {
            let (t2, w2) = triangulation.map_vertex(t, f, w).unwrap();
            for i in 0..surface.arcs_at(t, f, w) {
                let d1 = index.id(surface, t, disc_at_arc(surface, t, f, w, i));
                let d2 = index.id(surface, t2, disc_at_arc(surface, t2, g.face, w2, i));
                uf.union(d1 as usize, d2 as usize);
            }
        }
    }
    let mut comp_of_root = std::collections::BTreeMap::new();
    for d in 0..disc_total as usize {
        let root = uf.find(d);
        let next = comp_of_root.len();
        comp_of_root.entry(root).or_insert(next);
    }
    debug_assert_eq!(comp_of_root.len(), prof.components.len());

    let mut out = NormalSurface::empty(surface.tet_count());
    out.orientation = surface.orientation.clone();
    let mut removed = 0;
    for d in 0..disc_total {
        let comp = comp_of_root[&uf.find(d as usize)];
        if prof.components[comp].euler == 2 {
            removed += 1;
            continue;
        }
        let (t, disc) = index.disc_of(surface, d);
        match disc {
            Disc::Tri { v, .. } => out.tri[t][v] += 1,
            Disc::Quad { q, .. } => out.quad[t][q - 1] += 1,
        }
    }
    let tet_count = out.tet_count();
    if let Some(o) = &mut out.orientation {
        for t in 0..tet_count {
            for v in 0..4 {
                if out.tri[t][v] == 0 {
                    o.tri[t][v] = 0;
                }
            }
            for q in 0..3 {
                if out.quad[t][q] == 0 {
                    o.quad[t][q] = 0;
                }
            }
        }
    }
    Ok((out, removed))
}

/// Whether the surface separates the manifold, decided on the region
/// graph: each cut tetrahedron splits into its two sides, and regions
/// merge across faces corner by corner. Supports at most one disc per
/// tetrahedron; an empty surface does not separate.
pub fn separates(
    triangulation: &Triangulation,
    surface: &NormalSurface,
) -> Result<bool, SurfaceError> {
    let n = triangulation.tet_count();
    let mut cut_disc = vec![None; n];
    for t in 0..n {
        let discs = surface.discs_in_tet(t);
        if discs > 1 {
            return Err(SurfaceError::TooManyDiscs(t, discs as usize));
        }
        if discs == 1 {
            cut_disc[t] = Some(
                (0..4)
                    .find(|&v| surface.tri[t][v] > 0)
                    .map(|v| Disc::Tri { v, copy: 0 })
                    .unwrap_or_else(|| {
                        let q = (1..=3).find(|&q| surface.quad[t][q - 1] > 0).unwrap();
                        Disc::Quad { q, copy: 0 }
                    }),
            );
        }
    }
    if cut_disc.iter().all(Option::is_none) {
        return Ok(false);
    }
    // Region node of corner w in tetrahedron t: 2t for the reference-
    // negative side (or the whole tet when uncut), 2t + 1 otherwise.
    let node = |t: usize, w: usize| -> usize {
        match cut_disc[t] {
            None => 2 * t,
            Some(d) => 2 * t + usize::from(reference_side(d, w)),
        }
    };
    let mut uf = UnionFind::new(2 * n);
    for t in 0..n {
        for f in 0..4 {
            let Some(_) = triangulation.gluing(t, f) else {
                continue;
            };
            for &w in &FACE_VERTICES[f] {
                let (t2, w2) = triangulation.map_vertex(t, f, w).unwrap();
                uf.union(node(t, w), node(t2, w2));
            }
        }
    }
    let mut roots = std::collections::BTreeSet::new();
    for t in 0..n {
        roots.insert(uf.find(2 * t));
        if cut_disc[t].is_some() {
            roots.insert(uf.find(2 * t + 1));
        }
    }
    Ok(roots.len() >= 2)
}

/// Size bounds tying a cut-supported dual surface to its cut: the surface
/// meets the 1-skeleton at most once per boundary edge, its arcs are
/// bounded by point count times half the maximal edge valence, and its
/// Euler characteristic is dominated by the arc count.
pub fn verify_counting_bounds(
    prof: &SurfaceProfile,
    boundary_size: usize,
    max_edge_valence: usize,
) -> ValidationReport {
    let mut checks = Vec::new();
    let empty = prof.discs == 0;
    let vertex_ok = prof.points <= boundary_size;
    checks.push(Check {
        name: "vertex_bound",
        pass: vertex_ok,
        detail: format!("{} points vs {} boundary edges", prof.points, boundary_size),
    });
    let edge_ok = 2 * prof.arcs <= prof.points * max_edge_valence;
    checks.push(Check {
        name: "edge_bound",
        pass: empty || edge_ok,
        detail: format!(
            "{} arcs vs {} points with max valence {}",
            prof.arcs, prof.points, max_edge_valence
        ),
    });
    let euler_ok = empty || (prof.euler.unsigned_abs() as usize) < prof.arcs;
    checks.push(Check {
        name: "euler_bound",
        pass: euler_ok,
        detail: format!("euler {} vs {} arcs", prof.euler, prof.arcs),
    });
    ValidationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::one_skeleton;
    use crate::census;
    use crate::cocycle::{
        coboundary_of, cut_boundary_edges, search_certificate, SEARCH_SUPPORT_LIMIT,
    };
    use crate::cover::build_cover;
    use crate::graph::{cheeger_exact, EXACT_VERTEX_LIMIT};
    use crate::perm::Perm3;
    use crate::presentation::{cyclic_quotients, presentation_from};
    use crate::skeleton::build_skeleton;

    /// Two tetrahedra glued along all four faces by the identity: a
    /// 3-sphere with four vertex classes.
    fn doubled_tet() -> Triangulation {
        let mut t = Triangulation::empty(2);
        for f in 0..4 {
            t.glue(0, f, 1, f, Perm3::IDENTITY).unwrap();
        }
        t
    }

    #[test]
    fn vertex_link_is_a_separating_sphere() {
        let t = doubled_tet();
        let s = build_skeleton(&t).unwrap();
        for vclass in 0..s.vertex_count {
            let mut f = vec![0i64; s.vertex_count];
            f[vclass] = 1;
            let c = coboundary_of(&s, &f);
            let surf = dual_surface(&s, &c);
            assert!(validate_surface(&t, &surf).all_pass());
            let prof = profile(&t, &s, &surf).unwrap();
            assert_eq!(prof.components.len(), 1);
            assert_eq!(prof.components[0].euler, 2);
            assert!(prof.components[0].orientable);
            assert_eq!(prof.components[0].genus, 0);
            assert!(separates(&t, &surf).unwrap());
            assert_eq!(rebuild_cocycle(&s, &surf).unwrap(), c);
        }
    }

    #[test]
    fn dual_rebuild_round_trip_on_coboundaries() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let t3 = census::t3();
        let sk = build_skeleton(&t3).unwrap();
        let p = presentation_from(&sk).unwrap();
        let q = cyclic_quotients(&p, 3).remove(0);
        let cover = build_cover(&t3, &q).unwrap();
        for (t, s) in [(doubled_tet(), None), (cover.lifted.clone(), Some(()))] {
            let _ = s;
            let sk = build_skeleton(&t).unwrap();
            for _ in 0..50 {
                let f: Vec<i64> = (0..sk.vertex_count).map(|_| rng.gen_range(-3..=3)).collect();
                let c = coboundary_of(&sk, &f);
                let surf = dual_surface(&sk, &c);
                assert!(validate_surface(&t, &surf).all_pass());
                assert_eq!(rebuild_cocycle(&sk, &surf).unwrap(), c);
            }
        }
    }

    #[test]
    fn certificate_dual_is_a_union_of_tori() {
        let t = census::t3();
        let sk = build_skeleton(&t).unwrap();
        let p = presentation_from(&sk).unwrap();
        let mut tested = 0;
        for q in cyclic_quotients(&p, 2) {
            let cover = build_cover(&t, &q).unwrap();
            let graph = one_skeleton(&cover);
            let cut = cheeger_exact(&graph, EXACT_VERTEX_LIMIT).unwrap();
            let support = cut_boundary_edges(&cover, &cut.side);
            let Some(c) =
                search_certificate(&cover.skeleton, &support, SEARCH_SUPPORT_LIMIT).unwrap()
            else {
                continue;
            };
            tested += 1;
            let surf = dual_surface(&cover.skeleton, &c);
            assert!(validate_surface(&cover.lifted, &surf).all_pass());
            let prof = profile(&cover.lifted, &cover.skeleton, &surf).unwrap();
            assert!(!prof.components.is_empty());
            for comp in &prof.components {
                assert_eq!(comp.euler, 0, "dual of a torus certificate");
                assert!(comp.orientable);
                assert_eq!(comp.genus, 1);
            }
            assert_eq!(rebuild_cocycle(&cover.skeleton, &surf).unwrap(), c);
            // Each double cover yields the two fiber tori; side by side
            // they do cut the cover in two, even though their common
            // orientation keeps the cocycle from bounding.
            assert_eq!(prof.components.len(), 2);
            assert_eq!(prof.discs, 12);
            assert!(separates(&cover.lifted, &surf).unwrap());
            // Cut-size accounting for a surface dual to a +-1 cocycle.
            let report = verify_counting_bounds(
                &prof,
                support.len(),
                cover.skeleton.max_edge_valence(),
            );
            assert!(report.all_pass(), "{:?}", report);
        }
        assert!(tested >= 6);
    }

    #[test]
    fn sphere_removal_empties_a_vertex_link() {
        let t = doubled_tet();
        let s = build_skeleton(&t).unwrap();
        let mut f = vec![0i64; s.vertex_count];
        f[0] = 1;
        let surf = dual_surface(&s, &coboundary_of(&s, &f));
        let (rest, removed) = remove_spheres(&t, &s, &surf).unwrap();
        assert!(rest.is_empty());
        assert_eq!(removed, surf.disc_count());
    }

    #[test]
    fn sphere_removal_keeps_tori() {
        let t = census::t3();
        let sk = build_skeleton(&t).unwrap();
        let p = presentation_from(&sk).unwrap();
        let q = cyclic_quotients(&p, 2).remove(0);
        let cover = build_cover(&t, &q).unwrap();
        let graph = one_skeleton(&cover);
        let cut = cheeger_exact(&graph, EXACT_VERTEX_LIMIT).unwrap();
        let support = cut_boundary_edges(&cover, &cut.side);
        let c = search_certificate(&cover.skeleton, &support, SEARCH_SUPPORT_LIMIT)
            .unwrap()
            .unwrap();
        let surf = dual_surface(&cover.skeleton, &c);
        let (rest, removed) = remove_spheres(&cover.lifted, &cover.skeleton, &surf).unwrap();
        assert_eq!(removed, 0);
        assert_eq!(rest.tri, surf.tri);
        assert_eq!(rest.quad, surf.quad);

        // A sum with a vertex-linking sphere: whatever components the
        // normal sum produces, stripping spheres removes exactly the
        // discs of the sphere components and nothing else.
        let mut f = vec![0i64; cover.skeleton.vertex_count];
        f[0] = 1;
        let sphere = dual_surface(&cover.skeleton, &coboundary_of(&cover.skeleton, &f));
        let both = surf.merge(&sphere);
        if validate_surface(&cover.lifted, &both).all_pass() {
            let prof = profile(&cover.lifted, &cover.skeleton, &both).unwrap();
            let sphere_discs: usize = prof
                .components
                .iter()
                .filter(|comp| comp.euler == 2)
                .map(|comp| comp.discs)
                .sum();
            let (rest, removed) = remove_spheres(&cover.lifted, &cover.skeleton, &both).unwrap();
            assert_eq!(removed as usize, sphere_discs);
            assert_eq!(rest.disc_count(), both.disc_count() - removed);
            if validate_surface(&cover.lifted, &rest).all_pass() {
                let prof = profile(&cover.lifted, &cover.skeleton, &rest).unwrap();
                assert!(prof.components.iter().all(|comp| comp.euler != 2));
            }
        }
    }

    #[test]
    fn base_certificate_dual_is_a_nonseparating_torus() {
        let t = census::t3();
        let sk = build_skeleton(&t).unwrap();
        let support: Vec<usize> = (0..sk.edge_count).collect();
        let c = search_certificate(&sk, &support, SEARCH_SUPPORT_LIMIT)
            .unwrap()
            .unwrap();
        let surf = dual_surface(&sk, &c);
        assert!(validate_surface(&t, &surf).all_pass());
        let prof = profile(&t, &sk, &surf).unwrap();
        assert_eq!(prof.components.len(), 1);
        assert_eq!(prof.components[0].euler, 0);
        assert!(prof.components[0].orientable);
        assert_eq!(prof.components[0].genus, 1);
        assert!(!separates(&t, &surf).unwrap());
        assert_eq!(rebuild_cocycle(&sk, &surf).unwrap(), c);
    }

    #[test]
    fn merged_vertex_links_have_two_components() {
        let t = doubled_tet();
        let s = build_skeleton(&t).unwrap();
        let mk = |v: usize| {
            let mut f = vec![0i64; s.vertex_count];
            f[v] = 1;
            dual_surface(&s, &coboundary_of(&s, &f))
        };
        let both = mk(0).merge(&mk(2));
        assert!(validate_surface(&t, &both).all_pass());
        let prof = profile(&t, &s, &both).unwrap();
        assert_eq!(prof.components.len(), 2);
        assert!(prof.components.iter().all(|c| c.euler == 2));
        assert_eq!(prof.euler, 4);
    }

    #[test]
    fn matching_violations_are_reported() {
        let t = doubled_tet();
        let mut surf = NormalSurface::empty(2);
        surf.tri[0][0] = 1;
        let report = validate_surface(&t, &surf);
        assert!(!report.check("matching").unwrap().pass);

        let mut surf = NormalSurface::empty(2);
        surf.quad[0][0] = 1;
        surf.quad[0][1] = 1;
        let report = validate_surface(&t, &surf);
        assert!(!report.check("quad_constraint").unwrap().pass);
    }

    #[test]
    fn surface_text_round_trip() {
        let t = doubled_tet();
        let s = build_skeleton(&t).unwrap();
        let mut f = vec![0i64; s.vertex_count];
        f[1] = 1;
        let surf = dual_surface(&s, &coboundary_of(&s, &f));
        let text = surf.to_text();
        assert_eq!(NormalSurface::parse(&text).unwrap(), surf);

        let mut plain = surf.clone();
        plain.orientation = None;
        let text = plain.to_text();
        assert_eq!(NormalSurface::parse(&text).unwrap(), plain);

        assert!(NormalSurface::parse("tet 0 tri 0 0 0 0 quad 0 0 0\n").is_err());
        assert!(NormalSurface::parse("surface 1\ntet 3 tri 0 0 0 0 quad 0 0 0\n").is_err());
    }

    #[test]
    fn empty_surface_profile_is_trivial() {
        let t = doubled_tet();
        let s = build_skeleton(&t).unwrap();
        let surf = NormalSurface::empty(2);
        let prof = profile(&t, &s, &surf).unwrap();
        assert_eq!(prof.points + prof.arcs + prof.discs, 0);
        assert!(prof.components.is_empty());
        assert!(!separates(&t, &surf).unwrap());
    }
}
