//! Undirected multigraphs with exact and spectral Cheeger-constant
//! computations.
//!
//! The Cheeger constant is min |boundary(A)| / |A| over vertex sets A with
//! 1 <= |A| <= n/2, counting boundary edges with multiplicity and ignoring
//! loops. The exact search enumerates all subsets in Gray-code order with
//! incremental boundary updates, so it is limited to small graphs; the
//! spectral sweep scales further but only yields an upper bound.

use num_rational::Ratio;

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edge endpoint {0} out of range for {1} vertices")]
    OutOfRange(usize, usize),
    #[error("edge multiplicity must be positive")]
    ZeroMultiplicity,
}

#[derive(Debug, thiserror::Error)]
pub enum CheegerError {
    #[error("graph has {n} vertices, exact search limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("Cheeger constant needs at least 2 vertices")]
    TooSmall,
    #[error("spectral methods require a connected graph")]
    Disconnected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub mult: u64,
}

#[derive(Clone, Debug)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// A vertex cut together with its boundary count and quotient. `optimal`
/// is true only when produced by the exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub side: Vec<usize>,
    pub boundary_size: u64,
    pub ratio: Ratio<u64>,
    pub optimal: bool,
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn add_edge(&mut self, u: usize, v: usize, mult: u64) -> Result<(), GraphError> {
        if u >= self.vertex_count {
            return Err(GraphError::OutOfRange(u, self.vertex_count));
        }
        if v >= self.vertex_count {
            return Err(GraphError::OutOfRange(v, self.vertex_count));
        }
        if mult == 0 {
            return Err(GraphError::ZeroMultiplicity);
        }
        self.edges.push(Edge { u, v, mult });
        Ok(())
    }

    /// Neighbor lists with aggregated multiplicities, loops dropped.
    fn adjacency(&self) -> Vec<Vec<(usize, u64)>> {
        let mut adj = vec![std::collections::BTreeMap::new(); self.vertex_count];
        for e in &self.edges {
            if e.u == e.v {
                continue;
            }
            *adj[e.u].entry(e.v).or_insert(0u64) += e.mult;
            *adj[e.v].entry(e.u).or_insert(0u64) += e.mult;
        }
        adj.into_iter().map(|m| m.into_iter().collect()).collect()
    }

    /// Degree ignoring loops.
    pub fn degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.u != e.v)
            .map(|e| {
                (if e.u == v { e.mult } else { 0 }) + (if e.v == v { e.mult } else { 0 })
            })
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(u, _) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Multiset of edges with sorted endpoints and merged multiplicities,
    /// for comparing graphs built by different routes.
    pub fn canonical_edges(&self) -> Vec<Edge> {
        let mut merged = std::collections::BTreeMap::new();
        for e in &self.edges {
            let key = (e.u.min(e.v), e.u.max(e.v));
            *merged.entry(key).or_insert(0u64) += e.mult;
        }
        merged
            .into_iter()
            .map(|((u, v), mult)| Edge { u, v, mult })
            .collect()
    }

    /// Edges with exactly one endpoint in `side`, counted with multiplicity.
    pub fn boundary_size(&self, side: &[usize]) -> u64 {
        let mut inside = vec![false; self.vertex_count];
        for &v in side {
            inside[v] = true;
        }
        self.edges
            .iter()
            .filter(|e| e.u != e.v && inside[e.u] != inside[e.v])
            .map(|e| e.mult)
            .sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("graph {} {}\n", self.vertex_count, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.mult));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let err = |line: usize, msg: &str| GraphError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut graph = None;
        let mut declared_edges = 0usize;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match fields[0] {
                "graph" => {
                    if graph.is_some() {
                        return Err(err(line, "duplicate graph header"));
                    }
                    if fields.len() != 3 {
                        return Err(err(line, "expected: graph <vertices> <edges>"));
                    }
                    let n = fields[1].parse().map_err(|_| err(line, "bad vertex count"))?;
                    declared_edges =
                        fields[2].parse().map_err(|_| err(line, "bad edge count"))?;
                    graph = Some(MultiGraph::new(n));
                }
                "e" => {
                    let g = graph
                        .as_mut()
                        .ok_or_else(|| err(line, "edge before graph header"))?;
                    if fields.len() != 4 {
                        return Err(err(line, "expected: e <u> <v> <mult>"));
                    }
                    let u = fields[1].parse().map_err(|_| err(line, "bad endpoint"))?;
                    let v = fields[2].parse().map_err(|_| err(line, "bad endpoint"))?;
                    let mult = fields[3].parse().map_err(|_| err(line, "bad multiplicity"))?;
                    g.add_edge(u, v, mult).map_err(|e| err(line, &e.to_string()))?;
                }
                other => return Err(err(line, &format!("unknown record '{}'", other))),
            }
        }
        let graph = graph.ok_or_else(|| err(0, "missing graph header"))?;
        if graph.edges.len() != declared_edges {
            return Err(err(
                0,
                &format!(
                    "header declares {} edges, found {}",
                    declared_edges,
                    graph.edges.len()
                ),
            ));
        }
        Ok(graph)
    }
}

pub const EXACT_VERTEX_LIMIT: usize = 24;

/// Exhaustive Cheeger constant. Ties are broken toward the
/// lexicographically smallest sorted vertex set.
pub fn cheeger_exact(graph: &MultiGraph, limit: usize) -> Result<CutCertificate, CheegerError> {
    let n = graph.vertex_count();
    if n < 2 {
        return Err(CheegerError::TooSmall);
    }
    if n > limit {
        return Err(CheegerError::TooLarge { n, limit });
    }
    let adj = graph.adjacency();
    let half = n / 2;

    let mut inside = vec![false; n];
    let mut size = 0usize;
    let mut boundary = 0i64;
    let mut best: Option<CutCertificate> = None;

    let collect = |inside: &[bool]| -> Vec<usize> {
        (0..n).filter(|&v| inside[v]).collect()
    };

    // Gray-code walk over all subsets, flipping one vertex per step.
    for step in 1u64..(1u64 << n) {
        let v = step.trailing_zeros() as usize;
        let entering = !inside[v];
        inside[v] = entering;
        let mut delta = 0i64;
        for &(u, mult) in &adj[v] {
            if inside[u] {
                delta -= mult as i64;
            } else {
                delta += mult as i64;
            }
        }
        if entering {
            size += 1;
            boundary += delta;
        } else {
            size -= 1;
            // Edges to vertices still inside become boundary, edges to
            // outside vertices stop being boundary: the same sum negated.
            boundary -= delta;
        }
        debug_assert!(boundary >= 0);

        if size == 0 || size > half {
            continue;
        }
        let ratio = Ratio::new(boundary as u64, size as u64);
        let better = match &best {
            None => true,
            Some(b) => {
                ratio < b.ratio || (ratio == b.ratio && collect(&inside) < b.side)
            }
        };
        if better {
            best = Some(CutCertificate {
                side: collect(&inside),
                boundary_size: boundary as u64,
                ratio,
                optimal: true,
            });
        }
    }
    Ok(best.expect("n >= 2 guarantees at least one candidate cut"))
}

fn laplacian(graph: &MultiGraph) -> nalgebra::DMatrix<f64> {
    let n = graph.vertex_count();
    let mut lap = nalgebra::DMatrix::zeros(n, n);
    for e in graph.edges() {
        if e.u == e.v {
            continue;
        }
        let m = e.mult as f64;
        lap[(e.u, e.u)] += m;
        lap[(e.v, e.v)] += m;
        lap[(e.u, e.v)] -= m;
        lap[(e.v, e.u)] -= m;
    }
    lap
}

fn sorted_eigen(graph: &MultiGraph) -> (Vec<f64>, nalgebra::DMatrix<f64>, Vec<usize>) {
    let eigen = nalgebra::SymmetricEigen::new(laplacian(graph));
    let mut order: Vec<usize> = (0..graph.vertex_count()).collect();
    order.sort_by(|&a, &b| eigen.eigenvalues[a].total_cmp(&eigen.eigenvalues[b]));
    let values = order.iter().map(|&i| eigen.eigenvalues[i]).collect();
    (values, eigen.eigenvectors, order)
}

/// Algebraic connectivity (second-smallest Laplacian eigenvalue).
pub fn lambda2(graph: &MultiGraph) -> Result<f64, CheegerError> {
    if graph.vertex_count() < 2 {
        return Err(CheegerError::TooSmall);
    }
    if !graph.is_connected() {
        return Err(CheegerError::Disconnected);
    }
    let (values, _, _) = sorted_eigen(graph);
    Ok(values[1])
}

/// Sweep cut along the Fiedler vector. Upper bound only: `optimal` is
/// always false, and the exact constant can be strictly smaller.
pub fn cheeger_sweep(graph: &MultiGraph) -> Result<CutCertificate, CheegerError> {
    let n = graph.vertex_count();
    if n < 2 {
        return Err(CheegerError::TooSmall);
    }
    if !graph.is_connected() {
        return Err(CheegerError::Disconnected);
    }
    let (_, vectors, order) = sorted_eigen(graph);
    let fiedler = vectors.column(order[1]);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by(|&a, &b| fiedler[a].total_cmp(&fiedler[b]).then(a.cmp(&b)));

    let adj = graph.adjacency();
    let mut inside = vec![false; n];
    let mut boundary = 0i64;
    let mut best: Option<(Ratio<u64>, usize)> = None;
    for (k, &v) in verts.iter().enumerate().take(n - 1) {
        for &(u, mult) in &adj[v] {
            if inside[u] {
                boundary -= mult as i64;
            } else {
                boundary += mult as i64;
            }
        }
        inside[v] = true;
        let side_size = (k + 1).min(n - k - 1) as u64;
        let ratio = Ratio::new(boundary as u64, side_size);
        if best.map_or(true, |(r, _)| ratio < r) {
            best = Some((ratio, k + 1));
        }
    }
    let (ratio, prefix) = best.unwrap();
    let mut side: Vec<usize> = if prefix <= n / 2 {
        verts[..prefix].to_vec()
    } else {
        verts[prefix..].to_vec()
    };
    side.sort_unstable();
    Ok(CutCertificate {
        boundary_size: graph.boundary_size(&side),
        side,
        ratio,
        optimal: false,
    })
}

/// Two-sided spectral estimate: the Cheeger constant lies in
/// [lambda2 / 2, sqrt(2 * dmax * lambda2)].
pub fn spectral_brackets(graph: &MultiGraph) -> Result<(f64, f64), CheegerError> {
    let l2 = lambda2(graph)?;
    let dmax = (0..graph.vertex_count())
        .map(|v| graph.degree(v))
        .max()
        .unwrap_or(0) as f64;
    Ok((l2 / 2.0, (2.0 * dmax * l2).sqrt()))
}

impl CutCertificate {
    pub fn to_text(&self) -> String {
        let indices: Vec<String> = self.side.iter().map(|v| v.to_string()).collect();
        format!(
            "cut {}\n{}\nboundary {} ratio {}/{}\noptimal {}\n",
            self.side.len(),
            indices.join(" "),
            self.boundary_size,
            self.ratio.numer(),
            self.ratio.denom(),
            self.optimal
        )
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let err = |msg: &str| GraphError::Parse {
            line: 0,
            msg: msg.to_string(),
        };
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if lines.len() < 3 {
            return Err(err("expected cut header, indices, and boundary line"));
        }
        let count: usize = lines[0]
            .strip_prefix("cut ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| err("expected: cut <size>"))?;
        let side: Vec<usize> = lines[1]
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| err("bad vertex index")))
            .collect::<Result<_, _>>()?;
        if side.len() != count {
            return Err(err("cut size does not match index count"));
        }
        let fields: Vec<&str> = lines[2].split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "boundary" || fields[2] != "ratio" {
            return Err(err("expected: boundary <size> ratio <p>/<q>"));
        }
        let boundary_size = fields[1].parse().map_err(|_| err("bad boundary size"))?;
        let (p, q) = fields[3]
            .split_once('/')
            .ok_or_else(|| err("ratio must be <p>/<q>"))?;
        let ratio = Ratio::new(
            p.parse().map_err(|_| err("bad ratio numerator"))?,
            q.parse().map_err(|_| err("bad ratio denominator"))?,
        );
        let optimal = match lines.get(3) {
            Some(l) => l
                .strip_prefix("optimal ")
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| err("expected: optimal <bool>"))?,
            None => false,
        };
        Ok(CutCertificate {
            side,
            boundary_size,
            ratio,
            optimal,
        })
    }
}
