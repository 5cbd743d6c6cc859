//! Immutable simple graphs with bitset adjacency rows, plus the catalog of
//! named graphs used throughout the crate: cycles `C_n` and their complements,
//! circulants `Ci_n(..)`, Johnson graphs `J(n,k)`, the Shrikhande graph, and
//! complete graphs with or without a deleted matching.
//!
//! Vertices are `0..n` internally; user-facing reports add 1 so that printed
//! labels match the usual 1-based numbering of these graphs.

mod iso;
mod spec;

pub use iso::{is_isomorphic, is_isomorphic_capped, is_vertex_transitive, DEFAULT_ISO_CAP};
pub use spec::{load_edge_list, GraphSpec, ResolveOptions};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Vertex cap for disjunctive products (guards memory and search time).
pub const DEFAULT_PRODUCT_VERTEX_CAP: usize = 20_000;

/// An immutable simple graph.
///
/// Equality (`==`) is structural: two graphs are equal iff they have the same
/// vertex count and the same adjacency, vertex for vertex. The `label` and
/// `vertex_transitive` fields are metadata and do not participate.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
    label: Option<String>,
    /// `Some(true)` / `Some(false)` when transitivity is known, `None` otherwise.
    vertex_transitive: Option<bool>,
    /// Whether `i -> i+1 (mod n)` is known to be an automorphism. Set by the
    /// circulant-style constructors; used to accelerate the theta SDP.
    shift_symmetric: bool,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph({}, n={}, m={})",
            self.label.as_deref().unwrap_or("?"),
            self.n,
            self.edge_count()
        )
    }
}

impl Graph {
    fn blank(n: usize) -> Graph {
        Graph {
            n,
            rows: vec![BitSet::new(n); n],
            label: None,
            vertex_transitive: None,
            shift_symmetric: false,
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Graph {
        let mut g = Graph::blank(n);
        g.vertex_transitive = Some(true);
        g.shift_symmetric = true;
        g.label = Some(format!("empty:{n}"));
        g
    }

    /// Builds a graph from an explicit edge list. Endpoints must be distinct
    /// and in range; duplicate edges (in either orientation) are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::blank(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if g.rows[u].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate edge ({u},{v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Cycle `C_n`, `n >= 3`: vertex `i` adjacent to `i±1 (mod n)`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid_parameter(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        let mut g = Graph::blank(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g.label = Some(format!("cycle:{n}"));
        g.vertex_transitive = Some(true);
        g.shift_symmetric = true;
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::blank(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g.label = Some(format!("complete:{n}"));
        g.vertex_transitive = Some(true);
        g.shift_symmetric = true;
        g
    }

    /// `K_d` with the `⌊d/2⌋` disjoint edges `(0,1), (2,3), ...` removed.
    pub fn complete_minus_matching(d: usize) -> Result<Graph> {
        if d < 1 {
            return Err(Error::invalid_parameter(
                "complete_minus_matching needs d >= 1",
            ));
        }
        let mut g = Graph::complete(d);
        for i in 0..d / 2 {
            g.rows[2 * i].remove(2 * i + 1);
            g.rows[2 * i + 1].remove(2 * i);
        }
        g.label = Some(format!("K{d}-matching"));
        // For odd d >= 3 one vertex keeps degree d-1 while the rest drop to d-2.
        g.vertex_transitive = Some(d <= 2 || d % 2 == 0);
        g.shift_symmetric = d <= 2;
        Ok(g)
    }

    /// Circulant graph: `i ~ j` iff `(i - j) mod n` or `(j - i) mod n` is in
    /// `connections`; every connection must lie in `1..=n/2`.
    pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid_parameter(format!(
                "circulant needs n >= 3, got {n}"
            )));
        }
        if connections.is_empty() {
            return Err(Error::invalid_parameter("circulant needs connections"));
        }
        let mut conns: Vec<usize> = connections.to_vec();
        conns.sort_unstable();
        conns.dedup();
        if conns.iter().any(|&c| c == 0 || c > n / 2) {
            return Err(Error::invalid_parameter(format!(
                "circulant connections must lie in 1..={}, got {connections:?}",
                n / 2
            )));
        }
        let mut g = Graph::blank(n);
        for i in 0..n {
            for &c in &conns {
                g.add_edge(i, (i + c) % n);
            }
        }
        let conn_str = conns
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        g.label = Some(format!("circulant:{n}:{conn_str}"));
        g.vertex_transitive = Some(true);
        g.shift_symmetric = true;
        Ok(g)
    }

    /// Johnson graph `J(n,k)`: vertices are the k-subsets of `{1..n}` in
    /// lexicographic order, adjacent iff their intersection has size `k-1`.
    pub fn johnson(n: usize, k: usize) -> Result<Graph> {
        if k < 1 || k > n {
            return Err(Error::invalid_parameter(format!(
                "johnson needs 1 <= k <= n, got J({n},{k})"
            )));
        }
        let subsets = k_subsets(n, k);
        let mut g = Graph::blank(subsets.len());
        for a in 0..subsets.len() {
            for b in a + 1..subsets.len() {
                let inter = subsets[a].iter().filter(|x| subsets[b].contains(x)).count();
                if inter == k - 1 {
                    g.add_edge(a, b);
                }
            }
        }
        g.label = Some(format!("johnson:{n}:{k}"));
        g.vertex_transitive = Some(true);
        Ok(g)
    }

    /// The Shrikhande graph on `Z_4 x Z_4`: `(a,b) ~ (c,d)` iff
    /// `(a-c, b-d) ∈ {±(1,0), ±(0,1), ±(1,1)}`.
    pub fn shrikhande() -> Graph {
        let mut g = Graph::blank(16);
        let diffs: [(i32, i32); 6] = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
        for a in 0..4i32 {
            for b in 0..4i32 {
                for &(da, db) in &diffs {
                    let c = (a + da).rem_euclid(4);
                    let d = (b + db).rem_euclid(4);
                    let u = (4 * a + b) as usize;
                    let v = (4 * c + d) as usize;
                    if u < v {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g.label = Some("shrikhande".to_string());
        g.vertex_transitive = Some(true);
        g
    }

    /// Complement on the same vertex set: `i ~ j` iff `i != j` and not `i ~ j`
    /// in `self`. Transitivity and shift symmetry carry over unchanged.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::blank(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.rows[u].contains(v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.label = self.label.as_ref().map(|l| format!("complement({l})"));
        g.vertex_transitive = self.vertex_transitive;
        g.shift_symmetric = self.shift_symmetric;
        g
    }

    /// Disjunctive (co-normal) product: vertices `V(G) x V(H)` flattened
    /// row-major; `(g,h) ~ (g',h')` iff the pairs differ and `g ~ g'` or
    /// `h ~ h'`.
    pub fn disjunctive_product(&self, other: &Graph) -> Result<Graph> {
        self.disjunctive_product_capped(other, DEFAULT_PRODUCT_VERTEX_CAP)
    }

    pub fn disjunctive_product_capped(&self, other: &Graph, cap: usize) -> Result<Graph> {
        let size = self.n.checked_mul(other.n).unwrap_or(usize::MAX);
        if size > cap {
            return Err(Error::resource_cap(format!(
                "product would have {size} vertices (cap {cap})"
            )));
        }
        let mut g = Graph::blank(size);
        let flat = |a: usize, b: usize| a * other.n + b;
        for a in 0..self.n {
            for b in 0..other.n {
                let u = flat(a, b);
                for a2 in 0..self.n {
                    for b2 in 0..other.n {
                        let v = flat(a2, b2);
                        if v > u && (self.rows[a].contains(a2) || other.rows[b].contains(b2)) {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
        g.label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("product({a},{b})")),
            _ => None,
        };
        g.vertex_transitive = match (self.vertex_transitive, other.vertex_transitive) {
            (Some(a), Some(b)) => Some(a && b),
            _ => None,
        };
        Ok(g)
    }

    /// `m`-fold disjunctive power, `m >= 1`.
    pub fn disjunctive_power(&self, m: usize) -> Result<Graph> {
        self.disjunctive_power_capped(m, DEFAULT_PRODUCT_VERTEX_CAP)
    }

    pub fn disjunctive_power_capped(&self, m: usize, cap: usize) -> Result<Graph> {
        if m < 1 {
            return Err(Error::invalid_parameter("power needs exponent >= 1"));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.disjunctive_product_capped(self, cap)?;
        }
        if m > 1 {
            acc.label = self.label.as_ref().map(|l| format!("power({l},{m})"));
        }
        Ok(acc)
    }

    /// Subgraph induced by `verts` (which need not be sorted); vertex `i` of
    /// the result corresponds to `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::blank(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.rows[u].contains(v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Deletes one vertex, relabeling the rest in order.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&verts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Adjacency row of `v` as a bitset.
    pub fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    /// Printable name: the label if set, otherwise `G(n,m)`.
    pub fn display_name(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| format!("G({}, {} edges)", self.n, self.edge_count()))
    }

    pub fn vertex_transitive(&self) -> Option<bool> {
        self.vertex_transitive
    }

    pub(crate) fn shift_symmetric(&self) -> bool {
        self.shift_symmetric
    }

    /// Whether the graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = BitSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for u in self.rows[v].iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen.count() == self.n
    }

    /// Checks symmetry and irreflexivity of the adjacency rows.
    pub fn check_invariants(&self) -> Result<()> {
        for u in 0..self.n {
            if self.rows[u].contains(u) {
                return Err(Error::Internal(format!("self-loop at {u}")));
            }
            for v in self.rows[u].iter() {
                if !self.rows[v].contains(u) {
                    return Err(Error::Internal(format!("asymmetric edge ({u},{v})")));
                }
            }
        }
        Ok(())
    }
}

/// All k-subsets of `{1..n}` in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    label: Option<String>,
    vertex_transitive: Option<bool>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges(),
            label: self.label.clone(),
            vertex_transitive: self.vertex_transitive,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        let mut g = Graph::from_edges(repr.n, &repr.edges).map_err(serde::de::Error::custom)?;
        g.label = repr.label;
        g.vertex_transitive = repr.vertex_transitive;
        Ok(g)
    }
}
