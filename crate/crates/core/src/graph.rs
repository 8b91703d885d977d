//! Dense graphs on at most 32 vertices, edge colorings, and per-color targets.
//!
//! Adjacency is stored as one `u32` row per vertex. Edges are addressed by
//! their rank in the lexicographic order `(0,1), (0,2), …, (0,n-1), (1,2), …`
//! (see [`edge_index`]); that order fixes the serialization layout and the
//! branching order of the search engine.

use std::fmt;

use crate::error::{invalid, Error, Result};

/// Largest supported vertex count; one adjacency row fits a `u32`.
pub const MAX_VERTICES: usize = 32;

/// Color label of the green class in three-color colorings.
pub const GREEN: u8 = 0;
/// Color label of the red class in three-color colorings.
pub const RED: u8 = 1;
/// Color label of the blue class in three-color colorings.
pub const BLUE: u8 = 2;

/// Number of unordered pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Rank of the pair `(i, j)`, `i < j < n`, in lexicographic pair order.
pub fn edge_index(i: usize, j: usize, n: usize) -> Result<usize> {
    if i >= j || j >= n {
        return invalid(format!(
            "edge_index requires i < j < n, got ({i}, {j}, {n})"
        ));
    }
    Ok(edge_rank(i, j, n))
}

#[inline]
pub(crate) fn edge_rank(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs of `K_n` listed in [`edge_index`] order.
pub fn pairs_in_order(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// A labeled simple undirected graph on `1..=32` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Rows must be symmetric,
    /// loop-free, and confined to the first `n` bits.
    pub fn from_rows(n: usize, rows: &[u32]) -> Result<Self> {
        check_order(n)?;
        if rows.len() != n {
            return invalid(format!("expected {n} adjacency rows, got {}", rows.len()));
        }
        let mut g = Graph::empty(n)?;
        let full = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 || row & (1 << v) != 0 {
                return invalid(format!("adjacency row {v} is out of range or has a loop"));
            }
            g.adj[v] = row;
        }
        for v in 0..n {
            for u in bits(g.adj[v]) {
                if g.adj[u] & (1 << v) == 0 {
                    return invalid(format!("adjacency is not symmetric at ({v}, {u})"));
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b || a >= self.n || b >= self.n {
            return invalid(format!(
                "edge ({a}, {b}) is not valid on {} vertices",
                self.n
            ));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        if a < self.n && b < self.n {
            self.adj[a] &= !(1 << b);
            self.adj[b] &= !(1 << a);
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & (1 << b) != 0
    }

    /// Neighborhood of `v` as a bit set.
    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(i, j)` with `i < j`, in [`edge_index`] order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in bits(self.adj[i] >> (i + 1)) {
                out.push((i, i + 1 + j));
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(bits(self.adj[v]).collect())
    }

    pub fn min_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == pair_count(self.n)
    }

    /// Complement with respect to `K_n`.
    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Disjoint union, relabeling `other` after the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut g = Graph {
            n,
            adj: [0; MAX_VERTICES],
        };
        g.adj[..self.n].copy_from_slice(self.rows());
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return invalid(format!("vertex {v} out of range for {} vertices", self.n));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let full = full_mask(n);
    for v in 0..n {
        g.adj[v] = full & !(1 << v);
    }
    Ok(g)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return invalid(format!(
            "vertex count must be in 1..={MAX_VERTICES}, got {n}"
        ));
    }
    Ok(())
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the set bits of `mask` from lowest to highest.
#[inline]
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// An assignment of one of `k` colors to every edge of a host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    host: Graph,
    k: usize,
    /// Indexed by [`edge_index`]; `None` exactly for pairs absent from the host.
    colors: Vec<Option<u8>>,
}

impl EdgeColoring {
    /// Colors every host edge with `color`.
    pub fn monochromatic(host: Graph, k: usize, color: u8) -> Result<Self> {
        check_colors(k, color)?;
        let n = host.n();
        let mut colors = vec![None; pair_count(n)];
        for (i, j) in host.edges() {
            colors[edge_rank(i, j, n)] = Some(color);
        }
        Ok(EdgeColoring { host, k, colors })
    }

    /// Builds a coloring from a per-pair color vector in [`edge_index`] order.
    pub fn from_colors(host: Graph, k: usize, colors: Vec<Option<u8>>) -> Result<Self> {
        let n = host.n();
        if k == 0 || k > 10 {
            return invalid(format!("color count must be in 1..=10, got {k}"));
        }
        if colors.len() != pair_count(n) {
            return invalid(format!(
                "expected {} pair colors, got {}",
                pair_count(n),
                colors.len()
            ));
        }
        for (idx, (i, j)) in pairs_in_order(n).into_iter().enumerate() {
            match (host.has_edge(i, j), colors[idx]) {
                (true, Some(c)) if (c as usize) < k => {}
                (true, Some(c)) => {
                    return invalid(format!("edge ({i}, {j}) has color {c} >= k={k}"))
                }
                (true, None) => return invalid(format!("host edge ({i}, {j}) is uncolored")),
                (false, Some(_)) => return invalid(format!("non-edge ({i}, {j}) carries a color")),
                (false, None) => {}
            }
        }
        Ok(EdgeColoring { host, k, colors })
    }

    /// Complete host on `n` vertices, coloring each pair with `f(i, j)`.
    pub fn complete_with(
        n: usize,
        k: usize,
        mut f: impl FnMut(usize, usize) -> u8,
    ) -> Result<Self> {
        let host = complete_graph(n)?;
        let colors = pairs_in_order(n)
            .into_iter()
            .map(|(i, j)| Some(f(i, j)))
            .collect();
        EdgeColoring::from_colors(host, k, colors)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn n(&self) -> usize {
        self.host.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[Option<u8>] {
        &self.colors
    }

    /// Color of the pair `{a, b}`; `None` when it is not a host edge.
    pub fn color_of(&self, a: usize, b: usize) -> Option<u8> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if i == j || j >= self.n() {
            return None;
        }
        self.colors[edge_rank(i, j, self.n())]
    }

    pub fn set_color(&mut self, a: usize, b: usize, color: u8) -> Result<()> {
        check_colors(self.k, color)?;
        if !self.host.has_edge(a, b) {
            return invalid(format!("({a}, {b}) is not a host edge"));
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        let idx = edge_rank(i, j, self.n());
        self.colors[idx] = Some(color);
        Ok(())
    }

    /// Spanning subgraph formed by the edges of one color.
    pub fn color_class(&self, color: u8) -> Result<Graph> {
        if color as usize >= self.k {
            return invalid(format!("color {color} out of range for k={}", self.k));
        }
        let n = self.n();
        let mut g = Graph::empty(n)?;
        for (idx, (i, j)) in pairs_in_order(n).into_iter().enumerate() {
            if self.colors[idx] == Some(color) {
                g.adj[i] |= 1 << j;
                g.adj[j] |= 1 << i;
            }
        }
        Ok(g)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for c in self.colors.iter().flatten() {
            sizes[*c as usize] += 1;
        }
        sizes
    }

    /// Re-labels vertices: vertex `v` of the input becomes `perm[v]`.
    ///
    /// The host must be mapped onto itself.
    pub fn apply_vertex_permutation(&self, perm: &[usize]) -> Result<EdgeColoring> {
        let n = self.n();
        if perm.len() != n {
            return invalid(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            ));
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= n || seen & (1 << p) != 0 {
                return invalid("vertex map is not a permutation");
            }
            seen |= 1 << p;
        }
        let mut colors = vec![None; pair_count(n)];
        for (i, j) in self.host.edges() {
            let (a, b) = (perm[i], perm[j]);
            if !self.host.has_edge(a, b) {
                return invalid(format!(
                    "permutation maps edge ({i}, {j}) onto non-edge ({a}, {b})"
                ));
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            colors[edge_rank(a, b, n)] = self.colors[edge_rank(i, j, n)];
        }
        Ok(EdgeColoring {
            host: self.host.clone(),
            k: self.k,
            colors,
        })
    }

    /// Re-labels colors: color `c` becomes `perm[c]`.
    pub fn apply_color_permutation(&self, perm: &[u8]) -> Result<EdgeColoring> {
        if perm.len() != self.k {
            return invalid("color map length differs from k");
        }
        let mut seen = 0u32;
        for &p in perm {
            if p as usize >= self.k || seen & (1 << p) != 0 {
                return invalid("color map is not a permutation");
            }
            seen |= 1 << p;
        }
        let colors = self
            .colors
            .iter()
            .map(|c| c.map(|c| perm[c as usize]))
            .collect();
        Ok(EdgeColoring {
            host: self.host.clone(),
            k: self.k,
            colors,
        })
    }

    /// Adds `shift` to every color label and reinterprets the result with `k` colors.
    pub fn relabeled(&self, shift: u8, k: usize) -> Result<EdgeColoring> {
        let colors = self.colors.iter().map(|c| c.map(|c| c + shift)).collect();
        EdgeColoring::from_colors(self.host.clone(), k, colors)
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .colors
            .iter()
            .map(|c| c.map_or('-', |c| char::from(b'0' + c)))
            .collect();
        write!(f, "EdgeColoring(n={}, k={}, {s})", self.n(), self.k)
    }
}

fn check_colors(k: usize, color: u8) -> Result<()> {
    if k == 0 || k > 10 {
        return invalid(format!("color count must be in 1..=10, got {k}"));
    }
    if color as usize >= k {
        return invalid(format!("color {color} out of range for k={k}"));
    }
    Ok(())
}

/// Forbidden structure for one color class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// A path on the given number of vertices.
    Path(usize),
    /// The given number of pairwise disjoint edges.
    Matching(usize),
}

impl Pattern {
    /// Vertices spanned by one copy of the pattern.
    pub fn order(self) -> usize {
        match self {
            Pattern::Path(p) => p,
            Pattern::Matching(q) => 2 * q,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(p) => write!(f, "P{p}"),
            Pattern::Matching(q) => write!(f, "{q}K2"),
        }
    }
}

impl std::str::FromStr for Pattern {
    type Err = Error;

    /// Parses `P<k>` or `<q>K2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidInput(format!(
                "cannot parse target `{s}` (expected P<k> or <q>K2)"
            ))
        };
        if let Some(rest) = s.strip_prefix('P') {
            let p: usize = rest.parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            Ok(Pattern::Path(p))
        } else if let Some(rest) = s.strip_suffix("K2") {
            let q: usize = rest.parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Pattern::Matching(q))
        } else {
            Err(bad())
        }
    }
}

/// One forbidden pattern per color, in color order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TargetSpec {
    patterns: Vec<Pattern>,
}

impl TargetSpec {
    pub fn new(patterns: Vec<Pattern>) -> Result<Self> {
        if patterns.is_empty() || patterns.len() > 10 {
            return invalid(format!("need 1..=10 colors, got {}", patterns.len()));
        }
        for p in &patterns {
            let size = match *p {
                Pattern::Path(s) | Pattern::Matching(s) => s,
            };
            if size == 0 {
                return invalid(format!("pattern {p} has size 0"));
            }
        }
        Ok(TargetSpec { patterns })
    }

    /// `(P_a, P_b, …)` shorthand.
    pub fn paths(orders: &[usize]) -> Result<Self> {
        TargetSpec::new(orders.iter().map(|&p| Pattern::Path(p)).collect())
    }

    /// Parses whitespace-separated patterns, e.g. `"P3 P6 P6"` or `"P3 3K2 4K2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let patterns = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Pattern>>>()?;
        TargetSpec::new(patterns)
    }

    pub fn k(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn pattern(&self, color: usize) -> Pattern {
        self.patterns[color]
    }

    /// Same targets with color `c` moved to `perm[c]`.
    pub fn permuted(&self, perm: &[u8]) -> Result<TargetSpec> {
        if perm.len() != self.k() {
            return invalid("color map length differs from k");
        }
        let mut patterns = self.patterns.clone();
        for (c, &p) in perm.iter().enumerate() {
            patterns[p as usize] = self.patterns[c];
        }
        TargetSpec::new(patterns)
    }
}

impl fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.patterns.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
