//! Exact decision procedures for monochromatic path and matching targets.
//!
//! These operate on whole graphs and are the reference the search engine's
//! incremental checks are certified against. [`longest_path_bruteforce`] is
//! a deliberately naive permutation enumeration kept as an independent oracle.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{bits, EdgeColoring, Graph, Pattern, TargetSpec};

/// Vertices reachable from `start` through vertices in `allowed`, excluding `start`.
#[inline]
pub(crate) fn reach(adj: &[u32], start: usize, allowed: u32) -> u32 {
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen & !(1 << start)
}

/// Extends `path` (whose vertices are `used`) from its last vertex until it
/// has `need` vertices. Leaves the successful path in `path`.
fn extend_path(adj: &[u32], path: &mut Vec<usize>, used: u32, need: usize) -> bool {
    if path.len() >= need {
        return true;
    }
    let end = *path.last().expect("path is never empty");
    let free = adj[end] & !used;
    if free == 0 {
        return false;
    }
    let reachable = reach(adj, end, !used);
    if path.len() + (reachable.count_ones() as usize) < need {
        return false;
    }
    for u in bits(free) {
        path.push(u);
        if extend_path(adj, path, used | (1 << u), need) {
            return true;
        }
        path.pop();
    }
    false
}

/// A path on exactly `p` vertices, if one exists.
pub fn find_path(g: &Graph, p: usize) -> Result<Option<Vec<usize>>> {
    if p == 0 {
        return invalid("path order must be at least 1");
    }
    let n = g.n();
    if p > n {
        return Ok(None);
    }
    let adj = g.rows();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (adj[v].count_ones(), v));
    let mut path = Vec::with_capacity(p);
    for s in starts {
        if p > 1 && adj[s] == 0 {
            continue;
        }
        path.clear();
        path.push(s);
        if extend_path(adj, &mut path, 1 << s, p) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Whether `g` contains a path on `p` vertices.
pub fn has_path_of_order(g: &Graph, p: usize) -> Result<bool> {
    Ok(find_path(g, p)?.is_some())
}

/// Number of vertices of a longest path in `g` (1 for edgeless graphs).
pub fn longest_path_order(g: &Graph) -> usize {
    let mut best = 1;
    while best < g.n() && find_path(g, best + 1).expect("order is positive").is_some() {
        best += 1;
    }
    best
}

/// Longest path order by trying every vertex ordering. Only for `n <= 8`.
pub fn longest_path_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > 8 {
        return Err(Error::Resource(format!(
            "brute-force longest path is limited to 8 vertices, got {n}"
        )));
    }
    let mut best = 1;
    for order in (0..n).permutations(n) {
        let mut run = 1;
        for w in order.windows(2) {
            if g.has_edge(w[0], w[1]) {
                run += 1;
                best = best.max(run);
            } else {
                run = 1;
            }
        }
    }
    Ok(best)
}

/// Whether some path on `p` vertices uses the edge `{i, j}`. `adj` must contain that edge.
pub(crate) fn path_through_edge(adj: &[u32], i: usize, j: usize, p: usize) -> bool {
    if p <= 2 {
        return true;
    }
    let used = (1u32 << i) | (1u32 << j);
    let comp = reach(adj, i, !0);
    if comp.count_ones() as usize + 1 < p {
        return false;
    }
    grow_left(adj, i, j, used, 2, p)
}

/// Grows the `i` side of a path whose other end is `j`, trying the `j` side
/// at every step.
fn grow_left(adj: &[u32], a: usize, j: usize, used: u32, count: usize, p: usize) -> bool {
    if count >= p {
        return true;
    }
    let room = reach(adj, a, !used) | reach(adj, j, !used);
    if count + room.count_ones() as usize >= p && grow_right(adj, j, used, count, p) {
        return true;
    }
    for u in bits(adj[a] & !used) {
        if grow_left(adj, u, j, used | (1 << u), count + 1, p) {
            return true;
        }
    }
    false
}

fn grow_right(adj: &[u32], b: usize, used: u32, count: usize, p: usize) -> bool {
    if count >= p {
        return true;
    }
    let free = adj[b] & !used;
    if free == 0 || count + (reach(adj, b, !used).count_ones() as usize) < p {
        return false;
    }
    for u in bits(free) {
        if grow_right(adj, u, used | (1 << u), count + 1, p) {
            return true;
        }
    }
    false
}

/// Searches for `want` disjoint edges among vertices in `alive`.
fn matching_rec(adj: &[u32], alive: u32, want: usize, out: &mut Vec<(usize, usize)>) -> bool {
    if want == 0 {
        return true;
    }
    // Vertices of `alive` that still have a neighbour in `alive`.
    let mut active = 0u32;
    for v in bits(alive) {
        if adj[v] & alive != 0 {
            active |= 1 << v;
        }
    }
    if (active.count_ones() as usize) < 2 * want {
        return false;
    }
    let v = active.trailing_zeros() as usize;
    for u in bits(adj[v] & alive) {
        out.push((v, u));
        if matching_rec(adj, alive & !(1 << v) & !(1 << u), want - 1, out) {
            return true;
        }
        out.pop();
    }
    matching_rec(adj, alive & !(1 << v), want, out)
}

/// `q` pairwise disjoint edges of `g`, if they exist.
pub fn find_matching(g: &Graph, q: usize) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(q);
    let alive = crate::graph::full_mask(g.n());
    if matching_rec(g.rows(), alive, q, &mut out) {
        for e in out.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        Some(out)
    } else {
        None
    }
}

/// Maximum number of pairwise disjoint edges.
pub fn max_matching_size(g: &Graph) -> usize {
    let mut size = 0;
    while find_matching(g, size + 1).is_some() {
        size += 1;
    }
    size
}

/// Whether `adj` has `q` disjoint edges one of which is `{i, j}`.
pub(crate) fn matching_through_edge(adj: &[u32], n: usize, i: usize, j: usize, q: usize) -> bool {
    let alive = crate::graph::full_mask(n) & !(1 << i) & !(1 << j);
    let mut scratch = Vec::with_capacity(q);
    matching_rec(adj, alive, q.saturating_sub(1), &mut scratch)
}

/// A located copy of a forbidden pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Embedding {
    Path(Vec<usize>),
    Matching(Vec<(usize, usize)>),
}

/// Finds a copy of `pattern` in `g`.
pub fn find_pattern(g: &Graph, pattern: Pattern) -> Option<Embedding> {
    match pattern {
        Pattern::Path(p) => find_path(g, p).ok().flatten().map(Embedding::Path),
        Pattern::Matching(q) => find_matching(g, q).map(Embedding::Matching),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorVerdict {
    pub color: u8,
    pub pattern: String,
    pub edges: usize,
    /// A copy of the forbidden pattern in this color, when present.
    pub violation: Option<Embedding>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub colors: Vec<ColorVerdict>,
}

impl GoodnessReport {
    /// No color class contains its forbidden pattern.
    pub fn is_good(&self) -> bool {
        self.colors.iter().all(|c| c.violation.is_none())
    }
}

/// Checks every color class of `c` against its forbidden pattern.
pub fn coloring_is_good(c: &EdgeColoring, spec: &TargetSpec) -> Result<GoodnessReport> {
    if c.k() != spec.k() {
        return invalid(format!(
            "coloring has {} colors but the target lists {}",
            c.k(),
            spec.k()
        ));
    }
    let mut colors = Vec::with_capacity(c.k());
    for (color, &pattern) in spec.patterns().iter().enumerate() {
        let class = c.color_class(color as u8)?;
        colors.push(ColorVerdict {
            color: color as u8,
            pattern: pattern.to_string(),
            edges: class.edge_count(),
            violation: find_pattern(&class, pattern),
        });
    }
    Ok(GoodnessReport { colors })
}
