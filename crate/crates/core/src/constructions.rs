//! Explicit colorings that certify lower bounds.
//!
//! Two-color colorings use color 0 and color 1; three-color colorings follow
//! the global green/red/blue = 0/1/2 labels and leave green empty.

use crate::error::{Error, Result};
use crate::graph::{complete_graph, EdgeColoring, Graph, BLUE, MAX_VERTICES, RED};

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Resource(format!(
            "construction needs {n} vertices, supported range is 1..={MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// Lower-bound coloring for `R(P_n, P_m)`, `2 <= n <= m`, on `m + n/2 - 2` vertices.
///
/// Block `A = {0..m-2}` spans a clique in color 1 (no `P_m`); every edge meeting
/// block `B` of size `n/2 - 1` gets color 0, whose longest path has
/// `2|B| + 1 < n` vertices.
pub fn two_color_lower(n: usize, m: usize) -> Result<EdgeColoring> {
    if n < 2 || n > m {
        return Err(Error::InvalidInput(format!(
            "need 2 <= n <= m, got n={n}, m={m}"
        )));
    }
    let size = m + n / 2 - 2;
    check_size(size)?;
    let a = m - 1;
    EdgeColoring::complete_with(size, 2, |i, j| if i < a && j < a { 1 } else { 0 })
}

/// [`two_color_lower`] with an empty green class: red avoids `P_n`, blue avoids `P_m`.
pub fn three_color_lower(n: usize, m: usize) -> Result<EdgeColoring> {
    two_color_lower(n, m)?.relabeled(RED, 3)
}

/// Four blocks of size `m`; no edges between blocks 1–2 and 3–4; blocks
/// 1–3 and 2–4 joined in color 0, blocks 1–4 and 2–3 in color 1. Edges
/// inside block `i` take color `inner[i]`.
pub fn schelp_blocks_with(m: usize, inner: [u8; 4]) -> Result<(Graph, EdgeColoring)> {
    if m == 0 {
        return Err(Error::InvalidInput("block size must be at least 1".into()));
    }
    if inner.iter().any(|&c| c > 1) {
        return Err(Error::InvalidInput("block colors must be 0 or 1".into()));
    }
    let size = 4 * m;
    check_size(size)?;
    let mut host = complete_graph(size)?;
    for a in 0..m {
        for b in 0..m {
            host.remove_edge(a, m + b);
            host.remove_edge(2 * m + a, 3 * m + b);
        }
    }
    let block = |v: usize| v / m;
    let mut coloring = EdgeColoring::monochromatic(host.clone(), 2, 0)?;
    for (i, j) in host.edges() {
        let color = match (block(i), block(j)) {
            (x, y) if x == y => inner[x],
            (0, 2) | (1, 3) => 0,
            (0, 3) | (1, 2) => 1,
            _ => unreachable!("pairs across blocks 1-2 and 3-4 are not host edges"),
        };
        coloring.set_color(i, j, color)?;
    }
    Ok((host, coloring))
}

/// [`schelp_blocks_with`] with every intra-block edge in color 0.
pub fn schelp_blocks(m: usize) -> Result<(Graph, EdgeColoring)> {
    schelp_blocks_with(m, [0; 4])
}

/// Lower-bound coloring for `R(P3, nK2, mK2)` on `2m + n - 2` vertices:
/// red is the join of a clique on `{0..n-2}` with the independent set on the
/// remaining `2m - 1` vertices, blue is the clique on that set, green is empty.
pub fn matching_lower(n: usize, m: usize) -> Result<EdgeColoring> {
    if n < 3 || n > m {
        return Err(Error::InvalidInput(format!(
            "need 3 <= n <= m, got n={n}, m={m}"
        )));
    }
    let size = 2 * m + n - 2;
    check_size(size)?;
    let core = n - 1;
    EdgeColoring::complete_with(size, 3, |i, _| if i < core { RED } else { BLUE })
}
