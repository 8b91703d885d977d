//! Extremal numbers for paths: the clique-packing bound, the closed forms for
//! `ex(n, P4)`, `ex(n, P5)`, `ex(n, P6)`, an exhaustive maximizer, and
//! generators for the graphs attaining the bound.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{pair_count, pairs_in_order, Graph};
use crate::oracles::{has_path_of_order, path_through_edge};

/// A host size `nv` and a forbidden path `P_p`, with `nv = n*t + r`, `n = p - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalParams {
    pub nv: usize,
    pub p: usize,
}

impl ExtremalParams {
    pub fn new(nv: usize, p: usize) -> Result<Self> {
        if p < 2 {
            return invalid(format!("forbidden path order must be at least 2, got {p}"));
        }
        if nv == 0 {
            return invalid("host must have at least one vertex");
        }
        Ok(ExtremalParams { nv, p })
    }

    /// Largest allowed path order, `p - 1`.
    pub fn block(&self) -> usize {
        self.p - 1
    }

    pub fn t(&self) -> usize {
        self.nv / self.block()
    }

    pub fn r(&self) -> usize {
        self.nv % self.block()
    }
}

/// `t * C(n,2) + C(r,2)`: the most edges a `P_{n+1}`-free graph on `n*t + r` vertices can have.
pub fn fs_bound(params: ExtremalParams) -> usize {
    params.t() * pair_count(params.block()) + pair_count(params.r())
}

/// Closed forms for `ex(nv, P4)`, `ex(nv, P5)`, `ex(nv, P6)`, valid for `nv >= 3`.
pub fn ex_formula(nv: usize, p: usize) -> Result<usize> {
    if nv < 3 {
        return invalid(format!("closed forms hold for nv >= 3, got {nv}"));
    }
    let value = match p {
        4 => match nv % 3 {
            0 => nv,
            _ => nv - 1,
        },
        5 => match nv % 4 {
            0 => 3 * nv / 2,
            2 => 3 * nv / 2 - 2,
            _ => (3 * nv - 3) / 2,
        },
        6 => match nv % 5 {
            0 => 2 * nv,
            1 | 4 => 2 * nv - 2,
            _ => 2 * nv - 3,
        },
        _ => return invalid(format!("closed forms exist for p in {{4,5,6}}, got {p}")),
    };
    Ok(value)
}

/// Largest `P_p`-free graph on `nv <= 8` labeled vertices, found by exhaustive
/// include/exclude enumeration over pairs.
pub fn ex_bruteforce(nv: usize, p: usize) -> Result<(usize, Graph)> {
    let (best, witness, _) = ex_bruteforce_counted(nv, p)?;
    Ok((best, witness))
}

/// [`ex_bruteforce`] plus the number of enumeration nodes (partial graphs) visited.
pub fn ex_bruteforce_counted(nv: usize, p: usize) -> Result<(usize, Graph, u64)> {
    if nv > 8 {
        return Err(Error::Resource(format!(
            "exhaustive enumeration is limited to 8 vertices, got {nv}"
        )));
    }
    ExtremalParams::new(nv, p)?;
    let pairs = pairs_in_order(nv);
    let mut state = Enumeration {
        pairs: &pairs,
        p,
        adj: vec![0; nv],
        best: None,
        best_adj: vec![0; nv],
        nodes: 0,
    };
    state.descend(0, 0);
    let witness = Graph::from_rows(nv, &state.best_adj)?;
    Ok((state.best.unwrap_or(0), witness, state.nodes))
}

struct Enumeration<'a> {
    pairs: &'a [(usize, usize)],
    p: usize,
    adj: Vec<u32>,
    best: Option<usize>,
    best_adj: Vec<u32>,
    nodes: u64,
}

impl Enumeration<'_> {
    fn descend(&mut self, idx: usize, edges: usize) {
        self.nodes += 1;
        if let Some(best) = self.best {
            if edges + (self.pairs.len() - idx) <= best {
                return;
            }
        }
        if idx == self.pairs.len() {
            self.best = Some(edges);
            self.best_adj.copy_from_slice(&self.adj);
            return;
        }
        let (i, j) = self.pairs[idx];
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        // Supergraphs of a graph containing P_p contain it too.
        if !path_through_edge(&self.adj, i, j, self.p) {
            self.descend(idx + 1, edges + 1);
        }
        self.adj[i] &= !(1 << j);
        self.adj[j] &= !(1 << i);
        self.descend(idx + 1, edges);
    }
}

/// Shape of an equality graph for the clique-packing bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalVariant {
    /// `t K_n ∪ K_r`.
    Cliques,
    /// `l K_n ∪ (K_{(n-1)/2} + co-K_{(n+1)/2 + (t-l-1)n + r})`, for odd `n` and `r = (n±1)/2`.
    OddJoin { l: usize },
}

/// Builds the equality graph on `n*t + r` vertices. Cliques occupy consecutive
/// label blocks; in the join block the clique part precedes the independent part.
pub fn extremal_graph(t: usize, n: usize, r: usize, variant: ExtremalVariant) -> Result<Graph> {
    if n == 0 || r >= n {
        return invalid(format!("need 0 <= r < n, got n={n}, r={r}"));
    }
    let total = n * t + r;
    if total == 0 || total > crate::graph::MAX_VERTICES {
        return invalid(format!("vertex count n*t + r = {total} out of range"));
    }
    let mut g = Graph::empty(total)?;
    let add_clique = |g: &mut Graph, start: usize, size: usize| -> Result<()> {
        for a in start..start + size {
            for b in a + 1..start + size {
                g.add_edge(a, b)?;
            }
        }
        Ok(())
    };
    match variant {
        ExtremalVariant::Cliques => {
            for block in 0..t {
                add_clique(&mut g, block * n, n)?;
            }
            add_clique(&mut g, n * t, r)?;
        }
        ExtremalVariant::OddJoin { l } => {
            if n.is_multiple_of(2) || t == 0 || l >= t || (2 * r != n - 1 && 2 * r != n + 1) {
                return invalid(format!(
                    "odd join needs odd n, t > 0, 0 <= l < t, r = (n±1)/2; got n={n}, t={t}, l={l}, r={r}"
                ));
            }
            for block in 0..l {
                add_clique(&mut g, block * n, n)?;
            }
            let start = l * n;
            let a = (n - 1) / 2;
            add_clique(&mut g, start, a)?;
            for u in start..start + a {
                for v in start + a..total {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

/// Agreement table between [`ex_bruteforce`] and [`ex_formula`].
#[derive(Clone, Debug, Serialize)]
pub struct ExCheckRow {
    pub nv: usize,
    pub p: usize,
    pub formula: usize,
    pub bruteforce: usize,
    pub witness_path_free: bool,
    /// Partial graphs visited by the pruned enumeration.
    pub graphs: u64,
}

impl ExCheckRow {
    pub fn passes(&self) -> bool {
        self.formula == self.bruteforce && self.witness_path_free
    }
}

/// Runs the closed-form cross-check for `3 <= nv <= 8`, `p in {4,5,6}`.
pub fn verify_ex_corollary() -> Result<Vec<ExCheckRow>> {
    let mut rows = Vec::new();
    for p in 4..=6 {
        for nv in 3..=8 {
            let (bruteforce, witness, graphs) = ex_bruteforce_counted(nv, p)?;
            rows.push(ExCheckRow {
                nv,
                p,
                formula: ex_formula(nv, p)?,
                bruteforce,
                witness_path_free: !has_path_of_order(&witness, p)?,
                graphs,
            });
        }
    }
    Ok(rows)
}

/// Every valid `(t, n, r, variant)` with `1 <= n*t + r <= max_vertices`.
pub fn equality_parameter_tuples(
    max_vertices: usize,
) -> Vec<(usize, usize, usize, ExtremalVariant)> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        for t in 0..=max_vertices / n {
            for r in 0..n {
                let total = n * t + r;
                if total == 0 || total > max_vertices {
                    continue;
                }
                out.push((t, n, r, ExtremalVariant::Cliques));
                if n % 2 == 1 && t > 0 && (2 * r == n - 1 || 2 * r == n + 1) {
                    for l in 0..t {
                        out.push((t, n, r, ExtremalVariant::OddJoin { l }));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::longest_path_order;

    fn bound(nv: usize, p: usize) -> usize {
        fs_bound(ExtremalParams::new(nv, p).unwrap())
    }

    #[test]
    fn bound_examples() {
        assert_eq!(bound(7, 4), 6);
        assert_eq!(bound(8, 5), 12);
        assert_eq!(bound(3, 4), 3);
        assert_eq!(bound(8, 6), 13);
        assert!(ExtremalParams::new(5, 1).is_err());
    }

    #[test]
    fn decomposition() {
        let params = ExtremalParams::new(7, 4).unwrap();
        assert_eq!((params.block(), params.t(), params.r()), (3, 2, 1));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(ex_formula(6, 4).unwrap(), 6);
        assert_eq!(ex_formula(6, 5).unwrap(), 7);
        assert_eq!(ex_formula(7, 6).unwrap(), 11);
        assert_eq!(ex_formula(7, 5).unwrap(), 9);
        assert_eq!(ex_formula(8, 5).unwrap(), 12);
        assert!(ex_formula(2, 4).is_err());
        assert!(ex_formula(6, 7).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        let (value, witness) = ex_bruteforce(6, 4).unwrap();
        assert_eq!(value, 6);
        assert_eq!(witness.edge_count(), 6);
        // 2K3 is the unique maximizer.
        assert!(witness.rows().iter().all(|r| r.count_ones() == 2));
        assert_eq!(longest_path_order(&witness), 3);

        let (value, witness) = ex_bruteforce(4, 4).unwrap();
        assert_eq!(value, 3);
        let degrees: Vec<u32> = {
            let mut d: Vec<u32> = witness.rows().iter().map(|r| r.count_ones()).collect();
            d.sort();
            d
        };
        // K3 ∪ K1 or the star K_{1,3}, the two equality graphs for n=3, t=1, r=1.
        assert!(
            degrees == [0, 2, 2, 2] || degrees == [1, 1, 1, 3],
            "{degrees:?}"
        );

        assert_eq!(ex_bruteforce(7, 5).unwrap().0, 9);
        assert!(matches!(ex_bruteforce(9, 4), Err(Error::Resource(_))));
    }

    #[test]
    fn bruteforce_small_hosts() {
        assert_eq!(ex_bruteforce(1, 2).unwrap().0, 0);
        assert_eq!(ex_bruteforce(3, 4).unwrap().0, 3);
        assert_eq!(ex_bruteforce(5, 2).unwrap().0, 0);
    }

    #[test]
    fn generator_examples() {
        let g = extremal_graph(2, 4, 0, ExtremalVariant::Cliques).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(longest_path_order(&g), 4);

        let g = extremal_graph(1, 5, 3, ExtremalVariant::OddJoin { l: 0 }).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.edge_count(), bound(8, 6));
        assert!(longest_path_order(&g) <= 5);

        let g = extremal_graph(0, 3, 2, ExtremalVariant::Cliques).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));

        assert!(extremal_graph(1, 4, 2, ExtremalVariant::OddJoin { l: 0 }).is_err());
        assert!(extremal_graph(1, 5, 1, ExtremalVariant::OddJoin { l: 0 }).is_err());
        assert!(extremal_graph(1, 5, 3, ExtremalVariant::OddJoin { l: 1 }).is_err());
        assert!(extremal_graph(1, 3, 3, ExtremalVariant::Cliques).is_err());
    }

    #[test]
    fn generated_graphs_attain_the_bound() {
        for (t, n, r, variant) in equality_parameter_tuples(10) {
            let g = extremal_graph(t, n, r, variant).unwrap();
            let params = ExtremalParams::new(n * t + r, n + 1).unwrap();
            assert_eq!(g.edge_count(), fs_bound(params), "{t} {n} {r} {variant:?}");
            assert!(
                !has_path_of_order(&g, n + 1).unwrap(),
                "{t} {n} {r} {variant:?}"
            );
        }
    }
}
