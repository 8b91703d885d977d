use serde::Serialize;

use crate::graph::Graph;
use crate::oracles::has_path_of_order;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub colorings: u64,
    /// Colorings whose red class has a vertex of degree two.
    pub red_p3: u64,
    /// Colorings with a blue `P7`.
    pub blue_p7: u64,
    /// Colorings with neither; the lemma holds iff this is zero.
    pub counterexamples: u64,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.counterexamples == 0 && self.colorings == 1 << 11
    }
}

/// `K_{3,4}` on parts `{0,1,2}` and `{3,4,5,6}` with the edge `(0,3)` removed.
pub fn k34_minus_edge() -> Graph {
    let mut g = Graph::empty(7).expect("7 vertices");
    for x in 0..3 {
        for y in 3..7 {
            if (x, y) != (0, 3) {
                g.add_edge(x, y).expect("valid edge");
            }
        }
    }
    g
}

/// Checks every red/blue coloring of `K_{3,4} - e` for a red `P3` or a blue `P7`.
pub fn verify_lemma_k34() -> LemmaReport {
    let host = k34_minus_edge();
    let edges = host.edges();
    debug_assert_eq!(edges.len(), 11);
    let mut report = LemmaReport {
        colorings: 0,
        red_p3: 0,
        blue_p7: 0,
        counterexamples: 0,
    };
    for mask in 0u32..1 << edges.len() {
        let mut red = Graph::empty(7).expect("7 vertices");
        let mut blue = Graph::empty(7).expect("7 vertices");
        for (bit, &(a, b)) in edges.iter().enumerate() {
            let class = if mask & (1 << bit) != 0 {
                &mut red
            } else {
                &mut blue
            };
            class.add_edge(a, b).expect("host edge");
        }
        let has_red = red.max_degree() >= 2;
        let has_blue = has_path_of_order(&blue, 7).expect("positive order");
        report.colorings += 1;
        report.red_p3 += u64::from(has_red);
        report.blue_p7 += u64::from(has_blue);
        report.counterexamples += u64::from(!has_red && !has_blue);
    }
    report
}
