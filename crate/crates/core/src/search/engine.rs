//! Backtracking over edge colorings of `K_N`.
//!
//! Edges are colored in `edge_index` order, colors tried in increasing label
//! order. After each assignment only the affected color class is re-checked,
//! and only for copies of its pattern that use the new edge.
//!
//! Symmetry reduction keeps exactly the colorings that are lexicographically
//! no larger than their image under a fixed set of symmetries (adjacent vertex
//! transpositions, swaps of colors with identical patterns, and moving any
//! edge onto `(0, 1)`). The lexicographic minimum of every orbit satisfies all
//! of these constraints, so pruning never loses an orbit.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::error::{invalid, Result};
use crate::graph::{
    complete_graph, pair_count, pairs_in_order, EdgeColoring, Pattern, TargetSpec, MAX_VERTICES,
};
use crate::oracles::{matching_through_edge, path_through_edge};

use super::{SearchConfig, SearchOutcome, SearchStats, SymmetryLevel, Verdict};

const CHECK_INTERVAL: u64 = 1 << 12;
const NO_COLOR: u8 = u8::MAX;

/// Searches for a good coloring of `K_n` with respect to `spec`.
pub fn find_good_coloring(
    n: usize,
    spec: &TargetSpec,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    if n == 0 || n > MAX_VERTICES {
        return invalid(format!(
            "vertex count must be in 1..={MAX_VERTICES}, got {n}"
        ));
    }
    if cfg.worker_partition == 0 {
        return invalid("worker_partition must be at least 1");
    }
    let start = Instant::now();
    let problem = Problem::new(n, spec, cfg.symmetry_level);

    // Patterns already present in an edgeless class (only P1) rule out every coloring.
    if spec
        .patterns()
        .iter()
        .any(|p| matches!(p, Pattern::Path(1)))
    {
        return Ok(SearchOutcome {
            verdict: Verdict::Exhausted,
            stats: SearchStats {
                seconds: start.elapsed().as_secs_f64(),
                ..SearchStats::default()
            },
        });
    }

    let shared = Shared {
        deadline: cfg.deadline(start),
        cancelled: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        best_prefix: AtomicUsize::new(usize::MAX),
        next_prefix: AtomicUsize::new(0),
        found: Mutex::new(None),
        deterministic: cfg.deterministic,
    };

    let workers = cfg.worker_partition;
    let stats = if workers == 1 || problem.edges.len() < 4 {
        let mut w = Worker::new(&problem, &shared, None);
        w.run();
        w.stats
    } else {
        let split = (problem.edges.len() / 3).clamp(2, 10);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    let problem = &problem;
                    let shared = &shared;
                    scope.spawn(move || {
                        let mut w = Worker::new(problem, shared, Some(split));
                        w.run();
                        w.stats
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .fold(SearchStats::default(), |acc, s| acc.merged(&s))
        })
    };

    let mut stats = stats;
    stats.seconds = start.elapsed().as_secs_f64();
    let found = shared.found.into_inner().expect("result cell poisoned");
    let verdict = match found {
        Some((_, colors)) => {
            let host = complete_graph(n)?;
            let colors = colors.into_iter().map(Some).collect();
            Verdict::Found(EdgeColoring::from_colors(host, spec.k(), colors)?)
        }
        None if shared.timed_out.load(Ordering::Relaxed) => Verdict::Timeout,
        None => Verdict::Exhausted,
    };
    Ok(SearchOutcome { verdict, stats })
}

/// Immutable description of one search instance.
struct Problem {
    n: usize,
    k: usize,
    edges: Vec<(usize, usize)>,
    patterns: Vec<Pattern>,
    /// For each color, the next lower color with the same pattern.
    twin_below: Vec<Option<u8>>,
    level: SymmetryLevel,
}

impl Problem {
    fn new(n: usize, spec: &TargetSpec, level: SymmetryLevel) -> Self {
        let patterns = spec.patterns().to_vec();
        let twin_below = (0..patterns.len())
            .map(|c| {
                (0..c)
                    .rev()
                    .find(|&d| patterns[d] == patterns[c])
                    .map(|d| d as u8)
            })
            .collect();
        Problem {
            n,
            k: patterns.len(),
            edges: pairs_in_order(n),
            patterns,
            twin_below,
            level,
        }
    }

    #[inline]
    fn rank(&self, i: usize, j: usize) -> usize {
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }
}

struct Shared {
    deadline: Option<Instant>,
    cancelled: AtomicBool,
    timed_out: AtomicBool,
    /// Smallest prefix index that produced a witness (sequential runs use 0).
    best_prefix: AtomicUsize,
    next_prefix: AtomicUsize,
    found: Mutex<Option<(usize, Vec<u8>)>>,
    deterministic: bool,
}

enum Flow {
    Continue,
    Stop,
}

struct Worker<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    colors: Vec<u8>,
    adj: Vec<[u32; MAX_VERTICES]>,
    used: u32,
    stats: SearchStats,
    /// Depth at which prefixes are handed out, when running in parallel.
    split: Option<usize>,
    prefix_seen: usize,
    prefix_claimed: usize,
    current_prefix: usize,
}

impl<'a> Worker<'a> {
    fn new(p: &'a Problem, shared: &'a Shared, split: Option<usize>) -> Self {
        Worker {
            p,
            shared,
            colors: vec![NO_COLOR; pair_count(p.n)],
            adj: vec![[0; MAX_VERTICES]; p.k],
            used: 0,
            stats: SearchStats::default(),
            split,
            prefix_seen: 0,
            prefix_claimed: usize::MAX,
            current_prefix: 0,
        }
    }

    fn run(&mut self) {
        if self.split.is_some() {
            self.prefix_claimed = self.shared.next_prefix.fetch_add(1, Ordering::Relaxed);
        }
        // Every vertex pair (v-1, v) starts tied.
        let tied = crate::graph::full_mask(self.p.n) & !1;
        self.dfs(0, tied);
    }

    fn should_stop(&self) -> bool {
        if self.shared.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if self.shared.deterministic {
            self.shared.best_prefix.load(Ordering::Relaxed) < self.current_prefix
                || (self.split.is_none() && self.shared.cancelled.load(Ordering::Relaxed))
        } else {
            self.shared.cancelled.load(Ordering::Relaxed)
        }
    }

    fn tick(&mut self) -> Flow {
        self.stats.nodes += 1;
        if !self.stats.nodes.is_multiple_of(CHECK_INTERVAL) {
            return Flow::Continue;
        }
        if let Some(deadline) = self.shared.deadline {
            if Instant::now() >= deadline {
                self.shared.timed_out.store(true, Ordering::Relaxed);
            }
        }
        if self.should_stop() {
            Flow::Stop
        } else {
            Flow::Continue
        }
    }

    fn record(&mut self) {
        let mut cell = self.shared.found.lock().expect("result cell poisoned");
        let better = match &*cell {
            None => true,
            Some((idx, _)) => self.current_prefix < *idx,
        };
        if better {
            *cell = Some((self.current_prefix, self.colors.clone()));
            self.shared
                .best_prefix
                .fetch_min(self.current_prefix, Ordering::Relaxed);
        }
        if !self.shared.deterministic || self.split.is_none() {
            self.shared.cancelled.store(true, Ordering::Relaxed);
        }
    }

    fn dfs(&mut self, e: usize, tied: u32) -> Flow {
        if let Flow::Stop = self.tick() {
            return Flow::Stop;
        }
        if let Some(split) = self.split {
            if e == split {
                let idx = self.prefix_seen;
                self.prefix_seen += 1;
                if idx != self.prefix_claimed {
                    return Flow::Continue;
                }
                self.prefix_claimed = self.shared.next_prefix.fetch_add(1, Ordering::Relaxed);
                if self.shared.best_prefix.load(Ordering::Relaxed) < idx {
                    return Flow::Continue;
                }
                self.current_prefix = idx;
            }
        }
        if e == self.p.edges.len() {
            self.record();
            return Flow::Stop;
        }
        let (i, j) = self.p.edges[e];
        for c in 0..self.p.k as u8 {
            let Some(next_tied) = self.symmetry_ok(i, j, c, tied) else {
                self.stats.symmetry_prunes += 1;
                continue;
            };
            self.assign(e, i, j, c);
            if self.creates_pattern(i, j, c) {
                self.unassign(e, i, j, c);
                self.stats.oracle_prunes += 1;
                continue;
            }
            let used_before = self.used;
            self.used |= 1 << c;
            let flow = self.dfs(e + 1, next_tied);
            self.used = used_before;
            self.unassign(e, i, j, c);
            if let Flow::Stop = flow {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    /// Returns the updated tie mask when coloring `(i, j)` with `c` keeps the
    /// partial coloring a candidate orbit minimum.
    #[inline]
    fn symmetry_ok(&self, i: usize, j: usize, c: u8, tied: u32) -> Option<u32> {
        let p = self.p;
        if p.level == SymmetryLevel::None {
            return Some(tied);
        }
        if let Some(twin) = p.twin_below[c as usize] {
            if self.used & (1 << twin) == 0 {
                return None;
            }
        }
        if i > 0 || j > 1 {
            let first = self.colors[0];
            if c < first {
                return None;
            }
        }
        if p.level != SymmetryLevel::VertexOrbits {
            return Some(tied);
        }
        let mut tied = tied;
        // Transposition (j-1, j): position (i, j-1) against (i, j).
        if i + 1 < j && tied & (1 << j) != 0 {
            let x = self.colors[p.rank(i, j - 1)];
            if x > c {
                return None;
            }
            if x < c {
                tied &= !(1 << j);
            }
        }
        // Transposition (i-1, i): position (i-1, j) against (i, j).
        if i > 0 && tied & (1 << i) != 0 {
            let x = self.colors[p.rank(i - 1, j)];
            if x > c {
                return None;
            }
            if x < c {
                tied &= !(1 << i);
            }
        }
        Some(tied)
    }

    /// Whether class `c`, which now contains `(i, j)`, has its pattern through that edge.
    #[inline]
    fn creates_pattern(&self, i: usize, j: usize, c: u8) -> bool {
        let n = self.p.n;
        let adj = &self.adj[c as usize];
        match self.p.patterns[c as usize] {
            Pattern::Path(1) | Pattern::Path(2) | Pattern::Matching(1) => true,
            Pattern::Path(3) => (adj[i] | adj[j]) & !(1 << i) & !(1 << j) != 0,
            Pattern::Path(q) => q <= n && path_through_edge(&adj[..n], i, j, q),
            Pattern::Matching(q) => 2 * q <= n && matching_through_edge(&adj[..n], n, i, j, q),
        }
    }

    #[inline]
    fn assign(&mut self, e: usize, i: usize, j: usize, c: u8) {
        self.colors[e] = c;
        let adj = &mut self.adj[c as usize];
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }

    #[inline]
    fn unassign(&mut self, e: usize, i: usize, j: usize, c: u8) {
        self.colors[e] = NO_COLOR;
        let adj = &mut self.adj[c as usize];
        adj[i] &= !(1 << j);
        adj[j] &= !(1 << i);
    }
}
