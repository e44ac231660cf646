//! Shift graphs `H_m` and the graph algorithms used to audit them.
//!
//! Vertices of `H_m` are the pairs `(i, j)` with `1 <= i < j <= m`, kept in
//! lexicographic order; `(i, j) ~ (k, l)` exactly when `j == k` or `l == i`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A vertex `(i, j)` of `H_m`. The derived ordering is the lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairVertex {
    i: usize,
    j: usize,
}

impl PairVertex {
    pub fn new(i: usize, j: usize, m: usize) -> Result<Self> {
        if i < 1 || i >= j || j > m {
            return Err(Error::InvalidPair { i, j, m });
        }
        Ok(PairVertex { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// The shift rule, symmetric in its arguments.
    pub fn shift_adjacent(&self, other: &PairVertex) -> bool {
        self.j == other.i || other.j == self.i
    }
}

impl fmt::Display for PairVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Number of vertices of `H_m`.
pub fn pair_count(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// 1-based position of `(i, j)` in lexicographic order.
pub fn lex_rank(i: usize, j: usize, m: usize) -> Result<usize> {
    PairVertex::new(i, j, m)?;
    Ok((i - 1) * m - i * (i - 1) / 2 + (j - i))
}

pub fn lex_unrank(rank: usize, m: usize) -> Result<(usize, usize)> {
    let n = pair_count(m);
    if rank < 1 || rank > n {
        return Err(Error::RankOutOfRange { rank, n });
    }
    // Row i holds m - i pairs.
    let mut rest = rank;
    let mut i = 1;
    while rest > m - i {
        rest -= m - i;
        i += 1;
    }
    Ok((i, i + rest))
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds `{u, v}`; loops and duplicates are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        if u == v || self.matrix[u * self.n + v] {
            return;
        }
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }
}

/// A graph whose vertices are labeled by pairs, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairGraph {
    pub m: usize,
    pub vertices: Vec<PairVertex>,
    pub graph: Graph,
}

impl PairGraph {
    /// Edges as label pairs `(u, v)` with `u < v`.
    pub fn labeled_edges(&self) -> BTreeSet<(PairVertex, PairVertex)> {
        self.graph
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (u, v) = (self.vertices[a], self.vertices[b]);
                (u.min(v), u.max(v))
            })
            .collect()
    }

    pub fn index_of(&self, v: &PairVertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }
}

pub type ShiftGraph = PairGraph;

/// All pairs of `1..=m` in lexicographic order.
pub fn lex_pairs(m: usize) -> Vec<PairVertex> {
    (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| PairVertex { i, j }))
        .collect()
}

pub fn build_shift_graph(m: usize) -> Result<ShiftGraph> {
    if m < 2 {
        return Err(Error::OrderTooSmall(m));
    }
    let vertices = lex_pairs(m);
    let mut graph = Graph::empty(vertices.len());
    // (i,j) ~ (j,l): the rank of (j, j+1) starts the block of pairs with first coordinate j.
    for (u, a) in vertices.iter().enumerate() {
        for l in a.j + 1..=m {
            let v = lex_rank(a.j, l, m)? - 1;
            graph.add_edge(u, v);
        }
    }
    Ok(PairGraph { m, vertices, graph })
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

pub fn find_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    for &(u, v) in g.edges() {
        for &w in g.neighbors(u) {
            if w > v && g.has_edge(v, w) {
                return Some((u, v, w));
            }
        }
    }
    None
}

/// Exact clique number by branch and bound over candidate sets.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, candidates: Vec<usize>, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (idx, &v) in candidates.iter().enumerate() {
            if size + candidates.len() - idx <= *best {
                return;
            }
            let next: Vec<usize> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            expand(g, size + 1, next, best);
        }
    }
    let mut best = 0;
    expand(g, 0, (0..g.vertex_count()).collect(), &mut best);
    best
}

/// Color per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn color_count(&self) -> usize {
        self.0.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.0.len() == g.vertex_count() && self.first_conflict(g).is_none()
    }

    pub fn first_conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .iter()
            .copied()
            .find(|&(u, v)| self.0[u] == self.0[v])
    }
}

/// `ceil(log2 m)` for `m >= 1`.
pub fn ceil_log2(m: usize) -> usize {
    assert!(m >= 1);
    (usize::BITS - (m - 1).leading_zeros()) as usize
}

/// Colors `(i, j)` by the highest bit where `i - 1` and `j - 1` differ.
pub fn formula_coloring(m: usize) -> Result<Coloring> {
    if m < 2 {
        return Err(Error::OrderTooSmall(m));
    }
    Ok(Coloring(
        lex_pairs(m)
            .iter()
            .map(|p| {
                let diff = (p.i - 1) ^ (p.j - 1);
                (usize::BITS - 1 - diff.leading_zeros()) as usize
            })
            .collect(),
    ))
}

/// Why `k` colors cannot suffice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// `k = 0` and the graph has a vertex.
    NonEmpty,
    /// `k = 1` and the graph has this edge.
    Edge(usize, usize),
    /// `k = 2` witnessed by an odd closed walk (a cycle through BFS parents).
    OddCycle(Vec<usize>),
    /// `k >= 3`: the backtracking search exhausted every partial coloring.
    Exhausted { k: usize, nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromaticOutcome {
    Determined {
        chi: usize,
        witness: Coloring,
        /// Certificate that `chi - 1` colors are not enough (`None` when `chi == 0`).
        refutation: Option<Refutation>,
        nodes: u64,
    },
    /// The node budget ran out while deciding `k` colors.
    Inconclusive {
        lower_bound: usize,
        upper_bound: Option<usize>,
        nodes: u64,
    },
}

impl ChromaticOutcome {
    pub fn chi(&self) -> Option<usize> {
        match self {
            ChromaticOutcome::Determined { chi, .. } => Some(*chi),
            ChromaticOutcome::Inconclusive { .. } => None,
        }
    }
}

enum KResult {
    Colorable(Coloring),
    Refuted(Refutation),
    OutOfBudget,
}

/// Iterative deepening over `k`: bipartiteness for `k = 2`, DSATUR-ordered
/// backtracking for `k >= 3`. `budget` caps the total number of search nodes.
pub fn chromatic_number_exact(g: &Graph, budget: u64) -> ChromaticOutcome {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaticOutcome::Determined {
            chi: 0,
            witness: Coloring(Vec::new()),
            refutation: None,
            nodes: 0,
        };
    }
    let mut nodes = 0u64;
    let mut last_refutation = Refutation::NonEmpty;
    for k in 1..=n {
        let result = match k {
            1 => match g.edges().iter().next() {
                Some(&(u, v)) => KResult::Refuted(Refutation::Edge(u, v)),
                None => KResult::Colorable(Coloring(vec![0; n])),
            },
            2 => match two_color(g) {
                Ok(c) => KResult::Colorable(c),
                Err(cycle) => KResult::Refuted(Refutation::OddCycle(cycle)),
            },
            _ => {
                let mut search = Dsatur::new(g, k, budget.saturating_sub(nodes));
                let res = search.run();
                nodes += search.nodes;
                res
            }
        };
        match result {
            KResult::Colorable(witness) => {
                return ChromaticOutcome::Determined {
                    chi: k,
                    witness,
                    refutation: Some(last_refutation),
                    nodes,
                }
            }
            KResult::Refuted(r) => last_refutation = r,
            KResult::OutOfBudget => {
                return ChromaticOutcome::Inconclusive {
                    lower_bound: k,
                    upper_bound: dsatur_greedy_upper_bound(g),
                    nodes,
                }
            }
        }
    }
    unreachable!("n colors always suffice")
}

fn two_color(g: &Graph) -> std::result::Result<Coloring, Vec<usize>> {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != usize::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if color[v] == usize::MAX {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return Err(odd_cycle(&parent, u, v));
                }
            }
        }
    }
    Ok(Coloring(color))
}

/// Cycle closed by the monochromatic edge `{u, v}` through BFS-tree paths.
fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path(u);
    let pv = path(v);
    let on_pv: BTreeSet<usize> = pv.iter().copied().collect();
    let lca = *pu.iter().find(|x| on_pv.contains(x)).expect("same BFS tree");
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
    cycle.push(lca);
    let tail: Vec<usize> = pv.iter().copied().take_while(|&x| x != lca).collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

fn dsatur_greedy_upper_bound(g: &Graph) -> Option<usize> {
    let mut s = Dsatur::new(g, g.vertex_count(), u64::MAX);
    match s.greedy() {
        Some(c) => Some(c.color_count()),
        None => None,
    }
}

struct Dsatur<'g> {
    g: &'g Graph,
    k: usize,
    budget: u64,
    nodes: u64,
    color: Vec<Option<usize>>,
    /// `pressure[v * k + c]`: colored neighbors of `v` with color `c`.
    pressure: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, k: usize, budget: u64) -> Self {
        let n = g.vertex_count();
        Dsatur {
            g,
            k,
            budget,
            nodes: 0,
            color: vec![None; n],
            pressure: vec![0; n * k],
            saturation: vec![0; n],
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for &w in self.g.neighbors(v) {
            let slot = &mut self.pressure[w * self.k + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.pressure[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncolored vertex of maximum saturation; ties by degree, then index.
    fn select(&self) -> Option<usize> {
        (0..self.g.vertex_count())
            .filter(|&v| self.color[v].is_none())
            .max_by(|&a, &b| {
                (self.saturation[a], self.g.degree(a), std::cmp::Reverse(a)).cmp(&(
                    self.saturation[b],
                    self.g.degree(b),
                    std::cmp::Reverse(b),
                ))
            })
    }

    fn run(&mut self) -> KResult {
        match self.extend(0) {
            Some(true) => KResult::Colorable(Coloring(
                self.color.iter().map(|c| c.expect("complete")).collect(),
            )),
            Some(false) => KResult::Refuted(Refutation::Exhausted {
                k: self.k,
                nodes: self.nodes,
            }),
            None => KResult::OutOfBudget,
        }
    }

    /// `Some(true)`: completed; `Some(false)`: subtree exhausted; `None`: budget hit.
    /// Colors above `used` are interchangeable, so only one fresh color is tried.
    fn extend(&mut self, used: usize) -> Option<bool> {
        let Some(v) = self.select() else {
            return Some(true);
        };
        if self.saturation[v] >= self.k {
            return Some(false);
        }
        for c in 0..self.k.min(used + 1) {
            if self.pressure[v * self.k + c] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.assign(v, c);
            let res = self.extend(used.max(c + 1));
            match res {
                Some(true) => return res,
                Some(false) => self.unassign(v, c),
                None => return None,
            }
        }
        Some(false)
    }

    /// Plain DSATUR without backtracking.
    fn greedy(&mut self) -> Option<Coloring> {
        while let Some(v) = self.select() {
            let c = (0..self.k).find(|&c| self.pressure[v * self.k + c] == 0)?;
            self.assign(v, c);
        }
        Some(Coloring(self.color.iter().map(|c| c.unwrap()).collect()))
    }
}
