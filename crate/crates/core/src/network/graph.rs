use std::collections::BTreeSet;
use std::io::{self, BufRead, Write};

use rand::Rng;

use crate::error::{Error, Result};
use crate::params::Topology;

/// Undirected simple graph over agent ids `0..N`. Neighbour lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommGraph {
    adjacency: Vec<Vec<usize>>,
}

impl CommGraph {
    /// Build from an edge list, rejecting self-loops, duplicates and isolated nodes.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::domain(format!("edge ({i}, {j}) outside 0..{n}")));
            }
            if i == j {
                return Err(Error::domain(format!("self-loop on node {i}")));
            }
            if !sets[i].insert(j) {
                return Err(Error::domain(format!("duplicate edge ({i}, {j})")));
            }
            sets[j].insert(i);
        }
        let g = CommGraph::from_sets(sets);
        g.check_invariants()?;
        Ok(g)
    }

    fn from_sets(sets: Vec<BTreeSet<usize>>) -> Self {
        CommGraph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency
            .get(i)
            .is_some_and(|nb| nb.binary_search(&j).is_ok())
    }

    /// Full structural check: sorted simple symmetric adjacency, no isolated node.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.len();
        for (i, nb) in self.adjacency.iter().enumerate() {
            if nb.is_empty() {
                return Err(Error::domain(format!("node {i} has no neighbour")));
            }
            if !nb.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::domain(format!("neighbours of {i} not strictly sorted")));
            }
            for &j in nb {
                if j >= n || j == i {
                    return Err(Error::domain(format!("bad neighbour {j} of node {i}")));
                }
                if !self.contains_edge(j, i) {
                    return Err(Error::domain(format!("edge ({i}, {j}) is not symmetric")));
                }
            }
        }
        Ok(())
    }

    /// Write one `i j` line per edge, 0-indexed, `i < j`.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (i, j) in self.edges() {
            writeln!(out, "{i} {j}")?;
        }
        Ok(())
    }

    /// Parse an edge list written by [`CommGraph::write_edge_list`].
    pub fn read_edge_list<R: BufRead>(n: usize, input: R) -> Result<Self> {
        let mut edges = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(i)), Some(Ok(j)), None) => edges.push((i, j)),
                _ => {
                    return Err(Error::Config(format!(
                        "edge list line {}: expected two node ids, got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        CommGraph::from_edges(n, edges)
    }
}

/// Cycle where node `i` links to `i - 1` and `i + 1` modulo `n`.
pub fn ring(n: usize) -> Result<CommGraph> {
    if n < 3 {
        return Err(Error::domain(format!("a ring needs at least 3 nodes, got {n}")));
    }
    Ok(lattice(n, 2))
}

fn lattice_sets(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    let mut sets = vec![BTreeSet::new(); n];
    for u in 0..n {
        for j in 1..=k / 2 {
            let v = (u + j) % n;
            sets[u].insert(v);
            sets[v].insert(u);
        }
    }
    sets
}

fn lattice(n: usize, k: usize) -> CommGraph {
    CommGraph::from_sets(lattice_sets(n, k))
}

/// Ring lattice of degree `k` whose clockwise edges are each rewired with
/// probability `beta`. A rewire keeps the near endpoint and moves the far one
/// to a uniformly chosen node that is neither the near endpoint nor already
/// adjacent to it; with no such node the edge stays put.
pub fn watts_strogatz<R: Rng + ?Sized>(n: usize, k: usize, beta: f64, rng: &mut R) -> Result<CommGraph> {
    if k == 0 || k % 2 != 0 || k >= n {
        return Err(Error::domain(format!(
            "Watts-Strogatz needs an even degree 0 < K < N, got K={k}, N={n}"
        )));
    }
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::domain(format!("rewiring probability {beta} outside [0, 1]")));
    }
    let mut sets = lattice_sets(n, k);
    let mut candidates = Vec::with_capacity(n);
    for j in 1..=k / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            if rng.gen::<f64>() >= beta {
                continue;
            }
            if !sets[u].contains(&v) {
                continue;
            }
            candidates.clear();
            candidates.extend((0..n).filter(|&w| w != u && !sets[u].contains(&w)));
            if candidates.is_empty() {
                continue;
            }
            let w = candidates[rng.gen_range(0..candidates.len())];
            sets[u].remove(&v);
            sets[v].remove(&u);
            sets[u].insert(w);
            sets[w].insert(u);
        }
    }
    Ok(CommGraph::from_sets(sets))
}

/// Preferential attachment grown from a complete graph on `m + 1` nodes.
/// Each new node links to `m` distinct existing nodes, each picked with
/// probability proportional to its current degree.
pub fn barabasi_albert<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<CommGraph> {
    if m == 0 || m >= n {
        return Err(Error::domain(format!(
            "Barabasi-Albert needs 1 <= m < N, got m={m}, N={n}"
        )));
    }
    let mut sets = vec![BTreeSet::new(); n];
    // one entry per edge endpoint, so a uniform pick is degree-proportional
    let mut endpoints = Vec::with_capacity(2 * (m * (m + 1) / 2 + m * (n - m - 1)));
    for u in 0..=m {
        for v in (u + 1)..=m {
            sets[u].insert(v);
            sets[v].insert(u);
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut chosen = BTreeSet::new();
    for new in (m + 1)..n {
        chosen.clear();
        while chosen.len() < m {
            chosen.insert(endpoints[rng.gen_range(0..endpoints.len())]);
        }
        for &t in &chosen {
            sets[new].insert(t);
            sets[t].insert(new);
            endpoints.push(t);
            endpoints.push(new);
        }
    }
    Ok(CommGraph::from_sets(sets))
}

/// Build the graph described by `topology` on `n` nodes.
pub fn build<R: Rng + ?Sized>(topology: Topology, n: usize, rng: &mut R) -> Result<CommGraph> {
    match topology {
        Topology::Ring => ring(n),
        Topology::WattsStrogatz { k, beta } => watts_strogatz(n, k, beta, rng),
        Topology::BarabasiAlbert { m } => barabasi_albert(n, m, rng),
    }
}
