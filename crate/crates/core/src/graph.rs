//! Compact undirected graphs and exact unweighted distance sums.
//!
//! A [`Graph`] is stored in CSR form with every neighbor list sorted, so two
//! graphs built from the same edge set compare equal regardless of input
//! order. All distance sums are `i64`.

use rayon::prelude::*;
use thiserror::Error;

/// Vertex identifier, always in `0..order`.
pub type Vertex = usize;

const UNSEEN: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    OutOfRange { u: usize, v: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: Vertex, unreachable: Vertex },
    #[error("vertex {vertex} out of range for graph of order {order}")]
    NoSuchVertex { vertex: Vertex, order: usize },
}

/// Simple undirected graph on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

/// Hop distances from one source. `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: Vertex,
    pub dist: Vec<Option<u32>>,
}

impl DistanceRow {
    /// Sum of finite distances, or the first unreachable vertex.
    pub fn total(&self) -> Result<i64, GraphError> {
        self.dist
            .iter()
            .enumerate()
            .try_fold(0i64, |acc, (v, d)| match d {
                Some(d) => Ok(acc + i64::from(*d)),
                None => Err(GraphError::Disconnected {
                    from: self.source,
                    unreachable: v,
                }),
            })
    }
}

impl Graph {
    /// Builds the canonical graph for an edge list. Duplicates and reversed
    /// pairs collapse to one edge.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        assert!(order < UNSEEN as usize, "order {order} too large");
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::OutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            pairs.push((u as u32, v as u32));
            pairs.push((v as u32, u as u32));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; order + 1];
        for &(u, _) in &pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..order {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Self { offsets, targets })
    }

    /// Cycle `C_n` with edges `(i, i+1 mod n)`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("valid complete graph")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.targets[self.offsets[v]..self.offsets[v + 1]]
            .iter()
            .map(|&u| u as usize)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.targets[self.offsets[u]..self.offsets[u + 1]]
            .binary_search(&(v as u32))
            .is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// BFS into caller-owned scratch space. Returns the distance sum and the
    /// number of vertices reached (including the source).
    fn bfs_sum(&self, source: Vertex, dist: &mut [u32], queue: &mut Vec<u32>) -> (i64, usize) {
        dist.fill(UNSEEN);
        queue.clear();
        dist[source] = 0;
        queue.push(source as u32);
        let mut head = 0;
        let mut sum = 0i64;
        while head < queue.len() {
            let u = queue[head] as usize;
            head += 1;
            let du = dist[u];
            sum += i64::from(du);
            for &w in &self.targets[self.offsets[u]..self.offsets[u + 1]] {
                let slot = &mut dist[w as usize];
                if *slot == UNSEEN {
                    *slot = du + 1;
                    queue.push(w);
                }
            }
        }
        (sum, queue.len())
    }

    pub fn bfs_distances(&self, source: Vertex) -> Result<DistanceRow, GraphError> {
        self.check_vertex(source)?;
        let mut dist = vec![UNSEEN; self.order()];
        let mut queue = Vec::with_capacity(self.order());
        self.bfs_sum(source, &mut dist, &mut queue);
        Ok(DistanceRow {
            source,
            dist: dist
                .into_iter()
                .map(|d| (d != UNSEEN).then_some(d))
                .collect(),
        })
    }

    /// `tr(v)`: sum of distances from `v` to every vertex.
    pub fn transmission(&self, v: Vertex) -> Result<i64, GraphError> {
        self.bfs_distances(v)?.total()
    }

    pub fn is_connected(&self) -> bool {
        if self.order() <= 1 {
            return true;
        }
        let mut dist = vec![UNSEEN; self.order()];
        let mut queue = Vec::with_capacity(self.order());
        self.bfs_sum(0, &mut dist, &mut queue).1 == self.order()
    }

    fn first_unreachable(&self, source: Vertex) -> GraphError {
        let row = self.bfs_distances(source).expect("source in range");
        let unreachable = row
            .dist
            .iter()
            .position(Option::is_none)
            .expect("caller saw a short BFS");
        GraphError::Disconnected {
            from: source,
            unreachable,
        }
    }

    /// Transmissions of every vertex, one plain BFS per source.
    pub fn all_transmissions_naive(&self) -> Result<Vec<i64>, GraphError> {
        let order = self.order();
        let sums: Vec<(i64, usize)> = (0..order)
            .into_par_iter()
            .map_init(
                || (vec![UNSEEN; order], Vec::with_capacity(order)),
                |(dist, queue), s| self.bfs_sum(s, dist, queue),
            )
            .collect();
        sums.into_iter()
            .enumerate()
            .map(|(s, (sum, reached))| {
                if reached == order {
                    Ok(sum)
                } else {
                    Err(self.first_unreachable(s))
                }
            })
            .collect()
    }

    /// Transmissions of every vertex using a level-synchronous sweep that
    /// advances 64 sources at once, one bit per source.
    pub fn all_transmissions_bitparallel(&self) -> Result<Vec<i64>, GraphError> {
        let order = self.order();
        if order == 0 {
            return Ok(Vec::new());
        }
        let batches: Vec<usize> = (0..order).step_by(64).collect();
        let results: Vec<(Vec<i64>, Option<Vertex>)> = batches
            .into_par_iter()
            .map(|start| self.bitparallel_batch(start, (start + 64).min(order)))
            .collect();

        let mut out = Vec::with_capacity(order);
        for (start, (sums, short)) in (0..order).step_by(64).zip(results) {
            if let Some(lane) = short {
                return Err(self.first_unreachable(start + lane));
            }
            out.extend(sums);
        }
        Ok(out)
    }

    fn bitparallel_batch(&self, start: usize, end: usize) -> (Vec<i64>, Option<usize>) {
        let order = self.order();
        let lanes = end - start;
        let full: u64 = if lanes == 64 { !0 } else { (1u64 << lanes) - 1 };
        let mut seen = vec![0u64; order];
        let mut frontier = vec![0u64; order];
        let mut next = vec![0u64; order];
        for (lane, s) in (start..end).enumerate() {
            seen[s] |= 1 << lane;
            frontier[s] |= 1 << lane;
        }
        let mut sums = vec![0i64; lanes];
        let mut level = 0i64;
        loop {
            level += 1;
            let mut any = false;
            for v in 0..order {
                let mut reach = 0u64;
                for &u in &self.targets[self.offsets[v]..self.offsets[v + 1]] {
                    reach |= frontier[u as usize];
                }
                let fresh = reach & !seen[v];
                next[v] = fresh;
                if fresh != 0 {
                    any = true;
                    seen[v] |= fresh;
                    let mut bits = fresh;
                    while bits != 0 {
                        sums[bits.trailing_zeros() as usize] += level;
                        bits &= bits - 1;
                    }
                }
            }
            if !any {
                break;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        let missing = seen.iter().fold(0u64, |acc, &m| acc | (full & !m));
        let short = (missing != 0).then(|| missing.trailing_zeros() as usize);
        (sums, short)
    }

    /// `tr(v)` for every vertex. Errors if the graph is disconnected.
    ///
    /// Uses the bit-parallel sweep; `all_transmissions_naive` is the oracle.
    pub fn all_transmissions(&self) -> Result<Vec<i64>, GraphError> {
        self.all_transmissions_bitparallel()
    }

    /// Wiener index: sum of distances over unordered vertex pairs.
    pub fn wiener(&self) -> Result<i64, GraphError> {
        let total: i64 = self.all_transmissions()?.into_iter().sum();
        debug_assert!(total % 2 == 0);
        Ok(total / 2)
    }

    /// `G - v`. Vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: Vertex) -> Graph {
        let order = self.order();
        assert!(v < order, "vertex {v} out of range for order {order}");
        let relabel = |u: usize| if u > v { u - 1 } else { u };
        let mut offsets = Vec::with_capacity(order);
        let mut targets = Vec::with_capacity(self.targets.len() - 2 * self.degree(v));
        offsets.push(0);
        for u in (0..order).filter(|&u| u != v) {
            targets.extend(
                self.neighbors(u)
                    .filter(|&w| w != v)
                    .map(|w| relabel(w) as u32),
            );
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    /// Returns true when `perm` maps every edge onto an edge.
    pub fn is_automorphism(&self, perm: &[Vertex]) -> bool {
        perm.len() == self.order()
            && self.edges().all(|(u, v)| {
                perm[u] < self.order() && perm[v] < self.order() && self.has_edge(perm[u], perm[v])
            })
    }
}
