//! Bitset graphs, seeded G(n,1/2) sampling, clique counting, and the
//! clique-degree function that defines the certificate.
//!
//! All randomness in the crate flows through [`SplitMix64`], a fixed,
//! documented 64-bit generator, so that identical seeds give bit-identical
//! graphs on every platform and in every implementation of this format.

use num_bigint::BigInt;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use crate::combinat::{binom, pow2, BigRational};
use crate::{Error, Result};

/// SplitMix64: the 64-bit generator used for every sampling decision.
///
/// State update and output finalizer follow the reference constants:
/// state advances by `0x9E3779B97F4A7C15` per draw, and the output is the
/// xor-shift/multiply finalizer with `0xBF58476D1CE4E5B9` and
/// `0x94D049BB133111EB`.  Seeded with 0, the first outputs are
/// `0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

const SM64_GAMMA: u64 = 0x9E3779B97F4A7C15;

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(SM64_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` by rejection, bias-free.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "next_below requires a positive bound");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

/// Per-trial seed derivation: trial `t` uses the `(t+1)`-th output of
/// SplitMix64 seeded with the master seed, computed in closed form.  Trials
/// therefore consume disjoint, documented seed streams regardless of the
/// order or parallelism in which they run.
pub fn mix_seed(master_seed: u64, trial: u64) -> u64 {
    let mut z = master_seed.wrapping_add(trial.wrapping_add(1).wrapping_mul(SM64_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Fixed-capacity bitset over vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    n: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// All of `0..n` set.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            *w = if lo + 64 <= n {
                u64::MAX
            } else {
                (1u64 << (n - lo)) - 1
            };
        }
        s
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = Self::new(n);
        for &v in indices {
            s.set(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn set(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn clear(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Keep only bits strictly greater than `v`.
    pub fn retain_above(&mut self, v: usize) {
        let word = v / 64;
        for w in &mut self.words[..word] {
            *w = 0;
        }
        if v % 64 == 63 {
            self.words[word] = 0;
        } else {
            self.words[word] &= !((1u64 << (v % 64 + 1)) - 1);
        }
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Set bits in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.ones().collect()
    }
}

/// Undirected graph on `n` vertices as one adjacency bitset per vertex.
/// Symmetric, zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

/// Clique count of one size together with its G(n,1/2) mean.
#[derive(Debug, Clone)]
pub struct CliqueStats {
    pub a: usize,
    pub count: BigInt,
    /// `2^{-C(a,2)} * C(n,a)`, the exact mean over G(n,1/2).
    pub expected: BigRational,
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("graph needs at least one vertex".into()));
        }
        Ok(Self {
            n,
            adj: vec![BitSet::new(n); n],
        })
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::new(n)?;
        for u in 0..n {
            g.adj[u] = BitSet::full(n);
            g.adj[u].clear(u);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v, "no self loops");
        assert!(u < self.n && v < self.n, "vertex out of range");
        if present {
            self.adj[u].set(v);
            self.adj[v].set(u);
        } else {
            self.adj[u].clear(v);
            self.adj[v].clear(u);
        }
    }

    /// Adjacency bitset of `u`.
    pub fn neighbors(&self, u: usize) -> &BitSet {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].ones() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_clique(&self, verts: &[usize]) -> bool {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices outside `set` adjacent to every vertex of `set`; the empty
    /// set yields all vertices.
    ///
    /// # Panics
    /// If a vertex of `set` is out of range.
    pub fn common_neighbors(&self, set: &[usize]) -> Vec<usize> {
        self.common_neighbors_mask(set).to_vec()
    }

    /// Bitset form of [`Graph::common_neighbors`].
    pub fn common_neighbors_mask(&self, set: &[usize]) -> BitSet {
        let mut mask = BitSet::full(self.n);
        for &v in set {
            assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
            mask.and_assign(&self.adj[v]);
        }
        for &v in set {
            mask.clear(v);
        }
        mask
    }

    /// Exact number of `a`-cliques, `N_a(G)`; `N_0 = 1`, `N_1 = n`, and zero
    /// for `a > n`.
    pub fn count_cliques(&self, a: usize) -> BigInt {
        BigInt::from(self.count_cliques_in(&BitSet::full(self.n), a))
    }

    /// Number of `a`-cliques whose vertices all lie in `mask`.
    pub fn count_cliques_in(&self, mask: &BitSet, a: usize) -> u128 {
        self.count_rec(mask.clone(), a)
    }

    fn count_rec(&self, cand: BitSet, remaining: usize) -> u128 {
        if remaining == 0 {
            return 1;
        }
        let c = cand.count();
        if c < remaining {
            return 0;
        }
        if remaining == 1 {
            return c as u128;
        }
        let mut acc: u128 = 0;
        for v in cand.to_vec() {
            let mut next = cand.clone();
            next.and_assign(&self.adj[v]);
            next.retain_above(v);
            acc += self.count_rec(next, remaining - 1);
        }
        acc
    }

    /// `deg_G(I)`: the number of 2r-vertex cliques containing `I`.  Zero when
    /// `I` is not itself a clique; otherwise the number of `(2r-|I|)`-cliques
    /// inside the common neighborhood of `I`, which is the same count at a
    /// fraction of the enumeration cost.
    pub fn clique_degree(&self, set: &[usize], r: usize) -> Result<BigInt> {
        if set.len() > 2 * r {
            return Err(Error::InvalidInput(format!(
                "set of size {} exceeds 2r = {}",
                set.len(),
                2 * r
            )));
        }
        for (i, &v) in set.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range 0..{}",
                    self.n
                )));
            }
            if set[..i].contains(&v) {
                return Err(Error::InvalidInput(format!("repeated vertex {v}")));
            }
        }
        if !self.is_clique(set) {
            return Ok(BigInt::from(0));
        }
        let mask = self.common_neighbors_mask(set);
        Ok(BigInt::from(self.count_cliques_in(&mask, 2 * r - set.len())))
    }

    /// Clique count of size `a` together with its exact G(n,1/2) mean.
    pub fn clique_stats(&self, a: usize) -> CliqueStats {
        let expected = pow2(-((a as i64) * (a as i64 - 1) / 2))
            * BigRational::from_integer(binom(self.n, a));
        CliqueStats {
            a,
            count: self.count_cliques(a),
            expected,
        }
    }
}

/// Samples G(n, 1/2) deterministically from a seed.
///
/// One SplitMix64 output is consumed per unordered pair, pairs taken in
/// colexicographic order (`{0,1}, {0,2}, {1,2}, {0,3}, ...`), and the edge is
/// present iff the least significant bit of that output is one.
pub fn sample_gnp_half(n: usize, seed: u64) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    let mut rng = SplitMix64::new(seed);
    for v in 1..n {
        for u in 0..v {
            if rng.next_u64() & 1 == 1 {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok(g)
}

/// Completes a uniformly random k-subset of vertices into a clique, leaving
/// all other pairs unchanged.  The subset is drawn from `seed` by a partial
/// Fisher-Yates shuffle over `0..n` using SplitMix64.
pub fn plant_clique(graph: &Graph, k: usize, seed: u64) -> Result<Graph> {
    let n = graph.n;
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!(
            "clique size {k} outside 1..={n}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + rng.next_below((n - i) as u64) as usize;
        perm.swap(i, j);
    }
    let mut g = graph.clone();
    for i in 0..k {
        for j in i + 1..k {
            g.set_edge(perm[i], perm[j], true);
        }
    }
    Ok(g)
}

/// Hard cap for exhaustive graph enumeration: 2^15 graphs at n = 6.
pub const ENUMERATION_CAP: usize = 6;

/// All 2^{C(n,2)} labeled graphs on `n` vertices, in edge-bitmask order: bit
/// `p` of the mask is the edge whose pair has colex rank `p`.
pub fn enumerate_all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::Capacity(format!(
            "exhaustive enumeration supports 1..={ENUMERATION_CAP} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = {
        let mut p = Vec::new();
        for v in 1..n {
            for u in 0..v {
                p.push((u, v));
            }
        }
        p
    };
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut g = Graph::new(n).expect("n >= 1");
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.set_edge(u, v, true);
            }
        }
        g
    }))
}

impl Graph {
    /// Writes the text format: `n m` on the first line, then `m` lines `u v`
    /// with `u < v`, sorted, and a trailing newline.
    pub fn to_writer<W: Write>(&self, w: &mut W) -> Result<()> {
        let edges = self.edges();
        writeln!(w, "{} {}", self.n, edges.len())?;
        for (u, v) in edges {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn to_file<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        self.to_writer(&mut f)
    }

    /// Reads the text format back; rejects anything that would not have been
    /// produced by [`Graph::to_writer`], so read-write round trips bit-exactly.
    pub fn from_reader<R: Read>(r: R) -> Result<Self> {
        let mut lines = BufReader::new(r).lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))??;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad vertex count".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad edge count".into()))?;
        if it.next().is_some() {
            return Err(Error::Parse("trailing tokens on header line".into()));
        }
        let mut g = Graph::new(n)?;
        let mut prev: Option<(usize, usize)> = None;
        let mut count = 0usize;
        for line in lines {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("trailing tokens on {line:?}")));
            }
            if u >= v {
                return Err(Error::Parse(format!("edge {u} {v} not in u < v form")));
            }
            if v >= n {
                return Err(Error::Parse(format!("edge {u} {v} out of range")));
            }
            if let Some(p) = prev {
                if (u, v) <= p {
                    return Err(Error::Parse(format!("edge {u} {v} out of order")));
                }
            }
            prev = Some((u, v));
            g.set_edge(u, v, true);
            count += 1;
        }
        if count != m {
            return Err(Error::Parse(format!(
                "header promises {m} edges, file has {count}"
            )));
        }
        Ok(g)
    }

    pub fn from_file<P: AsRef<Path>>(path: P) -> Result<Self> {
        Self::from_reader(std::fs::File::open(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rat;
    use num_traits::Zero;

    #[test]
    fn splitmix64_reference_vectors() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220A8397B1DCDAF);
        assert_eq!(rng.next_u64(), 0x6E789E6AA1B965F4);
        assert_eq!(rng.next_u64(), 0x06C45D188009454F);
        let mut rng = SplitMix64::new(42);
        assert_eq!(rng.next_u64(), 0xBDD732262FEB6E95);
    }

    #[test]
    fn mix_seed_is_the_output_stream() {
        let mut rng = SplitMix64::new(99);
        for t in 0..10 {
            assert_eq!(mix_seed(99, t), rng.next_u64());
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_gnp_half(5, 7).unwrap();
        let b = sample_gnp_half(5, 7).unwrap();
        assert_eq!(a, b);
        assert!(sample_gnp_half(0, 7).is_err());
        let single = sample_gnp_half(1, 123).unwrap();
        assert_eq!(single.edge_count(), 0);
    }

    #[test]
    fn sampled_edge_count_is_plausible() {
        // Mean C(1000,2)/2 = 249750, sigma = sqrt(C(1000,2))/2 ~ 353.4.
        let g = sample_gnp_half(1000, 20240817).unwrap();
        let m = g.edge_count() as f64;
        assert!((m - 249750.0).abs() < 5.0 * 353.5, "edge count {m}");
    }

    #[test]
    fn plant_clique_completes_a_k_set() {
        let base = Graph::new(4).unwrap();
        let planted = plant_clique(&base, 4, 3).unwrap();
        assert_eq!(planted.edge_count(), 6);

        let g = sample_gnp_half(50, 11).unwrap();
        let p = plant_clique(&g, 10, 12).unwrap();
        // The planted set is a 10-clique, so some 10-clique exists.
        assert!(p.count_cliques(10) > BigInt::zero());
        // k = 1 adds nothing.
        assert_eq!(plant_clique(&g, 1, 5).unwrap(), g);
        assert!(plant_clique(&g, 51, 5).is_err());
        assert!(plant_clique(&g, 0, 5).is_err());
    }

    #[test]
    fn common_neighbors_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.common_neighbors(&[0, 1]), vec![2, 3, 4]);
        let empty = Graph::new(3).unwrap();
        assert!(empty.common_neighbors(&[0]).is_empty());
        let mut c4 = Graph::new(4).unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
            c4.set_edge(u, v, true);
        }
        assert_eq!(c4.common_neighbors(&[0, 2]), vec![1, 3]);
        assert_eq!(c4.common_neighbors(&[]), vec![0, 1, 2, 3]);
    }

    #[test]
    fn clique_count_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.count_cliques(3), BigInt::from(10));
        assert_eq!(k5.count_cliques(0), BigInt::from(1));
        assert_eq!(k5.count_cliques(1), BigInt::from(5));
        assert_eq!(k5.count_cliques(6), BigInt::zero());

        let mut c4 = Graph::new(4).unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
            c4.set_edge(u, v, true);
        }
        assert_eq!(c4.count_cliques(3), BigInt::zero());

        // Petersen graph: vertices 0..5 the outer cycle, 5..10 the inner
        // star, spokes i -- i+5.
        let mut pet = Graph::new(10).unwrap();
        for i in 0..5 {
            pet.set_edge(i, (i + 1) % 5, true);
            pet.set_edge(5 + i, 5 + (i + 2) % 5, true);
            pet.set_edge(i, i + 5, true);
        }
        assert_eq!(pet.count_cliques(2), BigInt::from(15));
        assert_eq!(pet.count_cliques(3), BigInt::zero());
    }

    #[test]
    fn clique_degree_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.clique_degree(&[0], 1).unwrap(), BigInt::from(4));
        assert_eq!(k5.clique_degree(&[], 2).unwrap(), BigInt::from(5));
        let mut c4 = Graph::new(4).unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
            c4.set_edge(u, v, true);
        }
        assert_eq!(c4.clique_degree(&[0, 1], 1).unwrap(), BigInt::from(1));
        assert!(c4.clique_degree(&[0, 1, 2], 1).is_err());
        assert!(c4.clique_degree(&[0, 0], 2).is_err());
    }

    #[test]
    fn degree_recurrence_and_total() {
        // (2r - |I|) deg(I) = sum_{j not in I} deg(I u {j}) for cliques I,
        // and deg(empty) = N_{2r}(G), exactly.
        for seed in 0..8 {
            let g = sample_gnp_half(8, seed).unwrap();
            for r in 1..=2usize {
                assert_eq!(g.clique_degree(&[], r).unwrap(), g.count_cliques(2 * r));
                for size in 0..2 * r {
                    let ix = crate::combinat::SubsetIndexer::new(8, size).unwrap();
                    for set in ix.iter() {
                        if !g.is_clique(&set) {
                            continue;
                        }
                        let lhs = BigInt::from((2 * r - size) as u64)
                            * g.clique_degree(&set, r).unwrap();
                        let mut rhs = BigInt::zero();
                        for j in 0..8 {
                            if !set.contains(&j) {
                                let mut sup = set.clone();
                                sup.push(j);
                                sup.sort_unstable();
                                rhs += g.clique_degree(&sup, r).unwrap();
                            }
                        }
                        assert_eq!(lhs, rhs, "seed {seed} r {r} set {set:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_exhaustive_and_ordered() {
        assert_eq!(enumerate_all_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_all_graphs(4).unwrap().count(), 64);
        assert!(enumerate_all_graphs(7).is_err());
        // Exactly one graph on 3 vertices has a triangle.
        let triangles = enumerate_all_graphs(3)
            .unwrap()
            .filter(|g| g.count_cliques(3) == BigInt::from(1))
            .count();
        assert_eq!(triangles, 1);
    }

    #[test]
    fn average_clique_count_matches_mean() {
        // Exact average of N_a over all graphs equals 2^{-C(a,2)} C(n,a).
        for n in 1..=5usize {
            for a in 0..=4usize.min(n) {
                let mut acc = BigInt::zero();
                let mut graphs = 0u64;
                for g in enumerate_all_graphs(n).unwrap() {
                    acc += g.count_cliques(a);
                    graphs += 1;
                }
                let avg = BigRational::new(acc, BigInt::from(graphs));
                let expect = Graph::new(n).unwrap().clique_stats(a).expected;
                assert_eq!(avg, expect, "n {n} a {a}");
            }
        }
    }

    #[test]
    fn clique_stats_expected_value() {
        let g = Graph::new(4).unwrap();
        let st = g.clique_stats(2);
        assert_eq!(st.expected, rat(3));
        assert_eq!(st.count, BigInt::zero());
    }

    #[test]
    fn file_format_round_trips() {
        let g = sample_gnp_half(9, 31).unwrap();
        let mut buf = Vec::new();
        g.to_writer(&mut buf).unwrap();
        let back = Graph::from_reader(&buf[..]).unwrap();
        assert_eq!(g, back);
        let mut buf2 = Vec::new();
        back.to_writer(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
        assert!(buf.ends_with(b"\n"));
    }

    #[test]
    fn file_format_rejects_malformed_input() {
        assert!(Graph::from_reader(&b""[..]).is_err());
        assert!(Graph::from_reader(&b"3 1\n"[..]).is_err());
        assert!(Graph::from_reader(&b"3 1\n1 0\n"[..]).is_err());
        assert!(Graph::from_reader(&b"3 2\n0 1\n0 1\n"[..]).is_err());
        assert!(Graph::from_reader(&b"3 1\n0 3\n"[..]).is_err());
        assert!(Graph::from_reader(&b"3 2\n0 2\n0 1\n"[..]).is_err());
    }

    #[test]
    fn bitset_operations() {
        let mut s = BitSet::from_indices(130, &[0, 63, 64, 129]);
        assert_eq!(s.count(), 4);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        s.retain_above(63);
        assert_eq!(s.to_vec(), vec![64, 129]);
        let full = BitSet::full(130);
        assert_eq!(full.count(), 130);
        assert!(s.is_disjoint(&BitSet::from_indices(130, &[1, 63])));
    }
}
