//! Pebble configurations: per-vertex counts with componentwise arithmetic,
//! predicates, streaming enumeration and homomorphic images.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Pebble counts in vertex order. Carries no graph reference; pairing is by
/// length and validated at call sites. The derived order (lexicographic on
/// counts) is the canonical total order used for deterministic iteration.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    counts: Vec<u32>,
}

impl Serialize for Configuration {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Configuration::parse(&s).map_err(D::Error::custom)
    }
}

impl Configuration {
    pub fn new(counts: Vec<u32>) -> Self {
        Configuration { counts }
    }

    pub fn zero(n: usize) -> Self {
        Configuration {
            counts: vec![0; n],
        }
    }

    /// The unit configuration: one pebble at `v`.
    pub fn unit(n: usize, v: usize) -> Self {
        let mut counts = vec![0; n];
        counts[v] = 1;
        Configuration { counts }
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Total number of pebbles.
    pub fn norm(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// Occupied vertices, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.counts.len())
            .filter(|&v| self.counts[v] > 0)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    fn check_len(&self, other: &Configuration) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                got: other.len(),
                expected: self.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Configuration) -> Result<Configuration> {
        self.check_len(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Configuration { counts })
    }

    /// Componentwise subtraction; errors if any count would go negative.
    pub fn sub(&self, other: &Configuration) -> Result<Configuration> {
        self.check_len(other)?;
        let mut counts = Vec::with_capacity(self.len());
        for (v, (&a, &b)) in self.counts.iter().zip(&other.counts).enumerate() {
            counts.push(a.checked_sub(b).ok_or(Error::NegativeCount(v))?);
        }
        Ok(Configuration { counts })
    }

    pub fn scale(&self, m: u32) -> Result<Configuration> {
        let counts = self
            .counts
            .iter()
            .map(|&a| a.checked_mul(m).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Configuration { counts })
    }

    /// Zero all counts outside `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Configuration {
        let mut counts = vec![0; self.len()];
        for &v in subset {
            counts[v] = self.counts[v];
        }
        Configuration { counts }
    }

    /// All pebbles on one vertex.
    pub fn is_stacked(&self) -> bool {
        self.support_size() == 1
    }

    /// The stack vertex, when stacked.
    pub fn stacked_at(&self) -> Option<usize> {
        let supp = self.support();
        if supp.len() == 1 {
            Some(supp[0])
        } else {
            None
        }
    }

    /// Exactly one pebble in total.
    pub fn is_cleared(&self) -> bool {
        self.norm() == 1
    }

    /// At most one pebble everywhere except possibly one vertex. Returns an
    /// admissible center: the unique heavy vertex when one exists, otherwise
    /// the smallest support vertex (0 for the zero configuration).
    pub fn almost_stacked_at(&self) -> Option<usize> {
        let heavy: Vec<usize> = (0..self.len()).filter(|&v| self.counts[v] >= 2).collect();
        match heavy.len() {
            0 => Some(self.support().first().copied().unwrap_or(0)),
            1 => Some(heavy[0]),
            _ => None,
        }
    }

    pub fn is_almost_stacked(&self) -> bool {
        self.almost_stacked_at().is_some()
    }

    /// Signed pebble sum across a bipartition: side-0 total minus side-1
    /// total. The sign depends on the fixed bipartition.
    pub fn imbalance(&self, b: &Bipartition) -> i64 {
        debug_assert_eq!(b.len(), self.len());
        self.counts
            .iter()
            .enumerate()
            .map(|(v, &c)| {
                if b.side(v) == 0 {
                    c as i64
                } else {
                    -(c as i64)
                }
            })
            .sum()
    }

    /// Image under a vertex map: fiber sums on the target graph.
    pub fn pushforward(&self, map: &VertexMap) -> Result<Configuration> {
        if map.source_len() != self.len() {
            return Err(Error::LengthMismatch {
                got: self.len(),
                expected: map.source_len(),
            });
        }
        let mut counts = vec![0u32; map.target_len()];
        for (v, &c) in self.counts.iter().enumerate() {
            let w = map.image(v);
            counts[w] = counts[w].checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(Configuration { counts })
    }

    /// Parse comma-separated counts in vertex order, e.g. `13,0,0,1`.
    pub fn parse(s: &str) -> Result<Configuration> {
        let counts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::ConfigParse(format!("bad count {tok:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(Configuration { counts })
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// A vertex map between two graphs that sends every source edge to a target
/// edge (a graph homomorphism; it never collapses an edge).
#[derive(Debug, Clone)]
pub struct VertexMap {
    image: Vec<usize>,
    target_len: usize,
}

impl VertexMap {
    /// Validates the homomorphism property against the two graphs.
    pub fn new(source: &Graph, target: &Graph, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.n() {
            return Err(Error::LengthMismatch {
                got: image.len(),
                expected: source.n(),
            });
        }
        for &w in &image {
            if w >= target.n() {
                return Err(Error::VertexOutOfRange {
                    index: w,
                    n: target.n(),
                });
            }
        }
        for &(u, v) in source.edges() {
            if !target.has_edge(image[u], image[v]) {
                return Err(Error::NotHomomorphism { u, v });
            }
        }
        Ok(VertexMap {
            image,
            target_len: target.n(),
        })
    }

    pub fn identity(g: &Graph) -> Self {
        VertexMap {
            image: (0..g.n()).collect(),
            target_len: g.n(),
        }
    }

    /// The fold of an even cycle C_{2n} onto P_{n+1}: v_i maps to v_i for
    /// i <= n, and v_{n+i} maps to v_{n-i} (0-indexed vertices).
    pub fn cycle_fold(two_n: usize) -> Result<(Graph, Graph, VertexMap)> {
        if two_n < 4 || two_n % 2 != 0 {
            return Err(Error::InvalidFamily(format!(
                "cycle fold needs an even cycle length >= 4, got {two_n}"
            )));
        }
        let n = two_n / 2;
        let cycle = Graph::cycle(two_n)?;
        let path = Graph::path(n + 1)?;
        let image: Vec<usize> = (0..two_n)
            .map(|i| if i <= n { i } else { two_n - i })
            .collect();
        let map = VertexMap::new(&cycle, &path, image)?;
        Ok((cycle, path, map))
    }

    pub fn source_len(&self) -> usize {
        self.image.len()
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    pub fn image(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_len];
        for &w in &self.image {
            hit[w] = true;
        }
        hit.into_iter().all(|b| b)
    }
}

/// Streaming enumeration of all configurations of a fixed norm on `n`
/// vertices, in the canonical (lexicographic) order. Yields exactly the
/// compositions of `size` into `n` non-negative parts.
pub fn enumerate_configs(n: usize, size: u64) -> ConfigIter {
    ConfigIter::new(n, size)
}

pub struct ConfigIter {
    n: usize,
    size: u64,
    state: Option<Vec<u32>>,
    done: bool,
}

impl ConfigIter {
    fn new(n: usize, size: u64) -> Self {
        ConfigIter {
            n,
            size,
            state: None,
            done: false,
        }
    }
}

impl Iterator for ConfigIter {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        if self.done {
            return None;
        }
        let state = match &mut self.state {
            None => {
                if self.n == 0 {
                    // no vertices: only the empty configuration of norm 0
                    self.done = true;
                    return if self.size == 0 {
                        Some(Configuration::new(vec![]))
                    } else {
                        None
                    };
                }
                // lexicographically first: everything on the last vertex
                let mut first = vec![0u32; self.n];
                first[self.n - 1] = self.size as u32;
                self.state = Some(first.clone());
                return Some(Configuration::new(first));
            }
            Some(state) => state,
        };
        // successor: rightmost j < n-1 with a positive suffix sum moves one
        // unit left; the remaining suffix drops onto the last position
        let n = self.n;
        let mut suffix: u64 = 0;
        let mut found = None;
        for k in (0..n.saturating_sub(1)).rev() {
            suffix += state[k + 1] as u64;
            if suffix > 0 {
                found = Some((k, suffix));
                break;
            }
        }
        let Some((j, suffix)) = found else {
            self.done = true;
            return None;
        };
        state[j] += 1;
        for c in state[j + 1..].iter_mut() {
            *c = 0;
        }
        state[n - 1] = (suffix - 1) as u32;
        Some(Configuration::new(state.clone()))
    }
}

/// Streaming enumeration of the almost stacked configurations of a fixed
/// norm, each yielded once, in canonical order.
pub fn enumerate_almost_stacked(
    n: usize,
    size: u64,
) -> impl Iterator<Item = Configuration> {
    // a config is almost stacked iff it has at most one count >= 2; generate
    // 0/1 patterns plus a heavy vertex, dedup by construction: either all
    // counts <= 1, or exactly one heavy vertex with count >= 2
    let mut out: Vec<Configuration> = Vec::new();
    if n == 0 {
        if size == 0 {
            out.push(Configuration::new(vec![]));
        }
        return out.into_iter();
    }
    // all-0/1 patterns of weight `size`
    if size <= n as u64 {
        let mut picks = combinations(n, size as usize);
        out.append(&mut picks);
    }
    // one heavy vertex v with count h >= 2, others 0/1 summing to size - h
    for v in 0..n {
        let max_ones = (n - 1) as u64;
        for ones in 0..=max_ones.min(size.saturating_sub(2)) {
            let h = size - ones;
            if h < 2 {
                continue;
            }
            for pattern in combinations_excluding(n, ones as usize, v) {
                let mut counts = pattern;
                counts[v] = h as u32;
                out.push(Configuration::new(counts));
            }
        }
    }
    out.sort();
    out.dedup();
    out.into_iter()
}

fn combinations(n: usize, k: usize) -> Vec<Configuration> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(cur: &mut Vec<u32>, start: usize, left: usize, out: &mut Vec<Configuration>) {
        if left == 0 {
            out.push(Configuration::new(cur.clone()));
            return;
        }
        let n = cur.len();
        if start + left > n {
            return;
        }
        for i in start..=n - left {
            cur[i] = 1;
            rec(cur, i + 1, left - 1, out);
            cur[i] = 0;
        }
    }
    rec(&mut cur, 0, k, &mut out);
    out
}

fn combinations_excluding(n: usize, k: usize, skip: usize) -> Vec<Vec<u32>> {
    let verts: Vec<usize> = (0..n).filter(|&v| v != skip).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        verts: &[usize],
        n: usize,
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if left == 0 {
            let mut counts = vec![0u32; n];
            for &v in chosen.iter() {
                counts[v] = 1;
            }
            out.push(counts);
            return;
        }
        if start + left > verts.len() {
            return;
        }
        for i in start..=verts.len() - left {
            chosen.push(verts[i]);
            rec(verts, n, i + 1, left - 1, chosen, out);
            chosen.pop();
        }
    }
    rec(&verts, n, 0, k, &mut chosen, &mut out);
    out
}

/// Binomial coefficient, saturating at u64::MAX.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
