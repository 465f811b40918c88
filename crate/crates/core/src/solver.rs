//! Exact stacking, clearing and pebbling numbers via the non-stackable
//! frontier recurrence.
//!
//! For a fixed goal, let N_m be the set of bad (non-stackable, resp.
//! non-clearable) configurations of norm m. A configuration d of norm m+1 is
//! bad iff it does not already meet the goal and every child of d lies in
//! N_m. Every bad d with at least one applicable move is a parent of one of
//! its children, so candidates for N_{m+1} are exactly the parents of N_m
//! members plus the 0/1-valued configurations of norm m+1 (which have no
//! moves at all and therefore no children in N_m). The parameter is the
//! first norm whose layer is empty; layers up to |V| are never empty because
//! the 0/1 configurations with support of size two are bad.

use crate::config::{enumerate_configs, Configuration};
use crate::engine::{applicable_moves, apply_move, Engine};
use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

/// Target predicate of a frontier run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Goal {
    Stack,
    Clear,
}

impl Goal {
    /// Does the configuration already satisfy the goal?
    fn met(self, c: &Configuration) -> bool {
        match self {
            Goal::Stack => c.is_stacked(),
            Goal::Clear => c.is_cleared(),
        }
    }
}

/// The bad configurations of one fixed norm, canonically ordered.
#[derive(Debug, Clone)]
pub struct FrontierSet {
    pub size: u64,
    pub members: Vec<Configuration>,
}

impl FrontierSet {
    /// Seed layer: all norm-2 configurations the engine decides bad.
    pub fn seed(g: &Graph, goal: Goal) -> Result<FrontierSet> {
        let mut engine = Engine::new(g);
        let mut members = Vec::new();
        for c in enumerate_configs(g.n(), 2) {
            let good = match goal {
                Goal::Stack => engine.is_stackable(&c)?,
                Goal::Clear => engine.is_clearable(&c)?,
            };
            if !good {
                members.push(c);
            }
        }
        Ok(FrontierSet { size: 2, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &Configuration) -> bool {
        self.members.binary_search(c).is_ok()
    }
}

/// One step of the recurrence: the bad configurations of norm `size + 1`.
///
/// Candidate testing is parallel; the result is sorted, so the output is
/// independent of the worker count.
pub fn frontier_step(prev: &FrontierSet, g: &Graph, goal: Goal) -> FrontierSet {
    let n = g.n();
    let next_size = prev.size + 1;
    let dedges = g.directed_edges();

    let prev_set: HashSet<&Configuration> = prev.members.iter().collect();

    let mut candidates: HashSet<Configuration> = HashSet::new();
    for c in &prev.members {
        for &(u, v) in &dedges {
            if c.get(v) >= 1 {
                let mut counts = c.counts().to_vec();
                counts[v] -= 1;
                counts[u] += 2;
                candidates.insert(Configuration::new(counts));
            }
        }
    }
    // 0/1-valued configurations have no applicable moves, hence no children:
    // the parent rule cannot produce them
    if next_size <= n as u64 {
        zero_one_configs(n, next_size as usize, &mut candidates);
    }

    let mut members: Vec<Configuration> = candidates
        .into_par_iter()
        .filter(|d| {
            if goal.met(d) {
                return false;
            }
            for &(u, v) in &dedges {
                if d.get(u) >= 2 {
                    let mut counts = d.counts().to_vec();
                    counts[u] -= 2;
                    counts[v] += 1;
                    if !prev_set.contains(&Configuration::new(counts)) {
                        return false;
                    }
                }
            }
            true
        })
        .collect();
    members.par_sort();
    FrontierSet {
        size: next_size,
        members,
    }
}

fn zero_one_configs(n: usize, weight: usize, out: &mut HashSet<Configuration>) {
    // all 0/1 vectors of the given weight with support size >= 2
    if weight < 2 || weight > n {
        return;
    }
    let mut counts = vec![0u32; n];
    fn rec(counts: &mut Vec<u32>, start: usize, left: usize, out: &mut HashSet<Configuration>) {
        if left == 0 {
            out.insert(Configuration::new(counts.clone()));
            return;
        }
        let n = counts.len();
        if start + left > n {
            return;
        }
        for i in start..=n - left {
            counts[i] = 1;
            rec(counts, i + 1, left - 1, out);
            counts[i] = 0;
        }
    }
    rec(&mut counts, 0, weight, out);
}

/// Work counters of a frontier run.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct WorkCounters {
    pub layers: usize,
    pub frontier_configs: u64,
    pub peak_layer: usize,
}

/// Result of an exact parameter computation.
#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    /// The parameter value: the first all-good norm.
    pub value: u64,
    /// Frontier cardinalities for norms 2, 3, ... up to the first empty one.
    pub layer_sizes: Vec<usize>,
    /// Members of the last nonempty frontier (the maximal bad configurations).
    pub extremal: Vec<Configuration>,
    pub work: WorkCounters,
    /// Largest norm >= 2 whose frontier contains an almost stacked
    /// configuration, with one such witness.
    pub almost_stacked_extremal: Option<(u64, Configuration)>,
}

fn frontier_run(g: &Graph, goal: Goal, keep_layers: Option<&mut Vec<FrontierSet>>) -> Result<SolveResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let diam = g.diameter().unwrap_or(0);
    let cap = 2usize
        .checked_pow(diam as u32)
        .and_then(|p| p.checked_mul(2 * n.max(1)))
        .ok_or(Error::Overflow)?;
    let mut layer = FrontierSet::seed(g, goal)?;
    let mut layer_sizes = Vec::new();
    let mut work = WorkCounters::default();
    let mut extremal = Vec::new();
    let mut almost: Option<(u64, Configuration)> = None;
    let mut keep = keep_layers;
    loop {
        layer_sizes.push(layer.len());
        work.layers += 1;
        work.frontier_configs += layer.len() as u64;
        work.peak_layer = work.peak_layer.max(layer.len());
        if let Some(c) = layer.members.iter().find(|c| c.is_almost_stacked()) {
            almost = Some((layer.size, c.clone()));
        }
        let empty = layer.is_empty();
        if empty && layer.size <= n as u64 {
            // 0/1 configurations with support two exist at every norm in
            // 2..=n and are bad, so an early empty layer is impossible
            return Err(Error::Internal(format!(
                "empty frontier at norm {} <= |V| = {}",
                layer.size, n
            )));
        }
        if !empty {
            extremal = layer.members.clone();
        }
        if empty {
            let value = layer.size;
            if let Some(store) = keep.as_deref_mut() {
                store.push(layer);
            }
            return Ok(SolveResult {
                value,
                layer_sizes,
                extremal,
                work,
                almost_stacked_extremal: almost,
            });
        }
        if layer.size as usize > cap {
            return Err(Error::CapExceeded {
                index: layer.size as usize,
                cap,
            });
        }
        let next = frontier_step(&layer, g, goal);
        if let Some(store) = keep.as_deref_mut() {
            store.push(std::mem::replace(&mut layer, next));
        } else {
            layer = next;
        }
    }
}

/// Exact stacking number. Defined exactly for connected graphs.
pub fn stacking_number(g: &Graph) -> Result<SolveResult> {
    frontier_run(g, Goal::Stack, None)
}

/// Exact clearing number. Defined exactly for connected non-bipartite
/// graphs; bipartite input is an error, not a sentinel.
pub fn clearing_number(g: &Graph) -> Result<SolveResult> {
    if g.bipartition()?.is_some() {
        return Err(Error::Bipartite);
    }
    frontier_run(g, Goal::Clear, None)
}

/// Run a goal and also return every frontier layer (norm 2 up to the first
/// empty one).
pub fn solve_with_layers(g: &Graph, goal: Goal) -> Result<(SolveResult, Vec<FrontierSet>)> {
    if goal == Goal::Clear && g.bipartition()?.is_some() {
        return Err(Error::Bipartite);
    }
    let mut layers = Vec::new();
    let result = frontier_run(g, goal, Some(&mut layers))?;
    Ok((result, layers))
}

/// Result of the per-target pebbling computation.
#[derive(Debug, Clone, Serialize)]
pub struct PebblingResult {
    pub value: u64,
    /// A target attaining the maximum.
    pub worst_target: usize,
    /// A configuration of norm `value - 1` that cannot reach `worst_target`.
    pub witness: Configuration,
}

/// Classical pebbling number: least m such that every configuration of norm
/// m can move a pebble onto every prescribed target. Per-target frontiers of
/// non-reaching configurations, maximized over targets.
pub fn pebbling_number(g: &Graph) -> Result<PebblingResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        // a single pebble already sits on the only vertex
        return Ok(PebblingResult {
            value: 1,
            worst_target: 0,
            witness: Configuration::zero(1),
        });
    }
    let dedges = g.directed_edges();
    let mut best: Option<PebblingResult> = None;
    for r in 0..n {
        // norm-1 seeds: a single pebble anywhere except r
        let mut layer: Vec<Configuration> = (0..n)
            .filter(|&v| v != r)
            .map(|v| Configuration::unit(n, v))
            .collect();
        layer.sort();
        let mut size: u64 = 1;
        let mut last_witness = layer[0].clone();
        loop {
            if layer.is_empty() && size as usize >= n - 1 {
                break;
            }
            if layer.is_empty() {
                return Err(Error::Internal(format!(
                    "empty non-reaching frontier at norm {} < |V|-1",
                    size
                )));
            }
            last_witness = layer[0].clone();
            let prev_set: HashSet<&Configuration> = layer.iter().collect();
            let mut candidates: HashSet<Configuration> = HashSet::new();
            for c in &layer {
                for &(u, v) in &dedges {
                    if c.get(v) >= 1 {
                        let mut counts = c.counts().to_vec();
                        counts[v] -= 1;
                        counts[u] += 2;
                        candidates.insert(Configuration::new(counts));
                    }
                }
            }
            if size + 1 <= (n - 1) as u64 {
                let mut ones = HashSet::new();
                zero_one_configs(n, (size + 1) as usize, &mut ones);
                // single-support 0/1 configurations are also moveless
                for v in 0..n {
                    if size + 1 == 1 {
                        ones.insert(Configuration::unit(n, v));
                    }
                }
                for c in ones {
                    if c.get(r) == 0 {
                        candidates.insert(c);
                    }
                }
            }
            let mut next: Vec<Configuration> = candidates
                .into_par_iter()
                .filter(|d| {
                    if d.get(r) >= 1 {
                        return false;
                    }
                    for m in applicable_moves(d, g) {
                        let child = apply_move(d, m, g).expect("moves from generator are valid");
                        if !prev_set.contains(&child) {
                            return false;
                        }
                    }
                    true
                })
                .collect();
            next.par_sort();
            layer = next;
            size += 1;
        }
        let candidate = PebblingResult {
            value: size,
            worst_target: r,
            witness: last_witness,
        };
        if best.as_ref().is_none_or(|b| candidate.value > b.value) {
            best = Some(candidate);
        }
    }
    Ok(best.ok_or_else(|| Error::Internal("no targets".into()))?)
}

/// Almost-stacked quantities for one goal: the exact parameter, the
/// almost-stacked extremal value (1 + the largest norm >= 2 at which a bad
/// almost stacked configuration exists) and whether the two agree.
#[derive(Debug, Clone, Serialize)]
pub struct AshReport {
    pub goal: Goal,
    pub exact: u64,
    pub almost_stacked_extremal: u64,
    pub holds: bool,
    /// A bad almost stacked configuration of the extremal norm, if any.
    pub witness: Option<Configuration>,
}

/// Scan the frontier run for almost stacked counterexamples. The scan floor
/// is norm 2, matching the parameter definitions.
pub fn ash_quantities(g: &Graph, goal: Goal) -> Result<AshReport> {
    let result = match goal {
        Goal::Stack => stacking_number(g)?,
        Goal::Clear => clearing_number(g)?,
    };
    let (extremal, witness) = match result.almost_stacked_extremal {
        Some((norm, c)) => (norm + 1, Some(c)),
        // no almost stacked counterexample at any norm >= 2: vacuously
        // extremal at the exact value
        None => (result.value, None),
    };
    Ok(AshReport {
        goal,
        exact: result.value,
        almost_stacked_extremal: extremal,
        holds: extremal == result.value,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(counts: &[u32]) -> Configuration {
        Configuration::new(counts.to_vec())
    }

    #[test]
    fn frontier_step_p2_stack() {
        let p2 = Graph::path(2).unwrap();
        let n2 = FrontierSet::seed(&p2, Goal::Stack).unwrap();
        assert_eq!(n2.members, vec![cfg(&[1, 1])]);
        let n3 = frontier_step(&n2, &p2, Goal::Stack);
        assert!(n3.is_empty());
    }

    #[test]
    fn stacking_paths() {
        for (n, expect) in [(2u32, 3u64), (3, 7), (4, 15)] {
            let g = Graph::path(n as usize).unwrap();
            let res = stacking_number(&g).unwrap();
            assert_eq!(res.value, expect, "path {n}");
            // layers 2..value-1 nonempty, final empty layer recorded
            assert_eq!(res.layer_sizes.len() as u64, expect - 1);
            assert_eq!(*res.layer_sizes.last().unwrap(), 0);
        }
    }

    #[test]
    fn stacking_complete_and_bipartite() {
        assert_eq!(
            stacking_number(&Graph::complete(5).unwrap()).unwrap().value,
            6
        );
        assert_eq!(
            stacking_number(&Graph::complete_multipartite(&[3, 3]).unwrap())
                .unwrap()
                .value,
            10
        );
    }

    #[test]
    fn stacking_small_cycles() {
        assert_eq!(stacking_number(&Graph::cycle(5).unwrap()).unwrap().value, 8);
        assert_eq!(stacking_number(&Graph::cycle(4).unwrap()).unwrap().value, 7);
    }

    #[test]
    fn clearing_examples() {
        assert_eq!(
            clearing_number(&Graph::complete(3).unwrap()).unwrap().value,
            4
        );
        assert_eq!(
            clearing_number(&Graph::complete(4).unwrap()).unwrap().value,
            5
        );
        assert_eq!(clearing_number(&Graph::cycle(5).unwrap()).unwrap().value, 10);
    }

    #[test]
    fn clearing_rejects_bipartite_and_disconnected() {
        assert!(matches!(
            clearing_number(&Graph::cycle(4).unwrap()),
            Err(Error::Bipartite)
        ));
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(clearing_number(&g), Err(Error::Disconnected)));
        assert!(matches!(stacking_number(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn k1_degenerate_value() {
        let k1 = Graph::complete(1).unwrap();
        let res = stacking_number(&k1).unwrap();
        assert_eq!(res.value, 2);
    }

    #[test]
    fn pebbling_examples() {
        assert_eq!(pebbling_number(&Graph::path(3).unwrap()).unwrap().value, 4);
        assert_eq!(pebbling_number(&Graph::complete(3).unwrap()).unwrap().value, 3);
        assert_eq!(pebbling_number(&Graph::path(4).unwrap()).unwrap().value, 8);
        assert_eq!(pebbling_number(&Graph::path(2).unwrap()).unwrap().value, 2);
        assert_eq!(pebbling_number(&Graph::cycle(6).unwrap()).unwrap().value, 8);
    }

    #[test]
    fn pebbling_witness_cannot_reach() {
        let g = Graph::path(4).unwrap();
        let res = pebbling_number(&g).unwrap();
        assert_eq!(res.witness.norm(), res.value - 1);
        let mut e = Engine::new(&g);
        assert!(!e.can_reach_vertex(&res.witness, res.worst_target).unwrap());
    }

    #[test]
    fn ash_p4_stack() {
        let g = Graph::path(4).unwrap();
        let rep = ash_quantities(&g, Goal::Stack).unwrap();
        assert_eq!(rep.exact, 15);
        assert_eq!(rep.almost_stacked_extremal, 15);
        assert!(rep.holds);
        let w = rep.witness.unwrap();
        assert_eq!(w.norm(), 14);
        assert!(w.is_almost_stacked());
    }

    #[test]
    fn ash_k3_clear() {
        let rep = ash_quantities(&Graph::complete(3).unwrap(), Goal::Clear).unwrap();
        assert_eq!(rep.exact, 4);
        assert!(rep.holds);
    }

    #[test]
    fn extremal_layer_contains_path_witness() {
        let g = Graph::path(4).unwrap();
        let res = stacking_number(&g).unwrap();
        assert!(res.extremal.contains(&cfg(&[13, 0, 0, 1])));
    }

    #[test]
    fn monotone_emptiness_assertion() {
        // after the first empty layer past |V|, another step stays empty
        let g = Graph::complete(3).unwrap();
        let (_, layers) = solve_with_layers(&g, Goal::Stack).unwrap();
        let last = layers.last().unwrap();
        assert!(last.is_empty());
        assert!(frontier_step(last, &g, Goal::Stack).is_empty());
    }
}
