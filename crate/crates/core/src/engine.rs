//! Pebbling-step semantics and reachability deciders.
//!
//! A step along an edge removes two pebbles from the source and places one on
//! the target, so the total drops by exactly one per move and every search
//! over reachable configurations is finite. Deciders run a depth-first search
//! with a memo table keyed on exact counts; an explicit state budget turns
//! runaway searches into a hard error instead of a silent wrong answer.
//!
//! One engine instance serves one thread; verdicts are pure functions of the
//! graph and configuration, so independent instances always agree.

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

/// One pebbling step along a directed edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

impl Move {
    pub fn new(from: usize, to: usize) -> Self {
        Move { from, to }
    }
}

/// A start configuration plus an ordered list of moves, each applicable at
/// the moment it is played.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSequence {
    pub start: Configuration,
    pub moves: Vec<Move>,
}

impl MoveSequence {
    pub fn new(start: Configuration, moves: Vec<Move>) -> Self {
        MoveSequence { start, moves }
    }

    /// Replay against the graph, validating every step; returns the final
    /// configuration. The final norm is the start norm minus the move count.
    pub fn replay(&self, g: &Graph) -> Result<Configuration> {
        let mut cur = self.start.clone();
        for &m in &self.moves {
            cur = apply_move(&cur, m, g)?;
        }
        Ok(cur)
    }
}

/// All applicable moves: directed edges (u,v) with c(u) >= 2, in
/// lexicographic order. Empty exactly when all counts are <= 1.
pub fn applicable_moves(c: &Configuration, g: &Graph) -> Vec<Move> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        if c.get(u) >= 2 {
            for &v in g.neighbors(u) {
                out.push(Move::new(u, v));
            }
        }
    }
    out
}

/// Apply one step: two pebbles leave `m.from`, one lands on `m.to`.
pub fn apply_move(c: &Configuration, m: Move, g: &Graph) -> Result<Configuration> {
    if m.from >= g.n() || m.to >= g.n() || !g.has_edge(m.from, m.to) {
        return Err(Error::InapplicableMove {
            from: m.from,
            to: m.to,
            reason: "not an edge".into(),
        });
    }
    if c.len() != g.n() {
        return Err(Error::LengthMismatch {
            got: c.len(),
            expected: g.n(),
        });
    }
    if c.get(m.from) < 2 {
        return Err(Error::InapplicableMove {
            from: m.from,
            to: m.to,
            reason: format!("source holds {} pebbles", c.get(m.from)),
        });
    }
    let mut counts = c.counts().to_vec();
    counts[m.from] -= 2;
    counts[m.to] += 1;
    Ok(Configuration::new(counts))
}

/// Apply a whole sequence; equivalent to [`MoveSequence::replay`].
pub fn apply_sequence(seq: &MoveSequence, g: &Graph) -> Result<Configuration> {
    seq.replay(g)
}

/// Search limits for the reachability deciders.
#[derive(Debug, Clone, Copy)]
pub struct EngineOptions {
    /// Maximum number of distinct configurations explored per engine.
    pub max_states: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            max_states: 5_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Query {
    Stack,
    Clear,
    Reach(usize),
}

/// Memoized reachability deciders over one graph.
pub struct Engine<'g> {
    graph: &'g Graph,
    options: EngineOptions,
    stack_memo: HashMap<Configuration, bool>,
    clear_memo: HashMap<Configuration, bool>,
    reach_memo: HashMap<usize, HashMap<Configuration, bool>>,
    exact_memo: HashMap<Configuration, HashMap<Configuration, bool>>,
    states: u64,
}

impl<'g> Engine<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_options(graph, EngineOptions::default())
    }

    pub fn with_options(graph: &'g Graph, options: EngineOptions) -> Self {
        Engine {
            graph,
            options,
            stack_memo: HashMap::new(),
            clear_memo: HashMap::new(),
            reach_memo: HashMap::new(),
            exact_memo: HashMap::new(),
            states: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Distinct states explored so far (memo inserts across all calls).
    pub fn states_explored(&self) -> u64 {
        self.states
    }

    fn goal_met(q: Query, c: &Configuration) -> bool {
        match q {
            Query::Stack => c.is_stacked(),
            Query::Clear => c.is_cleared(),
            Query::Reach(r) => c.get(r) >= 1,
        }
    }

    fn memo_get(&self, q: Query, c: &Configuration) -> Option<bool> {
        match q {
            Query::Stack => self.stack_memo.get(c).copied(),
            Query::Clear => self.clear_memo.get(c).copied(),
            Query::Reach(r) => self.reach_memo.get(&r).and_then(|m| m.get(c)).copied(),
        }
    }

    fn memo_insert(&mut self, q: Query, c: Configuration, v: bool) {
        match q {
            Query::Stack => {
                self.stack_memo.insert(c, v);
            }
            Query::Clear => {
                self.clear_memo.insert(c, v);
            }
            Query::Reach(r) => {
                self.reach_memo.entry(r).or_default().insert(c, v);
            }
        }
    }

    fn decide(&mut self, q: Query, c: &Configuration) -> Result<bool> {
        if c.len() != self.graph.n() {
            return Err(Error::LengthMismatch {
                got: c.len(),
                expected: self.graph.n(),
            });
        }
        self.decide_rec(q, c)
    }

    // norm strictly decreases along moves, so the recursion depth is bounded
    // by the norm and no cycle handling is needed
    fn decide_rec(&mut self, q: Query, c: &Configuration) -> Result<bool> {
        if Self::goal_met(q, c) {
            return Ok(true);
        }
        if let Some(v) = self.memo_get(q, c) {
            return Ok(v);
        }
        self.states += 1;
        if self.states > self.options.max_states {
            return Err(Error::BudgetExceeded {
                states: self.states,
                budget: self.options.max_states,
            });
        }
        let mut verdict = false;
        for m in applicable_moves(c, self.graph) {
            let child = apply_move(c, m, self.graph)?;
            if self.decide_rec(q, &child)? {
                verdict = true;
                break;
            }
        }
        self.memo_insert(q, c.clone(), verdict);
        Ok(verdict)
    }

    /// Can some stacked configuration be reached?
    pub fn is_stackable(&mut self, c: &Configuration) -> Result<bool> {
        self.decide(Query::Stack, c)
    }

    /// Can the configuration be reduced to a single pebble?
    pub fn is_clearable(&mut self, c: &Configuration) -> Result<bool> {
        self.decide(Query::Clear, c)
    }

    /// Can a pebble be placed on `r`? An initial pebble on `r` counts.
    pub fn can_reach_vertex(&mut self, c: &Configuration, r: usize) -> Result<bool> {
        if r >= self.graph.n() {
            return Err(Error::VertexOutOfRange {
                index: r,
                n: self.graph.n(),
            });
        }
        self.decide(Query::Reach(r), c)
    }

    /// Is the exact configuration `target` reachable from `c`?
    pub fn is_reachable(&mut self, c: &Configuration, target: &Configuration) -> Result<bool> {
        if c.len() != self.graph.n() || target.len() != self.graph.n() {
            return Err(Error::LengthMismatch {
                got: c.len().max(target.len()),
                expected: self.graph.n(),
            });
        }
        if c == target {
            return Ok(true);
        }
        if c.norm() <= target.norm() {
            return Ok(false);
        }
        if let Some(v) = self.exact_memo.get(target).and_then(|m| m.get(c)) {
            return Ok(*v);
        }
        self.states += 1;
        if self.states > self.options.max_states {
            return Err(Error::BudgetExceeded {
                states: self.states,
                budget: self.options.max_states,
            });
        }
        let mut verdict = false;
        for m in applicable_moves(c, self.graph) {
            let child = apply_move(c, m, self.graph)?;
            if self.is_reachable(&child, target)? {
                verdict = true;
                break;
            }
        }
        self.exact_memo
            .entry(target.clone())
            .or_default()
            .insert(c.clone(), verdict);
        Ok(verdict)
    }

    fn witness(&mut self, q: Query, c: &Configuration) -> Result<Option<MoveSequence>> {
        if !self.decide(q, c)? {
            return Ok(None);
        }
        // greedy descent over decided-true states: prefer a move whose child
        // meets the goal outright, then lexicographic move order
        let mut moves = Vec::new();
        let mut cur = c.clone();
        while !Self::goal_met(q, &cur) {
            let avail = applicable_moves(&cur, self.graph);
            let mut chosen = None;
            for &m in &avail {
                let child = apply_move(&cur, m, self.graph)?;
                if Self::goal_met(q, &child) {
                    chosen = Some((m, child));
                    break;
                }
            }
            if chosen.is_none() {
                for &m in &avail {
                    let child = apply_move(&cur, m, self.graph)?;
                    if self.decide(q, &child)? {
                        chosen = Some((m, child));
                        break;
                    }
                }
            }
            let (m, child) = chosen.ok_or_else(|| {
                Error::Internal("decided-true state has no successful child".into())
            })?;
            moves.push(m);
            cur = child;
        }
        Ok(Some(MoveSequence::new(c.clone(), moves)))
    }

    /// A move sequence ending in a stacked configuration, or `None`.
    pub fn stack_witness(&mut self, c: &Configuration) -> Result<Option<MoveSequence>> {
        self.witness(Query::Stack, c)
    }

    /// A move sequence ending in a single pebble, or `None`.
    pub fn clear_witness(&mut self, c: &Configuration) -> Result<Option<MoveSequence>> {
        self.witness(Query::Clear, c)
    }

    /// A move sequence placing a pebble on `r`, or `None`.
    pub fn reach_witness(&mut self, c: &Configuration, r: usize) -> Result<Option<MoveSequence>> {
        if r >= self.graph.n() {
            return Err(Error::VertexOutOfRange {
                index: r,
                n: self.graph.n(),
            });
        }
        self.witness(Query::Reach(r), c)
    }

    /// A move sequence transforming `c` into exactly `target`, or `None`.
    pub fn exact_witness(
        &mut self,
        c: &Configuration,
        target: &Configuration,
    ) -> Result<Option<MoveSequence>> {
        if !self.is_reachable(c, target)? {
            return Ok(None);
        }
        let mut moves = Vec::new();
        let mut cur = c.clone();
        while &cur != target {
            let mut advanced = false;
            for m in applicable_moves(&cur, self.graph) {
                let child = apply_move(&cur, m, self.graph)?;
                if self.is_reachable(&child, target)? {
                    moves.push(m);
                    cur = child;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                return Err(Error::Internal(
                    "reachable target lost during witness descent".into(),
                ));
            }
        }
        Ok(Some(MoveSequence::new(c.clone(), moves)))
    }
}

/// One live pebble of a labeled replay: its vertex and the set of original
/// pebble labels merged into it, packed as a bitmask over 1..=norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pebble {
    pub vertex: usize,
    pub labels: u128,
}

/// A replayed move sequence with provenance: the label sets of the live
/// pebbles partition {1..norm} at every step. Pebbles at a vertex form a
/// queue; a move consumes the two front pebbles of the source and appends
/// the merged pebble at the target.
#[derive(Debug, Clone)]
pub struct LabeledRun {
    pub sequence: MoveSequence,
    pub final_pebbles: Vec<Pebble>,
    /// Label set of the pebble produced by each move, in move order.
    pub move_labels: Vec<u128>,
}

/// Replay a sequence tracking pebble labels. Initial pebbles are labeled
/// 1..=norm in vertex order. Supports norms up to 128.
pub fn run_labeled(seq: &MoveSequence, g: &Graph) -> Result<LabeledRun> {
    let norm = seq.start.norm();
    if norm > 128 {
        return Err(Error::TooManyLabels(norm));
    }
    let mut queues: Vec<VecDeque<u128>> = vec![VecDeque::new(); g.n()];
    let mut label = 0u32;
    for v in 0..g.n() {
        for _ in 0..seq.start.get(v) {
            queues[v].push_back(1u128 << label);
            label += 1;
        }
    }
    let mut move_labels = Vec::with_capacity(seq.moves.len());
    for &m in &seq.moves {
        if m.from >= g.n() || queues[m.from].len() < 2 || !g.has_edge(m.from, m.to) {
            return Err(Error::InapplicableMove {
                from: m.from,
                to: m.to,
                reason: "labeled replay".into(),
            });
        }
        let a = queues[m.from].pop_front().unwrap();
        let b = queues[m.from].pop_front().unwrap();
        let merged = a | b;
        queues[m.to].push_back(merged);
        move_labels.push(merged);
    }
    let mut final_pebbles = Vec::new();
    for (v, queue) in queues.iter().enumerate() {
        for &labels in queue {
            final_pebbles.push(Pebble { vertex: v, labels });
        }
    }
    Ok(LabeledRun {
        sequence: seq.clone(),
        final_pebbles,
        move_labels,
    })
}

/// Split a labeled run along a selection of final pebbles (indices into
/// `final_pebbles`). Returns `(c0, c1, seq0, seq1)` with `c0 + c1` equal to
/// the start configuration, `seq0` replaying `c0` to exactly the selected
/// pebbles and `seq1` replaying `c1` to the rest.
pub fn split_origin(
    run: &LabeledRun,
    selected: &[usize],
    g: &Graph,
) -> Result<(Configuration, Configuration, MoveSequence, MoveSequence)> {
    let n = g.n();
    for &i in selected {
        if i >= run.final_pebbles.len() {
            return Err(Error::BadSelection);
        }
    }
    let mut t0: u128 = 0;
    for &i in selected {
        t0 |= run.final_pebbles[i].labels;
    }
    // start sub-configurations by initial label positions
    let mut counts0 = vec![0u32; n];
    let mut counts1 = vec![0u32; n];
    let mut label = 0u32;
    for v in 0..n {
        for _ in 0..run.sequence.start.get(v) {
            if t0 >> label & 1 == 1 {
                counts0[v] += 1;
            } else {
                counts1[v] += 1;
            }
            label += 1;
        }
    }
    // each move's merged label set lies wholly inside one part, because
    // label sets only ever grow by union
    let mut moves0 = Vec::new();
    let mut moves1 = Vec::new();
    for (i, &m) in run.sequence.moves.iter().enumerate() {
        let labels = run.move_labels[i];
        if labels & t0 == labels {
            moves0.push(m);
        } else if labels & t0 == 0 {
            moves1.push(m);
        } else {
            return Err(Error::Internal(
                "move labels straddle the selection; selection does not pick whole pebbles".into(),
            ));
        }
    }
    let c0 = Configuration::new(counts0);
    let c1 = Configuration::new(counts1);
    let seq0 = MoveSequence::new(c0.clone(), moves0);
    let seq1 = MoveSequence::new(c1.clone(), moves1);
    Ok((c0, c1, seq0, seq1))
}

/// Split along a sub-multiset of the final configuration: selects the first
/// `sub(v)` pebbles in queue order at each vertex. Errors if `sub` is not a
/// sub-multiset of the final configuration.
pub fn split_origin_by_config(
    run: &LabeledRun,
    sub: &Configuration,
    g: &Graph,
) -> Result<(Configuration, Configuration, MoveSequence, MoveSequence)> {
    if sub.len() != g.n() {
        return Err(Error::LengthMismatch {
            got: sub.len(),
            expected: g.n(),
        });
    }
    let mut selected = Vec::new();
    let mut need: Vec<u32> = sub.counts().to_vec();
    for (i, p) in run.final_pebbles.iter().enumerate() {
        if need[p.vertex] > 0 {
            need[p.vertex] -= 1;
            selected.push(i);
        }
    }
    if need.iter().any(|&k| k > 0) {
        return Err(Error::BadSelection);
    }
    split_origin(run, &selected, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cfg(counts: &[u32]) -> Configuration {
        Configuration::new(counts.to_vec())
    }

    #[test]
    fn applicable_moves_examples() {
        let p2 = Graph::path(2).unwrap();
        assert_eq!(applicable_moves(&cfg(&[2, 0]), &p2), vec![Move::new(0, 1)]);
        assert!(applicable_moves(&cfg(&[1, 1]), &p2).is_empty());
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(applicable_moves(&cfg(&[2, 2, 2]), &k3).len(), 6);
    }

    #[test]
    fn apply_move_examples() {
        let p2 = Graph::path(2).unwrap();
        assert_eq!(
            apply_move(&cfg(&[2, 1]), Move::new(0, 1), &p2).unwrap(),
            cfg(&[0, 2])
        );
        assert!(apply_move(&cfg(&[1, 1]), Move::new(0, 1), &p2).is_err());
        let p3 = Graph::path(3).unwrap();
        let seq = MoveSequence::new(cfg(&[4, 1, 0]), vec![Move::new(0, 1), Move::new(0, 1)]);
        assert_eq!(seq.replay(&p3).unwrap(), cfg(&[0, 3, 0]));
    }

    #[test]
    fn stackable_examples() {
        let p2 = Graph::path(2).unwrap();
        let mut e = Engine::new(&p2);
        assert!(!e.is_stackable(&cfg(&[1, 1])).unwrap());
        assert!(e.is_stackable(&cfg(&[2, 1])).unwrap());
        let w = e.stack_witness(&cfg(&[2, 1])).unwrap().unwrap();
        assert_eq!(w.moves, vec![Move::new(0, 1)]);

        let p4 = Graph::path(4).unwrap();
        let mut e = Engine::new(&p4);
        assert!(!e.is_stackable(&cfg(&[13, 0, 0, 1])).unwrap());
    }

    #[test]
    fn clearable_examples() {
        let k3 = Graph::complete(3).unwrap();
        let mut e = Engine::new(&k3);
        assert!(e.is_clearable(&cfg(&[2, 1, 1])).unwrap());
        let w = e.clear_witness(&cfg(&[2, 1, 1])).unwrap().unwrap();
        assert_eq!(w.replay(&k3).unwrap().norm(), 1);

        let p2 = Graph::path(2).unwrap();
        let mut e = Engine::new(&p2);
        assert!(!e.is_clearable(&cfg(&[1, 1])).unwrap());
        // reachable set of (3,0) is {(3,0),(1,1)}; imbalance 3 = 0 mod 3
        assert!(!e.is_clearable(&cfg(&[3, 0])).unwrap());
    }

    #[test]
    fn reach_examples() {
        let p3 = Graph::path(3).unwrap();
        let mut e = Engine::new(&p3);
        assert!(!e.can_reach_vertex(&cfg(&[3, 0, 0]), 2).unwrap());
        assert!(e.can_reach_vertex(&cfg(&[4, 0, 0]), 2).unwrap());
        assert!(e.can_reach_vertex(&cfg(&[0, 1, 0]), 1).unwrap());
        let w = e.reach_witness(&cfg(&[4, 0, 0]), 2).unwrap().unwrap();
        let fin = w.replay(&p3).unwrap();
        assert!(fin.get(2) >= 1);
    }

    #[test]
    fn exact_reachability() {
        let p3 = Graph::path(3).unwrap();
        let mut e = Engine::new(&p3);
        // (2,1,0) -> (0,2,0) -> (1,0,0)
        assert!(e.is_reachable(&cfg(&[2, 1, 0]), &cfg(&[1, 0, 0])).unwrap());
        assert!(!e.is_reachable(&cfg(&[1, 1, 0]), &cfg(&[1, 0, 0])).unwrap());
        let w = e
            .exact_witness(&cfg(&[2, 1, 0]), &cfg(&[1, 0, 0]))
            .unwrap()
            .unwrap();
        assert_eq!(w.replay(&p3).unwrap(), cfg(&[1, 0, 0]));
    }

    #[test]
    fn budget_is_a_hard_error() {
        let p4 = Graph::path(4).unwrap();
        let mut e = Engine::with_options(&p4, EngineOptions { max_states: 5 });
        let res = e.is_stackable(&cfg(&[9, 2, 3, 1]));
        assert!(matches!(res, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn labeled_run_partition() {
        let p2 = Graph::path(2).unwrap();
        let seq = MoveSequence::new(cfg(&[2, 2]), vec![Move::new(0, 1)]);
        let run = run_labeled(&seq, &p2).unwrap();
        // final pebbles at v1: labels {3}, {4}, then the merged {1,2}
        assert_eq!(run.final_pebbles.len(), 3);
        let idx = run
            .final_pebbles
            .iter()
            .position(|p| p.labels == 0b100)
            .unwrap();
        let (c0, c1, seq0, seq1) = split_origin(&run, &[idx], &p2).unwrap();
        assert_eq!(c0, cfg(&[0, 1]));
        assert_eq!(c1, cfg(&[2, 1]));
        assert_eq!(c0.add(&c1).unwrap(), cfg(&[2, 2]));
        assert_eq!(seq0.replay(&p2).unwrap(), cfg(&[0, 1]));
        assert_eq!(seq1.replay(&p2).unwrap(), cfg(&[0, 2]));
    }

    #[test]
    fn labeled_run_zero_moves_and_full_merge() {
        let p3 = Graph::path(3).unwrap();
        let seq = MoveSequence::new(cfg(&[0, 2, 1]), vec![]);
        let run = run_labeled(&seq, &p3).unwrap();
        let (c0, c1, s0, _s1) = split_origin(&run, &[0], &p3).unwrap();
        assert_eq!(c0.norm(), 1);
        assert_eq!(c0.add(&c1).unwrap(), cfg(&[0, 2, 1]));
        assert!(s0.moves.is_empty());

        // (4,0,0) -> (0,2,0) -> (0,0,1): everything merges into one pebble
        let seq = MoveSequence::new(
            cfg(&[4, 0, 0]),
            vec![Move::new(0, 1), Move::new(0, 1), Move::new(1, 2)],
        );
        let run = run_labeled(&seq, &p3).unwrap();
        assert_eq!(run.final_pebbles.len(), 1);
        let (c0, c1, s0, _) = split_origin(&run, &[0], &p3).unwrap();
        assert_eq!(c0, cfg(&[4, 0, 0]));
        assert_eq!(c1, cfg(&[0, 0, 0]));
        assert_eq!(s0.replay(&p3).unwrap(), cfg(&[0, 0, 1]));
    }

    #[test]
    fn split_by_config_selection() {
        let p2 = Graph::path(2).unwrap();
        let seq = MoveSequence::new(cfg(&[2, 2]), vec![Move::new(0, 1)]);
        let run = run_labeled(&seq, &p2).unwrap();
        let (c0, c1, ..) = split_origin_by_config(&run, &cfg(&[0, 1]), &p2).unwrap();
        assert_eq!(c0.add(&c1).unwrap(), cfg(&[2, 2]));
        assert!(split_origin_by_config(&run, &cfg(&[1, 0]), &p2).is_err());
    }
}
