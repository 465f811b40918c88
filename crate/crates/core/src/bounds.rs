//! Valuating functions and machine-checkable bound certificates.
//!
//! A valuating function assigns positive weights to vertices so that no
//! pebbling step increases the weighted sum; the per-move decrease is the
//! loss of that step. Certificates package every general bound with a
//! witness payload and an executable verifier, self-contained enough to be
//! re-checked from the serialized form alone.

use crate::config::Configuration;
use crate::engine::{Engine, EngineOptions, Move};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::solver;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub type Weight = Ratio<i64>;

/// Positive vertex weights with R(v) <= 2 R(u) across every edge, in both
/// directions.
#[derive(Debug, Clone)]
pub struct Valuation {
    weights: Vec<Weight>,
}

impl Valuation {
    pub fn new(g: &Graph, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != g.n() {
            return Err(Error::LengthMismatch {
                got: weights.len(),
                expected: g.n(),
            });
        }
        for (v, w) in weights.iter().enumerate() {
            if *w <= Weight::zero() {
                return Err(Error::InvalidValuation { u: v, v });
            }
        }
        for &(u, v) in g.edges() {
            if weights[v] > weights[u] * 2 {
                return Err(Error::InvalidValuation { u, v });
            }
            if weights[u] > weights[v] * 2 {
                return Err(Error::InvalidValuation { u: v, v: u });
            }
        }
        Ok(Valuation { weights })
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn at(&self, v: usize) -> Weight {
        self.weights[v]
    }

    /// w_R(c): the weighted pebble sum.
    pub fn weight(&self, c: &Configuration) -> Weight {
        debug_assert_eq!(c.len(), self.weights.len());
        c.counts()
            .iter()
            .enumerate()
            .map(|(v, &k)| self.weights[v] * Weight::from_integer(k as i64))
            .sum()
    }

    /// Loss of a step: 2 R(from) - R(to), always non-negative.
    pub fn loss(&self, m: Move) -> Weight {
        self.weights[m.from] * 2 - self.weights[m.to]
    }
}

/// R(v) = 2^min(d(root, v), cap). Always satisfies the edge condition since
/// BFS layers of adjacent vertices differ by at most one.
pub fn layered_valuation(g: &Graph, root: usize, cap: Option<usize>) -> Result<Valuation> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let weights = (0..g.n())
        .map(|v| {
            let d = g.dist(root, v).expect("connected");
            let ell = cap.map_or(d, |k| d.min(k));
            Weight::from_integer(1i64 << ell)
        })
        .collect();
    Valuation::new(g, weights)
}

/// The standard path valuation R(v_i) = 2^i on P_n (0-indexed vertices).
pub fn path_valuation(n: usize) -> Result<Valuation> {
    let g = Graph::path(n)?;
    layered_valuation(&g, 0, None)
}

/// Sjostrand threshold for the constant demand 2:
/// 2 * max_u sum_v 2^{d(u,v)}.
pub fn gamma_w2(g: &Graph) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let best = (0..g.n())
        .map(|u| {
            (0..g.n())
                .map(|v| 1u64 << g.dist(u, v).expect("connected"))
                .sum::<u64>()
        })
        .max()
        .unwrap_or(0);
    Ok(2 * best)
}

/// The coarse cap 2 |V| 2^diam.
pub fn coarse_cap(g: &Graph) -> Result<u64> {
    let diam = g.diameter().ok_or(Error::Disconnected)?;
    Ok(2 * g.n() as u64 * (1u64 << diam))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    Independence,
    Pebbling,
    Diameter,
    Odd,
    SjostrandCap,
    PathExtremal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lower,
    Upper,
}

/// Which parameter the bound concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Stacking,
    Clearing,
}

/// Witness payload, one shape per certificate kind.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CertWitness {
    /// A configuration the engine confirms is not stackable.
    NonStackable { config: Configuration },
    /// A configuration that cannot reach the target vertex.
    Unreachable {
        config: Configuration,
        target: usize,
    },
    /// A stacked configuration the engine confirms is not clearable, plus
    /// the odd invariants it is built from and the weaker odd-girth bound.
    OddStack {
        config: Configuration,
        center: usize,
        odd: usize,
        og: usize,
        og_bound: u64,
    },
    /// Formula inputs for the upper caps.
    Caps { gamma: u64, coarse: u64 },
    /// Extremal path family inputs.
    PathFamily { m: u64, n: usize },
}

/// A self-contained, re-checkable claim of a bound on a pebbling parameter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertKind,
    pub graph6: String,
    pub parameter: Parameter,
    pub direction: Direction,
    pub bound: u64,
    pub witness: CertWitness,
    pub verified: bool,
    /// "engine" when the witness was replayed against the deciders,
    /// "formula-only" when that check was skipped (budget).
    pub verifier_mode: String,
}

/// Lower bound 3 alpha(G) + 1 on the stacking number, witnessed by three
/// pebbles on each vertex of a maximum independent set. Complete graphs
/// (alpha = 1) instead carry the moveless all-ones witness of norm |V|,
/// which already forces the stronger |V| + 1. Applies to connected graphs
/// on at least three vertices; K_2 is the theorem's exclusion.
pub fn cert_independence(g: &Graph, opts: EngineOptions) -> Result<Certificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 3 {
        return Err(Error::Hypotheses(
            "the bound needs at least three vertices".into(),
        ));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let alpha = g.independence_number(&all);
    let witness = if alpha == 1 {
        Configuration::new(vec![1u32; g.n()])
    } else {
        let set = max_independent_set(g);
        debug_assert_eq!(set.len(), alpha);
        let mut counts = vec![0u32; g.n()];
        for &v in &set {
            counts[v] = 3;
        }
        Configuration::new(counts)
    };
    let mut engine = Engine::with_options(g, opts);
    let (verified, mode) = match engine.is_stackable(&witness) {
        Ok(stackable) => {
            if stackable {
                return Err(Error::Internal(
                    "independence witness was stackable".into(),
                ));
            }
            (true, "engine")
        }
        Err(Error::BudgetExceeded { .. }) => (false, "formula-only"),
        Err(e) => return Err(e),
    };
    Ok(Certificate {
        kind: CertKind::Independence,
        graph6: to_graph6(g)?,
        parameter: Parameter::Stacking,
        direction: Direction::Lower,
        bound: 3 * alpha as u64 + 1,
        witness: CertWitness::NonStackable { config: witness },
        verified,
        verifier_mode: mode.into(),
    })
}

fn max_independent_set(g: &Graph) -> Vec<usize> {
    // exhaustive branch and bound mirroring independence_number, keeping the
    // lexicographically smallest optimum
    fn go(
        g: &Graph,
        avail: &[usize],
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if current.len() + avail.len() <= best.len() {
            return;
        }
        let Some((&v, rest)) = avail.split_first() else {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        };
        // include v
        let reduced: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&u| !g.has_edge(u, v))
            .collect();
        current.push(v);
        go(g, &reduced, current, best);
        current.pop();
        // exclude v
        go(g, rest, current, best);
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let mut best = Vec::new();
    go(g, &all, &mut Vec::new(), &mut best);
    best
}

/// Lower bound pi(G) + 1 on the stacking number, witnessed by a
/// configuration of norm pi - 1 that cannot reach some vertex.
pub fn cert_pebbling(g: &Graph, opts: EngineOptions) -> Result<Certificate> {
    let pr = solver::pebbling_number(g)?;
    let mut engine = Engine::with_options(g, opts);
    if pr.value > 1 {
        if engine.can_reach_vertex(&pr.witness, pr.worst_target)? {
            return Err(Error::Internal("pebbling witness reaches its target".into()));
        }
    }
    Ok(Certificate {
        kind: CertKind::Pebbling,
        graph6: to_graph6(g)?,
        parameter: Parameter::Stacking,
        direction: Direction::Lower,
        bound: pr.value + 1,
        witness: CertWitness::Unreachable {
            config: pr.witness,
            target: pr.worst_target,
        },
        verified: true,
        verifier_mode: "engine".into(),
    })
}

/// Lower bound 2^diam + 1 on the stacking number, witnessed by 2^diam - 1
/// pebbles stacked at one end of a diametral pair.
pub fn cert_diameter(g: &Graph, opts: EngineOptions) -> Result<Certificate> {
    let diam = g.diameter().ok_or(Error::Disconnected)?;
    let (mut from, mut to) = (0, 0);
    'outer: for u in 0..g.n() {
        for v in 0..g.n() {
            if g.dist(u, v) == Some(diam) {
                from = u;
                to = v;
                break 'outer;
            }
        }
    }
    let mut counts = vec![0u32; g.n()];
    counts[from] = (1u32 << diam) - 1;
    let witness = Configuration::new(counts);
    let mut engine = Engine::with_options(g, opts);
    let (verified, mode) = if diam == 0 {
        (true, "formula-only")
    } else {
        match engine.can_reach_vertex(&witness, to) {
            Ok(reaches) => {
                if reaches {
                    return Err(Error::Internal("diameter witness reaches its target".into()));
                }
                (true, "engine")
            }
            Err(Error::BudgetExceeded { .. }) => (false, "formula-only"),
            Err(e) => return Err(e),
        }
    };
    Ok(Certificate {
        kind: CertKind::Diameter,
        graph6: to_graph6(g)?,
        parameter: Parameter::Stacking,
        direction: Direction::Lower,
        bound: (1u64 << diam) + 1,
        witness: CertWitness::Unreachable {
            config: witness,
            target: to,
        },
        verified,
        verifier_mode: mode.into(),
    })
}

/// Upper caps: the Sjostrand threshold Gamma_{w_2}(G) and the coarse
/// 2 |V| 2^diam. Applies to the stacking number and, on non-bipartite
/// graphs, the clearing number.
pub fn cert_sjostrand_cap(g: &Graph) -> Result<Certificate> {
    let gamma = gamma_w2(g)?;
    let coarse = coarse_cap(g)?;
    debug_assert!(gamma <= coarse);
    Ok(Certificate {
        kind: CertKind::SjostrandCap,
        graph6: to_graph6(g)?,
        parameter: Parameter::Stacking,
        direction: Direction::Upper,
        bound: gamma,
        witness: CertWitness::Caps { gamma, coarse },
        verified: true,
        verifier_mode: "formula-only".into(),
    })
}

/// Lower bound 3 * 2^((odd(G)-1)/2) - 2 on the clearing number, witnessed by
/// a stack of 3 * 2^k - 3 pebbles at a vertex attaining odd(G). The witness
/// check is skipped (with the flag) when it exceeds the engine budget.
pub fn cert_odd(g: &Graph, opts: EngineOptions) -> Result<Certificate> {
    let inv = g.odd_invariants()?;
    let k = (inv.odd - 1) / 2;
    let bound = 3 * (1u64 << k) - 2;
    let og_bound = 3 * (1u64 << ((inv.og - 1) / 2)) - 2;
    let center = (0..g.n()).find(|&v| inv.per_vertex[v] == inv.odd).unwrap();
    let mut counts = vec![0u32; g.n()];
    counts[center] = (3 * (1u64 << k) - 3) as u32;
    let witness = Configuration::new(counts);
    let mut engine = Engine::with_options(g, opts);
    let (verified, mode) = match engine.is_clearable(&witness) {
        Ok(clearable) => {
            if clearable {
                return Err(Error::Internal("odd witness was clearable".into()));
            }
            (true, "engine")
        }
        Err(Error::BudgetExceeded { .. }) => (false, "formula-only"),
        Err(e) => return Err(e),
    };
    Ok(Certificate {
        kind: CertKind::Odd,
        graph6: to_graph6(g)?,
        parameter: Parameter::Clearing,
        direction: Direction::Lower,
        bound,
        witness: CertWitness::OddStack {
            config: witness,
            center,
            odd: inv.odd,
            og: inv.og,
            og_bound,
        },
        verified,
        verifier_mode: mode.into(),
    })
}

/// The extremal path configuration: m pebbles on the first vertex, one on
/// the last.
pub fn econf(m: u32, n: usize) -> Result<Configuration> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("path needs n >= 2, got {n}")));
    }
    let mut counts = vec![0u32; n];
    counts[0] = m;
    counts[n - 1] += 1;
    Ok(Configuration::new(counts))
}

/// Certificate that econf(m, n) is not stackable on P_n, giving the lower
/// bound m + 2 on the stacking number. Refuses parameters outside the
/// congruence m = 2^n (mod 3) or the range m < 2^n. Engine-verified for
/// n <= 5, formula-only above.
pub fn check_path_extremal(m: u64, n: usize, opts: EngineOptions) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::CertificateRefused(format!("n = {n} < 2")));
    }
    if n >= 63 || m >= 1u64 << n {
        return Err(Error::CertificateRefused(format!("m = {m} >= 2^{n}")));
    }
    if m % 3 != (1u64 << n) % 3 {
        return Err(Error::CertificateRefused(format!(
            "m = {m} is not congruent to 2^{n} mod 3"
        )));
    }
    let g = Graph::path(n)?;
    let witness = econf(m as u32, n)?;
    let (verified, mode) = if n <= 5 {
        let mut engine = Engine::with_options(&g, opts);
        if engine.is_stackable(&witness)? {
            return Err(Error::Internal("extremal path configuration was stackable".into()));
        }
        (true, "engine")
    } else {
        (false, "formula-only")
    };
    Ok(Certificate {
        kind: CertKind::PathExtremal,
        graph6: to_graph6(&g)?,
        parameter: Parameter::Stacking,
        direction: Direction::Lower,
        bound: m + 2,
        witness: CertWitness::PathFamily { m, n },
        verified,
        verifier_mode: mode.into(),
    })
}

/// All certificates that apply to a graph, in a fixed order.
pub fn all_certificates(g: &Graph, opts: EngineOptions) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    out.push(cert_pebbling(g, opts)?);
    out.push(cert_diameter(g, opts)?);
    if g.n() >= 3 {
        out.push(cert_independence(g, opts)?);
    }
    out.push(cert_sjostrand_cap(g)?);
    if g.bipartition()?.is_none() {
        out.push(cert_odd(g, opts)?);
    }
    Ok(out)
}

/// Re-run the kind-specific verifier on a certificate. Lower bounds are
/// additionally cross-checked against `exact` when supplied (and upper
/// bounds the other way). Engine checks honor the certificate's
/// verifier_mode: formula-only witnesses are validated structurally only.
pub fn check_certificate(
    cert: &Certificate,
    g: &Graph,
    exact: Option<u64>,
    opts: EngineOptions,
) -> Result<bool> {
    if to_graph6(g)? != cert.graph6 {
        return Err(Error::MalformedCertificate(
            "certificate graph6 does not match the graph".into(),
        ));
    }
    if let Some(exact) = exact {
        let ok = match cert.direction {
            Direction::Lower => cert.bound <= exact,
            Direction::Upper => cert.bound >= exact,
        };
        if !ok {
            return Ok(false);
        }
    }
    let engine_check = cert.verifier_mode == "engine";
    let mut engine = Engine::with_options(g, opts);
    match (&cert.kind, &cert.witness) {
        (CertKind::Independence, CertWitness::NonStackable { config }) => {
            let alpha = g.independence_number(&(0..g.n()).collect::<Vec<_>>());
            if cert.bound != 3 * alpha as u64 + 1 {
                return Ok(false);
            }
            if alpha == 1 {
                // complete-graph branch: all-ones witness of norm |V|
                if config.counts().iter().any(|&k| k != 1) || g.n() < 3 {
                    return Ok(false);
                }
            } else {
                let supp = config.support();
                if supp.len() != alpha {
                    return Ok(false);
                }
                for &v in &supp {
                    if config.get(v) != 3 {
                        return Ok(false);
                    }
                    for &u in &supp {
                        if u != v && g.has_edge(u, v) {
                            return Ok(false);
                        }
                    }
                }
            }
            if engine_check {
                return Ok(!engine.is_stackable(config)?);
            }
            Ok(true)
        }
        (CertKind::Pebbling, CertWitness::Unreachable { config, target }) => {
            if config.norm() + 2 != cert.bound {
                return Ok(false);
            }
            if cert.bound >= 3 || config.norm() > 0 {
                return Ok(!engine.can_reach_vertex(config, *target)?);
            }
            Ok(true)
        }
        (CertKind::Diameter, CertWitness::Unreachable { config, target }) => {
            let diam = g.diameter().ok_or(Error::Disconnected)?;
            if cert.bound != (1u64 << diam) + 1 || config.norm() != (1u64 << diam) - 1 {
                return Ok(false);
            }
            if engine_check {
                return Ok(!engine.can_reach_vertex(config, *target)?);
            }
            Ok(true)
        }
        (CertKind::SjostrandCap, CertWitness::Caps { gamma, coarse }) => {
            Ok(*gamma == gamma_w2(g)? && *coarse == coarse_cap(g)? && cert.bound == *gamma)
        }
        (
            CertKind::Odd,
            CertWitness::OddStack {
                config,
                center,
                odd,
                og,
                og_bound,
            },
        ) => {
            let inv = g.odd_invariants()?;
            if inv.odd != *odd || inv.og != *og {
                return Ok(false);
            }
            let k = (inv.odd - 1) / 2;
            if cert.bound != 3 * (1u64 << k) - 2
                || *og_bound != 3 * (1u64 << ((inv.og - 1) / 2)) - 2
                || config.stacked_at() != Some(*center)
                || config.norm() != 3 * (1u64 << k) - 3
            {
                return Ok(false);
            }
            if engine_check {
                return Ok(!engine.is_clearable(config)?);
            }
            Ok(true)
        }
        (CertKind::PathExtremal, CertWitness::PathFamily { m, n }) => {
            if g.edges() != Graph::path(*n)?.edges() {
                return Ok(false);
            }
            if *n >= 63 || *m >= 1u64 << n || m % 3 != (1u64 << n) % 3 {
                return Ok(false);
            }
            if cert.bound != m + 2 {
                return Ok(false);
            }
            if engine_check {
                return Ok(!engine.is_stackable(&econf(*m as u32, *n)?)?);
            }
            Ok(true)
        }
        _ => Err(Error::MalformedCertificate(
            "witness payload does not match certificate kind".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn cfg(counts: &[u32]) -> Configuration {
        Configuration::new(counts.to_vec())
    }

    fn w(x: i64) -> Weight {
        Weight::from_integer(x)
    }

    #[test]
    fn weight_and_loss_on_path() {
        let r = path_valuation(3).unwrap();
        assert_eq!(r.weight(&cfg(&[4, 1, 0])), w(6));
        assert_eq!(r.loss(Move::new(0, 1)), w(0));
        assert_eq!(r.loss(Move::new(1, 0)), w(3));
    }

    #[test]
    fn valuation_edge_condition() {
        let p2 = Graph::path(2).unwrap();
        assert!(Valuation::new(&p2, vec![w(1), w(3)]).is_err());
        assert!(Valuation::new(&p2, vec![w(1), w(2)]).is_ok());
        assert!(Valuation::new(&p2, vec![w(0), w(1)]).is_err());
        // rational weights are fine
        assert!(Valuation::new(&p2, vec![Weight::one() / 2, w(1)]).is_ok());
    }

    #[test]
    fn layered_valuation_examples() {
        let p4 = Graph::path(4).unwrap();
        let r = layered_valuation(&p4, 0, None).unwrap();
        assert_eq!(r.weights(), &[w(1), w(2), w(4), w(8)]);
        let c5 = Graph::cycle(5).unwrap();
        let r = layered_valuation(&c5, 0, Some(2)).unwrap();
        assert_eq!(r.weights(), &[w(1), w(2), w(4), w(4), w(2)]);
        let r = layered_valuation(&c5, 0, Some(0)).unwrap();
        assert!(r.weights().iter().all(|x| *x == w(1)));
    }

    #[test]
    fn gamma_and_coarse() {
        let p2 = Graph::path(2).unwrap();
        assert_eq!(gamma_w2(&p2).unwrap(), 6);
        assert_eq!(coarse_cap(&p2).unwrap(), 8);
    }

    #[test]
    fn independence_cert_k33() {
        let g = Graph::complete_multipartite(&[3, 3]).unwrap();
        let cert = cert_independence(&g, EngineOptions::default()).unwrap();
        assert_eq!(cert.bound, 10);
        assert!(cert.verified);
        assert!(check_certificate(&cert, &g, Some(10), EngineOptions::default()).unwrap());
    }

    #[test]
    fn independence_cert_rejects_k2() {
        let k2 = Graph::complete(2).unwrap();
        assert!(cert_independence(&k2, EngineOptions::default()).is_err());
    }

    #[test]
    fn independence_cert_c4_and_k4() {
        let c4 = Graph::cycle(4).unwrap();
        let cert = cert_independence(&c4, EngineOptions::default()).unwrap();
        assert_eq!(cert.bound, 7);
        let k4 = Graph::complete(4).unwrap();
        let cert = cert_independence(&k4, EngineOptions::default()).unwrap();
        assert_eq!(cert.bound, 4);
    }

    #[test]
    fn tampered_independence_witness_fails() {
        let g = Graph::complete_multipartite(&[3, 3]).unwrap();
        let mut cert = cert_independence(&g, EngineOptions::default()).unwrap();
        // two pebbles per independent vertex can be stacked
        cert.witness = CertWitness::NonStackable {
            config: cfg(&[2, 2, 2, 0, 0, 0]),
        };
        assert!(!check_certificate(&cert, &g, None, EngineOptions::default()).unwrap());
    }

    #[test]
    fn pebbling_cert_k3() {
        let k3 = Graph::complete(3).unwrap();
        let cert = cert_pebbling(&k3, EngineOptions::default()).unwrap();
        assert_eq!(cert.bound, 4);
        assert!(check_certificate(&cert, &k3, Some(4), EngineOptions::default()).unwrap());
    }

    #[test]
    fn diameter_cert_p4() {
        let p4 = Graph::path(4).unwrap();
        let cert = cert_diameter(&p4, EngineOptions::default()).unwrap();
        assert_eq!(cert.bound, 9);
        assert!(check_certificate(&cert, &p4, Some(15), EngineOptions::default()).unwrap());
        // a wrong exact value flips the cross-check
        assert!(!check_certificate(&cert, &p4, Some(8), EngineOptions::default()).unwrap());
    }

    #[test]
    fn odd_cert_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let cert = cert_odd(&c5, EngineOptions::default()).unwrap();
        assert_eq!(cert.bound, 10);
        assert!(check_certificate(&cert, &c5, Some(10), EngineOptions::default()).unwrap());

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(cert_odd(&k4, EngineOptions::default()).unwrap().bound, 4);

        // triangle plus pendant path: odd = 7, og = 3
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let cert = cert_odd(&g, EngineOptions::default()).unwrap();
        assert_eq!(cert.bound, 22);
        match cert.witness {
            CertWitness::OddStack { og_bound, .. } => assert_eq!(og_bound, 4),
            _ => panic!("wrong witness shape"),
        }
    }

    #[test]
    fn econf_and_path_extremal() {
        assert_eq!(econf(13, 4).unwrap(), cfg(&[13, 0, 0, 1]));
        assert_eq!(econf(1, 2).unwrap(), cfg(&[1, 1]));
        let cert = check_path_extremal(13, 4, EngineOptions::default()).unwrap();
        assert_eq!(cert.bound, 15);
        assert!(cert.verified);
        // m = 4, n = 3: 4 = 1 mod 3 but 2^3 = 2 mod 3
        assert!(matches!(
            check_path_extremal(4, 3, EngineOptions::default()),
            Err(Error::CertificateRefused(_))
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let c5 = Graph::cycle(5).unwrap();
        let cert = cert_odd(&c5, EngineOptions::default()).unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["kind"], "odd");
        assert_eq!(json["direction"], "lower");
        assert_eq!(json["bound"], 10);
        assert!(json["verified"].as_bool().unwrap());
        assert_eq!(json["verifier_mode"], "engine");
        let back: Certificate = serde_json::from_value(json).unwrap();
        assert!(check_certificate(&back, &c5, None, EngineOptions::default()).unwrap());
    }
}
