//! Irreducible silting mutation, exchange graphs of two-term silting objects
//! and a bounded silting-discreteness probe.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::perf::{cocone, cone, hom_basis, ChainMap, PerfComplex, Session, SiltCandidate};
use crate::silting::{geq, is_presilting};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

/// Replaces the `k`-th summand `X` of `T = X ⊕ R` through an exchange triangle.
///
/// Left: `X → R' → Y → X[1]` with `X → R'` a left `add R`-approximation.
/// Right: `Y → R' → X → Y[1]` with `R' → X` a right `add R`-approximation.
/// Split summands of a non-minimal approximation reappear in `cone` as copies of
/// summands of `R`, so discarding those yields the minimal exchange.
pub fn mutate(sess: &mut Session, t: &SiltCandidate, k: usize, dir: Direction) -> Result<SiltCandidate> {
    let Some(&xk) = t.ids.get(k) else {
        return Err(Error::Precondition(format!("summand index {k} out of range for {} summands", t.len())));
    };
    let rest = SiltCandidate::from_ids(t.ids.iter().copied().filter(|&i| i != xk).collect());
    let x = sess.complex(xk).clone();
    let others: Vec<PerfComplex> = rest.ids.iter().map(|&i| sess.complex(i).clone()).collect();
    let y = match dir {
        Direction::Left => {
            let maps: Vec<ChainMap> = others.iter().flat_map(|o| hom_basis(&x, o, 0)).collect();
            if maps.is_empty() {
                x.shift(1)
            } else {
                cone(&ChainMap::into_sum(&maps, &x)?).cone
            }
        }
        Direction::Right => {
            let maps: Vec<ChainMap> = others.iter().flat_map(|o| hom_basis(o, &x, 0)).collect();
            if maps.is_empty() {
                x.shift(-1)
            } else {
                cocone(&ChainMap::from_sum(&maps, &x)?).0
            }
        }
    };
    let fresh: Vec<usize> = sess.summands(&y)?.into_iter().filter(|i| !rest.ids.contains(i)).collect();
    let fresh = SiltCandidate::from_ids(fresh);
    if fresh.len() != 1 || fresh.ids[0] == xk {
        return Err(Error::Degenerate(format!("exchange triangle produced {} new summands", fresh.len())));
    }
    let out = rest.union(&fresh);
    if out.len() != t.len() || !is_presilting(sess, &out).verdict {
        return Err(Error::Degenerate("mutation is not presilting with the same summand count".into()));
    }
    Ok(out)
}

/// An edge between `a` and `b`: `b = μ_dir(a)` at summand `summand` of `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub summand: usize,
    pub direction: Direction,
}

/// The part of the exchange graph of two-term silting objects reached from `M`.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    pub reference: SiltCandidate,
    pub nodes: Vec<SiltCandidate>,
    /// One edge per unordered pair, oriented from the node expanded first.
    pub edges: Vec<Edge>,
    /// Mutations that left the two-term window; computed, not expanded.
    pub external: usize,
    pub complete: bool,
    /// Nodes with a mutation that was dropped by the cap.
    pub frontier: Vec<usize>,
}

/// Breadth-first closure of `{M}` under mutations that stay two-term with respect
/// to `M`, keeping at most `cap` nodes.
pub fn explore_silt2(sess: &mut Session, m: &SiltCandidate, cap: usize) -> Result<ExchangeGraph> {
    let m1 = sess.shift_candidate(m, 1)?;
    closure(sess, m, cap, |sess, x| geq(sess, m, x).verdict && geq(sess, x, &m1).verdict)
}

fn closure(
    sess: &mut Session,
    start: &SiltCandidate,
    cap: usize,
    mut inside: impl FnMut(&mut Session, &SiltCandidate) -> bool,
) -> Result<ExchangeGraph> {
    let mut index: BTreeMap<SiltCandidate, usize> = BTreeMap::new();
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut seen_edges = BTreeSet::new();
    let mut frontier = Vec::new();
    let mut external = 0;
    let mut queue = VecDeque::new();
    if cap > 0 {
        index.insert(start.clone(), 0);
        nodes.push(start.clone());
        queue.push_back(0);
    }
    while let Some(i) = queue.pop_front() {
        let node = nodes[i].clone();
        let mut capped = false;
        for k in 0..node.len() {
            for dir in [Direction::Left, Direction::Right] {
                let next = mutate(sess, &node, k, dir)?;
                if !inside(sess, &next) {
                    external += 1;
                    continue;
                }
                let j = match index.get(&next) {
                    Some(&j) => j,
                    None if nodes.len() < cap => {
                        nodes.push(next.clone());
                        index.insert(next, nodes.len() - 1);
                        queue.push_back(nodes.len() - 1);
                        nodes.len() - 1
                    }
                    None => {
                        capped = true;
                        continue;
                    }
                };
                if seen_edges.insert((i.min(j), i.max(j))) {
                    edges.push(Edge { a: i, b: j, summand: k, direction: dir });
                }
            }
        }
        if capped {
            frontier.push(i);
        }
    }
    let complete = cap > 0 && frontier.is_empty();
    Ok(ExchangeGraph { reference: start.clone(), nodes, edges, external, complete, frontier })
}

impl ExchangeGraph {
    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.a == i || e.b == i).count()
    }

    /// Every node has two neighbours and the graph is connected with as many
    /// edges as nodes.
    pub fn is_cycle(&self) -> bool {
        let n = self.nodes.len();
        n >= 3 && self.edges.len() == n && (0..n).all(|i| self.degree(i) == 2) && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for e in &self.edges {
                for (u, v) in [(e.a, e.b), (e.b, e.a)] {
                    if u == i && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn node_json(sess: &Session, c: &SiltCandidate) -> serde_json::Value {
        json!(c.ids.iter().map(|&i| sess.complex(i).to_json()).collect::<Vec<_>>())
    }

    pub fn to_json(&self, sess: &Session) -> serde_json::Value {
        let nodes: Vec<_> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, c)| json!({ "id": i, "summands": Self::node_json(sess, c), "label": node_label(sess, c) }))
            .collect();
        json!({
            "reference": Self::node_json(sess, &self.reference),
            "nodes": nodes,
            "edges": self.edges,
            "external": self.external,
            "complete": self.complete,
            "frontier": self.frontier,
        })
    }

    /// Undirected Graphviz text.
    pub fn to_dot(&self, sess: &Session) -> String {
        let mut s = String::from("graph silt2 {\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, c) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", node_label(sess, c).replace('"', "'"));
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -- n{};", e.a, e.b);
        }
        s.push_str("}\n");
        s
    }
}

/// Summand labels joined by `\n` for display.
pub fn node_label(sess: &Session, c: &SiltCandidate) -> String {
    c.ids.iter().map(|&i| sess.complex(i).label()).collect::<Vec<_>>().join("\\n")
}

pub const PROBE_DISCLAIMER: &str = "Bounded probe: this report enumerates silting objects M with \
Λ ≥ M ≥ Λ[d] up to a node cap and explores the two-term silting objects of each. A positive \
result means every enumeration closed within the caps; it is evidence for, not a proof of, \
silting-discreteness. Silting-discreteness is equivalent to every compact large silting object \
being equivalent to a classic one; that equivalence is context only and is not checked here.";

/// Silting-discreteness probe up to shift depth `depth`.
#[derive(Clone, Debug)]
pub struct DiscreteProbe {
    pub depth: usize,
    pub cap: usize,
    /// Silting objects between `Λ` and `Λ[depth]` reached by mutation.
    pub window: ExchangeGraph,
    /// `(window node, closure size, complete)` per explored reference.
    pub closures: Vec<(usize, usize, bool)>,
    pub positive: bool,
}

/// Enumerates silting objects `M` with `Λ ≥ M ≥ Λ[depth]` by mutation from `Λ`
/// and runs [`explore_silt2`] from each; positive iff every closure completes.
pub fn silting_discrete_probe(sess: &mut Session, depth: usize, cap: usize) -> Result<DiscreteProbe> {
    let lambda = sess.candidate(&PerfComplex::lambda(&sess.alg.clone()))?;
    let window = explore_window(sess, &lambda, depth as i32, cap)?;
    let mut closures = Vec::new();
    for (i, m) in window.nodes.clone().iter().enumerate() {
        let g = explore_silt2(sess, m, cap)?;
        closures.push((i, g.nodes.len(), g.complete));
    }
    let positive = window.complete && closures.iter().all(|c| c.2);
    Ok(DiscreteProbe { depth, cap, window, closures, positive })
}

/// Closure of `{Λ}` under mutations staying in `Λ ≥ M ≥ Λ[depth]`.
fn explore_window(sess: &mut Session, lambda: &SiltCandidate, depth: i32, cap: usize) -> Result<ExchangeGraph> {
    let bottom = sess.shift_candidate(lambda, depth)?;
    closure(sess, lambda, cap, |sess, x| geq(sess, lambda, x).verdict && geq(sess, x, &bottom).verdict)
}

impl DiscreteProbe {
    pub fn to_json(&self) -> serde_json::Value {
        let closures: Vec<_> =
            self.closures.iter().map(|&(i, n, c)| json!({ "reference": i, "nodes": n, "complete": c })).collect();
        json!({
            "disclaimer": PROBE_DISCLAIMER,
            "depth": self.depth,
            "cap": self.cap,
            "window_nodes": self.window.nodes.len(),
            "window_complete": self.window.complete,
            "closures": closures,
            "verdict": if self.positive {
                format!("silting-discrete up to depth {}", self.depth)
            } else {
                format!("not confirmed: an enumeration hit the cap {}", self.cap)
            },
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{PROBE_DISCLAIMER}\n\n");
        let _ = writeln!(s, "depth {}, cap {}", self.depth, self.cap);
        let _ = writeln!(s, "window: {} silting objects, complete = {}", self.window.nodes.len(), self.window.complete);
        for &(i, n, c) in &self.closures {
            let _ = writeln!(s, "  M{i}: {n} two-term silting objects, complete = {c}");
        }
        let verdict = if self.positive { format!("silting-discrete up to depth {}", self.depth) } else { "not confirmed".into() };
        let _ = writeln!(s, "verdict: {verdict}");
        s
    }
}
