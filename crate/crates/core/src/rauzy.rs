//! Rauzy graphs, elementary circuits and quasi-small circuit classification.
//!
//! `Γ_n(w)` has the length-`n` factors as vertices and the length-`(n+1)`
//! factors as edges, each edge running from its length-`n` prefix to its
//! length-`n` suffix. Every elementary circuit of `Γ_l` is determined by a
//! primitive word `q` (up to conjugacy): its vertices are `[q]_l` and its
//! edges `[q]_{l+1}`. Circuits are therefore identified as `C(q, l)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::source::{Alphabet, Horizon, Prefix, WordSpec};
use crate::word::{canonical_rotation, is_primitive, FactorSet, Sym};

pub const DEFAULT_CIRCUIT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: Vec<Sym>,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyGraph {
    level: usize,
    vertices: Vec<Vec<Sym>>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
}

impl RauzyGraph {
    /// Builds `Γ_level` from explicit vertex and edge words. Every edge must
    /// have length `level + 1` with both endpoints among the vertices.
    pub fn new(level: usize, vertices: Vec<Vec<Sym>>, edges: Vec<Vec<Sym>>) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidSpec("Rauzy graphs start at level 1".into()));
        }
        let vertices: Vec<Vec<Sym>> = vertices
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if let Some(v) = vertices.iter().find(|v| v.len() != level) {
            return Err(Error::InvalidSpec(format!(
                "vertex of length {} in a level-{level} graph",
                v.len()
            )));
        }
        let index: HashMap<&[Sym], usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_slice(), i))
            .collect();
        let labels: BTreeSet<Vec<Sym>> = edges.into_iter().collect();
        let mut out = vec![Vec::new(); vertices.len()];
        let mut edge_list = Vec::with_capacity(labels.len());
        for label in labels {
            if label.len() != level + 1 {
                return Err(Error::InvalidSpec(format!(
                    "edge of length {} in a level-{level} graph",
                    label.len()
                )));
            }
            let endpoint = |w: &[Sym]| {
                index
                    .get(w)
                    .copied()
                    .ok_or_else(|| Error::InvalidSpec("edge endpoint is not a vertex".to_string()))
            };
            let from = endpoint(&label[..level])?;
            let to = endpoint(&label[1..])?;
            out[from].push(to);
            edge_list.push(Edge { label, from, to });
        }
        for targets in &mut out {
            targets.sort_unstable();
        }
        Ok(RauzyGraph {
            level,
            vertices,
            edges: edge_list,
            out,
        })
    }

    pub fn from_factor_sets(vertices: &FactorSet, edges: &FactorSet) -> Result<Self> {
        Self::new(
            vertices.n(),
            vertices.iter().map(<[Sym]>::to_vec).collect(),
            edges.iter().map(<[Sym]>::to_vec).collect(),
        )
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<Sym>] {
        &self.vertices
    }

    /// Edges ordered by label.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn vertex_index(&self, word: &[Sym]) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.as_slice().cmp(word))
            .ok()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.out[from].binary_search(&to).is_ok()
    }

    /// Connected when directions are ignored. The empty graph is connected.
    pub fn is_weakly_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut undirected = vec![Vec::new(); n];
        for e in &self.edges {
            undirected[e.from].push(e.to);
            undirected[e.to].push(e.from);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &undirected[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Primitive root (least rotation) of the circuit visiting `cycle` in
    /// order: the last letters of its consecutive edges.
    pub fn circuit_root(&self, cycle: &[usize]) -> Result<Vec<Sym>> {
        if cycle.is_empty() {
            return Err(Error::NotACircuit("no vertices".into()));
        }
        let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
        if distinct.len() != cycle.len() {
            return Err(Error::NotACircuit("a vertex repeats".into()));
        }
        if let Some(&v) = cycle.iter().find(|&&v| v >= self.vertices.len()) {
            return Err(Error::NotACircuit(format!("no vertex {v}")));
        }
        let k = cycle.len();
        for i in 0..k {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            if !self.has_edge(a, b) {
                return Err(Error::NotACircuit(format!(
                    "no edge from vertex {a} to {b}"
                )));
            }
        }
        // edge i ends at cycle[i+1], so its last letter is that vertex's last
        let letters: Vec<Sym> = (1..=k)
            .map(|i| *self.vertices[cycle[i % k]].last().expect("level >= 1"))
            .collect();
        let root = canonical_rotation(&letters)?;
        debug_assert!(is_primitive(&root).unwrap_or(false));
        Ok(root)
    }

    /// All elementary circuits, ordered by `(size, root)`.
    pub fn elementary_circuits(&self, cap: usize) -> Result<Vec<Circuit>> {
        let mut circuits = Vec::new();
        for cycle in johnson_cycles(&self.out, cap)? {
            let root = self.circuit_root(&cycle)?;
            circuits.push(Circuit::new(root, self.level, cycle));
        }
        circuits.sort_by(|a, b| (a.size, &a.root).cmp(&(b.size, &b.root)));
        Ok(circuits)
    }

    /// Graphviz rendering with stable node and edge order.
    pub fn to_dot(&self, alphabet: &Alphabet) -> String {
        let mut out = format!("digraph rauzy_{} {{\n", self.level);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", escape(&alphabet.render(v)));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{}\"];",
                e.from,
                e.to,
                escape(&alphabet.render(&e.label))
            );
        }
        out.push_str("}\n");
        out
    }

    /// `vertices=<v> edges=<e> circuits=<c> quasi_small=<q> bound=<e-v+1>`
    pub fn summary(&self, circuits: &[Circuit]) -> String {
        let v = self.vertices.len() as i64;
        let e = self.edges.len() as i64;
        format!(
            "vertices={} edges={} circuits={} quasi_small={} bound={}",
            v,
            e,
            circuits.len(),
            count_quasi_small(circuits),
            e - v + 1
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CircuitKind {
    /// Size at most the level.
    Small,
    /// Size exactly level + 1; the root is primitive.
    PrimitiveLarge,
    NotQuasiSmall,
}

impl CircuitKind {
    pub fn is_quasi_small(self) -> bool {
        self != CircuitKind::NotQuasiSmall
    }
}

/// The circuit `C(root, level)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub root: Vec<Sym>,
    pub level: usize,
    pub size: usize,
    pub kind: CircuitKind,
    /// Vertex indices in traversal order, starting from the smallest.
    pub vertices: Vec<usize>,
}

impl Circuit {
    fn new(root: Vec<Sym>, level: usize, vertices: Vec<usize>) -> Self {
        let size = vertices.len();
        Circuit {
            kind: classify(size, level),
            root,
            level,
            size,
            vertices,
        }
    }
}

fn classify(size: usize, level: usize) -> CircuitKind {
    if size <= level {
        CircuitKind::Small
    } else if size == level + 1 {
        CircuitKind::PrimitiveLarge
    } else {
        CircuitKind::NotQuasiSmall
    }
}

pub fn classify_circuit(c: &Circuit) -> CircuitKind {
    classify(c.size, c.level)
}

pub fn count_quasi_small(circuits: &[Circuit]) -> usize {
    circuits.iter().filter(|c| c.kind.is_quasi_small()).count()
}

pub fn build_rauzy_graph(spec: &WordSpec, n: usize, horizon: Horizon) -> Result<RauzyGraph> {
    let prefix = Prefix::new(spec, horizon)?;
    RauzyGraph::from_factor_sets(&prefix.factors(n)?, &prefix.factors(n + 1)?)
}

/// `Qs_w(n)`, by enumerating the circuits of `Γ_n`.
pub fn quasi_small_count(spec: &WordSpec, n: usize, horizon: Horizon, cap: usize) -> Result<usize> {
    let graph = build_rauzy_graph(spec, n, horizon)?;
    Ok(count_quasi_small(&graph.elementary_circuits(cap)?))
}

/// `Qs_w(n)` without building circuits: the number of primitive `q` with
/// `|q| <= n + 1` and `[q]_{n+1} ⊆ F_w(n+1)`.
pub fn quasi_small_count_by_containment(edges: &FactorSet) -> usize {
    crate::complexity::extended_lie_roots(edges).len()
}

/// Johnson's algorithm. Each circuit is listed once, starting at its
/// smallest vertex.
fn johnson_cycles(out: &[Vec<usize>], cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = out.len();
    let mut rev = vec![Vec::new(); n];
    for (v, targets) in out.iter().enumerate() {
        for &w in targets {
            rev[w].push(v);
        }
    }
    let mut cycles = Vec::new();
    let mut blocked = vec![false; n];
    let mut block_map: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_scc = vec![false; n];

    for s in 0..n {
        // strongly connected component of s within vertices >= s
        let forward = reach(s, out, s);
        let backward = reach(s, &rev, s);
        let mut any = false;
        for v in s..n {
            in_scc[v] = forward[v] && backward[v];
            any |= in_scc[v] && v != s;
        }
        if !any && !out[s].contains(&s) {
            continue;
        }
        for v in s..n {
            blocked[v] = false;
            block_map[v].clear();
        }

        let mut path = vec![s];
        let mut stack: Vec<(usize, usize, bool)> = vec![(s, 0, false)];
        blocked[s] = true;
        while let Some(top) = stack.last_mut() {
            let (v, next, _) = *top;
            if next < out[v].len() {
                top.1 += 1;
                let w = out[v][next];
                if w < s || !in_scc[w] {
                    continue;
                }
                if w == s {
                    top.2 = true;
                    cycles.push(path.clone());
                    if cycles.len() > cap {
                        return Err(Error::CircuitExplosion { cap });
                    }
                } else if !blocked[w] {
                    blocked[w] = true;
                    path.push(w);
                    stack.push((w, 0, false));
                }
            } else {
                let found = top.2;
                if found {
                    unblock(v, &mut blocked, &mut block_map);
                } else {
                    for &w in &out[v] {
                        if w >= s && in_scc[w] && !block_map[w].contains(&v) {
                            block_map[w].push(v);
                        }
                    }
                }
                stack.pop();
                path.pop();
                if let Some(parent) = stack.last_mut() {
                    parent.2 |= found;
                }
            }
        }
    }
    Ok(cycles)
}

fn reach(start: usize, adj: &[Vec<usize>], floor: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if w >= floor && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

fn unblock(u: usize, blocked: &mut [bool], block_map: &mut [Vec<usize>]) {
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        if !blocked[x] {
            continue;
        }
        blocked[x] = false;
        stack.append(&mut block_map[x]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{choose_horizon, HorizonPolicy};
    use crate::word::class_power_set;

    fn graph(spec: &str, n: usize) -> (WordSpec, RauzyGraph) {
        let spec = WordSpec::parse(spec).unwrap();
        let h = choose_horizon(&spec, n + 1, &HorizonPolicy::default());
        let g = build_rauzy_graph(&spec, n, h).unwrap();
        (spec, g)
    }

    fn words(alphabet: &Alphabet, ws: &[Vec<Sym>]) -> Vec<String> {
        ws.iter().map(|w| alphabet.render(w)).collect()
    }

    fn enc(text: &str) -> Vec<Sym> {
        text.bytes().map(|b| b - b'a').collect()
    }

    #[test]
    fn worked_example_level_four() {
        let (spec, g) = graph("power abaaabaaaaba", 4);
        let a = spec.alphabet();
        assert_eq!(
            words(a, g.vertices()),
            vec!["aaaa", "aaab", "aaba", "abaa", "baaa", "baab"]
        );
        assert_eq!(g.edges().len(), 8);
        let circuits = g.elementary_circuits(DEFAULT_CIRCUIT_CAP).unwrap();
        let roots: Vec<String> = circuits.iter().map(|c| a.render(&c.root)).collect();
        assert_eq!(roots, vec!["aab", "aaab", "aaaab"]);
        let kinds: Vec<CircuitKind> = circuits.iter().map(classify_circuit).collect();
        assert_eq!(
            kinds,
            vec![
                CircuitKind::Small,
                CircuitKind::Small,
                CircuitKind::PrimitiveLarge
            ]
        );
        assert_eq!(
            g.summary(&circuits),
            "vertices=6 edges=8 circuits=3 quasi_small=3 bound=3"
        );
    }

    #[test]
    fn two_cycle() {
        let (spec, g) = graph("power ab", 1);
        assert_eq!(words(spec.alphabet(), g.vertices()), vec!["a", "b"]);
        let labels: Vec<Vec<Sym>> = g.edges().iter().map(|e| e.label.clone()).collect();
        assert_eq!(words(spec.alphabet(), &labels), vec!["ab", "ba"]);
        let c = g.elementary_circuits(DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].root, vec![0, 1]);
        assert_eq!(c[0].size, 2);
        assert_eq!(c[0].kind, CircuitKind::PrimitiveLarge);
    }

    #[test]
    fn aba_level_two() {
        let (spec, g) = graph("power aba", 2);
        assert_eq!(words(spec.alphabet(), g.vertices()), vec!["aa", "ab", "ba"]);
        assert_eq!(g.edges().len(), 3);
        let h = choose_horizon(&spec, 3, &HorizonPolicy::default());
        // a single 3-cycle, C(aab, 2)
        assert_eq!(
            quasi_small_count(&spec, 2, h, DEFAULT_CIRCUIT_CAP).unwrap(),
            1
        );
    }

    #[test]
    fn weak_connectivity() {
        let g = RauzyGraph::new(1, vec![vec![0], vec![1]], vec![]).unwrap();
        assert!(!g.is_weakly_connected());
        let g = RauzyGraph::new(1, vec![vec![0]], vec![]).unwrap();
        assert!(g.is_weakly_connected());
        let g = RauzyGraph::new(1, vec![], vec![]).unwrap();
        assert!(g.is_weakly_connected());
        for (spec, n) in [
            ("power abaaabaaaaba", 4),
            ("morphic 0 0->01 1->10", 7),
            ("finite abcab", 2),
        ] {
            assert!(graph(spec, n).1.is_weakly_connected());
        }
    }

    #[test]
    fn roots_of_circuits() {
        let g = RauzyGraph::new(
            3,
            vec![enc("aab"), enc("aba"), enc("baa")],
            vec![enc("aaba"), enc("abaa"), enc("baab")],
        )
        .unwrap();
        let (aab, aba, baa) = (0, 1, 2);
        let root = g.circuit_root(&[aab, aba, baa]).unwrap();
        assert_eq!(root, enc("aab"));
        assert_eq!(
            class_power_set(&root, 3).unwrap(),
            [enc("aab"), enc("aba"), enc("baa")].into()
        );
        assert_eq!(
            class_power_set(&root, 4).unwrap(),
            [enc("aaba"), enc("abaa"), enc("baab")].into()
        );
        assert!(matches!(
            g.circuit_root(&[aab, baa, aba]),
            Err(Error::NotACircuit(_))
        ));
        assert!(matches!(
            g.circuit_root(&[aab, aab]),
            Err(Error::NotACircuit(_))
        ));

        let g = RauzyGraph::new(4, vec![enc("aaaa")], vec![enc("aaaaa")]).unwrap();
        assert_eq!(g.circuit_root(&[0]).unwrap(), enc("a"));
    }

    #[test]
    fn cap_is_enforced() {
        // complete binary graph at level 2 has more than 3 circuits
        let (_, g) = graph("finite aaabbbabaabba", 2);
        assert!(g.elementary_circuits(DEFAULT_CIRCUIT_CAP).unwrap().len() > 3);
        assert_eq!(
            g.elementary_circuits(3),
            Err(Error::CircuitExplosion { cap: 3 })
        );
    }

    #[test]
    fn dot_output_is_stable() {
        let (spec, g) = graph("power aba", 2);
        let dot = g.to_dot(spec.alphabet());
        assert_eq!(
            dot,
            "digraph rauzy_2 {\n  v0 [label=\"aa\"];\n  v1 [label=\"ab\"];\n  v2 [label=\"ba\"];\n  v0 -> v1 [label=\"aab\"];\n  v1 -> v2 [label=\"aba\"];\n  v2 -> v0 [label=\"baa\"];\n}\n"
        );
    }
}
