//! Colored crystal graphs, the tensor rule (reverse convention), axiom checks,
//! connected components and rooted colored isomorphism.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootVec, WeightH};

/// Value of `f̃_i b` or `ẽ_i b` in a possibly truncated graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Arrow<T = usize> {
    None,
    To(T),
    /// Beyond the truncation frontier.
    Unknown,
}

impl<T: Copy> Arrow<T> {
    pub fn target(self) -> Option<T> {
        match self {
            Arrow::To(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_unknown(self) -> bool {
        matches!(self, Arrow::Unknown)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Arrow<U> {
        match self {
            Arrow::None => Arrow::None,
            Arrow::To(t) => Arrow::To(f(t)),
            Arrow::Unknown => Arrow::Unknown,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub label: String,
    pub wt: WeightH,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
    pub depth: Option<usize>,
    pub nu: Option<RootVec>,
    pub f: Vec<Arrow>,
    pub e: Vec<Arrow>,
}

impl Node {
    pub fn is_frontier(&self) -> bool {
        self.f.iter().chain(&self.e).any(|a| a.is_unknown())
    }

    /// All `ẽ_i` vanish.
    pub fn is_highest(&self) -> bool {
        self.e.iter().all(|a| *a == Arrow::None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    n: usize,
    nodes: Vec<Node>,
}

impl CrystalGraph {
    pub fn new(n: usize) -> Self {
        CrystalGraph { n, nodes: Vec::new() }
    }

    /// Seminormal graph from a labelled arrow list; ε/φ are string lengths and
    /// `wt = φ − ε`.
    pub fn from_arrows(n: usize, labels: &[String], arrows: &[(usize, usize, usize)]) -> Self {
        let m = labels.len();
        let mut f = vec![vec![Arrow::None; n]; m];
        let mut e = vec![vec![Arrow::None; n]; m];
        for &(s, c, d) in arrows {
            assert_eq!(f[s][c], Arrow::None, "two outgoing {c}-arrows at {}", labels[s]);
            assert_eq!(e[d][c], Arrow::None, "two incoming {c}-arrows at {}", labels[d]);
            f[s][c] = Arrow::To(d);
            e[d][c] = Arrow::To(s);
        }
        let string = |start: usize, c: usize, dir: &Vec<Vec<Arrow>>| {
            let mut k = 0;
            let mut cur = start;
            while let Arrow::To(nx) = dir[cur][c] {
                k += 1;
                cur = nx;
                assert!(k <= m as i64, "infinite {c}-string");
            }
            k
        };
        let nodes = (0..m)
            .map(|v| {
                let eps: Vec<i64> = (0..n).map(|c| string(v, c, &e)).collect();
                let phi: Vec<i64> = (0..n).map(|c| string(v, c, &f)).collect();
                let wt = WeightH(phi.iter().zip(&eps).map(|(p, e)| p - e).collect());
                Node {
                    label: labels[v].clone(),
                    wt,
                    eps,
                    phi,
                    depth: None,
                    nu: None,
                    f: f[v].clone(),
                    e: e[v].clone(),
                }
            })
            .collect();
        CrystalGraph { n, nodes }
    }

    pub fn push(&mut self, node: Node) -> usize {
        assert_eq!(node.f.len(), self.n);
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    pub fn node_mut(&mut self, id: usize) -> &mut Node {
        &mut self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn f(&self, id: usize, i: usize) -> Arrow {
        self.nodes[id].f[i]
    }

    pub fn e(&self, id: usize, i: usize) -> Arrow {
        self.nodes[id].e[i]
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    /// Known arrows `(src, colour, dst)`, ordered by source then colour.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.nodes.iter().enumerate().flat_map(|(s, nd)| {
            nd.f.iter()
                .enumerate()
                .filter_map(move |(c, a)| a.target().map(|d| (s, c, d)))
        })
    }

    /// Same nodes with every arrow reversed (ε and φ swap, weights negate).
    pub fn reversed(&self) -> CrystalGraph {
        let nodes = self
            .nodes
            .iter()
            .map(|nd| Node {
                label: nd.label.clone(),
                wt: WeightH(nd.wt.0.iter().map(|x| -x).collect()),
                eps: nd.phi.clone(),
                phi: nd.eps.clone(),
                depth: nd.depth,
                nu: nd.nu.clone(),
                f: nd.e.clone(),
                e: nd.f.clone(),
            })
            .collect();
        CrystalGraph { n: self.n, nodes }
    }

    /// Induced subgraph; arrows leaving the node set become `Unknown`.
    pub fn subgraph(&self, ids: &[usize]) -> CrystalGraph {
        let index: HashMap<usize, usize> = ids.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let remap = |a: Arrow| match a {
            Arrow::To(t) => index.get(&t).map_or(Arrow::Unknown, |&k| Arrow::To(k)),
            other => other,
        };
        let nodes = ids
            .iter()
            .map(|&v| {
                let nd = &self.nodes[v];
                Node {
                    f: nd.f.iter().map(|&a| remap(a)).collect(),
                    e: nd.e.iter().map(|&a| remap(a)).collect(),
                    ..nd.clone()
                }
            })
            .collect();
        CrystalGraph { n: self.n, nodes }
    }

    /// Node ids sorted by depth (when present) then id.
    fn export_order(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.len()).collect();
        ids.sort_by_key(|&v| (self.nodes[v].depth.unwrap_or(0), v));
        ids
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<_> = self
            .export_order()
            .into_iter()
            .map(|v| {
                let nd = &self.nodes[v];
                serde_json::json!({
                    "id": v,
                    "label": nd.label,
                    "wt": nd.wt.0,
                    "eps": nd.eps,
                    "phi": nd.phi,
                    "depth": nd.depth,
                    "nu": nd.nu.as_ref().map(|x| x.0.clone()),
                })
            })
            .collect();
        let edges: Vec<_> = self
            .arrows()
            .map(|(s, c, d)| serde_json::json!({"src": s, "color": c, "dst": d}))
            .collect();
        serde_json::json!({"nodes": nodes, "edges": edges})
    }

    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 8] =
            ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];
        let mut out = String::from("digraph crystal {\n");
        for v in self.export_order() {
            let nd = &self.nodes[v];
            let wt: Vec<String> = nd.wt.0.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "  n{v} [label=\"{} ({})\"];", nd.label, wt.join(","));
        }
        for (s, c, d) in self.arrows() {
            let _ = writeln!(
                out,
                "  n{s} -> n{d} [label=\"{c}\", color={}];",
                PALETTE[c % PALETTE.len()]
            );
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub node: usize,
    pub axiom: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub checked_nodes: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks C1 everywhere and C2–C4 plus seminormality along known arrows.
/// Arrows touching `Unknown` values are skipped.
pub fn axiom_check(cd: &CartanDatum, g: &CrystalGraph) -> AxiomReport {
    let n = g.n();
    let mut rep = AxiomReport { checked_nodes: g.len(), violations: vec![] };
    let mut flag = |node, axiom, detail: String| rep.violations.push(Violation { node, axiom, detail });
    for (v, nd) in g.nodes().iter().enumerate() {
        for i in 0..n {
            if nd.eps[i] < 0 || nd.phi[i] < 0 {
                flag(v, "C5", format!("negative string length at colour {i}"));
            }
            if nd.phi[i] != nd.eps[i] + nd.wt.0[i] {
                flag(v, "C1", format!("φ_{i} ≠ ε_{i} + wt_{i}"));
            }
            if let Arrow::To(w) = nd.f[i] {
                let tgt = g.node(w);
                if tgt.e[i] != Arrow::To(v) && !tgt.e[i].is_unknown() {
                    flag(v, "C4", format!("f̃_{i} → {w} but ẽ_{i} does not return"));
                }
                for j in 0..n {
                    if tgt.wt.0[j] != nd.wt.0[j] - cd.a(j, i) {
                        flag(v, "C3", format!("wt changes wrongly along {i}-arrow at h_{j}"));
                    }
                }
                if tgt.eps[i] != nd.eps[i] + 1 || tgt.phi[i] != nd.phi[i] - 1 {
                    flag(v, "C3", format!("ε/φ not shifted by one along {i}-arrow"));
                }
            }
            if let Arrow::To(w) = nd.e[i] {
                let src = g.node(w);
                if src.f[i] != Arrow::To(v) && !src.f[i].is_unknown() {
                    flag(v, "C4", format!("ẽ_{i} → {w} but f̃_{i} does not return"));
                }
                for j in 0..n {
                    if src.wt.0[j] != nd.wt.0[j] + cd.a(j, i) {
                        flag(v, "C2", format!("wt changes wrongly along ẽ_{i} at h_{j}"));
                    }
                }
            }
            for (up, want, tag) in [(true, nd.eps[i], "ε"), (false, nd.phi[i], "φ")] {
                if let Some(len) = string_length(g, v, i, up) {
                    if len != want {
                        flag(v, "seminormal", format!("{tag}_{i} = {want} but string has length {len}"));
                    }
                }
            }
        }
    }
    rep
}

/// Length of the `i`-string through `v` (backwards if `up`), or `None` when the
/// string crosses the frontier.
pub fn string_length(g: &CrystalGraph, v: usize, i: usize, up: bool) -> Option<i64> {
    let mut k = 0;
    let mut cur = v;
    loop {
        let a = if up { g.e(cur, i) } else { g.f(cur, i) };
        match a {
            Arrow::None => return Some(k),
            Arrow::Unknown => return None,
            Arrow::To(w) => {
                k += 1;
                cur = w;
                if k as usize > g.len() {
                    return None;
                }
            }
        }
    }
}

/// `ε_i(b1 ⊗ b2) = max(ε_i(b2), ε_i(b1) − ⟨h_i, wt b2⟩)`.
pub fn tensor_eps(b1: &Node, b2: &Node) -> Vec<i64> {
    (0..b1.eps.len())
        .map(|i| b2.eps[i].max(b1.eps[i] - b2.wt.0[i]))
        .collect()
}

/// `φ_i(b1 ⊗ b2) = max(φ_i(b2) + ⟨h_i, wt b1⟩, φ_i(b1))`.
pub fn tensor_phi(b1: &Node, b2: &Node) -> Vec<i64> {
    (0..b1.phi.len())
        .map(|i| (b2.phi[i] + b1.wt.0[i]).max(b1.phi[i]))
        .collect()
}

/// Does `f̃_i` act on the left factor? (`ε_i(b1) ≥ φ_i(b2)`)
pub fn f_acts_left(b1: &Node, b2: &Node, i: usize) -> bool {
    b1.eps[i] >= b2.phi[i]
}

/// Does `ẽ_i` act on the left factor? (`ε_i(b1) > φ_i(b2)`)
pub fn e_acts_left(b1: &Node, b2: &Node, i: usize) -> bool {
    b1.eps[i] > b2.phi[i]
}

/// Raw arrow of one factor, with `φ_i = 0` (resp. `ε_i = 0`) forcing a known zero.
fn factor_f(g: &CrystalGraph, v: usize, i: usize) -> Arrow {
    match g.f(v, i) {
        Arrow::Unknown if g.node(v).phi[i] == 0 => Arrow::None,
        a => a,
    }
}

fn factor_e(g: &CrystalGraph, v: usize, i: usize) -> Arrow {
    match g.e(v, i) {
        Arrow::Unknown if g.node(v).eps[i] == 0 => Arrow::None,
        a => a,
    }
}

/// A tensor product `L ⊗ R` evaluated lazily on pairs.
#[derive(Clone, Copy)]
pub struct Tensor<'a> {
    pub left: &'a CrystalGraph,
    pub right: &'a CrystalGraph,
}

impl<'a> Tensor<'a> {
    pub fn new(left: &'a CrystalGraph, right: &'a CrystalGraph) -> Self {
        assert_eq!(left.n(), right.n());
        Tensor { left, right }
    }

    pub fn wt(&self, (x, y): (usize, usize)) -> WeightH {
        self.left.node(x).wt.add(&self.right.node(y).wt)
    }

    pub fn eps(&self, (x, y): (usize, usize)) -> Vec<i64> {
        tensor_eps(self.left.node(x), self.right.node(y))
    }

    pub fn phi(&self, (x, y): (usize, usize)) -> Vec<i64> {
        tensor_phi(self.left.node(x), self.right.node(y))
    }

    pub fn f(&self, (x, y): (usize, usize), i: usize) -> Arrow<(usize, usize)> {
        if f_acts_left(self.left.node(x), self.right.node(y), i) {
            factor_f(self.left, x, i).map(|x2| (x2, y))
        } else {
            factor_f(self.right, y, i).map(|y2| (x, y2))
        }
    }

    pub fn e(&self, (x, y): (usize, usize), i: usize) -> Arrow<(usize, usize)> {
        if e_acts_left(self.left.node(x), self.right.node(y), i) {
            factor_e(self.left, x, i).map(|x2| (x2, y))
        } else {
            factor_e(self.right, y, i).map(|y2| (x, y2))
        }
    }

    pub fn is_highest(&self, p: (usize, usize)) -> bool {
        (0..self.left.n()).all(|i| self.e(p, i) == Arrow::None)
    }

    fn node_at(&self, p: (usize, usize)) -> Node {
        let (x, y) = p;
        let wt = self.wt(p);
        Node {
            label: format!("{}⊗{}", self.left.node(x).label, self.right.node(y).label),
            wt,
            eps: self.eps(p),
            phi: self.phi(p),
            depth: None,
            nu: None,
            f: vec![],
            e: vec![],
        }
    }
}

/// Full product graph of two finite (possibly truncated) graphs; node
/// `x * |right| + y` is `x ⊗ y`.
pub fn tensor(left: &CrystalGraph, right: &CrystalGraph) -> CrystalGraph {
    let t = Tensor::new(left, right);
    let m = right.len();
    let n = left.n();
    let mut g = CrystalGraph::new(n);
    for x in 0..left.len() {
        for y in 0..m {
            let p = (x, y);
            let mut nd = t.node_at(p);
            nd.f = (0..n).map(|i| t.f(p, i).map(|(a, b)| a * m + b)).collect();
            nd.e = (0..n).map(|i| t.e(p, i).map(|(a, b)| a * m + b)).collect();
            g.push(nd);
        }
    }
    g
}

/// A connected piece of a tensor product discovered by `f̃`-BFS from a seed.
#[derive(Clone, Debug)]
pub struct TensorComponent {
    pub graph: CrystalGraph,
    /// Factor pair behind each node.
    pub pairs: Vec<(usize, usize)>,
    pub index: HashMap<(usize, usize), usize>,
}

/// BFS along `f̃` from `seed` in `left ⊗ right`; nodes at depth `max_depth`
/// get truncated outgoing arrows. Depth and `ν` are measured from the seed.
pub fn tensor_component(
    left: &CrystalGraph,
    right: &CrystalGraph,
    seed: (usize, usize),
    max_depth: usize,
) -> TensorComponent {
    let t = Tensor::new(left, right);
    let n = left.n();
    let mut graph = CrystalGraph::new(n);
    let mut pairs = vec![];
    let mut index = HashMap::new();
    let mut queue = VecDeque::new();

    let add = |p: (usize, usize), depth: usize, nu: RootVec, graph: &mut CrystalGraph,
                   pairs: &mut Vec<(usize, usize)>, index: &mut HashMap<(usize, usize), usize>| {
        let mut nd = t.node_at(p);
        nd.depth = Some(depth);
        nd.nu = Some(nu);
        nd.f = vec![Arrow::Unknown; n];
        nd.e = vec![Arrow::Unknown; n];
        let id = graph.push(nd);
        pairs.push(p);
        index.insert(p, id);
        id
    };
    let root = add(seed, 0, RootVec::zero(n), &mut graph, &mut pairs, &mut index);
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        let p = pairs[v];
        let depth = graph.node(v).depth.unwrap_or(0);
        for i in 0..n {
            let arrow = if depth >= max_depth {
                if graph.node(v).phi[i] == 0 {
                    Arrow::None
                } else {
                    Arrow::Unknown
                }
            } else {
                match t.f(p, i) {
                    Arrow::To(q) => {
                        let w = match index.get(&q) {
                            Some(&w) => w,
                            None => {
                                let nu = graph.node(v).nu.as_ref().expect("nu").plus_simple(i);
                                let w = add(q, depth + 1, nu, &mut graph, &mut pairs, &mut index);
                                queue.push_back(w);
                                w
                            }
                        };
                        Arrow::To(w)
                    }
                    Arrow::None => Arrow::None,
                    Arrow::Unknown => Arrow::Unknown,
                }
            };
            graph.node_mut(v).f[i] = arrow;
        }
    }
    for v in 0..graph.len() {
        for i in 0..n {
            let a = match t.e(pairs[v], i) {
                Arrow::To(q) => index.get(&q).map_or(Arrow::Unknown, |&w| Arrow::To(w)),
                Arrow::None => Arrow::None,
                Arrow::Unknown => Arrow::Unknown,
            };
            graph.node_mut(v).e[i] = a;
        }
    }
    TensorComponent { graph, pairs, index }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub nodes: Vec<usize>,
    pub highest: Vec<usize>,
}

/// Partition by undirected connectivity along known arrows.
pub fn components(g: &CrystalGraph) -> Vec<Component> {
    let m = g.len();
    let mut comp = vec![usize::MAX; m];
    let mut out = vec![];
    for s in 0..m {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut nodes = vec![];
        let mut stack = vec![s];
        comp[s] = id;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            let nd = g.node(v);
            for w in nd.f.iter().chain(&nd.e).filter_map(|a| a.target()) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        let highest = nodes.iter().copied().filter(|&v| g.node(v).is_highest()).collect();
        out.push(Component { nodes, highest });
    }
    out
}

/// BFS distance from `root` along `f̃`.
pub fn f_depths(g: &CrystalGraph, root: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.len()];
    dist[root] = Some(0);
    let mut q = VecDeque::from([root]);
    while let Some(v) = q.pop_front() {
        let d = dist[v].unwrap_or(0);
        for a in &g.node(v).f {
            if let Arrow::To(w) = *a {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    q.push_back(w);
                }
            }
        }
    }
    dist
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoMismatch {
    pub left: usize,
    pub right: usize,
    pub reason: String,
}

impl std::fmt::Display for IsoMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "nodes ({}, {}): {}", self.left, self.right, self.reason)
    }
}

/// Rooted colored isomorphism of the `f̃`-balls of radius `depth`. Arrows out of
/// nodes at distance `depth` are not compared. Returns the matched pairs in
/// BFS order.
pub fn rooted_iso(
    a: &CrystalGraph,
    ra: usize,
    b: &CrystalGraph,
    rb: usize,
    depth: usize,
) -> Result<Vec<(usize, usize)>, IsoMismatch> {
    if a.n() != b.n() {
        return Err(IsoMismatch { left: ra, right: rb, reason: "index sets differ".into() });
    }
    let n = a.n();
    let mut fwd: HashMap<usize, usize> = HashMap::from([(ra, rb)]);
    let mut back: HashMap<usize, usize> = HashMap::from([(rb, ra)]);
    let mut order = vec![(ra, rb)];
    let mut q = VecDeque::from([(ra, rb, 0usize)]);
    let fail = |u, v, reason: String| Err(IsoMismatch { left: u, right: v, reason });
    while let Some((u, v, d)) = q.pop_front() {
        let (nu, nv) = (a.node(u), b.node(v));
        if nu.wt != nv.wt || nu.eps != nv.eps || nu.phi != nv.phi {
            return fail(u, v, format!("data differ: wt {:?} vs {:?}", nu.wt.0, nv.wt.0));
        }
        for i in 0..n {
            match (nu.e[i], nv.e[i]) {
                (Arrow::None, Arrow::None) => {}
                (Arrow::To(x), Arrow::To(y)) => {
                    if let Some(&mx) = fwd.get(&x) {
                        if mx != y {
                            return fail(u, v, format!("ẽ_{i} targets disagree"));
                        }
                    }
                }
                (Arrow::Unknown, _) | (_, Arrow::Unknown) => {}
                _ => return fail(u, v, format!("ẽ_{i} defined on one side only")),
            }
        }
        if d >= depth {
            continue;
        }
        for i in 0..n {
            match (nu.f[i], nv.f[i]) {
                (Arrow::None, Arrow::None) => {}
                (Arrow::To(x), Arrow::To(y)) => match (fwd.get(&x), back.get(&y)) {
                    (None, None) => {
                        fwd.insert(x, y);
                        back.insert(y, x);
                        order.push((x, y));
                        q.push_back((x, y, d + 1));
                    }
                    (Some(&mx), Some(&my)) if mx == y && my == x => {}
                    _ => return fail(u, v, format!("f̃_{i} targets disagree")),
                },
                (Arrow::Unknown, _) | (_, Arrow::Unknown) => {
                    return fail(u, v, format!("f̃_{i} unknown inside the compared ball"));
                }
                _ => return fail(u, v, format!("f̃_{i} defined on one side only")),
            }
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{AffineType, Family};

    fn a2_cycle() -> (CartanDatum, CrystalGraph) {
        let cd = CartanDatum::build(AffineType::new(Family::A1, 2).unwrap());
        let labels: Vec<String> = (0..3).map(|k| k.to_string()).collect();
        let g = CrystalGraph::from_arrows(3, &labels, &[(0, 1, 1), (1, 2, 2), (2, 0, 0)]);
        (cd, g)
    }

    #[test]
    fn cycle_passes_axioms() {
        let (cd, g) = a2_cycle();
        let rep = axiom_check(&cd, &g);
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(g.node(1).eps, vec![0, 1, 0]);
        assert_eq!(g.node(1).phi, vec![0, 0, 1]);
    }

    #[test]
    fn trivial_node_passes() {
        let cd = CartanDatum::build(AffineType::new(Family::A1, 2).unwrap());
        let g = CrystalGraph::from_arrows(3, &["u".to_string()], &[]);
        assert!(axiom_check(&cd, &g).passed());
    }

    #[test]
    fn broken_weight_is_reported() {
        let (cd, mut g) = a2_cycle();
        g.node_mut(0).wt.0[0] += 1;
        let rep = axiom_check(&cd, &g);
        assert!(rep.violations.iter().any(|v| v.axiom == "C1"));
    }

    #[test]
    fn eps_of_tensor_ignores_trivial_left() {
        let (_, g) = a2_cycle();
        for x in 0..3 {
            for y in 0..3 {
                let e = tensor_eps(g.node(x), g.node(y));
                for i in 0..3 {
                    if g.node(x).eps[i] == 0 {
                        assert_eq!(e[i], g.node(y).eps[i]);
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_of_cycles_passes_axioms() {
        let (cd, g) = a2_cycle();
        let t = tensor(&g, &g);
        assert_eq!(t.len(), 9);
        assert!(axiom_check(&cd, &t).passed());
        // B ⊗ B for a level-zero crystal has no highest-weight element
        assert!(components(&t).iter().all(|c| c.highest.is_empty()));
    }

    #[test]
    fn self_iso() {
        let (_, g) = a2_cycle();
        let m = rooted_iso(&g, 0, &g, 0, 5).unwrap();
        assert!(m.iter().all(|(x, y)| x == y));
    }

    #[test]
    fn recoloured_graph_is_not_iso() {
        let (_, g) = a2_cycle();
        assert!(rooted_iso(&g, 0, &g, 1, 3).is_err());
    }

    #[test]
    fn reverse_twice_is_identity() {
        let (_, g) = a2_cycle();
        assert_eq!(g.reversed().reversed(), g);
    }
}
