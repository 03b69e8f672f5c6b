//! Crystal-graph enumeration, isomorphism checking, weight census and export.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::cartan::{Index, Weight};
use crate::crystal::Crystal;

#[derive(Debug, Clone)]
pub struct Node<E> {
    pub element: E,
    pub depth: usize,
    pub weight: Weight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub source: usize,
    pub color: u8,
    pub target: usize,
}

/// A rooted, edge-colored digraph of f̃-arrows. Node 0 is the root.
#[derive(Debug, Clone)]
pub struct CrystalGraph<E> {
    pub nodes: Vec<Node<E>>,
    pub edges: Vec<Edge>,
    pub depth: usize,
    index: HashMap<E, usize>,
    /// succ[node][i-1]
    succ: Vec<[Option<usize>; 2]>,
}

impl<E: Crystal> CrystalGraph<E> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn id_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn successor(&self, node: usize, i: Index) -> Option<usize> {
        self.succ[node][i.as_u8() as usize - 1]
    }

    pub fn elements(&self) -> impl Iterator<Item = &E> {
        self.nodes.iter().map(|n| &n.element)
    }

    /// Rebuilds the graph with one edge's color flipped. Test helper for
    /// negative isomorphism checks.
    pub fn with_recolored_edge(&self, k: usize) -> CrystalGraph<E> {
        let mut edges = self.edges.clone();
        edges[k].color = 3 - edges[k].color;
        let mut succ = vec![[None, None]; self.nodes.len()];
        for e in &edges {
            succ[e.source][e.color as usize - 1] = Some(e.target);
        }
        CrystalGraph {
            nodes: self.nodes.clone(),
            edges,
            depth: self.depth,
            index: self.index.clone(),
            succ,
        }
    }
}

/// All elements reachable from `root` by f̃-words of length ≤ `depth`.
///
/// The frontier is processed level by level in sorted element order, so node
/// ids and exports are deterministic.
pub fn bfs<E: Crystal>(root: E, depth: usize) -> CrystalGraph<E> {
    let mut g = CrystalGraph {
        nodes: vec![Node {
            weight: root.weight(),
            element: root.clone(),
            depth: 0,
        }],
        edges: Vec::new(),
        depth,
        index: HashMap::from([(root, 0)]),
        succ: vec![[None, None]],
    };
    let mut frontier = vec![0usize];
    for level in 1..=depth {
        let mut fresh: BTreeMap<E, Vec<(usize, Index)>> = BTreeMap::new();
        let mut known: Vec<(usize, Index, usize)> = Vec::new();
        for &src in &frontier {
            for i in Index::ALL {
                let Some(t) = g.nodes[src].element.f(i) else {
                    continue;
                };
                match g.index.get(&t) {
                    Some(&id) => known.push((src, i, id)),
                    None => fresh.entry(t).or_default().push((src, i)),
                }
            }
        }
        let mut next = Vec::with_capacity(fresh.len());
        for (elem, parents) in fresh {
            let id = g.nodes.len();
            g.nodes.push(Node {
                weight: elem.weight(),
                element: elem.clone(),
                depth: level,
            });
            g.succ.push([None, None]);
            g.index.insert(elem, id);
            next.push(id);
            for (src, i) in parents {
                known.push((src, i, id));
            }
        }
        for (src, i, dst) in known {
            g.succ[src][i.as_u8() as usize - 1] = Some(dst);
            g.edges.push(Edge {
                source: src,
                color: i.as_u8(),
                target: dst,
            });
        }
        frontier = next;
    }
    g.edges.sort();
    g
}

/// Root- and color-preserving isomorphism test by synchronized traversal.
///
/// f̃-edges are deterministic, so the only candidate map is the one forced by
/// walking both graphs in lockstep from their roots.
pub fn iso_check<A: Crystal, B: Crystal>(g: &CrystalGraph<A>, h: &CrystalGraph<B>) -> bool {
    iso_map(g, h).is_some()
}

/// The forced node bijection `g -> h`, if it is an isomorphism.
pub fn iso_map<A: Crystal, B: Crystal>(
    g: &CrystalGraph<A>,
    h: &CrystalGraph<B>,
) -> Option<Vec<usize>> {
    if g.len() != h.len() || g.edges.len() != h.edges.len() || g.is_empty() {
        return None;
    }
    let mut fwd = vec![usize::MAX; g.len()];
    let mut back = vec![usize::MAX; h.len()];
    fwd[0] = 0;
    back[0] = 0;
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        let v = fwd[u];
        for i in Index::ALL {
            match (g.successor(u, i), h.successor(v, i)) {
                (None, None) => {}
                (Some(u2), Some(v2)) => {
                    if fwd[u2] == usize::MAX && back[v2] == usize::MAX {
                        fwd[u2] = v2;
                        back[v2] = u2;
                        stack.push(u2);
                    } else if fwd[u2] != v2 || back[v2] != u2 {
                        return None;
                    }
                }
                _ => return None,
            }
        }
    }
    fwd.iter().all(|&x| x != usize::MAX).then_some(fwd)
}

/// Node counts per weight −(aα₁ + bα₂), keyed by (a, b).
pub fn weight_census<E: Crystal>(g: &CrystalGraph<E>) -> BTreeMap<(i64, i64), usize> {
    let mut out = BTreeMap::new();
    for n in &g.nodes {
        let (a, b) = n.weight.to_roots();
        *out.entry((-a, -b)).or_insert(0) += 1;
    }
    out
}

/// Positive roots of G₂ in (α₁, α₂)-coordinates.
pub const POSITIVE_ROOTS: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];

/// Kostant partition function: the number of ways to write aα₁ + bα₂ as a
/// nonnegative integer combination of positive roots, by direct enumeration.
pub fn kostant_oracle(a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 {
        return 0;
    }
    let mut count = 0;
    // The two simple roots absorb whatever the four others leave over.
    for c6 in 0..=b / 2 {
        for c5 in 0..=b - 2 * c6 {
            for c4 in 0..=b - 2 * c6 - c5 {
                for c3 in 0..=b - 2 * c6 - c5 - c4 {
                    let ra = a - 3 * c6 - 3 * c5 - 2 * c4 - c3;
                    let rb = b - 2 * c6 - c5 - c4 - c3;
                    if ra >= 0 && rb >= 0 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\")
        .replace('"', "\\\"")
        .replace('\n', "\\n")
}

pub fn export_dot<E: Crystal>(g: &CrystalGraph<E>) -> String {
    let mut out = String::from("digraph crystal {\n  node [shape=box];\n");
    for (id, n) in g.nodes.iter().enumerate() {
        writeln!(
            out,
            "  n{id} [label=\"{}\"];",
            dot_escape(&n.element.label())
        )
        .unwrap();
    }
    for e in &g.edges {
        let style = if e.color == 1 { "solid" } else { "dashed" };
        writeln!(
            out,
            "  n{} -> n{} [label=\"{}\", style={style}];",
            e.source, e.target, e.color
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonNode<'a, E> {
    id: usize,
    depth: usize,
    weight: [i64; 2],
    roots: [i64; 2],
    label: String,
    element: &'a E,
}

#[derive(Serialize)]
struct JsonGraph<'a, E> {
    realization: &'a str,
    depth: usize,
    nodes: Vec<JsonNode<'a, E>>,
    edges: &'a [Edge],
}

pub fn export_json<E: Crystal + Serialize>(g: &CrystalGraph<E>, realization: &str) -> String {
    let doc = JsonGraph {
        realization,
        depth: g.depth,
        nodes: g
            .nodes
            .iter()
            .enumerate()
            .map(|(id, n)| {
                let (a, b) = n.weight.to_roots();
                JsonNode {
                    id,
                    depth: n.depth,
                    weight: [n.weight.0, n.weight.1],
                    roots: [a, b],
                    label: n.element.label(),
                    element: &n.element,
                }
            })
            .collect(),
        edges: &g.edges,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
    s.push('\n');
    s
}

pub fn export<E: Crystal + Serialize>(
    g: &CrystalGraph<E>,
    format: Format,
    realization: &str,
) -> String {
    match format {
        Format::Dot => export_dot(g),
        Format::Json => export_json(g, realization),
    }
}
