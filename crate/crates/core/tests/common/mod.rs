#![allow(dead_code)]

use g2crystal::graph::CrystalGraph;
use g2crystal::{Crystal, ExtMonomial, ExtPair, Index};

/// Turns a typeset monomial such as `${Y_1(-1)}^{(1,0)}$ $\cdot {Y_2(-2)}^{(1,0)}$`
/// into the crate's text form `Y_1(-1)^(1,0) Y_2(-2)^(1,0)`.
pub fn untex(s: &str) -> String {
    let mut t = s.replace(['$', '\n'], " ").replace("\\cdot", " ");
    for l in ["1", "2", "3"] {
        t = t.replace(&format!("{{\\bar {l}}}"), &format!("{l}b"));
    }
    let t: String = t.chars().filter(|c| *c != '{' && *c != '}').collect();
    let t = t.replace("Y_", " Y_").replace("X_", " X_");
    t.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Reference nodes to depth 2, ordered top, then each row left to
/// right. Each entry is the two typeset lines of one node.
pub const REFERENCE_Y: [(&str, &str); 7] = [
    ("${Y_1(-1)}^{(1,0)}$", "$\\cdot {Y_2(-2)}^{(1,0)}$"),
    (
        "${Y_1(-1)}^{(1,-1)}{Y_1(0)}^{(0,-1)}$",
        "$\\cdot {Y_2(-2)}^{(1,0)}{Y_2(-1)}^{(0,1)}$",
    ),
    (
        "${Y_1(-1)}^{(1,3)}$",
        "$\\cdot {Y_2(-2)}^{(1,-1)}{Y_2(-1)}^{(0,-1)}$",
    ),
    (
        "${Y_1(-1)}^{(1,-2)}{Y_1(0)}^{(0,-2)}$",
        "$\\cdot {Y_2(-2)}^{(1,0)}{Y_2(-1)}^{(0,2)}$",
    ),
    (
        "${Y_1(-1)}^{(1,-1)}{Y_1(0)}^{(0,2)}$",
        "$\\cdot {Y_2(-2)}^{(1,0)}{Y_2(0)}^{(0,-1)}$",
    ),
    (
        "${Y_1(-1)}^{(1,2)}{Y_1(0)}^{(0,-1)}$",
        "$\\cdot {Y_2(-2)}^{(1,-1)}$",
    ),
    (
        "${Y_1(-1)}^{(1,6)}$",
        "$\\cdot {Y_2(-2)}^{(1,-2)}{Y_2(-1)}^{(0,-2)}$",
    ),
];

pub const REFERENCE_X: [(&str, &str); 7] = [
    ("${X_1(-1)}^{(2,0)}$", "$\\cdot {X_2(-2)}^{(1,0)}$"),
    (
        "${X_1(-1)}^{(2,-1)}{X_2(-1)}^{(0,1)}$",
        "$\\cdot {X_2(-2)}^{(1,0)}$",
    ),
    (
        "${X_1(-1)}^{(2,0)}$",
        "$\\cdot {X_2(-2)}^{(1,-1)}{X_3(-2)}^{(0,1)}$",
    ),
    (
        "${X_1(-1)}^{(2,-2)}{X_2(-1)}^{(0,2)}$",
        "$\\cdot {X_2(-2)}^{(1,0)}$",
    ),
    (
        "${X_1(-1)}^{(2,-1)}$",
        "$\\cdot {X_3(-1)}^{(0,1)}{X_2(-2)}^{(1,0)}$",
    ),
    (
        "${X_1(-1)}^{(2,-1)}{X_2(-1)}^{(0,1)}$",
        "$\\cdot {X_2(-2)}^{(1,-1)}{X_3(-2)}^{(0,1)}$",
    ),
    (
        "${X_1(-1)}^{(2,0)}$",
        "$\\cdot {X_2(-2)}^{(1,-2)}{X_3(-2)}^{(0,2)}$",
    ),
];

/// Reference arrows as (source, color, target) over the node order above.
pub const REFERENCE_EDGES: [(usize, u8, usize); 6] = [
    (0, 1, 1),
    (0, 2, 2),
    (1, 1, 3),
    (1, 2, 4),
    (2, 1, 5),
    (2, 2, 6),
];

pub fn reference_text(rows: &[(&str, &str)]) -> Vec<String> {
    rows.iter()
        .map(|(a, b)| untex(&format!("{a} {b}")))
        .collect()
}

/// Compares a graph against reference node text and arrows. Returns the first
/// mismatch.
pub fn match_reference<E: Crystal>(
    g: &CrystalGraph<E>,
    text: &[String],
    label: impl Fn(&E) -> String,
) -> Result<(), String> {
    if g.len() != text.len() {
        return Err(format!("{} nodes, reference has {}", g.len(), text.len()));
    }
    let mut ids = Vec::new();
    for t in text {
        let id = g
            .nodes
            .iter()
            .position(|n| label(&n.element) == *t)
            .ok_or_else(|| format!("reference node {t} not enumerated"))?;
        ids.push(id);
    }
    let mut want: Vec<(usize, u8, usize)> = REFERENCE_EDGES
        .iter()
        .map(|&(s, c, t)| (ids[s], c, ids[t]))
        .collect();
    let mut got: Vec<(usize, u8, usize)> = g
        .edges
        .iter()
        .map(|e| (e.source, e.color, e.target))
        .collect();
    want.sort();
    got.sort();
    if want != got {
        return Err(format!("edges {got:?}, reference {want:?}"));
    }
    Ok(())
}

/// The reference example monomial.
pub const EXAMPLE_Y: &str = "${Y_1(-1)}^{(1,1)}{Y_1(1)}^{(0,-5)}{Y_1(2)}^{(0,-1)}$ \
    $\\cdot {Y_2(-2)}^{(1,-2)}{Y_2(-1)}^{(0,-1)}{Y_2(0)}^{(0,2)}$";

pub const EXAMPLE_X: &str = "${X_1(-1)}^{(2,-5)} {X_2(-1)}^{(0,1)} {X_0(-1)}^{(0,1)} \
    {X_{\\bar 3}(-1)}^{(0,2)} {X_{\\bar 1}(-1)}^{(0,1)}$ \
    $\\cdot {X_2(-2)}^{(1,-2)} {X_3(-2)}^{(0,2)}$";

/// Row 1 then row 2 of the reference example tableau, one string per box.
pub const EXAMPLE_ROWS: [&[&str]; 2] = [
    &[
        "1", "1", "1", "1", "2", "0", "\\bar 3", "\\bar 3", "\\bar 1",
    ],
    &["2", "3", "3"],
];

pub fn rows_text(rows: [&[&str]; 2]) -> String {
    let boxed = |b: &&str| match b.strip_prefix("\\bar ") {
        Some(x) => format!("[{x}b]"),
        None => format!("[{b}]"),
    };
    rows.iter()
        .map(|r| r.iter().map(boxed).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

pub const EXAMPLE_TENSOR: &str =
    "u_{\\infty}\\otimes b_1(-1)\\otimes b_2(-1)\\otimes b_1(-7)\\otimes b_2(-4)\\otimes b_1(-5)\\otimes b_2(-2)";

/// Parses a typeset monomial into an ExtMonomial.
pub fn parse_y(s: &str) -> ExtMonomial {
    let mut m = ExtMonomial::one();
    for f in untex(s).split(' ') {
        // Y_i(m)^(u,v)
        let i: u8 = f[2..3].parse().unwrap();
        let close = f.find(')').unwrap();
        let level: i64 = f[4..close].parse().unwrap();
        let (u, v) = f[close + 3..f.len() - 1].split_once(',').unwrap();
        m.mul_factor(
            Index::from_u8(i).unwrap(),
            level,
            ExtPair::new(u.parse().unwrap(), v.parse().unwrap()),
        );
    }
    m
}

pub fn untex_tensor(s: &str) -> String {
    let t = s
        .replace("u_{\\infty}", "u∞")
        .replace("\\otimes", " ⊗ ")
        .replace("b_", "b");
    t.split_whitespace().collect::<Vec<_>>().join(" ")
}
