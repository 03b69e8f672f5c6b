//! Property suites over enumerated crystal graphs.
//!
//! Each suite walks one or more graphs to a fixed depth and returns a
//! [`Report`] with per-check counts and the first few violations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cartan::{pairing, Index, Weight};
use crate::cliff::CliffElement;
use crate::crystal::Crystal;
use crate::graph::{bfs, iso_check, iso_map, kostant_oracle, weight_census, CrystalGraph};
use crate::iso::{cliff_to_tableau, shift_iso, tableau_to_cliff, theta, theta_inv};
use crate::minf::{is_member_yform, MInfElement, Params};
use crate::monomial::{m_infinity, ExtMonomial};
use crate::tableau::MLTableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Closure,
    Involution,
    Iso,
    Census,
    LemmaEquivalence,
    Shift,
    Bookkeeping,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Closure,
        Suite::Involution,
        Suite::Iso,
        Suite::Census,
        Suite::LemmaEquivalence,
        Suite::Shift,
        Suite::Bookkeeping,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Closure => "closure",
            Suite::Involution => "involution",
            Suite::Iso => "iso",
            Suite::Census => "census",
            Suite::LemmaEquivalence => "lemma-equivalence",
            Suite::Shift => "shift",
            Suite::Bookkeeping => "bookkeeping",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub depth: usize,
    /// Random monomials drawn by the bookkeeping suite.
    pub samples: usize,
    pub seed: u64,
}

impl Options {
    pub fn depth(depth: usize) -> Self {
        Options {
            depth,
            samples: 10_000,
            seed: 0x6232,
        }
    }
}

const MAX_LISTED: usize = 20;

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub depth: usize,
    pub checked: BTreeMap<String, u64>,
    pub violations: u64,
    /// The first few violation messages.
    pub examples: Vec<String>,
}

impl Report {
    fn new(suite: Suite, depth: usize) -> Self {
        Report {
            suite,
            depth,
            checked: BTreeMap::new(),
            violations: 0,
            examples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn count(&self, key: &str) -> u64 {
        self.checked.get(key).copied().unwrap_or(0)
    }

    fn tally(&mut self, key: &str, n: u64) {
        *self.checked.entry(key.to_string()).or_insert(0) += n;
    }

    /// Counts one check under `key`, recording `msg` when `ok` is false.
    fn check(&mut self, key: &str, ok: bool, msg: impl FnOnce() -> String) {
        self.tally(key, 1);
        if !ok {
            self.violations += 1;
            if self.examples.len() < MAX_LISTED {
                self.examples.push(format!("{key}: {}", msg()));
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        writeln!(f, "suite {} depth {}: {verdict}", self.suite, self.depth)?;
        for (k, n) in &self.checked {
            writeln!(f, "  {k}: {n}")?;
        }
        writeln!(f, "  violations: {}", self.violations)?;
        for e in &self.examples {
            writeln!(f, "    {e}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, opts: Options) -> Report {
    let d = opts.depth;
    match suite {
        Suite::Closure => closure(d),
        Suite::Involution => involution(d),
        Suite::Iso => iso(d),
        Suite::Census => census(d),
        Suite::LemmaEquivalence => lemma_equivalence(d),
        Suite::Shift => shift(d),
        Suite::Bookkeeping => bookkeeping(opts.samples, opts.seed),
    }
}

pub fn minf_graph(depth: usize) -> CrystalGraph<MInfElement> {
    bfs(MInfElement::highest(Params::default()), depth)
}

pub fn tableau_graph(depth: usize) -> CrystalGraph<MLTableau> {
    bfs(MLTableau::highest(), depth)
}

pub fn cliff_graph(depth: usize) -> CrystalGraph<CliffElement> {
    bfs(CliffElement::default(), depth)
}

/// Every element and every f̃-image satisfies its set's defining conditions.
pub fn closure(depth: usize) -> Report {
    let mut r = Report::new(Suite::Closure, depth);
    let p = Params::default();
    let g = minf_graph(depth);
    r.tally("minf elements", g.len() as u64);
    for b in g.elements() {
        r.check(
            "minf membership",
            is_member_yform(&b.to_monomial(), p),
            || b.to_string(),
        );
        for i in Index::ALL {
            let y = b.f_sig(i).to_monomial();
            r.check("minf f image", is_member_yform(&y, p), || {
                format!("f{i} {b}")
            });
            let generic = b.to_monomial().f_generic(i);
            r.check(
                "minf generic f image",
                generic.as_ref().is_some_and(|m| is_member_yform(m, p)),
                || format!("f{i} {b}"),
            );
        }
    }
    let g = tableau_graph(depth);
    r.tally("tableau elements", g.len() as u64);
    for t in g.elements() {
        for x in std::iter::once(*t).chain(Index::ALL.map(|i| t.f_t(i))) {
            let grid = x.to_grid();
            r.check(
                "tableau marginally large",
                grid.is_marginally_large(),
                || format!("{x:?}"),
            );
            r.check(
                "tableau grid round trip",
                MLTableau::from_grid(&grid).ok() == Some(x),
                || format!("{x:?}"),
            );
        }
    }
    let g = cliff_graph(depth);
    r.tally("cliff elements", g.len() as u64);
    for c in g.elements() {
        for x in std::iter::once(*c).chain(Index::ALL.map(|i| c.f_c(i))) {
            r.check("cliff inequality chain", x.is_member(), || format!("{x:?}"));
        }
    }
    r
}

fn involution_on<E: Crystal>(r: &mut Report, name: &str, g: &CrystalGraph<E>) {
    r.tally(&format!("{name} elements"), g.len() as u64);
    let mut incoming = vec![[0u32; 2]; g.len()];
    for e in &g.edges {
        incoming[e.target][e.color as usize - 1] += 1;
    }
    for (id, d) in incoming.iter().enumerate() {
        r.check(&format!("{name} in-degree"), d[0] <= 1 && d[1] <= 1, || {
            format!("node {id} has in-degrees {d:?}")
        });
    }
    for x in g.elements() {
        let w = x.weight();
        for i in Index::ALL {
            let key = format!("{name} axioms");
            r.check(&key, x.phi(i) - x.epsilon(i) == pairing(i, w), || {
                format!("phi-eps vs wt, i={i}, {x:?}")
            });
            match x.f(i) {
                Some(y) => {
                    r.check(&key, y.e(i).as_ref() == Some(x), || {
                        format!("e{i} f{i} != id at {x:?}")
                    });
                    r.check(&key, y.weight() == w - Weight::simple_root(i), || {
                        format!("wt f{i} at {x:?}")
                    });
                    r.check(
                        &key,
                        y.epsilon(i) == x.epsilon(i) + 1 && y.phi(i) == x.phi(i) - 1,
                        || format!("eps/phi shift under f{i} at {x:?}"),
                    );
                }
                None => r.check(&key, false, || format!("f{i} is zero at {x:?}")),
            }
            match x.e(i) {
                Some(y) => r.check(&key, y.f(i).as_ref() == Some(x), || {
                    format!("f{i} e{i} != id at {x:?}")
                }),
                None => r.check(&key, x.epsilon(i) == 0, || {
                    format!("e{i} zero but eps > 0 at {x:?}")
                }),
            }
        }
    }
}

/// ẽf̃ = id, f̃ẽ = id where defined, and the weight/ε/φ rules, in every
/// realization.
pub fn involution(depth: usize) -> Report {
    let mut r = Report::new(Suite::Involution, depth);
    involution_on(&mut r, "minf", &minf_graph(depth));
    involution_on(&mut r, "monomial", &bfs(m_infinity(), depth));
    involution_on(&mut r, "tableau", &tableau_graph(depth));
    involution_on(&mut r, "cliff", &cliff_graph(depth));
    r
}

fn agree<A: Crystal, B: Crystal>(r: &mut Report, key: &str, a: &A, b: &B) {
    let same = a.weight() == b.weight()
        && Index::ALL
            .iter()
            .all(|&i| a.epsilon(i) == b.epsilon(i) && a.phi(i) == b.phi(i));
    r.check(key, same, || format!("{a:?} vs {b:?}"));
}

/// Pairwise graph isomorphism plus commutation of the explicit maps with
/// every f̃ᵢ and ẽᵢ.
pub fn iso(depth: usize) -> Report {
    let mut r = Report::new(Suite::Iso, depth);
    let gm = minf_graph(depth);
    let gt = tableau_graph(depth);
    let gc = cliff_graph(depth);
    r.tally("nodes", gm.len() as u64);
    r.check("graph isomorphism", iso_check(&gm, &gt), || {
        "minf vs tableau".into()
    });
    r.check("graph isomorphism", iso_check(&gt, &gc), || {
        "tableau vs cliff".into()
    });
    r.check("graph isomorphism", iso_check(&gm, &gc), || {
        "minf vs cliff".into()
    });

    if let Some(map) = iso_map(&gt, &gm) {
        for (id, t) in gt.elements().enumerate() {
            r.check(
                "forced map equals theta",
                gm.nodes[map[id]].element == theta(t),
                || format!("{t:?}"),
            );
        }
    }
    for t in gt.elements() {
        let b = theta(t);
        let c = tableau_to_cliff(t);
        r.check("round trips", theta_inv(&b).ok() == Some(*t), || {
            format!("theta {t:?}")
        });
        r.check("round trips", cliff_to_tableau(&c).ok() == Some(*t), || {
            format!("cliff {t:?}")
        });
        agree(&mut r, "structure maps transported", t, &b);
        agree(&mut r, "structure maps transported", t, &c);
        for i in Index::ALL {
            let ft = t.f_t(i);
            r.check("f commutes", theta(&ft) == b.f_sig(i), || {
                format!("theta f{i} {t:?}")
            });
            r.check("f commutes", tableau_to_cliff(&ft) == c.f_c(i), || {
                format!("cliff f{i} {t:?}")
            });
            let et = t.e_t(i);
            r.check("e commutes", et.map(|x| theta(&x)) == b.e_sig(i), || {
                format!("theta e{i} {t:?}")
            });
            r.check(
                "e commutes",
                et.map(|x| tableau_to_cliff(&x)) == c.e_c(i),
                || format!("cliff e{i} {t:?}"),
            );
        }
    }
    r
}

fn census_on<E: Crystal>(r: &mut Report, name: &str, g: &CrystalGraph<E>) {
    let d = g.depth as i64;
    let census = weight_census(g);
    for n in &g.nodes {
        let (a, b) = n.weight.to_roots();
        r.check("depth equals height", -(a + b) == n.depth as i64, || {
            format!("{name} node at depth {} has weight {}", n.depth, n.weight)
        });
    }
    for a in 0..=d {
        for b in 0..=d - a {
            let got = census.get(&(a, b)).copied().unwrap_or(0) as u64;
            let want = kostant_oracle(a, b);
            r.check(&format!("{name} weights"), got == want, || {
                format!("({a},{b}): {got} nodes, Kostant {want}")
            });
        }
    }
}

/// Node counts per weight against the Kostant partition function for all
/// weights of height at most `depth`.
pub fn census(depth: usize) -> Report {
    let mut r = Report::new(Suite::Census, depth);
    census_on(&mut r, "minf", &minf_graph(depth));
    census_on(&mut r, "tableau", &tableau_graph(depth));
    census_on(&mut r, "cliff", &cliff_graph(depth));
    census_on(&mut r, "monomial", &bfs(m_infinity(), depth));
    r
}

/// Signature-rule operators on b-vectors against the generic A-variable
/// operators on Y-forms.
pub fn lemma_equivalence(depth: usize) -> Report {
    let mut r = Report::new(Suite::LemmaEquivalence, depth);
    let p = Params::default();
    let g = minf_graph(depth);
    r.tally("elements", g.len() as u64);
    for b in g.elements() {
        let y = b.to_monomial();
        r.check(
            "canonical form",
            MInfElement::from_monomial(&y, p).ok() == Some(*b),
            || b.to_string(),
        );
        for i in Index::ALL {
            let (fb, level) = b.f_sig_with_level(i);
            r.check("f agrees", y.f_generic(i) == Some(fb.to_monomial()), || {
                format!("f{i} {b}")
            });
            r.check("f level", y.m_f(i) == Some(level), || format!("f{i} {b}"));
            let generic = y
                .f_generic(i)
                .and_then(|m| MInfElement::from_monomial(&m, p).ok());
            r.check("f read back", generic == Some(fb), || format!("f{i} {b}"));
            let eb = b.e_sig_with_level(i);
            r.check(
                "e agrees",
                y.e_generic(i) == eb.map(|(x, _)| x.to_monomial()),
                || format!("e{i} {b}"),
            );
            r.check("e level", y.m_e(i) == eb.map(|(_, l)| l), || {
                format!("e{i} {b}")
            });
        }
    }
    let gy = bfs(m_infinity(), depth);
    r.check("graph isomorphism", iso_check(&g, &gy), || {
        "signature vs generic".into()
    });
    let mut a: Vec<ExtMonomial> = g.elements().map(|b| b.to_monomial()).collect();
    let mut b: Vec<ExtMonomial> = gy.elements().cloned().collect();
    a.sort();
    b.sort();
    r.check("node sets equal", a == b, || "signature vs generic".into());
    r
}

/// The shift parameter grid {1,2,3}² × {−2,0,3}.
pub fn shift_params() -> Vec<Params> {
    let mut out = Vec::new();
    for p1 in 1..=3 {
        for p2 in 1..=3 {
            for r in [-2, 0, 3] {
                out.push(Params::new(p1, p2, r).expect("positive params"));
            }
        }
    }
    out
}

/// The shift map commutes with all operators and preserves wt, εᵢ, φᵢ of
/// the Y-forms, across the parameter grid.
pub fn shift(depth: usize) -> Report {
    let mut r = Report::new(Suite::Shift, depth);
    let g = minf_graph(depth);
    let grid = shift_params();
    r.tally("elements", g.len() as u64);
    r.tally("parameter sets", grid.len() as u64);
    for &q in &grid {
        let top = shift_iso(&MInfElement::highest(Params::default()), q);
        r.check("highest element", top == MInfElement::highest(q), || {
            format!("{q:?}")
        });
        for b in g.elements() {
            let s = shift_iso(b, q);
            let y = b.to_monomial();
            let ys = s.to_monomial();
            r.check("membership", is_member_yform(&ys, q), || {
                format!("{q:?} {b}")
            });
            r.check(
                "structure maps",
                ys.wt() == y.wt()
                    && Index::ALL
                        .iter()
                        .all(|&i| ys.eps(i) == y.eps(i) && ys.phi(i) == y.phi(i)),
                || format!("{q:?} {b}"),
            );
            for i in Index::ALL {
                r.check(
                    "f commutes",
                    shift_iso(&b.f_sig(i), q) == s.f_sig(i),
                    || format!("f{i} {q:?} {b}"),
                );
                r.check(
                    "f matches generic",
                    ys.f_generic(i) == Some(s.f_sig(i).to_monomial()),
                    || format!("f{i} {q:?} {b}"),
                );
                r.check(
                    "e commutes",
                    b.e_sig(i).map(|x| shift_iso(&x, q)) == s.e_sig(i),
                    || format!("e{i} {q:?} {b}"),
                );
                r.check(
                    "e matches generic",
                    ys.e_generic(i) == s.e_sig(i).map(|x| x.to_monomial()),
                    || format!("e{i} {q:?} {b}"),
                );
            }
        }
    }
    r
}

/// A random monomial on Y_i(m), m ∈ [−5, 5], with exponents in [−4, 4]².
pub fn random_monomial(rng: &mut impl Rng) -> ExtMonomial {
    let mut m = ExtMonomial::one();
    for i in Index::ALL {
        for k in -5..=5 {
            if rng.random_bool(0.5) {
                let u = rng.random_range(-4..=4);
                let v = rng.random_range(-4..=4);
                m.mul_factor(i, k, crate::cartan::ExtPair::new(u, v));
            }
        }
    }
    m
}

/// Structure-map identities on random extended monomials.
pub fn bookkeeping(samples: usize, seed: u64) -> Report {
    let mut r = Report::new(Suite::Bookkeeping, 0);
    let mut rng = StdRng::seed_from_u64(seed);
    r.tally("monomials", samples as u64);
    for _ in 0..samples {
        let m = random_monomial(&mut rng);
        let wt_ext = m.wt_ext();
        let wt = m.wt();
        for i in Index::ALL {
            r.check(
                "extended weight",
                wt_ext.coeff(i) == m.phi_ext(i) - m.eps_ext(i),
                || m.to_string(),
            );
            r.check("weight", wt.coeff(i) == m.phi(i) - m.eps(i), || {
                m.to_string()
            });
            if let Some(f) = m.f_generic(i) {
                r.check("e f = id", f.e_generic(i).as_ref() == Some(&m), || {
                    format!("i={i} {m}")
                });
                r.check(
                    "wt f = wt - alpha",
                    f.wt() == wt - Weight::simple_root(i),
                    || format!("i={i} {m}"),
                );
            }
            if let Some(e) = m.e_generic(i) {
                r.check("f e = id", e.f_generic(i).as_ref() == Some(&m), || {
                    format!("i={i} {m}")
                });
            }
        }
    }
    r
}
