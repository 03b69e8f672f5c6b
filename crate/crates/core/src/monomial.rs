//! Extended Nakajima monomials with their generic crystal structure.
//!
//! A monomial is a finite product of variables `Y_i(m)` raised to integer
//! pairs `(u, v)`. Pairs are compared lexicographically, so the extension
//! component `u` dominates the ordinary exponent `v`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{c_const, cartan_entry, ExtPair, ExtWeight, Index, Weight};
use crate::crystal::Crystal;

/// An element of the extended monomial set. Zero exponents are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtMonomial {
    exps: BTreeMap<(Index, i64), ExtPair>,
}

/// Classification of a monomial with ẽ₁ = ẽ₂ = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seed {
    /// wt̃ = Σ (0, p_i) Λ_i with p_i ≥ 0: generates a copy of B(p₁Λ₁ + p₂Λ₂).
    HighestWeight(i64, i64),
    /// wt̃ = Σ (p_i, 0) Λ_i with p_i > 0: generates a copy of B(∞).
    BInfinity(i64, i64),
    Neither,
}

/// Prefix-sum scan of one index: the pieces m_f, m_e, φ̃ and ε̃ are all read
/// off the same maximum.
#[derive(Debug, Clone, Copy)]
struct Scan {
    max: ExtPair,
    total: ExtPair,
    argmin: i64,
    argmax: i64,
}

impl ExtMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `Y_i(m)^(u,v)`.
    pub fn y(i: Index, m: i64, u: i64, v: i64) -> Self {
        let mut out = Self::default();
        out.mul_factor(i, m, ExtPair::new(u, v));
        out
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Index, i64, ExtPair)>) -> Self {
        let mut out = Self::default();
        for (i, m, p) in factors {
            out.mul_factor(i, m, p);
        }
        out
    }

    /// Multiplies in `Y_i(m)^p`, erasing the entry if it becomes zero.
    pub fn mul_factor(&mut self, i: Index, m: i64, p: ExtPair) {
        if p.is_zero() {
            return;
        }
        let slot = self.exps.entry((i, m)).or_default();
        *slot += p;
        if slot.is_zero() {
            self.exps.remove(&(i, m));
        }
    }

    pub fn exponent(&self, i: Index, m: i64) -> ExtPair {
        self.exps.get(&(i, m)).copied().unwrap_or_default()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Nonzero factors sorted by (i, m).
    pub fn factors(&self) -> impl Iterator<Item = (Index, i64, ExtPair)> + '_ {
        self.exps.iter().map(|(&(i, m), &p)| (i, m, p))
    }

    pub fn multiply(&self, other: &ExtMonomial) -> ExtMonomial {
        let mut out = self.clone();
        for (i, m, p) in other.factors() {
            out.mul_factor(i, m, p);
        }
        out
    }

    pub fn inverse(&self) -> ExtMonomial {
        ExtMonomial {
            exps: self.exps.iter().map(|(&k, &p)| (k, -p)).collect(),
        }
    }

    /// wt̃(M) = Σ_i (Σ_m y_i(m)) Λ_i.
    pub fn wt_ext(&self) -> ExtWeight {
        let mut w = ExtWeight::default();
        for (i, _, p) in self.factors() {
            *w.coeff_mut(i) += p;
        }
        w
    }

    /// wt(M) = Σ_i (Σ_m y¹_i(m)) Λ_i.
    pub fn wt(&self) -> Weight {
        self.wt_ext().project()
    }

    fn support(&self, i: Index) -> Option<(i64, i64)> {
        let mut ms = self
            .exps
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, m), _)| m);
        let lo = ms.next()?;
        let hi = ms.next_back().unwrap_or(lo);
        Some((lo, hi))
    }

    /// Scans prefix sums Σ_{k≤m} y_i(k) over the window [lo−1, hi+1].
    ///
    /// Outside the window the prefix sum is constant: (0,0) below and the
    /// total above, and the window endpoints realize both values.
    fn scan(&self, i: Index) -> Option<Scan> {
        let (lo, hi) = self.support(i)?;
        let mut acc = ExtPair::ZERO;
        let mut best: Option<(ExtPair, i64, i64)> = None;
        for m in (lo - 1)..=(hi + 1) {
            acc += self.exponent(i, m);
            best = match best {
                None => Some((acc, m, m)),
                Some((b, first, _)) if acc == b => Some((b, first, m)),
                Some((b, _, _)) if acc > b => Some((acc, m, m)),
                keep => keep,
            };
        }
        let (max, argmin, argmax) = best.expect("window is non-empty");
        debug_assert_eq!(acc, self.wt_ext().coeff(i));
        Some(Scan {
            max,
            total: acc,
            argmin,
            argmax,
        })
    }

    /// φ̃_i(M) = max_m Σ_{k≤m} y_i(k).
    pub fn phi_ext(&self, i: Index) -> ExtPair {
        self.scan(i).map_or(ExtPair::ZERO, |s| s.max)
    }

    /// ε̃_i(M) = max_m −Σ_{k>m} y_i(k).
    pub fn eps_ext(&self, i: Index) -> ExtPair {
        self.scan(i).map_or(ExtPair::ZERO, |s| s.max - s.total)
    }

    pub fn phi(&self, i: Index) -> i64 {
        self.phi_ext(i).v
    }

    pub fn eps(&self, i: Index) -> i64 {
        self.eps_ext(i).v
    }

    /// m_f: the smallest m where the prefix sum attains φ̃_i. Only meaningful
    /// when φ̃_i > (0,0).
    pub fn m_f(&self, i: Index) -> Option<i64> {
        self.scan(i)
            .filter(|s| s.max > ExtPair::ZERO)
            .map(|s| s.argmin)
    }

    /// m_e: the largest m where the prefix sum attains φ̃_i. Only meaningful
    /// when ε̃_i > (0,0).
    pub fn m_e(&self, i: Index) -> Option<i64> {
        self.scan(i).filter(|s| s.max > s.total).map(|s| s.argmax)
    }

    pub fn f_generic(&self, i: Index) -> Option<ExtMonomial> {
        let m = self.m_f(i)?;
        Some(self.multiply(&a_var(i, m, -1)))
    }

    pub fn e_generic(&self, i: Index) -> Option<ExtMonomial> {
        let m = self.m_e(i)?;
        Some(self.multiply(&a_var(i, m, 1)))
    }

    pub fn classify(&self) -> Seed {
        if Index::ALL.iter().any(|&i| self.e_generic(i).is_some()) {
            return Seed::Neither;
        }
        let w = self.wt_ext();
        let (a, b) = (w.0, w.1);
        if a.u == 0 && b.u == 0 && a.v >= 0 && b.v >= 0 {
            Seed::HighestWeight(a.v, b.v)
        } else if a.v == 0 && b.v == 0 && a.u > 0 && b.u > 0 {
            Seed::BInfinity(a.u, b.u)
        } else {
            Seed::Neither
        }
    }
}

/// A_i(m)^sign with c₁₂ = 1, c₂₁ = 0:
/// A_i(m) = Y_i(m)^(0,1) Y_i(m+1)^(0,1) Π_{j≠i} Y_j(m + c_ji)^(0, ⟨h_j, α_i⟩).
pub fn a_var(i: Index, m: i64, sign: i64) -> ExtMonomial {
    let j = i.other();
    ExtMonomial::from_factors([
        (i, m, ExtPair::new(0, sign)),
        (i, m + 1, ExtPair::new(0, sign)),
        (
            j,
            m + c_const(j, i),
            ExtPair::new(0, sign * cartan_entry(j, i)),
        ),
    ])
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, m, p) in self.factors() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "Y_{i}({m})^({},{})", p.u, p.v)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FactorRecord {
    i: u8,
    m: i64,
    u: i64,
    v: i64,
}

impl Serialize for ExtMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let recs: Vec<FactorRecord> = self
            .factors()
            .map(|(i, m, p)| FactorRecord {
                i: i.as_u8(),
                m,
                u: p.u,
                v: p.v,
            })
            .collect();
        recs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let recs = Vec::<FactorRecord>::deserialize(d)?;
        let mut out = ExtMonomial::default();
        for r in recs {
            let i = Index::from_u8(r.i)
                .ok_or_else(|| serde::de::Error::custom(format!("index {} not in {{1,2}}", r.i)))?;
            out.mul_factor(i, r.m, ExtPair::new(r.u, r.v));
        }
        Ok(out)
    }
}

impl Crystal for ExtMonomial {
    fn f(&self, i: Index) -> Option<Self> {
        self.f_generic(i)
    }
    fn e(&self, i: Index) -> Option<Self> {
        self.e_generic(i)
    }
    fn weight(&self) -> Weight {
        self.wt()
    }
    fn epsilon(&self, i: Index) -> i64 {
        self.eps(i)
    }
    fn phi(&self, i: Index) -> i64 {
        ExtMonomial::phi(self, i)
    }
    fn label(&self) -> String {
        self.to_string()
    }
}

/// Y₁(−1)^(1,0) Y₂(−2)^(1,0), the highest element of M(∞).
pub fn m_infinity() -> ExtMonomial {
    ExtMonomial::from_factors([
        (Index::One, -1, ExtPair::new(1, 0)),
        (Index::Two, -2, ExtPair::new(1, 0)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use Index::{One, Two};

    fn y(i: Index, m: i64, u: i64, v: i64) -> (Index, i64, ExtPair) {
        (i, m, ExtPair::new(u, v))
    }

    #[test]
    fn a_variables() {
        let a1 = a_var(One, 0, 1);
        assert_eq!(
            a1,
            ExtMonomial::from_factors([y(One, 0, 0, 1), y(One, 1, 0, 1), y(Two, 0, 0, -1)])
        );
        let a2 = a_var(Two, -2, 1);
        assert_eq!(
            a2,
            ExtMonomial::from_factors([y(Two, -2, 0, 1), y(Two, -1, 0, 1), y(One, -1, 0, -3)])
        );
        assert!(a_var(One, 0, 1).multiply(&a_var(One, 0, -1)).is_one());
        assert_eq!(a_var(One, 7, 1).wt(), Weight::simple_root(One));
        assert_eq!(a_var(Two, -3, 1).wt(), Weight::simple_root(Two));
    }

    #[test]
    fn multiply_identities() {
        let m = m_infinity();
        assert_eq!(m.multiply(&ExtMonomial::one()), m);
        assert!(m.multiply(&m.inverse()).is_one());
        let node = ExtMonomial::from_factors([
            y(One, -1, 1, -1),
            y(One, 0, 0, -1),
            y(Two, -2, 1, 0),
            y(Two, -1, 0, 1),
        ]);
        assert_eq!(m.multiply(&a_var(One, -1, -1)), node);
    }

    #[test]
    fn weights() {
        let m = m_infinity();
        assert_eq!(
            m.wt_ext(),
            ExtWeight(ExtPair::new(1, 0), ExtPair::new(1, 0))
        );
        assert_eq!(m.wt(), Weight::ZERO);
        assert_eq!(ExtMonomial::one().wt(), Weight::ZERO);
        let ex = ExtMonomial::from_factors([
            y(One, -1, 1, 1),
            y(One, 1, 0, -5),
            y(One, 2, 0, -1),
            y(Two, -2, 1, -2),
            y(Two, -1, 0, -1),
            y(Two, 0, 0, 2),
        ]);
        assert_eq!(ex.wt(), Weight(-5, -1));
    }

    #[test]
    fn phi_eps_values() {
        let m = m_infinity();
        assert_eq!(m.phi_ext(One), ExtPair::new(1, 0));
        assert_eq!(m.eps_ext(One), ExtPair::ZERO);
        for i in Index::ALL {
            assert_eq!(ExtMonomial::one().phi_ext(i), ExtPair::ZERO);
            assert_eq!(ExtMonomial::one().eps_ext(i), ExtPair::ZERO);
        }
        let n = m.f_generic(One).unwrap();
        assert_eq!(n.phi_ext(One), ExtPair::new(1, -1));
        assert_eq!(n.eps_ext(One), ExtPair::new(0, 1));
        assert_eq!(n.phi(One) - n.eps(One), n.wt().0);
    }

    #[test]
    fn operators_on_m_infinity() {
        let m = m_infinity();
        let f1 = ExtMonomial::from_factors([
            y(One, -1, 1, -1),
            y(One, 0, 0, -1),
            y(Two, -2, 1, 0),
            y(Two, -1, 0, 1),
        ]);
        let f2 =
            ExtMonomial::from_factors([y(One, -1, 1, 3), y(Two, -2, 1, -1), y(Two, -1, 0, -1)]);
        assert_eq!(m.f_generic(One), Some(f1.clone()));
        assert_eq!(m.f_generic(Two), Some(f2.clone()));
        assert_eq!(m.e_generic(One), None);
        assert_eq!(m.e_generic(Two), None);
        assert_eq!(f1.e_generic(One), Some(m.clone()));
        assert_eq!(f2.e_generic(Two), Some(m));
    }

    #[test]
    fn zero_when_phi_vanishes() {
        // φ̃₁ = (0,0) for a single negative exponent.
        let m = ExtMonomial::y(One, 0, 0, -1);
        assert_eq!(m.f_generic(One), None);
        assert_eq!(m.f_generic(Two), None);
        assert!(m.e_generic(One).is_some());
    }

    #[test]
    fn seeds() {
        assert_eq!(
            ExtMonomial::y(One, 0, 0, 1).classify(),
            Seed::HighestWeight(1, 0)
        );
        assert_eq!(m_infinity().classify(), Seed::BInfinity(1, 1));
        assert_eq!(
            m_infinity().f_generic(One).unwrap().classify(),
            Seed::Neither
        );
        assert_eq!(ExtMonomial::one().classify(), Seed::HighestWeight(0, 0));
    }

    #[test]
    fn text_and_json_forms() {
        let m = m_infinity();
        assert_eq!(m.to_string(), "Y_1(-1)^(1,0) Y_2(-2)^(1,0)");
        assert_eq!(ExtMonomial::one().to_string(), "1");
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(
            js,
            r#"[{"i":1,"m":-1,"u":1,"v":0},{"i":2,"m":-2,"u":1,"v":0}]"#
        );
        let back: ExtMonomial = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
        // Zero records are erased and duplicates merged on input.
        let merged: ExtMonomial = serde_json::from_str(
            r#"[{"i":1,"m":0,"u":0,"v":1},{"i":1,"m":0,"u":0,"v":-1},{"i":2,"m":3,"u":0,"v":0}]"#,
        )
        .unwrap();
        assert!(merged.is_one());
        assert!(serde_json::from_str::<ExtMonomial>(r#"[{"i":3,"m":0,"u":0,"v":1}]"#).is_err());
    }
}
