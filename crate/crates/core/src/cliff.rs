//! Elementary crystals B_i, the tensor product rule, and the realization
//! I(∞) = { u_∞ ⊗ b₁(−k₁,₂̄) ⊗ b₂(−k₁,₃̄) ⊗ b₁(−k₁,₃) ⊗ b₂(−k₁,₂) ⊗ b₁(−k₁,₁) ⊗ b₂(−k₂,₂) }.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{pairing, Index, Weight};
use crate::crystal::Crystal;
use crate::error::{Error, Result};

/// An integer or −∞. Only comparisons are defined on −∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(k) => Some(k),
            ExtInt::NegInf => None,
        }
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::NegInf, ExtInt::NegInf) => Ordering::Equal,
            (ExtInt::NegInf, _) => Ordering::Less,
            (_, ExtInt::NegInf) => Ordering::Greater,
            (ExtInt::Fin(a), ExtInt::Fin(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Fin(k) => write!(f, "{k}"),
        }
    }
}

/// b_i(k) in the elementary crystal B_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElemElt {
    pub index: Index,
    pub k: i64,
}

impl ElemElt {
    pub fn wt(&self) -> Weight {
        Weight::simple_root(self.index).scale(self.k)
    }

    pub fn eps(&self, i: Index) -> ExtInt {
        if i == self.index {
            ExtInt::Fin(-self.k)
        } else {
            ExtInt::NegInf
        }
    }

    pub fn phi(&self, i: Index) -> ExtInt {
        if i == self.index {
            ExtInt::Fin(self.k)
        } else {
            ExtInt::NegInf
        }
    }

    pub fn f(&self, i: Index) -> Option<ElemElt> {
        (i == self.index).then_some(ElemElt {
            k: self.k - 1,
            ..*self
        })
    }

    pub fn e(&self, i: Index) -> Option<ElemElt> {
        (i == self.index).then_some(ElemElt {
            k: self.k + 1,
            ..*self
        })
    }
}

/// (wt, ε_i, φ_i) of b_i(k).
pub fn elem_maps(x: ElemElt, i: Index) -> (Weight, ExtInt, ExtInt) {
    (x.wt(), x.eps(i), x.phi(i))
}

/// A tensor factor of u_∞ ⊗ β₁ ⊗ β₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Factor {
    /// The highest element of B(∞): wt = 0, ε_i = 0, ẽ_i = 0.
    UInf,
    Elem(ElemElt),
}

impl Factor {
    fn wt(self) -> Weight {
        match self {
            Factor::UInf => Weight::ZERO,
            Factor::Elem(x) => x.wt(),
        }
    }

    fn eps(self, i: Index) -> ExtInt {
        match self {
            Factor::UInf => ExtInt::Fin(0),
            Factor::Elem(x) => x.eps(i),
        }
    }
}

/// The six k-values of u_∞ ⊗ β₁ ⊗ β₂.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct CliffElement {
    pub k12bar: u64,
    pub k13bar: u64,
    pub k13: u64,
    pub k12: u64,
    pub k11: u64,
    pub k22: u64,
}

/// Which factor slot each tensor position after u_∞ carries, in order.
const COLORS: [Index; 6] = [
    Index::One,
    Index::Two,
    Index::One,
    Index::Two,
    Index::One,
    Index::Two,
];

impl CliffElement {
    pub fn new(k: [u64; 6]) -> Self {
        let [k12bar, k13bar, k13, k12, k11, k22] = k;
        CliffElement {
            k12bar,
            k13bar,
            k13,
            k12,
            k11,
            k22,
        }
    }

    pub fn ks(&self) -> [u64; 6] {
        [
            self.k12bar,
            self.k13bar,
            self.k13,
            self.k12,
            self.k11,
            self.k22,
        ]
    }

    fn k_mut(&mut self, slot: usize) -> &mut u64 {
        match slot {
            0 => &mut self.k12bar,
            1 => &mut self.k13bar,
            2 => &mut self.k13,
            3 => &mut self.k12,
            4 => &mut self.k11,
            5 => &mut self.k22,
            _ => unreachable!(),
        }
    }

    fn factors(&self) -> [Factor; 7] {
        let ks = self.ks();
        let mut out = [Factor::UInf; 7];
        for (slot, (&index, &k)) in COLORS.iter().zip(ks.iter()).enumerate() {
            out[slot + 1] = Factor::Elem(ElemElt {
                index,
                k: -(k as i64),
            });
        }
        out
    }

    /// 0 ≤ k₁,₂̄ ≤ k₁,₃̄ ≤ k₁,₃/2 ≤ k₁,₂ ≤ k₁,₁, with k₂,₂ ≥ 0 implied by the type.
    pub fn is_member(&self) -> bool {
        self.k12bar <= self.k13bar
            && 2 * self.k13bar <= self.k13
            && self.k13 <= 2 * self.k12
            && self.k12 <= self.k11
    }

    pub fn check_member(&self) -> Result<()> {
        if self.is_member() {
            Ok(())
        } else {
            Err(Error::NotCliffMember(format!(
                "{:?} violates the inequality chain",
                self.ks()
            )))
        }
    }

    /// a_k = ε_i(b^k) − Σ_{v<k} ⟨h_i, wt(b^v)⟩ for the seven factors.
    pub fn a_seq(&self, i: Index) -> [ExtInt; 7] {
        let mut out = [ExtInt::NegInf; 7];
        let mut shift = 0i64;
        for (slot, f) in self.factors().into_iter().enumerate() {
            out[slot] = match f.eps(i) {
                ExtInt::Fin(e) => ExtInt::Fin(e - shift),
                ExtInt::NegInf => ExtInt::NegInf,
            };
            shift += pairing(i, f.wt());
        }
        out
    }

    /// f̃_i acts on the rightmost position attaining max a_k.
    pub fn f_c(&self, i: Index) -> CliffElement {
        let a = self.a_seq(i);
        let max = *a.iter().max().expect("seven entries");
        let pos = a.iter().rposition(|&x| x == max).expect("max is attained");
        assert!(pos > 0, "u_inf is never selected by f on members");
        let mut out = *self;
        // f̃ b_i(−k) = b_i(−k−1)
        *out.k_mut(pos - 1) += 1;
        out
    }

    /// ẽ_i acts on the leftmost position attaining max a_k; ẽ_i u_∞ = 0.
    pub fn e_c(&self, i: Index) -> Option<CliffElement> {
        let a = self.a_seq(i);
        let max = *a.iter().max().expect("seven entries");
        let pos = a.iter().position(|&x| x == max).expect("max is attained");
        if pos == 0 {
            return None;
        }
        let mut out = *self;
        let k = out.k_mut(pos - 1);
        *k = k
            .checked_sub(1)
            .expect("e_i b_i(0) leaves I(inf) only through u_inf");
        Some(out)
    }

    /// ε_i of the tensor product: max_k a_k.
    pub fn eps_c(&self, i: Index) -> i64 {
        self.a_seq(i)
            .into_iter()
            .max()
            .and_then(ExtInt::finite)
            .expect("a_1 = 0 is finite")
    }

    pub fn wt_c(&self) -> Weight {
        self.factors()
            .iter()
            .fold(Weight::ZERO, |acc, f| acc + f.wt())
    }

    pub fn phi_c(&self, i: Index) -> i64 {
        self.eps_c(i) + pairing(i, self.wt_c())
    }
}

impl fmt::Display for CliffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u∞")?;
        for (&index, &k) in COLORS.iter().zip(self.ks().iter()) {
            write!(f, " ⊗ b{index}({})", -(k as i64))?;
        }
        Ok(())
    }
}

impl Crystal for CliffElement {
    fn f(&self, i: Index) -> Option<Self> {
        Some(self.f_c(i))
    }
    fn e(&self, i: Index) -> Option<Self> {
        self.e_c(i)
    }
    fn weight(&self) -> Weight {
        self.wt_c()
    }
    fn epsilon(&self, i: Index) -> i64 {
        self.eps_c(i)
    }
    fn phi(&self, i: Index) -> i64 {
        self.phi_c(i)
    }
    fn label(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtInt::{Fin, NegInf};
    use Index::{One, Two};

    #[test]
    fn elementary_maps() {
        let b = ElemElt { index: One, k: 0 };
        assert_eq!(elem_maps(b, One), (Weight::ZERO, Fin(0), Fin(0)));
        let b = ElemElt { index: One, k: -7 };
        assert_eq!(
            elem_maps(b, One),
            (Weight::simple_root(One).scale(-7), Fin(7), Fin(-7))
        );
        assert_eq!(
            elem_maps(b, Two),
            (Weight::simple_root(One).scale(-7), NegInf, NegInf)
        );
        assert_eq!(b.f(One), Some(ElemElt { index: One, k: -8 }));
        assert_eq!(b.e(Two), None);
        assert!(NegInf < Fin(i64::MIN));
    }

    /// The closed forms for a_k, written out.
    fn a_closed(c: &CliffElement, i: Index) -> [ExtInt; 7] {
        let [k12b, k13b, k13, k12, k11, k22] = c.ks().map(|x| x as i64);
        match i {
            One => [
                Fin(0),
                Fin(k12b),
                NegInf,
                Fin(k13 + 2 * k12b - 3 * k13b),
                NegInf,
                Fin(k11 + 2 * k12b - 3 * k13b + 2 * k13 - 3 * k12),
                NegInf,
            ],
            Two => [
                Fin(0),
                NegInf,
                Fin(k13b - k12b),
                NegInf,
                Fin(k12 - k12b + 2 * k13b - k13),
                NegInf,
                Fin(k22 - k12b + 2 * k13b - k13 + 2 * k12 - k11),
            ],
        }
    }

    #[test]
    fn a_sequences() {
        let z = CliffElement::default();
        assert_eq!(
            z.a_seq(One),
            [Fin(0), Fin(0), NegInf, Fin(0), NegInf, Fin(0), NegInf]
        );
        assert_eq!(
            z.a_seq(Two),
            [Fin(0), NegInf, Fin(0), NegInf, Fin(0), NegInf, Fin(0)]
        );
        let c = CliffElement::new([1, 1, 7, 4, 5, 2]);
        let a = c.a_seq(One);
        assert_eq!((a[1], a[3], a[5]), (Fin(1), Fin(6), Fin(6)));
        for i in Index::ALL {
            assert_eq!(c.a_seq(i), a_closed(&c, i));
        }
    }

    #[test]
    fn operators_at_the_top() {
        let z = CliffElement::default();
        assert_eq!(z.f_c(One), CliffElement { k11: 1, ..z });
        assert_eq!(z.f_c(Two), CliffElement { k22: 1, ..z });
        assert_eq!(z.e_c(One), None);
        assert_eq!(z.e_c(Two), None);
        assert_eq!(z.f_c(One).e_c(One), Some(z));
    }

    #[test]
    fn membership() {
        assert!(CliffElement::default().is_member());
        assert!(CliffElement::new([1, 1, 7, 4, 5, 2]).is_member());
        assert!(!CliffElement::new([2, 1, 0, 0, 0, 0]).is_member());
        // k13 / 2 ≤ k12 compares rationally.
        assert!(CliffElement::new([0, 0, 3, 2, 2, 0]).is_member());
        assert!(!CliffElement::new([0, 0, 5, 2, 2, 0]).is_member());
    }

    #[test]
    fn weight_and_text() {
        let c = CliffElement::new([1, 1, 7, 4, 5, 2]);
        assert_eq!(c.wt_c().to_roots(), (-13, -7));
        assert_eq!(
            c.to_string(),
            "u∞ ⊗ b1(-1) ⊗ b2(-1) ⊗ b1(-7) ⊗ b2(-4) ⊗ b1(-5) ⊗ b2(-2)"
        );
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"k12bar":1,"k13bar":1,"k13":7,"k12":4,"k11":5,"k22":2}"#
        );
    }
}
