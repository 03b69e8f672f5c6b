//! The monomial realization M(∞) and its shifted copies M(p₁,p₂;r;∞).
//!
//! Elements are stored by their canonical b-vector: the exponents of the
//! X-variables at level r−1 for the letters 2, 3, 0, 3̄, 2̄, 1̄, and the
//! exponent of X₃ at level r−2. Kashiwara operators act by the signature
//! rule on these counts; every case amounts to multiplying the Y-form by a
//! single A_i(m)^{±1}.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{ExtPair, Index, Weight};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::monomial::ExtMonomial;
use crate::signature::{reduce, Reduced, Sym};

/// Shift parameters (p₁, p₂; r). `Params::default()` is M(∞) itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params {
    pub p1: i64,
    pub p2: i64,
    pub r: i64,
}

impl Default for Params {
    fn default() -> Self {
        Params { p1: 1, p2: 1, r: 0 }
    }
}

impl Params {
    pub fn new(p1: i64, p2: i64, r: i64) -> Result<Params> {
        if p1 <= 0 || p2 <= 0 {
            return Err(Error::BadParams { p1, p2 });
        }
        Ok(Params { p1, p2, r })
    }
}

/// One factor X_letter(level)^(u,v).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XFactor {
    pub letter: Letter,
    pub level: i64,
    pub exp: ExtPair,
}

impl XFactor {
    /// Expands into Y-variables (Y₀ ≡ 1).
    pub fn expand(&self) -> ExtMonomial {
        use Index::{One as Y1, Two as Y2};
        let (m, p) = (self.level, self.exp);
        let mut out = ExtMonomial::one();
        match self.letter {
            Letter::One => out.mul_factor(Y1, m, p),
            Letter::Two => {
                out.mul_factor(Y2, m, p);
                out.mul_factor(Y1, m + 1, -p);
            }
            Letter::Three => {
                out.mul_factor(Y1, m + 1, p.scale(2));
                out.mul_factor(Y2, m + 1, -p);
            }
            Letter::Zero => {
                out.mul_factor(Y1, m + 1, p);
                out.mul_factor(Y1, m + 2, -p);
            }
            Letter::ThreeBar => {
                out.mul_factor(Y2, m + 1, p);
                out.mul_factor(Y1, m + 2, p.scale(-2));
            }
            Letter::TwoBar => {
                out.mul_factor(Y1, m + 2, p);
                out.mul_factor(Y2, m + 2, -p);
            }
            Letter::OneBar => out.mul_factor(Y1, m + 3, -p),
        }
        out
    }
}

impl fmt::Display for XFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X_{}({})^({},{})",
            self.letter, self.level, self.exp.u, self.exp.v
        )
    }
}

/// Components of the b-vector; used to tag signature symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    B2,
    B3,
    B0,
    B3bar,
    B2bar,
    B1bar,
    B3low,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "MInfRecord", into = "MInfRecord")]
pub struct MInfElement {
    pub b2: u64,
    pub b3: u64,
    pub b0: u64,
    pub b3bar: u64,
    pub b2bar: u64,
    pub b1bar: u64,
    pub b3low: u64,
    pub params: Params,
}

#[derive(Serialize, Deserialize)]
struct MInfRecord {
    b2: u64,
    b3: u64,
    b0: u64,
    b3bar: u64,
    b2bar: u64,
    b1bar: u64,
    b3low: u64,
    #[serde(default = "one")]
    p1: i64,
    #[serde(default = "one")]
    p2: i64,
    #[serde(default)]
    r: i64,
}

fn one() -> i64 {
    1
}

impl TryFrom<MInfRecord> for MInfElement {
    type Error = Error;
    fn try_from(x: MInfRecord) -> Result<Self> {
        let b = MInfElement {
            b2: x.b2,
            b3: x.b3,
            b0: x.b0,
            b3bar: x.b3bar,
            b2bar: x.b2bar,
            b1bar: x.b1bar,
            b3low: x.b3low,
            params: Params::new(x.p1, x.p2, x.r)?,
        };
        b.validate()?;
        Ok(b)
    }
}

impl From<MInfElement> for MInfRecord {
    fn from(b: MInfElement) -> Self {
        MInfRecord {
            b2: b.b2,
            b3: b.b3,
            b0: b.b0,
            b3bar: b.b3bar,
            b2bar: b.b2bar,
            b1bar: b.b1bar,
            b3low: b.b3low,
            p1: b.params.p1,
            p2: b.params.p2,
            r: b.params.r,
        }
    }
}

impl MInfElement {
    /// The highest element M_∞ (or M_(p₁,p₂;r;∞) for other params).
    pub fn highest(params: Params) -> Self {
        MInfElement {
            b2: 0,
            b3: 0,
            b0: 0,
            b3bar: 0,
            b2bar: 0,
            b1bar: 0,
            b3low: 0,
            params,
        }
    }

    /// Counts in the order (b₂, b₃, b₀, b₃̄, b₂̄, b₁̄, b₃⁻²).
    pub fn from_counts(c: [u64; 7], params: Params) -> Result<Self> {
        let b = MInfElement {
            b2: c[0],
            b3: c[1],
            b0: c[2],
            b3bar: c[3],
            b2bar: c[4],
            b1bar: c[5],
            b3low: c[6],
            params,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn counts(&self) -> [u64; 7] {
        [
            self.b2, self.b3, self.b0, self.b3bar, self.b2bar, self.b1bar, self.b3low,
        ]
    }

    pub fn validate(&self) -> Result<()> {
        if self.b0 > 1 {
            return Err(Error::InvalidCounts(format!("b0 = {} exceeds 1", self.b0)));
        }
        if self.params.p1 <= 0 || self.params.p2 <= 0 {
            return Err(Error::BadParams {
                p1: self.params.p1,
                p2: self.params.p2,
            });
        }
        Ok(())
    }

    fn top_sum(&self) -> u64 {
        self.b2 + self.b3 + self.b0 + self.b3bar + self.b2bar + self.b1bar
    }

    /// The X-variable product in canonical order, zero factors included.
    pub fn x_factors(&self) -> Vec<XFactor> {
        let Params { p1, p2, r } = self.params;
        let x = |letter, level, u, v: u64| XFactor {
            letter,
            level,
            exp: ExtPair::new(u, v as i64),
        };
        let top = r - 1;
        vec![
            XFactor {
                letter: Letter::One,
                level: top,
                exp: ExtPair::new(p1 + p2, -(self.top_sum() as i64)),
            },
            x(Letter::Two, top, 0, self.b2),
            x(Letter::Three, top, 0, self.b3),
            x(Letter::Zero, top, 0, self.b0),
            x(Letter::ThreeBar, top, 0, self.b3bar),
            x(Letter::TwoBar, top, 0, self.b2bar),
            x(Letter::OneBar, top, 0, self.b1bar),
            XFactor {
                letter: Letter::Two,
                level: r - 2,
                exp: ExtPair::new(p2, -(self.b3low as i64)),
            },
            x(Letter::Three, r - 2, 0, self.b3low),
        ]
    }

    /// The Y-form monomial.
    pub fn to_monomial(&self) -> ExtMonomial {
        self.x_factors()
            .iter()
            .fold(ExtMonomial::one(), |acc, x| acc.multiply(&x.expand()))
    }

    /// Reads the b-vector off a Y-form monomial, rejecting non-members.
    pub fn from_monomial(m: &ExtMonomial, params: Params) -> Result<Self> {
        let a = member_exponents(m, params)?;
        let b2 = a.a2[1] - a.a2[0];
        let t = a.a1[1] + a.a2[1] - a.a2[0];
        let s = -a.a1[2] - a.a2[3];
        let b0 = t.rem_euclid(2);
        let b = MInfElement {
            b2: b2 as u64,
            b3: ((t - b0) / 2) as u64,
            b0: b0 as u64,
            b3bar: ((s - b0) / 2) as u64,
            b2bar: (-a.a2[3]) as u64,
            b1bar: (-a.a1[3]) as u64,
            b3low: (-a.a2[0]) as u64,
            params,
        };
        Ok(b)
    }

    /// The i-signature on the b-vector, tagged by slot.
    pub fn signature(&self, i: Index) -> Reduced<Slot> {
        use Sym::{One as I, Zero as O};
        match i {
            Index::One => reduce([
                (I, self.b1bar, Slot::B1bar),
                (O, self.b2bar, Slot::B2bar),
                (I, 2 * self.b3bar, Slot::B3bar),
                (I, self.b0, Slot::B0),
                (O, self.b0, Slot::B0),
                (O, 2 * self.b3, Slot::B3),
                (I, self.b2, Slot::B2),
            ]),
            Index::Two => reduce([
                (I, self.b2bar, Slot::B2bar),
                (O, self.b3bar, Slot::B3bar),
                (I, self.b3, Slot::B3),
                (O, self.b2, Slot::B2),
                (I, self.b3low, Slot::B3low),
            ]),
        }
    }

    /// f̃_i by the signature rule, with the level m of the A_i(m)^{-1} it
    /// multiplies the Y-form by.
    pub fn f_sig_with_level(&self, i: Index) -> (MInfElement, i64) {
        let mut b = *self;
        let r = self.params.r;
        let level = match (i, self.signature(i).leftmost_zero()) {
            (Index::One, Some(Slot::B2bar)) => {
                b.b2bar -= 1;
                b.b1bar += 1;
                r + 1
            }
            (Index::One, Some(Slot::B0)) => {
                b.b0 -= 1;
                b.b3bar += 1;
                r
            }
            (Index::One, Some(Slot::B3)) => {
                assert_eq!(b.b0, 0, "a surviving 0 at X_3 forces b0 = 0");
                b.b3 -= 1;
                b.b0 += 1;
                r
            }
            (Index::One, None) => {
                b.b2 += 1;
                r - 1
            }
            (Index::Two, Some(Slot::B3bar)) => {
                b.b3bar -= 1;
                b.b2bar += 1;
                r
            }
            (Index::Two, Some(Slot::B2)) => {
                b.b2 -= 1;
                b.b3 += 1;
                r - 1
            }
            (Index::Two, None) => {
                b.b3low += 1;
                r - 2
            }
            (i, slot) => unreachable!("no zeros are emitted at {slot:?} for i = {i}"),
        };
        (b, level)
    }

    pub fn f_sig(&self, i: Index) -> MInfElement {
        self.f_sig_with_level(i).0
    }

    /// ẽ_i by the signature rule, with the level m of the A_i(m) used.
    pub fn e_sig_with_level(&self, i: Index) -> Option<(MInfElement, i64)> {
        let mut b = *self;
        let r = self.params.r;
        let level = match (i, self.signature(i).rightmost_one()?) {
            (Index::One, Slot::B1bar) => {
                b.b1bar -= 1;
                b.b2bar += 1;
                r + 1
            }
            (Index::One, Slot::B3bar) => {
                assert_eq!(b.b0, 0, "a surviving 1 at X_3bar forces b0 = 0");
                b.b3bar -= 1;
                b.b0 += 1;
                r
            }
            (Index::One, Slot::B0) => {
                b.b0 -= 1;
                b.b3 += 1;
                r
            }
            (Index::One, Slot::B2) => {
                b.b2 -= 1;
                r - 1
            }
            (Index::Two, Slot::B2bar) => {
                b.b2bar -= 1;
                b.b3bar += 1;
                r
            }
            (Index::Two, Slot::B3) => {
                b.b3 -= 1;
                b.b2 += 1;
                r - 1
            }
            (Index::Two, Slot::B3low) => {
                b.b3low -= 1;
                r - 2
            }
            (i, slot) => unreachable!("no ones are emitted at {slot:?} for i = {i}"),
        };
        Some((b, level))
    }

    pub fn e_sig(&self, i: Index) -> Option<MInfElement> {
        self.e_sig_with_level(i).map(|(b, _)| b)
    }

    /// Same b-vector, different shift parameters.
    pub fn with_params(&self, params: Params) -> MInfElement {
        MInfElement { params, ..*self }
    }
}

impl fmt::Display for MInfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .x_factors()
            .iter()
            .filter(|x| !x.exp.is_zero())
            .map(|x| x.to_string())
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl Crystal for MInfElement {
    fn f(&self, i: Index) -> Option<Self> {
        Some(self.f_sig(i))
    }
    fn e(&self, i: Index) -> Option<Self> {
        self.e_sig(i)
    }
    fn weight(&self) -> Weight {
        self.to_monomial().wt()
    }
    fn epsilon(&self, i: Index) -> i64 {
        self.signature(i).ones_count() as i64
    }
    fn phi(&self, i: Index) -> i64 {
        self.epsilon(i) + crate::cartan::pairing(i, self.weight())
    }
    fn label(&self) -> String {
        self.to_string()
    }
}

/// The eight v-exponents a₁^{−1..2} and a₂^{−2..1} of a member, after the
/// support shape and the sign, linear and parity conditions have been checked.
struct MemberExponents {
    a1: [i64; 4],
    a2: [i64; 4],
}

fn member_exponents(m: &ExtMonomial, params: Params) -> Result<MemberExponents> {
    let Params { p1, p2, r } = params;
    let fail = |reason: String| Error::NotMember { p1, p2, r, reason };
    for (i, k, p) in m.factors() {
        let (lo, u_expected) = match i {
            Index::One => (r - 1, if k == r - 1 { p1 } else { 0 }),
            Index::Two => (r - 2, if k == r - 2 { p2 } else { 0 }),
        };
        if k < lo || k > lo + 3 {
            return Err(fail(format!("Y_{i}({k}) lies outside the allowed support")));
        }
        if p.u != u_expected {
            return Err(fail(format!(
                "Y_{i}({k}) has extension exponent {} (expected {u_expected})",
                p.u
            )));
        }
    }
    if m.exponent(Index::One, r - 1).u != p1 || m.exponent(Index::Two, r - 2).u != p2 {
        return Err(fail("missing extension factor".into()));
    }
    let a1: [i64; 4] = std::array::from_fn(|j| m.exponent(Index::One, r - 1 + j as i64).v);
    let a2: [i64; 4] = std::array::from_fn(|j| m.exponent(Index::Two, r - 2 + j as i64).v);
    // a1 = [a₁^{-1}, a₁^0, a₁^1, a₁^2], a2 = [a₂^{-2}, a₂^{-1}, a₂^0, a₂^1]
    if a2[0] - a2[1] > 0 || a2[3] > 0 || a1[3] > 0 || a2[0] > 0 {
        return Err(fail("sign condition fails".into()));
    }
    let rel1 = (a1[0] - a1[2] - a1[3]) + (2 * a2[0] + a2[1] - a2[2] - 2 * a2[3]);
    let rel2 = (a1[0] + a1[1] - a1[3]) + (a2[0] + 2 * a2[1] + a2[2] - a2[3]);
    if rel1 != 0 || rel2 != 0 {
        return Err(fail(format!("linear relations fail ({rel1}, {rel2})")));
    }
    let t = a1[1] + a2[1] - a2[0];
    let s = -a1[2] - a2[3];
    if t < 0 || s < 0 || t.rem_euclid(2) != s.rem_euclid(2) {
        return Err(fail(format!("parity condition fails ({t}, {s})")));
    }
    Ok(MemberExponents { a1, a2 })
}

/// Membership of a Y-form monomial in M(p₁,p₂;r;∞).
pub fn is_member_yform(m: &ExtMonomial, params: Params) -> bool {
    member_exponents(m, params).is_ok()
}
