//! Explicit isomorphisms between the realizations.
//!
//! ```text
//!   T(∞) --theta--> M(∞) --shift_iso--> M(p₁,p₂;r;∞)
//!     |
//!     +--tableau_to_cliff--> I(∞)
//! ```

use crate::cliff::CliffElement;
use crate::error::{Error, Result};
use crate::minf::{MInfElement, Params};
use crate::tableau::MLTableau;

/// Θ: copies row-1 counts to the level −1 exponents and the row-2 count of
/// 3s to the exponent of X₃(−2).
pub fn theta(t: &MLTableau) -> MInfElement {
    MInfElement {
        b2: t.b2,
        b3: t.b3,
        b0: t.b0,
        b3bar: t.b3bar,
        b2bar: t.b2bar,
        b1bar: t.b1bar,
        b3low: t.b3_row2,
        params: Params::default(),
    }
}

pub fn theta_inv(b: &MInfElement) -> Result<MLTableau> {
    if b.params != Params::default() {
        return Err(Error::InvalidCounts(format!(
            "theta_inv expects M(inf) itself, got params {:?}",
            b.params
        )));
    }
    Ok(MLTableau {
        b2: b.b2,
        b3: b.b3,
        b0: b.b0,
        b3bar: b.b3bar,
        b2bar: b.b2bar,
        b1bar: b.b1bar,
        b3_row2: b.b3low,
    })
}

pub fn tableau_to_cliff(t: &MLTableau) -> CliffElement {
    let bars = t.b3bar + t.b2bar + t.b1bar;
    CliffElement {
        k11: t.b2 + t.b3 + t.b0 + bars,
        k12: t.b3 + t.b0 + bars,
        k13: 2 * bars + t.b0,
        k13bar: t.b2bar + t.b1bar,
        k12bar: t.b1bar,
        k22: t.b3_row2,
    }
}

/// Inverse of [`tableau_to_cliff`] in integer arithmetic:
/// ⌊k₁,₃/2 − k₁,₃̄⌋ = ⌊k₁,₃/2⌋ − k₁,₃̄, the 0-count (A+B) − (A′+B′) is
/// k₁,₃ mod 2, and the 3-count is k₁,₂ − ⌈k₁,₃/2⌉.
pub fn cliff_to_tableau(c: &CliffElement) -> Result<MLTableau> {
    c.check_member()?;
    Ok(MLTableau {
        b1bar: c.k12bar,
        b2bar: c.k13bar - c.k12bar,
        b3bar: c.k13 / 2 - c.k13bar,
        b0: c.k13 % 2,
        b3: c.k12 - c.k13.div_ceil(2),
        b2: c.k11 - c.k12,
        b3_row2: c.k22,
    })
}

/// φ: keeps the b-vector and replaces the shift parameters.
pub fn shift_iso(b: &MInfElement, params: Params) -> MInfElement {
    b.with_params(params)
}

pub fn minf_to_cliff(b: &MInfElement) -> Result<CliffElement> {
    Ok(tableau_to_cliff(&theta_inv(b)?))
}

pub fn cliff_to_minf(c: &CliffElement) -> Result<MInfElement> {
    Ok(theta(&cliff_to_tableau(c)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Index;
    use crate::crystal::Crystal;

    fn example_t() -> MLTableau {
        MLTableau {
            b2: 1,
            b3: 0,
            b0: 1,
            b3bar: 2,
            b2bar: 0,
            b1bar: 1,
            b3_row2: 2,
        }
    }

    #[test]
    fn theta_examples() {
        let h = MInfElement::highest(Params::default());
        assert_eq!(theta(&MLTableau::highest()), h);
        assert_eq!(theta(&example_t()).counts(), [1, 0, 1, 2, 0, 1, 2]);
        assert_eq!(
            theta(&MLTableau::highest().f_t(Index::Two)).counts(),
            [0, 0, 0, 0, 0, 0, 1]
        );
        assert_eq!(theta_inv(&h).unwrap(), MLTableau::highest());
        assert_eq!(theta_inv(&theta(&example_t())).unwrap(), example_t());
        assert!(theta_inv(&h.with_params(Params::new(2, 1, 0).unwrap())).is_err());
    }

    #[test]
    fn cliff_examples() {
        assert_eq!(
            tableau_to_cliff(&MLTableau::highest()),
            CliffElement::default()
        );
        assert_eq!(
            tableau_to_cliff(&example_t()),
            CliffElement::new([1, 1, 7, 4, 5, 2])
        );
        let f1 = MLTableau::highest().f_t(Index::One);
        assert_eq!(tableau_to_cliff(&f1), CliffElement::new([0, 0, 0, 0, 1, 0]));
        assert_eq!(
            cliff_to_tableau(&CliffElement::default()).unwrap(),
            MLTableau::highest()
        );
        assert_eq!(
            cliff_to_tableau(&CliffElement::new([1, 1, 7, 4, 5, 2])).unwrap(),
            example_t()
        );
        let t = cliff_to_tableau(&CliffElement::new([0, 0, 1, 1, 1, 0])).unwrap();
        assert_eq!(
            t,
            MLTableau {
                b0: 1,
                ..Default::default()
            }
        );
        assert_eq!(t.to_string(), "[1][1][0]\n[2]");
        assert_eq!(tableau_to_cliff(&t), CliffElement::new([0, 0, 1, 1, 1, 0]));
        assert!(cliff_to_tableau(&CliffElement::new([2, 1, 0, 0, 0, 0])).is_err());
    }

    /// The inverse map with literal rational floors, A = k12 − k13/2 and
    /// B = k13/2 − k13bar, evaluated in halves.
    fn cliff_to_tableau_floors(c: &CliffElement) -> [i64; 7] {
        let [k12b, k13b, k13, k12, k11, k22] = c.ks().map(|x| x as i64);
        // Values in units of 1/2.
        let a2 = 2 * k12 - k13;
        let b2 = k13 - 2 * k13b;
        let floor_half = |x: i64| x.div_euclid(2);
        let a_floor = floor_half(a2);
        let b_floor = floor_half(b2);
        let zeros2 = (a2 + b2) - 2 * (a_floor + b_floor);
        assert_eq!(zeros2 % 2, 0);
        // [b2, b3, b0, b3bar, b2bar, b1bar, b3_row2]
        [
            k11 - k12,
            a_floor,
            zeros2 / 2,
            b_floor,
            k13b - k12b,
            k12b,
            k22,
        ]
    }

    #[test]
    fn integer_reformulation_matches_floors() {
        let mut seen = 0;
        for k12b in 0..3u64 {
            for k13b in k12b..4 {
                for k13 in 2 * k13b..9 {
                    for k12 in k13.div_ceil(2)..6 {
                        for k11 in k12..7 {
                            let c = CliffElement::new([k12b, k13b, k13, k12, k11, 1]);
                            let t = cliff_to_tableau(&c).unwrap();
                            let got = [t.b2, t.b3, t.b0, t.b3bar, t.b2bar, t.b1bar, t.b3_row2]
                                .map(|x| x as i64);
                            assert_eq!(got, cliff_to_tableau_floors(&c), "{c:?}");
                            assert_eq!(tableau_to_cliff(&t), c);
                            seen += 1;
                        }
                    }
                }
            }
        }
        assert!(seen > 100);
    }

    #[test]
    fn shift_examples() {
        let h = MInfElement::highest(Params::default());
        let q = Params::new(2, 3, 5).unwrap();
        assert_eq!(shift_iso(&h, q), MInfElement::highest(q));
        assert_eq!(shift_iso(&shift_iso(&h, q), Params::default()), h);
        let ex = theta(&example_t());
        assert_eq!(shift_iso(&ex, q).weight(), crate::cartan::Weight(-5, -1));
    }

    #[test]
    fn composite_maps() {
        let ex = theta(&example_t());
        assert_eq!(
            minf_to_cliff(&ex).unwrap(),
            CliffElement::new([1, 1, 7, 4, 5, 2])
        );
        assert_eq!(
            cliff_to_minf(&CliffElement::new([1, 1, 7, 4, 5, 2])).unwrap(),
            ex
        );
        assert_eq!(
            minf_to_cliff(&MInfElement::highest(Params::default())).unwrap(),
            CliffElement::default()
        );
    }
}
