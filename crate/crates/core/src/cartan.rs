//! G₂ Cartan datum, weight lattice arithmetic and integer-pair exponents.
//!
//! Conventions are fixed once here and imported everywhere else:
//! α₁ is the short root, ⟨h₁,α₂⟩ = −3 and ⟨h₂,α₁⟩ = −1. The monomial
//! convention constants are c₁₂ = 1, c₂₁ = 0.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of the index set I = {1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Index {
    One,
    Two,
}

impl Index {
    pub const ALL: [Index; 2] = [Index::One, Index::Two];

    pub fn from_u8(n: u8) -> Option<Index> {
        match n {
            1 => Some(Index::One),
            2 => Some(Index::Two),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Index::One => 1,
            Index::Two => 2,
        }
    }

    pub fn other(self) -> Index {
        match self {
            Index::One => Index::Two,
            Index::Two => Index::One,
        }
    }

    fn slot(self) -> usize {
        self.as_u8() as usize - 1
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Cartan matrix entries a_ij = ⟨h_i, α_j⟩.
pub const CARTAN: [[i64; 2]; 2] = [[2, -3], [-1, 2]];

/// Monomial convention constants c_ij (i ≠ j); c₁₂ + c₂₁ = 1.
pub const C12: i64 = 1;
pub const C21: i64 = 0;

pub fn cartan_entry(i: Index, j: Index) -> i64 {
    CARTAN[i.slot()][j.slot()]
}

/// c_ij for i ≠ j.
pub fn c_const(i: Index, j: Index) -> i64 {
    match (i, j) {
        (Index::One, Index::Two) => C12,
        (Index::Two, Index::One) => C21,
        _ => panic!("c_ij is only defined for i != j"),
    }
}

/// A weight w₁Λ₁ + w₂Λ₂ stored in fundamental-weight coordinates.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Weight(pub i64, pub i64);

impl Weight {
    pub const ZERO: Weight = Weight(0, 0);

    pub fn fundamental(i: Index) -> Weight {
        match i {
            Index::One => Weight(1, 0),
            Index::Two => Weight(0, 1),
        }
    }

    /// The simple root α_i in Λ-coordinates: the i-th column of the Cartan matrix.
    pub fn simple_root(i: Index) -> Weight {
        Weight(cartan_entry(Index::One, i), cartan_entry(Index::Two, i))
    }

    pub fn coeff(self, i: Index) -> i64 {
        match i {
            Index::One => self.0,
            Index::Two => self.1,
        }
    }

    pub fn scale(self, k: i64) -> Weight {
        Weight(self.0 * k, self.1 * k)
    }

    pub fn from_roots(a: i64, b: i64) -> Weight {
        roots_to_weight(a, b)
    }

    pub fn to_roots(self) -> (i64, i64) {
        weight_to_roots(self)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
        self.1 += rhs.1;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight(self.0 - rhs.0, self.1 - rhs.1)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0, -self.1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}L1{:+}L2", self.0, self.1)
    }
}

/// ⟨h_i, w⟩, using ⟨h_i, Λ_j⟩ = δ_ij.
pub fn pairing(i: Index, w: Weight) -> i64 {
    w.coeff(i)
}

/// Coordinates (a, b) with w = aα₁ + bα₂.
///
/// The Cartan matrix of G₂ has determinant 1, so the inverse is integral:
/// a = 2w₁ + 3w₂, b = w₁ + 2w₂.
pub fn weight_to_roots(w: Weight) -> (i64, i64) {
    (2 * w.0 + 3 * w.1, w.0 + 2 * w.1)
}

pub fn roots_to_weight(a: i64, b: i64) -> Weight {
    Weight::simple_root(Index::One).scale(a) + Weight::simple_root(Index::Two).scale(b)
}

/// Exponent pair (u, v) of an extended monomial, ordered lexicographically.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtPair {
    pub u: i64,
    pub v: i64,
}

impl ExtPair {
    pub const ZERO: ExtPair = ExtPair { u: 0, v: 0 };

    pub const fn new(u: i64, v: i64) -> ExtPair {
        ExtPair { u, v }
    }

    pub fn is_zero(self) -> bool {
        self == ExtPair::ZERO
    }

    pub fn scale(self, k: i64) -> ExtPair {
        ExtPair::new(self.u * k, self.v * k)
    }
}

impl Ord for ExtPair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.u, self.v).cmp(&(other.u, other.v))
    }
}

impl PartialOrd for ExtPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExtPair {
    type Output = ExtPair;
    fn add(self, rhs: ExtPair) -> ExtPair {
        ExtPair::new(self.u + rhs.u, self.v + rhs.v)
    }
}

impl AddAssign for ExtPair {
    fn add_assign(&mut self, rhs: ExtPair) {
        self.u += rhs.u;
        self.v += rhs.v;
    }
}

impl Sub for ExtPair {
    type Output = ExtPair;
    fn sub(self, rhs: ExtPair) -> ExtPair {
        ExtPair::new(self.u - rhs.u, self.v - rhs.v)
    }
}

impl Neg for ExtPair {
    type Output = ExtPair;
    fn neg(self) -> ExtPair {
        ExtPair::new(-self.u, -self.v)
    }
}

impl fmt::Display for ExtPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Σ_i (u_i, v_i) Λ_i.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtWeight(pub ExtPair, pub ExtPair);

impl ExtWeight {
    pub fn coeff(self, i: Index) -> ExtPair {
        match i {
            Index::One => self.0,
            Index::Two => self.1,
        }
    }

    pub fn coeff_mut(&mut self, i: Index) -> &mut ExtPair {
        match i {
            Index::One => &mut self.0,
            Index::Two => &mut self.1,
        }
    }

    /// Drops the extension components.
    pub fn project(self) -> Weight {
        Weight(self.0.v, self.1.v)
    }
}

impl Add for ExtWeight {
    type Output = ExtWeight;
    fn add(self, rhs: ExtWeight) -> ExtWeight {
        ExtWeight(self.0 + rhs.0, self.1 + rhs.1)
    }
}
