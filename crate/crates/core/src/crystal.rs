//! The abstract crystal contract shared by every realization.

use std::fmt::Debug;
use std::hash::Hash;

use crate::cartan::{Index, Weight};

/// A crystal element with Kashiwara operators and structure maps.
///
/// `None` from [`Crystal::f`] or [`Crystal::e`] is the crystal zero. The
/// element itself doubles as its canonical encoding, so `Ord` and `Hash` must
/// agree with equality of elements.
pub trait Crystal: Clone + Eq + Ord + Hash + Debug {
    fn f(&self, i: Index) -> Option<Self>;
    fn e(&self, i: Index) -> Option<Self>;
    fn weight(&self) -> Weight;
    fn epsilon(&self, i: Index) -> i64;
    fn phi(&self, i: Index) -> i64;
    /// Canonical single-element text form.
    fn label(&self) -> String;
}
