//! The G₂ alphabet J = {1 ≺ 2 ≺ 3 ≺ 0 ≺ 3̄ ≺ 2̄ ≺ 1̄} and its fundamental crystal
//!
//! ```text
//! 1 -1-> 2 -2-> 3 -1-> 0 -1-> 3̄ -2-> 2̄ -1-> 1̄
//! ```

use std::fmt;
use std::str::FromStr;

use crate::cartan::Index;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    One,
    Two,
    Three,
    Zero,
    ThreeBar,
    TwoBar,
    OneBar,
}

use Letter::*;

impl Letter {
    /// J in increasing order.
    pub const ALL: [Letter; 7] = [One, Two, Three, Zero, ThreeBar, TwoBar, OneBar];

    fn pos(self) -> usize {
        self as usize
    }

    pub fn epsilon(self, i: Index) -> u64 {
        const E1: [u64; 7] = [0, 1, 0, 1, 2, 0, 1];
        const E2: [u64; 7] = [0, 0, 1, 0, 0, 1, 0];
        match i {
            Index::One => E1[self.pos()],
            Index::Two => E2[self.pos()],
        }
    }

    pub fn phi(self, i: Index) -> u64 {
        const P1: [u64; 7] = [1, 0, 2, 1, 0, 1, 0];
        const P2: [u64; 7] = [0, 1, 0, 0, 1, 0, 0];
        match i {
            Index::One => P1[self.pos()],
            Index::Two => P2[self.pos()],
        }
    }

    /// The arrow label leaving this letter along the chain, if any.
    fn out_color(self) -> Option<Index> {
        match self {
            One | Three | Zero | TwoBar => Some(Index::One),
            Two | ThreeBar => Some(Index::Two),
            OneBar => None,
        }
    }

    pub fn f(self, i: Index) -> Option<Letter> {
        (self.out_color() == Some(i)).then(|| Letter::ALL[self.pos() + 1])
    }

    pub fn e(self, i: Index) -> Option<Letter> {
        let prev = Letter::ALL.get(self.pos().checked_sub(1)?)?;
        (prev.out_color() == Some(i)).then_some(*prev)
    }

    /// ASCII name: barred letters carry a trailing `b`.
    pub fn name(self) -> &'static str {
        match self {
            One => "1",
            Two => "2",
            Three => "3",
            Zero => "0",
            ThreeBar => "3b",
            TwoBar => "2b",
            OneBar => "1b",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Letter::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownLetter(s.to_string()))
    }
}
