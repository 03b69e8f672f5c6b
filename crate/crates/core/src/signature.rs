//! Signature rule: cancel (0,1) pairs until the word reads ones then zeros.
//!
//! Words arrive as runs `(symbol, count, tag)` where the tag identifies the
//! component (tableau box, X-factor, ...) that emitted the symbols. The
//! reduction is a single left-to-right scan: every 1 cancels the nearest
//! surviving 0 on its left, which is the same as repeated adjacent (0,1)
//! cancellation.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sym {
    One,
    Zero,
}

/// A reduced signature, run-length encoded and tagged by origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced<T> {
    /// Surviving 1s, left to right.
    pub ones: Vec<(T, u64)>,
    /// Surviving 0s, left to right.
    pub zeros: Vec<(T, u64)>,
}

impl<T: Copy> Reduced<T> {
    pub fn ones_count(&self) -> u64 {
        self.ones.iter().map(|(_, n)| n).sum()
    }

    pub fn zeros_count(&self) -> u64 {
        self.zeros.iter().map(|(_, n)| n).sum()
    }

    /// Origin of the leftmost surviving 0.
    pub fn leftmost_zero(&self) -> Option<T> {
        self.zeros.first().map(|(t, _)| *t)
    }

    /// Origin of the rightmost surviving 1.
    pub fn rightmost_one(&self) -> Option<T> {
        self.ones.last().map(|(t, _)| *t)
    }

    /// The reduced word spelled out, e.g. `"1 1 0"`.
    pub fn word(&self) -> String {
        let ones = std::iter::repeat_n("1", self.ones_count() as usize);
        let zeros = std::iter::repeat_n("0", self.zeros_count() as usize);
        ones.chain(zeros).collect::<Vec<_>>().join(" ")
    }
}

pub fn reduce<T: Copy>(runs: impl IntoIterator<Item = (Sym, u64, T)>) -> Reduced<T> {
    let mut ones: Vec<(T, u64)> = Vec::new();
    let mut zeros: Vec<(T, u64)> = Vec::new();
    for (sym, count, tag) in runs {
        if count == 0 {
            continue;
        }
        match sym {
            Sym::Zero => zeros.push((tag, count)),
            Sym::One => {
                let mut left = count;
                while left > 0 {
                    let Some(last) = zeros.last_mut() else { break };
                    let take = left.min(last.1);
                    last.1 -= take;
                    left -= take;
                    if last.1 == 0 {
                        zeros.pop();
                    }
                }
                if left > 0 {
                    // No zeros remain, so these ones survive.
                    ones.push((tag, left));
                }
            }
        }
    }
    Reduced { ones, zeros }
}
