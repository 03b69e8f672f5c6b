//! Marginally large G₂ tableaux T(∞).
//!
//! A marginally large tableau is determined by its counts: row 1 holds
//! b³₂+2 ones followed by b¹_j letters j for j ≻ 1, row 2 holds one 2 followed
//! by b³₂ threes. The operators still run the box-level procedure on an
//! explicit two-row [`Grid`]: far-eastern reading, signature, change one box,
//! then insert or remove a column when largeness requires it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{pairing, Index, Weight};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::signature::{reduce, Reduced, Sym};

#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct MLTableau {
    /// Row-1 counts of the letters 2, 3, 0, 3̄, 2̄, 1̄.
    pub b2: u64,
    pub b3: u64,
    pub b0: u64,
    pub b3bar: u64,
    pub b2bar: u64,
    pub b1bar: u64,
    /// Row-2 count of 3s.
    pub b3_row2: u64,
}

/// Position of a box: (column, row), both zero-based.
pub type BoxPos = (usize, usize);

/// A two-row tableau laid out box by box, left-justified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub rows: [Vec<Letter>; 2],
}

impl Grid {
    pub fn column_height(&self, c: usize) -> usize {
        if c < self.rows[1].len() {
            2
        } else {
            1
        }
    }

    /// Far-eastern reading: columns right to left, each top to bottom.
    pub fn reading(&self) -> Vec<(Letter, BoxPos)> {
        let mut out = Vec::with_capacity(self.rows[0].len() + self.rows[1].len());
        for c in (0..self.rows[0].len()).rev() {
            out.push((self.rows[0][c], (c, 0)));
            if let Some(&l) = self.rows[1].get(c) {
                out.push((l, (c, 1)));
            }
        }
        out
    }

    pub fn signature(&self, i: Index) -> Reduced<BoxPos> {
        reduce(
            self.reading()
                .into_iter()
                .flat_map(|(l, pos)| [(Sym::One, l.epsilon(i), pos), (Sym::Zero, l.phi(i), pos)]),
        )
    }

    fn count(&self, row: usize, l: Letter) -> usize {
        self.rows[row].iter().filter(|&&x| x == l).count()
    }

    /// Two non-empty rows, more 1s in row 1 than boxes in row 2, and a 2 in row 2.
    pub fn is_large(&self) -> bool {
        !self.rows[0].is_empty()
            && !self.rows[1].is_empty()
            && self.count(0, Letter::One) > self.rows[1].len()
            && self.count(1, Letter::Two) >= 1
    }

    pub fn is_marginally_large(&self) -> bool {
        self.is_large()
            && self.count(0, Letter::One) == self.rows[1].len() + 1
            && self.count(1, Letter::Two) == 1
    }

    /// Inserts a column of height `h` (k-box in row k) at column `c`.
    fn insert_column(&mut self, c: usize, h: usize) {
        self.rows[0].insert(c, Letter::One);
        if h == 2 {
            self.rows[1].insert(c, Letter::Two);
        }
    }

    fn remove_column(&mut self, c: usize) {
        if self.column_height(c) == 2 {
            self.rows[1].remove(c);
        }
        self.rows[0].remove(c);
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            for l in row {
                write!(f, "[{l}]")?;
            }
        }
        Ok(())
    }
}

impl MLTableau {
    pub fn highest() -> Self {
        Self::default()
    }

    /// Row-1 count of `l` for l ≻ 1.
    pub fn row1_count(&self, l: Letter) -> u64 {
        match l {
            Letter::One => self.b3_row2 + 2,
            Letter::Two => self.b2,
            Letter::Three => self.b3,
            Letter::Zero => self.b0,
            Letter::ThreeBar => self.b3bar,
            Letter::TwoBar => self.b2bar,
            Letter::OneBar => self.b1bar,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.b0 > 1 {
            return Err(Error::MalformedTableau(format!(
                "{} zeros in row 1",
                self.b0
            )));
        }
        Ok(())
    }

    pub fn to_grid(&self) -> Grid {
        let row1 = Letter::ALL
            .iter()
            .flat_map(|&l| std::iter::repeat_n(l, self.row1_count(l) as usize))
            .collect();
        let mut row2 = vec![Letter::Two];
        row2.extend(std::iter::repeat_n(Letter::Three, self.b3_row2 as usize));
        Grid { rows: [row1, row2] }
    }

    /// Reads counts off a grid, checking that it is a marginally large tableau
    /// of the normal form.
    pub fn from_grid(g: &Grid) -> Result<Self> {
        let bad = |s: &str| Err(Error::MalformedTableau(format!("{s}: {g}")));
        if !g.is_marginally_large() {
            return bad("not marginally large");
        }
        if g.rows[0].windows(2).any(|w| w[0] > w[1]) {
            return bad("row 1 is not weakly increasing");
        }
        if g.rows[1][0] != Letter::Two || g.rows[1][1..].iter().any(|&l| l != Letter::Three) {
            return bad("row 2 must be one 2 followed by 3s");
        }
        let t = MLTableau {
            b2: g.count(0, Letter::Two) as u64,
            b3: g.count(0, Letter::Three) as u64,
            b0: g.count(0, Letter::Zero) as u64,
            b3bar: g.count(0, Letter::ThreeBar) as u64,
            b2bar: g.count(0, Letter::TwoBar) as u64,
            b1bar: g.count(0, Letter::OneBar) as u64,
            b3_row2: (g.rows[1].len() - 1) as u64,
        };
        t.validate()?;
        Ok(t)
    }

    /// Parses the two-row text form, e.g. `"[1][1][2]\n[2]"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut rows: [Vec<Letter>; 2] = Default::default();
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() != 2 {
            return Err(Error::MalformedTableau(format!(
                "expected 2 rows, got {}",
                lines.len()
            )));
        }
        for (row, line) in rows.iter_mut().zip(&lines) {
            let inner = line
                .strip_prefix('[')
                .and_then(|l| l.strip_suffix(']'))
                .ok_or_else(|| Error::MalformedTableau(format!("row {line:?} is not bracketed")))?;
            for cell in inner.split("][") {
                row.push(cell.parse()?);
            }
        }
        Self::from_grid(&Grid { rows })
    }

    pub fn reading(&self) -> Vec<Letter> {
        self.to_grid()
            .reading()
            .into_iter()
            .map(|(l, _)| l)
            .collect()
    }

    pub fn signature_t(&self, i: Index) -> Reduced<BoxPos> {
        self.to_grid().signature(i)
    }

    pub fn f_t(&self, i: Index) -> MLTableau {
        let mut g = self.to_grid();
        let (c, row) = g
            .signature(i)
            .leftmost_zero()
            .expect("the row-1 block of 1s always leaves a 0 in the signature");
        g.rows[row][c] = g.rows[row][c].f(i).expect("a box carrying a 0 admits f");
        if !g.is_large() {
            g.insert_column(c, i.as_u8() as usize);
        }
        Self::from_grid(&g).expect("f preserves marginal largeness")
    }

    pub fn e_t(&self, i: Index) -> Option<MLTableau> {
        let mut g = self.to_grid();
        let (c, row) = g.signature(i).rightmost_one()?;
        g.rows[row][c] = g.rows[row][c].e(i).expect("a box carrying a 1 admits e");
        if !g.is_marginally_large() {
            assert!(g.is_large(), "e never breaks largeness");
            debug_assert_eq!(g.column_height(c), i.as_u8() as usize);
            g.remove_column(c);
        }
        Some(Self::from_grid(&g).expect("e preserves marginal largeness"))
    }

    /// Weight in root coordinates (a, b) with wt = aα₁ + bα₂.
    pub fn wt_roots(&self) -> (i64, i64) {
        let [b2, b3, b0, b3b, b2b, b1b, b32] = [
            self.b2,
            self.b3,
            self.b0,
            self.b3bar,
            self.b2bar,
            self.b1bar,
            self.b3_row2,
        ]
        .map(|x| x as i64);
        (
            -b2 - b3 - 2 * b0 - 3 * b3b - 3 * b2b - 4 * b1b,
            -b3 - b0 - b3b - 2 * b2b - 2 * b1b - b32,
        )
    }

    pub fn wt_t(&self) -> Weight {
        let (a, b) = self.wt_roots();
        Weight::from_roots(a, b)
    }

    /// The number of 1s in the i-signature.
    pub fn eps_t(&self, i: Index) -> i64 {
        self.signature_t(i).ones_count() as i64
    }

    pub fn phi_t(&self, i: Index) -> i64 {
        self.eps_t(i) + pairing(i, self.wt_t())
    }
}

impl fmt::Display for MLTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_grid().fmt(f)
    }
}

impl Crystal for MLTableau {
    fn f(&self, i: Index) -> Option<Self> {
        Some(self.f_t(i))
    }
    fn e(&self, i: Index) -> Option<Self> {
        self.e_t(i)
    }
    fn weight(&self) -> Weight {
        self.wt_t()
    }
    fn epsilon(&self, i: Index) -> i64 {
        self.eps_t(i)
    }
    fn phi(&self, i: Index) -> i64 {
        self.phi_t(i)
    }
    fn label(&self) -> String {
        self.to_string()
    }
}
