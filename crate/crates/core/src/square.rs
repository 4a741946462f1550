//! Latin squares as quasigroup multiplication tables.
//!
//! Symbols are `1..=n` at the API boundary and stored 0-based. `cell(i, j)`
//! is the product `i·j`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, Violation};
use crate::perm::Permutation;
use crate::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<u8>,
}

/// A cell address, 1-based. In a prolongation of an order-`n` square the
/// adjoined element occupies row and column `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    /// Returns `None` unless both coordinates lie in `1..=bound`.
    pub fn new(row: usize, col: usize, bound: usize) -> Option<Self> {
        ((1..=bound).contains(&row) && (1..=bound).contains(&col)).then_some(Cell { row, col })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// Addition modulo `n`, residue `k` written as symbol `k + 1`.
    Cyclic(usize),
    /// The Klein four-group; symbol 1 is the identity.
    Klein,
}

/// Checks that `rows` is an n×n array in which every row and column is a
/// permutation of `1..=n`. Reports the first violation in row-major order.
pub fn validate(rows: &[Vec<usize>]) -> std::result::Result<(), Violation> {
    let n = rows.len();
    let mut col_seen = vec![vec![false; n]; n];
    for (r, row) in rows.iter().enumerate() {
        let mut row_seen = vec![false; n];
        for (c, col_seen) in col_seen.iter_mut().enumerate() {
            let Some(&symbol) = row.get(c) else {
                return Err(Violation::OutOfRange { row: r + 1, col: c + 1, symbol: 0 });
            };
            let (row1, col1) = (r + 1, c + 1);
            if symbol == 0 || symbol > n {
                return Err(Violation::OutOfRange { row: row1, col: col1, symbol });
            }
            if std::mem::replace(&mut row_seen[symbol - 1], true) {
                return Err(Violation::RowDuplicate { row: row1, col: col1, symbol });
            }
            if std::mem::replace(&mut col_seen[symbol - 1], true) {
                return Err(Violation::ColumnDuplicate { row: row1, col: col1, symbol });
            }
        }
        if row.len() > n {
            return Err(Violation::OutOfRange { row: r + 1, col: n + 1, symbol: row[n] });
        }
    }
    Ok(())
}

impl LatinSquare {
    /// Builds a square from 1-based rows, validating the Latin property.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        validate(&rows).map_err(Error::NotLatin)?;
        let cells = rows.iter().flatten().map(|&s| (s - 1) as u8).collect();
        Ok(LatinSquare { n, cells })
    }

    /// Caller guarantees `cells` is a row-major 0-based Latin square of order `n`.
    pub(crate) fn from_raw(n: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        let sq = LatinSquare { n, cells };
        debug_assert!(validate(&sq.rows()).is_ok(), "not latin:\n{sq}");
        sq
    }

    pub fn group_table(kind: GroupKind) -> Result<Self> {
        match kind {
            GroupKind::Cyclic(n) => {
                if n == 0 || n > MAX_ORDER {
                    return Err(Error::UnsupportedOrder(n));
                }
                let cells = (0..n)
                    .flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u8))
                    .collect();
                Ok(LatinSquare::from_raw(n, cells))
            }
            GroupKind::Klein => {
                let cells = (0..4u8).flat_map(|i| (0..4u8).map(move |j| i ^ j)).collect();
                Ok(LatinSquare::from_raw(4, cells))
            }
        }
    }

    /// Addition table of ℤ_n on symbols `1..=n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::group_table(GroupKind::Cyclic(n))
    }

    pub fn klein() -> Self {
        Self::group_table(GroupKind::Klein).expect("klein table")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The product `row · col` for 1-based `row`, `col`.
    pub fn cell(&self, row: usize, col: usize) -> usize {
        assert!((1..=self.n).contains(&row) && (1..=self.n).contains(&col));
        self.cells[(row - 1) * self.n + col - 1] as usize + 1
    }

    pub fn at(&self, cell: Cell) -> usize {
        self.cell(cell.row, cell.col)
    }

    /// 0-based access.
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.cells[r * self.n + c] as usize
    }

    /// 0-based row slice.
    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.cells[r * self.n..(r + 1) * self.n]
    }

    /// 1-based rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|r| self.row(r).iter().map(|&s| s as usize + 1).collect())
            .collect()
    }

    /// 1-based diagonal `x·x`.
    pub fn diagonal(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.get(i, i) + 1).collect()
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == i)
    }

    /// Returns the 1-based two-sided identity element, if the square is a loop.
    pub fn identity_element(&self) -> Option<usize> {
        (0..self.n)
            .find(|&e| (0..self.n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
            .map(|e| e + 1)
    }

    /// `col_of[r][s]` = the column holding 0-based symbol `s` in row `r`.
    pub(crate) fn column_index(&self) -> Vec<u8> {
        let n = self.n;
        let mut idx = vec![0u8; n * n];
        for r in 0..n {
            for c in 0..n {
                idx[r * n + self.get(r, c)] = c as u8;
            }
        }
        idx
    }

    /// The isotope `M` with `M(α(x), β(y)) = γ(L(x, y))`.
    pub fn apply_isotopy(
        &self,
        alpha: &Permutation,
        beta: &Permutation,
        gamma: &Permutation,
    ) -> Result<Self> {
        for p in [alpha, beta, gamma] {
            if p.order() != self.n {
                return Err(Error::OrderMismatch {
                    expected: self.n,
                    found: p.order(),
                });
            }
        }
        let n = self.n;
        let mut cells = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[alpha.apply(x) * n + beta.apply(y)] = gamma.apply(self.get(x, y)) as u8;
            }
        }
        Ok(LatinSquare::from_raw(n, cells))
    }

    /// The table of the opposite operation `x∘y = y·x`.
    pub fn transpose(&self) -> Self {
        let n = self.n;
        let cells = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).map(|(r, c)| self.get(c, r) as u8).collect();
        LatinSquare::from_raw(n, cells)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for r in 0..self.n {
            for (c, &s) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", s as usize + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parses the text format: optional `#` comment lines, an optional
/// `zero-based` directive, a line holding `n`, then `n` rows of `n`
/// whitespace-separated integers.
pub fn parse_square(text: &str) -> Result<LatinSquare> {
    let mut zero_based = false;
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(n) = order else {
            if line.eq_ignore_ascii_case("zero-based") {
                zero_based = true;
                continue;
            }
            let n = line.parse::<usize>().map_err(|_| Error::MalformedHeader {
                line: line_no,
                reason: format!("expected the order, found {line:?}"),
            })?;
            if n == 0 || n > MAX_ORDER {
                return Err(Error::UnsupportedOrder(n));
            }
            order = Some(n);
            continue;
        };
        if rows.len() == n {
            return Err(Error::RowCount {
                expected: n,
                found: n + 1,
            });
        }
        let row_no = rows.len() + 1;
        let mut row = Vec::with_capacity(n);
        for (c, tok) in line.split_whitespace().enumerate() {
            let value: i64 = tok.parse().map_err(|_| Error::NotAnInteger {
                line: line_no,
                token: tok.to_string(),
            })?;
            let shifted = if zero_based { value + 1 } else { value };
            if shifted < 1 || shifted > n as i64 {
                return Err(Error::SymbolOutOfRange {
                    row: row_no,
                    col: c + 1,
                    symbol: value,
                    order: n,
                });
            }
            row.push(shifted as usize);
        }
        if row.len() != n {
            return Err(Error::RowLength {
                row: row_no,
                expected: n,
                found: row.len(),
            });
        }
        rows.push(row);
    }

    let Some(n) = order else {
        return Err(Error::MalformedHeader {
            line: text.lines().count().max(1),
            reason: "missing order line".into(),
        });
    };
    if rows.len() != n {
        return Err(Error::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    LatinSquare::new(rows)
}

impl FromStr for LatinSquare {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_square(s)
    }
}
