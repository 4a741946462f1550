//! Conjugated mappings, defect, and search for complete and quasicomplete
//! mappings and maximum partial transversals.
//!
//! For a permutation σ of a quasigroup `Q(·)` the conjugated map is
//! `σ̄(x) = x·σ(x)` and the defect is `Q \ σ̄(Q)`. σ is complete when the
//! defect is empty and quasicomplete when it has exactly one element.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::square::LatinSquare;

/// `σ̄(x) = x·σ(x)`; not necessarily a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugateMap {
    values: Vec<u8>,
}

impl ConjugateMap {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `σ̄(x)` for 1-based `x`.
    pub fn value(&self, x: usize) -> usize {
        self.values[x - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn apply(&self, i: usize) -> usize {
        self.values[i] as usize
    }

    /// 1-based values.
    pub fn values(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize + 1).collect()
    }

    /// Number of preimages of each symbol, indexed 0-based.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.values.len()];
        for &v in &self.values {
            m[v as usize] += 1;
        }
        m
    }

    pub fn is_bijection(&self) -> bool {
        self.multiplicities().iter().all(|&m| m == 1)
    }

    /// The conjugate as a permutation, when it is one.
    pub fn to_permutation(&self) -> Option<Permutation> {
        self.is_bijection()
            .then(|| Permutation::from_raw(self.values.clone()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MappingKind {
    Complete,
    /// `defect` is the single missed symbol; `special` has the two
    /// preimages `preimages.0 < preimages.1`. All symbols 1-based.
    Quasicomplete {
        defect: usize,
        special: usize,
        preimages: (usize, usize),
    },
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingClassification {
    pub kind: MappingKind,
    pub conjugate: ConjugateMap,
    /// `def(σ)`, 1-based, ascending.
    pub defect: Vec<usize>,
}

impl MappingClassification {
    pub fn is_complete(&self) -> bool {
        self.kind == MappingKind::Complete
    }

    pub fn is_quasicomplete(&self) -> bool {
        matches!(self.kind, MappingKind::Quasicomplete { .. })
    }

    pub fn special(&self) -> Option<usize> {
        match self.kind {
            MappingKind::Quasicomplete { special, .. } => Some(special),
            _ => None,
        }
    }

    pub fn special_preimages(&self) -> Option<(usize, usize)> {
        match self.kind {
            MappingKind::Quasicomplete { preimages, .. } => Some(preimages),
            _ => None,
        }
    }
}

fn check_order(square: &LatinSquare, sigma: &Permutation) -> Result<()> {
    if square.order() != sigma.order() {
        return Err(Error::OrderMismatch {
            expected: square.order(),
            found: sigma.order(),
        });
    }
    Ok(())
}

pub fn conjugate(square: &LatinSquare, sigma: &Permutation) -> Result<ConjugateMap> {
    check_order(square, sigma)?;
    let values = (0..square.order())
        .map(|x| square.get(x, sigma.apply(x)) as u8)
        .collect();
    Ok(ConjugateMap { values })
}

pub fn classify(square: &LatinSquare, sigma: &Permutation) -> Result<MappingClassification> {
    let conjugate = conjugate(square, sigma)?;
    let mult = conjugate.multiplicities();
    let defect: Vec<usize> = (0..mult.len()).filter(|&s| mult[s] == 0).map(|s| s + 1).collect();
    let kind = match defect.len() {
        0 => MappingKind::Complete,
        1 => {
            // A single missed symbol forces exactly one symbol hit twice.
            let doubled: Vec<usize> = (0..mult.len()).filter(|&s| mult[s] == 2).collect();
            assert!(
                doubled.len() == 1 && mult.iter().all(|&m| m <= 2),
                "pigeonhole violated: {mult:?}"
            );
            let special = doubled[0];
            let mut pre = (0..mult.len()).filter(|&x| conjugate.apply(x) == special);
            let x1 = pre.next().expect("first preimage");
            let x2 = pre.next().expect("second preimage");
            MappingKind::Quasicomplete {
                defect: defect[0],
                special: special + 1,
                preimages: (x1 + 1, x2 + 1),
            }
        }
        _ => MappingKind::Neither,
    };
    Ok(MappingClassification {
        kind,
        conjugate,
        defect,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Target {
    Complete,
    Quasicomplete,
}

struct MappingSearch<'a> {
    square: &'a LatinSquare,
    target: Target,
    limit: usize,
    assignment: Vec<u8>,
    found: Vec<Permutation>,
}

impl MappingSearch<'_> {
    fn run(&mut self, row: usize, cols: u128, syms: u128, repeated: bool) {
        let n = self.square.order();
        if row == n {
            if self.target == Target::Complete || repeated {
                self.found.push(Permutation::from_raw(self.assignment.clone()));
            }
            return;
        }
        let cells = self.square.row(row);
        for (col, &symbol) in cells.iter().enumerate() {
            if self.found.len() >= self.limit {
                return;
            }
            if cols & (1 << col) != 0 {
                continue;
            }
            let bit = 1u128 << symbol;
            let again = syms & bit != 0;
            if again && (self.target == Target::Complete || repeated) {
                continue;
            }
            self.assignment[row] = col as u8;
            self.run(row + 1, cols | (1 << col), syms | bit, repeated || again);
        }
    }
}

fn find_mappings(square: &LatinSquare, target: Target, limit: Option<usize>) -> Vec<Permutation> {
    let mut search = MappingSearch {
        square,
        target,
        limit: limit.unwrap_or(usize::MAX),
        assignment: vec![0; square.order()],
        found: Vec::new(),
    };
    if search.limit > 0 {
        search.run(0, 0, 0, false);
    }
    search.found
}

/// Complete mappings of `square` in lexicographic order of image arrays,
/// truncated at `limit`. Exhaustive when `limit` is `None`.
pub fn find_complete_mappings(square: &LatinSquare, limit: Option<usize>) -> Vec<Permutation> {
    find_mappings(square, Target::Complete, limit)
}

/// Quasicomplete mappings, same ordering and truncation as
/// [`find_complete_mappings`].
pub fn find_quasicomplete_mappings(square: &LatinSquare, limit: Option<usize>) -> Vec<Permutation> {
    find_mappings(square, Target::Quasicomplete, limit)
}

/// One entry of a partial transversal, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransversalCell {
    pub row: usize,
    pub col: usize,
    pub symbol: usize,
}

/// Cells in distinct rows and columns carrying distinct symbols, sorted by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartialTransversal {
    pub cells: Vec<TransversalCell>,
}

impl PartialTransversal {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Checks distinctness and that every symbol matches `square`.
    pub fn check(&self, square: &LatinSquare) -> Result<()> {
        let n = square.order();
        let (mut rows, mut cols, mut syms) = (vec![false; n], vec![false; n], vec![false; n]);
        for c in &self.cells {
            let in_range = |v: usize| (1..=n).contains(&v);
            if !(in_range(c.row) && in_range(c.col) && in_range(c.symbol)) {
                return Err(Error::InvalidTransversal(format!("{c:?} out of range")));
            }
            if square.cell(c.row, c.col) != c.symbol {
                return Err(Error::InvalidTransversal(format!(
                    "cell ({}, {}) holds {}, not {}",
                    c.row,
                    c.col,
                    square.cell(c.row, c.col),
                    c.symbol
                )));
            }
            for (seen, v, what) in [(&mut rows, c.row, "row"), (&mut cols, c.col, "column"), (&mut syms, c.symbol, "symbol")] {
                if std::mem::replace(&mut seen[v - 1], true) {
                    return Err(Error::InvalidTransversal(format!("{what} {v} used twice")));
                }
            }
        }
        Ok(())
    }
}

struct TransversalSearch<'a> {
    square: &'a LatinSquare,
    current: Vec<(u8, u8)>,
    best: Vec<(u8, u8)>,
}

impl TransversalSearch<'_> {
    fn run(&mut self, row: usize, cols: u128, syms: u128) {
        let n = self.square.order();
        if self.best.len() == n {
            return;
        }
        if self.current.len() + (n - row) <= self.best.len() {
            return;
        }
        if row == n {
            self.best.clone_from(&self.current);
            return;
        }
        let cells = self.square.row(row);
        for (col, &symbol) in cells.iter().enumerate() {
            let bit = 1u128 << symbol;
            if cols & (1 << col) != 0 || syms & bit != 0 {
                continue;
            }
            self.current.push((row as u8, col as u8));
            self.run(row + 1, cols | (1 << col), syms | bit);
            self.current.pop();
            if self.best.len() == n {
                return;
            }
        }
        self.run(row + 1, cols, syms);
    }
}

/// A partial transversal of maximum length. Among those, the returned one is
/// lexicographically least as a sequence of `(row, col)` pairs.
pub fn max_partial_transversal(square: &LatinSquare) -> PartialTransversal {
    let mut search = TransversalSearch {
        square,
        current: Vec::with_capacity(square.order()),
        best: Vec::new(),
    };
    search.run(0, 0, 0);
    PartialTransversal {
        cells: search
            .best
            .iter()
            .map(|&(r, c)| TransversalCell {
                row: r as usize + 1,
                col: c as usize + 1,
                symbol: square.get(r as usize, c as usize) + 1,
            })
            .collect(),
    }
}

/// Reads a transversal of length `n` or `n − 1` as a mapping `row ↦ col`.
/// A length-`n − 1` transversal is extended by sending the missing row to
/// the missing column. The result is complete for a full transversal; for a
/// shorter one it is quasicomplete unless the added cell happens to carry the
/// missing symbol, in which case it is complete.
pub fn transversal_to_mapping(square: &LatinSquare, t: &PartialTransversal) -> Result<Permutation> {
    let n = square.order();
    if t.len() + 1 < n {
        return Err(Error::TransversalTooShort {
            length: t.len(),
            order: n,
        });
    }
    if t.len() > n {
        return Err(Error::InvalidTransversal(format!("length {} exceeds order {n}", t.len())));
    }
    t.check(square)?;
    let mut images: Vec<Option<usize>> = vec![None; n];
    let mut col_used = vec![false; n];
    for c in &t.cells {
        images[c.row - 1] = Some(c.col - 1);
        col_used[c.col - 1] = true;
    }
    let missing_col = col_used.iter().position(|&u| !u);
    let images: Vec<usize> = images
        .into_iter()
        .map(|img| img.or(missing_col).expect("one missing column per missing row"))
        .collect();
    Permutation::from_zero_based(&images)
}
