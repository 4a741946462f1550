//! Exhaustive small-order experiments and the end-to-end prolongation
//! pipeline.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mappings::{classify, max_partial_transversal, transversal_to_mapping, MappingKind};
use crate::prolong::{prolong_classical, prolong_deriyenko_dudek, Prolongation};
use crate::square::LatinSquare;

pub const MAX_SCAN_ORDER: usize = 6;

/// Number of reduced Latin squares of order 1..=6.
pub const REDUCED_SQUARE_COUNTS: [u64; MAX_SCAN_ORDER] = [1, 1, 1, 4, 56, 9408];

/// Iterator over reduced Latin squares (first row and column `1..=n`) in
/// lexicographic row-major order.
pub struct ReducedSquares {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    positions: Vec<(usize, usize)>,
    trial: Vec<u8>,
    depth: usize,
    floor: usize,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Yielded,
    Done,
}

impl ReducedSquares {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_prefix(n, &[])
    }

    /// Restricts the enumeration to squares whose first free cells (row-major,
    /// skipping the fixed first row and column) hold `prefix`, 1-based.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Result<Self> {
        if !(1..=MAX_SCAN_ORDER).contains(&n) {
            return Err(Error::ScanOrderOutOfRange { order: n });
        }
        let mut cells = vec![0u8; n * n];
        let mut row_used = vec![0u32; n];
        let mut col_used = vec![0u32; n];
        for i in 0..n {
            cells[i] = i as u8;
            cells[i * n] = i as u8;
            row_used[i] |= 1 << i;
            col_used[i] |= 1 << i;
        }
        row_used[0] = (1 << n) - 1;
        col_used[0] = (1 << n) - 1;
        let positions: Vec<(usize, usize)> = (1..n).flat_map(|r| (1..n).map(move |c| (r, c))).collect();
        let mut it = ReducedSquares {
            n,
            cells,
            row_used,
            col_used,
            trial: vec![0; positions.len()],
            positions,
            depth: 0,
            floor: prefix.len(),
            state: IterState::Fresh,
        };
        if prefix.len() > it.positions.len() {
            it.state = IterState::Done;
            return Ok(it);
        }
        for &s in prefix {
            let (r, c) = it.positions[it.depth];
            if s == 0 || s > n || !it.free(r, c, s - 1) {
                it.state = IterState::Done;
                return Ok(it);
            }
            it.place(r, c, s - 1);
            it.depth += 1;
        }
        Ok(it)
    }

    fn free(&self, r: usize, c: usize, s: usize) -> bool {
        (self.row_used[r] | self.col_used[c]) & (1 << s) == 0
    }

    fn place(&mut self, r: usize, c: usize, s: usize) {
        self.cells[r * self.n + c] = s as u8;
        self.row_used[r] |= 1 << s;
        self.col_used[c] |= 1 << s;
    }

    fn undo(&mut self, k: usize) {
        let (r, c) = self.positions[k];
        let s = self.cells[r * self.n + c];
        self.row_used[r] &= !(1 << s);
        self.col_used[c] &= !(1 << s);
    }

    fn advance(&mut self) -> bool {
        let len = self.positions.len();
        match self.state {
            IterState::Done => return false,
            IterState::Fresh => {
                if self.depth < len {
                    self.trial[self.depth] = 0;
                }
            }
            IterState::Yielded => {
                if self.depth == self.floor {
                    return false;
                }
                self.depth -= 1;
                self.undo(self.depth);
            }
        }
        loop {
            if self.depth == len {
                return true;
            }
            let k = self.depth;
            let (r, c) = self.positions[k];
            let mut placed = false;
            while (self.trial[k] as usize) < self.n {
                let s = self.trial[k] as usize;
                self.trial[k] += 1;
                if self.free(r, c, s) {
                    self.place(r, c, s);
                    self.depth += 1;
                    if self.depth < len {
                        self.trial[self.depth] = 0;
                    }
                    placed = true;
                    break;
                }
            }
            if !placed {
                if k == self.floor {
                    return false;
                }
                self.depth -= 1;
                self.undo(self.depth);
            }
        }
    }
}

impl Iterator for ReducedSquares {
    type Item = LatinSquare;

    fn next(&mut self) -> Option<LatinSquare> {
        if self.advance() {
            self.state = IterState::Yielded;
            Some(LatinSquare::from_raw(self.n, self.cells.clone()))
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

/// Every reduced Latin square of order `n`, each exactly once.
pub fn enumerate_reduced_squares(n: usize) -> Result<ReducedSquares> {
    ReducedSquares::new(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub order: usize,
    pub squares_scanned: u64,
    /// Shortest maximum partial transversal over all scanned squares.
    pub min_max_transversal: usize,
    /// Squares whose maximum partial transversal is shorter than `n − 1`.
    pub witnesses: Vec<(LatinSquare, usize)>,
}

impl ScanReport {
    fn empty(order: usize) -> Self {
        ScanReport { order, squares_scanned: 0, min_max_transversal: usize::MAX, witnesses: Vec::new() }
    }

    fn record(mut self, square: LatinSquare) -> Self {
        let len = max_partial_transversal(&square).len();
        self.squares_scanned += 1;
        self.min_max_transversal = self.min_max_transversal.min(len);
        if len + 1 < self.order {
            self.witnesses.push((square, len));
        }
        self
    }

    /// Associative merge; `self` covers squares preceding `other`.
    fn merge(mut self, other: ScanReport) -> Self {
        self.squares_scanned += other.squares_scanned;
        self.min_max_transversal = self.min_max_transversal.min(other.min_max_transversal);
        self.witnesses.extend(other.witnesses);
        self
    }
}

/// Prefixes over the first two free cells, in lexicographic order.
fn work_prefixes(n: usize) -> Vec<Vec<usize>> {
    let free = (n - 1) * (n - 1);
    match free.min(2) {
        0 => vec![vec![]],
        1 => (1..=n).map(|s| vec![s]).collect(),
        _ => (1..=n).flat_map(|a| (1..=n).map(move |b| vec![a, b])).collect(),
    }
}

/// Computes the maximum partial transversal of every reduced square of
/// order `n`. Reduced squares suffice because every square is isotopic to a
/// reduced one and isotopy preserves maximum transversal length.
///
/// `threads = None` uses the global rayon pool. The report does not depend
/// on the thread count.
pub fn brualdi_scan(n: usize, threads: Option<usize>) -> Result<ScanReport> {
    if !(1..=MAX_SCAN_ORDER).contains(&n) {
        return Err(Error::ScanOrderOutOfRange { order: n });
    }
    let run = || -> Result<ScanReport> {
        let parts = work_prefixes(n)
            .par_iter()
            .map(|prefix| {
                let squares = ReducedSquares::with_prefix(n, prefix)?;
                Ok(squares.fold(ScanReport::empty(n), ScanReport::record))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(parts.into_iter().fold(ScanReport::empty(n), ScanReport::merge))
    };
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

/// Prolongs any square with a partial transversal of length at least
/// `n − 1`: the classical construction when a full transversal exists,
/// otherwise Deriyenko–Dudek with the smaller special preimage as `x1`.
pub fn prolong_any(square: &LatinSquare) -> Result<Prolongation> {
    let n = square.order();
    let t = max_partial_transversal(square);
    if t.len() + 1 < n {
        return Err(Error::BrualdiCounterexample { length: t.len(), order: n });
    }
    let sigma = transversal_to_mapping(square, &t)?;
    match classify(square, &sigma)?.kind {
        MappingKind::Complete => prolong_classical(square, &sigma),
        MappingKind::Quasicomplete { preimages, .. } => prolong_deriyenko_dudek(square, &sigma, preimages.0),
        MappingKind::Neither => unreachable!("a length n-1 transversal extends to a (quasi)complete mapping"),
    }
}
