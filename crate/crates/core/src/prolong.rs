//! Prolongations: an order-`n` quasigroup extended to order `n + 1` by
//! adjoining the element `q = n + 1`.
//!
//! All three constructions move the cells `(x, σ(x))` of the source table
//! into the new row and column and fill the vacated track with `q`:
//!
//! * classical: `σ` complete; `x∘q = σ̄(x)`, `q∘y = σ̄σ⁻¹(y)`, `q∘q = q`.
//! * Belyavskaya: `σ` complete and a chosen symbol `a = σ̄(x_a)`; the cell
//!   `(x_a, σ(x_a))` keeps `a`, its border cells become `q`, and `q∘q = a`.
//! * Deriyenko–Dudek: `σ` quasicomplete with defect `{d}` and special element
//!   `a = σ̄(x₁) = σ̄(x₂)`; the cell `(x₁, σ(x₁))` keeps `a`, the border cells of
//!   `x₁` become `q`, those of `x₂` become `a`, and `q∘q = d`.
//!
//! The identity-σ and idempotent special cases are not separate code paths.

use std::fmt;

use crate::error::{Error, Result};
use crate::mappings::{classify, MappingKind};
use crate::perm::Permutation;
use crate::square::{Cell, LatinSquare};
use crate::MAX_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Classical,
    Belyavskaya,
    DeriyenkoDudek,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Classical => "classical",
            Method::Belyavskaya => "belyavskaya",
            Method::DeriyenkoDudek => "dd",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything that determines a prolongation besides the source square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProlongationSpec {
    pub method: Method,
    pub sigma: Permutation,
    /// Belyavskaya's chosen element `a`, 1-based.
    pub a: Option<usize>,
    /// The fixed special preimage for Deriyenko–Dudek, 1-based.
    pub x1: Option<usize>,
}

impl ProlongationSpec {
    pub fn classical(sigma: Permutation) -> Self {
        ProlongationSpec { method: Method::Classical, sigma, a: None, x1: None }
    }

    pub fn belyavskaya(sigma: Permutation, a: usize) -> Self {
        ProlongationSpec { method: Method::Belyavskaya, sigma, a: Some(a), x1: None }
    }

    pub fn deriyenko_dudek(sigma: Permutation, x1: usize) -> Self {
        ProlongationSpec { method: Method::DeriyenkoDudek, sigma, a: None, x1: Some(x1) }
    }

    /// Runs the construction this spec describes.
    pub fn apply(&self, square: &LatinSquare) -> Result<Prolongation> {
        let missing = |what: &str| Error::InvalidPermutation(format!("{what} parameter missing"));
        match self.method {
            Method::Classical => prolong_classical(square, &self.sigma),
            Method::Belyavskaya => prolong_belyavskaya(square, &self.sigma, self.a.ok_or_else(|| missing("a"))?),
            Method::DeriyenkoDudek => {
                prolong_deriyenko_dudek(square, &self.sigma, self.x1.ok_or_else(|| missing("x1"))?)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prolongation {
    pub result: LatinSquare,
    pub spec: ProlongationSpec,
}

impl Prolongation {
    /// The adjoined element, `n + 1`.
    pub fn q(&self) -> usize {
        self.result.order()
    }

    /// The cells `(x, σ(x))` whose source values were moved to the border.
    pub fn moved_cells(&self) -> Vec<Cell> {
        let bound = self.result.order();
        (1..=self.spec.sigma.order())
            .map(|x| Cell::new(x, self.spec.sigma.image(x), bound).expect("within bounds"))
            .collect()
    }

    /// Comment header recording the construction, followed by the square.
    pub fn to_text(&self) -> String {
        let mut out = format!("# method: {}\n# sigma: {}\n", self.spec.method, self.spec.sigma);
        if let Some(a) = self.spec.a {
            out.push_str(&format!("# a: {a}\n"));
        }
        if let Some(x1) = self.spec.x1 {
            out.push_str(&format!("# x1: {x1}\n"));
        }
        out.push_str(&self.result.to_string());
        out
    }
}

/// Order-(n+1) table builder over 0-based symbols; `q = n`.
struct Extended {
    m: usize,
    cells: Vec<u8>,
}

impl Extended {
    /// Copies the source square and blanks the track `(x, σ(x))` to `q`.
    fn from_source(square: &LatinSquare, sigma: &Permutation) -> Self {
        let n = square.order();
        let m = n + 1;
        let mut cells = vec![n as u8; m * m];
        for x in 0..n {
            for y in 0..n {
                if y != sigma.apply(x) {
                    cells[x * m + y] = square.get(x, y) as u8;
                }
            }
        }
        Extended { m, cells }
    }

    fn set(&mut self, r: usize, c: usize, v: usize) {
        self.cells[r * self.m + c] = v as u8;
    }

    fn finish(self) -> LatinSquare {
        LatinSquare::from_raw(self.m, self.cells)
    }
}

fn check_sizes(square: &LatinSquare, sigma: &Permutation) -> Result<()> {
    if square.order() >= MAX_ORDER {
        return Err(Error::UnsupportedOrder(square.order() + 1));
    }
    if square.order() != sigma.order() {
        return Err(Error::OrderMismatch { expected: square.order(), found: sigma.order() });
    }
    Ok(())
}

fn check_symbol(symbol: usize, order: usize) -> Result<()> {
    if (1..=order).contains(&symbol) {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange { symbol, order })
    }
}

/// The classical construction for a complete mapping σ.
pub fn prolong_classical(square: &LatinSquare, sigma: &Permutation) -> Result<Prolongation> {
    check_sizes(square, sigma)?;
    let class = classify(square, sigma)?;
    if !class.is_complete() {
        return Err(Error::NotComplete { defect: class.defect });
    }
    let bar = &class.conjugate;
    let inv = sigma.inverse();
    let n = square.order();
    let mut ext = Extended::from_source(square, sigma);
    for x in 0..n {
        ext.set(x, n, bar.apply(x));
    }
    for y in 0..n {
        ext.set(n, y, bar.apply(inv.apply(y)));
    }
    ext.set(n, n, n);
    Ok(Prolongation {
        result: ext.finish(),
        spec: ProlongationSpec::classical(sigma.clone()),
    })
}

/// The classical construction with σ the identity; requires the diagonal
/// `x·x` to be a bijection. For an idempotent square the result is a loop
/// with identity `q`.
pub fn prolong_classical_idempotent(square: &LatinSquare) -> Result<Prolongation> {
    let id = Permutation::identity(square.order());
    match prolong_classical(square, &id) {
        Err(Error::NotComplete { .. }) => Err(Error::DiagonalNotBijective),
        other => other,
    }
}

/// Belyavskaya's construction for a complete mapping σ and a chosen `a`.
pub fn prolong_belyavskaya(square: &LatinSquare, sigma: &Permutation, a: usize) -> Result<Prolongation> {
    check_sizes(square, sigma)?;
    let n = square.order();
    check_symbol(a, n)?;
    let class = classify(square, sigma)?;
    if !class.is_complete() {
        return Err(Error::NotComplete { defect: class.defect });
    }
    let bar = &class.conjugate;
    let inv = sigma.inverse();
    let a0 = a - 1;
    let xa = (0..n).find(|&x| bar.apply(x) == a0).expect("complete mapping hits every symbol");

    let mut ext = Extended::from_source(square, sigma);
    ext.set(xa, sigma.apply(xa), a0);
    for x in 0..n {
        ext.set(x, n, if x == xa { n } else { bar.apply(x) });
    }
    for y in 0..n {
        let v = if y == sigma.apply(xa) { n } else { bar.apply(inv.apply(y)) };
        ext.set(n, y, v);
    }
    ext.set(n, n, a0);
    Ok(Prolongation {
        result: ext.finish(),
        spec: ProlongationSpec::belyavskaya(sigma.clone(), a),
    })
}

/// The Deriyenko–Dudek construction for a quasicomplete mapping σ, with `x1`
/// one of the two preimages of the special element.
pub fn prolong_deriyenko_dudek(square: &LatinSquare, sigma: &Permutation, x1: usize) -> Result<Prolongation> {
    check_sizes(square, sigma)?;
    let n = square.order();
    let class = classify(square, sigma)?;
    let MappingKind::Quasicomplete { defect, special, preimages } = class.kind else {
        return Err(Error::NotQuasicomplete { defect: class.defect });
    };
    let x2 = if x1 == preimages.0 {
        preimages.1
    } else if x1 == preimages.1 {
        preimages.0
    } else {
        return Err(Error::NotSpecialPreimage { x1, preimages });
    };
    let (x1, x2, a, d) = (x1 - 1, x2 - 1, special - 1, defect - 1);
    let bar = &class.conjugate;
    let inv = sigma.inverse();
    let (s1, s2) = (sigma.apply(x1), sigma.apply(x2));

    let mut ext = Extended::from_source(square, sigma);
    ext.set(x1, s1, a);
    for x in 0..n {
        let v = match x {
            _ if x == x1 => n,
            _ if x == x2 => a,
            _ => bar.apply(x),
        };
        ext.set(x, n, v);
    }
    for y in 0..n {
        let v = match y {
            _ if y == s1 => n,
            _ if y == s2 => a,
            _ => bar.apply(inv.apply(y)),
        };
        ext.set(n, y, v);
    }
    ext.set(n, n, d);
    Ok(Prolongation {
        result: ext.finish(),
        spec: ProlongationSpec::deriyenko_dudek(sigma.clone(), x1 + 1),
    })
}
