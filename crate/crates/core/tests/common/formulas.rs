//! Direct transcriptions of the case-by-case product rules of each
//! prolongation, evaluated cell by cell. Symbols are 1-based and `q = n + 1`.

use quasiprolong::LatinSquare;

pub type Table = Vec<Vec<usize>>;

fn build(n: usize, f: impl Fn(usize, usize) -> usize) -> Table {
    (1..=n + 1).map(|x| (1..=n + 1).map(|y| f(x, y)).collect()).collect()
}

fn inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &v) in sigma.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// Bruck's loop for an idempotent quasigroup.
pub fn bruck(l: &LatinSquare) -> Table {
    let n = l.order();
    let q = n + 1;
    build(n, |x, y| {
        if x == y {
            q
        } else if y == q {
            x
        } else if x == q {
            y
        } else {
            l.cell(x, y)
        }
    })
}

/// Classical construction with σ = identity (diagonal a bijection).
pub fn classical_identity(l: &LatinSquare) -> Table {
    let n = l.order();
    let q = n + 1;
    build(n, |x, y| {
        if x == y {
            q
        } else if y == q {
            l.cell(x, x)
        } else if x == q {
            l.cell(y, y)
        } else {
            l.cell(x, y)
        }
    })
}

/// Classical construction for a complete mapping `sigma` (1-based images).
pub fn classical(l: &LatinSquare, sigma: &[usize]) -> Table {
    let n = l.order();
    let q = n + 1;
    let inv = inverse(sigma);
    let bar = |x: usize| l.cell(x, sigma[x - 1]);
    build(n, |x, y| match (x <= n, y <= n) {
        (true, true) if y != sigma[x - 1] => l.cell(x, y),
        (true, true) => q,
        (true, false) => bar(x),
        (false, true) => bar(inv[y - 1]),
        (false, false) => q,
    })
}

/// Belyavskaya for an idempotent quasigroup and chosen `a`.
pub fn belyavskaya_idempotent(l: &LatinSquare, a: usize) -> Table {
    let n = l.order();
    let q = n + 1;
    build(n, |x, y| {
        if x <= n && y <= n {
            if x != y {
                l.cell(x, y)
            } else if x == a {
                a
            } else {
                q
            }
        } else if x <= n {
            if x == a { q } else { x }
        } else if y <= n {
            if y == a { q } else { y }
        } else {
            a
        }
    })
}

/// Belyavskaya with σ = identity; `xa` is the unique `x` with `x·x = a`.
pub fn belyavskaya_identity(l: &LatinSquare, a: usize, xa: usize) -> Table {
    let n = l.order();
    let q = n + 1;
    build(n, |x, y| {
        if x <= n && y <= n {
            if x != y {
                l.cell(x, y)
            } else if x == xa {
                a
            } else {
                q
            }
        } else if x <= n {
            if x == xa { q } else { l.cell(x, x) }
        } else if y <= n {
            if y == xa { q } else { l.cell(y, y) }
        } else {
            a
        }
    })
}

/// Belyavskaya for a complete mapping `sigma`, chosen `a`, and `xa` with
/// `xa·σ(xa) = a`.
pub fn belyavskaya(l: &LatinSquare, sigma: &[usize], a: usize, xa: usize) -> Table {
    let n = l.order();
    let q = n + 1;
    let inv = inverse(sigma);
    let bar = |x: usize| l.cell(x, sigma[x - 1]);
    build(n, |x, y| {
        if x <= n && y <= n {
            if y != sigma[x - 1] {
                l.cell(x, y)
            } else if x == xa {
                a
            } else {
                q
            }
        } else if x <= n {
            if x == xa { q } else { bar(x) }
        } else if y <= n {
            if y == sigma[xa - 1] { q } else { bar(inv[y - 1]) }
        } else {
            a
        }
    })
}

/// The quasicomplete construction with σ = identity, every element other
/// than `x1`, `x2` idempotent, `a = x1·x1 = x2·x2`, defect `{d}`.
pub fn dd_identity(l: &LatinSquare, x1: usize, x2: usize, a: usize, d: usize) -> Table {
    let n = l.order();
    let q = n + 1;
    build(n, |x, y| {
        if x <= n && y <= n {
            if x != y {
                l.cell(x, y)
            } else if x == x1 {
                a
            } else {
                q
            }
        } else if x <= n {
            match x {
                _ if x == x1 => q,
                _ if x == x2 => a,
                _ => x,
            }
        } else if y <= n {
            match y {
                _ if y == x1 => q,
                _ if y == x2 => a,
                _ => y,
            }
        } else {
            d
        }
    })
}

/// The quasicomplete construction for general σ.
pub fn dd(l: &LatinSquare, sigma: &[usize], x1: usize, x2: usize, a: usize, d: usize) -> Table {
    let n = l.order();
    let q = n + 1;
    let inv = inverse(sigma);
    let bar = |x: usize| l.cell(x, sigma[x - 1]);
    let (s1, s2) = (sigma[x1 - 1], sigma[x2 - 1]);
    build(n, |x, y| {
        if x <= n && y <= n {
            if y != sigma[x - 1] {
                l.cell(x, y)
            } else if x == x1 {
                a
            } else {
                q
            }
        } else if x <= n {
            match x {
                _ if x == x1 => q,
                _ if x == x2 => a,
                _ => bar(x),
            }
        } else if y <= n {
            match y {
                _ if y == s1 => q,
                _ if y == s2 => a,
                _ => bar(inv[y - 1]),
            }
        } else {
            d
        }
    })
}

/// The quasicomplete rule with the `x2` lines deleted, for complete `sigma`.
pub fn dd_without_x2(l: &LatinSquare, sigma: &[usize], x1: usize, a: usize, d: usize) -> Table {
    let n = l.order();
    let q = n + 1;
    let inv = inverse(sigma);
    let bar = |x: usize| l.cell(x, sigma[x - 1]);
    build(n, |x, y| {
        if x <= n && y <= n {
            if y != sigma[x - 1] {
                l.cell(x, y)
            } else if x == x1 {
                a
            } else {
                q
            }
        } else if x <= n {
            if x == x1 { q } else { bar(x) }
        } else if y <= n {
            if y == sigma[x1 - 1] { q } else { bar(inv[y - 1]) }
        } else {
            d
        }
    })
}
