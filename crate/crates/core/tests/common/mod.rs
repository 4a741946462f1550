//! Test support: fixtures, random squares, and oracles that share no code
//! with the library's search paths.
#![allow(dead_code)]

pub mod formulas;

use quasiprolong::{parse_square, LatinSquare, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture(name: &str) -> LatinSquare {
    let path = format!("{}/tests/fixtures/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_square(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn fixture_text(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// All permutations of `1..=n` as 1-based image vectors, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// Random Latin square by randomized row-major backtracking.
pub fn random_square<R: Rng>(n: usize, rng: &mut R) -> LatinSquare {
    fn fill<R: Rng>(n: usize, k: usize, grid: &mut Vec<Vec<usize>>, rng: &mut R) -> bool {
        if k == n * n {
            return true;
        }
        let (r, c) = (k / n, k % n);
        let mut symbols: Vec<usize> = (1..=n).collect();
        symbols.shuffle(rng);
        for s in symbols {
            if grid[r][..c].contains(&s) || (0..r).any(|i| grid[i][c] == s) {
                continue;
            }
            grid[r][c] = s;
            if fill(n, k + 1, grid, rng) {
                return true;
            }
        }
        grid[r][c] = 0;
        false
    }
    let mut grid = vec![vec![0; n]; n];
    assert!(fill(n, 0, &mut grid, rng));
    LatinSquare::new(grid).unwrap()
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::from_images(&v).unwrap()
}

/// Every Latin square of order `n` (1-based rows), by plain backtracking.
pub fn all_squares(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(n: usize, k: usize, grid: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == n * n {
            out.push(grid.clone());
            return;
        }
        let (r, c) = (k / n, k % n);
        for s in 1..=n {
            if grid[r][..c].contains(&s) || (0..r).any(|i| grid[i][c] == s) {
                continue;
            }
            grid[r][c] = s;
            rec(n, k + 1, grid, out);
        }
        grid[r][c] = 0;
    }
    let mut out = Vec::new();
    rec(n, 0, &mut vec![vec![0; n]; n], &mut out);
    out
}

/// Independent classification: (image size, defect, doubled symbols).
pub struct NaiveClass {
    pub image_size: usize,
    pub defect: Vec<usize>,
    pub conjugate: Vec<usize>,
}

pub fn naive_class(rows: &[Vec<usize>], sigma: &[usize]) -> NaiveClass {
    let n = rows.len();
    let conjugate: Vec<usize> = (0..n).map(|x| rows[x][sigma[x] - 1]).collect();
    let mut image = conjugate.clone();
    image.sort();
    image.dedup();
    let defect = (1..=n).filter(|s| !image.contains(s)).collect();
    NaiveClass { image_size: image.len(), defect, conjugate }
}

/// Longest partial transversal found by scanning every subset of cells in
/// lexicographic order, largest size first. Returns the lexicographically
/// least `(row, col)` sequence of maximum length.
pub fn brute_max_transversal(rows: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let n = rows.len();
    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|r| (1..=n).map(move |c| (r, c))).collect();
    fn first_subset(
        rows: &[Vec<usize>],
        cells: &[(usize, usize)],
        k: usize,
        start: usize,
        cur: &mut Vec<(usize, usize)>,
    ) -> bool {
        if cur.len() == k {
            let ok = |f: &dyn Fn(&(usize, usize)) -> usize| {
                let mut v: Vec<usize> = cur.iter().map(f).collect();
                v.sort();
                v.windows(2).all(|w| w[0] != w[1])
            };
            return ok(&|c| c.0) && ok(&|c| c.1) && ok(&|c| rows[c.0 - 1][c.1 - 1]);
        }
        for i in start..cells.len() {
            cur.push(cells[i]);
            if first_subset(rows, cells, k, i + 1, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    for k in (1..=n).rev() {
        let mut cur = Vec::new();
        if first_subset(rows, &cells, k, 0, &mut cur) {
            return cur;
        }
    }
    Vec::new()
}

/// Isotopy by filtering all `(n!)³` triples; usable for `n ≤ 3`.
pub fn naive_isotopic(l: &[Vec<usize>], m: &[Vec<usize>]) -> bool {
    let n = l.len();
    let perms = all_permutations(n);
    perms.iter().any(|a| {
        perms.iter().any(|b| {
            perms.iter().any(|g| {
                (0..n).all(|x| (0..n).all(|y| g[l[x][y] - 1] == m[a[x] - 1][b[y] - 1]))
            })
        })
    })
}
