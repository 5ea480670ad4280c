//! Small exact integer linear algebra: determinants, Hermite and Smith normal
//! forms, integer kernels, rational inverses.
//!
//! Matrices are row-major `Vec<Vec<i64>>`. Internal arithmetic runs in `i128`;
//! every routine here targets desk-scale matrices (a handful of rows and
//! columns with small entries).

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type IntMatrix = Vec<Vec<i64>>;

fn widen(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("integer matrix entry overflowed i64")
}

pub fn transpose(m: &[Vec<i64>], ncols: usize) -> IntMatrix {
    (0..ncols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = widen(m);
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Unimodular row reduction to echelon form using extended-gcd row
/// combinations. Returns the number of nonzero (pivot) rows, which come first.
/// Only the first `pivot_cols` columns are used for pivoting; the remaining
/// columns ride along.
fn echelonize(a: &mut [Vec<i128>], pivot_cols: usize) -> usize {
    let nrows = a.len();
    let mut p = 0;
    for c in 0..pivot_cols {
        if p == nrows {
            break;
        }
        let Some(first) = (p..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(p, first);
        for i in p + 1..nrows {
            if a[i][c] == 0 {
                continue;
            }
            let x = a[p][c];
            let y = a[i][c];
            let eg = x.extended_gcd(&y);
            let (g, u, v) = (eg.gcd, eg.x, eg.y);
            let (xg, yg) = (x / g, y / g);
            let (rp, ri) = (a[p].clone(), a[i].clone());
            for j in 0..rp.len() {
                a[p][j] = u * rp[j] + v * ri[j];
                a[i][j] = xg * ri[j] - yg * rp[j];
            }
        }
        if a[p][c] < 0 {
            for x in a[p].iter_mut() {
                *x = -*x;
            }
        }
        p += 1;
    }
    p
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// The result is upper echelon with positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, and zero rows removed. Two row lists span the
/// same lattice iff their Hermite forms coincide.
pub fn hermite_normal_form(rows: &[Vec<i64>], ncols: usize) -> IntMatrix {
    let mut a = widen(rows);
    let rank = echelonize(&mut a, ncols);
    a.truncate(rank);
    let mut pivot_col = 0;
    for p in 0..rank {
        while a[p][pivot_col] == 0 {
            pivot_col += 1;
        }
        let piv = a[p][pivot_col];
        for i in 0..p {
            let q = Integer::div_floor(&a[i][pivot_col], &piv);
            if q != 0 {
                let rp = a[p].clone();
                for (x, y) in a[i].iter_mut().zip(rp) {
                    *x -= q * y;
                }
            }
        }
        pivot_col += 1;
    }
    a.iter().map(|r| r.iter().map(|&x| narrow(x)).collect()).collect()
}

pub fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    let mut a = widen(rows);
    echelonize(&mut a, ncols)
}

/// Basis of the integer kernel `{x ∈ ℤ^ncols : m·x = 0}` in Hermite normal form.
pub fn integer_kernel(m: &[Vec<i64>], ncols: usize) -> IntMatrix {
    let nrows = m.len();
    // Rows of [mᵀ | I]: reducing the mᵀ block by unimodular row operations
    // leaves kernel vectors in the identity block of the zero rows.
    let mut a: Vec<Vec<i128>> = (0..ncols)
        .map(|j| {
            let mut row: Vec<i128> = m.iter().map(|r| r[j] as i128).collect();
            row.extend((0..ncols).map(|k| i128::from(k == j)));
            row
        })
        .collect();
    let r = echelonize(&mut a, nrows);
    let kernel: IntMatrix = a[r..]
        .iter()
        .map(|row| row[nrows..].iter().map(|&x| narrow(x)).collect())
        .collect();
    hermite_normal_form(&kernel, ncols)
}

/// Nonzero invariant factors of the Smith normal form, in divisibility order.
pub fn smith_invariants(m: &[Vec<i64>], ncols: usize) -> Vec<i64> {
    let mut a = widen(m);
    let nrows = a.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let piv = a[t][t];
        let mut clean = true;
        for i in t + 1..nrows {
            let q = a[i][t] / piv;
            if q != 0 {
                let rt = a[t].clone();
                for (x, y) in a[i].iter_mut().zip(rt) {
                    *x -= q * y;
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..ncols {
            let q = a[t][j] / piv;
            if q != 0 {
                for row in a.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // pivot must divide the rest of the block
        let bad = (t + 1..nrows)
            .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
            .find(|&(i, j)| a[i][j] % piv != 0);
        if let Some((i, _)) = bad {
            let ri = a[i].clone();
            for (x, y) in a[t].iter_mut().zip(ri) {
                *x += y;
            }
            continue;
        }
        out.push(narrow(piv.abs()));
        t += 1;
    }
    out
}

/// Inverse of a square integer matrix over ℚ, or `None` if singular.
pub fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Ratio<i64>>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Ratio<i64>> = r.iter().map(|&x| Ratio::from_integer(x)).collect();
            row.extend((0..n).map(|k| Ratio::from_integer(i64::from(k == i))));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c];
        for x in a[c].iter_mut() {
            *x /= piv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c];
                let rc = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(rc) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// For an `(n-1) × n` integer matrix, the vector of signed maximal minors.
/// It spans the nullspace whenever the matrix has rank `n - 1`, and is zero
/// otherwise. The result is divided by the gcd of its entries.
pub fn primitive_null_vector(m: &[Vec<i64>], n: usize) -> Vec<i64> {
    debug_assert!(m.iter().all(|r| r.len() == n) && m.len() + 1 == n);
    let mut v: Vec<i128> = (0..n)
        .map(|j| {
            let minor: IntMatrix = m
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let d = determinant(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    let g = v.iter().fold(0i128, |g, x| g.gcd(x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
    v.into_iter().map(narrow).collect()
}

pub fn is_integral(x: &Ratio<i64>) -> bool {
    x.is_integer()
}

pub fn l1_norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}
