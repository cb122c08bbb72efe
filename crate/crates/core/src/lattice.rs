//! Integer-lattice kernel: Smith normal form over arbitrary-precision
//! integers, Hermite-form membership tests, and abelian invariants of
//! Zⁿ modulo a row-spanned sublattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Quotient Zⁿ / rowspan is infinite (the lattice has rank < n).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("infinite quotient: lattice rank {rank} < ambient rank {ambient}")]
pub struct InfiniteQuotient {
    pub rank: usize,
    pub ambient: usize,
}

/// Integer matrix whose rows span a sublattice of Zⁿ.
///
/// Rows may be linearly dependent or zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLattice {
    rows: Vec<Vec<BigInt>>,
    ambient: usize,
}

impl IntLattice {
    /// Builds a lattice, checking that every row has length `ambient`.
    pub fn new(ambient: usize, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == ambient),
            "all lattice rows must have length {ambient}"
        );
        Self { rows, ambient }
    }

    pub fn from_i64(ambient: usize, rows: &[&[i64]]) -> Self {
        Self::new(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn push_row(&mut self, row: Vec<BigInt>) {
        assert_eq!(row.len(), self.ambient);
        self.rows.push(row);
    }

    /// Nonzero diagonal d₁ | d₂ | … | d_k of the Smith normal form
    /// (ones included, zeros excluded).
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        smith_diagonal(&self.rows)
    }

    /// Elementary divisors of Zⁿ / rowspan in primary decomposition
    /// (prime powers, ascending, entries 1 dropped; empty = trivial group).
    pub fn quotient_invariants(&self) -> Result<AbelianInvariants, InfiniteQuotient> {
        let diag = self.smith_invariants();
        if diag.len() < self.ambient {
            return Err(InfiniteQuotient {
                rank: diag.len(),
                ambient: self.ambient,
            });
        }
        Ok(AbelianInvariants::from_orders(&diag))
    }

    /// Row-style Hermite basis of the span; canonical, usable for equality.
    pub fn hermite_basis(&self) -> Vec<Vec<BigInt>> {
        let mut h = HermiteBasis::new(self.ambient);
        for r in &self.rows {
            h.insert(r.clone());
        }
        h.into_canonical_rows()
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut h = HermiteBasis::new(self.ambient);
        for r in &self.rows {
            h.insert(r.clone());
        }
        h.reduces_to_zero(v.to_vec())
    }
}

/// Incrementally maintained row echelon basis over Z (Hermite style).
struct HermiteBasis {
    ambient: usize,
    /// pivot column -> row (pivot entry positive).
    rows: Vec<Option<Vec<BigInt>>>,
}

impl HermiteBasis {
    fn new(ambient: usize) -> Self {
        Self {
            ambient,
            rows: vec![None; ambient],
        }
    }

    fn insert(&mut self, mut v: Vec<BigInt>) {
        for col in 0..self.ambient {
            if v[col].is_zero() {
                continue;
            }
            match &mut self.rows[col] {
                Some(pivot_row) => {
                    // Replace the pivot by gcd(pivot, v[col]) via the
                    // extended Euclidean combination, then eliminate.
                    let a = pivot_row[col].clone();
                    let b = v[col].clone();
                    let eg = a.extended_gcd(&b);
                    let (g, s, t) = (eg.gcd, eg.x, eg.y);
                    let new_pivot: Vec<BigInt> = (0..self.ambient)
                        .map(|i| &s * &pivot_row[i] + &t * &v[i])
                        .collect();
                    let ag = &a / &g;
                    let bg = &b / &g;
                    let new_v: Vec<BigInt> = (0..self.ambient)
                        .map(|i| &ag * &v[i] - &bg * &pivot_row[i])
                        .collect();
                    *pivot_row = new_pivot;
                    v = new_v;
                    debug_assert!(v[col].is_zero());
                }
                None => {
                    if v[col].is_negative() {
                        for x in v.iter_mut() {
                            *x = -&*x;
                        }
                    }
                    self.rows[col] = Some(v);
                    return;
                }
            }
        }
    }

    fn reduces_to_zero(&self, mut v: Vec<BigInt>) -> bool {
        for col in 0..self.ambient {
            if v[col].is_zero() {
                continue;
            }
            let Some(pivot_row) = &self.rows[col] else {
                return false;
            };
            let (q, r) = v[col].div_rem(&pivot_row[col]);
            if !r.is_zero() {
                return false;
            }
            for i in 0..self.ambient {
                let delta = &q * &pivot_row[i];
                v[i] -= delta;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    fn into_canonical_rows(mut self) -> Vec<Vec<BigInt>> {
        // Reduce entries above each pivot into [0, pivot).
        for col in 0..self.ambient {
            let Some(pivot_row) = self.rows[col].clone() else {
                continue;
            };
            for upper in 0..self.ambient {
                if upper == col {
                    continue;
                }
                if let Some(row) = &mut self.rows[upper] {
                    if !row[col].is_zero() {
                        let q = row[col].div_floor(&pivot_row[col]);
                        for i in 0..self.ambient {
                            let delta = &q * &pivot_row[i];
                            row[i] -= delta;
                        }
                    }
                }
            }
        }
        self.rows.into_iter().flatten().collect()
    }
}

/// Smith normal form with the unimodular transforms, for certificate checks:
/// `u * m * v = diag`, |det u| = |det v| = 1.
pub struct SnfCertificate {
    pub diagonal: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

pub fn smith_with_certificate(m: &[Vec<BigInt>], ncols: usize) -> SnfCertificate {
    let nrows = m.len();
    let mut work: Vec<Vec<BigInt>> = m.to_vec();
    let mut u = identity_matrix(nrows);
    let mut v = identity_matrix(ncols);
    smith_reduce(&mut work, Some(&mut u), Some(&mut v));
    let diagonal = (0..nrows.min(ncols))
        .map(|i| work[i][i].clone())
        .filter(|d| !d.is_zero())
        .collect();
    SnfCertificate { diagonal, u, v }
}

fn identity_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn smith_diagonal(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut work: Vec<Vec<BigInt>> = rows.to_vec();
    smith_reduce(&mut work, None, None);
    let n = work.len().min(work.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| work[i][i].clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Classical SNF by row/column reduction with a smallest-pivot heuristic.
fn smith_reduce(
    m: &mut [Vec<BigInt>],
    mut u: Option<&mut [Vec<BigInt>]>,
    mut v: Option<&mut [Vec<BigInt>]>,
) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let dim = nrows.min(ncols);

    for t in 0..dim {
        loop {
            // Smallest nonzero entry of the trailing submatrix -> pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..ncols {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if m[pi][pj].abs() <= m[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return;
            };
            if pi != t {
                m.swap(pi, t);
                if let Some(u) = u.as_deref_mut() {
                    u.swap(pi, t);
                }
            }
            if pj != t {
                swap_cols(m, pj, t);
                if let Some(v) = v.as_deref_mut() {
                    swap_cols(v, pj, t);
                }
            }
            if m[t][t].is_negative() {
                negate_row(m, t);
                if let Some(u) = u.as_deref_mut() {
                    negate_row(u, t);
                }
            }

            let mut dirty = false;
            for i in t + 1..nrows {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    row_sub(m, i, t, &q);
                    if let Some(u) = u.as_deref_mut() {
                        row_sub(u, i, t, &q);
                    }
                    dirty |= !m[i][t].is_zero();
                }
            }
            for j in t + 1..ncols {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    col_sub(m, j, t, &q);
                    if let Some(v) = v.as_deref_mut() {
                        col_sub(v, j, t, &q);
                    }
                    dirty |= !m[t][j].is_zero();
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let mut fixed = true;
            'scan: for i in t + 1..nrows {
                for j in t + 1..ncols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        let one = BigInt::from(-1);
                        row_sub(m, t, i, &one);
                        if let Some(u) = u.as_deref_mut() {
                            row_sub(u, t, i, &one);
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn negate_row(m: &mut [Vec<BigInt>], i: usize) {
    for x in m[i].iter_mut() {
        *x = -&*x;
    }
}

/// rows[i] -= q * rows[src]
fn row_sub(m: &mut [Vec<BigInt>], i: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let src_row = m[src].clone();
    for (x, s) in m[i].iter_mut().zip(src_row.iter()) {
        *x -= q * s;
    }
}

/// cols[j] -= q * cols[src]
fn col_sub(m: &mut [Vec<BigInt>], j: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let delta = q * &row[src];
        row[j] -= delta;
    }
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// A finite abelian group as its multiset of prime-power elementary divisors,
/// sorted ascending. The empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianInvariants {
    divisors: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Primary decomposition of ⊕ Z_{dᵢ}; entries 1 are dropped.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let mut divisors = Vec::new();
        for d in orders {
            debug_assert!(d.is_positive());
            for (p, e) in factorize(d) {
                divisors.push(p.pow(e));
            }
        }
        divisors.sort();
        Self { divisors }
    }

    /// Builds ⊕ Z_{p^eᵢ} from a prime and exponents; zero exponents dropped.
    pub fn from_prime_powers(p: u64, exponents: &[u32]) -> Self {
        let mut divisors: Vec<BigInt> = exponents
            .iter()
            .filter(|&&e| e > 0)
            .map(|&e| BigInt::from(p).pow(e))
            .collect();
        divisors.sort();
        Self { divisors }
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }

    /// Group order (product of the divisors).
    pub fn order(&self) -> BigInt {
        self.divisors.iter().product()
    }

    /// True if every divisor is a power of `p`.
    pub fn is_p_group(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.divisors.iter().all(|d| {
            let mut d = d.clone();
            while (&d % &p).is_zero() {
                d /= &p;
            }
            d.is_one()
        })
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divisors.is_empty() {
            return write!(f, "[] (trivial)");
        }
        write!(f, "[")?;
        for (i, d) in self.divisors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Trial-division factorization; inputs here are tiny prime powers.
fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.clone();
    assert!(n.is_positive(), "cannot factor non-positive {n}");
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut e = 0u32;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}
