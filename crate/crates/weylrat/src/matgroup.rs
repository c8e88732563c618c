//! Exact rational matrices and the Gaussian decomposition in GL_n.
//!
//! Everything here is exact: entries are arbitrary-precision rationals in
//! canonical form, so triangularity and stabilization tests are honest
//! equalities rather than tolerance checks. `gauss_decompose` factors a
//! generic matrix as `g = g₋·g⊕` with `g₋` unit lower-triangular and `g⊕`
//! upper-triangular, failing with the index of the first vanishing leading
//! minor otherwise. The one-parameter subgroups `x_i(t) = I + t·E_{i,i+1}`,
//! `y_i(t) = I + t·E_{i+1,i}` and the representatives
//! `ṡ_i = x_i(−1)·y_i(1)·x_i(−1)` realize the Weyl group of type A inside
//! GL_n.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational scalar; canonical form (reduced, positive denominator)
/// is maintained by construction.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(n: usize) -> QMatrix {
        QMatrix { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> QMatrix {
        let mut m = QMatrix::zero(n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> QMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        QMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self[(i, j)].clone()).collect()).collect()
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n;
        let mut out = QMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact inverse by Gauss–Jordan with row pivoting.
    pub fn inverse(&self) -> Option<QMatrix> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero())?;
            if pivot != col {
                m.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = m[(col, col)].clone();
            for j in 0..n {
                m[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in 0..n {
                    let mj = &m[(col, j)] * &factor;
                    m[(r, j)] -= mj;
                    let ij = &inv[(col, j)] * &factor;
                    inv[(r, j)] -= ij;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    /// Strict lower part is zero and the diagonal has no zeros.
    pub fn is_upper_borel(&self) -> bool {
        for i in 0..self.n {
            if self[(i, i)].is_zero() {
                return false;
            }
            for j in 0..i {
                if !self[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Unit diagonal and zero strict upper part.
    pub fn is_unit_lower(&self) -> bool {
        for i in 0..self.n {
            if !self[(i, i)].is_one() {
                return false;
            }
            for j in i + 1..self.n {
                if !self[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Largest numerator/denominator bit size, a rough growth gauge.
    pub fn max_entry_bits(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.numer().abs().bits().max(e.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.n + j]
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Failure of a Gaussian decomposition: the first leading principal minor
/// that vanishes (1-based size).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotGeneric {
    pub minor: usize,
}

impl fmt::Display for NotGeneric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "leading principal minor {} vanishes", self.minor)
    }
}

impl std::error::Error for NotGeneric {}

/// The factors of `g = lower · upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussPair {
    /// Unit lower-triangular factor g₋ ∈ N₋.
    pub lower: QMatrix,
    /// Upper-triangular factor g⊕ ∈ B₊ (nonzero diagonal).
    pub upper: QMatrix,
}

/// Exact Doolittle factorization without pivoting; defined exactly when
/// all leading principal minors are nonzero.
pub fn gauss_decompose(g: &QMatrix) -> Result<GaussPair, NotGeneric> {
    let n = g.size();
    let mut upper = g.clone();
    let mut lower = QMatrix::identity(n);
    for k in 0..n {
        if upper[(k, k)].is_zero() {
            return Err(NotGeneric { minor: k + 1 });
        }
        for i in k + 1..n {
            if upper[(i, k)].is_zero() {
                continue;
            }
            let factor = &upper[(i, k)] / &upper[(k, k)];
            for j in k..n {
                let sub = &upper[(k, j)] * &factor;
                upper[(i, j)] -= sub;
            }
            lower[(i, k)] = factor;
        }
    }
    Ok(GaussPair { lower, upper })
}

/// x_i(t) = I + t·E_{i,i+1} (1-based i ≤ n−1).
pub fn chevalley_x(n: usize, i: usize, t: &Rational) -> QMatrix {
    assert!((1..n).contains(&i), "index {i} out of range for GL_{n}");
    let mut m = QMatrix::identity(n);
    m[(i - 1, i)] = t.clone();
    m
}

/// y_i(t) = I + t·E_{i+1,i}.
pub fn chevalley_y(n: usize, i: usize, t: &Rational) -> QMatrix {
    assert!((1..n).contains(&i), "index {i} out of range for GL_{n}");
    let mut m = QMatrix::identity(n);
    m[(i, i - 1)] = t.clone();
    m
}

/// t^{h_i}: diagonal with t at position i and 1/t at position i+1.
pub fn torus_h(n: usize, i: usize, t: &Rational) -> QMatrix {
    assert!((1..n).contains(&i), "index {i} out of range for GL_{n}");
    assert!(!t.is_zero(), "torus parameter must be nonzero");
    let mut m = QMatrix::identity(n);
    m[(i - 1, i - 1)] = t.clone();
    m[(i, i)] = t.recip();
    m
}

/// ṡ_i = x_i(−1)·y_i(1)·x_i(−1).
pub fn simple_representative(n: usize, i: usize) -> QMatrix {
    let minus_one = -Rational::one();
    let one = Rational::one();
    chevalley_x(n, i, &minus_one)
        .mul(&chevalley_y(n, i, &one))
        .mul(&chevalley_x(n, i, &minus_one))
}

/// Representative of a word in simple reflections: the product of the ṡ_i
/// left to right. Well-defined on elements because the ṡ_i satisfy braid
/// relations.
pub fn representative(n: usize, word: &[usize]) -> QMatrix {
    let mut m = QMatrix::identity(n);
    for &i in word {
        m = m.mul(&simple_representative(n, i));
    }
    m
}

/// A reduced word for the longest element of the type A_{n−1} Weyl group:
/// (1)(2 1)(3 2 1)⋯(n−1 … 1).
pub fn longest_word(n: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..n {
        for i in (1..=k).rev() {
            w.push(i);
        }
    }
    w
}
