//! Exact arbitrary-precision rationals and dense rational linear algebra.
//!
//! Everything downstream (boundary matrices, fence weights, resolution
//! differentials) runs on [`Rat`] and [`RatMatrix`].  Rank and integer
//! determinants use fraction-free Bareiss elimination so intermediate values
//! stay integral.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A rational number, always reduced, denominator always positive.
///
/// Zero is stored as 0/1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat {
    num: BigInt,
    den: BigInt,
}

impl Rat {
    pub fn zero() -> Self {
        Rat {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Rat {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Rat {
            num: BigInt::from(n),
            den: BigInt::one(),
        }
    }

    /// Build p/q, reducing and normalizing the sign.  Panics if q = 0.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        let mut r = Rat { num, den };
        r.reduce();
        r
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.num = -std::mem::take(&mut self.num);
            self.den = -std::mem::take(&mut self.den);
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = &self.num / &g;
            self.den = &self.den / &g;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn abs(&self) -> Rat {
        Rat {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat::new(self.den.clone(), self.num.clone())
    }

    /// True when the denominator factors as 2^a·3^b (including 1).
    pub fn denominator_is_2_3_smooth(&self) -> bool {
        let mut d = self.den.clone();
        for p in [2u8, 3u8] {
            let p = BigInt::from(p);
            while (&d % &p).is_zero() {
                d = &d / &p;
            }
        }
        d.is_one()
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        Rat::new(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rat {
    /// Renders as "p/q", or just "p" when q = 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        // Accept unicode minus from copy-pasted sources.
        let s = s.replace('\u{2212}', "-");
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(&s).map_err(|e| format!("bad integer {s:?}: {e}"))?;
                Ok(Rat {
                    num: n,
                    den: BigInt::one(),
                })
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|e| format!("bad numerator: {e}"))?;
                let q = BigInt::from_str(q.trim()).map_err(|e| format!("bad denominator: {e}"))?;
                if q.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(Rat::new(p, q))
            }
        }
    }
}

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience for tests: entries given as integers.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rat::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let v = &(a * b) + out.get(r, c);
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = &acc + &(a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Stack `self` and `rhs` side by side.
    pub fn hstack(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, rhs.rows);
        let mut out = RatMatrix::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// Row rank over ℚ.
    ///
    /// Each row is scaled to integers first (rank is unchanged), then reduced
    /// by fraction-free Bareiss elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut l = BigInt::one();
                for c in 0..self.cols {
                    l = l.lcm(self.get(r, c).denominator());
                }
                (0..self.cols)
                    .map(|c| self.get(r, c).numerator() * (&l / self.get(r, c).denominator()))
                    .collect()
            })
            .collect();
        bareiss_rank(&mut m)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
pub fn int_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for c in 0..n - 1 {
        if m[c][c].is_zero() {
            let Some(p) = (c + 1..n).find(|&r| !m[r][c].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(c, p);
            sign = -sign;
        }
        for r in c + 1..n {
            for k in c + 1..n {
                let v = (&m[c][c] * &m[r][k] - &m[r][c] * &m[c][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

pub fn int_determinant_i64(m: &[Vec<i64>]) -> BigInt {
    int_determinant(
        &m.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect::<Vec<_>>(),
    )
}

/// Diagonal of the Smith normal form of an integer matrix (non-negative,
/// each dividing the next, zeros trimmed).
pub fn smith_diagonal(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut diag = Vec::new();
    let mut top = 0;
    while top < rows.min(cols) {
        // Find a pivot of least nonzero magnitude.
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in top..cols {
                if a[r][c] != 0 && pivot.is_none_or(|(pr, pc)| a[r][c].abs() < a[pr][pc].abs()) {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(top, pr);
        for row in a.iter_mut() {
            row.swap(top, pc);
        }
        loop {
            let mut done = true;
            for r in top + 1..rows {
                if a[r][top] != 0 {
                    let q = a[r][top].div_euclid(a[top][top]);
                    for c in top..cols {
                        a[r][c] -= q * a[top][c];
                    }
                    if a[r][top] != 0 {
                        a.swap(top, r);
                        done = false;
                    }
                }
            }
            for c in top + 1..cols {
                if a[top][c] != 0 {
                    let q = a[top][c].div_euclid(a[top][top]);
                    for row in a.iter_mut() {
                        row[c] -= q * row[top];
                    }
                    if a[top][c] != 0 {
                        for row in a.iter_mut() {
                            row.swap(top, c);
                        }
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        diag.push(a[top][top].abs());
        top += 1;
    }
    // Enforce divisibility d1 | d2 | ... (entries here are tiny; gcd-fix pass).
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd_i64(diag[i], diag[j]);
            let l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag.retain(|&d| d != 0);
    diag
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Outcome of [`solve_unique`] when no single solution exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    /// The system is inconsistent.
    NoSolution,
    /// The system is consistent but underdetermined.
    NotUnique,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NoSolution => write!(f, "no solution"),
            SolveError::NotUnique => write!(f, "solution not unique"),
        }
    }
}

/// Solve M·x = rhs, requiring the solution to exist and be unique.
pub fn solve_unique(m: &RatMatrix, rhs: &[Rat]) -> Result<Vec<Rat>, SolveError> {
    match solve(m, rhs) {
        Some((x, 0)) => Ok(x),
        Some(_) => Err(SolveError::NotUnique),
        None => Err(SolveError::NoSolution),
    }
}

/// Solve M·x = rhs.  Returns one solution (free variables set to 0) and the
/// number of free variables, or None when inconsistent.
pub fn solve(m: &RatMatrix, rhs: &[Rat]) -> Option<(Vec<Rat>, usize)> {
    assert_eq!(m.nrows(), rhs.len());
    let mut aug = m.clone().hstack(&RatMatrix::from_rows(
        rhs.iter().map(|v| vec![v.clone()]).collect::<Vec<_>>(),
    ));
    if m.nrows() == 0 {
        return Some((vec![Rat::zero(); m.ncols()], m.ncols()));
    }
    let n = m.ncols();
    let pivots = rref(&mut aug, n);
    // Inconsistent iff some row reads 0 = nonzero.
    for r in 0..aug.nrows() {
        if (0..n).all(|c| aug.get(r, c).is_zero()) && !aug.get(r, n).is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (row, col) in pivots.iter().enumerate() {
        x[*col] = aug.get(row, n).clone();
    }
    Some((x, n - pivots.len()))
}

/// In-place reduced row echelon form on the first `limit` columns.
/// Returns the pivot columns in order.
pub fn rref(m: &mut RatMatrix, limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..limit.min(m.ncols()) {
        let Some(p) = (row..m.nrows()).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        // swap rows p, row
        for c in 0..m.ncols() {
            let a = m.get(p, c).clone();
            let b = m.get(row, c).clone();
            m.set(p, c, b);
            m.set(row, c, a);
        }
        let inv = m.get(row, col).recip();
        for c in 0..m.ncols() {
            let v = &inv * m.get(row, c);
            m.set(row, c, v);
        }
        for r in 0..m.nrows() {
            if r != row && !m.get(r, col).is_zero() {
                let f = m.get(r, col).clone();
                for c in 0..m.ncols() {
                    let v = m.get(r, c) - &(&f * m.get(row, c));
                    m.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.nrows() {
            break;
        }
    }
    pivots
}

/// Deterministic basis of the kernel of M (RREF free-column construction,
/// each vector scaled so its first nonzero coordinate is +1).
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let n = m.ncols();
    let mut work = m.clone();
    let pivots = rref(&mut work, n);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for f in (0..n).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[f] = Rat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&work.get(row, f).clone();
        }
        normalize_leading(&mut v);
        basis.push(v);
    }
    basis
}

/// Scale so the first nonzero coordinate is +1.
pub fn normalize_leading(v: &mut [Rat]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.recip();
        for x in v.iter_mut() {
            *x = &inv * x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_reduction_and_display() {
        let r = Rat::from_frac(6, -8);
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!(Rat::from_frac(5, 1).to_string(), "5");
        assert_eq!(Rat::zero().to_string(), "0");
        assert_eq!("4/9".parse::<Rat>().unwrap(), Rat::from_frac(4, 9));
        assert_eq!("-1/2".parse::<Rat>().unwrap(), Rat::from_frac(-1, 2));
    }

    #[test]
    fn rat_denominator_smoothness() {
        assert!(Rat::from_frac(5, 8).denominator_is_2_3_smooth());
        assert!(Rat::from_frac(4, 9).denominator_is_2_3_smooth());
        assert!(Rat::from_frac(1, 12).denominator_is_2_3_smooth());
        assert!(!Rat::from_frac(1, 5).denominator_is_2_3_smooth());
        assert!(Rat::from_int(7).denominator_is_2_3_smooth());
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zeros(3, 3).rank(), 0);
    }

    #[test]
    fn rank_hollow_triangle_boundary() {
        // Edge boundary of the hollow triangle on three vertices.
        let m = RatMatrix::from_int_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        // Independent oracle: brute-force minor expansion.
        assert_eq!(minor_rank(&m), 2);
        assert_eq!(m.rank(), 2);
    }

    /// Brute-force rank via all square minors (test oracle, tiny sizes only).
    fn minor_rank(m: &RatMatrix) -> usize {
        let n = m.nrows().min(m.ncols());
        for size in (1..=n).rev() {
            for rows in subsets(m.nrows(), size) {
                for cols in subsets(m.ncols(), size) {
                    let sub: Vec<Vec<BigInt>> = rows
                        .iter()
                        .map(|&r| {
                            cols.iter()
                                .map(|&c| m.get(r, c).numerator().clone())
                                .collect()
                        })
                        .collect();
                    if !int_determinant(&sub).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    #[test]
    fn solve_unique_cases() {
        let id = RatMatrix::identity(2);
        let sol = solve_unique(&id, &[Rat::from_int(1), Rat::from_int(2)]).unwrap();
        assert_eq!(sol, vec![Rat::from_int(1), Rat::from_int(2)]);

        let wide = RatMatrix::from_int_rows(&[vec![1, 1]]);
        assert_eq!(
            solve_unique(&wide, &[Rat::from_int(1)]),
            Err(SolveError::NotUnique)
        );

        let bad = RatMatrix::from_int_rows(&[vec![1], vec![1]]);
        assert_eq!(
            solve_unique(&bad, &[Rat::from_int(0), Rat::from_int(1)]),
            Err(SolveError::NoSolution)
        );
    }

    #[test]
    fn solve_result_satisfies_system() {
        let m = RatMatrix::from_int_rows(&[vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 1]]);
        let rhs = vec![Rat::from_int(3), Rat::from_int(5), Rat::from_int(2)];
        let x = solve_unique(&m, &rhs).unwrap();
        assert_eq!(m.mul_vec(&x), rhs);
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(
            int_determinant_i64(&[vec![1, 0], vec![0, 1]]),
            BigInt::from(1)
        );
        assert_eq!(
            int_determinant_i64(&[vec![0, 1], vec![1, 0]]),
            BigInt::from(-1)
        );
        assert_eq!(
            int_determinant_i64(&[vec![2, 3, 1], vec![0, 1, 4], vec![5, 2, 0]]),
            cofactor_det(&[vec![2, 3, 1], vec![0, 1, 4], vec![5, 2, 0]])
        );
    }

    /// Cofactor-expansion determinant (test oracle).
    fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::from(1);
        }
        if n == 1 {
            return BigInt::from(m[0][0]);
        }
        let mut acc = BigInt::zero();
        for c in 0..n {
            if m[0][c] == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = (1..n)
                .map(|r| (0..n).filter(|&k| k != c).map(|k| m[r][k]).collect())
                .collect();
            let term = BigInt::from(m[0][c]) * cofactor_det(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn determinant_matches_cofactor_on_4x4() {
        let m = vec![
            vec![1, 2, 0, -1],
            vec![3, 0, 1, 2],
            vec![0, -2, 2, 1],
            vec![1, 1, 1, 1],
        ];
        assert_eq!(int_determinant_i64(&m), cofactor_det(&m));
    }

    #[test]
    fn smith_diagonal_basics() {
        assert_eq!(smith_diagonal(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(smith_diagonal(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_diagonal(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        // Boundary of an edge: unimodular.
        assert_eq!(smith_diagonal(&[vec![-1], vec![1]]), vec![1]);
    }

    #[test]
    fn kernel_of_hollow_triangle_boundary() {
        let m = RatMatrix::from_int_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(
            k[0],
            vec![Rat::from_int(1), Rat::from_int(-1), Rat::from_int(1)]
        );
    }

    #[test]
    fn rank_transpose_invariance() {
        let m = RatMatrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }
}
