//! Shrubberies, stake sets, hedges, and the chains they determine:
//! circuits, shrubs, and hedge rims, plus the squared-determinant counting
//! quantities used to weight fence sums.
//!
//! A shrubbery in dimension i is a set of i-faces whose boundaries form a
//! basis of the (i−1)-boundaries — the higher-dimensional analogue of a
//! spanning forest.  A stake set in dimension i−1 is a set of (i−1)-faces
//! whose complement descends to a basis of chains modulo boundaries.
//! Everything here works on arbitrary complexes with at most eight vertices,
//! not just Koszul complexes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{Chain, Face, SimplicialComplex};
use crate::rat::{self, Rat, RatMatrix};

#[derive(Clone, PartialEq, Eq)]
pub struct Shrubbery {
    pub dim: i32,
    pub faces: Vec<Face>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct StakeSet {
    pub dim: i32,
    pub faces: Vec<Face>,
}

/// A stake set in dimension i−1 paired with a shrubbery in dimension i.
#[derive(Clone, PartialEq, Eq)]
pub struct Hedge {
    pub stakes: StakeSet,
    pub shrubbery: Shrubbery,
}

impl fmt::Debug for Shrubbery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}{:?}", self.dim, self.faces)
    }
}

impl fmt::Debug for StakeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}{:?}", self.dim, self.faces)
    }
}

impl fmt::Debug for Hedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.stakes, self.shrubbery)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HedgeError {
    NotAStake(Face),
    NoCircuit(Face),
}

impl fmt::Display for HedgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HedgeError::NotAStake(face) => write!(f, "{face:?} is not a stake"),
            HedgeError::NoCircuit(face) => write!(f, "no circuit through {face:?}"),
        }
    }
}

impl std::error::Error for HedgeError {}

fn subsets_of_size(items: &[Face], k: usize) -> Vec<Vec<Face>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[Face], start: usize, k: usize, cur: &mut Vec<Face>, out: &mut Vec<Vec<Face>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        if items.len() - start < k - cur.len() {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(items, 0, k, &mut cur, &mut out);
    out
}

fn columns(m: &RatMatrix, idx: &[usize]) -> RatMatrix {
    let mut out = RatMatrix::zeros(m.nrows(), idx.len());
    for (j, &c) in idx.iter().enumerate() {
        for r in 0..m.nrows() {
            out.set(r, j, m.get(r, c).clone());
        }
    }
    out
}

/// All shrubberies of dimension `i`: subsets T of the i-faces, of size
/// rank ∂_i, whose boundary columns are independent.
pub fn enumerate_shrubberies(k: &SimplicialComplex, i: i32) -> Vec<Shrubbery> {
    let faces = k.faces_of_dim(i);
    let bd = k.boundary_matrix(i);
    let target = bd.rank();
    let mut out = Vec::new();
    for subset in subsets_of_size(&faces, target) {
        let idx: Vec<usize> = subset
            .iter()
            .map(|f| faces.iter().position(|g| g == f).unwrap())
            .collect();
        if columns(&bd, &idx).rank() == target {
            out.push(Shrubbery {
                dim: i,
                faces: subset,
            });
        }
    }
    out
}

/// All stake sets of dimension `d`: subsets S of the d-faces such that the
/// classes of the complementary faces form a basis of C_d / B_d
/// (boundaries taken from dimension d+1).
pub fn enumerate_stake_sets(k: &SimplicialComplex, d: i32) -> Vec<StakeSet> {
    let faces = k.faces_of_dim(d);
    let bd_above = k.boundary_matrix(d + 1);
    let rank_b = bd_above.rank();
    let n = faces.len();
    let mut out = Vec::new();
    for subset in subsets_of_size(&faces, rank_b) {
        // Complement indicator columns together with the boundary columns
        // must span all of C_d.
        let mut m = RatMatrix::zeros(n, (n - rank_b) + bd_above.ncols());
        let mut col = 0;
        for (fi, f) in faces.iter().enumerate() {
            if !subset.contains(f) {
                m.set(fi, col, Rat::one());
                col += 1;
            }
        }
        for c in 0..bd_above.ncols() {
            for r in 0..n {
                m.set(r, col + c, bd_above.get(r, c).clone());
            }
        }
        if m.rank() == n {
            out.push(StakeSet {
                dim: d,
                faces: subset,
            });
        }
    }
    out
}

/// All hedges of dimension i: pairs of a stake set in dimension i−1 and a
/// shrubbery in dimension i.
pub fn enumerate_hedges(k: &SimplicialComplex, i: i32) -> Vec<Hedge> {
    let stakes = enumerate_stake_sets(k, i - 1);
    let shrubs = enumerate_shrubberies(k, i);
    let mut out = Vec::new();
    for s in &stakes {
        for t in &shrubs {
            out.push(Hedge {
                stakes: s.clone(),
                shrubbery: t.clone(),
            });
        }
    }
    out
}

/// The circuit of τ with respect to a shrubbery T: the unique cycle of the
/// form τ − t with t supported on T.  For τ ∈ T the defining form collapses,
/// and the circuit is taken to be zero (such faces link to nothing).
pub fn circuit(
    k: &SimplicialComplex,
    shrubbery: &Shrubbery,
    tau: Face,
) -> Result<Chain, HedgeError> {
    assert_eq!(tau.dim(), shrubbery.dim);
    if shrubbery.faces.contains(&tau) {
        return Ok(Chain::zero(tau.dim()));
    }
    let i = shrubbery.dim;
    let rows = k.faces_of_dim(i - 1);
    let bd = k.boundary_matrix(i);
    let all = k.faces_of_dim(i);
    let idx: Vec<usize> = shrubbery
        .faces
        .iter()
        .map(|f| all.iter().position(|g| g == f).unwrap())
        .collect();
    let m = columns(&bd, &idx);
    let rhs = Chain::single(tau).boundary().to_vec(&rows);
    let t = rat::solve_unique(&m, &rhs).map_err(|_| HedgeError::NoCircuit(tau))?;
    let mut out = Chain::single(tau);
    for (c, f) in t.iter().zip(&shrubbery.faces) {
        out.add_term(*f, -c);
    }
    Ok(out)
}

/// The shrub of a stake σ in a hedge (S_{i−1}, T_i): the unique chain
/// supported on T_i whose boundary has coefficient 1 on σ and 0 on every
/// other stake.
pub fn shrub(k: &SimplicialComplex, hedge: &Hedge, sigma: Face) -> Result<Chain, HedgeError> {
    if !hedge.stakes.faces.contains(&sigma) {
        return Err(HedgeError::NotAStake(sigma));
    }
    let i = hedge.shrubbery.dim;
    let rows_all = k.faces_of_dim(i - 1);
    let bd = k.boundary_matrix(i);
    let all = k.faces_of_dim(i);
    let idx: Vec<usize> = hedge
        .shrubbery
        .faces
        .iter()
        .map(|f| all.iter().position(|g| g == f).unwrap())
        .collect();
    let restricted = columns(&bd, &idx);
    // Keep only the stake rows; the system is square and invertible for a
    // valid hedge.
    let stake_rows: Vec<usize> = hedge
        .stakes
        .faces
        .iter()
        .map(|f| rows_all.iter().position(|g| g == f).unwrap())
        .collect();
    let mut m = RatMatrix::zeros(stake_rows.len(), idx.len());
    for (r, &sr) in stake_rows.iter().enumerate() {
        for c in 0..idx.len() {
            m.set(r, c, restricted.get(sr, c).clone());
        }
    }
    let mut rhs = vec![Rat::zero(); stake_rows.len()];
    let pos = hedge.stakes.faces.iter().position(|f| *f == sigma).unwrap();
    rhs[pos] = Rat::one();
    let sol = rat::solve_unique(&m, &rhs).expect("hedge defines a unique shrub");
    Ok(Chain::from_terms(
        i,
        hedge.shrubbery.faces.iter().copied().zip(sol),
    ))
}

/// The hedge rim of τ with respect to a stake set S in the dimension of τ:
/// the unique chain supported off the stakes with τ − r(τ) a boundary.
pub fn hedge_rim(k: &SimplicialComplex, stakes: &StakeSet, tau: Face) -> Chain {
    assert_eq!(tau.dim(), stakes.dim);
    let d = stakes.dim;
    let faces = k.faces_of_dim(d);
    let complement: Vec<Face> = faces
        .iter()
        .filter(|f| !stakes.faces.contains(f))
        .copied()
        .collect();
    let bd_above = k.boundary_matrix(d + 1);
    // Solve  τ = Σ r_f · f + ∂(η)  for the complement coefficients r_f.
    let mut m = RatMatrix::zeros(faces.len(), complement.len() + bd_above.ncols());
    for (j, f) in complement.iter().enumerate() {
        let fi = faces.iter().position(|g| g == f).unwrap();
        m.set(fi, j, Rat::one());
    }
    for c in 0..bd_above.ncols() {
        for r in 0..faces.len() {
            m.set(r, complement.len() + c, bd_above.get(r, c).clone());
        }
    }
    let rhs = Chain::single(tau).to_vec(&faces);
    let (sol, _) = rat::solve(&m, &rhs).expect("stake-set complement spans chains mod boundaries");
    Chain::from_terms(
        d,
        complement
            .iter()
            .copied()
            .zip(sol.into_iter().take(complement.len())),
    )
}

/// Squared determinant of the boundary restricted to a face collection,
/// via the Smith normal form diagonal: the square of the product of the
/// invariant factors (equivalently, the squared order of the torsion this
/// collection spans).
pub fn det_squared(k: &SimplicialComplex, faces: &[Face], d: i32) -> BigInt {
    if faces.is_empty() {
        return BigInt::one();
    }
    let all = k.faces_of_dim(d);
    let full = k.boundary_matrix_int(d);
    let idx: Vec<usize> = faces
        .iter()
        .map(|f| all.iter().position(|g| g == f).unwrap())
        .collect();
    let rows = full.len();
    let m: Vec<Vec<i64>> = (0..rows)
        .map(|r| idx.iter().map(|&c| full[r][c]).collect())
        .collect();
    let prod: i64 = rat::smith_diagonal(&m).iter().product();
    let p = BigInt::from(prod);
    &p * &p
}

/// Σ det² over all shrubberies of dimension i.
pub fn delta_t(k: &SimplicialComplex, i: i32) -> BigInt {
    enumerate_shrubberies(k, i)
        .iter()
        .map(|t| det_squared(k, &t.faces, i))
        .sum()
}

/// Σ det² over all stake sets of dimension d.
pub fn delta_s(k: &SimplicialComplex, d: i32) -> BigInt {
    enumerate_stake_sets(k, d)
        .iter()
        .map(|s| det_squared(k, &s.faces, d))
        .sum()
}

/// Δ for hedges of dimension i: (Σ over stake sets in dim i−1)·(Σ over
/// shrubberies in dim i).
pub fn delta_st(k: &SimplicialComplex, i: i32) -> BigInt {
    delta_s(k, i - 1) * delta_t(k, i)
}

/// True iff every shrubbery and every stake set of the complex has
/// restricted-boundary determinant ±1 (no torsion anywhere).
pub fn verify_unimodular(k: &SimplicialComplex) -> bool {
    let one = BigInt::one();
    for i in 0..=k.dim() {
        for t in enumerate_shrubberies(k, i) {
            if det_squared(k, &t.faces, i) != one {
                return false;
            }
        }
        for s in enumerate_stake_sets(k, i - 1) {
            if det_squared(k, &s.faces, i - 1) != one {
                return false;
            }
        }
    }
    true
}
