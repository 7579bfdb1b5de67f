//! Brute-force evaluation of the resolution differential: a weighted sum
//! over lattice paths of chain-link fence weights.
//!
//! A hedgerow along a path fixes a stake set at the top degree, a hedge at
//! every interior degree, and a shrubbery at the bottom degree.  A fence
//! from an i-face τ (top) to an (i−1)-face σ (bottom) threads faces through
//! every point of the path:
//!
//! - τ is boundary-linked to τ₀ through the top hedge rim,
//! - each step removes the step direction: σ_{t+1} = τ_t ∖ {d_t}, with the
//!   coefficient of σ_{t+1} in ∂τ_t as weight,
//! - at interior points σ must be a stake, and chain-links to the faces of
//!   its shrub,
//! - at the bottom, σ_j cycle-links to σ through the circuit of σ_j.
//!
//! A fence whose next link has coefficient zero (or whose face leaves the
//! complex) terminates and is excluded.  The entry is
//! Σ over paths of (Σ over fences of the weight product) / (number of
//! hedgerows on the path).
//!
//! [`entry`]/[`matrix`] evaluate this sum with the per-point choices folded
//! into averaged transition matrices and common path prefixes shared; the
//! unfolded enumeration is kept as [`matrix_via_enumeration`] and the two
//! are tested against each other.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{removal_sign, Chain, Face, SimplicialComplex};
use crate::hedge::{
    self, circuit, det_squared, enumerate_hedges, enumerate_shrubberies, enumerate_stake_sets,
    hedge_rim, shrub, Hedge, Shrubbery, StakeSet,
};
use crate::ideal::{DegreeVector, MonomialIdeal};
use crate::koszul::koszul_complex;
use crate::lattice::{enumerate_paths, LatticePath};
use crate::rat::{Rat, RatMatrix};
use crate::sylvan::{sort_display, SylvanMatrix};

/// A hedgerow: per-point combinatorial choices along a path.
/// For the empty path every component is empty (the degenerate hedgerow).
#[derive(Clone, Debug)]
pub struct Hedgerow {
    /// Stake set of dimension i at the top degree.
    pub stake_at_top: StakeSet,
    /// Hedge of dimension i at each interior point, in path order.
    pub hedges: Vec<Hedge>,
    /// Shrubbery of dimension i−1 at the bottom degree.
    pub shrubbery_at_bottom: Shrubbery,
}

/// A chain-link fence with its total weight.
#[derive(Clone, Debug)]
pub struct ChainLinkFence {
    /// τ₀ (at the top) through τ_{j−1}.
    pub tau_seq: Vec<Face>,
    /// σ₁ through σ_j (at the bottom).
    pub sigma_seq: Vec<Face>,
    pub weight: Rat,
}

/// All hedgerows along a path (materialized; the count is the product of
/// the per-point choice counts, so keep this to short paths).
pub fn enumerate_hedgerows(ideal: &MonomialIdeal, path: &LatticePath, i: u8) -> Vec<Hedgerow> {
    let i = i as i32;
    if path.is_empty() {
        return vec![Hedgerow {
            stake_at_top: StakeSet {
                dim: i,
                faces: vec![],
            },
            hedges: vec![],
            shrubbery_at_bottom: Shrubbery {
                dim: i - 1,
                faces: vec![],
            },
        }];
    }
    let top = koszul_complex(ideal, &path.top());
    let bottom = koszul_complex(ideal, &path.bottom());
    let stakes = enumerate_stake_sets(&top, i);
    let shrubs = enumerate_shrubberies(&bottom, i - 1);
    let interior: Vec<Vec<Hedge>> = path.points()[1..path.points().len() - 1]
        .iter()
        .map(|p| enumerate_hedges(&koszul_complex(ideal, p), i))
        .collect();
    let mut out = Vec::new();
    let mut picks = vec![0usize; interior.len()];
    'outer: loop {
        for s in &stakes {
            for t in &shrubs {
                out.push(Hedgerow {
                    stake_at_top: s.clone(),
                    hedges: picks
                        .iter()
                        .zip(&interior)
                        .map(|(&k, h)| h[k].clone())
                        .collect(),
                    shrubbery_at_bottom: t.clone(),
                });
            }
        }
        // Next interior combination.
        for slot in 0..picks.len() {
            picks[slot] += 1;
            if picks[slot] < interior[slot].len() {
                continue 'outer;
            }
            picks[slot] = 0;
        }
        break;
    }
    out
}

/// Number of hedgerows along a path: the product of the per-point choice
/// counts (no materialization).
pub fn hedgerow_count(ideal: &MonomialIdeal, path: &LatticePath, i: u8) -> BigInt {
    let i = i as i32;
    if path.is_empty() {
        return BigInt::one();
    }
    let top = koszul_complex(ideal, &path.top());
    let bottom = koszul_complex(ideal, &path.bottom());
    let mut count = BigInt::from(enumerate_stake_sets(&top, i).len());
    for p in &path.points()[1..path.points().len() - 1] {
        let k = koszul_complex(ideal, p);
        count *= BigInt::from(enumerate_stake_sets(&k, i - 1).len())
            * BigInt::from(enumerate_shrubberies(&k, i).len());
    }
    count * BigInt::from(enumerate_shrubberies(&bottom, i - 1).len())
}

/// Δ along a path: the product over path points of the squared-determinant
/// sums (stake sets at the top, hedges at interior points, shrubberies at
/// the bottom).  Equals [`hedgerow_count`] whenever every restricted
/// boundary is unimodular.
pub fn delta_lambda(ideal: &MonomialIdeal, path: &LatticePath, i: u8) -> BigInt {
    let i = i as i32;
    if path.is_empty() {
        return BigInt::one();
    }
    let top = koszul_complex(ideal, &path.top());
    let bottom = koszul_complex(ideal, &path.bottom());
    let mut delta = hedge::delta_s(&top, i);
    for p in &path.points()[1..path.points().len() - 1] {
        delta *= hedge::delta_st(&koszul_complex(ideal, p), i);
    }
    delta * hedge::delta_t(&bottom, i - 1)
}

/// All chain-link fences from `tau` to `sigma` along a path, for one fixed
/// hedgerow.
pub fn enumerate_fences(
    ideal: &MonomialIdeal,
    path: &LatticePath,
    hedgerow: &Hedgerow,
    tau: Face,
    sigma: Face,
    i: u8,
) -> Vec<ChainLinkFence> {
    if path.is_empty() {
        return vec![];
    }
    assert_eq!(
        hedgerow.stake_at_top.dim, i as i32,
        "hedgerow dimension mismatch"
    );
    let complexes: Vec<SimplicialComplex> = path
        .points()
        .iter()
        .map(|p| koszul_complex(ideal, p))
        .collect();
    let top = &complexes[0];
    let bottom = complexes.last().unwrap();
    let len = path.len();
    let mut out = Vec::new();

    let rim = hedge_rim(top, &hedgerow.stake_at_top, tau);
    // DFS over (step index, current τ, accumulated weight, τ-trail, σ-trail);
    // the step at index t moves from point t to point t+1.
    type FenceState = (usize, Face, Rat, Vec<Face>, Vec<Face>);
    let mut stack: Vec<FenceState> = rim
        .terms()
        .map(|(tau0, w)| (0usize, *tau0, w.clone(), vec![*tau0], vec![]))
        .collect();
    while let Some((t, cur_tau, w, taus, sigmas)) = stack.pop() {
        let d = path.step_dir(t);
        if !cur_tau.contains_vertex(d) {
            continue; // the fence terminates
        }
        let s = cur_tau.remove_vertex(d);
        let w = &w * &Rat::from_int(removal_sign(cur_tau, d) as i64);
        let mut sigmas = sigmas;
        sigmas.push(s);
        if t + 1 == len {
            // Bottom of the path: cycle-link σ_j to σ.
            let z = circuit(bottom, &hedgerow.shrubbery_at_bottom, s)
                .expect("circuit exists for every bottom face");
            let c = z.coeff(&sigma);
            if !c.is_zero() {
                out.push(ChainLinkFence {
                    tau_seq: taus,
                    sigma_seq: sigmas,
                    weight: &w * &c,
                });
            }
            continue;
        }
        // Interior point t+1: σ must be a stake there; chain-link to the
        // faces of its shrub.
        let hedge = &hedgerow.hedges[t];
        if !hedge.stakes.faces.contains(&s) {
            continue;
        }
        let sh = shrub(&complexes[t + 1], hedge, s).expect("stake has a shrub");
        for (next_tau, c) in sh.terms() {
            let mut taus = taus.clone();
            taus.push(*next_tau);
            stack.push((t + 1, *next_tau, &w * c, taus, sigmas.clone()));
        }
    }
    out
}

/// Per-degree transition data for the folded evaluation, all in the
/// ascending orientation.
struct PointCtx {
    i_faces: Vec<Face>,
    im1_faces: Vec<Face>,
    /// Averaged chain-link: [τ', σ'] = Σ_hedges [σ' stake]·(shrub coeff on τ') / #hedges.
    chain: RatMatrix,
}

/// Evaluation context for one ideal and one homological index; memoizes
/// per-degree combinatorics.
pub struct Oracle<'a> {
    ideal: &'a MonomialIdeal,
    i: i32,
    points: HashMap<DegreeVector, PointCtx>,
    tops: HashMap<DegreeVector, (Vec<Face>, RatMatrix)>,
    bottoms: HashMap<DegreeVector, (Vec<Face>, RatMatrix)>,
}

impl<'a> Oracle<'a> {
    pub fn new(ideal: &'a MonomialIdeal, i: u8) -> Self {
        Oracle {
            ideal,
            i: i as i32,
            points: HashMap::new(),
            tops: HashMap::new(),
            bottoms: HashMap::new(),
        }
    }

    fn point(&mut self, c: DegreeVector) -> &PointCtx {
        let (ideal, i) = (self.ideal, self.i);
        self.points.entry(c).or_insert_with(|| {
            let k = koszul_complex(ideal, &c);
            let i_faces = k.faces_of_dim(i);
            let im1_faces = k.faces_of_dim(i - 1);
            let stakes = enumerate_stake_sets(&k, i - 1);
            let shrubs = enumerate_shrubberies(&k, i);
            for s in &stakes {
                assert!(
                    det_squared(&k, &s.faces, i - 1).is_one(),
                    "torsion in a stake set"
                );
            }
            for t in &shrubs {
                assert!(
                    det_squared(&k, &t.faces, i).is_one(),
                    "torsion in a shrubbery"
                );
            }
            let count = Rat::from_int((stakes.len() * shrubs.len()) as i64);
            let mut chain = RatMatrix::zeros(i_faces.len(), im1_faces.len());
            for s in &stakes {
                for t in &shrubs {
                    let hedge = Hedge {
                        stakes: s.clone(),
                        shrubbery: t.clone(),
                    };
                    for (sj, sf) in im1_faces.iter().enumerate() {
                        if !s.faces.contains(sf) {
                            continue;
                        }
                        let sh = shrub(&k, &hedge, *sf).expect("stake has a shrub");
                        for (tf, c) in sh.terms() {
                            let ti = i_faces.iter().position(|f| f == tf).unwrap();
                            let v = chain.get(ti, sj) + &(c / &count);
                            chain.set(ti, sj, v);
                        }
                    }
                }
            }
            PointCtx {
                i_faces,
                im1_faces,
                chain,
            }
        })
    }

    /// Averaged boundary-link at the top degree: [τ₀, τ].
    fn top(&mut self, b: DegreeVector) -> &(Vec<Face>, RatMatrix) {
        let (ideal, i) = (self.ideal, self.i);
        self.tops.entry(b).or_insert_with(|| {
            let k = koszul_complex(ideal, &b);
            let i_faces = k.faces_of_dim(i);
            let stakes = enumerate_stake_sets(&k, i);
            for s in &stakes {
                assert!(
                    det_squared(&k, &s.faces, i).is_one(),
                    "torsion in a stake set"
                );
            }
            let count = Rat::from_int(stakes.len() as i64);
            let mut m = RatMatrix::zeros(i_faces.len(), i_faces.len());
            for s in &stakes {
                for (tj, tf) in i_faces.iter().enumerate() {
                    let rim = hedge_rim(&k, s, *tf);
                    for (rf, c) in rim.terms() {
                        let ri = i_faces.iter().position(|f| f == rf).unwrap();
                        let v = m.get(ri, tj) + &(c / &count);
                        m.set(ri, tj, v);
                    }
                }
            }
            (i_faces, m)
        })
    }

    /// Averaged cycle-link at the bottom degree: [σ, σ'].
    fn bottom(&mut self, a: DegreeVector) -> &(Vec<Face>, RatMatrix) {
        let (ideal, i) = (self.ideal, self.i);
        self.bottoms.entry(a).or_insert_with(|| {
            let k = koszul_complex(ideal, &a);
            let im1_faces = k.faces_of_dim(i - 1);
            let shrubs = enumerate_shrubberies(&k, i - 1);
            for t in &shrubs {
                assert!(
                    det_squared(&k, &t.faces, i - 1).is_one(),
                    "torsion in a shrubbery"
                );
            }
            let count = Rat::from_int(shrubs.len() as i64);
            let mut m = RatMatrix::zeros(im1_faces.len(), im1_faces.len());
            for t in &shrubs {
                for (sj, sf) in im1_faces.iter().enumerate() {
                    let z = circuit(&k, t, *sf).expect("circuit exists");
                    for (zf, c) in z.terms() {
                        let zi = im1_faces.iter().position(|f| f == zf).unwrap();
                        let v = m.get(zi, sj) + &(c / &count);
                        m.set(zi, sj, v);
                    }
                }
            }
            (im1_faces, m)
        })
    }

    /// Containment step: push a τ-vector at `c` through the step `d` into a
    /// σ-vector at `c − e_d`.
    fn containment(&mut self, c: DegreeVector, v: &[Rat], d: usize, c2: DegreeVector) -> Vec<Rat> {
        let faces: Vec<Face> = self.point(c).i_faces.clone();
        let target = self.point(c2).im1_faces.clone();
        let mut u = vec![Rat::zero(); target.len()];
        for (fi, f) in faces.iter().enumerate() {
            if v[fi].is_zero() || !f.contains_vertex(d) {
                continue;
            }
            let s = f.remove_vertex(d);
            let j = target
                .iter()
                .position(|g| *g == s)
                .expect("containment face stays in the complex");
            u[j] = &u[j] + &(&v[fi] * &Rat::from_int(removal_sign(*f, d) as i64));
        }
        u
    }

    /// The full matrix D^{a,b} in ascending coordinates:
    /// rows = (i−1)-faces of K^a, cols = i-faces of K^b.
    fn matrix_ascending(
        &mut self,
        a: DegreeVector,
        b: DegreeVector,
    ) -> (Vec<Face>, Vec<Face>, RatMatrix) {
        let col_faces = self.top(b).0.clone();
        let row_faces = self.bottom(a).0.clone();
        let mut out = RatMatrix::zeros(row_faces.len(), col_faces.len());
        if !a.lt(&b) {
            return (row_faces, col_faces, out);
        }
        let top_m = self.top(b).1.clone();
        for (cj, _tau) in col_faces.iter().enumerate() {
            let v0: Vec<Rat> = (0..col_faces.len())
                .map(|r| top_m.get(r, cj).clone())
                .collect();
            let mut acc = vec![Rat::zero(); row_faces.len()];
            self.dfs(b, v0, a, &mut acc);
            for (ri, val) in acc.into_iter().enumerate() {
                out.set(ri, cj, val);
            }
        }
        (row_faces, col_faces, out)
    }

    fn dfs(&mut self, c: DegreeVector, v: Vec<Rat>, a: DegreeVector, acc: &mut Vec<Rat>) {
        for d in 0..3 {
            if c.0[d] <= a.0[d] {
                continue;
            }
            let c2 = c.minus_unit(d).unwrap();
            let u = self.containment(c, &v, d, c2);
            if u.iter().all(Rat::is_zero) {
                continue;
            }
            if c2 == a {
                let m = self.bottom(a).1.clone();
                let add = m.mul_vec(&u);
                for (i, val) in add.into_iter().enumerate() {
                    acc[i] = &acc[i] + &val;
                }
            } else {
                let v2 = self.point(c2).chain.clone().mul_vec(&u);
                if !v2.iter().all(Rat::is_zero) {
                    self.dfs(c2, v2, a, acc);
                }
            }
        }
    }

    /// The contribution of a single path, in ascending coordinates.
    fn path_matrix_ascending(&mut self, path: &LatticePath) -> (Vec<Face>, Vec<Face>, RatMatrix) {
        let b = path.top();
        let a = path.bottom();
        let col_faces = self.top(b).0.clone();
        let row_faces = self.bottom(a).0.clone();
        let mut out = RatMatrix::zeros(row_faces.len(), col_faces.len());
        if path.is_empty() {
            return (row_faces, col_faces, out);
        }
        let top_m = self.top(b).1.clone();
        for cj in 0..col_faces.len() {
            let mut v: Vec<Rat> = (0..col_faces.len())
                .map(|r| top_m.get(r, cj).clone())
                .collect();
            let mut cur = b;
            let mut dead = false;
            for t in 0..path.len() {
                let d = path.step_dir(t);
                let c2 = path.points()[t + 1];
                let u = self.containment(cur, &v, d, c2);
                if u.iter().all(Rat::is_zero) {
                    dead = true;
                    break;
                }
                if t + 1 == path.len() {
                    let m = self.bottom(a).1.clone();
                    for (ri, val) in m.mul_vec(&u).into_iter().enumerate() {
                        out.set(ri, cj, val);
                    }
                } else {
                    v = self.point(c2).chain.clone().mul_vec(&u);
                    if v.iter().all(Rat::is_zero) {
                        dead = true;
                        break;
                    }
                }
                cur = c2;
            }
            let _ = dead;
        }
        (row_faces, col_faces, out)
    }
}

/// One entry of the differential between degrees `a` and `b`.
pub fn entry(
    ideal: &MonomialIdeal,
    a: &DegreeVector,
    b: &DegreeVector,
    i: u8,
    sigma: Face,
    tau: Face,
) -> Rat {
    matrix(ideal, a, b, i).entry(sigma, tau).clone()
}

/// The full differential block between degrees `a` and `b`, in the display
/// basis.  Degrees with a ⪯̸ b (including a = b) give the zero block.
pub fn matrix(ideal: &MonomialIdeal, a: &DegreeVector, b: &DegreeVector, i: u8) -> SylvanMatrix {
    let mut oracle = Oracle::new(ideal, i);
    matrix_with(&mut oracle, a, b)
}

/// As [`matrix`], reusing a memoized context across calls.
pub fn matrix_with(oracle: &mut Oracle<'_>, a: &DegreeVector, b: &DegreeVector) -> SylvanMatrix {
    let i = oracle.i;
    let (rows_asc, cols_asc, asc) = oracle.matrix_ascending(*a, *b);
    reorder_to_display(*a, *b, i as u8, rows_asc, cols_asc, asc)
}

/// The contribution of one path, in the display basis.
pub fn path_contribution_matrix(ideal: &MonomialIdeal, path: &LatticePath, i: u8) -> SylvanMatrix {
    let mut oracle = Oracle::new(ideal, i);
    let (rows_asc, cols_asc, asc) = oracle.path_matrix_ascending(path);
    reorder_to_display(path.bottom(), path.top(), i, rows_asc, cols_asc, asc)
}

fn reorder_to_display(
    a: DegreeVector,
    b: DegreeVector,
    i: u8,
    rows_asc: Vec<Face>,
    cols_asc: Vec<Face>,
    asc: RatMatrix,
) -> SylvanMatrix {
    let rows = sort_display(&rows_asc, i as i32 - 1);
    let cols = sort_display(&cols_asc, i as i32);
    let mut m = RatMatrix::zeros(rows.len(), cols.len());
    for (ri, rf) in rows.iter().enumerate() {
        let r0 = rows_asc.iter().position(|f| f == rf).unwrap();
        for (ci, cf) in cols.iter().enumerate() {
            let c0 = cols_asc.iter().position(|f| f == cf).unwrap();
            m.set(ri, ci, asc.get(r0, c0).clone());
        }
    }
    SylvanMatrix::from_ascending(b, a, i, rows, cols, m)
}

/// Reference evaluation: enumerate every path, hedgerow, and fence
/// literally and sum the weights.  Exponential in the path data; used to
/// validate the folded evaluation on small examples.
pub fn matrix_via_enumeration(
    ideal: &MonomialIdeal,
    a: &DegreeVector,
    b: &DegreeVector,
    i: u8,
) -> SylvanMatrix {
    let ka = koszul_complex(ideal, a);
    let kb = koszul_complex(ideal, b);
    let rows = sort_display(&ka.faces_of_dim(i as i32 - 1), i as i32 - 1);
    let cols = sort_display(&kb.faces_of_dim(i as i32), i as i32);
    let mut asc = RatMatrix::zeros(rows.len(), cols.len());
    if a.lt(b) {
        for path in enumerate_paths(a, b).unwrap() {
            let delta = delta_lambda(ideal, &path, i);
            let delta = Rat::new(BigInt::one(), delta);
            for hedgerow in enumerate_hedgerows(ideal, &path, i) {
                for (ci, tau) in cols.iter().enumerate() {
                    for (ri, sigma) in rows.iter().enumerate() {
                        for fence in enumerate_fences(ideal, &path, &hedgerow, *tau, *sigma, i) {
                            let v = asc.get(ri, ci) + &(&fence.weight * &delta);
                            asc.set(ri, ci, v);
                        }
                    }
                }
            }
        }
    }
    SylvanMatrix::from_ascending(*b, *a, i, rows, cols, asc)
}

/// Chains image of a chain under the block (ascending orientation), for
/// resolution assembly.
pub fn apply_ascending(m: &SylvanMatrix, chain: &Chain) -> Chain {
    let asc = m.ascending_entries();
    let col_vec = chain.to_vec(&m.cols);
    let img = asc.mul_vec(&col_vec);
    Chain::from_vec(m.hom_index as i32 - 1, &m.rows, &img)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s).unwrap()
    }

    fn dv(x: u32, y: u32, z: u32) -> DegreeVector {
        DegreeVector::new(x, y, z)
    }

    fn rat(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn hedgerow_counts_match_delta() {
        let i = ideal("xy, y^3, z");
        let path = LatticePath::from_steps(dv(1, 3, 1), &[1, 1]);
        let rows = enumerate_hedgerows(&i, &path, 1);
        assert_eq!(rows.len(), 9);
        assert_eq!(hedgerow_count(&i, &path, 1), BigInt::from(9));
        assert_eq!(delta_lambda(&i, &path, 1), BigInt::from(9));
    }

    #[test]
    fn single_vertex_chain_has_one_hedgerow() {
        // Straight drop where every complex past the top has one vertex.
        let i = ideal("xy, y^3, z");
        let path = LatticePath::from_steps(dv(0, 1, 1), &[1]);
        assert_eq!(enumerate_hedgerows(&i, &path, 0).len(), 1);
        assert_eq!(delta_lambda(&i, &path, 0), BigInt::one());
    }

    #[test]
    fn empty_path_has_one_trivial_hedgerow() {
        let i = ideal("xy, y^3, z");
        let path = LatticePath::from_steps(dv(1, 3, 1), &[]);
        assert_eq!(enumerate_hedgerows(&i, &path, 1).len(), 1);
        assert_eq!(delta_lambda(&i, &path, 1), BigInt::one());
    }

    #[test]
    fn isolated_vertex_line_has_single_unit_fence() {
        // Straight drop along z to a generator: one hedgerow, one fence,
        // weight 1.
        let i = ideal("xy, y^3, z");
        let path = LatticePath::from_steps(dv(1, 1, 1), &[2]);
        let rows = enumerate_hedgerows(&i, &path, 0);
        let mut found = 0;
        for hr in &rows {
            let fences = enumerate_fences(&i, &path, hr, Face::vertex(2), Face::EMPTY, 0);
            for f in &fences {
                assert_eq!(f.weight, Rat::one());
                found += 1;
            }
        }
        assert_eq!(found, rows.len()); // every stake-set choice carries one fence
        assert_eq!(
            entry(
                &i,
                &dv(1, 1, 0),
                &dv(1, 1, 1),
                0,
                Face::EMPTY,
                Face::vertex(2)
            ),
            Rat::one()
        );
    }

    #[test]
    fn fence_with_wrong_initial_post_terminates() {
        // First step is y, so a fence from the edge xz dies immediately.
        let i = ideal("xy, y^3, z");
        let path = LatticePath::from_steps(dv(1, 3, 1), &[1, 1]);
        for hr in enumerate_hedgerows(&i, &path, 1) {
            for sigma in [Face::vertex(0), Face::vertex(1), Face::vertex(2)] {
                assert!(enumerate_fences(&i, &path, &hr, Face::edge(0, 2), sigma, 1).is_empty());
            }
        }
    }

    #[test]
    fn staircase_entry_five_eighths() {
        let i = ideal("x^3z, xyz, y^2z, x^3y^2, x^2y^3");
        let a = dv(1, 1, 1);
        let b = dv(3, 2, 1);
        assert_eq!(
            entry(&i, &a, &b, 0, Face::EMPTY, Face::vertex(0)),
            rat("5/8")
        );
        assert_eq!(
            entry(&i, &a, &b, 0, Face::EMPTY, Face::vertex(1)),
            rat("5/8")
        );
        assert_eq!(
            entry(&i, &dv(3, 0, 1), &b, 0, Face::EMPTY, Face::vertex(0)),
            rat("1/4")
        );
        assert_eq!(
            entry(&i, &dv(0, 2, 1), &b, 0, Face::EMPTY, Face::vertex(0)),
            rat("1/8")
        );
    }

    #[test]
    fn hollow_to_edge_entry_four_ninths() {
        let i = ideal("xy, y^3, z");
        let v = entry(
            &i,
            &dv(1, 1, 1),
            &dv(1, 3, 1),
            1,
            Face::vertex(0),
            Face::edge(1, 2),
        );
        assert_eq!(v, rat("4/9"));
    }

    #[test]
    fn folded_matches_literal_enumeration() {
        let i = ideal("xy, y^3, z");
        for (a, b, hom) in [
            (dv(1, 1, 1), dv(1, 3, 1), 1u8),
            (dv(1, 3, 0), dv(1, 3, 1), 1),
            (dv(0, 3, 1), dv(1, 3, 1), 1),
            (dv(1, 1, 0), dv(1, 1, 1), 0),
            (dv(0, 0, 1), dv(1, 1, 1), 0),
            (dv(0, 0, 1), dv(0, 3, 1), 0),
        ] {
            let fast = matrix(&i, &a, &b, hom);
            let slow = matrix_via_enumeration(&i, &a, &b, hom);
            assert_eq!(fast, slow, "mismatch at ({a:?},{b:?},{hom})");
        }
    }

    #[test]
    fn empty_and_incomparable_blocks_are_zero() {
        let i = ideal("xy, y^3, z");
        let m = matrix(&i, &dv(1, 3, 1), &dv(1, 3, 1), 1);
        assert!(m.is_zero());
        let m = matrix(&i, &dv(2, 0, 0), &dv(1, 3, 1), 1);
        assert!(m.is_zero());
    }

    #[test]
    fn path_contributions_sum_to_matrix() {
        let i = ideal("yz, xz, xy^2, x^2y");
        let a = dv(1, 1, 1);
        let b = dv(2, 2, 1);
        let total = matrix(&i, &a, &b, 1);
        let mut acc = RatMatrix::zeros(total.rows.len(), total.cols.len());
        for path in enumerate_paths(&a, &b).unwrap() {
            let part = path_contribution_matrix(&i, &path, 1);
            for r in 0..acc.nrows() {
                for c in 0..acc.ncols() {
                    let v = acc.get(r, c) + part.display_entries().get(r, c);
                    acc.set(r, c, v);
                }
            }
        }
        assert_eq!(&acc, total.display_entries());
    }
}
