//! Saturated decreasing lattice paths in ℕ³ and the sequences of Koszul
//! complex shapes along them.

use std::fmt;

use crate::ideal::{DegreeVector, MonomialIdeal};
use crate::koszul::{classify_shape, koszul_complex, reduced_homology_dims, KoszulShape};

/// A saturated decreasing lattice path, stored as its full point sequence
/// from the top degree `b` down to `a` (both included).
#[derive(Clone, PartialEq, Eq)]
pub struct LatticePath {
    points: Vec<DegreeVector>,
}

impl LatticePath {
    /// Build from consecutive points; each step must subtract one unit
    /// vector.
    pub fn new(points: Vec<DegreeVector>) -> LatticePath {
        assert!(!points.is_empty());
        for w in points.windows(2) {
            let diff = w[0].checked_sub(&w[1]).expect("path must decrease");
            assert_eq!(diff.degree_sum(), 1, "path must be saturated");
        }
        LatticePath { points }
    }

    /// Path from `b` following the given step directions.
    pub fn from_steps(b: DegreeVector, steps: &[usize]) -> LatticePath {
        let mut points = vec![b];
        let mut cur = b;
        for &d in steps {
            cur = cur.minus_unit(d).expect("step below zero");
            points.push(cur);
        }
        LatticePath { points }
    }

    pub fn top(&self) -> DegreeVector {
        self.points[0]
    }

    pub fn bottom(&self) -> DegreeVector {
        *self.points.last().unwrap()
    }

    pub fn points(&self) -> &[DegreeVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Direction of the t-th step (0-based).
    pub fn step_dir(&self, t: usize) -> usize {
        let diff = self.points[t].checked_sub(&self.points[t + 1]).unwrap();
        diff.support()[0]
    }

    pub fn step_dirs(&self) -> Vec<usize> {
        (0..self.len()).map(|t| self.step_dir(t)).collect()
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points.iter().map(|p| p.compact()).collect();
        write!(f, "{}", pts.join("→"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// The endpoints are not comparable (a ⪯ b fails).
    NotComparable(DegreeVector, DegreeVector),
    /// A precondition of the taxonomy check fails.
    PreconditionFailed(String),
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotComparable(a, b) => write!(f, "{a} is not below {b}"),
            LatticeError::PreconditionFailed(msg) => write!(f, "precondition failed: {msg}"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// All saturated decreasing lattice paths from `b` down to `a`, in
/// lexicographic order of their step-direction sequences (x < y < z).
pub fn enumerate_paths(
    a: &DegreeVector,
    b: &DegreeVector,
) -> Result<Vec<LatticePath>, LatticeError> {
    if !a.leq(b) {
        return Err(LatticeError::NotComparable(*a, *b));
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    fn rec(
        cur: DegreeVector,
        a: &DegreeVector,
        b: &DegreeVector,
        steps: &mut Vec<usize>,
        out: &mut Vec<LatticePath>,
    ) {
        if cur == *a {
            out.push(LatticePath::from_steps(*b, steps));
            return;
        }
        for d in 0..3 {
            if cur.0[d] > a.0[d] {
                steps.push(d);
                rec(cur.minus_unit(d).unwrap(), a, b, steps, out);
                steps.pop();
            }
        }
    }
    rec(*b, a, b, &mut steps, &mut out);
    Ok(out)
}

/// Number of paths from b to a: the multinomial coefficient of b − a.
pub fn path_count(a: &DegreeVector, b: &DegreeVector) -> Option<u128> {
    let d = b.checked_sub(a)?;
    let total = d.degree_sum() as u128;
    let mut count = 1u128;
    let mut rem = total;
    for k in 0..3 {
        let dk = d.0[k] as u128;
        count *= binomial(rem, dk);
        rem -= dk;
    }
    Some(count)
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The shape sequence and statistics of a path: how many interior points
/// carry each Koszul shape, and the first point whose complex has at most
/// one vertex.
#[derive(Clone)]
pub struct PathProfile {
    pub shapes: Vec<KoszulShape>,
    /// Interior points shaped as two edges through the first step direction.
    pub r: usize,
    /// Interior points shaped as a single edge.
    pub s: usize,
    /// Interior points shaped as an edge plus an isolated vertex.
    pub m: usize,
    /// First point along the path (from the top) whose Koszul complex has at
    /// most one vertex; the bottom point if none occurs earlier.
    pub b_lambda: DegreeVector,
}

/// Compute the profile of a path; shapes are evaluated at every point,
/// r/s/m are counted over interior points only.
pub fn profile(ideal: &MonomialIdeal, path: &LatticePath) -> PathProfile {
    let shapes: Vec<KoszulShape> = path
        .points()
        .iter()
        .map(|p| classify_shape(&koszul_complex(ideal, p)))
        .collect();
    let mut r = 0;
    let mut s = 0;
    let mut m = 0;
    for shape in shapes
        .iter()
        .take(path.points().len().saturating_sub(1))
        .skip(1)
    {
        match shape {
            KoszulShape::TwoEdges { .. } => r += 1,
            KoszulShape::OneEdge(_) => s += 1,
            KoszulShape::EdgePlusVertex { .. } => m += 1,
            _ => {}
        }
    }
    let b_lambda = shapes
        .iter()
        .zip(path.points())
        .find(|(shape, _)| shape.vertex_count() <= 1)
        .map(|(_, p)| *p)
        .unwrap_or_else(|| path.bottom());
    PathProfile {
        shapes,
        r,
        s,
        m,
        b_lambda,
    }
}

/// Check that the shape sequence of a path fits the transition system for
/// paths that start at a hollow triangle and end at a degree with nonzero
/// reduced 0-th homology.
///
/// With i the first step direction, the legal sequences are
///   hollow · TwoEdges(i·)^r · [EdgePlusVertex(i·)] · OneEdge(ij)^s · end,
/// where the end shape is EdgePlusVertex/ThreeVertices/TwoVertices{j,k}
/// (reached by an i-step with no turn) or TwoVertices{i,j} (after a turn to
/// direction j or an interior edge-plus-vertex point).
pub fn validate_taxonomy(ideal: &MonomialIdeal, path: &LatticePath) -> Result<bool, LatticeError> {
    let kb = koszul_complex(ideal, &path.top());
    if classify_shape(&kb) != KoszulShape::ThreeEdgesHollow {
        return Err(LatticeError::PreconditionFailed(
            "path must start at a hollow triangle".into(),
        ));
    }
    let ka = koszul_complex(ideal, &path.bottom());
    if reduced_homology_dims(&ka).1 == 0 {
        return Err(LatticeError::PreconditionFailed(
            "path must end at a degree with nonzero reduced 0-th homology".into(),
        ));
    }
    if path.is_empty() {
        return Ok(false);
    }
    Ok(crate::closed::classify_path(ideal, path).is_some())
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

    #[test]
    fn enumerate_path_counts() {
        let single = enumerate_paths(&dv(2, 1, 0), &dv(2, 1, 0)).unwrap();
        assert_eq!(single.len(), 1);
        assert!(single[0].is_empty());

        let two = enumerate_paths(&dv(0, 0, 0), &dv(1, 1, 0)).unwrap();
        assert_eq!(two.len(), 2);

        let three = enumerate_paths(&dv(1, 1, 1), &dv(3, 2, 1)).unwrap();
        assert_eq!(three.len(), 3);
        assert_eq!(path_count(&dv(1, 1, 1), &dv(3, 2, 1)), Some(3));

        assert!(enumerate_paths(&dv(2, 0, 0), &dv(1, 1, 1)).is_err());
    }

    #[test]
    fn path_count_matches_enumeration() {
        let a = dv(0, 1, 0);
        let b = dv(2, 3, 1);
        let paths = enumerate_paths(&a, &b).unwrap();
        assert_eq!(paths.len() as u128, path_count(&a, &b).unwrap());
        // Lexicographic order of step sequences, no duplicates.
        let dirs: Vec<Vec<usize>> = paths.iter().map(|p| p.step_dirs()).collect();
        let mut sorted = dirs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(dirs, sorted);
    }

    #[test]
    fn profile_of_straight_path() {
        let i = ideal("xy, y^3, z");
        let path = LatticePath::from_steps(dv(1, 3, 1), &[1, 1]);
        let p = profile(&i, &path);
        assert_eq!(p.shapes[0], KoszulShape::ThreeEdgesHollow);
        assert!(matches!(
            p.shapes[1],
            KoszulShape::TwoEdges { shared: 1, .. }
        ));
        assert!(matches!(p.shapes[2], KoszulShape::EdgePlusVertex { .. }));
        assert_eq!(p.r, 1);
        assert_eq!((p.s, p.m), (0, 0));
    }

    #[test]
    fn profile_empty_path() {
        let i = ideal("xy, y^3, z");
        let path = LatticePath::from_steps(dv(1, 3, 1), &[]);
        let p = profile(&i, &path);
        assert_eq!((p.r, p.s, p.m), (0, 0, 0));
        assert_eq!(p.b_lambda, dv(1, 3, 1));
    }

    #[test]
    fn b_lambda_scans_to_first_small_complex() {
        // Along 321 → 311 → 301 the complexes have 3, 2, 0 vertices, so the
        // first point with at most one vertex is the bottom.
        let i = ideal("x^3z, xyz, y^2z, x^3y^2, x^2y^3");
        let path = LatticePath::from_steps(dv(3, 2, 1), &[1, 1]);
        let p = profile(&i, &path);
        assert_eq!(p.b_lambda, dv(3, 0, 1));
        // Along 321 → 221 → 211 → 111 the third point drops to one vertex.
        let path = LatticePath::from_steps(dv(3, 2, 1), &[0, 1, 0]);
        let p = profile(&i, &path);
        assert_eq!(p.b_lambda, dv(2, 1, 1));
    }

    #[test]
    fn taxonomy_accepts_contributing_paths() {
        let i = ideal("xy, y^3, z");
        let path = LatticePath::from_steps(dv(1, 3, 1), &[1, 1]);
        assert_eq!(validate_taxonomy(&i, &path), Ok(true));

        let i2 = ideal("yz, xz, xy^2, x^2y");
        for path in enumerate_paths(&dv(1, 1, 1), &dv(2, 2, 1)).unwrap() {
            assert_eq!(validate_taxonomy(&i2, &path), Ok(true));
        }
    }

    #[test]
    fn taxonomy_precondition_errors() {
        let i = ideal("xy, y^3, z");
        // Top degree not hollow.
        let path = LatticePath::from_steps(dv(1, 1, 1), &[0]);
        assert!(validate_taxonomy(&i, &path).is_err());
        // Bottom degree with trivial reduced 0-th homology.
        let path = LatticePath::from_steps(dv(1, 3, 1), &[1]);
        assert!(validate_taxonomy(&i, &path).is_err());
    }
}
