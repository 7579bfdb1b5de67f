//! Closed-form evaluation of the differential blocks: per-path formulas
//! that depend only on the sequence of Koszul complex shapes along the
//! path, bypassing all fence enumeration.
//!
//! For blocks into homological degree 0 the entries come from a lattice
//! path count ([`entry_f0_f1`], with the grid-count reformulation in
//! [`grid_count`]).  For blocks out of a hollow triangle the contribution
//! of each path is dispatched on its shape sequence ([`path_contribution`]):
//! with i the first step direction, the contributing sequences are
//!
//!   hollow · TwoEdges(i·)^r · end                       (straight runs)
//!   hollow · TwoEdges(i·)^r · EdgePlusVertex(i·)^m
//!          · OneEdge(ij)^s · TwoVertices{i,j}           (turned paths)
//!
//! with m ∈ {0,1}, and the entries are signed multiples of
//! ⌈3^r/2⌉ and ⌊3^r/2⌋ over 3^r·2^(m+s+…) denominators.  All signs are the
//! ascending vertex-in-edge signs; blocks are presented in the display
//! basis like everything else.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{vertex_edge_sign, Face};
use crate::ideal::{DegreeVector, MonomialIdeal};
use crate::koszul::{classify_shape, koszul_complex, reduced_homology_dims, KoszulShape};
use crate::lattice::{enumerate_paths, profile, LatticePath};
use crate::rat::{Rat, RatMatrix};
use crate::sylvan::{sort_display, SylvanMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    /// A stated precondition does not hold (homology vanishes, the target is
    /// not a generator degree, ...).
    PreconditionFailed(String),
    /// The source complex is not one the closed forms cover.
    UnsupportedShape(String),
    /// A live path matched no formula (should be unreachable).
    UnclassifiablePath(String),
}

impl fmt::Display for ClosedFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormError::PreconditionFailed(m) => write!(f, "precondition failed: {m}"),
            ClosedFormError::UnsupportedShape(m) => write!(f, "unsupported shape: {m}"),
            ClosedFormError::UnclassifiablePath(m) => write!(f, "unclassifiable path: {m}"),
        }
    }
}

impl std::error::Error for ClosedFormError {}

/// Role assignment along a contributing path: `i` is the first step
/// direction, `j` the other edge/turn direction, `k` the remaining variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Roles {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Which formula family a path falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathRule {
    /// Straight i-run ending at an edge-plus-vertex or three-vertex complex.
    RunToEdgeVertexOrThree { r: usize },
    /// Straight i-run ending at the two vertices away from i.
    RunToOppositePair { r: usize },
    /// Run, then a turn to direction j (possibly through single-edge
    /// points), ending at the vertex pair {i,j}.
    TurnToLine { r: usize, s: usize },
    /// Run, then an interior edge-plus-vertex point, then single-edge
    /// points, ending at the vertex pair {i,j}.
    ThroughEdgeVertex { r: usize, s: usize },
}

/// Contribution of one lattice path to a block out of a hollow triangle.
#[derive(Clone)]
pub struct PathContribution {
    pub path: LatticePath,
    pub rule: Option<(PathRule, Roles)>,
    pub block: SylvanMatrix,
}

/// Classify the shape sequence of a path out of a hollow triangle.
/// Returns None when the path cannot carry a nonzero contribution.
pub fn classify_path(ideal: &MonomialIdeal, path: &LatticePath) -> Option<(PathRule, Roles)> {
    if path.is_empty() {
        return None;
    }
    let shapes: Vec<KoszulShape> = path
        .points()
        .iter()
        .map(|p| classify_shape(&koszul_complex(ideal, p)))
        .collect();
    let steps = path.step_dirs();
    classify_shape_sequence(&shapes, &steps)
}

/// The transition system itself, on raw shape/step sequences.
/// `shapes[t]` is the shape at point t; `steps[t]` enters point t+1.
pub fn classify_shape_sequence(
    shapes: &[KoszulShape],
    steps: &[usize],
) -> Option<(PathRule, Roles)> {
    if shapes.first() != Some(&KoszulShape::ThreeEdgesHollow) || steps.is_empty() {
        return None;
    }
    let last = shapes.len() - 1;
    let i = steps[0];
    let others = |i: usize, j: usize| (0..3).find(|&v| v != i && v != j).unwrap();
    #[derive(PartialEq)]
    enum Phase {
        Ones,
        AfterEdgeVertex,
        Fives,
    }
    let mut phase = Phase::Ones;
    let mut r = 0usize;
    let mut s = 0usize;
    let mut m = 0usize;
    let mut j: Option<usize> = None;
    for t in 1..=last {
        let shape = shapes[t];
        let d = steps[t - 1];
        if t == last {
            // Terminal point.
            return match phase {
                Phase::Ones if d == i => match shape {
                    KoszulShape::EdgePlusVertex { edge, .. } if edge.contains_vertex(i) => {
                        let jj = edge.vertices().into_iter().find(|&v| v != i).unwrap();
                        Some((
                            PathRule::RunToEdgeVertexOrThree { r },
                            Roles {
                                i,
                                j: jj,
                                k: others(i, jj),
                            },
                        ))
                    }
                    KoszulShape::ThreeVertices => {
                        let jj = (0..3).find(|&v| v != i).unwrap();
                        Some((
                            PathRule::RunToEdgeVertexOrThree { r },
                            Roles {
                                i,
                                j: jj,
                                k: others(i, jj),
                            },
                        ))
                    }
                    KoszulShape::TwoVertices(u, v) if u != i && v != i => {
                        Some((PathRule::RunToOppositePair { r }, Roles { i, j: u, k: v }))
                    }
                    _ => None,
                },
                Phase::Ones => {
                    // A turn directly onto the terminal point.
                    if shape == KoszulShape::TwoVertices(i.min(d), i.max(d)) {
                        Some((
                            PathRule::TurnToLine { r, s: 0 },
                            Roles {
                                i,
                                j: d,
                                k: others(i, d),
                            },
                        ))
                    } else {
                        None
                    }
                }
                Phase::AfterEdgeVertex | Phase::Fives => {
                    let jj = j.unwrap();
                    if (d == i || d == jj)
                        && shape == KoszulShape::TwoVertices(i.min(jj), i.max(jj))
                    {
                        let rule = if m == 1 {
                            PathRule::ThroughEdgeVertex { r, s }
                        } else {
                            PathRule::TurnToLine { r, s }
                        };
                        Some((
                            rule,
                            Roles {
                                i,
                                j: jj,
                                k: others(i, jj),
                            },
                        ))
                    } else {
                        None
                    }
                }
            };
        }
        // Interior point.
        match phase {
            Phase::Ones => match shape {
                KoszulShape::TwoEdges { shared, .. } if shared == i && d == i => r += 1,
                KoszulShape::EdgePlusVertex { edge, .. } if edge.contains_vertex(i) && d == i => {
                    m = 1;
                    let jj = edge.vertices().into_iter().find(|&v| v != i).unwrap();
                    j = Some(jj);
                    phase = Phase::AfterEdgeVertex;
                }
                KoszulShape::OneEdge(e) if d != i && e == Face::edge(i, d) => {
                    j = Some(d);
                    s += 1;
                    phase = Phase::Fives;
                }
                _ => return None,
            },
            Phase::AfterEdgeVertex | Phase::Fives => {
                let jj = j.unwrap();
                if shape == KoszulShape::OneEdge(Face::edge(i, jj)) && (d == i || d == jj) {
                    s += 1;
                    phase = Phase::Fives;
                } else {
                    return None;
                }
            }
        }
    }
    None
}

fn pow(base: u64, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// ⌈3^r/2⌉ and ⌊3^r/2⌋ in exact integers.
fn halves_of_power_of_three(r: usize) -> (BigInt, BigInt) {
    let p = pow(3, r);
    ((&p + 1) / 2, (&p - 1) / 2)
}

fn sgn(v: usize, e: Face) -> Rat {
    Rat::from_int(vertex_edge_sign(v, e).expect("vertex lies on the edge") as i64)
}

/// The contribution of one path to the block out of a hollow triangle
/// (ascending orientation, rows = vertices of the bottom complex in
/// ascending order, cols = the three edges in ascending order).
fn path_block_ascending(
    rule: PathRule,
    roles: Roles,
    row_faces: &[Face],
    col_faces: &[Face],
) -> RatMatrix {
    let Roles { i, j, k } = roles;
    let eij = Face::edge(i, j);
    let eik = Face::edge(i, k);
    let mut m = RatMatrix::zeros(row_faces.len(), col_faces.len());
    let set = |face: Face, v: usize, val: Rat, m: &mut RatMatrix| {
        let (Some(r), Some(c)) = (
            row_faces.iter().position(|f| *f == Face::vertex(v)),
            col_faces.iter().position(|f| *f == face),
        ) else {
            panic!("face missing from block labels");
        };
        m.set(r, c, val);
    };
    match rule {
        PathRule::RunToEdgeVertexOrThree { r } => {
            let (c3, f3) = halves_of_power_of_three(r);
            let den = Rat::new(BigInt::one(), pow(3, r + 1));
            let big = Rat::new(pow(3, r) + &c3, BigInt::one());
            let small = Rat::new(pow(3, r) + &f3, BigInt::one());
            set(eij, i, &sgn(i, eij) * &den, &mut m);
            set(eij, j, &(&sgn(j, eij) * &big) * &den, &mut m);
            set(eij, k, &(&sgn(i, eij) * &small) * &den, &mut m);
            set(eik, i, &sgn(i, eik) * &den, &mut m);
            set(eik, k, &(&sgn(k, eik) * &big) * &den, &mut m);
            set(eik, j, &(&sgn(i, eik) * &small) * &den, &mut m);
        }
        PathRule::RunToOppositePair { .. } => {
            let half = Rat::from_frac(1, 2);
            set(eij, j, &sgn(j, eij) * &half, &mut m);
            set(eij, k, &sgn(i, eij) * &half, &mut m);
            set(eik, k, &sgn(k, eik) * &half, &mut m);
            set(eik, j, &sgn(i, eik) * &half, &mut m);
        }
        PathRule::TurnToLine { r, s } | PathRule::ThroughEdgeVertex { r, s } => {
            let extra = if matches!(rule, PathRule::ThroughEdgeVertex { .. }) {
                2
            } else {
                1
            };
            let (c3, f3) = halves_of_power_of_three(r);
            let den = Rat::new(BigInt::one(), pow(3, r) * pow(2, s + extra));
            set(
                eij,
                i,
                &(&sgn(i, eij) * &Rat::new(c3.clone(), BigInt::one())) * &den,
                &mut m,
            );
            set(
                eij,
                j,
                &(&sgn(j, eij) * &Rat::new(c3, BigInt::one())) * &den,
                &mut m,
            );
            set(
                eik,
                i,
                &(&sgn(k, eik) * &Rat::new(f3.clone(), BigInt::one())) * &den,
                &mut m,
            );
            set(
                eik,
                j,
                &(&sgn(i, eik) * &Rat::new(f3, BigInt::one())) * &den,
                &mut m,
            );
        }
    }
    m
}

/// Contribution of one path to the block H̃₀ ← H̃₁ (display basis).
pub fn path_contribution(
    ideal: &MonomialIdeal,
    path: &LatticePath,
) -> Result<PathContribution, ClosedFormError> {
    let kb = koszul_complex(ideal, &path.top());
    if classify_shape(&kb) != KoszulShape::ThreeEdgesHollow {
        return Err(ClosedFormError::UnsupportedShape(format!(
            "block source {} is {}, not a hollow triangle",
            path.top(),
            classify_shape(&kb)
        )));
    }
    let ka = koszul_complex(ideal, &path.bottom());
    let rows = sort_display(&ka.faces_of_dim(0), 0);
    let cols = sort_display(&kb.faces_of_dim(1), 1);
    let rows_asc: Vec<Face> = {
        let mut v = rows.clone();
        v.sort_by_key(|f| f.vertices());
        v
    };
    let rule = classify_path(ideal, path);
    let asc = match rule {
        None => RatMatrix::zeros(rows.len(), cols.len()),
        Some((rule, roles)) => {
            let cols_asc: Vec<Face> = {
                let mut v = cols.clone();
                v.sort_by_key(|f| f.vertices());
                v
            };
            let m = path_block_ascending(rule, roles, &rows_asc, &cols_asc);
            // Reorder to display order before wrapping.
            let mut out = RatMatrix::zeros(rows.len(), cols.len());
            for (ri, rf) in rows.iter().enumerate() {
                let r0 = rows_asc.iter().position(|f| f == rf).unwrap();
                for (ci, cf) in cols.iter().enumerate() {
                    let c0 = cols_asc.iter().position(|f| f == cf).unwrap();
                    out.set(ri, ci, m.get(r0, c0).clone());
                }
            }
            out
        }
    };
    let block = SylvanMatrix::from_ascending(path.top(), path.bottom(), 1, rows, cols, asc);
    Ok(PathContribution {
        path: path.clone(),
        rule,
        block,
    })
}

/// One entry of the block H̃₀ ← H̃₁: the sum over all paths of the per-path
/// contributions.
pub fn entry_f1_f2(
    ideal: &MonomialIdeal,
    a: &DegreeVector,
    b: &DegreeVector,
    v: usize,
    e: Face,
) -> Result<Rat, ClosedFormError> {
    let m = matrix(ideal, a, b, 1)?;
    Ok(m.entry(Face::vertex(v), e).clone())
}

/// One entry of the block H̃₋₁ ← H̃₀ for a generator degree `a`.
///
/// Cases: 1 when `v` is isolated and `a` sits straight behind `b` in the
/// `v` direction; 0 when `a` is not behind the component of `v`; otherwise
/// `v` lies on the edge and the entry is Σ over paths of 2^(−|b − b_λ|),
/// where b_λ is the first path point whose complex has at most one vertex.
pub fn entry_f0_f1(
    ideal: &MonomialIdeal,
    a: &DegreeVector,
    b: &DegreeVector,
    v: usize,
) -> Result<Rat, ClosedFormError> {
    let kb = koszul_complex(ideal, b);
    if reduced_homology_dims(&kb).1 == 0 {
        return Err(ClosedFormError::PreconditionFailed(format!(
            "source degree {b} has no reduced 0-th homology"
        )));
    }
    if !ideal.gens().contains(a) {
        return Err(ClosedFormError::PreconditionFailed(format!(
            "target degree {a} is not a minimal generator"
        )));
    }
    if !a.lt(b) {
        return Err(ClosedFormError::PreconditionFailed(format!(
            "{a} is not strictly below {b}"
        )));
    }
    let component = kb
        .components()
        .into_iter()
        .find(|c| c.contains(&v))
        .ok_or_else(|| {
            ClosedFormError::PreconditionFailed(format!("vertex {v} not in the complex"))
        })?;
    let dirs = b.checked_sub(a).unwrap().support();
    if !dirs.iter().all(|d| component.contains(d)) {
        return Ok(Rat::zero());
    }
    if component.len() == 1 {
        // Isolated vertex with a ⪯ b along its axis: the unique generator
        // behind b in that direction.
        return Ok(Rat::one());
    }
    let mut total = Rat::zero();
    for path in enumerate_paths(a, b).expect("a below b") {
        let p = profile(ideal, &path);
        let dist = b.checked_sub(&p.b_lambda).unwrap().degree_sum() as usize;
        total = &total + &Rat::new(BigInt::one(), pow(2, dist));
    }
    Ok(total)
}

/// Grid-count reformulation of the edge case of [`entry_f0_f1`]:
/// every decreasing two-direction walk of length m from `b` commits to the
/// generator its forced trail reaches; the entry is (walks committing to a)
/// divided by 2^m, with m the largest |b − b_λ| over generators behind the
/// edge and their paths.
pub fn grid_count(
    ideal: &MonomialIdeal,
    a: &DegreeVector,
    b: &DegreeVector,
) -> Result<Rat, ClosedFormError> {
    let kb = koszul_complex(ideal, b);
    let KoszulShape::EdgePlusVertex { edge, .. } = classify_shape(&kb) else {
        return Err(ClosedFormError::PreconditionFailed(format!(
            "source degree {b} is not an edge plus a vertex"
        )));
    };
    let ev = edge.vertices();
    let dirs = (ev[0], ev[1]);
    let behind = ideal.generators_behind(b, dirs);
    if !behind.contains(a) {
        return Err(ClosedFormError::PreconditionFailed(format!(
            "{a} does not lie behind {b} in the edge directions"
        )));
    }
    let mut m = 0usize;
    for g in &behind {
        for path in enumerate_paths(g, b).expect("generator below b") {
            let p = profile(ideal, &path);
            m = m.max(b.checked_sub(&p.b_lambda).unwrap().degree_sum() as usize);
        }
    }
    assert!(m < 60, "grid walk of width {m} is out of range");
    let mut hits = 0u64;
    for mask in 0u64..(1 << m) {
        if walk_commits_to(ideal, b, dirs, mask, m) == Some(*a) {
            hits += 1;
        }
    }
    Ok(Rat::new(BigInt::from(hits), pow(2, m)))
}

/// Follow a two-direction walk from `b` (bit t of `mask` picks the
/// direction of step t) until the Koszul complex has at most one vertex,
/// then follow the forced single-vertex trail to a generator.
fn walk_commits_to(
    ideal: &MonomialIdeal,
    b: &DegreeVector,
    dirs: (usize, usize),
    mask: u64,
    m: usize,
) -> Option<DegreeVector> {
    let mut cur = [b.0[0] as i64, b.0[1] as i64, b.0[2] as i64];
    for t in 0..m {
        let d = if mask >> t & 1 == 0 { dirs.0 } else { dirs.1 };
        cur[d] -= 1;
        if cur.iter().any(|&c| c < 0) {
            return None; // left the lattice without committing
        }
        let here = DegreeVector::new(cur[0] as u32, cur[1] as u32, cur[2] as u32);
        let shape = classify_shape(&koszul_complex(ideal, &here));
        match shape {
            KoszulShape::Void => return None,
            KoszulShape::Irrelevant => return Some(here),
            KoszulShape::OneVertex(v) => return Some(follow_trail(ideal, here, v)),
            _ => {}
        }
    }
    None
}

fn follow_trail(ideal: &MonomialIdeal, mut cur: DegreeVector, mut v: usize) -> DegreeVector {
    loop {
        cur = cur.minus_unit(v).expect("trail stays in the lattice");
        match classify_shape(&koszul_complex(ideal, &cur)) {
            KoszulShape::Irrelevant => return cur,
            KoszulShape::OneVertex(w) => v = w,
            other => panic!("single-vertex trail met {other}"),
        }
    }
}

/// The full closed-form block between degrees a and b (display basis).
pub fn matrix(
    ideal: &MonomialIdeal,
    a: &DegreeVector,
    b: &DegreeVector,
    i: u8,
) -> Result<SylvanMatrix, ClosedFormError> {
    match i {
        0 => {
            let kb = koszul_complex(ideal, b);
            let cols = sort_display(&kb.faces_of_dim(0), 0);
            let rows = vec![Face::EMPTY];
            if !a.lt(b) {
                // Incomparable or equal degrees carry the zero block.
                return Ok(SylvanMatrix::zero(*b, *a, 0, rows, cols));
            }
            let mut m = RatMatrix::zeros(1, cols.len());
            for (ci, col) in cols.iter().enumerate() {
                let val = entry_f0_f1(ideal, a, b, col.vertices()[0])?;
                m.set(0, ci, val);
            }
            Ok(SylvanMatrix::from_ascending(*b, *a, 0, rows, cols, m))
        }
        1 => {
            let kb = koszul_complex(ideal, b);
            if classify_shape(&kb) != KoszulShape::ThreeEdgesHollow {
                return Err(ClosedFormError::UnsupportedShape(format!(
                    "source degree {b} is not a hollow triangle"
                )));
            }
            let ka = koszul_complex(ideal, a);
            if reduced_homology_dims(&ka).1 == 0 {
                return Err(ClosedFormError::PreconditionFailed(format!(
                    "target degree {a} has no reduced 0-th homology"
                )));
            }
            let rows = sort_display(&ka.faces_of_dim(0), 0);
            let cols = sort_display(&kb.faces_of_dim(1), 1);
            if !a.lt(b) {
                return Ok(SylvanMatrix::zero(*b, *a, 1, rows, cols));
            }
            let mut asc = RatMatrix::zeros(rows.len(), cols.len());
            for path in enumerate_paths(a, b).expect("a below b") {
                let contrib = path_contribution(ideal, &path)?;
                let part = contrib.block.ascending_entries();
                for r in 0..rows.len() {
                    for c in 0..cols.len() {
                        let v = asc.get(r, c) + part.get(r, c);
                        asc.set(r, c, v);
                    }
                }
            }
            Ok(SylvanMatrix::from_ascending(*b, *a, 1, rows, cols, asc))
        }
        _ => Err(ClosedFormError::UnsupportedShape(format!(
            "no closed form for index {i}"
        ))),
    }
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
    fn staircase_f0_entries() {
        let i = ideal("x^3z, xyz, y^2z, x^3y^2, x^2y^3");
        let b = dv(3, 2, 1);
        assert_eq!(entry_f0_f1(&i, &dv(1, 1, 1), &b, 0).unwrap(), rat("5/8"));
        assert_eq!(entry_f0_f1(&i, &dv(1, 1, 1), &b, 1).unwrap(), rat("5/8"));
        assert_eq!(entry_f0_f1(&i, &dv(3, 0, 1), &b, 0).unwrap(), rat("1/4"));
        assert_eq!(entry_f0_f1(&i, &dv(0, 2, 1), &b, 0).unwrap(), rat("1/8"));
    }

    #[test]
    fn isolated_vertex_entry_is_one() {
        let i = ideal("yz, xz, xy^2, x^2y");
        assert_eq!(
            entry_f0_f1(&i, &dv(1, 2, 0), &dv(1, 2, 1), 2).unwrap(),
            Rat::one()
        );
        // Not behind in the component's directions: zero.
        assert_eq!(
            entry_f0_f1(&i, &dv(1, 2, 0), &dv(1, 2, 1), 0).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn grid_count_matches_entry() {
        let i = ideal("x^3z, xyz, y^2z, x^3y^2, x^2y^3");
        let b = dv(3, 2, 1);
        assert_eq!(grid_count(&i, &dv(1, 1, 1), &b).unwrap(), rat("5/8"));
        assert_eq!(grid_count(&i, &dv(3, 0, 1), &b).unwrap(), rat("1/4"));
        assert_eq!(grid_count(&i, &dv(0, 2, 1), &b).unwrap(), rat("1/8"));
    }

    #[test]
    fn grid_count_single_generator_at_distance_one() {
        // One generator right behind the edge: every walk reaches it.
        let i = ideal("xy, z");
        let b = dv(1, 1, 1);
        assert_eq!(
            classify_shape(&koszul_complex(&i, &b)),
            KoszulShape::EdgePlusVertex {
                edge: Face::edge(0, 1),
                vertex: 2
            }
        );
        assert_eq!(grid_count(&i, &dv(0, 0, 1), &b).unwrap(), Rat::one());
    }

    #[test]
    fn hollow_block_example_values() {
        let i = ideal("xy, y^3, z");
        let m = matrix(&i, &dv(1, 1, 1), &dv(1, 3, 1), 1).unwrap();
        let zy = Face::edge(1, 2);
        let yx = Face::edge(0, 1);
        let xz = Face::edge(0, 2);
        assert_eq!(*m.entry(Face::vertex(0), zy), rat("4/9"));
        assert_eq!(*m.entry(Face::vertex(0), yx), rat("5/9"));
        assert_eq!(*m.entry(Face::vertex(1), zy), rat("1/9"));
        assert_eq!(*m.entry(Face::vertex(1), yx), rat("-1/9"));
        assert_eq!(*m.entry(Face::vertex(2), zy), rat("-5/9"));
        assert_eq!(*m.entry(Face::vertex(2), yx), rat("-4/9"));
        for v in 0..3 {
            assert_eq!(*m.entry(Face::vertex(v), xz), Rat::zero());
        }
    }

    #[test]
    fn one_step_contribution_rules() {
        let i = ideal("yz, xz, xy^2, x^2y");
        // 221 → 220 drops z onto the vertex pair {x,y}.
        let path = LatticePath::from_steps(dv(2, 2, 1), &[2]);
        let c = path_contribution(&i, &path).unwrap();
        assert!(matches!(
            c.rule,
            Some((PathRule::RunToOppositePair { r: 0 }, _))
        ));
        assert_eq!(
            *c.block.entry(Face::vertex(0), Face::edge(1, 2)),
            rat("-1/2")
        );
        assert_eq!(
            *c.block.entry(Face::vertex(0), Face::edge(0, 2)),
            rat("-1/2")
        );
        assert_eq!(
            *c.block.entry(Face::vertex(1), Face::edge(1, 2)),
            rat("1/2")
        );
        assert_eq!(
            *c.block.entry(Face::vertex(0), Face::edge(0, 1)),
            Rat::zero()
        );

        // 221 → 121 drops x onto an edge-plus-vertex complex.
        let path = LatticePath::from_steps(dv(2, 2, 1), &[0]);
        let c = path_contribution(&i, &path).unwrap();
        assert!(matches!(
            c.rule,
            Some((PathRule::RunToEdgeVertexOrThree { r: 0 }, _))
        ));
        assert_eq!(
            *c.block.entry(Face::vertex(0), Face::edge(0, 1)),
            rat("1/3")
        );
        assert_eq!(
            *c.block.entry(Face::vertex(1), Face::edge(0, 1)),
            rat("-2/3")
        );
        assert_eq!(
            *c.block.entry(Face::vertex(2), Face::edge(0, 1)),
            rat("1/3")
        );
        assert_eq!(
            *c.block.entry(Face::vertex(0), Face::edge(0, 2)),
            rat("-1/3")
        );
        assert_eq!(
            *c.block.entry(Face::vertex(2), Face::edge(0, 2)),
            rat("2/3")
        );
    }

    #[test]
    fn turned_paths_sum_to_half_block() {
        let i = ideal("yz, xz, xy^2, x^2y");
        let m = matrix(&i, &dv(1, 1, 1), &dv(2, 2, 1), 1).unwrap();
        assert_eq!(*m.entry(Face::vertex(0), Face::edge(0, 1)), rat("1/2"));
        assert_eq!(*m.entry(Face::vertex(1), Face::edge(0, 1)), rat("-1/2"));
        assert_eq!(*m.entry(Face::vertex(0), Face::edge(1, 2)), Rat::zero());
        assert_eq!(*m.entry(Face::vertex(0), Face::edge(0, 2)), Rat::zero());
        for path in enumerate_paths(&dv(1, 1, 1), &dv(2, 2, 1)).unwrap() {
            let c = path_contribution(&i, &path).unwrap();
            assert!(matches!(
                c.rule,
                Some((PathRule::ThroughEdgeVertex { r: 0, s: 0 }, _))
            ));
        }
    }

    #[test]
    fn entry_sum_over_paths() {
        let i = ideal("yz, xz, xy^2, x^2y");
        let v = entry_f1_f2(&i, &dv(1, 1, 1), &dv(2, 2, 1), 0, Face::edge(0, 1)).unwrap();
        assert_eq!(v, rat("1/2"));
        let v = entry_f1_f2(&i, &dv(1, 1, 1), &dv(2, 2, 1), 1, Face::edge(0, 1)).unwrap();
        assert_eq!(v, rat("-1/2"));
    }

    #[test]
    fn fabricated_sequences_reject() {
        // Hollow cannot drop straight onto a vertex pair containing the step
        // direction.
        let shapes = [
            KoszulShape::ThreeEdgesHollow,
            KoszulShape::TwoVertices(0, 1),
        ];
        assert!(classify_shape_sequence(&shapes, &[0]).is_none());
        // ... but the pair away from the step direction is fine.
        let shapes = [
            KoszulShape::ThreeEdgesHollow,
            KoszulShape::TwoVertices(1, 2),
        ];
        assert!(classify_shape_sequence(&shapes, &[0]).is_some());
        // A path ending at a connected complex carries nothing.
        let shapes = [
            KoszulShape::ThreeEdgesHollow,
            KoszulShape::OneEdge(Face::edge(0, 1)),
        ];
        assert!(classify_shape_sequence(&shapes, &[0]).is_none());
    }

    #[test]
    fn closed_matrix_rejects_unsupported_sources() {
        let i = ideal("xy, y^3, z");
        assert!(matrix(&i, &dv(1, 1, 0), &dv(1, 1, 1), 1).is_err());
        assert!(matrix(&i, &dv(1, 1, 0), &dv(1, 3, 1), 2).is_err());
    }
}
