//! Koszul simplicial complexes of a monomial ideal: the subcomplex of the
//! 2-simplex on {x,y,z} whose faces τ satisfy x^(b−τ) ∈ I, together with
//! shape classification and reduced homology over ℚ.

use std::fmt;

use crate::complex::{Chain, Face, SimplicialComplex};
use crate::ideal::{DegreeVector, MonomialIdeal, VAR_NAMES};
use crate::rat::{self, RatMatrix};

/// The Koszul complex in degree `b`: faces τ ⊆ {x,y,z} with b − τ ≥ 0 and
/// x^(b−τ) ∈ I.  Void when b itself is not in the ideal.
pub fn koszul_complex(ideal: &MonomialIdeal, b: &DegreeVector) -> SimplicialComplex {
    let mut faces = Vec::new();
    for bits in 0u8..8 {
        let f = Face(bits);
        let mut shifted = *b;
        let mut ok = true;
        for v in f.vertices() {
            match shifted.minus_unit(v) {
                Some(s) => shifted = s,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && ideal.contains(&shifted) {
            faces.push(f);
        }
    }
    // Membership is monotone, so the face set is automatically closed.
    SimplicialComplex::from_faces(faces).expect("Koszul face set is closed")
}

/// Shape of a subcomplex of the 2-simplex, with vertex labels retained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KoszulShape {
    /// No faces at all (the degree is not in the ideal).
    Void,
    /// Only the empty face (the degree is a minimal generator).
    Irrelevant,
    OneVertex(usize),
    TwoVertices(usize, usize),
    ThreeVertices,
    OneEdge(Face),
    EdgePlusVertex {
        edge: Face,
        vertex: usize,
    },
    /// Two edges sharing `shared`; `outer` lists the other endpoints in order.
    TwoEdges {
        shared: usize,
        outer: (usize, usize),
    },
    ThreeEdgesHollow,
    FullTriangle,
}

impl KoszulShape {
    pub fn tag(&self) -> &'static str {
        match self {
            KoszulShape::Void => "Void",
            KoszulShape::Irrelevant => "Irrelevant",
            KoszulShape::OneVertex(_) => "OneVertex",
            KoszulShape::TwoVertices(_, _) => "TwoVertices",
            KoszulShape::ThreeVertices => "ThreeVertices",
            KoszulShape::OneEdge(_) => "OneEdge",
            KoszulShape::EdgePlusVertex { .. } => "EdgePlusVertex",
            KoszulShape::TwoEdges { .. } => "TwoEdges",
            KoszulShape::ThreeEdgesHollow => "ThreeEdgesHollow",
            KoszulShape::FullTriangle => "FullTriangle",
        }
    }

    /// Number of vertices in the complex.
    pub fn vertex_count(&self) -> usize {
        match self {
            KoszulShape::Void | KoszulShape::Irrelevant => 0,
            KoszulShape::OneVertex(_) => 1,
            KoszulShape::TwoVertices(_, _) | KoszulShape::OneEdge(_) => 2,
            _ => 3,
        }
    }

    pub fn label(&self) -> String {
        let var = |v: usize| VAR_NAMES[v].to_string();
        let edge = |e: &Face| crate::sylvan::display_label(*e).to_string();
        match self {
            KoszulShape::OneVertex(v) => format!("OneVertex({})", var(*v)),
            KoszulShape::TwoVertices(u, v) => format!("TwoVertices({},{})", var(*u), var(*v)),
            KoszulShape::OneEdge(e) => format!("OneEdge({})", edge(e)),
            KoszulShape::EdgePlusVertex { edge: e, vertex } => {
                format!("EdgePlusVertex({};{})", edge(e), var(*vertex))
            }
            KoszulShape::TwoEdges { shared, outer } => {
                format!(
                    "TwoEdges({},{})",
                    edge(&Face::edge(*shared, outer.0)),
                    edge(&Face::edge(*shared, outer.1))
                )
            }
            other => other.tag().to_string(),
        }
    }
}

impl fmt::Display for KoszulShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Classify a subcomplex of the 2-simplex on vertices {0,1,2}.
pub fn classify_shape(k: &SimplicialComplex) -> KoszulShape {
    assert!(k
        .faces()
        .all(|f| f.is_subface_of(&Face::from_vertices(&[0, 1, 2]))));
    if k.is_void() {
        return KoszulShape::Void;
    }
    if k.contains(&Face::from_vertices(&[0, 1, 2])) {
        return KoszulShape::FullTriangle;
    }
    let verts = k.vertices();
    let edges = k.edges();
    match (verts.len(), edges.len()) {
        (0, 0) => KoszulShape::Irrelevant,
        (1, 0) => KoszulShape::OneVertex(verts[0]),
        (2, 0) => KoszulShape::TwoVertices(verts[0], verts[1]),
        (3, 0) => KoszulShape::ThreeVertices,
        (2, 1) => KoszulShape::OneEdge(edges[0]),
        (3, 1) => {
            let e = edges[0];
            let vertex = verts
                .iter()
                .copied()
                .find(|v| !e.contains_vertex(*v))
                .unwrap();
            KoszulShape::EdgePlusVertex { edge: e, vertex }
        }
        (3, 2) => {
            let (a, b) = (edges[0], edges[1]);
            let shared = a
                .vertices()
                .into_iter()
                .find(|&v| b.contains_vertex(v))
                .expect("two edges on three vertices share a vertex");
            let mut outer: Vec<usize> = verts.into_iter().filter(|&v| v != shared).collect();
            outer.sort_unstable();
            KoszulShape::TwoEdges {
                shared,
                outer: (outer[0], outer[1]),
            }
        }
        (3, 3) => KoszulShape::ThreeEdgesHollow,
        other => unreachable!("impossible subcomplex signature {other:?}"),
    }
}

/// Dimensions of the reduced homology (H̃₋₁, H̃₀, H̃₁) over ℚ.
pub fn reduced_homology_dims(k: &SimplicialComplex) -> (usize, usize, usize) {
    if k.is_void() {
        return (0, 0, 0);
    }
    let d0 = k.boundary_matrix(0);
    let d1 = k.boundary_matrix(1);
    let d2 = k.boundary_matrix(2);
    let (r0, r1, r2) = (d0.rank(), d1.rank(), d2.rank());
    let c = |d: i32| k.faces_of_dim(d).len();
    let h_neg1 = c(-1) - r0;
    let h0 = c(0) - r0 - r1;
    let h1 = c(1) - r1 - r2;
    (h_neg1, h0, h1)
}

/// Cycles whose classes form a basis of H̃_i(K;ℚ).
///
/// Deterministic: take the reduced-echelon kernel basis of ∂_i (faces in
/// canonical order, leading coefficient +1), then keep the vectors that are
/// independent modulo the boundary space, in order.
pub fn homology_basis(k: &SimplicialComplex, i: i32) -> Vec<Chain> {
    if k.is_void() {
        return Vec::new();
    }
    let faces = k.faces_of_dim(i);
    if faces.is_empty() {
        return Vec::new();
    }
    let cycle_basis: Vec<Vec<crate::rat::Rat>> = if i == -1 {
        // ∂₋₁ is the zero map; every (−1)-chain is a cycle.
        vec![vec![crate::rat::Rat::one()]]
    } else {
        rat::kernel_basis(&k.boundary_matrix(i))
    };
    let bd = k.boundary_matrix(i + 1);
    let mut kept: Vec<Vec<crate::rat::Rat>> = Vec::new();
    let mut out = Vec::new();
    for v in cycle_basis {
        // Independent of boundaries plus the cycles already kept?
        let mut cols: Vec<Vec<crate::rat::Rat>> = Vec::new();
        for c in 0..bd.ncols() {
            cols.push((0..bd.nrows()).map(|r| bd.get(r, c).clone()).collect());
        }
        cols.extend(kept.iter().cloned());
        let base_rank = rank_of_cols(&cols, faces.len());
        cols.push(v.clone());
        if rank_of_cols(&cols, faces.len()) > base_rank {
            kept.push(v.clone());
            out.push(Chain::from_vec(i, &faces, &v));
        }
    }
    out
}

fn rank_of_cols(cols: &[Vec<crate::rat::Rat>], rows: usize) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let mut m = RatMatrix::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m.rank()
}
