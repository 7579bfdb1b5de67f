//! Abstract simplicial complexes on up to eight labeled vertices, with
//! rational chains and boundary maps.
//!
//! Orientation convention: every face is the oriented simplex on its
//! vertices listed in increasing order, and
//! ∂[v₀,…,v_d] = Σ_m (−1)^m [v₀,…,v̂_m,…,v_d], with ∂(vertex) = [∅].
//! The empty face has dimension −1, so chains are reduced chains.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::rat::{Rat, RatMatrix};

/// A face, stored as a bitmask of vertices 0..8.  The empty face is `Face(0)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(pub u8);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_vertices(vs: &[usize]) -> Face {
        let mut bits = 0u8;
        for &v in vs {
            assert!(v < 8, "vertex index out of range");
            bits |= 1 << v;
        }
        Face(bits)
    }

    pub fn vertex(v: usize) -> Face {
        Face::from_vertices(&[v])
    }

    pub fn edge(u: usize, v: usize) -> Face {
        assert_ne!(u, v);
        Face::from_vertices(&[u, v])
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..8).filter(|&v| self.0 & (1 << v) != 0).collect()
    }

    /// Dimension: |vertices| − 1, so the empty face has dimension −1.
    pub fn dim(&self) -> i32 {
        self.0.count_ones() as i32 - 1
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0 & (1 << v) != 0
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn remove_vertex(&self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    pub fn union(&self, other: &Face) -> Face {
        Face(self.0 | other.0)
    }

    /// All subfaces, including the empty face and the face itself.
    pub fn subfaces(&self) -> Vec<Face> {
        let bits = self.0;
        let mut out = Vec::new();
        let mut sub = bits;
        loop {
            out.push(Face(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & bits;
        }
        out
    }

    /// Position of `v` in the increasing vertex list.
    fn index_of(&self, v: usize) -> usize {
        (self.0 & ((1u8 << v) - 1)).count_ones() as usize
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "∅");
        }
        for v in self.vertices() {
            let c = if v < 3 {
                ['x', 'y', 'z'][v]
            } else {
                (b'a' + v as u8) as char
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Coefficient of `face ∖ {v}` in ∂(face): (−1)^(position of v).
pub fn removal_sign(face: Face, v: usize) -> i32 {
    assert!(face.contains_vertex(v));
    if face.index_of(v).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Coefficient of the vertex [v] in ∂₁ of the edge `e`:
/// −1 when v is the smaller endpoint, +1 when it is the larger.
pub fn vertex_edge_sign(v: usize, e: Face) -> Result<i32, ComplexError> {
    if e.dim() != 1 || !e.contains_vertex(v) {
        return Err(ComplexError::VertexNotInFace(v, e));
    }
    let other = e.vertices().into_iter().find(|&u| u != v).unwrap();
    Ok(removal_sign(e, other))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    VertexNotInFace(usize, Face),
    NotClosed(Face),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::VertexNotInFace(v, face) => write!(f, "vertex {v} not in face {face:?}"),
            ComplexError::NotClosed(face) => {
                write!(f, "face set not closed under subfaces at {face:?}")
            }
        }
    }
}

impl std::error::Error for ComplexError {}

/// A simplicial complex: a set of faces closed under taking subfaces.
/// The empty complex (no faces at all) is the void complex; any nonempty
/// complex contains the empty face.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    pub fn void() -> Self {
        SimplicialComplex {
            faces: BTreeSet::new(),
        }
    }

    /// Downward closure of the given facets (plus the empty face).
    pub fn from_facets(facets: &[Face]) -> Self {
        let mut faces = BTreeSet::new();
        for f in facets {
            for sub in f.subfaces() {
                faces.insert(sub);
            }
        }
        if !facets.is_empty() {
            faces.insert(Face::EMPTY);
        }
        SimplicialComplex { faces }
    }

    /// Build from an explicit face set, checking closure.
    pub fn from_faces(faces: impl IntoIterator<Item = Face>) -> Result<Self, ComplexError> {
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        for f in &faces {
            for sub in f.subfaces() {
                if !faces.contains(&sub) {
                    return Err(ComplexError::NotClosed(sub));
                }
            }
        }
        Ok(SimplicialComplex { faces })
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.faces.contains(f)
    }

    /// Faces of dimension `d`, sorted by vertex list.
    pub fn faces_of_dim(&self, d: i32) -> Vec<Face> {
        let mut out: Vec<Face> = self
            .faces
            .iter()
            .filter(|f| f.dim() == d)
            .copied()
            .collect();
        out.sort_by_key(|f| f.vertices());
        out
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.faces_of_dim(0)
            .iter()
            .map(|f| f.vertices()[0])
            .collect()
    }

    pub fn edges(&self) -> Vec<Face> {
        self.faces_of_dim(1)
    }

    pub fn dim(&self) -> i32 {
        self.faces.iter().map(|f| f.dim()).max().unwrap_or(-2)
    }

    /// Boundary matrix ∂_d: rows are (d−1)-faces, columns are d-faces.
    pub fn boundary_matrix(&self, d: i32) -> RatMatrix {
        let rows = self.faces_of_dim(d - 1);
        let cols = self.faces_of_dim(d);
        let mut m = RatMatrix::zeros(rows.len(), cols.len());
        for (j, c) in cols.iter().enumerate() {
            for v in c.vertices() {
                let sub = c.remove_vertex(v);
                let i = rows
                    .iter()
                    .position(|r| *r == sub)
                    .expect("complex not closed");
                m.set(i, j, Rat::from_int(removal_sign(*c, v) as i64));
            }
        }
        m
    }

    /// Integer boundary matrix, for lattice/torsion computations.
    pub fn boundary_matrix_int(&self, d: i32) -> Vec<Vec<i64>> {
        let rows = self.faces_of_dim(d - 1);
        let cols = self.faces_of_dim(d);
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, c) in cols.iter().enumerate() {
            for v in c.vertices() {
                let sub = c.remove_vertex(v);
                let i = rows
                    .iter()
                    .position(|r| *r == sub)
                    .expect("complex not closed");
                m[i][j] = removal_sign(*c, v) as i64;
            }
        }
        m
    }

    /// Connected components of the vertex set, joined by edges.
    /// Each component is a sorted vertex list; components sorted by minimum.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let verts = self.vertices();
        let mut parent: BTreeMap<usize, usize> = verts.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut BTreeMap<usize, usize>, v: usize) -> usize {
            let p = parent[&v];
            if p == v {
                v
            } else {
                let r = find(parent, p);
                parent.insert(v, r);
                r
            }
        }
        for e in self.edges() {
            let vs = e.vertices();
            let (a, b) = (find(&mut parent, vs[0]), find(&mut parent, vs[1]));
            if a != b {
                parent.insert(a.max(b), a.min(b));
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &v in &verts {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, face) in self.faces.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{face:?}")?;
        }
        write!(f, "}}")
    }
}

/// A rational chain: a finite formal sum of faces of one dimension.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    pub dim: i32,
    coeffs: BTreeMap<Face, Rat>,
}

impl Chain {
    pub fn zero(dim: i32) -> Chain {
        Chain {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn single(face: Face) -> Chain {
        let mut c = Chain::zero(face.dim());
        c.add_term(face, Rat::one());
        c
    }

    pub fn from_terms(dim: i32, terms: impl IntoIterator<Item = (Face, Rat)>) -> Chain {
        let mut c = Chain::zero(dim);
        for (f, r) in terms {
            c.add_term(f, r);
        }
        c
    }

    pub fn add_term(&mut self, face: Face, coeff: Rat) {
        assert_eq!(face.dim(), self.dim, "face dimension mismatch");
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(face).or_insert_with(Rat::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.coeffs.remove(&face);
        }
    }

    pub fn coeff(&self, face: &Face) -> Rat {
        self.coeffs.get(face).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Face, &Rat)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Face> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, r: &Rat) -> Chain {
        Chain::from_terms(self.dim, self.coeffs.iter().map(|(f, c)| (*f, r * c)))
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (f, c) in other.terms() {
            out.add_term(*f, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    /// Boundary of the chain (one dimension down).
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero(self.dim - 1);
        for (f, c) in self.terms() {
            for v in f.vertices() {
                out.add_term(
                    f.remove_vertex(v),
                    c * &Rat::from_int(removal_sign(*f, v) as i64),
                );
            }
        }
        out
    }

    /// Coordinates with respect to an ordered face list.
    pub fn to_vec(&self, faces: &[Face]) -> Vec<Rat> {
        faces.iter().map(|f| self.coeff(f)).collect()
    }

    pub fn from_vec(dim: i32, faces: &[Face], coords: &[Rat]) -> Chain {
        Chain::from_terms(dim, faces.iter().copied().zip(coords.iter().cloned()))
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (face, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if c == &Rat::one() {
                    write!(f, "{face:?}")?;
                } else {
                    write!(f, "{c}·{face:?}")?;
                }
            } else if c > &Rat::zero() {
                if c == &Rat::one() {
                    write!(f, " + {face:?}")?;
                } else {
                    write!(f, " + {c}·{face:?}")?;
                }
            } else {
                let n = -c;
                if n == Rat::one() {
                    write!(f, " - {face:?}")?;
                } else {
                    write!(f, " - {n}·{face:?}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_basics() {
        let e = Face::edge(1, 2);
        assert_eq!(e.dim(), 1);
        assert_eq!(e.vertices(), vec![1, 2]);
        assert_eq!(Face::EMPTY.dim(), -1);
        assert_eq!(e.subfaces().len(), 4);
    }

    #[test]
    fn removal_signs_ascending() {
        let e = Face::edge(1, 2); // {y,z}
        assert_eq!(removal_sign(e, 1), 1); // coefficient of [z]
        assert_eq!(removal_sign(e, 2), -1); // coefficient of [y]
        let t = Face::from_vertices(&[0, 1, 2]);
        assert_eq!(removal_sign(t, 0), 1);
        assert_eq!(removal_sign(t, 1), -1);
        assert_eq!(removal_sign(t, 2), 1);
    }

    #[test]
    fn vertex_edge_signs() {
        let e = Face::edge(1, 2);
        assert_eq!(vertex_edge_sign(1, e), Ok(-1));
        assert_eq!(vertex_edge_sign(2, e), Ok(1));
        assert!(vertex_edge_sign(0, e).is_err());
        assert!(vertex_edge_sign(0, Face::vertex(0)).is_err());
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let k = SimplicialComplex::from_facets(&[Face::from_vertices(&[0, 1, 2])]);
        let d2 = k.boundary_matrix(2);
        let d1 = k.boundary_matrix(1);
        assert!(d1.matmul(&d2).is_zero());
    }

    #[test]
    fn chain_boundary_matches_matrix() {
        let k = SimplicialComplex::from_facets(&[Face::edge(0, 1), Face::edge(1, 2)]);
        let c = Chain::single(Face::edge(1, 2));
        let b = c.boundary();
        assert_eq!(b.coeff(&Face::vertex(1)), Rat::from_int(-1));
        assert_eq!(b.coeff(&Face::vertex(2)), Rat::from_int(1));
        let m = k.boundary_matrix(1);
        let col = c.to_vec(&k.faces_of_dim(1));
        let img = m.mul_vec(&col);
        assert_eq!(Chain::from_vec(0, &k.faces_of_dim(0), &img), b);
    }

    #[test]
    fn closure_check() {
        let bad = SimplicialComplex::from_faces([Face::edge(0, 1)]);
        assert!(bad.is_err());
        let good = SimplicialComplex::from_faces([
            Face::EMPTY,
            Face::vertex(0),
            Face::vertex(1),
            Face::edge(0, 1),
        ]);
        assert!(good.is_ok());
    }

    #[test]
    fn components_of_edge_plus_vertex() {
        let k = SimplicialComplex::from_facets(&[Face::edge(0, 1), Face::vertex(2)]);
        assert_eq!(k.components(), vec![vec![0, 1], vec![2]]);
    }
}
