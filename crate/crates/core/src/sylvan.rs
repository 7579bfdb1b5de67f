//! Face-indexed matrices for the resolution differentials.
//!
//! Rows are (i−1)-faces of the Koszul complex at the target degree, columns
//! are i-faces at the source degree.  Matrices are presented in the *display
//! basis*: vertices and the empty face are unoriented, while the three edges
//! are taken as the oriented simplices zy, yx, xz — the boundary cycle of
//! the triangle read in staircase display order.  Relative to the ascending
//! orientation used by `boundary_matrix`, the edges zy and yx are reversed,
//! so converting a column (or row) indexed by one of them negates it.

use crate::complex::Face;
use crate::ideal::DegreeVector;
use crate::rat::{Rat, RatMatrix};

/// Display label of a face: "∅", "x", "y", "z", "zy", "yx", "xz", "xyz".
pub fn display_label(f: Face) -> &'static str {
    match f.0 {
        0b000 => "∅",
        0b001 => "x",
        0b010 => "y",
        0b100 => "z",
        0b011 => "yx",
        0b101 => "xz",
        0b110 => "zy",
        0b111 => "xyz",
        _ => unreachable!("face outside the 2-simplex"),
    }
}

/// Sign of the display orientation relative to the ascending orientation:
/// −1 for the edges written zy and yx, +1 for everything else.
pub fn display_sign(f: Face) -> i64 {
    match f.0 {
        0b011 | 0b110 => -1,
        _ => 1,
    }
}

/// Canonical display order of the faces of one dimension.
pub fn display_order(dim: i32) -> Vec<Face> {
    match dim {
        -1 => vec![Face::EMPTY],
        0 => vec![Face(0b001), Face(0b010), Face(0b100)],
        1 => vec![Face(0b110), Face(0b011), Face(0b101)], // zy, yx, xz
        2 => vec![Face(0b111)],
        _ => vec![],
    }
}

/// Order a set of faces by the display order.
pub fn sort_display(faces: &[Face], dim: i32) -> Vec<Face> {
    display_order(dim)
        .into_iter()
        .filter(|f| faces.contains(f))
        .collect()
}

/// A differential block between one source degree and one target degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SylvanMatrix {
    /// Source degree b (columns live at this degree).
    pub source_degree: DegreeVector,
    /// Target degree a (rows live at this degree).
    pub target_degree: DegreeVector,
    /// Homological index i: columns are i-faces, rows are (i−1)-faces.
    pub hom_index: u8,
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    entries: RatMatrix,
}

impl SylvanMatrix {
    /// Wrap entries computed in the ascending orientation, converting to the
    /// display basis.
    pub fn from_ascending(
        source_degree: DegreeVector,
        target_degree: DegreeVector,
        hom_index: u8,
        rows: Vec<Face>,
        cols: Vec<Face>,
        ascending: RatMatrix,
    ) -> Self {
        assert_eq!(ascending.nrows(), rows.len());
        assert_eq!(ascending.ncols(), cols.len());
        let mut entries = ascending;
        for (ri, rf) in rows.iter().enumerate() {
            for (ci, cf) in cols.iter().enumerate() {
                let s = display_sign(*rf) * display_sign(*cf);
                if s < 0 {
                    let v = -entries.get(ri, ci);
                    entries.set(ri, ci, v);
                }
            }
        }
        SylvanMatrix {
            source_degree,
            target_degree,
            hom_index,
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(
        source_degree: DegreeVector,
        target_degree: DegreeVector,
        hom_index: u8,
        rows: Vec<Face>,
        cols: Vec<Face>,
    ) -> Self {
        let entries = RatMatrix::zeros(rows.len(), cols.len());
        SylvanMatrix {
            source_degree,
            target_degree,
            hom_index,
            rows,
            cols,
            entries,
        }
    }

    /// Entry in the display basis, addressed by faces.
    pub fn entry(&self, row: Face, col: Face) -> &Rat {
        let r = self
            .rows
            .iter()
            .position(|f| *f == row)
            .expect("row face not present");
        let c = self
            .cols
            .iter()
            .position(|f| *f == col)
            .expect("column face not present");
        self.entries.get(r, c)
    }

    /// Entries in the display basis.
    pub fn display_entries(&self) -> &RatMatrix {
        &self.entries
    }

    /// Entries converted back to the ascending orientation (for chain-level
    /// linear algebra against `boundary_matrix`).
    pub fn ascending_entries(&self) -> RatMatrix {
        let mut m = self.entries.clone();
        for (ri, rf) in self.rows.iter().enumerate() {
            for (ci, cf) in self.cols.iter().enumerate() {
                let s = display_sign(*rf) * display_sign(*cf);
                if s < 0 {
                    let v = -m.get(ri, ci);
                    m.set(ri, ci, v);
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    /// Every entry's denominator is of the form 2^a·3^b.
    pub fn denominators_2_3_smooth(&self) -> bool {
        (0..self.rows.len()).all(|r| {
            (0..self.cols.len()).all(|c| self.entries.get(r, c).denominator_is_2_3_smooth())
        })
    }

    pub fn row_labels(&self) -> Vec<&'static str> {
        self.rows.iter().map(|f| display_label(*f)).collect()
    }

    pub fn col_labels(&self) -> Vec<&'static str> {
        self.cols.iter().map(|f| display_label(*f)).collect()
    }

    /// Entries rendered as "p/q" strings, row by row.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows.len())
            .map(|r| {
                (0..self.cols.len())
                    .map(|c| self.entries.get(r, c).to_string())
                    .collect()
            })
            .collect()
    }

    /// Labeled JSON form used by the CLI and the C bindings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rows": self.row_labels(),
            "cols": self.col_labels(),
            "entries": self.entry_strings(),
        })
    }
}

impl std::fmt::Debug for SylvanMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "D^({},{}) hom {}: cols {:?}",
            self.target_degree,
            self.source_degree,
            self.hom_index,
            self.col_labels()
        )?;
        for (ri, row) in self.entry_strings().iter().enumerate() {
            writeln!(
                f,
                "  {:>2} [{}]",
                display_label(self.rows[ri]),
                row.join(", ")
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_order_and_labels() {
        let edges = display_order(1);
        let labels: Vec<&str> = edges.iter().map(|f| display_label(*f)).collect();
        assert_eq!(labels, vec!["zy", "yx", "xz"]);
        assert_eq!(display_sign(Face(0b110)), -1);
        assert_eq!(display_sign(Face(0b011)), -1);
        assert_eq!(display_sign(Face(0b101)), 1);
        assert_eq!(display_sign(Face::EMPTY), 1);
    }

    #[test]
    fn ascending_round_trip() {
        let rows = vec![Face(0b001), Face(0b010)];
        let cols = display_order(1);
        let asc = RatMatrix::from_int_rows(&[vec![1, 2, 3], vec![4, 5, 6]]);
        let m = SylvanMatrix::from_ascending(
            DegreeVector::new(1, 1, 1),
            DegreeVector::new(1, 1, 0),
            1,
            rows,
            cols,
            asc.clone(),
        );
        assert_eq!(m.ascending_entries(), asc);
        // zy and yx columns flip, xz does not.
        assert_eq!(*m.entry(Face(0b001), Face(0b110)), Rat::from_int(-1));
        assert_eq!(*m.entry(Face(0b001), Face(0b011)), Rat::from_int(-2));
        assert_eq!(*m.entry(Face(0b001), Face(0b101)), Rat::from_int(3));
    }
}
