//! Normal arcs and normal discs as chain groups, and the boundary map
//! between them.
//!
//! The arc `α(F, v)` is oriented along the edge of `F` opposite `v`. A disc
//! in tetrahedron `Δ` with boundary arc `α(F, v)` picks up the sign
//! `ε(Δ, F, v)`, computed as `orientation(Δ) · sign(v, tail, head, w)` where
//! `tail → head` is the oriented edge opposite `v` in `F` and `w` is the
//! vertex of `Δ` opposite `F`. The two tetrahedra on either side of a face
//! always get opposite signs.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{Disc, DiscType};
use crate::linalg::IntMatrix;
use crate::perm::{face_vertices, opposite_edge, sign_of_sequence};
use crate::triangulation::Triangulation;

/// A 1-chain: one coefficient per oriented normal arc class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Chain1(pub Vec<i64>);

/// A 2-chain: one coefficient per normal disc, in disc index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Chain2(pub Vec<i64>);

impl Chain1 {
    pub fn zeros(len: usize) -> Self {
        Chain1(vec![0; len])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }
}

impl Chain2 {
    pub fn zeros(tets: usize) -> Self {
        Chain2(vec![0; 7 * tets])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn tet_count(&self) -> usize {
        self.0.len() / 7
    }

    /// Triangle coefficients, four per tetrahedron.
    pub fn triangle_part(&self) -> Vec<[i64; 4]> {
        self.0.chunks(7).map(|c| [c[0], c[1], c[2], c[3]]).collect()
    }

    /// Quadrilateral coefficients, three per tetrahedron.
    pub fn quad_part(&self) -> Vec<[i64; 3]> {
        self.0.chunks(7).map(|c| [c[4], c[5], c[6]]).collect()
    }

    pub fn from_parts(triangles: &[[i64; 4]], quads: &[[i64; 3]]) -> Self {
        assert_eq!(triangles.len(), quads.len());
        Chain2(triangles.iter().zip(quads).flat_map(|(t, q)| t.iter().chain(q.iter()).copied()).collect())
    }
}

/// Sparse integer matrix stored by columns. Entries within a column are
/// sorted by row and never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    /// Assembles a matrix from per-column entry lists; repeated rows are
    /// summed and zero sums dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|&(r, _)| r);
                let mut merged: Vec<(usize, i64)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    assert!(r < rows, "row {r} out of range {rows}");
                    match merged.last_mut() {
                        Some((lr, lv)) if *lr == r => *lv += v,
                        _ => merged.push((r, v)),
                    }
                }
                merged.retain(|&(_, v)| v != 0);
                merged
            })
            .collect();
        SparseMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cols[j].iter().find(|&&(r, _)| r == i).map_or(0, |&(_, v)| v)
    }

    pub fn apply(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.ncols() {
            return Err(Error::Dimension { expected: self.ncols(), found: x.len() });
        }
        let mut out = vec![0i64; self.rows];
        for (col, &xj) in self.cols.iter().zip(x) {
            if xj == 0 {
                continue;
            }
            for &(r, v) in col {
                let term = v.checked_mul(xj).ok_or(Error::Overflow)?;
                out[r] = out[r].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    /// All nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        let mut out: Vec<_> =
            self.cols.iter().enumerate().flat_map(|(j, col)| col.iter().map(move |&(i, v)| (i, j, v))).collect();
        out.sort_unstable();
        out
    }

    /// Text dump: a `rows cols nnz` header, then one `row col value` line
    /// per nonzero entry in row-major order.
    pub fn to_triplet_text(&self) -> String {
        let triplets = self.triplets();
        let mut s = format!("{} {} {}\n", self.rows, self.ncols(), triplets.len());
        for (i, j, v) in triplets {
            writeln!(s, "{i} {j} {v}").unwrap();
        }
        s
    }

    pub fn from_triplet_text(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::MalformedInput(msg);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("empty matrix file".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(format!("bad header `{header}`"))))
            .collect::<Result<_>>()?;
        let [rows, ncols, nnz] = dims[..] else {
            return Err(bad(format!("bad header `{header}`")));
        };
        let mut cols = vec![Vec::new(); ncols];
        let mut count = 0;
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parsed = match toks[..] {
                [i, j, v] => i.parse::<usize>().ok().zip(j.parse::<usize>().ok()).zip(v.parse::<i64>().ok()),
                _ => None,
            };
            let ((i, j), v) = parsed.ok_or_else(|| bad(format!("bad entry `{line}`")))?;
            if i >= rows || j >= ncols {
                return Err(bad(format!("entry `{line}` outside {rows}x{ncols}")));
            }
            cols[j].push((i, v));
            count += 1;
        }
        if count != nnz {
            return Err(bad(format!("header promises {nnz} entries, found {count}")));
        }
        Ok(SparseMatrix::from_columns(rows, cols))
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, v.into());
            }
        }
        m
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let mut position = vec![usize::MAX; self.rows];
        for (k, &r) in rows.iter().enumerate() {
            position[r] = k;
        }
        let columns = cols
            .iter()
            .map(|&j| {
                self.cols[j]
                    .iter()
                    .filter(|&&(r, _)| position[r] != usize::MAX)
                    .map(|&(r, v)| (position[r], v))
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(rows.len(), columns)
    }
}

/// The sign `ε(Δ, F, v)` with which the arc of face slot `face` linking
/// `corner` appears in the boundary of any disc of `tet`.
pub fn epsilon(tri: &Triangulation, tet: usize, face: usize, corner: usize) -> Result<i32> {
    if face > 3 || corner > 3 || corner == face {
        return Err(Error::CornerNotInFace { face, corner });
    }
    let [a, b] = opposite_edge(face, corner);
    let (tail, head) = tri.edge_direction(tet, a, b);
    Ok(tri.orientation(tet) * sign_of_sequence([corner, tail, head, face]))
}

/// The two face slots carrying the arc `α(F, v)`, labelled `(Δ₊, Δ₋)` by
/// the sign of `ε` at that arc. The label depends on the corner unless the
/// three edges of the face are oriented cyclically.
pub fn delta_plus(tri: &Triangulation, arc: usize) -> Result<((usize, usize), (usize, usize))> {
    if arc >= tri.arc_count() {
        return Err(Error::OutOfRange { index: arc, limit: tri.arc_count() });
    }
    let a = tri.arc(arc);
    let g = tri.gluing(a.tet, a.slot);
    let (first, second) = ((a.tet, a.slot), (g.tet, g.face));
    if epsilon(tri, a.tet, a.slot, a.corner)? > 0 {
        Ok((first, second))
    } else {
        Ok((second, first))
    }
}

/// The boundary arcs of a disc, as `(face slot, linked corner)` pairs in
/// increasing face order.
pub fn disc_arcs(kind: DiscType) -> Vec<(usize, usize)> {
    (0..4).filter_map(|f| kind.arc_corner(f).map(|c| (f, c))).collect()
}

fn disc_column(tri: &Triangulation, disc: Disc) -> Vec<(usize, i64)> {
    disc_arcs(disc.kind)
        .into_iter()
        .map(|(face, corner)| {
            let sign = epsilon(tri, disc.tet, face, corner).expect("corner in face");
            (tri.arc_index(disc.tet, face, corner), i64::from(sign))
        })
        .collect()
}

pub fn boundary_of_disc(tri: &Triangulation, index: usize) -> Result<Chain1> {
    if index >= tri.disc_count() {
        return Err(Error::OutOfRange { index, limit: tri.disc_count() });
    }
    let mut out = Chain1::zeros(tri.arc_count());
    for (r, v) in disc_column(tri, Disc::from_index(index)) {
        out.0[r] += v;
    }
    Ok(out)
}

/// The boundary map from 2-chains to 1-chains: arcs by discs.
pub fn boundary_matrix(tri: &Triangulation) -> SparseMatrix {
    let columns = (0..tri.disc_count()).map(|j| disc_column(tri, Disc::from_index(j))).collect();
    SparseMatrix::from_columns(tri.arc_count(), columns)
}

/// Classical matching equations, one row per arc class: the number of
/// discs meeting the arc from the canonical side minus the number meeting
/// it from the other side. Built from gluing data alone.
pub fn matching_equations(tri: &Triangulation) -> SparseMatrix {
    let mut columns = vec![Vec::new(); tri.disc_count()];
    for face in 0..tri.face_count() {
        let [(t0, f0), (t1, f1)] = tri.face_sides(face);
        let partner = tri.gluing(t0, f0);
        debug_assert_eq!((partner.tet, partner.face), (t1, f1));
        for (pos, c0) in face_vertices(f0).into_iter().enumerate() {
            let row = 3 * face + pos;
            let c1 = partner.perm.apply(c0);
            for j in 0..7 {
                let kind = DiscType::from_slot(j);
                if kind.arc_corner(f0) == Some(c0) {
                    columns[Disc { tet: t0, kind }.index()].push((row, 1));
                }
                if kind.arc_corner(f1) == Some(c1) {
                    columns[Disc { tet: t1, kind }.index()].push((row, -1));
                }
            }
        }
    }
    SparseMatrix::from_columns(tri.arc_count(), columns)
}
