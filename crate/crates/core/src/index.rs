//! Canonical indexing of normal discs and normal arcs.
//!
//! Discs of tetrahedron `i` occupy indices `7i..7i+7` in the order
//! `T0 T1 T2 T3 Q1 Q2 Q3`, where `Tv` cuts off local vertex `v` and `Qk`
//! separates edge `{0, k}` from the opposite edge. Arcs of face class `F`
//! occupy `3F..3F+3`, one per corner of the canonical face slot.

use serde::Serialize;

use crate::perm::Perm4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DiscType {
    Triangle(usize),
    Quad(usize),
}

impl DiscType {
    pub fn from_slot(j: usize) -> Self {
        match j {
            0..=3 => DiscType::Triangle(j),
            4..=6 => DiscType::Quad(j - 3),
            _ => panic!("disc slot {j} out of range"),
        }
    }

    pub fn slot(self) -> usize {
        match self {
            DiscType::Triangle(v) => v,
            DiscType::Quad(k) => 3 + k,
        }
    }

    /// Local vertex linked by this disc's boundary arc in face slot `face`,
    /// or `None` for the one face a triangle misses.
    pub fn arc_corner(self, face: usize) -> Option<usize> {
        match self {
            DiscType::Triangle(v) => (v != face).then_some(v),
            DiscType::Quad(k) => Some(quad_arc_corner(k, face)),
        }
    }

    /// The disc type after renaming local vertex `v` to `rho(v)`.
    pub fn relabel(self, rho: Perm4) -> Self {
        match self {
            DiscType::Triangle(v) => DiscType::Triangle(rho.apply(v)),
            DiscType::Quad(k) => {
                let (a, b) = (rho.apply(0), rho.apply(k));
                let k = match (a, b) {
                    (0, x) | (x, 0) => x,
                    _ => 6 - a - b,
                };
                DiscType::Quad(k)
            }
        }
    }
}

/// Corner linked by the arc of quad `Qk` in face slot `face`.
pub fn quad_arc_corner(k: usize, face: usize) -> usize {
    debug_assert!((1..=3).contains(&k) && face < 4);
    if face == 0 {
        k
    } else if face == k {
        0
    } else {
        6 - k - face
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Disc {
    pub tet: usize,
    pub kind: DiscType,
}

impl Disc {
    pub fn from_index(index: usize) -> Self {
        Disc { tet: index / 7, kind: DiscType::from_slot(index % 7) }
    }

    pub fn index(self) -> usize {
        7 * self.tet + self.kind.slot()
    }
}

/// A normal arc class, described through the canonical face slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arc {
    pub index: usize,
    /// face class
    pub face: usize,
    pub tet: usize,
    pub slot: usize,
    /// local vertex of `tet` linked by the arc
    pub corner: usize,
    /// vertex class linked by the arc
    pub vertex: usize,
}
