use std::fmt;

/// A permutation of the four vertices of a tetrahedron, stored as images.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn new(images: [usize; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        let mut out = [0u8; 4];
        for (i, &x) in images.iter().enumerate() {
            if x > 3 || seen[x] {
                return None;
            }
            seen[x] = true;
            out[i] = x as u8;
        }
        Some(Perm4(out))
    }

    /// Extends a face correspondence to a vertex bijection: the three corners
    /// of face `face` (in increasing order) go to `corners`, and `face` goes
    /// to the vertex of the target face left out.
    pub fn from_face_corners(face: usize, corners: [usize; 3]) -> Option<Self> {
        let mut images = [0usize; 4];
        let mut used = [false; 4];
        for (&c, v) in corners.iter().zip(face_vertices(face)) {
            if c > 3 || used[c] {
                return None;
            }
            used[c] = true;
            images[v] = c;
        }
        images[face] = used.iter().position(|u| !u)?;
        Perm4::new(images)
    }

    #[inline]
    pub fn apply(self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(self) -> [usize; 4] {
        self.0.map(usize::from)
    }

    pub fn inverse(self) -> Self {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[self.0[i] as usize] = i as u8;
        }
        Perm4(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm4) -> Self {
        Perm4(other.0.map(|i| self.0[i as usize]))
    }

    pub fn sign(self) -> i32 {
        sign_of_sequence(self.images())
    }

    pub fn all() -> impl Iterator<Item = Perm4> {
        (0..24).map(|mut n| {
            let mut pool = vec![0u8, 1, 2, 3];
            let mut out = [0u8; 4];
            for (slot, radix) in out.iter_mut().zip([6, 2, 1, 1]) {
                *slot = pool.remove(n / radix);
                n %= radix;
            }
            Perm4(out)
        })
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm4{:?}", self.0)
    }
}

/// Parity of a sequence of four distinct labels read as a permutation of
/// 0123. Panics on repeated labels.
pub fn sign_of_sequence(seq: [usize; 4]) -> i32 {
    let mut sign = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            assert_ne!(seq[i], seq[j], "repeated vertex in {seq:?}");
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The three vertices of face slot `face` in increasing order.
pub fn face_vertices(face: usize) -> [usize; 3] {
    match face {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        3 => [0, 1, 2],
        _ => panic!("face slot {face} out of range"),
    }
}

/// The six edges of a tetrahedron in lexicographic order.
pub const EDGES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

pub fn edge_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("not an edge: {a}{b}"),
    }
}

/// The two vertices of a face other than `corner`, in increasing order.
pub fn opposite_edge(face: usize, corner: usize) -> [usize; 2] {
    let mut it = face_vertices(face).into_iter().filter(|&x| x != corner);
    [it.next().unwrap(), it.next().unwrap()]
}
