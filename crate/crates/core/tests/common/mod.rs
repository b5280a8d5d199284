//! Oracles shared by the integration suites. Nothing here goes through the
//! signed boundary map or the Smith-form solver.

#![allow(dead_code)]

use normcx::{FaceGluing, Perm4, Triangulation};
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Vec3 = [i64; 3];

fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: Vec3, b: Vec3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn scale(k: i64, a: Vec3) -> Vec3 {
    [k * a[0], k * a[1], k * a[2]]
}

/// Sign of the frame `<a, b, e>` at the midpoint of the edge `tail → head`
/// of face `face` (the face missing local vertex `face`), for the arc
/// linking `corner`: `a` lies in the face, normal to the edge and pointing
/// away from the corner; `b` is normal to the face pointing out of the
/// tetrahedron. The tetrahedron is embedded in ℝ³ with its local order
/// positively oriented iff `orientation` is +1. Coordinates are doubled so
/// that midpoints stay integral; only signs matter.
pub fn determinant_epsilon(orientation: i32, face: usize, corner: usize, tail: usize, head: usize) -> i32 {
    let mut pos: [Vec3; 4] = [[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2]];
    if orientation < 0 {
        for p in pos.iter_mut() {
            p[2] = -p[2];
        }
    }
    let e = sub(pos[head], pos[tail]);
    // doubled midpoint
    let mid = [pos[tail][0] + pos[head][0], pos[tail][1] + pos[head][1], pos[tail][2] + pos[head][2]];
    let from_corner = sub(mid, scale(2, pos[corner]));
    // component of from_corner orthogonal to e, scaled by e·e
    let a = sub(scale(dot(e, e), from_corner), scale(dot(from_corner, e), e));
    let mut b = cross(sub(pos[tail], pos[corner]), sub(pos[head], pos[corner]));
    let to_apex = sub(scale(2, pos[face]), mid);
    if dot(b, to_apex) > 0 {
        b = scale(-1, b);
    }
    let det = dot(a, cross(b, e));
    assert_ne!(det, 0);
    det.signum() as i32
}

/// Corner linked by the boundary arc of disc slot `j` (0..7) in face
/// `face`, found by intersecting the disc's cut edges with the face.
pub fn disc_corner_in_face(j: usize, face: usize) -> Option<usize> {
    let side: Vec<usize> = if j < 4 { vec![j] } else { vec![0, j - 3] };
    let cut: Vec<[usize; 2]> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| [a, b]))
        .filter(|[a, b]| side.contains(a) != side.contains(b))
        .filter(|[a, b]| *a != face && *b != face)
        .collect();
    match cut[..] {
        [] => None,
        [[a, b], other] => Some(if other.contains(&a) { a } else { b }),
        _ => unreachable!(),
    }
}

/// Matching equations rebuilt from gluing data: for each face slot pair
/// and each corner, discs meeting that arc type on one side minus discs on
/// the other. Rows are listed once per glued pair, in no particular order.
pub fn oracle_matching_rows(tri: &Triangulation) -> Vec<Vec<(usize, i64)>> {
    let mut rows = Vec::new();
    for tet in 0..tri.tet_count() {
        for face in 0..4 {
            let g: FaceGluing = tri.gluing(tet, face);
            if (g.tet, g.face) < (tet, face) {
                continue;
            }
            for corner in (0..4).filter(|&c| c != face) {
                let partner_corner = g.perm.apply(corner);
                let mut row: Vec<(usize, i64)> = Vec::new();
                for j in 0..7 {
                    if disc_corner_in_face(j, face) == Some(corner) {
                        row.push((7 * tet + j, 1));
                    }
                    if disc_corner_in_face(j, g.face) == Some(partner_corner) {
                        row.push((7 * g.tet + j, -1));
                    }
                }
                rows.push(merge(row));
            }
        }
    }
    rows
}

fn merge(mut row: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    row.sort();
    let mut out: Vec<(usize, i64)> = Vec::new();
    for (i, v) in row {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

pub fn satisfies(rows: &[Vec<(usize, i64)>], x: &[i64]) -> bool {
    rows.iter().all(|r| r.iter().map(|&(i, v)| v * x[i]).sum::<i64>() == 0)
}

/// Depth-first enumeration of integer vectors with `lo[i] ≤ x[i] ≤ hi[i]`
/// satisfying every equation, with interval pruning, and with at most one
/// nonzero quad per tetrahedron when `admissible` is set.
pub struct Enumerator<'a> {
    rows: &'a [Vec<(usize, i64)>],
    var_rows: Vec<Vec<(usize, i64)>>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    order: Vec<usize>,
    admissible: bool,
}

impl<'a> Enumerator<'a> {
    pub fn new(rows: &'a [Vec<(usize, i64)>], lo: Vec<i64>, hi: Vec<i64>, admissible: bool) -> Self {
        let n = lo.len();
        let mut var_rows = vec![Vec::new(); n];
        for (r, row) in rows.iter().enumerate() {
            for &(i, v) in row {
                var_rows[i].push((r, v));
            }
        }
        // quads of a tetrahedron before its triangles
        let order = (0..n / 7).flat_map(|t| [4, 5, 6, 0, 1, 2, 3].map(|j| 7 * t + j)).collect();
        Enumerator { rows, var_rows, lo, hi, order, admissible }
    }

    pub fn run(&self, mut visit: impl FnMut(&[i64])) {
        let n = self.lo.len();
        let mut x = vec![0i64; n];
        let mut partial = vec![0i64; self.rows.len()];
        // [min, max] still reachable from unassigned variables, per row
        let mut slack_lo = vec![0i64; self.rows.len()];
        let mut slack_hi = vec![0i64; self.rows.len()];
        for (r, row) in self.rows.iter().enumerate() {
            for &(i, v) in row {
                let (a, b) = (v * self.lo[i], v * self.hi[i]);
                slack_lo[r] += a.min(b);
                slack_hi[r] += a.max(b);
            }
        }
        self.dfs(0, &mut x, &mut partial, &mut slack_lo, &mut slack_hi, &mut visit);
    }

    fn dfs(
        &self,
        depth: usize,
        x: &mut Vec<i64>,
        partial: &mut Vec<i64>,
        slack_lo: &mut Vec<i64>,
        slack_hi: &mut Vec<i64>,
        visit: &mut impl FnMut(&[i64]),
    ) {
        if depth == self.order.len() {
            visit(x);
            return;
        }
        let i = self.order[depth];
        for value in self.lo[i]..=self.hi[i] {
            if self.admissible && value != 0 && i % 7 >= 4 {
                let base = i - i % 7;
                if (4..7).any(|j| base + j != i && x[base + j] != 0) {
                    continue;
                }
            }
            x[i] = value;
            let mut ok = true;
            for &(r, v) in &self.var_rows[i] {
                let (a, b) = (v * self.lo[i], v * self.hi[i]);
                partial[r] += v * value;
                slack_lo[r] -= a.min(b);
                slack_hi[r] -= a.max(b);
                if partial[r] + slack_lo[r] > 0 || partial[r] + slack_hi[r] < 0 {
                    ok = false;
                }
            }
            if ok {
                self.dfs(depth + 1, x, partial, slack_lo, slack_hi, visit);
            }
            for &(r, v) in &self.var_rows[i] {
                let (a, b) = (v * self.lo[i], v * self.hi[i]);
                partial[r] -= v * value;
                slack_lo[r] += a.min(b);
                slack_hi[r] += a.max(b);
            }
            x[i] = 0;
        }
    }
}

/// All non-negative admissible matching solutions with entries ≤ `bound`.
pub fn normal_solutions(tri: &Triangulation, bound: i64) -> Vec<Vec<i64>> {
    let rows = oracle_matching_rows(tri);
    let n = tri.disc_count();
    let mut out = Vec::new();
    Enumerator::new(&rows, vec![0; n], vec![bound; n], true).run(|x| out.push(x.to_vec()));
    out
}

/// All triangle completions with entries ≤ `bound` of the given quads.
pub fn completions(tri: &Triangulation, quads: &[[i64; 3]], bound: i64) -> Vec<Vec<i64>> {
    let rows = oracle_matching_rows(tri);
    let n = tri.disc_count();
    let (mut lo, mut hi) = (vec![0; n], vec![bound; n]);
    for (t, q) in quads.iter().enumerate() {
        for k in 0..3 {
            lo[7 * t + 4 + k] = q[k];
            hi[7 * t + 4 + k] = q[k];
        }
    }
    let mut out = Vec::new();
    Enumerator::new(&rows, lo, hi, false).run(|x| out.push(x.to_vec()));
    out
}

/// Every admissible non-negative quad vector with entries ≤ `bound`.
pub fn admissible_quads(tets: usize, bound: i64) -> Vec<Vec<[i64; 3]>> {
    let mut per_tet = vec![[0, 0, 0]];
    for k in 0..3 {
        for c in 1..=bound {
            let mut q = [0; 3];
            q[k] = c;
            per_tet.push(q);
        }
    }
    let mut out: Vec<Vec<[i64; 3]>> = vec![Vec::new()];
    for _ in 0..tets {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                per_tet.iter().map(move |q| {
                    let mut p = prefix.clone();
                    p.push(*q);
                    p
                })
            })
            .collect();
    }
    out
}

/// Vertex class of each triangle disc, from the gluing data by flood fill.
pub fn triangle_vertex_classes(tri: &Triangulation) -> Vec<Vec<usize>> {
    let t = tri.tet_count();
    let mut class = vec![[usize::MAX; 4]; t];
    let mut groups = Vec::new();
    for tet in 0..t {
        for v in 0..4 {
            if class[tet][v] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut members = Vec::new();
            let mut stack = vec![(tet, v)];
            class[tet][v] = id;
            while let Some((i, a)) = stack.pop() {
                members.push(7 * i + a);
                for f in (0..4).filter(|&f| f != a) {
                    let g = tri.gluing(i, f);
                    let b = g.perm.apply(a);
                    if class[g.tet][b] == usize::MAX {
                        class[g.tet][b] = id;
                        stack.push((g.tet, b));
                    }
                }
            }
            members.sort();
            groups.push(members);
        }
    }
    groups
}

/// A random isomorphic relabelling: tetrahedron `i` becomes `tet_map[i]`
/// and its vertex `v` becomes `vertex_maps[i].apply(v)`.
pub struct Relabelling {
    pub tet_map: Vec<usize>,
    pub vertex_maps: Vec<Perm4>,
}

impl Relabelling {
    pub fn random(tets: usize, rng: &mut impl Rng) -> Self {
        let mut tet_map: Vec<usize> = (0..tets).collect();
        tet_map.shuffle(rng);
        let perms: Vec<Perm4> = Perm4::all().collect();
        let vertex_maps = (0..tets).map(|_| perms[rng.gen_range(0..24)]).collect();
        Relabelling { tet_map, vertex_maps }
    }

    /// Where disc slot `j` of tetrahedron `tet` lands, computed from the
    /// separated vertex sets.
    pub fn disc(&self, tet: usize, j: usize) -> usize {
        let rho = self.vertex_maps[tet];
        let slot = if j < 4 {
            rho.apply(j)
        } else {
            let pair = [rho.apply(0), rho.apply(j - 3)];
            let partner = if pair.contains(&0) { pair[0] + pair[1] } else { 6 - pair[0] - pair[1] };
            3 + partner
        };
        7 * self.tet_map[tet] + slot
    }

    pub fn map_coords(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for (d, &c) in x.iter().enumerate() {
            out[self.disc(d / 7, d % 7)] = c;
        }
        out
    }

    pub fn map_quads(&self, q: &[[i64; 3]]) -> Vec<[i64; 3]> {
        let mut full = vec![0; 7 * q.len()];
        for (t, row) in q.iter().enumerate() {
            full[7 * t + 4..7 * t + 7].copy_from_slice(row);
        }
        self.map_coords(&full).chunks(7).map(|c| [c[4], c[5], c[6]]).collect()
    }
}

// Laplace expansion, independent of the elimination code.
fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k × k` minors.
pub fn minor_gcd(a: &[Vec<i64>], k: usize) -> i128 {
    let (m, n) = (a.len(), a[0].len());
    let mut g: i128 = 0;
    for rows in subsets(m, k) {
        for cols in subsets(n, k) {
            let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j]).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}
