//! Reduced simplicial homology over the rationals, Cohen-Macaulayness and k-CM tests.
//!
//! Boundary ranks are first computed modulo a large prime. Since `rank_p <= rank_Q`, a vanishing
//! Betti number mod `p` certifies vanishing over the rationals; exact elimination runs only when
//! the modular answer is nonzero.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::SimplicialComplex;
use crate::error::{MatxError, Result};
use crate::set::{bits_of, k_subsets};

const P: u64 = 2_147_483_647;

/// `betti[d + 1]` is the rank of reduced homology in dimension `d`, for `-1 <= d <= dim`.
pub type BettiVector = Vec<usize>;

type SparseRow = Vec<(u32, i64)>;

/// Rows are faces of cardinality `k`, columns faces of cardinality `k - 1`.
fn boundary_rows(faces_k: &[u32], index_km1: &HashMap<u32, u32>) -> Vec<SparseRow> {
    faces_k
        .iter()
        .map(|&f| {
            let mut row: SparseRow = bits_of(f)
                .enumerate()
                .map(|(pos, e)| {
                    let col = index_km1[&(f & !(1 << e))];
                    (col, if pos % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            row.sort_unstable_by_key(|&(c, _)| c);
            row
        })
        .collect()
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % P, P - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % P;
        }
        base = base * base % P;
        exp >>= 1;
    }
    acc
}

/// Rank mod `P` by sparse reduction on leading (largest) columns.
fn rank_mod_p(rows: &[SparseRow], ncols: usize) -> usize {
    let mut pivots: Vec<Option<Vec<(u32, u64)>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut cur: Vec<(u32, u64)> =
            row.iter().map(|&(c, v)| (c, v.rem_euclid(P as i64) as u64)).collect();
        while let Some(&(lead, lv)) = cur.last() {
            match &pivots[lead as usize] {
                Some(piv) => {
                    // piv is normalised to leading coefficient 1
                    let factor = lv;
                    cur = sub_scaled(&cur, piv, factor);
                }
                None => {
                    let inv = inv_mod(lv);
                    let normed = cur.iter().map(|&(c, v)| (c, v * inv % P)).collect();
                    pivots[lead as usize] = Some(normed);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn sub_scaled(a: &[(u32, u64)], b: &[(u32, u64)], factor: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, (P - b[j].1 * factor % P) % P));
            j += 1;
        } else {
            let v = (a[i].1 + P - b[j].1 * factor % P) % P;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Exact rank by fraction-free elimination, in `i128` while it fits, then `BigInt`.
fn rank_exact(rows: &[SparseRow], ncols: usize) -> usize {
    let dense: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            let mut d = vec![0i128; ncols];
            for &(c, v) in r {
                d[c as usize] = v as i128;
            }
            d
        })
        .collect();
    match bareiss_i128(dense.clone()) {
        Some(r) => r,
        None => bareiss_big(dense.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()),
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let (rows, cols) = (m.len(), m.first().map_or(0, Vec::len));
    let mut prev = 1i128;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, p);
        let piv = m[rank][col];
        for r in rank + 1..rows {
            let lead = m[r][col];
            for c in col..cols {
                let v = piv.checked_mul(m[r][c])?.checked_sub(lead.checked_mul(m[rank][c])?)?;
                m[r][c] = v / prev;
            }
        }
        prev = piv;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let (rows, cols) = (m.len(), m.first().map_or(0, Vec::len));
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let piv = m[rank][col].clone();
        for r in rank + 1..rows {
            let lead = m[r][col].clone();
            for c in col..cols {
                let v = &piv * &m[r][c] - &lead * &m[rank][c];
                m[r][c] = v / &prev;
            }
        }
        prev = piv.abs();
        if piv.is_negative() {
            prev = -prev;
        }
        rank += 1;
    }
    rank
}

struct Chain {
    by_size: Vec<Vec<u32>>,
}

impl Chain {
    /// `faces` must be downward closed.
    fn new(faces: &[u32]) -> Self {
        let rank = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); rank + 1];
        for &f in faces {
            by_size[f.count_ones() as usize].push(f);
        }
        Chain { by_size }
    }

    fn boundary(&self, k: usize) -> (Vec<SparseRow>, usize) {
        let index: HashMap<u32, u32> =
            self.by_size[k - 1].iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
        (boundary_rows(&self.by_size[k], &index), self.by_size[k - 1].len())
    }

    /// Ranks of `∂_k` for `k = 0..=r+1`, with `∂_0 = ∂_{r+1} = 0`.
    fn ranks(&self, exact: bool) -> Vec<usize> {
        let r = self.by_size.len() - 1;
        let mut out = vec![0; r + 2];
        for (k, slot) in out.iter_mut().enumerate().take(r + 1).skip(1) {
            let (rows, ncols) = self.boundary(k);
            let rp = rank_mod_p(&rows, ncols);
            *slot = if exact && rp < rows.len().min(ncols) { rank_exact(&rows, ncols) } else { rp };
        }
        out
    }

    fn betti(&self, ranks: &[usize]) -> BettiVector {
        (0..self.by_size.len()).map(|k| self.by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
    }
}

/// Reduced rational homology, augmented by the empty face.
pub fn reduced_homology(c: &SimplicialComplex) -> BettiVector {
    let chain = Chain::new(c.faces());
    chain.betti(&chain.ranks(true))
}

fn rank_of(faces: &[u32]) -> u32 {
    faces.iter().map(|f| f.count_ones()).max().unwrap_or(0)
}

/// Connectivity of the 1-skeleton, by repeated neighbourhood expansion on masks.
fn graph_connected(faces: &[u32]) -> bool {
    let verts = faces.iter().filter(|f| f.count_ones() == 1).fold(0, |acc, f| acc | f);
    if verts == 0 {
        return true;
    }
    let edges: Vec<u32> = faces.iter().copied().filter(|f| f.count_ones() == 2).collect();
    let mut reach = verts & verts.wrapping_neg();
    loop {
        let next = edges.iter().filter(|&&e| e & reach != 0).fold(reach, |acc, &e| acc | e);
        if next == reach {
            return reach == verts;
        }
        reach = next;
    }
}

/// `H̃_i = 0` for every `i < dim`, for a downward-closed face list.
fn acyclic_below_top(faces: &[u32]) -> bool {
    match rank_of(faces) {
        // only H̃_{-1} could be nonzero, and ∅ is a face
        0 | 1 => return true,
        2 => return graph_connected(faces),
        _ => {}
    }
    let chain = Chain::new(faces);
    let top = chain.by_size.len() - 1;
    let modular = chain.betti(&chain.ranks(false));
    if modular[..top].iter().all(|&b| b == 0) {
        return true;
    }
    let exact = chain.betti(&chain.ranks(true));
    exact[..top].iter().all(|&b| b == 0)
}

fn is_pure_faces(faces: &[u32], face_set: &HashSet<u32>) -> bool {
    let r = rank_of(faces);
    let universe = faces.iter().fold(0u32, |acc, f| acc | f);
    faces
        .iter()
        .filter(|f| f.count_ones() < r)
        .all(|&f| bits_of(universe & !f).any(|e| face_set.contains(&(f | 1 << e))))
}

/// Link faces relabelled onto `0..m` in vertex order, so equal shapes share a cache key.
fn compact_link(faces: &[u32], f: u32) -> Vec<u32> {
    let link: Vec<u32> = faces.iter().filter(|&&g| g & f == f).map(|&g| g & !f).collect();
    let keep = link.iter().fold(0u32, |acc, g| acc | g);
    let mut out: Vec<u32> = link.into_iter().map(|g| crate::matroid::compact(g, keep)).collect();
    out.sort_unstable();
    out
}

type LinkCache = HashMap<Vec<u32>, bool>;

fn cm_faces(faces: &[u32], cache: &mut LinkCache) -> bool {
    let face_set: HashSet<u32> = faces.iter().copied().collect();
    if !is_pure_faces(faces, &face_set) {
        return false;
    }
    // in a pure complex lk F has rank r - |F|, and links of rank <= 1 are always acyclic
    let r = rank_of(faces);
    faces.iter().filter(|f| f.count_ones() + 1 < r).all(|&f| {
        let key = compact_link(faces, f);
        if let Some(&hit) = cache.get(&key) {
            return hit;
        }
        let ok = acyclic_below_top(&key);
        cache.insert(key, ok);
        ok
    })
}

/// Reisner's criterion: pure, and every link `lk F` (including `F = ∅`) has vanishing reduced
/// homology below its top dimension.
pub fn is_cohen_macaulay(c: &SimplicialComplex) -> bool {
    let r = c.rank() as u32;
    c.is_pure()
        && c.faces()
            .par_iter()
            .filter(|f| f.count_ones() + 1 < r)
            .all(|&f| acyclic_below_top(&compact_link(c.faces(), f)))
}

/// Brute-force limits for k-CM checks.
#[derive(Clone, Copy, Debug)]
pub struct KcmLimits {
    pub max_k: usize,
    pub max_vertices: usize,
}

impl Default for KcmLimits {
    fn default() -> Self {
        KcmLimits { max_k: 4, max_vertices: 12 }
    }
}

fn check_limits(c: &SimplicialComplex, k: usize, limits: KcmLimits) -> Result<()> {
    if k > limits.max_k {
        return Err(MatxError::BeyondBruteForceCap(format!("k = {k} exceeds {}", limits.max_k)));
    }
    if c.num_vertices() > limits.max_vertices {
        return Err(MatxError::BeyondBruteForceCap(format!(
            "{} vertices exceed {}",
            c.num_vertices(),
            limits.max_vertices
        )));
    }
    Ok(())
}

/// `Δ - A` is CM of the same dimension for every vertex set `|A| < k`.
pub fn is_k_cm(c: &SimplicialComplex, k: usize, limits: KcmLimits) -> Result<bool> {
    check_limits(c, k, limits)?;
    Ok(k == 0 || cm_level_upto(c, k) >= k)
}

/// The largest `k <= max_k` with `Δ` k-CM, or `0` when `Δ` is not CM.
pub fn cm_level(c: &SimplicialComplex, max_k: usize, limits: KcmLimits) -> Result<usize> {
    check_limits(c, max_k, limits)?;
    Ok(cm_level_upto(c, max_k))
}

fn cm_level_upto(c: &SimplicialComplex, max_k: usize) -> usize {
    let r = c.rank() as u32;
    let verts: Vec<usize> = bits_of(c.vertex_mask()).collect();
    let mut cache = LinkCache::new();
    let mut level = 0;
    for size in 0..max_k {
        if size > verts.len() {
            // no vertex set of this size: the condition holds vacuously
            return max_k;
        }
        let ok = k_subsets(verts.len(), size).all(|sub| {
            let a = bits_of(sub).fold(0u32, |acc, i| acc | 1 << verts[i]);
            let d: Vec<u32> = c.faces().iter().copied().filter(|g| g & a == 0).collect();
            rank_of(&d) == r && cm_faces(&d, &mut cache)
        });
        if !ok {
            break;
        }
        level = size + 1;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{broken_circuit_complex, independence_complex};
    use crate::graph::theta_graph;
    use crate::matroid::Matroid;

    fn cx(n: usize, facets: &[u32]) -> SimplicialComplex {
        SimplicialComplex::from_facets((0..n).map(|i| i.to_string()).collect(), facets).unwrap()
    }

    #[test]
    fn homology_of_small_complexes() {
        assert_eq!(reduced_homology(&cx(0, &[0])), vec![1]);
        assert_eq!(reduced_homology(&cx(3, &[0b011, 0b101, 0b110])), vec![0, 0, 1]);
        assert_eq!(reduced_homology(&cx(3, &[0b111])), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology(&cx(4, &[0b0011, 0b1100])), vec![0, 1, 0]);
        // boundary of a tetrahedron
        assert_eq!(reduced_homology(&cx(4, &[0b0111, 0b1011, 0b1101, 0b1110])), vec![0, 0, 0, 1]);
    }

    #[test]
    fn exact_and_modular_ranks_agree_on_small_boundaries() {
        let d = independence_complex(&Matroid::uniform(3, 6).unwrap()).unwrap();
        let chain = Chain::new(d.faces());
        assert_eq!(chain.ranks(false), chain.ranks(true));
        for k in 1..=3 {
            let (rows, nc) = chain.boundary(k);
            let dense: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    let mut v = vec![BigInt::zero(); nc];
                    for &(c, x) in r {
                        v[c as usize] = BigInt::from(x);
                    }
                    v
                })
                .collect();
            assert_eq!(bareiss_big(dense), rank_exact(&rows, nc));
        }
    }

    #[test]
    fn matroid_complexes_are_cm() {
        for (r, n) in [(1, 3), (2, 4), (3, 5)] {
            assert!(is_cohen_macaulay(&independence_complex(&Matroid::uniform(r, n).unwrap()).unwrap()));
        }
        let theta = theta_graph(3, 2).unwrap().cycle_matroid();
        assert!(is_cohen_macaulay(&broken_circuit_complex(&theta, None).unwrap()));
    }

    #[test]
    fn two_disjoint_edges_are_not_cm() {
        assert!(!is_cohen_macaulay(&cx(4, &[0b0011, 0b1100])));
        // non-pure
        assert!(!is_cohen_macaulay(&cx(3, &[0b011, 0b100])));
    }

    #[test]
    fn uniform_cm_levels() {
        // U_{r,n} is (n - r + 1)-CM and no more
        let lim = KcmLimits::default();
        let d = independence_complex(&Matroid::uniform(2, 4).unwrap()).unwrap();
        assert_eq!(cm_level(&d, 4, lim).unwrap(), 3);
        let d = independence_complex(&Matroid::uniform(2, 3).unwrap()).unwrap();
        assert_eq!(cm_level(&d, 4, lim).unwrap(), 2);
        assert!(is_k_cm(&d, 2, lim).unwrap());
        assert!(!is_k_cm(&d, 3, lim).unwrap());
        assert!(matches!(is_k_cm(&d, 5, lim), Err(MatxError::BeyondBruteForceCap(_))));
    }
}
