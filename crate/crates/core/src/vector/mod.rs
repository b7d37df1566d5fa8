//! Finite-dimensional vector spaces over prime fields.
//!
//! Subspaces are stored by their reduced row-echelon basis, which is unique,
//! so subspace equality is plain structural equality.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{Backend, BackendTag};

mod fp;

pub(crate) use fp::Mat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VectorSpace {
    prime: u32,
    dim: usize,
}

impl VectorSpace {
    pub fn new(prime: u32, dim: usize) -> Result<Self> {
        if !fp::is_prime(prime) {
            return Err(Error::Invalid(format!("{prime} is not prime")));
        }
        Ok(VectorSpace { prime, dim })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors, `p^dim`.
    pub fn cardinality(&self) -> usize {
        (self.prime as usize).pow(self.dim as u32)
    }
}

/// A subspace, stored as the nonzero rows of its reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    space: VectorSpace,
    basis: Mat,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}", self.basis.row_vecs())
    }
}

impl Subspace {
    /// The span of `vectors` (entries reduced mod p).
    pub fn span(space: VectorSpace, vectors: &[Vec<u32>]) -> Result<Self> {
        for v in vectors {
            if v.len() != space.dim {
                return Err(Error::Shape(format!(
                    "vector of length {} in a space of dimension {}",
                    v.len(),
                    space.dim
                )));
            }
        }
        let rows: Vec<Vec<u32>> = vectors
            .iter()
            .map(|v| v.iter().map(|x| x % space.prime).collect())
            .collect();
        Ok(Self::from_mat(space, &Mat::from_rows(&rows, space.dim)))
    }

    fn from_mat(space: VectorSpace, m: &Mat) -> Self {
        Subspace {
            space,
            basis: m.echelon_basis(space.prime),
        }
    }

    pub fn space(&self) -> VectorSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Reduced row-echelon basis rows.
    pub fn basis(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let row = Mat::from_rows(&[v.iter().map(|x| x % self.space.prime).collect()], self.space.dim);
        self.basis.vstack(&row).rank(self.space.prime) == self.dim()
    }
}

/// A linear map, stored as a `target.dim × source.dim` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixMorphism {
    source: VectorSpace,
    target: VectorSpace,
    matrix: Mat,
}

impl fmt::Debug for MatrixMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F{}^{} -> F{}^{} {:?}",
            self.source.prime,
            self.source.dim,
            self.target.prime,
            self.target.dim,
            self.matrix.row_vecs()
        )
    }
}

impl MatrixMorphism {
    /// `rows` has one row per target coordinate and one column per source
    /// coordinate. Entries are reduced mod p.
    pub fn new(source: VectorSpace, target: VectorSpace, rows: &[Vec<u32>]) -> Result<Self> {
        if source.prime != target.prime {
            return Err(Error::ParentMismatch { op: "matrix morphism" });
        }
        if rows.len() != target.dim || rows.iter().any(|r| r.len() != source.dim) {
            return Err(Error::Shape(format!(
                "expected a {}x{} matrix",
                target.dim, source.dim
            )));
        }
        let p = source.prime;
        let reduced: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
        Ok(MatrixMorphism {
            source,
            target,
            matrix: Mat::from_rows(&reduced, source.dim),
        })
    }

    fn from_mat(source: VectorSpace, target: VectorSpace, matrix: Mat) -> Self {
        debug_assert_eq!((matrix.rows, matrix.cols), (target.dim, source.dim));
        MatrixMorphism { source, target, matrix }
    }

    pub fn source(&self) -> VectorSpace {
        self.source
    }

    pub fn target(&self) -> VectorSpace {
        self.target
    }

    pub fn entries(&self) -> Vec<Vec<u32>> {
        self.matrix.row_vecs()
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.source.prime as u64;
        (0..self.target.dim)
            .map(|r| {
                let s: u64 = (0..self.source.dim)
                    .map(|c| self.matrix.get(r, c) as u64 * v[c] as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }
}

/// `F_p^n → F_p^(n-k)`: reduce modulo the echelon basis, then keep the
/// non-pivot coordinates. Its kernel is exactly the subspace.
fn quotient_matrix(s: &Subspace) -> Mat {
    let n = s.space.dim;
    let p = s.space.prime;
    let pivots: Vec<usize> = (0..s.dim())
        .map(|r| (0..n).find(|&c| s.basis.get(r, c) != 0).expect("echelon rows are nonzero"))
        .collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut q = Mat::zeros(free.len(), n);
    for (i, &fc) in free.iter().enumerate() {
        q.set(i, fc, 1);
    }
    for (r, &pc) in pivots.iter().enumerate() {
        for (i, &fc) in free.iter().enumerate() {
            q.set(i, pc, (p - s.basis.get(r, fc)) % p);
        }
    }
    q
}

fn enumerate_subspaces(space: VectorSpace) -> Vec<Subspace> {
    let n = space.dim;
    let p = space.prime;
    let mut out = Vec::new();
    for k in 0..=n {
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pivots = &pivots;
                    (pivots[r] + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let combos = (p as usize).pow(free.len() as u32);
            for mut code in 0..combos {
                let mut m = Mat::zeros(k, n);
                for (r, &c) in pivots.iter().enumerate() {
                    m.set(r, c, 1);
                }
                for &(r, c) in &free {
                    m.set(r, c, (code % p as usize) as u32);
                    code /= p as usize;
                }
                out.push(Subspace { space, basis: m });
            }
            // next k-combination of 0..n
            let Some(i) = (0..k).rev().find(|&i| pivots[i] < n - k + i) else {
                break;
            };
            pivots[i] += 1;
            for j in i + 1..k {
                pivots[j] = pivots[j - 1] + 1;
            }
        }
    }
    out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.basis.data.cmp(&b.basis.data)));
    out
}

type LatticeCache = Mutex<HashMap<VectorSpace, Arc<Vec<Subspace>>>>;

fn lattice(space: VectorSpace) -> Arc<Vec<Subspace>> {
    static CACHE: OnceLock<LatticeCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("lattice cache poisoned").get(&space) {
        return hit.clone();
    }
    let computed = Arc::new(enumerate_subspaces(space));
    cache
        .lock()
        .expect("lattice cache poisoned")
        .entry(space)
        .or_insert(computed)
        .clone()
}

pub fn random_subspace<R: Rng + ?Sized>(space: VectorSpace, rng: &mut R) -> Subspace {
    let k = rng.gen_range(0..=space.dim);
    let mut m = Mat::zeros(k, space.dim);
    for v in m.data.iter_mut() {
        *v = rng.gen_range(0..space.prime);
    }
    Subspace::from_mat(space, &m)
}

pub fn random_morphism<R: Rng + ?Sized>(source: VectorSpace, target: VectorSpace, rng: &mut R) -> MatrixMorphism {
    let mut m = Mat::zeros(target.dim, source.dim);
    for v in m.data.iter_mut() {
        *v = rng.gen_range(0..source.prime);
    }
    MatrixMorphism::from_mat(source, target, m)
}

/// A uniformly random invertible linear map `space → space`.
pub fn random_automorphism<R: Rng + ?Sized>(space: VectorSpace, rng: &mut R) -> MatrixMorphism {
    loop {
        let f = random_morphism(space, space, rng);
        if f.matrix.rank(space.prime) == space.dim {
            return f;
        }
    }
}

/// A random linear map `source → target` whose image lies in `within`.
pub fn random_morphism_into<R: Rng + ?Sized>(source: VectorSpace, within: &Subspace, rng: &mut R) -> MatrixMorphism {
    let k = within.dim();
    let p = source.prime;
    let mut coeffs = Mat::zeros(k, source.dim);
    for v in coeffs.data.iter_mut() {
        *v = rng.gen_range(0..p);
    }
    // columns of basisᵀ · coeffs are combinations of basis vectors
    let m = within.basis.transpose().mul(&coeffs, p);
    MatrixMorphism::from_mat(source, within.space, m)
}

/// The vector-space realization of [`Backend`]; `prime` fixes the field of
/// the designated trivial object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VecBackend {
    prime: u32,
}

impl VecBackend {
    pub fn new(prime: u32) -> Result<Self> {
        VectorSpace::new(prime, 0)?;
        Ok(VecBackend { prime })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn space(&self, dim: usize) -> VectorSpace {
        VectorSpace { prime: self.prime, dim }
    }
}

impl Backend for VecBackend {
    type Object = VectorSpace;
    type Subgroup = Subspace;
    type Morphism = MatrixMorphism;

    fn tag(&self) -> BackendTag {
        BackendTag::VectorSpace
    }

    fn trivial(&self) -> VectorSpace {
        self.space(0)
    }

    fn order(&self, obj: &VectorSpace) -> usize {
        obj.cardinality()
    }

    fn top(&self, obj: &VectorSpace) -> Subspace {
        Subspace {
            space: *obj,
            basis: Mat::identity(obj.dim),
        }
    }

    fn bottom(&self, obj: &VectorSpace) -> Subspace {
        Subspace {
            space: *obj,
            basis: Mat::zeros(0, obj.dim),
        }
    }

    fn parent<'a>(&self, s: &'a Subspace) -> &'a VectorSpace {
        &s.space
    }

    fn subgroup_order(&self, s: &Subspace) -> usize {
        (s.space.prime as usize).pow(s.dim() as u32)
    }

    fn is_subset(&self, s: &Subspace, t: &Subspace) -> Result<bool> {
        self.same_parent(s, t, "is_subset")?;
        Ok(t.basis.vstack(&s.basis).rank(s.space.prime) == t.dim())
    }

    fn join(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        self.same_parent(s, t, "join")?;
        Ok(Subspace::from_mat(s.space, &s.basis.vstack(&t.basis)))
    }

    fn meet(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        self.same_parent(s, t, "meet")?;
        let p = s.space.prime;
        let stacked = s.basis.vstack(&t.basis);
        // (a, b) with a·S + b·T = 0; then a·S spans the intersection
        let relations = stacked.transpose().nullspace(p);
        let coeffs = relations.columns(0..s.dim());
        Ok(Subspace::from_mat(s.space, &coeffs.mul(&s.basis, p)))
    }

    fn all_subgroups(&self, obj: &VectorSpace) -> Vec<Subspace> {
        lattice(*obj).as_ref().clone()
    }

    fn source<'a>(&self, f: &'a MatrixMorphism) -> &'a VectorSpace {
        &f.source
    }

    fn target<'a>(&self, f: &'a MatrixMorphism) -> &'a VectorSpace {
        &f.target
    }

    fn identity(&self, obj: &VectorSpace) -> MatrixMorphism {
        MatrixMorphism::from_mat(*obj, *obj, Mat::identity(obj.dim))
    }

    fn zero(&self, source: &VectorSpace, target: &VectorSpace) -> MatrixMorphism {
        MatrixMorphism::from_mat(*source, *target, Mat::zeros(target.dim, source.dim))
    }

    fn compose(&self, g: &MatrixMorphism, f: &MatrixMorphism) -> Result<MatrixMorphism> {
        if f.target != g.source {
            return Err(Error::NotComposable);
        }
        Ok(MatrixMorphism::from_mat(
            f.source,
            g.target,
            g.matrix.mul(&f.matrix, f.source.prime),
        ))
    }

    fn direct_image(&self, f: &MatrixMorphism, s: &Subspace) -> Result<Subspace> {
        if s.space != f.source {
            return Err(Error::ParentMismatch { op: "direct_image" });
        }
        let images = s.basis.mul(&f.matrix.transpose(), f.source.prime);
        Ok(Subspace::from_mat(f.target, &images))
    }

    fn inverse_image(&self, f: &MatrixMorphism, t: &Subspace) -> Result<Subspace> {
        if t.space != f.target {
            return Err(Error::ParentMismatch { op: "inverse_image" });
        }
        let p = f.source.prime;
        let condition = quotient_matrix(t).mul(&f.matrix, p);
        Ok(Subspace::from_mat(f.source, &condition.nullspace(p)))
    }

    fn is_normal(&self, _s: &Subspace) -> bool {
        true
    }

    fn is_conormal(&self, _s: &Subspace) -> bool {
        true
    }

    fn normal_closure(&self, s: &Subspace) -> Subspace {
        s.clone()
    }

    fn embedding_of(&self, s: &Subspace) -> Result<MatrixMorphism> {
        let source = VectorSpace {
            prime: s.space.prime,
            dim: s.dim(),
        };
        Ok(MatrixMorphism::from_mat(source, s.space, s.basis.transpose()))
    }

    fn projection_by_normal(&self, s: &Subspace) -> Result<MatrixMorphism> {
        let target = VectorSpace {
            prime: s.space.prime,
            dim: s.space.dim - s.dim(),
        };
        Ok(MatrixMorphism::from_mat(s.space, target, quotient_matrix(s)))
    }

    fn lift(&self, embedding: &MatrixMorphism, f: &MatrixMorphism) -> Result<MatrixMorphism> {
        if embedding.target != f.target {
            return Err(Error::Endpoint("lift: maps have different targets".into()));
        }
        if !self.is_embedding(embedding) {
            return Err(Error::Invalid("lift: map is not an embedding".into()));
        }
        let u = embedding
            .matrix
            .solve(&f.matrix, f.source.prime)
            .ok_or(Error::NoLift)?;
        Ok(MatrixMorphism::from_mat(f.source, embedding.source, u))
    }

    fn descend(&self, projection: &MatrixMorphism, g: &MatrixMorphism) -> Result<MatrixMorphism> {
        if projection.source != g.source {
            return Err(Error::Endpoint("descend: maps have different sources".into()));
        }
        if !self.is_projection(projection) {
            return Err(Error::Invalid("descend: map is not a projection".into()));
        }
        let p = g.source.prime;
        let vt = projection
            .matrix
            .transpose()
            .solve(&g.matrix.transpose(), p)
            .ok_or(Error::NoDescent)?;
        let v = MatrixMorphism::from_mat(projection.target, g.target, vt.transpose());
        if self.compose(&v, projection)? != *g {
            return Err(Error::NoDescent);
        }
        Ok(v)
    }

    fn is_embedding(&self, f: &MatrixMorphism) -> bool {
        f.matrix.rank(f.source.prime) == f.source.dim
    }

    fn is_projection(&self, f: &MatrixMorphism) -> bool {
        f.matrix.rank(f.source.prime) == f.target.dim
    }

    fn try_inverse(&self, f: &MatrixMorphism) -> Option<MatrixMorphism> {
        if f.source.dim != f.target.dim {
            return None;
        }
        let inv = f.matrix.solve(&Mat::identity(f.target.dim), f.source.prime)?;
        let candidate = MatrixMorphism::from_mat(f.target, f.source, inv);
        (candidate.matrix.mul(&f.matrix, f.source.prime) == Mat::identity(f.source.dim)).then_some(candidate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2(dim: usize) -> VectorSpace {
        VectorSpace::new(2, dim).unwrap()
    }

    #[test]
    fn sum_and_intersection_in_f2_squared() {
        let b = VecBackend::new(2).unwrap();
        let v = f2(2);
        let x = Subspace::span(v, &[vec![1, 0]]).unwrap();
        let y = Subspace::span(v, &[vec![0, 1]]).unwrap();
        assert_eq!(b.join(&x, &y).unwrap(), b.top(&v));
        assert_eq!(b.meet(&x, &y).unwrap(), b.bottom(&v));
        assert_eq!(b.join(&x, &b.bottom(&v)).unwrap(), x);
        assert_eq!(b.meet(&x, &b.top(&v)).unwrap(), x);
    }

    #[test]
    fn image_and_preimage() {
        let b = VecBackend::new(2).unwrap();
        let v = f2(2);
        let f = MatrixMorphism::new(v, v, &[vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(b.image(&f), Subspace::span(v, &[vec![1, 0]]).unwrap());
        assert_eq!(b.kernel(&f), Subspace::span(v, &[vec![0, 1]]).unwrap());
        let z = b.zero(&v, &v);
        assert_eq!(b.image(&z), b.bottom(&v));
        let any = Subspace::span(v, &[vec![1, 1]]).unwrap();
        assert_eq!(b.inverse_image(&z, &any).unwrap(), b.top(&v));
    }

    #[test]
    fn subspace_counts() {
        // Gaussian binomial sums
        let b3 = VecBackend::new(3).unwrap();
        assert_eq!(b3.all_subgroups(&b3.space(3)).len(), 28);
        let b2 = VecBackend::new(2).unwrap();
        assert_eq!(b2.all_subgroups(&b2.space(3)).len(), 16);
        let b5 = VecBackend::new(5).unwrap();
        assert_eq!(b5.all_subgroups(&b5.space(4)).len(), 1 + 156 + 806 + 156 + 1);
        assert_eq!(b5.all_subgroups(&b5.space(0)).len(), 1);
    }

    #[test]
    fn quotient_has_exact_kernel() {
        let b = VecBackend::new(3).unwrap();
        let v = b.space(3);
        let s = Subspace::span(v, &[vec![1, 2, 0], vec![0, 1, 1]]).unwrap();
        let pi = b.projection_by_normal(&s).unwrap();
        assert_eq!(b.kernel(&pi), s);
        assert!(b.is_projection(&pi));
        let iota = b.embedding_of(&s).unwrap();
        assert_eq!(b.image(&iota), s);
        assert!(b.is_embedding(&iota));
    }

    #[test]
    fn non_prime_rejected() {
        assert!(VectorSpace::new(4, 2).is_err());
        assert!(VecBackend::new(1).is_err());
    }
}
