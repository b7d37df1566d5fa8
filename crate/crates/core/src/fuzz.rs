//! Random double complexes built as direct sums of elementary pieces, each
//! position then disguised by a random automorphism.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::{AnyComplex, DoubleComplex, Pos};
use crate::lattice::Backend;
use crate::table::groups::{direct_product, groups_up_to_order_8};
use crate::table::{CayleyGroup, TableBackend, TableMorphism};
use crate::vector::{random_automorphism, MatrixMorphism, VecBackend, VectorSpace};

/// Backends that can take direct sums and produce random automorphisms.
pub trait Fuzzable: Backend {
    /// A random nontrivial object small enough to be a summand.
    fn random_summand<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Object;
    /// Whether a position holding these summands stays within the size cap.
    fn fits(&self, parts: &[Self::Object]) -> bool;
    fn direct_sum(&self, parts: &[Self::Object]) -> Self::Object;
    /// Block-diagonal map between the direct sums of sources and targets.
    fn block_diagonal(&self, blocks: &[Self::Morphism]) -> Self::Morphism;
    /// A random isomorphism out of `obj`.
    fn random_isomorphism<R: Rng + ?Sized>(&self, obj: &Self::Object, rng: &mut R) -> Self::Morphism;
}

/// Largest group order allowed at a position of a fuzzed table complex.
pub const TABLE_ORDER_CAP: usize = 8;
/// Largest dimension allowed at a position of a fuzzed vector complex.
pub const VEC_DIM_CAP: usize = 3;

impl Fuzzable for TableBackend {
    fn random_summand<R: Rng + ?Sized>(&self, rng: &mut R) -> CayleyGroup {
        let groups = groups_up_to_order_8();
        groups[1..].choose(rng).expect("nonempty").1.clone()
    }

    fn fits(&self, parts: &[CayleyGroup]) -> bool {
        parts.iter().map(CayleyGroup::order).product::<usize>() <= TABLE_ORDER_CAP
    }

    fn direct_sum(&self, parts: &[CayleyGroup]) -> CayleyGroup {
        direct_product(parts)
    }

    fn block_diagonal(&self, blocks: &[TableMorphism]) -> TableMorphism {
        let sources: Vec<CayleyGroup> = blocks.iter().map(|m| m.source().clone()).collect();
        let targets: Vec<CayleyGroup> = blocks.iter().map(|m| m.target().clone()).collect();
        let source = direct_product(&sources);
        let target = direct_product(&targets);
        let images = (0..source.order())
            .map(|mut x| {
                let (mut index, mut radix) = (0, 1);
                for m in blocks {
                    let n = m.source().order();
                    index += m.apply(x % n) * radix;
                    x /= n;
                    radix *= m.target().order();
                }
                index
            })
            .collect();
        TableMorphism::new_unchecked(&source, &target, images)
    }

    fn random_isomorphism<R: Rng + ?Sized>(&self, obj: &CayleyGroup, rng: &mut R) -> TableMorphism {
        let mut perm: Vec<usize> = (1..obj.order()).collect();
        perm.shuffle(rng);
        perm.insert(0, 0);
        obj.relabel(&perm).expect("a permutation fixing 0").1
    }
}

impl Fuzzable for VecBackend {
    fn random_summand<R: Rng + ?Sized>(&self, rng: &mut R) -> VectorSpace {
        self.space(rng.gen_range(1..=2))
    }

    fn fits(&self, parts: &[VectorSpace]) -> bool {
        parts.iter().map(VectorSpace::dim).sum::<usize>() <= VEC_DIM_CAP
    }

    fn direct_sum(&self, parts: &[VectorSpace]) -> VectorSpace {
        self.space(parts.iter().map(VectorSpace::dim).sum())
    }

    fn block_diagonal(&self, blocks: &[MatrixMorphism]) -> MatrixMorphism {
        let source = self.space(blocks.iter().map(|m| m.source().dim()).sum());
        let target = self.space(blocks.iter().map(|m| m.target().dim()).sum());
        let mut rows = vec![vec![0u32; source.dim()]; target.dim()];
        let (mut r0, mut c0) = (0, 0);
        for m in blocks {
            for (i, row) in m.entries().iter().enumerate() {
                rows[r0 + i][c0..c0 + row.len()].copy_from_slice(row);
            }
            r0 += m.target().dim();
            c0 += m.source().dim();
        }
        MatrixMorphism::new(source, target, &rows).expect("block shapes add up")
    }

    fn random_isomorphism<R: Rng + ?Sized>(&self, obj: &VectorSpace, rng: &mut R) -> MatrixMorphism {
        random_automorphism(*obj, rng)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    /// One object, all differentials zero.
    Dot,
    /// Two copies joined by a horizontal identity.
    HorizontalEdge,
    /// Two copies joined by a vertical identity.
    VerticalEdge,
    /// Four copies on a square, every edge of the square an identity.
    Square,
}

impl PieceKind {
    fn cells(&self) -> &'static [(i32, i32)] {
        match self {
            PieceKind::Dot => &[(0, 0)],
            PieceKind::HorizontalEdge => &[(0, 0), (0, 1)],
            PieceKind::VerticalEdge => &[(0, 0), (1, 0)],
            PieceKind::Square => &[(0, 0), (0, 1), (1, 0), (1, 1)],
        }
    }

    fn horizontal_at(&self, offset: (i32, i32)) -> bool {
        matches!((self, offset), (PieceKind::HorizontalEdge, (0, 0)) | (PieceKind::Square, (_, 0)))
    }

    fn vertical_at(&self, offset: (i32, i32)) -> bool {
        matches!((self, offset), (PieceKind::VerticalEdge, (0, 0)) | (PieceKind::Square, (0, _)))
    }
}

#[derive(Debug, Clone)]
pub struct Piece<B: Backend> {
    pub kind: PieceKind,
    pub origin: Pos,
    pub object: B::Object,
}

impl<B: Backend> Piece<B> {
    fn offset(&self, pos: Pos) -> Option<(i32, i32)> {
        let off = (pos.0 - self.origin.0, pos.1 - self.origin.1);
        self.kind.cells().contains(&off).then_some(off)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzParams {
    pub max_rows: i32,
    pub max_cols: i32,
    pub max_pieces: usize,
}

impl Default for FuzzParams {
    fn default() -> Self {
        FuzzParams {
            max_rows: 4,
            max_cols: 4,
            max_pieces: 6,
        }
    }
}

/// Per-complex generator, deterministic in `(seed, index)`.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Picks pieces inside a `rows × cols` box, skipping any that would push a
/// position past the size cap.
pub fn random_pieces<B: Fuzzable, R: Rng + ?Sized>(backend: &B, params: FuzzParams, rng: &mut R) -> Vec<Piece<B>> {
    if params.max_pieces == 0 || params.max_rows < 1 || params.max_cols < 1 {
        return Vec::new();
    }
    let rows = rng.gen_range(1..=params.max_rows);
    let cols = rng.gen_range(1..=params.max_cols);
    let count = rng.gen_range(1..=params.max_pieces);
    let mut pieces: Vec<Piece<B>> = Vec::new();
    for _ in 0..count {
        let mut kinds = vec![PieceKind::Dot];
        if cols > 1 {
            kinds.push(PieceKind::HorizontalEdge);
        }
        if rows > 1 {
            kinds.push(PieceKind::VerticalEdge);
        }
        if rows > 1 && cols > 1 {
            kinds.extend([PieceKind::Square, PieceKind::Square]);
        }
        let kind = *kinds.choose(rng).expect("nonempty");
        let height = if matches!(kind, PieceKind::VerticalEdge | PieceKind::Square) { 2 } else { 1 };
        let width = if matches!(kind, PieceKind::HorizontalEdge | PieceKind::Square) { 2 } else { 1 };
        let origin = (rng.gen_range(0..=rows - height), rng.gen_range(0..=cols - width));
        let candidate: Piece<B> = Piece {
            kind,
            origin,
            object: backend.random_summand(rng),
        };
        let fits = kind.cells().iter().all(|&(dr, dc)| {
            let pos = (origin.0 + dr, origin.1 + dc);
            let mut parts: Vec<B::Object> = pieces
                .iter()
                .filter(|p| p.offset(pos).is_some())
                .map(|p| p.object.clone())
                .collect();
            parts.push(candidate.object.clone());
            backend.fits(&parts)
        });
        if fits {
            pieces.push(candidate);
        }
    }
    pieces
}

/// The direct sum of `pieces`, before any disguising.
pub fn assemble<B: Fuzzable>(backend: &B, pieces: &[Piece<B>]) -> DoubleComplex<B> {
    let mut dc = DoubleComplex::new(backend.clone());
    let positions: std::collections::BTreeSet<Pos> = pieces
        .iter()
        .flat_map(|p| p.kind.cells().iter().map(move |&(dr, dc)| (p.origin.0 + dr, p.origin.1 + dc)))
        .collect();
    // the summand of piece i at pos: its object there, else trivial
    let summand = |p: &Piece<B>, pos: Pos| {
        if p.offset(pos).is_some() {
            p.object.clone()
        } else {
            backend.trivial()
        }
    };
    let sum_at = |pos: Pos| -> B::Object {
        let parts: Vec<B::Object> = pieces.iter().map(|p| summand(p, pos)).collect();
        backend.direct_sum(&parts)
    };
    for &pos in &positions {
        dc.set_object(pos, sum_at(pos));
    }
    for &pos in &positions {
        for vertical in [false, true] {
            let to = if vertical { (pos.0 + 1, pos.1) } else { (pos.0, pos.1 + 1) };
            let blocks: Vec<B::Morphism> = pieces
                .iter()
                .map(|p| {
                    let joined = p.offset(pos).is_some_and(|off| {
                        if vertical {
                            p.kind.vertical_at(off)
                        } else {
                            p.kind.horizontal_at(off)
                        }
                    });
                    if joined {
                        backend.identity(&p.object)
                    } else {
                        backend.zero(&summand(p, pos), &summand(p, to))
                    }
                })
                .collect();
            let m = backend.block_diagonal(&blocks);
            if vertical {
                dc.set_vertical(pos, m).expect("sums line up");
            } else {
                dc.set_horizontal(pos, m).expect("sums line up");
            }
        }
    }
    dc
}

/// Replaces each object by an isomorphic copy and conjugates the
/// differentials to match.
pub fn disguise<B: Fuzzable, R: Rng + ?Sized>(dc: &DoubleComplex<B>, rng: &mut R) -> DoubleComplex<B> {
    let b = dc.backend();
    let positions = dc.support();
    let isos: std::collections::BTreeMap<Pos, B::Morphism> = positions
        .iter()
        .map(|&p| (p, b.random_isomorphism(&dc.object(p), rng)))
        .collect();
    let iso_at = |p: Pos| isos.get(&p).cloned().unwrap_or_else(|| b.identity(&b.trivial()));
    let mut out = DoubleComplex::new(b.clone());
    for &p in &positions {
        out.set_object(p, b.target(&iso_at(p)).clone());
    }
    for &p in &positions {
        let back = b.try_inverse(&iso_at(p)).expect("isomorphisms invert");
        for (to, m, vertical) in [((p.0, p.1 + 1), dc.horizontal(p), false), ((p.0 + 1, p.1), dc.vertical(p), true)] {
            let conj = b
                .compose(&iso_at(to), &b.compose(&m, &back).expect("composable"))
                .expect("composable");
            let placed = if vertical { out.set_vertical(p, conj) } else { out.set_horizontal(p, conj) };
            placed.expect("conjugated endpoints match");
        }
    }
    out
}

/// A random valid double complex.
pub fn fuzz_complex<B: Fuzzable>(backend: &B, seed: u64, index: u64, params: FuzzParams) -> DoubleComplex<B> {
    let mut rng = rng_for(seed, index);
    let pieces = random_pieces(backend, params, &mut rng);
    disguise(&assemble(backend, &pieces), &mut rng)
}

/// Fuzzed vector complexes over a prime drawn from `{2, 3, 5}` per complex.
pub fn fuzz_vec_complex(seed: u64, index: u64, params: FuzzParams) -> DoubleComplex<VecBackend> {
    let mut rng = rng_for(seed ^ 0x005e_ed0f_5ace, index);
    let prime = *[2u32, 3, 5].choose(&mut rng).expect("nonempty");
    fuzz_complex(&VecBackend::new(prime).expect("prime"), seed, index, params)
}

/// Generates `count` complexes in parallel, returned in index order.
pub fn fuzz_batch<B: Fuzzable>(backend: &B, seed: u64, count: usize, params: FuzzParams) -> Vec<DoubleComplex<B>> {
    (0..count as u64)
        .into_par_iter()
        .map(|i| fuzz_complex(backend, seed, i, params))
        .collect()
}

/// Which backend a fuzzed corpus draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BackendChoice {
    Table,
    Vector,
    /// Alternates: even indices table, odd indices vector.
    Mixed,
}

pub fn fuzz_any(choice: BackendChoice, seed: u64, index: u64, params: FuzzParams) -> AnyComplex {
    let table = match choice {
        BackendChoice::Table => true,
        BackendChoice::Vector => false,
        BackendChoice::Mixed => index.is_multiple_of(2),
    };
    if table {
        AnyComplex::Table(fuzz_complex(&TableBackend, seed, index, params))
    } else {
        AnyComplex::Vector(fuzz_vec_complex(seed, index, params))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::groups::cyclic;

    #[test]
    fn size_zero_is_empty() {
        let params = FuzzParams {
            max_pieces: 0,
            ..FuzzParams::default()
        };
        assert!(fuzz_complex(&TableBackend, 1, 0, params).is_empty());
    }

    #[test]
    fn single_square_validates() {
        let piece = Piece::<TableBackend> {
            kind: PieceKind::Square,
            origin: (0, 0),
            object: cyclic(2),
        };
        let mut rng = rng_for(7, 0);
        let dc = disguise(&assemble(&TableBackend, &[piece]), &mut rng);
        assert!(dc.validate().unwrap().is_valid());
        for p in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!(dc.donor(p).unwrap().is_defined());
            assert!(dc.receptor(p).unwrap().is_defined());
        }
        // identity square: receptor at the top-left sees both kernels vanish
        assert!(dc.receptor((0, 0)).unwrap().is_trivial(&TableBackend));
        assert_eq!(dc.donor((1, 1)).unwrap().order(&TableBackend), Some(1));
    }

    #[test]
    fn generation_is_deterministic_and_capped() {
        for i in 0..20 {
            let a = fuzz_complex(&TableBackend, 3, i, FuzzParams::default());
            let b = fuzz_complex(&TableBackend, 3, i, FuzzParams::default());
            assert_eq!(a, b);
            for p in a.support() {
                assert!(a.object(p).order() <= TABLE_ORDER_CAP);
                assert!((0..4).contains(&p.0) && (0..4).contains(&p.1));
            }
            let v = fuzz_vec_complex(3, i, FuzzParams::default());
            for p in v.support() {
                assert!(v.object(p).dim() <= VEC_DIM_CAP);
            }
        }
    }

    #[test]
    fn fuzzed_complexes_validate() {
        for dc in fuzz_batch(&TableBackend, 11, 40, FuzzParams::default()) {
            assert!(dc.validate().unwrap().is_valid());
        }
        for i in 0..40 {
            assert!(fuzz_vec_complex(11, i, FuzzParams::default()).validate().unwrap().is_valid());
        }
    }
}
