//! Hand-built 3×3 grids with `A′` at `(0, 0)`.

use crate::complex::DoubleComplex;
use crate::lattice::Backend;
use crate::table::groups::{alternating_with_elements, cyclic, cyclic_product, symmetric_with_elements};
use crate::table::{CayleyGroup, TableBackend, TableMorphism};

const T: TableBackend = TableBackend;

fn hom(src: &CayleyGroup, tgt: &CayleyGroup, images: Vec<usize>) -> TableMorphism {
    TableMorphism::new(src, tgt, images).expect("fixture maps are homomorphisms")
}

fn place(dc: &mut DoubleComplex<TableBackend>, objects: [[&CayleyGroup; 3]; 3]) {
    for (r, row) in objects.iter().enumerate() {
        for (c, obj) in row.iter().enumerate() {
            dc.set_object((r as i32, c as i32), (*obj).clone());
        }
    }
}

fn wire(dc: &mut DoubleComplex<TableBackend>, horizontal: Vec<((i32, i32), TableMorphism)>, vertical: Vec<((i32, i32), TableMorphism)>) {
    for (p, m) in horizontal {
        dc.set_horizontal(p, m).expect("fixture endpoints match");
    }
    for (p, m) in vertical {
        dc.set_vertical(p, m).expect("fixture endpoints match");
    }
}

/// Rows `1→C2→C4→C2→1`, its square `C2²→C4²→C2²`, and again `C2→C4→C2`;
/// columns include into the first summand and project onto the second.
pub fn c2_c4_grid() -> DoubleComplex<TableBackend> {
    let (c2, c4) = (cyclic(2), cyclic(4));
    let (c2c2, c4c4) = (cyclic_product(&[2, 2]), cyclic_product(&[4, 4]));
    let inc = |n: usize, m: usize| hom(&cyclic(n), &cyclic(m), (0..n).map(|x| x * (m / n)).collect());
    let red = |n: usize, m: usize| hom(&cyclic(n), &cyclic(m), (0..n).map(|x| x % m).collect());
    // componentwise maps of the squared row, index a + n·b
    let pair = |n: usize, m: usize, each: &dyn Fn(usize) -> usize| {
        hom(
            &cyclic_product(&[n, n]),
            &cyclic_product(&[m, m]),
            (0..n * n).map(|x| each(x % n) + m * each(x / n)).collect(),
        )
    };
    let first = |n: usize| hom(&cyclic(n), &cyclic_product(&[n, n]), (0..n).collect());
    let second = |n: usize| hom(&cyclic_product(&[n, n]), &cyclic(n), (0..n * n).map(|x| x / n).collect());

    let mut dc = DoubleComplex::new(T);
    place(&mut dc, [[&c2, &c4, &c2], [&c2c2, &c4c4, &c2c2], [&c2, &c4, &c2]]);
    wire(
        &mut dc,
        vec![
            ((0, 0), inc(2, 4)),
            ((0, 1), red(4, 2)),
            ((1, 0), pair(2, 4, &|x| 2 * x)),
            ((1, 1), pair(4, 2, &|x| x % 2)),
            ((2, 0), inc(2, 4)),
            ((2, 1), red(4, 2)),
        ],
        vec![
            ((0, 0), first(2)),
            ((0, 1), first(4)),
            ((0, 2), first(2)),
            ((1, 0), second(2)),
            ((1, 1), second(4)),
            ((1, 2), second(2)),
        ],
    );
    dc
}

struct S3 {
    group: CayleyGroup,
    perms: Vec<Vec<usize>>,
}

impl S3 {
    fn new() -> Self {
        let (group, perms) = symmetric_with_elements(3);
        S3 { group, perms }
    }

    fn index(&self, p: &[usize]) -> usize {
        self.perms.iter().position(|q| q == p).expect("a permutation of 0..3")
    }

    /// `C3 → S3`, `k ↦ (0 1 2)^k`.
    fn rotations(&self) -> TableMorphism {
        let c3 = cyclic(3);
        TableMorphism::from_generator_images(&c3, &self.group, &[(1, self.index(&[1, 2, 0]))])
            .expect("a 3-cycle has order 3")
    }

    fn sign(&self) -> TableMorphism {
        let images = self
            .perms
            .iter()
            .map(|p| {
                let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                inversions % 2
            })
            .collect();
        hom(&self.group, &cyclic(2), images)
    }
}

/// Two copies of `1→C3→S3→C2→1` joined by identities; third row trivial.
pub fn s3_grid() -> DoubleComplex<TableBackend> {
    let s3 = S3::new();
    let (c3, c2) = (cyclic(3), cyclic(2));
    let one = CayleyGroup::trivial();
    let mut dc = DoubleComplex::new(T);
    place(&mut dc, [[&c3, &s3.group, &c2], [&c3, &s3.group, &c2], [&one, &one, &one]]);
    wire(
        &mut dc,
        vec![
            ((0, 0), s3.rotations()),
            ((0, 1), s3.sign()),
            ((1, 0), s3.rotations()),
            ((1, 1), s3.sign()),
        ],
        vec![
            ((0, 0), T.identity(&c3)),
            ((0, 1), T.identity(&s3.group)),
            ((0, 2), T.identity(&c2)),
        ],
    );
    dc
}

/// First row `C3 → A3 → 1`, middle row `C3 → S3 → C2`, last row
/// `1 → C2 → C2`; the middle column is `A3 ↪ S3 → C2`.
pub fn alternating_grid() -> DoubleComplex<TableBackend> {
    let s3 = S3::new();
    let (a3, a3_perms) = alternating_with_elements(3);
    let (c3, c2) = (cyclic(3), cyclic(2));
    let one = CayleyGroup::trivial();
    let a3_in_s3 = hom(&a3, &s3.group, a3_perms.iter().map(|p| s3.index(p)).collect());
    let a3_index = |p: &[usize]| a3_perms.iter().position(|q| q == p).expect("even permutation");
    let c3_to_a3 = TableMorphism::from_generator_images(&c3, &a3, &[(1, a3_index(&[1, 2, 0]))])
        .expect("a 3-cycle has order 3");
    let mut dc = DoubleComplex::new(T);
    place(&mut dc, [[&c3, &a3, &one], [&c3, &s3.group, &c2], [&one, &c2, &c2]]);
    wire(
        &mut dc,
        vec![
            ((0, 0), c3_to_a3),
            ((1, 0), s3.rotations()),
            ((1, 1), s3.sign()),
            ((2, 1), T.identity(&c2)),
        ],
        vec![
            ((0, 0), T.identity(&c3)),
            ((0, 1), a3_in_s3),
            ((1, 1), s3.sign()),
            ((1, 2), T.identity(&c2)),
        ],
    );
    dc
}

/// [`c2_c4_grid`] with `A′` replaced by the trivial group, so the first
/// column is no longer exact at `A`.
pub fn broken_c2_c4_grid() -> DoubleComplex<TableBackend> {
    let mut dc = c2_c4_grid();
    dc.set_object((0, 0), CayleyGroup::trivial());
    dc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_double_complexes() {
        for dc in [c2_c4_grid(), s3_grid(), alternating_grid(), broken_c2_c4_grid()] {
            let report = dc.validate().unwrap();
            assert!(report.is_valid(), "{:?}", report.violations);
        }
    }

    #[test]
    fn grid_rows_are_exact_in_the_middle() {
        for dc in [c2_c4_grid(), s3_grid(), alternating_grid()] {
            for c in 0..3 {
                assert!(dc.is_row_exact_at((1, c)));
                assert!(dc.is_column_exact_at((1, c)));
            }
        }
        assert!(!broken_c2_c4_grid().is_column_exact_at((1, 0)));
    }
}
