//! Realizes `F_p^n` as the Cayley table of `C_p^n`, so the two backends can
//! be checked against each other. The vector `(x_0, …, x_{n-1})` becomes
//! element `Σ x_i p^i`.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::fuzz::rng_for;
use crate::lattice::Backend;
use crate::table::groups::cyclic_product;
use crate::table::{CayleyGroup, TableBackend, TableMorphism, TableSubgroup};
use crate::vector::{random_morphism, random_subspace, MatrixMorphism, Subspace, VecBackend, VectorSpace};

pub fn element_index(space: VectorSpace, v: &[u32]) -> usize {
    let p = space.prime() as usize;
    v.iter().rev().fold(0, |acc, &x| acc * p + x as usize)
}

pub fn element_vector(space: VectorSpace, mut index: usize) -> Vec<u32> {
    let p = space.prime() as usize;
    (0..space.dim())
        .map(|_| {
            let x = index % p;
            index /= p;
            x as u32
        })
        .collect()
}

pub fn translate_space(space: VectorSpace) -> CayleyGroup {
    cyclic_product(&vec![space.prime() as usize; space.dim()])
}

/// The element set of a subspace, as a subgroup of the translated space.
pub fn translate_subspace(s: &Subspace) -> TableSubgroup {
    let space = s.space();
    let group = translate_space(space);
    let members = (0..space.cardinality()).filter(|&i| s.contains(&element_vector(space, i)));
    group.subgroup(members).expect("a subspace is closed under addition")
}

pub fn translate_morphism(f: &MatrixMorphism) -> TableMorphism {
    let (source, target) = (f.source(), f.target());
    let images = (0..source.cardinality())
        .map(|i| element_index(target, &f.apply(&element_vector(source, i))))
        .collect();
    TableMorphism::new(&translate_space(source), &translate_space(target), images)
        .expect("linear maps are homomorphisms")
}

/// Outcome of comparing the two backends on random instances.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossReport {
    pub cases: usize,
    pub comparisons: usize,
    pub disagreements: usize,
    pub witnesses: Vec<String>,
}

impl CrossReport {
    fn merge(mut self, other: CrossReport) -> Self {
        self.cases += other.cases;
        self.comparisons += other.comparisons;
        self.disagreements += other.disagreements;
        let room = 3usize.saturating_sub(self.witnesses.len());
        self.witnesses.extend(other.witnesses.into_iter().take(room));
        self
    }

    fn compare<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, vec_side: T, table_side: T) {
        self.comparisons += 1;
        if vec_side != table_side {
            self.disagreements += 1;
            if self.witnesses.len() < 3 {
                self.witnesses.push(format!("{what}: {vec_side:?} vs {table_side:?}"));
            }
        }
    }
}

/// Largest dimension used by [`cross_backend_trials`].
pub const CROSS_MAX_DIM: usize = 3;

/// Random spaces over `F_2` or `F_3`, a random linear map and random
/// subspaces; every lattice and Galois operation is computed in both
/// backends and compared after translation.
pub fn cross_backend_trials(seed: u64, count: usize) -> CrossReport {
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let mut r = CrossReport {
                cases: 1,
                ..CrossReport::default()
            };
            cross_case(&mut rng, &mut r);
            r
        })
        .reduce(CrossReport::default, CrossReport::merge)
}

fn cross_case<R: Rng>(rng: &mut R, r: &mut CrossReport) {
    let (v, t) = (VecBackend::new(*[2, 3].choose(rng).expect("nonempty")).expect("prime"), TableBackend);
    let src = v.space(rng.gen_range(0..=CROSS_MAX_DIM));
    let tgt = v.space(rng.gen_range(0..=CROSS_MAX_DIM));
    let f = random_morphism(src, tgt, rng);
    let tf = translate_morphism(&f);
    let [a, b] = [0; 2].map(|_| random_subspace(src, rng));
    let [c, d] = [0; 2].map(|_| random_subspace(tgt, rng));
    let (ta, tb, tc, td) = (translate_subspace(&a), translate_subspace(&b), translate_subspace(&c), translate_subspace(&d));
    let tr = translate_subspace;

    r.compare("join", tr(&v.join(&a, &b).unwrap()), t.join(&ta, &tb).unwrap());
    r.compare("meet", tr(&v.meet(&a, &b).unwrap()), t.meet(&ta, &tb).unwrap());
    r.compare("subset", v.is_subset(&a, &b).unwrap(), t.is_subset(&ta, &tb).unwrap());
    r.compare("order", v.subgroup_order(&a), t.subgroup_order(&ta));
    r.compare("direct image", tr(&v.direct_image(&f, &a).unwrap()), t.direct_image(&tf, &ta).unwrap());
    r.compare("inverse image", tr(&v.inverse_image(&f, &c).unwrap()), t.inverse_image(&tf, &tc).unwrap());
    r.compare("image", tr(&v.image(&f)), t.image(&tf));
    r.compare("kernel", tr(&v.kernel(&f)), t.kernel(&tf));
    r.compare(
        "galois",
        v.is_subset(&v.direct_image(&f, &b).unwrap(), &d).unwrap(),
        t.is_subset(&t.direct_image(&tf, &tb).unwrap(), &td).unwrap(),
    );
    r.compare("embedding", v.is_embedding(&f), t.is_embedding(&tf));
    r.compare("projection", v.is_projection(&f), t.is_projection(&tf));
    r.compare("normal", v.is_normal(&a), t.is_normal(&ta));
    r.compare("normal to", v.is_normal_to(&a, &b).unwrap(), t.is_normal_to(&ta, &tb).unwrap());
    r.compare(
        "quotient order",
        v.order(v.target(&v.projection_by(&a))),
        t.order(t.target(&t.projection_by(&ta))),
    );
    let mut vec_lattice: Vec<TableSubgroup> = v.all_subgroups(&src).iter().map(tr).collect();
    let mut table_lattice = t.all_subgroups(&translate_space(src));
    vec_lattice.sort();
    table_lattice.sort();
    r.compare("lattice", vec_lattice, table_lattice);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Backend;
    use crate::table::TableBackend;
    use crate::vector::VecBackend;

    #[test]
    fn indices_round_trip() {
        let space = VectorSpace::new(3, 3).unwrap();
        for i in 0..27 {
            assert_eq!(element_index(space, &element_vector(space, i)), i);
        }
        assert_eq!(element_index(space, &[1, 0, 0]), 1);
        assert_eq!(element_index(space, &[0, 1, 0]), 3);
    }

    #[test]
    fn lattices_have_the_same_size() {
        for (p, n) in [(2, 3), (3, 2), (2, 0)] {
            let v = VecBackend::new(p).unwrap();
            let space = v.space(n);
            let subs = v.all_subgroups(&space);
            let table = TableBackend.all_subgroups(&translate_space(space));
            assert_eq!(subs.len(), table.len());
            let mut translated: Vec<_> = subs.iter().map(translate_subspace).collect();
            translated.sort();
            let mut expected = table;
            expected.sort();
            assert_eq!(translated, expected);
        }
    }

    #[test]
    fn backends_agree_on_random_cases() {
        let report = cross_backend_trials(2, 60);
        assert_eq!(report.disagreements, 0, "{report:?}");
        assert_eq!(report.comparisons, 60 * 15);
    }
}
