//! Executable checks of the lattice axioms and lemmas, each paired with its
//! dual. Failures are collected as data with witnesses.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::fuzz::rng_for;
use crate::lattice::Backend;
use crate::table::groups::{groups_up_to_order_8, lattice_fixtures};
use crate::table::{all_homomorphisms, CayleyGroup, TableBackend, TableMorphism};
use crate::vector::{random_automorphism, random_morphism, random_subspace, MatrixMorphism, Subspace, VecBackend, VectorSpace};

pub const GALOIS: &str = "galois adjunction";
pub const FUNCTORIALITY: &str = "functoriality";
pub const IMAGE_PREIMAGE: &str = "image-preimage";
pub const UNIVERSAL: &str = "embedding universal property";
pub const FACTORIZATION: &str = "factorization";
pub const NORMAL_JOINS: &str = "normal joins";
pub const JOIN_PRESERVATION: &str = "join preservation";
pub const MONIC: &str = "embeddings monic";
pub const TRIVIAL_KERNEL: &str = "embedding kernel trivial";
pub const ISO_CRITERION: &str = "iso criterion";
pub const CORRESPONDENCE: &str = "subgroup correspondence";
pub const NORMALITY_TRANSFER: &str = "normality transfer";
pub const MODULAR: &str = "restricted modular law";

/// Every law, in report order.
pub const LAWS: [&str; 13] = [
    GALOIS,
    FUNCTORIALITY,
    IMAGE_PREIMAGE,
    UNIVERSAL,
    FACTORIZATION,
    NORMAL_JOINS,
    JOIN_PRESERVATION,
    MONIC,
    TRIVIAL_KERNEL,
    ISO_CRITERION,
    CORRESPONDENCE,
    NORMALITY_TRANSFER,
    MODULAR,
];

const MAX_WITNESSES: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: &'static str,
    pub dual: bool,
    pub instances: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for LawOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.dual { format!("{} (dual)", self.law) } else { self.law.to_string() };
        write!(
            f,
            "{} {name}: {} instances, {} failures",
            if self.passed() { "ok  " } else { "FAIL" },
            self.instances,
            self.failures
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub outcomes: Vec<LawOutcome>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(LawOutcome::passed)
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().map(|o| o.failures).sum()
    }

    pub fn instances(&self) -> usize {
        self.outcomes.iter().map(|o| o.instances).sum()
    }

    /// Smallest instance count over all laws and their duals; zero if some
    /// law was never exercised.
    pub fn min_instances(&self) -> usize {
        LAWS.iter()
            .flat_map(|law| [false, true].map(|dual| self.get(law, dual).map_or(0, |o| o.instances)))
            .min()
            .unwrap_or(0)
    }

    pub fn get(&self, law: &str, dual: bool) -> Option<&LawOutcome> {
        self.outcomes.iter().find(|o| o.law == law && o.dual == dual)
    }
}

#[derive(Debug, Default)]
struct Recorder {
    outcomes: BTreeMap<(usize, bool), LawOutcome>,
}

impl Recorder {
    fn check(&mut self, law: &'static str, dual: bool, outcome: Result<bool>, witness: impl FnOnce() -> String) {
        let key = (LAWS.iter().position(|l| *l == law).expect("known law"), dual);
        let entry = self.outcomes.entry(key).or_insert_with(|| LawOutcome {
            law,
            dual,
            instances: 0,
            failures: 0,
            witnesses: Vec::new(),
        });
        entry.instances += 1;
        let failed = match outcome {
            Ok(ok) => (!ok).then(String::new),
            Err(e) => Some(format!("error: {e}; ")),
        };
        if let Some(prefix) = failed {
            entry.failures += 1;
            if entry.witnesses.len() < MAX_WITNESSES {
                entry.witnesses.push(prefix + &witness());
            }
        }
    }

    fn merge(mut self, other: Recorder) -> Recorder {
        for (key, o) in other.outcomes {
            let entry = self.outcomes.entry(key).or_insert_with(|| LawOutcome {
                law: o.law,
                dual: o.dual,
                instances: 0,
                failures: 0,
                witnesses: Vec::new(),
            });
            entry.instances += o.instances;
            entry.failures += o.failures;
            let room = MAX_WITNESSES.saturating_sub(entry.witnesses.len());
            entry.witnesses.extend(o.witnesses.into_iter().take(room));
        }
        self
    }

    fn report(self) -> AxiomReport {
        AxiomReport {
            outcomes: self.outcomes.into_values().collect(),
        }
    }
}

/// Laws that quantify over subgroups of a single object.
fn object_laws<B: Backend>(b: &B, rec: &mut Recorder, obj: &B::Object, subs: &[B::Subgroup]) {
    let id = b.identity(obj);
    for s in subs {
        rec.check(FUNCTORIALITY, false, b.direct_image(&id, s).map(|x| x == *s), || format!("identity, S = {s:?}"));
        rec.check(FUNCTORIALITY, true, b.inverse_image(&id, s).map(|x| x == *s), || format!("identity, T = {s:?}"));

        if b.is_conormal(s) {
            let kernel = b.embedding_of(s).map(|i| b.is_trivial_subgroup(&b.kernel(&i)));
            rec.check(TRIVIAL_KERNEL, false, kernel, || format!("S = {s:?}"));
            let image = b.embedding_of(s).map(|i| b.image(&i) == *s);
            rec.check(UNIVERSAL, false, image, || format!("image of the embedding of {s:?}"));
        }
        let pi = b.projection_by(s);
        rec.check(TRIVIAL_KERNEL, true, Ok(b.image(&pi) == b.top(b.target(&pi))), || format!("S = {s:?}"));
        if b.is_normal(s) {
            rec.check(UNIVERSAL, true, Ok(b.kernel(&pi) == *s), || format!("kernel of the projection by {s:?}"));
        }
    }

    for s in subs {
        for t in subs {
            if b.is_normal(s) && b.is_normal(t) {
                let ok = b.join(s, t).map(|j| b.is_normal(&j));
                rec.check(NORMAL_JOINS, false, ok, || format!("S = {s:?}, T = {t:?}"));
            }
            if b.is_conormal(s) && b.is_conormal(t) {
                let ok = b.meet(s, t).map(|m| b.is_conormal(&m));
                rec.check(NORMAL_JOINS, true, ok, || format!("S = {s:?}, T = {t:?}"));
            }
            if b.is_normal(t) {
                let pi = b.projection_by(s);
                let ok = b.direct_image(&pi, t).map(|x| b.is_normal(&x));
                rec.check(NORMALITY_TRANSFER, false, ok, || format!("project by {s:?}, T = {t:?}"));
            }
            if b.is_conormal(s) && b.is_conormal(t) {
                let ok = b
                    .embedding_of(s)
                    .and_then(|i| b.inverse_image(&i, t))
                    .map(|x| b.is_conormal(&x));
                rec.check(NORMALITY_TRANSFER, true, ok, || format!("embed {s:?}, T = {t:?}"));
            }
        }
    }

    let contains = |big: &B::Subgroup, small: &B::Subgroup| b.is_subset(small, big).unwrap_or(false);
    for s in subs {
        let embedding = if b.is_conormal(s) { b.embedding_of(s).ok() } else { None };
        let projection = if b.is_normal(s) { b.projection_by_normal(s).ok() } else { None };
        for x in subs {
            for y in subs {
                if let Some(iota) = &embedding {
                    let joined = b.join(x, y);
                    if joined.as_ref().is_ok_and(|j| contains(s, j)) {
                        let ok = (|| {
                            let lhs = b.inverse_image(iota, &joined?)?;
                            let rhs = b.join(&b.inverse_image(iota, x)?, &b.inverse_image(iota, y)?)?;
                            Ok(lhs == rhs)
                        })();
                        rec.check(CORRESPONDENCE, false, ok, || format!("S = {s:?}, A = {x:?}, B = {y:?}"));
                    }
                }
                if let Some(pi) = &projection {
                    let met = b.meet(x, y);
                    if met.as_ref().is_ok_and(|m| contains(m, s)) {
                        let ok = (|| {
                            let lhs = b.direct_image(pi, &met?)?;
                            let rhs = b.meet(&b.direct_image(pi, x)?, &b.direct_image(pi, y)?)?;
                            Ok(lhs == rhs)
                        })();
                        rec.check(CORRESPONDENCE, true, ok, || format!("S = {s:?}, A = {x:?}, B = {y:?}"));
                    }
                }
            }
        }
    }

    // modular law on triples X, Y, Z
    for x in subs {
        for z in subs {
            let x_in_z = contains(z, x);
            let z_in_x = contains(x, z);
            if !x_in_z && !z_in_x {
                continue;
            }
            for y in subs {
                if x_in_z && ((b.is_normal(y) && b.is_conormal(z)) || (b.is_conormal(y) && b.is_normal(x))) {
                    let ok = (|| Ok(b.join(x, &b.meet(y, z)?)? == b.meet(&b.join(x, y)?, z)?))();
                    rec.check(MODULAR, false, ok, || format!("X = {x:?}, Y = {y:?}, Z = {z:?}"));
                }
                if z_in_x && ((b.is_conormal(y) && b.is_normal(z)) || (b.is_normal(y) && b.is_conormal(x))) {
                    let ok = (|| Ok(b.meet(x, &b.join(y, z)?)? == b.join(&b.meet(x, y)?, z)?))();
                    rec.check(MODULAR, true, ok, || format!("X = {x:?}, Y = {y:?}, Z = {z:?}"));
                }
            }
        }
    }
}

/// Laws about a single morphism and the subgroups of its ends.
fn morphism_laws<B: Backend>(b: &B, rec: &mut Recorder, f: &B::Morphism, src: &[B::Subgroup], tgt: &[B::Subgroup]) {
    let (image, kernel) = (b.image(f), b.kernel(f));
    for s in src {
        for t in tgt {
            let ok = (|| Ok(b.is_subset(&b.direct_image(f, s)?, t)? == b.is_subset(s, &b.inverse_image(f, t)?)?))();
            rec.check(GALOIS, false, ok, || format!("f = {f:?}, S = {s:?}, T = {t:?}"));
        }
    }
    for s in src {
        let ok = (|| {
            let unit = b.is_subset(s, &b.inverse_image(f, &b.direct_image(f, s)?)?)?;
            let closed = b.inverse_image(f, &b.direct_image(f, s)?)? == b.join(s, &kernel)?;
            Ok((unit, closed))
        })();
        rec.check(GALOIS, true, ok.as_ref().map(|r| r.0).map_err(Clone::clone), || format!("f = {f:?}, S = {s:?}"));
        rec.check(IMAGE_PREIMAGE, true, ok.map(|r| r.1), || format!("f = {f:?}, A = {s:?}"));
    }
    for t in tgt {
        let ok = (|| {
            let counit = b.is_subset(&b.direct_image(f, &b.inverse_image(f, t)?)?, t)?;
            let meets = b.direct_image(f, &b.inverse_image(f, t)?)? == b.meet(t, &image)?;
            Ok((counit, meets))
        })();
        rec.check(GALOIS, true, ok.as_ref().map(|r| r.0).map_err(Clone::clone), || format!("f = {f:?}, T = {t:?}"));
        rec.check(IMAGE_PREIMAGE, false, ok.map(|r| r.1), || format!("f = {f:?}, B = {t:?}"));
    }
    for (i, s) in src.iter().enumerate() {
        for t in &src[i..] {
            let ok = (|| Ok(b.direct_image(f, &b.join(s, t)?)? == b.join(&b.direct_image(f, s)?, &b.direct_image(f, t)?)?))();
            rec.check(JOIN_PRESERVATION, false, ok, || format!("f = {f:?}, S = {s:?}, T = {t:?}"));
        }
    }
    for (i, s) in tgt.iter().enumerate() {
        for t in &tgt[i..] {
            let ok =
                (|| Ok(b.inverse_image(f, &b.meet(s, t)?)? == b.meet(&b.inverse_image(f, s)?, &b.inverse_image(f, t)?)?))();
            rec.check(JOIN_PRESERVATION, true, ok, || format!("f = {f:?}, S = {s:?}, T = {t:?}"));
        }
    }

    let factored = b.factorize(f);
    let ok = factored
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|t| Ok(t.composite(b)? == *f && b.is_isomorphism(&t.middle)));
    rec.check(FACTORIZATION, false, ok, || format!("f = {f:?}"));
    let ok = factored.map(|t| b.kernel(&t.projection) == kernel && b.image(&t.embedding) == image);
    rec.check(FACTORIZATION, true, ok, || format!("f = {f:?}"));

    let inverse = b.try_inverse(f);
    rec.check(ISO_CRITERION, false, Ok(b.is_isomorphism(f) == inverse.is_some()), || format!("f = {f:?}"));
    if let Some(g) = inverse {
        let ok = (|| {
            Ok(b.is_embedding(&g)
                && b.is_projection(&g)
                && b.compose(&g, f)? == b.identity(b.source(f))
                && b.compose(f, &g)? == b.identity(b.target(f)))
        })();
        rec.check(ISO_CRITERION, true, ok, || format!("f = {f:?}"));
    }

    // mediating maps through embeddings containing the image and
    // projections by normal subgroups inside the kernel
    for s in tgt {
        if b.is_conormal(s) && b.is_subset(&image, s).unwrap_or(false) {
            let ok = (|| {
                let iota = b.embedding_of(s)?;
                Ok(b.compose(&iota, &b.lift(&iota, f)?)? == *f)
            })();
            rec.check(UNIVERSAL, false, ok, || format!("f = {f:?}, S = {s:?}"));
        }
    }
    for s in src {
        if b.is_normal(s) && b.is_subset(s, &kernel).unwrap_or(false) {
            let ok = (|| {
                let pi = b.projection_by_normal(s)?;
                Ok(b.compose(&b.descend(&pi, f)?, &pi)? == *f)
            })();
            rec.check(UNIVERSAL, true, ok, || format!("f = {f:?}, S = {s:?}"));
        }
    }
}

fn composition_laws<B: Backend>(
    b: &B,
    rec: &mut Recorder,
    f: &B::Morphism,
    g: &B::Morphism,
    src: &[B::Subgroup],
    tgt: &[B::Subgroup],
) {
    let gf = match b.compose(g, f) {
        Ok(gf) => gf,
        Err(e) => {
            rec.check(FUNCTORIALITY, false, Err(e), || format!("f = {f:?}, g = {g:?}"));
            return;
        }
    };
    for s in src {
        let ok = (|| Ok(b.direct_image(&gf, s)? == b.direct_image(g, &b.direct_image(f, s)?)?))();
        rec.check(FUNCTORIALITY, false, ok, || format!("f = {f:?}, g = {g:?}, S = {s:?}"));
    }
    for t in tgt {
        let ok = (|| Ok(b.inverse_image(&gf, t)? == b.inverse_image(f, &b.inverse_image(g, t)?)?))();
        rec.check(FUNCTORIALITY, true, ok, || format!("f = {f:?}, g = {g:?}, T = {t:?}"));
    }
}

/// Distinct `u` stay distinct after `m ∘ u` (primal) or `u ∘ m` (dual).
fn cancellation_law<B: Backend>(b: &B, rec: &mut Recorder, m: &B::Morphism, others: &[B::Morphism], dual: bool) {
    let distinct: HashSet<&B::Morphism> = others.iter().collect();
    if distinct.len() < 2 {
        return;
    }
    let composites: Result<HashSet<B::Morphism>> = distinct
        .iter()
        .map(|u| if dual { b.compose(u, m) } else { b.compose(m, u) })
        .collect();
    let ok = composites.map(|c| c.len() == distinct.len());
    rec.check(MONIC, dual, ok, || format!("m = {m:?} against {} maps", distinct.len()));
}

/// Runs every law over a fixture: all subgroups of each object, every
/// morphism, every composable pair, and cancellation of every embedding and
/// projection against the fixture maps that meet it.
pub fn check_fixture<B: Backend>(b: &B, objects: &[B::Object], morphisms: &[B::Morphism]) -> AxiomReport {
    let mut ends: Vec<B::Object> = objects.to_vec();
    for f in morphisms {
        ends.push(b.source(f).clone());
        ends.push(b.target(f).clone());
    }
    let mut seen = HashSet::new();
    ends.retain(|o| seen.insert(o.clone()));
    let lattices: HashMap<B::Object, Vec<B::Subgroup>> = ends.iter().map(|o| (o.clone(), b.all_subgroups(o))).collect();
    let subs = |o: &B::Object| lattices[o].as_slice();

    let mut by_source: HashMap<&B::Object, Vec<&B::Morphism>> = HashMap::new();
    let mut by_target: HashMap<&B::Object, Vec<&B::Morphism>> = HashMap::new();
    for f in morphisms {
        by_source.entry(b.source(f)).or_default().push(f);
        by_target.entry(b.target(f)).or_default().push(f);
    }

    let objects_rec = ends
        .par_iter()
        .filter(|o| objects.contains(o))
        .map(|o| {
            let mut rec = Recorder::default();
            object_laws(b, &mut rec, o, subs(o));
            rec
        })
        .reduce(Recorder::default, Recorder::merge);

    let morphisms_rec = morphisms
        .par_iter()
        .map(|f| {
            let mut rec = Recorder::default();
            let (s, t) = (b.source(f), b.target(f));
            morphism_laws(b, &mut rec, f, subs(s), subs(t));
            for g in by_source.get(t).into_iter().flatten() {
                composition_laws(b, &mut rec, f, g, subs(s), subs(b.target(g)));
            }
            if b.is_embedding(f) {
                let mut groups: HashMap<&B::Object, Vec<B::Morphism>> = HashMap::new();
                for u in by_target.get(s).into_iter().flatten() {
                    groups.entry(b.source(u)).or_default().push((*u).clone());
                }
                for us in groups.values() {
                    cancellation_law(b, &mut rec, f, us, false);
                }
            }
            if b.is_projection(f) {
                let mut groups: HashMap<&B::Object, Vec<B::Morphism>> = HashMap::new();
                for v in by_source.get(t).into_iter().flatten() {
                    groups.entry(b.target(v)).or_default().push((*v).clone());
                }
                for vs in groups.values() {
                    cancellation_law(b, &mut rec, f, vs, true);
                }
            }
            rec
        })
        .reduce(Recorder::default, Recorder::merge);

    objects_rec.merge(morphisms_rec).report()
}

/// All groups of order at most 8 with every homomorphism between them, plus
/// the larger lattice fixtures for the object-level laws.
pub fn exhaustive_table_suite() -> AxiomReport {
    let groups: Vec<CayleyGroup> = groups_up_to_order_8().into_iter().map(|(_, g)| g).collect();
    let mut objects = groups.clone();
    for (_, g) in lattice_fixtures() {
        if !objects.contains(&g) {
            objects.push(g);
        }
    }
    let morphisms: Vec<TableMorphism> = groups
        .par_iter()
        .flat_map_iter(|g| groups.iter().flat_map(move |h| all_homomorphisms(g, h)))
        .collect();
    check_fixture(&TableBackend, &objects, &morphisms)
}

/// Largest dimension used by the random vector suite.
pub const VEC_SUITE_MAX_DIM: usize = 4;

/// `configurations` random instances over `F_p` for `p ∈ {2, 3, 5}` and
/// dimensions up to four. Each configuration exercises every law at least
/// once.
pub fn random_vec_suite(seed: u64, configurations: usize) -> AxiomReport {
    (0..configurations as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let mut rec = Recorder::default();
            random_vec_configuration(&mut rng, &mut rec);
            rec
        })
        .reduce(Recorder::default, Recorder::merge)
        .report()
}

fn random_vec_configuration<R: Rng>(rng: &mut R, rec: &mut Recorder) {
    let p = [2u32, 3, 5][rng.gen_range(0..3)];
    let b = VecBackend::new(p).expect("prime");
    let dims: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=VEC_SUITE_MAX_DIM)).collect();
    let spaces: Vec<_> = dims.iter().map(|&n| b.space(n)).collect();
    // a small sublattice sample: bounds, two random subspaces, their join and meet
    let sample = |rng: &mut R, space| {
        let (s, t) = (random_subspace(space, rng), random_subspace(space, rng));
        let mut v = vec![b.bottom(&space), b.top(&space), b.join(&s, &t).unwrap(), b.meet(&s, &t).unwrap(), s, t];
        let mut seen = HashSet::new();
        v.retain(|x| seen.insert(x.clone()));
        v
    };
    let subs: Vec<_> = spaces.iter().map(|&s| sample(rng, s)).collect();
    let f = random_morphism(spaces[0], spaces[1], rng);
    let g = random_morphism(spaces[1], spaces[2], rng);
    let auto = random_automorphism(spaces[0], rng);

    object_laws(&b, rec, &spaces[0], &subs[0]);
    for m in [&f, &g, &auto] {
        morphism_laws(&b, rec, m, subs_for(&subs, &spaces, b.source(m)), subs_for(&subs, &spaces, b.target(m)));
    }
    composition_laws(&b, rec, &f, &g, &subs[0], &subs[2]);

    // cancellation: an embedding of a random subspace against random maps
    // into it, and a projection against random maps out of its quotient
    let top = b.top(&spaces[0]);
    let bottom = b.bottom(&spaces[0]);
    let below_top: Vec<_> = subs[0].iter().filter(|s| **s != top).collect();
    let above_bottom: Vec<_> = subs[0].iter().filter(|s| **s != bottom).collect();
    let iota = b.embedding_of(above_bottom[rng.gen_range(0..above_bottom.len())]).expect("every subspace is conormal");
    let pi = b.projection_by(below_top[rng.gen_range(0..below_top.len())]);
    let (carrier, quotient) = (*b.source(&iota), *b.target(&pi));
    let maps = |rng: &mut R, from: VectorSpace, to: VectorSpace| {
        let mut v: Vec<MatrixMorphism> = (0..4).map(|_| random_morphism(from, to, rng)).collect();
        v.push(b.zero(&from, &to));
        v.push(unit_morphism(from, to));
        v
    };
    let into = maps(rng, spaces[1], carrier);
    let out = maps(rng, quotient, spaces[2]);
    cancellation_law(&b, rec, &iota, &into, false);
    cancellation_law(&b, rec, &pi, &out, true);
}

/// The map sending the first basis vector to the first basis vector and
/// everything else to zero.
fn unit_morphism(from: VectorSpace, to: VectorSpace) -> MatrixMorphism {
    let mut rows = vec![vec![0; from.dim()]; to.dim()];
    rows[0][0] = 1;
    MatrixMorphism::new(from, to, &rows).expect("shape matches")
}

fn subs_for<'a>(subs: &'a [Vec<Subspace>], spaces: &[VectorSpace], space: &VectorSpace) -> &'a [Subspace] {
    let i = spaces.iter().position(|s| s == space).expect("one of the sampled spaces");
    &subs[i]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::groups::cyclic;

    #[test]
    fn empty_fixture_passes_vacuously() {
        let report = check_fixture::<TableBackend>(&TableBackend, &[], &[]);
        assert!(report.all_pass());
        assert_eq!(report.instances(), 0);
    }

    #[test]
    fn reduction_fixture_passes() {
        let (c4, c2) = (cyclic(4), cyclic(2));
        let reduction = TableMorphism::new(&c4, &c2, vec![0, 1, 0, 1]).unwrap();
        let report = check_fixture(&TableBackend, &[c4.clone(), c2.clone()], &[reduction]);
        assert!(report.all_pass(), "{report:#?}");
        assert!(report.get(GALOIS, false).unwrap().instances > 0);
    }

    #[test]
    fn broken_law_is_reported_with_witness() {
        let mut rec = Recorder::default();
        rec.check(MODULAR, false, Ok(false), || "X = 1".into());
        rec.check(MODULAR, false, Ok(true), || unreachable!());
        let report = rec.report();
        let o = report.get(MODULAR, false).unwrap();
        assert_eq!((o.instances, o.failures), (2, 1));
        assert_eq!(o.witnesses, vec!["X = 1".to_string()]);
        assert!(!report.all_pass());
    }

    #[test]
    fn small_vec_suite_covers_every_law() {
        let report = random_vec_suite(5, 20);
        assert!(report.all_pass(), "{report:#?}");
        assert!(report.min_instances() >= 20, "{report:#?}");
    }
}
