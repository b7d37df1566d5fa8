//! Random admissible configurations for the lattice exactness criterion, and
//! the exhaustive chase-coherence sweep.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::fuzz::rng_for;
use crate::lattice::Backend;
use crate::subquotient::{chase, exactness_criterion, form_subquotient, induced_morphism, is_exact_at, ExactnessConfig, Subquotient};
use crate::table::groups::groups_up_to_order_8;
use crate::table::{all_homomorphisms, CayleyGroup, TableBackend, TableMorphism};
use crate::vector::{random_morphism, random_morphism_into, VecBackend};

/// How the pair `f, g` is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapMode {
    /// `g ∘ f = 0` by construction.
    Complex,
    /// `f` and `g` independent.
    Free,
}

impl MapMode {
    pub const ALL: [MapMode; 2] = [MapMode::Complex, MapMode::Free];
}

fn pick<T: Clone, R: Rng + ?Sized>(items: impl Iterator<Item = T>, rng: &mut R) -> T {
    let all: Vec<T> = items.collect();
    all.choose(rng).expect("at least one candidate").clone()
}

/// Draws `U, V, W, X, Y, Z` one at a time, uniformly among the subgroups
/// allowed by the choices already made: `V ◁ U`, `fU ⊆ W`, `fV ⊆ X ◁ W`,
/// `gW ⊆ Y`, `gX ⊆ Z ◁ Y`.
pub fn sample_subgroups<B: Backend, R: Rng + ?Sized>(
    b: &B,
    f: &B::Morphism,
    g: &B::Morphism,
    rng: &mut R,
) -> Result<ExactnessConfig<B>> {
    let le = |s: &B::Subgroup, t: &B::Subgroup| b.is_subset(s, t).unwrap_or(false);
    let normal_to = |s: &B::Subgroup, t: &B::Subgroup| b.is_normal_to(s, t).unwrap_or(false);
    let lattice = |obj: &B::Object| b.all_subgroups(obj);

    let src = lattice(b.source(f));
    let u = pick(src.iter().filter(|s| b.is_conormal(s)).cloned(), rng);
    let v = pick(src.iter().filter(|s| normal_to(s, &u)).cloned(), rng);
    let (fu, fv) = (b.direct_image(f, &u)?, b.direct_image(f, &v)?);
    let mid = lattice(b.target(f));
    let w = pick(mid.iter().filter(|s| b.is_conormal(s) && le(&fu, s)).cloned(), rng);
    let x = pick(mid.iter().filter(|s| le(&fv, s) && normal_to(s, &w)).cloned(), rng);
    let (gw, gx) = (b.direct_image(g, &w)?, b.direct_image(g, &x)?);
    let dst = lattice(b.target(g));
    let y = pick(dst.iter().filter(|s| b.is_conormal(s) && le(&gw, s)).cloned(), rng);
    let z = pick(dst.iter().filter(|s| le(&gx, s) && normal_to(s, &y)).cloned(), rng);
    Ok(ExactnessConfig {
        f: f.clone(),
        g: g.clone(),
        u,
        v,
        w,
        x,
        y,
        z,
    })
}

/// Both verdicts on one configuration: exactness of the induced sequence in
/// the middle carrier, and the lattice identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriterionSample {
    pub direct: bool,
    pub criterion: bool,
}

pub fn evaluate<B: Backend>(b: &B, cfg: &ExactnessConfig<B>) -> Result<CriterionSample> {
    let first = form_subquotient(b, &cfg.u, &cfg.v)?;
    let middle = form_subquotient(b, &cfg.w, &cfg.x)?;
    let last = form_subquotient(b, &cfg.y, &cfg.z)?;
    let f1 = induced_morphism(b, &cfg.f, &first, &middle)?;
    let g1 = induced_morphism(b, &cfg.g, &middle, &last)?;
    Ok(CriterionSample {
        direct: is_exact_at(b, &f1, &g1)?,
        criterion: exactness_criterion(b, cfg)?,
    })
}

pub type Sampled<B> = (B, <B as Backend>::Morphism, <B as Backend>::Morphism);

/// Source of composable pairs `G --f--> H --g--> I`.
pub trait PairSampler: Sync {
    type B: Backend;
    /// The backend the pair lives in, with `f` and `g`.
    fn sample_pair(&self, mode: MapMode, rng: &mut ChaCha8Rng) -> Sampled<Self::B>;
}

/// Groups of order at most 8 with every homomorphism between them cached.
pub struct TablePairs {
    groups: Vec<CayleyGroup>,
    homs: HashMap<(usize, usize), Vec<TableMorphism>>,
}

impl TablePairs {
    pub fn new() -> Self {
        let groups: Vec<CayleyGroup> = groups_up_to_order_8().into_iter().map(|(_, g)| g).collect();
        let homs = (0..groups.len())
            .flat_map(|i| (0..groups.len()).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), all_homomorphisms(&groups[i], &groups[j])))
            .collect();
        TablePairs { groups, homs }
    }
}

impl Default for TablePairs {
    fn default() -> Self {
        Self::new()
    }
}

impl PairSampler for TablePairs {
    type B = TableBackend;

    fn sample_pair(&self, mode: MapMode, rng: &mut ChaCha8Rng) -> Sampled<TableBackend> {
        let n = self.groups.len();
        let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let g = self.homs[&(j, k)].choose(rng).expect("the zero map exists").clone();
        let candidates = &self.homs[&(i, j)];
        let f = match mode {
            MapMode::Free => candidates.choose(rng).expect("the zero map exists").clone(),
            MapMode::Complex => {
                let kernel = TableBackend.kernel(&g);
                pick(
                    candidates
                        .iter()
                        .filter(|f| TableBackend.is_subset(&TableBackend.image(f), &kernel).unwrap_or(false))
                        .cloned(),
                    rng,
                )
            }
        };
        (TableBackend, f, g)
    }
}

/// Vector spaces of dimension at most three over a prime from `{2, 3, 5}`.
pub struct VecPairs {
    backends: Vec<VecBackend>,
}

/// Largest dimension drawn by [`VecPairs`].
pub const VEC_PAIR_MAX_DIM: usize = 3;

impl VecPairs {
    pub fn new() -> Self {
        VecPairs {
            backends: [2, 3, 5].iter().map(|&p| VecBackend::new(p).expect("prime")).collect(),
        }
    }
}

impl Default for VecPairs {
    fn default() -> Self {
        Self::new()
    }
}

impl PairSampler for VecPairs {
    type B = VecBackend;

    fn sample_pair(&self, mode: MapMode, rng: &mut ChaCha8Rng) -> Sampled<VecBackend> {
        let b = *self.backends.choose(rng).expect("nonempty");
        let [g0, h, i] = [0; 3].map(|_| b.space(rng.gen_range(0..=VEC_PAIR_MAX_DIM)));
        let g = random_morphism(h, i, rng);
        let f = match mode {
            MapMode::Free => random_morphism(g0, h, rng),
            MapMode::Complex => random_morphism_into(g0, &b.kernel(&g), rng),
        };
        (b, f, g)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CriterionTally {
    pub samples: usize,
    pub agreements: usize,
    pub exact: usize,
    pub inexact: usize,
    pub errors: usize,
    pub witnesses: Vec<String>,
}

impl CriterionTally {
    pub fn disagreements(&self) -> usize {
        self.samples - self.agreements
    }

    fn merge(mut self, other: CriterionTally) -> Self {
        self.samples += other.samples;
        self.agreements += other.agreements;
        self.exact += other.exact;
        self.inexact += other.inexact;
        self.errors += other.errors;
        let room = 3usize.saturating_sub(self.witnesses.len());
        self.witnesses.extend(other.witnesses.into_iter().take(room));
        self
    }
}

/// `count` configurations drawn with `mode`, each evaluated both ways.
pub fn criterion_trials<S: PairSampler>(sampler: &S, mode: MapMode, seed: u64, count: usize) -> CriterionTally {
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let (b, f, g) = sampler.sample_pair(mode, &mut rng);
            let outcome = sample_subgroups(&b, &f, &g, &mut rng).and_then(|cfg| evaluate(&b, &cfg).map(|s| (cfg, s)));
            let mut tally = CriterionTally {
                samples: 1,
                ..CriterionTally::default()
            };
            match outcome {
                Ok((cfg, s)) => {
                    if s.direct == s.criterion {
                        tally.agreements = 1;
                    } else {
                        tally.witnesses.push(format!("{s:?} on {cfg:?}"));
                    }
                    if s.direct {
                        tally.exact = 1;
                    } else {
                        tally.inexact = 1;
                    }
                }
                Err(e) => {
                    tally.errors = 1;
                    tally.witnesses.push(format!("sample {i}: {e}"));
                }
            }
            tally
        })
        .reduce(CriterionTally::default, CriterionTally::merge)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChaseReport {
    pub morphisms: usize,
    pub pairs: usize,
    pub subgroups: usize,
    pub mismatches: usize,
    pub witnesses: Vec<String>,
}

impl ChaseReport {
    fn merge(mut self, other: ChaseReport) -> Self {
        self.morphisms += other.morphisms;
        self.pairs += other.pairs;
        self.subgroups += other.subgroups;
        self.mismatches += other.mismatches;
        let room = 3usize.saturating_sub(self.witnesses.len());
        self.witnesses.extend(other.witnesses.into_iter().take(room));
        self
    }
}

/// Every subquotient `X/Y` of `obj` with carrier of order at most `max_order`.
pub fn subquotients<B: Backend>(b: &B, obj: &B::Object, max_order: usize) -> Vec<Subquotient<B>> {
    let subs = b.all_subgroups(obj);
    let mut out = Vec::new();
    for x in &subs {
        for y in &subs {
            if b.is_normal_to(y, x).unwrap_or(false) {
                let sq = form_subquotient(b, x, y).expect("normal-to checked");
                if sq.order(b) <= max_order {
                    out.push(sq);
                }
            }
        }
    }
    out
}

/// For every morphism between the given objects and every admissible pair
/// of subquotients with carriers of order at most `max_order`, compares the
/// image under the induced map with the step-by-step chase on every
/// subgroup of the source carrier.
pub fn chase_coherence<B: Backend>(b: &B, objects: &[B::Object], morphisms: &[B::Morphism], max_order: usize) -> ChaseReport {
    let quotients: HashMap<&B::Object, Vec<Subquotient<B>>> =
        objects.iter().map(|o| (o, subquotients(b, o, max_order))).collect();
    morphisms
        .par_iter()
        .map(|f| {
            let mut report = ChaseReport {
                morphisms: 1,
                ..ChaseReport::default()
            };
            let (Some(srcs), Some(dsts)) = (quotients.get(b.source(f)), quotients.get(b.target(f))) else {
                return report;
            };
            for src in srcs {
                let fx = b.direct_image(f, &src.numerator).expect("same parent");
                let fy = b.direct_image(f, &src.denominator).expect("same parent");
                let lattice = b.all_subgroups(&src.carrier);
                for dst in dsts {
                    let admissible = b.is_subset(&fx, &dst.numerator).unwrap_or(false)
                        && b.is_subset(&fy, &dst.denominator).unwrap_or(false);
                    if !admissible {
                        continue;
                    }
                    report.pairs += 1;
                    let induced = match induced_morphism(b, f, src, dst) {
                        Ok(m) => m,
                        Err(e) => {
                            report.mismatches += 1;
                            report.witnesses.push(format!("{f:?}: {e}"));
                            continue;
                        }
                    };
                    for s in &lattice {
                        report.subgroups += 1;
                        let chased = chase(b, src, dst, f, s);
                        let direct = b.direct_image(&induced.map, s);
                        if chased != direct {
                            report.mismatches += 1;
                            if report.witnesses.len() < 3 {
                                report.witnesses.push(format!("{f:?} on {s:?}: chase {chased:?}, image {direct:?}"));
                            }
                        }
                    }
                }
            }
            report
        })
        .reduce(ChaseReport::default, ChaseReport::merge)
}

/// [`chase_coherence`] over all groups of order at most 8 and every
/// homomorphism between them.
pub fn table_chase_coherence(max_order: usize) -> ChaseReport {
    let groups: Vec<CayleyGroup> = groups_up_to_order_8().into_iter().map(|(_, g)| g).collect();
    let morphisms: Vec<TableMorphism> = groups
        .iter()
        .flat_map(|g| groups.iter().flat_map(move |h| all_homomorphisms(g, h)))
        .collect();
    chase_coherence(&TableBackend, &groups, &morphisms, max_order)
}
