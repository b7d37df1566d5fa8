use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use salamander_core::diagram::{parse, serialize};
use salamander_core::fuzz::{fuzz_any, fuzz_vec_complex, rng_for, BackendChoice, FuzzParams};
use salamander_core::salamander::sweep;
use salamander_core::subquotient::compose_induced;
use salamander_core::table::groups::{groups_up_to_order_8, lattice_fixtures};
use salamander_core::table::{all_homomorphisms, CayleyGroup, TableBackend};
use salamander_core::vector::{random_morphism, random_subspace, MatrixMorphism, VecBackend};
use salamander_core::{form_subquotient, induced_morphism, with_complex, AnyComplex, Backend, DoubleComplex, HomologyKind};

/// Galois adjunction, functoriality and the two image/preimage identities
/// for `f: G → H`, `g: H → K` on the given subgroups.
fn check_image_laws<B: Backend>(
    b: &B,
    f: &B::Morphism,
    g: &B::Morphism,
    s: &B::Subgroup,
    t: &B::Subgroup,
    u: &B::Subgroup,
) -> Result<(), TestCaseError> {
    let fs = b.direct_image(f, s).unwrap();
    let ft = b.inverse_image(f, t).unwrap();
    prop_assert_eq!(b.is_subset(&fs, t).unwrap(), b.is_subset(s, &ft).unwrap());

    let gf = b.compose(g, f).unwrap();
    prop_assert_eq!(b.direct_image(&gf, s).unwrap(), b.direct_image(g, &fs).unwrap());
    prop_assert_eq!(
        b.inverse_image(&gf, u).unwrap(),
        b.inverse_image(f, &b.inverse_image(g, u).unwrap()).unwrap()
    );

    prop_assert_eq!(
        b.direct_image(f, &ft).unwrap(),
        b.meet(t, &b.image(f)).unwrap()
    );
    prop_assert_eq!(
        b.inverse_image(f, &fs).unwrap(),
        b.join(s, &b.kernel(f)).unwrap()
    );
    let id = b.identity(b.source(f));
    prop_assert_eq!(b.direct_image(&id, s).unwrap(), s.clone());
    Ok(())
}

fn small_groups() -> Vec<CayleyGroup> {
    groups_up_to_order_8().into_iter().map(|(_, g)| g).collect()
}

/// Independent evaluation of the complex laws straight from the matrices.
fn vec_laws_hold(dc: &DoubleComplex<VecBackend>) -> bool {
    let p = dc.backend().prime() as u64;
    let dim = |pos| dc.object(pos).dim();
    let mul = |a: &[Vec<u32>], b: &[Vec<u32>], rows: usize, inner: usize, cols: usize| -> Vec<Vec<u64>> {
        (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| (0..inner).map(|k| a[i][k] as u64 * b[k][j] as u64).sum::<u64>() % p)
                    .collect()
            })
            .collect()
    };
    let zero = |m: &Vec<Vec<u64>>| m.iter().flatten().all(|&x| x == 0);
    dc.padded_positions(1).into_iter().all(|(r, c)| {
        let h = dc.horizontal((r, c)).entries();
        let v = dc.vertical((r, c)).entries();
        let h_right = dc.horizontal((r, c + 1)).entries();
        let v_down = dc.vertical((r + 1, c)).entries();
        let v_right = dc.vertical((r, c + 1)).entries();
        let h_down = dc.horizontal((r + 1, c)).entries();
        let (here, right, down, diag) = (dim((r, c)), dim((r, c + 1)), dim((r + 1, c)), dim((r + 1, c + 1)));
        zero(&mul(&h_right, &h, dim((r, c + 2)), right, here))
            && zero(&mul(&v_down, &v, dim((r + 2, c)), down, here))
            && mul(&v_right, &h, diag, right, here) == mul(&h_down, &v, diag, down, here)
    })
}

#[test]
fn validate_matches_independent_law_check_under_mutation() {
    let mut broken = 0;
    let mut trials = 0;
    for i in 0..600u64 {
        let mut dc = fuzz_vec_complex(11, i, FuzzParams::default());
        let mut rng = rng_for(12, i);
        let p = dc.backend().prime();
        let mut targets = Vec::new();
        for pos in dc.support() {
            for vertical in [false, true] {
                let m = if vertical { dc.vertical(pos) } else { dc.horizontal(pos) };
                if m.source().dim() > 0 && m.target().dim() > 0 {
                    targets.push((pos, vertical, m));
                }
            }
        }
        let Some((pos, vertical, m)) = targets.choose(&mut rng).cloned() else { continue };
        let mut rows = m.entries();
        let (i, j) = (rng.gen_range(0..rows.len()), rng.gen_range(0..rows[0].len()));
        rows[i][j] = (rows[i][j] + rng.gen_range(1..p)) % p;
        let mutated = MatrixMorphism::new(m.source(), m.target(), &rows).unwrap();
        if vertical {
            dc.set_vertical(pos, mutated).unwrap();
        } else {
            dc.set_horizontal(pos, mutated).unwrap();
        }
        trials += 1;
        let oracle = vec_laws_hold(&dc);
        assert_eq!(dc.validate().unwrap().is_valid(), oracle, "complex {i} at {pos:?}");
        broken += usize::from(!oracle);
    }
    assert!(broken >= 200, "only {broken} law-breaking mutations in {trials} trials");
}

#[test]
fn subgroup_lattices_are_closed() {
    let t = TableBackend;
    let groups: Vec<CayleyGroup> = lattice_fixtures().into_iter().map(|(_, g)| g).collect();
    for g in &groups {
        let subs = t.all_subgroups(g);
        for a in &subs {
            for x in 0..g.order() {
                let conj = g.subgroup(a.elements().into_iter().map(|e| g.conjugate(x, e))).unwrap();
                assert!(subs.contains(&conj));
            }
            for b2 in &subs {
                assert!(subs.contains(&t.join(a, b2).unwrap()));
                assert!(subs.contains(&t.meet(a, b2).unwrap()));
            }
        }
    }
    for g in small_groups() {
        for h in small_groups() {
            let target_subs = t.all_subgroups(&h);
            let subs = t.all_subgroups(&g);
            for f in all_homomorphisms(&g, &h) {
                for s in &target_subs {
                    assert!(subs.contains(&t.inverse_image(&f, s).unwrap()));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn vector_image_laws(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 0);
        let b = VecBackend::new(*[2, 3, 5].choose(&mut rng).unwrap()).unwrap();
        let [g, h, k] = [0; 3].map(|_| b.space(rng.gen_range(0..=3)));
        let f = random_morphism(g, h, &mut rng);
        let second = random_morphism(h, k, &mut rng);
        let s = random_subspace(g, &mut rng);
        let t = random_subspace(h, &mut rng);
        let u = random_subspace(k, &mut rng);
        check_image_laws(&b, &f, &second, &s, &t, &u)?;
    }

    #[test]
    fn table_image_laws(gi in 0usize..8, hi in 0usize..8, ki in 0usize..8, pick in any::<[usize; 5]>()) {
        let groups = small_groups();
        let (g, h, k) = (&groups[gi % groups.len()], &groups[hi % groups.len()], &groups[ki % groups.len()]);
        let b = TableBackend;
        let fs = all_homomorphisms(g, h);
        let gs = all_homomorphisms(h, k);
        let f = &fs[pick[0] % fs.len()];
        let second = &gs[pick[1] % gs.len()];
        let choose = |obj: &CayleyGroup, i: usize| {
            let subs = b.all_subgroups(obj);
            subs[i % subs.len()].clone()
        };
        check_image_laws(&b, f, second, &choose(g, pick[2]), &choose(h, pick[3]), &choose(k, pick[4]))?;
    }

    #[test]
    fn generated_subgroups_are_idempotent_and_monotone(
        gi in 0usize..11,
        seed in proptest::collection::vec(any::<usize>(), 0..4),
        extra in any::<usize>(),
    ) {
        let groups = lattice_fixtures();
        let g = &groups[gi].1;
        let seed: Vec<usize> = seed.into_iter().map(|x| x % g.order()).collect();
        let s = g.generated_subgroup(&seed);
        prop_assert_eq!(g.generated_subgroup(&s.elements()), s.clone());
        let mut larger = seed.clone();
        larger.push(extra % g.order());
        let t = g.generated_subgroup(&larger);
        prop_assert!(TableBackend.is_subset(&s, &t).unwrap());
    }

    #[test]
    fn quotient_kernel_is_the_normal_subgroup(gi in 0usize..11, si in any::<usize>()) {
        let groups = lattice_fixtures();
        let g = &groups[gi].1;
        let normal: Vec<_> = g.all_subgroups().into_iter().filter(|s| g.is_normal_subgroup(s)).collect();
        let n = &normal[si % normal.len()];
        let (q, pi) = g.quotient_group(n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        prop_assert_eq!(&TableBackend.kernel(&pi), n);
    }

    #[test]
    fn induction_is_functorial(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 1);
        let b = VecBackend::new(*[2, 3].choose(&mut rng).unwrap()).unwrap();
        let [g, h, k] = [0; 3].map(|_| b.space(rng.gen_range(1..=3)));
        let f = random_morphism(g, h, &mut rng);
        let second = random_morphism(h, k, &mut rng);
        let x = random_subspace(g, &mut rng);
        let y = b.meet(&x, &random_subspace(g, &mut rng)).unwrap();
        let a = form_subquotient(&b, &x, &y).unwrap();
        // pad random choices so that induction applies
        let mut over = |m: &MatrixMorphism, src: &salamander_core::Subquotient<VecBackend>, space| {
            let top = b.join(&b.direct_image(m, &src.numerator).unwrap(), &random_subspace(space, &mut rng)).unwrap();
            let sub = b.meet(&top, &random_subspace(space, &mut rng)).unwrap();
            let bottom = b.join(&b.direct_image(m, &src.denominator).unwrap(), &sub).unwrap();
            form_subquotient(&b, &top, &bottom).unwrap()
        };
        let c = over(&f, &a, h);
        let e = over(&second, &c, k);
        let first = induced_morphism(&b, &f, &a, &c).unwrap();
        let then = induced_morphism(&b, &second, &c, &e).unwrap();
        let direct = induced_morphism(&b, &b.compose(&second, &f).unwrap(), &a, &e).unwrap();
        let composite = compose_induced(&b, &then, &first).unwrap();
        prop_assert_eq!(direct.map, composite.map);
    }

    #[test]
    fn fuzzed_complexes_have_coherent_homology(seed in any::<u64>(), index in 0u64..1000) {
        let any = fuzz_any(BackendChoice::Mixed, seed, index, FuzzParams::default());
        with_complex!(&any, dc => {
            let b = dc.backend();
            prop_assert!(dc.validate().unwrap().is_valid());
            let support = dc.support();
            for pos in dc.padded_positions(1) {
                for kind in HomologyKind::ALL {
                    let hom = dc.homology(kind, pos).unwrap();
                    prop_assert!(hom.is_defined(), "{:?} at {:?}", kind, pos);
                    if !support.contains(&pos) {
                        prop_assert!(hom.is_trivial(b));
                    }
                }
            }
        });
    }

    #[test]
    fn zero_differentials_give_whole_objects(seed in any::<u64>()) {
        let any = fuzz_any(BackendChoice::Mixed, seed, 0, FuzzParams::default());
        with_complex!(&any, dc => {
            let mut zeroed = DoubleComplex::new(*dc.backend());
            for pos in dc.support() {
                zeroed.set_object(pos, dc.object(pos));
            }
            for pos in zeroed.support() {
                for kind in HomologyKind::ALL {
                    prop_assert!(zeroed.homology(kind, pos).unwrap().is_whole_object(zeroed.backend()));
                }
            }
        });
    }

    #[test]
    fn diagrams_round_trip(seed in any::<u64>(), index in 0u64..100) {
        let any = fuzz_any(BackendChoice::Mixed, seed, index, FuzzParams::default());
        let text = serialize(&any);
        let back: AnyComplex = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back, any);
    }

    #[test]
    fn sweeps_are_deterministic(seed in any::<u64>()) {
        let any = fuzz_any(BackendChoice::Mixed, seed, 3, FuzzParams::default());
        let first = with_complex!(&any, dc => sweep(dc).unwrap());
        let again = with_complex!(&any.clone(), dc => sweep(dc).unwrap());
        prop_assert!(first.passed(), "{:?}", first.failures);
        prop_assert_eq!(first, again);
    }
}
