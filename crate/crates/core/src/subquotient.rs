//! Subquotients `X/Y`, the morphisms they inherit from ambient morphisms,
//! and the lattice criterion for exactness of a sequence of subquotients.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::Backend;

/// `X/Y` inside an ambient object, with the legs `iota: X/1 → G` and
/// `pi: X/1 → X/Y` through which subgroups are chased.
#[derive(Clone)]
pub struct Subquotient<B: Backend> {
    pub ambient: B::Object,
    pub numerator: B::Subgroup,
    pub denominator: B::Subgroup,
    pub carrier: B::Object,
    pub iota: B::Morphism,
    pub pi: B::Morphism,
}

impl<B: Backend> fmt::Debug for Subquotient<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} / {:?}", self.numerator, self.denominator)
    }
}

impl<B: Backend> PartialEq for Subquotient<B> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.numerator == other.numerator
            && self.denominator == other.denominator
    }
}

impl<B: Backend> Eq for Subquotient<B> {}

impl<B: Backend> Subquotient<B> {
    /// Number of elements of the carrier.
    pub fn order(&self, backend: &B) -> usize {
        backend.order(&self.carrier)
    }

    pub fn is_trivial(&self, backend: &B) -> bool {
        self.order(backend) == 1
    }

    /// Every subgroup of the carrier.
    pub fn subgroups(&self, backend: &B) -> Vec<B::Subgroup> {
        backend.all_subgroups(&self.carrier)
    }
}

/// Forms `X/Y`; fails with the violated clause of `Y ◁ X`.
pub fn form_subquotient<B: Backend>(backend: &B, x: &B::Subgroup, y: &B::Subgroup) -> Result<Subquotient<B>> {
    backend.same_parent(x, y, "form_subquotient")?;
    if let Err(reason) = backend.check_normal_to(y, x)? {
        return Err(Error::NotNormalTo(reason));
    }
    let iota = backend.embedding_of(x)?;
    let pulled = backend.inverse_image(&iota, y)?;
    let pi = backend.projection_by_normal(&pulled)?;
    Ok(Subquotient {
        ambient: backend.parent(x).clone(),
        numerator: x.clone(),
        denominator: y.clone(),
        carrier: backend.target(&pi).clone(),
        iota,
        pi,
    })
}

/// `f' : X/Y → U/V` induced by `f : G → H`, together with the intermediate
/// `f'' : X/1 → U/1`.
#[derive(Clone)]
pub struct InducedMorphism<B: Backend> {
    pub map: B::Morphism,
    pub ambient_map: B::Morphism,
    pub source: Subquotient<B>,
    pub target: Subquotient<B>,
    pub lift: B::Morphism,
}

impl<B: Backend> fmt::Debug for InducedMorphism<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] -> [{:?}] : {:?}", self.source, self.target, self.map)
    }
}

fn check_induced_hypotheses<B: Backend>(
    backend: &B,
    f: &B::Morphism,
    src: &Subquotient<B>,
    dst: &Subquotient<B>,
) -> Result<()> {
    if *backend.source(f) != src.ambient {
        return Err(Error::Endpoint("map source is not the ambient of the source subquotient".into()));
    }
    if *backend.target(f) != dst.ambient {
        return Err(Error::Endpoint("map target is not the ambient of the target subquotient".into()));
    }
    if !backend.is_subset(&backend.direct_image(f, &src.denominator)?, &dst.denominator)? {
        return Err(Error::Hypothesis(
            "image of the source denominator is not inside the target denominator".into(),
        ));
    }
    if !backend.is_subset(&backend.direct_image(f, &src.numerator)?, &dst.numerator)? {
        return Err(Error::Hypothesis(
            "image of the source numerator is not inside the target numerator".into(),
        ));
    }
    Ok(())
}

/// Builds `f'` through the two universal properties: lift `f ∘ ι_X` along
/// `ι_U`, then descend `π_{U/V} ∘ f''` along `π_{X/Y}`. Both squares are
/// checked before returning.
pub fn induced_morphism<B: Backend>(
    backend: &B,
    f: &B::Morphism,
    src: &Subquotient<B>,
    dst: &Subquotient<B>,
) -> Result<InducedMorphism<B>> {
    check_induced_hypotheses(backend, f, src, dst)?;
    let along = backend.compose(f, &src.iota)?;
    let lift = backend.lift(&dst.iota, &along)?;
    let down = backend.compose(&dst.pi, &lift)?;
    let map = backend.descend(&src.pi, &down)?;
    if backend.compose(&dst.iota, &lift)? != along {
        return Err(Error::Invalid("upper square of the induced morphism does not commute".into()));
    }
    if backend.compose(&map, &src.pi)? != down {
        return Err(Error::Invalid("lower square of the induced morphism does not commute".into()));
    }
    Ok(InducedMorphism {
        map,
        ambient_map: f.clone(),
        source: src.clone(),
        target: dst.clone(),
        lift,
    })
}

/// Composite of two induced morphisms, itself induced by the composite of
/// the ambient maps.
pub fn compose_induced<B: Backend>(
    backend: &B,
    second: &InducedMorphism<B>,
    first: &InducedMorphism<B>,
) -> Result<InducedMorphism<B>> {
    if first.target != second.source {
        return Err(Error::Endpoint("induced morphisms do not chain".into()));
    }
    Ok(InducedMorphism {
        map: backend.compose(&second.map, &first.map)?,
        ambient_map: backend.compose(&second.ambient_map, &first.ambient_map)?,
        source: first.source.clone(),
        target: second.target.clone(),
        lift: backend.compose(&second.lift, &first.lift)?,
    })
}

/// The five intermediate subgroups met while chasing `s` from the source
/// carrier to the target carrier: in `X/1`, `G`, `H`, `U/1` and finally
/// `U/V`.
pub fn chase_steps<B: Backend>(
    backend: &B,
    src: &Subquotient<B>,
    dst: &Subquotient<B>,
    f: &B::Morphism,
    s: &B::Subgroup,
) -> Result<[B::Subgroup; 5]> {
    check_induced_hypotheses(backend, f, src, dst)?;
    if *backend.parent(s) != src.carrier {
        return Err(Error::ParentMismatch { op: "chase" });
    }
    let up = backend.inverse_image(&src.pi, s)?;
    let in_source = backend.direct_image(&src.iota, &up)?;
    let in_target = backend.direct_image(f, &in_source)?;
    let down = backend.inverse_image(&dst.iota, &in_target)?;
    let result = backend.direct_image(&dst.pi, &down)?;
    Ok([up, in_source, in_target, down, result])
}

pub fn chase<B: Backend>(
    backend: &B,
    src: &Subquotient<B>,
    dst: &Subquotient<B>,
    f: &B::Morphism,
    s: &B::Subgroup,
) -> Result<B::Subgroup> {
    let [.., result] = chase_steps(backend, src, dst, f, s)?;
    Ok(result)
}

/// Data for the lattice exactness test of `U/V → W/X → Y/Z` along
/// `G --f--> H --g--> I`.
#[derive(Clone, Debug)]
pub struct ExactnessConfig<B: Backend> {
    pub f: B::Morphism,
    pub g: B::Morphism,
    pub u: B::Subgroup,
    pub v: B::Subgroup,
    pub w: B::Subgroup,
    pub x: B::Subgroup,
    pub y: B::Subgroup,
    pub z: B::Subgroup,
}

impl<B: Backend> ExactnessConfig<B> {
    /// Reads the configuration off two chained induced morphisms.
    pub fn from_induced(first: &InducedMorphism<B>, second: &InducedMorphism<B>) -> Result<Self> {
        if first.target != second.source {
            return Err(Error::Endpoint("induced morphisms do not chain".into()));
        }
        Ok(ExactnessConfig {
            f: first.ambient_map.clone(),
            g: second.ambient_map.clone(),
            u: first.source.numerator.clone(),
            v: first.source.denominator.clone(),
            w: first.target.numerator.clone(),
            x: first.target.denominator.clone(),
            y: second.target.numerator.clone(),
            z: second.target.denominator.clone(),
        })
    }
}

fn require<B: Backend>(backend: &B, small: &B::Subgroup, large: &B::Subgroup, what: &str) -> Result<()> {
    if backend.is_subset(small, large)? {
        Ok(())
    } else {
        Err(Error::Hypothesis(what.to_string()))
    }
}

fn require_normal_to<B: Backend>(backend: &B, b: &B::Subgroup, a: &B::Subgroup, what: &str) -> Result<()> {
    match backend.check_normal_to(b, a)? {
        Ok(()) => Ok(()),
        Err(reason) => Err(Error::Hypothesis(format!("{what}: {reason}"))),
    }
}

/// `fU ∨ X = g⁻¹Z ∧ W`, after checking every hypothesis that makes the
/// subquotient sequence exist.
pub fn exactness_criterion<B: Backend>(backend: &B, cfg: &ExactnessConfig<B>) -> Result<bool> {
    if backend.target(&cfg.f) != backend.source(&cfg.g) {
        return Err(Error::NotComposable);
    }
    require_normal_to(backend, &cfg.v, &cfg.u, "V is not normal to U")?;
    require_normal_to(backend, &cfg.x, &cfg.w, "X is not normal to W")?;
    require_normal_to(backend, &cfg.z, &cfg.y, "Z is not normal to Y")?;
    require(backend, &backend.direct_image(&cfg.f, &cfg.v)?, &cfg.x, "fV is not inside X")?;
    require(backend, &backend.direct_image(&cfg.f, &cfg.u)?, &cfg.w, "fU is not inside W")?;
    require(backend, &backend.direct_image(&cfg.g, &cfg.x)?, &cfg.z, "gX is not inside Z")?;
    require(backend, &backend.direct_image(&cfg.g, &cfg.w)?, &cfg.y, "gW is not inside Y")?;
    let left = backend.join(&backend.direct_image(&cfg.f, &cfg.u)?, &cfg.x)?;
    let right = backend.meet(&backend.inverse_image(&cfg.g, &cfg.z)?, &cfg.w)?;
    Ok(left == right)
}

/// `Im f' = Ker g'`, computed inside the shared carrier.
pub fn is_exact_at<B: Backend>(backend: &B, first: &InducedMorphism<B>, second: &InducedMorphism<B>) -> Result<bool> {
    if first.target != second.source {
        return Err(Error::Endpoint("induced morphisms do not chain".into()));
    }
    Ok(backend.image(&first.map) == backend.kernel(&second.map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::groups::{cyclic, symmetric_with_elements};
    use crate::table::{TableBackend, TableMorphism};

    const T: TableBackend = TableBackend;

    fn reduction() -> TableMorphism {
        TableMorphism::new(&cyclic(4), &cyclic(2), vec![0, 1, 0, 1]).unwrap()
    }

    fn doubling() -> TableMorphism {
        TableMorphism::new(&cyclic(2), &cyclic(4), vec![0, 2]).unwrap()
    }

    #[test]
    fn subquotient_orders() {
        let c4 = cyclic(4);
        let two = c4.subgroup([0, 2]).unwrap();
        assert_eq!(form_subquotient(&T, &two, &T.bottom(&c4)).unwrap().order(&T), 2);
        assert!(form_subquotient(&T, &two, &two).unwrap().is_trivial(&T));

        let (s3, perms) = symmetric_with_elements(3);
        let cycle = perms.iter().position(|p| p == &[1, 2, 0]).unwrap();
        let a3 = s3.generated_subgroup(&[cycle]);
        assert_eq!(form_subquotient(&T, &a3, &T.bottom(&s3)).unwrap().order(&T), 3);
    }

    #[test]
    fn non_normal_denominator_is_rejected_with_clause() {
        let (s3, perms) = symmetric_with_elements(3);
        let swap = perms.iter().position(|p| p == &[1, 0, 2]).unwrap();
        let t = s3.generated_subgroup(&[swap]);
        let err = form_subquotient(&T, &T.top(&s3), &t).unwrap_err();
        assert_eq!(err, Error::NotNormalTo(crate::NormalToFailure::PullbackNotNormal));
        let err = form_subquotient(&T, &t, &T.top(&s3)).unwrap_err();
        assert_eq!(err, Error::NotNormalTo(crate::NormalToFailure::NotContained));
    }

    #[test]
    fn reduction_induces_isomorphism() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        let src = form_subquotient(&T, &T.top(&c4), &c4.subgroup([0, 2]).unwrap()).unwrap();
        let dst = form_subquotient(&T, &T.top(&c2), &T.bottom(&c2)).unwrap();
        let f = induced_morphism(&T, &reduction(), &src, &dst).unwrap();
        assert!(T.is_isomorphism(&f.map));
        let top = T.top(&src.carrier);
        assert_eq!(chase(&T, &src, &dst, &reduction(), &top).unwrap(), T.top(&dst.carrier));
    }

    #[test]
    fn identity_induces_identity() {
        let c4 = cyclic(4);
        let sq = form_subquotient(&T, &c4.subgroup([0, 2]).unwrap(), &T.bottom(&c4)).unwrap();
        let f = induced_morphism(&T, &T.identity(&c4), &sq, &sq).unwrap();
        assert_eq!(f.map, T.identity(&sq.carrier));
    }

    #[test]
    fn failed_inclusion_is_named() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        let src = form_subquotient(&T, &T.top(&c2), &T.top(&c2)).unwrap();
        let dst = form_subquotient(&T, &T.top(&c4), &T.bottom(&c4)).unwrap();
        assert!(matches!(
            induced_morphism(&T, &doubling(), &src, &dst),
            Err(Error::Hypothesis(msg)) if msg.contains("denominator")
        ));
    }

    #[test]
    fn zero_map_chases_to_bottom() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        let src = form_subquotient(&T, &T.top(&c4), &T.bottom(&c4)).unwrap();
        let dst = form_subquotient(&T, &T.top(&c2), &T.bottom(&c2)).unwrap();
        let zero = T.zero(&c4, &c2);
        let top = T.top(&src.carrier);
        assert_eq!(chase(&T, &src, &dst, &zero, &top).unwrap(), T.bottom(&dst.carrier));
    }

    #[test]
    fn short_exact_sequence_criterion() {
        let (c2, c4) = (cyclic(2), cyclic(4));
        let cfg = ExactnessConfig::<TableBackend> {
            f: doubling(),
            g: reduction(),
            u: T.top(&c2),
            v: T.bottom(&c2),
            w: T.top(&c4),
            x: T.bottom(&c4),
            y: T.top(&c2),
            z: T.bottom(&c2),
        };
        assert!(exactness_criterion(&T, &cfg).unwrap());
        let zeros = ExactnessConfig {
            f: T.zero(&c2, &c4),
            g: T.zero(&c4, &c2),
            ..cfg.clone()
        };
        assert!(!exactness_criterion(&T, &zeros).unwrap());

        let src = form_subquotient(&T, &cfg.u, &cfg.v).unwrap();
        let mid = form_subquotient(&T, &cfg.w, &cfg.x).unwrap();
        let dst = form_subquotient(&T, &cfg.y, &cfg.z).unwrap();
        let f = induced_morphism(&T, &cfg.f, &src, &mid).unwrap();
        let g = induced_morphism(&T, &cfg.g, &mid, &dst).unwrap();
        assert!(is_exact_at(&T, &f, &g).unwrap());

        let same = induced_morphism(&T, &T.identity(&c4), &mid, &mid).unwrap();
        assert!(!is_exact_at(&T, &same, &same).unwrap());
    }
}
