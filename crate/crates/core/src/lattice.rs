//! The abstract interface every concrete backend implements: objects with a
//! bounded lattice of subgroups, morphisms inducing a Galois connection
//! (direct image ⊣ inverse image), and the embedding/projection legs that
//! make subquotients possible.
//!
//! Everything downstream (subquotients, double complexes, the salamander
//! checks) is written against [`Backend`] only.

use std::fmt;
use std::hash::Hash;

use crate::error::{Error, NormalToFailure, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BackendTag {
    TableGroup,
    VectorSpace,
}

impl fmt::Display for BackendTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackendTag::TableGroup => f.write_str("table"),
            BackendTag::VectorSpace => f.write_str("vec"),
        }
    }
}

/// A concrete realization of the self-dual axioms.
///
/// Values of the associated types are immutable and cheap to clone. Equality
/// of objects is structural, and subgroups use a canonical representation so
/// that `==` on subgroups is lattice equality.
pub trait Backend: Clone + fmt::Debug + Send + Sync + 'static {
    type Object: Clone + Eq + Hash + fmt::Debug + Send + Sync;
    type Subgroup: Clone + Eq + Hash + fmt::Debug + Send + Sync;
    type Morphism: Clone + Eq + Hash + fmt::Debug + Send + Sync;

    fn tag(&self) -> BackendTag;

    /// The designated one-element object.
    fn trivial(&self) -> Self::Object;

    /// Number of elements of the underlying set.
    fn order(&self, obj: &Self::Object) -> usize;

    fn top(&self, obj: &Self::Object) -> Self::Subgroup;
    fn bottom(&self, obj: &Self::Object) -> Self::Subgroup;
    fn parent<'a>(&self, s: &'a Self::Subgroup) -> &'a Self::Object;
    fn subgroup_order(&self, s: &Self::Subgroup) -> usize;
    fn is_subset(&self, s: &Self::Subgroup, t: &Self::Subgroup) -> Result<bool>;
    fn join(&self, s: &Self::Subgroup, t: &Self::Subgroup) -> Result<Self::Subgroup>;
    fn meet(&self, s: &Self::Subgroup, t: &Self::Subgroup) -> Result<Self::Subgroup>;

    /// Every subgroup of `obj`, duplicate-free, ordered by size and then by
    /// canonical representation. Memoized per object.
    fn all_subgroups(&self, obj: &Self::Object) -> Vec<Self::Subgroup>;

    fn source<'a>(&self, f: &'a Self::Morphism) -> &'a Self::Object;
    fn target<'a>(&self, f: &'a Self::Morphism) -> &'a Self::Object;
    fn identity(&self, obj: &Self::Object) -> Self::Morphism;
    fn zero(&self, source: &Self::Object, target: &Self::Object) -> Self::Morphism;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;

    fn direct_image(&self, f: &Self::Morphism, s: &Self::Subgroup) -> Result<Self::Subgroup>;
    fn inverse_image(&self, f: &Self::Morphism, t: &Self::Subgroup) -> Result<Self::Subgroup>;

    fn is_normal(&self, s: &Self::Subgroup) -> bool;
    fn is_conormal(&self, s: &Self::Subgroup) -> bool;
    fn normal_closure(&self, s: &Self::Subgroup) -> Self::Subgroup;

    /// `ι_S : S/1 → G`. Fails on non-conormal input.
    fn embedding_of(&self, s: &Self::Subgroup) -> Result<Self::Morphism>;
    /// `π_S : G → G/S`, strict variant: fails on non-normal input.
    fn projection_by_normal(&self, s: &Self::Subgroup) -> Result<Self::Morphism>;

    /// The unique `u` with `embedding ∘ u = f`. Requires `Im f` inside the image
    /// of the (injective) `embedding`.
    fn lift(&self, embedding: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    /// The unique `v` with `v ∘ projection = g`. Requires the kernel of the
    /// (surjective) `projection` inside `Ker g`.
    fn descend(&self, projection: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;

    fn is_embedding(&self, f: &Self::Morphism) -> bool;
    fn is_projection(&self, f: &Self::Morphism) -> bool;

    /// Two-sided inverse computed natively (permutation inversion, matrix
    /// inversion). Independent of `is_embedding`/`is_projection`.
    fn try_inverse(&self, f: &Self::Morphism) -> Option<Self::Morphism>;

    // ---- derived operations ----

    fn image(&self, f: &Self::Morphism) -> Self::Subgroup {
        let top = self.top(self.source(f));
        self.direct_image(f, &top).expect("top lives in the source")
    }

    fn kernel(&self, f: &Self::Morphism) -> Self::Subgroup {
        let bottom = self.bottom(self.target(f));
        self.inverse_image(f, &bottom).expect("bottom lives in the target")
    }

    fn is_zero(&self, f: &Self::Morphism) -> bool {
        *f == self.zero(self.source(f), self.target(f))
    }

    fn is_isomorphism(&self, f: &Self::Morphism) -> bool {
        self.is_embedding(f) && self.is_projection(f)
    }

    fn is_trivial_object(&self, obj: &Self::Object) -> bool {
        self.order(obj) == 1
    }

    fn is_trivial_subgroup(&self, s: &Self::Subgroup) -> bool {
        self.subgroup_order(s) == 1
    }

    /// Projection by the normal closure of `s`; never fails.
    fn projection_by(&self, s: &Self::Subgroup) -> Self::Morphism {
        let closure = self.normal_closure(s);
        self.projection_by_normal(&closure)
            .expect("normal closure is normal")
    }

    /// `B ◁ A`: (i) `B ⊆ A`, (ii) `A` conormal, (iii) `ι_A⁻¹ B` normal in `A/1`.
    fn check_normal_to(
        &self,
        b: &Self::Subgroup,
        a: &Self::Subgroup,
    ) -> Result<std::result::Result<(), NormalToFailure>> {
        if !self.is_subset(b, a)? {
            return Ok(Err(NormalToFailure::NotContained));
        }
        if !self.is_conormal(a) {
            return Ok(Err(NormalToFailure::NotConormal));
        }
        let iota = self.embedding_of(a)?;
        let pulled = self.inverse_image(&iota, b)?;
        if !self.is_normal(&pulled) {
            return Ok(Err(NormalToFailure::PullbackNotNormal));
        }
        Ok(Ok(()))
    }

    fn is_normal_to(&self, b: &Self::Subgroup, a: &Self::Subgroup) -> Result<bool> {
        Ok(self.check_normal_to(b, a)?.is_ok())
    }

    /// `f = ι_{Im f} ∘ h ∘ π_{Ker f}` with `h` an isomorphism.
    fn factorize(&self, f: &Self::Morphism) -> Result<FactorizationTriple<Self>> {
        let projection = self.projection_by_normal(&self.kernel(f))?;
        let embedding = self.embedding_of(&self.image(f))?;
        let corestricted = self.lift(&embedding, f)?;
        let middle = self.descend(&projection, &corestricted)?;
        Ok(FactorizationTriple {
            projection,
            middle,
            embedding,
        })
    }

    fn same_parent(&self, s: &Self::Subgroup, t: &Self::Subgroup, op: &'static str) -> Result<()> {
        if self.parent(s) == self.parent(t) {
            Ok(())
        } else {
            Err(Error::ParentMismatch { op })
        }
    }
}

/// The three legs of the canonical factorization of a morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationTriple<B: Backend> {
    pub projection: B::Morphism,
    pub middle: B::Morphism,
    pub embedding: B::Morphism,
}

impl<B: Backend> FactorizationTriple<B> {
    pub fn composite(&self, backend: &B) -> Result<B::Morphism> {
        let tail = backend.compose(&self.middle, &self.projection)?;
        backend.compose(&self.embedding, &tail)
    }
}
