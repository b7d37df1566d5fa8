//! Double complexes on a sparse integer grid and their homology objects.
//!
//! Position `(row, col)`: rows grow downward, columns to the right. The
//! horizontal differential at `(r, c)` goes to `(r, c + 1)`, the vertical one
//! to `(r + 1, c)`. Positions without a stored object hold the trivial
//! object, and missing differentials are zero.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, NormalToFailure, Result};
use crate::lattice::Backend;
use crate::subquotient::{form_subquotient, Subquotient};

pub type Pos = (i32, i32);

pub(crate) fn shift(pos: Pos, dr: i32, dc: i32) -> Pos {
    (pos.0 + dr, pos.1 + dc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LawKind {
    /// `δh ∘ δh ≠ 0` starting at the position.
    HorizontalSquare,
    /// `δv ∘ δv ≠ 0` starting at the position.
    VerticalSquare,
    /// The square with top-left corner at the position does not commute.
    Commutation,
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawKind::HorizontalSquare => f.write_str("horizontal differential squares to nonzero"),
            LawKind::VerticalSquare => f.write_str("vertical differential squares to nonzero"),
            LawKind::Commutation => f.write_str("square does not commute"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub kind: LawKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComplexReport {
    pub checked: usize,
    pub violations: Vec<LawViolation>,
}

impl ComplexReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone)]
pub struct DoubleComplex<B: Backend> {
    backend: B,
    objects: BTreeMap<Pos, B::Object>,
    horizontal: BTreeMap<Pos, B::Morphism>,
    vertical: BTreeMap<Pos, B::Morphism>,
}

impl<B: Backend> fmt::Debug for DoubleComplex<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DoubleComplex")
            .field("objects", &self.objects)
            .field("horizontal", &self.horizontal)
            .field("vertical", &self.vertical)
            .finish()
    }
}

impl<B: Backend> PartialEq for DoubleComplex<B> {
    fn eq(&self, other: &Self) -> bool {
        let positions: BTreeSet<Pos> = self
            .mentioned()
            .into_iter()
            .chain(other.mentioned())
            .collect();
        positions.into_iter().all(|p| {
            self.object(p) == other.object(p)
                && self.horizontal(p) == other.horizontal(p)
                && self.vertical(p) == other.vertical(p)
        })
    }
}

impl<B: Backend> DoubleComplex<B> {
    pub fn new(backend: B) -> Self {
        DoubleComplex {
            backend,
            objects: BTreeMap::new(),
            horizontal: BTreeMap::new(),
            vertical: BTreeMap::new(),
        }
    }

    pub fn backend(&self) -> &B {
        &self.backend
    }

    /// Places `obj` at `pos`. Stored differentials touching `pos` whose
    /// endpoints no longer match are dropped (they become zero).
    pub fn set_object(&mut self, pos: Pos, obj: B::Object) {
        if self.backend.is_trivial_object(&obj) {
            self.objects.remove(&pos);
        } else {
            self.objects.insert(pos, obj);
        }
        let b = &self.backend;
        let objects = &self.objects;
        let at = |p: Pos| objects.get(&p).cloned().unwrap_or_else(|| b.trivial());
        for (map, step) in [(&mut self.horizontal, (0, 1)), (&mut self.vertical, (1, 0))] {
            for from in [pos, shift(pos, -step.0, -step.1)] {
                let to = shift(from, step.0, step.1);
                if let Some(m) = map.get(&from) {
                    if *b.source(m) != at(from) || *b.target(m) != at(to) {
                        map.remove(&from);
                    }
                }
            }
        }
    }

    fn checked_insert(&mut self, pos: Pos, to: Pos, m: B::Morphism, vertical: bool) -> Result<()> {
        let b = &self.backend;
        if *b.source(&m) != self.object(pos) || *b.target(&m) != self.object(to) {
            return Err(Error::Endpoint(format!(
                "{} map at {:?} does not run from the object at {:?} to the object at {:?}",
                if vertical { "vertical" } else { "horizontal" },
                pos,
                pos,
                to
            )));
        }
        let store = if vertical { &mut self.vertical } else { &mut self.horizontal };
        if b.is_zero(&m) {
            store.remove(&pos);
        } else {
            store.insert(pos, m);
        }
        Ok(())
    }

    /// Sets `δh` at `pos`, i.e. the map `pos → pos + (0,1)`.
    pub fn set_horizontal(&mut self, pos: Pos, m: B::Morphism) -> Result<()> {
        self.checked_insert(pos, shift(pos, 0, 1), m, false)
    }

    /// Sets `δv` at `pos`, i.e. the map `pos → pos + (1,0)`.
    pub fn set_vertical(&mut self, pos: Pos, m: B::Morphism) -> Result<()> {
        self.checked_insert(pos, shift(pos, 1, 0), m, true)
    }

    pub fn object(&self, pos: Pos) -> B::Object {
        self.objects.get(&pos).cloned().unwrap_or_else(|| self.backend.trivial())
    }

    pub fn horizontal(&self, pos: Pos) -> B::Morphism {
        self.horizontal.get(&pos).cloned().unwrap_or_else(|| {
            self.backend.zero(&self.object(pos), &self.object(shift(pos, 0, 1)))
        })
    }

    pub fn vertical(&self, pos: Pos) -> B::Morphism {
        self.vertical.get(&pos).cloned().unwrap_or_else(|| {
            self.backend.zero(&self.object(pos), &self.object(shift(pos, 1, 0)))
        })
    }

    /// Positions holding a nontrivial object, in row-major order.
    pub fn support(&self) -> Vec<Pos> {
        self.objects.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    fn mentioned(&self) -> BTreeSet<Pos> {
        self.objects
            .keys()
            .chain(self.horizontal.keys())
            .chain(self.vertical.keys())
            .copied()
            .collect()
    }

    /// Smallest `(top-left, bottom-right)` box containing the support.
    pub fn bounds(&self) -> Option<(Pos, Pos)> {
        let rows = self.objects.keys().map(|p| p.0);
        let cols = self.objects.keys().map(|p| p.1);
        Some((
            (rows.clone().min()?, cols.clone().min()?),
            (rows.max()?, cols.max()?),
        ))
    }

    /// Every position of the support box grown by `margin` on each side.
    pub fn padded_positions(&self, margin: i32) -> Vec<Pos> {
        match self.bounds() {
            None => Vec::new(),
            Some(((r0, c0), (r1, c1))) => (r0 - margin..=r1 + margin)
                .flat_map(|r| (c0 - margin..=c1 + margin).map(move |c| (r, c)))
                .collect(),
        }
    }

    /// Checks both square-zero laws and commutation everywhere they could fail.
    pub fn validate(&self) -> Result<ComplexReport> {
        let b = &self.backend;
        for (store, step) in [(&self.horizontal, (0, 1)), (&self.vertical, (1, 0))] {
            for (&pos, m) in store {
                if *b.source(m) != self.object(pos) || *b.target(m) != self.object(shift(pos, step.0, step.1)) {
                    return Err(Error::Endpoint(format!("stored map at {pos:?} has stale endpoints")));
                }
            }
        }
        let mut report = ComplexReport::default();
        for pos in self.padded_positions(2) {
            let h = self.horizontal(pos);
            let v = self.vertical(pos);
            let hh = b.compose(&self.horizontal(shift(pos, 0, 1)), &h)?;
            let vv = b.compose(&self.vertical(shift(pos, 1, 0)), &v)?;
            let right_down = b.compose(&self.vertical(shift(pos, 0, 1)), &h)?;
            let down_right = b.compose(&self.horizontal(shift(pos, 1, 0)), &v)?;
            report.checked += 3;
            if !b.is_zero(&hh) {
                report.violations.push(LawViolation { kind: LawKind::HorizontalSquare, pos });
            }
            if !b.is_zero(&vv) {
                report.violations.push(LawViolation { kind: LawKind::VerticalSquare, pos });
            }
            if right_down != down_right {
                report.violations.push(LawViolation { kind: LawKind::Commutation, pos });
            }
        }
        Ok(report)
    }

    /// Swaps rows and columns; horizontal and vertical differentials trade
    /// places.
    pub fn transpose(&self) -> Self {
        let flip = |p: &Pos| (p.1, p.0);
        DoubleComplex {
            backend: self.backend.clone(),
            objects: self.objects.iter().map(|(p, o)| (flip(p), o.clone())).collect(),
            horizontal: self.vertical.iter().map(|(p, m)| (flip(p), m.clone())).collect(),
            vertical: self.horizontal.iter().map(|(p, m)| (flip(p), m.clone())).collect(),
        }
    }

    pub fn local_star(&self, pos: Pos) -> Result<LocalStar<B>> {
        let b = &self.backend;
        let above = shift(pos, -1, 0);
        let h_in = self.horizontal(shift(pos, 0, -1));
        let v_in = self.vertical(above);
        let h_out = self.horizontal(pos);
        let v_out = self.vertical(pos);
        let above_h_in = self.horizontal(shift(pos, -1, -1));
        let above_v_in = self.vertical(shift(pos, -2, 0));
        let right_v_out = self.vertical(shift(pos, 0, 1));
        Ok(LocalStar {
            diagonal_in: b.compose(&v_in, &above_h_in)?,
            above_diagonal: b.compose(&h_out, &v_in)?,
            diagonal_out: b.compose(&right_v_out, &h_out)?,
            h_in,
            v_in,
            h_out,
            v_out,
            above_h_in,
            above_v_in,
            right_v_out,
        })
    }

    fn homology_parts(&self, kind: HomologyKind, pos: Pos) -> Result<(B::Subgroup, B::Subgroup)> {
        let b = &self.backend;
        let star = self.local_star(pos)?;
        Ok(match kind {
            HomologyKind::Horizontal => (b.kernel(&star.h_out), b.image(&star.h_in)),
            HomologyKind::Vertical => (b.kernel(&star.v_out), b.image(&star.v_in)),
            HomologyKind::Donor => (
                b.kernel(&star.diagonal_out),
                b.join(&b.image(&star.v_in), &b.image(&star.h_in))?,
            ),
            HomologyKind::Receptor => (
                b.meet(&b.kernel(&star.h_out), &b.kernel(&star.v_out))?,
                b.image(&star.diagonal_in),
            ),
        })
    }

    pub fn homology(&self, kind: HomologyKind, pos: Pos) -> Result<HomologyObject<B>> {
        let (numerator, denominator) = self.homology_parts(kind, pos)?;
        let value = match self.backend.check_normal_to(&denominator, &numerator)? {
            Ok(()) => Ok(form_subquotient(&self.backend, &numerator, &denominator)?),
            Err(reason) => Err(reason),
        };
        Ok(HomologyObject {
            kind,
            pos,
            numerator,
            denominator,
            value,
        })
    }

    /// `Ker δh / Im δh` at `pos`.
    pub fn horizontal_homology(&self, pos: Pos) -> Result<HomologyObject<B>> {
        self.homology(HomologyKind::Horizontal, pos)
    }

    /// `Ker δv / Im δv` at `pos`.
    pub fn vertical_homology(&self, pos: Pos) -> Result<HomologyObject<B>> {
        self.homology(HomologyKind::Vertical, pos)
    }

    /// Kernel of the outgoing diagonal modulo both incoming images.
    pub fn donor(&self, pos: Pos) -> Result<HomologyObject<B>> {
        self.homology(HomologyKind::Donor, pos)
    }

    /// Both outgoing kernels modulo the image of the incoming diagonal.
    pub fn receptor(&self, pos: Pos) -> Result<HomologyObject<B>> {
        self.homology(HomologyKind::Receptor, pos)
    }

    /// `Im δh(into pos) = Ker δh(out of pos)`.
    pub fn is_row_exact_at(&self, pos: Pos) -> bool {
        let b = &self.backend;
        b.image(&self.horizontal(shift(pos, 0, -1))) == b.kernel(&self.horizontal(pos))
    }

    /// `Im δv(into pos) = Ker δv(out of pos)`.
    pub fn is_column_exact_at(&self, pos: Pos) -> bool {
        let b = &self.backend;
        b.image(&self.vertical(shift(pos, -1, 0))) == b.kernel(&self.vertical(pos))
    }
}

/// The differentials around a position `A`, with `C` above `A`, `B` to its
/// right and `D` below `B`.
#[derive(Clone)]
pub struct LocalStar<B: Backend> {
    /// Horizontal map into `A`.
    pub h_in: B::Morphism,
    /// Vertical map `C → A`.
    pub v_in: B::Morphism,
    /// Horizontal map `A → B`.
    pub h_out: B::Morphism,
    /// Vertical map out of `A`.
    pub v_out: B::Morphism,
    /// Horizontal map into `C`.
    pub above_h_in: B::Morphism,
    /// Vertical map into `C`.
    pub above_v_in: B::Morphism,
    /// Vertical map `B → D`.
    pub right_v_out: B::Morphism,
    /// `v_in ∘ above_h_in`, the diagonal into `A`.
    pub diagonal_in: B::Morphism,
    /// `h_out ∘ v_in`, the diagonal `C → B`.
    pub above_diagonal: B::Morphism,
    /// `right_v_out ∘ h_out`, the diagonal `A → D`.
    pub diagonal_out: B::Morphism,
}

impl<B: Backend> fmt::Debug for LocalStar<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalStar")
            .field("h_in", &self.h_in)
            .field("v_in", &self.v_in)
            .field("h_out", &self.h_out)
            .field("v_out", &self.v_out)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomologyKind {
    Horizontal,
    Vertical,
    Donor,
    Receptor,
}

impl HomologyKind {
    pub const ALL: [HomologyKind; 4] = [
        HomologyKind::Horizontal,
        HomologyKind::Vertical,
        HomologyKind::Donor,
        HomologyKind::Receptor,
    ];

    /// Label for a homology object at a named position.
    pub fn label(&self, at: &str) -> String {
        match self {
            HomologyKind::Horizontal => format!("{at}_h"),
            HomologyKind::Vertical => format!("{at}_v"),
            HomologyKind::Donor => format!("{at}_□"),
            HomologyKind::Receptor => format!("□{at}"),
        }
    }
}

impl fmt::Display for HomologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomologyKind::Horizontal => "horizontal",
            HomologyKind::Vertical => "vertical",
            HomologyKind::Donor => "donor",
            HomologyKind::Receptor => "receptor",
        })
    }
}

/// A homology object at a position, or the reason it is undefined.
#[derive(Clone)]
pub struct HomologyObject<B: Backend> {
    pub kind: HomologyKind,
    pub pos: Pos,
    pub numerator: B::Subgroup,
    pub denominator: B::Subgroup,
    pub value: std::result::Result<Subquotient<B>, NormalToFailure>,
}

impl<B: Backend> fmt::Debug for HomologyObject<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: ", self.kind, self.pos)?;
        match &self.value {
            Ok(sq) => write!(f, "{sq:?}"),
            Err(reason) => write!(f, "undefined ({reason})"),
        }
    }
}

impl<B: Backend> HomologyObject<B> {
    pub fn is_defined(&self) -> bool {
        self.value.is_ok()
    }

    pub fn subquotient(&self) -> Option<&Subquotient<B>> {
        self.value.as_ref().ok()
    }

    /// Carrier order, when defined.
    pub fn order(&self, backend: &B) -> Option<usize> {
        self.subquotient().map(|sq| sq.order(backend))
    }

    pub fn is_trivial(&self, backend: &B) -> bool {
        self.order(backend) == Some(1)
    }

    /// Defined with numerator everything and denominator nothing, so the
    /// object is the grid object itself.
    pub fn is_whole_object(&self, backend: &B) -> bool {
        self.is_defined()
            && self.numerator == backend.top(backend.parent(&self.numerator))
            && self.denominator == backend.bottom(backend.parent(&self.denominator))
    }
}

/// A double complex over either backend.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyComplex {
    Table(DoubleComplex<crate::table::TableBackend>),
    Vector(DoubleComplex<crate::vector::VecBackend>),
}

/// Evaluates `$body` with `$dc` bound to the inner complex of an
/// [`AnyComplex`], whichever backend it uses.
#[macro_export]
macro_rules! with_complex {
    ($any:expr, $dc:ident => $body:expr) => {
        match $any {
            $crate::complex::AnyComplex::Table($dc) => $body,
            $crate::complex::AnyComplex::Vector($dc) => $body,
        }
    };
}

impl AnyComplex {
    pub fn tag(&self) -> crate::lattice::BackendTag {
        with_complex!(self, dc => dc.backend().tag())
    }

    pub fn validate(&self) -> Result<ComplexReport> {
        with_complex!(self, dc => dc.validate())
    }

    pub fn support(&self) -> Vec<Pos> {
        with_complex!(self, dc => dc.support())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::groups::cyclic;
    use crate::table::{TableBackend, TableMorphism};

    const T: TableBackend = TableBackend;

    fn c2_square(h: bool) -> DoubleComplex<TableBackend> {
        let c2 = cyclic(2);
        let mut dc = DoubleComplex::new(T);
        for p in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            dc.set_object(p, c2.clone());
        }
        dc.set_vertical((0, 0), T.identity(&c2)).unwrap();
        dc.set_vertical((0, 1), T.identity(&c2)).unwrap();
        if h {
            dc.set_horizontal((0, 0), T.identity(&c2)).unwrap();
        }
        dc
    }

    #[test]
    fn empty_and_zero_grids_are_valid() {
        assert!(DoubleComplex::new(T).validate().unwrap().is_valid());
        assert!(c2_square(false).validate().unwrap().is_valid());
    }

    #[test]
    fn commutation_violation_is_located() {
        let report = c2_square(true).validate().unwrap();
        assert_eq!(
            report.violations,
            vec![LawViolation { kind: LawKind::Commutation, pos: (0, 0) }]
        );
    }

    #[test]
    fn endpoint_mismatch_is_rejected() {
        let mut dc = DoubleComplex::new(T);
        dc.set_object((0, 0), cyclic(4));
        dc.set_object((0, 1), cyclic(2));
        assert!(dc.set_horizontal((0, 0), T.identity(&cyclic(4))).is_err());
        let red = TableMorphism::new(&cyclic(4), &cyclic(2), vec![0, 1, 0, 1]).unwrap();
        assert!(dc.set_horizontal((0, 0), red).is_ok());
    }

    #[test]
    fn zero_differentials_give_whole_objects() {
        let mut dc = DoubleComplex::new(T);
        dc.set_object((0, 0), cyclic(4));
        for kind in HomologyKind::ALL {
            let h = dc.homology(kind, (0, 0)).unwrap();
            assert!(h.is_whole_object(&T));
            assert_eq!(h.order(&T), Some(4));
        }
        let off = dc.donor((5, 5)).unwrap();
        assert!(off.is_trivial(&T));
    }

    #[test]
    fn short_exact_row_has_trivial_middle_homology() {
        let (c2, c4) = (cyclic(2), cyclic(4));
        let mut dc = DoubleComplex::new(T);
        dc.set_object((0, 0), c2.clone());
        dc.set_object((0, 1), c4.clone());
        dc.set_object((0, 2), c2.clone());
        dc.set_horizontal((0, 0), TableMorphism::new(&c2, &c4, vec![0, 2]).unwrap()).unwrap();
        dc.set_horizontal((0, 1), TableMorphism::new(&c4, &c2, vec![0, 1, 0, 1]).unwrap()).unwrap();
        assert!(dc.validate().unwrap().is_valid());
        assert!(dc.horizontal_homology((0, 1)).unwrap().is_trivial(&T));
        assert!(dc.is_row_exact_at((0, 1)));
        // a column C2 -> C4 with nothing below
        let t = dc.transpose();
        let v = t.vertical_homology((1, 0)).unwrap();
        assert_eq!(v.order(&T), Some(1));
        let mut col = DoubleComplex::new(T);
        col.set_object((0, 0), c2.clone());
        col.set_object((1, 0), c4.clone());
        col.set_vertical((0, 0), TableMorphism::new(&c2, &c4, vec![0, 2]).unwrap()).unwrap();
        assert_eq!(col.vertical_homology((1, 0)).unwrap().order(&T), Some(2));
        assert_eq!(col.transpose().transpose(), col);
    }

    #[test]
    fn injective_out_map_kills_receptor() {
        let c2 = cyclic(2);
        let mut dc = DoubleComplex::new(T);
        dc.set_object((0, 0), c2.clone());
        dc.set_object((0, 1), c2.clone());
        dc.set_horizontal((0, 0), T.identity(&c2)).unwrap();
        assert!(dc.receptor((0, 0)).unwrap().is_trivial(&T));
    }

    #[test]
    fn set_object_drops_stale_maps() {
        let mut dc = c2_square(false);
        dc.set_object((0, 0), crate::table::CayleyGroup::trivial());
        assert!(T.is_zero(&dc.vertical((0, 0))));
        assert!(dc.validate().unwrap().is_valid());
    }
}
