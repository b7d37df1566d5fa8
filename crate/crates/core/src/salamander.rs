//! The six-term salamander sequence, the two families of isomorphisms it
//! yields, and the 3×3 lemma assembled from them.

use std::fmt;

use crate::complex::{shift, DoubleComplex, HomologyKind, HomologyObject, LawKind, Pos};
use crate::error::{Error, Result};
use crate::lattice::Backend;
use crate::subquotient::{
    exactness_criterion, induced_morphism, is_exact_at, ExactnessConfig, InducedMorphism, Subquotient,
};

/// Names of the six terms, in order.
pub const SEQUENCE_LABELS: [&str; 6] = ["C_□", "A_h", "A_□", "□B", "B_h", "□D"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HypothesisReport {
    pub checks: Vec<HypothesisCheck>,
}

impl HypothesisReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&HypothesisCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn definedness_check<B: Backend>(label: &str, h: &HomologyObject<B>, backend: &B) -> HypothesisCheck {
    match &h.value {
        Ok(sq) => HypothesisCheck {
            label: format!("{label} defined"),
            passed: true,
            detail: format!("order {}", sq.order(backend)),
        },
        Err(reason) => HypothesisCheck {
            label: format!("{label} defined"),
            passed: false,
            detail: reason.to_string(),
        },
    }
}

/// `C_□ → A_h → A_□ → □B → B_h → □D` around `A`.
#[derive(Clone)]
pub struct SixTermSequence<B: Backend> {
    pub position: Pos,
    pub objects: Vec<Subquotient<B>>,
    pub maps: Vec<InducedMorphism<B>>,
    pub hypotheses: HypothesisReport,
}

impl<B: Backend> fmt::Debug for SixTermSequence<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SixTermSequence")
            .field("position", &self.position)
            .field("objects", &self.objects)
            .finish_non_exhaustive()
    }
}

fn six_objects<B: Backend>(dc: &DoubleComplex<B>, pos: Pos) -> Result<Vec<HomologyObject<B>>> {
    let above = shift(pos, -1, 0);
    let right = shift(pos, 0, 1);
    let below_right = shift(pos, 1, 1);
    Ok(vec![
        dc.donor(above)?,
        dc.horizontal_homology(pos)?,
        dc.donor(pos)?,
        dc.receptor(right)?,
        dc.horizontal_homology(right)?,
        dc.receptor(below_right)?,
    ])
}

/// Definedness of the six terms and normality of the image of the vertical
/// map into `A`.
pub fn salamander_hypotheses<B: Backend>(dc: &DoubleComplex<B>, pos: Pos) -> Result<HypothesisReport> {
    let b = dc.backend();
    let objects = six_objects(dc, pos)?;
    let mut checks: Vec<HypothesisCheck> = objects
        .iter()
        .zip(SEQUENCE_LABELS)
        .map(|(h, label)| definedness_check(label, h, b))
        .collect();
    let im_c = b.image(&dc.vertical(shift(pos, -1, 0)));
    let normal = b.is_normal(&im_c);
    checks.push(HypothesisCheck {
        label: "image of the vertical map into A is normal".into(),
        passed: normal,
        detail: if normal { String::new() } else { format!("{im_c:?} is not normal") },
    });
    Ok(HypothesisReport { checks })
}

/// Builds the sequence at `A = pos`, refusing when a hypothesis fails.
pub fn salamander_sequence<B: Backend>(dc: &DoubleComplex<B>, pos: Pos) -> Result<SixTermSequence<B>> {
    let b = dc.backend();
    let hypotheses = salamander_hypotheses(dc, pos)?;
    if let Some(failed) = hypotheses.first_failure() {
        return Err(Error::Hypothesis(format!("{} at {:?}: {}", failed.label, pos, failed.detail)));
    }
    let objects: Vec<Subquotient<B>> = six_objects(dc, pos)?
        .into_iter()
        .map(|h| h.value.expect("definedness checked"))
        .collect();
    let right = shift(pos, 0, 1);
    let ambient_maps = [
        dc.vertical(shift(pos, -1, 0)),
        b.identity(&dc.object(pos)),
        dc.horizontal(pos),
        b.identity(&dc.object(right)),
        dc.vertical(right),
    ];
    let maps = ambient_maps
        .iter()
        .enumerate()
        .map(|(i, f)| induced_morphism(b, f, &objects[i], &objects[i + 1]))
        .collect::<Result<Vec<_>>>()?;
    Ok(SixTermSequence {
        position: pos,
        objects,
        maps,
        hypotheses,
    })
}

/// The same sequence built on the transposed complex: horizontal and
/// vertical roles swap.
pub fn vertical_salamander_sequence<B: Backend>(dc: &DoubleComplex<B>, pos: Pos) -> Result<SixTermSequence<B>> {
    salamander_sequence(&dc.transpose(), (pos.1, pos.0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionVerdict {
    pub at: &'static str,
    /// `Im = Ker` computed in the carrier.
    pub direct: bool,
    /// The lattice identity for the ambient data.
    pub criterion: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SalamanderReport {
    pub positions: Vec<PositionVerdict>,
}

impl SalamanderReport {
    pub fn exact_count(&self) -> usize {
        self.positions.iter().filter(|p| p.direct && p.criterion).count()
    }

    pub fn all_exact(&self) -> bool {
        self.exact_count() == self.positions.len()
    }

    pub fn checks_agree(&self) -> bool {
        self.positions.iter().all(|p| p.direct == p.criterion)
    }
}

/// Exactness at the four interior terms, each decided twice.
pub fn verify_salamander<B: Backend>(backend: &B, seq: &SixTermSequence<B>) -> Result<SalamanderReport> {
    let mut positions = Vec::with_capacity(4);
    for i in 0..4 {
        let (first, second) = (&seq.maps[i], &seq.maps[i + 1]);
        let direct = is_exact_at(backend, first, second)?;
        let criterion = exactness_criterion(backend, &ExactnessConfig::from_induced(first, second)?)?;
        positions.push(PositionVerdict {
            at: SEQUENCE_LABELS[i + 1],
            direct,
            criterion,
        });
    }
    Ok(SalamanderReport { positions })
}

/// Whether the outer maps of the sequence agree with the composites through
/// `□A` and `B_□`; `None` when those are undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoherenceReport {
    pub through_receptor: Option<bool>,
    pub through_donor: Option<bool>,
}

pub fn composite_coherence<B: Backend>(dc: &DoubleComplex<B>, pos: Pos) -> Result<CoherenceReport> {
    let b = dc.backend();
    let right = shift(pos, 0, 1);
    let c_donor = dc.donor(shift(pos, -1, 0))?;
    let a_h = dc.horizontal_homology(pos)?;
    let a_receptor = dc.receptor(pos)?;
    let c = dc.vertical(shift(pos, -1, 0));
    let through_receptor = match (c_donor.subquotient(), a_h.subquotient(), a_receptor.subquotient()) {
        (Some(start), Some(end), Some(mid)) => {
            let direct = induced_morphism(b, &c, start, end)?;
            let first = induced_morphism(b, &c, start, mid)?;
            let second = induced_morphism(b, &b.identity(&dc.object(pos)), mid, end)?;
            Some(b.compose(&second.map, &first.map)? == direct.map)
        }
        _ => None,
    };
    let b_h = dc.horizontal_homology(right)?;
    let d_receptor = dc.receptor(shift(pos, 1, 1))?;
    let b_donor = dc.donor(right)?;
    let g = dc.vertical(right);
    let through_donor = match (b_h.subquotient(), d_receptor.subquotient(), b_donor.subquotient()) {
        (Some(start), Some(end), Some(mid)) => {
            let direct = induced_morphism(b, &g, start, end)?;
            let first = induced_morphism(b, &b.identity(&dc.object(right)), start, mid)?;
            let second = induced_morphism(b, &g, mid, end)?;
            Some(b.compose(&second.map, &first.map)? == direct.map)
        }
        _ => None,
    };
    Ok(CoherenceReport {
        through_receptor,
        through_donor,
    })
}

/// An induced map between homology objects together with the two predicates
/// that make it an isomorphism.
#[derive(Clone)]
pub struct VerifiedIso<B: Backend> {
    pub from: String,
    pub to: String,
    pub map: InducedMorphism<B>,
    pub embedding: bool,
    pub projection: bool,
}

impl<B: Backend> fmt::Debug for VerifiedIso<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} (embedding: {}, projection: {})",
            self.from, self.to, self.embedding, self.projection
        )
    }
}

impl<B: Backend> VerifiedIso<B> {
    pub fn is_isomorphism(&self) -> bool {
        self.embedding && self.projection
    }

    fn build(backend: &B, from: String, to: String, map: InducedMorphism<B>) -> Self {
        VerifiedIso {
            embedding: backend.is_embedding(&map.map),
            projection: backend.is_projection(&map.map),
            from,
            to,
            map,
        }
    }
}

fn name(kind: HomologyKind, pos: Pos) -> String {
    kind.label(&format!("{pos:?}"))
}

fn defined<B: Backend>(dc: &DoubleComplex<B>, kind: HomologyKind, pos: Pos) -> Result<HomologyObject<B>> {
    let h = dc.homology(kind, pos)?;
    if let Err(reason) = &h.value {
        return Err(Error::Hypothesis(format!("{} is undefined: {reason}", name(kind, pos))));
    }
    Ok(h)
}

fn defined_trivial<B: Backend>(dc: &DoubleComplex<B>, kind: HomologyKind, pos: Pos) -> Result<()> {
    let h = defined(dc, kind, pos)?;
    let order = h.order(dc.backend()).expect("defined");
    if order != 1 {
        return Err(Error::Hypothesis(format!("{} is not trivial (order {order})", name(kind, pos))));
    }
    Ok(())
}

fn identity_iso<B: Backend>(dc: &DoubleComplex<B>, pos: Pos, from: HomologyKind, to: HomologyKind) -> Result<VerifiedIso<B>> {
    let b = dc.backend();
    let src = defined(dc, from, pos)?.value.expect("defined");
    let dst = defined(dc, to, pos)?.value.expect("defined");
    let map = induced_morphism(b, &b.identity(&dc.object(pos)), &src, &dst)?;
    Ok(VerifiedIso::build(b, name(from, pos), name(to, pos), map))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Horizontal,
    Vertical,
}

/// `A_□ ≅ □B` for the edge leaving `from` in `direction`, when the homology
/// of both endpoints along that direction is trivial.
pub fn donor_receptor_iso<B: Backend>(dc: &DoubleComplex<B>, from: Pos, direction: Direction) -> Result<VerifiedIso<B>> {
    let b = dc.backend();
    let (to, kind, edge) = match direction {
        Direction::Horizontal => (shift(from, 0, 1), HomologyKind::Horizontal, dc.horizontal(from)),
        Direction::Vertical => (shift(from, 1, 0), HomologyKind::Vertical, dc.vertical(from)),
    };
    defined_trivial(dc, kind, from)?;
    defined_trivial(dc, kind, to)?;
    let src = defined(dc, HomologyKind::Donor, from)?.value.expect("defined");
    let dst = defined(dc, HomologyKind::Receptor, to)?.value.expect("defined");
    let map = induced_morphism(b, &edge, &src, &dst)?;
    Ok(VerifiedIso::build(
        b,
        name(HomologyKind::Donor, from),
        name(HomologyKind::Receptor, to),
        map,
    ))
}

/// The four corner configurations, named by where `B` sits relative to `A`:
/// below, right, above, left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    A,
    B,
    C,
    D,
}

impl Shape {
    pub const ALL: [Shape; 4] = [Shape::A, Shape::B, Shape::C, Shape::D];
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::A => "(a)",
            Shape::B => "(b)",
            Shape::C => "(c)",
            Shape::D => "(d)",
        })
    }
}

/// Two identity-induced isomorphisms at a corner `pos`, after checking the
/// shape: trivial objects beside `A` and `B`, and exactness at `B` of the
/// row or column through `B` across the edge.
pub fn corner_iso<B: Backend>(dc: &DoubleComplex<B>, pos: Pos, shape: Shape) -> Result<[VerifiedIso<B>; 2]> {
    use HomologyKind::*;
    let b = dc.backend();
    let (other, trivial, row_through_other, isos) = match shape {
        Shape::A => (
            shift(pos, 1, 0),
            [shift(pos, 0, -1), shift(pos, 1, -1)],
            true,
            [(Receptor, Horizontal), (Vertical, Donor)],
        ),
        Shape::B => (
            shift(pos, 0, 1),
            [shift(pos, -1, 0), shift(pos, -1, 1)],
            false,
            [(Receptor, Vertical), (Horizontal, Donor)],
        ),
        Shape::C => (
            shift(pos, -1, 0),
            [shift(pos, 0, 1), shift(pos, -1, 1)],
            true,
            [(Horizontal, Donor), (Receptor, Vertical)],
        ),
        Shape::D => (
            shift(pos, 0, -1),
            [shift(pos, 1, 0), shift(pos, 1, -1)],
            false,
            [(Vertical, Donor), (Receptor, Horizontal)],
        ),
    };
    for t in trivial {
        if !b.is_trivial_object(&dc.object(t)) {
            return Err(Error::Hypothesis(format!("shape {shape}: object at {t:?} is not trivial")));
        }
    }
    let exact = if row_through_other {
        dc.is_row_exact_at(other)
    } else {
        dc.is_column_exact_at(other)
    };
    if !exact {
        return Err(Error::Hypothesis(format!(
            "shape {shape}: the {} through {other:?} is not exact there",
            if row_through_other { "row" } else { "column" }
        )));
    }
    for kind in HomologyKind::ALL {
        defined(dc, kind, pos)?;
    }
    Ok([
        identity_iso(dc, pos, isos[0].0, isos[0].1)?,
        identity_iso(dc, pos, isos[1].0, isos[1].1)?,
    ])
}

/// Result of the 3×3 check on a grid with `A′` at `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeByThreeReport {
    pub trace: Vec<String>,
    pub definedness: Vec<(String, bool)>,
    /// Triviality of the first-row homology at each column, via the chains.
    pub chain_exact: [bool; 3],
    /// Exactness of the first row at each column, computed directly.
    pub direct_exact: [bool; 3],
}

impl ThreeByThreeReport {
    pub fn first_row_exact(&self) -> bool {
        self.chain_exact.iter().chain(&self.direct_exact).all(|&x| x)
    }

    pub fn routes_agree(&self) -> bool {
        self.chain_exact == self.direct_exact
    }
}

const PRIMES: [&str; 3] = ["′", "", "″"];
const LETTERS: [&str; 3] = ["A", "B", "C"];

fn grid_name(pos: Pos) -> String {
    format!("{}{}", LETTERS[pos.1 as usize], PRIMES[pos.0 as usize])
}

fn record_iso<B: Backend>(trace: &mut Vec<String>, via: &str, iso: &VerifiedIso<B>, backend: &B) -> bool {
    let ok = iso.is_isomorphism();
    trace.push(format!(
        "{} -> {} [{}]: orders {} -> {}, embedding {}, projection {}",
        iso.from,
        iso.to,
        via,
        iso.map.source.order(backend),
        iso.map.target.order(backend),
        iso.embedding,
        iso.projection
    ));
    ok
}

/// Checks the 3×3 hypotheses, then shows the first row exact both through
/// the chains of corner and donor/receptor isomorphisms and directly.
pub fn three_by_three<B: Backend>(dc: &DoubleComplex<B>) -> Result<ThreeByThreeReport> {
    let b = dc.backend();
    let mut trace = Vec::new();
    for pos in dc.support() {
        if !(0..3).contains(&pos.0) || !(0..3).contains(&pos.1) {
            return Err(Error::Hypothesis(format!("object outside the 3x3 grid at {pos:?}")));
        }
    }
    let report = dc.validate()?;
    for v in &report.violations {
        if !(v.kind == LawKind::HorizontalSquare && v.pos.0 == 0) {
            return Err(Error::Hypothesis(format!("{} at {:?}", v.kind, v.pos)));
        }
    }
    for col in 0..3 {
        for row in 0..3 {
            if !dc.is_column_exact_at((row, col)) {
                return Err(Error::Hypothesis(format!(
                    "column {col} is not exact at {} {:?}",
                    grid_name((row, col)),
                    (row, col)
                )));
            }
        }
    }
    for row in 1..3 {
        for col in 0..3 {
            if !dc.is_row_exact_at((row, col)) {
                return Err(Error::Hypothesis(format!(
                    "row {row} is not exact at {} {:?}",
                    grid_name((row, col)),
                    (row, col)
                )));
            }
        }
    }
    trace.push("hypotheses: all columns exact, rows 1 and 2 exact".into());

    // first row is a complex: the right column map is monic and the
    // composite through it equals the one through the middle row, which is zero
    let x2 = dc.horizontal((0, 0));
    let x3 = dc.horizontal((0, 1));
    let y10 = dc.vertical((0, 2));
    let top_path = b.compose(&y10, &b.compose(&x3, &x2)?)?;
    let low_path = b.compose(&dc.horizontal((1, 1)), &b.compose(&dc.horizontal((1, 0)), &dc.vertical((0, 0)))?)?;
    let derived = b.is_embedding(&y10) && top_path == low_path && b.is_zero(&low_path);
    let actual = b.is_zero(&b.compose(&x3, &x2)?);
    trace.push(format!(
        "first row composite: right column map embedding {}, paths agree {}, middle-row path zero {} => zero; direct {}",
        b.is_embedding(&y10),
        top_path == low_path,
        b.is_zero(&low_path),
        actual
    ));
    if !derived || !actual {
        return Err(Error::Hypothesis("first row is not a complex".into()));
    }

    use HomologyKind::*;
    let required: [(HomologyKind, Pos); 15] = [
        (Horizontal, (0, 0)),
        (Donor, (0, 0)),
        (Vertical, (0, 0)),
        (Horizontal, (0, 1)),
        (Donor, (0, 1)),
        (Receptor, (1, 1)),
        (Donor, (1, 0)),
        (Vertical, (1, 0)),
        (Horizontal, (0, 2)),
        (Donor, (0, 2)),
        (Receptor, (1, 2)),
        (Donor, (1, 1)),
        (Receptor, (2, 1)),
        (Donor, (2, 0)),
        (Vertical, (2, 0)),
    ];
    let mut definedness = Vec::with_capacity(required.len());
    for (kind, pos) in required {
        let h = dc.homology(kind, pos)?;
        let label = kind.label(&grid_name(pos));
        if let Err(reason) = &h.value {
            return Err(Error::Hypothesis(format!("{label} is undefined: {reason}")));
        }
        definedness.push((label, true));
    }

    let mut chain_exact = [true; 3];
    let mut step = |col: usize, via: String, iso: Result<VerifiedIso<B>>, trace: &mut Vec<String>| -> Result<()> {
        let iso = iso?;
        if !record_iso(trace, &via, &iso, b) {
            chain_exact[col] = false;
        }
        Ok(())
    };
    let corner = |pos: Pos, shape: Shape, which: usize| -> Result<VerifiedIso<B>> {
        let [first, second] = corner_iso(dc, pos, shape)?;
        Ok(if which == 0 { first } else { second })
    };

    trace.push("chain for A′".into());
    step(0, "corner (b) at A′".into(), corner((0, 0), Shape::B, 1), &mut trace)?;
    step(0, "corner (a) at A′".into(), corner((0, 0), Shape::A, 1), &mut trace)?;

    trace.push("chain for B′".into());
    step(1, "corner (b) at B′".into(), corner((0, 1), Shape::B, 1), &mut trace)?;
    step(1, "vertical edge B′ -> B".into(), donor_receptor_iso(dc, (0, 1), Direction::Vertical), &mut trace)?;
    step(1, "horizontal edge A -> B".into(), donor_receptor_iso(dc, (1, 0), Direction::Horizontal), &mut trace)?;
    step(1, "corner (a) at A".into(), corner((1, 0), Shape::A, 1), &mut trace)?;

    trace.push("chain for C′".into());
    step(2, "corner (b) at C′".into(), corner((0, 2), Shape::B, 1), &mut trace)?;
    step(2, "vertical edge C′ -> C".into(), donor_receptor_iso(dc, (0, 2), Direction::Vertical), &mut trace)?;
    step(2, "horizontal edge B -> C".into(), donor_receptor_iso(dc, (1, 1), Direction::Horizontal), &mut trace)?;
    step(2, "vertical edge B -> B″".into(), donor_receptor_iso(dc, (1, 1), Direction::Vertical), &mut trace)?;
    step(2, "horizontal edge A″ -> B″".into(), donor_receptor_iso(dc, (2, 0), Direction::Horizontal), &mut trace)?;
    step(2, "corner (a) at A″".into(), corner((2, 0), Shape::A, 1), &mut trace)?;

    for (col, end) in [(0, (0, 0)), (1, (1, 0)), (2, (2, 0))] {
        let last = dc.vertical_homology(end)?;
        let trivial = last.is_trivial(b);
        trace.push(format!("{} has order {:?}", Vertical.label(&grid_name(end)), last.order(b)));
        chain_exact[col] &= trivial;
    }

    let mut direct_exact = [false; 3];
    for (col, exact) in direct_exact.iter_mut().enumerate() {
        let pos = (0, col as i32);
        *exact = dc.is_row_exact_at(pos);
        let h = dc.horizontal_homology(pos)?;
        trace.push(format!(
            "direct: first row at {} exact {}, {} order {:?}",
            grid_name(pos),
            exact,
            Horizontal.label(&grid_name(pos)),
            h.order(b)
        ));
    }
    Ok(ThreeByThreeReport {
        trace,
        definedness,
        chain_exact,
        direct_exact,
    })
}

/// Salamander checks at every position of a complex, plus the corollary
/// isomorphisms along every qualifying edge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub positions: usize,
    /// Positions where the hypotheses held and the sequence was verified,
    /// counting the horizontal and vertical versions separately.
    pub verified: usize,
    pub skipped: usize,
    pub inexact: usize,
    pub disagreements: usize,
    pub incoherent: usize,
    pub undefined_homology: usize,
    /// Edges whose endpoints are both nonzero and whose homology along the
    /// edge is trivial at both ends.
    pub qualifying_edges: usize,
    pub failed_isos: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.inexact == 0 && self.disagreements == 0 && self.incoherent == 0 && self.failed_isos == 0
    }

    pub fn merge(mut self, other: SweepReport) -> Self {
        self.positions += other.positions;
        self.verified += other.verified;
        self.skipped += other.skipped;
        self.inexact += other.inexact;
        self.disagreements += other.disagreements;
        self.incoherent += other.incoherent;
        self.undefined_homology += other.undefined_homology;
        self.qualifying_edges += other.qualifying_edges;
        self.failed_isos += other.failed_isos;
        self.failures.extend(other.failures);
        self
    }
}

fn sweep_sequence<B: Backend>(report: &mut SweepReport, seq: Result<SixTermSequence<B>>, b: &B, what: &str, pos: Pos) -> Result<()> {
    let seq = match seq {
        Ok(seq) => seq,
        Err(Error::Hypothesis(_)) => {
            report.skipped += 1;
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    report.verified += 1;
    let verdict = verify_salamander(b, &seq)?;
    if !verdict.all_exact() {
        report.inexact += 1;
        report.failures.push(format!("{what} sequence at {pos:?}: exact at {}/4", verdict.exact_count()));
    }
    if !verdict.checks_agree() {
        report.disagreements += 1;
        report.failures.push(format!("{what} sequence at {pos:?}: criterion and direct check disagree"));
    }
    Ok(())
}

/// Runs the horizontal and vertical sequences, the composite coherence
/// check and the donor/receptor isomorphisms over the support plus a margin
/// of one.
pub fn sweep<B: Backend>(dc: &DoubleComplex<B>) -> Result<SweepReport> {
    let b = dc.backend();
    let mut report = SweepReport::default();
    for pos in dc.padded_positions(1) {
        report.positions += 1;
        for kind in HomologyKind::ALL {
            if !dc.homology(kind, pos)?.is_defined() {
                report.undefined_homology += 1;
            }
        }
        sweep_sequence(&mut report, salamander_sequence(dc, pos), b, "horizontal", pos)?;
        sweep_sequence(&mut report, vertical_salamander_sequence(dc, pos), b, "vertical", pos)?;
        if salamander_hypotheses(dc, pos)?.all_pass() {
            let c = composite_coherence(dc, pos)?;
            if c.through_receptor == Some(false) || c.through_donor == Some(false) {
                report.incoherent += 1;
                report.failures.push(format!("composites disagree at {pos:?}: {c:?}"));
            }
        }
        for direction in [Direction::Horizontal, Direction::Vertical] {
            let to = match direction {
                Direction::Horizontal => shift(pos, 0, 1),
                Direction::Vertical => shift(pos, 1, 0),
            };
            if b.is_trivial_object(&dc.object(pos)) || b.is_trivial_object(&dc.object(to)) {
                continue;
            }
            match donor_receptor_iso(dc, pos, direction) {
                Ok(iso) => {
                    report.qualifying_edges += 1;
                    if !iso.is_isomorphism() {
                        report.failed_isos += 1;
                        report.failures.push(format!("{iso:?}"));
                    }
                }
                Err(Error::Hypothesis(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{alternating_grid, broken_c2_c4_grid, c2_c4_grid, s3_grid};
    use crate::table::groups::cyclic;
    use crate::table::TableBackend;

    const T: TableBackend = TableBackend;

    fn zero_grid() -> DoubleComplex<TableBackend> {
        let mut dc = DoubleComplex::new(T);
        for (pos, n) in [((-1, 0), 2), ((0, 0), 4), ((0, 1), 3), ((1, 1), 2)] {
            dc.set_object(pos, cyclic(n));
        }
        dc
    }

    #[test]
    fn sweeps_pass_on_fixtures() {
        for dc in [zero_grid(), c2_c4_grid(), s3_grid(), alternating_grid(), broken_c2_c4_grid()] {
            let report = sweep(&dc).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
            assert!(report.verified > 0);
        }
        assert!(sweep(&c2_c4_grid()).unwrap().qualifying_edges > 0);
    }

    #[test]
    fn zero_complex_sequence_is_exact() {
        let dc = zero_grid();
        let seq = salamander_sequence(&dc, (0, 0)).unwrap();
        let orders: Vec<usize> = seq.objects.iter().map(|s| s.order(&T)).collect();
        assert_eq!(orders, vec![2, 4, 4, 3, 3, 2]);
        let report = verify_salamander(&T, &seq).unwrap();
        assert!(report.all_exact() && report.checks_agree());
    }

    #[test]
    fn corrupted_sequence_reports_inexactness() {
        let dc = zero_grid();
        let mut seq = salamander_sequence(&dc, (0, 0)).unwrap();
        for m in &mut seq.maps {
            m.map = T.zero(&m.source.carrier, &m.target.carrier);
            m.ambient_map = T.zero(&m.source.ambient, &m.target.ambient);
        }
        let report = verify_salamander(&T, &seq).unwrap();
        assert!(!report.all_exact());
        assert!(report.checks_agree());
    }

    #[test]
    fn fixture_sequences_are_exact_wherever_defined() {
        for dc in [c2_c4_grid(), s3_grid(), alternating_grid()] {
            let mut built = 0;
            for r in -1..4 {
                for c in -1..4 {
                    let Ok(seq) = salamander_sequence(&dc, (r, c)) else { continue };
                    built += 1;
                    let report = verify_salamander(&T, &seq).unwrap();
                    assert!(report.all_exact() && report.checks_agree(), "{:?} at {:?}", report, (r, c));
                    let coherence = composite_coherence(&dc, (r, c)).unwrap();
                    assert_ne!(coherence.through_receptor, Some(false));
                    assert_ne!(coherence.through_donor, Some(false));
                }
            }
            assert!(built > 0);
        }
        assert!(salamander_sequence(&c2_c4_grid(), (1, 1)).is_ok());
    }

    #[test]
    fn vertical_sequence_uses_transpose() {
        let dc = c2_c4_grid();
        let seq = vertical_salamander_sequence(&dc, (1, 1)).unwrap();
        assert!(verify_salamander(&T, &seq).unwrap().all_exact());
    }

    #[test]
    fn donor_receptor_needs_trivial_homology() {
        let err = donor_receptor_iso(&zero_grid(), (0, 0), Direction::Horizontal).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(msg) if msg.contains("not trivial")));
        let dc = c2_c4_grid();
        let iso = donor_receptor_iso(&dc, (1, 0), Direction::Horizontal).unwrap();
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn corner_isos_on_fixtures() {
        let mut verified = std::collections::BTreeSet::new();
        for dc in [c2_c4_grid(), s3_grid(), alternating_grid()] {
            for r in 0..3 {
                for c in 0..3 {
                    for shape in Shape::ALL {
                        if let Ok(isos) = corner_iso(&dc, (r, c), shape) {
                            assert!(isos.iter().all(VerifiedIso::is_isomorphism), "{isos:?}");
                            verified.insert(shape.to_string());
                        }
                    }
                }
            }
        }
        assert_eq!(verified.len(), 4, "{verified:?}");
        let mut dc = zero_grid();
        dc.set_object((1, 0), cyclic(2));
        let err = corner_iso(&dc, (0, 0), Shape::A).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(msg) if msg.contains("not exact")));
    }

    #[test]
    fn three_by_three_on_fixtures() {
        for dc in [c2_c4_grid(), s3_grid(), alternating_grid()] {
            let report = three_by_three(&dc).unwrap();
            assert_eq!(report.definedness.len(), 15);
            assert!(report.first_row_exact() && report.routes_agree(), "{:#?}", report.trace);
        }
        assert!(three_by_three(&DoubleComplex::new(T)).unwrap().first_row_exact());
        let err = three_by_three(&broken_c2_c4_grid()).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(msg) if msg.contains("column 0")));
    }
}
