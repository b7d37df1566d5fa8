//! Finite groups given by Cayley tables.
//!
//! Elements are indices `0..order` with the identity at `0`. Subgroups are
//! bitsets over those indices, which makes equality and hashing canonical.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result, TableViolation};
use crate::lattice::{Backend, BackendTag};

pub mod groups;
mod homs;

pub use homs::{all_homomorphisms, generators};

/// A finite group stored as its full multiplication table.
#[derive(Clone)]
pub struct CayleyGroup(Arc<GroupData>);

struct GroupData {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    fingerprint: u64,
    lattice: OnceLock<Vec<FixedBitSet>>,
}

impl PartialEq for CayleyGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && self.0.fingerprint == other.0.fingerprint
                && self.0.table == other.0.table)
    }
}

impl Eq for CayleyGroup {}

impl Hash for CayleyGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.fingerprint.hash(state);
    }
}

impl fmt::Debug for CayleyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyGroup(order={}, #{:08x})", self.order(), self.0.fingerprint as u32)
    }
}

impl CayleyGroup {
    /// Validates a square table as a group with identity at index 0.
    ///
    /// Checks run in the order: shape, range, identity, associativity,
    /// inverses; the first violated law is reported with its witness.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable(TableViolation::Empty));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(TableViolation::NotSquare { row: r }));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidTable(TableViolation::OutOfRange {
                        row: r,
                        col: c,
                        value: v,
                    }));
                }
            }
        }
        let m = |a: usize, b: usize| rows[a][b];
        let identity = (0..n).find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x));
        match identity {
            None => return Err(Error::InvalidTable(TableViolation::NoIdentity)),
            Some(e) if e != 0 => {
                return Err(Error::InvalidTable(TableViolation::IdentityNotFirst { found: e }))
            }
            Some(_) => {}
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::InvalidTable(TableViolation::NotAssociative { a, b, c }));
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| m(a, b) == 0 && m(b, a) == 0) {
                return Err(Error::InvalidTable(TableViolation::NoInverse { element: a }));
            }
        }
        let flat = rows.iter().flatten().map(|&v| v as u32).collect();
        Ok(Self::from_flat_unchecked(n, flat))
    }

    /// Builds a group from a row-major table already known to be a group
    /// with identity 0.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b as u32;
                    break;
                }
            }
        }
        let mut hasher = DefaultHasher::new();
        order.hash(&mut hasher);
        table.hash(&mut hasher);
        CayleyGroup(Arc::new(GroupData {
            order,
            table,
            inverse,
            fingerprint: hasher.finish(),
            lattice: OnceLock::new(),
        }))
    }

    pub fn trivial() -> Self {
        Self::from_flat_unchecked(1, vec![0])
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverse[a] as usize
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.order())
    }

    /// Closure of `seed ∪ {1}` under the group operation.
    fn closure(&self, seed: &[usize]) -> FixedBitSet {
        let mut set = self.empty_set();
        set.insert(0);
        let mut gens: Vec<usize> = seed.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push_back(y);
                }
            }
        }
        set
    }

    fn wrap(&self, elems: FixedBitSet) -> TableSubgroup {
        TableSubgroup {
            group: self.clone(),
            elems,
        }
    }

    /// Builds the subgroup with exactly the given elements, checking closure.
    pub fn subgroup<I: IntoIterator<Item = usize>>(&self, elements: I) -> Result<TableSubgroup> {
        let mut set = self.empty_set();
        for x in elements {
            if x >= self.order() {
                return Err(Error::Invalid(format!("element {x} out of range")));
            }
            set.insert(x);
        }
        if !set.contains(0) {
            return Err(Error::Invalid("subset does not contain the identity".into()));
        }
        let members: Vec<usize> = set.ones().collect();
        for &a in &members {
            if !set.contains(self.inv(a)) {
                return Err(Error::Invalid(format!("subset not closed under inverse at {a}")));
            }
            for &b in &members {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::Invalid(format!("subset not closed: {a}*{b}")));
                }
            }
        }
        Ok(self.wrap(set))
    }

    pub fn generated_subgroup(&self, seed: &[usize]) -> TableSubgroup {
        self.wrap(self.closure(seed))
    }

    fn lattice(&self) -> &[FixedBitSet] {
        self.0.lattice.get_or_init(|| {
            let n = self.order();
            let mut seen: HashSet<FixedBitSet> = HashSet::new();
            let bottom = self.closure(&[]);
            seen.insert(bottom.clone());
            let mut queue: VecDeque<(FixedBitSet, Vec<usize>)> = VecDeque::from([(bottom, Vec::new())]);
            while let Some((h, gens)) = queue.pop_front() {
                for x in 0..n {
                    if h.contains(x) {
                        continue;
                    }
                    let mut next_gens = gens.clone();
                    next_gens.push(x);
                    let k = self.closure(&next_gens);
                    if seen.insert(k.clone()) {
                        queue.push_back((k, next_gens));
                    }
                }
            }
            let mut all: Vec<FixedBitSet> = seen.into_iter().collect();
            all.sort_by(compare_sets);
            all
        })
    }

    /// Every subgroup, sorted by (size, lexicographic element list).
    pub fn all_subgroups(&self) -> Vec<TableSubgroup> {
        self.lattice().iter().map(|s| self.wrap(s.clone())).collect()
    }

    pub fn normal_closure(&self, s: &TableSubgroup) -> TableSubgroup {
        let n = self.order();
        let mut current = s.elems.clone();
        loop {
            let mut seed: Vec<usize> = Vec::new();
            for x in current.ones() {
                for g in 0..n {
                    seed.push(self.conjugate(g, x));
                }
            }
            let next = self.closure(&seed);
            if next == current {
                return self.wrap(current);
            }
            current = next;
        }
    }

    pub fn is_normal_subgroup(&self, s: &TableSubgroup) -> bool {
        let members: Vec<usize> = s.elems.ones().collect();
        (0..self.order()).all(|g| members.iter().all(|&x| s.elems.contains(self.conjugate(g, x))))
    }

    /// The coset group `G/N` and the canonical surjection. Coset `i` is
    /// represented by its smallest element, and cosets are numbered in order
    /// of their representatives.
    pub fn quotient_group(&self, n: &TableSubgroup) -> Result<(CayleyGroup, TableMorphism)> {
        if n.group != *self {
            return Err(Error::ParentMismatch { op: "quotient_group" });
        }
        if !self.is_normal_subgroup(n) {
            return Err(Error::NotNormal);
        }
        let order = self.order();
        let members: Vec<usize> = n.elems.ones().collect();
        let mut coset_of = vec![u32::MAX; order];
        let mut reps = Vec::new();
        for x in 0..order {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(x);
            for &m in &members {
                coset_of[self.mul(x, m)] = idx;
            }
        }
        let q = reps.len();
        let mut table = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)]);
            }
        }
        let quotient = CayleyGroup::from_flat_unchecked(q, table);
        let projection = TableMorphism {
            source: self.clone(),
            target: quotient.clone(),
            images: coset_of.into(),
        };
        Ok((quotient, projection))
    }

    /// The subgroup as a group in its own right (elements renumbered in
    /// increasing order) together with its inclusion.
    pub fn subgroup_as_group(&self, s: &TableSubgroup) -> (CayleyGroup, TableMorphism) {
        let elems: Vec<usize> = s.elems.ones().collect();
        let mut index = vec![u32::MAX; self.order()];
        for (i, &x) in elems.iter().enumerate() {
            index[x] = i as u32;
        }
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &elems {
            for &b in &elems {
                table.push(index[self.mul(a, b)]);
            }
        }
        let sub = CayleyGroup::from_flat_unchecked(k, table);
        let inclusion = TableMorphism {
            source: sub.clone(),
            target: self.clone(),
            images: elems.iter().map(|&x| x as u32).collect::<Vec<_>>().into(),
        };
        (sub, inclusion)
    }

    /// Renames elements by `perm` (which must fix 0), returning the relabelled
    /// group and the isomorphism `x ↦ perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<(CayleyGroup, TableMorphism)> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.first() != Some(&0) {
            return Err(Error::Invalid("relabelling must be a permutation fixing 0".into()));
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::Invalid("relabelling must be a permutation fixing 0".into()));
            }
            seen[p] = true;
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u32;
            }
        }
        let relabelled = CayleyGroup::from_flat_unchecked(n, table);
        let iso = TableMorphism {
            source: self.clone(),
            target: relabelled.clone(),
            images: perm.iter().map(|&p| p as u32).collect::<Vec<_>>().into(),
        };
        Ok((relabelled, iso))
    }
}

fn compare_sets(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}

/// A subgroup of a [`CayleyGroup`], stored as a membership bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TableSubgroup {
    group: CayleyGroup,
    elems: FixedBitSet,
}

impl fmt::Debug for TableSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements())
    }
}

impl PartialOrd for TableSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TableSubgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_sets(&self.elems, &other.elems)
    }
}

impl TableSubgroup {
    pub fn group(&self) -> &CayleyGroup {
        &self.group
    }

    pub fn elements(&self) -> Vec<usize> {
        self.elems.ones().collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.contains(x)
    }

    pub fn order(&self) -> usize {
        self.elems.count_ones(..)
    }
}

/// A homomorphism given by the image of every element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TableMorphism {
    source: CayleyGroup,
    target: CayleyGroup,
    images: Arc<[u32]>,
}

impl fmt::Debug for TableMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} {:?}", self.source, self.target, self.images)
    }
}

impl TableMorphism {
    /// Validates `images` as a homomorphism; a failure names the witness pair.
    pub fn new(source: &CayleyGroup, target: &CayleyGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::Shape(format!(
                "element map has {} entries, source has order {}",
                images.len(),
                source.order()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.order()) {
            return Err(Error::Shape(format!("image {bad} out of range")));
        }
        let n = source.order();
        for x in 0..n {
            for y in 0..n {
                if images[source.mul(x, y)] != target.mul(images[x], images[y]) {
                    return Err(Error::NotHomomorphism { x, y });
                }
            }
        }
        Ok(TableMorphism {
            source: source.clone(),
            target: target.clone(),
            images: images.into_iter().map(|y| y as u32).collect::<Vec<_>>().into(),
        })
    }

    /// Extends an assignment on generators to a homomorphism.
    pub fn from_generator_images(
        source: &CayleyGroup,
        target: &CayleyGroup,
        assignment: &[(usize, usize)],
    ) -> Result<Self> {
        for &(g, y) in assignment {
            if g >= source.order() || y >= target.order() {
                return Err(Error::Shape(format!("generator assignment {g}={y} out of range")));
            }
        }
        let mut images = vec![usize::MAX; source.order()];
        images[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &(g, y) in assignment {
                let xg = source.mul(x, g);
                let img = target.mul(images[x], y);
                if images[xg] == usize::MAX {
                    images[xg] = img;
                    queue.push_back(xg);
                } else if images[xg] != img {
                    return Err(Error::NotHomomorphism { x, y: g });
                }
            }
        }
        if images.contains(&usize::MAX) {
            return Err(Error::Invalid("generator assignment does not generate the source".into()));
        }
        TableMorphism::new(source, target, images)
    }

    pub(crate) fn new_unchecked(source: &CayleyGroup, target: &CayleyGroup, images: Vec<usize>) -> Self {
        TableMorphism {
            source: source.clone(),
            target: target.clone(),
            images: images.into_iter().map(|y| y as u32).collect::<Vec<_>>().into(),
        }
    }

    pub fn source(&self) -> &CayleyGroup {
        &self.source
    }

    pub fn target(&self) -> &CayleyGroup {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y as usize).collect()
    }
}

/// The table-group realization of [`Backend`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TableBackend;

impl Backend for TableBackend {
    type Object = CayleyGroup;
    type Subgroup = TableSubgroup;
    type Morphism = TableMorphism;

    fn tag(&self) -> BackendTag {
        BackendTag::TableGroup
    }

    fn trivial(&self) -> CayleyGroup {
        CayleyGroup::trivial()
    }

    fn order(&self, obj: &CayleyGroup) -> usize {
        obj.order()
    }

    fn top(&self, obj: &CayleyGroup) -> TableSubgroup {
        let mut set = obj.empty_set();
        set.insert_range(..);
        obj.wrap(set)
    }

    fn bottom(&self, obj: &CayleyGroup) -> TableSubgroup {
        let mut set = obj.empty_set();
        set.insert(0);
        obj.wrap(set)
    }

    fn parent<'a>(&self, s: &'a TableSubgroup) -> &'a CayleyGroup {
        &s.group
    }

    fn subgroup_order(&self, s: &TableSubgroup) -> usize {
        s.order()
    }

    fn is_subset(&self, s: &TableSubgroup, t: &TableSubgroup) -> Result<bool> {
        self.same_parent(s, t, "is_subset")?;
        Ok(s.elems.is_subset(&t.elems))
    }

    fn join(&self, s: &TableSubgroup, t: &TableSubgroup) -> Result<TableSubgroup> {
        self.same_parent(s, t, "join")?;
        if s.elems.is_subset(&t.elems) {
            return Ok(t.clone());
        }
        if t.elems.is_subset(&s.elems) {
            return Ok(s.clone());
        }
        let seed: Vec<usize> = s.elems.ones().chain(t.elems.ones()).collect();
        Ok(s.group.generated_subgroup(&seed))
    }

    fn meet(&self, s: &TableSubgroup, t: &TableSubgroup) -> Result<TableSubgroup> {
        self.same_parent(s, t, "meet")?;
        let mut elems = s.elems.clone();
        elems.intersect_with(&t.elems);
        Ok(s.group.wrap(elems))
    }

    fn all_subgroups(&self, obj: &CayleyGroup) -> Vec<TableSubgroup> {
        obj.all_subgroups()
    }

    fn source<'a>(&self, f: &'a TableMorphism) -> &'a CayleyGroup {
        &f.source
    }

    fn target<'a>(&self, f: &'a TableMorphism) -> &'a CayleyGroup {
        &f.target
    }

    fn identity(&self, obj: &CayleyGroup) -> TableMorphism {
        TableMorphism::new_unchecked(obj, obj, (0..obj.order()).collect())
    }

    fn zero(&self, source: &CayleyGroup, target: &CayleyGroup) -> TableMorphism {
        TableMorphism::new_unchecked(source, target, vec![0; source.order()])
    }

    fn compose(&self, g: &TableMorphism, f: &TableMorphism) -> Result<TableMorphism> {
        if f.target != g.source {
            return Err(Error::NotComposable);
        }
        let images = f.images.iter().map(|&y| g.images[y as usize]).collect::<Vec<_>>();
        Ok(TableMorphism {
            source: f.source.clone(),
            target: g.target.clone(),
            images: images.into(),
        })
    }

    fn direct_image(&self, f: &TableMorphism, s: &TableSubgroup) -> Result<TableSubgroup> {
        if s.group != f.source {
            return Err(Error::ParentMismatch { op: "direct_image" });
        }
        let mut set = f.target.empty_set();
        for x in s.elems.ones() {
            set.insert(f.apply(x));
        }
        Ok(f.target.wrap(set))
    }

    fn inverse_image(&self, f: &TableMorphism, t: &TableSubgroup) -> Result<TableSubgroup> {
        if t.group != f.target {
            return Err(Error::ParentMismatch { op: "inverse_image" });
        }
        let mut set = f.source.empty_set();
        for x in 0..f.source.order() {
            if t.elems.contains(f.apply(x)) {
                set.insert(x);
            }
        }
        Ok(f.source.wrap(set))
    }

    fn is_normal(&self, s: &TableSubgroup) -> bool {
        s.group.is_normal_subgroup(s)
    }

    fn is_conormal(&self, _s: &TableSubgroup) -> bool {
        true
    }

    fn normal_closure(&self, s: &TableSubgroup) -> TableSubgroup {
        s.group.normal_closure(s)
    }

    fn embedding_of(&self, s: &TableSubgroup) -> Result<TableMorphism> {
        Ok(s.group.subgroup_as_group(s).1)
    }

    fn projection_by_normal(&self, s: &TableSubgroup) -> Result<TableMorphism> {
        Ok(s.group.quotient_group(s)?.1)
    }

    fn lift(&self, embedding: &TableMorphism, f: &TableMorphism) -> Result<TableMorphism> {
        if embedding.target != f.target {
            return Err(Error::Endpoint("lift: maps have different targets".into()));
        }
        let mut preimage = vec![usize::MAX; embedding.target.order()];
        for x in 0..embedding.source.order() {
            let y = embedding.apply(x);
            if preimage[y] != usize::MAX {
                return Err(Error::Invalid("lift: map is not an embedding".into()));
            }
            preimage[y] = x;
        }
        let mut images = Vec::with_capacity(f.source.order());
        for x in 0..f.source.order() {
            let y = preimage[f.apply(x)];
            if y == usize::MAX {
                return Err(Error::NoLift);
            }
            images.push(y);
        }
        Ok(TableMorphism::new_unchecked(&f.source, &embedding.source, images))
    }

    fn descend(&self, projection: &TableMorphism, g: &TableMorphism) -> Result<TableMorphism> {
        if projection.source != g.source {
            return Err(Error::Endpoint("descend: maps have different sources".into()));
        }
        let mut section = vec![usize::MAX; projection.target.order()];
        for x in (0..projection.source.order()).rev() {
            section[projection.apply(x)] = x;
        }
        if section.contains(&usize::MAX) {
            return Err(Error::Invalid("descend: map is not a projection".into()));
        }
        let images: Vec<usize> = section.iter().map(|&x| g.apply(x)).collect();
        let v = TableMorphism::new_unchecked(&projection.target, &g.target, images);
        if self.compose(&v, projection)? != *g {
            return Err(Error::NoDescent);
        }
        Ok(v)
    }

    fn is_embedding(&self, f: &TableMorphism) -> bool {
        let mut seen = f.target.empty_set();
        f.images.iter().all(|&y| {
            let fresh = !seen.contains(y as usize);
            seen.insert(y as usize);
            fresh
        })
    }

    fn is_projection(&self, f: &TableMorphism) -> bool {
        let mut seen = f.target.empty_set();
        for &y in f.images.iter() {
            seen.insert(y as usize);
        }
        seen.is_full()
    }

    fn try_inverse(&self, f: &TableMorphism) -> Option<TableMorphism> {
        if f.source.order() != f.target.order() {
            return None;
        }
        let mut inverse = vec![usize::MAX; f.target.order()];
        for x in 0..f.source.order() {
            let y = f.apply(x);
            if inverse[y] != usize::MAX {
                return None;
            }
            inverse[y] = x;
        }
        Some(TableMorphism::new_unchecked(&f.target, &f.source, inverse))
    }

    fn kernel(&self, f: &TableMorphism) -> TableSubgroup {
        let mut set = f.source.empty_set();
        for x in 0..f.source.order() {
            if f.apply(x) == 0 {
                set.insert(x);
            }
        }
        f.source.wrap(set)
    }

    fn is_zero(&self, f: &TableMorphism) -> bool {
        f.images.iter().all(|&y| y == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::groups::{cyclic, symmetric_with_elements};
    use super::*;

    fn s3() -> (CayleyGroup, impl Fn(&[usize]) -> usize) {
        let (g, perms) = symmetric_with_elements(3);
        let lookup = move |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        (g, lookup)
    }

    #[test]
    fn c2_table_is_valid() {
        let g = CayleyGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn s3_table_round_trips() {
        let (g, _) = s3();
        assert_eq!(g.order(), 6);
        let again = CayleyGroup::from_table(&g.rows()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn mutated_s3_reports_non_associative_triple() {
        let (g, _) = s3();
        let mut rows = g.rows();
        // swap two entries of a non-identity row so the row stays a permutation
        let (a, b) = (rows[1][2], rows[1][3]);
        rows[1][2] = b;
        rows[1][3] = a;
        match CayleyGroup::from_table(&rows) {
            Err(Error::InvalidTable(TableViolation::NotAssociative { a, b, c })) => {
                let m = |x: usize, y: usize| rows[x][y];
                assert_ne!(m(m(a, b), c), m(a, m(b, c)));
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn table_validation_errors() {
        assert!(matches!(
            CayleyGroup::from_table(&[vec![0, 1], vec![1]]),
            Err(Error::InvalidTable(TableViolation::NotSquare { row: 1 }))
        ));
        assert!(matches!(
            CayleyGroup::from_table(&[vec![1, 0], vec![0, 1]]),
            Err(Error::InvalidTable(TableViolation::IdentityNotFirst { found: 1 }))
        ));
        assert!(matches!(
            CayleyGroup::from_table(&[vec![0, 1], vec![1, 1]]),
            Err(Error::InvalidTable(TableViolation::NoInverse { element: 1 }))
                | Err(Error::InvalidTable(TableViolation::NotAssociative { .. }))
        ));
        assert!(matches!(
            CayleyGroup::from_table(&[vec![0, 2], vec![1, 0]]),
            Err(Error::InvalidTable(TableViolation::OutOfRange { .. }))
        ));
    }

    #[test]
    fn generated_subgroups_in_s3() {
        let (g, p) = s3();
        let t12 = p(&[1, 0, 2]);
        let t23 = p(&[0, 2, 1]);
        let mut want = vec![0, t12];
        want.sort_unstable();
        assert_eq!(g.generated_subgroup(&[t12]).elements(), want);
        assert_eq!(g.generated_subgroup(&[t12, t23]).order(), 6);
        assert_eq!(g.generated_subgroup(&[]).order(), 1);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(CayleyGroup::trivial().all_subgroups().len(), 1);
        assert_eq!(cyclic(4).all_subgroups().len(), 3);
        let (g, _) = s3();
        let subs = g.all_subgroups();
        assert_eq!(subs.len(), 6);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn normal_closure_and_quotients() {
        let (g, p) = s3();
        let t12 = g.generated_subgroup(&[p(&[1, 0, 2])]);
        assert_eq!(g.normal_closure(&t12).order(), 6);
        let a3 = g.generated_subgroup(&[p(&[1, 2, 0])]);
        assert_eq!(g.normal_closure(&a3), a3);
        let (q, proj) = g.quotient_group(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(TableBackend.kernel(&proj), a3);
        assert!(matches!(g.quotient_group(&t12), Err(Error::NotNormal)));

        let c4 = cyclic(4);
        let two = c4.subgroup([0, 2]).unwrap();
        let (q, proj) = c4.quotient_group(&two).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.images(), vec![0, 1, 0, 1]);
        let (q, _) = c4.quotient_group(&TableBackend.bottom(&c4)).unwrap();
        assert_eq!(q, c4);
    }

    #[test]
    fn conjugation_witness_in_s3() {
        let (g, p) = s3();
        let t12 = p(&[1, 0, 2]);
        let t13 = p(&[2, 1, 0]);
        let t23 = p(&[0, 2, 1]);
        assert_eq!(g.conjugate(t13, t12), t23);
    }

    #[test]
    fn homomorphism_witness() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        assert!(TableMorphism::new(&c4, &c2, vec![0, 1, 0, 1]).is_ok());
        assert!(matches!(
            TableMorphism::new(&c4, &c2, vec![0, 1, 1, 0]),
            Err(Error::NotHomomorphism { .. })
        ));
        let f = TableMorphism::from_generator_images(&c4, &c2, &[(1, 1)]).unwrap();
        assert_eq!(f.images(), vec![0, 1, 0, 1]);
        assert!(TableMorphism::from_generator_images(&c2, &c4, &[(1, 1)]).is_err());
    }
}
