//! Line-oriented text format for double complexes.
//!
//! ```text
//! # C2 -> C4 -> C2 as a single row
//! cyclic-product A 2
//! cyclic-product B 4
//! map inc A B 0 2
//! gens red B A 1=1
//! grid
//!   A B A
//! end
//! horizontal
//!   inc red 0
//! end
//! ```
//!
//! Stanzas may appear in any order; names are declared once. The complete
//! grammar is in `docs/diagram-format.md`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::complex::{AnyComplex, DoubleComplex, Pos};
use crate::error::Error;
use crate::lattice::Backend;
use crate::table::groups::cyclic_product;
use crate::table::{CayleyGroup, TableBackend, TableMorphism};
use crate::vector::{MatrixMorphism, VecBackend, VectorSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramErrorKind {
    Syntax(String),
    Undeclared(String),
    Duplicate(String),
    /// A declared map violates the homomorphism law or its table is not a group.
    Homomorphism(String),
    /// A map's endpoints disagree with the grid, or backends are mixed.
    Type(String),
    ComplexLaw(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct DiagramError {
    pub line: usize,
    pub kind: DiagramErrorKind,
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (label, msg) = match &self.kind {
            DiagramErrorKind::Syntax(m) => ("syntax error", m),
            DiagramErrorKind::Undeclared(m) => ("undeclared name", m),
            DiagramErrorKind::Duplicate(m) => ("duplicate declaration", m),
            DiagramErrorKind::Homomorphism(m) => ("not a homomorphism", m),
            DiagramErrorKind::Type(m) => ("type error", m),
            DiagramErrorKind::ComplexLaw(m) => ("complex law violated", m),
        };
        write!(f, "line {}: {label}: {msg}", self.line)
    }
}

fn err<T>(line: usize, kind: DiagramErrorKind) -> Result<T, DiagramError> {
    Err(DiagramError { line, kind })
}

fn syntax<T>(line: usize, msg: impl Into<String>) -> Result<T, DiagramError> {
    err(line, DiagramErrorKind::Syntax(msg.into()))
}

#[derive(Debug, Clone)]
enum ObjectDecl {
    Table(CayleyGroup),
    Space(usize),
}

#[derive(Debug, Clone)]
enum Rule {
    Elements(Vec<usize>),
    Generators(Vec<(usize, usize)>),
    Matrix(Vec<Vec<u32>>),
}

#[derive(Debug, Clone)]
struct MapDecl {
    line: usize,
    source: String,
    target: String,
    rule: Rule,
}

/// A grid-shaped stanza: each row with its line number.
type Rows = Vec<(usize, Vec<String>)>;

#[derive(Debug, Default)]
struct Document {
    field: Option<(usize, u32)>,
    objects: BTreeMap<String, (usize, ObjectDecl)>,
    maps: BTreeMap<String, MapDecl>,
    grid: Option<(usize, Rows)>,
    horizontal: Option<(usize, Rows)>,
    vertical: Option<(usize, Rows)>,
    origin: Option<(usize, Pos)>,
}

fn is_name(token: &str) -> bool {
    token.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
}

fn number<T: std::str::FromStr>(line: usize, token: &str) -> Result<T, DiagramError> {
    token.parse().or_else(|_| syntax(line, format!("expected a number, found `{token}`")))
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, raw) in self.inner.by_ref() {
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }
}

/// Collects the rows up to the closing `end`.
fn block(lines: &mut Lines<'_>, opened: usize, stanza: &str) -> Result<Rows, DiagramError> {
    let mut rows = Vec::new();
    for (line, tokens) in lines.by_ref() {
        if tokens == ["end"] {
            return Ok(rows);
        }
        rows.push((line, tokens.iter().map(|t| t.to_string()).collect()));
    }
    syntax(opened, format!("`{stanza}` block is never closed with `end`"))
}

impl Document {
    fn declare_name(&self, line: usize, name: &str) -> Result<(), DiagramError> {
        if !is_name(name) {
            return syntax(line, format!("`{name}` is not a valid name"));
        }
        if self.objects.contains_key(name) || self.maps.contains_key(name) {
            return err(line, DiagramErrorKind::Duplicate(format!("`{name}` is already declared")));
        }
        Ok(())
    }

    fn read(text: &str) -> Result<Self, DiagramError> {
        let mut doc = Document::default();
        let mut lines = Lines {
            inner: text.lines().enumerate(),
        };
        while let Some((line, tokens)) = lines.next() {
            match tokens[0] {
                "field" => {
                    let [_, p] = tokens[..] else { return syntax(line, "expected `field P`") };
                    if doc.field.is_some() {
                        return err(line, DiagramErrorKind::Duplicate("second `field` line".into()));
                    }
                    doc.field = Some((line, number(line, p)?));
                }
                "table" => {
                    let [_, name] = tokens[..] else { return syntax(line, "expected `table NAME`") };
                    doc.declare_name(line, name)?;
                    let rows = block(&mut lines, line, "table")?;
                    let parsed = rows
                        .iter()
                        .map(|(l, row)| row.iter().map(|t| number::<usize>(*l, t)).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()?;
                    let group = CayleyGroup::from_table(&parsed).or_else(|e| {
                        err(line, DiagramErrorKind::Homomorphism(format!("table `{name}` is not a group: {e}")))
                    })?;
                    doc.objects.insert(name.into(), (line, ObjectDecl::Table(group)));
                }
                "cyclic-product" => {
                    if tokens.len() < 3 {
                        return syntax(line, "expected `cyclic-product NAME N...`");
                    }
                    let name = tokens[1];
                    doc.declare_name(line, name)?;
                    let moduli = tokens[2..].iter().map(|t| number::<usize>(line, t)).collect::<Result<Vec<_>, _>>()?;
                    if moduli.contains(&0) || moduli.iter().product::<usize>() > 4096 {
                        return syntax(line, "cyclic factors must be positive with product at most 4096");
                    }
                    doc.objects.insert(name.into(), (line, ObjectDecl::Table(cyclic_product(&moduli))));
                }
                "vecspace" => {
                    let [_, name, dim] = tokens[..] else { return syntax(line, "expected `vecspace NAME DIM`") };
                    doc.declare_name(line, name)?;
                    doc.objects.insert(name.into(), (line, ObjectDecl::Space(number(line, dim)?)));
                }
                "map" | "gens" | "matrix" => {
                    if tokens.len() < 4 {
                        return syntax(line, format!("expected `{} NAME SOURCE TARGET ...`", tokens[0]));
                    }
                    let name = tokens[1];
                    doc.declare_name(line, name)?;
                    let args = &tokens[4..];
                    let rule = match tokens[0] {
                        "map" => Rule::Elements(args.iter().map(|t| number(line, t)).collect::<Result<_, _>>()?),
                        "gens" => Rule::Generators(
                            args.iter()
                                .map(|t| match t.split_once('=') {
                                    Some((g, y)) => Ok((number(line, g)?, number(line, y)?)),
                                    None => syntax(line, format!("expected GEN=IMAGE, found `{t}`")),
                                })
                                .collect::<Result<_, _>>()?,
                        ),
                        _ => {
                            if !args.is_empty() {
                                return syntax(line, "matrix entries go on the following lines");
                            }
                            let rows = block(&mut lines, line, "matrix")?;
                            Rule::Matrix(
                                rows.iter()
                                    .map(|(l, row)| row.iter().map(|t| number(*l, t)).collect::<Result<Vec<_>, _>>())
                                    .collect::<Result<_, _>>()?,
                            )
                        }
                    };
                    doc.maps.insert(
                        name.into(),
                        MapDecl {
                            line,
                            source: tokens[2].into(),
                            target: tokens[3].into(),
                            rule,
                        },
                    );
                }
                stanza @ ("grid" | "horizontal" | "vertical") => {
                    if tokens.len() != 1 {
                        return syntax(line, format!("`{stanza}` takes no arguments"));
                    }
                    let rows = block(&mut lines, line, stanza)?;
                    let slot = match stanza {
                        "grid" => &mut doc.grid,
                        "horizontal" => &mut doc.horizontal,
                        _ => &mut doc.vertical,
                    };
                    if slot.is_some() {
                        return err(line, DiagramErrorKind::Duplicate(format!("second `{stanza}` block")));
                    }
                    *slot = Some((line, rows));
                }
                "origin" => {
                    let [_, r, c] = tokens[..] else { return syntax(line, "expected `origin ROW COL`") };
                    doc.origin = Some((line, (number(line, r)?, number(line, c)?)));
                }
                "end" => return syntax(line, "`end` without an open block"),
                other => return syntax(line, format!("unknown stanza `{other}`")),
            }
        }
        Ok(doc)
    }

    fn uses_vectors(&self) -> Result<bool, DiagramError> {
        let mut table = None;
        let mut space = None;
        for (line, decl) in self.objects.values() {
            match decl {
                ObjectDecl::Table(_) => table = table.or(Some(*line)),
                ObjectDecl::Space(_) => space = space.or(Some(*line)),
            }
        }
        match (table, space) {
            (Some(a), Some(b)) => err(
                a.max(b),
                DiagramErrorKind::Type("a diagram uses either groups or vector spaces, not both".into()),
            ),
            (None, Some(line)) if self.field.is_none() => syntax(line, "vector spaces need a `field P` line"),
            (_, Some(_)) => Ok(true),
            _ => Ok(false),
        }
    }
}

/// What a backend needs to turn declarations into values.
trait Build: Backend {
    fn object(&self, decl: &ObjectDecl, line: usize) -> Result<Self::Object, DiagramError>;
    fn morphism(&self, name: &str, decl: &MapDecl, source: &Self::Object, target: &Self::Object) -> Result<Self::Morphism, DiagramError>;
}

fn hom_error(name: &str, line: usize, e: Error) -> DiagramError {
    let msg = match e {
        Error::NotHomomorphism { x, y } => {
            format!("`{name}` breaks the homomorphism law at the pair ({x}, {y})")
        }
        other => format!("`{name}`: {other}"),
    };
    DiagramError {
        line,
        kind: DiagramErrorKind::Homomorphism(msg),
    }
}

impl Build for TableBackend {
    fn object(&self, decl: &ObjectDecl, line: usize) -> Result<CayleyGroup, DiagramError> {
        match decl {
            ObjectDecl::Table(g) => Ok(g.clone()),
            ObjectDecl::Space(_) => err(line, DiagramErrorKind::Type("expected a group".into())),
        }
    }

    fn morphism(&self, name: &str, decl: &MapDecl, source: &CayleyGroup, target: &CayleyGroup) -> Result<TableMorphism, DiagramError> {
        let made = match &decl.rule {
            Rule::Elements(images) => {
                if images.len() != source.order() {
                    return err(
                        decl.line,
                        DiagramErrorKind::Type(format!(
                            "`{name}` lists {} images for a source of order {}",
                            images.len(),
                            source.order()
                        )),
                    );
                }
                if let Some(&bad) = images.iter().find(|&&y| y >= target.order()) {
                    return err(decl.line, DiagramErrorKind::Type(format!("`{name}`: image {bad} is out of range")));
                }
                TableMorphism::new(source, target, images.clone())
            }
            Rule::Generators(assignment) => TableMorphism::from_generator_images(source, target, assignment),
            Rule::Matrix(_) => {
                return err(decl.line, DiagramErrorKind::Type(format!("`{name}`: matrices need vector spaces")))
            }
        };
        made.map_err(|e| hom_error(name, decl.line, e))
    }
}

impl Build for VecBackend {
    fn object(&self, decl: &ObjectDecl, line: usize) -> Result<VectorSpace, DiagramError> {
        match decl {
            ObjectDecl::Space(dim) => Ok(self.space(*dim)),
            ObjectDecl::Table(_) => err(line, DiagramErrorKind::Type("expected a vector space".into())),
        }
    }

    fn morphism(&self, name: &str, decl: &MapDecl, source: &VectorSpace, target: &VectorSpace) -> Result<MatrixMorphism, DiagramError> {
        let Rule::Matrix(rows) = &decl.rule else {
            return err(decl.line, DiagramErrorKind::Type(format!("`{name}`: linear maps are given as matrices")));
        };
        let expected = if source.dim() == 0 { 0 } else { target.dim() };
        if rows.len() != expected || rows.iter().any(|r| r.len() != source.dim()) {
            return err(
                decl.line,
                DiagramErrorKind::Type(format!(
                    "`{name}` must be a {} x {} matrix (rows = target dimension)",
                    target.dim(),
                    source.dim()
                )),
            );
        }
        let rows = if source.dim() == 0 { vec![Vec::new(); target.dim()] } else { rows.clone() };
        MatrixMorphism::new(*source, *target, &rows).map_err(|e| hom_error(name, decl.line, e))
    }
}

fn assemble<B: Build>(doc: &Document, backend: B) -> Result<DoubleComplex<B>, DiagramError> {
    let mut objects = BTreeMap::new();
    for (name, (line, decl)) in &doc.objects {
        objects.insert(name.as_str(), backend.object(decl, *line)?);
    }
    let mut maps = BTreeMap::new();
    for (name, decl) in &doc.maps {
        let lookup = |n: &str| {
            objects.get(n).cloned().ok_or_else(|| DiagramError {
                line: decl.line,
                kind: DiagramErrorKind::Undeclared(format!("`{n}` in the declaration of `{name}`")),
            })
        };
        let (s, t) = (lookup(&decl.source)?, lookup(&decl.target)?);
        maps.insert(name.as_str(), backend.morphism(name, decl, &s, &t)?);
    }

    let origin = doc.origin.map_or((0, 0), |(_, p)| p);
    let mut dc = DoubleComplex::new(backend);
    let empty = Vec::new();
    let grid = doc.grid.as_ref().map_or(&empty, |(_, rows)| rows);
    let cell = |r: usize, c: usize| grid.get(r).and_then(|(_, row)| row.get(c)).map_or(".", String::as_str);
    for (r, (line, row)) in grid.iter().enumerate() {
        for (c, name) in row.iter().enumerate() {
            if name == "." {
                continue;
            }
            let obj = objects.get(name.as_str()).ok_or_else(|| DiagramError {
                line: *line,
                kind: DiagramErrorKind::Undeclared(format!("object `{name}` in the grid")),
            })?;
            dc.set_object((origin.0 + r as i32, origin.1 + c as i32), obj.clone());
        }
    }
    for (stanza, block, vertical) in [("horizontal", &doc.horizontal, false), ("vertical", &doc.vertical, true)] {
        let Some((opened, rows)) = block else { continue };
        if rows.len() > grid.len() {
            return err(*opened, DiagramErrorKind::Type(format!("`{stanza}` has more rows than the grid")));
        }
        for (r, (line, row)) in rows.iter().enumerate() {
            if row.len() > grid[r].1.len() {
                return err(*line, DiagramErrorKind::Type(format!("`{stanza}` row is longer than the grid row")));
            }
            for (c, name) in row.iter().enumerate() {
                if name == "0" {
                    continue;
                }
                let m = maps.get(name.as_str()).ok_or_else(|| DiagramError {
                    line: *line,
                    kind: DiagramErrorKind::Undeclared(format!("map `{name}` in `{stanza}`")),
                })?;
                let decl = &doc.maps[name];
                let (tr, tc) = if vertical { (r + 1, c) } else { (r, c + 1) };
                let (from, to) = (cell(r, c), cell(tr, tc));
                if decl.source != from || decl.target != to {
                    return err(
                        *line,
                        DiagramErrorKind::Type(format!(
                            "`{name}` goes {} -> {} but sits between {from} and {to}",
                            decl.source, decl.target
                        )),
                    );
                }
                let pos = (origin.0 + r as i32, origin.1 + c as i32);
                let placed = if vertical { dc.set_vertical(pos, m.clone()) } else { dc.set_horizontal(pos, m.clone()) };
                placed.map_err(|e| DiagramError {
                    line: *line,
                    kind: DiagramErrorKind::Type(e.to_string()),
                })?;
            }
        }
    }
    Ok(dc)
}

/// Reads a diagram without checking the complex laws; the homomorphism law
/// and all name and type checks still apply.
pub fn parse_unchecked(text: &str) -> Result<AnyComplex, DiagramError> {
    let doc = Document::read(text)?;
    if doc.uses_vectors()? {
        let (line, p) = doc.field.expect("checked by uses_vectors");
        let backend = VecBackend::new(p).or_else(|e| syntax(line, e.to_string()))?;
        Ok(AnyComplex::Vector(assemble(&doc, backend)?))
    } else {
        if let Some((line, _)) = doc.field {
            if !doc.objects.is_empty() {
                return err(line, DiagramErrorKind::Type("`field` given but no vector spaces declared".into()));
            }
        }
        Ok(AnyComplex::Table(assemble(&doc, TableBackend)?))
    }
}

/// Reads a diagram and checks that it is a double complex.
pub fn parse(text: &str) -> Result<AnyComplex, DiagramError> {
    let dc = parse_unchecked(text)?;
    let report = dc.validate().map_err(|e| DiagramError {
        line: 0,
        kind: DiagramErrorKind::Type(e.to_string()),
    })?;
    if let Some(v) = report.violations.first() {
        let doc = Document::read(text)?;
        let origin = doc.origin.map_or((0, 0), |(_, p)| p);
        let line = doc
            .grid
            .as_ref()
            .and_then(|(opened, rows)| {
                let r = usize::try_from(v.pos.0 - origin.0).ok()?;
                Some(rows.get(r).map_or(*opened, |(l, _)| *l))
            })
            .unwrap_or(0);
        return err(line, DiagramErrorKind::ComplexLaw(format!("{} at {:?}", v.kind, v.pos)));
    }
    Ok(dc)
}

/// Writes a complex in the diagram format; [`parse`] reads it back to an
/// equal complex.
pub fn serialize(any: &AnyComplex) -> String {
    match any {
        AnyComplex::Table(dc) => write_complex(dc, None, |out, name, g: &CayleyGroup| {
            let _ = writeln!(out, "table {name}");
            for row in g.rows() {
                let _ = writeln!(out, "  {}", join(row.iter()));
            }
            let _ = writeln!(out, "end");
        }, |out, name, src, tgt, m: &TableMorphism| {
            let _ = writeln!(out, "map {name} {src} {tgt} {}", join(m.images().iter()));
        }),
        AnyComplex::Vector(dc) => write_complex(dc, Some(dc.backend().prime()), |out, name, v: &VectorSpace| {
            let _ = writeln!(out, "vecspace {name} {}", v.dim());
        }, |out, name, src, tgt, m: &MatrixMorphism| {
            let _ = writeln!(out, "matrix {name} {src} {tgt}");
            for row in m.entries() {
                let _ = writeln!(out, "  {}", join(row.iter()));
            }
            let _ = writeln!(out, "end");
        }),
    }
}

fn join<T: fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_complex<B: Backend>(
    dc: &DoubleComplex<B>,
    field: Option<u32>,
    object: impl Fn(&mut String, &str, &B::Object),
    morphism: impl Fn(&mut String, &str, &str, &str, &B::Morphism),
) -> String {
    let mut out = String::new();
    if let Some(p) = field {
        let _ = writeln!(out, "field {p}");
    }
    let Some((lo, hi)) = dc.bounds() else { return out };
    let b = dc.backend();
    let mut names: Vec<(B::Object, String)> = Vec::new();
    let mut name_of = |obj: B::Object, out: &mut String| -> String {
        if b.is_trivial_object(&obj) {
            return ".".into();
        }
        if let Some((_, n)) = names.iter().find(|(o, _)| *o == obj) {
            return n.clone();
        }
        let n = format!("X{}", names.len());
        object(out, &n, &obj);
        names.push((obj, n.clone()));
        n
    };
    let rows: Vec<i32> = (lo.0..=hi.0).collect();
    let cols: Vec<i32> = (lo.1..=hi.1).collect();
    let mut grid = Vec::new();
    for &r in &rows {
        grid.push(cols.iter().map(|&c| name_of(dc.object((r, c)), &mut out)).collect::<Vec<_>>());
    }
    let mut blocks = [String::new(), String::new()];
    for (k, vertical) in [false, true].into_iter().enumerate() {
        for (i, &r) in rows.iter().enumerate() {
            let mut entries = Vec::new();
            for (j, &c) in cols.iter().enumerate() {
                let m = if vertical { dc.vertical((r, c)) } else { dc.horizontal((r, c)) };
                if b.is_zero(&m) {
                    entries.push("0".to_string());
                    continue;
                }
                let (ti, tj) = if vertical { (i + 1, j) } else { (i, j + 1) };
                let n = format!("{}{}_{}", if vertical { "v" } else { "h" }, i, j);
                morphism(&mut out, &n, &grid[i][j], &grid[ti][tj], &m);
                entries.push(n);
            }
            let _ = writeln!(blocks[k], "  {}", entries.join(" "));
        }
    }
    let _ = writeln!(out, "origin {} {}", lo.0, lo.1);
    let _ = writeln!(out, "grid");
    for row in &grid {
        let _ = writeln!(out, "  {}", row.join(" "));
    }
    let _ = writeln!(out, "end");
    let _ = writeln!(out, "horizontal\n{}end", blocks[0]);
    let _ = writeln!(out, "vertical\n{}end", blocks[1]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{c2_c4_grid, s3_grid};
    use crate::fuzz::{fuzz_any, BackendChoice, FuzzParams};

    const ROW: &str = "
        cyclic-product A 2
        cyclic-product B 4
        map inc A B 0 2
        gens red B A 1=1
        grid
          A B A
        end
        horizontal
          inc red 0
        end
    ";

    #[test]
    fn parses_a_row() {
        let AnyComplex::Table(dc) = parse(ROW).unwrap() else { panic!("table backend expected") };
        assert_eq!(dc.support(), vec![(0, 0), (0, 1), (0, 2)]);
        assert!(dc.is_row_exact_at((0, 1)));
    }

    #[test]
    fn empty_file_is_the_empty_complex() {
        let AnyComplex::Table(dc) = parse("# nothing\n").unwrap() else { panic!() };
        assert!(dc.is_empty());
    }

    #[test]
    fn errors_carry_kind_and_line() {
        let bad_hom = ROW.replace("map inc A B 0 2", "map inc A B 0 1");
        let e = parse(&bad_hom).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(matches!(&e.kind, DiagramErrorKind::Homomorphism(m) if m.contains("(1, 1)")), "{e}");

        let e = parse(&ROW.replace("inc red 0", "inc rd 0")).unwrap_err();
        assert!(matches!(e.kind, DiagramErrorKind::Undeclared(_)));
        assert_eq!(e.line, 10);

        let e = parse(&ROW.replace("gens red B A", "gens inc B A")).unwrap_err();
        assert!(matches!(e.kind, DiagramErrorKind::Duplicate(_)));

        let e = parse(&ROW.replace("inc red 0", "red inc 0")).unwrap_err();
        assert!(matches!(e.kind, DiagramErrorKind::Type(_)));

        let e = parse(&ROW.replace("grid", "gird")).unwrap_err();
        assert!(matches!(e.kind, DiagramErrorKind::Syntax(_)));
        assert_eq!(e.line, 6);

        let law = ROW.replace("gens red B A 1=1", "gens red B B 1=1").replace("A B A", "A B B");
        let e = parse(&law).unwrap_err();
        assert!(matches!(e.kind, DiagramErrorKind::ComplexLaw(_)), "{e}");
        assert!(parse_unchecked(&law).is_ok());
    }

    #[test]
    fn mixed_backends_are_rejected() {
        let text = "field 2\nvecspace V 1\ncyclic-product A 2\n";
        assert!(matches!(parse(text).unwrap_err().kind, DiagramErrorKind::Type(_)));
    }

    #[test]
    fn serialization_round_trips() {
        let mut corpus = vec![AnyComplex::Table(c2_c4_grid()), AnyComplex::Table(s3_grid())];
        corpus.extend((0..20).map(|i| fuzz_any(BackendChoice::Mixed, 8, i, FuzzParams::default())));
        for any in corpus {
            let text = serialize(&any);
            let back = parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
            assert_eq!(back, any, "{text}");
        }
    }
}
