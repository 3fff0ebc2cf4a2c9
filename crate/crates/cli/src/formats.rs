//! TOML file formats for groups, homomorphisms and representations.
//!
//! Paths inside a file are resolved relative to the directory of that file.
//! Every file is loaded at most once per [`Loader`], so two files naming the
//! same group file share one group handle.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Deserialize;
use toml::Spanned;

use indres::groups::{
    group_from_cayley, group_from_permutations, parse_cycles, FiniteGroup, GroupHom, GroupRef,
};
use indres::linalg::{Field, Matrix};
use indres::rep::Representation;

use crate::error::{location, CliError};

/// A group file together with what the other formats need to refer to its elements.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub path: PathBuf,
    pub group: GroupRef,
    /// `action[g]`: the permutation of element `g` (the regular action for Cayley-table groups).
    pub action: Vec<Vec<usize>>,
    pub is_permutation: bool,
}

impl LoadedGroup {
    fn element(&self, e: &ElementRef) -> Result<usize, String> {
        match e {
            ElementRef::Index(i) if *i < self.group.order() => Ok(*i),
            ElementRef::Index(i) => Err(format!(
                "element {i} outside a group of order {}",
                self.group.order()
            )),
            ElementRef::Cycles(s) => {
                if !self.is_permutation {
                    return Err(format!(
                        "cycle literal {s:?} for a group given by its table"
                    ));
                }
                let p = parse_cycles(s, self.action[0].len()).map_err(|e| e.to_string())?;
                self.action
                    .iter()
                    .position(|q| *q == p)
                    .ok_or_else(|| format!("{s} is not an element of the group"))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct LoadedHom {
    pub path: PathBuf,
    pub source: Arc<LoadedGroup>,
    pub target: Arc<LoadedGroup>,
    pub hom: GroupHom,
}

#[derive(Clone, Debug)]
pub struct LoadedRep {
    pub path: PathBuf,
    pub group: Arc<LoadedGroup>,
    pub rep: Representation,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ElementRef {
    Index(usize),
    Cycles(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarLit {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    kind: Spanned<String>,
    degree: Option<Spanned<usize>>,
    generators: Option<Spanned<Vec<toml::Value>>>,
    table: Option<Spanned<Vec<Vec<usize>>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HomFile {
    source: Spanned<String>,
    target: Spanned<String>,
    map: Option<Spanned<Vec<ElementRef>>>,
    gens: Option<Spanned<Vec<ElementRef>>>,
    images: Option<Spanned<Vec<ElementRef>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFile {
    group: Spanned<String>,
    field: Spanned<String>,
    dim: Spanned<usize>,
    matrices: Option<Spanned<Vec<Vec<Vec<ScalarLit>>>>>,
    generator_matrices: Option<Spanned<Vec<Vec<Vec<ScalarLit>>>>>,
}

/// Reads and parses a TOML document, reporting syntax and schema errors with line and column.
pub(crate) fn read_toml<T: for<'de> Deserialize<'de>>(
    path: &Path,
) -> Result<(T, String), CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    match toml::from_str::<T>(&text) {
        Ok(v) => Ok((v, text)),
        Err(e) => Err(located(path, &text, e.span(), e.message().to_string())),
    }
}

pub(crate) fn located(
    path: &Path,
    text: &str,
    span: Option<Range<usize>>,
    message: String,
) -> CliError {
    let (line, column) = location(text, span.map_or(0, |s| s.start));
    CliError::Parse {
        path: path.to_path_buf(),
        line,
        column,
        message,
    }
}

struct Doc<'a> {
    path: &'a Path,
    text: &'a str,
}

impl Doc<'_> {
    fn err<T>(&self, span: Range<usize>, message: impl Into<String>) -> Result<T, CliError> {
        Err(located(self.path, self.text, Some(span), message.into()))
    }

    fn resolve(&self, relative: &str) -> PathBuf {
        self.path.parent().unwrap_or(Path::new("")).join(relative)
    }
}

/// Loads files, caching each group by canonical path.
#[derive(Default)]
pub struct Loader {
    groups: HashMap<PathBuf, Arc<LoadedGroup>>,
}

fn canonical(path: &Path) -> Result<PathBuf, CliError> {
    fs::canonicalize(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

impl Loader {
    pub fn new() -> Loader {
        Loader::default()
    }

    pub fn group(&mut self, path: &Path) -> Result<Arc<LoadedGroup>, CliError> {
        let key = canonical(path)?;
        if let Some(g) = self.groups.get(&key) {
            return Ok(g.clone());
        }
        let loaded = Arc::new(parse_group(&key)?);
        self.groups.insert(key, loaded.clone());
        Ok(loaded)
    }

    pub fn hom(&mut self, path: &Path) -> Result<LoadedHom, CliError> {
        let path = canonical(path)?;
        let (file, text): (HomFile, String) = read_toml(&path)?;
        let doc = Doc {
            path: &path,
            text: &text,
        };
        let source = self.referenced_group(&doc, &file.source)?;
        let target = self.referenced_group(&doc, &file.target)?;
        let elements =
            |list: &Spanned<Vec<ElementRef>>, g: &LoadedGroup| -> Result<Vec<usize>, CliError> {
                list.get_ref()
                    .iter()
                    .map(|e| g.element(e))
                    .collect::<Result<_, _>>()
                    .or_else(|m| doc.err(list.span(), m))
            };
        let hom = match (&file.map, &file.gens, &file.images) {
            (Some(map), None, None) => {
                let m = elements(map, &target)?;
                GroupHom::from_map(source.group.clone(), target.group.clone(), m)
                    .or_else(|e| doc.err(map.span(), e.to_string()))?
            }
            (None, Some(gens), Some(images)) => {
                let g = elements(gens, &source)?;
                let i = elements(images, &target)?;
                GroupHom::from_generator_images(source.group.clone(), target.group.clone(), &g, &i)
                    .or_else(|e| doc.err(images.span(), e.to_string()))?
            }
            _ => {
                return doc.err(
                    0..0,
                    "a hom file needs either `map` or both `gens` and `images`",
                )
            }
        };
        Ok(LoadedHom {
            path: path.clone(),
            source,
            target,
            hom,
        })
    }

    pub fn rep(&mut self, path: &Path) -> Result<LoadedRep, CliError> {
        let path = canonical(path)?;
        let (file, text): (RepFile, String) = read_toml(&path)?;
        let doc = Doc {
            path: &path,
            text: &text,
        };
        let group = self.referenced_group(&doc, &file.group)?;
        let field: Field = file
            .field
            .get_ref()
            .parse()
            .or_else(|e: indres::Error| doc.err(file.field.span(), e.to_string()))?;
        let dim = *file.dim.get_ref();
        let g = group.group.clone();
        let rep = match (&file.matrices, &file.generator_matrices) {
            (Some(ms), None) => {
                let matrices = parse_matrices(&doc, ms, field, dim)?;
                Representation::new(g, field, dim, matrices)
                    .or_else(|e| doc.err(ms.span(), e.to_string()))?
            }
            (None, Some(ms)) => {
                let matrices = parse_matrices(&doc, ms, field, dim)?;
                let gens = g.generators().to_vec();
                Representation::from_generator_matrices(g, field, dim, &gens, matrices)
                    .or_else(|e| doc.err(ms.span(), e.to_string()))?
            }
            _ => {
                return doc.err(
                    0..0,
                    "a rep file needs exactly one of `matrices` and `generator_matrices`",
                )
            }
        };
        Ok(LoadedRep {
            path: path.clone(),
            group,
            rep,
        })
    }

    fn referenced_group(
        &mut self,
        doc: &Doc,
        name: &Spanned<String>,
    ) -> Result<Arc<LoadedGroup>, CliError> {
        let target = doc.resolve(name.get_ref());
        if !target.exists() {
            return doc.err(
                name.span(),
                format!("group file {} not found", target.display()),
            );
        }
        self.group(&target)
    }
}

fn parse_group(path: &Path) -> Result<LoadedGroup, CliError> {
    let (file, text): (GroupFile, String) = read_toml(path)?;
    let doc = Doc { path, text: &text };
    match file.kind.get_ref().as_str() {
        "permutation" => {
            let Some(degree) = &file.degree else {
                return doc.err(file.kind.span(), "a permutation group needs `degree`");
            };
            let Some(gens) = &file.generators else {
                return doc.err(file.kind.span(), "a permutation group needs `generators`");
            };
            if file.table.is_some() {
                return doc.err(file.kind.span(), "`table` belongs to kind \"cayley\"");
            }
            let mut perms = Vec::new();
            for g in gens.get_ref() {
                let Some(s) = g.as_str() else {
                    return doc.err(
                        gens.span(),
                        "permutation generators are cycle strings such as \"(0 1)(2 3)\"",
                    );
                };
                perms.push(
                    parse_cycles(s, *degree.get_ref())
                        .or_else(|e| doc.err(gens.span(), e.to_string()))?,
                );
            }
            let (group, action) = group_from_permutations(*degree.get_ref(), &perms)
                .or_else(|e| doc.err(gens.span(), e.to_string()))?;
            Ok(LoadedGroup {
                path: path.to_path_buf(),
                group,
                action,
                is_permutation: true,
            })
        }
        "cayley" => {
            let Some(table) = &file.table else {
                return doc.err(file.kind.span(), "a cayley group needs `table`");
            };
            if file.degree.is_some() {
                return doc.err(file.kind.span(), "`degree` belongs to kind \"permutation\"");
            }
            let mut group = group_from_cayley(table.get_ref())
                .or_else(|e| doc.err(table.span(), e.to_string()))?;
            if let Some(gens) = &file.generators {
                let mut list = Vec::new();
                for g in gens.get_ref() {
                    match g.as_integer() {
                        Some(i) if i >= 0 => list.push(i as usize),
                        _ => return doc.err(gens.span(), "cayley generators are element indices"),
                    }
                }
                let mut g: FiniteGroup = (*group).clone();
                g.set_generators(list)
                    .or_else(|e| doc.err(gens.span(), e.to_string()))?;
                group = Arc::new(g);
            }
            let action = group.cayley_table();
            Ok(LoadedGroup {
                path: path.to_path_buf(),
                group,
                action,
                is_permutation: false,
            })
        }
        other => doc.err(
            file.kind.span(),
            format!("unknown group kind {other:?}; expected \"cayley\" or \"permutation\""),
        ),
    }
}

fn parse_matrices(
    doc: &Doc,
    list: &Spanned<Vec<Vec<Vec<ScalarLit>>>>,
    field: Field,
    dim: usize,
) -> Result<Vec<Matrix>, CliError> {
    let mut out = Vec::with_capacity(list.get_ref().len());
    for (k, m) in list.get_ref().iter().enumerate() {
        if m.len() != dim || m.iter().any(|row| row.len() != dim) {
            return doc.err(list.span(), format!("matrix {k} is not {dim}x{dim}"));
        }
        let mut rows = Vec::with_capacity(dim);
        for row in m {
            let mut entries = Vec::with_capacity(dim);
            for x in row {
                let s = match x {
                    ScalarLit::Int(i) => field.from_i64(*i),
                    ScalarLit::Text(t) => field
                        .parse_scalar(t)
                        .or_else(|e| doc.err(list.span(), format!("matrix {k}: {e}")))?,
                };
                entries.push(s);
            }
            rows.push(entries);
        }
        out.push(Matrix::from_rows(field, rows).or_else(|e| doc.err(list.span(), e.to_string()))?);
    }
    Ok(out)
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

/// A matrix as an inline TOML array of rows; entries are scalar literal strings.
fn matrix_literal(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let entries: Vec<String> = m.row(r).iter().map(|x| quote(&x.to_string())).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// A representation file listing the matrix of every element.
pub fn write_rep(rep: &Representation, group_path: &Path, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "group = {}", quote(&group_path.to_string_lossy()));
    let _ = writeln!(out, "field = {}", quote(&rep.field().to_string()));
    let _ = writeln!(out, "dim = {}", rep.dim());
    let _ = writeln!(out, "matrices = [");
    for (g, m) in rep.matrices().iter().enumerate() {
        let _ = writeln!(out, "  {}, # element {g}", matrix_literal(m));
    }
    let _ = writeln!(out, "]");
    out
}

pub fn write_permutation_group(degree: usize, generators: &[String]) -> String {
    let gens: Vec<String> = generators.iter().map(|g| quote(g)).collect();
    format!(
        "kind = \"permutation\"\ndegree = {degree}\ngenerators = [{}]\n",
        gens.join(", ")
    )
}

pub fn write_cayley_group(group: &FiniteGroup) -> String {
    let rows: Vec<String> = group
        .cayley_table()
        .iter()
        .map(|row| format!("  {:?},", row))
        .collect();
    format!(
        "kind = \"cayley\"\ngenerators = {:?}\ntable = [\n{}\n]\n",
        group.generators(),
        rows.join("\n")
    )
}

pub fn write_hom(source: &str, target: &str, hom: &GroupHom) -> String {
    format!(
        "source = {}\ntarget = {}\nmap = {:?}\n",
        quote(source),
        quote(target),
        hom.map()
    )
}
