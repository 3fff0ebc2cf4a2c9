//! Suite files: named groups, homs and modules, and a list of checks over them.
//!
//! Names that are not declared in the file resolve to the built-in catalog.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use serde::Deserialize;
use toml::Spanned;

use indres::catalog::{Catalog, ModuleKind};
use indres::groups::{GroupHom, GroupRef, Subgroup};
use indres::linalg::Field;
use indres::rep::{permutation_rep, regular_rep, restrict_along, trivial_rep, Representation};
use indres::theorems::{find_trivial_complement, mackey_squares};

use crate::error::CliError;
use crate::formats::{located, read_toml, Loader};
use crate::suite::{Check, Job, FAMILIES};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SuiteFile {
    seed: Option<u64>,
    max_trials: Option<usize>,
    #[serde(default)]
    builtin: bool,
    #[serde(default)]
    groups: BTreeMap<String, Spanned<String>>,
    #[serde(default)]
    homs: BTreeMap<String, Spanned<String>>,
    #[serde(default)]
    reps: BTreeMap<String, Spanned<RepSpec>>,
    #[serde(default)]
    checks: Vec<Spanned<CheckSpec>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepSpec {
    kind: String,
    group: Option<String>,
    field: Option<String>,
    dim: Option<usize>,
    path: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckSpec {
    check: String,
    phi: Option<String>,
    psi: Option<String>,
    alpha: Option<String>,
    beta: Option<String>,
    gamma: Option<String>,
    u: Option<String>,
    v: Option<String>,
    v1: Option<String>,
    w: Option<String>,
    g0: Option<Vec<usize>>,
    coset: Option<usize>,
}

/// A parsed suite: optional overrides for the search options, and the jobs to run.
#[derive(Debug)]
pub struct SuiteSpec {
    pub seed: Option<u64>,
    pub max_trials: Option<usize>,
    /// Also run the built-in catalog suite.
    pub builtin: bool,
    pub jobs: Vec<Job>,
}

struct Scope<'a> {
    path: &'a Path,
    text: &'a str,
    groups: HashMap<String, (GroupRef, Vec<Vec<usize>>)>,
    homs: HashMap<String, GroupHom>,
    reps: HashMap<String, Representation>,
}

impl Scope<'_> {
    fn err<T>(
        &self,
        span: std::ops::Range<usize>,
        message: impl Into<String>,
    ) -> Result<T, CliError> {
        Err(located(self.path, self.text, Some(span), message.into()))
    }

    fn file(&self, relative: &str) -> PathBuf {
        self.path.parent().unwrap_or(Path::new("")).join(relative)
    }

    fn group(&self, name: &str) -> Option<(GroupRef, Vec<Vec<usize>>)> {
        if let Some(g) = self.groups.get(name) {
            return Some(g.clone());
        }
        Catalog::builtin()
            .group(name)
            .map(|g| (g.group.clone(), g.action.clone()))
    }

    fn hom(&self, name: &str) -> Option<GroupHom> {
        self.homs
            .get(name)
            .cloned()
            .or_else(|| Catalog::builtin().hom(name).map(|h| h.hom.clone()))
    }
}

fn missing_file(scope: &Scope, span: std::ops::Range<usize>, path: &Path) -> Result<(), CliError> {
    if path.exists() {
        Ok(())
    } else {
        scope.err(span, format!("file {} not found", path.display()))
    }
}

pub fn load_suite(path: &Path) -> Result<SuiteSpec, CliError> {
    let (file, text): (SuiteFile, String) = read_toml(path)?;
    let mut scope = Scope {
        path,
        text: &text,
        groups: HashMap::new(),
        homs: HashMap::new(),
        reps: HashMap::new(),
    };
    let mut seen: HashMap<&str, &str> = HashMap::new();
    let names = file
        .groups
        .iter()
        .map(|(n, s)| (n, s.span(), "groups"))
        .chain(file.homs.iter().map(|(n, s)| (n, s.span(), "homs")))
        .chain(file.reps.iter().map(|(n, s)| (n, s.span(), "reps")));
    for (name, span, table) in names {
        if let Some(previous) = seen.insert(name, table) {
            return scope.err(
                span,
                format!("name {name:?} is declared in both [{previous}] and [{table}]"),
            );
        }
    }

    let mut loader = Loader::new();
    for (name, file_ref) in &file.groups {
        let p = scope.file(file_ref.get_ref());
        missing_file(&scope, file_ref.span(), &p)?;
        let g = loader.group(&p)?;
        scope
            .groups
            .insert(name.clone(), (g.group.clone(), g.action.clone()));
    }
    for (name, file_ref) in &file.homs {
        let p = scope.file(file_ref.get_ref());
        missing_file(&scope, file_ref.span(), &p)?;
        let h = loader.hom(&p)?;
        scope.homs.insert(name.clone(), h.hom);
    }
    for (name, spec) in &file.reps {
        let rep = build_rep(&scope, &mut loader, spec)?;
        scope.reps.insert(name.clone(), rep);
    }
    let mut jobs = Vec::new();
    for c in &file.checks {
        jobs.extend(build_check(&scope, c)?);
    }
    Ok(SuiteSpec {
        seed: file.seed,
        max_trials: file.max_trials,
        builtin: file.builtin,
        jobs,
    })
}

fn build_rep(
    scope: &Scope,
    loader: &mut Loader,
    spec: &Spanned<RepSpec>,
) -> Result<Representation, CliError> {
    let span = spec.span();
    let s = spec.get_ref();
    if s.kind == "file" {
        if s.group.is_some() || s.field.is_some() || s.dim.is_some() {
            return scope.err(span, "a file module takes only `path`");
        }
        let Some(p) = &s.path else {
            return scope.err(span, "a file module needs `path`");
        };
        let p = scope.file(p);
        missing_file(scope, span.clone(), &p)?;
        return Ok(loader.rep(&p)?.rep);
    }
    let kind: ModuleKind = match s.kind.parse() {
        Ok(k) if k != ModuleKind::Random2 => k,
        _ => {
            return scope.err(
                span,
                format!(
                    "unknown module kind {:?}; expected trivial, regular, permutation or file",
                    s.kind
                ),
            )
        }
    };
    if s.path.is_some() {
        return scope.err(span, "`path` belongs to kind \"file\"");
    }
    if s.dim.is_some() && kind != ModuleKind::Trivial {
        return scope.err(span, "`dim` applies to trivial modules only");
    }
    let (Some(group), Some(field)) = (&s.group, &s.field) else {
        return scope.err(span, "a module constructor needs `group` and `field`");
    };
    let Some((g, action)) = scope.group(group) else {
        return scope.err(span, format!("unknown group {group:?}"));
    };
    let field: Field = match field.parse() {
        Ok(f) => f,
        Err(e) => return scope.err(span, format!("{e}")),
    };
    Ok(match kind {
        ModuleKind::Trivial => trivial_rep(&g, field, s.dim.unwrap_or(1)),
        ModuleKind::Regular => regular_rep(&g, field),
        _ => permutation_rep(&g, field, &action)?,
    })
}

/// The required and optional fields of each check family.
fn fields_of(family: &str) -> (&'static [&'static str], &'static [&'static str]) {
    match family {
        "transitivity" => (&["phi", "psi", "u", "w"], &[]),
        "ind_tensor" | "frobenius" => (&["phi", "v", "v1"], &[]),
        "dual_res" => (&["phi", "v1"], &[]),
        "dual_ind" | "hom_equals_ind" => (&["phi", "v"], &[]),
        "lemma_mackey_1" => (&["alpha", "v", "u"], &["g0"]),
        "lemma_mackey_2" => (&["gamma", "beta", "v", "u"], &[]),
        "lemma_mackey_3" => (&["alpha", "beta", "v"], &["w", "coset"]),
        _ => (&["alpha", "beta", "v"], &[]),
    }
}

fn build_check(scope: &Scope, spanned: &Spanned<CheckSpec>) -> Result<Vec<Job>, CliError> {
    let span = spanned.span();
    let c = spanned.get_ref();
    let family = c.check.as_str();
    if !FAMILIES.contains(&family) {
        return scope.err(
            span,
            format!(
                "unknown check {family:?}; expected one of {}",
                FAMILIES.join(", ")
            ),
        );
    }
    let present: [(&str, bool); 11] = [
        ("phi", c.phi.is_some()),
        ("psi", c.psi.is_some()),
        ("alpha", c.alpha.is_some()),
        ("beta", c.beta.is_some()),
        ("gamma", c.gamma.is_some()),
        ("u", c.u.is_some()),
        ("v", c.v.is_some()),
        ("v1", c.v1.is_some()),
        ("w", c.w.is_some()),
        ("g0", c.g0.is_some()),
        ("coset", c.coset.is_some()),
    ];
    let (required, optional) = fields_of(family);
    for (name, is_set) in present {
        if is_set && !required.contains(&name) && !optional.contains(&name) {
            return scope.err(span, format!("check {family} does not take `{name}`"));
        }
        if !is_set && required.contains(&name) {
            return scope.err(span, format!("check {family} needs `{name}`"));
        }
    }

    let hom = |n: &Option<String>| -> Result<GroupHom, CliError> {
        let n = n.as_deref().unwrap_or_default();
        scope
            .hom(n)
            .map_or_else(|| scope.err(span.clone(), format!("unknown hom {n:?}")), Ok)
    };
    let rep = |n: &Option<String>| -> Result<Representation, CliError> {
        let n = n.as_deref().unwrap_or_default();
        scope.reps.get(n).cloned().map_or_else(
            || scope.err(span.clone(), format!("unknown module {n:?}")),
            Ok,
        )
    };
    let mut label = format!("check={family}");
    for (key, value) in [
        ("phi", &c.phi),
        ("psi", &c.psi),
        ("alpha", &c.alpha),
        ("beta", &c.beta),
        ("gamma", &c.gamma),
        ("u", &c.u),
        ("v", &c.v),
        ("v1", &c.v1),
        ("w", &c.w),
    ] {
        if let Some(v) = value {
            label += &format!(" {key}={v}");
        }
    }
    let job = |check: Check| Job {
        label: label.clone(),
        check,
    };
    let check = match family {
        "transitivity" => Check::Transitivity {
            phi: hom(&c.phi)?,
            psi: hom(&c.psi)?,
            u: rep(&c.u)?,
            w: rep(&c.w)?,
        },
        "ind_tensor" => Check::IndTensor {
            phi: hom(&c.phi)?,
            v: rep(&c.v)?,
            v1: rep(&c.v1)?,
        },
        "frobenius" => Check::Frobenius {
            phi: hom(&c.phi)?,
            v: rep(&c.v)?,
            v1: rep(&c.v1)?,
        },
        "dual_res" => Check::DualRes {
            phi: hom(&c.phi)?,
            v1: rep(&c.v1)?,
        },
        "dual_ind" => Check::DualInd {
            phi: hom(&c.phi)?,
            v: rep(&c.v)?,
        },
        "hom_equals_ind" => Check::HomEqualsInd {
            phi: hom(&c.phi)?,
            v: rep(&c.v)?,
        },
        "lemma_mackey_1" => {
            let alpha = hom(&c.alpha)?;
            let g0 = match &c.g0 {
                Some(elements) => Subgroup::new(alpha.domain(), elements.clone())
                    .or_else(|e| scope.err(span.clone(), format!("g0: {e}")))?,
                None => Subgroup::whole(alpha.domain()),
            };
            let h0 = alpha.image_of(&g0)?;
            let u = restrict_along(&h0.inclusion(), &rep(&c.u)?)?;
            Check::LemmaMackey1 {
                alpha,
                g0,
                v: rep(&c.v)?,
                u,
            }
        }
        "lemma_mackey_2" => {
            let (gamma, beta, u) = (hom(&c.gamma)?, hom(&c.beta)?, rep(&c.u)?);
            let alpha = gamma.then(&beta)?;
            let k0 = find_trivial_complement(alpha.kernel(), gamma.kernel(), &u);
            Check::LemmaMackey2 {
                gamma,
                beta,
                v: rep(&c.v)?,
                u,
                k0,
            }
        }
        "lemma_mackey_3" => {
            let (alpha, beta, v) = (hom(&c.alpha)?, hom(&c.beta)?, rep(&c.v)?);
            let w = c.w.as_ref().map(|_| rep(&c.w)).transpose()?;
            let instances = mackey_squares(&alpha, &beta)?;
            if let Some(k) = c.coset {
                if k >= instances.len() {
                    return scope.err(
                        span,
                        format!("coset {k} but only {} double cosets", instances.len()),
                    );
                }
            }
            let mut jobs = Vec::new();
            for (k, inst) in instances.into_iter().enumerate() {
                if c.coset.is_some_and(|want| want != k) {
                    continue;
                }
                let u = restrict_along(&inst.gamma, &v)?;
                let mut squares = vec![(inst.first, v.clone())];
                if let Some(w) = &w {
                    squares.push((inst.second, w.clone()));
                }
                for (square, sv) in squares {
                    let k0 =
                        find_trivial_complement(square.epsilon.kernel(), square.gamma.kernel(), &u);
                    jobs.push(Job {
                        label: format!("{label} x={}", inst.representative),
                        check: Check::LemmaMackey3 {
                            square: Box::new(square),
                            v: sv,
                            u: u.clone(),
                            k0,
                        },
                    });
                }
            }
            return Ok(jobs);
        }
        _ => Check::Mackey {
            alpha: hom(&c.alpha)?,
            beta: hom(&c.beta)?,
            v: rep(&c.v)?,
        },
    };
    Ok(vec![job(check)])
}
