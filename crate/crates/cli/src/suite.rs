//! Check jobs, the built-in suite over the catalog, and the parallel runner.

use rayon::prelude::*;

use indres::catalog::{Catalog, ModuleKind, FIELDS};
use indres::groups::{all_subgroups, GroupHom, Subgroup};
use indres::linalg::Field;
use indres::rep::{restrict_along, Representation};
use indres::theorems::{
    check_dual_ind, check_dual_res, check_frobenius, check_hom_equals_ind, check_ind_tensor,
    check_lemma_mackey_1, check_lemma_mackey_2, check_lemma_mackey_3, check_mackey,
    check_transitivity, find_trivial_complement, mackey_squares, CheckReport, MackeySquare,
    SearchOptions,
};

/// The inputs of one check call; each call yields one or two reports.
#[derive(Clone, Debug)]
pub enum Check {
    Transitivity {
        phi: GroupHom,
        psi: GroupHom,
        u: Representation,
        w: Representation,
    },
    IndTensor {
        phi: GroupHom,
        v: Representation,
        v1: Representation,
    },
    DualRes {
        phi: GroupHom,
        v1: Representation,
    },
    DualInd {
        phi: GroupHom,
        v: Representation,
    },
    HomEqualsInd {
        phi: GroupHom,
        v: Representation,
    },
    Frobenius {
        phi: GroupHom,
        v: Representation,
        v1: Representation,
    },
    LemmaMackey1 {
        alpha: GroupHom,
        g0: Subgroup,
        v: Representation,
        u: Representation,
    },
    LemmaMackey2 {
        gamma: GroupHom,
        beta: GroupHom,
        v: Representation,
        u: Representation,
        k0: Option<Subgroup>,
    },
    LemmaMackey3 {
        square: Box<MackeySquare>,
        v: Representation,
        u: Representation,
        k0: Option<Subgroup>,
    },
    Mackey {
        alpha: GroupHom,
        beta: GroupHom,
        v: Representation,
    },
}

impl Check {
    pub fn run(&self, opts: &SearchOptions) -> indres::Result<Vec<CheckReport>> {
        Ok(match self {
            Check::Transitivity { phi, psi, u, w } => {
                check_transitivity(phi, psi, u, w, opts)?.to_vec()
            }
            Check::IndTensor { phi, v, v1 } => vec![check_ind_tensor(phi, v, v1, opts)?],
            Check::DualRes { phi, v1 } => vec![check_dual_res(phi, v1, opts)?],
            Check::DualInd { phi, v } => vec![check_dual_ind(phi, v, opts)?],
            Check::HomEqualsInd { phi, v } => vec![check_hom_equals_ind(phi, v, opts)?],
            Check::Frobenius { phi, v, v1 } => check_frobenius(phi, v, v1, opts)?.to_vec(),
            Check::LemmaMackey1 { alpha, g0, v, u } => {
                check_lemma_mackey_1(alpha, g0, v, u, opts)?.to_vec()
            }
            Check::LemmaMackey2 {
                gamma,
                beta,
                v,
                u,
                k0,
            } => check_lemma_mackey_2(gamma, beta, v, u, k0.as_ref(), opts)?.to_vec(),
            Check::LemmaMackey3 { square, v, u, k0 } => {
                check_lemma_mackey_3(square, v, u, k0.as_ref(), opts)?.to_vec()
            }
            Check::Mackey { alpha, beta, v } => vec![check_mackey(alpha, beta, v, opts)?],
        })
    }
}

/// A check with a human-readable description of its named inputs.
#[derive(Clone, Debug)]
pub struct Job {
    pub label: String,
    pub check: Check,
}

impl Job {
    /// Runs the check and prefixes each report's inputs with the job label.
    pub fn run(&self, opts: &SearchOptions) -> Result<Vec<CheckReport>, String> {
        let mut reports = self
            .check
            .run(opts)
            .map_err(|e| format!("{}: {e}", self.label))?;
        for r in &mut reports {
            r.inputs = format!("{} | {}", self.label, r.inputs);
        }
        Ok(reports)
    }
}

/// Runs every job on the worker pool; the result keeps job order.
pub fn run_jobs(jobs: &[Job], opts: &SearchOptions) -> Result<Vec<CheckReport>, String> {
    let chunks: Vec<Result<Vec<CheckReport>, String>> =
        jobs.par_iter().map(|j| j.run(opts)).collect();
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?);
    }
    Ok(out)
}

/// Which families of checks to include in the built-in suite.
#[derive(Clone, Debug)]
pub struct BuiltinFilter {
    pub fields: Vec<Field>,
    pub checks: Option<Vec<String>>,
}

impl Default for BuiltinFilter {
    fn default() -> Self {
        BuiltinFilter {
            fields: FIELDS.to_vec(),
            checks: None,
        }
    }
}

impl BuiltinFilter {
    fn wants(&self, family: &str) -> bool {
        self.checks
            .as_ref()
            .is_none_or(|c| c.iter().any(|x| x == family))
    }
}

/// Names of the check families, as accepted by suite files.
pub const FAMILIES: [&str; 10] = [
    "transitivity",
    "ind_tensor",
    "dual_res",
    "dual_ind",
    "hom_equals_ind",
    "frobenius",
    "lemma_mackey_1",
    "lemma_mackey_2",
    "lemma_mackey_3",
    "mackey",
];

fn field_name(f: Field) -> String {
    f.to_string()
}

struct Modules<'a> {
    catalog: &'a Catalog,
    field: Field,
}

impl Modules<'_> {
    fn of(&self, group: &str) -> Vec<(ModuleKind, Representation)> {
        self.catalog.modules(group, self.field)
    }
}

/// Every combination of catalog homs and modules, for each field in the filter.
pub fn builtin_jobs(filter: &BuiltinFilter) -> Vec<Job> {
    let catalog = Catalog::builtin();
    let mut jobs = Vec::new();
    for &field in &filter.fields {
        let m = Modules { catalog, field };
        let f = field_name(field);
        if filter.wants("transitivity") {
            transitivity_jobs(&m, &f, &mut jobs);
        }
        for h in &catalog.homs {
            let phi = &h.hom;
            for (kv, v) in m.of(h.source) {
                let vl = format!("{kv}({})", h.source);
                for (kv1, v1) in m.of(h.target) {
                    let v1l = format!("{kv1}({})", h.target);
                    let label = format!("φ={} V={vl} V₁={v1l} F={f}", h.name);
                    if filter.wants("ind_tensor") {
                        jobs.push(Job {
                            label: label.clone(),
                            check: Check::IndTensor {
                                phi: phi.clone(),
                                v: v.clone(),
                                v1: v1.clone(),
                            },
                        });
                    }
                    if filter.wants("frobenius") {
                        jobs.push(Job {
                            label,
                            check: Check::Frobenius {
                                phi: phi.clone(),
                                v: v.clone(),
                                v1,
                            },
                        });
                    }
                }
                let label = format!("φ={} V={vl} F={f}", h.name);
                if filter.wants("dual_ind") {
                    jobs.push(Job {
                        label: label.clone(),
                        check: Check::DualInd {
                            phi: phi.clone(),
                            v: v.clone(),
                        },
                    });
                }
                if filter.wants("hom_equals_ind") {
                    jobs.push(Job {
                        label,
                        check: Check::HomEqualsInd {
                            phi: phi.clone(),
                            v,
                        },
                    });
                }
            }
            if filter.wants("dual_res") {
                for (kv1, v1) in m.of(h.target) {
                    jobs.push(Job {
                        label: format!("φ={} V₁={kv1}({}) F={f}", h.name, h.target),
                        check: Check::DualRes {
                            phi: phi.clone(),
                            v1,
                        },
                    });
                }
            }
        }
        if filter.wants("lemma_mackey_1") {
            lemma_one_jobs(&m, &f, &mut jobs);
        }
        if filter.wants("lemma_mackey_2") {
            lemma_two_jobs(&m, &f, &mut jobs);
        }
        if filter.wants("lemma_mackey_3") || filter.wants("mackey") {
            mackey_jobs(&m, &f, filter, &mut jobs);
        }
    }
    jobs
}

fn transitivity_jobs(m: &Modules, f: &str, jobs: &mut Vec<Job>) {
    for h1 in &m.catalog.homs {
        for h2 in m.catalog.homs.iter().filter(|h2| h2.source == h1.target) {
            for (ku, u) in m.of(h1.source) {
                for (kw, w) in m.of(h2.target) {
                    jobs.push(Job {
                        label: format!(
                            "φ={} ψ={} U={ku}({}) W={kw}({}) F={f}",
                            h1.name, h2.name, h1.source, h2.target
                        ),
                        check: Check::Transitivity {
                            phi: h1.hom.clone(),
                            psi: h2.hom.clone(),
                            u: u.clone(),
                            w,
                        },
                    });
                }
            }
        }
    }
}

/// Surjections `α: G ↠ H` with every `Ker α ≤ G₀ ≤ G`; `U` is a catalog module of `H` restricted to `α(G₀)`.
fn lemma_one_jobs(m: &Modules, f: &str, jobs: &mut Vec<Job>) {
    for h in m.catalog.homs.iter().filter(|h| h.hom.is_surjective()) {
        let alpha = &h.hom;
        for g0 in all_subgroups(alpha.domain()) {
            if !alpha.kernel().is_subset_of(&g0) {
                continue;
            }
            let h0 = alpha.image_of(&g0).expect("subgroup of the domain");
            let incl = h0.inclusion();
            for (kv, v) in m.of(h.source) {
                for (ku, u) in m.of(h.target) {
                    let u = restrict_along(&incl, &u).expect("inclusion into the catalog group");
                    jobs.push(Job {
                        label: format!(
                            "α={} |G₀|={} V={kv}({}) U=Res {ku}({}) F={f}",
                            h.name,
                            g0.order(),
                            h.source,
                            h.target
                        ),
                        check: Check::LemmaMackey1 {
                            alpha: alpha.clone(),
                            g0: g0.clone(),
                            v: v.clone(),
                            u,
                        },
                    });
                }
            }
        }
    }
}

/// Composable surjections `γ: B ↠ A`, `β: A ↠ C`, including identities of each catalog group.
fn lemma_two_jobs(m: &Modules, f: &str, jobs: &mut Vec<Job>) {
    let mut surjections: Vec<(String, &str, &str, GroupHom)> = m
        .catalog
        .homs
        .iter()
        .filter(|h| h.hom.is_surjective() && h.source != h.target)
        .map(|h| (h.name.to_string(), h.source, h.target, h.hom.clone()))
        .collect();
    for g in &m.catalog.groups {
        surjections.push((
            format!("id_{}", g.name),
            g.name,
            g.name,
            GroupHom::identity(&g.group),
        ));
    }
    for (gn, gs, gt, gamma) in &surjections {
        for (bn, _, bt, beta) in surjections.iter().filter(|s| s.1 == *gt) {
            if gs == gt && gt == bt {
                continue;
            }
            let alpha = gamma.then(beta).expect("composable");
            for (kv, v) in m.of(gt) {
                for (ku, u) in m.of(gs) {
                    let k0 = find_trivial_complement(alpha.kernel(), gamma.kernel(), &u);
                    jobs.push(Job {
                        label: format!("γ={gn} β={bn} V={kv}({gt}) U={ku}({gs}) F={f}"),
                        check: Check::LemmaMackey2 {
                            gamma: gamma.clone(),
                            beta: beta.clone(),
                            v: v.clone(),
                            u,
                            k0,
                        },
                    });
                }
            }
        }
    }
}

/// Mackey's formula for pairs of catalog homs with a common target, and the two squares at each double coset.
fn mackey_jobs(m: &Modules, f: &str, filter: &BuiltinFilter, jobs: &mut Vec<Job>) {
    for ha in &m.catalog.homs {
        for hb in m.catalog.homs.iter().filter(|hb| hb.target == ha.target) {
            let (alpha, beta) = (&ha.hom, &hb.hom);
            let pair = format!("α={} β={}", ha.name, hb.name);
            if filter.wants("mackey") {
                for (kv, v) in m.of(ha.source) {
                    jobs.push(Job {
                        label: format!("{pair} V={kv}({}) F={f}", ha.source),
                        check: Check::Mackey {
                            alpha: alpha.clone(),
                            beta: beta.clone(),
                            v,
                        },
                    });
                }
            }
            if !filter.wants("lemma_mackey_3") {
                continue;
            }
            let instances = mackey_squares(alpha, beta).expect("common target");
            for inst in instances {
                let x = inst.representative;
                for ((kv, v), (_, vh)) in m.of(ha.source).into_iter().zip(m.of(hb.source)) {
                    let u =
                        restrict_along(&inst.gamma, &v).expect("pullback maps to the domain of α");
                    let squares = [
                        ("first", &inst.first, v.clone(), ha.source),
                        ("second", &inst.second, vh, hb.source),
                    ];
                    for (which, square, sv, sg) in squares {
                        let k0 = find_trivial_complement(
                            square.epsilon.kernel(),
                            square.gamma.kernel(),
                            &u,
                        );
                        jobs.push(Job {
                            label: format!(
                                "{pair} x={x} {which} square V={kv}({sg}) U=Res_γ {kv}({}) F={f}",
                                ha.source
                            ),
                            check: Check::LemmaMackey3 {
                                square: Box::new(square.clone()),
                                v: sv,
                                u: u.clone(),
                                k0,
                            },
                        });
                    }
                }
            }
        }
    }
}
