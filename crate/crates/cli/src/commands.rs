//! The subcommands. Each returns the process exit code; errors map to exit code 2.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use indres::catalog::{Catalog, GroupSource, ModuleKind, FIELDS};
use indres::homspace::dim_hom;
use indres::linalg::Field;
use indres::rep::{induce_along, restrict_along};
use indres::theorems::{check_mackey, SearchOptions};

use crate::error::CliError;
use crate::formats::{write_cayley_group, write_hom, write_permutation_group, write_rep, Loader};
use crate::report::{human_summary, CheckEntry, SuiteReport};
use crate::suite::{builtin_jobs, run_jobs, BuiltinFilter, Job};
use crate::suitefile::load_suite;

/// Flags shared by every subcommand.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: Option<u64>,
    pub max_trials: Option<usize>,
    /// Where to write the machine report; `-` is standard output.
    pub report: Option<PathBuf>,
    pub quiet: bool,
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(io_error(path))
}

/// Text to a file, or to `out` when no path is given.
fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => write_file(p, text),
        _ => out
            .write_all(text.as_bytes())
            .map_err(io_error(Path::new("<stdout>"))),
    }
}

fn say(out: &mut dyn Write, opts: &Options, text: &str) -> Result<(), CliError> {
    if opts.quiet {
        return Ok(());
    }
    out.write_all(text.as_bytes())
        .map_err(io_error(Path::new("<stdout>")))
}

/// Runs a suite file, or the built-in catalog suite when `suite` is `None`.
pub fn cmd_verify(
    suite: Option<&Path>,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (mut jobs, file_seed, file_trials): (Vec<Job>, _, _) = match suite {
        None => (builtin_jobs(&BuiltinFilter::default()), None, None),
        Some(p) => {
            let spec = load_suite(p)?;
            let mut jobs = spec.jobs;
            if spec.builtin {
                jobs.extend(builtin_jobs(&BuiltinFilter::default()));
            }
            (jobs, spec.seed, spec.max_trials)
        }
    };
    jobs.shrink_to_fit();
    let search = SearchOptions {
        seed: opts.seed.or(file_seed).unwrap_or(0),
        max_trials: opts.max_trials.or(file_trials).unwrap_or(256),
    };
    let start = Instant::now();
    let reports = run_jobs(&jobs, &search).map_err(CliError::Invalid)?;
    let report = SuiteReport::new(search.seed, search.max_trials, &reports);
    let to_stdout = opts.report.as_deref() == Some(Path::new("-"));
    if let Some(p) = &opts.report {
        emit(Some(p), &report.to_json(), out)?;
    }
    if !to_stdout {
        say(
            out,
            opts,
            &human_summary(&report, &reports, start.elapsed()),
        )?;
    } else if !opts.quiet {
        eprint!("{}", human_summary(&report, &reports, start.elapsed()));
    }
    Ok(report.exit_code())
}

pub fn cmd_induce(
    hom: &Path,
    rep: &Path,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut loader = Loader::new();
    let h = loader.hom(hom)?;
    let v = loader.rep(rep)?;
    let ind = induce_along(&h.hom, &v.rep)?;
    let kernel = h.hom.kernel().order();
    let comments = vec![
        format!(
            "Ind along {} applied to {}",
            h.path.display(),
            v.path.display()
        ),
        format!(
            "|G| = {}, |G1| = {}, |Ker| = {}, [G1 : im] = {}",
            h.hom.domain().order(),
            h.hom.codomain().order(),
            kernel,
            ind.transversal.len()
        ),
        format!("transversal of the image: {:?}", ind.transversal),
        format!(
            "dim = {} cosets x {} coinvariant dims = {}",
            ind.transversal.len(),
            ind.block_dim(),
            ind.rep.dim()
        ),
    ];
    emit(output, &write_rep(&ind.rep, &h.target.path, &comments), out)?;
    Ok(0)
}

pub fn cmd_restrict(
    hom: &Path,
    rep: &Path,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut loader = Loader::new();
    let h = loader.hom(hom)?;
    let v = loader.rep(rep)?;
    let res = restrict_along(&h.hom, &v.rep)?;
    let comments = vec![
        format!(
            "Res along {} applied to {}",
            h.path.display(),
            v.path.display()
        ),
        format!(
            "|G| = {}, |G1| = {}",
            h.hom.domain().order(),
            h.hom.codomain().order()
        ),
    ];
    emit(output, &write_rep(&res, &h.source.path, &comments), out)?;
    Ok(0)
}

pub fn cmd_homdim(a: &Path, b: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut loader = Loader::new();
    let u = loader.rep(a)?;
    let v = loader.rep(b)?;
    let d = dim_hom(&u.rep, &v.rep)?;
    emit(None, &format!("{d}\n"), out)?;
    Ok(0)
}

pub fn cmd_mackey(
    alpha: &Path,
    beta: &Path,
    rep: &Path,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut loader = Loader::new();
    let a = loader.hom(alpha)?;
    let b = loader.hom(beta)?;
    let v = loader.rep(rep)?;
    let search = SearchOptions {
        seed: opts.seed.unwrap_or(0),
        max_trials: opts.max_trials.unwrap_or(256),
    };
    let mut r = check_mackey(&a.hom, &b.hom, &v.rep, &search)?;
    r.inputs = format!(
        "α={} β={} V={} | {}",
        alpha.display(),
        beta.display(),
        rep.display(),
        r.inputs
    );
    let report = SuiteReport::new(search.seed, search.max_trials, std::slice::from_ref(&r));
    if let Some(p) = &opts.report {
        emit(Some(p), &report.to_json(), out)?;
    }
    if opts.report.as_deref() != Some(Path::new("-")) {
        let entry =
            serde_json::to_string_pretty(&CheckEntry::from_report(&r)).expect("entry serializes");
        say(out, opts, &format!("{entry}\n"))?;
    }
    Ok(report.exit_code())
}

/// The module files written next to each exported group.
const EXPORTED_REPS: [(ModuleKind, Field); 4] = [
    (ModuleKind::Regular, Field::Rationals),
    (ModuleKind::Permutation, Field::Rationals),
    (ModuleKind::Random2, Field::Rationals),
    (ModuleKind::Trivial, Field::Prime(2)),
];

fn file_name(name: &str) -> String {
    format!("{name}.toml")
}

/// Lists the built-in catalog, or exports it as group, hom and suite files under `dir`.
pub fn cmd_catalog(dir: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let catalog = Catalog::builtin();
    let Some(dir) = dir else {
        let mut text = String::from("groups:\n");
        for g in &catalog.groups {
            let how = match &g.source {
                GroupSource::Permutations { generators, .. } => {
                    format!("generated by {}", generators.join(", "))
                }
                GroupSource::Cayley => "Cayley table".to_string(),
            };
            text += &format!("  {:<6} order {:>2}, {how}\n", g.name, g.group.order());
        }
        text += "homs:\n";
        for h in &catalog.homs {
            text += &format!(
                "  {:<11} {} -> {}, kernel {}, image {}\n",
                h.name,
                h.source,
                h.target,
                h.hom.kernel().order(),
                h.hom.image().order()
            );
        }
        let fields: Vec<String> = FIELDS.iter().map(|f| f.to_string()).collect();
        let kinds: Vec<&str> = ModuleKind::ALL.iter().map(|k| k.name()).collect();
        text += &format!(
            "fields: {}\nmodules: {}\n",
            fields.join(" "),
            kinds.join(" ")
        );
        emit(None, &text, out)?;
        return Ok(0);
    };
    let groups_dir = dir.join("groups");
    let homs_dir = dir.join("homs");
    let reps_dir = dir.join("reps");
    for d in [&groups_dir, &homs_dir, &reps_dir] {
        fs::create_dir_all(d).map_err(io_error(d))?;
    }
    for g in &catalog.groups {
        let text = match &g.source {
            GroupSource::Permutations { degree, generators } => {
                write_permutation_group(*degree, generators)
            }
            GroupSource::Cayley => write_cayley_group(&g.group),
        };
        write_file(&groups_dir.join(file_name(g.name)), &text)?;
        let group_file = PathBuf::from(format!("../groups/{}", file_name(g.name)));
        for (kind, field) in EXPORTED_REPS {
            let name = format!("{}_{}_{}", kind.name(), g.name, field);
            let comment = format!("{kind} module of {} over {field}", g.name);
            let text = write_rep(&g.module(kind, field), &group_file, &[comment]);
            write_file(&reps_dir.join(file_name(&name)), &text)?;
        }
    }
    for h in &catalog.homs {
        let text = write_hom(
            &format!("../groups/{}", file_name(h.source)),
            &format!("../groups/{}", file_name(h.target)),
            &h.hom,
        );
        write_file(&homs_dir.join(file_name(h.name)), &text)?;
    }
    write_file(&dir.join("suite.toml"), &example_suite())?;
    emit(
        None,
        &format!(
            "wrote {} groups, {} homs, {} reps and suite.toml to {}\n",
            catalog.groups.len(),
            catalog.homs.len(),
            catalog.groups.len() * EXPORTED_REPS.len(),
            dir.display()
        ),
        out,
    )?;
    Ok(0)
}

fn example_suite() -> String {
    let catalog = Catalog::builtin();
    let mut s = String::from("# Example suite over the exported catalog files.\nseed = 0\nmax_trials = 256\n\n[groups]\n");
    for g in &catalog.groups {
        s += &format!("\"{}\" = \"groups/{}\"\n", g.name, file_name(g.name));
    }
    s += "\n[homs]\n";
    for h in &catalog.homs {
        s += &format!("\"{}\" = \"homs/{}\"\n", h.name, file_name(h.name));
    }
    s += r#"
[reps]
regular_C4 = { kind = "regular", group = "C4", field = "Q" }
regular_S3 = { kind = "regular", group = "S3", field = "Q" }
natural_S3_F2 = { kind = "permutation", group = "S3", field = "F2" }
trivial_S3_F3 = { kind = "trivial", group = "S3", field = "F3" }
trivial_C2 = { kind = "trivial", group = "C2", field = "Q" }
regular_C2_F2 = { kind = "regular", group = "C2", field = "F2" }

[[checks]]
check = "mackey"
alpha = "C4_to_S3"
beta = "C6_to_S3"
v = "regular_C4"

[[checks]]
check = "hom_equals_ind"
phi = "sign"
v = "regular_S3"

[[checks]]
check = "dual_ind"
phi = "sign"
v = "trivial_S3_F3"

[[checks]]
check = "frobenius"
phi = "sign"
v = "natural_S3_F2"
v1 = "regular_C2_F2"

[[checks]]
check = "ind_tensor"
phi = "sign"
v = "regular_S3"
v1 = "trivial_C2"

[[checks]]
check = "lemma_mackey_3"
alpha = "C4_to_S3"
beta = "C6_to_S3"
v = "regular_C4"
"#;
    s
}
