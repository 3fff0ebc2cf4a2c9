//! Acceptance criteria over the built-in catalog. Prints one line per criterion and
//! exits nonzero when any of them fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use indres::catalog::{Catalog, ModuleKind, FIELDS};
use indres::groups::{all_subgroups, Subgroup};
use indres::homspace::iso_certificate;
use indres::linalg::{Field, Matrix};
use indres::rep::{
    cofixed_quotient, fixed_points, induce_along, is_relatively_one_projective, regular_rep,
    restrict_along, trivial_rep, Representation,
};
use indres::theorems::{
    build_mackey_rhs, mackey_squares, HypothesisStatus, SearchOptions, Verdict,
};
use indres_cli::suite::{builtin_jobs, run_jobs, BuiltinFilter};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn integer(m: &Matrix, r: usize, c: usize) -> i128 {
    m.get(r, c).to_string().parse().expect("integral entry")
}

/// Rank by fraction-free elimination over the integers.
fn rank_integer(mut a: Vec<Vec<i128>>) -> usize {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let (mut rank, mut prev) = (0, 1i128);
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

/// Rank by plain elimination modulo `p`.
fn rank_mod(mut a: Vec<Vec<i128>>, p: i128) -> usize {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let inverse = |x: i128| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] % p != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inverse(a[rank][c].rem_euclid(p));
        let pivot = a[rank].clone();
        for row in &mut a[rank + 1..] {
            let f = row[c].rem_euclid(p) * inv % p;
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = (*x - f * y).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

/// `dim V - dim span{(ρ(k) - 1)v : k ∈ K, v ∈ V}` by brute force over every kernel element.
fn brute_cofixed_dim(v: &Representation, k: &Subgroup) -> usize {
    let n = v.dim();
    let mut rows = vec![Vec::new(); n];
    for &x in k.elements() {
        let m = v.matrix(x);
        for (r, row) in rows.iter_mut().enumerate() {
            row.extend((0..n).map(|c| integer(m, r, c) - i128::from(r == c)));
        }
    }
    let rank = match v.field() {
        Field::Rationals => rank_integer(rows),
        f => rank_mod(rows, i128::from(f.characteristic())),
    };
    n - rank
}

fn criterion_1() -> Outcome {
    let opts = SearchOptions::default();
    let start = Instant::now();
    let reports = run_jobs(&builtin_jobs(&BuiltinFilter::default()), &opts)?;
    let wall = start.elapsed();
    let mut satisfied = 0;
    let mut families = BTreeSet::new();
    for r in &reports {
        families.insert(r.check_name.clone());
        if r.hypothesis != HypothesisStatus::Satisfied {
            ensure(!r.is_pass() || r.reverify().is_ok(), || {
                format!("{}: bad certificate", r.inputs)
            })?;
            continue;
        }
        satisfied += 1;
        ensure(r.is_pass(), || {
            format!("{} did not pass: {}", r.check_name, r.inputs)
        })?;
        r.reverify()
            .map_err(|e| format!("{} {}: {e}", r.check_name, r.inputs))?;
    }
    ensure(wall < Duration::from_secs(60), || {
        format!("took {:.1}s", wall.as_secs_f64())
    })?;
    Ok(format!(
        "{} checks in {} families, {satisfied} satisfied, all pass and re-verify, {:.2}s",
        reports.len(),
        families.len(),
        wall.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let cat = Catalog::builtin();
    let mut count = 0;
    for h in &cat.homs {
        for f in FIELDS {
            for (kind, v) in cat.modules(h.source, f) {
                let ind = induce_along(&h.hom, &v).map_err(|e| e.to_string())?;
                let expected = h.hom.image().index() * brute_cofixed_dim(&v, h.hom.kernel());
                ensure(ind.rep.dim() == expected, || {
                    format!("{} {kind} {f}: {} != {expected}", h.name, ind.rep.dim())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (hom, module, field) instances"))
}

fn criterion_3() -> Outcome {
    let cat = Catalog::builtin();
    let mut count = 0;
    for ha in &cat.homs {
        for hb in cat.homs.iter().filter(|hb| hb.target == ha.target) {
            let squares = mackey_squares(&ha.hom, &hb.hom).map_err(|e| e.to_string())?;
            for f in FIELDS {
                for (kind, v) in cat.modules(ha.source, f) {
                    let ind = induce_along(&ha.hom, &v).map_err(|e| e.to_string())?;
                    let lhs = restrict_along(&hb.hom, &ind.rep)
                        .map_err(|e| e.to_string())?
                        .dim();
                    let mut rhs = 0;
                    for s in &squares {
                        let u = restrict_along(&s.gamma, &v).map_err(|e| e.to_string())?;
                        rhs += induce_along(&s.delta, &u)
                            .map_err(|e| e.to_string())?
                            .rep
                            .dim();
                    }
                    ensure(lhs == rhs, || {
                        format!("{} {} {kind} {f}: {lhs} != {rhs}", ha.name, hb.name)
                    })?;
                    count += 1;
                }
            }
        }
    }
    let (a, b) = (
        &cat.hom("C4_to_S3").unwrap().hom,
        &cat.hom("C6_to_S3").unwrap().hom,
    );
    let v = cat
        .group("C4")
        .unwrap()
        .module(ModuleKind::Regular, Field::Rationals);
    let rhs = build_mackey_rhs(a, b, &v).map_err(|e| e.to_string())?;
    let lhs = restrict_along(b, &induce_along(a, &v).unwrap().rep)
        .unwrap()
        .dim();
    let orders: Vec<usize> = rhs.summands.iter().map(|s| s.pullback_order).collect();
    ensure(lhs == 6 && rhs.rep.dim() == 6 && orders == [4], || {
        format!(
            "worked instance: {lhs} vs {}, pullback orders {orders:?}",
            rhs.rep.dim()
        )
    })?;
    Ok(format!("{count} (α, β, v) instances; C4_to_S3/C6_to_S3 regular: 6 = 6, one double coset, |B_x| = 4"))
}

/// `Σ_k ρ(k) θ ρ(k⁻¹)`, summed directly.
fn transfer(v: &Representation, k: &Subgroup, theta: &Matrix) -> Matrix {
    let g = v.group();
    let mut sum = Matrix::zeros(v.field(), v.dim(), v.dim());
    for &x in k.elements() {
        sum = &sum + &(&(v.matrix(x) * theta) * v.matrix(g.inv(x)));
    }
    sum
}

fn criterion_4() -> Outcome {
    let cat = Catalog::builtin();
    let (mut pairs, mut witnesses) = (0, 0);
    for g in &cat.groups {
        let subgroups = all_subgroups(&g.group);
        for f in FIELDS {
            for (kind, v) in cat.modules(g.name, f) {
                for k in &subgroups {
                    pairs += 1;
                    let w = is_relatively_one_projective(&v, k).map_err(|e| e.to_string())?;
                    if f.is_unit(k.order() as u64) {
                        ensure(w.is_some(), || {
                            format!("{} {kind} {f} |K|={}: no witness", g.name, k.order())
                        })?;
                    }
                    if let Some(theta) = w {
                        witnesses += 1;
                        ensure(transfer(&v, k, &theta).is_identity(), || {
                            format!("{} {kind} {f}: witness fails", g.name)
                        })?;
                    }
                }
            }
        }
    }
    let c2 = &cat.group("C2").unwrap().group;
    let whole = Subgroup::whole(c2);
    let f2 = Field::Prime(2);
    let regular =
        is_relatively_one_projective(&regular_rep(c2, f2), &whole).map_err(|e| e.to_string())?;
    let trivial =
        is_relatively_one_projective(&trivial_rep(c2, f2, 1), &whole).map_err(|e| e.to_string())?;
    ensure(regular.is_some(), || "regular F2C2 has no witness".into())?;
    ensure(trivial.is_none(), || "trivial F2C2 has a witness".into())?;
    Ok(format!(
        "{pairs} (v, K) pairs, {witnesses} witnesses re-verified; regular F2C2 projective, trivial F2C2 not"
    ))
}

fn criterion_5() -> Outcome {
    let filter = BuiltinFilter {
        checks: Some(vec!["ind_tensor".into()]),
        ..BuiltinFilter::default()
    };
    let reports = run_jobs(&builtin_jobs(&filter), &SearchOptions::default())?;
    for r in &reports {
        let Verdict::Pass(cert) = &r.verdict else {
            return Err(format!("no explicit maps: {}", r.inputs));
        };
        let e = r.evidence.as_ref().ok_or("no evidence")?;
        let g = e.lhs.group();
        for x in g.elements() {
            ensure(
                e.rhs.matrix(x) * &cert.intertwiner == &cert.intertwiner * e.lhs.matrix(x),
                || format!("forward map does not intertwine at {x}: {}", r.inputs),
            )?;
        }
        ensure((&cert.intertwiner * &cert.inverse).is_identity(), || {
            format!("not inverse: {}", r.inputs)
        })?;
        ensure((&cert.inverse * &cert.intertwiner).is_identity(), || {
            format!("not inverse: {}", r.inputs)
        })?;
    }
    Ok(format!(
        "{} instances, both maps intertwine and are mutually inverse",
        reports.len()
    ))
}

fn criterion_6() -> Outcome {
    let cat = Catalog::builtin();
    let q = Field::Rationals;
    let mut count = 0;
    for g in &cat.groups {
        for (kind, v) in cat.modules(g.name, q) {
            for k in all_subgroups(&g.group)
                .into_iter()
                .filter(Subgroup::is_normal)
            {
                let fixed = fixed_points(&v, &k).map_err(|e| e.to_string())?.dim();
                let cofixed = cofixed_quotient(&v, &k)
                    .map_err(|e| e.to_string())?
                    .1
                    .rep
                    .dim();
                ensure(fixed == cofixed, || {
                    format!("{} {kind} |K|={}: {fixed} != {cofixed}", g.name, k.order())
                })?;
                count += 1;
            }
        }
    }
    let v = cat.group("S3").unwrap().module(ModuleKind::Regular, q);
    let ind = induce_along(&cat.hom("sign").unwrap().hom, &v).map_err(|e| e.to_string())?;
    let target = regular_rep(&cat.group("C2").unwrap().group, q);
    let search = iso_certificate(&ind.rep, &target, 0, 256).map_err(|e| e.to_string())?;
    ensure(search.certificate().is_some(), || {
        "Ind_sign regular QS3 not certified".into()
    })?;
    Ok(format!(
        "{count} (v, normal K) pairs over Q; Ind_sign regular QS3 certified ≅ regular QC2"
    ))
}

fn run_report() -> Result<serde_json::Value, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_indres"))
        .args(["--seed", "0", "--quiet", "--report"])
        .arg(&path)
        .arg("verify")
        .status()
        .map_err(|e| e.to_string())?;
    ensure(status.success(), || format!("verify exited with {status}"))?;
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let mut value: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    value
        .as_object_mut()
        .ok_or("report is not an object")?
        .remove("timestamp");
    Ok(value)
}

fn criterion_7() -> Outcome {
    let (a, b) = (run_report()?, run_report()?);
    ensure(a == b, || "reports differ".into())?;
    Ok(format!(
        "two runs agree on {} checks",
        a["checks"].as_array().map_or(0, Vec::len)
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("catalog theorem suite", criterion_1),
        ("induction dimension oracle", criterion_2),
        ("Mackey counting identity", criterion_3),
        ("hypothesis gate soundness", criterion_4),
        ("explicit ind_tensor maps", criterion_5),
        ("semisimple sanity", criterion_6),
        ("determinism", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} ({name}): PASS: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
