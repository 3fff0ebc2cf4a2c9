//! Independent oracles: characters in characteristic zero, brute-force pullbacks
//! and double cosets, and small hand-computed values.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use indres::catalog::{Catalog, ModuleKind};
use indres::groups::GroupHom;
use indres::homspace::{dim_hom, is_intertwiner, iso_certificate, IsoSearch};
use indres::linalg::{Field, Matrix};
use indres::rep::{
    direct_sum, induce_along, regular_rep, restrict_along, tensor, trivial_rep, Representation,
};
use indres::theorems::build_mackey_rhs;

const Q: Field = Field::Rationals;

fn trace(m: &Matrix) -> BigRational {
    (0..m.rows())
        .map(|i| BigRational::from_str(&m.get(i, i).to_string()).unwrap())
        .fold(BigRational::zero(), |a, b| a + b)
}

fn character(v: &Representation) -> Vec<BigRational> {
    v.matrices().iter().map(trace).collect()
}

/// `χ(y) = Σ_{cosets t I, t⁻¹yt ∈ I} (1/|K|) Σ_{f(g) = t⁻¹yt} χ_V(g)`.
fn induced_character(f: &GroupHom, v: &Representation) -> Vec<BigRational> {
    let (g, g1) = (f.domain(), f.codomain());
    let chi = character(v);
    let k = BigRational::from_integer(f.kernel().order().into());
    let mut reps: Vec<usize> = Vec::new();
    let mut covered = BTreeSet::new();
    for t in g1.elements() {
        if covered.insert(
            f.image()
                .elements()
                .iter()
                .map(|&i| g1.mul(t, i))
                .min()
                .unwrap(),
        ) {
            reps.push(t);
        }
    }
    g1.elements()
        .map(|y| {
            let mut total = BigRational::zero();
            for &t in &reps {
                let c = g1.mul(g1.inv(t), g1.mul(y, t));
                for x in g.elements().filter(|&x| f.apply(x) == c) {
                    total += &chi[x] / &k;
                }
            }
            total
        })
        .collect()
}

fn inner_product(a: &Representation, b: &Representation) -> BigRational {
    let g = a.group();
    let (ca, cb) = (character(a), character(b));
    let sum = g
        .elements()
        .map(|x| &ca[g.inv(x)] * &cb[x])
        .fold(BigRational::zero(), |s, t| s + t);
    sum / BigRational::from_integer(g.order().into())
}

#[test]
fn induced_characters_match_over_q() {
    let cat = Catalog::builtin();
    for h in &cat.homs {
        for (kind, v) in cat.modules(h.source, Q) {
            let ind = induce_along(&h.hom, &v).unwrap();
            assert_eq!(
                character(&ind.rep),
                induced_character(&h.hom, &v),
                "{} {kind}",
                h.name
            );
        }
    }
}

#[test]
fn hom_dimensions_match_character_inner_products() {
    let cat = Catalog::builtin();
    for g in &cat.groups {
        let modules = cat.modules(g.name, Q);
        for (_, a) in &modules {
            for (_, b) in &modules {
                let expected = inner_product(a, b);
                assert!(expected.is_integer());
                assert_eq!(
                    BigRational::from_integer(dim_hom(a, b).unwrap().into()),
                    expected,
                    "{}",
                    g.name
                );
            }
        }
    }
}

fn sign(cat: &Catalog) -> Representation {
    let c2 = &cat.group("C2").unwrap().group;
    let minus = Representation::from_generator_matrices(
        c2.clone(),
        Q,
        1,
        &[1],
        vec![Matrix::from_i64(Q, &[&[-1]])],
    )
    .unwrap();
    restrict_along(&cat.hom("sign").unwrap().hom, &minus).unwrap()
}

#[test]
fn hand_computed_hom_dimensions() {
    let cat = Catalog::builtin();
    let s3 = &cat.group("S3").unwrap().group;
    assert_eq!(
        dim_hom(&trivial_rep(s3, Q, 1), &trivial_rep(s3, Q, 1)).unwrap(),
        1
    );
    assert_eq!(dim_hom(&trivial_rep(s3, Q, 1), &sign(cat)).unwrap(), 0);
    let c2 = &cat.group("C2").unwrap().group;
    assert_eq!(
        dim_hom(&regular_rep(c2, Q), &regular_rep(c2, Q)).unwrap(),
        2
    );
    let sq = tensor(&sign(cat), &sign(cat)).unwrap();
    assert!(sq.is_identical(&trivial_rep(s3, Q, 1)));
}

#[test]
fn fourier_change_of_basis_for_c2() {
    let c2 = &Catalog::builtin().group("C2").unwrap().group;
    let minus = Representation::from_generator_matrices(
        c2.clone(),
        Q,
        1,
        &[1],
        vec![Matrix::from_i64(Q, &[&[-1]])],
    )
    .unwrap();
    let split = direct_sum(c2, Q, &[&trivial_rep(c2, Q, 1), &minus])
        .unwrap()
        .rep;
    let reg = regular_rep(c2, Q);
    assert!(is_intertwiner(
        &reg,
        &split,
        &Matrix::from_i64(Q, &[&[1, 1], &[1, -1]])
    ));
    assert!(matches!(
        iso_certificate(&reg, &split, 0, 16).unwrap(),
        IsoSearch::Certified(_)
    ));
}

#[test]
fn induction_along_sign_of_the_regular_module() {
    let cat = Catalog::builtin();
    let v = cat.group("S3").unwrap().module(ModuleKind::Regular, Q);
    let ind = induce_along(&cat.hom("sign").unwrap().hom, &v).unwrap();
    assert_eq!(ind.rep.dim(), 2);
    let reg = regular_rep(&cat.group("C2").unwrap().group, Q);
    assert!(iso_certificate(&ind.rep, &reg, 0, 16)
        .unwrap()
        .certificate()
        .is_some());
}

/// Pullback orders and double cosets by enumeration, against the Mackey decomposition.
#[test]
fn mackey_pullbacks_by_enumeration() {
    let cat = Catalog::builtin();
    for ha in &cat.homs {
        for hb in cat.homs.iter().filter(|hb| hb.target == ha.target) {
            let (a, b) = (&ha.hom, &hb.hom);
            let g = a.codomain();
            let mut cosets: Vec<BTreeSet<usize>> = Vec::new();
            for x in g.elements() {
                if cosets.iter().any(|c| c.contains(&x)) {
                    continue;
                }
                let mut set = BTreeSet::new();
                for &l in b.image().elements() {
                    for &r in a.image().elements() {
                        set.insert(g.mul(l, g.mul(x, r)));
                    }
                }
                cosets.push(set);
            }
            let v = cat.group(ha.source).unwrap().module(ModuleKind::Regular, Q);
            let rhs = build_mackey_rhs(a, b, &v).unwrap();
            assert_eq!(rhs.summands.len(), cosets.len(), "{} {}", ha.name, hb.name);
            for (s, c) in rhs.summands.iter().zip(&cosets) {
                let x = *c.iter().next().unwrap();
                assert_eq!(s.representative, x);
                let xinv = g.inv(x);
                let pairs = a
                    .domain()
                    .elements()
                    .flat_map(|k| b.domain().elements().map(move |h| (k, h)))
                    .filter(|&(k, h)| g.mul(x, g.mul(a.apply(k), xinv)) == b.apply(h))
                    .count();
                assert_eq!(s.pullback_order, pairs, "{} {} x={x}", ha.name, hb.name);
            }
        }
    }
}

#[test]
fn worked_mackey_instance() {
    let cat = Catalog::builtin();
    let (a, b) = (
        &cat.hom("C4_to_S3").unwrap().hom,
        &cat.hom("C6_to_S3").unwrap().hom,
    );
    let v = cat.group("C4").unwrap().module(ModuleKind::Regular, Q);
    let rhs = build_mackey_rhs(a, b, &v).unwrap();
    assert_eq!(rhs.summands.len(), 1);
    assert_eq!(rhs.summands[0].pullback_order, 4);
    let lhs = restrict_along(b, &induce_along(a, &v).unwrap().rep).unwrap();
    assert_eq!((lhs.dim(), rhs.rep.dim()), (6, 6));
}
