//! The built-in desk-scale catalog: ten groups of order at most 12, the
//! homomorphisms between them used by the default suite, four fields and four
//! module constructors per group.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups::{
    group_from_cayley, group_from_permutations, parse_cycles, FiniteGroup, GroupHom, GroupRef,
    LeftCosets, Subgroup,
};
use crate::linalg::{Field, Matrix};
use crate::rep::{permutation_rep, regular_rep, trivial_rep, Representation};

pub const FIELDS: [Field; 4] = [
    Field::Rationals,
    Field::Prime(2),
    Field::Prime(3),
    Field::Prime(5),
];

/// Seed for the conjugating matrices of the random 2-dimensional modules.
const RANDOM2_SEED: u64 = 0x1D_2E5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleKind {
    Trivial,
    Regular,
    Permutation,
    Random2,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 4] = [
        ModuleKind::Trivial,
        ModuleKind::Regular,
        ModuleKind::Permutation,
        ModuleKind::Random2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::Trivial => "trivial",
            ModuleKind::Regular => "regular",
            ModuleKind::Permutation => "permutation",
            ModuleKind::Random2 => "random2",
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ModuleKind> {
        ModuleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown module kind {s:?}")))
    }
}

/// How a catalog group was defined, for export as a group file.
#[derive(Clone, Debug)]
pub enum GroupSource {
    Permutations {
        degree: usize,
        generators: Vec<String>,
    },
    Cayley,
}

#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub name: &'static str,
    pub group: GroupRef,
    pub source: GroupSource,
    /// `action[g][i]`: the point-action behind the permutation module.
    pub action: Vec<Vec<usize>>,
    /// Integer matrices for the generators, valid in every characteristic.
    pub random2: Vec<Int2>,
    /// Permutation of each element, for groups given by permutations.
    elements: Option<Vec<Vec<usize>>>,
}

impl CatalogGroup {
    pub fn module(&self, kind: ModuleKind, field: Field) -> Representation {
        match kind {
            ModuleKind::Trivial => trivial_rep(&self.group, field, 1),
            ModuleKind::Regular => regular_rep(&self.group, field),
            ModuleKind::Permutation => permutation_rep(&self.group, field, &self.action)
                .expect("catalog action is an action"),
            ModuleKind::Random2 => {
                let images = self
                    .random2
                    .iter()
                    .map(|m| Matrix::from_i64(field, &[&m[0], &m[1]]))
                    .collect();
                Representation::from_generator_matrices(
                    self.group.clone(),
                    field,
                    2,
                    self.group.generators(),
                    images,
                )
                .expect("catalog matrices satisfy the relations")
            }
        }
    }

    fn element(&self, cycles: &str) -> usize {
        let elements = self.elements.as_ref().expect("permutation group");
        let p = parse_cycles(cycles, elements[0].len()).expect("valid cycle literal");
        elements
            .iter()
            .position(|e| *e == p)
            .expect("element of the group")
    }
}

#[derive(Clone, Debug)]
pub struct CatalogHom {
    pub name: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub hom: GroupHom,
}

#[derive(Debug)]
pub struct Catalog {
    pub groups: Vec<CatalogGroup>,
    pub homs: Vec<CatalogHom>,
}

impl Catalog {
    /// The shared built-in catalog.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(build)
    }

    pub fn group(&self, name: &str) -> Option<&CatalogGroup> {
        self.groups.iter().find(|g| g.name == name)
    }

    pub fn hom(&self, name: &str) -> Option<&CatalogHom> {
        self.homs.iter().find(|h| h.name == name)
    }

    /// The catalog group whose table is `g`.
    pub fn group_of(&self, g: &GroupRef) -> Option<&CatalogGroup> {
        self.groups
            .iter()
            .find(|c| Arc::ptr_eq(&c.group, g) || *c.group == **g)
    }

    /// All catalog modules of `g`, in `ModuleKind::ALL` order.
    pub fn modules(&self, group: &str, field: Field) -> Vec<(ModuleKind, Representation)> {
        let g = self.group(group).expect("catalog group");
        ModuleKind::ALL
            .into_iter()
            .map(|k| (k, g.module(k, field)))
            .collect()
    }
}

/// A 2x2 integer matrix.
pub type Int2 = [[i64; 2]; 2];

fn mul2(x: &Int2, y: &Int2) -> Int2 {
    let e = |r: usize, c: usize| x[r][0] * y[0][c] + x[r][1] * y[1][c];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Conjugates the base matrices by a seeded unimodular `P`, so the result is integral everywhere.
fn randomize(base: Vec<Int2>, stream: u64) -> Vec<Int2> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM2_SEED);
    rng.set_stream(stream);
    let (a, b): (i64, i64) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
    let p = mul2(&[[1, a], [0, 1]], &[[1, 0], [b, 1]]);
    let p_inv = mul2(&[[1, 0], [-b, 1]], &[[1, -a], [0, 1]]);
    base.iter().map(|m| mul2(&mul2(&p, m), &p_inv)).collect()
}

/// Action on the left cosets of `h`.
fn coset_action(g: &GroupRef, h: &Subgroup) -> Vec<Vec<usize>> {
    let cosets = LeftCosets::new(h);
    g.elements()
        .map(|x| {
            cosets
                .representatives
                .iter()
                .map(|&t| cosets.membership[g.mul(x, t)])
                .collect()
        })
        .collect()
}

fn perm_group(
    name: &'static str,
    degree: usize,
    gens: &[&str],
    base: Vec<Int2>,
    stream: u64,
) -> CatalogGroup {
    let perms: Vec<Vec<usize>> = gens
        .iter()
        .map(|c| parse_cycles(c, degree).expect("valid cycles"))
        .collect();
    let (group, elements) = group_from_permutations(degree, &perms).expect("valid permutations");
    CatalogGroup {
        name,
        group,
        source: GroupSource::Permutations {
            degree,
            generators: gens.iter().map(|s| s.to_string()).collect(),
        },
        action: elements.clone(),
        random2: randomize(base, stream),
        elements: Some(elements),
    }
}

fn table_group(
    name: &'static str,
    group: GroupRef,
    h: &[usize],
    base: Vec<Int2>,
    stream: u64,
) -> CatalogGroup {
    let h = Subgroup::new(&group, h.to_vec()).expect("catalog subgroup");
    CatalogGroup {
        name,
        action: coset_action(&group, &h),
        group,
        source: GroupSource::Cayley,
        random2: randomize(base, stream),
        elements: None,
    }
}

/// `Q₈ = {±1, ±i, ±j, ±k}` with `±u` at index `2u` / `2u + 1` for `u = 1, i, j, k`.
fn quaternion_group() -> GroupRef {
    // Products of units: (sign, unit) for u·v.
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (s, u) = UNIT[a / 2][b / 2];
                    2 * u + (s + a % 2 + b % 2) % 2
                })
                .collect()
        })
        .collect();
    let mut q8 = Arc::try_unwrap(group_from_cayley(&table).expect("quaternion table"))
        .unwrap_or_else(|g| (*g).clone());
    q8.set_generators(vec![2, 4]).expect("i and j generate");
    Arc::new(q8)
}

fn build() -> Catalog {
    let id2 = [[1, 0], [0, 1]];
    let rot3 = [[0, -1], [1, -1]];
    let rot4 = [[0, -1], [1, 0]];
    let diag = |a, b| [[a, 0], [0, b]];

    let c = FiniteGroup::cyclic;
    let one = FiniteGroup::trivial();
    let groups = vec![
        table_group("1", one, &[0], vec![], 0),
        table_group("C2", c(2), &[0], vec![diag(1, -1)], 1),
        table_group("C3", c(3), &[0], vec![rot3], 2),
        table_group("C4", c(4), &[0, 2], vec![rot4], 3),
        table_group("C6", c(6), &[0, 3], vec![[[1, -1], [1, 0]]], 4),
        perm_group(
            "C2xC2",
            4,
            &["(0 1)(2 3)", "(0 2)(1 3)"],
            vec![diag(-1, 1), diag(1, -1)],
            5,
        ),
        perm_group(
            "S3",
            3,
            &["(0 1)", "(0 1 2)"],
            vec![[[0, 1], [1, 0]], rot3],
            6,
        ),
        perm_group("D4", 4, &["(0 1 2 3)", "(0 2)"], vec![rot4, diag(1, -1)], 7),
        table_group(
            "Q8",
            quaternion_group(),
            &[0, 1],
            vec![diag(-1, 1), diag(1, -1)],
            8,
        ),
        perm_group("A4", 4, &["(0 1 2)", "(0 1)(2 3)"], vec![rot3, id2], 9),
    ];
    let find = |name: &str| {
        groups
            .iter()
            .find(|g| g.name == name)
            .expect("catalog group")
    };
    let hom =
        |name: &'static str, source: &'static str, target: &'static str, images: Vec<usize>| {
            let (s, t) = (find(source), find(target));
            let hom = GroupHom::from_generator_images(
                s.group.clone(),
                t.group.clone(),
                s.group.generators(),
                &images,
            )
            .expect("catalog hom");
            CatalogHom {
                name,
                source,
                target,
                hom,
            }
        };
    let s3 = |c: &str| find("S3").element(c);
    let v4 = |c: &str| find("C2xC2").element(c);
    let a4 = |c: &str| find("A4").element(c);
    let (a, b) = (v4("(0 1)(2 3)"), v4("(0 2)(1 3)"));

    let homs = vec![
        hom("id_S3", "S3", "S3", vec![s3("(0 1)"), s3("(0 1 2)")]),
        hom("id_C4", "C4", "C4", vec![1]),
        hom("incl_A3_S3", "C3", "S3", vec![s3("(0 1 2)")]),
        hom("incl_C2_C4", "C2", "C4", vec![2]),
        hom("incl_C2_S3", "C2", "S3", vec![s3("(0 1)")]),
        hom(
            "incl_V4_A4",
            "C2xC2",
            "A4",
            vec![a4("(0 1)(2 3)"), a4("(0 2)(1 3)")],
        ),
        hom("sign", "S3", "C2", vec![1, 0]),
        hom("proj_C4_C2", "C4", "C2", vec![1]),
        hom("proj_C6_C3", "C6", "C3", vec![1]),
        hom("proj_D4_V4", "D4", "C2xC2", vec![a, b]),
        hom("proj_Q8_V4", "Q8", "C2xC2", vec![a, b]),
        hom("proj_A4_C3", "A4", "C3", vec![1, 0]),
        hom("proj_V4_C2", "C2xC2", "C2", vec![1, 0]),
        hom("S3_to_C4", "S3", "C4", vec![2, 0]),
        hom("C6_to_S3", "C6", "S3", vec![s3("(0 1 2)")]),
        hom("C4_to_S3", "C4", "S3", vec![s3("(0 1)")]),
        hom("C2_to_1", "C2", "1", vec![0]),
        hom("1_to_C2", "1", "C2", vec![]),
    ];
    Catalog { groups, homs }
}
