use std::collections::HashMap;
use std::sync::Arc;

use super::{FiniteGroup, GroupRef};
use crate::error::{Error, Result};

/// `(a ∘ b)(i) = a(b(i))`: apply `b` first.
pub fn compose_permutations(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn check_bijection(degree: usize, p: &[usize]) -> Result<()> {
    if p.len() != degree {
        return Err(Error::NotBijective {
            degree,
            detail: format!("{} images given", p.len()),
        });
    }
    let mut hit = vec![false; degree];
    for &x in p {
        if x >= degree || hit[x] {
            return Err(Error::NotBijective {
                degree,
                detail: format!("{p:?}"),
            });
        }
        hit[x] = true;
    }
    Ok(())
}

/// Parses disjoint-cycle notation such as `"(0 1)(2 3)"`; `"()"` or `""` is the identity.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut rest = s.trim();
    let err = |msg: &str| Error::Parse(format!("cycle notation {s:?}: {msg}"));
    while !rest.is_empty() {
        let inner_end = rest.find(')').ok_or_else(|| err("unclosed cycle"))?;
        let inner = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let inner = &inner[..inner_end - 1];
        let points: Vec<usize> = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| err(&format!("bad point {t:?}")))
            })
            .collect::<Result<_>>()?;
        for &x in &points {
            if x >= degree {
                return Err(err(&format!("point {x} outside degree {degree}")));
            }
            if used[x] {
                return Err(err(&format!("point {x} repeated; cycles must be disjoint")));
            }
            used[x] = true;
        }
        for (i, &x) in points.iter().enumerate() {
            perm[x] = points[(i + 1) % points.len()];
        }
        rest = rest[inner_end + 1..].trim_start();
    }
    Ok(perm)
}

/// Disjoint-cycle notation with fixed points omitted; the identity prints as `()`.
pub fn format_cycles(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Closure of `generators` under composition, enumerated breadth-first from the identity.
///
/// Returns the group together with the permutation realizing each element.
pub fn group_from_permutations(
    degree: usize,
    generators: &[Vec<usize>],
) -> Result<(GroupRef, Vec<Vec<usize>>)> {
    for g in generators {
        check_bijection(degree, g)?;
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head].clone();
        head += 1;
        for s in generators {
            let h = compose_permutations(&g, s);
            if !index.contains_key(&h) {
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&compose_permutations(a, b)]);
        }
    }
    let gens = generators.iter().map(|g| index[g]).collect();
    let labels = elements.iter().map(|p| format_cycles(p)).collect();
    let group = FiniteGroup::new_unchecked(table, n)
        .with_generators(gens)
        .with_labels(labels);
    Ok((Arc::new(group), elements))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = parse_cycles("(0 1)(2 3)", 5).unwrap();
        assert_eq!(p, vec![1, 0, 3, 2, 4]);
        assert_eq!(format_cycles(&p), "(0 1)(2 3)");
        assert_eq!(parse_cycles("(0 1 2)", 3).unwrap(), vec![1, 2, 0]);
        assert_eq!(parse_cycles("()", 3).unwrap(), vec![0, 1, 2]);
        assert_eq!(format_cycles(&[0, 1]), "()");
        assert!(parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(parse_cycles("(0 5)", 3).is_err());
        assert!(parse_cycles("(0 1", 3).is_err());
        assert!(parse_cycles("(0 1) x", 3).is_err());
    }

    #[test]
    fn closure_orders() {
        let s3 = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        let (g, perms) = group_from_permutations(3, &s3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(perms[0], vec![0, 1, 2]);
        assert!(!g.is_abelian());
        g.validate().unwrap();

        let (t, _) = group_from_permutations(3, &[]).unwrap();
        assert_eq!(t.order(), 1);

        let (c4, _) = group_from_permutations(4, &[parse_cycles("(0 1 2 3)", 4).unwrap()]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        assert_eq!(c4.exponent(), 4);
    }

    #[test]
    fn multiplication_is_composition() {
        let gens = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(1 2)", 3).unwrap(),
        ];
        let (g, perms) = group_from_permutations(3, &gens).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(
                    perms[g.mul(a, b)],
                    compose_permutations(&perms[a], &perms[b])
                );
            }
        }
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(matches!(
            group_from_permutations(3, &[vec![0, 0, 1]]),
            Err(Error::NotBijective { .. })
        ));
        assert!(group_from_permutations(3, &[vec![0, 1]]).is_err());
    }
}
