use super::{describe_hom, CheckReport, HypothesisStatus, Pending, SearchOptions};
use crate::error::{Error, Result};
use crate::groups::{
    all_subgroups, conjugate_hom, double_cosets, factorize, is_internal_direct_product, pullback,
    restrict_hom_to, same_group, DoubleCosetDecomposition, GroupHom, Subgroup,
};
use crate::rep::{direct_sum, induce_along, restrict_along, Representation};

fn composable(first: &GroupHom, second: &GroupHom) -> Result<()> {
    if !same_group(first.codomain(), second.domain()) {
        return Err(Error::GroupMismatch("maps do not compose".into()));
    }
    Ok(())
}

/// At most one report of each pair is built when preconditions fail.
fn both_not_applicable(p1: Pending, p2: Pending, reason: String) -> [CheckReport; 2] {
    [p1.not_applicable(reason.clone()), p2.not_applicable(reason)]
}

/// Checks that `k0` and `small` split `whole` as an internal direct product and that `k0` acts trivially on `u`.
fn check_trivial_complement(
    whole: &Subgroup,
    small: &Subgroup,
    k0: &Subgroup,
    u: &Representation,
) -> Result<(), String> {
    if !same_group(k0.parent(), u.group()) {
        return Err("K₀ lives in a different group".into());
    }
    if !is_internal_direct_product(whole, small, k0) {
        return Err(format!(
            "kernel of order {} is not the internal direct product of orders {} and {}",
            whole.order(),
            small.order(),
            k0.order()
        ));
    }
    if let Some(&k) = k0.elements().iter().find(|&&k| !u.matrix(k).is_identity()) {
        return Err(format!("K₀ acts nontrivially on U (element {k})"));
    }
    Ok(())
}

/// The first subgroup `K₀` (in subgroup order) with `whole = small × K₀` acting trivially on `u`.
pub fn find_trivial_complement(
    whole: &Subgroup,
    small: &Subgroup,
    u: &Representation,
) -> Option<Subgroup> {
    all_subgroups(whole.parent())
        .into_iter()
        .filter(|k0| k0.order() * small.order() == whole.order())
        .find(|k0| check_trivial_complement(whole, small, k0, u).is_ok())
}

/// Lemma for a surjection `α: G ↠ H` and `Ker α ≤ G₀ ≤ G`, with `H₀ = α(G₀)`:
/// (1) `Res^H_{H₀} Ind_α V ≅ Ind_{α₀} Res^G_{G₀} V` and
/// (2) `Res_α Ind_{H₀}^H U ≅ Ind_{G₀}^G Res_{α₀} U`.
///
/// `u` is a module over `α(G₀)` realized as a group ([`Subgroup::to_group`]).
pub fn check_lemma_mackey_1(
    alpha: &GroupHom,
    g0: &Subgroup,
    v: &Representation,
    u: &Representation,
    opts: &SearchOptions,
) -> Result<[CheckReport; 2]> {
    let inputs = format!(
        "{}, |G₀|={}, dim V={}, dim U={}",
        describe_hom("α", alpha),
        g0.order(),
        v.dim(),
        u.dim()
    );
    let p1 = Pending::new("lemma_mackey_1_1", inputs.clone(), opts);
    let p2 = Pending::new("lemma_mackey_1_2", inputs, opts);
    if !alpha.is_surjective() {
        return Ok(both_not_applicable(p1, p2, "α is not surjective".into()));
    }
    let h0 = alpha.image_of(g0)?;
    if !alpha.kernel().is_subset_of(g0) {
        return Ok(both_not_applicable(
            p1,
            p2,
            "Ker α is not contained in G₀".into(),
        ));
    }
    let alpha0 = restrict_hom_to(alpha, g0, &h0)?;

    let lhs = restrict_along(&h0.inclusion(), &induce_along(alpha, v)?.rep)?;
    let rhs = induce_along(&alpha0, &restrict_along(&g0.inclusion(), v)?)?.rep;
    let first = p1.compare(HypothesisStatus::Satisfied, lhs, rhs)?;

    let lhs = restrict_along(alpha, &induce_along(&h0.inclusion(), u)?.rep)?;
    let rhs = induce_along(&g0.inclusion(), &restrict_along(&alpha0, u)?)?.rep;
    let second = p2.compare(HypothesisStatus::Satisfied, lhs, rhs)?;
    Ok([first, second])
}

/// Lemma for surjections `γ: B ↠ A`, `β: A ↠ C` with `α = βγ`:
/// (1) `Ind_β V ≅ Ind_α Res_γ V` and
/// (2) `Ind_γ U ≅ Res_β Ind_α U` when `Ker α = Ker γ × K₀` with `K₀` trivial on `U`.
pub fn check_lemma_mackey_2(
    gamma: &GroupHom,
    beta: &GroupHom,
    v: &Representation,
    u: &Representation,
    k0: Option<&Subgroup>,
    opts: &SearchOptions,
) -> Result<[CheckReport; 2]> {
    composable(gamma, beta)?;
    let inputs = format!(
        "{}, {}, dim V={}, dim U={}, |K₀|={}",
        describe_hom("γ", gamma),
        describe_hom("β", beta),
        v.dim(),
        u.dim(),
        k0.map_or("-".to_string(), |k| k.order().to_string())
    );
    let p1 = Pending::new("lemma_mackey_2_1", inputs.clone(), opts);
    let p2 = Pending::new("lemma_mackey_2_2", inputs, opts);
    if !gamma.is_surjective() || !beta.is_surjective() {
        return Ok(both_not_applicable(
            p1,
            p2,
            "γ and β must be surjective".into(),
        ));
    }
    let alpha = gamma.then(beta)?;

    let lhs = induce_along(beta, v)?.rep;
    let rhs = induce_along(&alpha, &restrict_along(gamma, v)?)?.rep;
    let first = p1.compare(HypothesisStatus::Satisfied, lhs, rhs)?;

    let second = match k0 {
        None => p2.not_applicable("no K₀ supplied".into()),
        Some(k0) => match check_trivial_complement(alpha.kernel(), gamma.kernel(), k0, u) {
            Err(reason) => p2.not_applicable(reason),
            Ok(()) => {
                let lhs = induce_along(gamma, u)?.rep;
                let rhs = restrict_along(beta, &induce_along(&alpha, u)?.rep)?;
                p2.compare(HypothesisStatus::Satisfied, lhs, rhs)?
            }
        },
    };
    Ok([first, second])
}

/// A commutative square `α γ = i ε` with `γ: B → H`, `α: H ↠ L`, `ε: B ↠ C`, `i: C ↪ L`.
#[derive(Clone, Debug)]
pub struct MackeySquare {
    pub alpha: GroupHom,
    pub i: GroupHom,
    pub gamma: GroupHom,
    pub epsilon: GroupHom,
}

impl MackeySquare {
    fn check_shapes(&self) -> Result<()> {
        composable(&self.gamma, &self.alpha)?;
        composable(&self.epsilon, &self.i)?;
        if !same_group(self.alpha.codomain(), self.i.codomain())
            || !same_group(self.gamma.domain(), self.epsilon.domain())
        {
            return Err(Error::GroupMismatch("maps do not form a square".into()));
        }
        Ok(())
    }

    /// The lemma's hypotheses; on success, notes on the factorization through `Im γ`.
    pub fn conditions(&self) -> Result<Vec<String>, String> {
        if !self.alpha.is_surjective() {
            return Err("α is not surjective".into());
        }
        if !self.epsilon.is_surjective() {
            return Err("ε is not surjective".into());
        }
        if !self.i.is_injective() {
            return Err("i is not injective".into());
        }
        let left = self.gamma.then(&self.alpha).map_err(|e| e.to_string())?;
        let right = self.epsilon.then(&self.i).map_err(|e| e.to_string())?;
        if left.map() != right.map() {
            return Err("square does not commute".into());
        }
        if !self.alpha.kernel().is_subset_of(self.gamma.image()) {
            return Err("Ker α is not contained in Im γ".into());
        }
        // γ = ι γ₀; ε factors through ε̄: Im γ ↠ C because Ker γ ≤ Ker ε.
        let (gamma0, iota) = factorize(&self.gamma);
        let mut bar = vec![usize::MAX; gamma0.codomain().order()];
        for b in self.gamma.domain().elements() {
            let slot = &mut bar[gamma0.apply(b)];
            let e = self.epsilon.apply(b);
            if *slot != usize::MAX && *slot != e {
                return Err("ε does not factor through Im γ".into());
            }
            *slot = e;
        }
        let eps_bar = GroupHom::from_map(
            gamma0.codomain().clone(),
            self.epsilon.codomain().clone(),
            bar,
        )
        .map_err(|e| format!("ε̄ is not a homomorphism: {e}"))?;
        let upper = iota.then(&self.alpha).map_err(|e| e.to_string())?;
        let lower = eps_bar.then(&self.i).map_err(|e| e.to_string())?;
        if upper.map() != lower.map() {
            return Err("α ι ≠ i ε̄".into());
        }
        Ok(vec![format!(
            "ε̄: |Im γ|={} ↠ |C|={}, α ι = i ε̄",
            eps_bar.domain().order(),
            eps_bar.codomain().order()
        )])
    }
}

/// (1) `Res_i Ind_α V ≅ Ind_ε Res_γ V` and
/// (2) `Ind_γ U ≅ Res_α Ind_i Ind_ε U` when `Ker ε = Ker γ × K₀` with `K₀` trivial on `U`.
pub fn check_lemma_mackey_3(
    square: &MackeySquare,
    v: &Representation,
    u: &Representation,
    k0: Option<&Subgroup>,
    opts: &SearchOptions,
) -> Result<[CheckReport; 2]> {
    square.check_shapes()?;
    let inputs = format!(
        "{}, {}, {}, {}, dim V={}, dim U={}",
        describe_hom("α", &square.alpha),
        describe_hom("i", &square.i),
        describe_hom("γ", &square.gamma),
        describe_hom("ε", &square.epsilon),
        v.dim(),
        u.dim()
    );
    let mut p1 = Pending::new("lemma_mackey_3_1", inputs.clone(), opts);
    let mut p2 = Pending::new("lemma_mackey_3_2", inputs, opts);
    let notes = match square.conditions() {
        Ok(n) => n,
        Err(reason) => return Ok(both_not_applicable(p1, p2, reason)),
    };
    p1.notes.extend(notes.iter().cloned());
    p2.notes.extend(notes);

    let lhs = restrict_along(&square.i, &induce_along(&square.alpha, v)?.rep)?;
    let rhs = induce_along(&square.epsilon, &restrict_along(&square.gamma, v)?)?.rep;
    let first = p1.compare(HypothesisStatus::Satisfied, lhs, rhs)?;

    let second = match k0 {
        None => p2.not_applicable("no K₀ supplied".into()),
        Some(k0) => {
            match check_trivial_complement(square.epsilon.kernel(), square.gamma.kernel(), k0, u) {
                Err(reason) => p2.not_applicable(reason),
                Ok(()) => {
                    let lhs = induce_along(&square.gamma, u)?.rep;
                    let inner = induce_along(&square.epsilon, u)?.rep;
                    let rhs = restrict_along(&square.alpha, &induce_along(&square.i, &inner)?.rep)?;
                    p2.compare(HypothesisStatus::Satisfied, lhs, rhs)?
                }
            }
        }
    };
    Ok([first, second])
}

/// The two squares behind the summand at `x`, and the pullback map `γ_x`.
#[derive(Clone, Debug)]
pub struct MackeyInstance {
    pub representative: usize,
    /// `γ_x: B_x → K`, `δ_x: B_x → H`.
    pub gamma: GroupHom,
    pub delta: GroupHom,
    /// `ˣα₀: K ↠ ˣα(K)`, `i_x`, `γ_x`, `ε_x`.
    pub first: MackeySquare,
    /// `β₀: H ↠ β(H)`, `j_x`, `δ_x`, `ε_x`.
    pub second: MackeySquare,
}

/// Builds, for each double coset `β(H) x α(K)`, the squares used to identify its summand.
pub fn mackey_squares(alpha: &GroupHom, beta: &GroupHom) -> Result<Vec<MackeyInstance>> {
    if !same_group(alpha.codomain(), beta.codomain()) {
        return Err(Error::GroupMismatch(
            "α and β need a common codomain".into(),
        ));
    }
    let g = alpha.codomain();
    let id = GroupHom::identity(g);
    let decomposition = double_cosets(beta.image(), alpha.image())?;
    let beta0 = restrict_hom_to(beta, &Subgroup::whole(beta.domain()), beta.image())?;
    let mut out = Vec::with_capacity(decomposition.representatives.len());
    for &x in &decomposition.representatives {
        let xa = conjugate_hom(alpha, x)?;
        let conj_image = xa.image().clone();
        let meet = beta.image().intersection(&conj_image);
        let pb = pullback(&xa, beta)?;
        let i_x = restrict_hom_to(&id, &meet, &conj_image)?;
        let j_x = restrict_hom_to(&id, &meet, beta.image())?;
        let xa0 = restrict_hom_to(&xa, &Subgroup::whole(alpha.domain()), &conj_image)?;
        let eps_map = pb
            .to_right
            .map()
            .iter()
            .map(|&h| {
                meet.position(beta.apply(h))
                    .expect("β(h) = ˣα(k) lies in the intersection")
            })
            .collect();
        let epsilon = GroupHom::from_map(pb.group.clone(), i_x.domain().clone(), eps_map)?;
        out.push(MackeyInstance {
            representative: x,
            gamma: pb.to_left.clone(),
            delta: pb.to_right.clone(),
            first: MackeySquare {
                alpha: xa0,
                i: i_x,
                gamma: pb.to_left.clone(),
                epsilon: epsilon.clone(),
            },
            second: MackeySquare {
                alpha: beta0.clone(),
                i: j_x,
                gamma: pb.to_right,
                epsilon,
            },
        });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct MackeySummand {
    pub representative: usize,
    pub pullback_order: usize,
    pub offset: usize,
    pub dim: usize,
}

/// `⊕_x Ind_{δ_x} Res_{γ_x} V` over `x ∈ [β(H)\G/α(K)]`, summands in increasing order of `x`.
#[derive(Clone, Debug)]
pub struct MackeyDecomposition {
    pub rep: Representation,
    pub summands: Vec<MackeySummand>,
    pub double_cosets: DoubleCosetDecomposition,
}

pub fn build_mackey_rhs(
    alpha: &GroupHom,
    beta: &GroupHom,
    v: &Representation,
) -> Result<MackeyDecomposition> {
    if !same_group(alpha.codomain(), beta.codomain()) {
        return Err(Error::GroupMismatch(
            "α and β need a common codomain".into(),
        ));
    }
    let decomposition = double_cosets(beta.image(), alpha.image())?;
    let mut parts = Vec::with_capacity(decomposition.representatives.len());
    let mut orders = Vec::with_capacity(parts.capacity());
    for &x in &decomposition.representatives {
        let xa = conjugate_hom(alpha, x)?;
        let pb = pullback(&xa, beta)?;
        let summand = induce_along(&pb.to_right, &restrict_along(&pb.to_left, v)?)?.rep;
        orders.push(pb.group.order());
        parts.push(summand);
    }
    let refs: Vec<&Representation> = parts.iter().collect();
    let sum = direct_sum(beta.domain(), v.field(), &refs)?;
    let summands = decomposition
        .representatives
        .iter()
        .zip(&orders)
        .zip(sum.offsets.iter().zip(&sum.dims))
        .map(|((&x, &n), (&offset, &dim))| MackeySummand {
            representative: x,
            pullback_order: n,
            offset,
            dim,
        })
        .collect();
    Ok(MackeyDecomposition {
        rep: sum.rep,
        summands,
        double_cosets: decomposition,
    })
}

/// `Res_β Ind_α V ≅ ⊕_x Ind_{δ_x} Res_{γ_x} V`.
///
/// Records the summand dimensions (their sum is compared with the left side
/// before any search) and validates the kernel conditions that the proof uses
/// at each double coset.
pub fn check_mackey(
    alpha: &GroupHom,
    beta: &GroupHom,
    v: &Representation,
    opts: &SearchOptions,
) -> Result<CheckReport> {
    let inputs = format!(
        "{}, {}, dim V={}",
        describe_hom("α", alpha),
        describe_hom("β", beta),
        v.dim()
    );
    let mut pending = Pending::new("mackey", inputs, opts);
    let lhs = restrict_along(beta, &induce_along(alpha, v)?.rep)?;
    let rhs = build_mackey_rhs(alpha, beta, v)?;
    let dims: Vec<String> = rhs.summands.iter().map(|s| s.dim.to_string()).collect();
    let total: usize = rhs.summands.iter().map(|s| s.dim).sum();
    pending.note(format!(
        "{} double cosets, summand dims [{}], sum {} vs left {}",
        rhs.summands.len(),
        dims.join(", "),
        total,
        lhs.dim()
    ));
    for inst in mackey_squares(alpha, beta)? {
        let x = inst.representative;
        for (label, square) in [("first", &inst.first), ("second", &inst.second)] {
            if let Err(e) = square.conditions() {
                pending.note(format!("x={x}: {label} square fails: {e}"));
            }
        }
        let kernel = inst.first.epsilon.kernel();
        if !is_internal_direct_product(kernel, inst.delta.kernel(), inst.gamma.kernel()) {
            pending.note(format!("x={x}: Ker ε_x ≠ Ker δ_x × Ker γ_x"));
        }
    }
    pending.compare(HypothesisStatus::Satisfied, lhs, rhs.rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{
        direct_product, group_from_permutations, parse_cycles, subgroup_generated, FiniteGroup,
        GroupRef,
    };
    use crate::linalg::Field;
    use crate::rep::{regular_rep, trivial_rep};
    use crate::theorems::Verdict;

    const Q: Field = Field::Rationals;

    fn s3() -> GroupRef {
        let gens = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        group_from_permutations(3, &gens).unwrap().0
    }

    fn assert_pass(r: &CheckReport) {
        assert!(
            r.is_pass(),
            "{} failed: {:?} {:?} {:?}",
            r.check_name,
            r.hypothesis,
            r.verdict,
            r.notes
        );
        r.reverify().unwrap();
    }

    fn c4_c6_maps(g: &GroupRef) -> (GroupHom, GroupHom) {
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let alpha =
            GroupHom::from_generator_images(FiniteGroup::cyclic(4), g.clone(), &[1], &[t]).unwrap();
        let beta =
            GroupHom::from_generator_images(FiniteGroup::cyclic(6), g.clone(), &[1], &[c]).unwrap();
        (alpha, beta)
    }

    #[test]
    fn mackey_worked_instance() {
        let g = s3();
        let (alpha, beta) = c4_c6_maps(&g);
        let v = regular_rep(alpha.domain(), Q);
        let rhs = build_mackey_rhs(&alpha, &beta, &v).unwrap();
        assert_eq!(rhs.summands.len(), 1);
        assert_eq!(rhs.summands[0].pullback_order, 4);
        assert_eq!(rhs.summands[0].dim, 6);
        let r = check_mackey(&alpha, &beta, &v, &SearchOptions::default()).unwrap();
        assert_pass(&r);
        assert_eq!((r.lhs_dim, r.rhs_dim), (6, 6));
        assert!(
            !r.notes
                .iter()
                .any(|n| n.contains("fails") || n.contains('≠')),
            "{:?}",
            r.notes
        );
    }

    #[test]
    fn mackey_classical_and_identity() {
        let g = s3();
        let opts = SearchOptions::default();
        let id = GroupHom::identity(&g);
        let r = check_mackey(&id, &id, &regular_rep(&g, Q), &opts).unwrap();
        assert_pass(&r);
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let a3 = subgroup_generated(&g, &[c]).unwrap().inclusion();
        let ht = subgroup_generated(&g, &[t]).unwrap().inclusion();
        let rhs = build_mackey_rhs(&a3, &ht, &trivial_rep(a3.domain(), Q, 1)).unwrap();
        assert_eq!(rhs.summands.len(), 1);
        assert_eq!(rhs.rep.dim(), 2);
        let rhs = build_mackey_rhs(&ht, &ht, &trivial_rep(ht.domain(), Q, 1)).unwrap();
        assert_eq!(
            rhs.summands.iter().map(|s| s.dim).collect::<Vec<_>>(),
            vec![1, 2]
        );
        for field in [Q, Field::Prime(2), Field::Prime(3)] {
            let r = check_mackey(&ht, &ht, &regular_rep(ht.domain(), field), &opts).unwrap();
            assert_pass(&r);
        }
    }

    #[test]
    fn mackey_squares_satisfy_lemma() {
        let g = s3();
        let (alpha, beta) = c4_c6_maps(&g);
        let v = regular_rep(alpha.domain(), Q);
        let opts = SearchOptions::default();
        for inst in mackey_squares(&alpha, &beta).unwrap() {
            let u = restrict_along(&inst.gamma, &v).unwrap();
            let k0 = inst.gamma.kernel().clone();
            let [a, _] = check_lemma_mackey_3(&inst.first, &v, &u, None, &opts).unwrap();
            assert_pass(&a);
            let w = regular_rep(beta.domain(), Q);
            let [b, c] = check_lemma_mackey_3(&inst.second, &w, &u, Some(&k0), &opts).unwrap();
            assert_pass(&b);
            assert_pass(&c);
        }
    }

    #[test]
    fn lemma_one_examples() {
        let g = s3();
        let opts = SearchOptions::default();
        let images: Vec<usize> = g
            .generators()
            .iter()
            .map(|&x| usize::from(g.element_order(x) == 2))
            .collect();
        let sign = GroupHom::from_generator_images(
            g.clone(),
            FiniteGroup::cyclic(2),
            g.generators(),
            &images,
        )
        .unwrap();
        let a3 = sign.kernel().clone();
        let h0 = sign.image_of(&a3).unwrap();
        let u = trivial_rep(&h0.to_group(), Q, 1);
        let [a, b] = check_lemma_mackey_1(&sign, &a3, &regular_rep(&g, Q), &u, &opts).unwrap();
        assert_pass(&a);
        assert_pass(&b);
        assert_eq!(a.lhs_dim, 2);
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let bad = subgroup_generated(&g, &[t]).unwrap();
        let [a, _] = check_lemma_mackey_1(&sign, &bad, &regular_rep(&g, Q), &u, &opts).unwrap();
        assert_eq!(a.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn lemma_two_examples() {
        let opts = SearchOptions::default();
        let c2 = FiniteGroup::cyclic(2);
        let v4 = direct_product(&c2, &c2);
        let gamma = v4.proj_left.clone();
        let beta = GroupHom::identity(&c2);
        let v = regular_rep(&c2, Q);
        let u = restrict_along(&v4.proj_left, &regular_rep(&c2, Q)).unwrap();
        let k0 = find_trivial_complement(gamma.then(&beta).unwrap().kernel(), gamma.kernel(), &u)
            .unwrap();
        assert!(k0.is_trivial(), "Ker γ already equals Ker α");
        let [a, b] = check_lemma_mackey_2(&gamma, &beta, &v, &u, Some(&k0), &opts).unwrap();
        assert_pass(&a);
        assert_pass(&b);

        // B = C2×C2 ↠ C2 ↠ 1: Ker α = B = Ker γ × K₀, and U is pulled back along the projection killing K₀.
        let one = FiniteGroup::trivial();
        let to_one = GroupHom::trivial(&c2, &one);
        let u = restrict_along(&v4.proj_right, &regular_rep(&c2, Q)).unwrap();
        let alpha = gamma.then(&to_one).unwrap();
        let k0 = find_trivial_complement(alpha.kernel(), gamma.kernel(), &u).unwrap();
        assert_eq!(k0.order(), 2);
        let [a, b] = check_lemma_mackey_2(&gamma, &to_one, &v, &u, Some(&k0), &opts).unwrap();
        assert_pass(&a);
        assert_pass(&b);
        let moving = regular_rep(&v4.group, Q);
        let [_, b] = check_lemma_mackey_2(&gamma, &to_one, &v, &moving, Some(&k0), &opts).unwrap();
        assert_eq!(b.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn lemma_three_rejects_bad_square() {
        let g = s3();
        let opts = SearchOptions::default();
        let id = GroupHom::identity(&g);
        let one = FiniteGroup::trivial();
        let triv_in = GroupHom::trivial(&one, &g);
        // α = id, γ: 1 → S3: Ker α = 1 ⊆ Im γ holds, but ε: 1 → S3 is not onto.
        let sq = MackeySquare {
            alpha: id.clone(),
            i: id.clone(),
            gamma: triv_in.clone(),
            epsilon: triv_in,
        };
        let v = regular_rep(&g, Q);
        let u = trivial_rep(&one, Q, 1);
        let [a, b] = check_lemma_mackey_3(&sq, &v, &u, None, &opts).unwrap();
        assert_eq!(a.verdict, Verdict::NotApplicable);
        assert_eq!(b.verdict, Verdict::NotApplicable);
        // Ker α ⊄ Im γ: α: S3 ↠ 1 with γ: 1 → S3.
        let to_one = GroupHom::trivial(&g, &one);
        let sq = MackeySquare {
            alpha: to_one,
            i: GroupHom::identity(&one),
            gamma: GroupHom::trivial(&one, &g),
            epsilon: GroupHom::identity(&one),
        };
        let [a, _] = check_lemma_mackey_3(&sq, &v, &u, None, &opts).unwrap();
        assert!(matches!(&a.hypothesis, HypothesisStatus::NotApplicable(r) if r.contains("Im γ")));
    }
}
