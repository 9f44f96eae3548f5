//! Branch functions: characteristic functions of cyclotomic cosets, assembly
//! of global inverses from per-branch local inverses, and the two-branch
//! family with its census.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{euler_phi, gcd, CyclotomicSys, FieldCtx, FieldElem};
use crate::mult::mod_inverse;
use crate::oracle::{invert_injective, PointMap};
use crate::poly::Poly;

/// The closed-form indicator of the coset C_i on F_q^*:
/// (1/ell) * sum_{j<ell} (x / gamma^i)^{js}. Its value is 1 on C_i and 0 on
/// the rest of F_q^* (at x = 0 it evaluates to 1/ell, which the assembler
/// corrects separately).
pub fn coset_characteristic(ctx: &FieldCtx, sys: &CyclotomicSys, i: u64) -> Result<Poly> {
    if i >= sys.ell() {
        return Err(Error::IndexOutOfRange);
    }
    let ell_inv = ctx.inv(ctx.from_int(sys.ell()))?;
    let s = sys.s();
    let gamma = ctx.gamma();
    let mut terms = Vec::with_capacity(sys.ell() as usize);
    for j in 0..sys.ell() {
        let coeff = ctx.mul(
            ell_inv,
            ctx.pow(gamma, -((i * j * s) as i64)).expect("gamma nonzero"),
        );
        terms.push(((j * s) as usize, coeff));
    }
    Ok(Poly::from_terms(ctx, &terms))
}

/// One block of a branch function: the restriction of f to a set of domain
/// elements, with an optional closed-form local inverse. When the hint is
/// present the assembler verifies it on every point of the block before use;
/// otherwise the local inverse is interpolated from the brute-force table.
#[derive(Clone, Debug)]
pub struct Branch {
    pub map: PointMap,
    pub inverse_hint: Option<Poly>,
}

impl Branch {
    pub fn new(map: PointMap) -> Branch {
        Branch {
            map,
            inverse_hint: None,
        }
    }

    pub fn with_inverse(map: PointMap, inverse: Poly) -> Branch {
        Branch {
            map,
            inverse_hint: Some(inverse),
        }
    }
}

/// A partition of a domain into branches, with an optional cyclotomic system
/// for closed-form indicators when branch images are coset unions.
#[derive(Clone, Debug)]
pub struct BranchSystem {
    sys: Option<CyclotomicSys>,
    branches: Vec<Branch>,
}

impl BranchSystem {
    pub fn new(
        ctx: &FieldCtx,
        sys: Option<CyclotomicSys>,
        branches: Vec<Branch>,
    ) -> Result<BranchSystem> {
        let mut dom_seen = vec![false; ctx.q() as usize];
        let mut img_seen = vec![false; ctx.q() as usize];
        for br in &branches {
            if !br.map.is_injective() {
                return Err(Error::NotInjectiveOnBranch);
            }
            for &x in br.map.domain() {
                let r = x.rank() as usize;
                if dom_seen[r] {
                    return Err(Error::InvalidPointMap(
                        "branch domains overlap".into(),
                    ));
                }
                dom_seen[r] = true;
            }
            for &y in br.map.images() {
                let r = y.rank() as usize;
                if img_seen[r] {
                    return Err(Error::BranchesNotDisjoint);
                }
                img_seen[r] = true;
            }
            if let Some(hint) = &br.inverse_hint {
                for &x in br.map.domain() {
                    if hint.eval(ctx, br.map.apply(x)) != x {
                        return Err(Error::HypothesisFailed(
                            "local inverse hint does not invert its branch".into(),
                        ));
                    }
                }
            }
        }
        Ok(BranchSystem { sys, branches })
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    /// The branch function as one table over the whole domain.
    pub fn f_table(&self, ctx: &FieldCtx) -> PointMap {
        let mut pairs: Vec<(FieldElem, FieldElem)> = self
            .branches
            .iter()
            .flat_map(|br| {
                br.map
                    .domain()
                    .iter()
                    .zip(br.map.images())
                    .map(|(&x, &y)| (x, y))
            })
            .collect();
        pairs.sort_unstable_by_key(|&(x, _)| x.rank());
        let (domain, images) = pairs.into_iter().unzip();
        PointMap::new(ctx, domain, images).expect("domains checked disjoint")
    }
}

/// Indicator polynomial of a set: a sum of closed-form coset characteristic
/// functions when the set is a union of cosets away from zero, otherwise the
/// exact interpolated 0/1 indicator on all of F_q.
fn indicator_poly(ctx: &FieldCtx, sys: Option<&CyclotomicSys>, set: &[FieldElem]) -> Result<Poly> {
    if let Some(sys) = sys {
        if !set.iter().any(|&x| x.rank() == 0) {
            let s = sys.s();
            let mut count = vec![0u64; sys.ell() as usize];
            for &x in set {
                count[ctx.coset_index(sys, x)? as usize] += 1;
            }
            let full_cosets: Vec<u64> = (0..sys.ell()).filter(|&i| count[i as usize] == s).collect();
            let covered: u64 = full_cosets.iter().map(|_| s).sum();
            if covered == set.len() as u64 {
                let mut acc = Poly::zero();
                for &i in &full_cosets {
                    acc = acc.add(ctx, &coset_characteristic(ctx, sys, i)?);
                }
                return Ok(acc);
            }
        }
    }
    let mut in_set = vec![false; ctx.q() as usize];
    for &x in set {
        in_set[x.rank() as usize] = true;
    }
    let nodes: Vec<(FieldElem, FieldElem)> = ctx
        .elements()
        .map(|x| {
            let v = if in_set[x.rank() as usize] {
                ctx.one()
            } else {
                ctx.zero()
            };
            (x, v)
        })
        .collect();
    Poly::interpolate(ctx, &nodes)
}

/// Assembles the global inverse sum_i chi_{B_i}(x) * f_i^{-1}(x), normalized.
/// The value at x = 0 (where the closed-form coset indicators read 1/ell) is
/// corrected through the explicit zero indicator 1 - x^{q-1} whenever 0 lies
/// in the image of the branch function.
pub fn assemble_branch_inverse(ctx: &FieldCtx, bs: &BranchSystem) -> Result<Poly> {
    let mut acc = Poly::zero();
    let mut zero_preimage: Option<FieldElem> = None;
    for br in &bs.branches {
        let image: Vec<FieldElem> = br.map.images().to_vec();
        for (&x, &y) in br.map.domain().iter().zip(br.map.images()) {
            if y.rank() == 0 {
                zero_preimage = Some(x);
            }
        }
        let local_inverse = match &br.inverse_hint {
            Some(p) => p.clone(),
            None => {
                let inv = invert_injective(&br.map)?;
                let nodes: Vec<(FieldElem, FieldElem)> = inv
                    .domain()
                    .iter()
                    .zip(inv.images())
                    .map(|(&a, &b)| (a, b))
                    .collect();
                Poly::interpolate(ctx, &nodes)?
            }
        };
        let ind = indicator_poly(ctx, bs.sys.as_ref(), &image)?;
        acc = acc
            .add(ctx, &ind.mul(ctx, &local_inverse).normalize(ctx))
            .normalize(ctx);
    }
    if let Some(v0) = zero_preimage {
        let at0 = acc.eval(ctx, ctx.zero());
        let delta = ctx.sub(v0, at0);
        if delta.rank() != 0 {
            // (v0 - P(0)) * (1 - x^{q-1})
            let fix = Poly::from_terms(
                ctx,
                &[(0, delta), ((ctx.q() - 1) as usize, ctx.neg(delta))],
            );
            acc = acc.add(ctx, &fix);
        }
    }
    Ok(acc.normalize(ctx))
}

/// The two-branch family over odd q: 0 at 0, a1 x^{r1} on the non-squares,
/// a2 x^{r2} on the squares. Construction verifies that the closed polynomial
/// form (a1/2) x^{r1} (1 - x^{(q-1)/2}) + (a2/2) x^{r2} (1 + x^{(q-1)/2})
/// agrees with the case definition on every point.
#[derive(Clone, Debug)]
pub struct TwoBranchForm {
    pub a1: FieldElem,
    pub a2: FieldElem,
    pub r1: u64,
    pub r2: u64,
}

impl TwoBranchForm {
    pub fn new(ctx: &FieldCtx, a1: FieldElem, a2: FieldElem, r1: u64, r2: u64) -> Result<TwoBranchForm> {
        if ctx.q() % 2 == 0 {
            return Err(Error::EvenCharacteristic);
        }
        if a1.rank() == 0 || a2.rank() == 0 {
            return Err(Error::ZeroArgument);
        }
        if r1 == 0 || r2 == 0 || r1 > ctx.q() - 1 || r2 > ctx.q() - 1 {
            return Err(Error::BadIndex);
        }
        let form = TwoBranchForm { a1, a2, r1, r2 };
        let closed = form.closed_poly(ctx);
        let table = form.table(ctx);
        for x in ctx.elements() {
            assert_eq!(
                closed.eval(ctx, x),
                table.apply(x),
                "closed form must agree with the case definition"
            );
        }
        Ok(form)
    }

    /// (a1/2) x^{r1} (1 - x^s) + (a2/2) x^{r2} (1 + x^s) with s = (q-1)/2.
    pub fn closed_poly(&self, ctx: &FieldCtx) -> Poly {
        let s = ((ctx.q() - 1) / 2) as usize;
        let half = ctx.inv(ctx.from_int(2)).expect("odd q");
        let c1 = ctx.mul(self.a1, half);
        let c2 = ctx.mul(self.a2, half);
        Poly::from_terms(
            ctx,
            &[
                (self.r1 as usize, c1),
                (self.r1 as usize + s, ctx.neg(c1)),
                (self.r2 as usize, c2),
                (self.r2 as usize + s, c2),
            ],
        )
        .normalize(ctx)
    }

    /// The case definition as a full table.
    pub fn table(&self, ctx: &FieldCtx) -> PointMap {
        two_branch_table(ctx, self.a1, self.a2, self.r1, self.r2)
    }
}

fn two_branch_table(ctx: &FieldCtx, a1: FieldElem, a2: FieldElem, r1: u64, r2: u64) -> PointMap {
    PointMap::from_fn(ctx, ctx.elements().collect(), |x| {
        if x.rank() == 0 {
            return ctx.zero();
        }
        if ctx.log(x).unwrap() % 2 == 0 {
            ctx.mul(a2, ctx.pow(x, r2 as i64).unwrap())
        } else {
            ctx.mul(a1, ctx.pow(x, r1 as i64).unwrap())
        }
    })
}

/// Raw criterion, no exhaustive cross-check:
/// gcd(r1 r2, (q-1)/2) = 1 and {(-1)^{r1} a1^{(q-1)/2}, a2^{(q-1)/2}} = {-1, 1}.
fn two_branch_criterion(ctx: &FieldCtx, a1: FieldElem, a2: FieldElem, r1: u64, r2: u64) -> bool {
    let h2 = (ctx.q() - 1) / 2;
    if gcd(r1 * r2, h2) != 1 {
        return false;
    }
    let one = ctx.one();
    let m1 = ctx.neg(one);
    let u = ctx.mul(
        ctx.pow(m1, r1 as i64).unwrap(),
        ctx.pow(a1, h2 as i64).unwrap(),
    );
    let v = ctx.pow(a2, h2 as i64).unwrap();
    (u == m1 && v == one) || (u == one && v == m1)
}

/// The two-branch permutation criterion, asserted against the exhaustive
/// permutation test of the assembled branch table.
pub fn check_two_branch_pp(ctx: &FieldCtx, form: &TwoBranchForm) -> Result<bool> {
    if ctx.q() % 2 == 0 {
        return Err(Error::EvenCharacteristic);
    }
    let criterion = two_branch_criterion(ctx, form.a1, form.a2, form.r1, form.r2);
    let direct = form.table(ctx).is_permutation();
    assert_eq!(
        criterion, direct,
        "two-branch criterion must match the exhaustive test"
    );
    Ok(criterion)
}

/// The parity split of the criterion: given gcd(r1 r2, (q-1)/2) = 1, for odd
/// r1 the form is a PP iff a1 a2 is a square, for even r1 iff it is not.
pub fn two_branch_corollary_pp(ctx: &FieldCtx, form: &TwoBranchForm) -> Result<bool> {
    if ctx.q() % 2 == 0 {
        return Err(Error::EvenCharacteristic);
    }
    let h2 = (ctx.q() - 1) / 2;
    if gcd(form.r1 * form.r2, h2) != 1 {
        return Ok(false);
    }
    let prod = ctx.mul(form.a1, form.a2);
    let is_square = ctx.pow(prod, h2 as i64).unwrap() == ctx.one();
    Ok(if form.r1 % 2 == 1 { is_square } else { !is_square })
}

/// Inverts a two-branch PP by branch assembly: each monomial branch
/// a x^r : C_u -> C_v gets the local inverse c x^b with b r = 1 mod (q-1)/2
/// and c pinned by one sample point (then verified on the whole block).
pub fn invert_two_branch(ctx: &FieldCtx, form: &TwoBranchForm) -> Result<Poly> {
    if !check_two_branch_pp(ctx, form)? {
        return Err(Error::NotPP);
    }
    let h2 = (ctx.q() - 1) / 2;
    let sys = CyclotomicSys::new(ctx, h2)?; // ell = 2
    let mut branches = Vec::with_capacity(3);

    let zero_map = PointMap::new(ctx, vec![ctx.zero()], vec![ctx.zero()])?;
    branches.push(Branch::with_inverse(zero_map, Poly::zero()));

    for (coset_idx, a, r) in [(0u64, form.a2, form.r2), (1u64, form.a1, form.r1)] {
        let members = sys.coset(ctx, coset_idx)?;
        let map = PointMap::from_fn(ctx, members.clone(), |x| {
            ctx.mul(a, ctx.pow(x, r as i64).unwrap())
        });
        let b = mod_inverse(r % h2.max(1), h2).expect("gcd(r, (q-1)/2) = 1");
        let x0 = members[0];
        let y0 = map.apply(x0);
        let c = ctx.mul(x0, ctx.pow(y0, -(b as i64)).unwrap());
        let hint = Poly::monomial(ctx, b as usize, c);
        branches.push(Branch::with_inverse(map, hint));
    }

    let bs = BranchSystem::new(ctx, Some(sys), branches)?;
    assemble_branch_inverse(ctx, &bs)
}

/// One distinct two-branch PP, keyed by the first parameter tuple that
/// produces it in lexicographic (a1, r1, a2, r2) scan order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBranchRecord {
    pub a1: FieldElem,
    pub r1: u64,
    pub a2: FieldElem,
    pub r2: u64,
}

/// Enumerates all distinct two-branch PP functions over F_q (odd q) by
/// sweeping the full parameter space and deduplicating by value table.
pub fn enumerate_two_branch(ctx: &FieldCtx) -> Result<Vec<TwoBranchRecord>> {
    if ctx.q() % 2 == 0 {
        return Err(Error::EvenCharacteristic);
    }
    let q = ctx.q();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for a1 in 1..q {
        let a1 = ctx.elem(a1);
        for r1 in 1..q {
            for a2 in 1..q {
                let a2 = ctx.elem(a2);
                for r2 in 1..q {
                    if !two_branch_criterion(ctx, a1, a2, r1, r2) {
                        continue;
                    }
                    let table: Vec<u64> = two_branch_table(ctx, a1, a2, r1, r2)
                        .images()
                        .iter()
                        .map(|y| y.rank())
                        .collect();
                    if seen.insert(table) {
                        out.push(TwoBranchRecord { a1, r1, a2, r2 });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Counts distinct two-branch PPs and asserts the census formula
/// (q-1)^2 phi((q-1)/2)^2 / 2.
pub fn count_two_branch_pps(ctx: &FieldCtx) -> Result<u64> {
    let count = enumerate_two_branch(ctx)?.len() as u64;
    let q = ctx.q();
    let formula = (q - 1) * (q - 1) * euler_phi((q - 1) / 2) * euler_phi((q - 1) / 2) / 2;
    assert_eq!(count, formula, "census must match the closed formula");
    Ok(count)
}

/// Whether the branch table is an involution (its own inverse).
pub fn is_involution(map: &PointMap) -> bool {
    map.domain()
        .iter()
        .all(|&x| map.image_of(map.apply(x)) == Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_inverse_poly;
    use crate::poly::lagrange_interpolate;

    fn poly(ctx: &FieldCtx, terms: &[(usize, u64)]) -> Poly {
        Poly::from_terms(
            ctx,
            &terms
                .iter()
                .map(|&(e, c)| (e, ctx.from_int(c)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn characteristic_examples() {
        // F_5, ell = 2: chi_{C_0} = 3 + 3x^2
        let f5 = FieldCtx::new(5, 1).unwrap();
        let sys = CyclotomicSys::from_index(&f5, 2).unwrap();
        let chi0 = coset_characteristic(&f5, &sys, 0).unwrap();
        assert_eq!(chi0, poly(&f5, &[(0, 3), (2, 3)]));
        assert_eq!(chi0.eval(&f5, f5.elem(4)), f5.one());
        assert_eq!(chi0.eval(&f5, f5.elem(3)), f5.zero());

        // ell = 1: constant 1 on F_q^*
        let sys1 = CyclotomicSys::from_index(&f5, 1).unwrap();
        let chi = coset_characteristic(&f5, &sys1, 0).unwrap();
        for x in f5.nonzero_elements() {
            assert_eq!(chi.eval(&f5, x), f5.one());
        }

        // F_7, ell = 3, i = 1: chi(3) = 1, chi(1) = chi(2) = 0
        let f7 = FieldCtx::new(7, 1).unwrap();
        let sys7 = CyclotomicSys::from_index(&f7, 3).unwrap();
        let chi1 = coset_characteristic(&f7, &sys7, 1).unwrap();
        assert_eq!(chi1.eval(&f7, f7.elem(3)), f7.one());
        assert_eq!(chi1.eval(&f7, f7.elem(1)), f7.zero());
        assert_eq!(chi1.eval(&f7, f7.elem(2)), f7.zero());

        assert_eq!(
            coset_characteristic(&f7, &sys7, 3),
            Err(Error::IndexOutOfRange)
        );
    }

    #[test]
    fn partition_of_unity_small() {
        for q in [5u64, 7, 9, 13] {
            let ctx = FieldCtx::from_order(q).unwrap();
            for ell in 1..q {
                if (q - 1) % ell != 0 {
                    continue;
                }
                let sys = CyclotomicSys::from_index(&ctx, ell).unwrap();
                for x in ctx.nonzero_elements() {
                    let mut total = ctx.zero();
                    for i in 0..ell {
                        let v = coset_characteristic(&ctx, &sys, i).unwrap().eval(&ctx, x);
                        assert!(v == ctx.zero() || v == ctx.one());
                        total = ctx.add(total, v);
                    }
                    assert_eq!(total, ctx.one());
                }
            }
        }
    }

    #[test]
    fn assemble_single_branch() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let cube = poly(&f5, &[(3, 1)]);
        let map = PointMap::of_poly(&f5, &cube, f5.elements().collect());
        let bs = BranchSystem::new(&f5, None, vec![Branch::new(map)]).unwrap();
        let inv = assemble_branch_inverse(&f5, &bs).unwrap();
        assert_eq!(inv, oracle_inverse_poly(&f5, &cube).unwrap());
    }

    #[test]
    fn assemble_square_nonsquare_involution() {
        // F_5: squares fixed, non-squares cubed; an involution
        let f5 = FieldCtx::new(5, 1).unwrap();
        let sys = CyclotomicSys::from_index(&f5, 2).unwrap();
        let squares = sys.coset(&f5, 0).unwrap();
        let nonsquares = sys.coset(&f5, 1).unwrap();
        let b0 = Branch::new(PointMap::from_fn(&f5, vec![f5.zero()], |x| x));
        let b1 = Branch::new(PointMap::from_fn(&f5, squares, |x| x));
        let b2 = Branch::new(PointMap::of_poly(&f5, &poly(&f5, &[(3, 1)]), nonsquares));
        let bs = BranchSystem::new(&f5, Some(sys), vec![b0, b1, b2]).unwrap();
        let f = bs.f_table(&f5);
        assert_eq!(f.apply(f5.elem(2)), f5.elem(3));
        assert_eq!(f.apply(f5.elem(3)), f5.elem(2));
        assert!(is_involution(&f));
        let inv = assemble_branch_inverse(&f5, &bs).unwrap();
        let f_poly = lagrange_interpolate(&f5, &f).unwrap();
        assert_eq!(inv, oracle_inverse_poly(&f5, &f_poly).unwrap());
    }

    #[test]
    fn assemble_rejects_bad_branches() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let sys = CyclotomicSys::from_index(&f5, 2).unwrap();
        let squares = sys.coset(&f5, 0).unwrap();
        // constant branch is not injective
        let bad = Branch::new(PointMap::from_fn(&f5, squares.clone(), |_| f5.one()));
        assert_eq!(
            BranchSystem::new(&f5, None, vec![bad]).unwrap_err(),
            Error::NotInjectiveOnBranch
        );
        // overlapping images
        let b1 = Branch::new(PointMap::from_fn(&f5, squares.clone(), |x| x));
        let b2 = Branch::new(PointMap::from_fn(
            &f5,
            sys.coset(&f5, 1).unwrap(),
            |x| f5.mul(x, f5.elem(3)), // 2 -> 1, 3 -> 4: collides with squares
        ));
        assert_eq!(
            BranchSystem::new(&f5, None, vec![b1, b2]).unwrap_err(),
            Error::BranchesNotDisjoint
        );
    }

    #[test]
    fn two_branch_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let one = f5.one();
        let form = TwoBranchForm::new(&f5, one, one, 3, 1).unwrap();
        assert!(check_two_branch_pp(&f5, &form).unwrap());
        let f = form.table(&f5);
        assert_eq!(f.apply(f5.elem(2)), f5.elem(3));
        assert_eq!(f.apply(f5.elem(3)), f5.elem(2));
        assert_eq!(f.apply(f5.elem(1)), f5.elem(1));

        let bad = TwoBranchForm::new(&f5, one, one, 2, 1).unwrap();
        assert!(!check_two_branch_pp(&f5, &bad).unwrap());

        // a2 = 2 is a non-square in F_5: the sign pair collapses
        let bad2 = TwoBranchForm::new(&f5, one, f5.elem(2), 3, 1).unwrap();
        assert!(!check_two_branch_pp(&f5, &bad2).unwrap());

        // parity corollary agrees across the full space for q = 5
        for a1 in 1..5 {
            for a2 in 1..5 {
                for r1 in 1..5 {
                    for r2 in 1..5 {
                        let form =
                            TwoBranchForm::new(&f5, f5.elem(a1), f5.elem(a2), r1, r2).unwrap();
                        assert_eq!(
                            check_two_branch_pp(&f5, &form).unwrap(),
                            two_branch_corollary_pp(&f5, &form).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn invert_two_branch_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let one = f5.one();
        let form = TwoBranchForm::new(&f5, one, one, 3, 1).unwrap();
        let inv = invert_two_branch(&f5, &form).unwrap();
        let f_poly = lagrange_interpolate(&f5, &form.table(&f5)).unwrap();
        assert_eq!(inv, f_poly, "this PP is an involution");
        assert_eq!(inv, oracle_inverse_poly(&f5, &f_poly).unwrap());

        let ident = TwoBranchForm::new(&f5, one, one, 1, 1).unwrap();
        assert_eq!(invert_two_branch(&f5, &ident).unwrap(), Poly::x(&f5));

        let f7 = FieldCtx::new(7, 1).unwrap();
        let form = TwoBranchForm::new(&f7, f7.one(), f7.one(), 5, 1).unwrap();
        assert!(check_two_branch_pp(&f7, &form).unwrap());
        let inv = invert_two_branch(&f7, &form).unwrap();
        let f_poly = lagrange_interpolate(&f7, &form.table(&f7)).unwrap();
        assert_eq!(inv, oracle_inverse_poly(&f7, &f_poly).unwrap());
        // the non-square branch of the inverse acts as x^5
        for x in [3u64, 5, 6] {
            let y = f7.elem(x);
            assert_eq!(inv.eval(&f7, y), f7.pow(y, 5).unwrap());
        }

        assert_eq!(
            invert_two_branch(&f5, &TwoBranchForm::new(&f5, one, one, 2, 1).unwrap()),
            Err(Error::NotPP)
        );
    }

    #[test]
    fn census_examples() {
        let f3 = FieldCtx::new(3, 1).unwrap();
        assert_eq!(count_two_branch_pps(&f3).unwrap(), 2);
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(count_two_branch_pps(&f5).unwrap(), 8);
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(
            count_two_branch_pps(&f4).unwrap_err(),
            Error::EvenCharacteristic
        );
    }
}
