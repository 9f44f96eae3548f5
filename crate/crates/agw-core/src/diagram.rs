//! The commutative square (lambda-bar o f = h o lambda) as a first-class,
//! mechanically checkable object, together with its induced maps and the
//! inverted (dual) square.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::oracle::{brute_inverse, PointMap};

/// The quadruple (lambda, lambda_bar, h, f) on a finite domain A with
/// lambda : A -> S, lambda_bar : A -> S_bar surjective, h : S -> S_bar, and
/// the square commuting. All of that is verified at construction.
#[derive(Clone, Debug)]
pub struct AgwSquare {
    f: PointMap,
    lambda: PointMap,
    lambda_bar: PointMap,
    h: PointMap,
    s_set: Vec<FieldElem>,
    sbar_set: Vec<FieldElem>,
}

impl AgwSquare {
    pub fn new(
        ctx: &FieldCtx,
        f: PointMap,
        lambda: PointMap,
        lambda_bar: PointMap,
        h: PointMap,
    ) -> Result<AgwSquare> {
        let a_set = f.domain_set();
        if lambda.domain_set() != a_set || lambda_bar.domain_set() != a_set {
            return Err(Error::InvalidPointMap(
                "f, lambda, lambda_bar must share one domain".into(),
            ));
        }
        if !f.images().iter().all(|&y| f.contains(y)) {
            return Err(Error::InvalidPointMap("f must map A into A".into()));
        }
        let s_set = h.domain_set();
        if lambda.image_set() != s_set {
            return Err(Error::InvalidPointMap(
                "lambda must be surjective onto the domain of h".into(),
            ));
        }
        let sbar_set = lambda_bar.image_set();
        if s_set.len() != sbar_set.len() {
            return Err(Error::InvalidPointMap("|S| must equal |S_bar|".into()));
        }
        let sbar_ok = {
            let mut im = h.image_set();
            im.retain(|y| sbar_set.binary_search(y).is_err());
            im.is_empty()
        };
        if !sbar_ok {
            return Err(Error::InvalidPointMap(
                "h must map S into the image of lambda_bar".into(),
            ));
        }
        if let Some(w) = commute_violation(ctx, &f, &lambda, &lambda_bar, &h) {
            return Err(Error::SquareNotCommuting { witness: w.rank() });
        }
        Ok(AgwSquare {
            f,
            lambda,
            lambda_bar,
            h,
            s_set,
            sbar_set,
        })
    }

    pub fn f(&self) -> &PointMap {
        &self.f
    }

    pub fn lambda(&self) -> &PointMap {
        &self.lambda
    }

    pub fn lambda_bar(&self) -> &PointMap {
        &self.lambda_bar
    }

    /// The bottom map h : S -> S_bar (the induced map of the square).
    pub fn h(&self) -> &PointMap {
        &self.h
    }

    pub fn s_set(&self) -> &[FieldElem] {
        &self.s_set
    }

    pub fn sbar_set(&self) -> &[FieldElem] {
        &self.sbar_set
    }

    /// Re-checks commutativity point by point.
    pub fn verify(&self, ctx: &FieldCtx) -> bool {
        commute_violation(ctx, &self.f, &self.lambda, &self.lambda_bar, &self.h).is_none()
    }

    /// The AGW criterion: f is a permutation of A iff h is bijective and f is
    /// injective on every lambda-fiber. Both sides are computed and their
    /// agreement is asserted; the shared answer is returned.
    pub fn is_pp(&self, ctx: &FieldCtx) -> bool {
        let h_bijective =
            self.h.is_injective() && self.h.image_set() == self.sbar_set;
        let fibers_ok = {
            let (inj, _) = crate::oracle::fiber_bijection_check(ctx, &self.f, &self.lambda);
            inj
        };
        let criterion = h_bijective && fibers_ok;
        let direct = self.f.is_permutation();
        assert_eq!(
            criterion, direct,
            "AGW criterion must agree with the exhaustive permutation test"
        );
        criterion
    }

    /// Inverts the square: checks lambda o f^{-1} = h^{-1} o lambda_bar
    /// pointwise, with f^{-1} and h^{-1} from the brute-force oracle.
    /// `NotPP` when f is not a permutation of A.
    pub fn dual_verify(&self, ctx: &FieldCtx) -> Result<bool> {
        if !self.is_pp(ctx) {
            return Err(Error::NotPP);
        }
        let f_inv = brute_inverse(&self.f)?;
        let h_inv = crate::oracle::invert_injective(&self.h)?;
        Ok(self.f.domain().iter().all(|&y| {
            self.lambda.apply(f_inv.apply(y)) == h_inv.apply(self.lambda_bar.apply(y))
        }))
    }
}

/// First domain element violating lambda_bar(f(a)) = h(lambda(a)), if any.
pub fn commute_violation(
    _ctx: &FieldCtx,
    f: &PointMap,
    lambda: &PointMap,
    lambda_bar: &PointMap,
    h: &PointMap,
) -> Option<FieldElem> {
    f.domain()
        .iter()
        .copied()
        .find(|&a| lambda_bar.apply(f.apply(a)) != h.apply(lambda.apply(a)))
}

/// Outcome of inducing the bottom map from (f, lambda, lambda_bar).
#[derive(Clone, Debug)]
pub enum Induced {
    /// The unique h with h(lambda(a)) = lambda_bar(f(a)).
    Map(PointMap),
    /// A pair (a, b) with lambda(a) = lambda(b) but
    /// lambda_bar(f(a)) != lambda_bar(f(b)).
    Witness(FieldElem, FieldElem),
}

/// Induces the bottom map of the square, checking (not assuming) that
/// lambda_bar o f is constant on every lambda-fiber. Returns the first
/// violating pair as a witness instead of failing opaquely.
pub fn induced_h(
    ctx: &FieldCtx,
    f: &PointMap,
    lambda: &PointMap,
    lambda_bar: &PointMap,
) -> Induced {
    let mut first_of: Vec<Option<FieldElem>> = vec![None; ctx.q() as usize];
    let mut val_of: Vec<Option<FieldElem>> = vec![None; ctx.q() as usize];
    for &a in f.domain() {
        let s = lambda.apply(a).rank() as usize;
        let v = lambda_bar.apply(f.apply(a));
        match val_of[s] {
            None => {
                val_of[s] = Some(v);
                first_of[s] = Some(a);
            }
            Some(prev) => {
                if prev != v {
                    return Induced::Witness(first_of[s].unwrap(), a);
                }
            }
        }
    }
    let mut pairs: Vec<(FieldElem, FieldElem)> = Vec::new();
    for (rank, v) in val_of.iter().enumerate() {
        if let Some(v) = v {
            pairs.push((ctx.elem(rank as u64), *v));
        }
    }
    let domain: Vec<FieldElem> = pairs.iter().map(|&(s, _)| s).collect();
    let images: Vec<FieldElem> = pairs.iter().map(|&(_, v)| v).collect();
    Induced::Map(PointMap::new(ctx, domain, images).expect("fiber keys are distinct"))
}

/// Given a bijective f, a surjective lambda, and a bijective h, builds the
/// unique lambda_bar that is constant h(s) on each image block f(lambda^{-1}(s)):
/// lambda_bar(f(a)) = h(lambda(a)).
pub fn build_bar_lambda(
    ctx: &FieldCtx,
    f: &PointMap,
    lambda: &PointMap,
    h_bij: &PointMap,
) -> Result<PointMap> {
    if !f.is_permutation() {
        return Err(Error::NotBijective);
    }
    if !h_bij.is_injective() {
        return Err(Error::NotBijective);
    }
    if lambda.image_set() != h_bij.domain_set() {
        return Err(Error::InvalidPointMap(
            "lambda must be surjective onto the domain of h".into(),
        ));
    }
    let mut pairs: Vec<(FieldElem, FieldElem)> = f
        .domain()
        .iter()
        .map(|&a| (f.apply(a), h_bij.apply(lambda.apply(a))))
        .collect();
    pairs.sort_unstable_by_key(|&(x, _)| x.rank());
    let domain: Vec<FieldElem> = pairs.iter().map(|&(x, _)| x).collect();
    let images: Vec<FieldElem> = pairs.iter().map(|&(_, y)| y).collect();
    PointMap::new(ctx, domain, images)
}

/// Counts pairs (lambda_bar, h) with lambda_bar : A -> S_bar surjective,
/// h : S -> S_bar bijective, and the square commuting. For a bijective f this
/// equals |S|! — use only on tiny sets, the scan is |S_bar|^|A| * |S|!.
pub fn count_commuting_pairs(
    ctx: &FieldCtx,
    f: &PointMap,
    lambda: &PointMap,
    sbar: &[FieldElem],
) -> u64 {
    let a: Vec<FieldElem> = f.domain().to_vec();
    let s = {
        let mut v = lambda.image_set();
        v.sort_unstable();
        v
    };
    let m = sbar.len() as u64;
    let mut count = 0u64;

    let mut perm_idx: Vec<usize> = (0..s.len()).collect();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    heap_permutations(&mut perm_idx, 0, &mut perms);

    let total = m.pow(a.len() as u32);
    for code in 0..total {
        // decode lambda_bar : A -> S_bar
        let mut c = code;
        let mut images = Vec::with_capacity(a.len());
        for _ in 0..a.len() {
            images.push(sbar[(c % m) as usize]);
            c /= m;
        }
        let lb = PointMap::new(ctx, a.clone(), images).expect("domain has no duplicates");
        if !lb.is_onto(sbar) {
            continue;
        }
        for p in &perms {
            let h = PointMap::new(
                ctx,
                s.clone(),
                p.iter().map(|&i| sbar[i]).collect(),
            )
            .expect("S has no duplicates");
            if commute_violation(ctx, f, lambda, &lb, &h).is_none() {
                count += 1;
            }
        }
    }
    count
}

fn heap_permutations(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == idx.len() {
        out.push(idx.clone());
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        heap_permutations(idx, k + 1, out);
        idx.swap(k, i);
    }
}
