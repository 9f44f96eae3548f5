//! Closed-form inverses for the additive families: f1(x) + h(lambda(x)),
//! the g + g0(lambda) form with an additive lambda_bar, linear-translator
//! forms, and the linearized form a*h(L(x) + delta) + L1(x).

use crate::diagram::AgwSquare;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::linearized::{associated_gcd_check, linearized_inverse, linearized_matrix, mat_inv, LinearizedPoly, Tower};
use crate::oracle::{brute_inverse, brute_inverse_poly_table, invert_injective, is_permutation, PointMap};
use crate::poly::Poly;

/// Theorem-style additive inverse: with f = f1 + h(lambda) a permutation and
/// the square commuting, f^{-1}(y) = f1^{-1}(y - h(g^{-1}(lambda_bar(y)))).
/// The square's bottom map plays the role of g.
pub fn invert_add_general(
    ctx: &FieldCtx,
    f1: &Poly,
    h: &Poly,
    square: &AgwSquare,
) -> Result<Poly> {
    if square.f().len() as u64 != ctx.q() {
        return Err(Error::HypothesisFailed(
            "the additive theorem runs on the full field".into(),
        ));
    }
    for &x in square.f().domain() {
        let want = ctx.add(f1.eval(ctx, x), h.eval(ctx, square.lambda().apply(x)));
        if square.f().apply(x) != want {
            return Err(Error::HypothesisFailed(
                "square.f disagrees with f1 + h(lambda)".into(),
            ));
        }
    }
    if !is_permutation(ctx, f1) {
        return Err(Error::NotPP);
    }
    if !square.is_pp(ctx) {
        return Err(Error::NotPP);
    }
    let f1_inv = brute_inverse_poly_table(ctx, f1)?;
    let g_inv = invert_injective(square.h())?;
    let mut nodes = Vec::with_capacity(ctx.q() as usize);
    for &y in square.f().domain() {
        let t = h.eval(ctx, g_inv.apply(square.lambda_bar().apply(y)));
        nodes.push((y, f1_inv.apply(ctx.sub(y, t))));
    }
    Ok(Poly::interpolate(ctx, &nodes)?.normalize(ctx))
}

/// f(x) = g(x) + g0(lambda(x)) with lambda_bar additive,
/// lambda_bar(g0(lambda(x))) = 0, and lambda_bar o f = g o lambda. All three
/// hypotheses (plus g(S) = S_bar) are checked exhaustively at construction.
#[derive(Clone, Debug)]
pub struct G0Form {
    g: PointMap,
    g0: Poly,
    lambda: PointMap,
    lambda_bar: PointMap,
    f_table: PointMap,
}

impl G0Form {
    pub fn new(
        ctx: &FieldCtx,
        g: PointMap,
        g0: Poly,
        lambda: PointMap,
        lambda_bar: PointMap,
    ) -> Result<G0Form> {
        let q = ctx.q();
        if g.len() as u64 != q || lambda.len() as u64 != q || lambda_bar.len() as u64 != q {
            return Err(Error::HypothesisFailed(
                "g, lambda, lambda_bar must be total on the field".into(),
            ));
        }
        for x in ctx.elements() {
            for y in ctx.elements() {
                if lambda_bar.apply(ctx.add(x, y))
                    != ctx.add(lambda_bar.apply(x), lambda_bar.apply(y))
                {
                    return Err(Error::HypothesisFailed("lambda_bar is not additive".into()));
                }
            }
        }
        for x in ctx.elements() {
            if lambda_bar.apply(g0.eval(ctx, lambda.apply(x))).rank() != 0 {
                return Err(Error::HypothesisFailed(
                    "lambda_bar(g0(lambda(x))) != 0".into(),
                ));
            }
        }
        let f_table = PointMap::from_fn(ctx, lambda.domain().to_vec(), |x| {
            ctx.add(g.apply(x), g0.eval(ctx, lambda.apply(x)))
        });
        for x in ctx.elements() {
            if lambda_bar.apply(f_table.apply(x)) != g.apply(lambda.apply(x)) {
                return Err(Error::HypothesisFailed(
                    "lambda_bar o (g + g0 o lambda) != g o lambda".into(),
                ));
            }
        }
        let s_set = lambda.image_set();
        let sbar_set = lambda_bar.image_set();
        let mut g_of_s: Vec<FieldElem> = s_set.iter().map(|&s| g.apply(s)).collect();
        g_of_s.sort_unstable();
        g_of_s.dedup();
        if g_of_s != sbar_set {
            return Err(Error::HypothesisFailed("g(S) != S_bar".into()));
        }
        Ok(G0Form {
            g,
            g0,
            lambda,
            lambda_bar,
            f_table,
        })
    }

    pub fn f_table(&self) -> &PointMap {
        &self.f_table
    }

    pub fn g(&self) -> &PointMap {
        &self.g
    }
}

/// Inverse for the g0 form: f^{-1}(y) = g^{-1}(y - g0(g^{-1}(lambda_bar(y)))),
/// the inner inverse being g restricted to S. The criterion (f permutes F iff
/// g permutes F) is asserted in both directions.
pub fn invert_g0_form(ctx: &FieldCtx, form: &G0Form) -> Result<Poly> {
    let g_pp = form.g.is_permutation();
    let f_pp = form.f_table.is_permutation();
    assert_eq!(g_pp, f_pp, "g0-form criterion: f permutes F iff g does");
    if !f_pp {
        return Err(Error::NotPP);
    }
    let g_inv = brute_inverse(&form.g)?;
    let s_set = form.lambda.image_set();
    let g_on_s = PointMap::from_fn(ctx, s_set, |s| form.g.apply(s));
    let g_on_s_inv = invert_injective(&g_on_s)?;
    let mut nodes = Vec::with_capacity(ctx.q() as usize);
    for y in ctx.elements() {
        let inner = g_on_s_inv.apply(form.lambda_bar.apply(y));
        let val = g_inv.apply(ctx.sub(y, form.g0.eval(ctx, inner)));
        nodes.push((y, val));
    }
    Ok(Poly::interpolate(ctx, &nodes)?.normalize(ctx))
}

/// f(x) = x + gamma*G(lambda(x)) where gamma is a b-linear translator of
/// lambda with respect to S = lambda(F_q).
#[derive(Clone, Debug)]
pub struct TranslatorForm {
    gamma: FieldElem,
    b: FieldElem,
    lambda: PointMap,
    big_g: Poly,
}

impl TranslatorForm {
    pub fn new(gamma: FieldElem, b: FieldElem, lambda: PointMap, big_g: Poly) -> TranslatorForm {
        TranslatorForm {
            gamma,
            b,
            lambda,
            big_g,
        }
    }

    pub fn s_set(&self) -> Vec<FieldElem> {
        self.lambda.image_set()
    }

    pub fn f_table(&self, ctx: &FieldCtx) -> PointMap {
        PointMap::from_fn(ctx, self.lambda.domain().to_vec(), |x| {
            ctx.add(x, ctx.mul(self.gamma, self.big_g.eval(ctx, self.lambda.apply(x))))
        })
    }

    /// g(x) = x + b*G(x) tabulated on S.
    pub fn g_on_s(&self, ctx: &FieldCtx) -> PointMap {
        PointMap::from_fn(ctx, self.s_set(), |s| {
            ctx.add(s, ctx.mul(self.b, self.big_g.eval(ctx, s)))
        })
    }
}

/// Exhaustive verification of the translator law:
/// lambda(x + u*gamma) = lambda(x) + u*b for all x in F_q, u in S.
pub fn check_translator(ctx: &FieldCtx, form: &TranslatorForm) -> bool {
    let s_set = form.s_set();
    form.lambda.domain().iter().all(|&x| {
        s_set.iter().all(|&u| {
            form.lambda.apply(ctx.add(x, ctx.mul(u, form.gamma)))
                == ctx.add(form.lambda.apply(x), ctx.mul(u, form.b))
        })
    })
}

/// Translator-form inverse: f^{-1}(y) = y - gamma*G(g^{-1}(lambda(y))).
/// Requires the translator law and G(S) in S; asserts the criterion
/// (f is a PP iff g permutes S) in both directions.
pub fn invert_translator_form(ctx: &FieldCtx, form: &TranslatorForm) -> Result<Poly> {
    if form.lambda.len() as u64 != ctx.q() {
        return Err(Error::HypothesisFailed(
            "lambda must be total on the field".into(),
        ));
    }
    if !check_translator(ctx, form) {
        return Err(Error::HypothesisFailed("translator law fails".into()));
    }
    let s_set = form.s_set();
    let in_s = |v: FieldElem| s_set.binary_search(&v).is_ok();
    if !s_set.iter().all(|&s| in_s(form.big_g.eval(ctx, s))) {
        return Err(Error::HypothesisFailed("G does not map S into S".into()));
    }
    let g = form.g_on_s(ctx);
    let f = form.f_table(ctx);
    let g_pp = g.is_permutation();
    let f_pp = f.is_permutation();
    assert_eq!(
        g_pp, f_pp,
        "translator criterion: f is a PP iff x + b*G(x) permutes S"
    );
    if !f_pp {
        return Err(Error::NotPP);
    }
    let g_inv = brute_inverse(&g)?;
    let mut nodes = Vec::with_capacity(ctx.q() as usize);
    for y in ctx.elements() {
        let t = ctx.mul(
            form.gamma,
            form.big_g.eval(ctx, g_inv.apply(form.lambda.apply(y))),
        );
        nodes.push((y, ctx.sub(y, t)));
    }
    Ok(Poly::interpolate(ctx, &nodes)?.normalize(ctx))
}

/// f(x) = a*h(L(x) + delta) + L1(x) on a tower, with a a nonzero kernel
/// element of L, h taking base-subfield values, and L, L1 base-coefficient
/// linearized polynomials.
#[derive(Clone, Debug)]
pub struct LinearizedForm {
    tower: Tower,
    l: LinearizedPoly,
    l1: LinearizedPoly,
    a: FieldElem,
    delta: FieldElem,
    h: Poly,
}

impl LinearizedForm {
    pub fn new(
        tower: Tower,
        l: LinearizedPoly,
        l1: LinearizedPoly,
        a: FieldElem,
        delta: FieldElem,
        h: Poly,
    ) -> Result<LinearizedForm> {
        let ctx = tower.field();
        if a.rank() == 0 {
            return Err(Error::HypothesisFailed("a must be nonzero".into()));
        }
        if l.eval(&tower, a).rank() != 0 {
            return Err(Error::HypothesisFailed("L(a) != 0".into()));
        }
        match associated_gcd_check(&tower, &l) {
            Ok(true) => {}
            Ok(false) => {
                return Err(Error::HypothesisFailed(
                    "gcd(l(x), x^n - 1) = 1".into(),
                ))
            }
            Err(e) => return Err(e),
        }
        if !l1.coeffs_in_base(&tower) {
            return Err(Error::CoefficientsNotInBaseField);
        }
        // h^q = h as a function: every value lies in the base subfield
        for v in ctx.elements() {
            if !tower.in_base(h.eval(ctx, v)) {
                return Err(Error::HypothesisFailed(
                    "h takes a value outside the base subfield".into(),
                ));
            }
        }
        Ok(LinearizedForm {
            tower,
            l,
            l1,
            a,
            delta,
            h,
        })
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn l(&self) -> &LinearizedPoly {
        &self.l
    }

    pub fn l1(&self) -> &LinearizedPoly {
        &self.l1
    }

    pub fn f_table(&self) -> PointMap {
        let ctx = self.tower.field();
        PointMap::from_fn(ctx, ctx.elements().collect(), |x| {
            let lam = ctx.add(self.l.eval(&self.tower, x), self.delta);
            ctx.add(ctx.mul(self.a, self.h.eval(ctx, lam)), self.l1.eval(&self.tower, x))
        })
    }

    /// The kernel identity behind the form: L(a*h(v)) = h(v)*L(a) = 0 for
    /// every v, because h-values are base-subfield scalars.
    pub fn kernel_identity_holds(&self) -> bool {
        let ctx = self.tower.field();
        ctx.elements().all(|v| {
            let hv = self.h.eval(ctx, v);
            self.l.eval(&self.tower, ctx.mul(self.a, hv)).rank() == 0
        })
    }
}

/// Linearized-form inverse: with M = L1^{-1},
/// f^{-1}(y) = M(y - a*h(M(L(y)) + delta)). Asserts the criterion (f permutes
/// the tower field iff L1 does) in both directions.
pub fn invert_linearized_form(form: &LinearizedForm) -> Result<Poly> {
    let tower = &form.tower;
    let ctx = tower.field();
    let f = form.f_table();
    let f_pp = f.is_permutation();
    let invertible = mat_inv(ctx, &linearized_matrix(tower, &form.l1)).is_some();
    assert_eq!(
        f_pp, invertible,
        "linearized criterion: f permutes iff L1 is invertible"
    );
    if !invertible {
        return Err(Error::Singular);
    }
    let m = linearized_inverse(tower, &form.l1)?;
    let mut nodes = Vec::with_capacity(ctx.q() as usize);
    for y in ctx.elements() {
        let inner = ctx.add(m.eval(tower, form.l.eval(tower, y)), form.delta);
        let val = m.eval(tower, ctx.sub(y, ctx.mul(form.a, form.h.eval(ctx, inner))));
        nodes.push((y, val));
    }
    Ok(Poly::interpolate(ctx, &nodes)?.normalize(ctx))
}
