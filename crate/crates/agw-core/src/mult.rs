//! Closed-form compositional inverses for the multiplicative and hybrid
//! families: f1(x)*h(lambda(x)) on F_q^*, x*h(lambda(x)), and the index form
//! x^r h(x^s) with both exponent recipes.

use crate::diagram::{induced_h, AgwSquare, Induced};
use crate::error::{Error, Result};
use crate::field::{gcd, CyclotomicSys, FieldCtx, FieldElem};
use crate::oracle::{brute_inverse, brute_inverse_poly_table, invert_injective, is_permutation, PointMap};
use crate::poly::Poly;

/// f(x) = x^r h(x^s) with s | q-1; the induced map on the ell-th roots of
/// unity is g(x) = x^r h(x)^s.
#[derive(Clone, Debug)]
pub struct IndexForm {
    r: u64,
    h: Poly,
    sys: CyclotomicSys,
}

impl IndexForm {
    pub fn new(ctx: &FieldCtx, r: u64, s: u64, h: Poly) -> Result<IndexForm> {
        if r == 0 {
            return Err(Error::BadIndex);
        }
        let sys = CyclotomicSys::new(ctx, s)?;
        Ok(IndexForm { r, h, sys })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.sys.s()
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn sys(&self) -> &CyclotomicSys {
        &self.sys
    }

    /// The polynomial x^r h(x^s), normalized.
    pub fn f_poly(&self, ctx: &FieldCtx) -> Poly {
        let s = self.sys.s() as usize;
        let terms: Vec<(usize, FieldElem)> = self
            .h
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, &c)| (self.r as usize + j * s, c))
            .collect();
        Poly::from_terms(ctx, &terms).normalize(ctx)
    }

    /// The induced map g(x) = x^r h(x)^s tabulated on mu_ell.
    pub fn g_map(&self, ctx: &FieldCtx) -> PointMap {
        let s = self.sys.s();
        PointMap::from_fn(ctx, self.sys.mu().to_vec(), |z| {
            let hz = self.h.eval(ctx, z);
            let zr = ctx.pow(z, self.r as i64).expect("mu avoids zero");
            if hz.rank() == 0 {
                ctx.zero()
            } else {
                ctx.mul(zr, ctx.pow(hz, s as i64).unwrap())
            }
        })
    }
}

/// The index-form permutation criterion: gcd(r, s) = 1 and g permutes
/// mu_ell. Asserted against the exhaustive full-field test.
pub fn check_index_pp(ctx: &FieldCtx, form: &IndexForm) -> bool {
    let criterion = gcd(form.r, form.sys.s()) == 1 && form.g_map(ctx).is_permutation();
    let direct = is_permutation(ctx, &form.f_poly(ctx));
    assert_eq!(
        criterion, direct,
        "index criterion must agree with the exhaustive test (r={}, s={})",
        form.r,
        form.sys.s()
    );
    criterion
}

/// Brute-force inverse of g on mu_ell plus the interpolated representative G
/// of degree < ell with G(z) = g^{-1}(z); G is what g^{-1}(x^s) substitutes.
pub fn g_inverse_on_mu(ctx: &FieldCtx, form: &IndexForm) -> Result<(PointMap, Poly)> {
    if !check_index_pp(ctx, form) {
        return Err(Error::NotPP);
    }
    let g = form.g_map(ctx);
    let g_inv = brute_inverse(&g)?;
    let nodes: Vec<(FieldElem, FieldElem)> = g_inv
        .domain()
        .iter()
        .zip(g_inv.images())
        .map(|(&x, &y)| (x, y))
        .collect();
    let poly = Poly::interpolate(ctx, &nodes)?;
    Ok((g_inv, poly))
}

/// Single-exponent recipe: with gcd(r, q-1) = 1 and b the smallest positive
/// integer with b*r = 1 mod q-1, the inverse is x^b * h(G(x^s))^{-b},
/// realized pointwise on mu_ell and reassembled syntactically.
pub fn invert_index_b(ctx: &FieldCtx, form: &IndexForm) -> Result<Poly> {
    if !check_index_pp(ctx, form) {
        return Err(Error::NotPP);
    }
    let m = ctx.q() - 1;
    if gcd(form.r, m) != 1 {
        return Err(Error::GcdHypothesisFailed);
    }
    let b = mod_inverse(form.r % m.max(1), m).unwrap_or(1);
    let (_, g_poly) = g_inverse_on_mu(ctx, form)?;
    // w(z) = h(G(z))^{-b} on mu_ell, then W interpolated there
    let nodes: Vec<(FieldElem, FieldElem)> = form
        .sys
        .mu()
        .iter()
        .map(|&z| {
            let hv = form.h.eval(ctx, g_poly.eval(ctx, z));
            let w = ctx.pow(hv, -(b as i64)).expect("h nonzero on mu for a PP");
            (z, w)
        })
        .collect();
    let w_poly = Poly::interpolate(ctx, &nodes)?;
    let s = form.sys.s() as usize;
    let terms: Vec<(usize, FieldElem)> = w_poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, &c)| (b as usize + j * s, c))
        .collect();
    Ok(Poly::from_terms(ctx, &terms).normalize(ctx))
}

/// Artifacts of the two-exponent recipe, kept for the cross-identity check.
#[derive(Clone, Debug)]
pub struct IndexAbInverse {
    pub poly: Poly,
    pub a: i64,
    pub b: u64,
    /// G, the interpolated g^{-1} on mu_ell.
    pub g_poly: Poly,
    /// h'(z) = G(z)^a h(G(z))^{-b} interpolated on mu_ell; the inverse is
    /// x^b h'(x^s) as a function.
    pub h_prime: Poly,
}

/// Two-exponent recipe: with a*s + b*r = 1 (b the least non-negative
/// solution), the inverse is G(x^s)^a * x^b * h(G(x^s))^{-b}.
pub fn invert_index_ab(ctx: &FieldCtx, form: &IndexForm) -> Result<IndexAbInverse> {
    if !check_index_pp(ctx, form) {
        return Err(Error::NotPP);
    }
    let s = form.sys.s();
    let (a, b) = exponent_pair(form.r, s);
    let (g_inv, g_poly) = g_inverse_on_mu(ctx, form)?;

    // h'(z) on mu_ell
    let nodes: Vec<(FieldElem, FieldElem)> = form
        .sys
        .mu()
        .iter()
        .map(|&z| {
            let gz = g_inv.apply(z);
            let hv = form.h.eval(ctx, gz);
            let v = ctx.mul(
                ctx.pow(gz, a).expect("g^{-1} values stay in mu"),
                ctx.pow(hv, -(b as i64)).expect("h nonzero on mu for a PP"),
            );
            (z, v)
        })
        .collect();
    let h_prime = Poly::interpolate(ctx, &nodes)?;

    // pointwise value table (covers the b = 0 edge where x^b does not
    // vanish at 0), then one interpolation
    let mut table: Vec<(FieldElem, FieldElem)> = Vec::with_capacity(ctx.q() as usize);
    table.push((ctx.zero(), ctx.zero()));
    for y in ctx.nonzero_elements() {
        let ys = ctx.pow(y, s as i64).unwrap();
        let val = ctx.mul(
            ctx.pow(y, b as i64).unwrap(),
            h_prime.eval(ctx, ys),
        );
        table.push((y, val));
    }
    let poly = Poly::interpolate(ctx, &table)?.normalize(ctx);
    Ok(IndexAbInverse {
        poly,
        a,
        b,
        g_poly,
        h_prime,
    })
}

/// The pivot identity of the branch-function proof:
/// G(y^s) = y^{s b} h'(y^s)^s for every nonzero y.
pub fn eq41_holds(ctx: &FieldCtx, form: &IndexForm, inv: &IndexAbInverse) -> bool {
    let s = form.sys.s();
    ctx.nonzero_elements().all(|y| {
        let ys = ctx.pow(y, s as i64).unwrap();
        let lhs = inv.g_poly.eval(ctx, ys);
        let hp = inv.h_prime.eval(ctx, ys);
        let rhs = ctx.mul(
            ctx.pow(y, (s * inv.b) as i64).unwrap(),
            ctx.pow(hp, s as i64).expect("h' nonzero on mu"),
        );
        lhs == rhs
    })
}

/// Least non-negative b with a*s + b*r = 1 (gcd(r, s) = 1), a adjusted.
fn exponent_pair(r: u64, s: u64) -> (i64, u64) {
    if s == 1 {
        return (1, 0);
    }
    let b = mod_inverse(r % s, s).expect("gcd(r, s) = 1");
    let a = (1i64 - (b as i64) * (r as i64)) / (s as i64);
    (a, b)
}

/// Modular inverse, smallest positive representative; m = 1 maps to 1.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m <= 1 {
        return Some(1);
    }
    let (mut old_r, mut r) = (a as i64, m as i64);
    let (mut old_s, mut srow) = (1i64, 0i64);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, srow) = (srow, old_s - qt * srow);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i64) as u64)
}

/// f(x) = f1(x) * h(lambda(x)) as a permutation of F_q^*, wrapped in its
/// verified square with the induced bottom map.
#[derive(Clone, Debug)]
pub struct GeneralMultForm {
    f1: Poly,
    h: Poly,
    square: AgwSquare,
}

impl GeneralMultForm {
    /// `lambda` and `lambda_bar` are tables on F_q^*. The constructor checks
    /// that f1 permutes F_q, that f permutes F_q^*, and that the square
    /// commutes with a well-defined induced bottom map.
    pub fn new(
        ctx: &FieldCtx,
        f1: Poly,
        h: Poly,
        lambda: PointMap,
        lambda_bar: PointMap,
    ) -> Result<GeneralMultForm> {
        if !is_permutation(ctx, &f1) {
            return Err(Error::NotPP);
        }
        let f_table = PointMap::from_fn(ctx, lambda.domain().to_vec(), |x| {
            ctx.mul(f1.eval(ctx, x), h.eval(ctx, lambda.apply(x)))
        });
        if !f_table.is_permutation() {
            return Err(Error::NotPP);
        }
        let g = match induced_h(ctx, &f_table, &lambda, &lambda_bar) {
            Induced::Map(g) => g,
            Induced::Witness(a, b) => {
                return Err(Error::HypothesisFailed(format!(
                    "induced map is not well-defined: lambda agrees on ranks {} and {} but lambda_bar o f does not",
                    a.rank(),
                    b.rank()
                )))
            }
        };
        let square = AgwSquare::new(ctx, f_table, lambda, lambda_bar, g)?;
        if !square.is_pp(ctx) {
            return Err(Error::NotPP);
        }
        Ok(GeneralMultForm { f1, h, square })
    }

    pub fn square(&self) -> &AgwSquare {
        &self.square
    }

    pub fn f_table(&self) -> &PointMap {
        self.square.f()
    }
}

/// Pointwise inverse y -> f1^{-1}(y / h(g^{-1}(lambda_bar(y)))) on F_q^*.
pub fn invert_mult_general_table(ctx: &FieldCtx, form: &GeneralMultForm) -> Result<PointMap> {
    let g_inv = invert_injective(form.square.h())?;
    let f1_inv = brute_inverse_poly_table(ctx, &form.f1)?;
    let lambda_bar = form.square.lambda_bar();
    let mut domain = Vec::with_capacity(form.f_table().len());
    let mut images = Vec::with_capacity(form.f_table().len());
    for &y in form.f_table().domain() {
        let t = form.h.eval(ctx, g_inv.apply(lambda_bar.apply(y)));
        if t.rank() == 0 {
            return Err(Error::DivisionByZero);
        }
        domain.push(y);
        images.push(f1_inv.apply(ctx.mul(y, ctx.inv(t)?)));
    }
    PointMap::new(ctx, domain, images)
}

/// The inverse interpolated over F_q^* (degree < q-1); agrees with the
/// brute-force inverse on the declared domain.
pub fn invert_mult_general(ctx: &FieldCtx, form: &GeneralMultForm) -> Result<Poly> {
    let table = invert_mult_general_table(ctx, form)?;
    let nodes: Vec<(FieldElem, FieldElem)> = table
        .domain()
        .iter()
        .zip(table.images())
        .map(|(&x, &y)| (x, y))
        .collect();
    Poly::interpolate(ctx, &nodes)
}

/// Full-field extension per the zero-at-zero convention: adds f^{-1}(0) = 0
/// and interpolates over all of F_q.
pub fn invert_mult_general_full(ctx: &FieldCtx, form: &GeneralMultForm) -> Result<Poly> {
    let table = invert_mult_general_table(ctx, form)?;
    let mut nodes: Vec<(FieldElem, FieldElem)> = vec![(ctx.zero(), ctx.zero())];
    nodes.extend(
        table
            .domain()
            .iter()
            .zip(table.images())
            .map(|(&x, &y)| (x, y)),
    );
    Ok(Poly::interpolate(ctx, &nodes)?.normalize(ctx))
}

/// Hybrid family f(x) = x*h(lambda(x)) with the scaling law
/// lambda(a*alpha) = k(a)*lambda(alpha): checks every hypothesis
/// exhaustively, asserts the criterion (f is a PP iff g(x) = x*k(h(x))
/// permutes lambda(F)), and returns the interpolated inverse
/// y -> y / h(g^{-1}(lambda(y))).
pub fn invert_hybrid_xh(
    ctx: &FieldCtx,
    h: &Poly,
    lambda: &PointMap,
    k: &Poly,
) -> Result<Poly> {
    if lambda.len() as u64 != ctx.q() {
        return Err(Error::HypothesisFailed(
            "lambda must be total on the field".into(),
        ));
    }
    if h.eval(ctx, ctx.zero()).rank() == 0 {
        return Err(Error::HypothesisFailed("h(0) = 0".into()));
    }
    if k.eval(ctx, ctx.zero()).rank() != 0 {
        return Err(Error::HypothesisFailed("k(0) != 0".into()));
    }
    // S is the smallest admissible set: h(lambda(F)) together with 0
    let mut s_set: Vec<FieldElem> = lambda
        .domain()
        .iter()
        .map(|&x| h.eval(ctx, lambda.apply(x)))
        .collect();
    s_set.push(ctx.zero());
    s_set.sort_unstable();
    s_set.dedup();
    for &a in &s_set {
        for &alpha in lambda.domain() {
            let lhs = lambda.apply(ctx.mul(a, alpha));
            let rhs = ctx.mul(k.eval(ctx, a), lambda.apply(alpha));
            if lhs != rhs {
                return Err(Error::HypothesisFailed(format!(
                    "lambda(a*alpha) != k(a)*lambda(alpha) at a rank {}, alpha rank {}",
                    a.rank(),
                    alpha.rank()
                )));
            }
        }
    }
    let lam_image = lambda.image_set();
    let g = PointMap::from_fn(ctx, lam_image.clone(), |z| {
        ctx.mul(z, k.eval(ctx, h.eval(ctx, z)))
    });
    if !g.images().iter().all(|&y| g.contains(y)) {
        return Err(Error::HypothesisFailed(
            "g(x) = x*k(h(x)) leaves lambda(F)".into(),
        ));
    }
    let f_table = PointMap::from_fn(ctx, lambda.domain().to_vec(), |x| {
        ctx.mul(x, h.eval(ctx, lambda.apply(x)))
    });
    let f_pp = f_table.is_permutation();
    let g_pp = g.is_permutation();
    assert_eq!(
        f_pp, g_pp,
        "hybrid criterion: f permutes F_q iff g permutes lambda(F)"
    );
    if !f_pp {
        return Err(Error::NotPP);
    }
    let g_inv = brute_inverse(&g)?;
    let mut nodes = Vec::with_capacity(ctx.q() as usize);
    for y in ctx.elements() {
        let t = h.eval(ctx, g_inv.apply(lambda.apply(y)));
        if t.rank() == 0 {
            return Err(Error::DivisionByZero);
        }
        nodes.push((y, ctx.mul(y, ctx.inv(t)?)));
    }
    Ok(Poly::interpolate(ctx, &nodes)?.normalize(ctx))
}

/// The dual-diagram consequence for the multiplicative theorem:
/// lambda(f^{-1}(y)) = g^{-1}(lambda_bar(y)) for all y in the domain.
pub fn dual_consequence_holds(form: &GeneralMultForm) -> Result<bool> {
    let f_inv = brute_inverse(form.f_table())?;
    let g_inv = invert_injective(form.square.h())?;
    Ok(form.f_table().domain().iter().all(|&y| {
        form.square.lambda().apply(f_inv.apply(y)) == g_inv.apply(form.square.lambda_bar().apply(y))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_inverse_poly;

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
    fn check_index_pp_examples() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        let form = IndexForm::new(&f7, 1, 3, poly(&f7, &[(1, 1), (0, 3)])).unwrap();
        assert!(check_index_pp(&f7, &form));
        // its g is the identity on mu_2
        let g = form.g_map(&f7);
        assert_eq!(g.apply(f7.elem(1)), f7.elem(1));
        assert_eq!(g.apply(f7.elem(6)), f7.elem(6));

        let f5 = FieldCtx::new(5, 1).unwrap();
        let cube = IndexForm::new(&f5, 3, 2, Poly::one(&f5)).unwrap();
        assert!(check_index_pp(&f5, &cube));
        let bad = IndexForm::new(&f5, 2, 2, Poly::one(&f5)).unwrap();
        assert!(!check_index_pp(&f5, &bad));
        assert_eq!(
            IndexForm::new(&f5, 1, 3, Poly::one(&f5)).unwrap_err(),
            Error::BadIndex
        );
    }

    #[test]
    fn g_inverse_examples() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        let form = IndexForm::new(&f7, 1, 3, poly(&f7, &[(1, 1), (0, 3)])).unwrap();
        let (table, g_poly) = g_inverse_on_mu(&f7, &form).unwrap();
        assert_eq!(table.apply(f7.elem(1)), f7.elem(1));
        assert_eq!(table.apply(f7.elem(6)), f7.elem(6));
        assert_eq!(g_poly, Poly::x(&f7));

        // F_5, r=3, s=2, h=1: g = x^3 = x^{-1} fixes mu_2 = {1, 4}
        let f5 = FieldCtx::new(5, 1).unwrap();
        let form = IndexForm::new(&f5, 3, 2, Poly::one(&f5)).unwrap();
        let (table, g_poly) = g_inverse_on_mu(&f5, &form).unwrap();
        assert_eq!(table.apply(f5.elem(4)), f5.elem(4));
        assert_eq!(g_poly, Poly::x(&f5));
    }

    #[test]
    fn invert_index_b_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let cube = IndexForm::new(&f5, 3, 2, Poly::one(&f5)).unwrap();
        let inv = invert_index_b(&f5, &cube).unwrap();
        assert_eq!(inv, poly(&f5, &[(3, 1)]));
        assert_eq!(inv, oracle_inverse_poly(&f5, &cube.f_poly(&f5)).unwrap());

        let f7 = FieldCtx::new(7, 1).unwrap();
        let form = IndexForm::new(&f7, 1, 3, poly(&f7, &[(1, 1), (0, 3)])).unwrap();
        let inv = invert_index_b(&f7, &form).unwrap();
        assert_eq!(inv, oracle_inverse_poly(&f7, &form.f_poly(&f7)).unwrap());
        assert_eq!(inv.eval(&f7, f7.elem(4)), f7.elem(1));
        assert_eq!(inv.eval(&f7, f7.elem(1)), f7.elem(2));

        let ident = IndexForm::new(&f7, 1, 1, Poly::one(&f7)).unwrap();
        assert_eq!(invert_index_b(&f7, &ident).unwrap(), Poly::x(&f7));
    }

    #[test]
    fn invert_index_b_rejects_bad_gcd() {
        // f = x^2 (x^3 + 2) permutes F_7 but gcd(2, 6) = 2
        let f7 = FieldCtx::new(7, 1).unwrap();
        let form = IndexForm::new(&f7, 2, 3, poly(&f7, &[(1, 1), (0, 2)])).unwrap();
        assert!(check_index_pp(&f7, &form));
        assert_eq!(invert_index_b(&f7, &form), Err(Error::GcdHypothesisFailed));
        // the two-exponent recipe still applies
        let ab = invert_index_ab(&f7, &form).unwrap();
        assert_eq!(ab.poly, oracle_inverse_poly(&f7, &form.f_poly(&f7)).unwrap());
        assert!(eq41_holds(&f7, &form, &ab));
    }

    #[test]
    fn invert_index_ab_examples() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        let form = IndexForm::new(&f7, 1, 3, poly(&f7, &[(1, 1), (0, 3)])).unwrap();
        let ab = invert_index_ab(&f7, &form).unwrap();
        assert_eq!((ab.a, ab.b), (0, 1));
        assert_eq!(ab.poly, invert_index_b(&f7, &form).unwrap());

        let f5 = FieldCtx::new(5, 1).unwrap();
        let cube = IndexForm::new(&f5, 3, 2, Poly::one(&f5)).unwrap();
        let ab = invert_index_ab(&f5, &cube).unwrap();
        assert_eq!((ab.a, ab.b), (-1, 1));
        assert_eq!(ab.poly, poly(&f5, &[(3, 1)]));
        assert!(eq41_holds(&f5, &cube, &ab));

        let ident = IndexForm::new(&f5, 1, 1, Poly::one(&f5)).unwrap();
        let ab = invert_index_ab(&f5, &ident).unwrap();
        assert_eq!(ab.poly, Poly::x(&f5));
    }

    #[test]
    fn general_mult_examples() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        let nz: Vec<_> = f7.nonzero_elements().collect();
        let lam = PointMap::of_poly(&f7, &poly(&f7, &[(3, 1)]), nz.clone());
        let form = GeneralMultForm::new(
            &f7,
            Poly::x(&f7),
            poly(&f7, &[(1, 1), (0, 3)]),
            lam.clone(),
            lam.clone(),
        )
        .unwrap();
        let inv = invert_mult_general_full(&f7, &form).unwrap();
        let index = IndexForm::new(&f7, 1, 3, poly(&f7, &[(1, 1), (0, 3)])).unwrap();
        assert_eq!(inv, invert_index_b(&f7, &index).unwrap());
        assert!(dual_consequence_holds(&form).unwrap());

        // f1 = x^3 with h = 1 reduces to f1^{-1}
        let f5 = FieldCtx::new(5, 1).unwrap();
        let nz5: Vec<_> = f5.nonzero_elements().collect();
        let lam5 = PointMap::of_poly(&f5, &poly(&f5, &[(2, 1)]), nz5.clone());
        let form = GeneralMultForm::new(
            &f5,
            poly(&f5, &[(3, 1)]),
            Poly::one(&f5),
            lam5.clone(),
            lam5,
        )
        .unwrap();
        let inv = invert_mult_general_full(&f5, &form).unwrap();
        assert_eq!(inv, poly(&f5, &[(3, 1)]));
    }

    #[test]
    fn hybrid_examples() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        let all: Vec<_> = f7.elements().collect();
        let cube = poly(&f7, &[(3, 1)]);
        let lam = PointMap::of_poly(&f7, &cube, all.clone());
        let h = poly(&f7, &[(1, 1), (0, 3)]);
        let inv = invert_hybrid_xh(&f7, &h, &lam, &cube).unwrap();
        let index = IndexForm::new(&f7, 1, 3, h.clone()).unwrap();
        assert_eq!(inv, invert_index_b(&f7, &index).unwrap());

        // constant h = c: f = c x, f^{-1} = c^{-1} x
        let h = poly(&f7, &[(0, 3)]);
        let lam_id = PointMap::from_fn(&f7, all.clone(), |_| f7.zero());
        // lambda identically 0 satisfies lambda(a*alpha) = k(a)*lambda(alpha)
        // for k = x (k(0) = 0)
        let inv = invert_hybrid_xh(&f7, &h, &lam_id, &Poly::x(&f7)).unwrap();
        assert_eq!(inv, poly(&f7, &[(1, 5)])); // 3^{-1} = 5 in F_7

        // violated law is reported by name
        let lam_bad = PointMap::of_poly(&f7, &poly(&f7, &[(2, 1)]), all.clone());
        let err = invert_hybrid_xh(&f7, &h, &lam_bad, &cube).unwrap_err();
        assert!(matches!(err, Error::HypothesisFailed(_)));
    }
}
