//! Dense univariate polynomials over a `FieldCtx`, the functional normal form
//! mod x^q - x, and Newton interpolation (the inversion oracle's engine).

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::oracle::PointMap;

/// Coefficients low-to-high with no trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().map(|c| c.rank()) == Some(0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Poly {
        Poly::new(vec![c])
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::constant(ctx.one())
    }

    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly::new(vec![ctx.zero(), ctx.one()])
    }

    pub fn monomial(ctx: &FieldCtx, e: usize, c: FieldElem) -> Poly {
        let mut v = vec![ctx.zero(); e + 1];
        v[e] = c;
        Poly::new(v)
    }

    /// Builds from sparse (exponent, coefficient) terms, accumulating repeats.
    pub fn from_terms(ctx: &FieldCtx, terms: &[(usize, FieldElem)]) -> Poly {
        let deg = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut v = vec![ctx.zero(); deg + 1];
        for &(e, c) in terms {
            v[e] = ctx.add(v[e], c);
        }
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> FieldElem {
        self.coeffs.get(e).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        let mut acc = ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(len);
        for i in 0..len {
            v.push(ctx.add(self.coeff(i), other.coeff(i)));
        }
        Poly::new(v)
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(len);
        for i in 0..len {
            v.push(ctx.sub(self.coeff(i), other.coeff(i)));
        }
        Poly::new(v)
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.rank() == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = ctx.add(v[i + j], ctx.mul(a, b));
            }
        }
        Poly::new(v)
    }

    /// Euclidean division by a nonzero divisor: (quotient, remainder).
    pub fn div_rem(&self, ctx: &FieldCtx, divisor: &Poly) -> Result<(Poly, Poly)> {
        if divisor.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = ctx.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![ctx.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let da = rem.len() - 1;
            let c = ctx.mul(rem[da], lead_inv);
            if c.rank() != 0 {
                quo[da - dd] = c;
                for k in 0..=dd {
                    rem[da - dd + k] = ctx.sub(rem[da - dd + k], ctx.mul(c, divisor.coeffs[k]));
                }
            } else {
                rem[da] = ctx.zero();
            }
            while rem.last().map(|x| x.rank()) == Some(0) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        Ok((Poly::new(quo), Poly::new(rem)))
    }

    /// Monic gcd over F_q[x]; gcd(0, 0) = 0.
    pub fn gcd(ctx: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(ctx, &b).expect("divisor nonzero");
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let li = ctx.inv(a.coeffs[d]).expect("lead nonzero");
            a = a.scale(ctx, li);
        }
        a
    }

    /// The unique polynomial of degree < q inducing the same function on F_q:
    /// exponents e >= q fold to ((e-1) mod (q-1)) + 1 with coefficient
    /// accumulation; the constant term is untouched.
    pub fn normalize(&self, ctx: &FieldCtx) -> Poly {
        let q = ctx.q() as usize;
        let mut v = vec![ctx.zero(); q.min(self.coeffs.len())];
        for (e, &c) in self.coeffs.iter().enumerate() {
            let ne = if e >= q { ((e - 1) % (q - 1)) + 1 } else { e };
            v[ne] = ctx.add(v[ne], c);
        }
        Poly::new(v)
    }

    /// The full value table on F_q.
    pub fn value_table(&self, ctx: &FieldCtx) -> PointMap {
        PointMap::from_fn(ctx, ctx.elements().collect(), |x| self.eval(ctx, x))
    }

    /// Composition self(other), reduced mod x^q - x along the way.
    pub fn compose(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(ctx, other).normalize(ctx);
            acc = acc.add(ctx, &Poly::constant(c));
        }
        acc
    }

    /// Newton interpolation through distinct nodes; degree < nodes.len().
    pub fn interpolate(ctx: &FieldCtx, nodes: &[(FieldElem, FieldElem)]) -> Result<Poly> {
        let m = nodes.len();
        if m == 0 {
            return Ok(Poly::zero());
        }
        {
            let mut ranks: Vec<u64> = nodes.iter().map(|(x, _)| x.rank()).collect();
            ranks.sort_unstable();
            if ranks.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DuplicateNodes);
            }
        }
        let xs: Vec<FieldElem> = nodes.iter().map(|&(x, _)| x).collect();
        let mut dd: Vec<FieldElem> = nodes.iter().map(|&(_, y)| y).collect();
        for j in 1..m {
            for i in (j..m).rev() {
                let num = ctx.sub(dd[i], dd[i - 1]);
                let den = ctx.sub(xs[i], xs[i - j]);
                dd[i] = ctx.mul(num, ctx.inv(den)?);
            }
        }
        // expand the Newton form
        let mut out = Poly::zero();
        for i in (0..m).rev() {
            let shift = Poly::new(vec![ctx.neg(xs[i]), ctx.one()]);
            out = out.mul(ctx, &shift);
            out = out.add(ctx, &Poly::constant(dd[i]));
        }
        Ok(out)
    }

    /// Renders in the CLI literal grammar, highest term first.
    pub fn display(&self, ctx: &FieldCtx) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c.rank() == 0 {
                continue;
            }
            let cs = ctx.elem_string(c);
            let part = match e {
                0 => cs,
                1 => {
                    if c == ctx.one() {
                        "x".to_string()
                    } else {
                        format!("{cs}*x")
                    }
                }
                _ => {
                    if c == ctx.one() {
                        format!("x^{e}")
                    } else {
                        format!("{cs}*x^{e}")
                    }
                }
            };
            parts.push(part);
        }
        parts.join("+")
    }
}

/// The unique polynomial of degree < q whose value table equals the input;
/// `DomainNotTotal` if the table misses any field element.
pub fn lagrange_interpolate(ctx: &FieldCtx, table: &PointMap) -> Result<Poly> {
    if table.len() as u64 != ctx.q() {
        return Err(Error::DomainNotTotal);
    }
    let mut seen = vec![false; ctx.q() as usize];
    for &x in table.domain() {
        seen[x.rank() as usize] = true;
    }
    if seen.iter().any(|&b| !b) {
        return Err(Error::DomainNotTotal);
    }
    let nodes: Vec<(FieldElem, FieldElem)> = table
        .domain()
        .iter()
        .zip(table.images())
        .map(|(&x, &y)| (x, y))
        .collect();
    Poly::interpolate(ctx, &nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

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
    fn eval_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let f = poly(&f5, &[(3, 1), (0, 1)]);
        assert_eq!(f.eval(&f5, f5.elem(2)), f5.elem(4));

        let f7 = FieldCtx::new(7, 1).unwrap();
        let g = poly(&f7, &[(4, 1), (1, 3)]);
        assert_eq!(g.eval(&f7, f7.elem(2)), f7.one());
        for x in f7.elements() {
            assert_eq!(Poly::x(&f7).eval(&f7, x), x);
        }
    }

    #[test]
    fn normalize_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(poly(&f5, &[(9, 1)]).normalize(&f5), poly(&f5, &[(1, 1)]));
        assert_eq!(
            poly(&f5, &[(4, 1), (8, 1)]).normalize(&f5),
            poly(&f5, &[(4, 2)])
        );
        assert_eq!(poly(&f5, &[(0, 3)]).normalize(&f5), poly(&f5, &[(0, 3)]));
    }

    #[test]
    fn normalize_preserves_value_tables() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 121, 125, 128] {
            let ctx = FieldCtx::from_order(q).unwrap();
            // a few stress polynomials with exponents beyond q
            let polys = [
                poly(&ctx, &[(q as usize + 3, 1), (2, 1)]),
                poly(&ctx, &[(2 * q as usize, 1), (q as usize, 1), (0, 1)]),
                poly(&ctx, &[(3 * q as usize - 2, 2), (1, 1)]),
            ];
            for f in polys {
                let n = f.normalize(&ctx);
                assert!(n.degree().map_or(true, |d| (d as u64) < q));
                for x in ctx.elements() {
                    assert_eq!(f.eval(&ctx, x), n.eval(&ctx, x), "q={q}");
                }
            }
        }
    }

    #[test]
    fn interpolate_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let id = PointMap::from_fn(&f5, f5.elements().collect(), |x| x);
        assert_eq!(lagrange_interpolate(&f5, &id).unwrap(), Poly::x(&f5));

        let cube = poly(&f5, &[(3, 1)]);
        let table = cube.value_table(&f5);
        assert_eq!(lagrange_interpolate(&f5, &table).unwrap(), cube);

        let zero = PointMap::from_fn(&f5, f5.elements().collect(), |_| f5.zero());
        assert_eq!(lagrange_interpolate(&f5, &zero).unwrap(), Poly::zero());

        let partial = PointMap::from_fn(&f5, vec![f5.elem(0), f5.elem(1)], |x| x);
        assert_eq!(
            lagrange_interpolate(&f5, &partial),
            Err(Error::DomainNotTotal)
        );
    }

    #[test]
    fn interpolation_left_inverts_value_table() {
        for q in [4u64, 5, 7, 9, 13, 16, 27] {
            let ctx = FieldCtx::from_order(q).unwrap();
            let mut rng = crate::testutil::SplitMix::new(0x9e37 + q);
            for _ in 0..10 {
                let f = crate::testutil::random_poly(&ctx, &mut rng, (q + 3) as usize);
                let n = f.normalize(&ctx);
                let back = lagrange_interpolate(&ctx, &f.value_table(&ctx)).unwrap();
                assert_eq!(back, n, "q={q}");
            }
        }
    }

    #[test]
    fn div_rem_and_gcd() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        let a = poly(&f7, &[(3, 1), (0, 6)]); // x^3 - 1
        let b = poly(&f7, &[(1, 1), (0, 6)]); // x - 1
        let (q, r) = a.div_rem(&f7, &b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&f7, &b), a);
        assert_eq!(Poly::gcd(&f7, &a, &b), b);
    }

    #[test]
    fn compose_reduces() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let cube = poly(&f5, &[(3, 1)]);
        let c = cube.compose(&f5, &cube); // x^9 = x
        assert_eq!(c, Poly::x(&f5));
    }
}
