//! Ground truth: explicit function tables, exhaustive permutation tests,
//! brute-force inverses, and the fiber-based bijection checks behind the
//! commutative-square criterion.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::poly::{lagrange_interpolate, Poly};

/// Default ceiling for the exhaustive oracle; override with AGW_MAX_Q.
pub const DEFAULT_MAX_Q: u64 = 16384;

/// The oracle size cap: AGW_MAX_Q when set and parseable, 16384 otherwise.
pub fn oracle_limit() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("AGW_MAX_Q")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_Q)
    })
}

/// An explicit table of a function on a finite domain; the universal oracle
/// representation. The domain carries no duplicates.
#[derive(Clone, Debug)]
pub struct PointMap {
    domain: Vec<FieldElem>,
    images: Vec<FieldElem>,
    /// rank -> index+1 into the parallel vectors; 0 means absent.
    index: Vec<u32>,
}

/// Structural equality in domain order; use `eq_as_function` to compare as
/// functions regardless of ordering.
impl PartialEq for PointMap {
    fn eq(&self, other: &PointMap) -> bool {
        self.domain == other.domain && self.images == other.images
    }
}

impl Eq for PointMap {}

impl PointMap {
    pub fn new(ctx: &FieldCtx, domain: Vec<FieldElem>, images: Vec<FieldElem>) -> Result<PointMap> {
        if domain.len() != images.len() {
            return Err(Error::InvalidPointMap(
                "domain and image lists differ in length".into(),
            ));
        }
        let mut index = vec![0u32; ctx.q() as usize];
        for (i, &x) in domain.iter().enumerate() {
            let slot = &mut index[x.rank() as usize];
            if *slot != 0 {
                return Err(Error::InvalidPointMap("duplicate domain element".into()));
            }
            *slot = (i + 1) as u32;
        }
        Ok(PointMap {
            domain,
            images,
            index,
        })
    }

    pub fn from_fn(
        ctx: &FieldCtx,
        domain: Vec<FieldElem>,
        f: impl Fn(FieldElem) -> FieldElem,
    ) -> PointMap {
        let images = domain.iter().map(|&x| f(x)).collect();
        PointMap::new(ctx, domain, images).expect("domain built without duplicates")
    }

    /// Table of a polynomial restricted to a domain.
    pub fn of_poly(ctx: &FieldCtx, f: &Poly, domain: Vec<FieldElem>) -> PointMap {
        PointMap::from_fn(ctx, domain, |x| f.eval(ctx, x))
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn domain(&self) -> &[FieldElem] {
        &self.domain
    }

    pub fn images(&self) -> &[FieldElem] {
        &self.images
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        self.index[x.rank() as usize] != 0
    }

    pub fn image_of(&self, x: FieldElem) -> Option<FieldElem> {
        let i = self.index[x.rank() as usize];
        if i == 0 {
            None
        } else {
            Some(self.images[(i - 1) as usize])
        }
    }

    /// Image under the table, panicking on out-of-domain points.
    pub fn apply(&self, x: FieldElem) -> FieldElem {
        self.image_of(x)
            .expect("point map applied outside its domain")
    }

    /// True iff no two domain points share an image.
    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.index.len()];
        for &y in &self.images {
            let r = y.rank() as usize;
            if seen[r] {
                return false;
            }
            seen[r] = true;
        }
        true
    }

    /// True iff the table is a bijection of its domain onto itself.
    pub fn is_permutation(&self) -> bool {
        self.is_injective() && self.images.iter().all(|&y| self.contains(y))
    }

    /// The image set, sorted by rank and deduplicated.
    pub fn image_set(&self) -> Vec<FieldElem> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The domain, sorted by rank.
    pub fn domain_set(&self) -> Vec<FieldElem> {
        let mut v = self.domain.clone();
        v.sort_unstable();
        v
    }

    /// Equality as functions: same domain set, same image at every point.
    pub fn eq_as_function(&self, other: &PointMap) -> bool {
        self.domain_set() == other.domain_set()
            && self
                .domain
                .iter()
                .all(|&x| other.image_of(x) == self.image_of(x))
    }

    /// True iff the image set equals the given set (surjectivity onto it).
    pub fn is_onto(&self, target: &[FieldElem]) -> bool {
        let mut t = target.to_vec();
        t.sort_unstable();
        t.dedup();
        self.image_set() == t
    }
}

/// True iff the polynomial induces a one-to-one map of F_q.
pub fn is_permutation(ctx: &FieldCtx, f: &Poly) -> bool {
    let mut seen = vec![false; ctx.q() as usize];
    for x in ctx.elements() {
        let r = f.eval(ctx, x).rank() as usize;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// Brute-force inverse table g with g(f(x)) = x, domain sorted by rank.
/// Refuses tables larger than the oracle cap.
pub fn brute_inverse(map: &PointMap) -> Result<PointMap> {
    let cap = oracle_limit();
    if map.len() as u64 > cap {
        return Err(Error::OracleTooLarge {
            size: map.len() as u64,
            cap,
        });
    }
    if !map.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let mut pairs: Vec<(FieldElem, FieldElem)> = map
        .domain
        .iter()
        .zip(&map.images)
        .map(|(&x, &y)| (y, x))
        .collect();
    pairs.sort_unstable_by_key(|&(y, _)| y.rank());
    let (domain, images): (Vec<FieldElem>, Vec<FieldElem>) = pairs.into_iter().unzip();
    Ok(PointMap {
        index: build_index(&domain, map.index.len()),
        domain,
        images,
    })
}

fn build_index(domain: &[FieldElem], q: usize) -> Vec<u32> {
    let mut index = vec![0u32; q];
    for (i, &x) in domain.iter().enumerate() {
        index[x.rank() as usize] = (i + 1) as u32;
    }
    index
}

/// Inverse table of an injective map whose codomain may differ from its
/// domain (the bottom maps S -> S_bar of a square); domain sorted by rank.
pub fn invert_injective(map: &PointMap) -> Result<PointMap> {
    if !map.is_injective() {
        return Err(Error::NotBijective);
    }
    let mut pairs: Vec<(FieldElem, FieldElem)> = map
        .domain
        .iter()
        .zip(&map.images)
        .map(|(&x, &y)| (y, x))
        .collect();
    pairs.sort_unstable_by_key(|&(y, _)| y.rank());
    let (domain, images): (Vec<FieldElem>, Vec<FieldElem>) = pairs.into_iter().unzip();
    Ok(PointMap {
        index: build_index(&domain, map.index.len()),
        domain,
        images,
    })
}

/// Brute-force inverse of a polynomial over the full field.
pub fn brute_inverse_poly_table(ctx: &FieldCtx, f: &Poly) -> Result<PointMap> {
    brute_inverse(&f.value_table(ctx))
}

/// The certified reference inverse: invert the full value table and
/// interpolate. Unique of degree < q.
pub fn oracle_inverse_poly(ctx: &FieldCtx, f: &Poly) -> Result<Poly> {
    let inv = brute_inverse_poly_table(ctx, f)?;
    lagrange_interpolate(ctx, &inv)
}

/// The two fiber conditions of the bijection lemma: (f injective on every
/// lambda-fiber, fiber images pairwise disjoint). Both hold iff f is a
/// bijection of its domain, which is asserted.
pub fn fiber_bijection_check(ctx: &FieldCtx, f: &PointMap, lambda: &PointMap) -> (bool, bool) {
    assert!(
        f.domain().iter().all(|&x| lambda.contains(x)),
        "lambda must be total on the domain of f"
    );
    let mut fiber_of = vec![u32::MAX; ctx.q() as usize];
    let mut fibers: Vec<Vec<FieldElem>> = Vec::new();
    for &x in f.domain() {
        let s = lambda.apply(x).rank() as usize;
        if fiber_of[s] == u32::MAX {
            fiber_of[s] = fibers.len() as u32;
            fibers.push(Vec::new());
        }
        fibers[fiber_of[s] as usize].push(x);
    }

    let mut injective_on_fibers = true;
    for fiber in &fibers {
        let mut vals: Vec<u64> = fiber.iter().map(|&x| f.apply(x).rank()).collect();
        vals.sort_unstable();
        if vals.windows(2).any(|w| w[0] == w[1]) {
            injective_on_fibers = false;
            break;
        }
    }

    let mut disjoint = true;
    let mut owner = vec![u32::MAX; ctx.q() as usize];
    'outer: for (fi, fiber) in fibers.iter().enumerate() {
        let mut local: Vec<u64> = Vec::with_capacity(fiber.len());
        for &x in fiber {
            let y = f.apply(x).rank() as usize;
            if owner[y] != u32::MAX && owner[y] != fi as u32 {
                disjoint = false;
                break 'outer;
            }
            owner[y] = fi as u32;
            local.push(y as u64);
        }
    }

    let both = injective_on_fibers && disjoint;
    assert_eq!(
        both,
        f.is_permutation(),
        "fiber conditions must match bijectivity"
    );
    (injective_on_fibers, disjoint)
}

/// Surjection composition criterion: with g : B -> A surjective and
/// f : A -> A, the map b -> f(g(b)) is onto A iff f is a bijection of A.
/// The equivalence is asserted.
pub fn surjective_composition_check(
    _ctx: &FieldCtx,
    f: &PointMap,
    g_surj: &PointMap,
) -> Result<bool> {
    let a_set = f.domain_set();
    if !g_surj.is_onto(&a_set) {
        return Err(Error::NotSurjective);
    }
    let mut hit = std::collections::BTreeSet::new();
    for &b in g_surj.domain() {
        hit.insert(f.apply(g_surj.apply(b)));
    }
    let onto = hit.len() == a_set.len() && a_set.iter().all(|x| hit.contains(x));
    assert_eq!(
        onto,
        f.is_permutation(),
        "composition surjectivity must match bijectivity"
    );
    Ok(onto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::poly::Poly;

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
    fn is_permutation_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert!(is_permutation(&f5, &poly(&f5, &[(3, 1)])));
        assert!(!is_permutation(&f5, &poly(&f5, &[(2, 1)])));

        let f7 = FieldCtx::new(7, 1).unwrap();
        let f = poly(&f7, &[(4, 1), (1, 3)]);
        assert!(is_permutation(&f7, &f));
        let vals: Vec<u64> = f7.elements().map(|x| f.eval(&f7, x).rank()).collect();
        assert_eq!(vals, vec![0, 4, 1, 6, 2, 3, 5]);
    }

    #[test]
    fn brute_inverse_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let id = Poly::x(&f5).value_table(&f5);
        let inv = brute_inverse(&id).unwrap();
        assert!(inv.eq_as_function(&id));

        let cube = poly(&f5, &[(3, 1)]);
        let inv = brute_inverse_poly_table(&f5, &cube).unwrap();
        assert!(inv.eq_as_function(&cube.value_table(&f5)));

        let f7 = FieldCtx::new(7, 1).unwrap();
        let f = poly(&f7, &[(4, 1), (1, 3)]);
        let inv = brute_inverse_poly_table(&f7, &f).unwrap();
        assert_eq!(inv.apply(f7.elem(4)), f7.elem(1));
        assert_eq!(inv.apply(f7.elem(1)), f7.elem(2));
        assert_eq!(inv.apply(f7.elem(6)), f7.elem(3));

        assert_eq!(
            brute_inverse_poly_table(&f5, &poly(&f5, &[(2, 1)])),
            Err(Error::NotPermutation)
        );
    }

    #[test]
    fn double_inverse_roundtrip() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        let f = poly(&f9, &[(3, 2)]);
        let t = f.value_table(&f9);
        let back = brute_inverse(&brute_inverse(&t).unwrap()).unwrap();
        assert!(back.eq_as_function(&t));
    }

    #[test]
    fn oracle_inverse_poly_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(
            oracle_inverse_poly(&f5, &Poly::x(&f5)).unwrap(),
            Poly::x(&f5)
        );
        let cube = poly(&f5, &[(3, 1)]);
        assert_eq!(oracle_inverse_poly(&f5, &cube).unwrap(), cube);

        let f9 = FieldCtx::new(3, 2).unwrap();
        let f = poly(&f9, &[(3, 2)]);
        assert_eq!(oracle_inverse_poly(&f9, &f).unwrap(), f);
        // composition really is the identity
        let inv = oracle_inverse_poly(&f9, &f).unwrap();
        for x in f9.elements() {
            assert_eq!(inv.eval(&f9, f.eval(&f9, x)), x);
        }
    }

    #[test]
    fn fiber_checks() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let nonzero: Vec<_> = f5.nonzero_elements().collect();
        let sq = poly(&f5, &[(2, 1)]);
        let lambda = PointMap::of_poly(&f5, &sq, nonzero.clone());
        let id = PointMap::from_fn(&f5, nonzero.clone(), |x| x);
        assert_eq!(fiber_bijection_check(&f5, &id, &lambda), (true, true));

        let fsq = PointMap::of_poly(&f5, &sq, nonzero.clone());
        let (inj, _) = fiber_bijection_check(&f5, &fsq, &lambda);
        assert!(!inj, "fiber {{2,3}} collides at 4");

        let f7 = FieldCtx::new(7, 1).unwrap();
        let nz7: Vec<_> = f7.nonzero_elements().collect();
        let f = PointMap::of_poly(&f7, &poly(&f7, &[(4, 1), (1, 3)]), nz7.clone());
        for lam in [poly(&f7, &[(3, 1)]), poly(&f7, &[(2, 1)])] {
            let lam = PointMap::of_poly(&f7, &lam, nz7.clone());
            assert_eq!(fiber_bijection_check(&f7, &f, &lam), (true, true));
        }
    }

    #[test]
    fn composition_surjectivity() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let all: Vec<_> = f5.elements().collect();
        let id = PointMap::from_fn(&f5, all.clone(), |x| x);
        let cube = PointMap::of_poly(&f5, &poly(&f5, &[(3, 1)]), all.clone());
        assert_eq!(surjective_composition_check(&f5, &cube, &id), Ok(true));
        let sq = PointMap::of_poly(&f5, &poly(&f5, &[(2, 1)]), all.clone());
        assert_eq!(surjective_composition_check(&f5, &sq, &id), Ok(false));

        // B = F_25, A = its prime subfield, g = coordinate projection (a fixed
        // surjection), f = x^3 on A
        let f25 = FieldCtx::new(5, 2).unwrap();
        let g = PointMap::from_fn(&f25, f25.elements().collect(), |x| {
            f25.elem(f25.coeffs(x)[0])
        });
        let a_set: Vec<_> = (0..5).map(|r| f25.elem(r)).collect();
        let f_cube = PointMap::of_poly(&f25, &poly(&f25, &[(3, 1)]), a_set);
        assert_eq!(surjective_composition_check(&f25, &f_cube, &g), Ok(true));

        // NotSurjective precondition
        let small = PointMap::from_fn(&f5, all.clone(), |_| f5.zero());
        assert_eq!(
            surjective_composition_check(&f5, &cube, &small),
            Err(Error::NotSurjective)
        );
    }

    #[test]
    fn oracle_cap_refuses() {
        // the cap applies to the table size; exercise via a tiny manual check
        let f5 = FieldCtx::new(5, 1).unwrap();
        let t = Poly::x(&f5).value_table(&f5);
        assert!(t.len() as u64 <= oracle_limit());
        assert!(brute_inverse(&t).is_ok());
    }
}
