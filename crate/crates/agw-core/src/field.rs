//! Exact arithmetic in F_{p^n} with a deterministic field model.
//!
//! The modulus is the smallest monic irreducible of its degree (coefficient
//! vectors compared as base-p integers), the primitive element is the one of
//! smallest enumeration rank, and elements are enumerated by rank: the element
//! with base-p digit vector (c_0, ..., c_{n-1}) in the power basis has rank
//! sum c_i * p^i. Every downstream catalog is reproducible bit for bit.

use crate::error::{Error, Result};

/// Hard ceiling on field order; keeps table construction bounded.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of a fixed `FieldCtx`, identified by its enumeration rank.
///
/// Arithmetic goes through the owning context; mixing elements of different
/// contexts is a logic error the type system does not police.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldElem(u64);

impl FieldElem {
    /// Rank 0 is the zero element in every context.
    pub const ZERO: FieldElem = FieldElem(0);

    pub fn rank(self) -> u64 {
        self.0
    }
}

/// A concrete finite field F_{p^n}: modulus, primitive element, and the
/// exp/log tables that make multiplicative arithmetic O(1).
///
/// Immutable after construction and safe to share across threads.
#[derive(Clone)]
pub struct FieldCtx {
    p: u64,
    n: usize,
    q: u64,
    /// Monic degree-n modulus over F_p, coefficients low-to-high (length n+1).
    modulus: Vec<u64>,
    gamma: FieldElem,
    /// exp[i] = gamma^i for i in 0..q-1.
    exp: Vec<FieldElem>,
    /// log[rank] with log[0] unused.
    log: Vec<u64>,
    /// Flattened digit vectors: digits[rank*n .. rank*n+n].
    digits: Vec<u64>,
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .field("gamma", &self.gamma)
            .finish()
    }
}

impl FieldCtx {
    /// Builds F_{p^n} with the canonical (smallest) irreducible modulus.
    pub fn new(p: u64, n: usize) -> Result<FieldCtx> {
        let modulus = find_irreducible(p, n)?;
        FieldCtx::with_modulus(p, n, modulus)
    }

    /// Builds F_{p^n} with an explicit monic irreducible modulus
    /// (length n+1, low-to-high, last coefficient 1).
    pub fn with_modulus(p: u64, n: usize, modulus: Vec<u64>) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let q = checked_pow(p, n).ok_or_else(|| {
            Error::InvalidField(format!("{p}^{n} exceeds the supported field order"))
        })?;
        if modulus.len() != n + 1 || modulus[n] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(
                "modulus must be monic of degree n with coefficients in [0, p)".into(),
            ));
        }
        if !fp_is_irreducible(p, &modulus) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }

        let mut digits = vec![0u64; (q as usize) * n];
        for rank in 0..q {
            let mut r = rank;
            for i in 0..n {
                digits[(rank as usize) * n + i] = r % p;
                r /= p;
            }
        }

        let mut ctx = FieldCtx {
            p,
            n,
            q,
            modulus,
            gamma: FieldElem(1),
            exp: Vec::new(),
            log: Vec::new(),
            digits,
        };
        ctx.gamma = ctx.scan_primitive()?;
        ctx.build_log_tables();
        Ok(ctx)
    }

    /// Builds the canonical field of a given prime-power order.
    pub fn from_order(q: u64) -> Result<FieldCtx> {
        let (p, n) =
            prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        FieldCtx::new(p, n)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The fixed primitive element (smallest rank of multiplicative order q-1).
    pub fn gamma(&self) -> FieldElem {
        self.gamma
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    pub fn elem(&self, rank: u64) -> FieldElem {
        assert!(rank < self.q, "rank {rank} out of range for q={}", self.q);
        FieldElem(rank)
    }

    /// Embeds a small integer via the prime subfield (rank c mod p).
    pub fn from_int(&self, c: u64) -> FieldElem {
        FieldElem(c % self.p)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.q).map(FieldElem)
    }

    /// Power-basis coordinates (c_0, ..., c_{n-1}) of an element.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        self.digit_slice(a.0).to_vec()
    }

    /// Element with the given power-basis coordinates (short vectors are
    /// zero-padded; entries reduced mod p).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.n {
            return Err(Error::InvalidField(format!(
                "coordinate vector longer than extension degree {}",
                self.n
            )));
        }
        let mut rank = 0u64;
        let mut pw = 1u64;
        for i in 0..self.n {
            let c = coeffs.get(i).copied().unwrap_or(0) % self.p;
            rank += c * pw;
            pw = pw.saturating_mul(self.p);
        }
        Ok(FieldElem(rank))
    }

    fn digit_slice(&self, rank: u64) -> &[u64] {
        let i = (rank as usize) * self.n;
        &self.digits[i..i + self.n]
    }

    fn rank_of_digits(&self, d: &[u64]) -> u64 {
        let mut rank = 0u64;
        let mut pw = 1u64;
        for &c in d.iter() {
            rank += c * pw;
            pw = pw.saturating_mul(self.p);
        }
        rank
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let da = self.digit_slice(a.0);
        let db = self.digit_slice(b.0);
        let mut rank = 0u64;
        let mut pw = 1u64;
        for i in 0..self.n {
            let c = da[i] + db[i];
            let c = if c >= self.p { c - self.p } else { c };
            rank += c * pw;
            pw = pw.saturating_mul(self.p);
        }
        FieldElem(rank)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let da = self.digit_slice(a.0);
        let mut rank = 0u64;
        let mut pw = 1u64;
        for i in 0..self.n {
            let c = if da[i] == 0 { 0 } else { self.p - da[i] };
            rank += c * pw;
            pw = pw.saturating_mul(self.p);
        }
        FieldElem(rank)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        let m = self.q - 1;
        self.exp[((self.log[a.0 as usize] + self.log[b.0 as usize]) % m) as usize]
    }

    /// Multiplicative inverse; `ZeroInverse` on 0.
    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let m = self.q - 1;
        Ok(self.exp[((m - self.log[a.0 as usize]) % m) as usize])
    }

    /// a^e with integer exponents reduced mod q-1 for nonzero bases.
    /// 0^e = 0 for e > 0; 0^0 and negative powers of 0 are rejected.
    pub fn pow(&self, a: FieldElem, e: i64) -> Result<FieldElem> {
        if a.0 == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Greater => Ok(FieldElem(0)),
                std::cmp::Ordering::Equal => Err(Error::Undefined),
                std::cmp::Ordering::Less => Err(Error::ZeroInverse),
            };
        }
        let m = (self.q - 1) as i64;
        let e = e.rem_euclid(m) as u64;
        Ok(self.exp[((self.log[a.0 as usize] * e) % (self.q - 1)) as usize])
    }

    /// Discrete log base gamma; `ZeroArgument` on 0.
    pub fn log(&self, a: FieldElem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(self.log[a.0 as usize])
    }

    /// Absolute trace to the prime subfield: a + a^p + ... + a^{p^{n-1}}.
    pub fn trace(&self, a: FieldElem) -> FieldElem {
        let mut acc = self.zero();
        let mut t = a;
        for _ in 0..self.n {
            acc = self.add(acc, t);
            t = self.pow(t, self.p as i64).unwrap_or(FieldElem(0));
            if a.0 == 0 {
                break;
            }
        }
        acc
    }

    /// Index i of the cyclotomic coset C_i = gamma^i <gamma^ell> containing x.
    pub fn coset_index(&self, sys: &CyclotomicSys, x: FieldElem) -> Result<u64> {
        if x.0 == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(self.log[x.0 as usize] % sys.ell)
    }

    pub fn elem_string(&self, a: FieldElem) -> String {
        if self.n == 1 {
            format!("{}", a.0)
        } else {
            let cs: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", cs.join(","))
        }
    }

    // Coefficient-space multiplication; used only before the log tables exist.
    fn mul_digits(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // reduce by the monic modulus
        for i in (n..2 * n - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for k in 0..n {
                let m = (c * self.modulus[k]) % self.p;
                let idx = i - n + k;
                prod[idx] = (prod[idx] + self.p - m) % self.p;
            }
        }
        prod.truncate(n);
        prod
    }

    fn pow_digits(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0u64; self.n];
        acc[0] = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_digits(&acc, &base);
            }
            base = self.mul_digits(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn scan_primitive(&self) -> Result<FieldElem> {
        if self.q == 2 {
            return Ok(FieldElem(1));
        }
        let m = self.q - 1;
        let primes = prime_factors(m);
        for rank in 1..self.q {
            let d = self.digit_slice(rank).to_vec();
            let ok = primes.iter().all(|&pr| {
                let e = m / pr;
                let v = self.pow_digits(&d, e);
                self.rank_of_digits(&v) != 1
            });
            if ok {
                return Ok(FieldElem(rank));
            }
        }
        Err(Error::InvalidField(
            "no primitive element found (modulus reducible?)".into(),
        ))
    }

    fn build_log_tables(&mut self) {
        let m = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(m);
        let mut log = vec![u64::MAX; self.q as usize];
        let g = self.digit_slice(self.gamma.0).to_vec();
        let mut cur = vec![0u64; self.n];
        cur[0] = 1;
        for i in 0..m {
            let rank = self.rank_of_digits(&cur);
            exp.push(FieldElem(rank));
            log[rank as usize] = i as u64;
            cur = self.mul_digits(&cur, &g);
        }
        debug_assert!(log.iter().skip(1).all(|&v| v != u64::MAX));
        self.exp = exp;
        self.log = log;
    }
}

/// The index-s cyclotomic system: s | q-1, ell = (q-1)/s, the group mu_ell of
/// ell-th roots of unity, and the cosets C_i = gamma^i <gamma^ell>.
#[derive(Clone, Debug)]
pub struct CyclotomicSys {
    s: u64,
    ell: u64,
    /// mu_ell listed as successive powers of gamma^s.
    mu: Vec<FieldElem>,
}

impl CyclotomicSys {
    pub fn new(ctx: &FieldCtx, s: u64) -> Result<CyclotomicSys> {
        let m = ctx.q() - 1;
        if s == 0 || m % s != 0 {
            return Err(Error::BadIndex);
        }
        let ell = m / s;
        let mut mu = Vec::with_capacity(ell as usize);
        for j in 0..ell {
            mu.push(ctx.pow(ctx.gamma(), (j * s) as i64).expect("gamma nonzero"));
        }
        Ok(CyclotomicSys { s, ell, mu })
    }

    /// Builds the system with a prescribed index ell = (q-1)/s.
    pub fn from_index(ctx: &FieldCtx, ell: u64) -> Result<CyclotomicSys> {
        let m = ctx.q() - 1;
        if ell == 0 || m % ell != 0 {
            return Err(Error::BadIndex);
        }
        CyclotomicSys::new(ctx, m / ell)
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn mu(&self) -> &[FieldElem] {
        &self.mu
    }

    /// The coset C_i = { gamma^{i + ell*k} : k in 0..s }.
    pub fn coset(&self, ctx: &FieldCtx, i: u64) -> Result<Vec<FieldElem>> {
        if i >= self.ell {
            return Err(Error::IndexOutOfRange);
        }
        let mut out = Vec::with_capacity(self.s as usize);
        for k in 0..self.s {
            out.push(ctx.pow(ctx.gamma(), (i + self.ell * k) as i64).unwrap());
        }
        Ok(out)
    }
}

/// The monic degree-n irreducible over F_p that is minimal in the fixed
/// order: coefficient vectors (c_0, ..., c_{n-1}) compared as base-p
/// integers. For n = 1 this is x.
pub fn find_irreducible(p: u64, n: usize) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::InvalidField("degree must be >= 1".into()));
    }
    let count = checked_pow(p, n).ok_or_else(|| {
        Error::InvalidField(format!("{p}^{n} exceeds the supported field order"))
    })?;
    for v in 0..count {
        let mut f = Vec::with_capacity(n + 1);
        let mut r = v;
        for _ in 0..n {
            f.push(r % p);
            r /= p;
        }
        f.push(1);
        if fp_is_irreducible(p, &f) {
            return Ok(f);
        }
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

/// The element of smallest enumeration rank whose multiplicative order is
/// q - 1. Matches `ctx.gamma()` by construction.
pub fn find_primitive(ctx: &FieldCtx) -> FieldElem {
    let m = ctx.q() - 1;
    if m == 1 {
        return ctx.one();
    }
    let primes = prime_factors(m);
    for a in ctx.nonzero_elements() {
        if primes
            .iter()
            .all(|&pr| ctx.pow(a, (m / pr) as i64).unwrap() != ctx.one())
        {
            return a;
        }
    }
    unreachable!("F_q^* is cyclic")
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Decomposes q = p^n with p prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    let mut n = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    if r == 1 {
        Some((p, n))
    } else {
        None
    }
}

pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Euler's totient by trial division.
pub fn euler_phi(mut m: u64) -> u64 {
    let mut out = m;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out -= out / d;
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

fn checked_pow(p: u64, n: usize) -> Option<u64> {
    let mut q = 1u64;
    for _ in 0..n {
        q = q.checked_mul(p)?;
        if q > MAX_FIELD_ORDER {
            return None;
        }
    }
    Some(q)
}

// ---- F_p[x] helpers for modulus selection (pre-context arithmetic) ----

fn fp_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn fp_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = fp_inv_scalar(p, m[dm]);
    while r.len() > dm {
        let da = r.len() - 1;
        let c = (r[da] * lead_inv) % p;
        for k in 0..=dm {
            let idx = da - dm + k;
            r[idx] = (r[idx] + p - (c * m[k]) % p) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_mulmod(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    fp_rem(p, &prod, m)
}

fn fp_inv_scalar(p: u64, a: u64) -> u64 {
    // Fermat; p is prime and a nonzero.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn fp_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        let r = fp_rem(p, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let li = fp_inv_scalar(p, lead);
        for c in a.iter_mut() {
            *c = *c * li % p;
        }
    }
    a
}

/// x^(p^k) mod f, by k successive p-th powers.
fn fp_x_pk_mod(p: u64, k: usize, f: &[u64]) -> Vec<u64> {
    let mut cur = vec![0, 1]; // x
    cur = fp_rem(p, &cur, f);
    for _ in 0..k {
        // cur^p mod f via square-and-multiply
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_mulmod(p, &acc, &base, f);
            }
            base = fp_mulmod(p, &base, &base, f);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

/// Rabin irreducibility test for a monic f of degree n over F_p:
/// x^{p^n} = x mod f, and gcd(x^{p^{n/r}} - x, f) = 1 for every prime r | n.
pub fn fp_is_irreducible(p: u64, f: &[u64]) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if f[0] == 0 {
        return false; // divisible by x
    }
    let xpn = fp_x_pk_mod(p, n, f);
    let mut diff = xpn.clone();
    // subtract x
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    for r in prime_factors(n as u64) {
        let k = n / r as usize;
        let mut d = fp_x_pk_mod(p, k, f);
        if d.len() < 2 {
            d.resize(2, 0);
        }
        d[1] = (d[1] + p - 1) % p;
        fp_trim(&mut d);
        let g = fp_gcd(p, &d, f);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inv_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(f5.inv(f5.elem(2)).unwrap(), f5.elem(3));
        assert_eq!(f5.inv(f5.elem(1)).unwrap(), f5.elem(1));
        assert_eq!(f5.inv(f5.zero()), Err(Error::ZeroInverse));

        // F_4 = F_2[t]/(t^2+t+1): inv(t) = t+1
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let t = f4.from_coeffs(&[0, 1]).unwrap();
        let t1 = f4.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f4.inv(t).unwrap(), t1);
    }

    #[test]
    fn pow_examples() {
        let f7 = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f7.pow(f7.elem(3), 6).unwrap(), f7.one());
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(f5.pow(f5.elem(2), 3).unwrap(), f5.elem(3));

        // F_9 = F_3[t]/(t^2+1): t^4 = 1, cross-checked by repeated multiplication
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let t = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f9.pow(t, 4).unwrap(), f9.one());
        let mut acc = f9.one();
        for _ in 0..4 {
            acc = f9.mul(acc, t);
        }
        assert_eq!(acc, f9.one());

        assert_eq!(f5.pow(f5.zero(), 3).unwrap(), f5.zero());
        assert_eq!(f5.pow(f5.zero(), 0), Err(Error::Undefined));
        assert_eq!(f5.pow(f5.zero(), -1), Err(Error::ZeroInverse));
        // negative exponents are powers of the inverse
        assert_eq!(f5.pow(f5.elem(2), -1).unwrap(), f5.elem(3));
        assert_eq!(f5.pow(f5.elem(2), -2).unwrap(), f5.elem(4));
    }

    #[test]
    fn find_irreducible_examples() {
        assert_eq!(find_irreducible(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible(5, 1).unwrap(), vec![0, 1]);
        // deterministic
        assert_eq!(find_irreducible(2, 3).unwrap(), find_irreducible(2, 3).unwrap());
    }

    #[test]
    fn find_irreducible_is_minimal() {
        // independent scan: everything below the winner is reducible
        for (p, n) in [(2u64, 3usize), (3, 2), (2, 4), (5, 2)] {
            let won = find_irreducible(p, n).unwrap();
            let won_v: u64 = won[..n]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * p.pow(i as u32))
                .sum();
            for v in 0..won_v {
                let mut f = Vec::new();
                let mut r = v;
                for _ in 0..n {
                    f.push(r % p);
                    r /= p;
                }
                f.push(1);
                // brute-force reducibility: some monic divisor of degree in [1, n/2]
                assert!(!brute_irreducible(p, &f), "missed smaller irreducible {f:?}");
            }
            assert!(brute_irreducible(p, &won));
        }
    }

    // Exhaustive trial division by all monic polys of degree <= n/2.
    fn brute_irreducible(p: u64, f: &[u64]) -> bool {
        let n = f.len() - 1;
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for v in 0..count {
                let mut g = Vec::new();
                let mut r = v;
                for _ in 0..d {
                    g.push(r % p);
                    r /= p;
                }
                g.push(1);
                if fp_rem(p, f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn no_roots_and_full_check_for_extensions() {
        for (p, n) in [(2u64, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)] {
            let f = find_irreducible(p, n).unwrap();
            for c in 0..p {
                let mut v = 0u64;
                let mut pw = 1u64;
                for &co in &f {
                    v = (v + co * pw) % p;
                    pw = pw * c % p;
                }
                assert_ne!(v, 0, "root {c} of {f:?} mod {p}");
            }
            assert!(brute_irreducible(p, &f));
        }
    }

    #[test]
    fn find_primitive_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(find_primitive(&f5), f5.elem(2));
        assert_eq!(f5.gamma(), f5.elem(2));
        let f7 = FieldCtx::new(7, 1).unwrap();
        assert_eq!(find_primitive(&f7), f7.elem(3));
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(find_primitive(&f2), f2.one());
    }

    #[test]
    fn gamma_order_and_fermat() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 127, 128] {
            let ctx = FieldCtx::from_order(q).unwrap();
            // gamma has order exactly q-1: brute force by repeated multiplication
            let mut acc = ctx.one();
            let mut order = 0;
            loop {
                acc = ctx.mul(acc, ctx.gamma());
                order += 1;
                if acc == ctx.one() {
                    break;
                }
            }
            assert_eq!(order, q - 1, "gamma order wrong for q={q}");
            for a in ctx.nonzero_elements() {
                assert_eq!(ctx.pow(a, (q - 1) as i64).unwrap(), ctx.one());
                let b = ctx.inv(a).unwrap();
                assert_eq!(ctx.mul(a, b), ctx.one());
                assert_eq!(ctx.inv(b).unwrap(), a);
            }
        }
    }

    #[test]
    fn coset_index_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let sys = CyclotomicSys::from_index(&f5, 2).unwrap();
        assert_eq!(f5.coset_index(&sys, f5.elem(4)).unwrap(), 0);
        assert_eq!(f5.coset_index(&sys, f5.elem(3)).unwrap(), 1);
        assert_eq!(f5.coset_index(&sys, f5.zero()), Err(Error::ZeroArgument));

        let f7 = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f7.gamma(), f7.elem(3));
        let sys7 = CyclotomicSys::from_index(&f7, 2).unwrap();
        assert_eq!(f7.coset_index(&sys7, f7.elem(6)).unwrap(), 1);
    }

    #[test]
    fn cosets_partition_nonzero_elements() {
        for q in [4u64, 5, 7, 9, 13, 16, 25, 27] {
            let ctx = FieldCtx::from_order(q).unwrap();
            for ell in 1..=q - 1 {
                if (q - 1) % ell != 0 {
                    continue;
                }
                let sys = CyclotomicSys::from_index(&ctx, ell).unwrap();
                let mut seen = vec![false; q as usize];
                let mut total = 0u64;
                for i in 0..sys.ell() {
                    for x in sys.coset(&ctx, i).unwrap() {
                        assert!(!seen[x.rank() as usize], "cosets overlap");
                        seen[x.rank() as usize] = true;
                        total += 1;
                        assert_eq!(ctx.coset_index(&sys, x).unwrap(), i);
                    }
                }
                assert_eq!(total, q - 1);
                assert_eq!(sys.mu().len() as u64, sys.ell());
                // mu_ell is exactly the image of x -> x^s
                let mut mu_sorted: Vec<_> = sys.mu().to_vec();
                mu_sorted.sort();
                let mut image: Vec<_> = ctx
                    .nonzero_elements()
                    .map(|x| ctx.pow(x, sys.s() as i64).unwrap())
                    .collect();
                image.sort();
                image.dedup();
                assert_eq!(mu_sorted, image);
            }
        }
    }

    #[test]
    fn enumeration_order_is_base_p_digits() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.coeffs(f9.elem(5)), vec![2, 1]); // 5 = 2 + 1*3
        assert_eq!(f9.from_coeffs(&[2, 1]).unwrap(), f9.elem(5));
        let f8 = FieldCtx::new(2, 3).unwrap();
        assert_eq!(f8.coeffs(f8.elem(6)), vec![0, 1, 1]);
    }

    #[test]
    fn explicit_modulus_is_validated() {
        assert!(FieldCtx::with_modulus(3, 2, vec![1, 0, 1]).is_ok());
        // x^2 + 2 = (x+1)(x+2) mod 3
        assert!(FieldCtx::with_modulus(3, 2, vec![2, 0, 1]).is_err());
        assert!(FieldCtx::with_modulus(4, 1, vec![0, 1]).is_err());
    }
}
