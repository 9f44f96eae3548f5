//! Text literals: field specs ("p", "p^n", "p^n/[c0,...,1]" or a plain prime
//! power), elements ("7" or "[c0,c1,...]"), polynomials ("c*x^k" terms joined
//! by "+", with "-" tolerated), and linearized polynomials ("L:[a0,a1,...]").

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::linearized::{LinearizedPoly, Tower};
use crate::poly::Poly;

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Cursor<'a> {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            got => Err(err(
                self.pos,
                format!(
                    "expected '{}', found {}",
                    c as char,
                    got.map(|g| format!("'{}'", g as char))
                        .unwrap_or_else(|| "end of input".into())
                ),
            )),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.bytes.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or_else(|| err(start, "integer literal too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(err(start, "expected an integer"));
        }
        Ok(v)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.bytes.len()
    }
}

fn bracket_list_u64(cur: &mut Cursor) -> Result<Vec<u64>> {
    cur.expect(b'[')?;
    let mut out = Vec::new();
    if cur.peek() == Some(b']') {
        cur.bump();
        return Ok(out);
    }
    loop {
        out.push(cur.uint()?);
        match cur.bump() {
            Some(b',') => continue,
            Some(b']') => break,
            _ => return Err(err(cur.pos, "expected ',' or ']' in coefficient list")),
        }
    }
    Ok(out)
}

/// "p", "p^n", "p^n/[c0,...,1]", or a plain prime-power order like "9".
pub fn parse_field_spec(s: &str) -> Result<FieldCtx> {
    let mut cur = Cursor::new(s);
    let p_or_q = cur.uint()?;
    match cur.peek() {
        None => FieldCtx::from_order(p_or_q),
        Some(b'^') => {
            cur.bump();
            let n = cur.uint()? as usize;
            match cur.peek() {
                None => FieldCtx::new(p_or_q, n),
                Some(b'/') => {
                    cur.bump();
                    let modulus = bracket_list_u64(&mut cur)?;
                    if !cur.at_end() {
                        return Err(err(cur.pos, "trailing input after field spec"));
                    }
                    FieldCtx::with_modulus(p_or_q, n, modulus)
                }
                Some(c) => Err(err(cur.pos, format!("unexpected '{}' in field spec", c as char))),
            }
        }
        Some(c) => Err(err(
            cur.pos,
            format!("unexpected '{}' in field spec", c as char),
        )),
    }
}

fn element_from_cursor(ctx: &FieldCtx, cur: &mut Cursor) -> Result<FieldElem> {
    match cur.peek() {
        Some(b'[') => {
            let pos = cur.pos;
            let coeffs = bracket_list_u64(cur)?;
            let reduced: Vec<u64> = coeffs.iter().map(|&c| c % ctx.p()).collect();
            ctx.from_coeffs(&reduced)
                .map_err(|e| err(pos, e.to_string()))
        }
        Some(b'-') => {
            cur.bump();
            let v = cur.uint()?;
            Ok(ctx.neg(ctx.from_int(v)))
        }
        Some(c) if c.is_ascii_digit() => Ok(ctx.from_int(cur.uint()?)),
        other => Err(err(
            cur.pos,
            format!(
                "expected an element literal, found {}",
                other
                    .map(|c| format!("'{}'", c as char))
                    .unwrap_or_else(|| "end of input".into())
            ),
        )),
    }
}

/// "7" (reduced mod p, embedded via the prime subfield) or "[c0,c1,...]".
pub fn parse_element(ctx: &FieldCtx, s: &str) -> Result<FieldElem> {
    let mut cur = Cursor::new(s);
    let e = element_from_cursor(ctx, &mut cur)?;
    if !cur.at_end() {
        return Err(err(cur.pos, "trailing input after element literal"));
    }
    Ok(e)
}

/// Polynomial literal: terms "c*x^k" joined by '+' (a '-' before a term
/// negates its coefficient); "x" alone means 1*x^1, a bare coefficient is the
/// constant term.
pub fn parse_poly(ctx: &FieldCtx, s: &str) -> Result<Poly> {
    let mut cur = Cursor::new(s);
    let mut terms: Vec<(usize, FieldElem)> = Vec::new();
    let mut negate = false;
    if cur.peek() == Some(b'-') {
        cur.bump();
        negate = true;
    }
    loop {
        let (e, c) = term(ctx, &mut cur)?;
        let c = if negate { ctx.neg(c) } else { c };
        terms.push((e, c));
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                negate = false;
            }
            Some(b'-') => {
                cur.bump();
                negate = true;
            }
            Some(c) => {
                return Err(err(
                    cur.pos,
                    format!("expected '+', '-', or end of polynomial, found '{}'", c as char),
                ))
            }
        }
    }
    Ok(Poly::from_terms(ctx, &terms))
}

fn term(ctx: &FieldCtx, cur: &mut Cursor) -> Result<(usize, FieldElem)> {
    match cur.peek() {
        Some(b'x') => {
            cur.bump();
            Ok((exponent(cur)?, ctx.one()))
        }
        Some(_) => {
            let c = element_from_cursor(ctx, cur)?;
            if cur.peek() == Some(b'*') {
                cur.bump();
                let pos = cur.pos;
                if cur.peek() != Some(b'x') {
                    return Err(err(pos, "expected 'x' after '*'"));
                }
                cur.bump();
                Ok((exponent(cur)?, c))
            } else {
                Ok((0, c))
            }
        }
        None => Err(err(cur.pos, "expected a term")),
    }
}

fn exponent(cur: &mut Cursor) -> Result<usize> {
    if cur.peek() == Some(b'^') {
        cur.bump();
        Ok(cur.uint()? as usize)
    } else {
        Ok(1)
    }
}

/// "L:[a0,a1,...]" listing the q-power coefficients as element literals.
pub fn parse_linearized(tower: &Tower, s: &str) -> Result<LinearizedPoly> {
    let mut cur = Cursor::new(s);
    cur.expect(b'L')?;
    cur.expect(b':')?;
    cur.expect(b'[')?;
    let ctx = tower.field();
    let mut coeffs = Vec::new();
    if cur.peek() == Some(b']') {
        cur.bump();
    } else {
        loop {
            coeffs.push(element_from_cursor(ctx, &mut cur)?);
            match cur.bump() {
                Some(b',') => continue,
                Some(b']') => break,
                _ => return Err(err(cur.pos, "expected ',' or ']' in linearized literal")),
            }
        }
    }
    if !cur.at_end() {
        return Err(err(cur.pos, "trailing input after linearized literal"));
    }
    if coeffs.len() > tower.degree() {
        return Err(err(
            0,
            format!(
                "linearized literal has {} coefficients but the tower degree is {}",
                coeffs.len(),
                tower.degree()
            ),
        ));
    }
    Ok(LinearizedPoly::new(tower, coeffs))
}
