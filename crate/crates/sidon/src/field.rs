//! Exact arithmetic in small finite fields.
//!
//! A field F_{p^d} is represented as F_p[x]/(f) for a monic irreducible
//! polynomial f of degree d, with elements stored as coefficient vectors in
//! the power basis {1, x, ..., x^{d-1}}. The designated generator of the unit
//! group is the residue class of x for d >= 2 (moduli for which x is not
//! primitive are rejected) and the least primitive root mod p for d = 1.
//!
//! [`make_field`] builds F_p, F_{p^2}, F_{p^3} directly. For constructions
//! that run over F_{q^2} or F_{q^3} with a prime *power* q = p^m,
//! [`make_field_over`] builds the same flat representation of degree m*e and
//! exposes the intermediate subfield F_q through [`FieldCtx::subfield_packed`]
//! and friends. All sizes are desk scale: the field order must fit in a u64
//! and degrees are capped at [`MAX_DEGREE`].

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported extension degree over the prime field
/// (degree-3 extension of a degree-3 base field).
pub const MAX_DEGREE: usize = 9;

/// Cap applied to exponents while parsing polynomial text.
const MAX_PARSE_EXPONENT: u64 = 1024;

// ---------------------------------------------------------------------------
// integer helpers
// ---------------------------------------------------------------------------

/// Deterministic primality by trial division; intended for desk-scale inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while (r as u128 + 1) * (r as u128 + 1) <= n as u128 {
        r += 1;
    }
    while (r as u128) * (r as u128) > n as u128 {
        r -= 1;
    }
    r
}

/// Distinct prime factors of n, in increasing order (trial division).
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn modpow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn modinv_prime(a: u64, p: u64) -> u64 {
    modpow(a, p - 2, p)
}

/// Least primitive root mod p (p prime).
pub fn least_primitive_root(p: u64) -> u64 {
    let factors = distinct_prime_factors(p - 1);
    'outer: for g in 1..p {
        for &r in &factors {
            if modpow(g, (p - 1) / r, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// Writes q as p^m for prime p, if q is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    let mut d = 2u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= q) {
        if q % d == 0 {
            p = d;
            break;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut m = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest == 1 {
        Some((p, m))
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// polynomials over F_p
// ---------------------------------------------------------------------------

/// A polynomial over F_p, stored constant-term first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Builds a polynomial, reducing coefficients mod p and trimming
    /// trailing zeros. The zero polynomial has an empty coefficient vector.
    pub fn new(p: u64, coeffs: &[u64]) -> Result<Poly> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut c: Vec<u64> = coeffs.iter().map(|&v| v % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Ok(Poly { p, coeffs: c })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention that the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = ((acc as u128 * x as u128 + c as u128) % self.p as u128) as u64;
        }
        acc
    }

    /// Parses text like `x^2+3x+6`, `x^3 + x + 1`, or `7`. The characteristic
    /// is supplied separately; coefficients are reduced mod p, `1`
    /// coefficients may be omitted, and terms may appear in any order.
    pub fn parse(text: &str, p: u64) -> Result<Poly> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::ParseError("empty polynomial".into()));
        }
        let mut acc: Vec<u64> = Vec::new();
        let bytes = s.as_bytes();
        let mut i = 0usize;
        let mut sign_negative = false;
        // optional leading sign
        if bytes[0] == b'+' || bytes[0] == b'-' {
            sign_negative = bytes[0] == b'-';
            i = 1;
        }
        while i < bytes.len() {
            let start = i;
            // coefficient digits
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut coeff: u64 = if i > start {
                s[start..i]
                    .parse::<u64>()
                    .map_err(|_| Error::ParseError(format!("bad coefficient in {text:?}")))?
            } else {
                1
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exp: u64 = 0;
            if i < bytes.len() && (bytes[i] == b'x' || bytes[i] == b'X') {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == estart {
                        return Err(Error::ParseError(format!("missing exponent in {text:?}")));
                    }
                    exp = s[estart..i]
                        .parse::<u64>()
                        .map_err(|_| Error::ParseError(format!("bad exponent in {text:?}")))?;
                    if exp > MAX_PARSE_EXPONENT {
                        return Err(Error::ParseError(format!("exponent {exp} too large")));
                    }
                }
            } else if i == start {
                // neither digits nor x: stray character
                return Err(Error::ParseError(format!(
                    "unexpected character {:?} in {text:?}",
                    s[start..].chars().next().unwrap()
                )));
            }
            coeff %= p;
            if sign_negative {
                coeff = (p - coeff) % p;
            }
            let exp = exp as usize;
            if acc.len() <= exp {
                acc.resize(exp + 1, 0);
            }
            acc[exp] = (acc[exp] + coeff) % p;
            // next sign
            if i < bytes.len() {
                match bytes[i] {
                    b'+' => {
                        sign_negative = false;
                        i += 1;
                    }
                    b'-' => {
                        sign_negative = true;
                        i += 1;
                    }
                    other => {
                        return Err(Error::ParseError(format!(
                            "unexpected character {:?} in {text:?}",
                            other as char
                        )))
                    }
                }
                if i == bytes.len() {
                    return Err(Error::ParseError(format!("dangling sign in {text:?}")));
                }
            }
        }
        Poly::new(p, &acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}x")?,
                _ if c == 1 => write!(f, "x^{k}")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Irreducibility test for polynomials of degree at most 3: such a
/// polynomial factors iff it has a root, so a root sweep suffices.
/// Degree 0 (or the zero polynomial) is rejected as invalid input.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    if f.is_zero() || f.degree() == 0 {
        return Err(Error::InvalidInput(
            "irreducibility is defined here for degrees 1..=3".into(),
        ));
    }
    match f.degree() {
        1 => Ok(true),
        2 | 3 => {
            for x in 0..f.p() {
                if f.eval(x) == 0 {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        d => Err(Error::InvalidInput(format!(
            "irreducibility test limited to degree <= 3, got {d}"
        ))),
    }
}

// --- raw polynomial ring helpers (used by the Rabin test, where the modulus
//     may still turn out to be reducible, so FieldElem ops cannot be used) ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &Poly) -> Vec<u64> {
    let p = f.p() as u128;
    let d = f.degree();
    let mut buf = vec![0u128; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            buf[i + j] += ai as u128 * bj as u128;
        }
    }
    for i in (d..buf.len()).rev() {
        let c = buf[i] % p;
        buf[i] = 0;
        if c != 0 {
            for j in 0..d {
                let m = f.coeff(j) as u128 % p;
                buf[i - d + j] += c * ((p - m) % p);
            }
        }
    }
    let mut out: Vec<u64> = buf[..d.min(buf.len())]
        .iter()
        .map(|&v| (v % p) as u64)
        .collect();
    poly_trim(&mut out);
    out
}

fn poly_powmod_x(exp: u64, f: &Poly) -> Vec<u64> {
    // x^exp mod f by square and multiply
    let mut result = vec![1u64];
    let mut base = vec![0u64, 1];
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &base, f);
        }
        base = poly_mulmod(&base, &base, f);
        e >>= 1;
    }
    result
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lead_inv = modinv_prime(*b.last().unwrap(), p);
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let factor = ((*a.last().unwrap() as u128 * lead_inv as u128) % p as u128) as u64;
            for (i, &bc) in b.iter().enumerate() {
                let sub = (factor as u128 * bc as u128) % p as u128;
                let idx = shift + i;
                a[idx] = ((a[idx] as u128 + p as u128 - sub) % p as u128) as u64;
            }
            poly_trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rabin irreducibility for monic f of any supported degree: f of degree d is
/// irreducible over F_p iff x^(p^d) = x mod f and x^(p^(d/r)) - x is coprime
/// to f for every prime r dividing d.
pub(crate) fn rabin_irreducible(f: &Poly) -> Result<bool> {
    let d = f.degree();
    if f.is_zero() || d == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    if !f.is_monic() {
        return Err(Error::InvalidInput("Rabin test needs a monic modulus".into()));
    }
    let p = f.p();
    let pd = (p as u128).pow(d as u32);
    if pd > u64::MAX as u128 {
        return Err(Error::InvalidInput("field order overflows u64".into()));
    }
    let sub_x = |mut v: Vec<u64>| -> Vec<u64> {
        if v.len() < 2 {
            v.resize(2, 0);
        }
        v[1] = (v[1] + p - 1) % p;
        poly_trim(&mut v);
        v
    };
    let top = sub_x(poly_powmod_x(pd as u64, f));
    if !top.is_empty() {
        return Ok(false);
    }
    for r in distinct_prime_factors(d as u64) {
        let e = (p as u128).pow((d as u64 / r) as u32) as u64;
        let g = poly_gcd(&sub_x(poly_powmod_x(e, f)), f.coeffs(), p);
        if g.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// field contexts and elements
// ---------------------------------------------------------------------------

/// An element of a [`FieldCtx`]: coefficients in the power basis of the
/// modulus root, padded with zeros beyond the context's degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    c: [u64; MAX_DEGREE],
}

impl FieldElem {
    pub fn coeff(&self, i: usize) -> u64 {
        self.c[i]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }
}

/// A concrete finite field F_{p^d}.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u64,
    degree: usize,
    order: u64,
    modulus: Poly,
    generator: FieldElem,
    /// Distinct prime factors of order - 1.
    unit_factors: Vec<u64>,
}

/// Builds F_{p^e} for prime p and extension degree e in {1, 2, 3}.
///
/// With a supplied modulus, the modulus must be monic of degree e and
/// irreducible, and the class of x must generate the unit group (for e = 1
/// the class of x in F_p[x]/(x+c) is the scalar -c). Without one, monic
/// polynomials are scanned in lexicographic order of their coefficient
/// vectors (constant term most significant) and the first irreducible
/// modulus with x primitive is taken; for e = 1 the generator is the least
/// primitive root mod p and the modulus is fixed to x.
pub fn make_field(p: u64, e: u32, modulus: Option<Poly>) -> Result<FieldCtx> {
    if !(1..=3).contains(&e) {
        return Err(Error::InvalidInput(format!(
            "extension degree must be 1, 2, or 3, got {e}"
        )));
    }
    build_field(p, e as usize, modulus)
}

/// Builds F_{q^e} for a prime power q = p^m, as a flat degree m*e extension
/// of F_p. For prime q this agrees with [`make_field`]. A supplied modulus is
/// a polynomial over F_p of degree m*e satisfying the same conditions.
pub fn make_field_over(q: u64, e: u32, modulus: Option<Poly>) -> Result<FieldCtx> {
    if !(1..=3).contains(&e) {
        return Err(Error::InvalidInput(format!(
            "extension degree must be 1, 2, or 3, got {e}"
        )));
    }
    let (p, m) = prime_power(q)
        .ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
    let d = m as usize * e as usize;
    if d > MAX_DEGREE {
        return Err(Error::InvalidInput(format!(
            "total extension degree {d} exceeds the supported maximum {MAX_DEGREE}"
        )));
    }
    build_field(p, d, modulus)
}

fn build_field(p: u64, d: usize, modulus: Option<Poly>) -> Result<FieldCtx> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 || d > MAX_DEGREE {
        return Err(Error::InvalidInput(format!(
            "extension degree {d} out of range 1..={MAX_DEGREE}"
        )));
    }
    let mut order: u64 = 1;
    for _ in 0..d {
        order = order
            .checked_mul(p)
            .ok_or_else(|| Error::InvalidInput("field order overflows u64".into()))?;
    }
    let unit_factors = distinct_prime_factors(order - 1);

    if d == 1 {
        let (modulus, gen_val) = match modulus {
            None => (Poly::new(p, &[0, 1])?, least_primitive_root(p)),
            Some(f) => {
                check_modulus_shape(&f, p, d)?;
                let g = (p - f.coeff(0)) % p;
                if g == 0 {
                    return Err(Error::NotPrimitive(
                        "the class of x is zero, not a generator".into(),
                    ));
                }
                (f, g)
            }
        };
        let ctx = FieldCtx {
            p,
            degree: 1,
            order,
            modulus,
            generator: scalar_elem(gen_val),
            unit_factors,
        };
        if !ctx.has_full_order(ctx.generator) {
            let ord = ctx.element_order(ctx.generator)?;
            return Err(Error::NotPrimitive(format!(
                "the class of x has multiplicative order {ord}, expected {}",
                order - 1
            )));
        }
        return Ok(ctx);
    }

    match modulus {
        Some(f) => {
            check_modulus_shape(&f, p, d)?;
            let irred = if d <= 3 {
                is_irreducible(&f)?
            } else {
                rabin_irreducible(&f)?
            };
            if !irred {
                return Err(Error::ReducibleModulus(f.to_string(), p));
            }
            let ctx = ctx_with_x_generator(p, d, order, f, unit_factors);
            if !ctx.has_full_order(ctx.generator) {
                let ord = ctx.element_order(ctx.generator)?;
                return Err(Error::NotPrimitive(format!(
                    "the class of x has multiplicative order {ord}, expected {}",
                    order - 1
                )));
            }
            Ok(ctx)
        }
        None => {
            // Lexicographic scan over coefficient vectors (c_0, ..., c_{d-1});
            // c_0 = 0 is skipped since x would divide the modulus. Multiplicative
            // order of x equal to p^d - 1 certifies both irreducibility and
            // primitivity in one test.
            let mut low = vec![0u64; d];
            for idx in 0..order {
                let mut rest = idx;
                for slot in low.iter_mut().rev() {
                    *slot = rest % p;
                    rest /= p;
                }
                if low[0] == 0 {
                    continue;
                }
                let mut coeffs = low.clone();
                coeffs.push(1);
                let f = Poly::new(p, &coeffs)?;
                let ctx = ctx_with_x_generator(p, d, order, f, unit_factors.clone());
                if ctx.has_full_order(ctx.generator) {
                    return Ok(ctx);
                }
            }
            Err(Error::InvalidInput(format!(
                "no monic degree-{d} modulus over F_{p} with x primitive"
            )))
        }
    }
}

fn check_modulus_shape(f: &Poly, p: u64, d: usize) -> Result<()> {
    if f.p() != p {
        return Err(Error::ContextMismatch(format!(
            "modulus has characteristic {}, field expects {p}",
            f.p()
        )));
    }
    if f.is_zero() || f.degree() != d || !f.is_monic() {
        return Err(Error::InvalidInput(format!(
            "modulus must be monic of degree {d}, got {f}"
        )));
    }
    Ok(())
}

fn scalar_elem(v: u64) -> FieldElem {
    let mut c = [0u64; MAX_DEGREE];
    c[0] = v;
    FieldElem { c }
}

fn ctx_with_x_generator(
    p: u64,
    d: usize,
    order: u64,
    modulus: Poly,
    unit_factors: Vec<u64>,
) -> FieldCtx {
    let mut c = [0u64; MAX_DEGREE];
    c[1] = 1;
    FieldCtx {
        p,
        degree: d,
        order,
        modulus,
        generator: FieldElem { c },
        unit_factors,
    }
}

impl FieldCtx {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { c: [0; MAX_DEGREE] }
    }

    pub fn one(&self) -> FieldElem {
        scalar_elem(1 % self.p)
    }

    pub fn scalar(&self, v: u64) -> FieldElem {
        scalar_elem(v % self.p)
    }

    /// Builds an element from power-basis coefficients (length at most the
    /// extension degree; entries are NOT reduced, out-of-range input errors).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.degree {
            return Err(Error::ContextMismatch(format!(
                "element has {} coefficients, field degree is {}",
                coeffs.len(),
                self.degree
            )));
        }
        let mut c = [0u64; MAX_DEGREE];
        for (i, &v) in coeffs.iter().enumerate() {
            if v >= self.p {
                return Err(Error::ContextMismatch(format!(
                    "coefficient {v} not reduced mod {}",
                    self.p
                )));
            }
            c[i] = v;
        }
        Ok(FieldElem { c })
    }

    /// Checks that an element is well formed for this context.
    pub fn validate_elem(&self, a: FieldElem) -> Result<()> {
        for (i, &v) in a.c.iter().enumerate() {
            if i < self.degree {
                if v >= self.p {
                    return Err(Error::ContextMismatch(format!(
                        "coefficient {v} not reduced mod {}",
                        self.p
                    )));
                }
            } else if v != 0 {
                return Err(Error::ContextMismatch(format!(
                    "element has degree >= {}, field degree is {}",
                    i, self.degree
                )));
            }
        }
        Ok(())
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let mut out = [0u64; MAX_DEGREE];
        for i in 0..self.degree {
            out[i] = (a.c[i] + b.c[i]) % self.p;
        }
        FieldElem { c: out }
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let mut out = [0u64; MAX_DEGREE];
        for i in 0..self.degree {
            out[i] = (a.c[i] + self.p - b.c[i]) % self.p;
        }
        FieldElem { c: out }
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.sub(self.zero(), a)
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let d = self.degree;
        let p = self.p as u128;
        let mut buf = [0u128; 2 * MAX_DEGREE - 1];
        for i in 0..d {
            let ai = a.c[i] as u128;
            if ai == 0 {
                continue;
            }
            for j in 0..d {
                buf[i + j] += ai * b.c[j] as u128;
            }
        }
        if d > 1 {
            for i in (d..=(2 * d - 2)).rev() {
                let c = buf[i] % p;
                buf[i] = 0;
                if c != 0 {
                    for j in 0..d {
                        let m = self.modulus.coeff(j) as u128;
                        buf[i - d + j] += c * ((p - m) % p);
                    }
                }
            }
        }
        let mut out = [0u64; MAX_DEGREE];
        for i in 0..d {
            out[i] = (buf[i] % p) as u64;
        }
        FieldElem { c: out }
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElem) -> Result<u64> {
        self.validate_elem(a)?;
        if a.is_zero() {
            return Err(Error::InvalidInput(
                "the zero element has no multiplicative order".into(),
            ));
        }
        let n = self.order - 1;
        debug_assert!(self.pow(a, n) == self.one());
        let mut ord = n;
        for &r in &self.unit_factors {
            while ord % r == 0 && self.pow(a, ord / r) == self.one() {
                ord /= r;
            }
        }
        Ok(ord)
    }

    fn has_full_order(&self, a: FieldElem) -> bool {
        if a.is_zero() {
            return false;
        }
        let n = self.order - 1;
        if self.pow(a, n) != self.one() {
            return false;
        }
        self.unit_factors
            .iter()
            .all(|&r| self.pow(a, n / r) != self.one())
    }

    /// Packs an element into its index Sum c_i p^i; inverse of [`Self::unpack`].
    pub fn pack(&self, a: FieldElem) -> u64 {
        let mut idx = 0u64;
        for i in (0..self.degree).rev() {
            idx = idx * self.p + a.c[i];
        }
        idx
    }

    pub fn unpack(&self, mut idx: u64) -> FieldElem {
        let mut c = [0u64; MAX_DEGREE];
        for slot in c.iter_mut().take(self.degree) {
            *slot = idx % self.p;
            idx /= self.p;
        }
        FieldElem { c }
    }

    /// Iterates over all field elements (small fields only).
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order).map(move |i| self.unpack(i))
    }

    /// True when q = p^m for m dividing this field's degree, i.e. when F_q
    /// embeds as a subfield.
    pub fn has_subfield(&self, q: u64) -> bool {
        match prime_power(q) {
            Some((p, m)) => p == self.p && self.degree % m as usize == 0,
            None => false,
        }
    }

    /// The designated generator of the subfield F_q's unit group:
    /// generator^((order-1)/(q-1)).
    pub fn subfield_generator(&self, q: u64) -> Result<FieldElem> {
        if !self.has_subfield(q) {
            return Err(Error::InvalidInput(format!(
                "F_{q} is not a subfield of F_{}",
                self.order
            )));
        }
        Ok(self.pow(self.generator, (self.order - 1) / (q - 1)))
    }

    /// All q elements of the subfield F_q, packed (see [`Self::pack`]).
    pub fn subfield_packed(&self, q: u64) -> Result<HashSet<u64>> {
        let gamma = self.subfield_generator(q)?;
        let mut set = HashSet::with_capacity(q as usize);
        set.insert(self.pack(self.zero()));
        let mut cur = self.one();
        for _ in 0..(q - 1) {
            set.insert(self.pack(cur));
            cur = self.mul(cur, gamma);
        }
        debug_assert_eq!(set.len() as u64, q);
        Ok(set)
    }

    /// Canonical encoding of the subfield F_q by integers 0..q: the base-p
    /// digits of the index are coordinates over the basis
    /// {1, gamma, ..., gamma^(m-1)}, gamma the designated F_q generator.
    /// For prime q this is the usual scalar embedding of 0..p.
    pub fn decode_subfield_index(&self, q: u64, index: u64) -> Result<FieldElem> {
        if index >= q {
            return Err(Error::InvalidIndex(format!(
                "index {index} out of range for F_{q}"
            )));
        }
        let gamma = self.subfield_generator(q)?;
        let mut acc = self.zero();
        let mut basis = self.one();
        let mut rest = index;
        while rest > 0 {
            let digit = rest % self.p;
            rest /= self.p;
            if digit != 0 {
                let mut term = self.zero();
                for _ in 0..digit {
                    term = self.add(term, basis);
                }
                acc = self.add(acc, term);
            }
            basis = self.mul(basis, gamma);
        }
        Ok(acc)
    }

    /// Renders an element as polynomial text in the generator, e.g. `2x+1`.
    pub fn format_elem(&self, a: FieldElem) -> String {
        match Poly::new(self.p, &a.c[..self.degree]) {
            Ok(poly) => poly.to_string(),
            Err(_) => format!("{:?}", &a.c[..self.degree]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64, coeffs: &[u64]) -> Poly {
        Poly::new(p, coeffs).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let cases = [
            ("x^2+3x+6", 11, vec![6, 3, 1]),
            ("x^2 + x + 2", 3, vec![2, 1, 1]),
            ("x^3+x+1", 2, vec![1, 1, 0, 1]),
            ("6 + 3x + x^2", 11, vec![6, 3, 1]),
            ("x^3+x^2+6x+4", 11, vec![4, 6, 1, 1]),
            ("7", 11, vec![7]),
            ("x", 5, vec![0, 1]),
            ("2*x^2+1", 5, vec![1, 0, 2]),
            ("x^2-1", 5, vec![4, 0, 1]),
            ("-x+2", 7, vec![2, 6]),
        ];
        for (text, p, coeffs) in cases {
            let parsed = Poly::parse(text, p).unwrap();
            assert_eq!(parsed, f(p, &coeffs), "parsing {text:?}");
            let round = Poly::parse(&parsed.to_string(), p).unwrap();
            assert_eq!(round, parsed, "display round trip for {text:?}");
        }
        assert!(Poly::parse("x^2++1", 5).is_err());
        assert!(Poly::parse("", 5).is_err());
        assert!(Poly::parse("y+1", 5).is_err());
        assert!(Poly::parse("x^", 5).is_err());
    }

    #[test]
    fn irreducibility_by_root_sweep() {
        // (x+1)^2 = x^2+2x+1 over F_3
        assert!(!is_irreducible(&f(3, &[1, 2, 1])).unwrap());
        assert!(is_irreducible(&f(3, &[2, 1, 1])).unwrap());
        assert!(is_irreducible(&f(2, &[1, 1, 1])).unwrap());
        assert!(is_irreducible(&f(11, &[6, 3, 1])).unwrap());
        assert!(is_irreducible(&f(11, &[4, 6, 1, 1])).unwrap());
        // x^3 - x = x(x-1)(x+1)
        assert!(!is_irreducible(&f(5, &[0, 4, 0, 1])).unwrap());
        assert!(is_irreducible(&f(7, &[3, 1])).unwrap());
        assert!(is_irreducible(&f(2, &[1, 1, 0, 1])).unwrap());
        // degree 0 rejected
        assert!(is_irreducible(&f(5, &[2])).is_err());
    }

    #[test]
    fn rabin_matches_root_sweep_on_small_degrees() {
        for p in [2u64, 3, 5] {
            for c0 in 0..p {
                for c1 in 0..p {
                    let quad = f(p, &[c0, c1, 1]);
                    assert_eq!(
                        rabin_irreducible(&quad).unwrap(),
                        is_irreducible(&quad).unwrap(),
                        "disagreement on {quad} over F_{p}"
                    );
                    for c2 in 0..p {
                        let cubic = f(p, &[c0, c1, c2, 1]);
                        assert_eq!(
                            rabin_irreducible(&cubic).unwrap(),
                            is_irreducible(&cubic).unwrap(),
                            "disagreement on {cubic} over F_{p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn known_products_small_fields() {
        // F_9 = F_3[x]/(x^2+x+2): x*x = 2x+1, x^3 = 2x+2, x^4 = 2
        let f9 = make_field(3, 2, Some(f(3, &[2, 1, 1]))).unwrap();
        let x = f9.generator();
        assert_eq!(f9.mul(x, x), f9.from_coeffs(&[1, 2]).unwrap());
        assert_eq!(f9.pow(x, 3), f9.from_coeffs(&[2, 2]).unwrap());
        assert_eq!(f9.pow(x, 4), f9.scalar(2));

        // F_121 = F_11[x]/(x^2+3x+6): x*x = 8x+5
        let f121 = make_field(11, 2, Some(f(11, &[6, 3, 1]))).unwrap();
        let x = f121.generator();
        assert_eq!(f121.mul(x, x), f121.from_coeffs(&[5, 8]).unwrap());

        // F_8 = F_2[x]/(x^3+x+1): x^3 = x+1
        let f8 = make_field(2, 3, Some(f(2, &[1, 1, 0, 1]))).unwrap();
        let x = f8.generator();
        assert_eq!(f8.pow(x, 3), f8.from_coeffs(&[1, 1]).unwrap());
    }

    #[test]
    fn non_primitive_modulus_is_rejected() {
        // x has order 4 in F_3[x]/(x^2+1), the unit group has order 8
        let err = make_field(3, 2, Some(f(3, &[1, 0, 1]))).unwrap_err();
        match err {
            Error::NotPrimitive(msg) => assert!(msg.contains("order 4"), "{msg}"),
            other => panic!("expected primitivity error, got {other:?}"),
        }
        // reducible modulus reported as such
        let err = make_field(3, 2, Some(f(3, &[1, 2, 1]))).unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(..)));
    }

    #[test]
    fn element_orders_mod_11() {
        let f11 = make_field(11, 1, None).unwrap();
        assert_eq!(f11.generator(), f11.scalar(2), "least primitive root mod 11");
        assert_eq!(f11.element_order(f11.scalar(2)).unwrap(), 10);
        assert_eq!(f11.element_order(f11.scalar(3)).unwrap(), 5);
        assert_eq!(f11.element_order(f11.scalar(10)).unwrap(), 2);
        assert!(f11.element_order(f11.zero()).is_err());
    }

    #[test]
    fn generator_cycles_through_all_units() {
        for (p, e) in [(2, 3), (3, 2), (5, 2), (7, 2), (11, 2), (2, 1), (13, 1), (3, 3)] {
            let ctx = make_field(p, e, None).unwrap();
            let mut seen = HashSet::new();
            let mut cur = ctx.one();
            for _ in 0..(ctx.order() - 1) {
                assert!(seen.insert(ctx.pack(cur)), "premature cycle in F_{}", ctx.order());
                cur = ctx.mul(cur, ctx.generator());
            }
            assert_eq!(cur, ctx.one(), "generator order in F_{}", ctx.order());
            assert_eq!(seen.len() as u64, ctx.order() - 1);
        }
    }

    #[test]
    fn prime_power_towers() {
        // F_16 as a degree-2 extension over F_4
        let f16 = make_field_over(4, 2, None).unwrap();
        assert_eq!(f16.order(), 16);
        assert_eq!(f16.degree(), 4);
        let sub = f16.subfield_packed(4).unwrap();
        assert_eq!(sub.len(), 4);
        // the subfield is closed under multiplication
        let elems: Vec<FieldElem> = (0..16).map(|i| f16.unpack(i)).collect();
        for &a in &elems {
            for &b in &elems {
                if sub.contains(&f16.pack(a)) && sub.contains(&f16.pack(b)) {
                    assert!(sub.contains(&f16.pack(f16.mul(a, b))));
                    assert!(sub.contains(&f16.pack(f16.add(a, b))));
                }
            }
        }
        // F_729 over F_9: gamma generates exactly F_9
        let f729 = make_field_over(9, 3, None).unwrap();
        assert_eq!(f729.order(), 729);
        let gamma = f729.subfield_generator(9).unwrap();
        assert_eq!(f729.element_order(gamma).unwrap(), 8);
        // the index decoding is a bijection 0..q -> F_q
        let sub = f729.subfield_packed(9).unwrap();
        let decoded: HashSet<u64> = (0..9)
            .map(|j| f729.pack(f729.decode_subfield_index(9, j).unwrap()))
            .collect();
        assert_eq!(decoded.len(), 9);
        assert_eq!(decoded, sub);
        // prime case: decoding is the scalar embedding
        let f121 = make_field(11, 2, None).unwrap();
        for j in 0..11 {
            assert_eq!(
                f121.decode_subfield_index(11, j).unwrap(),
                f121.scalar(j)
            );
        }
    }

    #[test]
    fn lagrange_small_fields() {
        for (p, e) in [(7, 2), (3, 3), (2, 3)] {
            let ctx = make_field(p, e, None).unwrap();
            for a in ctx.elements().skip(1) {
                assert_eq!(ctx.pow(a, ctx.order() - 1), ctx.one());
            }
        }
    }

    #[test]
    fn primitive_roots_and_primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(2642239));
        assert!(!is_prime(1) && !is_prime(0) && !is_prime(121) && !is_prime(2642241));
        assert_eq!(least_primitive_root(2), 1);
        assert_eq!(least_primitive_root(3), 2);
        assert_eq!(least_primitive_root(7), 3);
        assert_eq!(least_primitive_root(11), 2);
        assert_eq!(least_primitive_root(41), 6);
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(distinct_prime_factors(120), vec![2, 3, 5]);
        assert_eq!(distinct_prime_factors(1), Vec::<u64>::new());
    }

    proptest! {
        #[test]
        fn field_axioms_f121(ai in 0u64..121, bi in 0u64..121, ci in 0u64..121) {
            let ctx = make_field(11, 2, None).unwrap();
            let (a, b, c) = (ctx.unpack(ai), ctx.unpack(bi), ctx.unpack(ci));
            prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
            prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
            prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
            prop_assert_eq!(ctx.mul(a, ctx.one()), a);
            prop_assert_eq!(ctx.add(a, ctx.sub(b, a)), b);
        }

        #[test]
        fn field_axioms_f64_tower(ai in 0u64..64, bi in 0u64..64, ci in 0u64..64) {
            let ctx = make_field_over(4, 3, None).unwrap();
            let (a, b, c) = (ctx.unpack(ai), ctx.unpack(bi), ctx.unpack(ci));
            prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
            prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
            prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        }

        #[test]
        fn pow_matches_repeated_mul(ai in 1u64..27, e in 0u64..40) {
            let ctx = make_field(3, 3, None).unwrap();
            let a = ctx.unpack(ai);
            let mut acc = ctx.one();
            for _ in 0..e {
                acc = ctx.mul(acc, a);
            }
            prop_assert_eq!(ctx.pow(a, e), acc);
        }
    }
}
