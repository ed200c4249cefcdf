//! Constructions of dense B2[g] sets.
//!
//! Three families come from finite fields (Ruzsa, Bose, Singer), each
//! producing a union of Sidon-set components indexed by a set K, with
//! g-value at most 2|K|^2. Two combinators (CRT product and linear
//! interleaving) multiply g-values, and one explicit four-block family
//! realizes g-value at most g with roughly 11g/6 elements.

use crate::error::{Error, Result};
use crate::field::{is_prime, least_primitive_root, prime_power, FieldCtx, FieldElem};
use crate::sets::{CyclicSet, IntegerSet};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
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

fn require_nonempty<T>(k_set: &[T]) -> Result<()> {
    if k_set.is_empty() {
        return Err(Error::InvalidIndex("index set K must be nonempty".into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Ruzsa: CRT of t mod p-1 against k*theta^t mod p
// ---------------------------------------------------------------------------

/// One component per k in K: the p-1 residues a mod p^2-p with
/// a = t (mod p-1) and a = k*theta^t (mod p) for t = 1..p-1.
pub fn ruzsa_components(p: u64, theta: u64, k_set: &[u64]) -> Result<Vec<CyclicSet>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    require_nonempty(k_set)?;
    let mut sorted = k_set.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidIndex(format!("duplicate index {}", w[0])));
        }
    }
    for &k in k_set {
        if k == 0 || k >= p {
            return Err(Error::InvalidIndex(format!(
                "Ruzsa index {k} outside [1, {})",
                p
            )));
        }
    }
    let theta = theta % p;
    if !is_primitive_root_mod(theta, p) {
        return Err(Error::NotPrimitive(format!(
            "{theta} is not a primitive root mod {p}"
        )));
    }
    let n = p * (p - 1);
    let mut out = Vec::with_capacity(k_set.len());
    for &k in k_set {
        let mut elems = Vec::with_capacity((p - 1) as usize);
        let mut pow_t = 1u64; // theta^t mod p, starting below at t=1
        for t in 1..p {
            pow_t = ((pow_t as u128 * theta as u128) % p as u128) as u64;
            let r = ((k as u128 * pow_t as u128) % p as u128) as u64;
            // CRT: the inverse of p-1 mod p is p-1 itself
            let j = (((r + p - t % p) % p) as u128 * (p - 1) as u128 % p as u128) as u64;
            let a = t + (p - 1) * j;
            debug_assert!(a < n || p == 2);
            elems.push(a % n.max(1));
        }
        let set = CyclicSet::new(n, &elems)?;
        assert_eq!(set.len() as u64, p - 1, "Ruzsa component size");
        out.push(set);
    }
    Ok(out)
}

/// Union of the Ruzsa components; cardinality exactly |K|(p-1).
pub fn ruzsa(p: u64, theta: u64, k_set: &[u64]) -> Result<CyclicSet> {
    let comps = ruzsa_components(p, theta, k_set)?;
    let mut acc = comps[0].clone();
    for c in &comps[1..] {
        acc = acc.union(c)?;
    }
    assert_eq!(
        acc.len() as u64,
        k_set.len() as u64 * (p - 1),
        "Ruzsa components must be disjoint"
    );
    Ok(acc)
}

fn is_primitive_root_mod(theta: u64, p: u64) -> bool {
    if p == 2 {
        return theta == 1;
    }
    if theta == 0 {
        return false;
    }
    crate::field::distinct_prime_factors(p - 1)
        .iter()
        .all(|&r| modpow(theta, (p - 1) / r, p) != 1)
}

// ---------------------------------------------------------------------------
// Bose: exponents a with theta^a - k*theta in F_q, inside F_{q^2}
// ---------------------------------------------------------------------------

fn extension_base(ctx: &FieldCtx, e: usize, what: &str) -> Result<u64> {
    if ctx.degree() % e != 0 {
        return Err(Error::ContextMismatch(format!(
            "{what} needs a field of order q^{e}; F_{} has degree {} over its prime field",
            ctx.order(),
            ctx.degree()
        )));
    }
    let m = ctx.degree() / e;
    Ok(ctx.p().pow(m as u32))
}

fn decode_bose_indices(ctx: &FieldCtx, q: u64, k_set: &[u64]) -> Result<Vec<FieldElem>> {
    require_nonempty(k_set)?;
    let mut sorted = k_set.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidIndex(format!("duplicate index {}", w[0])));
        }
    }
    k_set
        .iter()
        .map(|&k| {
            if k == 0 || k >= q {
                return Err(Error::InvalidIndex(format!(
                    "Bose index {k} outside [1, {q})"
                )));
            }
            ctx.decode_subfield_index(q, k)
        })
        .collect()
}

/// One component per k: {a in [1, q^2-1] : theta^a - k*theta in F_q},
/// as residues mod q^2-1. Each has exactly q elements.
pub fn bose_components(ctx: &FieldCtx, k_set: &[u64]) -> Result<Vec<CyclicSet>> {
    let q = extension_base(ctx, 2, "the Bose construction")?;
    let ks = decode_bose_indices(ctx, q, k_set)?;
    let subfield = ctx.subfield_packed(q)?;
    let theta = ctx.generator();
    let n = q * q - 1;
    let targets: Vec<FieldElem> = ks.iter().map(|&k| ctx.mul(k, theta)).collect();
    let mut elems: Vec<Vec<u64>> = vec![Vec::with_capacity(q as usize); ks.len()];
    let mut v = ctx.one();
    for a in 1..=n {
        v = ctx.mul(v, theta);
        for (i, &t) in targets.iter().enumerate() {
            if subfield.contains(&ctx.pack(ctx.sub(v, t))) {
                elems[i].push(a % n);
            }
        }
    }
    let mut out = Vec::with_capacity(ks.len());
    for e in elems {
        let set = CyclicSet::new(n, &e)?;
        assert_eq!(set.len() as u64, q, "Bose component size");
        out.push(set);
    }
    Ok(out)
}

/// Union of the Bose components; cardinality exactly |K|q.
pub fn bose(ctx: &FieldCtx, k_set: &[u64]) -> Result<CyclicSet> {
    let comps = bose_components(ctx, k_set)?;
    let mut acc = comps[0].clone();
    for c in &comps[1..] {
        acc = acc.union(c)?;
    }
    let q = extension_base(ctx, 2, "the Bose construction")?;
    assert_eq!(
        acc.len() as u64,
        k_set.len() as u64 * q,
        "Bose components must be disjoint"
    );
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Singer: exponents a with theta^a - k2*theta^2 - k1*theta in F_q,
// reduced mod q^2+q+1, with {0} adjoined once
// ---------------------------------------------------------------------------

struct SingerIndex {
    k1: FieldElem,
    k2: FieldElem,
    label: (u64, u64),
}

fn decode_singer_indices(
    ctx: &FieldCtx,
    q: u64,
    k_pairs: &[(u64, u64)],
) -> Result<Vec<SingerIndex>> {
    require_nonempty(k_pairs)?;
    let decoded: Vec<SingerIndex> = k_pairs
        .iter()
        .map(|&(k1, k2)| {
            if k1 >= q || k2 >= q {
                return Err(Error::InvalidIndex(format!(
                    "Singer pair <{k1},{k2}> has an entry outside [0, {q})"
                )));
            }
            if k1 == 0 && k2 == 0 {
                return Err(Error::InvalidIndex(
                    "Singer pair <0,0> is not allowed".into(),
                ));
            }
            Ok(SingerIndex {
                k1: ctx.decode_subfield_index(q, k1)?,
                k2: ctx.decode_subfield_index(q, k2)?,
                label: (k1, k2),
            })
        })
        .collect::<Result<_>>()?;
    // pairwise non-proportional over F_q: the 2x2 determinant must not vanish
    for i in 0..decoded.len() {
        for j in (i + 1)..decoded.len() {
            let det = ctx.sub(
                ctx.mul(decoded[i].k1, decoded[j].k2),
                ctx.mul(decoded[i].k2, decoded[j].k1),
            );
            if det.is_zero() {
                let (a, b) = (decoded[i].label, decoded[j].label);
                return Err(Error::InvalidIndex(format!(
                    "Singer pairs <{},{}> and <{},{}> are proportional over F_{q}",
                    a.0, a.1, b.0, b.1
                )));
            }
        }
    }
    Ok(decoded)
}

fn singer_raw_exponents(
    ctx: &FieldCtx,
    q: u64,
    indices: &[SingerIndex],
) -> Result<Vec<Vec<u64>>> {
    let subfield = ctx.subfield_packed(q)?;
    let theta = ctx.generator();
    let theta2 = ctx.mul(theta, theta);
    let targets: Vec<FieldElem> = indices
        .iter()
        .map(|ix| ctx.add(ctx.mul(ix.k2, theta2), ctx.mul(ix.k1, theta)))
        .collect();
    let n = ctx.order() - 1; // q^3 - 1
    let mut out: Vec<Vec<u64>> = vec![Vec::with_capacity(q as usize); indices.len()];
    let mut v = ctx.one();
    for a in 1..=n {
        v = ctx.mul(v, theta);
        for (i, &t) in targets.iter().enumerate() {
            if subfield.contains(&ctx.pack(ctx.sub(v, t))) {
                out[i].push(a % n);
            }
        }
    }
    Ok(out)
}

/// One component per pair: the residues mod q^2+q+1 of the matching
/// exponents. The first component additionally carries the residue 0, so
/// sizes are q+1, q, q, ...
pub fn singer_components(ctx: &FieldCtx, k_pairs: &[(u64, u64)]) -> Result<Vec<CyclicSet>> {
    let q = extension_base(ctx, 3, "the Singer construction")?;
    let indices = decode_singer_indices(ctx, q, k_pairs)?;
    let raw = singer_raw_exponents(ctx, q, &indices)?;
    let modulus = q * q + q + 1;
    let mut out = Vec::with_capacity(raw.len());
    for (i, exps) in raw.iter().enumerate() {
        let mut residues: Vec<u64> = exps.iter().map(|&a| a % modulus).collect();
        if i == 0 {
            residues.push(0);
        }
        residues.sort_unstable();
        residues.dedup();
        let set = CyclicSet::new(modulus, &residues)?;
        let expect = if i == 0 { q + 1 } else { q };
        assert_eq!(set.len() as u64, expect, "Singer component size");
        out.push(set);
    }
    Ok(out)
}

/// Union of the Singer components; cardinality exactly |K|q + 1.
pub fn singer(ctx: &FieldCtx, k_pairs: &[(u64, u64)]) -> Result<CyclicSet> {
    let comps = singer_components(ctx, k_pairs)?;
    let mut acc = comps[0].clone();
    for c in &comps[1..] {
        acc = acc.union(c)?;
    }
    let q = extension_base(ctx, 3, "the Singer construction")?;
    assert_eq!(
        acc.len() as u64,
        k_pairs.len() as u64 * q + 1,
        "Singer components must be disjoint"
    );
    Ok(acc)
}

/// The unreduced block for one pair: the q matching exponents a as
/// residues mod q^3-1, without reduction mod q^2+q+1 and without the
/// adjoined 0. Unions of a few such blocks keep small three-fold sum
/// counts even mod q^3-1; see the triple-convolution checks.
pub fn singer_block(ctx: &FieldCtx, k_pair: (u64, u64)) -> Result<CyclicSet> {
    let q = extension_base(ctx, 3, "the Singer construction")?;
    let indices = decode_singer_indices(ctx, q, &[k_pair])?;
    let raw = singer_raw_exponents(ctx, q, &indices)?;
    let elems = raw.into_iter().next().unwrap();
    let set = CyclicSet::new(ctx.order() - 1, &elems)?;
    assert_eq!(set.len() as u64, q, "Singer block size");
    Ok(set)
}

// ---------------------------------------------------------------------------
// combinators
// ---------------------------------------------------------------------------

/// The CRT product {m + y s mod xy} of M mod y and S mod x for coprime
/// moduli; g-values multiply.
pub fn crt_combine(m_set: &CyclicSet, s_set: &CyclicSet) -> Result<CyclicSet> {
    let y = m_set.modulus();
    let x = s_set.modulus();
    if gcd(x, y) != 1 {
        return Err(Error::NotCoprime(x, y));
    }
    let product = (x as u128) * (y as u128);
    if product > crate::sets::MAX_MAGNITUDE as u128 {
        return Err(Error::InvalidInput(format!(
            "combined modulus {product} exceeds the supported maximum 2^40"
        )));
    }
    let n = x * y;
    let mut elems = Vec::with_capacity(m_set.len() * s_set.len());
    for &m in m_set.elements() {
        for &s in s_set.elements() {
            elems.push((m + y * s) % n);
        }
    }
    let out = CyclicSet::new(n, &elems)?;
    assert_eq!(out.len(), m_set.len() * s_set.len(), "CRT images collide");
    Ok(out)
}

/// Rotates M so its largest cyclic gap sits at the top of [1, y], then
/// spreads S' across the copies: result = M' + y S' with
/// M' in [1, y - maxgap + 1]. The output lies in [1, y(max S' + 1) + 1 - maxgap]
/// and its g-value is at most g_value(M as cyclic) * g_value(S').
pub fn interleave_linear(m_set: &CyclicSet, s_prime: &IntegerSet) -> Result<IntegerSet> {
    if m_set.is_empty() || s_prime.is_empty() {
        return IntegerSet::new(&[]);
    }
    let y = m_set.modulus();
    let elems = m_set.elements();
    let m = elems.len();
    // cyclic gaps: gap i runs from elems[i] to the next element
    let mut maxgap = 0u64;
    for i in 0..m {
        let cur = elems[i];
        let next = elems[(i + 1) % m];
        let gap = if i + 1 == m { next + y - cur } else { next - cur };
        maxgap = maxgap.max(gap);
    }
    let mut best: Option<Vec<u64>> = None;
    for i in 0..m {
        let cur = elems[i];
        let next_idx = (i + 1) % m;
        let next = elems[next_idx];
        let gap = if i + 1 == m { next + y - cur } else { next - cur };
        if gap != maxgap {
            continue;
        }
        // translate so the element after the gap lands on 1
        let b = next;
        let mut cand: Vec<u64> = elems.iter().map(|&x| ((x + y - b) % y) + 1).collect();
        cand.sort_unstable();
        if best.as_ref().map_or(true, |v| cand < *v) {
            best = Some(cand);
        }
    }
    let shifted = best.unwrap();
    debug_assert!(*shifted.last().unwrap() <= y - maxgap + 1);
    let mut out = Vec::with_capacity(m * s_prime.len());
    for &mp in &shifted {
        for &s in s_prime.elements() {
            out.push(mp + y * s);
        }
    }
    let result = IntegerSet::new(&out)?;
    assert_eq!(result.len(), m * s_prime.len(), "interleaving collides");
    Ok(result)
}

// ---------------------------------------------------------------------------
// the explicit four-block family
// ---------------------------------------------------------------------------

/// The four-block set with g-value at most g and cardinality
/// g + 2*floor(g/3) + floor(g/6), contained in [0, 3g - floor(g/3)]:
/// an initial run, a spaced doubling block, a second run at g, and a long
/// top run.
pub fn block_set(g: u64) -> Result<IntegerSet> {
    if g < 1 {
        return Err(Error::InvalidInput("block family needs g >= 1".into()));
    }
    let third = g / 3;
    let sixth = g / 6;
    let mut elems = Vec::new();
    elems.extend(0..third);
    elems.extend((0..sixth).map(|j| g - third + 2 * j));
    elems.extend(g..g + third);
    elems.extend((2 * g - third + 1)..=(3 * g - third));
    let set = IntegerSet::new(&elems)?;
    assert_eq!(
        set.len() as u64,
        g + 2 * third + sixth,
        "four-block cardinality"
    );
    debug_assert!(set.max().unwrap() <= 3 * g - third);
    Ok(set)
}

/// Convenience: the Ruzsa construction with the least primitive root.
pub fn ruzsa_default_theta(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(least_primitive_root(p))
}

/// Largest prime at most x (desk scale; errors below 2).
pub fn largest_prime_le(x: u64) -> Result<u64> {
    let mut c = x;
    while c >= 2 {
        if is_prime(c) {
            return Ok(c);
        }
        c -= 1;
    }
    Err(Error::InvalidInput(format!("no prime at most {x}")))
}

/// True when q is a prime power (the parameter domain of Bose/Singer).
pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, make_field_over, Poly};

    fn cyc(n: u64, elems: &[u64]) -> CyclicSet {
        CyclicSet::new(n, elems).unwrap()
    }

    fn int(elems: &[u64]) -> IntegerSet {
        IntegerSet::new(elems).unwrap()
    }

    #[test]
    fn ruzsa_reference_sets() {
        let first = vec![7u64, 39, 58, 63, 65, 86, 92, 100, 101, 104];
        let second = vec![28u64, 47, 52, 54, 75, 81, 89, 90, 93, 106];
        assert_eq!(ruzsa(11, 2, &[1]).unwrap(), cyc(110, &first));
        let comps = ruzsa_components(11, 2, &[1, 2]).unwrap();
        assert_eq!(comps[0], cyc(110, &first));
        assert_eq!(comps[1], cyc(110, &second));
        let both = ruzsa(11, 2, &[1, 2]).unwrap();
        let mut merged = first.clone();
        merged.extend_from_slice(&second);
        assert_eq!(both, cyc(110, &merged));
        assert_eq!(both.g_value(), 8, "2|K|^2 is attained here");

        assert_eq!(ruzsa(5, 2, &[1]).unwrap(), cyc(20, &[3, 14, 16, 17]));
    }

    #[test]
    fn ruzsa_rejects_bad_input() {
        assert!(matches!(ruzsa(10, 3, &[1]), Err(Error::NotPrime(10))));
        assert!(matches!(ruzsa(11, 3, &[1]), Err(Error::NotPrimitive(_))));
        assert!(matches!(ruzsa(11, 2, &[0]), Err(Error::InvalidIndex(_))));
        assert!(matches!(ruzsa(11, 2, &[11]), Err(Error::InvalidIndex(_))));
        assert!(matches!(ruzsa(11, 2, &[]), Err(Error::InvalidIndex(_))));
        assert!(matches!(ruzsa(11, 2, &[2, 2]), Err(Error::InvalidIndex(_))));
    }

    #[test]
    fn bose_reference_sets() {
        let ctx = make_field(11, 2, Some(Poly::parse("x^2+3x+6", 11).unwrap())).unwrap();
        let first = vec![1u64, 30, 38, 55, 56, 65, 69, 71, 76, 99, 118];
        let second = vec![18u64, 26, 43, 44, 53, 57, 59, 64, 87, 106, 109];
        let comps = bose_components(&ctx, &[1, 2]).unwrap();
        assert_eq!(comps[0], cyc(120, &first));
        assert_eq!(comps[1], cyc(120, &second));
        let mut merged = first;
        merged.extend_from_slice(&second);
        assert_eq!(bose(&ctx, &[1, 2]).unwrap(), cyc(120, &merged));

        let f9 = make_field(3, 2, Some(Poly::parse("x^2+x+2", 3).unwrap())).unwrap();
        assert_eq!(bose(&f9, &[1]).unwrap(), cyc(8, &[1, 6, 7]));
    }

    #[test]
    fn bose_rejects_bad_input() {
        let ctx = make_field(3, 2, None).unwrap();
        assert!(matches!(bose(&ctx, &[]), Err(Error::InvalidIndex(_))));
        assert!(matches!(bose(&ctx, &[0]), Err(Error::InvalidIndex(_))));
        assert!(matches!(bose(&ctx, &[3]), Err(Error::InvalidIndex(_))));
        let cubic = make_field(3, 3, None).unwrap();
        assert!(matches!(bose(&cubic, &[1]), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn singer_reference_sets() {
        let ctx = make_field(11, 3, Some(Poly::parse("x^3+x^2+6x+4", 11).unwrap())).unwrap();
        let first = vec![0u64, 9, 57, 59, 63, 81, 86, 97, 100, 112, 125, 132];
        let second = vec![3u64, 15, 28, 35, 36, 45, 93, 95, 99, 117, 122];
        let comps = singer_components(&ctx, &[(1, 1), (1, 2)]).unwrap();
        assert_eq!(comps[0], cyc(133, &first));
        assert_eq!(comps[1], cyc(133, &second));
        let mut merged = first;
        merged.extend_from_slice(&second);
        assert_eq!(singer(&ctx, &[(1, 1), (1, 2)]).unwrap(), cyc(133, &merged));

        let f8 = make_field(2, 3, Some(Poly::parse("x^3+x+1", 2).unwrap())).unwrap();
        assert_eq!(singer(&f8, &[(1, 0)]).unwrap(), cyc(7, &[0, 1, 3]));
        // that set is the classical perfect difference set mod 7
        assert_eq!(singer(&f8, &[(1, 0)]).unwrap().g_value(), 2);
    }

    #[test]
    fn singer_rejects_bad_input() {
        let ctx = make_field(11, 3, None).unwrap();
        assert!(matches!(singer(&ctx, &[]), Err(Error::InvalidIndex(_))));
        assert!(matches!(singer(&ctx, &[(0, 0)]), Err(Error::InvalidIndex(_))));
        assert!(matches!(singer(&ctx, &[(1, 11)]), Err(Error::InvalidIndex(_))));
        let err = singer(&ctx, &[(1, 0), (2, 0)]).unwrap_err();
        match err {
            Error::InvalidIndex(msg) => {
                assert!(msg.contains("<1,0>") && msg.contains("<2,0>"), "{msg}")
            }
            other => panic!("expected invalid-index, got {other:?}"),
        }
        let quad = make_field(11, 2, None).unwrap();
        assert!(matches!(singer(&quad, &[(1, 0)]), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn singer_blocks_are_affine_lines() {
        let f8 = make_field(2, 3, Some(Poly::parse("x^3+x+1", 2).unwrap())).unwrap();
        let block = singer_block(&f8, (1, 0)).unwrap();
        assert_eq!(block.modulus(), 7);
        assert_eq!(block, cyc(7, &[1, 3]));
        // over a prime-power base as well
        let f64 = make_field_over(4, 3, None).unwrap();
        let block = singer_block(&f64, (1, 2)).unwrap();
        assert_eq!(block.modulus(), 63);
        assert_eq!(block.len(), 4);
        // three pairwise non-proportional blocks stay disjoint and their
        // union keeps a bounded three-fold sum count
        let blocks: Vec<CyclicSet> = [(1u64, 0u64), (1, 1), (1, 2)]
            .iter()
            .map(|&p| singer_block(&f64, p).unwrap())
            .collect();
        let union = blocks[0].union(&blocks[1]).unwrap().union(&blocks[2]).unwrap();
        assert_eq!(union.len(), 12);
        assert!(union.triple_convolution_max().unwrap() <= 81);
    }

    #[test]
    fn prime_power_bases_keep_the_promised_shapes() {
        for q in [4u64, 8, 9] {
            let ctx2 = make_field_over(q, 2, None).unwrap();
            let single = bose(&ctx2, &[1]).unwrap();
            assert_eq!(single.modulus(), q * q - 1);
            assert_eq!(single.len() as u64, q);
            assert!(single.g_value() <= 2, "Bose singleton over F_{q}");

            let ctx3 = make_field_over(q, 3, None).unwrap();
            let single = singer(&ctx3, &[(1, 0)]).unwrap();
            assert_eq!(single.modulus(), q * q + q + 1);
            assert_eq!(single.len() as u64, q + 1);
            assert!(single.g_value() <= 2, "Singer singleton over F_{q}");
        }
    }

    #[test]
    fn components_are_disjoint_with_small_cross_convolutions() {
        fn cross_max(a: &CyclicSet, b: &CyclicSet) -> u64 {
            let n = a.modulus();
            let mut counts = vec![0u64; n as usize];
            let mut best = 0;
            for &x in a.elements() {
                for &y in b.elements() {
                    let s = ((x + y) % n) as usize;
                    counts[s] += 1;
                    best = best.max(counts[s]);
                }
            }
            best
        }

        let ruzsa_comps = ruzsa_components(13, 2, &[1, 2, 3]).unwrap();
        let bose_ctx = make_field(7, 2, None).unwrap();
        let bose_comps = bose_components(&bose_ctx, &[1, 2, 3]).unwrap();
        let singer_ctx = make_field(5, 3, None).unwrap();
        let singer_comps = singer_components(&singer_ctx, &[(1, 0), (1, 1), (1, 2)]).unwrap();

        for comps in [&ruzsa_comps, &bose_comps, &singer_comps] {
            let total: usize = comps.iter().map(|c| c.len()).sum();
            let mut acc = comps[0].clone();
            for c in &comps[1..] {
                acc = acc.union(c).unwrap();
            }
            assert_eq!(acc.len(), total, "components overlap");
            for i in 0..comps.len() {
                for j in 0..comps.len() {
                    if i != j {
                        assert!(
                            cross_max(&comps[i], &comps[j]) <= 2,
                            "cross convolution of components {i},{j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn union_g_values_respect_2k_squared() {
        let ctx = make_field(7, 2, None).unwrap();
        for kmax in 1..=3u64 {
            let k_set: Vec<u64> = (1..=kmax).collect();
            let s = bose(&ctx, &k_set).unwrap();
            assert!(s.g_value() <= 2 * kmax * kmax, "|K|={kmax}");
        }
        let ctx = make_field(5, 3, None).unwrap();
        let s = singer(&ctx, &[(1, 0), (1, 1)]).unwrap();
        assert!(s.g_value() <= 8);
        let s = ruzsa(11, 2, &[1, 2, 3]).unwrap();
        assert!(s.g_value() <= 18);
    }

    #[test]
    fn crt_combine_reference_cases() {
        let m = cyc(2, &[0, 1]);
        let s = cyc(7, &[0, 1, 3]);
        let combined = crt_combine(&m, &s).unwrap();
        assert_eq!(combined, cyc(14, &[0, 1, 2, 3, 6, 7]));
        assert!(combined.g_value() <= 4);

        // identity combinator
        let id = cyc(1, &[0]);
        assert_eq!(crt_combine(&id, &s).unwrap(), s);

        let m = cyc(7, &[0, 1, 3]);
        let s8 = cyc(8, &[0, 1, 3]);
        assert_eq!(s8.g_value(), 2);
        let combined = crt_combine(&m, &s8).unwrap();
        assert_eq!(combined.len(), 9);
        assert_eq!(combined.modulus(), 56);
        assert!(combined.g_value() <= 4);

        assert!(matches!(
            crt_combine(&cyc(4, &[0]), &cyc(6, &[1])),
            Err(Error::NotCoprime(6, 4))
        ));
    }

    #[test]
    fn interleave_reference_cases() {
        // full residue system mod 2
        let out = interleave_linear(&cyc(2, &[0, 1]), &int(&[0, 1, 3])).unwrap();
        assert_eq!(out, int(&[1, 2, 3, 4, 7, 8]));
        assert!(out.g_value() <= 4);

        // single residue: a pure translate of y*S'
        let out = interleave_linear(&cyc(1, &[0]), &int(&[0, 1, 3])).unwrap();
        assert_eq!(out, int(&[1, 2, 4]));
        assert_eq!(out.g_value(), 2);

        // max cyclic gap 4 shifts {0,1,3} mod 7 to {1,2,4}
        let out = interleave_linear(&cyc(7, &[0, 1, 3]), &int(&[0, 1])).unwrap();
        assert_eq!(out, int(&[1, 2, 4, 8, 9, 11]));
        assert_eq!(out.max().unwrap(), 11); // inside [1, 7*2 + 1 - 4]

        // empty inputs degenerate cleanly
        assert!(interleave_linear(&cyc(5, &[]), &int(&[0, 1])).unwrap().is_empty());
        assert!(interleave_linear(&cyc(5, &[1]), &int(&[])).unwrap().is_empty());
    }

    #[test]
    fn interleave_multiplicative_bound_explored() {
        // a few deliberately non-Sidon inputs
        let cases: Vec<(CyclicSet, IntegerSet)> = vec![
            (cyc(6, &[0, 1, 3]), int(&[0, 1, 2])),
            (cyc(9, &[0, 1, 2, 5]), int(&[0, 2, 3])),
            (cyc(5, &[0, 2, 4]), int(&[0, 1, 4, 6])),
            (cyc(11, &[0, 1, 4, 9]), int(&[0, 1])),
        ];
        for (m, s) in cases {
            let out = interleave_linear(&m, &s).unwrap();
            assert_eq!(out.len(), m.len() * s.len());
            let bound = m.g_value() * s.g_value();
            assert!(
                out.g_value() <= bound,
                "{m} x {s}: got {} > {bound}",
                out.g_value()
            );
        }
        // same multiplicative law for the CRT combinator
        let m = cyc(9, &[0, 1, 2]);
        let s = cyc(10, &[0, 1, 3]);
        let out = crt_combine(&m, &s).unwrap();
        assert!(out.g_value() <= m.g_value() * s.g_value());
    }

    #[test]
    fn block_family_reference_cases() {
        assert_eq!(
            block_set(6).unwrap(),
            int(&[0, 1, 4, 6, 7, 11, 12, 13, 14, 15, 16])
        );
        assert_eq!(block_set(1).unwrap(), int(&[3]));
        assert_eq!(block_set(3).unwrap(), int(&[0, 3, 6, 7, 8]));
        assert_eq!(block_set(2).unwrap(), int(&[5, 6]));
        assert!(block_set(0).is_err());
    }

    #[test]
    fn block_family_shape_holds_broadly() {
        for g in 1..=200u64 {
            let s = block_set(g).unwrap();
            assert_eq!(s.len() as u64, g + 2 * (g / 3) + g / 6, "cardinality at g={g}");
            assert!(s.max().unwrap() <= 3 * g - g / 3, "containment at g={g}");
        }
        for g in 1..=25u64 {
            assert!(block_set(g).unwrap().g_value() <= g, "g-value at g={g}");
        }
    }

    #[test]
    fn misc_helpers() {
        assert_eq!(ruzsa_default_theta(11).unwrap(), 2);
        assert_eq!(largest_prime_le(100).unwrap(), 97);
        assert_eq!(largest_prime_le(7).unwrap(), 7);
        assert!(largest_prime_le(1).is_err());
        assert!(is_prime_power(9) && is_prime_power(8) && !is_prime_power(12));
    }
}
