//! Closed-form upper bounds on the cyclic extremal function and
//! exact-rational lower bounds on the asymptotic density constant
//!
//!   sigma(g) = liminf R(g,n)/sqrt(floor(g/2) n).
//!
//! Every density bound is kept as a reduced integer ratio whose square root
//! is the bound; floats are rendered for display only, so table ratios like
//! 289/240 can be checked with zero tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::construct::block_set;
use crate::error::{Error, Result};
use crate::field::isqrt;
use crate::sets::IntegerSet;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A reduced nonnegative fraction compared exactly via cross multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Ratio> {
        if den == 0 {
            return Err(Error::InvalidInput("ratio with zero denominator".into()));
        }
        let g = gcd(num, den).max(1);
        Ok(Ratio {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Square root as f64; exactness lives in the ratio itself.
    pub fn sqrt(&self) -> f64 {
        self.as_f64().sqrt()
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ratio> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num = num
            .parse::<u64>()
            .map_err(|_| Error::ParseError(format!("bad ratio numerator {num:?}")))?;
        let den = den
            .parse::<u64>()
            .map_err(|_| Error::ParseError(format!("bad ratio denominator {den:?}")))?;
        Ratio::new(num, den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn mul_guard(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b)
        .ok_or_else(|| Error::InvalidInput(format!("{a} * {b} overflows u64")))
}

/// Smallest of the closed-form upper bounds on the largest subset of Z_n
/// with g-value at most g:
///
/// - g = 2: the largest c with c(c-1)/2 <= floor(n/2)
/// - g = 3: min of the largest c with c(c-3)/2 <= floor(n/2)
///   and floor(sqrt(n + 9/2) + 3)
/// - g = 4: min of floor(sqrt(3n) + 7/6) and floor(sqrt(4n))
/// - even g >= 6: floor(sqrt(gn))
/// - odd g >= 5: floor(sqrt((g-1)n)) + 1
pub fn c_upper_bound(g: u64, n: u64) -> Result<u64> {
    if g < 2 {
        return Err(Error::InvalidInput(format!(
            "the closed-form bounds need g >= 2, got {g}"
        )));
    }
    if n < 1 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let half = n / 2;
    let bound = match g {
        2 => (1 + isqrt(1 + 8 * half)) / 2,
        3 => {
            let binom = (3 + isqrt(9 + 8 * half)) / 2;
            let closed = 3 + isqrt(n + 4);
            binom.min(closed)
        }
        4 => {
            let cubic = (isqrt(mul_guard(108, n)?) + 7) / 6;
            cubic.min(isqrt(mul_guard(4, n)?))
        }
        g if g % 2 == 0 => isqrt(mul_guard(g, n)?),
        g => isqrt(mul_guard(g - 1, n)?) + 1,
    };
    Ok(bound)
}

/// Where a density lower bound came from: a recorded extremal witness, or
/// the four-block family's closed formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SigmaSource {
    #[serde(rename = "thm3-witness")]
    Witness,
    #[serde(rename = "thm4-formula")]
    Formula,
}

impl fmt::Display for SigmaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaSource::Witness => "thm3-witness",
            SigmaSource::Formula => "thm4-formula",
        })
    }
}

/// A lower bound sigma(g_target) >= sqrt(bound), with bound = r^2/(g x)
/// exact. float_value is the square root, display only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SigmaBound {
    pub g_target: u64,
    pub x: u64,
    pub r_value: u64,
    pub bound: Ratio,
    pub float_value: f64,
    pub source: SigmaSource,
}

/// Turns a verified witness S in [1, x] with g_value(S) <= g into the bound
/// sigma(2g) >= sqrt(|S|^2/(gx)); also valid for sigma(2g+1).
pub fn sigma_lower_from_witness(g: u64, x: u64, witness: &IntegerSet) -> Result<SigmaBound> {
    if g < 1 || x < 1 {
        return Err(Error::InvalidInput("need g >= 1 and x >= 1".into()));
    }
    if witness.is_empty() {
        return Err(Error::WitnessError("empty witness".into()));
    }
    let lo = witness.min().unwrap();
    let hi = witness.max().unwrap();
    if lo < 1 || hi > x {
        return Err(Error::WitnessError(format!(
            "witness spans [{lo}, {hi}], not contained in [1, {x}]"
        )));
    }
    let gv = witness.g_value();
    if gv > g {
        return Err(Error::WitnessError(format!(
            "witness has g-value {gv}, required at most {g}"
        )));
    }
    let r = witness.len() as u64;
    let bound = Ratio::new(mul_guard(r, r)?, mul_guard(g, x)?)?;
    Ok(SigmaBound {
        g_target: 2 * g,
        x,
        r_value: r,
        bound,
        float_value: bound.sqrt(),
        source: SigmaSource::Witness,
    })
}

/// The four-block family's closed-form bound
/// sigma(2g) >= (g + 2 floor(g/3) + floor(g/6)) / sqrt(3g^2 - g floor(g/3) + g),
/// computed without building the set.
pub fn sigma_lower_block_formula(g: u64) -> Result<SigmaBound> {
    if g < 1 {
        return Err(Error::InvalidInput("need g >= 1".into()));
    }
    let r = g + 2 * (g / 3) + g / 6;
    let x = 3 * g - g / 3 + 1;
    let bound = Ratio::new(mul_guard(r, r)?, mul_guard(g, x)?)?;
    Ok(SigmaBound {
        g_target: 2 * g,
        x,
        r_value: r,
        bound,
        float_value: bound.sqrt(),
        source: SigmaSource::Formula,
    })
}

/// The same bound realized concretely: the four-block set shifted into
/// [1, 3g - floor(g/3) + 1] and run through the witness pipeline. Must agree
/// with [`sigma_lower_block_formula`] exactly.
pub fn sigma_lower_block_constructive(g: u64) -> Result<SigmaBound> {
    let shifted = block_set(g)?.translate(1)?;
    let x = 3 * g - g / 3 + 1;
    sigma_lower_from_witness(g, x, &shifted)
}

/// The best available lower bound on sigma(target): the max over the
/// recorded witness table (when target/2 has a row) and the block-family
/// formula. Odd targets inherit the bound for target - 1 since sigma is
/// nondecreasing from 2g to 2g+1.
pub fn best_sigma_lower(target: u64) -> Result<SigmaBound> {
    if target < 2 {
        return Err(Error::InvalidInput(format!(
            "sigma targets start at 2, got {target}"
        )));
    }
    let g = target / 2;
    let mut best = sigma_lower_block_formula(g)?;
    for row in crate::tables::witness_table() {
        if row.g == g {
            let cand = sigma_lower_from_witness(row.g, row.x, &row.witness)?;
            if cand.bound > best.bound {
                best = cand;
            }
        }
    }
    best.g_target = target;
    Ok(best)
}

/// The classical list of explicit lower bounds on sigma at even targets
/// 4 through 22, kept exactly as published: sigma(target) >= sqrt(ratio).
///
/// Every entry here is derivable from a witness-table row via
/// [`sigma_lower_from_witness`], with one quirk preserved on purpose: the
/// published value at target 8 is sqrt(8/7), while the g = 4 witness row
/// yields the stronger sqrt(36/31). Both are valid lower bounds;
/// [`best_sigma_lower`] returns the stronger route, and this list keeps
/// the weaker printed one for exact comparison.
pub fn explicit_sigma_lower_bounds() -> Vec<(u64, Ratio)> {
    [
        (4, (8, 7)),
        (6, (16, 15)),
        (8, (8, 7)),
        (10, (49, 45)),
        (12, (6, 5)),
        (14, (121, 105)),
        (16, (289, 240)),
        (18, (32, 27)),
        (20, (40, 33)),
        (22, (324, 275)),
    ]
    .into_iter()
    .map(|(target, (n, d))| (target, Ratio::new(n, d).expect("static ratios")))
    .collect()
}

/// One row of the embedded witness-table re-verification.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessCheck {
    pub g: u64,
    pub x: u64,
    pub r_value: u64,
    pub ratio: Ratio,
    pub ok: bool,
    pub detail: String,
}

/// Re-derives every embedded witness-table row from scratch: cardinality,
/// containment, g-value, and the printed ratio as an exact rational.
pub fn verify_witness_table() -> Vec<WitnessCheck> {
    crate::tables::witness_table()
        .iter()
        .map(|row| {
            let mut problems = Vec::new();
            if row.witness.len() as u64 != row.r_value {
                problems.push(format!(
                    "cardinality {} != {}",
                    row.witness.len(),
                    row.r_value
                ));
            }
            match sigma_lower_from_witness(row.g, row.x, &row.witness) {
                Err(e) => problems.push(e.to_string()),
                Ok(b) => {
                    if b.bound != row.ratio {
                        problems.push(format!(
                            "recomputed ratio {} != printed {}",
                            b.bound, row.ratio
                        ));
                    }
                }
            }
            WitnessCheck {
                g: row.g,
                x: row.x,
                r_value: row.r_value,
                ratio: row.ratio,
                ok: problems.is_empty(),
                detail: if problems.is_empty() {
                    "ok".into()
                } else {
                    problems.join("; ")
                },
            }
        })
        .collect()
}
