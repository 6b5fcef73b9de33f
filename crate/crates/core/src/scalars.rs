//! Exact arithmetic in Q(v), v = q^{1/2}.
//!
//! All identities in the engine are identities in this field: q-integers,
//! Casimir eigenvalues chi_j, every matrix entry and every relation
//! coefficient. Values are canonical (reduced fraction, normalized
//! denominator), so equality is structural equality.

use crate::halfint::HalfInt;
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational coefficient.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

/// A Laurent polynomial in v with rational coefficients.
///
/// Stored densely as the coefficient run `coeffs[0..]` starting at exponent
/// `lo`. Canonical form: first and last stored coefficients are nonzero; the
/// zero polynomial is the empty run with `lo = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, Rat::one())
    }

    /// c * v^k
    pub fn monomial(k: i64, c: Rat) -> Self {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { lo: k, coeffs: vec![c] }
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        LaurentPoly::monomial(0, c)
    }

    /// From a coefficient run starting at exponent `lo` (trims to canonical).
    pub fn from_coeffs(lo: i64, coeffs: Vec<Rat>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while let Some(c) = self.coeffs.last() {
            if c.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (None when zero).
    pub fn min_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo)
        }
    }

    /// Highest exponent with nonzero coefficient (None when zero).
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo + self.coeffs.len() as i64 - 1)
        }
    }

    /// Number of stored coefficients (dense run length).
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: i64) -> Rat {
        if self.is_zero() || k < self.lo || k >= self.lo + self.coeffs.len() as i64 {
            Rat::zero()
        } else {
            self.coeffs[(k - self.lo) as usize].clone()
        }
    }

    /// Coefficient of the highest power.
    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// True when every exponent with a nonzero coefficient is even
    /// (i.e. the polynomial is a polynomial in q = v^2).
    pub fn all_exponents_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (self.lo + i as i64) % 2 == 0)
    }

    /// Multiply by v^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64);
        let mut coeffs = vec![Rat::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.lo + other.lo, coeffs)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact division; None when the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        let m = d.coeffs.len();
        let lead = d.coeffs.last().unwrap();
        let mut quot = vec![Rat::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let c = &rem[k + m - 1] / lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = dc * &c;
                    rem[k + j] -= t;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_coeffs(self.lo - d.lo, quot))
    }

    /// Monic gcd of the polynomial parts (units v^k ignored); result has
    /// min exponent 0 and leading coefficient 1. gcd(0, p) = normalized p.
    ///
    /// Computed by a primitive pseudo-remainder sequence over the integers,
    /// which avoids rational coefficient growth inside the Euclid loop.
    pub fn gcd(&self, other: &Self) -> Self {
        fn normalize(p: &LaurentPoly) -> LaurentPoly {
            if p.is_zero() {
                return LaurentPoly::zero();
            }
            let lead = p.coeffs.last().unwrap().clone();
            LaurentPoly {
                lo: 0,
                coeffs: p.coeffs.iter().map(|c| c / &lead).collect(),
            }
        }
        if self.is_zero() {
            return normalize(other);
        }
        if other.is_zero() {
            return normalize(self);
        }
        if self.coeffs.len() == 1 || other.coeffs.len() == 1 {
            return LaurentPoly::one();
        }
        let mut a = int_primitive(&self.coeffs);
        let mut b = int_primitive(&other.coeffs);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_prem(&a, &b);
            a = b;
            b = int_primitive_ints(r);
        }
        let lead = Rat::from(a.last().unwrap().clone());
        LaurentPoly {
            lo: 0,
            coeffs: a.iter().map(|c| Rat::from(c.clone()) / &lead).collect(),
        }
    }

    /// Value at v = p (p must be nonzero when negative exponents occur).
    pub fn eval(&self, p: &Rat) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        // Horner from the top, then multiply by p^lo.
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c;
        }
        acc * pow_rat(p, self.lo)
    }

    /// Value at v = 1 (sum of coefficients).
    pub fn at_one(&self) -> Rat {
        let mut s = Rat::zero();
        for c in &self.coeffs {
            s += c;
        }
        s
    }

    /// Substitute v^2 -> p. Only valid when all exponents are even.
    pub fn eval_even(&self, p: &Rat) -> Rat {
        debug_assert!(self.all_exponents_even());
        let mut s = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.lo + i as i64;
            if !c.is_zero() {
                s += c * pow_rat(p, e / 2);
            }
        }
        s
    }
}

/// Divide a and b by their gcd (when nontrivial).
fn reduce_pair(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if a.is_one() || b.is_one() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.exact_div(&g).unwrap(), b.exact_div(&g).unwrap())
    }
}

/// Clear denominators and divide by integer content; trailing/leading zeros
/// assumed already trimmed (input is a canonical coefficient run).
fn int_primitive(coeffs: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for c in coeffs {
        let d = c.denom();
        let g = num::Integer::gcd(&lcm, d);
        lcm = lcm / g * d;
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    int_primitive_ints(ints)
}

fn int_primitive_ints(ints: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::from(0);
    for c in &ints {
        content = num::Integer::gcd(&content, c);
        if content == BigInt::from(1) {
            return ints;
        }
    }
    if content.is_zero() {
        return vec![];
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// Primitive pseudo-remainder of integer polynomials: repeated
/// lb * r - lr * x^shift * b steps with content stripped every round, so
/// coefficients stay near primitive size.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for (i, c) in r.iter_mut().enumerate() {
            *c = &*c * lb;
            if i >= shift && i - shift < db {
                *c -= &lr * &b[i - shift];
            }
        }
        r.pop();
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
        r = int_primitive_ints(r);
    }
    r
}

fn pow_rat(p: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let a = if e > 0 { p.clone() } else { p.recip() };
    let mut out = Rat::one();
    for _ in 0..e.unsigned_abs() {
        out *= &a;
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + i as i64;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "v^{e}")?;
            } else {
                write!(f, "{a}*v^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

/// An element of Q(v) in canonical form.
///
/// Invariants: den != 0, gcd(num, den) = 1, den has min exponent 0 and
/// leading coefficient 1. The zero element is 0/1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_poly(LaurentPoly::from_rat(rat(n, 1)))
    }

    pub fn from_rat(c: Rat) -> Self {
        Scalar::from_poly(LaurentPoly::from_rat(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar { num: p, den: LaurentPoly::one() }
    }

    /// v^k
    pub fn v_pow(k: i64) -> Self {
        Scalar::from_poly(LaurentPoly::monomial(k, Rat::one()))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn make(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
            }
        };
        Scalar::normalized_coprime(num, den)
    }

    /// Finish canonicalization when gcd(num, den) = 1 already holds:
    /// den gets min exponent 0 and leading coefficient 1.
    fn normalized_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let shift = den.min_exp().unwrap();
        let den = den.shift(-shift);
        let num = num.shift(-shift);
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            Scalar { num, den }
        } else {
            let inv = lead.recip();
            Scalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Scalar::make(self.num.add(&other.num), self.den.clone());
        }
        // t/(d1 d2 / g) with g = gcd(d1, d2); only gcd(t, g) can cancel
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return Scalar::normalized_coprime(num, den);
        }
        let d2g = other.den.exact_div(&g).unwrap();
        let d1g = self.den.exact_div(&g).unwrap();
        let t = self.num.mul(&d2g).add(&other.num.mul(&d1g));
        if t.is_zero() {
            return Scalar::zero();
        }
        let h = t.gcd(&g);
        if h.is_one() {
            Scalar::normalized_coprime(t, self.den.mul(&d2g))
        } else {
            let t = t.exact_div(&h).unwrap();
            let den = self.den.exact_div(&h).unwrap().mul(&d2g);
            Scalar::normalized_coprime(t, den)
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar { num: self.num.mul(&other.num), den: LaurentPoly::one() };
        }
        // cross-reduce: gcd(n1,d2) and gcd(n2,d1); the product is then coprime
        let (n1, d2) = reduce_pair(&self.num, &other.den);
        let (n2, d1) = reduce_pair(&other.num, &self.den);
        Scalar::normalized_coprime(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Scalar::make(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Scalar::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Evaluate with v = p (the uniform sampling homomorphism Q(v) -> Q).
    pub fn eval_v(&self, p: &Rat) -> Result<Rat> {
        let d = self.den.eval(p);
        if d.is_zero() {
            return Err(Error::PoleAtSample);
        }
        Ok(self.num.eval(p) / d)
    }

    /// Evaluate at a sample point for q.
    ///
    /// When every v-exponent in num and den is even the value is taken for
    /// q = v^2 directly; otherwise the point is interpreted as a value for v
    /// (so q = p^2).
    pub fn eval_at(&self, p: &SamplePoint) -> Result<Rat> {
        if self.num.all_exponents_even() && self.den.all_exponents_even() {
            let d = self.den.eval_even(&p.value);
            if d.is_zero() {
                return Err(Error::PoleAtSample);
            }
            Ok(self.num.eval_even(&p.value) / d)
        } else {
            self.eval_v(&p.value)
        }
    }

    /// Value at q = 1 (v = 1); canonical form cancels removable
    /// singularities, anything left is a genuine pole.
    pub fn limit_q_to_1(&self) -> Result<Rat> {
        let d = self.den.at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.at_one() / d)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

// ---------------------------------------------------------------------------
// q-builders
// ---------------------------------------------------------------------------

/// The q-integer [h]_q = (q^h - q^{-h}) / (q - q^{-1}), h any half-integer.
pub fn qint(h: HalfInt) -> Scalar {
    // q^h = v^{2h}, and 2h is exactly h.twice()
    let t = h.twice();
    let num = LaurentPoly::monomial(t, Rat::one()).sub(&LaurentPoly::monomial(-t, Rat::one()));
    let den = LaurentPoly::monomial(2, Rat::one()).sub(&LaurentPoly::monomial(-2, Rat::one()));
    Scalar::make(num, den)
}

/// [n]_q for an integer n.
pub fn qint_i(n: i64) -> Scalar {
    qint(HalfInt::from_int(n))
}

/// [n]_q! = [1]_q [2]_q ... [n]_q.
pub fn qfact(n: i64) -> Scalar {
    let mut out = Scalar::one();
    for k in 1..=n {
        out = out.mul(&qint_i(k));
    }
    out
}

/// chi_j = q^{2j+1} + q^{-2j-1}, the Casimir eigenvalue on the spin-j irrep.
/// Defined for any half-integer j (chi_{-j-1} = chi_j).
pub fn chi(j: HalfInt) -> Scalar {
    let e = 2 * (j.twice() + 1); // v-exponent of q^{2j+1}
    Scalar::from_poly(
        LaurentPoly::monomial(e, Rat::one()).add(&LaurentPoly::monomial(-e, Rat::one())),
    )
}

/// chi~_j = [j]_q [j+1]_q, the tilde-transformed Casimir eigenvalue.
pub fn chi_tilde(j: HalfInt) -> Scalar {
    qint(j).mul(&qint(j + HalfInt::from_int(1)))
}

/// q + q^{-1}
pub fn qplus() -> Scalar {
    Scalar::from_poly(
        LaurentPoly::monomial(2, Rat::one()).add(&LaurentPoly::monomial(-2, Rat::one())),
    )
}

/// q - q^{-1}
pub fn qminus() -> Scalar {
    Scalar::from_poly(
        LaurentPoly::monomial(2, Rat::one()).sub(&LaurentPoly::monomial(-2, Rat::one())),
    )
}

/// q^h as a Scalar.
pub fn qpow(h: HalfInt) -> Scalar {
    Scalar::v_pow(h.twice())
}

// ---------------------------------------------------------------------------
// Sample points
// ---------------------------------------------------------------------------

/// A rational sample point for probabilistic identity testing.
///
/// The value is a rational != 0, +-1, hence never a root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    pub value: Rat,
}

impl SamplePoint {
    pub fn new(value: Rat) -> Result<Self> {
        if value.is_zero() || value.abs().is_one() {
            return Err(Error::InvalidSpin(format!("sample point {value} in {{0, 1, -1}}")));
        }
        Ok(SamplePoint { value })
    }
}

/// Deterministic stream of sample points (numerators and denominators up to
/// 10^3), seeded so runs are reproducible.
#[derive(Clone)]
pub struct SampleGen {
    rng: ChaCha8Rng,
}

impl SampleGen {
    pub fn new(seed: u64) -> Self {
        SampleGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn next_point(&mut self) -> SamplePoint {
        loop {
            let n: i64 = self.rng.gen_range(2..=1000);
            let d: i64 = self.rng.gen_range(1..=1000);
            if n == d {
                continue;
            }
            let v = rat(n, d);
            if v.is_zero() || v.abs().is_one() {
                continue;
            }
            return SamplePoint { value: v };
        }
    }

    pub fn points(&mut self, k: usize) -> Vec<SamplePoint> {
        (0..k).map(|_| self.next_point()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::half;

    fn hi(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    #[test]
    fn qint_small_values() {
        assert!(qint(hi(0)).is_zero());
        assert!(qint(hi(1)).is_one());
        // [2]_q = q + q^{-1}, expanded from (q^2 - q^-2)/(q - q^-1)
        assert_eq!(qint(hi(2)), qplus());
        // [-n]_q = -[n]_q
        for n in 1..6 {
            assert_eq!(qint(hi(-n)), qint(hi(n)).neg());
        }
    }

    #[test]
    fn qint_recurrence() {
        // [n+1] + [n-1] = (q + q^{-1}) [n]
        for n in 1..=20 {
            let lhs = qint(hi(n + 1)).add(&qint(hi(n - 1)));
            let rhs = qplus().mul(&qint(hi(n)));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn chi_values() {
        assert_eq!(chi(hi(0)), qplus());
        // chi_{1/2} = q^2 + q^{-2}
        let c = Scalar::from_poly(
            LaurentPoly::monomial(4, Rat::one()).add(&LaurentPoly::monomial(-4, Rat::one())),
        );
        assert_eq!(chi(half(1)), c);
        // chi_1 = q^3 + q^{-3}
        let c1 = Scalar::from_poly(
            LaurentPoly::monomial(6, Rat::one()).add(&LaurentPoly::monomial(-6, Rat::one())),
        );
        assert_eq!(chi(hi(1)), c1);
    }

    #[test]
    fn chi_tilde_values() {
        assert!(chi_tilde(hi(0)).is_zero());
        assert_eq!(chi_tilde(half(1)), qint(half(1)).mul(&qint(half(3))));
        // [1][2] = q + q^{-1}
        assert_eq!(chi_tilde(hi(1)), qplus());
    }

    #[test]
    fn chi_from_chi_tilde() {
        // chi_j = (q - q^{-1})^2 chi~_j + q + q^{-1}  (tilde transform consistency)
        for t in 0..=10 {
            let j = half(t);
            let lhs = chi(j);
            let rhs = qminus().pow(2).mul(&chi_tilde(j)).add(&qplus());
            assert_eq!(lhs, rhs, "2j = {t}");
        }
    }

    #[test]
    fn field_laws_random() {
        // (a+b)c = ac + bc and a * a^{-1} = 1 on scalars built from qint/chi
        let mut pool = vec![];
        for n in 1..8 {
            pool.push(qint(hi(n)));
            pool.push(chi(half(n)));
            pool.push(qint(half(n)));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let a = &pool[rng.gen_range(0..pool.len())];
            let b = &pool[rng.gen_range(0..pool.len())];
            let c = &pool[rng.gen_range(0..pool.len())]
                .div(&pool[rng.gen_range(0..pool.len())])
                .unwrap();
            let lhs = a.add(b).mul(c);
            let rhs = a.mul(c).add(&b.mul(c));
            assert_eq!(lhs, rhs);
            if !a.is_zero() {
                assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn eval_examples() {
        // eval(q + q^{-1}, q=2) = 5/2
        let p = SamplePoint::new(rat(2, 1)).unwrap();
        assert_eq!(qplus().eval_at(&p).unwrap(), rat(5, 2));
        // eval([2]_q^2, q=3) = (3 + 1/3)^2 = 100/9
        let p3 = SamplePoint::new(rat(3, 1)).unwrap();
        assert_eq!(qint(hi(2)).pow(2).eval_at(&p3).unwrap(), rat(100, 9));
        // 1/(q - q^{-1}) at q=1 is forbidden at construction
        assert!(SamplePoint::new(rat(1, 1)).is_err());
        // pole detection: eval 1/(v - 2) at v = 2
        let s = Scalar::one()
            .div(&Scalar::v_pow(1).sub(&Scalar::from_int(2)))
            .unwrap();
        assert_eq!(s.eval_v(&rat(2, 1)), Err(Error::PoleAtSample));
    }

    #[test]
    fn eval_is_homomorphism() {
        let p = SamplePoint::new(rat(5, 3)).unwrap();
        let a = qint(hi(3));
        let b = chi(hi(1));
        let c = chi_tilde(half(1));
        let lhs = a.mul(&b).add(&c).eval_at(&p).unwrap();
        let rhs = a.eval_at(&p).unwrap() * b.eval_at(&p).unwrap() + c.eval_at(&p).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn limit_q_to_1() {
        // [n]_q -> n
        for n in 0..12 {
            assert_eq!(qint(hi(n)).limit_q_to_1().unwrap(), rat(n, 1));
        }
        // chi~_j -> j(j+1)
        for t in 0..=8 {
            let j = half(t);
            let expect = rat(t, 2) * rat(t + 2, 2);
            assert_eq!(chi_tilde(j).limit_q_to_1().unwrap(), expect, "2j = {t}");
        }
        // genuine pole: 1/(q-1)
        let s = Scalar::one()
            .div(&Scalar::v_pow(2).sub(&Scalar::one()))
            .unwrap();
        assert_eq!(s.limit_q_to_1(), Err(Error::PoleAtOne));
    }

    #[test]
    fn canonical_form() {
        // (v^2 - 1)/(v - 1) reduces to v + 1
        let n = LaurentPoly::monomial(2, Rat::one()).sub(&LaurentPoly::one());
        let d = LaurentPoly::monomial(1, Rat::one()).sub(&LaurentPoly::one());
        let s = Scalar::make(n, d);
        assert_eq!(
            s,
            Scalar::from_poly(LaurentPoly::monomial(1, Rat::one()).add(&LaurentPoly::one()))
        );
        // denominator normalized: 1/(2v^2) has den v^2, num 1/2... den monic & lo 0
        let s2 = Scalar::one()
            .div(&Scalar::from_poly(LaurentPoly::monomial(2, rat(2, 1))))
            .unwrap();
        assert_eq!(s2.den().min_exp(), Some(0));
        assert!(s2.den().leading().unwrap().is_one());
    }

    #[test]
    fn sample_gen_is_deterministic() {
        let mut a = SampleGen::new(99);
        let mut b = SampleGen::new(99);
        for _ in 0..10 {
            assert_eq!(a.next_point(), b.next_point());
        }
    }
}
