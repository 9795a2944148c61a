//! Exact arithmetic in the field of rational functions of the deformation
//! parameter `q`, plus the q-special scalars used by the equation and wave
//! modules.
//!
//! `q` is treated as transcendental: a [`QScalar`] is a ratio of
//! integer-coefficient Laurent polynomials in `q`, kept in a canonical form
//! (coprime numerator/denominator, denominator an ordinary polynomial with
//! nonzero constant term and positive leading coefficient). Equality of
//! canonical forms decides mathematical equality, so identity checks reduce
//! to "is the canonical form zero". Coefficients are arbitrary precision;
//! there is no floating point.
//!
//! Conventions:
//!
//! * `λ = q − q⁻¹`, and conjugation sends `q ↦ q⁻¹` (so `λ ↦ −λ`).
//! * `[n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹)`, an integer Laurent polynomial.
//! * `[n]_q! = [n]_q [n−1]_q ⋯ [1]_q`, `[0]_q! = 1`.
//! * `1/Γ_q(p) = 1/[p−1]_q!` for `p ≥ 1` and `0` for `p ≤ 0`. Extending the
//!   zero to `p = 0` mirrors the pole structure of the classical `Γ` and is
//!   what makes the plane-wave summation ranges finite.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

use crate::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by the zero scalar")]
    DivisionByZero,
    #[error("negative argument: {0}")]
    NegativeArgument(i64),
    #[error("pole at q = 1")]
    PoleAtOne,
}

/// Sparse integer-coefficient Laurent polynomial in `q`.
///
/// Stored as exponent → coefficient with no zero coefficients; the
/// coefficients the equations produce are sparse high-degree q-powers, so a
/// map beats a dense vector here.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Laurent::term(BigInt::one(), 0)
    }

    /// `c · q^e`, dropping the term when `c = 0`.
    pub fn term(c: BigInt, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Laurent::term(BigInt::from(n), 0)
    }

    pub fn q_pow(e: i64) -> Self {
        Laurent::term(BigInt::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        *self.terms.keys().next().expect("min_exp of zero")
    }

    pub fn max_exp(&self) -> i64 {
        *self.terms.keys().next_back().expect("max_exp of zero")
    }

    /// Coefficient of the highest power of `q`.
    fn leading(&self) -> &BigInt {
        self.terms.values().next_back().expect("leading of zero")
    }

    fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &-c);
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `q ↦ q⁻¹`.
    pub fn conj(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1` (the sum of all coefficients).
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    fn scale_int(&self, c: &BigInt) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Exact division by an integer; panics if any coefficient is not
    /// divisible.
    fn div_int_exact(&self, c: &BigInt) -> Laurent {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| {
                    let (d, r) = k.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact integer division");
                    (*e, d)
                })
                .collect(),
        }
    }
}

/// Pseudo-remainder of ordinary polynomials (`min_exp ≥ 0` assumed).
fn prem(a: &Laurent, b: &Laurent) -> Laurent {
    let db = b.max_exp();
    let lb = b.leading().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.max_exp() >= db {
        let dr = r.max_exp();
        let lr = r.leading().clone();
        r = r.scale_int(&lb).sub(&b.shift(dr - db).scale_int(&lr));
    }
    r
}

fn primitive(p: &Laurent) -> Laurent {
    if p.is_zero() {
        return Laurent::zero();
    }
    let mut out = p.div_int_exact(&p.content());
    if out.leading().is_negative() {
        out = out.neg();
    }
    out
}

/// Primitive gcd of two ordinary polynomials over ℤ, positive leading
/// coefficient. Primitive pseudo-remainder sequence; the degrees the engine
/// sees stay small enough that this never becomes a bottleneck.
fn poly_gcd(a: &Laurent, b: &Laurent) -> Laurent {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.is_zero() {
        return b;
    }
    while !b.is_zero() {
        if a.max_exp() < b.max_exp() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    a
}

/// Exact polynomial division (both ordinary polynomials, divisor nonzero);
/// panics when the division is not exact.
fn div_poly_exact(a: &Laurent, g: &Laurent) -> Laurent {
    if a.is_zero() {
        return Laurent::zero();
    }
    let dg = g.max_exp();
    let lg = g.leading().clone();
    let mut r = a.clone();
    let mut quot = Laurent::zero();
    while !r.is_zero() && r.max_exp() >= dg {
        let (c, rem) = r.leading().div_rem(&lg);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        let e = r.max_exp() - dg;
        quot.add_term(e, &c);
        r = r.sub(&g.shift(e).scale_int(&c));
    }
    debug_assert!(r.is_zero(), "nonzero remainder in exact division");
    quot
}

/// Exact rational function of `q`: `num/den` in canonical form.
///
/// Canonical means: `den` is a nonzero ordinary polynomial (lowest exponent
/// zero) with positive leading coefficient, `gcd(num, den) = 1` both as
/// polynomials and over the integers, and the zero scalar is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QScalar {
    num: Laurent,
    den: Laurent,
}

impl QScalar {
    fn canonical(mut num: Laurent, mut den: Laurent) -> QScalar {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QScalar {
                num: Laurent::zero(),
                den: Laurent::one(),
            };
        }
        // Move the Laurent unit of the denominator into the numerator.
        let dmin = den.min_exp();
        if dmin != 0 {
            den = den.shift(-dmin);
            num = num.shift(-dmin);
        }
        if !(den.max_exp() == 0 && den.leading().is_one()) {
            // Polynomial common factor (the numerator's own q-power unit is
            // irrelevant to the gcd).
            let nmin = num.min_exp();
            let npoly = num.shift(-nmin);
            let g = poly_gcd(&npoly, &den);
            if !g.is_zero() && g.max_exp() > 0 {
                num = div_poly_exact(&npoly, &g).shift(nmin);
                den = div_poly_exact(&den, &g);
            }
            // Integer content.
            let c = num.content().gcd(&den.content());
            if !c.is_one() {
                num = num.div_int_exact(&c);
                den = den.div_int_exact(&c);
            }
            if den.leading().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        QScalar { num, den }
    }

    pub fn zero() -> Self {
        QScalar {
            num: Laurent::zero(),
            den: Laurent::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: Laurent::one(),
            den: Laurent::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QScalar {
            num: Laurent::from_int(n),
            den: Laurent::one(),
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        QScalar {
            num: Laurent::term(n, 0),
            den: Laurent::one(),
        }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        QScalar {
            num: Laurent::q_pow(e),
            den: Laurent::one(),
        }
    }

    /// `λ = q − q⁻¹`.
    pub fn lambda() -> Self {
        QScalar {
            num: Laurent::q_pow(1).sub(&Laurent::q_pow(-1)),
            den: Laurent::one(),
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0);
        QScalar::canonical(Laurent::from_int(num), Laurent::from_int(den))
    }

    pub fn from_bigrational(r: &BigRational) -> Self {
        QScalar::canonical(
            Laurent::term(r.numer().clone(), 0),
            Laurent::term(r.denom().clone(), 0),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Laurent::one() && self.den == Laurent::one()
    }

    pub fn inv(&self) -> Result<QScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QScalar::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow_int(&self, e: i64) -> Result<QScalar, ScalarError> {
        if e < 0 {
            return Ok(self.inv()?.pow_int(-e).expect("nonnegative"));
        }
        let mut out = QScalar::one();
        for _ in 0..e {
            out = &out * self;
        }
        Ok(out)
    }

    /// Conjugation `q ↦ q⁻¹`.
    pub fn conj(&self) -> QScalar {
        QScalar::canonical(self.num.conj(), self.den.conj())
    }

    /// Exact value at `q = 1`.
    ///
    /// The canonical form is coprime, so numerator and denominator cannot
    /// share a `(q − 1)` factor; a vanishing denominator is a genuine pole.
    pub fn limit_q1(&self) -> Result<BigRational, ScalarError> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(ScalarError::PoleAtOne);
        }
        Ok(BigRational::new(self.num.eval_one(), d))
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.den == rhs.den {
            return QScalar::canonical(self.num.add(&rhs.num), self.den.clone());
        }
        QScalar::canonical(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        if self.den == rhs.den {
            return QScalar::canonical(self.num.sub(&rhs.num), self.den.clone());
        }
        QScalar::canonical(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.den == Laurent::one() && rhs.den == Laurent::one() {
            // Hot path: polynomial times polynomial needs no gcd.
            return QScalar {
                num: self.num.mul(&rhs.num),
                den: Laurent::one(),
            };
        }
        QScalar::canonical(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &QScalar {
    type Output = QScalar;
    fn div(self, rhs: &QScalar) -> QScalar {
        assert!(!rhs.is_zero(), "division by the zero scalar");
        QScalar::canonical(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl QScalar {
    pub fn checked_div(&self, rhs: &QScalar) -> Result<QScalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

fn fmt_laurent(p: &Laurent, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in p.terms.iter().rev() {
        let (sign, mag) = if c.is_negative() {
            ("-", -c)
        } else {
            ("+", c.clone())
        };
        if first {
            if sign == "-" {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, " {} ", sign)?;
        }
        if *e == 0 {
            write!(f, "{}", mag)?;
        } else if mag.is_one() {
            write!(f, "q^{}", e)?;
        } else {
            write!(f, "{}*q^{}", mag, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for QScalar {
    /// Canonical text form: terms in descending q-exponent, `num/den` with
    /// the denominator parenthesized when nontrivial, e.g. `q^2 - 2 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Laurent::one() {
            fmt_laurent(&self.num, f)
        } else {
            write!(f, "(")?;
            fmt_laurent(&self.num, f)?;
            write!(f, ")/(")?;
            fmt_laurent(&self.den, f)?;
            write!(f, ")")
        }
    }
}

/// The q-integer `[n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹)` as a Laurent polynomial;
/// `[−n]_q = −[n]_q` and `[0]_q = 0`.
pub fn qint(n: i64) -> QScalar {
    if n == 0 {
        return QScalar::zero();
    }
    if n < 0 {
        return -&qint(-n);
    }
    let mut p = Laurent::zero();
    for i in 0..n {
        p = p.add(&Laurent::q_pow(n - 1 - 2 * i));
    }
    QScalar { num: p, den: Laurent::one() }
}

/// `[n]_q! = [n]_q [n−1]_q ⋯ [1]_q`, with `[0]_q! = 1`.
pub fn qfact(n: i64) -> Result<QScalar, ScalarError> {
    if n < 0 {
        return Err(ScalarError::NegativeArgument(n));
    }
    let mut out = QScalar::one();
    for i in 1..=n {
        out = &out * &qint(i);
    }
    Ok(out)
}

/// `1/Γ_q(p)`: `1/[p−1]_q!` for `p ≥ 1`, and `0` for `p ≤ 0`.
///
/// The zero at `p = 0` extends the negative-integer rule; it is
/// exactly what truncates the plane-wave summation lattices, and every
/// annihilation suite doubles as a consistency check of the choice.
pub fn qgamma_recip(p: i64) -> QScalar {
    if p <= 0 {
        return QScalar::zero();
    }
    qfact(p - 1)
        .expect("p - 1 >= 0")
        .inv()
        .expect("factorial nonzero")
}

/// Plane-wave normalizer `β^s` (hat) or `β̃^s` (tilde).
///
/// Defined through its reciprocal, a sum of q-powers over products of
/// q-factorials; the hat exponent is `(s−p)(p−1)+p`, the tilde exponent
/// `(p−s)(p−1)+p`. At `q = 1` the value is `s!/2^s`.
pub fn qbeta(s: i64, basis: Basis) -> Result<QScalar, ScalarError> {
    if s < 0 {
        return Err(ScalarError::NegativeArgument(s));
    }
    let mut recip = QScalar::zero();
    for p in 0..=s {
        let e = match basis {
            Basis::Hat => (s - p) * (p - 1) + p,
            Basis::Tilde => (p - s) * (p - 1) + p,
        };
        let denom = &qfact(p)? * &qfact(s - p)?;
        recip = &recip + &(&QScalar::q_pow(e) / &denom);
    }
    recip.inv()
}

/// `d_s = β^s / β^{s+1}` (hat) or `d̃_s = β̃^s / β̃^{s+1}` (tilde), the
/// scalar appearing in the inhomogeneous Maxwell solutions.
pub fn qd(s: i64, basis: Basis) -> Result<QScalar, ScalarError> {
    Ok(&qbeta(s, basis)? / &qbeta(s + 1, basis)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QScalar {
        QScalar::q_pow(1)
    }

    #[test]
    fn lambda_squared_expands() {
        let l = QScalar::lambda();
        let got = &l * &l;
        // q^2 - 2 + q^-2
        let want = &(&QScalar::q_pow(2) - &QScalar::from_int(2)) + &QScalar::q_pow(-2);
        assert_eq!(got, want);
    }

    #[test]
    fn forced_cancellation() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let num = &QScalar::q_pow(2) - &QScalar::q_pow(-2);
        let den = &q() - &QScalar::q_pow(-1);
        let got = &num / &den;
        assert_eq!(got, qint(2));
    }

    #[test]
    fn beta_times_two_q_is_one() {
        // β̂¹ = 1/[2]_q, so β̂¹ · [2]_q = 1
        let b1 = qbeta(1, Basis::Hat).unwrap();
        assert_eq!(&b1 * &qint(2), QScalar::one());
        assert_eq!(b1, qint(2).inv().unwrap());
    }

    #[test]
    fn beta_tilde_one() {
        // β̃¹ = 1/(2q)
        let b = qbeta(1, Basis::Tilde).unwrap();
        let want = &QScalar::one() / &(&QScalar::from_int(2) * &QScalar::q_pow(1));
        assert_eq!(b, want);
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(0), QScalar::zero());
        assert_eq!(qint(1), QScalar::one());
        assert_eq!(qint(2), &q() + &QScalar::q_pow(-1));
    }

    #[test]
    fn qint_antisymmetric_and_defining() {
        let lam = QScalar::lambda();
        for n in -20i64..=20 {
            assert_eq!(qint(n), -&qint(-n), "[{n}] = -[-{n}]");
            let lhs = &qint(n) * &lam;
            let rhs = &QScalar::q_pow(n) - &QScalar::q_pow(-n);
            assert_eq!(lhs, rhs, "[{n}]·λ = q^{n} - q^-{n}");
        }
    }

    #[test]
    fn qfact_values() {
        assert_eq!(qfact(0).unwrap(), QScalar::one());
        assert_eq!(qfact(2).unwrap(), qint(2));
        assert_eq!(qfact(3).unwrap(), &qint(3) * &qint(2));
        assert!(qfact(-1).is_err());
    }

    #[test]
    fn qgamma_recip_values() {
        assert_eq!(qgamma_recip(1), QScalar::one());
        assert_eq!(qgamma_recip(-3), QScalar::zero());
        assert_eq!(qgamma_recip(0), QScalar::zero());
        assert_eq!(qgamma_recip(3), qint(2).inv().unwrap());
        for p in 0..=10 {
            let prod = &qgamma_recip(p + 1) * &qfact(p).unwrap();
            assert_eq!(prod, QScalar::one(), "1/Γ_q({})·[{}]! = 1", p + 1, p);
        }
    }

    #[test]
    fn qbeta_classical_limit() {
        // At q = 1 the reciprocal sum is 2^s/s!, so β^s → s!/2^s.
        for basis in [Basis::Hat, Basis::Tilde] {
            for s in 0..=8i64 {
                let b = qbeta(s, basis).unwrap();
                let got = b.limit_q1().unwrap();
                let mut fact = BigInt::one();
                for i in 1..=s {
                    fact *= i;
                }
                let want = BigRational::new(fact, BigInt::from(2).pow(s as u32));
                assert_eq!(got, want, "β^{s} ({basis}) at q=1");
            }
        }
    }

    #[test]
    fn qbeta_base_cases() {
        assert_eq!(qbeta(0, Basis::Hat).unwrap(), QScalar::one());
        assert_eq!(qbeta(0, Basis::Tilde).unwrap(), QScalar::one());
        assert_eq!(qbeta(1, Basis::Hat).unwrap(), qint(2).inv().unwrap());
    }

    #[test]
    fn limit_examples() {
        assert_eq!(
            qint(5).limit_q1().unwrap(),
            BigRational::from_integer(BigInt::from(5))
        );
        assert_eq!(
            QScalar::lambda().limit_q1().unwrap(),
            BigRational::zero()
        );
        // 1/λ has a pole at q = 1.
        assert_eq!(
            QScalar::lambda().inv().unwrap().limit_q1(),
            Err(ScalarError::PoleAtOne)
        );
        assert_eq!(
            qbeta(2, Basis::Hat).unwrap().limit_q1().unwrap(),
            BigRational::new(BigInt::one(), BigInt::from(2))
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(QScalar::lambda().conj(), -&QScalar::lambda());
        assert_eq!(qint(7).conj(), qint(7));
        let x = &qint(3) / &(&q() + &QScalar::from_int(3));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn canonical_idempotent() {
        let a = &(&qint(4) * &QScalar::lambda()) / &qint(6);
        let b = QScalar::canonical(a.num.clone(), a.den.clone());
        assert_eq!(a, b);
        assert_eq!(a.num, b.num);
        assert_eq!(a.den, b.den);
    }

    #[test]
    fn render() {
        let l2 = &QScalar::lambda() * &QScalar::lambda();
        assert_eq!(l2.to_string(), "q^2 - 2 + q^-2");
        assert_eq!(QScalar::zero().to_string(), "0");
        // 1/[2]_q: the denominator is shifted to lowest degree zero.
        let frac = &QScalar::one() / &qint(2);
        assert_eq!(frac.to_string(), "(q^1)/(q^2 + 1)");
    }

    #[test]
    fn distributivity_fuzz() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let rand_scalar = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut num = Laurent::zero();
            for _ in 0..3 {
                num = num.add(&Laurent::term(
                    BigInt::from(rng.gen_range(-4i64..=4)),
                    rng.gen_range(-3i64..=3),
                ));
            }
            let mut den = Laurent::zero();
            while den.is_zero() {
                for _ in 0..2 {
                    den = den.add(&Laurent::term(
                        BigInt::from(rng.gen_range(-4i64..=4)),
                        rng.gen_range(0i64..=2),
                    ));
                }
            }
            QScalar::canonical(num, den)
        };
        for _ in 0..200 {
            let a = rand_scalar(&mut rng);
            let b = rand_scalar(&mut rng);
            let c = rand_scalar(&mut rng);
            let lhs = &(&a + &b) * &c;
            let rhs = &(&a * &c) + &(&b * &c);
            assert_eq!(lhs, rhs);
        }
    }
}
