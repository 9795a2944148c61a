//! The commuting-variable representation space and the operator calculus
//! acting on it.
//!
//! A [`FieldState`] is a finite linear combination of basis monomials
//! `z^α z̄^β v^j x₋^n x₊^l v̄^m` whose coefficients are momentum
//! polynomials ([`NCPoly`]). The six exponents are plain nonnegative
//! integers: the operators treat the variables as commuting, which is
//! faithful as long as states are kept normal-ordered — the basis tag
//! records the word arrangement needed to pass back to noncommuting
//! variables.
//!
//! Operators are [`OpExpr`] trees built from the generators of the
//! q-difference calculus:
//!
//! * `T_κ` / `T_κ⁻¹` — multiplication by `q^{±e}` on a monomial with
//!   exponent `e` in the variable `κ` (so `T_κ = q^{N_κ}`);
//! * `M̂_κ` / `M̂_κ⁻¹` — raising/lowering of the exponent;
//! * `D̂_κ` — the q-derivative `(1/λ) M̂⁻¹_κ (T_κ − T⁻¹_κ)`, evaluated
//!   factor-first so a monomial with exponent `0` is annihilated before any
//!   negative exponent can form; on exponent `e ≥ 1` it gives
//!   `[e]_q ×` (exponent lowered by one);
//! * q-brackets `[c₀ + Σ c_κ N_κ]_q`, diagonal with eigenvalue
//!   `[c₀ + Σ c_κ e_κ]_q`.
//!
//! Products compose right-to-left: the rightmost factor acts first.
//! Operators in distinct variables commute (tested). Momentum coefficients
//! pass through untouched.

use num::BigRational;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

use crate::algebra::{AlgebraError, Kind, NCPoly};
use crate::scalar::{qint, QScalar, ScalarError};
use crate::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("exponent would become negative under a bare lowering shift")]
    NegativeExponent,
    #[error("coefficient must be a momentum polynomial with the state's tag")]
    CoefficientMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The six commuting variables: two helicity variables and the four
/// Minkowski coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Z,
    Zbar,
    V,
    Minus,
    Plus,
    Vbar,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::Z, Var::Zbar, Var::V, Var::Minus, Var::Plus, Var::Vbar];

    fn index(self) -> usize {
        match self {
            Var::Z => 0,
            Var::Zbar => 1,
            Var::V => 2,
            Var::Minus => 3,
            Var::Plus => 4,
            Var::Vbar => 5,
        }
    }
}

/// Exponent tuple `(α, β, j, n, l, m)` for `(z, z̄, v, x₋, x₊, v̄)`.
pub type Exps6 = [u32; 6];

/// Finite linear combination of basis monomials with momentum-polynomial
/// coefficients. Coefficient tags always match the state tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldState {
    pub tag: Basis,
    terms: BTreeMap<Exps6, NCPoly>,
}

impl FieldState {
    pub fn zero(tag: Basis) -> FieldState {
        FieldState {
            tag,
            terms: BTreeMap::new(),
        }
    }

    /// Single-term state. The coefficient must be a momentum polynomial in
    /// the same tag.
    pub fn monomial(tag: Basis, exps: Exps6, coeff: NCPoly) -> Result<FieldState, FieldError> {
        if coeff.kind != Kind::Momentum || coeff.tag != tag {
            return Err(FieldError::CoefficientMismatch);
        }
        let mut s = FieldState::zero(tag);
        s.add_term(exps, coeff);
        Ok(s)
    }

    /// Monomial with a scalar coefficient (a momentum polynomial of degree
    /// zero).
    pub fn scalar_monomial(tag: Basis, exps: Exps6, c: QScalar) -> FieldState {
        let mut s = FieldState::zero(tag);
        s.add_term(exps, NCPoly::scalar(Kind::Momentum, tag, c));
        s
    }

    pub fn unit(tag: Basis) -> FieldState {
        FieldState::scalar_monomial(tag, [0; 6], QScalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps6, &NCPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exps: Exps6, coeff: NCPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&coeff).expect("same kind/tag");
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &FieldState) -> FieldState {
        assert_eq!(self.tag, other.tag, "basis tags differ");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FieldState) -> FieldState {
        self.add(&other.scale(&QScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> FieldState {
        if c.is_zero() {
            return FieldState::zero(self.tag);
        }
        FieldState {
            tag: self.tag,
            terms: self.terms.iter().map(|(k, v)| (*k, v.scale(c))).collect(),
        }
    }

    /// Multiply every term by `z^dz z̄^dzb` and left-multiply every momentum
    /// coefficient by `mom`. This is how the solution generators attach
    /// momentum prefactors to plane-wave components.
    pub fn scale_mono(
        &self,
        dz: u32,
        dzb: u32,
        mom: &NCPoly,
    ) -> Result<FieldState, FieldError> {
        if mom.kind != Kind::Momentum || mom.tag != self.tag {
            return Err(FieldError::CoefficientMismatch);
        }
        let mut out = FieldState::zero(self.tag);
        for (k, c) in &self.terms {
            let mut k2 = *k;
            k2[0] += dz;
            k2[1] += dzb;
            out.add_term(k2, mom.mul(c)?);
        }
        Ok(out)
    }

    /// The conjugation ω on a state: coordinate words reverse (which
    /// leaves the per-generator exponents fixed), momentum coefficients
    /// conjugate, the helicity exponents swap (`z ↔ z̄`), and the basis
    /// tag flips.
    pub fn omega(&self) -> FieldState {
        let mut out = FieldState::zero(self.tag.flip());
        for (k, c) in &self.terms {
            let mut k2 = *k;
            k2.swap(0, 1);
            out.add_term(k2, c.omega());
        }
        out
    }

    /// Cone-reduce every momentum coefficient.
    pub fn cone_reduce(&self) -> Result<FieldState, FieldError> {
        let mut out = FieldState::zero(self.tag);
        for (k, c) in &self.terms {
            out.add_term(*k, c.cone_reduce()?);
        }
        Ok(out)
    }

    /// Classical specialization: every scalar coefficient replaced by its
    /// exact value at `q = 1` (kept as a constant scalar so downstream
    /// arithmetic stays uniform).
    pub fn limit_q1(&self) -> Result<FieldState, FieldError> {
        let mut out = FieldState::zero(self.tag);
        for (k, c) in &self.terms {
            let mut lc = NCPoly::zero(Kind::Momentum, self.tag);
            for (mk, q) in c.terms() {
                let r = q.limit_q1()?;
                lc = lc.add(&NCPoly::monomial(
                    Kind::Momentum,
                    self.tag,
                    *mk,
                    QScalar::from_bigrational(&r),
                ))?;
            }
            out.add_term(*k, lc);
        }
        Ok(out)
    }

    /// Numeric evaluation at `q = 1`: momenta in slot order
    /// `[k_v, k₋, k₊, k_v̄]`, coordinates `[v, x₋, x₊, v̄]`, plus values for
    /// `z` and `z̄`. Sound because the algebra is commutative at `q = 1`.
    pub fn eval_q1(
        &self,
        momenta: &[BigRational; 4],
        coords: &[BigRational; 4],
        z: &BigRational,
        zbar: &BigRational,
    ) -> Result<BigRational, FieldError> {
        let mut acc = BigRational::new(0.into(), 1.into());
        for (k, c) in &self.terms {
            let mut t = c.eval_q1(momenta)?;
            for _ in 0..k[0] {
                t *= z;
            }
            for _ in 0..k[1] {
                t *= zbar;
            }
            for (i, val) in coords.iter().enumerate() {
                for _ in 0..k[i + 2] {
                    t *= val;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Rendering of every term as
    /// `z^α zb^β | v^j x-^n x+^l vb^m | <momentum poly>`.
    pub fn render(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|(k, c)| {
                let mut s = String::new();
                write!(
                    s,
                    "z^{} zb^{} | v^{} x-^{} x+^{} vb^{} | {}",
                    k[0],
                    k[1],
                    k[2],
                    k[3],
                    k[4],
                    k[5],
                    c.render()
                )
                .unwrap();
                s
            })
            .collect()
    }
}

/// Composable symbolic operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpExpr {
    /// Exponent shift `M̂_κ^{±1}`; the bare inverse shift errors at
    /// exponent zero (the q-derivative never exposes it).
    Shift(Var, i8),
    /// Diagonal scaling `T_κ^{±1} = q^{±N_κ}`.
    Scaling(Var, i8),
    /// The q-derivative `D̂_κ`.
    Derivative(Var),
    /// `[c₀ + Σ c_κ N_κ]_q`.
    Bracket { c0: i64, coeffs: Vec<(Var, i64)> },
    Scalar(QScalar),
    Sum(Vec<OpExpr>),
    /// Rightmost factor acts first.
    Product(Vec<OpExpr>),
}

/// Sum of operator expressions.
pub fn op_sum(ops: Vec<OpExpr>) -> OpExpr {
    OpExpr::Sum(ops)
}

/// Product of operator expressions; the rightmost factor acts first.
pub fn op_product(ops: Vec<OpExpr>) -> OpExpr {
    OpExpr::Product(ops)
}

/// Scalar multiple of an operator.
pub fn op_scalar_mul(c: QScalar, op: OpExpr) -> OpExpr {
    OpExpr::Product(vec![OpExpr::Scalar(c), op])
}

impl OpExpr {
    /// Apply the operator to a state. Linear in the state; momentum
    /// coefficients are untouched apart from scalar multiplication.
    pub fn apply(&self, state: &FieldState) -> Result<FieldState, FieldError> {
        match self {
            OpExpr::Shift(var, dir) => {
                let mut out = FieldState::zero(state.tag);
                for (k, c) in &state.terms {
                    let mut k2 = *k;
                    let i = var.index();
                    if *dir >= 0 {
                        k2[i] += 1;
                    } else {
                        if k2[i] == 0 {
                            return Err(FieldError::NegativeExponent);
                        }
                        k2[i] -= 1;
                    }
                    out.add_term(k2, c.clone());
                }
                Ok(out)
            }
            OpExpr::Scaling(var, dir) => {
                let mut out = FieldState::zero(state.tag);
                for (k, c) in &state.terms {
                    let e = k[var.index()] as i64;
                    let f = QScalar::q_pow(if *dir >= 0 { e } else { -e });
                    out.add_term(*k, c.scale(&f));
                }
                Ok(out)
            }
            OpExpr::Derivative(var) => {
                let mut out = FieldState::zero(state.tag);
                for (k, c) in &state.terms {
                    let i = var.index();
                    let e = k[i];
                    if e == 0 {
                        continue;
                    }
                    let mut k2 = *k;
                    k2[i] -= 1;
                    out.add_term(k2, c.scale(&qint(e as i64)));
                }
                Ok(out)
            }
            OpExpr::Bracket { c0, coeffs } => {
                let mut out = FieldState::zero(state.tag);
                for (k, c) in &state.terms {
                    let mut eig = *c0;
                    for (v, cv) in coeffs {
                        eig += cv * k[v.index()] as i64;
                    }
                    out.add_term(*k, c.scale(&qint(eig)));
                }
                Ok(out)
            }
            OpExpr::Scalar(s) => Ok(state.scale(s)),
            OpExpr::Sum(ops) => {
                let mut out = FieldState::zero(state.tag);
                for op in ops {
                    out = out.add(&op.apply(state)?);
                }
                Ok(out)
            }
            OpExpr::Product(ops) => {
                let mut cur = state.clone();
                for op in ops.iter().rev() {
                    cur = op.apply(&cur)?;
                }
                Ok(cur)
            }
        }
    }
}

/// Shorthand constructors used by the equation builders.
pub mod ops {
    use super::{OpExpr, Var};
    use crate::scalar::QScalar;

    /// `M̂_κ`.
    pub fn m(v: Var) -> OpExpr {
        OpExpr::Shift(v, 1)
    }

    /// `M̂_κ⁻¹`.
    pub fn minv(v: Var) -> OpExpr {
        OpExpr::Shift(v, -1)
    }

    /// `T_κ`.
    pub fn t(v: Var) -> OpExpr {
        OpExpr::Scaling(v, 1)
    }

    /// `T_κ⁻¹`.
    pub fn tinv(v: Var) -> OpExpr {
        OpExpr::Scaling(v, -1)
    }

    /// `D̂_κ`.
    pub fn d(v: Var) -> OpExpr {
        OpExpr::Derivative(v)
    }

    /// `[c₀ + Σ cᵥ Nᵥ]_q`.
    pub fn bracket(c0: i64, coeffs: &[(Var, i64)]) -> OpExpr {
        OpExpr::Bracket {
            c0,
            coeffs: coeffs.to_vec(),
        }
    }

    /// Constant scalar factor.
    pub fn sc(c: QScalar) -> OpExpr {
        OpExpr::Scalar(c)
    }

    /// Integer scalar factor.
    pub fn int(n: i64) -> OpExpr {
        OpExpr::Scalar(QScalar::from_int(n))
    }

    /// `q^e` as a scalar factor.
    pub fn qp(e: i64) -> OpExpr {
        OpExpr::Scalar(QScalar::q_pow(e))
    }
}
