//! q-plane-wave components and the solution families of the q-Maxwell
//! equations built from them.
//!
//! The deformed plane wave is a formal series `Σ_s ĥ_s/[s]_q!`; nothing is
//! ever summed here — the equations are solved component-wise, so the
//! generators hand out single components `ĥ_s` (hat) and `h̃_s` (tilde)
//! together with the weights `1/[s]_q!`. Each component is a finite sum
//! over a lattice `(a, b, n)` whose bounds come from the vanishing of
//! `1/Γ_q` at nonpositive integers rather than from hard-coded ranges:
//! every term carries the reciprocal Γ factors and drops out when one of
//! them is zero.
//!
//! On top of the components sit the homogeneous solutions (three families
//! of independent constants per sign and basis), the inhomogeneous
//! solutions with their currents, and the nine current-contraction
//! identities (one master plus eight splittings).

use std::collections::BTreeMap;

use crate::algebra::{AlgebraError, Gen, Kind, NCPoly};
use crate::fields::{FieldError, FieldState};
use crate::scalar::{qbeta, qd, qfact, qgamma_recip, QScalar, ScalarError};
use crate::Basis;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WaveError {
    #[error("current components pair with the plane component at s−1; s must be ≥ 1")]
    CurrentAtZero,
    #[error("negative index: {0}")]
    NegativeIndex(i64),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Integer-coefficient bivariate polynomial `P(a, b)`, only ever evaluated
/// at lattice points. The plane-wave deformations are parametrized by one
/// such polynomial per component.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExpPoly {
    coeffs: BTreeMap<(u32, u32), i64>,
}

impl ExpPoly {
    pub fn zero() -> ExpPoly {
        ExpPoly::default()
    }

    pub fn new(coeffs: &[((u32, u32), i64)]) -> ExpPoly {
        ExpPoly {
            coeffs: coeffs.iter().copied().filter(|(_, c)| *c != 0).collect(),
        }
    }

    /// Degree ≤ 2 polynomial from the CLI coefficient list
    /// `c00,c10,c01,c20,c11,c02`.
    pub fn from_list(c: &[i64; 6]) -> ExpPoly {
        ExpPoly::new(&[
            ((0, 0), c[0]),
            ((1, 0), c[1]),
            ((0, 1), c[2]),
            ((2, 0), c[3]),
            ((1, 1), c[4]),
            ((0, 2), c[5]),
        ])
    }

    pub fn eval(&self, a: i64, b: i64) -> i64 {
        let mut acc = 0i64;
        for ((i, j), c) in &self.coeffs {
            acc += c * a.pow(*i) * b.pow(*j);
        }
        acc
    }

    /// The polynomial `−P`, the image of `P` under `q ↦ q⁻¹`.
    pub fn negated(&self) -> ExpPoly {
        ExpPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

fn mom_mono(tag: Basis, kv: u32, km: u32, kp: u32, kvb: u32, c: QScalar) -> NCPoly {
    NCPoly::monomial(Kind::Momentum, tag, [kv, km, kp, kvb], c)
}

/// The plane-wave component `ĥ_s` (hat) or `h̃_s` (tilde) with exponent
/// polynomial `poly`; `f_s` is the hat component with `P = 0`.
///
/// Every term has momentum degree `s` and coordinate degree `s`. The sum
/// ranges over all `(a, b, n)` in the box `[0, s]³`; out-of-range terms are
/// killed by the `1/Γ_q` factors.
pub fn plane_component(s: i64, basis: Basis, poly: &ExpPoly) -> Result<FieldState, WaveError> {
    if s < 0 {
        return Err(WaveError::NegativeIndex(s));
    }
    let beta = qbeta(s, basis)?;
    let mut out = FieldState::zero(basis);
    for a in 0..=s {
        for b in 0..=s {
            for n in 0..=s.min(a).min(b) {
                let g1 = qgamma_recip(a - n + 1);
                let g2 = qgamma_recip(b - n + 1);
                let g3 = qgamma_recip(s - a - b + n + 1);
                if g1.is_zero() || g2.is_zero() || g3.is_zero() {
                    continue;
                }
                let e = match basis {
                    Basis::Hat => n * (s - 2 * a - 2 * b + 2 * n) + a * (s - a - 1) + b * (-s + a + b + 1),
                    Basis::Tilde => {
                        n * (2 * a + 2 * b - 2 * n - s) + a * (a - s - 1) + b * (s - a - b + 1)
                    }
                };
                let sign = if (s - a - b) % 2 == 0 { 1 } else { -1 };
                let mut c = &QScalar::from_int(sign) * &QScalar::q_pow(e + poly.eval(a, b));
                c = &c * &g1;
                c = &c * &g2;
                c = &c * &g3;
                c = &c * &qfact(n)?.inv()?;
                c = &c * &beta;
                let kv = (s - a - b + n) as u32;
                let km = (b - n) as u32;
                let kp = (a - n) as u32;
                let kvb = n as u32;
                // Coordinate exponents: v^n x₋^{a−n} x₊^{b−n} v̄^{s−a−b+n}
                // in the hat word; the tilde word is the same multiset
                // reversed, so the semantic exponents agree.
                let coord = [n as u32, (a - n) as u32, (b - n) as u32, (s - a - b + n) as u32];
                let mom = mom_mono(basis, kv, km, kp, kvb, c);
                out = out.add(&FieldState::monomial(
                    basis,
                    [0, 0, coord[0], coord[1], coord[2], coord[3]],
                    mom,
                )?);
            }
        }
    }
    Ok(out)
}

/// Components of the formal plane-wave series up to `s_max`, with weights
/// `1/[s]_q!`. No summation is performed.
pub fn assemble_exp(
    s_max: i64,
    basis: Basis,
    poly: impl Fn(i64) -> ExpPoly,
) -> Result<Vec<(i64, QScalar, FieldState)>, WaveError> {
    let mut out = Vec::new();
    for s in 0..=s_max {
        let w = qfact(s)?.inv()?;
        out.push((s, w, plane_component(s, basis, &poly(s))?));
    }
    Ok(out)
}

/// Sparse table of the independent constants `p^{msa}_{i(j)}` or
/// `r^{msa}_{i(j)}` of a homogeneous solution: one entry per
/// `(family, i, j)` with family ∈ {1, 2, 3} (family 2 ignores `j`).
#[derive(Debug, Clone, Default)]
pub struct SolutionConstants {
    entries: BTreeMap<(u8, u32, u32), QScalar>,
}

impl SolutionConstants {
    pub fn one_hot(family: u8, i: u32, j: u32) -> SolutionConstants {
        let mut entries = BTreeMap::new();
        entries.insert((family, i, j), QScalar::one());
        SolutionConstants { entries }
    }

    pub fn get(&self, family: u8, i: u32, j: u32) -> QScalar {
        self.entries
            .get(&(family, i, j))
            .cloned()
            .unwrap_or_else(QScalar::zero)
    }

    /// Every index triple legal on the `(m)` grid: families 1 and 3 carry
    /// `i ≤ m, j ≤ m − i`, family 2 only `i ≤ m`.
    pub fn index_grid(m: u32) -> Vec<(u8, u32, u32)> {
        let mut out = Vec::new();
        for i in 0..=m {
            for j in 0..=(m - i) {
                out.push((1, i, j));
                out.push((3, i, j));
            }
            out.push((2, i, 0));
        }
        out
    }
}

/// Momentum polynomial with attached powers of `z` and `z̄`; the shape the
/// printed solution coefficients take before they multiply a plane
/// component.
#[derive(Debug, Clone)]
pub struct MomZPoly {
    tag: Basis,
    terms: BTreeMap<(u32, u32), NCPoly>,
}

impl MomZPoly {
    pub fn zero(tag: Basis) -> MomZPoly {
        MomZPoly {
            tag,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_mom(p: NCPoly) -> MomZPoly {
        let tag = p.tag;
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert((0, 0), p);
        }
        MomZPoly { tag, terms }
    }

    /// `z^dz z̄^dzb ·` a momentum monomial.
    pub fn mono(tag: Basis, dz: u32, dzb: u32, p: NCPoly) -> MomZPoly {
        let mut out = MomZPoly::zero(tag);
        out.add_in(dz, dzb, p);
        out
    }

    fn add_in(&mut self, dz: u32, dzb: u32, p: NCPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry((dz, dzb)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&p).expect("same kind/tag");
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MomZPoly) -> MomZPoly {
        let mut out = self.clone();
        for ((dz, dzb), p) in &other.terms {
            out.add_in(*dz, *dzb, p.clone());
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> MomZPoly {
        MomZPoly {
            tag: self.tag,
            terms: self
                .terms
                .iter()
                .map(|(k, p)| (*k, p.scale(c)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Noncommutative product in the printed left-to-right order; `z`/`z̄`
    /// powers just add.
    pub fn mul(&self, other: &MomZPoly) -> Result<MomZPoly, WaveError> {
        let mut out = MomZPoly::zero(self.tag);
        for ((za, zba), pa) in &self.terms {
            for ((zb, zbb), pb) in &other.terms {
                out.add_in(za + zb, zba + zbb, pa.mul(pb)?);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiply onto a plane component: left-multiplies every momentum
    /// coefficient and adds the z-powers.
    pub fn apply_to(&self, state: &FieldState) -> Result<FieldState, WaveError> {
        let mut out = FieldState::zero(self.tag);
        for ((dz, dzb), p) in &self.terms {
            out = out.add(&state.scale_mono(*dz, *dzb, p)?);
        }
        Ok(out)
    }

    pub fn equal(&self, other: &MomZPoly) -> bool {
        self.terms == other.terms
    }
}

fn kgen(tag: Basis, g: Gen) -> NCPoly {
    NCPoly::gen(Kind::Momentum, tag, g)
}

fn kpow(tag: Basis, g: Gen, e: u32) -> NCPoly {
    let mut key = [0u32; 4];
    match g {
        Gen::V => key[0] = e,
        Gen::Minus => key[1] = e,
        Gen::Plus => key[2] = e,
        Gen::Vbar => key[3] = e,
    }
    NCPoly::monomial(Kind::Momentum, tag, key, QScalar::one())
}

/// Linear factor `k_g − q^e · w^p · k_h` with `w ∈ {z, z̄}` chosen by
/// `zbar`, as a [`MomZPoly`].
fn lin_factor(tag: Basis, g: Gen, e: i64, zbar: bool, h: Gen) -> MomZPoly {
    let lead = MomZPoly::from_mom(kgen(tag, g));
    let (dz, dzb) = if zbar { (0, 1) } else { (1, 0) };
    let trail = MomZPoly::mono(tag, dz, dzb, kgen(tag, h).scale(&-&QScalar::q_pow(e)));
    lead.add(&trail)
}

/// The homogeneous-solution momentum coefficient `F^{h±}_{ms}(k)`,
/// transcribed family by family.
pub fn homogeneous_coefficient(
    sign: crate::equations::Sign,
    basis: Basis,
    m: u32,
    s: i64,
    constants: &SolutionConstants,
) -> Result<MomZPoly, WaveError> {
    use crate::equations::Sign;
    use Gen::{Minus as Km, Plus as Kp, V as Kv, Vbar as Kvb};
    let mut out = MomZPoly::zero(basis);
    for i in 0..=m {
        for j in 0..=(m - i) {
            let c1 = constants.get(1, i, j);
            let c3 = constants.get(3, i, j);
            match (sign, basis) {
                (Sign::Plus, Basis::Hat) => {
                    if !c1.is_zero() {
                        // p̂^{ms1}_{ij} kv^i k₋^{m−i−j} kv̄^j (kv − q^{s+6}zk₋)(kv − q^{s+3}zk₋)
                        let prefix = kpow(basis, Kv, i)
                            .mul(&kpow(basis, Km, m - i - j))?
                            .mul(&kpow(basis, Kvb, j))?;
                        let f = MomZPoly::from_mom(prefix)
                            .mul(&lin_factor(basis, Kv, s + 6, false, Km))?
                            .mul(&lin_factor(basis, Kv, s + 3, false, Km))?;
                        out = out.add(&f.scale(&c1));
                    }
                    if !c3.is_zero() {
                        // p̂^{ms3}_{ij} kv^i k₊^{m−i−j} kv̄^j (k₊ − q^{s+6}zkv̄)(k₊ − q^{s+3}zkv̄)
                        let prefix = kpow(basis, Kv, i)
                            .mul(&kpow(basis, Kp, m - i - j))?
                            .mul(&kpow(basis, Kvb, j))?;
                        let f = MomZPoly::from_mom(prefix)
                            .mul(&lin_factor(basis, Kp, s + 6, false, Kvb))?
                            .mul(&lin_factor(basis, Kp, s + 3, false, Kvb))?;
                        out = out.add(&f.scale(&c3));
                    }
                }
                (Sign::Minus, Basis::Hat) => {
                    if !c1.is_zero() {
                        // r̂^{ms1}_{ij} kv^i k₋^{m−i−j} kv̄^j (kv̄ − q⁻¹z̄k₋)(kv̄ − z̄k₋)
                        let prefix = kpow(basis, Kv, i)
                            .mul(&kpow(basis, Km, m - i - j))?
                            .mul(&kpow(basis, Kvb, j))?;
                        let f = MomZPoly::from_mom(prefix)
                            .mul(&lin_factor(basis, Kvb, -1, true, Km))?
                            .mul(&lin_factor(basis, Kvb, 0, true, Km))?;
                        out = out.add(&f.scale(&c1));
                    }
                    if !c3.is_zero() {
                        // r̂^{ms3}_{ij} kv^i k₊^{m−i−j} kv̄^j (k₊ − q⁻¹z̄kv)(k₊ − z̄kv)
                        let prefix = kpow(basis, Kv, i)
                            .mul(&kpow(basis, Kp, m - i - j))?
                            .mul(&kpow(basis, Kvb, j))?;
                        let f = MomZPoly::from_mom(prefix)
                            .mul(&lin_factor(basis, Kp, -1, true, Kv))?
                            .mul(&lin_factor(basis, Kp, 0, true, Kv))?;
                        out = out.add(&f.scale(&c3));
                    }
                }
                (Sign::Plus, Basis::Tilde) => {
                    if !c1.is_zero() {
                        // p̃^{ms1}_{ij} kv̄^i k₋^{m−i−j} kv^j (kv − zk₋)(kv − qzk₋)
                        let prefix = kpow(basis, Kvb, i)
                            .mul(&kpow(basis, Km, m - i - j))?
                            .mul(&kpow(basis, Kv, j))?;
                        let f = MomZPoly::from_mom(prefix)
                            .mul(&lin_factor(basis, Kv, 0, false, Km))?
                            .mul(&lin_factor(basis, Kv, 1, false, Km))?;
                        out = out.add(&f.scale(&c1));
                    }
                    if !c3.is_zero() {
                        // p̃^{ms3}_{ij} kv̄^i k₊^{m−i−j} kv^j (k₊ − zkv̄)(k₊ − qzkv̄)
                        let prefix = kpow(basis, Kvb, i)
                            .mul(&kpow(basis, Kp, m - i - j))?
                            .mul(&kpow(basis, Kv, j))?;
                        let f = MomZPoly::from_mom(prefix)
                            .mul(&lin_factor(basis, Kp, 0, false, Kvb))?
                            .mul(&lin_factor(basis, Kp, 1, false, Kvb))?;
                        out = out.add(&f.scale(&c3));
                    }
                }
                (Sign::Minus, Basis::Tilde) => {
                    // The z̄-factor exponents are s+3 and s+4: the printed
                    // s+1, s+2 leave a q²-proportional residual under the
                    // minus intertwiner for every s ≥ 1, and s+3, s+4 is
                    // the unique shift annihilated on the cone.
                    if !c1.is_zero() {
                        // r̃^{ms1}_{ij} kv̄^i k₋^{m−i−j} kv^j (kv̄ − q^{s+3}z̄k₋)(kv̄ − q^{s+4}z̄k₋)
                        let prefix = kpow(basis, Kvb, i)
                            .mul(&kpow(basis, Km, m - i - j))?
                            .mul(&kpow(basis, Kv, j))?;
                        let f = MomZPoly::from_mom(prefix)
                            .mul(&lin_factor(basis, Kvb, s + 3, true, Km))?
                            .mul(&lin_factor(basis, Kvb, s + 4, true, Km))?;
                        out = out.add(&f.scale(&c1));
                    }
                    if !c3.is_zero() {
                        // r̃^{ms3}_{ij} kv^i k₊^{m−i−j} kv̄^j (k₊ − q^{s+3}z̄kv)(k₊ − q^{s+4}z̄kv)
                        let prefix = kpow(basis, Kv, i)
                            .mul(&kpow(basis, Kp, m - i - j))?
                            .mul(&kpow(basis, Kvb, j))?;
                        let f = MomZPoly::from_mom(prefix)
                            .mul(&lin_factor(basis, Kp, s + 3, true, Kv))?
                            .mul(&lin_factor(basis, Kp, s + 4, true, Kv))?;
                        out = out.add(&f.scale(&c3));
                    }
                }
            }
        }
        let c2 = constants.get(2, i, 0);
        if !c2.is_zero() {
            use crate::equations::Sign;
            let f = match (sign, basis) {
                (Sign::Plus, Basis::Hat) => {
                    // p̂^{ms2}_i kv^i kv̄^{m−i} (kv − q^{s+6}zk₋)(k₊ − q^{s+3}zkv̄)
                    let prefix = kpow(basis, Kv, i).mul(&kpow(basis, Kvb, m - i))?;
                    MomZPoly::from_mom(prefix)
                        .mul(&lin_factor(basis, Kv, s + 6, false, Km))?
                        .mul(&lin_factor(basis, Kp, s + 3, false, Kvb))?
                }
                (Sign::Minus, Basis::Hat) => {
                    // r̂^{ms2}_i kv^i kv̄^{m−i} (k₊ − q⁻¹z̄kv)(kv̄ − z̄k₋)
                    let prefix = kpow(basis, Kv, i).mul(&kpow(basis, Kvb, m - i))?;
                    MomZPoly::from_mom(prefix)
                        .mul(&lin_factor(basis, Kp, -1, true, Kv))?
                        .mul(&lin_factor(basis, Kvb, 0, true, Km))?
                }
                (Sign::Plus, Basis::Tilde) => {
                    // p̃^{ms2}_i kv̄^i kv^{m−i} (k₊ − zkv̄)(kv − qzk₋)
                    let prefix = kpow(basis, Kvb, i).mul(&kpow(basis, Kv, m - i))?;
                    MomZPoly::from_mom(prefix)
                        .mul(&lin_factor(basis, Kp, 0, false, Kvb))?
                        .mul(&lin_factor(basis, Kv, 1, false, Km))?
                }
                (Sign::Minus, Basis::Tilde) => {
                    // r̃^{ms2}_i kv^i kv̄^{m−i} (kv̄ − q^{s+3}z̄k₋)(k₊ − q^{s+4}z̄kv)
                    let prefix = kpow(basis, Kv, i).mul(&kpow(basis, Kvb, m - i))?;
                    MomZPoly::from_mom(prefix)
                        .mul(&lin_factor(basis, Kvb, s + 3, true, Km))?
                        .mul(&lin_factor(basis, Kp, s + 4, true, Kv))?
                }
            };
            out = out.add(&f.scale(&c2));
        }
    }
    Ok(out)
}

/// Homogeneous solution component: `F^{h±}_{ms}(k)` times the matching
/// plane component (`f_s` for hat, `h̃_s` with `Q = 0` for tilde).
pub fn maxwell_homogeneous(
    sign: crate::equations::Sign,
    basis: Basis,
    m: u32,
    s: i64,
    constants: &SolutionConstants,
) -> Result<FieldState, WaveError> {
    let coeff = homogeneous_coefficient(sign, basis, m, s, constants)?;
    let plane = plane_component(s, basis, &ExpPoly::zero())?;
    coeff.apply_to(&plane)
}

/// The `γ` table of an inhomogeneous solution, one scalar per momentum
/// direction.
#[derive(Debug, Clone)]
pub struct Gammas {
    pub v: QScalar,
    pub minus: QScalar,
    pub plus: QScalar,
    pub vbar: QScalar,
}

impl Gammas {
    pub fn zero() -> Gammas {
        Gammas {
            v: QScalar::zero(),
            minus: QScalar::zero(),
            plus: QScalar::zero(),
            vbar: QScalar::zero(),
        }
    }

    pub fn one_hot(g: Gen) -> Gammas {
        let mut out = Gammas::zero();
        *out.slot_mut(g) = QScalar::one();
        out
    }

    /// All four entries equal to `c`.
    pub fn uniform(c: &QScalar) -> Gammas {
        Gammas {
            v: c.clone(),
            minus: c.clone(),
            plus: c.clone(),
            vbar: c.clone(),
        }
    }

    fn slot(&self, g: Gen) -> &QScalar {
        match g {
            Gen::V => &self.v,
            Gen::Minus => &self.minus,
            Gen::Plus => &self.plus,
            Gen::Vbar => &self.vbar,
        }
    }

    fn slot_mut(&mut self, g: Gen) -> &mut QScalar {
        match g {
            Gen::V => &mut self.v,
            Gen::Minus => &mut self.minus,
            Gen::Plus => &mut self.plus,
            Gen::Vbar => &mut self.vbar,
        }
    }
}

/// `K^s_m(k) = γ^s_v kv^{m+1} + γ^s₋ k₋^{m+1} + γ^s₊ k₊^{m+1} + γ^s_v̄ kv̄^{m+1}`.
pub fn kblock(basis: Basis, m: u32, gammas: &Gammas) -> NCPoly {
    let mut out = NCPoly::zero(Kind::Momentum, basis);
    for g in Gen::ALL {
        let c = gammas.slot(g);
        if !c.is_zero() {
            out = out
                .add(&kpow(basis, g, m + 1).scale(c))
                .expect("same kind/tag");
        }
    }
    out
}

/// The four current coefficients `J^{ms}_κ(k)` (hat) or their tilde
/// counterparts, in slot order `[v, ₋, ₊, v̄]` of the subscript κ.
pub fn current_coefficients(
    basis: Basis,
    m: u32,
    s: i64,
    gammas: &Gammas,
) -> Result<[NCPoly; 4], WaveError> {
    let k = kblock(basis, m, gammas);
    let (jp, jm, jv, jvb) = match basis {
        Basis::Hat => (
            // Ĵ₊ = −K̂ k₋ ; Ĵ₋ = −q^{−s−2} K̂ k₊ ; Ĵ_v = K̂ kv̄ ; Ĵ_v̄ = q^{−s−2} K̂ kv
            k.mul(&kgen(basis, Gen::Minus))?.scale(&QScalar::from_int(-1)),
            k.mul(&kgen(basis, Gen::Plus))?
                .scale(&-&QScalar::q_pow(-s - 2)),
            k.mul(&kgen(basis, Gen::Vbar))?,
            k.mul(&kgen(basis, Gen::V))?.scale(&QScalar::q_pow(-s - 2)),
        ),
        Basis::Tilde => (
            // J̃₊ = −q^{s+1} K̃ k₋ ; J̃₋ = −q⁻¹ K̃ k₊ ; J̃_v = K̃ kv̄ ; J̃_v̄ = q^s K̃ kv
            k.mul(&kgen(basis, Gen::Minus))?
                .scale(&-&QScalar::q_pow(s + 1)),
            k.mul(&kgen(basis, Gen::Plus))?.scale(&-&QScalar::q_pow(-1)),
            k.mul(&kgen(basis, Gen::Vbar))?,
            k.mul(&kgen(basis, Gen::V))?.scale(&QScalar::q_pow(s)),
        ),
    };
    Ok([jv, jm, jp, jvb])
}

/// Normalizer of the inhomogeneous field coefficients: `β^{s−1}/β^s` for
/// `s ≥ 1`.
///
/// The source text defines its `d_s` as `β^s/β^{s+1}`, but with that value
/// the intertwiner maps the field component to `(d_s/d_{s−1})` times the
/// current — already at `q = 1`, where the factor is `s/(s+1)` (checked by
/// hand at `s = 1`). The shifted ratio is the unique normalizer making the
/// printed currents come out exactly. At `s = 0` no current exists and the
/// operator annihilates the component whatever the constant; `β⁰/β¹` keeps
/// the expression total.
pub fn field_normalizer(s: i64, basis: Basis) -> Result<QScalar, ScalarError> {
    qd((s - 1).max(0), basis)
}

/// The inhomogeneous-solution momentum coefficient `F^±_{ms}(k)`.
pub fn inhomogeneous_coefficient(
    sign: crate::equations::Sign,
    basis: Basis,
    m: u32,
    s: i64,
    gammas: &Gammas,
) -> Result<MomZPoly, WaveError> {
    use crate::equations::Sign;
    use Gen::{Minus as Km, Plus as Kp, V as Kv, Vbar as Kvb};
    let ds = field_normalizer(s, basis)?;
    let out = match (sign, basis) {
        (Sign::Plus, Basis::Hat) => {
            // 2 d_s q^{−s} ( (q^{−s−5}γ₋k₋^m + zγ_v kv^m)(kv − q^{s+3}zk₋)
            //              + (q^{−s−5}γ_v̄ kv̄^m + zγ₊ k₊^m)(k₊ − q^{s+3}zkv̄) )
            let pre = &(&QScalar::from_int(2) * &ds) * &QScalar::q_pow(-s);
            let a = MomZPoly::from_mom(kpow(basis, Km, m).scale(&(&gammas.minus * &QScalar::q_pow(-s - 5))))
                .add(&MomZPoly::mono(basis, 1, 0, kpow(basis, Kv, m).scale(&gammas.v)))
                .mul(&lin_factor(basis, Kv, s + 3, false, Km))?;
            let b = MomZPoly::from_mom(kpow(basis, Kvb, m).scale(&(&gammas.vbar * &QScalar::q_pow(-s - 5))))
                .add(&MomZPoly::mono(basis, 1, 0, kpow(basis, Kp, m).scale(&gammas.plus)))
                .mul(&lin_factor(basis, Kp, s + 3, false, Kvb))?;
            a.add(&b).scale(&pre)
        }
        (Sign::Minus, Basis::Hat) => {
            // 2 d_s q^{−2s−2} ( (γ₋k₋^m + q^{−2}z̄γ_v̄ kv̄^m)(kv̄ − z̄k₋)
            //                 + (γ_v kv^m + q^{−2}z̄γ₊ k₊^m)(k₊ − z̄kv) )
            let pre = &(&QScalar::from_int(2) * &ds) * &QScalar::q_pow(-2 * s - 2);
            let a = MomZPoly::from_mom(kpow(basis, Km, m).scale(&gammas.minus))
                .add(&MomZPoly::mono(
                    basis,
                    0,
                    1,
                    kpow(basis, Kvb, m).scale(&(&gammas.vbar * &QScalar::q_pow(-2))),
                ))
                .mul(&lin_factor(basis, Kvb, 0, true, Km))?;
            let b = MomZPoly::from_mom(kpow(basis, Kv, m).scale(&gammas.v))
                .add(&MomZPoly::mono(
                    basis,
                    0,
                    1,
                    kpow(basis, Kp, m).scale(&(&gammas.plus * &QScalar::q_pow(-2))),
                ))
                .mul(&lin_factor(basis, Kp, 0, true, Kv))?;
            a.add(&b).scale(&pre)
        }
        (Sign::Plus, Basis::Tilde) => {
            // 2 d̃_s q^{s−2} ( (γ₋k₋^m + q⁻¹zγ_v kv^m)(kv − qzk₋)
            //               + (γ_v̄ kv̄^m + q⁻¹zγ₊ k₊^m)(k₊ − qzkv̄) )
            let pre = &(&QScalar::from_int(2) * &ds) * &QScalar::q_pow(s - 2);
            let a = MomZPoly::from_mom(kpow(basis, Km, m).scale(&gammas.minus))
                .add(&MomZPoly::mono(
                    basis,
                    1,
                    0,
                    kpow(basis, Kv, m).scale(&(&gammas.v * &QScalar::q_pow(-1))),
                ))
                .mul(&lin_factor(basis, Kv, 1, false, Km))?;
            let b = MomZPoly::from_mom(kpow(basis, Kvb, m).scale(&gammas.vbar))
                .add(&MomZPoly::mono(
                    basis,
                    1,
                    0,
                    kpow(basis, Kp, m).scale(&(&gammas.plus * &QScalar::q_pow(-1))),
                ))
                .mul(&lin_factor(basis, Kp, 1, false, Kvb))?;
            a.add(&b).scale(&pre)
        }
        (Sign::Minus, Basis::Tilde) => {
            // 2 d̃_s ( (q^{−s−3}γ₋k₋^m + qz̄γ_v̄ kv̄^m)(kv̄ − q^{s+2}z̄k₋)
            //        + (q^{−s−3}γ_v kv^m + qz̄γ₊ k₊^m)(k₊ − q^{s+2}z̄kv) )
            let pre = &QScalar::from_int(2) * &ds;
            let a = MomZPoly::from_mom(kpow(basis, Km, m).scale(&(&gammas.minus * &QScalar::q_pow(-s - 3))))
                .add(&MomZPoly::mono(
                    basis,
                    0,
                    1,
                    kpow(basis, Kvb, m).scale(&(&gammas.vbar * &QScalar::q_pow(1))),
                ))
                .mul(&lin_factor(basis, Kvb, s + 2, true, Km))?;
            let b = MomZPoly::from_mom(kpow(basis, Kv, m).scale(&(&gammas.v * &QScalar::q_pow(-s - 3))))
                .add(&MomZPoly::mono(
                    basis,
                    0,
                    1,
                    kpow(basis, Kp, m).scale(&(&gammas.plus * &QScalar::q_pow(1))),
                ))
                .mul(&lin_factor(basis, Kp, s + 2, true, Kv))?;
            a.add(&b).scale(&pre)
        }
    };
    Ok(out)
}

/// Inhomogeneous solution: the field component (paired with the plane
/// component at `s`) and the current component (paired with `s − 1`).
///
/// The defining identity is `_qI^±₀ · field = current` on the momentum
/// cone, per component.
pub fn maxwell_inhomogeneous(
    sign: crate::equations::Sign,
    basis: Basis,
    m: u32,
    s: i64,
    gammas: &Gammas,
) -> Result<(FieldState, FieldState), WaveError> {
    if s < 1 {
        return Err(WaveError::CurrentAtZero);
    }
    let field = inhomogeneous_coefficient(sign, basis, m, s, gammas)?
        .apply_to(&plane_component(s, basis, &ExpPoly::zero())?)?;
    let current = current_state(basis, m, s, gammas)?;
    Ok((field, current))
}

/// The assembled current state
/// `z̄z J₊ + z J_v + z̄ J_v̄ + J₋` times the plane component at `s − 1`.
pub fn current_state(
    basis: Basis,
    m: u32,
    s: i64,
    gammas: &Gammas,
) -> Result<FieldState, WaveError> {
    if s < 1 {
        return Err(WaveError::CurrentAtZero);
    }
    let [jv, jm, jp, jvb] = current_coefficients(basis, m, s, gammas)?;
    let plane = plane_component(s - 1, basis, &ExpPoly::zero())?;
    let mut out = MomZPoly::mono(basis, 1, 1, jp);
    out = out.add(&MomZPoly::mono(basis, 1, 0, jv));
    out = out.add(&MomZPoly::mono(basis, 0, 1, jvb));
    out = out.add(&MomZPoly::from_mom(jm));
    out.apply_to(&plane)
}

/// The master current contraction plus the eight splittings, cone-reduced.
/// Returns the nine residuals; all must be zero.
///
/// Hat master: `q J₊k₊ + J_v k_v + q^{s+2} J_v̄ k_v̄ + q^{s+1} J₋ k₋`;
/// tilde master: `J₊k₊ + q^s J_v k_v + J_v̄ k_v̄ + q^s J₋ k₋`. The
/// splittings pair the κ-components two at a time, four "diagonal" and four
/// "crossed".
pub fn current_identity_suite(
    basis: Basis,
    m: u32,
    s: i64,
    gammas: &Gammas,
) -> Result<Vec<(String, NCPoly)>, WaveError> {
    if s < 1 {
        return Err(WaveError::CurrentAtZero);
    }
    let [jv, jm, jp, jvb] = current_coefficients(basis, m, s, gammas)?;
    let kv = kgen(basis, Gen::V);
    let km = kgen(basis, Gen::Minus);
    let kp = kgen(basis, Gen::Plus);
    let kvb = kgen(basis, Gen::Vbar);
    let q = |e: i64| QScalar::q_pow(e);

    // Each entry: name, Σ scale·J_κ·k_κ'.
    let combos: Vec<(&str, Vec<(QScalar, &NCPoly, &NCPoly)>)> = match basis {
        Basis::Hat => vec![
            (
                "master",
                vec![
                    (q(1), &jp, &kp),
                    (q(0), &jv, &kv),
                    (q(s + 2), &jvb, &kvb),
                    (q(s + 1), &jm, &km),
                ],
            ),
            ("split1", vec![(q(1), &jp, &kp), (q(0), &jv, &kv)]),
            ("split2", vec![(q(1), &jvb, &kvb), (q(0), &jm, &km)]),
            ("split3", vec![(q(0), &jp, &kp), (q(s + 1), &jvb, &kvb)]),
            ("split4", vec![(q(0), &jv, &kv), (q(s + 1), &jm, &km)]),
            ("cross1", vec![(q(1), &jp, &kvb), (q(0), &jv, &km)]),
            ("cross2", vec![(q(1), &jvb, &kp), (q(0), &jm, &kv)]),
            ("cross3", vec![(q(0), &jp, &kv), (q(s + 1), &jvb, &km)]),
            ("cross4", vec![(q(0), &jv, &kp), (q(s + 1), &jm, &kvb)]),
        ],
        Basis::Tilde => vec![
            (
                "master",
                vec![
                    (q(0), &jp, &kp),
                    (q(s), &jv, &kv),
                    (q(0), &jvb, &kvb),
                    (q(s), &jm, &km),
                ],
            ),
            ("split1", vec![(q(0), &jp, &kp), (q(s), &jv, &kv)]),
            ("split2", vec![(q(0), &jvb, &kvb), (q(s), &jm, &km)]),
            ("split3", vec![(q(0), &jp, &kp), (q(0), &jvb, &kvb)]),
            ("split4", vec![(q(0), &jv, &kv), (q(0), &jm, &km)]),
            ("cross1", vec![(q(0), &jp, &kvb), (q(s), &jv, &km)]),
            ("cross2", vec![(q(0), &jvb, &kp), (q(s), &jm, &kv)]),
            ("cross3", vec![(q(0), &jp, &kv), (q(0), &jvb, &km)]),
            ("cross4", vec![(q(0), &jv, &kp), (q(0), &jm, &kvb)]),
        ],
    };

    let mut out = Vec::new();
    for (name, parts) in combos {
        let mut acc = NCPoly::zero(Kind::Momentum, basis);
        for (c, j, k) in parts {
            acc = acc.add(&j.mul(k)?.scale(&c))?;
        }
        out.push((name.to_string(), acc.cone_reduce()?));
    }
    Ok(out)
}

/// s-uniformization analysis (reported, not asserted — see the maxwell
/// suite):
///
/// * With `γ^s ∝ q^{2s} d_s⁻¹` the hat minus-field coefficient `F̂⁻_{ms}`
///   is the same for every `s` (and with `γ̃^s ∝ q^{−s} d̃_s⁻¹` so is the
///   tilde plus-field `F̃⁺_{ms}`); [`uniformized_field_coefficient`]
///   produces the scaled coefficient for comparison across `s`.
/// * No single geometric rescaling `γ^s = t^s γ` makes all four current
///   components s-independent: [`current_uniformization_ratios`] returns
///   the per-component scale factor that a step `s → s+1` would require.
pub fn uniformized_field_coefficient(
    sign: crate::equations::Sign,
    basis: Basis,
    m: u32,
    s: i64,
) -> Result<MomZPoly, WaveError> {
    let scale = match basis {
        Basis::Hat => &QScalar::q_pow(2 * s) * &field_normalizer(s, basis)?.inv()?,
        Basis::Tilde => &QScalar::q_pow(-s) * &field_normalizer(s, basis)?.inv()?,
    };
    let gammas = Gammas::uniform(&scale);
    inhomogeneous_coefficient(sign, basis, m, s, &gammas)
}

/// For each κ in slot order `[v, ₋, ₊, v̄]`, the factor by which `γ` would
/// have to be rescaled from `s` to `s + 1` to keep `J^{ms}_κ` fixed. A
/// uniform choice exists only if all four factors coincide.
pub fn current_uniformization_ratios(
    basis: Basis,
    m: u32,
    s: i64,
) -> Result<[QScalar; 4], WaveError> {
    // With a one-hot γ every component J_κ is a single scalar times a
    // fixed word, so the per-component s → s+1 scaling requirement reads
    // off the leading coefficients directly.
    let gam = Gammas::one_hot(Gen::V);
    let at_s = current_coefficients(basis, m, s, &gam)?;
    let at_s1 = current_coefficients(basis, m, s + 1, &gam)?;
    let mut out = Vec::with_capacity(4);
    for slot in 0..4 {
        let c0 = at_s[slot].terms().next().map(|(_, c)| c.clone());
        let c1 = at_s1[slot].terms().next().map(|(_, c)| c.clone());
        match (c0, c1) {
            (Some(a), Some(b)) => out.push(&a / &b),
            _ => out.push(QScalar::zero()),
        }
    }
    Ok(out.try_into().expect("exactly four components"))
}
