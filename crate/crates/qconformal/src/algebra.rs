//! The noncommutative q-Minkowski coordinate and momentum algebras.
//!
//! Both algebras are generated by four letters `{v, x₋, x₊, v̄}` (momenta
//! `{k_v, k₋, k₊, k_v̄}` obey the same relations and commute with the
//! coordinates):
//!
//! ```text
//! x± v  = q^±1 v x±      x± v̄ = q^±1 v̄ x±
//! x₊ x₋ − x₋ x₊ = λ v v̄          v̄ v = v v̄
//! ```
//!
//! Every element has a unique expansion in ordered monomials, in either of
//! two conjugate orders: hat `v^j x₋^n x₊^l v̄^m` or tilde
//! `v̄^m x₊^l x₋^n v^j` (momenta mirrored the same way). [`NCPoly`] stores
//! the expansion sparsely, keyed by the exponent of each generator; the
//! [`Basis`] tag says which ordered word the exponents stand for.
//!
//! Normal ordering is deterministic leftmost-innermost rewriting of adjacent
//! out-of-order pairs; the commutator rule emits its extra `λ v v̄` term
//! already in target order. A step cap guards against nontermination;
//! confluence is established by test, not assumed.

use num::BigRational;
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

use crate::scalar::{QScalar, ScalarError};
use crate::Basis;

/// Rewrite step cap per word.
const MAX_STEPS: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("coordinate and momentum letters cannot mix in one word")]
    MixedKinds,
    #[error("operands carry different order tags")]
    TagMismatch,
    #[error("rewriting exceeded the step cap")]
    InternalNontermination,
    #[error("operation requires a momentum polynomial")]
    NotMomentum,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Generator name; [`Kind`] distinguishes the coordinate copy from the
/// momentum copy of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    V,
    Minus,
    Plus,
    Vbar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Coord,
    Momentum,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::V, Gen::Minus, Gen::Plus, Gen::Vbar];

    fn label(self, kind: Kind) -> &'static str {
        match (kind, self) {
            (Kind::Coord, Gen::V) => "v",
            (Kind::Coord, Gen::Minus) => "x-",
            (Kind::Coord, Gen::Plus) => "x+",
            (Kind::Coord, Gen::Vbar) => "vbar",
            (Kind::Momentum, Gen::V) => "kv",
            (Kind::Momentum, Gen::Minus) => "k-",
            (Kind::Momentum, Gen::Plus) => "k+",
            (Kind::Momentum, Gen::Vbar) => "kvbar",
        }
    }

    /// Semantic slot used for exponent storage: `[v, x₋, x₊, v̄]`.
    fn slot(self) -> usize {
        match self {
            Gen::V => 0,
            Gen::Minus => 1,
            Gen::Plus => 2,
            Gen::Vbar => 3,
        }
    }
}

/// Position of a generator in the target word of an order tag. Smaller rank
/// comes first.
fn rank(tag: Basis, g: Gen) -> usize {
    match tag {
        Basis::Hat => match g {
            Gen::V => 0,
            Gen::Minus => 1,
            Gen::Plus => 2,
            Gen::Vbar => 3,
        },
        Basis::Tilde => match g {
            Gen::Vbar => 0,
            Gen::Plus => 1,
            Gen::Minus => 2,
            Gen::V => 3,
        },
    }
}

/// Generators in target word order for a tag.
fn word_order(tag: Basis) -> [Gen; 4] {
    match tag {
        Basis::Hat => [Gen::V, Gen::Minus, Gen::Plus, Gen::Vbar],
        Basis::Tilde => [Gen::Vbar, Gen::Plus, Gen::Minus, Gen::V],
    }
}

/// A word in a single generator kind. The empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub kind: Kind,
    pub letters: Vec<Gen>,
}

impl Word {
    pub fn new(kind: Kind, letters: Vec<Gen>) -> Word {
        Word { kind, letters }
    }

    pub fn unit(kind: Kind) -> Word {
        Word {
            kind,
            letters: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }
}

/// Exponents of `[v, x₋, x₊, v̄]` (or their momentum counterparts),
/// independent of the order tag.
pub type Exps = [u32; 4];

/// Linear combination of normal-ordered words with [`QScalar`] coefficients.
///
/// Keys are semantic exponents; the `tag` fixes which ordered word a key
/// denotes, so the same key under different tags is a different element.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPoly {
    pub kind: Kind,
    pub tag: Basis,
    terms: BTreeMap<Exps, QScalar>,
}

/// Swap factor `f` with `a·b = q^f·b·a`, for pairs that q-commute.
fn q_commute_factor(a: Gen, b: Gen) -> i64 {
    match (a, b) {
        (Gen::Plus, Gen::V) | (Gen::Plus, Gen::Vbar) => 1,
        (Gen::Minus, Gen::V) | (Gen::Minus, Gen::Vbar) => -1,
        (Gen::V, Gen::Plus) | (Gen::Vbar, Gen::Plus) => -1,
        (Gen::V, Gen::Minus) | (Gen::Vbar, Gen::Minus) => 1,
        (Gen::V, Gen::Vbar) | (Gen::Vbar, Gen::V) => 0,
        _ => unreachable!("x+/x- pair handled by the commutator rule"),
    }
}

/// Rewrite one out-of-order adjacent pair at position `i`, pushing the
/// resulting words onto the worklist.
fn rewrite_at(
    tag: Basis,
    coeff: &QScalar,
    word: &[Gen],
    i: usize,
    work: &mut Vec<(QScalar, Vec<Gen>)>,
) {
    let (a, b) = (word[i], word[i + 1]);
    if (a == Gen::Plus && b == Gen::Minus) || (a == Gen::Minus && b == Gen::Plus) {
        // x₊x₋ = x₋x₊ + λ v v̄   /   x₋x₊ = x₊x₋ − λ v v̄
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        work.push((coeff.clone(), swapped));

        let lam = if a == Gen::Plus {
            QScalar::lambda()
        } else {
            -&QScalar::lambda()
        };
        let pair = match tag {
            Basis::Hat => [Gen::V, Gen::Vbar],
            Basis::Tilde => [Gen::Vbar, Gen::V],
        };
        let mut replaced = word.to_vec();
        replaced[i] = pair[0];
        replaced[i + 1] = pair[1];
        work.push((coeff * &lam, replaced));
    } else {
        let f = q_commute_factor(a, b);
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        let c = if f == 0 {
            coeff.clone()
        } else {
            coeff * &QScalar::q_pow(f)
        };
        work.push((c, swapped));
    }
}

/// Candidate rewrite positions: adjacent pairs out of order for `tag`.
fn inversions(tag: Basis, word: &[Gen]) -> Vec<usize> {
    (0..word.len().saturating_sub(1))
        .filter(|&i| rank(tag, word[i]) > rank(tag, word[i + 1]))
        .collect()
}

enum Strategy<'a> {
    Leftmost,
    Random(&'a mut dyn rand::RngCore),
}

fn normal_order_impl(
    kind: Kind,
    tag: Basis,
    coeff: QScalar,
    letters: Vec<Gen>,
    mut strategy: Strategy<'_>,
) -> Result<NCPoly, AlgebraError> {
    let mut out = NCPoly::zero(kind, tag);
    let mut work = vec![(coeff, letters)];
    let mut steps = 0usize;
    while let Some((c, w)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        let inv = inversions(tag, &w);
        if inv.is_empty() {
            let mut key = [0u32; 4];
            for g in &w {
                key[g.slot()] += 1;
            }
            out.add_term(key, c);
            continue;
        }
        steps += 1;
        if steps > MAX_STEPS {
            return Err(AlgebraError::InternalNontermination);
        }
        let i = match &mut strategy {
            Strategy::Leftmost => inv[0],
            Strategy::Random(rng) => inv[rng.gen_range(0..inv.len())],
        };
        rewrite_at(tag, &c, &w, i, &mut work);
    }
    Ok(out)
}

/// Normal-order a word with a scalar prefactor into the `tag` basis.
pub fn normal_order(word: &Word, coeff: QScalar, tag: Basis) -> Result<NCPoly, AlgebraError> {
    normal_order_impl(
        word.kind,
        tag,
        coeff,
        word.letters.clone(),
        Strategy::Leftmost,
    )
}

/// Normal ordering with randomized rewrite positions; used by the
/// confluence suite to show the result is strategy-independent.
pub fn normal_order_randomized(
    word: &Word,
    coeff: QScalar,
    tag: Basis,
    rng: &mut impl Rng,
) -> Result<NCPoly, AlgebraError> {
    normal_order_impl(
        word.kind,
        tag,
        coeff,
        word.letters.clone(),
        Strategy::Random(rng),
    )
}

impl NCPoly {
    pub fn zero(kind: Kind, tag: Basis) -> NCPoly {
        NCPoly {
            kind,
            tag,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(kind: Kind, tag: Basis) -> NCPoly {
        NCPoly::monomial(kind, tag, [0, 0, 0, 0], QScalar::one())
    }

    pub fn scalar(kind: Kind, tag: Basis, c: QScalar) -> NCPoly {
        NCPoly::monomial(kind, tag, [0, 0, 0, 0], c)
    }

    pub fn monomial(kind: Kind, tag: Basis, key: Exps, coeff: QScalar) -> NCPoly {
        let mut p = NCPoly::zero(kind, tag);
        p.add_term(key, coeff);
        p
    }

    /// Single generator as a polynomial.
    pub fn gen(kind: Kind, tag: Basis, g: Gen) -> NCPoly {
        let mut key = [0u32; 4];
        key[g.slot()] = 1;
        NCPoly::monomial(kind, tag, key, QScalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &QScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, key: Exps, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.add(&other.scale(&QScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(self.kind, self.tag);
        }
        NCPoly {
            kind: self.kind,
            tag: self.tag,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    fn compatible(&self, other: &NCPoly) -> Result<(), AlgebraError> {
        if self.kind != other.kind {
            return Err(AlgebraError::MixedKinds);
        }
        if self.tag != other.tag {
            return Err(AlgebraError::TagMismatch);
        }
        Ok(())
    }

    /// Letters of an exponent key in the tag's word order.
    pub fn key_letters(&self, key: &Exps) -> Vec<Gen> {
        let mut letters = Vec::new();
        for g in word_order(self.tag) {
            for _ in 0..key[g.slot()] {
                letters.push(g);
            }
        }
        letters
    }

    /// Bilinear product, re-normal-ordered. Associativity is covered by the
    /// property suite.
    pub fn mul(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.compatible(other)?;
        let mut out = NCPoly::zero(self.kind, self.tag);
        for (ka, ca) in &self.terms {
            let la = self.key_letters(ka);
            for (kb, cb) in &other.terms {
                let mut letters = la.clone();
                letters.extend(self.key_letters(kb));
                let p =
                    normal_order_impl(self.kind, self.tag, ca * cb, letters, Strategy::Leftmost)?;
                for (k, c) in p.terms {
                    out.add_term(k, c);
                }
            }
        }
        Ok(out)
    }

    /// The conjugation `ω`: reverses every word, conjugates every
    /// coefficient (`q ↦ q⁻¹`), and lands in the opposite order tag.
    ///
    /// On canonical monomials this is exactly the hat ↔ tilde basis
    /// exchange `v^j x₋^n x₊^l v̄^m ↦ v̄^m x₊^l x₋^n v^j` (so the exponent
    /// of each generator is unchanged), and `ω(λ) = −λ` on scalars. It is
    /// an anti-linear anti-involution, verified by the property suite.
    pub fn omega(&self) -> NCPoly {
        NCPoly {
            kind: self.kind,
            tag: self.tag.flip(),
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    /// The central cone element `L = k₋k₊ − q⁻¹ k_v k_v̄` in the given tag.
    pub fn cone_element(tag: Basis) -> NCPoly {
        let km = NCPoly::gen(Kind::Momentum, tag, Gen::Minus);
        let kp = NCPoly::gen(Kind::Momentum, tag, Gen::Plus);
        let kv = NCPoly::gen(Kind::Momentum, tag, Gen::V);
        let kvb = NCPoly::gen(Kind::Momentum, tag, Gen::Vbar);
        let a = km.mul(&kp).expect("same kind/tag");
        let b = kv
            .mul(&kvb)
            .expect("same kind/tag")
            .scale(&QScalar::q_pow(-1));
        a.sub(&b).expect("same kind/tag")
    }

    /// Full reduction modulo the two-sided ideal generated by the cone
    /// element: afterwards no word contains both `k₋` and `k₊`.
    ///
    /// In hat order the junction pair `k₋k₊` is replaced by `q⁻¹ k_v k_v̄`;
    /// in tilde order the junction pair `k₊k₋` by `q k_v k_v̄`. The cone
    /// element is central (tested), so the reduction is well-defined and
    /// idempotent.
    pub fn cone_reduce(&self) -> Result<NCPoly, AlgebraError> {
        if self.kind != Kind::Momentum {
            return Err(AlgebraError::NotMomentum);
        }
        let mut cur = self.clone();
        loop {
            let mut next = NCPoly::zero(self.kind, self.tag);
            let mut changed = false;
            for (k, c) in &cur.terms {
                if k[Gen::Minus.slot()] >= 1 && k[Gen::Plus.slot()] >= 1 {
                    changed = true;
                    let mut reduced = *k;
                    reduced[Gen::Minus.slot()] -= 1;
                    reduced[Gen::Plus.slot()] -= 1;
                    // Rebuild the word with the junction pair replaced by
                    // k_v k_v̄ and the matching q-power.
                    let factor = match self.tag {
                        Basis::Hat => QScalar::q_pow(-1),
                        Basis::Tilde => QScalar::q_pow(1),
                    };
                    let order = word_order(self.tag);
                    let mut letters = Vec::new();
                    for (pos, g) in order.iter().enumerate() {
                        for _ in 0..reduced[g.slot()] {
                            letters.push(*g);
                        }
                        if pos == 1 {
                            // Junction sits between the two middle slots.
                            letters.push(Gen::V);
                            letters.push(Gen::Vbar);
                        }
                    }
                    let p = normal_order_impl(
                        self.kind,
                        self.tag,
                        c * &factor,
                        letters,
                        Strategy::Leftmost,
                    )?;
                    for (k2, c2) in p.terms {
                        next.add_term(k2, c2);
                    }
                } else {
                    next.add_term(*k, c.clone());
                }
            }
            cur = next;
            if !changed {
                return Ok(cur);
            }
        }
    }

    /// Evaluate at `q = 1` with rational values per generator slot
    /// `[v, x₋, x₊, v̄]`. At `q = 1` the algebra is commutative, so plugging
    /// commuting numbers into normal-ordered words is sound.
    pub fn eval_q1(&self, vals: &[BigRational; 4]) -> Result<BigRational, ScalarError> {
        let mut acc = BigRational::new(0.into(), 1.into());
        for (k, c) in &self.terms {
            let mut t = c.limit_q1()?;
            for (slot, e) in k.iter().enumerate() {
                for _ in 0..*e {
                    t *= &vals[slot];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Total degree of the highest-degree term.
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.iter().sum()).max().unwrap_or(0)
    }

    /// Canonical rendering, e.g. `(q^2 + 1) kv^1 k-^0 k+^2 kvbar^0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in &self.terms {
            let mut s = String::new();
            write!(s, "({})", c).unwrap();
            for g in word_order(self.tag) {
                write!(s, " {}^{}", g.label(self.kind), k[g.slot()]).unwrap();
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qint;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn no(kind: Kind, tag: Basis, letters: &[Gen]) -> NCPoly {
        normal_order(&Word::new(kind, letters.to_vec()), QScalar::one(), tag).unwrap()
    }

    #[test]
    fn basic_relations_hat() {
        // x₊·v = q·(v x₊)
        let p = no(Kind::Coord, Basis::Hat, &[Gen::Plus, Gen::V]);
        let want = NCPoly::monomial(Kind::Coord, Basis::Hat, [1, 0, 1, 0], QScalar::q_pow(1));
        assert_eq!(p, want);

        // x₊·x₋ = x₋x₊ + λ v v̄
        let p = no(Kind::Coord, Basis::Hat, &[Gen::Plus, Gen::Minus]);
        let mut want = NCPoly::monomial(Kind::Coord, Basis::Hat, [0, 1, 1, 0], QScalar::one());
        want.add_term([1, 0, 0, 1], QScalar::lambda());
        assert_eq!(p, want);

        // v̄·v = v v̄
        let p = no(Kind::Coord, Basis::Hat, &[Gen::Vbar, Gen::V]);
        let want = NCPoly::monomial(Kind::Coord, Basis::Hat, [1, 0, 0, 1], QScalar::one());
        assert_eq!(p, want);
    }

    #[test]
    fn ncmul_examples() {
        let xm = NCPoly::gen(Kind::Coord, Basis::Hat, Gen::Minus);
        let xp = NCPoly::gen(Kind::Coord, Basis::Hat, Gen::Plus);
        // already ordered
        assert_eq!(
            xm.mul(&xp).unwrap(),
            NCPoly::monomial(Kind::Coord, Basis::Hat, [0, 1, 1, 0], QScalar::one())
        );
        // commutator relation
        let mut want = NCPoly::monomial(Kind::Coord, Basis::Hat, [0, 1, 1, 0], QScalar::one());
        want.add_term([1, 0, 0, 1], QScalar::lambda());
        assert_eq!(xp.mul(&xm).unwrap(), want);
        // unit law
        let vvb = NCPoly::monomial(Kind::Coord, Basis::Hat, [1, 0, 0, 1], QScalar::one());
        assert_eq!(vvb.mul(&NCPoly::unit(Kind::Coord, Basis::Hat)).unwrap(), vvb);
        // tag mismatch is an error
        assert!(matches!(
            xm.mul(&NCPoly::unit(Kind::Coord, Basis::Tilde)),
            Err(AlgebraError::TagMismatch)
        ));
    }

    #[test]
    fn tilde_ordering() {
        // In tilde order, x₋·x₊ rewrites to x₊x₋ − λ v̄v.
        let p = no(Kind::Coord, Basis::Tilde, &[Gen::Minus, Gen::Plus]);
        let mut want = NCPoly::monomial(Kind::Coord, Basis::Tilde, [0, 1, 1, 0], QScalar::one());
        want.add_term([1, 0, 0, 1], -&QScalar::lambda());
        assert_eq!(p, want);
    }

    #[test]
    fn omega_maps_bases() {
        // ω(v^j x₋^n x₊^l v̄^m) (hat) is the tilde monomial with the same
        // exponents, and scalars conjugate: ω(λ) = −λ.
        let p = NCPoly::monomial(Kind::Coord, Basis::Hat, [2, 1, 3, 1], QScalar::lambda());
        let w = p.omega();
        assert_eq!(w.tag, Basis::Tilde);
        assert_eq!(
            w,
            NCPoly::monomial(Kind::Coord, Basis::Tilde, [2, 1, 3, 1], -&QScalar::lambda())
        );
        // unit fixed
        let u = NCPoly::unit(Kind::Coord, Basis::Hat);
        assert_eq!(u.omega().omega(), u);
    }

    #[test]
    fn omega_anti_involution_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let len_a = rng.gen_range(0..4);
            let len_b = rng.gen_range(0..4);
            let letters_a: Vec<Gen> = (0..len_a).map(|_| Gen::ALL[rng.gen_range(0..4)]).collect();
            let letters_b: Vec<Gen> = (0..len_b).map(|_| Gen::ALL[rng.gen_range(0..4)]).collect();
            let a = no(Kind::Coord, Basis::Hat, &letters_a).scale(&qint(rng.gen_range(1..4)));
            let b = no(Kind::Coord, Basis::Hat, &letters_b);
            assert_eq!(a.omega().omega(), a);
            let lhs = a.mul(&b).unwrap().omega();
            let rhs = b.omega().mul(&a.omega()).unwrap();
            assert_eq!(lhs, rhs, "ω(ab) = ω(b)ω(a)");
        }
    }

    #[test]
    fn cone_reduction_examples() {
        // k₋k₊ → q⁻¹ kv kv̄
        let p = no(Kind::Momentum, Basis::Hat, &[Gen::Minus, Gen::Plus]);
        let r = p.cone_reduce().unwrap();
        assert_eq!(
            r,
            NCPoly::monomial(Kind::Momentum, Basis::Hat, [1, 0, 0, 1], QScalar::q_pow(-1))
        );
        // k₊k₋ → q kv kv̄
        let p = no(Kind::Momentum, Basis::Hat, &[Gen::Plus, Gen::Minus]);
        let r = p.cone_reduce().unwrap();
        assert_eq!(
            r,
            NCPoly::monomial(Kind::Momentum, Basis::Hat, [1, 0, 0, 1], QScalar::q_pow(1))
        );
        // kv² unchanged
        let p = no(Kind::Momentum, Basis::Hat, &[Gen::V, Gen::V]);
        assert_eq!(p.cone_reduce().unwrap(), p);
        // idempotent on something bigger
        let w = no(
            Kind::Momentum,
            Basis::Hat,
            &[Gen::Plus, Gen::Minus, Gen::Plus, Gen::Vbar],
        );
        let r1 = w.cone_reduce().unwrap();
        assert_eq!(r1.cone_reduce().unwrap(), r1);
        // coordinate polynomials are rejected
        assert!(matches!(
            NCPoly::unit(Kind::Coord, Basis::Hat).cone_reduce(),
            Err(AlgebraError::NotMomentum)
        ));
    }

    #[test]
    fn cone_element_central() {
        for tag in [Basis::Hat, Basis::Tilde] {
            let l = NCPoly::cone_element(tag);
            for g in Gen::ALL {
                let gp = NCPoly::gen(Kind::Momentum, tag, g);
                let left = gp.mul(&l).unwrap();
                let right = l.mul(&gp).unwrap();
                assert_eq!(left, right, "L commutes with {:?} ({tag})", g);
            }
        }
    }

    #[test]
    fn cone_ideal_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for tag in [Basis::Hat, Basis::Tilde] {
            let l = NCPoly::cone_element(tag);
            for _ in 0..40 {
                let la: Vec<Gen> = (0..rng.gen_range(0..4))
                    .map(|_| Gen::ALL[rng.gen_range(0..4)])
                    .collect();
                let lb: Vec<Gen> = (0..rng.gen_range(0..4))
                    .map(|_| Gen::ALL[rng.gen_range(0..4)])
                    .collect();
                let a = no(Kind::Momentum, tag, &la);
                let b = no(Kind::Momentum, tag, &lb);
                let prod = a.mul(&l).unwrap().mul(&b).unwrap();
                assert!(prod.cone_reduce().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn confluence_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let len = rng.gen_range(0..=8);
            let letters: Vec<Gen> = (0..len).map(|_| Gen::ALL[rng.gen_range(0..4)]).collect();
            let w = Word::new(Kind::Coord, letters);
            let det = normal_order(&w, QScalar::one(), Basis::Hat).unwrap();
            let r1 = normal_order_randomized(&w, QScalar::one(), Basis::Hat, &mut rng).unwrap();
            let r2 = normal_order_randomized(&w, QScalar::one(), Basis::Hat, &mut rng).unwrap();
            assert_eq!(det, r1);
            assert_eq!(r1, r2);
        }
    }

    #[test]
    fn degree_preserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let len = rng.gen_range(0..=6);
            let letters: Vec<Gen> = (0..len).map(|_| Gen::ALL[rng.gen_range(0..4)]).collect();
            let p = no(Kind::Coord, Basis::Hat, &letters);
            for (k, _) in p.terms() {
                assert_eq!(k.iter().sum::<u32>() as usize, len);
            }
        }
    }

    #[test]
    fn mul_associative_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let gens: Vec<NCPoly> = (0..3)
                .map(|_| {
                    let letters: Vec<Gen> = (0..rng.gen_range(1..3))
                        .map(|_| Gen::ALL[rng.gen_range(0..4)])
                        .collect();
                    no(Kind::Coord, Basis::Hat, &letters)
                })
                .collect();
            let lhs = gens[0].mul(&gens[1]).unwrap().mul(&gens[2]).unwrap();
            let rhs = gens[0].mul(&gens[1].mul(&gens[2]).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn render_word() {
        let p = NCPoly::monomial(Kind::Coord, Basis::Hat, [2, 1, 3, 0], QScalar::one());
        assert_eq!(p.render(), "(1) v^2 x-^1 x+^3 vbar^0");
    }
}
