//! Exact arithmetic in the free group of rank 2 modulo the fifth term of its
//! lower central series.
//!
//! Elements are kept in normal form over the ordered basis of basic
//! commutators of weight ≤ 4 on the generators `a > b`:
//!
//! ```text
//! a, b, c = [a,b], [a,b,a], [a,b,b], [a,b,a,a], [a,b,b,a], [a,b,b,b]
//! ```
//!
//! The commutator convention is `[x,y] = x⁻¹y⁻¹xy`, left-normed
//! `[x,y,z] = [[x,y],z]`. Multiplication is collection from the left: the
//! right factor's generators are pushed through the left factor's tail using
//! precomputed commutation rules between basis elements, truncating every
//! commutator of weight ≥ 5.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::word::{Generator, Word, WordTerm};

/// Basis indices into [`NfElement::exponents`].
pub mod slot {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const CA: usize = 3;
    pub const CB: usize = 4;
    pub const CAA: usize = 5;
    pub const CBA: usize = 6;
    pub const CBB: usize = 7;
}

/// Error raised by [`gamma3_projection`] on elements outside γ₃.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("element is not in gamma_3: exponents of a, b, [a,b] must vanish, got ({a}, {b}, {c})")]
pub struct NotInGamma3 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

/// Normal form of an element of F/γ₅(F), F free on {a, b}.
///
/// Two elements are equal iff their exponent tuples are equal; the identity
/// is the all-zero tuple. Values are immutable in practice: every operation
/// returns a fresh element, so sharing across threads is safe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NfElement {
    /// Exponents (e_a, e_b, e_c, e_ca, e_cb, e_caa, e_cba, e_cbb) over the
    /// basis a, b, [a,b], [a,b,a], [a,b,b], [a,b,a,a], [a,b,b,a], [a,b,b,b].
    pub exponents: [BigInt; 8],
}

/// Generalized binomial coefficient C(n, k) for integer (possibly negative) n.
pub fn binomial(n: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
    }
    let mut den = BigInt::one();
    for i in 1..=k {
        den *= BigInt::from(i);
    }
    num / den
}

impl NfElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        let mut e = Self::identity();
        match g {
            Generator::A => e.exponents[slot::A] = BigInt::one(),
            Generator::B => e.exponents[slot::B] = BigInt::one(),
        }
        e
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(Zero::is_zero)
    }

    /// x · aⁿ. The power aⁿ is pushed left through the b, c and γ₃ parts of
    /// the normal form; all corrections land in central or freely commuting
    /// slots, so a single pass is exact.
    fn append_a(&mut self, n: &BigInt) {
        if n.is_zero() {
            return;
        }
        let m = self.exponents[slot::B].clone();
        let c3 = self.exponents[slot::C].clone();
        let c4 = self.exponents[slot::CA].clone();
        let c5 = self.exponents[slot::CB].clone();
        let n2 = binomial(n, 2);
        let n3 = binomial(n, 3);
        let m2 = binomial(&m, 2);
        let m3 = binomial(&m, 3);

        self.exponents[slot::A] += n;
        // b^m a^n = a^n b^m [b^m, a^n]
        self.exponents[slot::C] -= &m * n;
        self.exponents[slot::CA] += &c3 * n - &m * &n2;
        self.exponents[slot::CB] -= n * &m2;
        self.exponents[slot::CAA] += &c4 * n + &c3 * &n2 - &m * &n3;
        self.exponents[slot::CBA] += &c5 * n - &m2 * &n2;
        self.exponents[slot::CBB] -= n * &m3;
    }

    /// x · bⁿ. Only the c and γ₃ parts are crossed; a stays put.
    fn append_b(&mut self, n: &BigInt) {
        if n.is_zero() {
            return;
        }
        let c3 = self.exponents[slot::C].clone();
        let c4 = self.exponents[slot::CA].clone();
        let c5 = self.exponents[slot::CB].clone();
        let n2 = binomial(n, 2);

        self.exponents[slot::B] += n;
        self.exponents[slot::CB] += &c3 * n;
        self.exponents[slot::CBA] += &c4 * n;
        self.exponents[slot::CBB] += &c5 * n + &c3 * &n2;
    }
}

/// Group product in F/γ₅(F).
pub fn mul(x: &NfElement, y: &NfElement) -> NfElement {
    let mut r = x.clone();
    r.append_a(&y.exponents[slot::A]);
    r.append_b(&y.exponents[slot::B]);
    // c and the γ₃/γ₄ slots of y append without crossings.
    for i in slot::C..=slot::CBB {
        r.exponents[i] += &y.exponents[i];
    }
    r
}

/// Group inverse: mul(x, inv(x)) is the identity.
pub fn inv(x: &NfElement) -> NfElement {
    let mut z = NfElement::identity();
    z.exponents[slot::A] = -&x.exponents[slot::A];
    z.exponents[slot::B] = -&x.exponents[slot::B];
    let w = mul(x, &z);
    // Appending c and higher slots is crossing-free, so negating the residue
    // finishes the inverse exactly.
    for i in slot::C..=slot::CBB {
        z.exponents[i] = -&w.exponents[i];
    }
    debug_assert!(mul(x, &z).is_identity());
    z
}

/// n-fold product xⁿ; n may be negative or zero.
pub fn pow(x: &NfElement, n: &BigInt) -> NfElement {
    if n.is_negative() {
        return inv(&pow(x, &-n));
    }
    let mut acc = NfElement::identity();
    let mut base = x.clone();
    let bits = n.bits();
    for i in 0..bits {
        if n.bit(i) {
            acc = mul(&acc, &base);
        }
        if i + 1 < bits {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Commutator [x, y] = x⁻¹y⁻¹xy.
pub fn comm(x: &NfElement, y: &NfElement) -> NfElement {
    mul(&mul(&inv(x), &inv(y)), &mul(x, y))
}

/// Evaluates a word into its unique normal form.
pub fn from_word(w: &Word) -> NfElement {
    let mut acc = NfElement::identity();
    for term in w.terms() {
        let factor = match term {
            WordTerm::Gen { gen, exp } => pow(&NfElement::generator(*gen), exp),
            WordTerm::Comm { left, right, exp } => {
                pow(&comm(&from_word(left), &from_word(right)), exp)
            }
        };
        acc = mul(&acc, &factor);
    }
    acc
}

/// Coordinates of an element of γ₃(F)/γ₅(F) over the free abelian basis
/// ([a,b,a], [a,b,b], [a,b,a,a], [a,b,b,a], [a,b,b,b]).
pub fn gamma3_projection(x: &NfElement) -> Result<[BigInt; 5], NotInGamma3> {
    let e = &x.exponents;
    if !e[slot::A].is_zero() || !e[slot::B].is_zero() || !e[slot::C].is_zero() {
        return Err(NotInGamma3 {
            a: e[slot::A].clone(),
            b: e[slot::B].clone(),
            c: e[slot::C].clone(),
        });
    }
    Ok([
        e[slot::CA].clone(),
        e[slot::CB].clone(),
        e[slot::CAA].clone(),
        e[slot::CBA].clone(),
        e[slot::CBB].clone(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;
    use proptest::prelude::*;

    fn nf(word: &str) -> NfElement {
        from_word(&word.parse::<Word>().unwrap())
    }

    fn exps(e: &NfElement) -> [i64; 8] {
        let mut out = [0i64; 8];
        for (i, v) in e.exponents.iter().enumerate() {
            out[i] = i64::try_from(v).unwrap();
        }
        out
    }

    #[test]
    fn binomial_generalized() {
        assert_eq!(binomial(&BigInt::from(8), 2), BigInt::from(28));
        assert_eq!(binomial(&BigInt::from(8), 3), BigInt::from(56));
        assert_eq!(binomial(&BigInt::from(-1), 2), BigInt::from(1));
        assert_eq!(binomial(&BigInt::from(-1), 3), BigInt::from(-1));
        assert_eq!(binomial(&BigInt::from(-2), 2), BigInt::from(3));
        assert_eq!(binomial(&BigInt::from(1), 2), BigInt::from(0));
    }

    #[test]
    fn from_word_examples() {
        assert!(nf("").is_identity());
        assert_eq!(exps(&nf("a b")), [1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(exps(&nf("b a")), [1, 1, -1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn square_of_ab() {
        let ab = nf("a b");
        let sq = pow(&ab, &BigInt::from(2));
        assert_eq!(exps(&sq), [2, 2, -1, 0, -1, 0, 0, 0]);
    }

    #[test]
    fn mul_neutral() {
        let x = nf("a^3 b^-2 [a,b]^5");
        assert_eq!(mul(&x, &NfElement::identity()), x);
        assert_eq!(mul(&NfElement::identity(), &x), x);
    }

    #[test]
    fn inv_examples() {
        assert!(inv(&NfElement::identity()).is_identity());
        assert_eq!(exps(&inv(&nf("a"))), [-1, 0, 0, 0, 0, 0, 0, 0]);
        let ba = nf("b a");
        assert!(mul(&ba, &inv(&ba)).is_identity());
    }

    #[test]
    fn comm_examples() {
        let a = nf("a");
        let b = nf("b");
        assert!(comm(&a, &a).is_identity());
        assert_eq!(exps(&comm(&b, &a)), [0, 0, -1, 0, 0, 0, 0, 0]);
        // [[a,b],a] is the basis element [a,b,a].
        let caa = comm(&comm(&a, &b), &a);
        assert_eq!(exps(&caa), [0, 0, 0, 1, 0, 0, 0, 0]);
        // weight 5 truncates
        let w5 = comm(&comm(&comm(&comm(&a, &b), &a), &b), &a);
        assert!(w5.is_identity());
        assert!(comm(&comm(&comm(&a, &b), &a), &comm(&a, &b)).is_identity());
    }

    #[test]
    fn comm_of_square_with_b() {
        let a = nf("a");
        let b = nf("b");
        let got = comm(&pow(&a, &BigInt::from(2)), &b);
        assert_eq!(exps(&got), [0, 0, 2, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn binomial_expansion_law() {
        // [aⁿ, b] = cⁿ [a,b,a]^C(n,2) [a,b,a,a]^C(n,3), checked against
        // repeated multiplication for n ≤ 6.
        let a = nf("a");
        let b = nf("b");
        let mut an = NfElement::identity();
        for n in 1i64..=6 {
            an = mul(&an, &a);
            let lhs = comm(&an, &b);
            let bn = BigInt::from(n);
            let mut expect = NfElement::identity();
            expect.exponents[slot::C] = bn.clone();
            expect.exponents[slot::CA] = binomial(&bn, 2);
            expect.exponents[slot::CAA] = binomial(&bn, 3);
            assert_eq!(lhs, expect, "n = {n}");
            assert_eq!(lhs, comm(&pow(&a, &bn), &b));
        }
    }

    #[test]
    fn gamma3_projection_examples() {
        assert_eq!(
            gamma3_projection(&NfElement::identity()).unwrap(),
            [0, 1, 2, 3, 4].map(|_: i32| BigInt::from(0))
        );
        let ca = nf("[[a,b],a]");
        let proj = gamma3_projection(&ca).unwrap();
        assert_eq!(proj[0], BigInt::from(1));
        assert!(proj[1..].iter().all(Zero::is_zero));
        assert!(gamma3_projection(&nf("a")).is_err());
    }

    #[test]
    fn top_weight_bilinearity() {
        // γ₃-projection of [[c, xᵐ], yⁿ] is additive in m and n.
        let a = nf("a");
        let b = nf("b");
        let c = comm(&a, &b);
        for (x, y) in [(&a, &b), (&b, &a), (&a, &a)] {
            let base = gamma3_projection(&comm(&comm(&c, x), y)).unwrap();
            for m in -3i64..=3 {
                for n in -3i64..=3 {
                    let got = gamma3_projection(&comm(
                        &comm(&c, &pow(x, &BigInt::from(m))),
                        &pow(y, &BigInt::from(n)),
                    ))
                    .unwrap();
                    let scaled: Vec<BigInt> =
                        base.iter().map(|v| v * BigInt::from(m * n)).collect();
                    assert_eq!(got.to_vec(), scaled);
                }
            }
        }
    }

    #[test]
    fn gamma2_is_abelian_mod_gamma5() {
        // Commutators of two elements of γ₂ vanish here (rank 2, class 4).
        let c = nf("[a,b]");
        let x = mul(&pow(&c, &BigInt::from(3)), &nf("[a,b,a]^2 [a,b,b]^-1"));
        let y = mul(&pow(&c, &BigInt::from(-2)), &nf("[a,b,b,b]^4"));
        assert!(comm(&x, &y).is_identity());
    }

    fn arb_nf() -> impl Strategy<Value = NfElement> {
        proptest::collection::vec(-20i64..=20, 8).prop_map(|v| {
            let mut e = NfElement::identity();
            for (i, x) in v.into_iter().enumerate() {
                e.exponents[i] = BigInt::from(x);
            }
            e
        })
    }

    proptest! {
        #[test]
        fn prop_associative(x in arb_nf(), y in arb_nf(), z in arb_nf()) {
            prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
        }

        #[test]
        fn prop_inverse_law(x in arb_nf()) {
            prop_assert!(mul(&x, &inv(&x)).is_identity());
            prop_assert_eq!(inv(&inv(&x)), x);
        }

        #[test]
        fn prop_power_consistency(x in arb_nf(), m in -12i64..=12, n in -12i64..=12) {
            let lhs = pow(&x, &BigInt::from(m + n));
            let rhs = mul(&pow(&x, &BigInt::from(m)), &pow(&x, &BigInt::from(n)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_pow_zero(x in arb_nf()) {
            prop_assert!(pow(&x, &BigInt::from(0)).is_identity());
        }
    }
}
