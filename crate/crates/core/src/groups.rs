//! Finite arithmetic inside a group given by a parameter tuple
//! (p; α, β, γ; ρ, σ): normal forms aⁱ bʲ cᵏ with c = [a,b], element orders,
//! the center, and quotient presentations by central elements.
//!
//! The defining relations are c^{p^γ} = [c,a] = [c,b] = 1,
//! a^{p^α} = c^{p^ρ}, b^{p^β} = c^{p^σ}, together with the class-two rule
//! bʲ aⁱ = aⁱ bʲ c^{−ij}.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::hall::binomial;
use crate::oracle::{presentation_relators, Presentation};
use crate::theory::{validate, TheoryError};
use crate::word::{Generator, Word};

/// The defining 5-tuple (α, β, γ; ρ, σ) together with the prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    pub p: u64,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub rho: u32,
    pub sigma: u32,
}

impl GroupParams {
    pub fn new(p: u64, alpha: u32, beta: u32, gamma: u32, rho: u32, sigma: u32) -> Self {
        Self {
            p,
            alpha,
            beta,
            gamma,
            rho,
            sigma,
        }
    }

    pub fn tuple(&self) -> [u32; 5] {
        [self.alpha, self.beta, self.gamma, self.rho, self.sigma]
    }

    /// p^e as a big integer.
    pub fn p_pow(&self, e: u32) -> BigInt {
        BigInt::from(self.p).pow(e)
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{};{},{})",
            self.alpha, self.beta, self.gamma, self.rho, self.sigma
        )
    }
}

/// Element raised by [`NotCentral`]-checked operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("element {element} is not central in {params}")]
pub struct NotCentral {
    pub params: GroupParams,
    pub element: GroupElement,
}

/// Normal form aⁱ bʲ cᵏ with 0 ≤ i < p^α, 0 ≤ j < p^β, 0 ≤ k < p^γ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub i: BigInt,
    pub j: BigInt,
    pub k: BigInt,
}

impl GroupElement {
    pub fn identity() -> Self {
        Self {
            i: BigInt::zero(),
            j: BigInt::zero(),
            k: BigInt::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    /// The word aⁱ bʲ [a,b]ᵏ (zero-exponent factors dropped).
    pub fn to_word(&self) -> Word {
        let mut w = Word::empty();
        w.push_generator(Generator::A, self.i.clone());
        w.push_generator(Generator::B, self.j.clone());
        w.push_commutator(
            Word::generator_power(Generator::A, BigInt::one()),
            Word::generator_power(Generator::B, BigInt::one()),
            self.k.clone(),
        );
        w
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (sym, e) in [("a", &self.i), ("b", &self.j), ("c", &self.k)] {
            if !e.is_zero() {
                if e.is_one() {
                    parts.push(sym.to_string());
                } else {
                    parts.push(format!("{sym}^{e}"));
                }
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Reduces arbitrary exponents into the normal-form ranges. The reduction
/// order is: k mod p^γ, then the j-carry into k via σ, then the i-carry via
/// ρ, then k mod p^γ again (c is central, so any consistent order agrees).
pub fn normalize(params: &GroupParams, i: BigInt, j: BigInt, k: BigInt) -> GroupElement {
    let pa = params.p_pow(params.alpha);
    let pb = params.p_pow(params.beta);
    let pg = params.p_pow(params.gamma);

    let mut k = k.mod_floor(&pg);
    let (qj, j) = j.div_mod_floor(&pb);
    k += qj * params.p_pow(params.sigma);
    let (qi, i) = i.div_mod_floor(&pa);
    k += qi * params.p_pow(params.rho);
    let k = k.mod_floor(&pg);
    GroupElement { i, j, k }
}

/// The generator a as a group element.
pub fn gen_a(params: &GroupParams) -> GroupElement {
    normalize(params, BigInt::one(), BigInt::zero(), BigInt::zero())
}

/// The generator b as a group element.
pub fn gen_b(params: &GroupParams) -> GroupElement {
    normalize(params, BigInt::zero(), BigInt::one(), BigInt::zero())
}

/// The commutator c = [a,b] as a group element.
pub fn gen_c(params: &GroupParams) -> GroupElement {
    normalize(params, BigInt::zero(), BigInt::zero(), BigInt::one())
}

/// Group product: (aⁱ¹bʲ¹cᵏ¹)(aⁱ²bʲ²cᵏ²) = a^{i₁+i₂} b^{j₁+j₂} c^{k₁+k₂−j₁i₂}.
pub fn g_mul(params: &GroupParams, x: &GroupElement, y: &GroupElement) -> GroupElement {
    normalize(params, &x.i + &y.i, &x.j + &y.j, &x.k + &y.k - &x.j * &y.i)
}

pub fn g_inv(params: &GroupParams, x: &GroupElement) -> GroupElement {
    normalize(params, -&x.i, -&x.j, -&x.k - &x.i * &x.j)
}

/// xⁿ via the closed class-two form xⁿ = a^{ni} b^{nj} c^{nk − ij·C(n,2)}.
pub fn g_pow(params: &GroupParams, x: &GroupElement, n: &BigInt) -> GroupElement {
    normalize(
        params,
        n * &x.i,
        n * &x.j,
        n * &x.k - &x.i * &x.j * binomial(n, 2),
    )
}

/// Order of the group: p^{α+β+γ}.
pub fn group_order(params: &GroupParams) -> BigInt {
    params.p_pow(params.alpha + params.beta + params.gamma)
}

/// Least n ≥ 1 with xⁿ = 1, found by iterating p-th powers of the normal
/// form (the order divides the group order, so it is a power of p).
pub fn element_order(params: &GroupParams, x: &GroupElement) -> BigInt {
    let p = BigInt::from(params.p);
    let mut y = x.clone();
    let mut order = BigInt::one();
    while !y.is_identity() {
        y = g_pow(params, &y, &p);
        order *= &p;
    }
    order
}

/// The three center generators a^{p^γ}, [a,b], b^{p^γ}, returned literally
/// (they may collapse or coincide for small parameters).
pub fn center(params: &GroupParams) -> Vec<GroupElement> {
    let pg = params.p_pow(params.gamma);
    vec![
        g_pow(params, &gen_a(params), &pg),
        gen_c(params),
        g_pow(params, &gen_b(params), &pg),
    ]
}

/// Whether x commutes with both generators (hence with everything).
pub fn is_central(params: &GroupParams, x: &GroupElement) -> bool {
    let a = gen_a(params);
    let b = gen_b(params);
    g_mul(params, x, &a) == g_mul(params, &a, x) && g_mul(params, x, &b) == g_mul(params, &b, x)
}

/// All elements, in lexicographic (i, j, k) order. Only sensible for small
/// groups; used by brute-force checks.
pub fn elements(params: &GroupParams) -> Vec<GroupElement> {
    let pa = u64::try_from(&params.p_pow(params.alpha)).expect("group too large to enumerate");
    let pb = u64::try_from(&params.p_pow(params.beta)).expect("group too large to enumerate");
    let pg = u64::try_from(&params.p_pow(params.gamma)).expect("group too large to enumerate");
    let mut out = Vec::new();
    for i in 0..pa {
        for j in 0..pb {
            for k in 0..pg {
                out.push(GroupElement {
                    i: BigInt::from(i),
                    j: BigInt::from(j),
                    k: BigInt::from(k),
                });
            }
        }
    }
    out
}

/// Presentation of G/⟨d⟩ for central d: the defining relators plus the word
/// of d. The 5-tuple is not re-derived; the oracle consumes raw relators.
pub fn quotient_presentation(
    params: &GroupParams,
    d: &GroupElement,
) -> Result<Presentation, QuotientError> {
    validate(params)?;
    if !is_central(params, d) {
        return Err(NotCentral {
            params: *params,
            element: d.clone(),
        }
        .into());
    }
    let mut pres = presentation_relators(params)?;
    pres.relators.push(d.to_word());
    Ok(pres)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error(transparent)]
    Inadmissible(#[from] TheoryError),
    #[error(transparent)]
    NotCentral(#[from] NotCentral),
}
