//! First-principles computation of the second Baer invariant
//! M²(G) = (R ∩ γ₃(F)) / [R,F,F] for two-generator presentations of
//! nilpotency class ≤ 2.
//!
//! For such presentations γ₃(F) ⊆ R, so M²(G) is the quotient of the rank-5
//! free abelian group γ₃(F)/γ₅(F) by the image of [R,F,F]. That image is
//! spanned by the γ₃-projections of the double and triple brackets
//! [r, x, y] and [r, x, y, z] of the relators with x, y, z ∈ {a, b}:
//! modulo γ₅ the weight-4 slots are multilinear in every slot, and the
//! corrections coming from products or conjugates of relators reduce to
//! powers of [a,b], which commute here. The closed-form agreement suite
//! validates this generator choice wholesale, and the extended-instantiation
//! tests re-derive it empirically.

use num_bigint::BigInt;
use num_traits::One;

use crate::groups::GroupParams;
use crate::hall::{comm, from_word, gamma3_projection, NfElement};
use crate::lattice::{AbelianInvariants, InfiniteQuotient, IntLattice};
use crate::theory::{validate, TheoryError};
use crate::word::{Generator, Word};

/// A two-generator presentation: the ambient prime and a relator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub p: u64,
    pub relators: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    /// The weight-3 basis commutators are not derivable from the relator
    /// set, so the presented group is not certified to have class ≤ 2.
    #[error(
        "presentation is not certified class <= 2: [a,b,a] or [a,b,b] \
         is not in the relator-generated lattice"
    )]
    NotClassTwo,
    #[error(transparent)]
    InfiniteQuotient(#[from] InfiniteQuotient),
    #[error(transparent)]
    Inadmissible(#[from] TheoryError),
}

/// The defining relators of the tuple presentation, in the literal form
/// [a,b]^{p^γ}, [a,b,a], [a,b,b], a^{p^α}[a,b]^{−p^ρ}, b^{p^β}[a,b]^{−p^σ}.
pub fn presentation_relators(params: &GroupParams) -> Result<Presentation, TheoryError> {
    validate(params)?;
    let c = || {
        Word::commutator_power(
            Word::generator_power(Generator::A, BigInt::one()),
            Word::generator_power(Generator::B, BigInt::one()),
            BigInt::one(),
        )
    };
    let c_pow = |e: &BigInt| {
        Word::commutator_power(
            Word::generator_power(Generator::A, BigInt::one()),
            Word::generator_power(Generator::B, BigInt::one()),
            e.clone(),
        )
    };
    let a_word = |e: BigInt| Word::generator_power(Generator::A, e);
    let b_word = |e: BigInt| Word::generator_power(Generator::B, e);

    let relators = vec![
        c_pow(&params.p_pow(params.gamma)),
        Word::commutator_power(c(), a_word(BigInt::one()), BigInt::one()),
        Word::commutator_power(c(), b_word(BigInt::one()), BigInt::one()),
        a_word(params.p_pow(params.alpha)).concat(c_pow(&-params.p_pow(params.rho))),
        b_word(params.p_pow(params.beta)).concat(c_pow(&-params.p_pow(params.sigma))),
    ];
    Ok(Presentation {
        p: params.p,
        relators,
    })
}

/// Abelian invariants of M²(G) for the presented group.
pub fn two_nilpotent_multiplier(pres: &Presentation) -> Result<AbelianInvariants, OracleError> {
    let lattice = relation_lattice(pres)?;
    Ok(lattice.quotient_invariants()?)
}

/// The sublattice of Z⁵ ≅ γ₃(F)/γ₅(F) spanned by the relator brackets,
/// after certifying the class-≤2 condition.
pub fn relation_lattice(pres: &Presentation) -> Result<IntLattice, OracleError> {
    let gens = [
        NfElement::generator(Generator::A),
        NfElement::generator(Generator::B),
    ];
    let mut rows = IntLattice::new(5, Vec::new());
    // class certificate: γ₃-content reachable from relators and single brackets
    let mut witness = IntLattice::new(5, Vec::new());

    for rel in &pres.relators {
        let nf = from_word(rel);
        if let Ok(proj) = gamma3_projection(&nf) {
            witness.push_row(proj.to_vec());
        }
        for x in &gens {
            let d1 = comm(&nf, x);
            if let Ok(proj) = gamma3_projection(&d1) {
                witness.push_row(proj.to_vec());
            }
            for y in &gens {
                let d2 = comm(&d1, y);
                let proj =
                    gamma3_projection(&d2).expect("double relator brackets always lie in gamma_3");
                rows.push_row(proj.to_vec());
                for z in &gens {
                    let d3 = comm(&d2, z);
                    let proj = gamma3_projection(&d3)
                        .expect("triple relator brackets always lie in gamma_3");
                    rows.push_row(proj.to_vec());
                }
            }
        }
    }

    for row in rows.rows() {
        witness.push_row(row.clone());
    }
    let e_caa = unit5(0);
    let e_cab = unit5(1);
    if !witness.contains(&e_caa) || !witness.contains(&e_cab) {
        return Err(OracleError::NotClassTwo);
    }
    Ok(rows)
}

fn unit5(i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); 5];
    v[i] = BigInt::one();
    v
}

/// M²(G) for the group of an admissible parameter tuple.
pub fn multiplier_of(params: &GroupParams) -> Result<AbelianInvariants, OracleError> {
    let pres = presentation_relators(params)?;
    two_nilpotent_multiplier(&pres)
}
