//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line. Tolerances are exact integer equality throughout.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nilmult_core::groups::{
    self, element_order, elements, g_mul, g_pow, gen_a, gen_b, group_order, is_central,
    GroupElement, GroupParams,
};
use nilmult_core::hall::{self, binomial, NfElement};
use nilmult_core::lattice::{determinant, smith_with_certificate, AbelianInvariants};
use nilmult_core::oracle::multiplier_of;
use nilmult_core::theory::{
    admissible_tuples, canonicalize, classify, closed_form_multiplier, epicenter_membership,
    epicenter_witness, is_2_capable, is_capable, Label,
};
use nilmult_core::word::Generator;

const SWEEP_PRIMES: [u64; 3] = [2, 3, 5];
const SWEEP_MAX_EXP: u32 = 3;

fn sweep_tuples() -> Vec<GroupParams> {
    SWEEP_PRIMES
        .iter()
        .flat_map(|&p| admissible_tuples(p, SWEEP_MAX_EXP))
        .collect()
}

fn canonical_sweep() -> Vec<GroupParams> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for t in sweep_tuples() {
        let c = canonicalize(&t).unwrap().canonical;
        if seen.insert(c) {
            out.push(c);
        }
    }
    out
}

/// Criterion 1: for p ∈ {3,5}, every canonical tuple labelled G1/G2/G3 has
/// oracle invariants equal to the tabulated forms
/// Z_{p^α}^(5) / Z_{p^α}^(2)⊕Z_{p^γ}^(3) / Z_{p^α}⊕Z_{p^β}⊕Z_{p^σ}^(3).
#[test]
fn criterion_1_capable_odd_closed_forms() {
    let mut checked = 0usize;
    for &p in &[3u64, 5] {
        for t in admissible_tuples(p, SWEEP_MAX_EXP) {
            let class = classify(&t).unwrap();
            let c = class.canonical;
            let expected = match class.label.unwrap() {
                Label::G1 => AbelianInvariants::from_prime_powers(p, &[c.alpha; 5]),
                Label::G2 => AbelianInvariants::from_prime_powers(
                    p,
                    &[c.alpha, c.alpha, c.gamma, c.gamma, c.gamma],
                ),
                Label::G3 => AbelianInvariants::from_prime_powers(
                    p,
                    &[c.alpha, c.beta, c.sigma, c.sigma, c.sigma],
                ),
                _ => continue,
            };
            let oracle = multiplier_of(&c).unwrap();
            assert_eq!(
                oracle, expected,
                "criterion 1: FAIL at p={p}, canonical {c}"
            );
            checked += 1;
        }
    }
    assert!(checked > 0);
    println!("criterion 1: PASS — {checked} capable odd-p instances match exactly");
}

/// Criterion 2: every K1–K14 instance in the sweep has oracle invariants
/// equal to the tabulated closed form, exactly.
///
/// Known red: the tabulated K8 entry disagrees with the from-scratch
/// computation. The K8 quotient chain behind the tabulated value runs one
/// step past the first 2-capable quotient (the α = β+1 group), which
/// criterion 5 independently certifies to have a trivial 2-epicenter; the
/// correct value is the multiplier of that quotient, Z_{2^{β−1}}^(2) ⊕
/// Z_{2^β} ⊕ Z_{2^{β+1}}^(2). The oracle itself is cross-validated in
/// tests/oracle_independence.rs. The suite reports the discrepancy instead
/// of masking it.
#[test]
fn criterion_2_noncapable_catalogue() {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for t in sweep_tuples() {
        let class = classify(&t).unwrap();
        let label = class.label.unwrap();
        if label.is_capable_label() {
            continue;
        }
        let closed = closed_form_multiplier(&t)
            .unwrap()
            .expect("every K label has a closed form");
        let oracle = multiplier_of(&t).unwrap();
        checked += 1;
        if closed != oracle {
            failures.push(format!(
                "{label} p={} tuple={} canonical={}: closed {closed} vs oracle {oracle}",
                t.p, t, class.canonical
            ));
        }
    }
    failures.sort();
    failures.dedup();
    assert!(checked > 0);
    assert!(
        failures.is_empty(),
        "criterion 2: FAIL — {} disagreement(s) out of {checked} instances:\n{}",
        failures.len(),
        failures.join("\n")
    );
    println!("criterion 2: PASS — {checked} noncapable instances match exactly");
}

/// Criterion 2, pinned instance: K8 at p=2, α=3, β=1 must give [2,4].
#[test]
fn criterion_2_k8_pinned_value() {
    let t = GroupParams::new(2, 3, 1, 1, 1, 1);
    assert_eq!(classify(&t).unwrap().label, Some(Label::K8));
    let oracle = multiplier_of(&t).unwrap();
    let pinned = AbelianInvariants::from_prime_powers(2, &[1, 2]);
    assert_eq!(
        oracle, pinned,
        "criterion 2 (K8 pin): FAIL — oracle gives {oracle}, pinned value {pinned}"
    );
    println!("criterion 2 (K8 pin): PASS");
}

/// Criterion 3: is_capable and is_2_capable agree on every admissible tuple,
/// with the two predicates implemented from different statements.
#[test]
fn criterion_3_capability_equivalence() {
    let tuples = sweep_tuples();
    for t in &tuples {
        assert_eq!(
            is_capable(t).unwrap(),
            is_2_capable(t).unwrap(),
            "criterion 3: FAIL at p={} {t}",
            t.p
        );
    }
    println!(
        "criterion 3: PASS — capability and 2-capability agree on {} tuples",
        tuples.len()
    );
}

/// The label predicates written out independently of theory::identify:
/// all labels whose defining conditions a canonical tuple satisfies.
fn matching_labels(t: &GroupParams) -> Vec<Label> {
    let (p, a, b, g, r, s) = (t.p, t.alpha, t.beta, t.gamma, t.rho, t.sigma);
    let d_bg = u32::from(b == g);
    let mut out = Vec::new();
    let mut push = |cond: bool, l: Label| {
        if cond {
            out.push(l);
        }
    };
    if p != 2 {
        push(a == b && b == g && r == g && s == g, Label::G1);
        push(a == b && b > g && r == g && s == g, Label::G2);
        push(a > b && r == g && s < g && a - b == g - s, Label::G3);
        push(a > b && s == g && r < g, Label::K1);
        push(a > b && s == g && r == g, Label::K2);
        push(a > b && r == g && s < g && a - b < g - s, Label::K3);
        push(a > b && s < r && r <= g && (r - s) < (a - b), Label::K4);
        push(a == b && s == g && r < g, Label::K5);
    } else {
        push(a == b && b == g && r == g && s == g, Label::G4);
        push(a == b + 1 && b == g && r == g && s == g, Label::G5);
        push(a == b && b > g && r == g && s == g, Label::G6);
        push(
            a > b && r == g && s < g && a - b == g - s && a - b > d_bg,
            Label::G7,
        );
        push(a > b && s == g && r < g, Label::K6);
        push(a > b && b > g && r == g && s == g, Label::K7);
        push(a > b + 1 && b == g && r == g && s == g, Label::K8);
        push(
            a > b && r == g && s < g && (a - b < g - s || (a - b == g - s && a - b == d_bg)),
            Label::K9,
        );
        push(a > b && s < r && r <= g && (r - s) < (a - b), Label::K10);
        push(a == b && b > g && s == g && r < g, Label::K11);
        push(a == b && b == g && s == g && r + 1 < g, Label::K13);
        push(a == b && b == g && r + 1 == g && s + 1 == g, Label::K14);
    }
    out
}

/// Criterion 4: canonicalize is idempotent and identify assigns exactly one
/// label to every canonical tuple, with G-labels ⇔ capable.
#[test]
fn criterion_4_partition() {
    let mut canonical_count = 0usize;
    for t in sweep_tuples() {
        let c1 = canonicalize(&t).unwrap();
        let c2 = canonicalize(&c1.canonical).unwrap();
        assert_eq!(
            c1.canonical, c2.canonical,
            "criterion 4: FAIL (idempotency)"
        );
        assert_eq!(c1.family, c2.family, "criterion 4: FAIL (family stability)");
    }
    for c in canonical_sweep() {
        canonical_count += 1;
        let label = classify(&c).unwrap().label.unwrap();
        let matches = matching_labels(&c);
        assert_eq!(
            matches,
            vec![label],
            "criterion 4: FAIL — labels {matches:?} for canonical {c} (p={})",
            c.p
        );
        assert_eq!(
            label.is_capable_label(),
            is_capable(&c).unwrap(),
            "criterion 4: FAIL — label/capability mismatch at {c} (p={})",
            c.p
        );
    }
    println!("criterion 4: PASS — partition over {canonical_count} canonical tuples");
}

/// Criterion 5: witnesses of noncapable groups pass the oracle membership
/// test; for capable groups of order ≤ 3^6 every nontrivial central cyclic
/// subgroup fails it.
#[test]
fn criterion_5_epicenter_soundness() {
    let bound = BigInt::from(729);
    let mut witnesses = 0usize;
    let mut refuted = 0usize;
    for c in canonical_sweep() {
        if !is_capable(&c).unwrap() {
            let w = epicenter_witness(&c)
                .unwrap()
                .expect("noncapable groups have a witness");
            assert!(
                !w.is_identity(),
                "criterion 5: FAIL — trivial witness for {c} (p={})",
                c.p
            );
            assert!(
                epicenter_membership(&c, &w).unwrap(),
                "criterion 5: FAIL — witness {w} rejected for {c} (p={})",
                c.p
            );
            witnesses += 1;
        } else {
            assert!(epicenter_witness(&c).unwrap().is_none());
            if group_order(&c) > bound {
                continue;
            }
            for d in elements(&c) {
                if d.is_identity() || !is_central(&c, &d) {
                    continue;
                }
                assert!(
                    !epicenter_membership(&c, &d).unwrap(),
                    "criterion 5: FAIL — capable {c} (p={}) admitted central {d}",
                    c.p
                );
                refuted += 1;
            }
        }
    }
    println!(
        "criterion 5: PASS — {witnesses} witnesses confirmed, \
         {refuted} central subgroups of capable groups refuted"
    );
}

/// Criterion 6: 10^4 randomized engine law checks with exponents in
/// [−20, 20]; the binomial expansion law up to n = 6; 10^3 SNF certificates
/// on random 5×k matrices with entries in [−50, 50].
#[test]
fn criterion_6_engine_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e696c6d756c74);
    let random_nf = |rng: &mut ChaCha8Rng| {
        let mut e = NfElement::identity();
        for i in 0..8 {
            e.exponents[i] = BigInt::from(rng.random_range(-20i64..=20));
        }
        e
    };

    for _ in 0..10_000 {
        let x = random_nf(&mut rng);
        let y = random_nf(&mut rng);
        let z = random_nf(&mut rng);
        assert_eq!(
            hall::mul(&hall::mul(&x, &y), &z),
            hall::mul(&x, &hall::mul(&y, &z)),
            "criterion 6: FAIL (associativity)"
        );
        assert!(
            hall::mul(&x, &hall::inv(&x)).is_identity(),
            "criterion 6: FAIL (inverse)"
        );
        assert_eq!(hall::inv(&hall::inv(&x)), x, "criterion 6: FAIL (inv inv)");
        let m = BigInt::from(rng.random_range(-20i64..=20));
        let n = BigInt::from(rng.random_range(-20i64..=20));
        assert_eq!(
            hall::pow(&x, &(&m + &n)),
            hall::mul(&hall::pow(&x, &m), &hall::pow(&x, &n)),
            "criterion 6: FAIL (power law)"
        );
    }

    // binomial expansion law, by repeated multiplication
    let a = NfElement::generator(Generator::A);
    let b = NfElement::generator(Generator::B);
    let mut an = NfElement::identity();
    for n in 1i64..=6 {
        an = hall::mul(&an, &a);
        let n_big = BigInt::from(n);
        let mut expect = NfElement::identity();
        expect.exponents[hall::slot::C] = n_big.clone();
        expect.exponents[hall::slot::CA] = binomial(&n_big, 2);
        expect.exponents[hall::slot::CAA] = binomial(&n_big, 3);
        assert_eq!(
            hall::comm(&an, &b),
            expect,
            "criterion 6: FAIL (binomial expansion at n={n})"
        );
    }

    for round in 0..1_000 {
        let k = rng.random_range(1usize..=8);
        let m: Vec<Vec<BigInt>> = (0..5)
            .map(|_| {
                (0..k)
                    .map(|_| BigInt::from(rng.random_range(-50i64..=50)))
                    .collect()
            })
            .collect();
        let cert = smith_with_certificate(&m, k);
        assert_eq!(
            determinant(&cert.u).abs(),
            BigInt::from(1),
            "criterion 6: FAIL (U not unimodular, round {round})"
        );
        assert_eq!(
            determinant(&cert.v).abs(),
            BigInt::from(1),
            "criterion 6: FAIL (V not unimodular, round {round})"
        );
        // U·M·V must be the diagonal, with the divisibility chain.
        let um = mat_mul(&cert.u, &m);
        let umv = mat_mul(&um, &cert.v);
        for (i, row) in umv.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if i == j && i < cert.diagonal.len() {
                    cert.diagonal[i].clone()
                } else {
                    BigInt::from(0)
                };
                assert_eq!(x, &expected, "criterion 6: FAIL (SNF shape, round {round})");
            }
        }
        for w in cert.diagonal.windows(2) {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "criterion 6: FAIL (divisibility, round {round})"
            );
        }
    }
    println!("criterion 6: PASS — 10^4 engine law checks, 10^3 SNF certificates");
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

/// Criterion 7: the diagonal-element order formula on capable G3-type
/// tuples, and center generators versus exhaustive centralizer enumeration
/// for every group of order ≤ 3^6.
#[test]
fn criterion_7_order_and_center_facts() {
    let mut order_checks = 0usize;
    for c in canonical_sweep() {
        if classify(&c).unwrap().label != Some(Label::G3) {
            continue;
        }
        let p = BigInt::from(c.p);
        for k in 0..(c.alpha - c.beta) {
            for i_unit in 1..c.p {
                for j_unit in 1..c.p {
                    let e = c.p_pow(c.beta + k);
                    let d = g_mul(
                        &c,
                        &g_pow(&c, &gen_a(&c), &(&e * BigInt::from(i_unit))),
                        &g_pow(&c, &gen_b(&c), &(&e * BigInt::from(j_unit))),
                    );
                    assert!(!d.is_identity());
                    let expected = p.pow(c.alpha - c.beta - k);
                    assert_eq!(
                        element_order(&c, &d),
                        expected,
                        "criterion 7: FAIL (order formula) at {c} k={k}"
                    );
                    order_checks += 1;
                }
            }
        }
    }
    assert!(order_checks > 0);

    let bound = BigInt::from(729);
    let mut center_checks = 0usize;
    for t in canonical_sweep() {
        if group_order(&t) > bound {
            continue;
        }
        let all = elements(&t);
        for s in 0..120usize {
            let x = &all[(7 * s + 1) % all.len()];
            let y = &all[(13 * s + 5) % all.len()];
            let z = &all[(29 * s + 11) % all.len()];
            assert_eq!(
                g_mul(&t, &g_mul(&t, x, y), z),
                g_mul(&t, x, &g_mul(&t, y, z)),
                "criterion 7: FAIL (associativity) at {t} (p={})",
                t.p
            );
            assert!(
                (group_order(&t) % element_order(&t, x)).is_zero(),
                "criterion 7: FAIL (Lagrange) at {t} (p={})",
                t.p
            );
        }
        let centralizer: std::collections::HashSet<GroupElement> =
            all.into_iter().filter(|x| is_central(&t, x)).collect();
        // closure of the three returned generators
        let gens = groups::center(&t);
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![GroupElement::identity()];
        seen.insert(GroupElement::identity());
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = g_mul(&t, &x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(
            seen, centralizer,
            "criterion 7: FAIL (center) at {t} (p={})",
            t.p
        );
        center_checks += 1;
    }
    println!(
        "criterion 7: PASS — {order_checks} order-formula checks, \
         {center_checks} center enumerations"
    );
}
