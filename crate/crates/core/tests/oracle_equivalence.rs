#![cfg(feature = "oracle")]

//! Dual-route checks: every fast path is compared against an independent
//! slow reference implementation over exhaustive small ranges.

use heis_core::jacobi_trudi::{straighten, SignedSchur};
use heis_core::kronecker::kronecker_coefficient;
use heis_core::lr::schur_product;
use heis_core::oracle::{
    decompose_into_schur, jacobi_trudi_determinant, kronecker_via_perm_modules, schur_poly,
};
use heis_core::partitions::{partitions_of, IntSequence, Partition};

fn all_up_to(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

#[test]
fn lr_matches_polynomial_oracle() {
    // full Schur expansions agree with polynomial multiplication followed by
    // leading-monomial elimination, for |lambda| + |mu| <= 8
    for lambda in all_up_to(8) {
        for mu in all_up_to(8 - lambda.size()) {
            let vars = ((lambda.size() + mu.size()) as usize).max(1);
            let product = schur_poly(&lambda, vars)
                .unwrap()
                .mul(&schur_poly(&mu, vars).unwrap());
            let decomposed = decompose_into_schur(product).unwrap();
            let fast = schur_product(&lambda, &mu).unwrap();
            assert_eq!(decomposed.len(), fast.len(), "at {lambda} {mu}");
            for (nu, c) in decomposed {
                assert_eq!(fast.coefficient(&nu), c, "at {lambda} {mu} {nu}");
            }
        }
    }
}

#[test]
fn kronecker_matches_permutation_module_oracle() {
    for n in 0..=5u32 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                for nu in partitions_of(n) {
                    assert_eq!(
                        kronecker_coefficient(&lambda, &mu, &nu).unwrap(),
                        kronecker_via_perm_modules(&lambda, &mu, &nu).unwrap(),
                        "at {lambda} {mu} {nu}"
                    );
                }
            }
        }
    }
}

#[test]
#[ignore = "slow full n = 6 sweep; run with --ignored"]
fn kronecker_matches_permutation_module_oracle_n6() {
    for lambda in partitions_of(6) {
        for mu in partitions_of(6) {
            for nu in partitions_of(6) {
                assert_eq!(
                    kronecker_coefficient(&lambda, &mu, &nu).unwrap(),
                    kronecker_via_perm_modules(&lambda, &mu, &nu).unwrap(),
                    "at {lambda} {mu} {nu}"
                );
            }
        }
    }
}

fn check_straighten_against_determinant(entries: &[i64], vars: usize) {
    let seq = IntSequence::new(entries.to_vec());
    let det = jacobi_trudi_determinant(&seq, vars).unwrap();
    match straighten(&seq) {
        SignedSchur::Zero => {
            assert!(det.is_zero(), "{seq} should straighten to zero");
        }
        SignedSchur::Plus(shape) => {
            assert_eq!(det, schur_poly(&shape, vars).unwrap(), "{seq} -> +{shape}");
        }
        SignedSchur::Minus(shape) => {
            let mut negated = heis_core::oracle::MonomialPolynomial::zero(vars);
            negated.add_scaled(&schur_poly(&shape, vars).unwrap(), -1);
            assert_eq!(det, negated, "{seq} -> -{shape}");
        }
    }
}

fn entry_grid(length: usize, each: &mut dyn FnMut(&[i64])) {
    let mut entries = vec![0i64; length];
    fn walk(pos: usize, entries: &mut Vec<i64>, each: &mut dyn FnMut(&[i64])) {
        if pos == entries.len() {
            each(entries);
            return;
        }
        for e in -4..=6i64 {
            entries[pos] = e;
            walk(pos + 1, entries, each);
        }
    }
    walk(0, &mut entries, each);
}

#[test]
fn straighten_matches_determinant_lengths_1_to_3() {
    for length in 1..=3usize {
        entry_grid(length, &mut |entries| {
            check_straighten_against_determinant(entries, length);
        });
    }
}

#[test]
fn straighten_matches_determinant_length_4() {
    entry_grid(4, &mut |entries| {
        check_straighten_against_determinant(entries, 4);
    });
}

#[test]
fn straighten_matches_determinant_in_eight_variables() {
    // degree-bounded subsample at the wider variable count
    for length in 1..=4usize {
        entry_grid(length, &mut |entries| {
            let total: i64 = entries.iter().sum();
            if (0..=6).contains(&total) {
                check_straighten_against_determinant(entries, 8);
            }
        });
    }
}
