//! Straightening of integer sequences to signed Schur functions, and the
//! alternating-sum recovery of Aguiar coefficients from stable ones.
//!
//! Straightening adds the staircase `(l-1, ..., 1, 0)` to the sequence: a
//! repeated or negative value kills the determinant, otherwise sorting the
//! values descending contributes the sign of the sorting permutation and the
//! sorted values minus the staircase form the output partition.

use crate::error::{Error, Result};
use crate::lr::SchurExpansion;
use crate::partitions::{IntSequence, Partition};
use crate::stability::stable_aguiar;

/// Zero or a signed Schur function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignedSchur {
    Zero,
    Plus(Partition),
    Minus(Partition),
}

impl SignedSchur {
    pub fn sign(&self) -> i64 {
        match self {
            SignedSchur::Zero => 0,
            SignedSchur::Plus(_) => 1,
            SignedSchur::Minus(_) => -1,
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            SignedSchur::Zero => None,
            SignedSchur::Plus(p) | SignedSchur::Minus(p) => Some(p),
        }
    }
}

/// Normalizes `s_seq`, interpreted through the h-matrix determinant, to zero
/// or plus/minus a genuine Schur function. The given length is authoritative:
/// `(0,2,1,1)` and `(2,1,1)` straighten through different staircases.
pub fn straighten(seq: &IntSequence) -> SignedSchur {
    let l = seq.len();
    let values: Vec<(i64, usize)> = seq
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e + (l - 1 - i) as i64, i))
        .collect();
    if values.iter().any(|&(v, _)| v < 0) {
        return SignedSchur::Zero;
    }
    let mut sorted = values.clone();
    sorted.sort_by_key(|&(v, _)| std::cmp::Reverse(v));
    if sorted.windows(2).any(|w| w[0].0 == w[1].0) {
        return SignedSchur::Zero;
    }
    // parity of the sorting permutation, by counting inversions
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i].0 < values[j].0 {
                inversions += 1;
            }
        }
    }
    let parts: Vec<u32> = sorted
        .iter()
        .enumerate()
        .map(|(j, &(v, _))| (v - (l - 1 - j) as i64) as u32)
        .collect();
    let partition = Partition::new(parts).expect("sorted staircase difference");
    if inversions.is_multiple_of(2) {
        SignedSchur::Plus(partition)
    } else {
        SignedSchur::Minus(partition)
    }
}

/// Applies straightening termwise to a raw integer combination of sequences,
/// accumulating signs, and returns the canonical Schur expansion.
pub fn straighten_expansion(raw: &[(IntSequence, i64)]) -> Result<SchurExpansion> {
    let mut degree: Option<i64> = None;
    for (seq, _) in raw {
        let total = seq.total();
        match degree {
            None => degree = Some(total),
            Some(d) if d != total => return Err(Error::MixedSizes(d, total)),
            _ => {}
        }
    }
    let degree = degree.unwrap_or(0).max(0) as u32;
    let mut out = SchurExpansion::new(degree);
    for (seq, coefficient) in raw {
        match straighten(seq) {
            SignedSchur::Zero => {}
            SignedSchur::Plus(p) => out.add_term(p, *coefficient)?,
            SignedSchur::Minus(p) => {
                out.add_term(p, coefficient.checked_neg().ok_or(Error::Overflow)?)?
            }
        }
    }
    Ok(out)
}

/// Recovers the Aguiar coefficient from stable ones by the alternating sum
/// over the dagger resequencings of `nu`. Requires `|nu| >= |lambda| >= |mu|`.
pub fn recover_aguiar(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    let (ln, mn, nn) = (
        i64::from(lambda.size()),
        i64::from(mu.size()),
        i64::from(nu.size()),
    );
    if !(nn >= ln && ln >= mn) {
        return Err(Error::RecoveryHypothesis {
            lambda: ln,
            mu: mn,
            nu: nn,
        });
    }
    // the printed limit degenerates to an empty sum only for the all-empty
    // triple, where the i = 1 term alone is correct
    let limit = (4 * nn - ln - mn).max(1);
    let lam_seq = IntSequence::from(lambda);
    let mu_seq = IntSequence::from(mu);
    let mut total: i64 = 0;
    for i in 1..=limit as usize {
        let term = stable_aguiar(&lam_seq, &mu_seq, &nu.dagger(i))?;
        let signed = if i % 2 == 1 { term } else { -term };
        total = total.checked_add(signed).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> IntSequence {
        s.parse().unwrap()
    }

    #[test]
    fn straighten_published_identities() {
        assert_eq!(straighten(&seq("1,3")), SignedSchur::Minus(p("2,2")));
        assert_eq!(straighten(&seq("0,3,1")), SignedSchur::Minus(p("2,1,1")));
        assert_eq!(
            straighten(&seq("0,2,1,1")),
            SignedSchur::Minus(p("1,1,1,1"))
        );
        assert_eq!(straighten(&seq("1,2,1")), SignedSchur::Zero);
        assert_eq!(straighten(&seq("0,2,2")), SignedSchur::Zero);
        assert_eq!(straighten(&seq("0,1,1,1,1")), SignedSchur::Zero);
    }

    #[test]
    fn straighten_fixes_partitions() {
        for n in 0..=6u32 {
            for q in crate::partitions::partitions_of(n) {
                assert_eq!(straighten(&IntSequence::from(&q)), SignedSchur::Plus(q));
            }
        }
    }

    #[test]
    fn straighten_length_sensitivity() {
        // a leading zero shifts the staircase, but a partition stays itself
        assert_eq!(straighten(&seq("0,2,1")), SignedSchur::Minus(p("1,1,1")));
        assert_eq!(straighten(&seq("2,1,0")), SignedSchur::Plus(p("2,1")));
        assert_eq!(straighten(&seq("-1")), SignedSchur::Zero);
        assert_eq!(straighten(&seq("-")), SignedSchur::Plus(Partition::empty()));
    }

    #[test]
    fn expansion_linearity() {
        let got = straighten_expansion(&[(seq("1,3"), 2)]).unwrap();
        assert_eq!(got.coefficient(&p("2,2")), -2);
        assert_eq!(got.len(), 1);

        let got = straighten_expansion(&[(seq("2,1"), 1)]).unwrap();
        assert_eq!(got.coefficient(&p("2,1")), 1);

        assert!(straighten_expansion(&[(seq("2"), 1), (seq("1"), 1)]).is_err());
    }

    #[test]
    fn published_eleven_term_recovery() {
        // raw stable data for the lowest component at n = 4
        let raw = vec![
            (seq("4"), 1),
            (seq("3,1"), 3),
            (seq("2,2"), 4),
            (seq("2,1,1"), 4),
            (seq("1,3"), 2),
            (seq("1,2,1"), 5),
            (seq("1,1,1,1"), 3),
            (seq("0,3,1"), 1),
            (seq("0,2,2"), 1),
            (seq("0,2,1,1"), 2),
            (seq("0,1,1,1,1"), 1),
        ];
        let got = straighten_expansion(&raw).unwrap();
        let want: SchurExpansion = [
            (p("4"), 1),
            (p("3,1"), 3),
            (p("2,2"), 2),
            (p("2,1,1"), 3),
            (p("1,1,1,1"), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn recover_published_example() {
        assert_eq!(
            recover_aguiar(&p("2,1,1"), &p("2,1"), &p("2,2")).unwrap(),
            2
        );
        assert_eq!(recover_aguiar(&p("1"), &p("1"), &p("2")).unwrap(), 1);
        assert_eq!(
            recover_aguiar(&p("2,1,1"), &p("2,1"), &p("4,2,1")).unwrap(),
            1
        );
    }

    #[test]
    fn recovery_matches_direct_evaluation_on_small_inputs() {
        use crate::heisenberg::aguiar_coefficient as direct;
        let e = Partition::empty();
        assert_eq!(recover_aguiar(&e, &e, &e).unwrap(), 1);
        assert_eq!(
            recover_aguiar(&p("2"), &p("1"), &p("2,1")).unwrap(),
            direct(&p("2"), &p("1"), &p("2,1")).unwrap()
        );
    }

    #[test]
    fn hypothesis_is_enforced() {
        let err = recover_aguiar(&p("1"), &p("2,1"), &p("3,1")).unwrap_err();
        assert!(matches!(err, Error::RecoveryHypothesis { .. }));
        let err = recover_aguiar(&p("2,1"), &p("1"), &p("1")).unwrap_err();
        assert!(matches!(err, Error::RecoveryHypothesis { .. }));
    }
}
