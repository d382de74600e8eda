//! Block-level invariants of the decompositions: idempotency, centrality,
//! orthogonality, partition of unity and ideal dimensions.

use wedderburn::blocks::Decomposition;
use wedderburn::{FieldSpec, GroupKind};

const CASES: [(u64, usize); 5] = [(5, 3), (7, 3), (5, 4), (7, 4), (7, 5)];

fn check(kind: GroupKind, p: u64, n: usize) {
    let dec = Decomposition::compute(kind, n, FieldSpec::prime(p).unwrap()).unwrap();
    let alg = dec.algebra();
    let es: Vec<_> = dec.blocks().iter().map(|b| b.generator.clone().expect("prime-field idempotent")).collect();
    let mut sum = alg.zero();
    for (i, (e, block)) in es.iter().zip(dec.blocks()).enumerate() {
        assert!(alg.is_idempotent(e), "{kind} {n} {p} block {}", block.label);
        assert!(alg.is_central(e), "{kind} {n} {p} block {}", block.label);
        assert_eq!(alg.ideal_dimension(e), block.fq_dimension, "{kind} {n} {p} block {}", block.label);
        for f in &es[i + 1..] {
            assert!(alg.mul(e, f).unwrap().is_zero());
            assert!(alg.mul(f, e).unwrap().is_zero());
        }
        sum = alg.add(&sum, e).unwrap();
    }
    assert_eq!(sum, alg.one());
    assert_eq!(dec.blocks().iter().map(|b| b.fq_dimension).sum::<usize>(), alg.order());
}

#[test]
fn symmetric_group_blocks() {
    for (p, n) in CASES {
        check(GroupKind::Sn, p, n);
    }
}

#[test]
fn alternating_group_blocks() {
    for (p, n) in CASES {
        check(GroupKind::An, p, n);
    }
}

#[test]
fn larger_degrees() {
    check(GroupKind::An, 7, 6);
    check(GroupKind::An, 11, 6);
    check(GroupKind::Sn, 11, 6);
}

#[test]
fn split_block_count_follows_quadratic_character() {
    // (3,1,1) has p_λ = 5: split over F_11 (4² = 5), merged over F_7.
    let count = |p| Decomposition::compute(GroupKind::An, 5, FieldSpec::prime(p).unwrap()).unwrap().blocks().len();
    assert_eq!(count(7), 4);
    assert_eq!(count(11), 5);
    let over_49 = Decomposition::compute(GroupKind::An, 5, FieldSpec::new(7, 2).unwrap()).unwrap();
    assert_eq!(over_49.blocks().len(), 5);
    assert_eq!(over_49.summary(), "F_49 ⊕ M_4(F_49) ⊕ M_5(F_49) ⊕ M_3(F_49) ⊕ M_3(F_49)");
}
