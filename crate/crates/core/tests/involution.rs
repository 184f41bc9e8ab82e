use std::collections::BTreeSet;

use lattice_det::operators::{epsilon_prime, moved_pair_implication_holds};
use lattice_det::oracle::enumerate_universe;
use lattice_det::partition::Partition;
use lattice_det::tableau::{enumerate_cs_tableaux, psi, psi_explained, PsiOutcome, ShapeOrbit};

/// Every λ with at most four cells and at most three columns.
fn shapes() -> Vec<Partition> {
    Partition::all_up_to(4)
        .into_iter()
        .filter(|l| l.parts()[0] <= 3)
        .collect()
}

#[test]
fn psi_is_a_sign_reversing_involution() {
    for lambda in shapes() {
        let orbit = ShapeOrbit::new(&lambda);
        for n in 1..=4 {
            let mut fixed = BTreeSet::new();
            for (t, sign) in orbit.families(n) {
                let outcome = psi_explained(&t, &orbit).unwrap();
                let image = outcome.image(&t);
                assert_eq!(&psi(image, &orbit).unwrap(), &t, "λ={lambda} n={n} T={t}");
                assert_eq!(image.word(), t.word());
                assert_eq!(
                    t.is_column_strict(),
                    t.is_column_strict_by_pairing(),
                    "T={t}"
                );
                match &outcome {
                    PsiOutcome::Fixed => {
                        assert!(t.is_column_strict());
                        assert!(t.shape().is_partition_shape());
                        assert_eq!(sign, 1);
                        fixed.insert(t.clone());
                    }
                    PsiOutcome::Moved { j, image, .. } => {
                        assert!(!t.is_column_strict());
                        let before = orbit.lookup(&t.shape()).unwrap();
                        let after = orbit.lookup(&image.shape()).unwrap();
                        assert_eq!(after.sign, -before.sign);
                        let mut swapped = before.sigma.clone();
                        swapped.swap(*j, j + 1);
                        assert_eq!(after.sigma, swapped);
                    }
                }
            }
            let expected: BTreeSet<_> = enumerate_cs_tableaux(&lambda, n).into_iter().collect();
            assert_eq!(fixed, expected, "λ={lambda} n={n}");
        }
    }
}

#[test]
fn paired_terms_cancel() {
    let universe = enumerate_universe(4, 3, 3);
    for lambda in shapes() {
        let orbit = ShapeOrbit::new(&lambda);
        for n in 1..=4 {
            let families = orbit.families(n);
            for l in universe.iter().filter(|l| l.len() == n) {
                for (t, _) in &families {
                    let PsiOutcome::Moved { j, image, .. } = psi_explained(t, &orbit).unwrap()
                    else {
                        continue;
                    };
                    let a = epsilon_prime(t, l).unwrap();
                    let b = epsilon_prime(&image, l).unwrap();
                    assert_eq!(a.epsilon_prime, b.epsilon_prime, "L=[{l}] T={t} T′={image}");
                    assert_eq!(a.result, b.result);
                    assert!(
                        moved_pair_implication_holds(t, &image, j, l),
                        "L=[{l}] T={t}"
                    );
                }
            }
        }
    }
}
