use lattice_det::diagram::{delta, normalize, transpose, Cell, LatticeDiagram, SignedDiagramSum};
use lattice_det::perm::{compose, sign};
use lattice_det::poly::{Monomial, Polynomial, Var};
use lattice_det::symfun;
use lattice_det::tableau::ColumnTableauFamily;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn polynomial(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..4, nvars),
            prop::collection::vec(0u32..4, nvars),
            -9i64..10,
            1i64..6,
        ),
        0..6,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().map(|(x, y, n, d)| {
                (
                    Monomial::new(x, y).unwrap(),
                    BigRational::new(BigInt::from(n), BigInt::from(d)),
                )
            }),
        )
        .unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn raw_cells(max: usize) -> impl Strategy<Value = Vec<Cell>> {
    prop::collection::vec(
        (-1i64..4, 0i64..4).prop_map(|(p, q)| Cell::new(p, q)),
        1..=max,
    )
}

/// Distinct cells in the positive quadrant, in arbitrary order.
fn valid_cells(max: usize) -> impl Strategy<Value = Vec<Cell>> {
    prop::collection::btree_set((0i64..4, 0i64..4), 1..=max)
        .prop_map(|s| {
            s.into_iter()
                .map(|(p, q)| Cell::new(p, q))
                .collect::<Vec<_>>()
        })
        .prop_shuffle()
}

fn brute_parity(cells: &[Cell]) -> i64 {
    let mut inv = 0;
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if cells[i] > cells[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

proptest! {
    #[test]
    fn addition_is_exact(a in polynomial(3), b in polynomial(3)) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn partials_commute(f in polynomial(3), i in 0usize..6, j in 0usize..6) {
        let var = |k: usize| if k < 3 { Var::x(k) } else { Var::y(k - 3) };
        let ij = f.partial(var(i)).unwrap().partial(var(j)).unwrap();
        let ji = f.partial(var(j)).unwrap().partial(var(i)).unwrap();
        prop_assert_eq!(ij, ji);
    }

    #[test]
    fn diagonal_action_is_a_group_action(f in polynomial(3), s in permutation(3), t in permutation(3)) {
        let stepwise = f.diagonal_action(&t).unwrap().diagonal_action(&s).unwrap();
        prop_assert_eq!(stepwise, f.diagonal_action(&compose(&s, &t)).unwrap());
    }

    #[test]
    fn differentiation_lowers_bidegree(f in polynomial(2), op in polynomial(2)) {
        let g = f.apply_diff_operator(&op).unwrap();
        for (m, _) in g.terms() {
            let from_some_pair = f.terms().any(|(a, _)| op.terms().any(|(b, _)| {
                a.degree_x() >= b.degree_x()
                    && a.degree_y() >= b.degree_y()
                    && m.degree_x() == a.degree_x() - b.degree_x()
                    && m.degree_y() == a.degree_y() - b.degree_y()
            }));
            prop_assert!(from_some_pair);
        }
        if let (Some((fx, fy)), Some((ox, oy))) = (f.bihomogeneous_degree(), op.bihomogeneous_degree()) {
            if let Some(bideg) = g.bihomogeneous_degree() {
                prop_assert_eq!(bideg, (fx - ox, fy - oy));
            }
        }
    }

    #[test]
    fn polynomial_text_round_trips(f in polynomial(3)) {
        prop_assert_eq!(Polynomial::parse(&f.to_string(), 3).unwrap(), f);
    }

    #[test]
    fn determinant_is_alternating(cells in valid_cells(4), s in any::<prop::sample::Index>()) {
        let (l, _) = normalize(cells);
        let n = l.len();
        let perms = lattice_det::perm::signed_permutations(n);
        let (sigma, sgn) = &perms[s.index(perms.len())];
        let f = delta(&l).unwrap();
        let expected = if *sgn > 0 { f.clone() } else { -&f };
        prop_assert_eq!(f.diagonal_action(sigma).unwrap(), expected);
        let (p, q) = l.bidegree();
        prop_assert!(f.terms().all(|(m, _)| (m.degree_x() as i64, m.degree_y() as i64) == (p, q)));
    }

    #[test]
    fn determinant_vanishes_iff_epsilon_is_zero(cells in raw_cells(4)) {
        let (l, _) = normalize(cells);
        prop_assert_eq!(delta(&l).unwrap().is_zero(), !l.epsilon());
    }

    #[test]
    fn sort_sign_is_inversion_parity(cells in valid_cells(6)) {
        let expected = brute_parity(&cells);
        let (_, s) = normalize(cells.clone());
        prop_assert_eq!(s, expected);
        let idx: Vec<usize> = {
            let mut sorted = cells.clone();
            sorted.sort();
            cells.iter().map(|c| sorted.iter().position(|d| d == c).unwrap()).collect()
        };
        prop_assert_eq!(sign(&idx), expected);
    }

    #[test]
    fn transpose_is_a_signed_involution(cells in valid_cells(5)) {
        let (l, _) = normalize(cells);
        let (t, s1) = transpose(&l);
        let (back, s2) = transpose(&t);
        prop_assert_eq!(back, l.clone());
        prop_assert_eq!(s1 * s2, 1);
        let lhs = delta(&t).unwrap().scale(&lattice_det::poly::rat(s1));
        prop_assert_eq!(lhs, delta(&l).unwrap().swap_axes());
    }

    #[test]
    fn diagram_text_round_trips(cells in raw_cells(5)) {
        let (l, _) = normalize(cells);
        prop_assert_eq!(l.to_string().parse::<LatticeDiagram>().unwrap(), l);
    }

    #[test]
    fn sum_text_round_trips(entries in prop::collection::vec((valid_cells(3), -3i64..4), 0..5)) {
        let mut s = SignedDiagramSum::new();
        for (cells, c) in entries {
            s.add_cells(cells, c);
        }
        prop_assert_eq!(s.to_string().parse::<SignedDiagramSum>().unwrap(), s);
    }

    #[test]
    fn tableau_text_round_trips(cols in prop::collection::vec(prop::collection::btree_set(1usize..8, 0..4), 1..4)) {
        let columns: Vec<Vec<usize>> = cols.into_iter().map(|c| c.into_iter().collect()).collect();
        let t = ColumnTableauFamily::new(columns, 7).unwrap();
        prop_assert_eq!(ColumnTableauFamily::parse(&t.to_string(), Some(7)).unwrap(), t);
    }

    #[test]
    fn symmetric_functions_are_symmetric(k in 1usize..4, s in permutation(4)) {
        for f in [symfun::power_sum(k, 4), symfun::elementary(k as i64, 4), symfun::homogeneous(k, 4)] {
            prop_assert_eq!(f.diagonal_action(&s).unwrap(), f.clone());
        }
    }
}
