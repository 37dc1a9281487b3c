use msw::exactcore::{kernel_basis, rank, MPoly, Matrix, Rat, RatFunc, SparseEchelon};
use msw::partcomb::{enumerate_partitions, Partition};
use msw::symfunc::{Alphabet, Basis, SymFunc};
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(a, b)| Rat::new(a, b))
}

fn big_rat() -> impl Strategy<Value = Rat> {
    (any::<i64>(), 1i64..=i64::MAX).prop_map(|(a, b)| Rat::new(a, b))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (rat(), 0i32..3, 0i32..3, -3i64..=3).prop_map(|(c, i, j, k)| &RatFunc::monomial(c, i, j) + &RatFunc::from_int(k))
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=7).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn xy_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-5i64..=5, 0usize..3, 0usize..3), 1..5).prop_map(|terms| {
        terms.into_iter().fold(MPoly::zero(), |acc, (c, i, j)| {
            let m = MPoly::var(msw::exactcore::Var::x(1))
                .pow(i as u32)
                .mul(&MPoly::var(msw::exactcore::Var::y(2)).pow(j as u32));
            acc.add(&m.scale(&Rat::from_int(c)))
        })
    })
}

proptest! {
    #[test]
    fn rat_field_laws(a in big_rat(), b in big_rat(), c in rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn ratfunc_is_canonical(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        let lhs = &(&a + &b) * &c;
        let rhs = &(&a * &c) + &(&b * &c);
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.to_string(), rhs.to_string());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        let parsed: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a.clone());
        prop_assert_eq!(a.swap_qt().swap_qt(), a);
    }

    #[test]
    fn mpoly_ring_laws(f in xy_poly(), g in xy_poly(), h in xy_poly()) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        let x = msw::exactcore::Var::x(1);
        // Leibniz rule.
        prop_assert_eq!(f.mul(&g).derivative(x), f.derivative(x).mul(&g).add(&f.mul(&g.derivative(x))));
        let parsed: MPoly = f.to_string().parse().unwrap();
        prop_assert_eq!(parsed, f);
    }

    #[test]
    fn partition_duality(mu in partition()) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().n_stat(), mu.cells().iter().map(|c| c.1).sum::<usize>());
        for nu in enumerate_partitions(mu.size()) {
            // Conjugation reverses dominance.
            prop_assert_eq!(mu.dominates(&nu), nu.conjugate().dominates(&mu.conjugate()));
        }
        for c in mu.cells() {
            prop_assert_eq!(mu.arm(c), mu.conjugate().leg((c.1, c.0)));
        }
    }

    #[test]
    fn sparse_and_dense_ranks_agree(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 1..7)) {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rat::from_int(v)).collect()).collect()).unwrap();
        let mut ech = SparseEchelon::new(6);
        for r in &rows {
            let sv: Vec<(u32, Rat)> = r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(j, v)| (j as u32, Rat::from_int(*v))).collect();
            ech.insert(&sv);
        }
        prop_assert_eq!(ech.rank(), rank(&m));
        prop_assert_eq!(kernel_basis(&m).len(), 6 - rank(&m));
    }

    #[test]
    fn basis_changes_round_trip(mu in partition()) {
        prop_assume!(mu.size() <= 5);
        let s = SymFunc::schur(&mu);
        for b in [Basis::M, Basis::E, Basis::H, Basis::P] {
            prop_assert_eq!(s.convert_basis(b).convert_basis(Basis::S), s.clone());
        }
    }

    #[test]
    fn plethysm_inverts(mu in partition()) {
        prop_assume!(mu.size() <= 4);
        let z = &RatFunc::one() - &RatFunc::t();
        let s = SymFunc::schur(&mu);
        let there = s.plethystic_eval(&Alphabet::scaled(z.clone()));
        prop_assert_eq!(there.plethystic_eval(&Alphabet::scaled(z.inverse())), s);
    }
}
