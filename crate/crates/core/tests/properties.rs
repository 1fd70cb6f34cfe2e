//! Property tests for the structural invariants: rank-nullity, solver
//! consistency, square-zero boundaries, norm inequalities and the prism
//! identity on random rational data.

use proptest::prelude::*;

use num_traits::{Signed, Zero};
use relhom::complex::{Chain, Cochain};
use relhom::generators;
use relhom::geometry::build_net;
use relhom::kronecker;
use relhom::rational::{ratio, Rational, RationalMatrix};
use relhom::{ModelSpace, StraightChain};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(small_rational(), rows * cols).prop_map(move |entries| {
            let mut m = RationalMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, entries[i * cols + j].clone());
                }
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_column_count(m in small_matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            let image = m.mul_vec(v).unwrap();
            prop_assert!(image.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_is_exact_or_certifiably_inconsistent(
        m in small_matrix(),
        rhs in proptest::collection::vec(small_rational(), 1..=5),
    ) {
        prop_assume!(rhs.len() == m.rows());
        match m.solve(&rhs).unwrap() {
            Some(x) => {
                prop_assert_eq!(m.mul_vec(&x).unwrap(), rhs);
            }
            None => {
                let mut aug = RationalMatrix::zero(m.rows(), m.cols() + 1);
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        aug.set(i, j, m.get(i, j).clone());
                    }
                    aug.set(i, m.cols(), rhs[i].clone());
                }
                prop_assert!(aug.rank() > m.rank());
            }
        }
    }

    #[test]
    fn boundary_squares_to_zero_on_random_chains(
        coeffs in proptest::collection::vec(small_rational(), 1..=8),
    ) {
        let pair = generators::torus_grid(3, 3).unwrap();
        let entries = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (i % pair.dim(2), c))
            .collect();
        let chain = Chain::from_entries(2, entries);
        let dd = pair.boundary(&pair.boundary(&chain).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn relative_norm_is_at_most_plain_norm(
        coeffs in proptest::collection::vec(small_rational(), 1..=8),
    ) {
        let pair = generators::cylinder_grid(3, 2).unwrap();
        let entries = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (i % pair.dim(1), c))
            .collect();
        let chain = Chain::from_entries(1, entries);
        let relative = pair.l1_norm_relative(&chain);
        prop_assert!(relative <= chain.l1_norm());
        let on_sub = chain.coeffs.keys().any(|i| pair.sub_indices(1).contains(i));
        prop_assert_eq!(relative == chain.l1_norm(), !on_sub);
    }

    #[test]
    fn pairing_is_bounded_by_norm_product(
        fv in proptest::collection::vec(small_rational(), 1..=6),
        cv in proptest::collection::vec(small_rational(), 1..=6),
    ) {
        let pair = generators::circle(6).unwrap();
        let f = Cochain::from_entries(
            1,
            false,
            fv.into_iter().enumerate().map(|(i, c)| (i % 6, c)).collect(),
        );
        let c = Chain::from_entries(
            1,
            cv.into_iter().enumerate().map(|(i, c)| (i % 6, c)).collect(),
        );
        let value = kronecker(&pair, &f, &c).unwrap().abs();
        prop_assert!(value <= pair.linf_norm(&f) * c.l1_norm());
    }

    #[test]
    fn lp_optimum_dominates_sampled_feasible_points(
        objective in proptest::collection::vec(small_rational(), 2..=4),
        rows in proptest::collection::vec(
            (proptest::collection::vec(small_rational(), 4), small_rational()),
            1..=3,
        ),
        samples in proptest::collection::vec(
            proptest::collection::vec((-6i64..=6, 1i64..=2), 4),
            20,
        ),
    ) {
        use relhom::{lp_solve, Direction, LpProblem, LpStatus, Sense};
        let n = objective.len();
        let mut a = RationalMatrix::zero(rows.len(), n);
        let mut rhs = Vec::new();
        for (i, (coeffs, b)) in rows.iter().enumerate() {
            for j in 0..n {
                a.set(i, j, coeffs[j].clone());
            }
            rhs.push(b.clone());
        }
        let bound = ratio(3, 1);
        let problem = LpProblem::new(
            objective.clone(),
            a.clone(),
            rhs.clone(),
            vec![Sense::Le; rows.len()],
        )
        .unwrap()
        .with_bounds(vec![(Some(-bound.clone()), Some(bound.clone())); n])
        .unwrap();
        let out = lp_solve(&problem, Direction::Minimize).unwrap();
        // Boxes make the problem bounded; it is feasible or not.
        prop_assert!(out.status != LpStatus::Unbounded);
        if out.status == LpStatus::Optimal {
            let w = out.witness.clone().unwrap();
            let value: Rational =
                objective.iter().zip(&w).map(|(c, x)| c * x).sum();
            prop_assert_eq!(&value, out.value.as_ref().unwrap());
            prop_assert!(w.iter().all(|x| x.abs() <= bound));
            let apply = a.mul_vec(&w).unwrap();
            prop_assert!(apply.iter().zip(&rhs).all(|(l, r)| l <= r));
        }
        for sample in &samples {
            let point: Vec<Rational> =
                sample.iter().take(n).map(|&(p, q)| ratio(p, q)).collect();
            if point.iter().any(|x| x.abs() > bound) {
                continue;
            }
            let image = a.mul_vec(&point).unwrap();
            let feasible = image.iter().zip(&rhs).all(|(l, r)| l <= r);
            if !feasible {
                continue;
            }
            match out.status {
                LpStatus::Optimal => {
                    let value: Rational =
                        objective.iter().zip(&point).map(|(c, x)| c * x).sum();
                    prop_assert!(&value >= out.value.as_ref().unwrap());
                }
                _ => prop_assert!(false, "sampled a feasible point of an infeasible program"),
            }
        }
    }

    #[test]
    fn prism_identity_on_random_straight_simplices(
        coords in proptest::collection::vec((-30i64..=30, 1i64..=5), 2..=8),
    ) {
        let model = ModelSpace::torus(2, ratio(3, 1)).unwrap();
        let net = build_net(&model).unwrap();
        // Group flat coordinates into 2d vertices; at least one vertex.
        let points: Vec<Vec<Rational>> = coords
            .chunks(2)
            .filter(|c| c.len() == 2)
            .map(|c| vec![ratio(c[0].0, c[0].1), ratio(c[1].0, c[1].1)])
            .collect();
        prop_assume!(!points.is_empty() && points.len() <= 4);
        let s = model.straight_simplex(points).unwrap();
        let c = StraightChain::single(s.clone());
        let dc = c.boundary(&model).unwrap();
        let dt = net.prism_homotopy(&s).unwrap().boundary(&model).unwrap();
        let lhs = if s.degree() == 0 {
            dt
        } else {
            dt.add(&net.prism_homotopy_chain(&dc).unwrap()).unwrap()
        };
        let rhs = c.sub(&net.straighten_chain(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
