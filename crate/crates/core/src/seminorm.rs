//! Exact seminorms on relative homology and their bounded-cohomology duals.
//!
//! The primal program minimizes the relative l1 norm over a homology class;
//! the dual maximizes the pairing against sup-norm-one relative cocycles.
//! Both are solved by the exact simplex, and [`duality_certificate`] asserts
//! that the two optima agree as rational numbers and re-verifies the
//! returned witnesses by independent arithmetic.
//!
//! Everything here is finite dimensional, so both infima are attained and
//! the LP optima are the seminorms on the nose; the subtleties of dualizing
//! infinite normed chain complexes (non-closed coboundary images, duals not
//! commuting with homology) do not arise at this scale.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::{Chain, ChainComplexPair, Cochain, HomologyClass};
use crate::error::{Error, Result};
use crate::lp::{lp_solve, Direction, LpProblem, LpStatus, Sense};
use crate::rational::{format_rational, rat, Rational, RationalMatrix};

/// Exact equality `primal = dual` witnessed by an optimal chain and, when
/// the value is positive, a normalized optimal cocycle.
#[derive(Clone, Debug)]
pub struct SeminormCertificate {
    pub degree: usize,
    pub primal_value: Rational,
    pub optimal_chain: Chain,
    pub dual_value: Rational,
    /// Normalized cocycle with pairing 1 against the class; absent when the
    /// dual feasible set is empty (vanishing seminorm).
    pub optimal_cocycle: Option<Cochain>,
}

/// Kronecker pairing of a cochain with a chain of the same degree.
pub fn kronecker(pair: &ChainComplexPair, f: &Cochain, c: &Chain) -> Result<Rational> {
    if f.degree != c.degree {
        return Err(Error::Input(format!(
            "degree mismatch in pairing: cochain {}, chain {}",
            f.degree, c.degree
        )));
    }
    pair.validate_cochain(f)?;
    Ok(c.coeffs.iter().map(|(i, v)| f.value_at(*i) * v).sum())
}

fn require_relative_cycle(pair: &ChainComplexPair, class: &HomologyClass) -> Result<()> {
    if !pair.is_relative_cycle(&class.representative)? {
        return Err(Error::Input(
            "representative is not a relative cycle (boundary leaves the subcomplex)".into(),
        ));
    }
    Ok(())
}

/// Minimal relative l1 norm over the homology class of the representative,
/// together with a minimizing chain.
///
/// Variables: a chain `b` one degree up; the minimized quantity is the
/// relative norm of `z + d b`, linearized by splitting the coefficient at
/// each non-sub index into nonnegative parts.
pub fn l1_seminorm(pair: &ChainComplexPair, class: &HomologyClass) -> Result<(Rational, Chain)> {
    require_relative_cycle(pair, class)?;
    let n = class.degree;
    let z = &class.representative;
    let non_sub = pair.non_sub_indices(n);
    let d = pair.boundary_matrix(n + 1);
    let nb = d.cols();
    let k = non_sub.len();

    if k == 0 {
        return Ok((Rational::zero(), z.clone()));
    }

    // Columns: b (free, nb) then p, q >= 0 (k each).
    // Rows: for each non-sub index i: (d b)_i + p_i - q_i ... wait, the
    // residual is r = z + d b with r_i = p_i - q_i, i.e.
    //   p_i - q_i - (d b)_i = z_i.
    let cols = nb + 2 * k;
    let mut a = RationalMatrix::zero(k, cols);
    let mut rhs = Vec::with_capacity(k);
    let dense_z = z.to_dense(pair.dim(n));
    for (row, &i) in non_sub.iter().enumerate() {
        for j in 0..nb {
            let e = d.get(i, j);
            if !e.is_zero() {
                a.set(row, j, -e.clone());
            }
        }
        a.set(row, nb + row, rat(1));
        a.set(row, nb + k + row, rat(-1));
        rhs.push(dense_z[i].clone());
    }
    let mut objective = vec![Rational::zero(); cols];
    for j in nb..cols {
        objective[j] = rat(1);
    }
    let mut bounds = vec![(None, None); cols];
    for b in bounds.iter_mut().skip(nb) {
        *b = (Some(Rational::zero()), None);
    }
    let problem = LpProblem::new(objective, a, rhs, vec![Sense::Eq; k])?.with_bounds(bounds)?;
    let out = lp_solve(&problem, Direction::Minimize)?;
    if out.status != LpStatus::Optimal {
        return Err(Error::Internal("seminorm program must be solvable".into()));
    }
    let witness = out.witness.expect("optimal witness");
    // Reconstruct the optimal chain z + d b, with sub-coefficients zeroed
    // (the quotient infimum is attained coordinatewise).
    let b_chain = Chain::from_dense(n + 1, &witness[..nb]);
    let moved = if nb == 0 { z.clone() } else { z.add(&pair.boundary(&b_chain)?) };
    let optimal = Chain::from_entries(
        n,
        moved
            .coeffs
            .iter()
            .filter(|(i, _)| !pair.sub_indices(n).contains(i))
            .map(|(i, c)| (*i, c.clone()))
            .collect(),
    );
    let value = out.value.expect("optimal value");
    if pair.l1_norm_relative(&optimal) != value {
        return Err(Error::Internal("seminorm witness does not reproduce the optimum".into()));
    }
    Ok((value, optimal))
}

/// Dual program: `sup { 1/||phi||_inf : phi a relative cocycle, <phi, z> = 1 }`,
/// with the convention `sup {} = 0`.
///
/// Solved as: maximize `t` over relative cochains `f` with `delta f = 0`,
/// `||f||_inf <= 1` and `<f, z> = t`; the optimal normalized cocycle is
/// `f / t` when `t > 0`.
pub fn dual_linf_value(
    pair: &ChainComplexPair,
    class: &HomologyClass,
) -> Result<(Rational, Option<Cochain>)> {
    require_relative_cycle(pair, class)?;
    let n = class.degree;
    let z = &class.representative;
    let non_sub = pair.non_sub_indices(n);
    let k = non_sub.len();
    if k == 0 {
        return Ok((Rational::zero(), None));
    }

    // Columns: f at the non-sub indices (free, bounded by |f_i| <= 1), then
    // t >= 0. Rows: one cocycle row per basis element one degree up, plus
    // the pairing row <f, z> - t = 0.
    let d = pair.boundary_matrix(n + 1);
    let cols = k + 1;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs = Vec::new();
    let mut senses = Vec::new();

    for tau in 0..d.cols() {
        let mut row = vec![Rational::zero(); cols];
        let mut nonzero = false;
        for (pos, &i) in non_sub.iter().enumerate() {
            let e = d.get(i, tau);
            if !e.is_zero() {
                row[pos] = e.clone();
                nonzero = true;
            }
        }
        if nonzero {
            rows.push(row);
            rhs.push(Rational::zero());
            senses.push(Sense::Eq);
        }
    }

    let dense_z = z.to_dense(pair.dim(n));
    let mut pairing = vec![Rational::zero(); cols];
    for (pos, &i) in non_sub.iter().enumerate() {
        pairing[pos] = dense_z[i].clone();
    }
    pairing[k] = rat(-1);
    rows.push(pairing);
    rhs.push(Rational::zero());
    senses.push(Sense::Eq);

    let nrows = rows.len();
    let mut a = RationalMatrix::zero(nrows, cols);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                a.set(i, j, v.clone());
            }
        }
    }
    let mut objective = vec![Rational::zero(); cols];
    objective[k] = rat(1);
    let mut bounds = vec![(Some(rat(-1)), Some(rat(1))); cols];
    bounds[k] = (Some(Rational::zero()), None);
    let problem = LpProblem::new(objective, a, rhs, senses)?.with_bounds(bounds)?;
    let out = lp_solve(&problem, Direction::Maximize)?;
    if out.status != LpStatus::Optimal {
        return Err(Error::Internal("dual program is feasible (f=0) and bounded".into()));
    }
    let t = out.value.expect("optimal value");
    if t.is_zero() {
        return Ok((Rational::zero(), None));
    }
    let witness = out.witness.expect("optimal witness");
    let inv_t = t.recip();
    let cocycle = Cochain::from_entries(
        n,
        true,
        non_sub
            .iter()
            .enumerate()
            .map(|(pos, &i)| (i, &witness[pos] * &inv_t))
            .collect(),
    );
    Ok((t, Some(cocycle)))
}

/// Runs both programs, asserts exact primal/dual equality and re-verifies
/// the witnesses: the optimal chain represents the class with the claimed
/// norm, and the optimal cocycle is a relative cocycle with pairing one and
/// sup norm `1 / primal`.
pub fn duality_certificate(
    pair: &ChainComplexPair,
    class: &HomologyClass,
) -> Result<SeminormCertificate> {
    let (primal, optimal_chain) = l1_seminorm(pair, class)?;
    let (dual, optimal_cocycle) = dual_linf_value(pair, class)?;
    if primal != dual {
        return Err(Error::Internal(format!(
            "primal {} and dual {} disagree",
            format_rational(&primal),
            format_rational(&dual)
        )));
    }
    if pair.l1_norm_relative(&optimal_chain) != primal {
        return Err(Error::Internal("optimal chain norm mismatch".into()));
    }
    if !pair.is_relative_cycle(&optimal_chain)? {
        return Err(Error::Internal("optimal chain is not a relative cycle".into()));
    }
    if pair.class_coordinates(&optimal_chain.sub(&class.representative), &[])?.is_none() {
        return Err(Error::Internal("optimal chain does not represent the class".into()));
    }
    if let Some(phi) = &optimal_cocycle {
        pair.validate_cochain(phi)?;
        let delta = pair.coboundary(phi)?;
        if !delta.values.is_empty() {
            return Err(Error::Internal("optimal cocycle is not closed".into()));
        }
        if kronecker(pair, phi, &class.representative)? != rat(1) {
            return Err(Error::Internal("optimal cocycle pairing is not one".into()));
        }
        if primal.is_zero() || pair.linf_norm(phi) != primal.recip() {
            return Err(Error::Internal("optimal cocycle norm is not 1/primal".into()));
        }
    } else if !primal.is_zero() {
        return Err(Error::Internal("positive seminorm without dual witness".into()));
    }
    Ok(SeminormCertificate {
        degree: class.degree,
        primal_value: primal,
        optimal_chain,
        dual_value: dual,
        optimal_cocycle,
    })
}

/// Serialized form of a certificate (`certificate/v1`), rationals as strings.
#[derive(Serialize, Deserialize)]
pub struct CertificateDoc {
    pub schema: String,
    pub degree: usize,
    pub primal: String,
    pub dual: String,
    pub class_representative: BTreeMap<String, String>,
    pub optimal_chain: BTreeMap<String, String>,
    pub optimal_cocycle: Option<BTreeMap<String, String>>,
}

impl SeminormCertificate {
    pub fn to_doc(&self, pair: &ChainComplexPair, class: &HomologyClass) -> CertificateDoc {
        CertificateDoc {
            schema: "certificate/v1".into(),
            degree: self.degree,
            primal: format_rational(&self.primal_value),
            dual: format_rational(&self.dual_value),
            class_representative: pair.chain_to_label_map(&class.representative),
            optimal_chain: pair.chain_to_label_map(&self.optimal_chain),
            optimal_cocycle: self.optimal_cocycle.as_ref().map(|f| pair.cochain_to_label_map(f)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::rational::ratio;
    use num_traits::Signed;

    #[test]
    fn zero_class_has_zero_certificate() {
        let pair = generators::circle(3).unwrap();
        let class = HomologyClass { degree: 1, representative: Chain::zero(1) };
        let cert = duality_certificate(&pair, &class).unwrap();
        assert_eq!(cert.primal_value, rat(0));
        assert_eq!(cert.dual_value, rat(0));
        assert!(cert.optimal_cocycle.is_none());
    }

    #[test]
    fn circle_fundamental_class() {
        let pair = generators::circle(3).unwrap();
        let class = &pair.homology_basis(1)[0];
        let (value, chain) = l1_seminorm(&pair, class).unwrap();
        assert_eq!(value, rat(3));
        assert_eq!(pair.l1_norm_relative(&chain), rat(3));
        let (dual, cocycle) = dual_linf_value(&pair, class).unwrap();
        assert_eq!(dual, rat(3));
        let phi = cocycle.unwrap();
        // Pairing 1 with minimal sup norm forces phi = 1/3 on each edge.
        for i in 0..3 {
            assert_eq!(phi.value_at(i).abs(), ratio(1, 3));
        }
    }

    #[test]
    fn interval_edge_class() {
        let pair = generators::interval().unwrap();
        let class = &pair.homology_basis(1)[0];
        let cert = duality_certificate(&pair, class).unwrap();
        assert_eq!(cert.primal_value, rat(1));
        assert_eq!(cert.dual_value, rat(1));
        let phi = cert.optimal_cocycle.unwrap();
        assert_eq!(phi.value_at(0).abs(), rat(1));
    }

    #[test]
    fn torus_fundamental_class_counts_triangles() {
        let pair = generators::torus_grid(3, 3).unwrap();
        let basis = pair.homology_basis(2);
        assert_eq!(basis.len(), 1);
        let cert = duality_certificate(&pair, &basis[0]).unwrap();
        assert_eq!(cert.primal_value, rat(18));
    }

    #[test]
    fn non_cycle_is_rejected() {
        let pair = generators::circle(3).unwrap();
        let not_cycle = HomologyClass { degree: 1, representative: Chain::single(1, 0) };
        assert!(l1_seminorm(&pair, &not_cycle).is_err());
        assert!(dual_linf_value(&pair, &not_cycle).is_err());
    }

    #[test]
    fn kronecker_examples() {
        let pair = generators::circle(3).unwrap();
        let f = Cochain::from_entries(
            1,
            false,
            vec![(0, ratio(1, 3)), (1, ratio(1, 3)), (2, ratio(1, 3))],
        );
        let z = Chain::from_entries(1, vec![(0, rat(1)), (1, rat(1)), (2, rat(1))]);
        assert_eq!(kronecker(&pair, &f, &z).unwrap(), rat(1));
        assert_eq!(kronecker(&pair, &f, &Chain::zero(1)).unwrap(), rat(0));
        let c0 = Chain::zero(0);
        assert!(kronecker(&pair, &f, &c0).is_err());
    }

    #[test]
    fn seminorm_scales_linearly() {
        let pair = generators::circle(4).unwrap();
        let class = &pair.homology_basis(1)[0];
        let (value, _) = l1_seminorm(&pair, class).unwrap();
        for k in [rat(2), ratio(-3, 2), rat(0)] {
            let scaled = HomologyClass {
                degree: 1,
                representative: class.representative.scale(&k),
            };
            let (v, _) = l1_seminorm(&pair, &scaled).unwrap();
            assert_eq!(v, k.abs() * &value);
        }
    }

    #[test]
    fn kronecker_bounded_by_norm_product() {
        let pair = generators::circle(5).unwrap();
        let f = Cochain::from_entries(1, false, vec![(0, ratio(2, 3)), (3, rat(-2))]);
        let c = Chain::from_entries(1, vec![(0, rat(4)), (2, ratio(1, 2)), (3, rat(1))]);
        let lhs = kronecker(&pair, &f, &c).unwrap().abs();
        assert!(lhs <= pair.linf_norm(&f) * c.l1_norm());
    }
}
