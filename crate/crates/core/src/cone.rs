//! Weighted mapping cones of the inclusion W -> X.
//!
//! The cone complex is `C_n(X) + C_{n-1}(W)` with the twisted differential
//! `(u, v) -> (d u + i v, -d v)`; it carries the family of norms
//! `||(u, v)||_1(w) = ||u||_1 + (1 + w) ||v||_1` and the dual norms
//! `max(||f||_inf, ||g||_inf / (1 + w))`. The comparison map `beta` sends a
//! cone class to the relative class of its first component; the norm
//! comparison report measures how far this map is from being isometric at
//! chain level.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::{Chain, ChainComplexPair, Cochain, HomologyClass};
use crate::error::{Error, Result};
use crate::lp::{lp_solve, Direction, LpProblem, LpStatus, Sense};
use crate::rational::{format_rational, rat, Rational, RationalMatrix};
use crate::seminorm;

/// Element of the cone in degree n: a chain `u` of degree n on X and a chain
/// `v` of degree n-1 supported on the subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeChain {
    pub u: Chain,
    pub v: Chain,
}

/// Cone cochain: `f` on degree-n simplices of X, `g` on degree-(n-1)
/// simplices of the subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeCochain {
    pub f: Cochain,
    pub g: Cochain,
}

/// The mapping cone of the inclusion of the subcomplex of a pair.
#[derive(Clone, Debug)]
pub struct ConeComplex {
    pair: ChainComplexPair,
}

/// Builds the cone and verifies that the twisted differential squares to
/// zero (an internal check: it must hold for every valid pair).
pub fn build_cone(pair: &ChainComplexPair) -> Result<ConeComplex> {
    let cone = ConeComplex { pair: pair.clone() };
    for n in 1..=pair.top_degree() + 1 {
        let dn = cone.differential_matrix(n);
        let dn1 = cone.differential_matrix(n + 1);
        if !dn.mul(&dn1)?.is_zero() {
            return Err(Error::Internal(format!(
                "cone differential does not square to zero in degree {n}"
            )));
        }
    }
    Ok(cone)
}

impl ConeComplex {
    pub fn pair(&self) -> &ChainComplexPair {
        &self.pair
    }

    /// Cone dimension in degree n: dim C_n(X) + dim C_{n-1}(W).
    pub fn dim(&self, n: usize) -> usize {
        self.pair.dim(n) + self.w_dim(n)
    }

    fn w_dim(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            self.pair.sub_indices(n - 1).len()
        }
    }

    /// Indices into C_{n-1}(X) of the W-coordinates of cone degree n.
    fn w_indices(&self, n: usize) -> Vec<usize> {
        if n == 0 {
            vec![]
        } else {
            self.pair.sub_indices(n - 1).iter().copied().collect()
        }
    }

    pub fn cone_chain(&self, u: Chain, v: Chain) -> Result<ConeChain> {
        if !v.is_zero() && v.degree + 1 != u.degree {
            return Err(Error::Input("cone chain components must have adjacent degrees".into()));
        }
        let vd = if u.degree == 0 { 0 } else { u.degree - 1 };
        for i in v.coeffs.keys() {
            if !self.pair.sub_indices(vd).contains(i) {
                return Err(Error::Input(
                    "second cone component must be supported on the subcomplex".into(),
                ));
            }
        }
        Ok(ConeChain { u, v: Chain { degree: vd, coeffs: v.coeffs } })
    }

    pub fn cone_cochain(&self, f: Cochain, g: Cochain) -> Result<ConeCochain> {
        if !g.values.is_empty() && g.degree + 1 != f.degree {
            return Err(Error::Input("cone cochain components must have adjacent degrees".into()));
        }
        let gd = if f.degree == 0 { 0 } else { f.degree - 1 };
        for i in g.values.keys() {
            if !self.pair.sub_indices(gd).contains(i) {
                return Err(Error::Input(
                    "second cone cochain component must live on the subcomplex".into(),
                ));
            }
        }
        Ok(ConeCochain { f, g: Cochain { degree: gd, values: g.values, relative: false } })
    }

    /// Twisted differential `(u, v) -> (d u + i v, -d v)`.
    pub fn differential(&self, c: &ConeChain) -> Result<ConeChain> {
        let n = c.u.degree;
        if n == 0 {
            return Ok(ConeChain { u: Chain::zero(0), v: Chain::zero(0) });
        }
        let du = self.pair.boundary(&c.u)?;
        let iv = Chain { degree: n - 1, coeffs: c.v.coeffs.clone() };
        let new_u = du.add(&iv);
        let new_v = if n >= 2 {
            self.pair.boundary(&c.v)?.scale(&rat(-1))
        } else {
            Chain::zero(0)
        };
        self.cone_chain(new_u, new_v)
    }

    /// Dense matrix of the differential in cone degree n, with coordinates
    /// ordered as (X-part, W-part).
    pub fn differential_matrix(&self, n: usize) -> RationalMatrix {
        let rows = self.dim(n.saturating_sub(1));
        let cols = self.dim(n);
        if n == 0 {
            return RationalMatrix::zero(0, cols);
        }
        let mut m = RationalMatrix::zero(rows, cols);
        let dx = self.pair.boundary_matrix(n);
        let x_dim = self.pair.dim(n);
        // d u block.
        for j in 0..x_dim {
            for i in 0..dx.rows() {
                let e = dx.get(i, j);
                if !e.is_zero() {
                    m.set(i, j, e.clone());
                }
            }
        }
        // i v block into the X-part of degree n-1.
        for (col, idx) in self.w_indices(n).iter().enumerate() {
            m.set(*idx, x_dim + col, Rational::one());
        }
        // -d v block into the W-part of degree n-1 (only when n >= 2).
        if n >= 2 {
            let dw = self.pair.boundary_matrix(n - 1);
            let target = self.w_indices(n - 1);
            let row_of: std::collections::HashMap<usize, usize> =
                target.iter().enumerate().map(|(r, &i)| (i, r)).collect();
            let x_rows = self.pair.dim(n - 1);
            for (col, &idx) in self.w_indices(n).iter().enumerate() {
                for i in 0..dw.rows() {
                    let e = dw.get(i, idx);
                    if !e.is_zero() {
                        let Some(&r) = row_of.get(&i) else {
                            // Faces of sub-simplices stay sub by validation.
                            continue;
                        };
                        m.set(x_rows + r, x_dim + col, -e.clone());
                    }
                }
            }
        }
        m
    }

    fn dense_of(&self, c: &ConeChain, n: usize) -> Vec<Rational> {
        let x_dim = self.pair.dim(n);
        let mut out = vec![Rational::zero(); self.dim(n)];
        let du = c.u.to_dense(x_dim);
        out[..x_dim].clone_from_slice(&du);
        for (col, &idx) in self.w_indices(n).iter().enumerate() {
            if let Some(v) = c.v.coeffs.get(&idx) {
                out[x_dim + col] = v.clone();
            }
        }
        out
    }

    fn chain_of_dense(&self, dense: &[Rational], n: usize) -> ConeChain {
        let x_dim = self.pair.dim(n);
        let u = Chain::from_dense(n, &dense[..x_dim]);
        let v = Chain::from_entries(
            n.saturating_sub(1),
            self.w_indices(n)
                .iter()
                .enumerate()
                .map(|(col, &idx)| (idx, dense[x_dim + col].clone()))
                .collect(),
        );
        ConeChain { u, v }
    }

    pub fn is_cycle(&self, c: &ConeChain) -> Result<bool> {
        let d = self.differential(c)?;
        Ok(d.u.is_zero() && d.v.is_zero())
    }

    /// Weighted chain norm `||u||_1 + (1 + omega) ||v||_1`; both components
    /// carry their plain norms, without any quotient.
    pub fn l1_norm(&self, c: &ConeChain, omega: &Rational) -> Result<Rational> {
        if omega.is_negative() {
            return Err(Error::Input("omega must be nonnegative".into()));
        }
        Ok(c.u.l1_norm() + (Rational::one() + omega) * c.v.l1_norm())
    }

    /// Weighted cochain norm `max(||f||_inf, ||g||_inf / (1 + omega))`.
    pub fn linf_norm(&self, c: &ConeCochain, omega: &Rational) -> Result<Rational> {
        if omega.is_negative() {
            return Err(Error::Input("omega must be nonnegative".into()));
        }
        let nf = self.pair.linf_norm(&c.f);
        let ng = self.pair.linf_norm(&c.g) / (Rational::one() + omega);
        Ok(nf.max(ng))
    }

    /// Pairing `((f, g), (u, v)) -> f(u) - g(v)`.
    pub fn pairing(&self, cc: &ConeCochain, c: &ConeChain) -> Result<Rational> {
        if cc.f.degree != c.u.degree {
            return Err(Error::Input("degree mismatch in cone pairing".into()));
        }
        let fu: Rational = c.u.coeffs.iter().map(|(i, v)| cc.f.value_at(*i) * v).sum();
        let gv: Rational = c.v.coeffs.iter().map(|(i, v)| cc.g.value_at(*i) * v).sum();
        Ok(fu - gv)
    }

    /// Homology dimension of the cone in degree n.
    pub fn homology_dim(&self, n: usize) -> usize {
        let dn = self.differential_matrix(n);
        let dn1 = self.differential_matrix(n + 1);
        dn.cols() - dn.rank() - dn1.rank()
    }

    /// A basis of cone homology in degree n.
    pub fn homology_basis(&self, n: usize) -> Vec<ConeChain> {
        let dn = self.differential_matrix(n);
        let dn1 = self.differential_matrix(n + 1);
        let kernel = dn.kernel_basis();
        let chosen = crate::rational::independent_modulo(&dn1, &kernel);
        chosen.into_iter().map(|k| self.chain_of_dense(&kernel[k], n)).collect()
    }

    /// `beta` in homology: the relative class of the first component.
    pub fn beta_homology(&self, c: &ConeChain) -> Result<HomologyClass> {
        if !self.is_cycle(c)? {
            return Err(Error::Input("beta needs a cone cycle".into()));
        }
        Ok(HomologyClass { degree: c.u.degree, representative: c.u.clone() })
    }

    /// Inverse of `beta` in homology: a relative cycle `a` maps to the cone
    /// cycle `(a, -d a)`.
    pub fn beta_inverse(&self, class: &HomologyClass) -> Result<ConeChain> {
        if !self.pair.is_relative_cycle(&class.representative)? {
            return Err(Error::Input("beta inverse needs a relative cycle".into()));
        }
        let da = self.pair.boundary(&class.representative)?;
        let c = self.cone_chain(class.representative.clone(), da.scale(&rat(-1)))?;
        if !self.is_cycle(&c)? {
            return Err(Error::Internal("(a, -d a) must be a cone cycle".into()));
        }
        Ok(c)
    }

    /// Dual of `beta` at cochain level: `f -> (f, 0)`.
    pub fn beta_cochain(&self, f: &Cochain) -> Result<ConeCochain> {
        self.cone_cochain(f.clone(), Cochain::zero(f.degree.saturating_sub(1), false))
    }

    /// Minimal weighted norm over the homology class of a cone cycle,
    /// together with a minimizer. Minimizes over `(u, v) + dbar (x, y)` with
    /// `x` in C_{n+1}(X) and `y` in C_n(W).
    pub fn l1_seminorm(
        &self,
        c: &ConeChain,
        omega: &Rational,
    ) -> Result<(Rational, ConeChain)> {
        if omega.is_negative() {
            return Err(Error::Input("omega must be nonnegative".into()));
        }
        if !self.is_cycle(c)? {
            return Err(Error::Input("cone seminorm needs a cone cycle".into()));
        }
        let n = c.u.degree;
        let d = self.differential_matrix(n + 1);
        let nb = d.cols();
        let k = self.dim(n);
        let x_dim = self.pair.dim(n);
        let target = self.dense_of(c, n);

        // Columns: (x, y) free (nb), then p, q >= 0 (k each) with
        // p_i - q_i = target_i + (dbar (x,y))_i.
        let cols = nb + 2 * k;
        let mut a = RationalMatrix::zero(k, cols);
        let mut rhs = Vec::with_capacity(k);
        for i in 0..k {
            for j in 0..nb {
                let e = d.get(i, j);
                if !e.is_zero() {
                    a.set(i, j, -e.clone());
                }
            }
            a.set(i, nb + i, rat(1));
            a.set(i, nb + k + i, rat(-1));
            rhs.push(target[i].clone());
        }
        let weight = Rational::one() + omega;
        let mut objective = vec![Rational::zero(); cols];
        for i in 0..k {
            let w = if i < x_dim { Rational::one() } else { weight.clone() };
            objective[nb + i] = w.clone();
            objective[nb + k + i] = w;
        }
        let mut bounds = vec![(None, None); cols];
        for b in bounds.iter_mut().skip(nb) {
            *b = (Some(Rational::zero()), None);
        }
        let problem =
            LpProblem::new(objective, a, rhs, vec![Sense::Eq; k])?.with_bounds(bounds)?;
        let out = lp_solve(&problem, Direction::Minimize)?;
        if out.status != LpStatus::Optimal {
            return Err(Error::Internal("cone seminorm program must be solvable".into()));
        }
        let witness = out.witness.expect("optimal witness");
        let value = out.value.expect("optimal value");
        let mut dense = target;
        if nb > 0 {
            let moved = d.mul_vec(&witness[..nb])?;
            for i in 0..k {
                dense[i] += &moved[i];
            }
        }
        let minimizer = self.chain_of_dense(&dense, n);
        if self.l1_norm(&minimizer, omega)? != value {
            return Err(Error::Internal("cone minimizer does not reproduce the optimum".into()));
        }
        Ok((value, minimizer))
    }
}

/// One row of the norm comparison report: a relative homology class with its
/// relative seminorm, its dual-optimal cocycle data, and the cone seminorms
/// of its beta-preimage for each weight.
#[derive(Clone, Debug, Serialize)]
pub struct ConeReportRow {
    pub class_index: usize,
    pub degree: usize,
    pub relative_seminorm: String,
    pub dual_value: String,
    /// (omega, cone seminorm of [(z, -dz)]) pairs, as rational strings.
    pub cone_seminorms: Vec<(String, String)>,
    /// Cone seminorm at omega = 0 strictly exceeds the relative seminorm.
    pub strict_gap_at_zero: bool,
    /// Chain-level dual sandwich data for the dual-optimal cocycle phi:
    /// ||phi||_inf / (n + 2), ||(phi, 0)||_inf(0) and ||phi||_inf.
    pub dual_sandwich: Option<(String, String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeReport {
    pub schema: String,
    pub degree: usize,
    pub omegas: Vec<String>,
    pub rows: Vec<ConeReportRow>,
}

/// Computes relative and cone seminorms for every homology basis class in
/// the degree and checks the comparison inequalities exactly:
/// the relative seminorm is bounded by every cone seminorm, cone seminorms
/// are nondecreasing in omega, the cone value dominates
/// `seminorm(u) + (1 + omega) seminorm_W(v)`, and the dual-optimal cocycle
/// satisfies the chain-level sandwich
/// `||phi||_inf / (n + 2) <= ||(phi, 0)||_inf(0) <= ||phi||_inf`.
pub fn norm_comparison_report(
    pair: &ChainComplexPair,
    degree: usize,
    omegas: &[Rational],
) -> Result<ConeReport> {
    if degree > pair.top_degree() {
        return Err(Error::Input(format!(
            "degree {degree} above top degree {}",
            pair.top_degree()
        )));
    }
    for omega in omegas {
        if omega.is_negative() {
            return Err(Error::Input("omega must be nonnegative".into()));
        }
    }
    let cone = build_cone(pair)?;
    let (sub_pair, sub_maps) = pair.subcomplex()?;
    let mut rows = Vec::new();
    for (class_index, class) in pair.homology_basis(degree).iter().enumerate() {
        let cert = seminorm::duality_certificate(pair, class)?;
        let cone_cycle = cone.beta_inverse(class)?;

        // Seminorm of the boundary class inside the standalone subcomplex.
        let v_norm = if cone_cycle.v.is_zero() || degree == 0 {
            Rational::zero()
        } else {
            let v = &cone_cycle.v;
            let wd = v.degree;
            if wd < sub_maps.len() {
                let back: std::collections::HashMap<usize, usize> = sub_maps[wd]
                    .iter()
                    .enumerate()
                    .map(|(local, &global)| (global, local))
                    .collect();
                let local = Chain::from_entries(
                    wd,
                    v.coeffs.iter().map(|(i, c)| (back[i], c.clone())).collect(),
                );
                let sub_class = HomologyClass { degree: wd, representative: local };
                seminorm::l1_seminorm(&sub_pair, &sub_class)?.0
            } else {
                Rational::zero()
            }
        };

        let mut cone_seminorms = Vec::new();
        let mut previous: Option<Rational> = None;
        let mut strict_gap_at_zero = false;
        for omega in omegas {
            let (value, _witness) = cone.l1_seminorm(&cone_cycle, omega)?;
            // beta is norm non-increasing from the cone to the quotient.
            if cert.primal_value > value {
                return Err(Error::Internal(
                    "relative seminorm exceeds a cone seminorm".into(),
                ));
            }
            if let Some(prev) = &previous {
                if *prev > value {
                    return Err(Error::Internal(
                        "cone seminorm decreased as omega grew".into(),
                    ));
                }
            }
            // Componentwise lower bound through homology of each part.
            let lower =
                &cert.primal_value + (Rational::one() + omega) * &v_norm;
            if value < lower {
                return Err(Error::Internal(
                    "cone seminorm fell below its componentwise lower bound".into(),
                ));
            }
            if omega.is_zero() && value > cert.primal_value {
                strict_gap_at_zero = true;
            }
            previous = Some(value.clone());
            cone_seminorms.push((format_rational(omega), format_rational(&value)));
        }

        let mut dual_sandwich = None;
        if let Some(phi) = &cert.optimal_cocycle {
            let norm = pair.linf_norm(phi);
            let lower = &norm / rat((degree + 2) as i64);
            let cone_cochain = cone.beta_cochain(phi)?;
            let middle = cone.linf_norm(&cone_cochain, &Rational::zero())?;
            if !(lower <= middle && middle <= norm) {
                return Err(Error::Internal("dual sandwich inequality failed".into()));
            }
            dual_sandwich = Some((
                format_rational(&lower),
                format_rational(&middle),
                format_rational(&norm),
            ));
        }

        rows.push(ConeReportRow {
            class_index,
            degree,
            relative_seminorm: format_rational(&cert.primal_value),
            dual_value: format_rational(&cert.dual_value),
            cone_seminorms,
            strict_gap_at_zero,
            dual_sandwich,
        });
    }
    Ok(ConeReport {
        schema: "cone-report/v1".into(),
        degree,
        omegas: omegas.iter().map(format_rational).collect(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::rational::ratio;

    #[test]
    fn interval_cone_dimensions() {
        let pair = generators::interval().unwrap();
        let cone = build_cone(&pair).unwrap();
        // Degree 1: C_1(X) + C_0(W) has dimension 1 + 2.
        assert_eq!(cone.dim(1), 3);
        assert_eq!(cone.dim(0), 2);
    }

    #[test]
    fn empty_subspace_cone_is_the_complex_itself() {
        let pair = generators::circle(3).unwrap();
        let cone = build_cone(&pair).unwrap();
        assert_eq!(cone.dim(0), pair.dim(0));
        assert_eq!(cone.dim(1), pair.dim(1));
        assert_eq!(cone.homology_dim(1), 1);
    }

    #[test]
    fn differential_formula_on_interval() {
        // dbar(e, v0) = (d e + v0, 0) = (v1, 0).
        let pair = generators::interval().unwrap();
        let cone = build_cone(&pair).unwrap();
        let v0 = pair.index_of(0, "v0").unwrap();
        let v1 = pair.index_of(0, "v1").unwrap();
        let c = cone
            .cone_chain(Chain::single(1, 0), Chain::from_entries(0, vec![(v0, rat(1))]))
            .unwrap();
        let d = cone.differential(&c).unwrap();
        assert_eq!(d.u, Chain::from_entries(0, vec![(v1, rat(1))]));
        assert!(d.v.is_zero());
    }

    #[test]
    fn weighted_norms() {
        let pair = generators::interval().unwrap();
        let cone = build_cone(&pair).unwrap();
        let v0 = pair.index_of(0, "v0").unwrap();
        let v1 = pair.index_of(0, "v1").unwrap();
        let c = cone
            .cone_chain(
                Chain::from_entries(1, vec![(0, rat(2))]),
                Chain::from_entries(0, vec![(v0, rat(2)), (v1, rat(1))]),
            )
            .unwrap();
        // ||u|| = 2, ||v|| = 3, omega = 1 -> 2 + 2*3 = 8.
        assert_eq!(cone.l1_norm(&c, &rat(1)).unwrap(), rat(8));
        assert_eq!(cone.l1_norm(&c, &rat(0)).unwrap(), rat(5));
        assert!(cone.l1_norm(&c, &rat(-1)).is_err());
        let zero = cone.cone_chain(Chain::zero(1), Chain::zero(0)).unwrap();
        assert_eq!(cone.l1_norm(&zero, &rat(7)).unwrap(), rat(0));
    }

    #[test]
    fn dual_norm_formula() {
        let pair = generators::interval().unwrap();
        let cone = build_cone(&pair).unwrap();
        let v0 = pair.index_of(0, "v0").unwrap();
        let cc = cone
            .cone_cochain(
                Cochain::from_entries(1, false, vec![(0, rat(1))]),
                Cochain::from_entries(0, false, vec![(v0, rat(4))]),
            )
            .unwrap();
        assert_eq!(cone.linf_norm(&cc, &rat(1)).unwrap(), rat(2));
        let zero = cone.cone_cochain(Cochain::zero(1, false), Cochain::zero(0, false)).unwrap();
        assert_eq!(cone.linf_norm(&zero, &rat(0)).unwrap(), rat(0));
        assert!(cone.linf_norm(&cc, &ratio(-1, 2)).is_err());
    }

    #[test]
    fn pairing_sign_convention() {
        let pair = generators::interval().unwrap();
        let cone = build_cone(&pair).unwrap();
        let v0 = pair.index_of(0, "v0").unwrap();
        let g = Cochain::from_entries(0, false, vec![(v0, rat(5))]);
        let cc = cone.cone_cochain(Cochain::zero(1, false), g).unwrap();
        let c = cone
            .cone_chain(Chain::zero(1), Chain::from_entries(0, vec![(v0, rat(2))]))
            .unwrap();
        assert_eq!(cone.pairing(&cc, &c).unwrap(), rat(-10));
        // (f, 0) against (u, v) is just f(u).
        let f = Cochain::from_entries(1, false, vec![(0, rat(3))]);
        let bf = cone.beta_cochain(&f).unwrap();
        let c2 = cone
            .cone_chain(Chain::single(1, 0), Chain::from_entries(0, vec![(v0, rat(9))]))
            .unwrap();
        assert_eq!(cone.pairing(&bf, &c2).unwrap(), rat(3));
    }

    #[test]
    fn beta_round_trip_on_interval() {
        let pair = generators::interval().unwrap();
        let cone = build_cone(&pair).unwrap();
        let class = &pair.homology_basis(1)[0];
        let cycle = cone.beta_inverse(class).unwrap();
        assert_eq!(cycle.u, class.representative);
        let back = cone.beta_homology(&cycle).unwrap();
        assert_eq!(back.representative, class.representative);
    }

    #[test]
    fn cone_homology_matches_relative_homology() {
        for pair in [
            generators::interval().unwrap(),
            generators::circle(4).unwrap(),
            generators::cylinder_grid(3, 2).unwrap(),
        ] {
            let cone = build_cone(&pair).unwrap();
            for n in 0..=pair.top_degree() {
                assert_eq!(cone.homology_dim(n), pair.homology_dim(n), "degree {n}");
            }
        }
    }

    #[test]
    fn zero_class_has_zero_cone_seminorm() {
        let pair = generators::interval().unwrap();
        let cone = build_cone(&pair).unwrap();
        let zero = cone.cone_chain(Chain::zero(1), Chain::zero(0)).unwrap();
        let (value, _) = cone.l1_seminorm(&zero, &rat(0)).unwrap();
        assert_eq!(value, rat(0));
    }

    #[test]
    fn interval_cone_seminorm_dominates_components() {
        let pair = generators::interval().unwrap();
        let cone = build_cone(&pair).unwrap();
        let class = &pair.homology_basis(1)[0];
        let cycle = cone.beta_inverse(class).unwrap();
        // (e, -de) has ||e|| = 1 and ||de|| = 2; the class of de in H_0(W)
        // has seminorm 2, so cone(0) >= 1 + 2 = 3.
        let (v0, _) = cone.l1_seminorm(&cycle, &rat(0)).unwrap();
        assert!(v0 >= rat(3));
        let (v1, _) = cone.l1_seminorm(&cycle, &rat(1)).unwrap();
        assert!(v1 >= v0);
    }

    #[test]
    fn report_on_small_cylinder() {
        let pair = generators::cylinder_grid(3, 1).unwrap();
        let report = norm_comparison_report(&pair, 2, &[rat(0), rat(1)]).unwrap();
        assert_eq!(report.rows.len(), 1);
        let row = &report.rows[0];
        // The boundary class is the difference of the two boundary circles,
        // each of seminorm 3, so the gap at omega = 0 is strict.
        assert!(row.strict_gap_at_zero);
    }
}
