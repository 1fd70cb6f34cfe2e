//! Flat locally convex model pairs, straight simplices, nets and the
//! straightening operator.
//!
//! Models are quotients of a convex cover by a lattice of translations:
//! flat tori `R^d / (p Z)^d` and flat cylinders `R x [0,h] / cZ`. Straight
//! simplices are affine, so a simplex is stored as its tuple of vertex
//! lifts, canonicalized by the unique deck translation putting the first
//! vertex into the fundamental domain. The cylinder's two boundary lines
//! are the components of the lifted subspace; both are convex.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat, ratio, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Torus { periods: Vec<Rational> },
    Cylinder { circumference: Rational, height: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSpace {
    kind: ModelKind,
}

/// A deck translation, one integer multiple of the period per periodic axis.
pub type Deck = Vec<BigInt>;

impl ModelSpace {
    /// Flat torus `R^d / (scale Z)^d`.
    pub fn torus(dim: usize, scale: Rational) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Input("torus dimension must be positive".into()));
        }
        if !scale.is_positive() {
            return Err(Error::Input("torus period must be positive".into()));
        }
        Ok(ModelSpace { kind: ModelKind::Torus { periods: vec![scale; dim] } })
    }

    /// Flat torus with one period per axis (rectangular lattice).
    pub fn torus_rect(periods: Vec<Rational>) -> Result<Self> {
        if periods.is_empty() || periods.iter().any(|p| !p.is_positive()) {
            return Err(Error::Input("torus periods must be positive".into()));
        }
        Ok(ModelSpace { kind: ModelKind::Torus { periods } })
    }

    /// Flat cylinder `R x [0, height] / circumference Z`. The two boundary
    /// lines are the components of the lifted subspace.
    pub fn cylinder(circumference: Rational, height: Rational) -> Result<Self> {
        if !circumference.is_positive() || !height.is_positive() {
            return Err(Error::Input("cylinder circumference and height must be positive".into()));
        }
        Ok(ModelSpace { kind: ModelKind::Cylinder { circumference, height } })
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            ModelKind::Torus { periods } => periods.len(),
            ModelKind::Cylinder { .. } => 2,
        }
    }

    /// Period of a periodic axis, `None` for non-periodic ones.
    pub fn period(&self, axis: usize) -> Option<Rational> {
        match &self.kind {
            ModelKind::Torus { periods } => periods.get(axis).cloned(),
            ModelKind::Cylinder { circumference, .. } => {
                (axis == 0).then(|| circumference.clone())
            }
        }
    }

    /// Number of periodic axes (the rank of the deck group).
    pub fn deck_rank(&self) -> usize {
        match &self.kind {
            ModelKind::Torus { periods } => periods.len(),
            ModelKind::Cylinder { .. } => 1,
        }
    }

    /// Ids of the components of the lifted subspace.
    pub fn w_components(&self) -> usize {
        match &self.kind {
            ModelKind::Torus { .. } => 0,
            ModelKind::Cylinder { .. } => 2,
        }
    }

    fn check_point(&self, p: &[Rational]) -> Result<()> {
        if p.len() != self.dim() {
            return Err(Error::Input(format!(
                "point has {} coordinates, model has dimension {}",
                p.len(),
                self.dim()
            )));
        }
        if let ModelKind::Cylinder { height, .. } = &self.kind {
            if p[1].is_negative() || p[1] > *height {
                return Err(Error::Input(format!(
                    "cylinder lift has second coordinate {} outside [0, {}]",
                    format_rational(&p[1]),
                    format_rational(height)
                )));
            }
        }
        Ok(())
    }

    /// Applies the deck translation to a point of the cover.
    pub fn deck_translate(&self, p: &[Rational], deck: &Deck) -> Vec<Rational> {
        let mut q = p.to_vec();
        for (axis, mult) in deck.iter().enumerate() {
            if let Some(period) = self.period(axis) {
                q[axis] += Rational::from_integer(mult.clone()) * period;
            }
        }
        q
    }

    // Deck translation putting `v0` into the fundamental domain.
    fn canonical_deck(&self, v0: &[Rational]) -> Deck {
        let mut deck = Vec::with_capacity(self.deck_rank());
        for axis in 0..self.deck_rank() {
            let period = self.period(axis).expect("periodic axis");
            let k = (&v0[axis] / &period).floor().to_integer();
            deck.push(-k);
        }
        deck
    }

    /// Builds a canonical straight simplex from explicit vertex lifts.
    pub fn straight_simplex(&self, lifts: Vec<Vec<Rational>>) -> Result<StraightSimplex> {
        if lifts.is_empty() {
            return Err(Error::Input("a simplex needs at least one vertex".into()));
        }
        for p in &lifts {
            self.check_point(p)?;
        }
        let deck = self.canonical_deck(&lifts[0]);
        let vertices = lifts.iter().map(|p| self.deck_translate(p, &deck)).collect();
        Ok(StraightSimplex { vertices })
    }

    /// Which component of the lifted subspace contains the point, if any.
    pub fn w_component_of(&self, p: &[Rational]) -> Option<usize> {
        match &self.kind {
            ModelKind::Torus { .. } => None,
            ModelKind::Cylinder { height, .. } => {
                if p[1].is_zero() {
                    Some(0)
                } else if p[1] == *height {
                    Some(1)
                } else {
                    None
                }
            }
        }
    }
}

/// Affine simplex in the cover, stored through its canonical vertex lifts.
/// Two simplices are equal iff their canonical forms coincide, i.e. iff they
/// differ by a deck translation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StraightSimplex {
    vertices: Vec<Vec<Rational>>,
}

impl StraightSimplex {
    pub fn degree(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// The i-th face: drop vertex i and re-canonicalize.
    pub fn face(&self, model: &ModelSpace, i: usize) -> Result<StraightSimplex> {
        if i > self.degree() {
            return Err(Error::Input(format!(
                "face index {i} out of range for a {}-simplex",
                self.degree()
            )));
        }
        let lifts: Vec<Vec<Rational>> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        model.straight_simplex(lifts)
    }

    /// Component of the lifted subspace containing every vertex, if one does.
    pub fn w_component(&self, model: &ModelSpace) -> Option<usize> {
        let first = model.w_component_of(&self.vertices[0])?;
        self.vertices[1..]
            .iter()
            .all(|v| model.w_component_of(v) == Some(first))
            .then_some(first)
    }

    /// Degenerate means some vertex repeats (as a point of the cover).
    pub fn is_degenerate(&self) -> bool {
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                if self.vertices[i] == self.vertices[j] {
                    return true;
                }
            }
        }
        false
    }
}

/// Formal rational combination of straight simplices of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightChain {
    pub degree: usize,
    pub terms: BTreeMap<StraightSimplex, Rational>,
}

impl StraightChain {
    pub fn zero(degree: usize) -> Self {
        StraightChain { degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(degree: usize, terms: Vec<(StraightSimplex, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<StraightSimplex, Rational> = BTreeMap::new();
        for (s, c) in terms {
            if s.degree() != degree {
                return Err(Error::Input("mixed degrees in straight chain".into()));
            }
            if c.is_zero() {
                continue;
            }
            let v = map.entry(s.clone()).or_insert_with(Rational::zero);
            *v += c;
            if v.is_zero() {
                map.remove(&s);
            }
        }
        Ok(StraightChain { degree, terms: map })
    }

    pub fn single(s: StraightSimplex) -> Self {
        let degree = s.degree();
        StraightChain { degree, terms: [(s, Rational::one())].into_iter().collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> StraightChain {
        StraightChain::from_terms(
            self.degree,
            self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect(),
        )
        .expect("same degree")
    }

    pub fn add(&self, other: &StraightChain) -> Result<StraightChain> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Input("degree mismatch in chain sum".into()));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut terms: Vec<(StraightSimplex, Rational)> =
            self.terms.iter().map(|(s, c)| (s.clone(), c.clone())).collect();
        terms.extend(other.terms.iter().map(|(s, c)| (s.clone(), c.clone())));
        StraightChain::from_terms(degree, terms)
    }

    pub fn sub(&self, other: &StraightChain) -> Result<StraightChain> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn l1_norm(&self) -> Rational {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Relative norm: terms supported in a single component of the lifted
    /// subspace can be cancelled and do not count.
    pub fn l1_norm_relative(&self, model: &ModelSpace) -> Rational {
        self.terms
            .iter()
            .filter(|(s, _)| s.w_component(model).is_none())
            .map(|(_, c)| c.abs())
            .sum()
    }

    /// Simplicial boundary, with faces re-canonicalized.
    pub fn boundary(&self, model: &ModelSpace) -> Result<StraightChain> {
        if self.degree == 0 {
            return Ok(StraightChain::zero(0));
        }
        let mut terms = Vec::new();
        for (s, c) in &self.terms {
            for i in 0..=s.degree() {
                let sign = if i % 2 == 0 { c.clone() } else { -c.clone() };
                terms.push((s.face(model, i)?, sign));
            }
        }
        StraightChain::from_terms(self.degree - 1, terms)
    }

    pub fn to_json(&self) -> String {
        let doc = StraightChainDoc {
            schema: "straight-chain/v1".into(),
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| StraightTermDoc {
                    coeff: format_rational(c),
                    simplex: s
                        .vertices
                        .iter()
                        .map(|v| v.iter().map(format_rational).collect())
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("straight chain serializes")
    }

    pub fn from_json(model: &ModelSpace, text: &str) -> Result<StraightChain> {
        let doc: StraightChainDoc = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("bad straight-chain JSON: {e}")))?;
        if doc.schema != "straight-chain/v1" {
            return Err(Error::Input(format!("unknown schema '{}'", doc.schema)));
        }
        let mut terms = Vec::new();
        for term in doc.terms {
            let lifts = term
                .simplex
                .iter()
                .map(|v| v.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            terms.push((model.straight_simplex(lifts)?, parse_rational(&term.coeff)?));
        }
        StraightChain::from_terms(doc.degree, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct StraightChainDoc {
    schema: String,
    degree: usize,
    terms: Vec<StraightTermDoc>,
}

#[derive(Serialize, Deserialize)]
struct StraightTermDoc {
    coeff: String,
    simplex: Vec<Vec<String>>,
}

/// The lattice net of a model: net points are the integer lattice (times the
/// fixed vertical levels on a cylinder) and cells are half-open boxes, so the
/// cell assignment is a total, deck-equivariant function.
#[derive(Clone, Debug)]
pub struct Net {
    model: ModelSpace,
}

/// Builds the standard net. Periodic axes must have integer periods so that
/// the integer lattice is preserved by the deck group.
pub fn build_net(model: &ModelSpace) -> Result<Net> {
    for axis in 0..model.deck_rank() {
        let p = model.period(axis).expect("periodic axis");
        if !p.is_integer() {
            return Err(Error::Input(
                "net construction needs integer periods on periodic axes".into(),
            ));
        }
    }
    Ok(Net { model: model.clone() })
}

impl Net {
    pub fn model(&self) -> &ModelSpace {
        &self.model
    }

    /// Net point of the cell containing the point. Horizontal cells are
    /// `[i - 1/2, i + 1/2)`; the cylinder's vertical cells are `[0, h/4)`,
    /// `[h/4, 3h/4)` and `[3h/4, h]`, assigned to levels `0, h/2, h`.
    pub fn assign(&self, p: &[Rational]) -> Result<Vec<Rational>> {
        self.model.check_point(p)?;
        let half = ratio(1, 2);
        match self.model.kind() {
            ModelKind::Torus { periods } => Ok((0..periods.len())
                .map(|k| Rational::from_integer((&p[k] + &half).floor().to_integer()))
                .collect()),
            ModelKind::Cylinder { height, .. } => {
                let x = Rational::from_integer((&p[0] + &half).floor().to_integer());
                let quarter = height * ratio(1, 4);
                let three_quarters = height * ratio(3, 4);
                let y = if p[1] < quarter {
                    Rational::zero()
                } else if p[1] < three_quarters {
                    height * &half
                } else {
                    height.clone()
                };
                Ok(vec![x, y])
            }
        }
    }

    /// Straightening of one simplex: replace each vertex lift by its net
    /// point and re-canonicalize.
    pub fn straighten(&self, s: &StraightSimplex) -> Result<StraightSimplex> {
        let lifts = s
            .vertices()
            .iter()
            .map(|v| self.assign(v))
            .collect::<Result<Vec<_>>>()?;
        self.model.straight_simplex(lifts)
    }

    pub fn straighten_chain(&self, c: &StraightChain) -> Result<StraightChain> {
        let mut terms = Vec::new();
        for (s, coeff) in &c.terms {
            terms.push((self.straighten(s)?, coeff.clone()));
        }
        StraightChain::from_terms(c.degree, terms)
    }

    /// Prism homotopy of one simplex. With `v` the vertices of `s` and `w`
    /// their net points (compatible lifts),
    ///
    /// ```text
    /// T(s) = sum_i (-1)^(i+1) [v_0, ..., v_i, w_i, ..., w_n]
    /// ```
    ///
    /// oriented so that `d T + T d = id - straighten` holds exactly on the
    /// free module of straight simplices, degenerate prism pieces included.
    pub fn prism_homotopy(&self, s: &StraightSimplex) -> Result<StraightChain> {
        let v = s.vertices();
        let w: Vec<Vec<Rational>> =
            v.iter().map(|p| self.assign(p)).collect::<Result<Vec<_>>>()?;
        let n = s.degree();
        let mut terms = Vec::new();
        for i in 0..=n {
            let mut lifts = Vec::with_capacity(n + 2);
            lifts.extend(v[..=i].iter().cloned());
            lifts.extend(w[i..].iter().cloned());
            let sign = if i % 2 == 0 { rat(-1) } else { rat(1) };
            terms.push((self.model.straight_simplex(lifts)?, sign));
        }
        StraightChain::from_terms(n + 1, terms)
    }

    pub fn prism_homotopy_chain(&self, c: &StraightChain) -> Result<StraightChain> {
        let mut out = StraightChain::zero(c.degree + 1);
        for (s, coeff) in &c.terms {
            out = out.add(&self.prism_homotopy(s)?.scale(coeff))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[(i64, i64)]) -> Vec<Rational> {
        coords.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    fn torus2() -> ModelSpace {
        ModelSpace::torus(2, rat(1)).unwrap()
    }

    #[test]
    fn model_validation() {
        assert!(ModelSpace::torus(2, rat(1)).is_ok());
        assert!(ModelSpace::cylinder(rat(1), rat(1)).is_ok());
        assert!(ModelSpace::cylinder(rat(0), rat(1)).is_err());
        assert!(ModelSpace::torus(0, rat(1)).is_err());
    }

    #[test]
    fn cylinder_rejects_out_of_band_lifts() {
        let model = ModelSpace::cylinder(rat(1), rat(1)).unwrap();
        assert!(model.straight_simplex(vec![pt(&[(0, 1), (2, 1)])]).is_err());
        assert!(model.straight_simplex(vec![pt(&[(5, 1), (1, 2)])]).is_ok());
    }

    #[test]
    fn canonicalization_is_deck_invariant() {
        let model = torus2();
        let lifts = vec![pt(&[(1, 10), (1, 5)]), pt(&[(9, 10), (1, 10)])];
        let s1 = model.straight_simplex(lifts.clone()).unwrap();
        let shifted: Vec<Vec<Rational>> = lifts
            .iter()
            .map(|p| model.deck_translate(p, &vec![BigInt::from(3), BigInt::from(-2)]))
            .collect();
        let s2 = model.straight_simplex(shifted).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn first_vertex_lands_in_fundamental_domain() {
        let model = torus2();
        let s = model
            .straight_simplex(vec![pt(&[(17, 10), (-3, 2)]), pt(&[(2, 1), (0, 1)])])
            .unwrap();
        let v0 = &s.vertices()[0];
        assert!(v0[0] >= rat(0) && v0[0] < rat(1));
        assert!(v0[1] >= rat(0) && v0[1] < rat(1));
    }

    #[test]
    fn faces_drop_the_indexed_vertex() {
        let model = torus2();
        let x0 = pt(&[(0, 1), (0, 1)]);
        let x1 = pt(&[(1, 2), (0, 1)]);
        let x2 = pt(&[(1, 2), (1, 2)]);
        let s = model.straight_simplex(vec![x0.clone(), x1.clone(), x2.clone()]).unwrap();
        let f1 = s.face(&model, 1).unwrap();
        assert_eq!(f1.vertices(), &[x0.clone(), x2.clone()]);
        let f0 = s.face(&model, 0).unwrap();
        assert_eq!(f0.vertices(), &[x1, x2]);
        let edge = model.straight_simplex(vec![x0.clone(), s.vertices()[1].clone()]).unwrap();
        assert_eq!(edge.face(&model, 0).unwrap().vertices().len(), 1);
        assert!(s.face(&model, 3).is_err());
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let model = torus2();
        let s = model
            .straight_simplex(vec![
                pt(&[(1, 3), (1, 7)]),
                pt(&[(5, 4), (2, 3)]),
                pt(&[(-1, 2), (9, 5)]),
            ])
            .unwrap();
        let c = StraightChain::single(s);
        let dd = c.boundary(&model).unwrap().boundary(&model).unwrap();
        assert!(dd.is_zero());
    }

    #[test]
    fn net_assignment_examples() {
        let model = torus2();
        let net = build_net(&model).unwrap();
        assert_eq!(net.assign(&pt(&[(1, 10), (1, 5)])).unwrap(), pt(&[(0, 1), (0, 1)]));
        assert_eq!(net.assign(&pt(&[(9, 10), (1, 10)])).unwrap(), pt(&[(1, 1), (0, 1)]));
        // Half-open boundary: x = 1/2 belongs to the cell of 1.
        assert_eq!(net.assign(&pt(&[(1, 2), (0, 1)])).unwrap(), pt(&[(1, 1), (0, 1)]));

        let cyl = ModelSpace::cylinder(rat(1), rat(1)).unwrap();
        let cnet = build_net(&cyl).unwrap();
        assert_eq!(cnet.assign(&pt(&[(3, 10), (0, 1)])).unwrap(), pt(&[(0, 1), (0, 1)]));
        assert_eq!(cnet.assign(&pt(&[(0, 1), (1, 2)])).unwrap(), pt(&[(0, 1), (1, 2)]));
        assert_eq!(cnet.assign(&pt(&[(0, 1), (4, 5)])).unwrap(), pt(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn net_assignment_is_equivariant() {
        let model = torus2();
        let net = build_net(&model).unwrap();
        let p = pt(&[(3, 7), (22, 9)]);
        let deck = vec![BigInt::from(4), BigInt::from(-1)];
        let moved = model.deck_translate(&p, &deck);
        let lhs = net.assign(&moved).unwrap();
        let rhs = model.deck_translate(&net.assign(&p).unwrap(), &deck);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn straighten_fixes_net_simplices() {
        let model = torus2();
        let net = build_net(&model).unwrap();
        let s = model
            .straight_simplex(vec![pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (0, 1)])])
            .unwrap();
        assert_eq!(net.straighten(&s).unwrap(), s);
    }

    #[test]
    fn straighten_torus_edge_example() {
        let model = torus2();
        let net = build_net(&model).unwrap();
        let s = model
            .straight_simplex(vec![pt(&[(1, 10), (1, 5)]), pt(&[(9, 10), (1, 10)])])
            .unwrap();
        let expected = model
            .straight_simplex(vec![pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (0, 1)])])
            .unwrap();
        assert_eq!(net.straighten(&s).unwrap(), expected);
    }

    #[test]
    fn straighten_preserves_boundary_lines() {
        let cyl = ModelSpace::cylinder(rat(2), rat(1)).unwrap();
        let net = build_net(&cyl).unwrap();
        let s = cyl
            .straight_simplex(vec![pt(&[(1, 3), (0, 1)]), pt(&[(7, 5), (0, 1)])])
            .unwrap();
        assert_eq!(s.w_component(&cyl), Some(0));
        assert_eq!(net.straighten(&s).unwrap().w_component(&cyl), Some(0));
    }

    #[test]
    fn prism_on_vertex() {
        let model = torus2();
        let net = build_net(&model).unwrap();
        let v = model.straight_simplex(vec![pt(&[(1, 10), (1, 5)])]).unwrap();
        let t = net.prism_homotopy(&v).unwrap();
        // T([v]) = -[v, w]; dT = v - w = (id - str)(v).
        assert_eq!(t.terms.len(), 1);
        let dt = t.boundary(&model).unwrap();
        let expected = StraightChain::single(v.clone())
            .sub(&StraightChain::single(net.straighten(&v).unwrap()))
            .unwrap();
        assert_eq!(dt, expected);
    }

    #[test]
    fn prism_identity_on_a_2_simplex() {
        let model = torus2();
        let net = build_net(&model).unwrap();
        let s = model
            .straight_simplex(vec![
                pt(&[(1, 3), (1, 7)]),
                pt(&[(6, 5), (2, 3)]),
                pt(&[(-2, 5), (12, 7)]),
            ])
            .unwrap();
        let c = StraightChain::single(s.clone());
        let lhs = net
            .prism_homotopy(&s)
            .unwrap()
            .boundary(&model)
            .unwrap()
            .add(&net.prism_homotopy_chain(&c.boundary(&model).unwrap()).unwrap())
            .unwrap();
        let rhs = c.sub(&net.straighten_chain(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn prism_identity_on_net_fixed_simplex() {
        // id - str = 0, so the degenerate prism pieces must cancel exactly.
        let model = torus2();
        let net = build_net(&model).unwrap();
        let s = model
            .straight_simplex(vec![
                pt(&[(0, 1), (0, 1)]),
                pt(&[(1, 1), (0, 1)]),
                pt(&[(1, 1), (1, 1)]),
            ])
            .unwrap();
        let c = StraightChain::single(s.clone());
        let lhs = net
            .prism_homotopy(&s)
            .unwrap()
            .boundary(&model)
            .unwrap()
            .add(&net.prism_homotopy_chain(&c.boundary(&model).unwrap()).unwrap())
            .unwrap();
        assert!(lhs.is_zero());
    }

    #[test]
    fn straight_chain_json_round_trip() {
        let model = torus2();
        let s = model
            .straight_simplex(vec![pt(&[(1, 2), (0, 1)]), pt(&[(3, 4), (1, 3)])])
            .unwrap();
        let c = StraightChain::from_terms(1, vec![(s, ratio(-5, 3))]).unwrap();
        let text = c.to_json();
        let back = StraightChain::from_json(&model, &text).unwrap();
        assert_eq!(back, c);
    }
}
