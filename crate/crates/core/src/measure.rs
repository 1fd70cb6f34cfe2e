//! Finitely supported signed measures on straight simplices.
//!
//! Atoms are keyed by canonical straight simplices, so equal simplices
//! always combine before any norm is evaluated. The boundary operator is
//! the alternating sum of face pushforwards, the Dirac map embeds straight
//! chains, and the discretization map sums the weight of each straightening
//! fiber.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{ModelSpace, Net, StraightChain, StraightSimplex};
use crate::rational::{format_rational, parse_rational, Rational};

/// Finitely supported signed measure on the straight simplices of one
/// degree; zero-weight atoms are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureChain {
    pub degree: usize,
    pub atoms: BTreeMap<StraightSimplex, Rational>,
}

impl MeasureChain {
    pub fn zero(degree: usize) -> Self {
        MeasureChain { degree, atoms: BTreeMap::new() }
    }

    pub fn from_atoms(degree: usize, atoms: Vec<(StraightSimplex, Rational)>) -> Result<Self> {
        let chain = StraightChain::from_terms(degree, atoms)?;
        Ok(MeasureChain { degree, atoms: chain.terms })
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn add(&self, other: &MeasureChain) -> Result<MeasureChain> {
        let mut atoms: Vec<(StraightSimplex, Rational)> =
            self.atoms.iter().map(|(s, w)| (s.clone(), w.clone())).collect();
        atoms.extend(other.atoms.iter().map(|(s, w)| (s.clone(), w.clone())));
        let degree = if self.is_zero() { other.degree } else { self.degree };
        MeasureChain::from_atoms(degree, atoms)
    }

    pub fn scale(&self, k: &Rational) -> MeasureChain {
        MeasureChain {
            degree: self.degree,
            atoms: if k.is_zero() {
                BTreeMap::new()
            } else {
                self.atoms.iter().map(|(s, w)| (s.clone(), w * k)).collect()
            },
        }
    }

    /// Total variation: the sum of absolute atom weights. For an atomic
    /// measure this is the sup-minus-inf over measurable sets.
    pub fn total_variation(&self) -> Rational {
        self.atoms.values().map(|w| w.abs()).sum()
    }

    /// Relative measure norm: atoms whose simplex lies in a single component
    /// of the lifted subspace can be cancelled by a subspace measure.
    pub fn relative_norm(&self, model: &ModelSpace) -> Rational {
        self.atoms
            .iter()
            .filter(|(s, _)| s.w_component(model).is_none())
            .map(|(_, w)| w.abs())
            .sum()
    }

    /// Is every atom supported in a single subspace component?
    pub fn is_w_supported(&self, model: &ModelSpace) -> bool {
        self.atoms.keys().all(|s| s.w_component(model).is_some())
    }

    /// Boundary: alternating sum of face pushforwards. For atomic measures
    /// this mirrors the simplicial boundary of the support.
    pub fn boundary(&self, model: &ModelSpace) -> Result<MeasureChain> {
        if self.degree == 0 {
            return Ok(MeasureChain::zero(0));
        }
        let chain = StraightChain { degree: self.degree, terms: self.atoms.clone() };
        let b = chain.boundary(model)?;
        Ok(MeasureChain { degree: self.degree - 1, atoms: b.terms })
    }

    pub fn to_json(&self) -> String {
        let doc = MeasureChainDoc {
            schema: "measure-chain/v1".into(),
            degree: self.degree,
            atoms: self
                .atoms
                .iter()
                .map(|(s, w)| MeasureAtomDoc {
                    weight: format_rational(w),
                    simplex: s
                        .vertices()
                        .iter()
                        .map(|v| v.iter().map(format_rational).collect())
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("measure chain serializes")
    }

    pub fn from_json(model: &ModelSpace, text: &str) -> Result<MeasureChain> {
        let doc: MeasureChainDoc = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("bad measure-chain JSON: {e}")))?;
        if doc.schema != "measure-chain/v1" {
            return Err(Error::Input(format!("unknown schema '{}'", doc.schema)));
        }
        let mut atoms = Vec::new();
        for atom in doc.atoms {
            let lifts = atom
                .simplex
                .iter()
                .map(|v| v.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            atoms.push((model.straight_simplex(lifts)?, parse_rational(&atom.weight)?));
        }
        MeasureChain::from_atoms(doc.degree, atoms)
    }
}

#[derive(Serialize, Deserialize)]
struct MeasureChainDoc {
    schema: String,
    degree: usize,
    atoms: Vec<MeasureAtomDoc>,
}

#[derive(Serialize, Deserialize)]
struct MeasureAtomDoc {
    weight: String,
    simplex: Vec<Vec<String>>,
}

/// Dirac embedding of a straight chain as an atomic measure.
pub fn iota(c: &StraightChain) -> MeasureChain {
    MeasureChain { degree: c.degree, atoms: c.terms.clone() }
}

/// Discretization: sends a measure to the chain whose coefficient on a net
/// simplex is the total weight of its straightening fiber. Finite support
/// makes the sum finite.
pub fn theta(net: &Net, mu: &MeasureChain) -> Result<StraightChain> {
    let mut terms = Vec::new();
    for (s, w) in &mu.atoms {
        terms.push((net.straighten(s)?, w.clone()));
    }
    StraightChain::from_terms(mu.degree, terms)
}
