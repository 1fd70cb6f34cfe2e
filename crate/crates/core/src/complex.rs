//! Finite chain complexes of pairs with the L1 chain norm and the L-infinity
//! cochain norm.
//!
//! A [`ChainComplexPair`] holds a finite based complex for a space `X`
//! together with a marked subcomplex `W`; relative chains live in the
//! quotient by the `W`-span and relative cochains are the functionals
//! vanishing on it.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{
    format_rational, independent_modulo, parse_rational, rat, Rational, RationalMatrix,
};

/// Sparse chain: basis index -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub coeffs: BTreeMap<usize, Rational>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, coeffs: BTreeMap::new() }
    }

    pub fn from_entries(degree: usize, entries: Vec<(usize, Rational)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, c) in entries {
            if c.is_zero() {
                continue;
            }
            let v = coeffs.entry(i).or_insert_with(Rational::zero);
            *v += c;
            if v.is_zero() {
                coeffs.remove(&i);
            }
        }
        Chain { degree, coeffs }
    }

    pub fn single(degree: usize, index: usize) -> Self {
        Chain::from_entries(degree, vec![(index, rat(1))])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Chain {
        Chain::from_entries(
            self.degree,
            self.coeffs.iter().map(|(i, c)| (*i, c * k)).collect(),
        )
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let mut entries: Vec<(usize, Rational)> =
            self.coeffs.iter().map(|(i, c)| (*i, c.clone())).collect();
        entries.extend(other.coeffs.iter().map(|(i, c)| (*i, c.clone())));
        Chain::from_entries(self.degree, entries)
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.scale(&rat(-1)))
    }

    /// Plain l1 norm (no quotient).
    pub fn l1_norm(&self) -> Rational {
        self.coeffs.values().map(|c| c.abs()).sum()
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (i, c) in &self.coeffs {
            v[*i] = c.clone();
        }
        v
    }

    pub fn from_dense(degree: usize, v: &[Rational]) -> Chain {
        Chain::from_entries(
            degree,
            v.iter().enumerate().map(|(i, c)| (i, c.clone())).collect(),
        )
    }
}

/// Sparse cochain. When `relative` is set the values are required to vanish
/// on the sub-indices of its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: BTreeMap<usize, Rational>,
    pub relative: bool,
}

impl Cochain {
    pub fn zero(degree: usize, relative: bool) -> Self {
        Cochain { degree, values: BTreeMap::new(), relative }
    }

    pub fn from_entries(degree: usize, relative: bool, entries: Vec<(usize, Rational)>) -> Self {
        let mut values = BTreeMap::new();
        for (i, c) in entries {
            if !c.is_zero() {
                values.insert(i, c);
            }
        }
        Cochain { degree, values, relative }
    }

    pub fn value_at(&self, index: usize) -> Rational {
        self.values.get(&index).cloned().unwrap_or_else(Rational::zero)
    }
}

/// A homology class, carried by a relative cycle representative.
#[derive(Clone, Debug)]
pub struct HomologyClass {
    pub degree: usize,
    pub representative: Chain,
}

/// Input description of one degree of a pair complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeDescription {
    pub simplices: Vec<String>,
    /// Signed face incidences: simplex id -> list of (sign, face id) pairs in
    /// the degree below.
    #[serde(default)]
    pub faces: BTreeMap<String, Vec<(i64, String)>>,
}

/// Input description of a pair complex (`pair-complex/v1`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairDescription {
    #[serde(default = "PairDescription::schema_name")]
    pub schema: String,
    pub degrees: Vec<DegreeDescription>,
    /// Simplex ids (any degree) spanning the subcomplex W.
    #[serde(default)]
    pub sub: Vec<String>,
}

impl PairDescription {
    fn schema_name() -> String {
        "pair-complex/v1".to_string()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("pair description serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let d: PairDescription = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("bad pair-complex JSON: {e}")))?;
        if d.schema != "pair-complex/v1" {
            return Err(Error::Input(format!("unknown schema '{}'", d.schema)));
        }
        Ok(d)
    }
}

/// A validated finite pair complex.
#[derive(Clone, Debug)]
pub struct ChainComplexPair {
    labels: Vec<Vec<String>>,
    label_index: Vec<HashMap<String, usize>>,
    /// boundaries[n]: C_n -> C_{n-1}; boundaries[0] has zero rows.
    boundaries: Vec<RationalMatrix>,
    sub: Vec<BTreeSet<usize>>,
}

impl ChainComplexPair {
    /// Builds and validates a pair complex: faces must exist one degree
    /// down, d∘d must vanish, and the subcomplex must be closed under faces.
    pub fn build(description: &PairDescription) -> Result<Self> {
        let degrees = &description.degrees;
        if degrees.is_empty() {
            return Err(Error::Validation("a pair complex needs at least degree 0".into()));
        }
        let labels: Vec<Vec<String>> = degrees.iter().map(|d| d.simplices.clone()).collect();
        let mut label_index = Vec::new();
        for (n, ls) in labels.iter().enumerate() {
            let mut idx = HashMap::new();
            for (i, l) in ls.iter().enumerate() {
                if idx.insert(l.clone(), i).is_some() {
                    return Err(Error::Validation(format!(
                        "duplicate simplex id '{l}' in degree {n}"
                    )));
                }
            }
            label_index.push(idx);
        }

        let mut boundaries = Vec::new();
        boundaries.push(RationalMatrix::zero(0, labels[0].len()));
        for n in 1..labels.len() {
            let mut m = RationalMatrix::zero(labels[n - 1].len(), labels[n].len());
            for (j, simplex) in labels[n].iter().enumerate() {
                let faces = degrees[n].faces.get(simplex).cloned().unwrap_or_default();
                for (sign, face) in faces {
                    let Some(&i) = label_index[n - 1].get(&face) else {
                        return Err(Error::Validation(format!(
                            "face '{face}' of '{simplex}' not present in degree {}",
                            n - 1
                        )));
                    };
                    let cur = m.get(i, j) + rat(sign);
                    m.set(i, j, cur);
                }
            }
            boundaries.push(m);
        }

        // d∘d = 0.
        for n in 2..labels.len() {
            let prod = boundaries[n - 1].mul(&boundaries[n])?;
            if !prod.is_zero() {
                return Err(Error::Validation(format!(
                    "boundary of boundary is nonzero between degrees {n} and {}",
                    n - 2
                )));
            }
        }

        // Resolve the sub-simplex set per degree.
        let mut sub: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); labels.len()];
        for id in &description.sub {
            let mut found = false;
            for n in 0..labels.len() {
                if let Some(&i) = label_index[n].get(id) {
                    sub[n].insert(i);
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::Validation(format!("sub-simplex '{id}' not in complex")));
            }
        }

        let pair = ChainComplexPair { labels, label_index, boundaries, sub };

        // W must be closed under faces: each column of d over a sub index
        // may only hit sub rows.
        for n in 1..pair.top_degree() + 1 {
            for &j in &pair.sub[n] {
                for i in 0..pair.dim(n - 1) {
                    if !pair.boundaries[n].get(i, j).is_zero() && !pair.sub[n - 1].contains(&i) {
                        return Err(Error::Validation(format!(
                            "sub-simplex '{}' has face '{}' outside the subcomplex",
                            pair.labels[n][j],
                            pair.labels[n - 1][i]
                        )));
                    }
                }
            }
        }
        Ok(pair)
    }

    pub fn top_degree(&self) -> usize {
        self.labels.len() - 1
    }

    /// Dimension of C_n(X); zero above the top degree.
    pub fn dim(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, |l| l.len())
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    pub fn label_of(&self, n: usize, index: usize) -> &str {
        &self.labels[n][index]
    }

    pub fn index_of(&self, n: usize, label: &str) -> Option<usize> {
        self.label_index.get(n).and_then(|m| m.get(label)).copied()
    }

    pub fn sub_indices(&self, n: usize) -> &BTreeSet<usize> {
        static EMPTY: std::sync::OnceLock<BTreeSet<usize>> = std::sync::OnceLock::new();
        self.sub.get(n).unwrap_or_else(|| EMPTY.get_or_init(BTreeSet::new))
    }

    pub fn non_sub_indices(&self, n: usize) -> Vec<usize> {
        (0..self.dim(n)).filter(|i| !self.sub_indices(n).contains(i)).collect()
    }

    /// Boundary matrix C_n -> C_{n-1}; shaped (dim n-1) x (dim n), with the
    /// convention that out-of-range degrees have dimension zero.
    pub fn boundary_matrix(&self, n: usize) -> RationalMatrix {
        if n == 0 || n > self.top_degree() {
            let rows = if n == 0 { 0 } else { self.dim(n - 1) };
            return RationalMatrix::zero(rows, self.dim(n));
        }
        self.boundaries[n].clone()
    }

    /// Boundary of a chain; in degree 0 this is the zero chain.
    pub fn boundary(&self, c: &Chain) -> Result<Chain> {
        if c.degree == 0 {
            return Ok(Chain::zero(0));
        }
        if c.degree > self.top_degree() {
            return Err(Error::Input(format!("chain degree {} above top degree", c.degree)));
        }
        let d = &self.boundaries[c.degree];
        let v = d.mul_vec(&c.to_dense(self.dim(c.degree)))?;
        Ok(Chain::from_dense(c.degree - 1, &v))
    }

    /// Relative chain norm: the infimum of the l1 norm over the coset of `c`
    /// modulo W-chains. Attained coordinatewise by zeroing sub-coefficients.
    pub fn l1_norm_relative(&self, c: &Chain) -> Rational {
        c.coeffs
            .iter()
            .filter(|(i, _)| !self.sub_indices(c.degree).contains(i))
            .map(|(_, v)| v.abs())
            .sum()
    }

    /// Sup norm of a cochain over the (finite) basis.
    pub fn linf_norm(&self, f: &Cochain) -> Rational {
        f.values
            .values()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Coboundary of a cochain: (δf)(τ) = f(dτ). Preserves relativity.
    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain> {
        let n = f.degree;
        let d = self.boundary_matrix(n + 1);
        let mut entries = Vec::new();
        for j in 0..d.cols() {
            let mut acc = Rational::zero();
            for (i, v) in &f.values {
                let e = d.get(*i, j);
                if !e.is_zero() {
                    acc += v * e;
                }
            }
            if !acc.is_zero() {
                entries.push((j, acc));
            }
        }
        Ok(Cochain::from_entries(n + 1, f.relative, entries))
    }

    /// Checks that a cochain flagged relative actually vanishes on the
    /// sub-indices of its degree.
    pub fn validate_cochain(&self, f: &Cochain) -> Result<()> {
        if f.relative {
            for i in f.values.keys() {
                if self.sub_indices(f.degree).contains(i) {
                    return Err(Error::Input(format!(
                        "relative cochain has support on sub-simplex '{}'",
                        self.label_of(f.degree, *i)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Is `c` a relative cycle, i.e. does its boundary land in the W-span?
    pub fn is_relative_cycle(&self, c: &Chain) -> Result<bool> {
        if c.degree == 0 {
            return Ok(true);
        }
        let b = self.boundary(c)?;
        Ok(b.coeffs.keys().all(|i| self.sub_indices(c.degree - 1).contains(i)))
    }

    /// Quotient boundary matrix of C_n(X,W) -> C_{n-1}(X,W): rows and
    /// columns restricted to non-sub indices.
    pub fn quotient_boundary(&self, n: usize) -> RationalMatrix {
        let d = self.boundary_matrix(n);
        let cols = self.non_sub_indices(n);
        let rows = if n == 0 { vec![] } else { self.non_sub_indices(n - 1) };
        d.select_columns(&cols).select_rows(&rows)
    }

    /// Dimension of H_n(X, W; Q).
    pub fn homology_dim(&self, n: usize) -> usize {
        let dn = self.quotient_boundary(n);
        let dn1 = self.quotient_boundary(n + 1);
        let cycles = dn.cols() - dn.rank();
        cycles - dn1.rank()
    }

    /// Representatives forming a basis of H_n(X, W; Q). Each representative
    /// is a relative cycle supported away from W.
    pub fn homology_basis(&self, n: usize) -> Vec<HomologyClass> {
        let non_sub = self.non_sub_indices(n);
        let dn = self.quotient_boundary(n);
        let dn1 = self.quotient_boundary(n + 1);
        let kernel = dn.kernel_basis();
        let chosen = independent_modulo(&dn1, &kernel);
        chosen
            .into_iter()
            .map(|k| {
                let v = &kernel[k];
                let entries = non_sub
                    .iter()
                    .enumerate()
                    .map(|(pos, &idx)| (idx, v[pos].clone()))
                    .collect();
                HomologyClass { degree: n, representative: Chain::from_entries(n, entries) }
            })
            .collect()
    }

    /// Coordinates of the class of a relative cycle `z` with respect to the
    /// classes of `basis`, or `None` when `z` is not in their span modulo
    /// boundaries. Used for cross-checking maps between homology theories.
    pub fn class_coordinates(
        &self,
        z: &Chain,
        basis: &[HomologyClass],
    ) -> Result<Option<Vec<Rational>>> {
        let n = z.degree;
        let non_sub = self.non_sub_indices(n);
        let dn1 = self.quotient_boundary(n + 1);
        let mut cols: Vec<Vec<Rational>> = Vec::new();
        for b in basis {
            let dense = b.representative.to_dense(self.dim(n));
            cols.push(non_sub.iter().map(|&i| dense[i].clone()).collect());
        }
        let k = cols.len();
        for j in 0..dn1.cols() {
            cols.push((0..dn1.rows()).map(|i| dn1.get(i, j).clone()).collect());
        }
        let mut m = RationalMatrix::zero(non_sub.len(), cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        let dense = z.to_dense(self.dim(n));
        let rhs: Vec<Rational> = non_sub.iter().map(|&i| dense[i].clone()).collect();
        Ok(m.solve(&rhs)?.map(|x| x[..k].to_vec()))
    }

    /// The subcomplex W as a standalone complex (with empty subspace), along
    /// with the per-degree index maps from W-indices into this pair.
    pub fn subcomplex(&self) -> Result<(ChainComplexPair, Vec<Vec<usize>>)> {
        let mut degrees = Vec::new();
        let mut maps = Vec::new();
        let mut top = 0;
        for n in 0..=self.top_degree() {
            if !self.sub[n].is_empty() {
                top = n;
            }
        }
        for n in 0..=top {
            let indices: Vec<usize> = self.sub[n].iter().copied().collect();
            let simplices: Vec<String> =
                indices.iter().map(|&i| self.labels[n][i].clone()).collect();
            let mut faces = BTreeMap::new();
            if n > 0 {
                for &j in &indices {
                    let mut fs = Vec::new();
                    for i in 0..self.dim(n - 1) {
                        let e = self.boundaries[n].get(i, j);
                        if !e.is_zero() {
                            // Validation guarantees faces of sub-simplices are sub.
                            let times: i64 = e
                                .to_integer()
                                .try_into()
                                .map_err(|_| Error::Internal("incidence overflow".into()))?;
                            fs.push((times, self.labels[n - 1][i].clone()));
                        }
                    }
                    if !fs.is_empty() {
                        faces.insert(self.labels[n][j].clone(), fs);
                    }
                }
            }
            degrees.push(DegreeDescription { simplices, faces });
            maps.push(indices);
        }
        let sub_pair = ChainComplexPair::build(&PairDescription {
            schema: "pair-complex/v1".into(),
            degrees,
            sub: vec![],
        })?;
        Ok((sub_pair, maps))
    }

    /// Renders a chain with simplex labels, e.g. `2*e1 - e2`.
    pub fn chain_to_string(&self, c: &Chain) -> String {
        if c.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, v) in &c.coeffs {
            parts.push(format!("{}*{}", format_rational(v), self.label_of(c.degree, *i)));
        }
        parts.join(" + ")
    }

    /// Sparse map from labels to rational strings, used by the JSON outputs.
    pub fn chain_to_label_map(&self, c: &Chain) -> BTreeMap<String, String> {
        c.coeffs
            .iter()
            .map(|(i, v)| (self.label_of(c.degree, *i).to_string(), format_rational(v)))
            .collect()
    }

    pub fn cochain_to_label_map(&self, f: &Cochain) -> BTreeMap<String, String> {
        f.values
            .iter()
            .map(|(i, v)| (self.label_of(f.degree, *i).to_string(), format_rational(v)))
            .collect()
    }

    /// Parses a label -> rational-string map into a chain.
    pub fn chain_from_label_map(
        &self,
        degree: usize,
        map: &BTreeMap<String, String>,
    ) -> Result<Chain> {
        let mut entries = Vec::new();
        for (label, value) in map {
            let Some(i) = self.index_of(degree, label) else {
                return Err(Error::Input(format!("unknown simplex '{label}' in degree {degree}")));
            };
            entries.push((i, parse_rational(value)?));
        }
        Ok(Chain::from_entries(degree, entries))
    }
}
