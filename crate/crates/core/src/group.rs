//! Bounded cohomology of finite groups and pairs via the standard
//! resolution, with the explicit averaging and comparison maps on a
//! discrete G-set model.
//!
//! Cochains are total functions on tuples over a finite domain (the group
//! itself, or the points of a [`GSetModel`]); since the domain is finite
//! every cochain is bounded and the sup norm is a maximum. Invariant
//! cochains are handled in orbit coordinates: the diagonal action on
//! (n+1)-tuples is free, so an invariant degree-n cochain is determined by
//! its values on tuples with first entry the identity, i.e. by a function
//! on n-tuples.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational, RationalMatrix};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Validation("empty multiplication table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::Validation("multiplication table is not closed".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::Validation("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::Validation(format!("element {g} has no inverse")))?;
            inverse[g] = inv;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Validation("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Checks that the index set is a subgroup.
    pub fn validate_subgroup(&self, a: &BTreeSet<usize>) -> Result<()> {
        if !a.contains(&self.identity) {
            return Err(Error::Validation("subgroup must contain the identity".into()));
        }
        for &x in a {
            if x >= self.order() {
                return Err(Error::Validation("subgroup element out of range".into()));
            }
            if !a.contains(&self.inv(x)) {
                return Err(Error::Validation("subgroup not closed under inverses".into()));
            }
            for &y in a {
                if !a.contains(&self.mul(x, y)) {
                    return Err(Error::Validation("subgroup not closed under products".into()));
                }
            }
        }
        Ok(())
    }

    /// All subgroups, by brute-force subset enumeration (the built-in
    /// groups have order at most six).
    pub fn all_subgroups(&self) -> Vec<BTreeSet<usize>> {
        let n = self.order();
        assert!(n <= 16, "subgroup enumeration is exponential in the order");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & (1 << self.identity) == 0 {
                continue;
            }
            let set: BTreeSet<usize> = (0..n).filter(|&g| mask & (1 << g) != 0).collect();
            if self.validate_subgroup(&set).is_ok() {
                out.push(set);
            }
        }
        out
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(table).expect("cyclic table is a group")
    }

    /// Klein four-group.
    pub fn klein_four() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        FiniteGroup::new(table).expect("xor table is a group")
    }

    /// Symmetric group on three letters.
    pub fn symmetric_3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
        let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = compose(p, q);
                        perms.iter().position(|r| *r == pq).expect("closed")
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(table).expect("permutation table is a group")
    }

    /// Built-in groups by name: z2, z3, z2xz2, s3.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "z2" => Ok(Self::cyclic(2)),
            "z3" => Ok(Self::cyclic(3)),
            "z2xz2" => Ok(Self::klein_four()),
            "s3" => Ok(Self::symmetric_3()),
            other => Err(Error::Input(format!("unknown built-in group '{other}'"))),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = GroupDoc {
            schema: "group/v1".into(),
            table: self.table.clone(),
            identity: Some(self.identity),
            subgroup: None,
        };
        serde_json::to_string_pretty(&doc).expect("group serializes")
    }

    /// Parses `group/v1` JSON; returns the group and the optional subgroup.
    pub fn from_json(text: &str) -> Result<(Self, Option<BTreeSet<usize>>)> {
        let doc: GroupDoc = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("bad group JSON: {e}")))?;
        if doc.schema != "group/v1" {
            return Err(Error::Input(format!("unknown schema '{}'", doc.schema)));
        }
        let group = FiniteGroup::new(doc.table)?;
        if let Some(claimed) = doc.identity {
            if claimed != group.identity {
                return Err(Error::Validation("declared identity is wrong".into()));
            }
        }
        let subgroup = match doc.subgroup {
            None => None,
            Some(indices) => {
                let set: BTreeSet<usize> = indices.into_iter().collect();
                group.validate_subgroup(&set)?;
                Some(set)
            }
        };
        Ok((group, subgroup))
    }
}

#[derive(Serialize, Deserialize)]
struct GroupDoc {
    schema: String,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    identity: Option<usize>,
    #[serde(default)]
    subgroup: Option<Vec<usize>>,
}

/// Total function on `domain^arity` with rational values. Degree-n cochains
/// have arity n + 1; arity 0 represents the coefficients in degree -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleCochain {
    pub arity: usize,
    pub domain: usize,
    pub values: Vec<Rational>,
}

impl TupleCochain {
    pub fn zero(domain: usize, arity: usize) -> Self {
        TupleCochain { arity, domain, values: vec![Rational::zero(); domain.pow(arity as u32)] }
    }

    pub fn constant(domain: usize, arity: usize, value: Rational) -> Self {
        TupleCochain { arity, domain, values: vec![value; domain.pow(arity as u32)] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    // Little-endian mixed radix: index = sum x_i domain^i.
    pub fn index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        tuple.iter().rev().fold(0, |acc, &x| acc * self.domain + x)
    }

    pub fn tuple_of(&self, mut index: usize) -> Vec<usize> {
        let mut t = Vec::with_capacity(self.arity);
        for _ in 0..self.arity {
            t.push(index % self.domain);
            index /= self.domain;
        }
        t
    }

    pub fn get(&self, tuple: &[usize]) -> &Rational {
        &self.values[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], v: Rational) {
        let i = self.index(tuple);
        self.values[i] = v;
    }

    pub fn sup_norm(&self) -> Rational {
        self.values.iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &TupleCochain) -> TupleCochain {
        assert_eq!((self.arity, self.domain), (other.arity, other.domain));
        TupleCochain {
            arity: self.arity,
            domain: self.domain,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &TupleCochain) -> TupleCochain {
        assert_eq!((self.arity, self.domain), (other.arity, other.domain));
        TupleCochain {
            arity: self.arity,
            domain: self.domain,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        }
    }

    /// Homogeneous coboundary: alternating sum over argument omissions.
    pub fn coboundary(&self) -> TupleCochain {
        let mut out = TupleCochain::zero(self.domain, self.arity + 1);
        let mut tuple = vec![0usize; self.arity + 1];
        for idx in 0..out.len() {
            let mut rem = idx;
            for slot in tuple.iter_mut() {
                *slot = rem % self.domain;
                rem /= self.domain;
            }
            let mut acc = Rational::zero();
            let mut omitted = Vec::with_capacity(self.arity);
            for skip in 0..=self.arity {
                omitted.clear();
                omitted.extend(tuple.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, &x)| x));
                let v = self.get(&omitted);
                if skip % 2 == 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
            out.values[idx] = acc;
        }
        out
    }

    /// Cone at a base point: `k(f)(x_1, ..) = f(base, x_1, ..)`. This is the
    /// contracting homotopy of the standard resolution (base = identity) and
    /// of the model resolution (base = basepoint); its norm is at most one.
    pub fn cone_at(&self, base: usize) -> TupleCochain {
        assert!(self.arity >= 1, "cone needs at least one argument");
        let mut out = TupleCochain::zero(self.domain, self.arity - 1);
        for idx in 0..out.len() {
            // Prepending the base point is index arithmetic in little-endian
            // mixed radix: full = base + idx * domain.
            out.values[idx] = self.values[base + idx * self.domain].clone();
        }
        out
    }
}

/// Diagonal left action of a group element on a group-domain cochain:
/// `(g . f)(x) = f(g^{-1} x_0, ..., g^{-1} x_n)`.
pub fn act_on_group_cochain(group: &FiniteGroup, g: usize, f: &TupleCochain) -> TupleCochain {
    let ginv = group.inv(g);
    transform_cochain(f, |x| group.mul(ginv, x))
}

fn transform_cochain(f: &TupleCochain, map: impl Fn(usize) -> usize) -> TupleCochain {
    let mut out = TupleCochain::zero(f.domain, f.arity);
    let mut tuple = vec![0usize; f.arity];
    for idx in 0..f.len() {
        let mut rem = idx;
        for slot in tuple.iter_mut() {
            *slot = rem % f.domain;
            rem /= f.domain;
        }
        let moved: Vec<usize> = tuple.iter().map(|&x| map(x)).collect();
        out.values[idx] = f.get(&moved).clone();
    }
    out
}

/// Restriction of a group-domain cochain to tuples over a subgroup, indexed
/// by the sorted subgroup elements.
pub fn restrict_to_subgroup(
    group: &FiniteGroup,
    subgroup: &BTreeSet<usize>,
    f: &TupleCochain,
) -> TupleCochain {
    assert_eq!(f.domain, group.order());
    let elements: Vec<usize> = subgroup.iter().copied().collect();
    let mut out = TupleCochain::zero(elements.len(), f.arity);
    let mut tuple = vec![0usize; f.arity];
    for idx in 0..out.len() {
        let mut rem = idx;
        for slot in tuple.iter_mut() {
            *slot = rem % elements.len();
            rem /= elements.len();
        }
        let lifted: Vec<usize> = tuple.iter().map(|&x| elements[x]).collect();
        out.values[idx] = f.get(&lifted).clone();
    }
    out
}

// ---------------------------------------------------------------------------
// Invariant complexes in orbit coordinates.
// ---------------------------------------------------------------------------

/// The invariant part of the degree-n standard cochains, relative to a
/// subgroup when one is given: matrices are expressed on the orbit basis
/// (tuples with first entry the identity, encoded as n-tuples).
#[derive(Clone, Debug)]
pub struct InvariantComplex {
    group: FiniteGroup,
    /// When present, only cochains vanishing on subgroup tuples.
    relative_to: Option<BTreeSet<usize>>,
}

impl InvariantComplex {
    pub fn absolute(group: &FiniteGroup) -> Self {
        InvariantComplex { group: group.clone(), relative_to: None }
    }

    pub fn relative(group: &FiniteGroup, subgroup: &BTreeSet<usize>) -> Result<Self> {
        group.validate_subgroup(subgroup)?;
        Ok(InvariantComplex { group: group.clone(), relative_to: Some(subgroup.clone()) })
    }

    fn order(&self) -> usize {
        self.group.order()
    }

    // Orbit-coordinate tuples of length n, filtered to the complement of
    // all-subgroup tuples in the relative case.
    fn coordinates(&self, n: usize) -> Vec<Vec<usize>> {
        let g = self.order();
        let total = g.pow(n as u32);
        let mut out = Vec::new();
        for idx in 0..total {
            let mut tuple = Vec::with_capacity(n);
            let mut rem = idx;
            for _ in 0..n {
                tuple.push(rem % g);
                rem /= g;
            }
            if let Some(a) = &self.relative_to {
                if tuple.iter().all(|x| a.contains(x)) {
                    continue;
                }
            }
            out.push(tuple);
        }
        out
    }

    pub fn dim(&self, n: usize) -> usize {
        let g = self.order();
        let total = g.pow(n as u32);
        match &self.relative_to {
            None => total,
            Some(a) => total - a.len().pow(n as u32),
        }
    }

    /// Matrix of the coboundary from degree n to degree n + 1 in orbit
    /// coordinates. An invariant cochain is evaluated at an arbitrary tuple
    /// by translating its first entry to the identity.
    pub fn coboundary_matrix(&self, n: usize) -> RationalMatrix {
        let source = self.coordinates(n);
        let target = self.coordinates(n + 1);
        let index_of: BTreeMap<Vec<usize>, usize> =
            source.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut m = RationalMatrix::zero(target.len(), source.len());
        for (row, t) in target.iter().enumerate() {
            // The row tuple (t_1, .., t_{n+1}) stands for (e, t_1, .., t_{n+1}).
            // Omitting entry 0 gives (t_1, .., t_{n+1}), whose orbit
            // coordinates are (t_1^{-1} t_2, .., t_1^{-1} t_{n+1}); omitting
            // entry i >= 1 keeps the identity in front.
            for skip in 0..=n + 1 {
                let coords: Vec<usize> = if skip == 0 {
                    let inv = self.group.inv(t[0]);
                    t[1..].iter().map(|&x| self.group.mul(inv, x)).collect()
                } else {
                    t.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != skip - 1)
                        .map(|(_, &x)| x)
                        .collect()
                };
                let Some(&col) = index_of.get(&coords) else {
                    // In the relative case the omitted tuple may be an
                    // all-subgroup tuple, where the cochain vanishes.
                    continue;
                };
                let sign = if skip % 2 == 0 { rat(1) } else { rat(-1) };
                let cur = m.get(row, col) + sign;
                m.set(row, col, cur);
            }
        }
        m
    }

    /// Dimension and representative basis (in orbit coordinates) of the
    /// degree-n cohomology; degree 0 is the kernel of the first coboundary.
    pub fn cohomology(&self, n: usize) -> (usize, Vec<Vec<Rational>>) {
        let dn = self.coboundary_matrix(n);
        let kernel = dn.kernel_basis();
        if n == 0 {
            return (kernel.len(), kernel);
        }
        let dprev = self.coboundary_matrix(n - 1);
        let chosen = crate::rational::independent_modulo(&dprev, &kernel);
        let basis: Vec<Vec<Rational>> = chosen.into_iter().map(|i| kernel[i].clone()).collect();
        (basis.len(), basis)
    }
}

/// Summary of the restriction between invariant complexes in one degree.
#[derive(Clone, Debug)]
pub struct RelativeComplexData {
    pub dim_invariants_g: usize,
    pub dim_invariants_a: usize,
    pub restriction_rank: usize,
    pub kernel_dim: usize,
    pub kernel_basis: Vec<Vec<Rational>>,
}

/// The restriction from G-invariant to A-invariant degree-n cochains, in
/// orbit coordinates. Verifies surjectivity (properness) and that its
/// kernel is the relative invariant complex in the same degree.
pub fn relative_complex(
    group: &FiniteGroup,
    subgroup: &BTreeSet<usize>,
    n: usize,
) -> Result<RelativeComplexData> {
    group.validate_subgroup(subgroup)?;
    let g = group.order();
    let elements: Vec<usize> = subgroup.iter().copied().collect();
    let a = elements.len();
    let dim_g = g.pow(n as u32);
    let dim_a = a.pow(n as u32);

    // Restriction in orbit coordinates is the selection of all-subgroup
    // coordinate tuples.
    let mut m = RationalMatrix::zero(dim_a, dim_g);
    for row in 0..dim_a {
        let mut rem = row;
        let mut col = 0usize;
        let mut stride = 1usize;
        for _ in 0..n {
            let x = elements[rem % a];
            rem /= a;
            col += x * stride;
            stride *= g;
        }
        m.set(row, col, rat(1));
    }
    let restriction_rank = m.rank();
    if restriction_rank != dim_a {
        return Err(Error::Internal("restriction of invariants must be surjective".into()));
    }
    let kernel_basis = m.kernel_basis();
    let kernel_dim = kernel_basis.len();
    if kernel_dim + restriction_rank != dim_g {
        return Err(Error::Internal("invariant restriction rank equation failed".into()));
    }
    let relative = InvariantComplex::relative(group, subgroup)?;
    if kernel_dim != relative.dim(n) {
        return Err(Error::Internal(
            "kernel of the restriction is not the relative complex".into(),
        ));
    }
    Ok(RelativeComplexData {
        dim_invariants_g: dim_g,
        dim_invariants_a: dim_a,
        restriction_rank,
        kernel_dim,
        kernel_basis,
    })
}

/// Bounded cohomology dimension (and representatives in orbit coordinates)
/// of the group, or of the pair when a subgroup is given.
pub fn bounded_cohomology(
    group: &FiniteGroup,
    subgroup: Option<&BTreeSet<usize>>,
    n: usize,
) -> Result<(usize, Vec<Vec<Rational>>)> {
    let complex = match subgroup {
        None => InvariantComplex::absolute(group),
        Some(a) => InvariantComplex::relative(group, a)?,
    };
    Ok(complex.cohomology(n))
}

// ---------------------------------------------------------------------------
// The discrete G-set model and the comparison maps.
// ---------------------------------------------------------------------------

/// Discrete stand-in for the universal cover of a pair: the points are
/// `G x F` for a finite fiber set `F` with basepoint fiber 0, the lifted
/// subspace is `A x F_W`, and `chi` is an equivariant partition of unity
/// concentrated along the group direction.
#[derive(Clone, Debug)]
pub struct GSetModel {
    group: FiniteGroup,
    subgroup: BTreeSet<usize>,
    fibers: usize,
    w_fibers: BTreeSet<usize>,
    /// chi[fiber][g], one probability vector per fiber.
    chi: Vec<Vec<Rational>>,
}

impl GSetModel {
    /// Builds a model with an explicit chi and verifies the partition
    /// properties: each fiber's weights are nonnegative and sum to one, the
    /// basepoint fiber is the point mass at the identity, and fibers of the
    /// lifted subspace are supported on the subgroup.
    pub fn new(
        group: FiniteGroup,
        subgroup: BTreeSet<usize>,
        fibers: usize,
        w_fibers: BTreeSet<usize>,
        chi: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        group.validate_subgroup(&subgroup)?;
        if fibers == 0 || !w_fibers.contains(&0) {
            return Err(Error::Input(
                "the model needs fiber 0, and it must belong to the subspace fibers".into(),
            ));
        }
        if w_fibers.iter().any(|&f| f >= fibers) {
            return Err(Error::Input("subspace fiber out of range".into()));
        }
        if chi.len() != fibers || chi.iter().any(|p| p.len() != group.order()) {
            return Err(Error::Input("chi must give one weight per group element per fiber".into()));
        }
        let model = GSetModel { group, subgroup, fibers, w_fibers, chi };
        model.validate_chi()?;
        Ok(model)
    }

    /// Deterministic default chi: point mass at the identity on fiber 0,
    /// uniform on the subgroup for other subspace fibers, uniform on the
    /// group elsewhere.
    pub fn with_default_chi(
        group: FiniteGroup,
        subgroup: BTreeSet<usize>,
        fibers: usize,
        w_fibers: BTreeSet<usize>,
    ) -> Result<Self> {
        let order = group.order();
        let mut chi = Vec::with_capacity(fibers);
        for f in 0..fibers {
            let mut p = vec![Rational::zero(); order];
            if f == 0 {
                p[group.identity()] = Rational::one();
            } else if w_fibers.contains(&f) {
                let share = rat(subgroup.len() as i64).recip();
                for &a in &subgroup {
                    p[a] = share.clone();
                }
            } else {
                let share = rat(order as i64).recip();
                for w in p.iter_mut() {
                    *w = share.clone();
                }
            }
            chi.push(p);
        }
        Self::new(group, subgroup, fibers, w_fibers, chi)
    }

    /// Random chi satisfying the partition properties: per fiber, a random
    /// nonempty support inside the allowed set with random positive weights
    /// normalized to total one.
    pub fn with_random_chi(
        group: FiniteGroup,
        subgroup: BTreeSet<usize>,
        fibers: usize,
        w_fibers: BTreeSet<usize>,
        rng: &mut impl Rng,
    ) -> Result<Self> {
        let order = group.order();
        let mut chi = Vec::with_capacity(fibers);
        for f in 0..fibers {
            let mut p = vec![Rational::zero(); order];
            if f == 0 {
                p[group.identity()] = Rational::one();
            } else {
                let allowed: Vec<usize> = if w_fibers.contains(&f) {
                    subgroup.iter().copied().collect()
                } else {
                    (0..order).collect()
                };
                let support = rng.gen_range(1..=allowed.len().min(3));
                let mut picked = BTreeSet::new();
                while picked.len() < support {
                    picked.insert(allowed[rng.gen_range(0..allowed.len())]);
                }
                let weights: Vec<Rational> =
                    picked.iter().map(|_| rat(rng.gen_range(1..=6))).collect();
                let total: Rational = weights.iter().cloned().sum();
                for (&g, w) in picked.iter().zip(weights) {
                    p[g] = w / &total;
                }
            }
            chi.push(p);
        }
        Self::new(group, subgroup, fibers, w_fibers, chi)
    }

    fn validate_chi(&self) -> Result<()> {
        for (f, p) in self.chi.iter().enumerate() {
            if p.iter().any(|w| w.is_negative()) {
                return Err(Error::Input("chi weights must be nonnegative".into()));
            }
            let total: Rational = p.iter().cloned().sum();
            if !total.is_one() {
                return Err(Error::Input(format!("chi weights on fiber {f} do not sum to one")));
            }
            if self.w_fibers.contains(&f) {
                for (g, w) in p.iter().enumerate() {
                    if !w.is_zero() && !self.subgroup.contains(&g) {
                        return Err(Error::Input(format!(
                            "chi is positive outside the subgroup on subspace fiber {f}"
                        )));
                    }
                }
            }
        }
        if !self.chi[0][self.group.identity()].is_one() {
            return Err(Error::Input("chi must be the identity point mass on fiber 0".into()));
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &BTreeSet<usize> {
        &self.subgroup
    }

    pub fn point_count(&self) -> usize {
        self.fibers * self.group.order()
    }

    pub fn point(&self, g: usize, fiber: usize) -> usize {
        fiber * self.group.order() + g
    }

    pub fn group_part(&self, point: usize) -> usize {
        point % self.group.order()
    }

    pub fn fiber_part(&self, point: usize) -> usize {
        point / self.group.order()
    }

    /// The basepoint (identity, fiber 0).
    pub fn basepoint(&self) -> usize {
        self.point(self.group.identity(), 0)
    }

    /// chi evaluated at a point.
    pub fn chi_at(&self, point: usize) -> &Rational {
        &self.chi[self.fiber_part(point)][self.group_part(point)]
    }

    /// Left action of a group element on a point: `g . (h, f) = (gh, f)`.
    pub fn act_point(&self, g: usize, point: usize) -> usize {
        self.point(self.group.mul(g, self.group_part(point)), self.fiber_part(point))
    }

    /// Action on model cochains: `(g . phi)(x) = phi(g^{-1} x)`.
    pub fn act_on_cochain(&self, g: usize, phi: &TupleCochain) -> TupleCochain {
        assert_eq!(phi.domain, self.point_count());
        let ginv = self.group.inv(g);
        transform_cochain(phi, |x| self.act_point(ginv, x))
    }

    /// Contracting homotopy of the model resolution: cone at the basepoint.
    pub fn homotopy(&self, phi: &TupleCochain) -> TupleCochain {
        phi.cone_at(self.basepoint())
    }

    /// Averaging map from group cochains to model cochains:
    ///
    /// ```text
    /// beta(f)(x_0, .., x_n) = sum over (g_0, .., g_n) of
    ///     chi(g_0^{-1} x_0) ... chi(g_n^{-1} x_n) f(g_0, .., g_n)
    /// ```
    ///
    /// Each factor list is sparse (chi has small support per fiber), so the
    /// sum iterates over the product of the supports.
    pub fn beta(&self, f: &TupleCochain) -> Result<TupleCochain> {
        if f.domain != self.group.order() {
            return Err(Error::Input("beta expects a group-domain cochain".into()));
        }
        let order = self.group.order();
        let points = self.point_count();
        // support[x] = list of (g, chi(g^{-1} x)) with nonzero weight.
        let mut support: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(points);
        for x in 0..points {
            let h = self.group_part(x);
            let fiber = self.fiber_part(x);
            let mut entries = Vec::new();
            for g in 0..order {
                let w = &self.chi[fiber][self.group.mul(self.group.inv(g), h)];
                if !w.is_zero() {
                    entries.push((g, w.clone()));
                }
            }
            support.push(entries);
        }

        let mut out = TupleCochain::zero(points, f.arity);
        let mut tuple = vec![0usize; f.arity];
        for idx in 0..out.len() {
            let mut rem = idx;
            for slot in tuple.iter_mut() {
                *slot = rem % points;
                rem /= points;
            }
            out.values[idx] = self.beta_term(f, &tuple, 0, &Rational::one(), &mut vec![0; f.arity], &support);
        }
        Ok(out)
    }

    fn beta_term(
        &self,
        f: &TupleCochain,
        xs: &[usize],
        pos: usize,
        weight: &Rational,
        gs: &mut Vec<usize>,
        support: &[Vec<(usize, Rational)>],
    ) -> Rational {
        if pos == xs.len() {
            return weight * f.get(gs);
        }
        let mut acc = Rational::zero();
        for (g, w) in &support[xs[pos]] {
            gs[pos] = *g;
            let next = weight * w;
            acc += self.beta_term(f, xs, pos + 1, &next, gs, support);
        }
        acc
    }

    /// Evaluation map from model cochains back to group cochains. Computes
    /// the inductive form through the contracting homotopy,
    ///
    /// ```text
    /// alpha(phi)(g_0, .., g_n) = alpha(g_0 . t(g_0^{-1} . phi))(g_1, .., g_n)
    /// ```
    ///
    /// and the closed form `phi(g_0 b_0, .., g_n b_0)`, and insists that the
    /// two agree before returning.
    pub fn alpha_hat(&self, phi: &TupleCochain) -> Result<TupleCochain> {
        if phi.domain != self.point_count() {
            return Err(Error::Input("alpha expects a model-domain cochain".into()));
        }
        let inductive = self.alpha_inductive(phi);
        let closed = self.alpha_closed(phi);
        if inductive != closed {
            return Err(Error::Internal(
                "inductive and closed evaluations of alpha disagree".into(),
            ));
        }
        Ok(inductive)
    }

    fn alpha_closed(&self, phi: &TupleCochain) -> TupleCochain {
        let order = self.group.order();
        let mut out = TupleCochain::zero(order, phi.arity);
        let mut tuple = vec![0usize; phi.arity];
        for idx in 0..out.len() {
            let mut rem = idx;
            for slot in tuple.iter_mut() {
                *slot = rem % order;
                rem /= order;
            }
            let points: Vec<usize> = tuple.iter().map(|&g| self.point(g, 0)).collect();
            out.values[idx] = phi.get(&points).clone();
        }
        out
    }

    fn alpha_inductive(&self, phi: &TupleCochain) -> TupleCochain {
        let order = self.group.order();
        if phi.arity == 0 {
            return TupleCochain { arity: 0, domain: order, values: phi.values.clone() };
        }
        let mut out = TupleCochain::zero(order, phi.arity);
        for g0 in 0..order {
            let pulled = self.act_on_cochain(self.group.inv(g0), phi);
            let contracted = self.homotopy(&pulled);
            let pushed = self.act_on_cochain(g0, &contracted);
            let sub = self.alpha_inductive(&pushed);
            // out(g0, rest) = sub(rest): little-endian, g0 is the lowest digit.
            for (rest_idx, v) in sub.values.iter().enumerate() {
                out.values[g0 + rest_idx * order] = v.clone();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_cochain(domain: usize, arity: usize, rng: &mut impl Rng) -> TupleCochain {
        let mut f = TupleCochain::zero(domain, arity);
        for v in f.values.iter_mut() {
            *v = crate::rational::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        }
        f
    }

    #[test]
    fn builtin_groups_are_valid() {
        for name in ["z2", "z3", "z2xz2", "s3"] {
            let g = FiniteGroup::builtin(name).unwrap();
            assert!(g.order() >= 2);
        }
        assert!(FiniteGroup::builtin("z5x").is_err());
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::new(vec![]).is_err());
    }

    #[test]
    fn subgroup_enumeration_s3() {
        let s3 = FiniteGroup::symmetric_3();
        // {e}, three transposition subgroups, the 3-cycle subgroup, S3.
        assert_eq!(s3.all_subgroups().len(), 6);
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = FiniteGroup::cyclic(3);
        for arity in 1..=3 {
            let f = random_cochain(g.order(), arity, &mut rng);
            let dd = f.coboundary().coboundary();
            assert!(dd.values.iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn constant_degree_zero_cochain_is_closed() {
        let g = FiniteGroup::cyclic(4);
        let f = TupleCochain::constant(g.order(), 1, rat(5));
        assert!(f.coboundary().values.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn homotopy_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = FiniteGroup::klein_four();
        let e = g.identity();
        // delta . k + k . delta = id in degrees 0..=2 (arity 1..=3), and
        // k . delta = id on arity 0.
        for arity in 1..=3 {
            let f = random_cochain(g.order(), arity, &mut rng);
            let lhs = f.cone_at(e).coboundary().add(&f.coboundary().cone_at(e));
            assert_eq!(lhs, f, "arity {arity}");
            assert!(f.cone_at(e).sup_norm() <= f.sup_norm());
        }
        let t = TupleCochain { arity: 0, domain: g.order(), values: vec![rat(3)] };
        assert_eq!(t.coboundary().cone_at(e), t);
    }

    #[test]
    fn restriction_commutes_with_homotopies() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let g = FiniteGroup::symmetric_3();
        let a: BTreeSet<usize> = [0usize, 3].into_iter().collect();
        g.validate_subgroup(&a).unwrap();
        for arity in 1..=2 {
            let f = random_cochain(g.order(), arity, &mut rng);
            // The subgroup contains the identity at local index 0.
            let lhs = restrict_to_subgroup(&g, &a, &f).cone_at(0);
            let rhs = restrict_to_subgroup(&g, &a, &f.cone_at(g.identity()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn invariant_dimensions_and_relative_kernel() {
        let g = FiniteGroup::cyclic(2);
        let trivial: BTreeSet<usize> = [g.identity()].into_iter().collect();
        let data = relative_complex(&g, &trivial, 1).unwrap();
        assert_eq!(data.dim_invariants_g, 2);
        assert_eq!(data.dim_invariants_a, 1);
        assert_eq!(data.restriction_rank, 1);
        assert_eq!(data.kernel_dim, 1);
        // A = G: the restriction is bijective, the kernel is trivial.
        let all: BTreeSet<usize> = (0..2).collect();
        for n in 0..=3 {
            let data = relative_complex(&g, &all, n).unwrap();
            assert_eq!(data.kernel_dim, 0);
        }
    }

    #[test]
    fn bounded_cohomology_of_small_groups() {
        for name in ["z2", "z3"] {
            let g = FiniteGroup::builtin(name).unwrap();
            let (h0, _) = bounded_cohomology(&g, None, 0).unwrap();
            assert_eq!(h0, 1, "H^0 of {name}");
            let (h1, _) = bounded_cohomology(&g, None, 1).unwrap();
            assert_eq!(h1, 0, "H^1 of {name}");
            let (h2, _) = bounded_cohomology(&g, None, 2).unwrap();
            assert_eq!(h2, 0, "H^2 of {name}");
        }
    }

    #[test]
    fn relative_bounded_cohomology_vanishes_in_low_degrees() {
        let g = FiniteGroup::cyclic(3);
        let a: BTreeSet<usize> = (0..3).collect();
        for n in 1..=2 {
            let (h, _) = bounded_cohomology(&g, Some(&a), n).unwrap();
            assert_eq!(h, 0);
        }
    }

    #[test]
    fn default_chi_on_single_fiber_is_identity_indicator() {
        let g = FiniteGroup::cyclic(3);
        let a: BTreeSet<usize> = [0usize].into_iter().collect();
        let model =
            GSetModel::with_default_chi(g.clone(), a, 1, [0usize].into_iter().collect()).unwrap();
        for h in 0..3 {
            let expected = if h == g.identity() { rat(1) } else { rat(0) };
            assert_eq!(*model.chi_at(model.point(h, 0)), expected);
        }
    }

    #[test]
    fn chi_validation_rejects_bad_specs() {
        let g = FiniteGroup::cyclic(2);
        let a: BTreeSet<usize> = [0usize].into_iter().collect();
        let w: BTreeSet<usize> = [0usize, 1].into_iter().collect();
        // Fiber 1 is a subspace fiber, so uniform-on-G chi violates the
        // support condition.
        let chi = vec![
            vec![rat(1), rat(0)],
            vec![crate::rational::ratio(1, 2), crate::rational::ratio(1, 2)],
        ];
        assert!(GSetModel::new(g.clone(), a.clone(), 2, w.clone(), chi).is_err());
        // Uniform on A is fine.
        let chi = vec![vec![rat(1), rat(0)], vec![rat(1), rat(0)]];
        assert!(GSetModel::new(g, a, 2, w, chi).is_ok());
    }

    #[test]
    fn beta_preserves_constants_and_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let g = FiniteGroup::cyclic(3);
        let a: BTreeSet<usize> = [0usize].into_iter().collect();
        let model = GSetModel::with_random_chi(
            g.clone(),
            a,
            2,
            [0usize].into_iter().collect(),
            &mut rng,
        )
        .unwrap();
        let constant = TupleCochain::constant(g.order(), 2, rat(4));
        let image = model.beta(&constant).unwrap();
        assert!(image.values.iter().all(|v| *v == rat(4)));
        let f = random_cochain(g.order(), 2, &mut rng);
        let image = model.beta(&f).unwrap();
        assert!(image.sup_norm() <= f.sup_norm());
    }

    #[test]
    fn beta_is_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let g = FiniteGroup::klein_four();
        let a: BTreeSet<usize> = [0usize, 1].into_iter().collect();
        let model = GSetModel::with_random_chi(
            g.clone(),
            a,
            2,
            [0usize, 1].into_iter().collect(),
            &mut rng,
        )
        .unwrap();
        let f = random_cochain(g.order(), 1, &mut rng);
        for gg in 0..g.order() {
            let lhs = model.beta(&act_on_group_cochain(&g, gg, &f)).unwrap();
            let rhs = model.act_on_cochain(gg, &model.beta(&f).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn alpha_after_beta_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let g = FiniteGroup::cyclic(3);
        let a: BTreeSet<usize> = (0..3).collect();
        for _ in 0..3 {
            let model = GSetModel::with_random_chi(
                g.clone(),
                a.clone(),
                2,
                [0usize, 1].into_iter().collect(),
                &mut rng,
            )
            .unwrap();
            for arity in 1..=3 {
                let f = random_cochain(g.order(), arity, &mut rng);
                let round = model.alpha_hat(&model.beta(&f).unwrap()).unwrap();
                assert_eq!(round, f, "arity {arity}");
            }
        }
    }

    #[test]
    fn alpha_degree_zero_unwinds_to_basepoint_orbit() {
        let g = FiniteGroup::cyclic(2);
        let a: BTreeSet<usize> = [0usize].into_iter().collect();
        let model =
            GSetModel::with_default_chi(g.clone(), a, 2, [0usize].into_iter().collect()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let phi = random_cochain(model.point_count(), 1, &mut rng);
        let f = model.alpha_hat(&phi).unwrap();
        for g0 in 0..g.order() {
            assert_eq!(f.values[g0], *phi.get(&[model.point(g0, 0)]));
        }
    }

    #[test]
    fn group_json_round_trip() {
        let g = FiniteGroup::symmetric_3();
        let text = g.to_json();
        let (back, subgroup) = FiniteGroup::from_json(&text).unwrap();
        assert_eq!(back.order(), 6);
        assert!(subgroup.is_none());
    }
}
