//! Python bindings for the main types and operations: pair complexes with
//! duality certificates, mapping-cone reports, flat models with
//! straightening and measure discretization, finite groups with bounded
//! cohomology, and the verification suite.
//!
//! Rational values cross the boundary as `p/q` strings (parse them with
//! `fractions.Fraction` on the Python side); chains are dicts from simplex
//! labels to such strings, and the larger documents are JSON strings.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use relhom::complex::{Chain, HomologyClass, PairDescription};
use relhom::generators;
use relhom::geometry::build_net;
use relhom::group::{bounded_cohomology, relative_complex, FiniteGroup as CoreGroup, GSetModel, TupleCochain};
use relhom::measure::{theta, MeasureChain};
use relhom::rational::{format_rational, parse_rational};
use relhom::suite;
use relhom::{build_cone, duality_certificate, norm_comparison_report, ChainComplexPair, ModelSpace, StraightChain};

fn err(e: relhom::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn chain_from_map(
    pair: &ChainComplexPair,
    degree: usize,
    map: HashMap<String, String>,
) -> PyResult<Chain> {
    let map: BTreeMap<String, String> = map.into_iter().collect();
    pair.chain_from_label_map(degree, &map).map_err(err)
}

/// A finite pair complex with exact seminorm computations.
#[pyclass]
struct PairComplex {
    inner: ChainComplexPair,
}

#[pymethods]
impl PairComplex {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let description = PairDescription::from_json(text).map_err(err)?;
        Ok(PairComplex { inner: ChainComplexPair::build(&description).map_err(err)? })
    }

    #[staticmethod]
    fn circle(k: usize) -> PyResult<Self> {
        Ok(PairComplex { inner: generators::circle(k).map_err(err)? })
    }

    #[staticmethod]
    fn interval() -> PyResult<Self> {
        Ok(PairComplex { inner: generators::interval().map_err(err)? })
    }

    #[staticmethod]
    fn torus_grid(m: usize, n: usize) -> PyResult<Self> {
        Ok(PairComplex { inner: generators::torus_grid(m, n).map_err(err)? })
    }

    #[staticmethod]
    fn cylinder_grid(m: usize, n: usize) -> PyResult<Self> {
        Ok(PairComplex { inner: generators::cylinder_grid(m, n).map_err(err)? })
    }

    fn top_degree(&self) -> usize {
        self.inner.top_degree()
    }

    fn dim(&self, degree: usize) -> usize {
        self.inner.dim(degree)
    }

    fn labels(&self, degree: usize) -> Vec<String> {
        self.inner.labels(degree).to_vec()
    }

    fn homology_dim(&self, degree: usize) -> usize {
        self.inner.homology_dim(degree)
    }

    /// Representatives of a homology basis, as label -> coefficient dicts.
    fn homology_basis(&self, degree: usize) -> Vec<BTreeMap<String, String>> {
        self.inner
            .homology_basis(degree)
            .iter()
            .map(|c| self.inner.chain_to_label_map(&c.representative))
            .collect()
    }

    /// Boundary of a chain given as a label -> coefficient dict.
    fn boundary(&self, degree: usize, chain: HashMap<String, String>) -> PyResult<BTreeMap<String, String>> {
        let c = chain_from_map(&self.inner, degree, chain)?;
        let b = self.inner.boundary(&c).map_err(err)?;
        Ok(self.inner.chain_to_label_map(&b))
    }

    /// Relative l1 norm of a chain.
    fn l1_norm_relative(&self, degree: usize, chain: HashMap<String, String>) -> PyResult<String> {
        let c = chain_from_map(&self.inner, degree, chain)?;
        Ok(format_rational(&self.inner.l1_norm_relative(&c)))
    }

    /// Seminorm of the class of a relative cycle: (value, minimizing chain).
    fn seminorm(
        &self,
        degree: usize,
        chain: HashMap<String, String>,
    ) -> PyResult<(String, BTreeMap<String, String>)> {
        let representative = chain_from_map(&self.inner, degree, chain)?;
        let class = HomologyClass { degree, representative };
        let (value, minimizer) = relhom::l1_seminorm(&self.inner, &class).map_err(err)?;
        Ok((format_rational(&value), self.inner.chain_to_label_map(&minimizer)))
    }

    /// Duality certificate for the i-th homology basis class, as a JSON
    /// string in the certificate/v1 schema.
    fn certificate(&self, degree: usize, index: usize) -> PyResult<String> {
        let basis = self.inner.homology_basis(degree);
        let class = basis
            .get(index)
            .ok_or_else(|| PyValueError::new_err(format!("no class {index} in degree {degree}")))?;
        let cert = duality_certificate(&self.inner, class).map_err(err)?;
        serde_json::to_string_pretty(&cert.to_doc(&self.inner, class))
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Mapping-cone norm comparison report (cone-report/v1) as JSON.
    fn cone_report(&self, degree: usize, omegas: Vec<String>) -> PyResult<String> {
        let omegas = omegas
            .iter()
            .map(|s| parse_rational(s))
            .collect::<relhom::Result<Vec<_>>>()
            .map_err(err)?;
        let report = norm_comparison_report(&self.inner, degree, &omegas).map_err(err)?;
        serde_json::to_string_pretty(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Dimension of the mapping-cone homology in a degree.
    fn cone_homology_dim(&self, degree: usize) -> PyResult<usize> {
        Ok(build_cone(&self.inner).map_err(err)?.homology_dim(degree))
    }
}

/// A flat model space (torus or cylinder) with its lattice net.
#[pyclass]
struct Model {
    inner: ModelSpace,
}

#[pymethods]
impl Model {
    #[staticmethod]
    fn torus(dim: usize, scale: &str) -> PyResult<Self> {
        Ok(Model { inner: ModelSpace::torus(dim, parse_rational(scale).map_err(err)?).map_err(err)? })
    }

    #[staticmethod]
    fn cylinder(circumference: &str, height: &str) -> PyResult<Self> {
        Ok(Model {
            inner: ModelSpace::cylinder(
                parse_rational(circumference).map_err(err)?,
                parse_rational(height).map_err(err)?,
            )
            .map_err(err)?,
        })
    }

    /// Canonical form of the straight simplex on the given vertex lifts.
    fn straight_simplex(&self, lifts: Vec<Vec<String>>) -> PyResult<Vec<Vec<String>>> {
        let lifts = parse_points(&lifts)?;
        let s = self.inner.straight_simplex(lifts).map_err(err)?;
        Ok(format_points(s.vertices()))
    }

    /// Net point of each vertex of a straight simplex.
    fn straighten(&self, lifts: Vec<Vec<String>>) -> PyResult<Vec<Vec<String>>> {
        let net = build_net(&self.inner).map_err(err)?;
        let s = self.inner.straight_simplex(parse_points(&lifts)?).map_err(err)?;
        Ok(format_points(net.straighten(&s).map_err(err)?.vertices()))
    }

    /// Straighten a straight-chain/v1 JSON document.
    fn straighten_chain(&self, text: &str) -> PyResult<String> {
        let net = build_net(&self.inner).map_err(err)?;
        let chain = StraightChain::from_json(&self.inner, text).map_err(err)?;
        Ok(net.straighten_chain(&chain).map_err(err)?.to_json())
    }

    /// Prism homotopy of a straight-chain/v1 JSON document (one degree up).
    fn prism_homotopy(&self, text: &str) -> PyResult<String> {
        let net = build_net(&self.inner).map_err(err)?;
        let chain = StraightChain::from_json(&self.inner, text).map_err(err)?;
        Ok(net.prism_homotopy_chain(&chain).map_err(err)?.to_json())
    }

    /// Discretize a measure-chain/v1 document: returns
    /// (theta as straight-chain JSON, total variation, relative norm).
    fn theta(&self, text: &str) -> PyResult<(String, String, String)> {
        let net = build_net(&self.inner).map_err(err)?;
        let mu = MeasureChain::from_json(&self.inner, text).map_err(err)?;
        let image = theta(&net, &mu).map_err(err)?;
        Ok((
            image.to_json(),
            format_rational(&mu.total_variation()),
            format_rational(&mu.relative_norm(&self.inner)),
        ))
    }
}

fn parse_points(points: &[Vec<String>]) -> PyResult<Vec<Vec<relhom::Rational>>> {
    points
        .iter()
        .map(|p| {
            p.iter()
                .map(|c| parse_rational(c))
                .collect::<relhom::Result<Vec<_>>>()
                .map_err(err)
        })
        .collect()
}

fn format_points(points: &[Vec<relhom::Rational>]) -> Vec<Vec<String>> {
    points.iter().map(|p| p.iter().map(format_rational).collect()).collect()
}

/// A finite group with bounded cohomology computations.
#[pyclass]
struct FiniteGroup {
    inner: CoreGroup,
}

#[pymethods]
impl FiniteGroup {
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        Ok(FiniteGroup { inner: CoreGroup::builtin(name).map_err(err)? })
    }

    #[staticmethod]
    fn from_table(table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(FiniteGroup { inner: CoreGroup::new(table).map_err(err)? })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn subgroups(&self) -> Vec<Vec<usize>> {
        self.inner.all_subgroups().iter().map(|s| s.iter().copied().collect()).collect()
    }

    /// Dimension of H^n, absolute or relative to a subgroup.
    #[pyo3(signature = (degree, subgroup=None))]
    fn bounded_cohomology_dim(&self, degree: usize, subgroup: Option<Vec<usize>>) -> PyResult<usize> {
        let set: Option<BTreeSet<usize>> = subgroup.map(|s| s.into_iter().collect());
        if let Some(a) = &set {
            self.inner.validate_subgroup(a).map_err(err)?;
        }
        Ok(bounded_cohomology(&self.inner, set.as_ref(), degree).map_err(err)?.0)
    }

    /// (dim of G-invariants, dim of A-invariants, restriction rank, kernel
    /// dim) in a degree; the restriction is always surjective.
    fn restriction_data(&self, subgroup: Vec<usize>, degree: usize) -> PyResult<(usize, usize, usize, usize)> {
        let set: BTreeSet<usize> = subgroup.into_iter().collect();
        let data = relative_complex(&self.inner, &set, degree).map_err(err)?;
        Ok((data.dim_invariants_g, data.dim_invariants_a, data.restriction_rank, data.kernel_dim))
    }

    /// Round-trips random cochains through the averaging/evaluation maps of
    /// a random discrete model and reports whether `alpha . beta` was the
    /// identity (it always must be).
    fn alpha_beta_roundtrip(&self, subgroup: Vec<usize>, degree: usize, seed: u64) -> PyResult<bool> {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let set: BTreeSet<usize> = subgroup.into_iter().collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let model = GSetModel::with_random_chi(
            self.inner.clone(),
            set,
            2,
            [0usize, 1].into_iter().collect(),
            &mut rng,
        )
        .map_err(err)?;
        let mut f = TupleCochain::zero(self.inner.order(), degree + 1);
        for v in f.values.iter_mut() {
            *v = relhom::rational::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        }
        let round = model.alpha_hat(&model.beta(&f).map_err(err)?).map_err(err)?;
        Ok(round == f)
    }
}

/// Runs the verification suite; returns (name, passed, details) triples.
#[pyfunction]
#[pyo3(signature = (seed=suite::DEFAULT_SEED))]
fn run_suite(seed: u64) -> Vec<(String, bool, String)> {
    suite::run_all(seed).into_iter().map(|r| (r.name, r.passed, r.details)).collect()
}

#[pymodule]
fn relhom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PairComplex>()?;
    m.add_class::<Model>()?;
    m.add_class::<FiniteGroup>()?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
