//! The exact verification suite.
//!
//! Each check asserts a family of rational equalities or inequalities on the
//! built-in models and returns a [`CheckResult`]; the command line `suite`
//! subcommand prints one line per check, and the acceptance tests run the
//! same functions. Randomized checks take an explicit seed and default to
//! [`DEFAULT_SEED`].

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{Chain, ChainComplexPair, HomologyClass};
use crate::cone::build_cone;
use crate::error::{Error, Result};
use crate::generators;
use crate::geometry::{build_net, ModelSpace, StraightChain, StraightSimplex};
use crate::group::{
    act_on_group_cochain, bounded_cohomology, relative_complex, restrict_to_subgroup,
    FiniteGroup, GSetModel, TupleCochain,
};
use crate::measure::{iota, theta, MeasureChain};
use crate::rational::{format_rational, rat, ratio, Rational};
use crate::seminorm;

/// Seed used by `suite` when none is given.
pub const DEFAULT_SEED: u64 = 2024;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

fn pass(name: &str, details: String) -> CheckResult {
    CheckResult { name: name.into(), passed: true, details }
}

fn fail(name: &str, details: String) -> CheckResult {
    CheckResult { name: name.into(), passed: false, details }
}

fn outcome(name: &str, result: Result<String>) -> CheckResult {
    match result {
        Ok(details) => pass(name, details),
        Err(e) => fail(name, e.to_string()),
    }
}

/// The standard test bed: circles, the interval pair, a cylinder and a torus.
pub fn suite_pairs() -> Result<Vec<(String, ChainComplexPair)>> {
    let mut out = Vec::new();
    for k in 3..=6 {
        out.push((format!("circle({k})"), generators::circle(k)?));
    }
    out.push(("interval".into(), generators::interval()?));
    out.push(("cylinder_grid(6,2)".into(), generators::cylinder_grid(6, 2)?));
    out.push(("torus_grid(4,4)".into(), generators::torus_grid(4, 4)?));
    Ok(out)
}

/// Duality: the primal l1 seminorm equals the dual sup-norm value, exactly,
/// for every class of every suite pair; certificates are re-verified.
pub fn check_duality() -> CheckResult {
    outcome("duality", (|| {
        let pairs = suite_pairs()?;
        let mut rows = 0;
        for (name, pair) in &pairs {
            for n in 0..=pair.top_degree() {
                for class in pair.homology_basis(n) {
                    let cert = seminorm::duality_certificate(pair, &class)?;
                    if cert.primal_value != cert.dual_value {
                        return Err(Error::Internal(format!(
                            "{name} degree {n}: primal {} != dual {}",
                            format_rational(&cert.primal_value),
                            format_rational(&cert.dual_value)
                        )));
                    }
                    rows += 1;
                }
            }
        }
        Ok(format!("{rows} classes, primal = dual exactly on each"))
    })())
}

/// Cone monotonicity: relative seminorm <= cone seminorm at omega = 0, and
/// cone seminorms are nondecreasing in omega over {0, 1, 10}.
pub fn check_cone_monotonicity() -> CheckResult {
    outcome("cone-monotonicity", (|| {
        let omegas = [rat(0), rat(1), rat(10)];
        let pairs = suite_pairs()?;
        let mut rows = 0;
        for (name, pair) in &pairs {
            let cone = build_cone(pair)?;
            for n in 0..=pair.top_degree() {
                for class in pair.homology_basis(n) {
                    let (relative, _) = seminorm::l1_seminorm(pair, &class)?;
                    let cycle = cone.beta_inverse(&class)?;
                    let mut previous: Option<Rational> = None;
                    for omega in &omegas {
                        let (value, _) = cone.l1_seminorm(&cycle, omega)?;
                        if relative > value {
                            return Err(Error::Internal(format!(
                                "{name} degree {n}: relative > cone({})",
                                format_rational(omega)
                            )));
                        }
                        if let Some(prev) = &previous {
                            if *prev > value {
                                return Err(Error::Internal(format!(
                                    "{name} degree {n}: cone seminorm decreased in omega"
                                )));
                            }
                        }
                        previous = Some(value);
                    }
                    rows += 1;
                }
            }
        }
        Ok(format!("{rows} classes, beta bound and omega monotonicity exact"))
    })())
}

/// Componentwise bound on the cylinder top class: the cone seminorm of
/// `(z, -dz)` dominates `seminorm(z) + (1 + omega) seminorm_W(dz)`, and the
/// gap at omega = 0 is strict.
pub fn check_cone_lower_bound() -> CheckResult {
    outcome("cone-lower-bound", (|| {
        let pair = generators::cylinder_grid(6, 2)?;
        let cone = build_cone(&pair)?;
        let classes = pair.homology_basis(2);
        if classes.len() != 1 {
            return Err(Error::Internal("cylinder should have one top class".into()));
        }
        let class = &classes[0];
        let (relative, _) = seminorm::l1_seminorm(&pair, class)?;
        let cycle = cone.beta_inverse(class)?;

        // Seminorm of the boundary class inside the standalone subcomplex.
        let (sub_pair, sub_maps) = pair.subcomplex()?;
        let back: std::collections::HashMap<usize, usize> =
            sub_maps[1].iter().enumerate().map(|(local, &global)| (global, local)).collect();
        let local = Chain::from_entries(
            1,
            cycle.v.coeffs.iter().map(|(i, c)| (back[i], c.clone())).collect(),
        );
        let (boundary_norm, _) = seminorm::l1_seminorm(
            &sub_pair,
            &HomologyClass { degree: 1, representative: local },
        )?;
        if boundary_norm.is_zero() {
            return Err(Error::Internal("boundary class should have positive seminorm".into()));
        }

        let mut gap = None;
        for omega in [rat(0), rat(1), rat(10)] {
            let (value, _) = cone.l1_seminorm(&cycle, &omega)?;
            let lower = &relative + (Rational::one() + &omega) * &boundary_norm;
            if value < lower {
                return Err(Error::Internal(format!(
                    "cone({}) = {} below bound {}",
                    format_rational(&omega),
                    format_rational(&value),
                    format_rational(&lower)
                )));
            }
            if omega.is_zero() {
                if value <= relative {
                    return Err(Error::Internal("expected strict gap at omega = 0".into()));
                }
                gap = Some(format!(
                    "cone(0) = {} > relative = {} (boundary class norm {})",
                    format_rational(&value),
                    format_rational(&relative),
                    format_rational(&boundary_norm)
                ));
            }
        }
        Ok(gap.expect("omega = 0 was checked"))
    })())
}

/// The weighted dual norm formula agrees with the brute-force operator norm
/// over the extreme points of the weighted l1 unit ball.
pub fn check_cone_dual_operator_norm(seed: u64) -> CheckResult {
    outcome("cone-dual-operator-norm", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pair = generators::cylinder_grid(3, 1)?;
        let cone = build_cone(&pair)?;
        let degree = 2usize;
        let x_dim = pair.dim(degree);
        let w_indices: Vec<usize> = pair.sub_indices(degree - 1).iter().copied().collect();
        let mut checked = 0;
        for omega in [rat(0), rat(1), rat(10)] {
            let weight = Rational::one() + &omega;
            for _ in 0..100 {
                let f = crate::complex::Cochain::from_entries(
                    degree,
                    false,
                    (0..x_dim)
                        .map(|i| (i, ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))))
                        .collect(),
                );
                let g = crate::complex::Cochain::from_entries(
                    degree - 1,
                    false,
                    w_indices
                        .iter()
                        .map(|&i| (i, ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))))
                        .collect(),
                );
                let cc = cone.cone_cochain(f, g)?;
                let formula = cone.linf_norm(&cc, &omega)?;
                // Extreme points of the unit ball: +-e_i in the first
                // component, +-e_j / (1 + omega) in the second.
                let mut best = Rational::zero();
                for i in 0..x_dim {
                    let c = cone.cone_chain(Chain::single(degree, i), Chain::zero(degree - 1))?;
                    best = best.max(cone.pairing(&cc, &c)?.abs());
                }
                for &j in &w_indices {
                    let v = Chain::from_entries(degree - 1, vec![(j, weight.clone().recip())]);
                    let c = cone.cone_chain(Chain::zero(degree), v)?;
                    best = best.max(cone.pairing(&cc, &c)?.abs());
                }
                if best != formula {
                    return Err(Error::Internal(format!(
                        "operator norm {} != formula {} at omega {}",
                        format_rational(&best),
                        format_rational(&formula),
                        format_rational(&omega)
                    )));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} random cochains, formula = extreme-point oracle"))
    })())
}

/// Chain-level dual sandwich for the dual-optimal cocycles of the suite:
/// `||phi||_inf / (n + 2) <= ||(phi, 0)||_inf(0) <= ||phi||_inf`.
pub fn check_dual_sandwich() -> CheckResult {
    outcome("dual-sandwich", (|| {
        let pairs = suite_pairs()?;
        let mut rows = 0;
        for (name, pair) in &pairs {
            let cone = build_cone(pair)?;
            for n in 0..=pair.top_degree() {
                for class in pair.homology_basis(n) {
                    let (_, phi) = seminorm::dual_linf_value(pair, &class)?;
                    let Some(phi) = phi else { continue };
                    let norm = pair.linf_norm(&phi);
                    let lower = &norm / rat((n + 2) as i64);
                    let middle = cone.linf_norm(&cone.beta_cochain(&phi)?, &Rational::zero())?;
                    if !(lower <= middle && middle <= norm) {
                        return Err(Error::Internal(format!(
                            "{name} degree {n}: sandwich failed"
                        )));
                    }
                    rows += 1;
                }
            }
        }
        Ok(format!("{rows} dual-optimal cocycles inside the sandwich"))
    })())
}

// --- randomized geometry helpers -----------------------------------------

fn random_rational(rng: &mut impl Rng, span: i64) -> Rational {
    ratio(rng.gen_range(-span..=span), rng.gen_range(1..=8))
}

/// Random point of the cover, within a few fundamental domains.
fn random_point(model: &ModelSpace, rng: &mut impl Rng) -> Vec<Rational> {
    match model.kind() {
        crate::geometry::ModelKind::Torus { periods } => {
            periods.iter().map(|_| random_rational(rng, 12)).collect()
        }
        crate::geometry::ModelKind::Cylinder { height, .. } => {
            let x = random_rational(rng, 12);
            // y uniform-ish inside [0, h] on a rational grid.
            let denom = rng.gen_range(1..=8);
            let numer = rng.gen_range(0..=denom);
            let y = height * ratio(numer, denom);
            vec![x, y]
        }
    }
}

fn random_simplex(
    model: &ModelSpace,
    degree: usize,
    rng: &mut impl Rng,
) -> Result<StraightSimplex> {
    let lifts = (0..=degree).map(|_| random_point(model, rng)).collect();
    model.straight_simplex(lifts)
}

fn suite_models() -> Result<Vec<(String, ModelSpace)>> {
    Ok(vec![
        ("torus(2,4)".into(), ModelSpace::torus(2, rat(4))?),
        ("cylinder(6,2)".into(), ModelSpace::cylinder(rat(6), rat(2))?),
    ])
}

/// Straightening suite: chain-map identity, deck equivariance,
/// subspace preservation, the prism identity `dT + Td = id - str`, and the
/// boundary witness `str(z) - z = d T(z)` on the grid homology cycles.
pub fn check_straightening(seed: u64) -> CheckResult {
    outcome("straightening", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut prism_checked = 0;
        let mut equivariance_checked = 0;
        for (name, model) in suite_models()? {
            let net = build_net(&model)?;
            // Chain map + prism identity on random simplices of degree <= 3.
            for i in 0..110 {
                let degree = i % 3 + 1;
                let s = random_simplex(&model, degree, &mut rng)?;
                let c = StraightChain::single(s.clone());
                let dc = c.boundary(&model)?;
                // d str = str d.
                let lhs = net.straighten_chain(&c)?.boundary(&model)?;
                let rhs = net.straighten_chain(&dc)?;
                if lhs != rhs {
                    return Err(Error::Internal(format!("{name}: d str != str d")));
                }
                // dT + Td = id - str.
                let prism = net
                    .prism_homotopy(&s)?
                    .boundary(&model)?
                    .add(&net.prism_homotopy_chain(&dc)?)?;
                let target = c.sub(&net.straighten_chain(&c)?)?;
                if prism != target {
                    return Err(Error::Internal(format!("{name}: prism identity failed")));
                }
                prism_checked += 1;
            }
            // Deck equivariance on sampled translations.
            for _ in 0..25 {
                let degree = rng.gen_range(0..=3);
                let s = random_simplex(&model, degree, &mut rng)?;
                let deck: Vec<num_bigint::BigInt> = (0..model.deck_rank())
                    .map(|_| num_bigint::BigInt::from(rng.gen_range(-3i64..=3)))
                    .collect();
                let translated = model.straight_simplex(
                    s.vertices().iter().map(|v| model.deck_translate(v, &deck)).collect(),
                )?;
                // Canonical forms quotient by the deck group, so the
                // translated simplex must straighten to the same net simplex.
                if net.straighten(&translated)? != net.straighten(&s)? {
                    return Err(Error::Internal(format!("{name}: equivariance failed")));
                }
                equivariance_checked += 1;
            }
        }
        // Subspace preservation on the cylinder boundary lines.
        let cylinder = ModelSpace::cylinder(rat(6), rat(2))?;
        let net = build_net(&cylinder)?;
        for _ in 0..40 {
            let component = rng.gen_range(0..2);
            let y = if component == 0 { rat(0) } else { rat(2) };
            let degree = rng.gen_range(0..=2);
            let lifts = (0..=degree)
                .map(|_| vec![random_rational(&mut rng, 12), y.clone()])
                .collect();
            let s = cylinder.straight_simplex(lifts)?;
            if net.straighten(&s)?.w_component(&cylinder) != Some(component) {
                return Err(Error::Internal("boundary line not preserved".into()));
            }
        }
        // Grid homology cycles: str(z) - z = d T(z), hence [str z] = [z].
        let mut cycles_checked = 0;
        let realized: Vec<(String, ChainComplexPair, generators::GridRealization)> = vec![
            {
                let (pair, real) = generators::torus_grid_realization(4, 4)?;
                ("torus_grid(4,4)".into(), pair, real)
            },
            {
                let (pair, real) = generators::cylinder_grid_realization(6, 2)?;
                ("cylinder_grid(6,2)".into(), pair, real)
            },
        ];
        for (name, pair, real) in &realized {
            let net = build_net(&real.model)?;
            for n in 0..=pair.top_degree() {
                for class in pair.homology_basis(n) {
                    let z = real.realize_chain(&class.representative)?;
                    let dz = z.boundary(&real.model)?;
                    // dT(z) + T(dz) = z - str(z). For a genuine cycle the
                    // second term drops and str(z) - z = -dT(z) is a
                    // boundary; for a relative cycle T(dz) stays inside the
                    // subspace, so the classes still agree in the quotient.
                    let t_dz = net.prism_homotopy_chain(&dz)?;
                    let dt = net.prism_homotopy_chain(&z)?.boundary(&real.model)?;
                    // In degree zero the boundary is identically zero and
                    // T(dz) lives one degree off; leave it out of the sum.
                    let witness = if n == 0 { dt } else { dt.add(&t_dz)? };
                    let difference = z.sub(&net.straighten_chain(&z)?)?;
                    if witness != difference {
                        return Err(Error::Internal(format!(
                            "{name} degree {n}: dT(z) + T(dz) != z - str(z)"
                        )));
                    }
                    if !t_dz.terms.keys().all(|s| s.w_component(&real.model).is_some()) {
                        return Err(Error::Internal(format!(
                            "{name} degree {n}: prism of the boundary left the subspace"
                        )));
                    }
                    cycles_checked += 1;
                }
            }
        }
        Ok(format!(
            "{prism_checked} prism identities, {equivariance_checked} deck translations, {cycles_checked} grid cycles"
        ))
    })())
}

fn random_measure(
    model: &ModelSpace,
    degree: usize,
    max_atoms: usize,
    rng: &mut impl Rng,
) -> Result<MeasureChain> {
    let count = rng.gen_range(1..=max_atoms);
    let mut atoms = Vec::new();
    for _ in 0..count {
        let s = random_simplex(model, degree, rng)?;
        atoms.push((s, random_rational(rng, 9)));
    }
    MeasureChain::from_atoms(degree, atoms)
}

/// Measure-chain suite: the discretization map is a chain map, preserves
/// subspace support, contracts total variation, and extends straightening
/// along the Dirac embedding.
pub fn check_theta(seed: u64) -> CheckResult {
    outcome("theta", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checked = 0;
        for (name, model) in suite_models()? {
            let net = build_net(&model)?;
            for i in 0..110 {
                let degree = i % 3 + 1;
                let mu = random_measure(&model, degree, 20, &mut rng)?;
                // theta . boundary = boundary . theta.
                let lhs = theta(&net, &mu.boundary(&model)?)?;
                let rhs = theta(&net, &mu)?.boundary(&model)?;
                if lhs != rhs {
                    return Err(Error::Internal(format!("{name}: theta is not a chain map")));
                }
                // Norm contraction.
                if theta(&net, &mu)?.l1_norm() > mu.total_variation() {
                    return Err(Error::Internal(format!("{name}: theta expanded the norm")));
                }
                // Relative contraction.
                if theta(&net, &mu)?.l1_norm_relative(&model) > mu.relative_norm(&model) {
                    return Err(Error::Internal(format!(
                        "{name}: theta expanded the relative norm"
                    )));
                }
                // theta . iota = str on the (random) support chain of mu.
                let c = StraightChain { degree: mu.degree, terms: mu.atoms.clone() };
                let round = theta(&net, &iota(&c))?;
                if round != net.straighten_chain(&c)? {
                    return Err(Error::Internal(format!("{name}: theta . iota != str")));
                }
                // iota is isometric on the reduced chain.
                if iota(&c).total_variation() != c.l1_norm() {
                    return Err(Error::Internal(format!("{name}: iota changed the norm")));
                }
                checked += 1;
            }
        }
        // Subspace support is preserved (cylinder boundary lines).
        let cylinder = ModelSpace::cylinder(rat(6), rat(2))?;
        let net = build_net(&cylinder)?;
        for _ in 0..40 {
            let component = rng.gen_range(0..2);
            let y = if component == 0 { rat(0) } else { rat(2) };
            let degree = rng.gen_range(1..=2);
            let mut atoms = Vec::new();
            for _ in 0..rng.gen_range(1..=5) {
                let lifts = (0..=degree)
                    .map(|_| vec![random_rational(&mut rng, 12), y.clone()])
                    .collect();
                atoms.push((cylinder.straight_simplex(lifts)?, random_rational(&mut rng, 9)));
            }
            let mu = MeasureChain::from_atoms(degree, atoms)?;
            if !mu.is_zero() && !mu.is_w_supported(&cylinder) {
                return Err(Error::Internal("atoms were built on a boundary line".into()));
            }
            let image = theta(&net, &mu)?;
            if !image.terms.keys().all(|s| s.w_component(&cylinder).is_some()) {
                return Err(Error::Internal("theta left the subspace".into()));
            }
        }
        Ok(format!("{checked} random measure chains, all identities exact"))
    })())
}

fn group_degree_cap(group: &FiniteGroup) -> usize {
    if group.order() >= 6 {
        2
    } else {
        3
    }
}

/// Group suite: square-zero coboundaries, contracting-homotopy identities,
/// properness of the invariant restriction, commutation of restriction with
/// the homotopies, the expected bounded cohomology in low degrees, and the
/// round trip `alpha . beta = id` for random partitions of unity.
pub fn check_groups(seed: u64) -> CheckResult {
    outcome("groups", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut details = Vec::new();
        for name in ["z2", "z3", "z2xz2", "s3"] {
            let group = FiniteGroup::builtin(name)?;
            let cap = group_degree_cap(&group);
            let order = group.order();

            // delta . delta = 0 and homotopy identities on random cochains.
            for arity in 1..=cap {
                let mut f = TupleCochain::zero(order, arity);
                for v in f.values.iter_mut() {
                    *v = random_rational(&mut rng, 6);
                }
                let dd = f.coboundary().coboundary();
                if !dd.values.iter().all(|v| v.is_zero()) {
                    return Err(Error::Internal(format!("{name}: delta^2 != 0")));
                }
                let e = group.identity();
                let lhs = f.cone_at(e).coboundary().add(&f.coboundary().cone_at(e));
                if lhs != f {
                    return Err(Error::Internal(format!("{name}: homotopy identity failed")));
                }
                if f.cone_at(e).sup_norm() > f.sup_norm() {
                    return Err(Error::Internal(format!("{name}: homotopy expanded the norm")));
                }
            }

            // Absolute bounded cohomology in degrees 0..=2.
            let (h0, _) = bounded_cohomology(&group, None, 0)?;
            let (h1, _) = bounded_cohomology(&group, None, 1)?;
            let (h2, _) = bounded_cohomology(&group, None, 2)?;
            if (h0, h1, h2) != (1, 0, 0) {
                return Err(Error::Internal(format!(
                    "{name}: expected H = (1, 0, 0), found ({h0}, {h1}, {h2})"
                )));
            }

            for subgroup in group.all_subgroups() {
                // Properness and the kernel identification per degree.
                for n in 0..=cap {
                    relative_complex(&group, &subgroup, n)?;
                }
                // Restriction commutes with the homotopies.
                let elements: Vec<usize> = subgroup.iter().copied().collect();
                let local_identity =
                    elements.iter().position(|&x| x == group.identity()).expect("e in A");
                for arity in 1..=cap.min(2) {
                    let mut f = TupleCochain::zero(order, arity);
                    for v in f.values.iter_mut() {
                        *v = random_rational(&mut rng, 6);
                    }
                    let lhs = restrict_to_subgroup(&group, &subgroup, &f).cone_at(local_identity);
                    let rhs =
                        restrict_to_subgroup(&group, &subgroup, &f.cone_at(group.identity()));
                    if lhs != rhs {
                        return Err(Error::Internal(format!(
                            "{name}: restriction does not commute with homotopies"
                        )));
                    }
                }
                // Relative bounded cohomology vanishes in degrees 1 and 2.
                for n in 1..=2 {
                    let (h, _) = bounded_cohomology(&group, Some(&subgroup), n)?;
                    if h != 0 {
                        return Err(Error::Internal(format!(
                            "{name}: relative H^{n} is {h}, expected 0"
                        )));
                    }
                }

                // alpha . beta = id for random chi. Alternate between models
                // whose extra fiber is inside and outside the subspace.
                for trial in 0..5 {
                    let w_fibers: std::collections::BTreeSet<usize> = if trial % 2 == 0 {
                        [0usize, 1].into_iter().collect()
                    } else {
                        [0usize].into_iter().collect()
                    };
                    let model = GSetModel::with_random_chi(
                        group.clone(),
                        subgroup.clone(),
                        2,
                        w_fibers,
                        &mut rng,
                    )?;
                    let beta_cap = cap.min(2);
                    for arity in 1..=beta_cap + 1 {
                        let mut f = TupleCochain::zero(order, arity);
                        for v in f.values.iter_mut() {
                            *v = random_rational(&mut rng, 6);
                        }
                        let image = model.beta(&f)?;
                        if image.sup_norm() > f.sup_norm() {
                            return Err(Error::Internal(format!(
                                "{name}: beta expanded the norm"
                            )));
                        }
                        let round = model.alpha_hat(&image)?;
                        if round != f {
                            return Err(Error::Internal(format!(
                                "{name}: alpha . beta != id at arity {arity}"
                            )));
                        }
                    }
                    // beta is equivariant.
                    let mut f = TupleCochain::zero(order, 2);
                    for v in f.values.iter_mut() {
                        *v = random_rational(&mut rng, 6);
                    }
                    let g = rng.gen_range(0..order);
                    let lhs = model.beta(&act_on_group_cochain(&group, g, &f))?;
                    let rhs = model.act_on_cochain(g, &model.beta(&f)?);
                    if lhs != rhs {
                        return Err(Error::Internal(format!("{name}: beta not equivariant")));
                    }
                }
            }
            details.push(format!("{name}({} subgroups)", group.all_subgroups().len()));
        }
        Ok(format!("groups {} all exact", details.join(", ")))
    })())
}

/// Cross-module consistency: the cone and the quotient complex compute the
/// same homology, through the comparison map on a basis.
pub fn check_cross_module() -> CheckResult {
    outcome("cross-module", (|| {
        let pairs = suite_pairs()?;
        let mut rows = 0;
        for (name, pair) in &pairs {
            let cone = build_cone(pair)?;
            for n in 0..=pair.top_degree() {
                let rel_dim = pair.homology_dim(n);
                let cone_dim = cone.homology_dim(n);
                if rel_dim != cone_dim {
                    return Err(Error::Internal(format!(
                        "{name} degree {n}: cone dim {cone_dim} != relative dim {rel_dim}"
                    )));
                }
                // beta on a cone homology basis hits a basis of relative
                // homology: coordinates form an invertible matrix.
                let basis = pair.homology_basis(n);
                let cone_basis = cone.homology_basis(n);
                let mut m = crate::rational::RationalMatrix::zero(basis.len(), cone_basis.len());
                for (j, cycle) in cone_basis.iter().enumerate() {
                    let image = cone.beta_homology(cycle)?;
                    let coords = pair
                        .class_coordinates(&image.representative, &basis)?
                        .ok_or_else(|| {
                            Error::Internal(format!(
                                "{name} degree {n}: beta image not a relative class"
                            ))
                        })?;
                    for (i, c) in coords.into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                if m.rank() != rel_dim {
                    return Err(Error::Internal(format!(
                        "{name} degree {n}: beta is not bijective on homology"
                    )));
                }
                rows += 1;
            }
        }
        Ok(format!("{rows} degrees, cone homology matches via the comparison map"))
    })())
}

/// Runs every check, in acceptance order.
pub fn run_all(seed: u64) -> Vec<CheckResult> {
    vec![
        check_duality(),
        check_cone_monotonicity(),
        check_cone_lower_bound(),
        check_cone_dual_operator_norm(seed),
        check_dual_sandwich(),
        check_straightening(seed),
        check_theta(seed),
        check_groups(seed),
        check_cross_module(),
    ]
}
