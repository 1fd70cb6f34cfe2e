//! Built-in model families: circles, the interval pair, triangulated flat
//! tori and cylinders, together with their geometric realizations as
//! straight chains.
//!
//! Grid triangulations place vertices on the integer lattice and cut each
//! unit square along the (1,1) diagonal, so every basis simplex realizes as
//! a straight simplex with net-point vertices.

use std::collections::BTreeMap;

use crate::complex::{Chain, ChainComplexPair, DegreeDescription, PairDescription};
use crate::error::{Error, Result};
use crate::geometry::{ModelSpace, StraightChain, StraightSimplex};
use crate::rational::{rat, Rational};

/// Circle with `k` vertices and `k` edges.
pub fn circle_description(k: usize) -> PairDescription {
    let vertices: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
    let edges: Vec<String> = (0..k).map(|i| format!("e{i}")).collect();
    let mut faces = BTreeMap::new();
    for i in 0..k {
        faces.insert(
            edges[i].clone(),
            vec![(1, format!("v{}", (i + 1) % k)), (-1, format!("v{i}"))],
        );
    }
    PairDescription {
        schema: "pair-complex/v1".into(),
        degrees: vec![
            DegreeDescription { simplices: vertices, faces: BTreeMap::new() },
            DegreeDescription { simplices: edges, faces },
        ],
        sub: vec![],
    }
}

pub fn circle(k: usize) -> Result<ChainComplexPair> {
    if k < 3 {
        return Err(Error::Input("circle needs at least 3 vertices".into()));
    }
    ChainComplexPair::build(&circle_description(k))
}

/// The pair (interval, both endpoints).
pub fn interval_description() -> PairDescription {
    let mut faces = BTreeMap::new();
    faces.insert("e".to_string(), vec![(1, "v1".to_string()), (-1, "v0".to_string())]);
    PairDescription {
        schema: "pair-complex/v1".into(),
        degrees: vec![
            DegreeDescription {
                simplices: vec!["v0".into(), "v1".into()],
                faces: BTreeMap::new(),
            },
            DegreeDescription { simplices: vec!["e".into()], faces },
        ],
        sub: vec!["v0".into(), "v1".into()],
    }
}

pub fn interval() -> Result<ChainComplexPair> {
    ChainComplexPair::build(&interval_description())
}

// Shared grid builder. Vertices live at integer points (i, j); `wrap_y`
// distinguishes the torus (both directions periodic) from the cylinder
// (rows 0..=n, with rows 0 and n forming the subspace).
fn grid_description(m: usize, n: usize, wrap_y: bool) -> PairDescription {
    let rows = if wrap_y { n } else { n + 1 };
    let vid = |i: usize, j: usize| format!("v{}_{}", i % m, if wrap_y { j % n } else { j });
    let hid = |i: usize, j: usize| format!("h{}_{}", i % m, if wrap_y { j % n } else { j });
    let uid = |i: usize, j: usize| format!("u{}_{}", i % m, if wrap_y { j % n } else { j });
    let did = |i: usize, j: usize| format!("d{}_{}", i % m, if wrap_y { j % n } else { j });

    let mut vertices = Vec::new();
    for j in 0..rows {
        for i in 0..m {
            vertices.push(vid(i, j));
        }
    }

    let mut edges = Vec::new();
    let mut edge_faces = BTreeMap::new();
    for j in 0..rows {
        for i in 0..m {
            // Horizontal edge v(i,j) -> v(i+1,j).
            edges.push(hid(i, j));
            edge_faces.insert(hid(i, j), vec![(1, vid(i + 1, j)), (-1, vid(i, j))]);
        }
    }
    // Rows of squares: n in both cases (the torus wraps, the cylinder has
    // n + 1 vertex rows).
    for j in 0..n {
        for i in 0..m {
            // Vertical edge v(i,j) -> v(i,j+1).
            edges.push(uid(i, j));
            edge_faces.insert(uid(i, j), vec![(1, vid(i, j + 1)), (-1, vid(i, j))]);
            // Diagonal edge v(i,j) -> v(i+1,j+1).
            edges.push(did(i, j));
            edge_faces.insert(did(i, j), vec![(1, vid(i + 1, j + 1)), (-1, vid(i, j))]);
        }
    }

    let mut triangles = Vec::new();
    let mut triangle_faces = BTreeMap::new();
    for j in 0..n {
        for i in 0..m {
            // Lower triangle [v(i,j), v(i+1,j), v(i+1,j+1)].
            let lower = format!("l{i}_{j}");
            triangles.push(lower.clone());
            triangle_faces
                .insert(lower, vec![(1, uid(i + 1, j)), (-1, did(i, j)), (1, hid(i, j))]);
            // Upper triangle [v(i,j), v(i,j+1), v(i+1,j+1)]; the vertex order
            // keeps every face a forward basis edge, at the price of the
            // opposite plane orientation to the lower triangle.
            let upper = format!("t{i}_{j}");
            triangles.push(upper.clone());
            triangle_faces
                .insert(upper, vec![(1, hid(i, j + 1)), (-1, did(i, j)), (1, uid(i, j))]);
        }
    }

    let sub = if wrap_y {
        vec![]
    } else {
        let mut s = Vec::new();
        for i in 0..m {
            s.push(vid(i, 0));
            s.push(vid(i, n));
            s.push(hid(i, 0));
            s.push(hid(i, n));
        }
        s
    };

    PairDescription {
        schema: "pair-complex/v1".into(),
        degrees: vec![
            DegreeDescription { simplices: vertices, faces: BTreeMap::new() },
            DegreeDescription { simplices: edges, faces: edge_faces },
            DegreeDescription { simplices: triangles, faces: triangle_faces },
        ],
        sub,
    }
}

pub fn torus_grid_description(m: usize, n: usize) -> PairDescription {
    grid_description(m, n, true)
}

/// Triangulated flat torus with an `m x n` vertex grid.
pub fn torus_grid(m: usize, n: usize) -> Result<ChainComplexPair> {
    if m < 3 || n < 3 {
        return Err(Error::Input(
            "torus grid needs at least 3 vertices per direction".into(),
        ));
    }
    ChainComplexPair::build(&torus_grid_description(m, n))
}

pub fn cylinder_grid_description(m: usize, n: usize) -> PairDescription {
    grid_description(m, n, false)
}

/// Triangulated flat cylinder, `m` columns and `n` rows of squares; the two
/// boundary circles form the subspace.
pub fn cylinder_grid(m: usize, n: usize) -> Result<ChainComplexPair> {
    if m < 3 || n < 1 {
        return Err(Error::Input("cylinder grid needs m >= 3 columns and n >= 1 rows".into()));
    }
    ChainComplexPair::build(&cylinder_grid_description(m, n))
}

/// Fundamental 2-cycle of a grid complex: lower triangles with coefficient
/// +1 and upper triangles with -1 (they carry opposite orientations). On
/// the torus this is a cycle; on the cylinder it is a relative cycle whose
/// boundary is the difference of the two boundary circles.
pub fn grid_fundamental_chain(pair: &ChainComplexPair) -> Chain {
    Chain::from_entries(
        2,
        (0..pair.dim(2))
            .map(|i| {
                let sign = if pair.label_of(2, i).starts_with('l') { 1 } else { -1 };
                (i, rat(sign))
            })
            .collect(),
    )
}

/// Geometric realization of a grid pair: the model space plus the straight
/// simplex realizing each basis simplex.
pub struct GridRealization {
    pub model: ModelSpace,
    /// Per degree, per basis index.
    pub simplices: Vec<Vec<StraightSimplex>>,
}

impl GridRealization {
    pub fn realize_chain(&self, c: &Chain) -> Result<StraightChain> {
        let table = self
            .simplices
            .get(c.degree)
            .ok_or_else(|| Error::Input("degree above realized range".into()))?;
        StraightChain::from_terms(
            c.degree,
            c.coeffs.iter().map(|(i, v)| (table[*i].clone(), v.clone())).collect(),
        )
    }
}

fn point(i: i64, j: i64) -> Vec<Rational> {
    vec![rat(i), rat(j)]
}

fn realize_grid(pair: &ChainComplexPair, model: ModelSpace) -> Result<GridRealization> {
    let parse = |label: &str| -> (char, i64, i64) {
        let kind = label.chars().next().expect("nonempty label");
        let rest = &label[1..];
        let (i, j) = rest.split_once('_').expect("grid label");
        (kind, i.parse().expect("grid index"), j.parse().expect("grid index"))
    };
    let mut simplices = Vec::new();
    for degree in 0..=pair.top_degree() {
        let mut table = Vec::new();
        for label in pair.labels(degree) {
            let (kind, i, j) = parse(label);
            let lifts = match kind {
                'v' => vec![point(i, j)],
                'h' => vec![point(i, j), point(i + 1, j)],
                'u' => vec![point(i, j), point(i, j + 1)],
                'd' => vec![point(i, j), point(i + 1, j + 1)],
                'l' => vec![point(i, j), point(i + 1, j), point(i + 1, j + 1)],
                't' => vec![point(i, j), point(i, j + 1), point(i + 1, j + 1)],
                other => return Err(Error::Internal(format!("unknown grid label kind '{other}'"))),
            };
            table.push(model.straight_simplex(lifts)?);
        }
        simplices.push(table);
    }
    Ok(GridRealization { model, simplices })
}

pub fn torus_grid_realization(m: usize, n: usize) -> Result<(ChainComplexPair, GridRealization)> {
    let pair = torus_grid(m, n)?;
    let model = ModelSpace::torus_rect(vec![rat(m as i64), rat(n as i64)])?;
    let realization = realize_grid(&pair, model)?;
    Ok((pair, realization))
}

pub fn cylinder_grid_realization(
    m: usize,
    n: usize,
) -> Result<(ChainComplexPair, GridRealization)> {
    let pair = cylinder_grid(m, n)?;
    let model = ModelSpace::cylinder(rat(m as i64), rat(n as i64))?;
    let realization = realize_grid(&pair, model)?;
    Ok((pair, realization))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_grid_dimensions() {
        let pair = torus_grid(4, 4).unwrap();
        assert_eq!(pair.dim(0), 16);
        assert_eq!(pair.dim(1), 48);
        assert_eq!(pair.dim(2), 32);
        assert_eq!(pair.homology_dim(0), 1);
        assert_eq!(pair.homology_dim(1), 2);
        assert_eq!(pair.homology_dim(2), 1);
    }

    #[test]
    fn cylinder_grid_dimensions() {
        let pair = cylinder_grid(6, 2).unwrap();
        assert_eq!(pair.dim(0), 18);
        assert_eq!(pair.dim(1), 42);
        assert_eq!(pair.dim(2), 24);
        // Relative homology of (cylinder, boundary circles).
        assert_eq!(pair.homology_dim(0), 0);
        assert_eq!(pair.homology_dim(1), 1);
        assert_eq!(pair.homology_dim(2), 1);
    }

    #[test]
    fn grid_fundamental_chain_is_a_relative_cycle() {
        let torus = torus_grid(4, 4).unwrap();
        let z = grid_fundamental_chain(&torus);
        assert!(torus.boundary(&z).unwrap().is_zero());

        let cyl = cylinder_grid(6, 2).unwrap();
        let z = grid_fundamental_chain(&cyl);
        assert!(cyl.is_relative_cycle(&z).unwrap());
        assert!(!cyl.boundary(&z).unwrap().is_zero());
    }

    #[test]
    fn realization_commutes_with_boundary() {
        let (pair, real) = torus_grid_realization(4, 4).unwrap();
        for idx in [0usize, 5, 17] {
            let c = Chain::single(2, idx);
            let lhs = real.realize_chain(&pair.boundary(&c).unwrap()).unwrap();
            let rhs = real.realize_chain(&c).unwrap().boundary(&real.model).unwrap();
            assert_eq!(lhs, rhs);
        }
        let (pair, real) = cylinder_grid_realization(6, 2).unwrap();
        for idx in [0usize, 7, 23] {
            let c = Chain::single(2, idx);
            let lhs = real.realize_chain(&pair.boundary(&c).unwrap()).unwrap();
            let rhs = real.realize_chain(&c).unwrap().boundary(&real.model).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn circle_realized_on_one_dimensional_torus() {
        let pair = circle(5).unwrap();
        let model = ModelSpace::torus(1, rat(5)).unwrap();
        let e0 = model.straight_simplex(vec![vec![rat(0)], vec![rat(1)]]).unwrap();
        assert_eq!(e0.degree(), 1);
        assert_eq!(pair.dim(1), 5);
    }
}
