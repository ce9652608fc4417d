//! Concrete matrix models of the simply connected groups.
//!
//! Each model stores its matrix entries symbolically: a sum of terms
//! `coeff * (monomial in the coordinates) * e^(linear form in the
//! coordinates)`. That gives exact tangent vectors at the identity (the
//! commutator checks run over rationals) and float evaluation for group
//! elements. The three-dimensional `sigma` forms cover the one family
//! without a displayed matrix model.

use std::collections::BTreeMap;

use crate::catalog::{AlgebraId, AlgebraName, Catalog, CatalogError, StructureConstants};
use crate::linalg::{rat, rat_to_f64, rint, solve_exact, FloatMat, Poly, Rat, RatMat};
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RealizationError {
    #[error("no matrix model for this group")]
    NoMatrixModel,
    #[error("missing coordinate {0}")]
    MissingCoord(String),
    #[error("points belong to different groups")]
    GroupMismatch,
    #[error("coordinate chart does not reassemble the product (residual {residual:e})")]
    ClosureViolation { residual: f64 },
    #[error("commutator [T{i}, T{j}] is outside the tangent span")]
    BasisMismatch { i: usize, j: usize },
    #[error("parameter out of domain")]
    ParamOutOfDomain,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// One symbolic term: coeff * prod(coord^power) * exp(sum exp_lin * coord).
#[derive(Debug, Clone)]
struct SymTerm {
    coeff: Rat,
    powers: Vec<u32>,
    exp_lin: Vec<Rat>,
}

#[derive(Debug, Clone, Default)]
struct SymEntry {
    terms: Vec<SymTerm>,
}

impl SymEntry {
    fn eval(&self, coords: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let mono: f64 = t
                    .powers
                    .iter()
                    .zip(coords)
                    .map(|(&p, &c)| c.powi(p as i32))
                    .product();
                let lin: f64 = t
                    .exp_lin
                    .iter()
                    .zip(coords)
                    .map(|(l, &c)| rat_to_f64(l) * c)
                    .sum();
                rat_to_f64(&t.coeff) * mono * lin.exp()
            })
            .sum()
    }

    /// d/d(coord k) at the origin, exactly.
    fn partial_at_zero(&self, k: usize) -> Rat {
        let mut out = Rat::zero();
        for t in &self.terms {
            let total: u32 = t.powers.iter().sum();
            if total == 1 && t.powers[k] == 1 {
                out += &t.coeff;
            } else if total == 0 {
                out += &t.coeff * &t.exp_lin[k];
            }
        }
        out
    }
}

/// A matrix model: coordinate names plus a grid of symbolic entries.
#[derive(Debug, Clone)]
pub struct MatrixModel {
    pub algebra: AlgebraName,
    pub size: usize,
    pub coord_names: Vec<&'static str>,
    entries: Vec<SymEntry>,
    /// (coordinate, row, col, divisor): coord = read / divisor, or the log
    /// chart (coordinate, row, col, k): coord = ln(entry) / k.
    chart: Vec<ChartRead>,
}

#[derive(Debug, Clone)]
enum ChartRead {
    Linear { coord: usize, row: usize, col: usize, divisor: Rat },
    Log { coord: usize, row: usize, col: usize, scale: Rat },
}

#[derive(Debug, Clone)]
pub struct GroupPoint {
    pub algebra: AlgebraName,
    pub coords: BTreeMap<String, f64>,
    pub matrix: FloatMat,
}

struct ModelBuilder {
    size: usize,
    ncoords: usize,
    entries: Vec<SymEntry>,
}

impl ModelBuilder {
    fn new(size: usize, ncoords: usize) -> Self {
        ModelBuilder {
            size,
            ncoords,
            entries: vec![SymEntry::default(); size * size],
        }
    }

    fn term(&mut self, row: usize, col: usize, coeff: Rat, powers: &[(usize, u32)], exps: &[(usize, Rat)]) {
        let mut p = vec![0u32; self.ncoords];
        for &(i, e) in powers {
            p[i] = e;
        }
        let mut l = vec![Rat::zero(); self.ncoords];
        for (i, e) in exps {
            l[*i] = e.clone();
        }
        self.entries[row * self.size + col].terms.push(SymTerm {
            coeff,
            powers: p,
            exp_lin: l,
        });
    }

    fn one(&mut self, row: usize, col: usize) {
        self.term(row, col, Rat::one(), &[], &[]);
    }

    fn coord(&mut self, row: usize, col: usize, k: usize) {
        self.term(row, col, Rat::one(), &[(k, 1)], &[]);
    }

    fn exp(&mut self, row: usize, col: usize, k: usize, scale: Rat) {
        self.term(row, col, Rat::one(), &[], &[(k, scale)]);
    }
}

fn param(id: &AlgebraId, name: &str) -> Rat {
    id.params.get(name).cloned().unwrap_or_else(Rat::one)
}

/// The matrix model for a catalog group, at the given algebra parameters.
pub fn matrix_model(id: &AlgebraId) -> Result<MatrixModel, RealizationError> {
    use AlgebraName::*;
    use ChartRead::*;
    let lin = |coord, row, col| Linear { coord, row, col, divisor: Rat::one() };
    let (size, names, build, chart): (usize, Vec<&'static str>, ModelBuilder, Vec<ChartRead>) =
        match id.name {
            A2p2A1 => {
                // aff block plus a translation block for the abelian factor
                let mut b = ModelBuilder::new(5, 4);
                b.exp(0, 0, 0, Rat::one());
                b.coord(0, 1, 1);
                b.one(1, 1);
                b.one(2, 2);
                b.coord(2, 3, 2);
                b.coord(2, 4, 3);
                b.one(3, 3);
                b.one(4, 4);
                (
                    5,
                    vec!["a", "b", "u", "v"],
                    b,
                    vec![
                        Log { coord: 0, row: 0, col: 0, scale: Rat::one() },
                        lin(1, 0, 1),
                        lin(2, 2, 3),
                        lin(3, 2, 4),
                    ],
                )
            }
            TwoA2 => {
                let mut b = ModelBuilder::new(4, 4);
                b.exp(0, 0, 0, Rat::one());
                b.coord(0, 1, 1);
                b.one(1, 1);
                b.exp(2, 2, 2, Rat::one());
                b.coord(2, 3, 3);
                b.one(3, 3);
                (
                    4,
                    vec!["a", "b", "c", "d"],
                    b,
                    vec![
                        Log { coord: 0, row: 0, col: 0, scale: Rat::one() },
                        lin(1, 0, 1),
                        Log { coord: 2, row: 2, col: 2, scale: Rat::one() },
                        lin(3, 2, 3),
                    ],
                )
            }
            A32pA1 | A33pA1 => {
                let mut b = ModelBuilder::new(5, 4);
                b.one(0, 0);
                b.coord(1, 0, 1);
                b.exp(1, 1, 2, Rat::one());
                b.coord(2, 0, 0);
                if id.name == A32pA1 {
                    b.term(2, 1, -Rat::one(), &[(2, 1)], &[(2, Rat::one())]);
                }
                b.exp(2, 2, 2, Rat::one());
                b.one(3, 3);
                b.coord(3, 4, 3);
                b.one(4, 4);
                (
                    5,
                    vec!["x", "y", "z", "t"],
                    b,
                    vec![
                        lin(0, 2, 0),
                        lin(1, 1, 0),
                        Log { coord: 2, row: 1, col: 1, scale: Rat::one() },
                        lin(3, 3, 4),
                    ],
                )
            }
            A42a | A421 => {
                let alpha = if id.name == A42a { param(id, "alpha") } else { Rat::one() };
                let mut b = ModelBuilder::new(4, 4);
                b.exp(0, 0, 3, -alpha.clone());
                b.term(0, 3, Rat::one(), &[(0, 1)], &[]);
                b.exp(1, 1, 3, -Rat::one());
                b.term(1, 2, -alpha.clone(), &[(3, 1)], &[(3, -Rat::one())]);
                b.term(1, 3, alpha.clone(), &[(1, 1)], &[]);
                b.exp(2, 2, 3, -Rat::one());
                b.coord(2, 3, 2);
                b.one(3, 3);
                (
                    4,
                    vec!["w", "x", "y", "z"],
                    b,
                    vec![
                        lin(0, 0, 3),
                        Linear { coord: 1, row: 1, col: 3, divisor: alpha },
                        lin(2, 2, 3),
                        Log { coord: 3, row: 1, col: 1, scale: -Rat::one() },
                    ],
                )
            }
            A43 => {
                let mut b = ModelBuilder::new(4, 4);
                b.exp(0, 0, 3, -Rat::one());
                b.coord(0, 3, 0);
                b.one(1, 1);
                b.term(1, 2, -Rat::one(), &[(3, 1)], &[]);
                b.coord(1, 3, 1);
                b.one(2, 2);
                b.coord(2, 3, 2);
                b.one(3, 3);
                (
                    4,
                    vec!["w", "x", "y", "z"],
                    b,
                    vec![
                        lin(0, 0, 3),
                        lin(1, 1, 3),
                        lin(2, 2, 3),
                        Log { coord: 3, row: 0, col: 0, scale: -Rat::one() },
                    ],
                )
            }
            A44 => {
                let mut b = ModelBuilder::new(4, 4);
                b.exp(0, 0, 3, -Rat::one());
                b.term(0, 1, -Rat::one(), &[(3, 1)], &[(3, -Rat::one())]);
                b.term(0, 2, rat(1, 2), &[(3, 2)], &[(3, -Rat::one())]);
                b.coord(0, 3, 0);
                b.exp(1, 1, 3, -Rat::one());
                b.term(1, 2, -Rat::one(), &[(3, 1)], &[(3, -Rat::one())]);
                b.coord(1, 3, 1);
                b.exp(2, 2, 3, -Rat::one());
                b.coord(2, 3, 2);
                b.one(3, 3);
                (
                    4,
                    vec!["w", "x", "y", "z"],
                    b,
                    vec![
                        lin(0, 0, 3),
                        lin(1, 1, 3),
                        lin(2, 2, 3),
                        Log { coord: 3, row: 2, col: 2, scale: -Rat::one() },
                    ],
                )
            }
            A45ab => {
                let alpha = param(id, "alpha");
                let beta = param(id, "beta");
                let mut b = ModelBuilder::new(4, 4);
                b.exp(0, 0, 3, -Rat::one());
                b.coord(0, 3, 0);
                b.exp(1, 1, 3, -alpha);
                b.coord(1, 3, 2);
                b.exp(2, 2, 3, -beta);
                b.coord(2, 3, 1);
                b.one(3, 3);
                (
                    4,
                    vec!["w", "x", "y", "z"],
                    b,
                    vec![
                        lin(0, 0, 3),
                        lin(1, 2, 3),
                        lin(2, 1, 3),
                        Log { coord: 3, row: 0, col: 0, scale: -Rat::one() },
                    ],
                )
            }
            A47 => {
                let mut b = ModelBuilder::new(4, 4);
                b.exp(0, 0, 3, rint(-2));
                b.term(0, 1, -Rat::one(), &[(2, 1)], &[(3, -Rat::one())]);
                b.term(0, 2, Rat::one(), &[(1, 1)], &[(3, -Rat::one())]);
                b.term(0, 2, Rat::one(), &[(2, 1), (3, 1)], &[(3, -Rat::one())]);
                b.term(0, 3, rint(2), &[(0, 1)], &[]);
                b.exp(1, 1, 3, -Rat::one());
                b.term(1, 2, -Rat::one(), &[(3, 1)], &[(3, -Rat::one())]);
                b.coord(1, 3, 1);
                b.exp(2, 2, 3, -Rat::one());
                b.coord(2, 3, 2);
                b.one(3, 3);
                (
                    4,
                    vec!["w", "x", "y", "z"],
                    b,
                    vec![
                        Linear { coord: 0, row: 0, col: 3, divisor: rint(2) },
                        lin(1, 1, 3),
                        lin(2, 2, 3),
                        Log { coord: 3, row: 1, col: 1, scale: -Rat::one() },
                    ],
                )
            }
            A49b => {
                let beta = param(id, "beta");
                if beta.is_zero() {
                    return Err(RealizationError::ParamOutOfDomain);
                }
                let mut b = ModelBuilder::new(3, 4);
                b.exp(0, 0, 3, -(Rat::one() + &beta));
                b.coord(0, 1, 1);
                b.coord(0, 2, 0);
                b.exp(1, 1, 3, -beta.clone());
                b.coord(1, 2, 2);
                b.one(2, 2);
                (
                    3,
                    vec!["w", "x", "y", "z"],
                    b,
                    vec![
                        lin(0, 0, 2),
                        lin(1, 0, 1),
                        lin(2, 1, 2),
                        Log { coord: 3, row: 1, col: 1, scale: -beta },
                    ],
                )
            }
            A35apA1 | A37apA1 | A46ab | A411a | A412 => return Err(RealizationError::NoMatrixModel),
        };
    Ok(MatrixModel {
        algebra: id.name,
        size,
        coord_names: names,
        entries: build.entries,
        chart,
    })
}

impl MatrixModel {
    fn coord_vec(&self, coords: &BTreeMap<String, f64>) -> Result<Vec<f64>, RealizationError> {
        self.coord_names
            .iter()
            .map(|&n| {
                coords
                    .get(n)
                    .copied()
                    .ok_or_else(|| RealizationError::MissingCoord(n.into()))
            })
            .collect()
    }

    fn assemble(&self, c: &[f64]) -> FloatMat {
        let mut m = FloatMat::zeros(self.size, self.size);
        for r in 0..self.size {
            for col in 0..self.size {
                m.set(r, col, self.entries[r * self.size + col].eval(c));
            }
        }
        m
    }

    fn read_chart(&self, m: &FloatMat) -> Vec<f64> {
        let mut c = vec![0.0; self.coord_names.len()];
        for read in &self.chart {
            match read {
                ChartRead::Linear { coord, row, col, divisor } => {
                    c[*coord] = m.get(*row, *col) / rat_to_f64(divisor);
                }
                ChartRead::Log { coord, row, col, scale } => {
                    c[*coord] = m.get(*row, *col).ln() / rat_to_f64(scale);
                }
            }
        }
        c
    }

    /// Exact tangent basis at the identity, one matrix per coordinate.
    pub fn tangent_basis(&self) -> Vec<RatMat> {
        (0..self.coord_names.len())
            .map(|k| {
                let mut t = RatMat::zeros(self.size, self.size);
                for r in 0..self.size {
                    for c in 0..self.size {
                        t.set(r, c, self.entries[r * self.size + c].partial_at_zero(k));
                    }
                }
                t
            })
            .collect()
    }
}

pub fn make_point(
    id: &AlgebraId,
    coords: &BTreeMap<String, f64>,
) -> Result<GroupPoint, RealizationError> {
    let model = matrix_model(id)?;
    let c = model.coord_vec(coords)?;
    Ok(GroupPoint {
        algebra: id.name,
        coords: coords.clone(),
        matrix: model.assemble(&c),
    })
}

/// Matrix product with coordinate recovery through the group's chart.
pub fn multiply(
    id: &AlgebraId,
    p: &GroupPoint,
    q: &GroupPoint,
) -> Result<GroupPoint, RealizationError> {
    if p.algebra != q.algebra || p.algebra != id.name {
        return Err(RealizationError::GroupMismatch);
    }
    let model = matrix_model(id)?;
    let product = p.matrix.mul(&q.matrix);
    let c = model.read_chart(&product);
    let residual = model.assemble(&c).sub(&product).max_abs();
    if !residual.is_finite() || residual > 1e-9 {
        return Err(RealizationError::ClosureViolation { residual });
    }
    let coords = model
        .coord_names
        .iter()
        .zip(&c)
        .map(|(&n, &v)| (n.to_string(), v))
        .collect();
    Ok(GroupPoint {
        algebra: id.name,
        coords,
        matrix: product,
    })
}

fn sigma_c_matrix(c: &Rat, t: &Rat) -> RatMat {
    let mut m = RatMat::zeros(2, 2);
    m.set(0, 1, -(c * t));
    m.set(1, 0, t.clone());
    m.set(1, 1, rint(2) * t);
    m
}

/// lambda and c with the exact eigenvalue verification at t in {1, 2, 5}.
pub fn sigma_similarity(alpha: &Rat) -> Result<(Rat, Rat, bool), RealizationError> {
    if alpha.is_zero() || alpha.abs() >= Rat::one() {
        return Err(RealizationError::ParamOutOfDomain);
    }
    let lambda = -(Rat::one() + alpha) / rint(2);
    let c = rint(4) * alpha / ((Rat::one() + alpha) * (Rat::one() + alpha));
    let mut verified = true;
    for tv in [1i64, 2, 5] {
        let t = rint(tv);
        let m = sigma_c_matrix(&c, &(&lambda * &t));
        // char poly s^2 - tr s + det vs (s + t)(s + alpha t)
        let tr = m.get(0, 0) + m.get(1, 1);
        let det = m.det();
        let want = Poly::new(vec![
            alpha * &t * &t,
            (Rat::one() + alpha) * &t,
            Rat::one(),
        ]);
        let got = Poly::new(vec![det, -tr, Rat::one()]);
        verified &= want == got;
    }
    Ok((lambda, c, verified))
}

/// sigma_alpha(t) has distinct eigenvalues for t != 0 while sigma_I never
/// does, so the two semidirect products are not isomorphic.
pub fn sigma_not_similar_to_i(alpha: &Rat) -> Result<bool, RealizationError> {
    if alpha.is_zero() || alpha.abs() >= Rat::one() {
        return Err(RealizationError::ParamOutOfDomain);
    }
    // discriminant of s^2 + (1 + alpha)s + alpha is (1 - alpha)^2
    let disc = (Rat::one() - alpha) * (Rat::one() - alpha);
    Ok(!disc.is_zero())
}

fn structure_constants_in_basis(
    basis: &[RatMat],
) -> Result<StructureConstants, RealizationError> {
    let n = basis.len();
    let size = basis[0].rows();
    let mut cols: Vec<Vec<Rat>> = basis.iter().map(|b| b.flatten().to_vec()).collect();
    let mut a = RatMat::zeros(size * size, n);
    for (j, col) in cols.drain(..).enumerate() {
        for (i, v) in col.into_iter().enumerate() {
            a.set(i, j, v);
        }
    }
    let mut sc = StructureConstants::zero();
    for i in 0..n {
        for j in i + 1..n {
            let comm = basis[i].commutator(&basis[j]);
            let coeffs = solve_exact(&a, comm.flatten())
                .ok_or(RealizationError::BasisMismatch { i, j })?;
            for (k, ck) in coeffs.into_iter().enumerate() {
                sc.set_c(k, i, j, ck);
            }
        }
    }
    Ok(sc)
}

/// True when some signed-permutation relabeling of the model's tangent
/// basis reproduces the catalog brackets exactly.
pub fn verify_bracket_match(cat: &Catalog, id: &AlgebraId) -> Result<bool, RealizationError> {
    let want = crate::catalog::get_algebra(cat, id)?;
    if id.name == AlgebraName::A35apA1 {
        // no displayed matrix model; check the sigma_c form instead:
        // ad e3 on <e1, e2> must share its characteristic polynomial with
        // sigma_c(lambda), plus the abelian fourth direction
        let alpha = param(id, "alpha");
        let (lambda, c, verified) = sigma_similarity(&alpha)?;
        let m = sigma_c_matrix(&c, &lambda);
        let tr = m.get(0, 0) + m.get(1, 1);
        let det = m.det();
        let ad = crate::lietheory::ad_matrix(&want, 2);
        let ad_tr = ad.get(0, 0) + ad.get(1, 1);
        let ad_det = ad.get(0, 0) * ad.get(1, 1) - ad.get(0, 1) * ad.get(1, 0);
        for k in 0..4 {
            if !want.c(k, 0, 3).is_zero() || !want.c(k, 1, 3).is_zero() || !want.c(k, 2, 3).is_zero()
            {
                return Ok(false);
            }
        }
        return Ok(verified && tr == ad_tr && det == ad_det);
    }
    let model = matrix_model(id)?;
    let basis = model.tangent_basis();
    let got = structure_constants_in_basis(&basis)?;
    for perm in crate::stabilizer::signed_permutations() {
        // candidate relabeling e_i = sum_r perm[r][i] T_r
        let mut ok = true;
        'outer: for i in 0..4 {
            for j in i + 1..4 {
                for k in 0..4 {
                    // bracket of relabeled basis, expressed in relabeled basis
                    let mut acc = Rat::zero();
                    for r in 0..4 {
                        for s in 0..4 {
                            if perm.get(r, i).is_zero() || perm.get(s, j).is_zero() {
                                continue;
                            }
                            for m in 0..4 {
                                // T_m coefficient of [T_r, T_s], pulled back
                                acc += perm.get(r, i) * perm.get(s, j) * got.c(m, r, s)
                                    * perm.get(m, k);
                            }
                        }
                    }
                    if acc != *want.c(k, i, j) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::AlgebraName::*;
    use crate::linalg::rat;

    fn pt(id: &AlgebraId, vals: &[(&str, f64)]) -> GroupPoint {
        let coords: BTreeMap<String, f64> =
            vals.iter().map(|&(n, v)| (n.into(), v)).collect();
        make_point(id, &coords).unwrap()
    }

    #[test]
    fn identity_points() {
        for name in [A2p2A1, TwoA2, A32pA1, A33pA1, A42a, A421, A43, A44, A45ab, A47, A49b] {
            let id = AlgebraId::canonical(name);
            let model = matrix_model(&id).unwrap();
            let coords: BTreeMap<String, f64> =
                model.coord_names.iter().map(|&n| (n.into(), 0.0)).collect();
            let p = make_point(&id, &coords).unwrap();
            let residual = p.matrix.sub(&FloatMat::identity(model.size)).max_abs();
            assert!(residual == 0.0, "{name}: {residual}");
        }
    }

    #[test]
    fn displayed_entries() {
        // affine block: a = 0, b = 1
        let id = AlgebraId::canonical(A2p2A1);
        let p = pt(&id, &[("a", 0.0), ("b", 1.0), ("u", 0.0), ("v", 0.0)]);
        assert_eq!(p.matrix.get(0, 0), 1.0);
        assert_eq!(p.matrix.get(0, 1), 1.0);
        // the quadratic superdiagonal entry at z = 1
        let id = AlgebraId::canonical(A44);
        let p = pt(&id, &[("w", 0.0), ("x", 0.0), ("y", 0.0), ("z", 1.0)]);
        let e = std::f64::consts::E;
        assert!((p.matrix.get(0, 1) + e.recip()).abs() < 1e-15);
        assert!((p.matrix.get(0, 2) - 0.5 * e.recip()).abs() < 1e-15);
    }

    #[test]
    fn multiply_affine_law() {
        // (a1, b1) (a2, b2) = (a1 + a2, e^{a1} b2 + b1)
        let id = AlgebraId::canonical(A2p2A1);
        let p = pt(&id, &[("a", 0.7), ("b", -1.2), ("u", 0.5), ("v", 2.0)]);
        let q = pt(&id, &[("a", -0.3), ("b", 0.4), ("u", 1.5), ("v", -1.0)]);
        let r = multiply(&id, &p, &q).unwrap();
        assert!((r.coords["a"] - 0.4).abs() < 1e-12);
        assert!((r.coords["b"] - (0.7f64.exp() * 0.4 - 1.2)).abs() < 1e-12);
        assert!((r.coords["u"] - 2.0).abs() < 1e-12);
        assert!((r.coords["v"] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn multiply_laws() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for name in [A2p2A1, TwoA2, A32pA1, A33pA1, A42a, A421, A43, A44, A45ab, A47, A49b] {
            let id = AlgebraId::canonical(name);
            let model = matrix_model(&id).unwrap();
            let rand_pt = |rng: &mut rand_chacha::ChaCha8Rng| {
                let coords: BTreeMap<String, f64> = model
                    .coord_names
                    .iter()
                    .map(|&n| (n.to_string(), rng.gen_range(-1.0..1.0)))
                    .collect();
                make_point(&id, &coords).unwrap()
            };
            let e = {
                let coords: BTreeMap<String, f64> =
                    model.coord_names.iter().map(|&n| (n.into(), 0.0)).collect();
                make_point(&id, &coords).unwrap()
            };
            for _ in 0..5 {
                let p = rand_pt(&mut rng);
                let q = rand_pt(&mut rng);
                let r = rand_pt(&mut rng);
                // identity law
                let pe = multiply(&id, &p, &e).unwrap();
                assert!(pe.matrix.sub(&p.matrix).max_abs() < 1e-12, "{name}");
                // associativity through the chart
                let left = multiply(&id, &multiply(&id, &p, &q).unwrap(), &r).unwrap();
                let right = multiply(&id, &p, &multiply(&id, &q, &r).unwrap()).unwrap();
                assert!(
                    left.matrix.sub(&right.matrix).max_abs() < 1e-9,
                    "{name}: associativity"
                );
                for n in &model.coord_names {
                    assert!(
                        (left.coords[*n] - right.coords[*n]).abs() < 1e-9,
                        "{name}: coord {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn direct_factor_never_perturbed() {
        let id = AlgebraId::canonical(A33pA1);
        let p = pt(&id, &[("x", 0.3), ("y", -0.8), ("z", 1.1), ("t", 2.5)]);
        let q = pt(&id, &[("x", -0.4), ("y", 0.2), ("z", -0.6), ("t", 1.5)]);
        let r = multiply(&id, &p, &q).unwrap();
        assert!((r.coords["t"] - 4.0).abs() < 1e-12);
        // off-block entries of the product stay zero
        for row in 0..3 {
            for col in 3..5 {
                assert_eq!(r.matrix.get(row, col), 0.0);
            }
        }
    }

    #[test]
    fn bracket_match_all_models() {
        let cat = Catalog::builtin();
        for name in [
            A2p2A1, TwoA2, A32pA1, A33pA1, A35apA1, A42a, A421, A43, A44, A45ab, A47, A49b,
        ] {
            for index in 0..2 {
                let id = AlgebraId::new(name, crate::sample::algebra_params(name, 5, index))
                    .unwrap();
                assert!(
                    verify_bracket_match(&cat, &id).unwrap(),
                    "{name} at sample {index}"
                );
            }
        }
    }

    #[test]
    fn bracket_match_rejects_wrong_table_row() {
        // feed the A43 model the A44 brackets: no relabeling can match
        let cat = Catalog::builtin();
        let model_id = AlgebraId::canonical(A43);
        let model = matrix_model(&model_id).unwrap();
        let got = structure_constants_in_basis(&model.tangent_basis()).unwrap();
        let want = crate::catalog::get_algebra(&cat, &AlgebraId::canonical(A44)).unwrap();
        let mut any = false;
        for perm in crate::stabilizer::signed_permutations() {
            let mut ok = true;
            'outer: for i in 0..4 {
                for j in i + 1..4 {
                    for k in 0..4 {
                        let mut acc = Rat::zero();
                        for r in 0..4 {
                            for s in 0..4 {
                                for m in 0..4 {
                                    acc += perm.get(r, i) * perm.get(s, j) * got.c(m, r, s)
                                        * perm.get(m, k);
                                }
                            }
                        }
                        if acc != *want.c(k, i, j) {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            any |= ok;
        }
        assert!(!any);
    }

    #[test]
    fn sigma_examples() {
        let (l, c, v) = sigma_similarity(&rat(1, 2)).unwrap();
        assert_eq!(l, rat(-3, 4));
        assert_eq!(c, rat(8, 9));
        assert!(v);
        let (l, c, v) = sigma_similarity(&rat(-1, 2)).unwrap();
        assert_eq!(l, rat(-1, 4));
        assert_eq!(c, rat(-8, 1));
        assert!(v);
        assert_eq!(
            sigma_similarity(&rat(1, 1)),
            Err(RealizationError::ParamOutOfDomain)
        );
        for a in [rat(1, 2), rat(-1, 3), rat(9, 10)] {
            assert!(sigma_not_similar_to_i(&a).unwrap());
        }
    }

    #[test]
    fn no_model_for_the_sigma_family() {
        assert_eq!(
            matrix_model(&AlgebraId::canonical(A35apA1)).unwrap_err(),
            RealizationError::NoMatrixModel
        );
    }
}
