//! The isometric-automorphism group engine.
//!
//! Finite part: all 384 signed-permutation matrices, filtered by template
//! consistency, the exact automorphism condition, and A^t M A = M. The
//! continuous part is the stabilizer Lie algebra {D in Der(g) : D^t M + M D
//! = 0}, solved exactly. Identification maps (order, commutativity,
//! dimension, component count) to the small-group labels the theory uses.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::catalog::{
    get_algebra, get_aut_template, AlgebraId, AutTemplate, Catalog, CatalogError, GroupLabel,
    MetricFamily, StructureConstants,
};
use crate::lietheory::is_automorphism;
use crate::linalg::{nullspace_basis, rat_to_string, Rat, RatMat};
use crate::metrics::{instantiate_family, MetricError};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StabilizerError {
    #[error("identity component is not a coordinate-plane rotation circle")]
    NonCircleComponent,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    PossiblyIncomplete,
}

impl Completeness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Completeness::Complete => "complete",
            Completeness::PossiblyIncomplete => "possibly-incomplete",
        }
    }
}

#[derive(Debug, Clone)]
pub struct StabilizerGroup {
    /// Signed-permutation members, lexicographically sorted by entries.
    pub finite_elements: Vec<RatMat>,
    pub continuous_dim: usize,
    pub continuous_basis: Vec<RatMat>,
    pub component_count: usize,
    pub label: GroupLabel,
    pub completeness: Completeness,
}

/// All 384 signed-permutation matrices of dimension 4.
pub fn signed_permutations() -> Vec<RatMat> {
    let mut out = Vec::with_capacity(384);
    let perms: [[usize; 4]; 24] = {
        let mut ps = [[0usize; 4]; 24];
        let mut n = 0;
        for a in 0..4 {
            for b in 0..4 {
                if b == a {
                    continue;
                }
                for c in 0..4 {
                    if c == a || c == b {
                        continue;
                    }
                    let d = 6 - a - b - c;
                    ps[n] = [a, b, c, d];
                    n += 1;
                }
            }
        }
        ps
    };
    for p in perms {
        for mask in 0..16u32 {
            let mut m = RatMat::zeros(4, 4);
            for (col, &row) in p.iter().enumerate() {
                let sign = if mask & (1 << col) != 0 { -1 } else { 1 };
                m.set(row, col, crate::linalg::rint(sign));
            }
            out.push(m);
        }
    }
    out
}

/// Exact basis of {D in Der(g) : D^t M + M D = 0}.
///
/// One stacked linear system over the 16 entries of D: the 24 derivation
/// rows plus the 10 rows of the symmetric constraint.
pub fn stabilizer_lie_algebra(sc: &StructureConstants, m: &RatMat) -> Vec<RatMat> {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    // derivation identity rows, as in the Der(g) solve
    for i in 0..4 {
        for j in i + 1..4 {
            for k in 0..4 {
                let mut row = vec![Rat::zero(); 16];
                for r in 0..4 {
                    for c in 0..4 {
                        let mut coef = Rat::zero();
                        if r == k {
                            coef += sc.c(c, i, j);
                        }
                        if c == i {
                            coef -= sc.c(k, r, j);
                        }
                        if c == j {
                            coef -= sc.c(k, i, r);
                        }
                        row[r * 4 + c] = coef;
                    }
                }
                rows.push(row);
            }
        }
    }
    // (D^t M + M D)_{ij} = 0 for i <= j
    for i in 0..4 {
        for j in i..4 {
            let mut row = vec![Rat::zero(); 16];
            for r in 0..4 {
                for c in 0..4 {
                    let mut coef = Rat::zero();
                    if c == i {
                        coef += m.get(r, j);
                    }
                    if c == j {
                        coef += m.get(i, r);
                    }
                    row[r * 4 + c] = coef;
                }
            }
            rows.push(row);
        }
    }
    nullspace_basis(&RatMat::from_rows(rows))
        .into_iter()
        .map(|v| {
            let mut d = RatMat::zeros(4, 4);
            for r in 0..4 {
                for c in 0..4 {
                    d.set(r, c, v[r * 4 + c].clone());
                }
            }
            d
        })
        .collect()
}

/// Finite stabilizer members among signed permutations, sorted.
pub fn discrete_stabilizer(
    sc: &StructureConstants,
    m: &RatMat,
    tmpl: &AutTemplate,
    algebra_env: &BTreeMap<String, Rat>,
) -> Vec<RatMat> {
    let mut found: Vec<RatMat> = signed_permutations()
        .into_iter()
        .filter(|a| tmpl.matches(a, algebra_env))
        .filter(|a| is_automorphism(sc, a))
        .filter(|a| a.transpose().mul(m).mul(a) == *m)
        .collect();
    found.sort();
    found
}

/// Closure under product and inverse, with the identity present.
pub fn is_closed_group(elements: &[RatMat]) -> bool {
    if !elements.contains(&RatMat::identity(4)) {
        return false;
    }
    for a in elements {
        let Some(inv) = a.inverse() else {
            return false;
        };
        if !elements.contains(&inv) {
            return false;
        }
        for b in elements {
            if !elements.contains(&a.mul(b)) {
                return false;
            }
        }
    }
    true
}

fn rotation_plane(d: &RatMat) -> Option<(usize, usize)> {
    let mut nonzero = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if !d.get(i, j).is_zero() {
                nonzero.push((i, j));
            }
        }
    }
    match nonzero.as_slice() {
        [(i1, j1), (i2, j2)]
            if i1 == j2 && j1 == i2 && i1 != j1 && *d.get(*i1, *j1) == -d.get(*i2, *j2) =>
        {
            Some((*i1.min(j1), *i1.max(j1)))
        }
        _ => None,
    }
}

fn on_rotation_circle(a: &RatMat, plane: (usize, usize)) -> bool {
    let (p, q) = plane;
    for i in 0..4 {
        for j in 0..4 {
            let in_plane = (i == p || i == q) && (j == p || j == q);
            if !in_plane {
                let want = if i == j {
                    crate::linalg::rint(1)
                } else {
                    Rat::zero()
                };
                if a.get(i, j) != &want {
                    return false;
                }
            }
        }
    }
    // in-plane block must be a rotation: [[c,-s],[s,c]]
    a.get(p, p) == a.get(q, q) && *a.get(p, q) == -a.get(q, p)
}

/// Number of connected components of the stabilizer.
pub fn component_count(
    finite: &[RatMat],
    cont_basis: &[RatMat],
) -> Result<usize, StabilizerError> {
    if cont_basis.is_empty() {
        return Ok(finite.len());
    }
    if cont_basis.len() > 1 {
        return Err(StabilizerError::NonCircleComponent);
    }
    let Some(plane) = rotation_plane(&cont_basis[0]) else {
        return Err(StabilizerError::NonCircleComponent);
    };
    let on_circle = finite.iter().filter(|a| on_rotation_circle(a, plane)).count();
    if on_circle == 0 || finite.len() % on_circle != 0 {
        return Err(StabilizerError::NonCircleComponent);
    }
    Ok(finite.len() / on_circle)
}

fn is_abelian(elements: &[RatMat]) -> bool {
    elements
        .iter()
        .all(|a| elements.iter().all(|b| a.mul(b) == b.mul(a)))
}

fn all_involutions(elements: &[RatMat]) -> bool {
    let id = RatMat::identity(4);
    elements.iter().all(|a| a.mul(a) == id)
}

/// Identification table for the group profiles the theory produces.
pub fn identify_group(
    finite: &[RatMat],
    continuous_dim: usize,
    components: usize,
) -> GroupLabel {
    match (continuous_dim, finite.len()) {
        (0, 1) => GroupLabel::Trivial,
        (0, 2) => GroupLabel::Z2,
        (0, 4) if all_involutions(finite) => GroupLabel::Z2x2,
        (0, 8) if is_abelian(finite) => GroupLabel::Z2x3,
        (0, 8) => GroupLabel::D4,
        (1, _) if components == 2 => GroupLabel::O2,
        (1, _) if components == 4 => GroupLabel::O2xZ2,
        _ => GroupLabel::Unrecognized,
    }
}

/// Full pipeline for one (structure constants, metric, template) triple.
pub fn compute_stabilizer(
    sc: &StructureConstants,
    m: &RatMat,
    tmpl: &AutTemplate,
    algebra_env: &BTreeMap<String, Rat>,
) -> StabilizerGroup {
    let finite = discrete_stabilizer(sc, m, tmpl, algebra_env);
    let cont = stabilizer_lie_algebra(sc, m);
    let closed = is_closed_group(&finite);
    let (components, circle_ok) = match component_count(&finite, &cont) {
        Ok(c) => (c, true),
        Err(_) => (finite.len().max(1), false),
    };
    let label = if circle_ok {
        identify_group(&finite, cont.len(), components)
    } else {
        GroupLabel::Unrecognized
    };
    let completeness = if closed && circle_ok && label != GroupLabel::Unrecognized {
        Completeness::Complete
    } else {
        Completeness::PossiblyIncomplete
    };
    StabilizerGroup {
        finite_elements: finite,
        continuous_dim: cont.len(),
        continuous_basis: cont,
        component_count: components,
        label,
        completeness,
    }
}

#[derive(Debug, Clone)]
pub struct IsometryReport {
    pub group: String,
    pub algebra: String,
    pub case: String,
    pub algebra_params: BTreeMap<String, Rat>,
    pub metric_params: BTreeMap<String, Rat>,
    pub stabilizer: StabilizerGroup,
    pub expected: GroupLabel,
    pub matched: bool,
    /// Rendered decomposition; a genuine semidirect statement only under
    /// the type-(R) hypothesis, a containment otherwise.
    pub decomposition: String,
}

fn params_json(p: &BTreeMap<String, Rat>) -> Value {
    Value::Object(
        p.iter()
            .map(|(k, v)| (k.clone(), Value::String(rat_to_string(v))))
            .collect(),
    )
}

impl IsometryReport {
    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "algebra": self.algebra,
            "case": self.case,
            "params": {
                "algebra": params_json(&self.algebra_params),
                "metric": params_json(&self.metric_params),
            },
            "label": self.stabilizer.label.as_str(),
            "finite_order": self.stabilizer.finite_elements.len(),
            "continuous_dim": self.stabilizer.continuous_dim,
            "components": self.stabilizer.component_count,
            "completeness": self.stabilizer.completeness.as_str(),
            "elements": self.stabilizer.finite_elements.iter()
                .map(|m| m.entries_to_strings()).collect::<Vec<_>>(),
            "expected": self.expected.as_str(),
            "match": self.matched,
            "decomposition": self.decomposition,
        })
    }
}

/// Instantiate the family, run the engine, and render the decomposition.
pub fn isometry_report(
    cat: &Catalog,
    id: &AlgebraId,
    family: &MetricFamily,
    metric_params: &BTreeMap<String, Rat>,
) -> Result<IsometryReport, StabilizerError> {
    let sc = get_algebra(cat, id)?;
    let tmpl = get_aut_template(cat, id)?;
    let m = instantiate_family(family, metric_params)?;
    let stab = compute_stabilizer(&sc, &m, &tmpl, &id.params);
    let expected = family.expected.label_at(metric_params);
    let matched = stab.label == expected && stab.completeness == Completeness::Complete;
    let group = cat.algebra(id.name).group.clone();
    let decomposition = format!(
        "Isom({group}, {case}) = {group} x| {label}",
        case = family.case_name,
        label = stab.label
    );
    Ok(IsometryReport {
        group,
        algebra: id.name.as_str().into(),
        case: family.case_name.clone(),
        algebra_params: id.params.clone(),
        metric_params: metric_params.clone(),
        stabilizer: stab,
        expected,
        matched,
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::AlgebraName::{self, *};
    use crate::expr::env;
    use crate::linalg::{mat_exp, rat, rint, FloatMat};
    use crate::metrics::pullback;

    fn setup(
        name: AlgebraName,
        case: &str,
        params: &[(&str, Rat)],
    ) -> (Catalog, AlgebraId, MetricFamily, BTreeMap<String, Rat>) {
        let cat = Catalog::builtin();
        let id = AlgebraId::canonical(name);
        let f = cat
            .algebra(name)
            .families
            .iter()
            .find(|f| f.case_name == case)
            .unwrap()
            .clone();
        (cat, id, f, env(params))
    }

    fn run(name: AlgebraName, case: &str, params: &[(&str, Rat)]) -> IsometryReport {
        let (cat, id, f, p) = setup(name, case, params);
        isometry_report(&cat, &id, &f, &p).unwrap()
    }

    #[test]
    fn signed_permutation_count() {
        let all = signed_permutations();
        assert_eq!(all.len(), 384);
        for m in &all {
            assert!(!m.det().is_zero());
        }
    }

    #[test]
    fn lie_algebra_dimensions() {
        let cat = Catalog::builtin();
        let dim = |name, case, params: &[(&str, Rat)]| {
            let id = AlgebraId::canonical(name);
            let sc = get_algebra(&cat, &id).unwrap();
            let f = cat
                .algebra(name)
                .families
                .iter()
                .find(|f: &&MetricFamily| f.case_name == case)
                .unwrap();
            let m = instantiate_family(f, &env(params)).unwrap();
            stabilizer_lie_algebra(&sc, &m).len()
        };
        assert_eq!(dim(A33pA1, "M1", &[("alpha", rint(2))]), 1);
        assert_eq!(dim(TwoA2, "M1", &[("alpha", rint(1))]), 0);
        assert_eq!(dim(A2p2A1, "M1", &[("alpha", rint(2))]), 1);
    }

    #[test]
    fn d4_for_the_round_metric_on_the_double_affine_group() {
        let r = run(TwoA2, "M1", &[("alpha", rint(1))]);
        assert_eq!(r.stabilizer.finite_elements.len(), 8);
        assert_eq!(r.stabilizer.label, GroupLabel::D4);
        assert!(r.matched);
        assert!(!is_abelian(&r.stabilizer.finite_elements));
    }

    #[test]
    fn a44_z2_elements() {
        let r = run(
            A44,
            "M1",
            &[("beta", rint(2)), ("gamma", rat(1, 2)), ("lambda", rint(1))],
        );
        let want = vec![
            RatMat::from_i64(&[&[-1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]),
            RatMat::identity(4),
        ];
        assert_eq!(r.stabilizer.finite_elements, want);
        assert_eq!(r.stabilizer.label, GroupLabel::Z2);
        assert!(r.matched);
    }

    #[test]
    fn a45_sign_cube() {
        let r = run(A45ab, "M1", &[("lambda", rint(2))]);
        assert_eq!(r.stabilizer.finite_elements.len(), 8);
        assert_eq!(r.stabilizer.label, GroupLabel::Z2x3);
        for a in &r.stabilizer.finite_elements {
            // diagonal sign matrices fixing e4
            for i in 0..4 {
                for j in 0..4 {
                    if i != j {
                        assert!(a.get(i, j).is_zero());
                    }
                }
            }
            assert_eq!(a.get(3, 3), &rint(1));
        }
    }

    #[test]
    fn component_counting() {
        // order 8, no continuous part
        let r = run(TwoA2, "M1", &[("alpha", rint(1))]);
        assert_eq!(
            component_count(&r.stabilizer.finite_elements, &[]).unwrap(),
            8
        );
        // O(2): 8 elements over a circle -> 2 components
        let r = run(A33pA1, "M2", &[("alpha", rint(2)), ("gamma", rint(1))]);
        assert_eq!(r.stabilizer.finite_elements.len(), 8);
        assert_eq!(r.stabilizer.continuous_dim, 1);
        assert_eq!(r.stabilizer.component_count, 2);
        assert_eq!(r.stabilizer.label, GroupLabel::O2);
        // O(2) x Z2: 16 elements over a circle -> 4 components
        let r = run(A33pA1, "M1", &[("alpha", rint(2))]);
        assert_eq!(r.stabilizer.finite_elements.len(), 16);
        assert_eq!(r.stabilizer.component_count, 4);
        assert_eq!(r.stabilizer.label, GroupLabel::O2xZ2);
    }

    #[test]
    fn identify_table() {
        let id = RatMat::identity(4);
        assert_eq!(identify_group(&[id.clone()], 0, 1), GroupLabel::Trivial);
        let r = run(TwoA2, "M1", &[("alpha", rint(1))]);
        assert_eq!(
            identify_group(&r.stabilizer.finite_elements, 0, 8),
            GroupLabel::D4
        );
        let r = run(A45ab, "M1", &[("lambda", rint(2))]);
        assert_eq!(
            identify_group(&r.stabilizer.finite_elements, 0, 8),
            GroupLabel::Z2x3
        );
        // an order-3-like profile is not in the table
        assert_eq!(identify_group(&[id.clone(), id.clone(), id], 0, 3), GroupLabel::Unrecognized);
    }

    #[test]
    fn report_examples() {
        // trivial stabilizers
        let r = run(
            A47,
            "M2",
            &[
                ("alpha", rint(1)),
                ("beta", rint(1)),
                ("lambda", rint(1)),
                ("mu", rint(1)),
            ],
        );
        assert_eq!(r.stabilizer.label, GroupLabel::Trivial);
        assert!(r.matched);
        assert_eq!(r.decomposition, "Isom(G_{4.7}, M2) = G_{4.7} x| trivial");

        let r = run(
            A2p2A1,
            "M5",
            &[
                ("alpha", rint(1)),
                ("beta", rint(1)),
                ("gamma", rint(1)),
                ("lambda", rint(1)),
                ("delta", rint(1)),
            ],
        );
        assert_eq!(r.stabilizer.label, GroupLabel::Trivial);
        assert!(r.matched);

        // Z2 with the documented nonidentity element
        let r = run(
            A32pA1,
            "M2",
            &[("alpha", rint(1)), ("beta", rint(1)), ("gamma", rint(1))],
        );
        assert_eq!(r.stabilizer.label, GroupLabel::Z2);
        let nonid = RatMat::from_i64(&[
            &[-1, 0, 0, 0],
            &[0, -1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, -1],
        ]);
        assert!(r.stabilizer.finite_elements.contains(&nonid));
    }

    #[test]
    fn mgamma_and_mnu_remark_metrics() {
        // exact dihedral condition: (alpha, gamma, mu) = (3, 4, 5)
        let r = run(
            TwoA2,
            "Mgamma",
            &[("alpha", rint(3)), ("gamma", rint(4)), ("mu", rint(5))],
        );
        assert_eq!(r.stabilizer.label, GroupLabel::D4);
        assert!(r.matched);
        // off the condition
        let r = run(
            TwoA2,
            "Mgamma",
            &[("alpha", rint(1)), ("gamma", rint(1)), ("mu", rint(3))],
        );
        assert_eq!(r.stabilizer.label, GroupLabel::Z2x2);
        assert!(r.matched);
        // Mnu: Z2 generated by diag(1, -1, 1, 1)
        let r = run(
            TwoA2,
            "Mnu",
            &[("alpha", rint(1)), ("mu", rint(2)), ("nu", rint(1))],
        );
        assert_eq!(r.stabilizer.label, GroupLabel::Z2);
        let nonid = RatMat::from_i64(&[
            &[1, 0, 0, 0],
            &[0, -1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(
            r.stabilizer.finite_elements,
            vec![nonid, RatMat::identity(4)].into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>()
        );
        assert!(r.matched);
    }

    #[test]
    fn membership_soundness_and_group_axioms() {
        let cat = Catalog::builtin();
        for spec in &cat.algebras {
            if spec.template.is_empty() {
                continue;
            }
            let id = AlgebraId::canonical(spec.name);
            let sc = get_algebra(&cat, &id).unwrap();
            for f in &spec.families {
                let params = crate::sample::metric_params(f, 3, 1);
                let m = instantiate_family(f, &params).unwrap();
                let tmpl = get_aut_template(&cat, &id).unwrap();
                let finite = discrete_stabilizer(&sc, &m, &tmpl, &id.params);
                assert!(is_closed_group(&finite), "{}/{}", spec.name, f.case_name);
                for a in &finite {
                    assert!(is_automorphism(&sc, a));
                    assert_eq!(a.transpose().mul(&m).mul(a), m);
                    // order divides 8
                    let mut p = a.clone();
                    for _ in 0..2 {
                        p = p.mul(&p);
                    }
                    assert_eq!(p.mul(&p.mul(&p)).mul(&p), RatMat::identity(4).mul(&p.mul(&p)).mul(&p.mul(&p)));
                }
            }
        }
    }

    #[test]
    fn scaling_invariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let cat = Catalog::builtin();
        let id = AlgebraId::canonical(A33pA1);
        let sc = get_algebra(&cat, &id).unwrap();
        let tmpl = get_aut_template(&cat, &id).unwrap();
        let f = cat.algebra(A33pA1).families[2].clone();
        let m = instantiate_family(&f, &env(&[("alpha", rint(2)), ("beta", rint(1))])).unwrap();
        let base = discrete_stabilizer(&sc, &m, &tmpl, &id.params);
        let base_cont = stabilizer_lie_algebra(&sc, &m).len();
        for _ in 0..20 {
            let c = rat(rng.gen_range(1i64..=9), rng.gen_range(1i64..=9));
            let scaled = m.scale(&c);
            assert_eq!(discrete_stabilizer(&sc, &scaled, &tmpl, &id.params), base);
            assert_eq!(stabilizer_lie_algebra(&sc, &scaled).len(), base_cont);
        }
    }

    #[test]
    fn conjugation_covariance() {
        // for A in the stabilizer of M, psi^-1 A psi stabilizes
        // pullback(psi^-1, M); exact, 50 random psi
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let cat = Catalog::builtin();
        for spec in &cat.algebras {
            if spec.template.is_empty() {
                continue;
            }
            let id = AlgebraId::canonical(spec.name);
            let sc = get_algebra(&cat, &id).unwrap();
            let tmpl = get_aut_template(&cat, &id).unwrap();
            let f = &spec.families[0];
            let params = crate::sample::metric_params(f, 11, 0);
            let m = instantiate_family(f, &params).unwrap();
            let stab = discrete_stabilizer(&sc, &m, &tmpl, &id.params);
            let mut done = 0;
            while done < 50 {
                let vars: BTreeMap<String, Rat> = tmpl
                    .free_vars(0)
                    .into_iter()
                    .map(|v| (v, rat(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2))))
                    .collect();
                let psi = tmpl.instantiate(0, &vars, &id.params).unwrap();
                let Some(psi_inv) = psi.inverse() else {
                    continue;
                };
                let pulled = pullback(&psi_inv, &m).unwrap();
                for a in &stab {
                    let conj = psi_inv.mul(a).mul(&psi);
                    assert_eq!(
                        conj.transpose().mul(&pulled).mul(&conj),
                        pulled,
                        "{}: covariance fails",
                        spec.name
                    );
                }
                done += 1;
            }
        }
    }

    #[test]
    fn identity_component_sampling() {
        // exp(tD) stays an isometry and an automorphism within 1e-9
        let cat = Catalog::builtin();
        let id = AlgebraId::canonical(A2p2A1);
        let sc = get_algebra(&cat, &id).unwrap();
        let f = cat.algebra(A2p2A1).families[0].clone();
        let m = instantiate_family(&f, &env(&[("alpha", rint(2))])).unwrap();
        let basis = stabilizer_lie_algebra(&sc, &m);
        assert_eq!(basis.len(), 1);
        let mf = m.to_float();
        for d in &basis {
            for t in [0.3, 1.1, 2.7] {
                let e = mat_exp(&d.to_float(), t);
                let res = e.transpose().mul(&mf).mul(&e).sub(&mf).max_abs();
                assert!(res <= 1e-9, "metric residual {res}");
                // float automorphism residual
                let max_auto = (0..4)
                    .flat_map(|i| (0..4).map(move |j| (i, j)))
                    .filter(|&(i, j)| i < j)
                    .map(|(i, j)| {
                        let col = |k: usize| -> Vec<f64> {
                            (0..4).map(|r| e.get(r, k)).collect()
                        };
                        let br = |x: &[f64], y: &[f64]| -> Vec<f64> {
                            let mut out = vec![0.0; 4];
                            for k in 0..4 {
                                for a in 0..4 {
                                    for b in 0..4 {
                                        out[k] += crate::linalg::rat_to_f64(sc.c(k, a, b))
                                            * x[a]
                                            * y[b];
                                    }
                                }
                            }
                            out
                        };
                        let mut ei = vec![0.0; 4];
                        ei[i] = 1.0;
                        let mut ej = vec![0.0; 4];
                        ej[j] = 1.0;
                        let lhs = e.apply(&br(&ei, &ej));
                        let rhs = br(&col(i), &col(j));
                        lhs.iter()
                            .zip(&rhs)
                            .fold(0.0f64, |mx, (a, b)| mx.max((a - b).abs()))
                    })
                    .fold(0.0f64, f64::max);
                assert!(max_auto <= 1e-9, "automorphism residual {max_auto}");
                let _ = FloatMat::identity(4);
            }
        }
    }
}
