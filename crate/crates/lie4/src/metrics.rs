//! Upper-triangular representatives vs. positive-definite inner products:
//! the bijection phi, family instantiation, and metric pullback.

use std::collections::BTreeMap;

use crate::catalog::MetricFamily;
use crate::linalg::{cholesky_upper, LinalgError, Rat, RatMat, UpperFactor};
use num::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("parameter out of domain: {0}")]
    ParamOutOfDomain(String),
    #[error("matrix not in Tsup4: {0}")]
    NotUpperPositive(String),
    #[error(
        "closed-form mismatch for {algebra}/{case} at entry ({row},{col}): phi(U) = {phi}, transcribed = {form}"
    )]
    ClosedFormMismatch {
        algebra: String,
        case: String,
        row: usize,
        col: usize,
        phi: String,
        form: String,
    },
    #[error("singular matrix")]
    Singular,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Check membership in Tsup4: upper triangular, strictly positive diagonal.
pub fn check_tsup(u: &RatMat) -> Result<(), MetricError> {
    for i in 0..4 {
        if !u.get(i, i).is_positive() {
            return Err(MetricError::NotUpperPositive(format!(
                "diagonal entry ({},{}) not positive",
                i + 1,
                i + 1
            )));
        }
        for j in 0..i {
            if !u.get(i, j).is_zero() {
                return Err(MetricError::NotUpperPositive(format!(
                    "entry ({},{}) below the diagonal is nonzero",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// phi(U) = (U^-1)^t (U^-1), the bijection Tsup4 -> S4.
pub fn phi(u: &RatMat) -> Result<RatMat, MetricError> {
    check_tsup(u)?;
    let ui = u.inverse().ok_or(MetricError::Singular)?;
    Ok(ui.transpose().mul(&ui))
}

/// Inverse of phi; exact whenever M = phi(U) for rational U.
pub fn phi_inverse(m: &RatMat) -> Result<UpperFactor, MetricError> {
    Ok(cholesky_upper(m)?)
}

/// Instantiate a family: evaluate the U-pattern, push through phi, and
/// compare with the transcribed closed form entry by entry. Any mismatch is
/// a transcription tripwire, not a recoverable condition.
pub fn instantiate_family(
    f: &MetricFamily,
    params: &BTreeMap<String, Rat>,
) -> Result<RatMat, MetricError> {
    f.validate_params(params)
        .map_err(|e| MetricError::ParamOutOfDomain(e.to_string()))?;
    let mut u = RatMat::zeros(4, 4);
    let mut form = RatMat::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            u.set(
                i,
                j,
                f.u_pattern[i][j]
                    .eval(params)
                    .map_err(|e| MetricError::ParamOutOfDomain(e.to_string()))?,
            );
            form.set(
                i,
                j,
                f.closed_form[i][j]
                    .eval(params)
                    .map_err(|e| MetricError::ParamOutOfDomain(e.to_string()))?,
            );
        }
    }
    let m = phi(&u)?;
    for i in 0..4 {
        for j in 0..4 {
            if m.get(i, j) != form.get(i, j) {
                return Err(MetricError::ClosedFormMismatch {
                    algebra: f.algebra.as_str().into(),
                    case: f.case_name.clone(),
                    row: i + 1,
                    col: j + 1,
                    phi: crate::linalg::rat_to_string(m.get(i, j)),
                    form: crate::linalg::rat_to_string(form.get(i, j)),
                });
            }
        }
    }
    Ok(m)
}

/// Pullback of M by the automorphism A: (A^-1)^t M A^-1.
///
/// This is a right action: pullback(B·A, M) = pullback(B, pullback(A, M)).
pub fn pullback(a: &RatMat, m: &RatMat) -> Result<RatMat, MetricError> {
    let ai = a.inverse().ok_or(MetricError::Singular)?;
    Ok(ai.transpose().mul(m).mul(&ai))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{list_metric_families, AlgebraId, AlgebraName, Catalog};
    use crate::expr::env;
    use crate::linalg::{rat, rint};
    use rand::{Rng, SeedableRng};

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&RatMat::identity(4)).unwrap(), RatMat::identity(4));
        let u = RatMat::diag(&[rint(2), rint(1), rint(1), rint(1)]);
        assert_eq!(
            phi(&u).unwrap(),
            RatMat::diag(&[rat(1, 4), rint(1), rint(1), rint(1)])
        );
        let mut u = RatMat::identity(4);
        u.set(0, 1, rint(1));
        let want = RatMat::from_i64(&[
            &[1, -1, 0, 0],
            &[-1, 2, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(phi(&u).unwrap(), want);
        // not in Tsup4
        let mut l = RatMat::identity(4);
        l.set(2, 0, rint(1));
        assert!(matches!(phi(&l), Err(MetricError::NotUpperPositive(_))));
    }

    #[test]
    fn phi_round_trip_exact() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1000 {
            let mut u = RatMat::zeros(4, 4);
            for i in 0..4 {
                u.set(i, i, rat(rng.gen_range(1i64..=9), rng.gen_range(1i64..=3)));
                for j in i + 1..4 {
                    u.set(i, j, rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=3)));
                }
            }
            let m = phi(&u).unwrap();
            assert!(m.is_symmetric());
            for k in 1..=4 {
                assert!(m.leading_minor(k).is_positive());
            }
            match phi_inverse(&m).unwrap() {
                UpperFactor::Rational(got) => assert_eq!(got, u),
                UpperFactor::Float(_) => panic!("phi(U) must recover U rationally"),
            }
        }
    }

    #[test]
    fn instantiate_family_examples() {
        let cat = Catalog::builtin();
        let fam = |name, case: &str| {
            list_metric_families(&cat, &AlgebraId::canonical(name))
                .unwrap()
                .iter()
                .find(|f| f.case_name == case)
                .cloned()
                .unwrap()
        };
        let m = instantiate_family(&fam(AlgebraName::A2p2A1, "M1"), &env(&[("alpha", rint(3))]))
            .unwrap();
        assert_eq!(m, RatMat::diag(&[rat(1, 9), rint(1), rint(1), rint(1)]));

        let m = instantiate_family(
            &fam(AlgebraName::TwoA2, "M2"),
            &env(&[("alpha", rint(1)), ("mu", rint(2))]),
        )
        .unwrap();
        assert_eq!(m, RatMat::diag(&[rint(1), rint(1), rat(1, 4), rint(1)]));

        let m = instantiate_family(
            &fam(AlgebraName::A49b, "M3"),
            &env(&[
                ("alpha", rint(1)),
                ("eta", rint(1)),
                ("lambda", rint(1)),
                ("mu", rint(1)),
            ]),
        )
        .unwrap();
        assert_eq!(m.get(0, 2), &rint(1));
        assert_eq!(m.get(1, 2), &rint(-2));

        // out-of-domain parameters
        let err = instantiate_family(
            &fam(AlgebraName::TwoA2, "M2"),
            &env(&[("alpha", rint(2)), ("mu", rint(2))]),
        );
        assert!(matches!(err, Err(MetricError::ParamOutOfDomain(_))));
    }

    #[test]
    fn closed_form_tripwire_fires_on_corruption() {
        let cat = Catalog::builtin();
        let mut f = list_metric_families(&cat, &AlgebraId::canonical(AlgebraName::A2p2A1))
            .unwrap()[2]
            .clone(); // M3
        f.closed_form[1][2] = crate::expr::e("lambda"); // true entry is -lambda
        let err = instantiate_family(&f, &env(&[("alpha", rint(1)), ("lambda", rint(1))]));
        assert!(matches!(err, Err(MetricError::ClosedFormMismatch { .. })));
    }

    #[test]
    fn no_closed_form_mismatch_on_shipped_catalog() {
        // every transcribed formula agrees with phi at canonical-ish params
        let cat = Catalog::builtin();
        for spec in &cat.algebras {
            for f in &spec.families {
                let params = crate::sample::metric_params(f, 7, 0);
                instantiate_family(&f, &params).unwrap_or_else(|e| {
                    panic!("{}/{}: {e}", spec.name, f.case_name)
                });
            }
        }
    }

    #[test]
    fn pullback_examples_and_action_law() {
        let i4 = RatMat::identity(4);
        let m = RatMat::diag(&[rint(1), rint(1), rat(1, 4), rint(1)]);
        assert_eq!(pullback(&i4, &m).unwrap(), m);
        assert_eq!(
            pullback(&i4.scale(&rint(2)), &i4).unwrap(),
            i4.scale(&rat(1, 4))
        );
        let swap = RatMat::from_i64(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]);
        assert_eq!(
            pullback(&swap, &m).unwrap(),
            RatMat::diag(&[rat(1, 4), rint(1), rint(1), rint(1)])
        );
        assert!(matches!(
            pullback(&RatMat::zeros(4, 4), &m),
            Err(MetricError::Singular)
        ));

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut rand_inv = || loop {
            let mut a = RatMat::zeros(4, 4);
            for i in 0..4 {
                for j in 0..4 {
                    a.set(i, j, rat(rng.gen_range(-3i64..=3), 1));
                }
            }
            if !a.det().is_zero() {
                return a;
            }
        };
        for _ in 0..100 {
            let a = rand_inv();
            let b = rand_inv();
            let lhs = pullback(&b.mul(&a), &RatMat::identity(4)).unwrap();
            let rhs =
                pullback(&b, &pullback(&a, &RatMat::identity(4)).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
