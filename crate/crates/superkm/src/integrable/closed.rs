use super::{IntegrableError, Weight};
use crate::cartan::Diagram;
use crate::classify::QmntSolution;
use crate::scalars::Scalar;

/// Matrix of `S(1,2,alpha)` in the convention of the closed-form conditions:
/// rows `(2,-1,-1), (alpha-1,0,1), (-1-alpha,1,0)`, parities `(0,1,1)`.
pub fn s12a_matrix(alpha: &Scalar) -> Vec<Vec<Scalar>> {
    let one = Scalar::one();
    vec![
        vec![Scalar::int(2), Scalar::int(-1), Scalar::int(-1)],
        vec![alpha - &one, Scalar::zero(), one.clone()],
        vec![&(-alpha) - &one, one, Scalar::zero()],
    ]
}

fn check_alpha(alpha: &Scalar) -> Result<(), IntegrableError> {
    let bad = alpha.is_zero()
        || alpha
            .try_inv()
            .ok()
            .is_some_and(|r| r.as_integer().is_some());
    if bad {
        return Err(IntegrableError::Shape(format!(
            "S(1,2,α) needs α ≠ 0 and 1/α not an integer, got {alpha}"
        )));
    }
    Ok(())
}

/// Normalized diagram of [`s12a_matrix`] and the row scales; a weight in this
/// convention becomes `w.rescaled(&scales)` on the diagram.
pub fn s12a_diagram(alpha: &Scalar) -> Result<(Diagram, Vec<Scalar>), IntegrableError> {
    check_alpha(alpha)?;
    Diagram::normalize_with_scales(s12a_matrix(alpha), vec![0, 1, 1])
        .map_err(|e| IntegrableError::Shape(e.to_string()))
}

/// Closed form: `lambda_1 in Z_{>=0}`, and `lambda_2 + lambda_3 - 1 in Z_{>=0}`
/// unless `lambda_2 = lambda_3 = 0`.
pub fn s12a_conditions(alpha: &Scalar, w: &Weight) -> Result<bool, IntegrableError> {
    check_alpha(alpha)?;
    if w.len() != 3 {
        return Err(IntegrableError::Length {
            expected: 3,
            got: w.len(),
        });
    }
    if w.is_parametric() {
        return Err(IntegrableError::Unresolved("a parametric weight".into()));
    }
    let [l1, l2, l3] = &w.values[..] else {
        unreachable!()
    };
    if !l1.in_nonneg_lattice(0) {
        return Ok(false);
    }
    if l2.is_zero() && l3.is_zero() {
        return Ok(true);
    }
    Ok((&(l2 + l3) - &Scalar::one()).in_nonneg_lattice(0))
}

/// `(lambda_1 + lambda_2/b, lambda_2 + lambda_3/c, lambda_3 + lambda_1/a)` for a
/// weight on the coroots of the rows `(0,1,a), (b,0,1), (1,c,0)`.
pub fn qmnt_combinations(s: &QmntSolution, w: &Weight) -> Result<[Scalar; 3], IntegrableError> {
    if w.len() != 3 {
        return Err(IntegrableError::Length {
            expected: 3,
            got: w.len(),
        });
    }
    let l = &w.values;
    Ok([
        &l[0] + &(&l[1] / &s.b),
        &l[1] + &(&l[2] / &s.c),
        &l[2] + &(&l[0] / &s.a),
    ])
}

/// The typical integrable weight with combinations `(x, y, z)`, on the coroots
/// of the rows `(0,1,a), (b,0,1), (1,c,0)`. The inverse of the combination map
/// is `abc/(1+abc)` times the adjugate-shaped matrix below.
pub fn qmnt_weight_from_xyz(
    s: &QmntSolution,
    x: i64,
    y: i64,
    z: i64,
) -> Result<Weight, IntegrableError> {
    if x <= 0 || y <= 0 || z <= 0 {
        return Err(IntegrableError::Weight(format!(
            "x, y, z must be positive, got {x}, {y}, {z}"
        )));
    }
    let (a, b, c) = (&s.a, &s.b, &s.c);
    let one = Scalar::one();
    let abc = &(a * b) * c;
    let factor = &abc / &(&one + &abc);
    let m = [
        [one.clone(), -&one / b, &one / &(b * c)],
        [&one / &(a * c), one.clone(), -&one / c],
        [-&one / a, &one / &(b * a), one.clone()],
    ];
    let xyz = [Scalar::int(x), Scalar::int(y), Scalar::int(z)];
    let values: Vec<Scalar> = m
        .iter()
        .map(|row| {
            &factor
                * &row
                    .iter()
                    .zip(&xyz)
                    .fold(Scalar::zero(), |acc, (u, v)| &acc + &(u * v))
        })
        .collect();
    let w = Weight::new(values);
    let back = qmnt_combinations(s, &w)?;
    if back != xyz {
        return Err(IntegrableError::Shape(format!(
            "combinations {back:?} do not recover ({x},{y},{z})"
        )));
    }
    Ok(w)
}

/// Typical iff `lambda_1, lambda_2, lambda_3` are all nonzero.
pub fn is_typical_qmnt(w: &Weight) -> Result<bool, IntegrableError> {
    if w.len() != 3 {
        return Err(IntegrableError::Length {
            expected: 3,
            got: w.len(),
        });
    }
    Ok(w.values.iter().all(|v| !v.is_zero()))
}
