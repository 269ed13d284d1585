//! The all-isotropic triangles `Q±(m,n,t)`: rows `(0,1,a), (b,0,1), (1,c,0)` with
//! `1+a+1/b = m`, `1+b+1/c = n`, `1+c+1/a = t`.

use super::finite::finite_type_label;
use super::growth::{det, even_gcm_type, GrowthType};
use super::ClassifyError;
use crate::cartan::{is_generalized_cartan, is_symmetrizable, subdiagram, Diagram};
use crate::reflect::{orbit, CanonMode, DEFAULT_MAX_DEPTH};
use crate::scalars::{Rational, Scalar};
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `-1 < a, b, c < 0`
    Plus,
    /// `a, b, c < -1`
    Minus,
}

impl Branch {
    pub fn sign(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }

    pub fn opposite(self) -> Branch {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }
}

#[derive(Debug, Clone)]
pub struct QmntSolution {
    pub m: i64,
    pub n: i64,
    pub t: i64,
    pub branch: Branch,
    /// Discriminant `(MNT-M-N-T)^2 - 4` with `M = 1-m` etc.
    pub d: BigInt,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub diagram: Diagram,
    /// Factors applied to the rows of the unnormalized matrix.
    pub row_scales: Vec<Scalar>,
}

impl fmt::Display for QmntSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q{}({},{},{})",
            self.branch.sign(),
            self.m,
            self.n,
            self.t
        )
    }
}

/// The unnormalized matrix with rows `(0,1,a), (b,0,1), (1,c,0)`.
pub fn qmnt_matrix(a: &Scalar, b: &Scalar, c: &Scalar) -> Vec<Vec<Scalar>> {
    let (z, o) = (Scalar::zero(), Scalar::one());
    vec![
        vec![z.clone(), o.clone(), a.clone()],
        vec![b.clone(), z.clone(), o.clone()],
        vec![o, c.clone(), z],
    ]
}

/// The three defining combinations `(1+a+1/b, 1+b+1/c, 1+c+1/a)`.
pub fn defining_combinations(
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
) -> Option<(Scalar, Scalar, Scalar)> {
    let one = Scalar::one();
    let f = |x: &Scalar, y: &Scalar| Some(&(&one + x) + &y.try_inv().ok()?);
    Some((f(a, b)?, f(b, c)?, f(c, a)?))
}

fn branch_of(a: &Scalar, b: &Scalar, c: &Scalar) -> Option<Branch> {
    let one = Scalar::one();
    let vals = [a, b, c];
    let plus = vals
        .iter()
        .all(|v| v.sign().ok() == Some(-1) && (*v + &one).sign().ok() == Some(1));
    let minus = vals.iter().all(|v| (*v + &one).sign().ok() == Some(-1));
    match (plus, minus) {
        (true, false) => Some(Branch::Plus),
        (false, true) => Some(Branch::Minus),
        _ => None,
    }
}

pub fn solve_qmnt(m: i64, n: i64, t: i64) -> Result<(QmntSolution, QmntSolution), ClassifyError> {
    if m > -1 || n > -1 || t > -1 {
        return Err(ClassifyError::Qmnt("m, n, t must be at most -1".into()));
    }
    if m == -1 && n == -1 && t == -1 {
        return Err(ClassifyError::Qmnt("m = n = t = -1 is q(3)^(2)".into()));
    }
    let big = |v: i64| BigInt::from(1 - v);
    let (mm, nn, tt) = (big(m), big(n), big(t));
    let a0 = &nn * &tt - 1;
    let b0 = &mm * &nn * &tt - &mm + &nn - &tt;
    let c0 = &mm * &nn - 1;
    let disc = &b0 * &b0 - BigInt::from(4) * &a0 * &c0;
    let k = &mm * &nn * &tt - &mm - &nn - &tt;
    let d: BigInt = &k * &k - 4;
    if disc != d {
        return Err(ClassifyError::Internal(format!(
            "discriminant {disc} differs from {d}"
        )));
    }
    let two_a0: BigInt = BigInt::from(2) * &a0;
    let x = Rational::new(-b0, two_a0.clone());
    let mut out = Vec::new();
    for s in [1i64, -1] {
        let y = Rational::new(BigInt::from(s), two_a0.clone());
        let a = Scalar::quad(d.clone(), x.clone(), y)
            .map_err(|e| ClassifyError::Internal(e.to_string()))?;
        let inv = |v: Scalar| {
            v.try_inv()
                .map_err(|e| ClassifyError::Internal(e.to_string()))
        };
        let b = inv(&Scalar::int(m - 1) - &a)?;
        let c = inv(&Scalar::int(n - 1) - &b)?;
        let combos = defining_combinations(&a, &b, &c)
            .ok_or_else(|| ClassifyError::Internal("zero entry".into()))?;
        if combos != (Scalar::int(m), Scalar::int(n), Scalar::int(t)) {
            return Err(ClassifyError::Internal(format!(
                "defining equations fail for root {a}"
            )));
        }
        let branch = branch_of(&a, &b, &c)
            .ok_or_else(|| ClassifyError::Internal(format!("root {a} fits no branch")))?;
        let abc = &(&a * &b) * &c;
        if (&Scalar::one() + &abc).is_zero() {
            return Err(ClassifyError::Internal("1 + abc vanishes".into()));
        }
        let (diagram, row_scales) =
            Diagram::normalize_with_scales(qmnt_matrix(&a, &b, &c), vec![1, 1, 1])?;
        let diagram = diagram.with_name(format!("Q{}({m},{n},{t})", branch.sign()));
        out.push(QmntSolution {
            m,
            n,
            t,
            branch,
            d: d.clone(),
            a,
            b,
            c,
            diagram,
            row_scales,
        });
    }
    let second = out.pop().expect("two roots");
    let first = out.pop().expect("two roots");
    let (plus, minus) = match (first.branch, second.branch) {
        (Branch::Plus, Branch::Minus) => (first, second),
        (Branch::Minus, Branch::Plus) => (second, first),
        _ => {
            return Err(ClassifyError::Internal(
                "both roots fall in the same branch".into(),
            ))
        }
    };
    Ok((plus, minus))
}

/// Reads `(m, n, t, branch)` back from an all-isotropic triangle. The given
/// vertex order is tried first, then the other labellings; cyclic relabellings
/// rotate `(m, n, t)` and the others also swap the branch.
pub fn extract_qmnt(d: &Diagram) -> Option<(i64, i64, i64, Branch)> {
    if d.n() != 3 || d.isotropic_vertices().len() != 3 {
        return None;
    }
    if (0..3).any(|i| (0..3).any(|j| i != j && d.entry(i, j).is_zero())) {
        return None;
    }
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [0, 2, 1],
        [1, 0, 2],
        [2, 1, 0],
    ];
    PERMS.iter().find_map(|p| {
        let e = d.permute(p);
        // Rows (0,1,a), (b,0,1), (1,c,0) up to row scaling.
        let a = e.entry(0, 2) / e.entry(0, 1);
        let b = e.entry(1, 0) / e.entry(1, 2);
        let c = e.entry(2, 1) / e.entry(2, 0);
        let (x, y, z) = defining_combinations(&a, &b, &c)?;
        let (x, y, z) = (x.as_i64()?, y.as_i64()?, z.as_i64()?);
        if x > -1 || y > -1 || z > -1 || (x, y, z) == (-1, -1, -1) {
            return None;
        }
        Some((x, y, z, branch_of(&a, &b, &c)?))
    })
}

#[derive(Debug, Clone)]
pub struct HyperbolicFailure {
    pub member: usize,
    pub pair: (usize, usize),
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct QmntReport {
    pub det: Scalar,
    /// Determinant of the unnormalized matrix computed by elimination.
    pub det_elimination: Scalar,
    pub symmetrizable: bool,
    pub b_matrix: [[i64; 3]; 3],
    pub b_growth: GrowthType,
    pub finite_growth_b: bool,
    pub orbit_size: usize,
    pub hyperbolic: bool,
    pub hyperbolic_failures: Vec<HyperbolicFailure>,
}

/// Finite or affine type of a two-vertex diagram.
fn pair_ok(sub: &Diagram) -> Result<(), String> {
    if !sub.is_connected() {
        return Ok(());
    }
    if !sub.isotropic_vertices().is_empty() {
        return match finite_type_label(sub) {
            Ok(Some(_)) => Ok(()),
            _ => Err("isotropic pair not of finite type".into()),
        };
    }
    if !is_generalized_cartan(sub).is_empty() {
        return Err("pair is not a generalized Cartan matrix".into());
    }
    match even_gcm_type(sub.matrix()) {
        GrowthType::Finite | GrowthType::Affine => Ok(()),
        GrowthType::Indefinite => Err(format!(
            "even pair {:?} is indefinite",
            sub.matrix()[0][1].to_string()
        )),
    }
}

pub fn qmnt_report(s: &QmntSolution) -> QmntReport {
    let det1 = &Scalar::one() + &(&(&s.a * &s.b) * &s.c);
    let det_elimination = det(&qmnt_matrix(&s.a, &s.b, &s.c));
    let b_matrix = [[2, s.m, s.m], [s.n, 2, s.n], [s.t, s.t, 2]];
    let bm: Vec<Vec<Scalar>> = b_matrix
        .iter()
        .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
        .collect();
    let b_growth = even_gcm_type(&bm);
    let o = orbit(&s.diagram, DEFAULT_MAX_DEPTH, CanonMode::Exact);
    let mut failures = Vec::new();
    for (k, mem) in o.members.iter().enumerate() {
        let md = mem.base.diagram();
        for i in 0..3 {
            for j in i + 1..3 {
                let sub = subdiagram(md, &[i, j]).expect("valid pair");
                if let Err(reason) = pair_ok(&sub) {
                    failures.push(HyperbolicFailure {
                        member: k,
                        pair: (i, j),
                        reason,
                    });
                }
            }
        }
    }
    QmntReport {
        det: det1,
        det_elimination,
        symmetrizable: is_symmetrizable(&s.diagram).is_some(),
        b_matrix,
        b_growth,
        finite_growth_b: b_growth != GrowthType::Indefinite,
        orbit_size: o.len(),
        hyperbolic: failures.is_empty() && o.status.is_closed(),
        hyperbolic_failures: failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn minus_one_minus_one_minus_two() {
        let (p, m) = solve_qmnt(-1, -1, -2).unwrap();
        assert_eq!(p.d, BigInt::from(21));
        assert_eq!(p.a, s("(-9+sqrt(21))/10"));
        assert_eq!(m.a, s("(-9-sqrt(21))/10"));
        assert_eq!(p.b, s("(sqrt(21)-11)/10"));
        assert_eq!(p.c, s("(sqrt(21)-9)/6"));
        // f(a) = 5a^2 + 9a + 3 vanishes at both roots.
        for a in [&p.a, &m.a] {
            let f = &(&(&Scalar::int(5) * &(a * a)) + &(&Scalar::int(9) * a)) + &Scalar::int(3);
            assert!(f.is_zero());
        }
        let r = qmnt_report(&p);
        assert_eq!(r.det, s("(sqrt(21)-3)/2"));
        assert_eq!(r.det, r.det_elimination);
        assert!(!r.symmetrizable);
        assert!(!r.finite_growth_b);
        assert!(r.hyperbolic, "{:?}", r.hyperbolic_failures);
        assert_eq!(r.orbit_size, 4);
    }

    #[test]
    fn rejects_q3() {
        assert!(matches!(
            solve_qmnt(-1, -1, -1),
            Err(ClassifyError::Qmnt(_))
        ));
        assert!(matches!(solve_qmnt(0, -1, -2), Err(ClassifyError::Qmnt(_))));
    }

    #[test]
    fn hyperbolic_table() {
        for (m, n, t, h) in [
            (-1, -1, -2, true),
            (-1, -1, -3, true),
            (-1, -1, -4, true),
            (-1, -2, -2, true),
            (-2, -2, -2, true),
            (-1, -1, -5, false),
            (-1, -2, -3, false),
        ] {
            let (p, mi) = solve_qmnt(m, n, t).unwrap();
            assert_eq!(qmnt_report(&p).hyperbolic, h, "{m},{n},{t}");
            assert_eq!(qmnt_report(&mi).hyperbolic, h, "{m},{n},{t}");
        }
    }

    #[test]
    fn extraction_round_trips() {
        let (p, m) = solve_qmnt(-1, -2, -2).unwrap();
        assert_eq!(extract_qmnt(&p.diagram), Some((-1, -2, -2, Branch::Plus)));
        assert_eq!(extract_qmnt(&m.diagram), Some((-1, -2, -2, Branch::Minus)));
    }
}
