//! Integrability of irreducible highest weight modules `L(lambda)`.

mod closed;
mod weight;

pub use closed::{
    is_typical_qmnt, qmnt_combinations, qmnt_weight_from_xyz, s12a_conditions, s12a_diagram,
    s12a_matrix,
};
pub use weight::Weight;

use crate::cartan::{Diagram, VertexKind};
use crate::reflect::{
    principal_roots, Base, PrincipalRoots, ReflectError, Step, StepKind, Witness,
};
use crate::scalars::Scalar;

#[derive(Debug, thiserror::Error)]
pub enum IntegrableError {
    #[error("weight has {got} values, diagram has {expected} vertices")]
    Length { expected: usize, got: usize },
    #[error("bad weight {0}")]
    Weight(String),
    #[error("principal roots incomplete: orbit truncated at depth {0}")]
    Truncated(usize),
    #[error("cannot decide {0} for a parametric value")]
    Unresolved(String),
    #[error("not integrable at vertex {vertex}: lambda(h) = {value}")]
    NotIntegrableAt { vertex: usize, value: Box<Scalar> },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Reflect(#[from] ReflectError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchCase {
    /// Isotropic, `lambda(h_k) = 0`: the weight is kept.
    Kept,
    /// Isotropic, `lambda(h_k) != 0`: `lambda - alpha_k`.
    Shifted,
    /// Even or odd non-isotropic: `lambda - lambda(h_k) alpha_k`.
    Reflected,
}

#[derive(Debug, Clone)]
pub struct BranchEntry {
    pub step: Step,
    pub value: Scalar,
    pub case: BranchCase,
}

#[derive(Debug, Clone)]
pub struct Condition {
    pub root: Vec<i64>,
    /// The coroot at the witness, in the original coroots.
    pub coroot: Vec<Scalar>,
    pub value: Scalar,
    /// Required set is `2^parity Z_{>=0}`.
    pub parity: u8,
    pub pass: bool,
    pub witness: Witness,
    pub branches: Vec<BranchEntry>,
}

#[derive(Debug, Clone)]
pub struct IntegrabilityVerdict {
    pub integrable: bool,
    pub conditions: Vec<Condition>,
}

impl IntegrabilityVerdict {
    pub fn failures(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.pass)
    }
}

fn decided(v: &Scalar, what: &str) -> Result<(), IntegrableError> {
    if v.is_parametric() {
        return Err(IntegrableError::Unresolved(what.to_string()));
    }
    Ok(())
}

/// `lambda_i` in `2^p(i) Z_{>=0}` for a non-isotropic vertex; isotropic vertices
/// always pass. `w` is given on the coroots of `d`.
pub fn nonisotropic_condition(
    d: &Diagram,
    w: &Weight,
    i: usize,
) -> Result<(bool, Scalar), IntegrableError> {
    w.check_len(d)?;
    let v = w.values[i].clone();
    if d.is_isotropic(i) {
        return Ok((true, v));
    }
    decided(&v, "integrality")?;
    Ok((v.in_nonneg_lattice(d.parity(i)), v))
}

/// Highest weight after reflecting `b` at `k`, as values on the original coroots.
/// Even and odd non-isotropic `k` need `lambda(h_k)` in `2^p Z_{>=0}`.
pub fn transform_weight(
    b: &Base,
    w: &Weight,
    k: usize,
) -> Result<(Weight, BranchEntry), IntegrableError> {
    let d = b.diagram();
    if k >= d.n() {
        return Err(ReflectError::OutOfRange(k).into());
    }
    let value = w.eval(&b.coroots()[k]);
    decided(&value, "the reflection branch")?;
    let (coef, case, kind) = if d.is_isotropic(k) {
        if value.is_zero() {
            (Scalar::zero(), BranchCase::Kept, StepKind::Odd)
        } else {
            (Scalar::one(), BranchCase::Shifted, StepKind::Odd)
        }
    } else {
        if !value.in_nonneg_lattice(d.parity(k)) {
            return Err(IntegrableError::NotIntegrableAt {
                vertex: k,
                value: Box::new(value),
            });
        }
        (value.clone(), BranchCase::Reflected, StepKind::Even)
    };
    let step = Step { vertex: k, kind };
    let entry = BranchEntry { step, value, case };
    if coef.is_zero() {
        return Ok((w.clone(), entry));
    }
    let root = &b.roots()[k];
    let origin = b.origin();
    let values = (0..origin.n())
        .map(|l| {
            let alpha_hl = root
                .iter()
                .enumerate()
                .filter(|(_, &r)| r != 0)
                .fold(Scalar::zero(), |acc, (j, &r)| {
                    &acc + &(&Scalar::int(r) * origin.entry(l, j))
                });
            &w.values[l] - &(&coef * &alpha_hl)
        })
        .collect();
    Ok((Weight { values, rho: w.rho }, entry))
}

/// Bases along one witness path, the last one carrying the principal root.
#[derive(Debug, Clone)]
struct WitnessPlan {
    root: Vec<i64>,
    witness: Witness,
    bases: Vec<Base>,
}

/// Principal-root checks with every witness path already replayed, so that many
/// weights can be tested against one diagram.
#[derive(Debug, Clone)]
pub struct IntegrabilityPlan {
    diagram: Diagram,
    checks: Vec<WitnessPlan>,
}

impl IntegrabilityPlan {
    pub fn new(d: &Diagram, pr: &PrincipalRoots) -> Result<IntegrabilityPlan, IntegrableError> {
        if !pr.complete() {
            return Err(IntegrableError::Shape(
                "principal roots are incomplete".into(),
            ));
        }
        let mut checks = Vec::new();
        for r in &pr.roots {
            for wit in &r.witnesses {
                let mut bases = vec![Base::new(d)];
                for &s in &wit.path {
                    let next = bases.last().unwrap().apply(s)?;
                    bases.push(next);
                }
                checks.push(WitnessPlan {
                    root: r.root.clone(),
                    witness: wit.clone(),
                    bases,
                });
            }
        }
        Ok(IntegrabilityPlan {
            diagram: d.clone(),
            checks,
        })
    }

    pub fn verdict(&self, w: &Weight) -> Result<IntegrabilityVerdict, IntegrableError> {
        w.check_len(&self.diagram)?;
        if w.is_parametric() {
            return Err(IntegrableError::Unresolved("a parametric weight".into()));
        }
        let conditions = self
            .checks
            .iter()
            .map(|c| check_witness(c, w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntegrabilityVerdict {
            integrable: conditions.iter().all(|c| c.pass),
            conditions,
        })
    }
}

fn check_witness(plan: &WitnessPlan, w: &Weight) -> Result<Condition, IntegrableError> {
    let mut lam = w.clone();
    let mut branches = Vec::with_capacity(plan.witness.path.len());
    for (b, &s) in plan.bases.iter().zip(&plan.witness.path) {
        let (next, entry) = transform_weight(b, &lam, s.vertex)?;
        lam = next;
        branches.push(entry);
    }
    let b = plan.bases.last().unwrap();
    let v = plan.witness.vertex;
    let coroot = b.coroots()[v].clone();
    let value = lam.eval(&coroot);
    decided(&value, "the principal-root condition")?;
    let parity = b.diagram().parity(v);
    let pass = match b.diagram().kind(v) {
        VertexKind::EvenSl2 | VertexKind::OddOsp => value.in_nonneg_lattice(parity),
        _ => true,
    };
    Ok(Condition {
        root: plan.root.clone(),
        coroot,
        value,
        parity,
        pass,
        witness: plan.witness.clone(),
        branches,
    })
}

/// `L(lambda)` is integrable iff every principal root acts locally nilpotently;
/// each root is checked at every witness found in the orbit.
pub fn is_integrable_hw(
    d: &Diagram,
    w: &Weight,
    max_depth: usize,
) -> Result<IntegrabilityVerdict, IntegrableError> {
    w.check_len(d)?;
    if w.is_parametric() {
        return Err(IntegrableError::Unresolved("a parametric weight".into()));
    }
    let pr = principal_roots(d, max_depth);
    if !pr.complete() {
        return Err(IntegrableError::Truncated(max_depth));
    }
    IntegrabilityPlan::new(d, &pr)?.verdict(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> Diagram {
        Diagram::from_ints(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]], &[1, 1, 1]).unwrap()
    }

    #[test]
    fn vertex_conditions() {
        let d = Diagram::from_ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, 1, 0]], &[0, 1, 1]).unwrap();
        let w = Weight::from_ints(&[3, 3, -7]);
        assert!(nonisotropic_condition(&d, &w, 0).unwrap().0);
        assert!(!nonisotropic_condition(&d, &w, 1).unwrap().0);
        assert!(nonisotropic_condition(&d, &w, 2).unwrap().0);
        let irr = Weight::new(vec![
            crate::scalars::parse_scalar("(-9+sqrt(21))/10").unwrap(),
            Scalar::zero(),
            Scalar::zero(),
        ]);
        assert!(!nonisotropic_condition(&d, &irr, 0).unwrap().0);
    }

    /// The weight `(1,1,1)` on the coroots of the unnormalized rows.
    fn q3_ones() -> Weight {
        let m = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
            .collect();
        let (_, scales) = Diagram::normalize_with_scales(m, vec![1, 1, 1]).unwrap();
        Weight::from_ints(&[1, 1, 1]).rescaled(&scales)
    }

    #[test]
    fn q3_reflection_at_first_vertex() {
        let b = Base::new(&q3());
        let (w, e) = transform_weight(&b, &q3_ones(), 0).unwrap();
        assert_eq!(e.case, BranchCase::Shifted);
        // h_1 - h_2 on the unnormalized coroots is h_1 + h_2 on the normalized ones
        let h = vec![Scalar::one(), Scalar::one(), Scalar::zero()];
        assert_eq!(w.eval(&h), Scalar::int(-1));
        let nb = b.odd_reflect(0).unwrap();
        let c = &nb.coroots()[1];
        assert_eq!(&c[0] / &c[1], Scalar::one());
        assert!(c[2].is_zero());
    }

    #[test]
    fn zero_weight_keeps() {
        let b = Base::new(&q3());
        let (w, e) = transform_weight(&b, &Weight::zero(3), 1).unwrap();
        assert_eq!(e.case, BranchCase::Kept);
        assert_eq!(w, Weight::zero(3));
    }

    #[test]
    fn q3_examples() {
        assert!(
            is_integrable_hw(&q3(), &Weight::zero(3), 16)
                .unwrap()
                .integrable
        );
        let v = is_integrable_hw(&q3(), &q3_ones(), 16).unwrap();
        assert!(!v.integrable);
        assert!(v.failures().any(|c| c.value == Scalar::int(-1)));
    }

    #[test]
    fn even_step_needs_integrality() {
        let d = Diagram::from_ints(&[&[2, -1], &[-1, 2]], &[0, 0]).unwrap();
        let b = Base::new(&d);
        let (w, _) = transform_weight(&b, &Weight::from_ints(&[2, 0]), 0).unwrap();
        assert_eq!(w.values, vec![Scalar::int(-2), Scalar::int(2)]);
        assert!(matches!(
            transform_weight(&b, &Weight::from_ints(&[-1, 0]), 0),
            Err(IntegrableError::NotIntegrableAt { .. })
        ));
    }
}
