//! Parametric lift of three-vertex S-shaped diagrams.
//!
//! An S-shaped diagram has one even vertex `e` joined by `-1` to two isotropic
//! vertices `i < j` that are joined to each other. Its rows match
//! `(0, p-1, -p) / (-1, 2, -1) / (-p, p+1, 0)` at one value of `p`; odd
//! reflections move `p` by one, so the concrete orbit is infinite while the
//! parametric one closes modulo shifts.

use crate::cartan::Diagram;
use crate::cartan::VertexKind;
use crate::scalars::{Domain, Rational, Scalar};

#[derive(Debug, Clone)]
pub struct SLift {
    /// Value of the parameter reproducing the concrete diagram.
    pub alpha: Rational,
    /// Same vertex order as the concrete diagram, entries in `p`.
    pub lifted: Diagram,
    pub even: usize,
    pub first: usize,
    pub second: usize,
}

pub fn s_shape_lift(d: &Diagram) -> Option<SLift> {
    if d.n() != 3 || d.domain() != Domain::Rational {
        return None;
    }
    let kinds = d.kinds();
    let e = (0..3).find(|&v| kinds[v] == VertexKind::EvenSl2)?;
    let iso: Vec<usize> = (0..3)
        .filter(|&v| kinds[v] == VertexKind::Isotropic)
        .collect();
    if iso.len() != 2 {
        return None;
    }
    let (i, j) = (iso[0], iso[1]);
    let m1 = Scalar::int(-1);
    if d.entry(e, i) != &m1
        || d.entry(e, j) != &m1
        || d.entry(i, j).is_zero()
        || d.entry(j, i).is_zero()
    {
        return None;
    }
    if d.entry(i, e).is_zero() || d.entry(j, e).is_zero() {
        return None;
    }
    let ri = d.entry(i, e) / d.entry(i, j);
    let rj = d.entry(j, e) / d.entry(j, i);
    if &ri + &rj != Scalar::int(-2) {
        return None;
    }
    let beta = &ri + &Scalar::one();
    if beta.is_zero() {
        return None;
    }
    let alpha = beta.try_inv().ok()?.as_rational()?.clone();
    let p = Scalar::param();
    let one = Scalar::one();
    let mut m = vec![vec![Scalar::zero(); 3]; 3];
    m[e] = vec![m1.clone(); 3];
    m[e][e] = Scalar::int(2);
    m[i][e] = &p - &one;
    m[i][j] = -&p;
    m[j][e] = &p + &one;
    m[j][i] = -&p;
    let lifted = Diagram::normalize(m, d.parities().to_vec()).ok()?;
    if lifted.eval_param(&alpha).ok()? != *d {
        return None;
    }
    Some(SLift {
        alpha,
        lifted,
        even: e,
        first: i,
        second: j,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    fn rows(r: &[[&str; 3]; 3], p: [u8; 3]) -> Diagram {
        let m = r
            .iter()
            .map(|row| row.iter().map(|s| parse_scalar(s).unwrap()).collect())
            .collect();
        Diagram::normalize(m, p.to_vec()).unwrap()
    }

    #[test]
    fn b_form_half() {
        let d = rows(
            &[["2", "-1", "-1"], ["1", "0", "1"], ["-3", "1", "0"]],
            [0, 1, 1],
        );
        let l = s_shape_lift(&d).unwrap();
        assert_eq!(l.alpha, Rational::new(1.into(), 2.into()));
        assert_eq!(l.lifted.eval_param(&l.alpha).unwrap(), d);
    }

    #[test]
    fn section_two_form() {
        let d = rows(
            &[
                ["0", "2/3-1", "-2/3"],
                ["-1", "2", "-1"],
                ["-2/3", "5/3", "0"],
            ],
            [1, 0, 1],
        );
        let l = s_shape_lift(&d).unwrap();
        assert_eq!(l.alpha, Rational::new(2.into(), 3.into()));
    }

    #[test]
    fn affine_a01_is_not_s_shaped() {
        let d = rows(
            &[["0", "-1", "1"], ["-1", "2", "-1"], ["1", "-1", "0"]],
            [1, 0, 1],
        );
        assert!(s_shape_lift(&d).is_none());
    }
}
