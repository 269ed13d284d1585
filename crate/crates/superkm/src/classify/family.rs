use super::finite::{d21_affine, d21_alpha, finite_type_label, TABLE_LIMIT};
use super::qmnt::{extract_qmnt, Branch};
use super::templates::lookup;
use crate::cartan::{Diagram, VertexKind};
use crate::reflect::canon::canonical_exact;
use crate::reflect::{orbit, CanonMode, DEFAULT_MAX_DEPTH};
use crate::scalars::Scalar;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// A name from the template library or the classical root data.
    Named {
        label: String,
        finite: bool,
    },
    D21Alpha {
        alpha: Scalar,
    },
    D21AlphaAffine,
    QTwisted {
        n: usize,
    },
    /// `alpha` as read from the rows `(0, a-1, -a), (-1, 2, -1), (-a, a+1, 0)`.
    S {
        alpha: Scalar,
    },
    Qmnt {
        m: i64,
        n: i64,
        t: i64,
        branch: Branch,
    },
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyLabel {
    pub family: Family,
    /// Reflection depth of the orbit member that matched.
    pub depth: usize,
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Named { label, .. } => label.clone(),
            Family::D21Alpha { .. } => "D(2,1,α)".into(),
            Family::D21AlphaAffine => "D(2,1,α)^(1)".into(),
            Family::QTwisted { n } => format!("q({n})^(2)"),
            Family::S { .. } => "S(1,2,α)".into(),
            Family::Qmnt { m, n, t, branch } => format!("Q{}({m},{n},{t})", branch.sign()),
            Family::Unknown => "Unknown".into(),
        }
    }

    pub fn parameter(&self) -> Option<&Scalar> {
        match self {
            Family::D21Alpha { alpha } | Family::S { alpha } => Some(alpha),
            _ => None,
        }
    }

    /// Finite-dimensional families.
    pub fn is_finite(&self) -> bool {
        matches!(
            self,
            Family::Named { finite: true, .. } | Family::D21Alpha { .. }
        )
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        if let Some(a) = self.family.parameter() {
            write!(f, " with α={a}")?;
        }
        Ok(())
    }
}

/// One even vertex `e` joined by `-1` to isotropic `i < j`, where the ratios
/// `a_ie/a_ij + a_je/a_ji = -2`; returns `alpha = 1/(a_ie/a_ij + 1)`.
pub fn s_parameter(d: &Diagram) -> Option<Scalar> {
    if d.n() != 3 {
        return None;
    }
    let e = (0..3).find(|&v| d.kind(v) == VertexKind::EvenSl2)?;
    let iso: Vec<usize> = (0..3).filter(|&v| d.is_isotropic(v)).collect();
    let [i, j] = iso[..] else { return None };
    let m1 = Scalar::int(-1);
    if d.entry(e, i) != &m1 || d.entry(e, j) != &m1 {
        return None;
    }
    if [(i, j), (j, i), (i, e), (j, e)]
        .iter()
        .any(|&(x, y)| d.entry(x, y).is_zero())
    {
        return None;
    }
    let ri = d.entry(i, e) / d.entry(i, j);
    let rj = d.entry(j, e) / d.entry(j, i);
    if &ri + &rj != Scalar::int(-2) {
        return None;
    }
    (&ri + &Scalar::one()).try_inv().ok()
}

/// Cycle of `n >= 3` vertices of kinds ○ and ⊗, an odd number of them ⊗, with
/// ○ joined by `-1` on both sides and ⊗ having ratio `-1`.
pub fn is_q_twisted(d: &Diagram) -> bool {
    let n = d.n();
    if n < 3 || !d.is_connected() {
        return false;
    }
    let mut iso = 0;
    for v in 0..n {
        let nb = d.neighbors(v);
        if nb.len() != 2 {
            return false;
        }
        let (x, y) = (d.entry(v, nb[0]), d.entry(v, nb[1]));
        match d.kind(v) {
            VertexKind::EvenSl2 => {
                if *x != Scalar::int(-1) || *y != Scalar::int(-1) {
                    return false;
                }
            }
            VertexKind::Isotropic => {
                iso += 1;
                if x / y != Scalar::int(-1) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    iso % 2 == 1
}

fn structural(d: &Diagram) -> Option<Family> {
    if let Some((m, n, t, branch)) = extract_qmnt(d) {
        return Some(Family::Qmnt { m, n, t, branch });
    }
    if let Some(alpha) = d21_alpha(d) {
        return Some(Family::D21Alpha { alpha });
    }
    if d21_affine(d) {
        return Some(Family::D21AlphaAffine);
    }
    if let Some(alpha) = s_parameter(d) {
        return Some(Family::S { alpha });
    }
    if is_q_twisted(d) {
        return Some(Family::QTwisted { n: d.n() });
    }
    None
}

fn member_family(d: &Diagram) -> Option<Family> {
    if !d.is_parametric() && d.n() <= TABLE_LIMIT {
        if let Some(t) = lookup(&canonical_exact(d)) {
            return Some(Family::Named {
                label: t.label.clone(),
                finite: t.is_finite(),
            });
        }
    }
    structural(d)
}

/// Matches `d` and then its reflection orbit against the library and the
/// structural families. Returns `Unknown` when nothing matches.
pub fn recognize_family(d: &Diagram) -> FamilyLabel {
    if let Some(family) = member_family(d) {
        return FamilyLabel { family, depth: 0 };
    }
    let mode = if d.is_parametric() {
        CanonMode::ModShift
    } else {
        CanonMode::Exact
    };
    let o = orbit(d, DEFAULT_MAX_DEPTH, mode);
    for m in &o.members {
        if let Some(family) = member_family(m.base.diagram()) {
            return FamilyLabel {
                family,
                depth: m.depth,
            };
        }
    }
    if d.n() > TABLE_LIMIT
        && !d.is_parametric()
        && !d.isotropic_vertices().is_empty()
        && d.is_connected()
    {
        if let Ok(Some(label)) = finite_type_label(d) {
            return FamilyLabel {
                family: Family::Named {
                    label,
                    finite: true,
                },
                depth: 0,
            };
        }
    }
    FamilyLabel {
        family: Family::Unknown,
        depth: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::qmnt::solve_qmnt;
    use crate::scalars::parse_scalar;

    fn rows(r: &[&[&str]], p: &[u8]) -> Diagram {
        let m = r
            .iter()
            .map(|row| row.iter().map(|s| parse_scalar(s).unwrap()).collect())
            .collect();
        Diagram::normalize(m, p.to_vec()).unwrap()
    }

    #[test]
    fn q3() {
        let d = Diagram::from_ints(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]], &[1, 1, 1]).unwrap();
        assert_eq!(recognize_family(&d).family, Family::QTwisted { n: 3 });
    }

    #[test]
    fn qmnt_round_trip() {
        let (p, _) = solve_qmnt(-1, -2, -2).unwrap();
        let f = recognize_family(&p.diagram).family;
        assert_eq!(
            f,
            Family::Qmnt {
                m: -1,
                n: -2,
                t: -2,
                branch: Branch::Plus
            }
        );
    }

    #[test]
    fn s_parametric() {
        let d = rows(
            &[&["0", "p-1", "-p"], &["-1", "2", "-1"], &["-p", "p+1", "0"]],
            &[1, 0, 1],
        );
        assert_eq!(
            recognize_family(&d).family,
            Family::S {
                alpha: Scalar::param()
            }
        );
        let h = rows(
            &[&["2", "-1", "-1"], &["1", "0", "1"], &["-3", "1", "0"]],
            &[0, 1, 1],
        );
        assert_eq!(
            recognize_family(&h).family,
            Family::S {
                alpha: Scalar::ratio(1, 2)
            }
        );
    }

    #[test]
    fn unknown_is_reported() {
        let d = Diagram::from_ints(&[&[0, 1], &[-3, 2]], &[1, 0]).unwrap();
        assert_eq!(recognize_family(&d).family, Family::Unknown);
    }

    #[test]
    fn reflected_template_is_found() {
        let c3 = Diagram::from_ints(&[&[0, 1, 0], &[1, 0, -2], &[0, -1, 2]], &[1, 1, 0]).unwrap();
        let r = crate::reflect::Base::new(&c3).odd_reflect(1).unwrap();
        let l = recognize_family(r.diagram());
        assert_eq!(l.family.name(), "C(3)");
    }
}
