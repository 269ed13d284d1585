use super::finite::finite_type_label;
use super::ClassifyError;
use crate::cartan::{is_generalized_cartan, subdiagram, Diagram, Violation};
use crate::reflect::canon::canonical_exact;
use crate::reflect::{orbit, s_shape_lift, CanonMode, Orbit, OrbitStatus, Step};
use crate::scalars::Rational;
use num_traits::Zero;

#[derive(Debug, Clone)]
pub enum RegularVerdict {
    Regular {
        status: OrbitStatus,
        members: usize,
        /// Decided on the parametric lift together with the bad-set test.
        lifted: bool,
    },
    NotRegular {
        witness: Diagram,
        path: Vec<Step>,
        depth: usize,
        violations: Vec<Violation>,
    },
    Inconclusive {
        depth: usize,
        members: usize,
    },
}

impl RegularVerdict {
    pub fn is_regular(&self) -> Option<bool> {
        match self {
            RegularVerdict::Regular { .. } => Some(true),
            RegularVerdict::NotRegular { .. } => Some(false),
            RegularVerdict::Inconclusive { .. } => None,
        }
    }
}

fn first_violation(o: &Orbit) -> Option<RegularVerdict> {
    o.members.iter().find_map(|m| {
        let v = is_generalized_cartan(m.base.diagram());
        (!v.is_empty()).then(|| RegularVerdict::NotRegular {
            witness: m.base.diagram().clone(),
            path: m.base.path().to_vec(),
            depth: m.depth,
            violations: v,
        })
    })
}

/// Every diagram reachable by odd reflections satisfies the generalized Cartan
/// conditions. A refused reflection means a non-regular isotropic vertex, which
/// already violates rule 3' on the member it starts from.
pub fn is_regular_kac_moody(d: &Diagram, max_depth: usize) -> RegularVerdict {
    let mode = if d.is_parametric() {
        CanonMode::ModShift
    } else {
        CanonMode::Exact
    };
    let o = orbit(d, max_depth, mode);
    if let Some(v) = first_violation(&o) {
        return v;
    }
    if o.status.is_closed() {
        return RegularVerdict::Regular {
            status: o.status,
            members: o.len(),
            lifted: false,
        };
    }
    let inconclusive = RegularVerdict::Inconclusive {
        depth: max_depth,
        members: o.len(),
    };
    let Some(lift) = s_shape_lift(d) else {
        return inconclusive;
    };
    let lo = orbit(&lift.lifted, max_depth, CanonMode::ModShift);
    if !lo.status.is_closed() || first_violation(&lo).is_some() {
        return inconclusive;
    }
    let bad: Vec<Rational> = lo
        .all_bases()
        .flat_map(|b| {
            b.diagram()
                .matrix()
                .iter()
                .flatten()
                .flat_map(|v| v.critical_values())
                .collect::<Vec<_>>()
        })
        .collect();
    let hits_bad = bad.iter().any(|r| (&lift.alpha - r).fract().is_zero());
    if hits_bad {
        return inconclusive;
    }
    RegularVerdict::Regular {
        status: OrbitStatus::ClosedModuloShift,
        members: lo.len(),
        lifted: true,
    }
}

#[derive(Debug, Clone)]
pub enum SubfiniteVerdict {
    Subfinite {
        status: OrbitStatus,
        members: usize,
    },
    NotSubfinite {
        witness: Diagram,
        path: Vec<Step>,
        subset: Vec<usize>,
        subdiagram: Diagram,
    },
    Inconclusive {
        reason: String,
    },
}

impl SubfiniteVerdict {
    pub fn is_subfinite(&self) -> Option<bool> {
        match self {
            SubfiniteVerdict::Subfinite { .. } => Some(true),
            SubfiniteVerdict::NotSubfinite { .. } => Some(false),
            SubfiniteVerdict::Inconclusive { .. } => None,
        }
    }
}

fn induced_connected(d: &Diagram, set: &[usize]) -> bool {
    let mut seen = vec![set[0]];
    let mut k = 0;
    while k < seen.len() {
        let v = seen[k];
        for &u in set {
            if !seen.contains(&u) && d.adjacent(v, u) {
                seen.push(u);
            }
        }
        k += 1;
    }
    seen.len() == set.len()
}

/// Connected proper subsets of the vertices that contain an isotropic vertex.
pub fn isotropic_proper_subsets(d: &Diagram) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) - 1 {
        let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if set.iter().any(|&i| d.is_isotropic(i)) && induced_connected(d, &set) {
            out.push(set);
        }
    }
    out
}

/// For every reflected diagram, every connected proper subdiagram with an
/// isotropic vertex is of finite type. Regularity is not re-checked here.
pub fn is_subfinite(d: &Diagram, max_depth: usize) -> Result<SubfiniteVerdict, ClassifyError> {
    if d.isotropic_vertices().is_empty() {
        return Err(ClassifyError::NoIsotropic);
    }
    if !d.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    let o = if d.is_parametric() {
        orbit(d, max_depth, CanonMode::ModShift)
    } else {
        let exact = orbit(d, max_depth, CanonMode::Exact);
        match (exact.status.is_closed(), s_shape_lift(d)) {
            (false, Some(lift)) => orbit(&lift.lifted, max_depth, CanonMode::ModShift),
            _ => exact,
        }
    };
    if !o.status.is_closed() {
        return Ok(SubfiniteVerdict::Inconclusive {
            reason: format!("orbit truncated at depth {max_depth}"),
        });
    }
    let mut checked = std::collections::HashSet::new();
    for m in &o.members {
        let md = m.base.diagram();
        for set in isotropic_proper_subsets(md) {
            let sub = subdiagram(md, &set)?;
            if sub.is_parametric() {
                return Ok(SubfiniteVerdict::Inconclusive {
                    reason: "a proper subdiagram depends on the parameter".into(),
                });
            }
            if !checked.insert(canonical_exact(&sub)) {
                continue;
            }
            if finite_type_label(&sub)?.is_none() {
                return Ok(SubfiniteVerdict::NotSubfinite {
                    witness: md.clone(),
                    path: m.base.path().to_vec(),
                    subset: set,
                    subdiagram: sub,
                });
            }
        }
    }
    Ok(SubfiniteVerdict::Subfinite {
        status: o.status,
        members: o.len(),
    })
}
