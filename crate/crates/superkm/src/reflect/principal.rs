use super::lift::s_shape_lift;
use super::orbit::{orbit, Orbit, OrbitStatus};
use super::{Base, CanonMode, Step};
use crate::cartan::{Diagram, VertexKind};
use crate::scalars::Scalar;
use std::collections::HashSet;

/// Where a principal root shows up as a simple (or halved) root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub path: Vec<Step>,
    pub vertex: usize,
}

#[derive(Debug, Clone)]
pub struct PrincipalRoot {
    /// Coordinates in the original simple roots.
    pub root: Vec<i64>,
    /// Coordinates in the original coroots, scaled so `root(coroot) = 2`.
    pub coroot: Vec<Scalar>,
    /// True when the root is twice an odd non-isotropic simple root.
    pub doubled: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone)]
pub struct PrincipalRoots {
    pub roots: Vec<PrincipalRoot>,
    pub status: OrbitStatus,
    /// Collected on the parametric lift and replayed on the concrete diagram.
    pub lifted: bool,
}

impl PrincipalRoots {
    pub fn complete(&self) -> bool {
        self.status.is_closed()
    }
}

fn collect(bases: &mut dyn Iterator<Item = &Base>) -> Vec<PrincipalRoot> {
    let mut out: Vec<PrincipalRoot> = Vec::new();
    for b in bases {
        let d = b.diagram();
        for v in 0..d.n() {
            let (root, coroot, doubled) = match d.kind(v) {
                VertexKind::EvenSl2 => (b.roots()[v].clone(), b.coroots()[v].clone(), false),
                VertexKind::OddOsp => (
                    b.roots()[v].iter().map(|x| 2 * x).collect(),
                    b.coroots()[v].iter().map(|h| h / &Scalar::int(2)).collect(),
                    true,
                ),
                _ => continue,
            };
            let w = Witness {
                path: b.path().to_vec(),
                vertex: v,
            };
            match out.iter_mut().find(|r| r.root == root) {
                Some(r) => {
                    if !r.witnesses.contains(&w) {
                        r.witnesses.push(w);
                    }
                }
                None => out.push(PrincipalRoot {
                    root,
                    coroot,
                    doubled,
                    witnesses: vec![w],
                }),
            }
        }
    }
    out.sort_by(|a, b| a.root.cmp(&b.root));
    out
}

const BOREL_LIMIT: usize = 20_000;

/// Every base reachable from `d` by odd reflections, told apart by their sets of
/// simple roots rather than by the shape of their diagrams. `None` when the walk
/// does not close within `max_depth` steps or [`BOREL_LIMIT`] bases.
fn borel_walk(d: &Diagram, max_depth: usize) -> Option<Vec<Base>> {
    let key = |b: &Base| {
        let mut r = b.roots().to_vec();
        r.sort();
        r
    };
    let root = Base::new(d);
    let mut seen = HashSet::from([key(&root)]);
    let mut bases = vec![root];
    let mut depths = vec![0usize];
    let mut next = 0;
    while next < bases.len() {
        let b = bases[next].clone();
        for k in b.diagram().isotropic_vertices() {
            let Ok(nb) = b.odd_reflect(k) else { continue };
            if !seen.insert(key(&nb)) {
                continue;
            }
            if depths[next] >= max_depth || bases.len() >= BOREL_LIMIT {
                return None;
            }
            depths.push(depths[next] + 1);
            bases.push(nb);
        }
        next += 1;
    }
    Some(bases)
}

/// Principal roots read off every base visited by an orbit computation.
pub fn principal_roots_of_orbit(o: &Orbit) -> Vec<PrincipalRoot> {
    collect(&mut o.all_bases())
}

/// Principal roots of `d`. Parametric diagrams use the mod-shift orbit; concrete
/// S-shaped diagrams whose exact orbit does not close use the parametric lift,
/// with coroots recomputed by replaying each witness path on `d`.
pub fn principal_roots(d: &Diagram, max_depth: usize) -> PrincipalRoots {
    if d.is_parametric() {
        let o = orbit(d, max_depth, CanonMode::ModShift);
        return PrincipalRoots {
            roots: principal_roots_of_orbit(&o),
            status: o.status,
            lifted: false,
        };
    }
    let o = orbit(d, max_depth, CanonMode::Exact);
    if o.status.is_closed() {
        return match borel_walk(d, max_depth) {
            Some(bases) => PrincipalRoots {
                roots: collect(&mut bases.iter()),
                status: o.status,
                lifted: false,
            },
            None => PrincipalRoots {
                roots: principal_roots_of_orbit(&o),
                status: OrbitStatus::Truncated { depth: max_depth },
                lifted: false,
            },
        };
    }
    let Some(lift) = s_shape_lift(d) else {
        return PrincipalRoots {
            roots: principal_roots_of_orbit(&o),
            status: o.status,
            lifted: false,
        };
    };
    let lo = orbit(&lift.lifted, max_depth, CanonMode::ModShift);
    let base = Base::new(d);
    let mut roots = principal_roots_of_orbit(&lo);
    for r in roots.iter_mut() {
        let w = &r.witnesses[0];
        match base.replay(&w.path) {
            Ok(b) => {
                let h = &b.coroots()[w.vertex];
                r.coroot = if r.doubled {
                    h.iter().map(|x| x / &Scalar::int(2)).collect()
                } else {
                    h.clone()
                };
            }
            Err(_) => {
                return PrincipalRoots {
                    roots,
                    status: OrbitStatus::Truncated { depth: max_depth },
                    lifted: true,
                }
            }
        }
    }
    PrincipalRoots {
        roots,
        status: lo.status,
        lifted: true,
    }
}
