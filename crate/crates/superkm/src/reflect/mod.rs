//! Odd and even reflections with root/coroot bookkeeping, canonical forms, orbits, principal roots.

pub(crate) mod canon;
mod drag;
mod lift;
mod orbit;
mod principal;

pub use canon::{canonical_form, CanonMode};
pub use drag::drag_isotropic;
pub use lift::{s_shape_lift, SLift};
pub use orbit::{
    orbit, EdgeOutcome, Orbit, OrbitEdge, OrbitMember, OrbitStatus, DEFAULT_MAX_DEPTH,
};
pub use principal::{
    principal_roots, principal_roots_of_orbit, PrincipalRoot, PrincipalRoots, Witness,
};

use crate::cartan::Diagram;
use crate::scalars::Scalar;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReflectError {
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("vertex {0} is not isotropic")]
    NotIsotropic(usize),
    #[error("isotropic vertex {0} is not regular")]
    NotRegular(usize),
    #[error("vertex {0} is isotropic; even reflection needs a_kk != 0")]
    Isotropic(usize),
    #[error("row {0} is not integral as a generalized Cartan row")]
    NotIntegral(usize),
    #[error("mod_shift canonical form needs a parametric diagram")]
    NotParametric,
    #[error("{0}")]
    Hypothesis(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub vertex: usize,
    pub kind: StepKind,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            StepKind::Odd => "r",
            StepKind::Even => "s",
        };
        write!(f, "{tag}{}", self.vertex + 1)
    }
}

/// A base reached from `origin`: roots in the original simple-root basis,
/// coroots in the original coroot basis.
#[derive(Debug, Clone)]
pub struct Base {
    origin: Arc<Diagram>,
    diagram: Diagram,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<Scalar>>,
    path: Vec<Step>,
}

fn unit_scalars(n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect()
}

fn axpy(x: &[Scalar], a: &Scalar, b: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    x.iter().zip(b).map(|(u, v)| &(a * u) + &(c * v)).collect()
}

impl Base {
    pub fn new(d: &Diagram) -> Base {
        let n = d.n();
        Base {
            origin: Arc::new(d.clone()),
            diagram: d.clone(),
            roots: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
            coroots: (0..n).map(|i| unit_scalars(n, i)).collect(),
            path: Vec::new(),
        }
    }

    pub fn origin(&self) -> &Diagram {
        &self.origin
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<Scalar>] {
        &self.coroots
    }

    pub fn path(&self) -> &[Step] {
        &self.path
    }

    /// `alpha(h)` for a root given in the original basis and a coroot in the original basis.
    pub fn pairing(&self, root: &[i64], coroot: &[Scalar]) -> Scalar {
        let n = self.origin.n();
        let mut acc = Scalar::zero();
        for (l, hl) in coroot.iter().enumerate() {
            if hl.is_zero() {
                continue;
            }
            let mut s = Scalar::zero();
            for (j, &rj) in root.iter().enumerate().take(n) {
                if rj != 0 {
                    s = &s + &(&Scalar::int(rj) * self.origin.entry(l, j));
                }
            }
            acc = &acc + &(hl * &s);
        }
        acc
    }

    /// `coroots * A_origin * roots^T == A'` entrywise.
    pub fn consistency_holds(&self) -> bool {
        let n = self.diagram.n();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.pairing(&self.roots[j], &self.coroots[i]) == *self.diagram.entry(i, j)
            })
        })
    }

    /// Parity of a root vector against the original parities.
    pub fn root_parity(&self, root: &[i64]) -> u8 {
        let s: i64 = root
            .iter()
            .enumerate()
            .map(|(j, &r)| r * i64::from(self.origin.parity(j)))
            .sum();
        s.rem_euclid(2) as u8
    }

    pub fn odd_reflect(&self, k: usize) -> Result<Base, ReflectError> {
        odd_reflect(self, k)
    }

    pub fn even_reflect(&self, k: usize) -> Result<Base, ReflectError> {
        even_reflect(self, k)
    }

    pub fn apply(&self, s: Step) -> Result<Base, ReflectError> {
        match s.kind {
            StepKind::Odd => odd_reflect(self, s.vertex),
            StepKind::Even => even_reflect(self, s.vertex),
        }
    }

    /// Apply `path` starting from this base.
    pub fn replay(&self, path: &[Step]) -> Result<Base, ReflectError> {
        path.iter().try_fold(self.clone(), |b, &s| b.apply(s))
    }
}

/// Odd reflection at a regular isotropic vertex `k`.
pub fn odd_reflect(b: &Base, k: usize) -> Result<Base, ReflectError> {
    let d = &b.diagram;
    let n = d.n();
    if k >= n {
        return Err(ReflectError::OutOfRange(k));
    }
    if !d.is_isotropic(k) {
        return Err(ReflectError::NotIsotropic(k));
    }
    if !d.is_regular_vertex(k) {
        return Err(ReflectError::NotRegular(k));
    }
    let a = |i: usize, j: usize| d.entry(i, j);
    let nb: Vec<bool> = (0..n).map(|i| i != k && !a(i, k).is_zero()).collect();
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = if i == k || !nb[i] {
                a(i, j).clone()
            } else if j == k {
                -(a(k, i) * a(i, k))
            } else if !nb[j] && j != i {
                a(k, i) * a(i, j)
            } else {
                &(&(a(k, i) * a(i, j)) + &(a(i, k) * a(k, j))) + &(a(k, i) * a(i, k))
            };
        }
    }
    let parity = (0..n)
        .map(|i| if nb[i] { 1 - d.parity(i) } else { d.parity(i) })
        .collect();
    let (nd, scales) =
        Diagram::normalize_with_scales(m, parity).expect("reflection preserves shape");
    let mut roots = b.roots.clone();
    let mut coroots = b.coroots.clone();
    for i in 0..n {
        if nb[i] {
            for (x, y) in roots[i].iter_mut().zip(&b.roots[k]) {
                *x += y;
            }
            coroots[i] = axpy(&b.coroots[k], a(i, k), &b.coroots[i], a(k, i));
        }
    }
    roots[k] = b.roots[k].iter().map(|v| -v).collect();
    for (h, s) in coroots.iter_mut().zip(&scales) {
        if !s.is_one() {
            for v in h.iter_mut() {
                *v = &*v * s;
            }
        }
    }
    let mut path = b.path.clone();
    path.push(Step {
        vertex: k,
        kind: StepKind::Odd,
    });
    Ok(Base {
        origin: b.origin.clone(),
        diagram: nd.with_name_of(d),
        roots,
        coroots,
        path,
    })
}

/// Even reflection at a non-isotropic vertex `k`; the matrix is unchanged.
pub fn even_reflect(b: &Base, k: usize) -> Result<Base, ReflectError> {
    let d = &b.diagram;
    let n = d.n();
    if k >= n {
        return Err(ReflectError::OutOfRange(k));
    }
    if d.entry(k, k).is_zero() {
        return Err(ReflectError::Isotropic(k));
    }
    let mut coef = Vec::with_capacity(n);
    for i in 0..n {
        let v = d.entry(k, i);
        let ok = i == k
            || if d.parity(k) == 0 {
                v.is_nonpositive_integer()
            } else {
                v.is_in_even_nonpositive_integers()
            };
        if !ok {
            return Err(ReflectError::NotIntegral(k));
        }
        coef.push(v.as_i64().ok_or(ReflectError::NotIntegral(k))?);
    }
    let roots = (0..n)
        .map(|i| {
            b.roots[i]
                .iter()
                .zip(&b.roots[k])
                .map(|(x, y)| x - coef[i] * y)
                .collect()
        })
        .collect();
    let hk = &b.coroots[k];
    let coroots = (0..n)
        .map(|i| {
            if i == k {
                hk.iter().map(|v| -v).collect()
            } else {
                axpy(&b.coroots[i], &Scalar::one(), hk, &-d.entry(i, k))
            }
        })
        .collect();
    let mut path = b.path.clone();
    path.push(Step {
        vertex: k,
        kind: StepKind::Even,
    });
    Ok(Base {
        origin: b.origin.clone(),
        diagram: d.clone(),
        roots,
        coroots,
        path,
    })
}

trait KeepName {
    fn with_name_of(self, other: &Diagram) -> Diagram;
}

impl KeepName for Diagram {
    fn with_name_of(self, other: &Diagram) -> Diagram {
        match other.name() {
            Some(n) => self.with_name(n),
            None => self,
        }
    }
}
