//! Cartan matrix data: normalization, generalized Cartan conditions, symmetrizability, subdiagrams.

mod io;

pub use io::{read_diagram, write_diagram, DiagramFile, FormatError};

use crate::scalars::{Domain, Rational, Scalar, ScalarError};
use std::collections::VecDeque;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("empty matrix")]
    Empty,
    #[error("parity has length {got}, expected {expected}")]
    ParityLength { got: usize, expected: usize },
    #[error("parity entries must be 0 or 1")]
    BadParity,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("vertex set is empty or out of range")]
    BadSubset,
    #[error("vertex {0} is not isotropic")]
    NotIsotropic(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    EvenSl2,
    OddOsp,
    Isotropic,
    Heisenberg,
}

impl VertexKind {
    pub fn symbol(self) -> &'static str {
        match self {
            VertexKind::EvenSl2 => "○",
            VertexKind::OddOsp => "●",
            VertexKind::Isotropic => "⊗",
            VertexKind::Heisenberg => "□",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::EvenSl2 => "even",
            VertexKind::OddOsp => "odd",
            VertexKind::Isotropic => "isotropic",
            VertexKind::Heisenberg => "heisenberg",
        }
    }
}

/// A normalized matrix `a_ij = alpha_j(h_i)` with parities. Indices are 0-based.
/// Equality ignores the name.
#[derive(Debug, Clone)]
pub struct Diagram {
    name: Option<String>,
    a: Vec<Vec<Scalar>>,
    parity: Vec<u8>,
}

impl PartialEq for Diagram {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.parity == o.parity
    }
}

impl Eq for Diagram {}

impl std::hash::Hash for Diagram {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.a.hash(h);
        self.parity.hash(h);
    }
}

/// Rescale rows in place; returns the factor applied to each row.
fn normalize_rows(a: &mut [Vec<Scalar>]) -> Vec<Scalar> {
    let n = a.len();
    let mut scales = Vec::with_capacity(n);
    for (i, row) in a.iter_mut().enumerate() {
        let s = if !row[i].is_zero() {
            Scalar::int(2) / &row[i]
        } else if let Some(first) = row.iter().find(|v| !v.is_zero()) {
            first.try_inv().expect("nonzero")
        } else {
            Scalar::one()
        };
        if !s.is_one() {
            for v in row.iter_mut() {
                *v = &*v * &s;
            }
        }
        scales.push(s);
    }
    scales
}

impl Diagram {
    /// Normalize a raw matrix. Also returns the row scale factors.
    pub fn normalize_with_scales(
        matrix: Vec<Vec<Scalar>>,
        parity: Vec<u8>,
    ) -> Result<(Diagram, Vec<Scalar>), CartanError> {
        let n = matrix.len();
        if n == 0 {
            return Err(CartanError::Empty);
        }
        if matrix.iter().any(|r| r.len() != n) {
            return Err(CartanError::NotSquare);
        }
        if parity.len() != n {
            return Err(CartanError::ParityLength {
                got: parity.len(),
                expected: n,
            });
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(CartanError::BadParity);
        }
        let mut dom = Domain::Rational;
        for v in matrix.iter().flatten() {
            dom = dom.join(&v.domain())?;
        }
        let mut a = matrix;
        let scales = normalize_rows(&mut a);
        Ok((
            Diagram {
                name: None,
                a,
                parity,
            },
            scales,
        ))
    }

    pub fn normalize(matrix: Vec<Vec<Scalar>>, parity: Vec<u8>) -> Result<Diagram, CartanError> {
        Ok(Self::normalize_with_scales(matrix, parity)?.0)
    }

    /// Build from integer entries; convenient for fixtures and tests.
    pub fn from_ints(rows: &[&[i64]], parity: &[u8]) -> Result<Diagram, CartanError> {
        let m = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
            .collect();
        Diagram::normalize(m, parity.to_vec())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.a
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    pub fn domain(&self) -> Domain {
        self.a.iter().flatten().fold(Domain::Rational, |d, v| {
            d.join(&v.domain()).expect("validated at construction")
        })
    }

    pub fn is_parametric(&self) -> bool {
        self.domain() == Domain::Func
    }

    pub fn kind(&self, i: usize) -> VertexKind {
        match (self.a[i][i].is_zero(), self.parity[i]) {
            (false, 0) => VertexKind::EvenSl2,
            (false, _) => VertexKind::OddOsp,
            (true, 1) => VertexKind::Isotropic,
            (true, _) => VertexKind::Heisenberg,
        }
    }

    pub fn kinds(&self) -> Vec<VertexKind> {
        (0..self.n()).map(|i| self.kind(i)).collect()
    }

    pub fn is_isotropic(&self, i: usize) -> bool {
        self.kind(i) == VertexKind::Isotropic
    }

    pub fn isotropic_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.is_isotropic(i)).collect()
    }

    pub fn zero_rows(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.a[i].iter().all(Scalar::is_zero))
            .collect()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && (!self.a[i][j].is_zero() || !self.a[j][i].is_zero())
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.adjacent(i, j)).collect()
    }

    /// `a_ij = 0 <=> a_ji = 0` for all `j`.
    pub fn is_regular_vertex(&self, i: usize) -> bool {
        (0..self.n()).all(|j| self.a[i][j].is_zero() == self.a[j][i].is_zero())
    }

    pub fn is_connected(&self) -> bool {
        components(self).len() == 1
    }

    /// Relabel: vertex `perm[r]` of `self` becomes vertex `r`, then re-normalize.
    pub fn permute(&self, perm: &[usize]) -> Diagram {
        let m = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.a[i][j].clone()).collect())
            .collect();
        let p = perm.iter().map(|&i| self.parity[i]).collect();
        let mut d = Diagram::normalize(m, p).expect("permutation of a valid diagram");
        d.name = self.name.clone();
        d
    }

    pub fn transpose(&self) -> Diagram {
        let n = self.n();
        let m = (0..n)
            .map(|i| (0..n).map(|j| self.a[j][i].clone()).collect())
            .collect();
        Diagram::normalize(m, self.parity.clone()).expect("transpose of a valid diagram")
    }

    pub fn map_entries(
        &self,
        f: impl Fn(&Scalar) -> Result<Scalar, ScalarError>,
    ) -> Result<Diagram, CartanError> {
        let m = self
            .a
            .iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let mut d = Diagram::normalize(m, self.parity.clone())?;
        d.name = self.name.clone();
        Ok(d)
    }

    pub fn shift_param(&self, k: &Rational) -> Diagram {
        self.map_entries(|v| Ok(v.shift_param(k)))
            .expect("shift keeps entries valid")
    }

    pub fn eval_param(&self, v: &Rational) -> Result<Diagram, CartanError> {
        self.map_entries(|s| s.eval_param(v))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.a.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{} [{}]", self.kind(i).symbol(), cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GcmRule {
    /// `a_ii = 0` and `p(i) = 0` force a zero row.
    ZeroRow,
    /// `a_ii = 2` forces `a_ij` in `2^p(i) Z_{<=0}`.
    IntegralRow,
    /// `a_ij = 0` forces `a_ji = 0`; reported at the nonzero position.
    Symmetric,
}

impl GcmRule {
    pub fn label(self) -> &'static str {
        match self {
            GcmRule::ZeroRow => "1",
            GcmRule::IntegralRow => "2",
            GcmRule::Symmetric => "3'",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub rule: GcmRule,
    pub i: usize,
    pub j: usize,
}

/// All violations of the generalized Cartan conditions; empty means ok.
pub fn is_generalized_cartan(d: &Diagram) -> Vec<Violation> {
    let n = d.n();
    let mut out = Vec::new();
    for i in 0..n {
        let diag_zero = d.entry(i, i).is_zero();
        for j in 0..n {
            if j == i {
                continue;
            }
            let v = d.entry(i, j);
            if diag_zero && d.parity(i) == 0 && !v.is_zero() {
                out.push(Violation {
                    rule: GcmRule::ZeroRow,
                    i,
                    j,
                });
            }
            if !diag_zero {
                let ok = if d.parity(i) == 0 {
                    v.is_nonpositive_integer()
                } else {
                    v.is_in_even_nonpositive_integers()
                };
                if !ok {
                    out.push(Violation {
                        rule: GcmRule::IntegralRow,
                        i,
                        j,
                    });
                }
            }
            if !v.is_zero() && d.entry(j, i).is_zero() {
                out.push(Violation {
                    rule: GcmRule::Symmetric,
                    i,
                    j,
                });
            }
        }
    }
    out
}

/// Diagonal `D` with `D A` symmetric, if one exists.
pub fn is_symmetrizable(d: &Diagram) -> Option<Vec<Scalar>> {
    let n = d.n();
    let mut w: Vec<Option<Scalar>> = vec![None; n];
    for comp in components(d) {
        w[comp[0]] = Some(Scalar::one());
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            let di = w[i].clone().expect("visited");
            for j in d.neighbors(i) {
                let (aij, aji) = (d.entry(i, j), d.entry(j, i));
                if aij.is_zero() || aji.is_zero() {
                    return None;
                }
                let dj = &(&di * aij) / aji;
                match &w[j] {
                    Some(prev) if *prev != dj => return None,
                    Some(_) => {}
                    None => {
                        w[j] = Some(dj);
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    Some(
        w.into_iter()
            .map(|v| v.expect("every vertex lies in a component"))
            .collect(),
    )
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(d: &Diagram) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in d.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Full subdiagram on `j` (in the given order), re-normalized.
pub fn subdiagram(d: &Diagram, j: &[usize]) -> Result<Diagram, CartanError> {
    if j.is_empty() || j.iter().any(|&v| v >= d.n()) {
        return Err(CartanError::BadSubset);
    }
    let m = j
        .iter()
        .map(|&r| j.iter().map(|&c| d.entry(r, c).clone()).collect())
        .collect();
    Diagram::normalize(m, j.iter().map(|&v| d.parity(v)).collect())
}

/// Ratios `a_ji/a_jk` and `a_jk/a_ji` for each unordered pair of neighbours `i < k` of `j`.
pub fn isotropic_ratios(d: &Diagram, j: usize) -> Result<Vec<(usize, usize, Scalar)>, CartanError> {
    if j >= d.n() || !d.is_isotropic(j) {
        return Err(CartanError::NotIsotropic(j));
    }
    let nb: Vec<usize> = (0..d.n())
        .filter(|&i| i != j && !d.entry(j, i).is_zero())
        .collect();
    let mut out = Vec::new();
    for (x, &i) in nb.iter().enumerate() {
        for &k in &nb[x + 1..] {
            out.push((i, k, d.entry(j, i) / d.entry(j, k)));
            out.push((k, i, d.entry(j, k) / d.entry(j, i)));
        }
    }
    Ok(out)
}
