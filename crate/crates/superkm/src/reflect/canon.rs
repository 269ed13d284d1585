use super::ReflectError;
use crate::cartan::Diagram;
use crate::scalars::{Rational, Scalar};
use num_traits::{Signed, ToPrimitive};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CanonMode {
    Exact,
    ModShift,
}

pub const MAX_CANON_VERTICES: usize = 12;

/// Permutation-invariant encoding of a normalized diagram.
///
/// `Exact` minimizes the serialized (parity, entries) over all relabelings,
/// re-normalizing isotropic rows by their earliest placed nonzero entry.
/// `ModShift` first moves the parameter so that the smallest rational critical
/// value of the row ratios lies in `[0, 1)`.
pub fn canonical_form(d: &Diagram, mode: CanonMode) -> Result<String, ReflectError> {
    match mode {
        CanonMode::Exact => Ok(canonical_exact(d)),
        CanonMode::ModShift if !d.is_parametric() => Err(ReflectError::NotParametric),
        CanonMode::ModShift => Ok(canonical_mod_shift(d)),
    }
}

pub(crate) fn canonical_mod_shift(d: &Diagram) -> String {
    if !d.is_parametric() {
        return canonical_exact(d);
    }
    let crit = critical_values(d);
    match crit.first() {
        Some(r) => canonical_exact(&d.shift_param(&Rational::from(r.floor().to_integer()))),
        None => {
            let bound = 1 + window_bound(d);
            (-bound..=bound)
                .map(|k| canonical_exact(&d.shift_param(&Rational::from_integer(k.into()))))
                .min()
                .expect("nonempty window")
        }
    }
}

/// Rational critical values of all row-scaling-invariant quantities.
pub(crate) fn critical_values(d: &Diagram) -> Vec<Rational> {
    let n = d.n();
    let mut out = Vec::new();
    for i in 0..n {
        if !d.entry(i, i).is_zero() {
            for j in 0..n {
                out.extend(d.entry(i, j).critical_values());
            }
        } else {
            let nz: Vec<&Scalar> = d.matrix()[i].iter().filter(|v| !v.is_zero()).collect();
            for x in &nz {
                for y in &nz {
                    out.extend((*x / *y).critical_values());
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn window_bound(d: &Diagram) -> i64 {
    let mut m = 0i64;
    for v in d.matrix().iter().flatten() {
        if let Scalar::Func(f) = v {
            for c in [
                f.numerator().constant_term(),
                f.denominator().constant_term(),
            ] {
                m = m.max(c.abs().ceil().to_integer().to_i64().unwrap_or(i64::MAX / 4));
            }
        }
    }
    m.min(64)
}

struct Search<'a> {
    d: &'a Diagram,
    n: usize,
    /// formatted row `v` scaled to make entry `(v, u)` equal to 1
    anchored: HashMap<(usize, usize), Vec<String>>,
    plain: Vec<Vec<String>>,
    perm: Vec<usize>,
    used: Vec<bool>,
    anchor: Vec<Option<usize>>,
    cur: Vec<String>,
    best: Option<Vec<String>>,
}

impl Search<'_> {
    fn token(&self, v: usize, w: usize) -> String {
        if self.d.entry(v, v).is_zero() {
            match self.anchor[v] {
                Some(u) => self.anchored[&(v, u)][w].clone(),
                None => {
                    debug_assert!(self.d.entry(v, w).is_zero());
                    "0".to_string()
                }
            }
        } else {
            self.plain[v][w].clone()
        }
    }

    fn dfs(&mut self) {
        let r = self.perm.len();
        if r == self.n {
            if self.best.as_ref().is_none_or(|b| self.cur < *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mark = self.cur.len();
            let mut set_anchor = Vec::new();
            // row v anchors on its earliest placed nonzero column
            if self.d.entry(v, v).is_zero() {
                if let Some(&u) = self.perm.iter().find(|&&u| !self.d.entry(v, u).is_zero()) {
                    self.anchor[v] = Some(u);
                    set_anchor.push(v);
                }
            }
            self.cur.push(self.d.parity(v).to_string());
            self.cur.push(self.plain[v][v].clone());
            for s in 0..r {
                let u = self.perm[s];
                let t = self.token(v, u);
                self.cur.push(t);
                if self.d.entry(u, u).is_zero()
                    && self.anchor[u].is_none()
                    && !self.d.entry(u, v).is_zero()
                {
                    self.anchor[u] = Some(v);
                    set_anchor.push(u);
                }
                let t = self.token(u, v);
                self.cur.push(t);
            }
            let prune = match &self.best {
                Some(b) => self.cur[..] > b[..self.cur.len()],
                None => false,
            };
            if !prune {
                self.perm.push(v);
                self.used[v] = true;
                self.dfs();
                self.used[v] = false;
                self.perm.pop();
            }
            for x in set_anchor {
                self.anchor[x] = None;
            }
            self.cur.truncate(mark);
        }
    }
}

pub(crate) fn canonical_exact(d: &Diagram) -> String {
    let n = d.n();
    assert!(
        n <= MAX_CANON_VERTICES,
        "canonical form supports at most {MAX_CANON_VERTICES} vertices"
    );
    let plain: Vec<Vec<String>> = d
        .matrix()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect();
    let mut anchored = HashMap::new();
    for (v, prow) in plain.iter().enumerate() {
        if !d.entry(v, v).is_zero() {
            continue;
        }
        for u in 0..n {
            let a = d.entry(v, u);
            if a.is_zero() {
                continue;
            }
            let row = if a.is_one() {
                prow.clone()
            } else {
                d.matrix()[v].iter().map(|x| (x / a).to_string()).collect()
            };
            anchored.insert((v, u), row);
        }
    }
    let mut s = Search {
        d,
        n,
        anchored,
        plain,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        anchor: vec![None; n],
        cur: Vec::new(),
        best: None,
    };
    s.dfs();
    format!(
        "{n}|{}",
        s.best.expect("at least one permutation").join(",")
    )
}
