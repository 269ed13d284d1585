use super::IntegrableError;
use crate::cartan::Diagram;
use crate::scalars::{parse_scalar, Scalar};
use std::fmt;

/// Highest weight `lambda`, stored as `lambda(h_i)` on the coroots of the
/// diagram it was given for.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight {
    pub values: Vec<Scalar>,
    /// Adjoin the Weyl vector `rho(h_i) = a_ii / 2` when testing typicality.
    pub rho: bool,
}

impl Weight {
    pub fn new(values: Vec<Scalar>) -> Weight {
        Weight { values, rho: false }
    }

    pub fn zero(n: usize) -> Weight {
        Weight::new(vec![Scalar::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Weight {
        Weight::new(v.iter().map(|&x| Scalar::int(x)).collect())
    }

    /// Comma-separated scalar expressions; commas inside parentheses are kept.
    pub fn parse(text: &str) -> Result<Weight, IntegrableError> {
        let mut parts = Vec::new();
        let (mut depth, mut start) = (0i32, 0);
        for (i, ch) in text.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    parts.push(&text[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(&text[start..]);
        let values = parts
            .iter()
            .map(|p| {
                parse_scalar(p.trim())
                    .map_err(|e| IntegrableError::Weight(format!("\"{}\": {e}", p.trim())))
            })
            .collect::<Result<_, _>>()?;
        Ok(Weight::new(values))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_parametric(&self) -> bool {
        self.values.iter().any(Scalar::is_parametric)
    }

    pub fn check_len(&self, d: &Diagram) -> Result<(), IntegrableError> {
        if self.len() != d.n() {
            return Err(IntegrableError::Length {
                expected: d.n(),
                got: self.len(),
            });
        }
        Ok(())
    }

    /// `lambda(h)` for `h = sum_l c_l h_l`.
    pub fn eval(&self, coroot: &[Scalar]) -> Scalar {
        coroot
            .iter()
            .zip(&self.values)
            .filter(|(c, _)| !c.is_zero())
            .fold(Scalar::zero(), |acc, (c, v)| &acc + &(c * v))
    }

    /// Values on coroots rescaled by `scales` (row `i` of the matrix multiplied by `scales[i]`).
    pub fn rescaled(&self, scales: &[Scalar]) -> Weight {
        Weight {
            values: self.values.iter().zip(scales).map(|(v, s)| v * s).collect(),
            rho: self.rho,
        }
    }

    /// `lambda + rho` when the flag is set.
    pub fn shifted_by_rho(&self, d: &Diagram) -> Weight {
        if !self.rho {
            return self.clone();
        }
        let half = Scalar::ratio(1, 2);
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| v + &(&half * d.entry(i, i)))
            .collect();
        Weight { values, rho: false }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
