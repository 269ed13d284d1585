//! Exact scalars: rationals, elements of a real quadratic field, and rational functions in `p`.

mod parse;
mod poly;

pub use parse::parse_scalar;
pub use poly::{Poly, RatFunc};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("mixed radicands sqrt({0}) and sqrt({1})")]
    MixedRadicands(BigInt, BigInt),
    #[error("sqrt(..) cannot be combined with the parameter p")]
    MixedDomains,
    #[error("radicand {0} is a perfect square")]
    SquareRadicand(BigInt),
    #[error("division by zero")]
    DivisionByZero,
    #[error("sign of a non-constant rational function is undefined")]
    SignUndefined,
}

/// Which field a scalar lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    Quad(BigInt),
    Func,
}

impl Domain {
    pub fn join(&self, o: &Domain) -> Result<Domain, ScalarError> {
        match (self, o) {
            (Domain::Rational, d) | (d, Domain::Rational) => Ok(d.clone()),
            (Domain::Quad(a), Domain::Quad(b)) if a == b => Ok(self.clone()),
            (Domain::Quad(a), Domain::Quad(b)) => {
                Err(ScalarError::MixedRadicands(a.clone(), b.clone()))
            }
            (Domain::Func, Domain::Func) => Ok(Domain::Func),
            _ => Err(ScalarError::MixedDomains),
        }
    }
}

/// `x + y*sqrt(d)` with `y != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad {
    d: BigInt,
    x: Rational,
    y: Rational,
}

impl Quad {
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }
    pub fn rational_part(&self) -> &Rational {
        &self.x
    }
    pub fn irrational_part(&self) -> &Rational {
        &self.y
    }
    fn norm(&self) -> Rational {
        &self.x * &self.x - &self.y * &self.y * Rational::from(self.d.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Quad(Quad),
    Func(RatFunc),
}

pub fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

impl Scalar {
    pub fn int(v: i64) -> Scalar {
        Scalar::Rat(Rational::from_integer(v.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::Rat(Rational::new(n.into(), d.into()))
    }

    pub fn zero() -> Scalar {
        Scalar::int(0)
    }

    pub fn one() -> Scalar {
        Scalar::int(1)
    }

    /// The formal parameter `p`.
    pub fn param() -> Scalar {
        Scalar::Func(
            RatFunc::reduce(Poly::x(), Poly::constant(Rational::one())).expect("p is not constant"),
        )
    }

    pub fn sqrt(d: BigInt) -> Result<Scalar, ScalarError> {
        Scalar::quad(d, Rational::zero(), Rational::one())
    }

    /// `x + y*sqrt(d)`, collapsing to a rational when `y = 0`.
    pub fn quad(d: BigInt, x: Rational, y: Rational) -> Result<Scalar, ScalarError> {
        if is_square(&d) || d.is_negative() {
            return Err(ScalarError::SquareRadicand(d));
        }
        Ok(Scalar::quad_unchecked(d, x, y))
    }

    fn quad_unchecked(d: BigInt, x: Rational, y: Rational) -> Scalar {
        if y.is_zero() {
            Scalar::Rat(x)
        } else {
            Scalar::Quad(Quad { d, x, y })
        }
    }

    pub fn from_ratfunc(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match RatFunc::reduce(num, den) {
            Ok(f) => Scalar::Func(f),
            Err(c) => Scalar::Rat(c),
        })
    }

    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Rat(_) => Domain::Rational,
            Scalar::Quad(q) => Domain::Quad(q.d.clone()),
            Scalar::Func(_) => Domain::Func,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rat(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|v| i64::try_from(v).ok())
    }

    pub fn is_nonpositive_integer(&self) -> bool {
        self.as_integer().is_some_and(|v| !v.is_positive())
    }

    pub fn is_nonnegative_integer(&self) -> bool {
        self.as_integer().is_some_and(|v| !v.is_negative())
    }

    pub fn is_in_even_nonpositive_integers(&self) -> bool {
        self.as_integer()
            .is_some_and(|v| !v.is_positive() && v.is_even())
    }

    /// Membership in `2^parity * Z_{>=0}`.
    pub fn in_nonneg_lattice(&self, parity: u8) -> bool {
        self.as_integer()
            .is_some_and(|v| !v.is_negative() && (parity == 0 || v.is_even()))
    }

    pub fn is_parametric(&self) -> bool {
        matches!(self, Scalar::Func(_))
    }

    /// Exact sign under the embedding `sqrt(d) > 0`.
    pub fn sign(&self) -> Result<i8, ScalarError> {
        match self {
            Scalar::Rat(r) => Ok(rat_sign(r)),
            Scalar::Quad(q) => {
                let sx = rat_sign(&q.x);
                let sy = rat_sign(&q.y);
                if sx == 0 || sx == sy {
                    return Ok(if sx == 0 { sy } else { sx });
                }
                let x2 = &q.x * &q.x;
                let y2d = &q.y * &q.y * Rational::from(q.d.clone());
                Ok(if x2 > y2d { sx } else { sy })
            }
            Scalar::Func(_) => Err(ScalarError::SignUndefined),
        }
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.domain().join(&o.domain())?;
        Ok(match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Rat(r), Scalar::Quad(q)) | (Scalar::Quad(q), Scalar::Rat(r)) => {
                Scalar::quad_unchecked(q.d.clone(), &q.x + r, q.y.clone())
            }
            (Scalar::Quad(a), Scalar::Quad(b)) => {
                Scalar::quad_unchecked(a.d.clone(), &a.x + &b.x, &a.y + &b.y)
            }
            _ => {
                let (an, ad) = self.as_fraction();
                let (bn, bd) = o.as_fraction();
                Scalar::from_ratfunc(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))?
            }
        })
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&o.neg_ref())
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.domain().join(&o.domain())?;
        Ok(match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(r), Scalar::Quad(q)) | (Scalar::Quad(q), Scalar::Rat(r)) => {
                Scalar::quad_unchecked(q.d.clone(), &q.x * r, &q.y * r)
            }
            (Scalar::Quad(a), Scalar::Quad(b)) => {
                let d = Rational::from(a.d.clone());
                Scalar::quad_unchecked(
                    a.d.clone(),
                    &a.x * &b.x + &a.y * &b.y * d,
                    &a.x * &b.y + &a.y * &b.x,
                )
            }
            _ => {
                let (an, ad) = self.as_fraction();
                let (bn, bd) = o.as_fraction();
                Scalar::from_ratfunc(an.mul(&bn), ad.mul(&bd))?
            }
        })
    }

    pub fn try_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Quad(q) => {
                let n = q.norm();
                Scalar::quad_unchecked(q.d.clone(), &q.x / &n, -&q.y / &n)
            }
            Scalar::Func(f) => {
                Scalar::from_ratfunc(f.denominator().clone(), f.numerator().clone())?
            }
        })
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.domain().join(&o.domain())?;
        self.try_mul(&o.try_inv()?)
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Quad(q) => Scalar::quad_unchecked(q.d.clone(), -&q.x, -&q.y),
            Scalar::Func(f) => Scalar::Func(
                RatFunc::reduce(f.numerator().neg(), f.denominator().clone())
                    .expect("non-constant"),
            ),
        }
    }

    fn as_fraction(&self) -> (Poly, Poly) {
        match self {
            Scalar::Rat(r) => (Poly::constant(r.clone()), Poly::constant(Rational::one())),
            Scalar::Func(f) => (f.numerator().clone(), f.denominator().clone()),
            Scalar::Quad(_) => unreachable!("quadratic scalars have no polynomial form"),
        }
    }

    /// Substitute `p -> p + k`; non-parametric values are unchanged.
    pub fn shift_param(&self, k: &Rational) -> Scalar {
        match self {
            Scalar::Func(f) => {
                Scalar::from_ratfunc(f.numerator().shift(k), f.denominator().shift(k))
                    .expect("shift keeps denominator nonzero")
            }
            s => s.clone(),
        }
    }

    /// Specialize `p := v`.
    pub fn eval_param(&self, v: &Rational) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Func(f) => {
                let d = f.denominator().eval(v);
                if d.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(Scalar::Rat(f.numerator().eval(v) / d))
            }
            s => Ok(s.clone()),
        }
    }

    /// Rational roots of numerator and denominator (empty for non-parametric values).
    pub fn critical_values(&self) -> Vec<Rational> {
        match self {
            Scalar::Func(f) => {
                let mut v = f.numerator().rational_roots();
                v.extend(f.denominator().rational_roots());
                v.sort();
                v.dedup();
                v
            }
            _ => Vec::new(),
        }
    }

    /// Approximate value for human-facing output only.
    pub fn to_f64(&self) -> Option<f64> {
        use num_traits::ToPrimitive;
        match self {
            Scalar::Rat(r) => r.to_f64(),
            Scalar::Quad(q) => Some(q.x.to_f64()? + q.y.to_f64()? * q.d.to_f64()?.sqrt()),
            Scalar::Func(_) => None,
        }
    }
}

fn rat_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

// Operator forms panic on incompatible domains or division by zero; diagram
// construction validates domains up front so internal arithmetic cannot mix them.
macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
                    .unwrap_or_else(|e| panic!("scalar {}: {e}", stringify!($m)))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_int_poly(c: &[BigInt]) -> (String, usize) {
    let mut out = String::new();
    let mut terms = 0;
    for (k, v) in c.iter().enumerate().rev() {
        if v.is_zero() {
            continue;
        }
        if v.is_negative() {
            out.push('-');
        } else if terms > 0 {
            out.push('+');
        }
        let a = v.abs();
        let mono = vec!["p"; k].join("*");
        if k == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
        terms += 1;
    }
    (out, terms)
}

fn fmt_ratfunc(f: &RatFunc) -> String {
    let all: Vec<&Rational> = f
        .numerator()
        .coeffs()
        .iter()
        .chain(f.denominator().coeffs())
        .collect();
    let l = all.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut n: Vec<BigInt> = f
        .numerator()
        .coeffs()
        .iter()
        .map(|c| (c * &l).to_integer())
        .collect();
    let mut d: Vec<BigInt> = f
        .denominator()
        .coeffs()
        .iter()
        .map(|c| (c * &l).to_integer())
        .collect();
    let g = n
        .iter()
        .chain(d.iter())
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    for c in n.iter_mut().chain(d.iter_mut()) {
        *c /= &g;
    }
    let (ns, nt) = fmt_int_poly(&n);
    let (ds, dt) = fmt_int_poly(&d);
    if d.len() == 1 && d[0].is_one() {
        return ns;
    }
    let ns = if nt > 1 { format!("({ns})") } else { ns };
    let atom = dt == 1 && (d.len() == 1 || (d.len() == 2 && d[1].is_one() && d[0].is_zero()));
    let ds = if atom { ds } else { format!("({ds})") };
    format!("{ns}/{ds}")
}

fn fmt_quad(q: &Quad) -> String {
    let l = q.x.denom().lcm(q.y.denom());
    let x = (&q.x * Rational::from(l.clone())).to_integer();
    let y = (&q.y * Rational::from(l.clone())).to_integer();
    let root = if y.abs().is_one() {
        format!("sqrt({})", q.d)
    } else {
        format!("{}*sqrt({})", y.abs(), q.d)
    };
    let body = if x.is_zero() {
        format!("{}{root}", if y.is_negative() { "-" } else { "" })
    } else {
        format!("{x}{}{root}", if y.is_negative() { "-" } else { "+" })
    };
    if l.is_one() {
        body
    } else if x.is_zero() {
        format!("{body}/{l}")
    } else {
        format!("({body})/{l}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scalar::Rat(r) => fmt_rational(r),
            Scalar::Quad(q) => fmt_quad(q),
            Scalar::Func(r) => fmt_ratfunc(r),
        };
        f.write_str(&s)
    }
}

/// Canonical text form; `parse_scalar(&format_scalar(s)) == s`.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn format_examples() {
        assert_eq!(s("-1/2"), Scalar::ratio(-1, 2));
        assert_eq!(s("1/2") + s("1/3"), Scalar::ratio(5, 6));
        assert_eq!(
            s("(-9+sqrt(21))/10") * s("(-9-sqrt(21))/10"),
            Scalar::ratio(3, 5)
        );
        assert_eq!(format_scalar(&s("(-9+sqrt(21))/10")), "(-9+sqrt(21))/10");
        assert_eq!(format_scalar(&s("p+1")), "p+1");
        assert_eq!(format_scalar(&(s("p+1") / s("p"))), "(p+1)/p");
        assert_eq!(format_scalar(&Scalar::ratio(-1, 2)), "-1/2");
    }

    #[test]
    fn plus_root_solves_quadratic() {
        let a = s("(-9+sqrt(21))/10");
        let f = Scalar::int(5) * &a * &a + Scalar::int(9) * &a + Scalar::int(3);
        assert!(f.is_zero());
    }

    #[test]
    fn signs() {
        assert_eq!(s("-3/4").sign().unwrap(), -1);
        assert_eq!(s("(-9+sqrt(21))/10").sign().unwrap(), -1);
        assert_eq!(s("(sqrt(21)-3)/2").sign().unwrap(), 1);
        assert_eq!(s("5-2*sqrt(6)").sign().unwrap(), 1);
        assert_eq!(s("2*sqrt(6)-5").sign().unwrap(), -1);
        assert_eq!(s("p").sign(), Err(ScalarError::SignUndefined));
    }

    #[test]
    fn integers() {
        assert_eq!(s("-2").as_integer(), Some(BigInt::from(-2)));
        assert_eq!(s("(-9+sqrt(21))/10").as_integer(), None);
        assert!(!s("-3").is_in_even_nonpositive_integers());
        assert!(s("-4").is_in_even_nonpositive_integers());
        assert_eq!(s("(p*p-1)/(p-1)-p").as_integer(), Some(BigInt::from(1)));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            parse_scalar("sqrt(2)+sqrt(3)"),
            Err(ScalarError::MixedRadicands(..))
        ));
        assert_eq!(parse_scalar("sqrt(2)*p"), Err(ScalarError::MixedDomains));
        assert!(matches!(
            parse_scalar("sqrt(9)"),
            Err(ScalarError::SquareRadicand(_))
        ));
        assert_eq!(parse_scalar("1/(2-2)"), Err(ScalarError::DivisionByZero));
        assert!(matches!(
            parse_scalar("1+"),
            Err(ScalarError::Syntax { .. })
        ));
    }

    #[test]
    fn quad_as_integer_matches_window() {
        for t in ["sqrt(2)-sqrt(2)+3", "(1+sqrt(5))/2", "sqrt(8)*sqrt(8)/4"] {
            let v = s(t);
            let hit = (-20..=20).find(|k| (&v - &Scalar::int(*k)).is_zero());
            assert_eq!(v.as_i64(), hit);
        }
    }

    fn rational() -> impl Strategy<Value = Scalar> {
        (-12i64..12, 1i64..7).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    fn quad() -> impl Strategy<Value = Scalar> {
        (rational(), rational()).prop_map(|(x, y)| &x + &(&y * &Scalar::sqrt(21.into()).unwrap()))
    }

    fn func() -> impl Strategy<Value = Scalar> {
        (
            proptest::collection::vec(-4i64..5, 1..4),
            proptest::collection::vec(-4i64..5, 1..3),
        )
            .prop_filter_map("nonzero denominator", |(n, d)| {
                let np = Poly::from_coeffs(
                    n.into_iter()
                        .map(|v| Rational::from_integer(v.into()))
                        .collect(),
                );
                let dp = Poly::from_coeffs(
                    d.into_iter()
                        .map(|v| Rational::from_integer(v.into()))
                        .collect(),
                );
                Scalar::from_ratfunc(np, dp).ok()
            })
    }

    fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        assert_eq!(a + b, b + a);
        let a2 = a.clone();
        assert!((a - &a2).is_zero());
        if !a.is_zero() {
            assert!((a / &a2).is_one());
        }
    }

    proptest! {
        #[test]
        fn rational_field(a in rational(), b in rational(), c in rational()) {
            field_axioms(&a, &b, &c);
        }

        #[test]
        fn quad_field(a in quad(), b in quad(), c in quad()) {
            field_axioms(&a, &b, &c);
        }

        #[test]
        fn func_field(a in func(), b in func(), c in func()) {
            field_axioms(&a, &b, &c);
        }

        #[test]
        fn roundtrip(a in quad(), f in func(), r in rational()) {
            for v in [a, f, r] {
                prop_assert_eq!(parse_scalar(&format_scalar(&v)).unwrap(), v);
            }
        }

        #[test]
        fn sign_multiplicative(a in quad(), b in quad()) {
            prop_assert_eq!((&a * &b).sign().unwrap(), a.sign().unwrap() * b.sign().unwrap());
        }

        #[test]
        fn sign_agrees_with_float(a in quad()) {
            let f = a.to_f64().unwrap();
            let expect = if a.is_zero() { 0 } else if f > 0.0 { 1 } else { -1 };
            prop_assert_eq!(a.sign().unwrap(), expect);
        }
    }
}
