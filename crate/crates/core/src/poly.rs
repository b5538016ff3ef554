//! Dense univariate polynomials over `Z` and reduced rational functions.
//!
//! Polynomials print as terms in increasing power, e.g. `1 - 4*t^3 - 1*t^6`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial in `t`; `coeffs[d]` multiplies `t^d`.
///
/// The stored form never has trailing zeros, so the zero polynomial has an
/// empty coefficient vector and no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(alloc::vec![c.into()])
    }

    /// `c * t^power`.
    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); power + 1];
        coeffs[power] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^power`, zero past the degree.
    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Exponents with nonzero coefficients.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, _)| d)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `t^power`.
    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by `c`, which must divide each of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        }
    }

    /// Content removed, leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.coeffs.last().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Quotient `self / divisor` when it lies in `Z[t]`, otherwise `None`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let lead = divisor.leading_coeff()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return None;
        }
        if dd == 0 {
            if self.coeffs.iter().all(|c| (c % lead).is_zero()) {
                return Some(self.div_scalar_exact(lead));
            }
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut quot = alloc::vec![BigInt::zero(); qlen];
        for q in (0..qlen).rev() {
            let top = &rem[q + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (d, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[q + d] -= &c * dc;
                }
            }
            quot[q] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    /// A pseudo-remainder of `self` by `divisor`: `lc(divisor)^e * self mod divisor`
    /// for some `e >= 0`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let Some(dd) = divisor.degree() else {
            return self.clone();
        };
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.coeffs[rd].clone();
            let g = top.gcd(lead);
            let scale_rem = lead / &g;
            let scale_div = &top / &g;
            rem = rem.scale(&scale_rem) - divisor.scale(&scale_div).shift(rd - dd);
        }
        rem
    }

    /// Floating-point evaluation by Horner's rule.
    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + bigint_to_f64(c))
    }

    /// Exact value at `t = num/den` as a rational.
    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
    }

    /// Parse the text produced by `Display`. Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

pub(crate) fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(match x.sign() {
        Sign::Minus => f64::NEG_INFINITY,
        _ => f64::INFINITY,
    })
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{}", c.magnitude())?;
            match d {
                0 => {}
                1 => f.write_str("*t")?,
                _ => write!(f, "*t^{d}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse);
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        let bytes = compact.as_bytes();
        for (pos, &b) in bytes.iter().enumerate() {
            if b == b'+' || b == b'-' {
                if pos == 0 {
                    negative = b == b'-';
                    start = 1;
                    continue;
                }
                terms.push((negative, &compact[start..pos]));
                negative = b == b'-';
                start = pos + 1;
            }
        }
        terms.push((negative, &compact[start..]));

        let mut acc = IntPoly::zero();
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(Error::Parse);
            }
            let (coeff, power) = match term.split_once('t') {
                None => (term, 0usize),
                Some((c, rest)) => {
                    let c = match c {
                        "" => "1",
                        c => c.strip_suffix('*').ok_or(Error::Parse)?,
                    };
                    let power = match rest {
                        "" => 1,
                        r => r
                            .strip_prefix('^')
                            .and_then(|p| p.parse().ok())
                            .ok_or(Error::Parse)?,
                    };
                    (c, power)
                }
            };
            if !coeff.bytes().all(|b| b.is_ascii_digit()) || coeff.is_empty() {
                return Err(Error::Parse);
            }
            let mut c: BigInt = coeff.parse().map_err(|_| Error::Parse)?;
            if neg {
                c = -c;
            }
            acc = acc + IntPoly::monomial(c, power);
        }
        Ok(acc)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPoly {
    let len = a.len().max(b.len());
    let coeffs = (0..len)
        .map(|d| {
            let x = a.get(d);
            let y = b.get(d);
            match (x, y, negate_b) {
                (Some(x), Some(y), false) => x + y,
                (Some(x), Some(y), true) => x - y,
                (Some(x), None, _) => x.clone(),
                (None, Some(y), false) => y.clone(),
                (None, Some(y), true) => -y,
                (None, None, _) => BigInt::zero(),
            }
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

fn mul_coeffs(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return IntPoly::zero();
    }
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    IntPoly::from_coeffs(out)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a IntPoly> for &'a IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &'a IntPoly) -> IntPoly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $trait<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl<'a> $trait<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &'a IntPoly) -> IntPoly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_coeffs(a, b, false));
forward_binop!(Sub, sub, |a, b| add_coeffs(a, b, true));
forward_binop!(Mul, mul, mul_coeffs);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

/// Primitive gcd with positive leading coefficient, by the primitive
/// polynomial remainder sequence.
pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let (mut a, mut b) = (p.primitive_part(), q.primitive_part());
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    Ok(a)
}

/// `num / den` with `gcd(num, den) = 1` and integer coefficients sharing no
/// common content.
///
/// The sign is fixed so that `den(0) > 0`, or the leading coefficient of `den`
/// is positive when `den(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFn {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFn {
                num,
                den: IntPoly::one(),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        let flip = match den.coeffs.first() {
            Some(d0) if !d0.is_zero() => d0.is_negative(),
            _ => den.leading_coeff().is_some_and(Signed::is_negative),
        };
        if flip {
            num = -num;
            den = -den;
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalFn {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    /// Taylor coefficients `c_0, ..., c_{n_max}` at `t = 0`.
    ///
    /// Uses `c_n = (num_n - sum_{m>=1} den_m c_{n-m}) / den_0`.
    pub fn series_coeffs(&self, n_max: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(Error::SingularAtOrigin);
        }
        let d0 = BigRational::from_integer(d0);
        let mut out: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = BigRational::from_integer(self.num.coeff(n));
            for (m, dm) in self.den.coeffs.iter().enumerate().skip(1).take(n) {
                if !dm.is_zero() {
                    acc -= &out[n - m] * dm;
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// Taylor coefficients when they are all integers, which is the case
    /// whenever `den(0) = 1`.
    pub fn series_integers(&self, n_max: usize) -> Result<Option<Vec<BigInt>>> {
        let coeffs = self.series_coeffs(n_max)?;
        Ok(coeffs
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect())
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
