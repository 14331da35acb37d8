//! Exact arithmetic in the degree-8 field `Q(i, √2, √3)`.
//!
//! An element is stored as eight integer numerators over one common positive
//! denominator. Coordinate `s * 4 + r` holds the coefficient of
//! `i^s · √r`, with `r` running over the radical basis `1, √2, √3, √6`.
//! Radical indices are bitmasks (bit 0 = √2, bit 1 = √3), so the product of
//! two basis radicals is the XOR of their indices times the primes they share.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Real or imaginary half of an [`AlgNum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Re = 0,
    Im = 1,
}

/// One of the four radicals spanning `Q(√2, √3)` over `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Radical {
    One = 0,
    Sqrt2 = 1,
    Sqrt3 = 2,
    Sqrt6 = 3,
}

impl Radical {
    pub const ALL: [Radical; 4] = [Radical::One, Radical::Sqrt2, Radical::Sqrt3, Radical::Sqrt6];

    fn suffix(self) -> &'static str {
        match self {
            Radical::One => "",
            Radical::Sqrt2 => "r2",
            Radical::Sqrt3 => "r3",
            Radical::Sqrt6 => "r6",
        }
    }

    fn value(self) -> f64 {
        match self {
            Radical::One => 1.0,
            Radical::Sqrt2 => std::f64::consts::SQRT_2,
            Radical::Sqrt3 => 3f64.sqrt(),
            Radical::Sqrt6 => 6f64.sqrt(),
        }
    }
}

/// An element of `Q(i, √2, √3)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgNum {
    num: [BigInt; 8],
    den: BigInt,
}

impl AlgNum {
    pub fn zero() -> Self {
        AlgNum {
            num: Default::default(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut a = Self::zero();
        a.num[0] = BigInt::from(n);
        a
    }

    /// `p / q` as a rational element. Panics if `q == 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        Self::from_rational(&BigRational::new(p.into(), q.into()))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_coord(Part::Re, Radical::One, q)
    }

    /// The element `q · i^part · radical`.
    pub fn from_coord(part: Part, radical: Radical, q: &BigRational) -> Self {
        let mut a = Self::zero();
        a.num[part as usize * 4 + radical as usize] = q.numer().clone();
        a.den = q.denom().clone();
        a.normalize();
        a
    }

    pub fn i() -> Self {
        Self::from_coord(Part::Im, Radical::One, &BigRational::one())
    }

    pub fn sqrt2() -> Self {
        Self::from_coord(Part::Re, Radical::Sqrt2, &BigRational::one())
    }

    pub fn sqrt3() -> Self {
        Self::from_coord(Part::Re, Radical::Sqrt3, &BigRational::one())
    }

    pub fn sqrt6() -> Self {
        Self::from_coord(Part::Re, Radical::Sqrt6, &BigRational::one())
    }

    /// Rational coefficient of `i^part · radical`.
    pub fn coord(&self, part: Part, radical: Radical) -> BigRational {
        BigRational::new(self.num[part as usize * 4 + radical as usize].clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.num[4..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// Complex conjugation `i ↦ -i`.
    pub fn conj(&self) -> Self {
        self.negate_where(|k| k >= 4)
    }

    /// Real part, as an element with vanishing imaginary coordinates.
    pub fn re(&self) -> Self {
        let mut a = self.clone();
        a.num[4..].iter_mut().for_each(|n| *n = BigInt::zero());
        a.normalize();
        a
    }

    /// Imaginary part, as a real element.
    pub fn im(&self) -> Self {
        let mut a = Self::zero();
        a.num[..4].clone_from_slice(&self.num[4..]);
        a.den = self.den.clone();
        a.normalize();
        a
    }

    /// Multiplicative inverse via the norm tower `Q ⊂ Q(√2) ⊂ Q(√2,√3) ⊂ Q(i,√2,√3)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a_bar = self.conj();
        let n1 = self * &a_bar;
        let n1_s3 = n1.negate_where(|k| k & 2 != 0);
        let n2 = &n1 * &n1_s3;
        let n2_s2 = n2.negate_where(|k| k & 1 != 0);
        let n3 = &n2 * &n2_s2;
        debug_assert!(n3.is_rational());
        let mut out = &(&a_bar * &n1_s3) * &n2_s2;
        // divide by the rational n3 = num / den
        let (p, q) = (n3.num[0].clone(), n3.den.clone());
        for n in out.num.iter_mut() {
            *n *= &q;
        }
        out.den *= p;
        out.normalize();
        Ok(out)
    }

    pub fn checked_div(&self, rhs: &AlgNum) -> Result<AlgNum> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact sign of a real element. Fails on elements with an imaginary part.
    pub fn real_sign(&self) -> Result<Ordering> {
        if !self.is_real() {
            return Err(Error::NotReal(self.to_string()));
        }
        let q = |k: usize| BigRational::new(self.num[k].clone(), self.den.clone());
        // x = u + v√3 with u = a + b√2, v = c + d√2
        let u = (q(0), q(1));
        let v = (q(2), q(3));
        Ok(sign_tower(&u, &v))
    }

    /// Floating-point embedding `(re, im)`; for test oracles only.
    pub fn to_c64(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for r in Radical::ALL {
            re += self.num[r as usize].to_f64().unwrap_or(f64::NAN) * r.value();
            im += self.num[4 + r as usize].to_f64().unwrap_or(f64::NAN) * r.value();
        }
        (re / den, im / den)
    }

    /// LaTeX rendering, e.g. `\frac{i}{2}` or `-\sqrt{2}`.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        for part in [Part::Re, Part::Im] {
            for r in Radical::ALL {
                let c = self.coord(part, r);
                if c.is_zero() {
                    continue;
                }
                let negative = c.is_negative();
                let p = c.numer().abs();
                let mut numer = String::new();
                let bare = r == Radical::One && part == Part::Re;
                if !p.is_one() || bare {
                    numer.push_str(&p.to_string());
                }
                if part == Part::Im {
                    numer.push('i');
                }
                match r {
                    Radical::One => {}
                    Radical::Sqrt2 => numer.push_str("\\sqrt{2}"),
                    Radical::Sqrt3 => numer.push_str("\\sqrt{3}"),
                    Radical::Sqrt6 => numer.push_str("\\sqrt{6}"),
                }
                let term = if c.denom().is_one() {
                    numer
                } else {
                    format!("\\frac{{{}}}{{{}}}", numer, c.denom())
                };
                if negative {
                    out.push('-');
                } else if !out.is_empty() {
                    out.push('+');
                }
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn negate_where(&self, pred: impl Fn(usize) -> bool) -> Self {
        let mut a = self.clone();
        for (k, n) in a.num.iter_mut().enumerate() {
            if pred(k) {
                *n = -std::mem::take(n);
            }
        }
        a
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for n in self.num.iter_mut() {
                *n = -std::mem::take(n);
            }
        }
        let mut g = self.den.clone();
        for n in self.num.iter() {
            if g.is_one() {
                break;
            }
            if !n.is_zero() {
                g = g.gcd(n);
            }
        }
        if !g.is_one() {
            for n in self.num.iter_mut() {
                *n = &*n / &g;
            }
            self.den = &self.den / &g;
        }
    }

    fn fmt_real(num: &[BigInt], den: &BigInt, out: &mut String) {
        let start = out.len();
        for r in Radical::ALL {
            let c = BigRational::new(num[r as usize].clone(), den.clone());
            if c.is_zero() {
                continue;
            }
            let term = if r == Radical::One {
                c.to_string()
            } else if c.is_one() {
                r.suffix().to_string()
            } else if (-&c).is_one() {
                format!("-{}", r.suffix())
            } else {
                format!("{}*{}", c, r.suffix())
            };
            if out.len() > start && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.len() == start {
            out.push('0');
        }
    }
}

fn sign_q(x: &BigRational) -> Ordering {
    x.cmp(&BigRational::zero())
}

/// Sign of `p + q√2`.
fn sign_q2(p: &BigRational, q: &BigRational) -> Ordering {
    let (sp, sq) = (sign_q(p), sign_q(q));
    if sq == Ordering::Equal || sp == sq {
        return sp;
    }
    if sp == Ordering::Equal {
        return sq;
    }
    let two = BigRational::from_integer(2.into());
    let w = p * p - &two * q * q;
    match sign_q(&w) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => sp,
        Ordering::Less => sq,
    }
}

/// Sign of `u + v√3` with `u, v ∈ Q(√2)` given as pairs.
fn sign_tower(u: &(BigRational, BigRational), v: &(BigRational, BigRational)) -> Ordering {
    let su = sign_q2(&u.0, &u.1);
    let sv = sign_q2(&v.0, &v.1);
    if sv == Ordering::Equal || su == sv {
        return su;
    }
    if su == Ordering::Equal {
        return sv;
    }
    // compare u^2 with 3 v^2 inside Q(√2)
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    let u2 = (&u.0 * &u.0 + &two * &u.1 * &u.1, &two * &u.0 * &u.1);
    let v2 = (&v.0 * &v.0 + &two * &v.1 * &v.1, &two * &v.0 * &v.1);
    let w = (u2.0 - &three * v2.0, u2.1 - &three * v2.1);
    match sign_q2(&w.0, &w.1) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => su,
        Ordering::Less => sv,
    }
}

impl Default for AlgNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for AlgNum {
    fn zero() -> Self {
        AlgNum::zero()
    }
    fn is_zero(&self) -> bool {
        AlgNum::is_zero(self)
    }
}

impl One for AlgNum {
    fn one() -> Self {
        AlgNum::one()
    }
}

impl From<i64> for AlgNum {
    fn from(n: i64) -> Self {
        AlgNum::from_int(n)
    }
}

impl<'a> Add<&'a AlgNum> for &'a AlgNum {
    type Output = AlgNum;
    fn add(self, rhs: &AlgNum) -> AlgNum {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let mut out = AlgNum::zero();
        if self.den == rhs.den {
            for k in 0..8 {
                out.num[k] = &self.num[k] + &rhs.num[k];
            }
            out.den = self.den.clone();
        } else {
            for k in 0..8 {
                out.num[k] = &self.num[k] * &rhs.den + &rhs.num[k] * &self.den;
            }
            out.den = &self.den * &rhs.den;
        }
        out.normalize();
        out
    }
}

impl<'a> Sub<&'a AlgNum> for &'a AlgNum {
    type Output = AlgNum;
    fn sub(self, rhs: &AlgNum) -> AlgNum {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a AlgNum> for &'a AlgNum {
    type Output = AlgNum;
    fn mul(self, rhs: &AlgNum) -> AlgNum {
        if self.is_zero() || rhs.is_zero() {
            return AlgNum::zero();
        }
        let mut out = AlgNum::zero();
        for (a, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.num.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (sa, ra) = (a >> 2, a & 3);
                let (sb, rb) = (b >> 2, b & 3);
                let shared = ra & rb;
                let mut factor: i64 = 1;
                if shared & 1 != 0 {
                    factor *= 2;
                }
                if shared & 2 != 0 {
                    factor *= 3;
                }
                if sa & sb != 0 {
                    factor = -factor;
                }
                let target = ((sa ^ sb) << 2) | (ra ^ rb);
                out.num[target] += x * y * factor;
            }
        }
        out.den = &self.den * &rhs.den;
        out.normalize();
        out
    }
}

impl Neg for &AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        let mut a = self.clone();
        for n in a.num.iter_mut() {
            *n = -std::mem::take(n);
        }
        a
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<AlgNum> for AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: AlgNum) -> AlgNum {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a AlgNum> for AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: &AlgNum) -> AlgNum {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<AlgNum> for &'a AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: AlgNum) -> AlgNum {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Panics on division by zero; use [`AlgNum::checked_div`] when the divisor may vanish.
impl Div<&AlgNum> for &AlgNum {
    type Output = AlgNum;
    fn div(self, rhs: &AlgNum) -> AlgNum {
        self.checked_div(rhs).expect("division by zero in Q(i,√2,√3)")
    }
}

impl Div<AlgNum> for AlgNum {
    type Output = AlgNum;
    fn div(self, rhs: AlgNum) -> AlgNum {
        &self / &rhs
    }
}

impl AddAssign<&AlgNum> for AlgNum {
    fn add_assign(&mut self, rhs: &AlgNum) {
        *self = &*self + rhs;
    }
}

impl AddAssign for AlgNum {
    fn add_assign(&mut self, rhs: AlgNum) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&AlgNum> for AlgNum {
    fn sub_assign(&mut self, rhs: &AlgNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&AlgNum> for AlgNum {
    fn mul_assign(&mut self, rhs: &AlgNum) {
        *self = &*self * rhs;
    }
}

impl Sum for AlgNum {
    fn sum<I: Iterator<Item = AlgNum>>(iter: I) -> AlgNum {
        iter.fold(AlgNum::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a AlgNum> for AlgNum {
    fn sum<I: Iterator<Item = &'a AlgNum>>(iter: I) -> AlgNum {
        iter.fold(AlgNum::zero(), |acc, x| &acc + x)
    }
}

impl Product for AlgNum {
    fn product<I: Iterator<Item = AlgNum>>(iter: I) -> AlgNum {
        iter.fold(AlgNum::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for AlgNum {
    /// `a+b*r2+c*r3+d*r6+i*(…)` with reduced rationals `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let has_re = self.num[..4].iter().any(|n| !n.is_zero());
        let has_im = self.num[4..].iter().any(|n| !n.is_zero());
        let mut s = String::new();
        if has_re || !has_im {
            AlgNum::fmt_real(&self.num[..4], &self.den, &mut s);
        }
        if has_im {
            if has_re {
                s.push('+');
            }
            s.push_str("i*(");
            AlgNum::fmt_real(&self.num[4..], &self.den, &mut s);
            s.push(')');
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgNum({})", self)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn err(&self) -> Error {
        Error::Parse(format!("bad number literal {:?} at byte {}", self.src, self.pos))
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            self.src[start..self.pos].parse().ok()
        }
    }

    fn radical(&mut self) -> Option<Radical> {
        if self.eat("r2") {
            Some(Radical::Sqrt2)
        } else if self.eat("r3") {
            Some(Radical::Sqrt3)
        } else if self.eat("r6") {
            Some(Radical::Sqrt6)
        } else {
            None
        }
    }

    /// term := rational ['*' radical] | radical
    fn term(&mut self, part: Part) -> Result<AlgNum> {
        if let Some(r) = self.radical() {
            return Ok(AlgNum::from_coord(part, r, &BigRational::one()));
        }
        let p = self.integer().ok_or_else(|| self.err())?;
        let q = if self.eat("/") {
            self.integer().ok_or_else(|| self.err())?
        } else {
            BigInt::one()
        };
        if q.is_zero() {
            return Err(self.err());
        }
        let c = BigRational::new(p, q);
        let r = if self.eat("*") {
            self.radical().ok_or_else(|| self.err())?
        } else {
            Radical::One
        };
        Ok(AlgNum::from_coord(part, r, &c))
    }

    fn real_sum(&mut self, part: Part) -> Result<AlgNum> {
        let mut acc = AlgNum::zero();
        let mut first = true;
        loop {
            let negative = if self.eat("-") {
                true
            } else if self.eat("+") || first {
                false
            } else {
                break;
            };
            if self.src[self.pos..].starts_with("i*(") {
                // back off: the sign belongs to the imaginary block
                self.pos -= 1;
                break;
            }
            let t = self.term(part)?;
            acc = if negative { acc - t } else { acc + t };
            first = false;
        }
        Ok(acc)
    }

    fn parse(mut self) -> Result<AlgNum> {
        let mut out = AlgNum::zero();
        if !self.src.starts_with("i*(") && !self.src.starts_with("+i*(") && !self.src.starts_with("-i*(") {
            out = self.real_sum(Part::Re)?;
        }
        if self.pos < self.src.len() {
            let negative = if self.eat("-") {
                true
            } else {
                self.eat("+");
                false
            };
            if !self.eat("i*(") {
                return Err(self.err());
            }
            let im = self.real_sum(Part::Im)?;
            if !self.eat(")") {
                return Err(self.err());
            }
            out = if negative { out - im } else { out + im };
        }
        if self.pos != self.src.len() {
            return Err(self.err());
        }
        Ok(out)
    }
}

impl FromStr for AlgNum {
    type Err = Error;
    fn from_str(s: &str) -> Result<AlgNum> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty number literal".into()));
        }
        Parser { src: &compact, pos: 0 }.parse()
    }
}

impl Serialize for AlgNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlgNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> AlgNum {
        s.parse().unwrap()
    }

    #[test]
    fn radical_products() {
        assert_eq!(AlgNum::sqrt2() * AlgNum::sqrt3(), AlgNum::sqrt6());
        assert_eq!(AlgNum::sqrt2() * AlgNum::sqrt6(), AlgNum::from_int(2) * AlgNum::sqrt3());
        assert_eq!(AlgNum::sqrt3() * AlgNum::sqrt6(), AlgNum::from_int(3) * AlgNum::sqrt2());
        let i6 = AlgNum::i() * AlgNum::sqrt6();
        assert_eq!(&i6 * &i6, AlgNum::from_int(-6));
    }

    #[test]
    fn one_over_sqrt6_times_sqrt6() {
        let a = AlgNum::frac(1, 6) * AlgNum::sqrt6();
        let prod = &a * &AlgNum::sqrt6();
        assert!(prod.is_one());
        // float oracle on the factor itself
        let (re, im) = a.to_c64();
        assert!((re - 1.0 / 6f64.sqrt()).abs() < 1e-12 && im == 0.0);
        assert!(((re * re) - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn inverses() {
        assert_eq!((AlgNum::one() + AlgNum::sqrt2()).inv().unwrap(), AlgNum::sqrt2() - AlgNum::one());
        assert_eq!(AlgNum::i().inv().unwrap(), -AlgNum::i());
        let two_r3 = AlgNum::from_int(2) * AlgNum::sqrt3();
        let inv = two_r3.inv().unwrap();
        assert_eq!(inv, AlgNum::frac(1, 6) * AlgNum::sqrt3());
        assert!((&inv * &two_r3).is_one());
        assert!(matches!(AlgNum::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn conjugation() {
        let i6 = AlgNum::i() * AlgNum::sqrt6();
        assert_eq!(i6.conj(), -&i6);
        assert_eq!(AlgNum::frac(3, 2).conj(), AlgNum::frac(3, 2));
        let a = AlgNum::one() + AlgNum::i() * AlgNum::sqrt2();
        let b = AlgNum::sqrt3() - AlgNum::i();
        assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        // expanded by hand: (1 + i√2)(√3 - i) = √3 + √2 + i(√6 - 1)
        assert_eq!(&a * &b, n("r2+r3+i*(-1+r6)"));
    }

    #[test]
    fn text_format() {
        let cases = [
            ("0", AlgNum::zero()),
            ("-1", AlgNum::from_int(-1)),
            ("1/2*r6", AlgNum::frac(1, 2) * AlgNum::sqrt6()),
            ("i*(1/2)", AlgNum::frac(1, 2) * AlgNum::i()),
            ("1+i*(-r2)", AlgNum::one() - AlgNum::i() * AlgNum::sqrt2()),
            ("-r3+2*r6", AlgNum::from_int(2) * AlgNum::sqrt6() - AlgNum::sqrt3()),
        ];
        for (s, v) in cases {
            assert_eq!(v.to_string(), s);
            assert_eq!(n(s), v);
        }
        assert_eq!(n("-i*(1/2)"), AlgNum::frac(-1, 2) * AlgNum::i());
        assert_eq!(n("3 - r2"), AlgNum::from_int(3) - AlgNum::sqrt2());
        assert!("1/0".parse::<AlgNum>().is_err());
        assert!("r5".parse::<AlgNum>().is_err());
        assert!("".parse::<AlgNum>().is_err());
    }

    #[test]
    fn latex() {
        assert_eq!((AlgNum::frac(1, 2) * AlgNum::i()).to_latex(), "\\frac{i}{2}");
        assert_eq!((-AlgNum::sqrt2()).to_latex(), "-\\sqrt{2}");
        assert_eq!(AlgNum::frac(-1, 2).to_latex(), "-\\frac{1}{2}");
        assert_eq!(AlgNum::one().to_latex(), "1");
    }

    #[test]
    fn exact_signs() {
        use Ordering::*;
        assert_eq!(AlgNum::sqrt2().real_sign().unwrap(), Greater);
        assert_eq!((AlgNum::from_int(3) - AlgNum::from_int(2) * AlgNum::sqrt2()).real_sign().unwrap(), Greater);
        // √2 + √3 - √6 - 0.5 ≈ 0.2967
        let x = n("-1/2+r2+r3-r6");
        assert_eq!(x.real_sign().unwrap(), Greater);
        // 5 - 2√6 = (√3-√2)^2 > 0 while 4.89 - 2√6 < 0
        assert_eq!(n("5-2*r6").real_sign().unwrap(), Greater);
        assert_eq!(n("489/100-2*r6").real_sign().unwrap(), Less);
        assert_eq!(AlgNum::zero().real_sign().unwrap(), Equal);
        assert!(AlgNum::i().real_sign().is_err());
    }
}
