//! Exact elements of the 36th cyclotomic field `Q(z)`, `z = exp(2πi/36)`.
//!
//! Every matrix entry this crate manipulates lives here: the cube root of
//! unity `ω = z¹²`, the ninth root `ζ = z⁴`, `i = z⁹`, and the real number
//! `α = sin(2π/9) = (z⁵ − z¹³)/2` all embed in this one field. Elements are
//! stored in the power basis `{1, z, …, z¹¹}` with a single common
//! denominator and reduced modulo `Φ₃₆(x) = x¹² − x⁶ + 1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Degree of the field over `Q`.
pub const DEGREE: usize = 12;
/// Order of the generating root of unity.
pub const ORDER: u32 = 36;

/// `z^j` reduced to the power basis, for `j` in `0..36`.
fn power_table() -> &'static [[i64; DEGREE]; ORDER as usize] {
    static TABLE: OnceLock<[[i64; DEGREE]; ORDER as usize]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [[0i64; DEGREE]; ORDER as usize];
        let mut cur = [0i64; DEGREE];
        cur[0] = 1;
        for row in table.iter_mut() {
            *row = cur;
            // multiply by x, then x^12 = x^6 - 1
            let top = cur[DEGREE - 1];
            for k in (1..DEGREE).rev() {
                cur[k] = cur[k - 1];
            }
            cur[0] = -top;
            cur[6] += top;
        }
        table
    })
}

/// An element of `Q(z₃₆)` in lowest terms: `num / den` with `den > 0` and
/// `gcd(num₀, …, num₁₁, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo36 {
    num: [BigInt; DEGREE],
    den: BigInt,
}

fn zero_array() -> [BigInt; DEGREE] {
    std::array::from_fn(|_| BigInt::zero())
}

impl Cyclo36 {
    pub fn zero() -> Self {
        Cyclo36 {
            num: zero_array(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        let mut num = zero_array();
        num[0] = n;
        Cyclo36 {
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let mut num = zero_array();
        num[0] = q.numer().clone();
        Self::from_parts(num, q.denom().clone())
    }

    /// Builds `Σ cₖ zᵏ` for arbitrary length coefficient lists.
    pub fn from_coeffs(coeffs: &[BigRational]) -> Self {
        let mut acc = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += Self::from_rational(c).mul_root(k as i64);
            }
        }
        acc
    }

    /// Builds `Σ cₖ zᵏ` from integer coefficients of any length.
    pub fn from_int_poly(coeffs: &[i64]) -> Self {
        let table = power_table();
        let mut num = zero_array();
        for (k, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = &table[k % ORDER as usize];
            for (slot, &r) in num.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *slot += BigInt::from(c * r);
                }
            }
        }
        Cyclo36 {
            num,
            den: BigInt::one(),
        }
    }

    fn from_parts(num: [BigInt; DEGREE], den: BigInt) -> Self {
        let mut out = Cyclo36 { num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in self.num.iter() {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in self.num.iter_mut() {
                if !c.is_zero() {
                    *c /= &g;
                }
            }
        }
    }

    /// `z^k` for any integer `k`.
    pub fn root(k: i64) -> Self {
        let j = k.rem_euclid(ORDER as i64) as usize;
        let row = &power_table()[j];
        Cyclo36 {
            num: std::array::from_fn(|i| BigInt::from(row[i])),
            den: BigInt::one(),
        }
    }

    /// The primitive cube root of unity `ω = exp(2πi/3)`.
    pub fn omega() -> Self {
        Self::root(12)
    }

    /// The primitive ninth root of unity `ζ = exp(2πi/9)`.
    pub fn zeta9() -> Self {
        Self::root(4)
    }

    pub fn i() -> Self {
        Self::root(9)
    }

    /// `α = sin(2π/9)`.
    pub fn alpha() -> Self {
        (Self::root(5) - Self::root(13)).scale(&BigRational::new(1.into(), 2.into()))
    }

    /// `ω − ω² = i√3`.
    pub fn sqrt3_times_i() -> Self {
        Self::root(12) - Self::root(24)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..DEGREE).map(|k| self.coeff(k)).collect()
    }

    pub fn numerators(&self) -> &[BigInt; DEGREE] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Multiplication by `z^k`. Units of `Z[z]` preserve content, so no
    /// renormalisation is needed.
    pub fn mul_root(&self, k: i64) -> Self {
        let steps = k.rem_euclid(ORDER as i64);
        if steps == 0 || self.is_zero() {
            return self.clone();
        }
        let mut num = self.num.clone();
        for _ in 0..steps {
            let top = std::mem::take(&mut num[DEGREE - 1]);
            for k in (1..DEGREE).rev() {
                num[k] = std::mem::take(&mut num[k - 1]);
            }
            if !top.is_zero() {
                num[6] += &top;
                num[0] = -top;
            }
        }
        Cyclo36 {
            num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let num = std::array::from_fn(|i| &self.num[i] * q.numer());
        Self::from_parts(num, &self.den * q.denom())
    }

    fn apply_exponent_map(&self, map: impl Fn(usize) -> usize) -> Self {
        let table = power_table();
        let mut num = zero_array();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table[map(k) % ORDER as usize];
            for (slot, &r) in num.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *slot += c * r;
                }
            }
        }
        Cyclo36 {
            num,
            den: self.den.clone(),
        }
    }

    /// Complex conjugation, `z ↦ z⁻¹`.
    pub fn conj(&self) -> Self {
        self.apply_exponent_map(|k| ORDER as usize - k)
    }

    /// The field automorphism `z ↦ z^j`; `j` must be coprime to 36.
    pub fn galois(&self, j: u32) -> Self {
        debug_assert_eq!(j.gcd(&ORDER), 1);
        self.apply_exponent_map(|k| k * j as usize)
    }

    /// `|x|² = x·conj(x)`.
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Multiplicative inverse via the product of the non-trivial conjugates.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut prod = Self::one();
        for j in 2..ORDER {
            if j.gcd(&ORDER) == 1 {
                prod = &prod * &self.galois(j);
            }
        }
        let norm = self * &prod;
        debug_assert!(norm.is_rational());
        let n = norm.coeff(0);
        Some(prod.scale(&n.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// If this is `z^k` for some `k`, return `k`.
    pub fn as_root(&self) -> Option<RootOfUnity> {
        if !self.den.is_one() {
            return None;
        }
        let table = power_table();
        (0..ORDER)
            .find(|&j| {
                self.num
                    .iter()
                    .zip(table[j as usize].iter())
                    .all(|(a, &b)| *a == BigInt::from(b))
            })
            .map(|j| RootOfUnity(j as u8))
    }

    /// Floating-point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN) / den;
            let theta = 2.0 * std::f64::consts::PI * k as f64 / ORDER as f64;
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }

    /// Decimal rendering such as `0.5000-0.8660i`.
    pub fn decimal(&self) -> String {
        let (re, im) = self.to_complex();
        let re = if re.abs() < 5e-13 { 0.0 } else { re };
        let im = if im.abs() < 5e-13 { 0.0 } else { im };
        if im == 0.0 {
            format!("{re:.4}")
        } else {
            format!("{re:.4}{im:+.4}i")
        }
    }

    /// Short symbolic name: roots of unity as `zeta^k`-style tokens,
    /// everything else as a polynomial in `z`.
    pub fn symbolic(&self) -> String {
        match self.as_root() {
            Some(r) => r.to_string(),
            None => self.to_string(),
        }
    }
}

impl fmt::Debug for Cyclo36 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo36[")?;
        for k in 0..DEGREE {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.coeff(k))?;
        }
        write!(f, "]")
    }
}

/// Sparse polynomial in `z`, e.g. `1/3*z^6 - 2/3`.
impl fmt::Display for Cyclo36 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in 0..DEGREE {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Default for Cyclo36 {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclo36 {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<RootOfUnity> for Cyclo36 {
    fn from(r: RootOfUnity) -> Self {
        Self::root(r.exponent() as i64)
    }
}

fn add_impl(a: &Cyclo36, b: &Cyclo36, negate_b: bool) -> Cyclo36 {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let combine = |x: &BigInt, y: &BigInt| if negate_b { x - y } else { x + y };
    if a.den == b.den {
        let num = std::array::from_fn(|i| combine(&a.num[i], &b.num[i]));
        return Cyclo36::from_parts(num, a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    let fa = &b.den / &g;
    let fb = &a.den / &g;
    let num = std::array::from_fn(|i| combine(&(&a.num[i] * &fa), &(&b.num[i] * &fb)));
    Cyclo36::from_parts(num, &a.den * &fa)
}

fn mul_impl(a: &Cyclo36, b: &Cyclo36) -> Cyclo36 {
    if a.is_zero() || b.is_zero() {
        return Cyclo36::zero();
    }
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let mut acc: [BigInt; 2 * DEGREE - 1] = std::array::from_fn(|_| BigInt::zero());
    for (i, x) in a.num.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
    for d in (DEGREE..2 * DEGREE - 1).rev() {
        if acc[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut acc[d]);
        acc[d - 6] += &c;
        acc[d - 12] -= c;
    }
    let mut it = acc.into_iter();
    let num = std::array::from_fn(|_| it.next().unwrap());
    Cyclo36::from_parts(num, &a.den * &b.den)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Cyclo36> for &Cyclo36 {
            type Output = Cyclo36;
            fn $method(self, rhs: &Cyclo36) -> Cyclo36 {
                $body(self, rhs)
            }
        }
        impl $trait<Cyclo36> for Cyclo36 {
            type Output = Cyclo36;
            fn $method(self, rhs: Cyclo36) -> Cyclo36 {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Cyclo36> for Cyclo36 {
            type Output = Cyclo36;
            fn $method(self, rhs: &Cyclo36) -> Cyclo36 {
                $body(&self, rhs)
            }
        }
        impl $trait<Cyclo36> for &Cyclo36 {
            type Output = Cyclo36;
            fn $method(self, rhs: Cyclo36) -> Cyclo36 {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl AddAssign<Cyclo36> for Cyclo36 {
    fn add_assign(&mut self, rhs: Cyclo36) {
        *self = add_impl(self, &rhs, false);
    }
}

impl AddAssign<&Cyclo36> for Cyclo36 {
    fn add_assign(&mut self, rhs: &Cyclo36) {
        *self = add_impl(self, rhs, false);
    }
}

impl SubAssign<&Cyclo36> for Cyclo36 {
    fn sub_assign(&mut self, rhs: &Cyclo36) {
        *self = add_impl(self, rhs, true);
    }
}

impl MulAssign<&Cyclo36> for Cyclo36 {
    fn mul_assign(&mut self, rhs: &Cyclo36) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for &Cyclo36 {
    type Output = Cyclo36;
    fn neg(self) -> Cyclo36 {
        Cyclo36 {
            num: std::array::from_fn(|i| -&self.num[i]),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclo36 {
    type Output = Cyclo36;
    fn neg(mut self) -> Cyclo36 {
        for c in self.num.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl std::iter::Sum for Cyclo36 {
    fn sum<I: Iterator<Item = Cyclo36>>(iter: I) -> Self {
        iter.fold(Cyclo36::zero(), |acc, x| acc + x)
    }
}

/// A 36th root of unity `z^k`, stored by its exponent modulo 36.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity(u8);

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity(0);
    pub const MINUS_ONE: RootOfUnity = RootOfUnity(18);

    pub fn new(k: i64) -> Self {
        RootOfUnity(k.rem_euclid(ORDER as i64) as u8)
    }

    /// `ζᵏ` with `ζ = exp(2πi/9)`.
    pub fn zeta9(k: i64) -> Self {
        Self::new(4 * k)
    }

    /// `ωᵏ` with `ω = exp(2πi/3)`.
    pub fn omega(k: i64) -> Self {
        Self::new(12 * k)
    }

    pub fn exponent(self) -> u32 {
        self.0 as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Self {
        Self::new(-(self.0 as i64))
    }

    pub fn pow(self, e: i64) -> Self {
        Self::new(self.0 as i64 * e)
    }

    /// All 36 roots, `z⁰` first.
    pub fn all() -> impl Iterator<Item = RootOfUnity> {
        (0..ORDER as u8).map(RootOfUnity)
    }

    pub fn to_cyclo(self) -> Cyclo36 {
        Cyclo36::root(self.0 as i64)
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        Self::new(self.0 as i64 + rhs.0 as i64)
    }
}

/// Renders as `1`, `-1`, `zeta^k`, `-zeta^k` (ninth roots up to sign) or `z36^k`.
impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.0 as u32;
        let zeta = |f: &mut fmt::Formatter<'_>, m: u32| match m {
            0 => write!(f, "1"),
            1 => write!(f, "zeta"),
            _ => write!(f, "zeta^{m}"),
        };
        if k % 4 == 0 {
            zeta(f, k / 4)
        } else if k % 4 == 2 {
            write!(f, "-")?;
            zeta(f, ((k + 18) % 36) / 4)
        } else {
            write!(f, "z36^{k}")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error(
    "unrecognised phase `{0}` (expected 1, -1, i, omega^k, zeta^k or z36^k, optionally negated)"
)]
pub struct PhaseParseError(pub String);

impl FromStr for RootOfUnity {
    type Err = PhaseParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PhaseParseError(s.to_string());
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, t),
        };
        let (base, exp) = match body.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim().parse::<i64>().map_err(|_| err())?),
            None => (body, 1),
        };
        let root = match base {
            "1" if exp == 1 => RootOfUnity::ONE,
            "i" => RootOfUnity::new(9 * exp),
            "omega" | "w" => RootOfUnity::omega(exp),
            "zeta" => RootOfUnity::zeta9(exp),
            "z36" => RootOfUnity::new(exp),
            _ => return Err(err()),
        };
        Ok(if neg {
            root * RootOfUnity::MINUS_ONE
        } else {
            root
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_cyclo() -> impl Strategy<Value = Cyclo36> {
        (
            prop::collection::vec(-20i64..20, DEGREE),
            prop::sample::select(vec![1i64, 2, 3, 4, 9, 6, 27]),
        )
            .prop_map(|(c, d)| {
                let coeffs: Vec<BigRational> = c
                    .into_iter()
                    .map(|n| BigRational::new(n.into(), d.into()))
                    .collect();
                Cyclo36::from_coeffs(&coeffs)
            })
    }

    #[test]
    fn omega_relation() {
        let w = Cyclo36::omega();
        assert!((&w * &w + &w + Cyclo36::one()).is_zero());
        assert!(w.pow(3).is_one());
    }

    #[test]
    fn zeta_cubed_is_omega() {
        let z = Cyclo36::zeta9();
        assert!((z.pow(3) - Cyclo36::omega()).is_zero());
    }

    #[test]
    fn sqrt3_times_i_squares_to_minus_three() {
        assert_eq!(Cyclo36::sqrt3_times_i().pow(2), Cyclo36::from_int(-3));
    }

    #[test]
    fn alpha_satisfies_sextic_and_is_real() {
        let a = Cyclo36::alpha();
        assert!(a.is_real());
        let v = a.pow(6).scale(&BigRational::from_integer(64.into()))
            - a.pow(4).scale(&BigRational::from_integer(96.into()))
            + a.pow(2).scale(&BigRational::from_integer(36.into()))
            - Cyclo36::from_int(3);
        assert!(v.is_zero());
        let (re, im) = a.to_complex();
        assert!((re - (2.0 * std::f64::consts::PI / 9.0).sin()).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn roots_have_full_order() {
        assert!(Cyclo36::root(36).is_one());
        assert!(!Cyclo36::root(18).is_one());
        assert_eq!(Cyclo36::root(18), Cyclo36::from_int(-1));
        assert_eq!(Cyclo36::i().pow(2), Cyclo36::from_int(-1));
    }

    #[test]
    fn as_root_recognises_every_power() {
        for k in 0..36 {
            assert_eq!(Cyclo36::root(k).as_root(), Some(RootOfUnity::new(k)));
        }
        assert_eq!(Cyclo36::from_int(2).as_root(), None);
    }

    #[test]
    fn phase_strings() {
        assert_eq!(
            "zeta^7".parse::<RootOfUnity>().unwrap(),
            RootOfUnity::zeta9(7)
        );
        assert_eq!("-1".parse::<RootOfUnity>().unwrap(), RootOfUnity::MINUS_ONE);
        assert_eq!(
            "omega".parse::<RootOfUnity>().unwrap(),
            RootOfUnity::new(12)
        );
        assert_eq!(
            "-zeta^2".parse::<RootOfUnity>().unwrap(),
            RootOfUnity::new(26)
        );
        assert!("sqrt2".parse::<RootOfUnity>().is_err());
        for r in RootOfUnity::all() {
            assert_eq!(r.to_string().parse::<RootOfUnity>().unwrap(), r);
        }
    }

    #[test]
    fn display_is_sparse() {
        let x = Cyclo36::sqrt3_times_i().scale(&BigRational::new(1.into(), 3.into()));
        assert_eq!(x.to_string(), "-1/3 + 2/3*z^6");
        assert_eq!(Cyclo36::zero().to_string(), "0");
        assert_eq!(Cyclo36::root(1).to_string(), "z");
        assert_eq!(Cyclo36::root(12).to_string(), "-1 + z^6");
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn conjugation(a in arb_cyclo(), b in arb_cyclo()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
            let n = a.norm_sq();
            prop_assert!(n.is_real());
        }

        #[test]
        fn mul_root_matches_mul(a in arb_cyclo(), k in 0i64..72) {
            prop_assert_eq!(a.mul_root(k), &a * &Cyclo36::root(k));
        }
    }
}
