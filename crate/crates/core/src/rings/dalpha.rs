//! The real rings `𝔻[α]` and `𝔸 = 𝔻[α][1/α]`, with `α = sin(2π/9)` and
//! `𝔻 = Z[1/2]`, plus the residue map into `Z₃`.
//!
//! `α` satisfies `64α⁶ − 96α⁴ + 36α² − 3 = 0`, and `3 = 4α²(4α²−3)²`, so
//! `α⁶` and `3` are associates and dividing by `α` only ever introduces a
//! factor of `1/3`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclo::Cyclo36;
use super::RingError;

/// An element of `Z/3Z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z3(u8);

impl Z3 {
    pub const ZERO: Z3 = Z3(0);
    pub const ONE: Z3 = Z3(1);
    pub const TWO: Z3 = Z3(2);

    pub fn new(v: i64) -> Self {
        Z3(v.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    fn from_bigint(v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(3));
        Z3(r.to_u8().unwrap_or(0))
    }
}

impl Add for Z3 {
    type Output = Z3;
    fn add(self, rhs: Z3) -> Z3 {
        Z3((self.0 + rhs.0) % 3)
    }
}

impl Sub for Z3 {
    type Output = Z3;
    fn sub(self, rhs: Z3) -> Z3 {
        Z3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Mul for Z3 {
    type Output = Z3;
    fn mul(self, rhs: Z3) -> Z3 {
        Z3((self.0 * rhs.0) % 3)
    }
}

impl Neg for Z3 {
    type Output = Z3;
    fn neg(self) -> Z3 {
        Z3((3 - self.0) % 3)
    }
}

impl fmt::Display for Z3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `(n₀ + n₁α + … + n₅α⁵) / 2^exp2`, kept with the smallest possible `exp2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DalphaElem {
    num: [BigInt; 6],
    exp2: u32,
}

fn zeros6() -> [BigInt; 6] {
    std::array::from_fn(|_| BigInt::zero())
}

impl DalphaElem {
    pub fn zero() -> Self {
        DalphaElem {
            num: zeros6(),
            exp2: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut num = zeros6();
        num[0] = BigInt::from(n);
        DalphaElem { num, exp2: 0 }
    }

    /// `α` itself.
    pub fn alpha() -> Self {
        let mut num = zeros6();
        num[1] = BigInt::one();
        DalphaElem { num, exp2: 0 }
    }

    pub fn from_parts(num: [BigInt; 6], exp2: u32) -> Self {
        let mut out = DalphaElem { num, exp2 };
        out.normalize();
        out
    }

    /// Integer coefficients over a power of two, e.g. `from_ints(&[1, 0, -12, 0, 32, 0], 6)`.
    pub fn from_ints(coeffs: &[i64], exp2: u32) -> Self {
        assert!(coeffs.len() <= 6, "at most six coordinates");
        let mut num = zeros6();
        for (slot, &c) in num.iter_mut().zip(coeffs) {
            *slot = BigInt::from(c);
        }
        Self::from_parts(num, exp2)
    }

    /// Builds from rational coordinates over `{1, α, …, α⁵}`; `None` if some
    /// denominator is not a power of two.
    pub fn from_coeffs(coeffs: &[BigRational]) -> Option<Self> {
        assert!(coeffs.len() <= 6, "at most six coordinates");
        let mut exp2 = 0u32;
        for c in coeffs {
            let d = c.denom();
            let tz = d.trailing_zeros().unwrap_or(0);
            if (d >> tz) != BigInt::one() {
                return None;
            }
            exp2 = exp2.max(tz as u32);
        }
        let mut num = zeros6();
        for (slot, c) in num.iter_mut().zip(coeffs) {
            let shift = exp2 - c.denom().trailing_zeros().unwrap_or(0) as u32;
            *slot = c.numer() << shift;
        }
        Some(Self::from_parts(num, exp2))
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.exp2 = 0;
            return;
        }
        let tz = self
            .num
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.trailing_zeros().unwrap_or(0))
            .min()
            .unwrap_or(0);
        let shift = (tz as u32).min(self.exp2);
        if shift > 0 {
            for c in self.num.iter_mut() {
                *c = &*c >> shift;
            }
            self.exp2 -= shift;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn numerators(&self) -> &[BigInt; 6] {
        &self.num
    }

    pub fn exp2(&self) -> u32 {
        self.exp2
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), BigInt::one() << self.exp2)
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..6).map(|k| self.coeff(k)).collect()
    }

    /// Reduces a length-11 accumulator with `α⁶ = (96α⁴ − 36α² + 3)/64`.
    fn reduce(mut acc: Vec<BigInt>, mut exp2: u32) -> Self {
        for d in (6..acc.len()).rev() {
            if acc[d].is_zero() {
                continue;
            }
            let tz = acc[d].trailing_zeros().unwrap_or(0) as u32;
            if tz < 6 {
                let shift = 6 - tz;
                for c in acc.iter_mut() {
                    if !c.is_zero() {
                        *c = &*c << shift;
                    }
                }
                exp2 += shift;
            }
            let c = std::mem::take(&mut acc[d]) >> 6u32;
            acc[d - 2] += &c * 96;
            acc[d - 4] -= &c * 36;
            acc[d - 6] += &c * 3;
        }
        acc.truncate(6);
        let mut it = acc.into_iter();
        Self::from_parts(std::array::from_fn(|_| it.next().unwrap()), exp2)
    }

    /// Multiplication by `αⁿ`.
    pub fn mul_alpha_pow(&self, n: u32) -> Self {
        if n == 0 || self.is_zero() {
            return self.clone();
        }
        let mut acc = vec![BigInt::zero(); 6 + n as usize];
        for (k, c) in self.num.iter().enumerate() {
            acc[k + n as usize] = c.clone();
        }
        Self::reduce(acc, self.exp2)
    }

    /// `q/α` when it lies in `𝔻[α]`.
    pub fn div_alpha(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // 1/α = (64α⁵ − 96α³ + 36α)/3
        let p = self * inv_alpha_times_three();
        let three = BigInt::from(3);
        if p.num.iter().any(|c| !(c % &three).is_zero()) {
            return None;
        }
        let num = std::array::from_fn(|i| &p.num[i] / &three);
        Some(Self::from_parts(num, p.exp2))
    }

    /// Largest `v` with `α^v | q`, `None` for zero.
    pub fn alpha_valuation(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.div_alpha() {
            cur = next;
            v += 1;
        }
        Some(v)
    }

    /// `ρ(q) = q mod α`: only the constant coordinate `n₀/2^e` survives and
    /// `1/2 ≡ 2 ≡ −1 (mod 3)`.
    pub fn residue(&self) -> Z3 {
        let r = Z3::from_bigint(&self.num[0]);
        if self.exp2 % 2 == 1 {
            -r
        } else {
            r
        }
    }

    pub fn to_cyclo(&self) -> Cyclo36 {
        let powers = alpha_powers();
        let mut acc = Cyclo36::zero();
        for (c, p) in self.num.iter().zip(powers.iter()) {
            if !c.is_zero() {
                acc += p.scale(&BigRational::from_integer(c.clone()));
            }
        }
        acc.scale(&BigRational::new(BigInt::one(), BigInt::one() << self.exp2))
    }
}

fn inv_alpha_times_three() -> &'static DalphaElem {
    static V: OnceLock<DalphaElem> = OnceLock::new();
    V.get_or_init(|| DalphaElem::from_ints(&[0, 36, 0, -96, 0, 64], 0))
}

fn alpha_powers() -> &'static [Cyclo36; 6] {
    static P: OnceLock<[Cyclo36; 6]> = OnceLock::new();
    P.get_or_init(|| {
        let a = Cyclo36::alpha();
        std::array::from_fn(|k| a.pow(k as u32))
    })
}

fn alpha_inverse() -> &'static Cyclo36 {
    static V: OnceLock<Cyclo36> = OnceLock::new();
    V.get_or_init(|| Cyclo36::alpha().inv().expect("alpha is nonzero"))
}

fn add_d(a: &DalphaElem, b: &DalphaElem, negate: bool) -> DalphaElem {
    let e = a.exp2.max(b.exp2);
    let (sa, sb) = (e - a.exp2, e - b.exp2);
    let num = std::array::from_fn(|i| {
        let x = &a.num[i] << sa;
        let y = &b.num[i] << sb;
        if negate {
            x - y
        } else {
            x + y
        }
    });
    DalphaElem::from_parts(num, e)
}

fn mul_d(a: &DalphaElem, b: &DalphaElem) -> DalphaElem {
    if a.is_zero() || b.is_zero() {
        return DalphaElem::zero();
    }
    let mut acc = vec![BigInt::zero(); 11];
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
    DalphaElem::reduce(acc, a.exp2 + b.exp2)
}

impl Add for &DalphaElem {
    type Output = DalphaElem;
    fn add(self, rhs: &DalphaElem) -> DalphaElem {
        add_d(self, rhs, false)
    }
}

impl Sub for &DalphaElem {
    type Output = DalphaElem;
    fn sub(self, rhs: &DalphaElem) -> DalphaElem {
        add_d(self, rhs, true)
    }
}

impl Mul for &DalphaElem {
    type Output = DalphaElem;
    fn mul(self, rhs: &DalphaElem) -> DalphaElem {
        mul_d(self, rhs)
    }
}

impl Add for DalphaElem {
    type Output = DalphaElem;
    fn add(self, rhs: DalphaElem) -> DalphaElem {
        add_d(&self, &rhs, false)
    }
}

impl Sub for DalphaElem {
    type Output = DalphaElem;
    fn sub(self, rhs: DalphaElem) -> DalphaElem {
        add_d(&self, &rhs, true)
    }
}

impl Mul for DalphaElem {
    type Output = DalphaElem;
    fn mul(self, rhs: DalphaElem) -> DalphaElem {
        mul_d(&self, &rhs)
    }
}

impl Neg for &DalphaElem {
    type Output = DalphaElem;
    fn neg(self) -> DalphaElem {
        DalphaElem {
            num: std::array::from_fn(|i| -&self.num[i]),
            exp2: self.exp2,
        }
    }
}

impl Neg for DalphaElem {
    type Output = DalphaElem;
    fn neg(self) -> DalphaElem {
        -&self
    }
}

fn write_coeffs(f: &mut fmt::Formatter<'_>, num: &[BigInt; 6], exp2: u32) -> fmt::Result {
    write!(f, "[")?;
    for (k, c) in num.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")?;
    if exp2 > 0 {
        write!(f, "/2^{exp2}")?;
    }
    Ok(())
}

impl fmt::Debug for DalphaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dalpha")?;
        write_coeffs(f, &self.num, self.exp2)
    }
}

/// Coordinates over `{1, α, …, α⁵}` as `[n₀, …, n₅]/2^e`.
impl fmt::Display for DalphaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coeffs(f, &self.num, self.exp2)
    }
}

/// `value / α^denom_exp`. Representatives are not normalised; equality and
/// `lde` look through the representation.
#[derive(Clone)]
pub struct AlphaElem {
    pub value: DalphaElem,
    pub denom_exp: u32,
}

impl AlphaElem {
    pub fn new(value: DalphaElem, denom_exp: u32) -> Self {
        AlphaElem { value, denom_exp }
    }

    pub fn zero() -> Self {
        Self::new(DalphaElem::zero(), 0)
    }

    pub fn one() -> Self {
        Self::new(DalphaElem::one(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The canonical representative: `denom_exp` equal to the least
    /// denominator exponent.
    pub fn reduced(&self) -> Self {
        let mut value = self.value.clone();
        let mut k = self.denom_exp;
        if value.is_zero() {
            return Self::zero();
        }
        while k > 0 {
            match value.div_alpha() {
                Some(v) => {
                    value = v;
                    k -= 1;
                }
                None => break,
            }
        }
        Self::new(value, k)
    }

    /// Least `k` with `αᵏ·q ∈ 𝔻[α]`; zero has `lde` 0.
    pub fn lde(&self) -> u32 {
        self.reduced().denom_exp
    }

    /// `αᵏ·q` as an element of `𝔻[α]`.
    pub fn scaled_to(&self, k: u32) -> Result<DalphaElem, RingError> {
        let r = self.reduced();
        if k < r.denom_exp {
            return Err(RingError::KTooSmall {
                k,
                lde: r.denom_exp,
            });
        }
        Ok(r.value.mul_alpha_pow(k - r.denom_exp))
    }

    /// `ρₖ(q) = ρ(αᵏq)`.
    pub fn k_residue(&self, k: u32) -> Result<Z3, RingError> {
        self.scaled_to(k).map(|v| v.residue())
    }

    pub fn to_cyclo(&self) -> Cyclo36 {
        let v = self.value.to_cyclo();
        if self.denom_exp == 0 {
            v
        } else {
            v * alpha_inverse().pow(self.denom_exp)
        }
    }

    fn aligned(a: &Self, b: &Self) -> (DalphaElem, DalphaElem, u32) {
        let k = a.denom_exp.max(b.denom_exp);
        (
            a.value.mul_alpha_pow(k - a.denom_exp),
            b.value.mul_alpha_pow(k - b.denom_exp),
            k,
        )
    }
}

impl From<DalphaElem> for AlphaElem {
    fn from(value: DalphaElem) -> Self {
        AlphaElem::new(value, 0)
    }
}

impl PartialEq for AlphaElem {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = AlphaElem::aligned(self, other);
        a == b
    }
}

impl Eq for AlphaElem {}

impl Add for &AlphaElem {
    type Output = AlphaElem;
    fn add(self, rhs: &AlphaElem) -> AlphaElem {
        let (a, b, k) = AlphaElem::aligned(self, rhs);
        AlphaElem::new(&a + &b, k)
    }
}

impl Sub for &AlphaElem {
    type Output = AlphaElem;
    fn sub(self, rhs: &AlphaElem) -> AlphaElem {
        let (a, b, k) = AlphaElem::aligned(self, rhs);
        AlphaElem::new(&a - &b, k)
    }
}

impl Mul for &AlphaElem {
    type Output = AlphaElem;
    fn mul(self, rhs: &AlphaElem) -> AlphaElem {
        AlphaElem::new(&self.value * &rhs.value, self.denom_exp + rhs.denom_exp)
    }
}

impl Neg for &AlphaElem {
    type Output = AlphaElem;
    fn neg(self) -> AlphaElem {
        AlphaElem::new(-&self.value, self.denom_exp)
    }
}

impl fmt::Debug for AlphaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaElem({:?}, {})", self.value, self.denom_exp)
    }
}

/// Reduced form, `[n₀, …, n₅]/2^e/α^k`; rational values print as plain fractions.
impl fmt::Display for AlphaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.to_cyclo();
        if c.is_rational() {
            return write!(f, "{}", c.coeff(0));
        }
        let r = self.reduced();
        write!(f, "{}", r.value)?;
        if r.denom_exp > 0 {
            write!(f, "/a^{}", r.denom_exp)?;
        }
        Ok(())
    }
}
