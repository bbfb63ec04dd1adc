//! Subring membership inside `Q(z₃₆)` and conversion of real elements into
//! the `α`-basis.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclo::{Cyclo36, DEGREE};
use super::dalpha::{AlphaElem, DalphaElem};
use super::RingError;

/// The number rings the toolkit can test membership in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    /// `Z[ω]`
    Zomega,
    /// Triadic fractions `Z[1/3]`.
    T,
    /// `𝕋[ω]`
    Tomega,
    /// `𝕋[ζ]`, ζ a primitive ninth root of unity.
    Tzeta,
    /// Dyadic fractions `Z[1/2]`.
    D,
    /// `𝔻[α]`
    Dalpha,
    /// `𝔻[α]` localised at `α`.
    A,
    /// The whole field.
    Q36,
}

impl RingTag {
    pub const ALL: [RingTag; 8] = [
        RingTag::Zomega,
        RingTag::T,
        RingTag::Tomega,
        RingTag::Tzeta,
        RingTag::D,
        RingTag::Dalpha,
        RingTag::A,
        RingTag::Q36,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RingTag::Zomega => "Zomega",
            RingTag::T => "T",
            RingTag::Tomega => "Tomega",
            RingTag::Tzeta => "Tzeta",
            RingTag::D => "D",
            RingTag::Dalpha => "Dalpha",
            RingTag::A => "A",
            RingTag::Q36 => "Q36",
        }
    }

    /// Real rings reject non-real inputs instead of answering `false`.
    pub fn is_real(self) -> bool {
        matches!(self, RingTag::D | RingTag::Dalpha | RingTag::A)
    }

    fn span(self) -> Option<&'static Span> {
        static ONE: OnceLock<Span> = OnceLock::new();
        static OMEGA: OnceLock<Span> = OnceLock::new();
        static ZETA: OnceLock<Span> = OnceLock::new();
        static ALPHA: OnceLock<Span> = OnceLock::new();
        Some(match self {
            RingTag::T | RingTag::D => ONE.get_or_init(|| Span::new(vec![Cyclo36::one()])),
            RingTag::Zomega | RingTag::Tomega => {
                OMEGA.get_or_init(|| Span::new(vec![Cyclo36::one(), Cyclo36::omega()]))
            }
            RingTag::Tzeta => ZETA.get_or_init(|| {
                let z = Cyclo36::zeta9();
                Span::new((0..6).map(|k| z.pow(k)).collect())
            }),
            RingTag::Dalpha | RingTag::A => ALPHA.get_or_init(|| {
                let a = Cyclo36::alpha();
                Span::new((0..6).map(|k| a.pow(k)).collect())
            }),
            RingTag::Q36 => return None,
        })
    }

    fn denominator_ok(self, d: &BigInt) -> bool {
        match self {
            RingTag::Zomega => d.is_one(),
            RingTag::T | RingTag::Tomega | RingTag::Tzeta => strip(d, 3).is_one(),
            RingTag::D | RingTag::Dalpha => strip(d, 2).is_one(),
            RingTag::A => strip(&strip(d, 2), 3).is_one(),
            RingTag::Q36 => true,
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown ring `{0}` (expected one of Zomega, T, Tomega, Tzeta, D, Dalpha, A, Q36)")]
pub struct RingTagParseError(pub String);

impl FromStr for RingTag {
    type Err = RingTagParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RingTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| RingTagParseError(s.to_string()))
    }
}

fn strip(d: &BigInt, p: u32) -> BigInt {
    let p = BigInt::from(p);
    let mut d = d.clone();
    while !d.is_zero() && (&d % &p).is_zero() {
        d /= &p;
    }
    d
}

/// The `Q`-span of a few independent field elements, with a precomputed
/// left inverse on a set of pivot coordinates.
struct Span {
    basis: Vec<Cyclo36>,
    pivots: Vec<usize>,
    inv: Vec<Vec<BigRational>>,
}

impl Span {
    fn new(basis: Vec<Cyclo36>) -> Self {
        let m = basis.len();
        // choose pivot coordinates by row reduction of the m × 12 matrix
        let mut rows: Vec<Vec<BigRational>> = basis.iter().map(|b| b.coeffs()).collect();
        let mut pivots = Vec::with_capacity(m);
        let mut r = 0;
        for col in 0..DEGREE {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let lead = rows[r][col].clone();
            for x in rows[r].iter_mut() {
                *x = &*x / &lead;
            }
            for i in 0..m {
                if i != r && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    for j in 0..DEGREE {
                        let v = &rows[r][j] * &f;
                        rows[i][j] -= v;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        assert_eq!(pivots.len(), m, "basis must be linearly independent");
        // square system S[i][j] = basis[j].coeff(pivots[i]), inverted by Gauss-Jordan
        let mut aug: Vec<Vec<BigRational>> = (0..m)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..m).map(|j| basis[j].coeff(pivots[i])).collect();
                row.extend((0..m).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for c in 0..m {
            let p = (c..m)
                .find(|&i| !aug[i][c].is_zero())
                .expect("pivot submatrix is invertible");
            aug.swap(c, p);
            let lead = aug[c][c].clone();
            for x in aug[c].iter_mut() {
                *x = &*x / &lead;
            }
            for i in 0..m {
                if i != c && !aug[i][c].is_zero() {
                    let f = aug[i][c].clone();
                    for j in 0..2 * m {
                        let v = &aug[c][j] * &f;
                        aug[i][j] -= v;
                    }
                }
            }
        }
        let inv = aug.into_iter().map(|row| row[m..].to_vec()).collect();
        Span { basis, pivots, inv }
    }

    fn coords(&self, x: &Cyclo36) -> Option<Vec<BigRational>> {
        let rhs: Vec<BigRational> = self.pivots.iter().map(|&p| x.coeff(p)).collect();
        let coords: Vec<BigRational> = self
            .inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(rhs.iter())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect();
        let rebuilt: Cyclo36 = self
            .basis
            .iter()
            .zip(coords.iter())
            .map(|(b, c)| b.scale(c))
            .sum();
        (rebuilt == *x).then_some(coords)
    }
}

/// Coordinates of `x` over the generating basis of `tag`'s ring
/// (`{1}`, `{1, ω}`, `{ζ⁰…ζ⁵}` or `{α⁰…α⁵}`), if `x` lies in that `Q`-span.
pub fn ring_coords(x: &Cyclo36, tag: RingTag) -> Option<Vec<BigRational>> {
    match tag.span() {
        Some(span) => span.coords(x),
        None => Some(x.coeffs()),
    }
}

/// Decides whether `x` lies in the ring named by `tag`.
pub fn in_ring(x: &Cyclo36, tag: RingTag) -> Result<bool, RingError> {
    if tag.is_real() && !x.is_real() {
        return Err(RingError::NotReal);
    }
    Ok(match ring_coords(x, tag) {
        Some(c) => c.iter().all(|q| tag.denominator_ok(q.denom())),
        None => false,
    })
}

/// Converts a real field element into `𝔸`, clearing powers of three with
/// `1/3 = u/α⁶` where `u = α⁶/3 = (32α⁴ − 12α² + 1)/64` is a dyadic unit.
pub fn to_alpha(x: &Cyclo36) -> Result<AlphaElem, RingError> {
    if !x.is_real() {
        return Err(RingError::NotReal);
    }
    let coords = ring_coords(x, RingTag::Dalpha).ok_or(RingError::NotReal)?;
    let den = coords
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let odd = strip(&den, 2);
    let rest = strip(&odd, 3);
    if !rest.is_one() {
        return Err(RingError::NotInA(den));
    }
    let mut b = 0u32;
    let mut t = odd;
    while !t.is_one() {
        t /= 3;
        b += 1;
    }
    let scale = BigRational::from_integer(BigInt::from(3).pow(b));
    let scaled: Vec<BigRational> = coords.iter().map(|q| q * &scale).collect();
    let mut value = DalphaElem::from_coeffs(&scaled).expect("3-part cleared");
    let u = DalphaElem::from_ints(&[1, 0, -12, 0, 32], 6);
    for _ in 0..b {
        value = &value * &u;
    }
    Ok(AlphaElem::new(value, 6 * b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn third() -> BigRational {
        BigRational::new(1.into(), 3.into())
    }

    #[test]
    fn zeta_not_in_tomega() {
        assert_eq!(in_ring(&Cyclo36::zeta9(), RingTag::Tomega), Ok(false));
        assert_eq!(in_ring(&Cyclo36::zeta9(), RingTag::Tzeta), Ok(true));
    }

    #[test]
    fn hadamard_prefactor_in_tomega() {
        let x = Cyclo36::sqrt3_times_i().scale(&third());
        assert_eq!(in_ring(&x, RingTag::Tomega), Ok(true));
        assert_eq!(in_ring(&x, RingTag::Zomega), Ok(false));
        assert_eq!(in_ring(&Cyclo36::omega(), RingTag::Zomega), Ok(true));
    }

    #[test]
    fn real_rings_reject_complex() {
        assert_eq!(
            in_ring(&Cyclo36::omega(), RingTag::D),
            Err(RingError::NotReal)
        );
        assert_eq!(in_ring(&Cyclo36::alpha(), RingTag::Dalpha), Ok(true));
        assert_eq!(in_ring(&Cyclo36::alpha(), RingTag::D), Ok(false));
        let x = Cyclo36::from_rational(&third());
        assert_eq!(in_ring(&x, RingTag::Dalpha), Ok(false));
        assert_eq!(in_ring(&x, RingTag::A), Ok(true));
        let y = Cyclo36::from_rational(&BigRational::new(1.into(), 5.into()));
        assert_eq!(in_ring(&y, RingTag::A), Ok(false));
        assert_eq!(in_ring(&y, RingTag::Q36), Ok(true));
    }

    #[test]
    fn to_alpha_examples() {
        let t = to_alpha(&Cyclo36::from_rational(&third())).unwrap();
        assert_eq!(t.denom_exp, 6);
        assert_eq!(t.value, DalphaElem::from_ints(&[1, 0, -12, 0, 32], 6));
        let z = to_alpha(&Cyclo36::zero()).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denom_exp, 0);
        let a2 = to_alpha(&Cyclo36::alpha().pow(2)).unwrap();
        assert_eq!(a2.denom_exp, 0);
        assert_eq!(a2.value, DalphaElem::from_ints(&[0, 0, 1], 0));
        assert_eq!(to_alpha(&Cyclo36::i()), Err(RingError::NotReal));
        let fifth = Cyclo36::from_rational(&BigRational::new(1.into(), 5.into()));
        assert!(matches!(to_alpha(&fifth), Err(RingError::NotInA(_))));
    }

    #[test]
    fn tag_names_roundtrip() {
        for t in RingTag::ALL {
            assert_eq!(t.to_string().parse::<RingTag>().unwrap(), t);
        }
    }

    fn arb_elem() -> impl Strategy<Value = Cyclo36> {
        (
            prop::collection::vec(-5i64..5, 12),
            0u32..3,
            0u32..3,
            0u32..2,
        )
            .prop_map(|(c, a, b, e)| {
                let den = BigInt::from(2).pow(a) * BigInt::from(3).pow(b) * BigInt::from(5).pow(e);
                let q: Vec<BigRational> = c
                    .into_iter()
                    .map(|n| BigRational::new(n.into(), den.clone()))
                    .collect();
                // project onto a few interesting subspaces as well
                Cyclo36::from_coeffs(&q)
            })
    }

    proptest! {
        #[test]
        fn inclusions(x in arb_elem(), k in 0usize..3) {
            let x = match k {
                0 => x,
                1 => {
                    let c = x.coeffs();
                    Cyclo36::from_rational(&c[0]) + Cyclo36::omega().scale(&c[1])
                }
                _ => {
                    let c = x.coeffs();
                    (0..6).map(|j| Cyclo36::zeta9().pow(j).scale(&c[j as usize])).sum()
                }
            };
            let z = in_ring(&x, RingTag::Zomega).unwrap();
            let t = in_ring(&x, RingTag::Tomega).unwrap();
            let tz = in_ring(&x, RingTag::Tzeta).unwrap();
            prop_assert!(!z || t);
            prop_assert!(!t || tz);
        }

        #[test]
        fn real_inclusions_and_roundtrip(x in arb_elem()) {
            let r = &x + &x.conj();
            let d = in_ring(&r, RingTag::D).unwrap();
            let da = in_ring(&r, RingTag::Dalpha).unwrap();
            let a = in_ring(&r, RingTag::A).unwrap();
            prop_assert!(!d || da);
            prop_assert!(!da || a);
            match to_alpha(&r) {
                Ok(v) => {
                    prop_assert!(a);
                    prop_assert_eq!(v.to_cyclo(), r);
                }
                Err(e) => {
                    prop_assert!(!a);
                    prop_assert!(matches!(e, RingError::NotInA(_)));
                }
            }
        }
    }
}
