//! Exhaustive rational-root search for integer-clearable polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn eval(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    coeffs.iter().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    })
}

/// All distinct rational roots of `c₀xⁿ + c₁xⁿ⁻¹ + … + cₙ` (highest degree
/// first), sorted ascending. Candidates are `±p/q` with `p | cₙ`, `q | c₀`
/// after clearing denominators.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let first = coeffs.iter().position(|c| !c.is_zero());
    let Some(first) = first else {
        return Vec::new();
    };
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs[first..]
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    if ints.len() > 1 && ints.last().is_some_and(Zero::is_zero) {
        roots.push(BigRational::zero());
        while ints.len() > 1 && ints.last().is_some_and(Zero::is_zero) {
            ints.pop();
        }
    }
    if ints.len() > 1 {
        let lead = &ints[0];
        let constant = &ints[ints.len() - 1];
        let ps = divisors(constant);
        let qs = divisors(lead);
        for p in &ps {
            for q in &qs {
                for sign in [1, -1] {
                    let cand = BigRational::new(p * sign, q.clone());
                    if eval(&ints, &cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// The smallest rational root of `ax³ + bx² + cx + d`, if any.
pub fn has_rational_root(cubic: &[BigRational; 4]) -> Option<BigRational> {
    assert!(!cubic[0].is_zero(), "leading coefficient must be nonzero");
    rational_roots(cubic).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: [i64; 4]) -> [BigRational; 4] {
        v.map(|n| BigRational::from_integer(n.into()))
    }

    #[test]
    fn examples() {
        assert_eq!(has_rational_root(&q([1, 0, -3, 1])), None);
        assert_eq!(
            has_rational_root(&q([1, 0, 0, -1])),
            Some(BigRational::one())
        );
        let r = rational_roots(&q([1, -6, 11, -6]));
        assert_eq!(
            r,
            vec![1, 2, 3]
                .into_iter()
                .map(|n| BigRational::from_integer(n.into()))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn fractional_and_zero_roots() {
        // (2x - 1)(x + 3) x = 2x³ + 5x² - 3x
        let r = rational_roots(&q([2, 5, -3, 0]));
        assert_eq!(
            r,
            vec![
                BigRational::from_integer((-3).into()),
                BigRational::zero(),
                BigRational::new(1.into(), 2.into())
            ]
        );
        // rational coefficients: x³/3 - 1/3
        let c = [
            BigRational::new(1.into(), 3.into()),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::new((-1).into(), 3.into()),
        ];
        assert_eq!(has_rational_root(&c), Some(BigRational::one()));
    }
}
