//! Exact arithmetic in the cyclotomic field Q(zeta8) = Q[x]/(x^4+1).
//!
//! Every scalar in the engine lives here: the imaginary unit is zeta8^2,
//! and the admissible ribbon parameters beta are powers of zeta8.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Error;

/// Element of Q(zeta8), stored as `c0 + c1*z + c2*z^2 + c3*z^3` with `z^4 = -1`.
///
/// The coefficient vector is the canonical form: two values are equal iff
/// their coefficient vectors agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    coeffs: [BigRational; 4],
}

fn br_zero() -> BigRational {
    BigRational::zero()
}

fn br_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CycScalar {
    pub fn zero() -> Self {
        CycScalar {
            coeffs: [br_zero(), br_zero(), br_zero(), br_zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = br_int(n);
        s
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let mut s = Self::zero();
        s.coeffs[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
        s
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = r;
        s
    }

    pub fn from_coeffs(coeffs: [BigRational; 4]) -> Self {
        CycScalar { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    /// The imaginary unit i = zeta8^2.
    pub fn i() -> Self {
        Self::zeta8_pow(2)
    }

    /// zeta8^k for any integer k (k is reduced mod 8, with zeta8^4 = -1).
    pub fn zeta8_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut s = Self::zero();
        if k < 4 {
            s.coeffs[k] = br_int(1);
        } else {
            s.coeffs[k - 4] = br_int(-1);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True iff the value lies in Q (only the constant coefficient may be non-zero).
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Invert by solving (mult-by-self) * x = 1 in the 4-dimensional Q-basis.
        // Column j of the multiplication matrix is self * z^j.
        let cols: [CycScalar; 4] = [
            self.clone(),
            self * &Self::zeta8_pow(1),
            self * &Self::zeta8_pow(2),
            self * &Self::zeta8_pow(3),
        ];
        // Gaussian elimination on the 4x5 augmented system.
        let mut m = vec![vec![br_zero(); 5]; 4];
        for (j, col) in cols.iter().enumerate() {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = col.coeffs[i].clone();
            }
        }
        m[0][4] = br_int(1);
        let mut row = 0;
        for col in 0..4 {
            let Some(p) = (row..4).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let pivot = m[row][col].clone();
            for x in m[row].iter_mut() {
                *x /= pivot.clone();
            }
            for r in 0..4 {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    let pivot_row = m[row].clone();
                    for (x, pv) in m[r].iter_mut().zip(pivot_row.iter()) {
                        *x -= pv * &factor;
                    }
                }
            }
            row += 1;
        }
        if row < 4 {
            // Cannot happen in a field once self != 0.
            return Err(Error::DivisionByZero);
        }
        let mut out = Self::zero();
        for (c, row) in out.coeffs.iter_mut().zip(m.iter()) {
            *c = row[4].clone();
        }
        Ok(out)
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self * &Self::from_int(s)
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut e = e as u64;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Parse an exact scalar literal: either a plain rational (`2`, `-3/4`)
    /// or a parenthesised coefficient 4-tuple `(c0,c1,c2,c3)` over the basis
    /// `1, z, z^2, z^3`.
    pub fn parse(s: &str) -> Result<Self, String> {
        fn rat(s: &str) -> Result<BigRational, String> {
            use std::str::FromStr;
            let s = s.trim();
            if let Some((num, den)) = s.split_once('/') {
                let n = BigInt::from_str(num.trim()).map_err(|e| e.to_string())?;
                let d = BigInt::from_str(den.trim()).map_err(|e| e.to_string())?;
                if d.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(BigRational::new(n, d))
            } else {
                Ok(BigRational::from_integer(
                    BigInt::from_str(s).map_err(|e| e.to_string())?,
                ))
            }
        }
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 4 {
                return Err(format!("expected 4 coefficients, got {}", parts.len()));
            }
            let mut out = Self::zero();
            for (c, p) in out.coeffs.iter_mut().zip(parts) {
                *c = rat(p)?;
            }
            Ok(out)
        } else {
            Ok(Self::from_rational(rat(s)?))
        }
    }

    /// Render each coefficient as an exact rational string, e.g. `["1/2","0","-3","0"]`.
    pub fn coeff_strings(&self) -> [String; 4] {
        let f = |r: &BigRational| {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        };
        [
            f(&self.coeffs[0]),
            f(&self.coeffs[1]),
            f(&self.coeffs[2]),
            f(&self.coeffs[3]),
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let s = self.coeff_strings();
        serde_json::json!([s[0], s[1], s[2], s[3]])
    }
}

impl fmt::Display for CycScalar {
    /// Pretty form: values in Q(i) print with `i`, otherwise with `z` = zeta8.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rat = |r: &BigRational| {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        };
        let mut parts: Vec<String> = Vec::new();
        let in_qi = self.coeffs[1].is_zero() && self.coeffs[3].is_zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sym = match (k, in_qi) {
                (0, _) => String::new(),
                (2, true) => "i".to_string(),
                (1, _) => "z".to_string(),
                (k, _) => format!("z^{k}"),
            };
            let body = if sym.is_empty() {
                rat(c)
            } else if c.is_one() {
                sym
            } else if (-c.clone()).is_one() {
                format!("-{sym}")
            } else {
                format!("{}*{}", rat(c), sym)
            };
            if parts.is_empty() {
                parts.push(body);
            } else if let Some(stripped) = body.strip_prefix('-') {
                parts.push(format!(" - {stripped}"));
            } else {
                parts.push(format!(" + {body}"));
            }
        }
        write!(f, "{}", parts.concat())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = -c.clone();
        }
        out
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        // Fast paths: zero and purely rational factors dominate in practice.
        if self.is_zero() || rhs.is_zero() {
            return CycScalar::zero();
        }
        if self.is_rational() {
            let r = &self.coeffs[0];
            let mut out = rhs.clone();
            for c in out.coeffs.iter_mut() {
                if !c.is_zero() {
                    *c *= r;
                }
            }
            return out;
        }
        if rhs.is_rational() {
            return rhs * self;
        }
        let mut out = CycScalar::zero();
        for i in 0..4 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let p = &self.coeffs[i] * &rhs.coeffs[j];
                let k = i + j;
                if k < 4 {
                    out.coeffs[k] += p;
                } else {
                    out.coeffs[k - 4] -= p;
                }
            }
        }
        out
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: CycScalar) -> CycScalar {
        &self * &rhs
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = &*self * rhs;
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: CycScalar) -> CycScalar {
        &self + &rhs
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: CycScalar) -> CycScalar {
        &self - &rhs
    }
}

/// Choice of the ribbon parameter: beta = zeta8^k for the algebra on `n` fermion pairs.
///
/// Admissibility means beta^4 = (-1)^n, i.e. k and n have the same parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BetaChoice {
    pub n: usize,
    pub k: u8,
}

impl BetaChoice {
    pub fn new(n: usize, k: u8) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidBeta {
                n,
                k,
                reason: "the number of fermion pairs must be positive".into(),
            });
        }
        if k > 7 {
            return Err(Error::InvalidBeta {
                n,
                k,
                reason: "beta exponent must lie in 0..=7".into(),
            });
        }
        if (k as usize) % 2 != n % 2 {
            return Err(Error::InvalidBeta {
                n,
                k,
                reason: "beta^4 = (-1)^N requires the exponent parity to match N".into(),
            });
        }
        Ok(BetaChoice { n, k })
    }

    /// The four admissible exponents for a given parity of `n`.
    pub fn admissible_exponents(n: usize) -> [u8; 4] {
        if n.is_multiple_of(2) {
            [0, 2, 4, 6]
        } else {
            [1, 3, 5, 7]
        }
    }
}

/// beta = zeta8^k, validated against beta^4 = (-1)^n.
pub fn make_beta(choice: BetaChoice) -> CycScalar {
    CycScalar::zeta8_pow(choice.k as i64)
}
