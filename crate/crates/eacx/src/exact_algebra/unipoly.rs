use super::Rational;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense univariate polynomial over the integers, coefficients low to high.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `1 - t^k`, `k >= 1`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        assert!(k >= 1);
        let mut v = vec![BigInt::zero(); k + 1];
        v[0] = BigInt::one();
        v[k] = -BigInt::one();
        UniPoly { coeffs: v }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Self::new(v)
    }

    pub fn add_assign(&mut self, o: &UniPoly) {
        if self.coeffs.len() < o.coeffs.len() {
            self.coeffs.resize(o.coeffs.len(), BigInt::zero());
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &BigInt) -> UniPoly {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::new(v)
    }

    /// Exact quotient by `1 - t^k`, or `None` when it does not divide.
    pub fn div_one_minus_t_pow(&self, k: usize) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let d = self.coeffs.len() - 1;
        if d < k {
            return None;
        }
        // p = q (1 - t^k): q_j = p_j + q_{j-k}
        let mut q = vec![BigInt::zero(); d - k + 1];
        for j in 0..=d - k {
            let mut v = self.coeffs[j].clone();
            if j >= k {
                v += &q[j - k];
            }
            q[j] = v;
        }
        let q = UniPoly::new(q);
        (q.mul(&UniPoly::one_minus_t_pow(k)) == *self).then_some(q)
    }

    /// Quotient and remainder over the integers when the divisor's leading
    /// coefficient divides every step; `None` when a step leaves the integers.
    pub fn div_rem_exact(&self, d: &UniPoly) -> Option<(UniPoly, UniPoly)> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let (c, rem) = r[i].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] -= &c * dc;
            }
            q[i - dd] = c;
        }
        Some((UniPoly::new(q), UniPoly::new(r)))
    }

    /// Exact quotient, or `None` if `d` does not divide `self` in Z[t].
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        match self.div_rem_exact(d) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    fn pseudo_rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = r.leading();
            // r <- lc * r - c * t^(dr - dd) * d
            r = r.scale(&lc).sub(&d.scale(&c).shift(dr - dd));
        }
        r
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        UniPoly { coeffs: self.coeffs.iter().map(|x| x / &c).collect() }
    }

    /// Greatest common divisor in Z[t] with positive leading coefficient.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return o.primitive().scale(&o.content());
        }
        if o.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let cont = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&cont)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True when the polynomial is `c t^k` for some nonzero `c`.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (k, a.is_one()) {
                (0, _) => a.to_string(),
                (1, true) => "t".into(),
                (1, false) => format!("{a}*t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{a}*t^{k}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Quotient of integer polynomials kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniRationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl UniRationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::BadInput("zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        UniRationalFunction { num: p, den: UniPoly::one() }
    }

    fn reduced(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return UniRationalFunction { num, den: UniPoly::one() };
        }
        // fast path: the common case in localization sums is exact division
        if let Some(q) = num.div_exact(&den) {
            return UniRationalFunction { num: q, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap());
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.scale_div(&c);
            den = den.scale_div(&c);
        }
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        UniRationalFunction { num, den }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::reduced(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        UniRationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::reduced(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    /// Inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Denominator is a monomial, i.e. the function is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn eval_at_one(&self) -> Result<Rational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(Rational::new(self.num.eval_at_one(), d))
    }
}

/// Value at t = 1 of a reduced rational function.
pub fn rational_function_eval_at_one(f: &UniRationalFunction) -> Result<Rational> {
    f.eval_at_one()
}

impl UniPoly {
    fn scale_div(&self, c: &BigInt) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rat;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn eval_at_one_examples() {
        let f = UniRationalFunction::new(p(&[1, 0, -1]), p(&[1, -1])).unwrap();
        assert_eq!(f.eval_at_one().unwrap(), rat(2));
        let f = UniRationalFunction::new(p(&[5]), p(&[1])).unwrap();
        assert_eq!(rational_function_eval_at_one(&f).unwrap(), rat(5));
        let f = UniRationalFunction::new(p(&[1, 0, 0, -1]), p(&[1, -1])).unwrap();
        assert_eq!(f.eval_at_one().unwrap(), rat(3));
        assert_eq!(f.num(), &p(&[1, 1, 1]));
    }

    #[test]
    fn pole_at_one_detected() {
        let f = UniRationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(f.eval_at_one(), Err(Error::PoleAtOne));
    }

    #[test]
    fn reduction_removes_common_factor() {
        // (t^2 - 1)(2t + 4) / ((t - 1)(6t + 2))
        let a = p(&[-1, 0, 1]).mul(&p(&[4, 2]));
        let b = p(&[-1, 1]).mul(&p(&[2, 6]));
        let f = UniRationalFunction::new(a, b).unwrap();
        // (t + 1)(t + 2) / (3t + 1)
        assert_eq!(f.num(), &p(&[2, 3, 1]));
        assert_eq!(f.den(), &p(&[1, 3]));
        let again = UniRationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn localization_sum_two_points() {
        // 1/(1 - t) + 1/(1 - t^-1) = 1
        let a = UniRationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let b = UniRationalFunction::new(p(&[0, 1]), p(&[-1, 1])).unwrap();
        let s = a.add(&b);
        assert_eq!(s.num(), &p(&[1]));
        assert_eq!(s.den(), &p(&[1]));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        let a = UniPoly::one_minus_t_pow(6);
        let b = UniPoly::one_minus_t_pow(4);
        // gcd = 1 - t^2 up to sign
        assert_eq!(a.gcd(&b), p(&[-1, 0, 1]));
        assert_eq!(a.div_one_minus_t_pow(3).unwrap(), p(&[1, 0, 0, 1]));
        assert!(a.div_one_minus_t_pow(4).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "1 - 2*t + t^3");
    }
}
