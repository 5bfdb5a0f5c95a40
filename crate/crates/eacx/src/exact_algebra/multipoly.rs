use super::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse Laurent polynomial with integer coefficients over named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedPolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl MultigradedPolynomial {
    pub fn zero(vars: &[String]) -> Self {
        MultigradedPolynomial { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &[String]) -> Self {
        Self::monomial(vars, vec![0; vars.len()], BigInt::one())
    }

    pub fn constant(vars: &[String], c: BigInt) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &[String], exp: Vec<i64>, c: BigInt) -> Self {
        assert_eq!(exp.len(), vars.len());
        let mut p = Self::zero(vars);
        p.add_term(exp, c);
        p
    }

    pub fn var(vars: &[String], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, BigInt::one())
    }

    /// Variable names from string slices.
    pub fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[i64]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: BigInt) {
        debug_assert_eq!(exp.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, o: &Self) {
        assert_eq!(self.vars, o.vars, "grading signatures differ");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        MultigradedPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c * k);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut r = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.vars), |acc, _| acc.mul(self))
    }

    /// Substitutes variable `i` by the monomial `images[i]` (an exponent
    /// vector over `target`).
    pub fn coarsen(&self, target: &[String], images: &[Vec<i64>]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "image missing for some variable");
        assert!(images.iter().all(|m| m.len() == target.len()));
        let mut r = Self::zero(target);
        for (e, c) in &self.terms {
            let mut out = vec![0i64; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    for (o, &m) in out.iter_mut().zip(&images[i]) {
                        *o += k * m;
                    }
                }
            }
            r.add_term(out, c.clone());
        }
        r
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(a, b);
            r.add_term(e, c.clone());
        }
        r
    }

    pub fn total_degree(exp: &[i64]) -> i64 {
        exp.iter().sum()
    }

    /// Terms of least total degree.
    pub fn lowest_degree_part(&self) -> Self {
        let Some(d) = self.terms.keys().map(|e| Self::total_degree(e)).min() else {
            return self.clone();
        };
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if Self::total_degree(e) == d {
                r.add_term(e.clone(), c.clone());
            }
        }
        r
    }

    /// Evaluates at rational values (zero values need nonnegative exponents).
    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len());
        let mut s = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for (v, &k) in values.iter().zip(e) {
                if k >= 0 {
                    t *= num_traits::pow(v.clone(), k as usize);
                } else {
                    t /= num_traits::pow(v.clone(), (-k) as usize);
                }
            }
            s += t;
        }
        s
    }

    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Keeps only the variables listed, in that order; the others are set to 1.
    pub fn project(&self, keep: &[usize]) -> Self {
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let mut r = Self::zero(&vars);
        for (e, c) in &self.terms {
            r.add_term(keep.iter().map(|&i| e[i]).collect(), c.clone());
        }
        r
    }
}

impl fmt::Display for MultigradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mut mono = Vec::new();
            for (v, &p) in self.vars.iter().zip(e) {
                match p {
                    0 => {}
                    1 => mono.push(v.clone()),
                    _ => mono.push(format!("{v}^{p}")),
                }
            }
            let a = c.abs();
            let body = match (mono.is_empty(), a.is_one()) {
                (true, _) => a.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{a}*{}", mono.join("*")),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                _ => write!(f, " {sign} {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fine2() -> Vec<String> {
        MultigradedPolynomial::names(&["T1_1", "T1_2", "T2_1", "T2_2"])
    }

    #[test]
    fn coarsen_examples() {
        let v = fine2();
        // 1 - T_{1,2} T_{2,1}
        let p = MultigradedPolynomial::one(&v)
            .sub(&MultigradedPolynomial::monomial(&v, vec![0, 1, 1, 0], BigInt::one()));
        let z2 = MultigradedPolynomial::names(&["U1", "U2"]);
        let q = p.coarsen(&z2, &[vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]]);
        assert_eq!(q.to_string(), "1 - U1*U2");
        let zn = MultigradedPolynomial::names(&["T1", "T2"]);
        let q = p.coarsen(&zn, &[vec![1, 0], vec![0, 1], vec![1, 0], vec![0, 1]]);
        assert_eq!(q.to_string(), "1 - T1*T2");
        let z = MultigradedPolynomial::names(&["U"]);
        let r = p
            .coarsen(&z2, &[vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]])
            .coarsen(&z, &[vec![1], vec![1]]);
        assert_eq!(r.to_string(), "1 - U^2");
    }

    #[test]
    fn zero_terms_are_dropped() {
        let v = MultigradedPolynomial::names(&["x"]);
        let x = MultigradedPolynomial::var(&v, 0);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.sub(&x).len(), 0);
    }

    #[test]
    fn laurent_exponents() {
        let v = MultigradedPolynomial::names(&["U"]);
        let inv = MultigradedPolynomial::monomial(&v, vec![-1], BigInt::one());
        let u = MultigradedPolynomial::var(&v, 0);
        assert_eq!(inv.mul(&u), MultigradedPolynomial::one(&v));
    }
}
