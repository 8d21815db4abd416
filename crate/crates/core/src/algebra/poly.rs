use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::{Error, Result};

/// Exponent vector, one entry per variable of the owning polynomial.
pub type Exponents = Vec<i64>;

/// Sparse Laurent polynomial with rational coefficients in named variables.
///
/// The variable list is kept sorted and free of duplicates. A polynomial may
/// declare variables that none of its terms use; binary operations work over
/// the sorted union of both variable lists. No stored coefficient is zero.
#[derive(Clone, Debug, Default)]
pub struct LaurentPolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `coeff * Π name^exp`. Repeated names multiply.
    pub fn monomial(coeff: Rational, powers: &[(&str, i64)]) -> Self {
        let mut vars: Vec<String> = powers.iter().map(|(v, _)| v.to_string()).collect();
        vars.sort();
        vars.dedup();
        let mut exps = vec![0; vars.len()];
        for (v, e) in powers {
            let idx = vars.binary_search_by(|x| x.as_str().cmp(v)).unwrap();
            exps[idx] += e;
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Self { vars, terms }
    }

    /// Builds a polynomial from exponent vectors over `vars` (in the given order).
    /// Duplicate exponent vectors are summed and zero coefficients dropped.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&a, &b| vars[a].as_ref().cmp(vars[b].as_ref()));
        let sorted: Vec<String> = order
            .iter()
            .map(|&i| vars[i].as_ref().to_string())
            .collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                found: sorted.len() - 1,
            });
        }
        let mut out = Self {
            vars: sorted,
            terms: BTreeMap::new(),
        };
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: exps.len(),
                });
            }
            let key: Exponents = order.iter().map(|&i| exps[i]).collect();
            out.add_term(key, c);
        }
        Ok(out)
    }

    /// Declares additional variables without changing the value.
    pub fn with_vars<S: AsRef<str>>(&self, extra: &[S]) -> Self {
        let mut names: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        names.sort();
        names.dedup();
        let target = union(&self.vars, &names);
        Self {
            terms: self.realign(&target),
            vars: target,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Variables that occur with a nonzero exponent in some term.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] != 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Same value with the unused variables dropped.
    pub fn trimmed(&self) -> Self {
        let used = self.used_vars();
        let idx: Vec<usize> = used
            .iter()
            .map(|v| self.vars.binary_search(v).unwrap())
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (idx.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        Self { vars: used, terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lexicographic order of their exponents.
    pub fn grlex_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| grlex(b.0, a.0));
        out
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.vars.len()])
    }

    /// Coefficient of the exponent vector `exps` (over this polynomial's variables).
    pub fn coefficient(&self, exps: &[i64]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `Π name^exp`; names not declared here must have exponent 0.
    pub fn coefficient_of(&self, powers: &[(&str, i64)]) -> Rational {
        let mut exps = vec![0; self.vars.len()];
        for (v, e) in powers {
            match self.vars.binary_search_by(|x| x.as_str().cmp(v)) {
                Ok(i) => exps[i] += e,
                Err(_) if *e == 0 => {}
                Err(_) => return Rational::zero(),
            }
        }
        self.coefficient(&exps)
    }

    /// Largest exponent sum over the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn as_monomial(&self) -> Option<(&Exponents, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Integer power. Negative powers are only defined for monomials.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let (e, c) = self.as_monomial().ok_or(Error::NotInvertible)?;
            let inv = Self {
                vars: self.vars.clone(),
                terms: core::iter::once((e.iter().map(|x| -x).collect(), c.recip())).collect(),
            };
            return inv.pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Self::one().with_vars(&self.vars);
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Replaces each bound variable by a polynomial. A variable that occurs
    /// with a negative exponent must be bound to a monomial.
    pub fn substitute(&self, bindings: &BTreeMap<String, LaurentPolynomial>) -> Result<Self> {
        let mut result_vars: Vec<String> = self
            .vars
            .iter()
            .filter(|v| !bindings.contains_key(*v))
            .cloned()
            .collect();
        for v in &self.vars {
            if let Some(r) = bindings.get(v) {
                result_vars = union(&result_vars, &r.vars);
            }
        }
        let mut out = Self::zero().with_vars(&result_vars);
        for (exps, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for (v, &e) in self.vars.iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                let factor = match bindings.get(v) {
                    Some(r) => r
                        .pow(e)
                        .map_err(|_| Error::NonInvertibleSubstitution { var: v.clone() })?,
                    None => Self::monomial(Rational::one(), &[(v.as_str(), e)]),
                };
                acc = &acc * &factor;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Substitutes a single variable.
    pub fn substitute_one(&self, var: &str, value: &LaurentPolynomial) -> Result<Self> {
        let mut b = BTreeMap::new();
        b.insert(var.to_string(), value.clone());
        self.substitute(&b)
    }

    /// Specializes variables to rational values.
    pub fn evaluate(&self, values: &[(&str, Rational)]) -> Result<Self> {
        let b = values
            .iter()
            .map(|(v, x)| (v.to_string(), Self::constant(x.clone())))
            .collect();
        self.substitute(&b)
    }

    /// Partial derivative; the variable list is kept.
    pub fn derivative(&self, var: &str) -> Self {
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        let Ok(i) = self.vars.binary_search_by(|x| x.as_str().cmp(var)) else {
            return out;
        };
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// Division with remainder by a single divisor in graded-lex order.
    /// Both operands must be ordinary polynomials (no negative exponents).
    pub fn divide_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::NotInvertible);
        }
        let has_negative = |p: &Self| p.terms.keys().any(|e| e.iter().any(|&x| x < 0));
        if has_negative(self) || has_negative(divisor) {
            return Err(Error::NotPolynomial);
        }
        let vars = union(&self.vars, &divisor.vars);
        let g = Self {
            terms: divisor.realign(&vars),
            vars: vars.clone(),
        };
        let (lead_e, lead_c) = g
            .terms
            .iter()
            .max_by(|a, b| grlex(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut p = Self {
            terms: self.realign(&vars),
            vars: vars.clone(),
        };
        let mut q = Self::zero().with_vars(&vars);
        let mut r = Self::zero().with_vars(&vars);
        while let Some((e, c)) = p
            .terms
            .iter()
            .max_by(|a, b| grlex(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if e.iter().zip(&lead_e).all(|(a, b)| a >= b) {
                let qe: Exponents = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
                let qt = Self {
                    vars: vars.clone(),
                    terms: core::iter::once((qe, &c / &lead_c)).collect(),
                };
                p = &p - &(&qt * &g);
                q = &q + &qt;
            } else {
                p.terms.remove(&e);
                r.add_term(e, c);
            }
        }
        Ok((q, r))
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// Term map re-keyed over `target`, which must contain `self.vars`.
    fn realign(&self, target: &[String]) -> BTreeMap<Exponents, Rational> {
        if target == self.vars.as_slice() {
            return self.terms.clone();
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .binary_search(v)
                    .expect("target contains every variable")
            })
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; target.len()];
                for (k, &i) in idx.iter().enumerate() {
                    ne[i] = e[k];
                }
                (ne, c.clone())
            })
            .collect()
    }
}

fn union(a: &[String], b: &[String]) -> Vec<String> {
    let mut out: Vec<String> = a.iter().chain(b).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// Graded-lexicographic comparison: total degree first, then lexicographic.
pub(crate) fn grlex(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl PartialEq for LaurentPolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let vars = union(&self.vars, &other.vars);
        self.realign(&vars) == other.realign(&vars)
    }
}

impl Eq for LaurentPolynomial {}

impl From<Rational> for LaurentPolynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

fn combine(a: &LaurentPolynomial, b: &LaurentPolynomial, sign: bool) -> LaurentPolynomial {
    let vars = union(&a.vars, &b.vars);
    let mut out = LaurentPolynomial {
        terms: a.realign(&vars),
        vars: vars.clone(),
    };
    for (e, c) in b.realign(&vars) {
        out.add_term(e, if sign { c } else { -c });
    }
    out
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        combine(self, rhs, true)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        combine(self, rhs, false)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let vars = union(&self.vars, &rhs.vars);
        let a = self.realign(&vars);
        let b = rhs.realign(&vars);
        let mut out = LaurentPolynomial {
            vars,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

/// `coeff * var^exp * ...` terms joined by ` + `, highest graded-lex term first.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.grlex_terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}", c)?;
            for (v, x) in self.vars.iter().zip(e) {
                if *x != 0 {
                    write!(f, " * {}^{}", v, x)?;
                }
            }
        }
        Ok(())
    }
}

/// Sign-aware rendering (`x - 2 * y`), used for human-readable output only.
pub struct Pretty<'a>(pub &'a LaurentPolynomial);

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.0;
        if p.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in p.grlex_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mono: Vec<String> = p
                .vars
                .iter()
                .zip(e)
                .filter(|(_, x)| **x != 0)
                .map(|(v, x)| {
                    if *x == 1 {
                        v.clone()
                    } else {
                        alloc::format!("{}^{}", v, x)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                f.write_str(&mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn x() -> LaurentPolynomial {
        LaurentPolynomial::var("x")
    }
    fn y() -> LaurentPolynomial {
        LaurentPolynomial::var("y")
    }

    fn w0() -> LaurentPolynomial {
        &(&x() + &y()) + &LaurentPolynomial::monomial(rat(1), &[("y", 2), ("x", -1)])
    }

    #[test]
    fn cancellation() {
        let s = &(&x() + &y()) + &(-&y());
        assert_eq!(s, x());
        assert_eq!(s.num_terms(), 1);
    }

    #[test]
    fn selfdual_potential_has_three_terms() {
        assert_eq!(w0().num_terms(), 3);
    }

    #[test]
    fn family_endpoint() {
        let t = LaurentPolynomial::var("t");
        let one_minus_t = &LaurentPolynomial::one() - &t;
        let wt = &(&x().scale(&rat(2)) * &one_minus_t) + &(&t * &w0());
        let at_one = wt.evaluate(&[("t", rat(1))]).unwrap();
        assert_eq!(at_one, w0());
    }

    #[test]
    fn transition_substitution() {
        let p = &x() * &y();
        let z = LaurentPolynomial::var("z");
        let u = LaurentPolynomial::var("u");
        let t = LaurentPolynomial::var("t");
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), z.pow(-1).unwrap());
        b.insert("y".to_string(), &(&z.pow(2).unwrap() * &u) + &(&t * &z));
        let got = p.substitute(&b).unwrap();
        assert_eq!(got, &(&z * &u) + &t);
    }

    #[test]
    fn identity_substitution() {
        assert_eq!(x().substitute_one("x", &x()).unwrap(), x());
    }

    #[test]
    fn negative_power_of_binomial_is_rejected() {
        let p = x().pow(-1).unwrap();
        let err = p
            .substitute_one("x", &(&x() + &LaurentPolynomial::one()))
            .unwrap_err();
        assert_eq!(
            err,
            Error::NonInvertibleSubstitution {
                var: "x".to_string()
            }
        );
    }

    #[test]
    fn adding_zero_keeps_representation() {
        let p = w0();
        let q = &p + &LaurentPolynomial::zero();
        assert_eq!(q.vars, p.vars);
        assert_eq!(q.terms, p.terms);
    }

    #[test]
    fn unused_variables_do_not_affect_equality() {
        let a = x().scale(&rat(2));
        let b = a.with_vars(&["y"]);
        assert_eq!(a, b);
        assert_eq!(b.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(b.used_vars(), alloc::vec!["x".to_string()]);
        assert_eq!(b.trimmed().vars(), &["x".to_string()]);
    }

    #[test]
    fn display_is_graded_lex() {
        let p = &w0() + &LaurentPolynomial::constant(ratio(-1, 2));
        assert_eq!(p.to_string(), "1 * x^1 + 1 * y^1 + 1 * x^-1 * y^2 + -1/2");
        assert_eq!(Pretty(&p).to_string(), "x + y + x^-1*y^2 - 1/2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn derivative_and_degree() {
        let p = w0();
        let dx = p.derivative("x");
        let expected = &LaurentPolynomial::one()
            - &LaurentPolynomial::monomial(rat(1), &[("y", 2), ("x", -2)]);
        assert_eq!(dx, expected);
        assert_eq!(p.total_degree(), Some(1));
        assert_eq!(LaurentPolynomial::zero().total_degree(), None);
    }

    #[test]
    fn division_by_single_divisor() {
        // (ab - 1)(ab + 1) divided by ab - 1
        let a = LaurentPolynomial::var("a");
        let b = LaurentPolynomial::var("b");
        let one = LaurentPolynomial::one();
        let d = &(&a * &b) - &one;
        let f = &d * &(&(&a * &b) + &one);
        let (q, r) = f.divide_rem(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, &(&a * &b) + &one);
        let (_, r2) = (&f + &a).divide_rem(&d).unwrap();
        assert_eq!(r2, a);
        assert_eq!(
            x().pow(-1).unwrap().divide_rem(&d).unwrap_err(),
            Error::NotPolynomial
        );
    }

    #[test]
    fn from_terms_sorts_variables() {
        let p = LaurentPolynomial::from_terms(&["y", "x"], [(alloc::vec![2, -1], rat(3))]).unwrap();
        assert_eq!(
            p,
            LaurentPolynomial::monomial(rat(3), &[("y", 2), ("x", -1)])
        );
        assert!(LaurentPolynomial::from_terms(&["x", "x"], core::iter::empty()).is_err());
        assert!(LaurentPolynomial::from_terms(&["x"], [(alloc::vec![1, 1], rat(1))]).is_err());
    }

    #[test]
    fn coefficient_lookup() {
        let p = w0();
        assert_eq!(p.coefficient_of(&[("x", -1), ("y", 2)]), rat(1));
        assert_eq!(p.coefficient_of(&[("z", 1)]), rat(0));
        assert_eq!(p.constant_term(), rat(0));
    }
}
