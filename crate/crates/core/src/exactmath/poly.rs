//! Sparse multivariate polynomials over ℚ in the variables `T1, T2, ...`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::rational::Rat;

/// Values for polynomial variables, keyed by variable index (`0` is `T1`).
pub type Assignment = BTreeMap<usize, Rat>;

/// Exponent vector. Stored without trailing zeros so that equality and
/// hashing do not depend on how many variables the ambient ring has.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Monomial {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Monomial {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of variables actually occurring (index of last nonzero + 1).
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        Monomial(
            (0..len)
                .map(|i| self.exponent(i) + other.exponent(i))
                .collect(),
        )
    }
}

// Graded lexicographic: total degree first, then exponent of T1, T2, ...
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            (0..len)
                .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables with exact rational coefficients.
#[derive(Clone, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> MPoly {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    /// The variable `T{i+1}`.
    pub fn var(i: usize) -> MPoly {
        let mut p = MPoly {
            nvars: i + 1,
            terms: BTreeMap::new(),
        };
        p.terms.insert(Monomial::var(i), Rat::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(nvars: usize, terms: I) -> MPoly {
        let mut p = MPoly {
            nvars,
            terms: BTreeMap::new(),
        };
        for (m, c) in terms {
            p.nvars = p.nvars.max(m.support_len());
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has total degree `deg` (vacuously for zero).
    pub fn is_homogeneous_of(&self, deg: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == deg)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly {
                nvars: self.nvars,
                terms: BTreeMap::new(),
            };
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at the given point; every variable that occurs must be assigned.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Rat> {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = assignment.get(&i).ok_or(Error::MissingVariable(i))?;
                term = &term * &v.pow(e);
            }
            total += &term;
        }
        Ok(total)
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &MPoly) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (mut acc, other) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        acc.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), c);
        }
        acc
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut acc = MPoly {
            nvars: self.nvars.max(rhs.nvars),
            terms: BTreeMap::new(),
        };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                acc.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        acc
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("T{}", i + 1)
                        } else {
                            format!("T{}^{}", i + 1, e)
                        }
                    })
                    .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl FromStr for MPoly {
    type Err = Error;

    /// Parses sums and products of rationals and variables `T`, `T1`, `T2`, ...
    /// with `^` for nonnegative integer powers; `/` only by nonzero constants.
    fn from_str(s: &str) -> Result<MPoly> {
        let mut p = PolyParser { src: s, pos: 0 };
        let poly = p.sum()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("end of input"));
        }
        Ok(poly)
    }
}

struct PolyParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Format(format!(
            "bad polynomial {:?} at byte {}: expected {what}",
            self.src, self.pos
        ))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<MPoly> {
        let mut acc = if self.eat('-') {
            -&self.product()?
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self
                    .power()?
                    .as_constant()
                    .filter(|c| !c.is_zero())
                    .ok_or_else(|| self.err("a nonzero constant divisor"))?;
                acc = acc.scale(&d.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let e = self.digits().ok_or_else(|| self.err("an exponent"))?;
            let e: u32 = e.parse().map_err(|_| self.err("a small exponent"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn atom(&mut self) -> Result<MPoly> {
        self.skip_ws();
        if self.eat('(') {
            let inner = self.sum()?;
            if !self.eat(')') {
                return Err(self.err("')'"));
            }
            return Ok(inner);
        }
        self.skip_ws();
        if self.peek() == Some('T') {
            self.pos += 1;
            let idx = match self.digits() {
                None => 0,
                Some(d) => {
                    let k: usize = d.parse().map_err(|_| self.err("a variable index"))?;
                    if k == 0 {
                        return Err(self.err("a variable index >= 1"));
                    }
                    k - 1
                }
            };
            return Ok(MPoly::var(idx));
        }
        let d = self
            .digits()
            .ok_or_else(|| self.err("a number, variable or '('"))?;
        let n: Rat = d.parse()?;
        Ok(MPoly::constant(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(i: usize) -> MPoly {
        MPoly::var(i)
    }

    #[test]
    fn substitute_example() {
        // T1^2 T2 + 3 at (2, 1/2) = 5
        let p = &(&t(0).pow(2) * &t(1)) + &MPoly::constant(Rat::from_int(3));
        let a: Assignment = [(0, Rat::from_int(2)), (1, Rat::new(1, 2))].into();
        assert_eq!(p.substitute(&a).unwrap(), Rat::from_int(5));
        assert_eq!(
            MPoly::constant(Rat::from_int(7))
                .substitute(&Assignment::new())
                .unwrap(),
            Rat::from_int(7)
        );
        let missing: Assignment = [(0, Rat::one())].into();
        assert_eq!(p.substitute(&missing), Err(Error::MissingVariable(1)));
    }

    #[test]
    fn parse_and_print() {
        let p: MPoly = "T1^2*T2 + 3".parse().unwrap();
        assert_eq!(p.to_string(), "T1^2*T2 + 3");
        let q: MPoly = "3/2*T - (T2 - 1)^2".parse().unwrap();
        assert_eq!(q.to_string(), "-T2^2 + 3/2*T1 + 2*T2 - 1");
        assert_eq!("0".parse::<MPoly>().unwrap(), MPoly::zero());
        assert!("T0".parse::<MPoly>().is_err());
        assert!("T/T".parse::<MPoly>().is_err());
        assert!("1 +".parse::<MPoly>().is_err());
    }

    #[test]
    fn equality_ignores_ambient_variable_count() {
        let a = &t(0) + &t(3);
        let b = &a - &t(3);
        assert_eq!(b, t(0));
        assert_eq!(b.nvars(), 4);
    }

    #[test]
    fn homogeneity() {
        let p: MPoly = "T1^2 + 4*T1*T2".parse().unwrap();
        assert!(p.is_homogeneous_of(2));
        assert!(!p.is_homogeneous_of(1));
        assert!(MPoly::zero().is_homogeneous_of(7));
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(|ts| {
            MPoly::from_terms(
                2,
                ts.into_iter()
                    .map(|((a, b), c)| (Monomial::new(vec![a, b]), Rat::from_int(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), x in -5i64..6, y in 1i64..4) {
            let a: Assignment = [(0, Rat::from_int(x)), (1, Rat::new(1, y))].into();
            let sp = p.substitute(&a).unwrap();
            let sq = q.substitute(&a).unwrap();
            prop_assert_eq!((&p * &q).substitute(&a).unwrap(), &sp * &sq);
            prop_assert_eq!((&p + &q).substitute(&a).unwrap(), &sp + &sq);
        }

        #[test]
        fn display_parses_back(p in arb_poly()) {
            let back: MPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
