//! Homogeneous forms in x0, x1, x2 over Q(ζ_n).
//!
//! A [`Form`] maps exponent triples to nonzero [`Scalar`]s; every triple in a
//! nonzero form has the same total degree.  Terms are ordered graded-
//! lexicographically with x0 > x1 > x2 and printed in descending order, which
//! makes the text representation canonical.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use super::scalar::{rational_string, Scalar};

/// Errors from construction and ring operations on forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormError {
    /// Parse failure, with a byte offset into the input.
    Syntax { pos: usize, message: String },
    /// A polynomial mixed total degrees where a single one was required.
    NonHomogeneous,
    /// Added or subtracted nonzero forms of different degrees.
    DegreeMismatch,
    /// Exact division requested but the divisor does not divide.
    NotDivisible,
    /// Division by the zero form.
    DivisionByZero,
    /// gcd of two zero forms is undefined.
    BothZero,
    /// The operation needs a nonconstant form.
    ConstantInput,
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::Syntax { pos, message } => {
                write!(f, "syntax error at offset {pos}: {message}")
            }
            FormError::NonHomogeneous => write!(f, "polynomial is not homogeneous"),
            FormError::DegreeMismatch => write!(f, "nonzero forms have different degrees"),
            FormError::NotDivisible => write!(f, "exact division leaves a remainder"),
            FormError::DivisionByZero => write!(f, "division by the zero form"),
            FormError::BothZero => write!(f, "gcd of two zero forms is undefined"),
            FormError::ConstantInput => write!(f, "operation requires a nonconstant form"),
        }
    }
}

impl std::error::Error for FormError {}

/// An exponent triple (e0, e1, e2); the Ord is graded lex with x0 > x1 > x2,
/// so the maximum key of a form is its leading monomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mono(pub [u32; 3]);

impl Mono {
    pub fn total(&self) -> u32 {
        self.0[0] + self.0[1] + self.0[2]
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// Componentwise difference; caller guarantees divisibility.
    pub fn div(&self, other: &Mono) -> Mono {
        Mono([
            self.0[0] - other.0[0],
            self.0[1] - other.0[1],
            self.0[2] - other.0[2],
        ])
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total(), self.0).cmp(&(other.total(), other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A homogeneous trivariate polynomial over Q(ζ_n).
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    order: u32,
    terms: BTreeMap<Mono, Scalar>,
}

impl Form {
    pub fn zero(order: u32) -> Form {
        Form {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Form {
        Form::from_scalar(Scalar::one(order))
    }

    /// The degree-zero form with the given value (zero scalar gives the zero
    /// form).
    pub fn from_scalar(s: Scalar) -> Form {
        Form::monomial(Mono([0, 0, 0]), s)
    }

    pub fn from_integer(k: i64, order: u32) -> Form {
        Form::from_scalar(Scalar::from_integer(k, order))
    }

    /// c · x0^e0 x1^e1 x2^e2.
    pub fn monomial(m: Mono, c: Scalar) -> Form {
        let order = c.order();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Form { order, terms }
    }

    /// The variable x0, x1 or x2.
    pub fn variable(index: usize, order: u32) -> Form {
        assert!(index < 3, "variable index out of range");
        let mut e = [0u32; 3];
        e[index] = 1;
        Form::monomial(Mono(e), Scalar::one(order))
    }

    /// Builds a form from terms, rejecting mixed total degrees.
    pub fn from_terms(
        order: u32,
        terms: impl IntoIterator<Item = (Mono, Scalar)>,
    ) -> Result<Form, FormError> {
        let mut map: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(c.order(), order, "scalar from a different field");
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        let form = Form { order, terms: map };
        if form.is_homogeneous() {
            Ok(form)
        } else {
            Err(FormError::NonHomogeneous)
        }
    }

    fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Mono::total);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == Some(0)
    }

    /// Total degree; None for the zero form.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Mono::total)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order (the canonical order).
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Mono) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Leading monomial and coefficient (graded lex); None for zero.
    pub fn leading(&self) -> Option<(&Mono, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.leading().map(|(_, c)| c)
    }

    /// Rescales so the leading coefficient is 1; the zero form stays zero.
    pub fn monic(&self) -> Form {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Multiplies every coefficient by s.
    pub fn scale(&self, s: &Scalar) -> Form {
        if s.is_zero() {
            return Form::zero(self.order);
        }
        Form {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c * s))
                .collect(),
        }
    }

    /// Sum, failing when both sides are nonzero of different degrees.
    pub fn try_add(&self, rhs: &Form) -> Result<Form, FormError> {
        assert_eq!(self.order, rhs.order, "forms from different fields");
        if let (Some(a), Some(b)) = (self.degree(), rhs.degree()) {
            if a != b {
                return Err(FormError::DegreeMismatch);
            }
        }
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.entry(*m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Ok(Form {
            order: self.order,
            terms,
        })
    }

    pub fn try_sub(&self, rhs: &Form) -> Result<Form, FormError> {
        self.try_add(&-rhs)
    }

    /// Exact quotient self / rhs, or NotDivisible / DivisionByZero.
    pub fn exact_div(&self, rhs: &Form) -> Result<Form, FormError> {
        assert_eq!(self.order, rhs.order, "forms from different fields");
        if rhs.is_zero() {
            return Err(FormError::DivisionByZero);
        }
        let mut rem = self.clone();
        let mut quo = Form::zero(self.order);
        let (bm, bc) = rhs.leading().expect("divisor is nonzero");
        let bc_inv = bc.inverse().expect("leading coefficient is nonzero");
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("loop guard");
            if !bm.divides(rm) {
                return Err(FormError::NotDivisible);
            }
            let t = Form::monomial(rm.div(bm), rc * &bc_inv);
            rem = rem.try_sub(&(&t * rhs)).expect("degrees match by construction");
            quo = quo.try_add(&t).expect("quotient terms share a degree");
        }
        Ok(quo)
    }

    /// Nonnegative integer power (f^0 = 1, including for the zero form).
    pub fn pow(&self, e: u32) -> Form {
        let mut acc = Form::one(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to x0, x1 or x2.
    pub fn derivative(&self, var: usize) -> Form {
        assert!(var < 3, "variable index out of range");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0;
            exps[var] = e - 1;
            let coeff = c * &Scalar::from_integer(e as i64, self.order);
            terms.insert(Mono(exps), coeff);
        }
        Form {
            order: self.order,
            terms,
        }
    }

    /// Highest exponent of the given variable (0 for the zero form).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Coefficient of var^k: the terms with that exponent, with the variable
    /// divided out.  Homogeneous of degree (deg - k) when nonzero.
    pub fn coeff_in(&self, var: usize, k: u32) -> Form {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut exps = m.0;
                exps[var] = 0;
                terms.insert(Mono(exps), c.clone());
            }
        }
        Form {
            order: self.order,
            terms,
        }
    }

    /// The monomial x_var^k as a form.
    pub fn var_pow(var: usize, k: u32, order: u32) -> Form {
        let mut exps = [0u32; 3];
        exps[var] = k;
        Form::monomial(Mono(exps), Scalar::one(order))
    }
}

// ---- Add / Sub / Mul / Neg ----
//
// Add and Sub panic on a degree mismatch: inside algorithms the grading is
// structural, and the fallible entry points use try_add / try_sub instead.

impl std::ops::Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        self.try_add(rhs).expect("degree mismatch in form addition")
    }
}

impl std::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self.try_sub(rhs).expect("degree mismatch in form subtraction")
    }
}

impl std::ops::Mul for &Form {
    type Output = Form;
    fn mul(self, rhs: &Form) -> Form {
        assert_eq!(self.order, rhs.order, "forms from different fields");
        let mut terms: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let prod = ca * cb;
                match terms.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !prod.is_zero() {
                            e.insert(prod);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get() + &prod;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        Form {
            order: self.order,
            terms,
        }
    }
}

impl std::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form {
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl std::ops::Add for Form {
    type Output = Form;
    fn add(self, rhs: Form) -> Form {
        &self + &rhs
    }
}

impl std::ops::Sub for Form {
    type Output = Form;
    fn sub(self, rhs: Form) -> Form {
        &self - &rhs
    }
}

impl std::ops::Mul for Form {
    type Output = Form;
    fn mul(self, rhs: Form) -> Form {
        &self * &rhs
    }
}

impl std::ops::Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

// ---- canonical text ----

fn mono_string(m: &Mono) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Form {
    /// Canonical text: descending graded-lex terms, reduced fractions,
    /// non-rational coefficients as parenthesized polynomials in `z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms() {
            let mono = mono_string(m);
            match c.as_rational() {
                Some(q) => {
                    if first {
                        if q.is_negative() {
                            out.push('-');
                        }
                    } else if q.is_negative() {
                        out.push_str(" - ");
                    } else {
                        out.push_str(" + ");
                    }
                    let mag = q.abs();
                    if mono.is_empty() {
                        out.push_str(&rational_string(&mag));
                    } else if mag.is_one() {
                        out.push_str(&mono);
                    } else {
                        out.push_str(&rational_string(&mag));
                        out.push('*');
                        out.push_str(&mono);
                    }
                }
                None => {
                    if !first {
                        out.push_str(" + ");
                    }
                    out.push_str(&c.canonical_string());
                    if !mono.is_empty() {
                        out.push('*');
                        out.push_str(&mono);
                    }
                }
            }
            first = false;
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[n={}]({})", self.order, self)
    }
}
