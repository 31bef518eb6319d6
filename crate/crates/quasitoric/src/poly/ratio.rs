//! Reduced quotients of forms.
//!
//! A [`FormRatio`] keeps numerator and denominator coprime with a monic
//! denominator, so equal values have equal representations and `==` decides
//! equality in the fraction field.

use std::fmt;

use super::form::{Form, FormError};
use super::gcd::form_gcd;

#[derive(Clone, PartialEq, Eq)]
pub struct FormRatio {
    num: Form,
    den: Form,
}

impl FormRatio {
    /// num / den, reduced; the denominator must be nonzero.
    pub fn new(num: Form, den: Form) -> Result<FormRatio, FormError> {
        assert_eq!(num.order(), den.order(), "forms from different fields");
        if den.is_zero() {
            return Err(FormError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(FormRatio {
                num,
                den: Form::one(den.order()),
            });
        }
        let g = form_gcd(&num, &den)?;
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc_inv = den
            .leading_coeff()
            .expect("nonzero denominator")
            .inverse()
            .expect("leading coefficient is nonzero");
        Ok(FormRatio {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_form(f: Form) -> FormRatio {
        let one = Form::one(f.order());
        FormRatio { num: f, den: one }
    }

    pub fn one(order: u32) -> FormRatio {
        FormRatio::from_form(Form::one(order))
    }

    pub fn numerator(&self) -> &Form {
        &self.num
    }

    pub fn denominator(&self) -> &Form {
        &self.den
    }

    pub fn order(&self) -> u32 {
        self.num.order()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, rhs: &FormRatio) -> FormRatio {
        FormRatio::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators is nonzero")
    }

    pub fn inverse(&self) -> Result<FormRatio, FormError> {
        FormRatio::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert (zero values reject them).
    pub fn pow(&self, e: i64) -> Result<FormRatio, FormError> {
        let (base, e) = if e < 0 {
            (self.inverse()?, e.unsigned_abs() as u32)
        } else {
            (self.clone(), e as u32)
        };
        Ok(FormRatio {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }
}

impl fmt::Display for FormRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.num, self.den)
    }
}

impl fmt::Debug for FormRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormRatio({} | {})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_form;

    fn r(num: &str, den: &str) -> FormRatio {
        FormRatio::new(parse_form(num, 1).unwrap(), parse_form(den, 1).unwrap()).unwrap()
    }

    #[test]
    fn reduces_and_normalizes() {
        // (2x0^2 - 2x1^2) / (2x0 + 2x1) = (x0 - x1) / 1.
        let q = r("2*x0^2 - 2*x1^2", "2*x0 + 2*x1");
        assert_eq!(q.numerator(), &parse_form("x0 - x1", 1).unwrap());
        assert_eq!(q.denominator(), &parse_form("1", 1).unwrap());
        // Equal values have equal representations despite scaling.
        assert_eq!(r("x0", "x1"), r("3*x0", "3*x1"));
    }

    #[test]
    fn zero_and_inverse() {
        let z = r("0", "x1");
        assert!(z.is_zero());
        assert!(z.inverse().is_err());
        let q = r("x0^2", "x1*x2");
        assert_eq!(q.mul(&q.inverse().unwrap()), FormRatio::one(1));
    }

    #[test]
    fn powers() {
        let q = r("x0", "x1");
        assert_eq!(q.pow(3).unwrap(), r("x0^3", "x1^3"));
        assert_eq!(q.pow(-2).unwrap(), r("x1^2", "x0^2"));
        assert_eq!(q.pow(0).unwrap(), FormRatio::one(1));
    }

    #[test]
    fn degrees_may_differ() {
        let q = r("x0^3", "x1");
        assert_eq!(q.numerator().degree(), Some(3));
        assert_eq!(q.denominator().degree(), Some(1));
    }
}
