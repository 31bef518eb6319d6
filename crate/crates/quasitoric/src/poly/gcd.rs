//! Greatest common divisors of forms.
//!
//! The algorithm is a primitive polynomial remainder sequence on a chosen
//! main variable, with contents (gcds of the coefficient forms in the
//! remaining variables) handled by recursion.  Homogeneity is preserved at
//! every step, so no degree information is ever lost.  Results are
//! normalized monic with respect to the graded-lex leading coefficient.

use super::form::{Form, FormError};

/// Monic gcd of two forms, at least one nonzero.
pub fn form_gcd(a: &Form, b: &Form) -> Result<Form, FormError> {
    if a.is_zero() && b.is_zero() {
        return Err(FormError::BothZero);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    Ok(gcd_monic(a, b))
}

/// Monic gcd of nonzero forms.
pub(crate) fn gcd_monic(a: &Form, b: &Form) -> Form {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let order = a.order();
    if a.is_constant() || b.is_constant() {
        return Form::one(order);
    }
    let v = [1usize, 2, 0]
        .into_iter()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .expect("a nonconstant form uses some variable");
    let (ca, pa) = content_and_primitive(a, v);
    let (cb, pb) = content_and_primitive(b, v);
    let cg = gcd_monic(&ca, &cb);
    let pg = prs_gcd(&pa, &pb, v);
    (&cg * &pg).monic()
}

/// Splits f into (content, primitive part) with respect to the variable v:
/// the content is the monic gcd of the coefficient forms of the powers of v,
/// and f = content · primitive exactly.
pub(crate) fn content_and_primitive(f: &Form, v: usize) -> (Form, Form) {
    debug_assert!(!f.is_zero());
    let mut content: Option<Form> = None;
    for k in 0..=f.degree_in(v) {
        let c = f.coeff_in(v, k);
        if c.is_zero() {
            continue;
        }
        content = Some(match content {
            None => c.monic(),
            Some(acc) => gcd_monic(&acc, &c),
        });
        if content.as_ref().map_or(false, Form::is_constant) {
            break;
        }
    }
    let content = content.expect("nonzero form has a nonzero coefficient");
    let primitive = f
        .exact_div(&content)
        .expect("the content divides the form");
    (content, primitive)
}

/// Pseudo-remainder of a by b with respect to v (scaling factors are
/// irrelevant here because the caller strips contents afterwards).
fn pseudo_rem(a: &Form, b: &Form, v: usize) -> Form {
    let order = a.order();
    let db = b.degree_in(v);
    let lcb = b.coeff_in(v, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = r.coeff_in(v, dr);
        let t = &(&lcr * &Form::var_pow(v, dr - db, order)) * b;
        r = &(&lcb * &r) - &t;
    }
    r
}

/// Primitive remainder sequence on primitive parts; returns an (unnormalized)
/// gcd of two v-primitive forms.
fn prs_gcd(pa: &Form, pb: &Form, v: usize) -> Form {
    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa.clone(), pb.clone())
    } else {
        (pb.clone(), pa.clone())
    };
    while !r1.is_zero() {
        let rem = pseudo_rem(&r0, &r1, v);
        r0 = r1;
        r1 = if rem.is_zero() {
            rem
        } else {
            content_and_primitive(&rem, v).1
        };
    }
    r0
}
