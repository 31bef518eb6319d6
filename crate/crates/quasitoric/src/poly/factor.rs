//! Squarefree decomposition and exact roots of forms.

use super::form::{Form, FormError};
use super::gcd::{content_and_primitive, gcd_monic};
use super::scalar::Scalar;

/// a = scalar · ∏ factorᵢ^multᵢ with monic squarefree pairwise-coprime
/// factors, listed by ascending multiplicity (one factor per multiplicity).
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition {
    pub scalar: Scalar,
    pub factors: Vec<(Form, u32)>,
}

impl SquarefreeDecomposition {
    /// Multiplies the decomposition back together.
    pub fn reassemble(&self) -> Form {
        let mut acc = Form::from_scalar(self.scalar.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

/// Squarefree decomposition of a nonconstant form (Yun's method on a main
/// variable, with the variable-free content decomposed recursively).
pub fn squarefree_decompose(a: &Form) -> Result<SquarefreeDecomposition, FormError> {
    if a.is_zero() || a.is_constant() {
        return Err(FormError::ConstantInput);
    }
    let scalar = a.leading_coeff().expect("nonzero form").clone();
    let monic = a.monic();
    let parts = sqf_rec(&monic);
    // Merge factors that share a multiplicity (they are coprime, so the
    // product stays squarefree) and order by multiplicity.
    let mut by_mult: std::collections::BTreeMap<u32, Form> = std::collections::BTreeMap::new();
    for (f, m) in parts {
        by_mult
            .entry(m)
            .and_modify(|acc| *acc = &*acc * &f)
            .or_insert(f);
    }
    Ok(SquarefreeDecomposition {
        scalar,
        factors: by_mult.into_iter().map(|(m, f)| (f, m)).collect(),
    })
}

/// Decomposes a monic nonconstant form; factors come back monic but possibly
/// with repeated multiplicities across recursion levels.
fn sqf_rec(f: &Form) -> Vec<(Form, u32)> {
    let v = [1usize, 2, 0]
        .into_iter()
        .find(|&v| f.degree_in(v) > 0)
        .expect("nonconstant form uses some variable");
    let (content, primitive) = content_and_primitive(f, v);
    let mut out = if content.is_constant() {
        Vec::new()
    } else {
        sqf_rec(&content)
    };
    if !primitive.is_constant() {
        out.extend(yun(&primitive.monic(), v));
    }
    out
}

/// Yun's squarefree factorization for a form that is primitive in v with
/// positive v-degree.  All divisions below are exact.
fn yun(f: &Form, v: usize) -> Vec<(Form, u32)> {
    let deriv = f.derivative(v);
    let g = gcd_monic(f, &deriv);
    if g.is_constant() {
        return vec![(f.clone(), 1)];
    }
    let mut w = f.exact_div(&g).expect("gcd divides");
    let mut y = deriv.exact_div(&g).expect("gcd divides the derivative");
    let mut out = Vec::new();
    let mut i = 1u32;
    loop {
        let z = &y - &w.derivative(v);
        if z.is_zero() {
            if !w.is_constant() {
                out.push((w.monic(), i));
            }
            return out;
        }
        let a = gcd_monic(&w, &z);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        w = w.exact_div(&a).expect("factor divides");
        y = z.exact_div(&a).expect("factor divides");
        i += 1;
    }
}

/// Exact m-th root of a nonzero form, when the multiplicities all divide m
/// and the scalar part has a recognized root (see [`Scalar::mth_root`]).
pub fn mth_root(a: &Form, m: u32) -> Option<Form> {
    assert!(m >= 1, "root index must be positive");
    assert!(!a.is_zero(), "m-th root of the zero form is not defined");
    if m == 1 {
        return Some(a.clone());
    }
    if a.is_constant() {
        let c = a.leading_coeff().expect("nonzero form").mth_root(m as u64)?;
        return Some(Form::from_scalar(c));
    }
    let dec = squarefree_decompose(a).expect("nonconstant by the branch above");
    let mut root = Form::one(a.order());
    for (f, mult) in &dec.factors {
        if mult % m != 0 {
            return None;
        }
        root = &root * &f.pow(mult / m);
    }
    let scalar_root = dec.scalar.mth_root(m as u64)?;
    let root = root.scale(&scalar_root);
    debug_assert_eq!(root.pow(m), *a);
    Some(root)
}
