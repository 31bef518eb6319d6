//! Relations F0·h0^p0 + F1·h1^p1 + F2·h2^p2 = 0 and their equivalence.
//!
//! Two relations (g0,g1,g2) and (h0,h1,h2) of the same type are equivalent
//! when nonzero forms u, v satisfy u^wᵢ·hᵢ = v^wᵢ·gᵢ for the weights
//! wᵢ = d/pᵢ.  [`equivalent`] decides this exactly: because gcd(w0,w1,w2) = 1
//! a Bézout combination of the componentwise quotients recovers the only
//! possible ratio v/u, and a final check accepts or rejects it.

use std::fmt;

use crate::poly::{Form, FormRatio};
use crate::types::TypeTriple;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationError {
    /// A relation component (or a scaling form) was zero.
    ZeroComponent,
    /// Scaling did not stay polynomial.
    NotDivisible,
}

impl fmt::Display for RelationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationError::ZeroComponent => write!(f, "relation components must be nonzero"),
            RelationError::NotDivisible => {
                write!(f, "scaling leaves a non-polynomial component")
            }
        }
    }
}

impl std::error::Error for RelationError {}

/// Coefficient forms together with the exponent type they are paired with.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemInstance {
    pub coeffs: [Form; 3],
    pub ptype: TypeTriple,
}

impl ProblemInstance {
    pub fn new(coeffs: [Form; 3], ptype: TypeTriple) -> ProblemInstance {
        let order = coeffs[0].order();
        assert!(
            coeffs.iter().all(|f| f.order() == order),
            "coefficient forms must share one field"
        );
        ProblemInstance { coeffs, ptype }
    }

    pub fn order(&self) -> u32 {
        self.coeffs[0].order()
    }

    /// Coordinates permuted jointly: result i holds the data of perm[i].
    pub fn permuted(&self, perm: [usize; 3]) -> ProblemInstance {
        ProblemInstance {
            coeffs: permute_forms(&self.coeffs, perm),
            ptype: self.ptype.permuted(perm),
        }
    }
}

pub(crate) fn permute_forms(f: &[Form; 3], perm: [usize; 3]) -> [Form; 3] {
    [
        f[perm[0]].clone(),
        f[perm[1]].clone(),
        f[perm[2]].clone(),
    ]
}

/// A candidate solution triple (h0, h1, h2).
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub h: [Form; 3],
}

impl Relation {
    pub fn new(h: [Form; 3]) -> Relation {
        let order = h[0].order();
        assert!(
            h.iter().all(|f| f.order() == order),
            "relation components must share one field"
        );
        Relation { h }
    }

    pub fn order(&self) -> u32 {
        self.h[0].order()
    }

    pub fn has_zero_component(&self) -> bool {
        self.h.iter().any(Form::is_zero)
    }

    pub fn permuted(&self, perm: [usize; 3]) -> Relation {
        Relation {
            h: permute_forms(&self.h, perm),
        }
    }
}

/// Why a problem instance is ill-formed.
#[derive(Clone, Debug, PartialEq)]
pub enum ProblemViolation {
    ZeroCoefficient(usize),
    /// The coefficient forms share the given nonconstant factor.
    CommonFactor(Form),
}

impl fmt::Display for ProblemViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemViolation::ZeroCoefficient(i) => {
                write!(f, "coefficient F{i} is zero")
            }
            ProblemViolation::CommonFactor(g) => {
                write!(f, "coefficients share the factor {g}")
            }
        }
    }
}

/// Checks the well-formedness conditions on a problem: all coefficients
/// nonzero and no common nonconstant factor.  Empty means valid.
pub fn validate_problem(p: &ProblemInstance) -> Vec<ProblemViolation> {
    let mut out = Vec::new();
    for (i, f) in p.coeffs.iter().enumerate() {
        if f.is_zero() {
            out.push(ProblemViolation::ZeroCoefficient(i));
        }
    }
    if out.is_empty() {
        let g01 = crate::poly::form_gcd(&p.coeffs[0], &p.coeffs[1]).expect("nonzero");
        let g = crate::poly::form_gcd(&g01, &p.coeffs[2]).expect("nonzero");
        if !g.is_constant() {
            out.push(ProblemViolation::CommonFactor(g));
        }
    }
    out
}

/// True iff the degrees balance (deg Fᵢ + pᵢ·deg hᵢ all equal) and the sum
/// F0·h0^p0 + F1·h1^p1 + F2·h2^p2 expands to the zero form.
pub fn verify_relation(p: &ProblemInstance, r: &Relation) -> Result<bool, RelationError> {
    if r.has_zero_component() {
        return Err(RelationError::ZeroComponent);
    }
    let mut target = None;
    for i in 0..3 {
        let df = match p.coeffs[i].degree() {
            Some(d) => d as u64,
            None => return Ok(false),
        };
        let d = df + p.ptype.get(i) * r.h[i].degree().expect("nonzero component") as u64;
        match target {
            None => target = Some(d),
            Some(t) if t != d => return Ok(false),
            _ => {}
        }
    }
    let mut sum = Form::zero(p.order());
    for i in 0..3 {
        let power = u32::try_from(p.ptype.get(i)).expect("exponent fits in 32 bits");
        sum = &sum + &(&p.coeffs[i] * &r.h[i].pow(power));
    }
    Ok(sum.is_zero())
}

/// The certificate produced by [`equivalent`]: for `equivalent(p, a, b)`
/// returning (u, v), the identity u^wᵢ·bᵢ = v^wᵢ·aᵢ holds for all i.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceWitness {
    pub u: Form,
    pub v: Form,
}

/// Componentwise rescaling: component i becomes v^wᵢ·hᵢ / u^wᵢ, which must
/// stay polynomial.  The output is equivalent to the input with witness
/// (u, v).
pub fn scale_relation(
    r: &Relation,
    u: &Form,
    v: &Form,
    ptype: TypeTriple,
) -> Result<Relation, RelationError> {
    if u.is_zero() || v.is_zero() || r.has_zero_component() {
        return Err(RelationError::ZeroComponent);
    }
    let w = ptype.decompose().w;
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let wi = u32::try_from(w[i]).expect("weight fits in 32 bits");
        let scaled = &r.h[i] * &v.pow(wi);
        let divided = scaled
            .exact_div(&u.pow(wi))
            .map_err(|_| RelationError::NotDivisible)?;
        out.push(divided);
    }
    Ok(Relation::new([
        out[0].clone(),
        out[1].clone(),
        out[2].clone(),
    ]))
}

/// Decides equivalence of two relations of the given type, returning a
/// witness when they are equivalent.
pub fn equivalent(
    ptype: TypeTriple,
    first: &Relation,
    second: &Relation,
) -> Result<Option<EquivalenceWitness>, RelationError> {
    let w = ptype.decompose().w;
    let a = bezout3(w);
    equivalent_with_bezout(ptype, first, second, a)
}

/// Same decision with an explicit Bézout triple Σ aᵢ·wᵢ = 1; the result does
/// not depend on which triple is used.
pub(crate) fn equivalent_with_bezout(
    ptype: TypeTriple,
    first: &Relation,
    second: &Relation,
    a: [i64; 3],
) -> Result<Option<EquivalenceWitness>, RelationError> {
    if first.has_zero_component() || second.has_zero_component() {
        return Err(RelationError::ZeroComponent);
    }
    let w = ptype.decompose().w;
    debug_assert_eq!(
        (0..3).map(|i| a[i] as i128 * w[i] as i128).sum::<i128>(),
        1,
        "coefficients must combine the weights to 1"
    );
    // Fast necessary condition on degrees: deg(secondᵢ) - deg(firstᵢ) must be
    // proportional to wᵢ with one integer ratio.
    let delta: Vec<i128> = (0..3)
        .map(|i| {
            second.h[i].degree().expect("nonzero") as i128
                - first.h[i].degree().expect("nonzero") as i128
        })
        .collect();
    for i in 0..3 {
        for j in (i + 1)..3 {
            if delta[i] * w[j] as i128 != delta[j] * w[i] as i128 {
                return Ok(None);
            }
        }
    }
    let ratios: Vec<FormRatio> = (0..3)
        .map(|i| {
            FormRatio::new(second.h[i].clone(), first.h[i].clone())
                .expect("components are nonzero")
        })
        .collect();
    let mut rho = FormRatio::one(first.order());
    for i in 0..3 {
        rho = rho.mul(&ratios[i].pow(a[i]).expect("nonzero ratio"));
    }
    for i in 0..3 {
        let wi = i64::try_from(w[i]).expect("weight fits in 64 bits");
        if rho.pow(wi).expect("nonzero ratio") != ratios[i] {
            return Ok(None);
        }
    }
    Ok(Some(EquivalenceWitness {
        u: rho.denominator().clone(),
        v: rho.numerator().clone(),
    }))
}

/// One Bézout triple for gcd(w0, w1, w2) = 1.
fn bezout3(w: [u64; 3]) -> [i64; 3] {
    let (g01, x0, x1) = xgcd(w[0] as i128, w[1] as i128);
    let (g, y, z) = xgcd(g01, w[2] as i128);
    debug_assert_eq!(g, 1, "weights are jointly coprime");
    let a = [x0 * y, x1 * y, z];
    [
        i64::try_from(a[0]).expect("coefficient fits"),
        i64::try_from(a[1]).expect("coefficient fits"),
        i64::try_from(a[2]).expect("coefficient fits"),
    ]
}

pub(crate) fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        return (a, 1, 0);
    }
    let (g, x, y) = xgcd(b, a % b);
    (g, y, x - (a / b) * y)
}
