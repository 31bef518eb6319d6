//! Classification of the types whose relations form positive-dimensional
//! families, and deterministic generators for the two positive cases.
//!
//! After reducing and sorting the type (permuting the coefficients jointly),
//! families exist exactly when
//!
//! * the sorted type is (1, p, p) and p divides the degree difference of the
//!   two coefficients paired with exponent p (the linear case), or
//! * the sorted type is (2, 2, 2) and at least one relation exists (the
//!   conic case, certified by a witness).
//!
//! In the linear case members come from the identity
//! F0·h0 + F1·h1^p + F2·h2^p = 0 with
//! (h0, h1, h2) = (-F0^(p-1)·(F1·g1^p + F2·g2^p), F0·g1, F0·g2).
//! In the conic case a witness a with F0·a0² + F1·a1² + F2·a2² = 0 is a
//! point on a conic over the function field; intersecting with the line
//! through a in direction b yields the second point
//! hᵢ = aᵢ·Q(b) - 2·bᵢ·B(a,b), which satisfies
//! Σ Fᵢ·hᵢ² = Q(b)²·Q(a) = 0.

use std::fmt;

use crate::poly::{Form, Scalar};
use crate::relation::{
    equivalent, permute_forms, validate_problem, verify_relation, ProblemInstance,
    ProblemViolation, Relation,
};
use crate::search::{brute_force, SearchOutcome, SearchSpec, DEFAULT_SEARCH_CAP};
use crate::types::TypeTriple;

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyError {
    /// The problem fails validation (zero or non-coprime coefficients).
    InvalidProblem(Vec<ProblemViolation>),
    /// The type admits no family (or not the requested construction).
    NoFamily,
    /// The supplied witness does not verify.
    WitnessInvalid,
    /// No witness was given and none was found within the search budget.
    WitnessNotFound,
    /// A constructed component vanished.
    ZeroComponent,
    /// The parameter degrees are inconsistent with the coefficients.
    DegreeMismatch,
    /// The direction meets the conic only at the witness (all components
    /// vanish).
    DegenerateDirection,
    /// The parameter ladder was exhausted before reaching the count.
    InsufficientParameters,
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidProblem(v) => {
                write!(f, "invalid problem:")?;
                for violation in v {
                    write!(f, " {violation};")?;
                }
                Ok(())
            }
            FamilyError::NoFamily => write!(f, "no family exists for this type"),
            FamilyError::WitnessInvalid => write!(f, "the witness does not verify"),
            FamilyError::WitnessNotFound => {
                write!(f, "no witness given or found within the search budget")
            }
            FamilyError::ZeroComponent => write!(f, "a constructed component is zero"),
            FamilyError::DegreeMismatch => {
                write!(f, "parameter degrees are inconsistent with the coefficients")
            }
            FamilyError::DegenerateDirection => {
                write!(f, "the direction is tangent at the witness; all components vanish")
            }
            FamilyError::InsufficientParameters => {
                write!(f, "the parameter ladder was exhausted before the requested count")
            }
        }
    }
}

impl std::error::Error for FamilyError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyStatus {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyCase {
    /// Sorted reduced type (2, 2, 2) with a verified witness.
    Conic222,
    /// Sorted reduced type (1, p, p) with the degree divisibility condition.
    LinearP0Equals1,
}

/// The answer of [`family_exists`], with the coordinate sort that was
/// applied and a human-readable justification.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyVerdict {
    pub status: FamilyStatus,
    pub case: Option<FamilyCase>,
    /// sorted[k] = original[permutation[k]].
    pub permutation: [usize; 3],
    pub detail: String,
}

/// One generated relation together with the parameters that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyMember {
    pub relation: Relation,
    pub parameters: FamilyParameters,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyParameters {
    /// The (g1, g2) pair of the linear construction, in sorted coordinates.
    Pair { g1: Form, g2: Form },
    /// The direction triple of the conic construction.
    Direction([Form; 3]),
}

impl fmt::Display for FamilyParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParameters::Pair { g1, g2 } => write!(f, "g1 = {g1}, g2 = {g2}"),
            FamilyParameters::Direction(b) => {
                write!(f, "b = [{}, {}, {}]", b[0], b[1], b[2])
            }
        }
    }
}

/// Decides whether the relations of the reduced type of `p` form a
/// positive-dimensional family.  For the conic case a witness may be
/// supplied; otherwise a bounded search tries degree shifts 0..=budget
/// above the minimal balanced degrees.  Absence of a witness is reported as
/// Unknown, never No.
pub fn family_exists(
    p: &ProblemInstance,
    witness: Option<&Relation>,
    search_budget: u64,
) -> Result<FamilyVerdict, FamilyError> {
    let violations = validate_problem(p);
    if !violations.is_empty() {
        return Err(FamilyError::InvalidProblem(violations));
    }
    let reduced = p.ptype.reduce();
    let (sorted, permutation) = reduced.sorted();
    let s = sorted.entries();
    if s[0] == 1 && s[1] == s[2] {
        let pe = s[1];
        let sorted_coeffs = permute_forms(&p.coeffs, permutation);
        let d1 = sorted_coeffs[1].degree().expect("validated nonzero") as i128;
        let d2 = sorted_coeffs[2].degree().expect("validated nonzero") as i128;
        let diff = d2 - d1;
        if diff.rem_euclid(pe as i128) == 0 {
            return Ok(FamilyVerdict {
                status: FamilyStatus::Yes,
                case: Some(FamilyCase::LinearP0Equals1),
                permutation,
                detail: format!(
                    "sorted reduced type (1, {pe}, {pe}); {pe} divides the \
                     coefficient degree difference {diff}"
                ),
            });
        }
        return Ok(FamilyVerdict {
            status: FamilyStatus::No,
            case: None,
            permutation,
            detail: format!(
                "sorted reduced type (1, {pe}, {pe}); {pe} does not divide the \
                 coefficient degree difference {diff}"
            ),
        });
    }
    if s == [2, 2, 2] {
        if let Some(w) = witness {
            let q = ProblemInstance::new(p.coeffs.clone(), reduced);
            if verify_relation(&q, w) == Ok(true) {
                return Ok(FamilyVerdict {
                    status: FamilyStatus::Yes,
                    case: Some(FamilyCase::Conic222),
                    permutation,
                    detail: "reduced type (2, 2, 2) with a verified witness".to_string(),
                });
            }
            return Err(FamilyError::WitnessInvalid);
        }
        if balanced_degrees(&p.coeffs, 0).is_none() {
            return Ok(FamilyVerdict {
                status: FamilyStatus::No,
                case: None,
                permutation,
                detail: "reduced type (2, 2, 2), but the coefficient degree \
                         parities admit no balanced relation"
                    .to_string(),
            });
        }
        if let Some((_, degrees)) = find_conic_witness(p, search_budget) {
            return Ok(FamilyVerdict {
                status: FamilyStatus::Yes,
                case: Some(FamilyCase::Conic222),
                permutation,
                detail: format!(
                    "reduced type (2, 2, 2); witness found by search at \
                     degrees [{}, {}, {}]",
                    degrees[0], degrees[1], degrees[2]
                ),
            });
        }
        return Ok(FamilyVerdict {
            status: FamilyStatus::Unknown,
            case: None,
            permutation,
            detail: format!(
                "reduced type (2, 2, 2); no witness given or found within \
                 degree budget {search_budget}"
            ),
        });
    }
    Ok(FamilyVerdict {
        status: FamilyStatus::No,
        case: None,
        permutation,
        detail: format!(
            "sorted reduced type ({}, {}, {}) is neither (1, p, p) nor (2, 2, 2)",
            s[0], s[1], s[2]
        ),
    })
}

/// Minimal componentwise degrees making deg Fᵢ + 2·degᵢ constant, shifted
/// up by `shift`; None when the coefficient degree parities differ.
fn balanced_degrees(coeffs: &[Form; 3], shift: u64) -> Option<[u64; 3]> {
    let d: Vec<u64> = coeffs
        .iter()
        .map(|f| f.degree().expect("validated nonzero") as u64)
        .collect();
    let max = *d.iter().max().expect("three entries");
    if d.iter().any(|&di| (max - di) % 2 != 0) {
        return None;
    }
    Some([
        (max - d[0]) / 2 + shift,
        (max - d[1]) / 2 + shift,
        (max - d[2]) / 2 + shift,
    ])
}

/// Searches for a single verifying relation of type (2,2,2) using the
/// default ±2 grid, trying each degree shift in 0..=budget.
fn find_conic_witness(p: &ProblemInstance, budget: u64) -> Option<(Relation, [u64; 3])> {
    let reduced = ProblemInstance::new(
        p.coeffs.clone(),
        TypeTriple::new([2, 2, 2]).expect("positive entries"),
    );
    for shift in 0..=budget {
        let degrees = balanced_degrees(&p.coeffs, shift)?;
        let spec = SearchSpec {
            degree_bounds: [
                u32::try_from(degrees[0]).ok()?,
                u32::try_from(degrees[1]).ok()?,
                u32::try_from(degrees[2]).ok()?,
            ],
            coefficient_set: default_grid(p.order()),
            dedupe: false,
        };
        match brute_force(&reduced, &spec, DEFAULT_SEARCH_CAP) {
            Ok(SearchOutcome { relations, .. }) => {
                if let Some(first) = relations.into_iter().next() {
                    return Some((first, degrees));
                }
            }
            Err(_) => return None,
        }
    }
    None
}

fn default_grid(order: u32) -> Vec<Scalar> {
    (-2..=2).map(|k| Scalar::from_integer(k, order)).collect()
}

/// The linear-case generator.  Requires the type of `p` to be (1, q, q)
/// already (sort first when needed); returns
/// (-F0^(p-1)·(F1·g1^p + F2·g2^p), F0·g1, F0·g2).
pub fn case2_member(
    p: &ProblemInstance,
    g1: &Form,
    g2: &Form,
) -> Result<FamilyMember, FamilyError> {
    let e = p.ptype.entries();
    if e[0] != 1 || e[1] != e[2] {
        return Err(FamilyError::NoFamily);
    }
    if g1.is_zero() || g2.is_zero() {
        return Err(FamilyError::ZeroComponent);
    }
    let pe = u32::try_from(e[1]).expect("exponent fits in 32 bits");
    let inner = (&p.coeffs[1] * &g1.pow(pe))
        .try_add(&(&p.coeffs[2] * &g2.pow(pe)))
        .map_err(|_| FamilyError::DegreeMismatch)?;
    let h0 = -&(&p.coeffs[0].pow(pe - 1) * &inner);
    if h0.is_zero() {
        return Err(FamilyError::ZeroComponent);
    }
    let relation = Relation::new([h0, &p.coeffs[0] * g1, &p.coeffs[0] * g2]);
    debug_assert_eq!(
        verify_relation(p, &relation),
        Ok(true),
        "linear member must verify"
    );
    Ok(FamilyMember {
        relation,
        parameters: FamilyParameters::Pair {
            g1: g1.clone(),
            g2: g2.clone(),
        },
    })
}

/// The conic-case generator: second intersection of the conic with the line
/// through the witness in the given direction.
pub fn conic_member(
    p: &ProblemInstance,
    witness: &Relation,
    direction: &[Form; 3],
) -> Result<FamilyMember, FamilyError> {
    if p.ptype.entries() != [2, 2, 2] {
        return Err(FamilyError::NoFamily);
    }
    if verify_relation(p, witness) != Ok(true) {
        return Err(FamilyError::WitnessInvalid);
    }
    let a = &witness.h;
    let b = direction;
    let q_b = quadric(&p.coeffs, b, b).map_err(|_| FamilyError::DegreeMismatch)?;
    let bilinear = quadric(&p.coeffs, a, b).map_err(|_| FamilyError::DegreeMismatch)?;
    let two = Form::from_integer(2, p.order());
    let mut h = Vec::with_capacity(3);
    for i in 0..3 {
        let component = (a[i].clone() * q_b.clone())
            .try_sub(&(&(&two * &b[i]) * &bilinear))
            .map_err(|_| FamilyError::DegreeMismatch)?;
        h.push(component);
    }
    if h.iter().all(Form::is_zero) {
        return Err(FamilyError::DegenerateDirection);
    }
    if h.iter().any(Form::is_zero) {
        return Err(FamilyError::ZeroComponent);
    }
    let relation = Relation::new([h[0].clone(), h[1].clone(), h[2].clone()]);
    debug_assert_eq!(
        verify_relation(p, &relation),
        Ok(true),
        "conic member must verify"
    );
    Ok(FamilyMember {
        relation,
        parameters: FamilyParameters::Direction(direction.clone()),
    })
}

/// Σ Fᵢ·uᵢ·vᵢ — the bilinear form of the conic (the quadric itself when
/// u = v).
fn quadric(coeffs: &[Form; 3], u: &[Form; 3], v: &[Form; 3]) -> Result<Form, crate::poly::FormError> {
    let mut sum = Form::zero(coeffs[0].order());
    for i in 0..3 {
        sum = sum.try_add(&(&(&coeffs[i] * &u[i]) * &v[i]))?;
    }
    Ok(sum)
}

/// A deterministic sample of family members with a pairwise-equivalence
/// report (expected empty: distinct parameters normally give inequivalent
/// relations; the report is evidence, not an assumption).
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySample {
    pub verdict: FamilyVerdict,
    pub reduced_type: TypeTriple,
    pub members: Vec<FamilyMember>,
    /// Index pairs (i, j), i < j, found `equivalent`.
    pub equivalent_pairs: Vec<(usize, usize)>,
}

const MAX_ATTEMPTS: usize = 20_000;
const LADDER_LIMIT: usize = 512;

/// Emits `count` members from the deterministic parameter ladder, skipping
/// degenerate parameter choices.  Members are reported in the original
/// coordinate order and verify at the reduced type.
pub fn family_sample(
    p: &ProblemInstance,
    witness: Option<&Relation>,
    count: usize,
    search_budget: u64,
) -> Result<FamilySample, FamilyError> {
    let verdict = family_exists(p, witness, search_budget)?;
    match verdict.status {
        FamilyStatus::No => return Err(FamilyError::NoFamily),
        FamilyStatus::Unknown => return Err(FamilyError::WitnessNotFound),
        FamilyStatus::Yes => {}
    }
    let reduced_type = p.ptype.reduce();
    let members = match verdict.case.expect("Yes implies a case") {
        FamilyCase::LinearP0Equals1 => {
            sample_linear(p, &verdict, reduced_type, count)?
        }
        FamilyCase::Conic222 => {
            let owned;
            let w = match witness {
                Some(w) => w,
                None => {
                    owned = find_conic_witness(p, search_budget)
                        .ok_or(FamilyError::WitnessNotFound)?
                        .0;
                    &owned
                }
            };
            sample_conic(p, w, count)?
        }
    };
    let mut equivalent_pairs = Vec::new();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            if let Ok(Some(_)) = equivalent(
                reduced_type,
                &members[i].relation,
                &members[j].relation,
            ) {
                equivalent_pairs.push((i, j));
            }
        }
    }
    Ok(FamilySample {
        verdict,
        reduced_type,
        members,
        equivalent_pairs,
    })
}

fn sample_linear(
    p: &ProblemInstance,
    verdict: &FamilyVerdict,
    reduced_type: TypeTriple,
    count: usize,
) -> Result<Vec<FamilyMember>, FamilyError> {
    let perm = verdict.permutation;
    let inverse = invert_perm(perm);
    let sorted_problem = ProblemInstance::new(
        permute_forms(&p.coeffs, perm),
        reduced_type.permuted(perm),
    );
    let pe = sorted_problem.ptype.get(1) as i128;
    let d1 = sorted_problem.coeffs[1].degree().expect("nonzero") as i128;
    let d2 = sorted_problem.coeffs[2].degree().expect("nonzero") as i128;
    let delta = (d2 - d1) / pe;
    let base1 = delta.max(0) as u32;
    let base2 = (-delta).max(0) as u32;
    let mut members = Vec::new();
    let mut attempts = 0usize;
    for level in 0..4u32 {
        let g2s = form_ladder(base2 + level, p.order(), 8);
        let g1s = form_ladder(base1 + level, p.order(), LADDER_LIMIT);
        for g2 in &g2s {
            for g1 in &g1s {
                attempts += 1;
                if attempts > MAX_ATTEMPTS {
                    return Err(FamilyError::InsufficientParameters);
                }
                match case2_member(&sorted_problem, g1, g2) {
                    Ok(member) => {
                        members.push(FamilyMember {
                            relation: member.relation.permuted(inverse),
                            parameters: member.parameters,
                        });
                        if members.len() == count {
                            return Ok(members);
                        }
                    }
                    Err(FamilyError::ZeroComponent)
                    | Err(FamilyError::DegreeMismatch) => continue,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Err(FamilyError::InsufficientParameters)
}

fn sample_conic(
    p: &ProblemInstance,
    witness: &Relation,
    count: usize,
) -> Result<Vec<FamilyMember>, FamilyError> {
    let reduced = ProblemInstance::new(
        p.coeffs.clone(),
        TypeTriple::new([2, 2, 2]).expect("positive entries"),
    );
    let degrees: Vec<u64> = p
        .coeffs
        .iter()
        .map(|f| f.degree().expect("validated nonzero") as u64)
        .collect();
    let max = *degrees.iter().max().expect("three entries");
    if degrees.iter().any(|&d| (max - d) % 2 != 0) {
        return Err(FamilyError::DegreeMismatch);
    }
    let mut members = Vec::new();
    for c in direction_ladder(2048) {
        if members.len() == count {
            break;
        }
        let mut direction = Vec::with_capacity(3);
        for i in 0..3 {
            let exponent = u32::try_from((max - degrees[i]) / 2).expect("small exponent");
            let base = Form::var_pow(0, exponent, p.order());
            direction.push(base.scale(&Scalar::from_integer(c[i], p.order())));
        }
        let direction = [
            direction[0].clone(),
            direction[1].clone(),
            direction[2].clone(),
        ];
        match conic_member(&reduced, witness, &direction) {
            Ok(member) => members.push(member),
            Err(FamilyError::ZeroComponent)
            | Err(FamilyError::DegenerateDirection)
            | Err(FamilyError::DegreeMismatch) => continue,
            Err(e) => return Err(e),
        }
    }
    if members.len() < count {
        return Err(FamilyError::InsufficientParameters);
    }
    Ok(members)
}

fn invert_perm(perm: [usize; 3]) -> [usize; 3] {
    let mut inverse = [0usize; 3];
    for (k, &p) in perm.iter().enumerate() {
        inverse[p] = k;
    }
    inverse
}

/// All monomials of the given total degree, in descending canonical order.
fn monomials_desc(degree: u32, order: u32) -> Vec<Form> {
    let mut out = Vec::new();
    for e0 in (0..=degree).rev() {
        for e1 in (0..=(degree - e0)).rev() {
            let m = crate::poly::Mono([e0, e1, degree - e0 - e1]);
            out.push(Form::monomial(m, Scalar::one(order)));
        }
    }
    out
}

/// Deterministic ladder of forms of one degree: single monomials first, then
/// signed sums of larger monomial subsets (first term always +), subsets
/// enumerated by a binary counter over the descending monomial list.
fn form_ladder(degree: u32, order: u32, max_entries: usize) -> Vec<Form> {
    let monos = monomials_desc(degree, order);
    let bits = monos.len().min(16);
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << bits) {
        let subset: Vec<usize> = (0..bits).filter(|i| mask & (1 << i) != 0).collect();
        let signs = subset.len() - 1;
        for s in 0u32..(1u32 << signs) {
            let mut f = Form::zero(order);
            for (idx, &i) in subset.iter().enumerate() {
                let negative = idx > 0 && (s >> (signs - idx)) & 1 == 1;
                f = if negative {
                    &f - &monos[i]
                } else {
                    &f + &monos[i]
                };
            }
            out.push(f);
            if out.len() == max_entries {
                return out;
            }
        }
    }
    out
}

/// Deterministic ladder of primitive integer direction triples:
/// (1,0,0), (0,1,0), (0,0,1), (1,1,0), (1,-1,0), (1,0,1), ... then larger
/// entries.
fn direction_ladder(max_entries: usize) -> Vec<[i64; 3]> {
    let mut out: Vec<[i64; 3]> = vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        for sign in [1i64, -1] {
            let mut v = [0i64; 3];
            v[i] = 1;
            v[j] = sign;
            out.push(v);
        }
    }
    for s1 in [1i64, -1] {
        for s2 in [1i64, -1] {
            out.push([1, s1, s2]);
        }
    }
    let mut level = 2i64;
    while out.len() < max_entries {
        for b0 in 0..=level {
            for b1 in -level..=level {
                for b2 in -level..=level {
                    let v = [b0, b1, b2];
                    if v.iter().map(|x| x.abs()).max() != Some(level) {
                        continue;
                    }
                    let first = v.iter().find(|&&x| x != 0);
                    if first.map_or(true, |&x| x < 0) {
                        continue;
                    }
                    let g = v
                        .iter()
                        .fold(0i64, |acc, &x| num_integer::Integer::gcd(&acc, &x));
                    if g != 1 {
                        continue;
                    }
                    out.push(v);
                    if out.len() == max_entries {
                        return out;
                    }
                }
            }
        }
        level += 1;
    }
    out.truncate(max_entries);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_form;

    fn forms(f: [&str; 3], order: u32) -> [Form; 3] {
        [
            parse_form(f[0], order).unwrap(),
            parse_form(f[1], order).unwrap(),
            parse_form(f[2], order).unwrap(),
        ]
    }

    fn problem(f: [&str; 3], p: [u64; 3], order: u32) -> ProblemInstance {
        ProblemInstance::new(forms(f, order), TypeTriple::new(p).unwrap())
    }

    fn relation(h: [&str; 3], order: u32) -> Relation {
        Relation::new(forms(h, order))
    }

    #[test]
    fn classification_examples() {
        let cusp = problem(["1", "1", "x0^6 + x1^6"], [2, 3, 6], 1);
        let v = family_exists(&cusp, None, 0).unwrap();
        assert_eq!(v.status, FamilyStatus::No);
        assert_eq!(v.case, None);

        let linear = problem(["1", "1", "-x0^2"], [1, 2, 2], 1);
        let v = family_exists(&linear, None, 0).unwrap();
        assert_eq!(v.status, FamilyStatus::Yes);
        assert_eq!(v.case, Some(FamilyCase::LinearP0Equals1));
        assert_eq!(v.permutation, [0, 1, 2]);

        let conic = problem(["x1", "x2", "-x1 - x2"], [2, 2, 2], 1);
        let witness = relation(["1", "1", "1"], 1);
        let v = family_exists(&conic, Some(&witness), 0).unwrap();
        assert_eq!(v.status, FamilyStatus::Yes);
        assert_eq!(v.case, Some(FamilyCase::Conic222));

        let generic = problem(["1", "1", "1"], [2, 2, 2], 1);
        let v = family_exists(&generic, None, 0).unwrap();
        assert_eq!(v.status, FamilyStatus::Unknown);
        assert_eq!(v.case, None);
    }

    #[test]
    fn divisibility_failure_is_a_definite_no() {
        let p = problem(["1", "x0", "1"], [1, 3, 3], 1);
        let v = family_exists(&p, None, 0).unwrap();
        assert_eq!(v.status, FamilyStatus::No);
        assert_eq!(v.case, None);
    }

    #[test]
    fn witness_search_finds_the_line_conic_point() {
        let conic = problem(["x1", "x2", "-x1 - x2"], [2, 2, 2], 1);
        let v = family_exists(&conic, None, 0).unwrap();
        assert_eq!(v.status, FamilyStatus::Yes);
        assert_eq!(v.case, Some(FamilyCase::Conic222));
    }

    #[test]
    fn unreduced_types_are_classified_via_their_reduction() {
        // (2,2,8) reduces to (2,2,2).
        let p = problem(["x1", "x2", "-x1 - x2"], [2, 2, 8], 1);
        let witness = relation(["1", "1", "1"], 1);
        let v = family_exists(&p, Some(&witness), 0).unwrap();
        assert_eq!(v.status, FamilyStatus::Yes);
        assert_eq!(v.case, Some(FamilyCase::Conic222));
        // (2,2,7) reduces to (2,2,1), which sorts to (1,2,2).
        let p = problem(["x0", "x1", "-x0 - x1"], [2, 2, 7], 1);
        let v = family_exists(&p, None, 0).unwrap();
        assert_eq!(v.status, FamilyStatus::Yes);
        assert_eq!(v.case, Some(FamilyCase::LinearP0Equals1));
        assert_eq!(v.permutation, [2, 0, 1]);
    }

    #[test]
    fn invalid_witness_is_an_error() {
        let conic = problem(["x1", "x2", "-x1 - x2"], [2, 2, 2], 1);
        let bad = relation(["1", "1", "2"], 1);
        assert_eq!(
            family_exists(&conic, Some(&bad), 0),
            Err(FamilyError::WitnessInvalid)
        );
    }

    #[test]
    fn linear_member_fixture_and_degenerate_choice() {
        let p = problem(["1", "1", "-x0^2"], [1, 2, 2], 1);
        let g2 = parse_form("1", 1).unwrap();
        let m = case2_member(&p, &parse_form("x1", 1).unwrap(), &g2).unwrap();
        assert_eq!(m.relation, relation(["x0^2 - x1^2", "x1", "1"], 1));
        assert_eq!(
            case2_member(&p, &parse_form("x0", 1).unwrap(), &g2),
            Err(FamilyError::ZeroComponent)
        );
        // Unbalanced parameter degrees are rejected.
        assert_eq!(
            case2_member(&p, &parse_form("x1^2", 1).unwrap(), &g2),
            Err(FamilyError::DegreeMismatch)
        );
    }

    #[test]
    fn linear_member_with_nonconstant_first_coefficient() {
        let p = problem(["x0", "x1", "-x0 - x1"], [1, 2, 2], 1);
        let one = parse_form("1", 1).unwrap();
        let m = case2_member(&p, &one, &one).unwrap();
        assert_eq!(m.relation, relation(["x0^2", "x0", "x0"], 1));
        assert_eq!(verify_relation(&p, &m.relation), Ok(true));
    }

    #[test]
    fn printed_sign_variant_fails_while_corrected_variant_passes() {
        // The h0 with an internal minus sign does not satisfy the defining
        // equation; the corrected overall-negated sum does.
        let p = problem(["1", "1", "-x0^2"], [1, 2, 2], 1);
        let wrong = relation(["x0^2 + x1^2", "x1", "1"], 1);
        assert_eq!(verify_relation(&p, &wrong), Ok(false));
        let corrected = case2_member(
            &p,
            &parse_form("x1", 1).unwrap(),
            &parse_form("1", 1).unwrap(),
        )
        .unwrap();
        assert_eq!(verify_relation(&p, &corrected.relation), Ok(true));
    }

    #[test]
    fn conic_member_examples() {
        let p = problem(["x1", "x2", "-x1 - x2"], [2, 2, 2], 1);
        let a = relation(["1", "1", "1"], 1);
        let b100 = forms(["1", "0", "0"], 1);
        let m = conic_member(&p, &a, &b100).unwrap();
        assert_eq!(m.relation, relation(["-x1", "x1", "x1"], 1));
        let b010 = forms(["0", "1", "0"], 1);
        let m = conic_member(&p, &a, &b010).unwrap();
        assert_eq!(m.relation, relation(["x2", "-x2", "x2"], 1));
        let diagonal = forms(["1", "1", "1"], 1);
        assert_eq!(
            conic_member(&p, &a, &diagonal),
            Err(FamilyError::DegenerateDirection)
        );
    }

    #[test]
    fn conic_construction_satisfies_the_quadric_identity() {
        // Σ Fᵢ·hᵢ² = Q(b)²·Q(a) for any a, not only conic points.
        let order = 1;
        let f = forms(["x1", "x2", "-x1 - x2"], order);
        let a = forms(["x0", "x1", "x2"], order);
        let b = forms(["x2", "x0", "x1"], order);
        let q_b = quadric(&f, &b, &b).unwrap();
        let q_a = quadric(&f, &a, &a).unwrap();
        let bil = quadric(&f, &a, &b).unwrap();
        let two = Form::from_integer(2, order);
        let mut lhs = Form::zero(order);
        for i in 0..3 {
            let h =
                (a[i].clone() * q_b.clone()).try_sub(&(&(&two * &b[i]) * &bil)).unwrap();
            lhs = lhs.try_add(&(&f[i] * &h.pow(2))).unwrap();
        }
        let rhs = &q_b.pow(2) * &q_a;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn linear_sampling_follows_the_documented_ladder() {
        let p = problem(["1", "1", "-x0^2"], [1, 2, 2], 1);
        let sample = family_sample(&p, None, 3, 0).unwrap();
        let g1s: Vec<Form> = sample
            .members
            .iter()
            .map(|m| match &m.parameters {
                FamilyParameters::Pair { g1, .. } => g1.clone(),
                _ => panic!("linear parameters expected"),
            })
            .collect();
        assert_eq!(
            g1s,
            vec![
                parse_form("x1", 1).unwrap(),
                parse_form("x0 + x1", 1).unwrap(),
                parse_form("x0 - x1", 1).unwrap(),
            ]
        );
        assert!(sample.equivalent_pairs.is_empty());
        for m in &sample.members {
            assert_eq!(verify_relation(&p, &m.relation), Ok(true));
        }
    }

    #[test]
    fn conic_sampling_emits_verifying_members() {
        let p = problem(["x1", "x2", "-x1 - x2"], [2, 2, 2], 1);
        let witness = relation(["1", "1", "1"], 1);
        let sample = family_sample(&p, Some(&witness), 2, 0).unwrap();
        assert_eq!(sample.members.len(), 2);
        assert_eq!(
            sample.members[0].relation,
            relation(["-x1", "x1", "x1"], 1)
        );
        assert_eq!(
            sample.members[1].relation,
            relation(["x2", "-x2", "x2"], 1)
        );
        for m in &sample.members {
            assert_eq!(verify_relation(&p, &m.relation), Ok(true));
        }
    }

    #[test]
    fn sampling_without_family_or_witness_fails() {
        let cusp = problem(["1", "1", "x0^6 + x1^6"], [2, 3, 6], 1);
        assert_eq!(
            family_sample(&cusp, None, 2, 0),
            Err(FamilyError::NoFamily)
        );
        let generic = problem(["1", "1", "1"], [2, 2, 2], 1);
        assert_eq!(
            family_sample(&generic, None, 2, 0),
            Err(FamilyError::WitnessNotFound)
        );
    }

    #[test]
    fn sampled_members_map_back_through_the_sort_permutation() {
        // Type (2,2,1) sorts to (1,2,2) with permutation [2,0,1]; members
        // verify at the original coordinate order.
        let p = problem(["x0", "x1", "-x0 - x1"], [2, 2, 1], 1);
        let sample = family_sample(&p, None, 1, 0).unwrap();
        assert_eq!(sample.verdict.permutation, [2, 0, 1]);
        let m = &sample.members[0].relation;
        assert_eq!(
            m,
            &relation(["-x0 - x1", "-x0 - x1", "(x0 + x1)^2"], 1)
        );
        let q = ProblemInstance::new(p.coeffs.clone(), sample.reduced_type);
        assert_eq!(verify_relation(&q, m), Ok(true));
    }

    #[test]
    fn classification_matches_the_case_analysis_up_to_twelve() {
        for p0 in 1..=12u64 {
            for p1 in p0..=12u64 {
                for p2 in p1..=12u64 {
                    let t = TypeTriple::new([p0, p1, p2]).unwrap();
                    if !t.is_reduced() || t.sorted().0 != t {
                        continue;
                    }
                    let p = problem(["1", "1", "1"], [p0, p1, p2], 1);
                    let v = family_exists(&p, None, 0).unwrap();
                    let s = t.entries();
                    if s[0] == 1 {
                        assert_eq!(v.status, FamilyStatus::Yes, "type {s:?}");
                    } else if s == [2, 2, 2] {
                        assert_eq!(v.status, FamilyStatus::Unknown, "type {s:?}");
                    } else {
                        assert_eq!(v.status, FamilyStatus::No, "type {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn lifting_a_linear_member_reproduces_the_power_shape() {
        // A (2,2,1) member lifted to (2,2,2n+1) has shape
        // (h2^n·g0, h2^n·g1, h2).
        let p = problem(["x0", "x1", "-x0 - x1"], [2, 2, 1], 1);
        let sample = family_sample(&p, None, 1, 0).unwrap();
        let member = &sample.members[0].relation;
        for (target, n) in [([2u64, 2, 5], 2u32), ([2, 2, 7], 3)] {
            let target = TypeTriple::new(target).unwrap();
            let lifted =
                crate::correspond::transport_from_reduced(target, member).unwrap();
            let p_target = ProblemInstance::new(p.coeffs.clone(), target);
            assert_eq!(verify_relation(&p_target, &lifted), Ok(true));
            assert_eq!(lifted.h[2], member.h[2]);
            let power = lifted.h[2].pow(n);
            assert!(lifted.h[0].exact_div(&power).is_ok());
            assert!(lifted.h[1].exact_div(&power).is_ok());
        }
    }
}
