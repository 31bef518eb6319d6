//! Transport of relations between exponent types and the dictionary between
//! reduced relations and points on an associated plane curve.
//!
//! Raising one component to an m-th power divides that type entry by m
//! ([`push_down`]); the inverse direction multiplies components by powers of
//! the moved coordinate, with exponents chosen by a congruence
//! ([`lift_up`]).  Chaining these over the three coordinates transports any
//! relation to the reduced type and back, up to equivalence.
//!
//! For a reduced type, every relation determines a point (z1, z2) on the
//! curve F0·z1^e1 + F1·z2^e2 + F2 = 0 with e1 = p0/s01 and e2 = p1/s01;
//! [`curve_fiber`] enumerates the relations over a point and
//! [`point_to_relation`] inverts the map when s01 = 1.

use std::fmt;

use crate::poly::{Form, FormRatio, Scalar};
use crate::relation::{xgcd, Relation};
use crate::types::{degree_compatible, TypeTriple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorrespondError {
    /// A relation component, point numerator, or scaling input was zero.
    ZeroComponent,
    /// The divisibility condition for moving a coordinate fails.
    ConditionViolated { coordinate: usize, m: u64 },
    /// The operation is defined for reduced types only.
    NotReduced,
    /// Coefficient degrees are incompatible with the type.
    DegreeIncompatible,
    /// The field lacks the roots of unity needed for the fiber.
    FieldTooSmall { needed: u64, available: u64 },
    /// Inversion requires s01 = 1.
    NotApplicable,
    /// The point does not satisfy the curve equation.
    NotOnCurve,
    /// The witness relation does not lie over the given point.
    PointMismatch,
}

impl fmt::Display for CorrespondError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorrespondError::ZeroComponent => {
                write!(f, "components must be nonzero")
            }
            CorrespondError::ConditionViolated { coordinate, m } => {
                write!(
                    f,
                    "coordinate {coordinate} cannot be moved by factor {m}"
                )
            }
            CorrespondError::NotReduced => write!(f, "the type must be reduced"),
            CorrespondError::DegreeIncompatible => {
                write!(f, "coefficient degrees are incompatible with the type")
            }
            CorrespondError::FieldTooSmall { needed, available } => {
                write!(
                    f,
                    "need a root of unity of order {needed}, but the field only \
                     has a group of order {available}"
                )
            }
            CorrespondError::NotApplicable => {
                write!(f, "inversion requires s01 = 1")
            }
            CorrespondError::NotOnCurve => {
                write!(f, "the point does not satisfy the curve equation")
            }
            CorrespondError::PointMismatch => {
                write!(f, "the witness relation lies over a different point")
            }
        }
    }
}

impl std::error::Error for CorrespondError {}

fn swap_with_last(coordinate: usize) -> [usize; 3] {
    let mut perm = [0usize, 1, 2];
    perm.swap(coordinate, 2);
    perm
}

fn small_exp(e: u64) -> u32 {
    u32::try_from(e).expect("exponent fits in 32 bits")
}

/// Raises the chosen component to its m-th power, dividing that entry of the
/// type by m.  Requires m ≥ 1 and m | p[coordinate].
pub fn push_down(
    r: &Relation,
    coordinate: usize,
    m: u64,
    ptype: TypeTriple,
) -> Result<(Relation, TypeTriple), CorrespondError> {
    assert!(coordinate < 3, "coordinate index out of range");
    if r.has_zero_component() {
        return Err(CorrespondError::ZeroComponent);
    }
    let p = ptype.entries();
    if m == 0 || p[coordinate] % m != 0 {
        return Err(CorrespondError::ConditionViolated { coordinate, m });
    }
    let mut h = r.h.clone();
    h[coordinate] = h[coordinate].pow(small_exp(m));
    let mut q = p;
    q[coordinate] = q[coordinate] / m;
    Ok((
        Relation::new(h),
        TypeTriple::new(q).expect("entries stay positive"),
    ))
}

/// Multiplies the type entry at `coordinate` by m, using the smallest
/// admissible congruence parameter k.  `target` is the type of the result;
/// m must divide the t-value of `target` at that coordinate.
pub fn lift_up(
    r: &Relation,
    coordinate: usize,
    m: u64,
    target: TypeTriple,
) -> Result<Relation, CorrespondError> {
    assert!(coordinate < 3, "coordinate index out of range");
    if m == 0 {
        return Err(CorrespondError::ConditionViolated { coordinate, m });
    }
    let perm = swap_with_last(coordinate);
    let dec = target.permuted(perm).decompose();
    let x = (dec.s01 as u128 * dec.t[0] as u128 % m as u128) * dec.t[1] as u128 % m as u128;
    let k = match mod_inverse(x as u64, m) {
        Some(inv) => (m - 1) as u128 * inv as u128 % m as u128,
        None => return Err(CorrespondError::ConditionViolated { coordinate, m }),
    };
    lift_up_with_k(r, coordinate, m, target, k as u64)
}

/// [`lift_up`] with an explicit congruence parameter
/// k·s01·t0·t1 ≡ -1 (mod m); any admissible k gives an equivalent result.
pub fn lift_up_with_k(
    r: &Relation,
    coordinate: usize,
    m: u64,
    target: TypeTriple,
    k: u64,
) -> Result<Relation, CorrespondError> {
    assert!(coordinate < 3, "coordinate index out of range");
    if r.has_zero_component() {
        return Err(CorrespondError::ZeroComponent);
    }
    if m == 0 {
        return Err(CorrespondError::ConditionViolated { coordinate, m });
    }
    let perm = swap_with_last(coordinate);
    let dec = target.permuted(perm).decompose();
    if dec.t[2] % m != 0 {
        return Err(CorrespondError::ConditionViolated { coordinate, m });
    }
    let congruence =
        (k as u128 * dec.s01 as u128 % m as u128) * (dec.t[0] as u128 * dec.t[1] as u128 % m as u128)
            % m as u128;
    if (congruence + 1) % m as u128 != 0 {
        return Err(CorrespondError::ConditionViolated { coordinate, m });
    }
    let e0 = k as u128 * dec.s12 as u128 * dec.t[1] as u128 * (dec.t[2] / m) as u128;
    let e1 = k as u128 * dec.s02 as u128 * dec.t[0] as u128 * (dec.t[2] / m) as u128;
    let e2 = (1 + k as u128 * dec.s01 as u128 * dec.t[0] as u128 * dec.t[1] as u128)
        / m as u128;
    let h = r.permuted(perm).h;
    let base = &h[2];
    let lifted = [
        &base.pow(wide_exp(e0)) * &h[0],
        &base.pow(wide_exp(e1)) * &h[1],
        base.pow(wide_exp(e2)),
    ];
    Ok(Relation::new(lifted).permuted(perm))
}

fn wide_exp(e: u128) -> u32 {
    u32::try_from(e).expect("exponent fits in 32 bits")
}

fn mod_inverse(x: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, s, _) = xgcd(x as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(s.rem_euclid(m as i128) as u64)
}

/// Pushes each coordinate down by its t-value until the type is reduced.
/// Returns the transported relation and the reduced type.
pub fn transport_to_reduced(
    ptype: TypeTriple,
    r: &Relation,
) -> Result<(Relation, TypeTriple), CorrespondError> {
    let mut cur = r.clone();
    let mut cur_type = ptype;
    for coordinate in 0..3 {
        let m = cur_type.decompose().t[coordinate];
        if m > 1 {
            (cur, cur_type) = push_down(&cur, coordinate, m, cur_type)?;
        }
    }
    debug_assert_eq!(cur_type, ptype.reduce());
    Ok((cur, cur_type))
}

/// Lifts a relation of the reduced type of `target` back up to `target`,
/// coordinate by coordinate.
pub fn transport_from_reduced(
    target: TypeTriple,
    r: &Relation,
) -> Result<Relation, CorrespondError> {
    let t = target.decompose().t;
    let mut cur = r.clone();
    let mut cur_type = target.reduce();
    for coordinate in 0..3 {
        let m = t[coordinate];
        if m > 1 {
            let mut entries = cur_type.entries();
            entries[coordinate] *= m;
            let step = TypeTriple::new(entries).expect("entries stay positive");
            cur = lift_up(&cur, coordinate, m, step)?;
            cur_type = step;
        }
    }
    debug_assert_eq!(cur_type, target);
    Ok(cur)
}

/// Exponents of the plane curve F0·z1^e1 + F1·z2^e2 + F2 = 0 attached to a
/// reduced, degree-compatible problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub e1: u64,
    pub e2: u64,
}

/// A point (z1, z2) with coordinates in the function field.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvePoint {
    pub z1: FormRatio,
    pub z2: FormRatio,
}

pub fn curve_spec(
    coeffs: &[Form; 3],
    ptype: TypeTriple,
) -> Result<CurveSpec, CorrespondError> {
    let dec = ptype.decompose();
    if !ptype.is_reduced() {
        return Err(CorrespondError::NotReduced);
    }
    let mut degrees = [0u64; 3];
    for i in 0..3 {
        degrees[i] = match coeffs[i].degree() {
            Some(d) => d as u64,
            None => return Err(CorrespondError::DegreeIncompatible),
        };
    }
    if !degree_compatible(&ptype, degrees) {
        return Err(CorrespondError::DegreeIncompatible);
    }
    Ok(CurveSpec {
        e1: dec.p.get(0) / dec.s01,
        e2: dec.p.get(1) / dec.s01,
    })
}

/// The point under a relation of a reduced type:
/// z1 = h0^s01 / h2^s12 and z2 = h1^s01 / h2^s02.
pub fn curve_point(ptype: TypeTriple, r: &Relation) -> Result<CurvePoint, CorrespondError> {
    if !ptype.is_reduced() {
        return Err(CorrespondError::NotReduced);
    }
    if r.has_zero_component() {
        return Err(CorrespondError::ZeroComponent);
    }
    let dec = ptype.decompose();
    let z1 = FormRatio::new(
        r.h[0].pow(small_exp(dec.s01)),
        r.h[2].pow(small_exp(dec.s12)),
    )
    .expect("denominator is nonzero");
    let z2 = FormRatio::new(
        r.h[1].pow(small_exp(dec.s01)),
        r.h[2].pow(small_exp(dec.s02)),
    )
    .expect("denominator is nonzero");
    Ok(CurvePoint { z1, z2 })
}

/// Whether the point satisfies the curve equation after clearing
/// denominators: F0·n1^e1·d2^e2 + F1·n2^e2·d1^e1 + F2·d1^e1·d2^e2 = 0.
pub fn point_on_curve(coeffs: &[Form; 3], ptype: TypeTriple, pt: &CurvePoint) -> bool {
    let dec = ptype.decompose();
    let e1 = small_exp(dec.p.get(0) / dec.s01);
    let e2 = small_exp(dec.p.get(1) / dec.s01);
    let d1 = pt.z1.denominator().pow(e1);
    let d2 = pt.z2.denominator().pow(e2);
    let t0 = &(&coeffs[0] * &pt.z1.numerator().pow(e1)) * &d2;
    let t1 = &(&coeffs[1] * &pt.z2.numerator().pow(e2)) * &d1;
    let t2 = &(&coeffs[2] * &d1) * &d2;
    let sum = match t0.try_add(&t1).and_then(|s| s.try_add(&t2)) {
        Ok(s) => s,
        Err(_) => return false,
    };
    sum.is_zero()
}

/// All s01 relations over the point of `witness`, obtained by scaling the
/// middle component by the s01-th roots of unity.  The witness itself comes
/// first.
pub fn curve_fiber(
    ptype: TypeTriple,
    pt: &CurvePoint,
    witness: &Relation,
) -> Result<Vec<Relation>, CorrespondError> {
    if !ptype.is_reduced() {
        return Err(CorrespondError::NotReduced);
    }
    if witness.has_zero_component() {
        return Err(CorrespondError::ZeroComponent);
    }
    if curve_point(ptype, witness)? != *pt {
        return Err(CorrespondError::PointMismatch);
    }
    let s01 = ptype.decompose().s01;
    let order = witness.order();
    let available = Scalar::unity_group_order(order);
    if available % s01 != 0 {
        return Err(CorrespondError::FieldTooSmall {
            needed: s01,
            available,
        });
    }
    let zeta = Scalar::unity_pow(order, available / s01);
    let mut out = Vec::with_capacity(s01 as usize);
    for k in 0..s01 {
        out.push(Relation::new([
            witness.h[0].clone(),
            witness.h[1].scale(&zeta.pow(k)),
            witness.h[2].clone(),
        ]));
    }
    Ok(out)
}

/// Inverts the point map when s01 = 1: with z1 = g0/g1 and z2 = g2/g3 in
/// lowest terms, the relation is
/// (g1^(s12-1)·g3^s12·g0, g1^s02·g3^(s02-1)·g2, g1·g3).
pub fn point_to_relation(
    coeffs: &[Form; 3],
    ptype: TypeTriple,
    pt: &CurvePoint,
) -> Result<Relation, CorrespondError> {
    if !ptype.is_reduced() {
        return Err(CorrespondError::NotReduced);
    }
    let dec = ptype.decompose();
    if dec.s01 != 1 {
        return Err(CorrespondError::NotApplicable);
    }
    if !point_on_curve(coeffs, ptype, pt) {
        return Err(CorrespondError::NotOnCurve);
    }
    let g0 = pt.z1.numerator();
    let g1 = pt.z1.denominator();
    let g2 = pt.z2.numerator();
    let g3 = pt.z2.denominator();
    if g0.is_zero() || g2.is_zero() {
        return Err(CorrespondError::ZeroComponent);
    }
    let s02 = small_exp(dec.s02);
    let s12 = small_exp(dec.s12);
    let h0 = &(&g1.pow(s12 - 1) * &g3.pow(s12)) * g0;
    let h1 = &(&g1.pow(s02) * &g3.pow(s02 - 1)) * g2;
    let h2 = g1 * g3;
    let rel = Relation::new([h0, h1, h2]);
    debug_assert_eq!(
        crate::relation::verify_relation(
            &crate::relation::ProblemInstance::new(coeffs.clone(), ptype),
            &rel
        ),
        Ok(true),
        "reconstructed relation must verify"
    );
    Ok(rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_form;
    use crate::relation::{equivalent, verify_relation, ProblemInstance};

    fn forms(f: [&str; 3], order: u32) -> [Form; 3] {
        [
            parse_form(f[0], order).unwrap(),
            parse_form(f[1], order).unwrap(),
            parse_form(f[2], order).unwrap(),
        ]
    }

    fn relation(h: [&str; 3], order: u32) -> Relation {
        Relation::new(forms(h, order))
    }

    fn tt(p: [u64; 3]) -> TypeTriple {
        TypeTriple::new(p).unwrap()
    }

    #[test]
    fn push_down_divides_the_type_entry() {
        let r = relation(["x0*(x0*x1)^2", "x1*(x0*x1)^2", "x0*x1"], 1);
        let (down, q) = push_down(&r, 2, 5, tt([2, 2, 5])).unwrap();
        assert_eq!(q, tt([2, 2, 1]));
        assert_eq!(
            down,
            relation(["x0*(x0*x1)^2", "x1*(x0*x1)^2", "(x0*x1)^5"], 1)
        );
        let p = ProblemInstance::new(forms(["x1", "x0", "-x0 - x1"], 1), q);
        assert_eq!(verify_relation(&p, &down), Ok(true));
    }

    #[test]
    fn push_down_requires_divisibility() {
        let r = relation(["1", "1", "1"], 1);
        assert_eq!(
            push_down(&r, 0, 3, tt([2, 2, 5])),
            Err(CorrespondError::ConditionViolated {
                coordinate: 0,
                m: 3
            })
        );
    }

    #[test]
    fn lift_up_uses_the_smallest_congruence_parameter() {
        // Target (2,2,5): s01 = 2, so 2k = -1 (mod 5) gives k = 2 and
        // exponents (2, 2, 1).
        let down = relation(["x0*(x0*x1)^2", "x1*(x0*x1)^2", "(x0*x1)^5"], 1);
        let lifted = lift_up(&down, 2, 5, tt([2, 2, 5])).unwrap();
        assert_eq!(
            lifted,
            relation(
                [
                    "(x0*x1)^10*x0*(x0*x1)^2",
                    "(x0*x1)^10*x1*(x0*x1)^2",
                    "(x0*x1)^5"
                ],
                1
            )
        );
        let p = ProblemInstance::new(forms(["x1", "x0", "-x0 - x1"], 1), tt([2, 2, 5]));
        assert_eq!(verify_relation(&p, &lifted), Ok(true));
    }

    #[test]
    fn round_trip_transport_is_equivalent_to_the_start() {
        let ptype = tt([2, 2, 5]);
        let r = relation(["x0*(x0*x1)^2", "x1*(x0*x1)^2", "x0*x1"], 1);
        let (down, q) = transport_to_reduced(ptype, &r).unwrap();
        assert_eq!(q, tt([2, 2, 1]));
        let back = transport_from_reduced(ptype, &down).unwrap();
        let w = equivalent(ptype, &r, &back).unwrap().unwrap();
        assert_eq!(w.u, parse_form("1", 1).unwrap());
        assert_eq!(w.v, parse_form("(x0*x1)^2", 1).unwrap());
    }

    #[test]
    fn lift_up_with_nontrivial_base_component() {
        // Target (2,3,12) has s02 = 2, s12 = 3, t2 = 2; k = 1 gives
        // exponents (3, 2, 1).
        let reduced = relation(["z*x0^6", "-x0^2*x1^2", "x0"], 4);
        let p236 = ProblemInstance::new(forms(["1", "1", "x0^6 + x1^6"], 4), tt([2, 3, 6]));
        assert_eq!(verify_relation(&p236, &reduced), Ok(true));
        let lifted = lift_up(&reduced, 2, 2, tt([2, 3, 12])).unwrap();
        assert_eq!(lifted, relation(["z*x0^9", "-x0^4*x1^2", "x0"], 4));
        let p = ProblemInstance::new(forms(["1", "1", "x0^6 + x1^6"], 4), tt([2, 3, 12]));
        assert_eq!(verify_relation(&p, &lifted), Ok(true));
    }

    #[test]
    fn explicit_congruence_parameters_give_equivalent_lifts() {
        let down = relation(["x0*(x0*x1)^2", "x1*(x0*x1)^2", "(x0*x1)^5"], 1);
        let target = tt([2, 2, 5]);
        // k = 2 and k = 7 both satisfy 2k = -1 (mod 5).
        let a = lift_up_with_k(&down, 2, 5, target, 2).unwrap();
        let b = lift_up_with_k(&down, 2, 5, target, 7).unwrap();
        assert!(equivalent(target, &a, &b).unwrap().is_some());
        // k = 1 does not satisfy the congruence.
        assert_eq!(
            lift_up_with_k(&down, 2, 5, target, 1),
            Err(CorrespondError::ConditionViolated {
                coordinate: 2,
                m: 5
            })
        );
    }

    #[test]
    fn curve_spec_requires_reduced_and_compatible_degrees() {
        let f = forms(["1", "1", "x0^6 + x1^6"], 1);
        assert_eq!(
            curve_spec(&f, tt([2, 3, 6])),
            Ok(CurveSpec { e1: 2, e2: 3 })
        );
        assert_eq!(
            curve_spec(&f, tt([2, 3, 12])),
            Err(CorrespondError::NotReduced)
        );
        // deg F2 - deg F0 = 6 must be divisible by r·s02 = 2; with degree 5
        // it is not even homogeneously balanced.
        let bad = forms(["1", "1", "x0^5 + x1^5"], 1);
        assert_eq!(
            curve_spec(&bad, tt([2, 3, 6])),
            Err(CorrespondError::DegreeIncompatible)
        );
    }

    #[test]
    fn curve_point_is_an_equivalence_invariant() {
        let ptype = tt([2, 3, 6]);
        let a = relation(["z*x0^3", "-x1^2", "1"], 4);
        let b = relation(["z*x0^6", "-x0^2*x1^2", "x0"], 4);
        let pa = curve_point(ptype, &a).unwrap();
        let pb = curve_point(ptype, &b).unwrap();
        assert_eq!(pa, pb);
        assert_eq!(pa.z1.numerator(), &parse_form("z*x0^3", 4).unwrap());
        assert_eq!(pa.z1.denominator(), &parse_form("1", 4).unwrap());
        let f = forms(["1", "1", "x0^6 + x1^6"], 4);
        assert!(point_on_curve(&f, ptype, &pa));
    }

    #[test]
    fn fiber_scales_the_middle_component_by_roots_of_unity() {
        let ptype = tt([2, 2, 1]);
        let f = forms(["x0", "x1", "-x0 - x1"], 1);
        let witness = relation(["1", "1", "1"], 1);
        let pt = curve_point(ptype, &witness).unwrap();
        let fiber = curve_fiber(ptype, &pt, &witness).unwrap();
        assert_eq!(
            fiber,
            vec![relation(["1", "1", "1"], 1), relation(["1", "-1", "1"], 1)]
        );
        let p = ProblemInstance::new(f, ptype);
        for r in &fiber {
            assert_eq!(verify_relation(&p, r), Ok(true));
        }
    }

    #[test]
    fn fiber_needs_enough_roots_of_unity() {
        let ptype = tt([4, 4, 1]);
        let witness = relation(["1", "1", "1"], 1);
        let pt = curve_point(ptype, &witness).unwrap();
        assert_eq!(
            curve_fiber(ptype, &pt, &witness),
            Err(CorrespondError::FieldTooSmall {
                needed: 4,
                available: 2
            })
        );
        // Over the fourth cyclotomic field the full fiber exists.
        let witness4 = relation(["1", "1", "1"], 4);
        let pt4 = curve_point(ptype, &witness4).unwrap();
        let fiber = curve_fiber(ptype, &pt4, &witness4).unwrap();
        assert_eq!(fiber.len(), 4);
        assert_eq!(fiber[1].h[1], parse_form("z", 4).unwrap());
    }

    #[test]
    fn fiber_rejects_a_witness_over_another_point() {
        let ptype = tt([2, 2, 1]);
        let witness = relation(["1", "1", "1"], 1);
        // Scaling a relation by (u, v) = (1, x0) lands over the same point,
        // so the mismatch check must accept it...
        let scaled = relation(["x0", "x0", "x0^2"], 1);
        let pt = curve_point(ptype, &witness).unwrap();
        assert!(curve_fiber(ptype, &pt, &scaled).is_ok());
        // ...while a triple with different coordinate ratios is rejected.
        let other = relation(["x0", "x1", "x2"], 1);
        assert_eq!(
            curve_fiber(ptype, &pt, &other),
            Err(CorrespondError::PointMismatch)
        );
    }

    #[test]
    fn point_inversion_when_s01_is_one() {
        let ptype = tt([1, 1, 1]);
        let f = forms(["x0", "x1", "x2"], 1);
        let pt = CurvePoint {
            z1: FormRatio::new(
                parse_form("-x1 - x2", 1).unwrap(),
                parse_form("x0", 1).unwrap(),
            )
            .unwrap(),
            z2: FormRatio::new(parse_form("1", 1).unwrap(), parse_form("1", 1).unwrap())
                .unwrap(),
        };
        let rel = point_to_relation(&f, ptype, &pt).unwrap();
        assert_eq!(rel, relation(["-x1 - x2", "x0", "x0"], 1));
    }

    #[test]
    fn point_inversion_round_trips_a_relation() {
        let ptype = tt([2, 3, 6]);
        let f = forms(["1", "1", "x0^6 + x1^6"], 4);
        let r = relation(["z*x0^3", "-x1^2", "1"], 4);
        let pt = curve_point(ptype, &r).unwrap();
        let back = point_to_relation(&f, ptype, &pt).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn point_inversion_error_cases() {
        let f1 = forms(["x0", "x1", "x2"], 1);
        let ptype1 = tt([1, 1, 1]);
        let off = CurvePoint {
            z1: FormRatio::from_form(parse_form("x0", 1).unwrap()),
            z2: FormRatio::from_form(parse_form("x1", 1).unwrap()),
        };
        assert_eq!(
            point_to_relation(&f1, ptype1, &off),
            Err(CorrespondError::NotOnCurve)
        );
        // On the curve x0·z1 + x1·z2 + x2 = 0, but with a zero coordinate.
        let zero = CurvePoint {
            z1: FormRatio::new(
                parse_form("-x2", 1).unwrap(),
                parse_form("x0", 1).unwrap(),
            )
            .unwrap(),
            z2: FormRatio::from_form(parse_form("0", 1).unwrap()),
        };
        assert_eq!(
            point_to_relation(&f1, ptype1, &zero),
            Err(CorrespondError::ZeroComponent)
        );
        let f2 = forms(["x0", "x1", "-x0 - x1"], 1);
        let ptype2 = tt([2, 2, 1]);
        let pt2 = curve_point(ptype2, &relation(["1", "1", "1"], 1)).unwrap();
        assert_eq!(
            point_to_relation(&f2, ptype2, &pt2),
            Err(CorrespondError::NotApplicable)
        );
    }
}
