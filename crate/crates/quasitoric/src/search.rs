//! Independent oracles: exhaustive enumeration of relations over a finite
//! coefficient grid, and direct completion of the determined component when
//! one exponent is 1.

use std::fmt;

use crate::poly::{Form, Mono, Scalar};
use crate::relation::{equivalent, verify_relation, ProblemInstance, Relation};

/// Default cap on the number of enumerated candidates.
pub const DEFAULT_SEARCH_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum SearchError {
    /// The requested search parameters violate their invariants.
    InvalidSpec(String),
    /// The candidate space exceeds the configured cap.
    BudgetExceeded { candidates: u128, cap: u64 },
    /// A supplied component (or the forced component) is zero.
    ZeroComponent,
    /// Completion requires a sorted reduced type (1, p, p).
    NotApplicable,
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::InvalidSpec(msg) => write!(f, "invalid search spec: {msg}"),
            SearchError::BudgetExceeded { candidates, cap } => {
                write!(f, "{candidates} candidates exceed the cap of {cap}")
            }
            SearchError::ZeroComponent => write!(f, "components must be nonzero"),
            SearchError::NotApplicable => {
                write!(f, "completion requires a type of shape (1, p, p)")
            }
        }
    }
}

impl std::error::Error for SearchError {}

/// What to enumerate: exact component degrees, the coefficient grid, and
/// whether to collapse `equivalent` duplicates.
#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub degree_bounds: [u32; 3],
    pub coefficient_set: Vec<Scalar>,
    pub dedupe: bool,
}

/// The relations found, plus a note when the degree bounds admit no
/// balanced candidates at all.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub relations: Vec<Relation>,
    pub note: Option<String>,
}

/// Enumerates every coefficient assignment over the grid for the monomial
/// bases at the given degrees (monomials in descending canonical order,
/// h0 coefficients first) and keeps the verifying triples with all
/// components nonzero.  Output order is lexicographic in the coefficient
/// vectors, indexed by the grid as given.
pub fn brute_force(
    p: &ProblemInstance,
    spec: &SearchSpec,
    cap: u64,
) -> Result<SearchOutcome, SearchError> {
    if spec.coefficient_set.is_empty() {
        return Err(SearchError::InvalidSpec(
            "the coefficient set is empty".to_string(),
        ));
    }
    if spec.coefficient_set.iter().all(Scalar::is_zero) {
        return Err(SearchError::InvalidSpec(
            "the coefficient set has no nonzero element".to_string(),
        ));
    }
    if spec
        .coefficient_set
        .iter()
        .any(|s| s.order() != p.order())
    {
        return Err(SearchError::InvalidSpec(
            "coefficients must live in the problem's field".to_string(),
        ));
    }
    let mut target = None;
    for i in 0..3 {
        let df = p.coeffs[i].degree().map(|d| d as u64);
        let df = match df {
            Some(d) => d,
            None => {
                return Err(SearchError::InvalidSpec(
                    "problem coefficients must be nonzero".to_string(),
                ))
            }
        };
        let total = df + p.ptype.get(i) * spec.degree_bounds[i] as u64;
        match target {
            None => target = Some(total),
            Some(t) if t != total => {
                return Ok(SearchOutcome {
                    relations: Vec::new(),
                    note: Some(format!(
                        "degree bounds [{}, {}, {}] are inconsistent with the \
                         balance constraint",
                        spec.degree_bounds[0], spec.degree_bounds[1], spec.degree_bounds[2]
                    )),
                })
            }
            _ => {}
        }
    }
    let bases: Vec<Vec<Mono>> = spec
        .degree_bounds
        .iter()
        .map(|&d| monomials(d))
        .collect();
    let positions: usize = bases.iter().map(Vec::len).sum();
    let grid = spec.coefficient_set.len() as u128;
    let candidates = grid
        .checked_pow(u32::try_from(positions).map_err(|_| {
            SearchError::InvalidSpec("degree bounds are too large".to_string())
        })?)
        .unwrap_or(u128::MAX);
    if candidates > cap as u128 {
        return Err(SearchError::BudgetExceeded { candidates, cap });
    }
    let mut indices = vec![0usize; positions];
    let mut relations: Vec<Relation> = Vec::new();
    loop {
        if let Some(r) = assemble(p.order(), &bases, &spec.coefficient_set, &indices) {
            if verify_relation(p, &r) == Ok(true) {
                let duplicate = spec.dedupe
                    && relations
                        .iter()
                        .any(|kept| matches!(equivalent(p.ptype, kept, &r), Ok(Some(_))));
                if !duplicate {
                    relations.push(r);
                }
            }
        }
        // Advance the odometer, rightmost position fastest.
        let mut pos = positions;
        loop {
            if pos == 0 {
                return Ok(SearchOutcome {
                    relations,
                    note: None,
                });
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < spec.coefficient_set.len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

/// All monomials of one total degree, descending canonical order.
fn monomials(degree: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for e0 in (0..=degree).rev() {
        for e1 in (0..=(degree - e0)).rev() {
            out.push(Mono([e0, e1, degree - e0 - e1]));
        }
    }
    out
}

/// Builds the candidate triple; None when some component is zero.
fn assemble(
    order: u32,
    bases: &[Vec<Mono>],
    grid: &[Scalar],
    indices: &[usize],
) -> Option<Relation> {
    let mut offset = 0;
    let mut h = Vec::with_capacity(3);
    for basis in bases {
        let mut component = Form::zero(order);
        for (j, mono) in basis.iter().enumerate() {
            let c = &grid[indices[offset + j]];
            if !c.is_zero() {
                component = &component + &Form::monomial(*mono, c.clone());
            }
        }
        if component.is_zero() {
            return None;
        }
        h.push(component);
        offset += basis.len();
    }
    Some(Relation::new([h[0].clone(), h[1].clone(), h[2].clone()]))
}

/// For a type (1, p, p), the first component is determined by the other
/// two: h0 = -(F1·h1^p + F2·h2^p) / F0 when that division is exact.
/// Returns None when the numerator is not homogeneously balanced or the
/// division fails.
pub fn complete_relation(
    p: &ProblemInstance,
    h1: &Form,
    h2: &Form,
) -> Result<Option<Relation>, SearchError> {
    let e = p.ptype.entries();
    if e[0] != 1 || e[1] != e[2] {
        return Err(SearchError::NotApplicable);
    }
    if h1.is_zero() || h2.is_zero() {
        return Err(SearchError::ZeroComponent);
    }
    let pe = u32::try_from(e[1]).expect("exponent fits in 32 bits");
    let numerator = match (&p.coeffs[1] * &h1.pow(pe)).try_add(&(&p.coeffs[2] * &h2.pow(pe)))
    {
        Ok(sum) => -&sum,
        Err(_) => return Ok(None),
    };
    if numerator.is_zero() {
        return Err(SearchError::ZeroComponent);
    }
    let h0 = match numerator.exact_div(&p.coeffs[0]) {
        Ok(q) => q,
        Err(_) => return Ok(None),
    };
    let r = Relation::new([h0, h1.clone(), h2.clone()]);
    debug_assert_eq!(verify_relation(p, &r), Ok(true));
    Ok(Some(r))
}
