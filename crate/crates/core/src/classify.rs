//! Structural multiplicity-freeness tests for Schur products, basic skew
//! Schur functions and products of two basic skew Schur functions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::{product_expansion, skew_expansion, Expansion, Method, Query, Term};
use crate::partition::Partition;
use crate::skew::SkewShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MfCase {
    P0,
    P1,
    P2,
    P3,
    P4,
    R0,
    R1,
    R2,
    R3,
    R4,
    V1,
    V2,
    V3,
    V4,
}

impl fmt::Display for MfCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for MfCase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every case that holds; multiplicity-free iff there is at least one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MfVerdict {
    pub multiplicity_free: bool,
    pub cases: Vec<MfCase>,
}

impl MfVerdict {
    fn from_cases(cases: Vec<MfCase>) -> Self {
        MfVerdict { multiplicity_free: !cases.is_empty(), cases }
    }
}

/// Collects the labels whose condition holds.
fn holding(checks: &[(MfCase, bool)]) -> MfVerdict {
    MfVerdict::from_cases(checks.iter().filter(|c| c.1).map(|c| c.0).collect())
}

/// Either ordering of a pair satisfies `pred`.
fn either<T>(x: &T, y: &T, pred: impl Fn(&T, &T) -> bool) -> bool {
    pred(x, y) || pred(y, x)
}

/// `s_mu s_nu` is multiplicity-free.
pub fn stembridge_mf(mu: &Partition, nu: &Partition) -> MfVerdict {
    let (a, b) = (mu.shape_class(), nu.shape_class());
    holding(&[
        (MfCase::P0, mu.is_empty() || nu.is_empty()),
        (MfCase::P1, a.is_one_line_rectangle || b.is_one_line_rectangle),
        (MfCase::P2, either(&a, &b, |x, y| x.is_two_line_rectangle && y.is_fat_hook)),
        (MfCase::P3, either(&a, &b, |x, y| x.is_rectangle && y.is_near_rectangle)),
        (MfCase::P4, a.is_rectangle && b.is_rectangle),
    ])
}

/// A partition inside the `m x n` box, with its shortness there.
struct Boxed {
    rect: bool,
    fat_hook: bool,
    zero: bool,
    shortness: usize,
}

impl Boxed {
    fn new(p: &Partition, m: usize, n: usize) -> Result<Self> {
        let class = p.shape_class();
        Ok(Boxed {
            rect: class.is_rectangle,
            fat_hook: class.is_fat_hook,
            zero: p.is_empty(),
            shortness: p.shortness(m, n)?,
        })
    }
}

/// The basic skew Schur function `s_s` is multiplicity-free.
pub fn gty_mf(s: &SkewShape) -> Result<MfVerdict> {
    if !s.is_basic() {
        return Err(Error::NotBasic(s.to_string()));
    }
    let lambda = s.outer();
    let (m, n) = (lambda.first(), lambda.len());
    let mu = Boxed::new(s.inner(), m, n)?;
    let star = Boxed::new(&lambda.complement(m, n)?, m, n)?;
    Ok(holding(&[
        (MfCase::R0, mu.zero || star.zero),
        (MfCase::R1, (mu.rect && mu.shortness == 1) || (star.rect && star.shortness == 1)),
        (MfCase::R2, either(&mu, &star, |x, y| x.rect && x.shortness == 2 && y.fat_hook)),
        (MfCase::R3, either(&mu, &star, |x, y| x.rect && y.fat_hook && y.shortness == 1)),
        (MfCase::R4, mu.rect && star.rect),
    ]))
}

/// Shape flags of a skew shape and of its rotation, where straight.
struct SkewClass {
    one_line: bool,
    two_line: bool,
    rect: bool,
    straight: bool,
    fat_hook: bool,
    near_rect: bool,
}

impl SkewClass {
    fn new(s: &SkewShape) -> Self {
        let views: Vec<_> =
            [s.clone(), s.rotate_pi()].into_iter().filter(SkewShape::is_straight).map(|v| v.outer().shape_class()).collect();
        let any = |f: fn(&crate::partition::ShapeClass) -> bool| views.iter().any(f);
        let own = if s.is_straight() { Some(s.outer().shape_class()) } else { None };
        SkewClass {
            one_line: own.is_some_and(|c| c.is_one_line_rectangle),
            two_line: own.is_some_and(|c| c.is_two_line_rectangle),
            rect: own.is_some_and(|c| c.is_rectangle),
            straight: !views.is_empty(),
            fat_hook: any(|c| c.is_fat_hook),
            near_rect: any(|c| c.is_near_rectangle),
        }
    }
}

/// `s_theta s_phi` for basic `theta`, `phi` is multiplicity-free. An empty
/// factor contributes `1`, so the verdict is that of the other factor.
pub fn skew_product_mf(theta: &SkewShape, phi: &SkewShape) -> Result<MfVerdict> {
    for s in [theta, phi] {
        if !s.is_basic() {
            return Err(Error::NotBasic(s.to_string()));
        }
    }
    if theta.is_empty() {
        return gty_mf(phi);
    }
    if phi.is_empty() {
        return gty_mf(theta);
    }
    let (t, f) = (SkewClass::new(theta), SkewClass::new(phi));
    Ok(holding(&[
        (MfCase::V1, either(&t, &f, |x, y| x.one_line && y.straight)),
        (MfCase::V2, either(&t, &f, |x, y| x.two_line && y.fat_hook)),
        (MfCase::V3, either(&t, &f, |x, y| x.rect && y.near_rect)),
        (MfCase::V4, t.rect && f.rect),
    ]))
}

/// The expansion named by a query.
pub fn query_expansion(query: &Query, method: Method) -> Result<Expansion> {
    Ok(match query {
        Query::Product { mu, nu } => product_expansion(mu, nu, method),
        Query::Skew { outer, inner } => skew_expansion(&SkewShape::new(outer.clone(), inner.clone())?, method),
    })
}

/// The lexicographically smallest term with coefficient at least 2.
pub fn multiplicity_witness(e: &Expansion) -> Option<(Partition, u64)> {
    e.terms().filter(|t| t.1 >= 2).last().map(|(p, c)| (p.clone(), c))
}

pub fn find_multiplicity_witness(query: &Query, method: Method) -> Result<Option<(Partition, u64)>> {
    Ok(multiplicity_witness(&query_expansion(query, method)?))
}

/// Serializable verdict with an optional coefficient-2 witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MfReport {
    pub multiplicity_free: bool,
    pub cases: Vec<MfCase>,
    pub witness: Option<Term>,
}

impl MfReport {
    pub fn new(verdict: MfVerdict, witness: Option<(Partition, u64)>) -> Self {
        MfReport {
            multiplicity_free: verdict.multiplicity_free,
            cases: verdict.cases,
            witness: witness.map(|(partition, coeff)| Term { partition, coeff }),
        }
    }
}
