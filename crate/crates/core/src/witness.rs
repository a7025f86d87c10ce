//! Explicit triples with `c^lambda_{mu nu} >= 2` for the infinite families
//! of non-multiplicity-free products and skew Schur functions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hive::lr_coefficient_hive;
use crate::partition::Partition;
use crate::skew::SkewShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessCase {
    Q1,
    Q2,
    Q3,
    T1i,
    T1ii,
    T2i,
    T2ii,
    T3i,
    T3ii,
    U1i,
    U1ii,
    U2i,
    U2ii,
    U3i,
    U3ii,
}

use WitnessCase::*;

impl WitnessCase {
    pub const ALL: [WitnessCase; 15] = [Q1, Q2, Q3, T1i, T1ii, T2i, T2ii, T3i, T3ii, U1i, U1ii, U2i, U2ii, U3i, U3ii];

    /// Parameter names, in order.
    pub fn params(self) -> &'static [char] {
        match self {
            Q3 | T3i | T3ii | U3i | U3ii => &['a', 'b', 'c', 'd'][..if self == Q3 { 3 } else { 4 }],
            Q1 | Q2 => &['a', 'b', 'c', 'd'],
            _ => &['a', 'b', 'c', 'd', 'e'],
        }
    }

    pub fn is_product(self) -> bool {
        matches!(self, Q1 | Q2 | Q3)
    }

    pub fn expected(self) -> Expected {
        match self {
            U1i | U1ii | U2i | U2ii | U3i | U3ii => Expected::AtLeast(2),
            _ => Expected::Exactly(2),
        }
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for WitnessCase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Normalizes `t1(ii)`, `T1ii`, `t1II` to `T1ii`.
fn normalize_label(text: &str) -> String {
    let compact: String = text.chars().filter(|c| !matches!(c, '(' | ')' | ' ')).collect();
    let (head, tail) = compact.split_at(compact.len().min(2));
    head.to_uppercase() + &tail.to_lowercase()
}

impl FromStr for WitnessCase {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let label = normalize_label(text);
        WitnessCase::ALL
            .into_iter()
            .find(|c| c.to_string() == label)
            .ok_or_else(|| Error::UnknownCase(text.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Exactly(u64),
    AtLeast(u64),
}

impl Expected {
    pub fn holds(self, count: u64) -> bool {
        match self {
            Expected::Exactly(k) => count == k,
            Expected::AtLeast(k) => count >= k,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exactly(k) => write!(f, "exactly {k}"),
            Expected::AtLeast(k) => write!(f, "at least {k}"),
        }
    }
}

impl Serialize for Expected {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Named integer parameters, written `a=2,b=1,...`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<char, i64>);

impl Params {
    pub fn new(values: &[(char, i64)]) -> Self {
        Params(values.iter().copied().collect())
    }

    /// Binds `values` to the case's parameter names in order.
    pub fn for_case(case: WitnessCase, values: &[i64]) -> Self {
        Params(case.params().iter().copied().zip(values.iter().copied()).collect())
    }

    fn values(&self, case: WitnessCase) -> Result<Vec<i64>> {
        case.params()
            .iter()
            .map(|&name| {
                self.0.get(&name).copied().ok_or(Error::MissingParam { case: case.to_string(), param: name.to_string() })
            })
            .collect()
    }
}

impl FromStr for Params {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = |reason: &str| Error::BadToken { token: item.into(), reason: reason.into() };
            let (name, value) = item.split_once('=').ok_or_else(|| bad("expected NAME=VALUE"))?;
            let mut chars = name.trim().chars();
            let (Some(name), None) = (chars.next(), chars.next()) else {
                return Err(bad("parameter names are single letters"));
            };
            let value = value.trim().parse().map_err(|_| bad("value is not an integer"))?;
            map.insert(name, value);
        }
        Ok(Params(map))
    }
}

/// A constructed triple and the coefficient it is expected to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub case: WitnessCase,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    /// `lambda` for product cases, `nu` for skew cases.
    pub constructed: Partition,
    pub expected: Expected,
}

impl Witness {
    fn product(case: WitnessCase, lambda: Partition, mu: Partition, nu: Partition) -> Self {
        Witness { case, constructed: lambda.clone(), lambda, mu, nu, expected: case.expected() }
    }

    fn skew(case: WitnessCase, lambda: Partition, mu: Partition, nu: Partition) -> Self {
        Witness { case, constructed: nu.clone(), lambda, mu, nu, expected: case.expected() }
    }

    /// `c^lambda_{mu nu}` by hive enumeration.
    pub fn coefficient(&self) -> u64 {
        lr_coefficient_hive(&self.lambda, &self.mu, &self.nu)
    }

    pub fn verify(&self) -> bool {
        self.expected.holds(self.coefficient())
    }
}

fn require(case: WitnessCase, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition { case: case.to_string(), reason: reason.into() })
    }
}

fn part(parts: &[i64]) -> Partition {
    Partition::from_unsorted(parts.iter().map(|&p| usize::try_from(p).expect("nonnegative part")).collect())
}

/// `s_mu s_nu` with a coefficient-2 term.
pub fn product_witness(case: WitnessCase, params: &Params) -> Result<Witness> {
    if !case.is_product() {
        return Err(Error::UnknownCase(format!("{case} is not a product case")));
    }
    let v = params.values(case)?;
    check_case(case, &v)?;
    match (case, v.as_slice()) {
        (Q1, &[a, b, c, d]) => {
            Ok(Witness::product(case, part(&[a + c - 1, b + d, 1]), part(&[a, b]), part(&[c, d])))
        }
        (Q2, &[a, b, c, d]) => {
            let lambda = part(&[a + d - 1, b + d - 1, c + 1, 1]);
            Ok(Witness::product(case, lambda, part(&[a, b, c]), part(&[d, d])))
        }
        (Q3, &[a, b, c]) => {
            let lambda = part(&[a + c - 1, a + c - 2, b + c - 1, b + 1, 2, 1]);
            Ok(Witness::product(case, lambda, part(&[a, a, b, b]), part(&[c, c, c])))
        }
        _ => unreachable!("parameter count fixed by the case"),
    }
}

/// `(lambda, mu)` of a skew case from its parameters.
fn skew_pair(case: WitnessCase, v: &[i64]) -> (Partition, Partition) {
    match (case, v) {
        (T1i | T1ii, &[a, b, c, d, e]) => (part(&[a, b, c]), part(&[d, e])),
        (T2i | T2ii, &[a, b, c, d, e]) => (part(&[a, b, c, d]), part(&[e, e])),
        (T3i | T3ii, &[a, b, c, d]) => (part(&[a, a, b, b, c, c]), part(&[d, d, d])),
        (U1i, &[a, b, c, d, e]) => (part(&[a, a, b, c]), part(&[d, e])),
        (U1ii, &[a, b, c, d, e]) => (part(&[a, b, c, c]), part(&[d, d, e])),
        (U2i, &[a, b, c, d, e]) => (part(&[a, a, b, c, d]), part(&[e, e])),
        (U2ii, &[a, b, c, d, e]) => (part(&[a, b, c, d, d]), part(&[e, e, e])),
        (U3i, &[a, b, c, d]) => (part(&[a, a, a, b, b, c, c]), part(&[d, d, d])),
        (U3ii, &[a, b, c, d]) => (part(&[a, a, b, b, c, c, c]), part(&[d, d, d, d])),
        _ => unreachable!("parameter count fixed by the case"),
    }
}

/// Reads the parameters of a skew case back off `(lambda, mu)`, if the
/// pair has the case's block pattern.
fn skew_params(case: WitnessCase, lambda: &Partition, mu: &Partition) -> Option<Vec<i64>> {
    let (l, m): (Vec<i64>, Vec<i64>) = (
        lambda.parts().iter().map(|&x| x as i64).collect(),
        mu.parts().iter().map(|&x| x as i64).collect(),
    );
    let m_at = |i: usize| m.get(i).copied().unwrap_or(0);
    let v = match case {
        T1i | T1ii if l.len() == 3 && m.len() <= 2 => vec![l[0], l[1], l[2], m_at(0), m_at(1)],
        T2i | T2ii if l.len() == 4 && m.len() == 2 => vec![l[0], l[1], l[2], l[3], m[0]],
        T3i | T3ii if l.len() == 6 && m.len() == 3 => vec![l[0], l[2], l[4], m[0]],
        U1i if l.len() == 4 && m.len() <= 2 => vec![l[0], l[2], l[3], m_at(0), m_at(1)],
        U1ii if l.len() == 4 && m.len() == 3 => vec![l[0], l[1], l[2], m[0], m[2]],
        U2i if l.len() == 5 && m.len() == 2 => vec![l[0], l[2], l[3], l[4], m[0]],
        U2ii if l.len() == 5 && m.len() == 3 => vec![l[0], l[1], l[2], l[3], m[0]],
        U3i if l.len() == 7 && m.len() == 3 => vec![l[0], l[3], l[5], m[0]],
        U3ii if l.len() == 7 && m.len() == 4 => vec![l[0], l[2], l[4], m[0]],
        _ => return None,
    };
    let (l2, m2) = skew_pair(case, &v);
    (&l2 == lambda && &m2 == mu).then_some(v)
}

fn check_case(case: WitnessCase, v: &[i64]) -> Result<()> {
    let ok = match (case, v) {
        (Q1, &[a, b, c, d]) => a > b && b > 0 && c > d && d > 0,
        (Q2, &[a, b, c, d]) => a > b && b > c && c > 0 && d > 1,
        (Q3, &[a, b, c]) => a > b + 1 && b > 1 && c > 2,
        (T1i, &[a, b, c, d, e]) => a > b && b >= c + 1 && c + 1 >= d && d >= e + 1 && e + 1 > 1,
        (T1ii, &[a, b, c, d, e]) => a > b && b >= d && d >= c + 1 && c + 1 >= e + 1 && e + 1 > 1,
        (T2i, &[a, b, c, d, e]) => a > b && b > c && c >= d + 1 && d + 1 >= e && e > 1,
        (T2ii, &[a, b, c, d, e]) => a > b && b > c && c >= e && e >= d + 1 && d + 1 > 1,
        (T3i, &[a, b, c, d]) => a - 1 > b && b > c + 1 && c + 1 >= d && d > 2,
        (T3ii, &[a, b, c, d]) => a - 1 > b && b > d && d >= c + 1 && c + 1 > 2,
        (U1i, &[a, b, c, d, e]) => a > b && b > c && c > 0 && d > e && e > 0 && a > d,
        (U1ii, &[a, b, c, d, e]) => a > b && b > c && c > 0 && d > e && e > 0 && b > d && c > e,
        (U2i, &[a, b, c, d, e]) => a > b && b > c && c > d && d > 0 && a > e + 1 && e + 1 > 2,
        (U2ii, &[a, b, c, d, e]) => a > b && b > c && c > d && d > 0 && c > e && e > 1 && d > 1,
        (U3i, &[a, b, c, d]) => a > b + 1 && b > c + 1 && c > 1 && a > d + 2 && d + 2 > 4,
        (U3ii, &[a, b, c, d]) => a > b + 1 && b > c + 1 && c > 2 && b > d + 1 && d + 1 > 3,
        _ => false,
    };
    require(case, ok, "parameters violate the case conditions")
}

fn t_nu(case: WitnessCase, v: &[i64]) -> Partition {
    match (case, v) {
        (T1i, &[a, b, c, d, e]) => part(&[a - 1, b - e, c - d + 1]),
        (T1ii, &[a, b, c, d, e]) => part(&[a - 1, b + c - d - e + 1, 0]),
        (T2i, &[a, b, c, d, e]) => part(&[a - 1, b - 1, c - e + 1, d - e + 1]),
        (T2ii, &[a, b, c, d, e]) => part(&[a - 1, b + d - e, c - e + 1, 0]),
        (T3i, &[a, b, c, d]) => part(&[a - 1, a - 2, b - 1, b - d + 1, c - d + 2, c - d + 1]),
        (T3ii, &[a, b, c, d]) => part(&[a - 1, a + c - d - 1, b + c - d, b - d + 1, 1, 0]),
        _ => unreachable!("t_nu is only called on T cases"),
    }
}

/// `s_{lambda/mu}` with a coefficient-2 term, for the T subcases. The
/// shape must be basic.
pub fn skew_witness(case: WitnessCase, params: &Params) -> Result<Witness> {
    if !matches!(case, T1i | T1ii | T2i | T2ii | T3i | T3ii) {
        return Err(Error::UnknownCase(format!("{case} is not a skew case")));
    }
    let v = params.values(case)?;
    check_case(case, &v)?;
    let (lambda, mu) = skew_pair(case, &v);
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    require(case, shape.is_basic(), "the skew shape is not basic")?;
    Ok(Witness::skew(case, lambda, mu, t_nu(case, &v)))
}

/// The two subcases of a T family, preferring (i) where both apply.
fn t_family(family: usize) -> [WitnessCase; 2] {
    [[T1i, T1ii], [T2i, T2ii], [T3i, T3ii]][family - 1]
}

/// Picks the subcase of `family` that `params` satisfy.
pub fn skew_witness_auto(family: usize, params: &Params) -> Result<Witness> {
    let [first, second] = t_family(family);
    skew_witness(first, params).or_else(|e| skew_witness(second, params).map_err(|_| e))
}

/// A T witness `rho` for the row-basic `sigma/tau`, after deleting empty
/// columns.
fn t_rho(case: WitnessCase, family: usize, sigma: &Partition, tau: &Partition) -> Result<Partition> {
    let basic = SkewShape::new(sigma.clone(), tau.clone())?.to_basic();
    let v = skew_params(t_family(family)[0], basic.outer(), basic.inner()).ok_or_else(|| Error::Precondition {
        case: case.to_string(),
        reason: format!("reduced shape {basic} is not of type T{family}"),
    })?;
    let params = Params::for_case(t_family(family)[0], &v);
    Ok(skew_witness_auto(family, &params)?.nu)
}

/// `s_{lambda/mu}` with a term of coefficient at least 2 for the U cases,
/// lifted from a T witness of a smaller shape.
pub fn lifted_witness(case: WitnessCase, params: &Params) -> Result<Witness> {
    if !matches!(case, U1i | U1ii | U2i | U2ii | U3i | U3ii) {
        return Err(Error::UnknownCase(format!("{case} is not a lifted case")));
    }
    let v = params.values(case)?;
    check_case(case, &v)?;
    let (lambda, mu) = skew_pair(case, &v);
    // empty columns are deleted first; the reduced pair stays in the case
    let basic = SkewShape::new(lambda.clone(), mu.clone())?.to_basic();
    let w = skew_params(case, basic.outer(), basic.inner())
        .ok_or_else(|| Error::Precondition { case: case.to_string(), reason: format!("basic form {basic} leaves the case") })?;
    check_case(case, &w)?;
    let nu = match (case, w.as_slice()) {
        (U1i, &[a, b, c, d, e]) if b > e => t_rho(case, 1, &part(&[a, b, c]), &part(&[d, e]))?.with_part(a as usize),
        (U1i, &[a, b, c, d, _]) => t_rho(case, 1, &part(&[a - 1, b, c]), &part(&[d - 1, b - 1]))?.with_part(a as usize - 1),
        (U1ii, &[a, b, c, d, e]) => t_rho(case, 1, &part(&[a, b, c]), &part(&[d, e]))?.with_part((c - d) as usize),
        (U2i, &[a, b, c, d, e]) if b > e => t_rho(case, 2, &part(&[a, b, c, d]), &part(&[e, e]))?.with_part(a as usize),
        (U2i, &[a, b, c, d, _]) => {
            t_rho(case, 2, &part(&[a - 1, b, c, d]), &part(&[b - 1, b - 1]))?.with_part(a as usize - 1)
        }
        (U2ii, &[a, b, c, d, e]) => t_rho(case, 2, &part(&[a, b, c, d]), &part(&[e, e]))?.with_part((d - e) as usize),
        (U3i, &[a, b, c, d]) if b > d => {
            t_rho(case, 3, &part(&[a, a, b, b, c, c]), &part(&[d, d, d]))?.with_part(a as usize)
        }
        (U3i, &[a, b, c, _]) => {
            let sigma = part(&[a - 1, a - 1, b, b, c, c]);
            t_rho(case, 3, &sigma, &part(&[b - 1, b - 1, b - 1]))?.with_part(a as usize - 1)
        }
        (U3ii, &[a, b, c, d]) => {
            t_rho(case, 3, &part(&[a, a, b, b, c, c]), &part(&[d, d, d]))?.with_part((c - d) as usize)
        }
        _ => unreachable!("parameter count fixed by the case"),
    };
    Ok(Witness::skew(case, lambda, mu, nu))
}

/// Dispatches on a label: `Q1`..`Q3`, `T1`..`T3` (subcase chosen
/// automatically), `T1i`..`T3ii`, `U1i`..`U3ii`.
pub fn witness(label: &str, params: &Params) -> Result<Witness> {
    let normalized = normalize_label(label);
    if let Some(family) = ["T1", "T2", "T3"].iter().position(|&t| t == normalized) {
        return skew_witness_auto(family + 1, params);
    }
    let case: WitnessCase = label.parse()?;
    match case {
        Q1 | Q2 | Q3 => product_witness(case, params),
        T1i | T1ii | T2i | T2ii | T3i | T3ii => skew_witness(case, params),
        _ => lifted_witness(case, params),
    }
}

/// True when the parameters satisfy the case conditions and, for the T
/// cases, give a basic shape.
pub fn applies(case: WitnessCase, values: &[i64]) -> bool {
    if values.len() != case.params().len() || check_case(case, values).is_err() {
        return false;
    }
    match case {
        T1i | T1ii | T2i | T2ii | T3i | T3ii => {
            let (lambda, mu) = skew_pair(case, values);
            SkewShape::new(lambda, mu).is_ok_and(|s| s.is_basic())
        }
        _ => true,
    }
}

/// The witness for `case` and positional `values`.
pub fn build(case: WitnessCase, values: &[i64]) -> Result<Witness> {
    let params = Params::for_case(case, values);
    match case {
        Q1 | Q2 | Q3 => product_witness(case, &params),
        T1i | T1ii | T2i | T2ii | T3i | T3ii => skew_witness(case, &params),
        _ => lifted_witness(case, &params),
    }
}

/// Every parameter tuple with entries in `1..=max` to which the case
/// applies, with the outcome of building its witness.
pub fn witness_grid(case: WitnessCase, max: i64) -> Vec<(Vec<i64>, Result<Witness>)> {
    let k = case.params().len();
    let mut out = Vec::new();
    let mut v = vec![1i64; k];
    loop {
        if applies(case, &v) {
            out.push((v.clone(), build(case, &v)));
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < max {
                v[i] += 1;
                break;
            }
            v[i] = 1;
        }
    }
}
