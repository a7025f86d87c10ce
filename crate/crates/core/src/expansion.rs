//! Schur expansions of products `s_mu s_nu` and skew functions `s_{lambda/mu}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hive::{lr_coefficient_hive_n, support_holds};
use crate::partition::{partitions_bounded, Partition};
use crate::skew::SkewShape;
use crate::tableau::{lr_contents, lr_tableau_count};

/// Which coefficient engine to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Hive,
    Tableau,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Hive => "hive",
            Method::Tableau => "tableau",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "hive" => Ok(Method::Hive),
            "tableau" => Ok(Method::Tableau),
            _ => Err(Error::BadToken { token: s.into(), reason: "expected hive or tableau".into() }),
        }
    }
}

/// A finite Schur expansion with positive integer coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Expansion {
    terms: BTreeMap<Partition, u64>,
}

impl Expansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single term `s_p`.
    pub fn schur(p: Partition) -> Self {
        Expansion { terms: BTreeMap::from([(p, 1)]) }
    }

    /// Adds `coeff * s_p`.
    pub fn add_term(&mut self, p: Partition, coeff: u64) {
        if coeff > 0 {
            *self.terms.entry(p).or_default() += coeff;
        }
    }

    pub fn coefficient(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in decreasing lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// The expansion of the product of the two symmetric functions.
    pub fn multiply(&self, other: &Expansion, method: Method) -> Expansion {
        let mut out = Expansion::new();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                for (p, c) in product_expansion(a, b, method).terms() {
                    out.add_term(p.clone(), ca * cb * c);
                }
            }
        }
        out
    }

    /// Applies `p -> p'` to every term.
    pub fn conjugate(&self) -> Expansion {
        Expansion { terms: self.terms.iter().map(|(p, &c)| (p.conjugate(), c)).collect() }
    }
}

impl fmt::Display for Expansion {
    /// `s(3) + 2 s(2,1) + s(1,1,1)`; the empty expansion prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c > 1 {
                write!(f, "{c} ")?;
            }
            write!(f, "s({p})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expansion[{self}]")
    }
}

pub fn max_multiplicity(e: &Expansion) -> u64 {
    e.max_multiplicity()
}

/// `c^lambda_{mu nu}` on the product side, with side `l(mu) + l(nu)`.
fn product_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition, method: Method) -> u64 {
    match method {
        Method::Hive => lr_coefficient_hive_n(lambda, mu, nu, (mu.len() + nu.len()).max(1)),
        Method::Tableau => lr_tableau_count(lambda, mu, nu),
    }
}

/// Candidate `lambda` for `s_mu s_nu`, in decreasing lexicographic order.
pub fn product_candidates(mu: &Partition, nu: &Partition) -> Vec<Partition> {
    let w = mu.weight() + nu.weight();
    let (lo, hi) = (mu.len().max(nu.len()), mu.len() + nu.len());
    partitions_bounded(w, hi, mu.first() + nu.first())
        .into_iter()
        .filter(|l| l.len() >= lo && l.contains(mu) && l.contains(nu))
        .collect()
}

/// `s_mu s_nu = sum c^lambda_{mu nu} s_lambda`.
pub fn product_expansion(mu: &Partition, nu: &Partition, method: Method) -> Expansion {
    let mut e = Expansion::new();
    for lambda in product_candidates(mu, nu) {
        let c = product_coefficient(&lambda, mu, nu, method);
        e.add_term(lambda, c);
    }
    e
}

/// Candidate `nu` for `s_{lambda/mu}`, in decreasing lexicographic order.
pub fn skew_candidates(s: &SkewShape) -> Vec<Partition> {
    let lambda = s.outer();
    partitions_bounded(s.size(), lambda.len(), lambda.first())
        .into_iter()
        .filter(|nu| lambda.contains(nu))
        .collect()
}

/// `s_{lambda/mu} = sum c^lambda_{mu nu} s_nu`.
pub fn skew_expansion(s: &SkewShape, method: Method) -> Expansion {
    let (lambda, mu) = (s.outer(), s.inner());
    let mut e = Expansion::new();
    match method {
        Method::Hive => {
            let n = lambda.len().max(1);
            for nu in skew_candidates(s) {
                if support_holds(lambda, mu, &nu) {
                    let c = lr_coefficient_hive_n(lambda, mu, &nu, n);
                    e.add_term(nu, c);
                }
            }
        }
        Method::Tableau => {
            for (nu, c) in lr_contents(s) {
                e.add_term(nu, c);
            }
        }
    }
    e
}

/// `<s_{lambda/mu}, s_nu> = <s_lambda, s_mu s_nu>`, read off the two
/// expansions.
pub fn duality_check(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    let (skew, product) = duality_sides(lambda, mu, nu);
    skew == product
}

/// The coefficient of `s_nu` in `s_{lambda/mu}` and of `s_lambda` in
/// `s_mu s_nu`.
pub fn duality_sides(lambda: &Partition, mu: &Partition, nu: &Partition) -> (u64, u64) {
    let skew = match SkewShape::new(lambda.clone(), mu.clone()) {
        Ok(s) => skew_expansion(&s, Method::Hive).coefficient(nu),
        Err(_) => 0,
    };
    let product = product_expansion(mu, nu, Method::Hive).coefficient(lambda);
    (skew, product)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub partition: Partition,
    pub coeff: u64,
}

/// What was expanded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Query {
    Product { mu: Partition, nu: Partition },
    Skew { outer: Partition, inner: Partition },
}

/// Serializable summary of an expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionReport {
    pub query: Query,
    pub method: Method,
    pub terms: Vec<Term>,
    pub max_multiplicity: u64,
}

impl ExpansionReport {
    pub fn new(query: Query, method: Method, e: &Expansion) -> Self {
        ExpansionReport {
            query,
            method,
            terms: e.terms().map(|(p, c)| Term { partition: p.clone(), coeff: c }).collect(),
            max_multiplicity: e.max_multiplicity(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_in_box;
    use crate::skew::skew_shapes_in_box;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn s(text: &str) -> SkewShape {
        text.parse().unwrap()
    }

    fn expansion(terms: &[(&str, u64)]) -> Expansion {
        let mut e = Expansion::new();
        for &(t, c) in terms {
            e.add_term(p(t), c);
        }
        e
    }

    const PRODUCT_21_21: &[(&str, u64)] =
        &[("4,2", 1), ("4,1,1", 1), ("3,3", 1), ("3,2,1", 2), ("3,1,1,1", 1), ("2,2,2", 1), ("2,2,1,1", 1)];

    #[test]
    fn product_examples() {
        for m in [Method::Hive, Method::Tableau] {
            assert_eq!(product_expansion(&p("1"), &p("1"), m), expansion(&[("2", 1), ("1,1", 1)]));
            let e = product_expansion(&p("2,1"), &p("2,1"), m);
            assert_eq!(e.coefficient(&p("3,2,1")), 2);
            assert_eq!(e, expansion(PRODUCT_21_21));
            assert_eq!(product_expansion(&p("0"), &p("0"), m), Expansion::schur(p("0")));
        }
    }

    #[test]
    fn product_against_tableau_count_over_all_partitions() {
        // every lambda of the right weight, not just the candidates
        for (mu, nu) in [("2,1", "2,1"), ("3,1", "2"), ("2,2", "1,1"), ("1", "3,2,1")] {
            let (mu, nu) = (p(mu), p(nu));
            let e = product_expansion(&mu, &nu, Method::Hive);
            for lambda in crate::partition::partitions_of(mu.weight() + nu.weight()) {
                assert_eq!(e.coefficient(&lambda), lr_tableau_count(&lambda, &mu, &nu));
            }
        }
    }

    #[test]
    fn skew_examples() {
        for m in [Method::Hive, Method::Tableau] {
            let e = skew_expansion(&s("3,2,1/2,1"), m);
            assert_eq!(e, expansion(&[("3", 1), ("2,1", 2), ("1,1,1", 1)]));
            assert_eq!(e.max_multiplicity(), 2);
            assert_eq!(skew_expansion(&s("4,3,2,1/2,2"), m), expansion(PRODUCT_21_21));
            for mu in partitions_in_box(3, 2) {
                let boxed = SkewShape::new(Partition::rectangle(3, 2), mu.clone()).unwrap();
                assert_eq!(skew_expansion(&boxed, m), Expansion::schur(mu.complement(3, 2).unwrap()));
            }
        }
    }

    #[test]
    fn max_multiplicity_examples() {
        assert_eq!(max_multiplicity(&product_expansion(&p("1"), &p("1"), Method::Hive)), 1);
        assert_eq!(max_multiplicity(&Expansion::new()), 0);
        let big = skew_expansion(&s("6^2,4^2,2^2/3^3"), Method::Hive);
        assert_eq!(big.max_multiplicity(), 2);
        assert_eq!(big.len(), 31);
        let twos: Vec<_> = big.terms().filter(|t| t.1 == 2).map(|t| t.0.clone()).collect();
        assert_eq!(twos, vec![p("5,4,3,2,1")]);
    }

    #[test]
    fn duality_examples() {
        assert_eq!(duality_sides(&p("3,2,1"), &p("2,1"), &p("2,1")), (2, 2));
        assert_eq!(duality_sides(&p("3,2"), &p("2"), &p("2")), (0, 0));
        assert_eq!(duality_sides(&p("4,3,2,1"), &p("2,2"), &p("2,2,1,1")), (1, 1));
        assert!(duality_check(&p("4,3,2,1"), &p("2,2"), &p("2,2,1,1")));
    }

    #[test]
    fn display() {
        assert_eq!(skew_expansion(&s("3,2,1/2,1"), Method::Hive).to_string(), "s(3) + 2 s(2,1) + s(1,1,1)");
        assert_eq!(Expansion::new().to_string(), "0");
        assert_eq!("tableau".parse::<Method>().unwrap(), Method::Tableau);
        assert!("both".parse::<Method>().is_err());
    }

    #[test]
    fn engines_agree_on_products() {
        for w in 0..=9 {
            for k in 0..=w {
                for mu in crate::partition::partitions_of(k) {
                    for nu in crate::partition::partitions_of(w - k) {
                        let e = product_expansion(&mu, &nu, Method::Hive);
                        assert_eq!(e, product_expansion(&mu, &nu, Method::Tableau), "{mu} {nu}");
                        for (lambda, c) in e.terms() {
                            assert!(c >= 1);
                            assert!(support_holds(lambda, &mu, &nu));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn engines_agree_on_skews() {
        for w in 0..=9 {
            for lambda in crate::partition::partitions_of(w) {
                for k in 0..=w {
                    for mu in crate::partition::partitions_of(k).into_iter().filter(|m| lambda.contains(m)) {
                        let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
                        let e = skew_expansion(&shape, Method::Hive);
                        assert_eq!(e, skew_expansion(&shape, Method::Tableau), "{shape}");
                        for (nu, _) in e.terms() {
                            assert!(support_holds(&lambda, &mu, nu));
                            assert_eq!(nu.weight(), shape.size());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn products_commute_and_conjugate() {
        for w in 0..=8 {
            for k in 0..=w {
                for mu in crate::partition::partitions_of(k) {
                    for nu in crate::partition::partitions_of(w - k) {
                        let e = product_expansion(&mu, &nu, Method::Hive);
                        assert_eq!(e, product_expansion(&nu, &mu, Method::Hive));
                        let conj = product_expansion(&mu.conjugate(), &nu.conjugate(), Method::Hive);
                        assert_eq!(e.conjugate(), conj);
                    }
                }
            }
        }
    }

    #[test]
    fn skew_identities_in_4x4() {
        for shape in skew_shapes_in_box(4, 4) {
            let e = skew_expansion(&shape, Method::Hive);
            assert_eq!(e, skew_expansion(&shape.rotate_pi(), Method::Hive), "{shape}");
            let basic = shape.to_basic();
            assert_eq!(e, skew_expansion(&basic, Method::Hive), "{shape}");
            let comps = basic.components().unwrap();
            if comps.len() >= 2 {
                let product = comps
                    .iter()
                    .map(|c| skew_expansion(c, Method::Tableau))
                    .reduce(|a, b| a.multiply(&b, Method::Tableau))
                    .unwrap();
                assert_eq!(e, product, "{shape}");
            }
        }
    }

    #[test]
    fn join_multiplies() {
        let shapes: Vec<SkewShape> = (1..=3).flat_map(crate::skew::basic_shapes_with_cells).collect();
        for a in &shapes {
            for b in &shapes {
                let joined = skew_expansion(&a.join(b), Method::Tableau);
                let product = skew_expansion(a, Method::Tableau).multiply(&skew_expansion(b, Method::Tableau), Method::Hive);
                assert_eq!(joined, product, "{a} {b}");
            }
        }
    }
}
