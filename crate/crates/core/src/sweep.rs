//! Differential sweeps: structural verdicts against enumerated expansions.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{gty_mf, stembridge_mf, MfCase};
use crate::error::Error;
use crate::expansion::{product_expansion, skew_expansion, Method, Query};
use crate::partition::partitions_in_box;
use crate::skew::{skew_shapes_in_box, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Products,
    Skews,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "products" => Ok(Family::Products),
            "skews" => Ok(Family::Skews),
            _ => Err(Error::BadToken { token: s.into(), reason: "expected products or skews".into() }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Products => "products",
            Family::Skews => "skews",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub query: Query,
    pub classifier_mf: bool,
    pub cases: Vec<MfCase>,
    pub max_multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub method: Method,
    pub sample: Option<usize>,
    pub seed: u64,
    pub checked: usize,
    pub agree: usize,
    pub disagree: usize,
    pub disagreements: Vec<Disagreement>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.disagree == 0
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}x{} box ({})", self.family, self.m, self.n, self.method)?;
        if let Some(k) = self.sample {
            write!(f, ", sample {k} seed {}", self.seed)?;
        }
        writeln!(f)?;
        writeln!(f, "checked {}: agree {}, disagree {}", self.checked, self.agree, self.disagree)?;
        for d in &self.disagreements {
            let q = match &d.query {
                Query::Product { mu, nu } => format!("s({mu}) s({nu})"),
                Query::Skew { outer, inner } => format!("s({outer}/{inner})"),
            };
            writeln!(f, "  {q}: classifier says mf={}, max multiplicity {}", d.classifier_mf, d.max_multiplicity)?;
        }
        Ok(())
    }
}

/// The queries a sweep covers: pairs of nonzero partitions in the box, or
/// basic skew shapes with nonzero outer partition in the box.
pub fn sweep_queries(family: Family, m: usize, n: usize) -> Vec<Query> {
    match family {
        Family::Products => {
            let parts: Vec<_> = partitions_in_box(m, n).into_iter().filter(|p| !p.is_empty()).collect();
            parts
                .iter()
                .flat_map(|mu| parts.iter().map(move |nu| Query::Product { mu: mu.clone(), nu: nu.clone() }))
                .collect()
        }
        Family::Skews => skew_shapes_in_box(m, n)
            .into_iter()
            .filter(|s| s.is_basic() && !s.is_empty())
            .map(|s| Query::Skew { outer: s.outer().clone(), inner: s.inner().clone() })
            .collect(),
    }
}

/// Classifier verdict and enumerated maximum multiplicity for one query.
pub fn check_query(query: &Query, method: Method) -> (bool, Vec<MfCase>, u64) {
    match query {
        Query::Product { mu, nu } => {
            let v = stembridge_mf(mu, nu);
            (v.multiplicity_free, v.cases, product_expansion(mu, nu, method).max_multiplicity())
        }
        Query::Skew { outer, inner } => {
            let shape = SkewShape::new(outer.clone(), inner.clone()).expect("sweep shapes are valid");
            let v = gty_mf(&shape).expect("sweep shapes are basic");
            (v.multiplicity_free, v.cases, skew_expansion(&shape, method).max_multiplicity())
        }
    }
}

/// Runs the sweep over the whole box, or over `sample` queries drawn with
/// `seed`.
pub fn verify_sweep(family: Family, m: usize, n: usize, sample: Option<usize>, seed: u64, method: Method) -> SweepReport {
    let mut queries = sweep_queries(family, m, n);
    if let Some(k) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        queries = queries.choose_multiple(&mut rng, k).cloned().collect();
    }
    let mut report = SweepReport {
        family,
        m,
        n,
        method,
        sample,
        seed,
        checked: 0,
        agree: 0,
        disagree: 0,
        disagreements: Vec::new(),
    };
    for query in queries {
        let (mf, cases, max) = check_query(&query, method);
        report.checked += 1;
        if mf == (max <= 1) {
            report.agree += 1;
        } else {
            report.disagree += 1;
            report.disagreements.push(Disagreement { query, classifier_mf: mf, cases, max_multiplicity: max });
        }
    }
    report
}
