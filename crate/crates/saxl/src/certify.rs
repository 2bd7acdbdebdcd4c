//! Positivity certificates and verification sweeps.
//!
//! A certificate is a replayable evidence tree for κ(ϱ(n), ϱ(n), ν) > 0:
//! constructive nodes carry a filling, a hypergraph and a nonzero exact
//! scalar; transposition nodes reduce the dominated case to the dominating
//! one; semigroup nodes combine certified triples partwise; oracle leaves pin
//! small known coefficients. [`verify`] recomputes everything and
//! cross-checks the root against the character oracle.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contraction::{staircase_contraction_value, ExactScalar};
use crate::hypergraph::{staircase_hypergraph_with_filling, TriangularGrid, YoungHypergraph};
use crate::oracle::{CharacterCache, DEFAULT_ORACLE_CAP};
use crate::partition::{enumerate_partitions, Partition};
use crate::tableaux::{gale_ryser_filling, Filling};
use crate::{Error, Result};

/// Largest n for which the sweeps replay constructive certificates.
pub const CONSTRUCTIVE_SWEEP_CAP: u32 = 5;

/// Largest n the sweeps accept at all; above [`CONSTRUCTIVE_SWEEP_CAP`] they
/// fall back to oracle-only positivity checks.
pub const ORACLE_SWEEP_CAP: u32 = 6;

pub type Triple = (Partition, Partition, Partition);

fn staircase_boxes(n: u32) -> u64 {
    u64::from(n) * u64::from(n + 1) / 2
}

/// Tree-shaped positivity evidence. See the module docs for the node kinds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawNode", into = "RawNode")]
pub enum Certificate {
    Constructive {
        n: u32,
        nu: Partition,
        filling: Filling,
        hypergraph: YoungHypergraph,
        scalar: ExactScalar,
    },
    Transposed {
        inner: Box<Certificate>,
    },
    Semigroup {
        left: Box<Certificate>,
        right: Box<Certificate>,
        sum_triple: Triple,
    },
    OracleLeaf {
        triple: Triple,
        value: ExactScalar,
    },
}

impl Certificate {
    /// The triple whose Kronecker coefficient this node claims positive.
    pub fn triple(&self) -> Triple {
        match self {
            Certificate::Constructive { n, nu, .. } => {
                let rho = Partition::staircase(*n);
                (rho.clone(), rho, nu.clone())
            }
            Certificate::Transposed { inner } => {
                let (lambda, mu, nu) = inner.triple();
                (lambda, mu.transpose(), nu.transpose())
            }
            Certificate::Semigroup { sum_triple, .. } => sum_triple.clone(),
            Certificate::OracleLeaf { triple, .. } => triple.clone(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Certificate::Constructive { .. } => "constructive",
            Certificate::Transposed { .. } => "transposed",
            Certificate::Semigroup { .. } => "semigroup",
            Certificate::OracleLeaf { .. } => "oracle",
        }
    }

    pub fn is_semigroup(&self) -> bool {
        matches!(self, Certificate::Semigroup { .. })
    }

    /// The exact scalar of a constructive root, when there is one.
    pub fn scalar(&self) -> Option<&ExactScalar> {
        match self {
            Certificate::Constructive { scalar, .. } => Some(scalar),
            Certificate::Transposed { inner } => inner.scalar(),
            _ => None,
        }
    }
}

/// Certifies κ(ϱ(n), ϱ(n), ν) > 0 for ν comparable to the staircase: the
/// dominating case runs the constructive pipeline, the dominated case wraps
/// the certificate for νᵀ in a transposition node. When ν equals the
/// staircase the constructive path wins.
pub fn certify_comparable(n: u32, nu: &Partition) -> Result<Certificate> {
    let rho = Partition::staircase(n);
    if nu.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: rho.size(),
        });
    }
    if nu.dominates(&rho)? {
        constructive(n, nu)
    } else if rho.dominates(nu)? {
        let inner = constructive(n, &nu.transpose())?;
        Ok(Certificate::Transposed {
            inner: Box::new(inner),
        })
    } else {
        Err(Error::NotComparable {
            nu: nu.to_string(),
            staircase: rho.to_string(),
        })
    }
}

fn constructive(n: u32, nu: &Partition) -> Result<Certificate> {
    let rho = Partition::staircase(n);
    let filling = gale_ryser_filling(nu, &rho)?.ok_or_else(|| Error::NotDominating {
        nu: nu.to_string(),
        staircase: rho.to_string(),
    })?;
    let hypergraph = staircase_hypergraph_with_filling(n, &filling)?;
    let scalar = staircase_contraction_value(n, &hypergraph)?;
    Ok(Certificate::Constructive {
        n,
        nu: nu.clone(),
        filling,
        hypergraph,
        scalar,
    })
}

/// Certifies κ(ϱ(n), ϱ(n), ν) > 0 for a hook ν by induction: hooks with at
/// most n columns are comparable and delegate to [`certify_comparable`];
/// wider hooks strip n boxes from the first row, certify the remainder at
/// n−1, and recombine through the semigroup property with the known
/// coefficient κ(n×1, n×1, 1×n) = 1.
pub fn certify_hook(n: u32, nu: &Partition) -> Result<Certificate> {
    let rho = Partition::staircase(n);
    if nu.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: rho.size(),
        });
    }
    let Some((row_len, col_len)) = nu.as_hook() else {
        return Err(Error::NotAHook(nu.to_string()));
    };
    if row_len <= n {
        return certify_comparable(n, nu);
    }
    let shorter = Partition::new(
        std::iter::once(row_len - n)
            .chain(std::iter::repeat_n(1, col_len as usize))
            .collect::<Vec<u32>>(),
    )?;
    let left = certify_hook(n - 1, &shorter)?;
    let column = Partition::column(n);
    let row = Partition::row(n);
    let right = Certificate::OracleLeaf {
        triple: (column.clone(), column, row),
        value: BigInt::one(),
    };
    let (ll, lm, ln) = left.triple();
    let (rl, rm, rn) = right.triple();
    let sum_triple = (ll.add(&rl), lm.add(&rm), ln.add(&rn));
    Ok(Certificate::Semigroup {
        left: Box::new(left),
        right: Box::new(right),
        sum_triple,
    })
}

/// Outcome of replaying a certificate; empty failure list means verified.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub failures: Vec<String>,
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Recomputes every node of the certificate: fillings and hypergraphs are
/// revalidated, scalars re-evaluated, semigroup arithmetic rechecked, oracle
/// leaves recomputed, and the root triple confirmed positive by the oracle
/// whenever its box count is within `oracle_cap`.
pub fn verify(cert: &Certificate, oracle: &CharacterCache, oracle_cap: u64) -> Verification {
    let mut failures = Vec::new();
    verify_node(cert, "root", oracle, oracle_cap, &mut failures);

    let (lambda, mu, nu) = cert.triple();
    if lambda.size() == mu.size() && lambda.size() == nu.size() && lambda.size() <= oracle_cap {
        match oracle.kronecker_with_cap(&lambda, &mu, &nu, oracle_cap) {
            Ok(value) if value.is_positive() => {}
            Ok(value) => failures.push(format!(
                "root: oracle reports multiplicity {value} for ({lambda}|{mu}|{nu})"
            )),
            Err(err) => failures.push(format!("root: oracle failed: {err}")),
        }
    }
    Verification { failures }
}

fn verify_node(
    cert: &Certificate,
    path: &str,
    oracle: &CharacterCache,
    oracle_cap: u64,
    failures: &mut Vec<String>,
) {
    match cert {
        Certificate::Constructive {
            n,
            nu,
            filling,
            hypergraph,
            scalar,
        } => {
            let rho = Partition::staircase(*n);
            if nu.size() != staircase_boxes(*n) {
                failures.push(format!(
                    "{path}: {nu} does not have {} boxes",
                    staircase_boxes(*n)
                ));
                return;
            }
            match nu.dominates(&rho) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("{path}: {nu} does not dominate {rho}")),
                Err(err) => failures.push(format!("{path}: {err}")),
            }
            if filling.shape() != nu {
                failures.push(format!("{path}: filling shape is not {nu}"));
            }
            if !filling.is_semistandard() {
                failures.push(format!("{path}: filling is not semistandard"));
            }
            if !filling.has_content(&rho) {
                failures.push(format!("{path}: filling content is not {rho}"));
            }
            if let Err(reason) = hypergraph.check() {
                failures.push(format!("{path}: hypergraph invalid: {reason}"));
                return;
            }
            let expected_type = [rho.clone(), rho.clone(), nu.clone()];
            if hypergraph.type_triple() != &expected_type {
                failures.push(format!("{path}: hypergraph type is not ({rho}|{rho}|{nu})"));
                return;
            }
            let grid = TriangularGrid::new(*n);
            for edge in hypergraph.layer(2) {
                let mut levels: Vec<u32> = edge.iter().map(|&id| grid.level_of(id)).collect();
                levels.sort_unstable();
                let distinct = levels.windows(2).all(|w| w[0] < w[1]);
                if !distinct {
                    failures.push(format!("{path}: third-layer edge {edge:?} repeats a level"));
                }
            }
            match staircase_contraction_value(*n, hypergraph) {
                Ok(recomputed) if &recomputed == scalar => {}
                Ok(recomputed) => failures.push(format!(
                    "{path}: stored scalar {scalar} but replay gives {recomputed}"
                )),
                Err(err) => failures.push(format!("{path}: replay failed: {err}")),
            }
            if scalar.is_zero() {
                failures.push(format!("{path}: scalar is zero"));
            }
        }
        Certificate::Transposed { inner } => {
            verify_node(
                inner,
                &format!("{path}.inner"),
                oracle,
                oracle_cap,
                failures,
            );
        }
        Certificate::Semigroup {
            left,
            right,
            sum_triple,
        } => {
            verify_node(left, &format!("{path}.left"), oracle, oracle_cap, failures);
            verify_node(
                right,
                &format!("{path}.right"),
                oracle,
                oracle_cap,
                failures,
            );
            let (ll, lm, ln) = left.triple();
            let (rl, rm, rn) = right.triple();
            let expected = (ll.add(&rl), lm.add(&rm), ln.add(&rn));
            if &expected != sum_triple {
                failures.push(format!(
                    "{path}: sum triple ({}|{}|{}) does not match the children's sums ({}|{}|{})",
                    sum_triple.0, sum_triple.1, sum_triple.2, expected.0, expected.1, expected.2
                ));
            }
        }
        Certificate::OracleLeaf { triple, value } => {
            if !value.is_positive() {
                failures.push(format!("{path}: leaf value {value} is not positive"));
            }
            let (lambda, mu, nu) = triple;
            if lambda.size() != mu.size() || lambda.size() != nu.size() {
                failures.push(format!("{path}: leaf triple sizes differ"));
                return;
            }
            if lambda.size() <= oracle_cap {
                match oracle.kronecker_with_cap(lambda, mu, nu, oracle_cap) {
                    Ok(recomputed) if &recomputed == value => {}
                    Ok(recomputed) => failures.push(format!(
                        "{path}: leaf claims {value} but the oracle gives {recomputed}"
                    )),
                    Err(err) => failures.push(format!("{path}: oracle failed: {err}")),
                }
            }
        }
    }
}

/// Machine-readable sweep outcome. `timings` carries per-partition wall times
/// for diagnostics and stays out of the serialized form so reports are
/// byte-reproducible.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n: u32,
    pub total: u64,
    pub comparable: u64,
    pub certified: u64,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub timings: Vec<(String, u128)>,
}

/// Enumerates all partitions of n(n+1)/2, certifies every one comparable to
/// the staircase, replays each certificate, and cross-checks the oracle. For
/// n above [`CONSTRUCTIVE_SWEEP_CAP`] only the oracle positivity is checked.
pub fn verify_theorem_all(n: u32, oracle: &CharacterCache) -> Result<SweepReport> {
    if n == 0 || n > ORACLE_SWEEP_CAP {
        return Err(Error::CapExceeded {
            what: "theorem sweep staircase index",
            value: u64::from(n),
            cap: u64::from(ORACLE_SWEEP_CAP),
        });
    }
    let rho = Partition::staircase(n);
    let all = enumerate_partitions(rho.size())?;
    let total = all.len() as u64;
    let comparable: Vec<Partition> = all
        .into_iter()
        .filter(|nu| nu.comparable(&rho).unwrap_or(false))
        .collect();
    let constructive_mode = n <= CONSTRUCTIVE_SWEEP_CAP;

    let mut outcomes: Vec<(String, u128, Vec<String>)> = comparable
        .par_iter()
        .map(|nu| {
            let started = Instant::now();
            let mut failures = Vec::new();
            if constructive_mode {
                match certify_comparable(n, nu) {
                    Ok(cert) => {
                        let verdict = verify(&cert, oracle, DEFAULT_ORACLE_CAP);
                        for failure in verdict.failures {
                            failures.push(format!("{nu}: {failure}"));
                        }
                        match cert.scalar() {
                            Some(scalar) if !scalar.is_zero() => {}
                            _ => failures.push(format!("{nu}: certificate scalar is zero")),
                        }
                    }
                    Err(err) => failures.push(format!("{nu}: certification failed: {err}")),
                }
            } else {
                match oracle.kronecker(&rho, &rho, nu) {
                    Ok(value) if value.is_positive() => {}
                    Ok(value) => failures.push(format!("{nu}: oracle multiplicity {value}")),
                    Err(err) => failures.push(format!("{nu}: oracle failed: {err}")),
                }
            }
            (nu.to_string(), started.elapsed().as_micros(), failures)
        })
        .collect();
    outcomes.sort_by(|a, b| a.0.cmp(&b.0));

    let mut report = SweepReport {
        n,
        total,
        comparable: comparable.len() as u64,
        certified: 0,
        failures: Vec::new(),
        timings: Vec::new(),
    };
    for (nu, elapsed, failures) in outcomes {
        if failures.is_empty() {
            report.certified += 1;
        }
        report.failures.extend(failures);
        report.timings.push((nu, elapsed));
    }
    Ok(report)
}

/// All hooks with `d` boxes: (d), (d−1, 1), …, (1, 1, …, 1). There are
/// exactly d of them.
pub fn hook_partitions(d: u64) -> Vec<Partition> {
    (1..=d as u32)
        .rev()
        .map(|row| {
            Partition::new(
                std::iter::once(row)
                    .chain(std::iter::repeat_n(1, (d as u32 - row) as usize))
                    .collect::<Vec<u32>>(),
            )
            .expect("hooks are partitions")
        })
        .collect()
}

/// Certifies every hook of n(n+1)/2 boxes through [`certify_hook`], replays
/// the chain, cross-checks the oracle, and checks that exactly the hooks
/// wider than n columns produce semigroup-rooted certificates.
pub fn verify_hooks_all(n: u32, oracle: &CharacterCache) -> Result<SweepReport> {
    if n == 0 || n > ORACLE_SWEEP_CAP {
        return Err(Error::CapExceeded {
            what: "hook sweep staircase index",
            value: u64::from(n),
            cap: u64::from(ORACLE_SWEEP_CAP),
        });
    }
    let d = staircase_boxes(n);
    let hooks = hook_partitions(d);
    let comparable = hooks.iter().filter(|nu| nu.part(0) <= n).count() as u64;

    let mut outcomes: Vec<(String, u128, Vec<String>)> = hooks
        .par_iter()
        .map(|nu| {
            let started = Instant::now();
            let mut failures = Vec::new();
            match certify_hook(n, nu) {
                Ok(cert) => {
                    let expect_semigroup = nu.part(0) > n;
                    if cert.is_semigroup() != expect_semigroup {
                        failures.push(format!(
                            "{nu}: expected {} root, found {}",
                            if expect_semigroup {
                                "semigroup"
                            } else {
                                "comparable"
                            },
                            cert.kind_name()
                        ));
                    }
                    let verdict = verify(&cert, oracle, DEFAULT_ORACLE_CAP);
                    for failure in verdict.failures {
                        failures.push(format!("{nu}: {failure}"));
                    }
                }
                Err(err) => failures.push(format!("{nu}: certification failed: {err}")),
            }
            (nu.to_string(), started.elapsed().as_micros(), failures)
        })
        .collect();
    outcomes.sort_by(|a, b| a.0.cmp(&b.0));

    let mut report = SweepReport {
        n,
        total: hooks.len() as u64,
        comparable,
        certified: 0,
        failures: Vec::new(),
        timings: Vec::new(),
    };
    for (nu, elapsed, failures) in outcomes {
        if failures.is_empty() {
            report.certified += 1;
        }
        report.failures.extend(failures);
        report.timings.push((nu, elapsed));
    }
    Ok(report)
}

/// Versioned JSON wrapper around one certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema: u32,
    pub certificate: Certificate,
}

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

impl CertificateDocument {
    pub fn new(certificate: Certificate) -> Self {
        Self {
            schema: CERTIFICATE_SCHEMA_VERSION,
            certificate,
        }
    }
}

/// Flat serialization mirror: node kind tag, the claimed triple, the node's
/// own payload, and a children array for composite nodes.
#[derive(Clone, Serialize, Deserialize)]
struct RawNode {
    kind: String,
    triple: [Partition; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    filling: Option<Filling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypergraph: Option<YoungHypergraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scalar: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    children: Option<Vec<RawNode>>,
}

impl From<Certificate> for RawNode {
    fn from(cert: Certificate) -> Self {
        let (lambda, mu, nu_triple) = cert.triple();
        let triple = [lambda, mu, nu_triple];
        let kind = cert.kind_name().to_string();
        match cert {
            Certificate::Constructive {
                n,
                nu,
                filling,
                hypergraph,
                scalar,
            } => RawNode {
                kind,
                triple,
                n: Some(n),
                nu: Some(nu),
                filling: Some(filling),
                hypergraph: Some(hypergraph),
                scalar: Some(scalar.to_string()),
                value: None,
                children: None,
            },
            Certificate::Transposed { inner } => RawNode {
                kind,
                triple,
                n: None,
                nu: None,
                filling: None,
                hypergraph: None,
                scalar: None,
                value: None,
                children: Some(vec![RawNode::from(*inner)]),
            },
            Certificate::Semigroup { left, right, .. } => RawNode {
                kind,
                triple,
                n: None,
                nu: None,
                filling: None,
                hypergraph: None,
                scalar: None,
                value: None,
                children: Some(vec![RawNode::from(*left), RawNode::from(*right)]),
            },
            Certificate::OracleLeaf { value, .. } => RawNode {
                kind,
                triple,
                n: None,
                nu: None,
                filling: None,
                hypergraph: None,
                scalar: None,
                value: Some(value.to_string()),
                children: None,
            },
        }
    }
}

fn parse_scalar(text: &str) -> std::result::Result<ExactScalar, String> {
    text.parse::<BigInt>()
        .map_err(|_| format!("not a decimal integer: {text:?}"))
}

impl TryFrom<RawNode> for Certificate {
    type Error = String;

    fn try_from(raw: RawNode) -> std::result::Result<Self, String> {
        match raw.kind.as_str() {
            "constructive" => {
                let n = raw.n.ok_or("constructive node without n")?;
                let nu = raw.nu.ok_or("constructive node without nu")?;
                let filling = raw.filling.ok_or("constructive node without filling")?;
                let hypergraph = raw
                    .hypergraph
                    .ok_or("constructive node without hypergraph")?;
                let scalar = parse_scalar(&raw.scalar.ok_or("constructive node without scalar")?)?;
                Ok(Certificate::Constructive {
                    n,
                    nu,
                    filling,
                    hypergraph,
                    scalar,
                })
            }
            "transposed" => {
                let mut children = raw.children.ok_or("transposed node without children")?;
                if children.len() != 1 {
                    return Err("transposed node needs exactly one child".into());
                }
                let inner = Certificate::try_from(children.remove(0))?;
                Ok(Certificate::Transposed {
                    inner: Box::new(inner),
                })
            }
            "semigroup" => {
                let mut children = raw.children.ok_or("semigroup node without children")?;
                if children.len() != 2 {
                    return Err("semigroup node needs exactly two children".into());
                }
                let right = Certificate::try_from(children.remove(1))?;
                let left = Certificate::try_from(children.remove(0))?;
                let [lambda, mu, nu] = raw.triple;
                Ok(Certificate::Semigroup {
                    left: Box::new(left),
                    right: Box::new(right),
                    sum_triple: (lambda, mu, nu),
                })
            }
            "oracle" => {
                let value = parse_scalar(&raw.value.ok_or("oracle leaf without value")?)?;
                let [lambda, mu, nu] = raw.triple;
                Ok(Certificate::OracleLeaf {
                    triple: (lambda, mu, nu),
                    value,
                })
            }
            other => Err(format!("unknown certificate node kind {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn comparable_certificates_take_the_right_branch() {
        let cert = certify_comparable(3, &p(&[4, 1, 1])).unwrap();
        assert_eq!(cert.kind_name(), "constructive");
        assert!(!cert.scalar().unwrap().is_zero());

        let cert = certify_comparable(3, &p(&[3, 1, 1, 1])).unwrap();
        match &cert {
            Certificate::Transposed { inner } => match inner.as_ref() {
                Certificate::Constructive { nu, .. } => assert_eq!(nu, &p(&[4, 1, 1])),
                other => panic!("unexpected inner {other:?}"),
            },
            other => panic!("unexpected root {other:?}"),
        }

        let cert = certify_comparable(1, &p(&[1])).unwrap();
        assert_eq!(cert.scalar().unwrap(), &BigInt::one());
    }

    #[test]
    fn staircase_itself_is_constructive() {
        let cert = certify_comparable(3, &Partition::staircase(3)).unwrap();
        assert_eq!(cert.kind_name(), "constructive");
    }

    #[test]
    fn incomparable_is_rejected() {
        let err = certify_comparable(4, &p(&[6, 1, 1, 1, 1])).unwrap_err();
        assert!(matches!(err, Error::NotComparable { .. }));
        let err = certify_comparable(3, &p(&[4, 2, 1])).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch { .. }));
    }

    #[test]
    fn transposed_roots_appear_exactly_for_strictly_dominated_nu() {
        for n in 1..=4u32 {
            let rho = Partition::staircase(n);
            for nu in enumerate_partitions(rho.size()).unwrap() {
                if !nu.comparable(&rho).unwrap() {
                    continue;
                }
                let cert = certify_comparable(n, &nu).unwrap();
                let strictly_dominated =
                    rho.dominates(&nu).unwrap() && !nu.dominates(&rho).unwrap();
                assert_eq!(
                    matches!(cert, Certificate::Transposed { .. }),
                    strictly_dominated,
                    "n={n} nu={nu}"
                );
            }
        }
    }

    #[test]
    fn hook_certificates() {
        let cert = certify_hook(4, &p(&[7, 1, 1, 1])).unwrap();
        match &cert {
            Certificate::Semigroup {
                left,
                right,
                sum_triple,
            } => {
                let rho4 = Partition::staircase(4);
                assert_eq!(sum_triple, &(rho4.clone(), rho4, p(&[7, 1, 1, 1])));
                assert_eq!(left.triple().2, p(&[3, 1, 1, 1]));
                assert_eq!(
                    right.as_ref(),
                    &Certificate::OracleLeaf {
                        triple: (p(&[1, 1, 1, 1]), p(&[1, 1, 1, 1]), p(&[4])),
                        value: BigInt::one(),
                    }
                );
            }
            other => panic!("unexpected root {other:?}"),
        }

        let cert = certify_hook(2, &p(&[2, 1])).unwrap();
        assert_eq!(cert.kind_name(), "constructive");

        let cert = certify_hook(3, &p(&[1, 1, 1, 1, 1, 1])).unwrap();
        assert!(!cert.is_semigroup());

        assert!(matches!(
            certify_hook(3, &p(&[4, 2])),
            Err(Error::NotAHook(_))
        ));
    }

    #[test]
    fn verify_accepts_fresh_certificates() {
        let oracle = CharacterCache::new();
        for n in 1..=4u32 {
            let rho = Partition::staircase(n);
            for nu in enumerate_partitions(rho.size()).unwrap() {
                if !nu.comparable(&rho).unwrap() {
                    continue;
                }
                let cert = certify_comparable(n, &nu).unwrap();
                let verdict = verify(&cert, &oracle, DEFAULT_ORACLE_CAP);
                assert!(verdict.is_ok(), "n={n} nu={nu}: {:?}", verdict.failures);
            }
        }
    }

    #[test]
    fn verify_rejects_tampered_scalar() {
        let oracle = CharacterCache::new();
        let mut cert = certify_comparable(3, &p(&[4, 1, 1])).unwrap();
        if let Certificate::Constructive { scalar, .. } = &mut cert {
            *scalar = BigInt::zero();
        }
        let verdict = verify(&cert, &oracle, DEFAULT_ORACLE_CAP);
        assert!(!verdict.is_ok());
    }

    #[test]
    fn verify_rejects_tampered_sum_triple() {
        let oracle = CharacterCache::new();
        let mut cert = certify_hook(4, &p(&[7, 1, 1, 1])).unwrap();
        if let Certificate::Semigroup { sum_triple, .. } = &mut cert {
            sum_triple.2 = p(&[8, 1, 1]);
        }
        let verdict = verify(&cert, &oracle, DEFAULT_ORACLE_CAP);
        assert!(verdict.failures.iter().any(|f| f.contains("sum triple")));
    }

    #[test]
    fn verify_rejects_tampered_filling() {
        let oracle = CharacterCache::new();
        let mut cert = certify_comparable(2, &p(&[2, 1])).unwrap();
        if let Certificate::Constructive { filling, .. } = &mut cert {
            *filling = Filling::from_rows(vec![vec![1, 2], vec![1]]).unwrap();
        }
        let verdict = verify(&cert, &oracle, DEFAULT_ORACLE_CAP);
        assert!(!verdict.is_ok());
    }

    #[test]
    fn theorem_sweep_small() {
        let oracle = CharacterCache::new();
        let report = verify_theorem_all(3, &oracle).unwrap();
        assert_eq!(report.n, 3);
        assert_eq!(report.total, 11);
        assert_eq!(report.comparable, 11);
        assert_eq!(report.certified, 11);
        assert!(report.failures.is_empty());
        assert_eq!(report.timings.len(), 11);

        let report = verify_theorem_all(1, &oracle).unwrap();
        assert_eq!(report.total, 1);
        assert_eq!(report.certified, 1);
    }

    #[test]
    fn sweep_caps() {
        let oracle = CharacterCache::new();
        assert!(matches!(
            verify_theorem_all(7, &oracle),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            verify_hooks_all(0, &oracle),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn hooks_enumeration() {
        assert_eq!(hook_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(hook_partitions(10).len(), 10);
    }

    #[test]
    fn hook_sweep_small() {
        let oracle = CharacterCache::new();
        let report = verify_hooks_all(2, &oracle).unwrap();
        assert_eq!(report.total, 3);
        assert_eq!(report.certified, 3);
        assert!(report.failures.is_empty());

        let report = verify_hooks_all(4, &oracle).unwrap();
        assert_eq!(report.total, 10);
        assert_eq!(report.certified, 10);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn certificate_serde_round_trip() {
        let cert = certify_hook(4, &p(&[7, 1, 1, 1])).unwrap();
        let doc = CertificateDocument::new(cert.clone());
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.starts_with("{\"schema\":1,"));
        let back: CertificateDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.certificate, cert);

        let cert = certify_comparable(4, &p(&[5, 3, 1, 1])).unwrap();
        let json = serde_json::to_string(&CertificateDocument::new(cert.clone())).unwrap();
        let back: CertificateDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.certificate, cert);
        let oracle = CharacterCache::new();
        assert!(verify(&back.certificate, &oracle, DEFAULT_ORACLE_CAP).is_ok());
    }

    #[test]
    fn malformed_certificates_fail_to_parse() {
        let bad_kind = r#"{"schema":1,"certificate":{"kind":"mystery","triple":["1","1","1"]}}"#;
        assert!(serde_json::from_str::<CertificateDocument>(bad_kind).is_err());

        let missing_children =
            r#"{"schema":1,"certificate":{"kind":"semigroup","triple":["1","1","1"]}}"#;
        assert!(serde_json::from_str::<CertificateDocument>(missing_children).is_err());

        let bad_scalar =
            r#"{"schema":1,"certificate":{"kind":"oracle","triple":["1","1","1"],"value":"one"}}"#;
        assert!(serde_json::from_str::<CertificateDocument>(bad_scalar).is_err());

        let one_child = r#"{"schema":1,"certificate":{"kind":"transposed","triple":["1","1","1"],"children":[]}}"#;
        assert!(serde_json::from_str::<CertificateDocument>(one_child).is_err());
    }

    #[test]
    fn report_serialization_shape() {
        let oracle = CharacterCache::new();
        let report = verify_theorem_all(2, &oracle).unwrap();
        let value: serde_json::Value = serde_json::to_value(&report).unwrap();
        let object = value.as_object().unwrap();
        let keys: Vec<&String> = object.keys().collect();
        assert_eq!(keys, ["certified", "comparable", "failures", "n", "total"]);
    }
}
