//! Decide whether `fmp` is `0`, `1`, or larger, with certificates.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{decide_fpm, fpm_by_partition, FpmCertificate, FpmDecision, NoFpmWitness, PARTITION_CAP};

/// Shape of the positive certificates returned by [`classify_fmp01`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CertificateForm {
    /// Half-integral edge weights.
    #[default]
    Matching,
    /// `K2` and odd Hamiltonian blocks; limited to small orders.
    Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fmp01 {
    Zero(NoFpmWitness),
    One {
        certificate: FpmCertificate,
        edge: (usize, usize),
        witness: NoFpmWitness,
    },
    /// A certificate for `G - e`, for every edge `e` in order.
    AtLeastTwo(Vec<((usize, usize), FpmCertificate)>),
}

impl Fmp01 {
    pub fn value_class(&self) -> &'static str {
        match self {
            Fmp01::Zero(_) => "zero",
            Fmp01::One { .. } => "one",
            Fmp01::AtLeastTwo(_) => "at_least_two",
        }
    }

    /// Re-check every certificate against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            Fmp01::Zero(w) => w.validate(g),
            Fmp01::One {
                certificate,
                edge,
                witness,
            } => {
                certificate.validate(g)?;
                witness.validate(&g.without_edge(edge.0, edge.1)?)
            }
            Fmp01::AtLeastTwo(certs) => {
                if certs.len() != g.size() || !certs.iter().map(|c| c.0).eq(g.edges()) {
                    return Err(Error::invalid("certificates do not cover every edge"));
                }
                for ((u, v), c) in certs {
                    c.validate(&g.without_edge(*u, *v)?)?;
                }
                Ok(())
            }
        }
    }
}

fn no_fpm_witness(g: &Graph) -> Result<Option<NoFpmWitness>> {
    match decide_fpm(g) {
        FpmDecision::Perfect(_) => Ok(None),
        FpmDecision::Deficient(Some(w)) => Ok(Some(w)),
        FpmDecision::Deficient(None) => {
            let s = super::isolation_witness(g)?.expect("deficient graph has a zero-cost pair");
            Ok(Some(NoFpmWitness { s }))
        }
    }
}

fn certificate(g: &Graph, form: CertificateForm) -> Result<Option<FpmCertificate>> {
    match form {
        CertificateForm::Matching => Ok(match decide_fpm(g) {
            FpmDecision::Perfect(f) => Some(FpmCertificate::Matching(f)),
            FpmDecision::Deficient(_) => None,
        }),
        CertificateForm::Partition => Ok(fpm_by_partition(g)?.map(FpmCertificate::Partition)),
    }
}

pub fn classify_fmp01(g: &Graph, form: CertificateForm) -> Result<Fmp01> {
    super::check_order(g)?;
    if form == CertificateForm::Partition && g.order() > PARTITION_CAP {
        return Err(Error::cap("partition certificate order", PARTITION_CAP, g.order()));
    }
    if let Some(w) = no_fpm_witness(g)? {
        return Ok(Fmp01::Zero(w));
    }
    let mut certs = Vec::with_capacity(g.size());
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v)?;
        match certificate(&h, form)? {
            Some(c) => certs.push(((u, v), c)),
            None => {
                let witness = no_fpm_witness(&h)?.expect("no certificate means no fractional perfect matching");
                let certificate = certificate(g, form)?.expect("graph has a fractional perfect matching");
                return Ok(Fmp01::One {
                    certificate,
                    edge: (u, v),
                    witness,
                });
            }
        }
    }
    Ok(Fmp01::AtLeastTwo(certs))
}
