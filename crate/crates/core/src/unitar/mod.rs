//! Compactness and unitarity: invariant functionals, positivity witnesses,
//! cone certificates, the five necessary conditions, and fingerprints.

pub mod cone;
pub mod fingerprint;
pub mod report;
pub mod search;
pub mod witness;

pub use cone::{cone_pointedness, find_null_odd, odd_square, ConeCertificate};
pub use fingerprint::{classify_fingerprint, fingerprint, Classification, Fingerprint};
pub use report::{unitarity_report, Condition, ConditionReport, UnitarityReport, Verdict};
pub use witness::{
    compactness_check, find_witness, invariant_functional_basis, kappa_gram, kappa_grams, Compactness, FormSearch,
    Witness, WitnessOutcome,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

pub(crate) mod ser {
    use serde::Serializer;

    use crate::exact::{CMatrix, QMatrix, Rational, Scalar};

    pub fn vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn vecs<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
    }

    pub fn cvecs<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn cmatrix<S: Serializer>(m: &CMatrix, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(m.row_vecs().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
    }

    pub fn matrix<S: Serializer>(m: &QMatrix, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(m.row_vecs().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
    }
}
