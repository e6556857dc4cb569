//! Factorization-theoretic classification of monoids from the geometry of
//! their cones, with witnesses for every negative answer.

pub mod faces;
pub mod factorial;
pub mod finitary;
pub mod primary;

use serde::Serialize;

use crate::monoid::{atoms, generated_atoms, MonoidSpec, Window};

pub use faces::{
    face_submonoids, face_ufm_map, is_divisor_closed, non_ufm_face_interval, verify_divisor_witness,
    DivisorClosedVerdict, DivisorWitness, FaceData, FaceSubmonoid, FaceUfmMap,
};
pub use factorial::{classify_hfm, classify_ohfm, classify_ufm, length_functional_violation, Verdict};
pub use finitary::{
    check_trace, face_submonoids_inherit, finitary_certificate, finitary_certificate_with, verify_finitary,
    verify_finitary_certificate, CellTrace, FinitaryCertificate, FinitaryVerdict, Inheritance, InheritedCertificate,
};
pub use primary::{
    check_finitely_primary, classify_primary, mu, mu_sup_report, verify_mu_counterexample, verify_primary_witness,
    ConditionCheck, FinitelyPrimaryReport, MuCounterexample, MuSupReport, MuValue, PrimaryVerdict, PrimaryWitness,
};

/// How much a verdict is worth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum EvidenceStatus {
    /// Decided from complete data.
    Proved,
    /// Negative, with a witness that re-verifies independently.
    RefutedWithWitness,
    /// Only observed on a window.
    WindowEvidence { window: Window },
}

/// Atoms used by the geometric tests and whether they are all of `𝒜(M)`.
pub(crate) fn atom_data(m: &MonoidSpec, w: &Window) -> (Vec<Vec<i64>>, bool) {
    match generated_atoms(m) {
        Some(a) => (a, true),
        None => (atoms(m, w).atoms, false),
    }
}
