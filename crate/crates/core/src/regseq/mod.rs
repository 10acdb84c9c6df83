//! Regular-sequence certificates from lead terms, and independent
//! computational oracles.

mod certificate;
mod lemma;
mod oracle;

pub use certificate::{
    certify_sequence, CertificateDoc, CertificateError, CertificateStep, Certifier, ChecksDoc,
    RegularityCertificate, StepDoc, StepKind, Verdict,
};
pub use lemma::{
    check_coprime_leads, check_technical_step, CoprimeCheck, EffectiveElement, GcdChecks, Role,
    StepFailure, Subtraction, TechnicalStep,
};
pub use oracle::{
    greedy_extend, grevlex_ring, nonzerodivisor_colon, regular_oracle_colon,
    regular_oracle_hilbert, sequence_oracle, CandidateOutcome, GreedyResult, OracleError,
    OracleMethod, OracleReport, OracleVerdict, StepDetail, AUX_VARIABLE,
};
