use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{name} = {value} is outside {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: String,
    },

    /// A series ran into the configured term cap before meeting its tolerance.
    #[error("{what} did not converge within {terms} terms")]
    NonConvergence { what: &'static str, terms: usize },

    #[error("{0} must not be empty")]
    EmptyGrid(&'static str),

    /// The sharpness search ran out of grid without seeing a violation.
    #[error("no {side} violation for a = {a}, lambda = {lambda} within {steps} refinements")]
    WitnessNotFound {
        a: f64,
        lambda: f64,
        side: &'static str,
        steps: usize,
    },

    #[error("at a = {a}, r = {r} (r'^2 = {rp2}): {source}")]
    AtPoint {
        a: f64,
        r: f64,
        rp2: f64,
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, domain: impl Into<String>) -> Self {
        Error::Domain {
            name,
            value,
            domain: domain.into(),
        }
    }
}
