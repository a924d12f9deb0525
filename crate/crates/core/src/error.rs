use thiserror::Error;

/// Unobservable error directions reported when a sensitivity matrix is
/// rank deficient. Each direction is a unit vector over the tracked error
/// parameters to which no candidate response is first-order sensitive.
#[derive(Debug, Clone)]
pub struct NullSpaceReport {
    /// Numerical rank found.
    pub rank: usize,
    /// Number of tracked error parameters (columns).
    pub n_params: usize,
    /// Null-space basis vectors, one per missing rank.
    pub directions: Vec<Vec<f64>>,
    /// Human-readable labels for the columns, parallel to direction entries.
    pub column_labels: Vec<String>,
}

impl NullSpaceReport {
    /// Formats the dominant components of each unobservable direction.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "rank {} of {} parameters; {} unobservable direction(s):\n",
            self.rank,
            self.n_params,
            self.directions.len()
        ));
        for (i, dir) in self.directions.iter().enumerate() {
            let mut comps: Vec<(usize, f64)> = dir
                .iter()
                .copied()
                .enumerate()
                .filter(|(_, w)| w.abs() > 1e-6)
                .collect();
            comps.sort_by(|a, b| b.1.abs().partial_cmp(&a.1.abs()).unwrap());
            let terms: Vec<String> = comps
                .iter()
                .take(6)
                .map(|(u, w)| format!("{:+.3}*{}", w, self.column_labels[*u]))
                .collect();
            out.push_str(&format!("  [{}] {}\n", i, terms.join(" ")));
        }
        out
    }
}

#[derive(Debug, Error)]
pub enum GscError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hermitian within tolerance {tol:e} (max deviation {dev:e})")]
    NotHermitian { tol: f64, dev: f64 },
    #[error("matrix is not unitary within tolerance {tol:e} (max deviation {dev:e})")]
    NotUnitary { tol: f64, dev: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("sensitivity matrix is rank deficient; additional gates, states or measurements are needed\n{}", .0.describe())]
    RankDeficient(NullSpaceReport),
    #[error("no row subset satisfies the condition threshold {threshold} (best found {best})")]
    ConditionThreshold { threshold: f64, best: f64 },
    #[error("no complementary pairing found under condition threshold {threshold} (best found {best})")]
    PairingFailed { threshold: f64, best: f64 },
    #[error("SPAM-insensitive search exhausted; best achievable protected set: {0}")]
    SpamSearchExhausted(String),
    #[error("backend evaluation failed at row {row}: {message}")]
    BackendEvaluation { row: usize, message: String },
    #[error("Jacobian rank collapse: no descent direction ({0})")]
    JacobianRankCollapse(String),
    #[error("calibration did not converge: {0}")]
    Convergence(String),
    #[error("pulse sample out of bounds: channel {channel}, sample {sample}, value {value} mV")]
    PulseOutOfBounds {
        channel: usize,
        sample: usize,
        value: f64,
    },
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
    #[error("config error: {0}")]
    Config(String),
}
