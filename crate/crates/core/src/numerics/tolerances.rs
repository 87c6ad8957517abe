/// Every numerical threshold used by the library, in one place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative Hermiticity check: `max|A - A^H| <= hermitian * max|A|`.
    pub hermitian: f64,
    /// Jacobi stops once every off-diagonal modulus is below this times `max|A|`.
    pub jacobi_off_diagonal: f64,
    /// Maximum number of cyclic Jacobi sweeps.
    pub jacobi_max_sweeps: usize,
    /// Singular values below this (relative to the largest) get completed
    /// left vectors instead of `A v / sigma`.
    pub svd_null: f64,
    /// Unit trace of density matrices.
    pub trace: f64,
    /// Smallest admissible eigenvalue of a density matrix.
    pub psd: f64,
    /// Normalization of stored state vectors.
    pub normalization: f64,
    /// Normalization demanded of caller-supplied coefficient lists.
    pub input_normalization: f64,
    /// Eigenvalues below this are treated as zero by `log`.
    pub log_floor: f64,
    /// Orthonormality, unitarity and projector algebra checks.
    pub operator: f64,
    /// `|D(a, a')|` below this counts as decohered.
    pub consistency: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        hermitian: 1e-12,
        jacobi_off_diagonal: 1e-13,
        jacobi_max_sweeps: 100,
        svd_null: 1e-12,
        trace: 1e-12,
        psd: 1e-10,
        normalization: 1e-12,
        input_normalization: 1e-9,
        log_floor: 1e-300,
        operator: 1e-10,
        consistency: 1e-8,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// The tolerances the library uses internally.
pub const TOL: Tolerances = Tolerances::DEFAULT;
