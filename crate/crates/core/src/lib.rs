//! Orthogonality-preserving real-linear maps between complex inner
//! product spaces.
//!
//! A map `A: ℂ^m → ℂ^n` is given by its complex-linear and anti-linear
//! parts, `A(x) = C·x + D·conj(x)`. The crate decides whether `A` sends
//! orthogonal pairs to orthogonal pairs and, if it does, whether it is
//! complex-linear, conjugate-linear, or of genuinely mixed type:
//!
//! * [`decomp`] factors `A = γ·T` with `T` a real-linear isometry;
//! * [`typing`] computes the per-point decomposition
//!   `T(iz) = i·s(z)·T(z) + η(z)`;
//! * [`classify`] certifies orthogonality preservation through a Gram
//!   identity and cross-checks it with a sampling oracle;
//! * [`synth`] builds canonical mixed-type isometries, the corrector map
//!   that turns them complex-linear, and test galleries;
//! * [`io`] and [`cli`] read and write JSON map files.
//!
//! ```
//! use orthopreserve::{classify_map, synth::paper_counterexample, MapClass};
//!
//! let verdict = classify_map(&paper_counterexample(), 1e-9).unwrap();
//! assert_eq!(verdict.class, MapClass::NotOrthogonalityPreserving);
//! ```

pub mod classify;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod io;
pub mod linalg;
pub mod map;
pub mod ortho;
pub mod random;
pub mod space;
pub mod synth;
pub mod typing;

pub use classify::{
    classify_map, is_orthogonality_preserving, range_distance, sampling_oracle, theorem_equivalence_check,
    Classification, MapClass, OpCertificate, OpDecision,
};
pub use decomp::{is_real_isometry, wojcik_decompose, ScaledIsometry};
pub use error::{Error, Result};
pub use map::RealLinearMap;
pub use ortho::{birkhoff_min, is_orthogonal, project_orthogonal, sample_orthogonal_pairs};
pub use space::{inner, ComplexVec};
pub use synth::{build_corrector, gallery, random_op_map, synth_canonical, CanonicalSpec, OpKind};
pub use typing::{classify_point, type_profile, PointType, TypeProfile};
