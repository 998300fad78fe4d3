//! Regular points, jump-index complements and the global dichotomy for `Γ`.

pub mod dichotomy;
pub mod flag;
pub mod point;

pub use crate::nilrep::support;
pub use dichotomy::{classify_dichotomy, DichotomyCase, DichotomyVerdict, Sampling, SampleEvidence};
pub use flag::{jordan_holder_flag, jump_and_complement, Flag, JumpData};
pub use point::{is_regular_point, isotropy_algebra, RegularityVerdict, RepContext};
