//! Exact univariate machinery: dense polynomials, subresultants, Sturm
//! sequences and real root isolation.

mod prs;
mod roots;
mod upoly;

pub use prs::{
    bareiss_det, resultant, resultant_in, resultant_int, subresultant_prs, subresultant_seq,
    sylvester_resultant, SeqKind, SignedRemainderSeq, SubresultantSeq,
};
pub use roots::{
    cauchy_bound, content, count_real_roots, discriminant, eval_rat, gcd, isolate_real_roots,
    isolate_squarefree, primitive, sign_at, sign_at_ext, sign_variations, squarefree_part,
    sturm_count, sturm_sequence, ExtPoint, RootInterval,
};
pub use upoly::{Coeff, UPoly};
