//! The two registered demo reductions.
//!
//! `dup-pad` copies every source variable twice and appends a forced pair
//! `f = 0`, `t = 1`; each target position depends on one source position or
//! is constant. `parity` appends the XOR of all variables, a position that
//! depends on several source positions at once.

use super::{IndexDependency, Reduction, StructuralCertificateMap};
use crate::certificate::{Alphabet, Symbol};
use crate::problems::{Literal, OneInThreeInstance, ParityOneInThreeInstance, TripleClause};

#[derive(Debug, Clone, Copy, Default)]
pub struct DuplicateAndPad;

#[derive(Debug, Clone, Copy, Default)]
pub struct ParityExtension;

/// Target variables: `a_i = i`, `b_i = m + i`, `f = 2m`, `t = 2m + 1`.
///
/// Clauses: the source clauses over the `a` copies, `(a_i, ¬b_i, f)` for
/// each `i`, and `(f, f, t)`. The forcing clause pins `f = 0, t = 1`, after
/// which each equality clause reads `a_i = b_i`.
pub fn build_duplicate_and_pad(
    source: &OneInThreeInstance,
) -> (OneInThreeInstance, StructuralCertificateMap) {
    let m = source.num_vars();
    let (f, t) = (2 * m, 2 * m + 1);
    let mut clauses: Vec<TripleClause> = source.clauses().to_vec();
    clauses.extend(
        (0..m).map(|i| TripleClause::new([Literal::pos(i), Literal::neg(m + i), Literal::pos(f)])),
    );
    clauses.push(TripleClause::new([
        Literal::pos(f),
        Literal::pos(f),
        Literal::pos(t),
    ]));
    let target = OneInThreeInstance::new(2 * m + 2, clauses).expect("variables are in range");

    let deps = (0..m)
        .chain(0..m)
        .map(|i| IndexDependency::identity(i, 2))
        .chain([
            IndexDependency::Constant { value: Symbol(0) },
            IndexDependency::Constant { value: Symbol(1) },
        ])
        .collect();
    let map = StructuralCertificateMap::new(Alphabet::binary(), Alphabet::binary(), m, deps)
        .expect("dup-pad map is well formed");
    (target, map)
}

pub fn build_parity_reduction(source: &OneInThreeInstance) -> ParityOneInThreeInstance {
    ParityOneInThreeInstance::new(source.clone())
}

impl Reduction for DuplicateAndPad {
    type Source = OneInThreeInstance;
    type Target = OneInThreeInstance;

    fn name(&self) -> &str {
        "dup-pad"
    }

    fn transform(&self, source: &OneInThreeInstance) -> OneInThreeInstance {
        build_duplicate_and_pad(source).0
    }

    fn certificate_map(&self, source: &OneInThreeInstance) -> Option<StructuralCertificateMap> {
        Some(build_duplicate_and_pad(source).1)
    }
}

impl Reduction for ParityExtension {
    type Source = OneInThreeInstance;
    type Target = ParityOneInThreeInstance;

    fn name(&self) -> &str {
        "parity"
    }

    fn transform(&self, source: &OneInThreeInstance) -> ParityOneInThreeInstance {
        build_parity_reduction(source)
    }

    /// The parity position has no single-source description.
    fn certificate_map(&self, _source: &OneInThreeInstance) -> Option<StructuralCertificateMap> {
        None
    }
}
