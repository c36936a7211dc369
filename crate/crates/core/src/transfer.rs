//! Moving clues across a reduction with a structural certificate map.
//!
//! Target indices fall into one class per source index (the indices whose
//! value is read from that source position) plus one class of constants.
//! Forward transfer writes each given source value into the first index of
//! its class; backward transfer reads one index per class and inverts its
//! table. Neither direction ever increases the clue size.

use serde::Serialize;

use crate::certificate::{Alphabet, Clue, Symbol};
use crate::error::{Error, Result};
use crate::reduction::{IndexDependency, StructuralCertificateMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DependencyClasses {
    /// `classes[i]` lists, in ascending order, the target indices that read
    /// source index `i`.
    pub classes: Vec<Vec<usize>>,
    pub constants: Vec<usize>,
}

impl DependencyClasses {
    pub fn class(&self, source: usize) -> &[usize] {
        &self.classes[source]
    }
}

pub fn dependency_classes(map: &StructuralCertificateMap) -> DependencyClasses {
    let mut classes = vec![Vec::new(); map.source_length()];
    let mut constants = Vec::new();
    for (j, dep) in map.deps().iter().enumerate() {
        match dep {
            IndexDependency::Dependent { source, .. } => classes[*source].push(j),
            IndexDependency::Constant { .. } => constants.push(j),
        }
    }
    DependencyClasses { classes, constants }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferResult {
    pub input: Clue,
    pub clue: Clue,
    /// Given source indices with no dependent target index.
    pub dropped_sources: Vec<usize>,
    pub warnings: Vec<String>,
}

fn check_shape(clue: &Clue, alphabet: &Alphabet, len: usize) -> Result<()> {
    if clue.alphabet() != alphabet {
        return Err(Error::AlphabetMismatch);
    }
    if clue.len() != len {
        return Err(Error::LengthMismatch {
            expected: len,
            actual: clue.len(),
        });
    }
    Ok(())
}

/// Source clue to target clue.
pub fn forward_transfer(
    map: &StructuralCertificateMap,
    source_clue: &Clue,
) -> Result<TransferResult> {
    check_shape(source_clue, map.source_alphabet(), map.source_length())?;
    let classes = dependency_classes(map);
    let mut entries = vec![None; map.target_length()];
    let mut dropped = Vec::new();
    for i in source_clue.given_positions() {
        let value = source_clue.get(i).expect("given position");
        match classes.class(i).first() {
            Some(&j) => {
                entries[j] = Some(match map.dependency(j) {
                    IndexDependency::Dependent { table, .. } => table[value.index()],
                    IndexDependency::Constant { .. } => unreachable!("classes hold dependents"),
                });
            }
            None => dropped.push(i),
        }
    }
    let target = Clue::new(map.target_alphabet().clone(), entries)?;
    let warnings = dropped
        .iter()
        .map(|i| format!("source index {i} feeds no target index; its clue value is dropped"))
        .collect();
    Ok(TransferResult {
        input: source_clue.clone(),
        clue: target,
        dropped_sources: dropped,
        warnings,
    })
}

/// Target clue to source clue.
///
/// Fails with [`Error::InvalidClue`] when a given value lies outside a
/// table's image or contradicts a constant index, and with
/// [`Error::InconsistentClue`] when two indices of one class invert to
/// different source values. Either way no mapped certificate satisfies the
/// input.
pub fn backward_transfer(map: &StructuralCertificateMap, target_clue: &Clue) -> Result<Clue> {
    check_shape(target_clue, map.target_alphabet(), map.target_length())?;
    let classes = dependency_classes(map);

    for &j in &classes.constants {
        if let (Some(given), IndexDependency::Constant { value }) =
            (target_clue.get(j), map.dependency(j))
        {
            if given != *value {
                return Err(Error::InvalidClue(format!(
                    "index {j} is constant {} but the clue gives {}",
                    value.index(),
                    given.index()
                )));
            }
        }
    }

    let mut entries = vec![None; map.source_length()];
    for (i, class) in classes.classes.iter().enumerate() {
        let mut chosen: Option<(usize, Symbol)> = None;
        for &j in class {
            let Some(given) = target_clue.get(j) else {
                continue;
            };
            let value = map.invert(j, given).ok_or_else(|| {
                Error::InvalidClue(format!(
                    "value {} at index {j} is outside the image of its table",
                    given.index()
                ))
            })?;
            match chosen {
                None => chosen = Some((j, value)),
                Some((first, v)) if v != value => {
                    return Err(Error::InconsistentClue(format!(
                        "indices {first} and {j} both read source index {i} but disagree"
                    )))
                }
                Some(_) => {}
            }
        }
        entries[i] = chosen.map(|(_, v)| v);
    }
    Clue::new(map.source_alphabet().clone(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::OneInThreeInstance;
    use crate::reduction::build_duplicate_and_pad;
    use proptest::prelude::*;

    fn dup_pad(m: usize) -> StructuralCertificateMap {
        build_duplicate_and_pad(&OneInThreeInstance::new(m, vec![]).unwrap()).1
    }

    fn clue(text: &str) -> Clue {
        Clue::parse(text, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn classes_of_dup_pad() {
        let c = dependency_classes(&dup_pad(2));
        assert_eq!(c.classes, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(c.constants, vec![4, 5]);
    }

    #[test]
    fn classes_of_trivial_maps() {
        let all_const = StructuralCertificateMap::new(
            Alphabet::binary(),
            Alphabet::binary(),
            2,
            vec![IndexDependency::Constant { value: Symbol(0) }; 3],
        )
        .unwrap();
        let c = dependency_classes(&all_const);
        assert_eq!(c.classes, vec![Vec::<usize>::new(); 2]);
        assert_eq!(c.constants, vec![0, 1, 2]);

        let id = dependency_classes(&StructuralCertificateMap::identity(Alphabet::binary(), 3));
        assert_eq!(id.classes, vec![vec![0], vec![1], vec![2]]);
        assert!(id.constants.is_empty());
    }

    #[test]
    fn forward_examples() {
        let r = forward_transfer(&dup_pad(2), &clue("1_")).unwrap();
        assert_eq!(r.clue, clue("1_____"));
        assert!(r.dropped_sources.is_empty());
        assert!(r.warnings.is_empty());

        let r = forward_transfer(&dup_pad(3), &clue("___")).unwrap();
        assert_eq!(r.clue, clue("________"));
    }

    #[test]
    fn forward_drops_unused_sources() {
        let map = StructuralCertificateMap::new(
            Alphabet::binary(),
            Alphabet::binary(),
            1,
            vec![IndexDependency::Constant { value: Symbol(1) }; 2],
        )
        .unwrap();
        let r = forward_transfer(&map, &clue("1")).unwrap();
        assert_eq!(r.clue, clue("__"));
        assert_eq!(r.dropped_sources, vec![0]);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn forward_checks_shape() {
        assert!(matches!(
            forward_transfer(&dup_pad(2), &clue("1")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn backward_examples() {
        assert_eq!(
            backward_transfer(&dup_pad(2), &clue("_1____")).unwrap(),
            clue("_1")
        );
        assert_eq!(
            backward_transfer(&dup_pad(2), &clue("____01")).unwrap(),
            clue("__")
        );
        assert_eq!(
            backward_transfer(&dup_pad(2), &clue("__1_01")).unwrap(),
            clue("1_")
        );
    }

    #[test]
    fn backward_rejects_disagreement() {
        assert!(matches!(
            backward_transfer(&dup_pad(2), &clue("1_0___")),
            Err(Error::InconsistentClue(_))
        ));
        assert!(matches!(
            backward_transfer(&dup_pad(1), &clue("10__")),
            Err(Error::InconsistentClue(_))
        ));
        assert!(matches!(
            backward_transfer(&dup_pad(1), &clue("__1_")),
            Err(Error::InvalidClue(_))
        ));
    }

    #[test]
    fn backward_rejects_values_outside_image() {
        let ternary = Alphabet::of_size(3).unwrap();
        let map = StructuralCertificateMap::new(
            Alphabet::binary(),
            ternary.clone(),
            1,
            vec![IndexDependency::Dependent {
                source: 0,
                table: vec![Symbol(0), Symbol(2)],
            }],
        )
        .unwrap();
        assert_eq!(
            backward_transfer(&map, &Clue::parse("2", &ternary).unwrap()).unwrap(),
            clue("1")
        );
        assert!(matches!(
            backward_transfer(&map, &Clue::parse("1", &ternary).unwrap()),
            Err(Error::InvalidClue(_))
        ));
    }

    fn source_clue(m: usize) -> impl Strategy<Value = Clue> {
        prop::collection::vec(prop::option::of(0u8..2), m).prop_map(|e| {
            Clue::new(
                Alphabet::binary(),
                e.into_iter().map(|s| s.map(Symbol)).collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn forward_then_backward_is_identity(
            (m, c) in (0usize..7).prop_flat_map(|m| (Just(m), source_clue(m)))
        ) {
            let map = dup_pad(m);
            let fwd = forward_transfer(&map, &c).unwrap();
            prop_assert!(fwd.clue.size() <= c.size());
            prop_assert!(fwd.dropped_sources.is_empty());
            let back = backward_transfer(&map, &fwd.clue).unwrap();
            prop_assert!(back.size() <= fwd.clue.size());
            prop_assert_eq!(back, c);
        }
    }
}
