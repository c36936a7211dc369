use serde::Serialize;

use crate::certificate::{Alphabet, CertificateString, Symbol};
use crate::error::{Error, Result};

/// How one target certificate position is produced from a source certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IndexDependency {
    /// `x_Q[j] = table[x_P[source]]`, with `table` injective and total on the
    /// source alphabet.
    Dependent { source: usize, table: Vec<Symbol> },
    /// `x_Q[j]` takes the same value for every source certificate.
    Constant { value: Symbol },
}

impl IndexDependency {
    /// Identity table over a shared alphabet of `alphabet_size` symbols.
    pub fn identity(source: usize, alphabet_size: usize) -> Self {
        IndexDependency::Dependent {
            source,
            table: (0..alphabet_size).map(|k| Symbol(k as u8)).collect(),
        }
    }

    pub fn source(&self) -> Option<usize> {
        match self {
            IndexDependency::Dependent { source, .. } => Some(*source),
            IndexDependency::Constant { .. } => None,
        }
    }

    pub fn eval(&self, source_cert: &[Symbol]) -> Symbol {
        match self {
            IndexDependency::Dependent { source, table } => table[source_cert[*source].index()],
            IndexDependency::Constant { value } => *value,
        }
    }
}

/// Per-target-index dependency descriptors for a reduction's certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralCertificateMap {
    source_alphabet: Alphabet,
    target_alphabet: Alphabet,
    source_length: usize,
    deps: Vec<IndexDependency>,
    /// Inverse of each dependent table, indexed by target symbol.
    inverses: Vec<Option<Vec<Option<Symbol>>>>,
}

impl StructuralCertificateMap {
    /// Validates ranges, totality and injectivity of every table over the
    /// full source alphabet.
    pub fn new(
        source_alphabet: Alphabet,
        target_alphabet: Alphabet,
        source_length: usize,
        deps: Vec<IndexDependency>,
    ) -> Result<Self> {
        let mut inverses = Vec::with_capacity(deps.len());
        for (j, dep) in deps.iter().enumerate() {
            match dep {
                IndexDependency::Constant { value } => {
                    target_alphabet.check(*value).map_err(|_| {
                        Error::InvalidMap(format!("index {j}: constant outside target alphabet"))
                    })?;
                    inverses.push(None);
                }
                IndexDependency::Dependent { source, table } => {
                    if *source >= source_length {
                        return Err(Error::InvalidMap(format!(
                            "index {j}: source {source} out of range for length {source_length}"
                        )));
                    }
                    if table.len() != source_alphabet.len() {
                        return Err(Error::InvalidMap(format!(
                            "index {j}: table has {} entries for {} source symbols",
                            table.len(),
                            source_alphabet.len()
                        )));
                    }
                    let mut inverse = vec![None; target_alphabet.len()];
                    for (from, &to) in table.iter().enumerate() {
                        target_alphabet.check(to).map_err(|_| {
                            Error::InvalidMap(format!(
                                "index {j}: image {} outside target alphabet",
                                to.index()
                            ))
                        })?;
                        let slot = &mut inverse[to.index()];
                        if let Some(prev) = slot {
                            return Err(Error::InvalidMap(format!(
                                "index {j}: table is not injective ({} and {from} both map to {})",
                                Symbol::index(*prev),
                                to.index()
                            )));
                        }
                        *slot = Some(Symbol(from as u8));
                    }
                    inverses.push(Some(inverse));
                }
            }
        }
        Ok(StructuralCertificateMap {
            source_alphabet,
            target_alphabet,
            source_length,
            deps,
            inverses,
        })
    }

    /// `x_Q = x_P` over a single alphabet.
    pub fn identity(alphabet: Alphabet, length: usize) -> Self {
        let deps = (0..length)
            .map(|i| IndexDependency::identity(i, alphabet.len()))
            .collect();
        Self::new(alphabet.clone(), alphabet, length, deps).expect("identity map is well formed")
    }

    pub fn source_alphabet(&self) -> &Alphabet {
        &self.source_alphabet
    }

    pub fn target_alphabet(&self) -> &Alphabet {
        &self.target_alphabet
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn target_length(&self) -> usize {
        self.deps.len()
    }

    pub fn deps(&self) -> &[IndexDependency] {
        &self.deps
    }

    pub fn dependency(&self, j: usize) -> &IndexDependency {
        &self.deps[j]
    }

    /// `f_j^{-1}(symbol)`, or `None` when `symbol` is outside the image or
    /// `j` is a constant index.
    pub fn invert(&self, j: usize, symbol: Symbol) -> Option<Symbol> {
        self.inverses[j]
            .as_ref()?
            .get(symbol.index())
            .copied()
            .flatten()
    }

    pub(crate) fn apply_raw(&self, source: &[Symbol]) -> Vec<Symbol> {
        self.deps.iter().map(|d| d.eval(source)).collect()
    }

    pub fn apply(&self, source: &CertificateString) -> Result<CertificateString> {
        if *source.alphabet() != self.source_alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if source.len() != self.source_length {
            return Err(Error::LengthMismatch {
                expected: self.source_length,
                actual: source.len(),
            });
        }
        Ok(CertificateString::from_trusted(
            self.target_alphabet.clone(),
            self.apply_raw(source.entries()),
        ))
    }
}

pub fn apply_cert_map(
    map: &StructuralCertificateMap,
    source: &CertificateString,
) -> Result<CertificateString> {
    map.apply(source)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin() -> Alphabet {
        Alphabet::binary()
    }

    #[test]
    fn identity_map_is_identity() {
        let map = StructuralCertificateMap::identity(bin(), 4);
        let x = CertificateString::from_bits(&[1, 0, 0, 1]);
        assert_eq!(map.apply(&x).unwrap(), x);
    }

    #[test]
    fn constant_map_ignores_input() {
        let map = StructuralCertificateMap::new(
            bin(),
            bin(),
            2,
            vec![
                IndexDependency::Constant { value: Symbol(1) },
                IndexDependency::Constant { value: Symbol(0) },
            ],
        )
        .unwrap();
        for bits in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let y = map.apply(&CertificateString::from_bits(&bits)).unwrap();
            assert_eq!(y.to_string(), "10");
        }
    }

    #[test]
    fn cross_alphabet_tables() {
        let ternary = Alphabet::of_size(3).unwrap();
        let map = StructuralCertificateMap::new(
            bin(),
            ternary.clone(),
            1,
            vec![IndexDependency::Dependent {
                source: 0,
                table: vec![Symbol(2), Symbol(0)],
            }],
        )
        .unwrap();
        let y = map.apply(&CertificateString::from_bits(&[0])).unwrap();
        assert_eq!(y.to_string(), "2");
        assert_eq!(map.invert(0, Symbol(0)), Some(Symbol(1)));
        assert_eq!(map.invert(0, Symbol(1)), None);
    }

    #[test]
    fn rejects_malformed_maps() {
        let bad = [
            vec![IndexDependency::identity(3, 2)],
            vec![IndexDependency::Dependent {
                source: 0,
                table: vec![Symbol(0)],
            }],
            vec![IndexDependency::Dependent {
                source: 0,
                table: vec![Symbol(1), Symbol(1)],
            }],
            vec![IndexDependency::Dependent {
                source: 0,
                table: vec![Symbol(0), Symbol(2)],
            }],
            vec![IndexDependency::Constant { value: Symbol(2) }],
        ];
        for deps in bad {
            assert!(matches!(
                StructuralCertificateMap::new(bin(), bin(), 2, deps),
                Err(Error::InvalidMap(_))
            ));
        }
    }

    #[test]
    fn apply_checks_input() {
        let map = StructuralCertificateMap::identity(bin(), 2);
        assert!(map.apply(&CertificateString::from_bits(&[1])).is_err());
    }
}
