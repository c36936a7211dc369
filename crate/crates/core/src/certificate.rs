//! Alphabets, certificate strings and clues.
//!
//! Symbols are canonical indices `0..alphabet.len()`. Each alphabet also
//! carries one display character per symbol, used only by the text format.
//! A clue entry is `None` for a blank position and `Some(symbol)` otherwise,
//! so the blank marker never collides with a real symbol.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Character used for a blank clue position in the text format.
pub const BLANK_CHAR: char = '_';

/// Canonical symbol of some alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Symbol(pub u8);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<bool> for Symbol {
    fn from(b: bool) -> Self {
        Symbol(b as u8)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    display: Arc<[char]>,
}

impl Alphabet {
    /// Builds an alphabet from its display characters; symbol `k` displays
    /// as `display[k]`.
    pub fn new(display: impl IntoIterator<Item = char>) -> Result<Self> {
        let display: Vec<char> = display.into_iter().collect();
        if display.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be non-empty".into()));
        }
        if display.len() > 256 {
            return Err(Error::InvalidAlphabet("at most 256 symbols".into()));
        }
        let mut seen = BTreeSet::new();
        for &c in &display {
            if c == BLANK_CHAR || c.is_whitespace() {
                return Err(Error::InvalidAlphabet(format!(
                    "{c:?} cannot be a display character"
                )));
            }
            if !seen.insert(c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet {
            display: display.into(),
        })
    }

    /// `{0, 1}` displayed as `'0'` and `'1'`.
    pub fn binary() -> Self {
        Alphabet {
            display: Arc::from(&['0', '1'][..]),
        }
    }

    /// Alphabet of `size` symbols displayed as `0-9`, then `a-z`, then `A-Z`.
    pub fn of_size(size: usize) -> Result<Self> {
        const DIGITS: &str = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
        if size > DIGITS.len() {
            return Err(Error::InvalidAlphabet(format!(
                "no default display characters for {size} symbols"
            )));
        }
        Alphabet::new(DIGITS.chars().take(size))
    }

    pub fn len(&self) -> usize {
        self.display.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len()).map(|k| Symbol(k as u8))
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        symbol.index() < self.len()
    }

    pub fn check(&self, symbol: Symbol) -> Result<()> {
        if self.contains(symbol) {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange {
                symbol: symbol.index(),
                size: self.len(),
            })
        }
    }

    pub fn display_char(&self, symbol: Symbol) -> char {
        self.display[symbol.index()]
    }

    pub fn lookup(&self, ch: char) -> Option<Symbol> {
        self.display
            .iter()
            .position(|&c| c == ch)
            .map(|k| Symbol(k as u8))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet(")?;
        for c in self.display.iter() {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A full assignment `x ∈ Γ^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CertificateString {
    alphabet: Alphabet,
    entries: Vec<Symbol>,
}

impl CertificateString {
    pub fn new(alphabet: Alphabet, entries: Vec<Symbol>) -> Result<Self> {
        for &s in &entries {
            alphabet.check(s)?;
        }
        Ok(CertificateString { alphabet, entries })
    }

    /// Binary certificate from `0`/`1` values; anything non-zero maps to `1`.
    pub fn from_bits(bits: &[u8]) -> Self {
        CertificateString {
            alphabet: Alphabet::binary(),
            entries: bits.iter().map(|&b| Symbol((b != 0) as u8)).collect(),
        }
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let entries = strip_line_end(text)
            .chars()
            .enumerate()
            .map(|(column, ch)| {
                alphabet
                    .lookup(ch)
                    .ok_or(Error::UnknownCharacter { ch, column })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CertificateString {
            alphabet: alphabet.clone(),
            entries,
        })
    }

    pub(crate) fn from_trusted(alphabet: Alphabet, entries: Vec<Symbol>) -> Self {
        debug_assert!(entries.iter().all(|&s| alphabet.contains(s)));
        CertificateString { alphabet, entries }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Symbol> {
        self.entries.get(index).copied()
    }

    /// The clue that agrees with `self` on `positions` and is blank elsewhere.
    pub fn project(&self, positions: &BTreeSet<usize>) -> Result<Clue> {
        self.project_slice(&positions.iter().copied().collect::<Vec<_>>())
    }

    /// Like [`project`](Self::project) but takes positions as a slice;
    /// repeated positions are harmless.
    pub fn project_slice(&self, positions: &[usize]) -> Result<Clue> {
        let mut entries = vec![None; self.len()];
        for &p in positions {
            let slot = entries.get_mut(p).ok_or(Error::IndexOutOfRange {
                index: p,
                len: self.entries.len(),
            })?;
            *slot = Some(self.entries[p]);
        }
        Ok(Clue {
            alphabet: self.alphabet.clone(),
            entries,
        })
    }
}

impl fmt::Display for CertificateString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.entries {
            write!(f, "{}", self.alphabet.display_char(s))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CertificateString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CertificateString({self})")
    }
}

impl Serialize for CertificateString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A partial certificate: every position is either blank or a symbol.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clue {
    alphabet: Alphabet,
    entries: Vec<Option<Symbol>>,
}

impl Clue {
    pub fn new(alphabet: Alphabet, entries: Vec<Option<Symbol>>) -> Result<Self> {
        for s in entries.iter().flatten() {
            alphabet.check(*s)?;
        }
        Ok(Clue { alphabet, entries })
    }

    pub fn blank(alphabet: Alphabet, len: usize) -> Self {
        Clue {
            alphabet,
            entries: vec![None; len],
        }
    }

    /// Parses the one-line text format: `_` is blank, every other character
    /// is looked up in the alphabet's display table. A single trailing line
    /// terminator is accepted.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let entries = strip_line_end(text)
            .chars()
            .enumerate()
            .map(|(column, ch)| {
                if ch == BLANK_CHAR {
                    Ok(None)
                } else {
                    alphabet
                        .lookup(ch)
                        .map(Some)
                        .ok_or(Error::UnknownCharacter { ch, column })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Clue {
            alphabet: alphabet.clone(),
            entries,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn entries(&self) -> &[Option<Symbol>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Symbol> {
        self.entries.get(index).copied().flatten()
    }

    /// Number of non-blank positions.
    pub fn size(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    /// The non-blank positions in ascending order.
    pub fn given_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|_| i))
    }

    /// Blanks out position `index` (no-op if already blank).
    pub fn blanked(&self, index: usize) -> Result<Clue> {
        let mut out = self.clone();
        let len = out.entries.len();
        *out.entries
            .get_mut(index)
            .ok_or(Error::IndexOutOfRange { index, len })? = None;
        Ok(out)
    }

    /// `c ⊂ x`: every non-blank entry of the clue equals the certificate's.
    pub fn is_satisfied_by(&self, cert: &CertificateString) -> Result<bool> {
        if self.alphabet != cert.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if self.len() != cert.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: cert.len(),
            });
        }
        Ok(self.matches(cert.entries()))
    }

    /// Unchecked satisfaction on raw entries of equal length.
    pub(crate) fn matches(&self, cert: &[Symbol]) -> bool {
        self.entries
            .iter()
            .zip(cert)
            .all(|(c, x)| c.is_none_or(|c| c == *x))
    }
}

impl fmt::Display for Clue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let ch = match e {
                Some(s) => self.alphabet.display_char(*s),
                None => BLANK_CHAR,
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Clue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clue({self})")
    }
}

impl Serialize for Clue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn satisfies(clue: &Clue, cert: &CertificateString) -> Result<bool> {
    clue.is_satisfied_by(cert)
}

pub fn clue_size(clue: &Clue) -> usize {
    clue.size()
}

pub fn project(cert: &CertificateString, positions: &BTreeSet<usize>) -> Result<Clue> {
    cert.project(positions)
}

fn strip_line_end(text: &str) -> &str {
    text.strip_suffix("\r\n")
        .or_else(|| text.strip_suffix('\n'))
        .unwrap_or(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn clue(text: &str) -> Clue {
        Clue::parse(text, &Alphabet::binary()).unwrap()
    }

    fn cert(text: &str) -> CertificateString {
        CertificateString::parse(text, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn satisfaction_examples() {
        assert!(satisfies(&clue("1__"), &cert("101")).unwrap());
        assert!(satisfies(&clue("__"), &cert("01")).unwrap());
        assert!(!satisfies(&clue("0_"), &cert("10")).unwrap());
    }

    #[test]
    fn satisfaction_contract_violations() {
        assert_eq!(
            satisfies(&clue("1_"), &cert("101")),
            Err(Error::LengthMismatch {
                expected: 2,
                actual: 3
            })
        );
        let ternary = Clue::blank(Alphabet::of_size(3).unwrap(), 3);
        assert_eq!(
            satisfies(&ternary, &cert("101")),
            Err(Error::AlphabetMismatch)
        );
    }

    #[test]
    fn sizes() {
        assert_eq!(clue_size(&clue("___")), 0);
        assert_eq!(clue_size(&clue("1_0")), 2);
        assert_eq!(clue_size(&clue("1010")), 4);
    }

    #[test]
    fn projection_examples() {
        let x = cert("101");
        assert_eq!(project(&x, &BTreeSet::from([0])).unwrap(), clue("1__"));
        assert_eq!(project(&cert("10"), &BTreeSet::new()).unwrap(), clue("__"));
        assert_eq!(
            project(&cert("10"), &BTreeSet::from([5])),
            Err(Error::IndexOutOfRange { index: 5, len: 2 })
        );
    }

    #[test]
    fn zero_length_is_legal() {
        let x = cert("");
        let c = clue("");
        assert!(satisfies(&c, &x).unwrap());
        assert_eq!(c.size(), 0);
        assert_eq!(c.to_string(), "");
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new([]).is_err());
        assert!(Alphabet::new(['a', 'a']).is_err());
        assert!(Alphabet::new(['a', '_']).is_err());
        assert!(Alphabet::of_size(63).is_err());
        let abc = Alphabet::new(['x', 'y', 'z']).unwrap();
        assert_eq!(abc.lookup('z'), Some(Symbol(2)));
        assert_eq!(abc.lookup('w'), None);
        assert!(CertificateString::new(abc.clone(), vec![Symbol(3)]).is_err());
        assert!(Clue::new(abc, vec![None, Some(Symbol(3))]).is_err());
    }

    #[test]
    fn parse_reports_column() {
        assert_eq!(
            Clue::parse("1_x", &Alphabet::binary()),
            Err(Error::UnknownCharacter { ch: 'x', column: 2 })
        );
        assert_eq!(clue("1_0\n"), clue("1_0"));
    }

    fn cert_strategy() -> impl Strategy<Value = (Alphabet, Vec<u8>)> {
        (1usize..5).prop_flat_map(|k| {
            (
                Just(Alphabet::of_size(k).unwrap()),
                prop::collection::vec(0..k as u8, 0..16),
            )
        })
    }

    proptest! {
        #[test]
        fn projection_is_satisfied_and_sized(
            (alphabet, raw) in cert_strategy(),
            picks in prop::collection::btree_set(0usize..16, 0..16),
        ) {
            let x = CertificateString::new(alphabet, raw.into_iter().map(Symbol).collect()).unwrap();
            let positions: BTreeSet<usize> = picks.into_iter().filter(|&p| p < x.len()).collect();
            let c = project(&x, &positions).unwrap();
            prop_assert!(satisfies(&c, &x).unwrap());
            prop_assert_eq!(c.size(), positions.len());
        }

        #[test]
        fn blanking_preserves_satisfaction(
            (alphabet, raw) in cert_strategy(),
            picks in prop::collection::btree_set(0usize..16, 0..16),
            blank in 0usize..16,
        ) {
            let x = CertificateString::new(alphabet, raw.into_iter().map(Symbol).collect()).unwrap();
            prop_assume!(blank < x.len());
            let positions: BTreeSet<usize> = picks.into_iter().filter(|&p| p < x.len()).collect();
            let c = project(&x, &positions).unwrap();
            prop_assert!(satisfies(&c.blanked(blank).unwrap(), &x).unwrap());
        }

        #[test]
        fn clue_text_round_trips(
            (alphabet, raw) in cert_strategy(),
            mask in prop::collection::vec(any::<bool>(), 16),
        ) {
            let entries = raw
                .into_iter()
                .zip(mask)
                .map(|(s, keep)| keep.then_some(Symbol(s)))
                .collect();
            let c = Clue::new(alphabet.clone(), entries).unwrap();
            let text = c.to_string();
            let back = Clue::parse(&text, &alphabet).unwrap();
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(back, c);
        }
    }
}
