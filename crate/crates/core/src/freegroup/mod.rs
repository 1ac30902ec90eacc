//! Free-group words, Fox free differential calculus, and certification of
//! derived-series depth through the free solvable quotients F/F^(k).

pub mod fox;
pub mod magnus;
pub mod word;

pub use fox::{fox_derivative, GroupRing};
pub use magnus::{derived_depth, DepthReport, MAX_DEPTH_LEVEL};
pub use word::Word;

use crate::error::{Error, Result};

/// The commutator word of the iterated Bing pattern on 2^n generators:
/// w_1 = [x1, x2]; w_(k+1) substitutes for each generator the commutator of
/// the two generators doubling it, so w_n lies in F^(n).
pub fn bing_pattern_word(n: u32) -> Result<Word> {
    if !(1..=4).contains(&n) {
        return Err(Error::Capability(format!(
            "bing_pattern_word supports 1 <= n <= 4, got {}",
            n
        )));
    }
    let mut w = Word::commutator(&Word::generator(0), &Word::generator(1));
    for _ in 1..n {
        w = w.substitute(&|g| {
            Word::commutator(&Word::generator(2 * g), &Word::generator(2 * g + 1))
        });
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bing_words() {
        let w1 = bing_pattern_word(1).unwrap();
        assert_eq!(w1, Word::parse("[x1,x2]").unwrap());
        let w2 = bing_pattern_word(2).unwrap();
        assert_eq!(w2, Word::parse("[[x1,x2],[x3,x4]]").unwrap());
        assert_eq!(w2.len(), 16);
        assert_eq!(bing_pattern_word(3).unwrap().len(), 64);
        assert!(bing_pattern_word(0).is_err());
        assert!(bing_pattern_word(5).is_err());
    }

    #[test]
    fn bing_word_generator_count() {
        for n in 1..=3 {
            let w = bing_pattern_word(n).unwrap();
            let max_gen = w.letters().iter().map(|&(g, _)| g).max().unwrap();
            assert_eq!(max_gen as u64 + 1, 1u64 << n);
        }
    }
}
