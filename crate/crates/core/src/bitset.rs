/// Fixed-width bitset over `[0, len)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bitset {
    words: Vec<u64>,
    len: usize,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[cfg(test)]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    /// `self |= src << shift`, where a negative shift moves bits toward zero.
    /// Bits shifted outside `[0, len)` are dropped.
    pub fn or_shifted(&mut self, src: &Bitset, shift: i64) {
        debug_assert_eq!(self.len, src.len);
        let n = self.words.len();
        let mag = shift.unsigned_abs();
        if mag >= self.len as u64 {
            return;
        }
        let ws = (mag / 64) as usize;
        let bit = (mag % 64) as u32;
        if shift >= 0 {
            for i in 0..n - ws {
                let w = src.words[i];
                if w == 0 {
                    continue;
                }
                self.words[i + ws] |= w << bit;
                if bit > 0 && i + ws + 1 < n {
                    self.words[i + ws + 1] |= w >> (64 - bit);
                }
            }
        } else {
            for i in ws..n {
                let w = src.words[i];
                if w == 0 {
                    continue;
                }
                self.words[i - ws] |= w >> bit;
                if bit > 0 && i > ws {
                    self.words[i - ws - 1] |= w << (64 - bit);
                }
            }
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    #[cfg(test)]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn or_shifted_matches_bitwise(
            len in 1usize..300,
            bits in proptest::collection::vec(0usize..300, 0..40),
            shift in -320i64..320,
        ) {
            let mut src = Bitset::new(len);
            for &b in bits.iter().filter(|&&b| b < len) {
                src.set(b);
            }
            let mut dst = Bitset::new(len);
            dst.or_shifted(&src, shift);
            for i in 0..len {
                let from = i as i64 - shift;
                let expect = from >= 0 && (from as usize) < len && src.get(from as usize);
                prop_assert_eq!(dst.get(i), expect, "bit {}", i);
            }
            prop_assert_eq!(dst.ones().count(), dst.count_ones());
        }
    }
}
