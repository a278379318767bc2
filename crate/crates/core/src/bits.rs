//! Fixed-width dense bit rows used by the sumset kernel and the searches.
//!
//! A row represents a set of bit indices in `[0, nbits)`. Bits shifted past
//! the capacity are dropped; callers size rows so that every index they
//! later query lies strictly below the capacity.

const BITS: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
    nbits: usize,
}

impl BitRow {
    pub fn zeros(nbits: usize) -> Self {
        BitRow {
            words: vec![0; nbits.div_ceil(BITS)],
            nbits,
        }
    }

    pub fn nbits(&self) -> usize {
        self.nbits
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / BITS] |= 1u64 << (i % BITS);
    }

    pub fn get(&self, i: usize) -> bool {
        if i >= self.nbits {
            return false;
        }
        (self.words[i / BITS] >> (i % BITS)) & 1 != 0
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    /// `self |= src << shift`, truncated at this row's capacity.
    pub fn or_shifted(&mut self, src: &BitRow, shift: usize) {
        if shift >= self.nbits {
            return;
        }
        let wshift = shift / BITS;
        let bshift = shift % BITS;
        let n = self.words.len();
        if bshift == 0 {
            for (i, &w) in src.words.iter().enumerate() {
                let d = i + wshift;
                if d >= n {
                    break;
                }
                self.words[d] |= w;
            }
        } else {
            for (i, &w) in src.words.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                let d = i + wshift;
                if d < n {
                    self.words[d] |= w << bshift;
                }
                if d + 1 < n {
                    self.words[d + 1] |= w >> (BITS - bshift);
                }
            }
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let rem = self.nbits % BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Index of the first clear bit at or after `start`, if any.
    pub fn first_zero_from(&self, start: usize) -> Option<usize> {
        if start >= self.nbits {
            return None;
        }
        let mut wi = start / BITS;
        let mut w = !self.words[wi] & (!0u64 << (start % BITS));
        loop {
            if w != 0 {
                let i = wi * BITS + w.trailing_zeros() as usize;
                return if i < self.nbits { Some(i) } else { None };
            }
            wi += 1;
            if wi == self.words.len() {
                return None;
            }
            w = !self.words[wi];
        }
    }

    /// Maximal runs of set bits, as inclusive `(start, end)` index pairs.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut open: Option<usize> = None;
        for (wi, &w) in self.words.iter().enumerate() {
            let base = wi * BITS;
            if w == 0 {
                if let Some(start) = open.take() {
                    out.push((start, base - 1));
                }
                continue;
            }
            if w == !0u64 {
                if open.is_none() {
                    open = Some(base);
                }
                continue;
            }
            let mut pos = 0;
            while pos < BITS {
                let rest = w >> pos;
                match open {
                    None => {
                        if rest == 0 {
                            break;
                        }
                        let tz = rest.trailing_zeros() as usize;
                        open = Some(base + pos + tz);
                        pos += tz;
                    }
                    Some(start) => {
                        let ones = rest.trailing_ones() as usize;
                        if pos + ones >= BITS {
                            // run continues into the next word
                            break;
                        }
                        out.push((start, base + pos + ones - 1));
                        open = None;
                        pos += ones;
                    }
                }
            }
        }
        if let Some(start) = open {
            out.push((start, self.nbits - 1));
        }
        out
    }

    /// Call `f` with each set bit index, ascending.
    pub fn for_each_one(&self, mut f: impl FnMut(usize)) {
        for (wi, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                f(wi * BITS + b);
                w &= w - 1;
            }
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}
