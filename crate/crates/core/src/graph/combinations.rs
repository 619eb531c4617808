use super::bits;

/// `k`-subsets of the set bits of `base`, as masks, in lexicographic order
/// of their sorted member lists.
#[derive(Clone, Debug)]
pub struct Combinations {
    members: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(base: u64, k: usize) -> Self {
        let members: Vec<usize> = bits(base).collect();
        let done = k > members.len();
        Combinations {
            members,
            idx: (0..k).collect(),
            done,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().fold(0u64, |m, &i| m | 1 << self.members[i]);
        let k = self.idx.len();
        let len = self.members.len();
        // advance to the next index tuple
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < len - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_pairs() {
        let got: Vec<u64> = Combinations::new(0b1111, 2).collect();
        assert_eq!(got, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
    }

    #[test]
    fn edge_cases() {
        assert_eq!(Combinations::new(0b111, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(Combinations::new(0b11, 3).count(), 0);
        assert_eq!(Combinations::new(0b1010_1010, 4).count(), 1);
        assert_eq!(Combinations::new(u64::MAX >> 44, 3).count(), 1140);
    }
}
