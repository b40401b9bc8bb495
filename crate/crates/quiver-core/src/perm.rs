/// A permutation of `{0, ..., n-1}`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Builds from the image array (0-based); panics if not a bijection.
    pub fn new(image: Vec<usize>) -> Self {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            assert!(v < n && !seen[v], "not a bijection on 0..{n}");
            seen[v] = true;
        }
        Permutation { image }
    }

    /// Builds from a 1-based image array as printed in user-facing formats.
    pub fn from_one_based(image: &[usize]) -> Self {
        Self::new(image.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// The cyclic shift `i -> i+1 (mod n)`.
    pub fn cyclic(n: usize) -> Self {
        Permutation {
            image: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: (0..self.len()).map(|i| self.image(other.image(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }
}
