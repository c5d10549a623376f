//! Permutations of {1..n}, stored 0-based, multiplied right to left:
//! (a·b)(i) = a(b(i)), so (1,2)(2,3) = (1,2,3).

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::SymError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    /// From 0-based images; must be a bijection.
    pub fn from_images(images: Vec<u8>) -> Result<Self, SymError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(SymError::NotABijection);
            }
            seen[x as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Parse 1-based cycle notation like "(1,2)(3,4)"; whitespace-insensitive.
    /// `n` is the degree; "()" or "" is the identity.
    pub fn from_cycles(n: usize, s: &str) -> Result<Self, SymError> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut used = vec![false; n];
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = cleaned.as_str();
        while !rest.is_empty() {
            let Some(start) = rest.strip_prefix('(') else {
                return Err(SymError::BadCycleNotation);
            };
            let Some(end) = start.find(')') else {
                return Err(SymError::BadCycleNotation);
            };
            let body = &start[..end];
            rest = &start[end + 1..];
            if body.is_empty() {
                continue;
            }
            let mut pts = Vec::new();
            for tok in body.split(',') {
                let v: usize = tok.parse().map_err(|_| SymError::BadCycleNotation)?;
                if v == 0 || v > n || used[v - 1] {
                    return Err(SymError::BadCycleNotation);
                }
                used[v - 1] = true;
                pts.push(v - 1);
            }
            // Apply the cycle (p0, p1, ..., pk): p0 -> p1 -> ... -> p0.
            for w in 0..pts.len() {
                images[pts[w]] = pts[(w + 1) % pts.len()] as u8;
            }
        }
        Perm::from_images(images)
    }

    /// 1-based cycle notation; identity prints "()".
    pub fn to_cycles(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            loop {
                seen[x] = true;
                out.push_str(&format!("{}", x + 1));
                x = self.apply(x);
                if x == start {
                    break;
                }
                out.push(',');
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Right-to-left composition: (self·other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn pow(&self, mut k: i64) -> Perm {
        let mut base = if k < 0 {
            k = -k;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Perm::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut x = self.clone();
        while !x.is_identity() {
            x = self.compose(&x);
            k += 1;
        }
        k
    }

    /// Same mapping, extended by fixed points to a larger degree.
    pub fn extended(&self, n: usize) -> Perm {
        assert!(n >= self.degree());
        let mut images: Vec<u8> = self.images.clone();
        images.extend(self.degree() as u8..n as u8);
        Perm { images }
    }

    /// Cycle type as a weakly decreasing list of cycle lengths (fixed points
    /// included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl core::fmt::Debug for Perm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.to_cycles())
    }
}

impl core::fmt::Display for Perm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.to_cycles())
    }
}

/// Lexicographic rank of a permutation among all of its degree, by image
/// sequence (Lehmer code).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermRank {
    pub n: usize,
    pub rank: u64,
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn perm_rank(p: &Perm) -> PermRank {
    let n = p.degree();
    let mut rank = 0u64;
    // c_i = #{ j > i : img[j] < img[i] }
    for i in 0..n {
        let mut c = 0u64;
        for j in i + 1..n {
            if p.images()[j] < p.images()[i] {
                c += 1;
            }
        }
        rank += c * factorial(n - 1 - i);
    }
    PermRank { n, rank }
}

pub fn perm_unrank(n: usize, rank: u64) -> Result<Perm, SymError> {
    if rank >= factorial(n) {
        return Err(SymError::RankOutOfRange);
    }
    let mut avail: Vec<u8> = (0..n as u8).collect();
    let mut images = Vec::with_capacity(n);
    let mut r = rank;
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let k = (r / f) as usize;
        r %= f;
        images.push(avail.remove(k));
    }
    Ok(Perm { images })
}

/// Iterate all permutations of degree `n` in lexicographic (rank) order,
/// calling `f(rank, perm)`.  Streams without materializing n! permutations.
pub fn for_each_perm(n: usize, mut f: impl FnMut(u64, &Perm)) {
    let mut p = Perm::identity(n);
    let mut rank = 0u64;
    loop {
        f(rank, &p);
        // next_permutation on the image sequence
        let a = &mut p.images;
        let mut i = n.wrapping_sub(1);
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        rank += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_composition_convention() {
        // (1,2)(2,3) = (1,2,3)
        let a = Perm::from_cycles(3, "(1,2)").unwrap();
        let b = Perm::from_cycles(3, "(2,3)").unwrap();
        let c = Perm::from_cycles(3, "(1,2,3)").unwrap();
        assert_eq!(a.compose(&b), c);
    }

    #[test]
    fn identity_and_inverse_laws() {
        let p = Perm::from_cycles(5, "(1,3,5)(2,4)").unwrap();
        let id = Perm::identity(5);
        assert_eq!(id.compose(&p), p);
        assert_eq!(p.compose(&p.inverse()), id);
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn cycle_roundtrip() {
        for s in ["()", "(1,2)", "(1,2,3)(4,5)", "(2,7)(3,6,4)"] {
            let p = Perm::from_cycles(8, s).unwrap();
            let q = Perm::from_cycles(8, &p.to_cycles()).unwrap();
            assert_eq!(p, q);
        }
        assert!(Perm::from_cycles(3, "(1,4)").is_err());
        assert!(Perm::from_cycles(3, "(1,1)").is_err());
    }

    #[test]
    fn rank_identity_and_reverse() {
        for n in 1..8 {
            let id = Perm::identity(n);
            assert_eq!(perm_rank(&id).rank, 0);
            let rev = Perm::from_images((0..n as u8).rev().collect()).unwrap();
            assert_eq!(perm_rank(&rev).rank, factorial(n) - 1);
        }
    }

    #[test]
    fn rank_unrank_bijection_degree_4() {
        let mut seen = [false; 24];
        for_each_perm(4, |rank, p| {
            assert_eq!(perm_rank(p).rank, rank);
            assert_eq!(&perm_unrank(4, rank).unwrap(), p);
            assert!(!seen[rank as usize]);
            seen[rank as usize] = true;
        });
        assert!(seen.iter().all(|&x| x));
        assert!(perm_unrank(4, 24).is_err());
    }

    #[test]
    fn cycle_type_and_extension() {
        let p = Perm::from_cycles(6, "(1,2,3)(4,5)").unwrap();
        assert_eq!(p.cycle_type(), alloc::vec![3, 2, 1]);
        let q = p.extended(8);
        assert_eq!(q.cycle_type(), alloc::vec![3, 2, 1, 1, 1]);
    }
}
