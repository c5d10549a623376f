//! Distinguished p-subgroups of symmetric groups: the standard Sylow
//! subgroups P_n built from iterated wreath towers, the regular elementary
//! abelian subgroups E_{p^d}, their normalizers, and block-diagonal wreath
//! embeddings.

use alloc::vec;
use alloc::vec::Vec;

use super::group::PGroup;
use super::perm::Perm;
use super::SymError;

/// The generator of the wreath tower at level j (1-based) inside S_{p^j}:
/// the product of cycles (k, k+p^{j-1}, ..., k+(p-1)p^{j-1}) over
/// k = 1..p^{j-1}, shifted by `offset` points.
fn tower_generator(p: usize, j: usize, offset: usize, degree: usize) -> Perm {
    let step = p.pow(j as u32 - 1) as usize;
    let mut images: Vec<u8> = (0..degree as u8).collect();
    for k in 0..step {
        for i in 0..p {
            let from = offset + k + i * step;
            let to = offset + k + ((i + 1) % p) * step;
            images[from] = to as u8;
        }
    }
    Perm::from_images(images).expect("tower generator")
}

/// Generators of the standard Sylow p-subgroup of S_n.
pub fn sylow_generators(p: u8, n: usize) -> Vec<Perm> {
    let p = p as usize;
    // For n not divisible by p, P_n := P_m for the largest multiple m < n.
    let m = n - n % p;
    let mut gens = Vec::new();
    if m == 0 {
        return gens;
    }
    // p-adic expansion of m, largest exponent first; the p^0 digit is zero.
    let mut digits: Vec<(u32, usize)> = Vec::new(); // (exponent, digit)
    let mut rest = m;
    let mut e = 0u32;
    while rest > 0 {
        let d = rest % p;
        if d > 0 && e >= 1 {
            digits.push((e, d));
        }
        rest /= p;
        e += 1;
    }
    digits.sort_by(|a, b| b.0.cmp(&a.0));
    let mut offset = 0usize;
    for (exp, mult) in digits {
        for _ in 0..mult {
            for j in 1..=exp {
                gens.push(tower_generator(p, j as usize, offset, n));
            }
            offset += p.pow(exp);
        }
    }
    gens
}

/// The standard Sylow p-subgroup P_n of S_n, with its full element list.
pub fn sylow_p_subgroup(p: u8, n: usize) -> Result<PGroup, SymError> {
    PGroup::generate(n, sylow_generators(p, n))
}

/// p-part of n! (Legendre).
pub fn p_part_of_factorial(p: u8, n: usize) -> u64 {
    let mut nu = 0u32;
    let mut q = p as usize;
    while q <= n {
        nu += (n / q) as u32;
        q *= p as usize;
    }
    (p as u64).pow(nu)
}

/// Generators of E_{p^d}: translations of F_p^d acting on the p^d points,
/// point i ↔ the base-p digit vector of i.
pub fn regular_elementary_generators(p: u8, d: usize) -> Vec<Perm> {
    let p = p as usize;
    let n = p.pow(d as u32);
    (0..d)
        .map(|axis| {
            let step = p.pow(axis as u32);
            let images: Vec<u8> = (0..n)
                .map(|x| {
                    let digit = (x / step) % p;
                    let bumped = (digit + 1) % p;
                    (x - digit * step + bumped * step) as u8
                })
                .collect();
            Perm::from_images(images).expect("translation")
        })
        .collect()
}

/// The regular elementary abelian subgroup E_{p^d} ≤ S_{p^d}.
pub fn regular_elementary(p: u8, d: usize) -> Result<PGroup, SymError> {
    assert!(d >= 1);
    let n = (p as usize).pow(d as u32);
    PGroup::generate(n, regular_elementary_generators(p, d))
}

/// N_{S_{p^d}}(E_{p^d}) ≅ E_{p^d} ⋊ GL_d(p), from explicit affine
/// generators: the translations plus linear maps on digit vectors.
pub fn elementary_normalizer(p: u8, d: usize) -> Result<PGroup, SymError> {
    let pu = p as usize;
    let n = pu.pow(d as u32);
    let mut gens = regular_elementary_generators(p, d);

    let digit = |x: usize, i: usize| (x / pu.pow(i as u32)) % pu;
    let from_digits = |v: &[usize]| -> usize {
        v.iter().enumerate().map(|(i, &c)| c * pu.pow(i as u32)).sum()
    };
    let mut push_linear = |f: &dyn Fn(&[usize]) -> Vec<usize>| {
        let images: Vec<u8> = (0..n)
            .map(|x| {
                let v: Vec<usize> = (0..d).map(|i| digit(x, i)).collect();
                from_digits(&f(&v)) as u8
            })
            .collect();
        gens.push(Perm::from_images(images).expect("linear map"));
    };

    if d >= 2 {
        // Transvection e_0 ↦ e_0 + e_1 slot-wise: v_0' = v_0 + v_1.
        push_linear(&|v: &[usize]| {
            let mut w = v.to_vec();
            w[0] = (v[0] + v[1]) % pu;
            w
        });
        // Coordinate d-cycle.
        push_linear(&|v: &[usize]| {
            let mut w = v.to_vec();
            w.rotate_left(1);
            w
        });
    }
    if p > 2 {
        // Scalar multiplication by a primitive root (2 works for p=3,5,7...
        // checked: 2 is primitive mod 3, 5; 3 is primitive mod 7).
        let root = if p == 7 { 3usize } else { 2usize };
        push_linear(&|v: &[usize]| v.iter().map(|&c| c * root % pu).collect());
    }
    PGroup::generate(n, gens)
}

/// Order of GL_d(p).
pub fn gl_order(p: u8, d: usize) -> u64 {
    let q = p as u64;
    let qd = q.pow(d as u32);
    (0..d as u32).map(|i| qd - q.pow(i)).product()
}

/// The block embedding σ ↦ σ^♯ of S_{p^d} (or any degree-m permutation)
/// into S_{k·m}: m blocks of size k are permuted as σ permutes points.
pub fn sharp_map(k: usize, sigma: &Perm) -> Perm {
    let m = sigma.degree();
    let images: Vec<u8> = (0..k * m)
        .map(|pt| {
            let (block, slot) = (pt / k, pt % k);
            (sigma.apply(block) * k + slot) as u8
        })
        .collect();
    Perm::from_images(images).expect("sharp")
}

/// Generators of the wreath subgroup S_k ≀ S_{p^d} ≤ S_{k·p^d}: the
/// symmetric group on the first block plus the sharp images of the top
/// group's generators.
pub fn wreath_embedding(k: usize, p: u8, d: usize) -> (Vec<Perm>, Vec<Perm>) {
    let m = (p as usize).pow(d as u32);
    let deg = k * m;
    let mut gens = Vec::new();
    if k >= 2 {
        // (1,2) and (1,...,k) inside the first block.
        let mut tr: Vec<u8> = (0..deg as u8).collect();
        tr.swap(0, 1);
        gens.push(Perm::from_images(tr).unwrap());
        let mut cy: Vec<u8> = (0..deg as u8).collect();
        for i in 0..k {
            cy[i] = ((i + 1) % k) as u8;
        }
        gens.push(Perm::from_images(cy).unwrap());
    }
    let top: Vec<Perm> = if m >= 2 {
        let mut t = vec![Perm::from_cycles(m, "(1,2)").unwrap()];
        if m > 2 {
            let cyc: Vec<u8> = (0..m).map(|i| ((i + 1) % m) as u8).collect();
            t.push(Perm::from_images(cyc).unwrap());
        }
        t
    } else {
        Vec::new()
    };
    let sharped: Vec<Perm> = top.iter().map(|s| sharp_map(k, s)).collect();
    gens.extend(sharped.clone());
    (gens, sharped)
}
