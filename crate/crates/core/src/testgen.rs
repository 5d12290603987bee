//! Seeded generators of unimodular, symplectic and involution instances.
//!
//! Randomness comes from xorshift64* (Vigna): the state is updated by
//! `x ^= x >> 12; x ^= x << 25; x ^= x >> 27` and each output is
//! `x · 0x2545F4914F6CDD1D mod 2⁶⁴`. The initial state is the SplitMix64
//! finalizer applied to `seed + 0x9E3779B97F4A7C15` (constants
//! `0xBF58476D1CE4E5B9`, `0x94D049BB133111EB`, shifts 30/27/31), replaced by
//! `0x9E3779B97F4A7C15` if it comes out zero. A value in `[0, n)` is
//! `output mod n`. Everything below is a deterministic function of these
//! outputs, so a corpus can be regenerated in any language.

use num_bigint::BigInt;

use crate::canonical::CanonicalForm;
use crate::error::{Error, Result};
use crate::matrix::{
    symplectic_conjugate, symplectic_rotation, symplectic_translation, IntMatrix, SymplecticForm,
    SymplecticInvolution,
};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(GOLDEN_GAMMA);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        XorShift64Star { state: if z == 0 { GOLDEN_GAMMA } else { z } }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform-ish in `[0, n)`; `n > 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Nonzero integer in `[−bound, bound]`.
    fn nonzero(&mut self, bound: u32) -> i64 {
        let magnitude = 1 + self.below(bound as u64) as i64;
        if self.below(2) == 0 {
            magnitude
        } else {
            -magnitude
        }
    }

    /// Ordered pair of distinct indices below `n ≥ 2`.
    fn distinct_pair(&mut self, n: usize) -> (usize, usize) {
        let i = self.below(n as u64) as usize;
        let j = (i + 1 + self.below(n as u64 - 1) as usize) % n;
        (i, j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    /// Number of elementary factors multiplied together.
    pub num_factors: usize,
    /// Largest absolute value of an elementary factor's entry; at least 1.
    pub entry_bound: u32,
}

impl GenConfig {
    pub fn new(seed: u64, num_factors: usize, entry_bound: u32) -> Result<Self> {
        if entry_bound == 0 {
            return Err(Error::InvalidInvolutionData("entry_bound must be at least 1".into()));
        }
        Ok(GenConfig { seed, num_factors, entry_bound })
    }

    pub fn with_seed(seed: u64) -> Self {
        GenConfig { seed, ..Self::default() }
    }
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { seed: 0, num_factors: 20, entry_bound: 3 }
    }
}

/// One elementary generator of `Sp(2g, Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymplecticFactor {
    /// `diag(U, U⁻ᵀ)`.
    Rotation(IntMatrix),
    /// `[[I, μ], [0, I]]`, `μ` symmetric.
    Translation(IntMatrix),
    /// The standard pairing `J`.
    Pairing,
}

impl SymplecticFactor {
    pub fn matrix(&self, g: usize) -> Result<IntMatrix> {
        match self {
            SymplecticFactor::Rotation(u) => symplectic_rotation(u),
            SymplecticFactor::Translation(mu) => symplectic_translation(mu),
            SymplecticFactor::Pairing => Ok(SymplecticForm::new(g).matrix().clone()),
        }
    }
}

// Transvection I + k·E_ij, or a sign flip of one coordinate.
fn elementary_unimodular(rng: &mut XorShift64Star, n: usize, bound: u32) -> IntMatrix {
    let mut e = IntMatrix::identity(n);
    if n == 1 || rng.below(4) == 0 {
        let i = rng.below(n as u64) as usize;
        e[(i, i)] = BigInt::from(-1);
    } else {
        let (i, j) = rng.distinct_pair(n);
        e[(i, j)] = BigInt::from(rng.nonzero(bound));
    }
    e
}

fn elementary_symmetric(rng: &mut XorShift64Star, g: usize, bound: u32) -> IntMatrix {
    let mut mu = IntMatrix::zeros(g, g);
    let i = rng.below(g as u64) as usize;
    let j = rng.below(g as u64) as usize;
    let k = BigInt::from(rng.nonzero(bound));
    mu[(i, j)] = k.clone();
    mu[(j, i)] = k;
    mu
}

/// Product of `cfg.num_factors` elementary unimodular factors.
pub fn random_unimodular(n: usize, cfg: &GenConfig) -> IntMatrix {
    let mut rng = XorShift64Star::new(cfg.seed);
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..cfg.num_factors {
        u = &u * &elementary_unimodular(&mut rng, n, cfg.entry_bound);
    }
    u
}

/// Product of `cfg.num_factors` factors drawn from rotations by elementary
/// `U`, translations by elementary symmetric `μ`, and `J`.
pub fn random_symplectic(g: usize, cfg: &GenConfig) -> IntMatrix {
    let mut rng = XorShift64Star::new(cfg.seed);
    let mut p = IntMatrix::identity(2 * g);
    if g == 0 {
        return p;
    }
    for _ in 0..cfg.num_factors {
        let factor = match rng.below(3) {
            0 => SymplecticFactor::Rotation(elementary_unimodular(&mut rng, g, cfg.entry_bound)),
            1 => SymplecticFactor::Translation(elementary_symmetric(&mut rng, g, cfg.entry_bound)),
            _ => SymplecticFactor::Pairing,
        };
        p = &p * &factor.matrix(g).expect("elementary factors are well formed");
    }
    p
}

/// `P·C(p, m, t)·P⁻¹` with `P = random_symplectic(g, cfg)`.
pub fn random_symplectic_involution(p: usize, m: usize, t: usize, cfg: &GenConfig) -> Result<SymplecticInvolution> {
    let canonical = CanonicalForm::new(p, m, t);
    let g = canonical.genus();
    if g == 0 {
        return Err(Error::InvalidInvolutionData("p + m + 2t must be at least 1".into()));
    }
    let conj = random_symplectic(g, cfg);
    SymplecticInvolution::new(symplectic_conjugate(&conj, &canonical.matrix))
}
