//! Boundary 0/1 sequences and the two decompositions built on them.
//!
//! The boundary of a Young diagram, traced from bottom-left to top-right,
//! gives a bi-infinite word with an up step written as `0` and a right step
//! as `1`. Position `i` carries a `0` exactly when `i = λ_j − j` for some
//! `j ≥ 1`, so the word has an all-zero left tail and an all-one right tail.
//! A marker sits between positions `−1` and `0`; for the word of a partition
//! the number of ones strictly left of the marker equals the number of zeros
//! at or right of it.
//!
//! `phi` splits the word into `r` congruence classes of positions, decodes
//! each class as a quotient partition, and sorts each class (zeros pushed
//! left, as beads on an abacus) to read off the `r`-core. `psi` instead acts
//! on the parts directly: `λ_i = μ_i + r·ν_i` with `μ` the pointwise
//! remainder profile (an `r`-kernel) and `ν` the cofactor.

use serde::Serialize;
use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LittlewoodError {
    #[error("marker is unbalanced: {ones_left} ones left vs {zeros_right} zeros right")]
    UnbalancedMarker { ones_left: u64, zeros_right: u64 },
    #[error("{0} is not a {1}-core")]
    NotAnRCore(Partition, u32),
    #[error("{0} is not a {1}-kernel")]
    NotAnRKernel(Partition, u32),
    #[error("quotient has {got} entries, expected {want}")]
    WrongQuotientArity { got: usize, want: usize },
}

/// A finite window of the bi-infinite 0/1 boundary word.
///
/// `bits[k]` is the step at absolute position `k − marker` (`true` = right
/// step = 1, `false` = up step = 0); positions left of the window are up
/// steps and positions right of it are right steps. The canonical window
/// starts at the first 1 and ends at the last 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSequence {
    bits: Vec<bool>,
    marker: i64,
}

impl EdgeSequence {
    pub fn new(bits: Vec<bool>, marker: i64) -> Self {
        EdgeSequence { bits, marker }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn marker(&self) -> i64 {
        self.marker
    }

    /// Step at an absolute position, with the implied padding.
    pub fn bit_at(&self, pos: i64) -> bool {
        let k = pos + self.marker;
        if k < 0 {
            false
        } else if k >= self.bits.len() as i64 {
            true
        } else {
            self.bits[k as usize]
        }
    }

    fn window(&self) -> std::ops::Range<i64> {
        -self.marker..self.bits.len() as i64 - self.marker
    }

    /// Drop redundant leading zeros and trailing ones; the encoded word is
    /// unchanged. An all-padding word keeps its marker, which then records
    /// where the 0/1 transition sits.
    pub fn canonicalize(mut self) -> EdgeSequence {
        while let Some(&false) = self.bits.first() {
            self.bits.remove(0);
            self.marker -= 1;
        }
        while let Some(&true) = self.bits.last() {
            self.bits.pop();
        }
        self
    }

    /// `#1s left of the marker − #0s at or right of it` (zero for the word
    /// of a partition with the marker in place). Padding steps between the
    /// window and the marker are counted too.
    pub fn charge(&self) -> i64 {
        let len = self.bits.len() as i64;
        // implied right-tail ones at negative positions / left-tail zeros at
        // nonnegative positions
        let mut c = (self.marker - len).max(0) - (-self.marker).max(0);
        for (k, &b) in self.bits.iter().enumerate() {
            let pos = k as i64 - self.marker;
            if pos < 0 && b {
                c += 1;
            }
            if pos >= 0 && !b {
                c -= 1;
            }
        }
        c
    }
}

impl std::fmt::Display for EdgeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for pos in self.window() {
            if pos == 0 {
                write!(f, "|")?;
            }
            write!(f, "{}", if self.bit_at(pos) { '1' } else { '0' })?;
        }
        if self.window().is_empty() || self.window().end <= 0 {
            write!(f, "|")?;
        }
        Ok(())
    }
}

/// Canonical boundary word of a partition: zeros at positions `λ_j − j`.
pub fn edge_sequence(lambda: &Partition) -> EdgeSequence {
    let ell = lambda.length() as i64;
    if ell == 0 {
        return EdgeSequence::new(Vec::new(), 0);
    }
    let first_one = -ell;
    let last_zero = i64::from(lambda.part(1)) - 1;
    let len = (last_zero - first_one + 1) as usize;
    let mut bits = vec![true; len];
    for j in 1..=lambda.length() {
        let pos = i64::from(lambda.part(j)) - j as i64;
        bits[(pos - first_one) as usize] = false;
    }
    EdgeSequence::new(bits, ell)
}

/// Decode a word back into a partition. The marker must balance ones on the
/// left against zeros on the right.
pub fn edge_to_partition(e: &EdgeSequence) -> Result<Partition, LittlewoodError> {
    let len = e.bits.len() as i64;
    let mut ones_left = (e.marker - len).max(0) as u64;
    let mut zeros_right = (-e.marker).max(0) as u64;
    for pos in e.window() {
        if pos < 0 && e.bit_at(pos) {
            ones_left += 1;
        }
        if pos >= 0 && !e.bit_at(pos) {
            zeros_right += 1;
        }
    }
    if ones_left != zeros_right {
        return Err(LittlewoodError::UnbalancedMarker { ones_left, zeros_right });
    }
    Ok(decode_rebalanced(e))
}

/// Decode ignoring the marker: shift to the balance point first.
fn decode_rebalanced(e: &EdgeSequence) -> Partition {
    let shift = e.charge();
    let mut parts = Vec::new();
    let mut j = 1i64;
    for pos in e.window().rev() {
        if !e.bit_at(pos) {
            // absolute position relative to the balanced marker
            let p = pos + shift;
            let part = p + j;
            if part <= 0 {
                break;
            }
            parts.push(part as u32);
            j += 1;
        }
    }
    Partition::new(parts.into_iter().map(|p| p).collect()).expect("decoded parts are sorted")
}

/// Littlewood pair: an `r`-core together with the `r` quotient partitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    /// `Σ |ν^{(i)}|`.
    pub fn quotient_size(&self) -> u64 {
        self.quotient.iter().map(|p| p.size()).sum()
    }
}

/// Kernel pair: an `r`-kernel together with the cofactor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelPair {
    pub kernel: Partition,
    pub cofactor: Partition,
}

/// Core/quotient decomposition of `λ` for modulus `r`.
///
/// Class `i` collects the word positions congruent to `i` mod `r`, with the
/// class marker inherited from the original word. The decoded classes are
/// the quotient; sorting every class and reassembling gives the core.
pub fn phi(lambda: &Partition, r: u32) -> CoreQuotient {
    assert!(r >= 1, "modulus must be positive");
    let r = i64::from(r);
    let e = edge_sequence(lambda);
    let lo = e.window().start;
    let hi = e.window().end;

    let mut quotient = Vec::with_capacity(r as usize);
    let mut charges = Vec::with_capacity(r as usize);
    for i in 0..r {
        // class window in the subsequence index j, covering the main window
        let j_lo = (lo - i).div_euclid(r) - 1;
        let j_hi = (hi - i).div_euclid(r) + 1;
        let bits: Vec<bool> = (j_lo..=j_hi).map(|j| e.bit_at(i + r * j)).collect();
        let class = EdgeSequence::new(bits, -j_lo).canonicalize();
        charges.push(class.charge());
        quotient.push(decode_rebalanced(&class));
    }

    // sorted class i has zeros at j < -d_i and ones from -d_i on
    let span = charges.iter().map(|d| d.abs()).max().unwrap_or(0) + 2;
    let mut bits = Vec::new();
    for pos in -span * r..span * r {
        let i = pos.rem_euclid(r);
        let j = (pos - i).div_euclid(r);
        bits.push(j >= -charges[i as usize]);
    }
    let core_seq = EdgeSequence::new(bits, span * r).canonicalize();
    let core = edge_to_partition(&core_seq).expect("reassembled word is balanced");
    CoreQuotient { core, quotient }
}

/// Inverse of [`phi`]: rebuild `λ` from an `r`-core and `r` quotient
/// partitions.
pub fn phi_inverse(cq: &CoreQuotient, r: u32) -> Result<Partition, LittlewoodError> {
    assert!(r >= 1, "modulus must be positive");
    if !cq.core.is_r_core(r) {
        return Err(LittlewoodError::NotAnRCore(cq.core.clone(), r));
    }
    if cq.quotient.len() != r as usize {
        return Err(LittlewoodError::WrongQuotientArity {
            got: cq.quotient.len(),
            want: r as usize,
        });
    }
    let r = i64::from(r);
    let core_seq = edge_sequence(&cq.core);
    let mut charges = Vec::with_capacity(r as usize);
    for i in 0..r {
        let lo = core_seq.window().start;
        let hi = core_seq.window().end;
        let j_lo = (lo - i).div_euclid(r) - 1;
        let j_hi = (hi - i).div_euclid(r) + 1;
        let bits: Vec<bool> = (j_lo..=j_hi).map(|j| core_seq.bit_at(i + r * j)).collect();
        charges.push(EdgeSequence::new(bits, -j_lo).charge());
    }

    let quot_seqs: Vec<EdgeSequence> = cq.quotient.iter().map(edge_sequence).collect();
    let reach = quot_seqs
        .iter()
        .map(|q| q.bits().len() as i64)
        .chain(charges.iter().map(|d| d.abs()))
        .max()
        .unwrap_or(0)
        + 2;
    let mut bits = Vec::new();
    for pos in -reach * r..reach * r {
        let i = pos.rem_euclid(r);
        let j = (pos - i).div_euclid(r);
        // class i is the quotient word shifted so its balance point carries
        // the class charge
        bits.push(quot_seqs[i as usize].bit_at(j + charges[i as usize]));
    }
    let seq = EdgeSequence::new(bits, reach * r).canonicalize();
    edge_to_partition(&seq)
}

/// The `r`-core of `λ`.
pub fn r_core(lambda: &Partition, r: u32) -> Partition {
    phi(lambda, r).core
}

/// Kernel/cofactor decomposition: `μ_i = r·Σ_{j≥i} frac((λ_j−λ_{j+1})/r)` and
/// `ν_i = Σ_{j≥i} ⌊(λ_j−λ_{j+1})/r⌋`, so that `λ_i = μ_i + r·ν_i`.
pub fn psi(lambda: &Partition, r: u32) -> KernelPair {
    assert!(r >= 1, "modulus must be positive");
    let ell = lambda.length();
    let mut kernel = Vec::with_capacity(ell);
    let mut cofactor = Vec::with_capacity(ell);
    let mut nu_suffix = 0u32;
    for i in (1..=ell).rev() {
        let diff = lambda.part(i) - lambda.part(i + 1);
        nu_suffix += diff / r;
        let mu_i = lambda.part(i) - r * nu_suffix;
        kernel.push(mu_i);
        cofactor.push(nu_suffix);
    }
    kernel.reverse();
    cofactor.reverse();
    kernel.retain(|&p| p > 0);
    cofactor.retain(|&p| p > 0);
    KernelPair {
        kernel: Partition::new(kernel).expect("remainder profile is a partition"),
        cofactor: Partition::new(cofactor).expect("floor sums are a partition"),
    }
}

/// Inverse of [`psi`]: `λ_i = μ_i + r·ν_i`.
pub fn psi_inverse(kp: &KernelPair, r: u32) -> Result<Partition, LittlewoodError> {
    assert!(r >= 1, "modulus must be positive");
    if !kp.kernel.is_r_kernel(r) {
        return Err(LittlewoodError::NotAnRKernel(kp.kernel.clone(), r));
    }
    let len = kp.kernel.length().max(kp.cofactor.length());
    let mut parts = Vec::with_capacity(len);
    for i in 1..=len {
        parts.push(kp.kernel.part(i) + r * kp.cofactor.part(i));
    }
    parts.retain(|&p| p > 0);
    Ok(Partition::new(parts).expect("kernel plus scaled cofactor is sorted"))
}
