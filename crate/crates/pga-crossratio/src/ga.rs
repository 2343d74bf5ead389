//! Core algebra of ℝ_{n,0,1}: basis-blade arithmetic and the product family.
//!
//! The algebra has n+1 generators e_0, e_1, …, e_n with e_i² = 1 for i ≥ 1
//! and e_0² = 0. Basis blades are bitmasks over the generators (bit i set ⇔
//! e_i is a factor), with canonical factor order ascending by index, so the
//! degeneracy test for a product is a single bit test on both operands.
//!
//! Multivectors are sparse maps from blade mask to coefficient. n is a
//! runtime parameter; cross-ratio inputs are sparse blades, so a dense
//! 2^(n+1) layout would waste memory for larger n. Terms whose coefficient
//! is exactly 0.0 are dropped; there is no epsilon pruning at this level —
//! tolerances belong to the object and configuration layers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Descriptor of ℝ_{n,0,1}: n Euclidean generators plus the null generator e_0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    n: usize,
}

impl Signature {
    /// Largest supported Euclidean dimension. Blade masks are `u32` and the
    /// per-signature dual sign table is 2^(n+1) entries, so 16 is plenty.
    pub const MAX_DIM: usize = 16;

    pub fn new(n: usize) -> Signature {
        assert!(
            (1..=Self::MAX_DIM).contains(&n),
            "Euclidean dimension must be in 1..={}, got {n}",
            Self::MAX_DIM
        );
        Signature { n }
    }

    /// Euclidean dimension n.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of generators, n+1 (index 0 is the null generator).
    pub fn generators(&self) -> usize {
        self.n + 1
    }

    /// Maximum grade, n+1.
    pub fn max_grade(&self) -> usize {
        self.n + 1
    }

    /// Diagonal metric: e_i·e_i = 1 for 1 ≤ i ≤ n, e_0·e_0 = 0, off-diagonal 0.
    pub fn metric(&self, i: usize, j: usize) -> f64 {
        if i == j && i >= 1 && i <= self.n {
            1.0
        } else {
            0.0
        }
    }

    /// Bitmask of the full pseudoscalar e_{01…n}.
    pub fn full_mask(&self) -> u32 {
        ((1u64 << (self.n + 1)) - 1) as u32
    }

    /// Bitmask of the Euclidean pseudoscalar e_{1…n}.
    pub fn euclidean_mask(&self) -> u32 {
        self.full_mask() & !1
    }

    pub fn valid_mask(&self, mask: u32) -> bool {
        mask & !self.full_mask() == 0
    }

    /// All basis blades of the algebra in ascending mask order.
    pub fn blades(&self) -> impl Iterator<Item = BladeIndex> {
        (0..=self.full_mask()).map(BladeIndex)
    }
}

/// A basis blade as a bitmask over generators 0…n; bit i set ⇔ e_i is a factor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BladeIndex(pub u32);

impl BladeIndex {
    /// The scalar blade 1 (empty mask).
    pub const SCALAR: BladeIndex = BladeIndex(0);

    pub fn from_indices(indices: &[usize]) -> BladeIndex {
        let mut bits = 0u32;
        for &i in indices {
            assert!(i < 32, "generator index out of range: {i}");
            assert!(bits & (1 << i) == 0, "repeated generator index: {i}");
            bits |= 1 << i;
        }
        BladeIndex(bits)
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, generator: usize) -> bool {
        self.0 >> generator & 1 == 1
    }

    /// Whether e_0 is a factor.
    pub fn has_e0(&self) -> bool {
        self.0 & 1 == 1
    }

    pub fn complement(&self, sig: Signature) -> BladeIndex {
        BladeIndex(sig.full_mask() & !self.0)
    }

    /// Ascending generator indices of the factors.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// Blade name: "e" followed by the ascending factor indices, one character
    /// each, with letters continuing past 9 ("ea" = e_10). The scalar blade is
    /// the bare "e".
    pub fn name(&self) -> String {
        let mut s = String::from("e");
        for i in self.indices() {
            s.push(index_char(i));
        }
        s
    }

    /// Parse a blade name as produced by [`BladeIndex::name`]. Indices must be
    /// strictly ascending and at most `sig.dim()`.
    pub fn parse(name: &str, sig: Signature) -> Result<BladeIndex, BladeNameError> {
        let body = name
            .strip_prefix('e')
            .ok_or_else(|| BladeNameError::new(name, "must start with 'e'"))?;
        let mut bits = 0u32;
        let mut last: Option<usize> = None;
        for c in body.chars() {
            let idx = char_index(c)
                .ok_or_else(|| BladeNameError::new(name, format!("bad index character '{c}'")))?;
            if let Some(prev) = last {
                if idx <= prev {
                    return Err(BladeNameError::new(name, "indices must be strictly ascending"));
                }
            }
            if idx > sig.dim() {
                return Err(BladeNameError::new(
                    name,
                    format!("index {idx} exceeds maximum {}", sig.dim()),
                ));
            }
            bits |= 1 << idx;
            last = Some(idx);
        }
        Ok(BladeIndex(bits))
    }
}

fn index_char(i: usize) -> char {
    if i < 10 {
        (b'0' + i as u8) as char
    } else {
        (b'a' + (i - 10) as u8) as char
    }
}

fn char_index(c: char) -> Option<usize> {
    match c {
        '0'..='9' => Some(c as usize - '0' as usize),
        'a'..='z' => Some(10 + c as usize - 'a' as usize),
        _ => None,
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Malformed blade name.
#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
#[error("invalid blade name {name:?}: {reason}")]
pub struct BladeNameError {
    pub name: String,
    pub reason: String,
}

impl BladeNameError {
    fn new(name: &str, reason: impl Into<String>) -> Self {
        BladeNameError { name: name.to_string(), reason: reason.into() }
    }
}

/// Parity of the transpositions needed to interleave two ascending factor
/// lists given as masks: counts pairs (i ∈ a, j ∈ b) with i > j.
pub(crate) fn reorder_sign(a: u32, b: u32) -> i32 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two basis blades under the degenerate metric.
///
/// Returns sign 0 exactly when both operands contain e_0 (e_0² = 0);
/// otherwise the result blade is the symmetric difference of the factor sets
/// and the sign is the transposition parity of the interleave.
pub fn blade_geometric_product(j: BladeIndex, k: BladeIndex, sig: Signature) -> (i32, BladeIndex) {
    debug_assert!(sig.valid_mask(j.0) && sig.valid_mask(k.0));
    if j.0 & k.0 & 1 != 0 {
        return (0, BladeIndex::SCALAR);
    }
    (reorder_sign(j.0, k.0), BladeIndex(j.0 ^ k.0))
}

/// Wedge of two basis blades: zero on any shared factor, metric-free
/// otherwise. e_0 wedges like any other generator.
pub fn blade_wedge(j: BladeIndex, k: BladeIndex) -> (i32, BladeIndex) {
    if j.0 & k.0 != 0 {
        return (0, BladeIndex::SCALAR);
    }
    (reorder_sign(j.0, k.0), BladeIndex(j.0 | k.0))
}

fn reverse_sign(grade: usize) -> f64 {
    if (grade * grade.wrapping_sub(1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn involution_sign(grade: usize) -> f64 {
    if grade % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// A sparse multivector over a fixed [`Signature`].
///
/// Immutable value type: every operation returns a new multivector. Binary
/// operations panic if the signatures differ; mixing algebras is a
/// programming error, not a runtime condition.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<BladeIndex, f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Multivector {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, value: f64) -> Multivector {
        Multivector::from_terms(sig, [(BladeIndex::SCALAR, value)])
    }

    /// A single basis blade with coefficient 1.
    pub fn basis(sig: Signature, blade: BladeIndex) -> Multivector {
        Multivector::from_terms(sig, [(blade, 1.0)])
    }

    /// Build from (blade, coefficient) pairs; repeated blades accumulate and
    /// exact zeros are dropped. Panics on masks outside the signature or
    /// non-finite coefficients.
    pub fn from_terms(
        sig: Signature,
        terms: impl IntoIterator<Item = (BladeIndex, f64)>,
    ) -> Multivector {
        let mut mv = Multivector::zero(sig);
        for (blade, coeff) in terms {
            mv.accumulate(blade, coeff);
        }
        mv
    }

    fn accumulate(&mut self, blade: BladeIndex, coeff: f64) {
        assert!(self.sig.valid_mask(blade.0), "blade {blade} not valid for n={}", self.sig.dim());
        assert!(coeff.is_finite(), "non-finite coefficient for blade {blade}");
        let entry = self.terms.entry(blade).or_insert(0.0);
        *entry += coeff;
        if *entry == 0.0 {
            self.terms.remove(&blade);
        }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: BladeIndex) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    /// Stored terms in ascending blade order.
    pub fn terms(&self) -> impl Iterator<Item = (BladeIndex, f64)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeff(BladeIndex::SCALAR)
    }

    /// Grades present, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The common grade if all terms share one; `Some(0)` for the zero
    /// multivector.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let grades = self.grades();
        match grades.len() {
            0 => Some(0),
            1 => Some(grades[0]),
            _ => None,
        }
    }

    fn check_sig(&self, other: &Multivector) {
        assert!(
            self.sig == other.sig,
            "signature mismatch: n={} vs n={}",
            self.sig.dim(),
            other.sig.dim()
        );
    }

    /// Geometric product, the bilinear extension of the blade Cayley rule.
    pub fn gp(&self, other: &Multivector) -> Multivector {
        self.check_sig(other);
        let mut out = Multivector::zero(self.sig);
        for (&j, &a) in &self.terms {
            for (&k, &b) in &other.terms {
                let (sign, blade) = blade_geometric_product(j, k, self.sig);
                if sign != 0 {
                    out.accumulate(blade, sign as f64 * a * b);
                }
            }
        }
        out
    }

    /// Outer product; metric-free, so e_0 contributes like any other factor.
    pub fn wedge(&self, other: &Multivector) -> Multivector {
        self.check_sig(other);
        let mut out = Multivector::zero(self.sig);
        for (&j, &a) in &self.terms {
            for (&k, &b) in &other.terms {
                let (sign, blade) = blade_wedge(j, k);
                if sign != 0 {
                    out.accumulate(blade, sign as f64 * a * b);
                }
            }
        }
        out
    }

    /// Symmetric ("fat dot") inner product: for homogeneous parts of grades
    /// r and s this is the grade-|r−s| part of the geometric product, summed
    /// bilinearly. Here it is only ever applied between proportional blades
    /// of equal grade, where every inner-product convention agrees.
    pub fn inner(&self, other: &Multivector) -> Multivector {
        self.check_sig(other);
        let mut out = Multivector::zero(self.sig);
        for (&j, &a) in &self.terms {
            for (&k, &b) in &other.terms {
                let (sign, blade) = blade_geometric_product(j, k, self.sig);
                if sign != 0 && blade.grade() == j.grade().abs_diff(k.grade()) {
                    out.accumulate(blade, sign as f64 * a * b);
                }
            }
        }
        out
    }

    /// Commutator product, the anti-commutative half ½(AB − BA).
    pub fn commutator(&self, other: &Multivector) -> Multivector {
        let ab = self.gp(other);
        let ba = other.gp(self);
        (&ab - &ba).scale(0.5)
    }

    /// Commutator by grade filtering: one geometric product per grade pair,
    /// keeping exactly the output grades whose parity condition places them
    /// in the anti-commutative part. Agrees with [`Multivector::commutator`]
    /// bit-for-bit.
    pub fn commutator_graded(&self, other: &Multivector) -> Multivector {
        self.check_sig(other);
        let mut out = Multivector::zero(self.sig);
        for r in self.grades() {
            let ar = self.grade_select(r);
            for s in other.grades() {
                let bs = other.grade_select(s);
                let prod = ar.gp(&bs);
                for (blade, coeff) in prod.terms() {
                    if !grade_in_symmetric_part(blade.grade(), r, s) {
                        out.accumulate(blade, coeff);
                    }
                }
            }
        }
        out
    }

    /// Keep only terms of grade k.
    pub fn grade_select(&self, k: usize) -> Multivector {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(&b, &c)| (b, c)).collect(),
        }
    }

    /// Reverse: grade-k terms scale by (−1)^(k(k−1)/2).
    pub fn reverse(&self) -> Multivector {
        self.map_terms(|blade, coeff| coeff * reverse_sign(blade.grade()))
    }

    /// Grade involution: grade-k terms scale by (−1)^k.
    pub fn grade_involution(&self) -> Multivector {
        self.map_terms(|blade, coeff| coeff * involution_sign(blade.grade()))
    }

    pub fn scale(&self, s: f64) -> Multivector {
        assert!(s.is_finite(), "non-finite scale factor");
        if s == 0.0 {
            return Multivector::zero(self.sig);
        }
        self.map_terms(|_, coeff| coeff * s)
    }

    fn map_terms(&self, f: impl Fn(BladeIndex, f64) -> f64) -> Multivector {
        let mut out = Multivector::zero(self.sig);
        for (&b, &c) in &self.terms {
            out.accumulate(b, f(b, c));
        }
        out
    }

    /// Largest coefficient magnitude.
    pub fn norm_inf(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Coefficient 2-norm.
    pub fn norm2(&self) -> f64 {
        self.terms.values().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Coefficient-wise comparison with tolerance relative to the larger
    /// operand's magnitude.
    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.check_sig(other);
        let scale = self.norm_inf().max(other.norm_inf()).max(1.0);
        let mut blades: Vec<BladeIndex> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        blades.sort_unstable();
        blades.dedup();
        blades.iter().all(|&b| (self.coeff(b) - other.coeff(b)).abs() <= tol * scale)
    }
}

/// Grade-k output of an (r, s) blade product lands in the commutative half
/// iff k(k−1)/2 + r(r−1)/2 + s(s−1)/2 is even.
pub fn grade_in_symmetric_part(k: usize, r: usize, s: usize) -> bool {
    let half = |m: usize| m * m.wrapping_sub(1) / 2;
    (half(k) + half(r) + half(s)) % 2 == 0
}

/// The pair (I, I_E): the unit pseudoscalar e_{01…n} and its Euclidean
/// counterpart e_{1…n}, with I = e_0 I_E.
pub fn pseudoscalars(sig: Signature) -> (Multivector, Multivector) {
    (
        Multivector::basis(sig, BladeIndex(sig.full_mask())),
        Multivector::basis(sig, BladeIndex(sig.euclidean_mask())),
    )
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.check_sig(rhs);
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.accumulate(b, c);
        }
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.check_sig(rhs);
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.accumulate(b, -c);
        }
        out
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.gp(rhs)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (blade, coeff)) in self.terms().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff < 0.0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0.0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if blade == BladeIndex::SCALAR {
                write!(f, "{mag}")?;
            } else if mag == 1.0 {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{mag} {blade}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_blade_product;

    fn blade(indices: &[usize]) -> BladeIndex {
        BladeIndex::from_indices(indices)
    }

    fn mv(sig: Signature, terms: &[(&[usize], f64)]) -> Multivector {
        Multivector::from_terms(sig, terms.iter().map(|&(ix, c)| (blade(ix), c)))
    }

    #[test]
    fn cayley_rule_examples() {
        let sig = Signature::new(3);
        // orthogonal generators anticommute into the wedge
        assert_eq!(blade_geometric_product(blade(&[1]), blade(&[2]), sig), (1, blade(&[1, 2])));
        // e_0 is a null vector
        assert_eq!(blade_geometric_product(blade(&[0]), blade(&[0]), sig), (0, BladeIndex::SCALAR));
        // contraction against the shared factor; expected value from the
        // ordered-list oracle
        let (sign, list) = naive_blade_product(&[1, 2], &[2], sig);
        assert_eq!((sign, list.as_slice()), (1, &[1usize][..]));
        assert_eq!(blade_geometric_product(blade(&[1, 2]), blade(&[2]), sig), (1, blade(&[1])));
    }

    #[test]
    fn cayley_rule_matches_naive_oracle_exhaustively() {
        for n in 1..=4 {
            let sig = Signature::new(n);
            for j in sig.blades() {
                for k in sig.blades() {
                    let (sign, result) = blade_geometric_product(j, k, sig);
                    let jl: Vec<usize> = j.indices().collect();
                    let kl: Vec<usize> = k.indices().collect();
                    let (osign, olist) = naive_blade_product(&jl, &kl, sig);
                    assert_eq!(sign, osign, "sign mismatch for {j} * {k} (n={n})");
                    if sign != 0 {
                        let rl: Vec<usize> = result.indices().collect();
                        assert_eq!(rl, olist, "blade mismatch for {j} * {k} (n={n})");
                    }
                }
            }
        }
    }

    #[test]
    fn blade_products_associative_exhaustively() {
        for n in 2..=4 {
            let sig = Signature::new(n);
            for a in sig.blades() {
                for b in sig.blades() {
                    for c in sig.blades() {
                        let (s1, ab) = blade_geometric_product(a, b, sig);
                        let (s2, ab_c) = blade_geometric_product(ab, c, sig);
                        let left = (s1 * s2, ab_c);
                        let (t1, bc) = blade_geometric_product(b, c, sig);
                        let (t2, a_bc) = blade_geometric_product(a, bc, sig);
                        let right = (t1 * t2, a_bc);
                        if left.0 == 0 || right.0 == 0 {
                            assert_eq!(left.0, 0);
                            assert_eq!(right.0, 0);
                        } else {
                            assert_eq!(left, right, "assoc failed at {a},{b},{c} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn geometric_product_examples() {
        let sig = Signature::new(3);
        let e1 = Multivector::basis(sig, blade(&[1]));
        assert_eq!(e1.gp(&e1), Multivector::scalar(sig, 1.0));

        let (_, ie) = pseudoscalars(sig);
        assert_eq!(ie.gp(&ie), Multivector::scalar(sig, -1.0));

        let a = mv(sig, &[(&[], 1.0), (&[1], 2.0), (&[0, 2], -0.5)]);
        assert_eq!(a.gp(&Multivector::scalar(sig, 1.0)), a);
    }

    #[test]
    fn one_vector_split_into_inner_plus_wedge() {
        // ab = a·b + a∧b for 1-vectors, exactly
        let sig = Signature::new(4);
        let a = mv(sig, &[(&[0], 0.3), (&[1], 1.0), (&[2], -2.0), (&[4], 0.7)]);
        let b = mv(sig, &[(&[0], -1.2), (&[2], 0.4), (&[3], 5.0)]);
        let lhs = a.gp(&b);
        let rhs = &a.inner(&b) + &a.wedge(&b);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_examples() {
        let sig = Signature::new(2);
        let e0 = Multivector::basis(sig, blade(&[0]));
        let e1 = Multivector::basis(sig, blade(&[1]));
        let e2 = Multivector::basis(sig, blade(&[2]));
        assert_eq!(e0.wedge(&e1), Multivector::basis(sig, blade(&[0, 1])));
        assert!(e1.wedge(&e1).is_zero());
        let sum = &e1 + &e2;
        assert_eq!(sum.wedge(&e2), Multivector::basis(sig, blade(&[1, 2])));
    }

    #[test]
    fn inner_examples() {
        let sig = Signature::new(2);
        let e1 = Multivector::basis(sig, blade(&[1]));
        assert_eq!(e1.inner(&e1), Multivector::scalar(sig, 1.0));
        let e01 = Multivector::basis(sig, blade(&[0, 1]));
        assert!(e01.inner(&e01).is_zero());
        let e12 = Multivector::basis(sig, blade(&[1, 2]));
        assert_eq!(e12.inner(&e12), Multivector::scalar(sig, -1.0));
        // orthogonal vectors have zero inner part
        let e2 = Multivector::basis(sig, blade(&[2]));
        assert!(e1.gp(&e2).grade_select(0).is_zero());
    }

    #[test]
    fn grade_select_partitions() {
        let sig = Signature::new(3);
        let a = mv(sig, &[(&[], 1.0), (&[1], 2.0), (&[1, 2], 3.0), (&[0, 1, 2], -1.0)]);
        assert_eq!(a.grade_select(1), mv(sig, &[(&[1], 2.0)]));
        let mut sum = Multivector::zero(sig);
        for k in 0..=sig.max_grade() {
            sum = &sum + &a.grade_select(k);
        }
        assert_eq!(sum, a);
    }

    #[test]
    fn commutator_examples() {
        let sig = Signature::new(3);
        let a = mv(sig, &[(&[0], 1.5), (&[1], 1.0), (&[3], -0.25)]);
        let b = mv(sig, &[(&[1], 0.5), (&[2], 2.0)]);
        assert_eq!(a.commutator(&b), a.wedge(&b));
        assert!(a.commutator(&a).is_zero());
        let e12 = Multivector::basis(sig, blade(&[1, 2]));
        let e13 = Multivector::basis(sig, blade(&[1, 3]));
        assert_eq!(e12.commutator(&e13), mv(sig, &[(&[2, 3], -1.0)]));
    }

    #[test]
    fn commutator_grade_filter_agrees_exhaustively() {
        for n in 1..=4 {
            let sig = Signature::new(n);
            for j in sig.blades() {
                for k in sig.blades() {
                    let a = Multivector::basis(sig, j);
                    let b = Multivector::basis(sig, k);
                    assert_eq!(
                        a.commutator(&b),
                        a.commutator_graded(&b),
                        "parity filter mismatch at {j}, {k} (n={n})"
                    );
                }
            }
        }
    }

    #[test]
    fn involutions() {
        let sig = Signature::new(3);
        let e12 = Multivector::basis(sig, blade(&[1, 2]));
        assert_eq!(e12.reverse(), e12.scale(-1.0));
        let e1 = Multivector::basis(sig, blade(&[1]));
        assert_eq!(e1.grade_involution(), e1.scale(-1.0));
        let s = Multivector::scalar(sig, 4.0);
        assert_eq!(s.reverse(), s);
    }

    #[test]
    fn linear_ops() {
        let sig = Signature::new(2);
        let a = mv(sig, &[(&[1], 1.0), (&[0, 2], -2.0)]);
        assert_eq!(&a + &Multivector::zero(sig), a);
        let e1 = Multivector::basis(sig, blade(&[1]));
        assert_eq!(&e1.scale(2.0) - &e1, e1);
        assert!((&a.scale(-1.0) + &a).is_zero());
    }

    #[test]
    fn pseudoscalar_construction() {
        let sig2 = Signature::new(2);
        let (i, ie) = pseudoscalars(sig2);
        assert_eq!(i, Multivector::basis(sig2, blade(&[0, 1, 2])));
        assert_eq!(ie, Multivector::basis(sig2, blade(&[1, 2])));

        let sig3 = Signature::new(3);
        let (i3, ie3) = pseudoscalars(sig3);
        assert_eq!(i3, Multivector::basis(sig3, blade(&[0, 1, 2, 3])));
        let e0 = Multivector::basis(sig3, blade(&[0]));
        assert_eq!(e0.gp(&ie3), i3);
        assert_eq!(e0.wedge(&ie3), i3);
    }

    #[test]
    fn degeneracy_propagates() {
        // e_0 M e_0 = 0 when every term of M contains e_0
        let sig = Signature::new(3);
        let m = mv(sig, &[(&[0], 1.0), (&[0, 1], -2.0), (&[0, 2, 3], 0.5)]);
        let e0 = Multivector::basis(sig, blade(&[0]));
        assert!(e0.gp(&m).gp(&e0).is_zero());
    }

    #[test]
    fn blade_names_round_trip() {
        let sig = Signature::new(12);
        let b = blade(&[0, 3, 11]);
        assert_eq!(b.name(), "e03b");
        assert_eq!(BladeIndex::parse("e03b", sig), Ok(b));
        assert_eq!(BladeIndex::parse("e", sig), Ok(BladeIndex::SCALAR));
        assert!(BladeIndex::parse("e10", sig).is_err());
        assert!(BladeIndex::parse("e99", Signature::new(2)).is_err());
        assert!(BladeIndex::parse("x1", sig).is_err());
        assert!(BladeIndex::parse("e11", sig).is_err());
    }

    #[test]
    #[should_panic(expected = "signature mismatch")]
    fn mixed_signatures_panic() {
        let a = Multivector::scalar(Signature::new(2), 1.0);
        let b = Multivector::scalar(Signature::new(3), 1.0);
        let _ = a.gp(&b);
    }

    #[test]
    fn zero_terms_pruned() {
        let sig = Signature::new(2);
        let a = mv(sig, &[(&[1], 1.0)]);
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff.num_terms(), 0);
    }
}
