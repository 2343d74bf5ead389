//! Hodge dual, its inverse, and the dualized products.
//!
//! The dual of a basis blade e_J is the unique signed complement blade with
//! e_J ∧ e_J⋆ = I. The degenerate metric never enters: the complement is a
//! pure wedge condition, so e_0-carrying blades dualize like any other.
//!
//! The double dual is not assumed involutive. Every formula written with an
//! outer ⋆ (regressive, inner dual, commutator dual) applies [`hodge_dual`]
//! literally; the per-grade double-dual sign [`double_dual_sign`] cancels in
//! every cross-ratio because those are ratios.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::ga::{reorder_sign, BladeIndex, Multivector, Signature};
use crate::objects::euclidean_split;

/// Per-signature blade-complement sign table. Built once per n and cached
/// process-wide; read-only after construction.
struct DualTable {
    /// sign[J] is the coefficient of e_J⋆ on the complement blade.
    sign: Vec<i8>,
}

impl DualTable {
    fn build(sig: Signature) -> DualTable {
        let full = sig.full_mask();
        let sign = (0..=full)
            .map(|mask| reorder_sign(mask, full & !mask) as i8)
            .collect();
        DualTable { sign }
    }
}

fn table(sig: Signature) -> Arc<DualTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DualTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("dual table cache poisoned");
    map.entry(sig.dim()).or_insert_with(|| Arc::new(DualTable::build(sig))).clone()
}

/// Hodge dual: blade-wise complement with the sign fixed by e_J ∧ e_J⋆ = I,
/// extended linearly.
pub fn hodge_dual(a: &Multivector) -> Multivector {
    let sig = a.sig();
    let t = table(sig);
    Multivector::from_terms(
        sig,
        a.terms().map(|(blade, coeff)| {
            let s = t.sign[blade.bits() as usize] as f64;
            (blade.complement(sig), s * coeff)
        }),
    )
}

/// Exact inverse of [`hodge_dual`]: round-trips are the identity, not just a
/// sign multiple, because every complement sign is ±1.
pub fn hodge_undual(a: &Multivector) -> Multivector {
    let sig = a.sig();
    let t = table(sig);
    Multivector::from_terms(
        sig,
        a.terms().map(|(blade, coeff)| {
            let source = blade.complement(sig);
            let s = t.sign[source.bits() as usize] as f64;
            (source, s * coeff)
        }),
    )
}

/// Closed-form dual via the Euclidean split:
/// A⋆ = reverse(A_I) I_E + e_0 grade_involution(reverse(A_E)) I_E.
///
/// Equivalent to [`hodge_dual`] on every basis blade; the equivalence is
/// enforced by the acceptance suite.
pub fn hodge_dual_closed_form(a: &Multivector) -> Multivector {
    let sig = a.sig();
    let split = euclidean_split(a);
    let ie = Multivector::basis(sig, BladeIndex(sig.euclidean_mask()));
    let e0 = Multivector::basis(sig, BladeIndex(1));
    let ideal_term = split.ideal.reverse().gp(&ie);
    let euclid_term = e0.gp(&split.euclid.reverse().grade_involution()).gp(&ie);
    &ideal_term + &euclid_term
}

/// Sign of the double dual on grade-g blades: e_J⋆⋆ = ±e_J with the sign
/// depending only on (g, n).
pub fn double_dual_sign(grade: usize, sig: Signature) -> f64 {
    if grade * (sig.max_grade() - grade) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Regressive product (join): A ∨ B = (A⋆ ∧ B⋆)⋆.
pub fn regressive(a: &Multivector, b: &Multivector) -> Multivector {
    hodge_dual(&hodge_dual(a).wedge(&hodge_dual(b)))
}

/// Dualized inner product: A ·⋆ B = (A⋆ · B⋆)⋆.
pub fn inner_dual(a: &Multivector, b: &Multivector) -> Multivector {
    hodge_dual(&hodge_dual(a).inner(&hodge_dual(b)))
}

/// Dualized commutator: A ×⋆ B = (A⋆ × B⋆)⋆. Coincides with the regressive
/// product on grade-n inputs.
pub fn commutator_dual(a: &Multivector, b: &Multivector) -> Multivector {
    hodge_dual(&hodge_dual(a).commutator(&hodge_dual(b)))
}
