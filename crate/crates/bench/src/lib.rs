//! Benchmark fixtures shared by the criterion benches.

use std::sync::Arc;

use skewlen::{make_tower, Element, FieldTower, LPoly};

/// GF(2^12) over GF(2), with skew order 1 and length 12.
pub fn tower() -> Arc<FieldTower> {
    Arc::new(make_tower(2, 1, 12, 1, 12).expect("tower fits the default cap"))
}

/// Successive powers of the primitive element.
pub fn powers(tw: &FieldTower, count: usize) -> Vec<Element> {
    let a = tw.alpha();
    let mut x = Element::ONE;
    (0..count)
        .map(|_| {
            x = tw.mul(x, a);
            x
        })
        .collect()
}

/// A linearized polynomial with `len` nonzero coefficients.
pub fn lpoly(tw: &FieldTower, len: usize, offset: usize) -> LPoly {
    LPoly::new(1, powers(tw, len + offset)[offset..].to_vec())
}
