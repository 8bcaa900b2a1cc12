use super::int::pow_mod;
use super::{Element, FieldTower};

/// Coordinates of GF(q^big) over GF(q^small) in the basis
/// `1, w, ..., w^(t-1)`, `w` the fixed primitive element of GF(q^big).
///
/// Extraction is GF(p)-linear: a precomputed left inverse of the GF(p)-basis
/// `{k_a w^j}` maps ambient digits to GF(p) coordinates, which are then
/// recombined into GF(q^small) elements.
#[derive(Debug)]
pub struct SubfieldCoords {
    big: usize,
    small: usize,
    basis: Vec<Element>,
    small_basis: Vec<Element>,
    extractor: Vec<Vec<u64>>,
}

impl SubfieldCoords {
    pub(super) fn new(tw: &FieldTower, big: usize, small: usize) -> Self {
        let p = tw.p();
        let n = tw.degree();
        let t = big / small;
        let w = tw.subfield_primitive(big).expect("checked by caller");
        let ws = tw.subfield_primitive(small).expect("checked by caller");
        let basis: Vec<Element> = (0..t).map(|j| tw.pow(w, j as u64)).collect();
        let small_dim = tw.e() * small;
        let small_basis: Vec<Element> = (0..small_dim).map(|a| tw.pow(ws, a as u64)).collect();

        // columns of V: digits of k_a w^j, ordered j-major
        let cols: Vec<Vec<u64>> = basis
            .iter()
            .flat_map(|&b| small_basis.iter().map(move |&k| (b, k)))
            .map(|(b, k)| tw.digits(tw.mul(b, k)))
            .collect();
        let dim = cols.len();
        // [V | I] row reduced; the first `dim` rows of the right block form a
        // left inverse of V
        let mut aug: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row: Vec<u64> = cols.iter().map(|c| c[i]).collect();
                row.extend((0..n).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for c in 0..dim {
            let pr = (c..n)
                .find(|&i| aug[i][c] != 0)
                .expect("product basis is independent over GF(p)");
            aug.swap(c, pr);
            let inv = pow_mod(aug[c][c], p - 2, p);
            for v in aug[c].iter_mut() {
                *v = *v * inv % p;
            }
            let pivot = aug[c].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i != c && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = (*x + p * p - f * y % p) % p;
                    }
                }
            }
        }
        let extractor = aug[..dim].iter().map(|row| row[dim..].to_vec()).collect();
        SubfieldCoords {
            big,
            small,
            basis,
            small_basis,
            extractor,
        }
    }

    pub fn big_degree(&self) -> usize {
        self.big
    }

    pub fn small_degree(&self) -> usize {
        self.small
    }

    /// Dimension of GF(q^big) over GF(q^small).
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    /// Coordinates of `x`, which must lie in GF(q^big).
    pub fn coords(&self, tw: &FieldTower, x: Element) -> Vec<Element> {
        let p = tw.p();
        let d = tw.digits(x);
        let y: Vec<u64> = self
            .extractor
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&d)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % p)
            })
            .collect();
        let sd = self.small_basis.len();
        (0..self.basis.len())
            .map(|j| {
                self.small_basis
                    .iter()
                    .enumerate()
                    .fold(Element::ZERO, |acc, (a, &k)| {
                        let c = tw.from_int(y[j * sd + a] as i64);
                        tw.add(acc, tw.mul(c, k))
                    })
            })
            .collect()
    }

    pub fn from_coords(&self, tw: &FieldTower, c: &[Element]) -> Element {
        c.iter()
            .zip(&self.basis)
            .fold(Element::ZERO, |acc, (&a, &b)| tw.add(acc, tw.mul(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use crate::gf::make_tower;

    #[test]
    fn coordinates_round_trip() {
        let t = make_tower(2, 1, 2, 2, 3).unwrap();
        for (big, small) in [(6, 2), (6, 3), (6, 1), (2, 1), (6, 6)] {
            let c = t.coords(big, small).unwrap();
            assert_eq!(c.dimension(), big / small);
            for x in t.subfield_elements(big).unwrap().into_iter().step_by(5) {
                let v = c.coords(&t, x);
                assert!(v.iter().all(|&k| t.in_subfield(k, small)));
                assert_eq!(c.from_coords(&t, &v), x);
            }
        }
        let t4 = make_tower(2, 2, 2, 0, 3).unwrap();
        let c = t4.coords(2, 1).unwrap();
        for x in t4.subfield_elements(2).unwrap() {
            assert_eq!(c.from_coords(&t4, &c.coords(&t4, x)), x);
        }
    }
}
