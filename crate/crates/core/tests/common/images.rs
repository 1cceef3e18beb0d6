// Images of library sets under coordinate maps.

use fdk_core::{GroupElement, GroupSpec, Ring};
use rand::Rng;

pub fn map_set(set: &Ring, f: impl Fn(&[u32]) -> Vec<u32>) -> Ring {
    let g = set.group().clone();
    let images: Vec<GroupElement> = set.elements().iter().map(|e| GroupElement::new(f(&e.coords))).collect();
    Ring::from_elements(&g, images.iter()).unwrap()
}

/// Matrix acting on the Z_4 coordinates, Z_2 coordinate fixed.
pub fn act(matrix: &[Vec<u32>], x: &[u32]) -> Vec<u32> {
    let mut out = vec![x[0]];
    out.extend(super::apply(matrix, &x[1..]));
    out
}

pub fn random_element<R: Rng>(rng: &mut R, g: &GroupSpec) -> GroupElement {
    g.element_at(rng.gen_range(0..g.cardinality()))
}
