//! Exact construction and verification of formally dual pairs in finite
//! abelian groups.
//!
//! The crate covers the integer group ring `Z[G]` of a product of cyclic
//! groups, an exact character transform over the Gaussian integers for
//! groups of exponent dividing 4, formal-duality and primitivity checks,
//! the lifting construction into `Z_2 x G`, and the direct construction of
//! primitive formally dual pairs with unequal sizes in `Z_2 x Z_4^{2m}`
//! together with closed forms for their difference spectra.
//!
//! Exact types are generic over a [`Coeff`] integer scalar and float tables
//! over [`num_traits::Float`]; the aliases below fix the common choices.
//!
//! ```
//! use fdk_core::{direct_construction, verify_formal_dual, Pair};
//!
//! let pair: Pair = direct_construction(1).unwrap();
//! assert_eq!(pair.s.support().len(), 4);
//! assert!(verify_formal_dual(&pair).unwrap().holds);
//! ```

pub mod constructions;
pub mod duality;
pub mod error;
pub mod gaussian;
pub mod group;
pub mod io;
pub mod ring;
pub mod scalar;
pub mod selftest;
pub mod spectra;
pub mod transform;

pub use constructions::{
    base_sets, build_partition, cartesian_power, classify_stratum, direct_construction,
    direct_construction_with, e_set, lift, product_pair, BaseSets, Block, BlockWord, Inputs, SelfCheck,
    Stratum,
};
pub use duality::{
    check_lifting_condition, equivalence_invariants, is_primitive_subset, verify_dual_symmetric,
    verify_formal_dual, DualPair, DualityFailure, DualityReport, EquivalenceInvariants, Primitivity,
};
pub use error::{Error, Result};
pub use gaussian::GaussianInt;
pub use group::{GroupElement, GroupSpec};
pub use ring::{weight_enumerator, GroupRingElement, Spectrum};
pub use scalar::Coeff;
pub use spectra::{
    tprime_diff_element, tprime_spectrum_closed_form, tt_coefficient, tt_inv_coefficient, ClosedFormSpectrum,
};
pub use transform::{
    character_norms, convolve_fast, full_character_sums, full_character_sums_float, inverse_transform,
    naive_character_sums, norm_spectrum, CharacterTable, ComplexTable,
};

/// Group-ring element with 64-bit coefficients, enough for `m <= 7` subsets.
pub type Ring = GroupRingElement<i64>;
/// Group-ring element with 128-bit coefficients.
pub type WideRing = GroupRingElement<i128>;
/// Arbitrary-precision group-ring element.
pub type BigRing = GroupRingElement<num_bigint::BigInt>;
pub type Gaussian = GaussianInt<i64>;
pub type Table = CharacterTable<i64>;
pub type FloatTable = ComplexTable<f64>;
pub type Pair = DualPair<i64>;
pub type Report = DualityReport<i64>;
pub type IntSpectrum = Spectrum<i64>;

/// Library version recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
