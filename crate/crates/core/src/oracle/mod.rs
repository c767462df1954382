//! Brute-force computation of `R = W/W⁰` for a centralizer descriptor.
//!
//! Each factor's Weyl group is realized on the standard diagonal torus as a
//! group of (signed) permutations. Factors that a binding determinant
//! constraint couples together are enumerated jointly: an element of the
//! product of their full Weyl groups belongs to `W` exactly when some choice
//! of determinants compatible with it satisfies the constraint.

mod signed_perm;

use std::ops::Range;

pub use signed_perm::{ParityFilter, SignedPerm, SignedPermGroup};

use crate::centralizer::{CentralizerDescriptor, ElementaryTwoGroup, Factor, FactorKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Upper bound on the total rank of the maximal torus.
    pub max_torus_degree: u32,
    /// Upper bound on the size of any single enumerated group.
    pub max_elements: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            max_torus_degree: 10,
            max_elements: 1_000_000,
        }
    }
}

/// The Weyl group of a factor and of its identity component.
pub fn weyl_of_factor(
    kind: FactorKind,
    size: u32,
    max_elements: usize,
) -> Result<(SignedPermGroup, SignedPermGroup)> {
    if size == 0 {
        return Err(Error::UnsupportedDescriptor(format!(
            "{}(0) factor",
            kind.symbol()
        )));
    }
    let half = (size / 2) as usize;
    let b = |k| SignedPermGroup::hyperoctahedral(k, max_elements);
    let d = |k| SignedPermGroup::even_signed(k, max_elements);
    match kind {
        FactorKind::GeneralLinear => {
            let s = SignedPermGroup::symmetric(size as usize, max_elements)?;
            Ok((s.clone(), s))
        }
        FactorKind::Symplectic if size % 2 == 1 => Err(Error::UnsupportedDescriptor(format!(
            "Sp({size}) needs even size"
        ))),
        FactorKind::Symplectic => {
            let w = b(half)?;
            Ok((w.clone(), w))
        }
        FactorKind::FullOrthogonal if size % 2 == 1 => {
            let w = b(half)?;
            Ok((w.clone(), w))
        }
        FactorKind::FullOrthogonal => Ok((b(half)?, d(half)?)),
        FactorKind::SpecialOrthogonal if size % 2 == 1 => {
            let w = b(half)?;
            Ok((w.clone(), w))
        }
        FactorKind::SpecialOrthogonal => {
            let w = d(half)?;
            Ok((w.clone(), w))
        }
    }
}

fn torus_block_degree(f: &Factor) -> usize {
    f.torus_degree() as usize
}

/// `R = W/W⁰` for `desc`, by enumeration.
pub fn weyl_quotient(
    desc: &CentralizerDescriptor,
    options: OracleOptions,
) -> Result<ElementaryTwoGroup> {
    let degree = desc.torus_degree();
    if degree > options.max_torus_degree {
        return Err(Error::BoundExceeded(format!(
            "torus degree {degree} exceeds {}",
            options.max_torus_degree
        )));
    }

    let coupled = desc.bound_orthogonal_factors();
    let mut rank = 0;
    for (i, factor) in desc.factors.iter().enumerate() {
        if coupled.contains(&i) {
            continue;
        }
        let (full, identity) = weyl_of_factor(factor.kind, factor.size, options.max_elements)?;
        rank += full.elementary_quotient_rank(&identity)?;
    }
    if !coupled.is_empty() {
        rank += coupled_quotient_rank(desc, &coupled, options)?;
    }
    Ok(ElementaryTwoGroup::new(rank))
}

/// Joint enumeration of the factors tied together by the determinant
/// constraint. All of them are full orthogonal groups.
fn coupled_quotient_rank(
    desc: &CentralizerDescriptor,
    coupled: &[usize],
    options: OracleOptions,
) -> Result<u32> {
    let exponents: Vec<u32> = coupled
        .iter()
        .map(|&i| {
            desc.det_constraint
                .as_ref()
                .map(|c| {
                    c.terms
                        .iter()
                        .filter(|t| t.factor == i)
                        .map(|t| t.exponent)
                        .sum::<u32>()
                })
                .unwrap_or(0)
        })
        .collect();

    let mut fulls = Vec::with_capacity(coupled.len());
    let mut identities = Vec::with_capacity(coupled.len());
    let mut blocks: Vec<(Range<usize>, bool)> = Vec::with_capacity(coupled.len());
    let mut offset = 0;
    for &i in coupled {
        let factor = &desc.factors[i];
        let (full, identity) = weyl_of_factor(factor.kind, factor.size, options.max_elements)?;
        let width = torus_block_degree(factor);
        blocks.push((offset..offset + width, factor.size % 2 == 0));
        offset += width;
        fulls.push(full);
        identities.push(identity);
    }

    let full_refs: Vec<&SignedPermGroup> = fulls.iter().collect();
    let identity_refs: Vec<&SignedPermGroup> = identities.iter().collect();
    let product = SignedPermGroup::product(&full_refs, options.max_elements)?;
    let w0 = SignedPermGroup::product(&identity_refs, options.max_elements)?;

    // An element lifts to S_ψ if some determinant vector compatible with it
    // satisfies the constraint. On an even-size block the determinant of
    // any lift is (-1)^(sign changes); on an odd-size block both signs occur.
    let free_blocks: Vec<usize> = (0..blocks.len()).filter(|&b| !blocks[b].1).collect();
    let lifts = |w: &SignedPerm| {
        (0u32..1 << free_blocks.len()).any(|choice| {
            let mut det_product = 0u32;
            for (b, (range, even)) in blocks.iter().enumerate() {
                let det_is_minus = if *even {
                    w.sign_count_in(range.clone()) % 2 == 1
                } else {
                    let bit = free_blocks.iter().position(|&x| x == b).unwrap();
                    choice >> bit & 1 == 1
                };
                if det_is_minus {
                    det_product += exponents[b];
                }
            }
            det_product % 2 == 0
        })
    };
    let w = product.filter(lifts);
    w.elementary_quotient_rank(&w0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::{DetConstraint, DetTerm};

    const CAP: usize = 1_000_000;

    fn f(kind: FactorKind, size: u32, source_dim: u32) -> Factor {
        Factor::new(kind, size, source_dim).unwrap()
    }

    fn quotient(kind: FactorKind, size: u32) -> u32 {
        let (full, identity) = weyl_of_factor(kind, size, CAP).unwrap();
        full.elementary_quotient_rank(&identity).unwrap()
    }

    #[test]
    fn factor_examples() {
        let (full, identity) = weyl_of_factor(FactorKind::FullOrthogonal, 2, CAP).unwrap();
        assert_eq!((full.order(), identity.order()), (2, 1));
        assert_eq!(quotient(FactorKind::FullOrthogonal, 2), 1);

        let (full, identity) = weyl_of_factor(FactorKind::FullOrthogonal, 3, CAP).unwrap();
        assert_eq!((full.order(), identity.order()), (2, 2));
        assert_eq!(quotient(FactorKind::FullOrthogonal, 3), 0);

        let (full, _) = weyl_of_factor(FactorKind::GeneralLinear, 3, CAP).unwrap();
        assert_eq!(full.order(), 6);
        assert_eq!(quotient(FactorKind::GeneralLinear, 3), 0);
        assert_eq!(quotient(FactorKind::Symplectic, 2), 0);
    }

    #[test]
    fn factor_orders() {
        let fact = |n: usize| (1..=n).product::<usize>();
        for k in 1..=4usize {
            let (w, w0) = weyl_of_factor(FactorKind::FullOrthogonal, 2 * k as u32, CAP).unwrap();
            assert_eq!(w.order(), (1 << k) * fact(k));
            assert_eq!(w.order(), 2 * w0.order());
            let (w, w0) =
                weyl_of_factor(FactorKind::FullOrthogonal, 2 * k as u32 + 1, CAP).unwrap();
            assert_eq!(w.order(), (1 << k) * fact(k));
            assert_eq!(w.order(), w0.order());
            let (w, _) = weyl_of_factor(FactorKind::GeneralLinear, k as u32, CAP).unwrap();
            assert_eq!(w.order(), fact(k));
        }
        assert!(weyl_of_factor(FactorKind::Symplectic, 3, CAP).is_err());
        assert!(weyl_of_factor(FactorKind::GeneralLinear, 0, CAP).is_err());
    }

    #[test]
    fn descriptor_examples() {
        let opts = OracleOptions::default();
        let o2 = CentralizerDescriptor::new(vec![f(FactorKind::FullOrthogonal, 2, 2)], None).unwrap();
        assert_eq!(weyl_quotient(&o2, opts).unwrap().rank, 1);

        let sp = CentralizerDescriptor::new(vec![f(FactorKind::Symplectic, 2, 1)], None).unwrap();
        assert_eq!(weyl_quotient(&sp, opts).unwrap().rank, 0);

        // O(3) with odd source dimension bound by the constraint, O(2) free.
        let mixed = CentralizerDescriptor::new(
            vec![f(FactorKind::FullOrthogonal, 3, 1), f(FactorKind::FullOrthogonal, 2, 2)],
            Some(DetConstraint {
                terms: vec![DetTerm { factor: 0, exponent: 1 }],
            }),
        )
        .unwrap();
        assert_eq!(weyl_quotient(&mixed, opts).unwrap().rank, 1);
    }

    #[test]
    fn constraint_on_even_blocks_only_removes_a_generator() {
        let opts = OracleOptions::default();
        let terms = vec![DetTerm { factor: 0, exponent: 1 }, DetTerm { factor: 1, exponent: 1 }];
        let desc = CentralizerDescriptor::new(
            vec![f(FactorKind::FullOrthogonal, 2, 1), f(FactorKind::FullOrthogonal, 4, 1)],
            Some(DetConstraint { terms: terms.clone() }),
        )
        .unwrap();
        assert_eq!(weyl_quotient(&desc, opts).unwrap().rank, 1);
        assert_eq!(desc.closed_form_r_rank(), 1);

        let with_odd = CentralizerDescriptor::new(
            vec![f(FactorKind::FullOrthogonal, 2, 1), f(FactorKind::FullOrthogonal, 3, 1)],
            Some(DetConstraint { terms }),
        )
        .unwrap();
        assert_eq!(weyl_quotient(&with_odd, opts).unwrap().rank, 1);
    }

    #[test]
    fn bounds_are_enforced() {
        let big = CentralizerDescriptor::new(vec![f(FactorKind::GeneralLinear, 11, 1)], None).unwrap();
        assert!(matches!(
            weyl_quotient(&big, OracleOptions::default()),
            Err(Error::BoundExceeded(_))
        ));
        let capped = OracleOptions {
            max_torus_degree: 10,
            max_elements: 100,
        };
        let s6 = CentralizerDescriptor::new(vec![f(FactorKind::GeneralLinear, 6, 1)], None).unwrap();
        assert!(matches!(weyl_quotient(&s6, capped), Err(Error::BoundExceeded(_))));
    }
}
