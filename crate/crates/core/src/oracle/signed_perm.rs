use std::collections::{HashSet, VecDeque};
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A signed permutation of `{0, .., k-1}`: basis vector `e_x` goes to
/// `±e_{perm[x]}`, with the minus sign when bit `x` of `flips` is set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: SmallVec<[u8; 16]>,
    flips: u32,
}

pub const MAX_DEGREE: usize = 32;

impl SignedPerm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Self {
            perm: (0..degree as u8).collect(),
            flips: 0,
        }
    }

    pub fn transposition(degree: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(degree);
        p.perm.swap(i, j);
        p
    }

    /// Negates the listed coordinates.
    pub fn sign_change(degree: usize, coords: &[usize]) -> Self {
        let mut p = Self::identity(degree);
        for &c in coords {
            p.flips ^= 1 << c;
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.flips == 0 && self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Number of negated coordinates in `range`.
    pub fn sign_count_in(&self, range: std::ops::Range<usize>) -> u32 {
        let width = range.end - range.start;
        if width == 0 {
            return 0;
        }
        let mask = if width >= 32 { u32::MAX } else { (1u32 << width) - 1 };
        ((self.flips >> range.start) & mask).count_ones()
    }

    pub fn sign_count(&self) -> u32 {
        self.flips.count_ones()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        debug_assert_eq!(self.degree(), other.degree());
        let mut perm = SmallVec::with_capacity(other.perm.len());
        let mut flips = other.flips;
        for &t in &other.perm {
            perm.push(self.perm[t as usize]);
        }
        for (x, &t) in other.perm.iter().enumerate() {
            flips ^= ((self.flips >> t) & 1) << x;
        }
        SignedPerm { perm, flips }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut perm: SmallVec<[u8; 16]> = SmallVec::from_elem(0, self.perm.len());
        let mut flips = 0;
        for (x, &t) in self.perm.iter().enumerate() {
            perm[t as usize] = x as u8;
            flips |= ((self.flips >> x) & 1) << t;
        }
        SignedPerm { perm, flips }
    }

    /// Places `self` on coordinates `offset..offset+degree` of a larger space.
    pub fn embed(&self, offset: usize, total_degree: usize) -> SignedPerm {
        let mut out = SignedPerm::identity(total_degree);
        for (x, &t) in self.perm.iter().enumerate() {
            out.perm[offset + x] = offset as u8 + t;
        }
        out.flips = self.flips << offset;
        out
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (x, &t) in self.perm.iter().enumerate() {
            if x > 0 {
                f.write_str(" ")?;
            }
            let sign = if (self.flips >> x) & 1 == 1 { "-" } else { "" };
            write!(f, "{sign}{}", t + 1)?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityFilter {
    /// Only elements with an even number of sign changes.
    EvenSignCount,
}

/// A finite group of signed permutations, stored as its full element list.
#[derive(Debug, Clone)]
pub struct SignedPermGroup {
    degree: usize,
    generators: Vec<SignedPerm>,
    elements: Vec<SignedPerm>,
    index: HashSet<SignedPerm>,
    parity_filter: Option<ParityFilter>,
}

impl SignedPermGroup {
    /// Breadth-first closure of `generators`, failing once more than `cap`
    /// elements have been found.
    pub fn generate(degree: usize, generators: Vec<SignedPerm>, cap: usize) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::BoundExceeded(format!(
                "degree {degree} exceeds {MAX_DEGREE}"
            )));
        }
        let identity = SignedPerm::identity(degree);
        let mut index = HashSet::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if index.insert(y.clone()) {
                    if index.len() > cap {
                        return Err(Error::BoundExceeded(format!(
                            "group on {degree} letters has more than {cap} elements"
                        )));
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(Self {
            degree,
            generators,
            elements,
            index,
            parity_filter: None,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, Vec::new(), 1).expect("trivial group")
    }

    fn transpositions(k: usize) -> Vec<SignedPerm> {
        (0..k.saturating_sub(1))
            .map(|i| SignedPerm::transposition(k, i, i + 1))
            .collect()
    }

    /// `S_k`, the Weyl group of `GL(k)`.
    pub fn symmetric(k: usize, cap: usize) -> Result<Self> {
        Self::generate(k, Self::transpositions(k), cap)
    }

    /// `B_k = (Z/2)^k ⋊ S_k`, the Weyl group of `Sp(2k)` and `SO(2k+1)`.
    pub fn hyperoctahedral(k: usize, cap: usize) -> Result<Self> {
        let mut gens = Self::transpositions(k);
        if k > 0 {
            gens.push(SignedPerm::sign_change(k, &[0]));
        }
        Self::generate(k, gens, cap)
    }

    /// `D_k`, the even-sign-change subgroup of `B_k` and Weyl group of `SO(2k)`.
    pub fn even_signed(k: usize, cap: usize) -> Result<Self> {
        let mut gens = Self::transpositions(k);
        if k > 1 {
            gens.push(SignedPerm::sign_change(k, &[0, 1]));
        }
        let mut g = Self::generate(k, gens, cap)?;
        debug_assert!(g.elements.iter().all(|x| x.sign_count() % 2 == 0));
        g.parity_filter = Some(ParityFilter::EvenSignCount);
        Ok(g)
    }

    /// Direct product of groups acting on consecutive coordinate blocks.
    pub fn product(groups: &[&SignedPermGroup], cap: usize) -> Result<Self> {
        let degree: usize = groups.iter().map(|g| g.degree).sum();
        let mut gens = Vec::new();
        let mut offset = 0;
        for g in groups {
            gens.extend(g.generators.iter().map(|x| x.embed(offset, degree)));
            offset += g.degree;
        }
        Self::generate(degree, gens, cap)
    }

    /// The elements satisfying `keep`; the caller asserts they form a subgroup.
    pub fn filter(&self, keep: impl Fn(&SignedPerm) -> bool) -> Self {
        let elements: Vec<SignedPerm> = self.elements.iter().filter(|x| keep(x)).cloned().collect();
        Self {
            degree: self.degree,
            generators: Vec::new(),
            index: elements.iter().cloned().collect(),
            elements,
            parity_filter: None,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn parity_filter(&self) -> Option<ParityFilter> {
        self.parity_filter
    }

    pub fn contains(&self, x: &SignedPerm) -> bool {
        self.index.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &SignedPermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|x| other.contains(x))
    }

    /// Left-coset representatives of `sub` in `self`.
    pub fn coset_representatives(&self, sub: &SignedPermGroup) -> Vec<SignedPerm> {
        let mut seen: HashSet<&SignedPerm> = HashSet::with_capacity(self.order());
        let mut reps = Vec::new();
        for g in &self.elements {
            if seen.contains(g) {
                continue;
            }
            for h in &sub.elements {
                let gh = g.compose(h);
                if let Some(found) = self.index.get(&gh) {
                    seen.insert(found);
                }
            }
            reps.push(g.clone());
        }
        reps
    }

    /// Rank of `self / sub`, checking that `sub` is a normal subgroup and
    /// the quotient is elementary abelian of exponent 2.
    pub fn elementary_quotient_rank(&self, sub: &SignedPermGroup) -> Result<u32> {
        let fail = |why: String| Err(Error::NonElementaryQuotient(why));
        if !sub.is_subgroup_of(self) {
            return fail("W0 is not contained in W".into());
        }
        let reps = self.coset_representatives(sub);
        if reps.len() * sub.order() != self.order() {
            return fail(format!(
                "{} cosets of size {} do not cover {} elements",
                reps.len(),
                sub.order(),
                self.order()
            ));
        }
        for r in &reps {
            let r_inv = r.inverse();
            if !self.contains(&r_inv) {
                return fail(format!("W is not closed under inverses at {r:?}"));
            }
            if sub.elements.iter().any(|h| !sub.contains(&r.compose(h).compose(&r_inv))) {
                return fail(format!("W0 is not normalized by {r:?}"));
            }
            if !sub.contains(&r.compose(r)) {
                return fail(format!("{r:?} has order > 2 modulo W0"));
            }
            for s in &reps {
                let rs = r.compose(s);
                if !self.contains(&rs) {
                    return fail(format!("W is not closed: {r:?} ∘ {s:?}"));
                }
                let commutator = rs.compose(&r_inv).compose(&s.inverse());
                if !sub.contains(&commutator) {
                    return fail(format!("{r:?} and {s:?} do not commute modulo W0"));
                }
            }
        }
        if !reps.len().is_power_of_two() {
            return fail(format!("quotient of order {}", reps.len()));
        }
        Ok(reps.len().trailing_zeros())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1_000_000;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn composition_and_inverse() {
        let t = SignedPerm::transposition(3, 0, 1);
        let f = SignedPerm::sign_change(3, &[0]);
        let tf = t.compose(&f);
        assert!(tf.compose(&tf.inverse()).is_identity());
        assert!(tf.inverse().compose(&tf).is_identity());
        // f first: e0 -> -e0, then t: -e0 -> -e1.
        assert_eq!(format!("{tf:?}"), "[-2 1 3]");
        let ft = f.compose(&t);
        assert_eq!(format!("{ft:?}"), "[2 -1 3]");
    }

    #[test]
    fn composition_is_associative_on_b3() {
        let b3 = SignedPermGroup::hyperoctahedral(3, CAP).unwrap();
        let xs = b3.elements();
        for a in xs.iter().step_by(5) {
            for b in xs.iter().step_by(7) {
                for c in xs.iter().step_by(11) {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn group_orders() {
        for k in 0..=5 {
            assert_eq!(SignedPermGroup::symmetric(k, CAP).unwrap().order(), factorial(k));
            let b = SignedPermGroup::hyperoctahedral(k, CAP).unwrap();
            assert_eq!(b.order(), (1 << k) * factorial(k));
            let d = SignedPermGroup::even_signed(k, CAP).unwrap();
            let expected = if k == 0 { 1 } else { (1 << (k - 1)) * factorial(k) };
            assert_eq!(d.order(), expected, "D_{k}");
            assert!(d.is_subgroup_of(&b));
            assert_eq!(d.parity_filter(), Some(ParityFilter::EvenSignCount));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = SignedPermGroup::symmetric(6, 100).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded(_)));
    }

    #[test]
    fn quotient_ranks() {
        for k in 1..=4 {
            let b = SignedPermGroup::hyperoctahedral(k, CAP).unwrap();
            let d = SignedPermGroup::even_signed(k, CAP).unwrap();
            assert_eq!(b.elementary_quotient_rank(&d).unwrap(), 1);
            assert_eq!(b.elementary_quotient_rank(&b).unwrap(), 0);
        }
        // S_3 modulo the trivial group is not elementary abelian.
        let s3 = SignedPermGroup::symmetric(3, CAP).unwrap();
        let err = s3
            .elementary_quotient_rank(&SignedPermGroup::trivial(3))
            .unwrap_err();
        assert!(matches!(err, Error::NonElementaryQuotient(_)));
    }

    #[test]
    fn product_of_blocks() {
        let b1 = SignedPermGroup::hyperoctahedral(1, CAP).unwrap();
        let s2 = SignedPermGroup::symmetric(2, CAP).unwrap();
        let p = SignedPermGroup::product(&[&b1, &s2, &b1], CAP).unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.order(), 2 * 2 * 2);
        assert!(p.elements().iter().all(|x| x.sign_count_in(1..3) == 0));
    }
}
