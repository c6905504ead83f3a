use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Elem;

/// A subset of a universe `0..n`, kept as a membership vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    member: Vec<bool>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            member: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        Subset {
            member: vec![true; n],
        }
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Subset::empty(n);
        for x in members {
            s.insert(x);
        }
        s
    }

    pub fn from_mask(member: Vec<bool>) -> Self {
        Subset { member }
    }

    pub fn universe_size(&self) -> usize {
        self.member.len()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, x: Elem) -> bool {
        let fresh = !self.member[x];
        self.member[x] = true;
        fresh
    }

    pub fn remove(&mut self, x: Elem) {
        self.member[x] = false;
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn mask(&self) -> &[bool] {
        &self.member
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn complement(&self) -> Subset {
        Subset {
            member: self.member.iter().map(|b| !b).collect(),
        }
    }
}
