use std::collections::HashMap;

use super::group::EffectiveGroup;
use super::GerstenError;

/// A finite set of group elements, stored once per equality class.
#[derive(Clone, Debug)]
pub struct ElementSet<E> {
    elements: Vec<E>,
    buckets: HashMap<u64, Vec<usize>>,
}

impl<E: Clone> ElementSet<E> {
    pub fn new() -> Self {
        ElementSet {
            elements: Vec::new(),
            buckets: HashMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn index_of<G: EffectiveGroup<Element = E>>(&self, target: &G, x: &E) -> Option<usize> {
        let bucket = self.buckets.get(&target.fingerprint(x))?;
        bucket
            .iter()
            .copied()
            .find(|&i| target.equal(&self.elements[i], x))
    }

    pub fn contains<G: EffectiveGroup<Element = E>>(&self, target: &G, x: &E) -> bool {
        self.index_of(target, x).is_some()
    }

    /// Inserts `x` unless an equal element is present; returns whether it was new.
    pub fn insert<G: EffectiveGroup<Element = E>>(&mut self, target: &G, x: E) -> bool {
        if self.contains(target, &x) {
            return false;
        }
        self.buckets
            .entry(target.fingerprint(&x))
            .or_default()
            .push(self.elements.len());
        self.elements.push(x);
        true
    }

    /// Whether `x · g` lies in the set for every element `x` and every `g`.
    pub fn is_closed_under<G: EffectiveGroup<Element = E>>(&self, target: &G, gens: &[E]) -> bool {
        self.elements.iter().all(|x| {
            gens.iter()
                .all(|g| self.contains(target, &target.multiply(x, g)))
        })
    }

    pub fn is_subset_of<G: EffectiveGroup<Element = E>>(
        &self,
        target: &G,
        other: &ElementSet<E>,
    ) -> bool {
        self.elements.iter().all(|x| other.contains(target, x))
    }
}

impl<E: Clone> Default for ElementSet<E> {
    fn default() -> Self {
        Self::new()
    }
}

/// Breadth-first closure of `{1}` under right multiplication by `gens`.
///
/// In a finite group this is the generated subgroup. Fails once more than
/// `cap` elements have been found.
pub fn closure<G: EffectiveGroup>(
    gens: &[G::Element],
    target: &G,
    cap: usize,
) -> Result<ElementSet<G::Element>, GerstenError> {
    let mut set = ElementSet::new();
    set.insert(target, target.identity());
    let mut frontier = vec![target.identity()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = target.multiply(x, g);
                if set.insert(target, y.clone()) {
                    if set.order() > cap {
                        return Err(GerstenError::ClosureOverflow { cap });
                    }
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gersten::SymmetricGroup;
    use crate::perm::Permutation;

    #[test]
    fn symmetric_group_orders() {
        let g = SymmetricGroup::new(4);
        let gens: Vec<_> = (2..=4)
            .map(|j| Permutation::transposition(4, 1, j))
            .collect();
        let s4 = closure(&gens, &g, 100).unwrap();
        assert_eq!(s4.order(), 24);
        assert!(s4.is_closed_under(&g, &gens));
        assert_eq!(
            closure(&gens, &g, 10).unwrap_err(),
            GerstenError::ClosureOverflow { cap: 10 }
        );
        assert_eq!(closure(&[], &g, 1).unwrap().order(), 1);
    }
}
