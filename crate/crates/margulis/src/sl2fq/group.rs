//! Finite groups given by a multiplication table, with the handful of
//! algorithms needed at |G| ≤ 2184.

use std::collections::HashMap;
use std::hash::Hash;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u16>,
    identity: u16,
    inverse: Vec<u16>,
}

impl FiniteGroup {
    /// Builds the table of a group closed under `mul`; panics when the
    /// elements are not closed or lack an identity.
    pub fn from_elements<T: Clone + Eq + Hash>(elements: &[T], mul: impl Fn(&T, &T) -> T) -> FiniteGroup {
        let n = elements.len();
        assert!(n > 0 && n <= u16::MAX as usize);
        let index: HashMap<&T, u16> = elements.iter().enumerate().map(|(i, e)| (e, i as u16)).collect();
        let mut table = vec![0u16; n * n];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                table[i * n + j] = *index.get(&mul(x, y)).expect("closed under multiplication");
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .expect("identity element") as u16;
        let mut inverse = vec![0u16; n];
        for x in 0..n {
            inverse[x] = (0..n).find(|&y| table[x * n + y] == identity).expect("inverse") as u16;
        }
        FiniteGroup { n, table, identity, inverse }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> u16 {
        self.identity
    }

    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.table[x as usize * self.n + y as usize]
    }

    pub fn inv(&self, x: u16) -> u16 {
        self.inverse[x as usize]
    }

    pub fn element_order(&self, x: u16) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: u16, x: u16) -> u16 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, x: u16, y: u16) -> u16 {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for x in 0..self.n as u16 {
            if seen[x as usize] {
                continue;
            }
            let mut class: Vec<u16> = (0..self.n as u16).map(|g| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y as usize] = true;
            }
            out.push(class);
        }
        out
    }

    /// The subgroup generated by `gens`, as a sorted element list.
    pub fn generate(&self, gens: &[u16]) -> Vec<u16> {
        let mut member = vec![false; self.n];
        member[self.identity as usize] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Whether the normal closure of every nontrivial conjugacy class is G.
    pub fn is_simple(&self) -> bool {
        if self.n == 1 {
            return false;
        }
        self.conjugacy_classes()
            .iter()
            .filter(|c| c[0] != self.identity)
            .all(|c| self.generate(c).len() == self.n)
    }

    fn normalizes(&self, g: u16, member: &[bool], sub: &[u16]) -> bool {
        sub.iter().all(|&x| member[self.conjugate(g, x) as usize])
    }

    /// A Sylow 2-subgroup: start from an element of largest 2-power order and
    /// extend by normalizing elements whose square lies in the subgroup.
    pub fn sylow2(&self) -> Vec<u16> {
        let target = 1usize << self.n.trailing_zeros();
        let start = (0..self.n as u16)
            .filter(|&x| self.element_order(x).is_power_of_two())
            .max_by_key(|&x| self.element_order(x))
            .unwrap_or(self.identity);
        let mut sub = self.generate(&[start]);
        while sub.len() < target {
            let mut member = vec![false; self.n];
            for &x in &sub {
                member[x as usize] = true;
            }
            let g = (0..self.n as u16)
                .find(|&g| !member[g as usize] && member[self.mul(g, g) as usize] && self.normalizes(g, &member, &sub))
                .expect("a non-Sylow 2-subgroup has a proper normalizer extension");
            let mut gens = sub.clone();
            gens.push(g);
            sub = self.generate(&gens);
        }
        sub
    }

    /// log₂ |H / ⟨[H,H], H²⟩| for a subgroup H.
    pub fn mod2_abelianization_rank(&self, sub: &[u16]) -> u32 {
        let mut gens = Vec::new();
        for &x in sub {
            gens.push(self.mul(x, x));
            for &y in sub {
                gens.push(self.commutator(x, y));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let frattini = self.generate(&gens);
        let index = sub.len() / frattini.len();
        debug_assert!(index.is_power_of_two());
        index.trailing_zeros()
    }

    pub fn is_abelian(&self, sub: &[u16]) -> bool {
        sub.iter().all(|&x| sub.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u16) -> FiniteGroup {
        let e: Vec<u16> = (0..n).collect();
        FiniteGroup::from_elements(&e, |a, b| (a + b) % n)
    }

    fn symmetric3() -> FiniteGroup {
        let mut perms = Vec::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    if a != b && b != c && a != c {
                        perms.push([a, b, c]);
                    }
                }
            }
        }
        FiniteGroup::from_elements(&perms, |x, y| [x[y[0] as usize], x[y[1] as usize], x[y[2] as usize]])
    }

    #[test]
    fn cyclic_groups() {
        assert!(cyclic(5).is_simple());
        assert!(!cyclic(6).is_simple());
        let g = cyclic(12);
        assert_eq!(g.sylow2().len(), 4);
        assert_eq!(g.mod2_abelianization_rank(&g.sylow2()), 1);
        assert_eq!(g.conjugacy_classes().len(), 12);
    }

    #[test]
    fn s3() {
        let g = symmetric3();
        assert!(!g.is_simple());
        assert_eq!(g.conjugacy_classes().len(), 3);
        let all: Vec<u16> = (0..6).collect();
        assert_eq!(g.mod2_abelianization_rank(&all), 1);
        assert_eq!(g.sylow2().len(), 2);
    }
}
