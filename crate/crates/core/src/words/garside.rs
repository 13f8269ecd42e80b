//! Garside left-greedy normal form for braid words.
//!
//! A braid is written as `Delta^p x_1 .. x_k` where `Delta` is the positive
//! half twist, each `x_i` is a permutation braid (neither trivial nor
//! `Delta`), and every adjacent pair is left-weighted: the starting set of
//! `x_{i+1}` is contained in the finishing set of `x_i`. The form is unique,
//! so braid equality is comparison of forms.
//!
//! Permutation braids are identified with permutations; `pi(i)` is the end
//! position of the strand starting at `i`. In these coordinates
//! `sigma_i` left-divides a permutation braid iff `pi` descends at `i`, and
//! right-divides it iff `pi^-1` does.

use super::{BraidWord, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> Self {
        let n = word.strands();
        let mut delta_power: i64 = 0;
        let mut factors: Vec<Perm> = Vec::new();
        for &l in word.letters() {
            let i = l.unsigned_abs() as usize - 1;
            if l > 0 {
                factors.push(Perm::transposition(n, i));
            } else {
                // sigma_i^-1 = Delta^-1 . (Delta sigma_i^-1); pulling the
                // Delta^-1 to the front flips every factor accumulated so far.
                delta_power -= 1;
                for f in factors.iter_mut() {
                    *f = f.flip();
                }
                factors.push(Perm::delta(n).then_transposition(i));
            }
        }
        let mut nf = Self {
            strands: n,
            delta_power,
            factors: factors.into_iter().map(|p| Permutation::from_map(p.map).expect("bijection")).collect(),
        };
        nf.normalize();
        nf
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// `Some(k)` when the braid equals `Delta^k` exactly.
    pub fn as_delta_power(&self) -> Option<i64> {
        if self.factors.is_empty() {
            Some(self.delta_power)
        } else {
            None
        }
    }

    /// Number of permutation-braid factors (canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    fn normalize(&mut self) {
        let n = self.strands;
        let mut factors: Vec<Perm> =
            self.factors.iter().map(|p| Perm { n, map: p.map().to_vec() }).collect();
        loop {
            // local sliding sweeps until every adjacent pair is left-weighted
            let mut changed = true;
            while changed {
                changed = false;
                let mut k = 0;
                while k + 1 < factors.len() {
                    let (left, right) = factors.split_at_mut(k + 1);
                    let a = &mut left[k];
                    let b = &mut right[0];
                    while let Some(i) = slide_index(a, b) {
                        a.mul_transposition_right(i);
                        b.mul_transposition_left(i);
                        changed = true;
                    }
                    k += 1;
                }
                factors.retain(|f| !f.is_identity());
            }
            // absorb any full-twist factors into the Delta power
            if let Some(k) = factors.iter().position(|f| f.is_delta()) {
                factors.remove(k);
                for f in factors.iter_mut().take(k) {
                    *f = f.flip();
                }
                self.delta_power += 1;
                continue;
            }
            break;
        }
        self.factors = factors
            .into_iter()
            .map(|p| Permutation::from_map(p.map).expect("bijection"))
            .collect();
    }
}

/// Smallest generator index movable from the head of `b` to the tail of `a`,
/// or `None` when the pair is left-weighted.
fn slide_index(a: &Perm, b: &Perm) -> Option<usize> {
    let ainv = a.invert();
    (0..a.n - 1).find(|&i| b.map[i] > b.map[i + 1] && ainv.map[i] < ainv.map[i + 1])
}

/// Internal mutable permutation with braid-specific helpers.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Perm {
    n: usize,
    map: Vec<usize>,
}

impl Perm {
    fn transposition(n: usize, i: usize) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i, i + 1);
        Self { n, map }
    }

    fn delta(n: usize) -> Self {
        Self { n, map: (0..n).rev().collect() }
    }

    fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    fn is_delta(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v == self.n - 1 - i)
    }

    fn invert(&self) -> Self {
        let mut inv = vec![0; self.n];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Self { n: self.n, map: inv }
    }

    /// `self . sigma_i`: swap values `i, i+1` in the image array.
    fn mul_transposition_right(&mut self, i: usize) {
        for v in self.map.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    /// `sigma_i^-1 . self` (valid when `sigma_i` left-divides): swap entries.
    fn mul_transposition_left(&mut self, i: usize) {
        self.map.swap(i, i + 1);
    }

    /// `self` then `sigma_i`.
    fn then_transposition(mut self, i: usize) -> Self {
        self.mul_transposition_right(i);
        self
    }

    /// Conjugation by `Delta`: `x -> omega(pi(omega(x)))`.
    fn flip(&self) -> Self {
        let n = self.n;
        let mut map = vec![0; n];
        for x in 0..n {
            map[x] = n - 1 - self.map[n - 1 - x];
        }
        Self { n, map }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{act_on_free, compose, half_twist, BraidWord, FreeWord};

    fn bw(n: usize, ls: &[i32]) -> BraidWord {
        BraidWord::new(n, ls.to_vec()).unwrap()
    }

    /// Artin's faithful action as the independent equality oracle.
    fn action_eq(a: &BraidWord, b: &BraidWord) -> bool {
        let n = a.strands();
        (1..=n).all(|i| {
            let g = FreeWord::generator(n, i as i32).unwrap();
            act_on_free(&g, a).unwrap() == act_on_free(&g, b).unwrap()
        })
    }

    #[test]
    fn braid_relation_normal_forms_agree() {
        assert!(bw(3, &[1, 2, 1]).braid_eq(&bw(3, &[2, 1, 2])));
        assert!(bw(4, &[1, 3]).braid_eq(&bw(4, &[3, 1])));
        assert!(!bw(3, &[1]).braid_eq(&bw(3, &[2])));
    }

    #[test]
    fn half_twist_is_delta() {
        let nf = half_twist(4).unwrap().normal_form();
        assert_eq!(nf.as_delta_power(), Some(1));
        let nf2 = half_twist(4).unwrap().pow(2).normal_form();
        assert_eq!(nf2.as_delta_power(), Some(2));
    }

    #[test]
    fn inverse_gives_identity() {
        let w = bw(4, &[1, -2, 3, 1, 1, -3]);
        let prod = compose(&w, &w.inverse()).unwrap();
        assert!(prod.normal_form().is_identity());
    }

    #[test]
    fn negative_delta_power() {
        let nf = bw(3, &[-1]).normal_form();
        assert_eq!(nf.delta_power(), -1);
        assert_eq!(nf.canonical_length(), 1);
    }

    #[test]
    fn delta_squared_is_central() {
        let d2 = half_twist(4).unwrap().pow(2);
        for i in 1..=3 {
            let s = bw(4, &[i]);
            assert!(compose(&d2, &s).unwrap().braid_eq(&compose(&s, &d2).unwrap()));
        }
    }

    #[test]
    fn block_swapper_equals_delta() {
        // (s2 s3 s1)^2 is a positive 6-letter word with the half-twist
        // permutation, hence the half twist itself.
        assert!(bw(4, &[2, 3, 1]).pow(2).braid_eq(&half_twist(4).unwrap()));
    }

    #[test]
    fn normal_form_matches_action_oracle_on_fixed_words() {
        let pairs = [
            (bw(4, &[1, 2, 1, 3, 2, 1]), half_twist(4).unwrap()),
            (bw(4, &[1, 2, -1, 2]), bw(4, &[2, -1, 2, 2, -2, 1, 2, -1, -2, 2])),
            (bw(5, &[4, 1, -2]), bw(5, &[1, 4, -2])),
        ];
        for (a, b) in pairs {
            assert_eq!(a.braid_eq(&b), action_eq(&a, &b));
        }
    }

    #[test]
    fn normal_form_matches_action_oracle_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6a5);
        for _ in 0..200 {
            let n = rng.gen_range(2..=5usize);
            let len = rng.gen_range(0..=10usize);
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..n as i32);
                    if rng.gen_bool(0.5) { i } else { -i }
                })
                .collect();
            let a = BraidWord::new(n, letters).unwrap();
            // insert a relation-preserving rewrite: append w^-1 w
            let extra: Vec<i32> = (0..rng.gen_range(0..=4usize))
                .map(|_| {
                    let i = rng.gen_range(1..n as i32);
                    if rng.gen_bool(0.5) { i } else { -i }
                })
                .collect();
            let noise = BraidWord::new(n, extra).unwrap();
            let b = compose(&compose(&a, &noise).unwrap(), &noise.inverse()).unwrap();
            assert!(a.braid_eq(&b));
            assert!(action_eq(&a, &b));
            // and a genuinely different word most of the time
            let c = compose(&a, &BraidWord::generator(n, 1).unwrap()).unwrap();
            assert_eq!(a.braid_eq(&c), action_eq(&a, &c));
        }
    }
}
