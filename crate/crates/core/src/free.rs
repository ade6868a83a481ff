//! Noncommutative polynomials in free generators `g1, …, gn`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::{monomial_text, Coeff};
use crate::scalar::Scalar;

/// A monomial in the free generators, as 0-based generator indices.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct GenWord(pub Vec<u8>);

impl GenWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GenWord(v)
    }

    /// How many times generator `i` occurs.
    pub fn occurrences(&self, i: usize) -> usize {
        self.0.iter().filter(|&&g| g as usize == i).count()
    }
}

impl Ord for GenWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GenWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let run = self.0[i..].iter().take_while(|&&h| h == g).count();
            if !first {
                f.write_str("*")?;
            }
            write!(f, "{}", monomial_text(&Scalar::one(), run, &format!("g{}", g + 1)))?;
            first = false;
            i += run;
        }
        Ok(())
    }
}

/// `Σ a_v v` over generator words `v`, finitely supported.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreePoly {
    terms: BTreeMap<GenWord, Scalar>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn one() -> Self {
        Self::term(Scalar::one(), GenWord::default())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, GenWord::default())
    }

    pub fn term(c: Scalar, v: GenWord) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(v, c);
        }
        FreePoly { terms }
    }

    /// The generator `g_{i+1}`.
    pub fn generator(i: usize) -> Self {
        Self::term(Scalar::one(), GenWord(vec![i as u8]))
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (GenWord, Scalar)>) -> Self {
        let mut out = FreePoly::zero();
        for (v, c) in iter {
            out.add_term(v, c);
        }
        out
    }

    fn add_term(&mut self, v: GenWord, c: Scalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(v) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(GenWord::len).max()
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> FreePoly {
        FreePoly {
            terms: self.terms.iter().map(|(v, c)| (v.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (v, a) in &self.terms {
            for (u, b) in &other.terms {
                out.add_term(v.concat(u), a * b);
            }
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&GenWord, &Scalar) -> Scalar) -> FreePoly {
        FreePoly::from_terms(self.terms.iter().map(|(v, c)| (v.clone(), f(v, c))))
    }

    pub fn truncate(&self, max_degree: usize) -> (FreePoly, bool) {
        let lost = self.terms.keys().any(|v| v.len() > max_degree);
        let kept = FreePoly {
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| v.len() <= max_degree)
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect(),
        };
        (kept, lost)
    }

    /// `Σ |a_v| ρ^{|v|}`.
    pub fn weighted_l1(&self, rho: f64) -> f64 {
        self.terms
            .iter()
            .map(|(v, c)| c.modulus() * rho.powi(v.len() as i32))
            .sum()
    }
}

impl fmt::Debug for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreePoly({self})")
    }
}

/// Canonical text, highest words first: `3*g1*g2 + g2^2 - 1`.
impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (v, c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            let shown = if negative && !first { -c } else { c.clone() };
            if !first {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if v.is_empty() {
                f.write_str(&shown.fmt_coeff())?;
            } else if shown.is_one() {
                write!(f, "{v}")?;
            } else if (-shown.clone()).is_one() {
                write!(f, "-{v}")?;
            } else {
                write!(f, "{}*{v}", shown.fmt_coeff())?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn noncommutative_product() {
        let g1 = FreePoly::generator(0);
        let g2 = FreePoly::generator(1);
        assert_ne!(g1.mul(&g2), g2.mul(&g1));
        let sum = g1.mul(&g2).add(&g2.mul(&g1).neg());
        assert_eq!(sum.terms().count(), 2);
        assert!(sum.add(&sum.neg()).is_zero());
    }

    #[test]
    fn display_and_norm() {
        let g1 = FreePoly::generator(0);
        let g2 = FreePoly::generator(1);
        let f = FreePoly::constant(int(3)).mul(&g1).add(&g2.mul(&g2));
        assert_eq!(f.to_string(), "g2^2 + 3*g1");
        assert_eq!(f.weighted_l1(1.0), 4.0);
        assert_eq!(g1.mul(&g2).weighted_l1(2.0), 4.0);
        assert_eq!(FreePoly::one().weighted_l1(7.0), 1.0);
    }
}
