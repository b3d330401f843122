// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic on the symmetric group S5.
//!
//! Elements are labelled `1..=5` at every public boundary. Products are read
//! left to right: `p.compose(&q)` applies `p` first and then `q`, the same
//! order in which gates run in a circuit and instructions run in a branching
//! program.
//!
//! Text form is cycle notation: `()` for the identity, `(1 2 3 4 5)`,
//! `(1 2)(3 4)`. Compact cycles such as `(12345)` are accepted on input.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A permutation of `{1, 2, 3, 4, 5}`.
///
/// Stored as zero-based images: `map[x]` is the image of element `x + 1`,
/// minus one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm5 {
    map: [u8; 5],
}

/// A swap of two distinct elements, labelled `1..=5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transposition {
    a: u8,
    b: u8,
}

impl Transposition {
    pub fn new(a: u8, b: u8) -> Result<Self> {
        if a == b || !(1..=5).contains(&a) || !(1..=5).contains(&b) {
            return Err(Error::InvalidParameter(format!(
                "transposition ({a} {b}) needs two distinct labels in 1..=5"
            )));
        }
        Ok(Transposition {
            a: a.min(b),
            b: a.max(b),
        })
    }

    /// Smaller label.
    pub fn a(self) -> u8 {
        self.a
    }

    /// Larger label.
    pub fn b(self) -> u8 {
        self.b
    }

    pub fn to_perm(self) -> Perm5 {
        let mut map = [0, 1, 2, 3, 4];
        map.swap(usize::from(self.a - 1), usize::from(self.b - 1));
        Perm5 { map }
    }
}

impl Perm5 {
    pub const IDENTITY: Perm5 = Perm5 {
        map: [0, 1, 2, 3, 4],
    };

    pub fn identity() -> Self {
        Self::IDENTITY
    }

    /// Build from the 1-based image array, e.g. `[2, 3, 4, 5, 1]` for `(1 2 3 4 5)`.
    pub fn from_images(images: [u8; 5]) -> Result<Self> {
        let mut seen = [false; 5];
        let mut map = [0u8; 5];
        for (slot, &img) in map.iter_mut().zip(images.iter()) {
            if !(1..=5).contains(&img) || seen[usize::from(img - 1)] {
                return Err(Error::InvalidParameter(format!(
                    "{images:?} is not a permutation of 1..=5"
                )));
            }
            seen[usize::from(img - 1)] = true;
            *slot = img - 1;
        }
        Ok(Perm5 { map })
    }

    /// Build a single cycle `(c0 c1 ... ck)`, labels 1-based.
    pub fn cycle(elements: &[u8]) -> Result<Self> {
        let mut map = [0, 1, 2, 3, 4];
        let mut seen = [false; 5];
        for &e in elements {
            if !(1..=5).contains(&e) || seen[usize::from(e - 1)] {
                return Err(Error::InvalidParameter(format!(
                    "cycle {elements:?} repeats a label or leaves 1..=5"
                )));
            }
            seen[usize::from(e - 1)] = true;
        }
        for (k, &e) in elements.iter().enumerate() {
            let next = elements[(k + 1) % elements.len()];
            map[usize::from(e - 1)] = next - 1;
        }
        Ok(Perm5 { map })
    }

    /// 1-based image array.
    pub fn images(&self) -> [u8; 5] {
        self.map.map(|x| x + 1)
    }

    /// Image of the 1-based label `x`.
    pub fn apply(&self, x: u8) -> u8 {
        self.map[usize::from(x - 1)] + 1
    }

    /// Zero-based image, for positional use on wires.
    pub(crate) fn apply0(&self, x: usize) -> usize {
        usize::from(self.map[x])
    }

    /// Apply `self`, then `next`.
    pub fn compose(&self, next: &Perm5) -> Perm5 {
        Perm5 {
            map: self.map.map(|x| next.map[usize::from(x)]),
        }
    }

    pub fn inverse(&self) -> Perm5 {
        let mut map = [0u8; 5];
        for (x, &y) in self.map.iter().enumerate() {
            map[usize::from(y)] = x as u8;
        }
        Perm5 { map }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn is_five_cycle(&self) -> bool {
        let mut x = 0usize;
        for step in 1..=5 {
            x = usize::from(self.map[x]);
            if x == 0 {
                return step == 5;
            }
        }
        false
    }

    /// `by⁻¹ · self · by`, so that `self.conjugate(by)` relabels `self` through `by`.
    pub fn conjugate(&self, by: &Perm5) -> Perm5 {
        by.inverse().compose(self).compose(by)
    }

    /// `self · other · self⁻¹ · other⁻¹`.
    pub fn commutator(&self, other: &Perm5) -> Perm5 {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest label,
    /// ordered by that label.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut visited = [false; 5];
        let mut out = Vec::new();
        for start in 0..5 {
            if visited[start] || usize::from(self.map[start]) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cyc.push(x as u8 + 1);
                x = usize::from(self.map[x]);
            }
            out.push(cyc);
        }
        out
    }

    /// Transpositions whose left-to-right product is `self`; at most four.
    ///
    /// The cycle `(c1 c2 ... ck)` becomes `(c1 c2)(c1 c3)...(c1 ck)`.
    pub fn to_transpositions(&self) -> Vec<Transposition> {
        let mut out = Vec::with_capacity(4);
        for cyc in self.cycles() {
            for &other in &cyc[1..] {
                out.push(Transposition {
                    a: cyc[0].min(other),
                    b: cyc[0].max(other),
                });
            }
        }
        out
    }

    /// All 120 permutations, in lexicographic order of their image arrays.
    pub fn all() -> &'static [Perm5; 120] {
        static ALL: OnceLock<[Perm5; 120]> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut out = [Perm5::IDENTITY; 120];
            let mut k = 0;
            for a in 0..5u8 {
                for b in 0..5u8 {
                    for c in 0..5u8 {
                        for d in 0..5u8 {
                            for e in 0..5u8 {
                                let m = [a, b, c, d, e];
                                let mut seen = 0u8;
                                for &v in &m {
                                    seen |= 1 << v;
                                }
                                if seen == 0b11111 {
                                    out[k] = Perm5 { map: m };
                                    k += 1;
                                }
                            }
                        }
                    }
                }
            }
            debug_assert_eq!(k, 120);
            out
        })
    }

    /// Lexicographic rank of the image array, in `0..120`.
    pub fn rank(&self) -> usize {
        let mut rank = 0;
        let mut remaining: Vec<u8> = (0..5).collect();
        for (pos, &v) in self.map.iter().enumerate() {
            let idx = remaining.iter().position(|&r| r == v).unwrap_or(0);
            rank += idx * factorial(4 - pos);
            remaining.remove(idx);
        }
        rank
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Default for Perm5 {
    fn default() -> Self {
        Self::IDENTITY
    }
}

/// Free-function form of [`Perm5::compose`].
pub fn compose(first: &Perm5, second: &Perm5) -> Perm5 {
    first.compose(second)
}

fn require_five_cycle(p: &Perm5) -> Result<()> {
    if p.is_five_cycle() {
        Ok(())
    } else {
        Err(Error::NotFiveCycle(p.to_string()))
    }
}

/// Some `τ` with `src.conjugate(&τ) == dst`; the first in lexicographic order.
pub fn find_conjugator(src: &Perm5, dst: &Perm5) -> Result<Perm5> {
    require_five_cycle(src)?;
    require_five_cycle(dst)?;
    Perm5::all()
        .iter()
        .find(|tau| src.conjugate(tau) == *dst)
        .copied()
        .ok_or_else(|| Error::NotFiveCycle(dst.to_string()))
}

/// Five-cycles `(γ, δ)` with `γ.commutator(&δ) == target`.
///
/// The first such pair in lexicographic order of `(γ, δ)` image arrays.
/// Results are computed once per target and cached.
pub fn find_and_pair(target: &Perm5) -> Result<(Perm5, Perm5)> {
    require_five_cycle(target)?;
    static PAIRS: OnceLock<Vec<Option<(Perm5, Perm5)>>> = OnceLock::new();
    let table = PAIRS.get_or_init(|| {
        let all = Perm5::all();
        let cycles: Vec<Perm5> = all.iter().copied().filter(Perm5::is_five_cycle).collect();
        let mut table = vec![None; 120];
        for g in &cycles {
            for d in &cycles {
                let c = g.commutator(d);
                if c.is_five_cycle() && table[c.rank()].is_none() {
                    table[c.rank()] = Some((*g, *d));
                }
            }
        }
        table
    });
    table[target.rank()].ok_or_else(|| Error::NotFiveCycle(target.to_string()))
}

impl fmt::Display for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cyc in cycles {
            f.write_str("(")?;
            for (k, e) in cyc.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm5{}", self)
    }
}

impl FromStr for Perm5 {
    type Err = Error;

    /// Parses cycle notation. Several cycles are multiplied left to right.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::parse(0, format!("permutation `{s}`: {msg}"));
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut acc = Perm5::IDENTITY;
        let mut rest = s;
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = body_start.find(')').ok_or_else(|| bad("missing `)`"))?;
            let body = &body_start[..close];
            let mut labels = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                if !tok.chars().all(|c| c.is_ascii_digit()) {
                    return Err(bad("labels must be digits 1-5"));
                }
                labels.extend(tok.bytes().map(|b| b - b'0'));
            }
            let cyc = Perm5::cycle(&labels).map_err(|_| bad("invalid cycle"))?;
            acc = acc.compose(&cyc);
            rest = body_start[close + 1..].trim_start();
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm5 {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        let a = p("(1 2 3 4 5)");
        let s = p("(1 2)");
        assert_eq!(Perm5::IDENTITY.compose(&a), a);
        assert!(s.compose(&s).is_identity());
        let w = s.compose(&a).compose(&s).compose(&a.inverse());
        assert_eq!(w.images(), [2, 5, 3, 4, 1]);
        assert_eq!(w, p("(1 2 5)"));
    }

    #[test]
    fn compose_is_left_to_right() {
        // (1 2) then (2 3): 1 -> 2 -> 3.
        let r = p("(1 2)").compose(&p("(2 3)"));
        assert_eq!(r.apply(1), 3);
        assert_eq!(r, p("(1 3 2)"));
    }

    #[test]
    fn inverse_examples() {
        assert!(Perm5::IDENTITY.inverse().is_identity());
        assert_eq!(p("(12345)").inverse().images(), [5, 1, 2, 3, 4]);
        assert_eq!(p("(12345)").inverse(), p("(1 5 4 3 2)"));
        assert_eq!(p("(1 2)").inverse(), p("(1 2)"));
    }

    #[test]
    fn five_cycle_detection() {
        assert!(p("(1 2 3 4 5)").is_five_cycle());
        assert!(!Perm5::IDENTITY.is_five_cycle());
        assert!(!p("(1 2)").is_five_cycle());
        assert!(!p("(1 2)(3 4 5)").is_five_cycle());
        let count = Perm5::all().iter().filter(|q| q.is_five_cycle()).count();
        assert_eq!(count, 24);
    }

    #[test]
    fn conjugate_examples() {
        let q = p("(1 3)(2 5)");
        assert_eq!(q.conjugate(&Perm5::IDENTITY), q);
        assert!(Perm5::IDENTITY.conjugate(&q).is_identity());
        let a = p("(1 2 3 4 5)");
        for tau in Perm5::all() {
            assert!(a.conjugate(tau).is_five_cycle());
        }
    }

    #[test]
    fn commutator_examples() {
        for q in Perm5::all() {
            assert!(q.commutator(&Perm5::IDENTITY).is_identity());
            assert!(q.commutator(q).is_identity());
        }
    }

    #[test]
    fn transposition_examples() {
        assert!(Perm5::IDENTITY.to_transpositions().is_empty());
        assert_eq!(
            p("(1 2)").to_transpositions(),
            vec![Transposition::new(1, 2).unwrap()]
        );
        let ts = p("(1 2 3 4 5)").to_transpositions();
        assert_eq!(ts.len(), 4);
        let back = ts
            .iter()
            .fold(Perm5::IDENTITY, |acc, t| acc.compose(&t.to_perm()));
        assert_eq!(back, p("(1 2 3 4 5)"));
    }

    #[test]
    fn transposition_rejects_bad_labels() {
        assert!(Transposition::new(2, 2).is_err());
        assert!(Transposition::new(0, 2).is_err());
        assert!(Transposition::new(1, 6).is_err());
    }

    #[test]
    fn find_conjugator_examples() {
        let a = p("(1 2 3 4 5)");
        assert!(find_conjugator(&a, &a).unwrap().is_identity());
        let dst = p("(1 3 5 2 4)");
        let tau = find_conjugator(&a, &dst).unwrap();
        assert_eq!(a.conjugate(&tau), dst);
        assert!(matches!(
            find_conjugator(&a, &p("(1 2)")),
            Err(Error::NotFiveCycle(_))
        ));
    }

    #[test]
    fn find_and_pair_examples() {
        let a = p("(1 2 3 4 5)");
        let (g, d) = find_and_pair(&a).unwrap();
        assert!(g.is_five_cycle() && d.is_five_cycle());
        assert_eq!(g.commutator(&d), a);
        assert!(!g.commutator(&d).is_identity());
        assert!(matches!(
            find_and_pair(&Perm5::IDENTITY),
            Err(Error::NotFiveCycle(_))
        ));
    }

    #[test]
    fn find_and_pair_is_lexicographically_first() {
        // Independent brute force over all 120 x 120 pairs in image order.
        for target in Perm5::all().iter().filter(|q| q.is_five_cycle()) {
            let mut expected = None;
            'outer: for g in Perm5::all() {
                for d in Perm5::all() {
                    if g.is_five_cycle() && d.is_five_cycle() && g.commutator(d) == *target {
                        expected = Some((*g, *d));
                        break 'outer;
                    }
                }
            }
            assert_eq!(find_and_pair(target).ok(), expected);
        }
    }

    #[test]
    fn all_is_sorted_and_ranked() {
        let all = Perm5::all();
        for w in all.windows(2) {
            assert!(w[0].images() < w[1].images());
        }
        for (k, q) in all.iter().enumerate() {
            assert_eq!(q.rank(), k);
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Perm5::IDENTITY.to_string(), "()");
        assert_eq!(p("(12345)").to_string(), "(1 2 3 4 5)");
        assert_eq!(p("(3 4)(1 2)").to_string(), "(1 2)(3 4)");
        assert_eq!(p("(2 3 1)").to_string(), "(1 2 3)");
        assert_eq!(p("(1)"), Perm5::IDENTITY);
        for q in Perm5::all() {
            assert_eq!(p(&q.to_string()), *q);
        }
        assert!("1 2".parse::<Perm5>().is_err());
        assert!("(1 2".parse::<Perm5>().is_err());
        assert!("(1 6)".parse::<Perm5>().is_err());
        assert!("(1 1)".parse::<Perm5>().is_err());
    }

    #[test]
    fn from_images_validates() {
        assert_eq!(Perm5::from_images([2, 3, 4, 5, 1]).unwrap(), p("(12345)"));
        assert!(Perm5::from_images([1, 1, 3, 4, 5]).is_err());
        assert!(Perm5::from_images([0, 1, 2, 3, 4]).is_err());
    }
}
