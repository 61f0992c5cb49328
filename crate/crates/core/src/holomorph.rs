//! `Hol(M(k,l)) = M(k,l) ⋊ Aut(M(k,l))`.
//!
//! A holomorph element is a pair `(g, f)` with product
//! `(g₁, f₁)(g₂, f₂) = (g₁ · f₁(g₂), f₁ ∘ f₂)`; it acts on the group by
//! `(g, f)·x = g · f(x)`. In the matrix-triple notation
//! `((b a; 0 1), r^i s^j, (d c; 0 1))` the pair is `g = r^i s^j t^a` and
//! `f = (b; d, c)`.
//!
//! [`HolTable`] re-encodes everything as dense indices for the enumeration
//! code, where `index = code(g) · |Aut| + position of f`; the index order is
//! the canonical total order on `(code(g), b, d, c)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{AutElement, GroupElement, MklParams, SizeGuard};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HolElement {
    pub g: GroupElement,
    pub f: AutElement,
}

impl MklParams {
    /// `|Hol(M(k,l))| = 2kl · φ(l)·k·φ(k)`.
    pub fn hol_size(&self) -> u128 {
        self.order() as u128 * self.automorphism_count()
    }

    pub fn hol_identity(&self) -> HolElement {
        HolElement {
            g: self.identity(),
            f: self.aut_identity(),
        }
    }

    pub fn hol_mul(&self, x: &HolElement, y: &HolElement) -> HolElement {
        HolElement {
            g: self.mul(&x.g, &self.aut_apply(&x.f, &y.g)),
            f: self.aut_compose(&x.f, &y.f),
        }
    }

    pub fn hol_inverse(&self, x: &HolElement) -> HolElement {
        let finv = self.aut_inverse(&x.f);
        HolElement {
            g: self.aut_apply(&finv, &self.inverse(&x.g)),
            f: finv,
        }
    }

    pub fn hol_pow(&self, x: &HolElement, mut exp: u64) -> HolElement {
        let mut acc = self.hol_identity();
        let mut base = *x;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.hol_mul(&acc, &base);
            }
            base = self.hol_mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn aut_order(&self, f: &AutElement) -> u64 {
        let id = self.aut_identity();
        let mut acc = *f;
        let mut n = 1;
        while acc != id {
            acc = self.aut_compose(&acc, f);
            n += 1;
        }
        n
    }

    /// Order of `(g, f)` as `ord(f) · ord(g')` where `(g, f)^{ord(f)} = (g', id)`.
    pub fn hol_order(&self, x: &HolElement) -> u64 {
        let m = self.aut_order(&x.f);
        let lifted = self.hol_pow(x, m);
        m * self.element_order(&lifted.g)
    }

    pub fn hol_order_by_iteration(&self, x: &HolElement) -> u64 {
        let e = self.hol_identity();
        let mut acc = *x;
        let mut n = 1;
        while acc != e {
            acc = self.hol_mul(&acc, x);
            n += 1;
        }
        n
    }

    /// `(g, f) · x = g · f(x)`.
    pub fn hol_act(&self, h: &HolElement, x: &GroupElement) -> GroupElement {
        self.mul(&h.g, &self.aut_apply(&h.f, x))
    }

    /// All elements ordered by `(code(g), b, d, c)`.
    pub fn all_hol_elements(&self, guard: &SizeGuard) -> Result<Vec<HolElement>> {
        guard.check(self.hol_size())?;
        let auts = self.all_automorphisms(&SizeGuard::unlimited())?;
        let elems = self.all_elements(&SizeGuard::unlimited())?;
        Ok(elems
            .iter()
            .flat_map(|&g| auts.iter().map(move |&f| HolElement { g, f }))
            .collect())
    }

    /// `(order, count)` over all of `Hol(M(k,l))`.
    pub fn order_census(&self, guard: &SizeGuard) -> Result<BTreeMap<u64, u64>> {
        let all = self.all_hol_elements(guard)?;
        let orders: Vec<u64> = all.par_iter().map(|h| self.hol_order(h)).collect();
        let mut census = BTreeMap::new();
        for o in orders {
            *census.entry(o).or_insert(0) += 1;
        }
        Ok(census)
    }

    pub fn to_paper_triple(&self, h: &HolElement) -> PaperTriple {
        PaperTriple {
            a: h.g.t,
            b: h.f.b,
            i: h.g.r,
            j: h.g.s as u64,
            c: h.f.c,
            d: h.f.d,
        }
    }

    pub fn from_paper_triple(&self, p: &PaperTriple) -> Result<HolElement> {
        let g = self.element(p.i as i128, p.j as i128, p.a as i128);
        let f = self.aut(p.b, p.d, p.c)?;
        Ok(HolElement { g, f })
    }
}

/// The matrix-triple coordinates `((b a; 0 1), r^i s^j, (d c; 0 1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PaperTriple {
    pub a: u64,
    pub b: u64,
    pub i: u64,
    pub j: u64,
    pub c: u64,
    pub d: u64,
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(n: u64) -> String {
    n.to_string()
        .chars()
        .map(|c| SUPERSCRIPTS[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Display for PaperTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Units modulo 1 are stored as 0; show them as 1.
        let unit = |u: u64| if u == 0 { 1 } else { u };
        write!(
            f,
            "(({} {};0 1), r{}s{}, ({} {};0 1))",
            unit(self.b),
            self.a,
            superscript(self.i),
            superscript(self.j),
            unit(self.d),
            self.c
        )
    }
}

impl FromStr for PaperTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotAGroup(format!("malformed holomorph triple: {s}"));
        let normalized: String = s
            .chars()
            .map(|c| match SUPERSCRIPTS.iter().position(|&x| x == c) {
                Some(d) => char::from_digit(d as u32, 10).unwrap(),
                None => c,
            })
            .collect();
        let nums: Vec<u64> = normalized
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        // b a 0 1 i j d c 0 1
        match nums.as_slice() {
            [b, a, 0, 1, i, j, d, c, 0, 1] => Ok(PaperTriple {
                a: *a,
                b: *b,
                i: *i,
                j: *j,
                c: *c,
                d: *d,
            }),
            _ => Err(bad()),
        }
    }
}

/// Dense index tables for `Hol(M(k,l))`.
#[derive(Debug, Clone)]
pub struct HolTable {
    params: MklParams,
    order: usize,
    n_aut: usize,
    auts: Vec<AutElement>,
    aut_index: HashMap<AutElement, u32>,
    identity_aut: u32,
    group_mul: Vec<u32>,
    // act[f * order + g] = f(g)
    act: Vec<u32>,
    compose: Vec<u32>,
    aut_inv: Vec<u32>,
}

impl HolTable {
    pub fn new(params: MklParams, guard: &SizeGuard) -> Result<Self> {
        guard.check(params.hol_size())?;
        let unlimited = SizeGuard::unlimited();
        let elems = params.all_elements(&unlimited)?;
        let auts = params.all_automorphisms(&unlimited)?;
        let order = elems.len();
        let n_aut = auts.len();
        let aut_index: HashMap<AutElement, u32> = auts
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i as u32))
            .collect();
        let identity_aut = aut_index[&params.aut_identity()];
        let group_mul = params.cayley_table(&unlimited)?;
        let act = auts
            .iter()
            .flat_map(|f| elems.iter().map(move |x| (f, x)))
            .map(|(f, x)| params.encode(&params.aut_apply(f, x)) as u32)
            .collect();
        let compose = auts
            .par_iter()
            .flat_map_iter(|f| auts.iter().map(|g| aut_index[&params.aut_compose(f, g)]))
            .collect();
        let aut_inv = auts
            .iter()
            .map(|f| aut_index[&params.aut_inverse(f)])
            .collect();
        Ok(Self {
            params,
            order,
            n_aut,
            auts,
            aut_index,
            identity_aut,
            group_mul,
            act,
            compose,
            aut_inv,
        })
    }

    pub fn params(&self) -> MklParams {
        self.params
    }

    pub fn size(&self) -> usize {
        self.order * self.n_aut
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn aut_count(&self) -> usize {
        self.n_aut
    }

    pub fn automorphisms(&self) -> &[AutElement] {
        &self.auts
    }

    pub fn identity(&self) -> u32 {
        self.identity_aut
    }

    pub fn identity_aut(&self) -> u32 {
        self.identity_aut
    }

    #[inline]
    pub fn pack(&self, g: u32, f: u32) -> u32 {
        g * self.n_aut as u32 + f
    }

    /// Group component (canonical code).
    #[inline]
    pub fn g_of(&self, x: u32) -> u32 {
        x / self.n_aut as u32
    }

    /// Automorphism component (position in [`HolTable::automorphisms`]).
    #[inline]
    pub fn f_of(&self, x: u32) -> u32 {
        x % self.n_aut as u32
    }

    #[inline]
    pub fn group_mul(&self, x: u32, y: u32) -> u32 {
        self.group_mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn aut_apply(&self, f: u32, g: u32) -> u32 {
        self.act[f as usize * self.order + g as usize]
    }

    #[inline]
    pub fn aut_compose(&self, f: u32, g: u32) -> u32 {
        self.compose[f as usize * self.n_aut + g as usize]
    }

    #[inline]
    pub fn aut_inverse(&self, f: u32) -> u32 {
        self.aut_inv[f as usize]
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let (g1, f1) = (self.g_of(x), self.f_of(x));
        let (g2, f2) = (self.g_of(y), self.f_of(y));
        self.pack(
            self.group_mul(g1, self.aut_apply(f1, g2)),
            self.aut_compose(f1, f2),
        )
    }

    pub fn inverse(&self, x: u32) -> u32 {
        let finv = self.aut_inverse(self.f_of(x));
        let g = self.g_of(x);
        // g⁻¹ is the unique y with g·y = e
        let ginv = (0..self.order as u32)
            .find(|&y| self.group_mul(g, y) == 0)
            .expect("group");
        self.pack(self.aut_apply(finv, ginv), finv)
    }

    /// `(g, f)` acting on the group element with code `x`.
    #[inline]
    pub fn act(&self, h: u32, x: u32) -> u32 {
        self.group_mul(self.g_of(h), self.aut_apply(self.f_of(h), x))
    }

    pub fn order_of(&self, x: u32) -> u64 {
        let e = self.identity();
        let mut acc = x;
        let mut n = 1;
        while acc != e {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    pub fn element(&self, x: u32) -> HolElement {
        HolElement {
            g: self.params.decode(self.g_of(x) as u64),
            f: self.auts[self.f_of(x) as usize],
        }
    }

    pub fn index(&self, h: &HolElement) -> Option<u32> {
        let f = *self.aut_index.get(&h.f)?;
        self.params
            .contains(&h.g)
            .then(|| self.pack(self.params.encode(&h.g) as u32, f))
    }

    pub fn index_of_aut(&self, f: &AutElement) -> Option<u32> {
        self.aut_index.get(f).copied()
    }
}
