//! The groups `M(k,l) = D_2k × C_l` (k, l odd) in exponent coordinates.
//!
//! An element `r^i s^j t^m` is stored as `(i mod k, j mod 2, m mod l)`; the
//! relations `srs = r⁻¹`, `st = ts`, `rt = tr` give the twisted product
//! `(i₁,j₁,m₁)(i₂,j₂,m₂) = (i₁ + (-1)^{j₁} i₂, j₁ + j₂, m₁ + m₂)`.
//!
//! Automorphisms are triples `(b; d, c)` acting by `t ↦ t^b`, `r ↦ r^d`,
//! `s ↦ r^c s`. Because `D_2k` and `C_l` share no direct factor for odd k, l,
//! these exhaust `Aut(M(k,l))` even when `gcd(k, l) ≠ 1`.
//!
//! Cyclic (`k = 1`) and dihedral (`l = 1`) groups are the two corners of the
//! same parametrization.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{gcd, inverse_mod, lcm, reduce, totient};

/// Upper bound on the number of elements an enumeration may materialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub limit: u128,
}

impl SizeGuard {
    pub const DEFAULT_LIMIT: u128 = 100_000;

    pub fn new(limit: u128) -> Self {
        Self { limit }
    }

    pub fn unlimited() -> Self {
        Self { limit: u128::MAX }
    }

    pub fn check(&self, required: u128) -> Result<()> {
        if required > self.limit {
            Err(Error::SizeGuard {
                required,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeGuard {
    fn default() -> Self {
        Self::new(Self::DEFAULT_LIMIT)
    }
}

/// Identifies `M(k,l) = D_2k × C_l`, a group of order `2kl`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MklParams {
    k: u64,
    l: u64,
}

impl MklParams {
    pub fn new(k: u64, l: u64) -> Result<Self> {
        if k == 0 || l == 0 || k.is_multiple_of(2) || l.is_multiple_of(2) {
            return Err(Error::InvalidParams { k, l });
        }
        Ok(Self { k, l })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(1, n)
    }

    pub fn dihedral(n: u64) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    /// `N = k·l`, the odd part of the order.
    pub fn n(&self) -> u64 {
        self.k * self.l
    }

    pub fn order(&self) -> u64 {
        2 * self.n()
    }

    pub fn is_coprime(&self) -> bool {
        gcd(self.k, self.l) == 1
    }

    /// `|Aut(M(k,l))| = φ(l)·k·φ(k)`, which reads `φ(l)` when `k = 1`.
    pub fn automorphism_count(&self) -> u128 {
        let phi_l = totient(self.l).expect("l >= 1") as u128;
        let phi_k = totient(self.k).expect("k >= 1") as u128;
        phi_l * self.k as u128 * phi_k
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { r: 0, s: 0, t: 0 }
    }

    pub fn r(&self) -> GroupElement {
        self.element(1, 0, 0)
    }

    pub fn s(&self) -> GroupElement {
        self.element(0, 1, 0)
    }

    pub fn t(&self) -> GroupElement {
        self.element(0, 0, 1)
    }

    /// `r^i s^j t^m` with exponents reduced into canonical range.
    pub fn element(&self, i: i128, j: i128, m: i128) -> GroupElement {
        GroupElement {
            r: reduce(i, self.k),
            s: reduce(j, 2) as u8,
            t: reduce(m, self.l),
        }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.r < self.k && x.s < 2 && x.t < self.l
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let i = if x.s == 0 {
            x.r + y.r
        } else {
            x.r + self.k - y.r
        };
        GroupElement {
            r: i % self.k,
            s: x.s ^ y.s,
            t: (x.t + y.t) % self.l,
        }
    }

    pub fn inverse(&self, x: &GroupElement) -> GroupElement {
        if x.s == 0 {
            GroupElement {
                r: (self.k - x.r) % self.k,
                s: 0,
                t: (self.l - x.t) % self.l,
            }
        } else {
            GroupElement {
                r: x.r,
                s: 1,
                t: (self.l - x.t) % self.l,
            }
        }
    }

    /// Closed form: rotations have order `lcm(k/(i,k), l/(m,l))`; reflections
    /// square to `t^{2m}` and so have order `2·l/(m,l)`.
    pub fn element_order(&self, x: &GroupElement) -> u64 {
        let t_part = self.l / gcd(x.t, self.l);
        if x.s == 0 {
            lcm(self.k / gcd(x.r, self.k), t_part)
        } else {
            2 * t_part
        }
    }

    /// Order by repeated multiplication.
    pub fn element_order_by_iteration(&self, x: &GroupElement) -> u64 {
        let e = self.identity();
        let mut acc = *x;
        let mut n = 1;
        while acc != e {
            acc = self.mul(&acc, x);
            n += 1;
        }
        n
    }

    /// `i + k·(j + 2·m)`.
    pub fn encode(&self, x: &GroupElement) -> u64 {
        x.r + self.k * (x.s as u64 + 2 * x.t)
    }

    pub fn decode(&self, code: u64) -> GroupElement {
        let r = code % self.k;
        let rest = code / self.k;
        GroupElement {
            r,
            s: (rest % 2) as u8,
            t: rest / 2,
        }
    }

    /// All `2kl` elements in canonical-code order.
    pub fn all_elements(&self, guard: &SizeGuard) -> Result<Vec<GroupElement>> {
        guard.check(self.order() as u128)?;
        Ok((0..self.order()).map(|c| self.decode(c)).collect())
    }

    pub fn aut_identity(&self) -> AutElement {
        AutElement {
            b: 1 % self.l,
            d: 1 % self.k,
            c: 0,
        }
    }

    pub fn aut(&self, b: u64, d: u64, c: u64) -> Result<AutElement> {
        let f = AutElement {
            b: b % self.l,
            d: d % self.k,
            c: c % self.k,
        };
        if gcd(f.b, self.l) != 1 || gcd(f.d, self.k) != 1 {
            return Err(Error::NotAGroup(format!(
                "({b}; {d}, {c}) is not an automorphism of {self}"
            )));
        }
        Ok(f)
    }

    pub fn is_automorphism(&self, f: &AutElement) -> bool {
        f.b < self.l
            && f.d < self.k
            && f.c < self.k
            && gcd(f.b, self.l) == 1
            && gcd(f.d, self.k) == 1
    }

    /// `r^i s^j t^m ↦ r^{d·i + j·c} s^j t^{b·m}`.
    pub fn aut_apply(&self, f: &AutElement, x: &GroupElement) -> GroupElement {
        let k = self.k as u128;
        let l = self.l as u128;
        GroupElement {
            r: ((f.d as u128 * x.r as u128 + x.s as u128 * f.c as u128) % k) as u64,
            s: x.s,
            t: ((f.b as u128 * x.t as u128) % l) as u64,
        }
    }

    /// `f ∘ g`.
    pub fn aut_compose(&self, f: &AutElement, g: &AutElement) -> AutElement {
        let k = self.k as u128;
        let l = self.l as u128;
        AutElement {
            b: ((f.b as u128 * g.b as u128) % l) as u64,
            d: ((f.d as u128 * g.d as u128) % k) as u64,
            c: ((f.d as u128 * g.c as u128 + f.c as u128) % k) as u64,
        }
    }

    pub fn aut_inverse(&self, f: &AutElement) -> AutElement {
        let b = inverse_mod(f.b, self.l).expect("b is a unit");
        let d = inverse_mod(f.d, self.k).expect("d is a unit");
        let c = reduce(-((d as u128 * f.c as u128) as i128), self.k);
        AutElement { b, d, c }
    }

    /// Every automorphism, ordered by `(b, d, c)`.
    pub fn all_automorphisms(&self, guard: &SizeGuard) -> Result<Vec<AutElement>> {
        guard.check(self.automorphism_count())?;
        let units_l: Vec<u64> = (0..self.l).filter(|&b| gcd(b, self.l) == 1).collect();
        let units_k: Vec<u64> = (0..self.k).filter(|&d| gcd(d, self.k) == 1).collect();
        let mut out = Vec::with_capacity(self.automorphism_count() as usize);
        for &b in &units_l {
            for &d in &units_k {
                for c in 0..self.k {
                    out.push(AutElement { b, d, c });
                }
            }
        }
        Ok(out)
    }

    /// The multiplication table on canonical codes, row-major.
    pub fn cayley_table(&self, guard: &SizeGuard) -> Result<Vec<u32>> {
        let n = self.order();
        guard.check(n as u128 * n as u128)?;
        let elems = self.all_elements(&SizeGuard::unlimited())?;
        let mut table = Vec::with_capacity((n * n) as usize);
        for x in &elems {
            for y in &elems {
                table.push(self.encode(&self.mul(x, y)) as u32);
            }
        }
        Ok(table)
    }

    /// The isomorphism type of `M(k,l)` itself, as [`classify_order_2n_group`] sees it.
    pub fn type_tag(&self) -> TypeTag {
        if self.is_coprime() {
            // D_2k × C_l with coprime k, l is Z_N ⋊ Z_2 with the reflection
            // inverting exactly the k-part; k = 1 is cyclic.
            TypeTag::MType {
                k: self.k,
                l: self.l,
            }
        } else {
            let elems = self
                .all_elements(&SizeGuard::unlimited())
                .expect("unlimited");
            classify_order_2n_group(&elems, |x, y| self.mul(x, y)).expect("M(k,l) is a group")
        }
    }
}

impl fmt::Display for MklParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.k, self.l)
    }
}

/// `r^r s^s t^t` in exponent coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub r: u64,
    pub s: u8,
    pub t: u64,
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r^{} s^{} t^{}", self.r, self.s, self.t)
    }
}

/// `t ↦ t^b`, `r ↦ r^d`, `s ↦ r^c s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AutElement {
    pub b: u64,
    pub d: u64,
    pub c: u64,
}

impl fmt::Display for AutElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.b, self.d, self.c)
    }
}

/// Isomorphism type of a group of order `2N`, `N` odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TypeTag {
    /// `D_2k × C_l` with `gcd(k, l) = 1`.
    MType { k: u64, l: u64 },
    /// Anything whose odd part is not cyclic, described by its sorted
    /// `(element order, count)` profile.
    Other { order_profile: Vec<(u64, u64)> },
}

impl TypeTag {
    pub fn params(&self) -> Option<MklParams> {
        match *self {
            TypeTag::MType { k, l } => MklParams::new(k, l).ok(),
            TypeTag::Other { .. } => None,
        }
    }
}

impl From<MklParams> for TypeTag {
    fn from(p: MklParams) -> Self {
        p.type_tag()
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::MType { k, l } => write!(f, "M({k},{l})"),
            TypeTag::Other { order_profile } => {
                write!(f, "Other[")?;
                for (i, (o, c)) in order_profile.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{o}:{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Classifies an abstract group of order `2N`, `N` odd, given its elements and
/// multiplication.
///
/// The elements of odd order form the index-2 subgroup; it is cyclic iff some
/// element has order `N`. A cyclic odd part makes the group `Z_N ⋊ Z_2`, which
/// is `D_2k × C_l` with `l = |Z(G)|` (or cyclic, when abelian).
pub fn classify_order_2n_group<T, F>(elements: &[T], mul: F) -> Result<TypeTag>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let size = elements.len();
    if size == 0 || !size.is_multiple_of(2) || (size / 2).is_multiple_of(2) {
        return Err(Error::NotTwiceOdd(size));
    }
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    if index.len() != size {
        return Err(Error::NotAGroup("duplicate elements".into()));
    }
    let mut table = vec![0usize; size * size];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            let z = mul(x, y);
            table[i * size + j] = *index
                .get(&z)
                .ok_or_else(|| Error::NotAGroup("not closed under multiplication".into()))?;
        }
    }
    let identity = (0..size)
        .find(|&e| (0..size).all(|x| table[e * size + x] == x && table[x * size + e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity".into()))?;

    let orders: Vec<u64> = (0..size)
        .map(|x| {
            let mut acc = x;
            let mut n = 1u64;
            while acc != identity {
                acc = table[acc * size + x];
                n += 1;
                if n as usize > size {
                    break;
                }
            }
            n
        })
        .collect();
    if orders.iter().any(|&o| o as usize > size) {
        return Err(Error::NotAGroup("element of infinite order".into()));
    }

    let n = (size / 2) as u64;
    let odd_cyclic = orders.contains(&n);
    if !odd_cyclic {
        let mut profile: std::collections::BTreeMap<u64, u64> = Default::default();
        for &o in &orders {
            *profile.entry(o).or_default() += 1;
        }
        return Ok(TypeTag::Other {
            order_profile: profile.into_iter().collect(),
        });
    }
    let central = (0..size)
        .filter(|&z| (0..size).all(|x| table[z * size + x] == table[x * size + z]))
        .count() as u64;
    if central as usize == size {
        Ok(TypeTag::MType { k: 1, l: n })
    } else {
        Ok(TypeTag::MType {
            k: n / central,
            l: central,
        })
    }
}
