//! Seifert fibered spaces over `S²` with at most three marked points, lens
//! spaces, and the two-bridge / Montesinos link arithmetic used to tell
//! surgered manifolds and seiferter links apart.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// Unordered indices of the exceptional fibers of a base orbifold
/// `S²(x, y, z)`. Index `0` marks a degenerate fiber, index `1` a regular
/// (removable) one.
///
/// The raw entries are kept in the order they were produced so reports can
/// print them the way they were derived; comparisons go through
/// [`OrbifoldTriple::multiset`] or [`OrbifoldTriple::normalized`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrbifoldTriple {
    indices: Vec<u64>,
}

impl OrbifoldTriple {
    pub fn new(indices: impl Into<Vec<u64>>) -> Self {
        OrbifoldTriple {
            indices: indices.into(),
        }
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    /// Raw entries sorted ascending.
    pub fn multiset(&self) -> Vec<u64> {
        let mut v = self.indices.clone();
        v.sort_unstable();
        v
    }

    /// Entries equal to 1 dropped, the rest sorted ascending.
    pub fn normalized(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.indices.iter().copied().filter(|&x| x != 1).collect();
        v.sort_unstable();
        v
    }

    pub fn same_multiset(&self, other: &OrbifoldTriple) -> bool {
        self.multiset() == other.multiset()
    }

    pub fn has_degenerate_fiber(&self) -> bool {
        self.indices.contains(&0)
    }

    /// Returns a copy with the entry at `pos` replaced.
    pub fn with_index(&self, pos: usize, value: u64) -> Self {
        let mut t = self.clone();
        t.indices[pos] = value;
        t
    }
}

impl fmt::Display for OrbifoldTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S²(")?;
        for (i, x) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `L(p, q)`; `q` is absent when only the shape of the fibration is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    pub p: u64,
    pub q: Option<i64>,
}

impl LensSpace {
    pub fn new(p: u64, q: Option<i64>) -> Result<Self> {
        if let Some(q) = q {
            let g = (p as i128).gcd(&(q as i128));
            if g != 1 && p != 1 {
                return Err(Error::InvalidLens { p, q });
            }
        }
        Ok(LensSpace { p, q })
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            Some(q) => write!(f, "L({}, {})", self.p, q),
            None => write!(f, "L({}, ?)", self.p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SfsClass {
    Sphere,
    S1xS2,
    Lens { lens: LensSpace },
    /// Degenerate fibration: `L(a, ·) # L(b, ·)`.
    ConnSumLens { orders: [u64; 2] },
    /// Two exceptional fibers: a lens space, parameters undetermined.
    LensByShape { exceptional: [u64; 2] },
    SmallSfs { base: OrbifoldTriple },
    SfsOverDisk { exceptional: [u64; 2] },
    /// Fewer than two exceptional fibers; the indices alone do not decide
    /// between `S³`, `S¹×S²` and other lens spaces.
    Indeterminate { indices: Vec<u64> },
}

impl SfsClass {
    /// Canonical lens space: `L(0, ·)` is `S¹×S²`, `L(1, ·)` is `S³`.
    pub fn lens(p: u64, q: Option<i64>) -> Result<Self> {
        Ok(match p {
            0 => SfsClass::S1xS2,
            1 => SfsClass::Sphere,
            _ => SfsClass::Lens {
                lens: LensSpace::new(p, q)?,
            },
        })
    }

    pub fn is_small_sfs(&self) -> bool {
        matches!(self, SfsClass::SmallSfs { .. })
    }

    pub fn is_lens_like(&self) -> bool {
        matches!(
            self,
            SfsClass::Lens { .. } | SfsClass::LensByShape { .. } | SfsClass::Sphere
        )
    }

    pub fn label(&self) -> String {
        match self {
            SfsClass::Sphere => "S3".into(),
            SfsClass::S1xS2 => "S1xS2".into(),
            SfsClass::Lens { lens } => format!("lens {lens}"),
            SfsClass::ConnSumLens { orders } => {
                format!("L({},·) # L({},·)", orders[0], orders[1])
            }
            SfsClass::LensByShape { exceptional } => {
                format!("lens (fibers {}, {})", exceptional[0], exceptional[1])
            }
            SfsClass::SmallSfs { base } => format!("small SFS over {base}"),
            SfsClass::SfsOverDisk { exceptional } => {
                format!("SFS over D²({}, {})", exceptional[0], exceptional[1])
            }
            SfsClass::Indeterminate { .. } => "indeterminate".into(),
        }
    }
}

impl fmt::Display for SfsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Classifies the manifold fibered over a base orbifold with at most three
/// marked points.
pub fn classify_triple(t: &OrbifoldTriple) -> Result<SfsClass> {
    let norm = t.normalized();
    if norm.len() > 3 {
        return Err(Error::MalformedTriple(norm.len()));
    }
    let zeros = norm.iter().filter(|&&x| x == 0).count();
    let rest: Vec<u64> = norm.iter().copied().filter(|&x| x != 0).collect();
    match (zeros, rest.as_slice()) {
        (0, [_, _, _]) => Ok(SfsClass::SmallSfs {
            base: OrbifoldTriple::new(norm),
        }),
        (0, [a, b]) => Ok(SfsClass::LensByShape { exceptional: [*a, *b] }),
        (0, _) => Ok(SfsClass::Indeterminate { indices: norm }),
        (1, [a, b]) => Ok(SfsClass::ConnSumLens { orders: [*a, *b] }),
        (1, [a]) => SfsClass::lens(*a, None),
        (1, []) => SfsClass::lens(1, None),
        _ => Ok(SfsClass::Indeterminate { indices: norm }),
    }
}

fn mod_inverse(q: i64, p: u64) -> Option<i64> {
    let p = p as i64;
    let e = q.rem_euclid(p).extended_gcd(&p);
    (e.gcd == 1).then(|| e.x.rem_euclid(p))
}

/// Homeomorphism test for lens spaces with known `q`.
///
/// Oriented: `q' ≡ q^{±1} (mod p)`. Unoriented additionally allows
/// `q' ≡ −q^{±1}`.
pub fn lens_equivalent(a: &LensSpace, b: &LensSpace, oriented: bool) -> Result<bool> {
    let (Some(qa), Some(qb)) = (a.q, b.q) else {
        return Err(Error::IncomparableLens);
    };
    if a.p != b.p {
        return Ok(false);
    }
    if a.p <= 1 {
        return Ok(true);
    }
    let p = a.p as i64;
    let inv = mod_inverse(qa, a.p).ok_or(Error::InvalidLens { p: a.p, q: qa })?;
    let target = qb.rem_euclid(p);
    let mut allowed = vec![qa.rem_euclid(p), inv];
    if !oriented {
        allowed.extend(allowed.clone().iter().map(|x| (-x).rem_euclid(p)));
    }
    Ok(allowed.contains(&target))
}

/// Exact sum of the given fractions.
pub fn euler_number(fractions: &[Fraction]) -> Result<Fraction> {
    fractions
        .iter()
        .try_fold(Fraction::ZERO, |acc, f| acc.checked_add(f))
}

/// A Montesinos link `M(r₁, r₂, r₃)` built from three rational tangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Montesinos {
    tangles: Vec<Fraction>,
}

impl Montesinos {
    pub fn new(tangles: Vec<Fraction>) -> Result<Self> {
        if tangles.len() != 3 {
            return Err(Error::TangleCount(tangles.len()));
        }
        if tangles.iter().any(Fraction::is_infinite) {
            return Err(Error::ZeroDenominator("Montesinos tangle"));
        }
        Ok(Montesinos { tangles })
    }

    pub fn from_pairs(pairs: [(i64, i64); 3]) -> Result<Self> {
        let tangles = pairs
            .iter()
            .map(|&(n, d)| Fraction::new(n, d))
            .collect::<Result<Vec<_>>>()?;
        Self::new(tangles)
    }

    pub fn tangles(&self) -> &[Fraction] {
        &self.tangles
    }

    pub fn mirror(&self) -> Result<Self> {
        let tangles = self
            .tangles
            .iter()
            .map(Fraction::checked_neg)
            .collect::<Result<Vec<_>>>()?;
        Ok(Montesinos { tangles })
    }

    pub fn euler(&self) -> Result<Fraction> {
        euler_number(&self.tangles)
    }

    /// Each tangle reduced to its part in `(-1/2, 1/2]`, sorted; the integer
    /// parts are carried by the Euler number.
    pub fn normalized_tangles(&self) -> Result<Vec<Fraction>> {
        let mut v = self
            .tangles
            .iter()
            .map(|t| t.split_symmetric().map(|(_, r)| r))
            .collect::<Result<Vec<_>>>()?;
        v.sort();
        Ok(v)
    }
}

impl fmt::Display for Montesinos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tangles.iter().map(ToString::to_string).collect();
        write!(f, "M({})", parts.join(", "))
    }
}

/// Equality of Montesinos links with three tangles through the invariants
/// of their double branched covers: the normalized tangle residues and the
/// Euler number. With `allow_mirror`, `m2` may also be mirrored.
pub fn montesinos_equivalent(m1: &Montesinos, m2: &Montesinos, allow_mirror: bool) -> Result<bool> {
    let same = |a: &Montesinos, b: &Montesinos| -> Result<bool> {
        Ok(a.normalized_tangles()? == b.normalized_tangles()? && a.euler()? == b.euler()?)
    };
    if same(m1, m2)? {
        return Ok(true);
    }
    if allow_mirror {
        return same(m1, &m2.mirror()?);
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MontesinosStatus {
    SeifertLink,
    ExceptionalToroidal,
    Hyperbolic,
}

/// Trefoil-with-exceptional-fiber links, `T₋₃,₂ ∪ s₋₃` and `T₋₃,₂ ∪ s₂`,
/// in Montesinos form.
fn seifert_references() -> Result<[Montesinos; 2]> {
    Ok([
        Montesinos::from_pairs([(-1, 2), (2, 3), (-1, 2)])?,
        Montesinos::from_pairs([(-1, 2), (2, 3), (-1, 4)])?,
    ])
}

/// The toroidal exception `M(1/2, −1/3, −1/6)`.
pub fn toroidal_reference() -> Result<Montesinos> {
    Montesinos::from_pairs([(1, 2), (-1, 3), (-1, 6)])
}

/// Rule table for three-tangle Montesinos links.
///
/// Seifert links are recognised only against the two trefoil references
/// (the cases where the seiferter is a basic one); every other link that is
/// not the toroidal exception or its mirror is reported hyperbolic.
pub fn montesinos_status(m: &Montesinos) -> Result<MontesinosStatus> {
    if let Some(t) = m.tangles.iter().find(|t| t.den() <= 1) {
        return Err(Error::NotThreeTangles(t.to_string()));
    }
    for r in seifert_references()? {
        if montesinos_equivalent(m, &r, true)? {
            return Ok(MontesinosStatus::SeifertLink);
        }
    }
    if montesinos_equivalent(m, &toroidal_reference()?, true)? {
        return Ok(MontesinosStatus::ExceptionalToroidal);
    }
    Ok(MontesinosStatus::Hyperbolic)
}

/// Base orbifold of the double branched cover (tangle denominators) and its
/// Euler number.
pub fn double_branched_cover(m: &Montesinos) -> Result<(OrbifoldTriple, Fraction)> {
    let triple = OrbifoldTriple::new(
        m.tangles
            .iter()
            .map(|t| t.den().unsigned_abs())
            .collect::<Vec<_>>(),
    );
    Ok((triple, m.euler()?))
}

/// The two-bridge link `b(p, q)` with `p > 0` and `0 <= q < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoBridge {
    pub p: u64,
    pub q: u64,
}

impl TwoBridge {
    pub fn new(f: Fraction) -> Result<Self> {
        if f.num() == 0 {
            return Err(Error::InvalidTwoBridge(f.to_string()));
        }
        let p = f.num().unsigned_abs();
        let q = (f.den() * f.num().signum()).rem_euclid(p as i64) as u64;
        Ok(TwoBridge { p, q })
    }

    pub fn from_pair(num: i64, den: i64) -> Result<Self> {
        Self::new(Fraction::new(num, den)?)
    }

    pub fn is_hopf(&self) -> bool {
        self.p == 2
    }
}

impl fmt::Display for TwoBridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({}/{})", self.p, self.q)
    }
}

/// Torus-link test: `q ≡ ±1 (mod p)`.
pub fn two_bridge_is_torus_link(t: &TwoBridge) -> bool {
    if t.p <= 2 {
        return true;
    }
    t.q == 1 || t.q == t.p - 1
}

/// Regular continued fraction `[a₀; a₁, …]` with `a₀ = ⌊f⌋`.
pub fn continued_fraction(f: Fraction) -> Result<Vec<i64>> {
    if f.is_infinite() {
        return Err(Error::ZeroDenominator("continued fraction of 1/0"));
    }
    let (mut n, mut d) = (f.num() as i128, f.den() as i128);
    let mut out = Vec::new();
    while d != 0 {
        let a = Integer::div_floor(&n, &d);
        out.push(i64::try_from(a).map_err(|_| Error::Overflow("continued fraction"))?);
        (n, d) = (d, n - a * d);
    }
    Ok(out)
}
