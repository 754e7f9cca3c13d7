//! Seiferter descriptors, twisting, the `c^m` family and annular-pair filters
//! for the trefoil `T(-3, 2)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::homology::{
    framing_after_m_move, intersection, slope_image_fiber_case, twist_slope, CurveClass, TorusMap,
};
use crate::sfs::{two_bridge_is_torus_link, Montesinos, OrbifoldTriple, TwoBridge};
use crate::torus_surgery::{
    basic_annular_pairs, basic_seiferter_data, moser_classify, BasicAnnularPair,
    BasicSeiferterKind, TorusKnot,
};

/// Knots with a known name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum NamedKnot {
    Trivial,
    FigureEight,
    TwistKnot { n: i64 },
    Pretzel { a: i64, b: i64, c: i64 },
}

impl NamedKnot {
    /// `Tw(n)`, with `Tw(0)` the unknot and `Tw(-1)` the figure-eight.
    pub fn twist_knot(n: i64) -> Self {
        match n {
            0 => NamedKnot::Trivial,
            -1 => NamedKnot::FigureEight,
            n => NamedKnot::TwistKnot { n },
        }
    }
}

impl fmt::Display for NamedKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedKnot::Trivial => f.write_str("Trivial"),
            NamedKnot::FigureEight => f.write_str("FigureEight"),
            NamedKnot::TwistKnot { n } => write!(f, "Tw({n})"),
            NamedKnot::Pretzel { a, b, c } => write!(f, "P({a},{b},{c})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum KnotDesc {
    Torus(TorusKnot),
    Twisted {
        base: Box<KnotDesc>,
        seiferter: String,
        n: i64,
    },
    Named(NamedKnot),
}

impl KnotDesc {
    /// `base` twisted `n` times along `seiferter`, with zero twists removed
    /// and consecutive twists along one seiferter merged.
    pub fn twisted(base: KnotDesc, seiferter: &str, n: i64) -> Result<KnotDesc> {
        if n == 0 {
            return Ok(base);
        }
        if let KnotDesc::Twisted { base: inner, seiferter: s, n: k } = &base {
            if s == seiferter {
                let total = k.checked_add(n).ok_or(Error::Overflow("twist count"))?;
                return KnotDesc::twisted((**inner).clone(), seiferter, total);
            }
        }
        Ok(KnotDesc::Twisted {
            base: Box::new(base),
            seiferter: seiferter.to_string(),
            n,
        })
    }
}

impl fmt::Display for KnotDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotDesc::Torus(k) => write!(f, "{k}"),
            KnotDesc::Twisted { base, seiferter, n } => write!(f, "{base}[{seiferter}:{n:+}]"),
            KnotDesc::Named(k) => write!(f, "{k}"),
        }
    }
}

/// A surgery `(K, slope)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurgeryVertex {
    pub knot: KnotDesc,
    pub slope: Fraction,
}

impl SurgeryVertex {
    pub fn new(knot: KnotDesc, slope: Fraction) -> Self {
        SurgeryVertex { knot, slope }
    }

    pub fn integral(knot: KnotDesc, slope: i64) -> Self {
        SurgeryVertex::new(knot, Fraction::integer(slope))
    }

    pub fn torus(k: TorusKnot, slope: i64) -> Self {
        SurgeryVertex::integral(KnotDesc::Torus(k), slope)
    }

    pub fn integer_slope(&self) -> Result<i64> {
        self.slope
            .as_integer()
            .ok_or_else(|| Error::NonIntegerSlope(self.slope.to_string()))
    }
}

impl fmt::Display for SurgeryVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.knot, self.slope)
    }
}

/// How a seiferter sits in the Seifert fibration of its ambient surgery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FiberIdentity {
    /// Isotopic to the core of the filled solid torus. `knot_fiber` is the
    /// regular fiber class on the knot boundary.
    Meridian {
        knot_fiber: CurveClass,
        framing_shift: i64,
    },
    ExceptionalFiber {
        index: u64,
        fiber_class: CurveClass,
        framing_shift: i64,
    },
}

impl FiberIdentity {
    pub fn framing_shift(&self) -> i64 {
        match *self {
            FiberIdentity::Meridian { framing_shift, .. }
            | FiberIdentity::ExceptionalFiber { framing_shift, .. } => framing_shift,
        }
    }

    /// The stored index, if the identity records one.
    pub fn index_hint(&self) -> Option<u64> {
        match *self {
            FiberIdentity::ExceptionalFiber { index, .. } => Some(index),
            FiberIdentity::Meridian { .. } => None,
        }
    }

    fn with_shift(self, shift: i64) -> Self {
        match self {
            FiberIdentity::Meridian { knot_fiber, .. } => FiberIdentity::Meridian {
                knot_fiber,
                framing_shift: shift,
            },
            FiberIdentity::ExceptionalFiber {
                index, fiber_class, ..
            } => FiberIdentity::ExceptionalFiber {
                index,
                fiber_class,
                framing_shift: shift,
            },
        }
    }
}

/// A seiferter for one particular surgery, isotopic there to a basic one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeiferterRole {
    pub ambient: SurgeryVertex,
    pub isotopic_to: BasicSeiferterKind,
    pub fiber: FiberIdentity,
}

impl SeiferterRole {
    /// The role after an `m`-move along the ambient slope, given the current
    /// linking number. Returns the role and the new linking number.
    pub fn after_m_move(&self, lk: i64) -> Result<(SeiferterRole, i64)> {
        let m = self.ambient.integer_slope()?;
        let shift = framing_after_m_move(self.fiber.framing_shift(), lk, m)?;
        let lk = lk.checked_add(m).ok_or(Error::Overflow("linking number"))?;
        let role = SeiferterRole {
            ambient: self.ambient.clone(),
            isotopic_to: self.isotopic_to,
            fiber: self.fiber.with_shift(shift),
        };
        Ok((role, lk))
    }

    fn ambient_torus(&self) -> Result<(TorusKnot, i64)> {
        match &self.ambient.knot {
            KnotDesc::Torus(k) => Ok((*k, self.ambient.integer_slope()?)),
            other => Err(Error::InvalidAmbient {
                seiferter: self.isotopic_to.to_string(),
                vertex: other.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SeiferterStatus {
    Hyperbolic,
    Basic { of: BasicSeiferterKind },
    Cable { of: BasicSeiferterKind, slope: Fraction },
    Unknown,
}

impl fmt::Display for SeiferterStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeiferterStatus::Hyperbolic => f.write_str("h"),
            SeiferterStatus::Basic { of } => write!(f, "{of}"),
            SeiferterStatus::Cable { of, slope } => write!(f, "{of}-cable({slope})"),
            SeiferterStatus::Unknown => f.write_str("?"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeiferterDesc {
    pub name: String,
    /// Absolute linking number with the knot.
    pub lk_with_knot: i64,
    pub roles: Vec<SeiferterRole>,
    pub status: SeiferterStatus,
    /// Set for basic seiferters, which serve at every slope of this knot.
    pub every_slope_of: Option<TorusKnot>,
}

impl SeiferterDesc {
    /// Twisting along a meridian does not change the knot.
    pub fn preserves_knot(&self) -> bool {
        self.status
            == SeiferterStatus::Basic {
                of: BasicSeiferterKind::CMu,
            }
    }

    /// The role of this seiferter at `(knot, slope)`, if it is one there.
    pub fn role_at(&self, v: &SurgeryVertex) -> Result<Option<SeiferterRole>> {
        if let (Some(k), KnotDesc::Torus(vk)) = (self.every_slope_of, &v.knot) {
            if k == *vk {
                let which = match self.status {
                    SeiferterStatus::Basic { of } => of,
                    _ => BasicSeiferterKind::CMu,
                };
                let basic = basic_seiferter_data(&k, v.integer_slope()?, which)?;
                return Ok(basic.roles.into_iter().next());
            }
        }
        Ok(self.roles.iter().find(|r| r.ambient == *v).cloned())
    }
}

/// Twist `n` times along `s`: slope `m + n·lk²`.
pub fn twist(v: &SurgeryVertex, s: &SeiferterDesc, n: i64) -> Result<SurgeryVertex> {
    let m = v.integer_slope()?;
    let lk2 = s
        .lk_with_knot
        .checked_mul(s.lk_with_knot)
        .ok_or(Error::Overflow("lk squared"))?;
    let slope = n
        .checked_mul(lk2)
        .and_then(|d| d.checked_add(m))
        .ok_or(Error::Overflow("twisted slope"))?;
    let knot = if s.preserves_knot() {
        v.knot.clone()
    } else {
        KnotDesc::twisted(v.knot.clone(), &s.name, n)?
    };
    Ok(SurgeryVertex::integral(knot, slope))
}

/// Index of the exceptional fiber that replaces the seiferter after `n`
/// twists, i.e. after `(-1/n)`-surgery on it.
pub fn index_after_twist(role: &SeiferterRole, n: i64) -> Result<u64> {
    let v = match role.fiber {
        FiberIdentity::ExceptionalFiber {
            fiber_class,
            framing_shift,
            ..
        } => intersection(slope_image_fiber_case(framing_shift, n)?, fiber_class)?,
        FiberIdentity::Meridian {
            knot_fiber,
            framing_shift,
        } => {
            let m = role.ambient.integer_slope()?;
            let image = TorusMap::meridian_to_core(m, framing_shift)?.apply(twist_slope(n)?)?;
            intersection(image, knot_fiber)?
        }
    };
    Ok(v.unsigned_abs())
}

/// Base orbifold of the ambient torus-knot surgery after `n` twists along the
/// seiferter: the basic fiber it is isotopic to gets the new index.
pub fn twisted_orbifold(role: &SeiferterRole, n: i64) -> Result<OrbifoldTriple> {
    let (k, m) = role.ambient_torus()?;
    let (triple, _) = moser_classify(&k, Fraction::integer(m))?;
    let idx = index_after_twist(role, n)?;
    Ok(triple.with_index(role.isotopic_to.triple_position(), idx))
}

/// Status of `c^m` as a seiferter.
pub fn seiferter_status(m: i64) -> SeiferterStatus {
    use BasicSeiferterKind::*;
    match m {
        -5 => SeiferterStatus::Cable {
            of: SP,
            slope: Fraction::new(-1, 2).expect("nonzero denominator"),
        },
        -4 => SeiferterStatus::Basic { of: SQ },
        -3 => SeiferterStatus::Basic { of: SP },
        -2 => SeiferterStatus::Basic { of: CMu },
        _ => SeiferterStatus::Hyperbolic,
    }
}

pub fn cm_name(m: i64) -> String {
    format!("c^{m}")
}

/// The seiferter `c^m` for `T(-3, 2)`: `c_1^m` for `(T, m)`, `c_2^{m-1}` for
/// `(T, m-1)` and `c_3^{m-2}` for `(T, m-2)`.
pub fn cm_family(m: i64) -> Result<SeiferterDesc> {
    let t = TorusKnot::trefoil();
    let mut roles = Vec::with_capacity(3);
    let mut lks = Vec::with_capacity(3);
    for (j, which) in [BasicSeiferterKind::CMu, BasicSeiferterKind::SP, BasicSeiferterKind::SQ]
        .into_iter()
        .enumerate()
    {
        let slope = m.checked_sub(j as i64).ok_or(Error::Overflow("ambient slope"))?;
        let basic = basic_seiferter_data(&t, slope, which)?;
        let (role, lk) = basic.roles[0].after_m_move(basic.lk_with_knot)?;
        roles.push(role);
        lks.push(lk.checked_abs().ok_or(Error::Overflow("linking number"))?);
    }
    if lks.iter().any(|&l| l != lks[0]) {
        return Err(Error::InvariantViolation(format!(
            "roles of {} disagree on lk: {lks:?}",
            cm_name(m)
        )));
    }
    let status = seiferter_status(m);
    // c^{-2} is the meridian itself, a seiferter at every slope.
    let every_slope_of = (status == SeiferterStatus::Basic { of: BasicSeiferterKind::CMu })
        .then_some(t);
    Ok(SeiferterDesc {
        name: cm_name(m),
        lk_with_knot: lks[0],
        roles,
        status,
        every_slope_of,
    })
}

/// The seiferter `c` for `(T(-3, 2), -1)`, obtained from `s_{-3}` by two
/// `(-1)`-moves. It is unlinked from the trefoil.
pub fn seiferter_c() -> Result<SeiferterDesc> {
    let t = TorusKnot::trefoil();
    let basic = basic_seiferter_data(&t, -1, BasicSeiferterKind::SP)?;
    let (role, lk) = basic.roles[0].after_m_move(basic.lk_with_knot)?;
    let (role, lk) = role.after_m_move(lk)?;
    Ok(SeiferterDesc {
        name: "c".to_string(),
        lk_with_knot: lk.abs(),
        roles: vec![role],
        status: SeiferterStatus::Hyperbolic,
        every_slope_of: None,
    })
}

/// `T(-3, 2) ∪ c^m` as the Montesinos link `M(-1/2, 2/3, 1/(2m+4))`.
/// Undefined at `m = -2`, where `c^m` is the meridian.
pub fn cm_link(m: i64) -> Result<Montesinos> {
    let den = m
        .checked_mul(2)
        .and_then(|v| v.checked_add(4))
        .ok_or(Error::Overflow("tangle denominator"))?;
    if den == 0 {
        return Err(Error::NotThreeTangles("1/0".into()));
    }
    Montesinos::from_pairs([(-1, 2), (2, 3), (1, den)])
}

/// Whether `(T(-3, 2), m)` has a hyperbolic seiferter; `None` where unknown.
pub fn has_hyperbolic_seiferter(m: i64) -> Option<bool> {
    let any_h = (0..3).any(|j| {
        m.checked_add(j)
            .is_some_and(|k| seiferter_status(k) == SeiferterStatus::Hyperbolic)
    });
    match (any_h, m) {
        (true, _) => Some(true),
        // Known by an external construction for this lens surgery.
        (false, -5) => Some(true),
        _ => None,
    }
}

/// Seiferters for `(T(-3, 2), m)` appearing in the annular-pair tables.
/// `C1`, `C2`, `C3` stand for `c_i^m = c^{m+i-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TrefoilSeiferter {
    #[serde(rename = "c_mu")]
    CMu,
    #[serde(rename = "s_-3")]
    SMinus3,
    #[serde(rename = "s_2")]
    S2,
    #[serde(rename = "c_1")]
    C1,
    #[serde(rename = "c_2")]
    C2,
    #[serde(rename = "c_3")]
    C3,
}

impl TrefoilSeiferter {
    pub fn is_basic(self) -> bool {
        matches!(
            self,
            TrefoilSeiferter::CMu | TrefoilSeiferter::SMinus3 | TrefoilSeiferter::S2
        )
    }

    /// `i` for `c_i^m`.
    pub fn c_index(self) -> Option<i64> {
        match self {
            TrefoilSeiferter::C1 => Some(1),
            TrefoilSeiferter::C2 => Some(2),
            TrefoilSeiferter::C3 => Some(3),
            _ => None,
        }
    }

    /// The `k` with `c_i^m = c^k`.
    pub fn cm_exponent(self, m: i64) -> Option<i64> {
        self.c_index().and_then(|i| m.checked_add(i - 1))
    }

    /// Signed linking number with the trefoil, as tabulated.
    pub fn lk_with_trefoil(self, m: i64) -> Result<i64> {
        Ok(match self {
            TrefoilSeiferter::CMu => 1,
            TrefoilSeiferter::SMinus3 => 2,
            TrefoilSeiferter::S2 => 3,
            c => m
                .checked_add(c.c_index().unwrap_or_default())
                .ok_or(Error::Overflow("linking number"))?,
        })
    }

    pub fn label(self, m: i64) -> String {
        match self {
            TrefoilSeiferter::CMu => "c_mu".to_string(),
            TrefoilSeiferter::SMinus3 => "s_-3".to_string(),
            TrefoilSeiferter::S2 => "s_2".to_string(),
            c => format!("c_{}^{m}", c.c_index().unwrap_or_default()),
        }
    }

    pub fn status(self, m: i64) -> Result<SeiferterStatus> {
        use BasicSeiferterKind::*;
        Ok(match self {
            TrefoilSeiferter::CMu => SeiferterStatus::Basic { of: CMu },
            TrefoilSeiferter::SMinus3 => SeiferterStatus::Basic { of: SP },
            TrefoilSeiferter::S2 => SeiferterStatus::Basic { of: SQ },
            c => seiferter_status(c.cm_exponent(m).ok_or(Error::Overflow("c^m exponent"))?),
        })
    }
}

/// An unordered pair of seiferters, stored in a fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairFamily(pub TrefoilSeiferter, pub TrefoilSeiferter);

impl PairFamily {
    pub fn label(self, m: i64) -> String {
        format!("{{{}, {}}}", self.0.label(m), self.1.label(m))
    }
}

use TrefoilSeiferter::{C1, C2, C3, CMu, S2, SMinus3};

/// The nine annular pair families for `(T(-3, 2), m)`; the first six
/// contain one basic seiferter.
pub const PAIR_FAMILIES: [PairFamily; 9] = [
    PairFamily(CMu, C2),
    PairFamily(CMu, C3),
    PairFamily(SMinus3, C1),
    PairFamily(SMinus3, C3),
    PairFamily(S2, C1),
    PairFamily(S2, C2),
    PairFamily(C1, C2),
    PairFamily(C1, C3),
    PairFamily(C2, C3),
];

/// Pairwise linking numbers at a fixed `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LkTable {
    pub m: i64,
}

pub fn pair_lk_table(m: i64) -> LkTable {
    LkTable { m }
}

impl LkTable {
    /// Signed linking number of two distinct seiferters, as tabulated.
    pub fn lookup(&self, a: TrefoilSeiferter, b: TrefoilSeiferter) -> Result<i64> {
        let m = self.m;
        let label = || PairFamily(a, b).label(m);
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        let shifted = |k: i64| m.checked_add(k).ok_or(Error::Overflow("linking number"));
        match (x, y) {
            (CMu, C1) | (SMinus3, C2) | (S2, C3) => Err(Error::ExcludedPair(label())),
            (CMu, C2) | (CMu, C3) | (SMinus3, C3) => Ok(1),
            (S2, C2) | (SMinus3, C1) => Ok(2),
            (S2, C1) => Ok(3),
            (C1, C2) => shifted(3),
            (C1, C3) | (C2, C3) => shifted(4),
            _ => Err(Error::NotTabulated(label())),
        }
    }
}

/// A pair whose components have equal `|lk|` with the trefoil.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SameLkHit {
    pub family: PairFamily,
    pub label: String,
    /// Cobounds an annulus missing the knot, so not an annular pair.
    pub irrelevant: bool,
}

/// Pairs containing a basic seiferter whose components link the trefoil
/// equally (up to sign). Such a pair can only cobound an annulus missing the
/// knot when `T(-3, 2)(m)` is a lens space; those hits are flagged.
pub fn same_lk_filter(m: i64) -> Result<Vec<SameLkHit>> {
    let (_, class) = moser_classify(&TorusKnot::trefoil(), Fraction::integer(m))?;
    let lens = class.is_lens_like();
    let mut out = Vec::new();
    for fam in PAIR_FAMILIES.iter().filter(|f| f.0.is_basic() || f.1.is_basic()) {
        let a = fam.0.lk_with_trefoil(m)?;
        let b = fam.1.lk_with_trefoil(m)?;
        if a.unsigned_abs() == b.unsigned_abs() {
            out.push(SameLkHit {
                family: *fam,
                label: fam.label(m),
                irrelevant: lens,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnularCandidate {
    pub family: PairFamily,
    pub label: String,
    pub linking: [u64; 3],
    pub matches: BasicAnnularPair,
    /// Why the linking data match is not a basic pair after all.
    pub rejected: Option<String>,
}

fn abs_u(v: i64) -> u64 {
    v.unsigned_abs()
}

/// Pairs whose linking data `(|lk(T,a)|, |lk(T,b)|, |lk(a,b)|)` agree with
/// a basic annular pair (first two entries unordered). A hit whose `c_i^m`
/// component is not itself basic is kept but marked rejected.
pub fn basic_annular_candidates(m: i64) -> Result<Vec<AnnularCandidate>> {
    let table = pair_lk_table(m);
    let basics = basic_annular_pairs(&TorusKnot::trefoil());
    let mut out = Vec::new();
    for fam in PAIR_FAMILIES {
        let linking = [
            abs_u(fam.0.lk_with_trefoil(m)?),
            abs_u(fam.1.lk_with_trefoil(m)?),
            abs_u(table.lookup(fam.0, fam.1)?),
        ];
        let hit = basics.iter().find(|b| {
            let [x, y, z] = b.linking.map(abs_u);
            linking[2] == z
                && ((linking[0], linking[1]) == (x, y) || (linking[0], linking[1]) == (y, x))
        });
        let Some(basic) = hit else { continue };
        let mut rejected = None;
        for s in [fam.0, fam.1] {
            if let Some(k) = s.cm_exponent(m) {
                let st = seiferter_status(k);
                if !matches!(st, SeiferterStatus::Basic { .. }) {
                    rejected = Some(format!("{} = {} is {st}, not basic", s.label(m), cm_name(k)));
                    break;
                }
            }
        }
        out.push(AnnularCandidate {
            family: fam,
            label: fam.label(m),
            linking,
            matches: *basic,
            rejected,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnularPairInfo {
    pub family: PairFamily,
    pub label: String,
    pub irrelevant: bool,
    /// `Some(false)` for basic pairs, `None` where undecided.
    pub hyperbolic: Option<bool>,
}

/// All nine pair families at `m`, with relevance and hyperbolicity.
pub fn annular_pairs(m: i64) -> Result<Vec<AnnularPairInfo>> {
    let same = same_lk_filter(m)?;
    let basic: Vec<PairFamily> = basic_annular_candidates(m)?
        .into_iter()
        .filter(|c| c.rejected.is_none())
        .map(|c| c.family)
        .collect();
    let undecided = matches!(m, -7..=-5);
    Ok(PAIR_FAMILIES
        .iter()
        .map(|fam| {
            let irrelevant = same.iter().any(|h| h.family == *fam && h.irrelevant);
            let hyperbolic = if irrelevant {
                None
            } else if basic.contains(fam) {
                Some(false)
            } else if undecided {
                None
            } else {
                Some(true)
            };
            AnnularPairInfo {
                family: *fam,
                label: fam.label(m),
                irrelevant,
                hyperbolic,
            }
        })
        .collect())
}

/// Pairs at the lens slopes `m ∈ {-5, -7}` whose second component is a cable
/// with a free parameter `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CablePair {
    /// `{c_mu, c_1^m}`; no free parameter.
    CMuC1,
    /// `{s_-3, c_2^m}`, the two-bridge link `(6p+4)/(2p+1)`.
    SMinus3C2,
    /// `{s_2, c_3^m}`, the two-bridge link `(6p+10)/(2p+3)`.
    S2C3,
}

impl CablePair {
    pub fn family(self) -> PairFamily {
        match self {
            CablePair::CMuC1 => PairFamily(CMu, C1),
            CablePair::SMinus3C2 => PairFamily(SMinus3, C2),
            CablePair::S2C3 => PairFamily(S2, C3),
        }
    }

    pub fn link(self, m: i64, p: i64) -> Result<TwoBridge> {
        let ovf = || Error::Overflow("two-bridge fraction");
        let lin = |a: i64, b: i64| p.checked_mul(a).and_then(|v| v.checked_add(b)).ok_or_else(ovf);
        match self {
            // (2,-4) torus link at m = -5, Whitehead link at m = -7.
            CablePair::CMuC1 if m == -5 => TwoBridge::from_pair(4, -1),
            CablePair::CMuC1 => TwoBridge::from_pair(8, 3),
            CablePair::SMinus3C2 => TwoBridge::from_pair(lin(6, 4)?, lin(2, 1)?),
            CablePair::S2C3 => TwoBridge::from_pair(lin(6, 10)?, lin(2, 3)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CablePairVerdict {
    pub pair: CablePair,
    pub m: i64,
    pub p: i64,
    pub link: TwoBridge,
    pub annular: bool,
    pub basic: bool,
}

/// Whether the pair is an annular pair, and whether it is a basic one.
pub fn cable_pair_verdict(pair: CablePair, m: i64, p: i64) -> Result<CablePairVerdict> {
    if m != -5 && m != -7 {
        return Err(Error::InvalidSlope(format!(
            "{m} (cable pairs live at m = -5, -7)"
        )));
    }
    let fam = pair.family();
    let link = pair.link(m, p)?;
    let lk_a = fam.0.lk_with_trefoil(m)?.unsigned_abs();
    let lk_b = fam.1.lk_with_trefoil(m)?.unsigned_abs();
    let annular = two_bridge_is_torus_link(&link) && lk_a != lk_b;
    let c_basic = matches!(fam.1.status(m)?, SeiferterStatus::Basic { .. });
    let basic = annular && c_basic && link.is_hopf();
    Ok(CablePairVerdict {
        pair,
        m,
        p,
        link,
        annular,
        basic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> TorusKnot {
        TorusKnot::trefoil()
    }

    fn labels(hits: &[SameLkHit]) -> Vec<PairFamily> {
        hits.iter().map(|h| h.family).collect()
    }

    #[test]
    fn cm_linking_and_status() {
        assert_eq!(cm_family(-6).unwrap().lk_with_knot, 5);
        assert_eq!(cm_family(-1).unwrap().lk_with_knot, 0);
        assert_eq!(
            cm_family(-3).unwrap().status,
            SeiferterStatus::Basic { of: BasicSeiferterKind::SP }
        );
        assert_eq!(seiferter_status(1), SeiferterStatus::Hyperbolic);
        assert!(matches!(seiferter_status(-5), SeiferterStatus::Cable { .. }));
        assert_eq!(
            seiferter_status(-2),
            SeiferterStatus::Basic { of: BasicSeiferterKind::CMu }
        );
    }

    #[test]
    fn cm_roles_have_expected_shifts() {
        for m in -20..=20 {
            let c = cm_family(m).unwrap();
            let shifts: Vec<i64> = c.roles.iter().map(|r| r.fiber.framing_shift()).collect();
            assert_eq!(shifts, vec![m + 2, m + 3, m + 4]);
            assert_eq!(c.roles[1].ambient, SurgeryVertex::torus(t(), m - 1));
            assert_eq!(c.roles[2].fiber.index_hint(), Some(2));
        }
    }

    #[test]
    fn twist_examples() {
        let c6 = cm_family(-6).unwrap();
        let v = twist(&SurgeryVertex::torus(t(), -6), &c6, 1).unwrap();
        assert_eq!(v.slope, Fraction::integer(19));

        let c1 = cm_family(-1).unwrap();
        for n in -4..=4 {
            let v = twist(&SurgeryVertex::torus(t(), -1), &c1, n).unwrap();
            assert_eq!(v.slope, Fraction::integer(-1));
        }
        let v0 = SurgeryVertex::torus(t(), 3);
        assert_eq!(twist(&v0, &c6, 0).unwrap(), v0);
    }

    #[test]
    fn twist_rejects_fractional_slope() {
        let v = SurgeryVertex::new(KnotDesc::Torus(t()), Fraction::new(1, 2).unwrap());
        assert!(matches!(
            twist(&v, &cm_family(0).unwrap(), 1),
            Err(Error::NonIntegerSlope(_))
        ));
    }

    #[test]
    fn meridian_twists_keep_the_knot() {
        let cmu = basic_seiferter_data(&t(), 0, BasicSeiferterKind::CMu).unwrap();
        let v = twist(&SurgeryVertex::torus(t(), 0), &cmu, -3).unwrap();
        assert_eq!(v, SurgeryVertex::torus(t(), -3));
    }

    #[test]
    fn index_examples() {
        // c_2-role of c^{-6}, ambient slope -7.
        let c = cm_family(-6).unwrap();
        assert_eq!(c.roles[1].fiber.framing_shift(), -3);
        assert_eq!(index_after_twist(&c.roles[1], 1).unwrap(), 8);
        for role in &c.roles[1..] {
            assert_eq!(Some(index_after_twist(role, 0).unwrap()), role.fiber.index_hint());
        }

        let c_seif = seiferter_c().unwrap();
        assert_eq!(c_seif.lk_with_knot, 0);
        assert_eq!(
            c_seif.roles[0].fiber,
            FiberIdentity::ExceptionalFiber {
                index: 3,
                fiber_class: CurveClass::new(-3, 2),
                framing_shift: 4
            }
        );
        assert_eq!(index_after_twist(&c_seif.roles[0], -1).unwrap(), 7);
        assert_eq!(index_after_twist(&c_seif.roles[0], 0).unwrap(), 3);
        assert_eq!(index_after_twist(&c_seif.roles[0], 1).unwrap(), 13);
    }

    #[test]
    fn twisted_orbifold_requires_torus_ambient() {
        let mut role = cm_family(0).unwrap().roles[0].clone();
        role.ambient.knot = KnotDesc::Named(NamedKnot::Trivial);
        assert!(matches!(twisted_orbifold(&role, 1), Err(Error::InvalidAmbient { .. })));
    }

    #[test]
    fn knot_desc_canonical() {
        let base = KnotDesc::Torus(t());
        assert_eq!(KnotDesc::twisted(base.clone(), "c^0", 0).unwrap(), base);
        let a = KnotDesc::twisted(base.clone(), "c^0", 2).unwrap();
        let b = KnotDesc::twisted(a, "c^0", -2).unwrap();
        assert_eq!(b, base);
        assert_eq!(NamedKnot::twist_knot(0), NamedKnot::Trivial);
        assert_eq!(NamedKnot::twist_knot(-1), NamedKnot::FigureEight);
    }

    #[test]
    fn lk_table_entries() {
        let tab = pair_lk_table(-4);
        assert_eq!(tab.lookup(C1, S2).unwrap(), 3);
        assert_eq!(tab.lookup(C2, C1).unwrap(), -1);
        assert_eq!(tab.lookup(C3, CMu).unwrap(), 1);
        assert_eq!(tab.lookup(C3, SMinus3).unwrap(), 1);
        assert_eq!(tab.lookup(C3, C2).unwrap(), 0);
        assert!(matches!(tab.lookup(C3, S2), Err(Error::ExcludedPair(_))));
        assert!(matches!(tab.lookup(CMu, C1), Err(Error::ExcludedPair(_))));
        assert!(matches!(tab.lookup(SMinus3, C2), Err(Error::ExcludedPair(_))));
        assert!(matches!(tab.lookup(CMu, S2), Err(Error::NotTabulated(_))));
    }

    #[test]
    fn same_lk_examples() {
        let at5 = same_lk_filter(-5).unwrap();
        assert_eq!(labels(&at5), vec![PairFamily(SMinus3, C3), PairFamily(S2, C2)]);
        assert!(at5.iter().all(|h| h.irrelevant));
        assert!(same_lk_filter(0).unwrap().is_empty());
        let at1 = same_lk_filter(1).unwrap();
        assert_eq!(labels(&at1), vec![PairFamily(SMinus3, C1), PairFamily(S2, C2)]);
        assert!(at1.iter().all(|h| !h.irrelevant));
    }

    #[test]
    fn candidate_examples() {
        let fams = |m| -> Vec<PairFamily> {
            basic_annular_candidates(m).unwrap().iter().map(|c| c.family).collect()
        };
        assert_eq!(fams(-4), vec![PairFamily(C1, C2), PairFamily(C1, C3), PairFamily(C2, C3)]);
        assert_eq!(fams(-6), vec![PairFamily(SMinus3, C3)]);
        assert!(fams(5).is_empty());
        let zero = basic_annular_candidates(0).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].rejected.is_some());
    }

    #[test]
    fn annular_pair_counts() {
        let hyp = |m| annular_pairs(m).unwrap().iter().filter(|p| p.hyperbolic == Some(true)).count();
        assert_eq!(hyp(-4), 6);
        assert_eq!(hyp(-8), 9);
        assert_eq!(hyp(0), 9);
        let at5 = annular_pairs(-5).unwrap();
        assert_eq!(at5.iter().filter(|p| p.irrelevant).count(), 2);
    }

    #[test]
    fn cable_pairs() {
        for p in -10..=10 {
            let v = cable_pair_verdict(CablePair::SMinus3C2, -5, p).unwrap();
            assert_eq!(v.annular, p == 0 || p == -1);
            assert_eq!(v.basic, p == -1);
            let w = cable_pair_verdict(CablePair::S2C3, -5, p).unwrap();
            assert_eq!(w.annular, p == -1 || p == -2);
            assert_eq!(w.basic, p == -2);
            assert!(!cable_pair_verdict(CablePair::S2C3, -7, p).unwrap().basic);
        }
        assert!(cable_pair_verdict(CablePair::CMuC1, -5, 0).unwrap().annular);
        assert!(!cable_pair_verdict(CablePair::CMuC1, -7, 0).unwrap().annular);
        assert!(cable_pair_verdict(CablePair::CMuC1, -6, 0).is_err());
    }

    #[test]
    fn cm_link_matches_status() {
        use crate::sfs::{montesinos_status, MontesinosStatus};
        assert!(cm_link(-2).is_err());
        for m in (-40..=40).filter(|&m| m != -2) {
            let st = montesinos_status(&cm_link(m).unwrap()).unwrap();
            let want = match seiferter_status(m) {
                SeiferterStatus::Hyperbolic => MontesinosStatus::Hyperbolic,
                SeiferterStatus::Cable { .. } => MontesinosStatus::ExceptionalToroidal,
                _ => MontesinosStatus::SeifertLink,
            };
            assert_eq!(st, want, "m = {m}");
        }
    }

    #[test]
    fn hyperbolic_seiferter_existence() {
        assert_eq!(has_hyperbolic_seiferter(-4), None);
        assert_eq!(has_hyperbolic_seiferter(-5), Some(true));
        for m in (-30..=30).filter(|m| *m != -4) {
            assert_eq!(has_hyperbolic_seiferter(m), Some(true), "m = {m}");
        }
    }
}
