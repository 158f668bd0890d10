//! Table-driven finite rings with unity.
//!
//! A [`RingSpec`] stores its addition and multiplication as lookup tables over
//! opaque element labels, together with a faithful unital representation of
//! every element as a small GF(2) bit matrix. The representation turns unit
//! and `GL(2,R)` membership questions into rank tests.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitMatrix;
use crate::fixtures::M2F2_LABELS;
use crate::{Error, Result, SCHEMA_VERSION};

/// Label of an element inside its ring's tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement(u8);

impl RingElement {
    pub const fn new(index: u8) -> Self {
        Self(index)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Names accepted by [`ring_by_name`].
pub const RING_NAMES: [&str; 5] = ["m2f2", "gf2", "gf4", "gf2xgf2", "gf2-dual"];

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RingDocument", try_from = "RingDocument")]
pub struct RingSpec {
    name: String,
    order: usize,
    zero: RingElement,
    one: RingElement,
    add_table: Vec<RingElement>,
    mul_table: Vec<RingElement>,
    rep_dim: usize,
    rep: Vec<BitMatrix>,
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingSpec")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl RingSpec {
    /// Assembles a ring from explicit tables. Only shapes and label ranges are
    /// checked here; the algebraic axioms are left to [`validate_ring`].
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        name: impl Into<String>,
        zero: usize,
        one: usize,
        add_table: Vec<Vec<usize>>,
        mul_table: Vec<Vec<usize>>,
        rep_dim: usize,
        rep: Vec<BitMatrix>,
    ) -> Result<Self> {
        let name = name.into();
        let order = add_table.len();
        let bad = |reason: String| Error::MalformedRing {
            name: name.clone(),
            reason,
        };
        if order == 0 || order > 256 {
            return Err(bad(format!("order {order} out of range")));
        }
        let flatten = |table: Vec<Vec<usize>>, what: &str| -> Result<Vec<RingElement>> {
            if table.len() != order || table.iter().any(|row| row.len() != order) {
                return Err(bad(format!("{what} table is not {order}x{order}")));
            }
            table
                .into_iter()
                .flatten()
                .map(|v| {
                    if v < order {
                        Ok(RingElement(v as u8))
                    } else {
                        Err(bad(format!("{what} table entry {v} out of range")))
                    }
                })
                .collect()
        };
        let add_table = flatten(add_table, "addition")?;
        let mul_table = flatten(mul_table, "multiplication")?;
        if zero >= order || one >= order {
            return Err(bad("zero or one label out of range".into()));
        }
        if rep.len() != order {
            return Err(bad(format!(
                "{} representation matrices for {order} elements",
                rep.len()
            )));
        }
        if rep
            .iter()
            .any(|m| m.nrows() != rep_dim || m.ncols() != rep_dim)
        {
            return Err(bad(format!(
                "representation matrices must be {rep_dim}x{rep_dim}"
            )));
        }
        Ok(Self {
            name,
            order,
            zero: RingElement(zero as u8),
            one: RingElement(one as u8),
            add_table,
            mul_table,
            rep_dim,
            rep,
        })
    }

    /// Builds a ring from a set of square bit matrices closed under sum and
    /// product. Element `i` is `reps[i]`; tables are computed by lookup.
    pub fn from_representation(name: impl Into<String>, reps: Vec<BitMatrix>) -> Result<Self> {
        let name = name.into();
        let bad = |reason: &str| Error::MalformedRing {
            name: name.clone(),
            reason: reason.to_string(),
        };
        let dim = reps.first().ok_or_else(|| bad("no elements"))?.nrows();
        let find = |m: &BitMatrix| reps.iter().position(|r| r == m);
        for (i, r) in reps.iter().enumerate() {
            if reps[..i].contains(r) {
                return Err(bad("duplicate representation matrix"));
            }
        }
        let zero = find(&BitMatrix::zero(dim, dim)).ok_or_else(|| bad("zero matrix missing"))?;
        let one = find(&BitMatrix::identity(dim)).ok_or_else(|| bad("identity matrix missing"))?;
        let n = reps.len();
        let mut add = vec![vec![0; n]; n];
        let mut mul = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                add[x][y] =
                    find(&reps[x].add(&reps[y])).ok_or_else(|| bad("not closed under addition"))?;
                mul[x][y] = find(&reps[x].mul(&reps[y]))
                    .ok_or_else(|| bad("not closed under multiplication"))?;
            }
        }
        Self::from_tables(name, zero, one, add, mul, dim, reps)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> RingElement {
        self.zero
    }

    pub fn one(&self) -> RingElement {
        self.one
    }

    pub fn rep_dim(&self) -> usize {
        self.rep_dim
    }

    pub fn element(&self, index: usize) -> Option<RingElement> {
        (index < self.order).then_some(RingElement(index as u8))
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.order).map(|i| RingElement(i as u8))
    }

    pub fn add(&self, x: RingElement, y: RingElement) -> RingElement {
        self.add_table[x.index() * self.order + y.index()]
    }

    pub fn mul(&self, x: RingElement, y: RingElement) -> RingElement {
        self.mul_table[x.index() * self.order + y.index()]
    }

    pub fn rep(&self, x: RingElement) -> &BitMatrix {
        &self.rep[x.index()]
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add_table
            .chunks(self.order)
            .map(|r| r.iter().map(|e| e.index()).collect())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul_table
            .chunks(self.order)
            .map(|r| r.iter().map(|e| e.index()).collect())
            .collect()
    }

    /// Overwrites one multiplication table cell. Used to inject faults.
    pub fn with_mul_entry(mut self, x: RingElement, y: RingElement, value: RingElement) -> Self {
        assert!(value.index() < self.order);
        self.mul_table[x.index() * self.order + y.index()] = value;
        self
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn has_characteristic_two(&self) -> bool {
        self.elements().all(|x| self.add(x, x) == self.zero)
    }

    pub fn is_unit(&self, x: RingElement) -> bool {
        self.elements()
            .any(|y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }
}

/// Serialized form of a ring.
#[derive(Serialize, Deserialize)]
struct RingDocument {
    #[serde(default = "schema_version")]
    schema: u32,
    name: String,
    order: usize,
    zero: usize,
    one: usize,
    add_table: Vec<Vec<usize>>,
    mul_table: Vec<Vec<usize>>,
    rep_dim: usize,
    rep: Vec<BitMatrix>,
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

impl From<RingSpec> for RingDocument {
    fn from(r: RingSpec) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            add_table: r.add_rows(),
            mul_table: r.mul_rows(),
            name: r.name,
            order: r.order,
            zero: r.zero.index(),
            one: r.one.index(),
            rep_dim: r.rep_dim,
            rep: r.rep,
        }
    }
}

impl TryFrom<RingDocument> for RingSpec {
    type Error = Error;

    fn try_from(doc: RingDocument) -> Result<Self> {
        if doc.order != doc.add_table.len() {
            return Err(Error::MalformedRing {
                name: doc.name,
                reason: "order does not match table size".into(),
            });
        }
        RingSpec::from_tables(
            doc.name,
            doc.zero,
            doc.one,
            doc.add_table,
            doc.mul_table,
            doc.rep_dim,
            doc.rep,
        )
    }
}

fn matrix(entries: &[[u8; 2]; 2]) -> BitMatrix {
    BitMatrix::from_entries(entries).expect("2x2 binary literal")
}

/// The full 2x2 matrix ring over GF(2), with the standard 0..15 labeling.
pub fn build_m2f2() -> RingSpec {
    let reps = M2F2_LABELS
        .iter()
        .map(|&[a, b, c, d]| matrix(&[[a, b], [c, d]]))
        .collect();
    RingSpec::from_representation("m2f2", reps).expect("M2(GF(2)) is closed")
}

/// The four commutative rings below `M2(GF(2))` used as sub-lines.
#[derive(Clone, Debug)]
pub struct SmallRings {
    /// `GF(2)`: 0, 1.
    pub gf2: RingSpec,
    /// `GF(4)`: 0, 1, w, w+1 with w^2 = w+1.
    pub gf4: RingSpec,
    /// `GF(2)xGF(2)`: (0,0), (1,1), (1,0), (0,1).
    pub gf2xgf2: RingSpec,
    /// Dual numbers `GF(2)[x]/(x^2)`: 0, 1, x, 1+x.
    pub gf2_dual: RingSpec,
}

pub fn build_small_rings() -> SmallRings {
    let gf2 =
        RingSpec::from_representation("gf2", vec![BitMatrix::zero(1, 1), BitMatrix::identity(1)])
            .expect("GF(2)");

    // companion matrix of x^2 + x + 1
    let w = matrix(&[[0, 1], [1, 1]]);
    let gf4 = RingSpec::from_representation(
        "gf4",
        vec![
            BitMatrix::zero(2, 2),
            BitMatrix::identity(2),
            w.clone(),
            w.add(&BitMatrix::identity(2)),
        ],
    )
    .expect("GF(4)");

    let gf2xgf2 = RingSpec::from_representation(
        "gf2xgf2",
        vec![
            BitMatrix::zero(2, 2),
            BitMatrix::identity(2),
            matrix(&[[1, 0], [0, 0]]),
            matrix(&[[0, 0], [0, 1]]),
        ],
    )
    .expect("GF(2)xGF(2)");

    let x = matrix(&[[0, 1], [0, 0]]);
    let gf2_dual = RingSpec::from_representation(
        "gf2-dual",
        vec![
            BitMatrix::zero(2, 2),
            BitMatrix::identity(2),
            x.clone(),
            x.add(&BitMatrix::identity(2)),
        ],
    )
    .expect("GF(2)[x]/(x^2)");

    SmallRings {
        gf2,
        gf4,
        gf2xgf2,
        gf2_dual,
    }
}

pub fn ring_by_name(name: &str) -> Result<RingSpec> {
    let small = build_small_rings();
    match name {
        "m2f2" => Ok(build_m2f2()),
        "gf2" => Ok(small.gf2),
        "gf4" => Ok(small.gf4),
        "gf2xgf2" => Ok(small.gf2xgf2),
        "gf2-dual" => Ok(small.gf2_dual),
        _ => Err(Error::UnknownRing(name.to_string())),
    }
}

/// Elements with a two-sided inverse, in label order.
pub fn units(r: &RingSpec) -> Vec<RingElement> {
    r.elements().filter(|&x| r.is_unit(x)).collect()
}

/// Everything that is not a unit, zero included.
pub fn zero_divisors(r: &RingSpec) -> Vec<RingElement> {
    r.elements().filter(|&x| !r.is_unit(x)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingViolation {
    AddNotAssociative { x: usize, y: usize, z: usize },
    AddNotCommutative { x: usize, y: usize },
    ZeroNotAdditiveIdentity { x: usize },
    NoAdditiveInverse { x: usize },
    MulNotAssociative { x: usize, y: usize, z: usize },
    LeftDistributivity { x: usize, y: usize, z: usize },
    RightDistributivity { x: usize, y: usize, z: usize },
    OneNotIdentity { x: usize },
    RepAddMismatch { x: usize, y: usize },
    RepMulMismatch { x: usize, y: usize },
    RepNotInjective { x: usize, y: usize },
    RepOneNotIdentity,
}

impl fmt::Display for RingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RingViolation::*;
        match *self {
            AddNotAssociative { x, y, z } => write!(f, "({x}+{y})+{z} != {x}+({y}+{z})"),
            AddNotCommutative { x, y } => write!(f, "{x}+{y} != {y}+{x}"),
            ZeroNotAdditiveIdentity { x } => write!(f, "0+{x} != {x}"),
            NoAdditiveInverse { x } => write!(f, "{x} has no additive inverse"),
            MulNotAssociative { x, y, z } => write!(f, "({x}*{y})*{z} != {x}*({y}*{z})"),
            LeftDistributivity { x, y, z } => write!(f, "{x}*({y}+{z}) != {x}*{y}+{x}*{z}"),
            RightDistributivity { x, y, z } => write!(f, "({y}+{z})*{x} != {y}*{x}+{z}*{x}"),
            OneNotIdentity { x } => write!(f, "1*{x} or {x}*1 != {x}"),
            RepAddMismatch { x, y } => {
                write!(f, "rep({x}+{y}) != rep({x})+rep({y}) (add cell {x},{y})")
            }
            RepMulMismatch { x, y } => {
                write!(f, "rep({x}*{y}) != rep({x})rep({y}) (mul cell {x},{y})")
            }
            RepNotInjective { x, y } => write!(f, "rep({x}) = rep({y})"),
            RepOneNotIdentity => write!(f, "rep(1) is not the identity matrix"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingReport {
    pub ring: String,
    pub order: usize,
    pub violations: Vec<RingViolation>,
}

impl RingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustively checks the ring axioms and the representation. Never stops
/// early: every violated cell or triple is reported.
pub fn validate_ring(r: &RingSpec) -> RingReport {
    use RingViolation::*;
    let mut v = Vec::new();
    let els: Vec<RingElement> = r.elements().collect();
    let (zero, one) = (r.zero(), r.one());

    for &x in &els {
        if r.add(zero, x) != x || r.add(x, zero) != x {
            v.push(ZeroNotAdditiveIdentity { x: x.index() });
        }
        if !els.iter().any(|&y| r.add(x, y) == zero) {
            v.push(NoAdditiveInverse { x: x.index() });
        }
        if r.mul(one, x) != x || r.mul(x, one) != x {
            v.push(OneNotIdentity { x: x.index() });
        }
        for &y in &els {
            if x < y && r.add(x, y) != r.add(y, x) {
                v.push(AddNotCommutative {
                    x: x.index(),
                    y: y.index(),
                });
            }
        }
    }
    for &x in &els {
        for &y in &els {
            for &z in &els {
                let (i, j, k) = (x.index(), y.index(), z.index());
                if r.add(r.add(x, y), z) != r.add(x, r.add(y, z)) {
                    v.push(AddNotAssociative { x: i, y: j, z: k });
                }
                if r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z)) {
                    v.push(MulNotAssociative { x: i, y: j, z: k });
                }
                if r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z)) {
                    v.push(LeftDistributivity { x: i, y: j, z: k });
                }
                if r.mul(r.add(y, z), x) != r.add(r.mul(y, x), r.mul(z, x)) {
                    v.push(RightDistributivity { x: i, y: j, z: k });
                }
            }
        }
    }

    let dim = r.rep_dim();
    if *r.rep(one) != BitMatrix::identity(dim) {
        v.push(RepOneNotIdentity);
    }
    for &x in &els {
        for &y in &els {
            let (i, j) = (x.index(), y.index());
            if x < y && r.rep(x) == r.rep(y) {
                v.push(RepNotInjective { x: i, y: j });
            }
            if *r.rep(r.add(x, y)) != r.rep(x).add(r.rep(y)) {
                v.push(RepAddMismatch { x: i, y: j });
            }
            if *r.rep(r.mul(x, y)) != r.rep(x).mul(r.rep(y)) {
                v.push(RepMulMismatch { x: i, y: j });
            }
        }
    }

    RingReport {
        ring: r.name().to_string(),
        order: r.order(),
        violations: v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u8) -> RingElement {
        RingElement::new(i)
    }

    #[test]
    fn m2f2_table_spot_values() {
        let r = build_m2f2();
        assert_eq!(r.order(), 16);
        assert_eq!(r.add(e(2), e(3)), e(1));
        assert_eq!(r.mul(e(5), e(4)), e(0));
        assert_eq!(r.mul(e(9), e(9)), e(1));
        assert!(r.elements().all(|x| r.add(x, x) == r.zero()));
    }

    #[test]
    fn m2f2_units_and_zero_divisors() {
        let r = build_m2f2();
        let u: Vec<usize> = units(&r).iter().map(|x| x.index()).collect();
        assert_eq!(u, vec![1, 2, 9, 11, 12, 13]);
        assert_eq!(zero_divisors(&r).len(), 10);
        assert!(zero_divisors(&r).contains(&r.zero()));
    }

    #[test]
    fn unit_iff_not_a_left_zero_divisor() {
        for name in RING_NAMES {
            let r = ring_by_name(name).unwrap();
            for x in r.elements() {
                let two_sided = r
                    .elements()
                    .any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one());
                let left_zd = r
                    .elements()
                    .any(|y| y != r.zero() && r.mul(x, y) == r.zero());
                assert_eq!(r.is_unit(x), two_sided, "{name} {x:?}");
                assert_eq!(r.is_unit(x), !left_zd, "{name} {x:?}");
            }
        }
    }

    #[test]
    fn small_ring_arithmetic() {
        let s = build_small_rings();
        // GF(4): w*w = w+1, and w has multiplicative order 3
        let (w, w1) = (e(2), e(3));
        assert_eq!(s.gf4.mul(w, w), w1);
        assert_eq!(s.gf4.mul(w, s.gf4.mul(w, w)), s.gf4.one());
        assert_eq!(s.gf4.add(w, s.gf4.one()), w1);
        // GF(2)xGF(2): (1,0)(0,1) = 0
        assert_eq!(s.gf2xgf2.mul(e(2), e(3)), s.gf2xgf2.zero());
        // dual numbers: x*x = 0
        assert_eq!(s.gf2_dual.mul(e(2), e(2)), s.gf2_dual.zero());
    }

    #[test]
    fn small_ring_unit_counts() {
        let s = build_small_rings();
        assert_eq!(units(&s.gf2), vec![e(1)]);
        assert_eq!(units(&s.gf4).len(), 3);
        assert_eq!(units(&s.gf2xgf2).len(), 1);
        assert_eq!(units(&s.gf2_dual).len(), 2);
        for r in [&s.gf2, &s.gf4, &s.gf2xgf2, &s.gf2_dual] {
            assert!(r.has_characteristic_two());
            assert!(r.is_commutative(), "{}", r.name());
        }
        assert!(!build_m2f2().is_commutative());
    }

    #[test]
    fn every_built_ring_validates() {
        let s = build_small_rings();
        for r in [build_m2f2(), s.gf2, s.gf4, s.gf2xgf2, s.gf2_dual] {
            let report = validate_ring(&r);
            assert!(report.is_valid(), "{}: {:?}", r.name(), report.violations);
        }
    }

    #[test]
    fn corrupted_cell_is_reported() {
        let r = build_m2f2().with_mul_entry(e(5), e(4), e(7));
        let report = validate_ring(&r);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .contains(&RingViolation::RepMulMismatch { x: 5, y: 4 }));
    }

    #[test]
    fn unit_iff_full_rank_representation() {
        let s = build_small_rings();
        for r in [build_m2f2(), s.gf2, s.gf4, s.gf2xgf2, s.gf2_dual] {
            for x in r.elements() {
                assert_eq!(r.is_unit(x), r.rep(x).is_invertible(), "{} {x}", r.name());
            }
        }
    }

    #[test]
    fn malformed_tables_rejected() {
        let err = RingSpec::from_tables(
            "bad",
            0,
            1,
            vec![vec![0, 1]],
            vec![vec![0, 0], vec![0, 1]],
            1,
            vec![],
        );
        assert!(matches!(err, Err(Error::MalformedRing { .. })));
        assert!(ring_by_name("z9").is_err());
    }

    #[test]
    fn json_document_shape() {
        let r = build_small_rings().gf2;
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["order"], 2);
        assert_eq!(v["mul_table"], serde_json::json!([[0, 0], [0, 1]]));
        assert_eq!(v["rep"], serde_json::json!([[[0]], [[1]]]));
        let back: RingSpec = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
