//! Exact two-qubit Pauli algebra.
//!
//! A non-identity two-qubit Pauli operator is stored as its symplectic label
//! `(z1, x1, z2, x2)`. Products carry a phase in `{+1, +i, -1, -i}` and traces
//! follow from the rule that every non-identity Pauli is traceless, so all
//! arithmetic below is over the Gaussian integers.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use serde::Serialize;

use crate::fixtures::STANDARD_LABELING;
use crate::relation::{Relation, RelationMatrix};
use crate::{Error, Result};

/// A power of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub enum Phase {
    #[default]
    One,
    I,
    MinusOne,
    MinusI,
}

impl Phase {
    pub fn from_power(k: u8) -> Self {
        match k % 4 {
            0 => Phase::One,
            1 => Phase::I,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn power(self) -> u8 {
        self as u8
    }

    pub fn is_real(self) -> bool {
        matches!(self, Phase::One | Phase::MinusOne)
    }

    pub fn to_gaussian(self) -> Gaussian {
        match self {
            Phase::One => Gaussian::new(1, 0),
            Phase::I => Gaussian::new(0, 1),
            Phase::MinusOne => Gaussian::new(-1, 0),
            Phase::MinusI => Gaussian::new(0, -1),
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Phase::One => "+",
            Phase::I => "+i",
            Phase::MinusOne => "-",
            Phase::MinusI => "-i",
        }
    }
}

impl Mul for Phase {
    type Output = Phase;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Phase) -> Phase {
        Phase::from_power(self.power() + rhs.power())
    }
}

/// Gaussian integer `re + i im`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Gaussian {
    pub re: i64,
    pub im: i64,
}

impl Gaussian {
    pub const ZERO: Gaussian = Gaussian { re: 0, im: 0 };

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub fn scale(self, k: i64) -> Self {
        Self::new(self.re * k, self.im * k)
    }
}

impl Add for Gaussian {
    type Output = Gaussian;

    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re + o.re, self.im + o.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;

    fn mul(self, o: Gaussian) -> Gaussian {
        Gaussian::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;

    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

/// Single-qubit factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Id,
    X,
    Y,
    Z,
}

impl Factor {
    /// `(z, x)` bits; `Y` has both.
    pub fn bits(self) -> (u8, u8) {
        match self {
            Factor::Id => (0, 0),
            Factor::X => (0, 1),
            Factor::Z => (1, 0),
            Factor::Y => (1, 1),
        }
    }

    pub fn from_bits(z: u8, x: u8) -> Self {
        match (z & 1, x & 1) {
            (0, 0) => Factor::Id,
            (0, 1) => Factor::X,
            (1, 0) => Factor::Z,
            _ => Factor::Y,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Factor::Id => '1',
            Factor::X => 'X',
            Factor::Y => 'Y',
            Factor::Z => 'Z',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '1' | 'I' => Some(Factor::Id),
            'X' | 'x' => Some(Factor::X),
            'Y' | 'y' => Some(Factor::Y),
            'Z' | 'z' => Some(Factor::Z),
            _ => None,
        }
    }

    /// `self * other = phase * factor`, from `s_a s_b = delta_ab + i eps_abc s_c`.
    pub fn product(self, other: Factor) -> (Phase, Factor) {
        use Factor::*;
        match (self, other) {
            (Id, f) | (f, Id) => (Phase::One, f),
            (a, b) if a == b => (Phase::One, Id),
            (X, Y) => (Phase::I, Z),
            (Y, Z) => (Phase::I, X),
            (Z, X) => (Phase::I, Y),
            (Y, X) => (Phase::MinusI, Z),
            (Z, Y) => (Phase::MinusI, X),
            (X, Z) => (Phase::MinusI, Y),
            _ => unreachable!(),
        }
    }
}

/// One of the 15 non-identity two-qubit Pauli operators.
///
/// Label bits, high to low: `z1 x1 z2 x2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliOp(u8);

impl PauliOp {
    pub fn from_label(label: u8) -> Option<Self> {
        (label != 0 && label < 16).then_some(Self(label))
    }

    pub fn from_factors(first: Factor, second: Factor) -> Option<Self> {
        let ((z1, x1), (z2, x2)) = (first.bits(), second.bits());
        Self::from_label(z1 << 3 | x1 << 2 | z2 << 1 | x2)
    }

    pub fn label(self) -> u8 {
        self.0
    }

    /// `(z1, x1, z2, x2)`.
    pub fn symplectic(self) -> (u8, u8, u8, u8) {
        (
            self.0 >> 3 & 1,
            self.0 >> 2 & 1,
            self.0 >> 1 & 1,
            self.0 & 1,
        )
    }

    pub fn factors(self) -> (Factor, Factor) {
        let (z1, x1, z2, x2) = self.symplectic();
        (Factor::from_bits(z1, x1), Factor::from_bits(z2, x2))
    }

    /// All 15 operators in label order.
    pub fn all() -> impl Iterator<Item = PauliOp> {
        (1..16).map(PauliOp)
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.factors();
        write!(f, "{}{}", a.symbol(), b.symbol())
    }
}

impl fmt::Debug for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PauliOp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_factors(s: &str) -> Result<(Factor, Factor)> {
    let mut chars = s.chars();
    match (chars.next(), chars.next(), chars.next()) {
        (Some(a), Some(b), None) => match (Factor::from_symbol(a), Factor::from_symbol(b)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::Parse(format!("bad Pauli factors in `{s}`"))),
        },
        _ => Err(Error::Parse(format!(
            "expected two factor symbols, got `{s}`"
        ))),
    }
}

impl FromStr for PauliOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = parse_factors(s)?;
        PauliOp::from_factors(a, b).ok_or_else(|| Error::Parse(format!("`{s}` is the identity")))
    }
}

/// Symplectic commutation test.
pub fn commutes(a: PauliOp, b: PauliOp) -> bool {
    let (za1, xa1, za2, xa2) = a.symplectic();
    let (zb1, xb1, zb2, xb2) = b.symplectic();
    (za1 * xb1 + xa1 * zb1 + za2 * xb2 + xa2 * zb2) % 2 == 0
}

/// A Pauli operator or the identity, times a phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PhasedPauli {
    pub phase: Phase,
    /// `None` is the identity.
    pub body: Option<PauliOp>,
}

impl PhasedPauli {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(phase: Phase, body: Option<PauliOp>) -> Self {
        Self { phase, body }
    }

    pub fn label(self) -> u8 {
        self.body.map_or(0, PauliOp::label)
    }

    fn from_label(phase: Phase, label: u8) -> Self {
        Self::new(phase, PauliOp::from_label(label))
    }

    pub fn factors(self) -> (Factor, Factor) {
        self.body.map_or((Factor::Id, Factor::Id), PauliOp::factors)
    }

    /// Trace of the 4x4 matrix: `4 * phase` for the identity, else zero.
    pub fn trace(self) -> Gaussian {
        match self.body {
            None => self.phase.to_gaussian().scale(4),
            Some(_) => Gaussian::ZERO,
        }
    }

    pub fn is_identity(self) -> bool {
        self.body.is_none()
    }
}

impl From<PauliOp> for PhasedPauli {
    fn from(p: PauliOp) -> Self {
        Self::new(Phase::One, Some(p))
    }
}

/// Exact product, factor by factor.
pub fn multiply(a: PhasedPauli, b: PhasedPauli) -> PhasedPauli {
    let (a1, a2) = a.factors();
    let (b1, b2) = b.factors();
    let (p1, f1) = a1.product(b1);
    let (p2, f2) = a2.product(b2);
    let body = match (f1, f2) {
        (Factor::Id, Factor::Id) => None,
        (f1, f2) => PauliOp::from_factors(f1, f2),
    };
    PhasedPauli::new(a.phase * b.phase * p1 * p2, body)
}

impl Mul for PhasedPauli {
    type Output = PhasedPauli;

    fn mul(self, rhs: PhasedPauli) -> PhasedPauli {
        multiply(self, rhs)
    }
}

impl fmt::Display for PhasedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.body {
            Some(p) => write!(f, "{}{}", self.phase.prefix(), p),
            None => write!(f, "{}11", self.phase.prefix()),
        }
    }
}

impl FromStr for PhasedPauli {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (sign, rest) = match s.as_bytes().first() {
            Some(b'-') => (Phase::MinusOne, &s[1..]),
            Some(b'+') => (Phase::One, &s[1..]),
            _ => (Phase::One, s),
        };
        let (phase, body) = match rest.strip_prefix('i') {
            Some(body) => (sign * Phase::I, body),
            None => (sign, rest),
        };
        let (a, b) = parse_factors(body)?;
        Ok(PhasedPauli::new(phase, PauliOp::from_factors(a, b)))
    }
}

/// Assignment of Pauli operators to the points C1..C15.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PauliLabeling {
    ops: Vec<PauliOp>,
}

impl PauliLabeling {
    /// Checks that the 15 operators are distinct.
    pub fn new(ops: Vec<PauliOp>) -> Result<Self> {
        if ops.len() != 15 {
            return Err(Error::InvalidLabeling(format!(
                "{} operators, expected 15",
                ops.len()
            )));
        }
        let mut seen = 0u16;
        for op in &ops {
            if seen >> op.label() & 1 == 1 {
                return Err(Error::InvalidLabeling(format!("{op} appears twice")));
            }
            seen |= 1 << op.label();
        }
        Ok(Self { ops })
    }

    pub fn get(&self, i: usize) -> PauliOp {
        self.ops[i]
    }

    pub fn ops(&self) -> &[PauliOp] {
        &self.ops
    }

    pub fn index_of(&self, op: PauliOp) -> usize {
        self.ops
            .iter()
            .position(|&o| o == op)
            .expect("labeling is a bijection")
    }

    /// Exchanges the operators at two positions.
    pub fn swapped(mut self, i: usize, j: usize) -> Self {
        self.ops.swap(i, j);
        self
    }
}

/// C1 = ZX, C2 = YY, ..., C15 = Z1.
pub fn standard_labeling() -> PauliLabeling {
    let ops = STANDARD_LABELING
        .iter()
        .map(|s| s.parse().expect("fixture labels parse"))
        .collect();
    PauliLabeling::new(ops).expect("fixture labeling is a bijection")
}

/// `Distant` where the operators fail to commute.
pub fn commutation_table(l: &PauliLabeling) -> RelationMatrix {
    RelationMatrix::from_fn(15, |i, j| {
        if commutes(l.get(i), l.get(j)) {
            Relation::Neighbor
        } else {
            Relation::Distant
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

fn check_commuting_triple(triple: &[PauliOp; 3]) -> Result<PhasedPauli> {
    for i in 0..3 {
        for j in i + 1..3 {
            if !commutes(triple[i], triple[j]) {
                return Err(Error::NotCommuting(triple[i], triple[j]));
            }
        }
    }
    let product = triple.iter().fold(PhasedPauli::identity(), |acc, &p| {
        acc * PhasedPauli::from(p)
    });
    if !product.is_identity() || !product.phase.is_real() {
        return Err(Error::ProductNotIdentity(*triple));
    }
    Ok(product)
}

/// Sign of the ordered product of three pairwise commuting operators whose
/// product is a multiple of the identity.
pub fn line_product_sign(triple: &[PauliOp; 3]) -> Result<Sign> {
    let product = check_commuting_triple(triple)?;
    Ok(if product.phase == Phase::One {
        Sign::Plus
    } else {
        Sign::Minus
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MerminReport {
    pub row_signs: [Sign; 3],
    pub col_signs: [Sign; 3],
    /// The six signs multiply to -1, so no assignment of fixed +/-1 values
    /// to the nine operators reproduces all six products.
    pub magic: bool,
}

pub fn mermin_square_check(grid: &[[PauliOp; 3]; 3]) -> Result<MerminReport> {
    let mut row_signs = [Sign::Plus; 3];
    let mut col_signs = [Sign::Plus; 3];
    for i in 0..3 {
        row_signs[i] = line_product_sign(&grid[i]).map_err(|e| Error::MerminLine {
            line: format!("row {}", i + 1),
            source: Box::new(e),
        })?;
    }
    for j in 0..3 {
        let col = [grid[0][j], grid[1][j], grid[2][j]];
        col_signs[j] = line_product_sign(&col).map_err(|e| Error::MerminLine {
            line: format!("column {}", j + 1),
            source: Box::new(e),
        })?;
    }
    let total = row_signs
        .iter()
        .chain(&col_signs)
        .fold(Sign::Plus, |acc, &s| acc * s);
    Ok(MerminReport {
        row_signs,
        col_signs,
        magic: total == Sign::Minus,
    })
}

/// A linear combination of the 16 two-qubit Paulis (identity at index 0)
/// with Gaussian-integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct PauliSum {
    coeffs: [Gaussian; 16],
}

impl PauliSum {
    pub fn term(c: Gaussian, p: PhasedPauli) -> Self {
        let mut s = Self::default();
        s.coeffs[p.label() as usize] = c * p.phase.to_gaussian();
        s
    }

    pub fn coefficient(&self, label: u8) -> Gaussian {
        self.coeffs[label as usize]
    }

    pub fn trace(&self) -> Gaussian {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Gaussian::ZERO)
            .map(|(l, &c)| c * PhasedPauli::from_label(Phase::One, l as u8).trace())
            .fold(Gaussian::ZERO, |a, b| a + b)
    }
}

impl Add for PauliSum {
    type Output = PauliSum;

    fn add(mut self, o: PauliSum) -> PauliSum {
        for (a, b) in self.coeffs.iter_mut().zip(o.coeffs) {
            *a = *a + b;
        }
        self
    }
}

impl Mul for PauliSum {
    type Output = PauliSum;

    fn mul(self, o: PauliSum) -> PauliSum {
        let mut out = PauliSum::default();
        for (la, &ca) in self.coeffs.iter().enumerate() {
            if ca == Gaussian::ZERO {
                continue;
            }
            for (lb, &cb) in o.coeffs.iter().enumerate() {
                if cb == Gaussian::ZERO {
                    continue;
                }
                let p = PhasedPauli::from_label(Phase::One, la as u8)
                    * PhasedPauli::from_label(Phase::One, lb as u8);
                let slot = &mut out.coeffs[p.label() as usize];
                *slot = *slot + ca * cb * p.phase.to_gaussian();
            }
        }
        out
    }
}

/// `4 P(s, t) = (I + sA)(I + tB)`, the scaled projector onto the joint
/// eigenspace of two commuting operators.
pub fn scaled_projector(a: PauliOp, s: Sign, b: PauliOp, t: Sign) -> PauliSum {
    let one = Gaussian::new(1, 0);
    let id = PauliSum::term(one, PhasedPauli::identity());
    let fa = id + PauliSum::term(one.scale(s.value().into()), a.into());
    let fb = id + PauliSum::term(one.scale(t.value().into()), b.into());
    fa * fb
}

/// `16 Tr(P Q)` for two scaled projectors `4P`, `4Q`.
pub fn scaled_overlap(p: &PauliSum, q: &PauliSum) -> Gaussian {
    (*p * *q).trace()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MubReport {
    pub projectors: usize,
    pub pairs_checked: usize,
    /// Human-readable description of every pair that failed.
    pub failures: Vec<String>,
}

impl MubReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_spread_partition(spread: &[[PauliOp; 3]]) -> Result<()> {
    if spread.len() != 5 {
        return Err(Error::NotAPartition(format!(
            "{} triples, expected 5",
            spread.len()
        )));
    }
    let mut seen = 0u16;
    for op in spread.iter().flatten() {
        if seen >> op.label() & 1 == 1 {
            return Err(Error::NotAPartition(format!("{op} appears twice")));
        }
        seen |= 1 << op.label();
    }
    Ok(())
}

/// Checks every projector pair of the four-element bases attached to the
/// five triples: `Tr(PP') = delta` within a basis, `1/4` across bases.
pub fn mub_spread_report(spread: &[[PauliOp; 3]]) -> Result<MubReport> {
    check_spread_partition(spread)?;
    for (index, t) in spread.iter().enumerate() {
        check_commuting_triple(t).map_err(|e| Error::SpreadTriple {
            index,
            source: Box::new(e),
        })?;
    }
    let signs = [
        (Sign::Plus, Sign::Plus),
        (Sign::Plus, Sign::Minus),
        (Sign::Minus, Sign::Plus),
        (Sign::Minus, Sign::Minus),
    ];
    let projectors: Vec<(usize, usize, PauliSum)> = spread
        .iter()
        .enumerate()
        .flat_map(|(bi, t)| {
            signs
                .iter()
                .enumerate()
                .map(move |(si, &(s, u))| (bi, si, scaled_projector(t[0], s, t[1], u)))
        })
        .collect();

    let mut failures = Vec::new();
    let mut pairs = 0;
    for (i, (bi, si, p)) in projectors.iter().enumerate() {
        for (bj, sj, q) in &projectors[i..] {
            pairs += 1;
            // 16 Tr(PQ): 16 for P = Q, 0 within a basis, 4 (= 16/4) across
            let expected = match (bi == bj, si == sj) {
                (true, true) => 16,
                (true, false) => 0,
                (false, _) => 4,
            };
            let got = scaled_overlap(p, q);
            if got != Gaussian::new(expected, 0) {
                failures.push(format!(
                    "basis {bi} projector {si} vs basis {bj} projector {sj}: 16Tr = {}{:+}i, expected {expected}",
                    got.re, got.im
                ));
            }
        }
    }
    Ok(MubReport {
        projectors: projectors.len(),
        pairs_checked: pairs,
        failures,
    })
}

pub fn mub_spread_check(spread: &[[PauliOp; 3]]) -> Result<bool> {
    Ok(mub_spread_report(spread)?.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> PauliOp {
        s.parse().unwrap()
    }

    fn c(i: usize) -> PauliOp {
        standard_labeling().get(i - 1)
    }

    #[test]
    fn labels_round_trip() {
        for p in PauliOp::all() {
            assert_eq!(p.to_string().parse::<PauliOp>().unwrap(), p);
            let (a, b) = p.factors();
            assert_eq!(PauliOp::from_factors(a, b), Some(p));
        }
        assert!("11".parse::<PauliOp>().is_err());
        assert!("XQ".parse::<PauliOp>().is_err());
        assert!("XYZ".parse::<PauliOp>().is_err());
    }

    #[test]
    fn phased_strings() {
        let p: PhasedPauli = "-iZX".parse().unwrap();
        assert_eq!(p, PhasedPauli::new(Phase::MinusI, Some(op("ZX"))));
        assert_eq!(p.to_string(), "-iZX");
        assert_eq!(
            "+11".parse::<PhasedPauli>().unwrap(),
            PhasedPauli::identity()
        );
        assert_eq!("XY".parse::<PhasedPauli>().unwrap().to_string(), "+XY");
    }

    #[test]
    fn commutation_examples() {
        assert!(commutes(c(1), c(2)));
        assert!(!commutes(c(1), c(5)));
        assert!(PauliOp::all().all(|a| commutes(a, a)));
    }

    #[test]
    fn product_examples() {
        let p = PhasedPauli::from(op("X1")) * PhasedPauli::from(op("Z1"));
        assert_eq!(p, PhasedPauli::new(Phase::MinusI, Some(op("Y1"))));
        for a in PauliOp::all() {
            assert_eq!(PhasedPauli::from(a) * a.into(), PhasedPauli::identity());
        }
        let triple = PhasedPauli::from(c(1)) * c(2).into() * c(7).into();
        assert_eq!(triple, PhasedPauli::identity());
    }

    #[test]
    fn standard_labeling_entries() {
        let l = standard_labeling();
        assert_eq!(l.get(6), op("XZ"));
        assert_eq!(l.get(14), op("Z1"));
        assert!(PauliLabeling::new(vec![op("XX"); 15]).is_err());
    }

    #[test]
    fn commutation_table_row_one() {
        let t = commutation_table(&standard_labeling());
        assert_eq!(t.row_string(0), "----++-+++-+++-");
        assert!(t.is_symmetric());
        for i in 0..15 {
            assert_eq!(t.count_in_row(i, Relation::Neighbor), 6);
        }
    }

    #[test]
    fn line_signs() {
        assert_eq!(line_product_sign(&[c(7), c(8), c(9)]).unwrap(), Sign::Minus);
        assert_eq!(
            line_product_sign(&[c(10), c(11), c(12)]).unwrap(),
            Sign::Plus
        );
        assert_eq!(line_product_sign(&[c(1), c(2), c(7)]).unwrap(), Sign::Plus);
        assert!(matches!(
            line_product_sign(&[c(1), c(5), c(7)]),
            Err(Error::NotCommuting(..))
        ));
        assert_eq!(
            line_product_sign(&[op("1X"), op("X1"), op("XX")]).unwrap(),
            Sign::Plus
        );
        assert!(matches!(
            line_product_sign(&[op("1X"), op("X1"), op("ZZ")]),
            Err(Error::NotCommuting(..))
        ));
        assert!(matches!(
            line_product_sign(&[op("1X"), op("X1"), op("1X")]),
            Err(Error::ProductNotIdentity(..))
        ));
    }

    #[test]
    fn line_sign_is_order_independent() {
        let t = [c(7), c(8), c(9)];
        for p in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            assert_eq!(line_product_sign(&p.map(|i| t[i])).unwrap(), Sign::Minus);
        }
    }

    #[test]
    fn mermin_grid() {
        let g = [
            [c(7), c(8), c(9)],
            [c(10), c(11), c(12)],
            [c(13), c(14), c(15)],
        ];
        let r = mermin_square_check(&g).unwrap();
        assert_eq!(r.row_signs, [Sign::Minus, Sign::Plus, Sign::Plus]);
        assert_eq!(r.col_signs, [Sign::Plus; 3]);
        assert!(r.magic);
        let t = [
            [g[0][0], g[1][0], g[2][0]],
            [g[0][1], g[1][1], g[2][1]],
            [g[0][2], g[1][2], g[2][2]],
        ];
        assert!(mermin_square_check(&t).unwrap().magic);
    }

    #[test]
    fn mermin_bad_row_is_named() {
        let g = [
            [c(7), c(1), c(9)],
            [c(10), c(11), c(12)],
            [c(13), c(14), c(15)],
        ];
        match mermin_square_check(&g) {
            Err(Error::MerminLine { line, .. }) => assert_eq!(line, "row 1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn projector_idempotent_under_trace() {
        let p = scaled_projector(c(7), Sign::Plus, c(8), Sign::Minus);
        assert_eq!(scaled_overlap(&p, &p), Gaussian::new(16, 0));
        assert_eq!(p.trace(), Gaussian::new(4, 0));
    }

    #[test]
    fn spread_with_repeated_operator_rejected() {
        let t = [c(7), c(8), c(9)];
        let spread = [t, t, t, t, t];
        assert!(matches!(
            mub_spread_check(&spread),
            Err(Error::NotAPartition(_))
        ));
    }
}
