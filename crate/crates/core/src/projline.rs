//! The projective line `P1(R)` over a finite ring `R`.
//!
//! A pair `(a, b)` is admissible when it is the first row of some invertible
//! 2x2 matrix over `R`. Points are the orbits of admissible pairs under left
//! multiplication by units, `(a, b) ~ (ra, rb)`. Two points are distant when
//! the matrix stacking their representatives is invertible, neighbor
//! otherwise; every point is its own neighbor.
//!
//! `GL(2,R)` acts on the right, `(a, b) -> (a, b) g`, which commutes with the
//! left unit scaling and so acts on points.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::bits::BitMatrix;
use crate::relation::{Relation, RelationMatrix};
use crate::ring::{units, RingElement, RingSpec};
use crate::{Error, Result, SCHEMA_VERSION};

pub type Pair = (RingElement, RingElement);

/// A 2x2 matrix over a ring, row-major: `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix2R {
    pub a: RingElement,
    pub b: RingElement,
    pub c: RingElement,
    pub d: RingElement,
}

impl Matrix2R {
    pub fn new(a: RingElement, b: RingElement, c: RingElement, d: RingElement) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_rows(top: Pair, bottom: Pair) -> Self {
        Self::new(top.0, top.1, bottom.0, bottom.1)
    }

    pub fn identity(r: &RingSpec) -> Self {
        Self::new(r.one(), r.zero(), r.zero(), r.one())
    }

    pub fn swap(r: &RingSpec) -> Self {
        Self::new(r.zero(), r.one(), r.one(), r.zero())
    }

    /// The row vector `(x, y)` times this matrix.
    pub fn apply(&self, r: &RingSpec, (x, y): Pair) -> Pair {
        (
            r.add(r.mul(x, self.a), r.mul(y, self.c)),
            r.add(r.mul(x, self.b), r.mul(y, self.d)),
        )
    }

    pub fn mul(&self, r: &RingSpec, other: &Self) -> Self {
        let (a, b) = other.apply(r, (self.a, self.b));
        let (c, d) = other.apply(r, (self.c, self.d));
        Self::new(a, b, c, d)
    }
}

/// Membership in `GL(2,R)`: the block bit matrix obtained by replacing each
/// entry with its representation has full rank.
pub fn is_invertible_2x2(r: &RingSpec, m: &Matrix2R) -> bool {
    BitMatrix::block2x2(r.rep(m.a), r.rep(m.b), r.rep(m.c), r.rep(m.d)).is_invertible()
}

pub fn is_admissible(r: &RingSpec, a: RingElement, b: RingElement) -> bool {
    r.elements().any(|c| {
        r.elements()
            .any(|d| is_invertible_2x2(r, &Matrix2R::new(a, b, c, d)))
    })
}

/// Relation between two admissible pairs, computed directly.
pub fn relation_of_pairs(r: &RingSpec, p: Pair, q: Pair) -> Relation {
    if is_invertible_2x2(r, &Matrix2R::from_rows(p, q)) {
        Relation::Distant
    } else {
        Relation::Neighbor
    }
}

/// One point of the line: the left-unit orbit of an admissible pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointClass {
    canonical: Pair,
    members: Vec<Pair>,
}

impl PointClass {
    /// Lexicographically least member.
    pub fn canonical(&self) -> Pair {
        self.canonical
    }

    /// All members, sorted.
    pub fn members(&self) -> &[Pair] {
        &self.members
    }

    pub fn contains(&self, p: Pair) -> bool {
        self.members.binary_search(&p).is_ok()
    }

    /// Least first coordinate, least second coordinate, then the canonical
    /// pair. Points whose coordinates have the same left associates sort
    /// together.
    pub fn associate_key(&self) -> (RingElement, RingElement, Pair) {
        let a = self
            .members
            .iter()
            .map(|p| p.0)
            .min()
            .expect("non-empty orbit");
        let b = self
            .members
            .iter()
            .map(|p| p.1)
            .min()
            .expect("non-empty orbit");
        (a, b, self.canonical)
    }
}

pub fn format_pair((a, b): Pair) -> String {
    format!("({a},{b})")
}

#[derive(Clone, Debug)]
pub struct ProjectiveLine {
    ring: RingSpec,
    units: Vec<RingElement>,
    points: Vec<PointClass>,
    relation: RelationMatrix,
    point_index: Vec<Option<usize>>,
    gl2: OnceLock<Vec<Matrix2R>>,
}

/// Enumerates `P1(R)`: every admissible pair is grouped into its left-unit
/// orbit and the orbits are sorted by canonical representative.
pub fn enumerate_line(r: &RingSpec) -> ProjectiveLine {
    let n = r.order();
    let us = units(r);
    let mut point_index: Vec<Option<usize>> = vec![None; n * n];
    let mut points: Vec<PointClass> = Vec::new();
    let idx = |(a, b): Pair| a.index() * n + b.index();

    for a in r.elements() {
        for b in r.elements() {
            if point_index[idx((a, b))].is_some() || !is_admissible(r, a, b) {
                continue;
            }
            let mut members: Vec<Pair> = us.iter().map(|&u| (r.mul(u, a), r.mul(u, b))).collect();
            members.sort();
            members.dedup();
            for &m in &members {
                point_index[idx(m)] = Some(usize::MAX);
            }
            points.push(PointClass {
                canonical: members[0],
                members,
            });
        }
    }
    points.sort_by_key(|p| p.canonical);
    for (i, p) in points.iter().enumerate() {
        for &m in &p.members {
            point_index[idx(m)] = Some(i);
        }
    }
    let relation = RelationMatrix::from_fn(points.len(), |i, j| {
        if i == j {
            Relation::Neighbor
        } else {
            relation_of_pairs(r, points[i].canonical, points[j].canonical)
        }
    });
    ProjectiveLine {
        ring: r.clone(),
        units: us,
        points,
        relation,
        point_index,
        gl2: OnceLock::new(),
    }
}

impl ProjectiveLine {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn units(&self) -> &[RingElement] {
        &self.units
    }

    pub fn points(&self) -> &[PointClass] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, id: usize) -> &PointClass {
        &self.points[id]
    }

    /// The point containing an admissible pair.
    pub fn point_of(&self, (a, b): Pair) -> Option<usize> {
        let n = self.ring.order();
        if a.index() >= n || b.index() >= n {
            return None;
        }
        self.point_index[a.index() * n + b.index()]
    }

    /// Same as [`point_of`](Self::point_of) but with raw labels.
    pub fn point_of_labels(&self, a: usize, b: usize) -> Result<usize> {
        let (ea, eb) = (self.ring.element(a), self.ring.element(b));
        match (ea, eb) {
            (Some(ea), Some(eb)) => self.point_of((ea, eb)).ok_or(Error::NotAdmissible(a, b)),
            _ => Err(Error::NotAdmissible(a, b)),
        }
    }

    pub fn relation(&self, x: usize, y: usize) -> Relation {
        self.relation.get(x, y)
    }

    pub fn relation_matrix(&self) -> &RelationMatrix {
        &self.relation
    }

    pub fn labels(&self) -> Vec<String> {
        (1..=self.len()).map(|i| format!("P{i}")).collect()
    }

    /// `GL(2,R)`, computed on first use by a rank test over all `|R|^4` matrices.
    pub fn general_linear_group(&self) -> &[Matrix2R] {
        self.gl2.get_or_init(|| {
            let r = &self.ring;
            let mut out = Vec::new();
            for a in r.elements() {
                for b in r.elements() {
                    for c in r.elements() {
                        for d in r.elements() {
                            let m = Matrix2R::new(a, b, c, d);
                            if is_invertible_2x2(r, &m) {
                                out.push(m);
                            }
                        }
                    }
                }
            }
            out
        })
    }

    /// Image of a point under the right action of `g`.
    pub fn map_point(&self, id: usize, g: &Matrix2R) -> usize {
        let image = g.apply(&self.ring, self.points[id].canonical);
        self.point_of(image)
            .expect("GL(2,R) preserves admissibility")
    }

    pub fn is_pairwise_distant(&self, ids: &[usize]) -> bool {
        ids.iter().enumerate().all(|(i, &x)| {
            ids[..i]
                .iter()
                .all(|&y| x != y && self.relation(x, y) == Relation::Distant)
        })
    }

    /// The points `(1,0)`, `(0,1)`, `(1,1)`.
    pub fn standard_triple(&self) -> [usize; 3] {
        let (z, o) = (self.ring.zero(), self.ring.one());
        [(o, z), (z, o), (o, o)].map(|p| self.point_of(p).expect("standard points are admissible"))
    }

    /// JSON document with every point, its orbit and the lower triangle of
    /// the relation.
    pub fn to_json(&self) -> serde_json::Value {
        let pair = |(a, b): Pair| json!([a.index(), b.index()]);
        let points: Vec<_> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                json!({
                    "id": format!("P{}", i + 1),
                    "canonical": pair(p.canonical),
                    "orbit": p.members.iter().map(|&m| pair(m)).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "schema": SCHEMA_VERSION,
            "ring": self.ring.name(),
            "points": points,
            "relation": self.relation.lower_triangle(),
        })
    }
}

/// Points simultaneously distant from, or simultaneously neighbor to, two
/// distant points `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubConfiguration {
    pub u: usize,
    pub v: usize,
    /// Distant from both, ordered by [`PointClass::associate_key`].
    pub distant: Vec<usize>,
    /// Neighbor to both, same ordering.
    pub neighbor: Vec<usize>,
}

impl SubConfiguration {
    /// Distant family followed by neighbor family.
    pub fn points(&self) -> Vec<usize> {
        self.distant.iter().chain(&self.neighbor).copied().collect()
    }

    pub fn relation(&self, line: &ProjectiveLine) -> RelationMatrix {
        line.relation_matrix().induced(&self.points())
    }
}

pub fn simultaneous_subconfig(
    line: &ProjectiveLine,
    u: usize,
    v: usize,
) -> Result<SubConfiguration> {
    if u == v || line.relation(u, v) != Relation::Distant {
        return Err(Error::NotDistant(
            format_pair(line.point(u).canonical()),
            format_pair(line.point(v).canonical()),
        ));
    }
    let mut distant = Vec::new();
    let mut neighbor = Vec::new();
    for x in 0..line.len() {
        if x == u || x == v {
            continue;
        }
        match (line.relation(x, u), line.relation(x, v)) {
            (Relation::Distant, Relation::Distant) => distant.push(x),
            (Relation::Neighbor, Relation::Neighbor) => neighbor.push(x),
            _ => {}
        }
    }
    let key = |&x: &usize| line.point(x).associate_key();
    distant.sort_by_key(key);
    neighbor.sort_by_key(key);
    Ok(SubConfiguration {
        u,
        v,
        distant,
        neighbor,
    })
}

/// An element of `GL(2,R)` taking `from[k]` to `to[k]` for each `k`.
pub fn gl2_transitivity_witness(
    line: &ProjectiveLine,
    from: [usize; 3],
    to: [usize; 3],
) -> Result<Matrix2R> {
    for t in [from, to] {
        if !line.is_pairwise_distant(&t) {
            let (x, y) = (line.point(t[0]).canonical(), line.point(t[1]).canonical());
            return Err(Error::NotDistant(format_pair(x), format_pair(y)));
        }
    }
    line.general_linear_group()
        .iter()
        .find(|g| (0..3).all(|k| line.map_point(from[k], g) == to[k]))
        .copied()
        .ok_or(Error::NoTransitivityWitness)
}

/// All ordered triples of pairwise distant points.
pub fn distant_triples(line: &ProjectiveLine) -> Vec<[usize; 3]> {
    let n = line.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y || line.relation(x, y) != Relation::Distant {
                continue;
            }
            for z in 0..n {
                if line.is_pairwise_distant(&[x, y, z]) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// `count` ordered pairwise-distant triples drawn uniformly (with
/// replacement) from a seeded generator.
pub fn sample_distant_triples(line: &ProjectiveLine, count: usize, seed: u64) -> Vec<[usize; 3]> {
    let all = distant_triples(line);
    if all.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| *all.choose(&mut rng).expect("non-empty"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_m2f2, build_small_rings};

    fn e(i: u8) -> RingElement {
        RingElement::new(i)
    }

    fn m2f2_line() -> ProjectiveLine {
        enumerate_line(&build_m2f2())
    }

    #[test]
    fn invertibility_examples() {
        let r = build_m2f2();
        assert!(is_invertible_2x2(&r, &Matrix2R::identity(&r)));
        assert!(!is_invertible_2x2(
            &r,
            &Matrix2R::new(e(1), e(1), e(1), e(2))
        ));
        assert!(!is_invertible_2x2(
            &r,
            &Matrix2R::new(e(0), e(0), e(0), e(1))
        ));
        assert!(!is_invertible_2x2(
            &r,
            &Matrix2R::new(e(1), e(0), e(0), e(0))
        ));
    }

    #[test]
    fn admissibility_examples() {
        let r = build_m2f2();
        assert!(is_admissible(&r, e(1), e(0)));
        assert!(is_admissible(&r, e(3), e(4)));
        assert!(!is_admissible(&r, e(0), e(0)));
    }

    #[test]
    fn line_sizes() {
        let line = m2f2_line();
        assert_eq!(line.len(), 35);
        assert!(line.points().iter().all(|p| p.members().len() == 6));
        let s = build_small_rings();
        assert_eq!(enumerate_line(&s.gf2).len(), 3);
        assert_eq!(enumerate_line(&s.gf4).len(), 5);
        assert_eq!(enumerate_line(&s.gf2xgf2).len(), 9);
        assert_eq!(enumerate_line(&s.gf2_dual).len(), 6);
    }

    #[test]
    fn relation_examples() {
        let line = m2f2_line();
        let p = |a, b| line.point_of_labels(a, b).unwrap();
        assert_eq!(line.relation(p(1, 0), p(0, 1)), Relation::Distant);
        assert_eq!(line.relation(p(1, 1), p(1, 2)), Relation::Neighbor);
        assert_eq!(line.relation(p(3, 4), p(3, 4)), Relation::Neighbor);
        assert!(line.relation_matrix().is_symmetric());
    }

    #[test]
    fn subconfig_families() {
        let line = m2f2_line();
        let p = |a, b| line.point_of_labels(a, b).unwrap();
        let sub = simultaneous_subconfig(&line, p(1, 0), p(0, 1)).unwrap();
        let d: Vec<_> = [(1, 1), (1, 2), (1, 9), (1, 11), (1, 12), (1, 13)]
            .map(|(a, b)| p(a, b))
            .into();
        let nb: Vec<_> = [
            (3, 4),
            (3, 10),
            (3, 14),
            (5, 4),
            (5, 10),
            (5, 14),
            (6, 4),
            (6, 10),
            (6, 14),
        ]
        .map(|(a, b)| p(a, b))
        .into();
        assert_eq!(sub.distant, d);
        assert_eq!(sub.neighbor, nb);
    }

    #[test]
    fn subconfig_requires_distant_pair() {
        let line = m2f2_line();
        let p = |a, b| line.point_of_labels(a, b).unwrap();
        assert!(matches!(
            simultaneous_subconfig(&line, p(1, 1), p(1, 2)),
            Err(Error::NotDistant(..))
        ));
        assert!(simultaneous_subconfig(&line, p(1, 0), p(1, 0)).is_err());
    }

    #[test]
    fn witness_examples() {
        let line = m2f2_line();
        let r = line.ring().clone();
        let std = line.standard_triple();
        let g = gl2_transitivity_witness(&line, std, std).unwrap();
        assert!((0..3).all(|k| line.map_point(std[k], &g) == std[k]));
        let swapped = [std[1], std[0], std[2]];
        let g = gl2_transitivity_witness(&line, std, swapped).unwrap();
        assert!((0..3).all(|k| line.map_point(std[k], &g) == swapped[k]));
        let sw = Matrix2R::swap(&r);
        assert!((0..3).all(|k| line.map_point(std[k], &sw) == swapped[k]));
    }

    #[test]
    fn witness_rejects_non_distant_triple() {
        let line = m2f2_line();
        let p = |a, b| line.point_of_labels(a, b).unwrap();
        let bad = [p(1, 1), p(1, 2), p(1, 0)];
        assert!(gl2_transitivity_witness(&line, line.standard_triple(), bad).is_err());
    }

    #[test]
    fn gl2_of_small_rings() {
        let s = build_small_rings();
        // |GL(2,2)| = 6, |GL(2,4)| = 180
        assert_eq!(enumerate_line(&s.gf2).general_linear_group().len(), 6);
        assert_eq!(enumerate_line(&s.gf4).general_linear_group().len(), 180);
    }

    #[test]
    fn json_export_shape() {
        let line = enumerate_line(&build_small_rings().gf4);
        let v = line.to_json();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["ring"], "gf4");
        assert_eq!(v["points"].as_array().unwrap().len(), 5);
        assert_eq!(v["relation"][0], "-");
        assert_eq!(v["relation"][4], "++++-");
    }

    #[test]
    fn sampling_is_deterministic() {
        let line = enumerate_line(&build_small_rings().gf4);
        let a = sample_distant_triples(&line, 10, 7);
        assert_eq!(a, sample_distant_triples(&line, 10, 7));
        assert!(a.iter().all(|t| line.is_pairwise_distant(t)));
    }
}
