// Independent oracles for the integration tests. Nothing here calls into the
// library: tables come from the JSON/CSV fixtures and operators are explicit
// 4x4 matrices over the Gaussian integers.

#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub struct Tables {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl Tables {
    pub fn load() -> Self {
        let text = std::fs::read_to_string(fixture_path("m2f2_tables.json")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let table =
            |key: &str| -> Vec<Vec<usize>> { serde_json::from_value(v[key].clone()).unwrap() };
        Tables {
            add: table("add_table"),
            mul: table("mul_table"),
        }
    }

    pub fn n(&self) -> usize {
        self.add.len()
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| (0..self.n()).any(|y| self.mul[x][y] == 1 && self.mul[y][x] == 1))
            .collect()
    }

    /// Some `(x, z)` with `a x + b z = p` and `c x + d z = q`.
    fn solve_column(&self, [a, b, c, d]: [usize; 4], p: usize, q: usize) -> bool {
        let n = self.n();
        (0..n).any(|x| {
            (0..n).any(|z| {
                self.add[self.mul[a][x]][self.mul[b][z]] == p
                    && self.add[self.mul[c][x]][self.mul[d][z]] == q
            })
        })
    }

    /// `[[a, b], [c, d]]` has a right inverse (so an inverse, the ring being finite).
    pub fn invertible(&self, m: [usize; 4]) -> bool {
        self.solve_column(m, 1, 0) && self.solve_column(m, 0, 1)
    }

    /// `(a, b)` is the first row of an invertible matrix.
    pub fn admissible(&self, a: usize, b: usize) -> bool {
        (0..self.n()).any(|x| (0..self.n()).any(|y| self.add[self.mul[a][x]][self.mul[b][y]] == 1))
    }

    pub fn orbit(&self, units: &[usize], (a, b): (usize, usize)) -> Vec<(usize, usize)> {
        let mut o: Vec<(usize, usize)> = units
            .iter()
            .map(|&u| (self.mul[u][a], self.mul[u][b]))
            .collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    /// All points of the line as sorted orbits, sorted.
    pub fn line(&self) -> Vec<Vec<(usize, usize)>> {
        let units = self.units();
        let n = self.n();
        let mut pts: Vec<Vec<(usize, usize)>> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.admissible(a, b))
            .map(|p| self.orbit(&units, p))
            .collect();
        pts.sort();
        pts.dedup();
        pts
    }

    pub fn distant(&self, p: (usize, usize), q: (usize, usize)) -> bool {
        self.invertible([p.0, p.1, q.0, q.1])
    }
}

/// Reference relation table: 15 rows of '+'/'-'.
pub fn reference_relation() -> Vec<Vec<char>> {
    let text = std::fs::read_to_string(fixture_path("relation_table.csv")).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), 16);
    let rows: Vec<Vec<char>> = lines
        .map(|l| {
            l.split(',')
                .skip(1)
                .map(|c| c.chars().next().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(rows.len(), 15);
    rows
}

pub fn reference_neighbor(i: usize, j: usize) -> bool {
    reference_relation()[i][j] == '-'
}

/// Operators attached to C1..C15.
pub const LABELS: [&str; 15] = [
    "ZX", "YY", "1X", "YZ", "Y1", "XX", "XZ", "YX", "ZY", "X1", "XY", "1Y", "1Z", "ZZ", "Z1",
];

/// Gaussian integer `(re, im)`.
pub type C = (i64, i64);
pub type M4 = [[C; 4]; 4];

fn cmul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cadd(a: C, b: C) -> C {
    (a.0 + b.0, a.1 + b.1)
}

fn sigma(c: char) -> [[C; 2]; 2] {
    let (o, z, i, m) = ((1, 0), (0, 0), (0, 1), (-1, 0));
    match c {
        '1' => [[o, z], [z, o]],
        'X' => [[z, o], [o, z]],
        'Y' => [[z, (0, -1)], [i, z]],
        'Z' => [[o, z], [z, m]],
        _ => panic!("bad factor {c}"),
    }
}

pub fn pauli(label: &str) -> M4 {
    let mut ch = label.chars();
    let (a, b) = (sigma(ch.next().unwrap()), sigma(ch.next().unwrap()));
    let mut m = [[(0, 0); 4]; 4];
    for i1 in 0..2 {
        for i2 in 0..2 {
            for j1 in 0..2 {
                for j2 in 0..2 {
                    m[2 * i1 + i2][2 * j1 + j2] = cmul(a[i1][j1], b[i2][j2]);
                }
            }
        }
    }
    m
}

pub fn identity() -> M4 {
    pauli("11")
}

pub fn mul(a: &M4, b: &M4) -> M4 {
    let mut m = [[(0, 0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                m[i][j] = cadd(m[i][j], cmul(a[i][k], b[k][j]));
            }
        }
    }
    m
}

pub fn add(a: &M4, b: &M4) -> M4 {
    let mut m = *a;
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = cadd(a[i][j], b[i][j]);
        }
    }
    m
}

pub fn scale(a: &M4, k: C) -> M4 {
    a.map(|row| row.map(|x| cmul(x, k)))
}

pub fn trace(a: &M4) -> C {
    (0..4).fold((0, 0), |acc, i| cadd(acc, a[i][i]))
}

pub fn commute(a: &M4, b: &M4) -> bool {
    mul(a, b) == mul(b, a)
}

/// `Some(s)` when the matrix is `s` times the identity.
pub fn identity_multiple(a: &M4) -> Option<C> {
    let s = a[0][0];
    (*a == scale(&identity(), s)).then_some(s)
}

/// Lines of the quadrangle: triangles of the reference neighbor graph.
pub fn reference_lines() -> Vec<[usize; 3]> {
    let r = reference_relation();
    let nb = |i: usize, j: usize| r[i][j] == '-';
    let mut lines = Vec::new();
    for a in 0..15 {
        for b in a + 1..15 {
            for c in b + 1..15 {
                if nb(a, b) && nb(a, c) && nb(b, c) {
                    lines.push([a, b, c]);
                }
            }
        }
    }
    lines
}

pub fn line_mask(l: &[usize; 3]) -> u32 {
    l.iter().fold(0, |m, &p| m | 1 << p)
}

/// Proper subsets meeting every line in one or three points.
pub fn brute_force_hyperplanes(lines: &[[usize; 3]]) -> Vec<u32> {
    let masks: Vec<u32> = lines.iter().map(line_mask).collect();
    (1u32..(1 << 15) - 1)
        .filter(|&h| masks.iter().all(|&l| matches!((l & h).count_ones(), 1 | 3)))
        .collect()
}

/// Five pairwise disjoint lines.
pub fn brute_force_spreads(lines: &[[usize; 3]]) -> Vec<[usize; 5]> {
    let masks: Vec<u32> = lines.iter().map(line_mask).collect();
    let n = lines.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let s = [a, b, c, d, e];
                        let total: u32 = s.iter().map(|&i| masks[i].count_ones()).sum();
                        let union = s.iter().fold(0, |m, &i| m | masks[i]);
                        if total == 15 && union.count_ones() == 15 {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn points_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
pub fn kneser_5_2() -> (Vec<[usize; 2]>, impl Fn(usize, usize) -> bool) {
    let mut v = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            v.push([a, b]);
        }
    }
    let vs = v.clone();
    (v, move |i: usize, j: usize| {
        let (x, y) = (vs[i], vs[j]);
        x.iter().all(|p| !y.contains(p))
    })
}
