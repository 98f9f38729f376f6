#![allow(dead_code)]

use ringlab::{build, Elem, FiniteRing, RingSpec};

pub fn ring(spec: &str) -> FiniteRing {
    build(&spec.parse::<RingSpec>().unwrap()).unwrap()
}

pub fn el(i: u32) -> Elem {
    Elem(i)
}

pub fn els(v: &[u32]) -> Vec<Elem> {
    v.iter().map(|&i| Elem(i)).collect()
}

/// 2x2 matrices over Z_n as plain integers, independent of the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub n: u32,
    pub m: [u32; 4],
}

impl Mat2 {
    /// Row-major, first entry most significant.
    pub fn from_index(n: u32, mut i: u32) -> Self {
        let mut m = [0; 4];
        for k in (0..4).rev() {
            m[k] = i % n;
            i /= n;
        }
        Mat2 { n, m }
    }

    pub fn index(&self) -> u32 {
        self.m.iter().fold(0, |acc, &d| acc * self.n + d)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let (a, b, n) = (&self.m, &o.m, self.n);
        Mat2 {
            n,
            m: [
                (a[0] * b[0] + a[1] * b[2]) % n,
                (a[0] * b[1] + a[1] * b[3]) % n,
                (a[2] * b[0] + a[3] * b[2]) % n,
                (a[2] * b[1] + a[3] * b[3]) % n,
            ],
        }
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let n = self.n;
        Mat2 { n, m: [0, 1, 2, 3].map(|k| (self.m[k] + o.m[k]) % n) }
    }

    pub fn all(n: u32) -> impl Iterator<Item = Mat2> {
        (0..n.pow(4)).map(move |i| Mat2::from_index(n, i))
    }

    pub fn zero(n: u32) -> Mat2 {
        Mat2 { n, m: [0; 4] }
    }

    pub fn one(n: u32) -> Mat2 {
        Mat2 { n, m: [1, 0, 0, 1] }
    }

    pub fn is_nilpotent(&self) -> bool {
        let mut p = *self;
        for _ in 0..64 {
            if p == Mat2::zero(self.n) {
                return true;
            }
            p = p.mul(self);
        }
        false
    }
}

/// The default corpus as spec strings.
pub const CORPUS: [&str; 17] = [
    "Z2",
    "Z3",
    "Z4",
    "Z6",
    "Z8",
    "Z12",
    "Z2xZ2",
    "Z2xZ4",
    "Triv(Z2)",
    "Z2[x]/(x^2)",
    "Z4[x]/(x^2)",
    "T2(Z2)",
    "T2(Z4)",
    "M2(Z2)",
    "M2(Z3)",
    "M2(Z4)",
    "Ideal(Z4,2)",
];
