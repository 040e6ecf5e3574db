//! The eleven polynomials of the closed-form criterion.

use serde::Serialize;

use crate::arith::{int, Rational, Scalar};
use crate::form::{f1, f2, f3, CyclicParams};

/// Coefficient and exponents of `k, l, m, n`.
type Term = (i64, [u32; 4]);

/// All values in one place, with `f5` as it must read to vanish exactly on
/// `D4(g) = 0`. The printed `f5` carries `-4k²ln³` where the degree-5
/// polynomial needs `-4k²ln²`; that variant is kept in `f5_as_printed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormPolys {
    #[serde(with = "crate::arith::serde_str")]
    pub f1: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub f2: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub f3: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub f4: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub f5: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub f6: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub f7: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub g1: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub g2: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub g3: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub g4: Rational,
    #[serde(with = "crate::arith::serde_str")]
    pub f5_as_printed: Rational,
}

impl ClosedFormPolys {
    /// `true` when none of the eleven values is zero.
    pub fn all_nonzero(&self) -> bool {
        [
            &self.f1, &self.f2, &self.f3, &self.f4, &self.f5, &self.f6, &self.f7, &self.g1,
            &self.g2, &self.g3, &self.g4,
        ]
        .iter()
        .all(|v| !Scalar::is_zero(*v))
    }

    /// Names of the values that vanish.
    pub fn zero_names(&self) -> Vec<&'static str> {
        let named: [(&'static str, &Rational); 11] = [
            ("f1", &self.f1),
            ("f2", &self.f2),
            ("f3", &self.f3),
            ("f4", &self.f4),
            ("f5", &self.f5),
            ("f6", &self.f6),
            ("f7", &self.f7),
            ("g1", &self.g1),
            ("g2", &self.g2),
            ("g3", &self.g3),
            ("g4", &self.g4),
        ];
        named.iter().filter(|(_, v)| Scalar::is_zero(*v)).map(|(n, _)| *n).collect()
    }
}

pub fn eval_polys(c: &CyclicParams) -> ClosedFormPolys {
    let pw = Powers::new(c);
    let (k, m, n) = (&c.k, &c.m, &c.n);
    let f5 = pw.eval(F5);
    let f5_as_printed = &f5 + int(4) * pw.mono([2, 1, 0, 2]) - int(4) * pw.mono([2, 1, 0, 3]);
    ClosedFormPolys {
        f1: f1(c),
        f2: f2(c),
        f3: f3(c),
        f4: int(3) * (int(1) + k) - m * m - n * n - m * n,
        f5,
        f6: pw.eval(F6),
        f7: pw.eval(F7),
        g1: k - int(2) * m + int(2),
        g2: int(4) * k - m * m - int(8),
        g3: int(8) + m - int(2) * k,
        g4: m - n,
        f5_as_printed,
    }
}

/// Powers `0..=5` of each parameter.
struct Powers([[Rational; 6]; 4]);

impl Powers {
    fn new(c: &CyclicParams) -> Self {
        let row = |x: &Rational| {
            let mut out: [Rational; 6] = Default::default();
            out[0] = int(1);
            for i in 1..6 {
                out[i] = &out[i - 1] * x;
            }
            out
        };
        Powers([row(&c.k), row(&c.l), row(&c.m), row(&c.n)])
    }

    fn mono(&self, e: [u32; 4]) -> Rational {
        let p = &self.0;
        &p[0][e[0] as usize] * &p[1][e[1] as usize] * &p[2][e[2] as usize] * &p[3][e[3] as usize]
    }

    fn eval(&self, terms: &[Term]) -> Rational {
        terms.iter().fold(int(0), |acc, (coef, e)| acc + int(*coef) * self.mono(*e))
    }
}

const F5: &[Term] = &[
    (-4, [3, 0, 2, 0]),
    (-4, [3, 0, 0, 2]),
    (-4, [2, 1, 2, 0]),
    (4, [2, 1, 1, 1]),
    (-4, [2, 1, 0, 2]),
    (-1, [1, 2, 2, 0]),
    (4, [1, 2, 1, 1]),
    (-1, [1, 2, 0, 2]),
    (8, [1, 1, 3, 0]),
    (6, [1, 1, 2, 1]),
    (6, [1, 1, 1, 2]),
    (8, [1, 1, 0, 3]),
    (-2, [1, 0, 4, 0]),
    (10, [1, 0, 3, 1]),
    (-3, [1, 0, 2, 2]),
    (10, [1, 0, 1, 3]),
    (-2, [1, 0, 0, 4]),
    (1, [0, 3, 1, 1]),
    (-9, [0, 2, 2, 1]),
    (-9, [0, 2, 1, 2]),
    (1, [0, 1, 4, 0]),
    (13, [0, 1, 3, 1]),
    (-3, [0, 1, 2, 2]),
    (13, [0, 1, 1, 3]),
    (1, [0, 1, 0, 4]),
    (-7, [0, 0, 5, 0]),
    (-8, [0, 0, 4, 1]),
    (-16, [0, 0, 3, 2]),
    (-16, [0, 0, 2, 3]),
    (-8, [0, 0, 1, 4]),
    (-7, [0, 0, 0, 5]),
    (16, [4, 0, 0, 0]),
    (16, [3, 1, 0, 0]),
    (-32, [2, 1, 1, 0]),
    (-32, [2, 1, 0, 1]),
    (12, [2, 0, 2, 0]),
    (-48, [2, 0, 1, 1]),
    (12, [2, 0, 0, 2]),
    (-4, [1, 3, 0, 0]),
    (4, [1, 2, 1, 0]),
    (4, [1, 2, 0, 1]),
    (-12, [1, 1, 2, 0]),
    (-60, [1, 1, 1, 1]),
    (-12, [1, 1, 0, 2]),
    (40, [1, 0, 3, 0]),
    (48, [1, 0, 2, 1]),
    (48, [1, 0, 1, 2]),
    (40, [1, 0, 0, 3]),
    (-1, [0, 4, 0, 0]),
    (10, [0, 3, 1, 0]),
    (10, [0, 3, 0, 1]),
    (-21, [0, 2, 2, 0]),
    (12, [0, 2, 1, 1]),
    (-21, [0, 2, 0, 2]),
    (10, [0, 1, 3, 0]),
    (48, [0, 1, 2, 1]),
    (48, [0, 1, 1, 2]),
    (10, [0, 1, 0, 3]),
    (-17, [0, 0, 4, 0]),
    (-14, [0, 0, 3, 1]),
    (-21, [0, 0, 2, 2]),
    (-14, [0, 0, 1, 3]),
    (-17, [0, 0, 0, 4]),
    (-16, [3, 0, 0, 0]),
    (32, [2, 1, 0, 0]),
    (-48, [2, 0, 1, 0]),
    (-48, [2, 0, 0, 1]),
    (80, [1, 2, 0, 0]),
    (-48, [1, 1, 1, 0]),
    (-48, [1, 1, 0, 1]),
    (96, [1, 0, 2, 0]),
    (48, [1, 0, 1, 1]),
    (96, [1, 0, 0, 2]),
    (-24, [0, 3, 0, 0]),
    (-24, [0, 2, 1, 0]),
    (-24, [0, 2, 0, 1]),
    (24, [0, 1, 2, 0]),
    (-24, [0, 1, 1, 1]),
    (24, [0, 1, 0, 2]),
    (-16, [0, 0, 3, 0]),
    (-48, [0, 0, 2, 1]),
    (-48, [0, 0, 1, 2]),
    (-16, [0, 0, 0, 3]),
    (-96, [2, 0, 0, 0]),
    (-64, [1, 1, 0, 0]),
    (64, [1, 0, 1, 0]),
    (64, [1, 0, 0, 1]),
    (96, [0, 2, 0, 0]),
    (-32, [0, 1, 1, 0]),
    (-32, [0, 1, 0, 1]),
    (-16, [0, 0, 2, 0]),
    (-32, [0, 0, 1, 1]),
    (-16, [0, 0, 0, 2]),
    (64, [1, 0, 0, 0]),
    (-128, [0, 1, 0, 0]),
    (64, [0, 0, 1, 0]),
    (64, [0, 0, 0, 1]),
    (128, [0, 0, 0, 0]),
];

const F6: &[Term] = &[
    (4, [2, 0, 0, 0]),
    (2, [1, 1, 0, 0]),
    (-4, [1, 0, 1, 0]),
    (-4, [1, 0, 0, 1]),
    (1, [0, 2, 0, 0]),
    (-7, [0, 1, 1, 0]),
    (-7, [0, 1, 0, 1]),
    (13, [0, 0, 2, 0]),
    (-1, [0, 0, 1, 1]),
    (13, [0, 0, 0, 2]),
    (-40, [1, 0, 0, 0]),
    (20, [0, 1, 0, 0]),
    (8, [0, 0, 1, 0]),
    (8, [0, 0, 0, 1]),
    (-32, [0, 0, 0, 0]),
];

const F7: &[Term] = &[
    (-8, [4, 0, 0, 0]),
    (-12, [3, 1, 0, 0]),
    (8, [3, 0, 1, 0]),
    (8, [3, 0, 0, 1]),
    (-2, [2, 2, 0, 0]),
    (22, [2, 1, 1, 0]),
    (22, [2, 1, 0, 1]),
    (-14, [2, 0, 2, 0]),
    (26, [2, 0, 1, 1]),
    (-14, [2, 0, 0, 2]),
    (3, [1, 3, 0, 0]),
    (1, [1, 2, 1, 0]),
    (1, [1, 2, 0, 1]),
    (-11, [1, 1, 2, 0]),
    (32, [1, 1, 1, 1]),
    (-11, [1, 1, 0, 2]),
    (-15, [1, 0, 3, 0]),
    (-45, [1, 0, 2, 1]),
    (-45, [1, 0, 1, 2]),
    (-15, [1, 0, 0, 3]),
    (1, [0, 4, 0, 0]),
    (-10, [0, 3, 1, 0]),
    (-10, [0, 3, 0, 1]),
    (25, [0, 2, 2, 0]),
    (23, [0, 2, 1, 1]),
    (25, [0, 2, 0, 2]),
    (-30, [0, 1, 3, 0]),
    (-90, [0, 1, 2, 1]),
    (-90, [0, 1, 1, 2]),
    (-30, [0, 1, 0, 3]),
    (42, [0, 0, 4, 0]),
    (87, [0, 0, 3, 1]),
    (90, [0, 0, 2, 2]),
    (87, [0, 0, 1, 3]),
    (42, [0, 0, 0, 4]),
    (56, [3, 0, 0, 0]),
    (-20, [2, 1, 0, 0]),
    (32, [2, 0, 1, 0]),
    (32, [2, 0, 0, 1]),
    (-146, [1, 2, 0, 0]),
    (158, [1, 1, 1, 0]),
    (158, [1, 1, 0, 1]),
    (-258, [1, 0, 2, 0]),
    (-354, [1, 0, 1, 1]),
    (-258, [1, 0, 0, 2]),
    (14, [0, 3, 0, 0]),
    (116, [0, 2, 1, 0]),
    (116, [0, 2, 0, 1]),
    (-192, [0, 1, 2, 0]),
    (-60, [0, 1, 1, 1]),
    (-192, [0, 1, 0, 2]),
    (132, [0, 0, 3, 0]),
    (234, [0, 0, 2, 1]),
    (234, [0, 0, 1, 2]),
    (132, [0, 0, 0, 3]),
    (352, [2, 0, 0, 0]),
    (592, [1, 1, 0, 0]),
    (-480, [1, 0, 1, 0]),
    (-480, [1, 0, 0, 1]),
    (-332, [0, 2, 0, 0]),
    (-60, [0, 1, 1, 0]),
    (-60, [0, 1, 0, 1]),
    (180, [0, 0, 2, 0]),
    (36, [0, 0, 1, 1]),
    (180, [0, 0, 0, 2]),
    (-480, [1, 0, 0, 0]),
    (912, [0, 1, 0, 0]),
    (-192, [0, 0, 1, 0]),
    (-192, [0, 0, 0, 1]),
    (-768, [0, 0, 0, 0]),
];
