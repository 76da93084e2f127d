use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::normal_form::smith_normal_form;
use super::{Lattice, LatticeError};
use crate::json::{self, BigIntJson};

/// Coordinates `(c₁, …, c_k)` of an element `Σ cᵢ gᵢ` of `L*/L` with respect
/// to the cyclic generators, each reduced into `[0, dᵢ)`.
pub type GroupElement = Vec<BigInt>;

/// The discriminant group `A_L = L*/L` with its finite bilinear form into
/// `ℚ/ℤ` and, for even lattices, its quadratic form into `ℚ/2ℤ`.
///
/// The generators `gᵢ = V·eᵢ / dᵢ` come from a Smith form `U·G·V = D` of
/// the Gram matrix; `gᵢ` has order exactly `dᵢ` in `A_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantForm {
    gram: Vec<Vec<BigRational>>,
    factors: Vec<BigInt>,
    generators: Vec<Vec<BigRational>>,
    bilinear: Vec<Vec<BigRational>>,
    quadratic: Option<Vec<BigRational>>,
}

/// `r mod m` into `[0, m)`.
pub(crate) fn reduce_mod(r: &BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(BigInt::from(m));
    let q = (r / &m).floor();
    r - q * m
}

impl DiscriminantForm {
    pub(crate) fn of(lattice: &Lattice) -> Self {
        let g = lattice.gram();
        let n = lattice.rank();
        let snf = smith_normal_form(g);
        let mut factors = Vec::new();
        let mut generators = Vec::new();
        for (i, d) in snf.invariant_factors().into_iter().enumerate() {
            if d.is_one() {
                continue;
            }
            let dq = BigRational::from_integer(d.clone());
            let col: Vec<BigRational> = (0..n)
                .map(|r| BigRational::from_integer(snf.v[(r, i)].clone()) / &dq)
                .collect();
            factors.push(d);
            generators.push(col);
        }
        let gram: Vec<Vec<BigRational>> = g
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let k = factors.len();
        let dot = |x: &[BigRational], y: &[BigRational]| -> BigRational {
            let mut acc = BigRational::zero();
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (j, yj) in y.iter().enumerate() {
                    acc += xi * &gram[i][j] * yj;
                }
            }
            acc
        };
        let mut bilinear = vec![vec![BigRational::zero(); k]; k];
        for i in 0..k {
            for j in 0..k {
                bilinear[i][j] = reduce_mod(&dot(&generators[i], &generators[j]), 1);
            }
        }
        let quadratic = lattice.is_even().then(|| {
            generators
                .iter()
                .map(|x| reduce_mod(&dot(x, x), 2))
                .collect()
        });
        DiscriminantForm {
            gram,
            factors,
            generators,
            bilinear,
            quadratic,
        }
    }

    /// Orders `d₁ | d₂ | …` of the cyclic summands (all greater than one).
    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Whether the quadratic refinement is available (source lattice even).
    pub fn has_quadratic(&self) -> bool {
        self.quadratic.is_some()
    }

    /// Representatives of the generators in `L ⊗ ℚ` coordinates.
    pub fn generators(&self) -> &[Vec<BigRational>] {
        &self.generators
    }

    /// `b(gᵢ, gⱼ)` reduced into `[0, 1)`.
    pub fn generator_bilinear(&self) -> &[Vec<BigRational>] {
        &self.bilinear
    }

    /// `q(gᵢ)` reduced into `[0, 2)`, when the lattice is even.
    pub fn generator_quadratic(&self) -> Option<&[BigRational]> {
        self.quadratic.as_deref()
    }

    pub fn zero(&self) -> GroupElement {
        vec![BigInt::zero(); self.factors.len()]
    }

    pub fn reduce(&self, x: &[BigInt]) -> GroupElement {
        x.iter()
            .zip(&self.factors)
            .map(|(c, d)| c.mod_floor(d))
            .collect()
    }

    pub fn add(&self, x: &[BigInt], y: &[BigInt]) -> GroupElement {
        let s: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        self.reduce(&s)
    }

    /// A representative of `x` in `L* ⊂ L ⊗ ℚ`.
    pub fn lift(&self, x: &[BigInt]) -> Vec<BigRational> {
        let n = self.gram.len();
        let mut v = vec![BigRational::zero(); n];
        for (c, g) in x.iter().zip(&self.generators) {
            let c = BigRational::from_integer(c.clone());
            for (vi, gi) in v.iter_mut().zip(g) {
                *vi += &c * gi;
            }
        }
        v
    }

    /// Exact inner product of two vectors of `L ⊗ ℚ`.
    pub fn ambient_pair(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc += xi * &self.gram[i][j] * yj;
            }
        }
        acc
    }

    /// `b(x, y) ∈ ℚ/ℤ`, reduced into `[0, 1)`.
    pub fn bilinear(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc += BigRational::from_integer(xi * yj) * &self.bilinear[i][j];
            }
        }
        reduce_mod(&acc, 1)
    }

    /// `q(x) ∈ ℚ/2ℤ`, reduced into `[0, 2)`; `None` for odd lattices.
    pub fn quadratic(&self, x: &[BigInt]) -> Option<BigRational> {
        let q = self.quadratic.as_ref()?;
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            acc += BigRational::from_integer(xi * xi) * &q[i];
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                acc += BigRational::from_integer(BigInt::from(2) * xi * xj) * &self.bilinear[i][j];
            }
        }
        Some(reduce_mod(&acc, 2))
    }

    /// All group elements in mixed-radix order.
    pub fn elements(&self, cap: u64) -> Result<Vec<GroupElement>, LatticeError> {
        let tables = FiniteTables::new(self, cap)?;
        Ok((0..tables.order)
            .map(|i| tables.decode(i).into_iter().map(BigInt::from).collect())
            .collect())
    }

    pub(crate) fn tables(&self, cap: u64) -> Result<FiniteTables, LatticeError> {
        FiniteTables::new(self, cap)
    }
}

impl Serialize for DiscriminantForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            factors: Vec<BigIntJson>,
            bilinear: Vec<Vec<String>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            quadratic: Option<Vec<String>>,
        }
        Repr {
            factors: self.factors.iter().cloned().map(BigIntJson).collect(),
            bilinear: self
                .bilinear
                .iter()
                .map(|r| r.iter().map(json::format_rational).collect())
                .collect(),
            quadratic: self
                .quadratic
                .as_ref()
                .map(|q| q.iter().map(json::format_rational).collect()),
        }
        .serialize(s)
    }
}

/// Machine-integer view of a discriminant form small enough to enumerate.
///
/// Elements are indexed in mixed radix. With `e` the exponent of the group,
/// `b(x, y) = B(x, y) / e mod 1` and `q(x) = Q(x) / e mod 2` for integers
/// `B ∈ [0, e)` and `Q ∈ [0, 2e)`.
#[derive(Clone, Debug)]
pub(crate) struct FiniteTables {
    pub factors: Vec<u64>,
    pub order: u64,
    pub exponent: i64,
    b: Vec<Vec<i64>>,
    q: Option<Vec<i64>>,
}

impl FiniteTables {
    fn new(form: &DiscriminantForm, cap: u64) -> Result<Self, LatticeError> {
        let order = form.order();
        let too_large = || LatticeError::GroupTooLarge {
            order: order.clone(),
            cap,
        };
        let order_u = order.to_u64().filter(|&o| o <= cap).ok_or_else(too_large)?;
        let factors: Vec<u64> = form
            .factors
            .iter()
            .map(|d| d.to_u64().expect("factor below cap"))
            .collect();
        let exponent = factors.last().copied().unwrap_or(1) as i64;
        let e = BigRational::from_integer(BigInt::from(exponent));
        let scaled = |r: &BigRational| -> i64 {
            let s = r * &e;
            debug_assert!(s.is_integer());
            s.to_integer().to_i64().expect("scaled value fits")
        };
        let b = form
            .bilinear
            .iter()
            .map(|row| row.iter().map(scaled).collect())
            .collect();
        let q = form
            .quadratic
            .as_ref()
            .map(|q| q.iter().map(scaled).collect());
        Ok(FiniteTables {
            factors,
            order: order_u,
            exponent,
            b,
            q,
        })
    }

    pub fn has_quadratic(&self) -> bool {
        self.q.is_some()
    }

    pub fn decode(&self, mut index: u64) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&d| {
                let c = index % d;
                index /= d;
                c
            })
            .collect()
    }

    pub fn encode(&self, x: &[u64]) -> u64 {
        let mut index = 0;
        for (c, d) in x.iter().zip(&self.factors).rev() {
            index = index * d + c;
        }
        index
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.factors)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    /// Numerator of `b(x, y)` over the exponent, in `[0, e)`.
    pub fn b(&self, x: &[u64], y: &[u64]) -> i64 {
        let e = self.exponent as i128;
        let mut acc: i128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc = (acc + xi as i128 * yj as i128 * self.b[i][j] as i128) % e;
            }
        }
        acc as i64
    }

    /// Numerator of `q(x)` over the exponent, in `[0, 2e)`.
    pub fn q(&self, x: &[u64]) -> Option<i64> {
        let q = self.q.as_ref()?;
        let m = 2 * self.exponent as i128;
        let mut acc: i128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            acc = (acc + (xi as i128 * xi as i128 % m) * q[i] as i128) % m;
            for (j, &xj) in x.iter().enumerate().skip(i + 1) {
                acc = (acc + 2 * (xi as i128 * xj as i128 % m) * self.b[i][j] as i128) % m;
            }
        }
        Some(acc as i64)
    }

    /// Order of an element.
    pub fn element_order(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.factors)
            .map(|(&c, &d)| d / c.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }
}
