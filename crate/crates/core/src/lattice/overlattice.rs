//! Integral overlattices `L ⊂ M ⊂ L*` via isotropic subgroups of `L*/L`.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::discriminant::FiniteTables;
use super::matrix::IntMatrix;
use super::normal_form::hermite_normal_form;
use super::{Lattice, LatticeError, SearchLimits};
use crate::json;

/// An overlattice `M ⊇ L` of finite index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlattice {
    /// Gram matrix of `M` in its Hermite basis.
    pub lattice: Lattice,
    /// `[M : L]`, the order of the corresponding subgroup of `L*/L`.
    pub index: u64,
    /// Basis of `M` as rows, in `L ⊗ ℚ` coordinates.
    pub basis: Vec<Vec<BigRational>>,
}

impl Serialize for Overlattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            index: u64,
            gram: &'a Lattice,
            basis: Vec<Vec<String>>,
        }
        Repr {
            index: self.index,
            gram: &self.lattice,
            basis: self
                .basis
                .iter()
                .map(|r| r.iter().map(json::format_rational).collect())
                .collect(),
        }
        .serialize(s)
    }
}

struct Subgroup {
    members: Vec<u64>,
    generators: Vec<Vec<u64>>,
}

#[derive(Clone, Copy)]
enum Isotropy {
    None,
    Bilinear,
    Quadratic,
}

/// Breadth-first closure of `{0}` under adjoining one admissible element at
/// a time. Each subgroup is reported once, keyed by its sorted member list.
fn subgroups(
    t: &FiniteTables,
    isotropy: Isotropy,
    max: usize,
) -> Result<Vec<Subgroup>, LatticeError> {
    let order = t.order;
    let elements: Vec<Vec<u64>> = (0..order).map(|i| t.decode(i)).collect();
    let admissible: Vec<bool> = elements
        .iter()
        .map(|x| match isotropy {
            Isotropy::None => true,
            Isotropy::Bilinear => t.b(x, x) == 0,
            Isotropy::Quadratic => t.q(x) == Some(0),
        })
        .collect();

    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(vec![0]);
    queue.push_back(Subgroup {
        members: vec![0],
        generators: Vec::new(),
    });
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        let mut inside = vec![false; order as usize];
        for &m in &s.members {
            inside[m as usize] = true;
        }
        for x in 0..order {
            if inside[x as usize] || !admissible[x as usize] {
                continue;
            }
            let xe = &elements[x as usize];
            let orthogonal = match isotropy {
                Isotropy::None => true,
                _ => s.generators.iter().all(|g| t.b(xe, g) == 0),
            };
            if !orthogonal {
                continue;
            }
            let members = span(t, &elements, &s.members, &inside, xe);
            if seen.insert(members.clone()) {
                if seen.len() > max {
                    return Err(LatticeError::TooManySubgroups { limit: max });
                }
                let mut generators = s.generators.clone();
                generators.push(xe.clone());
                queue.push_back(Subgroup {
                    members,
                    generators,
                });
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// Sorted members of `S + ⟨x⟩`.
fn span(
    t: &FiniteTables,
    elements: &[Vec<u64>],
    members: &[u64],
    inside: &[bool],
    x: &[u64],
) -> Vec<u64> {
    let mut all = members.to_vec();
    let mut shift = x.to_vec();
    while !inside[t.encode(&shift) as usize] {
        for &m in members {
            all.push(t.encode(&t.add(&elements[m as usize], &shift)));
        }
        shift = t.add(&shift, x);
    }
    all.sort_unstable();
    all
}

pub(crate) fn overlattices(
    l: &Lattice,
    even_only: bool,
    limits: &SearchLimits,
) -> Result<Vec<Overlattice>, LatticeError> {
    let form = l.discriminant_form();
    let t = form.tables(limits.group_cap)?;
    // evenness of M needs q|H ≡ 0, which only makes sense for even L
    let isotropy = if even_only && t.has_quadratic() {
        Isotropy::Quadratic
    } else {
        Isotropy::Bilinear
    };
    if even_only && !l.is_even() {
        return Ok(Vec::new());
    }
    let n = l.rank();
    let exponent = BigInt::from(t.exponent);
    let scale = BigRational::from_integer(exponent.clone());
    let mut out = Vec::new();
    for s in subgroups(&t, isotropy, limits.max_subgroups)? {
        let mut rows: Vec<Vec<BigInt>> = (0..n)
            .map(|j| {
                let mut r = vec![BigInt::zero(); n];
                r[j] = exponent.clone();
                r
            })
            .collect();
        for g in &s.generators {
            let coords: Vec<BigInt> = g.iter().map(|&c| BigInt::from(c)).collect();
            let lift = form.lift(&coords);
            rows.push(
                lift.iter()
                    .map(|x| {
                        let v = x * &scale;
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect(),
            );
        }
        let h = hermite_normal_form(&IntMatrix::from_rows(rows).expect("rectangular"));
        debug_assert_eq!(h.rows(), n);
        let scaled_gram = h.mul(l.gram()).mul(&h.transpose());
        let denom = &exponent * &exponent;
        let mut gram = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = &scaled_gram[(i, j)];
                debug_assert!((v % &denom).is_zero(), "overlattice form not integral");
                gram[(i, j)] = v / &denom;
            }
        }
        let basis = h
            .to_rows()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| BigRational::new(x, exponent.clone()))
                    .collect()
            })
            .collect();
        out.push(Overlattice {
            lattice: Lattice::new(gram)?,
            index: s.members.len() as u64,
            basis,
        });
    }
    out.sort_by(|a, b| (a.index, &a.lattice).cmp(&(b.index, &b.lattice)));
    Ok(out)
}

/// Number of subgroups of `L*/L`, without any isotropy condition.
pub fn subgroup_count(l: &Lattice, limits: &SearchLimits) -> Result<usize, LatticeError> {
    let t = l.discriminant_form().tables(limits.group_cap)?;
    Ok(subgroups(&t, Isotropy::None, limits.max_subgroups)?.len())
}
