use num_bigint::BigInt;
use serde::Serialize;

use super::discriminant::FiniteTables;
use super::isometry::Separation;
use super::{Lattice, LatticeError, SearchLimits};
use crate::json;

/// Outcome of a genus comparison of two even lattices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GenusVerdict {
    Same,
    Different {
        separated_by: Separation,
    },
    /// Signatures and group structures agree but the group is larger than
    /// the search cap.
    Inconclusive {
        #[serde(with = "json::bigint")]
        order: BigInt,
        cap: u64,
    },
}

impl GenusVerdict {
    pub fn is_same(&self) -> bool {
        matches!(self, GenusVerdict::Same)
    }

    pub fn is_different(&self) -> bool {
        matches!(self, GenusVerdict::Different { .. })
    }
}

/// Two even lattices lie in the same genus iff they have the same signature
/// and isomorphic discriminant quadratic forms.
pub(crate) fn same_genus(
    a: &Lattice,
    b: &Lattice,
    limits: &SearchLimits,
) -> Result<GenusVerdict, LatticeError> {
    if !a.is_even() || !b.is_even() {
        return Err(LatticeError::OddLatticeUnsupported);
    }
    if a == b {
        return Ok(GenusVerdict::Same);
    }
    let different = |s| Ok(GenusVerdict::Different { separated_by: s });
    if a.rank() != b.rank() {
        return different(Separation::Rank);
    }
    if a.signature() != b.signature() {
        return different(Separation::Signature);
    }
    let fa = a.discriminant_form();
    let fb = b.discriminant_form();
    if fa.factors() != fb.factors() {
        return different(Separation::DiscriminantGroup);
    }
    let (ta, tb) = match (fa.tables(limits.group_cap), fb.tables(limits.group_cap)) {
        (Ok(ta), Ok(tb)) => (ta, tb),
        _ => {
            return Ok(GenusVerdict::Inconclusive {
                order: fa.order(),
                cap: limits.group_cap,
            })
        }
    };
    if quadratic_forms_isomorphic(&ta, &tb).is_some() {
        Ok(GenusVerdict::Same)
    } else {
        different(Separation::DiscriminantForm)
    }
}

/// Searches for images `yᵢ ∈ B` of the cyclic generators `gᵢ` of `A` with
/// `dᵢ·yᵢ = 0`, `q(yᵢ) = q(gᵢ)` and `b(yᵢ, yⱼ) = b(gᵢ, gⱼ)`.
///
/// The groups must have identical invariant factors. A map preserving a
/// nondegenerate bilinear form is injective, so any hit is an isomorphism.
pub(crate) fn quadratic_forms_isomorphic(
    a: &FiniteTables,
    b: &FiniteTables,
) -> Option<Vec<Vec<u64>>> {
    debug_assert_eq!(a.factors, b.factors);
    let k = a.factors.len();
    let gens: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut g = vec![0; k];
            g[i] = 1;
            g
        })
        .collect();
    let all: Vec<Vec<u64>> = (0..b.order).map(|i| b.decode(i)).collect();
    let candidates: Vec<Vec<&Vec<u64>>> = gens
        .iter()
        .zip(&a.factors)
        .map(|(g, &d)| {
            let want_q = a.q(g);
            let want_b = a.b(g, g);
            all.iter()
                .filter(|y| d % b.element_order(y) == 0)
                .filter(|y| match want_q {
                    Some(q) => b.q(y) == Some(q),
                    None => b.b(y, y) == want_b,
                })
                .collect()
        })
        .collect();

    let mut chosen: Vec<&Vec<u64>> = Vec::with_capacity(k);
    fn extend<'a>(
        i: usize,
        a: &FiniteTables,
        b: &FiniteTables,
        gens: &[Vec<u64>],
        candidates: &[Vec<&'a Vec<u64>>],
        chosen: &mut Vec<&'a Vec<u64>>,
    ) -> bool {
        if i == gens.len() {
            return true;
        }
        for &y in &candidates[i] {
            let fits = (0..i).all(|j| b.b(y, chosen[j]) == a.b(&gens[i], &gens[j]));
            if !fits {
                continue;
            }
            chosen.push(y);
            if extend(i + 1, a, b, gens, candidates, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    extend(0, a, b, &gens, &candidates, &mut chosen).then(|| chosen.into_iter().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(rows: &[&[i64]]) -> Lattice {
        Lattice::from_rows(rows).unwrap()
    }

    fn genus(x: &Lattice, y: &Lattice) -> GenusVerdict {
        x.same_genus(y, &SearchLimits::default()).unwrap()
    }

    #[test]
    fn reflexive() {
        let x = l(&[&[2, 1], &[1, 12]]);
        assert!(genus(&x, &x).is_same());
    }

    #[test]
    fn signature_separates() {
        assert_eq!(
            genus(&l(&[&[2]]), &l(&[&[-2]])),
            GenusVerdict::Different {
                separated_by: Separation::Signature
            }
        );
    }

    #[test]
    fn discriminant_minus_23_is_one_genus() {
        assert!(genus(&l(&[&[2, 1], &[1, 12]]), &l(&[&[4, 1], &[1, 6]])).is_same());
        assert!(genus(&l(&[&[4, -1], &[-1, 6]]), &l(&[&[4, 1], &[1, 6]])).is_same());
    }

    #[test]
    fn same_group_different_form() {
        // both (ℤ/2)², signature (1,1), determinant -4; U(2) has two nonzero
        // elements with q = 0, diag(2,-2) only one
        let u2 = l(&[&[0, 2], &[2, 0]]);
        let d = l(&[&[2, 0], &[0, -2]]);
        assert_eq!(u2.determinant(), d.determinant());
        assert_eq!(
            genus(&u2, &d),
            GenusVerdict::Different {
                separated_by: Separation::DiscriminantForm
            }
        );
    }

    #[test]
    fn odd_rejected() {
        assert_eq!(
            l(&[&[1]]).same_genus(&l(&[&[1]]), &SearchLimits::default()),
            Err(LatticeError::OddLatticeUnsupported)
        );
    }

    #[test]
    fn cap_gives_inconclusive() {
        let x = l(&[&[2, 1], &[1, 12]]);
        let y = l(&[&[4, 1], &[1, 6]]);
        let limits = SearchLimits {
            group_cap: 10,
            ..SearchLimits::default()
        };
        assert!(matches!(
            x.same_genus(&y, &limits).unwrap(),
            GenusVerdict::Inconclusive { cap: 10, .. }
        ));
    }
}
