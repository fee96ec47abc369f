//! Heisenberg and generalized-Heisenberg structure for unipotent radicals:
//! partner pairing against a center functional, enumeration of admissible
//! symmetric orderings, and the standard projection l : U -> H_{2n+1} with
//! structure-constant normalizations.
//!
//! H_{2n+1} carries the symmetrized product
//! (x1|y1|z1)(x2|y2|z2) = (x1+x2 | y1+y2 | z1+z2 + (x1.ty2 - y1.tx2)/2),
//! where t is the lower transpose (coordinate reversal).

use crate::chevalley::{AdjointGroup, CharacterFunctional, StructureConstants, UnipotentWord};
use crate::error::LieError;
use crate::num::{q, qr, Rat};
use crate::rootsys::{RootId, RootSystem};

/// Element of H_{2n+1} with exact rational slots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeisElt {
    pub x: Vec<Rat>,
    pub y: Vec<Rat>,
    pub z: Rat,
}

fn lower_dot(a: &[Rat], b: &[Rat]) -> Rat {
    let n = a.len();
    (0..n).fold(Rat::ZERO, |acc, i| acc + a[i] * b[n - 1 - i])
}

impl HeisElt {
    pub fn identity(n: usize) -> HeisElt {
        HeisElt { x: vec![Rat::ZERO; n], y: vec![Rat::ZERO; n], z: Rat::ZERO }
    }

    pub fn mul(&self, other: &HeisElt) -> HeisElt {
        let n = self.x.len();
        let mut x = self.x.clone();
        let mut y = self.y.clone();
        for i in 0..n {
            x[i] += other.x[i];
            y[i] += other.y[i];
        }
        let twist = lower_dot(&self.x, &other.y) - lower_dot(&self.y, &other.x);
        HeisElt { x, y, z: self.z + other.z + qr(1, 2) * twist }
    }

    pub fn inverse(&self) -> HeisElt {
        HeisElt {
            x: self.x.iter().map(|&c| -c).collect(),
            y: self.y.iter().map(|&c| -c).collect(),
            z: -self.z,
        }
    }

    pub fn commutator(&self, other: &HeisElt) -> HeisElt {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    /// `(x1,..,xn|y1,..,yn|z)` in the slot-table notation.
    pub fn display(&self) -> String {
        let row = |v: &[Rat]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        format!("({}|{}|{})", row(&self.x), row(&self.y), self.z)
    }
}

/// Pairing of two roots against a center functional:
/// l([e_a, e_b]) = N(a,b) ell(a+b).
pub fn pairing(
    sys: &RootSystem,
    nt: &StructureConstants,
    ell: &CharacterFunctional,
    a: RootId,
    b: RootId,
) -> Rat {
    match sys.sum_id(a, b) {
        Some(s) => q(nt.n(a, b)) * ell.coeff(s),
        None => Rat::ZERO,
    }
}

/// For each root of U/Z, its unique partner under the pairing; fails with
/// the list of offenders if some root has no partner (or several).
pub fn pair_roots(
    sys: &RootSystem,
    nt: &StructureConstants,
    u_mod_z: &[RootId],
    ell: &CharacterFunctional,
) -> Result<Vec<(RootId, RootId)>, LieError> {
    let mut pairs = Vec::new();
    let mut offenders = Vec::new();
    for &a in u_mod_z {
        let partners: Vec<RootId> = u_mod_z
            .iter()
            .copied()
            .filter(|&b| b != a && !pairing(sys, nt, ell, a, b).is_zero())
            .collect();
        match partners.as_slice() {
            [b] => {
                if a < *b {
                    pairs.push((a, *b));
                }
            }
            _ => offenders.push(sys.root(a).digits()),
        }
    }
    if !offenders.is_empty() {
        return Err(LieError::PairingFailure(offenders.join(", ")));
    }
    if 2 * pairs.len() != u_mod_z.len() {
        return Err(LieError::PairingFailure("pairing is not a perfect matching".into()));
    }
    Ok(pairs)
}

fn partner_of(pairs: &[(RootId, RootId)], a: RootId) -> RootId {
    for &(x, y) in pairs {
        if x == a {
            return y;
        }
        if y == a {
            return x;
        }
    }
    unreachable!("root has a partner")
}

/// All symmetric orderings of U/Z compatible with the partial order
/// (a < b when b - a is a positive root): position 2n+1-i holds the
/// partner of position i.  Returns the full list.
pub fn admissible_orderings(
    sys: &RootSystem,
    nt: &StructureConstants,
    u_mod_z: &[RootId],
    ell: &CharacterFunctional,
) -> Result<Vec<Vec<RootId>>, LieError> {
    let pairs = pair_roots(sys, nt, u_mod_z, ell)?;
    let m = u_mod_z.len();
    let less = |a: RootId, b: RootId| -> bool {
        let diff = sys.root(b).sub(sys.root(a));
        sys.id_of(&diff).map(|d| sys.is_positive(d)).unwrap_or(false)
    };
    let mut out = Vec::new();
    let mut slots: Vec<Option<RootId>> = vec![None; m];
    let mut used = vec![false; m];
    fn rec(
        sys: &RootSystem,
        u: &[RootId],
        pairs: &[(RootId, RootId)],
        less: &dyn Fn(RootId, RootId) -> bool,
        slots: &mut Vec<Option<RootId>>,
        used: &mut Vec<bool>,
        pos: usize,
        out: &mut Vec<Vec<RootId>>,
    ) {
        let m = u.len();
        if pos == m {
            out.push(slots.iter().map(|s| s.unwrap()).collect());
            return;
        }
        let forced = if pos >= m / 2 {
            Some(partner_of(pairs, slots[m - 1 - pos].unwrap()))
        } else {
            None
        };
        for (i, &r) in u.iter().enumerate() {
            if used[i] {
                continue;
            }
            if let Some(f) = forced {
                if r != f {
                    continue;
                }
            }
            // every root below r must already be placed
            let ok = u
                .iter()
                .enumerate()
                .all(|(j, &s)| used[j] || j == i || !less(s, r));
            if !ok {
                continue;
            }
            used[i] = true;
            slots[pos] = Some(r);
            rec(sys, u, pairs, less, slots, used, pos + 1, out);
            used[i] = false;
            slots[pos] = None;
        }
    }
    rec(sys, u_mod_z, &pairs, &less, &mut slots, &mut used, 0, &mut out);
    Ok(out)
}

/// The projection l : U -> H_{2n+1} determined by a symmetric ordering and
/// a center functional, in the standard slot normalization.
#[derive(Clone, Debug)]
pub struct HeisenbergTarget {
    pub n: usize,
    /// Roots at positions 1..2n.
    pub ordering: Vec<RootId>,
    pub center_roots: Vec<RootId>,
    pub center_functional: CharacterFunctional,
    /// l(x_{beta_{n+j}}(t)) = (0 | y_factors[j-1] * t * e_j | 0).
    pub y_factors: Vec<Rat>,
}

impl HeisenbergTarget {
    /// l of a single root element.
    pub fn slot(&self, root: RootId, t: Rat) -> Option<HeisElt> {
        let n = self.n;
        if let Some(pos) = self.ordering.iter().position(|&r| r == root) {
            let mut h = HeisElt::identity(n);
            if pos < n {
                h.x[pos] = t;
            } else {
                let j = pos - n;
                h.y[j] = self.y_factors[j] * t;
            }
            return Some(h);
        }
        if self.center_roots.contains(&root) {
            let mut h = HeisElt::identity(n);
            h.z = self.center_functional.coeff(root) * t;
            return Some(h);
        }
        None
    }

    /// l of a collected word (product of the slot images).
    pub fn apply(&self, word: &UnipotentWord) -> Result<HeisElt, LieError> {
        let mut h = HeisElt::identity(self.n);
        for &(r, c) in &word.0 {
            let s = self
                .slot(r, c)
                .ok_or_else(|| LieError::Invalid("root outside the group".into()))?;
            h = h.mul(&s);
        }
        Ok(h)
    }

    /// The preimage of (0|y|0) as a word in the y-side roots.
    pub fn preimage_y(&self, y: &[Rat]) -> UnipotentWord {
        assert_eq!(y.len(), self.n);
        UnipotentWord(
            (0..self.n)
                .filter(|&j| !y[j].is_zero())
                .map(|j| (self.ordering[self.n + j], y[j] / self.y_factors[j]))
                .collect(),
        )
    }

    /// The preimage of (x|0|0).
    pub fn preimage_x(&self, x: &[Rat]) -> UnipotentWord {
        assert_eq!(x.len(), self.n);
        UnipotentWord(
            (0..self.n)
                .filter(|&i| !x[i].is_zero())
                .map(|i| (self.ordering[i], x[i]))
                .collect(),
        )
    }
}

/// Build and verify the projection for a symmetric ordering.  The ordering
/// must pair position i with 2n+1-i under the center functional; the
/// result is checked to be a homomorphism on every pair of roots.
pub fn build_projection(
    adj: &AdjointGroup,
    ordering: &[RootId],
    center_roots: &[RootId],
    ell: &CharacterFunctional,
) -> Result<HeisenbergTarget, LieError> {
    let sys = adj.sys;
    let nt = adj.nt;
    let m = ordering.len();
    if m % 2 != 0 {
        return Err(LieError::Invalid("ordering must have even length".into()));
    }
    let n = m / 2;
    let mut y_factors = Vec::with_capacity(n);
    for j in 0..n {
        let a = ordering[n - 1 - j];
        let b = ordering[n + j];
        let p = pairing(sys, nt, ell, a, b);
        if p.is_zero() {
            return Err(LieError::PairingFailure(format!(
                "positions {} and {} are not partners",
                n - j,
                n + j + 1
            )));
        }
        y_factors.push(p);
    }
    let target = HeisenbergTarget {
        n,
        ordering: ordering.to_vec(),
        center_roots: center_roots.to_vec(),
        center_functional: ell.clone(),
        y_factors,
    };
    // homomorphism check: l(commutator) = commutator of images, on every
    // pair of roots of the group, at probe coefficients.
    let all: Vec<RootId> = ordering.iter().chain(center_roots).copied().collect();
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i + 1..] {
            for (r, s) in [(q(1), q(1)), (q(2), q(3))] {
                let comm = adj.commutator((a, r), (b, s))?;
                let lhs = target.apply(&comm)?;
                let la = target.slot(a, r).unwrap();
                let lb = target.slot(b, s).unwrap();
                let rhs = la.commutator(&lb);
                if lhs != rhs {
                    return Err(LieError::NotHomomorphism(
                        sys.root(a).digits(),
                        sys.root(b).digits(),
                    ));
                }
            }
        }
    }
    Ok(target)
}

/// Nondegeneracy of the skew form l([x,y]) on U/Z; returns (nondegenerate,
/// rank).  The rank is always even.
pub fn general_position_center(
    sys: &RootSystem,
    nt: &StructureConstants,
    u_mod_z: &[RootId],
    ell: &CharacterFunctional,
) -> (bool, usize) {
    let m = u_mod_z.len();
    let mut mat = crate::matrix::Mat::zero(m, m);
    for i in 0..m {
        for j in 0..m {
            mat[(i, j)] = pairing(sys, nt, ell, u_mod_z[i], u_mod_z[j]);
        }
    }
    let rank = mat.rank();
    (rank == m, rank)
}
