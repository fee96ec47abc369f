//! Double-coset bookkeeping for the unfolding decomposition: minimal
//! representatives of W_M \ W / W_{M_O}, the per-coset root partition of
//! U_O, the associated-parabolic special case, the open-orbit dimension
//! identity, and character-stabilizer verification for unipotent words.

use crate::chevalley::{AdjointGroup, CharacterFunctional};
use crate::error::LieError;
use crate::num::{q, Rat};
use crate::rootsys::{
    associated_parabolic, coset_canonical, double_coset_min_reps, LeviType, RootId, RootSystem,
    WeylGroup, WeylWord,
};

#[derive(Clone, Debug)]
pub struct CosetRep {
    pub index: usize,
    pub word: WeylWord,
    pub length: usize,
}

/// Minimal-length double coset representatives for P \ H / P_O, sorted by
/// length then word.
pub fn double_coset_reps(
    sys: &RootSystem,
    wg: &WeylGroup,
    p_levi: &[usize],
    p_o_levi: &[usize],
) -> Vec<CosetRep> {
    double_coset_min_reps(sys, wg, p_levi, p_o_levi)
        .into_iter()
        .map(|i| CosetRep { index: i, word: wg.reduced_word(i), length: wg.lengths[i] })
        .collect()
}

/// Does the given word lie in the double coset of the given representative?
pub fn word_in_coset(
    sys: &RootSystem,
    wg: &WeylGroup,
    word: &WeylWord,
    rep: &CosetRep,
    p_levi: &[usize],
    p_o_levi: &[usize],
) -> Result<bool, LieError> {
    let elem = sys.word_elem(word)?;
    let canon = coset_canonical(sys, wg, &elem, p_levi, p_o_levi);
    Ok(canon == rep.index)
}

#[derive(Clone, Debug)]
pub struct CosetDatum {
    pub word: WeylWord,
    pub length: usize,
    /// Simple roots of H lying in the Levi of Q_w = M_O cap w^{-1} P w.
    pub qw_levi_simple_roots: Vec<usize>,
    pub qw_levi_type: LeviType,
    /// Roots of U_O sent into Phi(U) by w.
    pub u_upper: Vec<RootId>,
    /// Roots of U_O sent into Phi(M) by w.
    pub u_mid: Vec<RootId>,
    /// Roots of U_O sent into Phi(U^-) by w: U_{O,w}.
    pub u_lower: Vec<RootId>,
}

impl CosetDatum {
    /// U_O^w = U_O cap w^{-1} P w (the upper and middle parts together).
    pub fn u_o_w(&self) -> Vec<RootId> {
        let mut v = self.u_upper.clone();
        v.extend(&self.u_mid);
        v
    }
}

/// The root partition of U_O and the Levi data of Q_w for one minimal
/// representative.
pub fn coset_datum(
    sys: &RootSystem,
    wg: &WeylGroup,
    word: &WeylWord,
    p_levi: &[usize],
    p_o_levi: &[usize],
    u_o_roots: &[RootId],
) -> Result<CosetDatum, LieError> {
    let elem = sys.word_elem(word)?;
    let idx = wg
        .index_of(&elem)
        .ok_or_else(|| LieError::Invalid("word is not in the Weyl group".into()))?;
    if coset_canonical(sys, wg, &elem, p_levi, p_o_levi) != idx {
        return Err(LieError::NotMinimalCoset);
    }
    let in_levi = |id: RootId| {
        let r = sys.root(id);
        (0..sys.rank).all(|j| r.0[j] == 0 || p_levi.contains(&(j + 1)))
    };
    let mut upper = Vec::new();
    let mut mid = Vec::new();
    let mut lower = Vec::new();
    for &a in u_o_roots {
        let img = elem.apply(a);
        if in_levi(img) {
            mid.push(a);
        } else if sys.is_positive(img) {
            upper.push(a);
        } else {
            lower.push(a);
        }
    }
    let qw_levi: Vec<usize> = p_o_levi
        .iter()
        .copied()
        .filter(|&i| in_levi(elem.apply(sys.simple_ids[i - 1])))
        .collect();
    let qw_levi_type = sys.parabolic_data(&qw_levi)?.levi_type;
    Ok(CosetDatum {
        word: wg.reduced_word(idx),
        length: wg.lengths[idx],
        qw_levi_simple_roots: qw_levi,
        qw_levi_type,
        u_upper: upper,
        u_mid: mid,
        u_lower: lower,
    })
}

/// True when P equals the associated parabolic P_O^a, so that the longest
/// representative has U_{O,w_0} = U_O and Q_{w_0} = M_O.
pub fn special_case(
    sys: &RootSystem,
    wg: &WeylGroup,
    p_levi: &[usize],
    p_o_levi: &[usize],
) -> bool {
    let mut p: Vec<usize> = p_levi.to_vec();
    p.sort_unstable();
    associated_parabolic(sys, wg, p_o_levi) == p
}

/// The open-orbit dimension identity
/// dim pi + dim tau + theta_k = dim L_nu + dim V.
pub fn open_orbit_check(
    dim_pi: i64,
    dim_tau: i64,
    dim_l_nu: i64,
    dim_v: i64,
    theta_k: i64,
) -> Result<bool, LieError> {
    for v in [dim_pi, dim_tau, dim_l_nu, dim_v, theta_k] {
        if v < 0 {
            return Err(LieError::Invalid(format!("negative dimension {}", v)));
        }
    }
    Ok(dim_pi + dim_tau + theta_k == dim_l_nu + dim_v)
}

/// A one-parameter unipotent generator g(r) = prod_i x_{gamma_i}(c_i r).
pub type GeneratorWord = Vec<(RootId, Rat)>;

/// Does every generator fix the character pairing on U_O?  For each
/// generator g(r) and each basis element x_beta(t) of U_O, the collected
/// conjugate g x_beta(t) g^{-1} must have the same coefficient sum on the
/// support of psi.  Verified at probe values.
pub fn stabilizes_character(
    adj: &AdjointGroup,
    generators: &[GeneratorWord],
    u_o_roots: &[RootId],
    psi: &CharacterFunctional,
) -> Result<bool, LieError> {
    let sys = adj.sys;
    // the generators must normalize U_O: for every support root gamma and
    // every beta in U_O, gamma + beta must stay inside U_O when it is a root
    for g in generators {
        for &(gamma, _) in g {
            for &beta in u_o_roots {
                if let Some(s) = sys.sum_id(gamma, beta) {
                    if !u_o_roots.contains(&s) {
                        return Err(LieError::DoesNotNormalize(sys.root(gamma).digits()));
                    }
                }
            }
        }
    }
    let order = adj.collection_order();
    for g in generators {
        for r in [q(1), q(2)] {
            let word: Vec<(RootId, Rat)> = g.iter().map(|&(a, c)| (a, c * r)).collect();
            let gm = adj.word_matrix(&word);
            let gm_inv = gm.inverse();
            for &beta in u_o_roots {
                for t in [q(1), q(3)] {
                    let conj = gm.matmul(&adj.x(beta, t)).matmul(&gm_inv);
                    let collected = adj.peel(&conj, &order)?;
                    let before = psi.coeff(beta) * t;
                    let after = psi.pair_word(&collected);
                    if before != after {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
