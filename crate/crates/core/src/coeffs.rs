//! Fourier-coefficient data attached to a weighted Dynkin diagram: the
//! parabolic P_O, the U- and V-filtrations, the case classification
//! (zeros/twos, zeros/ones, mixed), the Heisenberg size k, and the
//! half-dimension consistency check dim U_O - k = (dim O)/2.

use crate::chevalley::{CharacterFunctional, StructureConstants};
use crate::error::LieError;
use crate::num::Rat;
use crate::orbits::{orbit_dim_from_diagram, OrbitCatalogEntry};
use crate::rootsys::{RootId, RootSystem};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseTag {
    /// Diagram has only zeros and twos: the character lives on U_O itself.
    Pure2,
    /// Only zeros and ones: character on U^(2), theta factor of size k.
    Pure01,
    /// Ones and twos both present.
    Mixed,
}

impl CaseTag {
    pub fn template(&self) -> &'static str {
        match self {
            CaseTag::Pure2 => "int1",
            CaseTag::Pure01 => "int2/int3",
            CaseTag::Mixed => "int31",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CoefficientDatum {
    pub group: String,
    pub diagram: Vec<u8>,
    /// 1-based simple roots of the Levi (the zero-labeled nodes).
    pub levi_simple_roots: Vec<usize>,
    pub u_roots: Vec<RootId>,
    /// u_filtration[k-1] = roots of U^(k), k = 1, 2, ...
    pub u_filtration: Vec<Vec<RootId>>,
    /// v_filtration[k-1] = roots of V^(k).
    pub v_filtration: Vec<Vec<RootId>>,
    pub case_tag: CaseTag,
    /// k with U_O/V^(2)-kernel projecting onto H_{2k+1}; 0 in the pure-2 case.
    pub heis_k: i64,
    /// Whether the extra isotropic-extension coefficient applies.
    pub fc_3_2_available: bool,
}

impl CoefficientDatum {
    fn weight_of(&self, sys: &RootSystem, id: RootId) -> i64 {
        sys.root(id)
            .0
            .iter()
            .zip(&self.diagram)
            .map(|(&n, &c)| n as i64 * c as i64)
            .sum()
    }

    fn u_sum_of(&self, sys: &RootSystem, id: RootId) -> i64 {
        sys.root(id)
            .0
            .iter()
            .zip(&self.diagram)
            .map(|(&n, &c)| if c != 0 { n as i64 } else { 0 })
            .sum()
    }

    /// Roots of L^(k) = U^(k)/U^(k+1).
    pub fn l_layer(&self, sys: &RootSystem, k: usize) -> Vec<RootId> {
        self.u_roots
            .iter()
            .copied()
            .filter(|&r| self.u_sum_of(sys, r) == k as i64)
            .collect()
    }

    /// Roots of V^(2)/V^(3).
    pub fn v2_mod_v3(&self, sys: &RootSystem) -> Vec<RootId> {
        self.u_roots
            .iter()
            .copied()
            .filter(|&r| self.weight_of(sys, r) == 2)
            .collect()
    }
}

/// The parabolic attached to a weighted diagram: zero-labeled simple roots
/// generate the Levi; U_O is everything with a nonzero-labeled coefficient.
pub fn attach_parabolic(
    sys: &RootSystem,
    diagram: &[u8],
) -> Result<(Vec<usize>, Vec<RootId>), LieError> {
    if diagram.len() != sys.rank || diagram.iter().any(|&c| c > 2) {
        return Err(LieError::Invalid("diagram must be 0/1/2 per simple root".into()));
    }
    let levi: Vec<usize> =
        (1..=sys.rank).filter(|&i| diagram[i - 1] == 0).collect();
    let u_roots: Vec<RootId> = sys
        .positive_ids()
        .filter(|&id| {
            sys.root(id)
                .0
                .iter()
                .zip(diagram)
                .any(|(&n, &c)| c != 0 && n > 0)
        })
        .collect();
    Ok((levi, u_roots))
}

/// Full filtration data for a diagram.
pub fn filtrations(sys: &RootSystem, diagram: &[u8]) -> Result<CoefficientDatum, LieError> {
    let (levi, u_roots) = attach_parabolic(sys, diagram)?;
    let has1 = diagram.contains(&1);
    let has2 = diagram.contains(&2);
    let case_tag = match (has1, has2) {
        (false, _) => CaseTag::Pure2,
        (true, false) => CaseTag::Pure01,
        (true, true) => CaseTag::Mixed,
    };
    let mut datum = CoefficientDatum {
        group: sys.label.clone(),
        diagram: diagram.to_vec(),
        levi_simple_roots: levi,
        u_roots: u_roots.clone(),
        u_filtration: Vec::new(),
        v_filtration: Vec::new(),
        case_tag,
        heis_k: 0,
        fc_3_2_available: case_tag != CaseTag::Pure2,
    };
    let mut k = 1i64;
    loop {
        let layer: Vec<RootId> = u_roots
            .iter()
            .copied()
            .filter(|&r| datum.u_sum_of(sys, r) >= k)
            .collect();
        if layer.is_empty() {
            break;
        }
        datum.u_filtration.push(layer);
        k += 1;
    }
    let mut k = 1i64;
    loop {
        let layer: Vec<RootId> = u_roots
            .iter()
            .copied()
            .filter(|&r| datum.weight_of(sys, r) >= k)
            .collect();
        if layer.is_empty() {
            break;
        }
        datum.v_filtration.push(layer);
        k += 1;
    }
    let v2 = datum.v_filtration.get(1).map(|v| v.len()).unwrap_or(0) as i64;
    let total = u_roots.len() as i64;
    debug_assert_eq!((total - v2) % 2, 0);
    datum.heis_k = (total - v2) / 2;
    Ok(datum)
}

/// For a mixed diagram: the abelian part (V2/V3 meets L^(1)) and the
/// generalized-Heisenberg part (the V-weight-1 roots plus the center
/// V2/V3 meets L^(2)).
pub fn mixed_decomposition(
    sys: &RootSystem,
    diagram: &[u8],
) -> Result<(Vec<RootId>, Vec<RootId>), LieError> {
    let datum = filtrations(sys, diagram)?;
    if datum.case_tag != CaseTag::Mixed {
        return Err(LieError::Invalid(format!(
            "diagram {:?} is not of mixed type",
            diagram
        )));
    }
    let abelian: Vec<RootId> = datum
        .u_roots
        .iter()
        .copied()
        .filter(|&r| datum.weight_of(sys, r) == 2 && datum.u_sum_of(sys, r) == 1)
        .collect();
    let mut heis: Vec<RootId> = datum
        .u_roots
        .iter()
        .copied()
        .filter(|&r| datum.weight_of(sys, r) == 1)
        .collect();
    heis.extend(
        datum
            .u_roots
            .iter()
            .copied()
            .filter(|&r| datum.weight_of(sys, r) == 2 && datum.u_sum_of(sys, r) == 2),
    );
    Ok((abelian, heis))
}

/// (dim U_O - k, (dim O)/2, equal?) for the orbit of the diagram.
pub fn half_dim_consistency(sys: &RootSystem, diagram: &[u8]) -> Result<(i64, i64, bool), LieError> {
    let datum = filtrations(sys, diagram)?;
    let lhs = datum.u_roots.len() as i64 - datum.heis_k;
    let dim = orbit_dim_from_diagram(sys, diagram);
    debug_assert_eq!(dim % 2, 0);
    Ok((lhs, dim / 2, lhs == dim / 2))
}

/// The character functional chosen per orbit (the explicit general-position
/// choices): root digit strings with rational coefficients.
pub fn character_data(group: &str, label: &str) -> Option<Vec<(&'static str, i64)>> {
    match (group, label) {
        ("F4", "A1") => Some(vec![("2342", 1)]),
        ("F4", "At1") => Some(vec![("1232", 1)]),
        ("F4", "At2") => Some(vec![("1111", 1), ("0121", 1)]),
        ("F4", "A1+At1") => Some(vec![("1222", 1), ("1231", 1)]),
        ("F4", "B2") => Some(vec![("1110", 1)]),
        ("E6", "A1") => Some(vec![("122321", 1)]),
        ("E6", "2A2") => {
            Some(vec![("111100", 1), ("101110", 1), ("010111", 1), ("001111", 1)])
        }
        ("E8", "D4") => {
            Some(vec![("00000001", 1), ("11221110", 1), ("11122110", 1), ("01122210", 1)])
        }
        _ => None,
    }
}

/// The module on which the chosen character lives: L^(1) in the pure-2
/// case, L^(2) in the pure-0/1 case, the abelian part in the mixed case.
pub fn character_module(sys: &RootSystem, datum: &CoefficientDatum) -> Vec<RootId> {
    match datum.case_tag {
        CaseTag::Pure2 => datum.l_layer(sys, 1),
        CaseTag::Pure01 => datum.l_layer(sys, 2),
        CaseTag::Mixed => {
            datum
                .u_roots
                .iter()
                .copied()
                .filter(|&r| datum.weight_of(sys, r) == 2 && datum.u_sum_of(sys, r) == 1)
                .collect()
        }
    }
}

#[derive(Clone, Debug)]
pub struct CharacterCheck {
    pub computed_stabilizer_dim: i64,
    pub catalog_stabilizer_dim: i64,
    /// computed - catalog; tori the catalog type omits, at most 2.
    pub torus_slack: i64,
}

/// Validate the stored character choice for an orbit against the catalog
/// stabilizer type: the Lie stabilizer dimension must exceed the catalog
/// dimension by at most a 2-dimensional torus.
pub fn character_check(
    sys: &RootSystem,
    nt: &StructureConstants,
    entry: &OrbitCatalogEntry,
) -> Result<CharacterCheck, LieError> {
    let data = character_data(&entry.group, &entry.label).ok_or_else(|| {
        LieError::Invalid(format!("no stored character for {}/{}", entry.group, entry.label))
    })?;
    let datum = filtrations(sys, &entry.weighted_diagram)?;
    let module = character_module(sys, &datum);
    let support: Vec<(RootId, Rat)> = data
        .iter()
        .map(|&(digits, c)| Ok((sys.id_of_str(digits)?, Rat::int(c))))
        .collect::<Result<_, LieError>>()?;
    let ell = CharacterFunctional::on_roots(&support);
    let (dim, _rank) =
        nt.lie_stabilizer_dim(sys, &datum.levi_simple_roots, &module, &ell)?;
    let catalog_dim = crate::orbits::dim_group_of_type(&entry.stabilizer_type)?;
    let slack = dim as i64 - catalog_dim;
    if !(0..=2).contains(&slack) {
        return Err(LieError::Invalid(format!(
            "{}/{}: stabilizer dim {} vs catalog {} (slack {})",
            entry.group, entry.label, dim, catalog_dim, slack
        )));
    }
    Ok(CharacterCheck {
        computed_stabilizer_dim: dim as i64,
        catalog_stabilizer_dim: catalog_dim,
        torus_slack: slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::OrbitCatalog;
    use crate::rootsys::RootSystem;

    fn digits(sys: &RootSystem, ids: &[RootId]) -> Vec<String> {
        let mut v: Vec<String> = ids.iter().map(|&r| sys.root(r).digits()).collect();
        v.sort();
        v
    }

    #[test]
    fn attach_parabolic_examples() {
        let f4 = RootSystem::build("F4").unwrap();
        let (levi, u) = attach_parabolic(&f4, &[0, 0, 0, 2]).unwrap();
        assert_eq!(levi, vec![1, 2, 3]);
        assert_eq!(u.len(), 15);
        let (levi, u) = attach_parabolic(&f4, &[2, 0, 0, 1]).unwrap();
        assert_eq!(levi, vec![2, 3]);
        assert_eq!(u.len(), 20);
        let e6 = RootSystem::build("E6").unwrap();
        let (levi, u) = attach_parabolic(&e6, &[2, 0, 0, 0, 0, 2]).unwrap();
        assert_eq!(levi, vec![2, 3, 4, 5]);
        assert_eq!(u.len(), 24);
    }

    #[test]
    fn filtration_examples() {
        let f4 = RootSystem::build("F4").unwrap();
        // At1: U^(2) is the seven roots with n4 = 2
        let d = filtrations(&f4, &[0, 0, 0, 1]).unwrap();
        assert_eq!(d.case_tag, CaseTag::Pure01);
        assert_eq!(d.u_filtration[1].len(), 7);
        assert!(d.u_filtration[1]
            .iter()
            .all(|&r| f4.root(r).0[3] == 2));
        // A1+At1: |L1| = 12, |L2| = 6, Heisenberg target H13
        let d = filtrations(&f4, &[0, 1, 0, 0]).unwrap();
        assert_eq!(d.l_layer(&f4, 1).len(), 12);
        assert_eq!(d.l_layer(&f4, 2).len(), 6);
        assert_eq!(d.heis_k, 6);
        // E6 A1: Heisenberg with 21 variables, k = 10, L2 = {122321}
        let e6 = RootSystem::build("E6").unwrap();
        let d = filtrations(&e6, &[0, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(d.u_roots.len(), 21);
        assert_eq!(d.heis_k, 10);
        assert_eq!(digits(&e6, &d.l_layer(&e6, 2)), vec!["122321"]);
    }

    #[test]
    fn mixed_b2() {
        let f4 = RootSystem::build("F4").unwrap();
        let (ab, heis) = mixed_decomposition(&f4, &[2, 0, 0, 1]).unwrap();
        assert_eq!(
            digits(&f4, &ab),
            vec!["1000", "1100", "1110", "1120", "1220"]
        );
        assert_eq!(
            digits(&f4, &heis),
            vec!["0001", "0011", "0111", "0121", "0122"]
        );
        // V2/V3 is the six roots
        let d = filtrations(&f4, &[2, 0, 0, 1]).unwrap();
        assert_eq!(
            digits(&f4, &d.v2_mod_v3(&f4)),
            vec!["0122", "1000", "1100", "1110", "1120", "1220"]
        );
        // not mixed -> rejection
        assert!(mixed_decomposition(&f4, &[0, 0, 0, 2]).is_err());
    }

    #[test]
    fn half_dims() {
        let f4 = RootSystem::build("F4").unwrap();
        let cat = OrbitCatalog::builtin();
        for e in cat.group("F4") {
            if e.dim_orbit == 0 {
                continue;
            }
            let (lhs, rhs, ok) = half_dim_consistency(&f4, &e.weighted_diagram).unwrap();
            assert!(ok, "{}: {} vs {}", e.label, lhs, rhs);
        }
        // A1: 15 - 7 = 8
        let (lhs, rhs, ok) = half_dim_consistency(&f4, &[1, 0, 0, 0]).unwrap();
        assert_eq!((lhs, rhs, ok), (8, 8, true));
        // At2: 15 - 0 = 15
        let (lhs, _, _) = half_dim_consistency(&f4, &[0, 0, 0, 2]).unwrap();
        assert_eq!(lhs, 15);
        let e6 = RootSystem::build("E6").unwrap();
        let (lhs, rhs, ok) = half_dim_consistency(&e6, &[2, 0, 0, 0, 0, 2]).unwrap();
        assert_eq!((lhs, rhs, ok), (24, 24, true));
        let (_, _, ok) = half_dim_consistency(&e6, &[0, 1, 0, 0, 0, 0]).unwrap();
        assert!(ok);
    }

    #[test]
    fn filtration_structure() {
        // decreasing, closed under root addition with U_O, abelian layers
        let f4 = RootSystem::build("F4").unwrap();
        for diag in [[1u8, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0], [2, 0, 0, 1], [0, 0, 0, 2]] {
            let d = filtrations(&f4, &diag).unwrap();
            for filt in [&d.u_filtration, &d.v_filtration] {
                for w in filt.windows(2) {
                    assert!(w[1].iter().all(|r| w[0].contains(r)));
                }
                for layer in filt {
                    for &a in layer {
                        for &b in &d.u_roots {
                            if let Some(s) = f4.sum_id(a, b) {
                                assert!(layer.contains(&s));
                            }
                        }
                    }
                }
            }
            // graded pieces have no internal root sums
            for k in 1..=d.u_filtration.len() {
                let layer = d.l_layer(&f4, k);
                for &a in &layer {
                    for &b in &layer {
                        if let Some(s) = f4.sum_id(a, b) {
                            assert!(!layer.contains(&s));
                        }
                    }
                }
            }
            if d.case_tag == CaseTag::Pure2 {
                assert_eq!(d.v_filtration[1].len(), d.u_roots.len());
                assert_eq!(d.heis_k, 0);
            }
        }
    }

    #[test]
    fn character_checks() {
        let cat = OrbitCatalog::builtin();
        let f4 = RootSystem::build("F4").unwrap();
        let nt = crate::chevalley::StructureConstants::standard(&f4);
        for label in ["A1", "At1", "At2", "A1+At1", "B2"] {
            let e = cat.get("F4", label).unwrap();
            let chk = character_check(&f4, &nt, e).unwrap();
            assert!(
                (0..=2).contains(&chk.torus_slack),
                "{}: slack {}",
                label,
                chk.torus_slack
            );
            if matches!(label, "A1" | "At1" | "At2") {
                assert_eq!(chk.torus_slack, 0, "{}", label);
            }
        }
        let e6 = RootSystem::build("E6").unwrap();
        let nte6 = crate::chevalley::StructureConstants::standard(&e6);
        for label in ["A1", "2A2"] {
            let e = cat.get("E6", label).unwrap();
            let chk = character_check(&e6, &nte6, e).unwrap();
            assert_eq!(chk.torus_slack, 0, "{}", label);
        }
    }
}
