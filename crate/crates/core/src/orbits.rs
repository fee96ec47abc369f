//! Nilpotent orbit data: the exceptional-group catalog (Bala-Carter label,
//! weighted diagram, dimension, stabilizer of the attached character),
//! partition-parametrized orbits of classical groups with their dimension
//! formulas, Lusztig speciality, and closure-poset checks.

use crate::error::LieError;
use crate::rootsys::RootSystem;
use std::fmt;

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition(Vec::new());
        }
        let m = self.0[0];
        Partition((1..=m).map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32).collect())
    }

    /// Exponent-style string: parts as digits with caret exponents, e.g.
    /// `2^21^2`, `31^4`, `42`.
    pub fn paper_string(&self) -> String {
        let mut s = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut mult = 1;
            while i + mult < self.0.len() && self.0[i + mult] == p {
                mult += 1;
            }
            if mult == 1 {
                s.push_str(&p.to_string());
            } else {
                s.push_str(&format!("{}^{}", p, mult));
            }
            i += mult;
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Parse the exponent-style string (single-digit parts).
    pub fn parse(s: &str) -> Result<Partition, LieError> {
        let bytes: Vec<char> = s.chars().collect();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let p = bytes[i]
                .to_digit(10)
                .ok_or_else(|| LieError::Invalid(format!("bad partition `{}`", s)))?;
            i += 1;
            let mut mult = 1;
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                mult = bytes
                    .get(i)
                    .and_then(|c| c.to_digit(10))
                    .ok_or_else(|| LieError::Invalid(format!("bad partition `{}`", s)))?;
                i += 1;
            }
            for _ in 0..mult {
                parts.push(p);
            }
        }
        Ok(Partition::new(parts))
    }

    /// Dominance: self >= other (same total).
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.total(), other.total());
        let mut a = 0u32;
        let mut b = 0u32;
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.paper_string())
    }
}

/// A classical factor for orbit enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassicalKind {
    /// GL_n: partitions of n, no constraint.
    Gl(u32),
    /// Sp_2n: partitions of 2n, odd parts with even multiplicity.
    Sp(u32),
    /// SO_m: partitions of m, even parts with even multiplicity.
    So(u32),
}

impl ClassicalKind {
    pub fn size(&self) -> u32 {
        match *self {
            ClassicalKind::Gl(n) => n,
            ClassicalKind::Sp(n) => n,
            ClassicalKind::So(n) => n,
        }
    }

    /// Map a Cartan-type component to its classical group here (the Levi
    /// factors of the groups in play: A_k -> GL_{k+1}, C_k -> Sp_2k,
    /// B_k -> SO_{2k+1}, D_k -> SO_2k).
    pub fn from_component(letter: char, rank: usize) -> Result<ClassicalKind, LieError> {
        let r = rank as u32;
        match letter {
            'A' => Ok(ClassicalKind::Gl(r + 1)),
            'C' => Ok(ClassicalKind::Sp(2 * r)),
            'B' => Ok(ClassicalKind::So(2 * r + 1)),
            'D' => Ok(ClassicalKind::So(2 * r)),
            _ => Err(LieError::Invalid(format!(
                "no partition parametrization for type {}{}",
                letter, rank
            ))),
        }
    }

    pub fn validate(&self, lambda: &Partition) -> Result<(), LieError> {
        if lambda.total() != self.size() {
            return Err(LieError::Parity(
                "size",
                format!("{} is not a partition of {}", lambda, self.size()),
            ));
        }
        match self {
            ClassicalKind::Gl(_) => Ok(()),
            ClassicalKind::Sp(_) => {
                for &p in &lambda.0 {
                    if p % 2 == 1 && lambda.0.iter().filter(|&&x| x == p).count() % 2 == 1 {
                        return Err(LieError::Parity(
                            "symplectic",
                            format!("odd part {} of {} has odd multiplicity", p, lambda),
                        ));
                    }
                }
                Ok(())
            }
            ClassicalKind::So(_) => {
                for &p in &lambda.0 {
                    if p % 2 == 0 && lambda.0.iter().filter(|&&x| x == p).count() % 2 == 1 {
                        return Err(LieError::Parity(
                            "orthogonal",
                            format!("even part {} of {} has odd multiplicity", p, lambda),
                        ));
                    }
                }
                Ok(())
            }
        }
    }

    /// Orbit dimension by the dual-partition formulas.
    pub fn orbit_dim(&self, lambda: &Partition) -> Result<u32, LieError> {
        self.validate(lambda)?;
        let dual = lambda.transpose();
        let sq: i64 = dual.0.iter().map(|&p| (p as i64) * (p as i64)).sum();
        let odd = lambda.0.iter().filter(|&&p| p % 2 == 1).count() as i64;
        let dim = match *self {
            ClassicalKind::Gl(n) => (n as i64) * (n as i64) - sq,
            ClassicalKind::Sp(n2) => {
                let n = (n2 / 2) as i64;
                (4 * n * n + 2 * n - sq - odd) / 2
            }
            ClassicalKind::So(m) => {
                let m = m as i64;
                (m * m - m - sq + odd) / 2
            }
        };
        debug_assert!(dim >= 0);
        Ok(dim as u32)
    }

    /// All valid partitions for this factor.
    pub fn partitions(&self) -> Vec<Partition> {
        fn gen(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                gen(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        gen(self.size(), self.size(), &mut Vec::new(), &mut all);
        all.retain(|l| self.validate(l).is_ok());
        all
    }

    /// Lusztig speciality: transpose-validity in the dual parity class.
    /// GL orbits are all special.
    pub fn is_special(&self, lambda: &Partition) -> Result<bool, LieError> {
        self.validate(lambda)?;
        let t = lambda.transpose();
        Ok(match self {
            ClassicalKind::Gl(_) => true,
            ClassicalKind::Sp(_) => {
                // transpose has odd parts with even multiplicity
                t.0.iter()
                    .all(|&p| p % 2 == 0 || t.0.iter().filter(|&&x| x == p).count() % 2 == 0)
            }
            ClassicalKind::So(_) => {
                // transpose has even parts with even multiplicity
                t.0.iter()
                    .all(|&p| p % 2 == 1 || t.0.iter().filter(|&&x| x == p).count() % 2 == 0)
            }
        })
    }
}

/// One tuple of partitions across the factors of a Levi, with speciality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviOrbit {
    pub parts: Vec<Partition>,
    pub special: bool,
}

impl LeviOrbit {
    pub fn paper_string(&self) -> String {
        format!(
            "({})",
            self.parts.iter().map(|p| p.paper_string()).collect::<Vec<_>>().join("|")
        )
    }
}

/// All tuples of valid partitions, one per factor, whose half-dimensions
/// sum to `target_half_dim`.  Tuples that differ only by permuting equal
/// factors are listed once.
pub fn enumerate_levi_orbits(
    factors: &[ClassicalKind],
    target_half_dim: i64,
) -> Vec<LeviOrbit> {
    if target_half_dim < 0 {
        return Vec::new();
    }
    let per_factor: Vec<Vec<(Partition, u32, bool)>> = factors
        .iter()
        .map(|k| {
            k.partitions()
                .into_iter()
                .map(|l| {
                    let d = k.orbit_dim(&l).unwrap();
                    debug_assert_eq!(d % 2, 0);
                    let s = k.is_special(&l).unwrap();
                    (l, d / 2, s)
                })
                .collect()
        })
        .collect();
    let mut out: Vec<LeviOrbit> = Vec::new();
    let mut stack: Vec<(usize, i64, Vec<Partition>, bool)> =
        vec![(0, target_half_dim, Vec::new(), true)];
    while let Some((i, rest, cur, special)) = stack.pop() {
        if i == factors.len() {
            if rest == 0 {
                let cand = LeviOrbit { parts: canonical_tuple(factors, cur), special };
                if !out.contains(&cand) {
                    out.push(cand);
                }
            }
            continue;
        }
        for (l, half, s) in &per_factor[i] {
            if (*half as i64) <= rest {
                let mut next = cur.clone();
                next.push(l.clone());
                stack.push((i + 1, rest - *half as i64, next, special && *s));
            }
        }
    }
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    out
}

/// Canonical representative modulo permuting equal factors: the greatest
/// tuple under descending comparison.
fn canonical_tuple(factors: &[ClassicalKind], parts: Vec<Partition>) -> Vec<Partition> {
    let n = factors.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = parts.clone();
    permute(&mut perm, 0, &mut |p: &[usize]| {
        if (0..n).all(|i| factors[i] == factors[p[i]]) {
            let cand: Vec<Partition> = p.iter().map(|&j| parts[j].clone()).collect();
            if cand > best {
                best = cand;
            }
        }
    });
    best
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Orbit dimension from a weighted Dynkin diagram by eigenspace counting:
/// dim G - dim g_0 - dim g_1 for the weight function w(a) = sum c_i n_i.
pub fn orbit_dim_from_diagram(sys: &RootSystem, weights: &[u8]) -> i64 {
    assert_eq!(weights.len(), sys.rank);
    assert!(weights.iter().all(|&w| w <= 2), "weights must be 0, 1 or 2");
    let weight = |id: usize| -> i64 {
        sys.root(id)
            .0
            .iter()
            .zip(weights)
            .map(|(&n, &c)| n as i64 * c as i64)
            .sum()
    };
    let dim_g = (2 * sys.n_pos + sys.rank) as i64;
    let g0 = sys.rank as i64 + 2 * sys.positive_ids().filter(|&r| weight(r) == 0).count() as i64;
    let g1 = sys.positive_ids().filter(|&r| weight(r) == 1).count() as i64;
    dim_g - g0 - g1
}

#[derive(Clone, Debug)]
pub struct OrbitCatalogEntry {
    pub group: String,
    /// Canonical ASCII label, e.g. `A1`, `At2`, `A1+At1`, `C3a1`, `0`.
    pub label: String,
    pub weighted_diagram: Vec<u8>,
    pub dim_orbit: i64,
    /// Reductive type of the stabilizer C, e.g. `G2`, `A1+A1`, `0`.
    pub stabilizer_type: String,
    pub special: bool,
}

impl OrbitCatalogEntry {
    pub fn diagram_string(&self) -> String {
        self.weighted_diagram.iter().map(|d| d.to_string()).collect()
    }

    /// Unicode display label (`Ã` for the `t`-marked families).
    pub fn display_label(&self) -> String {
        self.label.replace("At", "Ã").replace("a1", "(a1)").replace("a2", "(a2)").replace("a3", "(a3)")
    }
}

/// Dimension of the Borel subgroup of a reductive type string like
/// `A1+A1`, `G2`, `C3`, `0` (positive roots + semisimple rank).
pub fn dim_borel_of_type(t: &str) -> Result<i64, LieError> {
    Ok(split_type(t)?
        .iter()
        .map(|&(letter, rank)| (positive_roots_of(letter, rank) + rank) as i64)
        .sum())
}

/// Full group dimension of a reductive type string.
pub fn dim_group_of_type(t: &str) -> Result<i64, LieError> {
    Ok(split_type(t)?
        .iter()
        .map(|&(letter, rank)| (2 * positive_roots_of(letter, rank) + rank) as i64)
        .sum())
}

/// Positive-root count (= dim of a maximal unipotent) of a type string.
pub fn dim_umax_of_type(t: &str) -> Result<i64, LieError> {
    Ok(split_type(t)?
        .iter()
        .map(|&(letter, rank)| positive_roots_of(letter, rank) as i64)
        .sum())
}

fn split_type(t: &str) -> Result<Vec<(char, usize)>, LieError> {
    if t == "0" || t.is_empty() {
        return Ok(Vec::new());
    }
    t.split('+')
        .map(|part| {
            let mut chars = part.chars();
            let letter = chars
                .next()
                .ok_or_else(|| LieError::Invalid(format!("bad type `{}`", t)))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| LieError::Invalid(format!("bad type `{}`", t)))?;
            Ok((letter, rank))
        })
        .collect()
}

fn positive_roots_of(letter: char, rank: usize) -> usize {
    match letter {
        'A' => rank * (rank + 1) / 2,
        'B' | 'C' => rank * rank,
        'D' => rank * (rank - 1),
        'G' => 6,
        'F' => 24,
        'E' => match rank {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => 0,
        },
        _ => 0,
    }
}

/// The built-in catalog file.
pub const BUILTIN_CATALOG: &str = include_str!("catalog.txt");
#[cfg(feature = "e8")]
pub const BUILTIN_CATALOG_E8: &str = include_str!("catalog_e8.txt");

#[derive(Clone)]
pub struct OrbitCatalog {
    pub entries: Vec<OrbitCatalogEntry>,
}

impl OrbitCatalog {
    pub fn builtin() -> OrbitCatalog {
        #[cfg(feature = "e8")]
        let text = format!("{}\n{}", BUILTIN_CATALOG, BUILTIN_CATALOG_E8);
        #[cfg(not(feature = "e8"))]
        let text = BUILTIN_CATALOG.to_string();
        OrbitCatalog::parse(&text).expect("builtin catalog is consistent")
    }

    /// Parse and validate a catalog file.  Each record is one line of
    /// whitespace-separated key=value fields: group, label, diagram, dim,
    /// stabilizer, special.
    pub fn parse(text: &str) -> Result<OrbitCatalog, LieError> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields: std::collections::HashMap<&str, &str> =
                std::collections::HashMap::new();
            for tok in line.split_whitespace() {
                let (k, v) = tok.split_once('=').ok_or_else(|| {
                    LieError::CatalogInconsistent(format!(
                        "line {}: expected key=value, got `{}`",
                        lineno + 1,
                        tok
                    ))
                })?;
                fields.insert(k, v);
            }
            let get = |k: &str| {
                fields.get(k).copied().ok_or_else(|| {
                    LieError::CatalogInconsistent(format!("line {}: missing `{}`", lineno + 1, k))
                })
            };
            let diagram: Vec<u8> = get("diagram")?
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| {
                    LieError::CatalogInconsistent(format!("line {}: bad diagram", lineno + 1))
                })?;
            entries.push(OrbitCatalogEntry {
                group: get("group")?.to_string(),
                label: get("label")?.to_string(),
                weighted_diagram: diagram,
                dim_orbit: get("dim")?.parse().map_err(|_| {
                    LieError::CatalogInconsistent(format!("line {}: bad dim", lineno + 1))
                })?,
                stabilizer_type: get("stabilizer")?.to_string(),
                special: match get("special")? {
                    "yes" => true,
                    "no" => false,
                    other => {
                        return Err(LieError::CatalogInconsistent(format!(
                            "line {}: special must be yes/no, got `{}`",
                            lineno + 1,
                            other
                        )))
                    }
                },
            });
        }
        let cat = OrbitCatalog { entries };
        cat.validate()?;
        Ok(cat)
    }

    /// Cross-checks every entry: the eigenvalue-count dimension of the
    /// diagram must equal the stored dimension, labels must be unique per
    /// group, and stabilizer types must parse.
    pub fn validate(&self) -> Result<(), LieError> {
        let mut systems: std::collections::HashMap<String, RootSystem> =
            std::collections::HashMap::new();
        for e in &self.entries {
            let sys = match systems.entry(e.group.clone()) {
                std::collections::hash_map::Entry::Occupied(o) => o.into_mut(),
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(RootSystem::build(&e.group).map_err(|err| {
                        LieError::CatalogInconsistent(format!("group {}: {}", e.group, err))
                    })?)
                }
            };
            if e.weighted_diagram.len() != sys.rank {
                return Err(LieError::CatalogInconsistent(format!(
                    "{}/{}: diagram length {} != rank {}",
                    e.group,
                    e.label,
                    e.weighted_diagram.len(),
                    sys.rank
                )));
            }
            let dim = orbit_dim_from_diagram(sys, &e.weighted_diagram);
            if dim != e.dim_orbit {
                return Err(LieError::CatalogInconsistent(format!(
                    "{}/{}: stored dim {} but the diagram gives {}",
                    e.group, e.label, e.dim_orbit, dim
                )));
            }
            dim_borel_of_type(&e.stabilizer_type).map_err(|_| {
                LieError::CatalogInconsistent(format!(
                    "{}/{}: bad stabilizer type `{}`",
                    e.group, e.label, e.stabilizer_type
                ))
            })?;
        }
        for (i, a) in self.entries.iter().enumerate() {
            for b in &self.entries[i + 1..] {
                if a.group == b.group && a.label == b.label {
                    return Err(LieError::CatalogInconsistent(format!(
                        "duplicate entry {}/{}",
                        a.group, a.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self, group: &str) -> Vec<&OrbitCatalogEntry> {
        self.entries.iter().filter(|e| e.group == group).collect()
    }

    pub fn get(&self, group: &str, label: &str) -> Result<&OrbitCatalogEntry, LieError> {
        let canon = canonical_label(label);
        self.entries
            .iter()
            .find(|e| e.group == group && e.label == canon)
            .ok_or_else(|| LieError::UnknownOrbit(format!("{}/{}", group, label)))
    }
}

/// Accept ASCII transliterations and the unicode/parenthesized forms.
pub fn canonical_label(label: &str) -> String {
    label
        .replace('Ã', "At")
        .replace("(a1)", "a1")
        .replace("(a2)", "a2")
        .replace("(a3)", "a3")
}

/// Is the closure (dominance) poset of nilpotent orbits totally ordered?
/// `specials_only` restricts to the special orbits.  Supported simple
/// types: A1, A2, A3, A5, C2, C3, B3 via partitions; G2 via stored data.
pub fn poset_totally_ordered(simple_type: &str, specials_only: bool) -> Result<bool, LieError> {
    if simple_type == "G2" {
        // the G2 orbit poset 0 < A1 < At1 < G2a1 < G2 is a chain
        return Ok(true);
    }
    let kind = match simple_type {
        "A1" => ClassicalKind::Gl(2),
        "A2" => ClassicalKind::Gl(3),
        "A3" => ClassicalKind::Gl(4),
        "A5" => ClassicalKind::Gl(6),
        "C2" => ClassicalKind::Sp(4),
        "C3" => ClassicalKind::Sp(6),
        "B3" => ClassicalKind::So(7),
        other => return Err(LieError::UnknownType(other.to_string())),
    };
    let mut parts = kind.partitions();
    if specials_only {
        parts.retain(|l| kind.is_special(l).unwrap());
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if !a.dominates(b) && !b.dominates(a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_basics() {
        let p = Partition::parse("31^4").unwrap();
        assert_eq!(p.0, vec![3, 1, 1, 1, 1]);
        assert_eq!(p.paper_string(), "31^4");
        assert_eq!(Partition::parse("2^21^2").unwrap().0, vec![2, 2, 1, 1]);
        assert_eq!(p.transpose().0, vec![5, 1, 1]);
    }

    #[test]
    fn partition_dims() {
        let sp6 = ClassicalKind::Sp(6);
        assert_eq!(sp6.orbit_dim(&Partition::parse("2^21^2").unwrap()).unwrap(), 10);
        assert_eq!(sp6.orbit_dim(&Partition::parse("3^2").unwrap()).unwrap(), 14);
        assert_eq!(sp6.orbit_dim(&Partition::parse("41^2").unwrap()).unwrap(), 14);
        assert_eq!(sp6.orbit_dim(&Partition::parse("6").unwrap()).unwrap(), 18);
        let so7 = ClassicalKind::So(7);
        assert_eq!(so7.orbit_dim(&Partition::parse("31^4").unwrap()).unwrap(), 10);
        assert_eq!(so7.orbit_dim(&Partition::parse("51^2").unwrap()).unwrap(), 16);
        assert_eq!(so7.orbit_dim(&Partition::parse("3^21").unwrap()).unwrap(), 14);
        assert_eq!(so7.orbit_dim(&Partition::parse("2^21^3").unwrap()).unwrap(), 8);
        // parity rejections name the constraint
        assert!(sp6.orbit_dim(&Partition::parse("31^3").unwrap()).is_err());
        assert!(so7.orbit_dim(&Partition::parse("2^31").unwrap()).is_err());
    }

    #[test]
    fn speciality() {
        let sp6 = ClassicalKind::Sp(6);
        assert!(!sp6.is_special(&Partition::parse("41^2").unwrap()).unwrap());
        assert!(sp6.is_special(&Partition::parse("3^2").unwrap()).unwrap());
        let so7 = ClassicalKind::So(7);
        assert!(!so7.is_special(&Partition::parse("2^21^3").unwrap()).unwrap());
        assert!(so7.is_special(&Partition::parse("31^4").unwrap()).unwrap());
    }

    #[test]
    fn levi_orbit_enumeration() {
        let c3 = [ClassicalKind::Sp(6)];
        let found = enumerate_levi_orbits(&c3, 7);
        let strs: Vec<String> = found.iter().map(|o| o.paper_string()).collect();
        assert_eq!(strs, vec!["(41^2)", "(3^2)"]);
        assert!(!found[0].special && found[1].special);

        let a1a2 = [ClassicalKind::Gl(2), ClassicalKind::Gl(3)];
        let found = enumerate_levi_orbits(&a1a2, 3);
        let strs: Vec<String> = found.iter().map(|o| o.paper_string()).collect();
        assert_eq!(strs, vec!["(2|21)", "(1^2|3)"]);

        let a5 = [ClassicalKind::Gl(6)];
        assert!(enumerate_levi_orbits(&a5, 10).is_empty());
        assert!(enumerate_levi_orbits(&a5, -1).is_empty());
    }

    #[test]
    fn diagram_dims() {
        let f4 = RootSystem::build("F4").unwrap();
        assert_eq!(orbit_dim_from_diagram(&f4, &[1, 0, 0, 0]), 16);
        assert_eq!(orbit_dim_from_diagram(&f4, &[0, 0, 0, 1]), 22);
        let e6 = RootSystem::build("E6").unwrap();
        assert_eq!(orbit_dim_from_diagram(&e6, &[0, 1, 0, 0, 0, 0]), 22);
    }

    #[test]
    fn catalog_consistency() {
        let cat = OrbitCatalog::builtin();
        assert_eq!(cat.group("F4").len(), 16);
        let at2 = cat.get("F4", "At2").unwrap();
        assert_eq!(at2.dim_orbit, 30);
        assert_eq!(at2.stabilizer_type, "G2");
        assert_eq!(cat.get("F4", "Ã2").unwrap().label, "At2");
        assert_eq!(cat.get("F4", "C3(a1)").unwrap().label, "C3a1");
        let zero = cat.get("F4", "0").unwrap();
        assert_eq!(zero.dim_orbit, 0);
        assert_eq!(zero.stabilizer_type, "F4");
        // non-special rows are exactly the bold table rows
        let bold: Vec<&str> = cat
            .group("F4")
            .iter()
            .filter(|e| !e.special)
            .map(|e| e.label.as_str())
            .collect();
        assert_eq!(bold, vec!["A1", "A2+At1", "B2", "At2+A1", "C3a1"]);
        // a corrupted dim refuses to load
        let bad = BUILTIN_CATALOG.replace("dim=16", "dim=18");
        assert!(OrbitCatalog::parse(&bad).is_err());
    }

    #[test]
    fn poset_checks() {
        assert!(!poset_totally_ordered("C3", false).unwrap());
        assert!(poset_totally_ordered("C3", true).unwrap());
        assert!(!poset_totally_ordered("A5", false).unwrap());
        for t in ["A1", "A2", "A3", "B3", "C2", "G2"] {
            assert!(poset_totally_ordered(t, false).unwrap(), "{}", t);
        }
    }

    #[test]
    fn dominance_monotone_small() {
        // dominance-larger partitions have larger orbit dimension (n <= 8)
        for kind in [
            ClassicalKind::Gl(8),
            ClassicalKind::Sp(8),
            ClassicalKind::So(7),
            ClassicalKind::So(8),
        ] {
            let parts = kind.partitions();
            for a in &parts {
                for b in &parts {
                    if a != b && a.dominates(b) {
                        assert!(
                            kind.orbit_dim(a).unwrap() > kind.orbit_dim(b).unwrap(),
                            "{:?}: {} vs {}",
                            kind,
                            a,
                            b
                        );
                    }
                }
            }
        }
    }
}
