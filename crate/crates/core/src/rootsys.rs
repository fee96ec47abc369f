//! Exact root systems and Weyl groups for the Cartan types used here:
//! A1..A7, B3, C3, D5, G2, F4, E6 (and E7/E8 behind the `e8` feature).
//!
//! Roots are integer coefficient vectors over the simple roots, printed in
//! the digit-string convention (`2342` is 2a1+3a2+4a3+2a4).  Weyl elements
//! are canonicalized as permutations of the full (signed) root set; words
//! are kept for display and for matching externally given representatives.

use crate::error::LieError;
use std::collections::HashMap;
use std::fmt;

pub type RootId = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Digit-string form, e.g. `2342`; negatives as `-2342`.
    pub fn digits(&self) -> String {
        let neg = self.height() < 0;
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        for &c in &self.0 {
            let c = if neg { -c } else { c };
            debug_assert!((0..=9).contains(&c));
            s.push(char::from_digit(c as u32, 10).unwrap());
        }
        s
    }

    pub fn parse(s: &str, rank: usize) -> Result<Root, LieError> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, s),
        };
        if body.len() != rank || !body.chars().all(|c| c.is_ascii_digit()) {
            return Err(LieError::BadRoot(s.to_string()));
        }
        let mut v: Vec<i32> =
            body.chars().map(|c| c.to_digit(10).unwrap() as i32).collect();
        if neg {
            for c in v.iter_mut() {
                *c = -*c;
            }
        }
        Ok(Root(v))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digits())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digits())
    }
}

/// A word in the simple reflections, `w[i1,...,ik]` in 1-based indices.
/// It denotes the product s_{i1} s_{i2} ... s_{ik} and acts on a root by
/// applying the reflections right to left.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn from_one_based(word: &[usize]) -> WeylWord {
        WeylWord(word.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        write!(f, "w[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i)?;
        }
        write!(f, "]")
    }
}

/// Weyl element as a permutation of the signed root set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElem {
    /// perm[r] = image of root id r
    pub perm: Vec<RootId>,
}

impl WeylElem {
    pub fn identity(n_roots: usize) -> WeylElem {
        WeylElem { perm: (0..n_roots).collect() }
    }

    /// Function composition: (self o other)(r) = self(other(r)).
    pub fn compose(&self, other: &WeylElem) -> WeylElem {
        WeylElem { perm: other.perm.iter().map(|&r| self.perm[r]).collect() }
    }

    pub fn inverse(&self) -> WeylElem {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        WeylElem { perm: inv }
    }

    pub fn apply(&self, r: RootId) -> RootId {
        self.perm[r]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviComponent {
    /// Cartan type letter of the component.
    pub letter: char,
    pub rank: usize,
    /// Member simple roots, 1-based, in Bourbaki order for the component.
    pub simples: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviType {
    pub components: Vec<LeviComponent>,
    pub torus_rank: usize,
}

impl LeviType {
    /// Semisimple type string such as "C3" or "A1+A2"; "T" when trivial.
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "T".to_string();
        }
        self.components
            .iter()
            .map(|c| format!("{}{}", c.letter, c.rank))
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn positive_root_count(&self) -> usize {
        self.components
            .iter()
            .map(|c| match c.letter {
                'A' => c.rank * (c.rank + 1) / 2,
                'B' | 'C' => c.rank * c.rank,
                'D' => c.rank * (c.rank - 1),
                'G' => 6,
                'F' => 24,
                'E' => match c.rank {
                    6 => 36,
                    7 => 63,
                    8 => 120,
                    _ => unreachable!(),
                },
                _ => unreachable!(),
            })
            .sum()
    }
}

#[derive(Clone, Debug)]
pub struct ParabolicSpec {
    pub levi_simple_roots: Vec<usize>,
    pub unipotent_radical_roots: Vec<RootId>,
    pub levi_type: LeviType,
}

impl ParabolicSpec {
    pub fn dim_u(&self) -> usize {
        self.unipotent_radical_roots.len()
    }
}

pub struct RootSystem {
    pub label: String,
    pub rank: usize,
    /// cartan[i][j] = <alpha_j, alpha_i^vee>, 0-based.
    pub cartan: Vec<Vec<i32>>,
    /// (alpha_i, alpha_i) normalization; short roots 2, long 4 (6 in G2).
    pub lengths: Vec<i32>,
    /// Positive roots sorted by (height, lex), then the negatives in the
    /// same order.  `roots[i + n_pos]` is `-roots[i]`.
    pub roots: Vec<Root>,
    pub n_pos: usize,
    /// simple_ids[i] is the root id of alpha_{i+1}.
    pub simple_ids: Vec<RootId>,
    index: HashMap<Vec<i32>, RootId>,
    /// simple_refl[i][r] = s_{i+1}(roots[r])
    simple_refl: Vec<Vec<RootId>>,
}

impl RootSystem {
    pub fn build(label: &str) -> Result<RootSystem, LieError> {
        let (cartan, lengths) = cartan_data(label)?;
        let rank = cartan.len();
        // Generate positive roots by height levels using root strings.
        let mut roots: Vec<Root> = Vec::new();
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        for i in 0..rank {
            let mut v = vec![0; rank];
            v[i] = 1;
            seen.insert(v.clone(), ());
            roots.push(Root(v));
        }
        let mut frontier: Vec<Root> = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for i in 0..rank {
                    // <a, alpha_i^vee>
                    let pairing: i32 =
                        (0..rank).map(|j| a.0[j] * cartan[i][j]).sum();
                    // p = max k with a - k*alpha_i a root
                    let mut p = 0;
                    let mut probe = a.clone();
                    loop {
                        probe.0[i] -= 1;
                        if probe.0.iter().all(|&c| c == 0) || seen.contains_key(&probe.0) {
                            if probe.0.iter().all(|&c| c == 0) {
                                break;
                            }
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - pairing;
                    if q > 0 {
                        let mut v = a.0.clone();
                        v[i] += 1;
                        if !seen.contains_key(&v) {
                            seen.insert(v.clone(), ());
                            next.push(Root(v));
                        }
                    }
                }
            }
            frontier = next.clone();
            roots.extend(next);
        }
        roots.sort_by_key(|r| (r.height(), r.0.clone()));
        let n_pos = roots.len();
        let all: Vec<Root> = roots.iter().cloned().chain(roots.iter().map(Root::neg)).collect();
        let mut index = HashMap::new();
        for (i, r) in all.iter().enumerate() {
            index.insert(r.0.clone(), i);
        }
        let simple_ids: Vec<RootId> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                *index.get(&v).expect("simple root present")
            })
            .collect();
        let mut sys = RootSystem {
            label: label.to_string(),
            rank,
            cartan,
            lengths,
            roots: all,
            n_pos,
            simple_ids,
            index,
            simple_refl: Vec::new(),
        };
        let mut tables = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut t = Vec::with_capacity(sys.roots.len());
            for r in 0..sys.roots.len() {
                let image = sys.reflect_simple(i, &sys.roots[r]);
                t.push(sys.id_of(&image).expect("reflection closed"));
            }
            tables.push(t);
        }
        sys.simple_refl = tables;
        Ok(sys)
    }

    pub fn id_of(&self, r: &Root) -> Option<RootId> {
        self.index.get(&r.0).copied()
    }

    pub fn id_of_str(&self, s: &str) -> Result<RootId, LieError> {
        let r = Root::parse(s, self.rank)?;
        self.id_of(&r).ok_or_else(|| LieError::BadRoot(s.to_string()))
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.n_pos
    }

    pub fn neg_id(&self, id: RootId) -> RootId {
        if id < self.n_pos {
            id + self.n_pos
        } else {
            id - self.n_pos
        }
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = RootId> {
        0..self.n_pos
    }

    /// Sum as a root id, if alpha+beta is a root.
    pub fn sum_id(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.id_of(&self.roots[a].add(&self.roots[b]))
    }

    /// <beta, alpha_i^vee>, 0-based i.
    pub fn pairing_with_simple_coroot(&self, beta: &Root, i: usize) -> i32 {
        (0..self.rank).map(|j| beta.0[j] * self.cartan[i][j]).sum()
    }

    /// Symmetric inner product (a, b) in the fixed normalization.
    pub fn inner(&self, a: &Root, b: &Root) -> i32 {
        // (alpha_i, alpha_j) = cartan[i][j] * lengths[i] / 2
        let mut s = 0;
        for i in 0..self.rank {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b.0[j] != 0 {
                    s += a.0[i] * b.0[j] * self.cartan[i][j] * self.lengths[i] / 2;
                }
            }
        }
        s
    }

    pub fn length_sq(&self, id: RootId) -> i32 {
        let r = self.root(id);
        self.inner(r, r)
    }

    fn reflect_simple(&self, i: usize, r: &Root) -> Root {
        let pairing = self.pairing_with_simple_coroot(r, i);
        let mut v = r.0.clone();
        v[i] -= pairing;
        Root(v)
    }

    /// The permutation of a single simple reflection (1-based index).
    pub fn simple_reflection(&self, i_one_based: usize) -> Result<WeylElem, LieError> {
        if i_one_based == 0 || i_one_based > self.rank {
            return Err(LieError::IndexOutOfRange(i_one_based));
        }
        Ok(WeylElem { perm: self.simple_refl[i_one_based - 1].clone() })
    }

    /// Permutation of the whole word (s_{i1} o ... o s_{ik}).
    pub fn word_elem(&self, w: &WeylWord) -> Result<WeylElem, LieError> {
        let mut e = WeylElem::identity(self.roots.len());
        for &i in &w.0 {
            let s = self.simple_reflection(i)?;
            e = e.compose(&s);
        }
        Ok(e)
    }

    /// Action of a word on a root, right-to-left.
    pub fn weyl_act(&self, w: &WeylWord, r: &Root) -> Result<Root, LieError> {
        let mut id = self.id_of(r).ok_or_else(|| LieError::BadRoot(r.digits()))?;
        for &i in w.0.iter().rev() {
            if i == 0 || i > self.rank {
                return Err(LieError::IndexOutOfRange(i));
            }
            id = self.simple_refl[i - 1][id];
        }
        Ok(self.root(id).clone())
    }

    pub fn elem_length(&self, e: &WeylElem) -> usize {
        (0..self.n_pos).filter(|&r| !self.is_positive(e.apply(r))).count()
    }

    pub fn parabolic_data(&self, levi_simple_roots: &[usize]) -> Result<ParabolicSpec, LieError> {
        for &i in levi_simple_roots {
            if i == 0 || i > self.rank {
                return Err(LieError::IndexOutOfRange(i));
            }
        }
        let in_levi = |r: &Root| {
            (0..self.rank).all(|j| r.0[j] == 0 || levi_simple_roots.contains(&(j + 1)))
        };
        let radical: Vec<RootId> =
            self.positive_ids().filter(|&id| !in_levi(self.root(id))).collect();
        let levi_type = self.classify_levi(levi_simple_roots);
        Ok(ParabolicSpec {
            levi_simple_roots: levi_simple_roots.to_vec(),
            unipotent_radical_roots: radical,
            levi_type,
        })
    }

    /// Positive roots of the Levi (supported on the given simple subset).
    pub fn levi_positive_roots(&self, levi_simple_roots: &[usize]) -> Vec<RootId> {
        self.positive_ids()
            .filter(|&id| {
                let r = self.root(id);
                (0..self.rank).all(|j| r.0[j] == 0 || levi_simple_roots.contains(&(j + 1)))
            })
            .collect()
    }

    fn classify_levi(&self, subset: &[usize]) -> LeviType {
        let mut remaining: Vec<usize> = subset.to_vec();
        remaining.sort_unstable();
        remaining.dedup();
        let adjacent = |a: usize, b: usize| self.cartan[a - 1][b - 1] != 0 && a != b;
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut used = vec![false; remaining.len()];
        for s in 0..remaining.len() {
            if used[s] {
                continue;
            }
            let mut comp = vec![remaining[s]];
            used[s] = true;
            let mut stack = vec![remaining[s]];
            while let Some(x) = stack.pop() {
                for (t, &y) in remaining.iter().enumerate() {
                    if !used[t] && adjacent(x, y) {
                        used[t] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components.sort_by_key(|c| c[0]);
        let comps = components
            .into_iter()
            .map(|c| self.classify_component(&c))
            .collect::<Vec<_>>();
        LeviType { torus_rank: self.rank - remaining.len(), components: comps }
    }

    fn classify_component(&self, nodes: &[usize]) -> LeviComponent {
        let n = nodes.len();
        let pair = |a: usize, b: usize| self.cartan[a - 1][b - 1]; // <alpha_b, alpha_a^vee>
        let deg = |a: usize| nodes.iter().filter(|&&b| b != a && pair(a, b) != 0).count();
        let mut multi_edge = None;
        for &a in nodes {
            for &b in nodes {
                if a < b && pair(a, b) * pair(b, a) > 1 {
                    multi_edge = Some((a, b));
                }
            }
        }
        if let Some((a, b)) = multi_edge {
            if pair(a, b) * pair(b, a) == 3 {
                return LeviComponent { letter: 'G', rank: 2, simples: nodes.to_vec() };
            }
            if n == 2 {
                return LeviComponent { letter: 'B', rank: 2, simples: nodes.to_vec() };
            }
            if n == 4 {
                return LeviComponent { letter: 'F', rank: 4, simples: nodes.to_vec() };
            }
            // Chain with one double bond: B_n (one short simple) or C_n (one long).
            let short_count = nodes
                .iter()
                .filter(|&&x| self.lengths[x - 1] == *nodes.iter().map(|&y| &self.lengths[y - 1]).min().unwrap())
                .count();
            let letter = if short_count == 1 { 'B' } else { 'C' };
            // Bourbaki order: long end first for B, short end first for C.
            let order = self.chain_order(nodes, letter);
            return LeviComponent { letter, rank: n, simples: order };
        }
        // Simply laced: A (path), D or E (one branch node).
        let branch = nodes.iter().copied().find(|&a| deg(a) == 3);
        match branch {
            None => LeviComponent { letter: 'A', rank: n, simples: nodes.to_vec() },
            Some(b) => {
                // Arm lengths from the branch node.
                let mut arms: Vec<usize> = Vec::new();
                for &s in nodes {
                    if s != b && pair(s, b) != 0 {
                        // walk away from b
                        let mut len = 1;
                        let mut prev = b;
                        let mut cur = s;
                        loop {
                            let next = nodes
                                .iter()
                                .copied()
                                .find(|&x| x != prev && x != cur && pair(x, cur) != 0);
                            match next {
                                Some(x) => {
                                    prev = cur;
                                    cur = x;
                                    len += 1;
                                }
                                None => break,
                            }
                        }
                        arms.push(len);
                    }
                }
                arms.sort_unstable();
                let letter = if arms[0] == 1 && arms[1] == 1 { 'D' } else { 'E' };
                LeviComponent { letter, rank: n, simples: nodes.to_vec() }
            }
        }
    }

    fn chain_order(&self, nodes: &[usize], letter: char) -> Vec<usize> {
        // Order a chain so the Bourbaki-distinguished end comes last:
        // B_n ends with its short root, C_n with its long root.
        let pair = |a: usize, b: usize| self.cartan[a - 1][b - 1] != 0 && a != b;
        let ends: Vec<usize> = nodes
            .iter()
            .copied()
            .filter(|&a| nodes.iter().filter(|&&b| pair(a, b)).count() == 1)
            .collect();
        if ends.len() != 2 {
            return nodes.to_vec();
        }
        let min_len = nodes.iter().map(|&x| self.lengths[x - 1]).min().unwrap();
        let last = if letter == 'B' {
            // short end last
            *ends.iter().find(|&&e| self.lengths[e - 1] == min_len).unwrap_or(&ends[1])
        } else {
            *ends.iter().find(|&&e| self.lengths[e - 1] != min_len).unwrap_or(&ends[1])
        };
        let first = if ends[0] == last { ends[1] } else { ends[0] };
        let mut order = vec![first];
        let mut prev = 0usize;
        let mut cur = first;
        while order.len() < nodes.len() {
            let next = nodes
                .iter()
                .copied()
                .find(|&x| x != prev && x != cur && pair(x, cur))
                .unwrap();
            order.push(next);
            prev = cur;
            cur = next;
        }
        order
    }
}

fn cartan_data(label: &str) -> Result<(Vec<Vec<i32>>, Vec<i32>), LieError> {
    let chain = |n: usize| -> Vec<Vec<i32>> {
        let mut c = vec![vec![0; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    };
    let e_type = |n: usize| -> (Vec<Vec<i32>>, Vec<i32>) {
        // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
        let mut c = vec![vec![0; n]; n];
        for i in 0..n {
            c[i][i] = 2;
        }
        let mut link = |a: usize, b: usize| {
            c[a - 1][b - 1] = -1;
            c[b - 1][a - 1] = -1;
        };
        link(1, 3);
        for i in 3..n {
            link(i, i + 1);
        }
        link(2, 4);
        (c, vec![2; n])
    };
    match label {
        "G2" => Ok((vec![vec![2, -3], vec![-1, 2]], vec![2, 6])),
        "F4" => Ok((
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
            vec![4, 4, 2, 2],
        )),
        "E6" => Ok(e_type(6)),
        #[cfg(feature = "e8")]
        "E7" => Ok(e_type(7)),
        #[cfg(feature = "e8")]
        "E8" => Ok(e_type(8)),
        "B3" => {
            let mut c = chain(3);
            c[2][1] = -2;
            Ok((c, vec![4, 4, 2]))
        }
        "C3" => {
            let mut c = chain(3);
            c[1][2] = -2;
            Ok((c, vec![2, 2, 4]))
        }
        "D5" => {
            // Bourbaki D5: chain 1-2-3 with 4 and 5 both attached to 3.
            let mut c = vec![vec![0; 5]; 5];
            for i in 0..5 {
                c[i][i] = 2;
            }
            let mut link = |a: usize, b: usize| {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            };
            link(1, 2);
            link(2, 3);
            link(3, 4);
            link(3, 5);
            Ok((c, vec![2; 5]))
        }
        _ => {
            if let Some(n) = label.strip_prefix('A').and_then(|s| s.parse::<usize>().ok()) {
                if (1..=7).contains(&n) {
                    return Ok((chain(n), vec![2; n]));
                }
            }
            Err(LieError::UnknownType(label.to_string()))
        }
    }
}

/// Cached Weyl-group enumeration: all elements with lengths and one reduced
/// word each (recovered through BFS parent links).
pub struct WeylGroup {
    /// Element permutations in BFS order (identity first).
    pub elems: Vec<WeylElem>,
    pub lengths: Vec<usize>,
    parent: Vec<(usize, usize)>, // (parent index, 1-based generator) with elem = parent * s_g
    key_index: HashMap<Vec<RootId>, usize>,
    simple_ids: Vec<RootId>,
}

impl WeylGroup {
    pub fn enumerate(sys: &RootSystem) -> WeylGroup {
        let rank = sys.rank;
        let id = WeylElem::identity(sys.roots.len());
        let simple_ids = sys.simple_ids.clone();
        let key = |e: &WeylElem| -> Vec<RootId> {
            simple_ids.iter().map(|&s| e.apply(s)).collect()
        };
        let mut elems = vec![id.clone()];
        let mut lengths = vec![0usize];
        let mut parent = vec![(0usize, 0usize)];
        let mut key_index: HashMap<Vec<RootId>, usize> = HashMap::new();
        key_index.insert(key(&id), 0usize);
        let mut frontier = vec![0usize];
        let simple: Vec<WeylElem> =
            (1..=rank).map(|i| sys.simple_reflection(i).unwrap()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &wi in &frontier {
                for g in 0..rank {
                    // length increases iff w(alpha_{g+1}) > 0
                    if !sys.is_positive(elems[wi].apply(sys.simple_ids[g])) {
                        continue;
                    }
                    let e = elems[wi].compose(&simple[g]);
                    let k = key(&e);
                    if !key_index.contains_key(&k) {
                        key_index.insert(k, elems.len());
                        lengths.push(lengths[wi] + 1);
                        parent.push((wi, g + 1));
                        next.push(elems.len());
                        elems.push(e);
                    }
                }
            }
            frontier = next;
        }
        WeylGroup { elems, lengths, parent, key_index, simple_ids }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn index_of(&self, e: &WeylElem) -> Option<usize> {
        let key: Vec<RootId> = self.simple_ids.iter().map(|&s| e.apply(s)).collect();
        self.key_index.get(&key).copied()
    }

    /// One reduced word for element `i` (from the BFS tree).
    pub fn reduced_word(&self, mut i: usize) -> WeylWord {
        let mut w = Vec::new();
        while i != 0 {
            let (p, g) = self.parent[i];
            w.push(g);
            i = p;
        }
        w.reverse();
        WeylWord(w)
    }

    /// Index of the longest element.
    pub fn longest(&self) -> usize {
        (0..self.len()).max_by_key(|&i| self.lengths[i]).unwrap()
    }
}

/// Minimal-length (W_J \ W / W_K) double-coset representatives, sorted by
/// (length, word).  J and K are 1-based simple-root subsets.
pub fn double_coset_min_reps(
    sys: &RootSystem,
    wg: &WeylGroup,
    j_levi: &[usize],
    k_levi: &[usize],
) -> Vec<usize> {
    let mut reps: Vec<usize> = (0..wg.len())
        .filter(|&i| {
            let e = &wg.elems[i];
            let inv = e.inverse();
            j_levi.iter().all(|&j| sys.is_positive(inv.apply(sys.simple_ids[j - 1])))
                && k_levi.iter().all(|&k| sys.is_positive(e.apply(sys.simple_ids[k - 1])))
        })
        .collect();
    reps.sort_by_key(|&i| (wg.lengths[i], wg.reduced_word(i).0));
    reps
}

/// Canonical minimal representative of the double coset W_J w W_K.
pub fn coset_canonical(
    sys: &RootSystem,
    wg: &WeylGroup,
    elem: &WeylElem,
    j_levi: &[usize],
    k_levi: &[usize],
) -> usize {
    let mut cur = wg.index_of(elem).expect("element of the group");
    loop {
        let e = &wg.elems[cur];
        let inv = e.inverse();
        if let Some(&j) =
            j_levi.iter().find(|&&j| !sys.is_positive(inv.apply(sys.simple_ids[j - 1])))
        {
            let s = sys.simple_reflection(j).unwrap();
            let ne = s.compose(e);
            cur = wg.index_of(&ne).unwrap();
            continue;
        }
        if let Some(&k) =
            k_levi.iter().find(|&&k| !sys.is_positive(e.apply(sys.simple_ids[k - 1])))
        {
            let s = sys.simple_reflection(k).unwrap();
            let ne = e.compose(&s);
            cur = wg.index_of(&ne).unwrap();
            continue;
        }
        return cur;
    }
}

/// Image of a maximal-parabolic Levi subset under the -w_l diagram involution.
pub fn associated_parabolic(
    sys: &RootSystem,
    wg: &WeylGroup,
    levi_simple_roots: &[usize],
) -> Vec<usize> {
    let w_l = &wg.elems[wg.longest()];
    let mut out: Vec<usize> = levi_simple_roots
        .iter()
        .map(|&i| {
            let img = w_l.apply(sys.simple_ids[i - 1]);
            let neg = sys.neg_id(img);
            let pos = sys
                .simple_ids
                .iter()
                .position(|&s| s == neg)
                .expect("-w_l must permute the simple roots");
            pos + 1
        })
        .collect();
    out.sort_unstable();
    out
}
