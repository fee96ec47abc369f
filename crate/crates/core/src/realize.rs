//! Explicit matrix realizations over exact rationals: the Levi subgroups
//! M1 = GSp6, M2, M3 (GL pairs), M4 = GSpin7 in SO8 with its SO7
//! projection, and the embedding varpi_3 : Sp6 -> Sp14 induced by a
//! Heisenberg slot ordering on the radical of P1.
//!
//! Each realization seeds the printed simple-root images and derives the
//! remaining positive root images through the structure constants, so all
//! Chevalley relations hold with the same table as the abstract group.
//! The verifier checks form preservation, one-parameter additivity, and
//! commutator relations against the collected normal forms.

use crate::chevalley::{AdjointGroup, StructureConstants};
use crate::error::LieError;
use crate::heis::{HeisElt, HeisenbergTarget};
use crate::matrix::Mat;
use crate::num::{q, qr, Rat};
use crate::rootsys::{RootId, RootSystem};
use std::collections::HashMap;

/// A generator of a Levi subgroup: a root element (either sign) or a
/// cocharacter word prod alpha_i^vee(t_i).
#[derive(Clone, Debug)]
pub enum LeviGen {
    Root(RootId, Rat),
    Torus(Vec<(usize, Rat)>),
}

/// How the invariant form is checked.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormKind {
    /// tg J g = (similitude) J with the similitude read off the result.
    Similitude,
    /// Pairs of general linear groups: determinant constraints only.
    GlPair,
}

pub struct Realization {
    pub name: String,
    pub size: usize,
    pub form: Option<Mat>,
    pub form_kind: FormKind,
    /// levi simple roots (1-based, in the ambient F4 system)
    pub levi: Vec<usize>,
    /// nilpotent Lie images of the positive Levi roots
    e_mats: HashMap<RootId, Mat>,
    /// negative root images (transposes of the positive ones)
    f_mats: HashMap<RootId, Mat>,
    /// diagonal entries of the torus image as exponents in t_1..t_4:
    /// diag[i][j] = exponent of t_{j+1} at diagonal entry i.
    torus_exp: Vec<Vec<i32>>,
}

fn antidiag_form(n: usize) -> Mat {
    let mut j = Mat::zero(n, n);
    for i in 0..n {
        j[(i, n - 1 - i)] = Rat::ONE;
    }
    j
}

fn j6() -> Mat {
    let mut j = Mat::zero(6, 6);
    for i in 0..3 {
        j[(i, 5 - i)] = Rat::ONE;
        j[(5 - i, i)] = q(-1);
    }
    j
}

fn e(n: usize, i: usize, j: usize) -> Mat {
    let mut m = Mat::zero(n, n);
    m[(i - 1, j - 1)] = Rat::ONE;
    m
}

/// e'_{ij} = e_ij - e_{n+1-j, n+1-i} in an n x n matrix.
fn eprime(n: usize, i: usize, j: usize) -> Mat {
    e(n, i, j).sub(&e(n, n + 1 - j, n + 1 - i))
}

impl Realization {
    fn derive(
        sys: &RootSystem,
        nt: &StructureConstants,
        name: &str,
        size: usize,
        form: Option<Mat>,
        form_kind: FormKind,
        levi: Vec<usize>,
        simple_e: HashMap<usize, Mat>,
        torus_exp: Vec<Vec<i32>>,
    ) -> Realization {
        let mut e_mats: HashMap<RootId, Mat> = HashMap::new();
        for (&i, m) in &simple_e {
            e_mats.insert(sys.simple_ids[i - 1], m.clone());
        }
        // positive Levi roots in height order; e_gamma = [e_i, e_delta]/N
        let mut roots = sys.levi_positive_roots(&levi);
        roots.sort_by_key(|&r| sys.root(r).height());
        for &gamma in &roots {
            if e_mats.contains_key(&gamma) {
                continue;
            }
            let (i, delta) = levi
                .iter()
                .find_map(|&i| {
                    let a = sys.simple_ids[i - 1];
                    let rest = sys.root(gamma).sub(sys.root(a));
                    sys.id_of(&rest)
                        .filter(|&d| sys.is_positive(d) && e_mats.contains_key(&d))
                        .map(|d| (a, d))
                })
                .expect("levi root decomposes");
            let ea = &e_mats[&i];
            let ed = &e_mats[&delta];
            let bracket = ea.matmul(ed).sub(&ed.matmul(ea));
            let n = nt.n(i, delta);
            debug_assert!(n != 0);
            e_mats.insert(gamma, bracket.scale(qr(1, n as i64)));
        }
        let f_mats = e_mats
            .iter()
            .map(|(&r, m)| (sys.neg_id(r), m.transpose()))
            .collect();
        Realization {
            name: name.to_string(),
            size,
            form,
            form_kind,
            levi,
            e_mats,
            f_mats,
            torus_exp,
        }
    }

    /// M1 = GSp6 relative to J6.
    pub fn m1(sys: &RootSystem, nt: &StructureConstants) -> Realization {
        let mut se = HashMap::new();
        se.insert(4, e(6, 1, 2).sub(&e(6, 5, 6)));
        se.insert(3, e(6, 2, 3).sub(&e(6, 4, 5)));
        se.insert(2, e(6, 3, 4));
        // diag(t4, t4^-1 t3, t3^-1 t2, t2^-1 t3 t1, t3^-1 t1 t4, t4^-1 t1)
        let torus = vec![
            vec![0, 0, 0, 1],
            vec![0, 0, 1, -1],
            vec![0, 1, -1, 0],
            vec![1, -1, 1, 0],
            vec![1, 0, -1, 1],
            vec![1, 0, 0, -1],
        ];
        Realization::derive(
            sys,
            nt,
            "M1",
            6,
            Some(j6()),
            FormKind::Similitude,
            vec![2, 3, 4],
            se,
            torus,
        )
    }

    /// M2: pairs (GL2, GL3) with det g1 det g2 = 1, as 5x5 block matrices.
    pub fn m2(sys: &RootSystem, nt: &StructureConstants) -> Realization {
        let mut se = HashMap::new();
        se.insert(1, e(5, 1, 2));
        se.insert(3, e(5, 3, 4));
        se.insert(4, e(5, 4, 5));
        // (diag(t1, t1^-1 t2), diag(t2^-1 t3, t3^-1 t4, t4^-1))
        let torus = vec![
            vec![1, 0, 0, 0],
            vec![-1, 1, 0, 0],
            vec![0, -1, 1, 0],
            vec![0, 0, -1, 1],
            vec![0, 0, 0, -1],
        ];
        Realization::derive(sys, nt, "M2", 5, None, FormKind::GlPair, vec![1, 3, 4], se, torus)
    }

    /// M3: pairs (GL3, GL2) with det g1 det g2^2 = 1.
    pub fn m3(sys: &RootSystem, nt: &StructureConstants) -> Realization {
        let mut se = HashMap::new();
        se.insert(1, e(5, 1, 2));
        se.insert(2, e(5, 2, 3));
        se.insert(4, e(5, 4, 5));
        // (diag(t1, t1^-1 t2, t2^-1 t3^2), diag(t4 t3^-1, t4^-1))
        let torus = vec![
            vec![1, 0, 0, 0],
            vec![-1, 1, 0, 0],
            vec![0, -1, 2, 0],
            vec![0, 0, -1, 1],
            vec![0, 0, 0, -1],
        ];
        Realization::derive(sys, nt, "M3", 5, None, FormKind::GlPair, vec![1, 2, 4], se, torus)
    }

    /// M4 = GSpin7 embedded in SO8 (the spin representation) relative to
    /// the antidiagonal form.  The published generator images for alpha_1
    /// and alpha_3 satisfy the Chevalley relations only after exchanging
    /// the two labels (the eight-dimensional spin picture folds two outer
    /// nodes of the D4 diagram into the short B3 node), so the consistent
    /// seeding is alpha_1 -> e'_34 and alpha_3 -> e'_12 + e'_35.
    pub fn m4(sys: &RootSystem, nt: &StructureConstants) -> Realization {
        let mut se = HashMap::new();
        se.insert(1, eprime(8, 3, 4));
        se.insert(2, eprime(8, 2, 3));
        se.insert(3, eprime(8, 1, 2).add(&eprime(8, 3, 5)));
        let torus = vec![
            vec![1, 0, 0, -1],
            vec![-1, 1, 0, 0],
            vec![1, -1, 1, 0],
            vec![-1, 0, 1, 0],
            vec![1, 0, -1, 1],
            vec![-1, 1, -1, 1],
            vec![1, -1, 0, 1],
            vec![-1, 0, 0, 2],
        ];
        Realization::derive(
            sys,
            nt,
            "M4",
            8,
            Some(antidiag_form(8)),
            FormKind::Similitude,
            vec![1, 2, 3],
            se,
            torus,
        )
    }

    /// The projection of M4 to SO7 (an isomorphism on unipotent subgroups).
    pub fn so7(sys: &RootSystem, nt: &StructureConstants) -> Realization {
        let mut se = HashMap::new();
        se.insert(1, eprime(7, 1, 2));
        se.insert(2, eprime(7, 2, 3));
        se.insert(3, e(7, 3, 4).sub(&e(7, 4, 5)));
        // no torus contract for the projection; identity exponents
        let torus = vec![vec![0, 0, 0, 0]; 7];
        Realization::derive(
            sys,
            nt,
            "SO7",
            7,
            Some(antidiag_form(7)),
            FormKind::Similitude,
            vec![1, 2, 3],
            se,
            torus,
        )
    }

    /// Image of x_root(t); the root must lie in the Levi.
    pub fn x(&self, root: RootId, t: Rat, sys: &RootSystem) -> Result<Mat, LieError> {
        let nil = self
            .e_mats
            .get(&root)
            .or_else(|| self.f_mats.get(&root))
            .ok_or_else(|| {
                LieError::Invalid(format!(
                    "{} has no image for root {}",
                    self.name,
                    sys.root(root).digits()
                ))
            })?;
        // exp(t N) exactly
        let mut m = Mat::identity(self.size);
        let mut pow = Mat::identity(self.size);
        let mut k = 1i64;
        loop {
            pow = pow.matmul(nil);
            if pow.is_zero() {
                break;
            }
            let mut tk = Rat::ONE;
            for _ in 0..k {
                tk *= t;
            }
            m = m.add(&pow.scale(tk * qr(1, (1..=k).product::<i64>())));
            k += 1;
            assert!(k < 8);
        }
        Ok(m)
    }

    /// Torus image prod alpha_i^vee(t_i).
    pub fn torus(&self, values: &[Rat; 4]) -> Mat {
        let mut m = Mat::identity(self.size);
        for (i, exps) in self.torus_exp.iter().enumerate() {
            let mut d = Rat::ONE;
            for (j, &ej) in exps.iter().enumerate() {
                d *= crate::realize::rat_pow(values[j], ej);
            }
            m[(i, i)] = d;
        }
        m
    }

    pub fn word(&self, gens: &[LeviGen], sys: &RootSystem) -> Result<Mat, LieError> {
        let mut m = Mat::identity(self.size);
        for g in gens {
            let gm = match g {
                LeviGen::Root(r, t) => self.x(*r, *t, sys)?,
                LeviGen::Torus(vals) => {
                    let mut arr = [Rat::ONE; 4];
                    for &(i, t) in vals {
                        arr[i] = t;
                    }
                    self.torus(&arr)
                }
            };
            m = m.matmul(&gm);
        }
        Ok(m)
    }

    pub fn levi_root_ids(&self, sys: &RootSystem) -> Vec<RootId> {
        sys.levi_positive_roots(&self.levi)
    }
}

pub fn rat_pow(t: Rat, e: i32) -> Rat {
    let mut base = if e < 0 { t.recip() } else { t };
    let mut k = e.unsigned_abs();
    let mut acc = Rat::ONE;
    while k > 0 {
        if k & 1 == 1 {
            acc *= base;
        }
        k >>= 1;
        if k > 0 {
            base *= base;
        }
    }
    acc
}

/// One verification finding.
#[derive(Clone, Debug)]
pub struct CheckItem {
    pub what: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct RealizationReport {
    pub name: String,
    pub items: Vec<CheckItem>,
}

impl RealizationReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    fn push(&mut self, what: &str, pass: bool, detail: String) {
        self.items.push(CheckItem { what: what.to_string(), pass, detail });
    }
}

/// Form preservation, one-parameter additivity, and Chevalley relations
/// against collected commutators in the adjoint model.
pub fn verify_realization(
    adj: &AdjointGroup,
    real: &Realization,
    random_pairs: usize,
) -> Result<RealizationReport, LieError> {
    let sys = adj.sys;
    let mut report = RealizationReport { name: real.name.clone(), items: Vec::new() };
    let roots = real.levi_root_ids(sys);
    // (a) form preservation at three probe parameters
    match real.form_kind {
        FormKind::Similitude => {
            let jf = real.form.as_ref().unwrap();
            let mut ok = true;
            let mut detail = String::new();
            for &r in &roots {
                for &sgn in &[r, sys.neg_id(r)] {
                    for t in [q(1), q(2), qr(3, 2)] {
                        let m = real.x(sgn, t, sys)?;
                        let lhs = m.transpose().matmul(jf).matmul(&m);
                        if lhs != *jf {
                            ok = false;
                            detail = format!("x_{}({}) breaks the form", sys.root(sgn).digits(), t);
                        }
                    }
                }
            }
            // torus: similitude factor must be a single scalar
            let tv = [q(2), q(3), q(5), q(7)];
            let m = real.torus(&tv);
            let lhs = m.transpose().matmul(jf).matmul(&m);
            let mut mu = None;
            let mut scalar = true;
            for i in 0..real.size {
                for jx in 0..real.size {
                    if jf[(i, jx)].is_zero() {
                        if !lhs[(i, jx)].is_zero() {
                            scalar = false;
                        }
                    } else {
                        let ratio = lhs[(i, jx)] / jf[(i, jx)];
                        match mu {
                            None => mu = Some(ratio),
                            Some(m0) if m0 == ratio => {}
                            _ => scalar = false,
                        }
                    }
                }
            }
            if !scalar {
                ok = false;
                detail = "torus image is not a similitude".into();
            }
            report.push("form", ok, detail);
        }
        FormKind::GlPair => {
            // block structure (2+3 or 3+2) and torus det constraint
            let split = if real.name == "M2" { 2 } else { 3 };
            let tv = [q(2), q(3), q(5), q(7)];
            let m = real.torus(&tv);
            let d1: Rat = (0..split).fold(Rat::ONE, |a, i| a * m[(i, i)]);
            let d2: Rat = (split..real.size).fold(Rat::ONE, |a, i| a * m[(i, i)]);
            let ok = if real.name == "M2" { d1 * d2 == Rat::ONE } else { d1 * d2 * d2 == Rat::ONE };
            report.push(
                "form",
                ok,
                if ok { String::new() } else { "determinant constraint fails".into() },
            );
        }
    }
    // (b) one-parameter additivity
    let mut ok = true;
    let mut detail = String::new();
    for &r in &roots {
        for &sgn in &[r, sys.neg_id(r)] {
            let (a, b) = (qr(2, 3), q(5));
            let lhs = real.x(sgn, a, sys)?.matmul(&real.x(sgn, b, sys)?);
            if lhs != real.x(sgn, a + b, sys)? {
                ok = false;
                detail = format!("x_{} not additive", sys.root(sgn).digits());
            }
        }
    }
    report.push("one-parameter", ok, detail);
    // (c) Chevalley relations: matrix commutators equal the image of the
    // collected commutator word
    let mut rng = XorShift::new(0x5eed ^ roots.len() as u64);
    let mut ok = true;
    let mut detail = String::new();
    for _ in 0..random_pairs {
        let a = roots[rng.below(roots.len())];
        let b = roots[rng.below(roots.len())];
        if a == b {
            continue;
        }
        let r = q(1 + rng.below(5) as i64);
        let s = q(1 + rng.below(5) as i64);
        let word = adj.commutator((a, r), (b, s))?;
        let lhs = real
            .x(a, r, sys)?
            .matmul(&real.x(b, s, sys)?)
            .matmul(&real.x(a, -r, sys)?)
            .matmul(&real.x(b, -s, sys)?);
        let mut rhs = Mat::identity(real.size);
        for &(root, c) in &word.0 {
            rhs = rhs.matmul(&real.x(root, c, sys)?);
        }
        if lhs != rhs {
            ok = false;
            detail = format!(
                "({}, {}) commutator mismatch",
                sys.root(a).digits(),
                sys.root(b).digits()
            );
        }
    }
    report.push("chevalley", ok, detail);
    // (d) [e, f] = h consistency for the simple roots with a torus contract.
    // The published M4 torus is not a cocharacter product in these
    // coordinates (the spin picture rescales it), so the check applies to
    // the GL-side Levi factors only.
    if matches!(real.name.as_str(), "M1" | "M2" | "M3") {
        let mut ok = true;
        let mut detail = String::new();
        for &i in &real.levi {
            let a = sys.simple_ids[i - 1];
            let em = real.x(a, Rat::ONE, sys)?.sub(&Mat::identity(real.size));
            // strip higher terms: nilpotent part is x(1) - 1 only for
            // square-zero images, so recompute from the stored matrices
            let _ = em;
            let ern = real.e_mats[&a].clone();
            let frn = real.f_mats[&sys.neg_id(a)].clone();
            let h = ern.matmul(&frn).sub(&frn.matmul(&ern));
            // compare against d/dt of alpha_i^vee(t) at 1: diagonal of exponents
            let mut want = Mat::zero(real.size, real.size);
            for (d, exps) in real.torus_exp.iter().enumerate() {
                want[(d, d)] = q(exps[i - 1] as i64);
            }
            if h != want {
                ok = false;
                detail = format!("[e,f] != h for alpha_{}", i);
            }
        }
        report.push("coroot", ok, detail);
    }
    Ok(report)
}

/// Small deterministic xorshift for reproducible randomized checks.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> XorShift {
        XorShift(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// The conjugation matrix of a Levi word on U(P1)/Z in the slot
/// coordinates of the given ordering: row p is the (x|y) coordinate vector
/// of l(g s_p(1) g^{-1}).  Errors if some conjugate picks up a center
/// shift (it never does for the derived subgroup).
pub fn conjugation_matrix(
    adj: &AdjointGroup,
    target: &HeisenbergTarget,
    gens: &[LeviGen],
    _sys: &RootSystem,
) -> Result<Mat, LieError> {
    let dim = 2 * target.n;
    let g = levi_word_matrix(adj, gens);
    let ginv = g.inverse();
    let order = adj.collection_order();
    let mut m = Mat::zero(dim, dim);
    for p in 0..dim {
        let root = target.ordering[p];
        // slot generator with unit coordinate
        let coef = if p < target.n { Rat::ONE } else { Rat::ONE / target.y_factors[p - target.n] };
        let conj = g.matmul(&adj.x(root, coef)).matmul(&ginv);
        let word = adj.peel(&conj, &order)?;
        let h = target.apply(&word)?;
        if !h.z.is_zero() {
            return Err(LieError::Invalid(format!(
                "conjugate of slot {} acquires a center shift",
                p + 1
            )));
        }
        for j in 0..target.n {
            m[(p, j)] = h.x[j];
            m[(p, target.n + j)] = h.y[j];
        }
    }
    Ok(m)
}

pub fn levi_word_matrix(adj: &AdjointGroup, gens: &[LeviGen]) -> Mat {
    let mut m = Mat::identity(adj.dim);
    for g in gens {
        let gm = match g {
            LeviGen::Root(r, t) => adj.x(*r, *t),
            LeviGen::Torus(vals) => adj.torus(vals),
        };
        m = m.matmul(&gm);
    }
    m
}

/// varpi_3(g): the inverse of the conjugation matrix, so that
/// l(g u g^{-1}) = (v * varpi3(g)^{-1} | z) for l(u) = (v|z); this is the
/// convention under which the published matrices come out on the nose.
pub fn varpi3(
    adj: &AdjointGroup,
    target: &HeisenbergTarget,
    gens: &[LeviGen],
    sys: &RootSystem,
) -> Result<Mat, LieError> {
    Ok(conjugation_matrix(adj, target, gens, sys)?.inverse())
}

/// Conjugation inside H_(2n+1) x| Sp_2n: sigma (v|z) sigma^{-1} = (v sigma^{-1} | z).
pub fn heis_conj(sigma: &Mat, h: &HeisElt) -> HeisElt {
    let n = h.x.len();
    let mut v: Vec<Rat> = Vec::with_capacity(2 * n);
    v.extend(&h.x);
    v.extend(&h.y);
    let row = sigma.inverse().row_apply(&v);
    HeisElt { x: row[..n].to_vec(), y: row[n..].to_vec(), z: h.z }
}

/// l(g u g^{-1}) == varpi3(g) l(u) varpi3(g)^{-1} for a slot generator u.
pub fn intertwining_check(
    adj: &AdjointGroup,
    target: &HeisenbergTarget,
    gens: &[LeviGen],
    u_root: RootId,
    t: Rat,
    sys: &RootSystem,
) -> Result<bool, LieError> {
    let vp = varpi3(adj, target, gens, sys)?;
    let g = levi_word_matrix(adj, gens);
    let conj = g.matmul(&adj.x(u_root, t)).matmul(&g.inverse());
    let lhs = target.apply(&adj.peel(&conj, &adj.collection_order())?)?;
    let lu = target
        .slot(u_root, t)
        .ok_or_else(|| LieError::Invalid("u outside the group".into()))?;
    let rhs = heis_conj(&vp, &lu);
    Ok(lhs == rhs)
}

/// The customary H15 slot ordering (height order, the one the slot
/// normalizations are printed in).
pub fn ordering_h15(sys: &RootSystem) -> Vec<RootId> {
    ["1000", "1100", "1110", "1120", "1111", "1220", "1121", "1221", "1122", "1231", "1222",
        "1232", "1242", "1342"]
        .iter()
        .map(|s| sys.id_of_str(s).unwrap())
        .collect()
}

/// The Heisenberg slot ordering used for the printed Sp14 matrices
/// (the one fixed before the published varpi3 images).
pub fn ordering_a(sys: &RootSystem) -> Vec<RootId> {
    ["1000", "1100", "1110", "1111", "1120", "1121", "1122", "1220", "1221", "1222", "1231",
        "1232", "1242", "1342"]
        .iter()
        .map(|s| sys.id_of_str(s).unwrap())
        .collect()
}

/// The ordering used for the P4 analysis.
pub fn ordering_b(sys: &RootSystem) -> Vec<RootId> {
    ["1000", "1100", "1110", "1120", "1220", "1111", "1121", "1221", "1231", "1122", "1222",
        "1232", "1242", "1342"]
        .iter()
        .map(|s| sys.id_of_str(s).unwrap())
        .collect()
}

/// Whether a published matrix is read literally or with the misprint
/// adjudications applied (each adjudication is forced by requiring the
/// family to be a one-parameter group of form-preserving matrices).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Print {
    Literal,
    Adjudicated,
}

/// Published 14x14 images under ordering A.
///
/// Adjudications against `Literal` (all caught by the additivity and
/// form-preservation tests, which the literal versions fail):
/// - x_0100: the parameter-free -2 e_{69} becomes -2r e_{69};
/// - x_0110, x_0111, x_0121: the quadratic term carries a prime instead of
///   a double prime (e.g. -r^2 e'_{18}); x_0110 and x_0111 additionally
///   have the sign of the linear e'-term flipped (+r e'_{13}, +r e'_{14});
/// - x_0001: the quadratic term is r^2 e''_{57}, not r^2 e'_{57}.
pub fn printed_varpi3(name: &str, r: Rat, print: Print) -> Result<Mat, LieError> {
    let n = 14;
    let lit = print == Print::Literal;
    let ep = |i, j| eprime(n, i, j);
    let edp = |i: usize, j: usize| e(n, i, j).add(&e(n, n + 1 - j, n + 1 - i));
    let m = match name {
        "0100" => {
            let last = if lit { e(n, 6, 9).scale(q(-2)) } else { e(n, 6, 9).scale(q(-2) * r) };
            Mat::identity(n)
                .add(&ep(1, 2).scale(r))
                .add(&edp(5, 8).scale(r))
                .add(&last)
        }
        "0110" => {
            let (lin, quad) = if lit {
                (ep(1, 3).scale(-r), edp(1, 8).scale(-(r * r)))
            } else {
                (ep(1, 3).scale(r), ep(1, 8).scale(-(r * r)))
            };
            Mat::identity(n)
                .add(&lin)
                .add(&quad)
                .add(&edp(3, 8).scale(q(-2) * r))
                .add(&edp(4, 9).scale(q(2) * r))
        }
        "0111" => {
            let (lin, quad) = if lit {
                (ep(1, 4).scale(-r), edp(1, 10).scale(-(r * r)))
            } else {
                (ep(1, 4).scale(r), ep(1, 10).scale(-(r * r)))
            };
            Mat::identity(n)
                .add(&lin)
                .add(&quad)
                .add(&edp(3, 9).scale(q(2) * r))
                .add(&edp(4, 10).scale(q(-2) * r))
        }
        "0120" => Mat::identity(n)
            .add(&ep(1, 5).scale(r))
            .add(&edp(2, 8).scale(r))
            .add(&e(n, 4, 11).scale(q(-2) * r)),
        "0121" => {
            let quad = if lit {
                edp(1, 13).scale(-(r * r))
            } else {
                ep(1, 13).scale(-(r * r))
            };
            Mat::identity(n)
                .add(&ep(1, 6).scale(r))
                .add(&quad)
                .add(&edp(2, 9).scale(q(-2) * r))
                .add(&edp(3, 11).scale(q(2) * r))
        }
        "0122" => Mat::identity(n)
            .add(&ep(1, 7).scale(r))
            .add(&edp(2, 10).scale(r))
            .add(&e(n, 3, 12).scale(q(-2) * r)),
        "0001" => {
            let quad = if lit { ep(5, 7).scale(r * r) } else { edp(5, 7).scale(r * r) };
            Mat::identity(n)
                .add(&ep(3, 4).scale(r))
                .add(&ep(5, 6).scale(r))
                .add(&ep(6, 7).scale(q(2) * r))
                .add(&quad)
        }
        other => return Err(LieError::Invalid(format!("no printed image for {}", other))),
    };
    Ok(m)
}

/// Published composite image of x_0010(r1) x_0011(r2) under ordering A.
/// Adjudication: the three quadratic terms carry double primes.
pub fn printed_varpi3_x0010_x0011(r1: Rat, r2: Rat, print: Print) -> Mat {
    let n = 14;
    let ep = |i, j| eprime(n, i, j);
    let edp = |i: usize, j: usize| e(n, i, j).add(&e(n, n + 1 - j, n + 1 - i));
    let quad = |i: usize, j: usize| if print == Print::Literal { ep(i, j) } else { edp(i, j) };
    Mat::identity(n)
        .add(&ep(2, 3).scale(r1))
        .add(&ep(2, 4).scale(r2))
        .add(&quad(2, 5).scale(r1 * r1))
        .add(&quad(2, 6).scale(r1 * r2))
        .add(&quad(2, 7).scale(r2 * r2))
        .add(&ep(3, 5).scale(q(2) * r1))
        .add(&ep(3, 6).scale(r2))
        .add(&ep(4, 6).scale(r1))
        .add(&ep(4, 7).scale(q(2) * r2))
}

/// The h block of the published diag(h, th^-1) image of
/// x_0010(xi6) x_0011(xi7/2) under ordering A.
pub fn printed_h_block(xi6: Rat, xi7: Rat) -> Mat {
    let mut h = Mat::identity(7);
    h[(1, 2)] = xi6;
    h[(1, 3)] = xi7 * qr(1, 2);
    h[(1, 4)] = xi6 * xi6;
    h[(1, 5)] = xi6 * xi7 * qr(1, 2);
    h[(1, 6)] = xi7 * xi7 * qr(1, 4);
    h[(2, 4)] = q(2) * xi6;
    h[(2, 5)] = xi7 * qr(1, 2);
    h[(3, 5)] = xi6;
    h[(3, 6)] = xi7;
    h
}

/// Printed middle 10x10 blocks for the P4 ordering: the images of
/// n1'(r) and n1''(r) inside Sp10.
pub fn printed_n1_prime_block(r0111: Rat, r0121: Rat, r0122: Rat) -> Mat {
    let mut x = Mat::zero(5, 5);
    x[(0, 0)] = q(2) * r0111;
    x[(0, 1)] = q(2) * r0121;
    x[(0, 4)] = q(-2) * r0122;
    x[(1, 1)] = q(-2) * r0111;
    x[(3, 3)] = q(-2) * r0111;
    x[(3, 4)] = q(2) * r0121;
    x[(4, 4)] = q(2) * r0111;
    let mut m = Mat::identity(10);
    for i in 0..5 {
        for j in 0..5 {
            m[(i, 5 + j)] = x[(i, j)];
        }
    }
    m
}

pub fn printed_n1_doubleprime_block(r0001: Rat, r0011: Rat) -> Mat {
    let mut h = Mat::identity(5);
    h[(0, 3)] = r0001;
    h[(0, 4)] = r0011;
    h[(1, 4)] = r0001;
    let mut x = Mat::zero(5, 5);
    x[(0, 2)] = q(-2) * r0001 * r0011;
    x[(1, 2)] = -(r0001 * r0001);
    x[(2, 0)] = q(-2) * r0001;
    x[(2, 1)] = q(-2) * r0011;
    x[(2, 3)] = -(r0001 * r0001);
    x[(2, 4)] = q(-2) * r0001 * r0011;
    x[(3, 2)] = q(-2) * r0011;
    x[(4, 2)] = q(-2) * r0001;
    let mut unip = Mat::identity(10);
    for i in 0..5 {
        for j in 0..5 {
            unip[(i, 5 + j)] = x[(i, j)];
        }
    }
    let mut levi = Mat::zero(10, 10);
    let hinv_t = h.inverse().antitranspose();
    for i in 0..5 {
        for j in 0..5 {
            levi[(i, j)] = h[(i, j)];
            levi[(5 + i, 5 + j)] = hinv_t[(i, j)];
        }
    }
    unip.matmul(&levi)
}

/// Middle 10x10 block of a 14x14 matrix (rows/cols 3..12).
pub fn middle_block(m: &Mat, outer: usize) -> Mat {
    let n = m.rows();
    let inner = n - 2 * outer;
    let mut b = Mat::zero(inner, inner);
    for i in 0..inner {
        for j in 0..inner {
            b[(i, j)] = m[(outer + i, outer + j)];
        }
    }
    b
}

/// J14: antidiagonal +1 in the upper half, -1 in the lower half.
pub fn j14() -> Mat {
    let mut j = Mat::zero(14, 14);
    for i in 0..7 {
        j[(i, 13 - i)] = Rat::ONE;
        j[(13 - i, i)] = q(-1);
    }
    j
}


/// The 6x6 unipotent with q at (1,5),(2,6), r at (1,6) and p at (2,5) as a
/// word in the root subgroups of the C3 Levi: 0121 carries the (1,5)/(2,6)
/// pair, 0120 the (2,5) entry and 0122 the (1,6) entry, with coefficients
/// solved from the M1 realization.
pub fn pqr_word(
    sys: &RootSystem,
    nt: &StructureConstants,
    p: Rat,
    qq: Rat,
    r: Rat,
) -> Result<Vec<LeviGen>, LieError> {
    let m1 = Realization::m1(sys, nt);
    let id = |s: &str| sys.id_of_str(s).unwrap();
    let entry = |root: &str, i: usize, j: usize| -> Result<Rat, LieError> {
        let m = m1.x(id(root), Rat::ONE, sys)?;
        Ok(m[(i, j)])
    };
    Ok(vec![
        LeviGen::Root(id("0121"), qq / entry("0121", 0, 4)?),
        LeviGen::Root(id("0120"), p / entry("0120", 1, 4)?),
        LeviGen::Root(id("0122"), r / entry("0122", 0, 5)?),
    ])
}
