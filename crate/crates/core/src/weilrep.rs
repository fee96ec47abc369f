//! Finite-field model of the Weil representation of
//! H_{2n+1}(F_p) x| Sp_{2n}(F_p) on complex functions on F_p^n, and the
//! operator-identity suite for the published Sp14 matrices.
//!
//! Operators are applied as permutation-plus-phase actions on arrays of
//! length p^n; nothing is ever materialized as a p^n x p^n matrix.  The
//! exactness lives on the integer side; here complex arithmetic with a
//! 1e-8 tolerance is ample since every value is a short sum of p-th roots
//! of unity and Gauss-sum ratios.

use crate::chevalley::{AdjointGroup, CharacterFunctional, StructureConstants};
use crate::error::LieError;
use crate::heis::build_projection;
use crate::matrix::Mat;
use crate::num::{q, Rat};
use crate::realize::{ordering_a, ordering_b, pqr_word, varpi3, LeviGen, XorShift};
use crate::rootsys::{RootId, RootSystem};

/// Minimal complex arithmetic; values are sums of roots of unity.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl Cx {
    pub const ZERO: Cx = Cx { re: 0.0, im: 0.0 };
    pub const ONE: Cx = Cx { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Cx {
        Cx { re, im }
    }

    pub fn add(self, o: Cx) -> Cx {
        Cx::new(self.re + o.re, self.im + o.im)
    }

    pub fn sub(self, o: Cx) -> Cx {
        Cx::new(self.re - o.re, self.im - o.im)
    }

    pub fn mul(self, o: Cx) -> Cx {
        Cx::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }

    pub fn conj(self) -> Cx {
        Cx::new(self.re, -self.im)
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// The finite context: odd prime p, n slots, the additive character, and
/// the normalized quadratic Gauss-sum ratios gamma_a.
pub struct FiniteWeilContext {
    pub p: u64,
    pub n: usize,
    psi_table: Vec<Cx>,
    gamma: Vec<Cx>,
    size: usize,
    strides: Vec<usize>,
}

impl FiniteWeilContext {
    pub fn new(p: u64, n: usize) -> Result<FiniteWeilContext, LieError> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(LieError::EvenPrime(p));
        }
        let size_u128 = (p as u128).pow(n as u32);
        if size_u128 > 10_000_000 {
            return Err(LieError::MemoryGuard(size_u128));
        }
        let size = size_u128 as usize;
        let psi_table: Vec<Cx> = (0..p)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * (k as f64) / (p as f64);
                Cx::new(t.cos(), t.sin())
            })
            .collect();
        // g_psi(a) = sum_x psi(a x^2); gamma_a = g_psi(a) / g_psi(1)
        let gauss = |a: u64| -> Cx {
            let mut s = Cx::ZERO;
            for x in 0..p {
                s = s.add(psi_table[(a * x % p * x % p) as usize]);
            }
            s
        };
        let g1 = gauss(1);
        let g1_norm = g1.re * g1.re + g1.im * g1.im;
        let mut gamma = vec![Cx::ONE; p as usize];
        for a in 1..p {
            let ga = gauss(a);
            // ga / g1
            let num = ga.mul(g1.conj());
            gamma[a as usize] = Cx::new(num.re / g1_norm, num.im / g1_norm);
        }
        let strides = (0..n).map(|i| (p as usize).pow(i as u32)).collect();
        Ok(FiniteWeilContext { p, n, psi_table, gamma, size, strides })
    }

    pub fn psi(&self, k: u64) -> Cx {
        self.psi_table[(k % self.p) as usize]
    }

    pub fn psi_rat(&self, r: Rat) -> Cx {
        self.psi(self.rat_mod(r))
    }

    /// Exact rational reduced mod p (denominator inverted mod p).
    pub fn rat_mod(&self, r: Rat) -> u64 {
        let p = self.p as i128;
        let num = r.num().rem_euclid(p) as u64;
        let den = r.den().rem_euclid(p) as u64;
        assert!(den != 0, "denominator divisible by p");
        num * mod_inv(den, self.p) % self.p
    }

    pub fn gamma(&self, a: u64) -> Cx {
        self.gamma[(a % self.p) as usize]
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, xi: &[u64]) -> usize {
        xi.iter().zip(&self.strides).map(|(&c, &s)| (c % self.p) as usize * s).sum()
    }

    pub fn point(&self, mut idx: usize) -> Vec<u64> {
        let mut xi = vec![0u64; self.n];
        for i in 0..self.n {
            xi[i] = (idx % self.p as usize) as u64;
            idx /= self.p as usize;
        }
        xi
    }

    /// A deterministic pseudo-random test function.
    pub fn random_phi(&self, seed: u64) -> Vec<Cx> {
        let mut rng = XorShift::new(seed);
        (0..self.size)
            .map(|_| {
                let a = (rng.next() % 2000) as f64 / 1000.0 - 1.0;
                let b = (rng.next() % 2000) as f64 / 1000.0 - 1.0;
                Cx::new(a, b)
            })
            .collect()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// An element of H_{2n+1}(F_p) in slot coordinates.
#[derive(Clone, Debug)]
pub struct HeisFp {
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    pub z: u64,
}

impl HeisFp {
    pub fn zero(n: usize) -> HeisFp {
        HeisFp { x: vec![0; n], y: vec![0; n], z: 0 }
    }
}

/// omega_psi of a Heisenberg element: phi(xi) -> psi(z + y.t(xi) + (x.t(y))/2) phi(xi + x).
pub fn apply_heisenberg(ctx: &FiniteWeilContext, h: &HeisFp, phi: &[Cx]) -> Vec<Cx> {
    let p = ctx.p;
    let n = ctx.n;
    let half = mod_inv(2, p);
    let mut out = vec![Cx::ZERO; ctx.len()];
    // (x|y|z) = (x|0|0)(0|y|0)(0|0|z - x.ty/2)
    let mut xy = 0u64;
    for i in 0..n {
        xy = (xy + h.x[i] * h.y[n - 1 - i]) % p;
    }
    let z_eff = (h.z + (p - xy % p) * half) % p;
    for idx in 0..ctx.len() {
        let xi = ctx.point(idx);
        // [omega(x|0|0) omega(0|y|0) omega(z)] phi (xi) =
        //   psi(z_eff) psi(y . t(xi + x)) phi(xi + x)
        let mut shifted = vec![0u64; n];
        for i in 0..n {
            shifted[i] = (xi[i] + h.x[i]) % p;
        }
        let mut ph = z_eff;
        for i in 0..n {
            ph = (ph + h.y[i] * shifted[n - 1 - i]) % p;
        }
        out[idx] = ctx.psi(ph).mul(phi[ctx.index(&shifted)]);
    }
    out
}

/// omega_psi of an upper block-triangular symplectic matrix
/// [[A, B], [0, A*]] over F_p: phi(xi) -> gamma_{det A} psi(eta X t(eta)/2) phi(eta),
/// with eta = xi A and X = A^{-1} B.
pub struct SiegelOp {
    a: Vec<Vec<u64>>,
    x: Vec<Vec<u64>>,
    det_a: u64,
}

impl SiegelOp {
    /// Reduce an exact 2n x 2n matrix mod p; it must be upper block
    /// triangular (the operators used here always are).
    pub fn from_rational(ctx: &FiniteWeilContext, m: &Mat) -> Result<SiegelOp, LieError> {
        let n = ctx.n;
        assert_eq!(m.rows(), 2 * n);
        for i in n..2 * n {
            for j in 0..n {
                if !m[(i, j)].is_zero() {
                    return Err(LieError::Invalid(
                        "matrix is not upper block triangular".into(),
                    ));
                }
            }
        }
        let p = ctx.p;
        let md = |r: Rat| ctx.rat_mod(r);
        let mut a = vec![vec![0u64; n]; n];
        let mut b = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = md(m[(i, j)]);
                b[i][j] = md(m[(i, n + j)]);
            }
        }
        let (ainv, det_a) = invert_mod(&a, p)
            .ok_or_else(|| LieError::Invalid("Levi block is singular".into()))?;
        // X = A^{-1} B
        let mut x = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u64;
                for k in 0..n {
                    s = (s + ainv[i][k] * b[k][j]) % p;
                }
                x[i][j] = s;
            }
        }
        Ok(SiegelOp { a, x, det_a })
    }

    pub fn apply(&self, ctx: &FiniteWeilContext, phi: &[Cx]) -> Vec<Cx> {
        let p = ctx.p;
        let n = ctx.n;
        let half = mod_inv(2, p);
        let scale = ctx.gamma(self.det_a);
        let mut out = vec![Cx::ZERO; ctx.len()];
        for idx in 0..ctx.len() {
            let xi = ctx.point(idx);
            // eta = xi A
            let mut eta = vec![0u64; n];
            for j in 0..n {
                let mut s = 0u64;
                for i in 0..n {
                    s = (s + xi[i] * self.a[i][j]) % p;
                }
                eta[j] = s;
            }
            // phase = psi( eta X t(eta) / 2 )
            let mut quad = 0u64;
            for i in 0..n {
                if eta[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    quad = (quad + eta[i] * self.x[i][j] % p * eta[n - 1 - j]) % p;
                }
            }
            let ph = ctx.psi(quad * half % p);
            out[idx] = scale.mul(ph).mul(phi[ctx.index(&eta)]);
        }
        out
    }
}

fn invert_mod(a: &[Vec<u64>], p: u64) -> Option<(Vec<Vec<u64>>, u64)> {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let mut inv: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut det = 1u64;
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col] % p != 0)?;
        if piv != col {
            m.swap(piv, col);
            inv.swap(piv, col);
            det = (p - det) % p;
        }
        let d = m[col][col] % p;
        det = det * d % p;
        let dinv = mod_inv(d, p);
        for j in 0..n {
            m[col][j] = m[col][j] * dinv % p;
            inv[col][j] = inv[col][j] * dinv % p;
        }
        for r in 0..n {
            if r != col && m[r][col] % p != 0 {
                let f = m[r][col] % p;
                for j in 0..n {
                    m[r][j] = (m[r][j] + (p - f) * m[col][j]) % p;
                    inv[r][j] = (inv[r][j] + (p - f) * inv[col][j]) % p;
                }
            }
        }
    }
    Some((inv, det))
}

/// Partial theta: sum over xi in F_p^k of [omega(applied) phi](0, xi).
pub fn partial_theta(ctx: &FiniteWeilContext, k: usize, phi: &[Cx]) -> Cx {
    assert!(k <= ctx.n);
    let p = ctx.p as usize;
    let mut s = Cx::ZERO;
    let block: usize = p.pow(k as u32);
    // coordinates (0,...,0, xi_{n-k+1..n}): little-endian index layout puts
    // the trailing k coordinates at the high strides
    let offset_stride = ctx.strides[ctx.n - k];
    for t in 0..block {
        s = s.add(phi[t * offset_stride]);
    }
    s
}

pub fn l2_norm(phi: &[Cx]) -> f64 {
    phi.iter().map(|c| c.re * c.re + c.im * c.im).sum::<f64>().sqrt()
}

pub fn max_dev(a: &[Cx], b: &[Cx]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.sub(*y).abs()).fold(0.0, f64::max)
}

/// One identity check in the suite report.
#[derive(Clone, Debug)]
pub struct SuiteItem {
    pub id: String,
    pub params: String,
    pub max_deviation: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub p: u64,
    pub n: usize,
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    fn push(&mut self, id: &str, params: String, dev: f64) {
        self.items.push(SuiteItem { id: id.to_string(), params, max_deviation: dev, pass: dev < TOL });
    }
}

pub const TOL: f64 = 1e-8;

struct Machinery<'a> {
    sys: &'a RootSystem,
    adj: AdjointGroup<'a>,
    target_a: crate::heis::HeisenbergTarget,
    target_b: crate::heis::HeisenbergTarget,
}

impl<'a> Machinery<'a> {
    fn new(sys: &'a RootSystem, nt: &'a StructureConstants) -> Machinery<'a> {
        let adj = AdjointGroup::new(sys, nt);
        let center = sys.id_of_str("2342").unwrap();
        let ell = CharacterFunctional::on_roots(&[(center, q(1))]);
        let target_a = build_projection(&adj, &ordering_a(sys), &[center], &ell).unwrap();
        let target_b = build_projection(&adj, &ordering_b(sys), &[center], &ell).unwrap();
        Machinery { sys, adj, target_a, target_b }
    }

    fn id(&self, s: &str) -> RootId {
        self.sys.id_of_str(s).unwrap()
    }
}

/// The operator-identity suite over the published Sp14 data at (p, n).
pub fn paper_identity_suite(
    sys: &RootSystem,
    nt: &StructureConstants,
    p: u64,
    n: usize,
) -> Result<SuiteReport, LieError> {
    if n != 7 {
        return Err(LieError::Invalid("the identity suite needs n = 7".into()));
    }
    let ctx = FiniteWeilContext::new(p, n)?;
    let mach = Machinery::new(sys, nt);
    let mut report = SuiteReport { p, n, items: Vec::new() };
    let mut rng = XorShift::new(0x9e3779b97f4a7c15 ^ p);

    check_pqr(&ctx, &mach, &mut report, &mut rng)?;
    check_adjugate(&ctx, &mach, &mut report, &mut rng)?;
    check_covariance_polynomial(&ctx, &mach, &mut report, &mut rng)?;
    check_n1_formulas(&ctx, &mach, &mut report, &mut rng)?;
    check_invariance_vector(&ctx, &mach, &mut report, &mut rng)?;
    check_heisenberg_covariance(&ctx, &mach, &mut report, &mut rng)?;
    Ok(report)
}

/// (1) omega(varpi3(pqr element)) phi(0,0,0,1,xi'') = psi(-p) phi(same).
fn check_pqr(
    ctx: &FiniteWeilContext,
    mach: &Machinery,
    report: &mut SuiteReport,
    rng: &mut XorShift,
) -> Result<(), LieError> {
    let mut dev: f64 = 0.0;
    for _ in 0..3 {
        let (pv, qv, rv) = (
            q(rng.below(7) as i64),
            q(rng.below(7) as i64),
            q(rng.below(7) as i64),
        );
        let word = pqr_word(mach.sys, mach.adj.nt, pv, qv, rv)?;
        let m = varpi3(&mach.adj, &mach.target_a, &word, mach.sys)?;
        let op = SiegelOp::from_rational(ctx, &m)?;
        let phi = ctx.random_phi(rng.next());
        let out = op.apply(ctx, &phi);
        let expect_phase = ctx.psi_rat(-pv);
        // evaluation points (0,0,0,1,xi'') over all xi'' in F_p^3
        for x5 in 0..ctx.p {
            for x6 in 0..ctx.p {
                for x7 in 0..ctx.p {
                    let pt = [0, 0, 0, 1, x5, x6, x7];
                    let got = out[ctx.index(&pt)];
                    let want = expect_phase.mul(phi[ctx.index(&pt)]);
                    dev = dev.max(got.sub(want).abs());
                }
            }
        }
    }
    report.push("pqr", "random p,q,r; all xi''".into(), dev);
    Ok(())
}

/// (2) the adjugate phase: omega(varpi3(I3, X; 0, I3)) phi(0, xi2..xi7)
/// = psi(-Tr(adj(Xi) X)) phi(same), with Xi the symmetric matrix of xi.
fn check_adjugate(
    ctx: &FiniteWeilContext,
    mach: &Machinery,
    report: &mut SuiteReport,
    rng: &mut XorShift,
) -> Result<(), LieError> {
    let mut dev: f64 = 0.0;
    // words over the Siegel unipotent roots of the C3 Levi; the symmetric
    // 3x3 block X is read off the M1 realization of the same word
    let roots = ["0100", "0110", "0120", "0111", "0121", "0122"];
    let m1 = crate::realize::Realization::m1(mach.sys, mach.adj.nt);
    for trial in 0..3 {
        let ys: Vec<Rat> = (0..6).map(|_| q(rng.below(7) as i64)).collect();
        let word: Vec<LeviGen> = roots
            .iter()
            .zip(&ys)
            .map(|(&r, &c)| LeviGen::Root(mach.id(r), c))
            .collect();
        let m = varpi3(&mach.adj, &mach.target_a, &word, mach.sys)?;
        let op = SiegelOp::from_rational(ctx, &m)?;
        let phi = ctx.random_phi(rng.next());
        let out = op.apply(ctx, &phi);
        let g6 = m1.word(&word, mach.sys)?;
        let mut x_mat = [[Rat::ZERO; 3]; 3];
        for (i, row) in x_mat.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = g6[(i, 3 + j)];
            }
        }
        // sample points: xi1 = 0, the rest random (plus the rank-2 special
        // case xi6 = 1, rest 0 on the first trial)
        let mut points: Vec<[u64; 7]> = (0..4)
            .map(|_| {
                let mut pt = [0u64; 7];
                for c in pt.iter_mut().skip(1) {
                    *c = rng.next() % ctx.p;
                }
                pt
            })
            .collect();
        if trial == 0 {
            points.push([0, 0, 0, 0, 0, 1, 0]);
        }
        for pt in points {
            let xi: Vec<Rat> =
                pt.iter().map(|&c| q(c as i64)).collect();
            // Xi = [[xi4, xi6, xi7], [xi3, xi5, xi6], [xi2, xi3, xi4]]
            let cap = [
                [xi[3], xi[5], xi[6]],
                [xi[2], xi[4], xi[5]],
                [xi[1], xi[2], xi[3]],
            ];
            // adj(Xi)_{ij} = det of the (i,j) minor, no signs, no transpose
            let minor = |i: usize, j: usize| {
                let rs: Vec<usize> = (0..3).filter(|&r| r != i).collect();
                let cs: Vec<usize> = (0..3).filter(|&c| c != j).collect();
                cap[rs[0]][cs[0]] * cap[rs[1]][cs[1]] - cap[rs[0]][cs[1]] * cap[rs[1]][cs[0]]
            };
            // the published pairing couples the (i,k) minor with X_{ik}
            let mut trace = Rat::ZERO;
            for i in 0..3 {
                for k in 0..3 {
                    trace += minor(i, k) * x_mat[i][k];
                }
            }
            let want = ctx.psi_rat(-trace).mul(phi[ctx.index(&pt)]);
            let got = out[ctx.index(&pt)];
            dev = dev.max(got.sub(want).abs());
        }
    }
    report.push("adjugate", "random X, xi".into(), dev);
    Ok(())
}

/// (3) the covariance identity behind Xi * g1 = g1 Xi t(g1): conjugating
/// the Siegel word u_X by a GL3-Levi word g1 multiplies the symmetric
/// block by the t-sandwich, X -> g1 X t(g1) (checked exactly in the GSp6
/// realization), and the adjugate phase of the conjugated operator is the
/// pairing against the sandwiched block (checked on the Weil side).
fn check_covariance_polynomial(
    ctx: &FiniteWeilContext,
    mach: &Machinery,
    report: &mut SuiteReport,
    rng: &mut XorShift,
) -> Result<(), LieError> {
    let mut dev: f64 = 0.0;
    let id = |s: &str| mach.id(s);
    let m1 = crate::realize::Realization::m1(mach.sys, mach.adj.nt);
    let u_roots = ["0100", "0110", "0120", "0111", "0121", "0122"];
    for _ in 0..20 {
        // random Siegel word u_X and GL3 word g1
        let u_word: Vec<LeviGen> = u_roots
            .iter()
            .map(|&r| LeviGen::Root(id(r), q(rng.below(5) as i64)))
            .collect();
        let g1_word: Vec<LeviGen> = vec![
            LeviGen::Root(id("-0001"), q(rng.below(4) as i64)),
            LeviGen::Root(id("-0011"), q(rng.below(4) as i64)),
            LeviGen::Torus(vec![
                (0, Rat::ONE),
                (1, q(1 << rng.below(3))),
                (2, q(1 << rng.below(2))),
                (3, q(1 << rng.below(2))),
            ]),
            LeviGen::Root(id("0001"), q(rng.below(4) as i64)),
            LeviGen::Root(id("0010"), q(rng.below(4) as i64)),
        ];
        let g1_inv: Vec<LeviGen> = g1_word
            .iter()
            .rev()
            .map(|g| match g {
                LeviGen::Root(r, c) => LeviGen::Root(*r, -*c),
                LeviGen::Torus(vals) => LeviGen::Torus(
                    vals.iter().map(|&(i, t)| (i, t.recip())).collect(),
                ),
            })
            .collect();
        // M1 side: blocks of g1, X and of the conjugated word
        let g6 = m1.word(&g1_word, mach.sys)?;
        let u6 = m1.word(&u_word, mach.sys)?;
        let mut conj_word = g1_word.clone();
        conj_word.extend(u_word.iter().cloned());
        conj_word.extend(g1_inv);
        let c6 = m1.word(&conj_word, mach.sys)?;
        let mut g1m = Mat::zero(3, 3);
        let mut xm = Mat::zero(3, 3);
        let mut xm_conj = Mat::zero(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                g1m[(i, j)] = g6[(i, j)];
                xm[(i, j)] = u6[(i, 3 + j)];
                xm_conj[(i, j)] = c6[(i, 3 + j)];
            }
        }
        // the printed sandwich, exactly
        let sandwich = g1m.matmul(&xm).matmul(&g1m.antitranspose());
        if xm_conj != sandwich {
            dev = 1.0;
        }
        // Weil side: the phase of the conjugated operator pairs Xi with the
        // sandwiched block
        let m = varpi3(&mach.adj, &mach.target_a, &conj_word, mach.sys)?;
        let op = SiegelOp::from_rational(ctx, &m)?;
        let phi = ctx.random_phi(rng.next());
        let out = op.apply(ctx, &phi);
        for _ in 0..3 {
            let mut pt = [0u64; 7];
            for c in pt.iter_mut().skip(1) {
                *c = rng.next() % ctx.p;
            }
            let xi: Vec<Rat> = pt.iter().map(|&c| q(c as i64)).collect();
            let cap = [
                [xi[3], xi[5], xi[6]],
                [xi[2], xi[4], xi[5]],
                [xi[1], xi[2], xi[3]],
            ];
            let minor = |i: usize, j: usize| {
                let rs: Vec<usize> = (0..3).filter(|&r| r != i).collect();
                let cs: Vec<usize> = (0..3).filter(|&c| c != j).collect();
                cap[rs[0]][cs[0]] * cap[rs[1]][cs[1]] - cap[rs[0]][cs[1]] * cap[rs[1]][cs[0]]
            };
            let mut trace = Rat::ZERO;
            for i in 0..3 {
                for k in 0..3 {
                    trace += minor(i, k) * sandwich[(i, k)];
                }
            }
            let want = ctx.psi_rat(-trace).mul(phi[ctx.index(&pt)]);
            dev = dev.max(out[ctx.index(&pt)].sub(want).abs());
        }
    }
    report.push("covariance", "20 random (Xi, g1)".into(), dev);
    Ok(())
}

/// (4) the n1' phase formula and the n1'' translation formula at the
/// point (0,0,-1,0,0,xi1,xi2), ordering B.
fn check_n1_formulas(
    ctx: &FiniteWeilContext,
    mach: &Machinery,
    report: &mut SuiteReport,
    rng: &mut XorShift,
) -> Result<(), LieError> {
    let mut dev: f64 = 0.0;
    let p = ctx.p;
    let minus1 = p - 1;
    for _ in 0..3 {
        let (r1, r2, r3) = (
            q(rng.below(7) as i64),
            q(rng.below(7) as i64),
            q(rng.below(7) as i64),
        );
        let gens = vec![
            LeviGen::Root(mach.id("0111"), r1),
            LeviGen::Root(mach.id("0121"), r2),
            LeviGen::Root(mach.id("0122"), r3),
        ];
        let m = varpi3(&mach.adj, &mach.target_b, &gens, mach.sys)?;
        let op = SiegelOp::from_rational(ctx, &m)?;
        let phi = ctx.random_phi(rng.next());
        let out = op.apply(ctx, &phi);
        for xi1 in 0..p {
            for xi2 in 0..p {
                let pt = [0, 0, minus1, 0, 0, xi1, xi2];
                let phase = -r3 - q(2) * q(xi1 as i64) * r2 - q(2) * q(xi2 as i64) * r1;
                let want = ctx.psi_rat(phase).mul(phi[ctx.index(&pt)]);
                dev = dev.max(out[ctx.index(&pt)].sub(want).abs());
            }
        }
        // n1'' translation
        let gens2 = vec![
            LeviGen::Root(mach.id("0001"), r1),
            LeviGen::Root(mach.id("0011"), r2),
        ];
        let m2 = varpi3(&mach.adj, &mach.target_b, &gens2, mach.sys)?;
        let op2 = SiegelOp::from_rational(ctx, &m2)?;
        let out2 = op2.apply(ctx, &phi);
        let (a1, a2) = (ctx.rat_mod(r1), ctx.rat_mod(r2));
        for xi1 in 0..p {
            for xi2 in 0..p {
                let pt = [0, 0, minus1, 0, 0, xi1, xi2];
                let shifted = [
                    0,
                    0,
                    minus1,
                    0,
                    0,
                    (xi1 + p - a1) % p,
                    (xi2 + p - a2) % p,
                ];
                let want = phi[ctx.index(&shifted)];
                dev = dev.max(out2[ctx.index(&pt)].sub(want).abs());
            }
        }
    }
    report.push("n1-formulas", "random r, all xi".into(), dev);
    Ok(())
}

/// (5) invariance vector: omega(varpi3(x_0010(r1) x_0110(r2) x_0120(r3)))
/// phi at (0,0,0,0,-1,0,-1) equals phi there, ordering B.
fn check_invariance_vector(
    ctx: &FiniteWeilContext,
    mach: &Machinery,
    report: &mut SuiteReport,
    rng: &mut XorShift,
) -> Result<(), LieError> {
    let mut dev: f64 = 0.0;
    let minus1 = ctx.p - 1;
    let pt = [0, 0, 0, 0, minus1, 0, minus1];
    for _ in 0..6 {
        let gens = vec![
            LeviGen::Root(mach.id("0010"), q(rng.below(7) as i64)),
            LeviGen::Root(mach.id("0110"), q(rng.below(7) as i64)),
            LeviGen::Root(mach.id("0120"), q(rng.below(7) as i64)),
        ];
        let m = varpi3(&mach.adj, &mach.target_b, &gens, mach.sys)?;
        let op = SiegelOp::from_rational(ctx, &m)?;
        let phi = ctx.random_phi(rng.next());
        let out = op.apply(ctx, &phi);
        dev = dev.max(out[ctx.index(&pt)].sub(phi[ctx.index(&pt)]).abs());
    }
    report.push("invariance", "point (0,0,0,0,-1,0,-1)".into(), dev);
    Ok(())
}

/// (6) Heisenberg covariance: omega(sigma) omega(u) omega(sigma)^{-1}
/// = omega(sigma . u) for Siegel generators sigma and Heisenberg u.
fn check_heisenberg_covariance(
    ctx: &FiniteWeilContext,
    mach: &Machinery,
    report: &mut SuiteReport,
    rng: &mut XorShift,
) -> Result<(), LieError> {
    let mut dev: f64 = 0.0;
    let n = ctx.n;
    let sigma_gens: Vec<Vec<LeviGen>> = vec![
        vec![LeviGen::Root(mach.id("0100"), q(2))],
        vec![LeviGen::Root(mach.id("0122"), q(3))],
        vec![LeviGen::Root(mach.id("0010"), q(1)), LeviGen::Root(mach.id("0011"), q(2))],
        vec![LeviGen::Torus(vec![(0, Rat::ONE), (1, q(8)), (2, q(4)), (3, q(2))])],
    ];
    for gens in &sigma_gens {
        let m = varpi3(&mach.adj, &mach.target_a, gens, mach.sys)?;
        let minv = m.inverse();
        let op = SiegelOp::from_rational(ctx, &m)?;
        let op_inv = SiegelOp::from_rational(ctx, &minv)?;
        for _ in 0..2 {
            let mut u = HeisFp::zero(n);
            match rng.below(3) {
                0 => u.x[rng.below(n)] = 1 + rng.next() % (ctx.p - 1),
                1 => u.y[rng.below(n)] = 1 + rng.next() % (ctx.p - 1),
                _ => u.z = 1 + rng.next() % (ctx.p - 1),
            }
            // sigma . u: coordinates (x|y) -> (x|y) sigma^{-1}, z fixed
            let mut v: Vec<Rat> = Vec::with_capacity(2 * n);
            v.extend(u.x.iter().map(|&c| q(c as i64)));
            v.extend(u.y.iter().map(|&c| q(c as i64)));
            let w = minv.row_apply(&v);
            let mut cu = HeisFp::zero(n);
            for i in 0..n {
                cu.x[i] = ctx.rat_mod(w[i]);
                cu.y[i] = ctx.rat_mod(w[n + i]);
            }
            cu.z = u.z;
            let phi = ctx.random_phi(rng.next());
            let lhs = op.apply(ctx, &apply_heisenberg(ctx, &u, &op_inv.apply(ctx, &phi)));
            let rhs = apply_heisenberg(ctx, &cu, &phi);
            dev = dev.max(max_dev(&lhs, &rhs));
        }
    }
    report.push("heis-covariance", "4 sigma generators".into(), dev);
    Ok(())
}

/// Unitarity of the generators used in the suite.
pub fn unitarity_check(
    sys: &RootSystem,
    nt: &StructureConstants,
    p: u64,
    n: usize,
) -> Result<f64, LieError> {
    let ctx = FiniteWeilContext::new(p, n)?;
    let mach = Machinery::new(sys, nt);
    let mut rng = XorShift::new(7);
    let mut worst: f64 = 0.0;
    for gens in [
        vec![LeviGen::Root(mach.id("0110"), q(2))],
        vec![LeviGen::Root(mach.id("0001"), q(3))],
        vec![LeviGen::Torus(vec![(0, Rat::ONE), (1, q(8)), (2, q(4)), (3, q(2))])],
    ] {
        let m = varpi3(&mach.adj, &mach.target_a, &gens, sys)?;
        let op = SiegelOp::from_rational(&ctx, &m)?;
        let phi = ctx.random_phi(rng.next());
        let out = op.apply(&ctx, &phi);
        worst = worst.max((l2_norm(&out) - l2_norm(&phi)).abs());
    }
    let mut u = HeisFp::zero(n);
    u.x[2] = 1;
    u.y[5] = 2;
    u.z = 3;
    let phi = ctx.random_phi(rng.next());
    let out = apply_heisenberg(&ctx, &u, &phi);
    worst = worst.max((l2_norm(&out) - l2_norm(&phi)).abs());
    Ok(worst)
}

/// gamma_a depends only on the square class of a.
pub fn gamma_square_class_check(p: u64) -> Result<bool, LieError> {
    let ctx = FiniteWeilContext::new(p, 1)?;
    for a in 1..p {
        for s in 1..p {
            let lhs = ctx.gamma(a * s % p * s % p);
            let rhs = ctx.gamma(a);
            if lhs.sub(rhs).abs() > TOL {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Heisenberg group law is respected within tolerance.
pub fn heisenberg_relation_check(p: u64, n: usize) -> Result<f64, LieError> {
    let ctx = FiniteWeilContext::new(p, n)?;
    let mut rng = XorShift::new(99);
    let mut worst: f64 = 0.0;
    let half = mod_inv(2, p);
    for _ in 0..4 {
        let rand_h = |rng: &mut XorShift| {
            let mut h = HeisFp::zero(n);
            for i in 0..n {
                h.x[i] = rng.next() % p;
                h.y[i] = rng.next() % p;
            }
            h.z = rng.next() % p;
            h
        };
        let a = rand_h(&mut rng);
        let b = rand_h(&mut rng);
        // product in H
        let mut prod = HeisFp::zero(n);
        let mut twist = 0u64;
        for i in 0..n {
            prod.x[i] = (a.x[i] + b.x[i]) % p;
            prod.y[i] = (a.y[i] + b.y[i]) % p;
            twist = (twist + a.x[i] * b.y[n - 1 - i] + (p - 1) * (a.y[i] % p) * b.x[n - 1 - i]) % p;
        }
        prod.z = (a.z + b.z + twist * half) % p;
        let phi = ctx.random_phi(rng.next());
        let lhs = apply_heisenberg(&ctx, &a, &apply_heisenberg(&ctx, &b, &phi));
        let rhs = apply_heisenberg(&ctx, &prod, &phi);
        worst = worst.max(max_dev(&lhs, &rhs));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::StructureConstants;

    #[test]
    fn schroedinger_formulas() {
        let ctx = FiniteWeilContext::new(5, 2).unwrap();
        let phi = ctx.random_phi(1);
        // (0|0|z): multiply by psi(z)
        let mut h = HeisFp::zero(2);
        h.z = 3;
        let out = apply_heisenberg(&ctx, &h, &phi);
        for i in 0..ctx.len() {
            assert!(out[i].sub(ctx.psi(3).mul(phi[i])).abs() < TOL);
        }
        // (x|0|0): translation
        let mut h = HeisFp::zero(2);
        h.x = vec![1, 2];
        let out = apply_heisenberg(&ctx, &h, &phi);
        let pt = [3u64, 4u64];
        let shifted = [4u64, 1u64];
        assert!(out[ctx.index(&pt)].sub(phi[ctx.index(&shifted)]).abs() < TOL);
        // (0|y|0): modulation by psi(y . t xi)
        let mut h = HeisFp::zero(2);
        h.y = vec![2, 3];
        let out = apply_heisenberg(&ctx, &h, &phi);
        let pt = [1u64, 4u64];
        // y . t xi = y1 xi2 + y2 xi1
        let phase = (2 * 4 + 3 * 1) % 5;
        assert!(out[ctx.index(&pt)]
            .sub(ctx.psi(phase).mul(phi[ctx.index(&pt)]))
            .abs()
            < TOL);
    }

    #[test]
    fn memory_guard_and_parity() {
        assert!(FiniteWeilContext::new(2, 3).is_err());
        assert!(FiniteWeilContext::new(9, 2).is_err());
        assert!(FiniteWeilContext::new(5, 11).is_err());
    }

    #[test]
    fn gamma_and_unitarity() {
        assert!(gamma_square_class_check(3).unwrap());
        assert!(gamma_square_class_check(5).unwrap());
        assert!(gamma_square_class_check(7).unwrap());
        let sys = RootSystem::build("F4").unwrap();
        let nt = StructureConstants::standard(&sys);
        assert!(unitarity_check(&sys, &nt, 3, 7).unwrap() < TOL);
        assert!(heisenberg_relation_check(3, 3).unwrap() < TOL);
        assert!(heisenberg_relation_check(5, 2).unwrap() < TOL);
    }

    #[test]
    fn partial_theta_lemma_parts() {
        // (ii): restriction to the embedded smaller pair sums phi(0, x)
        let ctx = FiniteWeilContext::new(5, 3).unwrap();
        let phi = ctx.random_phi(5);
        let t2 = partial_theta(&ctx, 2, &phi);
        let mut manual = Cx::ZERO;
        for a in 0..5u64 {
            for b in 0..5u64 {
                manual = manual.add(phi[ctx.index(&[0, a, b])]);
            }
        }
        assert!(t2.sub(manual).abs() < TOL);
        // GL-equivariance: a diag(g1, I, tg1^-1) Siegel-Levi block scales a
        // k-partial theta by gamma_{det g1}
        let sys = RootSystem::build("F4").unwrap();
        let nt = StructureConstants::standard(&sys);
        let ctx7 = FiniteWeilContext::new(3, 7).unwrap();
        let mach = Machinery::new(&sys, &nt);
        // GL1 block in the slot-1 position: torus with det = 2 on the
        // first coordinate of the 14 (the 1000-slot)
        let gens = vec![LeviGen::Torus(vec![
            (0, q(2)),
            (1, q(4)),
            (2, q(4)),
            (3, q(2)),
        ])];
        let m = varpi3(&mach.adj, &mach.target_a, &gens, &sys).unwrap();
        // the slot-1 scaling of this torus word
        let det = m[(0, 0)];
        let op = SiegelOp::from_rational(&ctx7, &m).unwrap();
        let phi = ctx7.random_phi(9);
        let out = op.apply(&ctx7, &phi);
        // full theta over F^6 after the first coordinate
        let t_lhs = partial_theta(&ctx7, 6, &out);
        let t_rhs = ctx7.gamma(ctx7.rat_mod(det)).mul(partial_theta(&ctx7, 6, &phi));
        assert!(
            t_lhs.sub(t_rhs).abs() < TOL,
            "GL equivariance: {:?} vs {:?}",
            t_lhs,
            t_rhs
        );
    }

    #[test]
    fn suite_p3() {
        let sys = RootSystem::build("F4").unwrap();
        let nt = StructureConstants::standard(&sys);
        let report = paper_identity_suite(&sys, &nt, 3, 7).unwrap();
        for item in &report.items {
            assert!(item.pass, "{}: dev {}", item.id, item.max_deviation);
        }
        assert_eq!(report.items.len(), 6);
    }
}
