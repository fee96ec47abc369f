//! The one-shot verification battery over the published vectors.  Each
//! item prints one pass/fail line; the expected discrepancies are the four
//! known open-question records and do not fail the run.

use crate::report::{Discrepancy, Report};
use crate::Ctx;
use liekit::chevalley::{AdjointGroup, CharacterFunctional, StructureConstants};
use liekit::coeffs;
use liekit::dimeq;
use liekit::error::LieError;
use liekit::heis;
use liekit::num::{q, qr, Rat};
use liekit::orbits::{ClassicalKind, Partition};
use liekit::realize::{self, LeviGen, Print};
use liekit::rootsys::{RootSystem, WeylGroup, WeylWord};
use liekit::unfold;
use liekit::weilrep;
use serde_json::json;

pub struct Battery {
    items: Vec<(String, bool, String)>,
}

impl Battery {
    fn new() -> Battery {
        Battery { items: Vec::new() }
    }

    fn check(&mut self, name: &str, pass: bool, detail: String) {
        self.items.push((name.to_string(), pass, detail));
    }

    fn ok(&self) -> bool {
        self.items.iter().all(|(_, p, _)| *p)
    }
}

pub fn e69_discrepancy() -> Discrepancy {
    Discrepancy {
        location: "varpi3(x_0100) printed matrix".into(),
        paper_value: "-2 e_{69} (parameter-free)".into(),
        computed_value: "-2r e_{69}".into(),
        note: "the parameter-free term fails form preservation and one-parameter additivity; \
               the r-linear term passes both and matches the derived embedding"
            .into(),
    }
}

fn expected_discrepancies() -> Vec<Discrepancy> {
    vec![
        Discrepancy {
            location: "table F4 row A1+At1".into(),
            paper_value: "dim tau = 1 for P1/P4".into(),
            computed_value: "dim tau = 3".into(),
            note: "dim B_C + (dim O)/2 - dim U(P) = 4 + 14 - 15 = 3; unreconciled".into(),
        },
        Discrepancy {
            location: "GSpin7 ten-dimensional orbit".into(),
            paper_value: "(31^5) in the text".into(),
            computed_value: "(31^4), a partition of 7 with dimension 10".into(),
            note: "the table uses (31^4); only the partition of 7 has dimension 10 in so7".into(),
        },
        Discrepancy {
            location: "E6 2A2 radical dimension".into(),
            paper_value: "dim U_O = 48".into(),
            computed_value: "|Phi(U_O,T)| = 24 (while dim O = 48)".into(),
            note: "suspected misprint: the eigenvalue count gives 24 radical roots".into(),
        },
        e69_discrepancy(),
    ]
}

/// Derived varpi3 images against the adjudicated prints plus the block
/// data; returns (pass, detail).
pub fn varpi3_battery(
    sys: &RootSystem,
    _nt: &StructureConstants,
    adj: &AdjointGroup,
) -> Result<(bool, String), LieError> {
    let id = |s: &str| sys.id_of_str(s).unwrap();
    let center = vec![id("2342")];
    let ell = CharacterFunctional::on_roots(&[(id("2342"), q(1))]);
    let ta = heis::build_projection(adj, &realize::ordering_a(sys), &center, &ell)?;
    let tb = heis::build_projection(adj, &realize::ordering_b(sys), &center, &ell)?;
    let r = qr(5, 3);
    let jf = realize::j14();
    let mut fails = Vec::new();
    for name in ["0100", "0110", "0111", "0120", "0121", "0122", "0001"] {
        let derived = realize::varpi3(adj, &ta, &[LeviGen::Root(id(name), r)], sys)?;
        if derived != realize::printed_varpi3(name, r, Print::Adjudicated)? {
            fails.push(format!("x_{} print", name));
        }
        if derived.transpose().matmul(&jf).matmul(&derived) != jf {
            fails.push(format!("x_{} form", name));
        }
    }
    let comp = realize::varpi3(
        adj,
        &ta,
        &[LeviGen::Root(id("0010"), q(2)), LeviGen::Root(id("0011"), qr(7, 2))],
        sys,
    )?;
    if comp != realize::printed_varpi3_x0010_x0011(q(2), qr(7, 2), Print::Adjudicated) {
        fails.push("x_0010 x_0011 composite".into());
    }
    let n1p = realize::varpi3(
        adj,
        &tb,
        &[
            LeviGen::Root(id("0111"), q(2)),
            LeviGen::Root(id("0121"), q(3)),
            LeviGen::Root(id("0122"), qr(5, 2)),
        ],
        sys,
    )?;
    if realize::middle_block(&n1p, 2) != realize::printed_n1_prime_block(q(2), q(3), qr(5, 2)) {
        fails.push("n1' block".into());
    }
    let n1pp = realize::varpi3(
        adj,
        &tb,
        &[LeviGen::Root(id("0001"), q(2)), LeviGen::Root(id("0011"), q(3))],
        sys,
    )?;
    if realize::middle_block(&n1pp, 2) != realize::printed_n1_doubleprime_block(q(2), q(3)) {
        fails.push("n1'' block".into());
    }
    // intertwining probes
    for (g, u) in [("0100", "1000"), ("0122", "1220"), ("0001", "1121")] {
        if !realize::intertwining_check(adj, &ta, &[LeviGen::Root(id(g), qr(3, 2))], id(u), q(2), sys)? {
            fails.push(format!("intertwining {} on {}", g, u));
        }
    }
    if fails.is_empty() {
        Ok((true, "printed images, blocks and intertwining all verified".into()))
    } else {
        Ok((false, fails.join("; ")))
    }
}

pub fn run(ctx: &Ctx, all: bool) -> Result<(Report, bool), LieError> {
    let mut b = Battery::new();
    let f4 = RootSystem::build("F4")?;
    let nt = StructureConstants::standard(&f4);
    let adj = AdjointGroup::new(&f4, &nt);
    let wg = WeylGroup::enumerate(&f4);
    let catalog = &ctx.catalog;
    let id = |s: &str| f4.id_of_str(s).unwrap();

    // 1. structure constants
    {
        let vectors = [
            ("1000", "1342", -1),
            ("1100", "1242", 1),
            ("1110", "1232", -2),
            ("1120", "1222", 1),
            ("1111", "1231", 2),
            ("1220", "1122", -1),
            ("1121", "1221", -2),
            ("0001", "1231", -1),
            ("0011", "1221", 1),
            ("0111", "1121", 1),
            ("1111", "0121", -1),
        ];
        let bad: Vec<String> = vectors
            .iter()
            .filter(|&&(a, bb, w)| nt.n_str(&f4, a, bb) != w)
            .map(|&(a, bb, _)| format!("N({},{})", a, bb))
            .collect();
        b.check(
            "structure-constants",
            bad.is_empty(),
            if bad.is_empty() { "11 published values exact".into() } else { bad.join(",") },
        );
    }

    // 2. Weyl action and conjugation signs
    {
        let w0 = WeylWord(vec![1, 2, 3, 2, 1, 4, 3, 2, 3, 4]);
        let mut ok = f4
            .weyl_act(&w0, &liekit::rootsys::Root::parse("0100", 4)?)?
            .digits()
            == "0100";
        ok &= f4.weyl_act(&w0, &liekit::rootsys::Root::parse("1111", 4)?)?.digits() == "0001";
        for (from, to) in
            [("1111", "0001"), ("1000", "1122"), ("1100", "1222"), ("1220", "1342")]
        {
            let (img, c) = adj.weyl_conjugate(&w0, id(from), q(7))?;
            ok &= f4.root(img).digits() == to && c == q(7);
        }
        b.check("weyl-conjugation", ok, "longest-cell conjugation vectors".into());
    }

    // 3. table
    {
        let rows = dimeq::generate_table(&f4, catalog)?;
        let diffs = dimeq::diff_against_published(&rows);
        let ok = diffs.len() == 1 && diffs[0].location.contains("A1+At1");
        b.check(
            "f4-table",
            ok,
            format!("published match on 15 rows; {} flagged", diffs.len()),
        );
    }

    // 4. orbit dimensions
    {
        let mut ok = true;
        for e in catalog.group("F4") {
            ok &= liekit::orbits::orbit_dim_from_diagram(&f4, &e.weighted_diagram) == e.dim_orbit;
        }
        let sp6 = ClassicalKind::Sp(6);
        let so7 = ClassicalKind::So(7);
        for (k, l, d) in [
            (&sp6, "2^21^2", 10u32),
            (&sp6, "3^2", 14),
            (&sp6, "41^2", 14),
            (&sp6, "6", 18),
            (&so7, "31^4", 10),
            (&so7, "51^2", 16),
            (&so7, "3^21", 14),
            (&so7, "2^21^3", 8),
        ] {
            ok &= k.orbit_dim(&Partition::parse(l)?)? == d;
        }
        b.check("orbit-dimensions", ok, "eigencounts and partition formulas".into());
    }

    // 5. half-dimension consistency
    {
        let mut ok = true;
        for e in catalog.group("F4") {
            if e.dim_orbit > 0 {
                ok &= coeffs::half_dim_consistency(&f4, &e.weighted_diagram)?.2;
            }
        }
        let e6 = RootSystem::build("E6")?;
        for label in ["A1", "2A2"] {
            let e = catalog.get("E6", label)?;
            ok &= coeffs::half_dim_consistency(&e6, &e.weighted_diagram)?.2;
        }
        b.check("half-dimensions", ok, "dim U_O - k = (dim O)/2".into());
    }

    // 6. double cosets: counts, data, membership, special cases
    {
        let mut ok = true;
        let levi = |i: usize| -> Vec<usize> { (1..=4).filter(|&j| j != i).collect() };
        let at2 = levi(4);
        let a1 = levi(1);
        for (p_o, counts) in [(&at2, [3usize, 5, 7, 5]), (&a1, [5, 7, 5, 3])] {
            for i in 1..=4 {
                let reps = unfold::double_coset_reps(&f4, &wg, &levi(i), p_o);
                ok &= reps.len() == counts[i - 1];
            }
        }
        let (_, u_at2) = coeffs::attach_parabolic(&f4, &[0, 0, 0, 2])?;
        let w0 = WeylWord(vec![1, 2, 3, 2, 1, 4, 3, 2, 3, 4]);
        let d = unfold::coset_datum(&f4, &wg, &w0, &levi(1), &at2, &u_at2)?;
        let dig = |v: &[liekit::rootsys::RootId]| {
            let mut s: Vec<String> = v.iter().map(|&r| f4.root(r).digits()).collect();
            s.sort();
            s
        };
        ok &= dig(&d.u_o_w()) == vec!["1111", "1121", "1221", "1231", "2342"];
        ok &= dig(&d.u_lower)
            == vec!["0001", "0011", "0111", "0121", "0122", "1122", "1222", "1232", "1242", "1342"];
        let w82 = WeylWord(vec![2, 3, 1, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4]);
        let d2 = unfold::coset_datum(&f4, &wg, &w82, &levi(2), &at2, &u_at2)?;
        ok &= dig(&d2.u_o_w()) == vec!["1221", "1231"] && d2.u_lower.len() == 13;
        let (_, u_a1) = coeffs::attach_parabolic(&f4, &[1, 0, 0, 0])?;
        let w92 = WeylWord(vec![2, 3, 2, 1, 4, 3, 2, 1, 3, 2, 4, 3, 2, 1]);
        let d3 = unfold::coset_datum(&f4, &wg, &w92, &levi(2), &a1, &u_a1)?;
        ok &= d3.qw_levi_simple_roots == vec![3, 4];
        ok &= unfold::special_case(&f4, &wg, &levi(4), &at2);
        ok &= unfold::special_case(&f4, &wg, &levi(1), &a1);
        ok &= !unfold::special_case(&f4, &wg, &levi(1), &at2);
        b.check("double-cosets", ok, "counts, root partitions, special cases".into());
    }

    // 7. open-orbit identities
    {
        let ok = unfold::open_orbit_check(6, 8, 9, 5, 0)?
            && unfold::open_orbit_check(6, 3, 7, 2, 0)?
            && unfold::open_orbit_check(9, 5, 21, 0, 7)?
            && unfold::open_orbit_check(9, 0, 15, 1, 7)?
            && unfold::open_orbit_check(9, 0, 14, 2, 7)?
            && unfold::open_orbit_check(9, 5, 16, 5, 7)?;
        b.check("open-orbit-identities", ok, "character and theta variants".into());
    }

    // 8. Heisenberg data
    {
        let ell15 = CharacterFunctional::on_roots(&[(id("2342"), q(1))]);
        let u15: Vec<_> = f4
            .positive_ids()
            .filter(|&r| f4.root(r).0[0] >= 1 && r != id("2342"))
            .collect();
        let ords = heis::admissible_orderings(&f4, &nt, &u15, &ell15)?;
        let mut ok = ords.len() == 7;
        let u4: Vec<_> = f4.positive_ids().filter(|&r| f4.root(r).0[3] == 1).collect();
        let ell4 = CharacterFunctional::on_roots(&[(id("1232"), q(1))]);
        ok &= heis::admissible_orderings(&f4, &nt, &u4, &ell4)?.len() == 2;
        let (gp4, _) = heis::general_position_center(&f4, &nt, &u4, &ell4);
        ok &= gp4;
        let ell17 = CharacterFunctional::on_roots(&[(id("0122"), q(1)), (id("2342"), q(1))]);
        ok &= heis::general_position_center(&f4, &nt, &u4, &ell17).0;
        for z in ["0122", "1122", "1222", "1242", "1342", "2342"] {
            let ell = CharacterFunctional::on_roots(&[(id(z), q(1))]);
            ok &= !heis::general_position_center(&f4, &nt, &u4, &ell).0;
        }
        // the three published slot formulas
        let ta = heis::build_projection(adj_ref(&adj), &realize::ordering_h15(&f4), &[id("2342")], &ell15)?;
        let y: Vec<Rat> = (1..=7).map(|i| q(i)).collect();
        let pre = ta.preimage_y(&y);
        let want: Vec<(&str, Rat)> = vec![
            ("1221", -y[0] / q(2)),
            ("1122", -y[1]),
            ("1231", y[2] / q(2)),
            ("1222", y[3]),
            ("1232", -y[4] / q(2)),
            ("1242", y[5]),
            ("1342", -y[6]),
        ];
        ok &= pre
            .0
            .iter()
            .zip(&want)
            .all(|(&(r, c), &(s, wc))| f4.root(r).digits() == s && c == wc);
        let ord4 = ["0001", "0011", "0111", "1111", "0121", "1121", "1221", "1231"]
            .map(|s| id(s));
        let center4: Vec<_> = f4.positive_ids().filter(|&r| f4.root(r).0[3] == 2).collect();
        let t4 = heis::build_projection(adj_ref(&adj), &ord4, &center4, &ell4)?;
        let word = liekit::chevalley::UnipotentWord(vec![
            (id("0121"), q(1)),
            (id("1121"), q(2)),
            (id("1221"), q(3)),
            (id("1231"), q(4)),
        ]);
        ok &= t4.apply(&word)?.y == vec![q(-1), q(2), q(3), q(-4)];
        let ord17 = ["0001", "0011", "1111", "1121", "1221", "1231", "0111", "0121"]
            .map(|s| id(s));
        let t17 = heis::build_projection(adj_ref(&adj), &ord17, &center4, &ell17)?;
        let word17 = liekit::chevalley::UnipotentWord(vec![
            (id("1221"), q(1)),
            (id("1231"), q(2)),
            (id("0111"), q(3)),
            (id("0121"), q(4)),
        ]);
        ok &= t17.apply(&word17)?.y == vec![q(-2), q(4), q(-6), q(-8)];
        b.check("heisenberg", ok, "orderings 7/2, slot prints, general position".into());
    }

    // 9. stabilizer dimensions
    {
        let module: Vec<_> = f4.positive_ids().filter(|&r| f4.root(r).0[3] == 1).collect();
        let ell = CharacterFunctional::on_roots(&[(id("1111"), q(1)), (id("0121"), q(1))]);
        let mut ok = nt.lie_stabilizer_dim(&f4, &[1, 2, 3], &module, &ell)?.0 == 14;
        let module2: Vec<_> = f4.positive_ids().filter(|&r| f4.root(r).0[3] == 2).collect();
        let ell2 = CharacterFunctional::on_roots(&[(id("1232"), q(1))]);
        ok &= nt.lie_stabilizer_dim(&f4, &[1, 2, 3], &module2, &ell2)?.0 == 15;
        let e6 = RootSystem::build("E6")?;
        let nte6 = StructureConstants::standard(&e6);
        let m6: Vec<_> = e6
            .positive_ids()
            .filter(|&r| e6.root(r).0[0] + e6.root(r).0[5] == 1)
            .collect();
        let ell6 = CharacterFunctional::on_roots(
            &["111100", "101110", "010111", "001111"]
                .map(|s| (e6.id_of_str(s).unwrap(), q(1))),
        );
        ok &= nte6.lie_stabilizer_dim(&e6, &[2, 3, 4, 5], &m6, &ell6)?.0 == 14;
        #[cfg(feature = "e8")]
        {
            let e8 = RootSystem::build("E8")?;
            let nte8 = StructureConstants::standard(&e8);
            let m8: Vec<_> = e8
                .positive_ids()
                .filter(|&r| e8.root(r).0[6] + e8.root(r).0[7] == 1)
                .collect();
            let ell8 = CharacterFunctional::on_roots(
                &["00000001", "11221110", "11122110", "01122210"]
                    .map(|s| (e8.id_of_str(s).unwrap(), q(1))),
            );
            ok &= nte8.lie_stabilizer_dim(&e8, &[1, 2, 3, 4, 5, 6], &m8, &ell8)?.0 == 52;
        }
        b.check("stabilizers", ok, "14 (At2), 15 (At1), 14 (2A2), 52 (D4/E8)".into());
    }

    // 10. matrix realizations
    {
        let mut ok = true;
        for real in [
            realize::Realization::m1(&f4, &nt),
            realize::Realization::m2(&f4, &nt),
            realize::Realization::m3(&f4, &nt),
            realize::Realization::m4(&f4, &nt),
            realize::Realization::so7(&f4, &nt),
        ] {
            ok &= realize::verify_realization(&adj, &real, 30)?.all_pass();
        }
        let (vp_ok, detail) = varpi3_battery(&f4, &nt, &adj)?;
        ok &= vp_ok;
        b.check("realizations", ok, detail);
    }

    // 11. E6 analysis, dual scan, posets, character checks
    {
        let e6 = RootSystem::build("E6")?;
        let sols = dimeq::e6_a1_solutions(&e6, catalog)?;
        let mut ok = sols[0].len() == 1 && sols[0][0].paper_string() == "(3^31)";
        ok &= sols[1].is_empty();
        ok &= sols[2].len() == 1 && sols[2][0].paper_string() == "(1^2|2^21)";
        ok &= sols[3].len() == 1 && sols[3][0].paper_string() == "(21|1^2|1^3)";
        let mut scan = dimeq::dual_integral_scan(&f4, catalog)?;
        scan.sort();
        ok &= scan
            == vec![("A1".to_string(), 5), ("At1".to_string(), 2), ("At2".to_string(), 5)];
        ok &= !liekit::orbits::poset_totally_ordered("C3", false)?;
        ok &= liekit::orbits::poset_totally_ordered("C3", true)?;
        ok &= !liekit::orbits::poset_totally_ordered("A5", false)?;
        for t in ["A1", "A2", "A3", "B3", "C2", "G2"] {
            ok &= liekit::orbits::poset_totally_ordered(t, false)?;
        }
        for label in ["A1", "At1", "At2", "A1+At1", "B2"] {
            ok &= coeffs::character_check(&f4, &nt, catalog.get("F4", label)?).is_ok();
        }
        b.check("analysis", ok, "E6 A1 rows, dual scan, posets, characters".into());
    }

    // 12. reduced-word independence over W(F4)
    {
        let mut ok = wg.len() == 1152;
        for i in 0..wg.len() {
            let e = &wg.elems[i];
            // every descent gives another reduced word; all must agree
            for g in 1..=4 {
                let s = f4.simple_reflection(g)?;
                let shorter = s.compose(e);
                if let Some(j) = wg.index_of(&shorter) {
                    if wg.lengths[j] + 1 == wg.lengths[i] {
                        ok &= s.compose(&wg.elems[j]) == *e;
                    }
                }
            }
            ok &= f4.elem_length(e) == wg.lengths[i];
        }
        b.check("weyl-group", ok, "1152 elements, reduced-word independence".into());
    }

    // 13. the Weil suite
    {
        let suite = weilrep::paper_identity_suite(&f4, &nt, 3, 7)?;
        let mut ok = suite.all_pass();
        ok &= weilrep::unitarity_check(&f4, &nt, 3, 7)? < weilrep::TOL;
        ok &= weilrep::gamma_square_class_check(3)?;
        if all {
            let suite5 = weilrep::paper_identity_suite(&f4, &nt, 5, 7)?;
            ok &= suite5.all_pass();
            ok &= weilrep::gamma_square_class_check(5)?;
        }
        b.check(
            "weil-suite",
            ok,
            if all { "p = 3 and p = 5, n = 7".into() } else { "p = 3, n = 7".to_string() },
        );
    }

    let ok = b.ok();
    for (name, pass, detail) in &b.items {
        ctx.say(&format!(
            "{} {:<22} {}",
            if *pass { "PASS" } else { "FAIL" },
            name,
            detail
        ));
    }
    let discrepancies = expected_discrepancies();
    ctx.say(&format!(
        "\n{} checks, {} passed; {} expected discrepancies:",
        b.items.len(),
        b.items.iter().filter(|(_, p, _)| *p).count(),
        discrepancies.len()
    ));
    for d in &discrepancies {
        ctx.say(&format!("  {}: paper `{}` vs computed `{}`", d.location, d.paper_value, d.computed_value));
    }
    let mut report = Report::new(
        "verify",
        json!({ "all": all }),
        json!({
            "checks": b
                .items
                .iter()
                .map(|(n, p, d)| json!({ "name": n, "pass": p, "detail": d }))
                .collect::<Vec<_>>(),
            "passed": b.items.iter().filter(|(_, p, _)| *p).count(),
            "total": b.items.len(),
        }),
    );
    report.discrepancies = discrepancies;
    Ok((report, ok))
}

fn adj_ref<'a>(adj: &'a AdjointGroup<'a>) -> &'a AdjointGroup<'a> {
    adj
}
