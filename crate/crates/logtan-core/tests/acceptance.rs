//! Acceptance battery: one numbered check per headline claim, printed as
//! a pass/fail line.  Every value is exact (integer/rational equality, no
//! tolerances); randomized constructions are seeded.
//!
//! Run with `cargo test --test acceptance -- --nocapture --test-threads=1`
//! to see the lines in order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use logtan_core::detsuite::{
    artinian_lefschetz_check, build_determinant, fiber_rank_check, propn2_check, resolution_check,
    restriction_vanishing, semigeneric_section, Flavor, SectionChoice,
};
use logtan_core::field::DEFAULT_PRIME;
use logtan_core::geom::cover_solutions;
use logtan_core::groebner::{
    buchberger_criterion_holds, groebner_basis, hilbert_function, quotient_dim_dense,
    GroebnerOptions,
};
use logtan_core::hypersurface::{stability_check, Criterion, Hypersurface, Verdict};
use logtan_core::module::{
    annihilates, euler_characteristic_matches, minimal_free_resolution, syzygies,
};
use logtan_core::poly::{graded_basis, MonomialOrder};
use logtan_core::quiver::{order_ideal_count, semistability_scan};
use logtan_core::{parse_polynomial, FieldSpec, Polynomial};

fn fp() -> FieldSpec {
    FieldSpec::Prime(DEFAULT_PRIME)
}

fn report(id: u32, name: &str, pass: bool) {
    println!(
        "criterion {id:2} [{}] {name}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id} failed: {name}");
}

#[test]
fn criterion_01_generic_determinant_resolutions() {
    let mut pass = true;
    for (n, ranks, twists) in [
        (2usize, [6usize, 4, 1], [-2i64, -3, -4]),
        (3, [16, 9, 1], [-3, -4, -6]),
    ] {
        let inst = build_determinant(n, Flavor::Generic, fp()).unwrap();
        let check = resolution_check(&inst).unwrap();
        pass &= check.matches;
        for (i, (&r, &t)) in ranks.iter().zip(twists.iter()).enumerate() {
            let e = &check.computed.entries[i];
            pass &= e.rank == r && e.twist == t;
        }
    }
    report(1, "generic determinant Betti tables (n = 2, 3)", pass);
}

#[test]
fn criterion_02_symmetric_determinant_resolutions() {
    let mut pass = true;
    for (n, gens, rels) in [(2usize, 3usize, 1usize), (3, 8, 3)] {
        let inst = build_determinant(n, Flavor::Symmetric, fp()).unwrap();
        let check = resolution_check(&inst).unwrap();
        pass &= check.matches;
        let e = &check.computed.entries;
        pass &= e[0].rank == gens && e[1].rank == rels && e[0].twist - e[1].twist == 1;
    }
    report(2, "symmetric determinant generator/relation tables (n = 2, 3)", pass);
}

#[test]
fn criterion_03_section_ideal_structure() {
    let mut pass = true;
    for n in [2usize, 3, 4] {
        let sec = semigeneric_section(n, 17, fp()).unwrap();
        let rep = propn2_check(&sec).unwrap();
        pass &= rep.equal && rep.containment;
    }
    let sec_q = semigeneric_section(3, 17, FieldSpec::Rationals).unwrap();
    let rep_q = propn2_check(&sec_q).unwrap();
    pass &= rep_q.equal && rep_q.containment;
    report(3, "section ideal equals x0*m^(n-2) + m^(n-1) (n = 2..4; n = 3 over Q)", pass);
}

#[test]
fn criterion_04_artinian_lefschetz() {
    let mut pass = true;
    for n in [3usize, 4, 5] {
        let inst = build_determinant(n, Flavor::Generic, fp()).unwrap();
        let sec = semigeneric_section(n, 17, fp()).unwrap();
        let rep = artinian_lefschetz_check(&inst, SectionChoice::Semigeneric(&sec)).unwrap();
        pass &= rep.iso && rep.dim_from == rep.expected_dim && rep.dim_to == rep.expected_dim;
    }
    for n in [3usize, 4] {
        let inst = build_determinant(n, Flavor::Generic, fp()).unwrap();
        let mut iso_count = 0;
        for seed in 0..10u64 {
            let rep = artinian_lefschetz_check(&inst, SectionChoice::Random { seed }).unwrap();
            if rep.iso {
                iso_count += 1;
            }
        }
        pass &= iso_count >= 9;
    }
    report(4, "quadratic Lefschetz on Artinian sections (semigeneric n = 3..5; random 9/10)", pass);
}

#[test]
fn criterion_05_symmetric_restriction_vanishing() {
    let mut pass = true;
    for n in [2usize, 3, 4, 5] {
        let inst = build_determinant(n, Flavor::Symmetric, fp()).unwrap();
        let rep = restriction_vanishing(&inst, 17).unwrap();
        pass &= rep.pass;
        // A_t = 0 for every computed t >= n-1.
        pass &= rep.hf.iter().skip(n - 1).all(|&v| v == 0);
    }
    report(5, "symmetric 3-variable reduction vanishes from degree n-1 (n = 2..5)", pass);
}

#[test]
fn criterion_06_quiver_semistability() {
    let mut pass = true;
    for n in 1..=10i64 {
        let rep = semistability_scan(n).unwrap();
        pass &= rep.strictly_stable && rep.min_mu > 0;
        pass &= rep.count == order_ideal_count(n) - 2;
    }
    report(6, "exhaustive quiver scans strictly stable with matching counts (n = 1..10)", pass);
}

#[test]
fn criterion_07_fiber_rank_stratification() {
    let mut pass = true;
    for n in [2usize, 3] {
        for k in 0..n {
            let rep = fiber_rank_check(n, k, 20, fp(), 17).unwrap();
            pass &= rep.pass;
            let expected = if k == 0 { 1 } else { k * k };
            pass &= rep.kernel_dims.iter().all(|&d| d == expected);
            if k >= 1 {
                pass &= rep.fiber_expected == Some(n * n + k * k - 2)
                    && rep
                        .fiber_dims
                        .as_ref()
                        .map(|ds| ds.iter().all(|&d| d == n * n + k * k - 2))
                        .unwrap_or(false);
            }
        }
    }
    report(7, "fiber kernel dimensions over each rank stratum (n = 2, 3; 20 trials)", pass);
}

#[test]
fn criterion_08_cover_arithmetic() {
    let mut pass = true;
    for n in 3..=20i64 {
        let set = cover_solutions(n).unwrap();
        let nontrivial: Vec<(i64, i64)> = set
            .solutions
            .iter()
            .filter(|s| s.nontrivial)
            .map(|s| (s.x, s.y))
            .collect();
        pass &= nontrivial == vec![(-1, n - 1), (1, 0)];
    }
    report(8, "double-cover class system has exactly the two nontrivial solutions (n = 3..20)", pass);
}

#[test]
fn criterion_09_stability_regression() {
    let field = fp();
    let mut pass = true;

    let fermat = parse_polynomial("x0^5 + x1^5 + x2^5 + x3^5", 4, field).unwrap();
    let rep = stability_check(&Hypersurface::new(fermat).unwrap()).unwrap();
    pass &= rep.verdict == Verdict::SmoothClassical;

    let quartic = parse_polynomial("x0*x1^3 + x2^4 + x3^4", 4, field).unwrap();
    let rep = stability_check(&Hypersurface::new(quartic).unwrap()).unwrap();
    pass &= rep.r == Some(1) && rep.verdict == Verdict::Inconclusive;

    let cone = parse_polynomial("x0^2 + x1^2", 4, field).unwrap();
    let rep = stability_check(&Hypersurface::new(cone).unwrap()).unwrap();
    pass &= rep.verdict == Verdict::NotSemistable;

    let nodal = parse_polynomial(
        "x0^2*x3 + x1^2*x3 + x2^2*x3 + x0^3 + 2*x1^3 + 3*x2^3 + x0*x1*x2",
        4,
        field,
    )
    .unwrap();
    let rep = stability_check(&Hypersurface::new(nodal).unwrap()).unwrap();
    pass &= rep.verdict == Verdict::SlopeStable
        && rep.criterion == Some(Criterion::TheoremC)
        && rep.q == Some(0)
        && rep.sing_deg == Some(1)
        && rep.bound == Some(8);

    report(9, "stability verdict corpus (smooth, r = 1, cone, 1-nodal cubic)", pass);
}

/// Random homogeneous ideal: 2-4 generators of degree 1..=3 in up to 4
/// variables.
fn random_ideal(rng: &mut ChaCha20Rng, field: FieldSpec) -> Vec<Polynomial> {
    let nv = rng.gen_range(2..=4usize);
    let count = rng.gen_range(2..=4usize);
    let mut gens = Vec::new();
    while gens.len() < count {
        let d = rng.gen_range(1..=3u32);
        let mut f = Polynomial::zero(field, nv);
        for m in graded_basis(nv, d) {
            if rng.gen_bool(0.5) {
                f.add_term(m, field.random(rng));
            }
        }
        if !f.is_zero() {
            gens.push(f);
        }
    }
    gens
}

#[test]
fn criterion_10_engine_property_battery() {
    let field = fp();
    let mut pass = true;

    // Corpus instances: jacobian ideals of the worked hypersurfaces and
    // the determinant instances used above.
    let mut corpus: Vec<Vec<Polynomial>> = Vec::new();
    for text in [
        "x0^5 + x1^5 + x2^5 + x3^5",
        "x0*x1^3 + x2^4 + x3^4",
        "x0^2*x3 + x1^2*x3 + x2^2*x3 + x0^3 + 2*x1^3 + 3*x2^3 + x0*x1*x2",
    ] {
        let f = parse_polynomial(text, 4, field).unwrap();
        corpus.push(Hypersurface::new(f).unwrap().jacobian_gens());
    }
    for n in [2usize, 3] {
        for flavor in [Flavor::Generic, Flavor::Symmetric] {
            corpus.push(build_determinant(n, flavor, field).unwrap().jacobian_gens());
        }
    }
    let mut rng = ChaCha20Rng::seed_from_u64(17);
    for _ in 0..100 {
        corpus.push(random_ideal(&mut rng, field));
    }

    for (idx, gens) in corpus.iter().enumerate() {
        // Buchberger criterion on the reduced basis.
        let gb = groebner_basis(gens, MonomialOrder::Grevlex, GroebnerOptions::default()).unwrap();
        pass &= buchberger_criterion_holds(&gb);

        // Syzygies annihilate the generators.
        let syz = syzygies(gens).unwrap();
        pass &= annihilates(&syz, gens);

        // Minimal free resolution: complex, minimal, Euler-consistent.
        if !gb.is_unit_ideal() {
            let res = minimal_free_resolution(gens, 8).unwrap();
            pass &= res.is_complex() && res.is_minimal();
            pass &= euler_characteristic_matches(&res, gens, 6).unwrap();
        }

        // Hilbert function two ways: combinatorial numerator vs dense
        // linear algebra.
        let hf = hilbert_function(gens, 5).unwrap();
        for t in 0..=5u32 {
            let dense = quotient_dim_dense(gens, t);
            pass &= hf.values[t as usize] == dense as u64;
        }

        assert!(pass, "engine property failed on corpus instance {idx}");
    }

    report(10, "engine properties on the corpus plus 100 random ideals", pass);
}
