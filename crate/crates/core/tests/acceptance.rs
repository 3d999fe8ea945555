//! The five acceptance criteria, each printed as one PASS/FAIL line.

mod common;

use std::process::ExitCode;
use std::sync::Arc;

use flechains::bunch::{
    check_algebras_groups_algebras, check_decompose_derive, check_derive_decompose, check_groups_algebras_groups,
    derive_chain, groups_to_algebras, validate_bunch_algebras, validate_bunch_groups, verify_main_theorem,
};
use flechains::chain::{check_embedding, run_law_suite, run_law_suite_exhaustive};
use flechains::convert::{
    downshift, iota_group_to_chain, split, unsplit, upshift, PrefixSubgroup, SplitElem, Subgroup,
};
use flechains::oracle::{catalog, cross_check, SearchConfig};
use flechains::{Chain, FiniteChainTable, GroupElement, HomKind, Homomorphism, OrderedGroup, Parity, Report};

use common::{sampling, sugihara};

/// Outcome of one criterion: failures, each with a short explanation.
type Failures = Vec<String>;

type Criterion = (&'static str, fn() -> Failures);

fn require(failures: &mut Failures, what: &str, report: &Report) {
    if !report.passed() {
        failures.push(format!("{what}:\n{report}"));
    }
}

const CORE_LAWS: [&str; 4] = ["adjointness", "involutivity", "strict-bimonotonicity", "tau-of-terms"];

fn law_suite<C: Chain>(failures: &mut Failures, name: &str, c: &C) {
    let r = run_law_suite(c, &sampling());
    require(failures, name, &r);
    let singleton = c.elements().is_some_and(|all| all.len() == 1);
    for law in CORE_LAWS {
        match r.law(law) {
            Some(l) if l.checks > 0 && l.violations == 0 => {}
            Some(l) => failures.push(format!("{name}: {law} ran {} checks with {} violations", l.checks, l.violations)),
            None if singleton => {}
            None => failures.push(format!("{name}: {law} did not run")),
        }
    }
}

fn criterion_law_suite() -> Failures {
    let mut f = Failures::new();
    let z = iota_group_to_chain(&OrderedGroup::integers());
    law_suite(&mut f, "iota(Z)", &z);
    law_suite(&mut f, "iota(Z^2)", &iota_group_to_chain(&OrderedGroup::new(2)));
    law_suite(&mut f, "iota(Z) shifted down", &downshift(z.clone()).unwrap());
    law_suite(&mut f, "Sp(iota(Z), Z)", &split(z, PrefixSubgroup::new(1, 1).unwrap()).unwrap());
    let one = iota_group_to_chain(&OrderedGroup::trivial());
    law_suite(&mut f, "Sp(iota(1), 1)", &split(one, PrefixSubgroup::new(0, 0).unwrap()).unwrap());
    for xi in [Parity::Odd, Parity::EvenIdempotentFalsum] {
        for layers in 1..=3 {
            let d = derive_chain(groups_to_algebras(&sugihara(xi, layers)).unwrap()).unwrap();
            law_suite(&mut f, &format!("{xi} Sugihara |kappa|={layers}"), &d);
        }
    }
    f
}

fn criterion_round_trips() -> Failures {
    let mut f = Failures::new();
    let s = sampling();
    let id = |e: &GroupElement| e.clone();
    for rank in [1, 2] {
        let x = iota_group_to_chain(&OrderedGroup::new(rank));
        let up_down = upshift(downshift(x.clone()).unwrap()).unwrap();
        require(&mut f, &format!("upshift(downshift(iota(Z^{rank})))"), &check_embedding(&x, &up_down, id, id, &s));
        let y = downshift(x.clone()).unwrap();
        let down_up = downshift(upshift(y.clone()).unwrap()).unwrap();
        require(&mut f, &format!("downshift(upshift(iota(Z^{rank}) shifted))"), &check_embedding(&y, &down_up, id, id, &s));

        for prefix in 0..=rank {
            let h = PrefixSubgroup::new(rank, prefix).unwrap();
            let y = split(x.clone(), h).unwrap();
            let u = unsplit(y.clone()).unwrap();
            let what = format!("unsplit(Sp(iota(Z^{rank}), prefix {prefix}))");
            let back = check_embedding(&x, &u.chain, |g| SplitElem::Plain(g.clone()), |e| e.payload().clone(), &s);
            require(&mut f, &what, &back);
            let mut rng = s.rng(0x7375);
            for _ in 0..s.samples {
                let g = OrderedGroup::new(rank).sample(&mut rng, s.window);
                if u.subgroup.contains(&SplitElem::Plain(g.clone())) != h.contains(&g) {
                    f.push(format!("{what}: recovered subgroup disagrees at {g}"));
                    break;
                }
            }
            let resplit = split(u.chain.clone(), u.subgroup.clone()).unwrap();
            let again = check_embedding(
                &y,
                &resplit,
                |e| match e {
                    SplitElem::Dotted(a) => SplitElem::Dotted(SplitElem::Plain(a.clone())),
                    plain => SplitElem::Plain(plain.clone()),
                },
                |z| match z {
                    SplitElem::Plain(e) => e.clone(),
                    SplitElem::Dotted(e) => y.mul(e, &y.falsum()),
                },
                &s,
            );
            require(&mut f, &format!("Sp(unsplit(Sp(iota(Z^{rank}), prefix {prefix})))"), &again);
        }
    }
    for (name, g) in common::catalog() {
        require(&mut f, &format!("{name}: groups-algebras-groups"), &check_groups_algebras_groups(&g, &s));
        let a = groups_to_algebras(&g).unwrap();
        require(&mut f, &format!("{name}: algebras-groups-algebras"), &check_algebras_groups_algebras(&a, &s));
        require(&mut f, &format!("{name}: algebras-chain-algebras"), &check_decompose_derive(&a, &s));
        let chain = Arc::new(derive_chain(a).unwrap());
        require(&mut f, &format!("{name}: chain-algebras-chain"), &check_derive_decompose(chain, &s));
        require(&mut f, &format!("{name}: main theorem"), &verify_main_theorem(&g, &s));
    }
    f
}

fn criterion_oracle_counts() -> Failures {
    let mut f = Failures::new();
    let expected = |n: usize, p: Parity| match p {
        Parity::Odd if !n.is_multiple_of(2) => 1,
        Parity::EvenIdempotentFalsum if n.is_multiple_of(2) => 1,
        _ => 0,
    };
    for n in 1..=8 {
        let result = cross_check(&SearchConfig::new(n, None).unwrap());
        require(&mut f, &format!("cross check n={n}"), &result.report);
        for p in Parity::ALL {
            let found = result.tables.iter().filter(|t| flechains::chain::classify_parity(*t) == Ok(p)).count();
            let predicted = catalog(n, p).len();
            let want = expected(n, p);
            if found != want || predicted != want {
                f.push(format!("n={n} {p}: enumerated {found}, catalog {predicted}, expected {want}"));
            }
        }
        if result.report.law("round-trip").map_or(0, |l| l.checks) != result.tables.len() {
            f.push(format!("n={n}: not every table went through the round trip"));
        }
    }
    f
}

fn criterion_split_spot_checks() -> Failures {
    let mut f = Failures::new();
    let s = sampling();
    let boolean = split(iota_group_to_chain(&OrderedGroup::trivial()), PrefixSubgroup::new(0, 0).unwrap()).unwrap();
    let table = flechains::oracle::tabulate(&boolean).unwrap();
    let want = FiniteChainTable::new(vec![vec![0, 0], vec![0, 1]], 1, 0).unwrap();
    if table != want {
        f.push(format!("Sp(iota(1), 1) is\n{table}not the two-element Boolean chain"));
    }

    let z = iota_group_to_chain(&OrderedGroup::integers());
    let y = split(z, PrefixSubgroup::new(1, 1).unwrap()).unwrap();
    let dotted_unit = SplitElem::Dotted(GroupElement::from(0));
    let mut rng = s.rng(0x6231);
    for _ in 0..s.samples {
        let x = y.sample(&mut rng, s.window);
        let p = y.mul(&x, &y.complement(&x));
        if p != dotted_unit {
            f.push(format!("Sp(iota(Z), Z): {x} * {x}' = {p}, expected {dotted_unit}"));
            break;
        }
    }

    for (rank, prefix) in [(1, 1), (2, 1), (2, 0)] {
        let h = PrefixSubgroup::new(rank, prefix).unwrap();
        let y = split(iota_group_to_chain(&OrderedGroup::new(rank)), h).unwrap();
        let window = y.slice(s.window);
        let t = y.unit();
        let mut rng = s.rng(0x696e76 + rank as u64);
        for _ in 0..s.samples {
            let x = y.sample(&mut rng, s.window);
            let invertible = window.iter().any(|z| y.mul(&x, z) == t);
            let in_h = matches!(&x, SplitElem::Plain(g) if h.contains(g));
            if invertible != in_h {
                f.push(format!("Sp(iota(Z^{rank}), prefix {prefix}): {x} invertible = {invertible}, in H = {in_h}"));
                break;
            }
        }
    }
    f
}

fn criterion_mutation() -> Failures {
    let mut f = Failures::new();
    let s3 = common::s3();
    for x in 0..3 {
        for y in 0..3 {
            for v in (0..3).filter(|&v| v != s3.cell(x, y)) {
                let bad = s3.with_cell(x, y, v).unwrap();
                let caught = run_law_suite_exhaustive(&bad).is_some_and(|r| !r.passed());
                if !caught {
                    f.push(format!("setting cell ({x}, {y}) of S3 to {v} went unnoticed"));
                }
            }
        }
    }
    let adj = run_law_suite_exhaustive(&s3.with_cell(2, 2, 1).unwrap()).unwrap();
    if !adj.violated("adjointness") {
        f.push(format!("corrupting u*u in S3 should break adjointness:\n{adj}"));
    }

    let s = sampling();
    let mut g = common::bunch(
        "xi = O\nkappa = [t, u, v]\ngroup t = Z^1\nclass u = J\ngroup u = Z^2\nclass v = J\ngroup v = Z^1\n\
         hom t->u = matrix [[1],[0]]\nhom u->v = truncate 1\n",
    );
    require(&mut f, "unmutated group bunch", &validate_bunch_groups(&g, &s));
    let mut a = groups_to_algebras(&g).unwrap();
    require(&mut f, "unmutated algebra bunch", &validate_bunch_algebras(&a, &s));

    let z = OrderedGroup::integers();
    g.set_hom(0, 2, Homomorphism::new(z, z, HomKind::Matrix(vec![vec![2]])).unwrap()).unwrap();
    let r = validate_bunch_groups(&g, &s);
    if !r.violated("G1") {
        f.push(format!("doubling hom t->v should violate G1:\n{r}"));
    }
    a.set_hom(
        0,
        2,
        Arc::new(|x: &SplitElem<GroupElement>| {
            SplitElem::Plain(GroupElement::new(x.payload().coords().iter().map(|c| 2 * c).collect()))
        }),
    )
    .unwrap();
    let r = validate_bunch_algebras(&a, &s);
    if !r.violated("A1") {
        f.push(format!("doubling rho t->v should violate A1:\n{r}"));
    }
    f
}

fn main() -> ExitCode {
    let criteria: [Criterion; 5] = [
        ("law suite on catalog chains", criterion_law_suite),
        ("round trips", criterion_round_trips),
        ("oracle counts", criterion_oracle_counts),
        ("split theorem spot checks", criterion_split_spot_checks),
        ("mutation sensitivity", criterion_mutation),
    ];
    let results: Vec<Failures> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria.iter().map(|(_, run)| scope.spawn(run)).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| vec!["panicked".to_string()]))
            .collect()
    });
    let mut all_pass = true;
    for (i, ((name, _), failures)) in criteria.iter().zip(&results).enumerate() {
        if failures.is_empty() {
            println!("criterion {}: PASS {name}", i + 1);
        } else {
            all_pass = false;
            println!("criterion {}: FAIL {name} ({} problems)", i + 1, failures.len());
            for problem in failures {
                println!("    {}", problem.replace('\n', "\n    "));
            }
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
