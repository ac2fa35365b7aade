//! Acceptance suite with its own harness: prints one `PASS`/`FAIL` line per
//! criterion and exits nonzero if any fails. Run it alone with
//! `cargo test -p qcurve-core --test acceptance`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use qcurve_core::combinatorics::{character_table, partitions_of, partitions_up_to};
use qcurve_core::hurwitz::{
    burnside_log, cutjoin_verify, elsv_genus0, elsv_genus0_count, hurwitz_numbers,
};
use qcurve_core::qcurve::{
    classical_curve, classical_limit, conifold_coefficient_direct_form,
    conifold_coefficient_inverse_form, conifold_mirror_curve, curve_operator, verify_annihilation,
    verify_annihilation_with, z_closed, z_from_characters, CurveCase, CurveMono, CurvePoly, Status,
    YDirection,
};
use qcurve_core::symfun::{quantum_dim, schur_in_p, SpecKind};
use qcurve_core::{LPoly, Mono, Partition, Rat, RatFun, Symbol};

fn framings() -> std::ops::RangeInclusive<i64> {
    -3..=3
}

fn finish(id: u32, what: &str, start: Instant, bound: Option<Duration>, ok: bool) -> bool {
    let elapsed = start.elapsed();
    let in_time = bound.is_none_or(|b| elapsed < b);
    let verdict = if ok && in_time { "PASS" } else { "FAIL" };
    let limit = bound.map_or(String::new(), |b| format!(" / limit {} ms", b.as_millis()));
    let late = if ok && !in_time {
        ", over time limit"
    } else {
        ""
    };
    println!(
        "criterion {id:>2} {verdict}: {what} ({} ms{limit}{late})",
        elapsed.as_millis()
    );
    ok && in_time
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn fact(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

// Oracles built directly from hooks and contents, independent of the library's
// partition invariants.

fn contents(nu: &[usize]) -> Vec<i64> {
    nu.iter()
        .enumerate()
        .flat_map(|(i, &row)| (0..row).map(move |j| j as i64 - i as i64))
        .collect()
}

fn kappa_oracle(nu: &[usize]) -> i64 {
    2 * contents(nu).iter().sum::<i64>()
}

/// `H_{0,mu} = r!/|Aut mu| * d^{l-3} * prod mu_i^{mu_i}/mu_i!`, `r = d + l - 2`.
fn genus0_count_oracle(mu: &[usize]) -> Rat {
    let d = mu.iter().sum::<usize>() as i64;
    let l = mu.len() as i64;
    let r = (d + l - 2) as u64;
    let mut aut = BigInt::one();
    let mut i = 0;
    while i < mu.len() {
        let k = mu[i..].iter().take_while(|&&p| p == mu[i]).count();
        aut *= fact(k as u64);
        i += k;
    }
    let mut value = Rat::new(fact(r), aut) * Rat::from_integer(BigInt::from(d).pow((l - 3) as u32));
    for &m in mu {
        value *= Rat::new(BigInt::from(m).pow(m as u32), fact(m as u64));
    }
    value
}

/// `u^{n(n-1)/2} / prod_{j<=n} (u^j - u^{-j})`
fn row_qrho_oracle(n: i32) -> RatFun {
    let num = LPoly::var(Symbol::U, n * (n - 1) / 2);
    let den = (1..=n).fold(LPoly::one(), |acc, j| {
        &acc * &(&LPoly::var(Symbol::U, j) - &LPoly::var(Symbol::U, -j))
    });
    RatFun::new(num, den).unwrap()
}

fn criterion_01_lambert_annihilation() -> bool {
    let start = Instant::now();
    let r = verify_annihilation(CurveCase::Lambert, 12);
    let ok = r.status == Status::Annihilated && r.order == 12 && r.first_failure.is_none();
    finish(
        1,
        "lambert operator annihilates Z through x^12",
        start,
        secs(1),
        ok,
    )
}

fn criterion_02_c3_annihilation() -> bool {
    let start = Instant::now();
    let ok =
        framings().all(|a| verify_annihilation(CurveCase::C3 { framing: a }, 12).annihilated());
    finish(
        2,
        "framed C3 operator annihilates Z through x^12, a in -3..3",
        start,
        secs(5),
        ok,
    )
}

fn criterion_03_conifold_annihilation() -> bool {
    let start = Instant::now();
    let forward = framings()
        .all(|a| verify_annihilation(CurveCase::Conifold { framing: a }, 12).annihilated());
    let inverse_fails = framings().all(|a| {
        let r =
            verify_annihilation_with(CurveCase::Conifold { framing: a }, 12, YDirection::Inverse);
        r.status == Status::Failed && r.first_failure.is_some()
    });
    finish(
        3,
        "conifold operator annihilates Z through x^12, a in -3..3; inverse y-direction fails",
        start,
        secs(10),
        forward && inverse_fails,
    )
}

fn criterion_04_route_equivalence() -> bool {
    let start = Instant::now();
    let mut cases = vec![CurveCase::Lambert];
    for a in [-2, 0, 3] {
        cases.push(CurveCase::C3 { framing: a });
        cases.push(CurveCase::Conifold { framing: a });
    }
    let handles: Vec<_> = cases
        .into_iter()
        .map(|case| std::thread::spawn(move || z_from_characters(case, 8) == z_closed(case, 8)))
        .collect();
    let ok = handles.into_iter().all(|h| h.join().unwrap());
    finish(
        4,
        "character sums reproduce closed-form Z through x^8",
        start,
        secs(60),
        ok,
    )
}

fn criterion_05_cut_and_join() -> bool {
    let start = Instant::now();
    let pde = cutjoin_verify(6, 10);
    let pde_ok = pde.passed()
        && pde.degree_cap == 6
        && pde.lambda_order == 10
        && pde.coefficients_checked > 0;
    let eigen_ok = partitions_up_to(8).iter().all(|nu| {
        let s = schur_in_p(nu, 8).unwrap();
        let half_kappa = rat(kappa_oracle(nu.parts()), 2);
        s.cut_and_join() == s.scale_rat(&half_kappa)
    });
    finish(
        5,
        "d/dlam H = K H for |mu|<=6, lam-order<=10; K s_nu = kappa/2 s_nu for |nu|<=8",
        start,
        secs(30),
        pde_ok && eigen_ok,
    )
}

fn criterion_06_hurwitz_consistency() -> bool {
    let start = Instant::now();
    let table = hurwitz_numbers(6, 3);
    let log = burnside_log(6, 10);
    let mut ok = true;
    let mut checked = 0;
    for mu in partitions_up_to(6).iter().filter(|mu| mu.len() >= 3) {
        let count = genus0_count_oracle(mu.parts());
        ok &= table.get(0, mu) == Some(&count);
        ok &= elsv_genus0_count(mu).as_ref() == Ok(&count);
        // the raw log coefficient of lam^b p_mu is the closed form without b!
        let b = mu.size() + mu.len() - 2;
        let raw = log.coeff(mu).num().coeff(&Mono::var(Symbol::Lam, b as i32));
        ok &= elsv_genus0(mu).as_ref() == Ok(&raw);
        checked += 1;
    }
    ok &= checked == 14;
    let one = Partition::row(1);
    ok &= table.get(0, &one) == Some(&Rat::one());
    ok &= table.get(0, &Partition::row(2)) == Some(&rat(1, 2));
    for g in 1..=3 {
        ok &= table.get(g, &one) == Some(&Rat::zero());
    }
    finish(
        6,
        "Burnside H_{0,mu} matches genus-0 closed form; small values",
        start,
        secs(30),
        ok,
    )
}

fn criterion_07_specializations() -> bool {
    let start = Instant::now();
    let rows = (0..=10).all(|n| {
        let s = schur_in_p(&Partition::row(n), n).unwrap();
        s.specialize_value(SpecKind::QRho).unwrap() == row_qrho_oracle(n as i32)
    });
    let dims = partitions_up_to(6).iter().all(|mu| {
        let s = schur_in_p(mu, mu.size()).unwrap();
        s.specialize_value(SpecKind::ConifoldY).unwrap() == quantum_dim(mu)
    });
    finish(
        7,
        "s_(n)(q^rho) for n<=10; hook-content quantum dimension equals p_m(y) route for |mu|<=6",
        start,
        secs(30),
        rows && dims,
    )
}

fn criterion_08_characters() -> bool {
    let start = Instant::now();
    let mut ok = true;
    for n in 0..=8 {
        let (parts, table) = character_table(n);
        ok &= parts == partitions_of(n);
        let z: Vec<Rat> = parts
            .iter()
            .map(|mu| {
                let z = mu
                    .multiplicities()
                    .iter()
                    .fold(BigInt::one(), |acc, &(i, m)| {
                        acc * BigInt::from(i).pow(m as u32) * fact(m as u64)
                    });
                Rat::from_integer(z)
            })
            .collect();
        for (a, row_a) in table.iter().enumerate() {
            for (b, row_b) in table.iter().enumerate() {
                let inner: Rat = (0..parts.len())
                    .map(|k| Rat::from_integer(BigInt::from(row_a[k] * row_b[k])) / &z[k])
                    .sum();
                ok &= inner == if a == b { Rat::one() } else { Rat::zero() };
            }
            let collapse: Rat = (0..parts.len())
                .map(|k| Rat::from_integer(BigInt::from(row_a[k])) / &z[k])
                .sum();
            let trivial = parts[a] == Partition::row(n);
            ok &= collapse == if trivial { Rat::one() } else { Rat::zero() };
        }
    }
    finish(
        8,
        "row orthogonality and collapse identity for n<=8",
        start,
        secs(10),
        ok,
    )
}

fn criterion_09_conifold_coefficient_forms() -> bool {
    let start = Instant::now();
    let ok = framings().all(|a| {
        (0..=8).all(|n| {
            conifold_coefficient_inverse_form(a, n) == conifold_coefficient_direct_form(a, n)
        })
    });
    finish(
        9,
        "conifold coefficient inverse-power and cleared forms agree for n<=8",
        start,
        None,
        ok,
    )
}

fn criterion_10_classical_limits() -> bool {
    let start = Instant::now();
    let m = |x, y, exp_y, et| CurveMono { x, y, exp_y, et };
    let lambert = CurvePoly::from_terms([(1, m(0, 1, 0, 0)), (-1, m(1, 0, 1, 0))]);
    let mut ok = classical_limit(&curve_operator(CurveCase::Lambert)).unwrap() == lambert
        && classical_curve(CurveCase::Lambert) == lambert;
    for a in framings() {
        let c3 = CurvePoly::from_terms([
            (1, CurveMono::ONE),
            (-1, m(0, 1, 0, 0)),
            (-1, m(1, -a, 0, 0)),
        ]);
        let conifold = CurvePoly::from_terms([
            (1, CurveMono::ONE),
            (-1, m(0, 1, 0, 0)),
            (1, m(1, a + 1, 0, 0)),
            (-1, m(1, a, 0, 1)),
        ]);
        ok &= classical_limit(&curve_operator(CurveCase::C3 { framing: a })).unwrap() == c3;
        ok &= classical_limit(&curve_operator(CurveCase::Conifold { framing: a })).unwrap()
            == conifold;
        ok &= classical_curve(CurveCase::C3 { framing: a }) == c3;
        ok &= classical_curve(CurveCase::Conifold { framing: a }) == conifold;
        // x -> -x, a -> -a-1 relates the conifold curve to the framed mirror curve
        let mapped = classical_curve(CurveCase::Conifold { framing: -a - 1 }).negate_x();
        ok &= mapped == conifold_mirror_curve(a).neg();
    }
    finish(
        10,
        "operator symbols reduce to the classical curves",
        start,
        None,
        ok,
    )
}

fn main() {
    let criteria: [fn() -> bool; 10] = [
        criterion_01_lambert_annihilation,
        criterion_02_c3_annihilation,
        criterion_03_conifold_annihilation,
        criterion_04_route_equivalence,
        criterion_05_cut_and_join,
        criterion_06_hurwitz_consistency,
        criterion_07_specializations,
        criterion_08_characters,
        criterion_09_conifold_coefficient_forms,
        criterion_10_classical_limits,
    ];
    let mut failed = 0;
    for (i, criterion) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(criterion) {
            Ok(true) => {}
            Ok(false) => failed += 1,
            Err(_) => {
                println!("criterion {:>2} FAIL: panicked", i + 1);
                failed += 1;
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
