//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Counting oracles (Bell, Catalan, double factorial) are recomputed here
//! from their own recurrences rather than taken from the library.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pstat_core::series::{
    bell_cf_spec, bell_poly_enum, bell_poly_paths, cf_expand, f_poly, f_poly_direct, t_poly, t_poly_direct,
    touchard_L, touchard_l_enum,
};
use pstat_core::*;

type Check = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Bell numbers through Stirling numbers of the second kind.
fn bell_oracle(n: usize) -> u128 {
    let mut s = vec![vec![0u128; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = k as u128 * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    s[n].iter().sum()
}

/// C_{m+1} = Σ C_i C_{m-i}
fn catalan_oracle(n: usize) -> u128 {
    let mut c = vec![1u128];
    for m in 0..n {
        c.push((0..=m).map(|i| c[i] * c[m - i]).sum());
    }
    c[n]
}

fn odd_double_factorial(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

fn partitions(n: usize) -> impl Iterator<Item = SetPartition> {
    enumerate_partitions(n).expect("within default cap")
}

fn closing(pi: &SetPartition) -> Vec<usize> {
    let ty = pi.partition_type();
    (1..=pi.n()).filter(|&j| ty.role(j).closes()).collect()
}

fn worked_example() -> Check {
    let pi = parse_partition("{1,9,10}-{2,3,7}-{4}-{5,6,11}-{8}").map_err(|e| e.to_string())?;
    let t = StatTriple::of(&pi);
    check!((t.cr, t.ne, t.al) == (2, 5, 8), "stats {t:?}");
    let ty = pi.partition_type();
    check!(ty.openers() == [1, 2, 5], "O = {:?}", ty.openers());
    check!(ty.closers() == [7, 10, 11], "C = {:?}", ty.closers());
    check!(ty.singletons() == [4, 8], "S = {:?}", ty.singletons());
    check!(ty.transients() == [3, 6, 9], "T = {:?}", ty.transients());
    let image = phi(&pi);
    let expected = parse_partition("{1,3,10}-{2,6,9,11}-{4}-{5,7}-{8}").unwrap();
    check!(image == expected, "phi = {image}");
    check!(vacancy_count(&pi, 6) == Ok(3), "l_6 = {:?}", vacancy_count(&pi, 6));
    check!(gamma(&pi, 6) == Ok(3), "gamma_6 = {:?}", gamma(&pi, 6));
    Ok("cr=2 ne=5 al=8, type, phi, l_6=3, gamma_6=3".into())
}

fn involution_suite() -> Check {
    let mut total = 0u64;
    let mut endpoints = 0u64;
    for n in 0..=9 {
        for pi in partitions(n) {
            let image = phi(&pi);
            check!(phi(&image) == pi, "phi not an involution at {pi}");
            let ty = pi.partition_type();
            check!(image.partition_type() == ty, "type changed at {pi}");
            let (a, b) = (StatTriple::of(&pi), StatTriple::of(&image));
            check!(b == a.swapped(), "{pi}: {a:?} -> {b:?}");
            for j in closing(&pi) {
                let at = stats_at(&pi, j).unwrap();
                let l = vacancy_count(&pi, j).unwrap();
                let g = gamma(&pi, j).unwrap();
                check!(at.ne + 1 == g && at.cr + g == l, "{pi} at {j}: {at:?} l={l} gamma={g}");
                let later = (j..=n).filter(|&x| ty.role(x).opens()).count();
                check!(at.al == later, "{pi} at {j}: al_at={} expected {later}", at.al);
                check!(stats_at(&image, j).unwrap() == at.swapped(), "{pi} at {j}: refinement not swapped");
                endpoints += 1;
            }
            total += 1;
        }
    }
    check!(total == (0..=9).map(bell_oracle).sum::<u128>() as u64, "visited {total} partitions");
    Ok(format!("{total} partitions, {endpoints} closing endpoints"))
}

fn charlier_bijections() -> Check {
    let mut total = 0u64;
    for n in 0..=8 {
        let mut left = HashSet::new();
        let mut right = HashSet::new();
        for h in enumerate_charlier(n) {
            let w = h.path();
            let (l, r) = (phi_l(&h), phi_r(&h));
            check!(l.n() == n && r.n() == n, "{h}: wrong ground set");
            for pi in [&l, &r] {
                let c = count_stats(pi);
                let steps = (w.count(Step::Red), w.count(Step::Up), w.count(Step::Blue));
                check!((c.sg, c.bl, c.tr) == steps, "{h} -> {pi}: {c:?} vs steps {steps:?}");
            }
            check!(r == phi(&l), "{h}: phi_r != phi o phi_l");
            let heights = w.heights();
            for (idx, step) in w.steps().iter().enumerate() {
                if !step.has_choice() {
                    continue;
                }
                let (k, xi, j) = (heights[idx], h.xi()[idx], idx + 1);
                let (al, ar) = (stats_at(&l, j).unwrap(), stats_at(&r, j).unwrap());
                check!(al.ne == xi - 1 && ar.cr == xi - 1, "{h} at {j}: {al:?} {ar:?}");
                check!(al.cr == k - xi && ar.ne == k - xi, "{h} at {j}: {al:?} {ar:?}");
            }
            check!(left.insert(l), "phi_l not injective at {h}");
            check!(right.insert(r), "phi_r not injective at {h}");
            total += 1;
        }
        let bell = bell_oracle(n);
        check!(left.len() as u128 == bell && right.len() as u128 == bell, "n={n}: image sizes vs Bell {bell}");
    }
    Ok(format!("{total} Charlier diagrams"))
}

fn printed_tables() -> Check {
    let l_table = ["1", "1", "1+p+q", "1+2p+2q+2pq+p^2+q^2+2p^2q+2pq^2+p^3+q^3"];
    let t_table = ["1", "1", "2+q", "6+4q+4q^2+q^3"];
    for n in 0..=3 {
        let l = touchard_L(n);
        check!(l.to_text_by_weight() == l_table[n], "L_{n} = {}", l.to_text_by_weight());
        let t = t_poly(n).map_err(|e| e.to_string())?;
        check!(t.to_text_by_weight() == t_table[n], "T_{n} = {}", t.to_text_by_weight());
        check!(t.to_text() == t_table[n], "T_{n} = {}", t.to_text());
    }
    check!(
        touchard_L(3).to_text() == "1+2p+2q+p^2+2pq+q^2+p^3+2p^2q+2pq^2+q^3",
        "graded L_3 = {}",
        touchard_L(3).to_text()
    );
    for n in 0..=6 {
        let l = touchard_L(n);
        check!(l.eval([1; 5]) == odd_double_factorial(n).into(), "L_{n}(1,1) = {}", l.eval([1; 5]));
        check!(l == touchard_l_enum(n).map_err(|e| e.to_string())?, "L_{n} differs from enumeration");
    }
    let m6 = enumerate_matchings(12).map_err(|e| e.to_string())?.count();
    check!(m6 == 10395, "{m6} matchings of [12]");
    Ok("L_0..L_3, T_0..T_3 verbatim; L_n(1,1) and M_2n for n<=6".into())
}

fn three_routes() -> Check {
    let cf = cf_expand(&bell_cf_spec(), 8);
    for n in 0..=8 {
        let by_enum = bell_poly_enum(n).map_err(|e| e.to_string())?;
        let by_paths = bell_poly_paths(n).map_err(|e| e.to_string())?;
        check!(by_enum == by_paths, "n={n}: enumeration {by_enum} vs paths {by_paths}");
        check!(&by_enum == cf.coeff(n), "n={n}: enumeration {by_enum} vs CF {}", cf.coeff(n));
        check!(by_enum.eval([1; 5]) == bell_oracle(n).into(), "n={n}: B_n(1,..,1) != Bell");
    }
    Ok(format!("B_0..B_8, {} terms at n=8", cf.coeff(8).terms().count()))
}

fn catalan_structure() -> Check {
    for n in 0..=9 {
        let c = catalan_oracle(n);
        let (mut nc, mut nn) = (HashSet::new(), HashSet::new());
        for pi in partitions(n) {
            let t = StatTriple::of(&pi);
            if t.cr == 0 {
                nc.insert(pi.clone());
            }
            if t.ne == 0 {
                nn.insert(pi);
            }
        }
        check!(nc.len() as u128 == c && nn.len() as u128 == c, "n={n}: |NC|={} |NN|={} C={c}", nc.len(), nn.len());
        let (mut from_r, mut from_l) = (HashSet::new(), HashSet::new());
        for w in enumerate_rbm(n) {
            let h = CharlierDiagram::ones(w).map_err(|e| e.to_string())?;
            from_r.insert(phi_r(&h));
            from_l.insert(phi_l(&h));
        }
        check!(from_r == nc, "n={n}: phi_r(w,1) != NC");
        check!(from_l == nn, "n={n}: phi_l(w,1) != NN");
        let image: HashSet<SetPartition> = nc.iter().map(phi).collect();
        check!(image.len() == nc.len() && image == nn, "n={n}: phi(NC) != NN");
    }
    Ok(format!("C_9 = {}", catalan_oracle(9)))
}

fn type_symmetry() -> Check {
    let mut types = 0;
    for n in 0..=8 {
        let mut dist: HashMap<PartitionType, BTreeMap<StatTriple, u64>> = HashMap::new();
        for pi in partitions(n) {
            *dist.entry(pi.partition_type()).or_default().entry(StatTriple::of(&pi)).or_default() += 1;
        }
        for (ty, d) in &dist {
            for (t, c) in d {
                let m = d.get(&t.swapped()).copied().unwrap_or(0);
                check!(m == *c, "type {ty:?}: {t:?} x{c}, swapped x{m}");
            }
        }
        types += dist.len();
    }
    Ok(format!("{types} types"))
}

fn reversal_identities() -> Check {
    for n in 0..=8 {
        let (rev, direct) = (f_poly(n).map_err(|e| e.to_string())?, f_poly_direct(n).map_err(|e| e.to_string())?);
        check!(rev == direct, "F_{n}: {rev} vs {direct}");
    }
    for n in 0..=6 {
        let (rev, direct) = (t_poly(n).map_err(|e| e.to_string())?, t_poly_direct(n).map_err(|e| e.to_string())?);
        check!(rev == direct, "T_{n}: {rev} vs {direct}");
    }
    Ok("F_0..F_8, T_0..T_6".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Check); 8] = [
        ("worked example golden", 1, worked_example),
        ("involution suite, n<=9", 30, involution_suite),
        ("Charlier bijections, n<=8", 60, charlier_bijections),
        ("printed L_n and T_n tables", 30, printed_tables),
        ("three routes for B_n, n<=8", 60, three_routes),
        ("Catalan structure, n<=9", 30, catalan_structure),
        ("per-type symmetry, n<=8", 60, type_symmetry),
        ("E/F/T reversal identities", 30, reversal_identities),
    ];
    let mut failed = 0;
    for (idx, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        let line = match (&outcome, over) {
            (Ok(info), false) => format!("PASS  {}. {name} ({info}) [{took:.2?}]", idx + 1),
            (Ok(_), true) => format!("FAIL  {}. {name}: took {took:.2?}, limit {limit}s", idx + 1),
            (Err(e), _) => format!("FAIL  {}. {name}: {e} [{took:.2?}]", idx + 1),
        };
        if outcome.is_err() || over {
            failed += 1;
        }
        println!("{line}");
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
