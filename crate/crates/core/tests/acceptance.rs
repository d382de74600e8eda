//! Acceptance suite: one PASS/FAIL line per criterion, with indented
//! sub-checks. Exits nonzero when any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use wedderburn::blocks::{BlockLabel, BlockSelector, Decomposition};
use wedderburn::chars::{
    idempotent_from_character, mn_character, sn_idempotent_from_character, AnCharacterTable, RowLabel, Sign,
};
use wedderburn::codes::{ideal_to_code, min_distance, weight_distribution, Distance, DistanceConfig, LinearCode};
use wedderburn::tableaux::{classify, factorial, partitions_of, standard_tableaux, Classification};
use wedderburn::{Algebra, Element, FieldSpec, Group, GroupKind, Permutation};

/// Sub-check log for one criterion.
#[derive(Default)]
struct Log {
    lines: Vec<String>,
    ok: bool,
}

impl Log {
    fn check(&mut self, what: impl Into<String>, ok: bool) -> bool {
        self.lines.push(format!("    {} {}", if ok { "ok  " } else { "FAIL" }, what.into()));
        self.ok &= ok;
        ok
    }

    fn note(&mut self, what: impl Into<String>) {
        self.lines.push(format!("    note {}", what.into()));
    }
}

struct Runner {
    failures: usize,
}

impl Runner {
    fn criterion(
        &mut self,
        number: u32,
        title: &str,
        budget: Option<Duration>,
        body: impl FnOnce(&mut Log) -> Result<(), String>,
    ) {
        let mut log = Log { lines: Vec::new(), ok: true };
        let start = Instant::now();
        if let Err(e) = body(&mut log) {
            log.check(format!("error: {e}"), false);
        }
        let elapsed = start.elapsed();
        if let Some(budget) = budget {
            log.check(format!("runtime {:.2?} within {:?}", elapsed, budget), elapsed <= budget);
        }
        println!("{} criterion {number:>2}: {title} ({elapsed:.2?})", if log.ok { "PASS" } else { "FAIL" });
        for line in &log.lines {
            println!("{line}");
        }
        if !log.ok {
            self.failures += 1;
        }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Parses sums such as `4() + 3(1,2,3)` or `2 + (1,2)(3,4)`; a bare number is a multiple of `()`.
fn parse_element(alg: &Algebra, text: &str) -> Result<Element, String> {
    let mut terms = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        let split = term.find('(').unwrap_or(term.len());
        let (coeff, perm) = term.split_at(split);
        let coeff: i64 = if coeff.trim().is_empty() { 1 } else { coeff.trim().parse().map_err(err)? };
        let perm = if perm.is_empty() { "()" } else { perm };
        terms.push((Permutation::parse_cycles(alg.degree(), perm).map_err(err)?, coeff));
    }
    alg.from_terms(&terms).map_err(err)
}

fn algebra(kind: GroupKind, n: usize, p: u64) -> Result<Algebra, String> {
    Algebra::new(kind, n, FieldSpec::prime(p).map_err(err)?).map_err(err)
}

fn decomposition(kind: GroupKind, n: usize, p: u64) -> Result<Decomposition, String> {
    Decomposition::compute(kind, n, FieldSpec::prime(p).map_err(err)?).map_err(err)
}

fn block_generator<'a>(dec: &'a Decomposition, selector: &str) -> Result<&'a Element, String> {
    let sel: BlockSelector = selector.parse().map_err(err)?;
    dec.select(&sel).map_err(err)?.generator.as_ref().ok_or_else(|| format!("{selector} has no prime-field idempotent"))
}

fn code_of(dec: &Decomposition, selector: &str) -> Result<LinearCode, String> {
    ideal_to_code(dec.algebra(), block_generator(dec, selector)?).map_err(err)
}

fn certified_params(code: &LinearCode) -> (usize, usize, Option<usize>) {
    (code.length(), code.dimension(), min_distance(code, &DistanceConfig::default()).certified())
}

fn same_row_space(code: &LinearCode, rows: &[Vec<u64>]) -> Result<bool, String> {
    let other = LinearCode::from_generators(rows.to_vec(), code.length(), code.p()).map_err(err)?;
    Ok(other.dimension() == code.dimension() && rows.iter().all(|r| code.contains(r)))
}

/// Coordinates regrouped so that each coset `gV` of the normal Klein
/// subgroup of `A_4` is contiguous: cosets by their least member, members
/// ascending. Returns the canonical index for each new position.
fn klein_coset_order(group: &Group) -> Vec<usize> {
    let klein: Vec<usize> =
        (0..group.order()).filter(|&i| group.element(i).cycle_type().parts() == [2, 2] || i == 0).collect();
    let mut seen = BTreeSet::new();
    let mut order = Vec::new();
    for g in 0..group.order() {
        if seen.contains(&g) {
            continue;
        }
        let mut coset: Vec<usize> = klein.iter().map(|&v| group.mul(g, v)).collect();
        coset.sort_unstable();
        seen.extend(coset.iter().copied());
        order.extend(coset);
    }
    order
}

/// The code with its coordinates permuted into `order`.
fn reorder(code: &LinearCode, order: &[usize]) -> Result<LinearCode, String> {
    let rows = code.generator().iter().map(|r| order.iter().map(|&i| r[i]).collect()).collect();
    LinearCode::from_generators(rows, code.length(), code.p()).map_err(err)
}

fn parse_rows(text: &str) -> Vec<Vec<u64>> {
    text.lines()
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .filter(|r: &Vec<u64>| !r.is_empty())
        .collect()
}

fn unordered_pair_matches(alg: &Algebra, ours: [&Element; 2], theirs: [&str; 2]) -> Result<bool, String> {
    let a = parse_element(alg, theirs[0])?;
    let b = parse_element(alg, theirs[1])?;
    Ok((ours[0] == &a && ours[1] == &b) || (ours[0] == &b && ours[1] == &a))
}

/// Minimum weight and weight distribution by plain enumeration of all
/// `q^k` messages with a matrix–vector product each.
fn naive_distance(code: &LinearCode) -> (usize, Vec<u64>) {
    let (k, p, n) = (code.dimension(), code.p(), code.length());
    let mut counts = vec![0u64; n + 1];
    let total = (p as u128).pow(k as u32);
    for m in 0..total {
        let mut x = m;
        let mut word = vec![0u64; n];
        for row in code.generator() {
            let c = (x % p as u128) as u64;
            x /= p as u128;
            for (w, g) in word.iter_mut().zip(row) {
                *w = (*w + c * g) % p;
            }
        }
        counts[word.iter().filter(|&&v| v != 0).count()] += 1;
    }
    let d = counts.iter().skip(1).position(|&c| c > 0).map_or(0, |w| w + 1);
    (d, counts)
}

fn main() -> ExitCode {
    let mut run = Runner { failures: 0 };
    let second = Some(Duration::from_secs(1));

    run.criterion(1, "F_5 S_3 golden idempotents", second, |log| {
        let s3 = algebra(GroupKind::Sn, 3, 5)?;
        let blocks = s3.sn_idempotent_set().map_err(err)?;
        let golden = [
            "()+(2,3)+(1,2)+(1,2,3)+(1,3,2)+(1,3)",
            "4() + 3(1,2,3) + 3(1,3,2)",
            "() + 4(2,3) + 4(1,2) + (1,2,3) + (1,3,2) + 4(1,3)",
        ];
        for (b, g) in blocks.iter().zip(golden) {
            log.check(format!("e_{} = {}", b.lambda, s3.format(&b.generator)), b.generator == parse_element(&s3, g)?);
            log.check(format!("e_{} is a class function", b.lambda), s3.is_class_function(&b.generator));
        }
        log.check("three blocks", blocks.len() == 3);
        Ok(())
    });

    run.criterion(2, "F_7 S_3 golden idempotents", second, |log| {
        let s3 = algebra(GroupKind::Sn, 3, 7)?;
        let blocks = s3.sn_idempotent_set().map_err(err)?;
        let golden = [
            "6() + 6(2,3) + 6(1,2) + 6(1,2,3) + 6(1,3,2) + 6(1,3)",
            "3() + 2(1,2,3) + 2(1,3,2)",
            "6() + (2,3) + (1,2) + 6(1,2,3) + 6(1,3,2) + (1,3)",
        ];
        for (b, g) in blocks.iter().zip(golden) {
            log.check(format!("e_{} = {}", b.lambda, s3.format(&b.generator)), b.generator == parse_element(&s3, g)?);
        }
        log.check("three blocks", blocks.len() == 3);
        Ok(())
    });

    run.criterion(3, "F_5 A_3 = F_5 ⊕ F_25, codes [3,1,3] and [3,2,2]", second, |log| {
        let dec = decomposition(GroupKind::An, 3, 5)?;
        log.check(format!("decomposition {}", dec.summary()), dec.summary() == "F_5 ⊕ F_25");
        let a3 = dec.algebra();
        let e1 = block_generator(&dec, "3")?;
        let e2 = block_generator(&dec, "2,1")?;
        log.check("e_1 = e_1^{S_3} + e_3^{S_3} on A_3", *e1 == parse_element(a3, "2() + 2(1,2,3) + 2(1,3,2)")?);
        log.check("e_2 = e_2^{S_3}", *e2 == parse_element(a3, "4() + 3(1,2,3) + 3(1,3,2)")?);
        let c1 = code_of(&dec, "3")?;
        let c2 = code_of(&dec, "2,1")?;
        log.check(format!("F_5A_3 e_1: {:?}", certified_params(&c1)), certified_params(&c1) == (3, 1, Some(3)));
        log.check(format!("F_5A_3 e_2: {:?}", certified_params(&c2)), certified_params(&c2) == (3, 2, Some(2)));
        log.check(
            "row space of [[1,0,4],[0,1,4]] in the order (), (1,2,3), (1,3,2)",
            same_row_space(&c2, &[vec![1, 0, 4], vec![0, 1, 4]])?,
        );
        Ok(())
    });

    run.criterion(4, "F_7 A_3 = F_7³, split pair, all codes [3,1,3]", second, |log| {
        let dec = decomposition(GroupKind::An, 3, 7)?;
        log.check(format!("decomposition {}", dec.summary()), dec.summary() == "F_7 ⊕ F_7 ⊕ F_7");
        let a3 = dec.algebra();
        let plus = block_generator(&dec, "2,1+")?;
        let minus = block_generator(&dec, "2,1-")?;
        log.check(
            format!("{{e_+, e_-}} = {{{}, {}}} equals {{e_2, e_3}} as a set", a3.format(plus), a3.format(minus)),
            unordered_pair_matches(a3, [plus, minus], ["5() + 6(1,2,3) + 3(1,3,2)", "5() + 3(1,2,3) + 6(1,3,2)"])?,
        );
        log.check(
            "e_1 = e_1^{S_3} + e_3^{S_3} on A_3",
            *block_generator(&dec, "3")? == parse_element(a3, "12() + 12(1,2,3) + 12(1,3,2)")?,
        );
        for b in dec.blocks() {
            let code = ideal_to_code(a3, b.generator.as_ref().unwrap()).map_err(err)?;
            let params = certified_params(&code);
            log.check(format!("{}: {params:?}", b.label), params == (3, 1, Some(3)));
        }
        Ok(())
    });

    run.criterion(5, "F_5 A_4 = F_5 ⊕ M_3(F_5) ⊕ F_25, idempotents and codes", Some(Duration::from_secs(10)), |log| {
        let dec = decomposition(GroupKind::An, 4, 5)?;
        log.check(format!("decomposition {}", dec.summary()), dec.summary() == "F_5 ⊕ M_3(F_5) ⊕ F_25");
        let a4 = dec.algebra();
        let golden = [
            ("4", "3 + 3(2,3,4) + 3(2,4,3) + 3(1,2)(3,4) + 3(1,2,3) + 3(1,2,4) + 3(1,3,2) + 3(1,3,4) + 3(1,3)(2,4) + 3(1,4,2) + 3(1,4,3) + 3(1,4)(2,3)"),
            ("3,1", "2 + (1,2)(3,4) + (1,3)(2,4) + (1,4)(2,3)"),
            ("2,2", "() + 2(2,3,4) + 2(2,4,3) + (1,2)(3,4) + 2(1,2,3) + 2(1,2,4) + 2(1,3,2) + 2(1,3,4) + (1,3)(2,4) + 2(1,4,2) + 2(1,4,3) + (1,4)(2,3)"),
        ];
        for (i, (sel, g)) in golden.iter().enumerate() {
            log.check(format!("e_{} ({sel}) matches", i + 1), *block_generator(&dec, sel)? == parse_element(a4, g)?);
        }
        let expected = [("4", (12, 1, Some(12))), ("3,1", (12, 9, Some(2))), ("2,2", (12, 2, Some(8)))];
        let mut codes = Vec::new();
        for (sel, want) in expected {
            let code = code_of(&dec, sel)?;
            let got = certified_params(&code);
            log.check(format!("block {sel}: [n,k,d] = {got:?}, certified"), got == want);
            codes.push(code);
        }
        log.note("the repetition code of e_1 is [12,1,12]; the printed \"[3,1,3]\" cannot have length |A_4| = 12");
        let order = klein_coset_order(a4.group());
        let m2 = parse_rows(
            "0 0 0 0 0 0 0 0 0 0 1 4\n0 0 0 0 0 0 0 0 0 1 0 4\n0 0 0 0 0 0 0 0 1 0 0 4\n\
             0 0 0 0 0 0 1 4 0 0 0 0\n0 0 0 0 0 1 0 4 0 0 0 0\n0 0 0 0 1 0 0 4 0 0 0 0\n\
             0 0 1 4 0 0 0 0 0 0 0 0\n0 1 0 4 0 0 0 0 0 0 0 0\n1 0 0 4 0 0 0 0 0 0 0 0",
        );
        let m3 = parse_rows("1 1 1 1 0 0 0 0 4 4 4 4\n0 0 0 0 1 1 1 1 4 4 4 4");
        log.check("M_2 row space equals block (3,1) in Klein-coset order", same_row_space(&reorder(&codes[1], &order)?, &m2)?);
        log.check("M_3 row space equals block (2,2) in Klein-coset order", same_row_space(&reorder(&codes[2], &order)?, &m3)?);
        Ok(())
    });

    run.criterion(6, "F_7 A_4 = F_7 ⊕ M_3(F_7) ⊕ F_7 ⊕ F_7, idempotents and the [12,9,2] code", Some(Duration::from_secs(60)), |log| {
        let dec = decomposition(GroupKind::An, 4, 7)?;
        log.check(format!("decomposition {}", dec.summary()), dec.summary() == "F_7 ⊕ M_3(F_7) ⊕ F_7 ⊕ F_7");
        let a4 = dec.algebra();
        log.check(
            "e_1 matches",
            *block_generator(&dec, "4")?
                == parse_element(a4, "3 + 3(2,3,4) + 3(2,4,3) + 3(1,2)(3,4) + 3(1,2,3) + 3(1,2,4) + 3(1,3,2) + 3(1,3,4) + 3(1,3)(2,4) + 3(1,4,2) + 3(1,4,3) + 3(1,4)(2,3)")?,
        );
        log.check("e_2 matches", *block_generator(&dec, "3,1")? == parse_element(a4, "6 + 5(1,2)(3,4) + 5(1,3)(2,4) + 5(1,4)(2,3)")?);
        log.check(
            "{e_3, e_4} matches the split pair of (2,2) as a set",
            unordered_pair_matches(
                a4,
                [block_generator(&dec, "2,2+")?, block_generator(&dec, "2,2-")?],
                [
                    "3 + 5(2,3,4) + 6(2,4,3) + 3(1,2)(3,4) + 6(1,2,3) + 5(1,2,4) + 5(1,3,2) + 6(1,3,4) + 3(1,3)(2,4) + 6(1,4,2) + 5(1,4,3) + 3(1,4)(2,3)",
                    "3 + 6(2,3,4) + 5(2,4,3) + 3(1,2)(3,4) + 5(1,2,3) + 6(1,2,4) + 6(1,3,2) + 5(1,3,4) + 3(1,3)(2,4) + 5(1,4,2) + 6(1,4,3) + 3(1,4)(2,3)",
                ],
            )?,
        );
        let code = code_of(&dec, "3,1")?;
        log.check(format!("7^9 = {} codewords within the default budget", code.size()), code.size() <= DistanceConfig::default().threshold as u128);
        let got = certified_params(&code);
        log.check(format!("block (3,1): [n,k,d] = {got:?}, certified"), got == (12, 9, Some(2)));
        let m = parse_rows(
            "0 0 0 0 0 0 0 0 0 0 1 6\n0 0 0 0 0 0 0 0 0 1 0 6\n0 0 0 0 0 0 0 0 1 0 0 6\n\
             0 0 0 0 0 0 1 6 0 0 0 0\n0 0 0 0 0 1 0 6 0 0 0 0\n0 0 0 0 1 0 0 6 0 0 0 0\n\
             0 0 1 6 0 0 0 0 0 0 0 0\n0 1 0 6 0 0 0 0 0 0 0 0\n1 0 0 6 0 0 0 0 0 0 0 0",
        );
        log.check(
            "printed generator matrix has the same row space in Klein-coset order",
            same_row_space(&reorder(&code, &klein_coset_order(a4.group()))?, &m)?,
        );
        for sel in ["4", "2,2+", "2,2-"] {
            let got = certified_params(&code_of(&dec, sel)?);
            log.check(format!("block {sel}: {got:?}"), got == (12, 1, Some(12)));
        }
        log.note("the one-dimensional blocks give [12,1,12] codes; the printed \"[4,1,4]\" cannot have length |A_4| = 12");
        Ok(())
    });

    run.criterion(
        7,
        "F_7 A_5: every one of the 5 central primitive idempotents is essential",
        Some(Duration::from_secs(300)),
        |log| {
            let dec = decomposition(GroupKind::An, 5, 7)?;
            let a5 = dec.algebra();
            let count = dec.blocks().len();
            log.check(
                format!("F_7A_5 has 5 centrally primitive idempotents (found {count}: {})", dec.summary()),
                count == 5,
            );
            let lambda: wedderburn::Partition = "3,1,1".parse().map_err(err)?;
            let data = lambda.self_conj_data().ok_or("(3,1,1) is self-conjugate")?;
            log.note(format!(
                "p_(3,1,1) = {} is {}a square mod 7, so (3,1,1) gives {}",
                data.p_lambda,
                if classify(&lambda, a5.field()) == Classification::SelfConjDelta { "" } else { "not " },
                dec.select(&"3,1,1".parse().map_err(err)?).map(|b| b.render(a5.field())).unwrap_or_default()
            ));
            let lattice_size = a5.group().all_subgroups().map_err(err)?.len();
            log.note(format!(
                "{} prime-order cyclic subgroups, {lattice_size} subgroups in the lattice",
                a5.group().prime_order_subgroups().len()
            ));
            for b in dec.blocks() {
                let e = b.generator.as_ref().ok_or("missing idempotent")?;
                let quick = a5.is_essential(e).map_err(err)?;
                let full = a5.is_essential_all_subgroups(e).map_err(err)?;
                log.check(
                    format!("{}: prime-order verdict agrees with the full lattice", b.label),
                    quick.essential == full.essential,
                );
                let witness = quick
                    .witness
                    .as_ref()
                    .map(|h| {
                        h.members().iter().map(|&i| a5.group().element(i).to_string()).collect::<Vec<_>>().join(" ")
                    })
                    .unwrap_or_default();
                log.check(
                    format!("{}: e·Ĉ = 0 for every prime-order C (witness of failure: {{{witness}}})", b.label),
                    quick.essential,
                );
                let kernel = a5.translation_kernel(e).order();
                let trivial = matches!(&b.label, BlockLabel::Gamma { lambda, .. } if lambda.len() == 1);
                log.note(format!(
                    "{}: g ↦ g·e has kernel of order {kernel} ({})",
                    b.label,
                    if trivial { "trivial block" } else { "injective, so faithful" }
                ));
            }
            log.note(
                "a block of dimension d > 1 restricted to an involution t has χ(t) > -d, so t fixes a vector and \
             e·Ĉ_2 ≠ 0; injectivity of g ↦ g·e, not e·Ĥ = 0, is what simplicity of A_5 guarantees",
            );
            Ok(())
        },
    );

    run.criterion(8, "structural suite over (5,3), (7,3), (5,4), (7,4), (7,5)", None, |log| {
        for kind in [GroupKind::Sn, GroupKind::An] {
            for (p, n) in [(5, 3), (7, 3), (5, 4), (7, 4), (7, 5)] {
                let dec = decomposition(kind, n, p)?;
                let alg = dec.algebra();
                let es: Vec<&Element> = dec.blocks().iter().map(|b| b.generator.as_ref().unwrap()).collect();
                let idem = es.iter().all(|e| alg.is_idempotent(e));
                let central = es.iter().all(|e| alg.is_central(e));
                let mut orthogonal = true;
                for (i, e) in es.iter().enumerate() {
                    for f in &es[i + 1..] {
                        orthogonal &= alg.mul(e, f).map_err(err)?.is_zero() && alg.mul(f, e).map_err(err)?.is_zero();
                    }
                }
                let mut sum = alg.zero();
                for e in &es {
                    sum = alg.add(&sum, e).map_err(err)?;
                }
                let dims_match = dec.blocks().iter().all(|b| {
                    let d = b.label.lambda().dimension() as usize;
                    let expected = match &b.label {
                        BlockLabel::Partition { .. } | BlockLabel::Gamma { .. } => d * d,
                        BlockLabel::SelfConj { .. } => d * d / 2,
                        BlockLabel::SelfConjSplit { .. } => d * d / 4,
                    };
                    alg.ideal_dimension(b.generator.as_ref().unwrap()) == expected && b.fq_dimension == expected
                });
                let total: usize = dec.blocks().iter().map(|b| b.fq_dimension).sum();
                log.check(
                    format!("F_{p}{kind}_{n}: idempotent {idem}, central {central}, orthogonal {orthogonal}, Σe = 1 {}, dims {dims_match}, Σ dims = {total} = |G|", sum == alg.one()),
                    idem && central && orthogonal && sum == alg.one() && dims_match && total == alg.order(),
                );
            }
        }
        Ok(())
    });

    run.criterion(9, "hook formula equals standard tableau count, Σ d_λ² = n! (n ≤ 7)", None, |log| {
        for n in 1..=7 {
            let parts = partitions_of(n);
            let hooks_ok = parts.iter().all(|l| standard_tableaux(l).len() as u128 == l.dimension());
            let sum: u128 = parts.iter().map(|l| l.dimension().pow(2)).sum();
            log.check(
                format!("n = {n}: {} partitions, d_λ = #SYT {hooks_ok}, Σ d² = {sum}", parts.len()),
                hooks_ok && sum == factorial(n),
            );
        }
        Ok(())
    });

    run.criterion(10, "character tables and character-formula idempotents", None, |log| {
        for n in 1..=6 {
            let parts = partitions_of(n);
            let sizes: Vec<i128> = parts.iter().map(|m| m.class_size() as i128).collect();
            let order = factorial(n) as i128;
            let table: Vec<Vec<i128>> =
                parts.iter().map(|l| parts.iter().map(|m| mn_character(l, m) as i128).collect()).collect();
            let first = table.iter().enumerate().all(|(i, a)| {
                table.iter().enumerate().all(|(j, b)| {
                    a.iter().zip(b).zip(&sizes).map(|((x, y), c)| c * x * y).sum::<i128>()
                        == if i == j { order } else { 0 }
                })
            });
            log.check(format!("S_{n}: first orthogonality of the Murnaghan–Nakayama table"), first);
        }
        for n in 3..=7 {
            let group = Group::new(GroupKind::An, n).map_err(err)?;
            let table = AnCharacterTable::new(&group).map_err(err)?;
            let mut sums_ok = true;
            for lambda in partitions_of(n).into_iter().filter(|l| l.is_self_conjugate()) {
                let plus = &table.rows
                    [table.row_index(&RowLabel::Split { lambda: lambda.clone(), sign: Sign::Plus }).unwrap()];
                let minus = &table.rows
                    [table.row_index(&RowLabel::Split { lambda: lambda.clone(), sign: Sign::Minus }).unwrap()];
                for (c, class) in table.classes.iter().enumerate() {
                    let (x, y) = (plus.values[c], minus.values[c]);
                    let restricted = mn_character(&lambda, &class.label.cycle_type);
                    sums_ok &= x.radicand == y.radicand
                        && x.sqrt2 + y.sqrt2 == 0
                        && x.rational2 + y.rational2 == 2 * restricted;
                }
            }
            log.check(
                format!("A_{n}: χ_λ+ + χ_λ- = χ_λ restricted; rows and columns orthogonal"),
                sums_ok && table.rows_orthonormal() && table.columns_orthogonal(),
            );
        }
        for (p, n) in [(5, 3), (7, 3), (5, 4), (7, 4), (7, 5), (7, 6), (11, 6)] {
            let sn = algebra(GroupKind::Sn, n, p)?;
            let sn_ok = partitions_of(n)
                .iter()
                .map(|l| {
                    Ok(sn.central_idempotent(l).map_err(err)? == sn_idempotent_from_character(&sn, l).map_err(err)?)
                })
                .collect::<Result<Vec<bool>, String>>()?
                .into_iter()
                .all(|b| b);
            let dec = decomposition(GroupKind::An, n, p)?;
            let an = dec.algebra();
            let table = AnCharacterTable::new(an.group()).map_err(err)?;
            let mut an_ok = true;
            for b in dec.blocks() {
                let e = b.generator.as_ref().unwrap();
                an_ok &= match &b.label {
                    BlockLabel::Gamma { lambda, conjugate } => {
                        let row = table
                            .row_index(&RowLabel::Paired { lambda: lambda.clone(), conjugate: conjugate.clone() })
                            .ok_or("missing paired row")?;
                        idempotent_from_character(an, &table, row).map_err(err)? == *e
                    }
                    BlockLabel::SelfConj { lambda } => {
                        // e_+ + e_- = (d_λ/n!) Σ_{g∈A_n} χ_λ(g) g, with χ_λ from the S_n table
                        let scalar = wedderburn::ffield::mul_mod(
                            (lambda.dimension() % p as u128) as u64,
                            wedderburn::ffield::inv_mod((factorial(n) % p as u128) as u64, p).map_err(err)?,
                            p,
                        );
                        let coeffs = an
                            .group()
                            .elements()
                            .iter()
                            .map(|g| {
                                wedderburn::ffield::mul_mod(
                                    scalar,
                                    wedderburn::ffield::reduce(mn_character(lambda, &g.cycle_type()), p),
                                    p,
                                )
                            })
                            .collect();
                        an.from_coeffs(coeffs) == *e
                    }
                    BlockLabel::SelfConjSplit { lambda, sign } => {
                        let other = if *sign == Sign::Plus { "-" } else { "+" };
                        let partner = block_generator(&dec, &format!("{lambda}{other}"))?;
                        let restricted =
                            sn.restrict_to_an(&sn.central_idempotent(lambda).map_err(err)?, an).map_err(err)?;
                        an.add(e, partner).map_err(err)? == restricted
                    }
                    BlockLabel::Partition { .. } => false,
                };
            }
            log.check(
                format!(
                    "p = {p}, n = {n}: character idempotents reproduce the Young-symmetrizer blocks of S_n and A_n"
                ),
                sn_ok && an_ok,
            );
        }
        Ok(())
    });

    run.criterion(11, "Gray-order scan agrees with naive enumeration (q^k ≤ 10^6)", None, |log| {
        let cases: [(u64, usize, &[&str]); 4] = [
            (5, 3, &["3", "2,1"]),
            (7, 3, &["3", "2,1+", "2,1-"]),
            (5, 4, &["4", "3,1", "2,2"]),
            (7, 4, &["4", "3,1", "2,2+", "2,2-"]),
        ];
        for (p, n, selectors) in cases {
            let dec = decomposition(GroupKind::An, n, p)?;
            for sel in selectors {
                let code = code_of(&dec, sel)?;
                if code.size() > 1_000_000 {
                    log.note(format!("F_{p}A_{n} block {sel}: {} codewords, skipped", code.size()));
                    continue;
                }
                let (naive_d, naive_wd) = naive_distance(&code);
                let gray = min_distance(&code, &DistanceConfig::default());
                let wd = weight_distribution(&code, 1_000_000).map_err(err)?;
                let agrees = matches!(gray, Distance::Certified { d, .. } if d == naive_d) && wd == naive_wd;
                log.check(format!("F_{p}A_{n} block {sel}: d = {naive_d}, weight distributions equal"), agrees);
            }
        }
        Ok(())
    });

    println!();
    if run.failures == 0 {
        println!("all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("{} of 11 criteria fail", run.failures);
        ExitCode::FAILURE
    }
}
