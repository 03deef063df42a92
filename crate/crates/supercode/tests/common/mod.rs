//! Shared golden data and check routines for the reference-code suites.
//!
//! Each check rebuilds a construction, compares it entry-for-entry against
//! the reference matrix, and verifies (or refutes, where documented) the
//! claimed combinatorial properties. Checks return Err with a description
//! instead of panicking so the acceptance suite can aggregate them.

use supercode::codebook::{code_stats, QaryCode};
use supercode::constructions::{
    binary_expand, circulant_matrix, pair_code, recurrent_homogeneous, shorten_rs,
    subset_incidence, three_row_disjunct, three_row_hash, CharMatrix,
};
use supercode::galois::Field;
use supercode::verify::{
    ks_strength, verify_property, witness_is_genuine, PropertyKind, PropertySpec, VerifyError,
    Witness,
};

pub fn qary(q: u32, rows: &[&str]) -> QaryCode {
    let rows: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    QaryCode::from_rows(q, &rows).unwrap()
}

pub fn holds(code: &QaryCode, kind: PropertyKind) -> Result<bool, String> {
    verify_property(code.into(), PropertySpec::new(kind))
        .map(|v| v.holds)
        .map_err(|e| format!("oracle error: {e}"))
}

fn expect(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// s-hash implies (s-1)-disjunct; s-disjunct implies s-separable implies
/// (s-1)-disjunct.
pub fn check_ordering_chain(code: &QaryCode, s: usize) -> Result<(), String> {
    if holds(code, PropertyKind::QaryHash { s })? {
        expect(
            holds(code, PropertyKind::QaryDisjunct { s: s - 1 })?,
            "hash without (s-1)-disjunct",
        )?;
    }
    if holds(code, PropertyKind::QaryDisjunct { s })? {
        expect(
            holds(code, PropertyKind::QarySeparable { s })?,
            "disjunct without separable",
        )?;
    }
    if holds(code, PropertyKind::QarySeparable { s })? {
        expect(
            holds(code, PropertyKind::QaryDisjunct { s: s - 1 })?,
            "separable without (s-1)-disjunct",
        )?;
    }
    Ok(())
}

pub fn check_full_pair_k3() -> Result<(), String> {
    let c = circulant_matrix(3, &[1, 1, 1]).map_err(|e| e.to_string())?;
    let code = pair_code(&c).map_err(|e| e.to_string())?;
    let want = qary(3, &["1 1 1 2 2 2 3 3 3", "1 2 3 1 2 3 1 2 3"]);
    expect(code == want, "full (3,3,2) pair code differs")?;
    expect(
        holds(&code, PropertyKind::QaryDisjunct { s: 1 })?,
        "not 1-disjunct",
    )
}

pub fn check_circulant_7_3() -> Result<(), String> {
    let c = circulant_matrix(7, &[1, 1, 0, 1, 0, 0, 0]).map_err(|e| e.to_string())?;
    let code = pair_code(&c).map_err(|e| e.to_string())?;
    let want = qary(
        7,
        &[
            "1 1 1 2 2 2 3 3 3 4 4 4 5 5 5 6 6 6 7 7 7",
            "1 2 4 2 3 5 3 4 6 4 5 7 1 5 6 2 6 7 1 3 7",
        ],
    );
    expect(code == want, "circulant (7,3) pair code differs")?;
    expect(holds(&code, PropertyKind::QaryHash { s: 2 })?, "not 2-hash")?;
    expect(
        holds(&code, PropertyKind::QarySeparable { s: 2 })?,
        "not 2-separable",
    )?;
    check_ordering_chain(&code, 2)?;
    let x = binary_expand(&code);
    let st = code_stats(&x);
    expect(
        (x.len(), x.size(), st.w_min, st.w_max, st.k_row) == (14, 21, 2, 2, 3),
        "expansion stats differ",
    )
}

pub fn check_recurrent_9_3_3() -> Result<(), String> {
    let base = pair_code(&circulant_matrix(3, &[1, 1, 1]).unwrap()).unwrap();
    let code = recurrent_homogeneous(&base).map_err(|e| e.to_string())?;
    let want = qary(
        9,
        &[
            "1 1 1 2 2 2 3 3 3 4 4 4 5 5 5 6 6 6 7 7 7 8 8 8 9 9 9",
            "1 2 3 1 2 3 1 2 3 4 5 6 4 5 6 4 5 6 7 8 9 7 8 9 7 8 9",
            "1 2 3 4 5 6 7 8 9 1 2 3 4 5 6 7 8 9 1 2 3 4 5 6 7 8 9",
        ],
    );
    expect(code == want, "recurrent (9,3,3) code differs")?;
    expect(
        holds(&code, PropertyKind::QaryHash { s: 3 })?
            && holds(&code, PropertyKind::QarySeparable { s: 3 })?,
        "(9,3,3) must be 3-hash and 3-separable",
    )?;
    expect(
        !holds(&code, PropertyKind::QaryDisjunct { s: 3 })?,
        "(9,3,3) must not be 3-disjunct",
    )
}

pub fn check_recurrent_16_4_3() -> Result<(), String> {
    let base = pair_code(&circulant_matrix(4, &[1, 1, 1, 1]).unwrap()).unwrap();
    let code = recurrent_homogeneous(&base).map_err(|e| e.to_string())?;
    expect(
        (code.rows(), code.size(), code.q()) == (3, 64, 16) && code.is_homogeneous(4),
        "(16,4,3) shape",
    )?;
    let first = qary(
        16,
        &[
            "1 1 1 1 2 2 2 2 3 3 3 3 4 4 4 4",
            "1 2 3 4 1 2 3 4 1 2 3 4 1 2 3 4",
            "1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16",
        ],
    );
    for u in 0..16 {
        expect(code.column(u) == first.column(u), "first group differs")?;
    }
    for m in 1..4usize {
        for l in 0..16usize {
            let u = 16 * m + l;
            let ok = code.get(0, u) == code.get(0, l) + 4 * m as u32
                && code.get(1, u) == code.get(1, l) + 4 * m as u32
                && code.get(2, u) == l as u32 + 1;
            expect(ok, "shift rule violated")?;
        }
    }
    expect(
        holds(&code, PropertyKind::QaryHash { s: 3 })?
            && holds(&code, PropertyKind::QarySeparable { s: 3 })?,
        "(16,4,3) must be 3-hash and 3-separable",
    )
}

pub fn check_three_row_6_4() -> Result<(), String> {
    let code = three_row_disjunct(6, 4).map_err(|e| e.to_string())?;
    let want = qary(
        6,
        &[
            "1 1 1 1 2 2 2 2 3 3 3 3 4 4 4 4 5 5 5 5 6 6 6 6",
            "1 2 3 4 5 6 1 2 3 4 5 6 1 2 3 4 5 6 1 2 3 4 5 6",
            "1 2 3 4 5 6 2 3 4 5 6 1 3 4 5 6 1 2 4 5 6 1 2 3",
        ],
    );
    expect(code == want, "three-row (6,4,3) code differs")?;
    expect(code.min_distance() == 2, "distance must be 2")?;
    expect(
        holds(&code, PropertyKind::QaryDisjunct { s: 2 })?,
        "not 2-disjunct",
    )?;
    check_ordering_chain(&code, 2)?;

    // documented negative witnesses, 0-based: {2,8,13} vs {2,7,13} share
    // coordinate sets; {1,2,7} collapses in every coordinate
    let v = verify_property(
        (&code).into(),
        PropertySpec::new(PropertyKind::QarySeparable { s: 3 }),
    )
    .map_err(|e| e.to_string())?;
    expect(!v.holds, "must not be 3-separable")?;
    expect(
        witness_is_genuine(
            (&code).into(),
            PropertyKind::QarySeparable { s: 3 },
            &v.witness.ok_or("missing witness")?,
        ),
        "returned separability witness does not re-check",
    )?;
    expect(
        witness_is_genuine(
            (&code).into(),
            PropertyKind::QarySeparable { s: 3 },
            &Witness::Collision {
                a: vec![1, 7, 12],
                b: vec![1, 6, 12],
            },
        ),
        "documented separability witness does not re-check",
    )?;
    let v = verify_property(
        (&code).into(),
        PropertySpec::new(PropertyKind::QaryHash { s: 3 }),
    )
    .map_err(|e| e.to_string())?;
    expect(!v.holds, "must not be 3-hash")?;
    expect(
        v.witness
            == Some(Witness::HashViolation {
                subset: vec![0, 1, 6],
            }),
        "hash witness differs from the documented one",
    )
}

pub fn check_char_matrix_6_4() -> Result<(), String> {
    let code = three_row_disjunct(6, 4).unwrap();
    let cm = CharMatrix::from_code(&code).map_err(|e| e.to_string())?;
    let want = CharMatrix::parse(
        "1 2 4 5 * *\n* 1 2 4 5 *\n* * 1 3 4 6\n6 * * 1 3 4\n5 6 * * 2 3\n3 5 6 * * 2\n",
    )
    .unwrap();
    expect(cm == want, "characteristic matrix differs")
}

pub fn check_hash_11_3() -> Result<(), String> {
    let code = three_row_hash(11, 3).map_err(|e| e.to_string())?;
    let want = qary(
        11,
        &[
            "1 1 1 2 2 2 3 3 3 4 4 4 5 5 5 6 6 6 7 7 7 8 8 8 9 9 9 10 10 10 11 11 11",
            "1 2 3 4 5 6 7 8 9 10 11 1 2 3 4 5 6 7 8 9 10 11 1 2 3 4 5 6 7 8 9 10 11",
            "1 2 3 4 5 6 7 8 9 10 11 4 5 6 7 8 9 10 11 1 2 3 7 8 9 10 11 1 2 3 4 5 6",
        ],
    );
    expect(code == want, "(11,3,3) hash code differs")?;
    let small = three_row_hash(9, 3).unwrap();
    expect(
        holds(&small, PropertyKind::QaryHash { s: 3 })?,
        "(9,3,3) not 3-hash",
    )
}

pub fn check_small_char_matrices() -> Result<(), String> {
    let cs = CharMatrix::parse("1 2 *\n* 1 3\n3 * 2\n")
        .unwrap()
        .to_code();
    expect(
        holds(&cs, PropertyKind::QarySeparable { s: 3 })?
            && !holds(&cs, PropertyKind::QaryHash { s: 3 })?,
        "q=3 separable matrix misclassified",
    )?;
    let ch = CharMatrix::parse("* 3 1\n1 2 *\n3 * 2\n")
        .unwrap()
        .to_code();
    expect(
        holds(&ch, PropertyKind::QaryHash { s: 3 })?
            && !holds(&ch, PropertyKind::QarySeparable { s: 3 })?,
        "q=3 hash matrix misclassified",
    )?;
    let chs = CharMatrix::parse("1 * 3 *\n* 1 * 3\n4 * 2 *\n* 4 * 2\n")
        .unwrap()
        .to_code();
    expect(
        holds(&chs, PropertyKind::QaryHash { s: 3 })?
            && holds(&chs, PropertyKind::QarySeparable { s: 3 })?,
        "q=4 hash&separable matrix misclassified",
    )?;

    let ch63 = CharMatrix::parse(
        "* * 1 2 3 *\n* 1 * 5 * 3\n1 * * * 5 4\n* 2 5 * * 6\n2 * 4 * 6 *\n3 4 * 6 * *\n",
    )
    .unwrap()
    .to_code();
    expect(
        holds(&ch63, PropertyKind::QaryHash { s: 3 })?
            && !holds(&ch63, PropertyKind::QarySeparable { s: 3 })?,
        "(6,3) hash matrix misclassified",
    )?;
    let chs73 = CharMatrix::parse(
        "* * 1 2 3 * *\n* 1 * 5 7 * *\n1 * * * * 7 3\n* 2 * * * 5 4\n\
         2 * 7 * * * 6\n* 3 * 4 * 6 *\n5 * 4 * 6 * *\n",
    )
    .unwrap()
    .to_code();
    expect(
        holds(&chs73, PropertyKind::QaryHash { s: 3 })?
            && holds(&chs73, PropertyKind::QarySeparable { s: 3 })?,
        "(7,3) hash&separable matrix misclassified",
    )
}

pub fn check_shipped_char_matrices() -> Result<(), String> {
    let ch84 =
        CharMatrix::parse(include_str!("../../data/ch_8_4.txt")).map_err(|e| e.to_string())?;
    expect((ch84.q(), ch84.k()) == (8, 4), "(8,4) matrix shape")?;
    let code = ch84.to_code();
    expect(
        holds(&code, PropertyKind::QaryHash { s: 3 })?
            && !holds(&code, PropertyKind::QarySeparable { s: 3 })?,
        "(8,4) hash matrix misclassified",
    )?;
    let chs134 =
        CharMatrix::parse(include_str!("../../data/chs_13_4.txt")).map_err(|e| e.to_string())?;
    expect((chs134.q(), chs134.k()) == (13, 4), "(13,4) matrix shape")?;
    let code = chs134.to_code();
    expect(
        holds(&code, PropertyKind::QaryHash { s: 3 })?
            && holds(&code, PropertyKind::QarySeparable { s: 3 })?,
        "(13,4) hash&separable matrix misclassified",
    )
}

pub fn check_hash_product() -> Result<(), String> {
    let ch = CharMatrix::parse("* 1 2\n1 * 3\n2 3 *\n").unwrap();
    let prod = ch.product(&ch).map_err(|e| e.to_string())?;
    let want = CharMatrix::parse(
        "* * * * 1 2 * 4 5\n* * * 1 * 3 4 * 6\n* * * 2 3 * 5 6 *\n\
         * 1 2 * * * * 7 8\n1 * 3 * * * 7 * 9\n2 3 * * * * 8 9 *\n\
         * 4 5 * 7 8 * * *\n4 * 6 7 * 9 * * *\n5 6 * 8 9 * * * *\n",
    )
    .unwrap();
    expect(prod == want, "hash product matrix differs")?;
    expect(
        holds(&prod.to_code(), PropertyKind::QaryHash { s: 3 })?,
        "hash product lost the hash property",
    )
}

pub fn check_separable_product_fails() -> Result<(), String> {
    let cs = CharMatrix::parse("1 2 *\n* 1 3\n3 * 2\n").unwrap();
    let prod = cs.product(&cs).map_err(|e| e.to_string())?;
    let want = CharMatrix::parse(
        "1 2 * 4 5 * * * *\n* 1 3 * 4 6 * * *\n3 * 2 6 * 5 * * *\n\
         * * * 1 2 * 7 8 *\n* * * * 1 3 * 7 9\n* * * 3 * 2 9 * 8\n\
         7 8 * * * * 4 5 *\n* 7 9 * * * * 4 6\n9 * 8 * * * 6 * 5\n",
    )
    .unwrap();
    expect(prod == want, "separable product matrix differs")?;
    let code = prod.to_code();
    let v = verify_property(
        (&code).into(),
        PropertySpec::new(PropertyKind::QarySeparable { s: 3 }),
    )
    .map_err(|e| e.to_string())?;
    expect(!v.holds, "separable product must fail 3-separability")?;
    expect(
        witness_is_genuine(
            (&code).into(),
            PropertyKind::QarySeparable { s: 3 },
            &v.witness.ok_or("missing witness")?,
        ),
        "separability witness does not re-check",
    )?;
    // the three marked bad-triple pairs
    let find = |a: u32, i: u32, j: u32| -> Result<usize, String> {
        (0..code.size())
            .find(|&u| code.column(u) == [a, i, j])
            .ok_or(format!("codeword ({a},{i},{j}) missing"))
    };
    let marked = [
        (
            [(1, 4, 4), (2, 1, 2), (4, 2, 5)],
            [(1, 2, 2), (2, 4, 5), (4, 1, 4)],
        ),
        (
            [(4, 8, 8), (7, 4, 7), (8, 7, 2)],
            [(4, 7, 7), (7, 8, 2), (8, 4, 8)],
        ),
        (
            [(6, 8, 9), (8, 9, 3), (9, 6, 7)],
            [(6, 9, 7), (8, 6, 9), (9, 8, 3)],
        ),
    ];
    for (left, right) in marked {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for &(s, i, j) in &left {
            a.push(find(s, i, j)?);
        }
        for &(s, i, j) in &right {
            b.push(find(s, i, j)?);
        }
        a.sort_unstable();
        b.sort_unstable();
        expect(
            witness_is_genuine(
                (&code).into(),
                PropertyKind::QarySeparable { s: 3 },
                &Witness::Collision { a, b },
            ),
            "marked bad triple does not re-check",
        )?;
    }
    Ok(())
}

pub fn check_mixed_products() -> Result<(), String> {
    let cs = CharMatrix::parse("1 2 *\n* 1 3\n3 * 2\n").unwrap();
    let chs = CharMatrix::parse("1 * 3 *\n* 1 * 3\n4 * 2 *\n* 4 * 2\n").unwrap();
    let prod = cs.product(&chs).map_err(|e| e.to_string())?;
    let want = CharMatrix::parse(
        "1 * 3 * 5 * 7 * * * * *\n* 1 * 3 * 5 * 7 * * * *\n\
         4 * 2 * 8 * 6 * * * * *\n* 4 * 2 * 8 * 6 * * * *\n\
         * * * * 1 * 3 * 9 * 11 *\n* * * * * 1 * 3 * 9 * 11\n\
         * * * * 4 * 2 * 12 * 10 *\n* * * * * 4 * 2 * 12 * 10\n\
         9 * 11 * * * * * 5 * 7 *\n* 9 * 11 * * * * * 5 * 7\n\
         12 * 10 * * * * * 8 * 6 *\n* 12 * 10 * * * * * 8 * 6\n",
    )
    .unwrap();
    expect(prod == want, "mixed product matrix differs")?;
    expect(
        holds(&prod.to_code(), PropertyKind::QarySeparable { s: 3 })?,
        "mixed product must stay 3-separable",
    )?;
    let swapped = chs.product(&cs).map_err(|e| e.to_string())?;
    let want = CharMatrix::parse(
        "1 2 * * * * 7 8 * * * *\n* 1 3 * * * * 7 9 * * *\n\
         3 * 2 * * * 9 * 8 * * *\n* * * 1 2 * * * * 7 8 *\n\
         * * * * 1 3 * * * * 7 9\n* * * 3 * 2 * * * 9 * 8\n\
         10 11 * * * * 4 5 * * * *\n* 10 12 * * * * 4 6 * * *\n\
         12 * 11 * * * 6 * 5 * * *\n* * * 10 11 * * * * 4 5 *\n\
         * * * * 10 12 * * * * 4 6\n* * * 12 * 11 * * * 6 * 5\n",
    )
    .unwrap();
    expect(swapped == want, "swapped mixed product matrix differs")?;
    expect(
        holds(&swapped.to_code(), PropertyKind::QarySeparable { s: 3 })?,
        "swapped mixed product must stay 3-separable",
    )
}

/// Shortened-RS binary expansions pass the exhaustive disjunct oracle at
/// exactly the strength the KS condition promises (where the oracle fits
/// the default budget); the large published code exceeds the budget.
pub fn check_rs_oracle_battery() -> Result<(), String> {
    // (q0, k, r, expected ks strength)
    let cases: [(u32, u32, u32, usize); 6] = [
        (4, 3, 1, 3),
        (5, 4, 2, 3),
        (7, 6, 4, 3),
        (8, 7, 5, 3),
        (4, 3, 0, 2),
        (5, 3, 0, 2),
    ];
    for (q0, k, r, want) in cases {
        let f = Field::new(q0).map_err(|e| e.to_string())?;
        let rs = shorten_rs(&f, k, r).map_err(|e| e.to_string())?;
        let x = binary_expand(&rs.code);
        let ks = ks_strength(&x).map_err(|e| e.to_string())?;
        expect(
            ks.strength == want,
            &format!(
                "GF({q0}) k={k} r={r}: ks strength {} != {want}",
                ks.strength
            ),
        )?;
        let v = verify_property(
            (&x).into(),
            PropertySpec::new(PropertyKind::Superimposed {
                s: ks.strength,
                list: 1,
            }),
        )
        .map_err(|e| format!("GF({q0}) k={k} r={r}: {e}"))?;
        expect(v.holds, &format!("GF({q0}) k={k} r={r}: oracle refutes KS"))?;
    }
    // subset incidence with lambda = 1 behaves the same way
    let x = subset_incidence(6, 2, 1).map_err(|e| e.to_string())?;
    let ks = ks_strength(&x).map_err(|e| e.to_string())?;
    expect(ks.strength == 2, "subset incidence ks strength")?;
    let v = verify_property(
        (&x).into(),
        PropertySpec::new(PropertyKind::Superimposed { s: 2, list: 1 }),
    )
    .map_err(|e| e.to_string())?;
    expect(v.holds, "subset incidence oracle")?;

    // t = 1331 at s = 3 exceeds the default budget
    let f = Field::new(11).unwrap();
    let rs = shorten_rs(&f, 8, 5).unwrap();
    let x = binary_expand(&rs.code);
    match verify_property(
        (&x).into(),
        PropertySpec::new(PropertyKind::Superimposed { s: 3, list: 1 }),
    ) {
        Err(VerifyError::BudgetExceeded { .. }) => Ok(()),
        other => Err(format!("expected BudgetExceeded, got {other:?}")),
    }
}

pub type Check = (&'static str, fn() -> Result<(), String>);

/// Aggregated by the acceptance suite; the reference-code suite drives the
/// same checks as individual tests.
#[allow(dead_code)]
pub const ALL_CHECKS: &[Check] = &[
    ("full-pair-3-3", check_full_pair_k3),
    ("circulant-7-3", check_circulant_7_3),
    ("recurrent-9-3-3", check_recurrent_9_3_3),
    ("recurrent-16-4-3", check_recurrent_16_4_3),
    ("three-row-6-4", check_three_row_6_4),
    ("char-matrix-6-4", check_char_matrix_6_4),
    ("hash-11-3", check_hash_11_3),
    ("small-char-matrices", check_small_char_matrices),
    ("shipped-char-matrices", check_shipped_char_matrices),
    ("hash-product", check_hash_product),
    ("separable-product", check_separable_product_fails),
    ("mixed-products", check_mixed_products),
    ("rs-oracle-battery", check_rs_oracle_battery),
];
