//! Text and JSON renderings of a [`CorrelationReport`].

use std::fmt::Write;

use qcorr::{ConditionalTable, CorrelationReport, MeasurementOrder, PROB_EPS};

fn fixed(x: f64) -> String {
    // Avoid printing "-0.000000" for round-off below the display precision.
    let x = if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{x:.6}")
}

fn optional(x: Option<f64>) -> String {
    x.map_or_else(|| "UNDEFINED".to_string(), fixed)
}

fn vector(p: &[f64]) -> String {
    let parts: Vec<String> = p.iter().map(|&x| fixed(x)).collect();
    format!("({})", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn conditional_block(out: &mut String, title: &str, table: &ConditionalTable, from: char) {
    let _ = writeln!(out, "{title}:");
    for (i, row) in table.rows.iter().enumerate() {
        match row {
            Some(r) => {
                let _ = writeln!(out, "  {from}_{i}: {}", vector(r));
            }
            None => {
                let _ = writeln!(out, "  {from}_{i}: UNDEFINED");
            }
        }
    }
}

/// Support of each conditional row as `x_i -> y_j` arrows.
fn arrow_block(out: &mut String, title: &str, table: &ConditionalTable, from: char, to: char) {
    let _ = writeln!(out, "{title}:");
    for (i, row) in table.rows.iter().enumerate() {
        let Some(row) = row else { continue };
        for (j, &p) in row.iter().enumerate() {
            if p > PROB_EPS {
                if p >= qcorr::measurement::DETERMINISTIC_THRESHOLD {
                    let _ = writeln!(out, "  {from}_{i} -> {to}_{j}");
                } else {
                    let _ = writeln!(out, "  {from}_{i} -> {to}_{j}  [p = {}]", fixed(p));
                }
            }
        }
    }
}

pub fn render_text(r: &CorrelationReport) -> String {
    let mut out = String::new();
    let order = match r.order {
        MeasurementOrder::AFirst => "A first",
        MeasurementOrder::BFirst => "B first",
    };
    let _ = writeln!(
        out,
        "state: {}x{}, measurement order: {order}",
        r.dims.0, r.dims.1
    );
    if let Some(l) = &r.labels_a {
        let _ = writeln!(out, "labels A: {}", vector(l));
    }
    if let Some(l) = &r.labels_b {
        let _ = writeln!(out, "labels B: {}", vector(l));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "p(A) = {}", vector(&r.p_a));
    let _ = writeln!(out, "p(B) = {}", vector(&r.p_b));
    let _ = writeln!(out, "p(A,B):");
    for (i, row) in r.p_joint.iter().enumerate() {
        let _ = writeln!(out, "  a_{i}: {}", vector(row));
    }
    conditional_block(&mut out, "p(B|A)", &r.b_given_a, 'a');
    conditional_block(&mut out, "p(A|B)", &r.a_given_b, 'b');
    let _ = writeln!(out);
    let _ = writeln!(out, "H(A) = {}", fixed(r.h_a));
    let _ = writeln!(out, "H(B) = {}", fixed(r.h_b));
    let _ = writeln!(out, "H(B|A) = {}", fixed(r.h_b_given_a));
    let _ = writeln!(out, "H(A|B) = {}", fixed(r.h_a_given_b));
    let _ = writeln!(out, "I(A:B) = {}", fixed(r.mi_classical));
    let _ = writeln!(out, "S(A) = {}", fixed(r.s_a));
    let _ = writeln!(out, "S(B) = {}", fixed(r.s_b));
    let _ = writeln!(out, "S(AB) = {}", fixed(r.s_ab));
    let _ = writeln!(out, "I(rho) = {}", fixed(r.mi_quantum));
    let _ = writeln!(out);
    let _ = writeln!(out, "I/H(A) = {}", optional(r.ratio_a));
    let _ = writeln!(out, "I/H(B) = {}", optional(r.ratio_b));
    if r.marginals_identical {
        let _ = writeln!(out, "Cover-Thomas I/H = {}", optional(r.cover_thomas));
    } else {
        let _ = writeln!(out, "Cover-Thomas I/H = n/a (marginals differ)");
    }
    let _ = writeln!(out, "C(A,B) = {}", optional(r.c_measure));
    let flag = if r.non_classical_regime {
        "  [non-classical regime]"
    } else {
        ""
    };
    let _ = writeln!(out, "T(rho) = {}{flag}", optional(r.t_measure));
    let _ = writeln!(out);
    let _ = writeln!(out, "B = f(A): {}", yes_no(r.functional_b_of_a));
    let _ = writeln!(out, "A = f(B): {}", yes_no(r.functional_a_of_b));
    arrow_block(
        &mut out,
        "outcomes of A -> outcomes of B",
        &r.b_given_a,
        'a',
        'b',
    );
    arrow_block(
        &mut out,
        "outcomes of B -> outcomes of A",
        &r.a_given_b,
        'b',
        'a',
    );
    out
}

pub fn render_json(r: &CorrelationReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}
