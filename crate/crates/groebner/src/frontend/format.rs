//! Canonical text output. Everything printed here re-parses to the same
//! system, so formatted bases can be fed back through the verifier.

use crate::algebra::{MonomialOrder, Polynomial};
use crate::frontend::SystemDescription;

/// One polynomial on one line: terms in decreasing order, coefficients as
/// canonical residues joined by `+`, explicit `*` and `^`. Zero prints as
/// `0`; unit coefficients are omitted except on the constant term.
pub fn format_polynomial(desc: &SystemDescription, p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let pieces: Vec<String> = p
        .terms()
        .iter()
        .map(|t| {
            let mono = format_monomial(desc, t.mono.exps());
            match (t.coeff.value(), mono) {
                (c, None) => c.to_string(),
                (1, Some(m)) => m,
                (c, Some(m)) => format!("{c}*{m}"),
            }
        })
        .collect();
    pieces.join(" + ")
}

fn format_monomial(desc: &SystemDescription, exps: &[u32]) -> Option<String> {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                desc.variables[i].clone()
            } else {
                format!("{}^{e}", desc.variables[i])
            }
        })
        .collect();
    if factors.is_empty() {
        None
    } else {
        Some(factors.join("*"))
    }
}

/// The full system text: the ring header followed by one polynomial per
/// line, sorted by ascending head monomial (zeros first), stable on ties.
pub fn format_basis(desc: &SystemDescription, basis: &[Polynomial]) -> String {
    let order_name = match desc.order {
        MonomialOrder::GrevLex => "grevlex",
        MonomialOrder::Lex => "lex",
    };
    let mut out = format!(
        "ring {} {} {}\n",
        desc.modulus,
        order_name,
        desc.variables.join(" ")
    );
    let mut sorted: Vec<&Polynomial> = basis.iter().collect();
    sorted.sort_by(|a, b| {
        desc.order
            .cmp0(&a.leading_monomial(), &b.leading_monomial())
    });
    for p in sorted {
        out.push_str(&format_polynomial(desc, p));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, MonomialOrder};
    use crate::frontend::parse_system;

    #[test]
    fn formats_canonical_residues() {
        // y^2 - x over F_7 prints the canonical residue 6.
        let desc = parse_system("ring 7 grevlex x y\ny^2 - x\n").unwrap();
        assert_eq!(format_polynomial(&desc, &desc.generators[0]), "y^2 + 6*x");
    }

    #[test]
    fn formats_zero_and_constants() {
        let desc = parse_system("ring 7 grevlex x\nx - x\n1\n3\n").unwrap();
        assert_eq!(format_polynomial(&desc, &desc.generators[0]), "0");
        assert_eq!(format_polynomial(&desc, &desc.generators[1]), "1");
        assert_eq!(format_polynomial(&desc, &desc.generators[2]), "3");
    }

    #[test]
    fn empty_basis_formats_to_just_the_header() {
        let desc = parse_system("ring 7 grevlex x\nx\n").unwrap();
        assert_eq!(format_basis(&desc, &[]), "ring 7 grevlex x\n");
    }

    #[test]
    fn basis_lines_are_sorted_by_ascending_head() {
        let desc = parse_system("ring 7 grevlex x y\nx^2\ny\nx*y\n").unwrap();
        let text = format_basis(&desc, &desc.generators);
        assert_eq!(text, "ring 7 grevlex x y\ny\nx*y\nx^2\n");
    }

    #[test]
    fn round_trip_is_identity() {
        let text = "ring 32003 lex x y z\nx^2*y + 31*z + 6\ny^5 + 2*x\nz\n";
        let desc = parse_system(text).unwrap();
        let printed = format_basis(&desc, &desc.generators);
        let reparsed = parse_system(&printed).unwrap();
        assert_eq!(reparsed.modulus, desc.modulus);
        assert_eq!(reparsed.variables, desc.variables);
        assert_eq!(reparsed.order, desc.order);
        // Same set of generators (format sorts ascending).
        for g in &desc.generators {
            assert!(reparsed.generators.contains(g));
        }
        assert_eq!(reparsed.generators.len(), desc.generators.len());
    }

    #[test]
    fn exponent_one_is_implicit() {
        let desc = parse_system("ring 7 grevlex x y\nx*y^2\n").unwrap();
        let ring = desc.ring().unwrap();
        let p = ring.polynomial(vec![(ring.field().one(), Monomial::from_exps(vec![1, 2]))]);
        assert_eq!(format_polynomial(&desc, &p), "x*y^2");
        assert_eq!(desc.order, MonomialOrder::GrevLex);
    }
}
