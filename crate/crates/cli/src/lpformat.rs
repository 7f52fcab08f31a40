//! CPLEX LP text for an [`LpModel`]. Variable `x<v>` is vertex `v` (1-based), rows are named
//! `budget` and `clique<i>`.

use std::fmt::Write as _;
use std::io::{self, Write};

use mwbis_core::lp::{LpModel, RowKind};

fn linear(terms: impl Iterator<Item = (usize, f64)>) -> String {
    let mut s = String::new();
    for (i, (j, c)) in terms.enumerate() {
        let sign = if c < 0.0 { "-" } else { "+" };
        let var = j + 1;
        let abs = c.abs();
        if i == 0 {
            if c < 0.0 {
                s.push_str("- ");
            }
        } else {
            let _ = write!(s, " {sign} ");
        }
        if abs == 1.0 {
            let _ = write!(s, "x{var}");
        } else {
            let _ = write!(s, "{abs} x{var}");
        }
    }
    s
}

pub fn write_lp<W: Write + ?Sized>(out: &mut W, model: &LpModel, title: &str) -> io::Result<()> {
    writeln!(out, "\\ {title}")?;
    writeln!(out, "Maximize")?;
    let obj = linear(model.objective.iter().copied().enumerate());
    writeln!(out, " obj: {}", if obj.is_empty() { "0" } else { &obj })?;
    writeln!(out, "Subject To")?;
    let mut clique = 0;
    for row in model.rows.iter().filter(|r| !r.coeffs.is_empty()) {
        let name = match row.kind {
            RowKind::Budget => "budget".to_owned(),
            RowKind::Clique => {
                clique += 1;
                format!("clique{clique}")
            }
        };
        writeln!(
            out,
            " {name}: {} <= {}",
            linear(row.coeffs.iter().copied()),
            row.rhs
        )?;
    }
    writeln!(out, "Bounds")?;
    for j in 0..model.num_vars {
        writeln!(out, " x{} >= 0", j + 1)?;
    }
    writeln!(out, "End")
}

#[cfg(test)]
mod tests {
    use super::*;
    use mwbis_core::lp::{build_lp, DEFAULT_CLIQUE_CAP};
    use mwbis_core::{Graph, WeightedInstance};

    #[test]
    fn path_model() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let model = build_lp(&WeightedInstance::mivc(g, 2), DEFAULT_CLIQUE_CAP).unwrap();
        let mut buf = Vec::new();
        write_lp(&mut buf, &model, "P3").unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "\\ P3\nMaximize\n obj: x1 + 2 x2 + x3\nSubject To\n budget: x1 + x2 + x3 <= 2\n \
             clique1: x1 + x2 <= 1\n clique2: x2 + x3 <= 1\nBounds\n x1 >= 0\n x2 >= 0\n \
             x3 >= 0\nEnd\n"
        );
    }

    #[test]
    fn signs_and_fractions() {
        assert_eq!(
            linear([(0, -2.5), (3, 1.0), (4, -1.0)].into_iter()),
            "- 2.5 x1 + x4 - x5"
        );
    }
}
