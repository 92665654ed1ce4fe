//! Builds the Macaulay matrix of a few polynomials and prints it before and
//! after reduced row echelon form.
//!
//! ```text
//! cargo run --example echelon
//! ```

use msf4::cli::parse_problem;
use msf4::matrix::{MacaulayMatrix, RowKind};

fn main() -> msf4::Result<()> {
    let p = parse_problem("vars: x y z\nx*y + x + z\nx*y + y*z + 1\ny*z + x + y\nx + z + 1\n")?;
    let r = &p.ring;
    let m = MacaulayMatrix::from_polys(r, p.system.iter().map(|f| (f, RowKind::PairProduct)));
    let header: Vec<String> = m.columns.iter().map(|c| r.render_monomial(c)).collect();
    println!("columns: {}", header.join(" "));
    print_matrix(r, &m);
    println!();
    let e = m.row_echelon();
    print_matrix(r, &e);
    println!();
    for f in e.to_polys() {
        println!("{}", r.render(&f));
    }
    Ok(())
}

fn print_matrix(r: &msf4::Ring, m: &MacaulayMatrix) {
    for row in 0..m.nrows() {
        let line: String = (0..m.ncols())
            .map(|c| if m.rows[row].get(c) { '1' } else { '.' })
            .collect();
        println!("{line}   {}", r.render(&m.row_poly(row)));
    }
}
