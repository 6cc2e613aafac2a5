// Thin DIMACS front-end for the CaDiCaL library.
//
// Usage: qn-cadical <file.cnf>
// Exit codes follow the SAT-competition convention: 10 = SAT, 20 = UNSAT.
// On SAT the full model is printed as `v` lines.

use std::io::Read;

fn main() {
    let path = match std::env::args().nth(1) {
        Some(p) => p,
        None => {
            eprintln!("usage: qn-cadical <file.cnf>");
            std::process::exit(1);
        }
    };
    let mut text = String::new();
    if let Err(e) = std::fs::File::open(&path).and_then(|mut f| f.read_to_string(&mut text)) {
        eprintln!("qn-cadical: cannot read {}: {}", path, e);
        std::process::exit(1);
    }

    let mut solver: cadical::Solver = Default::default();
    let mut maxvar = 0i32;
    let mut clause: Vec<i32> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('p') {
            continue;
        }
        for tok in line.split_whitespace() {
            let lit: i32 = match tok.parse() {
                Ok(l) => l,
                Err(_) => {
                    eprintln!("qn-cadical: bad token '{}'", tok);
                    std::process::exit(1);
                }
            };
            if lit == 0 {
                solver.add_clause(clause.drain(..));
            } else {
                maxvar = maxvar.max(lit.abs());
                clause.push(lit);
            }
        }
    }
    if !clause.is_empty() {
        solver.add_clause(clause.drain(..));
    }

    match solver.solve() {
        Some(true) => {
            println!("s SATISFIABLE");
            let mut out = String::from("v");
            for v in 1..=maxvar {
                let val = solver.value(v).unwrap_or(false);
                out.push_str(&format!(" {}", if val { v } else { -v }));
                if out.len() > 200 {
                    println!("{}", out);
                    out = String::from("v");
                }
            }
            println!("{} 0", out);
            std::process::exit(10);
        }
        Some(false) => {
            println!("s UNSATISFIABLE");
            std::process::exit(20);
        }
        None => {
            println!("s UNKNOWN");
            std::process::exit(0);
        }
    }
}
