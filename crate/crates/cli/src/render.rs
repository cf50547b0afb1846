use mullineux_core::{Partition, Weight};

/// `ε1 + ε2 + 2ε3`, or `0`.
pub fn eps_sum(w: &Weight) -> String {
    let mut out = String::new();
    for (k, &c) in w.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        let term = if mag == 1 { format!("ε{}", k + 1) } else { format!("{mag}ε{}", k + 1) };
        match (out.is_empty(), c < 0) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn partition(l: &Partition) -> String {
    format!("({l})")
}
