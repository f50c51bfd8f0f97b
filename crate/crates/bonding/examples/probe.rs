// timing probe: per-domino membership cost by size
use bonding::json;
use bonding::membership::is_generated;
use bonding::sticker::{compile, tau_r};
use std::time::Instant;

fn main() {
    let text = std::fs::read_to_string("data/sticker-chain.json").unwrap();
    let s = json::sticker_from_str(&text).unwrap();
    let g = compile(&s).unwrap();
    let mut generated: Vec<_> = s.generate(4).unwrap().into_iter().collect();
    generated.sort_by_key(|d| d.total_symbols());
    for d in &generated {
        let h = tau_r(d).unwrap();
        let breakable = h
            .edges()
            .filter(|(_, e)| g.bond_function().split(&e.label.name).is_some())
            .count();
        let t = Instant::now();
        let cert = is_generated(&g, &h).unwrap();
        println!(
            "symbols={:2} vertices={:2} breakable={:2} accepted={} {:?}",
            d.total_symbols(),
            h.vertex_count(),
            breakable,
            cert.is_some(),
            t.elapsed()
        );
        if t.elapsed().as_secs() > 20 {
            println!("stopping at the slow case");
            break;
        }
    }
}
