use std::time::Instant;
use webcalc_core::suites::{run_suite, Bounds, SUITE_NAMES};

fn main() {
    let deep = std::env::args().any(|a| a == "--deep");
    let bounds = if deep { Bounds::deep() } else { Bounds::default() };
    for name in SUITE_NAMES {
        let start = Instant::now();
        let report = run_suite(name, &bounds, 1).unwrap();
        let fails: Vec<_> = report
            .instances
            .iter()
            .filter(|i| i.status != "pass")
            .collect();
        println!(
            "{name}: {} instances, pass={}, {:.1}s",
            report.instances.len(),
            report.pass,
            start.elapsed().as_secs_f64()
        );
        for f in fails.iter().take(5) {
            println!("   FAIL {} {} {}", f.instance, f.params, &f.detail[..f.detail.len().min(150)]);
        }
    }
}
