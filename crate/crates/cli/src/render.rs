//! Plain-text rendering of the structured reports.

use latcov::harness::VerificationReport;
use latcov::io::SubspaceRecord;
use latcov::lattice::Restriction;
use latcov::solver::CoverResult;
use latcov::subspace::Subspace;

pub fn subspace_line(s: &Subspace) -> String {
    let rec = SubspaceRecord::from(s);
    let fixed: Vec<String> =
        rec.fixed_coords.iter().map(|(axis, v)| format!("x{axis}={v}")).collect();
    format!("free_axes={:?} fixed=[{}]", rec.free_axes, fixed.join(","))
}

pub fn print_cover_result(kind: &str, r: &CoverResult) {
    println!("solver: {kind}");
    println!("value: {}", r.value);
    println!(
        "stats: nodes={} greedy_upper={} lower_bound={} family={} reduced={}",
        r.stats.nodes,
        r.stats.greedy_upper,
        r.stats.lower_bound,
        r.stats.family_size,
        r.stats.reduced_family_size
    );
    println!("witness:");
    for s in r.witness.subspaces() {
        println!("  {}", subspace_line(s));
    }
}

pub fn print_restriction(r: &Restriction) {
    for (j, set) in r.axis_sets().iter().enumerate() {
        let vals: Vec<String> = set.iter().map(|v| v.to_string()).collect();
        println!("  X{}: {{{}}}", j + 1, vals.join(","));
    }
    println!("  induced_size: {}", r.induced().len());
}

pub fn print_verification_report(r: &VerificationReport) {
    let status = if r.passed() { "pass" } else { "FAIL" };
    println!(
        "suite {:<22} {}  instances={} violations={} runtime={:.2}s seed={}",
        r.suite,
        status,
        r.instances_checked,
        r.violations.len(),
        r.runtime_secs,
        r.seed
    );
    for v in &r.violations {
        println!("  violation: {} | {} | {}", v.relation, v.observed, v.instance);
    }
}
