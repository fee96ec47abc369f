//! Shared setup for the benchmarks.

use liekit::chevalley::StructureConstants;
use liekit::rootsys::RootSystem;

pub fn f4() -> (RootSystem, StructureConstants) {
    let sys = RootSystem::build("F4").expect("F4 builds");
    let nt = StructureConstants::standard(&sys);
    (sys, nt)
}
