#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// A corpus invocation: golden-file name, arguments (run from the workspace
/// root) and expected exit status.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub status: i32,
}

pub const CORPUS: &[Case] = &[
    Case { name: "repideal_gl2_n1", args: &["repideal", "--presentation", "data/presentations/gl2.alg", "--level", "1"], status: 0 },
    Case { name: "repideal_comm2_n2", args: &["repideal", "--presentation", "data/presentations/comm2.alg", "--level", "2"], status: 0 },
    Case { name: "repideal_free2_n3", args: &["repideal", "--presentation", "data/presentations/free2.alg", "--level", "3"], status: 0 },
    Case { name: "chpoly_identity2", args: &["chpoly", "data/tuples/identity2.json"], status: 0 },
    Case { name: "chpoly_e12", args: &["chpoly", "data/tuples/e12.json"], status: 0 },
    Case { name: "chpoly_scalar5", args: &["chpoly", "data/tuples/scalar5.json"], status: 0 },
    Case {
        name: "invariants_commuting",
        args: &["invariants", "data/tuples/commuting_pair.json", "--presentation", "data/presentations/comm2.alg", "--max-length", "4", "--other", "data/tuples/generic_pair.json"],
        status: 0,
    },
    Case {
        name: "invariants_generic_not_commuting",
        args: &["invariants", "data/tuples/generic_pair.json", "--presentation", "data/presentations/comm2.alg", "--max-length", "3"],
        status: 1,
    },
    Case {
        name: "invariants_diag_conjugate",
        args: &["invariants", "data/tuples/diag_pair.json", "--other", "data/tuples/diag_pair_swapped.json"],
        status: 0,
    },
    Case { name: "qtorus_mul_uv", args: &["qtorus", "mul", "1,0", "0,1", "--level", "3"], status: 0 },
    Case { name: "qtorus_mul_vu", args: &["qtorus", "mul", "0,1", "1,0", "--level", "3"], status: 0 },
    Case { name: "qtorus_center_4", args: &["qtorus", "center", "--level", "4"], status: 0 },
    Case { name: "qtorus_centralizer_4", args: &["qtorus", "centralizer", "2,0", "0,1", "--level", "4"], status: 0 },
    Case { name: "qtorus_specialize_3", args: &["qtorus", "specialize", "--level", "3", "--mu", "2", "--nu", "[0,1]"], status: 0 },
    Case { name: "qtorus_embed_2_4", args: &["qtorus", "embed", "2", "4"], status: 1 },
    Case { name: "qtorus_embed_2_6", args: &["qtorus", "embed", "2", "6"], status: 0 },
    Case { name: "brane_beta_3", args: &["brane", "beta", "--level", "3"], status: 0 },
    Case { name: "brane_check_beta2", args: &["brane", "check", "data/branes/beta2.json"], status: 0 },
    Case { name: "brane_check_broken", args: &["brane", "check", "data/branes/gl2_broken2.json"], status: 1 },
    Case { name: "brane_classify_beta4", args: &["brane", "classify", "data/branes/beta4.json"], status: 0 },
    Case {
        name: "brane_classify_maximal",
        args: &["brane", "classify", "data/branes/qplane_max2.json", "--presentation", "data/presentations/qplane.alg"],
        status: 0,
    },
    Case { name: "brane_classify_minimal", args: &["brane", "classify", "data/branes/gl2_min2.json"], status: 0 },
    Case { name: "brane_twomorph_beta_to_minimal", args: &["brane", "twomorph", "data/branes/beta2.json", "data/branes/gl2_min2.json"], status: 0 },
    Case { name: "brane_twomorph_minimal_to_beta", args: &["brane", "twomorph", "data/branes/gl2_min2.json", "data/branes/beta2.json"], status: 1 },
    Case { name: "brane_family_mixed", args: &["brane", "family", "data/branes/family_beta.json"], status: 1 },
    Case { name: "brane_family_compatible", args: &["brane", "family", "data/branes/family_beta_compatible.json"], status: 0 },
    Case { name: "coalg_matrix_2", args: &["coalg", "matrix", "2"], status: 0 },
    Case { name: "coalg_matrix_3", args: &["coalg", "matrix", "3"], status: 0 },
    Case { name: "coalg_path_kronecker", args: &["coalg", "path", "data/coalgebras/kronecker.json"], status: 0 },
    Case { name: "coalg_path_a3", args: &["coalg", "path", "data/coalgebras/a3.json", "--max-length", "3"], status: 0 },
    Case { name: "coalg_check_divided_powers", args: &["coalg", "check", "data/coalgebras/divided_powers.json"], status: 0 },
    Case { name: "coalg_check_broken", args: &["coalg", "check", "data/coalgebras/broken.json"], status: 1 },
    Case { name: "coalg_dual_divided_powers", args: &["coalg", "dual", "data/coalgebras/divided_powers.json"], status: 0 },
    Case { name: "coalg_dual_kronecker", args: &["coalg", "dual", "data/coalgebras/kronecker.json"], status: 0 },
    Case { name: "coalg_grouplikes_kronecker", args: &["coalg", "grouplikes", "data/coalgebras/kronecker.json"], status: 0 },
    Case { name: "coalg_grouplikes_loop", args: &["coalg", "grouplikes", "data/coalgebras/loop.json", "--max-length", "3"], status: 0 },
    Case { name: "coalg_grouplikes_a3", args: &["coalg", "grouplikes", "data/coalgebras/a3.json"], status: 0 },
    Case { name: "coalg_grouplikes_divided_powers", args: &["coalg", "grouplikes", "data/coalgebras/divided_powers.json"], status: 0 },
];

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_azumaya"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}
