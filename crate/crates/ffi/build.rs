use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").expect("set by cargo"));
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let config =
        cbindgen::Config::from_file(crate_dir.join("cbindgen.toml")).expect("valid cbindgen.toml");
    let generated = cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate();
    match generated {
        Ok(bindings) => {
            bindings.write_to_file(crate_dir.join("include/ivpoly.h"));
        }
        // header generation must not break builds of the library itself
        Err(e) => println!("cargo:warning=ivpoly.h not regenerated: {e}"),
    }
}
