fn main() {
    let out = gmspectral::cli::run(
        std::env::args_os(),
        &mut std::io::stdin(),
        gmspectral::cli::subset_cap_from_env(),
    );
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
