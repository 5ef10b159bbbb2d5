use std::io;

fn main() {
    let env = std::env::var(cp2q::MAX_TERMS_VAR).ok();
    let code = cp2q::run(std::env::args_os(), env, &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
