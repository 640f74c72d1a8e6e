//! Exits normally with the status given as its only argument. Used as the
//! host process when preloading the agent.

fn main() {
    let code = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(0);
    std::process::exit(code);
}
