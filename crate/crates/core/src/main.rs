fn main() {
    std::process::exit(ldgba_planner::cli::run());
}
