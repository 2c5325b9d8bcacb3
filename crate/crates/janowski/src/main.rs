fn main() {
    // Die quietly on closed pipes (e.g. `janowski verify | head`) like
    // other Unix tools instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(janowski::cli::run(std::env::args_os()));
}
