fn main() {
    println!("{}", elmsync_core::linalg::spike_svd());
}
