pub fn probe() {
    let zeros = [0u8; 1024];
    println!("fp64(empty) = {}", farmhash::fingerprint64(b""));
    println!("fp64(abc)   = {}", farmhash::fingerprint64(b"abc"));
    println!("fp64(zeros) = {}", farmhash::fingerprint64(&zeros));
}
