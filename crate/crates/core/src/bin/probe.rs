fn main() { cac_core::probe(); }
