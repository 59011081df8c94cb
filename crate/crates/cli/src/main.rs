fn main() {
    println!("kocalc");
}
