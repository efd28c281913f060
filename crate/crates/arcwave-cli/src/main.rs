fn main() {
    println!("arcwave");
}
