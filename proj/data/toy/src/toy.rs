fn g0(a: i32, b: i32) -> i32 { a & b & 3 }
fn g1(a: i32, b: i32) -> i32 { a & b & 6 }
fn g2(a: i32, b: i32) -> i32 { a & (b | 6) }
fn g3(a: i32, b: i32) -> i32 { a & b * 8 }
fn g4(a: i32, b: i32) -> i32 { a - b + 4 }
fn g5(a: i32, b: i32) -> i32 { a - b ^ 5 }
fn g6(a: i32, b: i32) -> i32 { (a & 4) | b }
fn g7(a: i32, b: i32) -> i32 { (a * 4) + b }
fn g8(a: i32, b: i32) -> i32 { a | b * 7 }
fn g9(a: i32, b: i32) -> i32 { (a ^ 2) | b }
fn g10(a: i32, b: i32) -> i32 { (a ^ 8) | b }
fn g11(a: i32, b: i32) -> i32 { (a & 3) & b }
fn g12(a: i32, b: i32) -> i32 { a ^ b & 2 }
fn g13(a: i32, b: i32) -> i32 { a + b - 9 }
fn g14(a: i32, b: i32) -> i32 { a + b * 2 }
fn g15(a: i32, b: i32) -> i32 { a + (b | 4) }
fn g16(a: i32, b: i32) -> i32 { a - b | 8 }
fn g17(a: i32, b: i32) -> i32 { a ^ (b * 7) }
fn g18(a: i32, b: i32) -> i32 { a * b & 3 }
fn g19(a: i32, b: i32) -> i32 { (a & 9) & b }
fn g20(a: i32, b: i32) -> i32 { a * b + 4 }
fn g21(a: i32, b: i32) -> i32 { (a ^ 6) * b }
fn g22(a: i32, b: i32) -> i32 { a ^ b - 2 }
fn g23(a: i32, b: i32) -> i32 { a | (b * 4) }
fn g24(a: i32, b: i32) -> i32 { a | (b + 6) }
fn g25(a: i32, b: i32) -> i32 { a + (b ^ 6) }
fn g26(a: i32, b: i32) -> i32 { a * b - 7 }
fn g27(a: i32, b: i32) -> i32 { a | (b | 7) }
fn g28(a: i32, b: i32) -> i32 { a - b | 5 }
fn g29(a: i32, b: i32) -> i32 { a & b ^ 5 }
fn g30(a: i32, b: i32) -> i32 { a | (b & 7) }
fn g31(a: i32, b: i32) -> i32 { (a + 6) + b }
