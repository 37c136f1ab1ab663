fn rfold_0(a: &[i32]) -> i32 {
    let mut s: i32 = 18;
    for &v in a {
        s = s & v;
    }
    s
}

fn rclamp_0(x: i32) -> i32 {
    if x < -7 {
        -7
    } else if x > 11 {
        11
    } else {
        x
    }
}

fn rpick_0(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(18),
        1 => x.wrapping_add(27),
        2 => x.wrapping_add(29),
        _ => -7,
    }
}

fn rsteps_0(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 180 {
        x = if x % 2 == 1 { x.wrapping_mul(5).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_0(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v < t.wrapping_add(5)).count()
}

fn rfind_0(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -5
}

fn rgrid_0(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r & c) % 5);
        }
    }
    t
}

fn rpoly_0(x: f64) -> f64 {
    18.5 * x * x + 5.25 * x + -7.0
}

fn rgcd_0(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 18
}

fn rfold_1(a: &[i32]) -> i32 {
    let mut s: i32 = 4;
    for &v in a {
        s = s.wrapping_mul(v);
    }
    s
}

fn rclamp_1(x: i32) -> i32 {
    if x < -9 {
        -9
    } else if x > -5 {
        -5
    } else {
        x
    }
}

fn rpick_1(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(6),
        1 => x.wrapping_add(24),
        2 => x.wrapping_add(9),
        3 => x.wrapping_add(29),
        _ => -9,
    }
}

fn rsteps_1(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 40 {
        x = if x % 2 == 1 { x.wrapping_mul(2).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_1(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v <= t.wrapping_add(2)).count()
}

fn rfind_1(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -2
}

fn rgrid_1(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r * c) % 2);
        }
    }
    t
}

fn rpoly_1(x: f64) -> f64 {
    4.5 * x * x - 2.25 * x + -9.0
}

fn rgcd_1(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 4
}

fn rfold_2(a: &[i32]) -> i32 {
    let mut s: i32 = 34;
    for &v in a {
        s = s.wrapping_add(v);
    }
    s
}

fn rclamp_2(x: i32) -> i32 {
    if x < 17 {
        17
    } else if x > 51 {
        51
    } else {
        x
    }
}

fn rpick_2(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(23),
        1 => x.wrapping_add(45),
        2 => x.wrapping_add(20),
        3 => x.wrapping_add(3),
        4 => x.wrapping_add(2),
        5 => x.wrapping_add(39),
        _ => 17,
    }
}

fn rsteps_2(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 340 {
        x = if x % 2 == 1 { x.wrapping_mul(4).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_2(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v < t.wrapping_add(4)).count()
}

fn rfind_2(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -4
}

fn rgrid_2(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r + c) % 4);
        }
    }
    t
}

fn rpoly_2(x: f64) -> f64 {
    34.5 * x * x + 4.25 * x + 17.0
}

fn rgcd_2(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 34
}

fn rfold_3(a: &[i32]) -> i32 {
    let mut s: i32 = 31;
    for &v in a {
        s = s.wrapping_mul(v);
    }
    s
}

fn rclamp_3(x: i32) -> i32 {
    if x < -1 {
        -1
    } else if x > 30 {
        30
    } else {
        x
    }
}

fn rpick_3(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(5),
        1 => x.wrapping_add(29),
        2 => x.wrapping_add(35),
        _ => -1,
    }
}

fn rsteps_3(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 310 {
        x = if x % 2 == 1 { x.wrapping_mul(3).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_3(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v > t.wrapping_add(3)).count()
}

fn rfind_3(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -3
}

fn rgrid_3(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r * c) % 3);
        }
    }
    t
}

fn rpoly_3(x: f64) -> f64 {
    31.5 * x * x - 3.25 * x + -1.0
}

fn rgcd_3(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 31
}

fn rfold_4(a: &[i32]) -> i32 {
    let mut s: i32 = 3;
    for &v in a {
        s = s.wrapping_mul(v);
    }
    s
}

fn rclamp_4(x: i32) -> i32 {
    if x < 1 {
        1
    } else if x > 4 {
        4
    } else {
        x
    }
}

fn rpick_4(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(5),
        1 => x.wrapping_add(27),
        2 => x.wrapping_add(2),
        3 => x.wrapping_add(32),
        4 => x.wrapping_add(37),
        5 => x.wrapping_add(1),
        _ => 1,
    }
}

fn rsteps_4(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 30 {
        x = if x % 2 == 1 { x.wrapping_mul(4).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_4(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v < t.wrapping_add(4)).count()
}

fn rfind_4(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -4
}

fn rgrid_4(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r * c) % 4);
        }
    }
    t
}

fn rpoly_4(x: f64) -> f64 {
    3.5 * x * x - 4.25 * x + 1.0
}

fn rgcd_4(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 3
}

fn rfold_5(a: &[i32]) -> i32 {
    let mut s: i32 = 25;
    for &v in a {
        s = s.wrapping_add(v);
    }
    s
}

fn rclamp_5(x: i32) -> i32 {
    if x < 18 {
        18
    } else if x > 43 {
        43
    } else {
        x
    }
}

fn rpick_5(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(41),
        1 => x.wrapping_add(8),
        2 => x.wrapping_add(17),
        _ => 18,
    }
}

fn rsteps_5(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 250 {
        x = if x % 2 == 1 { x.wrapping_mul(2).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_5(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v < t.wrapping_add(2)).count()
}

fn rfind_5(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -2
}

fn rgrid_5(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r + c) % 2);
        }
    }
    t
}

fn rpoly_5(x: f64) -> f64 {
    25.5 * x * x - 2.25 * x + 18.0
}

fn rgcd_5(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 25
}

fn rfold_6(a: &[i32]) -> i32 {
    let mut s: i32 = 22;
    for &v in a {
        s = s ^ v;
    }
    s
}

fn rclamp_6(x: i32) -> i32 {
    if x < 17 {
        17
    } else if x > 39 {
        39
    } else {
        x
    }
}

fn rpick_6(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(35),
        1 => x.wrapping_add(6),
        2 => x.wrapping_add(34),
        3 => x.wrapping_add(49),
        4 => x.wrapping_add(33),
        5 => x.wrapping_add(2),
        _ => 17,
    }
}

fn rsteps_6(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 220 {
        x = if x % 2 == 1 { x.wrapping_mul(8).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_6(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v >= t.wrapping_add(8)).count()
}

fn rfind_6(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -8
}

fn rgrid_6(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r ^ c) % 8);
        }
    }
    t
}

fn rpoly_6(x: f64) -> f64 {
    22.5 * x * x - 8.25 * x + 17.0
}

fn rgcd_6(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 22
}

fn rfold_7(a: &[i32]) -> i32 {
    let mut s: i32 = 39;
    for &v in a {
        s = s.wrapping_add(v);
    }
    s
}

fn rclamp_7(x: i32) -> i32 {
    if x < 10 {
        10
    } else if x > 49 {
        49
    } else {
        x
    }
}

fn rpick_7(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(32),
        1 => x.wrapping_add(50),
        2 => x.wrapping_add(40),
        _ => 10,
    }
}

fn rsteps_7(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 390 {
        x = if x % 2 == 1 { x.wrapping_mul(3).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_7(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v > t.wrapping_add(3)).count()
}

fn rfind_7(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -3
}

fn rgrid_7(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r + c) % 3);
        }
    }
    t
}

fn rpoly_7(x: f64) -> f64 {
    39.5 * x * x - 3.25 * x + 10.0
}

fn rgcd_7(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 39
}

fn rfold_8(a: &[i32]) -> i32 {
    let mut s: i32 = 17;
    for &v in a {
        s = s.wrapping_mul(v);
    }
    s
}

fn rclamp_8(x: i32) -> i32 {
    if x < 3 {
        3
    } else if x > 20 {
        20
    } else {
        x
    }
}

fn rpick_8(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(34),
        1 => x.wrapping_add(11),
        2 => x.wrapping_add(49),
        3 => x.wrapping_add(22),
        _ => 3,
    }
}

fn rsteps_8(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 170 {
        x = if x % 2 == 1 { x.wrapping_mul(2).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_8(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v > t.wrapping_add(2)).count()
}

fn rfind_8(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -2
}

fn rgrid_8(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r * c) % 2);
        }
    }
    t
}

fn rpoly_8(x: f64) -> f64 {
    17.5 * x * x - 2.25 * x + 3.0
}

fn rgcd_8(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 17
}

fn rfold_9(a: &[i32]) -> i32 {
    let mut s: i32 = 32;
    for &v in a {
        s = s ^ v;
    }
    s
}

fn rclamp_9(x: i32) -> i32 {
    if x < 0 {
        0
    } else if x > 32 {
        32
    } else {
        x
    }
}

fn rpick_9(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(13),
        1 => x.wrapping_add(41),
        2 => x.wrapping_add(28),
        3 => x.wrapping_add(49),
        4 => x.wrapping_add(13),
        _ => 0,
    }
}

fn rsteps_9(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 320 {
        x = if x % 2 == 1 { x.wrapping_mul(5).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_9(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v != t.wrapping_add(5)).count()
}

fn rfind_9(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -5
}

fn rgrid_9(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r ^ c) % 5);
        }
    }
    t
}

fn rpoly_9(x: f64) -> f64 {
    32.5 * x * x + 5.25 * x + 0.0
}

fn rgcd_9(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 32
}

fn rfold_10(a: &[i32]) -> i32 {
    let mut s: i32 = 25;
    for &v in a {
        s = s.wrapping_mul(v);
    }
    s
}

fn rclamp_10(x: i32) -> i32 {
    if x < 17 {
        17
    } else if x > 42 {
        42
    } else {
        x
    }
}

fn rpick_10(sel: u32, x: i32) -> i32 {
    match sel {
        0 => x.wrapping_add(9),
        1 => x.wrapping_add(32),
        2 => x.wrapping_add(23),
        3 => x.wrapping_add(3),
        _ => 17,
    }
}

fn rsteps_10(mut x: u64) -> u32 {
    let mut n = 0;
    while x > 1 && n < 250 {
        x = if x % 2 == 1 { x.wrapping_mul(5).wrapping_add(1) } else { x / 2 };
        n += 1;
    }
    n
}

fn rcount_10(a: &[i32], t: i32) -> usize {
    a.iter().filter(|&&v| v > t.wrapping_add(5)).count()
}

fn rfind_10(a: &[i32], v: i32) -> i64 {
    for i in 0..a.len() {
        if a[i] == v {
            return i as i64;
        }
    }
    -5
}

fn rgrid_10(rows: i32, cols: i32) -> i32 {
    let mut t = 0i32;
    for r in 0..rows {
        for c in 0..cols {
            t = t.wrapping_add((r * c) % 5);
        }
    }
    t
}

fn rpoly_10(x: f64) -> f64 {
    25.5 * x * x + 5.25 * x + 17.0
}

fn rgcd_10(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a + 25
}
