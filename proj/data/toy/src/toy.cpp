int f0(int a, int b) { return a * (b - 8); }
int f1(int a, int b) { return (a + 3) + b; }
int f2(int a, int b) { return a | b + 5; }
int f3(int a, int b) { return a + b & 8; }
int f4(int a, int b) { return a - b + 8; }
int f5(int a, int b) { return a | (b + 5); }
int f6(int a, int b) { return a ^ (b | 2); }
int f7(int a, int b) { return a | b & 2; }
int f8(int a, int b) { return (a + 4) | b; }
int f9(int a, int b) { return a & (b - 3); }
int f10(int a, int b) { return a * b | 4; }
int f11(int a, int b) { return (a | 5) | b; }
int f12(int a, int b) { return a + (b | 3); }
int f13(int a, int b) { return (a + 5) | b; }
int f14(int a, int b) { return (a ^ 8) | b; }
int f15(int a, int b) { return (a & 9) | b; }
int f16(int a, int b) { return a * (b - 4); }
int f17(int a, int b) { return a - (b + 6); }
int f18(int a, int b) { return (a & 9) * b; }
int f19(int a, int b) { return a | (b + 3); }
int f20(int a, int b) { return a & b - 7; }
int f21(int a, int b) { return a & (b & 2); }
int f22(int a, int b) { return (a + 7) | b; }
int f23(int a, int b) { return a ^ (b * 9); }
int f24(int a, int b) { return (a & 3) + b; }
int f25(int a, int b) { return a & b ^ 3; }
int f26(int a, int b) { return a ^ (b ^ 6); }
int f27(int a, int b) { return (a | 9) ^ b; }
int f28(int a, int b) { return a ^ b & 7; }
int f29(int a, int b) { return a & (b * 4); }
int f30(int a, int b) { return a + b & 2; }
int f31(int a, int b) { return (a * 5) - b; }
