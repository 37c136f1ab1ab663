int fold_0(const int* a, int n) {
  int s = 29;
  for (int i = 0; i < n; ++i) s = s | a[i];
  return s;
}

int clamp_0(int x) {
  if (x < 8) return 8;
  if (x > 37) return 37;
  return x;
}

int pick_0(int sel, int x) {
  switch (sel) {
    case 0: return x - 33;
    case 1: return x ^ 41;
    case 2: return x | 12;
    case 3: return x + 29;
    default: return 8;
  }
}

int steps_0(unsigned x) {
  int n = 0;
  while (x > 1 && n < 290) {
    x = (x % 2) ? 9 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_0(int n) {
  if (n <= 0) return 29;
  return rec_0(n - 1) * n;
}

int count_0(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] == t + 9) ++c;
  return c;
}

int find_0(const int* a, int n, int v) {
  for (int i = 1; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -9;
}

int grid_0(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r | c) % 9;
  return t;
}

double poly_0(double x) {
  return 29.5 * x * x + 9.25 * x + 8.0;
}

namespace geo_0 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 29;
}
}

bool check_0(short a, short b) {
  return (a == b) != ((a | b) > 8);
}

void scale_0(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] == 8) a[i] *= 9;
    else a[i] -= 29;
  }
}

int fold_1(const int* a, int n) {
  int s = 6;
  for (int i = 0; i < n; ++i) s = s ^ a[i];
  return s;
}

int clamp_1(int x) {
  if (x < 18) return 18;
  if (x > 24) return 24;
  return x;
}

int pick_1(int sel, int x) {
  switch (sel) {
    case 0: return x | 1;
    case 1: return x | 5;
    case 2: return x + 3;
    case 3: return x - 16;
    default: return 18;
  }
}

int steps_1(unsigned x) {
  int n = 0;
  while (x > 1 && n < 60) {
    x = (x % 2) ? 2 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_1(int n) {
  if (n <= 2) return 6;
  return rec_1(n - 1) - n;
}

int count_1(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] >= t + 2) ++c;
  return c;
}

int find_1(const int* a, int n, int v) {
  for (int i = 0; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -2;
}

int grid_1(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r ^ c) % 2;
  return t;
}

double poly_1(double x) {
  return 6.5 * x * x + 2.25 * x + 18.0;
}

namespace geo_1 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 6;
}
}

bool check_1(short a, short b) {
  return (a >= b) != ((a ^ b) > 18);
}

void scale_1(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] >= 18) a[i] *= 2;
    else a[i] -= 6;
  }
}

int fold_2(const int* a, int n) {
  int s = 30;
  for (int i = 0; i < n; ++i) s = s | a[i];
  return s;
}

int clamp_2(int x) {
  if (x < 8) return 8;
  if (x > 38) return 38;
  return x;
}

int pick_2(int sel, int x) {
  switch (sel) {
    case 0: return x & 19;
    case 1: return x ^ 1;
    case 2: return x & 6;
    case 3: return x ^ 42;
    default: return 8;
  }
}

int steps_2(unsigned x) {
  int n = 0;
  while (x > 1 && n < 300) {
    x = (x % 2) ? 7 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_2(int n) {
  if (n <= 1) return 30;
  return rec_2(n - 1) * n;
}

int count_2(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] > t + 7) ++c;
  return c;
}

int find_2(const int* a, int n, int v) {
  for (int i = 1; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -7;
}

int grid_2(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r | c) % 7;
  return t;
}

double poly_2(double x) {
  return 30.5 * x * x - 7.25 * x + 8.0;
}

namespace geo_2 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 30;
}
}

bool check_2(short a, short b) {
  return (a > b) != ((a | b) > 8);
}

void scale_2(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] > 8) a[i] *= 7;
    else a[i] -= 30;
  }
}

int fold_3(const int* a, int n) {
  int s = 36;
  for (int i = 0; i < n; ++i) s = s * a[i];
  return s;
}

int clamp_3(int x) {
  if (x < -4) return -4;
  if (x > 32) return 32;
  return x;
}

int pick_3(int sel, int x) {
  switch (sel) {
    case 0: return x + 5;
    case 1: return x | 50;
    case 2: return x + 26;
    case 3: return x + 19;
    case 4: return x ^ 5;
    default: return -4;
  }
}

int steps_3(unsigned x) {
  int n = 0;
  while (x > 1 && n < 360) {
    x = (x % 2) ? 3 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_3(int n) {
  if (n <= 0) return 36;
  return rec_3(n - 1) + n;
}

int count_3(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] > t + 3) ++c;
  return c;
}

int find_3(const int* a, int n, int v) {
  for (int i = 1; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -3;
}

int grid_3(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r * c) % 3;
  return t;
}

double poly_3(double x) {
  return 36.5 * x * x + 3.25 * x + -4.0;
}

namespace geo_3 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 36;
}
}

bool check_3(short a, short b) {
  return (a > b) != ((a * b) > -4);
}

void scale_3(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] > -4) a[i] *= 3;
    else a[i] -= 36;
  }
}

int fold_4(const int* a, int n) {
  int s = 14;
  for (int i = 0; i < n; ++i) s = s ^ a[i];
  return s;
}

int clamp_4(int x) {
  if (x < -17) return -17;
  if (x > -3) return -3;
  return x;
}

int pick_4(int sel, int x) {
  switch (sel) {
    case 0: return x ^ 5;
    case 1: return x | 41;
    case 2: return x - 50;
    case 3: return x & 18;
    case 4: return x * 6;
    case 5: return x * 22;
    default: return -17;
  }
}

int steps_4(unsigned x) {
  int n = 0;
  while (x > 1 && n < 140) {
    x = (x % 2) ? 5 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_4(int n) {
  if (n <= 2) return 14;
  return rec_4(n - 1) + n;
}

int count_4(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] >= t + 5) ++c;
  return c;
}

int find_4(const int* a, int n, int v) {
  for (int i = 1; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -5;
}

int grid_4(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r ^ c) % 5;
  return t;
}

double poly_4(double x) {
  return 14.5 * x * x - 5.25 * x + -17.0;
}

namespace geo_4 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 14;
}
}

bool check_4(short a, short b) {
  return (a >= b) != ((a ^ b) > -17);
}

void scale_4(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] >= -17) a[i] *= 5;
    else a[i] -= 14;
  }
}

int fold_5(const int* a, int n) {
  int s = 8;
  for (int i = 0; i < n; ++i) s = s & a[i];
  return s;
}

int clamp_5(int x) {
  if (x < -5) return -5;
  if (x > 3) return 3;
  return x;
}

int pick_5(int sel, int x) {
  switch (sel) {
    case 0: return x + 30;
    case 1: return x ^ 12;
    case 2: return x & 36;
    default: return -5;
  }
}

int steps_5(unsigned x) {
  int n = 0;
  while (x > 1 && n < 80) {
    x = (x % 2) ? 4 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_5(int n) {
  if (n <= 1) return 8;
  return rec_5(n - 1) + n;
}

int count_5(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] < t + 4) ++c;
  return c;
}

int find_5(const int* a, int n, int v) {
  for (int i = 0; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -4;
}

int grid_5(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r & c) % 4;
  return t;
}

double poly_5(double x) {
  return 8.5 * x * x - 4.25 * x + -5.0;
}

namespace geo_5 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 8;
}
}

bool check_5(short a, short b) {
  return (a < b) != ((a & b) > -5);
}

void scale_5(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] < -5) a[i] *= 4;
    else a[i] -= 8;
  }
}

int fold_6(const int* a, int n) {
  int s = 33;
  for (int i = 0; i < n; ++i) s = s ^ a[i];
  return s;
}

int clamp_6(int x) {
  if (x < -12) return -12;
  if (x > 21) return 21;
  return x;
}

int pick_6(int sel, int x) {
  switch (sel) {
    case 0: return x + 26;
    case 1: return x ^ 14;
    case 2: return x + 18;
    case 3: return x | 20;
    case 4: return x + 14;
    case 5: return x - 26;
    default: return -12;
  }
}

int steps_6(unsigned x) {
  int n = 0;
  while (x > 1 && n < 330) {
    x = (x % 2) ? 5 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_6(int n) {
  if (n <= 2) return 33;
  return rec_6(n - 1) - n;
}

int count_6(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] != t + 5) ++c;
  return c;
}

int find_6(const int* a, int n, int v) {
  for (int i = 1; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -5;
}

int grid_6(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r ^ c) % 5;
  return t;
}

double poly_6(double x) {
  return 33.5 * x * x + 5.25 * x + -12.0;
}

namespace geo_6 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 33;
}
}

bool check_6(short a, short b) {
  return (a != b) != ((a ^ b) > -12);
}

void scale_6(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] != -12) a[i] *= 5;
    else a[i] -= 33;
  }
}

int fold_7(const int* a, int n) {
  int s = 3;
  for (int i = 0; i < n; ++i) s = s ^ a[i];
  return s;
}

int clamp_7(int x) {
  if (x < -7) return -7;
  if (x > -4) return -4;
  return x;
}

int pick_7(int sel, int x) {
  switch (sel) {
    case 0: return x | 22;
    case 1: return x * 25;
    case 2: return x + 5;
    default: return -7;
  }
}

int steps_7(unsigned x) {
  int n = 0;
  while (x > 1 && n < 30) {
    x = (x % 2) ? 4 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_7(int n) {
  if (n <= 1) return 3;
  return rec_7(n - 1) + n;
}

int count_7(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] <= t + 4) ++c;
  return c;
}

int find_7(const int* a, int n, int v) {
  for (int i = 0; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -4;
}

int grid_7(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r ^ c) % 4;
  return t;
}

double poly_7(double x) {
  return 3.5 * x * x + 4.25 * x + -7.0;
}

namespace geo_7 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 3;
}
}

bool check_7(short a, short b) {
  return (a <= b) != ((a ^ b) > -7);
}

void scale_7(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] <= -7) a[i] *= 4;
    else a[i] -= 3;
  }
}

int fold_8(const int* a, int n) {
  int s = 38;
  for (int i = 0; i < n; ++i) s = s | a[i];
  return s;
}

int clamp_8(int x) {
  if (x < -20) return -20;
  if (x > 18) return 18;
  return x;
}

int pick_8(int sel, int x) {
  switch (sel) {
    case 0: return x | 30;
    case 1: return x - 38;
    case 2: return x ^ 37;
    case 3: return x - 25;
    case 4: return x - 41;
    default: return -20;
  }
}

int steps_8(unsigned x) {
  int n = 0;
  while (x > 1 && n < 380) {
    x = (x % 2) ? 5 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_8(int n) {
  if (n <= 2) return 38;
  return rec_8(n - 1) + n;
}

int count_8(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] <= t + 5) ++c;
  return c;
}

int find_8(const int* a, int n, int v) {
  for (int i = 1; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -5;
}

int grid_8(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r | c) % 5;
  return t;
}

double poly_8(double x) {
  return 38.5 * x * x - 5.25 * x + -20.0;
}

namespace geo_8 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 38;
}
}

bool check_8(short a, short b) {
  return (a <= b) != ((a | b) > -20);
}

void scale_8(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] <= -20) a[i] *= 5;
    else a[i] -= 38;
  }
}

int fold_9(const int* a, int n) {
  int s = 15;
  for (int i = 0; i < n; ++i) s = s - a[i];
  return s;
}

int clamp_9(int x) {
  if (x < -8) return -8;
  if (x > 7) return 7;
  return x;
}

int pick_9(int sel, int x) {
  switch (sel) {
    case 0: return x & 25;
    case 1: return x ^ 39;
    case 2: return x + 27;
    case 3: return x + 7;
    default: return -8;
  }
}

int steps_9(unsigned x) {
  int n = 0;
  while (x > 1 && n < 150) {
    x = (x % 2) ? 5 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_9(int n) {
  if (n <= 2) return 15;
  return rec_9(n - 1) + n;
}

int count_9(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] != t + 5) ++c;
  return c;
}

int find_9(const int* a, int n, int v) {
  for (int i = 1; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -5;
}

int grid_9(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r - c) % 5;
  return t;
}

double poly_9(double x) {
  return 15.5 * x * x + 5.25 * x + -8.0;
}

namespace geo_9 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 15;
}
}

bool check_9(short a, short b) {
  return (a != b) != ((a - b) > -8);
}

void scale_9(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] != -8) a[i] *= 5;
    else a[i] -= 15;
  }
}

int fold_10(const int* a, int n) {
  int s = 33;
  for (int i = 0; i < n; ++i) s = s & a[i];
  return s;
}

int clamp_10(int x) {
  if (x < -5) return -5;
  if (x > 28) return 28;
  return x;
}

int pick_10(int sel, int x) {
  switch (sel) {
    case 0: return x * 27;
    case 1: return x | 32;
    case 2: return x * 34;
    case 3: return x - 47;
    case 4: return x + 9;
    case 5: return x - 31;
    default: return -5;
  }
}

int steps_10(unsigned x) {
  int n = 0;
  while (x > 1 && n < 330) {
    x = (x % 2) ? 6 * x + 1 : x / 2;
    ++n;
  }
  return n;
}

long rec_10(int n) {
  if (n <= 0) return 33;
  return rec_10(n - 1) - n;
}

int count_10(const int* a, int n, int t) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (a[i] != t + 6) ++c;
  return c;
}

int find_10(const int* a, int n, int v) {
  for (int i = 0; i < n; ++i) {
    if (a[i] == v) return i;
  }
  return -6;
}

int grid_10(int rows, int cols) {
  int t = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t += (r & c) % 6;
  return t;
}

double poly_10(double x) {
  return 33.5 * x * x + 6.25 * x + -5.0;
}

namespace geo_10 {
int area(int w, int h) {
  if (w <= 0 || h <= 0) return 0;
  return w * h + 33;
}
}

bool check_10(short a, short b) {
  return (a != b) != ((a & b) > -5);
}

void scale_10(int* a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] != -5) a[i] *= 6;
    else a[i] -= 33;
  }
}
