#include <string>

#include "registry.hpp"

namespace optbench::detail {

void register_constants(Registry& r) {
  r.table("hartmann3.alpha", 4, 1, {1.0, 1.2, 3.0, 3.2});
  r.table("hartmann3.A", 4, 3,
          {3.0, 10, 30,  //
           0.1, 10, 35,  //
           3.0, 10, 30,  //
           0.1, 10, 35});
  r.table("hartmann3.P", 4, 3,
          {3689e-4, 1170e-4, 2673e-4,  //
           4699e-4, 4387e-4, 7470e-4,  //
           1091e-4, 8732e-4, 5547e-4,  //
           381e-4, 5743e-4, 8828e-4});

  r.table("hartmann6.c", 4, 1, {1.0, 1.2, 3.0, 3.2});
  r.table("hartmann6.A", 4, 6,
          {10, 3, 17, 3.5, 1.7, 8,     //
           0.05, 10, 17, 0.1, 8, 14,   //
           3, 3.5, 1.7, 10, 17, 8,     //
           17, 8, 0.05, 10, 0.1, 14});
  // P(1,6) is printed as 0.5586; 0.5886 reproduces the stated minimum.
  r.table("hartmann6.P", 4, 6,
          {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886,  //
           0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991,  //
           0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650,  //
           0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381});

  const Vec shekel_a = {4, 4, 4, 4,  //
                        1, 1, 1, 1,  //
                        8, 8, 8, 8,  //
                        6, 6, 6, 6,  //
                        3, 7, 3, 7,  //
                        2, 9, 2, 9,  //
                        5, 5, 3, 3,  //
                        8, 1, 8, 1,  //
                        6, 2, 6, 2,  //
                        7, 3.6, 7, 3.6};
  const Vec shekel_c = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
  for (std::size_t m : {5u, 7u, 10u}) {
    const std::string base = "shekel" + std::to_string(m);
    r.table(base + ".A", m, 4, Vec(shekel_a.begin(), shekel_a.begin() + long(m * 4)));
    r.table(base + ".c", m, 1, Vec(shekel_c.begin(), shekel_c.begin() + long(m)));
  }

  r.table("langermann.A", 5, 2, {3, 5, 5, 2, 2, 1, 1, 4, 7, 9});
  r.table("langermann.c", 5, 1, {1, 2, 5, 2, 3});

  r.table("judge.A", 20, 1,
          {4.284, 4.149, 3.877, 0.533, 2.211, 2.389, 2.145, 3.231, 1.998, 1.379,
           2.106, 1.428, 1.011, 2.179, 2.858, 1.388, 1.651, 1.593, 1.046, 2.152});
  r.table("judge.B", 20, 1,
          {0.286, 0.973, 0.384, 0.276, 0.973, 0.543, 0.957, 0.948, 0.543, 0.797,
           0.936, 0.889, 0.006, 0.828, 0.399, 0.617, 0.939, 0.784, 0.072, 0.889});
  r.table("judge.C", 20, 1,
          {0.645, 0.585, 0.310, 0.058, 0.455, 0.779, 0.259, 0.202, 0.028, 0.099,
           0.296, 0.296, 0.175, 0.180, 0.842, 0.039, 0.103, 0.620, 0.158, 0.704});

  r.table("kowalik.a", 11, 1,
          {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323,
           0.0235, 0.0246});
  r.table("kowalik.b", 11, 1,
          {4, 2, 1, 1.0 / 2, 1.0 / 4, 1.0 / 6, 1.0 / 8, 1.0 / 10, 1.0 / 12, 1.0 / 14,
           1.0 / 16});

  r.table("dejong5.A", 25, 2,
          {-32, -16, -16, -16, -32, -8, -16, -8, -32, 0,  //
           -16, 0,   -32, 8,   -16, 8,  -32, 16, -16, 16,  //
           0,   -16, 0,   -8,  0,   0,  0,   8,  0,   16,  //
           16,  -16, 16,  -8,  16,  0,  16,  8,  16,  16,  //
           32,  -16, 32,  -8,  32,  0,  32,  8,  32,  16});

  // Columns: A_j, a_j, b_j, c_j, x1_j, x2_j
  r.table("muller-brown", 4, 6,
          {-200, -1.0, 0.0, -10, 1.0, 0.0,   //
           -100, -1.0, 0.0, -10, 0.0, 0.5,   //
           -170, -6.5, 11, -6.5, -0.5, 1.5,  //
           15.0, 0.7, 0.6, 0.7, -1.0, 1.0});

  r.table("gaussian.y", 8, 1,
          {0.0009, 0.0044, 0.0175, 0.0540, 0.1295, 0.2420, 0.3521, 0.3989});

  r.table("meyer.y", 16, 1,
          {34780, 28610, 23650, 19630, 16370, 13720, 11540, 9744, 8261, 7030, 6005,
           5147, 4427, 3820, 3307, 2872});

  r.table("power-sum.b", 4, 1, {8, 18, 44, 114});

  // Pinter variable ranges (a_i, b_i), i = 1..50, as printed. Rows 3, 5, 7,
  // 9, 15, 23, 33, 45 and 47 are not valid intervals.
  r.table("pinter.ranges", 50, 2,
          {-8.8, 1.4, -6.2, 0.9, 8.7, 1.7, -7.7, 0.8, 3.2, 5.2,  //
           -3.5, 7.9, 5.1, 8.7, -2.2, 4.7, 3.1, 9.8, -6.3, 1.7,  //
           -7.8, 2.1, -5.2, 4.9, -6.1, 3.5, -2.7, 1.5, 2.6, 5.6,  //
           -7.1, 2.9, -2.7, 6.8, -5.2, 2.8, -4.1, 1.7, -7.3, 4.0,  //
           -8.5, 7.2, -1.2, 3.9, 5.7, 3.5, -7.7, 0.7, -8.6, 3.6,  //
           -9.5, 2.8, -3.7, 8.1, -6.7, 3.8, -5.1, 5.8, -4.3, 7.2,  //
           -3.5, 7.7, -6.2, 4.2, 7.3, 4.3, -4.7, 2.5, -8.6, 3.6,  //
           -9.5, 2.8, -3.7, 8.1, -6.7, 3.8, -5.1, 5.8, -4.3, 7.2,  //
           -5.5, 2.2, -3.2, 4.9, -7.8, 3.6, -4.7, 2.5, 3.6, -3.6,  //
           -4.5, 1.9, 4.1, -4.1, -7.2, 3.2, -4.1, 1.8, -5.3, 1.3});
}

}  // namespace optbench::detail
