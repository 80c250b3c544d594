#include <algorithm>
#include <cmath>

#include "registry.hpp"

namespace optbench::detail {
namespace {

using A = const EvalArgs&;
using std::abs;
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

double mccormick(double x, double y) { return sin(x + y) + sq(x - y) - 1.5 * x + 2.5 * y + 1.0; }

double michalewicz(std::span<const double> x, double m) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += sin(x[i]) * std::pow(sin(double(i + 1) * x[i] * x[i] / kPi), 2.0 * m);
  }
  return -s;
}

double mishra_inner(double x1, double x2, double sign) {
  return sq(sin(sq(cos(x1) + cos(x2)))) + sign * sq(cos(sq(sin(x1) + sin(x2)))) + x1;
}

// Penalty term u(x, a, k, m).
double penalty_u(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

// 1-based coordinate with cyclic wrap: x_0 = x_n and x_{n+1} = x_1.
double cyc(std::span<const double> x, long i) {
  const long n = long(x.size());
  return x[std::size_t(((i - 1) % n + n) % n)];
}

double pen_holder(double x, double y) {
  const double g = abs(cos(x) * cos(y) * exp(abs(1.0 - sqrt(x * x + y * y) / kPi)));
  if (g == 0.0) return 0.0;
  return -exp(-1.0 / g);
}

double rastrigin(std::span<const double> x) {
  double s = 10.0 * double(x.size());
  for (double v : x) s += v * v - 10.0 * cos(2.0 * kPi * v);
  return s;
}

double ripple_term(double x, bool with_cos) {
  const double env = -exp(-2.0 * std::log(2.0) * sq((x - 0.1) / 0.8));
  double inner = pow6(sin(5.0 * kPi * x));
  if (with_cos) inner += 0.1 * sq(cos(500.0 * kPi * x));
  return env * inner;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
  }
  return s;
}

double schaffer_den(double x, double y) { return sq(0.001 * x * x + 0.001 * y * y + 1.0); }

double schaffer_f6_pair(double x, double y) {
  const double r2 = x * x + y * y;
  return (sq(sin(sqrt(r2))) - 0.5) / sq(1.0 + 0.001 * r2) + 0.5;
}

// Identity transforms; f_pen = sum max(0, |x_i| - 5)^2.
double schaffer_f7(std::span<const double> x) {
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double si = sqrt(x[i] * x[i] + x[i + 1] * x[i + 1]);
    s += sqrt(si) + sqrt(si) * sq(sin(50.0 * std::pow(si, 0.2)));
  }
  double pen = 0.0;
  for (double v : x) pen += sq(std::max(0.0, abs(v) - 5.0));
  return sq(s / double(n - 1)) + 10.0 * pen;
}

double schwefel_1_2(std::span<const double> x) {
  double s = 0.0, c = 0.0;
  for (double v : x) {
    c += v;
    s += c * c;
  }
  return s;
}

OptimumRecord perm_min(std::size_t n) {
  Vec loc(n);
  for (std::size_t i = 0; i < n; ++i) loc[i] = double(i + 1);
  return at(std::move(loc), 0.0, B);
}

OptimumRecord perm0_min(std::size_t n, bool reciprocal, Provenance p) {
  Vec loc(n);
  for (std::size_t i = 0; i < n; ++i) loc[i] = reciprocal ? 1.0 / double(i + 1) : double(i + 1);
  return at(std::move(loc), 0.0, p);
}

OptimumRecord qing_min(std::size_t n) {
  Vec loc(n);
  for (std::size_t i = 0; i < n; ++i) loc[i] = sqrt(double(i + 1));
  return at(std::move(loc), 0.0, B);
}

}  // namespace

void register_group_3(Registry& r) {
  r.add({.name = "mccormick",
         .eq = 161,
         .title = "McCormick",
         .props = "C D NS NSc M",
         .bounds = box({-1.5, -3}, {4, 4}),
         .optima = {at({-0.54719, -1.54719}, -1.9132, B, rounded(1.9132))},
         .body = [](A a) { return mccormick(a.x[0], a.x[1]); }});

  r.add({.name = "mccormick-noise",
         .eq = 162,
         .title = "McCormick with Noise",
         .props = "M stoch",
         .bounds = range(-1.5, 4),
         .optima = {at({-0.5471, -1.5471}, -1.9132, P, rounded(1.9132))},
         .notes = {"noise uniform on [-1, 1]"},
         .body = [](A a) { return mccormick(a.x[0], a.x[1]) + a.rng->uniform(-1.0, 1.0); }});

  r.add({.name = "meyer",
         .eq = 163,
         .title = "Meyer",
         .dim = DimClass::fixed(3),
         .constants = {"meyer.y"},
         .optima = {at({0.02, 4000, 250}, 87.9458, P, rounded(87.9458)),
                    at({5.60963637e-03, 6.18134636e+03, 3.45223635e+02}, 87.9458, B,
                       rounded(87.9458))},
         .notes = {"printed as a single residual; the least-squares sum over the 16 tabulated "
                   "rows with t_i = 45 + 5i is implemented",
                   "the stated point (0.02, 4000, 250) gives about 1.7e9; the minimum 87.9458 "
                   "is at (0.0056096, 6181.35, 345.224)",
                   "'n = 2' in the text contradicts the three parameters"},
         .body = [y = r.get("meyer.y")](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < 16; ++i) {
             const double den = 45.0 + 5.0 * double(i + 1) + a.x[2];
             if (den == 0.0) domain_error("meyer", "t + x3 = 0");
             s += sq(a.x[0] * exp(a.x[1] / den) - y[i]);
           }
           return s;
         }});

  r.add({.name = "michalewicz",
         .eq = 164,
         .title = "Michalewicz",
         .props = "M",
         .bounds = range(0, kPi),
         .dim = DimClass::scalable(1),
         .tier = 1,
         .params = {{"m", 10.0}},
         .symbols = {"m"},
         .optima = {at({2.20290552, 1.57079633}, -1.8013, B, rounded(1.8013)),
                    value_only(-4.6876, P, 5, rounded(4.6876)),
                    value_only(-9.6601, P, 10, rounded(9.6601))},
         .body = [](A a) { return michalewicz(a.x, a.params[0]); }});

  r.add({.name = "michalewicz-n2",
         .eq = 165,
         .title = "Michalewicz N.2",
         .props = "M",
         .bounds = range(0, kPi),
         .body = [](A a) {
           return -0.5 * std::pow(sin(sq(a.x[0]) / kPi), 20.0) * sin(a.x[0]) -
                  0.5 * std::pow(sin(2.0 * sq(a.x[1]) / kPi), 20.0) * sin(a.x[1]);
         }});

  r.add({.name = "michalewicz-noise",
         .eq = 166,
         .title = "Michalewicz with Noise",
         .props = "M stoch",
         .bounds = range(0, kPi),
         .dim = DimClass::scalable(1),
         .params = {{"m", 10.0}},
         .symbols = {"m"},
         .notes = {"noise uniform on [-1, 1]"},
         .body = [](A a) { return michalewicz(a.x, a.params[0]) + a.rng->uniform(-1.0, 1.0); }});

  r.add({.name = "miele-cantrell",
         .eq = 167,
         .title = "Miele Cantrell",
         .props = "C D NS NSc M",
         .bounds = range(-1, 1),
         .dim = DimClass::fixed(4),
         .optima = {at({0, 1, 1, 1}, 0.0, B)},
         .body = [](A a) {
           const double x0 = a.x[0], x1 = a.x[1], x2 = a.x[2], x3 = a.x[3];
           return 100.0 * pow6(x1 - x2) + pow4(-x2 + exp(-x0)) + pow4(std::tan(x2 - x3)) +
                  sq(pow4(x0));
         }});

  r.add({.name = "mishra",
         .eq = 168,
         .title = "Mishra",
         .aliases = {"mishra-n1"},
         .props = "C D NS Sc M",
         .bounds = range(0, 1),
         .dim = DimClass::scalable(2),
         .optima = {at_all(1.0, 2.0, V)},
         .notes = {"D and N both read as the dimension"},
         .body = [](A a) {
           const double n = double(a.x.size());
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) s += a.x[i];
           return real_pow("mishra", 1.0 + n - s, n - s);
         }});

  r.add({.name = "mishra-n2",
         .eq = 169,
         .title = "Mishra N.2",
         .props = "C D NS NSc M",
         .bounds = range(0, 1),
         .dim = DimClass::scalable(2),
         .optima = {at_all(1.0, 2.0, B)},
         .notes = {"labelled non-scalable but written for any N"},
         .body = [](A a) {
           const double n = double(a.x.size());
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) s += 0.5 * (a.x[i] + a.x[i + 1]);
           return real_pow("mishra-n2", 1.0 + n - s, n - s);
         }});

  const double m3x = -std::sqrt(sq(2.5 * kPi) + 10.0);
  r.add({.name = "mishra-n3",
         .eq = 170,
         .title = "Mishra N.3",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .optima = {value_only(-0.1846, P, 2, rounded(0.1846)),
                    at({m3x, -10.0}, -0.1846, B, rounded(0.1846))},
         .notes = {"printed root over the whole sum cannot be negative; canonical "
                   "sqrt|cos(sqrt|x0^2 + x1|)| + 0.01 (x0 + x1) adopted",
                   "the minimizer sits on the x1 = -10 face at x0 = -sqrt((5 pi/2)^2 + 10)"},
         .body = [](A a) {
           return sqrt(abs(cos(sqrt(abs(sq(a.x[0]) + a.x[1]))))) + 0.01 * (a.x[0] + a.x[1]);
         }});

  const double m4x = -std::sqrt(sq(3.0 * kPi) + 10.0);
  r.add({.name = "mishra-n4",
         .eq = 171,
         .title = "Mishra N.4",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .optima = {value_only(-0.1994, P, 2, rounded(0.1994)),
                    at({m4x, -10.0}, -0.1994, B, rounded(0.1994))},
         .notes = {"printed root over the whole sum cannot be negative; canonical "
                   "sqrt|sin(sqrt|x0^2 + x1|)| + 0.01 (x0 + x1) adopted"},
         .body = [](A a) {
           return sqrt(abs(sin(sqrt(abs(sq(a.x[0]) + a.x[1]))))) + 0.01 * (a.x[0] + a.x[1]);
         }});

  r.add({.name = "mishra-n5",
         .eq = 172,
         .title = "Mishra N.5",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .optima = {at({-1.986, -10}, -1.01982, B, rounded(1.01982))},
         .notes = {"printed 0.01 (x1 + x2) gives about -0.12 at the stated point; canonical "
                   "0.01 x1 + 0.1 x2 adopted"},
         .body = [](A a) {
           return sq(mishra_inner(a.x[0], a.x[1], 1.0)) + 0.01 * a.x[0] + 0.1 * a.x[1];
         }});

  r.add({.name = "mishra-n6",
         .eq = 173,
         .title = "Mishra N.6",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .optima = {at({2.886, 1.823}, -2.283, B, rounded(2.283))},
         .notes = {"printed form gives about -2.667 at the stated point; canonical "
                   "-ln[(sin^2((cos x1 + cos x2)^2) - cos^2((sin x1 + sin x2)^2) + x1)^2] + "
                   "0.1 ((x1 - 1)^2 + (x2 - 1)^2) adopted"},
         .body = [](A a) {
           const double g = sq(mishra_inner(a.x[0], a.x[1], -1.0));
           if (g == 0.0) domain_error("mishra-n6", "log of 0");
           return -log(g) + 0.1 * (sq(a.x[0] - 1.0) + sq(a.x[1] - 1.0));
         }});

  r.add({.name = "mishra-n7",
         .eq = 174,
         .title = "Mishra N.7",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {value_only(0.0, P), at({2, 0}, 0.0, V)},
         .notes = {"printed as the square of prod (x_i - N!); kept as printed"},
         .body = [](A a) {
           const double nf = std::tgamma(double(a.x.size()) + 1.0);
           double p = 1.0;
           for (double v : a.x) p *= v - nf;
           return p * p;
         }});

  r.add({.name = "mishra-n8",
         .eq = 175,
         .title = "Mishra N.8",
         .aliases = {"decanomial"},
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .optima = {at({-3, 2}, 0.0, P), at({2, -3}, 0.0, B)},
         .notes = {"printed coefficient 13344 leaves the first polynomial at 64 for x1 = 2 and "
                   "one absolute value covers both polynomials; canonical "
                   "0.001 (|p(x1)| + |q(x2)|)^2 with 13340 adopted",
                   "the stated point (-3, 2) has its coordinates swapped"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           const double p = std::pow(x, 10) - 20 * std::pow(x, 9) + 180 * std::pow(x, 8) -
                            960 * std::pow(x, 7) + 3360 * pow6(x) - 8064 * std::pow(x, 5) +
                            13340 * pow4(x) - 15360 * cube(x) + 11520 * x * x - 5120 * x + 2624;
           const double q = pow4(y) + 12 * cube(y) + 54 * y * y + 108 * y + 81;
           return 0.001 * sq(abs(p) + abs(q));
         }});

  r.add({.name = "mishra-n9",
         .eq = 176,
         .title = "Mishra N.9",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .dim = DimClass::fixed(3),
         .optima = {at({1, 2, 3}, 0.0, B)},
         .notes = {"printed a, b, c are not zero at (1, 2, 3); canonical "
                   "a = 2x1^3 + 5x1x2 + 4x3 - 2x1^2 x3 - 18, "
                   "b = x1 + x2^3 + x1 x2^2 + x1 x3^2 - 22, "
                   "c = 8x1^2 + 2x2x3 + 2x2^2 + 3x2^3 - 52 adopted"},
         .body = [](A a) {
           const double x1 = a.x[0], x2 = a.x[1], x3 = a.x[2];
           const double fa = 2 * cube(x1) + 5 * x1 * x2 + 4 * x3 - 2 * x1 * x1 * x3 - 18;
           const double fb = x1 + cube(x2) + x1 * x2 * x2 + x1 * x3 * x3 - 22;
           const double fc = 8 * x1 * x1 + 2 * x2 * x3 + 2 * x2 * x2 + 3 * cube(x2) - 52;
           return sq(fa * fb * fb * fc + fa * fb * fc * fc + fb * fb + sq(x1 + x2 - x3));
         }});

  r.add({.name = "mishra-n10",
         .eq = 177,
         .title = "Mishra N.10",
         .props = "C D NS Sc M",
         .bounds = range(-10, 10),
         .optima = {at({0, 0}, 0.0, B)},
         .notes = {"labelled scalable; the formula is 2-D"},
         .body = [](A a) {
           return sq(abs(a.x[0] + a.x[1]) - abs(a.x[0]) - abs(a.x[1]));
         }});

  r.add({.name = "mishra-n11",
         .eq = 178,
         .title = "Mishra N.11",
         .aliases = {"am-gm"},
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {value_only(2.0, P), at_all(1.0, 0.0, V)},
         .notes = {"the squared AM-GM gap is non-negative and 0 whenever all |x_i| are equal; "
                   "the stated value 2 is not attained as a minimum"},
         .body = [](A a) {
           const double n = double(a.x.size());
           double s = 0.0, p = 1.0;
           for (double v : a.x) {
             s += abs(v);
             p *= abs(v);
           }
           return sq(s / n - std::pow(p, 1.0 / n));
         }});

  r.add({.name = "mishra-bird",
         .eq = 179,
         .title = "Mishra's Bird",
         .props = "C D NS Sc M",
         .bounds = range(-10, 10),
         .optima = {at({-3.1302, -1.5821}, 0.0, P),
                    at({-3.1302468, -1.58214218}, -106.7645367, V, rounded(106.7645))},
         .notes = {"f at the stated point is -106.7645, not 0"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x - y) + exp(sq(1 - sin(y))) * cos(x) + exp(sq(1 - cos(x))) * sin(y);
         }});

  r.add({.name = "muller-brown",
         .eq = 180,
         .title = "Muller Brown",
         .props = "M",
         .bounds = box({-1.5, -0.5}, {1, 2.5}),
         .constants = {"muller-brown"},
         .optima = {at({-0.5528, 1.4417}, -146.6995, B, rounded(146.6995)),
                    at({-0.55822363, 1.44172584}, -146.69951721, V, rounded(146.6995))},
         .body = [t = r.get("muller-brown")](A a) {
           double s = 0.0;
           for (std::size_t j = 0; j < 4; ++j) {
             const double dx = a.x[0] - t(j, 4), dy = a.x[1] - t(j, 5);
             s += t(j, 0) * exp(t(j, 1) * dx * dx + t(j, 2) * dx * dy + t(j, 3) * dy * dy);
           }
           return s;
         }});

  r.add({.name = "parsopoulos",
         .eq = 181,
         .title = "Parsopoulos",
         .props = "C D NS NSc M",
         .bounds = box({-11, -5}, {11, 5}),
         .alt = {range(-2, 2)},
         .optima = {at({kPi / 2, kPi}, 0.0, B), at({-kPi / 2, kPi}, 0.0, B)},
         .notes = {"printed sin(x1^2) + cos(x0^2) is about -1.2 at (pi/2, pi); canonical "
                   "cos^2(x0) + sin^2(x1) adopted; zeros at (k pi/2, m pi) for odd k"},
         .body = [](A a) { return sq(cos(a.x[0])) + sq(sin(a.x[1])); }});

  r.add({.name = "pathological",
         .eq = 182,
         .title = "Pathological",
         .props = "C D NS NSc M",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(2),
         .optima = {value_only(-1.9960, P, 0, rounded(1.996)), at_all(0.0, 0.0, V)},
         .notes = {"each summand is printed with x0 and x1; read as consecutive pairs "
                   "(x_i, x_{i+1})",
                   "each summand is at least 0, so the stated -1.9960 is unreachable"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             const double x = a.x[i], y = a.x[i + 1];
             s += 0.5 + (sq(sin(sqrt(100 * x * x + y * y))) - 0.5) /
                            (0.001 * sq(x * x - 2 * x * y + y * y) + 1.0);
           }
           return s;
         }});

  r.add({.name = "paviani",
         .eq = 183,
         .title = "Paviani",
         .props = "C D NS Sc M",
         .bounds = range(2.001, 9.999),
         .dim = DimClass::fixed(10),
         .optima = {at_all(9.3502, -45.778, B, rounded(45.778), 10)},
         .notes = {"sums and product run over 10 coordinates, so registered as 10-D",
                   "undefined outside 2 < x_i < 10"},
         .body = [](A a) {
           double s = 0.0, p = 1.0;
           for (double v : a.x) {
             if (v <= 2.0 || v >= 10.0) domain_error("paviani", "log of non-positive value");
             s += sq(log(v - 2.0)) + sq(log(10.0 - v));
             p *= v;
           }
           return s - std::pow(p, 0.2);
         }});

  r.add({.name = "pen-holder",
         .eq = 184,
         .title = "Pen Holder",
         .props = "C D NS NSc M",
         .bounds = range(-11, 11),
         .optima = {at({9.64616, 9.64616}, -0.9635, B, rounded(0.9635)),
                    at({-9.64616, 9.64616}, -0.9635, B, rounded(0.9635)),
                    at({9.64616, -9.64616}, -0.9635, B, rounded(0.9635)),
                    at({-9.64616, -9.64616}, -0.9635, B, rounded(0.9635))},
         .notes = {"printed exp(+|.|^-1) with exp(1 - r/pi) is about -8e12 at the stated "
                   "point; canonical -exp(-|cos x0 cos x1 e^|1 - r/pi||^-1) adopted"},
         .body = [](A a) { return pen_holder(a.x[0], a.x[1]); }});

  r.add({.name = "penalty-n1",
         .eq = 185,
         .title = "Penalty N.1",
         .aliases = {"penalized-n1"},
         .props = "C D NS",
         .bounds = range(-50, 50),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, -1.0, P), at_all(-1.0, 0.0, V)},
         .notes = {"stated optimum 'at 0 with f = -1' is not attained: every term is "
                   "non-negative and f(-1, ..., -1) = 0",
                   "pi/30 kept as printed (pi/n in the usual form)"},
         .body = [](A a) {
           const std::size_t n = a.x.size();
           auto y = [&](std::size_t i) { return 1.0 + 0.25 * (a.x[i] + 1.0); };
           double s = 10.0 * sq(sin(kPi * y(0)));
           for (std::size_t i = 0; i + 1 < n; ++i) {
             s += sq(y(i) - 1.0) * (1.0 + 10.0 * sq(sin(kPi * y(i + 1))));
           }
           s += sq(y(n - 1) - 1.0);
           double u = 0.0;
           for (double v : a.x) u += penalty_u(v, 10, 100, 4);
           return kPi / 30.0 * s + u;
         }});

  r.add({.name = "penalty-n2",
         .eq = 186,
         .title = "Penalty N.2",
         .aliases = {"penalized-n2"},
         .props = "C D NS",
         .bounds = range(-50, 50),
         .dim = DimClass::scalable(1),
         .optima = {value_only(1.0, P)},
         .notes = {"sin^3 terms kept as printed (sin^2 in the usual form); they can go "
                   "negative, so f(1, ..., 1) = 0 is not the minimum"},
         .body = [](A a) {
           const std::size_t n = a.x.size();
           double s = cube(sin(3 * kPi * a.x[0]));
           for (std::size_t i = 0; i + 1 < n; ++i) {
             s += sq(a.x[i] - 1.0) * (1.0 + cube(sin(3 * kPi * a.x[i + 1])));
           }
           s += sq(a.x[n - 1] - 1.0) * (1.0 + sq(sin(2 * kPi * a.x[n - 1])));
           double u = 0.0;
           for (double v : a.x) u += penalty_u(v, 5, 100, 4);
           return 0.1 * s + u;
         }});

  r.add({.name = "perez-reche",
         .eq = 187,
         .title = "Perez Reche",
         .bounds = range(-2, 2),
         .body = [](A a) { return sin(a.x[0] + a.x[1]) + sin(a.x[0]) * cos(a.x[1]); }});

  r.add({.name = "periodic",
         .eq = 188,
         .title = "Periodic",
         .props = "C D NS Sc M",
         .bounds = range(-10, 10),
         .optima = {at({0, 0}, 0.9, V)},
         .notes = {"formula identical to price-n2"},
         .body = [](A a) {
           return -0.1 * exp(-sq(a.x[0]) - sq(a.x[1])) + sq(sin(a.x[0])) + sq(sin(a.x[1])) + 1.0;
         }});

  r.add({.name = "perm",
         .eq = 189,
         .title = "Perm",
         .props = "U",
         .bounds = range_times_dim(-1, 1),
         .dim = DimClass::scalable(1),
         .params = {{"beta", 0.5}},
         .symbols = {"beta"},
         .optima = {perm_min(1), perm_min(2), perm_min(3), perm_min(4), perm_min(5)},
         .notes = {"printed double sum of (i^k + 0.5)(x_i^k - 1) squares is not 0 at "
                   "(1, 2, ..., d); canonical sum_k (sum_i (i^k + beta)((x_i/i)^k - 1))^2 "
                   "with beta = 0.5 adopted"},
         .body = [](A a) {
           const std::size_t n = a.x.size();
           double s = 0.0;
           for (std::size_t k = 1; k <= n; ++k) {
             double inner = 0.0;
             for (std::size_t i = 1; i <= n; ++i) {
               inner += (std::pow(double(i), double(k)) + a.params[0]) *
                        (std::pow(a.x[i - 1] / double(i), double(k)) - 1.0);
             }
             s += inner * inner;
           }
           return s;
         }});

  r.add({.name = "perm-n1",
         .eq = 190,
         .title = "Perm N.1",
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           const double p = cube(x) + 0.6 * x * x + 0.2 * x;
           return 6.25 * sq(p * y + 0.6) + 6.25 * sq(p * y * y + 0.6) + 6.25 * sq(p + 0.6);
         }});

  r.add({.name = "perm-0-d-beta",
         .eq = 191,
         .title = "Perm Function 0, d, beta",
         .props = "U",
         .bounds = range_times_dim(-1, 1),
         .dim = DimClass::scalable(1),
         .params = {{"beta", 10.0}},
         .symbols = {"beta"},
         .optima = {perm0_min(2, false, P), perm0_min(3, false, P), perm0_min(2, true, B),
                    perm0_min(3, true, B), perm0_min(4, true, B), perm0_min(5, true, B)},
         .notes = {"beta has no printed value; 10 used",
                   "the text corrects (1, 2, ..., d) to (1, 1/2, ..., 1/d), which is the "
                   "minimizer"},
         .body = [](A a) {
           const std::size_t n = a.x.size();
           double s = 0.0;
           for (std::size_t i = 1; i <= n; ++i) {
             double inner = 0.0;
             for (std::size_t j = 1; j <= n; ++j) {
               inner += (double(j) + a.params[0]) *
                        (std::pow(a.x[j - 1], double(i)) - 1.0 / std::pow(double(j), double(i)));
             }
             s += inner * inner;
           }
           return s;
         }});

  r.add({.name = "pinter",
         .eq = 192,
         .title = "Pinter N.1",
         .aliases = {"pinter-n1"},
         .props = "C D NS Sc M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(2),
         .constants = {"pinter.ranges"},
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"x_0 and x_{n+1} read cyclically as x_n and x_1",
                   "the printed per-variable ranges include reversed intervals, so the "
                   "search box is [-10, 10]; the table is kept as a constant"},
         .body = [](A a) {
           const long n = long(a.x.size());
           double f1 = 0.0, f2 = 0.0, f3 = 0.0;
           for (long i = 1; i <= n; ++i) f1 += double(i) * sq(cyc(a.x, i));
           for (long i = 1; i <= n - 1; ++i) {
             f2 += sq(cyc(a.x, i - 1) + 5.0 * sin(cyc(a.x, i)) + sq(cyc(a.x, i + 1)));
           }
           for (long i = 2; i <= n; ++i) {
             f3 += log(1.0 + double(i) * sq(sq(sin(cyc(a.x, i - 1))) + 2.0 * cyc(a.x, i) +
                                             3.0 * cyc(a.x, i + 1)));
           }
           return f1 + f2 + f3;
         }});

  r.add({.name = "pinter-n2",
         .eq = 193,
         .title = "Pinter N.2",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(2),
         .constants = {"pinter.ranges"},
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"f2 and f3 are printed without a summation sign; summed over i = 1..n",
                   "x_0 and x_{n+1} read cyclically as x_n and x_1"},
         .body = [](A a) {
           const long n = long(a.x.size());
           double f = 0.0;
           for (long i = 1; i <= n; ++i) {
             const double xm = cyc(a.x, i - 1), xi = cyc(a.x, i), xp = cyc(a.x, i + 1);
             f += double(i) * xi * xi;
             f += double(i) * sq(sin(xi - sin(xi) - xi + sin(xp)));
             f += double(i) * log(1.0 + double(i) * sq(xm * xm - 2.0 * xi + 3.0 * xp - cos(xi) + 1.0));
           }
           return f;
         }});

  r.add({.name = "plateau",
         .eq = 194,
         .title = "Plateau",
         .bounds = range(-5.12, 5.12),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 30.0, B)},
         .body = [](A a) {
           double s = 30.0;
           for (double v : a.x) s += abs(v);
           return s;
         }});

  r.add({.name = "powell",
         .eq = 195,
         .title = "Powell",
         .props = "C D NS Sc U",
         .bounds = range(-4, 5),
         .dim = DimClass::scalable(4, 4),
         .optima = {at({3, -1, 0, 1}, 0.0, P), at_all(0.0, 0.0, V)},
         .notes = {"f(3, -1, 0, 1) = 215; (3, -1, 0, 1) is the usual starting point and the "
                   "minimum 0 is at the origin"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t b = 0; b + 3 < a.x.size(); b += 4) {
             const double x1 = a.x[b], x2 = a.x[b + 1], x3 = a.x[b + 2], x4 = a.x[b + 3];
             s += sq(x1 + 10 * x2) + 5 * sq(x3 - x4) + pow4(x2 - 2 * x3) + 10 * pow4(x1 - x4);
           }
           return s;
         }});

  r.add({.name = "powell-singular",
         .eq = 196,
         .title = "Powell Singular",
         .aliases = {"powell-quartic"},
         .props = "C D NS Sc U",
         .bounds = range(-10, 10),
         .dim = DimClass::fixed(4),
         .optima = {at({3, -1, 0, 1}, 0.0, P), at({0, 0, 0, 0}, 0.0, V)},
         .notes = {"printed as one block over x_{i-1}..x_{i+2}; registered as the 4-D block",
                   "f(3, -1, 0, 1) = 215; the minimum 0 is at the origin"},
         .body = [](A a) {
           const double x1 = a.x[0], x2 = a.x[1], x3 = a.x[2], x4 = a.x[3];
           return sq(x1 + 10 * x2) + 5 * sq(x3 - x4) + pow4(x2 - 2 * x3) + 10 * pow4(x1 - x4);
         }});

  r.add({.name = "powell-badly-scaled",
         .eq = 197,
         .title = "Powell's Badly Scaled",
         .bounds = range(-10, 10),
         .optima = {at({1.098e-5, 9.106}, 0.0, B, rounded(0.0))},
         .body = [](A a) {
           return sq(1e4 * a.x[0] * a.x[1] - 1.0) + sq(exp(-a.x[0]) + exp(-a.x[1]) - 1.0001);
         }});

  r.add({.name = "fletcher-powell-helical-valley",
         .eq = 198,
         .title = "Fletcher-Powell's Helical Valley",
         .bounds = range(-100, 100),
         .dim = DimClass::fixed(3),
         .optima = {at({1, 0, 0}, 0.0, B)},
         .notes = {"printed 100 theta kept (10 theta in helical-valley)"},
         .body = [](A a) {
           const double x1 = a.x[0], x2 = a.x[1], x3 = a.x[2];
           if (x1 == 0.0) domain_error("fletcher-powell-helical-valley", "theta at x1 = 0");
           const double theta =
               (x1 >= 0.0 ? std::atan(x2 / x1) : kPi + std::atan(x2 / x1)) / (2.0 * kPi);
           return 100.0 * (sq(x3 - 100.0 * theta) + sq(sqrt(x1 * x1 + x2 * x2) - 1.0)) + x3 * x3;
         }});

  r.add({.name = "powell-sum",
         .eq = 199,
         .title = "Powell Sum",
         .props = "C D S Sc M",
         .bounds = range(-1, 1),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) s += std::pow(abs(a.x[i]), double(i + 2));
           return s;
         }});

  r.add({.name = "power-sum",
         .eq = 200,
         .title = "Power Sum",
         .props = "U",
         .bounds = range(0, 4),
         .dim = DimClass::fixed(4),
         .constants = {"power-sum.b"},
         .optima = {at({1, 2, 2, 3}, 0.0, B)},
         .notes = {"b is given for d = 4 only, so registered as 4-D with range [0, d]"},
         .body = [b = r.get("power-sum.b")](A a) {
           double s = 0.0;
           for (std::size_t i = 1; i <= 4; ++i) {
             double in = 0.0;
             for (double v : a.x) in += std::pow(v, double(i));
             s += sq(in - b[i - 1]);
           }
           return s;
         }});

  r.add({.name = "price-n1",
         .eq = 201,
         .title = "Price N.1",
         .props = "C ND S NSc M",
         .bounds = range(-10, 10),
         .optima = {at({5, 5}, 0.0, B), at({-5, 5}, 0.0, B), at({5, -5}, 0.0, B),
                    at({-5, -5}, 0.0, B)},
         .notes = {"also known as Becker-Lago; kept separate from becker-lago"},
         .body = [](A a) { return sq(abs(a.x[0]) - 5.0) + sq(abs(a.x[1]) - 5.0); }});

  r.add({.name = "price-n2",
         .eq = 202,
         .title = "Price N.2",
         .props = "C D NS NSc M",
         .bounds = range(-10, 0),
         .optima = {value_only(0.0, P), at({0, 0}, 0.9, V)},
         .notes = {"stated point (1, 2, 2, 3) has four coordinates; f >= 0.9 everywhere",
                   "formula identical to periodic"},
         .body = [](A a) {
           return -0.1 * exp(-sq(a.x[0]) - sq(a.x[1])) + sq(sin(a.x[0])) + sq(sin(a.x[1])) + 1.0;
         }});

  r.add({.name = "price-n3",
         .eq = 203,
         .title = "Price N.3",
         .aliases = {"price-rosenbrock"},
         .props = "C D NS NSc M",
         .optima = {at({0.3413, 0.1164}, 0.0, B, rounded(0.0)), at({1, 1}, 0.0, B)},
         .notes = {"printed 6.4((x2 - 0.5)^2 - x1 - 0.6)^2 is 11.66 at (1, 1); canonical "
                   "(6.4 (x2 - 0.5)^2 - x1 - 0.6)^2 adopted"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return 100.0 * sq(y - x * x) + sq(6.4 * sq(y - 0.5) - x - 0.6);
         }});

  r.add({.name = "price-n4",
         .eq = 204,
         .title = "Price N.4",
         .props = "C D S Sc M",
         .bounds = range(-500, 500),
         .optima = {at({0, 0}, 0.0, B), at({2, 4}, 0.0, B),
                    at({1.4643, 2.5060}, 0.0, P, rounded(0.0)),
                    at({1.4643521196636984, -2.5060127607816622}, 0.0, V)},
         .notes = {"third claimed zero has the wrong sign on x1; the zero is at (1.4644, -2.5060)"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(2 * cube(x) * y - cube(y)) + sq(6 * x - y * y + y);
         }});

  r.add({.name = "qing",
         .eq = 205,
         .title = "Qing",
         .props = "C D S Sc M",
         .bounds = range(-500, 500),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, P), qing_min(1), qing_min(2), qing_min(3), qing_min(5),
                    qing_min(10)},
         .notes = {"f(0) = sum i^2; the zeros are x_i = +-sqrt(i)"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) s += sq(sq(a.x[i]) - double(i + 1));
           return s;
         }});

  r.add({.name = "qing-variant",
         .eq = 206,
         .title = "Qing Variant",
         .bounds = range(-500, 500),
         .optima = {at({0, 0}, 0.0, P), at({1, std::sqrt(2.0)}, 0.0, B)},
         .notes = {"f(0, 0) = 5; zeros at (+-1, +-sqrt 2)"},
         .body = [](A a) { return sq(sq(a.x[0]) - 1.0) + sq(sq(a.x[1]) - 2.0); }});

  r.add({.name = "qing-n2",
         .eq = 207,
         .title = "Qing N.2",
         .bounds = range(-500, 500),
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(sin(x)) + sq(sin(y)) - cos(std::sqrt(2.0) * y / 2.0) * cos(x) +
                  x * x / 4000.0 + y * y / 4000.0 + 1.0;
         }});

  r.add({.name = "quadratic",
         .eq = 208,
         .title = "Quadratic",
         .props = "C D NS NSc M",
         .bounds = range(-1.28, 1.28),
         .alt = {range(-10, 10)},
         .optima = {at({0.1938, 0.4851}, -3873.7241, B, rounded(3873.7241))},
         .notes = {"printed coefficients (128.018 x0^2, +138.082 x0) give -3820.2 at the "
                   "stated point; canonical 128.08 x0^2 - 138.08 x0 adopted"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return -3803.84 - 138.08 * x - 232.92 * y + 128.08 * x * x + 203.64 * y * y +
                  182.25 * x * y;
         }});

  r.add({.name = "quartic",
         .eq = 209,
         .title = "Quartic",
         .props = "C D S Sc",
         .bounds = range(-1.28, 1.28),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"prose describes random coefficients; the printed formula has none "
                   "(quartic-variant carries the noise)"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) s += double(i + 1) * pow4(a.x[i]);
           return s;
         }});

  r.add({.name = "quartic-2d",
         .eq = 209,
         .title = "Quartic (2-D form)",
         .bounds = range(-1.28, 1.28),
         .optima = {at({-0.5, -0.5}, -0.375, V)},
         .notes = {"printed 2-D form adds linear terms x/2 and is a different function"},
         .body = [](A a) {
           return pow4(a.x[0]) + a.x[0] / 2.0 + pow4(a.x[1]) + a.x[1] / 2.0;
         }});

  r.add({.name = "quartic-variant",
         .eq = 210,
         .title = "Quartic Variant",
         .aliases = {"quartic-noise"},
         .props = "stoch",
         .bounds = range(-1.28, 1.28),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, P)},
         .notes = {"random[0, 1] drawn uniform on [0, 1) per evaluation"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) s += double(i + 1) * pow4(a.x[i]);
           return s + a.rng->uniform(0.0, 1.0);
         }});

  r.add({.name = "quintic",
         .eq = 211,
         .title = "Quintic",
         .props = "C D S NSc M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {at_all(-1.0, 0.0, B), at_all(2.0, 0.0, B)},
         .notes = {"summand printed with x0; read per coordinate x_i"},
         .body = [](A a) {
           double s = 0.0;
           for (double x : a.x) {
             s += abs(std::pow(x, 5) - 3 * pow4(x) + 4 * cube(x) + 2 * x * x - 10 * x - 4);
           }
           return s;
         }});

  r.add({.name = "quintic-2d",
         .eq = 211,
         .title = "Quintic (2-D form)",
         .bounds = range(-10, 10),
         .notes = {"printed second form without absolute values; unbounded below"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return std::pow(x, 5) - 4 * cube(x) + 2 * x * x - 10 * x + std::pow(y, 5) -
                  4 * cube(y) + 2 * y * y - 10 * y - 8;
         }});

  r.add({.name = "rana",
         .eq = 212,
         .title = "Rana",
         .props = "C D NS Sc M",
         .bounds = range(-500, 500),
         .dim = DimClass::scalable(2),
         .optima = {at_all(-500.0, -928.5478, B, rounded(928.5478), 3)},
         .notes = {"printed as one summand in x_i, x_{i+1}; summed over i = 1..n-1",
                   "the stated value holds for n = 3"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             const double x = a.x[i], y = a.x[i + 1];
             const double p = sqrt(abs(y + x + 1.0)), m = sqrt(abs(y - x + 1.0));
             s += (y + 1.0) * sin(p) * cos(m) + x * sin(m) * cos(p);
           }
           return s;
         }});

  r.add({.name = "rastrigin",
         .eq = 213,
         .title = "Rastrigin",
         .props = "NS M",
         .bounds = range(-5.12, 5.12),
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"prose calls it non-separable; the sum is additively separable"},
         .body = [](A a) { return rastrigin(a.x); }});

  r.add({.name = "rastrigin-modified",
         .eq = 214,
         .title = "Rastrigin Modified",
         .aliases = {"extended-rastrigin"},
         .bounds = range(-5.12, 5.12),
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) { return rastrigin(a.x); }});

  r.add({.name = "rayleigh",
         .eq = 215,
         .title = "Rayleigh",
         .optima = {at({0, 0}, -1.0, V)},
         .body = [](A a) {
           const double r2 = sq(a.x[0]) + sq(a.x[1]);
           return sqrt(r2) - exp(-r2);
         }});

  r.add({.name = "ridge",
         .eq = 216,
         .title = "Ridge",
         .optima = {at({0, 0}, 0.0, V)},
         .body = [](A a) { return sq(a.x[0]) + 0.1 * sq(a.x[1]); }});

  r.add({.name = "ripple",
         .eq = 217,
         .title = "Ripple",
         .props = "NS",
         .bounds = range(0, 1),
         .optima = {at({0.1, 0.1}, -2.2, B)},
         .body = [](A a) { return ripple_term(a.x[0], true) + ripple_term(a.x[1], true); }});

  r.add({.name = "ripple-25",
         .eq = 218,
         .title = "Ripple N.25",
         .props = "NS",
         .bounds = range(0, 1),
         .optima = {at({0.1, 0.1}, -2.0, B)},
         .body = [](A a) { return ripple_term(a.x[0], false) + ripple_term(a.x[1], false); }});

  r.add({.name = "rosenbrock",
         .eq = 219,
         .title = "Rosenbrock",
         .aliases = {"banana", "rosenbrocks-valley", "fletcher"},
         .props = "C D NS Sc U",
         .bounds = range(-5, 5),
         .alt = {range(-5, 10), range(-2.048, 2.048)},
         .dim = DimClass::scalable(2),
         .tier = 1,
         .optima = {at_all(1.0, 0.0, B)},
         .notes = {"also called Leon in the text; leon is registered separately"},
         .body = [](A a) { return rosenbrock(a.x); }});

  r.add({.name = "rosenbrock-modified",
         .eq = 220,
         .title = "Rosenbrock Modified",
         .props = "C D NS NSc M",
         .bounds = range(-5, 2.5),
         .optima = {at({-0.9, -0.95}, 34.37, P, rounded(34.37)),
                    at({-0.90955374, -0.95057171}, 34.04024310664, V)},
         .notes = {"the stated point is rounded; the minimum is 34.0402 at "
                   "(-0.90955, -0.95057)"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return 74.0 + 100.0 * sq(y - x * x) + sq(1.0 - x) -
                  400.0 * exp(-(sq(x + 1.0) + sq(y + 1.0)) / 0.1);
         }});

  r.add({.name = "rosenbrock-sine",
         .eq = 221,
         .title = "Rosenbrock with Additional Sine Terms",
         .bounds = range(-10, 10),
         .notes = {"stated minimizer (1, ..., 1) has no value and is not stationary: the sine "
                   "terms have slope 2 pi there"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return 100.0 * sq(y - x * x) + sq(1.0 - x) + sin(2 * kPi * x) + sin(2 * kPi * y);
         }});

  r.add({.name = "rotated-ellipse",
         .eq = 222,
         .title = "Rotated Ellipse",
         .props = "C D NS NSc U",
         .bounds = range(-500, 500),
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) {
           return 7 * sq(a.x[0]) - 6 * std::sqrt(3.0) * a.x[0] * a.x[1] + 13 * sq(a.x[1]);
         }});

  r.add({.name = "rotated-ellipse-n2",
         .eq = 223,
         .title = "Rotated Ellipse N.2",
         .props = "C D NS NSc U",
         .bounds = range(-500, 500),
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) { return sq(a.x[0]) - a.x[0] * a.x[1] + sq(a.x[1]); }});

  r.add({.name = "rotated-hyper-ellipsoid",
         .eq = 224,
         .title = "Rotated Hyper Ellipsoid",
         .bounds = range(-65.536, 65.536),
         .dim = DimClass::scalable(2),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"outer sum printed to d - 1, so the last coordinate does not enter; kept "
                   "as printed"},
         .body = [](A a) {
           double s = 0.0, c = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             c += sq(a.x[i]);
             s += c;
           }
           return s;
         }});

  r.add({.name = "rump",
         .eq = 225,
         .title = "Rump",
         .props = "C D NS NSc U",
         .bounds = range(-500, 500),
         .optima = {at({0, 0}, 0.0, P)},
         .notes = {"x0 / (2 x1) is undefined at the stated minimizer"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           if (y == 0.0) domain_error("rump", "x0 / (2 x1) at x1 = 0");
           return (333.75 - x * x) * pow6(y) + (11 * x * x * y * y - 121 * pow4(y) - 2) * x * x +
                  x / (2 * y) + 5.5 * sq(pow4(y));
         }});

  r.add({.name = "salomon",
         .eq = 226,
         .title = "Salomon",
         .props = "C D NS Sc M",
         .bounds = range(-20, 20),
         .alt = {range(-100, 100)},
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {at_all(0.0, 0.0, B)},
         .body = [](A a) {
           const double rr = sqrt(sum_sq(a.x));
           return 1.0 - cos(2.0 * kPi * rr) + 0.1 * rr;
         }});

  r.add({.name = "sargan",
         .eq = 227,
         .title = "Sargan",
         .props = "C D NS Sc M",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, P)},
         .notes = {"printed with a leading minus, which makes the function unbounded below; "
                   "kept as printed"},
         .body = [](A a) {
           const double n = double(a.x.size());
           double tot = 0.0;
           for (double v : a.x) tot += v;
           double s = 0.0;
           for (double v : a.x) s += n * v * v + 0.4 * v * (tot - v);
           return -s;
         }});

  r.add({.name = "sawtooth",
         .eq = 228,
         .title = "Sawtooth",
         .bounds = range(-20, 20),
         .tier = 3,
         .tier_reason = "t = 2(x2, x1) is a pair, not a scalar, so h(t) is undefined",
         .optima = {at({0, 0}, 0.0, P)}});

  r.add({.name = "schaffer-n1",
         .eq = 229,
         .title = "Schaffer N.1",
         .props = "C D NS NSc U",
         .bounds = range(-100, 100),
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return (sq(sin(x * x + y * y)) - 0.5) / schaffer_den(x, y) + 0.5;
         }});

  r.add({.name = "schaffer-n2",
         .eq = 230,
         .title = "Schaffer N.2",
         .props = "C D NS NSc U",
         .bounds = range(-100, 100),
         .tier = 1,
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return (sq(sin(x * x - y * y)) - 0.5) / schaffer_den(x, y) + 0.5;
         }});

  r.add({.name = "schaffer-n3",
         .eq = 231,
         .title = "Schaffer N.3",
         .props = "C D NS NSc U",
         .bounds = range(-100, 100),
         .optima = {at({0, 1.2531}, 0.00156, B, rounded(0.00156))},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return (sq(sin(cos(x * x - y * y))) - 0.5) / schaffer_den(x, y) + 0.5;
         }});

  r.add({.name = "schaffer-n4",
         .eq = 232,
         .title = "Schaffer N.4",
         .props = "C D NS NSc U",
         .bounds = range(-100, 100),
         .optima = {at({0, 1.2531}, 0.2925, B, rounded(0.2925))},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return (sq(cos(sin(x * x - y * y))) - 0.5) / schaffer_den(x, y) + 0.5;
         }});

  r.add({.name = "schaffer-n7",
         .eq = 233,
         .title = "Schaffer N.7",
         .bounds = range(-100, 100),
         .optima = {at({0, 0}, 0.0, B)},
         .notes = {"printed bracket 50 r^0.2 + 1 has no sine; kept as printed"},
         .body = [](A a) {
           const double r2 = sq(a.x[0]) + sq(a.x[1]);
           return std::pow(r2, 0.25) * (50.0 * std::pow(r2, 0.1) + 1.0);
         }});

  r.add({.name = "schaffer-f6",
         .eq = 234,
         .title = "Expanded Schaffer's F6",
         .aliases = {"expanded-schaffer-f6"},
         .props = "C D NS Sc M",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(2),
         .tier = 1,
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"printed for (x0, x1); the expanded form sums it over consecutive pairs"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             s += schaffer_f6_pair(a.x[i], a.x[i + 1]);
           }
           return s;
         }});

  r.add({.name = "schaffer-f7",
         .eq = 235,
         .title = "Schaffer F7",
         .dim = DimClass::scalable(2),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"Lambda^10, Q, T_asy and R taken as identity with x_opt = 0 and f_opt = 0; "
                   "f_pen undefined in the text, taken as sum max(0, |x_i| - 5)^2",
                   "s_i uses x_i and x_{i+1}, so i runs to D - 1"},
         .simplified = true,
         .body = [](A a) { return schaffer_f7(a.x); }});

  r.add({.name = "schaffer-f7-n1",
         .eq = 236,
         .title = "Schaffer F7 N.1",
         .dim = DimClass::scalable(2),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"identical to schaffer-f7 once Lambda^1000 and the other transforms are "
                   "identity"},
         .simplified = true,
         .body = [](A a) { return schaffer_f7(a.x); }});

  r.add({.name = "schmidt-vetters",
         .eq = 237,
         .title = "Schmidt Vetters",
         .props = "C D NS NSc M",
         .bounds = range(0, 10),
         .dim = DimClass::fixed(3),
         .optima = {at_all(0.7854, 3.0, P, rounded(3.0), 3)},
         .notes = {"printed form is about 2.733 at x_i = 0.7854; canonical "
                   "1/(1 + (x1 - x2)^2) + sin((pi x2 + x3)/2) + e^(((x1 + x3)/x2 - 2)^2) "
                   "adopted",
                   "0.7854 is a stationary point, not a minimum"},
         .body = [](A a) {
           const double x1 = a.x[0], x2 = a.x[1], x3 = a.x[2];
           if (x2 == 0.0) domain_error("schmidt-vetters", "division by x2 = 0");
           return 1.0 / (1.0 + sq(x1 - x2)) + sin((kPi * x2 + x3) / 2.0) +
                  exp(sq((x1 + x3) / x2 - 2.0));
         }});

  r.add({.name = "schumer-steiglitz",
         .eq = 238,
         .title = "Schumer Steiglitz",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += pow4(v);
           return s;
         }});

  r.add({.name = "schwefel",
         .eq = 239,
         .title = "Schwefel",
         .props = "C D Sc U",
         .bounds = range(-500, 500),
         .alt = {range(-100, 100)},
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {at_all(420.9687, 0.0, B, 1e-3)},
         .notes = {"printed summand uses x0 inside the sine and x_i outside; read as "
                   "sum x_i sin(sqrt|x_i|) with the 418.9829 d shift",
                   "labelled unimodal and partially separable; the sum is separable and "
                   "highly multimodal",
                   "the residual at 420.9687 is about 1.3e-5 per coordinate"},
         .body = [](A a) {
           double s = 418.9829 * double(a.x.size());
           for (double v : a.x) s -= v * sin(sqrt(abs(v)));
           return s;
         }});

  r.add({.name = "schwefel-1-2",
         .eq = 240,
         .title = "Schwefel 1.2",
         .aliases = {"double-sum"},
         .props = "C D NS Sc M",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"the text also calls it Expanded Schaffer's F6 and Rotated Hyper-Ellipsoid, "
                   "names registered to other entries"},
         .body = [](A a) { return schwefel_1_2(a.x); }});
}

}  // namespace optbench::detail
