#include <algorithm>
#include <cmath>

#include "optbench/dynamic.hpp"
#include "registry.hpp"

namespace optbench::detail {
namespace {

using A = const EvalArgs&;
using std::abs;
using std::cos;
using std::exp;
using std::sin;
using std::sqrt;

double dixon_price(std::span<const double> x) {
  double s = sq(x[0] - 1.0);
  for (std::size_t i = 1; i < x.size(); ++i) s += double(i + 1) * sq(2.0 * x[i] * x[i] - x[i - 1]);
  return s;
}

// x_i = 2^(-(2^i - 2) / 2^i), i = 1..n
OptimumRecord dixon_price_min(std::size_t n) {
  Vec loc(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double p = std::ldexp(1.0, int(i));
    loc[i - 1] = std::pow(2.0, -(p - 2.0) / p);
  }
  return at(std::move(loc), 0.0, B);
}

double drop_wave(double x, double y, double denom) {
  return (-1.0 + cos(12.0 * sqrt(x * x + y * y))) / denom;
}

double eggholder(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i], b = x[i + 1];
    s += -(b + 47.0) * sin(sqrt(abs(b + a / 2.0 + 47.0))) - a * sin(sqrt(abs(a - (b + 47.0))));
  }
  return s;
}

double goldstein_price(double x, double y) {
  return (sq(2 * x - 3 * y) * (12 * x * x - 36 * x * y - 32 * x + 27 * y * y + 48 * y + 18) + 30) *
         (sq(x + y + 1) * (3 * x * x + 6 * x * y - 14 * x + 3 * y * y - 14 * y + 19) + 1);
}

double gramacy_lee_term(const char* name, double x) {
  if (x == 0.0) domain_error(name, "sin(10 pi x) / (2x) at x = 0");
  return pow4(x - 1.0) + sin(10.0 * kPi * x) / (2.0 * x);
}

double hosaki_poly(double x) {
  return 1.0 - 8.0 * x + 7.0 * x * x - 7.0 / 3.0 * cube(x) + 0.25 * pow4(x);
}

double holder_exp(double x, double y) { return exp(abs(1.0 - sqrt(x * x + y * y) / kPi)); }

double keane_num(double x, double y) { return sq(sin(x - y)) * sq(sin(x + y)); }

// u_i = 25 + (-50 ln(0.01 i))^(1/1.5), i = 1..99
double gulf_u(int i) { return 25.0 + std::pow(-50.0 * std::log(0.01 * i), 1.0 / 1.5); }

double levy_w(double x) { return 1.0 + (x - 1.0) / 4.0; }

}  // namespace

void register_group_2(Registry& r) {
  r.add({.name = "devillers-glasser",
         .eq = 81,
         .title = "Devillers Glasser",
         .props = "C D NS NSc U",
         .body = [](A a) { return 1.0 / (25.0 * sq(a.x[0]) + 25.0 * sq(a.x[1]) + 1.0); }});

  r.add({.name = "devillers-glasser-n1",
         .eq = 82,
         .title = "Devillers Glasser N.1",
         .props = "C D NS NSc M",
         .bounds = range(-500, 500),
         .dim = DimClass::fixed(4),
         .optima = {at({60.137 * 1.371, std::pow(1.371, 10.0), 3.112, 1.761}, 0.0, B)},
         .notes = {"printed data y_i = 60.137 (1.371^i) sin(...) is matched exactly by "
                   "x = (60.137 * 1.371, 1.371^10, 3.112, 1.761); the usual statement with "
                   "(60.137, 1.371, ...) belongs to y_i = 60.137 (1.371^t_i) sin(...)"},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 24; ++i) {
             const double t = 0.1 * (i - 1);
             const double y = 60.137 * std::pow(1.371, i) * sin(3.112 * t + 1.761);
             s += sq(a.x[0] * std::pow(a.x[1], t) * sin(a.x[2] * t + a.x[3]) - y);
           }
           return s;
         }});

  r.add({.name = "devillers-glasser-n2",
         .eq = 83,
         .title = "Devillers Glasser N.2",
         .props = "C D NS NSc M",
         .bounds = range(1, 60),
         .dim = DimClass::fixed(5),
         .optima = {value_only(0.0, P)},
         .notes = {"data term printed as 53.81 (1.27 t_i) and cos(e^(0.507 t_i)); no minimizer "
                   "printed, claim kept unverified"},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 24; ++i) {
             const double t = 0.1 * (i - 1);
             const double y = 53.81 * (1.27 * t) * std::tanh(3.012 * t + sin(2.13 * t)) *
                              cos(exp(0.507 * t));
             s += sq(a.x[0] * std::pow(a.x[1], t) * std::tanh(a.x[2] * t + sin(a.x[3] * t)) *
                         cos(t * exp(a.x[4])) -
                     y);
           }
           return s;
         }});

  r.add({.name = "discus",
         .eq = 84,
         .title = "Discus",
         .props = "U",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"T_osz and R taken as identity with x_opt = 0 and f_opt = 0"},
         .simplified = true,
         .body = [](A a) {
           double s = 1e6 * sq(a.x[0]);
           for (std::size_t i = 1; i < a.x.size(); ++i) s += sq(a.x[i]);
           return s;
         }});

  r.add({.name = "dixon-coles",
         .eq = 85,
         .title = "Dixon Coles",
         .bounds = range(-10, 10),
         .optima = {at({1, -1}, 0.0, V)},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x - 1) + sq(-x * x + x) + sq(y + 1) + sq(y * y + y);
         }});

  r.add({.name = "dixon-price",
         .eq = 86,
         .title = "Dixon Price",
         .props = "C D NS Sc U",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {at_all(1.0, 0.0, P), dixon_price_min(1), dixon_price_min(2),
                    dixon_price_min(3), dixon_price_min(5), dixon_price_min(10)},
         .notes = {"sum printed from i = 2 with x_0 as the first coordinate; read with 1-based "
                   "indices, weights i = 2..n",
                   "claimed minimizer (1, ..., 1) gives f = sum_{i>=2} i > 0; the minimizer is "
                   "x_i = 2^(-(2^i - 2) / 2^i) with f = 0"},
         .body = [](A a) { return dixon_price(a.x); }});

  r.add({.name = "dixon-price-n2",
         .eq = 87,
         .title = "Dixon Price N.2",
         .bounds = range(-10, 10),
         .optima = {at({1, std::sqrt(0.5)}, 0.0, V)},
         .notes = {"formula identical to dixon-price-n3"},
         .body = [](A a) { return 2 * sq(-a.x[0] + 2 * sq(a.x[1])) + sq(a.x[0] - 1); }});

  r.add({.name = "dixon-price-n3",
         .eq = 88,
         .title = "Dixon Price N.3",
         .bounds = range(-10, 10),
         .optima = {at({1, std::sqrt(0.5)}, 0.0, V)},
         .notes = {"formula identical to dixon-price-n2"},
         .body = [](A a) { return 2 * sq(-a.x[0] + 2 * sq(a.x[1])) + sq(a.x[0] - 1); }});

  r.add({.name = "dixon-price-n4",
         .eq = 89,
         .title = "Dixon Price N.4",
         .bounds = range(-10, 10),
         .body = [](A a) {
           return 3 * sq(-a.x[0] + 2 * sq(a.x[1])) + sq(a.x[0] - 1) + sq(a.x[1] - 1);
         }});

  r.add({.name = "dixon-price-n5",
         .eq = 90,
         .title = "Dixon Price N.5",
         .bounds = range(-10, 10),
         .optima = {value_only(0.0, P), at({1, std::sqrt(0.5)}, 0.0, V)},
         .body = [](A a) { return sq(-a.x[0] + 2 * sq(a.x[1])) + sq(a.x[0] - 1); }});

  r.add({.name = "dixon-price-rosenbrock",
         .eq = 91,
         .title = "Dixon-Price-Rosenbrock",
         .bounds = range(-30, 30),
         .dim = DimClass::scalable(2),
         .optima = {at_all(1.0, 0.0, V)},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             const double u = a.x[i + 1] - a.x[i] * a.x[i], v = a.x[i] - 1.0;
             s += 100.0 * sq(pow4(u)) + sq(pow4(v));
           }
           return s;
         }});

  r.add({.name = "dolan",
         .eq = 92,
         .title = "Dolan",
         .props = "C D NS NSc M",
         .bounds = range(-100, 100),
         .dim = DimClass::fixed(5),
         .optima = {at({8.3904, 4.8142, 7.3457, 68.8824, 3.8547}, -1.0, P, rounded(1.0))},
         .notes = {"second claim '(7.8102) with f = -703.72878' has one coordinate for a 5-D "
                   "function; not recorded",
                   "prose mentions hyperbolic tangents absent from the formula"},
         .body = [](A a) {
           const double x1 = a.x[0], x2 = a.x[1], x3 = a.x[2], x4 = a.x[3], x5 = a.x[4];
           return (x1 + 1.7 * x2) * sin(x1) - 1.5 * x3 - 0.1 * x4 * cos(x4 + x5 - x1) +
                  0.2 * x5 * x5 - x2 - 1.0;
         }});

  r.add({.name = "drop-wave",
         .eq = 93,
         .title = "Drop Wave",
         .props = "C D NS NSc M",
         .bounds = range(-5.12, 5.12),
         .tier = 1,
         .optima = {at({0, 0}, 0.0, P), at({0.0, 0.2609011326474617}, -0.99153430991736, V),
                    at({0.0, -0.2609011326474617}, -0.99153430991736, V)},
         .notes = {"claimed f(0) = 0 is not the minimum: the numerator reaches -2 on the ring "
                   "12 r = pi, lowest where x0 = 0 (denominator smallest)",
                   "no record reproduces the claimed value at a true minimizer, so this entry "
                   "carries stated and verified records separately"},
         .body = [](A a) {
           return drop_wave(a.x[0], a.x[1], 0.5 * (sq(a.x[0]) + 0.5 * sq(a.x[1])) + 2.0);
         }});

  r.add({.name = "drop-wave-n2",
         .eq = 94,
         .title = "Drop Wave N.2",
         .props = "C D NS NSc M",
         .bounds = range(-5.12, 5.12),
         .optima = {at({0.2600237494087512, 0.0}, -0.9832662644268856, V)},
         .body = [](A a) {
           return drop_wave(a.x[0], a.x[1], 0.5 * sq(a.x[0]) + 0.5 * sq(a.x[1]) + 2.0);
         }});

  r.add({.name = "dynamic-deceptive-basin",
         .eq = 95,
         .title = "Dynamic Deceptive Basin",
         .aliases = {"ddb"},
         .props = "C D NS Sc M stoch dyn",
         .dim = DimClass::scalable(2),
         .tier = 1,
         .notes = {"theta starts at 0 and takes one Gaussian random-walk step (sd 0.05) per "
                   "evaluation; noise N(0, 0.1) read with 0.1 as the standard deviation",
                   "no optimum is stated and the landscape moves, so no optimum record"},
         .body =
             [](A a) {
               const Vec theta(a.x.size(), 0.0);
               return ddb_value(a.x, theta) + a.rng->normal(0.0, kDdbNoiseSd);
             },
         .state = [](std::size_t dim, std::uint64_t seed) {
           return make_dynamic_body(DynamicKind::ddb, dim, seed);
         }});

  r.add({.name = "complex-dynamic-deceptive-basin",
         .eq = 96,
         .title = "Complex Dynamic Deceptive Basin",
         .aliases = {"cddb"},
         .props = "Sc M stoch dyn",
         .dim = DimClass::scalable(1),
         .tier = 1,
         .notes = {"x_i^(theta_i + n) evaluated as sign(x_i) |x_i|^(theta_i + n); 0^0 = 1",
                   "noise sd 0.1 (1 + |sin(mean f over the history buffer)|); the printed "
                   "amplitude phrase is not a well-formed expression",
                   "values clamped to +-1e308",
                   "the restatement in the discussion section (division by 0.1|x_2 theta_n| "
                   "and a sum of theta_i^2) differs from the numbered equation; the numbered "
                   "equation is implemented"},
         .body =
             [](A a) {
               const Vec theta(a.x.size(), 0.0);
               return cddb_value(a.x, theta) + a.rng->normal(0.0, 0.1);
             },
         .state = [](std::size_t dim, std::uint64_t seed) {
           return make_dynamic_body(DynamicKind::cddb, dim, seed);
         }});

  r.add({.name = "easom",
         .eq = 97,
         .title = "Easom",
         .props = "C D S Sc M",
         .bounds = range(-100, 100),
         .alt = {range(-40, 40), range(-10, 10)},
         .tier = 1,
         .optima = {at({kPi, kPi}, -1.0, B)},
         .notes = {"labelled scalable but the formula uses only x0 and x1; registered as 2-D",
                   "labelled separable; the exponential couples nothing but the cos product "
                   "makes it multiplicatively, not additively, separable"},
         .body = [](A a) {
           return -exp(-sq(a.x[0] - kPi) - sq(a.x[1] - kPi)) * cos(a.x[0]) * cos(a.x[1]);
         }});

  r.add({.name = "easom-noise",
         .eq = 98,
         .title = "Easom with Noise",
         .bounds = range(-100, 100),
         .optima = {at({kPi, kPi}, -0.5, V)},
         .notes = {"the 'noise' is the constant offset +1/2; registered deterministic"},
         .body = [](A a) {
           return -exp(-sq(a.x[0] - kPi) - sq(a.x[1] - kPi)) * cos(a.x[0]) * cos(a.x[1]) + 0.5;
         }});

  r.add({.name = "egg-box",
         .eq = 99,
         .title = "Egg Box",
         .props = "M",
         .bounds = range(-10, 10),
         .optima = {at({0, 0}, -243.0, B)},
         .notes = {"printed range [-243, -1] is the value range; search box [-10, 10] chosen"},
         .body = [](A a) {
           return -std::pow(cos(a.x[0] / 2.0) * cos(a.x[1] / 2.0) + 2.0, 5.0);
         }});

  r.add({.name = "egg-crate",
         .eq = 100,
         .title = "Egg Crate",
         .props = "C D S NSc M",
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) {
           return 25 * sq(sin(a.x[0])) + 25 * sq(sin(a.x[1])) + sq(a.x[0]) + sq(a.x[1]);
         }});

  r.add({.name = "eggholder",
         .eq = 101,
         .title = "Egg Holder",
         .aliases = {"egg-holder"},
         .props = "C D NS Sc M",
         .bounds = range(-512, 512),
         .dim = DimClass::scalable(2),
         .optima = {at({512, 404.2319}, -959.6407, B, rounded(959.6407))},
         .body = [](A a) { return eggholder(a.x); }});

  r.add({.name = "eggholder-noise",
         .eq = 102,
         .title = "Eggholder with Noise",
         .bounds = range(-512, 512),
         .dim = DimClass::scalable(2),
         .optima = {at({512, 404.2319}, -959.1407, V, rounded(959.1407))},
         .notes = {"the 'noise' is the constant offset +0.5; registered deterministic"},
         .body = [](A a) { return eggholder(a.x) + 0.5; }});

  r.add({.name = "el-attar-vidyasagar-dutta",
         .eq = 103,
         .title = "El Attar Vidyasagar Dutta",
         .props = "C D NS NSc U",
         .bounds = range(-500, 500),
         .optima = {at({3.409, -2.171}, 1.7127, B, rounded(1.7127))},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x * x + y - 10) + sq(x + y * y - 7) + sq(x * x + cube(y) - 1);
         }});

  r.add({.name = "elliptic",
         .eq = 104,
         .title = "Elliptic",
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) { return 1000000.0 * sq(a.x[0]) + sq(a.x[1]); }});

  r.add({.name = "elliptic-n2",
         .eq = 105,
         .title = "Elliptic N.2",
         .optima = {at({0, 1}, 5.0, P), at({1, 0}, 5.0, B)},
         .notes = {"f(0, 1) = 13; the value 5 is attained at (1, 0)"},
         .body = [](A a) {
           return sq(sq(a.x[1]) + 1) + sq(sq(a.x[0]) - 2 * a.x[0] + 3);
         }});

  r.add({.name = "exp-2",
         .eq = 106,
         .title = "Exp 2",
         .bounds = range(0, 20),
         .optima = {at({0, 0}, 0.0, P), at({1, 10}, 0.0, B)},
         .notes = {"printed per-coordinate sum gives f(0) = 36 per coordinate; canonical 2-D "
                   "form sum_{i=0}^{9} (e^(-i x0/10) - 5 e^(-i x1/10) - e^(-i/10) + 5 e^(-i))^2 "
                   "adopted, minimum 0 at (1, 10)"},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 0; i <= 9; ++i) {
             s += sq(exp(-i * a.x[0] / 10.0) - 5.0 * exp(-i * a.x[1] / 10.0) - exp(-i / 10.0) +
                     5.0 * exp(-double(i)));
           }
           return s;
         }});

  r.add({.name = "exponential",
         .eq = 107,
         .title = "Exponential",
         .props = "C D NS Sc M",
         .bounds = range(-1, 1),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, -1.0, B)},
         .body = [](A a) { return -exp(-0.5 * sum_sq(a.x)); }});

  r.add({.name = "exponential-noise",
         .eq = 108,
         .title = "Exponential Noise",
         .bounds = range(-1, 1),
         .optima = {at({0, 0}, 0.5, V)},
         .notes = {"printed body is a shifted quadratic, not an exponential; the 'noise' is the "
                   "constant +1/2; registered deterministic"},
         .body = [](A a) { return sq(a.x[0]) + sq(a.x[1]) + 0.5; }});

  r.add({.name = "flexus",
         .eq = 109,
         .title = "Flexus",
         .props = "M",
         .notes = {"prose writes r = x^2 + y^2 and r^2 cos(r); the printed formula uses "
                   "r^2 cos(r) with r the Euclidean norm, which is implemented"},
         .body = [](A a) {
           const double r2 = sq(a.x[0]) + sq(a.x[1]);
           return r2 * cos(sqrt(r2)) - 1.0;
         }});

  r.add({.name = "flux",
         .eq = 110,
         .title = "Flux",
         .bounds = range(-100, 100),
         .optima = {value_only(0.0, P)},
         .notes = {"claimed point (1, 1, 0) has three coordinates for a 2-D function; "
                   "f(1, 1) = sin 2 + 2 is not 0"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x - y) + sin(x + y) - 1.5 * x + 2.5 * y + 1.0;
         }});

  r.add({.name = "forrester",
         .eq = 111,
         .title = "Forrester",
         .props = "M",
         .bounds = range(0, 1),
         .dim = DimClass::fixed(1),
         .optima = {at({0.7572487585232999}, -6.0207400557670825, V)},
         .body = [](A a) { return sq(6 * a.x[0] - 2) * sin(12 * a.x[0] - 4); }});

  r.add({.name = "forrester-2d",
         .eq = 111,
         .title = "Forrester (revised 2-D)",
         .props = "M",
         .bounds = range(0, 1),
         .optima = {at({0.7572487585232999, 0.7572487585232999}, -12.041480111534165, V)},
         .body = [](A a) {
           return sq(6 * a.x[0] - 2) * sin(12 * a.x[0] - 4) +
                  sq(6 * a.x[1] - 2) * sin(12 * a.x[1] - 4);
         }});

  r.add({.name = "freudenstein-roth",
         .eq = 112,
         .title = "Freudenstein Roth",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .optima = {at({5, 4}, 0.0, B)},
         .notes = {"the second stated point (11.41, -0.8968), f = 48.9842, is a local minimum"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(((5 - y) * y - 2) * y + x - 13) + sq(((y + 1) * y - 14) * y + x - 29);
         }});

  r.add({.name = "gaussian",
         .eq = 113,
         .title = "Gaussian",
         .props = "C D NS NSc M",
         .dim = DimClass::fixed(3),
         .constants = {"gaussian.y"},
         .optima = {at({0.4, 1, 0}, 1.12793e-8, B, rounded(1e-8))},
         .notes = {"printed as a single residual; the least-squares sum over the 8 tabulated "
                   "rows is implemented"},
         .body = [y = r.get("gaussian.y")](A a) {
           double s = 0.0;
           for (int i = 1; i <= 8; ++i) {
             const double t = (8.0 - i) / 2.0;
             s += sq(a.x[0] * exp(-a.x[1] * sq(t - a.x[2]) / 2.0) - y[std::size_t(i - 1)]);
           }
           return s;
         }});

  r.add({.name = "gaussian-perturbation",
         .eq = 114,
         .title = "Gaussian Perturbation",
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return exp(-(6 * x * x + 0.8 * y * y)) + exp(-(sq(3 - x) + sq(2 - y)));
         }});

  r.add({.name = "gear",
         .eq = 115,
         .title = "Gear",
         .bounds = range(12, 60),
         .dim = DimClass::fixed(4),
         .optima = {at({16, 19, 43, 49}, 2.7, P, rounded(2.7)),
                    at({16, 19, 43, 49}, sq(1.0 / 6.931 - 16.0 * 19.0 / (43.0 * 49.0)), V)},
         .notes = {"prose mentions rounding to integers; the printed formula has none and is "
                   "evaluated on reals",
                   "claimed value 2.7 matches 2.7e-12, the value at the claimed point"},
         .body = [](A a) {
           const double d = a.x[2] * a.x[3];
           if (d == 0.0) domain_error("gear", "x3 x4 = 0");
           return sq(1.0 / 6.931 - a.x[0] * a.x[1] / d);
         }});

  r.add({.name = "gear-2d",
         .eq = 115,
         .title = "Gear (2-D form)",
         .bounds = range(12, 60),
         .notes = {"printed without the outer square; unbounded below"},
         .body = [](A a) { return 1.0 / 6.931 - sq(a.x[0] * a.x[1]); }});

  r.add({.name = "gear-n2",
         .eq = 116,
         .title = "Gear N.2",
         .props = "M",
         .bounds = range(12, 60),
         .body = [](A a) {
           const double p = (a.x[0] / 12.0) * (a.x[1] / 16.0);
           if (p == 0.0) domain_error("gear-n2", "x y = 0");
           return sq(1.0 / 6.931 - 1.0 / p);
         }});

  r.add({.name = "giunta",
         .eq = 117,
         .title = "Giunta",
         .props = "C D S Sc M",
         .bounds = range(-1, 1),
         .dim = DimClass::scalable(1),
         .optima = {at({0.458342, 0.458342}, 0.06447, B, rounded(0.06447))},
         .notes = {"the 2-D minimizer is nearer 0.467320 per coordinate; the stated point is "
                   "within printed precision of the value"},
         .body = [](A a) {
           double s = 0.6;
           for (double v : a.x) {
             const double u = 16.0 / 15.0 * v - 1.0;
             s += sin(u) + sq(sin(u)) + sin(4.0 * u) / 50.0;
           }
           return s;
         }});

  r.add({.name = "goldstein-price",
         .eq = 118,
         .title = "Goldstein Price",
         .props = "C D NS NSc M",
         .bounds = range(-2, 2),
         .tier = 1,
         .optima = {at({0, -1}, 3.0, B)},
         .body = [](A a) { return goldstein_price(a.x[0], a.x[1]); }});

  r.add({.name = "goldstein-price-noise",
         .eq = 119,
         .title = "Goldstein Price with Noise",
         .props = "M",
         .bounds = range(-2, 2),
         .optima = {at({0, -1}, 3.0, P), at({0, -1}, 3.5, V)},
         .notes = {"the 'noise' is the constant +1/2, so the stated value 3 is offset by 0.5"},
         .body = [](A a) { return goldstein_price(a.x[0], a.x[1]) + 0.5; }});

  r.add({.name = "gramacy-lee",
         .eq = 120,
         .title = "Gramacy Lee",
         .props = "M",
         .bounds = range(-0.5, 2.5),
         .dim = DimClass::fixed(1),
         .optima = {at({0.14377917410469823}, -2.873898941629628, V)},
         .notes = {"stated optimum '(0, -1), f = x^2' is not interpretable; not recorded",
                   "undefined at x = 0"},
         .body = [](A a) { return gramacy_lee_term("gramacy-lee", a.x[0]); }});

  r.add({.name = "gramacy-lee-2d",
         .eq = 120,
         .title = "Gramacy Lee (2-D form)",
         .props = "M",
         .bounds = range(-0.5, 2.5),
         .optima = {at({0.14377917410469823, 0.14377917410469823}, -5.747797883259256, V)},
         .body = [](A a) {
           return gramacy_lee_term("gramacy-lee-2d", a.x[0]) +
                  gramacy_lee_term("gramacy-lee-2d", a.x[1]);
         }});

  r.add({.name = "griewank",
         .eq = 121,
         .title = "Griewank",
         .props = "C D NS Sc M",
         .bounds = range(-600, 600),
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {at_all(0.0, 0.0, B)},
         .body = [](A a) {
           double s = 0.0, p = 1.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) {
             s += sq(a.x[i]) / 4000.0;
             p *= cos(a.x[i] / sqrt(double(i + 1)));
           }
           return s - p + 1.0;
         }});

  r.add({.name = "griewank-noise",
         .eq = 122,
         .title = "Griewank with Noise",
         .props = "M stoch",
         .bounds = range(-600, 600),
         .notes = {"epsilon has no printed distribution; drawn uniform on [0, 1)"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return (x * x + y * y) / 4000.0 - cos(x) * cos(y / std::sqrt(2.0)) + 1.0 +
                  a.rng->uniform(0.0, 1.0);
         }});

  r.add({.name = "gulf-research",
         .eq = 123,
         .title = "Gulf Research",
         .props = "C D NS NSc M",
         .bounds = box({0.1, 0, 0}, {100, 25.6, 5}),
         .alt = {range(0, 5), range(0, 60)},
         .dim = DimClass::fixed(3),
         .optima = {at({50, 25, 1.5}, 0.0, B)},
         .notes = {"printed (u_i - x2)^3 / x1 gives f > 0 at the claimed minimizer; canonical "
                   "|u_i - x2|^x3 / x1 adopted",
                   "default box from the printed constraints 0.1 <= x1 <= 100, "
                   "0 <= x2 <= 25.6, with x3 in [0, 5]; the listed ranges [0, 5] and [0, 60] "
                   "exclude the claimed minimizer"},
         .body = [](A a) {
           if (a.x[0] == 0.0) domain_error("gulf-research", "x1 = 0");
           double s = 0.0;
           for (int i = 1; i <= 99; ++i) {
             s += sq(exp(-std::pow(abs(gulf_u(i) - a.x[1]), a.x[2]) / a.x[0]) - 0.01 * i);
           }
           return s;
         }});

  r.add({.name = "gulf-research-development",
         .eq = 124,
         .title = "Gulf Research and Development",
         .aliases = {"weibull"},
         .optima = {value_only(0.0, P)},
         .notes = {"the product is strictly positive; 0 is an infimum, not attained"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return 2.0 * (exp(-sq(x - 1) - sq(y + 1)) + 0.004) *
                  (exp(-sq(x + 1) - sq(y - 1)) + 0.004) * exp(-sq(x - 2) - y * y);
         }});

  r.add({.name = "hansen",
         .eq = 125,
         .title = "Hansen",
         .props = "C D S NSc M",
         .bounds = range(-10, 10),
         .optima = {at({-7.589, -7.708}, -2.345, P, rounded(2.345)),
                    at({-7.589893, -7.702326}, -166.0291, V, rounded(166.0291))},
         .notes = {"stated value -2.345 matches neither the printed sums (i, j from 1) nor "
                   "the common form (from 0, about -176.54); printed form kept"},
         .body = [](A a) {
           double s1 = 0.0, s2 = 0.0;
           for (int i = 1; i <= 4; ++i) s1 += (i + 1) * cos(i * a.x[0] + i + 1);
           for (int j = 1; j <= 4; ++j) s2 += (j + 1) * cos(j + (j + 2) * a.x[1] + 1);
           return s1 * s2;
         }});

  r.add({.name = "happy-cat",
         .eq = 126,
         .title = "Happy Cat",
         .props = "M",
         .bounds = range(-2, 2),
         .dim = DimClass::scalable(1),
         .params = {{"alpha", 0.125}},
         .symbols = {"alpha"},
         .optima = {at_all(-1.0, 0.0, V)},
         .notes = {"alpha has no printed value; 1/8 used",
                   "the printed 2-D restatement is a different function and is not registered"},
         .body = [](A a) {
           const double d = double(a.x.size());
           const double r2 = sum_sq(a.x);
           double s = 0.0;
           for (double v : a.x) s += v;
           return std::pow(sq(r2 - d), a.params[0]) + (0.5 * r2 + s) / d + 0.5;
         }});

  r.add({.name = "hartmann-3",
         .eq = 127,
         .title = "Hartmann 3",
         .aliases = {"hartman-3"},
         .props = "C D NS NSc M",
         .bounds = range(0, 1),
         .dim = DimClass::fixed(3),
         .constants = {"hartmann3.alpha", "hartmann3.A", "hartmann3.P"},
         .optima = {at({0.1146, 0.5556, 0.8525}, -3.8627, B, rounded(3.8627))},
         .body = [al = r.get("hartmann3.alpha"), m = r.get("hartmann3.A"),
                  p = r.get("hartmann3.P")](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < 4; ++i) {
             double e = 0.0;
             for (std::size_t j = 0; j < 3; ++j) e += m(i, j) * sq(a.x[j] - p(i, j));
             s += al[i] * exp(-e);
           }
           return -s;
         }});

  r.add({.name = "hartmann-6",
         .eq = 128,
         .title = "Hartmann 6",
         .aliases = {"hartman-6"},
         .props = "C D NS NSc M",
         .bounds = range(0, 1),
         .dim = DimClass::fixed(6),
         .constants = {"hartmann6.c", "hartmann6.A", "hartmann6.P"},
         .optima = {value_only(-3.3223, P, 6, rounded(3.3223)),
                    at({0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573}, -3.3223, B,
                       rounded(3.3223))},
         .notes = {"stated minimizer lists five coordinates; the sixth (0.6573) is restored",
                   "P(1,6) printed as 0.5586 gives a minimum near -3.3066; the usual value "
                   "0.5886 reproduces -3.3223 and is used"},
         .body = [c = r.get("hartmann6.c"), m = r.get("hartmann6.A"),
                  p = r.get("hartmann6.P")](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < 4; ++i) {
             double e = 0.0;
             for (std::size_t j = 0; j < 6; ++j) e += m(i, j) * sq(a.x[j] - p(i, j));
             s += c[i] * exp(-e);
           }
           return -s;
         }});

  r.add({.name = "helical-valley",
         .eq = 129,
         .title = "Helical Valley",
         .props = "C D NS Sc M",
         .bounds = range(-10, 10),
         .dim = DimClass::fixed(3),
         .optima = {at({1, 0, 0}, 0.0, B)},
         .notes = {"printed theta = atan(x1/x2)/(2 pi) gives f(1, 0, 0) = 625; canonical "
                   "theta = atan(x2/x1)/(2 pi), plus 1/2 when x1 < 0, adopted",
                   "labelled scalable; the formula is 3-D"},
         .body = [](A a) {
           const double x1 = a.x[0], x2 = a.x[1], x3 = a.x[2];
           if (x1 == 0.0) domain_error("helical-valley", "theta undefined at x1 = 0");
           const double theta = std::atan(x2 / x1) / (2.0 * kPi) + (x1 < 0.0 ? 0.5 : 0.0);
           return 100.0 * (sq(x3 - 10.0 * theta) + sq(sqrt(x1 * x1 + x2 * x2) - 1.0)) + x3 * x3;
         }});

  r.add({.name = "himmelblau",
         .eq = 130,
         .title = "Himmelblau",
         .props = "C D NS NSc M",
         .bounds = range(-6, 6),
         .alt = {range(-2, 2)},
         .tier = 1,
         .optima = {at({0, 0}, 0.0, P), at({-1, 1}, 0.0, P), at({3, 2}, 0.0, B),
                    at({-2.805118, 3.131312}, 0.0, V), at({-3.779310, -3.283186}, 0.0, V),
                    at({3.584428, -1.848126}, 0.0, V)},
         .notes = {"stated solutions (0, 0) and (-1, 1) give 170 and 136; the four zeros are "
                   "(3, 2) and three irrational points"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x + y * y - 7) + sq(x * x + y - 11);
         }});

  r.add({.name = "holder-table",
         .eq = 131,
         .title = "Holder Table",
         .aliases = {"holder-table-1"},
         .props = "C D S NSc M",
         .bounds = range(-10, 10),
         .alt = {range(-5, 5)},
         .tier = 1,
         .optima = {at({8.05502, 9.66459}, -19.2085, B, rounded(19.2085)),
                    at({-8.05502, 9.66459}, -19.2085, B, rounded(19.2085)),
                    at({8.05502, -9.66459}, -19.2085, B, rounded(19.2085)),
                    at({-8.05502, -9.66459}, -19.2085, B, rounded(19.2085)),
                    at({9.6645, 9.6645}, -26.9203, P, rounded(26.9203))},
         .notes = {"printed cos(x) cos(y) form matches the -26.9203 claim but not the "
                   "-19.2085 claim at (+-8.055, +-9.664); the common sin(x) cos(y) form is "
                   "adopted",
                   "printed range [-5, 5] excludes every stated minimizer; default [-10, 10]"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return -abs(sin(x) * cos(y) * holder_exp(x, y));
         }});

  r.add({.name = "holder-table-2",
         .eq = 132,
         .title = "Holder Table 2",
         .props = "C D S NSc M",
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return -abs(sin(x) * cos(y) * holder_exp(x, y));
         }});

  r.add({.name = "holder-table-n2",
         .eq = 133,
         .title = "Holder Table N.2",
         .props = "M",
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return -abs(sin(x) * cos(y) * cos(x * y) * holder_exp(x, y));
         }});

  r.add({.name = "holzman",
         .eq = 134,
         .title = "Holzman",
         .bounds = range(-10, 10),
         .alt = {box({0.1, 0, 0}, {100, 25.6, 5})},
         .dim = DimClass::fixed(3),
         .optima = {value_only(0.0, P)},
         .notes = {"stated minimizer 'x = y = 0' divides by x1 = 0",
                   "prose describes reciprocal effects of x and y unrelated to the printed sum",
                   "non-integer powers of negative bases are DomainError"},
         .body = [](A a) {
           if (a.x[0] == 0.0) domain_error("holzman", "x1 = 0");
           double s = 0.0;
           for (int i = 0; i <= 98; ++i) {
             const double u = 25.0 + std::pow(-50.0 * std::log(0.01 * (i + 1)), 2.0 / 3.0);
             s += -0.1 * (i + 1) + exp(real_pow("holzman", u - a.x[1], a.x[2]) / a.x[0]);
           }
           return s;
         }});

  r.add({.name = "holzman-n2",
         .eq = 135,
         .title = "Holzman N.2",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"printed index runs 0..n with weight i; read as weights 1..n so no "
                   "coordinate is dropped"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) s += double(i + 1) * pow4(a.x[i]);
           return s;
         }});

  r.add({.name = "hosaki",
         .eq = 136,
         .title = "Hosaki",
         .props = "C D NS NSc M",
         .bounds = box({0, 0}, {5, 6}),
         .optima = {at({4, 2}, -2.3458, B, rounded(2.3458))},
         .notes = {"printed factor e^(-x1 x1^2) gives about -0.0015 at (4, 2); canonical "
                   "x1^2 e^(-x1) adopted"},
         .body = [](A a) { return hosaki_poly(a.x[0]) * sq(a.x[1]) * exp(-a.x[1]); }});

  r.add({.name = "hosaki-exponential",
         .eq = 137,
         .title = "Hosaki Exponential",
         .body = [](A a) {
           return 10.0 * sq(-cube(a.x[0]) + a.x[1]) + hosaki_poly(a.x[0]) * exp(-sq(a.x[0]));
         }});

  r.add({.name = "hosaki-exponential-noise",
         .eq = 138,
         .title = "Hosaki Exponential with Noise",
         .notes = {"printed formula has no noise term and equals hosaki-exponential; "
                   "registered deterministic"},
         .body = [](A a) {
           return hosaki_poly(a.x[0]) * exp(-sq(a.x[0])) + 10.0 * sq(a.x[1] - cube(a.x[0]));
         }});

  r.add({.name = "hqing",
         .eq = 139,
         .title = "Hqing",
         .props = "M",
         .optima = {at({0, 0}, 0.0, P)},
         .notes = {"-x0^4 makes the function unbounded below; (0, 0) is a saddle"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return -pow4(x) + x * x + 16 * pow4(y) - 16 * y * y;
         }});

  r.add({.name = "hump",
         .eq = 140,
         .title = "Hump",
         .props = "M",
         .optima = {at({0.0898, -0.7126}, 0.0, B, rounded(0.0)),
                    at({-0.0898, 0.7126}, 0.0, B, rounded(0.0))},
         .notes = {"printed six-hump polynomial equals -1.0316 at the stated points; canonical "
                   "form with the +1.0316285 offset adopted"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return 1.0316285 + pow6(x) / 3.0 - 2.1 * pow4(x) + 4 * x * x + x * y + 4 * pow4(y) -
                  4 * y * y;
         }});

  r.add({.name = "infinity",
         .eq = 141,
         .title = "Infinity",
         .props = "M",
         .bounds = range(-10, 10),
         .notes = {"printed range [-0.2172, 1] is the value range; search box [-10, 10] chosen",
                   "undefined where x or y is 0"},
         .body = [](A a) {
           if (a.x[0] == 0.0 || a.x[1] == 0.0) domain_error("infinity", "sin(t)/t at t = 0");
           return sin(a.x[0]) / a.x[0] * (sin(a.x[1]) / a.x[1]);
         }});

  r.add({.name = "inverted-cosine-wave",
         .eq = 142,
         .title = "Inverted Cosine Wave",
         .props = "M",
         .dim = DimClass::scalable(2),
         .optima = {affine(at_all(0.0, 0.0, V), 1.0, -1.0)},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             const double q = sq(a.x[i]) + sq(a.x[i + 1]) + 0.5 * a.x[i] * a.x[i + 1];
             s += exp(-q / 8.0) * cos(4.0 * sqrt(q));
           }
           return -s;
         }});

  r.add({.name = "jennrich-sampson",
         .eq = 143,
         .title = "Jennrich Sampson",
         .props = "C D NS NSc M",
         .bounds = range(-1, 1),
         .optima = {at({0.2578, 0.2578}, 124.362, B, rounded(124.362))},
         .notes = {"printed (e^(i x0) + e^(i x1))^2 gives about 6.8e5 at the stated point; "
                   "canonical sum (2 + 2i - e^(i x0) - e^(i x1))^2 adopted"},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 10; ++i) {
             s += sq(2.0 + 2.0 * i - (exp(i * a.x[0]) + exp(i * a.x[1])));
           }
           return s;
         }});

  r.add({.name = "judge",
         .eq = 144,
         .title = "Judge",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .constants = {"judge.A", "judge.B", "judge.C"},
         .optima = {at({0.864, 1.235}, 16.0817, P, rounded(16.0817)),
                    at({0.86762112, 1.22597467}, 16.195609285967, V)},
         .notes = {"printed C_i x3 term references a third coordinate; the 2-D form "
                   "x0 + B_i x1 + C_i x1^2 is used",
                   "the 2-D minimum is 16.1956, not the stated 16.0817"},
         .body = [ta = r.get("judge.A"), tb = r.get("judge.B"), tc = r.get("judge.C")](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < 20; ++i) {
             s += sq(a.x[0] + tb[i] * a.x[1] + tc[i] * sq(a.x[1]) - ta[i]);
           }
           return s;
         }});

  r.add({.name = "katsuura",
         .eq = 145,
         .title = "Katsuura",
         .props = "M",
         .bounds = range(-1000, 1000),
         .alt = {range(0, 100)},
         .dim = DimClass::scalable(1),
         .params = {{"d", 32.0}},
         .symbols = {"d"},
         .optima = {at_all(0.0, 1.0, P)},
         .notes = {"printed form sums round(2^k x) 2^-k without the |. - round(.)| fraction; "
                   "kept as printed and can drop below 1 for negative x"},
         .body = [](A a) {
           const int d = int(a.params[0]);
           double p = 1.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) {
             double s = 0.0;
             for (int k = 1; k <= d; ++k) {
               s += std::round(std::ldexp(a.x[i], k)) * std::ldexp(1.0, -k);
             }
             p *= 1.0 + double(i + 1) * s;
           }
           return p;
         }});

  r.add({.name = "keane",
         .eq = 146,
         .title = "Keane",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .optima = {at({1.3932, 0}, 0.6736, P, rounded(0.6736)), at({1, 1}, 0.0, V)},
         .notes = {"printed without the leading minus, so the stated point is a maximum; the "
                   "value matches the printed form and the form is kept",
                   "undefined at the origin"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           const double rr = sqrt(x * x + y * y);
           if (rr == 0.0) domain_error("keane", "division by |x| = 0");
           return keane_num(x, y) / rr;
         }});

  r.add({.name = "keane-n2",
         .eq = 147,
         .title = "Keane N.2",
         .props = "M",
         .bounds = range(-6.97, 6.97),
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return keane_num(x, y) / (sqrt(x * x + y * y) + 1e-8);
         }});

  r.add({.name = "kearfott",
         .eq = 148,
         .title = "Kearfott",
         .optima = {at({std::sqrt(1.5), std::sqrt(0.5)}, 0.0, B),
                    at({-std::sqrt(1.5), std::sqrt(0.5)}, 0.0, B),
                    at({std::sqrt(1.5), -std::sqrt(0.5)}, 0.0, B),
                    at({-std::sqrt(1.5), -std::sqrt(0.5)}, 0.0, B)},
         .notes = {"printed formula duplicates keane-n2 and is about 0.15 at the stated "
                   "minimizers; canonical (x0^2 + x1^2 - 2)^2 + (x0^2 - x1^2 - 1)^2 adopted"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x * x + y * y - 2.0) + sq(x * x - y * y - 1.0);
         }});

  r.add({.name = "kowalik",
         .eq = 149,
         .title = "Kowalik",
         .bounds = range(0, 42),
         .alt = {range(-5, 5)},
         .dim = DimClass::fixed(4),
         .constants = {"kowalik.a", "kowalik.b"},
         .optima = {at({0.192833, 0.190836, 0.123117, 0.135766}, 3.0748e-4, B,
                       rounded(3.0748e-4))},
         .notes = {"printed b_{i,1}, b_{i,2} indices read as b_i: "
                   "a_i - x0 (b_i^2 + b_i x1) / (b_i^2 + b_i x2 + x3)"},
         .body = [ta = r.get("kowalik.a"), tb = r.get("kowalik.b")](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < 11; ++i) {
             const double b = tb[i];
             const double den = b * b + b * a.x[2] + a.x[3];
             if (den == 0.0) domain_error("kowalik", "zero denominator");
             s += sq(ta[i] - a.x[0] * (b * b + b * a.x[1]) / den);
           }
           return s;
         }});

  r.add({.name = "langermann",
         .eq = 150,
         .title = "Langermann",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .constants = {"langermann.A", "langermann.c"},
         .optima = {at({2.0029, 1.006}, -5.162, B, rounded(5.162))},
         .notes = {"printed without the leading minus (f = +5.162 at the stated point) and "
                   "without c; the negated sum with c = (1, 2, 5, 2, 3) is adopted"},
         .body = [m = r.get("langermann.A"), c = r.get("langermann.c")](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < 5; ++i) {
             const double d = sq(a.x[0] - m(i, 0)) + sq(a.x[1] - m(i, 1));
             s += c[i] * exp(-d / kPi) * cos(kPi * d);
           }
           return -s;
         }});

  r.add({.name = "langermann-n2",
         .eq = 151,
         .title = "Langermann N.2",
         .props = "M",
         .bounds = range(-1.52, 10),
         .constants = {"langermann.A", "langermann.c"},
         .notes = {"same formula as the resolved langermann entry"},
         .body = [m = r.get("langermann.A"), c = r.get("langermann.c")](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < 5; ++i) {
             const double d = sq(a.x[0] - m(i, 0)) + sq(a.x[1] - m(i, 1));
             s += c[i] * exp(-d / kPi) * cos(kPi * d);
           }
           return -s;
         }});

  r.add({.name = "lennard-jones",
         .eq = 152,
         .title = "Lennard Jones",
         .props = "M",
         .dim = DimClass::scalable(6, 3),
         .optima = {value_only(-0.25, V, 6), value_only(-0.75, V, 9)},
         .notes = {"coordinates are N atoms in 3-D, so the dimension is a multiple of 3",
                   "singular when two atoms coincide"},
         .body = [](A a) {
           const std::size_t n = a.x.size() / 3;
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < n; ++i) {
             for (std::size_t j = i + 1; j < n; ++j) {
               const double r2 = sq(a.x[3 * i] - a.x[3 * j]) + sq(a.x[3 * i + 1] - a.x[3 * j + 1]) +
                                 sq(a.x[3 * i + 2] - a.x[3 * j + 2]);
               if (r2 == 0.0) domain_error("lennard-jones", "r_ij = 0");
               const double inv6 = 1.0 / cube(r2);
               s += inv6 * inv6 - inv6;
             }
           }
           return s;
         }});

  r.add({.name = "leon",
         .eq = 153,
         .title = "Leon",
         .bounds = range(-1.2, 1.2),
         .optima = {at({1, 1}, 0.0, V)},
         .notes = {"no range printed; [-1.2, 1.2] used"},
         .body = [](A a) { return sq(1 - a.x[0]) + 100.0 * sq(-sq(a.x[0]) + a.x[1]); }});

  const auto levy_printed = [](A a) {
    const std::size_t d = a.x.size();
    const double yd = levy_w(a.x[d - 1]);
    double s = sq(sin(kPi * levy_w(a.x[0])));
    for (std::size_t i = 0; i + 1 < d; ++i) {
      const double y = levy_w(a.x[i]);
      s += sq(y - 1) * (1 + 10 * sq(sin(kPi * y + 1))) + sq(yd - 1) * (1 + sq(sin(2 * kPi * yd)));
    }
    return s;
  };

  r.add({.name = "levy",
         .eq = 154,
         .title = "Levy",
         .props = "M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(2),
         .optima = {at_all(1.0, 0.0, B)},
         .notes = {"the last-coordinate term is printed inside the sum and so repeats d - 1 "
                   "times; kept as printed"},
         .body = levy_printed});

  r.add({.name = "levy-n3",
         .eq = 155,
         .title = "Levy N.3",
         .props = "M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(2),
         .optima = {at_all(1.0, 0.0, V)},
         .notes = {"formula identical to levy"},
         .body = levy_printed});

  r.add({.name = "levy-n5",
         .eq = 156,
         .title = "Levy N.5",
         .props = "M",
         .bounds = range(-10, 10),
         .optima = {at({-1.3068, -1.4248}, -176.1375, B, rounded(176.1375))},
         .notes = {"printed cos((i-1) x1 + x1) gives about -11.1 at the stated point; "
                   "canonical cos((i-1) x1 + i) and cos((j+1) x2 + j) adopted"},
         .body = [](A a) {
           double s1 = 0.0, s2 = 0.0;
           for (int i = 1; i <= 5; ++i) s1 += i * cos((i - 1) * a.x[0] + i);
           for (int j = 1; j <= 5; ++j) s2 += j * cos((j + 1) * a.x[1] + j);
           return s1 * s2 + sq(a.x[0] + 1.42513) + sq(a.x[1] + 0.80032);
         }});

  r.add({.name = "levy-n8",
         .eq = 157,
         .title = "Levy N.8",
         .props = "M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(2),
         .optima = {at_all(1.0, 0.0, V)},
         .notes = {"the neighbour term uses y_{i+1} and the last factor uses x_{n-1}, as "
                   "printed"},
         .body = [](A a) {
           const std::size_t n = a.x.size();
           double s = sq(sin(kPi * levy_w(a.x[0])));
           for (std::size_t i = 0; i + 1 < n; ++i) {
             s += sq(levy_w(a.x[i]) - 1) * (1 + 10 * sq(sin(kPi * levy_w(a.x[i + 1]) + 1)));
           }
           return s + sq(levy_w(a.x[n - 1]) - 1) * (1 + sq(sin(2 * kPi * a.x[n - 1])));
         }});

  r.add({.name = "levy-n13",
         .eq = 158,
         .title = "Levy N.13",
         .props = "M",
         .bounds = range(-10, 10),
         .tier = 1,
         .optima = {at({1, 1}, 0.0, B)},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(sin(3 * kPi * x)) + sq(x - 1) * (1 + sq(sin(3 * kPi * y))) +
                  sq(y - 1) * (1 + sq(sin(2 * kPi * y)));
         }});

  r.add({.name = "levy-gomez",
         .eq = 159,
         .title = "Levy and Gomez",
         .tier = 3,
         .tier_reason = "constrained formulation: the inequality g(x) <= a cannot be expressed "
                        "as a box, and the objective's -4x2^2 + x2^4 disagrees with the stated "
                        "minimum",
         .optima = {at({0.08984, -0.71265}, -1.03162, P, rounded(1.03162))}});

  r.add({.name = "matyas",
         .eq = 160,
         .title = "Matyas",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .tier = 1,
         .optima = {at({0, 0}, 0.0, B)},
         .notes = {"labelled multimodal; the quadratic form is positive definite, so unimodal"},
         .body = [](A a) {
           return 0.26 * sq(a.x[0]) - 0.48 * a.x[0] * a.x[1] + 0.26 * sq(a.x[1]);
         }});
}

}  // namespace optbench::detail
