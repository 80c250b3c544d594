#include <algorithm>
#include <cmath>

#include "registry.hpp"

namespace optbench::detail {
namespace {

using A = const EvalArgs&;
using std::abs;
using std::cos;
using std::exp;
using std::sin;
using std::sqrt;

double biggs_y(double t) { return exp(-t) - 5.0 * exp(-10.0 * t); }

double camel_six(double u, double v) {
  return (4.0 - 2.1 * u * u + pow4(u) / 3.0) * u * u + u * v + (-4.0 + 4.0 * v * v) * v * v;
}

double cross_tray_core(double x, double y) {
  const double r = sqrt(x * x + y * y);
  return abs(sin(x) * sin(y) * exp(abs(100.0 - r / kPi))) + 1.0;
}

}  // namespace

void register_group_1(Registry& r) {
  r.add({.name = "ackley",
         .eq = 1,
         .title = "Ackley N.1",
         .aliases = {"ackley-n1"},
         .props = "C D NS Sc M",
         .bounds = range(-32.768, 32.768),
         .alt = {range(-15, 30), range(-5, 5)},
         .dim = DimClass::scalable(1),
         .tier = 1,
         .params = {{"a", 20.0}, {"b", 0.2}, {"c", 2.0 * kPi}},
         .symbols = {"a", "b", "c"},
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"printed form sums x_i rather than x_i^2 inside the root and omits the "
                   "+a+e offset, so f(0) != 0; canonical form adopted",
                   "range printed as [-55]; read as [-5, 5]"},
         .body = [](A a) {
           const double n = double(a.x.size());
           double s2 = 0.0, sc = 0.0;
           for (double v : a.x) {
             s2 += v * v;
             sc += cos(a.params[2] * v);
           }
           return -a.params[0] * exp(-a.params[1] * sqrt(s2 / n)) - exp(sc / n) + a.params[0] + kE;
         }});

  r.add({.name = "ackley-n2",
         .eq = 2,
         .title = "Ackley N.2",
         .props = "C D NS Sc U",
         .bounds = range(-32, 32),
         .alt = {range(-5, 5)},
         .optima = {at({0, 0}, -200.0, B)},
         .notes = {"labelled scalable but the formula uses only x0 and x1; registered as 2-D"},
         .body = [](A a) { return -200.0 * exp(-0.2 * sqrt(sq(a.x[0]) + sq(a.x[1]))); }});

  r.add({.name = "ackley-n3",
         .eq = 3,
         .title = "Ackley N.3",
         .props = "C D S Sc U",
         .bounds = range(-32, 32),
         .optima = {at({0.682584587365898, -0.36075325513719}, -195.629028238419, B,
                       rounded(195.629))},
         .notes = {"printed form (-200 exp(-0.2 r) - 5 exp(...)) gives about -172.7 at the claimed "
                   "minimizer; canonical form -200 exp(-0.02 r) + 5 exp(cos 3x0 + sin 3x1) adopted",
                   "labelled scalable but the formula uses only x0 and x1; registered as 2-D"},
         .body = [](A a) {
           return -200.0 * exp(-0.02 * sqrt(sq(a.x[0]) + sq(a.x[1]))) +
                  5.0 * exp(cos(3.0 * a.x[0]) + sin(3.0 * a.x[1]));
         }});

  r.add({.name = "ackleys-path",
         .eq = 4,
         .title = "Ackley's Path",
         .props = "M",
         .bounds = range(-32, 32),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, V)},
         .body = [](A a) {
           const double n = double(a.x.size());
           double s2 = 0.0, sc = 0.0;
           for (double v : a.x) {
             s2 += v * v;
             sc += cos(2.0 * kPi * v);
           }
           return -20.0 * exp(-0.2 * sqrt(s2 / n)) - exp(sc / n) + 20.0 + kE;
         }});

  r.add({.name = "ackley-modified",
         .eq = 5,
         .title = "Ackley (Modified)",
         .bounds = range(-5, 5),
         .body = [](A a) {
           const double c0 = cos(2.0 * kPi * a.x[0]), c1 = cos(2.0 * kPi * a.x[1]);
           const double inner = 0.5 * (sqrt(sq(a.x[0]) + sq(a.x[1])) + 0.3 * c0 + 0.3 * c1);
           return -20.0 * exp(-0.2 * sqrt(inner)) - exp(0.5 * (c0 + c1)) + kE + 20.0;
         }});

  r.add({.name = "adjiman",
         .eq = 6,
         .title = "Adjiman",
         .props = "C D S NSc M",
         .bounds = box({-1, -1}, {2, 1}),
         .alt = {range(-5, 5)},
         .optima = {at({2.0, 1.0}, 0.0, P),
                    at({2.0, 0.10578346945}, -2.02180678, V, 1e-6)},
         .notes = {"claimed f(2, 1) = 0 but the formula gives about -1.35 there; the formula is the "
                   "standard one, whose minimum on the default box is -2.0218 at (2, 0.1058)"},
         .body = [](A a) { return cos(a.x[0]) * sin(a.x[1]) - a.x[0] / (sq(a.x[1]) + 1.0); }});

  r.add({.name = "alpine-n1",
         .eq = 7,
         .title = "Alpine N.1",
         .aliases = {"alpine"},
         .props = "C D S NSc M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"range printed as [10, 10]^D; read as [-10, 10]^D",
                   "labelled non-scalable although the sum is defined for any n",
                   "labelled differentiable although |.| makes it non-differentiable at its zeros"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += abs(v * sin(v) + 0.1 * v);
           return s;
         }});

  r.add({.name = "alpine-n2",
         .eq = 8,
         .title = "Alpine N.2",
         .props = "C D S Sc M",
         .bounds = range(0, 10),
         .dim = DimClass::scalable(1),
         .optima = {per_dim(at_all(7.9171, 0.0, P, 1e-3), 2.8081)},
         .notes = {"no range printed; [0, 10] adopted",
                   "the claimed point 7.9171 is the maximizer of the printed product, whose "
                   "value there is 2.8081^n rather than 2.8081n; the claim is kept as printed"},
         .body = [](A a) {
           double p = 1.0;
           for (double v : a.x) p *= sqrt(abs(v)) * sin(v);
           return p;
         }});

  r.add({.name = "aluffi-pentini",
         .eq = 9,
         .title = "Aluffi-Pentini",
         .aliases = {"zirilli"},
         .bounds = range(-10, 10),
         .optima = {at({-1.0465, 0.0}, -0.3523, B, rounded(0.3523))},
         .body = [](A a) {
           return 0.25 * pow4(a.x[0]) - 0.5 * sq(a.x[0]) + 0.1 * a.x[0] + 0.5 * sq(a.x[1]);
         }});

  r.add({.name = "attractive-sector",
         .eq = 10,
         .title = "Attractive Sector",
         .props = "U",
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"T_osz, Q, Lambda and R are identity; x_opt = 0 and f_opt = 0"},
         .simplified = true,
         .body = [](A a) {
           double s = 0.0;
           for (double z : a.x) s += sq((z > 0.0 ? 100.0 : 1.0) * z);
           return std::pow(s, 0.9);
         }});

  r.add({.name = "axis-parallel-hyper-ellipsoid",
         .eq = 11,
         .title = "Axis Parallel Hyper-Ellipsoid",
         .aliases = {"weighted-sphere"},
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"prose describes subtracting a constant 4 that the formula does not contain"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) s += double(i + 1) * sq(a.x[i]);
           return s;
         }});

  r.add({.name = "bartels-conn",
         .eq = 12,
         .title = "Bartels Conn",
         .props = "C ND S Sc M",
         .bounds = range(-500, 500),
         .optima = {at({0, 0}, 1.0, V)},
         .notes = {"labelled scalable but the formula is 2-D"},
         .body = [](A a) {
           return abs(sq(a.x[0]) + sq(a.x[1]) + a.x[0] * a.x[1]) + abs(sin(a.x[0])) +
                  abs(cos(a.x[1]));
         }});

  r.add({.name = "beale",
         .eq = 13,
         .title = "Beale",
         .props = "C D NS NSc M",
         .bounds = range(-4.5, 4.5),
         .alt = {range(-10, 10)},
         .tier = 1,
         .optima = {at({3.0, 0.5}, 0.0, B)},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x * y - x + 1.5) + sq(x * y * y - x + 2.25) + sq(x * cube(y) - x + 2.625);
         }});

  r.add({.name = "beale-noise",
         .eq = 14,
         .title = "Beale with Noise",
         .bounds = range(-4.5, 4.5),
         .notes = {"the 'noise' is a constant +1/2 offset as printed; the entry is deterministic"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return 2.25 * sq(0.66667 * x * y - 0.66667 * x + 1.0) +
                  5.0625 * sq(0.44444 * x * y * y - 0.44444 * x + 1.0) +
                  6.89062 * sq(0.38095 * x * cube(y) - 0.38095 * x + 1.0) + 0.5;
         }});

  r.add({.name = "becker-lago",
         .eq = 15,
         .title = "Becker Lago with decay",
         .bounds = range(-10, 10),
         .optima = {at({5, 5}, 0.0, B), at({-5, 5}, 0.0, B), at({5, -5}, 0.0, B),
                    at({-5, -5}, 0.0, B)},
         .body = [](A a) {
           return (sq(abs(a.x[0]) - 5.0) + sq(abs(a.x[1]) - 5.0)) *
                  exp(-sq(a.x[0]) - sq(a.x[1]));
         }});

  r.add({.name = "bent-cigar",
         .eq = 16,
         .title = "Bent Cigar",
         .props = "NS U",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"printed as x_1^2 + 1e6 sum over all i (including i = 1); kept as printed"},
         .body = [](A a) { return sq(a.x[0]) + 1e6 * sum_sq(a.x); }});

  r.add({.name = "bent-identity",
         .eq = 17,
         .title = "Bent Identity",
         .bounds = range(-5, 5),
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) {
           const double s = sq(a.x[0]) + sq(a.x[1]);
           return sqrt(s) + s;
         }});

  r.add({.name = "biggs-exp2",
         .eq = 18,
         .title = "Biggs EXP2",
         .props = "C D NS NSc M",
         .bounds = range(0, 20),
         .optima = {at({1, 10}, 0.0, B)},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 10; ++i) {
             const double t = 0.1 * i;
             s += sq(exp(-t * a.x[0]) - 5.0 * exp(-t * a.x[1]) - biggs_y(t));
           }
           return s;
         }});

  r.add({.name = "biggs-exp3",
         .eq = 19,
         .title = "Biggs EXP3",
         .props = "C D NS NSc M",
         .bounds = range(0, 20),
         .dim = DimClass::fixed(3),
         .optima = {at({1, 10, 5}, 0.0, B)},
         .notes = {"printed term '3 x_i e^{-t_i x_2}' indexes x by the sample index; canonical "
                   "x_3 e^{-t_i x_2} adopted"},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 10; ++i) {
             const double t = 0.1 * i;
             s += sq(exp(-t * a.x[0]) - a.x[2] * exp(-t * a.x[1]) - biggs_y(t));
           }
           return s;
         }});

  r.add({.name = "biggs-exp4",
         .eq = 20,
         .title = "Biggs EXP4",
         .props = "C D NS NSc M",
         .bounds = range(0, 20),
         .dim = DimClass::fixed(4),
         .optima = {at({1, 10, 1, 5}, 0.0, B)},
         .notes = {"labelled 'Multidimensional' in place of a modality"},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 10; ++i) {
             const double t = 0.1 * i;
             s += sq(a.x[2] * exp(-t * a.x[0]) - a.x[3] * exp(-t * a.x[1]) - biggs_y(t));
           }
           return s;
         }});

  r.add({.name = "biggs-exp5",
         .eq = 21,
         .title = "Biggs EXP5",
         .props = "C D NS NSc M",
         .bounds = range(0, 20),
         .dim = DimClass::fixed(5),
         .optima = {at({1, 10, 1, 5, 4}, 0.0, B)},
         .notes = {"printed form uses a sixth variable, 13 terms and y_i with e^{+10 t_i}, none of "
                   "which fit the claimed 5-D minimizer; canonical 11-term form with 3 e^{-t_i x_5} "
                   "adopted"},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 11; ++i) {
             const double t = 0.1 * i;
             const double y = biggs_y(t) + 3.0 * exp(-4.0 * t);
             s += sq(a.x[2] * exp(-t * a.x[0]) - a.x[3] * exp(-t * a.x[1]) +
                     3.0 * exp(-t * a.x[4]) - y);
           }
           return s;
         }});

  r.add({.name = "bird",
         .eq = 22,
         .title = "Bird",
         .props = "C D NS NSc M",
         .bounds = range(-2 * kPi, 2 * kPi),
         .optima = {at({4.7010, 3.1529}, -106.7645, B, rounded(106.7645)),
                    at({-1.5821, -3.1302}, -106.7645, V, rounded(106.7645))},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x - y) + exp(sq(1.0 - sin(x))) * cos(y) + exp(sq(1.0 - cos(y))) * sin(x);
         }});

  r.add({.name = "bird-noise",
         .eq = 23,
         .title = "Bird with Noise",
         .bounds = range(-2 * kPi, 2 * kPi),
         .notes = {"the 'noise' is a constant +1/2 offset as printed; the entry is deterministic"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x - y) + exp(sq(1.0 - sin(x))) * cos(y) + exp(sq(1.0 - cos(y))) * sin(x) +
                  0.5;
         }});

  r.add({.name = "bohachevsky-n1",
         .eq = 24,
         .title = "Bohachevsky N.1",
         .props = "C D S NSc M",
         .bounds = range(-100, 100),
         .alt = {range(-50, 50), range(-15, 15)},
         .dim = DimClass::scalable(2),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"printed as a sum over consecutive pairs, so defined for n >= 2 although "
                   "labelled non-scalable"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             s += sq(a.x[i]) + 2.0 * sq(a.x[i + 1]) - 0.3 * cos(3.0 * kPi * a.x[i]) -
                  0.4 * cos(4.0 * kPi * a.x[i + 1]) + 0.7;
           }
           return s;
         }});

  r.add({.name = "bohachevsky-n2",
         .eq = 25,
         .title = "Bohachevsky N.2",
         .props = "C D NS NSc M",
         .bounds = range(-100, 100),
         .alt = {range(-50, 50)},
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) {
           return sq(a.x[0]) + 2.0 * sq(a.x[1]) -
                  0.3 * cos(3.0 * kPi * a.x[0]) * cos(4.0 * kPi * a.x[1]) + 0.3;
         }});

  r.add({.name = "bohachevsky-n3",
         .eq = 26,
         .title = "Bohachevsky N.3",
         .props = "C D NS NSc M",
         .bounds = range(-100, 100),
         .alt = {range(-50, 50)},
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) {
           return sq(a.x[0]) + 2.0 * sq(a.x[1]) -
                  0.3 * cos(3.0 * kPi * a.x[0] + 4.0 * kPi * a.x[1]) + 0.3;
         }});

  r.add({.name = "booth",
         .eq = 27,
         .title = "Booth",
         .props = "C D NS NSc U",
         .bounds = range(-10, 10),
         .tier = 1,
         .optima = {at({1, 3}, 0.0, B)},
         .body = [](A a) {
           return sq(a.x[0] + 2.0 * a.x[1] - 7.0) + sq(2.0 * a.x[0] + a.x[1] - 5.0);
         }});

  r.add({.name = "boothby",
         .eq = 28,
         .title = "Boothby",
         .bounds = range(-5, 5),
         .optima = {at({3.40, 0.005}, 13.273, P, rounded(13.273))},
         .body = [](A a) {
           return sq(a.x[0] + cube(a.x[1]) - 7.0) + sq(sq(a.x[0]) + 11.0 * sq(a.x[1]) - 11.0);
         }});

  r.add({.name = "box-betts",
         .eq = 29,
         .title = "Box Betts",
         .props = "M",
         .bounds = range(-5, 5),
         .alt = {box({0.9, 9, 0.9}, {1.2, 11.2, 1.2})},
         .dim = DimClass::fixed(3),
         .optima = {at({1, 10, 1}, 0.0, B)},
         .notes = {"printed g(x_i) is not zero at the claimed minimizer (1, 10, 1); canonical "
                   "10-term sum of (e^{-0.1k x1} - e^{-0.1k x2} - (e^{-0.1k} - e^{-k}) x3)^2 adopted"},
         .body = [](A a) {
           double s = 0.0;
           for (int k = 1; k <= 10; ++k) {
             const double t = 0.1 * k;
             s += sq(exp(-t * a.x[0]) - exp(-t * a.x[1]) - (exp(-t) - exp(-double(k))) * a.x[2]);
           }
           return s;
         }});

  r.add({.name = "box-betts-quadratic-sum",
         .eq = 30,
         .title = "Box Betts Quadratic Sum",
         .props = "C D NS NSc M",
         .bounds = range(-5, 5),
         .alt = {box({0.9, 9, 0.9}, {1.2, 11.2, 1.2})},
         .dim = DimClass::fixed(3),
         .optima = {at({1, 10, 1}, 0.0, B)},
         .notes = {"printed form multiplies where the canonical form subtracts and is not zero at "
                   "the claimed minimizer; canonical Box-Betts sum adopted",
                   "prose describes a 2-D Gaussian meshgrid unrelated to the formula"},
         .body = [](A a) {
           double s = 0.0;
           for (int j = 1; j <= 10; ++j) {
             const double t = 0.1 * j;
             s += sq(exp(-t * a.x[0]) - exp(-t * a.x[1]) - (exp(-t) - exp(-double(j))) * a.x[2]);
           }
           return s;
         }});

  r.add({.name = "bradford",
         .eq = 31,
         .title = "Bradford",
         .bounds = range(0, 1),
         .optima = {at({0, 0}, 0.0, V)},
         .body = [](A a) {
           return sqrt(sq(a.x[0]) + sq(a.x[1])) + sq(sin(cube(a.x[0]))) * sq(sin(cube(a.x[1])));
         }});

  r.add({.name = "branin",
         .eq = 32,
         .title = "Branin",
         .props = "C D NS NSc M",
         .bounds = box({-5, 0}, {10, 15}),
         .optima = {at({-kPi, 12.275}, 0.3978, B, rounded(0.3978)),
                    at({kPi, 2.275}, 0.3978, B, rounded(0.3978)),
                    at({3 * kPi, 2.475}, 0.3978, B, rounded(0.3978))},
         .notes = {"printed linear term 5 x_2 / pi misses the claimed minima by more than 20; "
                   "canonical 5 x_1 / pi adopted"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(y - 5.1 * x * x / (4.0 * kPi * kPi) + 5.0 * x / kPi - 6.0) +
                  10.0 * (1.0 - 1.0 / (8.0 * kPi)) * cos(x) + 10.0;
         }});

  r.add({.name = "branin-rcos2",
         .eq = 33,
         .title = "Branin RCOS2",
         .props = "C D S NSc M",
         .bounds = range(-5, 15),
         .optima = {at({-3.2, 12.53}, 5.55904, P, rounded(5.55904))},
         .notes = {"no range printed; [-5, 15] adopted",
                   "claimed point is described as a local minimum; the formula gives about -39.085 "
                   "there, so the record is kept as a claim"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(y - 5.1 * x * x / (4.0 * kPi * kPi) + 5.0 * x / kPi - 6.0) +
                  10.0 * (1.0 - 1.0 / (8.0 * kPi)) * cos(x) * cos(y) * std::log(x * x + y * y + 1.0) +
                  10.0;
         }});

  r.add({.name = "brent",
         .eq = 34,
         .title = "Brent",
         .props = "C D NS NSc U",
         .bounds = range(-10, 10),
         .optima = {at({-10, -10}, 0.0, B)},
         .body = [](A a) {
           return sq(a.x[0] + 10.0) + sq(a.x[1] + 10.0) + exp(-sq(a.x[0]) - sq(a.x[1]));
         }});

  r.add({.name = "brown",
         .eq = 35,
         .title = "Brown",
         .props = "C D NS Sc U",
         .bounds = range(-1, 4),
         .dim = DimClass::scalable(2),
         .optima = {at_all(0.0, 0.0, B)},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             const double u = sq(a.x[i]), v = sq(a.x[i + 1]);
             s += std::pow(u, v + 1.0) + std::pow(v, u + 1.0);
           }
           return s;
         }});

  r.add({.name = "brown-almost-linear",
         .eq = 36,
         .title = "Brown Almost Linear",
         .props = "C D NS Sc U",
         .bounds = range(-0.5, 0.5),
         .optima = {at({0, 1}, 0.0, B)},
         .notes = {"labelled scalable but the printed formula is 2-D",
                   "the zero at (0, 1) lies outside the printed range [-0.5, 0.5]"},
         .body = [](A a) {
           return sq(a.x[0] - a.x[1] + 1.0) + sq(a.x[0] + a.x[1] - 1.0);
         }});

  r.add({.name = "brown-dennis",
         .eq = 37,
         .title = "Brown and Dennis",
         .bounds = range(-25, 25),
         .dim = DimClass::fixed(4),
         .optima = {at({25, 5, -5, -1}, 85822.2, P, rounded(85822.2)),
                    at({-11.5944, 13.2036, -0.403439, 0.236779}, 85822.2, B, rounded(85822.2))},
         .notes = {"printed form is a single garbled residual; canonical 20-term form with "
                   "t_i = i/5 adopted",
                   "the claimed point (25, 5, -5, -1) is the customary starting point, not the "
                   "minimizer",
                   "no range printed; [-25, 25] adopted"},
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 20; ++i) {
             const double t = i / 5.0;
             const double u = a.x[0] + t * a.x[1] - exp(t);
             const double v = a.x[2] + a.x[3] * sin(t) - cos(t);
             s += sq(u * u + v * v);
           }
           return s;
         }});

  r.add({.name = "broyden-tridiagonal",
         .eq = 38,
         .title = "Broyden Tridiagonal",
         .bounds = range(-2, 2),
         .dim = DimClass::scalable(1),
         .optima = {at_all(-1.0, 0.0, P)},
         .notes = {"printed as a single residual; canonical sum of squared residuals "
                   "((3 - 2x_i)x_i - x_{i-1} - 2x_{i+1} + 1)^2 adopted",
                   "the claimed point (-1, ..., -1) is the customary starting point; the "
                   "residuals there are not zero",
                   "no range printed; [-2, 2] adopted"},
         .body = [](A a) {
           const std::size_t n = a.x.size();
           double s = 0.0;
           for (std::size_t i = 0; i < n; ++i) {
             const double prev = i > 0 ? a.x[i - 1] : 0.0;
             const double next = i + 1 < n ? a.x[i + 1] : 0.0;
             s += sq((3.0 - 2.0 * a.x[i]) * a.x[i] - prev - 2.0 * next + 1.0);
           }
           return s;
         }});

  r.add({.name = "bukin-n2",
         .eq = 39,
         .title = "Bukin N.2",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .alt = {box({-15, -3}, {-5, 3})},
         .optima = {value_only(0.0, P)},
         .body = [](A a) {
           return 0.01 * sq(a.x[0] + 10.0) + 100.0 * sq(a.x[0] - 0.01 * sq(a.x[1]) + 1.0);
         }});

  r.add({.name = "bukin-n4",
         .eq = 40,
         .title = "Bukin N.4",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .alt = {box({-15, -3}, {-5, 3})},
         .optima = {at({0, -10}, 0.0, B)},
         .notes = {"labelled differentiable although |x1 + 10| is not differentiable at the "
                   "minimizer"},
         .body = [](A a) { return 0.01 * abs(a.x[1] + 10.0) + 100.0 * sq(a.x[0]); }});

  r.add({.name = "bukin-n6",
         .eq = 41,
         .title = "Bukin N.6",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .alt = {box({-15, -3}, {-5, 3})},
         .optima = {at({-10, 1}, 0.0, B)},
         .notes = {"labelled differentiable although the square root of |0.01x0^2 - x1| is not "
                   "differentiable on its zero set"},
         .body = [](A a) {
           return 0.01 * abs(a.x[0] + 10.0) + 100.0 * sqrt(abs(0.01 * sq(a.x[0]) - a.x[1]));
         }});

  r.add({.name = "camel-three-hump",
         .eq = 42,
         .title = "Camel Three Hump",
         .aliases = {"three-hump-camel"},
         .props = "C D NS NSc M",
         .bounds = range(-5, 5),
         .tier = 1,
         .optima = {at({0, 0}, 0.0, B)},
         .notes = {"range printed as [5, 5]; read as [-5, 5]"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return pow6(x) / 6.0 - 1.05 * pow4(x) + 2.0 * x * x + x * y + y * y;
         }});

  r.add({.name = "camel-six-hump",
         .eq = 43,
         .title = "Camel Six Hump",
         .aliases = {"six-hump-camel"},
         .props = "C D NS NSc M",
         .bounds = box({-3, -2}, {3, 2}),
         .optima = {at({0.0898, -0.7126}, -1.0316, B, rounded(1.0316)),
                    at({-0.0898, 0.7126}, -1.0316, B, rounded(1.0316))},
         .notes = {"claimed value printed as 1.0316 without the sign",
                   "ranges printed as [3, 3] and [2, 2]; read as [-3, 3] x [-2, 2]"},
         .body = [](A a) { return camel_six(a.x[0], a.x[1]); }});

  r.add({.name = "carrom-table",
         .eq = 44,
         .title = "Carrom Table",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .optima = {at({9.6461, 9.6461}, -24.15682, B, rounded(24.15682)),
                    at({-9.6461, 9.6461}, -24.15682, B, rounded(24.15682)),
                    at({9.6461, -9.6461}, -24.15682, B, rounded(24.15682)),
                    at({-9.6461, -9.6461}, -24.15682, B, rounded(24.15682))},
         .notes = {"printed form is non-negative and cannot reach the claimed -24.15682; "
                   "canonical -(1/30) e^{2|1 - r/pi|} cos^2 x1 cos^2 x2 adopted",
                   "the second claim f(0, 0) = -0.09061 does not hold for either form",
                   "range printed as [10, 10]; read as [-10, 10]"},
         .body = [](A a) {
           const double r0 = sqrt(sq(a.x[0]) + sq(a.x[1]));
           return -exp(2.0 * abs(1.0 - r0 / kPi)) * sq(cos(a.x[0])) * sq(cos(a.x[1])) / 30.0;
         }});

  r.add({.name = "chameleon",
         .eq = 45,
         .title = "Chameleon",
         .bounds = range(0, 16.49),
         .optima = {at({0.005, 2.0}, 0.0003, B, rounded(0.0003))},
         .body = [](A a) {
           return sq(sq(a.x[0]) + sq(a.x[1]) - 4.0) - 0.3 * cos(3.0 * kPi * a.x[0]) -
                  0.4 * cos(4.0 * kPi * a.x[1]) + 0.7;
         }});

  r.add({.name = "chen-bird",
         .eq = 46,
         .title = "Chen Bird",
         .props = "C D NS NSc M",
         .bounds = range(-500, 500),
         .optima = {at({-0.3888, -0.7222}, 2000.0, P, rounded(2000)),
                    at({7.0 / 18.0, 13.0 / 18.0}, -2000.0, V, rounded(2000))},
         .notes = {"claimed f(-0.3888, -0.7222) = 2000; both term denominators vanish at "
                   "(7/18, 13/18) where the printed formula reaches -2000"},
         .body = [](A a) {
           const double b = 0.001;
           return -b / (b * b + sq(a.x[0] - 0.4 * a.x[1] - 0.1)) -
                  b / (b * b + sq(2.0 * a.x[0] + a.x[1] - 1.5));
         }});

  r.add({.name = "chen-v",
         .eq = 47,
         .title = "Chen V",
         .props = "C D NS NSc M",
         .bounds = range(-500, 500),
         .optima = {at({0.3888, 0.7222}, 2000.0, P, rounded(2000))},
         .notes = {"claimed f(0.3888, 0.7222) = 2000; the printed formula is negative everywhere"},
         .body = [](A a) {
           const double b = 0.001;
           const double u = sq(a.x[0]), v = sq(a.x[1]);
           return -b / (b * b + sq(u - v + 1.0)) - b / (b * b + sq(u + v - 0.5)) -
                  b / (b * b + sq(u - v));
         }});

  r.add({.name = "chichinadze",
         .eq = 48,
         .title = "Chichinadze",
         .props = "C D S NSc M",
         .bounds = range(-30, 30),
         .optima = {at({6.189866586965680, 0.5}, -42.94438701899098, B, rounded(42.9443))},
         .body = [](A a) {
           const double x = a.x[0];
           return x * x - 12.0 * x + 11.0 + 10.0 * cos(kPi * x / 2.0) + 8.0 * sin(2.5 * kPi * x) -
                  sqrt(0.2) * exp(-0.5 * sq(a.x[1] - 0.5));
         }});

  r.add({.name = "chung-reynolds",
         .eq = 49,
         .title = "Chung Reynolds",
         .props = "C D S Sc U",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"general form printed as sum_{i=1}^{n-1} (x_i^2)^2 but the 2-D restatement is "
                   "(x0^2 + x1^2)^2; the canonical (sum x_i^2)^2 matching the 2-D form adopted",
                   "labelled separable although (sum x_i^2)^2 is not additively separable"},
         .body = [](A a) { return sq(sum_sq(a.x)); }});

  r.add({.name = "chung-reynolds-n2",
         .eq = 50,
         .title = "Chung Reynolds N.2",
         .bounds = range(-10, 10),
         .optima = {at({0, 0}, -1.0, V)},
         .notes = {"no range printed; the Chung Reynolds range [-10, 10] adopted"},
         .body = [](A a) {
           return sq(sq(a.x[0]) + sq(a.x[1])) - cos(a.x[0]) * cos(a.x[1]);
         }});

  r.add({.name = "cigar-modified",
         .eq = 51,
         .title = "Modified Cigar",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, P)},
         .notes = {"the sin(x_1) term has slope 1 at the origin, so the claimed minimizer (0, 0) "
                   "is not stationary"},
         .body = [](A a) { return sq(a.x[0]) + 1e6 * sum_sq(a.x) + sin(a.x[0]); }});

  r.add({.name = "clunar",
         .eq = 52,
         .title = "Clunar",
         .bounds = range(0, 64),
         .optima = {at({0.005, 0.005}, 8.92e-5, B, rounded(8.92e-5))},
         .body = [](A a) {
           return sq(sq(a.x[0]) + sq(a.x[1])) + sq(sin(3.0 * kPi * a.x[0])) / 50.0 +
                  sq(sin(3.0 * kPi * a.x[1])) / 50.0;
         }});

  r.add({.name = "cola",
         .eq = 53,
         .title = "Cola",
         .props = "C D S NSc M",
         .bounds = range(-4, 4),
         .dim = DimClass::fixed(17),
         .tier = 3,
         .tier_reason = "distances r_ij and d_ij in sum_{j<i} (r_ij - d_ij)^2 are never defined "
                        "(the distance matrix and coordinate mapping are missing)",
         .optima = {value_only(11.7464, P, 17, rounded(11.7464))},
         .notes = {"prose describes a Gaussian profile unrelated to the printed sum"}});

  r.add({.name = "composite-griewank-rosenbrock",
         .eq = 54,
         .title = "Composite Griewank-Rosenbrock",
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(2),
         .tier = 3,
         .tier_reason = "only the helper definitions z = max(1, 1/sqrt(8)) R x + 0.5 and s_i are "
                        "printed; the objective that combines them is missing and R is undefined",
         .notes = {"printed without a heading between Cola and Composition Function N.1; named "
                   "after the standard function these definitions belong to"}});

  r.add({.name = "composite-griewank-rosenbrock-2d",
         .eq = 55,
         .title = "Composite Griewank-Rosenbrock (2-D form)",
         .bounds = range(-5, 5),
         .notes = {"printed without a heading as the 2-D form of the preceding definitions",
                   "no range printed; [-5, 5] adopted"},
         .body = [](A a) {
           return sq(1.0 - a.x[0]) / 4000.0 + sq(-sq(a.x[0]) + a.x[1]) / 40.0 -
                  cos(sqrt(2.0) * a.x[1] / 2.0) * cos(a.x[0]) + 1.0;
         }});

  r.add({.name = "composition-n1",
         .eq = 56,
         .title = "Composition Function N.1",
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"composes the registered sphere, rastrigin and weierstrass entries"},
         .body = [](A a) {
           return 0.3 * call_entry("sphere", a.x) + 0.4 * call_entry("rastrigin", a.x) +
                  0.3 * call_entry("weierstrass", a.x);
         }});

  r.add({.name = "composition-n2",
         .eq = 57,
         .title = "Composition Function N.2",
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"composes the registered griewank, rastrigin and weierstrass entries"},
         .body = [](A a) {
           return 0.3 * call_entry("griewank", a.x) + 0.3 * call_entry("rastrigin", a.x) +
                  0.4 * call_entry("weierstrass", a.x);
         }});

  r.add({.name = "corana",
         .eq = 58,
         .title = "Corana",
         .props = "Sc M",
         .bounds = range(-100, 100),
         .dim = DimClass::fixed(4),
         .tier = 3,
         .tier_reason = "the piecewise body uses sgn(z_i^2), which is constant, and ||x_i/0.2|| "
                        "where a floor is intended; the sum over coordinates is also missing",
         .optima = {at_all(0.0, 0.0, P)}});

  r.add({.name = "cosine-envelope-sine-wave",
         .eq = 59,
         .title = "Cosine Envelope Sine Wave",
         .bounds = range(-10, 10),
         .optima = {at({0.005, 0.005}, -0.199, B, rounded(0.199)), at({0, 0}, -0.2, V)},
         .notes = {"prose name does not match the printed cosine-plus-quadratic formula"},
         .body = [](A a) {
           return -0.1 * cos(5.0 * kPi * a.x[0]) - 0.1 * cos(5.0 * kPi * a.x[1]) + sq(a.x[0]) +
                  sq(a.x[1]);
         }});

  r.add({.name = "cosine",
         .eq = 60,
         .title = "Cosine Function",
         .bounds = range(-10, 10),
         .optima = {at({kPi, kPi}, 0.9999, P, rounded(0.9999)), at({kPi, kPi}, -1.0, V)},
         .notes = {"claimed minimum 0.9999 near (pi, pi); the formula gives -1 there",
                   "no range printed; [-10, 10] adopted"},
         .body = [](A a) {
           return -exp(-sq(a.x[0] - kPi) - sq(a.x[1] - kPi)) * cos(a.x[0]) * cos(a.x[1]);
         }});

  r.add({.name = "cosine-mixture",
         .eq = 61,
         .title = "Cosine Mixture",
         .props = "NC ND NS M",
         .bounds = range(-1, 1),
         .dim = DimClass::scalable(1),
         .optima = {per_dim(value_only(0.0, P, 0, 1e-3), -0.1)},
         .notes = {"printed with -sum x_i^2, so the minimum on [-1, 1] is -0.9 per coordinate at "
                   "the corners rather than the claimed -0.1N",
                   "labelled non-continuous and non-differentiable although the formula is smooth"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += -0.1 * cos(5.0 * kPi * v) - v * v;
           return s;
         }});

  r.add({.name = "cosine-root",
         .eq = 62,
         .title = "Cosine Root",
         .bounds = range(-10, 10),
         .optima = {at({-6.2831, -6.2831}, 6.283, P, rounded(6.283))},
         .notes = {"claimed minimum 6.283 at (-6.2831, -6.2831); the formula gives -6.283 there",
                   "no range printed; [-10, 10] adopted"},
         .body = [](A a) { return -cos(a.x[0]) * cos(a.x[1]) * sqrt(abs(a.x[0] * a.x[1])); }});

  r.add({.name = "cosine-mixture-n2",
         .eq = 63,
         .title = "Cosine Mixture (second listing)",
         .bounds = range(-1, 1),
         .dim = DimClass::scalable(1),
         .optima = {value_only(0.2, P, 2, 1e-3), value_only(0.4, P, 4, 1e-3)},
         .notes = {"duplicate of the first Cosine Mixture listing with 1-based indices",
                   "range printed as [1, 1]; read as [-1, 1]",
                   "claimed values 0.2 (n = 2) and 0.4 (n = 4) carry the opposite sign of the "
                   "values at the origin"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += -0.1 * cos(5.0 * kPi * v) - v * v;
           return s;
         }});

  r.add({.name = "cross-in-tray",
         .eq = 64,
         .title = "Cross in Tray",
         .props = "C ND NS NSc M",
         .bounds = range(-15, 15),
         .alt = {range(-10, 10)},
         .tier = 1,
         .optima = {at({1.34941, 1.34941}, -2.06261, B, rounded(2.06261)),
                    at({-1.34941, 1.34941}, -2.06261, B, rounded(2.06261)),
                    at({1.34941, -1.34941}, -2.06261, B, rounded(2.06261)),
                    at({-1.34941, -1.34941}, -2.06261, B, rounded(2.06261))},
         .notes = {"printed (sin(x1 x2) exp(100 - sqrt(r)/pi))^0.1 + 1 misses the claimed "
                   "-2.06261; canonical -0.0001(|sin x1 sin x2 e^{|100 - r/pi|}| + 1)^0.1 adopted",
                   "range printed as [15, 15]; read as [-15, 15]"},
         .body = [](A a) { return -0.0001 * std::pow(cross_tray_core(a.x[0], a.x[1]), 0.1); }});

  r.add({.name = "cross-leg",
         .eq = 65,
         .title = "Cross Leg",
         .bounds = range(-10, 10),
         .optima = {at({0.752, 0.752}, -9.56e42, P, rounded(9.56e42))},
         .notes = {"no range printed; [-10, 10] adopted"},
         .body = [](A a) {
           const double r0 = sqrt(sq(a.x[0]) + sq(a.x[1]));
           return -abs(sin(a.x[0]) * cos(a.x[1]) * exp(abs(100.0 - r0 / kPi)));
         }});

  r.add({.name = "cross-leg-table",
         .eq = 66,
         .title = "Cross Leg Table",
         .props = "M",
         .bounds = range(-10, 10),
         .optima = {at({0, 0}, -1.0, P)},
         .notes = {"range printed as [10, 10]; read as [-10, 10]",
                   "the printed inner exponent is (100 - r^0.5)/pi rather than the canonical "
                   "|100 - r/pi|; f(0) = -1 holds for both, so the printed form stands",
                   "the printed absolute value encloses the +1, so values drop below -1 where "
                   "sin x1 sin x2 exp(...) nears -1"},
         .body = [](A a) {
           const double r0 = sqrt(sq(a.x[0]) + sq(a.x[1]));
           return -std::pow(
               abs(sin(a.x[0]) * sin(a.x[1]) * exp((100.0 - sqrt(r0)) / kPi) + 1.0), -0.1);
         }});

  r.add({.name = "crowned-cross",
         .eq = 67,
         .title = "Crowned Cross",
         .props = "M",
         .bounds = range(-10, 10),
         .optima = {at({0, 0}, 0.0001, B, rounded(0.0001))},
         .notes = {"range printed as [10, 10]; read as [-10, 10]",
                   "printed with the +1 inside the exponent, so the axis value is "
                   "0.0001 e^{0.1} rather than 0.0001; within the printed precision"},
         .body = [](A a) {
           const double r0 = sqrt(sq(a.x[0]) + sq(a.x[1]));
           return 0.0001 *
                  std::pow(exp(abs(100.0 - r0 / kPi) * abs(sin(a.x[0]) * sin(a.x[1])) + 1.0), 0.1);
         }});

  r.add({.name = "csendes",
         .eq = 68,
         .title = "Csendes",
         .aliases = {"ex3"},
         .bounds = range(-1, 1),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, P)},
         .notes = {"sin(1/x_i) is undefined at x_i = 0, including the claimed minimizer; "
                   "evaluation there raises DomainError"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) {
             if (v == 0.0) domain_error("csendes", "x_i = 0");
             s += (sin(1.0 / v) + 2.0) * pow6(v);
           }
           return s;
         }});

  r.add({.name = "cube",
         .eq = 69,
         .title = "Cube",
         .bounds = range(-10, 10),
         .optima = {at({-1, 1}, 0.0, P), at({1, 1}, 0.0, B)},
         .notes = {"claimed minimizer (-1, 1) gives 404; the zero is at (1, 1)"},
         .body = [](A a) { return 100.0 * sq(a.x[1] - cube(a.x[0])) + sq(1.0 - a.x[0]); }});

  r.add({.name = "cubic-ten",
         .eq = 70,
         .title = "Cubic ten",
         .bounds = range(-10, 10),
         .optima = {at({10, 10}, 0.0, P)},
         .notes = {"every term is non-positive on [-10, 10], so (10, 10) is a maximizer; the "
                   "minimum -2000 is at the origin"},
         .body = [](A a) { return cube(abs(a.x[0]) - 10.0) + cube(abs(a.x[1]) - 10.0); }});

  r.add({.name = "damavandi",
         .eq = 71,
         .title = "Damavandi",
         .bounds = range(-5, 5),
         .alt = {range(0, 14)},
         .notes = {"the ratio is 0/0 when x0 = 2 or x1 = 2; evaluation there raises DomainError"},
         .body = [](A a) {
           const double u = a.x[0] - 2.0, v = a.x[1] - 2.0;
           if (u == 0.0 || v == 0.0) domain_error("damavandi", "x0 = 2 or x1 = 2");
           const double ratio = abs(sin(kPi * u) * sin(kPi * v) / (u * v));
           return std::pow(1.0 - ratio, 5.0) *
                  (sq(a.x[0] - 7.0) + 2.0 * sq(a.x[1] - 7.0) + 2.0);
         }});

  r.add({.name = "damavandi-n2",
         .eq = 72,
         .title = "Damavandi N.2",
         .bounds = range(-5, 5),
         .alt = {range(0, 14)},
         .notes = {"the ratio is 0/0 when x0 = 2 or x1 = 2; evaluation there raises DomainError",
                   "no range printed; the Damavandi range adopted"},
         .body = [](A a) {
           const double u = a.x[0] - 2.0, v = a.x[1] - 2.0;
           if (u == 0.0 || v == 0.0) domain_error("damavandi-n2", "x0 = 2 or x1 = 2");
           return sq(1.0 - sin(kPi * u) * sin(kPi * v) / (kPi * kPi * u * v)) *
                  (sq(a.x[0] - 7.0) + 2.0 * sq(a.x[1] - 7.0) + 2.0);
         }});

  r.add({.name = "de-jong-n1",
         .eq = 73,
         .title = "De Jong",
         .props = "C U",
         .bounds = range(-5.12, 5.12),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"same formula as Sphere; the alias de-jong resolves to sphere"},
         .body = [](A a) { return sum_sq(a.x); }});

  r.add({.name = "de-jong-modified",
         .eq = 74,
         .title = "De Jong modified",
         .bounds = range(-5.12, 5.12),
         .optima = {at({0, 0}, 0.0, V)},
         .notes = {"no range printed; the De Jong range adopted"},
         .body = [](A a) { return sq(a.x[0]) + a.x[0] * a.x[1] + sq(a.x[1]); }});

  r.add({.name = "de-jong-n5",
         .eq = 75,
         .title = "De Jong N.5",
         .aliases = {"shekels-foxholes"},
         .props = "M",
         .bounds = range(-65.536, 65.536),
         .constants = {"dejong5.A"},
         .symbols = {"dejong5.A"},
         .notes = {"printed as sum_i (x0 - a_i0)^-6 + (x1 - a_i1)^-6 + 0.002 rather than the "
                   "canonical reciprocal of 0.002 + sum 1/(i + ...); kept as printed since no "
                   "optimum is claimed",
                   "each term is singular where x0 or x1 equals a table entry; evaluation there "
                   "raises DomainError"},
         .body = [t = r.get("dejong5.A")](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < 25; ++i) {
             const double u = a.x[0] - t(i, 0), v = a.x[1] - t(i, 1);
             if (u == 0.0 || v == 0.0) domain_error("de-jong-n5", "x equals a foxhole coordinate");
             s += 1.0 / pow6(u) + 1.0 / pow6(v);
           }
           return s + 0.002;
         }});

  r.add({.name = "deb-n1",
         .eq = 76,
         .title = "Deb N.1",
         .props = "C D S Sc M",
         .bounds = range(-1, 1),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.1, -1.0, B)},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += pow6(sin(5.0 * kPi * v));
           return -s / double(a.x.size());
         }});

  r.add({.name = "deb-n3",
         .eq = 77,
         .title = "Deb N.3",
         .props = "C D S Sc M",
         .bounds = range(0, 1),
         .dim = DimClass::scalable(1),
         .optima = {at_all(std::pow(0.05, 4.0 / 3.0), 0.0, B)},
         .notes = {"printed without the leading minus of the canonical form, so its minimum is 0 "
                   "as claimed; the claimed location '0' gives 0.125 and the zeros are at "
                   "x_i^0.75 = 0.05 + 0.2k",
                   "x_i^0.75 is undefined for x_i < 0; evaluation there raises DomainError"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += pow6(sin(kPi * (5.0 * real_pow("deb-n3", v, 0.75) - 0.25)));
           return s / double(a.x.size());
         }});

  r.add({.name = "deb-n4",
         .eq = 78,
         .title = "Deb N.4",
         .bounds = range(0, 1),
         .body = [](A a) {
           return -exp(0.5 * sin(kPi * a.x[1] / 16.0) * cos(kPi * a.x[0] / 12.0)) + kE + 20.0 -
                  20.0 * exp(-0.2 * sqrt(0.06 * sq(a.x[0]) + 0.015 * pow6(a.x[1]) + 1.0));
         }});

  r.add({.name = "deckkers-aarts",
         .eq = 79,
         .title = "Deckkers Aarts",
         .props = "C D NS NSc M",
         .bounds = range(-20, 20),
         .optima = {at({0, 15}, -24777.0, B, rounded(24777)),
                    at({0, -15}, -24777.0, B, rounded(24777))},
         .notes = {"the formula gives -24771.09 at (0, +-15); the claimed -24777 agrees within "
                   "printed precision"},
         .body = [](A a) {
           const double s = sq(a.x[0]) + sq(a.x[1]);
           return 1e-5 * pow4(s) - sq(s) + 1e5 * sq(a.x[0]) + sq(a.x[1]);
         }});

  r.add({.name = "deflected-corrugated-spring",
         .eq = 80,
         .title = "Deflected Corrugated Spring",
         .bounds = range(-5, 5),
         .alt = {range(0, 10)},
         .dim = DimClass::scalable(1),
         .params = {{"alpha", 5.0}, {"K", 5.0}},
         .symbols = {"alpha", "K"},
         .optima = {at_all(5.0, -1.0, B)},
         .notes = {"alpha has no printed default; alpha = 5 adopted after confirming f = -1 at "
                   "x_i = alpha"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += sq(v - a.params[0]);
           return 0.1 * s - cos(a.params[1] * sqrt(s));
         }});
}

}  // namespace optbench::detail
