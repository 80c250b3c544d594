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

double schwefel_1_2(std::span<const double> x) {
  double s = 0.0, c = 0.0;
  for (double v : x) {
    c += v;
    s += c * c;
  }
  return s;
}

double schwefel_sine_sum(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * sin(sqrt(abs(v)));
  return s;
}

double shekel(std::span<const double> x, const ConstantTable& a, const ConstantTable& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i) {
    double d = c[i];
    for (std::size_t j = 0; j < 4; ++j) d += sq(x[j] - a(i, j));
    s += 1.0 / d;
  }
  return -s;
}

// sum_{j=1..5} j * trig((j + 1) x + j)
template <class F>
double shubert_term(double x, F trig) {
  double s = 0.0;
  for (int j = 1; j <= 5; ++j) s += double(j) * trig(double(j + 1) * x + double(j));
  return s;
}

double sum_floor(std::span<const double> x, double (*g)(double)) {
  double s = 0.0;
  for (double v : x) s += std::floor(g(v));
  return s;
}

double trid(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += sq(x[i] - 1.0);
    if (i > 0) s -= x[i] * x[i - 1];
  }
  return s;
}

Vec trid_min(std::size_t d) {
  Vec x(d);
  for (std::size_t i = 1; i <= d; ++i) x[i - 1] = double(i * (d + 1 - i));
  return x;
}

double trid_min_value(std::size_t d) {
  const double n = double(d);
  return -n * (n + 4.0) * (n - 1.0) / 6.0;
}

double step_p(double v) { return v >= 0.0 ? 1.0 : 0.0; }

double ursem_waves(double x, double y) {
  return -0.9 * x * x + (y * y - 4.5 * y) * x * y +
         4.7 * cos(3.0 * x - y * y * (2.0 + x)) * sin(2.5 * kPi * x);
}

double rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * cos(2.0 * kPi * v) + 10.0;
  return s;
}

}  // namespace

void register_group_4(Registry& r) {
  r.add({.name = "schwefel-1-2-n1",
         .eq = 241,
         .title = "Schwefel 1.2 N.1",
         .props = "stoch",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, P)},
         .notes = {"|N(0, 1)| drawn once per evaluation"},
         .body = [](A a) { return schwefel_1_2(a.x) * (1.0 + 0.4 * abs(a.rng->normal(0.0, 1.0))); }});

  r.add({.name = "schwefel-2-20",
         .eq = 242,
         .title = "Schwefel 2.20",
         .props = "C ND S Sc U",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += abs(v);
           return s;
         }});

  r.add({.name = "schwefel-2-21",
         .eq = 243,
         .title = "Schwefel 2.21",
         .props = "C U",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"no range printed; [-100, 100] taken from the neighbouring variants"},
         .body = [](A a) {
           double m = 0.0;
           for (double v : a.x) m = std::max(m, abs(v));
           return m;
         }});

  r.add({.name = "schwefel-2-22",
         .eq = 244,
         .title = "Schwefel 2.22",
         .props = "C S U",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, V)},
         .body = [](A a) {
           double s = 0.0, p = 1.0;
           for (double v : a.x) {
             s += abs(v);
             p *= abs(v);
           }
           return s + p;
         }});

  r.add({.name = "schwefel-2-23",
         .eq = 245,
         .title = "Schwefel 2.23",
         .props = "C D NS NSc M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"labelled non-separable, non-scalable and multimodal; the sum of x^10 is "
                   "separable, scalable and unimodal"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += std::pow(v, 10);
           return s;
         }});

  r.add({.name = "schwefel-2-25",
         .eq = 246,
         .title = "Schwefel 2.25",
         .props = "C",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at_all(1.0, 0.0, V)},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += sq(v - 1.0) + sq(a.x[0] - v * v);
           return s;
         }});

  r.add({.name = "schwefel-2-26",
         .eq = 247,
         .title = "Schwefel 2.26",
         .props = "C D S NSc M",
         .bounds = range(-500, 500),
         .dim = DimClass::scalable(1),
         .optima = {at_all(420.968746, -418.9829, V, 1e-4)},
         .body = [](A a) { return -schwefel_sine_sum(a.x) / double(a.x.size()); }});

  r.add({.name = "schwefel-2-36",
         .eq = 248,
         .title = "Schwefel 2.36",
         .props = "C D S Sc M",
         .bounds = range(0, 500),
         .optima = {at({0, 0.5}, 0.0, V)},
         .notes = {"printed in x1, x2 only although the prose mentions three elements",
                   "2 x2^2 - 2 x2 + 1 > 0, so the minimum 0 lies on the x1 = 0 face"},
         .body = [](A a) { return -a.x[0] * (2.0 * a.x[1] - 1.0 - 2.0 * sq(a.x[1])); }});

  r.add({.name = "schwefel-2-40",
         .eq = 249,
         .title = "Schwefel 2.40",
         .bounds = range(0, 1000),
         .dim = DimClass::fixed(5),
         .optima = {value_only(-5000.0, P, 5), at_all(1000.0, -5000.0, V, kExact, 5)},
         .notes = {"no range printed; [0, 1000] makes the stated -5000 the minimum"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s -= v;
           return s;
         }});

  r.add({.name = "schwefel-2-60",
         .eq = 250,
         .title = "Schwefel 2.60",
         .props = "C ND S Sc U",
         .bounds = range(-100, 100),
         .optima = {at({1, 3}, 0.0, V)},
         .body = [](A a) {
           return std::max(abs(a.x[0] + 2.0 * a.x[1] - 7.0), abs(2.0 * a.x[0] + a.x[1] - 5.0));
         }});

  r.add({.name = "schwefel-n7",
         .eq = 251,
         .title = "Schwefel N.7",
         .bounds = range(-500, 500),
         .dim = DimClass::scalable(1),
         .optima = {affine(at_all(420.968746, 0.0, V, 1e-3), 0.0, -418.9829)},
         .body = [](A a) { return -schwefel_sine_sum(a.x); }});

  r.add({.name = "shekel",
         .eq = 252,
         .title = "Shekel",
         .bounds = range(0, 10),
         .tier = 3,
         .tier_reason = "a_ij and c_i for the recommended m = 30 are not given"});

  r.add({.name = "shekel-5",
         .eq = 253,
         .title = "Shekel N.5",
         .aliases = {"shekel-n5"},
         .props = "C D NS Sc M",
         .bounds = range(0, 10),
         .dim = DimClass::fixed(4),
         .constants = {"shekel5.A", "shekel5.c"},
         .optima = {at({4, 4, 4, 4}, -10.1499, B, rounded(10.1499)),
                    at({4.00003715, 4.00013328, 4.00003715, 4.00013328}, -10.153199679058229, V)},
         .notes = {"f(4, 4, 4, 4) = -10.1532"},
         .body = [a = r.get("shekel5.A"), c = r.get("shekel5.c")](A e) {
           return shekel(e.x, a, c);
         }});

  r.add({.name = "shekel-7",
         .eq = 254,
         .title = "Shekel N.7",
         .aliases = {"shekel-n7"},
         .props = "C D NS Sc M",
         .bounds = range(0, 10),
         .dim = DimClass::fixed(4),
         .constants = {"shekel7.A", "shekel7.c"},
         .optima = {at({4, 4, 4, 4}, -10.3999, B, rounded(10.3999)),
                    at({4.00057291, 4.00068937, 3.99948971, 3.99960616}, -10.402940566818662,
                       V)},
         .body = [a = r.get("shekel7.A"), c = r.get("shekel7.c")](A e) {
           return shekel(e.x, a, c);
         }});

  r.add({.name = "shekel-10",
         .eq = 255,
         .title = "Shekel N.10",
         .aliases = {"shekel-n10"},
         .props = "C D NS Sc M",
         .bounds = range(0, 10),
         .dim = DimClass::fixed(4),
         .constants = {"shekel10.A", "shekel10.c"},
         .optima = {at({4, 4, 4, 4}, -10.5319, B, rounded(10.5319)),
                    at({4.00074653, 4.00059294, 3.9996634, 3.9995098}, -10.536409816692045, V)},
         .notes = {"printed with 1/((x_j - a_ij)^2 + c_i) inside the j sum, which is about "
                   "-51.3 at x = 4; the N.5/N.7 form is used"},
         .body = [a = r.get("shekel10.A"), c = r.get("shekel10.c")](A e) {
           return shekel(e.x, a, c);
         }});

  r.add({.name = "shubert",
         .eq = 256,
         .title = "Shubert",
         .props = "C D NSc M",
         .bounds = range(-10, 10),
         .optima = {at({4.85805688, -0.8003211}, -186.7309, B, rounded(186.7309)),
                    at({-7.08350641, 4.85805688}, -186.73090883102392, V)},
         .notes = {"printed without the factor j in front of the cosine, which bottoms out "
                   "near -18.1; the j-weighted form reaches -186.7309"},
         .body = [](A a) {
           auto c = [](double t) { return cos(t); };
           return shubert_term(a.x[0], c) * shubert_term(a.x[1], c);
         }});

  r.add({.name = "shubert-n3",
         .eq = 257,
         .title = "Shubert N.3",
         .aliases = {"trigonometric-polynomial", "suharev-zilinskas"},
         .props = "C D S NSc M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {affine(at_all(-7.39728499, 0.0, V), 0.0, -14.83795002571059)},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += shubert_term(v, [](double t) { return sin(t); });
           return s;
         }});

  r.add({.name = "shubert-n4",
         .eq = 258,
         .title = "Shubert N.4",
         .props = "C D S NSc M",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {affine(at_all(4.85805688, 0.0, V), 0.0, -12.870885497725688)},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += shubert_term(v, [](double t) { return cos(t); });
           return s;
         }});

  r.add({.name = "sine-cosine-half",
         .eq = 259,
         .title = "Sine Cosine and Half",
         .bounds = range(-5, 5),
         .optima = {value_only(0.0, P),
                    at({-2.93897119, -4.63369057}, -0.8728001685300633, V)},
         .notes = {"the stated minimum 0 is not the minimum: f reaches -0.8728 on the circle "
                   "r = 5.487"},
         .body = [](A a) {
           const double r2 = sq(a.x[0]) + sq(a.x[1]), rr = sqrt(r2);
           return (sin(rr) - cos(rr)) / (0.001 * r2 + 1.0) + 0.5;
         }});

  r.add({.name = "sine-envelope-sine-wave",
         .eq = 260,
         .title = "Sine Envelope Sine Wave",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(2),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"printed summand uses x0, x1 and puts + 0.5 outside the sum; read as "
                   "consecutive pairs with + 0.5 per pair so the minimum is 0 for every n"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             const double r2 = sq(a.x[i]) + sq(a.x[i + 1]);
             s += (sq(sin(sqrt(r2))) - 0.5) / sq(0.001 * r2 + 1.0) + 0.5;
           }
           return s;
         }});

  r.add({.name = "sodp",
         .eq = 261,
         .title = "SODP",
         .aliases = {"sum-of-different-powers-n"},
         .bounds = range(-1, 1),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"same formula as powell-sum"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) s += std::pow(abs(a.x[i]), double(i + 2));
           return s;
         }});

  r.add({.name = "sphere",
         .eq = 262,
         .title = "Sphere",
         .aliases = {"de-jong"},
         .props = "C D S Sc U",
         .bounds = range(-100, 100),
         .alt = {range(-5.12, 5.12)},
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"property line says multimodal; the prose says unimodal, which is used"},
         .body = [](A a) { return sum_sq(a.x); }});

  r.add({.name = "step",
         .eq = 263,
         .title = "Step",
         .props = "NC D S Sc M",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at({-0.5, 0.5}, 0.0, B)},
         .notes = {"labelled both non-continuous and differentiable"},
         .body = [](A a) { return sum_floor(a.x, [](double v) { return std::fabs(v); }); }});

  r.add({.name = "step-2d",
         .eq = 263,
         .title = "Step (2-D form)",
         .bounds = range(-100, 100),
         .notes = {"printed 2-D form drops the absolute values and is a different function"},
         .body = [](A a) { return std::floor(a.x[0]) + std::floor(a.x[1]); }});

  r.add({.name = "step-n2",
         .eq = 264,
         .title = "Step N.2",
         .props = "NC ND S Sc U",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at({-0.5, 0.5}, 0.0, P), at_all(0.0, 0.0, V)},
         .notes = {"f(-0.5, 0.5) = 1; f = 0 whenever every |x_i + 0.5| < 1"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += sq(std::floor(abs(v + 0.5)));
           return s;
         }});

  r.add({.name = "step-n3",
         .eq = 265,
         .title = "Step N.3",
         .props = "NC ND S Sc U",
         .bounds = range(-100, 100),
         .dim = DimClass::scalable(1),
         .optima = {at({-1, 1}, 0.0, P), at_all(0.0, 0.0, V)},
         .notes = {"brackets read as floor; f(-1, 1) = 2 and f = 0 whenever every |x_i| < 1"},
         .body = [](A a) { return sum_floor(a.x, [](double v) { return v * v; }); }});

  r.add({.name = "stepint",
         .eq = 266,
         .title = "Stepint",
         .props = "NC ND S Sc U",
         .bounds = range(-5.12, 5.12),
         .dim = DimClass::scalable(1),
         .optima = {value_only(0.0, P), affine(at_all(-5.12, 0.0, V), 25.0, -6.0)},
         .notes = {"brackets read as floor; the minimum on the box is 25 - 6d at x_i = -5.12, "
                   "0 only for an unstated dimension"},
         .body = [](A a) { return 25.0 + sum_floor(a.x, [](double v) { return v; }); }});

  r.add({.name = "stochastic",
         .eq = 267,
         .title = "Stochastic",
         .bounds = range(-5, 5),
         .tier = 3,
         .tier_reason = "distribution of epsilon_i is not given",
         .optima = {at({1.0, 0.5}, 0.0, P)}});

  r.add({.name = "stretched-cosine-wave",
         .eq = 268,
         .title = "Stretched Cosine Wave",
         .bounds = range(-10, 10),
         .optima = {at({0, 0}, 0.5, V)},
         .body = [](A a) {
           const double r2 = sq(a.x[0]) + sq(a.x[1]);
           return 0.5 + r2 * cos(a.x[0] / (3.0 * kPi)) * cos(a.x[1] / (3.0 * kPi)) /
                            (sqrt(r2) + 1e-8);
         }});

  r.add({.name = "stretched-v-sine-wave",
         .eq = 269,
         .title = "Stretched V Sine Wave",
         .props = "C D NS Sc U",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(2),
         .optima = {affine(at_all(0.0, 0.0, V), -0.1, 0.1)},
         .notes = {"printed + 0.1 sits outside the sine factor, so each pair adds 0.1"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
             const double r2 = sq(a.x[i + 1]) + sq(a.x[i]);
             s += std::pow(r2, 0.25) * sq(sin(50.0 * std::pow(r2, 0.1))) + 0.1;
           }
           return s;
         }});

  r.add({.name = "styblinski-tang",
         .eq = 270,
         .title = "Styblinski Tang",
         .props = "C D NS NSc M",
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {affine(at_all(-2.9035, 0.0, B, 1e-2), 0.0, -39.16599),
                    affine(at_all(-2.903534027771178, 0.0, V, 1e-9), 0.0, -39.16616570377142)},
         .notes = {"labelled non-separable and non-scalable; the sum is separable and written "
                   "for any n"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += pow4(v) - 16.0 * v * v + 5.0 * v;
           return 0.5 * s;
         }});

  r.add({.name = "sum-of-different-powers",
         .eq = 271,
         .title = "Sum of Different Powers",
         .props = "U",
         .optima = {at({0, 0}, 0.0, B)},
         .body = [](A a) { return sq(a.x[0]) + cube(abs(a.x[1])); }});

  r.add({.name = "sum-squares",
         .eq = 272,
         .title = "Sum Squares",
         .props = "C S Sc U",
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"printed sum runs to 2; written for any n as in axis-parallel-hyper-ellipsoid",
                   "no separability label printed; separable from the additive form"},
         .body = [](A a) {
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) s += double(i + 1) * sq(a.x[i]);
           return s;
         }});

  r.add({.name = "tablet",
         .eq = 273,
         .title = "Tablet",
         .dim = DimClass::scalable(2),
         .optima = {at_all(0.0, 0.0, V)},
         .notes = {"printed e^6 x0^2 + x_i^2 read as e^6 x0^2 + sum_{i>=1} x_i^2"},
         .body = [](A a) {
           double s = exp(6.0) * sq(a.x[0]);
           for (std::size_t i = 1; i < a.x.size(); ++i) s += sq(a.x[i]);
           return s;
         }});

  r.add({.name = "testtube-holder",
         .eq = 274,
         .title = "Testtube Holder",
         .props = "C D S Sc M",
         .bounds = range(-10, 10),
         .alt = {range(-1, 4)},
         .optima = {at({-kPi / 2, 0}, -10.8722, B, rounded(10.8722)),
                    at({kPi / 2, 0}, -10.8722, B, rounded(10.8722))},
         .notes = {"printed form is +10.87 at (-pi/2, 0); the absolute value of the product is "
                   "taken, which gives -10.8723",
                   "the stated minimizer lies outside the printed [-1, 4], so [-10, 10] is used"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return -4.0 * abs(sin(x) * cos(y) * exp(abs(cos((x * x + y * y) / 200.0))));
         }});

  r.add({.name = "thevenot",
         .eq = 275,
         .title = "Thevenot",
         .props = "C D S Sc M",
         .bounds = range(-20, 20),
         .dim = DimClass::scalable(1),
         .params = {{"m", 5.0}, {"beta", 15.0}},
         .symbols = {"m", "beta"},
         .optima = {at_all(0.0, -1.0, P)},
         .notes = {"no range printed; [-20, 20] as for xin-she-yang-n3",
                   "f(0) = -1 is not the minimum: with one coordinate 0 the product term is "
                   "-2 prod cos^2 and the envelope vanishes for large |x|, so f nears -2"},
         .body = [](A a) {
           const double m = a.params[0], beta = a.params[1];
           double s = 0.0, p = 1.0, c = 1.0;
           for (double v : a.x) {
             s += std::pow(v / beta, 2.0 * m);
             p *= v * v;
             c *= sq(cos(v));
           }
           return exp(-s) - 2.0 * exp(-p) * c;
         }});

  r.add({.name = "thurber",
         .eq = 276,
         .title = "Thurber",
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           const double g = -x * x - 100000.0 * x + y;
           return log(sq(g - 1000.0) + sq(g + 1000.0));
         }});

  r.add({.name = "trec",
         .eq = 277,
         .title = "Trec",
         .optima = {at({std::sqrt(0.5), 0}, -0.25, V), at({-std::sqrt(0.5), 0}, -0.25, V)},
         .body = [](A a) { return pow4(a.x[0]) - sq(a.x[0]) + 0.1 * sq(a.x[1]); }});

  r.add({.name = "trecanni",
         .eq = 278,
         .title = "Trecanni",
         .props = "C D S Sc U",
         .optima = {at({-2, 0}, 0.0, B), at({0, 0}, 0.0, B)},
         .notes = {"printed x^4 - 4x^3 + 4x + y^2 is 40 at (-2, 0); x^4 + 4x^3 + 4x^2 + y^2 "
                   "is used"},
         .body = [](A a) {
           const double x = a.x[0];
           return pow4(x) + 4.0 * cube(x) + 4.0 * x * x + sq(a.x[1]);
         }});

  r.add({.name = "trefethen",
         .eq = 279,
         .title = "Trefethen",
         .bounds = range(-10, 10),
         .optima = {at({-0.0244, 0.2106}, -3.3068, B, rounded(3.3068)),
                    at({-0.02440307923, 0.2106124261}, -3.3068686474752, V)},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return exp(sin(50.0 * x)) - sin(10.0 * x + 10.0 * y) + sin(60.0 * exp(y)) +
                  sin(70.0 * sin(x)) + sin(sin(80.0 * y)) + x * x / 4.0 + y * y / 4.0;
         }});

  r.add({.name = "trid",
         .eq = 280,
         .title = "Trid",
         .props = "U",
         .bounds = range_times_dim(-1, 1, 2),
         .dim = DimClass::scalable(2),
         .optima = {at(trid_min(2), trid_min_value(2), V), at(trid_min(6), -50.0, B),
                    value_only(-200.0, P, 10), at(trid_min(10), trid_min_value(10), V)},
         .notes = {"printed sums repeat x0 and x1; sum (x_i - 1)^2 - sum x_i x_{i-1} is used",
                   "the minimum for d = 10 is -210, not -200"},
         .body = [](A a) { return trid(a.x); }});

  r.add({.name = "trid-n6",
         .eq = 281,
         .title = "Trid N.6",
         .props = "C D NS NSc M",
         .bounds = range(-36, 36),
         .alt = {range(-6, 6)},
         .dim = DimClass::fixed(6),
         .optima = {at(trid_min(6), -50.0, B)},
         .notes = {"the minimizer (6, 10, 12, 12, 10, 6) lies outside the printed [-6, 6]; "
                   "[-d^2, d^2] is used"},
         .body = [](A a) { return trid(a.x); }});

  r.add({.name = "trid-n10",
         .eq = 282,
         .title = "Trid N.10",
         .props = "C D NS NSc M",
         .bounds = range(-100, 100),
         .dim = DimClass::fixed(10),
         .optima = {value_only(-200.0, P), at(trid_min(10), trid_min_value(10), V)},
         .notes = {"the minimum is -210 at x_i = i (11 - i)"},
         .body = [](A a) { return trid(a.x); }});

  r.add({.name = "trigonometric",
         .eq = 283,
         .title = "Trigonometric",
         .aliases = {"trigonometric-n1"},
         .props = "C D NS Sc M",
         .bounds = range(0, kPi),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"read as sum_i [(D - sum_j cos x_j) + i (1 - cos x_i - sin x_i)^2] without "
                   "the outer square of the usual form"},
         .body = [](A a) {
           const double d = double(a.x.size());
           double c = 0.0;
           for (double v : a.x) c += cos(v);
           double s = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) {
             s += (d - c) + double(i + 1) * sq(1.0 - cos(a.x[i]) - sin(a.x[i]));
           }
           return s;
         }});

  r.add({.name = "trigonometric-n2",
         .eq = 284,
         .title = "Trigonometric N.2",
         .props = "C D NS Sc M",
         .bounds = range(-500, 500),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.9, 1.0, B)},
         .body = [](A a) {
           double s = 1.0;
           for (double v : a.x) {
             const double t = sq(v - 0.9);
             s += 8.0 * sq(sin(7.0 * t)) + 6.0 * sq(sin(14.0 * t)) + t;
           }
           return s;
         }});

  r.add({.name = "trimmed-sphere",
         .eq = 285,
         .title = "Trimmed Sphere",
         .bounds = range(-10, 10),
         .optima = {at({0, 0}, 0.0, V)},
         .body = [](A a) {
           const double r2 = sq(a.x[0]) + sq(a.x[1]);
           return r2 < 0.5 ? r2 : 0.5;
         }});

  r.add({.name = "tripod",
         .eq = 286,
         .title = "Tripod",
         .props = "NS M",
         .bounds = range(-100, 100),
         .optima = {at({-50, 0}, 0.0, P), at({0, -50}, 0.0, B)},
         .notes = {"p(t) = 1 for t >= 0, else 0", "f(-50, 0) = 51; the zero is at (0, -50)"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1], px = step_p(x), py = step_p(y);
           return py * (1.0 + px) + abs(x + 50.0 * py * (1.0 - 2.0 * px)) +
                  abs(y + 50.0 * (1.0 - 2.0 * py));
         }});

  r.add({.name = "two-axis",
         .eq = 287,
         .title = "Two Axis",
         .optima = {at({0, 0}, 0.0, V)},
         .notes = {"prose says it increases in all directions; it is 0 along both axes"},
         .body = [](A a) { return sq(a.x[0]) * sq(a.x[1]); }});

  r.add({.name = "urfun-n2",
         .eq = 288,
         .title = "Urfun N.2",
         .body = [](A a) {
           double s = 0.0;
           for (int i = 1; i <= 5; ++i) {
             const double di = double(i);
             s += sin(2.0 * di * a.x[0] + di) * sin(2.0 * di * a.x[1] + di) /
                  (di * di * di * (di + 1.0));
           }
           return s;
         }});

  r.add({.name = "ursem",
         .eq = 289,
         .title = "Ursem",
         .aliases = {"ursem-n1"},
         .props = "NSc",
         .bounds = range(-2.3, 3),
         .optima = {at({1.6971, 0}, -4.816, B, rounded(4.816)),
                    at({1.69713644, 0}, -4.816814063734823, V)},
         .body = [](A a) {
           return -sin(2.0 * a.x[0] - 0.5 * kPi) - 3.0 * cos(a.x[1]) - 0.5 * a.x[0];
         }});

  r.add({.name = "ursem-n3",
         .eq = 290,
         .title = "Ursem N.3",
         .props = "NSc",
         .bounds = box({-2, -1.5}, {2, 1.5}),
         .optima = {at({0, 0}, -2.5, P), at({0, 0}, -3.0, V)},
         .notes = {"f(0, 0) = -3, not -2.5"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return -sin(2.2 * kPi * x + 0.5 * kPi) * (2.0 - abs(x)) / 2.0 * (3.0 - abs(x)) / 2.0 -
                  sin(0.5 * kPi * y * y + 0.5 * kPi) * (2.0 - abs(y)) / 2.0 * (3.0 - abs(y)) / 2.0;
         }});

  r.add({.name = "ursem-n4",
         .eq = 291,
         .title = "Ursem N.4",
         .props = "NSc",
         .bounds = range(-2, 2),
         .optima = {at({0, 0}, -1.5, B)},
         .body = [](A a) {
           const double rr = sqrt(sq(a.x[0]) + sq(a.x[1]));
           return -3.0 * sin(0.5 * kPi * a.x[0] + 0.5 * kPi) * (2.0 - rr) / 4.0;
         }});

  r.add({.name = "ursem-waves",
         .eq = 292,
         .title = "Ursem Waves",
         .bounds = box({-0.9, -1.2}, {1.2, 1.2}),
         .optima = {at({-0.6056, -1.1775}, -8.553, P, rounded(8.553)),
                    at({1.2, -1.2}, -11.1456, V)},
         .notes = {"f(-0.6056, -1.1775) = 0.585; the box minimum is -11.1456 at the corner "
                   "(1.2, -1.2)"},
         .body = [](A a) { return ursem_waves(a.x[0], a.x[1]); }});

  r.add({.name = "ursem-wavesfun-n2",
         .eq = 293,
         .title = "Ursem Wavesfun N.2",
         .props = "NSc",
         .bounds = box({-0.9, -1.2}, {1.2, 1.2}),
         .optima = {at({-0.6056, -1.1775}, -7.3069, P, rounded(7.3069)),
                    at({1.04260927, 1.04260927}, -4.086648967012266, V)},
         .notes = {"f(-0.6056, -1.1775) = -0.754; the minimum on the box is -4.0866"},
         .body = [](A a) {
           return 2.5 * sin(1.5 * kPi * a.x[0]) * a.x[0] + 1.5 * sin(1.5 * kPi * a.x[1]) * a.x[1];
         }});

  r.add({.name = "venter-sobiezcchanski-sobieski",
         .eq = 294,
         .title = "Venter Sobiezcchanski Sobieski",
         .props = "C D S NSc",
         .bounds = range(-50, 10),
         .optima = {value_only(1000.0, P), at({0, 0}, -400.0, V)},
         .notes = {"each coordinate contributes at least -200, reached at 0; the stated 1000 "
                   "is not a minimum"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += v * v - 100.0 * cos(v * v) - 100.0 * cos(v * v / 30.0);
           return s;
         }});

  r.add({.name = "vincent",
         .eq = 295,
         .title = "Vincent",
         .bounds = range(0.25, 10),
         .dim = DimClass::scalable(1),
         .optima = {affine(at_all(1.1700887874964219, 0.0, V), 0.0, -1.0)},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) {
             if (v <= 0.0) domain_error("vincent", "log of non-positive value");
             s -= sin(10.0 * log(v));
           }
           return s;
         }});

  r.add({.name = "watson",
         .eq = 296,
         .title = "Watson",
         .bounds = range(-5, 5),
         .dim = DimClass::fixed(6),
         .tier = 3,
         .tier_reason = "d_{i,j} and d_j are not defined",
         .optima = {at({-0.0158, 1.012, -0.2329, 1.60, -1.513, 0.9928}, 0.0228, P,
                       rounded(0.0228))}});

  r.add({.name = "wavy",
         .eq = 297,
         .title = "Wavy",
         .props = "C D S Sc M",
         .bounds = range(-kPi, kPi),
         .dim = DimClass::scalable(1),
         .params = {{"k", 10.0}},
         .symbols = {"k"},
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"k has no printed value; 10 used", "j in the exponent read as 1"},
         .body = [](A a) {
           double s = 0.0;
           for (double v : a.x) s += cos(a.params[0] * v) * exp(-v * v / 2.0);
           return 1.0 - s / double(a.x.size());
         }});

  r.add({.name = "wayburn-seader",
         .eq = 298,
         .title = "Wayburn Seader",
         .aliases = {"wayburn-seader-n1"},
         .bounds = range(-500, 500),
         .optima = {at({1, 2}, 0.0, B), at({1.5968, 0.8063}, 0.0, B, rounded(0.0))},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(2.0 * x + y - 4.0) + sq(pow6(x) + pow4(y) - 17.0);
         }});

  r.add({.name = "wayburn-seader-n2",
         .eq = 299,
         .title = "Wayburn Seader N.2",
         .props = "C D NS Sc U",
         .bounds = range(-500, 500),
         .optima = {at({0.20013, 1}, 0.0, B, rounded(0.0)),
                    at({0.42486, 1}, 0.0, B, rounded(0.0))},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(1.613 - 4.0 * sq(x - 0.3125) - 4.0 * sq(y - 1.625)) + sq(y - 1.0);
         }});

  r.add({.name = "wayburn-seader-n3",
         .eq = 300,
         .title = "Wayburn Seader N.3",
         .props = "C D NS Sc U",
         .bounds = range(-0.5, 0.5),
         .optima = {at({0, 0}, 0.0, P)},
         .notes = {"f(0, 0) = 1374"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return 2.0 / 3.0 * cube(x) - 8.0 * y * y + 33.0 * x * y - x * y + 5.0 +
                  sq(sq(x - 4.0) + sq(y - 5.0) - 4.0);
         }});

  r.add({.name = "weierstrass",
         .eq = 301,
         .title = "Weierstrass",
         .props = "C D S Sc M",
         .bounds = range(-0.5, 0.5),
         .dim = DimClass::scalable(1),
         .params = {{"a", 0.5}, {"b", 3.0}, {"kmax", 20.0}},
         .symbols = {"a", "b", "kmax"},
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"a, b and k_max have no printed values; 0.5, 3 and 20 used",
                   "j in the second term read as 1"},
         .body = [](A e) {
           const double a = e.params[0], b = e.params[1];
           const int kmax = int(e.params[2]);
           double s = 0.0, c = 0.0;
           for (int k = 0; k <= kmax; ++k) {
             const double ak = std::pow(a, k), bk = std::pow(b, k);
             for (double v : e.x) s += ak * cos(2.0 * kPi * bk * (v + 0.5));
             c += ak * cos(kPi * bk);
           }
           return s - double(e.x.size()) * c;
         }});

  r.add({.name = "whitley",
         .eq = 302,
         .title = "Whitley",
         .props = "C D NS Sc M",
         .bounds = range(-10.24, 10.24),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, P), at_all(1.0, 0.0, V)},
         .notes = {"summed over all pairs (i, j) with + 1 outside the cosine",
                   "f(0) = 0.46 d^2; the zero is at x_i = 1"},
         .body = [](A a) {
           double s = 0.0;
           for (double xi : a.x) {
             for (double xj : a.x) {
               const double t = 100.0 * sq(xi * xi - xj) + sq(1.0 - xj);
               s += t * t / 4000.0 - cos(t) + 1.0;
             }
           }
           return s;
         }});

  r.add({.name = "wolfe",
         .eq = 303,
         .title = "Wolfe",
         .props = "C D S Sc M",
         .bounds = range(-10, 10),
         .dim = DimClass::fixed(3),
         .optima = {at({0, 0, 0}, 0.0, P), at({0, 0, -10}, -10.0, V)},
         .notes = {"x3 enters linearly, so on [-10, 10] the minimum is -10 at (0, 0, -10)"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return 4.0 / 3.0 * std::pow(x * x - x * y + y * y, 0.75) + a.x[2];
         }});

  r.add({.name = "xin-she-yang-n1",
         .eq = 304,
         .title = "Xin She Yang N.1",
         .bounds = range(-2 * kPi, 2 * kPi),
         .dim = DimClass::scalable(1),
         .tier = 3,
         .tier_reason = "distribution of epsilon_i is not given"});

  r.add({.name = "xin-she-yang-n2",
         .eq = 305,
         .title = "Xin She Yang N.2",
         .props = "S",
         .bounds = range(-2 * kPi, 2 * kPi),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .body = [](A a) {
           double s = 0.0, t = 0.0;
           for (double v : a.x) {
             s += abs(v);
             t += sin(v * v);
           }
           return s * exp(-t);
         }});

  r.add({.name = "xin-she-yang-n3",
         .eq = 306,
         .title = "Xin She Yang N.3",
         .props = "NS",
         .bounds = range(-20, 20),
         .dim = DimClass::scalable(1),
         .params = {{"m", 5.0}, {"beta", 15.0}},
         .symbols = {"m", "beta"},
         .optima = {at_all(0.0, -1.0, B)},
         .notes = {"m and beta have no printed values; the thevenot values 5 and 15 used"},
         .body = [](A a) {
           const double m = a.params[0], beta = a.params[1];
           double s = 0.0, q = 0.0, c = 1.0;
           for (double v : a.x) {
             s += std::pow(v * v / beta, 2.0 * m);
             q += v * v;
             c *= sq(cos(v));
           }
           return exp(-s) - 2.0 * exp(-q) * c;
         }});

  r.add({.name = "xin-she-yang-n4",
         .eq = 307,
         .title = "Xin She Yang N.4",
         .props = "NSc",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, -2.0, V)},
         .notes = {"printed with subtraction between the two factors; every term is bounded "
                   "so the minimum is -2 at 0"},
         .body = [](A a) {
           double s = 0.0, q = 0.0, t = 0.0;
           for (double v : a.x) {
             s += sq(sin(v));
             q += v * v;
             t += sq(sin(sqrt(abs(v))));
           }
           return (s - exp(-q)) - exp(-t);
         }});

  r.add({.name = "xin-she-yang-n7",
         .eq = 308,
         .title = "Xin She Yang N.7",
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(1),
         .tier = 3,
         .tier_reason = "printed formula is the stochastic one with undefined epsilon_i; intended "
                        "body unknown"});

  r.add({.name = "yao-liu-n4",
         .eq = 309,
         .title = "Yao Liu N.4",
         .bounds = range(-5, 5),
         .dim = DimClass::scalable(1),
         .optima = {value_only(-1.0, P), at_all(0.0, 0.0, V)},
         .notes = {"max |x_i| is non-negative; the stated -1 at 1/i is unreachable"},
         .body = [](A a) {
           double m = 0.0;
           for (double v : a.x) m = std::max(m, abs(v));
           return m;
         }});

  r.add({.name = "yao-liu-n9",
         .eq = 310,
         .title = "Yao Liu N.9",
         .bounds = range(-5.12, 5.12),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"printed body is the rastrigin sum; the prose describes |x^2 - y^2| plus a "
                   "linear sum"},
         .body = [](A a) { return rastrigin(a.x); }});

  r.add({.name = "zakharov",
         .eq = 311,
         .title = "Zakharov",
         .props = "C D NS Sc U",
         .bounds = range(-5, 10),
         .dim = DimClass::scalable(1),
         .tier = 1,
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"last exponent printed as 4n; the usual 4 is used",
                   "property line says multimodal; the prose says no local minimum besides "
                   "the global one, which is used"},
         .body = [](A a) {
           double s = 0.0, w = 0.0;
           for (std::size_t i = 0; i < a.x.size(); ++i) {
             s += sq(a.x[i]);
             w += 0.5 * double(i + 1) * a.x[i];
           }
           return s + sq(w) + pow4(w);
         }});

  r.add({.name = "zero-sum",
         .eq = 312,
         .title = "Zero Sum",
         .bounds = range(-10, 10),
         .dim = DimClass::scalable(1),
         .optima = {at_all(0.0, 0.0, B)},
         .notes = {"prose describes 2x^2 + 2y^2, unrelated to the printed body"},
         .body = [](A a) {
           double s = 0.0, m = 0.0;
           for (double v : a.x) {
             s += v;
             m += abs(v);
           }
           return s == 0.0 ? 0.0 : 1.0 + std::sqrt(10000.0 * m);
         }});

  r.add({.name = "zettl",
         .eq = 313,
         .title = "Zettl",
         .props = "C D NS NSc M",
         .bounds = range(-1, 5),
         .optima = {at({-0.0299, 0}, -0.003791, B, rounded(0.003791)),
                    at({-0.029895985, 0}, -0.0037912372204689, V)},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x * x - 2.0 * x + y * y) + 0.25 * x;
         }});

  r.add({.name = "zettl-variant",
         .eq = 314,
         .title = "Zettl Variant",
         .bounds = range(-5, 5),
         .optima = {at({0, 0}, 0.0, P), at({-0.0574537726, 0}, -1.0147536412757057, V)},
         .notes = {"f(0, 0) = -1; the minimum is -1.01475"},
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x * x - 2.0 * x + y * y) - cos(y) + 0.5 * x;
         }});

  r.add({.name = "zoom",
         .eq = 315,
         .title = "Zoom",
         .body = [](A a) {
           const double x = a.x[0], y = a.x[1];
           return sq(x - 3.1) + sq(y - 3.3) + sin(x * y);
         }});
}

}  // namespace optbench::detail
