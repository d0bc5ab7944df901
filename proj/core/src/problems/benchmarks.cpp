#include "ghosa/problems/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ghosa/error.hpp"

namespace ghosa::problems {

namespace {

using std::numbers::pi;

double sq(double v) { return v * v; }
double pow6(double v) { return v * v * v * v * v * v; }

std::vector<Bounds> box(std::size_t dim, double lo, double hi) {
  return std::vector<Bounds>(dim, Bounds{lo, hi});
}

double camel(double x1, double x2) {
  return 4 * sq(x1) - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 + x1 * x2 - 4 * sq(x2) +
         4 * std::pow(x2, 4);
}

double trap_envelope(double x, double centre, double width) {
  return std::exp(-2.0 * std::log(2.0) * sq((x - centre) / width));
}

}  // namespace

BenchmarkFunction benchmark_function(int id, std::optional<std::size_t> dim) {
  BenchmarkFunction fn;
  fn.id = id;
  auto fixed = [&](std::size_t d) {
    if (dim && *dim != d) {
      throw Error(ErrorCode::InvalidConfig,
                  "f" + std::to_string(id) + " is defined for D=" + std::to_string(d) + " only");
    }
    fn.dim = d;
  };
  auto sized = [&](std::size_t tabulated, std::size_t min_dim = 1) {
    fn.dim = dim.value_or(tabulated);
    fn.variable_dim = true;
    if (fn.dim < min_dim) {
      throw Error(ErrorCode::DimensionMismatch, "f" + std::to_string(id) + " needs D >= " +
                                                    std::to_string(min_dim));
    }
  };

  switch (id) {
    case 1:
      fn.name = "sphere";
      sized(10);
      fn.bounds = box(fn.dim, -20, 20);
      fn.optimizer.assign(fn.dim, 0.0);
      break;
    case 2:
      fn.name = "schwefel_2_22";
      sized(10);
      fn.bounds = box(fn.dim, -20, 20);
      fn.optimizer.assign(fn.dim, 0.0);
      break;
    case 3:
      fn.name = "rosenbrock";
      sized(10, 2);
      fn.bounds = box(fn.dim, -20, 20);
      fn.optimizer.assign(fn.dim, 1.0);
      break;
    case 4:
      fn.name = "shifted_sphere";
      sized(10);
      fn.bounds = box(fn.dim, -20, 20);
      fn.optimizer.assign(fn.dim, 0.5);
      break;
    case 5:
      fn.name = "rastrigin";
      sized(10);
      fn.bounds = box(fn.dim, -5.12, 5.12);
      fn.optimizer.assign(fn.dim, 0.0);
      break;
    case 6:
      fn.name = "six_hump_camel";
      fixed(2);
      fn.bounds = box(2, -5, 5);
      fn.optimum = -1.03163;
      fn.optimizer = {0.08984201368301331, -0.7126564032704135};
      fn.optimum_tolerance = 5e-6;
      break;
    case 7:
      fn.name = "branin";
      fixed(2);
      fn.bounds = {{-5, 10}, {0, 15}};
      fn.optimum = 0.398;
      fn.optimizer = {pi, 2.275};
      fn.optimum_tolerance = 5e-4;
      break;
    case 8:
      fn.name = "goldstein_price";
      fixed(2);
      fn.bounds = box(2, -2, 2);
      fn.optimum = 3.0;
      fn.optimizer = {0.0, -1.0};
      break;
    case 9:
      fn.name = "power_sum";
      sized(10);
      fn.bounds = box(fn.dim, -20, 20);
      fn.optimizer.assign(fn.dim, 0.0);
      break;
    case 10:
      fn.name = "beale";
      fixed(2);
      fn.bounds = box(2, -4.5, 4.5);
      fn.optimizer = {3.0, 0.5};
      break;
    case 11:
      fn.name = "colville";
      fixed(4);
      fn.bounds = box(4, -10, 10);
      fn.optimizer = {1.0, 1.0, 1.0, 1.0};
      break;
    case 12:
      fn.name = "quartic_noise";
      sized(10);
      fn.bounds = box(fn.dim, -1.28, 1.28);
      fn.optimizer.assign(fn.dim, 0.0);
      fn.noisy = true;
      break;
    case 13:
      fn.name = "dekkers_aarts";
      fixed(2);
      fn.bounds = box(2, -20, 20);
      fn.optimum = -24777.0;
      fn.optimizer = {0.0, 14.945112180850110};
      fn.optimum_tolerance = 1e-3 * 24777.0;
      break;
    case 14:
      fn.name = "mccormick";
      fixed(2);
      fn.bounds = {{-1.5, 4}, {-3, 3}};
      fn.optimum = -1.9133;
      fn.optimizer = {-0.5471975511965976, -1.5471975511965976};
      fn.optimum_tolerance = 1e-3 * 1.9133;
      break;
    case 15:
      fn.name = "two_peak_trap";
      fixed(1);
      fn.bounds = box(1, 0, 20);
      fn.optimizer = {15.0};
      break;
    case 16:
      fn.name = "central_two_peak_trap";
      fixed(1);
      fn.bounds = box(1, 0, 20);
      fn.optimizer = {0.0};
      break;
    case 17:
      fn.name = "five_uneven_peak_trap";
      fixed(1);
      fn.bounds = box(1, 0, 30);
      fn.optimizer = {2.5};
      break;
    case 18:
      fn.name = "equal_maxima";
      fixed(1);
      fn.bounds = box(1, 0, 1);
      fn.optimizer = {0.0};
      break;
    case 19:
      fn.name = "decreasing_maxima";
      fixed(1);
      fn.bounds = box(1, 0, 1);
      fn.optimizer = {0.0};
      break;
    case 20:
      fn.name = "uneven_maxima";
      fixed(1);
      fn.bounds = box(1, 0, 1);
      fn.optimizer = {std::pow(0.05, 4.0 / 3.0)};
      break;
    case 21:
      fn.name = "uneven_decreasing_maxima";
      fixed(1);
      fn.bounds = box(1, 0, 1);
      fn.optimizer = {std::pow(0.05, 4.0 / 3.0)};
      break;
    case 22:
      fn.name = "himmelblau";
      fixed(2);
      fn.bounds = box(2, -10, 10);
      fn.optimizer = {3.0, 2.0};
      break;
    case 23:
      fn.name = "six_hump_camel_back";
      fixed(2);
      fn.bounds = {{-1.9, 1.9}, {-1.1, 1.1}};
      fn.optimum = -1.03163;
      fn.optimizer = {0.08984201368301331, -0.7126564032704135};
      fn.optimum_tolerance = 5e-6;
      break;
    case 24:
      fn.name = "michalewicz";
      fixed(2);
      fn.bounds = box(2, 0, pi);
      fn.optimizer = {0.0, 0.0};
      break;
    case 25:
      fn.name = "matyas";
      fixed(2);
      fn.bounds = box(2, -10, 10);
      fn.optimizer = {0.0, 0.0};
      break;
    default:
      throw Error(ErrorCode::InvalidConfig, "unknown benchmark id f" + std::to_string(id));
  }
  return fn;
}

double eval_benchmark(const BenchmarkFunction& fn, std::span<const double> x, Rng* noise) {
  if (x.size() != fn.dim) {
    throw Error(ErrorCode::DimensionMismatch, "f" + std::to_string(fn.id) + " expects D=" +
                                                  std::to_string(fn.dim) + ", got " +
                                                  std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= fn.bounds[i].lo && x[i] <= fn.bounds[i].hi)) {
      throw Error(ErrorCode::OutOfBounds, "f" + std::to_string(fn.id) + " variable " +
                                              std::to_string(i) + " = " + std::to_string(x[i]));
    }
  }
  const std::size_t d = x.size();
  switch (fn.id) {
    case 1: {
      double s = 0;
      for (double v : x) s += sq(v);
      return s;
    }
    case 2: {
      double s = 0, p = 1;
      for (double v : x) {
        s += std::abs(v);
        p *= std::abs(v);
      }
      return s + p;
    }
    case 3: {
      double s = 0;
      for (std::size_t i = 0; i + 1 < d; ++i) s += 100 * sq(x[i + 1] - sq(x[i])) + sq(x[i] - 1);
      return s;
    }
    case 4: {
      double s = 0;
      for (double v : x) s += sq(v - 0.5);
      return s;
    }
    case 5: {
      double s = 0;
      for (double v : x) s += sq(v) - 10 * std::cos(2 * pi * v) + 10;
      return s;
    }
    case 6:
    case 23:
      return camel(x[0], x[1]);
    case 7:
      return sq(x[1] - 5.1 / (4 * sq(pi)) * sq(x[0]) + 5 / pi * x[0] - 6) +
             10 * (1 - 1 / (8 * pi)) * std::cos(x[0]) + 10;
    case 8: {
      const double a = x[0], b = x[1];
      const double t1 = 1 + sq(a + b + 1) * (19 - 14 * a + 3 * sq(a) - 14 * b + 6 * a * b + 3 * sq(b));
      const double t2 =
          30 + sq(2 * a - 3 * b) * (18 - 32 * a + 12 * sq(a) + 48 * b - 36 * a * b + 27 * sq(b));
      return t1 * t2;
    }
    case 9: {
      double s = 0, partial = 0;
      for (double v : x) {
        partial += v;
        s += sq(partial);
      }
      return s;
    }
    case 10:
      return sq(1.5 - x[0] * (1 - x[1])) + sq(2.25 - x[0] * (1 - sq(x[1]))) +
             sq(2.625 - x[0] * (1 - std::pow(x[1], 3)));
    case 11:
      return 100 * sq(x[1] - sq(x[0])) + sq(1 - x[0]) + 90 * sq(x[3] - sq(x[2])) + sq(1 - x[2]) +
             10.1 * (sq(x[1] - 1) + sq(x[3] - 1)) + 19.8 * (x[1] - 1) * (x[3] - 1);
    case 12: {
      double s = 0;
      for (std::size_t i = 0; i < d; ++i) s += static_cast<double>(i + 1) * std::pow(x[i], 4);
      if (noise) s += std::uniform_real_distribution<double>(0.0, 1.0)(*noise);
      return s;
    }
    case 13: {
      const double r2 = sq(x[0]) + sq(x[1]);
      return 1e5 * sq(x[0]) + sq(x[1]) - sq(r2) + 1e-5 * std::pow(r2, 4);
    }
    case 14:
      return std::sin(x[0] + x[1]) + sq(x[0] - x[1]) - 1.5 * x[0] + 2.5 * x[1] + 1;
    case 15: {
      const double v = x[0];
      return v < 15 ? 160.0 / 15.0 * (15 - v) : 200.0 / 5.0 * (v - 15);
    }
    case 16: {
      const double v = x[0];
      if (v < 10) return 160.0 / 10.0 * v;
      if (v < 15) return 160.0 / 5.0 * (15 - v);
      return 200.0 / 5.0 * (v - 15);
    }
    case 17: {
      const double v = x[0];
      if (v < 2.5) return 80 * (2.5 - v);
      if (v < 5) return 64 * (v - 2.5);
      if (v <= 7.5) return 64 * (7.5 - v);
      if (v < 12.5) return 28 * (v - 7.5);
      if (v < 17.5) return 28 * (17.5 - v);
      if (v < 22.5) return 32 * (v - 17.5);
      if (v < 27.5) return 32 * (27.5 - v);
      return 80 * (v - 27.5);
    }
    case 18:
      return pow6(std::sin(5 * pi * x[0]));
    case 19:
      return trap_envelope(x[0], 0.1, 0.8) * pow6(std::sin(5 * pi * x[0]));
    case 20:
      return pow6(std::sin(5 * pi * (std::pow(x[0], 0.75) - 0.05)));
    case 21:
      return trap_envelope(x[0], 0.08, 0.854) *
             pow6(std::sin(5 * pi * (std::pow(x[0], 0.75) - 0.05)));
    case 22:
      return sq(sq(x[0]) + x[1] - 11) + sq(x[0] + sq(x[1]) - 7);
    case 24:
      return std::sin(x[0]) * sq(std::sin(sq(x[0]) / pi)) +
             std::sin(x[1]) * sq(std::sin(2 * sq(x[1]) / pi));
    case 25:
      return 0.26 * (sq(x[0]) + sq(x[1])) - 0.48 * x[0] * x[1];
    default:
      throw Error(ErrorCode::InvalidConfig, "unknown benchmark id f" + std::to_string(fn.id));
  }
}

double eval_benchmark(int id, std::span<const double> x, Rng* noise) {
  auto fn = benchmark_function(id);
  if (fn.variable_dim) fn = benchmark_function(id, x.size());
  return eval_benchmark(fn, x, noise);
}

}  // namespace ghosa::problems
