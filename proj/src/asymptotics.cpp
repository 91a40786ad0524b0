#include "qbound/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qbound {

namespace {

constexpr double kLog2_3 = 1.5849625007211562;

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (b <= a) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, tol, 48);
}

double quaternary_integrand(double tau, double z) {
  double c = 3.0 - 2.0 * z - 4.0 * tau;
  double disc = c * c - 12.0 * z * (1.0 - z);
  if (disc < 0.0) {
    if (disc > -1e-12) disc = 0.0;  // boundary roundoff
    else throw std::domain_error("xi beyond the quaternary root region");
  }
  return std::log2((c + std::sqrt(disc)) / (6.0 * (1.0 - z)));
}

double binary_integrand(double tau, double z) {
  double c = 1.0 - 2.0 * tau;
  double disc = c * c - 4.0 * z * (1.0 - z);
  if (disc < 0.0) {
    if (disc > -1e-12) disc = 0.0;
    else throw std::domain_error("xi beyond the binary root region");
  }
  return std::log2((c + std::sqrt(disc)) / (2.0 - 2.0 * z));
}

}  // namespace

double entropy(double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("entropy needs 0 <= x <= 1");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double gv_exponent(double delta) {
  if (delta < 0.0 || delta > 0.75) throw std::domain_error("gv needs 0 <= delta <= 3/4");
  return 1.0 - delta * kLog2_3 - entropy(delta);
}

CurvePoint hamming_exponent(double delta) {
  if (delta < 0.0 || delta > 1.0) throw std::domain_error("hamming needs 0 <= delta <= 1");
  CurvePoint p;
  p.delta = delta;
  p.curve_id = "hamming";
  p.exponent = 1.0 - 0.5 * delta * kLog2_3 - entropy(0.5 * delta);
  p.valid = delta <= xi_e(0.5 * delta) + 1e-12;
  return p;
}

double singleton_exponent(double delta) {
  if (delta < 0.0 || delta > 0.5) throw std::domain_error("singleton needs 0 <= delta <= 1/2");
  return 1.0 - 2.0 * delta;
}

double xi_e(double tau) {
  if (tau < 0.0 || tau > 1.0) throw std::domain_error("xi_e needs 0 <= tau <= 1");
  return 0.75 - 0.5 * tau - 0.5 * std::sqrt(3.0 * tau * (1.0 - tau));
}

ExponentParams exponent_params(double tau, double xi) {
  ExponentParams p;
  p.tau = tau;
  p.xi = xi;
  p.nu_lo = std::max(0.0, tau - xi);
  p.nu_hi = tau - 0.5 * xi;
  p.alpha = alpha_root(tau, xi);
  p.xi_e = xi_e(tau);
  return p;
}

double alpha_root(double tau, double xi) {
  if (!(xi > 0.0) || xi >= 1.0 || !(tau > 0.0))
    throw std::domain_error("alpha_root needs 0 < xi < 1 and tau > 0");
  double lo = std::max(0.0, tau - xi);
  double hi = tau - 0.5 * xi;
  if (!(hi > lo)) throw std::domain_error("empty alpha interval");

  auto d = [&](double nu) {
    double u = (2.0 * xi + 2.0 * nu - 2.0 * tau) / xi;
    double v = nu / (1.0 - xi);
    return 2.0 * std::log2(1.0 - u) - 2.0 * std::log2(u) + std::log2(1.0 - v) -
           std::log2(v) + kLog2_3;
  };

  const int kScan = 1000;
  double span = hi - lo;
  int changes = 0;
  double blo = 0.0, bhi = 0.0;
  double prev_nu = lo + span / (kScan + 1.0);
  double prev = d(prev_nu);
  for (int k = 2; k <= kScan; ++k) {
    double nu = lo + span * k / (kScan + 1.0);
    double cur = d(nu);
    if (std::isfinite(prev) && std::isfinite(cur) && prev > 0.0 && cur <= 0.0) {
      ++changes;
      blo = prev_nu;
      bhi = nu;
    } else if (std::isfinite(prev) && std::isfinite(cur) && prev <= 0.0 && cur > 0.0) {
      ++changes;
    }
    prev = cur;
    prev_nu = nu;
  }
  if (changes == 0) throw NoSignChange("no sign change of the alpha derivative");
  if (changes != 1) throw std::domain_error("alpha derivative is not unimodal here");

  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (blo + bhi);
    double val = d(mid);
    if (std::fabs(val) < 1e-12 || bhi - blo < 1e-16) return mid;
    (val > 0.0 ? blo : bhi) = mid;
  }
  return 0.5 * (blo + bhi);
}

double kalai_log_kraw(int q, double tau, double xi) {
  if (q != 2 && q != 4) throw std::invalid_argument("q must be 2 or 4");
  if (tau < 0.0 || tau > 1.0 || xi < 0.0) throw std::domain_error("bad (tau, xi)");
  double head = (q == 4) ? entropy(tau) + tau * kLog2_3 : entropy(tau);
  if (xi == 0.0) return head;
  auto f = (q == 4)
               ? std::function<double(double)>([tau](double z) { return quaternary_integrand(tau, z); })
               : std::function<double(double)>([tau](double z) { return binary_integrand(tau, z); });
  f(xi);  // domain check at the deep end before integrating
  return head + integrate(f, 0.0, xi, 1e-11);
}

double antiderivative_closed_form(double tau, double z) {
  double a = 3.0 - 4.0 * tau;
  double c = a - 2.0 * z;
  double disc = c * c - 12.0 * z * (1.0 - z);
  if (disc < 0.0) {
    if (disc > -1e-12) disc = 0.0;
    else throw std::domain_error("z beyond the quaternary root region");
  }
  double t = std::sqrt(disc);
  return -z * std::log2(6.0) + (1.0 - z) * std::log2(1.0 - z) + z * std::log2(c + t) +
         0.25 * (a - 1.0) * std::log2(3.0 + a - 8.0 * z - 2.0 * t) -
         0.5 * std::log2(6.0 + 2.0 * a - a * a - 10.0 * z + 2.0 * a * z - (a - 2.0) * t);
}

CurvePoint lp1_exponent_binary(double delta) {
  if (delta < 0.0 || delta > 0.5) throw std::domain_error("lp1 needs 0 <= delta <= 1/2");
  CurvePoint p;
  p.delta = delta;
  p.curve_id = "lp1_binary";
  p.exponent = entropy(0.5 - std::sqrt(delta * (1.0 - delta)));
  p.valid = delta <= 0.1865 + 1e-12;
  return p;
}

namespace {

// Quaternary Hamming exponent objective at (tau = delta/2, xi), with the
// "2 + xi" leading block (minus 1 for the 2^n in K = S/2^n).  Returns the
// alpha used so the alternative form can be derived from it.
double hamming_objective(double tau, double xi, double* alpha_out) {
  if (xi <= 1e-12) {
    if (alpha_out) *alpha_out = tau;
    return 1.0 - tau * kLog2_3 - entropy(tau);
  }
  double lo = std::max(0.0, tau - xi);
  double hi = tau - 0.5 * xi;
  double alpha = (hi - lo < 1e-12) ? hi : alpha_root(tau, xi);
  if (alpha_out) *alpha_out = alpha;
  double u = std::clamp((2.0 * xi + 2.0 * alpha - 2.0 * tau) / xi, 0.0, 1.0);
  double v = std::clamp(alpha / (1.0 - xi), 0.0, 1.0);
  double integral = antiderivative_closed_form(tau, xi) - antiderivative_closed_form(tau, 0.0);
  return 1.0 + xi + xi * entropy(u) + (1.0 - xi) * entropy(v) + alpha * kLog2_3 -
         2.0 * tau * kLog2_3 - 2.0 * entropy(tau) - integral;
}

template <typename F>
void refine_argmax(const F& f, double lo, double hi, double target_step,
                   double* argmax, double* maxval) {
  double best_x = lo, best_v = f(lo);
  double step = (hi - lo) / 200.0;
  double a = lo, b = hi;
  while (true) {
    for (double x = a; x <= b + 1e-15; x += step) {
      double xs = std::min(x, hi);
      double v = f(xs);
      if (v > best_v) {
        best_v = v;
        best_x = xs;
      }
    }
    if (step <= target_step) break;
    a = std::max(lo, best_x - 2.0 * step);
    b = std::min(hi, best_x + 2.0 * step);
    step /= 20.0;
  }
  *argmax = best_x;
  *maxval = best_v;
}

}  // namespace

ScanResult hamming_exponent_scan(double delta) {
  if (!(delta > 0.0) || delta > 0.34)
    throw std::domain_error("scan needs 0 < delta <= 0.34");
  double tau = 0.5 * delta;
  ScanResult res;
  auto base = [&](double xi) { return hamming_objective(tau, xi, nullptr); };
  auto corrected = [&](double xi) {
    double alpha = 0.0;
    double v = hamming_objective(tau, xi, &alpha);
    return v + 2.0 * tau - 2.0 * alpha - 2.0 * xi;
  };
  refine_argmax(base, 0.0, delta, 1e-5, &res.argmax_xi, &res.max_value);
  refine_argmax(corrected, 0.0, delta, 1e-5, &res.argmax_xi_alt, &res.max_value_alt);
  return res;
}

BinaryScanResult lp1_binary_scan(double tau) {
  if (!(tau > 0.0) || tau >= 0.5) throw std::domain_error("scan needs 0 < tau < 1/2");
  double xi1 = 0.5 - std::sqrt(tau * (1.0 - tau));
  double hi = std::min(0.999999 * xi1, 2.0 * tau);
  auto objective = [&](double xi) {
    if (xi <= 1e-12) return entropy(tau);
    auto f = [tau](double z) { return binary_integrand(tau, z); };
    double integral = integrate(f, 0.0, xi, 1e-11);
    return 2.0 * entropy(tau) + 2.0 * integral -
           (1.0 - xi) * entropy((2.0 * tau - xi) / (2.0 - 2.0 * xi)) - xi;
  };
  BinaryScanResult res;
  refine_argmax(objective, 0.0, hi, 1e-5, &res.argmax_xi, &res.max_value);
  return res;
}

std::vector<CurvePoint> tabulate_curve(const std::string& curve_id, double delta_min,
                                       double delta_max, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (delta_max < delta_min) throw std::invalid_argument("empty delta range");
  long count = std::lround((delta_max - delta_min) / step);
  if (std::fabs(delta_min + count * step - delta_max) > 1e-9)
    count = static_cast<long>(std::floor((delta_max - delta_min) / step + 1e-9));
  std::vector<CurvePoint> points;
  points.reserve(count + 1);
  for (long k = 0; k <= count; ++k) {
    double delta = delta_min + k * step;
    CurvePoint p;
    if (curve_id == "hamming") {
      p = hamming_exponent(delta);
    } else if (curve_id == "gv") {
      p.delta = delta;
      p.curve_id = "gv";
      p.exponent = gv_exponent(delta);
      p.valid = p.exponent >= 0.0;
    } else if (curve_id == "singleton") {
      p.delta = delta;
      p.curve_id = "singleton";
      p.exponent = singleton_exponent(delta);
      p.valid = true;
    } else if (curve_id == "lp1_binary") {
      p = lp1_exponent_binary(delta);
    } else {
      throw std::invalid_argument("unknown curve id: " + curve_id);
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace qbound
