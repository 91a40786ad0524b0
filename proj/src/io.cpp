#include "qbound/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace qbound {

std::string certificate_to_json(const DualCertificate& cert) {
  nlohmann::ordered_json j;
  j["q"] = cert.q;
  j["n"] = cert.n;
  j["w"] = cert.w;
  std::vector<std::string> coeffs;
  coeffs.reserve(cert.coeffs.size());
  for (const auto& c : cert.coeffs) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  j["bound"] = cert.bound.str();
  j["bound_on"] = cert.bound_on();
  j["argmax_j"] = cert.argmax_j;
  return j.dump();
}

void write_certificate(const DualCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << certificate_to_json(cert) << "\n";
}

VerifiedCertificate verify_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed certificate file: " + std::string(e.what()));
  }
  int q, n, w, argmax_claimed;
  std::vector<std::string> coeff_strings;
  std::string bound_string;
  try {
    q = j.at("q").get<int>();
    n = j.at("n").get<int>();
    w = j.at("w").get<int>();
    coeff_strings = j.at("coeffs").get<std::vector<std::string>>();
    bound_string = j.at("bound").get<std::string>();
    argmax_claimed = j.value("argmax_j", 0);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed certificate file: " + std::string(e.what()));
  }
  (void)argmax_claimed;
  std::vector<Rational> coeffs;
  coeffs.reserve(coeff_strings.size());
  for (const auto& s : coeff_strings) coeffs.push_back(Rational::from_string(s));

  VerifiedCertificate out;
  out.cert = make_certificate(q, n, w, std::move(coeffs));
  out.claimed_bound = Rational::from_string(bound_string);
  if (out.claimed_bound != out.cert.bound)
    throw CertificateError("stored bound " + out.claimed_bound.str() +
                           " disagrees with the recomputed bound " + out.cert.bound.str());
  return out;
}

void write_curve_csv(const std::vector<CurvePoint>& points, std::ostream& os) {
  if (points.empty()) throw std::invalid_argument("no curve points to write");
  std::vector<CurvePoint> sorted = points;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CurvePoint& a, const CurvePoint& b) { return a.delta < b.delta; });
  os << "delta,exponent,valid\n";
  char line[80];
  for (const auto& p : sorted) {
    std::snprintf(line, sizeof(line), "%.12f,%.12f,%d\n", p.delta, p.exponent,
                  p.valid ? 1 : 0);
    os << line;
  }
}

void write_curve_csv(const std::vector<CurvePoint>& points, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_curve_csv(points, out);
}

}  // namespace qbound
