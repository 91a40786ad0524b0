// qbound: exact linear-programming bounds for quantum codes.
//
// Exit codes: 0 success, 1 computation/verification failure, 2 usage error.

#include "CLI11.hpp"

#include "qbound/asymptotics.hpp"
#include "qbound/certificates.hpp"
#include "qbound/enum_lp.hpp"
#include "qbound/io.hpp"
#include "qbound/kraw.hpp"
#include "qbound/mixed_bounds.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace qbound;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Output {
  std::string path;    // empty: stdout
  std::string format;  // text | json | csv

  void emit(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << payload;
  }
};

void add_output_flags(CLI::App* cmd, Output* out, const std::string& default_format) {
  out->format = default_format;
  cmd->add_option("--out", out->path, "write output to a file instead of stdout");
  cmd->add_option("--format", out->format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

std::string certificate_text(const DualCertificate& cert, const std::string& name) {
  std::ostringstream os;
  os << "certificate: " << name << " q=" << cert.q << " n=" << cert.n << " w=" << cert.w
     << "\n";
  os << "bound: " << cert.bound_on() << " <= " << cert.bound.str_pretty();
  if (!cert.bound.is_integer())
    os << " (" << cert.bound_on() << " <= " << cert.bound.floor().get_str() << ")";
  os << "\n";
  os << "argmax_j: " << cert.argmax_j << "\n";
  return os.str();
}

void emit_certificate(const DualCertificate& cert, const std::string& name, const Output& out) {
  if (out.format == "json")
    out.emit(certificate_to_json(cert) + "\n");
  else
    out.emit(certificate_text(cert, name));
}

std::string lp_outcome_json(int n, long long K, int w, const LpOutcome& o) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["K"] = K;
  j["w"] = w;
  j["feasible"] = o.feasible;
  auto strings = [](const std::vector<Rational>& v) {
    std::vector<std::string> s;
    s.reserve(v.size());
    for (const auto& r : v) s.push_back(r.str());
    return s;
  };
  if (o.feasible) {
    j["A"] = strings(o.A);
    j["Aperp"] = strings(o.Aperp);
  } else {
    j["farkas"] = strings(o.farkas);
  }
  return j.dump();
}

std::string vector_pretty(const std::vector<Rational>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str_pretty();
  }
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact linear-programming bounds for quantum codes"};
  app.require_subcommand(1);

  int n = 0, w = 0, q = 4, i = -1, x = -1, k = 0, k1 = 0, l = 0;
  long long K = 0;
  double delta_min = 0.0, delta_max = 0.0, step = 0.01;
  std::string path, curve_id;

  Output out_singleton, out_hamming, out_lp, out_lp1, out_kraw, out_curve, out_verify,
      out_mixed_p, out_mixed_h, out_stab_p, out_stab_h;

  auto* singleton = app.add_subcommand("singleton", "Singleton-type bound 2^{n-2w+2}");
  singleton->add_option("--n", n)->required();
  singleton->add_option("--w", w)->required();
  add_output_flags(singleton, &out_singleton, "text");

  auto* hamming = app.add_subcommand("hamming", "Hamming-type certificate bound (odd w)");
  hamming->add_option("--n", n)->required();
  hamming->add_option("--w", w)->required();
  add_output_flags(hamming, &out_hamming, "text");

  auto* lp = app.add_subcommand("lp", "exact enumerator-LP bound on K");
  lp->add_option("--n", n)->required();
  lp->add_option("--w", w)->required();
  lp->add_option("--K", K, "check feasibility of one K instead of scanning");
  add_output_flags(lp, &out_lp, "text");

  auto* lp1 = app.add_subcommand("lp1-binary", "binary first-LP certificate bound on S");
  lp1->add_option("--n", n)->required();
  lp1->add_option("--w", w)->required();
  add_output_flags(lp1, &out_lp1, "text");

  auto* cert = app.add_subcommand("cert", "certificate file operations");
  cert->require_subcommand(1);
  auto* verify = cert->add_subcommand("verify", "re-check a certificate file from its coefficients");
  verify->add_option("path", path, "certificate JSON file")->required();
  add_output_flags(verify, &out_verify, "text");

  auto* mixed = app.add_subcommand("mixed", "bounds for mixed group codes");
  mixed->require_subcommand(1);
  auto* mixed_p = mixed->add_subcommand("plotkin", "mixed Plotkin bound");
  mixed_p->add_option("--l", l)->required();
  mixed_p->add_option("--n", n)->required();
  mixed_p->add_option("--k", k)->required();
  add_output_flags(mixed_p, &out_mixed_p, "text");
  auto* mixed_h = mixed->add_subcommand("hamming", "mixed sphere-packing bound");
  mixed_h->add_option("--l", l)->required();
  mixed_h->add_option("--n", n)->required();
  mixed_h->add_option("--k", k)->required();
  add_output_flags(mixed_h, &out_mixed_h, "text");

  auto* stab = app.add_subcommand("stabilizer", "bounds for stabilizer codes of type 4^{k0}2^{k1}");
  stab->require_subcommand(1);
  auto* stab_p = stab->add_subcommand("plotkin", "stabilizer Plotkin-type bound");
  stab_p->add_option("--n", n)->required();
  stab_p->add_option("--k", k)->required();
  stab_p->add_option("--k1", k1);
  add_output_flags(stab_p, &out_stab_p, "text");
  auto* stab_h = stab->add_subcommand("hamming", "stabilizer Hamming-type bound");
  stab_h->add_option("--n", n)->required();
  stab_h->add_option("--k", k)->required();
  stab_h->add_option("--k1", k1);
  add_output_flags(stab_h, &out_stab_h, "text");

  auto* curve = app.add_subcommand("curve", "tabulate an asymptotic bound curve");
  curve->add_option("id", curve_id, "hamming | gv | singleton | lp1_binary")->required();
  curve->add_option("--delta-min", delta_min)->required();
  curve->add_option("--delta-max", delta_max)->required();
  curve->add_option("--step", step)->required();
  add_output_flags(curve, &out_curve, "csv");

  auto* kraw = app.add_subcommand("kraw", "exact Krawtchouk values");
  kraw->add_option("--q", q)->check(CLI::IsMember({2, 4}));
  kraw->add_option("--n", n)->required();
  kraw->add_option("--i", i);
  kraw->add_option("--x", x);
  add_output_flags(kraw, &out_kraw, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (singleton->parsed()) {
      DualCertificate c = singleton_certificate(n, w);
      emit_certificate(c, "singleton", out_singleton);
    } else if (hamming->parsed()) {
      DualCertificate c = hamming_certificate(n, w);
      emit_certificate(c, "hamming", out_hamming);
    } else if (lp->parsed()) {
      if (lp->count("--K") > 0) {
        LpOutcome o = lp_feasible(n, K, w);
        if (out_lp.format == "json") {
          out_lp.emit(lp_outcome_json(n, K, w, o) + "\n");
        } else {
          std::ostringstream os;
          os << (o.feasible ? "feasible" : "infeasible") << " (n=" << n << ", K=" << K
             << ", w=" << w << ")\n";
          if (o.feasible) {
            os << "A = " << vector_pretty(o.A) << "\n";
            os << "Aperp = " << vector_pretty(o.Aperp) << "\n";
          } else {
            os << "farkas = " << vector_pretty(o.farkas) << "\n";
          }
          out_lp.emit(os.str());
        }
      } else {
        LpScanResult r = lp_max_K(n, w);
        if (out_lp.format == "json") {
          nlohmann::ordered_json j;
          j["n"] = n;
          j["w"] = w;
          j["K_max"] = r.K_max;
          out_lp.emit(j.dump() + "\n");
        } else {
          std::ostringstream os;
          os << "K_max = " << r.K_max << "\n";
          if (r.K_max >= 1) {
            os << "witness A = " << vector_pretty(r.outcome.A) << "\n";
            os << "witness Aperp = " << vector_pretty(r.outcome.Aperp) << "\n";
          }
          out_lp.emit(os.str());
        }
      }
    } else if (lp1->parsed()) {
      FirstLpReport rep = first_lp_binary_certificate(n, w);
      if (out_lp1.format == "json") {
        out_lp1.emit(certificate_to_json(rep.cert) + "\n");
      } else {
        std::ostringstream os;
        os << certificate_text(rep.cert, "lp1-binary");
        os << "t: " << rep.t << " (asymptotic prescription " << rep.t_asymptotic << ")\n";
        os << "a: " << rep.a.str() << "\n";
        os << "log2(bound)/n: " << format_double(log2_value(rep.cert.bound) / n) << "\n";
        out_lp1.emit(os.str());
      }
    } else if (verify->parsed()) {
      VerifiedCertificate v = verify_certificate_file(path);
      if (out_verify.format == "json")
        out_verify.emit(certificate_to_json(v.cert) + "\n");
      else
        out_verify.emit("valid: " + std::string(v.cert.bound_on()) +
                        " <= " + v.cert.bound.str() + "\n");
    } else if (mixed_p->parsed()) {
      Rational d = mixed_plotkin(l, n, k);
      if (out_mixed_p.format == "json") {
        nlohmann::ordered_json j;
        j["l"] = l;
        j["n"] = n;
        j["k"] = k;
        j["d_bound"] = d.str();
        out_mixed_p.emit(j.dump() + "\n");
      } else {
        out_mixed_p.emit("d <= " + d.str_pretty() + " (d <= " + d.floor().get_str() + ")\n");
      }
    } else if (mixed_h->parsed()) {
      int d = mixed_hamming_max_d(l, n, k);
      if (out_mixed_h.format == "json") {
        nlohmann::ordered_json j;
        j["l"] = l;
        j["n"] = n;
        j["k"] = k;
        j["d_max"] = d;
        out_mixed_h.emit(j.dump() + "\n");
      } else {
        out_mixed_h.emit("d <= " + std::to_string(d) + "\n");
      }
    } else if (stab_p->parsed()) {
      Rational d = stabilizer_plotkin(n, k, k1);
      if (out_stab_p.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["k1"] = k1;
        j["d_bound"] = d.str();
        out_stab_p.emit(j.dump() + "\n");
      } else {
        out_stab_p.emit("d <= " + d.str_pretty() + " (d <= " + d.floor().get_str() + ")\n");
      }
    } else if (stab_h->parsed()) {
      StabilizerHammingResult r = stabilizer_hamming(n, k, k1);
      if (out_stab_h.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["k1"] = k1;
        j["d_max"] = r.d_composed;
        j["d_max_relaxed"] = r.d_relaxed;
        out_stab_h.emit(j.dump() + "\n");
      } else {
        std::ostringstream os;
        os << "d <= " << r.d_composed << "\n";
        if (r.d_relaxed != r.d_composed)
          os << "d <= " << r.d_relaxed << " (relaxed right-hand side)\n";
        out_stab_h.emit(os.str());
      }
    } else if (curve->parsed()) {
      std::vector<CurvePoint> pts = tabulate_curve(curve_id, delta_min, delta_max, step);
      if (out_curve.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& p : pts) {
          nlohmann::ordered_json e;
          e["delta"] = p.delta;
          e["exponent"] = p.exponent;
          e["valid"] = p.valid;
          j.push_back(e);
        }
        out_curve.emit(j.dump() + "\n");
      } else {
        std::ostringstream os;
        write_curve_csv(pts, os);
        out_curve.emit(os.str());
      }
    } else if (kraw->parsed()) {
      const KrawTable& t = KrawTable::shared(q, n);
      if (i >= 0 && x >= 0) {
        Rational v = t.value(i, x);
        if (out_kraw.format == "json") {
          nlohmann::ordered_json j;
          j["q"] = q;
          j["n"] = n;
          j["i"] = i;
          j["x"] = x;
          j["value"] = v.str();
          out_kraw.emit(j.dump() + "\n");
        } else {
          out_kraw.emit(v.str_pretty() + "\n");
        }
      } else {
        std::ostringstream os;
        if (out_kraw.format == "json") {
          nlohmann::ordered_json rows = nlohmann::ordered_json::array();
          for (int ii = 0; ii <= n; ++ii) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int xx = 0; xx <= n; ++xx) row.push_back(t.value(ii, xx).str());
            rows.push_back(row);
          }
          os << rows.dump() << "\n";
        } else {
          for (int ii = 0; ii <= n; ++ii) {
            for (int xx = 0; xx <= n; ++xx) os << (xx ? " " : "") << t.value(ii, xx).str_pretty();
            os << "\n";
          }
        }
        out_kraw.emit(os.str());
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CertificateError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
