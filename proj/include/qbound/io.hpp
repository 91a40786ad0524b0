#pragma once
// On-disk formats: the JSON certificate file and the curve CSV.

#include "qbound/asymptotics.hpp"
#include "qbound/certificates.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qbound {

// {"q":4,"n":5,"w":3,"coeffs":["p/q",...],"bound":"p/q","bound_on":"K","argmax_j":0}
std::string certificate_to_json(const DualCertificate& cert);
void write_certificate(const DualCertificate& cert, const std::string& path);

struct VerifiedCertificate {
  DualCertificate cert;  // fully recomputed from the file's coefficients
  Rational claimed_bound;
};

// Parses a certificate file and re-runs the full check from the coefficients
// alone; the file's point values are never read and its bound is only
// compared, never trusted.  Throws CertificateError / std::runtime_error.
VerifiedCertificate verify_certificate_file(const std::string& path);

// Header "delta,exponent,valid", rows "%.12f,%.12f,%d", ordered by delta.
void write_curve_csv(const std::vector<CurvePoint>& points, std::ostream& os);
void write_curve_csv(const std::vector<CurvePoint>& points, const std::string& path);

}  // namespace qbound
