#pragma once

#include <optional>
#include <string>

#include "soscert/fixtures.hpp"
#include "soscert/gram.hpp"
#include "soscert/separation.hpp"

namespace soscert {

// JSON document forms. A polynomial is
//   {"nvars": n, "terms": [{"exponents": [...], "coeff": "a/b"}, ...]}
// and certificates carry a "kind" discriminator.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

std::string certificate_to_json(const GramCertificate& cert);
std::string certificate_to_json(const SeparationCertificate& cert);

struct LoadedCertificate {
  std::optional<GramCertificate> gram;
  std::optional<SeparationCertificate> separation;
};
LoadedCertificate certificate_from_json(const std::string& text);

// Human-readable proof transcripts.
std::string describe(const GramCertificate& cert, const VerificationReport& rep);
std::string describe(const SeparationCertificate& cert, const SeparationReport& rep);

// Parses either a JSON polynomial document or the plain text form.
Polynomial load_polynomial_text(const std::string& content);

}  // namespace soscert
