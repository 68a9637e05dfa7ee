#include "soscert/io.hpp"

#include <json.hpp>
#include <sstream>

#include "soscert/parse.hpp"

namespace soscert {

using nlohmann::json;

namespace {

json polynomial_to_value(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["exponents"] = m.exps;
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_value(const json& v) {
  Polynomial p(v.at("nvars").get<int>());
  for (const auto& t : v.at("terms")) {
    Monomial m(t.at("exponents").get<std::vector<int>>());
    p.add_term(m, rational_from_string(t.at("coeff").get<std::string>()));
  }
  return p;
}

json basis_to_value(const MonomialBasis& b) {
  json rows = json::array();
  for (const auto& m : b.monomials()) rows.push_back(m.exps);
  return rows;
}

MonomialBasis basis_from_value(const json& v, int nvars, bool keep_order) {
  std::vector<Monomial> monos;
  for (const auto& row : v) monos.emplace_back(row.get<std::vector<int>>());
  return MonomialBasis(nvars, std::move(monos), keep_order);
}

}  // namespace

std::string polynomial_to_json(const Polynomial& p) { return polynomial_to_value(p).dump(2); }

Polynomial polynomial_from_json(const std::string& text) {
  return polynomial_from_value(json::parse(text));
}

std::string certificate_to_json(const GramCertificate& cert) {
  json blocks = json::array();
  for (const auto& block : cert.blocks) {
    json Q = json::array();
    for (const auto& row : block.Q) {
      json r = json::array();
      for (const auto& q : row) r.push_back(to_string(q));
      Q.push_back(std::move(r));
    }
    blocks.push_back(json{{"monomials", basis_to_value(block.basis)}, {"Q", std::move(Q)}});
  }
  json doc{{"kind", "gram-certificate"},
           {"target", polynomial_to_value(cert.target)},
           {"multiplier_r", cert.multiplier_r},
           {"blocks", std::move(blocks)}};
  return doc.dump(2);
}

std::string certificate_to_json(const SeparationCertificate& cert) {
  json dual = json::array();
  for (const auto& d : cert.dual) dual.push_back(to_string(d));
  json doc{{"kind", "separation-certificate"},
           {"target", polynomial_to_value(cert.target)},
           {"subspace", basis_to_value(cert.subspace)},
           {"dual", std::move(dual)},
           {"pairing_basis", basis_to_value(cert.pairing_basis)}};
  return doc.dump(2);
}

LoadedCertificate certificate_from_json(const std::string& text) {
  LoadedCertificate out;
  json doc = json::parse(text);
  std::string kind = doc.value("kind", "");
  if (kind == "gram-certificate") {
    GramCertificate cert;
    cert.target = polynomial_from_value(doc.at("target"));
    cert.multiplier_r = doc.at("multiplier_r").get<int>();
    for (const auto& b : doc.at("blocks")) {
      GramBlock block;
      block.basis = basis_from_value(b.at("monomials"), cert.target.nvars(), /*keep_order=*/true);
      for (const auto& row : b.at("Q")) {
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(rational_from_string(cell.get<std::string>()));
        block.Q.push_back(std::move(r));
      }
      cert.blocks.push_back(std::move(block));
    }
    out.gram = std::move(cert);
  } else if (kind == "separation-certificate") {
    SeparationCertificate cert;
    cert.target = polynomial_from_value(doc.at("target"));
    cert.subspace = basis_from_value(doc.at("subspace"), cert.target.nvars(), /*keep_order=*/true);
    for (const auto& d : doc.at("dual"))
      cert.dual.push_back(rational_from_string(d.get<std::string>()));
    cert.pairing_basis =
        basis_from_value(doc.at("pairing_basis"), cert.target.nvars(), /*keep_order=*/true);
    out.separation = std::move(cert);
  } else {
    throw std::invalid_argument("unknown certificate kind: '" + kind + "'");
  }
  return out;
}

std::string describe(const GramCertificate& cert, const VerificationReport& rep) {
  std::ostringstream os;
  os << "Gram certificate: multiplier exponent r = " << cert.multiplier_r << ", "
     << cert.blocks.size() << " block(s)\n";
  os << "  coefficient identity: " << (rep.identity_ok ? "exact match" : "MISMATCH") << "\n";
  if (!rep.identity_ok && rep.first_mismatch) {
    os << "    first mismatched monomial: "
       << to_string(*rep.first_mismatch, default_var_names(cert.target.nvars()))
       << " expected " << to_string(rep.expected_coeff) << ", got "
       << to_string(rep.actual_coeff) << "\n";
  }
  for (size_t b = 0; b < rep.blocks.size(); ++b) {
    const auto& ldl = rep.blocks[b].ldl;
    os << "  block " << b + 1 << " (" << cert.blocks[b].basis.size() << "x"
       << cert.blocks[b].basis.size() << "): ";
    switch (ldl.verdict) {
      case PsdVerdict::positive_definite: os << "positive definite"; break;
      case PsdVerdict::positive_semidefinite: os << "positive semidefinite, rank " << ldl.rank; break;
      case PsdVerdict::indefinite: os << "INDEFINITE (" << ldl.failure << ")"; break;
    }
    os << "\n    pivots:";
    for (int k = 0; k < ldl.rank; ++k) os << " " << to_string(ldl.pivots[k]);
    os << "\n";
  }
  os << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string describe(const SeparationCertificate& cert, const SeparationReport& rep) {
  std::ostringstream os;
  os << "Separation certificate: subspace dimension " << cert.subspace.size()
     << ", pairing basis size " << cert.pairing_basis.size() << "\n";
  os << "  pairing <c, target> = " << to_string(rep.pairing) << " ("
     << (rep.pairing_negative ? "negative" : "NOT negative") << ")\n";
  os << "  target inside subspace: " << (rep.target_in_subspace ? "yes" : "NO") << "\n";
  os << "  moment matrix: ";
  switch (rep.moment.verdict) {
    case PsdVerdict::positive_definite: os << "positive definite"; break;
    case PsdVerdict::positive_semidefinite: os << "positive semidefinite, rank " << rep.moment.rank; break;
    case PsdVerdict::indefinite: os << "INDEFINITE (" << rep.moment.failure << ")"; break;
  }
  os << "\n    pivots:";
  for (int k = 0; k < rep.moment.rank; ++k) os << " " << to_string(rep.moment.pivots[k]);
  os << "\n  pairing basis adequate: " << (rep.basis_adequate ? "yes" : "NO");
  if (!rep.basis_adequate) {
    os << " (missing:";
    for (const auto& m : rep.missing_basis_monomials)
      os << " " << to_string(m, default_var_names(cert.target.nvars()));
    os << ")";
  }
  os << "\n" << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Polynomial load_polynomial_text(const std::string& content) {
  // JSON documents start with '{'; anything else is the expression form.
  for (char ch : content) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return polynomial_from_json(content);
    break;
  }
  return parse_polynomial_auto(content);
}

}  // namespace soscert
