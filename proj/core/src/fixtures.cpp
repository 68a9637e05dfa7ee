#include "soscert/fixtures.hpp"

#include "soscert/parse.hpp"

namespace soscert {

namespace detail {
extern const int kHessianBasis1[][6];
extern const int kHessianBasis2[][6];
extern const int kHessianBasis3[][6];
extern const int kHessianBasis4[][6];
extern const char* const kHessianGram1[];
extern const char* const kHessianGram2[];
extern const char* const kHessianGram3[];
extern const char* const kHessianGram4[];
extern const int kHessianBlockSizes[4];
}  // namespace detail

namespace {

const std::vector<std::string> kXyz = {"x1", "x2", "x3"};

MonomialBasis basis_from_table(const int (*rows)[6], int count) {
  std::vector<Monomial> monos;
  monos.reserve(count);
  for (int i = 0; i < count; ++i)
    monos.emplace_back(std::vector<int>(rows[i], rows[i] + 6));
  return MonomialBasis(6, std::move(monos), /*keep_order=*/true);
}

RationalMatrix gram_from_table(const char* const* cells, int n) {
  RationalMatrix Q(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Q[i][j] = rational_from_string(cells[i * n + j]);
  return Q;
}

ReferenceExample build() {
  ReferenceExample ex;

  ex.octic = parse_polynomial(
      "32*x1^8 + 118*x1^6*x2^2 + 40*x1^6*x3^2 + 25*x1^4*x2^4 - 43*x1^4*x2^2*x3^2"
      " - 35*x1^4*x3^4 + 3*x1^2*x2^4*x3^2 - 16*x1^2*x2^2*x3^4 + 24*x1^2*x3^6"
      " + 16*x2^8 + 44*x2^6*x3^2 + 70*x2^4*x3^4 + 60*x2^2*x3^6 + 30*x3^8",
      kXyz);
  ex.octic_h11 = ex.octic.differentiate(0).differentiate(0);

  {
    std::vector<Monomial> support;
    for (const auto& [m, c] : ex.octic_h11.terms()) support.push_back(m);
    ex.h11_support = MonomialBasis(3, std::move(support));
    // Listing order: x1^6, x1^4x2^2, x1^4x3^2, x1^2x2^4, x1^2x2^2x3^2,
    // x1^2x3^4, x2^4x3^2, x2^2x3^4, x3^6. The dual is given in
    // thousandths in the same order.
    const char* duals[9] = {"39/1000",    "51/1000",    "155/1000",
                            "839/1000",   "990/1000",   "1451/1000",
                            "35488/1000", "20014/1000", "17723/1000"};
    for (const char* d : duals) ex.h11_dual.push_back(rational_from_string(d));
  }

  {
    // All cubics except x2^3, listed by parity class:
    // odd in x1 | odd in x2 | odd in all | odd in x3.
    std::vector<std::string> z = {"x1^3",  "x1*x2^2", "x1*x3^2", "x1^2*x2", "x2*x3^2",
                                  "x1*x2*x3", "x1^2*x3", "x2^2*x3", "x3^3"};
    std::vector<Monomial> monos;
    for (const auto& s : z) {
      Polynomial q = parse_polynomial(s, kXyz);
      monos.push_back(q.terms().begin()->first);
    }
    ex.h11_pairing_basis = MonomialBasis(3, std::move(monos), /*keep_order=*/true);
  }

  ex.h11_separation.target = ex.octic_h11;
  ex.h11_separation.subspace = ex.h11_support;
  ex.h11_separation.dual = ex.h11_dual;
  ex.h11_separation.pairing_basis = ex.h11_pairing_basis;

  {
    PolyMatrix H = hessian(ex.octic);
    ex.hessian_certificate.target = quadratic_form_in_y(H);
    ex.hessian_certificate.multiplier_r = 1;
    const int* sizes = detail::kHessianBlockSizes;
    ex.hessian_certificate.blocks.push_back(
        {basis_from_table(detail::kHessianBasis1, sizes[0]),
         gram_from_table(detail::kHessianGram1, sizes[0])});
    ex.hessian_certificate.blocks.push_back(
        {basis_from_table(detail::kHessianBasis2, sizes[1]),
         gram_from_table(detail::kHessianGram2, sizes[1])});
    ex.hessian_certificate.blocks.push_back(
        {basis_from_table(detail::kHessianBasis3, sizes[2]),
         gram_from_table(detail::kHessianGram3, sizes[2])});
    ex.hessian_certificate.blocks.push_back(
        {basis_from_table(detail::kHessianBasis4, sizes[3]),
         gram_from_table(detail::kHessianGram4, sizes[3])});
  }

  ex.motzkin = parse_polynomial("x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1", {"x1", "x2"});
  ex.motzkin_form = homogenize(ex.motzkin);

  {
    PolyMatrix C(3, 3);
    auto poly = [&](const char* s) { return parse_polynomial(s, kXyz); };
    C.set(0, 0, poly("x1^2 + 2*x2^2"));
    C.set(0, 1, poly("-x1*x2"));
    C.set(0, 2, poly("-x1*x3"));
    C.set(1, 1, poly("x2^2 + 2*x3^2"));
    C.set(1, 2, poly("-x2*x3"));
    C.set(2, 2, poly("x3^2 + 2*x1^2"));
    ex.biquadratic_matrix = C;
  }

  return ex;
}

}  // namespace

const ReferenceExample& reference_example() {
  static const ReferenceExample ex = build();
  return ex;
}

}  // namespace soscert
