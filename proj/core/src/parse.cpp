#include "soscert/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace soscert {

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", start);
    return Integer(std::string(text.substr(start, pos - start)));
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected a variable name", start);
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

struct TermParser {
  Lexer lex;
  const std::vector<std::string>& names;

  int var_index(const std::string& name, size_t at) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown variable name '" + name + "'", at);
    return static_cast<int>(it - names.begin());
  }

  // factor := rational | variable ('^' integer)?
  void factor(Rational& coeff, Monomial& mono) {
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = lex.integer();
      if (lex.accept('/')) {
        size_t at = lex.pos;
        Integer den = lex.integer();
        if (den == 0) throw ParseError("zero denominator", at);
        Rational q(num, den);
        q.canonicalize();
        coeff *= q;
      } else {
        coeff *= Rational(num);
      }
      return;
    }
    size_t at = lex.pos;
    std::string name = lex.identifier();
    int idx = var_index(name, at);
    int power = 1;
    if (lex.accept('^')) {
      size_t pat = lex.pos;
      Integer e = lex.integer();
      if (e < 0 || e > 1000000) throw ParseError("exponent out of range", pat);
      power = static_cast<int>(e.get_si());
    }
    mono[idx] += power;
  }

  Polynomial run() {
    Polynomial result(static_cast<int>(names.size()));
    bool first = true;
    while (!lex.done()) {
      int sign = 1;
      if (lex.accept('+')) {
        sign = 1;
      } else if (lex.accept('-')) {
        sign = -1;
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", lex.pos);
      }
      if (lex.done()) throw ParseError("dangling sign", lex.pos);
      Rational coeff(sign);
      Monomial mono = Monomial::unit(static_cast<int>(names.size()));
      factor(coeff, mono);
      while (lex.accept('*')) factor(coeff, mono);
      // Implicit product when a variable follows a coefficient, e.g. "2x1".
      while (!lex.done()) {
        char c = lex.peek();
        if (std::isalpha(static_cast<unsigned char>(c)))
          factor(coeff, mono);
        else
          break;
      }
      result.add_term(mono, coeff);
      first = false;
    }
    return result;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& var_names) {
  TermParser p{Lexer{text}, var_names};
  return p.run();
}

Polynomial parse_polynomial_auto(std::string_view text, std::vector<std::string>* names_out) {
  // First pass: collect identifiers.
  std::vector<std::string> names;
  Lexer lex{text};
  while (!lex.done()) {
    char c = lex.peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string n = lex.identifier();
      if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    } else {
      ++lex.pos;
    }
  }
  std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
      size_t i = s.size();
      while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
      long suffix = (i < s.size()) ? std::stol(s.substr(i)) : -1;
      return std::pair<std::string, long>(s.substr(0, i), suffix);
    };
    auto [sa, na] = split(a);
    auto [sb, nb] = split(b);
    if (sa != sb) return sa < sb;
    return na < nb;
  });
  if (names_out) *names_out = names;
  return parse_polynomial(text, names);
}

}  // namespace soscert
