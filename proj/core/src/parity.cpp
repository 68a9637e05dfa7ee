#include "soscert/parity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace soscert {

std::vector<int> parity_signature(const Monomial& m, const std::vector<VariableGroup>& groups) {
  std::vector<int> sig(groups.size(), 0);
  for (size_t g = 0; g < groups.size(); ++g) {
    int total = 0;
    for (int v : groups[g]) total += m[v];
    sig[g] = total % 2;
  }
  return sig;
}

bool parity_invariant(const Polynomial& p, const std::vector<VariableGroup>& groups) {
  for (const auto& [m, c] : p.terms()) {
    auto sig = parity_signature(m, groups);
    if (std::any_of(sig.begin(), sig.end(), [](int s) { return s != 0; })) return false;
  }
  return true;
}

std::vector<MonomialBasis> parity_split(const MonomialBasis& basis,
                                        const std::vector<VariableGroup>& groups) {
  std::vector<int> seen(basis.nvars(), 0);
  for (const auto& g : groups)
    for (int v : g) {
      if (v < 0 || v >= basis.nvars()) throw std::invalid_argument("group variable out of range");
      seen[v] += 1;
    }
  for (int v = 0; v < basis.nvars(); ++v)
    if (seen[v] != 1)
      throw std::invalid_argument("variable groups do not partition the variable set");

  std::map<std::vector<int>, std::vector<Monomial>> buckets;
  for (const auto& m : basis.monomials()) buckets[parity_signature(m, groups)].push_back(m);

  // Single-odd signatures first, ordered by the odd coordinate's position.
  std::vector<std::pair<std::vector<int>, std::vector<Monomial>>> ordered(buckets.begin(),
                                                                          buckets.end());
  auto key = [](const std::vector<int>& sig) {
    int ones = 0;
    long value = 0;
    for (int s : sig) {
      ones += s;
      value = value * 2 + s;
    }
    return std::pair<int, long>(ones, -value);
  };
  std::sort(ordered.begin(), ordered.end(),
            [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });

  std::vector<MonomialBasis> out;
  out.reserve(ordered.size());
  for (auto& [sig, monos] : ordered) out.emplace_back(basis.nvars(), std::move(monos));
  return out;
}

std::vector<VariableGroup> single_variable_groups(int nvars) {
  std::vector<VariableGroup> groups(nvars);
  for (int i = 0; i < nvars; ++i) groups[i] = {i};
  return groups;
}

std::vector<VariableGroup> paired_variable_groups(int n) {
  std::vector<VariableGroup> groups(n);
  for (int i = 0; i < n; ++i) groups[i] = {i, n + i};
  return groups;
}

}  // namespace soscert
