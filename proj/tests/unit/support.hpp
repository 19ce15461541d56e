#ifndef COCLASS_TESTS_SUPPORT_HPP_
#define COCLASS_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coclass/families.hpp"
#include "coclass/tables.hpp"

namespace coclass::test {

  // The entry of a list with the given family and parameters.
  inline Presentation pick(std::vector<Presentation> const& list, Family f,
                           std::vector<std::pair<std::string, int>> const& params = {}) {
    for (auto const& p : list) {
      if (p.family != f) {
        continue;
      }
      bool ok = true;
      for (auto const& [k, v] : params) {
        ok = ok && p.param(k) == v;
      }
      if (ok) {
        return p;
      }
    }
    throw std::logic_error("no such presentation: " + std::string(to_string(f)));
  }

  inline Presentation pick_part(std::vector<Presentation> const& list, Family f,
                                std::string const& v, std::string const& w,
                                std::vector<std::pair<std::string, int>> const& params) {
    for (auto const& p : list) {
      if (p.family != f || p.parts.size() != 2 || p.parts[0].second != v
          || p.parts[1].second != w) {
        continue;
      }
      bool ok = true;
      for (auto const& [k, val] : params) {
        ok = ok && p.param(k) == val;
      }
      if (ok) {
        return p;
      }
    }
    throw std::logic_error("no such composition");
  }

  inline std::vector<Element> random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<Element> sigma(n);
    std::iota(sigma.begin(), sigma.end(), Element{0});
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return sigma;
  }

  // Monogenic table of order n: u^i * u^j = u^min(i+j, n), element i-1 = u^i.
  inline MulTable monogenic(std::size_t n) {
    std::vector<Element> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        e[i * n + j] = static_cast<Element>(std::min(i + j + 1, n - 1));
      }
    }
    return validate_table(n, std::move(e));
  }

}  // namespace coclass::test

#endif  // COCLASS_TESTS_SUPPORT_HPP_
