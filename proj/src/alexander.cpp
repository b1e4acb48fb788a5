#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "weldkit/invariants.hpp"

namespace weldkit {

namespace {

using boost::multiprecision::cpp_int;
// Coefficients, lowest degree first, no trailing zeros. Empty is zero.
using Poly = std::vector<cpp_int>;

constexpr std::size_t kMaxMinors = 20000;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b, int sign = 1) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division in Z[t]; the caller guarantees divisibility.
Poly exact_div(Poly a, const Poly& b) {
  if (a.empty()) return {};
  Poly q(a.size() - b.size() + 1);
  for (int k = degree(a) - degree(b); k >= 0; --k) {
    const cpp_int c = a[static_cast<std::size_t>(k + degree(b))] / b.back();
    q[static_cast<std::size_t>(k)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(k) + j] -= c * b[j];
  }
  trim(q);
  return q;
}

cpp_int content(const Poly& p) {
  cpp_int g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

Poly primitive(const Poly& p) {
  if (p.empty()) return p;
  cpp_int c = content(p);
  if (p.back() < 0) c = -c;
  Poly r;
  for (const auto& x : p) r.push_back(x / c);
  return r;
}

// Pseudo-remainder of a by b.
Poly prem(Poly a, const Poly& b) {
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const cpp_int lead = a.back();
    for (auto& x : a) x *= b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(shift) + j] -= lead * b[j];
    trim(a);
  }
  return a;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  const cpp_int c = gcd(content(a), content(b));
  Poly x = primitive(a);
  Poly y = primitive(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    Poly r = primitive(prem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  Poly g = primitive(x);
  for (auto& v : g) v *= c;
  return g;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  int sign = 1;
  Poly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(add(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j]), -1), prev);
      }
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  if (sign < 0) {
    for (auto& c : det) c = -c;
  }
  return det;
}

// Fox derivative of r with respect to every generator, abelianized to t and
// shifted to nonnegative exponents.
std::vector<Poly> fox_row(const Word& r, std::size_t n) {
  std::vector<std::vector<std::pair<int, int>>> terms(n);  // (exponent, coefficient)
  int prefix = 0;
  int low = 0;
  for (const auto& l : r.letters()) {
    if (l.exp > 0) {
      terms[static_cast<std::size_t>(l.gen)].emplace_back(prefix, 1);
    } else {
      terms[static_cast<std::size_t>(l.gen)].emplace_back(prefix - 1, -1);
      low = std::min(low, prefix - 1);
    }
    prefix += l.exp;
  }
  std::vector<Poly> row(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [e, c] : terms[j]) {
      const auto k = static_cast<std::size_t>(e - low);
      if (row[j].size() <= k) row[j].resize(k + 1);
      row[j][k] += c;
    }
    trim(row[j]);
  }
  return row;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

cpp_int binomial(std::size_t n, std::size_t k) {
  cpp_int r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

std::string AlexanderPolynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const long long c = coefficients[k];
    if (c == 0) continue;
    const long long a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1 || k == 0) os << a;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

AlexanderPolynomial alexander_polynomial(const GroupPresentation& p) {
  if (p.peripherals.size() != 1) {
    throw UnsupportedPresentation("Alexander polynomial needs a single component");
  }
  const std::size_t n = p.generators.size();
  const std::size_t rows = p.relators.size();
  Poly result;
  if (n <= 1) {
    result = {1};
  } else if (rows >= n - 1) {
    if (binomial(rows, n - 1) * n > kMaxMinors) {
      throw UnsupportedPresentation("Alexander polynomial: too many minors");
    }
    std::vector<std::vector<Poly>> matrix;
    for (const Word& r : p.relators) matrix.push_back(fox_row(r, n));
    for_each_subset(rows, n - 1, [&](const std::vector<std::size_t>& chosen) {
      for (std::size_t drop = 0; drop < n; ++drop) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r : chosen) {
          std::vector<Poly> row;
          for (std::size_t c = 0; c < n; ++c) {
            if (c != drop) row.push_back(matrix[r][c]);
          }
          minor.push_back(std::move(row));
        }
        result = poly_gcd(result, determinant(std::move(minor)));
      }
    });
  }
  AlexanderPolynomial out;
  std::size_t low = 0;
  while (low < result.size() && result[low] == 0) ++low;
  const bool negate = !result.empty() && result.back() < 0;
  for (std::size_t k = low; k < result.size(); ++k) {
    const cpp_int c = negate ? cpp_int(-result[k]) : result[k];
    if (c > cpp_int(std::numeric_limits<long long>::max()) || c < cpp_int(std::numeric_limits<long long>::min())) {
      throw UnsupportedPresentation("Alexander polynomial: coefficient overflow");
    }
    out.coefficients.push_back(static_cast<long long>(c));
  }
  return out;
}

}  // namespace weldkit
