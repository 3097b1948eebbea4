#include "tangleinv/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "tangleinv/error.hpp"

namespace tangleinv {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.push_back({0, Integer(constant)});
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exponent, std::move(coeff)});
  return p;
}

const LaurentPoly& LaurentPoly::delta() {
  static const LaurentPoly d = monomial(-1, 2) + monomial(-1, -2);
  return d;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.front().exponent; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.back().exponent; }

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void LaurentPoly::add_term(const Integer& coeff, int exponent) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) {
    it->coeff += coeff;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{exponent, coeff});
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) dense[ta.exponent + tb.exponent - lo] += ta.coeff * tb.coeff;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Multiply:
      return a * b;
    case ArithOp::Negate:
      return -a;
  }
  return a;
}

LaurentPoly lp_bar(const LaurentPoly& a) {
  LaurentPoly r;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) r.add_term(it->coeff, -it->exponent);
  return r;
}

RootIndex::RootIndex(int k) : k_(k) {
  if (std::find(kAdmissible.begin(), kAdmissible.end(), k) == kAdmissible.end())
    throw DomainError("root index not in admissible set: " + std::to_string(k));
}

std::vector<RootIndex> RootIndex::all() {
  std::vector<RootIndex> out;
  for (int k : kAdmissible) out.emplace_back(k);
  return out;
}

namespace {

// exp(j*pi*i/12) for j = 0..23
const std::array<std::complex<double>, 24>& roots_of_unity() {
  static const auto table = [] {
    std::array<std::complex<double>, 24> t{};
    for (int j = 0; j < 24; ++j) t[j] = std::polar(1.0, j * std::numbers::pi / 12.0);
    // Pin the values with exact representations.
    t[0] = {1, 0};
    t[6] = {0, 1};
    t[12] = {-1, 0};
    t[18] = {0, -1};
    return t;
  }();
  return table;
}

}  // namespace

std::complex<double> lp_eval_root(const LaurentPoly& a, RootIndex k) {
  const auto& table = roots_of_unity();
  std::complex<long double> acc = 0;
  for (const auto& t : a.terms()) {
    long long j = (static_cast<long long>(k.value()) * t.exponent) % 24;
    if (j < 0) j += 24;
    const auto c = t.coeff.convert_to<long double>();
    acc += c * std::complex<long double>(table[j]);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    Integer c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (it->exponent == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str();
    out += "q";
    if (it->exponent != 1) out += "^" + std::to_string(it->exponent);
  }
  return out;
}

LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
  if (s.empty()) throw DomainError("empty polynomial text");
  LaurentPoly out;
  std::size_t i = 0;
  auto fail = [&] { throw DomainError("malformed polynomial: " + text); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer coeff = start == i ? Integer(1) : Integer(s.substr(start, i - start));
    int exponent = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es || (i == es + 1 && s[es] == '-')) fail();
        exponent = std::stoi(s.substr(es, i - es));
      }
    } else if (start == i) {
      fail();
    }
    out.add_term(sign * coeff, exponent);
  }
  return out;
}

}  // namespace tangleinv
