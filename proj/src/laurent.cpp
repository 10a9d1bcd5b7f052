#include "brauer/laurent.hpp"

#include <cctype>

#include "brauer/error.hpp"

namespace brauer {

LaurentPoly LaurentPoly::monomial(int exponent, long long c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, long long c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

long long LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

long long LaurentPoly::at_one() const {
  long long sum = 0;
  for (const auto& [e, c] : coeffs_) sum += c;
  return sum;
}

int LaurentPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly operator*(long long c, const LaurentPoly& a) { return LaurentPoly::constant(c) * a; }

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    const long long mag = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  LaurentPoly p;
  if (text == "." || text == "0" || text.empty()) return p;
  std::size_t i = 0;
  auto fail = [&]() { throw Error(ErrorCode::ParseError, "cannot parse polynomial '" + text + "'"); };
  auto read_int = [&](long long& out) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail();
    out = std::stoll(text.substr(start, i - start));
  };
  while (i < text.size()) {
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    long long coeff = 1;
    bool has_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      read_int(coeff);
      has_coeff = true;
    }
    int exponent = 0;
    if (i < text.size() && text[i] == 'v') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        long long esign = 1;
        if (i < text.size() && text[i] == '-') {
          esign = -1;
          ++i;
        }
        long long e = 0;
        read_int(e);
        exponent = static_cast<int>(esign * e);
      }
    } else if (!has_coeff) {
      fail();
    }
    p.add_term(exponent, sign * coeff);
  }
  return p;
}

}  // namespace brauer
