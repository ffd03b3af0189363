#include "hirsch/integer.hpp"

#include <numeric>
#include <stdexcept>

namespace hirsch {

namespace {
constexpr long long kMin = std::numeric_limits<long long>::min();
constexpr long long kMax = std::numeric_limits<long long>::max();
}  // namespace

void Integer::assign(const Big& v) {
  if (v >= kMin && v <= kMax) {
    small_ = static_cast<long long>(v);
    big_.reset();
  } else {
    big_ = std::make_shared<const Big>(v);
  }
}

Integer Integer::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer literal");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
  }
  return Integer(Big(std::string(text[0] == '+' ? text.substr(1) : text)));
}

long long Integer::to_long() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits");
  return small_;
}

std::string Integer::to_string() const {
  if (big_) return big_->str();
  return std::to_string(small_);
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("integer division by zero");
  if (!big_ && !o.big_ && !(small_ == kMin && o.small_ == -1)) {
    small_ /= o.small_;
    return *this;
  }
  assign(to_big() / o.to_big());
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("integer division by zero");
  if (!big_ && !o.big_) {
    small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
    return *this;
  }
  assign(to_big() % o.to_big());
  return *this;
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    long long x = a.to_long();
    long long y = b.to_long();
    if (x != kMin && y != kMin) return Integer(std::gcd(x, y));
  }
  return Integer(boost::multiprecision::gcd(a.to_big(), b.to_big()));
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r.sign() < 0) r += abs(b);
  return r;
}

}  // namespace hirsch
