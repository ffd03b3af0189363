#include "hirsch/abelian_group.hpp"

#include "hirsch/errors.hpp"

#include <cctype>
#include <sstream>

namespace hirsch {

FGAbelianGroup FGAbelianGroup::from_cyclic(Index rank, std::vector<Integer> orders) {
  if (rank < 0) throw DomainError("negative rank");
  FGAbelianGroup g;
  g.rank_ = rank;
  std::vector<Integer> finite;
  for (auto& d : orders) {
    if (d.is_zero()) {
      ++g.rank_;
    } else {
      finite.push_back(abs(d));
    }
  }
  for (auto& d : canonical_invariant_factors(std::move(finite))) {
    if (d > Integer(1)) g.torsion_.push_back(std::move(d));
  }
  return g;
}

FGAbelianGroup FGAbelianGroup::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw DomainError("empty group description");
  if (s == "0") return {};
  Index rank = 0;
  std::vector<Integer> orders;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find('+', pos);
    const std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (term.empty() || term[0] != 'Z') {
      throw DomainError("malformed group summand '" + term + "' in '" + std::string(text) + "'");
    }
    try {
      if (term == "Z") {
        ++rank;
      } else if (term.size() > 2 && term[1] == '^') {
        rank += Integer::parse(term.substr(2)).to_long();
      } else if (term.size() > 2 && term[1] == '/') {
        const Integer d = Integer::parse(term.substr(2));
        if (d < Integer(1)) throw DomainError("cyclic order must be positive");
        orders.push_back(d);
      } else {
        throw DomainError("malformed group summand '" + term + "'");
      }
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed group summand '" + term + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return from_cyclic(rank, std::move(orders));
}

Integer FGAbelianGroup::generator_order(Index i) const {
  if (i < 0 || i >= generator_count()) throw DomainError("generator index out of range");
  if (i < rank_) return 0;
  return torsion_[static_cast<std::size_t>(i - rank_)];
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ == 1) {
    os << "Z";
    first = false;
  } else if (rank_ > 1) {
    os << "Z^" << rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

FGAbelianGroup operator+(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Integer> orders = a.torsion_;
  orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
  return FGAbelianGroup::from_cyclic(a.rank_ + b.rank_, std::move(orders));
}

}  // namespace hirsch
