#include "alia/rational.hpp"

#include <ostream>

namespace alia {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::parse(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    mpq_class q;
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s));
    } else {
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      q = mpq_class(num, den);
    }
    q.canonicalize();
    Rat r;
    r.q_ = q;
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace alia
