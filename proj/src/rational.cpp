#include "tropjac/rational.hpp"

#include <limits>

#include "tropjac/errors.hpp"

namespace tropjac {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s) {
  auto bad = [&] { return ValidationError("malformed rational '" + s + "' (expected \"p\" or \"p/q\")"); };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw bad();
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int lcm_denominators(const std::vector<Rat>& values) {
  Int l = 1;
  for (const Rat& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  return l;
}

bool fits_ll(const Int& z) {
  static_assert(sizeof(long) == sizeof(long long));
  return z.fits_slong_p();
}

long long to_ll(const Int& z) {
  if (!fits_ll(z)) throw ValidationError("integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

}  // namespace tropjac
