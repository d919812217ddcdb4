#include "flatcycle/numeric.hpp"

#include <stdexcept>

namespace flatcycle {

Rat rat_of_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Int round_nearest_tie_to_zero(const Rat& q) {
  Int f = rat_floor(q);
  Rat frac = q - Rat(f);  // in [0,1)
  Rat half(1, 2);
  if (frac > half) return f + 1;
  if (frac < half) return f;
  // tie: pick whichever of f, f+1 is closer to zero
  return (f >= 0) ? f : f + 1;
}

Int round_nearest_tie_down(const Rat& q) {
  // floor(q + 1/2) rounds ties up; ceil(q - 1/2) rounds ties down.
  Rat shifted = q - Rat(1, 2);
  Int f = rat_floor(shifted);
  if (Rat(f) == shifted) return f;  // exact tie landed on an integer
  return f + 1;
}

double ln_of_int(const Int& n) {
  if (n <= 0) throw BadParams("ln of non-positive integer");
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 62) return std::log(n.get_d());
  Int top;
  unsigned long shift = static_cast<unsigned long>(bits - 62);
  mpz_tdiv_q_2exp(top.get_mpz_t(), n.get_mpz_t(), shift);
  return std::log(top.get_d()) + static_cast<double>(shift) * M_LN2;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

Int int_pow(long base, long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

}  // namespace flatcycle
