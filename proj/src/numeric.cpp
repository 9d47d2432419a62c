#include "numeric.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

namespace hexaforge {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorKind::argument, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// optional sign followed by at least one digit
bool valid_integer_token(const std::string& s) {
  size_t start = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  return all_digits(s, start, s.size());
}

}  // namespace

Int parse_int(const std::string& text) {
  if (!valid_integer_token(text))
    throw Error(ErrorKind::argument, "not an integer: '" + text + "'");
  const char* digits = text.c_str();
  if (*digits == '+') ++digits;  // mpz_set_str takes '-' but not '+'
  Int v;
  if (mpz_set_str(v.get_mpz_t(), digits, 10) != 0)
    throw Error(ErrorKind::argument, "not an integer: '" + text + "'");
  return v;
}

Rat parse_rat(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  Int n = parse_int(num);
  Int d = parse_int(den);
  if (d == 0) throw Error(ErrorKind::argument, "zero denominator: '" + text + "'");
  Rat v(n, d);
  v.canonicalize();
  return v;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();  // direct mpq_class construction may leave a common factor
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

std::vector<unsigned long> small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> out;
    std::vector<bool> sieve(10000, true);
    for (unsigned long i = 2; i < sieve.size(); ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

Int pollard_brent(const Int& n, gmp_randclass& rng) {
  // n odd composite, no factors below the trial-division bound
  while (true) {
    Int y = rng.get_z_range(n - 2) + 1;
    Int c = rng.get_z_range(n - 2) + 1;
    Int x, ys, g = 1, q = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
    // cycle collapsed; retry with fresh parameters
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out, gmp_randclass& rng) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++out[n];
    return;
  }
  if (is_perfect_square(n)) {
    std::map<Int, unsigned> half;
    factor_into(isqrt(n), half, rng);
    for (const auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  Int d = pollard_brent(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

std::map<Int, unsigned> factorize(Int n) {
  std::map<Int, unsigned> out;
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (Int(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++out[Int(p)];
    }
  }
  if (n > 1) {
    static gmp_randclass rng(gmp_randinit_mt);
    static bool seeded = [] {
      rng.seed(0x9e3779b97f4a7c15UL);
      return true;
    }();
    (void)seeded;
    factor_into(n, out, rng);
  }
  return out;
}

}  // namespace

std::pair<Int, Int> squarefree_split(const Int& n) {
  if (n < 1) throw Error(ErrorKind::argument, "squarefree_split requires n >= 1");
  Int square_root_part = 1, squarefree = 1;
  for (const auto& [p, e] : factorize(n)) {
    for (unsigned i = 0; i < e / 2; ++i) square_root_part *= p;
    if (e % 2) squarefree *= p;
  }
  return {square_root_part, squarefree};
}

namespace {

mpf_class to_mpf(const Rat& v, int digits) {
  const unsigned long prec = std::max(128ul, static_cast<unsigned long>(digits) * 4 + 64);
  return mpf_class(v, prec);
}

std::string format_mpf(const mpf_class& f, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << f;
  return os.str();
}

}  // namespace

std::string decimal_string(const Rat& v, int digits) {
  if (digits < 1 || digits > 10000)
    throw Error(ErrorKind::argument, "digits must be in 1..10000");
  return format_mpf(to_mpf(v, digits), digits);
}

std::string decimal_sqrt_string(const Rat& v, int digits) {
  if (digits < 1 || digits > 10000)
    throw Error(ErrorKind::argument, "digits must be in 1..10000");
  if (v < 0) throw Error(ErrorKind::argument, "sqrt of negative value");
  mpf_class f = to_mpf(v, digits);
  mpf_class r(0, f.get_prec());
  r = sqrt(f);
  return format_mpf(r, digits);
}

}  // namespace hexaforge
