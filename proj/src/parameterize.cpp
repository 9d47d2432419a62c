#include "parameterize.hpp"

namespace hexaforge {

namespace {

void check_pair(const Int& u, const Int& v, const Int& scale, const char* what) {
  if (scale <= 0)
    throw Error(ErrorKind::argument, std::string(what) + ": scale must be positive");
  if (u == 0 || v == 0)
    throw Error(ErrorKind::argument, std::string(what) + ": parameters must be nonzero");
  if (u == v || u == -v)
    throw Error(ErrorKind::argument, std::string(what) + ": degenerate parameters (equal up to sign)");
}

}  // namespace

PythTriple pyth_from_params(const Int& m, const Int& n, const Int& scale) {
  if (scale <= 0)
    throw Error(ErrorKind::argument, "pyth_from_params: scale must be positive");
  if (m == n || m == -n)
    throw Error(ErrorKind::argument, "pyth_from_params: m = +-n gives a zero leg");
  return {scale * (sq(m) - sq(n)), scale * 2 * m * n, scale * (sq(m) + sq(n))};
}

std::array<Int, 3> rect_sides(const RectParams& rp) {
  check_pair(rp.r, rp.s, rp.lambda, "rect_sides");
  Int a = abs(rp.lambda * (sq(rp.r) - sq(rp.s)));
  Int b = abs(2 * rp.r * rp.s * rp.lambda);
  Int c = rp.lambda * (sq(rp.r) + sq(rp.s));
  return {a, b, c};
}

std::array<Int, 3> trap_sides(const TrapParams& tp) {
  check_pair(tp.p, tp.q, tp.mu, "trap_sides");
  Int base = sq(tp.p) - sq(tp.q);
  Int cross = 2 * tp.p * tp.q;
  Int e = abs(tp.mu * (base - cross));
  Int f = abs(tp.mu * (base + cross));
  Int d = tp.mu * (sq(tp.p) + sq(tp.q));
  if (e > f) std::swap(e, f);
  return {e, f, d};
}

TwoSquareTriple lift_to_twosquare(const PythTriple& t) {
  if (t.z <= 0 || sq(t.x) + sq(t.y) != sq(t.z))
    throw Error(ErrorKind::argument, "lift_to_twosquare: not a Pythagorean triple");
  return {t.x - t.y, t.x + t.y, t.z};
}

PythTriple project_to_pyth(const TwoSquareTriple& t) {
  if (t.z <= 0 || sq(t.x) + sq(t.y) != 2 * sq(t.z))
    throw Error(ErrorKind::argument, "project_to_pyth: not a solution of x^2 + y^2 = 2z^2");
  // x and y share parity, so both halves are exact
  return {(t.x + t.y) / 2, (t.y - t.x) / 2, t.z};
}

HexaSolution assemble_solution(const RectParams& rp, const TrapParams& tp) {
  auto [a, b, c] = rect_sides(rp);
  auto [e, f, d] = trap_sides(tp);
  Int rect_side = abs((sq(rp.r) - sq(rp.s)) * rp.r * rp.s) * sq(rp.lambda);
  Int trap_side = abs(2 * (sq(tp.p) - sq(tp.q)) * tp.p * tp.q) * sq(tp.mu);
  if (rect_side != trap_side)
    throw Error(ErrorKind::mismatch,
                "compatibility equation fails: |(r^2-s^2)rs|*lambda^2 = " +
                    to_string(rect_side) + " but |2(p^2-q^2)pq|*mu^2 = " +
                    to_string(trap_side));
  return canonicalize(a, b, c, d, e, f);
}

}  // namespace hexaforge
