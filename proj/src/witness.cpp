#include "sumprod/witness.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sumprod {

namespace {

Int positive_rep(const Int& x, const Int& m) { return mod_floor(Int(x - 1), m) + 1; }

Int product(const std::vector<Int>& values) {
  Int p = 1;
  for (const Int& v : values) p *= v;
  return p;
}

std::string join(const std::vector<Int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += to_string(values[i]);
  }
  return out + "]";
}

[[noreturn]] void fail(const std::string& what, const WitnessTrace& trace) {
  throw InvariantViolation(what, describe(trace));
}

}  // namespace

std::string describe(const WitnessTrace& t) {
  std::ostringstream os;
  auto line = [&](const char* name, const Int& v) { os << name << '=' << v << '\n'; };
  line("a", t.a);
  line("b", t.b);
  line("c", t.c);
  line("d", t.d);
  line("m", t.m);
  line("N", t.N);
  line("m'", t.m_prime);
  line("k", t.k);
  line("x", t.x);
  line("y", t.y);
  line("z", t.z);
  line("x'", t.x_prime);
  line("y'", t.y_prime);
  line("q_x", t.q_x);
  line("q_y", t.q_y);
  line("a0", t.a0);
  line("c0", t.c0);
  os << "P1=" << join(t.P1) << '\n';
  os << "P2=" << join(t.P2) << '\n';
  line("u", t.u);
  line("a1", t.a1);
  line("c1", t.c1);
  os << "P3=" << join(t.P3) << '\n';
  line("v", t.v);
  line("a'", t.a_prime);
  line("c'", t.c_prime);
  if (t.lifted) {
    line("ell", t.ell);
    line("r", t.r);
    line("s", t.s);
    line("b'", t.b_prime);
    line("d'", t.d_prime);
  }
  return os.str();
}

std::vector<std::string> trace_violations(const WitnessTrace& t) {
  std::vector<std::string> bad;
  auto require = [&](bool ok, const char* claim) {
    if (!ok) bad.emplace_back(claim);
  };
  const Int& m = t.m;
  const Int m2 = m * m;
  const Int m4 = m2 * m2;

  require(t.a >= 1 && t.b >= 1 && t.c >= 1 && t.d >= 1 && m >= 1,
          "a, b, c, d, m positive");
  require(t.m_prime == gcd(gcd(t.a, t.c), m), "m' = gcd(a, c, m)");
  require(t.k * m == t.N - (t.a * t.b + t.c * t.d), "N = ab + cd + km");
  require(t.b * t.x + t.d * t.y + t.m_prime * t.z == t.k, "bx + dy + m'z = k");
  require(t.x_prime >= 0 && t.x_prime <= t.m_prime - 1, "0 <= x' <= m' - 1");
  require(t.y_prime >= t.b * m && t.y_prime <= t.b * m + t.m_prime - 1,
          "bm <= y' <= bm + m' - 1");
  require(t.x == t.q_x * t.m_prime + t.x_prime, "x = q_x m' + x'");
  require(t.y == t.q_y * t.m_prime + t.y_prime, "y = q_y m' + y'");
  require(t.a0 == t.a + m * t.x_prime, "a0 = a + m x'");
  require(t.c0 == t.c + m * t.y_prime, "c0 = c + m y'");
  require(t.N == t.a0 * t.b + t.c0 * t.d +
                     m * t.m_prime * (t.b * t.q_x + t.d * t.q_y + t.z),
          "N = a0 b + c0 d + m m'(b q_x + d q_y + z)");
  require(t.a <= t.a0 && t.a0 < t.a + m2, "a <= a0 < a + m^2");
  require(t.c + t.b * m2 <= t.c0 && t.c0 < t.c + (t.b + 1) * m2,
          "c + bm^2 <= c0 < c + (b+1)m^2");

  const Int g0 = gcd(t.a0, t.c0);
  std::vector<Int> all_p = t.P1;
  all_p.insert(all_p.end(), t.P2.begin(), t.P2.end());
  const Int prod_p = product(all_p);
  if (t.m_prime >= 1) {
    std::vector<Int> expected = factorize(t.m_prime).primes();
    std::vector<Int> got = all_p;
    std::sort(got.begin(), got.end());
    require(expected == got, "P1 u P2 = primes of m'");
  }
  for (const Int& p : t.P1)
    require(ord_p(p, t.m_prime) < ord_p(p, g0), "P1: ord_p(m') < ord_p(gcd(a0, c0))");
  for (const Int& p : t.P2)
    require(ord_p(p, t.m_prime) == ord_p(p, g0), "P2: ord_p(m') = ord_p(gcd(a0, c0))");
  require(t.u >= 0 && t.u < prod_p && prod_p <= t.m_prime && t.m_prime <= m,
          "0 <= u < prod P <= m' <= m");
  for (const Int& p : t.P1) require(mod_floor(t.u, p) == 1, "u = 1 (mod p) on P1");
  for (const Int& p : t.P2) require(mod_floor(t.u, p) == 0, "u = 0 (mod p) on P2");
  require(t.a1 == t.a0 + t.d * m * t.u, "a1 = a0 + dmu");
  require(t.c1 == t.c0 - t.b * m * t.u, "c1 = c0 - bmu");
  require(t.a <= t.a1 && t.a1 <= t.a + (t.d + 1) * m2, "a <= a1 <= a + (d+1)m^2");
  require(t.c <= t.c1 && t.c1 <= t.c + (t.b + 1) * m2, "c <= c1 <= c + (b+1)m^2");
  require(gcd(gcd(t.a1, t.c1), m) == t.m_prime, "gcd(a1, c1, m) = m'");
  if (t.a1 != 0) {
    const Int g1 = gcd(t.a1, t.c1);
    for (const Int& p : all_p)
      require(ord_p(p, t.m_prime) == ord_p(p, g1), "ord_p(m') = ord_p(gcd(a1, c1)) on P");

    std::vector<Int> expected_p3;
    for (const Int& p : factorize(t.a1).primes())
      if (!divides(p, m)) expected_p3.push_back(p);
    require(expected_p3 == t.P3, "P3 = primes dividing a1 but not m");
  }
  const Int prod_p3 = product(t.P3);
  require(t.v >= 0 && t.v <= prod_p3 && prod_p3 <= t.a1, "0 <= v <= prod P3 <= a1");
  for (const Int& p : t.P3)
    require(mod_floor(t.c1 + m * t.m_prime * t.v, p) == mod_floor(Int(1), p),
            "c1 + m m' v = 1 (mod p) on P3");
  require(t.a_prime == t.a1, "a' = a1");
  require(t.c_prime == t.c1 + m * t.m_prime * t.v, "c' = c1 + m m' v");
  require(t.a <= t.a_prime && t.a_prime <= t.a + (t.d + 1) * m2,
          "a <= a' <= a + (d+1)m^2");
  require(t.c <= t.c_prime &&
              t.c_prime <= t.c + (t.a + t.b + 1) * m2 + (t.d + 1) * m4,
          "c <= c' <= c + (a+b+1)m^2 + (d+1)m^4");
  require(gcd(t.a_prime, t.c_prime) == t.m_prime, "gcd(a', c') = m'");
  require(mod_floor(Int(t.a_prime - t.a), m) == 0 && mod_floor(Int(t.c_prime - t.c), m) == 0,
          "a' = a, c' = c (mod m)");
  require(divides(Int(m * t.m_prime), Int(t.N - t.a_prime * t.b - t.c_prime * t.d)),
          "N = a'b + c'd (mod m m')");

  if (t.lifted) {
    require(t.ell * m * t.m_prime == t.N - t.a_prime * t.b - t.c_prime * t.d,
            "N = a'b + c'd + ell m m'");
    require(t.a_prime * t.r + t.c_prime * t.s == t.ell * t.m_prime, "a'r + c's = ell m'");
    require(t.b_prime == t.b + m * t.r, "b' = b + mr");
    require(t.d_prime == t.d + m * t.s, "d' = d + ms");
    require(t.a_prime * t.b_prime + t.c_prime * t.d_prime == t.N, "N = a'b' + c'd'");
  }
  return bad;
}

std::optional<LiftResult> lemma_lift(const Int& a_prime, const Int& c_prime,
                                     const Int& b, const Int& d, const Int& m,
                                     const Int& N, bool require_nonneg_growth) {
  if (m < 1) throw std::invalid_argument("lemma_lift: m must be >= 1");
  if (a_prime == 0 && c_prime == 0)
    throw std::invalid_argument("lemma_lift: a' and c' are both zero");
  const Int mp = gcd(a_prime, c_prime);
  const Int diff = N - a_prime * b - c_prime * d;
  if (!divides(Int(m * mp), diff))
    throw std::invalid_argument("lemma_lift: N != a'b + c'd (mod m gcd(a', c'))");
  const Int ell = diff / (m * mp);

  Int r, s;
  if (require_nonneg_growth) {
    if (a_prime <= 0 || c_prime <= 0)
      throw std::invalid_argument("lemma_lift: nonnegative growth needs a', c' > 0");
    auto pair = sylvester_nonneg(a_prime, c_prime, mp, ell);
    if (!pair) return std::nullopt;
    r = pair->r;
    s = pair->s;
  } else {
    const ExtGcd e = ext_gcd(a_prime, c_prime);
    r = e.s * ell;
    s = e.t * ell;
  }
  return LiftResult{b + m * r, d + m * s, ell, r, s};
}

WitnessTrace prepare_lift(const Instance& pos) {
  WitnessTrace t;
  t.a = pos.a;
  t.b = pos.b;
  t.c = pos.c;
  t.d = pos.d;
  t.m = pos.m;
  t.N = pos.N;
  if (pos.m < 1 || pos.a < 1 || pos.b < 1 || pos.c < 1 || pos.d < 1)
    throw std::invalid_argument("prepare_lift: a, b, c, d, m must be positive");
  const Int& m = pos.m;
  const Int base = pos.a * pos.b + pos.c * pos.d;
  if (!divides(m, Int(pos.N - base)))
    throw std::invalid_argument("prepare_lift: N != ab + cd (mod m)");

  t.m_prime = gcd(gcd(pos.a, pos.c), m);
  t.k = (pos.N - base) / m;

  auto xyz = solve_linear3(pos.b, pos.d, t.m_prime, t.k);
  if (!xyz) fail("gcd(b, d, m') does not divide k; is gcd(a, b, c, d, m) = 1?", t);
  t.x = xyz->x;
  t.y = xyz->y;
  t.z = xyz->z;

  t.x_prime = mod_floor(t.x, t.m_prime);
  const Int y_floor = pos.b * m;
  t.y_prime = y_floor + mod_floor(Int(t.y - y_floor), t.m_prime);
  t.q_x = (t.x - t.x_prime) / t.m_prime;
  t.q_y = (t.y - t.y_prime) / t.m_prime;
  t.a0 = pos.a + m * t.x_prime;
  t.c0 = pos.c + m * t.y_prime;

  const Int g0 = gcd(t.a0, t.c0);
  CrtSystem u_system;
  for (const Int& p : factorize(t.m_prime).primes()) {
    if (ord_p(p, t.m_prime) < ord_p(p, g0)) {
      t.P1.push_back(p);
      u_system.congruences.push_back({1, p});
    } else {
      t.P2.push_back(p);
      u_system.congruences.push_back({0, p});
    }
  }
  auto u = crt_solve(u_system);
  if (!u) fail("CRT system for u is incompatible", t);
  t.u = u->x0;
  t.a1 = t.a0 + pos.d * m * t.u;
  t.c1 = t.c0 - pos.b * m * t.u;

  const Int step = m * t.m_prime;
  CrtSystem v_system;
  for (const Int& p : factorize(t.a1).primes()) {
    if (divides(p, m)) continue;
    t.P3.push_back(p);
    // c1 + step*v == 1 (mod p); p does not divide step
    const Int inv = *mod_inverse(step, p);
    v_system.congruences.push_back({mod_floor(Int((1 - t.c1) * inv), p), p});
  }
  auto v = crt_solve(v_system);
  if (!v) fail("CRT system for v is incompatible", t);
  t.v = v->x0;
  t.a_prime = t.a1;
  t.c_prime = t.c1 + step * t.v;
  return t;
}

std::optional<ClassSolution> solve_class(const Instance& inst) {
  if (inst.m < 1) throw std::invalid_argument("solve_class: m must be >= 1");
  const std::array<Int, 5> params{inst.a, inst.b, inst.c, inst.d, inst.m};
  if (gcd(params) != 1)
    throw NotPrimitive("solve_class: gcd(a, b, c, d, m) != 1; use solve_dilated");
  if (!divides(inst.m, Int(inst.N - (inst.a * inst.b + inst.c * inst.d))))
    return std::nullopt;

  const Int& m = inst.m;
  Instance pos{positive_rep(inst.a, m), positive_rep(inst.b, m), positive_rep(inst.c, m),
               positive_rep(inst.d, m), m, inst.N};
  WitnessTrace t = prepare_lift(pos);

  std::optional<LiftResult> lift;
  try {
    lift = lemma_lift(t.a_prime, t.c_prime, pos.b, pos.d, m, inst.N, false);
  } catch (const std::invalid_argument& e) {
    fail(std::string("lift hypotheses failed: ") + e.what(), t);
  }
  if (!lift) fail("integer lift returned no solution", t);
  t.lifted = true;
  t.ell = lift->ell;
  t.r = lift->r;
  t.s = lift->s;
  t.b_prime = lift->b_prime;
  t.d_prime = lift->d_prime;

  const auto bad = trace_violations(t);
  if (!bad.empty()) fail("trace invariant violated: " + bad.front(), t);

  Witness w{t.a_prime, t.b_prime, t.c_prime, t.d_prime};
  if (!verify_witness(inst, w)) fail("witness failed verification", t);
  return ClassSolution{std::move(w), std::move(t)};
}

std::optional<DilatedSolution> solve_dilated(const Instance& inst) {
  if (inst.m < 1) throw std::invalid_argument("solve_dilated: m must be >= 1");
  const std::array<Int, 5> params{inst.a, inst.b, inst.c, inst.d, inst.m};
  const Int delta = gcd(params);
  const Int base = inst.a * inst.b + inst.c * inst.d;
  if (!divides(Int(delta * inst.m), Int(inst.N - base))) return std::nullopt;

  if (delta == 1) {
    auto sol = solve_class(inst);
    if (!sol) throw std::logic_error("solve_dilated: primitive instance not solved");
    return DilatedSolution{std::move(sol->witness), delta, std::move(sol->trace)};
  }

  const Int delta2 = delta * delta;
  Instance reduced{inst.a / delta, inst.b / delta, inst.c / delta, inst.d / delta,
                   inst.m / delta, inst.N / delta2};
  auto sol = solve_class(reduced);
  if (!sol || reduced.N * delta2 != inst.N)
    throw InvariantViolation("solve_dilated: reduced instance not solvable",
                             sol ? describe(sol->trace) : std::string{});
  Witness w{delta * sol->witness.a_prime, delta * sol->witness.b_prime,
            delta * sol->witness.c_prime, delta * sol->witness.d_prime};
  if (!verify_witness(inst, w))
    throw InvariantViolation("solve_dilated: rescaled witness failed verification",
                             describe(sol->trace));
  return DilatedSolution{std::move(w), delta, std::move(sol->trace)};
}

Int subgroup_form(const Int& a, const Int& b, const Int& c, const Int& d,
                  const Int& m, const Int& w, const Int& x, const Int& y,
                  const Int& z) {
  return a * w + b * x + c * y + d * z + m * (w * x + y * z);
}

std::optional<SubgroupWitness> subgroup_witness(const Int& a, const Int& b,
                                                const Int& c, const Int& d,
                                                const Int& m, const Int& t) {
  if (m < 1) throw std::invalid_argument("subgroup_witness: m must be >= 1");
  const std::array<Int, 5> params{a, b, c, d, m};
  if (!divides(gcd(params), t)) return std::nullopt;
  if (t == 0) return SubgroupWitness{0, 0, 0, 0, 0};

  // (a + mx)(b + mw) + (c + mz)(d + my) = ab + cd + m*form(w, x, y, z)
  Instance inst{a, b, c, d, m, a * b + c * d + m * t};
  auto sol = solve_dilated(inst);
  if (!sol) throw std::logic_error("subgroup_witness: target class not solved");
  const Witness& wt = sol->witness;
  SubgroupWitness out{(wt.b_prime - b) / m, (wt.a_prime - a) / m, (wt.d_prime - d) / m,
                      (wt.c_prime - c) / m, t};
  if (subgroup_form(a, b, c, d, m, out.w, out.x, out.y, out.z) != t)
    throw InvariantViolation("subgroup_witness: quadruple does not evaluate to t",
                             describe(sol->trace));
  return out;
}

bool verify_witness(const Instance& inst, const Witness& w) {
  if (inst.m < 1) return false;
  auto same = [&](const Int& x, const Int& y) { return divides(inst.m, Int(x - y)); };
  return same(w.a_prime, inst.a) && same(w.b_prime, inst.b) && same(w.c_prime, inst.c) &&
         same(w.d_prime, inst.d) &&
         w.a_prime * w.b_prime + w.c_prime * w.d_prime == inst.N;
}

}  // namespace sumprod
