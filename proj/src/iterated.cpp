#include "sumprod/iterated.hpp"

#include "sumprod/witness.hpp"

#include <array>
#include <stdexcept>

namespace sumprod {

IteratedSpec::IteratedSpec(Int m, std::vector<std::vector<Int>> terms)
    : m_(std::move(m)), terms_(std::move(terms)) {
  if (m_ < 1) throw std::invalid_argument("iterated spec: m must be >= 1");
  if (terms_.size() < 2) throw std::invalid_argument("iterated spec: need at least two terms");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].empty()) throw std::invalid_argument("iterated spec: empty term");
    if (i > 0 && terms_[i].size() < terms_[i - 1].size())
      throw std::invalid_argument("iterated spec: term lengths must be nondecreasing");
  }
}

std::vector<std::size_t> IteratedSpec::shape() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms_) out.push_back(t.size());
  return out;
}

Int IteratedSpec::base_value() const { return evaluate(terms_); }

Int evaluate(const std::vector<std::vector<Int>>& terms) {
  Int sum = 0;
  for (const auto& term : terms) {
    Int p = 1;
    for (const Int& v : term) p *= v;
    sum += p;
  }
  return sum;
}

bool verify_iterated(const IteratedSpec& spec, const IteratedWitness& w, const Int& N) {
  const auto& terms = spec.terms();
  if (w.values.size() != terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (w.values[i].size() != terms[i].size()) return false;
    for (std::size_t j = 0; j < terms[i].size(); ++j)
      if (!divides(spec.modulus(), Int(w.values[i][j] - terms[i][j]))) return false;
  }
  return evaluate(w.values) == N;
}

std::optional<IteratedWitness> absorb_k1(const Int& a0, const std::vector<Int>& factors,
                                         const Int& m, const Int& N) {
  if (m < 1) throw std::invalid_argument("absorb_k1: m must be >= 1");
  if (factors.empty()) throw std::invalid_argument("absorb_k1: factors must be nonempty");
  Int prod = 1;
  for (const Int& f : factors) prod *= f;
  const Int diff = N - a0 - prod;
  if (!divides(m, diff)) return std::nullopt;
  const Int q = diff / m;
  return IteratedWitness{{{a0 + q * m}, factors}};
}

const char* to_string(IteratedStatus s) {
  switch (s) {
    case IteratedStatus::witness: return "witness";
    case IteratedStatus::not_member: return "not-member";
    case IteratedStatus::unsupported_shape: return "unsupported-shape";
  }
  return "unknown";
}

IteratedOutcome solve_iterated(const IteratedSpec& spec, const Int& N) {
  const auto& terms = spec.terms();
  const Int& m = spec.modulus();

  if (terms[0].size() == 1) {
    // The single class absorbs everything; the rest stays at base values.
    std::vector<std::vector<Int>> rest(terms.begin() + 1, terms.end());
    auto w = absorb_k1(terms[0][0], {evaluate(rest)}, m, N);
    if (!w) return {IteratedStatus::not_member, std::nullopt};
    IteratedWitness out{terms};
    out.values[0][0] = w->values[0][0];
    return {IteratedStatus::witness, std::move(out)};
  }

  if (terms[0].size() == 2 && terms[1].size() == 2) {
    const std::array<Int, 5> params{terms[0][0], terms[0][1], terms[1][0], terms[1][1], m};
    if (gcd(params) != 1) return {IteratedStatus::unsupported_shape, std::nullopt};
    std::vector<std::vector<Int>> tail(terms.begin() + 2, terms.end());
    const Instance inst{terms[0][0], terms[0][1], terms[1][0], terms[1][1], m,
                        N - evaluate(tail)};
    auto sol = solve_class(inst);
    if (!sol) return {IteratedStatus::not_member, std::nullopt};
    IteratedWitness out{terms};
    out.values[0] = {sol->witness.a_prime, sol->witness.b_prime};
    out.values[1] = {sol->witness.c_prime, sol->witness.d_prime};
    return {IteratedStatus::witness, std::move(out)};
  }

  return {IteratedStatus::unsupported_shape, std::nullopt};
}

}  // namespace sumprod
