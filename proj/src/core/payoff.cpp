#include "netform/payoff.hpp"

#include <stdexcept>

namespace netform {

Params::Params(Rational delta, Rational cost, bool allow_unit)
    : delta_(std::move(delta)), cost_(std::move(cost)), allow_unit_(allow_unit) {
  delta_.canonicalize();
  cost_.canonicalize();
  auto in_range = [&](const Rational& v) { return v > 0 && (v < 1 || (allow_unit_ && v == 1)); };
  if (!in_range(delta_)) {
    throw std::invalid_argument("delta " + to_string(delta_) + " outside " +
                                (allow_unit_ ? "(0, 1]" : "(0, 1)"));
  }
  if (!in_range(cost_)) {
    throw std::invalid_argument("cost " + to_string(cost_) + " outside " +
                                (allow_unit_ ? "(0, 1]" : "(0, 1)"));
  }
}

Params Params::grid_point(Rational delta, Rational cost) {
  delta.canonicalize();
  cost.canonicalize();
  const bool unit = delta == 1 || cost == 1;
  return Params(std::move(delta), std::move(cost), unit);
}

Rational utility_from_counts(std::uint32_t degree, std::uint64_t sigma, const Params& p) {
  const Rational d(static_cast<unsigned long>(degree));
  Rational u = d * (p.delta() - p.cost());
  if (degree >= 2) {
    Rational closed(static_cast<unsigned long>(sigma), static_cast<unsigned long>(choose2(degree)));
    closed.canonicalize();
    u += d * (1 - closed) * p.delta() * p.delta();
  }
  return u;
}

Rational node_utility(const Graph& g, NodeId i, const Params& p) {
  return utility_from_counts(degree(g, i), sigma(g, i), p);
}

Rational total_utility(const Graph& g, const Params& p) {
  Rational total = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) total += node_utility(g, i, p);
  return total;
}

DeviationGains deviation_gains(const Graph& g, NodeId i, NodeId j, const Params& p) {
  if (i == j) throw std::invalid_argument("deviation needs two distinct nodes");
  const bool present = g.has_edge(i, j);
  Graph after = g;
  after.toggle_edge(i, j);
  return DeviationGains{node_utility(after, i, p) - node_utility(g, i, p),
                        node_utility(after, j, p) - node_utility(g, j, p),
                        present ? DeviationKind::Delete : DeviationKind::Add};
}

mpz_class to_mpz(UtilityTable::Scaled value) {
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
  mpz_class hi(static_cast<unsigned long>(magnitude >> 64));
  mpz_class lo(static_cast<unsigned long>(magnitude & ~std::uint64_t{0}));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

namespace {

// Values must stay far enough below 2^127 that sums over all nodes and
// differences of sums cannot overflow.
constexpr int kValueBits = 112;

UtilityTable::Scaled to_scaled(const mpz_class& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > static_cast<std::size_t>(kValueBits)) {
    throw LimitError("scaled utility exceeds the 112-bit exact range");
  }
  mpz_class magnitude = abs(z);
  mpz_class hi = magnitude >> 64;
  mpz_class lo = magnitude - (hi << 64);
  unsigned __int128 v = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
  auto s = static_cast<UtilityTable::Scaled>(v);
  return z < 0 ? -s : s;
}

}  // namespace

UtilityTable::UtilityTable(const Params& p, std::uint32_t n) : params_(p), n_(n) {
  if (n == 0 || n > kMaxNodes) throw LimitError("utility table node count outside [1, 64]");
  mpz_class q;
  mpz_lcm(q.get_mpz_t(), p.delta().get_den_mpz_t(), p.cost().get_den_mpz_t());
  mpz_class degree_lcm = 1;
  for (std::uint32_t k = 2; k + 2 <= n; ++k) {
    mpz_lcm_ui(degree_lcm.get_mpz_t(), degree_lcm.get_mpz_t(), k);
  }
  scale_ = q * q * degree_lcm;

  const std::uint32_t max_degree = n - 1;
  offsets_.resize(max_degree + 2);
  std::size_t total = 0;
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    offsets_[d] = total;
    total += choose2(d) + 1;
  }
  offsets_[max_degree + 1] = total;
  values_.resize(total);
  const Rational scale_q(scale_);
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    for (std::uint64_t s = 0; s <= choose2(d); ++s) {
      Rational scaled = utility_from_counts(d, s, p) * scale_q;
      scaled.canonicalize();
      if (scaled.get_den() != 1) throw std::logic_error("utility table scale is not a common denominator");
      values_[offsets_[d] + s] = to_scaled(scaled.get_num());
    }
  }
}

UtilityTable::Scaled UtilityTable::node_utility(const Graph& g, NodeId i) const {
  return utility(g.degree(i), sigma(g, i));
}

UtilityTable::Scaled UtilityTable::total_utility(const Graph& g) const {
  Scaled total = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) total += node_utility(g, i);
  return total;
}

Rational UtilityTable::to_rational(Scaled value) const {
  Rational r(to_mpz(value), scale_);
  r.canonicalize();
  return r;
}

UtilityTable::Scaled UtilityTable::from_rational(const Rational& value) const {
  Rational scaled = value * Rational(scale_);
  scaled.canonicalize();
  if (scaled.get_den() != 1) throw std::invalid_argument("value is not a multiple of the table scale");
  return to_scaled(scaled.get_num());
}

}  // namespace netform
