#include "rvd/bounds_audit.hpp"

#include <algorithm>

#include "rvd/error.hpp"

namespace rvd {
namespace {

long long choose2(long long a) { return a * (a - 1) / 2; }

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

BoundCheck make_check(std::string name, BoundSense sense, Rational value, Rational observed) {
  BoundCheck c;
  c.name = std::move(name);
  c.sense = sense;
  c.value = value;
  c.observed = observed;
  switch (sense) {
    case BoundSense::kUpper:
      c.pass = observed <= value;
      c.slack = value - observed;
      break;
    case BoundSense::kLower:
      c.pass = observed >= value;
      c.slack = observed - value;
      break;
    case BoundSense::kEqual:
      c.pass = observed == value;
      c.slack = Rational(0);
      break;
  }
  return c;
}

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

bool NgRecord::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

std::pair<Rational, Rational> size_band_lemma(int n, int k) {
  if (k < 4) throw DomainError("size band requires k >= 4");
  if (k > n) throw DomainError("size band requires k <= n");
  const Rational lower = Rational(static_cast<long long>(k) * (n - 1), 2) - choose2(k);
  const Rational upper = Rational(static_cast<long long>(k) * (n - 1) - choose2(k));
  return {lower, upper};
}

Rational improved_size_bound(int n, int k) {
  if (2 * k < n) throw DomainError("improved size bound requires k >= n/2");
  if (k > n) throw DomainError("improved size bound requires k <= n");
  return Rational(static_cast<long long>(n + k - 2) * (2 * k - n), 4) +
         Rational(static_cast<long long>(n - k) * (n + 1), 2);
}

long long max_size_rvd_n_minus_1(int n) {
  if (n < 2) throw DomainError("max_size_rvd_n_minus_1 requires n >= 2");
  if (n == 2) return 1;
  return choose2(n) - n + 3;
}

BoundReport size_audit(const Graph& g, int k) {
  BoundReport r;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.k = k;
  r.m = g.size();
  if (k >= 4 && k <= r.n)
    r.checks.push_back(make_check("size.band_upper", BoundSense::kUpper,
                                  size_band_lemma(r.n, k).second, Rational(r.m)));
  if (2 * k >= r.n && k <= r.n)
    r.checks.push_back(make_check("size.improved_upper", BoundSense::kUpper,
                                  improved_size_bound(r.n, k), Rational(r.m)));
  return r;
}

BoundReport degree_sum_audit(const Graph& g, const VertexColoring& c) {
  if (!is_rvd_coloring(g, c, false).valid)
    throw DomainError("degree_sum_audit requires an rvd-coloring");
  BoundReport r;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.k = c.num_colors();
  r.m = g.size();

  long long singleton_sum = 0;
  long long singletons = 0;
  const auto classes = c.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    long long degree_sum = 0;
    for (Vertex v : cls) degree_sum += g.degree(v);
    if (cls.size() == 1) {
      singleton_sum += degree_sum;
      ++singletons;
    } else if (cls.size() >= 2) {
      const long long bound = r.n + choose2(static_cast<long long>(cls.size()));
      r.checks.push_back(make_check("degree_sum.class_" + std::to_string(i + 1),
                                    BoundSense::kUpper, Rational(bound), Rational(degree_sum)));
    }
  }
  if (singletons > 0) {
    const Rational bound = (Rational(r.n + r.k, 2) - 1) * singletons;
    r.checks.push_back(make_check("degree_sum.singletons", BoundSense::kUpper, bound,
                                  Rational(singleton_sum)));
  }
  return r;
}

NgRecord ng_audit(const Graph& g, const SolverOptions& options) {
  NgRecord rec;
  rec.graph6 = encode_graph6(g);
  rec.n = g.order();
  const int n = rec.n;
  const Graph gc = complement(g);
  if (n < 2 || !is_connected(g)) {
    rec.skipped = true;
    rec.skip_reason = "graph disconnected";
    return rec;
  }
  if (!is_connected(gc)) {
    rec.skipped = true;
    rec.skip_reason = "complement disconnected";
    return rec;
  }
  const RvdReport rg = rvd_fast(g, options);
  const RvdReport rc = rvd_fast(gc, options);
  if (!rg.rvd || !rc.rvd) {
    rec.skipped = true;
    rec.skip_reason = "rvd unknown above exact cap";
    return rec;
  }
  rec.rvd_g = *rg.rvd;
  rec.rvd_complement = *rc.rvd;
  rec.sum = rec.rvd_g + rec.rvd_complement;
  rec.product = rec.rvd_g * rec.rvd_complement;

  auto add = [&](const char* name, BoundSense sense, long long value, long long observed) {
    rec.checks.push_back(make_check(name, sense, Rational(value), Rational(observed)));
  };

  const long long nn = static_cast<long long>(n) * n;
  if (n == 4) {
    add("ng.product_n4", BoundSense::kEqual, 1, rec.product);
  } else if (n >= 5 && n <= 7) {
    add("ng.product_lower", BoundSense::kLower, n - 2, rec.product);
    add("ng.product_upper", BoundSense::kUpper, nn, rec.product);
  } else if (n >= 8) {
    add("ng.product_lower", BoundSense::kLower, n - 1, rec.product);
    add("ng.product_upper", BoundSense::kUpper, nn, rec.product);
  }
  add("ng.sum_lower", BoundSense::kLower, n - 7, rec.sum);
  add("ng.sum_upper", BoundSense::kUpper, 2LL * n, rec.sum);
  if (n >= 24) add("ng.sum_lower_large", BoundSense::kLower, n - 5, rec.sum);

  // Tree and cactus complements, applied in both directions.
  const std::pair<int, int> sides[] = {{rec.rvd_g, rec.rvd_complement},
                                       {rec.rvd_complement, rec.rvd_g}};
  for (auto [self, other] : sides) {
    if (self == 1 && n >= 5 && n <= 7) add("ng.tree_complement_lower", BoundSense::kLower, n - 2, other);
    if (self == 1 && n >= 8) add("ng.tree_complement_lower", BoundSense::kLower, n - 1, other);
    if (self == 2) add("ng.cactus_complement_lower", BoundSense::kLower, n - 3, other);
  }
  if (n >= 8) rec.conjecture_holds = rec.sum >= n;
  return rec;
}

}  // namespace rvd
