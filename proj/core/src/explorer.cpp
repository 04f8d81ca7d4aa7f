#include "clustergeom/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "clustergeom/pullback.hpp"

namespace clustergeom {

namespace {

template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

void enforce(const LaurentPolynomial& p, const Limits& limits) {
  if (p.size() > limits.max_terms)
    throw ResourceLimitError("term cap exceeded (" + std::to_string(p.size()) + " > " +
                             std::to_string(limits.max_terms) + ")");
  if (p.max_abs_exponent() > limits.max_exponent) throw ResourceLimitError("exponent cap exceeded");
}

LaurentPolynomial product_of_powers(const SeedNode& node, std::size_t k, int sign, const Limits& limits) {
  const IntegerMatrix& eps = node.seed.epsilon();
  LaurentPolynomial acc = LaurentPolynomial::constant(node.seed.rank(), 1);
  for (std::size_t j = 0; j < node.seed.rank(); ++j) {
    const Integer e = sign * eps(k, j);
    if (e <= 0) continue;
    acc = acc * node.cluster[j].pow(e.get_ui());
    enforce(acc, limits);
  }
  return acc;
}

struct Task {
  std::size_t source = 0;
  std::size_t k = 0;
};

}  // namespace

Limits limits_from_env() {
  Limits limits;
  if (const char* env = std::getenv("CLUSTER_GEOM_MAX_TERMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw ValidationError("CLUSTER_GEOM_MAX_TERMS must be a positive integer");
    limits.max_terms = static_cast<std::size_t>(v);
  }
  return limits;
}

std::string path_string(const std::vector<std::size_t>& path) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < path.size(); ++i) out << (i ? "," : "") << path[i] + 1;
  out << ']';
  return out.str();
}

SeedNode root_node(const Seed& s) {
  SeedNode node{s, {}, 0};
  for (std::size_t i = 0; i < s.rank(); ++i) node.cluster.push_back(LaurentPolynomial::variable(s.rank(), i));
  return node;
}

LaurentPolynomial exchange_polynomial(const SeedNode& node, std::size_t k, const Limits& limits) {
  if (k >= node.seed.rank() || !node.seed.fixed().is_unfrozen(k))
    throw ValidationError("mutation index " + std::to_string(k + 1) + " is out of range or frozen");
  LaurentPolynomial p = product_of_powers(node, k, 1, limits) + product_of_powers(node, k, -1, limits);
  enforce(p, limits);
  return p;
}

SeedNode step(const SeedNode& node, std::size_t k, const Limits& limits) {
  const LaurentPolynomial p = exchange_polynomial(node, k, limits);
  auto q = exact_divide(p, node.cluster[k]);
  std::vector<std::size_t> path = node.seed.path();
  path.push_back(k);
  if (!q)
    throw LaurentViolation("exchange relation is not Laurent",
                           "path " + path_string(path) + ": (" + p.to_string("A") + ")/(" +
                               node.cluster[k].to_string("A") + ")");
  enforce(*q, limits);
  SeedNode out{mutate_seed(node.seed, k), node.cluster, node.depth + 1};
  out.cluster[k] = std::move(*q);
  return out;
}

std::string node_key(const SeedNode& node, Dedup dedup) {
  const std::size_t n = node.seed.rank();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& c : node.cluster) names.push_back(c.to_string("A"));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  if (dedup == Dedup::unlabeled) {
    const auto uf = node.seed.fixed().unfrozen();
    std::vector<std::size_t> sorted = uf;
    std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    for (std::size_t a = 0; a < uf.size(); ++a) perm[uf[a]] = sorted[a];
  }
  const IntegerMatrix& eps = node.seed.epsilon();
  std::ostringstream out;
  for (std::size_t a = 0; a < n; ++a) {
    out << (a ? ";" : "") << node.seed.fixed().d(perm[a]).get_str() << ':';
    for (std::size_t b = 0; b < n; ++b) out << (b ? "," : "") << eps(perm[a], perm[b]).get_str();
  }
  out << '|';
  for (std::size_t a = 0; a < n; ++a) out << (a ? ";" : "") << names[perm[a]];
  return out.str();
}

std::string cluster_key(const SeedNode& node) {
  std::vector<std::string> names;
  for (const auto& c : node.cluster) names.push_back(c.to_string("A"));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& s : names) out += s + ";";
  return out;
}

ExchangeGraph explore(const SeedNode& root, const ExploreOptions& options) {
  ExchangeGraph g;
  g.depth = options.depth;
  std::unordered_map<std::string, std::size_t> index;
  g.nodes.push_back(root);
  g.keys.push_back(node_key(root, options.dedup));
  index.emplace(g.keys.back(), 0);
  std::vector<std::size_t> frontier{0};
  const auto uf = root.seed.fixed().unfrozen();

  for (std::size_t level = 0; level < options.depth && !frontier.empty(); ++level) {
    std::vector<Task> tasks;
    for (std::size_t id : frontier)
      for (std::size_t k : uf) tasks.push_back({id, k});

    struct Outcome {
      std::optional<SeedNode> node;
      std::string key;
      std::string witness;
      bool truncated = false;
    };
    std::vector<Outcome> results(tasks.size());
    parallel_for(tasks.size(), options.threads, [&](std::size_t t) {
      try {
        SeedNode child = step(g.nodes[tasks[t].source], tasks[t].k, options.limits);
        results[t].key = node_key(child, options.dedup);
        results[t].node = std::move(child);
      } catch (const LaurentViolation& e) {
        results[t].witness = e.witness();
      } catch (const ResourceLimitError&) {
        results[t].truncated = true;
      }
    });

    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      Outcome& r = results[t];
      if (!r.witness.empty()) {
        g.laurent_ok = false;
        g.witnesses.push_back(r.witness);
        continue;
      }
      if (r.truncated) {
        g.truncated = true;
        continue;
      }
      auto [it, inserted] = index.emplace(r.key, g.nodes.size());
      if (inserted) {
        g.nodes.push_back(std::move(*r.node));
        g.keys.push_back(std::move(r.key));
        next.push_back(it->second);
      }
      g.edges.push_back({tasks[t].source, tasks[t].k, it->second});
    }
    frontier = std::move(next);
  }

  std::set<std::string> clusters;
  for (const auto& node : g.nodes) {
    clusters.insert(cluster_key(node));
    for (const auto& c : node.cluster) {
      g.max_terms = std::max(g.max_terms, c.size());
      if (!c.has_nonnegative_coefficients()) g.nonnegative_coefficients = false;
    }
  }
  g.clusters = clusters.size();
  return g;
}

namespace {

struct TorusState {
  Seed seed;
  LaurentPolynomial f;
};

LaurentReport verify_laurent(const Seed& s, const LaurentPolynomial& start, std::size_t depth, const Limits& limits,
                             unsigned threads, Side side) {
  LaurentReport report;
  report.side = side;
  report.depth = depth;
  const auto uf = s.fixed().unfrozen();
  std::vector<TorusState> states{{s, start}};
  std::unordered_map<std::string, std::size_t> seen;
  seen.emplace(canonical_key(s) + "|" + start.to_string(), 0);
  std::vector<std::size_t> frontier{0};
  const std::string var = side == Side::A ? "A" : "X";

  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Task> tasks;
    for (std::size_t id : frontier)
      for (std::size_t k : uf) tasks.push_back({id, k});
    struct Outcome {
      std::optional<TorusState> state;
      std::string key;
      std::string witness;
      bool truncated = false;
    };
    std::vector<Outcome> results(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t t) {
      const TorusState& from = states[tasks[t].source];
      const std::size_t k = tasks[t].k;
      try {
        const RationalExpression r = side == Side::A ? pushforward_A(from.seed, k, RationalExpression(from.f))
                                                     : pushforward_X(from.seed, k, RationalExpression(from.f));
        auto laurent = r.to_laurent();
        Seed next = mutate_seed(from.seed, k);
        if (!laurent) {
          results[t].witness = "path " + path_string(next.path()) + ": " + r.to_string(var);
          return;
        }
        enforce(*laurent, limits);
        results[t].key = canonical_key(next) + "|" + laurent->to_string();
        results[t].state = TorusState{std::move(next), std::move(*laurent)};
      } catch (const ResourceLimitError&) {
        results[t].truncated = true;
      }
    });
    std::vector<std::size_t> next;
    for (auto& r : results) {
      if (!r.witness.empty()) {
        report.ok = false;
        report.witnesses.push_back(r.witness);
        continue;
      }
      if (r.truncated) {
        report.truncated = true;
        continue;
      }
      auto [it, inserted] = seen.emplace(r.key, states.size());
      if (!inserted) continue;
      states.push_back(std::move(*r.state));
      next.push_back(it->second);
    }
    frontier = std::move(next);
  }
  report.tori_checked = states.size();
  for (const auto& st : states) {
    report.max_terms = std::max(report.max_terms, st.f.size());
    report.max_abs_exponent = std::max(report.max_abs_exponent, st.f.max_abs_exponent());
  }
  return report;
}

}  // namespace

LaurentReport verify_laurent_A(const Seed& s, std::span<const Integer> q, std::size_t depth, const Limits& limits,
                               unsigned threads) {
  if (q.size() != s.rank()) throw ValidationError("q has the wrong length");
  for (std::size_t i : s.fixed().unfrozen())
    if (s.fixed().pairing(s.e(i), q) < 0)
      throw ValidationError("precondition failed: <e_" + std::to_string(i + 1) + ", q> < 0");
  return verify_laurent(s, character(q), depth, limits, threads, Side::A);
}

LaurentReport verify_laurent_X(const Seed& s, std::span<const Integer> q, std::size_t depth, const Limits& limits,
                               unsigned threads) {
  if (q.size() != s.rank()) throw ValidationError("q has the wrong length");
  // <q, -v_i> = -{e_i, q}
  for (std::size_t i : s.fixed().unfrozen())
    if (s.fixed().bracket(s.e(i), q) > 0)
      throw ValidationError("precondition failed: <q, -v_" + std::to_string(i + 1) + "> < 0");
  return verify_laurent(s, character(q), depth, limits, threads, Side::X);
}

}  // namespace clustergeom
