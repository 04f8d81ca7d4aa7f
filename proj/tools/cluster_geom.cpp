// cluster-geom: command line front end for seeds, mutation, exchange graphs,
// Laurent checks, Picard groups and the rank-2 toric analysis.
//
// Exit codes: 0 success, 2 invalid input or unmet precondition, 3 search
// truncated by a resource cap, 4 Laurent violation.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "clustergeom/clustergeom.hpp"

namespace cg = clustergeom;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kTruncated = 3;
constexpr int kViolation = 4;

void emit(const cg::Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_mutate(const std::string& file, const std::string& path) {
  const cg::SeedFile sf = cg::load_seed_file(file);
  const auto p = cg::parse_path(path);
  emit(cg::seed_to_json(cg::mutate_along(sf.seed, p)));
  return kOk;
}

int cmd_explore(const std::string& file, std::size_t depth, const std::string& dedup, unsigned threads,
                bool list_nodes) {
  const cg::SeedFile sf = cg::load_seed_file(file);
  cg::ExploreOptions opt;
  opt.depth = depth;
  opt.dedup = dedup == "unlabeled" ? cg::Dedup::unlabeled : cg::Dedup::labeled;
  opt.threads = threads;
  opt.limits = cg::limits_from_env();
  const cg::ExchangeGraph g = cg::explore(cg::root_node(sf.seed), opt);
  emit(cg::graph_to_json(g, opt.dedup, list_nodes));
  if (!g.laurent_ok) return kViolation;
  if (g.truncated) return kTruncated;
  return kOk;
}

int cmd_laurent(const std::string& file, const std::string& side, const std::string& q, std::size_t depth,
                unsigned threads) {
  const cg::SeedFile sf = cg::load_seed_file(file);
  cg::IntVector qv = cg::parse_vector(q);
  if (qv.empty()) qv.assign(sf.seed.rank(), cg::Integer(0));
  const cg::Limits limits = cg::limits_from_env();
  const cg::LaurentReport r = side == "X" ? cg::verify_laurent_X(sf.seed, qv, depth, limits, threads)
                                          : cg::verify_laurent_A(sf.seed, qv, depth, limits, threads);
  cg::Json out = cg::laurent_report_to_json(r);
  out["q"] = cg::to_json(std::span<const cg::Integer>(qv));
  emit(out);
  if (!r.ok) return kViolation;
  if (r.truncated) return kTruncated;
  return kOk;
}

int cmd_picard(const std::string& file) {
  const cg::SeedFile sf = cg::load_seed_file(file);
  const cg::PicardGroup pic = cg::picard_invariants(sf.seed);
  emit(cg::Json{{"invariants", cg::to_json(std::span<const cg::Integer>(pic.invariants))},
                {"torsion_free", pic.factorial_guaranteed},
                {"factoriality", pic.factorial_guaranteed ? "guaranteed" : "not guaranteed"}});
  return kOk;
}

cg::Json gram_json(const cg::IntegerMatrix& g) { return cg::to_json(g); }

int cmd_rank2(const std::string& file, const std::vector<std::string>& mutations) {
  const cg::SeedFile sf = cg::load_seed_file(file);
  const cg::Rank2Data data = sf.rank2 ? *sf.rank2 : cg::seed_to_rank2(sf.seed);
  const cg::Seed seed = cg::build_seed(data);
  const auto kb = cg::kernel_basis(cg::w_matrix(data));

  cg::Json out;
  out["rank2"] = cg::rank2_to_json(data);
  out["epsilon"] = cg::to_json(seed.epsilon());
  cg::Json kj = cg::Json::array();
  for (const auto& v : kb) kj.push_back(cg::to_json(std::span<const cg::Integer>(v)));
  out["K_basis"] = kj;

  const cg::NonFgReport nonfg = cg::non_fg_flag(data);
  if (!data.all_nu_one()) {
    out["gram"] = nullptr;
    out["classification"] = nullptr;
    out["fg_conjecture_possible"] = nullptr;
    out["boundary_self_intersections"] = nullptr;
    out["all_minus_two"] = nullptr;
    out["non_noetherian_principal"] = nullptr;
    out["invariance_checked_paths"] = cg::Json::array();
    out["note"] = nonfg.citation;
    emit(out);
    return kOk;
  }

  const cg::KGram k = cg::symmetric_form(data);
  const cg::FgReport fg = cg::fg_failure_flag(data);
  const cg::BlowupSurface y = cg::surface_of(data);
  out["gram"] = gram_json(k.gram);
  out["classification"] = cg::to_string(fg.classification);
  out["fg_conjecture_possible"] = fg.fg_conjecture_possible;
  out["fg_rationale"] = fg.rationale;
  out["boundary_self_intersections"] = cg::to_json(std::span<const cg::Integer>(nonfg.boundary_self_intersections));
  out["all_minus_two"] = nonfg.all_minus_two;
  out["non_noetherian_principal"] = nonfg.non_noetherian_principal;
  out["non_fg_citation"] = nonfg.citation;
  cg::Json fan = cg::Json::array();
  for (const auto& r : y.fan.rays) fan.push_back({cg::to_json(r[0]), cg::to_json(r[1])});
  out["fan"] = fan;
  out["period_splitting"] = cg::to_json(cg::period_splitting(data));

  std::vector<std::vector<std::size_t>> paths{{}};
  for (std::size_t i = 0; i < data.size(); ++i) paths.push_back({i});
  for (const auto& m : mutations) paths.push_back(cg::parse_path(m));
  cg::Json checked = cg::Json::array();
  bool all = true;
  for (const auto& p : paths) {
    const cg::InvarianceResult r = cg::invariance_check(data, p);
    all = all && r.invariant;
    cg::Json pj = cg::Json::array();
    for (std::size_t idx : p) pj.push_back(idx + 1);
    checked.push_back(cg::Json{{"path", pj}, {"invariant", r.invariant}, {"gram", gram_json(r.mutated)}});
  }
  out["invariance_checked_paths"] = checked;
  out["invariant"] = all;
  emit(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster-geom: cluster variety mutation and rank-2 toric geometry"};
  app.require_subcommand(1);

  std::string file;
  std::string path;
  auto* mutate = app.add_subcommand("mutate", "mutate a seed along a path and print it");
  mutate->add_option("file", file, "seed JSON file")->required();
  mutate->add_option("--path", path, "comma separated 1-based mutation indices");

  std::size_t depth = 0;
  std::string dedup = "labeled";
  unsigned threads = 1;
  bool list_nodes = false;
  auto* explore = app.add_subcommand("explore", "breadth-first exchange graph search");
  explore->add_option("file", file, "seed JSON file")->required();
  explore->add_option("--depth", depth, "search depth");
  explore->add_option("--dedup", dedup, "labeled or unlabeled")->check(CLI::IsMember({"labeled", "unlabeled"}));
  explore->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  explore->add_flag("--list", list_nodes, "include node and edge lists");

  std::string side = "A";
  std::string q;
  auto* laurent = app.add_subcommand("laurent-check", "check z^q is Laurent on every seed torus to a depth");
  laurent->add_option("file", file, "seed JSON file")->required();
  laurent->add_option("--side", side, "A or X")->check(CLI::IsMember({"A", "X"}));
  laurent->add_option("--q", q, "comma separated exponent vector (default 0)");
  laurent->add_option("--depth", depth, "search depth");
  laurent->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* picard = app.add_subcommand("picard", "invariant factors of coker(p*)");
  picard->add_option("file", file, "seed JSON file")->required();

  std::vector<std::string> mutations;
  auto* rank2 = app.add_subcommand("rank2", "rank-2 toric analysis of {w, nu} data");
  rank2->add_option("file", file, "seed JSON or {w, nu} file")->required();
  rank2->add_option("--mutations", mutations, "extra mutation paths for the invariance check (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*mutate) return cmd_mutate(file, path);
    if (*explore) return cmd_explore(file, depth, dedup, threads, list_nodes);
    if (*laurent) return cmd_laurent(file, side, q, depth, threads);
    if (*picard) return cmd_picard(file);
    if (*rank2) return cmd_rank2(file, mutations);
  } catch (const cg::LaurentViolation& e) {
    std::cerr << "error: " << e.what() << ": " << e.witness() << '\n';
    return kViolation;
  } catch (const cg::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTruncated;
  } catch (const cg::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const cg::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const cg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kInvalid;
}
