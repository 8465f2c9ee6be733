#include "qx/cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qx/classify.hpp"
#include "qx/report.hpp"
#include "qx/search.hpp"

namespace qx::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeFlags {
  unsigned k_plus = 0;
  unsigned k_minus = 0;
};

struct RunFlags {
  ShapeFlags shape;
  u64 max_n = 0;
  u64 n = 0;
  u64 q = 0;
  std::string registry;
  std::string certificates;
  std::string format = "text";
  std::string criteria = "all";
  unsigned threads = 0;
  u64 node_budget = 10'000'000;
  u64 time_limit_ms = 0;
  bool no_store = false;
  bool descending = false;
  bool count = false;
  bool basis = false;
  std::vector<u64> splitters;
};

void add_shape(CLI::App* cmd, ShapeFlags& shape, bool required = true) {
  auto* kp = cmd->add_option("--kplus", shape.k_plus, "Arm length in the positive direction");
  auto* km = cmd->add_option("--kminus", shape.k_minus, "Arm length in the negative direction");
  if (required) {
    kp->required();
    km->required();
  }
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

Format parse_format(const std::string& name) {
  auto f = format_from_string(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

QuasiCrossShape shape_at(const ShapeFlags& s, u64 n) {
  try {
    return make_shape(s.k_plus, s.k_minus, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<CriterionId> parse_criteria(const std::string& spec) {
  if (spec == "all") return {kCriterionOrder.begin(), kCriterionOrder.end()};
  std::vector<CriterionId> out;
  if (spec == "none") return out;
  std::stringstream in(spec);
  std::string name;
  while (std::getline(in, name, ',')) {
    auto id = criterion_from_string(name);
    if (!id) throw UsageError("unknown criterion '" + name + "'");
    out.push_back(*id);
  }
  return out;
}

std::optional<Registry> registry_from(const RunFlags& f) {
  if (f.registry.empty()) return std::nullopt;
  try {
    return load_registry(f.registry);
  } catch (const RegistryError& e) {
    throw UsageError(e.what());
  }
}

std::vector<Splitting> certificates_from(const RunFlags& f) {
  if (f.certificates.empty()) return {};
  return load_certificates(f.certificates);
}

std::vector<Verdict> classify_from(const RunFlags& f, u64 n_max) {
  shape_at(f.shape, 1);
  ClassifyOptions options;
  options.enabled = parse_criteria(f.criteria);
  options.threads = f.threads;
  const auto registry = registry_from(f);
  if (registry && (registry->k_plus != f.shape.k_plus || registry->k_minus != f.shape.k_minus)) {
    throw UsageError("registry " + f.registry + " is for shape (" + std::to_string(registry->k_plus) + "," +
                     std::to_string(registry->k_minus) + ")");
  }
  return classify_range(f.shape.k_plus, f.shape.k_minus, n_max, registry, certificates_from(f), options);
}

std::string join(const std::vector<u64>& values) {
  std::string out;
  for (u64 v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

int do_search(const RunFlags& f, std::ostream& out, std::ostream& err) {
  if ((f.q == 0) == (f.n == 0)) throw UsageError("search needs exactly one of --q or --n");
  shape_at(f.shape, 1);
  const u64 q = f.q ? f.q : shape_at(f.shape, f.n).q();
  if (q <= u64{f.shape.k_plus} + f.shape.k_minus) throw UsageError("--q is too small for this shape");
  const MultiplierSet multipliers = interval_multipliers(f.shape.k_plus, f.shape.k_minus, q);
  SearchBudget budget;
  budget.node_limit = f.node_budget;
  if (f.time_limit_ms) budget.wall_limit = std::chrono::milliseconds(f.time_limit_ms);
  const Format format = parse_format(f.format);

  if (f.count) {
    const CountOutcome c = count_splittings(q, multipliers, budget);
    err << "elapsed " << std::chrono::duration_cast<std::chrono::milliseconds>(c.stats.elapsed).count() << " ms\n";
    if (format == Format::Json) {
      nlohmann::json doc{{"q", q}, {"k_plus", f.shape.k_plus}, {"k_minus", f.shape.k_minus}, {"count", c.count},
                         {"complete", c.complete}, {"nodes", c.stats.nodes}};
      out << doc.dump(2) << '\n';
    } else {
      out << "q=" << q << " shape=(" << f.shape.k_plus << "," << f.shape.k_minus << "): " << c.count
          << " splitter sets" << (c.complete ? "" : " (incomplete, budget exhausted)") << '\n';
      out << "nodes: " << c.stats.nodes << '\n';
    }
    if (!c.diagnostic.empty()) err << c.diagnostic << '\n';
    return kExitOk;
  }

  const SearchOutcome result = find_splitting(q, multipliers, budget, f.descending ? BranchOrder::Descending : BranchOrder::Ascending);
  err << "elapsed " << std::chrono::duration_cast<std::chrono::milliseconds>(result.stats.elapsed).count() << " ms\n";
  std::string stored;
  if (result.splitting && !f.no_store) {
    const std::string path = f.certificates.empty() ? "qx_certificates.jsonl" : f.certificates;
    stored = store_certificate(path, *result.splitting) ? "appended to " + path : "already in " + path;
  }
  if (format == Format::Json) {
    nlohmann::json doc{{"q", q},
                       {"k_plus", f.shape.k_plus},
                       {"k_minus", f.shape.k_minus},
                       {"status", to_string(result.status)},
                       {"nodes", result.stats.nodes}};
    if (result.splitting) doc["splitters"] = result.splitting->splitters;
    if (!result.diagnostic.empty()) doc["diagnostic"] = result.diagnostic;
    out << doc.dump(2) << '\n';
  } else {
    out << "q=" << q << " shape=(" << f.shape.k_plus << "," << f.shape.k_minus << "): " << to_string(result.status)
        << '\n';
    if (result.splitting) {
      out << "splitters: " << join(result.splitting->splitters) << '\n';
      out << "verified: yes\n";
    }
    out << "nodes: " << result.stats.nodes << '\n';
    if (!result.diagnostic.empty()) out << "note: " << result.diagnostic << '\n';
  }
  if (!stored.empty()) err << stored << '\n';
  return kExitOk;
}

void print_basis(const Splitting& s, std::ostream& out) {
  const LatticeBasis basis = lattice_basis(s);
  out << "basis (rows generate the tiling lattice):\n";
  for (const auto& row : basis.rows) {
    out << " ";
    for (i64 x : row) out << ' ' << x;
    out << '\n';
  }
}

int do_verify(const RunFlags& f, std::ostream& out, std::ostream& err) {
  std::vector<Splitting> candidates;
  if (!f.certificates.empty()) {
    if (f.q || !f.splitters.empty()) throw UsageError("use either --certificates or --q/--splitters");
    try {
      candidates = load_certificates(f.certificates);
    } catch (const CertificateError& e) {
      err << "verification failed: " << e.what() << '\n';
      return kExitFailure;
    }
  } else {
    if (!f.q || f.splitters.empty()) throw UsageError("verify needs --certificates or --q with --splitters");
    shape_at(f.shape, 1);
    if (f.q <= u64{f.shape.k_plus} + f.shape.k_minus) throw UsageError("--q is too small for this shape");
    candidates.push_back(make_splitting(interval_multipliers(f.shape.k_plus, f.shape.k_minus, f.q), f.splitters));
  }
  bool all_ok = true;
  for (const Splitting& s : candidates) {
    Verification check;
    try {
      check = verify_splitting(s);
    } catch (const StructuralError& e) {
      check.diagnostic = e.what();
    }
    out << (check.ok ? "ok" : "FAIL") << " q=" << s.q << " shape=(" << s.multipliers.k_plus.value_or(0) << ","
        << s.multipliers.k_minus.value_or(0) << ") splitters=" << join(s.splitters);
    if (!check.ok) out << ": " << check.diagnostic;
    out << '\n';
    if (check.ok && f.basis) print_basis(s, out);
    all_ok = all_ok && check.ok;
  }
  if (candidates.empty()) out << "no certificates\n";
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice tilings by quasi-crosses: non-existence criteria, splitting search and classification", "qx"};
  app.require_subcommand(1);
  RunFlags f;

  auto* classify = app.add_subcommand("classify", "Classify dimensions 1..max-n for one shape");
  add_shape(classify, f.shape);
  classify->add_option("--max-n", f.max_n, "Largest dimension")->required()->check(CLI::PositiveNumber);
  classify->add_option("--registry", f.registry, "Known-tilings registry (JSON)");
  classify->add_option("--certificates", f.certificates, "Certificate store (JSON lines)");
  classify->add_option("--criteria", f.criteria, "Comma-separated criteria, 'all' or 'none'");
  classify->add_option("--threads", f.threads, "Worker threads (default QX_THREADS or all cores)");
  add_format(classify, f.format);

  auto* check = app.add_subcommand("check", "Evaluate every criterion at one dimension");
  add_shape(check, f.shape);
  check->add_option("--n", f.n, "Dimension")->required()->check(CLI::PositiveNumber);
  check->add_option("--registry", f.registry, "Known-tilings registry (JSON)");
  check->add_option("--certificates", f.certificates, "Certificate store (JSON lines)");
  check->add_option("--threads", f.threads, "Worker threads");
  add_format(check, f.format);

  auto* search = app.add_subcommand("search", "Search for a splitting of Z_q by [-kminus, kplus]*");
  add_shape(search, f.shape);
  search->add_option("--q", f.q, "Group order");
  search->add_option("--n", f.n, "Dimension (q = n(kplus+kminus)+1)");
  search->add_option("--node-budget", f.node_budget, "Maximum search nodes");
  search->add_option("--time-limit-ms", f.time_limit_ms, "Advisory wall-clock limit");
  search->add_option("--certificates", f.certificates, "Certificate store to append to");
  search->add_flag("--no-store", f.no_store, "Do not store a found splitting");
  search->add_flag("--descending", f.descending, "Try candidate splitters in descending order");
  search->add_flag("--count", f.count, "Count all splitter sets instead of stopping at the first");
  add_format(search, f.format);

  auto* verify = app.add_subcommand("verify", "Verify certificates or an explicit splitter set");
  add_shape(verify, f.shape, false);
  verify->add_option("--certificates", f.certificates, "Certificate store to verify");
  verify->add_option("--q", f.q, "Group order");
  verify->add_option("--splitters", f.splitters, "Splitter set")->delimiter(',');
  verify->add_flag("--basis", f.basis, "Print a basis of the tiling lattice");

  auto* summarize_cmd = app.add_subcommand("summarize", "Summary statistics of a classification run");
  add_shape(summarize_cmd, f.shape);
  summarize_cmd->add_option("--max-n", f.max_n, "Largest dimension")->required()->check(CLI::PositiveNumber);
  summarize_cmd->add_option("--registry", f.registry, "Known-tilings registry (JSON)");
  summarize_cmd->add_option("--certificates", f.certificates, "Certificate store (JSON lines)");
  summarize_cmd->add_option("--criteria", f.criteria, "Comma-separated criteria, 'all' or 'none'");
  summarize_cmd->add_option("--threads", f.threads, "Worker threads");
  add_format(summarize_cmd, f.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (classify->parsed()) {
      const auto verdicts = classify_from(f, f.max_n);
      write_verdicts(out, verdicts, parse_format(f.format));
    } else if (check->parsed()) {
      const auto verdicts = classify_from(f, f.n);
      write_check(out, verdicts.back(), parse_format(f.format));
    } else if (search->parsed()) {
      return do_search(f, out, err);
    } else if (verify->parsed()) {
      return do_verify(f, out, err);
    } else if (summarize_cmd->parsed()) {
      const auto verdicts = classify_from(f, f.max_n);
      write_summary(out, summarize(f.shape.k_plus, f.shape.k_minus, verdicts), parse_format(f.format));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const ContradictionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace qx::cli
