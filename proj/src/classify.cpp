#include "qx/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace qx {

using json = nlohmann::json;

std::string_view to_string(TilingStatus status) {
  switch (status) {
    case TilingStatus::Tiles: return "Tiles";
    case TilingStatus::NoTiling: return "NoTiling";
    case TilingStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(TileSource source) {
  switch (source) {
    case TileSource::Registry: return "registry";
    case TileSource::Certificate: return "certificate";
    case TileSource::Trivial: return "trivial";
  }
  return "?";
}

bool Registry::contains(u64 n) const { return std::binary_search(dimensions.begin(), dimensions.end(), n); }

ContradictionError::ContradictionError(u64 n, std::string tiling_evidence, CriterionOutcome outcome)
    : std::runtime_error("contradiction at n=" + std::to_string(n) + ": tiling evidence [" + tiling_evidence +
                         "] but criterion " + std::string(to_string(outcome.id)) + " rules it out [" +
                         outcome.witness.to_string() + "]"),
      n_(n),
      outcome_(std::move(outcome)) {}

Registry parse_registry(const std::string& json_text) {
  Registry registry;
  try {
    const json doc = json::parse(json_text);
    registry.k_plus = doc.at("k_plus").get<unsigned>();
    registry.k_minus = doc.at("k_minus").get<unsigned>();
    registry.dimensions = doc.at("dimensions").get<std::vector<u64>>();
    if (doc.contains("source")) registry.source = doc.at("source").get<std::string>();
  } catch (const json::exception& e) {
    throw RegistryError(std::string("malformed registry: ") + e.what());
  }
  std::sort(registry.dimensions.begin(), registry.dimensions.end());
  if (std::adjacent_find(registry.dimensions.begin(), registry.dimensions.end()) != registry.dimensions.end()) {
    throw RegistryError("registry lists a dimension twice");
  }
  if (!registry.dimensions.empty() && registry.dimensions.front() < 1) {
    throw RegistryError("registry dimensions must be at least 1");
  }
  try {
    make_shape(registry.k_plus, registry.k_minus, 1);
  } catch (const std::invalid_argument& e) {
    throw RegistryError(std::string("registry shape: ") + e.what());
  }
  return registry;
}

Registry load_registry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RegistryError("cannot open registry " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_registry(buffer.str());
}

std::string certificate_to_json(const Splitting& splitting) {
  if (!splitting.multipliers.is_interval()) {
    throw CertificateError("only interval multiplier sets can be stored as certificates");
  }
  json doc;
  doc["q"] = splitting.q;
  doc["k_plus"] = *splitting.multipliers.k_plus;
  doc["k_minus"] = *splitting.multipliers.k_minus;
  auto splitters = splitting.splitters;
  std::sort(splitters.begin(), splitters.end());
  doc["splitters"] = splitters;
  return doc.dump();
}

Splitting certificate_from_json(const std::string& line) {
  try {
    const json doc = json::parse(line);
    const auto q = doc.at("q").get<u64>();
    const auto k_plus = doc.at("k_plus").get<unsigned>();
    const auto k_minus = doc.at("k_minus").get<unsigned>();
    auto splitters = doc.at("splitters").get<std::vector<u64>>();
    make_shape(k_plus, k_minus, 1);
    return make_splitting(interval_multipliers(k_plus, k_minus, q), std::move(splitters));
  } catch (const json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<Splitting> load_certificates(const std::filesystem::path& path) {
  std::vector<Splitting> out;
  std::ifstream in(path);
  if (!in) {
    if (std::filesystem::exists(path)) throw CertificateError("cannot read " + path.string());
    return out;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
    Splitting s;
    try {
      s = certificate_from_json(line);
      const Verification check = verify_splitting(s);
      if (!check) throw CertificateError(check.diagnostic);
    } catch (const std::exception& e) {
      throw CertificateError(where + e.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool store_certificate(const std::filesystem::path& path, const Splitting& splitting) {
  const Verification check = verify_splitting(splitting);
  if (!check) throw CertificateError("refusing to store unverified splitting: " + check.diagnostic);
  const std::string line = certificate_to_json(splitting);
  for (const Splitting& existing : load_certificates(path)) {
    if (certificate_to_json(existing) == line) return false;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw CertificateError("cannot append to " + path.string());
  out << line << '\n';
  return true;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("QX_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Verdict> classify_range(unsigned k_plus, unsigned k_minus, u64 n_max,
                                    const std::optional<Registry>& registry,
                                    const std::vector<Splitting>& certificates, const ClassifyOptions& options) {
  make_shape(k_plus, k_minus, 1);
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (registry && (registry->k_plus != k_plus || registry->k_minus != k_minus)) {
    throw RegistryError("registry is for shape (" + std::to_string(registry->k_plus) + "," +
                        std::to_string(registry->k_minus) + ")");
  }
  {
    auto sorted_order = options.order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != std::vector<CriterionId>(kCriterionOrder.begin(), kCriterionOrder.end())) {
      throw std::invalid_argument("criterion order must list every criterion exactly once");
    }
  }
  auto enabled = [&](CriterionId id) {
    return std::find(options.enabled.begin(), options.enabled.end(), id) != options.enabled.end();
  };

  const u64 span = u64{k_plus} + k_minus;
  std::map<u64, const Splitting*> certified;
  for (const Splitting& s : certificates) {
    const auto& m = s.multipliers;
    if (!m.is_interval() || *m.k_plus != k_plus || *m.k_minus != k_minus) continue;
    if ((s.q - 1) % span != 0 || !verify_splitting(s)) {
      throw CertificateError("certificate for q=" + std::to_string(s.q) + " does not verify");
    }
    certified.emplace((s.q - 1) / span, &s);
  }

  // Everything except the divisor recursion is independent of other
  // dimensions and can be evaluated in parallel.
  std::vector<std::vector<CriterionOutcome>> independent(n_max);
  {
    std::atomic<u64> next{0};
    auto worker = [&] {
      for (u64 i = next++; i < n_max; i = next++) {
        const QuasiCrossShape shape{k_plus, k_minus, i + 1};
        for (CriterionId id : kCriterionOrder) {
          if (id == CriterionId::Divisors || !enabled(id)) continue;
          independent[i].push_back(check(id, shape));
        }
      }
    };
    const unsigned threads =
        static_cast<unsigned>(std::min<u64>(options.threads ? options.threads : default_thread_count(), n_max));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<Verdict> verdicts;
  verdicts.reserve(n_max);
  const VerdictOracle oracle = [&](u64 sub) -> std::optional<TilingStatus> {
    if (sub < 1 || sub > verdicts.size()) return std::nullopt;
    return verdicts[sub - 1].status;
  };

  for (u64 n = 1; n <= n_max; ++n) {
    const QuasiCrossShape shape{k_plus, k_minus, n};
    Verdict v;
    v.n = n;
    v.q = shape.q();
    v.outcomes = std::move(independent[n - 1]);
    if (enabled(CriterionId::Divisors)) v.outcomes.push_back(check_divisors(shape, oracle));

    if (n == 1) {
      v.source = TileSource::Trivial;
    } else if (registry && registry->contains(n)) {
      v.source = TileSource::Registry;
    } else if (certified.contains(n)) {
      v.source = TileSource::Certificate;
    }

    const CriterionOutcome* first = nullptr;
    for (CriterionId id : options.order) {
      auto it = std::find_if(v.outcomes.begin(), v.outcomes.end(),
                             [&](const CriterionOutcome& o) { return o.id == id && o.ruled_out(); });
      if (it != v.outcomes.end()) {
        first = &*it;
        break;
      }
    }

    if (v.source) {
      if (first) {
        std::string evidence(to_string(*v.source));
        if (*v.source == TileSource::Registry && !registry->source.empty()) evidence += ": " + registry->source;
        if (auto it = certified.find(n); it != certified.end()) evidence += " " + certificate_to_json(*it->second);
        throw ContradictionError(n, evidence, *first);
      }
      v.status = TilingStatus::Tiles;
    } else if (first) {
      v.status = TilingStatus::NoTiling;
      v.criterion = first->id;
      v.witness = first->witness;
    } else {
      v.status = TilingStatus::Unknown;
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

}  // namespace qx
