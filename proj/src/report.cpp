#include "qx/report.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace qx {

namespace {

using json = nlohmann::json;

struct Row {
  std::string n, q, status, criterion, witness;
};

Row make_row(const Verdict& v) {
  Row row{std::to_string(v.n), std::to_string(v.q), std::string(to_string(v.status)), "", ""};
  if (v.criterion) row.criterion = to_string(*v.criterion);
  if (v.source) {
    row.witness = "source=" + std::string(to_string(*v.source));
  } else {
    row.witness = v.witness.to_string();
  }
  return row;
}

json witness_json(const Witness& w) {
  json obj = json::object();
  for (const auto& [k, value] : w.values) obj[k] = value;
  return obj;
}

json verdict_json(const Verdict& v) {
  json obj;
  obj["n"] = v.n;
  obj["q"] = v.q;
  obj["status"] = to_string(v.status);
  obj["criterion"] = v.criterion ? json(to_string(*v.criterion)) : json(nullptr);
  obj["witness"] = witness_json(v.witness);
  if (v.source) obj["source"] = to_string(*v.source);
  return obj;
}

void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::string join(const std::vector<u64>& values) {
  std::string out;
  for (u64 v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

Summary summarize(unsigned k_plus, unsigned k_minus, std::span<const Verdict> verdicts) {
  if (verdicts.empty()) throw std::invalid_argument("summarize: no verdicts");
  Summary s;
  s.k_plus = k_plus;
  s.k_minus = k_minus;
  s.n_max = verdicts.back().n;
  std::map<CriterionId, u64> firings, attributed;
  std::map<std::pair<u64, u64>, ResidueClassStat> classes;
  for (u64 m : kSummaryModuli) {
    for (u64 r = 0; r < m; ++r) classes[{m, r}] = {m, r, 0, 0};
  }
  for (const Verdict& v : verdicts) {
    switch (v.status) {
      case TilingStatus::Tiles: ++s.tiles; break;
      case TilingStatus::NoTiling: ++s.no_tiling; break;
      case TilingStatus::Unknown:
        ++s.unknown;
        s.unknown_dimensions.push_back(v.n);
        break;
    }
    for (const auto& o : v.outcomes) {
      if (o.ruled_out()) ++firings[o.id];
    }
    if (v.criterion) ++attributed[*v.criterion];
    if (v.n >= 2) {
      for (u64 m : kSummaryModuli) {
        auto& c = classes[{m, v.n % m}];
        ++c.total;
        if (v.status == TilingStatus::NoTiling) ++c.ruled_out;
      }
    }
  }
  for (CriterionId id : kCriterionOrder) {
    s.firings.emplace_back(id, firings[id]);
    s.attributed.emplace_back(id, attributed[id]);
  }
  for (const auto& [key, stat] : classes) s.residue_classes.push_back(stat);
  return s;
}

void write_verdicts(std::ostream& out, std::span<const Verdict> verdicts, Format format) {
  switch (format) {
    case Format::Csv:
      out << "n,q,status,criterion,witness\n";
      for (const Verdict& v : verdicts) {
        const Row r = make_row(v);
        out << r.n << ',' << r.q << ',' << r.status << ',' << r.criterion << ',' << r.witness << '\n';
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const Verdict& v : verdicts) arr.push_back(verdict_json(v));
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Text: {
      std::vector<std::vector<std::string>> rows{{"n", "q", "status", "criterion", "witness"}};
      for (const Verdict& v : verdicts) {
        Row r = make_row(v);
        rows.push_back({r.n, r.q, r.status, r.criterion, r.witness});
      }
      write_table(out, rows);
      break;
    }
  }
}

void write_summary(std::ostream& out, const Summary& s, Format format) {
  if (format == Format::Json) {
    json doc;
    doc["k_plus"] = s.k_plus;
    doc["k_minus"] = s.k_minus;
    doc["n_max"] = s.n_max;
    doc["counts"] = {{"Tiles", s.tiles}, {"NoTiling", s.no_tiling}, {"Unknown", s.unknown}};
    json firings = json::object(), attributed = json::object();
    for (const auto& [id, count] : s.firings) firings[std::string(to_string(id))] = count;
    for (const auto& [id, count] : s.attributed) attributed[std::string(to_string(id))] = count;
    doc["firings"] = firings;
    doc["attributed"] = attributed;
    json classes = json::array();
    for (const auto& c : s.residue_classes) {
      classes.push_back({{"modulus", c.modulus}, {"residue", c.residue}, {"total", c.total}, {"ruled_out", c.ruled_out}});
    }
    doc["residue_classes"] = classes;
    doc["unknown"] = s.unknown_dimensions;
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == Format::Csv) {
    out << "section,key,value\n";
    out << "count,Tiles," << s.tiles << "\ncount,NoTiling," << s.no_tiling << "\ncount,Unknown," << s.unknown << '\n';
    for (const auto& [id, count] : s.firings) out << "firings," << to_string(id) << ',' << count << '\n';
    for (const auto& [id, count] : s.attributed) out << "attributed," << to_string(id) << ',' << count << '\n';
    for (const auto& c : s.residue_classes) {
      out << "ruled_out_mod_" << c.modulus << ',' << c.residue << ',' << c.ruled_out << '/' << c.total << '\n';
    }
    return;
  }

  out << "shape (" << s.k_plus << "," << s.k_minus << "), n = 1.." << s.n_max << '\n';
  out << "Tiles " << s.tiles << ", NoTiling " << s.no_tiling << ", Unknown " << s.unknown << "\n\n";
  std::vector<std::vector<std::string>> rows{{"criterion", "fires", "first"}};
  for (std::size_t i = 0; i < s.firings.size(); ++i) {
    rows.push_back({std::string(to_string(s.firings[i].first)), std::to_string(s.firings[i].second),
                    std::to_string(s.attributed[i].second)});
  }
  write_table(out, rows);
  out << '\n';
  for (u64 m : kSummaryModuli) {
    std::vector<u64> survivors;
    for (const auto& c : s.residue_classes) {
      if (c.modulus != m) continue;
      if (c.total > 0 && c.ruled_out < c.total) survivors.push_back(c.residue);
      if (m == kSummaryModuli.front()) {
        out << "n = " << c.residue << " (mod " << m << "): ruled out " << c.ruled_out << " of " << c.total << '\n';
      }
    }
    out << "classes mod " << m << " with survivors: " << (survivors.empty() ? "none" : join(survivors)) << '\n';
  }
  out << "unknown: " << (s.unknown_dimensions.empty() ? "none" : join(s.unknown_dimensions)) << '\n';
}

void write_check(std::ostream& out, const Verdict& v, Format format) {
  if (format == Format::Json) {
    json doc = verdict_json(v);
    json outcomes = json::array();
    for (const auto& o : v.outcomes) {
      outcomes.push_back({{"criterion", to_string(o.id)}, {"status", to_string(o.status)}, {"witness", witness_json(o.witness)}});
    }
    doc["outcomes"] = outcomes;
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == Format::Csv) {
    out << "criterion,status,witness\n";
    for (const auto& o : v.outcomes) out << to_string(o.id) << ',' << to_string(o.status) << ',' << o.witness.to_string() << '\n';
    const Row r = make_row(v);
    out << "verdict," << r.status << ',' << r.witness << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"criterion", "status", "witness"}};
  for (const auto& o : v.outcomes) {
    rows.push_back({std::string(to_string(o.id)), std::string(to_string(o.status)), o.witness.to_string()});
  }
  write_table(out, rows);
  const Row r = make_row(v);
  out << "\nn=" << r.n << " q=" << r.q << ": " << r.status;
  if (!r.criterion.empty()) out << " by " << r.criterion;
  if (!r.witness.empty()) out << " (" << r.witness << ")";
  out << '\n';
}

}  // namespace qx
