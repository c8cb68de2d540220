#include "cunningham/report.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cunningham {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

nlohmann::ordered_json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

nlohmann::ordered_json class_json(const HgsClass& c) {
  nlohmann::ordered_json j;
  j["label"] = c.label;
  j["class_size"] = c.class_size;
  j["aut_mm"] = c.aut_mm;
  j["hgs"] = c.hgs;
  if (c.published_aut_mm) j["published_aut_mm"] = *c.published_aut_mm;
  if (c.published_hgs) j["published_hgs"] = *c.published_hgs;
  return j;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md" || s == "markdown") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, md)");
}

std::string emit_table(const ClassTable& table, Format format) { return emit_tables({table}, format); }

std::string emit_tables(const std::vector<ClassTable>& tables, Format format) {
  std::ostringstream os;
  std::size_t classes = 0;
  BigInt transitive = 0;
  for (const auto& t : tables) {
    classes += t.classification.classes.size();
    transitive += t.classification.transitive_subgroups;
  }

  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["chain"] = tables.empty() ? std::vector<std::uint64_t>{} : tables.front().chain.primes;
    nlohmann::ordered_json types = nlohmann::ordered_json::array();
    for (const auto& t : tables) types.push_back(t.type);
    doc["type"] = tables.size() == 1 ? nlohmann::ordered_json(tables.front().type) : types;
    doc["classes"] = nlohmann::ordered_json::array();
    nlohmann::ordered_json by_type = nlohmann::ordered_json::object();
    for (const auto& t : tables) {
      for (const auto& c : t.classification.classes) {
        auto j = class_json(c);
        if (tables.size() > 1) j["type"] = t.type;
        doc["classes"].push_back(std::move(j));
      }
      by_type[t.type] = big(t.classification.total_hgs);
    }
    doc["totals"] = {{"classes", classes}, {"transitive_subgroups", big(transitive)}, {"hgs_by_type", by_type}};
    os << doc.dump(2) << "\n";
    return os.str();
  }

  const bool multi = tables.size() > 1;
  if (format == Format::Csv) {
    os << (multi ? "type," : "") << "structure,groups,aut_mm,hgs\n";
    for (const auto& t : tables)
      for (const auto& c : t.classification.classes)
        os << (multi ? csv_field(t.type) + "," : "") << csv_field(c.label) << "," << c.class_size << "," << c.aut_mm
           << "," << c.hgs << "\n";
    if (classes > 0)
      for (const auto& t : tables)
        os << (multi ? csv_field(t.type) + "," : "") << "total," << t.classification.transitive_subgroups << ",,"
           << t.classification.total_hgs << "\n";
    return os.str();
  }

  os << "|" << (multi ? " Type |" : "") << " Structure | # groups | \\|Aut(M,M')\\| | # HGS |\n";
  os << "|" << (multi ? "---|" : "") << "---|---:|---:|---:|\n";
  for (const auto& t : tables)
    for (const auto& c : t.classification.classes)
      os << "|" << (multi ? " " + md_cell(t.type) + " |" : "") << " " << md_cell(c.label) << " | " << c.class_size
         << " | " << c.aut_mm << " | " << c.hgs << " |\n";
  if (classes > 0) {
    os << "\nClasses: " << classes << ". Transitive subgroups: " << transitive << ".";
    for (const auto& t : tables) os << " HGS of type " << t.type << ": " << t.classification.total_hgs << ".";
    os << "\n";
  }
  return os.str();
}

}  // namespace cunningham
