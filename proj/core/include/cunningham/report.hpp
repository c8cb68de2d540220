#pragma once

#include <string>
#include <vector>

#include "cunningham/arith.hpp"
#include "cunningham/classify.hpp"

namespace cunningham {

enum class Format { Json, Csv, Markdown };

// Parses "json", "csv", "md" or "markdown"; throws std::invalid_argument.
Format parse_format(const std::string& s);

struct ClassTable {
  Chain chain;
  std::string type;  // shape id, e.g. "I={2}"
  std::string type_label;
  Classification classification;
};

// Rows (label, # groups, |Aut(M,M')|, # HGS) plus a totals record. An empty
// class list yields a header-only document.
std::string emit_table(const ClassTable& table, Format format);

// One document covering several types of the same chain; totals.hgs_by_type
// carries one entry per type.
std::string emit_tables(const std::vector<ClassTable>& tables, Format format);

}  // namespace cunningham
