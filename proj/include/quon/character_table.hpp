#pragma once

/**
 * Bundled character tables of S_n for 2 <= n <= 4.
 *
 * The tables ship as plain text (data/character_tables.tsv, mirrored verbatim
 * in kBundledCharacterTables below) and are checked against the row and
 * column orthogonality relations, plus the class sizes counted from S_n
 * itself, every time they are parsed.
 */

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quon/errors.hpp"
#include "quon/permutation.hpp"

namespace quon {

struct ConjugacyClass {
  std::vector<int> cycle_type;  // descending
  std::size_t size = 0;
};

struct Irrep {
  std::string label;
  std::vector<long> characters;  // one value per class, table order
  long dimension() const { return characters.front(); }
};

struct CharacterTable {
  std::size_t n = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<Irrep> irreps;

  std::size_t class_index(const std::vector<int>& cycle_type) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c].cycle_type == cycle_type) return c;
    throw ContractViolation("cycle type not present in the S_" + std::to_string(n) + " table");
  }

  long character(const Irrep& irrep, const Permutation& p) const {
    return irrep.characters[class_index(p.cycle_type())];
  }
};

inline constexpr std::string_view kBundledCharacterTables = R"TSV(
# Character tables of the symmetric groups S_2, S_3, S_4.
# Each block opens with "n<TAB>degree" followed by a header row naming the
# columns: cycle type, class size, then one column per irreducible
# representation. Cycle types list cycle lengths in descending order joined
# by '.', so "2.1.1" is a transposition in S_4. The first data row is the
# identity class; its character values are the irrep dimensions.
n	2
cycle_type	class_size	trivial	sign
1.1	1	1	1
2	1	1	-1

n	3
cycle_type	class_size	trivial	sign	standard
1.1.1	1	1	1	2
2.1	3	1	-1	0
3	2	1	1	-1

n	4
cycle_type	class_size	trivial	sign	standard	standard_sign	two_dim
1.1.1.1	1	1	1	3	3	2
2.1.1	6	1	-1	1	-1	0
2.2	3	1	1	-1	-1	2
3.1	8	1	1	0	0	-1
4	6	1	-1	-1	1	0
)TSV";

namespace detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '\t')) fields.push_back(field);
  return fields;
}

inline std::vector<int> parse_cycle_type(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v <= 0) throw ParseError("bad cycle type '" + text + "'");
    parts.push_back(v);
  }
  return parts;
}

inline long parse_long(const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParseError("bad integer '" + text + "'");
  return v;
}

}  // namespace detail

/// Throws ParseError unless the table is square, its class sizes match S_n,
/// and both orthogonality relations hold exactly.
inline void validate_character_table(const CharacterTable& t) {
  const std::string where = "character table S_" + std::to_string(t.n) + ": ";
  if (t.irreps.size() != t.classes.size()) throw ParseError(where + "number of irreps differs from number of classes");

  std::map<std::vector<int>, std::size_t> counted;
  for (const auto& p : enumerate_permutations(t.n)) ++counted[p.cycle_type()];
  if (counted.size() != t.classes.size()) throw ParseError(where + "wrong number of conjugacy classes");
  for (const auto& c : t.classes) {
    auto it = counted.find(c.cycle_type);
    if (it == counted.end() || it->second != c.size) throw ParseError(where + "class size mismatch");
  }
  if (t.classes.front().cycle_type != std::vector<int>(t.n, 1)) throw ParseError(where + "first class must be the identity");

  const long order = static_cast<long>(factorial(t.n));
  for (std::size_t a = 0; a < t.irreps.size(); ++a) {
    if (t.irreps[a].characters.size() != t.classes.size()) throw ParseError(where + "ragged row");
    for (std::size_t b = 0; b < t.irreps.size(); ++b) {
      long sum = 0;
      for (std::size_t c = 0; c < t.classes.size(); ++c)
        sum += static_cast<long>(t.classes[c].size) * t.irreps[a].characters[c] * t.irreps[b].characters[c];
      if (sum != (a == b ? order : 0)) throw ParseError(where + "row orthogonality fails for " + t.irreps[a].label + "/" + t.irreps[b].label);
    }
  }
  // Column relation: sum over irreps of chi(c) chi(c') = delta(c,c') n!/|c|.
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    for (std::size_t d = 0; d < t.classes.size(); ++d) {
      long sum = 0;
      for (const auto& irrep : t.irreps) sum += irrep.characters[c] * irrep.characters[d];
      const long expected = c == d ? order / static_cast<long>(t.classes[c].size) : 0;
      if (sum != expected) throw ParseError(where + "column orthogonality fails");
    }
  }
}

/// Parses every table block in the text and validates each one.
inline std::map<std::size_t, CharacterTable> parse_character_tables(std::istream& in) {
  std::map<std::size_t, CharacterTable> tables;
  CharacterTable* current = nullptr;
  bool expect_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = detail::split_tabs(line);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      if (fields.front() == "n") {
        if (fields.size() != 2) throw ParseError("expected 'n<TAB>degree'");
        const long n = detail::parse_long(fields[1]);
        if (n < 1) throw ParseError("degree must be positive");
        current = &tables[static_cast<std::size_t>(n)];
        *current = CharacterTable{};
        current->n = static_cast<std::size_t>(n);
        expect_header = true;
        continue;
      }
      if (current == nullptr) throw ParseError("data before the first 'n' block");
      if (expect_header) {
        if (fields.size() < 3 || fields[0] != "cycle_type" || fields[1] != "class_size")
          throw ParseError("expected 'cycle_type<TAB>class_size<TAB>irreps...'");
        for (std::size_t k = 2; k < fields.size(); ++k) current->irreps.push_back(Irrep{fields[k], {}});
        expect_header = false;
        continue;
      }
      if (fields.size() != current->irreps.size() + 2) throw ParseError("wrong column count");
      ConjugacyClass cls{detail::parse_cycle_type(fields[0]), 0};
      const long size = detail::parse_long(fields[1]);
      if (size <= 0) throw ParseError("class size must be positive");
      cls.size = static_cast<std::size_t>(size);
      current->classes.push_back(std::move(cls));
      for (std::size_t k = 0; k < current->irreps.size(); ++k)
        current->irreps[k].characters.push_back(detail::parse_long(fields[k + 2]));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  for (const auto& [n, table] : tables) {
    if (table.classes.empty()) throw ParseError("character table S_" + std::to_string(n) + " has no rows");
    validate_character_table(table);
  }
  return tables;
}

inline std::map<std::size_t, CharacterTable> load_character_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open character table file '" + path + "'");
  return parse_character_tables(in);
}

/// Bundled table for 2 <= n <= 4; Unsupported otherwise.
inline const CharacterTable& character_table(std::size_t n) {
  static const std::map<std::size_t, CharacterTable> tables = [] {
    std::istringstream in{std::string(kBundledCharacterTables)};
    return parse_character_tables(in);
  }();
  auto it = tables.find(n);
  if (n < 2 || it == tables.end())
    throw Unsupported("character tables are bundled for 2 <= n <= 4 only, got n = " + std::to_string(n));
  return it->second;
}

}  // namespace quon
