#pragma once

// Statistics-violation limits and their propagation from a composite to its
// constituents. A record's epsilon is the deviation 1 - |q| from exact Bose or
// Fermi statistics; for a composite of n constituents
// q_composite = q_constituent^(n^2), so to first order eps_constituent = eps / n^2.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quon/errors.hpp"

namespace quon {

enum class Proximity { near_bose, near_fermi };

inline std::string to_string(Proximity p) { return p == Proximity::near_bose ? "near_bose" : "near_fermi"; }

struct BoundRecord {
  std::string species;
  std::string composite_of;
  std::size_t n_constituents = 1;
  double epsilon = 0.0;
  Proximity proximity = Proximity::near_fermi;
  std::string source;
  bool model_dependent = false;
};

inline constexpr double kLinearizationLimit = 0.1;

/// True when eps / n^2 is an honest stand-in for the exact root.
inline bool first_order_reliable(double epsilon) { return epsilon <= kLinearizationLimit; }

inline double propagate_first_order(double epsilon_composite, std::size_t n) {
  if (n == 0) throw ContractViolation("propagate: n must be positive");
  if (!(epsilon_composite > 0)) throw ContractViolation("propagate: epsilon must be positive");
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  return epsilon_composite / n2;
}

/**
 * Exact inversion of |q_composite| = |q_constituent|^(n^2):
 * eps_c = 1 - (1 - eps)^(1/n^2), via log1p/expm1 to keep full relative
 * precision at tiny eps. For 1 < eps < 2 the composite parameter changed sign;
 * only odd n has a real constituent root, taken as the real odd root.
 */
inline double propagate_exact(double epsilon_composite, std::size_t n) {
  if (n == 0) throw ContractViolation("propagate: n must be positive");
  if (!(epsilon_composite > 0)) throw ContractViolation("propagate: epsilon must be positive");
  if (epsilon_composite >= 2.0) throw ContractViolation("propagate_exact: epsilon >= 2 has no solution in range");
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  if (epsilon_composite == 1.0) return 1.0;
  if (epsilon_composite < 1.0) return -std::expm1(std::log1p(-epsilon_composite) / n2);
  if (n % 2 == 0)
    throw ContractViolation("propagate_exact: 1 - epsilon < 0 has no real root of even order " + std::to_string(n) + "^2");
  return 1.0 + std::pow(epsilon_composite - 1.0, 1.0 / n2);
}

/// Composite direction: eps_composite = 1 - (1 - eps_c)^(n^2), for 0 < eps_c <= 1.
inline double compose_epsilon(double epsilon_constituent, std::size_t n) {
  if (n == 0) throw ContractViolation("compose: n must be positive");
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  return -std::expm1(n2 * std::log1p(-epsilon_constituent));
}

struct IngestDiagnostic {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<BoundRecord> records;
  std::vector<IngestDiagnostic> rejected;
  bool ok() const { return rejected.empty(); }
};

/**
 * Tab-separated limits: species, composite_of, n_constituents, epsilon,
 * proximity, source, and an optional flags column where
 * "model_dependent=true" marks limits that rest on astrophysical models.
 * '#' lines are comments. Bad lines are reported with their line numbers and
 * skipped; good lines are kept.
 */
inline IngestResult ingest_limits(std::istream& in) {
  IngestResult out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) f.push_back(field);
    auto reject = [&](const std::string& why) { out.rejected.push_back({line_no, why}); };
    if (f.size() != 6 && f.size() != 7) {
      reject("expected 6 or 7 tab-separated columns, found " + std::to_string(f.size()));
      continue;
    }
    BoundRecord r;
    r.species = f[0];
    r.composite_of = f[1];
    r.source = f[5];
    if (r.species.empty() || r.composite_of.empty()) {
      reject("empty species or composite_of");
      continue;
    }
    try {
      std::size_t used = 0;
      const long n = std::stol(f[2], &used);
      if (used != f[2].size()) throw std::invalid_argument("");
      if (n < 1) {
        reject("n_constituents must be >= 1");
        continue;
      }
      r.n_constituents = static_cast<std::size_t>(n);
    } catch (const std::exception&) {
      reject("n_constituents '" + f[2] + "' is not an integer");
      continue;
    }
    try {
      std::size_t used = 0;
      r.epsilon = std::stod(f[3], &used);
      if (used != f[3].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      reject("epsilon '" + f[3] + "' is not a number");
      continue;
    }
    if (!(r.epsilon > 0.0 && r.epsilon <= 2.0)) {
      reject("epsilon must satisfy 0 < epsilon <= 2");
      continue;
    }
    if (f[4] == "near_bose") {
      r.proximity = Proximity::near_bose;
    } else if (f[4] == "near_fermi") {
      r.proximity = Proximity::near_fermi;
    } else {
      reject("proximity '" + f[4] + "' must be near_bose or near_fermi");
      continue;
    }
    if (f.size() == 7) {
      std::stringstream flags(f[6]);
      std::string flag;
      bool bad = false;
      while (std::getline(flags, flag, ',')) {
        if (flag == "model_dependent=true")
          r.model_dependent = true;
        else if (flag == "model_dependent=false" || flag.empty())
          continue;
        else
          bad = true;
      }
      if (bad) {
        reject("unknown flag in '" + f[6] + "'");
        continue;
      }
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

inline IngestResult ingest_limits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open limits file '" + path + "'");
  return ingest_limits(in);
}

struct ChainHop {
  std::string species;
  std::optional<std::size_t> n;  // resolved from the records when absent
};

struct ChainLevel {
  std::string species;
  std::size_t n = 0;  // constituents per parent; 0 for the starting level
  double epsilon_first_order = 0.0;
  double epsilon_exact = 0.0;
  Proximity proximity = Proximity::near_fermi;
  std::string note;
};

/// "O16>nucleon:16>quark:3"; the first entry names the measured species.
inline std::vector<ChainHop> parse_chain(const std::string& text) {
  std::vector<ChainHop> hops;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '>')) {
    if (item.empty()) throw ParseError("empty species in chain '" + text + "'");
    ChainHop hop;
    const auto colon = item.find(':');
    hop.species = item.substr(0, colon);
    if (hop.species.empty()) throw ParseError("empty species in chain '" + text + "'");
    if (colon != std::string::npos) {
      const std::string count = item.substr(colon + 1);
      std::size_t used = 0;
      long n = 0;
      try {
        n = std::stol(count, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != count.size() || n < 1) throw ParseError("bad constituent count '" + count + "' in chain");
      hop.n = static_cast<std::size_t>(n);
    }
    hops.push_back(std::move(hop));
  }
  if (hops.empty()) throw ParseError("empty chain");
  if (hops.front().n) throw ParseError("the first chain entry is the measured species and takes no count");
  return hops;
}

/**
 * Walks a composite-to-constituent chain. The first species' epsilon comes
 * from the records (model-dependent ones only when allowed); each later level
 * divides by its constituent count squared, first-order and exactly.
 * Derived constituents are reported near Fermi, with the parity of n noted.
 */
inline std::vector<ChainLevel> derive_chain(const std::vector<BoundRecord>& records, const std::vector<ChainHop>& chain,
                                            bool allow_model_dependent = false) {
  if (chain.empty()) throw ContractViolation("derive_chain: empty chain");
  const BoundRecord* start = nullptr;
  for (const auto& r : records) {
    if (r.species != chain.front().species || (r.model_dependent && !allow_model_dependent)) continue;
    if (start == nullptr || r.epsilon < start->epsilon) start = &r;
  }
  if (start == nullptr) throw ResolutionError("no usable limit record for species '" + chain.front().species + "'");

  std::vector<ChainLevel> levels;
  ChainLevel first;
  first.species = start->species;
  first.epsilon_first_order = first.epsilon_exact = start->epsilon;
  first.proximity = start->proximity;
  first.note = start->source;
  levels.push_back(first);

  for (std::size_t k = 1; k < chain.size(); ++k) {
    const std::string& parent = chain[k - 1].species;
    const ChainHop& hop = chain[k];
    std::size_t n = 0;
    if (hop.n) {
      n = *hop.n;
    } else {
      for (const auto& r : records)
        if (r.species == parent && r.composite_of == hop.species) {
          n = r.n_constituents;
          break;
        }
      if (n == 0)
        throw ResolutionError("cannot resolve how many '" + hop.species + "' make up '" + parent + "'; give it as " +
                              hop.species + ":N");
    }
    const ChainLevel& prev = levels.back();
    ChainLevel level;
    level.species = hop.species;
    level.n = n;
    level.epsilon_first_order = propagate_first_order(prev.epsilon_first_order, n);
    level.epsilon_exact = propagate_exact(prev.epsilon_exact, n);
    level.proximity = Proximity::near_fermi;
    level.note = std::string("n ") + (n % 2 == 0 ? "even" : "odd") + ": " + std::to_string(n) + " near-Fermi constituents form a " +
                 (n % 2 == 0 ? "near-Bose" : "near-Fermi") + " composite";
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace quon
