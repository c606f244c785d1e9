#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process; tools/quon.cpp only forwards argv.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quon/quon.hpp"

namespace quon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitContract = 1;
inline constexpr int kExitParse = 2;

namespace detail {

inline std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline RepCoefficients resolve_rep(const std::string& rep, std::size_t n) {
  if (rep == "sym" || rep == "symmetric") return preset_rep(n, RepKind::symmetric);
  if (rep == "antisym" || rep == "antisymmetric") return preset_rep(n, RepKind::antisymmetric);
  RepCoefficients loaded = load_rep(rep);
  if (loaded.n != n)
    throw ContractViolation("representation file '" + rep + "' is over S_" + std::to_string(loaded.n) + ", expected S_" +
                            std::to_string(n));
  return loaded;
}

inline std::vector<ModeLabel> parse_labels(const std::string& text) { return parse_word(text).labels; }

}  // namespace detail

/// Runs one command; args exclude the program name. Returns the exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quon algebra: scalar products, composite statistics, statistics-violation bounds", "quon"};
  app.require_subcommand(1);
  std::size_t workers = 1;
  app.add_option("--workers", workers, "Threads for parallel enumeration (output does not depend on it)")->check(CLI::PositiveNumber);

  std::string sp_left, sp_right;
  bool sp_oracle = false;
  auto* sp = app.add_subcommand("sp", "Scalar product of two creation-operator words");
  sp->add_option("--left", sp_left, "Comma-separated labels, e.g. k1,k2 or p1:1,p1:2")->required();
  sp->add_option("--right", sp_right, "Comma-separated labels")->required();
  sp->add_flag("--oracle", sp_oracle, "Use brute-force enumeration of all n! matchings");

  std::string qp_file;
  bool qp_oracle = false;
  auto* qperm = app.add_subcommand("qperm", "q-permanent of a 0/1 matrix");
  qperm->add_option("--matrix", qp_file, "Whitespace-separated 0/1 rows")->required();
  qperm->add_flag("--oracle", qp_oracle, "Use brute-force enumeration");

  std::size_t norm_n = 0;
  std::string norm_rep, norm_labels;
  bool norm_show = false;
  auto* norm = app.add_subcommand("norm", "Normalization polynomial P_r(q)");
  norm->add_option("--n", norm_n, "Number of constituents")->required()->check(CLI::PositiveNumber);
  norm->add_option("--rep", norm_rep, "sym, antisym, or a coefficient file")->required();
  norm->add_option("--labels", norm_labels, "Distinct labels (default 1..n)");
  norm->add_flag("--show-rep", norm_show, "Also print the coefficients c(P) with inversion numbers");

  std::string gram_labels;
  std::optional<double> gram_q;
  bool gram_psd = false;
  std::optional<double> gram_tol;
  auto* gramcmd = app.add_subcommand("gram", "Gram matrix of all orderings of the given labels");
  gramcmd->add_option("--labels", gram_labels, "Comma-separated labels")->required();
  gramcmd->add_option("--q", gram_q, "Evaluation point");
  gramcmd->add_flag("--check-psd", gram_psd, "Report the minimum eigenvalue at --q");
  gramcmd->add_option("--tolerance", gram_tol, "PSD tolerance (default 1e-10 * dimension)");

  std::size_t w_n = 0;
  double w_q = 0.0;
  bool w_table = false;
  auto* weights = app.add_subcommand("weights", "Weights of the S_n irreps in the n-quon state");
  weights->add_option("--n", w_n, "2, 3 or 4")->required();
  weights->add_option("--q", w_q, "Deformation parameter in (-1, 1)")->required();
  weights->add_flag("--table", w_table, "Also print the bundled character table");

  std::size_t c_n = 0;
  std::string c_rep;
  bool c_overlap = false, c_oracle = false;
  auto* composite = app.add_subcommand("composite", "Two-composite scalar product and effective exchange exponent");
  composite->add_option("--n", c_n, "Constituents per composite")->required()->check(CLI::PositiveNumber);
  composite->add_option("--rep", c_rep, "sym, antisym, or a coefficient file")->required();
  composite->add_flag("--overlap", c_overlap, "Place all composites on one coordinate and report the cross term");
  composite->add_flag("--oracle", c_oracle, "Use full enumeration of the (2n)! matchings");

  std::size_t weo_n = 0;
  int weo_q = 0;
  auto* weo = app.add_subcommand("weo", "Composite statistics at the Bose or Fermi point");
  weo->add_option("--n", weo_n, "Constituents")->required()->check(CLI::PositiveNumber);
  weo->add_option("--q", weo_q, "-1 or 1")->required()->check(CLI::IsMember({-1, 1}));

  auto* bounds = app.add_subcommand("bounds", "Propagate statistics-violation limits to constituents");
  bounds->require_subcommand(1);
  double b_eps = 0.0;
  std::size_t b_n = 0;
  bool b_exact = false;
  auto* propagate = bounds->add_subcommand("propagate", "epsilon of a constituent from that of its composite");
  propagate->add_option("--epsilon", b_eps, "Composite deviation 1 - |q|")->required();
  propagate->add_option("--n", b_n, "Constituents")->required()->check(CLI::PositiveNumber);
  propagate->add_flag("--exact", b_exact, "Invert q^(n^2) exactly instead of eps / n^2");
  std::string chain_input, chain_path;
  bool chain_model = false;
  auto* chain = bounds->add_subcommand("chain", "Derive limits down a composite chain");
  chain->add_option("--input", chain_input, "Limits file")->required();
  chain->add_option("--path", chain_path, "e.g. O16>nucleon:16>quark:3")->required();
  chain->add_flag("--allow-model-dependent", chain_model, "Permit model-dependent starting records");
  std::string ingest_input;
  auto* ingest = bounds->add_subcommand("ingest", "Validate and list a limits file");
  ingest->add_option("--input", ingest_input, "Limits file")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*sp) {
      const OperatorWord left = parse_word(sp_left), right = parse_word(sp_right);
      out << to_string(sp_oracle ? oracle_scalar_product(left, right, workers) : scalar_product(left, right)) << "\n";
    } else if (*qperm) {
      std::ifstream in(qp_file);
      if (!in) throw ParseError("cannot open matrix file '" + qp_file + "'");
      const DeltaMatrix m = parse_delta_matrix(in);
      out << to_string(qp_oracle ? oracle_q_permanent(m, workers) : q_permanent(m)) << "\n";
    } else if (*norm) {
      const RepCoefficients rep = detail::resolve_rep(norm_rep, norm_n);
      const auto labels = norm_labels.empty() ? default_labels(norm_n) : detail::parse_labels(norm_labels);
      out << to_string(normalization_poly(rep, labels)) << "\n";
      if (norm_show)
        for (const auto& [perm, c] : rep.coeffs) out << to_string(perm) << "\t" << inversion_number(perm) << "\t" << c.get_str() << "\n";
    } else if (*gramcmd) {
      const auto labels = detail::parse_labels(gram_labels);
      if (labels.empty()) throw ContractViolation("gram: no labels given");
      const GramMatrix g = gram(permutation_basis(labels), workers);
      for (std::size_t i = 0; i < g.dimension(); ++i) {
        for (std::size_t j = 0; j < g.dimension(); ++j) out << (j ? "\t" : "") << to_string(g.at(i, j));
        out << "\n";
      }
      if (gram_psd) {
        if (!gram_q) throw ContractViolation("gram --check-psd needs --q");
        const PsdReport r = check_psd(g, *gram_q, gram_tol.value_or(default_psd_tolerance(g.dimension())));
        if (r.outside_convex_range) err << "warning: q = " << *gram_q << " lies outside the convex range [-1, 1]\n";
        out << "min_eigenvalue\t" << detail::num(r.min_eigenvalue) << "\n";
        out << "psd\t" << (r.pass ? "pass" : "fail") << "\n";
        if (!r.pass) {
          out << "witness";
          for (Eigen::Index k = 0; k < r.witness.size(); ++k) out << "\t" << detail::num(r.witness(k));
          out << "\n";
        }
      } else if (gram_q) {
        const auto m = g.evaluate(*gram_q);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          out << "eval";
          for (Eigen::Index j = 0; j < m.cols(); ++j) out << "\t" << detail::num(m(i, j));
          out << "\n";
        }
      }
    } else if (*weights) {
      for (const auto& [label, w] : irrep_weights(w_n, w_q)) out << label << "\t" << detail::num(w) << "\n";
      if (w_table) {
        const CharacterTable& t = character_table(w_n);
        out << "cycle_type\tclass_size";
        for (const auto& irrep : t.irreps) out << "\t" << irrep.label;
        out << "\n";
        for (std::size_t c = 0; c < t.classes.size(); ++c) {
          std::string type;
          for (int part : t.classes[c].cycle_type) type += (type.empty() ? "" : ".") + std::to_string(part);
          out << type << "\t" << t.classes[c].size;
          for (const auto& irrep : t.irreps) out << "\t" << irrep.characters[c];
          out << "\n";
        }
      }
    } else if (*composite) {
      const CompositeSpec spec = CompositeSpec::make(detail::resolve_rep(c_rep, c_n));
      const auto run_pair = [&](const TagPair& l, const TagPair& r) {
        return c_oracle ? oracle_two_composite(spec, l, r, workers) : two_composite_scalar(spec, l, r);
      };
      out << "normalization\t" << to_string(normalization_poly(spec.rep, spec.labels("t1"))) << "\n";
      if (c_overlap) {
        const TagPair same{"t", "t"};
        const TwoCompositeResult r = c_oracle ? oracle_two_composite(spec, same, same, workers)
                                              : decompose_two_composite(spec, same, same);
        out << "direct\t" << to_string(r.direct) << "\n";
        out << "exchange\t" << to_string(r.exchange) << "\n";
        out << "cross\t" << to_string(r.cross) << "\n";
      } else {
        const TwoCompositeResult same = run_pair({"t1", "t2"}, {"t1", "t2"});
        const TwoCompositeResult swapped = run_pair({"t1", "t2"}, {"t2", "t1"});
        out << "direct\t" << to_string(same.direct) << "\n";
        out << "exchange\t" << to_string(swapped.exchange) << "\n";
        out << "cross\t" << to_string(same.cross + swapped.cross) << "\n";
      }
      out << "exponent\t" << effective_exponent(spec, c_oracle ? Route::oracle : Route::dynamic_programming) << "\n";
    } else if (*weo) {
      out << to_string(weo_limit_check(weo_n, weo_q == 1 ? Statistics::bose : Statistics::fermi)) << "\n";
    } else if (*propagate) {
      if (!first_order_reliable(b_eps) && !b_exact)
        err << "warning: epsilon = " << b_eps << " exceeds " << kLinearizationLimit << "; first order is not reliable, try --exact\n";
      out << detail::sci(b_exact ? propagate_exact(b_eps, b_n) : propagate_first_order(b_eps, b_n)) << "\n";
    } else if (*chain) {
      const IngestResult data = ingest_limits(chain_input);
      for (const auto& d : data.rejected) err << chain_input << ":" << d.line << ": rejected: " << d.message << "\n";
      const auto levels = derive_chain(data.records, parse_chain(chain_path), chain_model);
      out << "species\tn\tepsilon_first_order\tepsilon_exact\tproximity\tnote\n";
      for (const auto& l : levels)
        out << l.species << "\t" << (l.n == 0 ? std::string("-") : std::to_string(l.n)) << "\t" << detail::sci(l.epsilon_first_order)
            << "\t" << detail::sci(l.epsilon_exact) << "\t" << to_string(l.proximity) << "\t" << l.note << "\n";
    } else if (*ingest) {
      const IngestResult data = ingest_limits(ingest_input);
      out << "species\tcomposite_of\tn_constituents\tepsilon\tproximity\tmodel_dependent\tsource\n";
      for (const auto& r : data.records)
        out << r.species << "\t" << r.composite_of << "\t" << r.n_constituents << "\t" << detail::sci(r.epsilon) << "\t"
            << to_string(r.proximity) << "\t" << (r.model_dependent ? "true" : "false") << "\t" << r.source << "\n";
      for (const auto& d : data.rejected) err << ingest_input << ":" << d.line << ": rejected: " << d.message << "\n";
      if (!data.ok()) return kExitParse;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return kExitOk;
}

}  // namespace quon::cli
