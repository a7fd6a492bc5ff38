// lh: command-line front end for link-homotopy computations on braids.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lh/clasp.hpp"
#include "lh/closure.hpp"
#include "lh/commutators.hpp"
#include "lh/free_group.hpp"
#include "lh/gamma.hpp"
#include "lh/json_io.hpp"
#include "lh/magnus.hpp"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int n = 0;  // 0: infer
  std::string format = "text";
  std::string order = "weight-lex";
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_n(CLI::App* cmd, Common& c) {
  cmd->add_option("-n,--strands", c.n, "Number of strands / generators (inferred from the input if omitted)")
      ->check(CLI::Range(1, lh::MonomialSpace::kMaxRank));
}

void add_order(CLI::App* cmd, Common& c) {
  cmd->add_option("--order", c.order, "Basis order")->check(CLI::IsMember({"weight-lex", "weight-revlex"}));
}

int strands_for(const Common& c, std::initializer_list<int> inferred) {
  if (c.n > 0) return c.n;
  return std::max(1, std::max(inferred));
}

std::string read_source(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw lh::InvalidInput("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

lh::ClaspVector load_vector(const std::string& path, const Common& c) {
  lh::ClaspVector v = lh::clasp_vector_from_json(lh::parse_json_text(read_source(path)));
  if (c.n > 0 && c.n != v.strands()) {
    throw lh::InvalidInput(path + " has n = " + std::to_string(v.strands()) + " but -n " + std::to_string(c.n) +
                           " was given");
  }
  return v;
}

std::string seq_text(const std::vector<int>& s) { return "(" + lh::monomial_key(s) + ")"; }

void print_json(const lh::json& j) { std::cout << j.dump(2) << "\n"; }

void print_clasp_text(const lh::ClaspVector& v) {
  for (int k = 0; k < v.size(); ++k) std::cout << lh::monomial_key(v.index()[k].sequence) << " " << v[k] << "\n";
}

void print_matrix_text(const lh::GammaMatrix& g) {
  std::size_t width = 1;
  for (int r = 0; r < g.matrix.rows(); ++r) {
    for (int c = 0; c < g.matrix.cols(); ++c) width = std::max(width, std::to_string(g.matrix(r, c)).size());
  }
  std::cout << "basis:";
  for (const auto& b : g.basis->elements()) std::cout << " " << seq_text(b.sequence);
  std::cout << "\n";
  for (int r = 0; r < g.matrix.rows(); ++r) {
    for (int c = 0; c < g.matrix.cols(); ++c) {
      std::string s = std::to_string(g.matrix(r, c));
      std::cout << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    std::cout << "\n";
  }
}

std::string describe_row(const lh::MoveRow& row) {
  const auto idx = lh::ClasperIndex::of(row.n);
  std::string out = row.table + " #" + std::to_string(row.row);
  if (row.pc) {
    out += " pc(" + std::to_string(row.pc->strand) + " by " + std::to_string(row.pc->conjugator) +
           (row.pc->sign > 0 ? "" : "^-1") + ")";
  }
  out += ":";
  for (const auto& inc : row.increments) {
    out += " nu(" + lh::monomial_key((*idx)[inc.target].sequence) + ") +=";
    bool first = true;
    for (const auto& s : inc.sources) {
      out += (s.sign < 0 ? " -" : (first ? " " : " +"));
      if (s.sign != 1 && s.sign != -1) out += std::to_string(s.sign < 0 ? -s.sign : s.sign) + "*";
      out += "nu(" + lh::monomial_key((*idx)[s.clasper].sequence) + ")";
      first = false;
    }
    out += ";";
  }
  out.pop_back();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-homotopy computations on braids: homotopic Artin representation, clasp-number normal "
               "forms and closure equivalence."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  Common c;
  std::vector<std::string> words;
  std::string route = "series", extraction = "deletion", strategy = "lattice", table_filter;
  lh::PartialConjugation pc;
  std::size_t budget = lh::default_search_budget();

  auto* basis = app.add_subcommand("basis", "List the reduced basic commutators");
  add_n(basis, c);
  add_order(basis, c);
  add_format(basis, c);

  auto* magnus = app.add_subcommand("magnus", "Reduced Magnus expansion of a word in x1..xn");
  magnus->add_option("word", words, "Word, e.g. \"x1 x2^-1\"")->required()->expected(1);
  add_n(magnus, c);
  add_format(magnus, c);

  auto* nf = app.add_subcommand("nf", "Normal form of a word in the reduced free group");
  nf->add_option("word", words, "Word in x1..xn")->required()->expected(1);
  add_n(nf, c);
  add_order(nf, c);
  add_format(nf, c);

  auto* act = app.add_subcommand("act", "Homotopic Artin action of a braid on a word");
  act->add_option("braid-and-word", words, "Braid word and free-group word")->required()->expected(2);
  add_n(act, c);
  add_format(act, c);

  auto* gamma = app.add_subcommand("gamma", "Matrix of a braid in the linearized homotopic Artin representation");
  gamma->add_option("braid", words, "Braid word, e.g. \"s1 s2^-1\"")->required()->expected(1);
  gamma->add_option("--route", route, "Computation route")->check(CLI::IsMember({"series", "words", "closed-form"}));
  add_n(gamma, c);
  add_order(gamma, c);
  add_format(gamma, c);

  auto* beq = app.add_subcommand("braid-eq", "Are two braids link-homotopic? (exit 0 yes, 1 no)");
  beq->add_option("braids", words, "Two braid words")->required()->expected(2);
  add_n(beq, c);
  add_format(beq, c);

  auto* clasp = app.add_subcommand("clasp", "Clasp-number normal form of a pure braid");
  clasp->add_option("braid", words, "Pure braid word")->required()->expected(1);
  clasp->add_option("--route", extraction, "Extraction route")->check(CLI::IsMember({"deletion", "full"}));
  add_n(clasp, c);
  add_format(clasp, c);

  auto* build = app.add_subcommand("build", "Braid word of a clasp-number vector");
  build->add_option("vector", words, "Clasp vector JSON file ('-' for stdin)")->required()->expected(1);
  add_n(build, c);
  add_format(build, c);

  auto* pcc = app.add_subcommand("pc", "Apply a partial conjugation to a clasp-number vector");
  pcc->add_option("vector", words, "Clasp vector JSON file ('-' for stdin)")->required()->expected(1);
  pcc->add_option("--strand", pc.strand, "Strand whose factor is conjugated")->required();
  pcc->add_option("--by", pc.conjugator, "Conjugating strand")->required();
  pcc->add_option("--sign", pc.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
  add_n(pcc, c);
  add_format(pcc, c);

  auto* ceq = app.add_subcommand("closure-eq",
                                 "Do two clasp-number vectors have link-homotopic closures? "
                                 "(exit 0 equivalent, 1 distinct, 2 unknown)");
  ceq->add_option("vectors", words, "Two clasp vector JSON files")->required()->expected(2);
  ceq->add_option("--budget", budget, "State budget for the bfs strategy (default: $LH_SEARCH_BUDGET or 100000)")
      ->check(CLI::PositiveNumber);
  ceq->add_option("--strategy", strategy, "Top-degree decision strategy")
      ->check(CLI::IsMember({"lattice", "bfs"}));
  add_n(ceq, c);
  add_format(ceq, c);

  auto* tables = app.add_subcommand("tables", "Dump the embedded move tables");
  tables->add_option("--table", table_filter, "Only this table");
  add_format(tables, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (basis->parsed()) {
      if (c.n == 0) throw UsageError("basis needs -n");
      auto b = lh::enumerate_basic_commutators(c.n, lh::parse_basis_order(c.order));
      if (c.json()) {
        lh::json list = lh::json::array();
        for (const auto& e : b->elements()) list.push_back(e.sequence);
        print_json({{"n", c.n}, {"order", c.order}, {"basis", list}});
      } else {
        for (const auto& e : b->elements()) std::cout << seq_text(e.sequence) << "\n";
      }
    } else if (magnus->parsed()) {
      const int n = strands_for(c, {lh::infer_rank(words[0])});
      auto s = lh::magnus_expand(lh::parse_reduced_word(words[0], n));
      if (c.json()) print_json(lh::to_json(s));
      else std::cout << lh::format_series(s) << "\n";
    } else if (nf->parsed()) {
      const int n = strands_for(c, {lh::infer_rank(words[0])});
      auto e = lh::rfg_normal_form(lh::parse_reduced_word(words[0], n),
                                   lh::enumerate_basic_commutators(n, lh::parse_basis_order(c.order)));
      if (c.json()) {
        // exponent values depend on the order of the product, so it travels with them
        print_json({{"n", n}, {"order", c.order}, {"exponents", lh::to_json(e)}});
      } else {
        for (int k = 0; k < e.basis->size(); ++k) {
          if (e.exponents[k] != 0) std::cout << seq_text((*e.basis)[k].sequence) << " " << e.exponents[k] << "\n";
        }
      }
    } else if (act->parsed()) {
      const int n = strands_for(c, {lh::infer_strand_count(words[0]), lh::infer_rank(words[1])});
      auto w = lh::artin_act(lh::parse_braid_word(words[0], n), lh::parse_reduced_word(words[1], n));
      if (c.json()) print_json({{"n", n}, {"word", lh::format_reduced_word(w)}});
      else std::cout << lh::format_reduced_word(w) << "\n";
    } else if (gamma->parsed()) {
      const int n = strands_for(c, {lh::infer_strand_count(words[0])});
      const auto r = route == "words" ? lh::GammaRoute::Words
                     : route == "closed-form" ? lh::GammaRoute::ClosedForm
                                              : lh::GammaRoute::Series;
      auto g = lh::gamma_matrix(lh::parse_braid_word(words[0], n),
                                lh::enumerate_basic_commutators(n, lh::parse_basis_order(c.order)), r);
      if (c.json()) print_json(lh::to_json(g));
      else print_matrix_text(g);
    } else if (beq->parsed()) {
      const int n = strands_for(c, {lh::infer_strand_count(words[0]), lh::infer_strand_count(words[1])});
      bool eq = lh::braid_equal_lh(lh::parse_braid_word(words[0], n), lh::parse_braid_word(words[1], n));
      if (c.json()) print_json({{"equal", eq}});
      else std::cout << (eq ? "true" : "false") << "\n";
      return eq ? 0 : kExitFalse;
    } else if (clasp->parsed()) {
      const int n = strands_for(c, {lh::infer_strand_count(words[0])});
      auto v = lh::extract_clasp_vector(lh::parse_braid_word(words[0], n), extraction == "full"
                                                                               ? lh::ExtractionRoute::FullColumns
                                                                               : lh::ExtractionRoute::StrandDeletion);
      if (c.json()) print_json(lh::to_json(v));
      else print_clasp_text(v);
    } else if (build->parsed()) {
      auto v = load_vector(words[0], c);
      auto b = lh::clasp_vector_to_braid(v);
      if (c.json()) print_json({{"n", v.strands()}, {"braid", lh::format_braid_word(b)}});
      else std::cout << lh::format_braid_word(b) << "\n";
    } else if (pcc->parsed()) {
      auto v = lh::partial_conjugate(load_vector(words[0], c), pc);
      if (c.json()) print_json(lh::to_json(v));
      else print_clasp_text(v);
    } else if (ceq->parsed()) {
      auto v1 = load_vector(words[0], c), v2 = load_vector(words[1], c);
      lh::ClosureOptions opts;
      opts.budget = budget;
      opts.strategy = strategy == "bfs" ? lh::SearchStrategy::Bfs : lh::SearchStrategy::Lattice;
      auto verdict = lh::closure_equivalent(v1, v2, opts);
      if (c.json()) {
        print_json(lh::to_json(verdict));
      } else {
        std::cout << lh::to_string(verdict.status) << "\n";
        if (verdict.status == lh::OrbitVerdict::Status::Equivalent) {
          std::cout << "witness:";
          if (verdict.witness.empty()) std::cout << " (none needed)";
          for (const auto& m : verdict.witness) std::cout << " " << lh::format_move(m);
          std::cout << "\n";
        } else {
          std::cout << "invariant: " << verdict.invariant << "\n";
        }
      }
      switch (verdict.status) {
        case lh::OrbitVerdict::Status::Equivalent:
          return 0;
        case lh::OrbitVerdict::Status::Distinct:
          return kExitFalse;
        case lh::OrbitVerdict::Status::Unknown:
          return kExitUnknown;
      }
    } else if (tables->parsed()) {
      const auto& all = lh::embedded_move_tables();
      std::vector<const lh::MoveRow*> rows;
      if (table_filter.empty()) {
        for (const auto& r : all.rows()) rows.push_back(&r);
      } else {
        rows = all.table(table_filter);
      }
      if (c.json()) {
        lh::json out = lh::json::array();
        for (const auto* r : rows) out.push_back(lh::to_json(*r));
        print_json(out);
      } else {
        for (const auto* r : rows) std::cout << describe_row(*r) << "\n";
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "lh: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lh::InvalidInput& e) {
    std::cerr << "lh: " << e.what() << "\n";
    return kExitData;
  } catch (const lh::json::exception& e) {
    std::cerr << "lh: malformed JSON input: " << e.what() << "\n";
    return kExitData;
  } catch (const lh::OverflowError& e) {
    std::cerr << "lh: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "lh: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
