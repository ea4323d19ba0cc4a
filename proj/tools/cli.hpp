#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehrhart/ehrhart.hpp"
#include "ehrhart/json_io.hpp"

namespace ehrhart::cli {

using nlohmann::json;

enum ExitCode : int { kPass = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

namespace detail {

inline void render_text(const json& j, std::ostream& out, const std::string& indent = "") {
  auto scalar_array = [](const json& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  auto inline_value = [&](const json& v) {
    if (v.is_array() && scalar_array(v)) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      return s + ")";
    }
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        out << indent << k << ":\n";
        render_text(v, out, indent + "  ");
      } else {
        out << indent << k << ": " << inline_value(v) << "\n";
      }
    }
  } else if (j.is_array() && !scalar_array(j)) {
    for (const auto& v : j) {
      if (v.is_structured() && !(v.is_array() && scalar_array(v))) {
        out << indent << "-\n";
        render_text(v, out, indent + "  ");
      } else {
        out << indent << "- " << inline_value(v) << "\n";
      }
    }
  } else {
    out << indent << inline_value(j) << "\n";
  }
}

inline void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace detail

// Runs one command line. Results go to `out`, JSON error objects to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta vectors of lattice simplices: computation, constraint checks and classification", "deltavec"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  std::string output = "json";
  app.add_option("--budget", budget, "Work budget for brute-force counting and exhaustive search");
  app.add_option("--threads", threads, "Worker threads for parallel subcommands")->check(CLI::Range(1u, 256u));
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string simplex_path;
  Int m = 0;
  std::string coeffs_text;
  std::size_t dim = 0;
  std::string delta_text;
  Int volume = 0;
  bool crosscheck = false;

  auto* delta_cmd = app.add_subcommand("delta", "Delta vector by box enumeration");
  delta_cmd->add_option("--simplex", simplex_path, "Simplex JSON file")->required();

  auto* box_cmd = app.add_subcommand("box", "List the box group points");
  box_cmd->add_option("--simplex", simplex_path, "Simplex JSON file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force Ehrhart table, delta vector and reciprocity");
  oracle_cmd->add_option("--simplex", simplex_path, "Simplex JSON file")->required();

  auto* hnf_cmd = app.add_subcommand("hnf", "Build the one-row HNF simplex and compute its delta vector");
  hnf_cmd->add_option("--m", m, "Normalized volume")->required();
  hnf_cmd->add_option("--coeffs", coeffs_text, "d_1,...,d_{m-1}")->required();
  hnf_cmd->add_option("--dim", dim, "Dimension")->required();

  auto* check_cmd = app.add_subcommand("check", "Run every applicable constraint on a delta vector");
  check_cmd->add_option("--delta", delta_text, "delta_0,...,delta_d")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Admissibility, case and witness for volume 5 or 7");
  classify_cmd->add_option("--delta", delta_text, "delta_0,...,delta_d")->required();
  classify_cmd->add_option("--volume", volume, "5 or 7")->required()->check(CLI::IsMember({5, 7}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "All admissible delta vectors of volume 5 or 7 in a dimension");
  enumerate_cmd->add_option("--volume", volume, "5 or 7")->required()->check(CLI::IsMember({5, 7}));
  enumerate_cmd->add_option("--dim", dim, "Dimension")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--exhaustive-crosscheck", crosscheck, "Compare against exhaustive HNF search");

  auto* search_cmd = app.add_subcommand("search", "Delta vectors of all HNF simplices of given dimension and volume");
  search_cmd->add_option("--dim", dim, "Dimension")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--volume", volume, "Normalized volume")->required()->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Compute the delta vector by every available method and compare");
  verify_cmd->add_option("--simplex", simplex_path, "Simplex JSON file");
  verify_cmd->add_option("--m", m, "Normalized volume (HNF input)");
  verify_cmd->add_option("--coeffs", coeffs_text, "d_1,...,d_{m-1} (HNF input)");
  verify_cmd->add_option("--dim", dim, "Dimension (HNF input)");

  std::vector<std::string> argv_store{"deltavec"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    detail::emit_error(err, "usage", e.what());
    return kUsage;
  }

  const CountOptions count_opts{budget, threads};
  auto emit = [&](const json& j) {
    if (output == "text") detail::render_text(j, out);
    else out << j.dump() << "\n";
  };

  try {
    if (delta_cmd->parsed()) {
      emit(io::to_json(delta_from_box(io::load_simplex_file(simplex_path))));
      return kPass;
    }
    if (box_cmd->parsed()) {
      emit(io::to_json(enumerate_box(io::load_simplex_file(simplex_path))));
      return kPass;
    }
    if (oracle_cmd->parsed()) {
      const Simplex s = io::load_simplex_file(simplex_path);
      const EhrhartTable t = ehrhart_table(s, count_opts);
      const auto rec = reciprocity_check(t);
      json j = io::to_json(t);
      j["delta"] = io::to_json(delta_from_counts(t.closed_counts(), s.dim(), s.volume()));
      j["reciprocity"] = rec.passed;
      if (rec.first_mismatch) j["first_mismatch"] = *rec.first_mismatch;
      emit(j);
      return rec.passed ? kPass : kNegative;
    }
    if (hnf_cmd->parsed()) {
      const HNFSpec spec{m, io::parse_int_list(coeffs_text), dim};
      const Simplex s = build_simplex(spec);
      emit(json{{"spec", io::to_json(spec)},
                {"simplex", io::to_json(s)},
                {"closed_form", io::to_json(closed_form_delta(spec))},
                {"box", io::to_json(delta_from_box(s))}});
      return kPass;
    }
    if (check_cmd->parsed()) {
      const CheckReport r = check_all(DeltaVector(io::parse_int_list(delta_text)));
      emit(io::to_json(r));
      return r.passed() ? kPass : kNegative;
    }
    if (classify_cmd->parsed()) {
      const DeltaVector v(io::parse_int_list(delta_text));
      const CheckReport r = admissible(v, volume);
      json j{{"admissible", r.passed()}, {"checks", io::to_json(r)["checks"]}};
      if (r.passed()) {
        const Witness w = witness(v, volume);
        j["case"] = io::to_json(w.case_id);
        j["witness"] = io::to_json(w);
        j["verified"] = witness_verified_by_box(w);
      }
      emit(j);
      return r.passed() ? kPass : kNegative;
    }
    if (enumerate_cmd->parsed()) {
      const auto entries = enumerate_admissible(volume, dim, threads);
      json list = json::array();
      std::set<DeltaVector> found;
      for (const auto& e : entries) {
        found.insert(e.delta);
        list.push_back(json{{"delta", io::to_json(e.delta)}, {"case", io::to_json(e.witness.case_id)},
                            {"witness", io::to_json(e.witness)}});
      }
      json j{{"volume", volume}, {"dim", dim}, {"count", entries.size()}, {"vectors", list}};
      bool ok = true;
      if (crosscheck) {
        const auto exhaustive = exhaustive_search(dim, volume, {budget, threads});
        json ex = json::array();
        for (const auto& v : exhaustive) ex.push_back(io::to_json(v));
        ok = exhaustive == found;
        j["crosscheck"] = json{{"exhaustive", ex}, {"equal", ok}};
      }
      emit(j);
      return ok ? kPass : kNegative;
    }
    if (search_cmd->parsed()) {
      json list = json::array();
      for (const auto& v : exhaustive_search(dim, volume, {budget, threads})) list.push_back(io::to_json(v));
      emit(json{{"dim", dim}, {"volume", volume}, {"count", list.size()}, {"vectors", list}});
      return kPass;
    }
    if (verify_cmd->parsed()) {
      const bool from_file = !simplex_path.empty();
      const bool from_spec = !coeffs_text.empty() || m != 0 || dim != 0;
      if (from_file == from_spec) throw InvalidArgument("verify needs either --simplex or all of --m, --coeffs, --dim");
      std::optional<HNFSpec> spec;
      if (from_spec) spec = HNFSpec{m, io::parse_int_list(coeffs_text), dim};
      const Simplex s = spec ? build_simplex(*spec) : io::load_simplex_file(simplex_path);
      const DeltaVector box = delta_from_box(s);
      json j{{"simplex", io::to_json(s)}, {"volume", io::json_int(s.volume())}, {"box", io::to_json(box)}};
      bool agree = true;
      if (spec) {
        const DeltaVector closed = closed_form_delta(*spec);
        j["closed_form"] = io::to_json(closed);
        agree = agree && closed == box;
      }
      try {
        const DeltaVector oracle = ehrhart_delta(s, count_opts);
        j["oracle"] = io::to_json(oracle);
        agree = agree && oracle == box;
      } catch (const BudgetExceeded& e) {
        j["oracle"] = nullptr;
        j["oracle_skipped"] = e.what();
      }
      j["agree"] = agree;
      emit(j);
      return agree ? kPass : kNegative;
    }
  } catch (const BudgetExceeded& e) {
    detail::emit_error(err, "budget", e.what());
    return kBudget;
  } catch (const InvariantViolation& e) {
    detail::emit_error(err, "invariant", e.what());
    return kUsage;
  } catch (const Error& e) {
    detail::emit_error(err, "input", e.what());
    return kUsage;
  }
  detail::emit_error(err, "usage", "no subcommand");
  return kUsage;
}

}  // namespace ehrhart::cli
