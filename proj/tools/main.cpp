#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "monodromy.hpp"
#include "pipeline.hpp"

using json = nlohmann::json;
using namespace sextic;

namespace {

std::size_t max_cosets_default() {
  if (const char* env = std::getenv("SEXTIC_MAX_COSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw std::invalid_argument("SEXTIC_MAX_COSETS is not a positive integer");
  }
  return 2'000'000;
}

void emit(const json& j, const std::string& out_path, bool text,
          const std::string& rendered) {
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open " + out_path);
    f << (text ? rendered : j.dump(2) + "\n");
    return;
  }
  if (text)
    std::cout << rendered;
  else
    std::cout << j.dump(2) << "\n";
}

json classify_to_json(const ClassifyResult& res) {
  std::map<std::string, json> certs;
  for (const SexticModel& m : res.models) {
    SingularitySet set = singularity_set(m);
    MaximalityCertificate c = check_maximality(m);
    certs[set.str()] = json{{"milnor_total", set.total_milnor()},
                            {"trigonal_milnor", c.mu_bbar},
                            {"bound", c.bound},
                            {"unstable_fibers", c.unstable},
                            {"maximal", c.maximal}};
  }
  json rows = json::array();
  for (const ClassificationRow& r : res.rows) {
    rows.push_back({{"row", r.row},
                    {"set", r.set},
                    {"figure", r.figure},
                    {"n_r", r.n_r},
                    {"n_c", r.n_c},
                    {"classes", r.n_r + 2 * r.n_c},
                    {"order", r.group_order},
                    {"s_perp", r.s_perp},
                    {"certificate", certs[r.set]},
                    {"model_codes", r.model_codes}});
  }
  return json{{"point", "E7"},
              {"total_classes", res.total_classes},
              {"rows", rows}};
}

std::string classify_to_text(const ClassifyResult& res) {
  std::string out = "row  set            count   order   figure\n";
  char buf[128];
  for (const ClassificationRow& r : res.rows) {
    std::snprintf(buf, sizeof buf, "%3d  %-14s (%d,%d)  %6zu   %s\n", r.row,
                  r.set.c_str(), r.n_r, r.n_c, r.group_order,
                  r.figure.c_str());
    out += buf;
  }
  out += "total deformation classes: " + std::to_string(res.total_classes) +
         "\n";
  return out;
}

json group_facts_json(std::size_t max_cosets) {
  CosetEnumOptions opts;
  opts.max_cosets = max_cosets;
  FpPresentation g = row_relations(1);
  auto order = group_order(g, opts);
  if (!order) throw std::runtime_error("LimitExceeded while enumerating");
  json j;
  j["order"] = *order;
  json primary = json::array();
  for (const cpp_int& p : abelianization(g).primary())
    primary.push_back(p.convert_to<long long>());
  j["abelianization_primary"] = primary;
  std::vector<FreeWord> comms;
  for (int i = 1; i <= 3; ++i)
    for (int k = i + 1; k <= 3; ++k) {
      FreeWord a = FreeWord::gen(i), b = FreeWord::gen(k);
      comms.push_back(a * b * a.inverse() * b.inverse());
    }
  EnumResult der = coset_enumerate(g, comms, opts);
  if (!der.completed) throw std::runtime_error("LimitExceeded (derived)");
  j["derived_index"] = der.table.coset_count;
  FpPresentation h = subgroup_presentation(g, der.table);
  auto horder = group_order(h, opts);
  if (!horder) throw std::runtime_error("LimitExceeded (derived order)");
  j["derived_order"] = *horder;
  j["derived_perfect"] = is_perfect(h);
  auto o1 = element_order(g, FreeWord::gen(1), opts);
  if (!o1) throw std::runtime_error("LimitExceeded (generator order)");
  j["generator_order"] = *o1;
  for (int k : {2, 3}) {
    EnumResult s =
        coset_enumerate(g, {FreeWord::gen(1), FreeWord::gen(k)}, opts);
    if (!s.completed) throw std::runtime_error("LimitExceeded (subgroup)");
    j[k == 2 ? "index_a1_a2" : "index_a1_a3"] = s.table.coset_count;
  }
  auto drop = group_order(row_relations(1, BranchChoice::Alpha2, true), opts);
  if (!drop) throw std::runtime_error("LimitExceeded (dropped relator)");
  j["order_without_triangle_relator"] = *drop;
  return j;
}

int compare_json(const json& got, const json& want, const std::string& path,
                 std::ostream& err) {
  int mismatches = 0;
  if (want.is_object()) {
    for (auto& [key, val] : want.items()) {
      if (key == "_comment") continue;
      if (!got.contains(key)) {
        err << "missing field " << path << "/" << key << "\n";
        ++mismatches;
        continue;
      }
      mismatches += compare_json(got[key], val, path + "/" + key, err);
    }
    return mismatches;
  }
  if (want.is_array()) {
    if (!got.is_array() || got.size() != want.size()) {
      err << "size mismatch at " << path << "\n";
      return 1;
    }
    for (std::size_t i = 0; i < want.size(); ++i)
      mismatches += compare_json(got[i], want[i],
                                 path + "[" + std::to_string(i) + "]", err);
    return mismatches;
  }
  if (got != want) {
    err << "value mismatch at " << path << ": computed " << got.dump()
        << ", golden " << want.dump() << "\n";
    return 1;
  }
  return 0;
}

int run_braid_selftest(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> gen(1, 3), sign(0, 1), len(1, 10);
  auto rand_braid = [&] {
    std::vector<int> w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      int g = gen(rng);
      w.push_back(sign(rng) ? g : -g);
    }
    return w;
  };
  auto rand_word = [&] {
    std::vector<int> w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      int g = gen(rng);
      w.push_back(sign(rng) ? g : -g);
    }
    return FreeWord(w);
  };
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    std::vector<int> b1 = rand_braid(), b2 = rand_braid();
    FreeWord w = rand_word();
    std::vector<int> prod = b1;
    prod.insert(prod.end(), b2.begin(), b2.end());
    if (braid_act(prod, w) != braid_act(b1, braid_act(b2, w))) ++failures;
    if (braid_act(b1, rho()) != rho()) ++failures;
    Braid3 nb = Braid3::from_letters(b1);
    if (braid_act(nb.representative_letters(), w) != braid_act(b1, w))
      ++failures;
  }
  if (Braid3::from_letters({1, 2, 1}) != Braid3::from_letters({2, 1, 2}))
    ++failures;
  Braid3 center = Braid3::from_letters({1, 2, 1, 2, 1, 2});
  for (int g : {1, 2})
    if (center * Braid3::from_letters({g}) !=
        Braid3::from_letters({g}) * center)
      ++failures;
  std::cout << "braid kernel self-test: " << cases << " cases, " << failures
            << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classification engine for plane sextics with a distinguished "
      "E-type singular point"};
  app.require_subcommand(1);
  std::string out_path;
  std::string format = "json";
  std::size_t max_cosets = 0;
  app.add_option("--out", out_path, "write the report to a file");
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-cosets", max_cosets,
                 "coset enumeration bound (default 2000000, or "
                 "SEXTIC_MAX_COSETS)");

  auto* enumerate =
      app.add_subcommand("enumerate", "enumerate skeletons or models");
  int degree = 9, sing_black = 0, sing_white = 0;
  bool no_split = false, models_mode = false;
  enumerate->add_option("--degree", degree, "skeleton degree (3, 6 or 9)");
  enumerate->add_option("--singular-blacks", sing_black, "exact count");
  enumerate->add_option("--singular-whites", sing_white, "exact count");
  enumerate->add_flag("--no-splitting", no_split,
                      "keep only skeletons without a splitting marking");
  enumerate->add_flag("--models", models_mode,
                      "emit the decorated models instead of raw skeletons");

  auto* classify = app.add_subcommand("classify", "full classification");
  std::string point = "E7";
  classify->add_option("--point", point, "distinguished point type")
      ->check(CLI::IsMember({"E7"}));

  auto* group = app.add_subcommand("group", "group data for one row");
  int row = 1;
  int branch = 2;
  bool verify_facts = false;
  group->add_option("--row", row, "classification row 1..11")->required();
  group->add_option("--branch", branch, "2 or 3: distinguished generator")
      ->check(CLI::IsMember({2, 3}));
  group->add_flag("--verify-facts", verify_facts,
                  "recompute the full row-1 certificate");

  auto* perturb =
      app.add_subcommand("perturb", "perturbation survey of row 1");
  int prow = 1;
  perturb->add_option("--row", prow)->check(CLI::IsMember({1}));

  auto* split = app.add_subcommand("split", "reducible-model analysis");

  auto* verify =
      app.add_subcommand("verify", "check computations against goldens");
  std::string table_path, facts_path;
  bool braid_kernel = false;
  int cases = 10000;
  unsigned seed = 1;
  verify->add_option("--table-e7", table_path, "golden classification file");
  verify->add_option("--group-facts", facts_path, "golden group-fact file");
  verify->add_flag("--braid-kernel", braid_kernel,
                   "randomized braid identities");
  verify->add_option("--cases", cases, "random cases for --braid-kernel");
  verify->add_option("--seed", seed, "RNG seed");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();
  CLI11_PARSE(app, argc, argv);
  bool text = format == "text";

  try {
    if (max_cosets == 0) max_cosets = max_cosets_default();

    if (*enumerate) {
      SkeletonEnumOptions opts;
      opts.degree = degree;
      opts.singular_blacks = sing_black;
      opts.singular_whites = sing_white;
      opts.require_no_splitting_marking = no_split;
      json j;
      std::string rendered;
      if (models_mode) {
        auto models = enumerate_e7_models();
        std::map<std::string, std::pair<int, int>> counts;
        for (const DeformationCounts& dc : deformation_classes(models))
          counts[dc.set] = {dc.n_r, dc.n_c};
        json arr = json::array();
        for (const SexticModel& m : models) {
          std::string set = singularity_set(m).str();
          arr.push_back({{"code", model_code(m)},
                         {"set", set},
                         {"t", m.t},
                         {"degree", validate_skeleton(m.map).degree},
                         {"bigon", m.bigon_face()},
                         {"branch", m.branch_dart},
                         {"real", model_is_real(m)},
                         {"n_r", counts[set].first},
                         {"n_c", counts[set].second}});
          rendered +=
              set + "  t=" + std::to_string(m.t) + "  " + model_code(m) + "\n";
        }
        j = json{{"models", arr}};
      } else {
        auto skeletons = enumerate_skeletons(opts);
        json arr = json::array();
        for (const CombMap& sk : skeletons) {
          arr.push_back(
              {{"code", canonical_code(sk)}, {"text", write_skeleton_text(sk)}});
          rendered += write_skeleton_text(sk) + "\n";
        }
        j = json{{"degree", degree},
                 {"singular_blacks", sing_black},
                 {"singular_whites", sing_white},
                 {"skeletons", arr}};
      }
      emit(j, out_path, text, rendered);
      return 0;
    }

    if (*classify) {
      ClassifyResult res = classify_e7(max_cosets);
      emit(classify_to_json(res), out_path, text, classify_to_text(res));
      return 0;
    }

    if (*group) {
      BranchChoice br =
          branch == 2 ? BranchChoice::Alpha2 : BranchChoice::Alpha3;
      CosetEnumOptions opts;
      opts.max_cosets = max_cosets;
      json j;
      j["row"] = row;
      j["branch"] = branch;
      FpPresentation recorded = row_relations(row, br);
      j["recorded_relators"] = recorded.serialize();
      auto recorded_order = group_order(recorded, opts);
      if (!recorded_order)
        throw std::runtime_error(
            "LimitExceeded: enumeration inconclusive at this bound");
      j["recorded_order"] = *recorded_order;
      json assembled = json::array();
      for (const SexticModel& m : enumerate_e7_models()) {
        if (singularity_set(m).str() != e7_row_table()[row - 1].set) continue;
        auto o = group_order(assemble_presentation(m), opts);
        if (!o)
          throw std::runtime_error("LimitExceeded on the assembled model");
        assembled.push_back(*o);
      }
      j["assembled_orders"] = assembled;
      json inv = json::array();
      for (const cpp_int& t : abelianization(recorded).torsion)
        inv.push_back(t.convert_to<long long>());
      j["abelian_invariants"] = inv;
      if (verify_facts && row == 1) j["facts"] = group_facts_json(max_cosets);
      std::string rendered = "row " + std::to_string(row) + ": order " +
                             std::to_string(*recorded_order) + "\n";
      if (j.contains("facts")) rendered += j["facts"].dump(2) + "\n";
      emit(j, out_path, text, rendered);
      return 0;
    }

    if (*perturb) {
      const std::vector<SexticModel> models = enumerate_e7_models();
      const SexticModel* m1 = nullptr;
      for (const SexticModel& m : models)
        if (singularity_set(m).str() == "E7+2A4+2A2") m1 = &m;
      Assembly a = assemble_monodromy(*m1);
      json e7 = json::array();
      std::string rendered;
      for (const Perturbation& p : enumerate_e7_perturbations()) {
        std::size_t o = perturb_e7_point(a, p, max_cosets);
        e7.push_back(
            {{"name", p.name}, {"nonabelian_local", p.nonabelian}, {"order", o}});
        rendered += "E7 -> " + p.name + ": order " + std::to_string(o) + "\n";
      }
      json regions = json::array();
      for (std::size_t i = 0; i < a.leaves.size(); ++i) {
        for (const auto& exps : a_point_perturbations(a.leaves[i].d - 1)) {
          std::size_t o =
              perturb_region(a, static_cast<int>(i), exps, max_cosets);
          regions.push_back({{"leaf", i},
                             {"d", a.leaves[i].d},
                             {"exponents", exps},
                             {"order", o}});
          rendered += "region " + std::to_string(i) + ": order " +
                      std::to_string(o) + "\n";
        }
      }
      emit(json{{"row", prow}, {"e7_point", e7}, {"regions", regions}},
           out_path, text, rendered);
      return 0;
    }

    if (*split) {
      json arr = json::array();
      std::string rendered;
      for (const SplitFamily& f : split_analysis()) {
        arr.push_back({{"set", f.set.str()},
                       {"code", f.model_code},
                       {"stem", f.stem},
                       {"h1", f.h1.str()},
                       {"component_degrees", f.degrees},
                       {"class2_commutant", f.class2_commutant.str()},
                       {"pairing_order",
                        f.pairing12_order.convert_to<long long>()}});
        rendered += f.set.str() + "  degrees " + f.degrees + "  commutant " +
                    f.class2_commutant.str() + "\n";
      }
      emit(json{{"families", arr}}, out_path, text, rendered);
      return 0;
    }

    if (*verify) {
      if (braid_kernel) return run_braid_selftest(cases, seed);
      int mismatches = 0;
      if (!table_path.empty()) {
        std::ifstream f(table_path);
        if (!f) throw std::invalid_argument("cannot open " + table_path);
        json golden = json::parse(f);
        json got = classify_to_json(classify_e7(max_cosets));
        mismatches += compare_json(got, golden, "table", std::cerr);
      }
      if (!facts_path.empty()) {
        std::ifstream f(facts_path);
        if (!f) throw std::invalid_argument("cannot open " + facts_path);
        json golden = json::parse(f);
        json got = group_facts_json(max_cosets);
        mismatches += compare_json(got, golden, "facts", std::cerr);
      }
      if (table_path.empty() && facts_path.empty())
        throw std::invalid_argument(
            "verify needs --table-e7, --group-facts or --braid-kernel");
      if (mismatches) {
        std::cerr << mismatches << " mismatching fields\n";
        return 1;
      }
      std::cout << "verified\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
