// Command-line calculator for stable plethysm coefficients and the
// diagrammatic Foulkes module.
//
//   plethysm stable --lambda 6,2
//   plethysm coeff --m 10 --n 10 --lambda 4,4,2
//   plethysm table --r 8 --format json
//   plethysm module --r 4 --info dims
//   plethysm verify --suite fast
//
// Exit codes: 0 ok, 1 parse/usage, 2 unsupported regime, 3 resource cap,
// 4 verification failure.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foulkes/foulkes.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace foulkes;

enum ExitCode { kOk = 0, kUsage = 1, kUnsupported = 2, kResource = 3, kVerification = 4 };

struct Options {
  std::string format = "text";
  std::string lambda;
  int m = 0, n = 0, r = 0;
  std::string info = "dims";
  std::string suite = "fast";
  bool inject_failure = false;
};

void emit(const Options& opt, const std::string& command, Json query, Json result, const std::string& text) {
  if (opt.format == "json") {
    Json out;
    out["command"] = command;
    out["query"] = std::move(query);
    out["result"] = std::move(result);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

// CSV fields holding partitions contain commas.
std::string csv_quote(const std::string& s) { return s.find(',') == std::string::npos ? s : "\"" + s + "\""; }

int cmd_stable(const Options& opt) {
  auto lambda = parse_partition(opt.lambda);
  long long v = stable_plethysm(lambda);
  std::string text;
  if (opt.format == "csv") text = "lambda,value\n" + csv_quote(lambda.to_string()) + "," + std::to_string(v) + "\n";
  else text = std::to_string(v) + "\n";
  emit(opt, "stable", {{"lambda", lambda.to_string()}}, {{"value", v}}, text);
  return kOk;
}

int cmd_coeff(const Options& opt) {
  auto lambda = parse_partition(opt.lambda);
  auto res = plethysm_coefficient(opt.m, opt.n, lambda);
  std::string text;
  if (opt.format == "csv")
    text = "m,n,lambda,padded,value,regime\n" + std::to_string(opt.m) + "," + std::to_string(opt.n) + "," +
           csv_quote(lambda.to_string()) + "," + csv_quote(res.padded.to_string()) + "," + std::to_string(res.value) +
           "," + regime_name(res.regime) + "\n";
  else
    text = std::to_string(res.value) + " (" + regime_name(res.regime) + ")\n";
  emit(opt, "coeff", {{"m", opt.m}, {"n", opt.n}, {"lambda", lambda.to_string()}},
       {{"value", res.value}, {"regime", regime_name(res.regime)}, {"padded", res.padded.to_string()}}, text);
  return kOk;
}

int cmd_table(const Options& opt) {
  auto table = stable_table(opt.r);
  Json entries = Json::array();
  std::ostringstream text;
  if (opt.format == "csv") text << "lambda,value\n";
  for (const auto& e : table) {
    entries.push_back({{"lambda", e.lambda.to_string()}, {"value", e.value}});
    if (opt.format == "csv") text << csv_quote(e.lambda.to_string()) << ',' << e.value << '\n';
    else text << e.lambda.to_string() << ' ' << e.value << '\n';
  }
  emit(opt, "table", {{"r", opt.r}}, {{"r", opt.r}, {"entries", entries}}, text.str());
  return kOk;
}

Json scalar_json(const TwoParamScalar& v) { return v.to_dump_string(); }

int cmd_module(const Options& opt) {
  if (opt.r < 1) throw DomainError("module: r must be positive");
  require_within_cap(opt.r, module_matrix_max_r(), "module");
  FoulkesModuleBasis basis(opt.r);
  Json result;
  std::ostringstream text;
  result["r"] = opt.r;
  if (opt.info == "dims") {
    std::size_t dr = 0;
    for (const auto& p : basis.elements()) dr += in_depth_radical(p);
    std::size_t dq = basis.size() - dr;
    result["dimension"] = basis.size();
    result["depth_radical"] = dr;
    result["depth_quotient"] = dq;
    text << "dimension " << basis.size() << "\ndepth_radical " << dr << "\ndepth_quotient " << dq << '\n';
  } else if (opt.info == "matrices") {
    Json legend = Json::array();
    text << "basis\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      legend.push_back(basis[i].to_string());
      text << i << ' ' << basis[i].to_string() << '\n';
    }
    result["basis"] = legend;
    Json mats = Json::array();
    for (const auto& g : generators_for(opt.r)) {
      auto m = action_matrix(basis, generator(g, opt.r));
      Json entries = Json::array();
      for (const auto& [rc, v] : m.entries())
        entries.push_back({{"row", rc.first}, {"col", rc.second}, {"value", scalar_json(v)}});
      mats.push_back({{"generator", g.name()}, {"entries", entries}});
      text << "generator " << g.name() << '\n' << dump_matrix(m);
    }
    result["matrices"] = mats;
  } else if (opt.info == "dq") {
    Json orbits = Json::array();
    for (const auto& o : dq_orbit_decomposition(opt.r)) {
      orbits.push_back({{"shape", o.shape.to_string()},
                        {"representative", o.representative.to_string()},
                        {"orbit_size", o.orbit_size}});
      text << "Lambda(" << o.shape.to_string() << ") " << o.representative.to_string() << " orbit_size "
           << o.orbit_size << '\n';
    }
    result["orbits"] = orbits;
  } else if (opt.info == "filtration") {
    Json layers = Json::array();
    for (int k = 0; k < opt.r; ++k) {
      auto size = basis.layer(k).size();
      layers.push_back({{"depth", k}, {"size", size}});
      text << "depth " << k << ' ' << size << '\n';
    }
    result["layers"] = layers;
  } else {
    throw ParseError("unknown --info '" + opt.info + "'");
  }
  emit(opt, "module", {{"r", opt.r}, {"info", opt.info}}, result, text.str());
  return kOk;
}

int cmd_verify(const Options& opt) {
  auto results = run_verification(parse_suite(opt.suite), opt.inject_failure);
  bool all = true;
  Json checks = Json::array();
  std::ostringstream text;
  for (const auto& c : results) {
    all = all && c.passed;
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    text << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  text << (all ? "all checks passed\n" : "verification failed\n");
  emit(opt, "verify", {{"suite", opt.suite}}, {{"suite", opt.suite}, {"passed", all}, {"checks", checks}}, text.str());
  return all ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable plethysm coefficients and the diagrammatic Foulkes module"};
  app.require_subcommand(1);
  Options opt;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* stable = app.add_subcommand("stable", "Stable coefficient for lambda");
  stable->add_option("--lambda", opt.lambda, "Partition, e.g. 6,2 (- for empty)")->required();
  add_format(stable);

  auto* coeff = app.add_subcommand("coeff", "Coefficient of lambda padded to mn in h_n[h_m]");
  coeff->add_option("--m", opt.m, "Inner degree")->required();
  coeff->add_option("--n", opt.n, "Outer degree")->required();
  coeff->add_option("--lambda", opt.lambda, "Partition")->required();
  add_format(coeff);

  auto* table = app.add_subcommand("table", "Stable coefficients for every partition of r");
  table->add_option("--r", opt.r, "Size")->required()->check(CLI::NonNegativeNumber);
  add_format(table);

  auto* module = app.add_subcommand("module", "Module introspection");
  module->add_option("--r", opt.r, "Size")->required();
  module->add_option("--info", opt.info, "What to print")
      ->check(CLI::IsMember({"dims", "matrices", "dq", "filtration"}));
  add_format(module);

  auto* verify = app.add_subcommand("verify", "Run invariant checks");
  verify->add_option("--suite", opt.suite, "Suite")->check(CLI::IsMember({"fast", "full"}));
  verify->add_flag("--inject-failure", opt.inject_failure, "Append a failing check (testing)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*stable) return cmd_stable(opt);
    if (*coeff) return cmd_coeff(opt);
    if (*table) return cmd_table(opt);
    if (*module) return cmd_module(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const UnsupportedRegime& e) {
    std::cerr << "error: unsupported regime: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ResourceError& e) {
    std::cerr << "error: resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const InternalFault& e) {
    std::cerr << "error: internal fault: " << e.what() << '\n';
    return kVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
