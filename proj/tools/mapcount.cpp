#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mapcount/workbench.hpp"

using namespace mapcount;

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::pair<BigRational, BigRational> parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--interval expects a,b");
  auto num = [](const std::string& s) {
    return s.find('.') != std::string::npos ? BigRational::from_decimal(s) : BigRational::parse(s);
  };
  auto lo = num(text.substr(0, comma)), hi = num(text.substr(comma + 1));
  if (!(lo < hi)) throw UsageError("--interval needs a < b");
  return {lo, hi};
}

BigRational parse_number(const std::string& s) {
  return s.find('.') != std::string::npos ? BigRational::from_decimal(s) : BigRational::parse(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mapcount: exact enumeration of bicoloured, 2- and 3-connected planar maps"};
  app.require_subcommand(1);
  bool pretty = false, no_timing = false;
  app.add_flag("--pretty", pretty, "Indented JSON");
  app.add_flag("--json", "JSON output (the default)");
  app.add_flag("--no-timing", no_timing, "Omit wall-clock fields");

  int edges = 3;
  std::string weighting = "all";
  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration of small maps");
  oracle->add_option("--edges", edges, "Maximum number of edges (at most 7)");
  oracle->add_option("--weighting", weighting, "all, bipartite_only, two_conn, three_conn, with +mono_root, +bi_root, +del, +con");

  std::size_t order = 10;
  std::string method = "exact";
  auto* ising = app.add_subcommand("ising", "Bicoloured maps from the catalytic equation");
  ising->add_option("--order", order, "Number of coefficients");
  ising->add_option("--method", method, "exact or multimodular")->check(CLI::IsMember({"exact", "multimodular"}));

  bool coloured = false;
  std::string nu_at, norm_name = "root_network", out_file;
  auto* tower = app.add_subcommand("tower", "2- and 3-connected series");
  tower->add_option("--order", order, "Number of coefficients");
  tower->add_flag("--coloured", coloured, "Bicoloured tower (otherwise uncoloured)");
  tower->add_option("--nu-at", nu_at, "Specialise nu");
  tower->add_option("--normalization", norm_name, "bare, first_argument or root_network");
  tower->add_option("--out", out_file, "Write the 3-connected series (T, or T2) as a series file");

  std::string series_file;
  std::size_t degT = 4, degZ = 8, verify = 10;
  auto* guess = app.add_subcommand("guess", "Minimal polynomial of a series");
  guess->add_option("--series", series_file, "Series file")->required();
  guess->add_option("--degT", degT, "Maximum degree in T");
  guess->add_option("--degZ", degZ, "Maximum degree in z");
  guess->add_option("--verify", verify, "Extra coefficients checked after solving");

  std::string curve_file, interval = "0,1", refine = "1/1000000000", t0;
  auto* asympt = app.add_subcommand("asympt", "Singularity analysis of an algebraic branch");
  asympt->add_option("--curve", curve_file, "Curve file")->required();
  asympt->add_option("--interval", interval, "Search interval a,b for the singularity");
  asympt->add_option("--refine", refine, "Width of the growth interval");
  asympt->add_option("--t0", t0, "Value of the branch at z = 0");
  auto* asympt_order = asympt->add_option("--order", order, "Coefficients used for branch selection");

  auto* bicubic = app.add_subcommand("bicubic", "Bicubic maps and the singular point of bicubic networks");
  bicubic->add_option("--order", order, "Number of coefficients");
  bicubic->add_option("--refine", refine, "Width of the sigma interval");

  std::string claim;
  std::optional<std::size_t> claim_order;
  auto* reproduce = app.add_subcommand("reproduce", "Run the recipe behind a registered claim");
  reproduce->add_option("claim", claim, "Claim id (see `mapcount claims`)")->required();
  reproduce->add_option("--order", claim_order, "Override the recipe's order");

  auto* claims = app.add_subcommand("claims", "List the registered claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (claims->parsed()) {
      for (const auto& id : claim_ids()) {
        std::cout << id << "  " << claims_manifest().at("claims").at(id).at("description").get<std::string>() << "\n";
      }
      return 0;
    }
    RunReport report;
    if (oracle->parsed()) {
      report = cmd_oracle(edges, weighting);
    } else if (ising->parsed()) {
      report = cmd_ising(order, method);
    } else if (tower->parsed()) {
      std::optional<BigRational> nu;
      if (!nu_at.empty()) nu = parse_number(nu_at);
      report = cmd_tower(order, coloured, nu, parse_normalization(norm_name));
      if (!out_file.empty()) {
        const char* key = coloured ? "T2" : "T";
        std::ofstream out(out_file);
        out << report.outputs.at(key).at("value").dump(2) << "\n";
      }
    } else if (guess->parsed()) {
      report = cmd_guess(series_q_from_json(read_json(series_file)), degT, degZ, verify);
    } else if (asympt->parsed()) {
      const auto [lo, hi] = parse_interval(interval);
      std::optional<BigRational> start;
      if (!t0.empty()) start = parse_number(t0);
      report = cmd_asympt(curve_from_json(read_json(curve_file)), lo, hi, parse_number(refine), start,
                          asympt_order->count() ? order : 60);
    } else if (bicubic->parsed()) {
      report = cmd_bicubic(bicubic->get_option("--order")->count() ? order : 30, parse_number(refine));
    } else if (reproduce->parsed()) {
      report = cmd_reproduce(claim, claim_order);
    }
    const Json j = report.to_json(!no_timing);
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    return report.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownClaim& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
