// hyperrank CLI: volumes, toric Gröbner bases, the rank-jump family, its
// solutions, and gap certificates.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperrank/hyperrank.hpp"

namespace {

hyperrank::IntMatrix read_matrix(const std::string& path) {
  if (path == "-") return hyperrank::int_matrix_from_text(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return hyperrank::int_matrix_from_text(in);
}

int default_series_order() {
  if (const char* env = std::getenv("HYPERRANK_SERIES_ORDER")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::runtime_error("HYPERRANK_SERIES_ORDER: not an integer");
    }
  }
  return 12;
}

void print_certificate(const hyperrank::GapCertificate& c) {
  std::cout << "d=" << c.d << "  volume=" << c.volume
            << "  solutions=" << c.solutions_count
            << "  independence_rank=" << c.independence_rank
            << "  gap_lower_bound=" << c.gap_lower_bound
            << "  series_order=" << c.series_order
            << "  (reported upper bound " << c.upper_bound_reported << ")\n";
  for (const auto& s : c.solutions)
    std::cout << "  " << s.name << ": "
              << (s.kind == hyperrank::SolutionKind::laurent ? "laurent" : "series")
              << ", " << (s.status == hyperrank::ResidualStatus::exact ? "exact" : "boundary")
              << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact A-hypergeometric rank-jump toolkit"};
  app.require_subcommand(1);

  std::string matrix_path = "-";
  auto* vol = app.add_subcommand("volume", "Normalized volume of conv(columns ∪ {0})");
  vol->add_option("matrix", matrix_path, "matrix file in text format ('-' = stdin)");

  std::string gb_path = "-";
  auto* gb = app.add_subcommand("toric-gb", "Binomial generating set of the toric ideal");
  gb->add_option("matrix", gb_path, "matrix file in text format ('-' = stdin)");

  int fam_d = 3;
  auto* fam = app.add_subcommand("family", "Print A_d and beta_d");
  fam->add_option("--d", fam_d, "family index (>= 2)")->required();

  int sol_d = 3;
  int sol_order = -1;
  auto* sol = app.add_subcommand("solutions", "Print the solution inventory of H_{A_d}(beta_d)");
  sol->add_option("--d", sol_d, "family index (>= 2)")->required();
  sol->add_option("--series-order", sol_order, "series truncation bound (default 12)");

  auto* demo = app.add_subcommand("demo", "Worked examples");
  int demo_order = 5;
  auto* quad = demo->add_subcommand("quadratic", "Series branch of the quadratic root");
  quad->add_option("--order", demo_order, "truncation bound");
  demo->require_subcommand(1);

  int cert_d = 0;
  int cert_order = -1;
  std::string json_path;
  auto* cert = app.add_subcommand("certify", "Certify the rank-vs-volume gap");
  cert->add_option("--d", cert_d, "single family index (default: sweep 2..8)");
  cert->add_option("--series-order", cert_order, "series truncation bound (default 12)");
  cert->add_option("--json", json_path, "write the certificate JSON to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*vol) {
      std::cout << hyperrank::normalized_volume(read_matrix(matrix_path)).get_str() << '\n';
      return 0;
    }
    if (*gb) {
      for (const auto& b : hyperrank::toric_generating_set(read_matrix(gb_path)))
        std::cout << hyperrank::binomial_str(b) << '\n';
      return 0;
    }
    if (*fam) {
      hyperrank::Family f = hyperrank::build_family(fam_d);
      std::cout << hyperrank::to_text(f.a);
      std::cout << "1 " << f.beta.size() << '\n';
      for (std::size_t i = 0; i < f.beta.size(); ++i)
        std::cout << (i ? " " : "") << f.beta[i].str();
      std::cout << '\n';
      return 0;
    }
    if (*sol) {
      int order = sol_order >= 0 ? sol_order : default_series_order();
      for (const auto& s : hyperrank::solution_inventory(sol_d, order))
        std::cout << s.name << " = " << s.poly.str() << '\n';
      return 0;
    }
    if (*quad) {
      std::cout << hyperrank::quadratic_demo(demo_order).str() << '\n';
      return 0;
    }
    if (*cert) {
      int order = cert_order >= 0 ? cert_order : default_series_order();
      std::vector<int> ds;
      if (cert_d > 0)
        ds.push_back(cert_d);
      else
        for (int d = 2; d <= 8; ++d) ds.push_back(d);
      nlohmann::json out = nlohmann::json::array();
      for (int d : ds) {
        hyperrank::GapCertificate c = hyperrank::certify_gap(d, order);
        print_certificate(c);
        out.push_back(hyperrank::certificate_to_json(c));
      }
      if (!json_path.empty()) {
        std::ofstream js(json_path);
        if (!js) throw std::runtime_error("cannot write '" + json_path + "'");
        js << (ds.size() == 1 ? out[0] : out).dump(2) << '\n';
      }
      return 0;
    }
  } catch (const hyperrank::VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 2;
  } catch (const hyperrank::RankShortfall& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 2;
  } catch (const hyperrank::VolumeMismatch& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
