#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "imcert/builder.hpp"
#include "imcert/chromatic.hpp"
#include "imcert/generators.hpp"
#include "imcert/graph_io.hpp"
#include "imcert/matching.hpp"
#include "imcert/suite.hpp"
#include "imcert/verify.hpp"
#include "json.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    imcert::require(f.good(), "cannot open input file: " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

nlohmann::json parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  imcert::require(!j.is_discarded(), "malformed json input");
  return j;
}

void print_graph(const imcert::SimpleGraph& g, const std::string& format) {
  if (format == "graph6")
    std::cout << imcert::to_graph6(g) << "\n";
  else
    std::cout << imcert::graph_to_json(g).dump(2) << "\n";
}

nlohmann::json trace_to_json(const imcert::BuildTrace& t) {
  return {{"builds", t.builds},
          {"complete_shortcut", t.complete_shortcut},
          {"base_edge", t.base_edge},
          {"transpose", t.transpose},
          {"reductions", t.reductions},
          {"rich_direct_x", t.rich_direct_x},
          {"rich_direct_y", t.rich_direct_y},
          {"rich_routed", t.rich_routed},
          {"empty_common_fallback", t.empty_common_fallback},
          {"case1", t.case1},
          {"case21", t.case21},
          {"case22", t.case22},
          {"degenerate_direct", t.degenerate_direct},
          {"detours", t.detours},
          {"claims_evaluated", t.claims_evaluated},
          {"claims_failed", t.claims_failed}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "explicit immersion certificates for graphs with independence number "
      "at most 2"};
  app.require_subcommand(1);
  int rc = 0;

  std::string in_alpha = "-";
  auto* alpha = app.add_subcommand(
      "alpha2", "check whether every three vertices span an edge");
  alpha->add_option("input", in_alpha, "graph (json or graph6), - for stdin");
  alpha->callback([&] {
    imcert::SimpleGraph g = imcert::parse_graph_auto(read_input(in_alpha));
    bool ok = imcert::alpha_at_most_2(g);
    std::cout << nlohmann::json{{"alpha_at_most_2", ok}}.dump(2) << "\n";
    if (!ok) rc = 1;
  });

  std::string in_reduce = "-", fmt_reduce = "json";
  auto* reduce = app.add_subcommand(
      "reduce", "drop edges whose closed neighborhoods cover the graph");
  reduce->add_option("input", in_reduce, "graph (json or graph6), - for stdin");
  reduce->add_option("--format", fmt_reduce, "json or graph6")
      ->check(CLI::IsMember({"json", "graph6"}));
  reduce->callback([&] {
    imcert::SimpleGraph g = imcert::parse_graph_auto(read_input(in_reduce));
    print_graph(imcert::edge_critical_reduce(g), fmt_reduce);
  });

  std::string in_immerse = "-";
  int ell = 0;
  bool trace_flag = false;
  auto* immerse = app.add_subcommand(
      "immerse", "build a complete bipartite immersion certificate");
  immerse->add_option("input", in_immerse, "graph (json or graph6), - for stdin");
  immerse->add_option("--ell", ell, "left part size, between 1 and ceil(n/2)-1")
      ->required();
  immerse->add_flag("--trace", trace_flag, "print builder counters to stderr");
  immerse->callback([&] {
    imcert::SimpleGraph g = imcert::parse_graph_auto(read_input(in_immerse));
    imcert::BuildTrace tr;
    imcert::ImmersionCertificate c = imcert::build_biclique_immersion(g, ell, &tr);
    std::cout << imcert::certificate_to_json(c).dump(2) << "\n";
    if (trace_flag) std::cerr << trace_to_json(tr).dump(2) << "\n";
  });

  std::string in_verify = "-";
  auto* verify = app.add_subcommand(
      "verify", "check a certificate from scratch and report all violations");
  verify->add_option("input", in_verify, "certificate json, - for stdin");
  verify->callback([&] {
    imcert::ImmersionCertificate c =
        imcert::certificate_from_json(parse_json(read_input(in_verify)));
    imcert::VerificationReport rep = imcert::verify_certificate(c);
    std::cout << imcert::report_to_json(rep).dump(2) << "\n";
    if (!rep.valid) rc = 1;
  });

  std::string in_kempe = "-";
  auto* kempe = app.add_subcommand(
      "kempe", "build the complete tripartite certificate with parts 1,1,chi-2");
  kempe->add_option("input", in_kempe, "graph (json or graph6), - for stdin");
  kempe->callback([&] {
    imcert::SimpleGraph g = imcert::parse_graph_auto(read_input(in_kempe));
    imcert::ImmersionCertificate c = imcert::kempe_immersion(g);
    std::cout << imcert::certificate_to_json(c).dump(2) << "\n";
  });

  std::string in_match = "-";
  auto* match = app.add_subcommand(
      "matchings", "edge-disjoint perfect matchings between listed pairs");
  match->add_option("input", in_match, "abpairs json, - for stdin");
  match->callback([&] {
    imcert::ABPairs in = imcert::abpairs_from_json(parse_json(read_input(in_match)));
    std::cout << imcert::matchings_to_json(imcert::hall_disjoint_AB_matchings(in))
                     .dump(2)
              << "\n";
  });

  std::string in_sdr = "-";
  auto* sdr = app.add_subcommand(
      "sdr", "edge-disjoint representative matchings for a set family");
  sdr->add_option("input", in_sdr, "sdr json, - for stdin");
  sdr->callback([&] {
    imcert::SdrInput in = imcert::sdr_input_from_json(parse_json(read_input(in_sdr)));
    auto ms = imcert::disjoint_representative_matchings(in.ground_n, in.sets);
    std::cout << imcert::matchings_to_json(ms).dump(2) << "\n";
  });

  imcert::GeneratorSpec spec;
  std::string fmt_gen = "json";
  auto* gen = app.add_subcommand("gen", "sample a random host graph");
  gen->add_option("--model", spec.model, "generator model")
      ->required()
      ->check(CLI::IsMember(imcert::generator_models()));
  gen->add_option("--n", spec.n, "number of vertices")->required();
  gen->add_option("--p", spec.p, "density parameter in [0,1]");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--format", fmt_gen, "json or graph6")
      ->check(CLI::IsMember({"json", "graph6"}));
  gen->callback([&] { print_graph(imcert::generate_graph(spec), fmt_gen); });

  imcert::SuiteOptions opt;
  auto* suite = app.add_subcommand(
      "suite", "sweep all generators, build and verify every certificate");
  suite->add_option("--n-min", opt.n_min, "smallest host size");
  suite->add_option("--n-max", opt.n_max, "largest host size");
  suite->add_option("--seeds", opt.seeds, "hosts per model and size");
  suite->add_option("--kempe-cap", opt.kempe_cap,
                    "largest host for the tripartite build");
  suite->add_option("--model", opt.models, "restrict to these models")
      ->check(CLI::IsMember(imcert::generator_models()));
  suite->callback([&] {
    imcert::SuiteResult res = imcert::run_suite(opt);
    bool ok = res.invalid == 0 && res.kempe_invalid == 0 &&
              res.trace.claims_failed == 0;
    nlohmann::json j{{"hosts", res.hosts},
                     {"builds", res.builds},
                     {"invalid", res.invalid},
                     {"kempe_builds", res.kempe_builds},
                     {"kempe_invalid", res.kempe_invalid},
                     {"ok", ok},
                     {"trace", trace_to_json(res.trace)}};
    std::cout << j.dump(2) << "\n";
    if (!ok) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const imcert::PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const imcert::SizeLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const imcert::InternalAssertion& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
